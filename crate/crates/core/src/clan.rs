//! Clans: strings of `+`, `-` and matched natural numbers, taken up to
//! relabeling of the matched pairs.
//!
//! A clan is stored as a sign mask plus a partial matching on positions, so
//! two clans are equal exactly when their canonical forms are.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::weyl::CartanType;

/// One symbol of a clan as written, before canonical relabeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RawSymbol {
    Plus,
    Minus,
    Number(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Cell {
    Plus,
    Minus,
    /// Position (0-based) of the other end of the arc.
    Arc(u16),
}

impl Cell {
    pub(crate) fn is_sign(self) -> bool {
        !matches!(self, Cell::Arc(_))
    }

    pub(crate) fn opposite(self) -> Option<Cell> {
        match self {
            Cell::Plus => Some(Cell::Minus),
            Cell::Minus => Some(Cell::Plus),
            Cell::Arc(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clan {
    cells: Vec<Cell>,
}

impl Clan {
    /// Canonicalizes a raw symbol string. Every number must occur exactly twice.
    pub fn normalize(raw: &[RawSymbol]) -> Result<Clan, ParseError> {
        let mut cells = vec![Cell::Plus; raw.len()];
        let mut open: Vec<(u32, usize, usize)> = Vec::new();
        for (i, sym) in raw.iter().enumerate() {
            match *sym {
                RawSymbol::Plus => cells[i] = Cell::Plus,
                RawSymbol::Minus => cells[i] = Cell::Minus,
                RawSymbol::Number(label) => match open.iter_mut().find(|(l, _, _)| *l == label) {
                    Some(entry) if entry.2 == 1 => {
                        cells[entry.1] = Cell::Arc(i as u16);
                        cells[i] = Cell::Arc(entry.1 as u16);
                        entry.2 = 2;
                    }
                    Some(entry) => {
                        return Err(ParseError::UnmatchedArc {
                            label,
                            count: entry.2 + 1,
                        })
                    }
                    None => open.push((label, i, 1)),
                },
            }
        }
        if let Some(&(label, _, count)) = open.iter().find(|e| e.2 != 2) {
            return Err(ParseError::UnmatchedArc { label, count });
        }
        Ok(Clan { cells })
    }

    /// Like [`Clan::normalize`], additionally requiring signature `(p, q)`.
    pub fn with_signature(raw: &[RawSymbol], p: usize, q: usize) -> Result<Clan, ParseError> {
        let clan = Clan::normalize(raw)?;
        let (cp, cq) = clan.signature();
        if (cp, cq) != (p, q) {
            return Err(ParseError::Signature {
                p: cp,
                q: cq,
                want_p: p,
                want_q: q,
            });
        }
        Ok(clan)
    }

    pub(crate) fn from_cells(cells: Vec<Cell>) -> Clan {
        debug_assert!(cells.iter().enumerate().all(|(i, c)| match *c {
            Cell::Arc(j) => j as usize != i && cells[j as usize] == Cell::Arc(i as u16),
            _ => true,
        }));
        Clan { cells }
    }

    pub(crate) fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `(p, q)` with `p - q = #plus - #minus` and `p + q = len`.
    pub fn signature(&self) -> (usize, usize) {
        let plus = self.cells.iter().filter(|c| **c == Cell::Plus).count();
        let minus = self.cells.iter().filter(|c| **c == Cell::Minus).count();
        let arcs = (self.len() - plus - minus) / 2;
        (plus + arcs, minus + arcs)
    }

    /// Mate of position `i` (0-based), if it carries a number.
    pub fn mate(&self, i: usize) -> Option<usize> {
        match self.cells[i] {
            Cell::Arc(j) => Some(j as usize),
            _ => None,
        }
    }

    pub fn is_plus(&self, i: usize) -> bool {
        self.cells[i] == Cell::Plus
    }

    pub fn is_minus(&self, i: usize) -> bool {
        self.cells[i] == Cell::Minus
    }

    /// Canonical symbols: arcs labeled `1, 2, ...` by first occurrence.
    pub fn symbols(&self) -> Vec<RawSymbol> {
        let mut labels = vec![0u32; self.len()];
        let mut next = 0;
        self.cells
            .iter()
            .enumerate()
            .map(|(i, c)| match *c {
                Cell::Plus => RawSymbol::Plus,
                Cell::Minus => RawSymbol::Minus,
                Cell::Arc(j) => {
                    let j = j as usize;
                    if j > i {
                        next += 1;
                        labels[i] = next;
                        RawSymbol::Number(next)
                    } else {
                        RawSymbol::Number(labels[j])
                    }
                }
            })
            .collect()
    }

    /// Symbols run together (`+-1221+-`); falls back to the comma form when
    /// some label has more than one digit.
    pub fn compact(&self) -> String {
        if self.cells.iter().filter(|c| !c.is_sign()).count() / 2 >= 10 {
            return self.to_string();
        }
        self.symbols().iter().map(symbol_text).collect()
    }

    /// True iff no subsequence of positions equals `pattern` as a clan.
    pub fn avoids_pattern(&self, pattern: &Clan) -> bool {
        fn search(hay: &[Cell], pat: &[Cell], chosen: &mut Vec<usize>, start: usize) -> bool {
            let k = chosen.len();
            if k == pat.len() {
                return true;
            }
            let remaining = pat.len() - k;
            for pos in start..=hay.len().saturating_sub(remaining) {
                let ok = match (pat[k], hay[pos]) {
                    (Cell::Plus, Cell::Plus) | (Cell::Minus, Cell::Minus) => true,
                    (Cell::Arc(pm), Cell::Arc(hm)) => {
                        let (pm, hm) = (pm as usize, hm as usize);
                        if pm < k {
                            hm == chosen[pm]
                        } else {
                            hm > pos
                        }
                    }
                    _ => false,
                };
                if ok {
                    chosen.push(pos);
                    if search(hay, pat, chosen, pos + 1) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        if pattern.len() > self.len() {
            return true;
        }
        !search(&self.cells, &pattern.cells, &mut Vec::new(), 0)
    }

    /// The clan `(1,2,1,2)`.
    pub fn pattern_1212() -> Clan {
        Clan::from_cells(vec![Cell::Arc(2), Cell::Arc(3), Cell::Arc(0), Cell::Arc(1)])
    }

    pub fn avoids_1212(&self) -> bool {
        self.avoids_pattern(&Clan::pattern_1212())
    }

    fn mirror(&self, i: usize) -> usize {
        self.len() - 1 - i
    }

    /// Reversing the string gives the sign-negated clan.
    pub fn is_skew_symmetric(&self) -> bool {
        let len = self.len();
        if !len.is_multiple_of(2) {
            return false;
        }
        (0..len / 2).all(|i| {
            let m = self.mirror(i);
            match (self.cells[i], self.cells[m]) {
                (Cell::Arc(a), Cell::Arc(b)) => a as usize == self.mirror(b as usize),
                (x, y) => x.opposite() == Some(y),
            }
        })
    }

    /// Skew-symmetric, no arc joining `i` to `2n+1-i`, and an even count of
    /// minus signs plus arcs contained in the first half.
    pub fn is_type_d(&self) -> bool {
        if !self.is_skew_symmetric() {
            return false;
        }
        let n = self.len() / 2;
        if (0..n).any(|i| self.mate(i) == Some(self.mirror(i))) {
            return false;
        }
        let minus = (0..n).filter(|&i| self.is_minus(i)).count();
        let inner_arcs = (0..n)
            .filter(|&i| matches!(self.mate(i), Some(j) if j > i && j < n))
            .count();
        (minus + inner_arcs) % 2 == 0
    }

    /// Whether this clan indexes an orbit on the type `ty` flag variety.
    pub fn is_orbit_clan(&self, ty: CartanType) -> bool {
        match ty {
            CartanType::C => self.is_skew_symmetric(),
            CartanType::D => self.is_type_d(),
        }
    }

    /// The clan of the dense orbit.
    ///
    /// Type C: `(1,2,...,n,n,...,2,1)`. Type D: `(1,...,n)` followed by the
    /// pairs `(n-1,n), (n-3,n-2), ..., (1,2)`; for odd `n` the last label is
    /// dropped and `+,-` sits in the middle.
    pub fn dense_orbit(ty: CartanType, n: usize) -> Clan {
        let mut raw = Vec::with_capacity(2 * n);
        match ty {
            CartanType::C => {
                raw.extend((1..=n as u32).map(RawSymbol::Number));
                raw.extend((1..=n as u32).rev().map(RawSymbol::Number));
            }
            CartanType::D => {
                let m = (n - n % 2) as u32;
                raw.extend((1..=m).map(RawSymbol::Number));
                if n % 2 == 1 {
                    raw.push(RawSymbol::Plus);
                    raw.push(RawSymbol::Minus);
                }
                for k in (1..=m / 2).rev() {
                    raw.push(RawSymbol::Number(2 * k - 1));
                    raw.push(RawSymbol::Number(2 * k));
                }
            }
        }
        Clan::normalize(&raw).expect("dense orbit clan is well formed")
    }

    /// Every clan indexing an orbit for the given type and rank, sorted.
    ///
    /// Generated directly: positions are filled left to right, and each
    /// choice at position `i` forces the mirrored choice at `2n+1-i`.
    pub fn enumerate(ty: CartanType, n: usize) -> Vec<Clan> {
        fn fill(cells: &mut Vec<Option<Cell>>, out: &mut Vec<Clan>) {
            let len = cells.len();
            let mirror = |i: usize| len - 1 - i;
            let Some(i) = cells.iter().position(Option::is_none) else {
                out.push(Clan::from_cells(cells.iter().map(|c| c.unwrap()).collect()));
                return;
            };
            let mi = mirror(i);
            for (a, b) in [(Cell::Plus, Cell::Minus), (Cell::Minus, Cell::Plus)] {
                cells[i] = Some(a);
                cells[mi] = Some(b);
                fill(cells, out);
            }
            cells[i] = None;
            cells[mi] = None;
            for j in i + 1..len {
                if cells[j].is_some() {
                    continue;
                }
                if j == mi {
                    cells[i] = Some(Cell::Arc(j as u16));
                    cells[j] = Some(Cell::Arc(i as u16));
                    fill(cells, out);
                    cells[i] = None;
                    cells[j] = None;
                } else {
                    let mj = mirror(j);
                    cells[i] = Some(Cell::Arc(j as u16));
                    cells[j] = Some(Cell::Arc(i as u16));
                    cells[mi] = Some(Cell::Arc(mj as u16));
                    cells[mj] = Some(Cell::Arc(mi as u16));
                    fill(cells, out);
                    for k in [i, j, mi, mj] {
                        cells[k] = None;
                    }
                }
            }
        }
        let mut out = Vec::new();
        fill(&mut vec![None; 2 * n], &mut out);
        if ty == CartanType::D {
            out.retain(Clan::is_type_d);
        }
        out.sort();
        out
    }

    /// Every `(p, q)`-clan, sorted.
    pub fn all_with_signature(p: usize, q: usize) -> Vec<Clan> {
        // `+` uses one unit of p, `-` one unit of q, an arc one of each.
        fn fill(cells: &mut Vec<Option<Cell>>, p: usize, q: usize, out: &mut Vec<Clan>) {
            let Some(i) = cells.iter().position(Option::is_none) else {
                out.push(Clan::from_cells(cells.iter().map(|c| c.unwrap()).collect()));
                return;
            };
            if p > 0 {
                cells[i] = Some(Cell::Plus);
                fill(cells, p - 1, q, out);
            }
            if q > 0 {
                cells[i] = Some(Cell::Minus);
                fill(cells, p, q - 1, out);
            }
            cells[i] = None;
            if p > 0 && q > 0 {
                for j in i + 1..cells.len() {
                    if cells[j].is_none() {
                        cells[i] = Some(Cell::Arc(j as u16));
                        cells[j] = Some(Cell::Arc(i as u16));
                        fill(cells, p - 1, q - 1, out);
                        cells[i] = None;
                        cells[j] = None;
                    }
                }
            }
        }
        let mut out = Vec::new();
        fill(&mut vec![None; p + q], p, q, &mut out);
        out.sort();
        out
    }

    /// Applies a permutation of positions: the symbol at `i` moves to `sigma[i]`.
    pub(crate) fn permute_positions(&self, sigma: &[usize]) -> Clan {
        let mut cells = vec![Cell::Plus; self.len()];
        for (i, &c) in self.cells.iter().enumerate() {
            cells[sigma[i]] = match c {
                Cell::Arc(j) => Cell::Arc(sigma[j as usize] as u16),
                sign => sign,
            };
        }
        Clan::from_cells(cells)
    }
}

fn symbol_text(s: &RawSymbol) -> String {
    match s {
        RawSymbol::Plus => "+".to_string(),
        RawSymbol::Minus => "-".to_string(),
        RawSymbol::Number(k) => k.to_string(),
    }
}

impl fmt::Display for Clan {
    /// Canonical comma form, e.g. `+,-,1,2,2,1,+,-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols().iter().map(symbol_text).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn parse_token(t: &str) -> Result<RawSymbol, ParseError> {
    match t {
        "+" => Ok(RawSymbol::Plus),
        "-" | "\u{2212}" => Ok(RawSymbol::Minus),
        _ => t
            .parse::<u32>()
            .map(RawSymbol::Number)
            .map_err(|_| ParseError::ClanSymbol(t.to_string())),
    }
}

/// Parses `+-1221+-` or `+, -, 1, 2, 2, 1, +, -` (parentheses optional).
pub fn parse_symbols(text: &str) -> Result<Vec<RawSymbol>, ParseError> {
    let inner = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    if inner.contains(',') {
        inner.split(',').map(|t| parse_token(t.trim())).collect()
    } else {
        inner
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| parse_token(c.encode_utf8(&mut [0; 4])))
            .collect()
    }
}

impl FromStr for Clan {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Clan::normalize(&parse_symbols(s)?)
    }
}
