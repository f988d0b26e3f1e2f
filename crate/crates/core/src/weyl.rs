//! Weyl groups of types C and D realized as signed permutations.
//!
//! Simple reflections follow the root ordering `α_i = x_i - x_{i+1}` for
//! `i < n`, with `α_n = 2x_n` in type C and `α_n = x_{n-1} + x_n` in type D.
//! Multiplication is composition, `(a * b)(i) = a(b(i))`, so multiplying by a
//! simple reflection on the right acts on positions and on the left acts on
//! values.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Serialize, Serializer};

use crate::error::{ParseError, WeylError};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    C,
    D,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::C => write!(f, "C"),
            CartanType::D => write!(f, "D"),
        }
    }
}

impl FromStr for CartanType {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            other => Err(ParseError::Group(other.to_string())),
        }
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which side a simple reflection multiplies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `s_i * w`: acts on values.
    Left,
    /// `w * s_i`: acts on positions.
    Right,
}

/// A Weyl group `C_n` or `D_n`. Cheap to copy; enumerations are cached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylGroup {
    ty: CartanType,
    rank: usize,
}

impl WeylGroup {
    pub fn new(ty: CartanType, rank: usize) -> Result<Self, WeylError> {
        let min = match ty {
            CartanType::C => 1,
            CartanType::D => 2,
        };
        if rank < min {
            return Err(WeylError::RankTooSmall { ty, rank, min });
        }
        Ok(WeylGroup { ty, rank })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `2^n n!` in type C, `2^(n-1) n!` in type D.
    pub fn order(&self) -> usize {
        let fact: usize = (1..=self.rank).product();
        match self.ty {
            CartanType::C => fact << self.rank,
            CartanType::D => fact << (self.rank - 1),
        }
    }

    /// Number of positive roots, which is also the length of the long element.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.ty {
            CartanType::C => n * n,
            CartanType::D => n * n - n,
        }
    }

    pub fn identity(&self) -> SignedPermutation {
        SignedPermutation {
            ty: self.ty,
            images: (1..=self.rank as i32).collect(),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<SignedPermutation, WeylError> {
        self.identity().apply_simple(i, Side::Right)
    }

    /// The maximal-length element. In type C, and in type D for even rank, it
    /// negates every entry; in type D for odd rank it fixes `n`.
    pub fn long_element(&self) -> SignedPermutation {
        let n = self.rank as i32;
        let images = (1..=n)
            .map(|i| {
                if self.ty == CartanType::D && n % 2 == 1 && i == n {
                    i
                } else {
                    -i
                }
            })
            .collect();
        SignedPermutation {
            ty: self.ty,
            images,
        }
    }

    pub fn element(&self, images: Vec<i32>) -> Result<SignedPermutation, ParseError> {
        SignedPermutation::new(self.ty, images)
    }

    /// Parses `-4,1,2,-3` into an element of this group.
    pub fn parse_element(&self, text: &str) -> Result<SignedPermutation, ParseError> {
        let images: Option<Vec<i32>> = text
            .trim()
            .trim_matches(|c| c == '[' || c == ']' || c == '(' || c == ')')
            .split(',')
            .map(|t| t.trim().parse::<i32>().ok())
            .collect();
        let bad = || ParseError::NotASignedPermutation {
            rank: self.rank,
            text: text.to_string(),
        };
        let images = images.ok_or_else(bad)?;
        if images.len() != self.rank {
            return Err(bad());
        }
        self.element(images)
    }

    /// Evaluates `s_{l_1} s_{l_2} ... s_{l_k}`.
    pub fn evaluate(&self, word: &Word) -> Result<SignedPermutation, WeylError> {
        let mut w = self.identity();
        for &i in word.letters() {
            w = w.apply_simple(i, Side::Right)?;
        }
        Ok(w)
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool, WeylError> {
        Ok(self.evaluate(word)?.length() == word.len())
    }

    /// Evaluates a word after checking that it is reduced.
    pub fn evaluate_reduced(&self, word: &Word) -> Result<SignedPermutation, WeylError> {
        let w = self.evaluate(word)?;
        if w.length() != word.len() {
            return Err(WeylError::NotReduced(word.to_string()));
        }
        Ok(w)
    }

    /// All group elements, grouped by length. Built once per group by a
    /// breadth-first closure under right multiplication by simple
    /// reflections, so level `k` is the set of elements at word distance `k`.
    pub fn elements(&self) -> Arc<Elements> {
        static CACHE: OnceLock<RwLock<HashMap<WeylGroup, Arc<Elements>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(found) = cache.read().unwrap().get(self) {
            return Arc::clone(found);
        }
        let built = Arc::new(Elements::generate(*self));
        let mut guard = cache.write().unwrap();
        Arc::clone(guard.entry(*self).or_insert(built))
    }

    /// All elements of the given length, sorted by one-line notation.
    pub fn elements_of_length(&self, length: usize) -> Vec<SignedPermutation> {
        self.elements().of_length(length).to_vec()
    }

    fn check_letter(&self, i: usize) -> Result<(), WeylError> {
        if i == 0 || i > self.rank {
            return Err(WeylError::BadLetter {
                index: i,
                rank: self.rank,
            });
        }
        Ok(())
    }
}

impl fmt::Display for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.ty, self.rank)
    }
}

impl FromStr for WeylGroup {
    type Err = ParseError;

    /// `C4`, `D3`, ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseError::Group(s.to_string());
        let (head, tail) = s.split_at_checked(1).ok_or_else(bad)?;
        let ty: CartanType = head.parse().map_err(|_| bad())?;
        let rank: usize = tail.parse().map_err(|_| bad())?;
        WeylGroup::new(ty, rank).map_err(|_| bad())
    }
}

/// The elements of a group, level by level.
#[derive(Debug)]
pub struct Elements {
    levels: Vec<Vec<SignedPermutation>>,
}

impl Elements {
    fn generate(group: WeylGroup) -> Self {
        let mut seen: HashSet<SignedPermutation> = HashSet::new();
        let id = group.identity();
        seen.insert(id.clone());
        let mut levels = vec![vec![id]];
        loop {
            let mut next = Vec::new();
            for w in levels.last().unwrap() {
                for i in 1..=group.rank {
                    let ws = w.right_simple(i);
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            levels.push(next);
        }
        Elements { levels }
    }

    pub fn of_length(&self, length: usize) -> &[SignedPermutation] {
        self.levels.get(length).map_or(&[], |v| v.as_slice())
    }

    pub fn max_length(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SignedPermutation> {
        self.levels.iter().flatten()
    }
}

/// An element of `C_n` or `D_n`, stored by the images of `1..n`.
///
/// Ordering is lexicographic on the one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    ty: CartanType,
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(ty: CartanType, images: Vec<i32>) -> Result<Self, ParseError> {
        let n = images.len();
        let text = || {
            images
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(ParseError::NotASignedPermutation {
                    rank: n,
                    text: text(),
                });
            }
            seen[a] = true;
        }
        let min = if ty == CartanType::D { 2 } else { 1 };
        if n < min {
            return Err(ParseError::NotASignedPermutation {
                rank: n,
                text: text(),
            });
        }
        if ty == CartanType::D && images.iter().filter(|&&x| x < 0).count() % 2 == 1 {
            return Err(ParseError::OddSignChanges(text()));
        }
        Ok(SignedPermutation { ty, images })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn group(&self) -> WeylGroup {
        WeylGroup {
            ty: self.ty,
            rank: self.rank(),
        }
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `σ(i)` for `i` in `±1..±n`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x == i as i32 + 1)
    }

    pub fn negatives(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// The image in `S_2n`: `π(i) = σ(i)` for positive values, `2n+1-|σ(i)|`
    /// otherwise, extended by `π(2n+1-i) = 2n+1-π(i)`.
    pub fn embed(&self) -> Permutation {
        let n = self.rank();
        let m = 2 * n as i32 + 1;
        let mut images = vec![0u32; 2 * n];
        for (i, &x) in self.images.iter().enumerate() {
            let p = if x > 0 { x } else { m + x };
            images[i] = p as u32;
            images[2 * n - 1 - i] = (m - p) as u32;
        }
        Permutation::from_images_unchecked(images)
    }

    /// Inverse of [`SignedPermutation::embed`]. Fails unless `p` commutes with
    /// `i -> 2n+1-i` (and, in type D, has an even number of sign changes).
    pub fn from_embedding(ty: CartanType, p: &Permutation) -> Result<Self, ParseError> {
        let bad = || ParseError::NotASignedPermutation {
            rank: p.size() / 2,
            text: p.to_string(),
        };
        let m = p.size();
        if !m.is_multiple_of(2) {
            return Err(bad());
        }
        let n = m / 2;
        let img = p.images();
        if (0..n).any(|i| img[m - 1 - i] as usize != m + 1 - img[i] as usize) {
            return Err(bad());
        }
        let images = img[..n]
            .iter()
            .map(|&x| {
                if (x as usize) <= n {
                    x as i32
                } else {
                    x as i32 - (m as i32 + 1)
                }
            })
            .collect();
        SignedPermutation::new(ty, images)
    }

    /// Coxeter length. Counted on the embedding: `(inv(w') + neg(w)) / 2` in
    /// type C and `(inv(w') - neg(w)) / 2` in type D.
    pub fn length(&self) -> usize {
        let inv = self.embed().inversions();
        let neg = self.negatives();
        match self.ty {
            CartanType::C => (inv + neg) / 2,
            CartanType::D => (inv - neg) / 2,
        }
    }

    pub fn multiply(&self, other: &SignedPermutation) -> Result<SignedPermutation, WeylError> {
        self.check_compatible(other)?;
        Ok(SignedPermutation {
            ty: self.ty,
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            let pos = x.unsigned_abs() as usize - 1;
            images[pos] = if x > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        SignedPermutation {
            ty: self.ty,
            images,
        }
    }

    /// Multiplies by `s_i` on the given side.
    pub fn apply_simple(&self, i: usize, side: Side) -> Result<SignedPermutation, WeylError> {
        self.group().check_letter(i)?;
        Ok(match side {
            Side::Left => self.left_simple(i),
            Side::Right => self.right_simple(i),
        })
    }

    /// `w * s_i` for a letter already known to be in range.
    pub(crate) fn right_simple(&self, i: usize) -> SignedPermutation {
        let n = self.rank();
        let mut images = self.images.clone();
        if i < n {
            images.swap(i - 1, i);
        } else {
            match self.ty {
                CartanType::C => images[n - 1] = -images[n - 1],
                CartanType::D => {
                    let (a, b) = (images[n - 2], images[n - 1]);
                    images[n - 2] = -b;
                    images[n - 1] = -a;
                }
            }
        }
        SignedPermutation {
            ty: self.ty,
            images,
        }
    }

    /// `s_i * w` for a letter already known to be in range.
    pub(crate) fn left_simple(&self, i: usize) -> SignedPermutation {
        let n = self.rank() as i32;
        let i = i as i32;
        let images = self
            .images
            .iter()
            .map(|&x| {
                let (a, sign) = (x.abs(), x.signum());
                if i < n {
                    if a == i {
                        sign * (i + 1)
                    } else if a == i + 1 {
                        sign * i
                    } else {
                        x
                    }
                } else {
                    match self.ty {
                        CartanType::C if a == n => -x,
                        CartanType::D if a == n => -sign * (n - 1),
                        CartanType::D if a == n - 1 => -sign * n,
                        _ => x,
                    }
                }
            })
            .collect();
        SignedPermutation {
            ty: self.ty,
            images,
        }
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.left_simple(i).length() < self.length()
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.right_simple(i).length() < self.length()
    }

    /// The lexicographically smallest reduced word, built by repeatedly
    /// peeling off the smallest left descent.
    pub fn reduced_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        let mut len = w.length();
        while len > 0 {
            let (i, next) = (1..=self.rank())
                .map(|i| (i, w.left_simple(i)))
                .find(|(_, v)| v.length() < len)
                .expect("non-identity element has a left descent");
            letters.push(i);
            w = next;
            len -= 1;
        }
        Word(letters)
    }

    /// Every reduced word, in lexicographic order.
    pub fn all_reduced_words(&self) -> Vec<Word> {
        fn go(w: &SignedPermutation, prefix: &mut Vec<usize>, out: &mut Vec<Word>) {
            let len = w.length();
            if len == 0 {
                out.push(Word(prefix.clone()));
                return;
            }
            for i in 1..=w.rank() {
                let v = w.left_simple(i);
                if v.length() < len {
                    prefix.push(i);
                    go(&v, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Bruhat order. Type C compares the embeddings in `S_2n`. Type D adds
    /// the parity condition on matching windows of sorted prefixes.
    pub fn bruhat_leq(&self, other: &SignedPermutation) -> Result<bool, WeylError> {
        self.check_compatible(other)?;
        let (a, b) = (self.embed(), other.embed());
        if !a.bruhat_leq(&b) {
            return Ok(false);
        }
        Ok(match self.ty {
            CartanType::C => true,
            CartanType::D => type_d_parity_condition(&a, &b, self.rank()),
        })
    }

    fn check_compatible(&self, other: &SignedPermutation) -> Result<(), WeylError> {
        if self.ty != other.ty {
            return Err(WeylError::TypeMismatch(self.ty, other.ty));
        }
        if self.rank() != other.rank() {
            return Err(WeylError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(())
    }
}

/// For every `d <= n`, sort the first `d` values of each embedding. Whenever
/// the same window of both sorted prefixes has folded values `min(x, 2n+1-x)`
/// equal to `{n+1-r, ..., n}`, the counts of entries above `n` in the two
/// windows must agree in parity.
fn type_d_parity_condition(a: &Permutation, b: &Permutation, n: usize) -> bool {
    let m = 2 * n as u32 + 1;
    let fold = |x: u32| x.min(m - x);
    let is_top_block = |xs: &[u32]| {
        let r = xs.len() as u32;
        let mut folded: Vec<u32> = xs.iter().map(|&x| fold(x)).collect();
        folded.sort_unstable();
        folded
            .iter()
            .enumerate()
            .all(|(k, &x)| x == n as u32 + 1 - r + k as u32)
    };
    let high = |xs: &[u32]| xs.iter().filter(|&&x| x > n as u32).count();
    for d in 1..=n {
        let mut c = a.images()[..d].to_vec();
        let mut e = b.images()[..d].to_vec();
        c.sort_unstable();
        e.sort_unstable();
        for i in 0..d {
            for r in 1..=d - i {
                let (cw, ew) = (&c[i..i + r], &e[i..i + r]);
                if is_top_block(cw) && is_top_block(ew) && high(cw) % 2 != high(ew) % 2 {
                    return false;
                }
            }
        }
    }
    true
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A word in the simple reflections, `[3,2,1]` meaning `s_3 s_2 s_1`.
///
/// When a word acts on clans the rightmost letter acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Word {
    type Err = ParseError;

    /// `3,2,1` or `[3,2,1]`; the empty string and `[]` give the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        if inner.is_empty() {
            return Ok(Word::default());
        }
        inner
            .split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(i) if i > 0 => Ok(i),
                _ => Err(ParseError::Word(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> WeylGroup {
        WeylGroup::new(CartanType::C, n).unwrap()
    }

    fn d(n: usize) -> WeylGroup {
        WeylGroup::new(CartanType::D, n).unwrap()
    }

    #[test]
    fn lengths_from_examples() {
        assert_eq!(c(4).identity().length(), 0);
        assert_eq!(c(4).parse_element("-4,1,2,3").unwrap().length(), 4);
        assert_eq!(c(4).parse_element("1,-4,2,3").unwrap().length(), 3);
        assert_eq!(d(4).parse_element("-4,1,2,-3").unwrap().length(), 3);
        assert_eq!(d(4).parse_element("1,2,-4,-3").unwrap().length(), 1);
    }

    #[test]
    fn embeddings_from_examples() {
        let u = c(4).parse_element("-4,1,2,3").unwrap();
        assert_eq!(u.embed().compact(), "51236784");
        assert_eq!(c(4).identity().embed(), Permutation::identity(8));
        let u = d(3).parse_element("1,3,2").unwrap();
        assert_eq!(u.embed().compact(), "132546");
        assert_eq!(d(3).long_element().embed().compact(), "653421");
        let v = d(3).parse_element("-3,1,-2").unwrap();
        assert_eq!(v.embed().compact(), "415263");
        assert_eq!(
            SignedPermutation::from_embedding(CartanType::D, &v.embed()).unwrap(),
            v
        );
    }

    #[test]
    fn simple_reflections() {
        assert_eq!(c(2).simple_reflection(2).unwrap().images(), &[1, -2]);
        assert_eq!(d(3).simple_reflection(3).unwrap().images(), &[1, -3, -2]);
        let w = c(3).parse_element("2,-3,1").unwrap();
        assert_eq!(w.multiply(&c(3).identity()).unwrap(), w);
        for i in 1..=3 {
            let s = c(3).simple_reflection(i).unwrap();
            assert_eq!(
                w.apply_simple(i, Side::Left).unwrap(),
                s.multiply(&w).unwrap()
            );
            assert_eq!(
                w.apply_simple(i, Side::Right).unwrap(),
                w.multiply(&s).unwrap()
            );
        }
        assert!(w.apply_simple(4, Side::Left).is_err());
    }

    #[test]
    fn long_elements() {
        assert_eq!(c(4).long_element().images(), &[-1, -2, -3, -4]);
        assert_eq!(d(4).long_element().images(), &[-1, -2, -3, -4]);
        for g in [c(2), c(3), d(2), d(3), d(4)] {
            let els = g.elements();
            let top = els.of_length(els.max_length());
            assert_eq!(top, &[g.long_element()]);
            assert_eq!(els.max_length(), g.num_positive_roots());
            assert_eq!(els.len(), g.order());
        }
    }

    #[test]
    fn element_counts_by_length() {
        assert_eq!(c(4).elements_of_length(7).len(), 44);
        assert_eq!(d(4).elements_of_length(4).len(), 23);
        assert_eq!(d(3).elements_of_length(3).len(), 6);
    }

    #[test]
    fn length_formula_matches_word_distance() {
        for g in [c(2), c(3), c(4), d(2), d(3), d(4)] {
            let els = g.elements();
            for l in 0..=els.max_length() {
                for w in els.of_length(l) {
                    assert_eq!(w.length(), l, "{w} in {g}");
                }
            }
        }
    }

    #[test]
    fn length_changes_by_one() {
        for g in [c(3), d(3), d(4)] {
            for w in g.elements().iter() {
                for i in 1..=g.rank() {
                    let l = w.length() as i64;
                    let r = w.right_simple(i).length() as i64;
                    let lft = w.left_simple(i).length() as i64;
                    assert_eq!((l - r).abs(), 1);
                    assert_eq!((l - lft).abs(), 1);
                }
            }
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        for g in [c(2), c(3), d(3)] {
            let els: Vec<_> = g.elements().iter().cloned().collect();
            let mut images = HashSet::new();
            for a in &els {
                assert!(images.insert(a.embed()));
                for b in &els {
                    let ab = a.multiply(b).unwrap();
                    assert_eq!(ab.embed(), a.embed().compose(&b.embed()));
                }
            }
        }
    }

    #[test]
    fn reduced_words_round_trip() {
        let g = c(3);
        assert!(g.identity().reduced_word().is_empty());
        for l in 0..=5 {
            for w in g.elements_of_length(l) {
                let word = w.reduced_word();
                assert_eq!(word.len(), l);
                assert_eq!(g.evaluate(&word).unwrap(), w);
                let all = w.all_reduced_words();
                assert_eq!(all[0], word, "greedy word is lexicographically first");
                for other in &all {
                    assert_eq!(g.evaluate(other).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn table_word_evaluates() {
        let g = d(4);
        let w = g.evaluate(&"2,4,2,1".parse().unwrap()).unwrap();
        assert_eq!(w.length(), 4);
        assert_eq!(g.evaluate(&w.reduced_word()).unwrap(), w);
    }

    #[test]
    fn bruhat_example_pair() {
        let g = c(4);
        let u = g.parse_element("-4,1,2,3").unwrap();
        let v = g.parse_element("1,-4,2,3").unwrap();
        let w0u = g.long_element().multiply(&u).unwrap();
        assert!(v.bruhat_leq(&w0u).unwrap());
        assert!(w0u.bruhat_leq(&w0u).unwrap());
    }

    #[test]
    fn bruhat_type_mismatch() {
        assert!(c(3).identity().bruhat_leq(&d(3).identity()).is_err());
        assert!(c(3).identity().multiply(&c(2).identity()).is_err());
    }

    #[test]
    fn parse_rejections() {
        assert!(c(3).parse_element("1,2").is_err());
        assert!(c(3).parse_element("1,1,2").is_err());
        assert!(d(3).parse_element("-1,2,3").is_err());
        assert!("E6".parse::<WeylGroup>().is_err());
        assert!("D1".parse::<WeylGroup>().is_err());
        assert_eq!("C4".parse::<WeylGroup>().unwrap(), c(4));
        assert!("1,0".parse::<Word>().is_err());
        assert_eq!("[]".parse::<Word>().unwrap(), Word::default());
    }
}
