//! The monoid action of simple reflections on orbit clans.
//!
//! `s_i · γ` is either `γ` itself or the clan of the orbit one dimension
//! higher, reached through the minimal parabolic of `α_i`. A word acts from
//! the right: `[3,2,1]` on `γ` means `s_3 · (s_2 · (s_1 · γ))`.

use serde::Serialize;

use crate::clan::{Cell, Clan};
use crate::error::{ActionError, WeylError};
use crate::weyl::{CartanType, WeylGroup, Word};

/// The case of the action rules that fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// Sign at `i`, number at `i+1` whose mate lies to the right.
    SignNumber,
    /// Number at `i` whose mate lies to the left, sign at `i+1`.
    NumberSign,
    /// Distinct numbers at `i, i+1` with mates in the same order, not mirrored.
    Numbers,
    /// Distinct numbers at `i, i+1` mated to the mirrored positions. This is
    /// the only rule producing a double edge.
    MirroredNumbers,
    /// Opposite signs at `i, i+1`.
    OppositeSigns,
    /// `s_n` in type C: distinct numbers at `n, n+1` with mates in order.
    CentralNumbers,
    /// `s_n` in type C: opposite signs at `n, n+1`.
    CentralSigns,
    Fixed,
}

/// One application of a simple reflection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionStep {
    #[serde(serialize_with = "as_text")]
    pub input: Clan,
    pub letter: usize,
    #[serde(serialize_with = "as_text")]
    pub output: Clan,
    pub moved: bool,
    pub rule: Rule,
    pub is_double: bool,
}

fn as_text<S: serde::Serializer>(clan: &Clan, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(clan)
}

/// Checks that `clan` indexes an orbit for `group`.
pub fn check_clan(group: WeylGroup, clan: &Clan) -> Result<(), ActionError> {
    let n = group.rank();
    if clan.len() != 2 * n {
        return Err(ActionError::WrongLength {
            clan: clan.to_string(),
            len: clan.len(),
            expected: 2 * n,
        });
    }
    match group.cartan_type() {
        CartanType::C if !clan.is_skew_symmetric() => {
            Err(ActionError::NotSkewSymmetric(clan.to_string()))
        }
        CartanType::D if !clan.is_type_d() => Err(ActionError::NotTypeD(clan.to_string())),
        _ => Ok(()),
    }
}

fn check_letter(group: WeylGroup, i: usize) -> Result<(), WeylError> {
    if i == 0 || i > group.rank() {
        return Err(WeylError::BadLetter {
            index: i,
            rank: group.rank(),
        });
    }
    Ok(())
}

/// `s_i · γ` for a skew-symmetric clan (type C).
pub fn act_simple_c(i: usize, clan: &Clan) -> Result<ActionStep, ActionError> {
    act_simple(CartanType::C, i, clan)
}

/// `s_i · γ` for a type D clan.
pub fn act_simple_d(i: usize, clan: &Clan) -> Result<ActionStep, ActionError> {
    act_simple(CartanType::D, i, clan)
}

/// `s_i · γ`, validating the clan and the letter.
pub fn act_simple(ty: CartanType, i: usize, clan: &Clan) -> Result<ActionStep, ActionError> {
    let group = WeylGroup::new(ty, (clan.len() / 2).max(1))?;
    check_clan(group, clan)?;
    check_letter(group, i)?;
    let (output, rule) = step(ty, i, clan);
    Ok(ActionStep {
        input: clan.clone(),
        letter: i,
        moved: rule != Rule::Fixed,
        is_double: rule == Rule::MirroredNumbers,
        output,
        rule,
    })
}

/// `w · γ` for the word `w`, with the number of double edges crossed.
///
/// The word is not checked for reducedness; see [`act_word_strict`].
pub fn act_word(ty: CartanType, word: &Word, clan: &Clan) -> Result<(Clan, usize), ActionError> {
    let group = WeylGroup::new(ty, (clan.len() / 2).max(1))?;
    check_clan(group, clan)?;
    for &i in word.letters() {
        check_letter(group, i)?;
    }
    Ok(act_word_unchecked(ty, word.letters(), clan))
}

/// Like [`act_word`], but rejects words that are not reduced.
pub fn act_word_strict(
    ty: CartanType,
    word: &Word,
    clan: &Clan,
) -> Result<(Clan, usize), ActionError> {
    let group = WeylGroup::new(ty, (clan.len() / 2).max(1))?;
    if !group.is_reduced(word)? {
        return Err(WeylError::NotReduced(word.to_string()).into());
    }
    act_word(ty, word, clan)
}

/// Every step of `w · γ`, in the order the letters act (rightmost first).
pub fn trace_word(
    ty: CartanType,
    word: &Word,
    clan: &Clan,
) -> Result<Vec<ActionStep>, ActionError> {
    act_word(ty, word, clan)?;
    let mut current = clan.clone();
    let mut steps = Vec::with_capacity(word.len());
    for &i in word.letters().iter().rev() {
        let (output, rule) = step(ty, i, &current);
        steps.push(ActionStep {
            input: current,
            letter: i,
            moved: rule != Rule::Fixed,
            is_double: rule == Rule::MirroredNumbers,
            output: output.clone(),
            rule,
        });
        current = output;
    }
    Ok(steps)
}

pub(crate) fn act_word_unchecked(ty: CartanType, letters: &[usize], clan: &Clan) -> (Clan, usize) {
    let mut current = clan.clone();
    let mut doubles = 0;
    for &i in letters.iter().rev() {
        let (next, rule) = step(ty, i, &current);
        if rule == Rule::MirroredNumbers {
            doubles += 1;
        }
        current = next;
    }
    (current, doubles)
}

/// One step on a clan already known to be valid for the type.
pub(crate) fn step(ty: CartanType, i: usize, clan: &Clan) -> (Clan, Rule) {
    let n = clan.len() / 2;
    match ty {
        CartanType::C if i == n => central_step(clan),
        CartanType::C => inner_step(clan, i, true),
        CartanType::D if i == n => {
            let flip = |c: &Clan| swap(c, &[(n - 1, n)]);
            let (out, rule) = inner_step(&flip(clan), n - 1, false);
            if rule == Rule::Fixed {
                (clan.clone(), rule)
            } else {
                (flip(&out), rule)
            }
        }
        CartanType::D => inner_step(clan, i, false),
    }
}

/// Swaps the given pairs of positions simultaneously.
fn swap(clan: &Clan, pairs: &[(usize, usize)]) -> Clan {
    let mut sigma: Vec<usize> = (0..clan.len()).collect();
    for &(a, b) in pairs {
        sigma[a] = b;
        sigma[b] = a;
    }
    clan.permute_positions(&sigma)
}

/// Replaces the signs at each pair of positions by a matched pair.
fn join(clan: &Clan, pairs: &[(usize, usize)]) -> Clan {
    let mut cells = clan.cells().to_vec();
    for &(a, b) in pairs {
        cells[a] = Cell::Arc(b as u16);
        cells[b] = Cell::Arc(a as u16);
    }
    Clan::from_cells(cells)
}

/// `s_i` for `i < n`. Type C additionally has the double-edge rule; in type D
/// that configuration is fixed.
fn inner_step(clan: &Clan, i: usize, type_c: bool) -> (Clan, Rule) {
    let len = clan.len();
    let (x, y) = (i - 1, i);
    let (mx, my) = (len - 1 - x, len - 1 - y);
    let cells = clan.cells();
    let (cx, cy) = (cells[x], cells[y]);

    let sign_number = cx.is_sign() && matches!(cy, Cell::Arc(j) if j as usize > y);
    let number_sign = cy.is_sign() && matches!(cx, Cell::Arc(j) if (j as usize) < x);
    let (numbers, mirrored) = match (cx, cy) {
        (Cell::Arc(a), Cell::Arc(b)) if a as usize != y => {
            let mirrored = a as usize == my && b as usize == mx;
            (a < b && !mirrored, mirrored)
        }
        _ => (false, false),
    };
    let opposite = cx.is_sign() && cx.opposite() == Some(cy);
    debug_assert!(
        [sign_number, number_sign, numbers, mirrored, opposite]
            .iter()
            .filter(|&&f| f)
            .count()
            <= 1,
        "action rules overlap at s_{i} on {clan}"
    );

    let outer = [(x, y), (my, mx)];
    if sign_number {
        (swap(clan, &outer), Rule::SignNumber)
    } else if number_sign {
        (swap(clan, &outer), Rule::NumberSign)
    } else if numbers {
        (swap(clan, &outer), Rule::Numbers)
    } else if mirrored && type_c {
        (swap(clan, &[(x, y)]), Rule::MirroredNumbers)
    } else if opposite {
        (join(clan, &outer), Rule::OppositeSigns)
    } else {
        (clan.clone(), Rule::Fixed)
    }
}

/// `s_n` in type C, acting on the two central positions.
fn central_step(clan: &Clan) -> (Clan, Rule) {
    let n = clan.len() / 2;
    let (x, y) = (n - 1, n);
    let cells = clan.cells();
    match (cells[x], cells[y]) {
        (Cell::Arc(a), Cell::Arc(b)) if a as usize != y && a < b => {
            (swap(clan, &[(x, y)]), Rule::CentralNumbers)
        }
        (cx, cy) if cx.is_sign() && cx.opposite() == Some(cy) => {
            (join(clan, &[(x, y)]), Rule::CentralSigns)
        }
        _ => (clan.clone(), Rule::Fixed),
    }
}
