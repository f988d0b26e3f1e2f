//! The dictionary between clans avoiding `(1,2,1,2)` and Richardson data.
//!
//! A `(p,q)`-clan `γ` avoiding `(1,2,1,2)` has orbit closure equal to the
//! Richardson variety indexed by the pair of permutations `(u(γ), v(γ))`.
//! Conversely the FS-pattern recipe rebuilds `γ` from such a pair. In types C
//! and D the same recipe, run on embeddings in `S_2n`, handles pairs of
//! signed shuffles.

use serde::Serialize;

use crate::clan::{Cell, Clan};
use crate::error::RichardsonError;
use crate::perm::Permutation;
use crate::weyl::{CartanType, SignedPermutation};

/// Which shape of signed-shuffle pair was recognized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PairKind {
    TypeC,
    TypeDEven,
    TypeDOdd,
}

/// A pair `(u, v)` whose one-line notations interleave a run of positive
/// values with a run of negated ones.
///
/// `u_cut` is the number of entries from `1, ..., j` in `u` (in type D with
/// odd rank the entry `n` is not counted); `v_cut` likewise for `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShufflePair {
    pub u: SignedPermutation,
    pub v: SignedPermutation,
    pub kind: PairKind,
    pub u_cut: usize,
    pub v_cut: usize,
}

/// `u(γ)`: the values `p, ..., 1` go, in order, to the `+` signs and second
/// occurrences; `p+q, ..., p+1` go to the remaining positions.
pub fn u_of_clan(clan: &Clan) -> Result<Permutation, RichardsonError> {
    if !clan.avoids_1212() {
        return Err(RichardsonError::Contains1212(clan.to_string()));
    }
    let (p, _) = clan.signature();
    let mut low = p as u32;
    let mut high = clan.len() as u32;
    let images = (0..clan.len())
        .map(|i| {
            let second = matches!(clan.mate(i), Some(j) if j < i);
            if clan.is_plus(i) || second {
                low -= 1;
                low + 1
            } else {
                high -= 1;
                high + 1
            }
        })
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// `v(γ)`: the values `1, ..., p` go, in order, to the `+` signs and first
/// occurrences; `p+1, ..., p+q` go to the remaining positions.
pub fn v_of_clan(clan: &Clan) -> Result<Permutation, RichardsonError> {
    if !clan.avoids_1212() {
        return Err(RichardsonError::Contains1212(clan.to_string()));
    }
    let (p, _) = clan.signature();
    let mut low = 0u32;
    let mut high = p as u32;
    let images = (0..clan.len())
        .map(|i| {
            let first = matches!(clan.mate(i), Some(j) if j > i);
            if clan.is_plus(i) || first {
                low += 1;
                low
            } else {
                high += 1;
                high
            }
        })
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// The values of `xs` that satisfy `keep`, in order of appearance.
fn subsequence(xs: &[u32], keep: impl Fn(u32) -> bool) -> Vec<u32> {
    xs.iter().copied().filter(|&x| keep(x)).collect()
}

/// Whether `u` is a shuffle of `p, ..., 1` and `p+q, ..., p+1` and `v` is a
/// shuffle of `1, ..., p` and `p+1, ..., p+q`. This is the condition that
/// `(w0 u, v)` is a `(p,q)`-pair.
fn is_shuffle_pair(u: &Permutation, v: &Permutation, p: usize) -> bool {
    let m = u.size() as u32;
    let p = p as u32;
    let desc = |xs: Vec<u32>| xs.windows(2).all(|w| w[0] > w[1]);
    let asc = |xs: Vec<u32>| xs.windows(2).all(|w| w[0] < w[1]);
    u.size() == v.size()
        && p <= m
        && desc(subsequence(u.images(), |x| x <= p))
        && desc(subsequence(u.images(), |x| x > p))
        && asc(subsequence(v.images(), |x| x <= p))
        && asc(subsequence(v.images(), |x| x > p))
}

/// The clan `γ` with `u(γ) = u` and `v(γ) = v`, built from the FS-pattern.
///
/// `u` is the Schubert index, so `(w0 u, v)` must be a `(p,q)`-pair. The clan
/// is built whether or not `u >= v`; if some `S` finds no open number to its
/// left the pattern cannot be completed and an error is returned.
pub fn clan_of_pair(u: &Permutation, v: &Permutation, p: usize) -> Result<Clan, RichardsonError> {
    if !is_shuffle_pair(u, v, p) {
        return Err(RichardsonError::NotAShufflePair {
            u: u.to_string(),
            v: v.to_string(),
            p,
            q: u.size().saturating_sub(p),
        });
    }
    let p = p as u32;
    let len = u.size();
    let mut cells = vec![Cell::Plus; len];
    let mut open: Vec<usize> = Vec::new();
    for i in 0..len {
        let (a, b) = (u.images()[i], v.images()[i]);
        match (a <= p, b <= p) {
            (true, true) => cells[i] = Cell::Plus,
            (false, false) => cells[i] = Cell::Minus,
            (false, true) => open.push(i),
            (true, false) => {
                let Some(j) = open.pop() else {
                    return Err(RichardsonError::Incomplete {
                        u: u.to_string(),
                        v: v.to_string(),
                    });
                };
                cells[i] = Cell::Arc(j as u16);
                cells[j] = Cell::Arc(i as u16);
            }
        }
    }
    // #F = #S always holds for a genuine pair, so nothing is left open.
    debug_assert!(open.is_empty());
    Ok(Clan::from_cells(cells))
}

/// Recognizes a pair of signed shuffles of the group's type.
///
/// Type C: `u` is a shuffle of `1..k` and `-n, ..., -(k+1)`, and likewise `v`.
/// Type D: the same for `v` with `n - k` even; `u` has an even cut `j` and, for
/// odd `n`, is a shuffle of `1..j` and `n, -(n-1), ..., -(j+1)`.
pub fn classify_pair(u: &SignedPermutation, v: &SignedPermutation) -> Option<ShufflePair> {
    let ty = u.cartan_type();
    let n = u.rank();
    if v.cartan_type() != ty || v.rank() != n {
        return None;
    }
    let v_cut = signed_cut(v.images())?;
    let (kind, u_cut) = match ty {
        CartanType::C => (PairKind::TypeC, signed_cut(u.images())?),
        CartanType::D if n.is_multiple_of(2) => (PairKind::TypeDEven, signed_cut(u.images())?),
        CartanType::D => (PairKind::TypeDOdd, odd_cut(u.images())?),
    };
    if ty == CartanType::D && (u_cut % 2 != 0 || !(n - v_cut).is_multiple_of(2)) {
        return None;
    }
    Some(ShufflePair {
        u: u.clone(),
        v: v.clone(),
        kind,
        u_cut,
        v_cut,
    })
}

/// `k` if `xs` is a shuffle of `1, ..., k` and `-n, ..., -(k+1)`.
fn signed_cut(xs: &[i32]) -> Option<usize> {
    let k = xs.iter().filter(|&&x| x > 0).count();
    let pos: Vec<i32> = xs.iter().copied().filter(|&x| x > 0).collect();
    let neg: Vec<i32> = xs.iter().copied().filter(|&x| x < 0).collect();
    let n = xs.len() as i32;
    let want_pos = (1..=k as i32).collect::<Vec<_>>();
    let want_neg = (k as i32 + 1..=n).rev().map(|x| -x).collect::<Vec<_>>();
    (pos == want_pos && neg == want_neg).then_some(k)
}

/// `j` if `xs` is a shuffle of `1, ..., j` and `n, -(n-1), ..., -(j+1)`.
fn odd_cut(xs: &[i32]) -> Option<usize> {
    let n = xs.len() as i32;
    let j = xs.iter().filter(|&&x| x > 0 && x < n).count() as i32;
    let low: Vec<i32> = xs.iter().copied().filter(|&x| x.abs() <= j).collect();
    let rest: Vec<i32> = xs.iter().copied().filter(|&x| x.abs() > j).collect();
    let mut want_rest = vec![n];
    want_rest.extend((j + 1..n).rev().map(|x| -x));
    (low == (1..=j).collect::<Vec<_>>() && rest == want_rest).then_some(j as usize)
}

/// The clan `γ(u', v')` of a pair: `u(γ) = w0' u'` with `w0'` the embedded
/// long element of the group (not of `S_2n`), and `v(γ) = v'`.
pub fn pair_to_clan(pair: &ShufflePair) -> Result<Clan, RichardsonError> {
    let group = pair.u.group();
    let ty = group.cartan_type();
    let w0 = group.long_element().embed();
    let u = w0.compose(&pair.u.embed());
    let v = pair.v.embed();
    let clan = clan_of_pair(&u, &v, group.rank())?;
    if !clan.is_orbit_clan(ty) {
        return Err(RichardsonError::PredicateFailed {
            clan: clan.to_string(),
            ty,
        });
    }
    Ok(clan)
}

/// The pair `(u, v)` of group elements with `pair_to_clan` equal to `clan`.
///
/// Requires an orbit clan of the given type avoiding `(1,2,1,2)`. The result
/// is classified as a signed-shuffle pair.
pub fn clan_to_pair(ty: CartanType, clan: &Clan) -> Result<ShufflePair, RichardsonError> {
    let n = clan.len() / 2;
    let not_pair = || RichardsonError::PredicateFailed {
        clan: clan.to_string(),
        ty,
    };
    if !clan.len().is_multiple_of(2) || !clan.is_orbit_clan(ty) {
        return Err(not_pair());
    }
    let group = crate::weyl::WeylGroup::new(ty, n)?;
    let w0 = group.long_element().embed();
    let u_embedded = w0.inverse().compose(&u_of_clan(clan)?);
    let v_embedded = v_of_clan(clan)?;
    let u = SignedPermutation::from_embedding(ty, &u_embedded).map_err(|_| not_pair())?;
    let v = SignedPermutation::from_embedding(ty, &v_embedded).map_err(|_| not_pair())?;
    classify_pair(&u, &v).ok_or_else(|| RichardsonError::NotASignedShufflePair {
        u: u.to_string(),
        v: v.to_string(),
        ty,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylGroup;

    fn clan(s: &str) -> Clan {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn u_and_v_of_small_clan() {
        let g = clan("+,-,1,1,2,2");
        assert_eq!(u_of_clan(&g).unwrap(), perm("365241"));
        assert_eq!(v_of_clan(&g).unwrap(), perm("142536"));
        assert!(u_of_clan(&clan("1,2,1,2")).is_err());
    }

    #[test]
    fn u_and_v_of_skew_clan() {
        let g = clan("+,-,1,2,2,1,+,-");
        assert_eq!(v_of_clan(&g).unwrap(), perm("15236748"));
        let u_prime = perm("51236784");
        let w0 = Permutation::longest(8);
        assert_eq!(u_of_clan(&g).unwrap(), w0.compose(&u_prime));
    }

    #[test]
    fn fs_pattern_example() {
        let c = clan_of_pair(&perm("365241"), &perm("142536"), 3).unwrap();
        assert_eq!(c, clan("+,-,1,1,2,2"));
        let w0 = Permutation::longest(8);
        let c = clan_of_pair(&w0.compose(&perm("51236784")), &perm("15236748"), 4).unwrap();
        assert_eq!(c, clan("+,-,1,2,2,1,+,-"));
        let odd = clan_of_pair(&perm("635241"), &perm("415263"), 3).unwrap();
        assert_eq!(odd, clan("-,+,-,+,-,+"));
        assert!(clan_of_pair(&perm("123456"), &perm("142536"), 3).is_err());
    }

    #[test]
    fn classify_examples() {
        let c4: WeylGroup = "C4".parse().unwrap();
        let pair = classify_pair(
            &c4.parse_element("-4,1,2,3").unwrap(),
            &c4.parse_element("1,-4,2,3").unwrap(),
        )
        .unwrap();
        assert_eq!((pair.kind, pair.u_cut, pair.v_cut), (PairKind::TypeC, 3, 3));

        let d4: WeylGroup = "D4".parse().unwrap();
        let pair = classify_pair(
            &d4.parse_element("-4,1,2,-3").unwrap(),
            &d4.parse_element("1,2,-4,-3").unwrap(),
        )
        .unwrap();
        assert_eq!(
            (pair.kind, pair.u_cut, pair.v_cut),
            (PairKind::TypeDEven, 2, 2)
        );

        let d3: WeylGroup = "D3".parse().unwrap();
        let pair = classify_pair(
            &d3.parse_element("1,3,2").unwrap(),
            &d3.parse_element("-3,1,-2").unwrap(),
        )
        .unwrap();
        assert_eq!(
            (pair.kind, pair.u_cut, pair.v_cut),
            (PairKind::TypeDOdd, 2, 1)
        );

        assert!(classify_pair(&c4.parse_element("2,1,3,4").unwrap(), &c4.identity(),).is_none());
    }

    #[test]
    fn pair_to_clan_examples() {
        for (group, u, v, expected) in [
            ("C4", "-4,1,2,3", "1,-4,2,3", "+,-,1,2,2,1,+,-"),
            ("D4", "-4,1,2,-3", "1,2,-4,-3", "+,1,-,1,2,+,2,-"),
            ("D3", "1,3,2", "-3,1,-2", "-,+,-,+,-,+"),
        ] {
            let g: WeylGroup = group.parse().unwrap();
            let pair =
                classify_pair(&g.parse_element(u).unwrap(), &g.parse_element(v).unwrap()).unwrap();
            let c = pair_to_clan(&pair).unwrap();
            assert_eq!(c, clan(expected), "{group}");
            assert_eq!(clan_to_pair(g.cartan_type(), &c).unwrap(), pair);
        }
    }
}
