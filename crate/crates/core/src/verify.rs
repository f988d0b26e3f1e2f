//! Cross-checks of the clan rules against the divided-difference oracle.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constants::{PreparedPair, Regime};
use crate::error::{ConstantError, VerifyError};
use crate::oracle::Oracle;
use crate::par::Exec;
use crate::richardson::{classify_pair, ShufflePair};
use crate::weyl::{SignedPermutation, WeylGroup};

/// Every pair of signed shuffles in the group, in group order.
pub fn shuffle_pairs(group: WeylGroup) -> Vec<ShufflePair> {
    let e = group.identity();
    let elements: Vec<SignedPermutation> = group.elements().iter().cloned().collect();
    let us: Vec<&SignedPermutation> = elements
        .iter()
        .filter(|u| classify_pair(u, &e).is_some())
        .collect();
    let vs: Vec<&SignedPermutation> = elements
        .iter()
        .filter(|v| classify_pair(&e, v).is_some())
        .collect();
    us.iter()
        .flat_map(|u| vs.iter().map(move |v| classify_pair(u, v)))
        .map(|p| p.expect("shuffle conditions on u and v are independent"))
        .collect()
}

/// The pairs with `w0 u >= v`, prepared for constant queries, and the
/// qualifying pairs the rules cannot handle because their clan is not an
/// orbit clan.
pub fn qualifying_pairs(group: WeylGroup) -> Result<Qualifying, VerifyError> {
    let mut out = Qualifying::default();
    for pair in shuffle_pairs(group) {
        match PreparedPair::new(&pair.u, &pair.v) {
            Ok(p) if p.regime == Regime::Vanishing => {}
            Ok(p) => out.pairs.push(p),
            Err(ConstantError::NotAnOrbitClan { .. }) => out.uncovered.push((pair.u, pair.v)),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct Qualifying {
    pub pairs: Vec<PreparedPair>,
    pub uncovered: Vec<(SignedPermutation, SignedPermutation)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub u: SignedPermutation,
    pub v: SignedPermutation,
    pub w: SignedPermutation,
    pub rule: u64,
    pub oracle: BigRational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub triples: usize,
    pub nonzero: usize,
    pub mismatches: Vec<Mismatch>,
    /// Qualifying pairs skipped because the rules do not apply to them.
    pub uncovered: Vec<(SignedPermutation, SignedPermutation)>,
}

impl VerifyReport {
    /// No mismatches and no skipped pairs.
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.uncovered.is_empty()
    }
}

/// Compares rule and oracle on every qualifying pair and every `w` with
/// `l(w) = l(u) + l(v)`.
pub fn verify_exhaustive(group: WeylGroup, exec: Exec) -> Result<VerifyReport, VerifyError> {
    let Qualifying { pairs, uncovered } = qualifying_pairs(group)?;
    let elements = group.elements();
    let triples: Vec<(usize, &SignedPermutation)> = pairs
        .iter()
        .enumerate()
        .filter(|(_, p)| p.degree <= elements.max_length())
        .flat_map(|(i, p)| elements.of_length(p.degree).iter().map(move |w| (i, w)))
        .collect();
    check(group, &pairs, &triples, uncovered, exec)
}

/// Compares rule and oracle on `count` triples drawn with a seeded ChaCha
/// generator: a qualifying pair uniformly, then `w` uniformly among elements
/// of the matching length. The same seed always draws the same triples.
pub fn verify_sample(
    group: WeylGroup,
    count: usize,
    seed: u64,
    exec: Exec,
) -> Result<VerifyReport, VerifyError> {
    let elements = group.elements();
    let Qualifying { pairs, uncovered } = qualifying_pairs(group)?;
    let pairs: Vec<PreparedPair> = pairs
        .into_iter()
        .filter(|p| p.degree <= elements.max_length())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<(usize, &SignedPermutation)> = (0..count)
        .map(|_| {
            let i = rng.random_range(0..pairs.len());
            let level = elements.of_length(pairs[i].degree);
            (i, &level[rng.random_range(0..level.len())])
        })
        .collect();
    check(group, &pairs, &triples, uncovered, exec)
}

fn check(
    group: WeylGroup,
    pairs: &[PreparedPair],
    triples: &[(usize, &SignedPermutation)],
    uncovered: Vec<(SignedPermutation, SignedPermutation)>,
    exec: Exec,
) -> Result<VerifyReport, VerifyError> {
    let oracle = Oracle::shared(group)?;
    let results = exec.try_map(triples, |&(i, w)| -> Result<_, VerifyError> {
        let p = &pairs[i];
        let rule = p.constant(w)?;
        let exact = oracle.constant(&p.pair.u, &p.pair.v, w)?;
        Ok((rule, exact))
    })?;
    let mut report = VerifyReport {
        triples: triples.len(),
        uncovered,
        ..Default::default()
    };
    for (&(i, w), (rule, exact)) in triples.iter().zip(results) {
        if rule != 0 {
            report.nonzero += 1;
        }
        if exact != BigRational::from_integer(rule.into()) {
            report.mismatches.push(Mismatch {
                u: pairs[i].pair.u.clone(),
                v: pairs[i].pair.v.clone(),
                w: w.clone(),
                rule,
                oracle: exact,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_counts() {
        // u and v each range over 2^n shuffles in type C.
        assert_eq!(shuffle_pairs("C3".parse().unwrap()).len(), 64);
    }

    #[test]
    fn small_exhaustive_runs_clean() {
        let report = verify_exhaustive("C2".parse().unwrap(), Exec::Sequential).unwrap();
        assert!(report.is_clean(), "{:?}", report.mismatches);
        assert!(report.nonzero > 0);
    }

    #[test]
    fn rank_five_type_d_has_uncovered_pairs() {
        let q = qualifying_pairs("D5".parse().unwrap()).unwrap();
        assert!(!q.uncovered.is_empty());
        assert!(q
            .uncovered
            .iter()
            .all(|(u, v)| !u.is_identity() && !v.is_identity()));
    }

    #[test]
    fn sampling_is_deterministic() {
        let g: WeylGroup = "C3".parse().unwrap();
        let a = verify_sample(g, 20, 7, Exec::Parallel).unwrap();
        let b = verify_sample(g, 20, 7, Exec::Sequential).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.triples, 20);
    }
}
