//! An independent check on structure constants: divided differences on
//! polynomial representatives of Schubert classes.
//!
//! With `B_{w0} = (1/|W|) Π_{α>0} α` and `B_w = ∂_{w^{-1} w0} B_{w0}`, the
//! constant `c_{u,v}^w` is `∂_w (B_u B_v)`, computed exactly over the rationals.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::error::OracleError;
use crate::par::Exec;
use crate::poly::{integer, ExactPolynomial, Monomial, MAX_VARS};
use crate::weyl::{CartanType, SignedPermutation, WeylGroup, Word};

/// A root as an integer vector in the coordinates `x_1, ..., x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Root {
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn polynomial(&self) -> ExactPolynomial {
        ExactPolynomial::linear(&self.0).expect("rank within variable limit")
    }

    /// The reflection `x -> x - 2 (x,α)/(α,α) α` as a signed permutation of
    /// coordinates: `(s x)_i = signs[i] * x_{targets[i]}`.
    pub fn reflection(&self) -> (Vec<usize>, Vec<i8>) {
        let a = &self.0;
        let norm: i64 = a.iter().map(|x| x * x).sum();
        let n = a.len();
        let mut targets = vec![0; n];
        let mut signs = vec![0i8; n];
        for i in 0..n {
            let row: Vec<i64> = (0..n)
                .map(|j| {
                    let delta = i64::from(i == j);
                    debug_assert_eq!(2 * a[i] * a[j] % norm, 0);
                    delta - 2 * a[i] * a[j] / norm
                })
                .collect();
            let j = row.iter().position(|&x| x != 0).expect("invertible");
            debug_assert_eq!(row.iter().filter(|&&x| x != 0).count(), 1);
            targets[i] = j;
            signs[i] = row[j] as i8;
        }
        (targets, signs)
    }

    /// `s_α f`, i.e. `f ∘ s_α`.
    pub fn reflect(&self, f: &ExactPolynomial) -> ExactPolynomial {
        let (targets, signs) = self.reflection();
        f.substitute_signed(&targets, &signs)
    }

    /// `∂_α f = (f - s_α f) / α`.
    pub fn divided_difference(&self, f: &ExactPolynomial) -> Result<ExactPolynomial, OracleError> {
        let diff = f - &self.reflect(f);
        if diff.is_zero() {
            return ExactPolynomial::zero(f.nvars());
        }
        diff.div_linear(&self.polynomial())
    }
}

/// Simple and positive roots of `C_n` (`α_n = 2x_n`) or `D_n`
/// (`α_n = x_{n-1} + x_n`).
#[derive(Clone, Debug)]
pub struct RootSystem {
    group: WeylGroup,
    simple: Vec<Root>,
    positive: Vec<Root>,
}

impl RootSystem {
    pub fn new(group: WeylGroup) -> Result<RootSystem, OracleError> {
        let n = group.rank();
        if n > MAX_VARS {
            return Err(OracleError::TooManyVariables(n));
        }
        let unit = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        };
        let combo = |i: usize, j: usize, s: i64| {
            let mut v = unit(i);
            v[j] += s;
            Root(v)
        };
        let mut simple: Vec<Root> = (0..n.saturating_sub(1))
            .map(|i| combo(i, i + 1, -1))
            .collect();
        simple.push(match group.cartan_type() {
            CartanType::C => Root(unit(n - 1).iter().map(|x| 2 * x).collect()),
            CartanType::D => combo(n - 2, n - 1, 1),
        });
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive.push(combo(i, j, -1));
                positive.push(combo(i, j, 1));
            }
            if group.cartan_type() == CartanType::C {
                positive.push(Root(unit(i).iter().map(|x| 2 * x).collect()));
            }
        }
        Ok(RootSystem {
            group,
            simple,
            positive,
        })
    }

    pub fn group(&self) -> WeylGroup {
        self.group
    }

    /// `α_i` for `i` in `1..=n`.
    pub fn simple_root(&self, i: usize) -> &Root {
        &self.simple[i - 1]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// `Π_{α>0} α`.
    pub fn positive_product(&self) -> ExactPolynomial {
        let n = self.group.rank();
        let one = ExactPolynomial::constant(n, BigRational::one()).expect("rank checked");
        self.positive
            .iter()
            .fold(one, |acc, r| &acc * &r.polynomial())
    }

    /// `∂_{s_{l_1}} ∘ ... ∘ ∂_{s_{l_k}}` applied to `f` (rightmost first).
    pub fn apply_word(
        &self,
        word: &Word,
        f: &ExactPolynomial,
    ) -> Result<ExactPolynomial, OracleError> {
        let mut g = f.clone();
        for &i in word.letters().iter().rev() {
            if g.is_zero() {
                break;
            }
            g = self.simple_root(i).divided_difference(&g)?;
        }
        Ok(g)
    }
}

/// Schubert representatives of one group, all computed up front.
#[derive(Debug)]
pub struct Oracle {
    roots: RootSystem,
    reps: HashMap<SignedPermutation, ExactPolynomial>,
}

impl Oracle {
    /// Computes `B_w` for every `w`, descending from the long element.
    pub fn new(group: WeylGroup, exec: Exec) -> Result<Oracle, OracleError> {
        let roots = RootSystem::new(group)?;
        let elements = group.elements();
        let order = integer(group.order() as i64);
        let top = roots
            .positive_product()
            .scale(&(BigRational::one() / order));
        let mut reps = HashMap::with_capacity(elements.len());
        reps.insert(group.long_element(), top);
        for len in (0..elements.max_length()).rev() {
            let level = elements.of_length(len);
            let computed = exec.try_map(level, |w| {
                let i = (1..=group.rank())
                    .find(|&i| !w.has_right_descent(i))
                    .expect("only the long element lacks ascents");
                let above = &reps[&w.right_simple(i)];
                roots.simple_root(i).divided_difference(above)
            })?;
            reps.extend(level.iter().cloned().zip(computed));
        }
        Ok(Oracle { roots, reps })
    }

    /// A process-wide oracle per group, built on first use.
    pub fn shared(group: WeylGroup) -> Result<Arc<Oracle>, OracleError> {
        if let Some(found) = shared_cache().lock().unwrap().get(&group) {
            return Ok(Arc::clone(found));
        }
        Ok(Oracle::install_shared(Oracle::new(group, Exec::Parallel)?))
    }

    /// Makes `oracle` the process-wide oracle of its group, unless one is
    /// already in place. Returns whichever is in use afterwards.
    pub fn install_shared(oracle: Oracle) -> Arc<Oracle> {
        let mut guard = shared_cache().lock().unwrap();
        Arc::clone(
            guard
                .entry(oracle.group())
                .or_insert_with(|| Arc::new(oracle)),
        )
    }

    pub fn group(&self) -> WeylGroup {
        self.roots.group()
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn representative(&self, w: &SignedPermutation) -> Result<&ExactPolynomial, OracleError> {
        self.check(w)?;
        Ok(&self.reps[w])
    }

    fn check(&self, w: &SignedPermutation) -> Result<(), OracleError> {
        let g = self.group();
        if w.cartan_type() != g.cartan_type() {
            return Err(
                crate::error::WeylError::TypeMismatch(w.cartan_type(), g.cartan_type()).into(),
            );
        }
        if w.rank() != g.rank() {
            return Err(crate::error::WeylError::RankMismatch(w.rank(), g.rank()).into());
        }
        Ok(())
    }

    /// `∂_w (B_u B_v)`, which must be a constant.
    pub fn constant(
        &self,
        u: &SignedPermutation,
        v: &SignedPermutation,
        w: &SignedPermutation,
    ) -> Result<BigRational, OracleError> {
        let (bu, bv) = (self.representative(u)?, self.representative(v)?);
        self.check(w)?;
        let uv = u.length() + v.length();
        if w.length() != uv {
            return Err(OracleError::LengthMismatch { w: w.length(), uv });
        }
        let result = self.roots.apply_word(&w.reduced_word(), &(bu * bv))?;
        result
            .as_constant()
            .ok_or_else(|| OracleError::NotConstant(result.to_string()))
    }

    /// Like [`Oracle::constant`], asserting the value is a nonnegative
    /// integer as every Schubert structure constant is.
    pub fn integer_constant(
        &self,
        u: &SignedPermutation,
        v: &SignedPermutation,
        w: &SignedPermutation,
    ) -> Result<u64, OracleError> {
        let c = self.constant(u, v, w)?;
        assert!(
            c.is_integer() && !c.is_negative(),
            "structure constant {c} for ({u}, {v}, {w}) is not a nonnegative integer"
        );
        Ok(u64::try_from(c.to_integer()).expect("constant fits in u64"))
    }

    /// Serializes every representative, keyed by its element.
    pub fn to_json(&self) -> Value {
        let mut keys: Vec<&SignedPermutation> = self.reps.keys().collect();
        keys.sort();
        let reps: Vec<Value> = keys
            .into_iter()
            .map(|w| {
                let terms: Vec<Value> = self.reps[w]
                    .terms()
                    .map(|(m, c)| json!([&m.exponents()[..w.rank()], c.to_string()]))
                    .collect();
                json!({ "w": w.to_string(), "terms": terms })
            })
            .collect();
        json!({
            "type": self.group().cartan_type(),
            "rank": self.group().rank(),
            "representatives": reps,
        })
    }

    /// Rebuilds an oracle from [`Oracle::to_json`] output. Returns `None` if
    /// the data is malformed, belongs to another group, or fails the
    /// `∂_{w0} B_{w0} = 1` spot check.
    pub fn from_json(group: WeylGroup, value: &Value) -> Option<Oracle> {
        if value["type"] != json!(group.cartan_type()) || value["rank"] != json!(group.rank()) {
            return None;
        }
        let n = group.rank();
        let mut reps = HashMap::new();
        for entry in value["representatives"].as_array()? {
            let w = group.parse_element(entry["w"].as_str()?).ok()?;
            let mut terms = Vec::new();
            for t in entry["terms"].as_array()? {
                let exps: Vec<u8> = t[0]
                    .as_array()?
                    .iter()
                    .map(|e| e.as_u64().and_then(|e| u8::try_from(e).ok()))
                    .collect::<Option<_>>()?;
                if exps.len() != n {
                    return None;
                }
                let c: BigRational = t[1].as_str()?.parse().ok()?;
                terms.push((Monomial::from_exponents(&exps), c));
            }
            reps.insert(w, ExactPolynomial::from_terms(n, terms).ok()?);
        }
        if reps.len() != group.order() {
            return None;
        }
        let roots = RootSystem::new(group).ok()?;
        let w0 = group.long_element();
        let top = roots.apply_word(&w0.reduced_word(), reps.get(&w0)?).ok()?;
        (top.as_constant()? == BigRational::one()).then_some(Oracle { roots, reps })
    }
}

fn shared_cache() -> &'static Mutex<HashMap<WeylGroup, Arc<Oracle>>> {
    static CACHE: OnceLock<Mutex<HashMap<WeylGroup, Arc<Oracle>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c_{u,v}^w` from the shared oracle of the elements' group.
pub fn oracle_constant(
    u: &SignedPermutation,
    v: &SignedPermutation,
    w: &SignedPermutation,
) -> Result<BigRational, OracleError> {
    Oracle::shared(u.group())?.constant(u, v, w)
}

/// `∂_{w0} (Π_{α>0} α)`, which should equal `|W|`.
pub fn top_degree_check(group: WeylGroup) -> Result<BigInt, OracleError> {
    let roots = RootSystem::new(group)?;
    let out = roots.apply_word(
        &group.long_element().reduced_word(),
        &roots.positive_product(),
    )?;
    let c = out
        .as_constant()
        .ok_or_else(|| OracleError::NotConstant(out.to_string()))?;
    if !c.is_integer() {
        return Err(OracleError::NotConstant(c.to_string()));
    }
    Ok(c.to_integer())
}
