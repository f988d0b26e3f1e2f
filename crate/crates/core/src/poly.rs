//! Multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::OracleError;

/// Largest number of variables a polynomial may use.
pub const MAX_VARS: usize = 8;

/// An exponent vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([u8; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial(e)
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    fn with_exponent(&self, i: usize, k: u8) -> Monomial {
        let mut e = self.0;
        e[i] = k;
        Monomial(e)
    }
}

/// A polynomial in `x_1, ..., x_nvars`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl ExactPolynomial {
    pub fn zero(nvars: usize) -> Result<Self, OracleError> {
        if nvars > MAX_VARS {
            return Err(OracleError::TooManyVariables(nvars));
        }
        Ok(ExactPolynomial {
            nvars,
            terms: BTreeMap::new(),
        })
    }

    pub fn constant(nvars: usize, c: BigRational) -> Result<Self, OracleError> {
        let mut p = ExactPolynomial::zero(nvars)?;
        p.add_term(Monomial::one(), c);
        Ok(p)
    }

    /// `Σ coeffs[i] x_{i+1}`.
    pub fn linear(coeffs: &[i64]) -> Result<Self, OracleError> {
        let mut p = ExactPolynomial::zero(coeffs.len())?;
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(i), BigRational::from_integer(c.into()));
        }
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Result<Self, OracleError> {
        let mut p = ExactPolynomial::zero(nvars)?;
        for (m, c) in terms {
            if m.0[nvars..].iter().any(|&e| e != 0) {
                return Err(OracleError::TooManyVariables(nvars + 1));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Highest total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The value if the polynomial is constant (zero counts).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> ExactPolynomial {
        if c.is_zero() {
            return ExactPolynomial {
                nvars: self.nvars,
                terms: BTreeMap::new(),
            };
        }
        ExactPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// `f(y)` where `y_i = signs[i] * x_{targets[i]}`: a signed permutation of
    /// the variables.
    pub fn substitute_signed(&self, targets: &[usize], signs: &[i8]) -> ExactPolynomial {
        let mut out = ExactPolynomial {
            nvars: self.nvars,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut e = [0u8; MAX_VARS];
            let mut negative = false;
            for i in 0..self.nvars {
                let k = m.0[i];
                e[targets[i]] += k;
                if signs[i] < 0 && k % 2 == 1 {
                    negative = !negative;
                }
            }
            out.add_term(Monomial(e), if negative { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Exact division by a nonzero linear form. Fails if there is a remainder.
    pub fn div_linear(&self, divisor: &ExactPolynomial) -> Result<ExactPolynomial, OracleError> {
        let not_divisible = || OracleError::NotDivisible(divisor.to_string());
        if divisor.degree() != Some(1) || divisor.terms.contains_key(&Monomial::one()) {
            return Err(not_divisible());
        }
        // Eliminate the first variable of the divisor: write the dividend as a
        // polynomial in x_a and peel off the top power repeatedly.
        let (&lead, lead_coeff) = divisor
            .terms
            .iter()
            .max_by_key(|(m, _)| m.0)
            .expect("nonzero divisor");
        let a = (0..MAX_VARS).find(|&i| lead.0[i] == 1).expect("linear");
        let rest: Vec<(Monomial, BigRational)> = divisor
            .terms
            .iter()
            .filter(|(m, _)| **m != lead)
            .map(|(m, c)| (*m, c.clone()))
            .collect();

        let mut slices: BTreeMap<u8, BTreeMap<Monomial, BigRational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            slices
                .entry(m.0[a])
                .or_default()
                .insert(m.with_exponent(a, 0), c.clone());
        }
        let mut quotient = ExactPolynomial {
            nvars: self.nvars.max(divisor.nvars),
            terms: BTreeMap::new(),
        };
        while let Some((&k, _)) = slices.iter().next_back() {
            let slice = slices.remove(&k).expect("present");
            if k == 0 {
                if slice.values().all(Zero::is_zero) {
                    break;
                }
                return Err(not_divisible());
            }
            let below = slices.entry(k - 1).or_default();
            for (m, c) in slice {
                if c.is_zero() {
                    continue;
                }
                let q = &c / lead_coeff;
                for (r, rc) in &rest {
                    let entry = below.entry(m.times(r)).or_insert_with(BigRational::zero);
                    *entry -= &q * rc;
                }
                quotient.add_term(m.with_exponent(a, k - 1), q);
            }
        }
        Ok(quotient)
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        out.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut out = self.clone();
        out.nvars = self.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn neg(self) -> ExactPolynomial {
        ExactPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;

    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.times(mb)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        ExactPolynomial {
            nvars: self.nvars.max(rhs.nvars),
            terms: acc,
        }
    }
}

impl fmt::Display for ExactPolynomial {
    /// Terms in decreasing monomial order, e.g. `x1^2 - 1/2*x1*x3 + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = (0..self.nvars)
                .filter(|&i| m.0[i] > 0)
                .map(|i| match m.0[i] {
                    1 => format!("x{}", i + 1),
                    e => format!("x{}^{e}", i + 1),
                })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (vars.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

pub(crate) fn integer(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}
