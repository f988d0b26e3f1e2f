//! Structure constants `c_{u,v}^w` for pairs of signed shuffles.
//!
//! For such a pair, `S_u · S_v` is the class of the orbit closure of
//! `γ = γ(u', v')`, so `c_{u,v}^w` is `2^{D(w,γ)}` in type C (always 1 in
//! type D) when `l(w) = l(u) + l(v)` and `w · γ` is the dense orbit, and 0
//! otherwise.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::action::act_word_unchecked;
use crate::clan::Clan;
use crate::error::{ConstantError, RichardsonError, WeylError};
use crate::par::Exec;
use crate::richardson::{classify_pair, pair_to_clan, ShufflePair};
use crate::weyl::{CartanType, SignedPermutation, WeylGroup, Word};

/// How the constants of a prepared pair are computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `w0 u ≱ v`: the product vanishes.
    Vanishing,
    /// The product is the class of this orbit closure.
    Orbit(Clan),
    /// One factor is the identity and the product is the other factor. Used
    /// in type D, where `γ(u', v')` is then not always a type D clan; `clan`
    /// is that rejected clan.
    Unit {
        product: SignedPermutation,
        clan: String,
    },
}

/// A pair prepared for repeated queries: the clan is built once.
#[derive(Clone, Debug)]
pub struct PreparedPair {
    pub pair: ShufflePair,
    pub regime: Regime,
    pub degree: usize,
}

impl PreparedPair {
    pub fn new(u: &SignedPermutation, v: &SignedPermutation) -> Result<Self, ConstantError> {
        check_same_group(u, v)?;
        let pair = classify_pair(u, v).ok_or_else(|| ConstantError::Unsupported {
            u: u.to_string(),
            v: v.to_string(),
            ty: u.cartan_type(),
        })?;
        let w0u = u.group().long_element().multiply(u)?;
        let regime = if !v.bruhat_leq(&w0u)? {
            Regime::Vanishing
        } else {
            match pair_to_clan(&pair) {
                Ok(clan) => Regime::Orbit(clan),
                Err(RichardsonError::PredicateFailed { clan, .. }) => {
                    if v.is_identity() || u.is_identity() {
                        let product = if v.is_identity() { u } else { v };
                        Regime::Unit {
                            product: product.clone(),
                            clan,
                        }
                    } else {
                        return Err(ConstantError::NotAnOrbitClan {
                            u: u.to_string(),
                            v: v.to_string(),
                            clan,
                        });
                    }
                }
                Err(e) => return Err(e.into()),
            }
        };
        Ok(PreparedPair {
            degree: u.length() + v.length(),
            pair,
            regime,
        })
    }

    pub fn group(&self) -> WeylGroup {
        self.pair.u.group()
    }

    pub fn clan(&self) -> Option<&Clan> {
        match &self.regime {
            Regime::Orbit(clan) => Some(clan),
            _ => None,
        }
    }

    /// `w · γ` and the number of double edges crossed, if there is a clan.
    pub fn act(&self, word: &Word) -> Option<(Clan, usize)> {
        let ty = self.group().cartan_type();
        self.clan()
            .map(|c| act_word_unchecked(ty, word.letters(), c))
    }

    pub fn constant(&self, w: &SignedPermutation) -> Result<u64, ConstantError> {
        check_same_group(&self.pair.u, w)?;
        let clan = match &self.regime {
            Regime::Vanishing => return Ok(0),
            Regime::Unit { product, .. } => return Ok(u64::from(w == product)),
            Regime::Orbit(clan) => clan,
        };
        if w.length() != self.degree {
            return Ok(0);
        }
        let group = self.group();
        let ty = group.cartan_type();
        let (end, doubles) = act_word_unchecked(ty, w.reduced_word().letters(), clan);
        if end != Clan::dense_orbit(ty, group.rank()) {
            return Ok(0);
        }
        Ok(match ty {
            CartanType::C => 1 << doubles,
            CartanType::D => 1,
        })
    }
}

fn check_same_group(a: &SignedPermutation, b: &SignedPermutation) -> Result<(), WeylError> {
    if a.cartan_type() != b.cartan_type() {
        return Err(WeylError::TypeMismatch(a.cartan_type(), b.cartan_type()));
    }
    if a.rank() != b.rank() {
        return Err(WeylError::RankMismatch(a.rank(), b.rank()));
    }
    Ok(())
}

/// `c_{u,v}^w`. Fails with [`ConstantError::Unsupported`] when `(u, v)` is
/// not a pair of signed shuffles, which says nothing about the true value.
pub fn schubert_constant(
    u: &SignedPermutation,
    v: &SignedPermutation,
    w: &SignedPermutation,
) -> Result<u64, ConstantError> {
    PreparedPair::new(u, v)?.constant(w)
}

/// The expansion `S_u · S_v = Σ c_{u,v}^w S_w`, keeping nonzero terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertProduct {
    pub u: SignedPermutation,
    pub v: SignedPermutation,
    pub terms: BTreeMap<SignedPermutation, u64>,
}

pub fn schubert_product(
    u: &SignedPermutation,
    v: &SignedPermutation,
    exec: Exec,
) -> Result<SchubertProduct, ConstantError> {
    let prepared = PreparedPair::new(u, v)?;
    let mut terms = BTreeMap::new();
    if prepared.regime != Regime::Vanishing {
        let candidates = u.group().elements_of_length(prepared.degree);
        let coeffs = exec.try_map(&candidates, |w| prepared.constant(w))?;
        for (w, c) in candidates.into_iter().zip(coeffs) {
            if c != 0 {
                terms.insert(w, c);
            }
        }
    }
    Ok(SchubertProduct {
        u: u.clone(),
        v: v.clone(),
        terms,
    })
}

#[derive(Serialize)]
struct JsonTerm {
    w: SignedPermutation,
    word: Word,
    coeff: u64,
}

#[derive(Serialize)]
struct JsonProduct {
    #[serde(rename = "type")]
    ty: CartanType,
    rank: usize,
    u: SignedPermutation,
    v: SignedPermutation,
    terms: Vec<JsonTerm>,
}

impl SchubertProduct {
    pub fn group(&self) -> WeylGroup {
        self.u.group()
    }

    /// `{type, rank, u, v, terms:[{w, word, coeff}]}` with terms sorted by `w`.
    pub fn to_json(&self) -> serde_json::Value {
        let dump = JsonProduct {
            ty: self.u.cartan_type(),
            rank: self.u.rank(),
            u: self.u.clone(),
            v: self.v.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, &coeff)| JsonTerm {
                    w: w.clone(),
                    word: w.reduced_word(),
                    coeff,
                })
                .collect(),
        };
        serde_json::to_value(dump).expect("product serializes")
    }
}

/// One row of a product table: an element of the right length, its clan
/// `w · γ`, and the constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub w: SignedPermutation,
    pub word: Word,
    #[serde(serialize_with = "clan_text")]
    pub clan: Clan,
    pub coeff: u64,
}

fn clan_text<S: serde::Serializer>(clan: &Clan, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(clan)
}

/// Every `w` with `l(w) = l(u) + l(v)`, in group order. Empty when
/// `w0 u ≱ v`; an error when the product has no clan to act on.
pub fn product_table(
    u: &SignedPermutation,
    v: &SignedPermutation,
) -> Result<Vec<TableRow>, ConstantError> {
    let prepared = PreparedPair::new(u, v)?;
    let clan = match &prepared.regime {
        Regime::Vanishing => return Ok(Vec::new()),
        Regime::Unit { clan, .. } => {
            return Err(ConstantError::NotAnOrbitClan {
                u: u.to_string(),
                v: v.to_string(),
                clan: clan.clone(),
            })
        }
        Regime::Orbit(clan) => clan,
    };
    let ty = u.cartan_type();
    u.group()
        .elements_of_length(prepared.degree)
        .into_iter()
        .map(|w| {
            let word = w.reduced_word();
            let (clan, _) = act_word_unchecked(ty, word.letters(), clan);
            let coeff = prepared.constant(&w)?;
            Ok(TableRow {
                w,
                word,
                clan,
                coeff,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(g: &WeylGroup, s: &str) -> SignedPermutation {
        g.parse_element(s).unwrap()
    }

    fn word_el(g: &WeylGroup, s: &str) -> SignedPermutation {
        g.evaluate_reduced(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn table_examples() {
        let c4: WeylGroup = "C4".parse().unwrap();
        let (u, v) = (el(&c4, "-4,1,2,3"), el(&c4, "1,-4,2,3"));
        assert_eq!(
            schubert_constant(&u, &v, &word_el(&c4, "3,2,1,4,3,2,1")).unwrap(),
            2
        );
        assert_eq!(
            schubert_constant(&u, &v, &word_el(&c4, "4,3,2,1,4,3,2")).unwrap(),
            1
        );

        let d4: WeylGroup = "D4".parse().unwrap();
        let (u, v) = (el(&d4, "-4,1,2,-3"), el(&d4, "1,2,-4,-3"));
        assert_eq!(
            schubert_constant(&u, &v, &word_el(&d4, "2,4,2,1")).unwrap(),
            1
        );
        assert_eq!(
            schubert_constant(&u, &v, &word_el(&d4, "1,3,2,1")).unwrap(),
            0
        );

        let d3: WeylGroup = "D3".parse().unwrap();
        let (u, v) = (el(&d3, "1,3,2"), el(&d3, "-3,1,-2"));
        assert_eq!(
            schubert_constant(&u, &v, &word_el(&d3, "2,3,1")).unwrap(),
            1
        );
    }

    #[test]
    fn product_with_identity() {
        let c3: WeylGroup = "C3".parse().unwrap();
        let u = el(&c3, "1,-3,2");
        let p = schubert_product(&u, &c3.identity(), Exec::Sequential).unwrap();
        assert_eq!(p.terms, BTreeMap::from([(u, 1)]));
    }

    #[test]
    fn unsupported_is_not_zero() {
        let c3: WeylGroup = "C3".parse().unwrap();
        let err = schubert_constant(&el(&c3, "2,1,3"), &c3.identity(), &el(&c3, "2,1,3"));
        assert!(matches!(err, Err(ConstantError::Unsupported { .. })));
    }

    #[test]
    fn type_d_identity_factor_uses_the_unit() {
        let d4: WeylGroup = "D4".parse().unwrap();
        let v = el(&d4, "1,2,-4,-3");
        let e = d4.identity();
        let p = schubert_product(&e, &v, Exec::Sequential).unwrap();
        assert_eq!(p.terms, BTreeMap::from([(v.clone(), 1)]));
        let p = schubert_product(&e, &e, Exec::Sequential).unwrap();
        assert_eq!(p.terms, BTreeMap::from([(e.clone(), 1)]));
        assert!(matches!(
            product_table(&e, &v),
            Err(ConstantError::NotAnOrbitClan { .. })
        ));
    }

    #[test]
    fn mirrored_arc_is_reported() {
        let d5: WeylGroup = "D5".parse().unwrap();
        let err = schubert_constant(
            &el(&d5, "1,2,3,5,4"),
            &el(&d5, "1,2,3,-5,-4"),
            &d5.identity(),
        );
        assert!(matches!(err, Err(ConstantError::NotAnOrbitClan { .. })));
    }

    #[test]
    fn product_json_shape() {
        let d3: WeylGroup = "D3".parse().unwrap();
        let p = schubert_product(&el(&d3, "1,3,2"), &el(&d3, "-3,1,-2"), Exec::Parallel).unwrap();
        let json = p.to_json();
        assert_eq!(json["type"], "D");
        assert_eq!(json["rank"], 3);
        assert_eq!(json["terms"].as_array().unwrap().len(), 2);
        assert!(json["terms"]
            .as_array()
            .unwrap()
            .iter()
            .all(|t| t["coeff"] == 1));
    }
}
