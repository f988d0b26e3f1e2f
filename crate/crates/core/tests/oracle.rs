use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use schubert_clans::oracle::{top_degree_check, Root};
use schubert_clans::poly::Monomial;
use schubert_clans::{
    oracle_constant, ExactPolynomial, Exec, Oracle, OracleError, RootSystem, SignedPermutation,
    WeylGroup, Word,
};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn group(name: &str) -> WeylGroup {
    name.parse().unwrap()
}

fn el(g: &WeylGroup, s: &str) -> SignedPermutation {
    g.parse_element(s).unwrap()
}

fn by_word(g: &WeylGroup, w: &str) -> SignedPermutation {
    g.evaluate_reduced(&w.parse::<Word>().unwrap()).unwrap()
}

fn poly(n: usize, terms: &[(&[u8], i64)]) -> ExactPolynomial {
    ExactPolynomial::from_terms(
        n,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e), q(*c))),
    )
    .unwrap()
}

/// A random polynomial in `n` variables of degree at most 5.
fn random_poly(n: usize) -> impl Strategy<Value = ExactPolynomial> {
    proptest::collection::vec(
        (proptest::collection::vec(0u8..=2, n), -20i64..=20, 1i64..=6),
        1..8,
    )
    .prop_map(move |terms| {
        ExactPolynomial::from_terms(
            n,
            terms.into_iter().map(|(e, a, b)| {
                (
                    Monomial::from_exponents(&e),
                    BigRational::new(a.into(), b.into()),
                )
            }),
        )
        .unwrap()
    })
}

#[test]
fn divided_difference_basics() {
    let alpha = Root::new(vec![1, -1]);
    let c = poly(2, &[(&[0, 0], 7)]);
    assert!(alpha.divided_difference(&c).unwrap().is_zero());
    let a = alpha.polynomial();
    assert_eq!(
        alpha.divided_difference(&a).unwrap(),
        poly(2, &[(&[0, 0], 2)])
    );
    let x1sq = poly(2, &[(&[2, 0], 1)]);
    assert_eq!(
        alpha.divided_difference(&x1sq).unwrap(),
        poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])
    );
    // Long root of type C: s acts by x2 -> -x2.
    let long = Root::new(vec![0, 2]);
    assert_eq!(
        long.divided_difference(&poly(2, &[(&[0, 1], 1)])).unwrap(),
        poly(2, &[(&[0, 0], 1)])
    );
}

#[test]
fn root_system_sizes() {
    for (name, roots) in [("C2", 4), ("C3", 9), ("C4", 16), ("D3", 6), ("D4", 12)] {
        let g = group(name);
        let rs = RootSystem::new(g).unwrap();
        assert_eq!(rs.positive_roots().len(), roots, "{name}");
        assert_eq!(rs.positive_product().degree(), Some(roots), "{name}");
    }
    let c3 = RootSystem::new(group("C3")).unwrap();
    assert_eq!(c3.simple_root(3).coeffs(), &[0, 0, 2]);
    let d3 = RootSystem::new(group("D3")).unwrap();
    assert_eq!(d3.simple_root(3).coeffs(), &[0, 1, 1]);
}

#[test]
fn top_degree_is_the_group_order() {
    for name in ["C2", "C3", "D3", "C4", "D4"] {
        let g = group(name);
        assert_eq!(
            top_degree_check(g).unwrap(),
            BigInt::from(g.order()),
            "{name}"
        );
    }
}

#[test]
fn representative_of_identity_is_one() {
    for name in ["C2", "C3", "D3"] {
        let g = group(name);
        let o = Oracle::new(g, Exec::Sequential).unwrap();
        assert_eq!(
            o.representative(&g.identity()).unwrap().as_constant(),
            Some(q(1))
        );
        assert_eq!(
            o.representative(&g.long_element()).unwrap().degree(),
            Some(g.num_positive_roots())
        );
    }
}

#[test]
fn representatives_do_not_depend_on_the_word() {
    for name in ["C2", "C3", "D3"] {
        let g = group(name);
        let o = Oracle::new(g, Exec::Parallel).unwrap();
        let top = o.representative(&g.long_element()).unwrap();
        for w in g.elements().iter() {
            let rest = w.inverse().multiply(&g.long_element()).unwrap();
            for word in rest.all_reduced_words() {
                let b = o.roots().apply_word(&word, top).unwrap();
                assert_eq!(&b, o.representative(w).unwrap(), "{name} {w} [{word}]");
            }
        }
    }
}

#[test]
fn sequential_and_parallel_oracles_agree() {
    let g = group("C3");
    let a = Oracle::new(g, Exec::Sequential).unwrap();
    let b = Oracle::new(g, Exec::Parallel).unwrap();
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn json_round_trip() {
    let g = group("D3");
    let o = Oracle::new(g, Exec::Sequential).unwrap();
    let back = Oracle::from_json(g, &o.to_json()).unwrap();
    assert_eq!(back.to_json(), o.to_json());
    assert!(Oracle::from_json(group("C3"), &o.to_json()).is_none());
    let w0 = g.long_element().to_string();
    let mut broken = o.to_json();
    for entry in broken["representatives"].as_array_mut().unwrap() {
        if entry["w"] == w0.as_str() {
            entry["terms"] = serde_json::json!([]);
        }
    }
    assert!(Oracle::from_json(g, &broken).is_none());
    let mut short = o.to_json();
    short["representatives"].as_array_mut().unwrap().pop();
    assert!(Oracle::from_json(g, &short).is_none());
}

#[test]
fn reference_constants() {
    let c4 = group("C4");
    let (u, v) = (el(&c4, "-4,1,2,3"), el(&c4, "1,-4,2,3"));
    assert_eq!(
        oracle_constant(&u, &v, &by_word(&c4, "3,2,1,4,3,2,1")).unwrap(),
        q(2)
    );
    assert_eq!(
        oracle_constant(&u, &v, &by_word(&c4, "4,3,2,1,4,3,2")).unwrap(),
        q(1)
    );
    let d3 = group("D3");
    let (u, v) = (el(&d3, "1,3,2"), el(&d3, "-3,1,-2"));
    assert_eq!(
        oracle_constant(&u, &v, &by_word(&d3, "1,2,1")).unwrap(),
        q(0)
    );
    assert_eq!(
        oracle_constant(&u, &v, &by_word(&d3, "2,3,1")).unwrap(),
        q(1)
    );
}

#[test]
fn identity_is_the_unit() {
    for name in ["C3", "D3", "D4"] {
        let g = group(name);
        let o = Oracle::shared(g).unwrap();
        let e = g.identity();
        for v in g.elements().iter() {
            for w in g.elements().of_length(v.length()) {
                let c = o.constant(&e, v, w).unwrap();
                assert_eq!(c, q(i64::from(v == w)), "{name} {v} {w}");
            }
        }
    }
}

#[test]
fn length_mismatch_is_an_error() {
    let g = group("C2");
    let s1 = g.simple_reflection(1).unwrap();
    assert!(matches!(
        oracle_constant(&s1, &s1, &s1),
        Err(OracleError::LengthMismatch { w: 1, uv: 2 })
    ));
}

/// Every structure constant of the small groups is a nonnegative integer;
/// `integer_constant` panics otherwise.
#[test]
fn constants_are_nonnegative_integers() {
    for name in ["C2", "D3"] {
        let g = group(name);
        let o = Oracle::shared(g).unwrap();
        let elements: Vec<_> = g.elements().iter().cloned().collect();
        for u in &elements {
            for v in &elements {
                let len = u.length() + v.length();
                if len > g.elements().max_length() {
                    continue;
                }
                for w in g.elements().of_length(len) {
                    o.integer_constant(u, v, w).unwrap();
                }
            }
        }
    }
    // Chevalley products in C3.
    let g = group("C3");
    let o = Oracle::shared(g).unwrap();
    for i in 1..=3 {
        let s = g.simple_reflection(i).unwrap();
        for v in g.elements().iter().filter(|v| v.length() < 9) {
            for w in g.elements().of_length(v.length() + 1) {
                o.integer_constant(&s, v, w).unwrap();
            }
        }
    }
}

#[test]
fn commutativity() {
    let g = group("C3");
    let o = Oracle::shared(g).unwrap();
    for u in g.elements().of_length(2) {
        for v in g.elements().of_length(3) {
            for w in g.elements().of_length(5) {
                assert_eq!(o.constant(u, v, w).unwrap(), o.constant(v, u, w).unwrap());
            }
        }
    }
}

fn braid_check(name: &str, f: &ExactPolynomial) {
    let g = group(name);
    let rs = RootSystem::new(g).unwrap();
    for w in g.elements().iter() {
        let words = w.all_reduced_words();
        let first = rs.apply_word(&words[0], f).unwrap();
        for other in &words[1..] {
            assert_eq!(rs.apply_word(other, f).unwrap(), first, "{name} [{other}]");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn divided_differences_square_to_zero(f in (2usize..=4).prop_flat_map(random_poly)) {
        let n = f.nvars();
        for name in [format!("C{n}"), format!("D{n}")] {
            let rs = RootSystem::new(group(&name)).unwrap();
            for alpha in rs.positive_roots() {
                let once = alpha.divided_difference(&f).unwrap();
                prop_assert!(alpha.divided_difference(&once).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn divided_differences_satisfy_braid_relations(f in random_poly(2)) {
        braid_check("C2", &f);
        braid_check("D2", &f);
    }

    #[test]
    fn divided_differences_satisfy_braid_relations_rank_three(f in random_poly(3)) {
        braid_check("C3", &f);
        braid_check("D3", &f);
    }
}
