use std::collections::{BTreeMap, BTreeSet, HashSet};

use schubert_clans::action::act_simple;
use schubert_clans::richardson::clan_to_pair;
use schubert_clans::{schubert_product, Clan, Exec, WeakOrderGraph, WeylGroup, Word};

fn build(name: &str) -> WeakOrderGraph {
    WeakOrderGraph::build(name.parse().unwrap(), Exec::Parallel)
}

fn clan(s: &str) -> Clan {
    s.parse().unwrap()
}

fn by_word(g: &WeylGroup, w: &str) -> schubert_clans::SignedPermutation {
    g.evaluate_reduced(&w.parse::<Word>().unwrap()).unwrap()
}

#[test]
fn type_d_graphs_have_single_edges() {
    for name in ["D3", "D4", "D5"] {
        let g = build(name);
        assert_eq!(g.double_edge_count(), 0, "{name}");
        assert!(!g.edges().is_empty());
    }
}

/// Vertex, edge and double-edge counts. Generated here; the edge set is
/// recomputed below by a search from the bottom of the graph.
#[test]
fn graph_sizes() {
    let expected = [
        ("C1", 3, 2, 0),
        ("C2", 11, 12, 1),
        ("C3", 45, 70, 6),
        ("C4", 201, 408, 33),
        ("D3", 10, 12, 0),
        ("D4", 38, 64, 0),
        ("D5", 156, 340, 0),
    ];
    for (name, v, e, d) in expected {
        let g = build(name);
        assert_eq!(
            (g.vertices().len(), g.edges().len(), g.double_edge_count()),
            (v, e, d),
            "{name}"
        );
    }
}

#[test]
fn edges_match_a_second_traversal() {
    for name in ["C2", "C3", "D3", "D4"] {
        let group: WeylGroup = name.parse().unwrap();
        let ty = group.cartan_type();
        let g = build(name);
        let built: BTreeSet<(String, String, usize, bool)> = g
            .edges()
            .iter()
            .map(|e| {
                (
                    g.vertices()[e.src].to_string(),
                    g.vertices()[e.dst].to_string(),
                    e.label,
                    e.double,
                )
            })
            .collect();

        // Depth-first search from closed orbits (no incoming edges), in
        // reverse letter order.
        let targets: HashSet<&Clan> = g.edges().iter().map(|e| &g.vertices()[e.dst]).collect();
        let mut stack: Vec<Clan> = g
            .vertices()
            .iter()
            .filter(|c| !targets.contains(c))
            .cloned()
            .collect();
        let mut seen: HashSet<Clan> = stack.iter().cloned().collect();
        let mut found = BTreeSet::new();
        while let Some(c) = stack.pop() {
            for i in (1..=group.rank()).rev() {
                let s = act_simple(ty, i, &c).unwrap();
                if s.moved {
                    found.insert((c.to_string(), s.output.to_string(), i, s.is_double));
                    if seen.insert(s.output.clone()) {
                        stack.push(s.output);
                    }
                }
            }
        }
        assert_eq!(seen.len(), g.vertices().len(), "{name}");
        assert_eq!(found, built, "{name}");
    }
}

#[test]
fn top_is_the_only_sink() {
    for name in ["C2", "C3", "C4", "D3", "D4"] {
        let g = build(name);
        let sources: HashSet<usize> = g.edges().iter().map(|e| e.src).collect();
        for (i, c) in g.vertices().iter().enumerate() {
            assert_eq!(!sources.contains(&i), c == g.top(), "{name} {c}");
        }
        assert_eq!(g.codim(g.top()), Some(0));
        let group: WeylGroup = name.parse().unwrap();
        assert_eq!(
            g.top(),
            &Clan::dense_orbit(group.cartan_type(), group.rank())
        );
    }
}

#[test]
fn codim_drops_by_one_along_each_edge() {
    for name in ["C3", "C4", "D4", "D5"] {
        let g = build(name);
        for e in g.edges() {
            let (a, b) = (&g.vertices()[e.src], &g.vertices()[e.dst]);
            assert_eq!(g.codim(a).unwrap(), g.codim(b).unwrap() + 1, "{name}");
        }
    }
}

#[test]
fn decomposition_of_the_top_is_the_identity() {
    let g = build("C3");
    let d = g.brion_decomposition(g.top(), Exec::Sequential).unwrap();
    let e = "C3".parse::<WeylGroup>().unwrap().identity();
    assert_eq!(d.terms, BTreeMap::from([(e, 1)]));
}

#[test]
fn reference_decompositions() {
    let c4: WeylGroup = "C4".parse().unwrap();
    let g = build("C4");
    let d = g
        .brion_decomposition(&clan("+,-,1,2,2,1,+,-"), Exec::Parallel)
        .unwrap();
    let expected = BTreeMap::from([
        (by_word(&c4, "3,2,1,4,3,2,1"), 2),
        (by_word(&c4, "2,1,3,4,3,2,1"), 2),
        (by_word(&c4, "1,2,3,4,3,2,1"), 2),
        (by_word(&c4, "4,3,2,1,4,3,2"), 1),
    ]);
    assert_eq!(d.codim, 7);
    assert_eq!(d.terms, expected);

    let d3: WeylGroup = "D3".parse().unwrap();
    let g = build("D3");
    let d = g
        .brion_decomposition(&clan("-,+,-,+,-,+"), Exec::Sequential)
        .unwrap();
    let expected = BTreeMap::from([(by_word(&d3, "2,3,1"), 1), (by_word(&d3, "3,1,2"), 1)]);
    assert_eq!(d.terms, expected);
}

#[test]
fn decompositions_are_word_independent() {
    for name in ["C3", "D3", "D4"] {
        let g = build(name);
        let ty = g.group().cartan_type();
        for c in g.vertices() {
            let d = g.brion_decomposition(c, Exec::Parallel).unwrap();
            assert!(d.word_dependence(ty).is_empty(), "{name} {c}");
        }
    }
}

#[test]
fn decompositions_agree_with_products() {
    for name in ["C2", "C3", "C4", "D3", "D4"] {
        let g = build(name);
        let ty = g.group().cartan_type();
        for c in g.vertices().iter().filter(|c| c.avoids_1212()) {
            let pair = clan_to_pair(ty, c).unwrap();
            let product = schubert_product(&pair.u, &pair.v, Exec::Parallel).unwrap();
            let d = g.brion_decomposition(c, Exec::Parallel).unwrap();
            assert_eq!(product.terms, d.terms, "{name} {c}");
        }
    }
}

#[test]
fn dot_export() {
    let g = build("D3");
    let dot = g.export_dot();
    assert_eq!(dot, build("D3").export_dot());
    assert!(dot.contains("\"1,2,+,-,1,2\" [codim=0, top=true"));
    assert!(!dot.contains("double=true"));
    assert!(build("C2").export_dot().contains("double=true"));
    let c1 = WeakOrderGraph::build("C1".parse().unwrap(), Exec::Sequential).export_dot();
    assert_eq!(c1.lines().filter(|l| l.contains("codim=")).count(), 3);
}

#[test]
fn json_export() {
    let g = build("C2");
    let json = g.to_json();
    assert_eq!(json["type"], "C");
    assert_eq!(json["rank"], 2);
    assert_eq!(json["top"], "1,2,2,1");
    assert_eq!(json["vertices"].as_array().unwrap().len(), 11);
    let edges = json["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 12);
    assert_eq!(edges.iter().filter(|e| e["double"] == true).count(), 1);
    for e in edges {
        assert!(e["src"].is_string() && e["dst"].is_string() && e["label"].is_u64());
    }
}
