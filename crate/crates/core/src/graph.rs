//! The weak-order graph on orbit clans and Brion's decomposition of an
//! orbit-closure class into Schubert classes.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::action::{act_word_unchecked, check_clan, step, Rule};
use crate::clan::Clan;
use crate::error::ActionError;
use crate::par::Exec;
use crate::weyl::{CartanType, SignedPermutation, WeylGroup, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: usize,
    pub double: bool,
}

/// Orbit clans of one group, with an edge `γ -> s_i · γ` whenever the
/// reflection moves `γ`.
#[derive(Clone, Debug)]
pub struct WeakOrderGraph {
    group: WeylGroup,
    vertices: Vec<Clan>,
    index: HashMap<Clan, usize>,
    edges: Vec<Edge>,
    top: usize,
    codim: Vec<usize>,
}

impl WeakOrderGraph {
    pub fn build(group: WeylGroup, exec: Exec) -> WeakOrderGraph {
        let (ty, n) = (group.cartan_type(), group.rank());
        let vertices = Clan::enumerate(ty, n);
        let index: HashMap<Clan, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let moves = exec.map(&vertices, |clan| {
            (1..=n)
                .map(|i| (i, step(ty, i, clan)))
                .filter(|(_, (_, rule))| *rule != Rule::Fixed)
                .map(|(i, (out, rule))| (i, out, rule == Rule::MirroredNumbers))
                .collect::<Vec<_>>()
        });
        let edges: Vec<Edge> = moves
            .into_iter()
            .enumerate()
            .flat_map(|(src, out)| {
                let index = &index;
                out.into_iter().map(move |(label, clan, double)| Edge {
                    src,
                    dst: index[&clan],
                    label,
                    double,
                })
            })
            .collect();
        let top = index[&Clan::dense_orbit(ty, n)];
        let codim = codimensions(vertices.len(), &edges, top);
        WeakOrderGraph {
            group,
            vertices,
            index,
            edges,
            top,
            codim,
        }
    }

    pub fn group(&self) -> WeylGroup {
        self.group
    }

    pub fn vertices(&self) -> &[Clan] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, clan: &Clan) -> Option<usize> {
        self.index.get(clan).copied()
    }

    pub fn top(&self) -> &Clan {
        &self.vertices[self.top]
    }

    /// Codimension of the orbit closure: the distance to the dense orbit.
    /// `None` for clans outside the graph or with no path to the top.
    pub fn codim(&self, clan: &Clan) -> Option<usize> {
        self.index_of(clan)
            .map(|i| self.codim[i])
            .filter(|&d| d != usize::MAX)
    }

    pub fn double_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.double).count()
    }

    /// `[Y_γ] = Σ 2^{D(w)} S_w` over the `w` of length `codim(γ)` carrying
    /// `γ` to the dense orbit. One reduced word per element is tested.
    pub fn brion_decomposition(
        &self,
        clan: &Clan,
        exec: Exec,
    ) -> Result<BrionDecomposition, ActionError> {
        check_clan(self.group, clan)?;
        let d = self.codim(clan).expect("every orbit clan reaches the top");
        let ty = self.group.cartan_type();
        let top = self.top();
        let candidates = self.group.elements_of_length(d);
        let hits = exec.map(&candidates, |w| {
            let word = w.reduced_word();
            let (end, doubles) = act_word_unchecked(ty, word.letters(), clan);
            (end == *top).then(|| (w.clone(), 1u64 << doubles))
        });
        Ok(BrionDecomposition {
            source: clan.clone(),
            codim: d,
            terms: hits.into_iter().flatten().collect(),
        })
    }

    /// DOT rendering. Vertices are sorted by their text form; the dense orbit
    /// is marked `top=true` and double edges `double=true`.
    pub fn export_dot(&self) -> String {
        let names: Vec<String> = self.vertices.iter().map(Clan::to_string).collect();
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.group);
        for &v in &order {
            let _ = write!(out, "  \"{}\" [codim={}", names[v], self.codim[v]);
            if v == self.top {
                out.push_str(", top=true, shape=doublecircle");
            }
            out.push_str("];\n");
        }
        let mut edges: Vec<(&str, &str, usize, bool)> = self
            .edges
            .iter()
            .map(|e| {
                (
                    names[e.src].as_str(),
                    names[e.dst].as_str(),
                    e.label,
                    e.double,
                )
            })
            .collect();
        edges.sort();
        for (src, dst, label, double) in edges {
            let _ = write!(out, "  \"{src}\" -> \"{dst}\" [label={label}");
            if double {
                out.push_str(", double=true, color=\"black:black\"");
            }
            out.push_str("];\n");
        }
        out.push_str("}\n");
        out
    }

    /// The JSON dump `{vertices, edges:[{src,dst,label,double}], top, type, rank}`.
    pub fn to_json(&self) -> serde_json::Value {
        let names: Vec<String> = self.vertices.iter().map(Clan::to_string).collect();
        let mut vertices = names.clone();
        vertices.sort();
        let mut edges: Vec<JsonEdge> = self
            .edges
            .iter()
            .map(|e| JsonEdge {
                src: names[e.src].clone(),
                dst: names[e.dst].clone(),
                label: e.label,
                double: e.double,
            })
            .collect();
        edges.sort_by(|a, b| (&a.src, &a.dst, a.label).cmp(&(&b.src, &b.dst, b.label)));
        let dump = JsonGraph {
            vertices,
            edges,
            top: names[self.top].clone(),
            ty: self.group.cartan_type(),
            rank: self.group.rank(),
        };
        serde_json::to_value(dump).expect("graph dump serializes")
    }
}

#[derive(Serialize)]
struct JsonEdge {
    src: String,
    dst: String,
    label: usize,
    double: bool,
}

#[derive(Serialize)]
struct JsonGraph {
    vertices: Vec<String>,
    edges: Vec<JsonEdge>,
    top: String,
    #[serde(rename = "type")]
    ty: CartanType,
    rank: usize,
}

/// Distance from each vertex to `top` along edges, by BFS on reversed edges.
fn codimensions(count: usize, edges: &[Edge], top: usize) -> Vec<usize> {
    let mut incoming = vec![Vec::new(); count];
    for e in edges {
        incoming[e.dst].push(e.src);
    }
    let mut codim = vec![usize::MAX; count];
    codim[top] = 0;
    let mut queue = VecDeque::from([top]);
    while let Some(v) = queue.pop_front() {
        for &u in &incoming[v] {
            if codim[u] == usize::MAX {
                codim[u] = codim[v] + 1;
                queue.push_back(u);
            }
        }
    }
    codim
}

/// The terms `w ↦ 2^{D(w)}` of an orbit-closure class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrionDecomposition {
    pub source: Clan,
    pub codim: usize,
    pub terms: BTreeMap<SignedPermutation, u64>,
}

impl BrionDecomposition {
    /// Reruns every term with every reduced word of its element and returns
    /// the words whose endpoint or double-edge count disagree.
    pub fn word_dependence(&self, ty: CartanType) -> Vec<Word> {
        let mut bad = Vec::new();
        for (w, &coeff) in &self.terms {
            for word in w.all_reduced_words() {
                let (end, doubles) = act_word_unchecked(ty, word.letters(), &self.source);
                let top = Clan::dense_orbit(ty, w.rank());
                if end != top || 1u64 << doubles != coeff {
                    bad.push(word);
                }
            }
        }
        bad
    }
}
