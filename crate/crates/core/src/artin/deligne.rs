//! Truncated Deligne complexes.
//!
//! Vertices are cosets `a·A_T` with `T` spherical, kept when the canonical
//! coset representative has word length at most the radius. Edges join
//! `a·A_T` to `a·A_{T ∪ {t}}`, labelled by `t`. The radius bounds word
//! length, not graph distance: vertex stabilisers are infinite, so metric
//! balls are infinite.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use super::coxeter::CoxeterGraph;
use super::normal_form::{DisplayWord, Letter, NormalFormOracle, TraceOracle, Word};
use crate::complex::CubeComplex;
use crate::cubes::vertex_link;
use crate::error::{Error, Result};

/// Built-in normal-form oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinOracle {
    /// Free reduction; needs a graph without edges.
    Free,
    /// Commutation normal forms; needs every label to be 2.
    RightAngled,
}

impl BuiltinOracle {
    /// The oracle for `graph`, if one of the built-ins applies.
    pub fn select(graph: &CoxeterGraph) -> Option<Self> {
        if graph.edges().next().is_none() {
            Some(Self::Free)
        } else if graph.is_right_angled() {
            Some(Self::RightAngled)
        } else {
            None
        }
    }

    pub fn build(self, graph: &CoxeterGraph) -> Result<TraceOracle> {
        match self {
            Self::Free if graph.edges().next().is_none() => Ok(TraceOracle::free(graph.rank())),
            Self::RightAngled if graph.is_right_angled() => {
                let commuting: Vec<(usize, usize)> = graph.edges().map(|(a, b, _)| (a, b)).collect();
                Ok(TraceOracle::right_angled_artin(graph.rank(), &commuting))
            }
            _ => Err(Error::NoOracle),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coset {
    pub rep: Word,
    /// Sorted generator indices of the spherical subset.
    pub subset: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeligneBall {
    pub radius: usize,
    pub generators: Vec<String>,
    /// Sorted by vertex id.
    pub cosets: Vec<Coset>,
    /// `(a, b, added generator)` with `a < b` positions into `cosets`.
    pub edges: Vec<(usize, usize, usize)>,
}

/// Enumerates the cosets of spherical special subgroups with
/// representatives of length at most `radius`.
pub fn deligne_ball(
    graph: &CoxeterGraph,
    radius: usize,
    oracle: Option<&dyn NormalFormOracle>,
) -> Result<DeligneBall> {
    if let Some(bad) = graph.fc_violation() {
        return Err(Error::NotFcType(graph.names(&bad)));
    }
    let builtin;
    let oracle: &dyn NormalFormOracle = match oracle {
        Some(o) => o,
        None => {
            builtin = BuiltinOracle::select(graph).ok_or(Error::NoOracle)?.build(graph)?;
            &builtin
        }
    };
    let spherical = graph.spherical_subsets();

    // All group elements of length <= radius, layer by layer.
    let mut elements: Vec<Word> = vec![Vec::new()];
    let mut seen: HashSet<Word> = HashSet::from([Vec::new()]);
    let mut layer = vec![Vec::new()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..graph.rank() {
                for inverse in [false, true] {
                    let mut x = w.clone();
                    x.push(Letter::new(g, inverse));
                    let nf = oracle.normal_form(&x);
                    if nf.len() == w.len() + 1 && seen.insert(nf.clone()) {
                        next.push(nf);
                    }
                }
            }
        }
        elements.extend(next.iter().cloned());
        layer = next;
    }

    let mut cosets: BTreeSet<Coset> = BTreeSet::new();
    for w in &elements {
        for t in &spherical {
            let rep = oracle.coset_representative(w, t);
            if rep.len() <= radius {
                cosets.insert(Coset {
                    rep,
                    subset: t.clone(),
                });
            }
        }
    }

    let mut ball = DeligneBall {
        radius,
        generators: graph.generators().to_vec(),
        cosets: Vec::new(),
        edges: Vec::new(),
    };
    let mut by_id: Vec<(String, Coset)> = cosets.into_iter().map(|c| (ball.id_of(&c), c)).collect();
    by_id.sort();
    ball.cosets = by_id.into_iter().map(|(_, c)| c).collect();
    let position: BTreeMap<&Coset, usize> = ball.cosets.iter().enumerate().map(|(i, c)| (c, i)).collect();

    let mut edges = Vec::new();
    for (i, c) in ball.cosets.iter().enumerate() {
        for t in 0..graph.rank() {
            if c.subset.contains(&t) {
                continue;
            }
            let mut bigger = c.subset.clone();
            bigger.push(t);
            bigger.sort_unstable();
            if !spherical.contains(&bigger) {
                continue;
            }
            let up = Coset {
                rep: oracle.coset_representative(&c.rep, &bigger),
                subset: bigger,
            };
            if let Some(&j) = position.get(&up) {
                edges.push((i.min(j), i.max(j), t));
            }
        }
    }
    edges.sort_unstable();
    ball.edges = edges;
    Ok(ball)
}

impl DeligneBall {
    /// Vertex id `rep|T`, e.g. `s.t^-1|u` or `1|s,t`.
    pub fn id_of(&self, c: &Coset) -> String {
        let rep = DisplayWord {
            word: &c.rep,
            names: &self.generators,
        };
        let subset: Vec<&str> = c.subset.iter().map(|&i| self.generators[i].as_str()).collect();
        format!("{rep}|{}", subset.join(","))
    }

    pub fn ids(&self) -> Vec<String> {
        self.cosets.iter().map(|c| self.id_of(c)).collect()
    }

    /// Id of the base vertex `A_∅ = {1}`.
    pub fn base_id(&self) -> String {
        "1|".to_string()
    }

    /// The 1-skeleton as a window; cosets whose representative has maximal
    /// length form the boundary.
    pub fn to_complex(&self) -> Result<CubeComplex> {
        let ids = self.ids();
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(a, b, _)| (ids[a].clone(), ids[b].clone()))
            .collect();
        let interior: Vec<String> = self
            .cosets
            .iter()
            .zip(&ids)
            .filter(|(c, _)| c.rep.len() < self.radius)
            .map(|(_, id)| id.clone())
            .collect();
        CubeComplex::build(&ids, &edges, Some(&interior))
    }

    pub fn sidecar(&self) -> Sidecar {
        let ids = self.ids();
        let cosets = self
            .cosets
            .iter()
            .zip(&ids)
            .map(|(c, id)| {
                let rep = DisplayWord {
                    word: &c.rep,
                    names: &self.generators,
                };
                (
                    id.clone(),
                    CosetEntry {
                        rep: rep.to_string(),
                        subset: c.subset.iter().map(|&i| self.generators[i].clone()).collect(),
                    },
                )
            })
            .collect();
        let edge_labels = self
            .edges
            .iter()
            .map(|&(a, b, t)| (format!("{} -- {}", ids[a], ids[b]), self.generators[t].clone()))
            .collect();
        Sidecar { cosets, edge_labels }
    }

    /// Whether edge labels at the base vertex map its link onto the Coxeter
    /// graph: every generator labels an edge at the base, and every edge of
    /// the graph labels a square at the base.
    pub fn base_link_surjects(&self, graph: &CoxeterGraph) -> Result<bool> {
        let complex = self.to_complex()?;
        let base = complex.vertex(&self.base_id())?;
        let link = vertex_link(&complex, base);
        let label_of = |w: usize| {
            self.edges
                .iter()
                .find(|&&(a, b, _)| (a, b) == (base.min(w), base.max(w)))
                .map(|&(_, _, t)| t)
        };
        let labels: Vec<Option<usize>> = link.vertices.iter().map(|&w| label_of(w)).collect();
        let vertices_hit = (0..graph.rank()).all(|s| labels.contains(&Some(s)));
        let edges_hit = graph.edges().all(|(s, t, _)| {
            link.edges.iter().any(|&(i, j)| {
                let pair = (labels[i], labels[j]);
                pair == (Some(s), Some(t)) || pair == (Some(t), Some(s))
            })
        });
        Ok(vertices_hit && edges_hit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetEntry {
    pub rep: String,
    #[serde(rename = "T")]
    pub subset: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sidecar {
    pub cosets: BTreeMap<String, CosetEntry>,
    pub edge_labels: BTreeMap<String, String>,
}
