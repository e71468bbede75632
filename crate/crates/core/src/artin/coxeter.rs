//! Labelled Coxeter graphs: spherical subsets, FC type, links and the
//! disjoint-link witness.

use std::collections::{BTreeMap, VecDeque};
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// Leading principal minors must exceed this to count as positive.
pub const MINOR_TOLERANCE: f64 = 1e-9;

/// A simple graph on generators with edge labels `m(s,t) >= 2`; a missing
/// edge means `m = ∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    generators: Vec<String>,
    labels: BTreeMap<(usize, usize), u32>,
}

impl CoxeterGraph {
    pub fn new<S: AsRef<str>>(generators: &[S], edges: &[(S, S, u32)]) -> Result<Self> {
        let generators: Vec<String> = generators.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::Format(format!("duplicate generator `{g}`")));
            }
        }
        let mut graph = Self {
            generators,
            labels: BTreeMap::new(),
        };
        for (s, t, m) in edges {
            let (a, b) = (graph.index(s.as_ref())?, graph.index(t.as_ref())?);
            if *m < 2 {
                return Err(Error::BadLabel(*m));
            }
            if a == b {
                return Err(Error::Format(format!("loop at generator `{}`", s.as_ref())));
            }
            if graph.labels.insert((a.min(b), a.max(b)), *m).is_some() {
                return Err(Error::Format(format!("repeated edge {}-{}", s.as_ref(), t.as_ref())));
            }
        }
        Ok(graph)
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn names(&self, subset: &[usize]) -> Vec<String> {
        subset.iter().map(|&i| self.generators[i].clone()).collect()
    }

    /// `m(s,t)`, with `None` standing for `∞`.
    pub fn label(&self, s: usize, t: usize) -> Option<u32> {
        self.labels.get(&(s.min(t), s.max(t))).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.labels.iter().map(|(&(a, b), &m)| (a, b, m))
    }

    pub fn adjacent(&self, s: usize, t: usize) -> bool {
        s != t && self.label(s, t).is_some()
    }

    pub fn is_right_angled(&self) -> bool {
        self.labels.values().all(|&m| m == 2)
    }

    /// `B[s][s] = 1`, `B[s][t] = -cos(π / m(s,t))`, with `-1` for `m = ∞`.
    pub fn cosine_matrix(&self, subset: &[usize]) -> Vec<Vec<f64>> {
        subset
            .iter()
            .map(|&s| {
                subset
                    .iter()
                    .map(|&t| match (s == t, self.label(s, t)) {
                        (true, _) => 1.0,
                        (false, Some(m)) => -(PI / f64::from(m)).cos(),
                        (false, None) => -1.0,
                    })
                    .collect()
            })
            .collect()
    }

    pub fn leading_minors(&self, subset: &[usize]) -> Vec<f64> {
        let b = self.cosine_matrix(subset);
        (1..=subset.len())
            .map(|k| determinant(b[..k].iter().map(|row| row[..k].to_vec()).collect()))
            .collect()
    }

    /// Finite type: the cosine matrix is positive definite.
    pub fn is_finite_type(&self, subset: &[usize]) -> bool {
        self.leading_minors(subset).iter().all(|&d| d > MINOR_TOLERANCE)
    }

    /// Complete subgraphs (including the empty one), in lexicographic order.
    pub fn cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.grow_cliques(0, &mut current, &mut out);
        out.sort();
        out
    }

    fn grow_cliques(&self, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for s in start..self.rank() {
            if current.iter().all(|&t| self.adjacent(s, t)) {
                current.push(s);
                self.grow_cliques(s + 1, current, out);
                current.pop();
            }
        }
    }

    /// FC type: every clique is spherical. Returns the smallest failing
    /// clique otherwise.
    pub fn fc_violation(&self) -> Option<Vec<usize>> {
        let mut cliques = self.cliques();
        cliques.sort_by_key(|c| c.len());
        cliques.into_iter().find(|c| !self.is_finite_type(c))
    }

    pub fn is_fc_type(&self) -> bool {
        self.fc_violation().is_none()
    }

    /// Spherical subsets; for FC graphs these are exactly the cliques.
    pub fn spherical_subsets(&self) -> Vec<Vec<usize>> {
        self.cliques().into_iter().filter(|c| self.is_finite_type(c)).collect()
    }

    pub fn distances_from(&self, s: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.rank()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..self.rank() {
                if self.adjacent(u, v) && dist[v].is_none() {
                    dist[v] = dist[u].map(|d| d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Graph diameter, `None` when disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for s in 0..self.rank() {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Neighbours of `s`.
    pub fn link(&self, s: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&t| self.adjacent(s, t)).collect()
    }

    /// Generators named by the link of `s`, which label the stabiliser of
    /// the hyperplane dual to `s`.
    pub fn hyperplane_stabilizer_label(&self, s: &str) -> Result<Vec<String>> {
        Ok(self.names(&self.link(self.index(s)?)))
    }

    /// The first pair `s < t` at distance at least 3 (or in different
    /// components) with disjoint links.
    pub fn disjoint_link_pair(&self) -> Option<(usize, usize)> {
        (0..self.rank()).find_map(|s| {
            let dist = self.distances_from(s);
            let ls = self.link(s);
            (s + 1..self.rank()).find_map(|t| {
                let far = dist[t].is_none_or(|d| d >= 3);
                let disjoint = self.link(t).iter().all(|u| !ls.contains(u));
                (far && disjoint).then_some((s, t))
            })
        })
    }
}

fn determinant(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("non-empty range");
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
        }
    }
    det
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FcReport {
    pub fc_type: bool,
    pub failing_clique: Option<Vec<String>>,
    pub cliques_checked: usize,
}

impl CoxeterGraph {
    pub fn fc_report(&self) -> FcReport {
        FcReport {
            fc_type: self.is_fc_type(),
            failing_clique: self.fc_violation().map(|c| self.names(&c)),
            cliques_checked: self.cliques().len(),
        }
    }
}
