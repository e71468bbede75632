//! Median-graph model of a cube complex.
//!
//! A [`CubeComplex`] is its own 1-skeleton with the hop metric. Vertices are
//! opaque string identifiers stored in lexicographic order, so the vertex
//! index order is the deterministic output order everywhere in the crate.
//!
//! Infinite complexes are handled through finite windows: an optional
//! interior flag per vertex marks where the window agrees with the ambient
//! complex. Queries touching non-interior vertices carry a
//! `boundary_affected` annotation instead of failing.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Index of a vertex inside a [`CubeComplex`].
pub type Vertex = usize;

const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct CubeComplex {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    interior: Option<Vec<bool>>,
    dist: Vec<u32>,
}

impl PartialEq for CubeComplex {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges && self.interior == other.interior
    }
}

impl Eq for CubeComplex {}

impl CubeComplex {
    /// Builds a connected simple graph and fills the all-pairs metric.
    ///
    /// The median property is not checked here; see [`CubeComplex::is_median_graph`].
    pub fn build<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S)],
        interior: Option<&[S]>,
    ) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Empty);
        }
        let mut names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        names.sort();
        for pair in names.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex(pair[0].clone()));
            }
        }
        let index: HashMap<String, Vertex> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownEndpoint(s.to_string()))
        };

        let mut edge_list = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (u, v) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if u == v {
                return Err(Error::SelfLoop(a.as_ref().to_string()));
            }
            edge_list.push((u.min(v), u.max(v)));
        }
        edge_list.sort_unstable();
        edge_list.dedup();

        let n = names.len();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edge_list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }

        let interior = match interior {
            None => None,
            Some(list) => {
                let mut flags = vec![false; n];
                for v in list {
                    let i = index
                        .get(v.as_ref())
                        .copied()
                        .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))?;
                    flags[i] = true;
                }
                Some(flags)
            }
        };

        let dist: Vec<u32> = (0..n)
            .into_par_iter()
            .flat_map_iter(|s| bfs(&adjacency, s))
            .collect();
        if let Some(far) = (0..n).find(|&v| dist[v] == UNREACHED) {
            return Err(Error::Disconnected(names[far].clone(), names[0].clone()));
        }

        Ok(Self {
            names,
            index,
            adjacency,
            edges: edge_list,
            interior,
            dist,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    #[inline]
    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.names.len() + v]
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    pub fn has_window(&self) -> bool {
        self.interior.is_some()
    }

    pub fn is_interior(&self, v: Vertex) -> bool {
        self.interior.as_ref().is_none_or(|f| f[v])
    }

    pub fn interior_vertices(&self) -> Vec<Vertex> {
        (0..self.vertex_count()).filter(|&v| self.is_interior(v)).collect()
    }

    /// Vertex indices of the declared interior, or `None` without a window.
    pub fn interior_flags(&self) -> Option<&[bool]> {
        self.interior.as_deref()
    }

    pub fn vertex_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.vertex_count())
    }

    #[inline]
    pub fn on_geodesic(&self, x: Vertex, z: Vertex, y: Vertex) -> bool {
        self.dist(x, z) + self.dist(z, y) == self.dist(x, y)
    }

    /// The interval `I(x, y)`: every vertex on some geodesic from `x` to `y`.
    pub fn interval(&self, x: Vertex, y: Vertex) -> Interval {
        let members = (0..self.vertex_count())
            .filter(|&z| self.on_geodesic(x, z, y))
            .collect();
        Interval {
            source: x,
            target: y,
            members,
        }
    }

    /// Vertices `m` lying in all three pairwise intervals of `(x, y, z)`.
    pub fn median_candidates(&self, x: Vertex, y: Vertex, z: Vertex) -> Vec<Vertex> {
        (0..self.vertex_count())
            .filter(|&m| {
                self.on_geodesic(x, m, y) && self.on_geodesic(y, m, z) && self.on_geodesic(x, m, z)
            })
            .collect()
    }

    pub fn median(&self, x: Vertex, y: Vertex, z: Vertex) -> Result<Vertex> {
        match self.median_candidates(x, y, z).as_slice() {
            [m] => Ok(*m),
            _ => Err(Error::NotMedian(
                self.names[x].clone(),
                self.names[y].clone(),
                self.names[z].clone(),
            )),
        }
    }

    /// Exhaustive median check over all vertex triples.
    ///
    /// Returns the lexicographically first offending triple when some triple
    /// has zero or several medians.
    pub fn is_median_graph(&self) -> MedianVerdict {
        let n = self.vertex_count();
        let witness = (0..n)
            .into_par_iter()
            .filter_map(|x| self.first_bad_triple_from(x))
            .min();
        match witness {
            None => MedianVerdict {
                is_median: true,
                witness: None,
            },
            Some((x, y, z, count)) => MedianVerdict {
                is_median: false,
                witness: Some(MedianWitness {
                    triple: [x, y, z],
                    median_count: count,
                }),
            },
        }
    }

    fn first_bad_triple_from(&self, x: Vertex) -> Option<(Vertex, Vertex, Vertex, usize)> {
        let n = self.vertex_count();
        for y in x + 1..n {
            let between: Vec<Vertex> = (0..n).filter(|&m| self.on_geodesic(x, m, y)).collect();
            for z in y + 1..n {
                let count = between
                    .iter()
                    .filter(|&&m| self.on_geodesic(x, m, z) && self.on_geodesic(y, m, z))
                    .take(2)
                    .count();
                if count != 1 {
                    let count = between
                        .iter()
                        .filter(|&&m| self.on_geodesic(x, m, z) && self.on_geodesic(y, m, z))
                        .count();
                    return Some((x, y, z, count));
                }
            }
        }
        None
    }

    pub fn is_convex(&self, set: &[Vertex]) -> bool {
        let mut member = self.vertex_set();
        for &v in set {
            member.insert(v);
        }
        self.is_convex_bits(&member)
    }

    pub fn is_convex_bits(&self, member: &FixedBitSet) -> bool {
        let list: Vec<Vertex> = member.ones().collect();
        list.par_iter().enumerate().all(|(i, &x)| {
            list[i + 1..].iter().all(|&y| {
                (0..self.vertex_count()).all(|z| member.contains(z) || !self.on_geodesic(x, z, y))
            })
        })
    }

    /// Whether every geodesic from `x` to `y` passes through `cut`.
    ///
    /// Searches the interval DAG (edges oriented away from `x`) with the cut
    /// removed; `x` or `y` in the cut counts as met.
    pub fn geodesic_cut(&self, x: Vertex, y: Vertex, cut: &FixedBitSet) -> bool {
        if cut.contains(x) || cut.contains(y) {
            return true;
        }
        let total = self.dist(x, y);
        let mut seen = self.vertex_set();
        let mut queue = VecDeque::from([x]);
        seen.insert(x);
        while let Some(u) = queue.pop_front() {
            if u == y {
                return false;
            }
            let du = self.dist(x, u);
            for &w in self.neighbors(u) {
                if seen.contains(w) || cut.contains(w) {
                    continue;
                }
                if self.dist(x, w) == du + 1 && self.dist(x, w) + self.dist(w, y) == total {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        true
    }

    pub fn set_from(&self, vertices: &[Vertex]) -> FixedBitSet {
        let mut bits = self.vertex_set();
        for &v in vertices {
            bits.insert(v);
        }
        bits
    }

    pub fn is_geodesic(&self, path: &[Vertex]) -> bool {
        match path {
            [] => false,
            [first, ..] => {
                path.windows(2).all(|w| self.adjacent(w[0], w[1]))
                    && self.dist(*first, *path.last().unwrap()) as usize == path.len() - 1
            }
        }
    }

    /// One-step extension of a geodesic at its terminal vertex.
    pub fn extend_geodesic_step(&self, path: &[Vertex]) -> Result<Extension> {
        if !self.is_geodesic(path) {
            return Err(Error::NotGeodesic);
        }
        let start = path[0];
        let end = *path.last().unwrap();
        let boundary_affected = !self.is_interior(end);
        let len = self.dist(start, end);
        let next = self
            .neighbors(end)
            .iter()
            .copied()
            .find(|&w| self.dist(start, w) == len + 1);
        Ok(Extension {
            edge: next.map(|w| (end, w)),
            boundary_affected,
        })
    }
}

fn bfs(adjacency: &[Vec<Vertex>], source: Vertex) -> Vec<u32> {
    let mut dist = vec![UNREACHED; adjacency.len()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in &adjacency[u] {
            if dist[w] == UNREACHED {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub source: Vertex,
    pub target: Vertex,
    pub members: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedianWitness {
    pub triple: [Vertex; 3],
    pub median_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedianVerdict {
    pub is_median: bool,
    pub witness: Option<MedianWitness>,
}

/// Outcome of [`CubeComplex::extend_geodesic_step`]; `edge == None` means no extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extension {
    pub edge: Option<(Vertex, Vertex)>,
    pub boundary_affected: bool,
}
