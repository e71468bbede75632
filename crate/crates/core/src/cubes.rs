//! Cube inventory, vertex links and free faces.
//!
//! Cubes are derived from the 1-skeleton: at a vertex `v`, every set of
//! pairwise crossing hyperplanes dual to edges at `v` spans a cube whose
//! vertices are reached by flipping across those hyperplanes.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::complex::{CubeComplex, Vertex};
use crate::hyperplane::{Arrangement, Side};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cube {
    pub dimension: usize,
    /// Sorted vertex indices; `2^dimension` of them.
    pub vertices: Vec<Vertex>,
    /// Hyperplanes dual to the cube's edges, sorted.
    pub hyperplanes: Vec<usize>,
}

impl Cube {
    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Every cube of the complex, ordered by dimension then vertex set, with the
/// codimension-one coface relation.
#[derive(Debug, Clone)]
pub struct CubeInventory {
    cubes: Vec<Cube>,
    cofaces: Vec<Vec<usize>>,
}

impl CubeInventory {
    pub fn new(arr: &Arrangement<'_>) -> Self {
        let complex = arr.complex();
        let mut found: Vec<Cube> = Vec::new();
        for v in 0..complex.vertex_count() {
            let mut incident: Vec<(usize, Vertex)> = complex
                .neighbors(v)
                .iter()
                .map(|&w| (arr.of_edge(v, w).expect("edge has a class"), w))
                .collect();
            incident.sort_unstable();
            let mut clique = Vec::new();
            extend_cliques(arr, complex, v, &incident, 0, &mut clique, &mut found);
        }
        found.sort();
        found.dedup();

        let position: HashMap<&[Vertex], usize> = found
            .iter()
            .enumerate()
            .map(|(i, c)| (c.vertices.as_slice(), i))
            .collect();
        let mut cofaces = vec![Vec::new(); found.len()];
        for (i, cube) in found.iter().enumerate() {
            for &k in &cube.hyperplanes {
                for side in [Side::A, Side::B] {
                    let facet: Vec<Vertex> = cube
                        .vertices
                        .iter()
                        .copied()
                        .filter(|&x| arr.plane(k).side_of(x) == side)
                        .collect();
                    if let Some(&j) = position.get(facet.as_slice()) {
                        cofaces[j].push(i);
                    }
                }
            }
        }
        Self {
            cubes: found,
            cofaces,
        }
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.cofaces[i].is_empty()
    }

    /// Cubes containing cube `i` as a codimension-one face.
    pub fn cofaces(&self, i: usize) -> &[usize] {
        &self.cofaces[i]
    }

    pub fn count_by_dimension(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for c in &self.cubes {
            *counts.entry(c.dimension).or_insert(0) += 1;
        }
        counts
    }

    pub fn dimension(&self) -> usize {
        self.cubes.iter().map(|c| c.dimension).max().unwrap_or(0)
    }

    /// Maximal cubes, highest dimension first, then by vertex set.
    ///
    /// This is the indexing used by the `--cube` option of the CLI.
    pub fn maximal(&self) -> Vec<&Cube> {
        let mut max: Vec<&Cube> = (0..self.cubes.len())
            .filter(|&i| self.is_maximal(i))
            .map(|i| &self.cubes[i])
            .collect();
        max.sort_by(|a, b| b.dimension.cmp(&a.dimension).then(a.vertices.cmp(&b.vertices)));
        max
    }

    /// Cubes properly contained in exactly one other cube.
    ///
    /// Such a cube is a codimension-one face of a unique maximal cube. Faces
    /// touching a non-interior vertex are flagged as boundary-affected.
    pub fn free_faces(&self, complex: &CubeComplex) -> Vec<FreeFace> {
        (0..self.cubes.len())
            .filter(|&i| {
                self.cofaces[i].len() == 1 && self.is_maximal(self.cofaces[i][0])
            })
            .map(|i| {
                let cube = self.cubes[i].clone();
                let boundary_affected = cube.vertices.iter().any(|&v| !complex.is_interior(v));
                FreeFace {
                    maximal: self.cofaces[i][0],
                    cube,
                    boundary_affected,
                }
            })
            .collect()
    }
}

fn extend_cliques(
    arr: &Arrangement<'_>,
    complex: &CubeComplex,
    base: Vertex,
    incident: &[(usize, Vertex)],
    start: usize,
    clique: &mut Vec<usize>,
    out: &mut Vec<Cube>,
) {
    let Some(cube) = span_cube(arr, complex, base, clique) else {
        return;
    };
    // Keep each cube once, from its smallest vertex.
    if cube.vertices[0] == base {
        out.push(cube);
    }
    for i in start..incident.len() {
        let k = incident[i].0;
        if clique.iter().all(|&c| arr.crosses(c, k)) {
            clique.push(k);
            extend_cliques(arr, complex, base, incident, i + 1, clique, out);
            clique.pop();
        }
    }
}

fn span_cube(
    arr: &Arrangement<'_>,
    complex: &CubeComplex,
    base: Vertex,
    classes: &[usize],
) -> Option<Cube> {
    let mut vertices = vec![base];
    for &k in classes {
        let mut flipped = Vec::with_capacity(vertices.len());
        for &x in &vertices {
            let across = complex
                .neighbors(x)
                .iter()
                .copied()
                .find(|&y| arr.of_edge(x, y) == Some(k))?;
            flipped.push(across);
        }
        vertices.extend(flipped);
    }
    vertices.sort_unstable();
    vertices.dedup();
    if vertices.len() != 1 << classes.len() {
        return None;
    }
    let mut hyperplanes = classes.to_vec();
    hyperplanes.sort_unstable();
    Some(Cube {
        dimension: classes.len(),
        vertices,
        hyperplanes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeFace {
    pub cube: Cube,
    /// Index of the unique maximal cube containing it.
    pub maximal: usize,
    pub boundary_affected: bool,
}

/// The link of a vertex: one link vertex per incident edge, one link edge
/// per square at the vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Link {
    pub center: Vertex,
    /// Far endpoints of the incident edges, sorted.
    pub vertices: Vec<Vertex>,
    /// Pairs of positions into `vertices`.
    pub edges: Vec<(usize, usize)>,
    pub is_join: bool,
    pub boundary_affected: bool,
}

impl Link {
    pub fn is_cycle(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 || self.edges.len() != n {
            return false;
        }
        let mut degree = vec![0; n];
        for &(a, b) in &self.edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        degree.iter().all(|&d| d == 2) && connected(n, &self.edges)
    }
}

pub fn vertex_link(complex: &CubeComplex, v: Vertex) -> Link {
    let nbrs = complex.neighbors(v).to_vec();
    let mut edges = Vec::new();
    for i in 0..nbrs.len() {
        for j in i + 1..nbrs.len() {
            let (a, b) = (nbrs[i], nbrs[j]);
            let square = complex
                .neighbors(a)
                .iter()
                .any(|&c| c != v && complex.adjacent(c, b));
            if square {
                edges.push((i, j));
            }
        }
    }
    let n = nbrs.len();
    let mut complement = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if edges.binary_search(&(i, j)).is_err() {
                complement.push((i, j));
            }
        }
    }
    let is_join = n >= 2 && !connected(n, &complement);
    let boundary_affected =
        !complex.is_interior(v) || nbrs.iter().any(|&w| !complex.is_interior(w));
    Link {
        center: v,
        vertices: nbrs,
        edges,
        is_join,
        boundary_affected,
    }
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
