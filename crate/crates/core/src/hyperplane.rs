//! Hyperplanes as Djoković–Winkler Θ-classes of edges.
//!
//! Two edges `uv` and `xy` are Θ-related when
//! `d(u,x) + d(v,y) != d(u,y) + d(v,x)`. On a median graph the relation is
//! an equivalence whose classes are exactly the hyperplanes; removing a class
//! splits the vertex set into two convex halfspaces.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{CubeComplex, Vertex};
use crate::error::{Error, Result};

/// One of the two halfspaces of a hyperplane.
///
/// `A` is the side holding the smallest vertex index of the complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
        }
    }
}

/// A halfspace: hyperplane id plus a side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Halfspace {
    pub hyperplane: usize,
    pub side: Side,
}

impl Halfspace {
    pub fn new(hyperplane: usize, side: Side) -> Self {
        Self { hyperplane, side }
    }

    pub fn complement(self) -> Self {
        Self::new(self.hyperplane, self.side.opposite())
    }
}

#[derive(Debug, Clone)]
pub struct Hyperplane {
    pub id: usize,
    /// The Θ-class, edges as `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
    side_b: FixedBitSet,
    side_a: FixedBitSet,
    carrier: FixedBitSet,
}

impl Hyperplane {
    pub fn side(&self, side: Side) -> &FixedBitSet {
        match side {
            Side::A => &self.side_a,
            Side::B => &self.side_b,
        }
    }

    pub fn side_of(&self, v: Vertex) -> Side {
        if self.side_b.contains(v) {
            Side::B
        } else {
            Side::A
        }
    }

    /// Endpoints of the edges in the class.
    pub fn carrier(&self) -> &FixedBitSet {
        &self.carrier
    }
}

/// All hyperplanes of a median graph plus their crossing relation.
#[derive(Debug, Clone)]
pub struct Arrangement<'a> {
    complex: &'a CubeComplex,
    planes: Vec<Hyperplane>,
    edge_plane: HashMap<(Vertex, Vertex), usize>,
    crossing: Vec<FixedBitSet>,
}

impl<'a> Arrangement<'a> {
    /// Computes the Θ-classes, checking transitivity along the way.
    pub fn new(complex: &'a CubeComplex) -> Result<Self> {
        let edges = complex.edges();
        let m = edges.len();
        let d = |a: Vertex, b: Vertex| complex.dist(a, b);
        let theta = |i: usize, j: usize| {
            let (u, v) = edges[i];
            let (x, y) = edges[j];
            d(u, x) + d(v, y) != d(u, y) + d(v, x)
        };

        let related: Vec<Vec<usize>> = (0..m)
            .into_par_iter()
            .map(|i| (i + 1..m).filter(|&j| theta(i, j)).collect())
            .collect();

        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, js) in related.iter().enumerate() {
            for &j in js {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }

        // Classes in order of their smallest edge.
        let mut class_of_root: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..m {
            let r = find(&mut parent, i);
            let c = *class_of_root.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(i);
        }

        let transitive = classes.par_iter().all(|class| {
            class
                .iter()
                .enumerate()
                .all(|(k, &i)| class[k + 1..].iter().all(|&j| theta(i, j)))
        });
        if !transitive {
            return Err(Error::ThetaNotTransitive);
        }

        let n = complex.vertex_count();
        let planes: Vec<Hyperplane> = classes
            .par_iter()
            .enumerate()
            .map(|(id, class)| {
                let (u, v) = edges[class[0]];
                let mut near_u = FixedBitSet::with_capacity(n);
                for x in 0..n {
                    if d(x, u) < d(x, v) {
                        near_u.insert(x);
                    }
                }
                let mut side_a = near_u.clone();
                if !side_a.contains(0) {
                    side_a.toggle_range(..);
                }
                let mut side_b = side_a.clone();
                side_b.toggle_range(..);
                let mut carrier = FixedBitSet::with_capacity(n);
                let mut class_edges = Vec::with_capacity(class.len());
                for &e in class {
                    let (a, b) = edges[e];
                    carrier.insert(a);
                    carrier.insert(b);
                    class_edges.push((a, b));
                }
                Hyperplane {
                    id,
                    edges: class_edges,
                    side_a,
                    side_b,
                    carrier,
                }
            })
            .collect();

        // Every class edge must cross from one side to the other, and no
        // other edge may.
        let mut edge_plane = HashMap::with_capacity(m);
        for h in &planes {
            for &(a, b) in &h.edges {
                if h.side_of(a) == h.side_of(b) {
                    return Err(Error::ThetaNotTransitive);
                }
                edge_plane.insert((a, b), h.id);
            }
        }
        let cut_sizes_ok = planes.par_iter().all(|h| {
            edges
                .iter()
                .filter(|&&(a, b)| h.side_of(a) != h.side_of(b))
                .count()
                == h.edges.len()
        });
        if !cut_sizes_ok {
            return Err(Error::ThetaNotTransitive);
        }

        let count = planes.len();
        let crossing: Vec<FixedBitSet> = (0..count)
            .into_par_iter()
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(count);
                for j in 0..count {
                    if i != j && quadrants_nonempty(&planes[i], &planes[j]) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();

        Ok(Self {
            complex,
            planes,
            edge_plane,
            crossing,
        })
    }

    pub fn complex(&self) -> &'a CubeComplex {
        self.complex
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }

    pub fn planes(&self) -> &[Hyperplane] {
        &self.planes
    }

    pub fn get(&self, id: usize) -> Result<&Hyperplane> {
        self.planes.get(id).ok_or(Error::UnknownHyperplane(id))
    }

    pub fn plane(&self, id: usize) -> &Hyperplane {
        &self.planes[id]
    }

    /// Hyperplane dual to the edge `{u, v}`.
    pub fn of_edge(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edge_plane.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn halfspace(&self, h: Halfspace) -> &FixedBitSet {
        self.planes[h.hyperplane].side(h.side)
    }

    /// Transversality: all four side intersections are non-empty.
    pub fn crosses(&self, h1: usize, h2: usize) -> bool {
        self.crossing[h1].contains(h2)
    }

    /// Hyperplanes transverse to `h`.
    pub fn crossing_row(&self, h: usize) -> &FixedBitSet {
        &self.crossing[h]
    }

    /// Hyperplanes separating two vertices.
    pub fn separating(&self, x: Vertex, y: Vertex) -> Vec<usize> {
        self.planes
            .iter()
            .filter(|h| h.side_of(x) != h.side_of(y))
            .map(|h| h.id)
            .collect()
    }

    /// For `k` parallel to `f`, the side of `f` holding all of `k`.
    pub fn side_containing(&self, f: usize, k: usize) -> Option<Side> {
        if f == k || self.crosses(f, k) {
            return None;
        }
        let (a, _) = self.planes[k].edges[0];
        Some(self.planes[f].side_of(a))
    }
}

fn quadrants_nonempty(h1: &Hyperplane, h2: &Hyperplane) -> bool {
    [Side::A, Side::B].iter().all(|&s1| {
        [Side::A, Side::B]
            .iter()
            .all(|&s2| !h1.side(s1).is_disjoint(h2.side(s2)))
    })
}
