//! Gates and combinatorial bridges between parallel hyperplanes.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{CubeComplex, Vertex};
use crate::error::{Error, Result};
use crate::hyperplane::Arrangement;
use crate::separation::{Nesting, PairClass};

/// Nearest point projection onto a convex set.
pub fn gate(complex: &CubeComplex, x: Vertex, set: &FixedBitSet) -> Result<Vertex> {
    if set.is_clear() {
        return Err(Error::EmptySet);
    }
    if !complex.is_convex_bits(set) {
        return Err(Error::NotConvex);
    }
    nearest(complex, x, set).ok_or(Error::NotConvex)
}

/// The unique closest vertex of `set` to `x`, or `None` on a tie.
pub(crate) fn nearest(complex: &CubeComplex, x: Vertex, set: &FixedBitSet) -> Option<Vertex> {
    let best = set.ones().map(|v| complex.dist(x, v)).min()?;
    let mut closest = set.ones().filter(|&v| complex.dist(x, v) == best);
    let first = closest.next()?;
    closest.next().is_none().then_some(first)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bridge {
    pub h1: usize,
    pub h2: usize,
    pub class: PairClass,
    pub nesting: Nesting,
    /// Every pair `(x1, x2)` realizing the distance between the two outer
    /// halfspaces, sorted.
    pub minimizing_pairs: Vec<(Vertex, Vertex)>,
    pub gate1: Vertex,
    pub gate2: Vertex,
    /// Union of the intervals between minimizing pairs.
    pub members: Vec<Vertex>,
    pub width: u32,
    pub unique: bool,
}

impl Bridge {
    pub fn member_set(&self, complex: &CubeComplex) -> FixedBitSet {
        complex.set_from(&self.members)
    }
}

/// Violations of a bridge check, as offending vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeCheck {
    pub bridge: Bridge,
    pub pairs_checked: usize,
    pub violations: Vec<(Vertex, Vertex)>,
}

impl Arrangement<'_> {
    /// The bridge between parallel hyperplanes, found by exhaustive
    /// minimization over cross-side vertex pairs.
    pub fn bridge(&self, h1: usize, h2: usize) -> Result<Bridge> {
        let cls = self.classify_pair(h1, h2)?;
        let nesting = match cls.nesting {
            Some(n) if cls.class.is_parallel() => n,
            _ => return Err(Error::NotParallel(h1, h2)),
        };
        let complex = self.complex();
        let near = self.halfspace(nesting.first);
        let far = self.halfspace(nesting.second);
        let mut width = u32::MAX;
        let mut pairs = Vec::new();
        for a in near.ones() {
            for b in far.ones() {
                let d = complex.dist(a, b);
                if d < width {
                    width = d;
                    pairs.clear();
                }
                if d == width {
                    pairs.push((a, b));
                }
            }
        }
        let mut members = complex.vertex_set();
        for &(a, b) in &pairs {
            for z in 0..complex.vertex_count() {
                if complex.on_geodesic(a, z, b) {
                    members.insert(z);
                }
            }
        }
        let (gate1, gate2) = pairs[0];
        Ok(Bridge {
            h1,
            h2,
            class: cls.class,
            nesting,
            unique: pairs.len() == 1,
            minimizing_pairs: pairs,
            gate1,
            gate2,
            members: members.ones().collect(),
            width,
        })
    }

    /// Checks `d(y1,y2) = d(y1,x1) + d(x1,x2) + d(x2,y2)` for every
    /// `y1` in the first halfspace and `y2` in the second.
    pub fn check_gate_formula(&self, h1: usize, h2: usize) -> Result<BridgeCheck> {
        let cls = self.classify_pair(h1, h2)?;
        if !cls.class.is_strongly_separated() {
            return Err(Error::NotStronglySeparated(h1, h2));
        }
        let bridge = self.bridge(h1, h2)?;
        let complex = self.complex();
        let (x1, x2) = (bridge.gate1, bridge.gate2);
        let near: Vec<Vertex> = self.halfspace(bridge.nesting.first).ones().collect();
        let far: Vec<Vertex> = self.halfspace(bridge.nesting.second).ones().collect();
        let violations: Vec<(Vertex, Vertex)> = near
            .par_iter()
            .flat_map_iter(|&y1| {
                far.iter().filter_map(move |&y2| {
                    let lhs = complex.dist(y1, y2);
                    let rhs = complex.dist(y1, x1) + complex.dist(x1, x2) + complex.dist(x2, y2);
                    (lhs != rhs).then_some((y1, y2))
                })
            })
            .collect();
        Ok(BridgeCheck {
            pairs_checked: near.len() * far.len(),
            bridge,
            violations,
        })
    }

    /// Checks that every geodesic between the two outer halfspaces meets
    /// the bridge.
    pub fn check_bridge_cut(&self, h1: usize, h2: usize) -> Result<BridgeCheck> {
        let cls = self.classify_pair(h1, h2)?;
        if cls.class != PairClass::UberSeparated {
            return Err(Error::NotUberSeparated(h1, h2));
        }
        let bridge = self.bridge(h1, h2)?;
        let complex = self.complex();
        let cut = bridge.member_set(complex);
        let near: Vec<Vertex> = self.halfspace(bridge.nesting.first).ones().collect();
        let far: Vec<Vertex> = self.halfspace(bridge.nesting.second).ones().collect();
        let violations: Vec<(Vertex, Vertex)> = near
            .par_iter()
            .flat_map_iter(|&x| {
                let cut = &cut;
                far.iter()
                    .filter(move |&&y| !complex.geodesic_cut(x, y, cut))
                    .map(move |&y| (x, y))
            })
            .collect();
        Ok(BridgeCheck {
            pairs_checked: near.len() * far.len(),
            bridge,
            violations,
        })
    }
}
