//! Checkpoint systems built from bridges and their exhaustive verification.
//!
//! The quasi-isometry onto the integers is modelled by an index map sending
//! each checkpoint vertex to the index of the first translate containing it.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::actions::Automorphism;
use crate::complex::{CubeComplex, Vertex};
use crate::error::{Error, Result};
use crate::hyperplane::{Arrangement, Halfspace};
use crate::separation::PairClass;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckpointSystem {
    pub base: Vec<Vertex>,
    /// `index -> g^index(base)`, sorted vertex lists.
    pub translates: BTreeMap<i64, Vec<Vertex>>,
    pub error_constant: u32,
    /// Indices whose translate lost vertices outside the mover's domain.
    pub truncated: Vec<i64>,
    /// Pairs of indices whose translates intersect.
    pub overlaps: Vec<(i64, i64)>,
}

/// Builds the system of `g`-translates of the bridge between `h1` and `g·h1`.
pub fn build_checkpoint_system(
    arr: &Arrangement<'_>,
    g: &Automorphism,
    h1: Halfspace,
    range: (i64, i64),
    error_constant: u32,
) -> Result<CheckpointSystem> {
    arr.get(h1.hyperplane)?;
    if range.0 > range.1 {
        return Err(Error::BadParameters(format!("empty index range {}..={}", range.0, range.1)));
    }
    let image = g
        .apply_halfspace(arr, h1)
        .ok_or_else(|| Error::DomainTooSmall(format!("image of hyperplane {}", h1.hyperplane)))?;
    if h1 == image || !arr.halfspace(h1).is_subset(arr.halfspace(image)) {
        return Err(Error::NotNested);
    }
    let class = arr.classify_pair(h1.hyperplane, image.hyperplane)?.class;
    if class != PairClass::UberSeparated {
        return Err(Error::NotUberSeparated(h1.hyperplane, image.hyperplane));
    }
    let bridge = arr.bridge(h1.hyperplane, image.hyperplane)?;
    let complex = arr.complex();
    let base_set = bridge.member_set(complex);

    let mut translates = BTreeMap::new();
    let mut truncated = Vec::new();
    for i in range.0..=range.1 {
        let (set, missing) = g.power(i).image_of_set(&base_set);
        if missing {
            truncated.push(i);
        }
        if set.count_ones(..) > 0 {
            translates.insert(i, set.ones().collect());
        }
    }
    Ok(CheckpointSystem::from_translates(
        complex,
        bridge.members,
        translates,
        error_constant,
        truncated,
    ))
}

impl CheckpointSystem {
    pub fn from_translates(
        complex: &CubeComplex,
        base: Vec<Vertex>,
        translates: BTreeMap<i64, Vec<Vertex>>,
        error_constant: u32,
        truncated: Vec<i64>,
    ) -> Self {
        let sets: Vec<(i64, FixedBitSet)> = translates
            .iter()
            .map(|(&i, vs)| (i, complex.set_from(vs)))
            .collect();
        let mut overlaps = Vec::new();
        for (a, (i, s)) in sets.iter().enumerate() {
            for (j, t) in &sets[a + 1..] {
                if !s.is_disjoint(t) {
                    overlaps.push((*i, *j));
                }
            }
        }
        Self {
            base,
            translates,
            error_constant,
            truncated,
            overlaps,
        }
    }

    /// Union of the translates.
    pub fn lambda(&self, complex: &CubeComplex) -> FixedBitSet {
        let mut out = complex.vertex_set();
        for vs in self.translates.values() {
            vs.iter().for_each(|&v| out.insert(v));
        }
        out
    }

    /// Each checkpoint vertex mapped to the smallest index of a translate
    /// containing it.
    pub fn index_map(&self) -> BTreeMap<Vertex, i64> {
        let mut map = BTreeMap::new();
        for (&i, vs) in &self.translates {
            for &v in vs {
                map.entry(v).or_insert(i);
            }
        }
        map
    }

    /// The same indices with every translate replaced by its first vertex.
    /// Used to exercise the verifier on a system that does not separate.
    pub fn sabotaged(&self, complex: &CubeComplex) -> Self {
        let translates = self
            .translates
            .iter()
            .map(|(&i, vs)| (i, vs[..1].to_vec()))
            .collect();
        Self::from_translates(complex, self.base[..1].to_vec(), translates, self.error_constant, Vec::new())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CheckpointViolation {
    pub x: Vertex,
    pub y: Vertex,
    /// Translate index that some geodesic from `x` to `y` avoids.
    pub index: i64,
    pub boundary_affected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckpointReport {
    pub pairs_checked: usize,
    pub cut_checks: usize,
    pub violations: Vec<CheckpointViolation>,
}

/// Closest checkpoint vertices to `x`.
pub fn projections(complex: &CubeComplex, lambda: &FixedBitSet, x: Vertex) -> Vec<Vertex> {
    let best = lambda.ones().map(|v| complex.dist(x, v)).min();
    match best {
        Some(d) => lambda.ones().filter(|&v| complex.dist(x, v) == d).collect(),
        None => Vec::new(),
    }
}

/// For every vertex pair and every pair of projections `x', y'` with
/// indices `i', j'`, each index `i` with `min(i',j') + 2 <= i <= max(i',j') - 2`
/// whose translate is at distance at least `L` from both projections must
/// cut every geodesic from `x` to `y`.
pub fn verify_checkpoint_system(complex: &CubeComplex, cs: &CheckpointSystem) -> CheckpointReport {
    let lambda = cs.lambda(complex);
    let index = cs.index_map();
    let sets: BTreeMap<i64, FixedBitSet> = cs
        .translates
        .iter()
        .map(|(&i, vs)| (i, complex.set_from(vs)))
        .collect();
    let set_dist = |i: i64, v: Vertex| sets[&i].ones().map(|s| complex.dist(s, v)).min().unwrap_or(u32::MAX);
    let n = complex.vertex_count();
    let proj: Vec<Vec<(Vertex, i64)>> = (0..n)
        .map(|x| {
            projections(complex, &lambda, x)
                .into_iter()
                .map(|p| (p, index[&p]))
                .collect()
        })
        .collect();

    let results: Vec<(usize, Vec<CheckpointViolation>)> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut checks = 0;
            let mut bad = Vec::new();
            for y in x + 1..n {
                let mut failing: Vec<i64> = Vec::new();
                for &(xp, i1) in &proj[x] {
                    for &(yp, i2) in &proj[y] {
                        let (lo, hi) = (i1.min(i2), i1.max(i2));
                        for i in lo + 2..=hi - 2 {
                            if !sets.contains_key(&i)
                                || set_dist(i, xp) < cs.error_constant
                                || set_dist(i, yp) < cs.error_constant
                            {
                                continue;
                            }
                            checks += 1;
                            if !complex.geodesic_cut(x, y, &sets[&i]) {
                                failing.push(i);
                            }
                        }
                    }
                }
                failing.sort_unstable();
                failing.dedup();
                let boundary_affected = !complex.is_interior(x) || !complex.is_interior(y);
                bad.extend(failing.into_iter().map(|index| CheckpointViolation {
                    x,
                    y,
                    index,
                    boundary_affected,
                }));
            }
            (checks, bad)
        })
        .collect();

    let mut violations = Vec::new();
    let mut cut_checks = 0;
    for (c, v) in results {
        cut_checks += c;
        violations.extend(v);
    }
    violations.sort();
    CheckpointReport {
        pairs_checked: n * n.saturating_sub(1) / 2,
        cut_checks,
        violations,
    }
}
