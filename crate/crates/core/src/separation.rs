//! Pairwise hyperplane classification, crossing graphs, sectors and
//! cube-pair separation.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::cubes::Cube;
use crate::error::{Error, Result};
use crate::hyperplane::{Arrangement, Halfspace, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairClass {
    Equal,
    Transverse,
    Parallel,
    StronglySeparated,
    UberSeparated,
}

impl PairClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PairClass::Equal => "equal",
            PairClass::Transverse => "transverse",
            PairClass::Parallel => "parallel",
            PairClass::StronglySeparated => "strongly_separated",
            PairClass::UberSeparated => "uber_separated",
        }
    }

    pub fn is_parallel(self) -> bool {
        matches!(
            self,
            PairClass::Parallel | PairClass::StronglySeparated | PairClass::UberSeparated
        )
    }

    pub fn is_strongly_separated(self) -> bool {
        matches!(self, PairClass::StronglySeparated | PairClass::UberSeparated)
    }
}

/// For parallel hyperplanes: the two disjoint halfspaces facing away from
/// each other. Writing `h1 = first` and `h2 = complement(second)` gives the
/// nested pair `h1 ⊂ h2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Nesting {
    pub first: Halfspace,
    pub second: Halfspace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub class: PairClass,
    pub nesting: Option<Nesting>,
}

/// Hop distance in the crossing graph; `None` is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hops(pub Option<u32>);

impl Hops {
    pub const INF: Hops = Hops(None);

    pub fn at_least(self, k: u32) -> bool {
        self.0.is_none_or(|d| d >= k)
    }
}

impl std::fmt::Display for Hops {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 {
            Some(d) => write!(f, "{d}"),
            None => f.write_str("inf"),
        }
    }
}

impl Serialize for Hops {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Some(d) => s.serialize_u32(d),
            None => s.serialize_str("inf"),
        }
    }
}

impl Arrangement<'_> {
    /// Classifies a pair straight from the definitions: transversality by
    /// the four side intersections, strong separation by the absence of a
    /// hyperplane crossing both, über-separation by the absence of crossing
    /// hyperplanes `k1 ⋔ h1`, `k2 ⋔ h2` with `k1 ⋔ k2`.
    pub fn classify_pair(&self, h1: usize, h2: usize) -> Result<Classification> {
        self.get(h1)?;
        self.get(h2)?;
        if h1 == h2 {
            return Ok(Classification {
                class: PairClass::Equal,
                nesting: None,
            });
        }
        if self.crosses(h1, h2) {
            return Ok(Classification {
                class: PairClass::Transverse,
                nesting: None,
            });
        }
        let nesting = self.nesting(h1, h2);
        let n1 = self.crossing_row(h1);
        let n2 = self.crossing_row(h2);
        let class = if !n1.is_disjoint(n2) {
            PairClass::Parallel
        } else if n1.ones().any(|k1| !self.crossing_row(k1).is_disjoint(n2)) {
            PairClass::StronglySeparated
        } else {
            PairClass::UberSeparated
        };
        Ok(Classification {
            class,
            nesting: Some(nesting),
        })
    }

    fn nesting(&self, h1: usize, h2: usize) -> Nesting {
        for s1 in [Side::A, Side::B] {
            for s2 in [Side::A, Side::B] {
                if self.plane(h1).side(s1).is_disjoint(self.plane(h2).side(s2)) {
                    return Nesting {
                        first: Halfspace::new(h1, s1),
                        second: Halfspace::new(h2, s2),
                    };
                }
            }
        }
        unreachable!("parallel hyperplanes have a pair of disjoint halfspaces")
    }

    pub fn crossing_graph(&self) -> CrossingGraph {
        let n = self.len();
        let adjacency: Vec<Vec<usize>> = (0..n).map(|h| self.crossing_row(h).ones().collect()).collect();
        let distances = (0..n)
            .into_par_iter()
            .map(|s| {
                let mut dist = vec![Hops::INF; n];
                dist[s] = Hops(Some(0));
                let mut queue = VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    let du = dist[u].0.unwrap();
                    for &w in &adjacency[u] {
                        if dist[w].0.is_none() {
                            dist[w] = Hops(Some(du + 1));
                            queue.push_back(w);
                        }
                    }
                }
                dist
            })
            .collect();
        CrossingGraph {
            adjacency,
            distances,
        }
    }

    /// Every unordered pair with its class and crossing-graph distance.
    pub fn classification_report(&self) -> Vec<PairReport> {
        let graph = self.crossing_graph();
        let n = self.len();
        (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let graph = &graph;
                (i + 1..n).map(move |j| PairReport {
                    ids: (i, j),
                    class: self.classify_pair(i, j).unwrap().class,
                    crossing_distance: graph.distance(i, j),
                })
            })
            .collect()
    }

    /// Reducible iff the crossing graph is a join, i.e. its complement is
    /// disconnected.
    pub fn irreducibility(&self) -> Result<Irreducibility> {
        let n = self.len();
        if n < 2 {
            return Err(Error::TooFewHyperplanes);
        }
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(0);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if w != u && !seen.contains(w) && !self.crosses(u, w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        if seen.count_ones(..) == n {
            Ok(Irreducibility {
                irreducible: true,
                factors: None,
            })
        } else {
            let first: Vec<usize> = seen.ones().collect();
            let second: Vec<usize> = (0..n).filter(|&h| !seen.contains(h)).collect();
            Ok(Irreducibility {
                irreducible: false,
                factors: Some((first, second)),
            })
        }
    }

    /// Sectors cut out by pairwise crossing hyperplanes. Bit `i` of a
    /// signature is set when the sector lies on side `B` of `family[i]`.
    pub fn sectors(&self, family: &[usize]) -> Result<SectorAssignment> {
        for &h in family {
            self.get(h)?;
        }
        for (i, &a) in family.iter().enumerate() {
            for &b in &family[i + 1..] {
                if !self.crosses(a, b) {
                    return Err(Error::NotPairwiseCrossing);
                }
            }
        }
        if family.len() > 20 {
            return Err(Error::NotPairwiseCrossing);
        }
        let complex = self.complex();
        let n = complex.vertex_count();
        let count = 1usize << family.len();
        let mut members = vec![FixedBitSet::with_capacity(n); count];
        for v in 0..n {
            members[self.signature(family, v)].insert(v);
        }
        let sectors = members
            .into_iter()
            .enumerate()
            .map(|(signature, verts)| {
                let hyperplanes = if verts.is_clear() {
                    Vec::new()
                } else {
                    self.planes()
                        .iter()
                        .filter(|k| !family.contains(&k.id) && k.carrier().is_subset(&verts))
                        .map(|k| k.id)
                        .collect()
                };
                let boundary_affected = verts.ones().any(|v| !complex.is_interior(v));
                Sector {
                    signature,
                    vertices: verts.ones().collect(),
                    hyperplanes,
                    boundary_affected,
                }
            })
            .collect();
        Ok(SectorAssignment {
            family: family.to_vec(),
            sectors,
        })
    }

    fn signature(&self, family: &[usize], v: usize) -> usize {
        family
            .iter()
            .enumerate()
            .map(|(i, &h)| self.plane(h).side_of(v).bit() << i)
            .sum()
    }

    /// A pair of hyperplanes separated by every hyperplane dual to an edge
    /// of `c1 ∪ c2`, if one exists. The lexicographically least pair is
    /// returned.
    pub fn cube_pair_separates(&self, c1: &Cube, c2: &Cube) -> Option<(usize, usize)> {
        let mut family: Vec<usize> = c1.hyperplanes.iter().chain(&c2.hyperplanes).copied().collect();
        family.sort_unstable();
        family.dedup();

        let mut first_with: HashMap<Vec<Side>, usize> = HashMap::new();
        let mut placed: Vec<(usize, Vec<Side>)> = Vec::new();
        for k in 0..self.len() {
            let sig: Option<Vec<Side>> = family.iter().map(|&f| self.side_containing(f, k)).collect();
            if let Some(sig) = sig {
                first_with.entry(sig.clone()).or_insert(k);
                placed.push((k, sig));
            }
        }
        placed
            .iter()
            .filter_map(|(k, sig)| {
                let opposite: Vec<Side> = sig.iter().map(|s| s.opposite()).collect();
                first_with.get(&opposite).map(|&k2| ((*k).min(k2), (*k).max(k2)))
            })
            .min()
    }

    /// Depth of each side: the largest distance from a vertex of that side
    /// to the opposite halfspace.
    pub fn halfspace_depth(&self, h: usize) -> Result<HalfspaceDepth> {
        let plane = self.get(h)?;
        let complex = self.complex();
        let depth = |side: Side| {
            let own = plane.side(side);
            let other = plane.side(side.opposite());
            let boundary = own.ones().any(|v| !complex.is_interior(v));
            let d = own
                .ones()
                .map(|v| other.ones().map(|w| complex.dist(v, w)).min().unwrap_or(0))
                .max()
                .unwrap_or(0);
            (d, boundary)
        };
        let (a, ba) = depth(Side::A);
        let (b, bb) = depth(Side::B);
        Ok(HalfspaceDepth {
            depth_a: a,
            depth_b: b,
            boundary_affected_a: ba,
            boundary_affected_b: bb,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub ids: (usize, usize),
    pub class: PairClass,
    pub crossing_distance: Hops,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingGraph {
    pub adjacency: Vec<Vec<usize>>,
    pub distances: Vec<Vec<Hops>>,
}

impl CrossingGraph {
    pub fn distance(&self, a: usize, b: usize) -> Hops {
        self.distances[a][b]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph crossing {\n");
        for h in 0..self.adjacency.len() {
            out.push_str(&format!("  h{h};\n"));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  h{a} -- h{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Irreducibility {
    pub irreducible: bool,
    pub factors: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sector {
    pub signature: usize,
    pub vertices: Vec<usize>,
    /// Hyperplanes whose carrier lies entirely inside the sector.
    pub hyperplanes: Vec<usize>,
    pub boundary_affected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectorAssignment {
    pub family: Vec<usize>,
    pub sectors: Vec<Sector>,
}

impl SectorAssignment {
    pub fn opposite(&self, signature: usize) -> usize {
        signature ^ ((1 << self.family.len()) - 1)
    }

    pub fn with_hyperplanes(&self) -> impl Iterator<Item = &Sector> {
        self.sectors.iter().filter(|s| !s.hyperplanes.is_empty())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HalfspaceDepth {
    pub depth_a: u32,
    pub depth_b: u32,
    pub boundary_affected_a: bool,
    pub boundary_affected_b: bool,
}
