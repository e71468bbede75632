//! Automorphisms of windows, finite acting groups and the stabiliser scans.
//!
//! Automorphisms may be partial (defined on a sub-window); anything that
//! needs a vertex outside the domain is reported as boundary-affected rather
//! than failing.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{CubeComplex, Vertex};
use crate::cubes::CubeInventory;
use crate::error::{Error, Result};
use crate::fixtures::NameMap;
use crate::hyperplane::{Arrangement, Halfspace};

/// An adjacency-preserving injective partial map on vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    image: Vec<Option<Vertex>>,
}

/// Checks a name-keyed vertex map and turns it into an [`Automorphism`].
///
/// Adjacency must be preserved and reflected between domain vertices.
pub fn verify_automorphism(complex: &CubeComplex, map: &NameMap) -> Result<Automorphism> {
    if map.is_empty() {
        return Err(Error::DomainTooSmall("empty vertex map".into()));
    }
    let mut image = vec![None; complex.vertex_count()];
    for (from, to) in map {
        image[complex.vertex(from)?] = Some(complex.vertex(to)?);
    }
    Automorphism::from_images(complex, image)
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).map(Some).collect(),
        }
    }

    /// Builds from per-vertex images, verifying injectivity and adjacency.
    pub fn from_images(complex: &CubeComplex, image: Vec<Option<Vertex>>) -> Result<Self> {
        let mut used = complex.vertex_set();
        for &w in image.iter().flatten() {
            if used.put(w) {
                return Err(Error::NotInjective);
            }
        }
        let domain: Vec<Vertex> = (0..image.len()).filter(|&v| image[v].is_some()).collect();
        for (i, &u) in domain.iter().enumerate() {
            for &v in &domain[i + 1..] {
                let (fu, fv) = (image[u].unwrap(), image[v].unwrap());
                if complex.adjacent(u, v) != complex.adjacent(fu, fv) {
                    return Err(Error::NotAdjacencyPreserving(
                        complex.name(u).to_string(),
                        complex.name(v).to_string(),
                    ));
                }
            }
        }
        Ok(Self { image })
    }

    pub fn apply(&self, v: Vertex) -> Option<Vertex> {
        self.image[v]
    }

    pub fn is_total(&self) -> bool {
        self.image.iter().all(Option::is_some)
    }

    pub fn domain(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.image.len()).filter(|&v| self.image[v].is_some())
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| w == Some(v))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            image: other
                .image
                .iter()
                .map(|w| w.and_then(|w| self.image[w]))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut image = vec![None; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            if let Some(w) = w {
                image[w] = Some(v);
            }
        }
        Automorphism { image }
    }

    /// `self^k` for any integer `k`; domains shrink for partial maps.
    pub fn power(&self, k: i64) -> Automorphism {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Automorphism::identity(self.image.len());
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    /// Image of a vertex set, and whether any member fell outside the domain.
    pub fn image_of_set(&self, set: &FixedBitSet) -> (FixedBitSet, bool) {
        let mut out = FixedBitSet::with_capacity(set.len());
        let mut missing = false;
        for v in set.ones() {
            match self.image[v] {
                Some(w) => out.insert(w),
                None => missing = true,
            }
        }
        (out, missing)
    }

    /// Image of hyperplane `k`, read off any of its edges inside the domain.
    pub fn apply_hyperplane(&self, arr: &Arrangement<'_>, k: usize) -> Option<usize> {
        arr.plane(k).edges.iter().find_map(|&(a, b)| {
            let (fa, fb) = (self.image[a]?, self.image[b]?);
            arr.of_edge(fa, fb)
        })
    }

    /// The induced partial map on hyperplanes. Fails if two edges of one
    /// class are sent to different classes.
    pub fn hyperplane_map(&self, arr: &Arrangement<'_>) -> Result<Vec<Option<usize>>> {
        let complex = arr.complex();
        arr.planes()
            .iter()
            .map(|h| {
                let mut target = None;
                for &(a, b) in &h.edges {
                    let (Some(fa), Some(fb)) = (self.image[a], self.image[b]) else {
                        continue;
                    };
                    let k = arr.of_edge(fa, fb).ok_or_else(|| {
                        Error::NotAdjacencyPreserving(complex.name(a).into(), complex.name(b).into())
                    })?;
                    if target.is_some_and(|t| t != k) {
                        return Err(Error::NotAdjacencyPreserving(
                            complex.name(a).into(),
                            complex.name(b).into(),
                        ));
                    }
                    target = Some(k);
                }
                Ok(target)
            })
            .collect()
    }

    /// Image of a halfspace: the side of the image hyperplane containing
    /// the image of a vertex of the original side.
    pub fn apply_halfspace(&self, arr: &Arrangement<'_>, h: Halfspace) -> Option<Halfspace> {
        let k = self.apply_hyperplane(arr, h.hyperplane)?;
        let plane = arr.plane(h.hyperplane);
        let (a, b) = plane.edges.iter().copied().find(|&(a, b)| {
            self.image[a].is_some() && self.image[b].is_some()
        })?;
        let inside = if plane.side_of(a) == h.side { a } else { b };
        Some(Halfspace::new(k, arr.plane(k).side_of(self.image[inside]?)))
    }

    pub fn to_names(&self, complex: &CubeComplex) -> NameMap {
        self.image
            .iter()
            .enumerate()
            .filter_map(|(v, w)| Some((complex.name(v).to_string(), complex.name((*w)?).to_string())))
            .collect()
    }
}

/// A finite group of automorphisms with its multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteActingGroup {
    elements: Vec<Vec<Vertex>>,
    /// `table[a][b]` is the index of `a ∘ b`.
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

/// Breadth-first closure of total automorphisms under composition.
pub fn group_closure(
    complex: &CubeComplex,
    generators: &[Automorphism],
    bound: usize,
) -> Result<FiniteActingGroup> {
    let n = complex.vertex_count();
    let gens: Vec<Vec<Vertex>> = generators
        .iter()
        .map(|g| g.image.iter().copied().collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()
        .ok_or(Error::PartialAutomorphism)?;
    let identity: Vec<Vertex> = (0..n).collect();
    let mut index: HashMap<Vec<Vertex>, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut elements = vec![identity];
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let prod: Vec<Vertex> = elements[i].iter().map(|&v| g[v]).collect();
            if !index.contains_key(&prod) {
                if elements.len() == bound {
                    return Err(Error::Overflow(bound));
                }
                index.insert(prod.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(prod);
            }
        }
    }
    let table: Vec<Vec<usize>> = elements
        .par_iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| {
                    let ab: Vec<Vertex> = b.iter().map(|&v| a[v]).collect();
                    index[&ab]
                })
                .collect()
        })
        .collect();
    let inverse = (0..elements.len())
        .map(|a| (0..elements.len()).find(|&b| table[a][b] == 0).expect("finite group"))
        .collect();
    Ok(FiniteActingGroup {
        elements,
        table,
        inverse,
    })
}

impl FiniteActingGroup {
    pub fn trivial(complex: &CubeComplex) -> Self {
        Self {
            elements: vec![(0..complex.vertex_count()).collect()],
            table: vec![vec![0]],
            inverse: vec![0],
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Element `i` as a vertex permutation; element 0 is the identity.
    pub fn element(&self, i: usize) -> &[Vertex] {
        &self.elements[i]
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Whether the listed elements form a subgroup, by table lookup.
    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        let mut set = FixedBitSet::with_capacity(self.order());
        members.iter().for_each(|&m| set.insert(m));
        set.contains(0)
            && members
                .iter()
                .all(|&a| set.contains(self.inverse[a]) && members.iter().all(|&b| set.contains(self.table[a][b])))
    }

    fn stabilises(&self, g: usize, arr: &Arrangement<'_>, object: &Object) -> bool {
        let p = &self.elements[g];
        match object {
            Object::Vertex(v) => p[*v] == *v,
            Object::Hyperplane(k) => arr
                .plane(*k)
                .edges
                .iter()
                .all(|&(a, b)| arr.of_edge(p[a], p[b]) == Some(*k)),
            Object::Cube(vs) => {
                let mut image: Vec<Vertex> = vs.iter().map(|&v| p[v]).collect();
                image.sort_unstable();
                image == *vs
            }
        }
    }
}

/// An object the group can stabilise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Object {
    Vertex(Vertex),
    Hyperplane(usize),
    /// Sorted vertex set of a cube.
    Cube(Vec<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabiliserReport {
    /// Group element indices stabilising both objects.
    pub elements: Vec<usize>,
    pub order: usize,
    pub is_subgroup: bool,
}

/// Elements stabilising both objects (setwise; vertices are fixed).
pub fn stabilizer_intersection(
    arr: &Arrangement<'_>,
    group: &FiniteActingGroup,
    a: &Object,
    b: &Object,
) -> StabiliserReport {
    let elements: Vec<usize> = (0..group.order())
        .filter(|&g| group.stabilises(g, arr, a) && group.stabilises(g, arr, b))
        .collect();
    StabiliserReport {
        order: elements.len(),
        is_subgroup: group.is_subgroup(&elements),
        elements,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkewerCheck {
    pub holds: bool,
    /// `g·h1` as a halfspace of the window.
    pub image: Halfspace,
    /// The mover is only partially defined on the window.
    pub boundary_affected: bool,
}

/// Tests `h1 ⊂ h2 ⊂ g·h1` for nested halfspaces.
pub fn double_skewers(
    arr: &Arrangement<'_>,
    g: &Automorphism,
    h1: Halfspace,
    h2: Halfspace,
) -> Result<SkewerCheck> {
    arr.get(h1.hyperplane)?;
    arr.get(h2.hyperplane)?;
    if !arr.halfspace(h1).is_subset(arr.halfspace(h2)) {
        return Err(Error::NotNested);
    }
    for k in [h1.hyperplane, h2.hyperplane] {
        if arr.plane(k).carrier().ones().any(|v| g.apply(v).is_none()) {
            return Err(Error::DomainTooSmall(format!("carrier of hyperplane {k}")));
        }
    }
    let image = g
        .apply_halfspace(arr, h1)
        .ok_or_else(|| Error::DomainTooSmall(format!("image of hyperplane {}", h1.hyperplane)))?;
    Ok(SkewerCheck {
        holds: h1 != image && arr.halfspace(h2).is_subset(arr.halfspace(image)),
        image,
        boundary_affected: !g.is_total(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    HyperplanePair,
    MaximalCubePair,
}

/// A pair meeting a hypothesis of the acylindricity criteria. Only the
/// hypothesis is certified, never the conclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisWitness {
    pub kind: WitnessKind,
    /// Hyperplane ids, or indices into the maximal-cube list.
    pub pair: (usize, usize),
    pub stabiliser_order: usize,
    /// For cube pairs: the separated hyperplane pair.
    pub separated: Option<(usize, usize)>,
}

/// Scans hyperplane pairs and maximal-cube pairs for small stabiliser
/// intersections; cube pairs must also separate a pair of hyperplanes.
pub fn criterion_scan(
    arr: &Arrangement<'_>,
    cubes: &CubeInventory,
    group: &FiniteActingGroup,
    threshold: usize,
) -> Vec<HypothesisWitness> {
    let n = arr.len();
    let mut out: Vec<HypothesisWitness> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            (a + 1..n).filter_map(move |b| {
                let r = stabilizer_intersection(arr, group, &Object::Hyperplane(a), &Object::Hyperplane(b));
                (r.order <= threshold).then_some(HypothesisWitness {
                    kind: WitnessKind::HyperplanePair,
                    pair: (a, b),
                    stabiliser_order: r.order,
                    separated: None,
                })
            })
        })
        .collect();
    let maximal = cubes.maximal();
    let m = maximal.len();
    let cube_witnesses: Vec<HypothesisWitness> = (0..m)
        .into_par_iter()
        .flat_map_iter(|i| {
            let maximal = &maximal;
            (i..m).filter_map(move |j| {
                let (c1, c2) = (maximal[i], maximal[j]);
                let r = stabilizer_intersection(
                    arr,
                    group,
                    &Object::Cube(c1.vertices.clone()),
                    &Object::Cube(c2.vertices.clone()),
                );
                if r.order > threshold {
                    return None;
                }
                let separated = arr.cube_pair_separates(c1, c2)?;
                Some(HypothesisWitness {
                    kind: WitnessKind::MaximalCubePair,
                    pair: (i, j),
                    stabiliser_order: r.order,
                    separated: Some(separated),
                })
            })
        })
        .collect();
    out.extend(cube_witnesses);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakAcylProfile {
    pub min_distance: u32,
    pub pairs_checked: usize,
    pub no_pairs: bool,
    /// Largest number of group elements fixing both points of a pair.
    pub max_count: usize,
    pub pair: Option<(Vertex, Vertex)>,
}

/// For every vertex pair at distance at least `min_distance`, counts the
/// elements fixing both points.
pub fn weak_acyl_scan(complex: &CubeComplex, group: &FiniteActingGroup, min_distance: u32) -> WeakAcylProfile {
    let n = complex.vertex_count();
    let fixers: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(group.order());
            (0..group.order())
                .filter(|&g| group.element(g)[v] == v)
                .for_each(|g| s.insert(g));
            s
        })
        .collect();
    let mut checked = 0;
    let mut best: Option<(usize, (Vertex, Vertex))> = None;
    for x in 0..n {
        for y in x + 1..n {
            if complex.dist(x, y) < min_distance {
                continue;
            }
            checked += 1;
            let count = fixers[x].intersection_count(&fixers[y]);
            if best.is_none_or(|(c, _)| count > c) {
                best = Some((count, (x, y)));
            }
        }
    }
    WeakAcylProfile {
        min_distance,
        pairs_checked: checked,
        no_pairs: checked == 0,
        max_count: best.map_or(0, |b| b.0),
        pair: best.map(|b| b.1),
    }
}
