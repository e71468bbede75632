//! Deterministic generators for the named test complexes.
//!
//! Every generator is pure: the same parameters (and seed, for trees) give
//! byte-identical vertex names and edge lists.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::artin::normal_form::{Letter, NormalFormOracle, TraceOracle, Word};
use crate::complex::CubeComplex;
use crate::error::{Error, Result};

/// Upper bound on generated vertex counts.
pub const MAX_VERTICES: usize = 2000;

/// A partial vertex map by name, as used in automorphism files.
pub type NameMap = BTreeMap<String, String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    Grid,
    Tree,
    Path,
    Ncube,
    Staircase,
    Spiked,
    PentagonPlane,
    Line,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub params: Vec<usize>,
    #[serde(default)]
    pub seed: u64,
}

pub fn generate(spec: &GeneratorSpec) -> Result<CubeComplex> {
    let p = &spec.params;
    let want = |n: usize| -> Result<()> {
        if p.len() == n {
            Ok(())
        } else {
            Err(Error::BadParameters(format!(
                "{:?} takes {n} parameter(s), got {}",
                spec.kind,
                p.len()
            )))
        }
    };
    match spec.kind {
        GeneratorKind::Grid => {
            want(2)?;
            grid(p[0], p[1])
        }
        GeneratorKind::Tree => {
            want(1)?;
            tree(p[0], spec.seed)
        }
        GeneratorKind::Path => {
            want(1)?;
            path(p[0])
        }
        GeneratorKind::Ncube => {
            want(1)?;
            ncube(p[0])
        }
        GeneratorKind::Staircase => {
            want(1)?;
            staircase(p[0])
        }
        GeneratorKind::Spiked => {
            want(1)?;
            spiked(p[0])
        }
        GeneratorKind::PentagonPlane => {
            want(1)?;
            pentagon_plane(p[0])
        }
        GeneratorKind::Line => {
            want(1)?;
            line(p[0])
        }
    }
}

fn check_size(what: &str, n: Option<usize>) -> Result<()> {
    match n {
        Some(n) if (1..=MAX_VERTICES).contains(&n) => Ok(()),
        _ => Err(Error::BadParameters(format!(
            "{what} must have between 1 and {MAX_VERTICES} vertices"
        ))),
    }
}

fn assemble(names: Vec<String>, edges: Vec<(String, String)>, interior: Option<Vec<String>>) -> Result<CubeComplex> {
    CubeComplex::build(&names, &edges, interior.as_deref())
}

fn point(x: i64, y: i64) -> String {
    format!("{x},{y}")
}

/// The `w × h` grid graph with vertices named `"x,y"`.
pub fn grid(w: usize, h: usize) -> Result<CubeComplex> {
    check_size("grid", w.checked_mul(h))?;
    let mut names = Vec::new();
    let mut edges = Vec::new();
    for x in 0..w as i64 {
        for y in 0..h as i64 {
            names.push(point(x, y));
            if x + 1 < w as i64 {
                edges.push((point(x, y), point(x + 1, y)));
            }
            if y + 1 < h as i64 {
                edges.push((point(x, y), point(x, y + 1)));
            }
        }
    }
    assemble(names, edges, None)
}

/// A path on `n` vertices named `"0"..`.
pub fn path(n: usize) -> Result<CubeComplex> {
    check_size("path", Some(n))?;
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let edges = (1..n).map(|i| (names[i - 1].clone(), names[i].clone())).collect();
    assemble(names, edges, None)
}

/// A random recursive tree: vertex `i` hangs off a uniform earlier vertex.
pub fn tree(n: usize, seed: u64) -> Result<CubeComplex> {
    check_size("tree", Some(n))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let edges = (1..n)
        .map(|i| (names[rng.gen_range(0..i)].clone(), names[i].clone()))
        .collect();
    assemble(names, edges, None)
}

/// The `n`-cube with vertices named by binary strings.
pub fn ncube(n: usize) -> Result<CubeComplex> {
    if n > 10 {
        return Err(Error::BadParameters("ncube dimension must be at most 10".into()));
    }
    let label = |bits: usize| -> String {
        (0..n).rev().map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect()
    };
    let names: Vec<String> = (0..1usize << n).map(label).collect();
    let mut edges = Vec::new();
    for v in 0..1usize << n {
        for i in 0..n {
            let w = v ^ (1 << i);
            if v < w {
                edges.push((label(v), label(w)));
            }
        }
    }
    assemble(names, edges, None)
}

/// Lower-left corner of cell `j` of the staircase.
pub fn staircase_cell(j: usize) -> (i64, i64) {
    (j.div_ceil(2) as i64, (j / 2) as i64)
}

/// `k` unit squares glued in a monotone staircase: cell `j` has lower-left
/// corner `(ceil(j/2), floor(j/2))`.
pub fn staircase(k: usize) -> Result<CubeComplex> {
    if k == 0 {
        return Err(Error::BadParameters("staircase needs at least one cell".into()));
    }
    check_size("staircase", k.checked_mul(2).map(|n| n + 2))?;
    let mut names = Vec::new();
    let mut edges = Vec::new();
    for j in 0..k {
        let (x, y) = staircase_cell(j);
        let c = [point(x, y), point(x + 1, y), point(x + 1, y + 1), point(x, y + 1)];
        names.extend(c.iter().cloned());
        for i in 0..4 {
            edges.push((c[i].clone(), c[(i + 1) % 4].clone()));
        }
    }
    names.sort();
    names.dedup();
    edges.iter_mut().for_each(|e| {
        if e.0 > e.1 {
            std::mem::swap(&mut e.0, &mut e.1);
        }
    });
    edges.sort();
    edges.dedup();
    assemble(names, edges, None)
}

/// The glide `(x, y) -> (y + 1, x)` restricted to the staircase, which moves
/// every cell one step up the stairs. Vertices whose image leaves the window
/// are left out of the map.
pub fn staircase_glide(complex: &CubeComplex) -> NameMap {
    let parse = |s: &str| -> Option<(i64, i64)> {
        let (a, b) = s.split_once(',')?;
        Some((a.parse().ok()?, b.parse().ok()?))
    };
    complex
        .names()
        .iter()
        .filter_map(|n| {
            let (x, y) = parse(n)?;
            let image = point(y + 1, x);
            complex.vertex(&image).ok().map(|_| (n.clone(), image))
        })
        .collect()
}

/// The path `-n..=n` with its two endpoints marked non-interior.
pub fn line(n: usize) -> Result<CubeComplex> {
    if n == 0 {
        return Err(Error::BadParameters("line needs n >= 1".into()));
    }
    check_size("line", n.checked_mul(2).map(|m| m + 1))?;
    let n = n as i64;
    let names: Vec<String> = (-n..=n).map(|i| i.to_string()).collect();
    let edges = (-n..n).map(|i| (i.to_string(), (i + 1).to_string())).collect();
    let interior = (1 - n..n).map(|i| i.to_string()).collect();
    assemble(names, edges, Some(interior))
}

/// Translation `v -> v + shift` on a line window, restricted to the window.
pub fn line_shift(complex: &CubeComplex, shift: i64) -> NameMap {
    int_map(complex, |v| v + shift)
}

/// Reflection `v -> -v` on a line window.
pub fn line_reflection(complex: &CubeComplex) -> NameMap {
    int_map(complex, |v| -v)
}

fn int_map(complex: &CubeComplex, f: impl Fn(i64) -> i64) -> NameMap {
    complex
        .names()
        .iter()
        .filter_map(|n| {
            let image = f(n.parse().ok()?).to_string();
            complex.vertex(&image).ok().map(|_| (n.clone(), image))
        })
        .collect()
}

/// Corners of a 3-cube carrying spikes, in spike-slot order.
const SPIKE_CORNERS: [&str; 4] = ["100", "010", "001", "111"];

/// `k` spiked 3-cubes glued in a breadth-first 4-regular tree pattern.
///
/// Each cube has a spike edge at the corners `100, 010, 001, 111`. A child
/// cube is glued to its parent by identifying the child's slot-0 spike with
/// one of the parent's free spikes: the two spike corners become adjacent
/// through a single shared edge. Unglued spikes end in a leaf vertex, which
/// is marked non-interior.
pub fn spiked(k: usize) -> Result<CubeComplex> {
    if k == 0 {
        return Err(Error::BadParameters("spiked needs at least one cube".into()));
    }
    check_size("spiked", k.checked_mul(10).map(|n| n + 2))?;
    let corner = |c: usize, bits: &str| format!("c{c:02}.{bits}");
    let mut names = Vec::new();
    let mut edges = Vec::new();
    let cube = ncube(3)?;
    for c in 0..k {
        for n in cube.names() {
            names.push(corner(c, n));
        }
        for &(u, v) in cube.edges() {
            edges.push((corner(c, cube.name(u)), corner(c, cube.name(v))));
        }
    }

    // glued[c][slot] is true once that spike is shared with another cube.
    let mut glued = vec![[false; 4]; k];
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    let mut next = 1;
    while let Some(parent) = queue.pop_front() {
        for slot in 0..4 {
            if next == k {
                break;
            }
            if glued[parent][slot] {
                continue;
            }
            let child = next;
            next += 1;
            glued[parent][slot] = true;
            glued[child][0] = true;
            edges.push((corner(parent, SPIKE_CORNERS[slot]), corner(child, SPIKE_CORNERS[0])));
            queue.push_back(child);
        }
    }

    let mut interior = names.clone();
    for (c, slots) in glued.iter().enumerate() {
        for (slot, &g) in slots.iter().enumerate() {
            if !g {
                let tip = format!("c{c:02}.s{slot}");
                names.push(tip.clone());
                edges.push((corner(c, SPIKE_CORNERS[slot]), tip));
            }
        }
    }
    interior.sort();
    assemble(names, edges, Some(interior))
}

/// Radius-`r` window of the square tiling in which every vertex link is a
/// 5-cycle.
///
/// Vertices are the elements of word length at most `r` in the right-angled
/// Coxeter group whose defining graph is a pentagon on generators `a..e`
/// (cyclically adjacent letters commute), named by their normal forms with
/// `1` for the identity. Vertices of length at most `r - 2` have all their
/// squares inside the window and are marked interior.
pub fn pentagon_plane(r: usize) -> Result<CubeComplex> {
    if r > 6 {
        return Err(Error::BadParameters("pentagon_plane radius must be at most 6".into()));
    }
    const LETTERS: [&str; 5] = ["a", "b", "c", "d", "e"];
    let oracle = TraceOracle::right_angled_coxeter(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    let render = |w: &Word| -> String {
        if w.is_empty() {
            "1".into()
        } else {
            w.iter().map(|l| LETTERS[l.generator]).collect()
        }
    };

    let mut words: Vec<Word> = vec![Vec::new()];
    let mut seen: HashMap<Word, usize> = HashMap::from([(Vec::new(), 0)]);
    let mut layer = vec![0];
    for _ in 0..r {
        let mut next_layer = Vec::new();
        for &i in &layer {
            for g in 0..5 {
                let mut w = words[i].clone();
                w.push(Letter::new(g, false));
                let nf = oracle.normal_form(&w);
                if !seen.contains_key(&nf) {
                    seen.insert(nf.clone(), words.len());
                    next_layer.push(words.len());
                    words.push(nf);
                }
            }
        }
        layer = next_layer;
    }
    check_size("pentagon_plane", Some(words.len()))?;

    let names: Vec<String> = words.iter().map(render).collect();
    let mut edges = Vec::new();
    for (i, w) in words.iter().enumerate() {
        for g in 0..5 {
            let mut x = w.clone();
            x.push(Letter::new(g, false));
            if let Some(&j) = seen.get(&oracle.normal_form(&x)) {
                if i < j {
                    edges.push((names[i].clone(), names[j].clone()));
                }
            }
        }
    }
    let interior = words
        .iter()
        .filter(|w| w.len() + 2 <= r)
        .map(render)
        .collect();
    assemble(names, edges, Some(interior))
}
