//! Independent oracles and the shared fixture list for integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use cubical::artin::{deligne_ball, CoxeterGraph};
use cubical::fixtures;
use cubical::{CubeComplex, Vertex};

/// Element cap for coset enumeration; reaching it means "infinite".
pub const COSET_CAP: usize = 100_000;

/// Order of the Coxeter group `<T | s^2, (st)^m>` by Todd-Coxeter coset
/// enumeration over the trivial subgroup, or `None` past the cap.
///
/// `labels[i][j]` is `m(i,j)`, `None` for infinity.
pub fn coxeter_order(labels: &[Vec<Option<u32>>]) -> Option<usize> {
    let r = labels.len();
    if r == 0 {
        return Some(1);
    }
    let mut relators: Vec<Vec<usize>> = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            if let Some(m) = labels[i][j] {
                relators.push((0..2 * m as usize).map(|k| if k % 2 == 0 { i } else { j }).collect());
            }
        }
    }
    let mut tc = CosetTable::new(r);
    let mut c = 0;
    while c < tc.table.len() {
        if tc.live(c) {
            for rel in &relators {
                tc.scan_and_fill(c, rel);
                if !tc.live(c) {
                    break;
                }
            }
            if tc.live(c) {
                for x in 0..r {
                    if tc.table[c][x].is_none() {
                        tc.define(c, x);
                    }
                }
            }
        }
        if tc.table.len() > COSET_CAP {
            return None;
        }
        c += 1;
    }
    Some((0..tc.table.len()).filter(|&c| tc.live(c)).count())
}

/// Coset table for a group generated by involutions: `table[c][x]` is
/// `c·x`, and `c·x·x = c` is built in.
struct CosetTable {
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    queue: Vec<usize>,
}

impl CosetTable {
    fn new(r: usize) -> Self {
        Self {
            table: vec![vec![None; r]],
            parent: vec![0],
            queue: Vec::new(),
        }
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn define(&mut self, c: usize, x: usize) {
        let d = self.table.len();
        self.table.push(vec![None; self.table[0].len()]);
        self.parent.push(d);
        self.table[c][x] = Some(d);
        self.table[d][x] = Some(c);
    }

    fn scan_and_fill(&mut self, c: usize, rel: &[usize]) {
        let mut f = c;
        let mut b = c;
        let mut i = 0;
        let mut j = rel.len() - 1;
        loop {
            while i <= j {
                match self.table[f][rel[i]] {
                    Some(n) => {
                        f = n;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return;
            }
            while j >= i {
                match self.table[b][rel[j]] {
                    Some(n) => {
                        b = n;
                        if j == 0 {
                            break;
                        }
                        j -= 1;
                    }
                    None => break,
                }
                if j < i {
                    break;
                }
            }
            if j < i {
                self.coincidence(f, b);
                return;
            }
            if i == j {
                // Deduction: f·x = b and b·x = f.
                match (self.table[f][rel[i]], self.table[b][rel[i]]) {
                    (None, None) => {
                        self.table[f][rel[i]] = Some(b);
                        self.table[b][rel[i]] = Some(f);
                    }
                    _ => {
                        let t = self.table[f][rel[i]].or(self.table[b][rel[i]]).unwrap();
                        let other = if self.table[f][rel[i]].is_some() { b } else { f };
                        self.coincidence(t, other);
                    }
                }
                return;
            }
            self.define(f, rel[i]);
        }
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut k = 0;
        while k < self.queue.len() {
            let dead = self.queue[k];
            k += 1;
            for x in 0..self.table[dead].len() {
                let Some(d) = self.table[dead][x] else { continue };
                if self.table[d][x] == Some(dead) {
                    self.table[d][x] = None;
                }
                let mu = self.rep(dead);
                let nu = self.rep(d);
                if let Some(t) = self.table[mu][x] {
                    self.merge(nu, t);
                } else if let Some(t) = self.table[nu][x] {
                    self.merge(mu, t);
                } else {
                    self.table[mu][x] = Some(nu);
                    self.table[nu][x] = Some(mu);
                }
            }
        }
    }
}

/// Every geodesic from `x` to `y`, by depth-first search along edges that
/// get strictly closer to `y`. Distances come from a fresh BFS so the
/// oracle does not share the complex's metric cache.
pub fn all_geodesics(c: &CubeComplex, x: Vertex, y: Vertex) -> Vec<Vec<Vertex>> {
    let to_y = bfs(c, y);
    let mut out = Vec::new();
    let mut path = vec![x];
    fn walk(c: &CubeComplex, to_y: &[u32], path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let u = *path.last().unwrap();
        if to_y[u] == 0 {
            out.push(path.clone());
            return;
        }
        for &w in c.neighbors(u) {
            if to_y[w] + 1 == to_y[u] {
                path.push(w);
                walk(c, to_y, path, out);
                path.pop();
            }
        }
    }
    walk(c, &to_y, &mut path, &mut out);
    out
}

pub fn bfs(c: &CubeComplex, s: Vertex) -> Vec<u32> {
    let mut d = vec![u32::MAX; c.vertex_count()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in c.neighbors(u) {
            if d[w] == u32::MAX {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

/// Number of medians of a triple, computed from fresh BFS tables.
pub fn median_count(tables: &[Vec<u32>], x: Vertex, y: Vertex, z: Vertex) -> usize {
    let on = |a: Vertex, m: Vertex, b: Vertex| tables[a][m] + tables[m][b] == tables[a][b];
    (0..tables.len()).filter(|&m| on(x, m, y) && on(y, m, z) && on(x, m, z)).count()
}

pub fn coxeter(gens: &[&str], edges: &[(&str, &str, u32)]) -> CoxeterGraph {
    CoxeterGraph::new(gens, edges).unwrap()
}

/// Coxeter graphs with built-in oracles used for Deligne fixtures.
pub fn deligne_graphs() -> Vec<(&'static str, CoxeterGraph)> {
    vec![
        ("free2", coxeter(&["s", "t"], &[])),
        ("free3", coxeter(&["a", "b", "c"], &[])),
        ("z2", coxeter(&["s", "t"], &[("s", "t", 2)])),
        ("raag_path3", coxeter(&["a", "b", "c"], &[("a", "b", 2), ("b", "c", 2)])),
        ("raag_path4", coxeter(&["a", "b", "c", "d"], &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2)])),
    ]
}

pub fn deligne_fixtures() -> Vec<(String, CubeComplex)> {
    let mut out = Vec::new();
    for (name, g) in deligne_graphs() {
        for radius in 1..=2 {
            let ball = deligne_ball(&g, radius, None).unwrap();
            out.push((format!("deligne_{name}_r{radius}"), ball.to_complex().unwrap()));
        }
    }
    out
}

/// Named fixtures used by the exhaustive scans.
pub fn fixtures() -> Vec<(String, CubeComplex)> {
    let mut out: Vec<(String, CubeComplex)> = vec![
        ("grid3x3".into(), fixtures::grid(3, 3).unwrap()),
        ("grid4x3".into(), fixtures::grid(4, 3).unwrap()),
        ("grid5x5".into(), fixtures::grid(5, 5).unwrap()),
        ("path8".into(), fixtures::path(8).unwrap()),
        ("ncube3".into(), fixtures::ncube(3).unwrap()),
        ("ncube4".into(), fixtures::ncube(4).unwrap()),
        ("line10".into(), fixtures::line(10).unwrap()),
    ];
    for seed in [1, 2, 3] {
        out.push((format!("tree40_s{seed}"), fixtures::tree(40, seed).unwrap()));
    }
    for k in [1, 2, 3, 6, 8, 25] {
        out.push((format!("staircase{k}"), fixtures::staircase(k).unwrap()));
    }
    for k in 1..=4 {
        out.push((format!("spiked{k}"), fixtures::spiked(k).unwrap()));
    }
    for r in 1..=4 {
        out.push((format!("pentagon{r}"), fixtures::pentagon_plane(r).unwrap()));
    }
    out.extend(deligne_fixtures());
    out
}

/// Vertex ids and edge count of the word-length ball in the Deligne complex
/// of a free group, by direct enumeration of reduced words. Spherical
/// subsets of a free group are the empty set and singletons, and the coset
/// `w·<s>` is represented by `w` with trailing `s^±1` letters removed.
pub fn free_group_cosets(names: &[&str], radius: usize) -> (BTreeSet<String>, usize) {
    let letters: Vec<String> = names
        .iter()
        .flat_map(|n| [n.to_string(), format!("{n}^-1")])
        .collect();
    let inverse = |i: usize| i ^ 1;
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut layer = words.clone();
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..letters.len() {
                if w.last() != Some(&inverse(l)) {
                    let mut x = w.clone();
                    x.push(l);
                    next.push(x);
                }
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    let render = |w: &[usize]| {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|&l| letters[l].as_str()).collect::<Vec<_>>().join(".")
        }
    };
    let mut ids = BTreeSet::new();
    let mut edges = 0;
    for w in &words {
        ids.insert(format!("{}|", render(w)));
        for (g, name) in names.iter().enumerate() {
            let mut rep = w.as_slice();
            while let Some((&last, rest)) = rep.split_last() {
                if last / 2 != g {
                    break;
                }
                rep = rest;
            }
            ids.insert(format!("{}|{name}", render(rep)));
            edges += 1;
        }
    }
    (ids, edges)
}
