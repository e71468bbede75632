//! JSON exchange formats and report rendering.
//!
//! Reports are built as `serde_json::Value`s whose object keys are sorted,
//! so output is deterministic. Vertices are always reported by name.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::artin::CoxeterGraph;
use crate::bridge::{Bridge, BridgeCheck};
use crate::checkpoint::{CheckpointReport, CheckpointSystem};
use crate::complex::{CubeComplex, Vertex};
use crate::cubes::{Cube, FreeFace};
use crate::error::{Error, Result};
use crate::fixtures::NameMap;
use crate::hyperplane::{Arrangement, Halfspace, Side};
use crate::separation::SectorAssignment;

/// `{"vertices": [...], "edges": [[u, v], ...], "interior": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interior: Option<Vec<String>>,
}

impl From<&CubeComplex> for ComplexFile {
    fn from(c: &CubeComplex) -> Self {
        Self {
            vertices: c.names().to_vec(),
            edges: c
                .edges()
                .iter()
                .map(|&(u, v)| (c.name(u).to_string(), c.name(v).to_string()))
                .collect(),
            interior: c
                .interior_flags()
                .map(|_| c.interior_vertices().iter().map(|&v| c.name(v).to_string()).collect()),
        }
    }
}

impl ComplexFile {
    pub fn build(&self) -> Result<CubeComplex> {
        CubeComplex::build(&self.vertices, &self.edges, self.interior.as_deref())
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

pub fn parse_complex(text: &str) -> Result<CubeComplex> {
    parse::<ComplexFile>(text)?.build()
}

pub fn complex_to_json(c: &CubeComplex) -> String {
    to_pretty(&serde_json::to_value(ComplexFile::from(c)).expect("serializable"))
}

/// `{"map": {id: id, ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismFile {
    pub map: NameMap,
}

pub fn parse_automorphism(text: &str) -> Result<NameMap> {
    Ok(parse::<AutomorphismFile>(text)?.map)
}

/// `{"generators": [{id: id, ...}, ...], "bound": N}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub generators: Vec<NameMap>,
    pub bound: usize,
}

pub fn parse_group(text: &str) -> Result<GroupFile> {
    parse(text)
}

/// `{"generators": ["s0", ...], "edges": [["s0", "s1", 3], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterFile {
    pub generators: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String, u32)>,
}

pub fn parse_coxeter(text: &str) -> Result<CoxeterGraph> {
    let file: CoxeterFile = parse(text)?;
    CoxeterGraph::new(&file.generators, &file.edges)
}

pub fn coxeter_to_json(g: &CoxeterGraph) -> String {
    let file = CoxeterFile {
        generators: g.generators().to_vec(),
        edges: g
            .edges()
            .map(|(a, b, m)| (g.generators()[a].clone(), g.generators()[b].clone(), m))
            .collect(),
    };
    to_pretty(&serde_json::to_value(file).expect("serializable"))
}

/// A checkpoint system by vertex name; translate indices are the keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointFile {
    pub base: Vec<String>,
    pub translates: BTreeMap<i64, Vec<String>>,
    pub error_constant: u32,
    #[serde(default)]
    pub truncated: Vec<i64>,
}

impl CheckpointFile {
    pub fn from_system(c: &CubeComplex, cs: &CheckpointSystem) -> Self {
        Self {
            base: names(c, &cs.base),
            translates: cs.translates.iter().map(|(&i, vs)| (i, names(c, vs))).collect(),
            error_constant: cs.error_constant,
            truncated: cs.truncated.clone(),
        }
    }

    pub fn to_system(&self, c: &CubeComplex) -> Result<CheckpointSystem> {
        let resolve = |vs: &[String]| -> Result<Vec<Vertex>> {
            let mut out = vs.iter().map(|v| c.vertex(v)).collect::<Result<Vec<_>>>()?;
            out.sort_unstable();
            Ok(out)
        };
        let translates = self
            .translates
            .iter()
            .map(|(&i, vs)| Ok((i, resolve(vs)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        if translates.values().any(Vec::is_empty) {
            return Err(Error::EmptySet);
        }
        Ok(CheckpointSystem::from_translates(
            c,
            resolve(&self.base)?,
            translates,
            self.error_constant,
            self.truncated.clone(),
        ))
    }
}

pub fn parse_checkpoints(text: &str) -> Result<CheckpointFile> {
    parse(text)
}

/// Pretty JSON; keys come out sorted because `serde_json::Map` is ordered.
pub fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}

/// Flat `path: value` lines for human reading.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    flatten(v, "", &mut out);
    out
}

fn flatten(v: &Value, prefix: &str, out: &mut String) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                flatten(x, &key(k), out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(x, &key(&i.to_string()), out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            let _ = writeln!(out, "{prefix}: [{}]", parts.join(", "));
        }
        _ => {
            let _ = writeln!(out, "{prefix}: {}", scalar(v));
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn names(c: &CubeComplex, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| c.name(v).to_string()).collect()
}

fn name_pairs(c: &CubeComplex, ps: &[(Vertex, Vertex)]) -> Vec<[String; 2]> {
    ps.iter()
        .map(|&(a, b)| [c.name(a).to_string(), c.name(b).to_string()])
        .collect()
}

pub fn side_name(s: Side) -> &'static str {
    match s {
        Side::A => "a",
        Side::B => "b",
    }
}

pub fn halfspace_value(h: Halfspace) -> Value {
    json!({"hyperplane": h.hyperplane, "side": side_name(h.side)})
}

pub fn hyperplanes_value(arr: &Arrangement<'_>) -> Value {
    let c = arr.complex();
    Value::Array(
        arr.planes()
            .iter()
            .map(|h| {
                json!({
                    "id": h.id,
                    "edges": name_pairs(c, &h.edges),
                    "side_a": names(c, &h.side(Side::A).ones().collect::<Vec<_>>()),
                    "side_b": names(c, &h.side(Side::B).ones().collect::<Vec<_>>()),
                })
            })
            .collect(),
    )
}

pub fn cube_value(c: &CubeComplex, cube: &Cube) -> Value {
    json!({
        "dimension": cube.dimension,
        "vertices": names(c, &cube.vertices),
        "hyperplanes": cube.hyperplanes,
    })
}

pub fn free_face_value(c: &CubeComplex, f: &FreeFace) -> Value {
    json!({
        "cube": cube_value(c, &f.cube),
        "boundary_affected": f.boundary_affected,
    })
}

pub fn bridge_value(c: &CubeComplex, b: &Bridge) -> Value {
    json!({
        "h1": b.h1,
        "h2": b.h2,
        "class": b.class.as_str(),
        "halfspaces": [halfspace_value(b.nesting.first), halfspace_value(b.nesting.second)],
        "gates": [c.name(b.gate1), c.name(b.gate2)],
        "width": b.width,
        "unique": b.unique,
        "members": names(c, &b.members),
        "minimizing_pairs": name_pairs(c, &b.minimizing_pairs),
    })
}

pub fn bridge_check_value(c: &CubeComplex, check: &BridgeCheck) -> Value {
    let mut v = bridge_value(c, &check.bridge);
    v["pairs_checked"] = json!(check.pairs_checked);
    v["violations"] = json!(name_pairs(c, &check.violations));
    v
}

pub fn sectors_value(c: &CubeComplex, s: &SectorAssignment) -> Value {
    let width = s.family.len();
    json!({
        "family": s.family,
        "sectors": s.sectors.iter().map(|sec| json!({
            "signature": format!("{:0width$b}", sec.signature)
                .chars()
                .rev()
                .collect::<String>(),
            "vertices": names(c, &sec.vertices),
            "hyperplanes": sec.hyperplanes,
            "boundary_affected": sec.boundary_affected,
        })).collect::<Vec<_>>(),
    })
}

pub fn checkpoint_report_value(c: &CubeComplex, r: &CheckpointReport) -> Value {
    json!({
        "pairs_checked": r.pairs_checked,
        "cut_checks": r.cut_checks,
        "violations": r.violations.iter().map(|v| json!({
            "x": c.name(v.x),
            "y": c.name(v.y),
            "index": v.index,
            "boundary_affected": v.boundary_affected,
        })).collect::<Vec<_>>(),
    })
}

/// The 1-skeleton in DOT, interior vertices drawn solid and boundary
/// vertices dashed.
pub fn skeleton_dot(c: &CubeComplex) -> String {
    let mut out = String::from("graph skeleton {\n");
    for v in 0..c.vertex_count() {
        let style = if c.is_interior(v) { "solid" } else { "dashed" };
        let _ = writeln!(out, "  {:?} [style={style}];", c.name(v));
    }
    for &(a, b) in c.edges() {
        let _ = writeln!(out, "  {:?} -- {:?};", c.name(a), c.name(b));
    }
    out.push_str("}\n");
    out
}
