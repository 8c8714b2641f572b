//! JSON formats for anchored surfaces, foams and braid words, plus the JSON
//! shapes of computed results.
//!
//! Every input object carries a `"theory"` tag: `sl2`, `sl3u`, `sl3o` or
//! `braid`. Unknown fields are rejected.

use std::path::Path;

use foam_core::annular::{BraidWord, CubeComplex, HomologyTable};
use foam_core::foams_sl3::{Facet, Foam3, Seam, Theory3};
use foam_core::skein::{Failure, SkeinReport, Witness};
use foam_core::statespace::StateSpaceResult;
use foam_core::surfaces_sl2::{AnchoredSurface, Component2};
use foam_core::Poly;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{FoamError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Surface(AnchoredSurface),
    Foam(Foam3),
    Braid(BraidWord),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceDoc {
    theory: String,
    components: Vec<ComponentDoc>,
    #[serde(default)]
    anchor_labels: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentDoc {
    #[serde(default)]
    genus: u32,
    #[serde(default)]
    dots: u32,
    #[serde(default)]
    shifted: [u32; 2],
    #[serde(default)]
    anchors: Vec<usize>,
    #[serde(default)]
    bottom: Vec<usize>,
    #[serde(default)]
    top: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FoamDoc {
    theory: String,
    facets: Vec<FacetDoc>,
    #[serde(default)]
    seams: Vec<SeamDoc>,
    #[serde(default)]
    anchor_labels: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    anchor_signs: Option<Vec<i8>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FacetDoc {
    #[serde(default)]
    genus: u32,
    #[serde(default)]
    dots: u32,
    #[serde(default)]
    anchors: Vec<usize>,
    #[serde(default)]
    slots: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeamDoc {
    sides: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BraidDoc {
    theory: String,
    strands: usize,
    #[serde(default)]
    word: Vec<i32>,
}

fn typed<T: DeserializeOwned>(v: Value) -> Result<T> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = e.path().to_string();
        FoamError::schema(if path == "." { String::new() } else { path }, e.into_inner().to_string())
    })
}

pub fn parse_input(text: &str) -> Result<Input> {
    let v: Value = serde_json::from_str(text).map_err(|e| FoamError::schema("", e.to_string()))?;
    let theory = match v.get("theory") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(FoamError::schema("theory", "expected a string")),
        None => return Err(FoamError::schema("theory", "missing field")),
    };
    match theory.as_str() {
        "sl2" => surface_from_doc(typed(v)?).map(Input::Surface),
        "sl3u" | "sl3o" => foam_from_doc(typed(v)?).map(Input::Foam),
        "braid" => {
            let d: BraidDoc = typed(v)?;
            Ok(Input::Braid(BraidWord::new(d.strands, d.word)?))
        }
        other => Err(FoamError::schema(
            "theory",
            format!("unknown theory `{other}`, expected one of sl2, sl3u, sl3o, braid"),
        )),
    }
}

pub fn read_input(path: &Path) -> Result<Input> {
    parse_input(&std::fs::read_to_string(path)?)
}

fn surface_from_doc(d: SurfaceDoc) -> Result<AnchoredSurface> {
    let components = d
        .components
        .into_iter()
        .map(|c| Component2 {
            genus: c.genus,
            dots: c.dots,
            shifted: c.shifted,
            anchors: c.anchors,
            bottom: c.bottom,
            top: c.top,
        })
        .collect();
    Ok(AnchoredSurface::new(components, d.anchor_labels)?)
}

fn foam_from_doc(d: FoamDoc) -> Result<Foam3> {
    let theory = if d.theory == "sl3o" { Theory3::Oriented } else { Theory3::Unoriented };
    let mut seams = Vec::with_capacity(d.seams.len());
    for (k, s) in d.seams.iter().enumerate() {
        let sides: [[usize; 2]; 3] = s.sides.as_slice().try_into().map_err(|_| {
            FoamError::InvariantViolation(format!("seam {k} has {} sides, expected 3", s.sides.len()))
        })?;
        seams.push(Seam::new(sides.map(|[f, slot]| (f, slot))));
    }
    let facets = d.facets.into_iter().map(|f| Facet::new(f.genus, f.slots, f.dots, f.anchors)).collect();
    let mut foam = Foam3::closed(theory, facets, seams, d.anchor_labels);
    if let Some(signs) = d.anchor_signs {
        if theory == Theory3::Unoriented && !signs.is_empty() {
            return Err(FoamError::InvariantViolation("anchor_signs are only meaningful for sl3o".into()));
        }
        foam.anchor_signs = signs;
    }
    foam.validate()?;
    Ok(foam)
}

pub fn surface_to_json(s: &AnchoredSurface) -> Value {
    let doc = SurfaceDoc {
        theory: "sl2".into(),
        components: s
            .components
            .iter()
            .map(|c| ComponentDoc {
                genus: c.genus,
                dots: c.dots,
                shifted: c.shifted,
                anchors: c.anchors.clone(),
                bottom: c.bottom.clone(),
                top: c.top.clone(),
            })
            .collect(),
        anchor_labels: s.anchor_labels.clone(),
    };
    serde_json::to_value(doc).expect("surface serializes")
}

pub fn foam_to_json(f: &Foam3) -> Value {
    let oriented = f.theory == Theory3::Oriented;
    let doc = FoamDoc {
        theory: if oriented { "sl3o" } else { "sl3u" }.into(),
        facets: f
            .facets
            .iter()
            .map(|x| FacetDoc { genus: x.genus, dots: x.dots, anchors: x.anchors.clone(), slots: x.slots })
            .collect(),
        seams: f.seams.iter().map(|s| SeamDoc { sides: s.sides.iter().map(|&(a, b)| [a, b]).collect() }).collect(),
        anchor_labels: f.anchor_labels.clone(),
        anchor_signs: (oriented && !f.anchor_signs.is_empty()).then(|| f.anchor_signs.clone()),
    };
    serde_json::to_value(doc).expect("foam serializes")
}

pub fn braid_to_json(b: &BraidWord) -> Value {
    json!({ "theory": "braid", "strands": b.strands, "word": b.word })
}

pub fn input_to_json(input: &Input) -> Value {
    match input {
        Input::Surface(s) => surface_to_json(s),
        Input::Foam(f) => foam_to_json(f),
        Input::Braid(b) => braid_to_json(b),
    }
}

pub fn witness_to_json(w: &Witness) -> Value {
    match w {
        Witness::Surface(s) => surface_to_json(s),
        Witness::Foam(f) => foam_to_json(f),
    }
}

/// `[{coeff, exps}]` in increasing graded-lex order of monomials.
pub fn poly_to_json(p: &Poly) -> Value {
    let n = p.ring().nvars();
    Value::Array(p.terms().map(|(m, &c)| json!({ "coeff": c, "exps": &m.0[..n] })).collect())
}

pub fn evaluation_to_json(input: &Input, value: &Poly) -> Value {
    let theory = match input {
        Input::Surface(_) => "sl2",
        Input::Foam(f) if f.theory == Theory3::Oriented => "sl3o",
        Input::Foam(_) => "sl3u",
        Input::Braid(_) => "braid",
    };
    json!({ "theory": theory, "value": value.to_string(), "terms": poly_to_json(value) })
}

pub fn statespace_to_json(r: &StateSpaceResult) -> Value {
    let grank: Vec<Value> = r.grank.terms().map(|(q, a, mult)| json!({ "q": q, "a": a, "mult": mult })).collect();
    let m = &r.gram.matrix;
    let gram: Vec<Vec<String>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect();
    json!({ "rank": r.rank, "grank": grank, "gram": gram })
}

pub fn homology_to_json(cx: &CubeComplex, table: &HomologyTable) -> Value {
    let generators: Vec<Value> = cx
        .groups
        .iter()
        .enumerate()
        .map(|(r, g)| json!({ "h": cx.homological_degree(r), "count": g.len() }))
        .collect();
    let poincare: Vec<Value> = table
        .0
        .iter()
        .map(|(&(h, q, a), g)| {
            let torsion: Vec<String> = g.torsion.iter().map(|t| t.to_string()).collect();
            json!({ "h": h, "q": q, "a": a, "rank": g.rank, "torsion": torsion })
        })
        .collect();
    json!({ "generators": generators, "poincare": poincare })
}

/// Tab-separated Poincaré table with a header row; `q` is `-` when absent.
pub fn homology_to_tsv(table: &HomologyTable) -> String {
    let mut out = String::from("h\tq\ta\trank\ttorsion\n");
    for (&(h, q, a), g) in &table.0 {
        let q = q.map_or_else(|| "-".to_string(), |q| q.to_string());
        let torsion = if g.torsion.is_empty() {
            "-".to_string()
        } else {
            g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
        };
        out.push_str(&format!("{h}\t{q}\t{a}\t{}\t{torsion}\n", g.rank));
    }
    out
}

fn failure_to_json(f: &Failure) -> Value {
    json!({
        "index": f.index,
        "relation": f.relation,
        "detail": f.detail,
        "witness": witness_to_json(&f.witness),
    })
}

pub fn skein_report_to_json(r: &SkeinReport) -> Value {
    json!({
        "suite": r.suite.name(),
        "seed": r.seed,
        "count": r.count,
        "nontrivial": r.nontrivial,
        "passed": r.passed(),
        "failures": r.failures.iter().map(failure_to_json).collect::<Vec<_>>(),
    })
}
