//! JSON file formats. Every document carries `"format_version": 1`; readers
//! accept a missing field as version 1 and reject any other value.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::heart::{Heart, HeartError, HnData, ProbeEntry};
use crate::qp::{Arrow, ArrowKind, GradedQuiver, PathSum, Potential, QpError, Quiver, QuiverWithPotential};
use crate::rep::{RepError, Representation};
use crate::surface::{DiscTriangulation, SurfaceError};

pub const FORMAT_VERSION: u32 = 1;

fn format_version() -> u32 {
    FORMAT_VERSION
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0}, expected {FORMAT_VERSION}")]
    Version(u32),
    #[error("bad coefficient `{0}`")]
    Coefficient(String),
    #[error(transparent)]
    Qp(#[from] QpError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Heart(#[from] HeartError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

fn check_version(v: u32) -> Result<(), FormatError> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(FormatError::Version(v))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// `"p/q"`, `"p"` or a terminating decimal such as `"-0.25"`.
pub fn parse_coefficient(s: &str) -> Result<Rational64, FormatError> {
    let bad = || FormatError::Coefficient(s.to_string());
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let whole: i64 = match int.trim_start_matches(['-', '+']) {
            "" => 0,
            digits => digits.parse().map_err(|_| bad())?,
        };
        let den = 10i64.pow(frac.len() as u32);
        let num = whole
            .checked_mul(den)
            .and_then(|w| w.checked_add(frac.parse::<i64>().ok()?))
            .ok_or_else(bad)?;
        return Ok(Rational64::new(if negative { -num } else { num }, den));
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p.trim().parse().map_err(|_| bad())?, q))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: String,
    pub cycle: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QpDoc {
    #[serde(default = "format_version")]
    pub format_version: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    #[serde(default)]
    pub potential: Vec<TermDoc>,
}

impl QpDoc {
    pub fn from_qp(qp: &QuiverWithPotential) -> Self {
        let q = qp.quiver();
        Self {
            format_version: FORMAT_VERSION,
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowDoc {
                    id: a.id.clone(),
                    src: a.src.clone(),
                    tgt: a.tgt.clone(),
                })
                .collect(),
            potential: qp
                .potential()
                .terms()
                .map(|(cycle, c)| TermDoc {
                    coeff: c.to_string(),
                    cycle: cycle.clone(),
                })
                .collect(),
        }
    }

    pub fn to_qp(&self) -> Result<QuiverWithPotential, FormatError> {
        check_version(self.format_version)?;
        let arrows = self.arrows.iter().map(|a| Arrow::new(&a.id, &a.src, &a.tgt)).collect();
        let quiver = Quiver::new(self.vertices.clone(), arrows)?;
        let terms = self
            .potential
            .iter()
            .map(|t| Ok((parse_coefficient(&t.coeff)?, t.cycle.clone())))
            .collect::<Result<Vec<_>, FormatError>>()?;
        let potential = Potential::new(&quiver, terms)?;
        Ok(QuiverWithPotential::new(quiver, potential)?)
    }
}

pub fn qp_to_json(qp: &QuiverWithPotential) -> String {
    to_json(&QpDoc::from_qp(qp))
}

pub fn qp_from_json(s: &str) -> Result<QuiverWithPotential, FormatError> {
    serde_json::from_str::<QpDoc>(s)?.to_qp()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDoc {
    #[serde(default = "format_version")]
    pub format_version: u32,
    pub qp: QpDoc,
    pub p: u32,
    pub dim: Vec<usize>,
    #[serde(default)]
    pub mats: BTreeMap<String, Vec<Vec<u32>>>,
}

pub fn rep_to_json(v: &Representation) -> String {
    to_json(&RepDoc {
        format_version: FORMAT_VERSION,
        qp: QpDoc::from_qp(v.qp()),
        p: v.characteristic(),
        dim: v.dims().to_vec(),
        mats: v.matrices().iter().map(|(id, m)| (id.clone(), m.to_rows())).collect(),
    })
}

pub fn rep_from_json(s: &str) -> Result<Representation, FormatError> {
    let doc: RepDoc = serde_json::from_str(s)?;
    check_version(doc.format_version)?;
    Ok(Representation::from_entries(doc.qp.to_qp()?, doc.p, doc.dim, doc.mats)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeartDoc {
    #[serde(default = "format_version")]
    pub format_version: u32,
    pub qp: QpDoc,
    pub classes: Vec<Vec<i64>>,
}

pub fn heart_to_json(h: &Heart) -> String {
    to_json(&HeartDoc {
        format_version: FORMAT_VERSION,
        qp: QpDoc::from_qp(h.qp()),
        classes: h.classes().to_vec(),
    })
}

pub fn heart_from_json(s: &str) -> Result<Heart, FormatError> {
    let doc: HeartDoc = serde_json::from_str(s)?;
    check_version(doc.format_version)?;
    Ok(Heart::new(doc.qp.to_qp()?, doc.classes)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationDoc {
    #[serde(default = "format_version")]
    pub format_version: u32,
    pub m: usize,
    pub arcs: Vec<[usize; 2]>,
}

pub fn triangulation_to_json(t: &DiscTriangulation) -> String {
    to_json(&TriangulationDoc {
        format_version: FORMAT_VERSION,
        m: t.m(),
        arcs: t.arcs().iter().map(|&(a, b)| [a, b]).collect(),
    })
}

pub fn triangulation_from_json(s: &str) -> Result<DiscTriangulation, FormatError> {
    let doc: TriangulationDoc = serde_json::from_str(s)?;
    check_version(doc.format_version)?;
    Ok(DiscTriangulation::new(doc.m, doc.arcs.iter().map(|&[a, b]| (a, b)))?)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HnDataDoc {
    pub phi_plus: f64,
    pub phi_minus: f64,
    pub mass: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeEntryDoc {
    pub sigma1: HnDataDoc,
    pub sigma2: HnDataDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeDoc {
    #[serde(default = "format_version")]
    pub format_version: u32,
    pub entries: Vec<ProbeEntryDoc>,
}

impl From<HnData> for HnDataDoc {
    fn from(d: HnData) -> Self {
        Self {
            phi_plus: d.phi_plus,
            phi_minus: d.phi_minus,
            mass: d.mass,
        }
    }
}

impl From<HnDataDoc> for HnData {
    fn from(d: HnDataDoc) -> Self {
        Self {
            phi_plus: d.phi_plus,
            phi_minus: d.phi_minus,
            mass: d.mass,
        }
    }
}

pub fn probe_to_json(entries: &[ProbeEntry]) -> String {
    to_json(&ProbeDoc {
        format_version: FORMAT_VERSION,
        entries: entries
            .iter()
            .map(|e| ProbeEntryDoc {
                sigma1: e.sigma1.into(),
                sigma2: e.sigma2.into(),
            })
            .collect(),
    })
}

pub fn probe_from_json(s: &str) -> Result<Vec<ProbeEntry>, FormatError> {
    let doc: ProbeDoc = serde_json::from_str(s)?;
    check_version(doc.format_version)?;
    Ok(doc
        .entries
        .into_iter()
        .map(|e| ProbeEntry {
            sigma1: e.sigma1.into(),
            sigma2: e.sigma2.into(),
        })
        .collect())
}

#[derive(Serialize)]
struct PathTermDoc {
    coeff: String,
    start: String,
    path: Vec<String>,
}

fn path_sum_doc(sum: &PathSum) -> Vec<PathTermDoc> {
    sum.terms()
        .map(|(p, c)| PathTermDoc {
            coeff: c.to_string(),
            start: p.start.clone(),
            path: p.arrows.clone(),
        })
        .collect()
}

/// `{"relations": [{"arrow", "terms": [{"coeff", "start", "path"}]}]}`.
pub fn relations_to_json(relations: &[(String, PathSum)]) -> String {
    #[derive(Serialize)]
    struct Relation {
        arrow: String,
        terms: Vec<PathTermDoc>,
    }
    #[derive(Serialize)]
    struct Doc {
        format_version: u32,
        relations: Vec<Relation>,
    }
    to_json(&Doc {
        format_version: FORMAT_VERSION,
        relations: relations
            .iter()
            .map(|(a, s)| Relation {
                arrow: a.clone(),
                terms: path_sum_doc(s),
            })
            .collect(),
    })
}

pub fn graded_quiver_to_json(g: &GradedQuiver) -> String {
    #[derive(Serialize)]
    struct GradedArrowDoc {
        id: String,
        src: String,
        tgt: String,
        degree: i32,
        kind: String,
        differential: Vec<PathTermDoc>,
    }
    #[derive(Serialize)]
    struct Doc {
        format_version: u32,
        cy_dimension: u32,
        vertices: Vec<String>,
        arrows: Vec<GradedArrowDoc>,
    }
    to_json(&Doc {
        format_version: FORMAT_VERSION,
        cy_dimension: g.cy_dimension(),
        vertices: g.vertices().to_vec(),
        arrows: g
            .arrows()
            .iter()
            .map(|a| GradedArrowDoc {
                id: a.id.clone(),
                src: a.src.clone(),
                tgt: a.tgt.clone(),
                degree: a.degree,
                kind: match &a.kind {
                    ArrowKind::Original => "original".into(),
                    ArrowKind::Opposite(x) => format!("opposite:{x}"),
                    ArrowKind::Loop(v) => format!("loop:{v}"),
                },
                differential: g.differential(&a.id).map(path_sum_doc).unwrap_or_default(),
            })
            .collect(),
    })
}
