//! Certificates and the independent checker. Nothing here shares state or
//! code paths with the search beyond the basic predicates.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::geom::{in_closed_triangle, orient, triangles_overlap, Placement};
use super::relations::extract_edge_relations;
use crate::constraints::TriangleSpec;
use crate::exactnum::{rat, QRoot3};
use crate::tilealgebra::{EdgeRelation, TileShape};

pub const SCHEMA: &str = "v1";

/// A claimed tiling of `target` by `placements.len()` copies of `tile`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub tile: TileShape,
    pub target: TriangleSpec,
    pub allow_mirror: bool,
    /// The declared tile count.
    pub n: u64,
    pub placements: Vec<Placement>,
}

#[derive(Serialize, Deserialize)]
struct CertRepr {
    schema: String,
    tile: TileShape,
    target: TriangleSpec,
    allow_mirror: bool,
    #[serde(rename = "N")]
    n: u64,
    placements: Vec<Placement>,
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CertRepr {
            schema: SCHEMA.into(),
            tile: self.tile.clone(),
            target: self.target.clone(),
            allow_mirror: self.allow_mirror,
            n: self.n,
            placements: self.placements.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Certificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CertRepr::deserialize(d)?;
        if r.schema != SCHEMA {
            return Err(serde::de::Error::custom(format!("unsupported certificate schema {:?}", r.schema)));
        }
        Ok(Certificate { tile: r.tile, target: r.target, allow_mirror: r.allow_mirror, n: r.n, placements: r.placements })
    }
}

impl Certificate {
    pub fn new(tile: TileShape, target: TriangleSpec, allow_mirror: bool, placements: Vec<Placement>) -> Self {
        Certificate { tile, target, allow_mirror, n: placements.len() as u64, placements }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    Empty,
    CountMismatch { declared: u64, actual: u64 },
    InvalidTarget(String),
    Noncongruent(usize),
    /// Congruent, but the `mirrored` flag names the wrong handedness.
    WrongHandedness(usize),
    MirrorNotAllowed(usize),
    Orientation(usize),
    Overlap(usize, usize),
    OutsideTarget(usize),
    AreaMismatch { expected: String, actual: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "Empty"),
            Violation::CountMismatch { declared, actual } => write!(f, "CountMismatch(N={declared}, placements={actual})"),
            Violation::InvalidTarget(m) => write!(f, "InvalidTarget({m})"),
            Violation::Noncongruent(i) => write!(f, "Noncongruent({i})"),
            Violation::WrongHandedness(i) => write!(f, "WrongHandedness({i})"),
            Violation::MirrorNotAllowed(i) => write!(f, "MirrorNotAllowed({i})"),
            Violation::Orientation(i) => write!(f, "Orientation({i})"),
            Violation::Overlap(i, j) => write!(f, "Overlap({i},{j})"),
            Violation::OutsideTarget(i) => write!(f, "OutsideTarget({i})"),
            Violation::AreaMismatch { expected, actual } => write!(f, "AreaMismatch(expected {expected}, got {actual})"),
        }
    }
}

/// Whether a tiling of a non-similar target by a scalene tile shows an
/// edge relation, as every such tiling must.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationProperty {
    Realized,
    Missing,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
    pub relations: Vec<EdgeRelation>,
    pub edge_relation_property: RelationProperty,
}

fn is_rotation(seq: &[QRoot3; 3], pat: &[QRoot3; 3]) -> bool {
    (0..3).any(|k| (0..3).all(|i| seq[(i + k) % 3] == pat[i]))
}

pub fn check_certificate(cert: &Certificate) -> CheckReport {
    let mut v = Vec::new();
    let tile = &cert.tile;
    let ps = &cert.placements;
    if ps.is_empty() {
        v.push(Violation::Empty);
    }
    if cert.n != ps.len() as u64 {
        v.push(Violation::CountMismatch { declared: cert.n, actual: ps.len() as u64 });
    }
    let target_ok = match cert.target.validate(tile) {
        Ok(()) => true,
        Err(e) => {
            v.push(Violation::InvalidTarget(e.to_string()));
            false
        }
    };
    let (a2, b2, c2) = (tile.a.square(), tile.b.square(), tile.c.square());
    let direct = [c2.clone(), a2.clone(), b2.clone()];
    let mirror = [c2, b2, a2];
    for (i, p) in ps.iter().enumerate() {
        if !p.area2().is_positive() {
            v.push(Violation::Orientation(i));
            continue;
        }
        let seq = p.edges().map(|(s, e)| (e - s).norm2());
        let (want, other) = if p.mirrored { (&mirror, &direct) } else { (&direct, &mirror) };
        if !is_rotation(&seq, want) {
            v.push(if is_rotation(&seq, other) { Violation::WrongHandedness(i) } else { Violation::Noncongruent(i) });
        } else if p.mirrored && !cert.allow_mirror && !is_rotation(&seq, &direct) {
            v.push(Violation::MirrorNotAllowed(i));
        }
    }
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            if triangles_overlap(&ps[i].v, &ps[j].v) {
                v.push(Violation::Overlap(i, j));
            }
        }
    }
    if target_ok {
        let t = cert.target.vertices(tile);
        for (i, p) in ps.iter().enumerate() {
            if !p.v.iter().all(|q| in_closed_triangle(q, &t)) {
                v.push(Violation::OutsideTarget(i));
            }
        }
        let target2 = orient(&t[0], &t[1], &t[2]);
        let sum = ps.iter().fold(QRoot3::zero(), |s, p| &s + &p.area2());
        if sum != target2 {
            let half = |x: &QRoot3| x.scale(&rat(1, 2)).to_string();
            v.push(Violation::AreaMismatch { expected: half(&target2), actual: half(&sum) });
        }
    }
    let valid = v.is_empty();
    let relations = if valid { extract_edge_relations(cert) } else { Vec::new() };
    let applies = !tile.is_isosceles() && !cert.target.is_similar_to(tile);
    let prop = match (applies && valid, relations.is_empty()) {
        (false, _) => RelationProperty::NotApplicable,
        (true, false) => RelationProperty::Realized,
        (true, true) => RelationProperty::Missing,
    };
    let mut warnings = Vec::new();
    if prop == RelationProperty::Missing {
        warnings.push("scalene tile, target not similar to it, yet no edge relation is realized".to_string());
    }
    CheckReport { valid, violations: v, warnings, relations, edge_relation_property: prop }
}
