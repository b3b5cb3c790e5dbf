//! Necessary conditions on a tiling: how the tile angles can fill the
//! target's corners, how the target's sides split into tile edges, and
//! the area count.

mod dmatrix;
mod triangle;
mod xz;

use serde::Serialize;

pub use dmatrix::{enumerate_dmatrices, row_solutions, DMatrix};
pub use triangle::{area_count, area_equation_nab, area_equation_nac, AngleCombo, TriangleSpec};
pub use xz::{lemma13_ratio, xz_coefficients, xz_scaled_parts, Arith};

use crate::exactnum::{int, Rational};
use crate::tilealgebra::{classify_tile, TileShape};

/// Documented bound on the total α and β counts at the target's corners.
pub const MAX_SPLIT_COUNT: u32 = 12;

#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConstraintError {
    #[error("P = Q: the angle system is singular")]
    SingularSplit,
    #[error("area ratio {0} is not rational")]
    IrrationalArea(String),
    #[error("bad target: {0}")]
    BadTarget(String),
    #[error("angles of the target are not combinations of the tile angles")]
    AnglesNotExpressible,
}

/// Total numbers of α, β and γ angles at the three corners of the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexSplit {
    #[serde(rename = "P")]
    pub p: u32,
    #[serde(rename = "Q")]
    pub q: u32,
    #[serde(rename = "R")]
    pub r: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AngleDesc {
    /// α as a rational multiple of π.
    RationalMultiple(Rational),
    Irrational,
}

impl AngleDesc {
    pub fn of_tile(t: &TileShape) -> AngleDesc {
        match classify_tile(t).alpha_over_pi {
            Some(s) => AngleDesc::RationalMultiple(crate::exactnum::rational::parse_rational(&s).expect("own output")),
            None => AngleDesc::Irrational,
        }
    }
}

impl VertexSplit {
    /// `P·α + Q·β + R·γ = π` with `β = π/3 − α` and `γ = 2π/3`.
    pub fn satisfies(&self, alpha: &AngleDesc) -> bool {
        let (p, q, r) = (self.p as i64, self.q as i64, self.r as i64);
        // (P − Q)·α = π·(3 − Q − 2R)/3
        match alpha {
            AngleDesc::Irrational => p == q && q + 2 * r == 3,
            AngleDesc::RationalMultiple(t) => &int(p - q) * t == Rational::new((3 - q - 2 * r).into(), 3.into()),
        }
    }
}

/// Every split with `R ≤ 1` and `P, Q ≤ MAX_SPLIT_COUNT` meeting the angle
/// sum. The split (1,1,1), where each corner holds one whole tile angle, is
/// the similar case and is left out.
pub fn enumerate_vertex_splits(alpha: &AngleDesc) -> Vec<VertexSplit> {
    let mut out = Vec::new();
    for r in 0..=1 {
        for p in 0..=MAX_SPLIT_COUNT {
            for q in 0..=MAX_SPLIT_COUNT {
                let s = VertexSplit { p, q, r };
                if p + q + r >= 3 && (p, q, r) != (1, 1, 1) && s.satisfies(alpha) {
                    out.push(s);
                }
            }
        }
    }
    out.sort();
    out
}

/// α/π = (2R + Q − 3) / (3(Q − P)).
pub fn solve_alpha_from_split(s: &VertexSplit) -> Result<Rational, ConstraintError> {
    if s.p == s.q {
        return Err(ConstraintError::SingularSplit);
    }
    let num = 2 * s.r as i64 + s.q as i64 - 3;
    let den = 3 * (s.q as i64 - s.p as i64);
    Ok(Rational::new(num.into(), den.into()))
}

/// Full report used by `constraints derive`.
#[derive(Clone, Debug, Serialize)]
pub struct ConstraintReport {
    pub splits: Vec<VertexSplit>,
    pub dmatrices: Vec<DMatrix>,
    #[serde(rename = "N")]
    pub n: Option<String>,
    pub n_is_integer: bool,
    pub lemma10_applies: bool,
}

pub fn derive(tile: &TileShape, tri: &TriangleSpec) -> ConstraintReport {
    let splits = enumerate_vertex_splits(&AngleDesc::of_tile(tile));
    let dmatrices = enumerate_dmatrices(tile, tri);
    let n = area_count(tile, tri).ok();
    ConstraintReport {
        splits,
        dmatrices,
        n_is_integer: n.as_ref().is_some_and(crate::exactnum::rational::is_integer),
        n: n.map(|n| n.to_string()),
        lemma10_applies: tri.lemma10_applies(tile),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn split(p: u32, q: u32, r: u32) -> VertexSplit {
        VertexSplit { p, q, r }
    }

    #[test]
    fn solved_angles() {
        assert_eq!(solve_alpha_from_split(&split(0, 4, 0)).unwrap(), rat(1, 12));
        assert_eq!(solve_alpha_from_split(&split(1, 4, 0)).unwrap(), rat(1, 9));
        assert_eq!(solve_alpha_from_split(&split(0, 5, 0)).unwrap(), rat(2, 15));
        assert_eq!(solve_alpha_from_split(&split(3, 3, 0)), Err(ConstraintError::SingularSplit));
    }

    #[test]
    fn split_examples() {
        assert_eq!(enumerate_vertex_splits(&AngleDesc::Irrational), vec![split(3, 3, 0)]);
        let s12 = enumerate_vertex_splits(&AngleDesc::RationalMultiple(rat(1, 12)));
        assert!(s12.contains(&split(0, 4, 0)) && s12.contains(&split(3, 3, 0)));
        let s9 = enumerate_vertex_splits(&AngleDesc::RationalMultiple(rat(1, 9)));
        assert!(s9.contains(&split(1, 4, 0)));
        let t = TileShape::from_ints(3, 5, 7).unwrap();
        assert_eq!(AngleDesc::of_tile(&t), AngleDesc::Irrational);
    }

    #[test]
    fn split_oracle_in_degrees() {
        // Integer degrees: P·α° + Q·(60 − α)° + R·120° = 180°.
        for alpha_deg in [15i64, 20, 24] {
            let desc = AngleDesc::RationalMultiple(rat(alpha_deg, 180));
            let mut expect = Vec::new();
            for r in 0..=1i64 {
                for p in 0..=12i64 {
                    for q in 0..=12i64 {
                        if p * alpha_deg + q * (60 - alpha_deg) + 120 * r == 180 && p + q + r >= 3 && (p, q, r) != (1, 1, 1) {
                            expect.push(split(p as u32, q as u32, r as u32));
                        }
                    }
                }
            }
            expect.sort();
            assert_eq!(enumerate_vertex_splits(&desc), expect);
        }
    }

    proptest! {
        #[test]
        fn solve_then_enumerate(p in 0u32..6, q in 0u32..6, r in 0u32..2) {
            let s = split(p, q, r);
            prop_assume!(p != q && p + q + r >= 3);
            let t = solve_alpha_from_split(&s).unwrap();
            let desc = AngleDesc::RationalMultiple(t);
            prop_assert!(s.satisfies(&desc));
            prop_assert!(enumerate_vertex_splits(&desc).contains(&s));
        }
    }
}
