use serde::{Deserialize, Serialize};

use super::ConstraintError;
use crate::exactnum::{ExactAngle, QRoot3, Rational, Vec2};
use crate::tilealgebra::TileShape;

/// The angle `alpha·α + beta·β + gamma·γ`; serialized as `[i, j, k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct AngleCombo {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

impl From<[u32; 3]> for AngleCombo {
    fn from([alpha, beta, gamma]: [u32; 3]) -> Self {
        AngleCombo { alpha, beta, gamma }
    }
}

impl From<AngleCombo> for [u32; 3] {
    fn from(c: AngleCombo) -> Self {
        [c.alpha, c.beta, c.gamma]
    }
}

impl AngleCombo {
    pub fn angle(&self, tile: &TileShape) -> ExactAngle {
        tile.combo(self.alpha, self.beta, self.gamma)
    }
}

/// Target triangle ABC with `X = BC ≥ Y = AC ≥ Z = AB`; `angles` are at A, B, C.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleSpec {
    pub label: String,
    pub sides: [QRoot3; 3],
    pub angles: [AngleCombo; 3],
}

const MAX_COMBO: u32 = 24;

/// The cheapest combination of tile angles equal to the angle in (0, π)
/// with the given cosine; ties go to the most balanced α/β split.
fn match_angle(tile: &TileShape, cos: &QRoot3) -> Option<AngleCombo> {
    let pi = ExactAngle::pi();
    let mut best: Option<(u32, u32, AngleCombo)> = None;
    for gamma in 0..=1 {
        let mut ai = tile.combo(0, 0, gamma);
        for alpha in 0..=MAX_COMBO {
            if ai >= pi {
                break;
            }
            let mut aj = ai.clone();
            for beta in 0..=MAX_COMBO {
                if aj >= pi {
                    break;
                }
                if aj.turns == 0 && aj.sin().is_positive() && aj.cos() == cos {
                    let key = (alpha + beta + gamma, alpha.abs_diff(beta), AngleCombo { alpha, beta, gamma });
                    if best.as_ref().is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                        best = Some(key);
                    }
                }
                aj = aj.add(&tile.beta());
            }
            ai = ai.add(&tile.alpha());
        }
    }
    best.map(|b| b.2)
}

impl TriangleSpec {
    /// Parses `equilateral:S` or `triangle:X,Y,Z`, with sides in the
    /// `INT`, `INT/INT`, `sqrt3`, `RAT*sqrt3` grammar.
    pub fn parse(target: &str, tile: &TileShape) -> Result<TriangleSpec, ConstraintError> {
        let bad = |m: &str| ConstraintError::BadTarget(format!("{target:?}: {m}"));
        let (kind, rest) = target.split_once(':').ok_or_else(|| bad("expected KIND:SIDES"))?;
        let num = |s: &str| QRoot3::parse(s).ok_or_else(|| bad(&format!("cannot parse {s:?}")));
        let sides = match kind.trim() {
            "equilateral" => {
                let s = num(rest)?;
                [s.clone(), s.clone(), s]
            }
            "triangle" => {
                let v: Vec<&str> = rest.split(',').collect();
                if v.len() != 3 {
                    return Err(bad("expected three sides"));
                }
                [num(v[0])?, num(v[1])?, num(v[2])?]
            }
            _ => return Err(bad("unknown kind; use equilateral:S or triangle:X,Y,Z")),
        };
        Self::from_sides(target.trim().to_string(), sides, tile)
    }

    pub fn from_sides(label: String, mut sides: [QRoot3; 3], tile: &TileShape) -> Result<TriangleSpec, ConstraintError> {
        sides.sort_by(|a, b| b.cmp(a));
        let [x, y, z] = &sides;
        if !z.is_positive() {
            return Err(ConstraintError::BadTarget(format!("{label}: sides must be positive")));
        }
        if x >= &(y + z) {
            return Err(ConstraintError::BadTarget(format!("{label}: degenerate triangle")));
        }
        let two = QRoot3::from_int(2);
        let cos = |opp: &QRoot3, p: &QRoot3, q: &QRoot3| &(&(&p.square() + &q.square()) - &opp.square()) / &(&(&two * p) * q);
        let cosines = [cos(x, y, z), cos(y, x, z), cos(z, x, y)];
        let mut angles = Vec::with_capacity(3);
        for c in &cosines {
            angles.push(match_angle(tile, c).ok_or(ConstraintError::AnglesNotExpressible)?);
        }
        let spec = TriangleSpec { label, sides, angles: [angles[0], angles[1], angles[2]] };
        spec.validate(tile)?;
        Ok(spec)
    }

    /// Checks that the angles sum to π and agree with the sides.
    pub fn validate(&self, tile: &TileShape) -> Result<(), ConstraintError> {
        let bad = |m: &str| ConstraintError::BadTarget(format!("{}: {m}", self.label));
        let [x, y, z] = &self.sides;
        if !(x >= y && y >= z && z.is_positive()) {
            return Err(bad("sides must satisfy X >= Y >= Z > 0"));
        }
        let sum = self.angles.iter().fold(ExactAngle::zero(), |s, a| s.add(&a.angle(tile)));
        if sum != ExactAngle::pi() {
            return Err(bad("angles do not sum to π"));
        }
        let [a, b, c] = self.vertices(tile);
        if (&a - &c).norm2() != y.square() || (&a - &b).norm2() != z.square() {
            return Err(bad("angles disagree with the side lengths"));
        }
        Ok(())
    }

    /// Corners `[A, B, C]` counterclockwise with `B = (0,0)` and `C = (X, 0)`.
    pub fn vertices(&self, tile: &TileShape) -> [Vec2; 3] {
        let b_angle = self.angles[1].angle(tile);
        let [x, _, z] = &self.sides;
        let a = Vec2::new(z * b_angle.cos(), z * b_angle.sin());
        [a, Vec2::zero(), Vec2::new(x.clone(), QRoot3::zero())]
    }

    /// ½·X·Z·sin B.
    pub fn area(&self, tile: &TileShape) -> QRoot3 {
        let b_angle = self.angles[1].angle(tile);
        let [x, _, z] = &self.sides;
        &(&(x * z) * b_angle.sin()) / &QRoot3::from_int(2)
    }

    /// Whether the triangle's angles are α, β and γ in some order.
    pub fn is_similar_to(&self, tile: &TileShape) -> bool {
        let mut v: Vec<ExactAngle> = self.angles.iter().map(|a| a.angle(tile)).collect();
        v.sort();
        let mut t = vec![tile.alpha(), tile.beta(), tile.gamma()];
        t.sort();
        v == t
    }

    /// Hypotheses under which each of `e`, `f`, `r` must be nonzero: no
    /// corner equals γ, the target is not similar to the tile, and the tile
    /// is scalene.
    pub fn lemma10_applies(&self, tile: &TileShape) -> bool {
        let g = tile.gamma();
        !tile.is_isosceles() && !self.is_similar_to(tile) && self.angles.iter().all(|a| a.angle(tile) != g)
    }
}

/// `Area(tri) / Area(tile)`.
pub fn area_count(tile: &TileShape, tri: &TriangleSpec) -> Result<Rational, ConstraintError> {
    let q = &tri.area(tile) / &tile.area;
    q.as_rational().cloned().ok_or_else(|| ConstraintError::IrrationalArea(q.to_string()))
}

/// `N·a·c = X·Z`, the area equation when the corner B is a single β.
/// `None` when B is not β.
pub fn area_equation_nac(tile: &TileShape, tri: &TriangleSpec, n: &Rational) -> Option<bool> {
    if tri.angles[1].angle(tile) != tile.beta() {
        return None;
    }
    let [x, _, z] = &tri.sides;
    Some(&(&tile.a * &tile.c).scale(n) == &(x * z))
}

/// `N·a·b = X·Z`, the area equation when the corner B is π/3.
pub fn area_equation_nab(tile: &TileShape, tri: &TriangleSpec, n: &Rational) -> Option<bool> {
    if tri.angles[1].angle(tile) != tile.combo(1, 1, 0) {
        return None;
    }
    let [x, _, z] = &tri.sides;
    Some(&(&tile.a * &tile.b).scale(n) == &(x * z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::tilealgebra::tile_from_sides;

    fn iso() -> TileShape {
        tile_from_sides(1.into(), 1.into(), QRoot3::sqrt3()).unwrap()
    }

    #[test]
    fn equilateral_targets() {
        let t = TileShape::from_ints(3, 5, 7).unwrap();
        let tri = TriangleSpec::parse("equilateral:15", &t).unwrap();
        assert_eq!(tri.angles, [AngleCombo::from([1, 1, 0]); 3]);
        assert_eq!(area_count(&t, &tri).unwrap(), int(15));
        let tri = TriangleSpec::parse("equilateral:2*sqrt3", &iso()).unwrap();
        assert_eq!(area_count(&iso(), &tri).unwrap(), int(12));
        let tri = TriangleSpec::parse("equilateral:sqrt3", &iso()).unwrap();
        assert_eq!(area_count(&iso(), &tri).unwrap(), int(3));
        assert_eq!(area_equation_nab(&iso(), &tri, &int(3)), Some(true));
        // Side 1 has exactly the tile's area.
        let tri = TriangleSpec::parse("equilateral:1", &iso()).unwrap();
        assert_eq!(area_count(&iso(), &tri).unwrap(), int(1));
        let tri = TriangleSpec::parse("equilateral:1/2", &iso()).unwrap();
        assert_eq!(area_count(&iso(), &tri).unwrap(), rat(1, 4));
    }

    #[test]
    fn similar_target() {
        let t = TileShape::from_ints(3, 5, 7).unwrap();
        let tri = TriangleSpec::parse("triangle:6,10,14", &t).unwrap();
        assert_eq!(tri.sides, [14.into(), 10.into(), 6.into()]);
        assert_eq!(tri.angles, [[0, 0, 1].into(), [0, 1, 0].into(), [1, 0, 0].into()]);
        assert!(tri.is_similar_to(&t));
        assert!(!tri.lemma10_applies(&t));
        assert_eq!(area_count(&t, &tri).unwrap(), int(4));
        assert_eq!(area_equation_nac(&t, &tri, &int(4)), Some(true));
        assert_eq!(area_equation_nac(&t, &tri, &int(5)), Some(false));
        assert_eq!(area_equation_nab(&t, &tri, &int(4)), None);
        let [a, b, c] = tri.vertices(&t);
        assert!((&b - &a).cross(&(&c - &a)).is_positive());
    }

    #[test]
    fn area_scaling() {
        let t = TileShape::from_ints(5, 16, 19).unwrap();
        for k in 1..5i64 {
            let tri = TriangleSpec::parse(&format!("triangle:{},{},{}", 5 * k, 16 * k, 19 * k), &t).unwrap();
            assert_eq!(area_count(&t, &tri).unwrap(), int(k * k));
            assert_eq!(&tri.area(&t) / &t.area, QRoot3::from_int(k * k));
        }
    }

    #[test]
    fn bad_targets() {
        let t = TileShape::from_ints(3, 5, 7).unwrap();
        assert!(TriangleSpec::parse("square:3", &t).is_err());
        assert!(TriangleSpec::parse("triangle:1,2,3", &t).is_err());
        assert_eq!(TriangleSpec::parse("triangle:3,4,5", &t), Err(ConstraintError::AnglesNotExpressible));
    }

    #[test]
    fn json_roundtrip() {
        let t = TileShape::from_ints(3, 5, 7).unwrap();
        let tri = TriangleSpec::parse("equilateral:15", &t).unwrap();
        let s = serde_json::to_string(&tri).unwrap();
        assert!(s.contains("\"angles\":[[1,1,0],[1,1,0],[1,1,0]]"));
        let back: TriangleSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, tri);
        back.validate(&t).unwrap();
    }
}
