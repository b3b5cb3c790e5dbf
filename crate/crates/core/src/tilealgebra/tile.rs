use serde::{Deserialize, Serialize};

use super::TileError;
use crate::exactnum::numtheory::gcd;
use crate::exactnum::{int, niven_classify, rat, ExactAngle, QRoot3, Rational};

/// A triangle with sides `a ≤ b < c` and a 120° angle opposite `c`.
///
/// α is opposite `a`, β opposite `b`, γ = 2π/3 opposite `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TileSides", into = "TileSides")]
pub struct TileShape {
    pub a: QRoot3,
    pub b: QRoot3,
    pub c: QRoot3,
    pub cos_alpha: QRoot3,
    pub cos_beta: QRoot3,
    pub area: QRoot3,
}

#[derive(Serialize, Deserialize)]
struct TileSides {
    a: QRoot3,
    b: QRoot3,
    c: QRoot3,
}

impl TryFrom<TileSides> for TileShape {
    type Error = TileError;
    fn try_from(s: TileSides) -> Result<Self, TileError> {
        tile_from_sides(s.a, s.b, s.c)
    }
}

impl From<TileShape> for TileSides {
    fn from(t: TileShape) -> Self {
        TileSides { a: t.a, b: t.b, c: t.c }
    }
}

/// Builds a tile, swapping `a` and `b` if needed so that `a ≤ b`.
pub fn tile_from_sides(a: QRoot3, b: QRoot3, c: QRoot3) -> Result<TileShape, TileError> {
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(TileError::NonPositive);
    }
    let (a, b) = if a > b { (b, a) } else { (a, b) };
    let lhs = c.square();
    let rhs = &(&a.square() + &b.square()) + &(&a * &b);
    if lhs != rhs {
        return Err(TileError::LawOfCosines { a: a.to_string(), b: b.to_string(), c: c.to_string() });
    }
    let two = QRoot3::from_int(2);
    let cos_alpha = &(&(&b.square() + &c.square()) - &a.square()) / &(&(&two * &b) * &c);
    let cos_beta = &(&(&a.square() + &c.square()) - &b.square()) / &(&(&two * &a) * &c);
    let area = &(&(&a * &b) * &QRoot3::sqrt3()) / &QRoot3::from_int(4);
    Ok(TileShape { a, b, c, cos_alpha, cos_beta, area })
}

impl TileShape {
    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, TileError> {
        tile_from_sides(a.into(), b.into(), c.into())
    }

    /// sin α = a·sin γ / c = a√3 / (2c).
    pub fn sin_alpha(&self) -> QRoot3 {
        &(&self.a * &QRoot3::sqrt3()) / &(&QRoot3::from_int(2) * &self.c)
    }

    pub fn sin_beta(&self) -> QRoot3 {
        &(&self.b * &QRoot3::sqrt3()) / &(&QRoot3::from_int(2) * &self.c)
    }

    pub fn alpha(&self) -> ExactAngle {
        ExactAngle::from_cos_sin(self.cos_alpha.clone(), self.sin_alpha())
    }

    pub fn beta(&self) -> ExactAngle {
        ExactAngle::from_cos_sin(self.cos_beta.clone(), self.sin_beta())
    }

    pub fn gamma(&self) -> ExactAngle {
        ExactAngle::from_cos_sin(QRoot3::from_rational(rat(-1, 2)), QRoot3::new(int(0), rat(1, 2)))
    }

    /// `i·α + j·β + k·γ`.
    pub fn combo(&self, i: u32, j: u32, k: u32) -> ExactAngle {
        let mut t = ExactAngle::zero();
        for (n, a) in [(i, self.alpha()), (j, self.beta()), (k, self.gamma())] {
            for _ in 0..n {
                t = t.add(&a);
            }
        }
        t
    }

    pub fn is_isosceles(&self) -> bool {
        self.a == self.b
    }

    pub fn sides(&self) -> [&QRoot3; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Scale so that `c = √3/2 = sin γ`; ratios are unchanged.
    pub fn normalized(&self) -> TileShape {
        let k = &(&QRoot3::sqrt3() / &QRoot3::from_int(2)) / &self.c;
        tile_from_sides(&self.a * &k, &self.b * &k, &self.c * &k).expect("scaling preserves the law of cosines")
    }
}

/// `a = m² − n²`, `b = 2mn + n²`, `c = m² + mn + n²`.
pub fn eisenstein_triple(m: i64, n: i64) -> Result<(i64, i64, i64), TileError> {
    if n < 1 || m <= n {
        return Err(TileError::BadParameters(format!("need m > n >= 1, got m={m} n={n}")));
    }
    if gcd(m, n) != 1 {
        return Err(TileError::BadParameters(format!("gcd({m}, {n}) != 1")));
    }
    Ok((m * m - n * n, 2 * m * n + n * n, m * m + m * n + n * n))
}

/// Parameters `(m, n, k)` with `{a, b} = k·{m²−n², 2mn+n²}` and `c = k·(m²+mn+n²)`.
pub fn eisenstein_parameters(t: &TileShape) -> Option<(i64, i64, Rational)> {
    let x = (&t.a / &t.c).as_rational()?.clone();
    let y = (&t.b / &t.c).as_rational()?.clone();
    let c = t.c.as_rational()?.clone();
    for m in 2..200i64 {
        for n in 1..m {
            let Ok((pa, pb, pc)) = eisenstein_triple(m, n) else { continue };
            let (pa, pb) = (Rational::from_integer(pa.into()), Rational::from_integer(pb.into()));
            let pc = Rational::from_integer(pc.into());
            let matches = (&pa / &pc == x && &pb / &pc == y) || (&pb / &pc == x && &pa / &pc == y);
            if matches {
                return Some((m, n, &c / &pc));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TileClass {
    pub integer_similar: bool,
    pub alpha_rational_multiple_of_pi: bool,
    /// α/π when it is rational.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_over_pi: Option<String>,
}

/// A cosine in ℚ(√3) of a rational multiple of π must be one of
/// `0, ±1/2, ±1, ±√3/2`, so the answer is always decided here.
pub fn classify_tile(t: &TileShape) -> TileClass {
    let integer_similar = (&t.a / &t.c).is_rational() && (&t.b / &t.c).is_rational();
    let alpha = match t.cos_alpha.as_rational() {
        Some(c) => niven_classify(c),
        None => {
            let half_root3 = &QRoot3::sqrt3() / &QRoot3::from_int(2);
            if t.cos_alpha == half_root3 {
                Some(rat(1, 6))
            } else if t.cos_alpha == -half_root3 {
                Some(rat(5, 6))
            } else {
                None
            }
        }
    };
    TileClass {
        integer_similar,
        alpha_rational_multiple_of_pi: alpha.is_some(),
        alpha_over_pi: alpha.map(|a| a.to_string()),
    }
}

/// `(a + 2b) / (2a + b)`, checked against `cos α / cos β`.
pub fn cos_ratio(t: &TileShape) -> Result<Rational, TileError> {
    let two = QRoot3::from_int(2);
    let xi = &(&t.a + &(&two * &t.b)) / &(&(&two * &t.a) + &t.b);
    assert_eq!(xi, &t.cos_alpha / &t.cos_beta, "cosine ratio identity failed");
    xi.as_rational().cloned().ok_or(TileError::NotRational)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn from_sides_examples() {
        let t = TileShape::from_ints(3, 5, 7).unwrap();
        assert_eq!(t.cos_alpha, QRoot3::from_rational(rat(13, 14)));
        assert_eq!(t.cos_beta, QRoot3::from_rational(rat(11, 14)));
        assert_eq!(t.area, QRoot3::new(int(0), rat(15, 4)));
        let iso = tile_from_sides(1.into(), 1.into(), QRoot3::sqrt3()).unwrap();
        let h = QRoot3::new(int(0), rat(1, 2));
        assert_eq!(iso.cos_alpha, h);
        assert_eq!(iso.cos_beta, h);
        assert_eq!(iso.area, QRoot3::new(int(0), rat(1, 4)));
        assert!(matches!(TileShape::from_ints(3, 5, 6), Err(TileError::LawOfCosines { .. })));
        assert_eq!(TileShape::from_ints(0, 5, 7), Err(TileError::NonPositive));
    }

    #[test]
    fn canonical_order() {
        let t = TileShape::from_ints(8, 7, 13).unwrap();
        assert_eq!((t.a.clone(), t.b.clone()), (7.into(), 8.into()));
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(eisenstein_triple(2, 1).unwrap(), (3, 5, 7));
        assert_eq!(eisenstein_triple(3, 1).unwrap(), (8, 7, 13));
        assert_eq!(eisenstein_triple(3, 2).unwrap(), (5, 16, 19));
        assert!(eisenstein_triple(2, 2).is_err());
        assert!(eisenstein_triple(1, 2).is_err());
        assert!(eisenstein_triple(4, 2).is_err());
        let t = TileShape::from_ints(6, 10, 14).unwrap();
        assert_eq!(eisenstein_parameters(&t), Some((2, 1, int(2))));
    }

    #[test]
    fn cos_ratio_examples() {
        assert_eq!(cos_ratio(&TileShape::from_ints(3, 5, 7).unwrap()).unwrap(), rat(13, 11));
        assert_eq!(cos_ratio(&TileShape::from_ints(5, 16, 19).unwrap()).unwrap(), rat(37, 26));
        let iso = tile_from_sides(1.into(), 1.into(), QRoot3::sqrt3()).unwrap();
        assert_eq!(cos_ratio(&iso).unwrap(), int(1));
    }

    #[test]
    fn classify_examples() {
        let c = classify_tile(&TileShape::from_ints(3, 5, 7).unwrap());
        assert!(c.integer_similar && !c.alpha_rational_multiple_of_pi);
        let iso = tile_from_sides(1.into(), 1.into(), QRoot3::sqrt3()).unwrap();
        let c = classify_tile(&iso);
        assert!(!c.integer_similar && c.alpha_rational_multiple_of_pi);
        assert_eq!(c.alpha_over_pi.as_deref(), Some("1/6"));
    }

    #[test]
    fn json_shape() {
        let t = TileShape::from_ints(3, 5, 7).unwrap();
        let j = serde_json::to_value(&t).unwrap();
        assert_eq!(j["a"]["r"], "3");
        assert_eq!(j.as_object().unwrap().len(), 3);
        let back: TileShape = serde_json::from_value(j).unwrap();
        assert_eq!(back, t);
        let bad = serde_json::json!({"a": {"r": "3", "s": "0"}, "b": {"r": "5", "s": "0"}, "c": {"r": "6", "s": "0"}});
        assert!(serde_json::from_value::<TileShape>(bad).is_err());
    }

    fn arb_mn() -> impl Strategy<Value = (i64, i64)> {
        (2i64..40, 1i64..40).prop_filter_map("coprime m > n", |(m, n)| (m > n && gcd(m, n) == 1).then_some((m, n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn eisenstein_tiles_are_consistent((m, n) in arb_mn()) {
            let (a, b, c) = eisenstein_triple(m, n).unwrap();
            prop_assert_eq!(c * c, a * a + b * b + a * b);
            let t = TileShape::from_ints(a, b, c).unwrap();
            prop_assert!(t.area.is_positive());
            if t.a < t.b {
                prop_assert!(t.cos_alpha > t.cos_beta);
            }
            // (a + 2b)/(2a + b) with the float cosines as an outside opinion.
            let xi = cos_ratio(&t).unwrap();
            let (fa, fb) = (t.a.to_f64(), t.b.to_f64());
            prop_assert!((crate::exactnum::rational::to_f64(&xi) - (fa + 2.0 * fb) / (2.0 * fa + fb)).abs() < 1e-12);
            let c = classify_tile(&t);
            prop_assert!(c.integer_similar);
            prop_assert!(!c.alpha_rational_multiple_of_pi);
        }
    }
}
