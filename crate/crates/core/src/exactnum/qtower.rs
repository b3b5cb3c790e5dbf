//! The biquadratic field ℚ(√2, √3), stored as `x + y·√2` with `x, y ∈ ℚ(√3)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::qroot3::QRoot3;
use super::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QTower {
    x: QRoot3,
    y: QRoot3,
}

impl QTower {
    /// Builds `c1 + c2·√2 + c3·√3 + c6·√6`.
    pub fn new(c1: Rational, c2: Rational, c3: Rational, c6: Rational) -> Self {
        QTower { x: QRoot3::new(c1, c3), y: QRoot3::new(c2, c6) }
    }

    pub fn from_qroot3(x: QRoot3) -> Self {
        QTower { x, y: QRoot3::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_qroot3(QRoot3::from_int(n))
    }

    pub fn sqrt2() -> Self {
        QTower { x: QRoot3::zero(), y: QRoot3::one() }
    }

    pub fn sqrt3() -> Self {
        Self::from_qroot3(QRoot3::sqrt3())
    }

    /// Coefficients on the basis `{1, √2, √3, √6}`.
    pub fn coefficients(&self) -> [Rational; 4] {
        [self.x.r.clone(), self.y.r.clone(), self.x.s.clone(), self.y.s.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QTower { x: self.x.scale(k), y: self.y.scale(k) }
    }

    /// The element of ℚ(√3) this equals, when the √2 and √6 parts vanish.
    pub fn as_qroot3(&self) -> Option<&QRoot3> {
        self.y.is_zero().then_some(&self.x)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // (x + y√2)(x − y√2) = x² − 2y² lies in ℚ(√3).
        let d = &(&self.x * &self.x) - &(&(&self.y * &self.y) * &QRoot3::from_int(2));
        let di = d.inv()?;
        Some(QTower { x: &self.x * &di, y: -(&self.y * &di) })
    }

    pub fn to_f64(&self) -> f64 {
        self.x.to_f64() + self.y.to_f64() * 2f64.sqrt()
    }
}

impl fmt::Display for QTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c1, c2, c3, c6] = self.coefficients();
        write!(f, "{c1} + ({c2})√2 + ({c3})√3 + ({c6})√6")
    }
}

impl From<Rational> for QTower {
    fn from(r: Rational) -> Self {
        QTower::from_qroot3(QRoot3::from_rational(r))
    }
}

impl<'a> Add<&'a QTower> for &'a QTower {
    type Output = QTower;
    fn add(self, o: &QTower) -> QTower {
        QTower { x: &self.x + &o.x, y: &self.y + &o.y }
    }
}

impl<'a> Sub<&'a QTower> for &'a QTower {
    type Output = QTower;
    fn sub(self, o: &QTower) -> QTower {
        QTower { x: &self.x - &o.x, y: &self.y - &o.y }
    }
}

impl<'a> Mul<&'a QTower> for &'a QTower {
    type Output = QTower;
    fn mul(self, o: &QTower) -> QTower {
        let two = QRoot3::from_rational(int(2));
        QTower {
            x: &(&self.x * &o.x) + &(&(&self.y * &o.y) * &two),
            y: &(&self.x * &o.y) + &(&self.y * &o.x),
        }
    }
}

impl Neg for &QTower {
    type Output = QTower;
    fn neg(self) -> QTower {
        QTower { x: -&self.x, y: -&self.y }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = QTower> {
        prop::array::uniform4((-20i64..20, 1i64..9))
            .prop_map(|c| QTower::new(rat(c[0].0, c[0].1), rat(c[1].0, c[1].1), rat(c[2].0, c[2].1), rat(c[3].0, c[3].1)))
    }

    #[test]
    fn basis_products() {
        let s2 = QTower::sqrt2();
        let s3 = QTower::sqrt3();
        assert_eq!(&s2 * &s2, QTower::from_int(2));
        assert_eq!((&s2 * &s3).coefficients(), [int(0), int(0), int(0), int(1)]);
        let s6 = &s2 * &s3;
        assert_eq!(&s6 * &s6, QTower::from_int(6));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn field_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), QTower::from_int(1));
            }
            let f = (&x * &y).to_f64();
            prop_assert!((f - x.to_f64() * y.to_f64()).abs() <= 1e-9 * (1.0 + f.abs()));
        }
    }
}
