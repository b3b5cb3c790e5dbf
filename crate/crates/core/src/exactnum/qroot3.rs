//! The real quadratic field ℚ(√3). All tiling coordinates live here.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{self, int, parse_rational, sqrt_exact, Rational};

/// `r + s·√3` with rational `r`, `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QRoot3 {
    #[serde(with = "rational::serde_str")]
    pub r: Rational,
    #[serde(with = "rational::serde_str")]
    pub s: Rational,
}

impl QRoot3 {
    pub fn new(r: Rational, s: Rational) -> Self {
        QRoot3 { r, s }
    }

    pub fn from_rational(r: Rational) -> Self {
        QRoot3 { r, s: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt3() -> Self {
        QRoot3 { r: Rational::zero(), s: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.r)
    }

    /// Field conjugate `r − s√3`.
    pub fn conj(&self) -> Self {
        QRoot3 { r: self.r.clone(), s: -&self.s }
    }

    /// Field norm `r² − 3s²`.
    pub fn norm(&self) -> Rational {
        &self.r * &self.r - int(3) * &self.s * &self.s
    }

    pub fn sign(&self) -> i32 {
        qr3_sign(self)
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QRoot3 { r: &self.r / &n, s: -&self.s / &n })
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QRoot3 { r: &self.r * k, s: &self.s * k }
    }

    /// Exact square root inside ℚ(√3), when one exists and the value is
    /// nonnegative. Returns the nonnegative root.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.s.is_zero() {
            if let Some(p) = sqrt_exact(&self.r) {
                return Some(QRoot3::from_rational(p));
            }
            let q = sqrt_exact(&(&self.r / int(3)))?;
            return Some(QRoot3 { r: Rational::zero(), s: q });
        }
        // (p + q√3)² = p² + 3q² + 2pq√3, so p² = (r ± √(r² − 3s²)) / 2.
        let disc = sqrt_exact(&self.norm())?;
        for cand in [(&self.r + &disc) / int(2), (&self.r - &disc) / int(2)] {
            if let Some(p) = sqrt_exact(&cand) {
                if p.is_zero() {
                    continue;
                }
                let q = &self.s / (int(2) * &p);
                let root = QRoot3 { r: p, s: q };
                if &root * &root == *self {
                    return Some(root.abs());
                }
            }
        }
        None
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&self.r) + rational::to_f64(&self.s) * 3f64.sqrt()
    }

    /// Parses the command-line grammar: a sum of terms, each `INT`, `INT/INT`,
    /// `sqrt3`, or `RAT*sqrt3`, e.g. `3/2*sqrt3` or `1+2*sqrt3`.
    pub fn parse(text: &str) -> Option<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return None;
        }
        let mut total = QRoot3::zero();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            let mut value = parse_term(term)?;
            if negative {
                value = -value;
            }
            total = total + value;
            rest = tail;
        }
        Some(total)
    }
}

fn parse_term(term: &str) -> Option<QRoot3> {
    if term.is_empty() {
        return None;
    }
    if term == "sqrt3" {
        return Some(QRoot3::sqrt3());
    }
    if let Some(coef) = term.strip_suffix("*sqrt3") {
        return Some(QRoot3 { r: Rational::zero(), s: parse_rational(coef)? });
    }
    Some(QRoot3::from_rational(parse_rational(term)?))
}

/// Exact sign of `r + s√3`.
pub fn qr3_sign(x: &QRoot3) -> i32 {
    let sr = sgn(&x.r);
    let ss = sgn(&x.s);
    if ss == 0 {
        return sr;
    }
    if sr == 0 || sr == ss {
        return ss;
    }
    // Opposite signs: compare r² with 3s².
    let r2 = &x.r * &x.r;
    let s2 = int(3) * &x.s * &x.s;
    match r2.cmp(&s2) {
        Ordering::Greater => sr,
        Ordering::Less => ss,
        Ordering::Equal => 0,
    }
}

fn sgn(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QRoot3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QRoot3 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for QRoot3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r.is_zero(), self.s.is_zero()) {
            (_, true) => write!(f, "{}", self.r),
            (true, false) => write!(f, "{}*sqrt3", self.s),
            (false, false) => {
                if self.s.is_negative() {
                    write!(f, "{}-{}*sqrt3", self.r, -&self.s)
                } else {
                    write!(f, "{}+{}*sqrt3", self.r, self.s)
                }
            }
        }
    }
}

impl From<Rational> for QRoot3 {
    fn from(r: Rational) -> Self {
        QRoot3::from_rational(r)
    }
}

impl From<i64> for QRoot3 {
    fn from(n: i64) -> Self {
        QRoot3::from_int(n)
    }
}

impl<'a> Add<&'a QRoot3> for &'a QRoot3 {
    type Output = QRoot3;
    fn add(self, o: &QRoot3) -> QRoot3 {
        QRoot3 { r: &self.r + &o.r, s: &self.s + &o.s }
    }
}

impl<'a> Sub<&'a QRoot3> for &'a QRoot3 {
    type Output = QRoot3;
    fn sub(self, o: &QRoot3) -> QRoot3 {
        QRoot3 { r: &self.r - &o.r, s: &self.s - &o.s }
    }
}

impl<'a> Mul<&'a QRoot3> for &'a QRoot3 {
    type Output = QRoot3;
    fn mul(self, o: &QRoot3) -> QRoot3 {
        QRoot3 {
            r: &self.r * &o.r + int(3) * &self.s * &o.s,
            s: &self.r * &o.s + &self.s * &o.r,
        }
    }
}

impl<'a> Div<&'a QRoot3> for &'a QRoot3 {
    type Output = QRoot3;
    fn div(self, o: &QRoot3) -> QRoot3 {
        self * &o.inv().expect("division by zero in Q(sqrt3)")
    }
}

impl Neg for &QRoot3 {
    type Output = QRoot3;
    fn neg(self) -> QRoot3 {
        QRoot3 { r: -&self.r, s: -&self.s }
    }
}

impl Neg for QRoot3 {
    type Output = QRoot3;
    fn neg(self) -> QRoot3 {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QRoot3> for QRoot3 {
            type Output = QRoot3;
            fn $m(self, o: QRoot3) -> QRoot3 {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a QRoot3> for QRoot3 {
            type Output = QRoot3;
            fn $m(self, o: &QRoot3) -> QRoot3 {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<QRoot3> for &'a QRoot3 {
            type Output = QRoot3;
            fn $m(self, o: QRoot3) -> QRoot3 {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;
    use proptest::prelude::*;

    fn q(r: (i64, i64), s: (i64, i64)) -> QRoot3 {
        QRoot3::new(rat(r.0, r.1), rat(s.0, s.1))
    }

    #[test]
    fn sign_examples() {
        assert_eq!(qr3_sign(&q((2, 1), (-1, 1))), 1);
        assert_eq!(qr3_sign(&q((1, 1), (-1, 1))), -1);
        assert_eq!(qr3_sign(&QRoot3::zero()), 0);
        // −7 + 4√3 ≈ −0.072: 49 > 48 so the sign of r wins.
        assert_eq!(qr3_sign(&q((-7, 1), (4, 1))), -1);
    }

    #[test]
    fn sign_tie_is_impossible_but_zero_detected() {
        // r² = 3s² has no rational solution except 0, so only 0 maps to 0.
        assert_eq!(qr3_sign(&q((0, 1), (0, 1))), 0);
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(QRoot3::parse("sqrt3").unwrap(), QRoot3::sqrt3());
        assert_eq!(QRoot3::parse("3/2*sqrt3").unwrap(), q((0, 1), (3, 2)));
        assert_eq!(QRoot3::parse("1+2*sqrt3").unwrap(), q((1, 1), (2, 1)));
        assert_eq!(QRoot3::parse("-1/2").unwrap(), q((-1, 2), (0, 1)));
        assert_eq!(QRoot3::parse("2-sqrt3").unwrap(), q((2, 1), (-1, 1)));
        assert!(QRoot3::parse("").is_none());
        assert!(QRoot3::parse("sqrt2").is_none());
        assert!(QRoot3::parse("1+").is_none());
    }

    #[test]
    fn display_roundtrips_through_parse() {
        for x in [q((3, 4), (-1, 2)), q((0, 1), (5, 1)), q((-2, 1), (0, 1)), q((1, 3), (1, 7))] {
            assert_eq!(QRoot3::parse(&x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn exact_square_roots() {
        let x = q((7, 1), (4, 1)); // (2 + √3)²
        assert_eq!(x.sqrt_exact().unwrap(), q((2, 1), (1, 1)));
        assert_eq!(QRoot3::from_int(3).sqrt_exact().unwrap(), QRoot3::sqrt3());
        assert_eq!(q((3, 4), (0, 1)).sqrt_exact().unwrap(), q((0, 1), (1, 2)));
        assert!(QRoot3::from_int(2).sqrt_exact().is_none());
        assert!(q((-1, 1), (0, 1)).sqrt_exact().is_none());
        // (1 − √3)² = 4 − 2√3; the returned root must be the positive one.
        assert_eq!(q((4, 1), (-2, 1)).sqrt_exact().unwrap(), q((-1, 1), (1, 1)));
    }

    #[test]
    fn serde_shape() {
        let x = q((3, 2), (-1, 1));
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"{"r":"3/2","s":"-1"}"#);
        assert_eq!(serde_json::from_str::<QRoot3>(&j).unwrap(), x);
    }

    fn arb() -> impl Strategy<Value = QRoot3> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| q((a, b), (c, d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn field_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), QRoot3::one());
            }
        }

        #[test]
        fn sign_agrees_with_float(x in arb()) {
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.sign(), if f > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn sqrt_of_square(x in arb()) {
            let root = x.square().sqrt_exact().unwrap();
            prop_assert_eq!(root, x.abs());
        }
    }
}
