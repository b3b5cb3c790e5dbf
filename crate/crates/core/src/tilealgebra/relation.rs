use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{TileError, TileShape};
use crate::exactnum::numtheory::gcd;
use crate::exactnum::rational::{is_integer, sqrt_exact, to_f64};
use crate::exactnum::{int, QRoot3, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    /// `j·b = u·a + v·c`
    BSide,
    /// `j·a = u·b + v·c`
    ASide,
    /// `j·c = u·a + v·b`; arises when `a` and `b` edges share a side of a segment.
    CSide,
}

/// An integer identity among the tile's sides, kept with `gcd(j, u, v) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeRelation {
    pub kind: RelationKind,
    pub j: u64,
    pub u: u64,
    pub v: u64,
}

impl EdgeRelation {
    /// Normalizes by the common gcd. `None` if `j = 0` or both `u` and `v` are 0.
    pub fn new(kind: RelationKind, j: u64, u: u64, v: u64) -> Option<Self> {
        if j == 0 || (u == 0 && v == 0) {
            return None;
        }
        let g = gcd(gcd(j as i64, u as i64), v as i64) as u64;
        Some(EdgeRelation { kind, j: j / g, u: u / g, v: v / g })
    }

    /// `(λ, µ) = (u/j, v/j)`.
    pub fn lambda_mu(&self) -> (Rational, Rational) {
        let j = self.j as i64;
        (Rational::new((self.u as i64).into(), j.into()), Rational::new((self.v as i64).into(), j.into()))
    }

    pub fn holds_for(&self, a: &QRoot3, b: &QRoot3, c: &QRoot3) -> bool {
        let (lhs, p, q) = match self.kind {
            RelationKind::BSide => (b, a, c),
            RelationKind::ASide => (a, b, c),
            RelationKind::CSide => (c, a, b),
        };
        let k = |n: u64| QRoot3::from_rational(int(n as i64));
        &k(self.j) * lhs == &(&k(self.u) * p) + &(&k(self.v) * q)
    }

    pub fn holds(&self, t: &TileShape) -> bool {
        self.holds_for(&t.a, &t.b, &t.c)
    }

    /// Every `x = a/c ∈ (0, 1)` of a 120° tile satisfying this relation.
    pub fn shape_roots(&self) -> Vec<ShapeRoot> {
        let (l, m) = self.lambda_mu();
        match self.kind {
            RelationKind::BSide => shape_from_relation(&l, &m).into_iter().collect(),
            // Same quadratic in y = b/c, then x = λy + µ.
            RelationKind::ASide => shape_from_relation(&l, &m)
                .map(|y| y.affine(&l, &m))
                .into_iter()
                .filter(|x| x.in_unit_interval())
                .collect(),
            RelationKind::CSide => {
                if m.is_zero() {
                    // c = λa, so x = 1/λ; b follows from the law of cosines whenever x < 1.
                    let x = ShapeRoot::Exact(QRoot3::from_rational(l.recip()));
                    return if x.in_unit_interval() { vec![x] } else { vec![] };
                }
                // 1 = λx + µy with x² + xy + y² = 1.
                let q = [&(&m * &m) + &(&(&l * &l) - &(&l * &m)), &m - &(&l * &int(2)), &int(1) - &(&m * &m)];
                quadratic_roots(&q)
                    .into_iter()
                    .filter(|x| {
                        let y = x.affine(&-(&l / &m), &m.recip());
                        x.in_unit_interval() && y.sign() > 0
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for EdgeRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lhs, p, q) = match self.kind {
            RelationKind::BSide => ('b', 'a', 'c'),
            RelationKind::ASide => ('a', 'b', 'c'),
            RelationKind::CSide => ('c', 'a', 'b'),
        };
        let term = |k: u64, s: char| if k == 1 { s.to_string() } else { format!("{k}{s}") };
        write!(f, "{} = ", term(self.j, lhs))?;
        match (self.u, self.v) {
            (0, v) => write!(f, "{}", term(v, q)),
            (u, 0) => write!(f, "{}", term(u, p)),
            (u, v) => write!(f, "{} + {}", term(u, p), term(v, q)),
        }
    }
}

/// A real root of a rational quadratic, kept exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeRoot {
    /// The root lies in ℚ(√3).
    Exact(QRoot3),
    /// `x = u + v·√disc`, a root of `q[0]x² + q[1]x + q[2]`.
    Surd { quadratic: [Rational; 3], disc: Rational, u: Rational, v: Rational },
}

impl ShapeRoot {
    pub fn as_qroot3(&self) -> Option<&QRoot3> {
        match self {
            ShapeRoot::Exact(x) => Some(x),
            ShapeRoot::Surd { .. } => None,
        }
    }

    pub fn sign(&self) -> i32 {
        match self {
            ShapeRoot::Exact(x) => x.sign(),
            ShapeRoot::Surd { disc, u, v, .. } => {
                let (su, sv) = (sgn(u), sgn(v));
                if su == sv || sv == 0 {
                    su
                } else if su == 0 {
                    sv
                } else {
                    // Opposite signs: compare u² with v²·disc.
                    let d = &(u * u) - &(&(v * v) * disc);
                    if d.is_positive() {
                        su
                    } else {
                        sv
                    }
                }
            }
        }
    }

    /// `k·x + m`.
    pub fn affine(&self, k: &Rational, m: &Rational) -> ShapeRoot {
        match self {
            ShapeRoot::Exact(x) => ShapeRoot::Exact(&x.scale(k) + &QRoot3::from_rational(m.clone())),
            _ if k.is_zero() => ShapeRoot::Exact(QRoot3::from_rational(m.clone())),
            ShapeRoot::Surd { quadratic: [a, b, c], disc, u, v } => {
                // Substitute x = (x' − m)/k and clear k².
                let two = int(2);
                let nb = &(b * k) - &(&(&two * a) * m);
                let nc = &(&(a * &(m * m)) - &(&(b * k) * m)) + &(c * &(k * k));
                ShapeRoot::Surd {
                    quadratic: [a.clone(), nb, nc],
                    disc: disc.clone(),
                    u: &(k * u) + m,
                    v: k * v,
                }
            }
        }
    }

    pub fn in_unit_interval(&self) -> bool {
        self.sign() > 0 && self.affine(&int(-1), &int(1)).sign() > 0
    }

    /// Whether `q[0]x² + q[1]x + q[2]` vanishes exactly at this root.
    pub fn satisfies(&self, q: &[Rational; 3]) -> bool {
        match self {
            ShapeRoot::Exact(x) => {
                let k = |r: &Rational| QRoot3::from_rational(r.clone());
                (&(&k(&q[0]) * &x.square()) + &(&(&k(&q[1]) * x) + &k(&q[2]))).is_zero()
            }
            ShapeRoot::Surd { disc, u, v, .. } => {
                // (u + v√D)² = u² + v²D + 2uv√D
                let rat_part = &(&q[0] * &(&(u * u) + &(&(v * v) * disc))) + &(&(&q[1] * u) + &q[2]);
                let surd_part = &(&(&q[0] * &(&int(2) * &(u * v))) + &(&q[1] * v));
                rat_part.is_zero() && surd_part.is_zero()
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ShapeRoot::Exact(x) => x.to_f64(),
            ShapeRoot::Surd { disc, u, v, .. } => to_f64(u) + to_f64(v) * to_f64(disc).sqrt(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            ShapeRoot::Exact(x) => json!({"form": "exact", "x": x, "text": x.to_string(), "approx": x.to_f64()}),
            ShapeRoot::Surd { quadratic, disc, u, v } => json!({
                "form": "surd",
                "quadratic": quadratic.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "disc": disc.to_string(),
                "u": u.to_string(),
                "v": v.to_string(),
                "text": self.to_string(),
                "approx": self.to_f64(),
            }),
        }
    }
}

impl fmt::Display for ShapeRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeRoot::Exact(x) => write!(f, "{x}"),
            ShapeRoot::Surd { disc, u, v, .. } => write!(f, "{u} + {v}*sqrt({disc})"),
        }
    }
}

impl Serialize for ShapeRoot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn sgn(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Real roots of `q[0]x² + q[1]x + q[2]` (`q[0] ≠ 0`), largest first.
fn quadratic_roots(q: &[Rational; 3]) -> Vec<ShapeRoot> {
    let [a, b, c] = q;
    let disc = &(b * b) - &(&(&int(4) * a) * c);
    if disc.is_negative() {
        return vec![];
    }
    let two_a = &int(2) * a;
    let u = &(-b) / &two_a;
    let v = two_a.recip().abs();
    let mk = |sv: &Rational| -> ShapeRoot {
        if let Some(root) = sqrt_exact(&disc) {
            ShapeRoot::Exact(QRoot3::from_rational(&u + &(sv * &root)))
        } else if let Some(root) = sqrt_exact(&(&disc / &int(3))) {
            ShapeRoot::Exact(QRoot3::new(u.clone(), sv * &root))
        } else {
            ShapeRoot::Surd { quadratic: q.clone(), disc: disc.clone(), u: u.clone(), v: sv.clone() }
        }
    };
    if disc.is_zero() {
        return vec![ShapeRoot::Exact(QRoot3::from_rational(u))];
    }
    vec![mk(&v), mk(&-&v)]
}

/// The root `x = a/c ∈ (0, 1)` of `x²(1+λ+λ²) + (2λ+1)µx + (µ²−1) = 0`,
/// i.e. the shape of the 120° tile with `b = λa + µc`.
pub fn shape_from_relation(lambda: &Rational, mu: &Rational) -> Result<ShapeRoot, TileError> {
    if lambda.is_negative() || mu.is_negative() || (lambda.is_zero() && mu.is_zero()) {
        return Err(TileError::BadParameters("need λ, µ >= 0, not both zero".into()));
    }
    let one = int(1);
    let q = [
        &(&one + lambda) + &(lambda * lambda),
        &(&(&int(2) * lambda) + &one) * mu,
        &(mu * mu) - &one,
    ];
    let x = quadratic_roots(&q)
        .into_iter()
        .find(|x| x.in_unit_interval())
        .ok_or(TileError::NoValidShape)?;
    assert!(x.satisfies(&q), "shape root does not satisfy its quadratic");
    Ok(x)
}

fn enumerate(a: &QRoot3, b: Option<&QRoot3>, c: &QRoot3, bound: u64, kind: RelationKind) -> Vec<EdgeRelation> {
    let mut out = Vec::new();
    // With `b` outside ℚ(√3) only relations free of `b` can hold.
    let (lhs, p, q) = match (kind, b) {
        (RelationKind::BSide, Some(b)) => (b, Some(a), Some(c)),
        (RelationKind::BSide, None) => return out,
        (RelationKind::ASide, b) => (a, b, Some(c)),
        (RelationKind::CSide, b) => (c, Some(a), b),
    };
    for j in 1..=bound {
        let target = lhs.scale(&int(j as i64));
        let emit = |out: &mut Vec<EdgeRelation>, u: u64, v: u64| {
            if let Some(r) = EdgeRelation::new(kind, j, u, v) {
                if r.j == j && r.u == u && r.v == v {
                    out.push(r);
                }
            }
        };
        match (p, q) {
            (Some(p), Some(q)) => {
                let mut u = 0u64;
                loop {
                    let rest = &target - &p.scale(&int(u as i64));
                    if rest.is_negative() {
                        break;
                    }
                    if let Some(v) = (&rest / q).as_rational() {
                        if is_integer(v) && !v.is_negative() {
                            emit(&mut out, u, v.to_integer().try_into().expect("small coefficient"));
                        }
                    }
                    u += 1;
                }
            }
            (Some(p), None) => {
                if let Some(u) = (&target / p).as_rational() {
                    if is_integer(u) && u.is_positive() {
                        emit(&mut out, u.to_integer().try_into().expect("small coefficient"), 0);
                    }
                }
            }
            (None, Some(q)) => {
                if let Some(v) = (&target / q).as_rational() {
                    if is_integer(v) && v.is_positive() {
                        emit(&mut out, 0, v.to_integer().try_into().expect("small coefficient"));
                    }
                }
            }
            (None, None) => {}
        }
    }
    out
}

/// All canonical relations of one kind with `j ≤ bound` holding for the
/// tile whose short-side ratio is `x = a/c`.
pub fn relation_from_shape(x: &QRoot3, bound: u64, kind: RelationKind) -> Vec<EdgeRelation> {
    // b/c is the positive root of y² + xy + x² − 1 = 0.
    let disc = &QRoot3::from_int(4) - &x.square().scale(&int(3));
    let y = disc.sqrt_exact().map(|s| (&s - x).scale(&Rational::new(1.into(), 2.into())));
    enumerate(x, y.as_ref(), &QRoot3::one(), bound, kind)
}

/// Every relation of every kind with `j ≤ bound`, in kind order.
pub fn relations_for_tile(t: &TileShape, bound: u64) -> Vec<EdgeRelation> {
    [RelationKind::BSide, RelationKind::ASide, RelationKind::CSide]
        .into_iter()
        .flat_map(|k| enumerate(&t.a, Some(&t.b), &t.c, bound, k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::tilealgebra::{eisenstein_triple, tile_from_sides};
    use proptest::prelude::*;

    fn rel(kind: RelationKind, j: u64, u: u64, v: u64) -> EdgeRelation {
        EdgeRelation { kind, j, u, v }
    }

    #[test]
    fn shape_examples() {
        let iso = shape_from_relation(&int(1), &int(0)).unwrap();
        assert_eq!(iso, ShapeRoot::Exact(QRoot3::new(int(0), rat(1, 3))));
        let x = shape_from_relation(&rat(5, 3), &int(0)).unwrap();
        assert_eq!(x, ShapeRoot::Exact(QRoot3::from_rational(rat(3, 7))));
        let x = shape_from_relation(&int(0), &rat(5, 7)).unwrap();
        assert_eq!(x, ShapeRoot::Exact(QRoot3::from_rational(rat(3, 7))));
        assert_eq!(shape_from_relation(&int(0), &int(1)), Err(TileError::NoValidShape));
        assert!(shape_from_relation(&int(0), &int(0)).is_err());
    }

    #[test]
    fn surd_shape() {
        // b = 2a: 7x² = 1, x = 1/√7.
        let x = shape_from_relation(&int(2), &int(0)).unwrap();
        match &x {
            ShapeRoot::Surd { disc, .. } => assert_eq!(disc, &int(28)),
            other => panic!("expected a surd, got {other}"),
        }
        assert!((x.to_f64() - 1.0 / 7f64.sqrt()).abs() < 1e-12);
        assert!(x.in_unit_interval());
    }

    #[test]
    fn relations_of_357() {
        let x = QRoot3::from_rational(rat(3, 7));
        let b = relation_from_shape(&x, 2, RelationKind::BSide);
        assert!(b.contains(&rel(RelationKind::BSide, 2, 1, 1)));
        let a = relation_from_shape(&x, 4, RelationKind::ASide);
        assert!(a.contains(&rel(RelationKind::ASide, 4, 1, 1)));
        let t = crate::tilealgebra::TileShape::from_ints(3, 5, 7).unwrap();
        let all = relations_for_tile(&t, 2);
        assert!(all.contains(&rel(RelationKind::CSide, 2, 3, 1)));
        assert!(all.iter().all(|r| r.holds(&t)));
        assert_eq!(rel(RelationKind::BSide, 2, 1, 1).to_string(), "2b = a + c");
    }

    #[test]
    fn irrational_ratio_has_one_relation() {
        let iso = tile_from_sides(1.into(), 1.into(), QRoot3::sqrt3()).unwrap();
        let x = &iso.a / &iso.c;
        let b = relation_from_shape(&x, 12, RelationKind::BSide);
        assert_eq!(b, vec![rel(RelationKind::BSide, 1, 1, 0)]);
        // x = 1/2 puts b outside ℚ(√3): nothing of kind B can hold.
        assert!(relation_from_shape(&QRoot3::from_rational(rat(1, 2)), 12, RelationKind::BSide).is_empty());
    }

    #[test]
    fn exhaustive_oracle_small() {
        // Brute force over all (j, u, v) with integer sides.
        let mut expect = Vec::new();
        for j in 1..=6i64 {
            for u in 0..=20i64 {
                for v in 0..=20i64 {
                    if j * 5 == 3 * u + 7 * v && gcd(gcd(j, u), v) == 1 {
                        expect.push(rel(RelationKind::BSide, j as u64, u as u64, v as u64));
                    }
                }
            }
        }
        let got = relation_from_shape(&QRoot3::from_rational(rat(3, 7)), 6, RelationKind::BSide);
        assert_eq!(got, expect);
    }

    #[test]
    fn cside_roots() {
        // 2c = 3a + b for (3,5,7).
        let roots = rel(RelationKind::CSide, 2, 3, 1).shape_roots();
        assert!(roots.contains(&ShapeRoot::Exact(QRoot3::from_rational(rat(3, 7)))));
        for r in &roots {
            assert!(r.in_unit_interval());
        }
    }

    fn arb_mn() -> impl Strategy<Value = (i64, i64)> {
        (2i64..30, 1i64..30).prop_filter_map("coprime m > n", |(m, n)| (m > n && gcd(m, n) == 1).then_some((m, n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn roundtrip((m, n) in arb_mn()) {
            let (a, b, c) = eisenstein_triple(m, n).unwrap();
            // Keep a and b as generated so both B and A relations appear.
            let x = QRoot3::from_rational(Rational::new(a.into(), c.into()));
            let mut rels = relation_from_shape(&x, 12, RelationKind::BSide);
            rels.extend(relation_from_shape(&x, 12, RelationKind::ASide));
            for r in rels {
                prop_assert!(r.holds_for(&a.into(), &b.into(), &c.into()));
                let roots = r.shape_roots();
                prop_assert!(roots.contains(&ShapeRoot::Exact(x.clone())), "{} lost x = {}", r, x);
                if r.kind == RelationKind::BSide {
                    prop_assert_eq!(roots.len(), 1);
                }
            }
        }

        #[test]
        fn shape_satisfies_quadratic(l in 0i64..20, ld in 1i64..6, m in 0i64..6, md in 6i64..9) {
            let (l, m) = (rat(l, ld), rat(m, md));
            prop_assume!(!(l.is_zero() && m.is_zero()));
            let x = shape_from_relation(&l, &m).unwrap();
            let q = [&(&int(1) + &l) + &(&l * &l), &(&(&int(2) * &l) + &int(1)) * &m, &(&m * &m) - &int(1)];
            prop_assert!(x.satisfies(&q));
            let xf = x.to_f64();
            let (lf, mf) = (to_f64(&l), to_f64(&m));
            let y = lf * xf + mf;
            prop_assert!((xf * xf + y * y + xf * y - 1.0).abs() < 1e-9);
        }
    }
}
