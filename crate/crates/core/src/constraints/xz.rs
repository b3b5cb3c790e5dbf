//! The product X·Z written in the basis {c², ac} after eliminating b and a².

use crate::exactnum::mpoly::MPoly;
use crate::exactnum::{int, rat, Rational};

/// Ring operations shared by concrete rationals and symbolic polynomials,
/// so the closed formula can be evaluated either way.
pub trait Arith: Clone {
    fn plus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    /// A constant in the same ring as `self`.
    fn konst(&self, r: Rational) -> Self;
}

impl Arith for Rational {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn konst(&self, r: Rational) -> Self {
        r
    }
}

impl Arith for MPoly<Rational> {
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn konst(&self, r: Rational) -> Self {
        MPoly::rconst(self.nvars(), r)
    }
}

/// `D·(rational part, ac part)` with `D = 1 + λ + λ²` and `c² = 3/4`.
pub fn xz_scaled_parts<T: Arith>(row_x: &[T; 3], row_z: &[T; 3], lambda: &T, mu: &T) -> (T, T) {
    let [p, d, e] = row_x;
    let [h, l, r] = row_z;
    let one = lambda.konst(int(1));
    let dd = one.plus(lambda).plus(&lambda.times(lambda));
    let pp = p.plus(&lambda.times(d));
    let hh = h.plus(&lambda.times(l));
    let ee = d.times(mu).plus(e);
    let rr = l.times(mu).plus(r);
    let ph = pp.times(&hh);
    let three_q = lambda.konst(rat(3, 4));
    let rational = ph
        .times(&three_q)
        .times(&one.minus(&mu.times(mu)))
        .plus(&dd.times(&three_q).times(&ee).times(&rr));
    let two_l1 = lambda.konst(int(2)).times(lambda).plus(&one);
    let ac = lambda
        .konst(int(0))
        .minus(&ph.times(mu).times(&two_l1))
        .plus(&dd.times(&ee.times(&hh).plus(&pp.times(&rr))));
    (rational, ac)
}

/// Coefficients of 1 and of `ac` in `X·Z`, where `X = pa + db + ec`,
/// `Z = ha + ℓb + rc`, `b = λa + µc` and the tile is scaled to `c² = 3/4`.
pub fn xz_coefficients(row_x: &[Rational; 3], row_z: &[Rational; 3], lambda: &Rational, mu: &Rational) -> (Rational, Rational) {
    let d = &(&int(1) + lambda) + &(lambda * lambda);
    let (r, ac) = xz_scaled_parts(row_x, row_z, lambda, mu);
    (&r / &d, &ac / &d)
}

/// `(a/c)² = e·r / (N·λ)`, the value forced when `µ = 0` and only c-edges
/// survive in X and Z.
pub fn lemma13_ratio(e: &Rational, r: &Rational, n: &Rational, lambda: &Rational) -> Rational {
    &(e * r) / &(n * lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::QRoot3;
    use crate::tilealgebra::{shape_from_relation, ShapeRoot};
    use proptest::prelude::*;

    const NAMES: [&str; 10] = ["p", "d", "e", "h", "l", "r", "λ", "µ", "a", "c"];

    fn v(i: usize) -> MPoly<Rational> {
        MPoly::rvar(NAMES.len(), i)
    }

    /// Expands X·Z directly and reduces it with the law of cosines.
    fn oracle() -> (MPoly<Rational>, MPoly<Rational>) {
        let (a, c, lam, mu) = (v(8), v(9), v(6), v(7));
        let b = lam.mul(&a).add(&mu.mul(&c));
        let x = v(0).mul(&a).add(&v(1).mul(&b)).add(&v(2).mul(&c));
        let z = v(3).mul(&a).add(&v(4).mul(&b)).add(&v(5).mul(&c));
        let xz = x.mul(&z);
        let by_a = xz.collect(8);
        assert_eq!(by_a.len(), 3);
        let one = MPoly::rconst(10, int(1));
        let d = one.add(&lam).add(&lam.mul(&lam));
        // D·a² = −µ(2λ+1)·ac + (1 − µ²)·c²
        let d_a2 = mu
            .mul(&lam.scale(&int(2)).add(&one))
            .mul(&a)
            .mul(&c)
            .neg()
            .add(&one.sub(&mu.mul(&mu)).mul(&c).mul(&c));
        let reduced = by_a[2].mul(&d_a2).add(&d.mul(&by_a[1].mul(&a).add(&by_a[0])));
        let by_c = reduced.collect(9);
        assert!(by_c[0].is_zero());
        let ac = by_c[1].collect(8);
        assert!(ac[0].is_zero() && ac.len() == 2);
        (by_c[2].scale(&rat(3, 4)), ac[1].clone())
    }

    #[test]
    fn closed_form_matches_expansion() {
        let (r_oracle, ac_oracle) = oracle();
        let (r, ac) = xz_scaled_parts(&[v(0), v(1), v(2)], &[v(3), v(4), v(5)], &v(6), &v(7));
        assert!(r.sub(&r_oracle).is_zero(), "{}", r.sub(&r_oracle).render(&NAMES));
        assert!(ac.sub(&ac_oracle).is_zero(), "{}", ac.sub(&ac_oracle).render(&NAMES));
    }

    #[test]
    fn concrete_values() {
        // λ = µ = 0: X = pa + ec, Z = ha + rc, a² = c² = 3/4.
        let (r, ac) = xz_coefficients(&[int(0), int(1), int(1)], &[int(0), int(1), int(1)], &int(0), &int(0));
        assert_eq!((r, ac), (rat(3, 4), int(0)));
        let (r, ac) = xz_coefficients(&[int(1), int(2), int(3)], &[int(4), int(5), int(6)], &int(0), &int(0));
        // (a + 3c)(4a + 6c) = 4a² + 18ac + 18c² → 3 + 27/2, 18
        assert_eq!((r, ac), (rat(33, 2), int(18)));
    }

    #[test]
    fn lemma13_consistency() {
        // With p = d = h = ℓ = 0 and µ = 0 the ac part vanishes, and
        // N = er(1 + λ + λ²)/λ reproduces the shape of b = λa.
        for (lam, e, r) in [(rat(5, 3), 2, 3), (int(1), 1, 1), (int(2), 3, 7), (rat(1, 4), 5, 2)] {
            let (e, r) = (int(e), int(r));
            let (_, ac) = xz_coefficients(&[int(0), int(0), e.clone()], &[int(0), int(0), r.clone()], &lam, &int(0));
            assert_eq!(ac, int(0));
            let d = &(&int(1) + &lam) + &(&lam * &lam);
            let n = &(&(&e * &r) * &d) / &lam;
            let x2 = lemma13_ratio(&e, &r, &n, &lam);
            let shape = shape_from_relation(&lam, &int(0)).unwrap();
            let sq = match shape {
                ShapeRoot::Exact(x) => x.square(),
                ShapeRoot::Surd { u, v, disc, .. } => {
                    assert!(u == int(0));
                    QRoot3::from_rational(&(&v * &v) * &disc)
                }
            };
            assert_eq!(sq, QRoot3::from_rational(x2));
        }
    }

    proptest! {
        #[test]
        fn parts_match_direct_numbers(vals in prop::array::uniform6(0i64..5), l in 0i64..7, m in 0i64..5) {
            // Pick a, c numerically exact: c² = 3/4 and b = λa + µc with the
            // shape root, then compare X·Z with r + ac·(ac part) in floats.
            let (lam, mu) = (rat(l, 2), rat(m, 7));
            prop_assume!(l > 0 || m > 0);
            let x = shape_from_relation(&lam, &mu).unwrap().to_f64();
            let c = 3f64.sqrt() / 2.0;
            let a = x * c;
            let b = (l as f64 / 2.0) * a + (m as f64 / 7.0) * c;
            let [p, d, e, h, ll, r] = vals.map(|k| k as f64);
            let direct = (p * a + d * b + e * c) * (h * a + ll * b + r * c);
            let rx = [int(vals[0]), int(vals[1]), int(vals[2])];
            let rz = [int(vals[3]), int(vals[4]), int(vals[5])];
            let (rp, acp) = xz_coefficients(&rx, &rz, &lam, &mu);
            let f = |q: &Rational| crate::exactnum::rational::to_f64(q);
            prop_assert!((direct - (f(&rp) + f(&acp) * a * c)).abs() < 1e-9 * (1.0 + direct.abs()));
        }
    }
}
