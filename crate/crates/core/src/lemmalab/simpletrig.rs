//! cos α / cos β for the 120° tile with `a/b = x`.

use super::{CheckItem, LemmaCheck};
use crate::exactnum::rational::sqrt_exact;
use crate::exactnum::{int, rat, QRoot3, QTower, Rational};

pub fn simpletrig_default_samples() -> Vec<Rational> {
    vec![int(1), rat(3, 5), rat(5, 16), rat(8, 7), rat(1, 2), int(2), rat(7, 8)]
}

/// cos α / cos β from the law of cosines with `a = x`, `b = 1`. The ratio
/// is scale-free and `c² = x² + x + 1` is rational, so the result is exact
/// even when `c` is not.
pub fn xi_ratio(x: &Rational) -> Rational {
    let one = int(1);
    let c2 = &(&(x * x) + x) + &one;
    let num = x * &(&(&one + &c2) - &(x * x));
    let den = &(&(x * x) + &c2) - &one;
    &num / &den
}

/// `c` itself inside ℚ(√2, √3), when `c² = k·q²` for `k ∈ {1, 2, 3, 6}`.
fn c_in_tower(c2: &Rational) -> Option<QTower> {
    let z = int(0);
    [1, 2, 3, 6].into_iter().find_map(|k| {
        let q = sqrt_exact(&(c2 / &int(k)))?;
        Some(match k {
            1 => QTower::new(q, z.clone(), z.clone(), z.clone()),
            2 => QTower::new(z.clone(), q, z.clone(), z.clone()),
            3 => QTower::new(z.clone(), z.clone(), q, z.clone()),
            _ => QTower::new(z.clone(), z.clone(), z.clone(), q),
        })
    })
}

/// The same ratio with the tile scaled to `c = √3/2`, computed in the tower.
fn xi_in_tower(x: &Rational) -> Option<QTower> {
    let c2 = &(&(x * x) + x) + &int(1);
    let c = c_in_tower(&c2)?;
    let target = QTower::from_qroot3(QRoot3::new(int(0), rat(1, 2)));
    let s = &target * &c.inv()?;
    let a = s.scale(x);
    let b = s;
    let c = target;
    let sq = |t: &QTower| t * t;
    let cos_a = &(&(&sq(&b) + &sq(&c)) - &sq(&a)) * &(&b * &c).scale(&int(2)).inv()?;
    let cos_b = &(&(&sq(&a) + &sq(&c)) - &sq(&b)) * &(&a * &c).scale(&int(2)).inv()?;
    Some(&cos_a * &cos_b.inv()?)
}

pub fn verify_simpletrig(samples: &[Rational]) -> LemmaCheck {
    let mut items = Vec::new();
    for x in samples {
        let name = format!("x = {x}");
        if x <= &int(0) {
            items.push(CheckItem::with_ok(name, "positive sample", x, false));
            continue;
        }
        let xi = &(x + &int(2)) / &(&(x * &int(2)) + &int(1));
        let item = match xi_in_tower(x) {
            Some(t) => CheckItem::new(name, QTower::from(xi.clone()), t).note("tile scaled to c = √3/2 in Q(√2, √3)"),
            None => CheckItem::new(name, &xi, xi_ratio(x)).note("c is outside Q(√2, √3); scale-free ratio"),
        };
        items.push(item);
    }
    LemmaCheck::from_items("simpletrig", items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_values() {
        assert_eq!(xi_ratio(&int(1)), int(1));
        assert_eq!(xi_ratio(&rat(3, 5)), rat(13, 11));
        assert_eq!(xi_ratio(&rat(5, 16)), rat(37, 26));
        let c = verify_simpletrig(&simpletrig_default_samples());
        assert!(c.passed(), "{c:?}");
        // x = 1 has c = √3 and x = 3/5 has c = 7/5, so both take the tower path.
        assert!(c.details[0].note.as_deref().unwrap().starts_with("tile scaled"));
        assert!(c.details[1].note.as_deref().unwrap().starts_with("tile scaled"));
        assert!(!verify_simpletrig(&[int(-1)]).passed());
    }

    proptest! {
        #[test]
        fn matches_float_law_of_cosines(p in 1i64..200, q in 1i64..200) {
            let x = rat(p, q);
            let (a, b) = (p as f64 / q as f64, 1.0);
            let c = (a * a + a * b + b * b).sqrt();
            let ca = (b * b + c * c - a * a) / (2.0 * b * c);
            let cb = (a * a + c * c - b * b) / (2.0 * a * c);
            let r = crate::exactnum::rational::to_f64(&xi_ratio(&x));
            prop_assert!((ca / cb - r).abs() < 1e-9 * r.abs().max(1.0));
            prop_assert_eq!(xi_ratio(&x), &(&x + &int(2)) / &(&(&x * &int(2)) + &int(1)));
        }
    }
}
