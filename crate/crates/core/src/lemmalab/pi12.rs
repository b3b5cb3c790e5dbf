//! α = π/12. Here `a = sin α` is a root of `16x⁴ − 16x² + 1`, and every
//! identity is checked by reduction in ℚ[x]/(16x⁴ − 16x² + 1), or in
//! ℚ(√2, √3) where a closed form is needed.

use super::{CheckItem, LemmaCheck};
use crate::exactnum::{int, rat, QRoot3, QTower, RatPoly, Rational};

fn minpoly() -> RatPoly {
    RatPoly::from_ints(&[1, 0, -16, 0, 16])
}

fn reduce(p: &RatPoly) -> RatPoly {
    p.rem(&minpoly())
}

fn show(p: &RatPoly) -> String {
    p.to_string().replace('x', "a")
}

fn c(k: i64) -> RatPoly {
    RatPoly::new(vec![int(k)])
}

fn q(r: Rational) -> RatPoly {
    RatPoly::new(vec![r])
}

/// sin(π/12) = (√6 − √2)/4.
pub fn sin_pi12() -> QTower {
    QTower::new(int(0), rat(-1, 4), int(0), rat(1, 4))
}

/// cos(π/12) = (√6 + √2)/4.
pub fn cos_pi12() -> QTower {
    QTower::new(int(0), rat(1, 4), int(0), rat(1, 4))
}

fn tq(r: Rational) -> QTower {
    QTower::from(r)
}

pub fn verify_minpoly_pi12() -> LemmaCheck {
    let a = RatPoly::x();
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let zero = "0";
    let mut items = Vec::new();

    let at = minpoly().eval(&sin_pi12());
    items.push(CheckItem::new("16a^4 - 16a^2 + 1 at a = (√6 - √2)/4", tq(int(0)), at));

    let root3 = &c(2) - &a2.scale(&int(4));
    let e = reduce(&(&(&root3 * &root3) - &c(3)));
    items.push(CheckItem::new("(2 - 4a^2)^2 - 3", zero, show(&e)));
    let closed = root3.eval(&sin_pi12());
    items.push(CheckItem::new("2 - 4a^2 at a = sin(π/12)", QTower::sqrt3(), closed));

    let b = &a.scale(&int(3)) - &a3.scale(&int(4));
    let e = reduce(&(&(&b * &b) - &q(rat(1, 2))));
    items.push(CheckItem::new("b = 3a - 4a^3: b^2 - 1/2", zero, show(&e)));
    let sin_pi4 = QTower::sqrt2().scale(&rat(1, 2));
    items.push(CheckItem::new("3a - 4a^3 at a = sin(π/12) equals sin(π/4)", &sin_pi4, b.eval(&sin_pi12())));

    let cc = &c(1) - &a2.scale(&int(2));
    let e = reduce(&(&(&cc * &cc) - &q(rat(3, 4))));
    items.push(CheckItem::new("c = 1 - 2a^2: c^2 - 3/4", zero, show(&e)));

    // The printed tile-area chain ends in 3/2·a² − 2a⁴ = 1/8 − (3/2)a².
    let chain = &a2.scale(&rat(3, 2)) - &(&a2 * &a2).scale(&int(2));
    let printed = &q(rat(1, 8)) - &a2.scale(&rat(3, 2));
    let got = reduce(&chain);
    let item = CheckItem::with_ok("A_T chain: 3/2·a^2 - 2a^4", show(&printed), show(&got), got == printed)
        .note("a^4 = a^2 - 1/16 gives 3/2·a^2 - 2a^2 + 1/8");
    items.push(item);
    LemmaCheck::from_items("minpoly-pi12", items)
}

pub fn verify_area_pi12() -> LemmaCheck {
    let (s, co) = (sin_pi12(), cos_pi12());
    let one = tq(int(1));
    let mut items = Vec::new();
    // s² + c² = 1, 2sc = sin(π/6), c² − s² = cos(π/6) fix (s, c) up to a
    // common sign, and both closed forms are positive.
    items.push(CheckItem::new("sin^2 + cos^2 at π/12", &one, &(&(&s * &s) + &(&co * &co))));
    items.push(CheckItem::new("2·sin·cos at π/12 = sin(π/6)", tq(rat(1, 2)), (&s * &co).scale(&int(2))));
    let cos_pi6 = QTower::from_qroot3(QRoot3::new(int(0), rat(1, 2)));
    items.push(CheckItem::new("cos^2 - sin^2 at π/12 = cos(π/6)", &cos_pi6, &(&co * &co) - &(&s * &s)));
    let positive = s.to_f64() > 0.0 && co.to_f64() > 0.0;
    items.push(CheckItem::with_ok("(√6 - √2)/4 and (√6 + √2)/4 are positive", true, positive, positive));

    let sin_pi4 = QTower::sqrt2().scale(&rat(1, 2));
    let sin_2pi3 = cos_pi6.clone();
    let prod = &(&s * &sin_pi4) * &sin_2pi3;
    let want = QTower::new(rat(3, 8), int(0), rat(-1, 8), int(0));
    let item = CheckItem::new("sin(π/12)·sin(π/4)·sin(2π/3)", &want, &prod)
        .note("the tile with sides sin α, sin β, sin γ has area half this product");
    items.push(item);
    LemmaCheck::from_items("area-pi12", items)
}
