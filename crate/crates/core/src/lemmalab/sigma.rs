//! Galois actions on ℚ(ζ₂₄) with α = π/12, β = 3α, γ = 8α. The element
//! `s(J) = ζᴶ − ζ⁻ᴶ` is `2i·sin(Jα)` and `i = ζ⁶`. A statement about a real
//! sine, `σ(sin X) = ±sin Y`, is checked as `σ(s_X) = ±σ(i)/i · s_Y`.

use super::{CheckItem, LemmaCheck};
use crate::exactnum::{galois_apply, sin_as_cyclo, CycloElem, GaloisMap};

const N: u64 = 24;

fn s(j: i64) -> CycloElem {
    sin_as_cyclo(j, N)
}

fn i_unit() -> CycloElem {
    CycloElem::zeta_pow(N, 6)
}

/// `2i·cos(Jα)`.
fn ic(j: i64) -> CycloElem {
    &i_unit() * &crate::exactnum::cyclo::cos_as_cyclo(j, N)
}

fn sigma(j: i64) -> GaloisMap {
    GaloisMap::new(j, N).expect("unit mod 24")
}

fn ap(j: i64, x: &CycloElem) -> CycloElem {
    galois_apply(x, &sigma(j)).expect("same ring")
}

pub fn verify_sigma_actions() -> LemmaCheck {
    let mut items = Vec::new();
    let mut eq = |name: &str, want: CycloElem, got: CycloElem| {
        items.push(CheckItem::with_ok(name, &want, &got, want == got));
    };
    let (sa, sb, sg) = (s(1), s(3), s(8));
    let i = i_unit();

    eq("sigma_5(i) = i", i.clone(), ap(5, &i));
    eq("sigma_5(2i sin β) = -2i sin β", -&sb, ap(5, &sb));
    eq("sigma_5(2i sin γ) = -2i sin γ", -&sg, ap(5, &sg));
    eq("sigma_5(2i sin α) = 2i sin 5α", s(5), ap(5, &sa));
    eq("2i sin 5α = 2i cos α", ic(1), s(5));

    eq("sigma_13(i) = i", i.clone(), ap(13, &i));
    eq("sigma_13(2i sin γ) = 2i sin γ", sg.clone(), ap(13, &sg));
    eq("sigma_13(2i sin α) = -2i sin α", -&sa, ap(13, &sa));
    eq("sigma_13(2i sin β) = -2i sin β", -&sb, ap(13, &sb));

    // σ₇ moves i to −i, so its action on real sines picks up a sign.
    eq("sigma_7(i) = -i", -&i, ap(7, &i));
    eq("sigma_7(2i sin α) = 2i sin 7α", s(7), ap(7, &sa));
    eq("2i sin 7α = -2i cos α", -&ic(1), s(7));
    eq("sigma_7(sin α) = cos α", -&ic(1), ap(7, &sa));
    eq("sigma_7(sin β) = sin β", -&sb, ap(7, &sb));
    eq("sigma_7(sin γ) = -sin γ", sg.clone(), ap(7, &sg));
    let all = (1..24).all(|j| ap(7, &s(j)) == s((7 * j).rem_euclid(24)));
    drop(eq);
    items.push(CheckItem::with_ok("sigma_7(sin Jα) = -sin((7J mod 24)α) for 1 <= J < 24", true, all, all));
    LemmaCheck::from_items("sigma-actions", items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_slips_only() {
        let c = verify_sigma_actions();
        let bad: Vec<_> = c.failures().map(|i| i.name.as_str()).collect();
        assert_eq!(bad, ["2i sin 7α = -2i cos α", "sigma_7(sin α) = cos α"]);
        // sin(7π/12) = cos(π/12) > 0, so the true identity has a plus sign.
        assert!(((7.0 * std::f64::consts::PI / 12.0).sin() - (std::f64::consts::PI / 12.0).cos()).abs() < 1e-12);
        assert_eq!(s(7), ic(1));
    }
}
