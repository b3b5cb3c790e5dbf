use super::{CheckItem, LemmaCheck};
use crate::exactnum::numtheory::totient;
use crate::exactnum::{int, norm, prime_splitting, rat, sin_as_cyclo, unit_sine_product, Rational};

fn pi_str(t: &Rational) -> String {
    match (t.numer().to_string().as_str(), t.denom().to_string()) {
        ("1", d) => format!("π/{d}"),
        (n, d) => format!("{n}π/{d}"),
    }
}

/// `θ = 2πm/n` for the given `θ/π`, when `m` is an integer.
fn zeta_exponent(theta_over_pi: &Rational, n: u64) -> Option<i64> {
    let m = theta_over_pi * &int(n as i64) / int(2);
    m.is_integer().then(|| m.to_integer().try_into().expect("small"))
}

/// Norms from ℚ(ζ₃₀) of `2i·sin θ`.
pub fn verify_norm_table_15() -> LemmaCheck {
    let items = [(rat(2, 15), 1), (rat(1, 5), 25), (rat(3, 5), 25)]
        .into_iter()
        .map(|(t, want)| {
            let m = zeta_exponent(&t, 30).expect("θ is a multiple of π/15");
            CheckItem::new(format!("N(2i·sin {}) in Q(zeta_30)", pi_str(&t)), int(want), norm(&sin_as_cyclo(m, 30)))
        })
        .collect();
    LemmaCheck::from_items("norm-table-15", items)
}

/// The products `∏ 2·sin(jθ)` over `j` prime to 18, and, where `θ` lies in
/// ℚ(ζ₁₈), the Galois norm of `2i·sin θ`. The two differ by `i^φ(18) = −1`.
pub fn verify_norm_table_9() -> LemmaCheck {
    let mut items = Vec::new();
    for (t, want) in [(rat(1, 9), -3), (rat(1, 6), 1), (rat(1, 3), -27), (rat(5, 9), -3)] {
        let prod = unit_sine_product(&t, 18);
        items.push(CheckItem::new(format!("prod 2·sin(j·{}) over j in (Z/18)*", pi_str(&t)), int(want), &prod));
        if let Some(m) = zeta_exponent(&t, 18) {
            let sign = if totient(18) % 4 == 0 { int(1) } else { int(-1) };
            let item = CheckItem::new(format!("N(2i·sin {}) in Q(zeta_18) = i^phi(18)·product", pi_str(&t)), &sign * &prod, norm(&sin_as_cyclo(m, 18)));
            items.push(item);
        }
    }
    LemmaCheck::from_items("norm-table-9", items)
}

pub fn verify_norm_tables() -> Vec<LemmaCheck> {
    vec![verify_norm_table_15(), verify_norm_table_9()]
}

pub fn verify_prime_splitting_facts() -> LemmaCheck {
    let mut items = Vec::new();
    for (n, efg, res) in [(30u64, (2, 4, 1), 81), (18, (6, 1, 1), 3)] {
        let s = prime_splitting(3, n);
        items.push(CheckItem::new(format!("(e, f, g) of 3 in Q(zeta_{n})"), format!("{efg:?}"), format!("{:?}", (s.e, s.f, s.g))));
        items.push(CheckItem::new(format!("norm of a prime above 3 in Q(zeta_{n})"), res, s.residue_norm(3)));
        items.push(CheckItem::new(format!("e·f·g = phi({n})"), totient(n), s.e * s.f * s.g));
    }
    LemmaCheck::from_items("prime-splitting", items)
}
