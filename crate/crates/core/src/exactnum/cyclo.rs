//! Cyclotomic rings ℚ[ζₙ] = ℚ[x]/Φₙ with Galois automorphisms and norms.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::numtheory::{divisors, totient, units};
use super::poly::RatPoly;
use super::rational::{self, int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("sigma_{j} is not an automorphism of Q(zeta_{n}): gcd({j}, {n}) != 1")]
    NotCoprime { j: i64, n: u64 },
    #[error("ring mismatch: zeta_{0} vs zeta_{1}")]
    RingMismatch(u64, u64),
}

/// Φₙ by exact division of xⁿ − 1 by Φ_d over the proper divisors d of n.
pub fn cyclotomic_poly(n: u64) -> RatPoly {
    assert!(n >= 1);
    let mut num = RatPoly::monomial(Rational::one(), n as usize);
    num = &num - &RatPoly::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let (q, r) = num.div_rem(&cyclotomic_poly(d));
        debug_assert!(r.is_zero());
        num = q;
    }
    num
}

/// Shared per-`n` data: Φₙ and the reductions of ζᵏ for `0 ≤ k < n`.
#[derive(Debug)]
pub struct CycloRing {
    n: u64,
    phi: usize,
    modulus: RatPoly,
    powers: Vec<Vec<Rational>>,
}

impl CycloRing {
    pub fn get(n: u64) -> Arc<CycloRing> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycloRing>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        guard.entry(n).or_insert_with(|| Arc::new(CycloRing::build(n))).clone()
    }

    fn build(n: u64) -> CycloRing {
        let modulus = cyclotomic_poly(n);
        let phi = totient(n) as usize;
        assert_eq!(modulus.degree(), Some(phi));
        let powers = (0..n as usize)
            .map(|k| {
                let r = RatPoly::monomial(Rational::one(), k).rem(&modulus);
                (0..phi).map(|i| r.coeff(i)).collect()
            })
            .collect();
        CycloRing { n, phi, modulus, powers }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &RatPoly {
        &self.modulus
    }
}

/// Element of ℚ[ζₙ] in the power basis `1, ζ, …, ζ^{φ(n)−1}`.
#[derive(Clone)]
pub struct CycloElem {
    ring: Arc<CycloRing>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycloElem {
    fn eq(&self, o: &Self) -> bool {
        self.ring.n == o.ring.n && self.coeffs == o.coeffs
    }
}

impl Eq for CycloElem {}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem(n={}, {})", self.ring.n, self)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = RatPoly::new(self.coeffs.clone()).to_string();
        write!(f, "{}", s.replace('x', "z"))
    }
}

impl CycloElem {
    pub fn zero(n: u64) -> Self {
        let ring = CycloRing::get(n);
        let coeffs = vec![Rational::zero(); ring.phi];
        CycloElem { ring, coeffs }
    }

    pub fn from_rational(n: u64, c: Rational) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = c;
        z
    }

    pub fn one(n: u64) -> Self {
        Self::from_rational(n, Rational::one())
    }

    /// ζᵏ for any integer `k`.
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        let ring = CycloRing::get(n);
        let idx = k.rem_euclid(n as i64) as usize;
        let coeffs = ring.powers[idx].clone();
        CycloElem { ring, coeffs }
    }

    pub fn n(&self) -> u64 {
        self.ring.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(rational::is_integer)
    }

    /// The value as a rational, when every non-constant coefficient vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        CycloElem { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Complex value at ζ = e^{2πi/n}.
    pub fn eval_complex(&self) -> Complex64 {
        let n = self.ring.n as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| Complex64::from_polar(rational::to_f64(c), 2.0 * std::f64::consts::PI * k as f64 / n))
            .sum()
    }

    fn from_exponent_map(ring: Arc<CycloRing>, terms: impl Iterator<Item = (usize, Rational)>) -> Self {
        let mut coeffs = vec![Rational::zero(); ring.phi];
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            for (i, p) in ring.powers[k % ring.n as usize].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[i] += &c * p;
                }
            }
        }
        CycloElem { ring, coeffs }
    }
}

/// Reduce a polynomial in ζ modulo Φₙ.
pub fn cyclo_reduce(poly: &RatPoly, n: u64) -> CycloElem {
    let ring = CycloRing::get(n);
    let terms: Vec<(usize, Rational)> = poly.coeffs().iter().cloned().enumerate().collect();
    CycloElem::from_exponent_map(ring, terms.into_iter())
}

/// ζᵐ − ζ⁻ᵐ, which equals 2i·sin(2πm/n).
pub fn sin_as_cyclo(m: i64, n: u64) -> CycloElem {
    &CycloElem::zeta_pow(n, m) - &CycloElem::zeta_pow(n, -m)
}

/// ζᵐ + ζ⁻ᵐ, which equals 2·cos(2πm/n).
pub fn cos_as_cyclo(m: i64, n: u64) -> CycloElem {
    &CycloElem::zeta_pow(n, m) + &CycloElem::zeta_pow(n, -m)
}

/// σⱼ : ζ ↦ ζʲ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisMap {
    n: u64,
    j: u64,
}

impl GaloisMap {
    pub fn new(j: i64, n: u64) -> Result<Self, CycloError> {
        let jr = j.rem_euclid(n as i64) as u64;
        if (jr.gcd(&n) != 1) && n != 1 {
            return Err(CycloError::NotCoprime { j, n });
        }
        Ok(GaloisMap { n, j: jr })
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn compose(&self, other: &GaloisMap) -> GaloisMap {
        assert_eq!(self.n, other.n);
        GaloisMap { n: self.n, j: self.j * other.j % self.n.max(1) }
    }

    pub fn group(n: u64) -> Vec<GaloisMap> {
        units(n).into_iter().map(|j| GaloisMap { n, j }).collect()
    }
}

pub fn galois_apply(x: &CycloElem, g: &GaloisMap) -> Result<CycloElem, CycloError> {
    if g.n != x.n() {
        return Err(CycloError::RingMismatch(g.n, x.n()));
    }
    let n = x.n() as usize;
    let terms = x.coeffs.iter().enumerate().map(|(k, c)| ((k * g.j as usize) % n.max(1), c.clone()));
    Ok(CycloElem::from_exponent_map(x.ring.clone(), terms))
}

/// Product of all Galois conjugates. The result must be rational; anything
/// else means the arithmetic is broken, so it panics.
pub fn norm(x: &CycloElem) -> Rational {
    let mut acc = CycloElem::one(x.n());
    for g in GaloisMap::group(x.n()) {
        acc = &acc * &galois_apply(x, &g).expect("same ring");
    }
    acc.as_rational().unwrap_or_else(|| panic!("norm of {x:?} is not rational: {acc}"))
}

/// ∏ 2·sin(j·θ) over `1 ≤ j < n` coprime to `n`, with θ = `theta_over_pi`·π,
/// computed exactly inside ℚ(ζ_L) for a suitable L.
pub fn unit_sine_product(theta_over_pi: &Rational, n: u64) -> Rational {
    // 2·sin(jπ·p/q) = −i·(ω^{m} − ω^{−m}) with ω = e^{2πi/L}, m = j·p·L/(2q).
    let q = theta_over_pi.denom().clone();
    let p = theta_over_pi.numer().clone();
    let two_q: u64 = (q * 2u32).try_into().expect("denominator too large");
    let l = two_q.lcm(&4);
    let i_unit = CycloElem::zeta_pow(l, (l / 4) as i64);
    let minus_i = -&i_unit;
    let p: i64 = p.try_into().expect("numerator too large");
    let mut acc = CycloElem::one(l);
    for j in units(n) {
        let m = j as i64 * p * (l / two_q) as i64;
        acc = &acc * &(&minus_i * &sin_as_cyclo(m, l));
    }
    acc.as_rational().unwrap_or_else(|| panic!("sine product is not rational: {acc}"))
}

fn check_same(a: &CycloElem, b: &CycloElem) {
    assert_eq!(a.n(), b.n(), "cyclotomic ring mismatch");
}

impl<'a> Add<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn add(self, o: &CycloElem) -> CycloElem {
        check_same(self, o);
        CycloElem { ring: self.ring.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn sub(self, o: &CycloElem) -> CycloElem {
        check_same(self, o);
        CycloElem { ring: self.ring.clone(), coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn mul(self, o: &CycloElem) -> CycloElem {
        check_same(self, o);
        let phi = self.ring.phi;
        let mut prod = vec![Rational::zero(); 2 * phi.max(1) - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let terms = prod.into_iter().enumerate();
        CycloElem::from_exponent_map(self.ring.clone(), terms)
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

/// Integer constant helper used by tests and the lemma suite.
pub fn cyclo_int(n: u64, k: i64) -> CycloElem {
    CycloElem::from_rational(n, int(k))
}
