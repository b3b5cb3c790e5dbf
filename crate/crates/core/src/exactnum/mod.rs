//! Exact scalars: rationals, ℚ(√3), ℚ(√2, √3) and cyclotomic rings.

pub mod cyclo;
pub mod mpoly;
pub mod numtheory;
pub mod poly;
pub mod qroot3;
pub mod qtower;
pub mod rational;
pub mod vec2;

pub use cyclo::{cyclo_reduce, cyclotomic_poly, galois_apply, norm, sin_as_cyclo, unit_sine_product, CycloElem, CycloError, GaloisMap};
pub use numtheory::{niven_classify, prime_splitting, Splitting};
pub use poly::RatPoly;
pub use qroot3::{qr3_sign, QRoot3};
pub use qtower::QTower;
pub use rational::{int, rat, Rational};
pub use vec2::{ExactAngle, Vec2};
