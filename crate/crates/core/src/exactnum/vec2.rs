//! Exact plane vectors over ℚ(√3) and angles with an exact turn count.

use std::cmp::Ordering;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::qroot3::QRoot3;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: QRoot3,
    pub y: QRoot3,
}

impl Vec2 {
    pub fn new(x: QRoot3, y: QRoot3) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2 { x: QRoot3::zero(), y: QRoot3::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, k: &QRoot3) -> Vec2 {
        Vec2 { x: &self.x * k, y: &self.y * k }
    }

    pub fn dot(&self, o: &Vec2) -> QRoot3 {
        &(&self.x * &o.x) + &(&self.y * &o.y)
    }

    pub fn cross(&self, o: &Vec2) -> QRoot3 {
        &(&self.x * &o.y) - &(&self.y * &o.x)
    }

    pub fn norm2(&self) -> QRoot3 {
        self.dot(self)
    }

    /// Rotation counterclockwise by the angle whose cosine and sine are given.
    pub fn rotate(&self, cos: &QRoot3, sin: &QRoot3) -> Vec2 {
        Vec2 {
            x: &(&self.x * cos) - &(&self.y * sin),
            y: &(&self.x * sin) + &(&self.y * cos),
        }
    }

    /// 0 for directions in [0, π), 1 for [π, 2π).
    fn half(&self) -> u8 {
        let sy = self.y.sign();
        if sy > 0 || (sy == 0 && self.x.sign() > 0) {
            0
        } else {
            1
        }
    }

    /// Compares polar angles in [0, 2π). Zero vectors are not allowed.
    pub fn cmp_angle(&self, o: &Vec2) -> Ordering {
        debug_assert!(!self.is_zero() && !o.is_zero());
        self.half().cmp(&o.half()).then_with(|| 0.cmp(&self.cross(o).sign()))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl<'a> Add<&'a Vec2> for &'a Vec2 {
    type Output = Vec2;
    fn add(self, o: &Vec2) -> Vec2 {
        Vec2 { x: &self.x + &o.x, y: &self.y + &o.y }
    }
}

impl<'a> Sub<&'a Vec2> for &'a Vec2 {
    type Output = Vec2;
    fn sub(self, o: &Vec2) -> Vec2 {
        Vec2 { x: &self.x - &o.x, y: &self.y - &o.y }
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2 { x: -&self.x, y: -&self.y }
    }
}

/// A nonnegative angle `2π·turns + arg(dir)`, with `dir` a unit vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactAngle {
    pub turns: u32,
    pub dir: Vec2,
}

impl ExactAngle {
    pub fn zero() -> Self {
        ExactAngle { turns: 0, dir: Vec2::new(QRoot3::one(), QRoot3::zero()) }
    }

    /// An angle in [0, 2π) from its cosine and sine.
    pub fn from_cos_sin(cos: QRoot3, sin: QRoot3) -> Self {
        ExactAngle { turns: 0, dir: Vec2::new(cos, sin) }
    }

    pub fn pi() -> Self {
        Self::from_cos_sin(QRoot3::from_int(-1), QRoot3::zero())
    }

    pub fn cos(&self) -> &QRoot3 {
        &self.dir.x
    }

    pub fn sin(&self) -> &QRoot3 {
        &self.dir.y
    }

    pub fn is_zero(&self) -> bool {
        self.turns == 0 && self.dir.y.is_zero() && self.dir.x.is_positive()
    }

    /// Sum of two angles; the turn count is exact because wrapping past 2π
    /// is detected by the new direction not lying strictly after the old one.
    pub fn add(&self, o: &ExactAngle) -> ExactAngle {
        let dir = self.dir.rotate(o.cos(), o.sin());
        let mut turns = self.turns + o.turns;
        if !o.is_zero_mod_turn() && dir.cmp_angle(&self.dir) != Ordering::Greater {
            turns += 1;
        }
        ExactAngle { turns, dir }
    }

    fn is_zero_mod_turn(&self) -> bool {
        self.dir.y.is_zero() && self.dir.x.is_positive()
    }

    pub fn to_f64(&self) -> f64 {
        let (x, y) = self.dir.to_f64();
        let a = y.atan2(x);
        let a = if a < 0.0 { a + std::f64::consts::TAU } else { a };
        a + std::f64::consts::TAU * self.turns as f64
    }
}

impl PartialOrd for ExactAngle {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for ExactAngle {
    fn cmp(&self, o: &Self) -> Ordering {
        self.turns.cmp(&o.turns).then_with(|| self.dir.cmp_angle(&o.dir))
    }
}
