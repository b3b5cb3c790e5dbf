//! Sparse multivariate polynomials with coefficients in any exact ring.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::cyclo::CycloElem;
use super::rational::Rational;

/// The operations an `MPoly` needs from its coefficients.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coefficient for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coefficient for CycloElem {
    fn is_zero(&self) -> bool {
        CycloElem::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Terms keyed by exponent vectors; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<C: Coefficient> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coefficient> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.insert(vec![0; nvars], c);
        p
    }

    /// The variable `x_i` times `c`.
    pub fn var(nvars: usize, i: usize, c: C) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.insert(e, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn insert(&mut self, e: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, k) in &self.terms {
            out.insert(e.clone(), k.mul(c));
        }
        out
    }

    /// Apply `f` to every coefficient, keeping exponents.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.insert(e.clone(), f(c));
        }
        out
    }

    /// Substitute `x_i := value` where `value` is a polynomial in the same ring.
    pub fn substitute(&self, i: usize, value: &MPoly<C>, one: &C) -> MPoly<C> {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[i];
            rest[i] = 0;
            let mut term = MPoly::zero(self.nvars);
            term.insert(rest, c.clone());
            let mut pow = MPoly::constant(self.nvars, one.clone());
            for _ in 0..k {
                pow = pow.mul(value);
            }
            out = out.add(&term.mul(&pow));
        }
        out
    }

    /// Collect by powers of `x_i`: returns coefficient polynomials indexed by degree.
    pub fn collect(&self, i: usize) -> Vec<MPoly<C>> {
        let deg = self.terms.keys().map(|e| e[i]).max().unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.nvars); deg + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[i] as usize;
            rest[i] = 0;
            out[k].insert(rest, c.clone());
        }
        out
    }
}

impl MPoly<Rational> {
    pub fn rconst(nvars: usize, c: Rational) -> Self {
        Self::constant(nvars, c)
    }

    pub fn rvar(nvars: usize, i: usize) -> Self {
        Self::var(nvars, i, Rational::one())
    }

    /// Render with the given variable names, e.g. `-2mp + np + mq`.
    pub fn render(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        // Descending exponent order reads naturally; ties are fixed by BTreeMap order.
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: String = e
                .iter()
                .zip(names)
                .filter(|(k, _)| **k > 0)
                .map(|(k, n)| if *k == 1 { n.to_string() } else { format!("{n}^{k}") })
                .collect();
            if !a.is_one() || mono.is_empty() {
                out.push_str(&a.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}
