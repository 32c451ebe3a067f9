//! Sparse multivariate polynomials over Q in graded-lex order.
//!
//! The last variable is the loop parameter `h`; the first `n` are the
//! coordinate functions γ_1..γ_n on the Cartan.

use crate::rational::{fmt_q, Q};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(Mono(e), Q::one());
        p
    }

    /// Σ coeffs_j γ_j + hcoef·h + c, with h the last variable.
    pub fn affine(nvars: usize, coeffs: &[Q], hcoef: &Q, c: &Q) -> Self {
        assert!(coeffs.len() < nvars, "linear form arity");
        let mut p = Poly::constant(nvars, c.clone());
        for (j, a) in coeffs.iter().enumerate() {
            p.add_term(unit(nvars, j), a.clone());
        }
        p.add_term(unit(nvars, nvars - 1), hcoef.clone());
        p
    }

    pub fn linear(nvars: usize, coeffs: &[Q]) -> Self {
        Poly::affine(nvars, coeffs, &Q::zero(), &Q::zero())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Mono(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Poly::one(self.nvars)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Q {
        self.terms
            .get(&Mono(vec![0; self.nvars]))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Mono::degree)
    }

    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Q {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Q::zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Mono::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree with per-variable weights, or None when inhomogeneous.
    pub fn weighted_degree(&self, weights: &[i64]) -> Option<Option<i64>> {
        let mut out = None;
        for m in self.terms.keys() {
            let d: i64 = m.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum();
            match out {
                None => out = Some(d),
                Some(o) if o != d => return None,
                _ => {}
            }
        }
        Some(out)
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars, "evaluation arity");
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable i.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let out_vars = images.first().map_or(self.nvars, |p| p.nvars);
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(p.nvars)]).collect();
        let mut out = Poly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Exact quotient by `d`, or None when `d` does not divide.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut r = self.clone();
        let mut q = Poly::zero(self.nvars);
        while let Some((rm, rc)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !dm.divides(&rm) {
                return None;
            }
            let e: Vec<u32> = rm.0.iter().zip(&dm.0).map(|(a, b)| a - b).collect();
            let coef = rc / &dc;
            let mut t = Poly::zero(self.nvars);
            t.terms.insert(Mono(e), coef);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Variable index set that actually occurs.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    /// Drops the last variable after setting it to `value`.
    pub fn specialize_last(&self, value: &Q) -> Poly {
        let mut images: Vec<Poly> = (0..self.nvars).map(|i| Poly::var(self.nvars, i)).collect();
        images[self.nvars - 1] = Poly::constant(self.nvars, value.clone());
        self.substitute(&images)
    }

    /// Derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                let mut e = m.0.clone();
                e[i] -= 1;
                out.add_term(Mono(e), c * Q::from_integer((m.0[i] as i64).into()));
            }
        }
        out
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], e)
                    }
                })
                .collect();
            if mono.is_empty() {
                s.push_str(&fmt_q(&a));
            } else if a.is_one() {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&format!("{}*{}", fmt_q(&a), mono.join("*")));
            }
        }
        s
    }
}

fn unit(nvars: usize, i: usize) -> Mono {
    let mut e = vec![0; nvars];
    e[i] = 1;
    Mono(e)
}

pub fn default_names(nvars: usize) -> Vec<String> {
    let mut v: Vec<String> = (1..nvars).map(|i| format!("g{i}")).collect();
    v.push("h".to_string());
    v
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&default_names(self.nvars)))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let e: Vec<u32> = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(Mono(e), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn g(i: usize) -> Poly {
        Poly::var(3, i)
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&g(0) + &g(1)) * &(&g(0) - &g(1));
        assert_eq!(p.to_string(), "g1^2 - g2^2");
        let hh = Poly::affine(3, &[qi(1)], &qi(-2), &q(1, 2));
        assert_eq!(hh.to_string(), "g1 - 2*h + 1/2");
    }

    #[test]
    fn exact_division() {
        let a = &g(0) - &g(1);
        let p = &(&g(0) * &g(0)) - &(&g(1) * &g(1));
        assert_eq!(p.div_exact(&a).unwrap(), &g(0) + &g(1));
        assert!(g(0).div_exact(&a).is_none());
    }

    #[test]
    fn substitution_swaps() {
        let p = &(&g(0) * &g(0)) + &g(2);
        let s = p.substitute(&[g(1), g(0), g(2)]);
        assert_eq!(s, &(&g(1) * &g(1)) + &g(2));
        assert_eq!(p.eval(&[qi(2), qi(0), qi(1)]), qi(5));
    }
}
