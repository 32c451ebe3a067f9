//! Rational functions with factored denominators.
//!
//! Denominators are kept as a sorted multiset of monic factors (in
//! practice linear forms). Cancellation is by exact division, and
//! equality is decided by cross-multiplication.

use crate::poly::Poly;
use crate::rational::Q;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug)]
pub struct RatFun {
    num: Poly,
    den: Vec<Poly>,
}

fn monic(f: &Poly) -> (Q, Poly) {
    let c = f.leading_coeff();
    (c.clone(), f.scale(&(Q::one() / c)))
}

impl RatFun {
    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Vec::new() }
    }

    pub fn zero(nvars: usize) -> Self {
        RatFun::from_poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        RatFun::from_poly(Poly::one(nvars))
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        RatFun::from_poly(Poly::constant(nvars, c))
    }

    /// num / ∏ factors.
    pub fn from_parts(num: Poly, factors: &[Poly]) -> Self {
        let mut r = RatFun::from_poly(num);
        for f in factors {
            r = r.div_poly(f);
        }
        r
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn den_factors(&self) -> &[Poly] {
        &self.den
    }

    pub fn denominator(&self) -> Poly {
        self.den
            .iter()
            .fold(Poly::one(self.nvars()), |acc, f| &acc * f)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Divides by a polynomial, recording it as a denominator factor.
    pub fn div_poly(&self, f: &Poly) -> RatFun {
        assert!(!f.is_zero(), "division by zero");
        if f.is_constant() {
            return RatFun {
                num: self.num.scale(&(Q::one() / f.constant_term())),
                den: self.den.clone(),
            };
        }
        let (c, m) = monic(f);
        let mut den = self.den.clone();
        den.push(m);
        den.sort_by(|a, b| cmp_poly(a, b));
        let mut r = RatFun { num: self.num.scale(&(Q::one() / c)), den };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut i = 0;
        while i < self.den.len() {
            if let Some(q) = self.num.div_exact(&self.den[i]) {
                self.num = q;
                self.den.remove(i);
            } else {
                i += 1;
            }
        }
    }

    pub fn scale(&self, c: &Q) -> RatFun {
        let mut r = RatFun { num: self.num.scale(c), den: self.den.clone() };
        r.reduce();
        r
    }

    /// Applies a ring map given on polynomials (substitution).
    pub fn map_poly(&self, f: impl Fn(&Poly) -> Poly) -> RatFun {
        let mut out = RatFun::from_poly(f(&self.num));
        for d in &self.den {
            out = out.div_poly(&f(d));
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> Option<Q> {
        let mut d = Q::one();
        for f in &self.den {
            d *= f.eval(point);
        }
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(point) / d)
        }
    }

    pub fn regular_at(&self, point: &[Q]) -> bool {
        self.den.iter().all(|f| !f.eval(point).is_zero())
    }

    pub fn inverse(&self) -> Option<RatFun> {
        if self.num.is_zero() {
            return None;
        }
        let mut r = RatFun::from_poly(self.denominator());
        r = r.div_poly(&self.num);
        Some(r)
    }

    pub fn pow(&self, k: u32) -> RatFun {
        let mut out = RatFun::one(self.nvars());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

fn cmp_poly(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    let ta: Vec<_> = a.terms().collect();
    let tb: Vec<_> = b.terms().collect();
    ta.cmp(&tb)
}

/// Multiset union with maximal multiplicities, plus the complements.
fn lcm_parts(a: &[Poly], b: &[Poly]) -> (Vec<Poly>, Vec<Poly>, Vec<Poly>) {
    let mut rest_b: Vec<Poly> = b.to_vec();
    let mut missing_in_b = Vec::new();
    for f in a {
        if let Some(pos) = rest_b.iter().position(|g| g == f) {
            rest_b.remove(pos);
        } else {
            missing_in_b.push(f.clone());
        }
    }
    let mut lcm = a.to_vec();
    lcm.extend(rest_b.iter().cloned());
    // a needs rest_b, b needs missing_in_b
    (lcm, rest_b, missing_in_b)
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        (&self.num * &other.denominator()) == (&other.num * &self.denominator())
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let n = self.nvars();
        let (mut lcm, for_a, for_b) = lcm_parts(&self.den, &rhs.den);
        let fa = for_a.iter().fold(Poly::one(n), |acc, f| &acc * f);
        let fb = for_b.iter().fold(Poly::one(n), |acc, f| &acc * f);
        let num = &(&self.num * &fa) + &(&rhs.num * &fb);
        lcm.sort_by(cmp_poly);
        let mut r = RatFun { num, den: lcm };
        r.reduce();
        r
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero(self.nvars());
        }
        let mut den = self.den.clone();
        den.extend(rhs.den.iter().cloned());
        den.sort_by(cmp_poly);
        let mut r = RatFun { num: &self.num * &rhs.num, den };
        r.reduce();
        r
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        &self - &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

impl RatFun {
    pub fn fmt_with(&self, names: &[String]) -> String {
        let n = self.num.fmt_with(names);
        if self.den.is_empty() {
            return n;
        }
        let d: Vec<String> = self.den.iter().map(|f| format!("({})", f.fmt_with(names))).collect();
        format!("({})/{}", n, d.join("*"))
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&crate::poly::default_names(self.nvars())))
    }
}

/// Local inversion at a rational point (last coordinate is h).
pub fn invert_local(f: &RatFun, point: &[Q]) -> Result<RatFun, crate::Error> {
    match f.eval(point) {
        Some(v) if !v.is_zero() => Ok(f.inverse().expect("nonzero value")),
        Some(_) => Err(crate::Error::Domain(format!("{f} vanishes at the chosen point"))),
        None => Err(crate::Error::Domain(format!("{f} is not regular at the chosen point"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    fn g(i: usize) -> Poly {
        Poly::var(3, i)
    }

    #[test]
    fn cancels_and_compares() {
        let a = &g(0) - &g(1);
        let x = RatFun::from_poly(&(&g(0) * &g(0)) - &(&g(1) * &g(1))).div_poly(&a);
        assert!(x.is_poly());
        assert_eq!(x, RatFun::from_poly(&g(0) + &g(1)));
        let y = RatFun::one(3).div_poly(&a.scale(&qi(2)));
        let z = RatFun::one(3).div_poly(&-&a);
        assert_eq!(&(&y + &y) + &z, RatFun::zero(3));
    }

    #[test]
    fn local_inverse() {
        let nv = 3;
        let f = RatFun::from_poly(&g(0) + &g(2));
        let pt = vec![qi(0), qi(0), qi(1)];
        let inv = invert_local(&f, &pt).unwrap();
        assert_eq!(inv.eval(&pt), Some(qi(1)));
        assert!(invert_local(&RatFun::from_poly(g(0)), &pt).is_err());
        assert_eq!(invert_local(&RatFun::one(nv), &pt).unwrap(), RatFun::one(nv));
    }
}
