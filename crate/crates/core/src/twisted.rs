//! The twisted group algebra: finite sums Σ f_g · g with rational
//! function coefficients, multiplied by (f·v)(g·w) = (f·(v▷g))·(vw).

use crate::group::GroupElt;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::rational::Q;
use num_traits::One;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug)]
pub struct TwistedOp {
    rank: usize,
    terms: BTreeMap<GroupElt, RatFun>,
}

impl TwistedOp {
    pub fn zero(rank: usize) -> Self {
        TwistedOp { rank, terms: BTreeMap::new() }
    }

    pub fn identity(rank: usize) -> Self {
        TwistedOp::group(GroupElt::identity(rank))
    }

    pub fn group(g: GroupElt) -> Self {
        let rank = g.rank();
        let mut terms = BTreeMap::new();
        terms.insert(g, RatFun::one(rank + 1));
        TwistedOp { rank, terms }
    }

    pub fn scalar(rank: usize, f: RatFun) -> Self {
        let mut out = TwistedOp::zero(rank);
        out.add_term(GroupElt::identity(rank), f);
        out
    }

    pub fn poly(rank: usize, p: Poly) -> Self {
        TwistedOp::scalar(rank, RatFun::from_poly(p))
    }

    pub fn term(g: GroupElt, f: RatFun) -> Self {
        let mut out = TwistedOp::zero(g.rank());
        out.add_term(g, f);
        out
    }

    /// (1/(α − level·h))(s_{α,level} − 1); level 0 gives ∂_α.
    pub fn demazure(root: &[Q], coroot: &[Q], level: &Q) -> Self {
        let n = root.len();
        let s = GroupElt::reflection(root, coroot, level);
        let denom = Poly::affine(n + 1, root, &-level.clone(), &Q::from_integer(0.into()));
        let inv = RatFun::one(n + 1).div_poly(&denom);
        let mut out = TwistedOp::zero(n);
        out.add_term(s, inv.clone());
        out.add_term(GroupElt::identity(n), -&inv);
        out
    }

    fn add_term(&mut self, g: GroupElt, f: RatFun) {
        if f.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&g) {
            Some(v) => {
                *v = &*v + &f;
                v.is_zero()
            }
            None => {
                self.terms.insert(g.clone(), f);
                false
            }
        };
        if remove {
            self.terms.remove(&g);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElt, &RatFun)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &GroupElt) -> RatFun {
        self.terms
            .get(g)
            .cloned()
            .unwrap_or_else(|| RatFun::zero(self.rank + 1))
    }

    pub fn support(&self) -> Vec<GroupElt> {
        self.terms.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale_left(&self, f: &RatFun) -> TwistedOp {
        let mut out = TwistedOp::zero(self.rank);
        for (g, c) in &self.terms {
            out.add_term(g.clone(), f * c);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> TwistedOp {
        let mut out = TwistedOp::zero(self.rank);
        for (g, f) in &self.terms {
            out.add_term(g.clone(), f.scale(c));
        }
        out
    }

    pub fn apply(&self, p: &Poly) -> RatFun {
        let mut acc = RatFun::zero(p.nvars());
        for (g, f) in &self.terms {
            acc = &acc + &(f * &RatFun::from_poly(g.act_poly(p)));
        }
        acc
    }

    pub fn apply_ratfun(&self, p: &RatFun) -> RatFun {
        let mut acc = RatFun::zero(p.nvars());
        for (g, f) in &self.terms {
            acc = &acc + &(f * &g.act_ratfun(p));
        }
        acc
    }

    /// Conjugation y_g · self · y_g^{-1}.
    pub fn conjugate(&self, g: &GroupElt) -> TwistedOp {
        let gi = g.inverse();
        let mut out = TwistedOp::zero(self.rank);
        for (v, f) in &self.terms {
            out.add_term(g.compose(v).compose(&gi), g.act_ratfun(f));
        }
        out
    }

    pub fn map_coefficients(&self, f: impl Fn(&RatFun) -> RatFun) -> TwistedOp {
        let mut out = TwistedOp::zero(self.rank);
        for (g, c) in &self.terms {
            out.add_term(g.clone(), f(c));
        }
        out
    }

    /// Sets h to a constant in every coefficient.
    pub fn specialize_h(&self, value: &Q) -> TwistedOp {
        self.map_coefficients(|c| c.map_poly(|p| p.specialize_last(value)))
    }

    pub fn fmt_with(&self, names: &[String], group_name: &dyn Fn(&GroupElt) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(g, f)| {
                let c = f.fmt_with(names);
                if g.is_identity() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", group_name(g))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(g, f)| g.is_identity() && *f == RatFun::constant(self.rank + 1, Q::one()))
    }
}

impl PartialEq for TwistedOp {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Add for &TwistedOp {
    type Output = TwistedOp;
    fn add(self, rhs: &TwistedOp) -> TwistedOp {
        let mut out = self.clone();
        for (g, f) in &rhs.terms {
            out.add_term(g.clone(), f.clone());
        }
        out
    }
}

impl Sub for &TwistedOp {
    type Output = TwistedOp;
    fn sub(self, rhs: &TwistedOp) -> TwistedOp {
        let mut out = self.clone();
        for (g, f) in &rhs.terms {
            out.add_term(g.clone(), -f);
        }
        out
    }
}

impl Neg for &TwistedOp {
    type Output = TwistedOp;
    fn neg(self) -> TwistedOp {
        self.scale(&-Q::one())
    }
}

impl Mul for &TwistedOp {
    type Output = TwistedOp;
    fn mul(self, rhs: &TwistedOp) -> TwistedOp {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = TwistedOp::zero(self.rank);
        for (v, f) in &self.terms {
            for (w, g) in &rhs.terms {
                let twisted = v.act_ratfun(g);
                out.add_term(v.compose(w), f * &twisted);
            }
        }
        out
    }
}

impl Add for TwistedOp {
    type Output = TwistedOp;
    fn add(self, rhs: TwistedOp) -> TwistedOp {
        &self + &rhs
    }
}

impl Sub for TwistedOp {
    type Output = TwistedOp;
    fn sub(self, rhs: TwistedOp) -> TwistedOp {
        &self - &rhs
    }
}

impl Mul for TwistedOp {
    type Output = TwistedOp;
    fn mul(self, rhs: TwistedOp) -> TwistedOp {
        &self * &rhs
    }
}

/// ∂_α(f) = (s_α f − f)/α for a linear root, panicking if not exact.
pub fn demazure_poly(root: &[Q], coroot: &[Q], f: &Poly) -> Poly {
    let n = root.len();
    let s = GroupElt::reflection(root, coroot, &Q::from_integer(0.into()));
    let num = &s.act_poly(f) - f;
    let a = Poly::linear(n + 1, root);
    num.div_exact(&a)
        .expect("s_α f − f is always divisible by α")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qi, qvec};

    fn alpha() -> (Vec<Q>, Vec<Q>) {
        (qvec(&[1, -1]), qvec(&[1, -1]))
    }

    #[test]
    fn demazure_values() {
        let (a, c) = alpha();
        let g1 = Poly::var(3, 0);
        let g2 = Poly::var(3, 1);
        assert_eq!(demazure_poly(&a, &c, &g1), Poly::constant(3, qi(-1)));
        assert!(demazure_poly(&a, &c, &(&g1 * &g2)).is_zero());
        assert_eq!(demazure_poly(&a, &c, &(&g1 * &g1)), -&(&g1 + &g2));
    }

    #[test]
    fn psi_squares_to_zero() {
        let (a, c) = alpha();
        let psi = TwistedOp::demazure(&a, &c, &qi(0));
        assert!((&psi * &psi).is_zero());
        let id = TwistedOp::identity(2);
        assert_eq!(&id * &psi, psi);
    }

    #[test]
    fn operator_matches_polynomial_demazure() {
        let (a, c) = alpha();
        let psi = TwistedOp::demazure(&a, &c, &qi(0));
        let f = &Poly::var(3, 0).pow(3) + &Poly::var(3, 1);
        assert_eq!(psi.apply(&f), RatFun::from_poly(demazure_poly(&a, &c, &f)));
    }

    #[test]
    fn affine_demazure_kills_invariants() {
        let (a, c) = alpha();
        let u = TwistedOp::demazure(&a, &c, &qi(1));
        let sym = &Poly::var(3, 0) + &Poly::var(3, 1);
        assert!(u.apply(&sym).is_zero());
        assert!((&u * &u).is_zero());
    }
}
