//! Elements of the (extended affine) Weyl group as affine maps on t,
//! and their action on polynomials with the loop parameter h.

use crate::linalg::{identity, inverse, is_identity, mat_mul, mat_vec, Mat};
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::rational::{dot, Q};
use num_traits::{One, Zero};
use std::fmt;

/// x ↦ A x + a.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElt {
    pub mat: Mat,
    pub trans: Vec<Q>,
}

impl GroupElt {
    pub fn identity(n: usize) -> Self {
        GroupElt { mat: identity(n), trans: vec![Q::zero(); n] }
    }

    pub fn linear(mat: Mat) -> Self {
        let n = mat.len();
        GroupElt { mat, trans: vec![Q::zero(); n] }
    }

    pub fn translation(zeta: Vec<Q>) -> Self {
        GroupElt { mat: identity(zeta.len()), trans: zeta }
    }

    /// Reflection x ↦ x − (α(x) − level) α^∨.
    pub fn reflection(root: &[Q], coroot: &[Q], level: &Q) -> Self {
        let n = root.len();
        let mat: Mat = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let d = if i == j { Q::one() } else { Q::zero() };
                        d - &coroot[i] * &root[j]
                    })
                    .collect()
            })
            .collect();
        let trans = coroot.iter().map(|c| c * level).collect();
        GroupElt { mat, trans }
    }

    pub fn rank(&self) -> usize {
        self.trans.len()
    }

    pub fn is_identity(&self) -> bool {
        is_identity(&self.mat) && self.trans.iter().all(Q::is_zero)
    }

    pub fn is_linear(&self) -> bool {
        self.trans.iter().all(Q::is_zero)
    }

    pub fn compose(&self, other: &GroupElt) -> GroupElt {
        let mat = mat_mul(&self.mat, &other.mat);
        let at = mat_vec(&self.mat, &other.trans);
        let trans = self.trans.iter().zip(at).map(|(a, b)| a + b).collect();
        GroupElt { mat, trans }
    }

    pub fn inverse(&self) -> GroupElt {
        let inv = inverse(&self.mat).expect("group elements are invertible");
        let t = mat_vec(&inv, &self.trans);
        GroupElt { mat: inv, trans: t.into_iter().map(|x| -x).collect() }
    }

    pub fn act_point(&self, x: &[Q]) -> Vec<Q> {
        mat_vec(&self.mat, x)
            .into_iter()
            .zip(&self.trans)
            .map(|(a, b)| a + b)
            .collect()
    }

    /// Linear part applied to a direction.
    pub fn act_vector(&self, v: &[Q]) -> Vec<Q> {
        mat_vec(&self.mat, v)
    }

    /// Pushforward of a covector μ: (g▷μ)(x) = μ(A^{-1}x), ignoring translation.
    pub fn act_covector(&self, mu: &[Q]) -> Vec<Q> {
        let inv = inverse(&self.mat).expect("invertible");
        crate::linalg::vec_mat(mu, &inv)
    }

    /// Images of γ_1..γ_n, h under f ↦ f∘g^{-1}, homogenized in h:
    /// γ ↦ A^{-1}(γ − a h).
    fn substitution(&self, nvars: usize) -> Vec<Poly> {
        let n = self.rank();
        assert_eq!(nvars, n + 1, "polynomial ring does not match group rank");
        let inv = inverse(&self.mat).expect("invertible");
        let ainv_a = mat_vec(&inv, &self.trans);
        let mut images: Vec<Poly> = (0..n)
            .map(|j| Poly::affine(nvars, &inv[j], &-ainv_a[j].clone(), &Q::zero()))
            .collect();
        images.push(Poly::var(nvars, n));
        images
    }

    pub fn act_poly(&self, f: &Poly) -> Poly {
        if self.is_identity() {
            return f.clone();
        }
        f.substitute(&self.substitution(f.nvars()))
    }

    pub fn act_ratfun(&self, f: &RatFun) -> RatFun {
        if self.is_identity() {
            return f.clone();
        }
        let sub = self.substitution(f.nvars());
        f.map_poly(|p| p.substitute(&sub))
    }

    /// Affine-linear form value μ(x) + c for μ given as covector.
    pub fn eval_form(mu: &[Q], c: &Q, x: &[Q]) -> Q {
        dot(mu, x) + c
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .mat
            .iter()
            .map(|r| r.iter().map(crate::rational::fmt_q).collect::<Vec<_>>().join(" "))
            .collect();
        let t: Vec<String> = self.trans.iter().map(crate::rational::fmt_q).collect();
        write!(f, "[{}|{}]", rows.join("; "), t.join(" "))
    }
}

/// Breadth-first closure of a generating set; None when the cap is hit.
pub fn enumerate_group(gens: &[GroupElt], n: usize, cap: usize) -> Option<Vec<(GroupElt, Vec<usize>)>> {
    let id = GroupElt::identity(n);
    let mut seen = std::collections::BTreeMap::new();
    seen.insert(id.clone(), Vec::<usize>::new());
    let mut out = vec![(id.clone(), Vec::new())];
    let mut frontier = vec![(id, Vec::new())];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (g, word) in &frontier {
            for (k, s) in gens.iter().enumerate() {
                let h = g.compose(s);
                if !seen.contains_key(&h) {
                    let mut w: Vec<usize> = word.clone();
                    w.push(k);
                    seen.insert(h.clone(), w.clone());
                    out.push((h.clone(), w.clone()));
                    next.push((h, w));
                    if out.len() > cap {
                        return None;
                    }
                }
            }
        }
        frontier = next;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qi, qvec};

    #[test]
    fn reflection_swaps_coordinates() {
        let s = GroupElt::reflection(&qvec(&[1, -1]), &qvec(&[1, -1]), &Q::zero());
        assert_eq!(s.act_point(&qvec(&[3, 1])), qvec(&[1, 3]));
        let g1 = Poly::var(3, 0);
        assert_eq!(s.act_poly(&g1), Poly::var(3, 1));
    }

    #[test]
    fn translation_shifts_by_h() {
        let t = GroupElt::translation(qvec(&[1, 0]));
        let g1 = Poly::var(3, 0);
        let h = Poly::var(3, 2);
        assert_eq!(t.act_poly(&g1), &g1 - &h);
        assert_eq!(t.inverse().act_poly(&g1), &g1 + &h);
    }

    #[test]
    fn action_is_homomorphism() {
        let s = GroupElt::reflection(&qvec(&[1, -1]), &qvec(&[1, -1]), &qi(2));
        let t = GroupElt::translation(qvec(&[1, -3]));
        let f = &(&Poly::var(3, 0) * &Poly::var(3, 0)) + &Poly::var(3, 2);
        let lhs = s.compose(&t).act_poly(&f);
        let rhs = s.act_poly(&t.act_poly(&f));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn s3_has_six_elements() {
        let s1 = GroupElt::reflection(&qvec(&[1, -1, 0]), &qvec(&[1, -1, 0]), &Q::zero());
        let s2 = GroupElt::reflection(&qvec(&[0, 1, -1]), &qvec(&[0, 1, -1]), &Q::zero());
        assert_eq!(enumerate_group(&[s1, s2], 3, 100).unwrap().len(), 6);
    }
}
