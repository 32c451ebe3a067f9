//! Minimal galleries along straight segments and their folding into the
//! dominant chamber.

use crate::arrangement::{AffineForm, Sign, SignVector};
use crate::gauge::GaugeDatum;
use crate::group::GroupElt;
use crate::rational::{q, Q};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HypId {
    Matter { weight: usize, level: i64 },
    Coxeter { root: usize, level: i64 },
}

impl fmt::Display for HypId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HypId::Matter { weight, level: 0 } => write!(f, "H{}", weight + 1),
            HypId::Matter { weight, level } => write!(f, "H{}[{}]", weight + 1, level),
            HypId::Coxeter { root, level: 0 } => write!(f, "alpha{}", root + 1),
            HypId::Coxeter { root, level } => write!(f, "alpha{}[{}]", root + 1, level),
        }
    }
}

/// The hyperplane {form = 0}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub id: HypId,
    pub form: AffineForm,
}

/// Matter walls φ_i = ε_i and Coxeter walls α = 0 of the Higgs side.
pub fn higgs_hyperplanes(gauge: &GaugeDatum) -> Vec<Hyperplane> {
    let mut out = Vec::new();
    for (i, w) in gauge.weights.iter().enumerate() {
        out.push(Hyperplane {
            id: HypId::Matter { weight: i, level: 0 },
            form: AffineForm::new(w.linear.clone(), -&w.flavor - &w.epsilon),
        });
    }
    for (a, r) in gauge.roots.iter().enumerate() {
        out.push(Hyperplane {
            id: HypId::Coxeter { root: a, level: 0 },
            form: AffineForm::new(r.linear.clone(), Q::zero()),
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Folded {
    /// Simple-root indices, in the order the folded path meets them.
    pub betas: Vec<usize>,
    pub sigmas: Vec<SignVector>,
    /// Residual Weyl element: the endpoint lies in w·(dominant chamber).
    pub w: GroupElt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gallery {
    /// Effective start; differs from the requested one only by a tie-breaking perturbation.
    pub start: Vec<Q>,
    pub end: Vec<Q>,
    pub crossings: Vec<(HypId, Q)>,
    pub folded: Option<Folded>,
}

impl Gallery {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn point_at(&self, t: &Q) -> Vec<Q> {
        self.start.iter().zip(&self.end).map(|(a, b)| a + t * (b - a)).collect()
    }

    /// Points strictly between consecutive crossings, one per chamber visited.
    pub fn chamber_points(&self) -> Vec<Vec<Q>> {
        let mut ts = vec![Q::zero()];
        ts.extend(self.crossings.iter().map(|(_, t)| t.clone()));
        ts.push(Q::one());
        ts.windows(2).map(|w| self.point_at(&((&w[0] + &w[1]) / Q::from_integer(2.into())))).collect()
    }
}

fn side(h: &Hyperplane, x: &[Q]) -> Result<bool> {
    let v = h.form.eval(x);
    if v.is_zero() {
        return Err(Error::Domain(format!("point lies on hyperplane {}", h.id)));
    }
    Ok(v.is_positive())
}

fn crossings_from(x: &[Q], y: &[Q], hyps: &[Hyperplane]) -> Vec<(HypId, Q)> {
    let mut out = Vec::new();
    for h in hyps {
        let (fx, fy) = (h.form.eval(x), h.form.eval(y));
        if fx.is_positive() != fy.is_positive() {
            let t = &fx / (&fx - &fy);
            out.push((h.id, t));
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    out
}

fn has_ties(c: &[(HypId, Q)]) -> bool {
    c.windows(2).any(|w| w[0].1 == w[1].1)
}

/// Crossings of the segment x→y, ordered by parameter; a codimension-2
/// coincidence is resolved by moving x by (δ, δ², …) for small δ.
pub fn minimal_gallery(x: &[Q], y: &[Q], hyps: &[Hyperplane]) -> Result<Gallery> {
    if x.len() != y.len() || hyps.iter().any(|h| h.form.coeffs.len() != x.len()) {
        return Err(Error::Input("gallery endpoints and hyperplanes disagree in dimension".into()));
    }
    let sx: Vec<bool> = hyps.iter().map(|h| side(h, x)).collect::<Result<_>>()?;
    for h in hyps {
        side(h, y)?;
    }
    let crossings = crossings_from(x, y, hyps);
    if !has_ties(&crossings) {
        return Ok(Gallery { start: x.to_vec(), end: y.to_vec(), crossings, folded: None });
    }
    for k in 4..64 {
        let delta = q(1, 1i64 << k);
        let mut pert = x.to_vec();
        let mut p = delta.clone();
        for c in pert.iter_mut() {
            *c += &p;
            p *= &delta;
        }
        let same = hyps.iter().zip(&sx).all(|(h, &s)| {
            let v = h.form.eval(&pert);
            !v.is_zero() && v.is_positive() == s
        });
        if !same {
            continue;
        }
        let crossings = crossings_from(&pert, y, hyps);
        if !has_ties(&crossings) {
            return Ok(Gallery { start: pert, end: y.to_vec(), crossings, folded: None });
        }
    }
    Err(Error::Invariant("no tie-breaking perturbation found".into()))
}

/// Sign vector of the C' chamber containing x.
pub fn epsilon_signs(gauge: &GaugeDatum, x: &[Q]) -> Result<SignVector> {
    let mut out = Vec::with_capacity(gauge.d());
    for (i, w) in gauge.weights.iter().enumerate() {
        let v = gauge.higgs_eval(i, x) - &w.epsilon;
        if v.is_zero() {
            return Err(Error::Domain(format!("point lies on matter hyperplane H{}", i + 1)));
        }
        out.push(if v.is_positive() { Sign::Plus } else { Sign::Minus });
    }
    Ok(SignVector(out))
}

/// Each time the running path meets a root wall, reflect the remainder
/// by the corresponding simple reflection.
pub fn fold_gallery(gauge: &GaugeDatum, g: &Gallery) -> Result<Gallery> {
    let pts = g.chamber_points();
    let mut u = GroupElt::identity(gauge.rank);
    let mut betas = Vec::new();
    let mut sigmas = Vec::new();
    for (k, (id, _)) in g.crossings.iter().enumerate() {
        let HypId::Coxeter { root, .. } = *id else { continue };
        let wall = u.act_covector(&gauge.roots[root].linear);
        let simple = match gauge.root_index_of(&wall) {
            Some((a, _)) if gauge.roots[a].simple => a,
            _ => {
                return Err(Error::Invariant(format!(
                    "folded path met a non-simple wall at crossing {}",
                    k + 1
                )))
            }
        };
        let p = u.act_point(&pts[k]);
        if !gauge.is_dominant(&p) {
            return Err(Error::Invariant("folded path left the dominant chamber".into()));
        }
        sigmas.push(epsilon_signs(gauge, &p)?);
        betas.push(simple);
        u = gauge.reflection(simple).compose(&u);
    }
    let mut out = g.clone();
    out.folded = Some(Folded { betas, sigmas, w: u.inverse() });
    Ok(out)
}

/// Undo the folding: the Coxeter crossings of the original path, read off
/// by applying the recorded reflections in reverse.
pub fn unfold_walls(gauge: &GaugeDatum, f: &Folded) -> Vec<usize> {
    let mut u = GroupElt::identity(gauge.rank);
    let mut out = Vec::new();
    for &b in &f.betas {
        // the original wall is u^{-1}·β
        let orig = u.inverse().act_covector(&gauge.roots[b].linear);
        out.push(gauge.root_index_of(&orig).map(|(a, _)| a).unwrap_or(usize::MAX));
        u = gauge.reflection(b).compose(&u);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{chamber_spec, interior_point, ChamberKind};
    use crate::presets;
    use crate::rational::qi;

    fn center(g: &GaugeDatum, s: &str, w: &GroupElt) -> Vec<Q> {
        let spec = chamber_spec(g, &s.parse().unwrap(), ChamberKind::Epsilon, Some(w)).unwrap();
        interior_point(&spec).unwrap().unwrap()
    }

    #[test]
    fn running_example_path() {
        let g = presets::gl2_running();
        let id = GroupElt::identity(2);
        let s = g.reflection(0);
        let x = center(&g, "+-+-", &id);
        let y = center(&g, "-+++", &s);
        assert_eq!(y, vec![q(-1, 3), q(5, 3)]);
        let gal = minimal_gallery(&x, &y, &higgs_hyperplanes(&g)).unwrap();
        let ids: Vec<String> = gal.crossings.iter().map(|(h, _)| h.to_string()).collect();
        assert_eq!(ids, ["H4", "H1", "alpha1", "H2"]);
        let ts: Vec<Q> = gal.crossings.iter().map(|(_, t)| t.clone()).collect();
        assert_eq!(ts, vec![q(3, 13), q(1, 2), q(13, 19), q(10, 13)]);
        let f = fold_gallery(&g, &gal).unwrap().folded.unwrap();
        assert_eq!(f.betas, vec![0]);
        assert_eq!(f.sigmas, vec!["--++".parse().unwrap()]);
        assert_eq!(f.w, s);
        assert_eq!(unfold_walls(&g, &f), vec![0]);
    }

    #[test]
    fn trivial_and_adjacent() {
        let g = presets::gl2_running();
        let id = GroupElt::identity(2);
        let x = center(&g, "++++", &id);
        let gal = minimal_gallery(&x, &x, &higgs_hyperplanes(&g)).unwrap();
        assert!(gal.is_empty());
        let f = fold_gallery(&g, &gal).unwrap().folded.unwrap();
        assert!(f.betas.is_empty() && f.w.is_identity());
        let y = center(&g, "+-++", &id);
        let gal = minimal_gallery(&x, &y, &higgs_hyperplanes(&g)).unwrap();
        assert_eq!(gal.len(), 1);
    }

    #[test]
    fn rank_one_fold() {
        let g = presets::nilhecke(2);
        let hyps = higgs_hyperplanes(&g);
        let gal = minimal_gallery(&[qi(0), qi(1)], &[qi(1), qi(0)], &hyps).unwrap();
        let f = fold_gallery(&g, &gal).unwrap().folded.unwrap();
        assert_eq!(f.betas, vec![0]);
        assert_eq!(f.w, g.reflection(0));
    }

    #[test]
    fn ties_are_broken() {
        let g = presets::nilhecke(2);
        let mut hyps = higgs_hyperplanes(&g);
        hyps.push(Hyperplane {
            id: HypId::Matter { weight: 9, level: 0 },
            form: AffineForm::new(vec![qi(1), qi(0)], q(-1, 2)),
        });
        // the segment passes through the corner (1/2, 1/2)
        let gal = minimal_gallery(&[qi(0), qi(1)], &[qi(1), qi(0)], &hyps).unwrap();
        assert_eq!(gal.len(), 2);
        assert_ne!(gal.crossings[0].1, gal.crossings[1].1);
        assert!(minimal_gallery(&[q(1, 2), qi(0)], &[qi(0), qi(1)], &hyps).is_err());
    }
}
