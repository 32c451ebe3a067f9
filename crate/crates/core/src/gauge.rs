//! The gauge datum (G, V, flavor, ε, ξ) and its Weyl group.

use crate::group::{enumerate_group, GroupElt};
use crate::linalg::{vec_mat, Mat};
use crate::poly::Poly;
use crate::rational::{dot, fmt_q, Q};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

pub const DEFAULT_WEYL_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightLine {
    pub linear: Vec<Q>,
    pub flavor: Q,
    pub epsilon: Q,
    pub orbit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub linear: Vec<Q>,
    pub coroot: Vec<Q>,
    pub simple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElt {
    pub g: GroupElt,
    /// Reduced word in the Weyl generators.
    pub word: Vec<usize>,
}

impl WeylElt {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeDatum {
    pub rank: usize,
    pub weights: Vec<WeightLine>,
    /// Positive roots; the simple ones are flagged and ordered as the generators.
    pub roots: Vec<Root>,
    pub weyl_generators: Vec<Mat>,
    pub xi: Vec<Q>,
    pub h_marker: String,
    pub weyl_cap: usize,
}

impl GaugeDatum {
    pub fn new(
        rank: usize,
        weights: Vec<WeightLine>,
        roots: Vec<Root>,
        weyl_generators: Vec<Mat>,
        xi: Vec<Q>,
    ) -> Result<Self> {
        let g = GaugeDatum {
            rank,
            weights,
            roots,
            weyl_generators,
            xi,
            h_marker: "h".into(),
            weyl_cap: DEFAULT_WEYL_CAP,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.rank;
        if n == 0 {
            return Err(Error::Input("cartan rank must be positive".into()));
        }
        if self.xi.len() != n {
            return Err(Error::Input(format!("xi has length {}, expected {n}", self.xi.len())));
        }
        for (i, w) in self.weights.iter().enumerate() {
            if w.linear.len() != n {
                return Err(Error::Input(format!("weight {} has wrong arity", i + 1)));
            }
            if w.linear.iter().all(Q::is_zero) {
                return Err(Error::Input(format!("weight {} has zero linear part", i + 1)));
            }
            if !(w.epsilon > -Q::one() && w.epsilon < Q::zero()) {
                return Err(Error::Input(format!(
                    "epsilon of weight {} is {}, must lie in (-1,0)",
                    i + 1,
                    fmt_q(&w.epsilon)
                )));
            }
        }
        for (i, a) in self.weights.iter().enumerate() {
            for (j, b) in self.weights.iter().enumerate().skip(i + 1) {
                if a.orbit == b.orbit {
                    if a.epsilon != b.epsilon {
                        return Err(Error::Input(format!(
                            "weights {} and {} share an orbit but not epsilon",
                            i + 1,
                            j + 1
                        )));
                    }
                } else if let Some(c) = proportional(&a.linear, &b.linear) {
                    if &b.flavor + &b.epsilon == &c * (&a.flavor + &a.epsilon) {
                        return Err(Error::Input(format!(
                            "matter hyperplanes {} and {} coincide; choose epsilon generically",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        for (k, r) in self.roots.iter().enumerate() {
            if r.linear.len() != n || r.coroot.len() != n {
                return Err(Error::Input(format!("root {} has wrong arity", k + 1)));
            }
            if dot(&r.linear, &r.coroot) != Q::from_integer(2.into()) {
                return Err(Error::Input(format!("root {} does not pair to 2 with its coroot", k + 1)));
            }
        }
        let simple: Vec<&Root> = self.roots.iter().filter(|r| r.simple).collect();
        if simple.len() != self.weyl_generators.len() {
            return Err(Error::Input(format!(
                "{} simple roots but {} Weyl generators",
                simple.len(),
                self.weyl_generators.len()
            )));
        }
        for (k, (s, r)) in self.weyl_generators.iter().zip(&simple).enumerate() {
            if s.len() != n || s.iter().any(|row| row.len() != n) {
                return Err(Error::Input(format!("Weyl generator {} is not {n}x{n}", k + 1)));
            }
            let refl = GroupElt::reflection(&r.linear, &r.coroot, &Q::zero());
            if refl.mat != *s {
                return Err(Error::Input(format!(
                    "Weyl generator {} is not the reflection in simple root {}",
                    k + 1,
                    k + 1
                )));
            }
            if vec_mat(&self.xi, s) != self.xi {
                return Err(Error::Input(format!("xi is not invariant under generator {}", k + 1)));
            }
            // V must be a representation: generators permute weights within orbits.
            for (i, w) in self.weights.iter().enumerate() {
                let img = vec_mat(&w.linear, s);
                let ok = self.weights.iter().any(|v| {
                    v.orbit == w.orbit && v.linear == img && v.flavor == w.flavor
                });
                if !ok {
                    return Err(Error::Input(format!(
                        "generator {} does not map weight {} to a weight of its orbit",
                        k + 1,
                        i + 1
                    )));
                }
            }
        }
        let elts = self.weyl_group()?;
        for r in &self.roots {
            let ok = elts.iter().any(|w| {
                let img = w.g.act_covector(&r.linear);
                self.roots.iter().filter(|s| s.simple).any(|s| s.linear == img)
            });
            if !ok {
                return Err(Error::Input("positive roots are not Weyl translates of simple roots".into()));
            }
        }
        Ok(())
    }

    pub fn d(&self) -> usize {
        self.weights.len()
    }

    pub fn nvars(&self) -> usize {
        self.rank + 1
    }

    pub fn is_abelian(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn weight_poly(&self, i: usize) -> Poly {
        Poly::linear(self.nvars(), &self.weights[i].linear)
    }

    /// φ_i^+ = λ_i + f_i h.
    pub fn phi_plus(&self, i: usize) -> Poly {
        let w = &self.weights[i];
        Poly::affine(self.nvars(), &w.linear, &w.flavor, &Q::zero())
    }

    pub fn root_poly(&self, a: usize) -> Poly {
        Poly::linear(self.nvars(), &self.roots[a].linear)
    }

    pub fn gamma(&self, j: usize) -> Poly {
        Poly::var(self.nvars(), j)
    }

    pub fn h(&self) -> Poly {
        Poly::var(self.nvars(), self.rank)
    }

    /// Higgs-side value φ_i(x) = ⟨λ_i, x⟩ − f_i.
    pub fn higgs_eval(&self, i: usize, x: &[Q]) -> Q {
        dot(&self.weights[i].linear, x) - &self.weights[i].flavor
    }

    /// Coulomb-side value ⟨λ_i, x⟩.
    pub fn coulomb_eval(&self, i: usize, x: &[Q]) -> Q {
        dot(&self.weights[i].linear, x)
    }

    pub fn root_eval(&self, a: usize, x: &[Q]) -> Q {
        dot(&self.roots[a].linear, x)
    }

    pub fn simple_roots(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&a| self.roots[a].simple).collect()
    }

    pub fn reflection(&self, a: usize) -> GroupElt {
        GroupElt::reflection(&self.roots[a].linear, &self.roots[a].coroot, &Q::zero())
    }

    pub fn affine_reflection(&self, a: usize, level: &Q) -> GroupElt {
        GroupElt::reflection(&self.roots[a].linear, &self.roots[a].coroot, level)
    }

    pub fn generators(&self) -> Vec<GroupElt> {
        self.weyl_generators.iter().cloned().map(GroupElt::linear).collect()
    }

    pub fn weyl_group(&self) -> Result<Vec<WeylElt>> {
        let gens = self.generators();
        let elts = enumerate_group(&gens, self.rank, self.weyl_cap).ok_or_else(|| {
            Error::Resource(format!("Weyl group exceeds the order cap {}", self.weyl_cap))
        })?;
        Ok(elts.into_iter().map(|(g, word)| WeylElt { g, word }).collect())
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl_group().map(|v| v.len()).unwrap_or(0)
    }

    pub fn find_weyl(&self, g: &GroupElt) -> Option<WeylElt> {
        self.weyl_group().ok()?.into_iter().find(|w| &w.g == g)
    }

    pub fn weyl_from_word(&self, word: &[usize]) -> GroupElt {
        let gens = self.generators();
        word.iter()
            .fold(GroupElt::identity(self.rank), |acc, &k| acc.compose(&gens[k]))
    }

    /// Index of the positive root ±proportional to a covector.
    pub fn root_index_of(&self, cov: &[Q]) -> Option<(usize, bool)> {
        self.roots.iter().enumerate().find_map(|(a, r)| {
            if r.linear == cov {
                Some((a, true))
            } else if r.linear.iter().zip(cov).all(|(x, y)| *x == -y.clone()) {
                Some((a, false))
            } else {
                None
            }
        })
    }

    /// Bruhat interval below `w`, via subword products of a reduced word.
    pub fn bruhat_below(&self, w: &WeylElt) -> BTreeSet<GroupElt> {
        let gens = self.generators();
        let mut set = BTreeSet::new();
        set.insert(GroupElt::identity(self.rank));
        for &k in &w.word {
            let more: Vec<GroupElt> = set.iter().map(|x| x.compose(&gens[k])).collect();
            set.extend(more);
        }
        set
    }

    pub fn bruhat_leq(&self, u: &GroupElt, w: &WeylElt) -> bool {
        self.bruhat_below(w).contains(u)
    }

    pub fn is_dominant(&self, x: &[Q]) -> bool {
        (0..self.roots.len()).all(|a| self.root_eval(a, x).is_positive())
    }

    pub fn name_of(&self, g: &GroupElt) -> String {
        if g.is_identity() {
            return "1".into();
        }
        if g.is_linear() {
            if let Some(w) = self.find_weyl(g) {
                return w.word.iter().map(|k| format!("s{}", k + 1)).collect::<Vec<_>>().join("*");
            }
        }
        let lin = GroupElt::linear(g.mat.clone());
        let t: Vec<String> = g.trans.iter().map(fmt_q).collect();
        if lin.is_identity() {
            format!("t({})", t.join(","))
        } else {
            format!("t({})*{}", t.join(","), self.name_of(&lin))
        }
    }

    pub fn var_names(&self) -> Vec<String> {
        let mut v: Vec<String> = (1..=self.rank).map(|i| format!("g{i}")).collect();
        v.push(self.h_marker.clone());
        v
    }

    /// Same datum with every flavor shift set to zero.
    pub fn with_trivial_flavor(&self) -> GaugeDatum {
        let mut g = self.clone();
        for w in &mut g.weights {
            w.flavor = Q::zero();
        }
        g
    }
}

/// c with b = c·a, when a and b are proportional.
pub fn proportional(a: &[Q], b: &[Q]) -> Option<Q> {
    let k = a.iter().position(|x| !x.is_zero())?;
    let c = &b[k] / &a[k];
    if a.iter().zip(b).all(|(x, y)| &(&c * x) == y) {
        Some(c)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn running_example_loads() {
        let g = presets::gl2_running();
        assert_eq!(g.d(), 4);
        assert_eq!(g.weyl_order(), 2);
        assert_eq!(g.phi_plus(2).to_string(), "g1 - h");
    }

    #[test]
    fn rejects_bad_epsilon() {
        let mut g = presets::gl2_running();
        g.weights[0].epsilon = Q::zero();
        assert!(matches!(g.validate(), Err(Error::Input(_))));
    }

    #[test]
    fn rejects_coincident_hyperplanes() {
        let mut g = presets::gl2_running();
        g.weights[2].flavor = Q::one();
        g.weights[3].flavor = Q::one();
        g.weights[2].epsilon = g.weights[0].epsilon.clone();
        g.weights[3].epsilon = g.weights[0].epsilon.clone();
        assert!(g.validate().is_err());
    }
}
