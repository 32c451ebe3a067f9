//! The functor γ from the Steinberg category of the Levi datum at ρ to the
//! ρ-localized Coulomb category, checked generator by generator against
//! the shift map and on every Higgs relation instance.

use crate::arrangement::{chamber_spec, interior_point, AffineForm, ChamberKind, Cmp, SignVector};
use crate::coulomb::{Coulomb, CoulombMorphism};
use crate::gauge::{GaugeDatum, Root, WeightLine};
use crate::group::GroupElt;
use crate::linalg::{rank as mat_rank, Mat};
use crate::morphism::{compose_all, Morphism};
use crate::poly::Poly;
use crate::probe::{probes, rng};
use crate::quiver::{expanded_as_data, quiver_expand, quiver_gauge, QuiverData};
use crate::ratfun::RatFun;
use crate::rational::{dot, q, Q};
use crate::report::Report;
use crate::steinberg::{Gen, Steinberg, Term};
use crate::twisted::TwistedOp;
use crate::{Error, Result};
use num_traits::{One, Zero};
use rand::Rng;
use std::collections::BTreeMap;

/// Integrality classification at ρ and the Levi datum L acting on V_I.
///
/// The Levi datum is written in coordinates y = ξ − ρ: it keeps the
/// original flavors, its Weyl group is linear, and the shift map becomes
/// conjugation by the translation t_ρ.
#[derive(Clone, Debug)]
pub struct LeviData {
    pub rho: Vec<Q>,
    pub relevant_weights: Vec<usize>,
    pub relevant_roots: Vec<usize>,
    /// Original root indices of the Levi simple roots.
    pub simple_roots: Vec<usize>,
    pub gauge: GaugeDatum,
    /// Levi root index → original root index.
    pub root_map: Vec<usize>,
}

impl LeviData {
    pub fn weyl_order(&self) -> usize {
        self.gauge.weyl_order()
    }
}

pub fn is_weight_relevant(g: &GaugeDatum, i: usize, rho: &[Q]) -> bool {
    (g.coulomb_eval(i, rho) + &g.weights[i].flavor).is_integer()
}

pub fn is_root_relevant(g: &GaugeDatum, a: usize, rho: &[Q]) -> bool {
    g.root_eval(a, rho).is_integer()
}

pub fn relevant_data(g: &GaugeDatum, rho: &[Q]) -> Result<LeviData> {
    if rho.len() != g.rank {
        return Err(Error::Input(format!("rho has length {}, expected {}", rho.len(), g.rank)));
    }
    let relevant_weights: Vec<usize> = (0..g.d()).filter(|&i| is_weight_relevant(g, i, rho)).collect();
    let relevant_roots: Vec<usize> = (0..g.roots.len()).filter(|&a| is_root_relevant(g, a, rho)).collect();
    // a relevant positive root is Levi-simple unless it is a sum of two relevant positive roots
    let sum_of_two = |a: usize| {
        relevant_roots.iter().any(|&b| {
            relevant_roots.iter().any(|&c| {
                let s: Vec<Q> = g.roots[b].linear.iter().zip(&g.roots[c].linear).map(|(x, y)| x + y).collect();
                s == g.roots[a].linear
            })
        })
    };
    let simple_roots: Vec<usize> = relevant_roots.iter().copied().filter(|&a| !sum_of_two(a)).collect();
    let mut root_map: Vec<usize> = simple_roots.clone();
    root_map.extend(relevant_roots.iter().copied().filter(|a| !simple_roots.contains(a)));
    let roots: Vec<Root> = root_map
        .iter()
        .map(|&a| Root { simple: simple_roots.contains(&a), ..g.roots[a].clone() })
        .collect();
    let gens: Vec<Mat> = simple_roots
        .iter()
        .map(|&a| GroupElt::reflection(&g.roots[a].linear, &g.roots[a].coroot, &Q::zero()).mat)
        .collect();
    let weights: Vec<WeightLine> = relevant_weights.iter().map(|&i| g.weights[i].clone()).collect();
    let mut gauge = GaugeDatum::new(g.rank, weights, roots, gens, g.xi.clone())?;
    gauge.weyl_cap = g.weyl_cap;
    Ok(LeviData { rho: rho.to_vec(), relevant_weights, relevant_roots, simple_roots, gauge, root_map })
}

/// Φ with the factors vanishing at ρ (h = 1) removed; h kept symbolic.
pub fn phi0(c: &Coulomb, eta: &[Q], eta2: &[Q], rho: &[Q]) -> Result<Poly> {
    let g = &c.gauge;
    let mut p = Poly::one(g.nvars());
    for (i, n) in c.crossing_set(eta, eta2)? {
        let at_rho = g.coulomb_eval(i, rho) + &g.weights[i].flavor;
        if at_rho != Q::from_integer(n.into()) {
            let w = &g.weights[i];
            p = &p * &Poly::affine(g.nvars(), &w.linear, &(&w.flavor - Q::from_integer(n.into())), &Q::zero());
        }
    }
    Ok(p)
}

/// Small generic offsets used to move a rational point off special hyperplanes.
fn nudge(n: usize, k: usize) -> Vec<Q> {
    const PRIMES: [i64; 8] = [101, 103, 107, 109, 113, 127, 131, 137];
    (0..n).map(|j| q(1 + j as i64, PRIMES[(j + k) % PRIMES.len()])).collect()
}

pub struct Bridge {
    pub coulomb: Coulomb,
    pub levi: LeviData,
    pub higgs: Steinberg,
    xis: BTreeMap<SignVector, Vec<Q>>,
    t_rho: GroupElt,
}

impl Bridge {
    pub fn new(gauge: &GaugeDatum, rho: &[Q]) -> Result<Self> {
        let levi = relevant_data(gauge, rho)?;
        let higgs = Steinberg::new(&levi.gauge)?;
        let coulomb = Coulomb::new(gauge);
        let t_rho = GroupElt::translation(rho.to_vec());
        let mut b = Bridge { coulomb, levi, higgs, xis: BTreeMap::new(), t_rho };
        for s in b.higgs.objects.clone() {
            let y0 = b.higgs.center(&s)?.clone();
            let spec = chamber_spec(&b.levi.gauge, &s, ChamberKind::Epsilon, Some(&GroupElt::identity(gauge.rank)))?;
            let xi = b
                .generic_near(&y0, &[], |y| spec.contains(y))
                .ok_or_else(|| Error::Invariant(format!("no generic Coulomb point in the chamber of {s}")))?;
            b.xis.insert(s, xi);
        }
        Ok(b)
    }

    fn rank(&self) -> usize {
        self.levi.gauge.rank
    }

    /// ρ + y + δ·v for the first δ = 2^-k keeping the point generic and
    /// inside `ok`; `keep` lists covectors the offset must not change.
    fn generic_near(&self, y: &[Q], keep: &[Vec<Q>], ok: impl Fn(&[Q]) -> bool) -> Option<Vec<Q>> {
        let n = self.rank();
        for k in 0..4 {
            let mut v = nudge(n, k);
            for c in keep {
                // project away from the covector along itself
                let cc = dot(c, c);
                let t = dot(c, &v) / cc;
                v = v.iter().zip(c).map(|(x, ci)| x - &t * ci).collect();
            }
            let mut delta = Q::one();
            for _ in 0..40 {
                let yy: Vec<Q> = y.iter().zip(&v).map(|(a, b)| a + &delta * b).collect();
                let xi: Vec<Q> = yy.iter().zip(&self.levi.rho).map(|(a, b)| a + b).collect();
                if ok(&yy) && self.coulomb.check_generic(&xi).is_ok() {
                    return Some(xi);
                }
                delta /= Q::from_integer(2.into());
            }
        }
        None
    }

    pub fn xi(&self, s: &SignVector) -> Result<&Vec<Q>> {
        self.xis.get(s).ok_or_else(|| Error::Domain(format!("{s} is not an object of the Levi category")))
    }

    /// 𝕤_ρ: μ ↦ μ − ⟨μ,ρ⟩h.
    pub fn shift(&self, p: &Poly) -> Poly {
        self.t_rho.act_poly(p)
    }

    pub fn shift_op(&self, op: &TwistedOp) -> TwistedOp {
        op.conjugate(&self.t_rho)
    }

    pub fn phi0(&self, eta: &[Q], eta2: &[Q]) -> Result<Poly> {
        phi0(&self.coulomb, eta, eta2, &self.levi.rho)
    }

    /// Φ₀⁻¹·r, regular at ρ by construction.
    pub fn scaled_r(&self, target: &[Q], source: &[Q]) -> Result<CoulombMorphism> {
        let p0 = self.phi0(target, source)?;
        let at: Vec<Q> = self.levi.rho.iter().cloned().chain(std::iter::once(Q::one())).collect();
        let inv = RatFun::one(p0.nvars()).div_poly(&p0);
        if !inv.regular_at(&at) {
            return Err(Error::Invariant("Phi_0 vanishes at rho".into()));
        }
        let r = self.coulomb.r(target, source)?;
        Ok(Morphism::new(r.target, r.source, &TwistedOp::scalar(self.rank(), inv) * &r.op))
    }

    fn levi_root(&self, a: usize) -> Result<&Root> {
        self.levi.gauge.roots.get(a).ok_or_else(|| Error::Input(format!("no Levi root {}", a + 1)))
    }

    /// γ(ψ_α(σ)) = s_α·u_α, realized at a pair of points straddling
    /// α = α(ρ) inside the chamber and transported back to ξ_σ.
    fn gamma_psi(&self, a: usize, s: &SignVector) -> Result<CoulombMorphism> {
        let root = self.levi_root(a)?.clone();
        let xi = self.xi(s)?.clone();
        let level = dot(&root.linear, &self.levi.rho);
        let mut spec = chamber_spec(&self.levi.gauge, s, ChamberKind::Epsilon, None)?;
        let wall = AffineForm::new(root.linear.clone(), Q::zero());
        spec.push(wall.clone(), Cmp::Ge);
        spec.push(wall, Cmp::Le);
        let p = interior_point(&spec)?
            .ok_or_else(|| Error::Domain(format!("the chamber of {s} does not meet the wall of root {}", a + 1)))?;
        let ar = crate::coulomb::AffineRoot { linear: root.linear.clone(), coroot: root.coroot.clone(), level };
        let sref = ar.reflection();
        let straddle = |y: &[Q]| -> Option<(Vec<Q>, Vec<Q>)> {
            let base: Vec<Q> = y.iter().zip(&self.levi.rho).map(|(a, b)| a + b).collect();
            let mut d = q(1, 7);
            for _ in 0..40 {
                let plus: Vec<Q> = base.iter().zip(&root.coroot).map(|(x, c)| x + &d * c).collect();
                let minus = sref.act_point(&plus);
                if self.coulomb.wall_between(&plus, &minus).is_ok() {
                    return Some((plus, minus));
                }
                d /= Q::from_integer(2.into());
            }
            None
        };
        // slide along the wall until the straddling pair is adjacent
        let n = self.rank();
        let (from, to) = (0..4)
            .find_map(|k| {
                let mut v = nudge(n, k);
                let t = dot(&root.linear, &v) / dot(&root.linear, &root.coroot);
                v = v.iter().zip(&root.coroot).map(|(x, c)| x - &t * c).collect();
                let mut delta = Q::one();
                for _ in 0..40 {
                    let yy: Vec<Q> = p.iter().zip(&v).map(|(a, b)| a + &delta * b).collect();
                    if spec.contains(&yy) {
                        if let Some(pair) = straddle(&yy) {
                            return Some(pair);
                        }
                    }
                    delta /= Q::from_integer(2.into());
                }
                None
            })
            .ok_or_else(|| Error::Invariant("no adjacent pair across the wall".into()))?;
        let u = self.coulomb.u(&from, &to)?;
        let y = self.coulomb.y(&sref, &to)?;
        compose_all(&[
            self.scaled_r(&xi, &y.target)?,
            y,
            u,
            self.scaled_r(&from, &xi)?,
        ])
    }

    pub fn gamma_generator(&self, g: &Gen) -> Result<CoulombMorphism> {
        match g {
            Gen::Wall(a, b) => self.scaled_r(self.xi(a)?, self.xi(b)?),
            Gen::Psi(r, s) => self.gamma_psi(*r, s),
            Gen::Mu(p, s) => self.coulomb.mu(&self.shift(p), self.xi(s)?),
        }
    }

    /// γ(w) for w ∈ W_l: the lift fixing ρ, transported back to ξ.
    pub fn gamma_weyl(&self, w: &GroupElt, s: &SignVector) -> Result<CoulombMorphism> {
        let lift = self.t_rho.compose(w).compose(&self.t_rho.inverse());
        let xi = self.xi(s)?.clone();
        let y = self.coulomb.y(&lift, &xi)?;
        Ok(y)
    }

    fn gamma_terms(&self, terms: &[Term], cache: &mut BTreeMap<String, CoulombMorphism>) -> Result<Option<CoulombMorphism>> {
        let names = self.levi.gauge.var_names();
        let mut acc: Option<CoulombMorphism> = None;
        for t in terms {
            let mut chain = Vec::new();
            for g in &t.gens {
                let key = g.describe(&names);
                if !cache.contains_key(&key) {
                    cache.insert(key.clone(), self.gamma_generator(g)?);
                }
                chain.push(cache[&key].clone());
            }
            let mut m = compose_all(&chain)?;
            m.op = m.op.scale(&t.coeff);
            acc = Some(match acc {
                None => m,
                Some(a) => a.add(&m)?,
            });
        }
        Ok(acc)
    }

    /// Generator intertwining, relation images, factorization and ranks.
    pub fn verify(&self, seed: u64, pair_count: usize) -> Result<Report> {
        let mut rep = Report::new("bridge");
        let st = &self.higgs;
        let objs = &st.objects;
        let rank = self.rank();
        let probe_polys: Vec<Poly> = probes(seed, 5, self.levi.gauge.nvars(), rank, 2)
            .iter()
            .map(|p| self.shift(p))
            .collect();

        // generators: γ(g) = t_ρ Y(g) t_ρ⁻¹
        let mut gens: Vec<Gen> = Vec::new();
        for a in objs {
            for b in objs {
                gens.push(Gen::Wall(a.clone(), b.clone()));
            }
            for r in 0..self.levi.gauge.roots.len() {
                if st.psi_defined(r, a)? {
                    gens.push(Gen::Psi(r, a.clone()));
                }
            }
            for j in 0..rank {
                gens.push(Gen::Mu(self.levi.gauge.gamma(j), a.clone()));
            }
        }
        let names = self.levi.gauge.var_names();
        let mut cache = BTreeMap::new();
        for g in &gens {
            let img = self.gamma_generator(g)?;
            let want = self.shift_op(&st.generator(g)?.op);
            let objects_ok = img.source == *self.xi(g.source())? && img.target == *self.xi(g.target())?;
            let ok = objects_ok
                && img.op == want
                && probe_polys.iter().all(|p| img.op.apply(p).as_poly().is_some());
            rep.push("generator", g.describe(&names), ok, if ok { "" } else { "image differs from the shifted operator" });
            cache.insert(g.describe(&names), img);
        }
        for w in self.levi.gauge.weyl_group()? {
            let lift = self.t_rho.compose(&w.g).compose(&self.t_rho.inverse());
            let fixes = lift.act_point(&self.levi.rho) == self.levi.rho;
            let op_ok = TwistedOp::group(lift.clone()) == self.shift_op(&TwistedOp::group(w.g.clone()));
            let integral = lift.trans.iter().all(|x| x.is_integer());
            rep.push("weyl-lift", format!("{:?}", w.word), fixes && op_ok && integral, "");
        }

        // relation instances map to identities, symbolically and at h = 1
        for rel in st.relations()? {
            let l = self.gamma_terms(&rel.lhs, &mut cache)?;
            let r = self.gamma_terms(&rel.rhs, &mut cache)?;
            let zero = TwistedOp::zero(rank);
            let lop = l.as_ref().map(|m| m.op.clone()).unwrap_or_else(|| zero.clone());
            let rop = r.as_ref().map(|m| m.op.clone()).unwrap_or(zero);
            let objects_ok = match (&l, &r) {
                (Some(a), Some(b)) => a.source == b.source && a.target == b.target,
                _ => true,
            };
            let ok = objects_ok && lop == rop && lop.specialize_h(&Q::one()) == rop.specialize_h(&Q::one());
            rep.push("relation-image", format!("{} {}", rel.schema, rel.label), ok, "");
        }

        // factorization 𝕤_ρ(φ(a,b))·Φ₀ = Φ on seeded chamber pairs
        let mut rg = rng(seed);
        for _ in 0..pair_count {
            let a = &objs[rg.gen_range(0..objs.len())];
            let b = &objs[rg.gen_range(0..objs.len())];
            let (xa, xb) = (self.xi(a)?, self.xi(b)?);
            let lhs = &self.shift(&st.phi_pair(a, b)) * &self.phi0(xa, xb)?;
            let rhs = self.coulomb.phi(xa, xb)?;
            let ok = lhs == rhs && lhs.specialize_last(&Q::one()) == rhs.specialize_last(&Q::one());
            rep.push("factorization", format!("{} <- {}", a.compact(), b.compact()), ok, "");
        }

        // ranks: #W_l on both sides
        let wl = self.levi.weyl_order();
        let stab = self.stabilizer_count()?;
        rep.push("stabilizer", format!("#W_l = {wl}"), stab == wl, format!("stabilizer of rho has {stab} elements"));
        let weyl = self.levi.gauge.weyl_group()?;
        let point = self.rank_point();
        for a in objs {
            for b in objs {
                let mut higgs_rows = Vec::new();
                let mut coulomb_rows = Vec::new();
                for w in &weyl {
                    let t = st.tilde_wall(a, b, &w.g)?;
                    let word = st.tilde_word(a, b, &w.g)?;
                    let img = self.gamma_terms(&[Term::word(word)], &mut cache)?
                        .ok_or_else(|| Error::Invariant("empty image".into()))?;
                    higgs_rows.push(t.op);
                    coulomb_rows.push(img.op);
                }
                let hr = op_rank(&higgs_rows, &point);
                let cr = op_rank(&coulomb_rows, &point);
                rep.push(
                    "hom-rank",
                    format!("{} <- {}", a.compact(), b.compact()),
                    hr == Some(wl) && cr == Some(wl),
                    format!("higgs {hr:?} coulomb {cr:?}"),
                );
            }
        }
        Ok(rep)
    }

    /// Elements of W whose lift fixes ρ, i.e. wρ − ρ is integral.
    pub fn stabilizer_count(&self) -> Result<usize> {
        let g = &self.coulomb.gauge;
        let rho = &self.levi.rho;
        Ok(g.weyl_group()?
            .iter()
            .filter(|w| {
                let wr = w.g.act_point(rho);
                wr.iter().zip(rho).all(|(a, b)| (a - b).is_integer())
            })
            .count())
    }

    fn rank_point(&self) -> Vec<Q> {
        let n = self.rank();
        let mut p: Vec<Q> = (0..n).map(|j| q(3 + 2 * j as i64, 11 + 6 * j as i64)).collect();
        p.push(Q::one());
        p
    }
}

/// Rank over the function field, certified by evaluation at one point:
/// the evaluated rank is a lower bound and the row count an upper bound.
pub fn op_rank(ops: &[TwistedOp], point: &[Q]) -> Option<usize> {
    let mut support: Vec<GroupElt> = Vec::new();
    for op in ops {
        for g in op.support() {
            if !support.contains(&g) {
                support.push(g);
            }
        }
    }
    let mut m: Mat = Vec::new();
    for op in ops {
        let mut row = Vec::new();
        for g in &support {
            row.push(op.coefficient(g).eval(point)?);
        }
        m.push(row);
    }
    if support.is_empty() {
        return Some(0);
    }
    Some(mat_rank(&m))
}

/// The Levi of the quiver gauge datum at ρ = z against the gauge datum of
/// the expanded quiver, compared up to the coordinate relabeling.
pub fn quiver_round_trip(data: &QuiverData, eps_edge: &Q, eps_frame: &Q) -> Result<bool> {
    let g = quiver_gauge(data, eps_edge, eps_frame)?;
    let rho: Vec<Q> = data
        .z
        .iter()
        .flatten()
        .map(|c| {
            if c.is_rational() {
                Ok(c.rat.clone())
            } else {
                Err(Error::Input("round trip needs rational classes".into()))
            }
        })
        .collect::<Result<_>>()?;
    let levi = relevant_data(&g, &rho)?;
    let x = quiver_expand(data)?;
    let expanded = quiver_gauge(&expanded_as_data(&x, data), eps_edge, eps_frame)?;
    // coordinate (i, m) goes to the slot of vertex (i, [z_{i,m}]) in order
    let mut slot_start = Vec::new();
    let mut acc = 0;
    for &d in &x.v {
        slot_start.push(acc);
        acc += d;
    }
    let mut used = vec![0usize; x.vertices.len()];
    let mut perm = Vec::new();
    for (i, zs) in data.z.iter().enumerate() {
        for z in zs {
            let c = z.reduce();
            let k = x.vertices.iter().position(|(vi, vc)| *vi == i && *vc == c).expect("vertex exists");
            perm.push(slot_start[k] + used[k]);
            used[k] += 1;
        }
    }
    let relabel = |v: &[Q]| -> Vec<Q> {
        let mut out = vec![Q::zero(); v.len()];
        for (k, x) in v.iter().enumerate() {
            out[perm[k]] = x.clone();
        }
        out
    };
    let canon = |mut v: Vec<Vec<Q>>| {
        v.sort();
        v
    };
    let levi_w = canon(levi.gauge.weights.iter().map(|w| relabel(&w.linear)).collect());
    let exp_w = canon(expanded.weights.iter().map(|w| w.linear.clone()).collect());
    let levi_r = canon(levi.gauge.roots.iter().map(|r| relabel(&r.linear)).collect());
    let exp_r = canon(expanded.roots.iter().map(|r| r.linear.clone()).collect());
    Ok(levi_w == exp_w && levi_r == exp_r && levi.weyl_order() == expanded.weyl_order())
}

pub fn rho_from_ints(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| Q::from_integer(x.into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coulomb::gl2_base_point;
    use crate::presets;
    use crate::rational::qi;

    #[test]
    fn relevance() {
        let g = presets::gl2_running();
        let l = relevant_data(&g, &[qi(0), qi(0)]).unwrap();
        assert_eq!(l.relevant_weights, vec![0, 1, 2, 3]);
        assert_eq!(l.relevant_roots, vec![0]);
        let l = relevant_data(&g, &[q(1, 2), q(1, 3)]).unwrap();
        assert!(l.relevant_weights.is_empty() && l.relevant_roots.is_empty());
        let r1 = presets::rank1_dmodule(q(1, 2));
        assert!(relevant_data(&r1, &[qi(0)]).unwrap().relevant_weights.is_empty());
    }

    #[test]
    fn phi0_example() {
        let g = presets::gl2_running();
        let c = Coulomb::new(&g);
        let eta = gl2_base_point();
        let up = vec![&eta[0] + qi(1), eta[1].clone()];
        let p = phi0(&c, &up, &eta, &[qi(0), qi(0)]).unwrap();
        let want = &g.gamma(0) - &g.h().scale(&qi(2));
        assert_eq!(p, want);
        assert!(phi0(&c, &eta, &eta, &[qi(0), qi(0)]).unwrap().is_one());
        let irrelevant = [q(1, 2), q(1, 3)];
        assert_eq!(phi0(&c, &up, &eta, &irrelevant).unwrap(), c.phi(&up, &eta).unwrap());
    }

    #[test]
    fn bridge_at_zero() {
        let g = presets::gl2_running();
        let b = Bridge::new(&g, &[qi(0), qi(0)]).unwrap();
        let rep = b.verify(7, 20).unwrap();
        assert!(rep.all_passed(), "{}", rep.to_text());
        assert_eq!(rep.count("factorization"), 20);
    }

    #[test]
    fn pure_gauge() {
        let g = presets::gl2_running();
        let b = Bridge::new(&g, &[q(1, 2), q(1, 3)]).unwrap();
        let rep = b.verify(1, 3).unwrap();
        assert!(rep.all_passed(), "{}", rep.to_text());
        assert_eq!(b.levi.weyl_order(), 1);
    }

    #[test]
    fn shifted_levels() {
        let g = presets::gl2_running();
        // root relevant at level 1, every weight relevant
        let b = Bridge::new(&g, &[qi(1), qi(0)]).unwrap();
        let rep = b.verify(3, 6).unwrap();
        assert!(rep.all_passed(), "{}", rep.to_text());
        // root relevant, no relevant weights
        let b = Bridge::new(&g, &[q(1, 2), q(1, 2)]).unwrap();
        assert_eq!(b.levi.weyl_order(), 2);
        let rep = b.verify(3, 2).unwrap();
        assert!(rep.all_passed(), "{}", rep.to_text());
    }

    #[test]
    fn quiver_levi_round_trip() {
        use crate::quiver::{jordan, ClassNum};
        let e = q(-1, 2);
        assert!(quiver_round_trip(&presets::jordan_k13_quiver(), &e, &e).unwrap());
        assert!(quiver_round_trip(&presets::klr_a2_quiver(), &e, &e).unwrap());
        // pairwise non-congruent classes: no edges survive
        let z = vec![ClassNum::rational(q(1, 5)), ClassNum::rational(q(2, 7)), ClassNum::rational(q(5, 11))];
        let data = jordan(3, ClassNum::rational(q(1, 2)), z, ClassNum::rational(q(1, 5)));
        assert!(quiver_round_trip(&data, &e, &e).unwrap());
        let x = quiver_expand(&data).unwrap();
        assert!(x.edges.is_empty());
        assert_eq!(x.v, vec![1, 1, 1]);
    }
}
