//! The extended BFN category through its presentation: Φ-products over the
//! unrolled arrangement, generators as operators twisted by the extended
//! affine Weyl group, relation instances over a roster, and normal forms.

use crate::arrangement::{interior_point, AffineForm, ChamberSpec, Cmp};
use crate::gallery::{minimal_gallery, HypId, Hyperplane};
use crate::gauge::GaugeDatum;
use crate::group::GroupElt;
use crate::morphism::Morphism;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::rational::{dot, floor_q, q, Q};
use crate::report::Report;
use crate::twisted::{demazure_poly, TwistedOp};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type CoulombMorphism = Morphism<Vec<Q>>;

/// Levels n with lo < n + c < hi, for generic endpoints.
fn levels_between(lo: &Q, hi: &Q, c: &Q) -> Vec<i64> {
    if lo >= hi {
        return Vec::new();
    }
    let first = floor_q(&(lo - c)) + BigInt::one();
    let last = floor_q(&(hi - c));
    let mut out = Vec::new();
    let mut n = first;
    while n <= last {
        out.push(n.to_i64().expect("levels are small"));
        n += 1;
    }
    out
}

/// The affine root α − n·h as (linear part, level).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineRoot {
    pub linear: Vec<Q>,
    pub coroot: Vec<Q>,
    pub level: Q,
}

impl AffineRoot {
    pub fn reflection(&self) -> GroupElt {
        GroupElt::reflection(&self.linear, &self.coroot, &self.level)
    }

    pub fn demazure(&self) -> TwistedOp {
        TwistedOp::demazure(&self.linear, &self.coroot, &self.level)
    }

    pub fn poly(&self) -> Poly {
        Poly::affine(self.linear.len() + 1, &self.linear, &-self.level.clone(), &Q::zero())
    }

    /// w·(α − n h), as an affine root again.
    pub fn transform(&self, w: &GroupElt) -> AffineRoot {
        let linear = w.act_covector(&self.linear);
        let coroot = w.act_vector(&self.coroot);
        // (α∘w^{-1})(x) = α(A^{-1}(x − a)) so the level shifts by α(A^{-1}a)
        let shift = dot(&self.linear, &w.inverse().act_vector(&w.trans));
        AffineRoot { linear, coroot, level: &self.level + shift }
    }

    pub fn apply_demazure(&self, f: &Poly) -> Poly {
        let op = self.demazure();
        op.apply(f)
            .as_poly()
            .cloned()
            .unwrap_or_else(|| panic!("affine Demazure of a polynomial is a polynomial"))
    }
}

pub struct Coulomb {
    pub gauge: GaugeDatum,
}

impl Coulomb {
    pub fn new(gauge: &GaugeDatum) -> Self {
        Coulomb { gauge: gauge.clone() }
    }

    fn rank(&self) -> usize {
        self.gauge.rank
    }

    fn nvars(&self) -> usize {
        self.gauge.nvars()
    }

    /// Generic: no unrolled matter or Coxeter hyperplane through η.
    pub fn check_generic(&self, eta: &[Q]) -> Result<()> {
        if eta.len() != self.rank() {
            return Err(Error::Input(format!("point has length {}, expected {}", eta.len(), self.rank())));
        }
        for (i, w) in self.gauge.weights.iter().enumerate() {
            if (self.gauge.coulomb_eval(i, eta) - &w.epsilon).is_integer() {
                return Err(Error::Domain(format!("point lies on an unrolled hyperplane of weight {}", i + 1)));
            }
        }
        for a in 0..self.gauge.roots.len() {
            if self.gauge.root_eval(a, eta).is_integer() {
                return Err(Error::Domain(format!("point lies on an unrolled root hyperplane of root {}", a + 1)));
            }
        }
        Ok(())
    }

    /// Pairs (i, n) with φ_i(η) > n + ε_i > φ_i(η').
    pub fn crossing_set(&self, eta: &[Q], eta2: &[Q]) -> Result<Vec<(usize, i64)>> {
        self.check_generic(eta)?;
        self.check_generic(eta2)?;
        let mut out = Vec::new();
        for (i, w) in self.gauge.weights.iter().enumerate() {
            let hi = self.gauge.coulomb_eval(i, eta);
            let lo = self.gauge.coulomb_eval(i, eta2);
            for n in levels_between(&lo, &hi, &w.epsilon) {
                out.push((i, n));
            }
        }
        Ok(out)
    }

    fn factor(&self, i: usize, n: i64) -> Poly {
        let w = &self.gauge.weights[i];
        Poly::affine(self.nvars(), &w.linear, &(&w.flavor - Q::from_integer(n.into())), &Q::zero())
    }

    pub fn phi(&self, eta: &[Q], eta2: &[Q]) -> Result<Poly> {
        let mut p = Poly::one(self.nvars());
        for (i, n) in self.crossing_set(eta, eta2)? {
            p = &p * &self.factor(i, n);
        }
        Ok(p)
    }

    /// Hyperplanes a path η → η' → η'' crosses twice.
    pub fn triple_set(&self, a: &[Q], b: &[Q], c: &[Q]) -> Result<Vec<(usize, i64)>> {
        for x in [a, b, c] {
            self.check_generic(x)?;
        }
        let mut out = Vec::new();
        for (i, w) in self.gauge.weights.iter().enumerate() {
            let (va, vb, vc) = (
                self.gauge.coulomb_eval(i, a),
                self.gauge.coulomb_eval(i, b),
                self.gauge.coulomb_eval(i, c),
            );
            // levels strictly below both outer values and above the middle one, or the reverse
            let outer_min = if va < vc { va.clone() } else { vc.clone() };
            let outer_max = if va > vc { va } else { vc };
            for n in levels_between(&vb, &outer_min, &w.epsilon) {
                out.push((i, n));
            }
            for n in levels_between(&outer_max, &vb, &w.epsilon) {
                out.push((i, n));
            }
        }
        Ok(out)
    }

    pub fn phi_triple(&self, a: &[Q], b: &[Q], c: &[Q]) -> Result<Poly> {
        let mut p = Poly::one(self.nvars());
        for (i, n) in self.triple_set(a, b, c)? {
            p = &p * &self.factor(i, n);
        }
        Ok(p)
    }

    pub fn identity(&self, eta: &[Q]) -> Result<CoulombMorphism> {
        self.check_generic(eta)?;
        Ok(Morphism::new(eta.to_vec(), eta.to_vec(), TwistedOp::identity(self.rank())))
    }

    /// y_w : η → w·η.
    pub fn y(&self, w: &GroupElt, eta: &[Q]) -> Result<CoulombMorphism> {
        self.check_generic(eta)?;
        if w.rank() != self.rank() {
            return Err(Error::Input("group element has the wrong rank".into()));
        }
        let target = w.act_point(eta);
        self.check_generic(&target)?;
        Ok(Morphism::new(target, eta.to_vec(), TwistedOp::group(w.clone())))
    }

    pub fn translation(&self, zeta: &[i64]) -> GroupElt {
        GroupElt::translation(zeta.iter().map(|&z| Q::from_integer(z.into())).collect())
    }

    /// r(target, source), acting by Φ(target, source).
    pub fn r(&self, target: &[Q], source: &[Q]) -> Result<CoulombMorphism> {
        let p = self.phi(target, source)?;
        Ok(Morphism::new(target.to_vec(), source.to_vec(), TwistedOp::poly(self.rank(), p)))
    }

    pub fn mu(&self, p: &Poly, eta: &[Q]) -> Result<CoulombMorphism> {
        self.check_generic(eta)?;
        if p.nvars() != self.nvars() {
            return Err(Error::Input("polynomial has the wrong number of variables".into()));
        }
        Ok(Morphism::new(eta.to_vec(), eta.to_vec(), TwistedOp::poly(self.rank(), p.clone())))
    }

    /// Every unrolled hyperplane separating x and y.
    pub fn separating(&self, x: &[Q], y: &[Q]) -> Vec<Hyperplane> {
        let g = &self.gauge;
        let mut out = Vec::new();
        for (i, w) in g.weights.iter().enumerate() {
            let (a, b) = (g.coulomb_eval(i, x), g.coulomb_eval(i, y));
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            for n in levels_between(&lo, &hi, &w.epsilon) {
                out.push(Hyperplane {
                    id: HypId::Matter { weight: i, level: n },
                    form: AffineForm::new(w.linear.clone(), -(&w.epsilon + Q::from_integer(n.into()))),
                });
            }
        }
        for (a, r) in g.roots.iter().enumerate() {
            let (u, v) = (g.root_eval(a, x), g.root_eval(a, y));
            let (lo, hi) = if u < v { (u, v) } else { (v, u) };
            for n in levels_between(&lo, &hi, &Q::zero()) {
                out.push(Hyperplane {
                    id: HypId::Coxeter { root: a, level: n },
                    form: AffineForm::new(r.linear.clone(), -Q::from_integer(n.into())),
                });
            }
        }
        out
    }

    /// The single Coxeter wall between adjacent points, labeled by the positive root.
    pub fn wall_between(&self, from: &[Q], to: &[Q]) -> Result<AffineRoot> {
        self.check_generic(from)?;
        self.check_generic(to)?;
        let sep = self.separating(from, to);
        match sep.as_slice() {
            [Hyperplane { id: HypId::Coxeter { root, level }, .. }] => {
                let r = &self.gauge.roots[*root];
                Ok(AffineRoot { linear: r.linear.clone(), coroot: r.coroot.clone(), level: Q::from_integer((*level).into()) })
            }
            _ => Err(Error::Domain(
                "points are not adjacent across a single unrolled root hyperplane".into(),
            )),
        }
    }

    /// u_α : from → to across the wall α = n, labeled by the positive root.
    pub fn u(&self, from: &[Q], to: &[Q]) -> Result<CoulombMorphism> {
        let a = self.wall_between(from, to)?;
        Ok(Morphism::new(to.to_vec(), from.to_vec(), a.demazure()))
    }

    /// u with an explicit (possibly negative) affine-root label.
    pub fn u_labeled(&self, label: &AffineRoot, from: &[Q], to: &[Q]) -> Result<CoulombMorphism> {
        let a = self.wall_between(from, to)?;
        if crate::gauge::proportional(&a.linear, &label.linear).is_none()
            || dot(&label.linear, from) - &label.level == Q::zero()
            || (dot(&label.linear, from) - &label.level).is_positive() == (dot(&label.linear, to) - &label.level).is_positive()
        {
            return Err(Error::Domain("label does not describe the wall between the points".into()));
        }
        Ok(Morphism::new(to.to_vec(), from.to_vec(), label.demazure()))
    }

    /// r-segments along a minimal gallery with u inserted at each Coxeter crossing.
    pub fn tilde_r_chain(&self, target: &[Q], source: &[Q]) -> Result<Vec<CoulombMorphism>> {
        self.check_generic(target)?;
        self.check_generic(source)?;
        let hyps = self.separating(source, target);
        let gal = minimal_gallery(source, target, &hyps)?;
        let pts = gal.chamber_points();
        let mut chain = Vec::new();
        let mut cur = source.to_vec();
        for (k, (id, _)) in gal.crossings.iter().enumerate() {
            if let HypId::Coxeter { .. } = id {
                let before = pts[k].clone();
                let after = pts[k + 1].clone();
                chain.push(self.r(&before, &cur)?);
                chain.push(self.u(&before, &after)?);
                cur = after;
            }
        }
        chain.push(self.r(target, &cur)?);
        chain.reverse();
        Ok(chain)
    }

    pub fn tilde_r(&self, target: &[Q], source: &[Q]) -> Result<CoulombMorphism> {
        crate::morphism::compose_all(&self.tilde_r_chain(target, source)?)
    }

    /// Number of unrolled root hyperplanes separating x and y.
    pub fn coxeter_distance(&self, x: &[Q], y: &[Q]) -> usize {
        self.separating(x, y)
            .iter()
            .filter(|h| matches!(h.id, HypId::Coxeter { .. }))
            .count()
    }

    /// m = Σ_w c_w · tilde_r(η', wη) · y_w with polynomial c_w, by
    /// eliminating the component farthest from η' first.
    pub fn normal_form(&self, m: &CoulombMorphism) -> Result<Vec<(GroupElt, Poly)>> {
        let (eta, etap) = (&m.source, &m.target);
        let mut residual = m.op.clone();
        let mut out: Vec<(GroupElt, Poly)> = Vec::new();
        for _ in 0..256 {
            if residual.is_zero() {
                out.sort_by(|a, b| a.0.cmp(&b.0));
                return Ok(out);
            }
            let g = residual
                .support()
                .into_iter()
                .max_by(|a, b| {
                    let da = self.coxeter_distance(&a.act_point(eta), etap);
                    let db = self.coxeter_distance(&b.act_point(eta), etap);
                    da.cmp(&db).then(b.cmp(a))
                })
                .expect("nonzero residual");
            let geta = g.act_point(eta);
            let basis = self.tilde_r(etap, &geta)?.then_after(&self.y(&g, eta)?)?;
            let lead = basis.op.coefficient(&g);
            let inv = lead
                .inverse()
                .ok_or_else(|| Error::Invariant("basis element has no leading term".into()))?;
            let c = &residual.coefficient(&g) * &inv;
            let cp = c
                .as_poly()
                .cloned()
                .ok_or_else(|| Error::Invariant(format!("coefficient at {} is not a polynomial", self.gauge.name_of(&g))))?;
            residual = &residual - &(&TwistedOp::poly(self.rank(), cp.clone()) * &basis.op);
            out.push((g, cp));
        }
        Err(Error::Invariant("normal form did not terminate".into()))
    }

    /// Generic centers of the unrolled cells meeting the open box (−r, r)^n.
    pub fn roster(&self, radius: &Q) -> Result<Vec<Vec<Q>>> {
        let g = &self.gauge;
        let n = self.rank();
        let mut forms: Vec<(Vec<Q>, Q)> = Vec::new();
        for w in &g.weights {
            forms.push((w.linear.clone(), w.epsilon.clone()));
        }
        for r in &g.roots {
            forms.push((r.linear.clone(), Q::zero()));
        }
        let mut ranges: Vec<Vec<i64>> = Vec::new();
        for (lin, c) in &forms {
            let spread: Q = lin.iter().map(|x| x.abs()).sum::<Q>() * radius;
            let lo = floor_q(&(-&spread - c)).to_i64().unwrap();
            let hi = floor_q(&(&spread - c)).to_i64().unwrap();
            ranges.push((lo..=hi).collect());
        }
        let mut combos: Vec<Vec<i64>> = vec![Vec::new()];
        for r in &ranges {
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    r.iter().map(move |&v| {
                        let mut c = c.clone();
                        c.push(v);
                        c
                    })
                })
                .collect();
            if combos.len() > 100_000 {
                return Err(Error::Resource("roster enumeration exceeds 100000 candidate cells".into()));
            }
        }
        let mut out = Vec::new();
        for combo in combos {
            let mut spec = ChamberSpec::new(n);
            for ((lin, c), &a) in forms.iter().zip(&combo) {
                let lo = AffineForm::new(lin.clone(), -(c + Q::from_integer(a.into())));
                let mut hi = lo.clone();
                hi.constant -= Q::one();
                spec.push(lo, Cmp::Gt);
                spec.push(hi, Cmp::Lt);
            }
            for j in 0..n {
                let mut e = vec![Q::zero(); n];
                e[j] = Q::one();
                spec.push(AffineForm::new(e.clone(), radius.clone()), Cmp::Gt);
                spec.push(AffineForm::new(e, -radius.clone()), Cmp::Lt);
            }
            if let Some(p) = interior_point(&spec)? {
                self.check_generic(&p)?;
                out.push(p);
            }
        }
        Ok(out)
    }

    /// A small generating set of the extended affine Weyl group: simple
    /// reflections, affine reflections at level 1 and unit translations.
    pub fn weyl_generators(&self) -> Vec<(String, GroupElt)> {
        let g = &self.gauge;
        let mut out = Vec::new();
        for a in g.simple_roots() {
            out.push((format!("s{}", a + 1), g.reflection(a)));
            out.push((format!("s{},1", a + 1), g.affine_reflection(a, &Q::one())));
        }
        for j in 0..self.rank() {
            let mut z = vec![0; self.rank()];
            z[j] = 1;
            out.push((format!("t+e{}", j + 1), self.translation(&z)));
            z[j] = -1;
            out.push((format!("t-e{}", j + 1), self.translation(&z)));
        }
        out
    }

    fn label(p: &[Q]) -> String {
        format!("({})", p.iter().map(crate::rational::fmt_q).collect::<Vec<_>>().join(","))
    }

    /// Adjacent roster pairs (η, s·η) across one Coxeter wall.
    pub fn adjacent_pairs(&self, roster: &[Vec<Q>]) -> Vec<(Vec<Q>, Vec<Q>, AffineRoot)> {
        let mut out = Vec::new();
        for eta in roster {
            for (a, r) in self.gauge.roots.iter().enumerate() {
                let v = self.gauge.root_eval(a, eta);
                for level in [floor_q(&v), floor_q(&v) + BigInt::one()] {
                    let ar = AffineRoot { linear: r.linear.clone(), coroot: r.coroot.clone(), level: Q::from_integer(level) };
                    let mirror = ar.reflection().act_point(eta);
                    if self.check_generic(&mirror).is_ok() && self.wall_between(eta, &mirror).is_ok() {
                        out.push((eta.clone(), mirror, ar));
                    }
                }
            }
        }
        out
    }

    /// Every relation schema of the presentation, instantiated over the roster.
    pub fn verify_relations(&self, roster: &[Vec<Q>], probes: &[Poly]) -> Result<Report> {
        let mut rep = Report::new("Coulomb relations");
        let gens = self.weyl_generators();
        let n = self.rank();
        let check = |rep: &mut Report, schema: &str, label: String, lhs: Vec<CoulombMorphism>, rhs: Vec<CoulombMorphism>| {
            let res = compare(&lhs, &rhs, probes);
            let homog = terms_homogeneous(&lhs, &rhs);
            let detail = match (&res, homog) {
                (Ok(()), true) => String::new(),
                (Ok(()), false) => "not homogeneous".to_string(),
                (Err(e), _) => e.clone(),
            };
            rep.push(schema, label, res.is_ok() && homog, detail);
        };

        for eta in roster {
            for (na, a) in &gens {
                for (nb, b) in &gens {
                    let lhs = self.y(a, &b.act_point(eta))?.then_after(&self.y(b, eta)?)?;
                    let rhs = self.y(&a.compose(b), eta)?;
                    check(&mut rep, "coweight", format!("{na}*{nb} at {}", Self::label(eta)), vec![lhs], vec![rhs]);
                }
                for j in 0..n {
                    let mu = self.gauge.gamma(j);
                    let weta = a.act_point(eta);
                    let lhs = self
                        .y(a, eta)?
                        .then_after(&self.mu(&mu, eta)?)?
                        .then_after(&self.y(&a.inverse(), &weta)?)?;
                    let rhs = self.mu(&a.act_poly(&mu), &weta)?;
                    check(&mut rep, "weyl-mu", format!("{na} g{} at {}", j + 1, Self::label(eta)), vec![lhs], vec![rhs]);
                }
            }
        }
        for eta in roster {
            for etap in roster {
                for (na, a) in &gens {
                    let (we, wep) = (a.act_point(eta), a.act_point(etap));
                    let lhs = self
                        .y(a, etap)?
                        .then_after(&self.r(etap, eta)?)?
                        .then_after(&self.y(&a.inverse(), &we)?)?;
                    let rhs = self.r(&wep, &we)?;
                    check(
                        &mut rep,
                        "conjugate",
                        format!("{na} {}<-{}", Self::label(etap), Self::label(eta)),
                        vec![lhs],
                        vec![rhs],
                    );
                }
            }
        }
        for a in roster {
            for b in roster {
                for c in roster {
                    let lhs = self.r(c, b)?.then_after(&self.r(b, a)?)?;
                    let rhs = self.mu(&self.phi_triple(c, b, a)?, c)?.then_after(&self.r(c, a)?)?;
                    check(
                        &mut rep,
                        "wall-cross",
                        format!("{}<-{}<-{}", Self::label(c), Self::label(b), Self::label(a)),
                        vec![lhs],
                        vec![rhs],
                    );
                }
            }
        }
        let pairs = self.adjacent_pairs(roster);
        for (x, y, ar) in &pairs {
            let lab = format!("{}->{}", Self::label(x), Self::label(y));
            let u1 = self.u(x, y)?;
            let u2 = self.u(y, x)?;
            let sq = u2.then_after(&u1)?;
            let zero = Morphism::new(x.clone(), x.clone(), TwistedOp::zero(n));
            check(&mut rep, "psi-squared", lab.clone(), vec![sq], vec![zero]);
            for j in 0..n {
                let mu = self.gauge.gamma(j);
                let s = ar.reflection();
                let lhs1 = u1.then_after(&self.mu(&mu, x)?)?;
                let mut lhs2 = self.mu(&s.act_poly(&mu), y)?.then_after(&u1)?;
                lhs2.op = lhs2.op.scale(&-Q::one());
                let d = ar.apply_demazure(&mu);
                let rhs = self.mu(&d, y)?.then_after(&self.r(y, x)?)?;
                check(&mut rep, "psi-mu", format!("{lab} g{}", j + 1), vec![lhs1, lhs2], vec![rhs]);
            }
            for (na, w) in &gens {
                let (wx, wy) = (w.act_point(x), w.act_point(y));
                let lhs = self.y(w, y)?.then_after(&u1)?.then_after(&self.y(&w.inverse(), &wx)?)?;
                let rhs = self.u_labeled(&ar.transform(w), &wx, &wy)?;
                check(&mut rep, "psi-conjugate", format!("{na} {lab}"), vec![lhs], vec![rhs]);
            }
            // r(η±, η∓) = s_α − α·u_α
            let lhs = self.r(y, x)?;
            let s = self.y(&ar.reflection(), x)?;
            let mut t = self.mu(&ar.poly(), y)?.then_after(&u1)?;
            t.op = t.op.scale(&-Q::one());
            if s.target == *y {
                check(&mut rep, "reflection-split", lab.clone(), vec![lhs], vec![s, t]);
            }
        }
        self.braid_checks(&mut rep, probes)?;
        self.triple_checks(&mut rep, roster, probes)?;
        Ok(rep)
    }

    /// Braid relations among the Demazure operators of each pair of simple roots.
    fn braid_checks(&self, rep: &mut Report, probes: &[Poly]) -> Result<()> {
        let g = &self.gauge;
        let simple = g.simple_roots();
        for (x, &a) in simple.iter().enumerate() {
            for &b in simple.iter().skip(x + 1) {
                let pairing = dot(&g.roots[a].linear, &g.roots[b].coroot) * dot(&g.roots[b].linear, &g.roots[a].coroot);
                let m = crate::steinberg::coxeter_m(&pairing)
                    .ok_or_else(|| Error::Input("no finite braid length".into()))?;
                let word = |p: usize, q: usize| -> TwistedOp {
                    // ∂_p ∂_{s_p q} ∂_{s_p s_q p} ⋯ (m factors)
                    let mut op = TwistedOp::identity(self.rank());
                    let mut w = GroupElt::identity(self.rank());
                    for k in 0..m {
                        let idx = if k % 2 == 0 { p } else { q };
                        let r = &g.roots[idx];
                        let ar = AffineRoot { linear: r.linear.clone(), coroot: r.coroot.clone(), level: Q::zero() }.transform(&w);
                        op = &op * &ar.demazure();
                        w = w.compose(&g.reflection(idx));
                    }
                    op
                };
                let l = word(a, b);
                let r = word(b, a);
                let ok = l == r && probes.iter().all(|p| l.apply(p) == r.apply(p));
                rep.push("braid", format!("alpha{} alpha{} m={m}", a + 1, b + 1), ok, if ok { "" } else { "operators differ" });
            }
        }
        Ok(())
    }

    /// The relation with the Φ∂Φ correction: two crossing places of one
    /// Coxeter wall on minimal paths from η to s_α η.
    fn triple_checks(&self, rep: &mut Report, roster: &[Vec<Q>], probes: &[Poly]) -> Result<()> {
        let pairs = self.adjacent_pairs(roster);
        let walls: Vec<AffineRoot> = {
            let mut w: Vec<AffineRoot> = Vec::new();
            for (_, _, a) in &pairs {
                if !w.contains(a) {
                    w.push(a.clone());
                }
            }
            w
        };
        for ar in &walls {
            let s = ar.reflection();
            let crossings: Vec<&(Vec<Q>, Vec<Q>, AffineRoot)> = pairs.iter().filter(|p| &p.2 == ar).collect();
            for eta in roster {
                let side = (dot(&ar.linear, eta) - &ar.level).is_positive();
                let seta = s.act_point(eta);
                let hyps = self.separating(eta, &seta);
                // crossing places (η'_∓ on η's side) lying on minimal paths
                let places: Vec<(&Vec<Q>, &Vec<Q>)> = crossings
                    .iter()
                    .filter(|(x, _, _)| (dot(&ar.linear, x) - &ar.level).is_positive() == side)
                    .filter(|(x, _, _)| on_minimal_path(&self.separating_all(x, eta, &seta), x, eta, &seta, &hyps))
                    .map(|(x, y, _)| (x, y))
                    .collect();
                for (k, (xm, xp)) in places.iter().enumerate() {
                    for (ym, yp) in places.iter().skip(k + 1) {
                        let lhs1 = self.r(&seta, xp)?.then_after(&self.u(xm, xp)?)?.then_after(&self.r(xm, eta)?)?;
                        let mut lhs2 =
                            self.r(&seta, yp)?.then_after(&self.u(ym, yp)?)?.then_after(&self.r(ym, eta)?)?;
                        lhs2.op = lhs2.op.scale(&-Q::one());
                        let c1 = &self.phi(&seta, xp)? * &ar.apply_demazure(&self.phi(xm, eta)?);
                        let c2 = &self.phi(&seta, yp)? * &ar.apply_demazure(&self.phi(ym, eta)?);
                        let rhs = self.mu(&(&c1 - &c2), &seta)?.then_after(&self.y(&s, eta)?)?;
                        rep.push(
                            "triple",
                            format!("{} via {} / {}", Self::label(eta), Self::label(xm), Self::label(ym)),
                            {
                                let ok = compare(&[lhs1, lhs2], &[rhs], probes);
                                ok.is_ok()
                            },
                            "",
                        );
                    }
                }
            }
        }
        Ok(())
    }

    fn separating_all(&self, x: &[Q], a: &[Q], b: &[Q]) -> Vec<Hyperplane> {
        let mut h = self.separating(x, a);
        for k in self.separating(x, b) {
            if !h.iter().any(|e| e.id == k.id) {
                h.push(k);
            }
        }
        h
    }

    /// The GL(2)-style abelian anchor: w_j = y_{−e_j} r(η+e_j, η) and
    /// z_j = y_{e_j} r(η−e_j, η) in Hom(η, η).
    pub fn anchor_generators(&self, eta: &[Q], j: usize) -> Result<(CoulombMorphism, CoulombMorphism)> {
        let n = self.rank();
        let mut e = vec![0i64; n];
        e[j] = 1;
        let plus: Vec<Q> = eta.iter().enumerate().map(|(k, x)| if k == j { x + Q::one() } else { x.clone() }).collect();
        let minus: Vec<Q> = eta.iter().enumerate().map(|(k, x)| if k == j { x - Q::one() } else { x.clone() }).collect();
        let w = self.y(&self.translation(&e.iter().map(|x| -x).collect::<Vec<_>>()), &plus)?.then_after(&self.r(&plus, eta)?)?;
        let z = self.y(&self.translation(&e), &minus)?.then_after(&self.r(&minus, eta)?)?;
        Ok((w, z))
    }
}

fn on_minimal_path(extra: &[Hyperplane], x: &[Q], a: &[Q], b: &[Q], _: &[Hyperplane]) -> bool {
    // x lies on a minimal path from a to b iff no hyperplane separates x from both
    extra.iter().all(|h| {
        let sx = h.form.eval(x).is_positive();
        let sa = h.form.eval(a).is_positive();
        let sb = h.form.eval(b).is_positive();
        !(sx != sa && sx != sb)
    })
}

fn sum_ops(ms: &[CoulombMorphism]) -> Option<TwistedOp> {
    ms.iter().map(|m| m.op.clone()).reduce(|a, b| &a + &b)
}

fn compare(lhs: &[CoulombMorphism], rhs: &[CoulombMorphism], probes: &[Poly]) -> std::result::Result<(), String> {
    let ends = |ms: &[CoulombMorphism]| ms.first().map(|m| (m.source.clone(), m.target.clone()));
    for side in [lhs, rhs] {
        if let Some(e) = ends(side) {
            if side.iter().any(|m| (m.source.clone(), m.target.clone()) != e) {
                return Err("terms have different objects".into());
            }
        }
    }
    if let (Some(a), Some(b)) = (ends(lhs), ends(rhs)) {
        if a != b {
            return Err("sides have different objects".into());
        }
    }
    let l = sum_ops(lhs);
    let r = sum_ops(rhs);
    let (l, r) = match (l, r) {
        (Some(l), Some(r)) => (l, r),
        (Some(l), None) => (l.clone(), TwistedOp::zero(l.rank())),
        (None, Some(r)) => (TwistedOp::zero(r.rank()), r),
        (None, None) => return Ok(()),
    };
    if l != r {
        return Err("operators differ".into());
    }
    if probes.iter().any(|p| l.apply(p) != r.apply(p)) {
        return Err("probe polynomials differ".into());
    }
    Ok(())
}

/// Degree of a twisted operator with deg γ = deg h = 1, if homogeneous.
pub fn op_degree(op: &TwistedOp) -> Option<Option<i64>> {
    let mut deg: Option<i64> = None;
    for (_, f) in op.terms() {
        let d = ratfun_degree(f)?;
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return None,
            _ => {}
        }
    }
    Some(deg)
}

pub fn ratfun_degree(f: &RatFun) -> Option<i64> {
    if !f.numerator().is_homogeneous() || f.den_factors().iter().any(|p| !p.is_homogeneous()) {
        return None;
    }
    let num = f.numerator().degree()? as i64;
    let den: i64 = f.den_factors().iter().map(|p| p.degree().unwrap_or(0) as i64).sum();
    Some(num - den)
}

fn terms_homogeneous(lhs: &[CoulombMorphism], rhs: &[CoulombMorphism]) -> bool {
    let mut deg: Option<i64> = None;
    for m in lhs.iter().chain(rhs) {
        match op_degree(&m.op) {
            None => return false,
            Some(None) => {}
            Some(Some(d)) => match deg {
                None => deg = Some(d),
                Some(e) if e != d => return false,
                _ => {}
            },
        }
    }
    true
}

pub fn gl2_base_point() -> Vec<Q> {
    vec![q(1, 20), q(-1, 20)]
}

pub fn demazure_of(ar: &AffineRoot, f: &Poly) -> Poly {
    if ar.level.is_zero() {
        demazure_poly(&ar.linear, &ar.coroot, f)
    } else {
        ar.apply_demazure(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::rational::qi;

    #[test]
    fn gl2_anchor() {
        let g = presets::gl2_running();
        let c = Coulomb::new(&g);
        let eta = gl2_base_point();
        let (w1, z1) = c.anchor_generators(&eta, 0).unwrap();
        let g1 = g.gamma(0);
        let h = g.h();
        let zw = z1.then_after(&w1).unwrap();
        let wz = w1.then_after(&z1).unwrap();
        let two_h = h.scale(&qi(2));
        assert_eq!(zw.op, TwistedOp::poly(2, &g1 * &(&g1 - &two_h)));
        assert_eq!(wz.op, TwistedOp::poly(2, &(&g1 + &h) * &(&g1 - &h)));
        let (w2, z2) = c.anchor_generators(&eta, 1).unwrap();
        assert_eq!(z1.then_after(&w2).unwrap().op, w2.then_after(&z1).unwrap().op);
        assert_eq!(z2.then_after(&w1).unwrap().op, w1.then_after(&z2).unwrap().op);
    }

    #[test]
    fn phi_examples() {
        let g = presets::gl2_running();
        let c = Coulomb::new(&g);
        let eta = gl2_base_point();
        assert!(c.phi(&eta, &eta).unwrap().is_one());
        let up: Vec<Q> = vec![&eta[0] + qi(1), eta[1].clone()];
        let dn: Vec<Q> = vec![&eta[0] - qi(1), eta[1].clone()];
        let h = g.h();
        let g1 = g.gamma(0);
        assert_eq!(c.phi_triple(&eta, &up, &eta).unwrap(), &g1 * &(&g1 - &h.scale(&qi(2))));
        let t = c.phi_triple(&eta, &dn, &eta).unwrap();
        // shifted by the translation back to η this becomes (γ1+h)(γ1−h)
        assert_eq!(t.degree(), Some(2));
        assert!(c.check_generic(&[qi(0), qi(0)]).is_err());
    }

    #[test]
    fn rank_one_products() {
        for a in [-2, 0, 1, 3] {
            let g = presets::rank1_dmodule(qi(a));
            let c = Coulomb::new(&g);
            let (rp, rm) = c.anchor_generators(&[qi(0)], 0).unwrap();
            let at1 = |m: &CoulombMorphism| m.op.specialize_h(&qi(1));
            let t = Poly::var(2, 0);
            let mm = at1(&rm.then_after(&rp).unwrap());
            let pp = at1(&rp.then_after(&rm).unwrap());
            assert_eq!(mm, TwistedOp::poly(1, &t - &Poly::constant(2, qi(a + 1))));
            assert_eq!(pp, TwistedOp::poly(1, &t - &Poly::constant(2, qi(a))));
        }
    }

    #[test]
    fn normal_form_across_wall() {
        let g = presets::gl2_running();
        let c = Coulomb::new(&g);
        let x = vec![q(1, 20), q(-1, 20)];
        let y = vec![q(-1, 20), q(1, 20)];
        let r = c.r(&y, &x).unwrap();
        let nf = c.normal_form(&r).unwrap();
        assert_eq!(nf.len(), 2);
        let s = g.reflection(0);
        let id = GroupElt::identity(2);
        let get = |w: &GroupElt| nf.iter().find(|(v, _)| v == w).map(|(_, p)| p.clone()).unwrap();
        assert!(get(&s).is_one());
        assert_eq!(get(&id), g.root_poly(0).scale(&-qi(1)));
        assert!(c.tilde_r(&x, &x).unwrap().op.is_one());
    }

    #[test]
    fn abelian_basis() {
        let g = presets::hypertoric_c2();
        let c = Coulomb::new(&g);
        let eta = vec![q(1, 7), q(1, 11)];
        let zeta = c.translation(&[1, -1]);
        let target = vec![q(3, 7), q(-2, 11)];
        let shifted = zeta.inverse().act_point(&target);
        let m = c.y(&zeta, &shifted).unwrap().then_after(&c.r(&shifted, &eta).unwrap()).unwrap();
        let nf = c.normal_form(&m).unwrap();
        assert_eq!(nf.len(), 1);
        assert_eq!(nf[0].0, zeta);
        assert!(nf[0].1.is_one());
    }

    #[test]
    fn roster_and_relations() {
        let g = presets::gl2_running();
        let c = Coulomb::new(&g);
        let roster = c.roster(&q(1, 2)).unwrap();
        assert_eq!(roster.len(), 12);
        let small: Vec<Vec<Q>> = roster.iter().take(4).cloned().collect();
        let rep = c.verify_relations(&small, &[]).unwrap();
        assert!(rep.all_passed(), "{}", rep.to_text());
    }
}
