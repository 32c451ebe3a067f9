//! The Higgs-side category A_{I'}: generators acting on the polynomial
//! representation, relation instances, tilde-wall elements and the basis.

use crate::arrangement::{
    chamber_feasible, chamber_spec, enumerate_sign_vectors, interior_point, permute_signs, AffineForm,
    ChamberKind, ChamberSpec, Cmp, Sign, SignVector, Variant,
};
use crate::gallery::{fold_gallery, higgs_hyperplanes, minimal_gallery, Folded};
use crate::gauge::{GaugeDatum, WeylElt};
use crate::group::GroupElt;
use crate::morphism::Morphism;
use crate::poly::Poly;
use crate::probe::probes;
use crate::ratfun::RatFun;
use crate::rational::Q;
use crate::report::Report;
use crate::twisted::{demazure_poly, TwistedOp};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type HiggsMorphism = Morphism<SignVector>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gen {
    /// wall(target, source)
    Wall(SignVector, SignVector),
    Psi(usize, SignVector),
    Mu(Poly, SignVector),
}

impl Gen {
    pub fn target(&self) -> &SignVector {
        match self {
            Gen::Wall(t, _) | Gen::Psi(_, t) | Gen::Mu(_, t) => t,
        }
    }

    pub fn source(&self) -> &SignVector {
        match self {
            Gen::Wall(_, s) | Gen::Psi(_, s) | Gen::Mu(_, s) => s,
        }
    }

    pub fn describe(&self, names: &[String]) -> String {
        match self {
            Gen::Wall(a, b) => format!("wall({},{})", a.compact(), b.compact()),
            Gen::Psi(r, s) => format!("psi{}({})", r + 1, s.compact()),
            Gen::Mu(p, s) => format!("[{}]({})", p.fmt_with(names), s.compact()),
        }
    }
}

/// coeff · g_1 g_2 ⋯ g_k, with g_k applied first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Q,
    pub gens: Vec<Gen>,
}

impl Term {
    pub fn word(gens: Vec<Gen>) -> Self {
        Term { coeff: Q::one(), gens }
    }

    pub fn neg(mut self) -> Self {
        self.coeff = -self.coeff;
        self
    }
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub schema: &'static str,
    pub label: String,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

pub const HIGGS_SCHEMAS: [&str; 9] =
    ["wall", "dot-commute", "psi-squared", "psi-mu", "coxeter", "triple1", "triple2", "triple3", "gdkd"];

/// Braid length from the pairing α^∨(β)·β^∨(α).
pub fn coxeter_m(pairing: &Q) -> Option<usize> {
    if !pairing.is_integer() {
        return None;
    }
    match i64::try_from(pairing.to_integer()).ok()? {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}

pub struct Steinberg {
    pub gauge: GaugeDatum,
    pub objects: Vec<SignVector>,
    centers: BTreeMap<SignVector, Vec<Q>>,
}

impl Steinberg {
    /// Objects are the sign vectors of I'.
    pub fn new(gauge: &GaugeDatum) -> Result<Self> {
        let objects = enumerate_sign_vectors(gauge, Variant::IPrime)?.signs().to_vec();
        Self::with_objects(gauge, objects)
    }

    pub fn with_objects(gauge: &GaugeDatum, objects: Vec<SignVector>) -> Result<Self> {
        let id = GroupElt::identity(gauge.rank);
        let mut centers = BTreeMap::new();
        for s in &objects {
            let spec = chamber_spec(gauge, s, ChamberKind::Epsilon, Some(&id))?;
            let c = interior_point(&spec)?
                .ok_or_else(|| Error::Domain(format!("{s} is not an object: its dominant chamber is empty")))?;
            centers.insert(s.clone(), c);
        }
        Ok(Steinberg { gauge: gauge.clone(), objects, centers })
    }

    fn rank(&self) -> usize {
        self.gauge.rank
    }

    fn nvars(&self) -> usize {
        self.gauge.nvars()
    }

    pub fn contains(&self, s: &SignVector) -> bool {
        self.centers.contains_key(s)
    }

    fn require(&self, s: &SignVector) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{s} is not a loaded object")))
        }
    }

    pub fn center(&self, s: &SignVector) -> Result<&Vec<Q>> {
        self.centers
            .get(s)
            .ok_or_else(|| Error::Domain(format!("{s} is not a loaded object")))
    }

    pub fn phi_pair(&self, s: &SignVector, t: &SignVector) -> Poly {
        phi_pair(&self.gauge, s, t)
    }

    pub fn phi_triple(&self, a: &SignVector, b: &SignVector, c: &SignVector) -> Poly {
        phi_triple(&self.gauge, a, b, c)
    }

    pub fn identity(&self, s: &SignVector) -> HiggsMorphism {
        Morphism::new(s.clone(), s.clone(), TwistedOp::identity(self.rank()))
    }

    pub fn wall(&self, target: &SignVector, source: &SignVector) -> Result<HiggsMorphism> {
        self.require(target)?;
        self.require(source)?;
        let op = TwistedOp::poly(self.rank(), self.phi_pair(target, source));
        Ok(Morphism::new(target.clone(), source.clone(), op))
    }

    pub fn psi_defined(&self, root: usize, s: &SignVector) -> Result<bool> {
        Ok(&permute_signs(&self.gauge, &self.gauge.reflection(root), s)? == s)
    }

    pub fn psi(&self, root: usize, s: &SignVector) -> Result<HiggsMorphism> {
        self.require(s)?;
        let r = self
            .gauge
            .roots
            .get(root)
            .ok_or_else(|| Error::Input(format!("no root with index {}", root + 1)))?;
        if !self.psi_defined(root, s)? {
            return Err(Error::Domain(format!(
                "psi{} is undefined at {s}: the reflection moves the chamber",
                root + 1
            )));
        }
        Ok(Morphism::new(s.clone(), s.clone(), TwistedOp::demazure(&r.linear, &r.coroot, &Q::zero())))
    }

    pub fn mu(&self, p: &Poly, s: &SignVector) -> Result<HiggsMorphism> {
        self.require(s)?;
        if p.nvars() != self.nvars() {
            return Err(Error::Input("polynomial has the wrong number of variables".into()));
        }
        Ok(Morphism::new(s.clone(), s.clone(), TwistedOp::poly(self.rank(), p.clone())))
    }

    pub fn generator(&self, g: &Gen) -> Result<HiggsMorphism> {
        match g {
            Gen::Wall(a, b) => self.wall(a, b),
            Gen::Psi(r, s) => self.psi(*r, s),
            Gen::Mu(p, s) => self.mu(p, s),
        }
    }

    /// deg μ = 2·(polynomial degree), deg ψ = −2, deg wall = number of sign flips.
    pub fn degree(&self, g: &Gen) -> Option<i64> {
        match g {
            Gen::Wall(a, b) => Some(a.differences(b) as i64),
            Gen::Psi(..) => Some(-2),
            Gen::Mu(p, _) => {
                if p.is_zero() {
                    None
                } else if p.is_homogeneous() {
                    Some(2 * p.degree().unwrap_or(0) as i64)
                } else {
                    None
                }
            }
        }
    }

    pub fn term_degree(&self, t: &Term) -> Option<i64> {
        t.gens.iter().map(|g| self.degree(g)).sum()
    }

    pub fn evaluate_word(&self, gens: &[Gen]) -> Result<HiggsMorphism> {
        let ms: Vec<HiggsMorphism> = gens.iter().map(|g| self.generator(g)).collect::<Result<_>>()?;
        crate::morphism::compose_all(&ms)
    }

    /// Sum of terms as an operator; `None` for the empty sum.
    pub fn evaluate(&self, terms: &[Term]) -> Result<Option<HiggsMorphism>> {
        let mut acc: Option<HiggsMorphism> = None;
        for t in terms {
            let mut m = self.evaluate_word(&t.gens)?;
            m.op = m.op.scale(&t.coeff);
            acc = Some(match acc {
                None => m,
                Some(a) => a.add(&m)?,
            });
        }
        Ok(acc)
    }

    /// Minimal path from C'_{σ',1} to C'_{wσ,w}, folded into the dominant chamber.
    pub fn fold_path(&self, s: &SignVector, sp: &SignVector, w: &GroupElt) -> Result<Folded> {
        self.require(s)?;
        let x = self.center(sp)?.clone();
        let ws = permute_signs(&self.gauge, w, s)?;
        let spec = chamber_spec(&self.gauge, &ws, ChamberKind::Epsilon, Some(w))?;
        let y = interior_point(&spec)?
            .ok_or_else(|| Error::Domain(format!("the chamber of {ws} in the Weyl chamber of w is empty")))?;
        let gal = minimal_gallery(&x, &y, &higgs_hyperplanes(&self.gauge))?;
        let folded = fold_gallery(&self.gauge, &gal)?.folded.expect("fold populates");
        if &folded.w != w {
            return Err(Error::Invariant("folded path does not end in the requested Weyl chamber".into()));
        }
        Ok(folded)
    }

    pub fn tilde_word(&self, s: &SignVector, sp: &SignVector, w: &GroupElt) -> Result<Vec<Gen>> {
        let f = self.fold_path(s, sp, w)?;
        let mut gens = Vec::new();
        let mut prev = s.clone();
        for (b, sk) in f.betas.iter().zip(&f.sigmas).rev() {
            gens.push(Gen::Wall(prev.clone(), sk.clone()));
            gens.push(Gen::Psi(*b, sk.clone()));
            prev = sk.clone();
        }
        gens.push(Gen::Wall(prev, sp.clone()));
        Ok(gens)
    }

    pub fn tilde_wall(&self, s: &SignVector, sp: &SignVector, w: &GroupElt) -> Result<HiggsMorphism> {
        self.evaluate_word(&self.tilde_word(s, sp, w)?)
    }

    fn face_spec(&self, s: &SignVector, on: &[usize], roots_on: &[usize]) -> Result<ChamberSpec> {
        let g = &self.gauge;
        let mut spec = ChamberSpec::new(g.rank);
        let full = chamber_spec(g, s, ChamberKind::Epsilon, None)?;
        for (i, (f, c)) in full.inequalities.iter().enumerate() {
            if on.contains(&i) {
                spec.push(f.clone(), Cmp::Ge);
                spec.push(f.clone(), Cmp::Le);
            } else {
                spec.push(f.clone(), *c);
            }
        }
        for (a, r) in g.roots.iter().enumerate() {
            let f = AffineForm::new(r.linear.clone(), Q::zero());
            if roots_on.contains(&a) {
                spec.push(f.clone(), Cmp::Ge);
                spec.push(f, Cmp::Le);
            } else {
                spec.push(f, Cmp::Gt);
            }
        }
        Ok(spec)
    }

    /// Weights whose hyperplane coincides with that of weight i.
    fn hyperplane_class(&self, i: usize) -> Vec<usize> {
        let w = &self.gauge.weights[i];
        (0..self.gauge.d())
            .filter(|&k| {
                let v = &self.gauge.weights[k];
                v.linear == w.linear && v.flavor == w.flavor && v.epsilon == w.epsilon
            })
            .collect()
    }

    fn classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.gauge.d() {
            let c = self.hyperplane_class(i);
            if c[0] == i {
                out.push(c);
            }
        }
        out
    }

    fn set_signs(s: &SignVector, idx: &[usize], sign: Sign) -> SignVector {
        let mut v = s.clone();
        for &i in idx {
            v.0[i] = sign;
        }
        v
    }

    /// Every relation instance of the presentation over the loaded objects.
    pub fn relations(&self) -> Result<Vec<Relation>> {
        let g = &self.gauge;
        let n = g.rank;
        let nv = self.nvars();
        let obj = &self.objects;
        let mut out = Vec::new();
        let lab = |v: &[&SignVector]| v.iter().map(|s| s.compact()).collect::<Vec<_>>().join(" ");

        for a in obj {
            for b in obj {
                for c in obj {
                    out.push(Relation {
                        schema: "wall",
                        label: lab(&[a, b, c]),
                        lhs: vec![Term::word(vec![Gen::Wall(a.clone(), b.clone()), Gen::Wall(b.clone(), c.clone())])],
                        rhs: vec![Term::word(vec![
                            Gen::Mu(self.phi_triple(a, b, c), a.clone()),
                            Gen::Wall(a.clone(), c.clone()),
                        ])],
                    });
                }
            }
        }
        for a in obj {
            for b in obj {
                for j in 0..n {
                    let mu = g.gamma(j);
                    out.push(Relation {
                        schema: "dot-commute",
                        label: format!("{} g{}", lab(&[a, b]), j + 1),
                        lhs: vec![Term::word(vec![Gen::Mu(mu.clone(), a.clone()), Gen::Wall(a.clone(), b.clone())])],
                        rhs: vec![Term::word(vec![Gen::Wall(a.clone(), b.clone()), Gen::Mu(mu, b.clone())])],
                    });
                }
            }
        }
        for r in 0..g.roots.len() {
            let refl = g.reflection(r);
            let root = &g.roots[r];
            for s in obj {
                if !self.psi_defined(r, s)? {
                    continue;
                }
                out.push(Relation {
                    schema: "psi-squared",
                    label: format!("alpha{} {}", r + 1, s.compact()),
                    lhs: vec![Term::word(vec![Gen::Psi(r, s.clone()), Gen::Psi(r, s.clone())])],
                    rhs: vec![],
                });
                for j in 0..n {
                    let mu = g.gamma(j);
                    let d = demazure_poly(&root.linear, &root.coroot, &mu);
                    let rhs = if d.is_zero() { vec![] } else { vec![Term::word(vec![Gen::Mu(d, s.clone())])] };
                    out.push(Relation {
                        schema: "psi-mu",
                        label: format!("alpha{} {} g{}", r + 1, s.compact(), j + 1),
                        lhs: vec![
                            Term::word(vec![Gen::Psi(r, s.clone()), Gen::Mu(mu.clone(), s.clone())]),
                            Term::word(vec![Gen::Mu(refl.act_poly(&mu), s.clone()), Gen::Psi(r, s.clone())]).neg(),
                        ],
                        rhs,
                    });
                }
            }
        }
        let simple = g.simple_roots();
        for (x, &a) in simple.iter().enumerate() {
            for &b in simple.iter().skip(x + 1) {
                let pairing = crate::rational::dot(&g.roots[a].linear, &g.roots[b].coroot)
                    * crate::rational::dot(&g.roots[b].linear, &g.roots[a].coroot);
                let m = coxeter_m(&pairing)
                    .ok_or_else(|| Error::Input(format!("roots {} and {} have no finite braid length", a + 1, b + 1)))?;
                for s in obj {
                    if !self.psi_defined(a, s)? || !self.psi_defined(b, s)? {
                        continue;
                    }
                    let alt = |p: usize, q: usize| -> Vec<Gen> {
                        (0..m).map(|k| Gen::Psi(if k % 2 == 0 { p } else { q }, s.clone())).collect()
                    };
                    out.push(Relation {
                        schema: "coxeter",
                        label: format!("alpha{} alpha{} {} m={m}", a + 1, b + 1, s.compact()),
                        lhs: vec![Term::word(alt(a, b))],
                        rhs: vec![Term::word(alt(b, a))],
                    });
                }
            }
        }
        let classes = self.classes();
        for &a in &simple {
            let refl = g.reflection(a);
            for cj in &classes {
                let j = cj[0];
                let target = refl.act_covector_pullback(&g.weights[j].linear);
                let Some(ck) = classes.iter().find(|c| {
                    let w = &g.weights[c[0]];
                    w.linear == target && w.orbit == g.weights[j].orbit
                }) else {
                    continue;
                };
                if ck[0] <= j {
                    // s_α-invariant hyperplane, or the pair was already handled
                    continue;
                }
                let both: Vec<usize> = cj.iter().chain(ck.iter()).copied().collect();
                for rho in obj {
                    if both.iter().any(|&i| rho.0[i] != Sign::Plus) || !self.psi_defined(a, rho)? {
                        continue;
                    }
                    if !chamber_feasible(&self.face_spec(rho, &both, &[a])?)? {
                        continue;
                    }
                    let tau = Self::set_signs(rho, &both, Sign::Minus);
                    let cands: Vec<(SignVector, &Vec<usize>)> = [(Self::set_signs(rho, cj, Sign::Minus), cj), (Self::set_signs(rho, ck, Sign::Minus), ck)]
                        .into_iter()
                        .filter(|(s, _)| self.contains(s))
                        .collect();
                    if cands.len() != 1 || !self.contains(&tau) {
                        return Err(Error::Invariant(format!(
                            "codimension-2 face at {} around alpha{} does not have three dominant chambers",
                            rho.compact(),
                            a + 1
                        )));
                    }
                    let sigma = cands[0].0.clone();
                    let label = format!("alpha{} H{}/H{} {}", a + 1, j + 1, ck[0] + 1, lab(&[rho, &sigma, &tau]));
                    let w = |x: &SignVector, y: &SignVector| Gen::Wall(x.clone(), y.clone());
                    out.push(Relation {
                        schema: "triple1",
                        label: label.clone(),
                        lhs: vec![Term::word(vec![Gen::Psi(a, rho.clone()), w(rho, &sigma), w(&sigma, &tau)])],
                        rhs: vec![Term::word(vec![w(rho, &sigma), w(&sigma, &tau), Gen::Psi(a, tau.clone())])],
                    });
                    out.push(Relation {
                        schema: "triple2",
                        label: label.clone(),
                        lhs: vec![Term::word(vec![Gen::Psi(a, tau.clone()), w(&tau, &sigma), w(&sigma, rho)])],
                        rhs: vec![Term::word(vec![w(&tau, &sigma), w(&sigma, rho), Gen::Psi(a, rho.clone())])],
                    });
                    let root = &g.roots[a];
                    let corr = demazure_poly(&root.linear, &root.coroot, &self.phi_pair(rho, &sigma));
                    let mut rhs = vec![Term::word(vec![w(&sigma, rho), Gen::Psi(a, rho.clone()), w(rho, &sigma)])];
                    if !corr.is_zero() {
                        rhs.push(Term::word(vec![Gen::Mu(corr, sigma.clone())]).neg());
                    }
                    out.push(Relation {
                        schema: "triple3",
                        label,
                        lhs: vec![Term::word(vec![w(&sigma, &tau), Gen::Psi(a, tau.clone()), w(&tau, &sigma)])],
                        rhs,
                    });
                }
            }
        }
        for (x, ci) in classes.iter().enumerate() {
            for cj in classes.iter().skip(x + 1) {
                let (i, j) = (ci[0], cj[0]);
                if crate::gauge::proportional(&g.weights[i].linear, &g.weights[j].linear).is_some() {
                    continue;
                }
                for s in obj {
                    if !chamber_feasible(&self.face_spec(s, &[ci.as_slice(), cj.as_slice()].concat(), &[])?)? {
                        continue;
                    }
                    let flip = |v: &SignVector, c: &[usize]| {
                        let mut v = v.clone();
                        for &k in c {
                            v.0[k] = v.0[k].flip();
                        }
                        v
                    };
                    let rho = flip(s, ci);
                    let tau = flip(s, cj);
                    let pi = flip(&rho, cj);
                    for v in [&rho, &tau, &pi] {
                        if !self.contains(v) {
                            return Err(Error::Invariant(format!("codimension-2 face misses chamber {v}")));
                        }
                    }
                    out.push(Relation {
                        schema: "gdkd",
                        label: format!("H{}/H{} {}", i + 1, j + 1, lab(&[&pi, &rho, s, &tau])),
                        lhs: vec![Term::word(vec![Gen::Wall(pi.clone(), rho.clone()), Gen::Wall(rho, s.clone())])],
                        rhs: vec![Term::word(vec![Gen::Wall(pi.clone(), tau.clone()), Gen::Wall(tau, s.clone())])],
                    });
                }
            }
        }
        let _ = nv;
        Ok(out)
    }

    /// Exact operator comparison of every relation, plus evaluation on
    /// seeded random polynomials.
    pub fn verify_relations(&self, probe_count: usize, probe_degree: u32, seed: u64) -> Result<Report> {
        let mut report = Report::new("Higgs relations");
        let ps = probes(seed, probe_count, self.nvars(), self.rank(), probe_degree);
        for rel in self.relations()? {
            let (ok, detail) = self.check_relation(&rel, &ps)?;
            report.push(rel.schema, rel.label, ok, detail);
        }
        Ok(report)
    }

    fn check_relation(&self, rel: &Relation, ps: &[Poly]) -> Result<(bool, String)> {
        let l = self.evaluate(&rel.lhs)?;
        let r = self.evaluate(&rel.rhs)?;
        let zero = TwistedOp::zero(self.rank());
        let lop = l.as_ref().map(|m| &m.op).unwrap_or(&zero);
        let rop = r.as_ref().map(|m| &m.op).unwrap_or(&zero);
        if let (Some(l), Some(r)) = (&l, &r) {
            if l.source != r.source || l.target != r.target {
                return Ok((false, "sides have different objects".into()));
            }
        }
        if lop != rop {
            return Ok((false, "operators differ".into()));
        }
        let bad = ps.iter().filter(|p| lop.apply(p) != rop.apply(p)).count();
        if bad > 0 {
            return Ok((false, format!("{bad} probe polynomials differ")));
        }
        Ok((true, String::new()))
    }

    pub fn check_homogeneity(&self) -> Result<Report> {
        let mut report = Report::new("Higgs grading");
        for rel in self.relations()? {
            let degs: Vec<Option<i64>> = rel.lhs.iter().chain(&rel.rhs).map(|t| self.term_degree(t)).collect();
            let ok = degs.iter().all(|d| d.is_some() && *d == degs[0]);
            let detail = if ok {
                String::new()
            } else {
                format!("term degrees {:?}", degs)
            };
            report.push(rel.schema, rel.label, ok, detail);
        }
        Ok(report)
    }

    fn weyl_desc(&self) -> Result<Vec<WeylElt>> {
        let mut w = self.gauge.weyl_group()?;
        w.sort_by(|a, b| b.length().cmp(&a.length()).then(a.word.cmp(&b.word)));
        Ok(w)
    }

    /// Coefficients c_w with m = Σ tilde_wall(σ,σ',w)·c_w, found by
    /// eliminating Weyl components from the longest element down.
    pub fn express_in_basis(&self, m: &HiggsMorphism) -> Result<Vec<(WeylElt, Poly)>> {
        let (s, sp) = (&m.target, &m.source);
        let mut residual = m.op.clone();
        let mut out = Vec::new();
        for w in self.weyl_desc()? {
            let t = self.tilde_wall(s, sp, &w.g)?;
            let lead = t.op.coefficient(&w.g);
            if lead.is_zero() {
                return Err(Error::Invariant(format!("tilde_wall for {:?} has no leading term", w.word)));
            }
            let rw = residual.coefficient(&w.g);
            let c = w.g.inverse().act_ratfun(&(&rw * &lead.inverse().expect("nonzero")));
            let cp = c.as_poly().cloned().ok_or_else(|| {
                Error::Invariant(format!("coefficient at {:?} is not a polynomial", w.word))
            })?;
            if !cp.is_zero() {
                residual = &residual - &(&t.op * &TwistedOp::poly(self.rank(), cp.clone()));
            }
            out.push((w, cp));
        }
        if !residual.is_zero() {
            return Err(Error::Invariant("morphism is not in the span of the basis".into()));
        }
        out.reverse();
        Ok(out)
    }

    /// Bruhat triangularity of the tilde-wall elements against Weyl components.
    pub fn basis_independence(&self, s: &SignVector, sp: &SignVector) -> Result<BasisCheck> {
        let ws = self.gauge.weyl_group()?;
        let mut triangular = true;
        let mut diagonal = true;
        for w in &ws {
            let t = self.tilde_wall(s, sp, &w.g)?;
            if t.op.coefficient(&w.g).is_zero() {
                diagonal = false;
            }
            for g in t.op.support() {
                if !self.gauge.bruhat_leq(&g, w) {
                    triangular = false;
                }
            }
        }
        Ok(BasisCheck { triangular, diagonal_nonzero: diagonal, rank: ws.len() })
    }

    /// Right products of every basis element with every generator at σ'
    /// re-expand with polynomial coefficients.
    pub fn spanning_report(&self) -> Result<Report> {
        let mut report = Report::new("basis spanning");
        let ws = self.gauge.weyl_group()?;
        for s in &self.objects {
            for sp in &self.objects {
                for w in &ws {
                    let t = self.tilde_wall(s, sp, &w.g)?;
                    let mut gens: Vec<Gen> = self.objects.iter().map(|x| Gen::Wall(sp.clone(), x.clone())).collect();
                    for r in 0..self.gauge.roots.len() {
                        if self.psi_defined(r, sp)? {
                            gens.push(Gen::Psi(r, sp.clone()));
                        }
                    }
                    for g in gens {
                        let m = t.then_after(&self.generator(&g)?)?;
                        let ok = self.express_in_basis(&m).is_ok();
                        report.push(
                            "right-multiplication",
                            format!("{} {} {:?} * {}", s.compact(), sp.compact(), w.word, g.describe(&self.gauge.var_names())),
                            ok,
                            "",
                        );
                    }
                }
            }
        }
        Ok(report)
    }

    /// The Stein_K relation s_α = α·ψ_α + 1 on every stable object.
    pub fn stein_k_report(&self) -> Result<Report> {
        let mut report = Report::new("Stein_K reflections");
        let k = enumerate_sign_vectors(&self.gauge, Variant::KPrime)?;
        for r in 0..self.gauge.roots.len() {
            let refl = self.gauge.reflection(r);
            let root = &self.gauge.roots[r];
            for s in k.signs() {
                if &permute_signs(&self.gauge, &refl, s)? != s {
                    continue;
                }
                let lhs = TwistedOp::group(refl.clone());
                let psi = TwistedOp::demazure(&root.linear, &root.coroot, &Q::zero());
                let rhs = &(&TwistedOp::poly(self.rank(), self.gauge.root_poly(r)) * &psi) + &TwistedOp::identity(self.rank());
                report.push("s=a*psi+1", format!("alpha{} {}", r + 1, s.compact()), lhs == rhs, "");
            }
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCheck {
    pub triangular: bool,
    pub diagonal_nonzero: bool,
    pub rank: usize,
}

pub fn phi_pair(g: &GaugeDatum, s: &SignVector, t: &SignVector) -> Poly {
    let mut p = Poly::one(g.nvars());
    for i in 0..g.d() {
        if s.0[i] == Sign::Plus && t.0[i] == Sign::Minus {
            p = &p * &g.weight_poly(i);
        }
    }
    p
}

pub fn phi_triple(g: &GaugeDatum, a: &SignVector, b: &SignVector, c: &SignVector) -> Poly {
    let mut p = Poly::one(g.nvars());
    for i in 0..g.d() {
        if a.0[i] == c.0[i] && a.0[i] == b.0[i].flip() && a.0[i] != Sign::Zero {
            p = &p * &g.weight_poly(i);
        }
    }
    p
}

/// Map a K' sign vector to its I' representative w^{-1}σ, where C'_σ meets
/// the Weyl chamber of w.
pub fn k_to_i(g: &GaugeDatum, s: &SignVector) -> Result<SignVector> {
    for w in g.weyl_group()? {
        let spec = chamber_spec(g, s, ChamberKind::Epsilon, Some(&w.g))?;
        if chamber_feasible(&spec)? {
            return permute_signs(g, &w.g.inverse(), s);
        }
    }
    Err(Error::Domain(format!("{s} labels an empty chamber")))
}

/// Scalars of a morphism in the polynomial representation, for display.
pub fn describe_op(g: &GaugeDatum, op: &TwistedOp) -> String {
    op.fmt_with(&g.var_names(), &|x| g.name_of(x))
}

pub fn ratfun_poly(f: &RatFun) -> Option<Poly> {
    f.as_poly().cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::rational::qi;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn phi_products() {
        let g = presets::gl2_running();
        let st = Steinberg::new(&g).unwrap();
        assert_eq!(st.phi_pair(&sv("++++"), &sv("--++")).to_string(), "g1*g2");
        assert!(st.phi_pair(&sv("+-+-"), &sv("+-+-")).is_one());
        let l = presets::line_datum();
        assert_eq!(phi_triple(&l, &sv("+"), &sv("-"), &sv("+")).to_string(), "g1");
    }

    #[test]
    fn generators_act() {
        let g = presets::gl2_running();
        let st = Steinberg::new(&g).unwrap();
        let psi = st.psi(0, &sv("--++")).unwrap();
        assert_eq!(psi.op.apply(&g.gamma(0)), RatFun::constant(3, qi(-1)));
        assert!(st.psi(0, &sv("+-++")).is_err());
        assert!(st.wall(&sv("+-+-"), &sv("+-+-")).unwrap().op.is_one());
        let w = st.wall(&sv("++++"), &sv("--++")).unwrap();
        let f = &g.gamma(0) + &g.h();
        assert_eq!(w.op.apply(&f).as_poly().unwrap(), &(&(&g.gamma(0) * &g.gamma(1)) * &f));
    }

    #[test]
    fn tilde_wall_running_example() {
        let g = presets::gl2_running();
        let st = Steinberg::new(&g).unwrap();
        let word = st.tilde_word(&sv("+-++"), &sv("+-+-"), &g.reflection(0)).unwrap();
        assert_eq!(
            word,
            vec![
                Gen::Wall(sv("+-++"), sv("--++")),
                Gen::Psi(0, sv("--++")),
                Gen::Wall(sv("--++"), sv("+-+-")),
            ]
        );
        let id = GroupElt::identity(2);
        assert!(st.tilde_wall(&sv("++++"), &sv("++++"), &id).unwrap().op.is_one());
        assert_eq!(st.tilde_word(&sv("++++"), &sv("+-++"), &id).unwrap(), vec![Gen::Wall(sv("++++"), sv("+-++"))]);
    }

    #[test]
    fn running_relations_pass() {
        let g = presets::gl2_running();
        let st = Steinberg::new(&g).unwrap();
        let r = st.verify_relations(5, 3, 1).unwrap();
        assert!(r.all_passed(), "{}", r.to_text());
        for s in ["wall", "dot-commute", "psi-squared", "psi-mu", "triple1", "triple2", "triple3", "gdkd"] {
            assert!(r.count(s) > 0, "{s}");
        }
        assert!(st.check_homogeneity().unwrap().all_passed());
    }

    #[test]
    fn braid_on_three_strands() {
        let g = presets::nilhecke(3);
        let st = Steinberg::new(&g).unwrap();
        let r = st.verify_relations(5, 3, 2).unwrap();
        assert!(r.all_passed(), "{}", r.to_text());
        assert_eq!(r.count("coxeter"), 1);
    }

    #[test]
    fn basis_properties() {
        let g = presets::gl2_running();
        let st = Steinberg::new(&g).unwrap();
        let s = sv("+-++");
        let sp = sv("+-+-");
        let c = st.basis_independence(&s, &sp).unwrap();
        assert!(c.triangular && c.diagonal_nonzero && c.rank == 2);
        let t = st.tilde_wall(&s, &sp, &g.reflection(0)).unwrap();
        let e = st.express_in_basis(&t).unwrap();
        assert!(e[0].1.is_zero() && e[1].1.is_one());
        // w s_α < w kills the product
        let psi = st.psi(0, &sp);
        if let Ok(psi) = psi {
            assert!(t.then_after(&psi).unwrap().op.is_zero());
        }
    }
}
