//! Sign vectors, chamber specifications and their exact feasibility.

use crate::gauge::GaugeDatum;
use crate::group::GroupElt;
use crate::lp::{maximize, Constraint, LpOutcome, Rel};
use crate::rational::{dot, floor_q, Q};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

pub const DEFAULT_SIGN_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Zero,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }

    fn ch(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Zero => '0',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn all(d: usize, s: Sign) -> Self {
        SignVector(vec![s; d])
    }

    pub fn differences(&self, other: &SignVector) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }

    /// Every vector in {+,-}^d, lexicographic with + first.
    pub fn all_pm(d: usize) -> Vec<SignVector> {
        let mut out = vec![SignVector(Vec::new())];
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|v| {
                    [Sign::Plus, Sign::Minus].into_iter().map(move |s| {
                        let mut w = v.0.clone();
                        w.push(s);
                        SignVector(w)
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|x| x.ch()).collect();
        write!(f, "({})", s.chars().map(String::from).collect::<Vec<_>>().join(","))
    }
}

impl SignVector {
    pub fn compact(&self) -> String {
        self.0.iter().map(|x| x.ch()).collect()
    }
}

impl FromStr for SignVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut out = Vec::new();
        for c in s.chars() {
            match c {
                '+' => out.push(Sign::Plus),
                '-' | '−' => out.push(Sign::Minus),
                '0' => out.push(Sign::Zero),
                ',' | ' ' => {}
                _ => return Err(Error::Input(format!("bad sign character {c:?}"))),
            }
        }
        Ok(SignVector(out))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineForm {
    pub coeffs: Vec<Q>,
    pub constant: Q,
}

impl AffineForm {
    pub fn new(coeffs: Vec<Q>, constant: Q) -> Self {
        AffineForm { coeffs, constant }
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        dot(&self.coeffs, x) + &self.constant
    }

    pub fn neg(&self) -> AffineForm {
        AffineForm {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            constant: -self.constant.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Ge,
    Gt,
    Le,
    Lt,
}

impl Cmp {
    fn strict(self) -> bool {
        matches!(self, Cmp::Gt | Cmp::Lt)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberSpec {
    pub dim: usize,
    pub inequalities: Vec<(AffineForm, Cmp)>,
    pub closure: bool,
}

impl ChamberSpec {
    pub fn new(dim: usize) -> Self {
        ChamberSpec { dim, inequalities: Vec::new(), closure: false }
    }

    pub fn push(&mut self, f: AffineForm, c: Cmp) {
        self.inequalities.push((f, c));
    }

    pub fn closed(&self) -> ChamberSpec {
        let mut s = self.clone();
        s.closure = true;
        s
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.inequalities.iter().all(|(f, c)| {
            let v = f.eval(x);
            let strict = c.strict() && !self.closure;
            match (c, strict) {
                (Cmp::Ge | Cmp::Gt, true) => v.is_positive(),
                (Cmp::Ge | Cmp::Gt, false) => !v.is_negative(),
                (Cmp::Le | Cmp::Lt, true) => v.is_negative(),
                (Cmp::Le | Cmp::Lt, false) => !v.is_positive(),
            }
        })
    }

    fn check_arity(&self) -> Result<()> {
        for (k, (f, _)) in self.inequalities.iter().enumerate() {
            if f.coeffs.len() != self.dim {
                return Err(Error::Input(format!(
                    "inequality {} has {} coefficients, expected {}",
                    k + 1,
                    f.coeffs.len(),
                    self.dim
                )));
            }
        }
        Ok(())
    }

    /// Every inequality as `form − t·[strict] ≥ 0`, in variables (x, t).
    fn slack_constraints(&self) -> (Vec<Constraint>, bool) {
        let n = self.dim;
        let mut cons = Vec::new();
        let mut any_strict = false;
        for (f, c) in &self.inequalities {
            let g = match c {
                Cmp::Ge | Cmp::Gt => f.clone(),
                Cmp::Le | Cmp::Lt => f.neg(),
            };
            let strict = c.strict() && !self.closure;
            any_strict |= strict;
            let mut coeffs = g.coeffs.clone();
            coeffs.push(if strict { -Q::one() } else { Q::zero() });
            cons.push(Constraint::new(coeffs, Rel::Ge, -g.constant.clone()));
        }
        let mut cap = vec![Q::zero(); n];
        cap.push(Q::one());
        cons.push(Constraint::new(cap, Rel::Le, Q::one()));
        (cons, any_strict)
    }
}

/// Exact feasibility; strict inequalities via a maximized common slack.
pub fn chamber_feasible(spec: &ChamberSpec) -> Result<bool> {
    spec.check_arity()?;
    if spec.inequalities.is_empty() {
        return Ok(true);
    }
    let n = spec.dim;
    let (cons, any_strict) = spec.slack_constraints();
    let mut obj = vec![Q::zero(); n];
    obj.push(Q::one());
    Ok(match maximize(n + 1, &cons, &obj) {
        LpOutcome::Infeasible => false,
        LpOutcome::Unbounded => true,
        LpOutcome::Optimal { value, .. } => !any_strict || value.is_positive(),
    })
}

/// A reproducible interior point: maximize the minimum slack (capped at
/// 1), then minimize the L1 norm among points attaining it.
pub fn interior_point(spec: &ChamberSpec) -> Result<Option<Vec<Q>>> {
    spec.check_arity()?;
    let n = spec.dim;
    let (mut cons, any_strict) = spec.slack_constraints();
    let mut obj = vec![Q::zero(); n];
    obj.push(Q::one());
    let tstar = match maximize(n + 1, &cons, &obj) {
        LpOutcome::Infeasible => return Ok(None),
        LpOutcome::Unbounded => unreachable!("slack is capped"),
        LpOutcome::Optimal { value, .. } => value,
    };
    if any_strict && !tstar.is_positive() {
        return Ok(None);
    }
    let mut fix = vec![Q::zero(); n];
    fix.push(Q::one());
    cons.push(Constraint::new(fix, Rel::Ge, tstar));
    // variables (x, t, u) with u_j >= |x_j|
    let total = 2 * n + 1;
    let mut cons: Vec<Constraint> = cons
        .into_iter()
        .map(|mut c| {
            c.coeffs.extend(std::iter::repeat(Q::zero()).take(n));
            c
        })
        .collect();
    for j in 0..n {
        for s in [Q::one(), -Q::one()] {
            let mut c = vec![Q::zero(); total];
            c[n + 1 + j] = Q::one();
            c[j] = -s.clone();
            cons.push(Constraint::new(c, Rel::Ge, Q::zero()));
        }
    }
    let mut obj = vec![Q::zero(); total];
    for j in 0..n {
        obj[n + 1 + j] = -Q::one();
    }
    match maximize(total, &cons, &obj) {
        LpOutcome::Optimal { point, .. } => Ok(Some(point[..n].to_vec())),
        _ => Err(Error::Invariant("L1 stage of interior point failed".into())),
    }
}

/// Which chamber family a sign vector labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChamberKind {
    /// C_σ: φ_i ≥ 0 or −φ_i − 1 ≥ 0 (φ ∈ (−1,0) for 0).
    Lift,
    /// C'_σ: φ_i > ε_i or φ_i < ε_i.
    Epsilon,
}

/// Optional restriction to the open Weyl chamber of `w`.
pub fn chamber_spec(
    gauge: &GaugeDatum,
    sigma: &SignVector,
    kind: ChamberKind,
    weyl: Option<&GroupElt>,
) -> Result<ChamberSpec> {
    if sigma.len() != gauge.d() {
        return Err(Error::Input(format!(
            "sign vector has length {}, datum has {} weights",
            sigma.len(),
            gauge.d()
        )));
    }
    let n = gauge.rank;
    let mut spec = ChamberSpec::new(n);
    for (i, s) in sigma.0.iter().enumerate() {
        let w = &gauge.weights[i];
        // φ_i(x) = ⟨λ_i,x⟩ − f_i
        let phi = AffineForm::new(w.linear.clone(), -w.flavor.clone());
        match (kind, s) {
            (ChamberKind::Lift, Sign::Plus) => spec.push(phi, Cmp::Ge),
            (ChamberKind::Lift, Sign::Minus) => {
                let mut g = phi.neg();
                g.constant -= Q::one();
                spec.push(g, Cmp::Ge)
            }
            (ChamberKind::Lift, Sign::Zero) => {
                let mut g = phi.clone();
                g.constant += Q::one();
                spec.push(g, Cmp::Gt);
                spec.push(phi, Cmp::Lt);
            }
            (ChamberKind::Epsilon, Sign::Plus) => {
                let mut g = phi;
                g.constant -= &w.epsilon;
                spec.push(g, Cmp::Gt)
            }
            (ChamberKind::Epsilon, Sign::Minus) => {
                let mut g = phi;
                g.constant -= &w.epsilon;
                spec.push(g, Cmp::Lt)
            }
            (ChamberKind::Epsilon, Sign::Zero) => {
                return Err(Error::Input("0-signs are only defined for lift chambers".into()))
            }
        }
    }
    if let Some(w) = weyl {
        for r in &gauge.roots {
            // x in w·(dominant) iff α(w^{-1}x) > 0
            let cov = w.inverse().act_covector_pullback(&r.linear);
            spec.push(AffineForm::new(cov, Q::zero()), Cmp::Gt);
        }
    }
    Ok(spec)
}

impl GroupElt {
    /// μ ∘ A for a covector μ (linear part only).
    pub fn act_covector_pullback(&self, mu: &[Q]) -> Vec<Q> {
        crate::linalg::vec_mat(mu, &self.mat)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    I,
    IPrime,
    K,
    KPrime,
    CompatPairs,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" => Ok(Variant::I),
            "I'" | "i'" | "Iprime" | "I-prime" => Ok(Variant::IPrime),
            "K" | "k" => Ok(Variant::K),
            "K'" | "k'" | "Kprime" | "K-prime" => Ok(Variant::KPrime),
            "compat" | "compat-pairs" => Ok(Variant::CompatPairs),
            _ => Err(Error::Input(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Enumeration {
    Signs(Vec<SignVector>),
    Pairs(Vec<(SignVector, Vec<usize>)>),
}

impl Enumeration {
    pub fn len(&self) -> usize {
        match self {
            Enumeration::Signs(v) => v.len(),
            Enumeration::Pairs(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn signs(&self) -> &[SignVector] {
        match self {
            Enumeration::Signs(v) => v,
            Enumeration::Pairs(_) => &[],
        }
    }
}

pub fn enumerate_sign_vectors(gauge: &GaugeDatum, variant: Variant) -> Result<Enumeration> {
    enumerate_with_cap(gauge, variant, DEFAULT_SIGN_CAP)
}

pub fn enumerate_with_cap(gauge: &GaugeDatum, variant: Variant, cap: usize) -> Result<Enumeration> {
    let d = gauge.d();
    if d > cap {
        return Err(Error::Resource(format!("d = {d} exceeds the sign-vector cap {cap}")));
    }
    let id = GroupElt::identity(gauge.rank);
    let (kind, weyl) = match variant {
        Variant::I => (ChamberKind::Lift, Some(&id)),
        Variant::IPrime => (ChamberKind::Epsilon, Some(&id)),
        Variant::K => (ChamberKind::Lift, None),
        Variant::KPrime => (ChamberKind::Epsilon, None),
        Variant::CompatPairs => return Ok(Enumeration::Pairs(compat_pairs(gauge)?)),
    };
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    search(gauge, kind, weyl, &mut prefix, &mut out)?;
    Ok(Enumeration::Signs(out))
}

fn search(
    gauge: &GaugeDatum,
    kind: ChamberKind,
    weyl: Option<&GroupElt>,
    prefix: &mut Vec<Sign>,
    out: &mut Vec<SignVector>,
) -> Result<()> {
    if !prefix_feasible(gauge, kind, weyl, prefix)? {
        return Ok(());
    }
    if prefix.len() == gauge.d() {
        out.push(SignVector(prefix.clone()));
        return Ok(());
    }
    for s in [Sign::Plus, Sign::Minus] {
        prefix.push(s);
        search(gauge, kind, weyl, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

fn prefix_feasible(
    gauge: &GaugeDatum,
    kind: ChamberKind,
    weyl: Option<&GroupElt>,
    prefix: &[Sign],
) -> Result<bool> {
    let mut sub = gauge.clone();
    sub.weights.truncate(prefix.len());
    let spec = chamber_spec(&sub, &SignVector(prefix.to_vec()), kind, weyl)?;
    chamber_feasible(&spec)
}

/// Borel compatibility: for i ∼ j with λ_i = λ_j + β, β positive for
/// wBw^{-1}, a + at j forces + at i and a − at i forces − at j.
pub fn compatible(gauge: &GaugeDatum, sigma: &SignVector, w: &GroupElt) -> bool {
    let betas: Vec<Vec<Q>> = gauge
        .roots
        .iter()
        .map(|r| w.act_covector(&r.linear))
        .collect();
    for (i, wi) in gauge.weights.iter().enumerate() {
        for (j, wj) in gauge.weights.iter().enumerate() {
            if i == j || wi.orbit != wj.orbit {
                continue;
            }
            let diff: Vec<Q> = wi.linear.iter().zip(&wj.linear).map(|(a, b)| a - b).collect();
            if betas.iter().any(|b| *b == diff) {
                let (si, sj) = (sigma.0[i], sigma.0[j]);
                if sj == Sign::Plus && si != Sign::Plus {
                    return false;
                }
                if si == Sign::Minus && sj != Sign::Minus {
                    return false;
                }
            }
        }
    }
    true
}

fn compat_pairs(gauge: &GaugeDatum) -> Result<Vec<(SignVector, Vec<usize>)>> {
    let d = gauge.d();
    let mut all = vec![SignVector(Vec::new())];
    for _ in 0..d {
        all = all
            .into_iter()
            .flat_map(|v| {
                [Sign::Plus, Sign::Zero, Sign::Minus].into_iter().map(move |s| {
                    let mut x = v.0.clone();
                    x.push(s);
                    SignVector(x)
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for w in gauge.weyl_group()? {
        for s in &all {
            if compatible(gauge, s, &w.g) {
                out.push((s.clone(), w.word.clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The permutation of σ induced by w: (wσ)_j = σ_i where λ_j = w·λ_i, i ∼ j.
pub fn weyl_act_sign(gauge: &GaugeDatum, w: &GroupElt, sigma: &SignVector) -> Result<SignVector> {
    let spec = chamber_spec(gauge, sigma, ChamberKind::Epsilon, None)?;
    if !chamber_feasible(&spec)? {
        return Err(Error::Domain(format!("{sigma} labels an empty chamber; its translate is undefined")));
    }
    permute_signs(gauge, w, sigma)
}

/// Same as `weyl_act_sign` without the feasibility precondition.
pub fn permute_signs(gauge: &GaugeDatum, w: &GroupElt, sigma: &SignVector) -> Result<SignVector> {
    let mut out = Vec::with_capacity(sigma.len());
    for (j, wj) in gauge.weights.iter().enumerate() {
        // λ_i = λ_j ∘ W
        let target = w.act_covector_pullback(&wj.linear);
        let mut found: Option<Sign> = None;
        for (i, wi) in gauge.weights.iter().enumerate() {
            if wi.orbit == wj.orbit && wi.linear == target {
                match found {
                    None => found = Some(sigma.0[i]),
                    Some(s) if s != sigma.0[i] => {
                        return Err(Error::Domain(format!(
                            "equal weights of one orbit carry different signs in {sigma}"
                        )))
                    }
                    _ => {}
                }
            }
        }
        match found {
            Some(s) => out.push(s),
            None => {
                return Err(Error::Domain(format!("weight {} has no Weyl preimage in its orbit", j + 1)))
            }
        }
    }
    Ok(SignVector(out))
}

/// Recession-cone test: a nonzero ν with the homogeneous chamber
/// constraints of closed C'_σ and ⟨ξ,ν⟩ ≥ 0.
pub fn is_unsteady(gauge: &GaugeDatum, sigma: &SignVector, xi: &[Q]) -> Result<bool> {
    let spec = chamber_spec(gauge, sigma, ChamberKind::Epsilon, None)?;
    if !chamber_feasible(&spec)? {
        return Err(Error::Domain(format!("{sigma} labels an empty chamber")));
    }
    if xi.len() != gauge.rank {
        return Err(Error::Input("xi has the wrong arity".into()));
    }
    let n = gauge.rank;
    let mut base: Vec<Constraint> = spec
        .inequalities
        .iter()
        .map(|(f, c)| {
            let rel = match c {
                Cmp::Ge | Cmp::Gt => Rel::Ge,
                Cmp::Le | Cmp::Lt => Rel::Le,
            };
            Constraint::new(f.coeffs.clone(), rel, Q::zero())
        })
        .collect();
    base.push(Constraint::new(xi.to_vec(), Rel::Ge, Q::zero()));
    for k in 0..n {
        for (rel, rhs) in [(Rel::Ge, Q::one()), (Rel::Le, -Q::one())] {
            let mut cons = base.clone();
            let mut e = vec![Q::zero(); n];
            e[k] = Q::one();
            cons.push(Constraint::new(e, rel, rhs));
            if !matches!(maximize(n, &cons, &vec![Q::zero(); n]), LpOutcome::Infeasible) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Unrolled a-vector chambers: a_i < ⟨λ_i,x⟩ − ε_i < a_i + 1.
pub fn avector_spec(gauge: &GaugeDatum, a: &[i64]) -> Result<ChamberSpec> {
    if a.len() != gauge.d() {
        return Err(Error::Input("a-vector has the wrong length".into()));
    }
    let mut spec = ChamberSpec::new(gauge.rank);
    for (i, w) in gauge.weights.iter().enumerate() {
        let lo = AffineForm::new(w.linear.clone(), -&w.epsilon - Q::from_integer(a[i].into()));
        spec.push(lo.clone(), Cmp::Gt);
        let mut hi = lo;
        hi.constant -= Q::one();
        spec.push(hi, Cmp::Lt);
    }
    Ok(spec)
}

pub fn avector_feasible(gauge: &GaugeDatum, a: &[i64]) -> Result<bool> {
    chamber_feasible(&avector_spec(gauge, a)?)
}

pub fn avector_sign(a: &[i64]) -> SignVector {
    SignVector(a.iter().map(|&x| if x >= 0 { Sign::Plus } else { Sign::Minus }).collect())
}

pub fn a_of_point(gauge: &GaugeDatum, x: &[Q]) -> Result<Vec<i64>> {
    if x.len() != gauge.rank {
        return Err(Error::Input("point has the wrong arity".into()));
    }
    let mut out = Vec::new();
    for (i, w) in gauge.weights.iter().enumerate() {
        let v = gauge.coulomb_eval(i, x) - &w.epsilon;
        if v.is_integer() {
            return Err(Error::Domain(format!("point lies on the unrolled hyperplane of weight {}", i + 1)));
        }
        let f = floor_q(&v);
        out.push(i64::try_from(f).map_err(|_| Error::Resource("a-vector entry too large".into()))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::rational::{q, qi};

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn running_example_census() {
        let g = presets::gl2_running();
        let e = enumerate_sign_vectors(&g, Variant::IPrime).unwrap();
        let got: Vec<String> = e.signs().iter().map(|s| s.compact()).collect();
        assert_eq!(got, ["++++", "+-++", "+-+-", "--++", "--+-", "----"]);
        let e = enumerate_sign_vectors(&g, Variant::I).unwrap();
        assert_eq!(e.len(), 6);
    }

    #[test]
    fn feasibility_examples() {
        let g = presets::gl2_running();
        let id = GroupElt::identity(2);
        let s = chamber_spec(&g, &sv("++++"), ChamberKind::Epsilon, Some(&id)).unwrap();
        assert!(chamber_feasible(&s).unwrap());
        let s = chamber_spec(&g, &sv("-+++"), ChamberKind::Epsilon, Some(&id)).unwrap();
        assert!(!chamber_feasible(&s).unwrap());
        assert!(chamber_feasible(&ChamberSpec::new(2)).unwrap());
        let mut bad = ChamberSpec::new(2);
        bad.push(AffineForm::new(vec![qi(1)], qi(0)), Cmp::Ge);
        assert!(matches!(chamber_feasible(&bad), Err(Error::Input(_))));
    }

    #[test]
    fn centers_are_reproducible() {
        let g = presets::gl2_running();
        let id = GroupElt::identity(2);
        let s = chamber_spec(&g, &sv("+-+-"), ChamberKind::Epsilon, Some(&id)).unwrap();
        assert_eq!(interior_point(&s).unwrap().unwrap(), vec![q(5, 3), q(-8, 3)]);
    }

    #[test]
    fn weyl_translates() {
        let g = presets::gl2_running();
        let s = g.reflection(0);
        assert_eq!(weyl_act_sign(&g, &s, &sv("+-+-")).unwrap(), sv("-+-+"));
        assert_eq!(weyl_act_sign(&g, &s, &sv("++++")).unwrap(), sv("++++"));
        let id = GroupElt::identity(2);
        assert_eq!(weyl_act_sign(&g, &id, &sv("--++")).unwrap(), sv("--++"));
    }

    #[test]
    fn compat_matches_borel_list() {
        let g = presets::gl2_running();
        let id = GroupElt::identity(2);
        for bad in ["-+++", "-0++", "0+++", "++-+", "++-0", "++0+"] {
            assert!(!compatible(&g, &sv(bad), &id), "{bad}");
        }
        assert!(compatible(&g, &sv("+-+-"), &id));
        assert!(compatible(&g, &sv("-+-+"), &g.reflection(0)));
        if let Enumeration::Pairs(p) = enumerate_sign_vectors(&g, Variant::CompatPairs).unwrap() {
            assert_eq!(p.len(), 72);
        }
    }

    #[test]
    fn avectors() {
        let g = presets::gl2_running();
        assert!(avector_feasible(&g, &[0, 0, 0, 0]).unwrap());
        assert_eq!(avector_sign(&[0, 0, 0, 0]), sv("++++"));
        assert_eq!(avector_sign(&[-1, 0, 2, 0]).0[0], Sign::Minus);
        assert_eq!(a_of_point(&g, &[q(1, 10), q(-1, 10)]).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn rank_one_unsteady() {
        let g = presets::line_datum();
        assert!(is_unsteady(&g, &sv("+"), &[qi(1)]).unwrap());
        assert!(!is_unsteady(&g, &sv("-"), &[qi(1)]).unwrap());
        assert!(is_unsteady(&g, &sv("-"), &[qi(0)]).unwrap());
    }
}
