//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
//! fails. Runs without the libtest harness so the lines always print.

use gaugealg::arrangement::{chamber_spec, enumerate_sign_vectors, is_unsteady, ChamberKind, Cmp, SignVector, Variant};
use gaugealg::bridge::Bridge;
use gaugealg::coulomb::{gl2_base_point, Coulomb};
use gaugealg::gauge::GaugeDatum;
use gaugealg::klr::{nilhecke_report, stendhal_report};
use gaugealg::poly::Poly;
use gaugealg::presets;
use gaugealg::probe::probes;
use gaugealg::quiver::{jordan, quiver_expand, ClassNum};
use gaugealg::rational::{dot, q, qi, Q};
use gaugealg::steinberg::{Steinberg, HIGGS_SCHEMAS};
use gaugealg::TwistedOp;
use num_traits::{Signed, Zero};
use serde_json::Value;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

const SEED: u64 = 20;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let mut argv = vec!["gaugealg"];
    argv.extend_from_slice(args);
    argv.extend_from_slice(&["--format", "json"]);
    let out = gaugealg_cli::run(argv);
    if out.code != 0 {
        return Err(format!("exit {} {}", out.code, out.stderr.trim()));
    }
    serde_json::from_str(&out.stdout).map_err(|e| e.to_string())
}

fn chamber_census() -> Outcome {
    let j = cli_json(&["--preset", "gl2-running", "chambers"])?;
    let want = ["(+,+,+,+)", "(+,-,+,+)", "(+,-,+,-)", "(-,-,+,+)", "(-,-,+,-)", "(-,-,-,-)"];
    ensure(j["sign_vectors"] == serde_json::json!(want), format!("I' gave {}", j["sign_vectors"]))?;
    let j = cli_json(&["--preset", "gl2-running", "chambers", "variant=I", "flavor=trivial"])?;
    let want = ["(+,+,+,+)", "(+,-,+,-)", "(-,-,-,-)"];
    ensure(j["sign_vectors"] == serde_json::json!(want), format!("trivial-flavor I gave {}", j["sign_vectors"]))?;
    Ok("6 vectors for I', 3 for trivial-flavor I".into())
}

fn higgs_relations() -> Outcome {
    let mut total = 0;
    let mut seen = std::collections::BTreeSet::new();
    for (name, g) in [("gl2-running", presets::gl2_running()), ("hypertoric-c2", presets::hypertoric_c2()), ("nilhecke-3", presets::nilhecke(3))] {
        let st = Steinberg::new(&g).map_err(|e| e.to_string())?;
        let rep = st.verify_relations(50, 3, SEED).map_err(|e| e.to_string())?;
        ensure(rep.all_passed(), format!("{name}: {}", rep.to_text()))?;
        total += rep.checks.len();
        seen.extend(rep.checks.iter().map(|c| c.schema.clone()));
    }
    for s in HIGGS_SCHEMAS {
        ensure(seen.contains(s), format!("no instance of {s}"))?;
    }
    Ok(format!("{total} instances over {} schemas, 50 probes of degree <= 3", seen.len()))
}

fn basis_theorem() -> Outcome {
    let j = cli_json(&["--preset", "gl2-running", "basis"])?;
    ensure(j["passed"] == true, "basis report failed")?;
    for schema in ["triangular", "diagonal", "rank=#W"] {
        let s = &j["summary"][schema];
        ensure(s["total"] == 36 && s["passed"] == 36, format!("{schema}: {s}"))?;
    }
    ensure(j["details"]["weyl_order"] == 2, "#W is not 2")?;
    let sp = &j["summary"]["right-multiplication"];
    Ok(format!("36 pairs free of rank 2, {} spanning products", sp["total"]))
}

fn coulomb_anchor() -> Outcome {
    let g = presets::gl2_running();
    let c = Coulomb::new(&g);
    let (w1, z1) = c.anchor_generators(&gl2_base_point(), 0).map_err(|e| e.to_string())?;
    let g1 = g.gamma(0);
    let h = g.h();
    let zw = z1.then_after(&w1).map_err(|e| e.to_string())?;
    let wz = w1.then_after(&z1).map_err(|e| e.to_string())?;
    ensure(zw.op == TwistedOp::poly(2, &g1 * &(&g1 - &h.scale(&qi(2)))), "z1w1 differs")?;
    ensure(wz.op == TwistedOp::poly(2, &(&g1 + &h) * &(&g1 - &h)), "w1z1 differs")?;
    Ok("z1w1 = g1(g1 - 2h), w1z1 = (g1 + h)(g1 - h)".into())
}

fn rank_one_anchor() -> Outcome {
    for a in [-3, -1, 0, 2, 5] {
        let g = presets::rank1_dmodule(qi(a));
        let c = Coulomb::new(&g);
        let (rp, rm) = c.anchor_generators(&[qi(0)], 0).map_err(|e| e.to_string())?;
        let t = Poly::var(2, 0);
        let mm = rm.then_after(&rp).map_err(|e| e.to_string())?.op.specialize_h(&qi(1));
        let pp = rp.then_after(&rm).map_err(|e| e.to_string())?.op.specialize_h(&qi(1));
        ensure(mm == TwistedOp::poly(1, &t - &Poly::constant(2, qi(a + 1))), format!("r-r+ at a = {a}"))?;
        ensure(pp == TwistedOp::poly(1, &t - &Poly::constant(2, qi(a))), format!("r+r- at a = {a}"))?;
    }
    Ok("r-r+ = t - a - 1, r+r- = t - a for a in {-3,-1,0,2,5}".into())
}

fn coulomb_relations() -> Outcome {
    let g = presets::gl2_running();
    let c = Coulomb::new(&g);
    let roster = c.roster(&q(1, 2)).map_err(|e| e.to_string())?;
    let ps = probes(SEED, 5, g.nvars(), g.rank, 3);
    let rep = c.verify_relations(&roster, &ps).map_err(|e| e.to_string())?;
    ensure(rep.all_passed(), rep.to_text())?;
    for s in ["coweight", "weyl-mu", "conjugate", "wall-cross", "psi-squared", "psi-mu", "psi-conjugate", "reflection-split", "triple"] {
        ensure(rep.count(s) > 0, format!("no instance of {s}"))?;
    }
    Ok(format!("{} instances on a roster of {} alcove cells, {} with the correction term", rep.checks.len(), roster.len(), rep.count("triple")))
}

fn gamma_functor() -> Outcome {
    let b = Bridge::new(&presets::gl2_running(), &[qi(0), qi(0)]).map_err(|e| e.to_string())?;
    let rep = b.verify(SEED, 20).map_err(|e| e.to_string())?;
    ensure(rep.all_passed(), rep.to_text())?;
    ensure(rep.count("factorization") == 20, "expected 20 factorization pairs")?;
    ensure(rep.count("relation-image") > 0 && rep.count("hom-rank") == 36, "missing relation images or ranks")?;
    Ok(format!("{} relation images, 20 factorizations, 36 Hom ranks = #W_l = {}", rep.count("relation-image"), b.levi.weyl_order()))
}

fn klr_specialization() -> Outcome {
    let st = Steinberg::new(&presets::nilhecke(2)).map_err(|e| e.to_string())?;
    let rep = nilhecke_report(&st).map_err(|e| e.to_string())?;
    ensure(rep.all_passed() && rep.count("psi^2=0") > 0 && rep.count("psi*dot-dot*psi=1") > 0, rep.to_text())?;
    let st = Steinberg::new(&presets::gl2_running()).map_err(|e| e.to_string())?;
    let rep2 = stendhal_report(&st).map_err(|e| e.to_string())?;
    ensure(rep2.all_passed(), rep2.to_text())?;
    Ok(format!("{} nilHecke identities, {} strand-dictionary checks", rep.checks.len(), rep2.checks.len()))
}

fn quiver_expansion() -> Outcome {
    let x = quiver_expand(&presets::jordan_k13_quiver()).map_err(|e| e.to_string())?;
    ensure(x.is_single_cycle() && x.vertices.len() == 3, "k = 1/3 is not a 3-cycle")?;
    ensure(x.v == vec![1, 1, 1] && x.w == vec![1, 0, 0], format!("dimension vectors v {:?} w {:?}", x.v, x.w))?;
    let z = (0..3).map(|m| ClassNum::kappa(qi(m))).collect();
    let y = quiver_expand(&jordan(3, ClassNum::kappa(qi(1)), z, ClassNum::rational(qi(0)))).map_err(|e| e.to_string())?;
    ensure(y.is_union_of_segments() && !y.is_single_cycle(), "irrational k does not give segments")?;
    Ok(format!("3-cycle with v = {:?}; irrational k gives {} segment(s)", x.v, y.components().len()))
}

/// Closed half-planes a·x + c ≥ 0 of the chamber C'_σ.
fn halfplanes(g: &GaugeDatum, s: &SignVector) -> Vec<(Vec<Q>, Q)> {
    let spec = chamber_spec(g, s, ChamberKind::Epsilon, None).expect("chamber");
    spec.inequalities
        .iter()
        .map(|(f, c)| match c {
            Cmp::Ge | Cmp::Gt => (f.coeffs.clone(), f.constant.clone()),
            Cmp::Le | Cmp::Lt => (f.coeffs.iter().map(|x| -x).collect(), -f.constant.clone()),
        })
        .collect()
}

fn vertices(h: &[(Vec<Q>, Q)]) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for (i, (a, c)) in h.iter().enumerate() {
        for (b, d) in h.iter().skip(i + 1) {
            let det = &a[0] * &b[1] - &a[1] * &b[0];
            if det.is_zero() {
                continue;
            }
            let p = vec![(-c * &b[1] + d * &a[1]) / &det, (-&a[0] * d + &b[0] * c) / &det];
            if h.iter().all(|(e, f)| !(dot(e, &p) + f).is_negative()) && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

fn extreme_rays(h: &[(Vec<Q>, Q)]) -> Vec<Vec<Q>> {
    let mut cands: Vec<Vec<Q>> = Vec::new();
    for (a, _) in h {
        cands.push(vec![-a[1].clone(), a[0].clone()]);
        cands.push(vec![a[1].clone(), -a[0].clone()]);
    }
    if h.is_empty() {
        for v in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
            cands.push(vec![qi(v[0]), qi(v[1])]);
        }
    }
    cands.into_iter().filter(|r| h.iter().all(|(a, _)| !dot(a, r).is_negative())).collect()
}

/// Unsteady iff ξ has no maximum on the closed chamber, or its argmax face
/// is unbounded; either way some extreme ray r has ⟨ξ,r⟩ ≥ 0.
fn oracle(h: &[(Vec<Q>, Q)], xi: &[Q]) -> bool {
    let rays = extreme_rays(h);
    assert!(!vertices(h).is_empty() || !rays.is_empty());
    rays.iter().any(|r| !dot(xi, r).is_negative())
}

fn unsteady_oracle() -> Outcome {
    let g = presets::hypertoric_c2();
    let feasible = enumerate_sign_vectors(&g, Variant::KPrime).map_err(|e| e.to_string())?;
    let mut checked = 0;
    let mut unsteady = 0;
    for xi in [[1, 2], [2, 1], [1, 0], [0, 1], [-1, 1], [1, -1], [-1, -2], [3, -1], [1, 1]] {
        let xi = vec![qi(xi[0]), qi(xi[1])];
        for s in feasible.signs() {
            let want = oracle(&halfplanes(&g, s), &xi);
            let got = is_unsteady(&g, s, &xi).map_err(|e| e.to_string())?;
            ensure(got == want, format!("sigma {s} xi {xi:?}: is_unsteady {got}, oracle {want}"))?;
            checked += 1;
            unsteady += usize::from(want);
        }
    }
    ensure(unsteady > 0 && unsteady < checked, "the sweep never exercised both answers")?;
    Ok(format!("{} feasible sigma x 9 xi = {checked} agreements ({unsteady} unsteady)", feasible.len()))
}

fn grading() -> Outcome {
    let mut total = 0;
    for (name, g) in [
        ("gl2-running", presets::gl2_running()),
        ("hypertoric-c2", presets::hypertoric_c2()),
        ("klr-a2", presets::klr_a2()),
        ("nilhecke-3", presets::nilhecke(3)),
    ] {
        let rep = Steinberg::new(&g).and_then(|st| st.check_homogeneity()).map_err(|e| e.to_string())?;
        ensure(rep.all_passed(), format!("{name}: {}", rep.to_text()))?;
        total += rep.checks.len();
    }
    Ok(format!("{total} relation instances homogeneous"))
}

struct Criterion {
    name: &'static str,
    tolerance: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { name: "chamber census", tolerance: "exact match", limit: secs(1), run: chamber_census },
        Criterion { name: "Higgs relation suite", tolerance: "exact operators, 0 probe failures", limit: secs(30), run: higgs_relations },
        Criterion { name: "basis theorem", tolerance: "exact", limit: secs(60), run: basis_theorem },
        Criterion { name: "Coulomb GL(2) anchor", tolerance: "exact", limit: None, run: coulomb_anchor },
        Criterion { name: "rank-1 anchor", tolerance: "exact at h=1", limit: None, run: rank_one_anchor },
        Criterion { name: "Coulomb relation suite", tolerance: "exact", limit: secs(120), run: coulomb_relations },
        Criterion { name: "gamma verification", tolerance: "exact", limit: secs(120), run: gamma_functor },
        Criterion { name: "KLR specialization", tolerance: "exact", limit: None, run: klr_specialization },
        Criterion { name: "quiver expansion", tolerance: "exact", limit: None, run: quiver_expansion },
        Criterion { name: "unsteadiness oracle", tolerance: "exact agreement", limit: None, run: unsteady_oracle },
        Criterion { name: "grading homogeneity", tolerance: "exact", limit: None, run: grading },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
        });
        let took = start.elapsed();
        let res = match (res, c.limit) {
            (Ok(_), Some(l)) if took > l => Err(format!("took {:.2}s, limit {}s", took.as_secs_f64(), l.as_secs())),
            (r, _) => r,
        };
        let limit = c.limit.map(|l| format!(", limit {}s", l.as_secs())).unwrap_or_default();
        let (tag, detail) = match res {
            Ok(d) => ("PASS", d),
            Err(e) => {
                failed += 1;
                ("FAIL", e.lines().next().unwrap_or("").to_string())
            }
        };
        println!("{tag} {}: {detail} [{}, {:.2}s{limit}]", c.name, c.tolerance, took.as_secs_f64());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
