//! One function per subcommand. Each returns text, JSON and (for
//! `render`) SVG; the caller picks the format.

use crate::render::{self, Slice, View, Window};
use crate::words;
use gaugealg::arrangement::{enumerate_sign_vectors, is_unsteady, Enumeration, SignVector, Variant};
use gaugealg::bridge::{op_rank, quiver_round_trip, Bridge};
use gaugealg::coulomb::{gl2_base_point, Coulomb};
use gaugealg::gauge::GaugeDatum;
use gaugealg::parse::parse_point;
use gaugealg::poly::Poly;
use gaugealg::presets;
use gaugealg::probe::probes;
use gaugealg::quiver::{quiver_expand, QuiverData};
use gaugealg::rational::{fmt_q, parse_q, q, qi, Q};
use gaugealg::report::Report;
use gaugealg::steinberg::{describe_op, Steinberg};
use gaugealg::{Error, Result, TwistedOp};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write;

pub const OPERATIONS: [&str; 9] = [
    "chambers",
    "unsteady",
    "multiply",
    "verify-higgs",
    "verify-coulomb",
    "basis",
    "gamma-check",
    "quiver-expand",
    "render",
];

pub struct Ctx {
    pub gauge: GaugeDatum,
    pub quiver: Option<QuiverData>,
    pub args: BTreeMap<String, String>,
    pub seed: u64,
    pub probe_degree: u32,
}

impl Ctx {
    fn allow(&self, keys: &[&str]) -> Result<()> {
        for k in self.args.keys() {
            if !keys.contains(&k.as_str()) {
                let known = if keys.is_empty() { "none".to_string() } else { keys.join(", ") };
                return Err(Error::Input(format!("unknown argument {k:?}; accepted: {known}")));
            }
        }
        Ok(())
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.args.get(key).map(|s| s.as_str())
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        match self.get(key) {
            None => Ok(default),
            Some(s) => s.parse().map_err(|_| Error::Input(format!("{key}={s:?} is not a count"))),
        }
    }

    fn point(&self, key: &str) -> Result<Option<Vec<Q>>> {
        self.get(key).map(|s| parse_point(s, self.gauge.rank)).transpose()
    }

    fn q(&self, key: &str) -> Result<Option<Q>> {
        self.get(key)
            .map(|s| parse_q(s).ok_or_else(|| Error::Input(format!("{key}={s:?} is not rational"))))
            .transpose()
    }
}

pub struct CommandOutput {
    pub text: String,
    pub json: Value,
    pub svg: Option<String>,
    pub passed: bool,
}

impl CommandOutput {
    fn info(text: String, json: Value) -> Self {
        CommandOutput { text, json, svg: None, passed: true }
    }
}

fn report_output(command: &str, report: &Report, extra: &str, extra_json: Value) -> CommandOutput {
    let mut text = String::new();
    text.push_str(extra);
    text.push_str(&report.to_text());
    let summary: BTreeMap<String, Value> = report
        .tally()
        .into_iter()
        .map(|(k, (ok, total))| (k, json!({"passed": ok, "total": total})))
        .collect();
    let json = json!({
        "command": command,
        "title": report.title,
        "passed": report.all_passed(),
        "summary": summary,
        "details": extra_json,
        "checks": report.checks,
    });
    CommandOutput { text, json, svg: None, passed: report.all_passed() }
}

pub fn dispatch(op: &str, ctx: &Ctx) -> Result<CommandOutput> {
    match op {
        "chambers" => chambers(ctx),
        "unsteady" => unsteady(ctx),
        "multiply" => multiply(ctx),
        "verify-higgs" => verify_higgs(ctx),
        "verify-coulomb" => verify_coulomb(ctx),
        "basis" => basis(ctx),
        "gamma-check" => gamma_check(ctx),
        "quiver-expand" => quiver_expand_cmd(ctx),
        "render" => render_cmd(ctx),
        _ => Err(Error::Input(format!("unknown subcommand {op:?}"))),
    }
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::I => "I",
        Variant::IPrime => "I'",
        Variant::K => "K",
        Variant::KPrime => "K'",
        Variant::CompatPairs => "compat",
    }
}

fn chambers(ctx: &Ctx) -> Result<CommandOutput> {
    ctx.allow(&["variant", "flavor"])?;
    let variant: Variant = ctx.get("variant").unwrap_or("I'").parse()?;
    let g = match ctx.get("flavor").unwrap_or("given") {
        "given" => ctx.gauge.clone(),
        "trivial" => ctx.gauge.with_trivial_flavor(),
        other => return Err(Error::Input(format!("flavor={other:?}: expected given or trivial"))),
    };
    let e = enumerate_sign_vectors(&g, variant)?;
    let rows: Vec<String> = match &e {
        Enumeration::Signs(v) => v.iter().map(|s| s.to_string()).collect(),
        Enumeration::Pairs(v) => v
            .iter()
            .map(|(s, w)| {
                let word: Vec<String> = w.iter().map(|k| format!("s{}", k + 1)).collect();
                format!("{s} {}", if word.is_empty() { "1".into() } else { word.join("*") })
            })
            .collect(),
    };
    let mut text = format!("variant {}: {} sign vectors\n", variant_name(variant), rows.len());
    for r in &rows {
        let _ = writeln!(text, "{r}");
    }
    Ok(CommandOutput::info(text, json!({"command": "chambers", "variant": variant_name(variant), "count": rows.len(), "sign_vectors": rows})))
}

fn unsteady(ctx: &Ctx) -> Result<CommandOutput> {
    ctx.allow(&["variant", "xi"])?;
    let variant: Variant = ctx.get("variant").unwrap_or("K'").parse()?;
    let xi = ctx.point("xi")?.unwrap_or_else(|| ctx.gauge.xi.clone());
    let e = enumerate_sign_vectors(&ctx.gauge, variant)?;
    if e.signs().is_empty() && !e.is_empty() {
        return Err(Error::Input("unsteady takes a sign-vector variant, not compat".into()));
    }
    let mut text = format!("xi = ({})\n", xi.iter().map(fmt_q).collect::<Vec<_>>().join(","));
    let mut rows = BTreeMap::new();
    let mut count = 0;
    for s in e.signs() {
        let u = is_unsteady(&ctx.gauge, s, &xi)?;
        count += usize::from(u);
        let _ = writeln!(text, "{s} {}", if u { "unsteady" } else { "steady" });
        rows.insert(s.to_string(), u);
    }
    let _ = writeln!(text, "{count} of {} unsteady", e.len());
    Ok(CommandOutput::info(
        text,
        json!({"command": "unsteady", "variant": variant_name(variant), "xi": xi.iter().map(fmt_q).collect::<Vec<_>>(), "unsteady": rows, "count": count}),
    ))
}

fn multiply(ctx: &Ctx) -> Result<CommandOutput> {
    ctx.allow(&["side", "word", "object", "point"])?;
    let word = ctx.get("word").unwrap_or("1");
    let g = &ctx.gauge;
    let names = g.var_names();
    match ctx.get("side").unwrap_or("higgs") {
        "higgs" => {
            let st = Steinberg::new(g)?;
            let object: Option<SignVector> = ctx.get("object").map(|s| s.parse()).transpose()?;
            let m = words::higgs_word(&st, word, object.as_ref())?;
            let identity = m.source == m.target && m.op.is_one();
            let nf = st.express_in_basis(&m)?;
            let terms: Vec<(String, String)> = nf
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| {
                    (format!("tilde_wall({},{},{})", m.target.compact(), m.source.compact(), g.name_of(&w.g)), c.fmt_with(&names))
                })
                .collect();
            Ok(product_output("higgs", &m.target.compact(), &m.source.compact(), &describe_op(g, &m.op), identity, &terms))
        }
        "coulomb" => {
            let c = Coulomb::new(g);
            let point = match ctx.point("point")? {
                Some(p) => p,
                None => default_point(&c)?,
            };
            let m = words::coulomb_word(&c, word, Some(&point))?;
            let identity = m.source == m.target && m.op.is_one();
            let nf = c.normal_form(&m)?;
            let pt = |x: &[Q]| x.iter().map(fmt_q).collect::<Vec<_>>().join(",");
            let terms: Vec<(String, String)> = nf
                .iter()
                .filter(|(_, p)| !p.is_zero())
                .map(|(w, p)| {
                    let wp = w.act_point(&m.source);
                    (format!("tilde_r({};{}) y[{}]", pt(&m.target), pt(&wp), g.name_of(w)), p.fmt_with(&names))
                })
                .collect();
            Ok(product_output("coulomb", &pt(&m.target), &pt(&m.source), &describe_op(g, &m.op), identity, &terms))
        }
        other => Err(Error::Input(format!("side={other:?}: expected higgs or coulomb"))),
    }
}

fn product_output(side: &str, target: &str, source: &str, op: &str, identity: bool, terms: &[(String, String)]) -> CommandOutput {
    let mut text = format!("side: {side}\nsource: {source}\ntarget: {target}\noperator: {op}\n");
    if identity {
        text.push_str("identity\n");
    }
    text.push_str("normal form:\n");
    if terms.is_empty() {
        text.push_str("  0\n");
    }
    for (basis, coeff) in terms {
        if side == "higgs" {
            let _ = writeln!(text, "  {basis} * ({coeff})");
        } else {
            let _ = writeln!(text, "  ({coeff}) * {basis}");
        }
    }
    let nf: Vec<Value> = terms.iter().map(|(b, c)| json!({"basis": b, "coefficient": c})).collect();
    CommandOutput::info(
        text,
        json!({"command": "multiply", "side": side, "source": source, "target": target, "operator": op, "identity": identity, "normal_form": nf}),
    )
}

fn verify_higgs(ctx: &Ctx) -> Result<CommandOutput> {
    ctx.allow(&["probes"])?;
    let count = ctx.usize_or("probes", 50)?;
    let st = Steinberg::new(&ctx.gauge)?;
    let mut rep = st.verify_relations(count, ctx.probe_degree, ctx.seed)?;
    rep.title = "Higgs relations".into();
    for mut c in st.check_homogeneity()?.checks {
        c.schema = format!("homogeneous {}", c.schema);
        rep.checks.push(c);
    }
    rep.extend(st.stein_k_report()?);
    let objects: Vec<String> = st.objects.iter().map(|s| s.compact()).collect();
    let extra = format!("objects: {}\nprobes: {count} of degree <= {} (seed {})\n", objects.join(" "), ctx.probe_degree, ctx.seed);
    Ok(report_output("verify-higgs", &rep, &extra, json!({"objects": objects, "probes": count})))
}

/// A generic base point: the fixed GL(2) point, the origin, or a small
/// irregular point.
pub fn default_point(c: &Coulomb) -> Result<Vec<Q>> {
    let n = c.gauge.rank;
    let mut cands = Vec::new();
    if n == 2 {
        cands.push(gl2_base_point());
    }
    cands.push(vec![Q::zero(); n]);
    for k in 1..20i64 {
        cands.push((0..n as i64).map(|j| q(if j % 2 == 0 { 1 } else { -1 } * (j + 1), 20 * k + 3 * j + 1)).collect());
    }
    cands
        .into_iter()
        .find(|p| c.check_generic(p).is_ok())
        .ok_or_else(|| Error::Domain("no generic base point found; pass point=".into()))
}

fn scalar(op: &TwistedOp) -> Option<Poly> {
    let terms: Vec<_> = op.terms().collect();
    match terms.as_slice() {
        [] => Some(Poly::zero(op.rank() + 1)),
        [(g, f)] if g.is_identity() => f.as_poly().cloned(),
        _ => None,
    }
}

fn verify_coulomb(ctx: &Ctx) -> Result<CommandOutput> {
    ctx.allow(&["radius", "probes", "point"])?;
    let g = &ctx.gauge;
    let c = Coulomb::new(g);
    let radius = ctx.q("radius")?.unwrap_or_else(|| q(1, 2));
    let count = ctx.usize_or("probes", 5)?;
    let roster = c.roster(&radius)?;
    let ps = probes(ctx.seed, count, g.nvars(), g.rank, ctx.probe_degree);
    let mut rep = c.verify_relations(&roster, &ps)?;
    rep.title = "Coulomb relations".into();

    let base = match ctx.point("point")? {
        Some(p) => p,
        None => default_point(&c)?,
    };
    let names = g.var_names();
    let mut extra = format!(
        "roster: {} points within {}\nbase point: ({})\n",
        roster.len(),
        fmt_q(&radius),
        base.iter().map(fmt_q).collect::<Vec<_>>().join(",")
    );
    let mut anchors = BTreeMap::new();
    let gamma = |j: usize| g.gamma(j);
    let h = g.h();
    let is_rank1 = g.rank == 1 && g.roots.is_empty() && g.weights.len() == 1 && g.weights[0].linear[0].is_one();
    for j in 0..g.rank {
        let (w, z) = c.anchor_generators(&base, j)?;
        let zw = scalar(&z.then_after(&w)?.op);
        let wz = scalar(&w.then_after(&z)?.op);
        let show = |p: &Option<Poly>| p.as_ref().map(|p| p.fmt_with(&names)).unwrap_or_else(|| "not scalar".into());
        let _ = writeln!(extra, "z{0}w{0} = {1}\nw{0}z{0} = {2}", j + 1, show(&zw), show(&wz));
        anchors.insert(format!("z{0}w{0}", j + 1), show(&zw));
        anchors.insert(format!("w{0}z{0}", j + 1), show(&wz));
        if j == 0 && *g == presets::gl2_running() && base == gl2_base_point() {
            let g1 = gamma(0);
            let want_zw = &g1 * &(&g1 - &h.scale(&qi(2)));
            let want_wz = &(&g1 + &h) * &(&g1 - &h);
            rep.push("anchor", "z1w1 = g1*(g1 - 2*h)", zw.as_ref() == Some(&want_zw), show(&zw));
            rep.push("anchor", "w1z1 = (g1 + h)*(g1 - h)", wz.as_ref() == Some(&want_wz), show(&wz));
        }
        if is_rank1 && base.iter().all(|x| x.is_zero()) {
            // flavor weight a = −f; at h = 1: r⁻r⁺ = t − a − 1, r⁺r⁻ = t − a
            let a = -g.weights[0].flavor.clone();
            let t = gamma(0).specialize_last(&Q::one());
            let at1 = |p: &Option<Poly>| p.as_ref().map(|p| p.specialize_last(&Q::one()));
            let want_mm = &t - &Poly::constant(t.nvars(), &a + Q::one());
            let want_pp = &t - &Poly::constant(t.nvars(), a.clone());
            rep.push("anchor", format!("r-r+ = t - ({}) - 1 at h=1", fmt_q(&a)), at1(&zw) == Some(want_mm), show(&zw));
            rep.push("anchor", format!("r+r- = t - ({}) at h=1", fmt_q(&a)), at1(&wz) == Some(want_pp), show(&wz));
        }
    }
    Ok(report_output("verify-coulomb", &rep, &extra, json!({"roster": roster.len(), "anchors": anchors})))
}

fn basis(ctx: &Ctx) -> Result<CommandOutput> {
    ctx.allow(&["spanning"])?;
    let spanning = match ctx.get("spanning").unwrap_or("true") {
        "true" => true,
        "false" => false,
        s => return Err(Error::Input(format!("spanning={s:?}: expected true or false"))),
    };
    let g = &ctx.gauge;
    let st = Steinberg::new(g)?;
    let ws = g.weyl_group()?;
    let mut rep = Report::new("Higgs basis");
    let mut point: Vec<Q> = (0..g.rank).map(|j| q(5 + 2 * j as i64, 13 + 7 * j as i64)).collect();
    point.push(Q::one());
    for s in &st.objects {
        for sp in &st.objects {
            let label = format!("{} <- {}", s.compact(), sp.compact());
            let c = st.basis_independence(s, sp)?;
            rep.push("triangular", label.clone(), c.triangular, "");
            rep.push("diagonal", label.clone(), c.diagonal_nonzero, "");
            let ops = ws.iter().map(|w| Ok(st.tilde_wall(s, sp, &w.g)?.op)).collect::<Result<Vec<_>>>()?;
            let r = op_rank(&ops, &point);
            rep.push("rank=#W", label, r == Some(ws.len()), format!("rank {r:?}, #W = {}", ws.len()));
        }
    }
    if spanning {
        rep.extend(st.spanning_report()?);
    }
    let extra = format!("objects: {} ({} pairs), #W = {}\n", st.objects.len(), st.objects.len().pow(2), ws.len());
    Ok(report_output("basis", &rep, &extra, json!({"objects": st.objects.len(), "weyl_order": ws.len()})))
}

fn gamma_check(ctx: &Ctx) -> Result<CommandOutput> {
    ctx.allow(&["rho", "pairs"])?;
    let rho = ctx.point("rho")?.unwrap_or_else(|| vec![Q::zero(); ctx.gauge.rank]);
    let pairs = ctx.usize_or("pairs", 20)?;
    let b = Bridge::new(&ctx.gauge, &rho)?;
    let rep = b.verify(ctx.seed, pairs)?;
    let rho_s: Vec<String> = rho.iter().map(fmt_q).collect();
    let extra = format!(
        "rho = ({})\nLevi datum: {} weights, {} roots, #W_l = {}\n",
        rho_s.join(","),
        b.levi.gauge.weights.len(),
        b.levi.gauge.roots.len(),
        b.levi.weyl_order()
    );
    Ok(report_output("gamma-check", &rep, &extra, json!({"rho": rho_s, "weyl_order_levi": b.levi.weyl_order()})))
}

fn quiver_expand_cmd(ctx: &Ctx) -> Result<CommandOutput> {
    ctx.allow(&["eps"])?;
    let data = ctx.quiver.as_ref().ok_or_else(|| Error::Input("quiver-expand needs a quiver block or a quiver preset".into()))?;
    let eps = ctx.q("eps")?.unwrap_or_else(|| q(-1, 2));
    let x = quiver_expand(data)?;
    let mut text = String::new();
    let verts: Vec<String> = x.vertices.iter().map(|(i, c)| format!("{}@{}", i + 1, c)).collect();
    let _ = writeln!(text, "vertices: {}", verts.join(" "));
    let _ = writeln!(text, "v: {:?}\nw: {:?}", x.v, x.w);
    let edges: Vec<String> = x.edges.iter().map(|(a, b, e)| format!("{}->{} (edge {})", a + 1, b + 1, e + 1)).collect();
    let _ = writeln!(text, "edges: {}", if edges.is_empty() { "none".into() } else { edges.join(", ") });
    let mut comps = Vec::new();
    for comp in x.components() {
        let shape = if x.is_cycle(&comp) {
            "cycle"
        } else if x.is_segment(&comp) {
            "segment"
        } else {
            "other"
        };
        let members: Vec<String> = comp.iter().map(|k| (k + 1).to_string()).collect();
        let _ = writeln!(text, "component {{{}}}: {shape}", members.join(","));
        comps.push(json!({"vertices": comp.iter().map(|k| k + 1).collect::<Vec<_>>(), "shape": shape}));
    }
    let shape = if x.is_single_cycle() {
        "single cycle"
    } else if x.is_union_of_segments() {
        "union of segments"
    } else {
        "mixed"
    };
    let _ = writeln!(text, "shape: {shape}");
    let mut rep = Report::new("quiver expansion");
    rep.push("levi-round-trip", format!("eps {}", fmt_q(&eps)), quiver_round_trip(data, &eps, &eps)?, "");
    let json = json!({"vertices": verts, "v": x.v, "w": x.w, "edges": edges, "components": comps, "shape": shape});
    Ok(report_output("quiver-expand", &rep, &text, json))
}

fn render_cmd(ctx: &Ctx) -> Result<CommandOutput> {
    ctx.allow(&["view", "window", "origin", "u", "v", "cols", "rows"])?;
    let g = &ctx.gauge;
    let view = match ctx.get("view").unwrap_or("plain") {
        "plain" => View::Plain,
        "unrolled" => View::Unrolled,
        s => return Err(Error::Input(format!("view={s:?}: expected plain or unrolled"))),
    };
    let window = match ctx.get("window") {
        None => Window::square(if view == View::Plain { qi(3) } else { q(5, 2) }),
        Some(s) => {
            let v = parse_point(s, 2)?;
            if v[0] >= v[1] {
                return Err(Error::Input(format!("window={s:?}: need lo < hi")));
            }
            Window { lo: [v[0].clone(), v[0].clone()], hi: [v[1].clone(), v[1].clone()] }
        }
    };
    let slice = match (ctx.point("u")?, ctx.point("v")?) {
        (Some(u), Some(v)) => Slice { origin: ctx.point("origin")?.unwrap_or_else(|| vec![Q::zero(); g.rank]), u, v },
        (None, None) => {
            let mut s = Slice::standard(g.rank)?;
            if let Some(o) = ctx.point("origin")? {
                s.origin = o;
            }
            s
        }
        _ => return Err(Error::Input("give both u= and v=".into())),
    };
    let pic = render::picture(g, &slice, view, window)?;
    let cols = ctx.usize_or("cols", 72)?;
    let rows = ctx.usize_or("rows", 36)?;
    if cols == 0 || rows == 0 {
        return Err(Error::Input("cols and rows must be positive".into()));
    }
    let mut text = render::ascii(&pic, cols, rows);
    let _ = writeln!(text, "matter lines: {}, Coxeter lines: {}", pic.count(render::Kind::Matter), pic.count(render::Kind::Coxeter));
    Ok(CommandOutput { text, json: render::to_json(&pic), svg: Some(render::svg(&pic)), passed: true })
}
