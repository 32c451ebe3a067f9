//! Generator words for `multiply`.
//!
//! Higgs side: `wall(T,S)`, `psiK(S)`, `[poly](S)`, `id(S)` with compact
//! sign vectors such as `++--`. Coulomb side: `r(P;Q)`, `u(P;Q)`,
//! `y(W;P)`, `[poly](P)`, `id(P)` with points `1/20,-1/20` and group words
//! W like `s1*t(1,0)`. Factors are separated by spaces; the rightmost
//! factor acts first.

use gaugealg::arrangement::SignVector;
use gaugealg::coulomb::{Coulomb, CoulombMorphism};
use gaugealg::gauge::GaugeDatum;
use gaugealg::morphism::compose_all;
use gaugealg::parse::{parse_point, parse_poly};
use gaugealg::steinberg::{Gen, HiggsMorphism, Steinberg};
use gaugealg::{Error, GroupElt, Result};

/// Split at top-level whitespace, keeping bracketed groups whole.
pub fn tokens(word: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for c in word.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Input(format!("unbalanced brackets in {word:?}")));
        }
        if c.is_whitespace() && depth == 0 {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(c);
        }
    }
    if depth != 0 {
        return Err(Error::Input(format!("unbalanced brackets in {word:?}")));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

/// `name(inner)` or `[poly](inner)`.
fn split_call(tok: &str) -> Result<(String, String)> {
    let bad = || Error::Input(format!("cannot read generator {tok:?}"));
    if let Some(rest) = tok.strip_prefix('[') {
        let close = rest.find("](").ok_or_else(bad)?;
        let inner = rest[close + 2..].strip_suffix(')').ok_or_else(bad)?;
        return Ok((format!("[{}]", &rest[..close]), inner.to_string()));
    }
    let open = tok.find('(').ok_or_else(bad)?;
    let inner = tok[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    Ok((tok[..open].to_string(), inner.to_string()))
}

fn is_identity_word(tokens: &[String]) -> bool {
    tokens.is_empty() || (tokens.len() == 1 && (tokens[0] == "1" || tokens[0] == "id"))
}

pub fn higgs_gen(g: &GaugeDatum, tok: &str) -> Result<Option<Gen>> {
    let (head, inner) = split_call(tok)?;
    let sv = |s: &str| -> Result<SignVector> {
        let v: SignVector = s.trim().parse()?;
        if v.len() != g.d() {
            return Err(Error::Input(format!("sign vector {s:?} needs {} entries", g.d())));
        }
        Ok(v)
    };
    if head == "id" {
        return Ok(None);
    }
    if head == "wall" {
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Input(format!("wall takes two compact sign vectors, got {inner:?}")));
        }
        return Ok(Some(Gen::Wall(sv(parts[0])?, sv(parts[1])?)));
    }
    if let Some(k) = head.strip_prefix("psi") {
        let k: usize = k.parse().map_err(|_| Error::Input(format!("bad root index in {tok:?}")))?;
        if k == 0 || k > g.roots.len() {
            return Err(Error::Input(format!("{tok:?}: the datum has {} positive roots", g.roots.len())));
        }
        return Ok(Some(Gen::Psi(k - 1, sv(&inner)?)));
    }
    if let Some(p) = head.strip_prefix('[').and_then(|h| h.strip_suffix(']')) {
        return Ok(Some(Gen::Mu(parse_poly(p, &g.var_names())?, sv(&inner)?)));
    }
    Err(Error::Input(format!("unknown Higgs generator {tok:?}")))
}

/// Evaluate a Higgs word; the identity word sits at `object`, or at the
/// first object when none is given.
pub fn higgs_word(st: &Steinberg, word: &str, object: Option<&SignVector>) -> Result<HiggsMorphism> {
    let toks = tokens(word)?;
    if is_identity_word(&toks) {
        let s = object
            .or_else(|| st.objects.first())
            .ok_or_else(|| Error::Input("the datum has no objects".into()))?;
        check_object(st, s)?;
        return Ok(st.identity(s));
    }
    let mut chain = Vec::new();
    for t in &toks {
        match higgs_gen(&st.gauge, t)? {
            Some(g) => {
                for s in [g.source(), g.target()] {
                    check_object(st, s)?;
                }
                chain.push(st.generator(&g)?)
            }
            None => {
                let (_, inner) = split_call(t)?;
                let s: SignVector = inner.parse()?;
                check_object(st, &s)?;
                chain.push(st.identity(&s));
            }
        }
    }
    compose_all(&chain)
}

fn check_object(st: &Steinberg, s: &SignVector) -> Result<()> {
    if !st.contains(s) {
        let known: Vec<String> = st.objects.iter().map(|o| o.compact()).collect();
        return Err(Error::Input(format!("{} is not an object; objects: {}", s.compact(), known.join(" "))));
    }
    Ok(())
}

/// `s1*t(1,0)*s1`, `1`, composed left to right.
pub fn group_word(c: &Coulomb, w: &str) -> Result<GroupElt> {
    let g = &c.gauge;
    let n = g.rank;
    let mut acc = GroupElt::identity(n);
    let w = w.trim();
    if w == "1" || w.is_empty() {
        return Ok(acc);
    }
    let mut rest = w;
    while !rest.is_empty() {
        let (factor, tail) = if rest.starts_with("t(") {
            let close = rest.find(')').ok_or_else(|| Error::Input(format!("bad translation in {w:?}")))?;
            (&rest[..=close], &rest[close + 1..])
        } else {
            match rest.find('*') {
                Some(i) => (&rest[..i], &rest[i..]),
                None => (rest, ""),
            }
        };
        let f = if let Some(body) = factor.strip_prefix("t(").and_then(|b| b.strip_suffix(')')) {
            let zeta: Vec<i64> = body
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Input(format!("translation {factor:?} must be integral"))))
                .collect::<Result<_>>()?;
            if zeta.len() != n {
                return Err(Error::Input(format!("translation {factor:?} needs {n} entries")));
            }
            c.translation(&zeta)
        } else if let Some(k) = factor.strip_prefix('s') {
            let k: usize = k.parse().map_err(|_| Error::Input(format!("bad Weyl generator {factor:?}")))?;
            let gens = g.generators();
            if k == 0 || k > gens.len() {
                return Err(Error::Input(format!("{factor:?}: the datum has {} Weyl generators", gens.len())));
            }
            gens[k - 1].clone()
        } else if factor == "1" {
            GroupElt::identity(n)
        } else {
            return Err(Error::Input(format!("unknown group factor {factor:?}")));
        };
        acc = acc.compose(&f);
        rest = tail.strip_prefix('*').unwrap_or(tail);
    }
    Ok(acc)
}

pub fn coulomb_gen(c: &Coulomb, tok: &str) -> Result<CoulombMorphism> {
    let n = c.gauge.rank;
    let (head, inner) = split_call(tok)?;
    let two = |inner: &str| -> Result<(String, String)> {
        let parts: Vec<&str> = inner.split(';').collect();
        if parts.len() != 2 {
            return Err(Error::Input(format!("{tok:?} takes two arguments separated by ';'")));
        }
        Ok((parts[0].to_string(), parts[1].to_string()))
    };
    match head.as_str() {
        "r" => {
            let (a, b) = two(&inner)?;
            c.r(&parse_point(&a, n)?, &parse_point(&b, n)?)
        }
        "u" => {
            let (a, b) = two(&inner)?;
            c.u(&parse_point(&a, n)?, &parse_point(&b, n)?)
        }
        "y" => {
            let (w, p) = two(&inner)?;
            c.y(&group_word(c, &w)?, &parse_point(&p, n)?)
        }
        "id" => c.identity(&parse_point(&inner, n)?),
        _ => match head.strip_prefix('[').and_then(|h| h.strip_suffix(']')) {
            Some(p) => c.mu(&parse_poly(p, &c.gauge.var_names())?, &parse_point(&inner, n)?),
            None => Err(Error::Input(format!("unknown Coulomb generator {tok:?}"))),
        },
    }
}

pub fn coulomb_word(c: &Coulomb, word: &str, point: Option<&[gaugealg::Q]>) -> Result<CoulombMorphism> {
    let toks = tokens(word)?;
    if is_identity_word(&toks) {
        let p = point.ok_or_else(|| Error::Input("the identity word needs point=<coordinates>".into()))?;
        return c.identity(p);
    }
    let chain = toks.iter().map(|t| coulomb_gen(c, t)).collect::<Result<Vec<_>>>()?;
    compose_all(&chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gaugealg::presets;

    #[test]
    fn tokenizing() {
        assert_eq!(tokens("wall(++++,+-++)  [g1 + h](+-++)").unwrap(), ["wall(++++,+-++)", "[g1 + h](+-++)"]);
        assert!(tokens("wall(++").is_err());
        assert!(tokens("a)").is_err());
        assert_eq!(split_call("[g1*h](++)").unwrap(), ("[g1*h]".to_string(), "++".to_string()));
    }

    #[test]
    fn higgs_words() {
        let g = presets::gl2_running();
        let st = Steinberg::new(&g).unwrap();
        let m = higgs_word(&st, "wall(++++,--++) wall(--++,++++)", None).unwrap();
        assert_eq!(m.source, "++++".parse().unwrap());
        let one = higgs_word(&st, "1", None).unwrap();
        assert!(one.op.is_one() && one.source == st.objects[0]);
        assert!(higgs_word(&st, "wall(-+++,++++)", None).is_err());
        assert!(higgs_word(&st, "psi2(++++)", None).is_err());
        let id = higgs_word(&st, "id(+-+-)", None).unwrap();
        assert!(id.op.is_one());
    }

    #[test]
    fn coulomb_words() {
        let g = presets::gl2_running();
        let c = Coulomb::new(&g);
        let z = coulomb_word(&c, "y(t(1,0);-19/20,-1/20) r(-19/20,-1/20;1/20,-1/20)", None).unwrap();
        let (_, want) = c.anchor_generators(&gaugealg::coulomb::gl2_base_point(), 0).unwrap();
        assert!(z.same_as(&want));
        assert_eq!(group_word(&c, "s1*s1").unwrap(), GroupElt::identity(2));
        assert!(group_word(&c, "t(1/2,0)").is_err());
        assert!(coulomb_word(&c, "q(1,2)", None).is_err());
    }
}
