//! Run configuration: one schema for JSON and TOML, every number an exact
//! rational written as a string "p/q".

use crate::gauge::{GaugeDatum, Root, WeightLine};
use crate::linalg::Mat;
use crate::presets;
use crate::quiver::{ClassNum, Quiver, QuiverData};
use crate::rational::{fmt_q, parse_q, Q};
use crate::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gauge: Option<GaugeConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<CommandConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputConfig>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeConfig {
    pub rank: usize,
    #[serde(default)]
    pub weights: Vec<WeightConfig>,
    #[serde(default)]
    pub roots: Vec<RootConfig>,
    #[serde(default)]
    pub weyl_generators: Vec<Vec<Vec<String>>>,
    pub xi: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl_cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightConfig {
    pub linear: Vec<String>,
    pub flavor_weight: String,
    pub epsilon: String,
    pub orbit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootConfig {
    pub linear: Vec<String>,
    pub coroot: Vec<String>,
    #[serde(default)]
    pub simple: bool,
}

/// Classes are written "a", "b*kappa" or "a + b*kappa".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverConfig {
    pub vertices: usize,
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
    pub v: Vec<usize>,
    #[serde(default)]
    pub w: Vec<usize>,
    #[serde(default)]
    pub z: Vec<Vec<String>>,
    #[serde(default)]
    pub framing: Vec<Vec<String>>,
    #[serde(default)]
    pub edge_flavor: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommandConfig {
    pub operation: String,
    #[serde(default)]
    pub args: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe_degree: Option<u32>,
}

fn rat(s: &str, what: &str) -> Result<Q> {
    parse_q(s).ok_or_else(|| Error::Input(format!("{what}: {s:?} is not a rational \"p/q\"")))
}

fn rats(v: &[String], what: &str) -> Result<Vec<Q>> {
    v.iter().map(|s| rat(s, what)).collect()
}

fn strs(v: &[Q]) -> Vec<String> {
    v.iter().map(fmt_q).collect()
}

pub fn parse_class(s: &str) -> Result<ClassNum> {
    let mut out = ClassNum::rational(Q::zero());
    for part in s.split('+') {
        let p = part.trim();
        if p.is_empty() {
            return Err(Error::Input(format!("class {s:?} has an empty term")));
        }
        if let Some(c) = p.strip_suffix("kappa") {
            let c = c.trim().trim_end_matches('*').trim();
            let coeff = match c {
                "" => Q::from_integer(1.into()),
                "-" => Q::from_integer((-1).into()),
                _ => rat(c, "kappa coefficient")?,
            };
            out.irr += coeff;
        } else {
            out.rat += rat(p, "class")?;
        }
    }
    Ok(out)
}

pub fn fmt_class(c: &ClassNum) -> String {
    match (c.rat.is_zero(), c.irr.is_zero()) {
        (_, true) => fmt_q(&c.rat),
        (true, false) => format!("{}*kappa", fmt_q(&c.irr)),
        (false, false) => format!("{} + {}*kappa", fmt_q(&c.rat), fmt_q(&c.irr)),
    }
}

impl GaugeConfig {
    pub fn from_gauge(g: &GaugeDatum) -> Self {
        GaugeConfig {
            rank: g.rank,
            weights: g
                .weights
                .iter()
                .map(|w| WeightConfig {
                    linear: strs(&w.linear),
                    flavor_weight: fmt_q(&w.flavor),
                    epsilon: fmt_q(&w.epsilon),
                    orbit: w.orbit,
                })
                .collect(),
            roots: g
                .roots
                .iter()
                .map(|r| RootConfig { linear: strs(&r.linear), coroot: strs(&r.coroot), simple: r.simple })
                .collect(),
            weyl_generators: g.weyl_generators.iter().map(|m| m.iter().map(|row| strs(row)).collect()).collect(),
            xi: strs(&g.xi),
            weyl_cap: Some(g.weyl_cap),
        }
    }

    pub fn to_gauge(&self) -> Result<GaugeDatum> {
        let weights = self
            .weights
            .iter()
            .map(|w| {
                Ok(WeightLine {
                    linear: rats(&w.linear, "weight")?,
                    flavor: rat(&w.flavor_weight, "flavor_weight")?,
                    epsilon: rat(&w.epsilon, "epsilon")?,
                    orbit: w.orbit,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let roots = self
            .roots
            .iter()
            .map(|r| Ok(Root { linear: rats(&r.linear, "root")?, coroot: rats(&r.coroot, "coroot")?, simple: r.simple }))
            .collect::<Result<Vec<_>>>()?;
        let gens = self
            .weyl_generators
            .iter()
            .map(|m| m.iter().map(|row| rats(row, "weyl generator")).collect::<Result<Mat>>())
            .collect::<Result<Vec<Mat>>>()?;
        let mut g = GaugeDatum::new(self.rank, weights, roots, gens, rats(&self.xi, "xi")?)?;
        if let Some(cap) = self.weyl_cap {
            g.weyl_cap = cap;
        }
        Ok(g)
    }
}

impl QuiverConfig {
    pub fn from_data(d: &QuiverData) -> Self {
        QuiverConfig {
            vertices: d.quiver.vertices,
            edges: d.quiver.edges.clone(),
            v: d.v.clone(),
            w: d.w.clone(),
            z: d.z.iter().map(|zs| zs.iter().map(fmt_class).collect()).collect(),
            framing: d.framing.iter().map(|fs| fs.iter().map(fmt_class).collect()).collect(),
            edge_flavor: d.edge_flavor.iter().map(fmt_class).collect(),
        }
    }

    pub fn to_data(&self) -> Result<QuiverData> {
        let nv = self.vertices;
        let classes = |v: &[Vec<String>], dims: &[usize]| -> Result<Vec<Vec<ClassNum>>> {
            if v.is_empty() {
                return Ok(dims.iter().map(|&d| vec![ClassNum::rational(Q::zero()); d]).collect());
            }
            v.iter().map(|xs| xs.iter().map(|s| parse_class(s)).collect()).collect()
        };
        let w = if self.w.is_empty() { vec![0; nv] } else { self.w.clone() };
        let edge_flavor = if self.edge_flavor.is_empty() {
            vec![ClassNum::rational(Q::zero()); self.edges.len()]
        } else {
            self.edge_flavor.iter().map(|s| parse_class(s)).collect::<Result<_>>()?
        };
        let d = QuiverData {
            quiver: Quiver { vertices: nv, edges: self.edges.clone() },
            z: classes(&self.z, &self.v)?,
            framing: classes(&self.framing, &w)?,
            v: self.v.clone(),
            w,
            edge_flavor,
        };
        d.validate()?;
        Ok(d)
    }
}

impl RunConfig {
    /// JSON when the text starts with '{', TOML otherwise.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::Input(format!("config: {e}")))
        } else {
            toml::from_str(text).map_err(|e| Error::Input(format!("config: {e}")))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Input(format!("config: {e}")))
    }

    pub fn from_preset(name: &str) -> Result<Self> {
        let p = presets::by_name(name)?;
        Ok(RunConfig {
            gauge: Some(GaugeConfig::from_gauge(&p.gauge)),
            quiver: p.quiver.as_ref().map(QuiverConfig::from_data),
            ..Default::default()
        })
    }

    /// The gauge datum: explicit block first, then the preset.
    pub fn gauge(&self) -> Result<GaugeDatum> {
        if let Some(g) = &self.gauge {
            return g.to_gauge();
        }
        if let Some(p) = &self.preset {
            return Ok(presets::by_name(p)?.gauge);
        }
        Err(Error::Input("config names neither a gauge block nor a preset".into()))
    }

    pub fn quiver(&self) -> Result<Option<QuiverData>> {
        if let Some(q) = &self.quiver {
            return q.to_data().map(Some);
        }
        if let Some(p) = &self.preset {
            return Ok(presets::by_name(p)?.quiver);
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn presets_round_trip() {
        for name in presets::PRESET_NAMES {
            let cfg = RunConfig::from_preset(name).unwrap();
            let want = presets::by_name(name).unwrap();
            let j = RunConfig::parse(&cfg.to_json()).unwrap();
            assert_eq!(j.gauge().unwrap(), want.gauge);
            let t = RunConfig::parse(&cfg.to_toml().unwrap()).unwrap();
            assert_eq!(t.gauge().unwrap(), want.gauge);
            assert_eq!(t.quiver().unwrap(), want.quiver);
        }
    }

    #[test]
    fn classes() {
        assert_eq!(parse_class("1/3").unwrap(), ClassNum::rational(q(1, 3)));
        let c = parse_class("1/2 + 2*kappa").unwrap();
        assert_eq!(c.rat, q(1, 2));
        assert_eq!(c.irr, q(2, 1));
        assert_eq!(parse_class("kappa").unwrap().irr, q(1, 1));
        assert_eq!(parse_class(&fmt_class(&c)).unwrap(), c);
        assert!(parse_class("x").is_err());
    }

    #[test]
    fn bad_input() {
        assert!(RunConfig::parse("{\"nope\": 1}").is_err());
        let cfg = RunConfig::parse("[gauge]\nrank = 1\nxi = [\"1\"]\n[[gauge.weights]]\nlinear = [\"1\"]\nflavor_weight = \"half\"\nepsilon = \"-1/2\"\norbit = 0\n").unwrap();
        assert!(cfg.gauge().is_err());
        assert!(RunConfig::default().gauge().is_err());
    }
}
