//! Shipped gauge data.

use crate::gauge::{GaugeDatum, Root, WeightLine};
use crate::quiver::{self, ClassNum, Quiver, QuiverData};
use crate::rational::{q, qi, Q};
use crate::{Error, Result};
use num_traits::Zero;

pub const PRESET_NAMES: [&str; 5] = ["gl2-running", "rank1-dmodule", "hypertoric-c2", "klr-a2", "jordan-k13"];

fn line(linear: &[i64], flavor: Q, epsilon: Q, orbit: usize) -> WeightLine {
    WeightLine { linear: linear.iter().map(|&x| qi(x)).collect(), flavor, epsilon, orbit }
}

fn swap2() -> Vec<Vec<Q>> {
    vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]]
}

/// GL(2) on C^2 ⊕ C^2 with flavor (1,1,−1,−1), ε = (−1/3,−1/3,−2/3,−2/3).
pub fn gl2_running() -> GaugeDatum {
    gl2_with(&[1, 1, -1, -1], q(-1, 3), q(-2, 3))
}

/// The running example with trivial flavor; requires ε1 > ε2.
pub fn gl2_trivial_flavor() -> GaugeDatum {
    gl2_with(&[0, 0, 0, 0], q(-1, 3), q(-2, 3))
}

fn gl2_with(f: &[i64; 4], e1: Q, e2: Q) -> GaugeDatum {
    let weights = vec![
        line(&[1, 0], qi(f[0]), e1.clone(), 0),
        line(&[0, 1], qi(f[1]), e1, 0),
        line(&[1, 0], qi(f[2]), e2.clone(), 1),
        line(&[0, 1], qi(f[3]), e2, 1),
    ];
    let root = Root { linear: vec![qi(1), qi(-1)], coroot: vec![qi(1), qi(-1)], simple: true };
    GaugeDatum::new(2, weights, vec![root], vec![swap2()], vec![qi(1), qi(1)]).expect("gl2 preset is valid")
}

/// C* on C with weight 1, ε = −1/2 and no flavor.
pub fn line_datum() -> GaugeDatum {
    GaugeDatum::new(1, vec![line(&[1], qi(0), q(-1, 2), 0)], vec![], vec![], vec![qi(1)])
        .expect("line preset is valid")
}

/// C* on C where the flavor acts with weight a (so f = −a).
pub fn rank1_dmodule(a: Q) -> GaugeDatum {
    GaugeDatum::new(1, vec![line(&[1], -a, q(-1, 2), 0)], vec![], vec![], vec![qi(1)])
        .expect("rank-1 preset is valid")
}

/// (C*)^2 on C^3 with weights e1, e2, e1+e2.
pub fn hypertoric_c2() -> GaugeDatum {
    let weights = vec![
        line(&[1, 0], qi(0), q(-1, 4), 0),
        line(&[0, 1], qi(0), q(-1, 2), 1),
        line(&[1, 1], qi(1), q(-3, 4), 2),
    ];
    GaugeDatum::new(2, weights, vec![], vec![], vec![qi(1), qi(2)]).expect("hypertoric preset is valid")
}

pub fn klr_a2_quiver() -> QuiverData {
    quiver::unframed(Quiver { vertices: 2, edges: vec![(0, 1)] }, vec![1, 1])
}

pub fn klr_a2() -> GaugeDatum {
    quiver::quiver_gauge(&klr_a2_quiver(), &q(-1, 2), &q(-1, 2)).expect("klr-a2 preset is valid")
}

/// One vertex, no edges: GL(n) with V = 0.
pub fn nilhecke(n: usize) -> GaugeDatum {
    quiver::quiver_gauge(&quiver::unframed(Quiver { vertices: 1, edges: vec![] }, vec![n]), &q(-1, 2), &q(-1, 2))
        .expect("nilHecke datum is valid")
}

pub fn jordan_k13_quiver() -> QuiverData {
    quiver::jordan(3, ClassNum::rational(q(1, 3)), quiver::thirds(3), ClassNum::rational(Q::zero()))
}

pub fn jordan_k13() -> GaugeDatum {
    quiver::quiver_gauge(&jordan_k13_quiver(), &q(-1, 2), &q(-1, 2)).expect("jordan preset is valid")
}

#[derive(Clone, Debug)]
pub struct Preset {
    pub name: &'static str,
    pub gauge: GaugeDatum,
    pub quiver: Option<QuiverData>,
}

pub fn by_name(name: &str) -> Result<Preset> {
    let (name, gauge, quiver) = match name {
        "gl2-running" => ("gl2-running", gl2_running(), None),
        "rank1-dmodule" => ("rank1-dmodule", rank1_dmodule(qi(0)), None),
        "hypertoric-c2" => ("hypertoric-c2", hypertoric_c2(), None),
        "klr-a2" => ("klr-a2", klr_a2(), Some(klr_a2_quiver())),
        "jordan-k13" => ("jordan-k13", jordan_k13(), Some(jordan_k13_quiver())),
        _ => {
            return Err(Error::Input(format!(
                "unknown preset {name:?}; known: {}",
                PRESET_NAMES.join(", ")
            )))
        }
    };
    Ok(Preset { name, gauge, quiver })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_load() {
        for n in PRESET_NAMES {
            let p = by_name(n).unwrap();
            p.gauge.validate().unwrap();
        }
        assert!(by_name("nope").is_err());
        assert_eq!(nilhecke(3).weyl_order(), 6);
    }
}
