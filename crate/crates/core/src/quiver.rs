//! Quiver gauge data and the expanded graph attached to a coset of t_Z.

use crate::gauge::{GaugeDatum, Root, WeightLine};
use crate::linalg::{identity, Mat};
use crate::rational::{fmt_q, q, Q};
use crate::{Error, Result};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The number `rat + irr·κ` for one fixed irrational κ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassNum {
    pub rat: Q,
    pub irr: Q,
}

impl ClassNum {
    pub fn rational(x: Q) -> Self {
        ClassNum { rat: x, irr: Q::zero() }
    }

    pub fn kappa(coeff: Q) -> Self {
        ClassNum { rat: Q::zero(), irr: coeff }
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn sub(&self, o: &ClassNum) -> ClassNum {
        ClassNum { rat: &self.rat - &o.rat, irr: &self.irr - &o.irr }
    }

    pub fn is_integer(&self) -> bool {
        self.irr.is_zero() && self.rat.is_integer()
    }

    pub fn congruent(&self, o: &ClassNum) -> bool {
        self.sub(o).is_integer()
    }

    /// Canonical representative of the class mod Z (rational part in [0,1)).
    pub fn reduce(&self) -> ClassNum {
        ClassNum { rat: &self.rat - self.rat.floor(), irr: self.irr.clone() }
    }
}

impl fmt::Display for ClassNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            write!(f, "{}", fmt_q(&self.rat))
        } else if self.rat.is_zero() {
            write!(f, "{}k", fmt_q(&self.irr))
        } else {
            write!(f, "{}+{}k", fmt_q(&self.rat), fmt_q(&self.irr))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Dimension vectors plus the flavor and coset choices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverData {
    pub quiver: Quiver,
    pub v: Vec<usize>,
    pub w: Vec<usize>,
    /// z_{i,m}, one class per gauge coordinate.
    pub z: Vec<Vec<ClassNum>>,
    /// φ_{i,m}, one per framing coordinate.
    pub framing: Vec<Vec<ClassNum>>,
    pub edge_flavor: Vec<ClassNum>,
}

impl QuiverData {
    pub fn validate(&self) -> Result<()> {
        let nv = self.quiver.vertices;
        if self.v.len() != nv || self.w.len() != nv || self.z.len() != nv || self.framing.len() != nv {
            return Err(Error::Input("dimension vectors must have one entry per vertex".into()));
        }
        if self.edge_flavor.len() != self.quiver.edges.len() {
            return Err(Error::Input("one flavor per edge is required".into()));
        }
        for i in 0..nv {
            if self.z[i].len() != self.v[i] || self.framing[i].len() != self.w[i] {
                return Err(Error::Input(format!("vertex {} has mismatched class lists", i + 1)));
            }
        }
        if self.quiver.edges.iter().any(|&(a, b)| a >= nv || b >= nv) {
            return Err(Error::Input("edge endpoint out of range".into()));
        }
        Ok(())
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0];
        for &d in &self.v {
            off.push(off.last().unwrap() + d);
        }
        off
    }
}

fn unit(n: usize, k: usize, c: i64) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[k] = Q::from_integer(c.into());
    v
}

/// G = ∏ GL(v_i) acting on edge Homs and framing Homs.  Diagonal loop
/// weights are zero and are dropped.
pub fn quiver_gauge(data: &QuiverData, eps_edge: &Q, eps_frame: &Q) -> Result<GaugeDatum> {
    data.validate()?;
    let off = data.offsets();
    let n = *off.last().unwrap();
    if n == 0 {
        return Err(Error::Input("total dimension must be positive".into()));
    }
    let rat = |c: &ClassNum| -> Result<Q> {
        if c.is_rational() {
            Ok(c.rat.clone())
        } else {
            Err(Error::Input("gauge data need rational flavors".into()))
        }
    };
    let mut weights = Vec::new();
    for (e, &(i, j)) in data.quiver.edges.iter().enumerate() {
        let f = rat(&data.edge_flavor[e])?;
        for k in 0..data.v[i] {
            for m in 0..data.v[j] {
                let mut lin = unit(n, off[j] + m, 1);
                lin[off[i] + k] -= Q::one();
                if lin.iter().all(Q::is_zero) {
                    continue;
                }
                weights.push(WeightLine { linear: lin, flavor: f.clone(), epsilon: eps_edge.clone(), orbit: e });
            }
        }
    }
    let mut orbit = data.quiver.edges.len();
    for i in 0..data.quiver.vertices {
        for m in 0..data.w[i] {
            let f = rat(&data.framing[i][m])?;
            for k in 0..data.v[i] {
                weights.push(WeightLine {
                    linear: unit(n, off[i] + k, -1),
                    flavor: f.clone(),
                    epsilon: eps_frame.clone(),
                    orbit,
                });
            }
            orbit += 1;
        }
    }
    let mut roots = Vec::new();
    let mut gens: Vec<Mat> = Vec::new();
    for i in 0..data.quiver.vertices {
        for k in 0..data.v[i] {
            for l in k + 1..data.v[i] {
                let mut lin = unit(n, off[i] + l, 1);
                lin[off[i] + k] = -Q::one();
                roots.push(Root { linear: lin.clone(), coroot: lin, simple: l == k + 1 });
            }
        }
    }
    // simple roots first, in generator order
    roots.sort_by_key(|r| !r.simple);
    for r in roots.iter().filter(|r| r.simple) {
        let mut m = identity(n);
        let a = r.linear.iter().position(|x| x == &-Q::one()).unwrap();
        let b = r.linear.iter().position(|x| x.is_one()).unwrap();
        m[a][a] = Q::zero();
        m[b][b] = Q::zero();
        m[a][b] = Q::one();
        m[b][a] = Q::one();
        gens.push(m);
    }
    GaugeDatum::new(n, weights, roots, gens, vec![Q::one(); n])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedQuiver {
    /// (original vertex, class of z mod Z).
    pub vertices: Vec<(usize, ClassNum)>,
    /// (source, target, original edge).
    pub edges: Vec<(usize, usize, usize)>,
    pub v: Vec<usize>,
    pub w: Vec<usize>,
}

impl ExpandedQuiver {
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            if a != b {
                adj[b].push(a);
            }
        }
        adj
    }

    /// Connected components, each a sorted vertex list.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for s in 0..self.vertices.len() {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            let mut comp = Vec::new();
            seen[s] = true;
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    fn component_edges(&self, comp: &[usize]) -> usize {
        self.edges.iter().filter(|(a, _, _)| comp.contains(a)).count()
    }

    /// A cycle: connected, every vertex of degree 2, as many edges as vertices.
    pub fn is_cycle(&self, comp: &[usize]) -> bool {
        let adj = self.adjacency();
        let deg_ok = comp.iter().all(|&x| {
            let loops = self.edges.iter().filter(|(a, b, _)| *a == x && *b == x).count();
            adj[x].len() + loops == 2
        });
        deg_ok && self.component_edges(comp) == comp.len()
    }

    /// A segment: a tree path (possibly a single vertex).
    pub fn is_segment(&self, comp: &[usize]) -> bool {
        let adj = self.adjacency();
        self.component_edges(comp) + 1 == comp.len() && comp.iter().all(|&x| adj[x].len() <= 2)
    }

    pub fn is_single_cycle(&self) -> bool {
        let c = self.components();
        c.len() == 1 && self.is_cycle(&c[0])
    }

    pub fn is_union_of_segments(&self) -> bool {
        self.components().iter().all(|c| self.is_segment(c))
    }
}

pub fn quiver_expand(data: &QuiverData) -> Result<ExpandedQuiver> {
    data.validate()?;
    let mut vertices: Vec<(usize, ClassNum)> = Vec::new();
    for i in 0..data.quiver.vertices {
        for z in &data.z[i] {
            let c = z.reduce();
            if !vertices.contains(&(i, c.clone())) {
                vertices.push((i, c));
            }
        }
    }
    vertices.sort();
    let v = vertices
        .iter()
        .map(|(i, c)| data.z[*i].iter().filter(|z| z.congruent(c)).count())
        .collect();
    let w = vertices
        .iter()
        .map(|(i, c)| data.framing[*i].iter().filter(|p| p.congruent(c)).count())
        .collect();
    let mut edges = Vec::new();
    for (e, &(i, j)) in data.quiver.edges.iter().enumerate() {
        for (a, (vi, z)) in vertices.iter().enumerate() {
            for (b, (vj, u)) in vertices.iter().enumerate() {
                if *vi == i && *vj == j && data.edge_flavor[e].congruent(&z.sub(u)) {
                    edges.push((a, b, e));
                }
            }
        }
    }
    Ok(ExpandedQuiver { vertices, edges, v, w })
}

/// The expanded quiver as quiver data with z and φ taken in (rational) classes.
pub fn expanded_as_data(x: &ExpandedQuiver, data: &QuiverData) -> QuiverData {
    let quiver = Quiver {
        vertices: x.vertices.len(),
        edges: x.edges.iter().map(|&(a, b, _)| (a, b)).collect(),
    };
    let z = x.vertices.iter().zip(&x.v).map(|((_, c), &n)| vec![c.clone(); n]).collect();
    let framing = x.vertices.iter().zip(&x.w).map(|((_, c), &n)| vec![c.clone(); n]).collect();
    let edge_flavor = x.edges.iter().map(|&(_, _, e)| data.edge_flavor[e].clone()).collect();
    QuiverData { quiver, v: x.v.clone(), w: x.w.clone(), z, framing, edge_flavor }
}

/// Jordan quiver with a single framing, loop weight k and z_m = m/e style classes.
pub fn jordan(v: usize, k: ClassNum, z: Vec<ClassNum>, framing: ClassNum) -> QuiverData {
    QuiverData {
        quiver: Quiver { vertices: 1, edges: vec![(0, 0)] },
        v: vec![v],
        w: vec![1],
        z: vec![z],
        framing: vec![vec![framing]],
        edge_flavor: vec![k],
    }
}

/// Unframed quiver with zero flavors, the KLR setting.
pub fn unframed(quiver: Quiver, dims: Vec<usize>) -> QuiverData {
    let nv = quiver.vertices;
    let ne = quiver.edges.len();
    QuiverData {
        z: dims.iter().map(|&d| vec![ClassNum::rational(Q::zero()); d]).collect(),
        framing: vec![Vec::new(); nv],
        w: vec![0; nv],
        v: dims,
        edge_flavor: vec![ClassNum::rational(Q::zero()); ne],
        quiver,
    }
}

pub fn thirds(v: usize) -> Vec<ClassNum> {
    (0..v).map(|m| ClassNum::rational(q(m as i64, 3))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn jordan_third_is_three_cycle() {
        let d = jordan(3, ClassNum::rational(q(1, 3)), thirds(3), ClassNum::rational(qi(0)));
        let x = quiver_expand(&d).unwrap();
        assert_eq!(x.vertices.len(), 3);
        assert_eq!(x.edges.len(), 3);
        assert!(x.is_single_cycle());
        assert_eq!(x.v, vec![1, 1, 1]);
        assert_eq!(x.w, vec![1, 0, 0]);
    }

    #[test]
    fn irrational_loop_gives_segments() {
        let z = (0..3).map(|m| ClassNum::kappa(qi(m))).collect();
        let d = jordan(3, ClassNum::kappa(qi(1)), z, ClassNum::rational(qi(0)));
        let x = quiver_expand(&d).unwrap();
        assert!(x.is_union_of_segments());
        assert_eq!(x.edges.len(), 2);
        assert!(!x.is_single_cycle());
    }

    #[test]
    fn generic_classes_are_isolated() {
        let z = vec![ClassNum::rational(q(1, 5)), ClassNum::rational(q(2, 7))];
        let d = jordan(2, ClassNum::rational(q(1, 2)), z, ClassNum::rational(q(1, 3)));
        let x = quiver_expand(&d).unwrap();
        assert!(x.edges.is_empty());
        assert_eq!(x.v, vec![1, 1]);
        assert_eq!(x.w, vec![0, 0]);
    }

    #[test]
    fn jordan_gauge_datum_shape() {
        let d = jordan(3, ClassNum::rational(q(1, 3)), thirds(3), ClassNum::rational(qi(0)));
        let g = quiver_gauge(&d, &q(-1, 2), &q(-1, 2)).unwrap();
        assert_eq!(g.rank, 3);
        assert_eq!(g.d(), 6 + 3);
        assert_eq!(g.roots.len(), 3);
        assert_eq!(g.weyl_order(), 6);
    }
}
