//! Dense exact matrices over Q, enough for Weyl generators and nullspaces.

use crate::rational::{dot, Q};
use num_traits::{One, Zero};

pub type Mat = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let k = b.len();
    let mut out = vec![vec![Q::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat, v: &[Q]) -> Vec<Q> {
    a.iter().map(|row| dot(row, v)).collect()
}

/// Row vector times matrix: the pullback of a covector.
pub fn vec_mat(v: &[Q], a: &Mat) -> Vec<Q> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m)
        .map(|j| v.iter().zip(a).fold(Q::zero(), |acc, (x, row)| acc + x * &row[j]))
        .collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(a: &mut Mat) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Q::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Mat) -> usize {
    let mut b = a.clone();
    rref(&mut b).len()
}

pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut aug: Mat = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of {x : a x = 0}.
pub fn nullspace(a: &Mat, ncols: usize) -> Vec<Vec<Q>> {
    if a.is_empty() {
        return identity(ncols);
    }
    let mut b = a.clone();
    let piv = rref(&mut b);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (r, &p) in piv.iter().enumerate() {
                v[p] = -b[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn is_identity(a: &Mat) -> bool {
    *a == identity(a.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn inverse_roundtrip() {
        let a = vec![vec![qi(2), qi(1)], vec![qi(1), qi(1)]];
        let inv = inverse(&a).unwrap();
        assert!(is_identity(&mat_mul(&a, &inv)));
        assert!(inverse(&vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]]).is_none());
    }

    #[test]
    fn nullspace_dim() {
        let a = vec![vec![qi(1), qi(-1), qi(0)]];
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!(mat_vec(&a, &v), vec![q(0, 1)]);
        }
    }
}
