use super::{bivector, LabeledAlgebra};
use crate::error::{Error, Result};
use crate::exactnum::{int, unit_vec, RationalMatrix};

/// Pseudo-Euclidean motions `e(p1, q)` as affine `(n+1)×(n+1)` matrices, `n = p1 + q`.
///
/// Vector coordinates are ordered `W` (signature `(p1-1, q)`), then the unit
/// spacelike `e0`, then the affine slot. Basis order: `so(W)` bivectors, the
/// translation `e0`, then `U_a = w_a ∧ e0`, then translations `W_a`.
/// Recorded split: `h = so(W) + R e0`, `m = U + W` (ordered as `R² ⊗ W`).
pub fn build_e(p1: usize, q: usize) -> Result<LabeledAlgebra> {
    let n = p1 + q;
    if p1 < 1 || n < 2 {
        return Err(Error::UnsupportedParameters {
            space: format!("e({p1},{q})"),
            reason: "need p1 ≥ 1 and p1 + q ≥ 2".into(),
        });
    }
    let k = n - 1;
    let e0 = k;
    // metric on the linear part, affine slot padded with 0
    let mut eta: Vec<i64> = (0..k).map(|i| if i + 1 < p1 { 1 } else { -1 }).collect();
    eta.push(1);
    eta.push(0);
    let translation = |a: usize| {
        let mut m = RationalMatrix::zeros(n + 1, n + 1);
        m[(a, n)] = int(1);
        m
    };

    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            labels.push(format!("w{a}∧w{b}"));
            mats.push(bivector(&eta, a, b));
        }
    }
    let so_w = mats.len();
    labels.push("e0".into());
    mats.push(translation(e0));
    for a in 0..k {
        labels.push(format!("U{a}"));
        mats.push(bivector(&eta, a, e0));
    }
    for a in 0..k {
        labels.push(format!("W{a}"));
        mats.push(translation(a));
    }
    let mut out = LabeledAlgebra::from_matrices(format!("e({p1},{q})"), labels, mats)?;
    let d = out.dim();
    let units = |r: std::ops::Range<usize>| r.map(|i| unit_vec(d, i)).collect::<Vec<_>>();
    out.add_subspace("so(W)", units(0..so_w))?;
    out.add_subspace("h", units(0..so_w + 1))?;
    out.add_subspace("U", units(so_w + 1..so_w + 1 + k))?;
    out.add_subspace("W", units(so_w + 1 + k..d))?;
    out.add_subspace("m", units(so_w + 1..d))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_counts() {
        let g = build_e(3, 0).unwrap();
        assert_eq!(g.dim(), 6);
        assert_eq!(g.subspace("h").unwrap().dim(), 2);
        assert_eq!(g.subspace("m").unwrap().dim(), 4);
        assert_eq!(build_e(2, 1).unwrap().dim(), 6);
        assert!(build_e(0, 3).is_err());
    }
}
