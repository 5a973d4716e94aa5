use super::{bivector, LabeledAlgebra};
use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};

/// Basis index of `e_a ∧ e_b` (a < b) among the lexicographically ordered bivectors.
fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    // pairs (0,1..n-1), (1,2..n-1), ...
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Coordinates of `e_a ∧ e_b` for any distinct `a, b`.
pub fn wedge(n: usize, a: usize, b: usize) -> Vec<Rational> {
    assert_ne!(a, b, "e_a ∧ e_a vanishes");
    let dim = n * (n - 1) / 2;
    let mut v = vec![int(0); dim];
    if a < b {
        v[pair_index(n, a, b)] = int(1);
    } else {
        v[pair_index(n, b, a)] = int(-1);
    }
    v
}

/// `so(p, q)` on bivectors of `R^{p,q}`, metric `diag(1^p, (-1)^q)`.
///
/// Vector index 0 is `e` (spacelike when `p ≥ 1`); index 1 is `e1+` when `p ≥ 2`; index `p` is `e1-`
/// when `q ≥ 1`. For each available choice of `e1±` the split
/// `h± = R e∧e1± + Λ²V±`, `m± = e∧V± + e1±∧V±` is recorded, with `m±`
/// ordered as `H ⊗ V±` (the `e` block first).
pub fn build_so(p: usize, q: usize) -> Result<LabeledAlgebra> {
    let n = p + q;
    if n < 2 {
        return Err(Error::UnsupportedParameters {
            space: format!("so({p},{q})"),
            reason: "need p + q ≥ 2".into(),
        });
    }
    let eta: Vec<i64> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            labels.push(format!("e{a}∧e{b}"));
            mats.push(bivector(&eta, a, b));
        }
    }
    let mut out = LabeledAlgebra::from_matrices(format!("so({p},{q})"), labels, mats)?;

    let add_split = |out: &mut LabeledAlgebra, tag: &str, e1: usize| -> Result<()> {
        let v: Vec<usize> = (1..n).filter(|&i| i != e1).collect();
        out.add_element(&format!("e∧e1{tag}"), wedge(n, 0, e1))?;
        let mut h = vec![wedge(n, 0, e1)];
        for (x, &a) in v.iter().enumerate() {
            for &b in &v[x + 1..] {
                h.push(wedge(n, a, b));
            }
        }
        let mut m: Vec<Vec<Rational>> = v.iter().map(|&a| wedge(n, 0, a)).collect();
        m.extend(v.iter().map(|&a| wedge(n, e1, a)));
        out.add_subspace(&format!("h{tag}"), h)?;
        out.add_subspace(&format!("m{tag}"), m)?;
        Ok(())
    };
    if p >= 2 {
        add_split(&mut out, "+", 1)?;
    }
    if p >= 1 && q >= 1 {
        add_split(&mut out, "-", p)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(build_so(3, 0).unwrap().dim(), 3);
        let g = build_so(5, 0).unwrap();
        assert_eq!(g.dim(), 10);
        assert_eq!(g.subspace("h+").unwrap().dim(), 4);
        assert_eq!(g.subspace("m+").unwrap().dim(), 6);
        assert!(g.subspace("h-").is_none());
    }

    #[test]
    fn pair_indices_are_consecutive() {
        let n = 5;
        let mut k = 0;
        for a in 0..n {
            for b in a + 1..n {
                assert_eq!(pair_index(n, a, b), k);
                k += 1;
            }
        }
    }
}
