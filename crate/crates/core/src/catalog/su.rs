use super::{LabeledAlgebra, Quaternion, ScalarMatrix, Scalars};
use crate::error::{Error, Result};
use crate::exactnum::{add_scaled, int, kernel_basis, lin_comb, rat, zero_vec, Rational, RationalMatrix};

fn c(re: i64, im: i64) -> Quaternion {
    Quaternion::from_i64(re, im, 0, 0)
}

/// Which labeled block form applies to `su(p, q)`: `(ε, n)` with matrix size `n + 1`.
pub fn labeled_shape(p: usize, q: usize) -> Option<(i8, usize)> {
    if q == 0 && p >= 3 {
        Some((1, p - 1))
    } else if p == 1 && q >= 2 {
        Some((-1, q))
    } else {
        None
    }
}

/// Realified `su(p, q)`, `η = diag(1^p, (-1)^q)`.
///
/// For `su(n+1)` (ε = +1) and `su(1, n)` (ε = -1) with `n ≥ 2` the basis is
/// adapted to `h = R h0 + R h1 + su(n-1)` and `l = {(x1, x2, X1, X2)}`:
/// `E1`, `E2`, then real and imaginary units of `X1 ∈ C^{n-1}` and
/// `X2 ∈ C^{n-1}`. Other signatures get a plain basis without labels.
pub fn build_su(p: usize, q: usize) -> Result<LabeledAlgebra> {
    if p + q < 2 {
        return Err(Error::UnsupportedParameters {
            space: format!("su({p},{q})"),
            reason: "need p + q ≥ 2".into(),
        });
    }
    match labeled_shape(p, q) {
        Some((eps, n)) => build_labeled(p, q, eps, n),
        None => build_plain(p, q),
    }
}

fn build_plain(p: usize, q: usize) -> Result<LabeledAlgebra> {
    let n = p + q;
    let eta: Vec<i64> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for a in 0..n - 1 {
        let mut m = ScalarMatrix::zeros(n);
        m.set(a, a, c(0, 1));
        m.set(a + 1, a + 1, c(0, -1));
        labels.push(format!("H{a}"));
        mats.push(m);
    }
    // X = ηY with Y anti-Hermitian
    for a in 0..n {
        for b in a + 1..n {
            let mut m = ScalarMatrix::zeros(n);
            m.set(a, b, c(eta[a], 0));
            m.set(b, a, c(-eta[b], 0));
            labels.push(format!("R{a}{b}"));
            mats.push(m);
            let mut m = ScalarMatrix::zeros(n);
            m.set(a, b, c(0, eta[a]));
            m.set(b, a, c(0, eta[b]));
            labels.push(format!("I{a}{b}"));
            mats.push(m);
        }
    }
    let mats = mats.iter().map(|m| m.realify(Scalars::Complex)).collect();
    LabeledAlgebra::from_matrices(format!("su({p},{q})"), labels, mats)
}

fn build_labeled(p: usize, q: usize, eps: i8, n: usize) -> Result<LabeledAlgebra> {
    let size = n + 1;
    let e = eps as i64;
    let low = n - 1;
    let mut labels: Vec<String> = Vec::new();
    let mut mats: Vec<ScalarMatrix> = Vec::new();
    macro_rules! push {
        ($l:expr, $m:expr) => {{
            labels.push($l);
            mats.push($m);
        }};
    }

    let mut h0 = ScalarMatrix::zeros(size);
    h0.set(0, 0, c(0, 1));
    h0.set(1, 1, c(0, 1));
    for a in 0..low {
        h0.set(2 + a, 2 + a, Quaternion::new(int(0), rat(-2, low as i64), int(0), int(0)));
    }
    push!("h0".into(), h0);
    let mut h1 = ScalarMatrix::zeros(size);
    h1.set(0, 1, c(-e, 0));
    h1.set(1, 0, c(1, 0));
    push!("h1".into(), h1);
    // su(n-1) on the lower block (η = ε·Id there, so anti-Hermitian suffices)
    for a in 0..low.saturating_sub(1) {
        let mut m = ScalarMatrix::zeros(size);
        m.set(2 + a, 2 + a, c(0, 1));
        m.set(3 + a, 3 + a, c(0, -1));
        push!(format!("su:H{a}"), m);
    }
    for a in 0..low {
        for b in a + 1..low {
            let mut m = ScalarMatrix::zeros(size);
            m.set(2 + a, 2 + b, c(1, 0));
            m.set(2 + b, 2 + a, c(-1, 0));
            push!(format!("su:R{a}{b}"), m);
            let mut m = ScalarMatrix::zeros(size);
            m.set(2 + a, 2 + b, c(0, 1));
            m.set(2 + b, 2 + a, c(0, 1));
            push!(format!("su:I{a}{b}"), m);
        }
    }
    let h_count = labels.len();

    let mut e1 = ScalarMatrix::zeros(size);
    e1.set(0, 0, c(0, 1));
    e1.set(1, 1, c(0, -1));
    push!("E1".into(), e1);
    let mut e2 = ScalarMatrix::zeros(size);
    e2.set(0, 1, c(0, e));
    e2.set(1, 0, c(0, 1));
    push!("E2".into(), e2);
    for (block, row, sign) in [("X1", 0usize, -e), ("X2", 1usize, -1)] {
        for a in 0..low {
            for (unit, tag) in [(c(1, 0), ""), (c(0, 1), "i")] {
                let mut m = ScalarMatrix::zeros(size);
                m.set(2 + a, row, unit.clone());
                m.set(row, 2 + a, unit.conj().scale(&int(sign)));
                push!(format!("{tag}{block}[{a}]"), m);
            }
        }
    }

    let real: Vec<_> = mats.iter().map(|m| m.realify(Scalars::Complex)).collect();
    let mut out = LabeledAlgebra::from_matrices(format!("su({p},{q})"), labels, real)?;
    out.epsilon = Some(eps);
    let d = out.dim();
    let unit = |i: usize| crate::exactnum::unit_vec(d, i);
    let idx = |out: &LabeledAlgebra, l: &str| out.algebra.index_of(l).expect("label");

    out.add_subspace("h", (0..h_count).map(unit).collect())?;
    out.add_subspace("su(n-1)", (2..h_count).map(unit).collect())?;
    out.add_subspace("l", (h_count..d).map(unit).collect())?;
    let (ie1, ie2) = (idx(&out, "E1"), idx(&out, "E2"));
    out.add_subspace("V0", vec![unit(ie1), unit(ie2)])?;
    if eps == 1 {
        // (X, ±X) is not h-stable here; the pieces are where ad h1 and ad h0
        // act by the same complex structure up to sign: ad h1·ad h0 = ±c on V±
        let xs: Vec<_> = (h_count..d).filter(|&i| i != ie1 && i != ie2).map(unit).collect();
        let ad0 = out.algebra.adjoint(&unit(0))?;
        let ad1 = out.algebra.adjoint(&unit(1))?;
        let prod = &ad1 * &ad0;
        let c = rat(low as i64 + 2, low as i64);
        for (name, s) in [("V+", 1i64), ("V-", -1)] {
            let shifted = &prod - &RationalMatrix::scalar(d, &(&c * int(s)));
            let basis = restricted_kernel(&shifted, &xs);
            if basis.len() != 2 * low {
                return Err(Error::Construction(format!("{name} has dimension {}", basis.len())));
            }
            out.add_subspace(name, basis)?;
        }
    } else {
        for (name, s) in [("V+", 1i64), ("V-", -1)] {
            let mut basis = Vec::new();
            for a in 0..low {
                for tag in ["", "i"] {
                    let mut v = unit(idx(&out, &format!("{tag}X1[{a}]")));
                    add_scaled(&mut v, &int(s), &unit(idx(&out, &format!("{tag}X2[{a}]"))));
                    basis.push(v);
                }
            }
            out.add_subspace(name, basis)?;
        }
    }
    if eps == -1 {
        let mut ep = unit(ie1);
        add_scaled(&mut ep, &int(1), &unit(ie2));
        let mut em = unit(ie1);
        add_scaled(&mut em, &int(-1), &unit(ie2));
        out.add_element("E+", ep)?;
        out.add_element("E-", em)?;
    }
    Ok(out)
}

/// Vectors `Σ c_k b_k` in the span of `basis` annihilated by `m`.
fn restricted_kernel(m: &RationalMatrix, basis: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols: Vec<Vec<Rational>> = basis.iter().map(|b| m.apply(b)).collect();
    kernel_basis(&RationalMatrix::from_columns(&cols))
        .iter()
        .map(|c| lin_comb(c, basis))
        .collect()
}

/// Complex scalar `re + i·im`.
pub type Complex = (Rational, Rational);

/// Coordinates of the block element `(x1, x2, X1, X2)` of `l`.
pub fn l_element(g: &LabeledAlgebra, x1: &Rational, x2: &Rational, big1: &[Complex], big2: &[Complex]) -> Vec<Rational> {
    let d = g.dim();
    let mut v = zero_vec(d);
    let idx = |l: &str| g.algebra.index_of(l).unwrap_or_else(|| panic!("no basis label {l}"));
    v[idx("E1")] += x1;
    v[idx("E2")] += x2;
    for (block, xs) in [("X1", big1), ("X2", big2)] {
        for (a, (re, im)) in xs.iter().enumerate() {
            v[idx(&format!("{block}[{a}]"))] += re;
            v[idx(&format!("i{block}[{a}]"))] += im;
        }
    }
    v
}

/// `X± = (0, 0, X, ±X)`.
pub fn x_pm(g: &LabeledAlgebra, x: &[Complex], sign: i64) -> Vec<Rational> {
    let neg: Vec<Complex> = x
        .iter()
        .map(|(a, b)| (a * int(sign), b * int(sign)))
        .collect();
    l_element(g, &int(0), &int(0), x, &neg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let g = build_su(3, 0).unwrap();
        assert_eq!(g.dim(), 8);
        assert_eq!(g.subspace("h").unwrap().dim(), 2);
        assert_eq!(g.subspace("l").unwrap().dim(), 6);
        let g = build_su(1, 3).unwrap();
        assert_eq!(g.dim(), 15);
        assert_eq!(g.subspace("h").unwrap().dim(), 5);
        assert_eq!(build_su(2, 2).unwrap().dim(), 15);
    }

    #[test]
    fn isotropy_pieces_are_h_stable() {
        for (p, q) in [(3, 0), (4, 0), (1, 2), (1, 3)] {
            let g = build_su(p, q).unwrap();
            let h = g.subspace("h").unwrap();
            for piece in ["V0", "V+", "V-"] {
                let v = g.subspace(piece).unwrap();
                for x in h.basis() {
                    for y in v.basis() {
                        assert!(v.contains(&g.algebra.bracket(x, y)), "su({p},{q}) {piece}");
                    }
                }
            }
        }
    }
}
