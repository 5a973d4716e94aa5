use super::{LabeledAlgebra, Quaternion, ScalarMatrix, Scalars};
use crate::error::{Error, Result};
use crate::exactnum::{add_scaled, int, unit_vec, zero_vec, Rational};

const IMAG: [(usize, &str); 3] = [(1, "i"), (2, "j"), (3, "k")];
const ALL: [(usize, &str); 4] = [(0, ""), (1, "i"), (2, "j"), (3, "k")];

/// `(ε, n)` for `sp(n+1)` (ε = +1) and `sp(1, n)` (ε = -1), `n ≥ 2`.
pub fn labeled_shape(p: usize, q: usize) -> Option<(i8, usize)> {
    if q == 0 && p >= 3 {
        Some((1, p - 1))
    } else if p == 1 && q >= 2 {
        Some((-1, q))
    } else {
        None
    }
}

/// Realified `sp(p, q)` acting on `H^{p+q}` (columns), `η = diag(1^p, (-1)^q)`.
///
/// In the labeled shapes the basis is `a·h0` (a ∈ {i,j,k}), `h1`, `sp(n-1)`,
/// then `xE1`, `xE2` (x ∈ {i,j,k}) and the quaternion units of `X1`, `X2`.
/// `E2` here is the off-diagonal `[[0, ε], [1, 0]]` pattern that the `l`
/// block carries.
pub fn build_sp(p: usize, q: usize) -> Result<LabeledAlgebra> {
    if p + q < 2 {
        return Err(Error::UnsupportedParameters {
            space: format!("sp({p},{q})"),
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
    for a in 0..n {
        for (u, tag) in IMAG {
            let mut m = ScalarMatrix::zeros(n);
            m.set(a, a, Quaternion::unit(u).scale(&int(eta[a])));
            labels.push(format!("{tag}D{a}"));
            mats.push(m);
        }
    }
    // X = ηY, Y quaternionic anti-Hermitian
    for a in 0..n {
        for b in a + 1..n {
            for (u, tag) in ALL {
                let unit = Quaternion::unit(u);
                let mut m = ScalarMatrix::zeros(n);
                m.set(a, b, unit.scale(&int(eta[a])));
                m.set(b, a, unit.conj().scale(&int(-eta[b])));
                labels.push(format!("{tag}O{a}{b}"));
                mats.push(m);
            }
        }
    }
    let mats = mats.iter().map(|m| m.realify(Scalars::Quaternion)).collect();
    LabeledAlgebra::from_matrices(format!("sp({p},{q})"), labels, mats)
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

    for (u, tag) in IMAG {
        let mut m = ScalarMatrix::zeros(size);
        m.set(0, 0, Quaternion::unit(u));
        m.set(1, 1, Quaternion::unit(u));
        push!(format!("{tag}h0"), m);
    }
    let mut h1 = ScalarMatrix::zeros(size);
    h1.set(0, 1, Quaternion::from_i64(-e, 0, 0, 0));
    h1.set(1, 0, Quaternion::from_i64(1, 0, 0, 0));
    push!("h1".into(), h1);
    let sp_start = 4;
    for a in 0..low {
        for (u, tag) in IMAG {
            let mut m = ScalarMatrix::zeros(size);
            m.set(2 + a, 2 + a, Quaternion::unit(u));
            push!(format!("sp:{tag}D{a}"), m);
        }
    }
    for a in 0..low {
        for b in a + 1..low {
            for (u, tag) in ALL {
                let unit = Quaternion::unit(u);
                let mut m = ScalarMatrix::zeros(size);
                m.set(2 + a, 2 + b, unit.clone());
                m.set(2 + b, 2 + a, -&unit.conj());
                push!(format!("sp:{tag}O{a}{b}"), m);
            }
        }
    }
    let h_count = labels.len();

    for (u, tag) in IMAG {
        let x = Quaternion::unit(u);
        let mut m = ScalarMatrix::zeros(size);
        m.set(0, 0, x.clone());
        m.set(1, 1, -&x);
        push!(format!("{tag}E1"), m);
    }
    for (u, tag) in IMAG {
        let x = Quaternion::unit(u);
        let mut m = ScalarMatrix::zeros(size);
        m.set(0, 1, x.scale(&int(e)));
        m.set(1, 0, x);
        push!(format!("{tag}E2"), m);
    }
    for (block, row, sign) in [("X1", 0usize, -e), ("X2", 1usize, -1)] {
        for a in 0..low {
            for (u, tag) in ALL {
                let unit = Quaternion::unit(u);
                let mut m = ScalarMatrix::zeros(size);
                m.set(2 + a, row, unit.clone());
                m.set(row, 2 + a, unit.conj().scale(&int(sign)));
                push!(format!("{tag}{block}[{a}]"), m);
            }
        }
    }

    let real: Vec<_> = mats.iter().map(|m| m.realify(Scalars::Quaternion)).collect();
    let mut out = LabeledAlgebra::from_matrices(format!("sp({p},{q})"), labels, real)?;
    out.epsilon = Some(eps);
    let d = out.dim();
    let unit = |i: usize| unit_vec(d, i);
    let idx = |out: &LabeledAlgebra, l: &str| out.algebra.index_of(l).expect("label");

    out.add_subspace("h", (0..h_count).map(unit).collect())?;
    out.add_subspace("sp(1)h0", (0..3).map(unit).collect())?;
    out.add_subspace("sp(n-1)", (sp_start..h_count).map(unit).collect())?;
    out.add_subspace("l", (h_count..d).map(unit).collect())?;
    let v0: Vec<_> = IMAG
        .iter()
        .flat_map(|(_, t)| [format!("{t}E1"), format!("{t}E2")])
        .map(|l| unit(idx(&out, &l)))
        .collect();
    out.add_subspace("V0", v0)?;
    let mut pm = Vec::new();
    for s in [1i64, -1] {
        let mut basis = Vec::new();
        for a in 0..low {
            for (_, tag) in ALL {
                let mut v = unit(idx(&out, &format!("{tag}X1[{a}]")));
                add_scaled(&mut v, &int(s), &unit(idx(&out, &format!("{tag}X2[{a}]"))));
                basis.push(v);
            }
        }
        pm.push(basis);
    }
    let quat: Vec<_> = pm.iter().flatten().cloned().collect();
    out.add_subspace("V+", pm[0].clone())?;
    out.add_subspace("V-", pm[1].clone())?;
    if eps == 1 {
        out.add_subspace("V1", quat)?;
    } else {
        // eigenspaces of ad h1: (x, ±x) on V0 carry ±2, (X, ∓X) carry ±1
        for (name, s) in [("V2", 1i64), ("V-2", -1)] {
            let basis = IMAG
                .iter()
                .map(|(_, t)| {
                    let mut v = unit(idx(&out, &format!("{t}E1")));
                    add_scaled(&mut v, &int(s), &unit(idx(&out, &format!("{t}E2"))));
                    v
                })
                .collect();
            out.add_subspace(name, basis)?;
        }
        out.add_subspace("V1", pm[1].clone())?;
        out.add_subspace("V-1", pm[0].clone())?;
    }
    Ok(out)
}

/// Coordinates of `(x1, x2, X1, X2)` in `l`; `x1`, `x2` must be imaginary.
pub fn l_element(g: &LabeledAlgebra, x1: &Quaternion, x2: &Quaternion, big1: &[Quaternion], big2: &[Quaternion]) -> Vec<Rational> {
    assert!(x1.re() == int(0) && x2.re() == int(0), "x1, x2 must lie in Im H");
    let mut v = zero_vec(g.dim());
    let idx = |l: &str| g.algebra.index_of(l).unwrap_or_else(|| panic!("no basis label {l}"));
    for (u, tag) in IMAG {
        v[idx(&format!("{tag}E1"))] += &x1.0[u];
        v[idx(&format!("{tag}E2"))] += &x2.0[u];
    }
    for (block, xs) in [("X1", big1), ("X2", big2)] {
        for (a, x) in xs.iter().enumerate() {
            for (u, tag) in ALL {
                v[idx(&format!("{tag}{block}[{a}]"))] += &x.0[u];
            }
        }
    }
    v
}

/// Coordinates of `a·h0` for imaginary `a`.
pub fn h0_element(g: &LabeledAlgebra, a: &Quaternion) -> Vec<Rational> {
    let mut v = zero_vec(g.dim());
    for (u, tag) in IMAG {
        v[g.algebra.index_of(&format!("{tag}h0")).expect("h0 label")] += &a.0[u];
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let g = build_sp(3, 0).unwrap();
        assert_eq!(g.dim(), 21);
        // dim l = 8n - 2 with n = 2
        assert_eq!(g.subspace("l").unwrap().dim(), 14);
        let g = build_sp(1, 2).unwrap();
        assert_eq!(g.dim(), 21);
        assert_eq!(g.subspace("V-2").unwrap().dim(), 3);
        assert_eq!(build_sp(2, 1).unwrap().dim(), 21);
    }

    #[test]
    fn isotropy_pieces_are_h_stable() {
        for (p, q, pieces) in [
            (3, 0, &["V0", "V1"][..]),
            (4, 0, &["V0", "V1"][..]),
            (1, 2, &["V2", "V-2", "V1", "V-1"][..]),
        ] {
            let g = build_sp(p, q).unwrap();
            let h = g.subspace("h").unwrap();
            for piece in pieces {
                let v = g.subspace(piece).unwrap();
                for x in h.basis() {
                    for y in v.basis() {
                        assert!(v.contains(&g.algebra.bracket(x, y)), "sp({p},{q}) {piece}");
                    }
                }
            }
        }
    }
}
