//! Compact `f4` as the derivation algebra of the exceptional Jordan algebra.

use std::sync::OnceLock;

use num_traits::Zero;

use super::jordan::{structure, JORDAN_DIM};
use super::LabeledAlgebra;
use crate::error::{Error, Result};
use crate::exactnum::{
    add_scaled, dot, int, kernel_basis, lin_comb, rational_sqrt, LinearSystem, Rational, RationalMatrix,
};
use crate::liealg::Subspace;

/// Cached construction data.
#[derive(Clone, Debug)]
pub struct F4Data {
    pub algebra: LabeledAlgebra,
    /// `τ²` with `(ad h1)²` having eigenvalues `0, -τ², -4τ²`.
    pub tau_squared: Rational,
    /// `τ` itself; rational by the choice of `h1`.
    pub tau: Rational,
}

/// Rows of the Leibniz system `D(b_i∘b_j) = Db_i∘b_j + b_i∘Db_j`.
///
/// Unknown `d[c][i]` (coefficient of `b_c` in `Db_i`) sits at column `27c + i`.
pub fn leibniz_system() -> LinearSystem {
    let n = JORDAN_DIM;
    let t = structure();
    let mut sys = LinearSystem::new(n * n);
    for i in 0..n {
        for j in i..n {
            for c in 0..n {
                let mut row: Vec<(usize, Rational)> = Vec::new();
                for (k, v) in &t[i][j] {
                    row.push((c * n + k, v.clone()));
                }
                for a in 0..n {
                    // -d[a][i] T[a][j][c] - d[a][j] T[i][a][c]
                    if let Some((_, v)) = t[a][j].iter().find(|(k, _)| *k == c) {
                        row.push((a * n + i, -v.clone()));
                    }
                    if let Some((_, v)) = t[i][a].iter().find(|(k, _)| *k == c) {
                        row.push((a * n + j, -v.clone()));
                    }
                }
                sys.push_row(row);
            }
        }
    }
    sys
}

fn derivation_matrices() -> Result<Vec<RationalMatrix>> {
    let kernel = leibniz_system().kernel();
    if kernel.len() != 52 {
        return Err(Error::Construction(format!(
            "derivation algebra has dimension {}, expected 52",
            kernel.len()
        )));
    }
    Ok(kernel
        .iter()
        .map(|v| RationalMatrix::from_vector(JORDAN_DIM, JORDAN_DIM, v))
        .collect())
}

/// B-orthocomplement of `s`.
fn orthocomplement(b: &RationalMatrix, s: &Subspace) -> Result<Subspace> {
    let rows: Vec<Vec<Rational>> = s.basis().iter().map(|v| b.apply(v)).collect();
    let d = b.rows();
    let m = if rows.is_empty() {
        RationalMatrix::zeros(0, d)
    } else {
        RationalMatrix::from_rows(rows)
    };
    Subspace::new(d, kernel_basis(&m))
}

fn build() -> Result<F4Data> {
    let mats = derivation_matrices()?;
    let labels = (0..mats.len()).map(|k| format!("D{k}")).collect();
    let mut out = LabeledAlgebra::from_matrices("f4", labels, mats.clone())?;
    out.epsilon = Some(1);
    let d = out.dim();
    let killing = out.algebra.killing();

    // spin(9): derivations killing the primitive idempotent E11 (basis index 0)
    let cond = RationalMatrix::from_columns(&(0..d).map(|k| mats[k].column(0)).collect::<Vec<_>>());
    let spin9 = Subspace::new(d, kernel_basis(&cond))?;
    let p = orthocomplement(&killing, &spin9)?;

    // h1 ∈ p with -B(h1,h1)/72 a rational square, so that τ is rational
    let mut chosen = None;
    let pb = p.basis();
    'search: for i in 0..pb.len() {
        for j in i..pb.len() {
            for s in [0i64, 1, -1, 2] {
                if i == j && s != 0 {
                    continue;
                }
                let mut h = pb[i].clone();
                if i != j {
                    add_scaled(&mut h, &int(s), &pb[j]);
                }
                let b = dot(&h, &killing.apply(&h));
                let tau2 = -b / int(72);
                if let Some(tau) = rational_sqrt(&tau2) {
                    if !tau.is_zero() {
                        chosen = Some((h, tau2, tau));
                        break 'search;
                    }
                }
            }
        }
    }
    let (h1, tau_squared, tau) =
        chosen.ok_or_else(|| Error::Construction("no element of p with rational τ".into()))?;
    let h = out.algebra.centralizer(&Subspace::new(d, vec![h1.clone()])?);
    if h.dim() != 22 {
        return Err(Error::Construction(format!(
            "centralizer of h1 has dimension {}, expected 22",
            h.dim()
        )));
    }
    let m = orthocomplement(&killing, &h)?;

    // graded pieces of m: (ad h1)² = -τ² on the odd part, -4τ² on the even part
    let ad = out.algebra.adjoint(&h1)?;
    let ad2 = &ad * &ad;
    let piece = |k: i64| -> Result<Subspace> {
        let shifted = &ad2 + &RationalMatrix::scalar(d, &(&tau_squared * int(k * k)));
        Subspace::new(d, kernel_basis(&shifted))
    };
    let l1 = piece(1)?;
    let l2 = piece(2)?;

    out.add_element("h1", h1)?;
    out.add_subspace("spin9", spin9.basis().to_vec())?;
    out.add_subspace("p", p.basis().to_vec())?;
    out.add_subspace("h", h.basis().to_vec())?;
    out.add_subspace("m", m.basis().to_vec())?;
    out.add_subspace("l1", l1.basis().to_vec())?;
    out.add_subspace("l2", l2.basis().to_vec())?;
    Ok(F4Data {
        algebra: out,
        tau_squared,
        tau,
    })
}

/// Built once per process.
pub fn f4_data() -> Result<&'static F4Data> {
    static DATA: OnceLock<std::result::Result<F4Data, Error>> = OnceLock::new();
    DATA.get_or_init(build).as_ref().map_err(Clone::clone)
}

/// `f4 = Der(J₃(O))` with `spin9`, `p`, `h1`, `h`, `m`, `l1`, `l2` recorded.
pub fn build_f4() -> Result<LabeledAlgebra> {
    Ok(f4_data()?.algebra.clone())
}

/// Action of a coordinate vector on `J₃(O)` as a 27×27 matrix.
pub fn jordan_action(g: &LabeledAlgebra, x: &[Rational]) -> RationalMatrix {
    let mats = g.realization.as_ref().expect("f4 carries its Jordan action").matrices();
    let flat = lin_comb(x, &mats.iter().map(RationalMatrix::to_vector).collect::<Vec<_>>());
    RationalMatrix::from_vector(JORDAN_DIM, JORDAN_DIM, &flat)
}
