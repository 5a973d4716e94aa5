use std::sync::OnceLock;

use num_traits::Zero;

use super::Octonion;
use crate::exactnum::{rat, Rational};

/// Hermitian 3×3 octonionic matrix.
///
/// `off[0]` sits at (2,3), `off[1]` at (3,1), `off[2]` at (1,2) (1-based); the
/// transposed positions hold the conjugates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanElement {
    pub diag: [Rational; 3],
    pub off: [Octonion; 3],
}

pub const JORDAN_DIM: usize = 27;

/// Position (row, col), 0-based, of `off[k]`.
const OFF_POS: [(usize, usize); 3] = [(1, 2), (2, 0), (0, 1)];

impl JordanElement {
    pub fn zero() -> Self {
        Self {
            diag: std::array::from_fn(|_| Rational::zero()),
            off: std::array::from_fn(|_| Octonion::zero()),
        }
    }

    /// Basis: `E11, E22, E33`, then `F_k(u)` at index `3 + 8k + u`.
    pub fn basis(i: usize) -> Self {
        let mut x = Self::zero();
        if i < 3 {
            x.diag[i] = crate::exactnum::int(1);
        } else {
            let (k, u) = ((i - 3) / 8, (i - 3) % 8);
            x.off[k] = Octonion::unit(u);
        }
        x
    }

    pub fn to_vector(&self) -> Vec<Rational> {
        let mut v = self.diag.to_vec();
        for o in &self.off {
            v.extend(o.0.iter().cloned());
        }
        v
    }

    pub fn from_vector(v: &[Rational]) -> Self {
        assert_eq!(v.len(), JORDAN_DIM);
        Self {
            diag: std::array::from_fn(|i| v[i].clone()),
            off: std::array::from_fn(|k| Octonion(std::array::from_fn(|u| v[3 + 8 * k + u].clone()))),
        }
    }

    fn to_matrix(&self) -> [[Octonion; 3]; 3] {
        let mut m: [[Octonion; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Octonion::zero()));
        for i in 0..3 {
            m[i][i] = Octonion::real(self.diag[i].clone());
        }
        for (k, &(r, c)) in OFF_POS.iter().enumerate() {
            m[r][c] = self.off[k].clone();
            m[c][r] = self.off[k].conj();
        }
        m
    }

    /// Jordan product `(xy + yx)/2`.
    pub fn jordan(&self, other: &Self) -> Self {
        let (a, b) = (self.to_matrix(), other.to_matrix());
        let mut s: [[Octonion; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Octonion::zero()));
        for (i, row) in s.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..3 {
                    *cell = &*cell + &(&a[i][k] * &b[k][j]);
                    *cell = &*cell + &(&b[i][k] * &a[k][j]);
                }
            }
        }
        let half = rat(1, 2);
        let out = Self {
            diag: std::array::from_fn(|i| s[i][i].re() * &half),
            off: std::array::from_fn(|k| {
                let (r, c) = OFF_POS[k];
                s[r][c].scale(&half)
            }),
        };
        debug_assert!((0..3).all(|i| (1..8).all(|u| s[i][i].0[u].is_zero())));
        out
    }
}

/// Structure tensor `b_i ∘ b_j = Σ_k T[i][j][k] b_k`, sparse per pair.
pub fn structure() -> &'static Vec<Vec<Vec<(usize, Rational)>>> {
    static T: OnceLock<Vec<Vec<Vec<(usize, Rational)>>>> = OnceLock::new();
    T.get_or_init(|| {
        let mut t = vec![vec![Vec::new(); JORDAN_DIM]; JORDAN_DIM];
        for i in 0..JORDAN_DIM {
            for j in i..JORDAN_DIM {
                let p = JordanElement::basis(i).jordan(&JordanElement::basis(j)).to_vector();
                let sparse: Vec<(usize, Rational)> =
                    p.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                t[j][i] = sparse.clone();
                t[i][j] = sparse;
            }
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn diagonal_idempotents() {
        let e = JordanElement::basis(0);
        assert_eq!(e.jordan(&e), e);
        assert_eq!(e.jordan(&JordanElement::basis(1)), JordanElement::zero());
    }

    #[test]
    fn jordan_identity_on_sample() {
        // (x∘y)∘(x∘x) = x∘(y∘(x∘x))
        let x = JordanElement::from_vector(&(0..27).map(|i| int((i as i64 * 7) % 5 - 2)).collect::<Vec<_>>());
        let y = JordanElement::from_vector(&(0..27).map(|i| int((i as i64 * 3) % 4 - 1)).collect::<Vec<_>>());
        let xx = x.jordan(&x);
        assert_eq!(x.jordan(&y).jordan(&xx), x.jordan(&y.jordan(&xx)));
    }
}
