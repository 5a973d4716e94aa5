use num_traits::{Signed, Zero};
use serde::Serialize;

use super::matrix::RationalMatrix;
use super::Rational;
use crate::error::{Error, Result};

/// Sylvester inertia of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub null: usize,
}

impl Signature {
    pub fn dim(&self) -> usize {
        self.pos + self.neg + self.null
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.null == 0
    }

    pub fn is_neutral(&self) -> bool {
        self.null == 0 && self.pos == self.neg
    }

    pub fn is_definite(&self) -> bool {
        self.null == 0 && (self.pos == 0 || self.neg == 0)
    }

    /// The same form with its sign reversed.
    pub fn flipped(&self) -> Self {
        Self {
            pos: self.neg,
            neg: self.pos,
            null: self.null,
        }
    }
}

/// Inertia by exact symmetric elimination: diagonal pivots where available,
/// otherwise a 2×2 hyperbolic block on a nonzero off-diagonal entry.
pub fn signature(s: &RationalMatrix) -> Result<Signature> {
    if let Some((row, col)) = s.first_asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    let mut a = s.clone();
    let mut active: Vec<usize> = (0..a.rows()).collect();
    let (mut pos, mut neg) = (0, 0);

    while !active.is_empty() {
        if let Some(k) = best_diagonal(&a, &active) {
            let d = a[(k, k)].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            active.retain(|&i| i != k);
            let col: Vec<(usize, Rational)> = active
                .iter()
                .filter(|&&i| !a[(i, k)].is_zero())
                .map(|&i| (i, a[(i, k)].clone()))
                .collect();
            for (x, (i, ai)) in col.iter().enumerate() {
                let f = ai / &d;
                for (j, aj) in &col[x..] {
                    let delta = &f * aj;
                    a[(*i, *j)] -= &delta;
                    if i != j {
                        a[(*j, *i)] = a[(*i, *j)].clone();
                    }
                }
            }
            continue;
        }
        let Some((k, l)) = first_off_diagonal(&a, &active) else {
            break;
        };
        // [[0, b], [b, 0]] contributes one positive and one negative direction.
        pos += 1;
        neg += 1;
        let b = a[(k, l)].clone();
        active.retain(|&i| i != k && i != l);
        // Schur complement: A_rest - C M^{-1} C^T with M^{-1} = [[0, 1/b], [1/b, 0]].
        let ck: Vec<Rational> = active.iter().map(|&i| a[(i, k)].clone()).collect();
        let cl: Vec<Rational> = active.iter().map(|&i| a[(i, l)].clone()).collect();
        for x in 0..active.len() {
            for y in x..active.len() {
                let term = (&ck[x] * &cl[y] + &cl[x] * &ck[y]) / &b;
                if term.is_zero() {
                    continue;
                }
                let (i, j) = (active[x], active[y]);
                a[(i, j)] -= &term;
                if i != j {
                    a[(j, i)] = a[(i, j)].clone();
                }
            }
        }
    }
    let null = s.rows() - pos - neg;
    Ok(Signature { pos, neg, null })
}

/// Nonzero diagonal entry with the smallest bit size, to limit growth.
fn best_diagonal(a: &RationalMatrix, active: &[usize]) -> Option<usize> {
    active
        .iter()
        .copied()
        .filter(|&i| !a[(i, i)].is_zero())
        .min_by_key(|&i| a[(i, i)].numer().bits() + a[(i, i)].denom().bits())
}

fn first_off_diagonal(a: &RationalMatrix, active: &[usize]) -> Option<(usize, usize)> {
    for (x, &i) in active.iter().enumerate() {
        for &j in &active[x + 1..] {
            if !a[(i, j)].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn diagonal_examples() {
        let s = RationalMatrix::diagonal(&[int(1), int(1)]);
        assert_eq!(signature(&s).unwrap(), Signature { pos: 2, neg: 0, null: 0 });
        let s = RationalMatrix::diagonal(&[int(1), int(-1), int(0)]);
        assert_eq!(signature(&s).unwrap(), Signature { pos: 1, neg: 1, null: 1 });
    }

    #[test]
    fn zero_diagonal_needs_a_block() {
        let s = RationalMatrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        assert_eq!(signature(&s).unwrap(), Signature { pos: 1, neg: 1, null: 1 });
        let s = RationalMatrix::from_i64(&[&[0, 2, 1], &[2, 0, 3], &[1, 3, 0]]);
        // det = 12 > 0, trace 0: one positive, two negative.
        assert_eq!(signature(&s).unwrap(), Signature { pos: 1, neg: 2, null: 0 });
    }

    #[test]
    fn rejects_asymmetric_input() {
        let s = RationalMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        assert!(matches!(signature(&s), Err(Error::NotSymmetric { .. })));
    }
}
