use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::exactnum::{int, Rational};

/// Rational octonion over `(1, e1, …, e7)`.
///
/// Products of imaginary units follow the Fano triples `(i, i+1, i+3) mod 7`:
/// `e_a e_b = e_c` and cyclic, with the reversed order picking up a sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Octonion(pub [Rational; 8]);

/// `TABLE[a][b] = (sign, c)` with `e_a e_b = sign · e_c`.
fn table() -> &'static [[(i8, usize); 8]; 8] {
    static T: OnceLock<[[(i8, usize); 8]; 8]> = OnceLock::new();
    T.get_or_init(|| {
        let mut t = [[(0i8, 0usize); 8]; 8];
        for (a, row) in t.iter_mut().enumerate() {
            row[0] = (1, a);
        }
        for b in 0..8 {
            t[0][b] = (1, b);
        }
        for a in 1..8 {
            t[a][a] = (-1, 0);
        }
        for i in 0..7 {
            let [a, b, c] = [i, i + 1, i + 3].map(|x| x % 7 + 1);
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                t[x][y] = (1, z);
                t[y][x] = (-1, z);
            }
        }
        t
    })
}

impl Octonion {
    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn unit(u: usize) -> Self {
        let mut o = Self::zero();
        o.0[u] = int(1);
        o
    }

    pub fn real(x: Rational) -> Self {
        let mut o = Self::zero();
        o.0[0] = x;
        o
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn conj(&self) -> Self {
        Self(std::array::from_fn(|i| if i == 0 { self.0[0].clone() } else { -self.0[i].clone() }))
    }

    pub fn re(&self) -> Rational {
        self.0[0].clone()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn norm2(&self) -> Rational {
        self.0.iter().map(|x| x * x).sum()
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, o: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, o: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(std::array::from_fn(|i| -self.0[i].clone()))
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, o: &Octonion) -> Octonion {
        let t = table();
        let mut out = Octonion::zero();
        for a in 0..8 {
            if self.0[a].is_zero() {
                continue;
            }
            for b in 0..8 {
                if o.0[b].is_zero() {
                    continue;
                }
                let (s, c) = t[a][b];
                let prod = &self.0[a] * &o.0[b];
                if s > 0 {
                    out.0[c] += prod;
                } else {
                    out.0[c] -= prod;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternative_on_basis() {
        for a in 0..8 {
            for b in 0..8 {
                let (x, y) = (Octonion::unit(a), Octonion::unit(b));
                assert_eq!(&(&x * &x) * &y, &x * &(&x * &y), "left alternativity {a},{b}");
                assert_eq!(&(&y * &x) * &x, &y * &(&x * &x), "right alternativity {a},{b}");
            }
        }
    }

    #[test]
    fn norm_is_multiplicative() {
        let x = Octonion([1, 2, 0, -1, 3, 0, 1, 1].map(int));
        let y = Octonion([0, 1, -2, 1, 0, 4, 0, -1].map(int));
        assert_eq!((&x * &y).norm2(), x.norm2() * y.norm2());
    }

    #[test]
    fn not_associative() {
        let (a, b, c) = (Octonion::unit(1), Octonion::unit(2), Octonion::unit(3));
        assert_ne!(&(&a * &b) * &c, &a * &(&b * &c));
    }
}
