use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::exactnum::{int, Rational, RationalMatrix};

/// Rational quaternion `a + bi + cj + dk`; complex numbers use `c = d = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion(pub [Rational; 4]);

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self([a, b, c, d])
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self([int(a), int(b), int(c), int(d)])
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0, 0, 0)
    }

    pub fn real(x: Rational) -> Self {
        Self([x, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    /// `1, i, j, k` for `u = 0..4`.
    pub fn unit(u: usize) -> Self {
        let mut q = Self::zero();
        q.0[u] = int(1);
        q
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_complex(&self) -> bool {
        self.0[2].is_zero() && self.0[3].is_zero()
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Self([a.clone(), -b.clone(), -c.clone(), -d.clone()])
    }

    pub fn re(&self) -> Rational {
        self.0[0].clone()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] * s))
    }

    /// Matrix of `x ↦ self·x` in the basis `(1, i, j, k)`.
    pub fn left_mult(&self) -> RationalMatrix {
        let [a, b, c, d] = &self.0;
        let n = |x: &Rational| -x.clone();
        RationalMatrix::from_rows(vec![
            vec![a.clone(), n(b), n(c), n(d)],
            vec![b.clone(), a.clone(), n(d), c.clone()],
            vec![c.clone(), d.clone(), a.clone(), n(b)],
            vec![d.clone(), n(c), b.clone(), a.clone()],
        ])
    }

    /// `[[a, -b], [b, a]]` for `a + bi`.
    pub fn complex_block(&self) -> RationalMatrix {
        let [a, b, _, _] = &self.0;
        RationalMatrix::from_rows(vec![vec![a.clone(), -b.clone()], vec![b.clone(), a.clone()]])
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion(std::array::from_fn(|i| -self.0[i].clone()))
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let [a1, b1, c1, d1] = &self.0;
        let [a2, b2, c2, d2] = &o.0;
        Quaternion([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::unit(1), Quaternion::unit(2), Quaternion::unit(3));
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, Quaternion::from_i64(-1, 0, 0, 0));
    }

    #[test]
    fn left_multiplication_is_multiplicative() {
        let p = Quaternion::from_i64(1, 2, -1, 3);
        let q = Quaternion::from_i64(0, -1, 4, 2);
        assert_eq!(&p.left_mult() * &q.left_mult(), (&p * &q).left_mult());
    }
}
