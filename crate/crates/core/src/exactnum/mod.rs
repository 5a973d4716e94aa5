//! Exact rational arithmetic and dense linear algebra.
//!
//! Every classification path runs over `Rational` (arbitrary precision).
//! Large kernels go through a prime-field echelon pass first and are then
//! certified against the original rows, see [`kernel`].

pub mod kernel;
pub mod matrix;
pub mod modular;
pub mod poly;
pub mod signature;

pub use kernel::{kernel_basis, rank, LinearSystem};
pub use matrix::RationalMatrix;
pub use poly::{factor_low_degree, min_poly, Factor, RationalPolynomial};
pub use signature::{signature, Signature};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `"num/den"` with the denominator always present.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add_scaled(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

pub fn scale_vec(s: &Rational, v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| s * x).collect()
}

pub fn lin_comb(coeffs: &[Rational], vectors: &[Vec<Rational>]) -> Vec<Rational> {
    let n = vectors.first().map_or(0, Vec::len);
    let mut out = zero_vec(n);
    for (c, v) in coeffs.iter().zip(vectors) {
        add_scaled(&mut out, c, v);
    }
    out
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Integer vector proportional to `v` with coprime entries and a positive first nonzero entry.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(v.iter());
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map_or(BigInt::one(), |x| if x.is_negative() { -BigInt::one() } else { BigInt::one() });
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// If `a = c * b` for a rational `c`, return `c`. Both vectors must have equal length.
pub fn proportionality(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    let pivot = b.iter().position(|x| !x.is_zero());
    let Some(k) = pivot else {
        return if is_zero_vec(a) { Some(Rational::zero()) } else { None };
    };
    let c = &a[k] / &b[k];
    a.iter().zip(b).all(|(x, y)| *x == &c * y).then_some(c)
}

/// Small deterministic pseudo-random integers in `[-bound, bound]`, used to pick
/// generic elements without pulling randomness into exact paths.
pub fn generic_coefficients(n: usize, seed: u64, bound: i64) -> Vec<Rational> {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    (0..n)
        .map(|_| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let r = ((state >> 33) % (2 * bound as u64 + 1)) as i64 - bound;
            int(if r == 0 { 1 } else { r })
        })
        .collect()
}


/// Exact square root when `r ≥ 0` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// Serde helper writing a rational as its `p/q` string.
pub fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_strings_round_trip() {
        let r = rat(-6, 4);
        assert_eq!(to_fraction_string(&r), "-3/2");
        assert_eq!(parse_fraction("-3/2"), Some(r));
        assert_eq!(to_fraction_string(&int(5)), "5/1");
        assert_eq!(parse_fraction("7"), Some(int(7)));
        assert_eq!(parse_fraction("1/0"), None);
    }

    #[test]
    fn proportional_vectors() {
        let a = vec![int(2), int(0), int(-4)];
        let b = vec![int(1), int(0), int(-2)];
        assert_eq!(proportionality(&a, &b), Some(int(2)));
        assert_eq!(proportionality(&b, &[int(1), int(1), int(0)]), None);
    }

    #[test]
    fn primitive_vector_is_normalized() {
        let v = vec![rat(-1, 2), rat(3, 4), int(0)];
        let p = primitive_integer_vector(&v);
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }
}
