use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::matrix::RationalMatrix;
use super::{generic_coefficients, int, is_zero_vec, unit_vec, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial over the rationals, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `t - r`
    pub fn linear(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_matrix(&self, a: &RationalMatrix) -> RationalMatrix {
        let n = a.rows();
        self.coeffs.iter().rev().fold(RationalMatrix::zeros(n, n), |acc, c| {
            &(&acc * a) + &RationalMatrix::scalar(n, c)
        })
    }

    /// `p(A) v` by Horner's rule on vectors.
    pub fn apply_to_vector(&self, a: &RationalMatrix, v: &[Rational]) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); v.len()];
        for c in self.coeffs.iter().rev() {
            acc = a.apply(&acc);
            super::add_scaled(&mut acc, c, v);
        }
        acc
    }

    /// `p(t + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let step = RationalPolynomial::new(vec![c.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(RationalPolynomial::zero(), |acc, a| acc.mul(&step).add(&RationalPolynomial::constant(a.clone())))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if sd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient if `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// `u` with `u·self ≡ 1 (mod modulus)`, if `self` is a unit there.
    pub fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        // extended Euclid tracking only the coefficient of self
        let (mut r0, mut r1) = (modulus.clone(), self.div_rem(modulus).1);
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return None;
        }
        Some(s0.scale(&r0.leading().recip()).div_rem(modulus).1)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        self.mul(&other.div_rem(&g).0).monic()
    }

    /// Rational roots of `self` (without multiplicity), read off the numeric
    /// roots and confirmed exactly.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::new();
        let Some(d) = self.degree() else { return out };
        if d == 0 {
            return out;
        }
        let sqfree = self.squarefree_part();
        // centred as in `find_quadratic_factor`; roots are shifted back by `c`
        let c = -sqfree.coeff(d_of(&sqfree) - 1) / int(d_of(&sqfree) as i64);
        let centred = sqfree.shift(&c);
        for z in numeric_roots(&centred) {
            if z.im.abs() > 1e-6 * (1.0 + z.re.abs()) {
                continue;
            }
            let quick = rationalize(z.re).filter(|r| centred.eval(r).is_zero());
            let Some(r) = quick.or_else(|| refine_root(&centred, z.re)) else {
                continue;
            };
            let r = r + &c;
            if !out.contains(&r) {
                out.push(r);
            }
        }
        out.sort();
        out
    }

    /// `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolynomial({self})")
    }
}

/// One monic irreducible factor and its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    #[serde(serialize_with = "serialize_poly")]
    pub poly: RationalPolynomial,
    pub multiplicity: usize,
}

fn serialize_poly<S: serde::Serializer>(p: &RationalPolynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Minimal polynomial by Krylov dependence on a generic vector, widened by
/// basis vectors until it annihilates the matrix.
pub fn min_poly(a: &RationalMatrix) -> RationalPolynomial {
    assert!(a.is_square(), "minimal polynomial of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return RationalPolynomial::one();
    }
    let mut m = vector_min_poly(a, &generic_coefficients(n, 0x5eed, 7));
    for i in 0..n {
        let e = unit_vec(n, i);
        if !is_zero_vec(&m.apply_to_vector(a, &e)) {
            m = m.lcm(&vector_min_poly(a, &e));
        }
    }
    m
}

/// Monic generator of `{p : p(A) v = 0}`.
fn vector_min_poly(a: &RationalMatrix, v: &[Rational]) -> RationalPolynomial {
    // Reduced Krylov vectors r_i = c_i(A) v with designated pivot entries.
    let mut reduced: Vec<(Vec<Rational>, usize, RationalPolynomial)> = Vec::new();
    let mut current = v.to_vec();
    let mut power = RationalPolynomial::one();
    loop {
        let mut u = current.clone();
        let mut poly = power.clone();
        for (r, piv, c) in &reduced {
            if u[*piv].is_zero() {
                continue;
            }
            let f = &u[*piv] / &r[*piv];
            super::add_scaled(&mut u, &-f.clone(), r);
            poly = poly.sub(&c.scale(&f));
        }
        match u.iter().position(|x| !x.is_zero()) {
            None => return poly.monic(),
            Some(piv) => reduced.push((u, piv, poly)),
        }
        current = a.apply(&current);
        power = power.mul(&RationalPolynomial::t());
    }
}

/// Factor into monic rational irreducibles of degree at most two.
pub fn factor_low_degree(p: &RationalPolynomial) -> Result<Vec<Factor>> {
    let Some(deg) = p.degree() else {
        return Err(Error::Construction("cannot factor the zero polynomial".into()));
    };
    if deg > 8 {
        return Err(Error::DegreeTooLarge(deg));
    }
    let p = p.monic();
    let mut rest = p.squarefree_part();
    let mut irreducibles: Vec<RationalPolynomial> = Vec::new();

    for r in rest.rational_roots() {
        let lin = RationalPolynomial::linear(&r);
        rest = rest.div_exact(&lin).expect("confirmed root");
        irreducibles.push(lin);
    }
    while rest.degree().unwrap_or(0) > 2 {
        match find_quadratic_factor(&rest) {
            Some(q) => {
                rest = rest.div_exact(&q).expect("confirmed factor");
                irreducibles.push(q);
            }
            None => {
                return Err(Error::IrreducibleFactorTooLarge {
                    degree: rest.degree().unwrap_or(0),
                    factor: rest.to_string(),
                })
            }
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        irreducibles.push(rest.monic());
    }

    let mut factors: Vec<Factor> = irreducibles
        .into_iter()
        .map(|q| {
            let mut mult = 0;
            let mut acc = p.clone();
            while let Some(next) = acc.div_exact(&q) {
                acc = next;
                mult += 1;
            }
            Factor { poly: q, multiplicity: mult }
        })
        .collect();
    factors.sort_by(|a, b| {
        (a.poly.degree(), a.poly.coeffs()).cmp(&(b.poly.degree(), b.poly.coeffs()))
    });
    Ok(factors)
}

/// A monic rational quadratic dividing `p`, from pairs of numeric roots.
///
/// The search runs on `p(t + c)` with `c` the root centroid: generic
/// commutant elements often have clustered roots far from the origin,
/// which f64 coefficients cannot separate.
fn find_quadratic_factor(p: &RationalPolynomial) -> Option<RationalPolynomial> {
    let d = p.degree()?;
    let c = -p.coeff(d - 1) / (p.leading() * int(d as i64));
    let shifted = p.shift(&c);
    find_quadratic_factor_centered(&shifted).map(|q| q.shift(&-c))
}

fn find_quadratic_factor_centered(p: &RationalPolynomial) -> Option<RationalPolynomial> {
    let roots = numeric_roots(p);
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let (a, b) = (roots[i], roots[j]);
            let s = a + b;
            let m = a * b;
            let tol = 1e-6 * (1.0 + s.norm() + m.norm());
            if s.im.abs() > tol || m.im.abs() > tol {
                continue;
            }
            let quick = match (rationalize(s.re), rationalize(m.re)) {
                (Some(sr), Some(mr)) => Some(RationalPolynomial::new(vec![mr, -sr, Rational::one()])),
                _ => None,
            };
            // continued fractions on f64 miss factors with large denominators;
            // fall back to refining the pair exactly before reconstruction
            for q in quick.into_iter().chain(refine_quadratic(p, -s.re, m.re)) {
                if q.rational_roots().is_empty() && p.div_exact(&q).is_some() {
                    return Some(q);
                }
            }
        }
    }
    None
}

/// Bits kept after each refinement step.
const REFINE_BITS: u32 = 320;

/// Newton on the remainder of `p mod t² + u t + v`, in rational arithmetic
/// truncated to `2^-REFINE_BITS`, then exact rational reconstruction.
///
/// With `p = q·Q + R`, differentiating in the coefficients of `q` gives
/// `∂R/∂u = -(t·Q mod q)` and `∂R/∂v = -(Q mod q)`.
fn refine_quadratic(p: &RationalPolynomial, u0: f64, v0: f64) -> Option<RationalPolynomial> {
    let mut u = Rational::from_float(u0)?;
    let mut v = Rational::from_float(v0)?;
    let scale = Rational::from_integer(BigInt::one() << REFINE_BITS);
    let truncate = |x: Rational| (&x * &scale).round() / &scale;
    for _ in 0..12 {
        let q = RationalPolynomial::new(vec![v.clone(), u.clone(), Rational::one()]);
        let (quot, rem) = p.div_rem(&q);
        let (r0, r1) = (rem.coeff(0), rem.coeff(1));
        if r0.is_zero() && r1.is_zero() {
            break;
        }
        let du = quot.mul(&RationalPolynomial::t()).div_rem(&q).1;
        let dv = quot.div_rem(&q).1;
        // J = -[[du1, dv1], [du0, dv0]]; solve J·δ = -R
        let (a, b, c, d) = (du.coeff(1), dv.coeff(1), du.coeff(0), dv.coeff(0));
        let det = &a * &d - &b * &c;
        if det.is_zero() {
            return None;
        }
        let step_u = (&d * &r1 - &b * &r0) / &det;
        let step_v = (&a * &r0 - &c * &r1) / &det;
        u = truncate(&u + &step_u);
        v = truncate(&v + &step_v);
    }
    let (u, v) = (reconstruct(&u)?, reconstruct(&v)?);
    Some(RationalPolynomial::new(vec![v, u, Rational::one()]))
}

fn d_of(p: &RationalPolynomial) -> usize {
    p.degree().unwrap_or(0)
}

/// Exact Newton from `x0` (truncated as in [`refine_quadratic`]), then
/// reconstruction; `Some` only for a confirmed root.
fn refine_root(p: &RationalPolynomial, x0: f64) -> Option<Rational> {
    let mut x = Rational::from_float(x0)?;
    let dp = p.derivative();
    let scale = Rational::from_integer(BigInt::one() << REFINE_BITS);
    for _ in 0..12 {
        let fx = p.eval(&x);
        if fx.is_zero() {
            return Some(x);
        }
        let dx = dp.eval(&x);
        if dx.is_zero() {
            return None;
        }
        x = ((&x - fx / dx) * &scale).round() / &scale;
    }
    reconstruct(&x).filter(|r| p.eval(r).is_zero())
}

/// The rational of denominator below `2^80` within `2^-200` of `x`, if any;
/// two such rationals differ by more than `2^-160`, so it is unique.
fn reconstruct(x: &Rational) -> Option<Rational> {
    let tol = Rational::new(BigInt::one(), BigInt::one() << 200u32);
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut frac = x.clone();
    for _ in 0..400 {
        let a = frac.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        if k1.bits() > 80 {
            return None;
        }
        let approx = Rational::new(h1.clone(), k1.clone());
        if (&approx - x).abs() <= tol {
            return Some(approx);
        }
        let rem = &frac - Rational::from_integer(a);
        if rem.is_zero() {
            return None;
        }
        frac = rem.recip();
    }
    None
}

/// Simultaneous root approximation (Durand-Kerner) followed by Newton polishing.
fn numeric_roots(p: &RationalPolynomial) -> Vec<Complex64> {
    let Some(d) = p.degree() else { return Vec::new() };
    if d == 0 {
        return Vec::new();
    }
    let c = p.monic().to_f64_coeffs();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let deriv: Vec<f64> = c.iter().enumerate().skip(1).map(|(i, &a)| a * i as f64).collect();
    let eval_d = |z: Complex64| deriv.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);

    let radius = 1.0 + c[..d].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| seed.powu(k as u32) * (radius / 2.0).max(1.0))
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for k in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if j != k {
                    denom *= z[k] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[k]) / denom;
            z[k] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * radius {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..5 {
            let d = eval_d(*r);
            if d.norm() == 0.0 {
                break;
            }
            *r -= eval(*r) / d;
        }
    }
    z
}

/// Closest rational with a small denominator, by continued fractions.
fn rationalize(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let tol = 1e-7 * (1.0 + x.abs());
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut frac = x;
    for _ in 0..40 {
        let a = frac.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let approx = h1.to_f64()? / k1.to_f64()?;
        if (approx - x).abs() <= tol {
            return Some(Rational::new(h1, k1));
        }
        let rem = frac - a;
        if rem.abs() < 1e-300 || k1.bits() > 40 {
            return None;
        }
        frac = 1.0 / rem;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn product(factors: &[Factor]) -> RationalPolynomial {
        factors
            .iter()
            .fold(RationalPolynomial::one(), |acc, f| acc.mul(&f.poly.pow(f.multiplicity)))
    }

    #[test]
    fn min_poly_of_zero_and_rotation() {
        assert_eq!(min_poly(&RationalMatrix::zeros(3, 3)), RationalPolynomial::t());
        let j = RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert_eq!(min_poly(&j), RationalPolynomial::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn min_poly_sees_every_block() {
        // diag(J, 2, 2, nilpotent 3-block shifted by 2)
        let mut a = RationalMatrix::zeros(6, 6);
        a[(0, 1)] = int(-1);
        a[(1, 0)] = int(1);
        for i in 2..6 {
            a[(i, i)] = int(2);
        }
        a[(3, 4)] = int(1);
        a[(4, 5)] = int(1);
        let m = min_poly(&a);
        let expected = RationalPolynomial::from_i64(&[1, 0, 1])
            .mul(&RationalPolynomial::linear(&int(2)).pow(3));
        assert_eq!(m, expected);
        assert!(m.eval_matrix(&a).is_zero());
    }

    #[test]
    fn factors_of_small_polynomials() {
        let f = factor_low_degree(&RationalPolynomial::from_i64(&[-1, 0, 1])).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|x| x.poly.degree() == Some(1) && x.multiplicity == 1));

        let f = factor_low_degree(&RationalPolynomial::from_i64(&[0, 1, 0, 1])).unwrap();
        assert_eq!(
            f,
            vec![
                Factor { poly: RationalPolynomial::t(), multiplicity: 1 },
                Factor { poly: RationalPolynomial::from_i64(&[1, 0, 1]), multiplicity: 1 },
            ]
        );
    }

    #[test]
    fn repeated_and_irrational_real_factors() {
        // (t^2 - 2)^2 (t + 1/3)
        let p = RationalPolynomial::from_i64(&[-2, 0, 1])
            .pow(2)
            .mul(&RationalPolynomial::linear(&rat(-1, 3)));
        let f = factor_low_degree(&p).unwrap();
        assert_eq!(product(&f), p.monic());
        assert_eq!(f.iter().map(|x| x.multiplicity).sum::<usize>(), 3);
    }

    #[test]
    fn quadratic_factors_with_large_denominators() {
        // (t² + 36169/2000 t + 98765/4001)(t² - 16137/2000 t + 31/7)
        let a = RationalPolynomial::new(vec![rat(98765, 4001), rat(36169, 2000), int(1)]);
        let b = RationalPolynomial::new(vec![rat(31, 7), rat(-16137, 2000), int(1)]);
        let p = a.mul(&b);
        let f = factor_low_degree(&p).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(product(&f), p);
    }

    #[test]
    fn cubic_irreducible_is_rejected() {
        let p = RationalPolynomial::from_i64(&[-2, 0, 0, 1]);
        assert!(matches!(
            factor_low_degree(&p),
            Err(Error::IrreducibleFactorTooLarge { degree: 3, .. })
        ));
    }

    #[test]
    fn display_is_readable() {
        let p = RationalPolynomial::new(vec![rat(1, 2), int(0), int(-1), int(1)]);
        assert_eq!(p.to_string(), "t^3 - t^2 + 1/2");
    }
}
