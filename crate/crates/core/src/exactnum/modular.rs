//! Prime-field arithmetic, Chinese remaindering and rational reconstruction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Largest primes below 2^31, in decreasing order. Products of two residues fit in u64.
pub fn primes_below_2_31(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate: u64 = (1 << 31) - 1;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    mod_pow(a, p - 2, p)
}

pub fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    if let Some(small) = x.to_i64() {
        return small.rem_euclid(p as i64) as u64;
    }
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// Residue of a rational whose denominator is a unit mod `p`.
pub fn rational_mod(x: &Rational, p: u64) -> Option<u64> {
    let d = bigint_mod(x.denom(), p);
    if d == 0 {
        return None;
    }
    Some(bigint_mod(x.numer(), p) * mod_inv(d, p) % p)
}

/// Accumulates residues of a fixed-length vector family across primes.
#[derive(Clone, Debug)]
pub struct CrtAccumulator {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl CrtAccumulator {
    pub fn new(residues: &[u64], p: u64) -> Self {
        Self {
            modulus: BigInt::from(p),
            values: residues.iter().map(|&r| BigInt::from(r)).collect(),
        }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// Fold in one more prime. Residues are in `[0, p)`.
    pub fn add(&mut self, residues: &[u64], p: u64) {
        assert_eq!(residues.len(), self.values.len());
        let m_mod_p = bigint_mod(&self.modulus, p);
        let m_inv = mod_inv(m_mod_p, p);
        for (x, &r) in self.values.iter_mut().zip(residues) {
            let x_mod_p = bigint_mod(x, p);
            let t = (r + p - x_mod_p) % p * m_inv % p;
            if t != 0 {
                *x += &self.modulus * BigInt::from(t);
            }
        }
        self.modulus *= BigInt::from(p);
    }

    /// Rational reconstruction of every entry, `None` if any entry fails.
    pub fn reconstruct(&self) -> Option<Vec<Rational>> {
        let bound = (&self.modulus >> 1usize).sqrt();
        self.values
            .iter()
            .map(|x| rational_reconstruction(x, &self.modulus, &bound))
            .collect()
    }
}

/// Find `r/s` with `r ≡ a·s (mod m)`, `|r| ≤ bound`, `0 < s ≤ bound`.
pub fn rational_reconstruction(a: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let a = a.mod_floor(m);
    if a.is_zero() {
        return Some(Rational::zero());
    }
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
    }
    if s1.is_zero() || s1.abs() > *bound {
        return None;
    }
    if !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(Rational::new(r1, s1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn primes_are_prime_and_descending() {
        let ps = primes_below_2_31(4);
        assert_eq!(ps[0], 2147483647);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn inverse_round_trip() {
        let p = primes_below_2_31(1)[0];
        for a in [1u64, 2, 12345, p - 1] {
            assert_eq!(a * mod_inv(a, p) % p, 1);
        }
    }

    #[test]
    fn reconstruction_recovers_small_fractions() {
        let ps = primes_below_2_31(3);
        for x in [rat(-7, 3), rat(123456, 789), rat(0, 1), rat(1, 1)] {
            let mut acc = CrtAccumulator::new(&[rational_mod(&x, ps[0]).unwrap()], ps[0]);
            for &p in &ps[1..] {
                acc.add(&[rational_mod(&x, p).unwrap()], p);
            }
            assert_eq!(acc.reconstruct().unwrap(), vec![x]);
        }
    }
}
