//! Exact null spaces.
//!
//! Systems are eliminated modulo a few 31-bit primes, the reduced-echelon
//! kernel basis is lifted by Chinese remaindering and rational reconstruction,
//! and every lifted vector is then checked against the original integer rows.
//! Reduction mod p can only lower the rank, so `cols - rank_p` verified,
//! independent vectors form an exact basis. If lifting does not settle the
//! system falls back to elimination over the rationals.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::modular::{bigint_mod, mod_inv, primes_below_2_31, CrtAccumulator};
use super::{common_denominator, Rational};

/// Below this many unknowns the rational path is cheaper than lifting.
const EXACT_CUTOFF: usize = 24;
const MAX_PRIMES: usize = 40;

/// Homogeneous linear system with integer-scaled sparse rows.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    ncols: usize,
    rows: Vec<Vec<(usize, BigInt)>>,
    seen: HashSet<Vec<(usize, BigInt)>>,
}

impl LinearSystem {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            seen: HashSet::new(),
        }
    }

    pub fn from_matrix(a: &RationalMatrix) -> Self {
        let mut sys = Self::new(a.cols());
        for i in 0..a.rows() {
            sys.push_dense(a.row(i));
        }
        sys
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Number of distinct nonzero rows kept.
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_dense(&mut self, row: &[Rational]) {
        assert_eq!(row.len(), self.ncols, "row length");
        self.push_row(
            row.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect(),
        );
    }

    /// Add one equation `Σ coeff·x_col = 0`. Repeated columns are summed; zero
    /// and duplicate (up to scale) rows are dropped.
    pub fn push_row(&mut self, mut entries: Vec<(usize, Rational)>) {
        entries.sort_by_key(|(j, _)| *j);
        let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (j, x) in entries {
            assert!(j < self.ncols, "column {j} out of range");
            match merged.last_mut() {
                Some((k, acc)) if *k == j => *acc += x,
                _ => merged.push((j, x)),
            }
        }
        merged.retain(|(_, x)| !x.is_zero());
        if merged.is_empty() {
            return;
        }
        let den = common_denominator(merged.iter().map(|(_, x)| x));
        let mut ints: Vec<(usize, BigInt)> = merged
            .into_iter()
            .map(|(j, x)| (j, (x * &den).to_integer()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
        let flip = ints[0].1.is_negative();
        for (_, x) in ints.iter_mut() {
            *x = &*x / &g;
            if flip {
                *x = -&*x;
            }
        }
        if self.seen.insert(ints.clone()) {
            self.rows.push(ints);
        }
    }

    pub fn extend(&mut self, other: &LinearSystem) {
        assert_eq!(self.ncols, other.ncols);
        for row in &other.rows {
            if self.seen.insert(row.clone()) {
                self.rows.push(row.clone());
            }
        }
    }

    /// Whether `v` solves every equation exactly.
    pub fn is_solution(&self, v: &[Rational]) -> bool {
        let den = common_denominator(v.iter());
        let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
        self.is_integer_solution(&ints)
    }

    fn is_integer_solution(&self, v: &[BigInt]) -> bool {
        self.rows.iter().all(|row| {
            row.iter()
                .filter(|(j, _)| !v[*j].is_zero())
                .fold(BigInt::zero(), |acc, (j, c)| acc + c * &v[*j])
                .is_zero()
        })
    }

    /// Reduced-echelon basis of the null space: one vector per free column,
    /// with a 1 there and 0 at every other free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        if self.ncols == 0 {
            return Vec::new();
        }
        if self.rows.is_empty() {
            return (0..self.ncols).map(|i| super::unit_vec(self.ncols, i)).collect();
        }
        if self.ncols <= EXACT_CUTOFF {
            return self.exact_kernel();
        }
        self.modular_kernel().unwrap_or_else(|| self.exact_kernel())
    }

    pub fn rank(&self) -> usize {
        self.ncols - self.kernel().len()
    }

    fn exact_kernel(&self) -> Vec<Vec<Rational>> {
        let field = RationalField;
        let rows = self.rows.iter().map(|row| {
            row.iter()
                .map(|(j, c)| (*j, Rational::from_integer(c.clone())))
                .collect::<Vec<_>>()
        });
        let (_, basis) = eliminate(&field, self.ncols, rows);
        canonicalize(&field, basis)
    }

    fn modular_kernel(&self) -> Option<Vec<Vec<Rational>>> {
        let primes = primes_below_2_31(MAX_PRIMES);
        let mut best: Option<(usize, Vec<usize>, CrtAccumulator)> = None;
        let mut since_check = 0usize;
        let mut conflicts = 0usize;
        for &p in &primes {
            let field = PrimeField(p);
            let rows = self.rows.iter().map(|row| {
                row.iter()
                    .map(|(j, c)| (*j, bigint_mod(c, p)))
                    .filter(|(_, x)| *x != 0)
                    .collect::<Vec<_>>()
            });
            let (rank, basis) = eliminate(&field, self.ncols, rows);
            let basis = canonicalize(&field, basis);
            let free = free_positions(&field, &basis);
            let flat: Vec<u64> = basis.iter().flatten().copied().collect();
            match &mut best {
                Some((r, f, acc)) if *r == rank && *f == free => {
                    acc.add(&flat, p);
                    since_check += 1;
                }
                Some((r, _, _)) if *r > rank => continue,
                Some((r, _, _)) if *r == rank => {
                    conflicts += 1;
                    if conflicts > 3 {
                        return None;
                    }
                    best = Some((rank, free, CrtAccumulator::new(&flat, p)));
                    since_check = 1;
                }
                _ => {
                    best = Some((rank, free, CrtAccumulator::new(&flat, p)));
                    since_check = 1;
                }
            }
            let (rank, _, acc) = best.as_ref().expect("set above");
            if *rank == self.ncols {
                return Some(Vec::new());
            }
            if since_check < 2 {
                continue;
            }
            since_check = 0;
            let Some(values) = acc.reconstruct() else {
                continue;
            };
            let k = self.ncols - rank;
            let vectors: Vec<Vec<Rational>> = values.chunks(self.ncols).map(<[_]>::to_vec).collect();
            debug_assert_eq!(vectors.len(), k);
            if vectors.iter().all(|v| self.is_solution(v)) {
                return Some(vectors);
            }
        }
        None
    }
}

/// Null space of a dense matrix.
pub fn kernel_basis(a: &RationalMatrix) -> Vec<Vec<Rational>> {
    LinearSystem::from_matrix(a).kernel()
}

pub fn rank(a: &RationalMatrix) -> usize {
    a.cols() - kernel_basis(a).len()
}

/// Minimal field interface shared by the prime-field and rational eliminations.
trait Field {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `a - b·c`
    fn sub_mul(&self, a: &Self::E, b: &Self::E, c: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
}

struct PrimeField(u64);

impl Field for PrimeField {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn sub_mul(&self, a: &u64, b: &u64, c: &u64) -> u64 {
        let p = self.0;
        (a + p - b * c % p) % p
    }
    fn inv(&self, a: &u64) -> u64 {
        mod_inv(*a, self.0)
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
}

struct RationalField;

impl Field for RationalField {
    type E = Rational;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn sub_mul(&self, a: &Rational, b: &Rational, c: &Rational) -> Rational {
        a - b * c
    }
    fn inv(&self, a: &Rational) -> Rational {
        a.recip()
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a.clone()
    }
}

/// Incremental elimination keeping every pivot row zero on all other pivot
/// columns. Returns the rank and a kernel basis indexed by the free columns.
fn eliminate<F: Field>(
    field: &F,
    n: usize,
    rows: impl Iterator<Item = Vec<(usize, F::E)>>,
) -> (usize, Vec<Vec<F::E>>) {
    let mut pivot_rows: Vec<Vec<F::E>> = Vec::new();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut row_of_col: Vec<Option<usize>> = vec![None; n];
    let mut free: Vec<usize> = (0..n).collect();
    let mut dense = vec![field.zero(); n];

    for sparse in rows {
        if free.is_empty() {
            break;
        }
        for x in dense.iter_mut() {
            *x = field.zero();
        }
        for (j, x) in &sparse {
            dense[*j] = x.clone();
        }
        // Pivot rows vanish on other pivot columns, so the pivot-column support
        // of the incoming row never grows.
        for (j, _) in &sparse {
            let Some(r) = row_of_col[*j] else { continue };
            let coef = dense[*j].clone();
            if field.is_zero(&coef) {
                continue;
            }
            let prow = &pivot_rows[r];
            for &f in &free {
                if !field.is_zero(&prow[f]) {
                    dense[f] = field.sub_mul(&dense[f], &coef, &prow[f]);
                }
            }
            dense[*j] = field.zero();
        }
        let Some(pos) = free.iter().position(|&f| !field.is_zero(&dense[f])) else {
            continue;
        };
        let pc = free.remove(pos);
        let inv = field.inv(&dense[pc]);
        let mut new_row = vec![field.zero(); n];
        new_row[pc] = field.one();
        for &f in &free {
            if !field.is_zero(&dense[f]) {
                new_row[f] = field.mul(&dense[f], &inv);
            }
        }
        for prow in pivot_rows.iter_mut() {
            let coef = prow[pc].clone();
            if field.is_zero(&coef) {
                continue;
            }
            for &f in &free {
                if !field.is_zero(&new_row[f]) {
                    prow[f] = field.sub_mul(&prow[f], &coef, &new_row[f]);
                }
            }
            prow[pc] = field.zero();
        }
        row_of_col[pc] = Some(pivot_rows.len());
        pivot_col_of_row.push(pc);
        pivot_rows.push(new_row);
    }

    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![field.zero(); n];
            v[f] = field.one();
            for (r, prow) in pivot_rows.iter().enumerate() {
                if !field.is_zero(&prow[f]) {
                    v[pivot_col_of_row[r]] = field.neg(&prow[f]);
                }
            }
            v
        })
        .collect();
    (pivot_rows.len(), basis)
}

/// Bring a kernel basis to the form whose free set is the complement of the
/// leftmost column basis: eliminate from the last coordinate backwards.
fn canonicalize<F: Field>(field: &F, mut basis: Vec<Vec<F::E>>) -> Vec<Vec<F::E>> {
    let k = basis.len();
    if k == 0 {
        return basis;
    }
    let n = basis[0].len();
    let mut done = 0;
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(k);
    for j in (0..n).rev() {
        if done == k {
            break;
        }
        let Some(r) = (done..k).find(|&r| !field.is_zero(&basis[r][j])) else {
            continue;
        };
        basis.swap(done, r);
        let inv = field.inv(&basis[done][j]);
        for x in basis[done].iter_mut() {
            if !field.is_zero(x) {
                *x = field.mul(x, &inv);
            }
        }
        let pivot = basis[done].clone();
        for (i, v) in basis.iter_mut().enumerate() {
            if i == done || field.is_zero(&v[j]) {
                continue;
            }
            let coef = v[j].clone();
            for (x, y) in v.iter_mut().zip(&pivot) {
                if !field.is_zero(y) {
                    *x = field.sub_mul(x, &coef, y);
                }
            }
        }
        order.push((j, done));
        done += 1;
    }
    // Order vectors by increasing free column.
    order.sort_unstable();
    order.into_iter().map(|(_, i)| basis[i].clone()).collect()
}

fn free_positions<F: Field>(field: &F, basis: &[Vec<F::E>]) -> Vec<usize> {
    basis
        .iter()
        .map(|v| {
            v.iter()
                .rposition(|x| !field.is_zero(x))
                .expect("nonzero kernel vector")
        })
        .collect()
}
