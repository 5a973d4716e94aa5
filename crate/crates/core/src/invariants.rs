//! Invariant tensors on `m` and the structures they carry.
//!
//! Everything is expressed in the coordinates of the recorded `m` basis. A
//! bilinear form is a matrix `G` with `G(x, y) = xᵀ G y`; an endomorphism
//! acts on column vectors. `h` acts on forms by `A·G = -(Aᵀ G + G A)` and on
//! endomorphisms by commutator.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{
    factor_low_degree, generic_coefficients, int, min_poly, rat, rational_sqrt, signature, unit_vec, LinearSystem,
    Rational, RationalMatrix, RationalPolynomial, Signature,
};
use crate::homogeneous::{isotropy_rep, IsotropyRep, ReductiveSplit};
use crate::liealg::{independent_span, CoordinateReader};

/// Which tensor space of `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorKind {
    Sym2,
    Alt2,
    Endo,
}

/// Basis of the `h`-invariant tensors of one kind.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantTensorBasis {
    pub kind: TensorKind,
    pub elements: Vec<RationalMatrix>,
}

impl InvariantTensorBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }
}

/// Sparse parameterization of the tensor space: each unknown is a matrix
/// given by its nonzero entries.
fn parameters(n: usize, kind: TensorKind) -> Vec<Vec<(usize, usize, Rational)>> {
    let mut out = Vec::new();
    match kind {
        TensorKind::Sym2 => {
            for i in 0..n {
                out.push(vec![(i, i, int(1))]);
                for j in i + 1..n {
                    out.push(vec![(i, j, int(1)), (j, i, int(1))]);
                }
            }
        }
        TensorKind::Alt2 => {
            for i in 0..n {
                for j in i + 1..n {
                    out.push(vec![(i, j, int(1)), (j, i, int(-1))]);
                }
            }
        }
        TensorKind::Endo => {
            for i in 0..n {
                for j in 0..n {
                    out.push(vec![(i, j, int(1))]);
                }
            }
        }
    }
    out
}

fn assemble(n: usize, param: &[Vec<(usize, usize, Rational)>], coeffs: &[Rational]) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    for (p, c) in param.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (i, j, v) in p {
            m[(*i, *j)] += c * v;
        }
    }
    m
}

/// Rows expressing `A·T = 0` for every generator, in the unknowns of `param`.
fn invariance_rows(
    rep: &IsotropyRep,
    n: usize,
    kind: TensorKind,
    param: &[Vec<(usize, usize, Rational)>],
) -> LinearSystem {
    let mut sys = LinearSystem::new(param.len());
    for a in &rep.generators {
        // rows[r * n + c] collects (unknown, coefficient)
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n * n];
        for (u, p) in param.iter().enumerate() {
            for (i, j, v) in p {
                for r in 0..n {
                    match kind {
                        // (Aᵀ E_ij)[r][j] = A[i][r]
                        TensorKind::Sym2 | TensorKind::Alt2 => {
                            let x = &a[(*i, r)];
                            if !x.is_zero() {
                                rows[r * n + j].push((u, v * x));
                            }
                        }
                        // (A E_ij)[r][j] = A[r][i]
                        TensorKind::Endo => {
                            let x = &a[(r, *i)];
                            if !x.is_zero() {
                                rows[r * n + j].push((u, v * x));
                            }
                        }
                    }
                }
                // ±(E_ij A)[i][c] = ±A[j][c]
                for c in 0..n {
                    let x = &a[(*j, c)];
                    if x.is_zero() {
                        continue;
                    }
                    let val = match kind {
                        TensorKind::Endo => -(v * x),
                        _ => v * x,
                    };
                    rows[*i * n + c].push((u, val));
                }
            }
        }
        for row in rows {
            sys.push_row(row);
        }
    }
    sys
}

/// Invariant tensors for an explicit set of generators acting on `R^n`.
pub fn invariant_tensors_for(rep: &IsotropyRep, n: usize, kind: TensorKind) -> InvariantTensorBasis {
    let param = parameters(n, kind);
    let sys = invariance_rows(rep, n, kind, &param);
    let elements = sys.kernel().iter().map(|k| assemble(n, &param, k)).collect();
    InvariantTensorBasis { kind, elements }
}

pub fn invariant_tensors(s: &ReductiveSplit, kind: TensorKind) -> Result<InvariantTensorBasis> {
    let rep = isotropy_rep(s)?;
    Ok(invariant_tensors_for(&rep, s.dim_m(), kind))
}

/// Whether `t` is annihilated by every generator (direct check).
pub fn is_invariant(rep: &IsotropyRep, t: &RationalMatrix, kind: TensorKind) -> bool {
    rep.generators.iter().all(|a| match kind {
        TensorKind::Endo => a.commutator(t).is_zero(),
        _ => (&(&a.transpose() * t) + &(t * a)).is_zero(),
    })
}

/// `[m_i, ·]_m` as a matrix for each basis vector of `m`.
pub fn bracket_matrices(s: &ReductiveSplit) -> Vec<RationalMatrix> {
    let n = s.dim_m();
    (0..n)
        .map(|i| {
            let mut m = RationalMatrix::zeros(n, n);
            for j in 0..n {
                for (k, x) in s.bracket_mm_basis(i, j).1.iter().enumerate() {
                    if !x.is_zero() {
                        m[(k, j)] = x.clone();
                    }
                }
            }
            m
        })
        .collect()
}

/// `dω(m_i, m_j, m_k) = -(ω([m_i,m_j]_m, m_k) + ω([m_j,m_k]_m, m_i) + ω([m_k,m_i]_m, m_j))`
/// on all triples `i < j < k`, in lexicographic order.
fn residual_vector(s: &ReductiveSplit, w: &RationalMatrix) -> Vec<Rational> {
    let n = s.dim_m();
    // pair[i][j][k] = ω([m_i, m_j]_m, m_k)
    let pair = |i: usize, j: usize, k: usize| -> Rational {
        s.bracket_mm_basis(i, j)
            .1
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .fold(Rational::zero(), |acc, (l, x)| acc + x * &w[(l, k)])
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(-(pair(i, j, k) + pair(j, k, i) + pair(k, i, j)));
            }
        }
    }
    out
}

/// One nonzero value of the closedness residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualEntry {
    pub triple: (usize, usize, usize),
    #[serde(serialize_with = "crate::exactnum::serialize_rational")]
    pub value: Rational,
}

/// Nonzero values of `dω` on basis triples; empty iff `ω` is closed.
pub fn closedness_residual(s: &ReductiveSplit, w: &RationalMatrix) -> Vec<ResidualEntry> {
    let n = s.dim_m();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                triples.push((i, j, k));
            }
        }
    }
    residual_vector(s, w)
        .into_iter()
        .zip(triples)
        .filter(|(v, _)| !v.is_zero())
        .map(|(value, triple)| ResidualEntry { triple, value })
        .collect()
}

pub fn is_closed(s: &ReductiveSplit, w: &RationalMatrix) -> bool {
    residual_vector(s, w).iter().all(Zero::is_zero)
}

/// Combinations of `forms` satisfying linear conditions given per form as a vector.
fn kernel_of_columns(columns: &[Vec<Rational>], forms: &[RationalMatrix]) -> Vec<RationalMatrix> {
    if forms.is_empty() {
        return Vec::new();
    }
    let rows = columns.first().map_or(0, Vec::len);
    let mut sys = LinearSystem::new(forms.len());
    for r in 0..rows {
        sys.push_row(
            columns
                .iter()
                .enumerate()
                .filter(|(_, c)| !c[r].is_zero())
                .map(|(a, c)| (a, c[r].clone()))
                .collect(),
        );
    }
    let n = forms[0].rows();
    sys.kernel()
        .iter()
        .map(|k| {
            forms
                .iter()
                .zip(k)
                .filter(|(_, c)| !c.is_zero())
                .fold(RationalMatrix::zeros(n, n), |acc, (f, c)| &acc + &f.scale(c))
        })
        .collect()
}

/// Closed elements of the span of `forms`.
pub fn closed_subspace(s: &ReductiveSplit, forms: &[RationalMatrix]) -> Vec<RationalMatrix> {
    let cols: Vec<Vec<Rational>> = forms.iter().map(|w| residual_vector(s, w)).collect();
    kernel_of_columns(&cols, forms)
}

/// Basis of the center of `h`, in parent coordinates.
pub fn center_of_h(s: &ReductiveSplit) -> Vec<Vec<Rational>> {
    let hb = s.h().basis();
    let g = s.parent();
    let d = g.dim();
    let mut sys = LinearSystem::new(hb.len());
    let brackets: Vec<Vec<Vec<Rational>>> = hb
        .iter()
        .map(|a| hb.iter().map(|b| g.bracket(a, b)).collect())
        .collect();
    for b in 0..hb.len() {
        for k in 0..d {
            sys.push_row(
                (0..hb.len())
                    .filter(|&a| !brackets[a][b][k].is_zero())
                    .map(|a| (a, brackets[a][b][k].clone()))
                    .collect(),
            );
        }
    }
    sys.kernel().iter().map(|c| s.h().combine(c)).collect()
}

/// `ω_z(X, Y) = B(z, [X, Y])` for `z` central in `h`.
pub fn form_from_central(s: &ReductiveSplit, z: &[Rational]) -> Result<RationalMatrix> {
    let g = s.parent();
    if !s.h().contains(z) || s.h().basis().iter().any(|h| !crate::exactnum::is_zero_vec(&g.bracket(z, h))) {
        return Err(Error::NotCentral);
    }
    let bz = s.killing().apply(z);
    let n = s.dim_m();
    let mut w = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let (ch, cm) = s.bracket_mm_basis(i, j);
            let mut full = s.h_vector(ch);
            crate::exactnum::add_scaled(&mut full, &int(1), &s.m_vector(cm));
            let v = crate::exactnum::dot(&bz, &full);
            w[(j, i)] = -v.clone();
            w[(i, j)] = v;
        }
    }
    if w.is_zero() {
        return Err(Error::ZeroForm);
    }
    let rep = isotropy_rep(s)?;
    if !is_invariant(&rep, &w, TensorKind::Alt2) || !is_closed(s, &w) {
        return Err(Error::Construction("B(z, [·,·]) failed the invariance or closedness check".into()));
    }
    Ok(w)
}

/// Integer coefficient vectors with entries in `[-bound, bound]`, ordered by
/// max-norm, zero excluded.
fn small_coefficient_vectors(k: usize, bound: i64, limit: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for norm in 1..=bound {
        let mut v = vec![-norm; k];
        loop {
            if v.iter().any(|x| x.abs() == norm) {
                out.push(v.clone());
                if out.len() >= limit {
                    return out;
                }
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == k {
                    break;
                }
                if v[pos] < norm {
                    v[pos] += 1;
                    break;
                }
                v[pos] = -norm;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    out
}

/// Coefficient bound for nondegenerate-element searches.
pub const SEARCH_BOUND: i64 = 3;
const SEARCH_LIMIT: usize = 5000;

/// First combination (small integer coefficients) that is invertible.
pub fn find_nondegenerate(basis: &[RationalMatrix]) -> (Option<(Vec<i64>, RationalMatrix)>, usize) {
    if basis.is_empty() {
        return (None, 0);
    }
    let n = basis[0].rows();
    let mut tried = 0;
    for c in small_coefficient_vectors(basis.len(), SEARCH_BOUND, SEARCH_LIMIT) {
        tried += 1;
        let m = basis
            .iter()
            .zip(&c)
            .filter(|(_, &x)| x != 0)
            .fold(RationalMatrix::zeros(n, n), |acc, (b, &x)| &acc + &b.scale(&int(x)));
        if m.is_invertible() {
            return (Some((c, m)), tried);
        }
    }
    (None, tried)
}

/// Closed invariant 2-forms and one symplectic member if any.
#[derive(Clone, Debug, Serialize)]
pub struct SymplecticFamily {
    pub invariant_dim: usize,
    pub closed_basis: Vec<RationalMatrix>,
    /// Integer coefficients on `closed_basis` and the resulting form.
    pub sample: Option<(Vec<i64>, RationalMatrix)>,
    /// Number of coefficient vectors examined.
    pub searched: usize,
}

pub fn symplectic_family(s: &ReductiveSplit) -> Result<SymplecticFamily> {
    let inv = invariant_tensors(s, TensorKind::Alt2)?;
    let closed_basis = closed_subspace(s, &inv.elements);
    let (sample, searched) = find_nondegenerate(&closed_basis);
    Ok(SymplecticFamily {
        invariant_dim: inv.dim(),
        closed_basis,
        sample,
        searched,
    })
}

/// Invariant endomorphisms with their multiplication table.
#[derive(Clone, Debug)]
pub struct CommutantAlgebra {
    n: usize,
    basis: Vec<RationalMatrix>,
    reader: CoordinateReader,
    /// `table[i][j]` = coordinates of `b_i b_j`.
    table: Vec<Vec<Vec<Rational>>>,
    unity: Vec<Rational>,
}

impl CommutantAlgebra {
    /// Algebra spanned by `basis` (must contain the identity and be closed).
    pub fn from_basis(n: usize, basis: Vec<RationalMatrix>) -> Result<Self> {
        let reader = CoordinateReader::new(basis.iter().map(RationalMatrix::to_vector).collect())?;
        let unity = reader
            .coordinates(&RationalMatrix::identity(n).to_vector())
            .ok_or_else(|| Error::Construction("commutant misses the identity".into()))?;
        let mut table = Vec::with_capacity(basis.len());
        for a in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for b in &basis {
                let c = reader
                    .coordinates(&(a * b).to_vector())
                    .ok_or_else(|| Error::Construction("commutant not closed under composition".into()))?;
                row.push(c);
            }
            table.push(row);
        }
        Ok(Self {
            n,
            basis,
            reader,
            table,
            unity,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[RationalMatrix] {
        &self.basis
    }

    pub fn table(&self) -> &[Vec<Vec<Rational>>] {
        &self.table
    }

    pub fn unity(&self) -> &[Rational] {
        &self.unity
    }

    pub fn element(&self, coords: &[Rational]) -> RationalMatrix {
        RationalMatrix::from_vector(self.n, self.n, &self.reader.combine(coords))
    }

    pub fn coordinates(&self, m: &RationalMatrix) -> Option<Vec<Rational>> {
        self.reader.coordinates(&m.to_vector())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (i + 1..self.dim()).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// `dim A / rad A` for a commutative algebra: rank of the trace form
    /// `tr(L_a L_b)`, whose kernel is the nilradical in characteristic zero.
    pub fn semisimple_rank(&self) -> usize {
        let k = self.dim();
        let mults: Vec<RationalMatrix> = (0..k).map(|i| self.left_mult(&unit_vec(k, i))).collect();
        RationalMatrix::from_fn(k, k, |i, j| (&mults[i] * &mults[j]).trace()).rank()
    }

    /// An element whose primary decomposition is the finest one.
    ///
    /// For a commutative algebra `x` qualifies when the distinct irreducible
    /// factors of its minimal polynomial have total degree `dim A / rad A`;
    /// several deterministic seeds are tried before giving up.
    pub fn generic_element(&self) -> Result<RationalMatrix> {
        let k = self.dim();
        if !self.is_commutative() {
            return Ok(self.element(&generic_coefficients(k, GENERIC_SEED, 7)));
        }
        let target = self.semisimple_rank();
        let mut best = 0;
        for attempt in 0..GENERIC_ATTEMPTS {
            let x = self.element(&generic_coefficients(k, GENERIC_SEED + attempt, 7 + 4 * attempt as i64));
            let reduced: usize = factor_low_degree(&min_poly(&x))?
                .iter()
                .map(|f| f.poly.degree().unwrap_or(0))
                .sum();
            if reduced == target {
                return Ok(x);
            }
            best = best.max(reduced);
        }
        Err(Error::Construction(format!(
            "no generic commutant element found: best reduced degree {best}, expected {target}"
        )))
    }

    /// Matrix of `y ↦ x·y` on commutant coordinates.
    pub fn left_mult(&self, x: &[Rational]) -> RationalMatrix {
        let k = self.dim();
        let mut m = RationalMatrix::zeros(k, k);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..k {
                for (l, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        m[(l, j)] += xi * c;
                    }
                }
            }
        }
        m
    }
}

pub fn commutant(s: &ReductiveSplit) -> Result<CommutantAlgebra> {
    let inv = invariant_tensors(s, TensorKind::Endo)?;
    CommutantAlgebra::from_basis(s.dim_m(), inv.elements)
}

const GENERIC_SEED: u64 = 0x5eed;
const GENERIC_ATTEMPTS: u64 = 8;

/// An invariant endomorphism with `I² = ε·Id`.
#[derive(Clone, Debug, Serialize)]
pub struct StructureCandidate {
    pub endo: RationalMatrix,
    /// `-1` almost complex, `+1` almost para-complex.
    pub epsilon: i8,
    pub plus_dim: usize,
    pub minus_dim: usize,
    /// Filled by [`evaluate_integrability`].
    pub integrable: Option<bool>,
    pub nijenhuis_rank: Option<usize>,
}

impl StructureCandidate {
    fn new(endo: RationalMatrix, epsilon: i8) -> Self {
        let n = endo.rows();
        let (plus_dim, minus_dim) = if epsilon == 1 {
            let plus = (&endo + &RationalMatrix::identity(n)).rank();
            (plus, n - plus)
        } else {
            (0, 0)
        };
        Self {
            endo,
            epsilon,
            plus_dim,
            minus_dim,
            integrable: None,
            nijenhuis_rank: None,
        }
    }

    /// Para-complex candidates need balanced eigenspaces.
    pub fn is_admissible(&self) -> bool {
        self.epsilon == -1 || (self.plus_dim == self.minus_dim && self.endo.trace().is_zero())
    }
}

/// Non-isolated solutions: one representative and the tangent dimension.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyDescriptor {
    pub representative: StructureCandidate,
    pub tangent_dim: usize,
}

/// Outcome of solving `I² = ε·Id` in the commutant.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RootSet {
    /// Complete list modulo global sign; `product_structures` are the para
    /// solutions with unequal eigenspaces, not counted as structures.
    Isolated {
        candidates: Vec<StructureCandidate>,
        product_structures: Vec<StructureCandidate>,
    },
    Family(FamilyDescriptor),
}

impl RootSet {
    pub fn candidates(&self) -> &[StructureCandidate] {
        match self {
            RootSet::Isolated { candidates, .. } => candidates,
            RootSet::Family(f) => std::slice::from_ref(&f.representative),
        }
    }

    pub fn candidates_mut(&mut self) -> &mut [StructureCandidate] {
        match self {
            RootSet::Isolated { candidates, .. } => candidates,
            RootSet::Family(f) => std::slice::from_mut(&mut f.representative),
        }
    }

    pub fn is_family(&self) -> bool {
        matches!(self, RootSet::Family(_))
    }
}

/// Newton iteration `z ← (z + ε z⁻¹)/2` inside the component `e·A`.
fn newton_lift(z0: RationalMatrix, e: &RationalMatrix, eps: i64) -> Result<RationalMatrix> {
    let n = e.rows();
    let target = e.scale(&int(eps));
    let complement = &RationalMatrix::identity(n) - e;
    let mut z = z0;
    for _ in 0..12 {
        if &z * &z == target {
            return Ok(z);
        }
        let inv = (&z + &complement)
            .inverse()
            .ok_or_else(|| Error::Construction("component element not invertible during lifting".into()))?;
        let zinv = &inv * e;
        z = (&z + &zinv.scale(&int(eps))).scale(&rat(1, 2));
    }
    Err(Error::Construction("square-root lifting did not terminate".into()))
}

/// Solutions of `z² = ε` in each local component of the commutative
/// algebra generated by `x` (as matrices on `m`), one per sign class.
fn component_roots(x: &RationalMatrix, eps: i8) -> Result<Option<Vec<RationalMatrix>>> {
    let n = x.rows();
    let mp = min_poly(x);
    let factors = factor_low_degree(&mp)?;
    let mut roots = Vec::new();
    for f in &factors {
        let deg = f.poly.degree().unwrap_or(0);
        if deg > 2 {
            return Err(Error::IrreducibleFactorTooLarge {
                degree: deg,
                factor: f.poly.to_string(),
            });
        }
        let q = f.poly.pow(f.multiplicity);
        let rest = mp.div_exact(&q).expect("factor divides");
        let u = rest
            .inverse_mod(&q)
            .ok_or_else(|| Error::Construction("coprime parts not invertible".into()))?;
        let e = rest.mul(&u).div_rem(&mp).1.eval_matrix(x);
        if deg == 1 {
            if eps == -1 {
                return Ok(None);
            }
            roots.push(e);
            continue;
        }
        // f = t² + b t + c with Δ = c - b²/4
        let (c, b) = (f.poly.coeff(0), f.poly.coeff(1));
        let delta = &c - &b * &b / int(4);
        if !delta.is_positive() {
            return Err(Error::IrrationalComponent(format!(
                "{} splits over the reals but not over the rationals",
                f.poly
            )));
        }
        if eps == 1 {
            roots.push(e);
            continue;
        }
        let sqrt = rational_sqrt(&delta).ok_or_else(|| {
            Error::IrrationalComponent(format!("complex structure on the {} component is irrational", f.poly))
        })?;
        let shifted = &(x * &e) + &e.scale(&(&b / int(2)));
        let z0 = shifted.scale(&sqrt.recip());
        roots.push(newton_lift(z0, &e, -1)?);
    }
    debug_assert!(roots.iter().all(|r| r.rows() == n));
    Ok(Some(roots))
}

/// All sign combinations modulo global sign, excluding `±Id`.
fn combine_roots(roots: &[RationalMatrix], eps: i8) -> (Vec<StructureCandidate>, Vec<StructureCandidate>) {
    let n = roots.first().map_or(0, RationalMatrix::rows);
    let id = RationalMatrix::identity(n);
    let k = roots.len();
    let mut candidates = Vec::new();
    let mut products = Vec::new();
    if k == 0 {
        return (candidates, products);
    }
    for mask in 0u64..(1u64 << (k - 1)) {
        let mut m = roots[0].clone();
        for (i, r) in roots.iter().enumerate().skip(1) {
            let sign = if mask >> (i - 1) & 1 == 1 { -1 } else { 1 };
            m = &m + &r.scale(&int(sign));
        }
        if m == id || m == -&id {
            continue;
        }
        let c = StructureCandidate::new(m, eps);
        if c.is_admissible() {
            candidates.push(c);
        } else {
            products.push(c);
        }
    }
    (candidates, products)
}

/// Solutions of `I² = ε·Id`, `I ≠ ±Id`, modulo global sign.
pub fn square_roots(c: &CommutantAlgebra, eps: i8) -> Result<RootSet> {
    let k = c.dim();
    let x = c.generic_element()?;
    let Some(roots) = component_roots(&x, eps)? else {
        return Err(Error::NoSolution { epsilon: eps });
    };
    let (candidates, product_structures) = combine_roots(&roots, eps);
    if c.is_commutative() {
        if eps == -1 && candidates.is_empty() {
            return Err(Error::NoSolution { epsilon: eps });
        }
        return Ok(RootSet::Isolated {
            candidates,
            product_structures,
        });
    }
    // non-commutative: representative from a maximal commutative piece
    let representative = candidates
        .into_iter()
        .next()
        .ok_or(Error::NoSolution { epsilon: eps })?;
    let coords = c.coordinates(&representative.endo).expect("lies in the commutant");
    // tangent space: X with I X + X I = 0
    let li = c.left_mult(&coords);
    let ri = RationalMatrix::from_fn(k, k, |l, j| {
        (0..k).fold(Rational::zero(), |acc, i| acc + &coords[i] * &c.table()[j][i][l])
    });
    let tangent_dim = (&li + &ri).kernel().len();
    Ok(RootSet::Family(FamilyDescriptor {
        representative,
        tangent_dim,
    }))
}

/// `N(X,Y) = [IX,IY]_m − I[IX,Y]_m − I[X,IY]_m + ε[X,Y]_m` with `I² = ε`;
/// returns `(integrable, rank of the residual values)`.
pub fn nijenhuis_integrable(s: &ReductiveSplit, i: &RationalMatrix, eps: i8) -> (bool, usize) {
    let n = s.dim_m();
    let ad = bracket_matrices(s);
    let mut blocks: Vec<Vec<Rational>> = Vec::new();
    for a in 0..n {
        // K_a = ad(I e_a)
        let mut k = RationalMatrix::zeros(n, n);
        for (l, x) in i.column(a).iter().enumerate() {
            if !x.is_zero() {
                k = &k + &ad[l].scale(x);
            }
        }
        // column b of N_a is N(e_a, e_b)
        let na = &(&(&(&k * i) - &(i * &k)) - &(&(i * &ad[a]) * i)) + &ad[a].scale(&int(eps as i64));
        for b in a + 1..n {
            let col = na.column(b);
            if col.iter().any(|x| !x.is_zero()) {
                blocks.push(col);
            }
        }
    }
    if blocks.is_empty() {
        return (true, 0);
    }
    (false, RationalMatrix::from_columns(&blocks).rank())
}

/// Fills the integrability fields of every candidate.
pub fn evaluate_integrability(s: &ReductiveSplit, roots: &mut RootSet) {
    for c in roots.candidates_mut() {
        let (ok, rank) = nijenhuis_integrable(s, &c.endo, c.epsilon);
        c.integrable = Some(ok);
        c.nijenhuis_rank = Some(rank);
    }
}

/// A compatible metric for one structure: `g(IX, IY) = -ε g(X, Y)` and
/// `ω = g(I·, ·)` closed.
#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    /// Index into the candidate list the record refers to.
    pub structure: usize,
    pub epsilon: i8,
    pub integrable: Option<bool>,
    /// Dimension of the space of compatible invariant symmetric forms.
    pub family_dim: usize,
    pub metric: RationalMatrix,
    pub signature: Signature,
    pub kahler_form: RationalMatrix,
}

/// Compatible invariant symmetric forms for `I`.
pub fn compatible_metrics(s: &ReductiveSplit, sym: &[RationalMatrix], i: &RationalMatrix, eps: i8) -> Vec<RationalMatrix> {
    let it = i.transpose();
    let cols: Vec<Vec<Rational>> = sym
        .iter()
        .map(|g| {
            let mut v = (&(&(&it * g) * i) + &g.scale(&int(eps as i64))).into_data();
            v.extend(residual_vector(s, &(&it * g)));
            v
        })
        .collect();
    kernel_of_columns(&cols, sym)
}

pub fn pair_structures(s: &ReductiveSplit, candidates: &[StructureCandidate]) -> Result<Vec<PairRecord>> {
    let sym = invariant_tensors(s, TensorKind::Sym2)?;
    let mut out = Vec::new();
    for (idx, c) in candidates.iter().enumerate() {
        let family = compatible_metrics(s, &sym.elements, &c.endo, c.epsilon);
        if let (Some((_, g)), _) = find_nondegenerate(&family) {
            let kahler_form = &c.endo.transpose() * &g;
            out.push(PairRecord {
                structure: idx,
                epsilon: c.epsilon,
                integrable: c.integrable,
                family_dim: family.len(),
                signature: signature(&g)?,
                metric: g,
                kahler_form,
            });
        }
    }
    Ok(out)
}

/// Whether every isotropy generator lies in `gl(F)⊗1 + 1⊗gl(W)` for the
/// factorization `m = F ⊗ W` with index `f·dim_w + w`.
pub fn tensor_decomposition_check(s: &ReductiveSplit, dim_w: usize, dim_f: usize) -> Result<bool> {
    let n = s.dim_m();
    if dim_w * dim_f != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: dim_w * dim_f,
        });
    }
    let rep = isotropy_rep(s)?;
    Ok(generators_factor(&rep, dim_w, dim_f))
}

pub fn generators_factor(rep: &IsotropyRep, dim_w: usize, dim_f: usize) -> bool {
    let n = dim_w * dim_f;
    let unit = |d: usize, i: usize, j: usize| {
        let mut m = RationalMatrix::zeros(d, d);
        m[(i, j)] = int(1);
        m
    };
    let mut span = Vec::new();
    for i in 0..dim_w {
        for j in 0..dim_w {
            span.push(RationalMatrix::identity(dim_f).kron(&unit(dim_w, i, j)).to_vector());
        }
    }
    for i in 0..dim_f {
        for j in 0..dim_f {
            span.push(unit(dim_f, i, j).kron(&RationalMatrix::identity(dim_w)).to_vector());
        }
    }
    let space = independent_span(n * n, span);
    rep.generators.iter().all(|a| space.contains(&a.to_vector()))
}

/// Unit vector helper for tests and callers working in `m` coordinates.
pub fn m_unit(s: &ReductiveSplit, i: usize) -> Vec<Rational> {
    unit_vec(s.dim_m(), i)
}

/// Exposes the polynomial type for callers inspecting generic elements.
pub fn generic_min_poly(c: &CommutantAlgebra) -> RationalPolynomial {
    min_poly(&c.left_mult(&generic_coefficients(c.dim(), GENERIC_SEED, 7)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_so, build_su};
    use crate::homogeneous::split_from_labels;
    use crate::exactnum::add_scaled;

    #[test]
    fn sphere_has_one_symplectic_form_and_one_complex_structure() {
        let g = build_so(5, 0).unwrap();
        let s = split_from_labels(&g, "h+", "m+").unwrap();
        let fam = symplectic_family(&s).unwrap();
        assert_eq!(fam.closed_basis.len(), 1);
        assert!(fam.sample.is_some());
        let c = commutant(&s).unwrap();
        assert_eq!(c.dim(), 2);
        let mut roots = square_roots(&c, -1).unwrap();
        assert_eq!(roots.candidates().len(), 1);
        evaluate_integrability(&s, &mut roots);
        assert_eq!(roots.candidates()[0].integrable, Some(true));
        assert!(matches!(square_roots(&c, 1), Ok(RootSet::Isolated { ref candidates, .. }) if candidates.is_empty()));
    }

    /// `h^C ⊕ m^{1,0}` closed under the parent bracket, written over the
    /// reals: `I([X,Y] - [IX,IY])_m = ([IX,Y] + [X,IY])_m` on basis pairs.
    fn eigenspace_closed(s: &ReductiveSplit, i: &RationalMatrix) -> bool {
        let g = s.parent();
        let n = s.dim_m();
        let vec_of = |c: Vec<Rational>| s.m_vector(&c);
        (0..n).all(|a| {
            (a + 1..n).all(|b| {
                let (x, y) = (vec_of(m_unit(s, a)), vec_of(m_unit(s, b)));
                let (ix, iy) = (vec_of(i.column(a)), vec_of(i.column(b)));
                let mut r = g.bracket(&x, &y);
                add_scaled(&mut r, &int(-1), &g.bracket(&ix, &iy));
                let mut t = g.bracket(&ix, &y);
                add_scaled(&mut t, &int(1), &g.bracket(&x, &iy));
                i.apply(&s.split_coords(&r).1) == s.split_coords(&t).1
            })
        })
    }

    #[test]
    fn cp2_commutant_and_structures() {
        let g = build_su(3, 0).unwrap();
        let s = split_from_labels(&g, "h", "l").unwrap();
        let c = commutant(&s).unwrap();
        assert_eq!(c.dim(), 6);
        assert_eq!(c.semisimple_rank(), 6);
        let mut roots = square_roots(&c, -1).unwrap();
        assert_eq!(roots.candidates().len(), 4);
        evaluate_integrability(&s, &mut roots);
        for cand in roots.candidates() {
            assert_eq!(cand.integrable, Some(eigenspace_closed(&s, &cand.endo)));
        }
        // three isotropy lines with weights α, β, α+β: of the four sign
        // classes only the one ordering α, β against α+β fails closure
        let integrable = roots.candidates().iter().filter(|c| c.integrable == Some(true)).count();
        assert_eq!(integrable, 3);
        assert!(matches!(square_roots(&c, 1), Ok(RootSet::Isolated { ref candidates, .. }) if candidates.is_empty()));
    }

    #[test]
    fn odd_dimension_has_no_symplectic_sample() {
        let rep = IsotropyRep {
            generators: vec![RationalMatrix::zeros(3, 3)],
        };
        let alt = invariant_tensors_for(&rep, 3, TensorKind::Alt2);
        assert_eq!(alt.dim(), 3);
        let (sample, searched) = find_nondegenerate(&alt.elements);
        assert!(sample.is_none());
        assert_eq!(searched, 7usize.pow(3) - 1);
    }

    #[test]
    fn coefficient_enumeration_is_exhaustive() {
        let v = small_coefficient_vectors(2, 2, usize::MAX);
        assert_eq!(v.len(), 24);
        assert_eq!(v[0].iter().map(|x| x.abs()).max(), Some(1));
    }
}
