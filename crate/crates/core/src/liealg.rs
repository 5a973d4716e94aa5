//! Finite-dimensional real Lie algebras given by exact structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{self, LinearSystem, Rational, RationalMatrix};

/// Reads coordinates of vectors lying in a fixed span.
///
/// Picks positions where the spanning vectors are independent and inverts the
/// square block there; membership is confirmed against the full vector.
#[derive(Clone, Debug)]
pub struct CoordinateReader {
    basis: Vec<Vec<Rational>>,
    positions: Vec<usize>,
    inverse: RationalMatrix,
}

impl CoordinateReader {
    pub fn new(basis: Vec<Vec<Rational>>) -> Result<Self> {
        let k = basis.len();
        if k == 0 {
            return Ok(Self {
                basis,
                positions: Vec::new(),
                inverse: RationalMatrix::zeros(0, 0),
            });
        }
        let n = basis[0].len();
        if basis.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: basis.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n),
            });
        }
        // Pivot columns of the k×n matrix whose rows are the basis vectors.
        let mut rows = RationalMatrix::from_rows(basis.clone());
        let positions = rows.rref_in_place();
        if positions.len() < k {
            return Err(Error::LinearlyDependent);
        }
        let block = RationalMatrix::from_rows(
            basis
                .iter()
                .map(|v| positions.iter().map(|&p| v[p].clone()).collect())
                .collect(),
        );
        let inverse = block.inverse().ok_or(Error::LinearlyDependent)?;
        Ok(Self {
            basis,
            positions,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Coordinates assuming `v` lies in the span (not checked).
    pub fn coordinates_unchecked(&self, v: &[Rational]) -> Vec<Rational> {
        // c · block = v|_positions  =>  c = v|_positions · block^{-1}
        let k = self.basis.len();
        let mut c = vec![Rational::zero(); k];
        for (a, &p) in self.positions.iter().enumerate() {
            let x = &v[p];
            if x.is_zero() {
                continue;
            }
            for (b, cb) in c.iter_mut().enumerate() {
                let m = &self.inverse[(a, b)];
                if !m.is_zero() {
                    *cb += x * m;
                }
            }
        }
        c
    }

    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        exactnum::lin_comb(coords, &self.basis)
    }

    /// Coordinates if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if self.basis.is_empty() {
            return exactnum::is_zero_vec(v).then(Vec::new);
        }
        let c = self.coordinates_unchecked(v);
        (self.combine(&c) == v).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// Linear subspace of a Lie algebra, in parent coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    reader: CoordinateReader,
}

impl Subspace {
    pub fn new(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = basis.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                got: v.len(),
            });
        }
        Ok(Self {
            ambient_dim,
            reader: CoordinateReader::new(basis)?,
        })
    }

    /// Spanned by the given parent basis indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let basis = indices
            .iter()
            .map(|&i| exactnum::unit_vec(ambient_dim, i))
            .collect();
        Self::new(ambient_dim, basis).expect("distinct unit vectors")
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::new(ambient_dim, Vec::new()).expect("empty basis")
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Self::coordinate(ambient_dim, &(0..ambient_dim).collect::<Vec<_>>())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.reader.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        self.reader.basis()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reader.contains(v)
    }

    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.reader.coordinates(v)
    }

    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        self.reader.combine(coords)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Sum of two subspaces (a basis is extracted).
    pub fn sum(&self, other: &Subspace) -> Subspace {
        let all: Vec<Vec<Rational>> = self.basis().iter().chain(other.basis()).cloned().collect();
        independent_span(self.ambient_dim, all)
    }
}

/// Subspace spanned by possibly dependent vectors.
pub fn independent_span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Subspace {
    let mut picked: Vec<Vec<Rational>> = Vec::new();
    for v in vectors {
        if exactnum::is_zero_vec(&v) {
            continue;
        }
        let mut trial = picked.clone();
        trial.push(v);
        if CoordinateReader::new(trial.clone()).is_ok() {
            picked = trial;
        }
    }
    Subspace::new(ambient_dim, picked).expect("independent by construction")
}

/// Real Lie algebra with labeled basis and structure constants
/// `[b_i, b_j] = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    c: Vec<Rational>,
    sparse: Vec<Vec<(usize, Rational)>>,
}

impl LieAlgebra {
    /// From a dense `dim³` table, indexed `(i·dim + j)·dim + k`.
    pub fn new(labels: Vec<String>, c: Vec<Rational>) -> Result<Self> {
        let dim = labels.len();
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: c.len(),
            });
        }
        let sparse = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter(|&k| !c[ij * dim + k].is_zero())
                    .map(|k| (k, c[ij * dim + k].clone()))
                    .collect()
            })
            .collect();
        Ok(Self {
            dim,
            labels,
            c,
            sparse,
        })
    }

    /// From a closure giving the coordinates of `[b_i, b_j]`.
    pub fn from_bracket_fn(
        labels: Vec<String>,
        mut bracket: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut c = vec![Rational::zero(); dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let v = bracket(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: v.len(),
                    });
                }
                for (k, x) in v.into_iter().enumerate() {
                    c[(i * dim + j) * dim + k] = x;
                }
            }
        }
        Self::new(labels, c)
    }

    /// Matrix Lie algebra spanned by the given (independent, commutator-closed) matrices.
    pub fn from_matrices(labels: Vec<String>, mats: &[RationalMatrix]) -> Result<Self> {
        if labels.len() != mats.len() {
            return Err(Error::DimensionMismatch {
                expected: mats.len(),
                got: labels.len(),
            });
        }
        let reader = CoordinateReader::new(mats.iter().map(RationalMatrix::to_vector).collect())?;
        Self::from_bracket_fn(labels, |i, j| {
            if i >= j {
                // filled by antisymmetry below; keep zero here, then patch.
                return vec![Rational::zero(); mats.len()];
            }
            let br = mats[i].commutator(&mats[j]).to_vector();
            reader.coordinates(&br).unwrap_or_else(|| {
                panic!("matrix basis not closed under commutator at ({i}, {j})")
            })
        })
        .map(|alg| alg.antisymmetrized_from_upper())
    }

    fn antisymmetrized_from_upper(mut self) -> Self {
        let d = self.dim;
        for i in 0..d {
            for j in 0..i {
                for k in 0..d {
                    self.c[(i * d + j) * d + k] = -self.c[(j * d + i) * d + k].clone();
                }
            }
        }
        Self::new(self.labels, self.c).expect("same shape")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero coordinates of `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.sparse[i * self.dim + j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in self.bracket_basis(i, j) {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    /// First antisymmetry or Jacobi failure on basis elements.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in i..d {
                for k in 0..d {
                    if *self.structure_constant(i, j, k) != -self.structure_constant(j, i, k).clone() {
                        return Err(Error::NotAntisymmetric { i, j });
                    }
                }
            }
        }
        let ad: Vec<RationalMatrix> = (0..d).map(|i| self.ad_basis(i)).collect();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]
                    let mut acc = vec![Rational::zero(); d];
                    for (m, c) in self.bracket_basis(j, k) {
                        exactnum::add_scaled(&mut acc, c, &ad[i].column(*m));
                    }
                    for (m, c) in self.bracket_basis(k, i) {
                        exactnum::add_scaled(&mut acc, c, &ad[j].column(*m));
                    }
                    for (m, c) in self.bracket_basis(i, j) {
                        exactnum::add_scaled(&mut acc, c, &ad[k].column(*m));
                    }
                    if !exactnum::is_zero_vec(&acc) {
                        return Err(Error::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `y ↦ [b_i, y]`.
    pub fn ad_basis(&self, i: usize) -> RationalMatrix {
        let d = self.dim;
        let mut m = RationalMatrix::zeros(d, d);
        for j in 0..d {
            for (k, c) in self.bracket_basis(i, j) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn adjoint(&self, x: &[Rational]) -> Result<RationalMatrix> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let d = self.dim;
        let mut m = RationalMatrix::zeros(d, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in self.bracket_basis(i, j) {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        Ok(m)
    }

    /// Killing form `B(x, y) = tr(ad x · ad y)` on the basis.
    pub fn killing(&self) -> RationalMatrix {
        let d = self.dim;
        // ad_i[l][k] = c[i][k][l]; B_ij = Σ_{k,l} c[i][k][l] c[j][l][k]
        let mut b = RationalMatrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let mut acc = Rational::zero();
                for k in 0..d {
                    for (l, cikl) in self.bracket_basis(i, k) {
                        let cjlk = self.structure_constant(j, *l, k);
                        if !cjlk.is_zero() {
                            acc += cikl * cjlk;
                        }
                    }
                }
                b[(i, j)] = acc.clone();
                b[(j, i)] = acc;
            }
        }
        b
    }

    /// `{x : [x, s] = 0 for all s in S}`, from one stacked kernel.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let d = self.dim;
        let mut sys = LinearSystem::new(d);
        for sv in s.basis() {
            // column i of the system: [b_i, s]
            let cols: Vec<Vec<Rational>> = (0..d)
                .map(|i| self.bracket(&exactnum::unit_vec(d, i), sv))
                .collect();
            for k in 0..d {
                sys.push_row(
                    (0..d)
                        .filter(|&i| !cols[i][k].is_zero())
                        .map(|i| (i, cols[i][k].clone()))
                        .collect(),
                );
            }
        }
        Subspace::new(d, sys.kernel()).expect("kernel basis is independent")
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::whole(self.dim))
    }

    /// Whether `[S, S] ⊆ S`.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.closure_failure(s).is_none()
    }

    /// First pair of basis indices whose bracket leaves `S`.
    pub fn closure_failure(&self, s: &Subspace) -> Option<(usize, usize)> {
        let b = s.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !s.contains(&self.bracket(&b[i], &b[j])) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// The subalgebra spanned by `s` as an algebra in its own right.
    pub fn restrict(&self, s: &Subspace, labels: Vec<String>) -> Result<LieAlgebra> {
        if let Some((i, j)) = self.closure_failure(s) {
            return Err(Error::NotSubalgebra { i, j });
        }
        let b = s.basis();
        LieAlgebra::from_bracket_fn(labels, |i, j| {
            s.coordinates(&self.bracket(&b[i], &b[j])).expect("closed")
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, signature};

    pub(crate) fn so3() -> LieAlgebra {
        // [e_i, e_j] = ε_ijk e_k
        let labels = vec!["e1".into(), "e2".into(), "e3".into()];
        LieAlgebra::from_bracket_fn(labels, |i, j| {
            let mut v = vec![Rational::zero(); 3];
            if i != j {
                let k = 3 - i - j;
                let sign = if (i + 1) % 3 == j { 1 } else { -1 };
                v[k] = int(sign);
            }
            v
        })
        .unwrap()
    }

    #[test]
    fn so3_validates_and_has_killing_minus_two() {
        let g = so3();
        g.validate().unwrap();
        assert_eq!(g.killing(), RationalMatrix::scalar(3, &int(-2)));
        assert!(g.center().dim() == 0);
    }

    #[test]
    fn flipped_sign_is_reported() {
        let idx = |i: usize, j: usize, k: usize| (i * 3 + j) * 3 + k;
        let mut c = so3().c.clone();
        // break [e1,e2] = e3 on one side only
        c[idx(0, 1, 2)] = int(-1);
        let g = LieAlgebra::new(so3().labels.clone(), c).unwrap();
        assert!(matches!(g.validate(), Err(Error::NotAntisymmetric { i: 0, j: 1 })));
        // [e1,e2] = e3 + e1 stays antisymmetric but breaks Jacobi
        let mut c = so3().c.clone();
        c[idx(0, 1, 0)] = int(1);
        c[idx(1, 0, 0)] = int(-1);
        let g = LieAlgebra::new(so3().labels.clone(), c).unwrap();
        assert!(matches!(g.validate(), Err(Error::JacobiViolation { i: 0, j: 1, k: 2 })));
    }

    #[test]
    fn adjoint_kills_its_argument() {
        let g = so3();
        let x = vec![int(1), int(-2), int(3)];
        let ad = g.adjoint(&x).unwrap();
        assert!(exactnum::is_zero_vec(&ad.apply(&x)));
        assert_eq!(signature(&g.killing()).unwrap().neg, 3);
    }

    #[test]
    fn abelian_killing_is_zero() {
        let g = LieAlgebra::new(vec!["a".into(), "b".into()], vec![Rational::zero(); 8]).unwrap();
        assert!(g.killing().is_zero());
        assert_eq!(g.center().dim(), 2);
    }

    #[test]
    fn subalgebra_checks() {
        let g = so3();
        assert!(g.is_subalgebra(&Subspace::coordinate(3, &[0])));
        assert!(!g.is_subalgebra(&Subspace::coordinate(3, &[0, 1])));
        assert_eq!(g.centralizer(&Subspace::coordinate(3, &[2])).dim(), 1);
    }
}
