//! Concrete Lie algebras with labeled bases.
//!
//! Realification conventions, used by every matrix builder:
//! * a complex entry `a + bi` becomes the real block `[[a, -b], [b, a]]`;
//! * a quaternion entry `q` becomes the matrix of left multiplication `x ↦ qx`
//!   in the real basis `(1, i, j, k)`;
//! * matrix row/column `r` of the scalar matrix occupies real rows/columns
//!   `r·s .. r·s + s` with `s` the block size.
//!
//! Since both maps are multiplicative, commutators of realified matrices are
//! realified commutators.

pub mod e;
pub mod f4;
pub mod golden;
pub mod jordan;
pub mod octonion;
pub mod quaternion;
pub mod so;
pub mod sp;
pub mod su;

use std::collections::BTreeMap;

pub use e::build_e;
pub use f4::{build_f4, F4Data};
pub use octonion::Octonion;
pub use quaternion::Quaternion;
pub use so::build_so;
pub use sp::build_sp;
pub use su::build_su;

use crate::error::{Error, Result};
use crate::exactnum::{Rational, RationalMatrix};
use crate::liealg::{CoordinateReader, LieAlgebra, Subspace};

/// Matrix realization of an algebra: one real matrix per basis element.
#[derive(Clone, Debug)]
pub struct Realization {
    matrices: Vec<RationalMatrix>,
    reader: CoordinateReader,
}

impl Realization {
    pub fn new(matrices: Vec<RationalMatrix>) -> Result<Self> {
        let reader = CoordinateReader::new(matrices.iter().map(RationalMatrix::to_vector).collect())?;
        Ok(Self { matrices, reader })
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    pub fn size(&self) -> usize {
        self.matrices.first().map_or(0, RationalMatrix::rows)
    }

    /// Coordinates of a matrix in the algebra, `None` if it lies outside.
    pub fn coordinates(&self, m: &RationalMatrix) -> Option<Vec<Rational>> {
        self.reader.coordinates(&m.to_vector())
    }

    pub fn matrix(&self, coords: &[Rational]) -> RationalMatrix {
        let n = self.size();
        RationalMatrix::from_vector(n, n, &self.reader.combine(coords))
    }
}

/// A Lie algebra together with named elements and subspaces.
#[derive(Clone, Debug)]
pub struct LabeledAlgebra {
    pub name: String,
    pub algebra: LieAlgebra,
    pub realization: Option<Realization>,
    /// `+1` for compact-type realizations, `-1` for the noncompact duals.
    pub epsilon: Option<i8>,
    elements: BTreeMap<String, Vec<Rational>>,
    subspaces: BTreeMap<String, Subspace>,
}

impl LabeledAlgebra {
    pub fn new(name: impl Into<String>, algebra: LieAlgebra) -> Self {
        Self {
            name: name.into(),
            algebra,
            realization: None,
            epsilon: None,
            elements: BTreeMap::new(),
            subspaces: BTreeMap::new(),
        }
    }

    /// Matrix algebra with one label per basis matrix.
    pub fn from_matrices(name: impl Into<String>, labels: Vec<String>, mats: Vec<RationalMatrix>) -> Result<Self> {
        let algebra = LieAlgebra::from_matrices(labels, &mats)?;
        let mut out = Self::new(name, algebra);
        out.realization = Some(Realization::new(mats)?);
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn add_element(&mut self, label: &str, v: Vec<Rational>) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        if self.elements.insert(label.to_string(), v).is_some() {
            return Err(Error::Construction(format!("duplicate element label {label}")));
        }
        Ok(())
    }

    pub fn add_subspace(&mut self, label: &str, basis: Vec<Vec<Rational>>) -> Result<()> {
        let s = Subspace::new(self.dim(), basis)?;
        if self.subspaces.insert(label.to_string(), s).is_some() {
            return Err(Error::Construction(format!("duplicate subspace label {label}")));
        }
        Ok(())
    }

    /// Element by label; falls back to basis labels.
    pub fn element(&self, label: &str) -> Option<Vec<Rational>> {
        if let Some(v) = self.elements.get(label) {
            return Some(v.clone());
        }
        self.algebra
            .index_of(label)
            .map(|i| crate::exactnum::unit_vec(self.dim(), i))
    }

    pub fn subspace(&self, label: &str) -> Option<&Subspace> {
        self.subspaces.get(label)
    }

    pub fn element_labels(&self) -> impl Iterator<Item = &str> {
        self.elements.keys().map(String::as_str)
    }

    pub fn subspace_labels(&self) -> impl Iterator<Item = &str> {
        self.subspaces.keys().map(String::as_str)
    }

    /// Coordinates of the span of basis elements whose labels satisfy `pred`.
    pub fn basis_where(&self, pred: impl Fn(&str) -> bool) -> Vec<Vec<Rational>> {
        (0..self.dim())
            .filter(|&i| pred(self.algebra.label(i)))
            .map(|i| crate::exactnum::unit_vec(self.dim(), i))
            .collect()
    }

    pub fn coords_of_matrix(&self, m: &RationalMatrix) -> Option<Vec<Rational>> {
        self.realization.as_ref()?.coordinates(m)
    }

    pub fn matrix_of(&self, coords: &[Rational]) -> Option<RationalMatrix> {
        Some(self.realization.as_ref()?.matrix(coords))
    }

    /// Checks that every named element and subspace lives in the algebra.
    pub fn check_labels(&self) -> Result<()> {
        for (k, v) in &self.elements {
            if v.len() != self.dim() {
                return Err(Error::Construction(format!("element {k} has wrong length")));
            }
        }
        for (k, s) in &self.subspaces {
            if s.ambient_dim() != self.dim() {
                return Err(Error::Construction(format!("subspace {k} has wrong ambient dimension")));
            }
        }
        Ok(())
    }
}

/// Real matrix of a complex or quaternionic matrix.
#[derive(Clone, Debug)]
pub struct ScalarMatrix {
    n: usize,
    entries: Vec<Quaternion>,
}

/// Division algebra used for realification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scalars {
    Complex,
    Quaternion,
}

impl Scalars {
    pub fn block(self) -> usize {
        match self {
            Scalars::Complex => 2,
            Scalars::Quaternion => 4,
        }
    }
}

impl ScalarMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![Quaternion::zero(); n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &Quaternion {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, q: Quaternion) {
        self.entries[r * self.n + c] = q;
    }

    pub fn add_at(&mut self, r: usize, c: usize, q: &Quaternion) {
        let cur = self.entries[r * self.n + c].clone();
        self.entries[r * self.n + c] = &cur + q;
    }

    pub fn realify(&self, scalars: Scalars) -> RationalMatrix {
        let s = scalars.block();
        let mut out = RationalMatrix::zeros(self.n * s, self.n * s);
        for r in 0..self.n {
            for c in 0..self.n {
                let q = self.get(r, c);
                let block = match scalars {
                    Scalars::Complex => {
                        assert!(q.is_complex(), "quaternionic entry in a complex matrix");
                        q.complex_block()
                    }
                    Scalars::Quaternion => q.left_mult(),
                };
                for a in 0..s {
                    for b in 0..s {
                        out[(r * s + a, c * s + b)] = block[(a, b)].clone();
                    }
                }
            }
        }
        out
    }
}

/// Bivector `e_a ∧ e_b` acting by `x ↦ ⟨e_b, x⟩ e_a − ⟨e_a, x⟩ e_b`.
pub fn bivector(eta: &[i64], a: usize, b: usize) -> RationalMatrix {
    let n = eta.len();
    let mut m = RationalMatrix::zeros(n, n);
    m[(a, b)] = crate::exactnum::int(eta[b]);
    m[(b, a)] = crate::exactnum::int(-eta[a]);
    m
}
