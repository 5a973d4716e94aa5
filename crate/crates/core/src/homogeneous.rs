//! Reductive decompositions `g = h ⊕ m` and their isotropy representations.

use std::sync::OnceLock;

use num_traits::Zero;

use crate::catalog::LabeledAlgebra;
use crate::error::{Error, Result};
use crate::exactnum::{kernel_basis, Rational, RationalMatrix};
use crate::liealg::{CoordinateReader, LieAlgebra, Subspace};

/// A validated reductive split.
///
/// Besides the projections, the brackets `[m_i, m_j]` are tabulated once in
/// adapted coordinates since every invariant-tensor computation needs them.
#[derive(Clone, Debug)]
pub struct ReductiveSplit {
    parent: LieAlgebra,
    h: Subspace,
    m: Subspace,
    /// Reads `(h coords, m coords)` of any parent vector.
    adapted: CoordinateReader,
    proj_h: RationalMatrix,
    proj_m: RationalMatrix,
    /// `mm_h[i][j]`, `mm_m[i][j]`: components of `[m_i, m_j]`.
    mm_h: Vec<Vec<Vec<Rational>>>,
    mm_m: Vec<Vec<Vec<Rational>>>,
    killing: OnceLock<RationalMatrix>,
}

/// Validates `h` as a subalgebra, `h ⊕ m = g` and `[h, m] ⊆ m`.
pub fn make_split(g: &LieAlgebra, h: &Subspace, m: &Subspace) -> Result<ReductiveSplit> {
    let d = g.dim();
    if h.ambient_dim() != d || m.ambient_dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: if h.ambient_dim() != d { h.ambient_dim() } else { m.ambient_dim() },
        });
    }
    if h.dim() + m.dim() != d {
        return Err(Error::NotComplement(format!(
            "dim h + dim m = {} + {} ≠ {d}",
            h.dim(),
            m.dim()
        )));
    }
    if let Some((i, j)) = g.closure_failure(h) {
        return Err(Error::NotSubalgebra { i, j });
    }
    let basis: Vec<Vec<Rational>> = h.basis().iter().chain(m.basis()).cloned().collect();
    let adapted = CoordinateReader::new(basis)
        .map_err(|_| Error::NotComplement("h ∩ m ≠ 0".into()))?;
    for (i, hv) in h.basis().iter().enumerate() {
        for (j, mv) in m.basis().iter().enumerate() {
            if !m.contains(&g.bracket(hv, mv)) {
                return Err(Error::NotInvariantComplement { i, j });
            }
        }
    }

    let (dh, dm) = (h.dim(), m.dim());
    let mut proj_h = RationalMatrix::zeros(d, d);
    let mut proj_m = RationalMatrix::zeros(d, d);
    for col in 0..d {
        let coords = adapted.coordinates_unchecked(&crate::exactnum::unit_vec(d, col));
        let ph = h.combine(&coords[..dh]);
        let pm = m.combine(&coords[dh..]);
        for r in 0..d {
            proj_h[(r, col)] = ph[r].clone();
            proj_m[(r, col)] = pm[r].clone();
        }
    }

    let mut mm_h = vec![vec![Vec::new(); dm]; dm];
    let mut mm_m = vec![vec![Vec::new(); dm]; dm];
    for i in 0..dm {
        mm_h[i][i] = vec![Rational::zero(); dh];
        mm_m[i][i] = vec![Rational::zero(); dm];
        for j in i + 1..dm {
            let br = g.bracket(&m.basis()[i], &m.basis()[j]);
            let c = adapted.coordinates_unchecked(&br);
            let (ch, cm) = (c[..dh].to_vec(), c[dh..].to_vec());
            mm_h[j][i] = ch.iter().map(|x| -x.clone()).collect();
            mm_m[j][i] = cm.iter().map(|x| -x.clone()).collect();
            mm_h[i][j] = ch;
            mm_m[i][j] = cm;
        }
    }

    Ok(ReductiveSplit {
        parent: g.clone(),
        h: h.clone(),
        m: m.clone(),
        adapted,
        proj_h,
        proj_m,
        mm_h,
        mm_m,
        killing: OnceLock::new(),
    })
}

/// Split from subspaces recorded on a labeled algebra.
pub fn split_from_labels(g: &LabeledAlgebra, h: &str, m: &str) -> Result<ReductiveSplit> {
    let missing = |l: &str| Error::Construction(format!("{} has no subspace {l}", g.name));
    let hs = g.subspace(h).ok_or_else(|| missing(h))?;
    let ms = g.subspace(m).ok_or_else(|| missing(m))?;
    make_split(&g.algebra, hs, ms)
}

impl ReductiveSplit {
    pub fn parent(&self) -> &LieAlgebra {
        &self.parent
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn m(&self) -> &Subspace {
        &self.m
    }

    pub fn dim_h(&self) -> usize {
        self.h.dim()
    }

    pub fn dim_m(&self) -> usize {
        self.m.dim()
    }

    /// Killing form of the parent, computed on first use.
    pub fn killing(&self) -> &RationalMatrix {
        self.killing.get_or_init(|| self.parent.killing())
    }

    pub fn proj_h(&self) -> &RationalMatrix {
        &self.proj_h
    }

    pub fn proj_m(&self) -> &RationalMatrix {
        &self.proj_m
    }

    /// `(h coords, m coords)` of a parent vector.
    pub fn split_coords(&self, x: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut c = self.adapted.coordinates_unchecked(x);
        let m = c.split_off(self.dim_h());
        (c, m)
    }

    /// Parent vector of `m` coordinates.
    pub fn m_vector(&self, coords: &[Rational]) -> Vec<Rational> {
        self.m.combine(coords)
    }

    pub fn h_vector(&self, coords: &[Rational]) -> Vec<Rational> {
        self.h.combine(coords)
    }

    /// `h` and `m` components of `[m_i, m_j]`.
    pub fn bracket_mm_basis(&self, i: usize, j: usize) -> (&[Rational], &[Rational]) {
        (&self.mm_h[i][j], &self.mm_m[i][j])
    }

    /// `[x, y]_m` for `m` coordinates.
    pub fn bracket_m(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.bracket_mm(x, y).1
    }

    /// `([x, y]_h, [x, y]_m)` for `m` coordinates.
    pub fn bracket_mm(&self, x: &[Rational], y: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let (dh, dm) = (self.dim_h(), self.dim_m());
        let mut oh = vec![Rational::zero(); dh];
        let mut om = vec![Rational::zero(); dm];
        for i in 0..dm {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..dm {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let s = &x[i] * &y[j];
                for (o, c) in oh.iter_mut().zip(&self.mm_h[i][j]) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
                for (o, c) in om.iter_mut().zip(&self.mm_m[i][j]) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        (oh, om)
    }

    /// Whether `[m, m] ⊆ h`.
    pub fn is_symmetric(&self) -> bool {
        self.mm_m.iter().flatten().flatten().all(Zero::is_zero)
    }
}

/// Isotropy representation of `h` on `m`, in `m` coordinates.
#[derive(Clone, Debug)]
pub struct IsotropyRep {
    pub generators: Vec<RationalMatrix>,
}

impl IsotropyRep {
    /// Matrix of `ad(x)|_m` for `x` given in `h` coordinates.
    pub fn of(&self, coords: &[Rational]) -> RationalMatrix {
        let n = self.generators.first().map_or(0, RationalMatrix::rows);
        let mut out = RationalMatrix::zeros(n, n);
        for (c, g) in coords.iter().zip(&self.generators) {
            if !c.is_zero() {
                out = &out + &g.scale(c);
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, RationalMatrix::rows)
    }
}

/// `proj_m ∘ ad(h_i)|_m` for each `h` basis element; the homomorphism
/// property is checked on all pairs.
pub fn isotropy_rep(s: &ReductiveSplit) -> Result<IsotropyRep> {
    let dm = s.dim_m();
    let g = s.parent();
    let generators: Vec<RationalMatrix> = s
        .h()
        .basis()
        .iter()
        .map(|hv| {
            let cols: Vec<Vec<Rational>> = s
                .m()
                .basis()
                .iter()
                .map(|mv| s.split_coords(&g.bracket(hv, mv)).1)
                .collect();
            if cols.is_empty() {
                RationalMatrix::zeros(0, 0)
            } else {
                RationalMatrix::from_columns(&cols)
            }
        })
        .collect();
    let rep = IsotropyRep { generators };
    let hb = s.h().basis();
    for i in 0..hb.len() {
        for j in i + 1..hb.len() {
            let (ch, _) = s.split_coords(&g.bracket(&hb[i], &hb[j]));
            let lhs = rep.of(&ch);
            let rhs = rep.generators[i].commutator(&rep.generators[j]);
            if lhs != rhs {
                return Err(Error::Construction(format!(
                    "isotropy action fails the homomorphism property at ({i}, {j})"
                )));
            }
        }
    }
    debug_assert!(rep.generators.iter().all(|m| m.rows() == dm));
    Ok(rep)
}

pub fn is_symmetric_pair(s: &ReductiveSplit) -> bool {
    s.is_symmetric()
}

/// Killing-orthogonal complement of `h`; requires `B|_h` nondegenerate.
pub fn killing_complement(g: &LieAlgebra, h: &Subspace) -> Result<Subspace> {
    let b = g.killing();
    let hb = h.basis();
    let restricted = RationalMatrix::from_fn(hb.len(), hb.len(), |i, j| b.bilinear(&hb[i], &hb[j]));
    let r = restricted.rank();
    if r < hb.len() {
        return Err(Error::DegenerateRestriction { rank: r, dim: hb.len() });
    }
    let rows: Vec<Vec<Rational>> = hb.iter().map(|v| b.apply(v)).collect();
    let m = if rows.is_empty() {
        return Ok(Subspace::whole(g.dim()));
    } else {
        RationalMatrix::from_rows(rows)
    };
    Subspace::new(g.dim(), kernel_basis(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_e, build_so, build_su};

    #[test]
    fn equal_parts_are_not_complementary() {
        let g = build_so(3, 0).unwrap();
        let h = Subspace::coordinate(3, &[0]);
        let hh = Subspace::new(3, vec![h.basis()[0].clone(), crate::exactnum::unit_vec(3, 1)]).unwrap();
        let err = make_split(&g.algebra, &hh, &hh).unwrap_err();
        assert!(matches!(err, Error::NotComplement(_)));
    }

    #[test]
    fn sphere_split_is_symmetric() {
        let g = build_so(5, 0).unwrap();
        let s = split_from_labels(&g, "h+", "m+").unwrap();
        assert!(is_symmetric_pair(&s));
        let rep = isotropy_rep(&s).unwrap();
        assert_eq!(rep.generators.len(), 4);
    }

    #[test]
    fn projections_are_complementary() {
        let g = build_su(3, 0).unwrap();
        let s = split_from_labels(&g, "h", "l").unwrap();
        let id = &s.proj_h + &s.proj_m;
        assert_eq!(id, RationalMatrix::identity(8));
        assert!((&s.proj_h * &s.proj_m).is_zero());
        assert!(!is_symmetric_pair(&s));
    }

    #[test]
    fn killing_complement_of_su3_isotropy_matches_labels() {
        let g = build_su(3, 0).unwrap();
        let m = killing_complement(&g.algebra, g.subspace("h").unwrap()).unwrap();
        let l = g.subspace("l").unwrap();
        assert!(l.contains_subspace(&m) && m.contains_subspace(l));
    }

    #[test]
    fn killing_complement_degenerate_for_euclidean_motions() {
        let g = build_e(3, 0).unwrap();
        let err = killing_complement(&g.algebra, g.subspace("h").unwrap()).unwrap_err();
        assert!(matches!(err, Error::DegenerateRestriction { .. }));
    }

    #[test]
    fn affine_split_is_symmetric() {
        let g = build_e(3, 0).unwrap();
        let s = split_from_labels(&g, "h", "m").unwrap();
        assert!(is_symmetric_pair(&s));
    }
}
