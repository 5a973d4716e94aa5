//! Property suites over the classification pipeline and the flow checker.
//!
//! Each check recomputes its claim by a route independent of the library
//! path it tests: invariance straight from the isotropy generators,
//! closedness from the Chevalley formula on `m`, integrability after an
//! arbitrary change of `m` basis.

use std::collections::HashMap;
use std::sync::OnceLock;
use std::time::Instant;

use geostruct_core::exactnum::{int, RationalMatrix};
use geostruct_core::flowcheck::{contact_residuals, geodesic_residuals, Causal, GeodesicSample, MetricChart};
use geostruct_core::homogeneous::{isotropy_rep, make_split, IsotropyRep, ReductiveSplit};
use geostruct_core::invariants::{
    center_of_h, closed_subspace, closedness_residual, commutant, evaluate_integrability, form_from_central,
    invariant_tensors, is_closed, square_roots, InvariantTensorBasis, TensorKind,
};
use geostruct_core::liealg::Subspace;
use geostruct_core::spaces::{build_space, GeodesicSpaceId};
use proptest::prelude::*;
use GeodesicSpaceId::*;

/// Spaces small enough to run many proptest cases against.
const SMALL: [GeodesicSpaceId; 7] = [
    LplusS(3, 0),
    LplusS(2, 1),
    LminusS(2, 1),
    LminusE(3, 0),
    LCP(2),
    LCH(2),
    LHP(2),
];

struct Prepared {
    split: ReductiveSplit,
    rep: IsotropyRep,
    tensors: Vec<InvariantTensorBasis>,
}

fn prepared(id: GeodesicSpaceId) -> &'static Prepared {
    static CACHE: OnceLock<HashMap<String, &'static Prepared>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        SMALL
            .iter()
            .map(|&id| {
                let built = build_space(id).expect("space builds");
                let rep = isotropy_rep(&built.split).expect("isotropy");
                let tensors = [TensorKind::Sym2, TensorKind::Alt2, TensorKind::Endo]
                    .iter()
                    .map(|&k| invariant_tensors(&built.split, k).expect("tensors"))
                    .collect();
                let p: &'static Prepared = Box::leak(Box::new(Prepared {
                    split: built.split,
                    rep,
                    tensors,
                }));
                (id.to_string(), p)
            })
            .collect()
    });
    cache[&id.to_string()]
}

fn combination(elements: &[RationalMatrix], coeffs: &[i64]) -> RationalMatrix {
    let n = elements[0].rows();
    elements
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(RationalMatrix::zeros(n, n), |acc, (e, &c)| &acc + &e.scale(&int(c)))
}

/// `t` is killed by every isotropy generator, computed without the library check.
fn annihilated(rep: &IsotropyRep, t: &RationalMatrix, kind: TensorKind) -> bool {
    rep.generators.iter().all(|a| {
        let r = match kind {
            TensorKind::Endo => &(a * t) - &(t * a),
            _ => &(&a.transpose() * t) + &(t * a),
        };
        r.is_zero()
    })
}

/// `dω(e_i, e_j, e_k)` for an invariant 2-form on `m`; the `h` parts of the
/// brackets drop out by invariance.
fn chevalley_zero(s: &ReductiveSplit, w: &RationalMatrix) -> bool {
    let n = s.dim_m();
    let unit = |i: usize| {
        let mut v = vec![int(0); n];
        v[i] = int(1);
        v
    };
    let br: Vec<Vec<Vec<_>>> = (0..n).map(|i| (0..n).map(|j| s.bracket_m(&unit(i), &unit(j))).collect()).collect();
    let wv = |x: &[_], k: usize| w.bilinear(x, &unit(k));
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let d = -wv(&br[i][j], k) + wv(&br[i][k], j) - wv(&br[j][k], i);
                if d != int(0) {
                    return false;
                }
            }
        }
    }
    true
}

fn space_strategy() -> impl Strategy<Value = GeodesicSpaceId> {
    prop::sample::select(SMALL.to_vec())
}

fn kinds() -> impl Strategy<Value = usize> {
    0usize..3
}

const KINDS: [TensorKind; 3] = [TensorKind::Sym2, TensorKind::Alt2, TensorKind::Endo];

#[test]
fn every_returned_tensor_is_invariant() {
    for id in SMALL {
        let p = prepared(id);
        for (basis, kind) in p.tensors.iter().zip(KINDS) {
            for t in &basis.elements {
                assert!(annihilated(&p.rep, t, kind), "{id} {kind:?}");
                match kind {
                    TensorKind::Sym2 => assert!(t.is_symmetric()),
                    TensorKind::Alt2 => assert!(t.is_antisymmetric()),
                    TensorKind::Endo => {}
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn combinations_of_invariants_stay_invariant(
        id in space_strategy(),
        k in kinds(),
        coeffs in prop::collection::vec(-5i64..=5, 1..8),
    ) {
        let p = prepared(id);
        let basis = &p.tensors[k];
        prop_assume!(basis.dim() > 0);
        let t = combination(&basis.elements, &coeffs);
        prop_assert!(annihilated(&p.rep, &t, KINDS[k]));
    }

    #[test]
    fn structure_candidates_are_invariant_roots(id in space_strategy(), para in any::<bool>()) {
        let p = prepared(id);
        let eps: i8 = if para { 1 } else { -1 };
        let c = commutant(&p.split).unwrap();
        if let Ok(roots) = square_roots(&c, eps) {
            let n = p.split.dim_m();
            let target = RationalMatrix::identity(n).scale(&int(eps as i64));
            for cand in roots.candidates() {
                prop_assert!(annihilated(&p.rep, &cand.endo, TensorKind::Endo));
                prop_assert_eq!(&(&cand.endo * &cand.endo), &target);
            }
        }
    }

    #[test]
    fn closedness_agrees_with_chevalley(
        id in space_strategy(),
        coeffs in prop::collection::vec(-4i64..=4, 1..6),
    ) {
        let p = prepared(id);
        let alt = &p.tensors[1];
        prop_assume!(alt.dim() > 0);
        let w = combination(&alt.elements, &coeffs);
        let oracle = chevalley_zero(&p.split, &w);
        prop_assert_eq!(is_closed(&p.split, &w), oracle);
        prop_assert_eq!(closedness_residual(&p.split, &w).is_empty(), oracle);
        if p.split.is_symmetric() {
            prop_assert!(oracle, "{} is symmetric, every invariant form must be closed", id);
        }
    }

    #[test]
    fn central_forms_span_the_closed_forms(
        id in prop::sample::select(vec![LCP(2), LCH(2), LHP(2)]),
        coeffs in prop::collection::vec(-3i64..=3, 1..4),
    ) {
        let p = prepared(id);
        let centre = center_of_h(&p.split);
        prop_assume!(!centre.is_empty());
        let z = centre.iter().zip(coeffs.iter().cycle()).fold(vec![int(0); centre[0].len()], |mut acc, (v, &c)| {
            for (a, x) in acc.iter_mut().zip(v) {
                *a += x * int(c);
            }
            acc
        });
        prop_assume!(z.iter().any(|x| *x != int(0)));
        let w = form_from_central(&p.split, &z).unwrap();
        let closed = closed_subspace(&p.split, &p.tensors[1].elements);
        prop_assert!(w.in_span(&closed));
        prop_assert!(chevalley_zero(&p.split, &w));
    }
}

#[test]
fn central_forms_equal_the_closed_forms() {
    for id in [LCP(2), LCP(3), LCH(2), LHP(2), LHH(2)] {
        let built = build_space(id).unwrap();
        let s = &built.split;
        let alt = invariant_tensors(s, TensorKind::Alt2).unwrap();
        let closed = closed_subspace(s, &alt.elements);
        let central: Vec<RationalMatrix> =
            center_of_h(s).iter().map(|z| form_from_central(s, z).unwrap()).collect();
        assert!(central.iter().all(|w| w.in_span(&closed)), "{id}");
        assert!(closed.iter().all(|w| w.in_span(&central)), "{id}");
    }
}

/// Unit lower times unit upper triangular, hence invertible over ℚ.
fn invertible(n: usize, entries: &[i64]) -> RationalMatrix {
    let mut it = entries.iter().cycle();
    let l = RationalMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Greater => int(*it.next().unwrap()),
        std::cmp::Ordering::Less => int(0),
    });
    let u = RationalMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Less => int(*it.next().unwrap()),
        std::cmp::Ordering::Greater => int(0),
    });
    &l * &u
}

/// `(candidates, integrable)` per sign, or `None` where no root exists.
fn integrable_counts(s: &ReductiveSplit) -> [Option<(usize, usize)>; 2] {
    let c = commutant(s).unwrap();
    [-1i8, 1].map(|eps| {
        square_roots(&c, eps).ok().map(|mut roots| {
            evaluate_integrability(s, &mut roots);
            let all = roots.candidates();
            (all.len(), all.iter().filter(|x| x.integrable == Some(true)).count())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn integrability_survives_change_of_m_basis(
        id in prop::sample::select(vec![LplusS(3, 0), LminusS(2, 1), LCP(2), LCH(2), LHP(2)]),
        entries in prop::collection::vec(-2i64..=2, 1..12),
    ) {
        let p = prepared(id);
        let s = &p.split;
        let n = s.dim_m();
        let t = invertible(n, &entries);
        let old = s.m().basis();
        let new_basis: Vec<Vec<_>> = (0..n)
            .map(|j| {
                let mut v = vec![int(0); old[0].len()];
                for (i, b) in old.iter().enumerate() {
                    let c = &t.row(i)[j];
                    for (a, x) in v.iter_mut().zip(b) {
                        *a += x * c;
                    }
                }
                v
            })
            .collect();
        let m = Subspace::new(old[0].len(), new_basis).unwrap();
        let moved = make_split(s.parent(), s.h(), &m).unwrap();
        prop_assert_eq!(integrable_counts(s), integrable_counts(&moved));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn flow_residuals_are_small(seed in any::<u64>(), hyperbolic in any::<bool>()) {
        let chart = if hyperbolic { MetricChart::hyperbolic_plane() } else { MetricChart::round_sphere() };
        let start = Instant::now();
        let stats = contact_residuals(&chart, 100, 1e-6, seed).unwrap();
        prop_assert!(stats.pass);
        prop_assert!(stats.max_dtheta < 1e-6 && stats.max_theta_defect < 1e-6);
        let grid = GeodesicSample::uniform_grid(100, 2.0);
        for (p, q, causal) in [(2, 1, Causal::Spacelike), (2, 1, Causal::Timelike), (3, 0, Causal::Spacelike)] {
            let sample = GeodesicSample::random(p, q, causal, grid.clone(), seed).unwrap();
            let g = geodesic_residuals(&sample);
            prop_assert!(g.max_equation < 1e-6 && g.max_constraint < 1e-6 && g.max_speed_defect < 1e-6);
        }
        prop_assert!(start.elapsed().as_secs_f64() < 5.0);
    }
}
