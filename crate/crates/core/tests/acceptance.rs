//! Acceptance suite: one test per criterion, each printing a single
//! `PASS`/`FAIL` line followed by its individual checks.
//!
//! Exact criteria use zero tolerance (rational arithmetic throughout); the
//! only floating tolerance is the flow checker's, pinned below.

use std::time::{Duration, Instant};

use geostruct_core::catalog::f4::f4_data;
use geostruct_core::catalog::golden::golden_identities;
use geostruct_core::catalog::{e::build_e, f4::build_f4, so::build_so, sp::build_sp, su::build_su, LabeledAlgebra};
use geostruct_core::exactnum::{int, RationalMatrix};
use geostruct_core::flowcheck::{contact_residuals, geodesic_residuals, Causal, GeodesicSample, MetricChart};
use geostruct_core::homogeneous::{isotropy_rep, make_split, ReductiveSplit};
use geostruct_core::invariants::{
    center_of_h, closed_subspace, commutant, evaluate_integrability, form_from_central, invariant_tensors, is_closed,
    is_invariant, square_roots, tensor_decomposition_check, TensorKind,
};
use geostruct_core::liealg::Subspace;
use geostruct_core::spaces::{build_space, classify, ClassificationReport, GeodesicSpaceId, RootStatus, Verdict};
use GeodesicSpaceId::*;

/// Residual bound for every flow-check quantity.
const FLOW_TOL: f64 = 1e-6;
/// Sample count for the contact-form check.
const FLOW_SAMPLES: usize = 100;
const BUDGET_ALGEBRAS: Duration = Duration::from_secs(60);
const BUDGET_CP: Duration = Duration::from_secs(30);
const BUDGET_OP2: Duration = Duration::from_secs(600);
const BUDGET_FLOW: Duration = Duration::from_secs(5);

struct Criterion {
    number: u8,
    title: &'static str,
    checks: Vec<(String, bool)>,
}

impl Criterion {
    fn new(number: u8, title: &'static str) -> Self {
        Self {
            number,
            title,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, what: impl Into<String>, ok: bool) {
        self.checks.push((what.into(), ok));
    }

    fn finish(self) {
        let pass = self.checks.iter().all(|(_, ok)| *ok);
        println!(
            "{} criterion {}: {}",
            if pass { "PASS" } else { "FAIL" },
            self.number,
            self.title
        );
        for (what, ok) in &self.checks {
            println!("    [{}] {}", if *ok { "ok" } else { "FAILED" }, what);
        }
        let failed: Vec<&str> = self.checks.iter().filter(|(_, ok)| !ok).map(|(w, _)| w.as_str()).collect();
        assert!(failed.is_empty(), "criterion {} failed: {:?}", self.number, failed);
    }
}

fn run(id: GeodesicSpaceId) -> (ClassificationReport, Duration) {
    let start = Instant::now();
    let r = classify(id).unwrap_or_else(|e| panic!("{id}: {e}"));
    (r, start.elapsed())
}

fn has_pair(r: &ClassificationReport, eps: i8, sig: (usize, usize)) -> bool {
    // a compatible metric is fixed only up to scale, so either sign will do
    r.pairs_for(eps).any(|p| {
        let s = (p.signature.pos, p.signature.neg);
        p.signature.null == 0 && (s == sig || s == (sig.1, sig.0))
    })
}

#[test]
fn criterion_01_algebra_validity() {
    let mut c = Criterion::new(1, "catalog algebras satisfy antisymmetry and Jacobi");
    type Builder = fn() -> geostruct_core::Result<LabeledAlgebra>;
    let builders: Vec<(String, Builder)> = vec![
        ("so(3,0)".into(), || build_so(3, 0)),
        ("so(4,0)".into(), || build_so(4, 0)),
        ("so(2,2)".into(), || build_so(2, 2)),
        ("so(5,0)".into(), || build_so(5, 0)),
        ("so(4,1)".into(), || build_so(4, 1)),
        ("so(3,2)".into(), || build_so(3, 2)),
        ("so(6,0)".into(), || build_so(6, 0)),
        ("so(7,0)".into(), || build_so(7, 0)),
        ("e(3,0)".into(), || build_e(3, 0)),
        ("e(2,1)".into(), || build_e(2, 1)),
        ("e(4,0)".into(), || build_e(4, 0)),
        ("e(5,0)".into(), || build_e(5, 0)),
        ("su(3,0)".into(), || build_su(3, 0)),
        ("su(1,2)".into(), || build_su(1, 2)),
        ("su(4,0)".into(), || build_su(4, 0)),
        ("su(1,3)".into(), || build_su(1, 3)),
        ("su(2,2)".into(), || build_su(2, 2)),
        ("su(5,0)".into(), || build_su(5, 0)),
        ("sp(3,0)".into(), || build_sp(3, 0)),
        ("sp(1,2)".into(), || build_sp(1, 2)),
        ("f4".into(), build_f4),
    ];
    let start = Instant::now();
    for (name, build) in builders {
        let ok = match build() {
            Ok(g) => g.algebra.validate().is_ok(),
            Err(_) => false,
        };
        c.check(name, ok);
    }
    let elapsed = start.elapsed();
    c.check(format!("total {:.1?} < {:?}", elapsed, BUDGET_ALGEBRAS), elapsed < BUDGET_ALGEBRAS);
    c.finish();
}

#[test]
fn criterion_02_golden_commutators() {
    let mut c = Criterion::new(2, "bracket and isotropy identities hold exactly");
    let ids = golden_identities().expect("golden table evaluates");
    c.check(format!("{} identities (at least 20)", ids.len()), ids.len() >= 20);
    for g in &ids {
        if !g.holds {
            c.check(format!("{}: {}", g.algebra, g.identity), false);
        }
    }
    c.check("every identity holds", ids.iter().all(|g| g.holds));
    c.finish();
}

#[test]
fn criterion_03_sphere_rows() {
    let mut c = Criterion::new(3, "pseudo-sphere rows of the generic battery");
    for (id, plus) in [
        (LplusS(4, 0), true),
        (LplusS(3, 1), true),
        (LplusS(2, 2), true),
        (LminusS(2, 2), false),
        (LminusS(1, 3), false),
    ] {
        let (r, _) = run(id);
        c.check(format!("{id}: closed 2-forms = 1 (got {})", r.closed_two_forms), r.closed_two_forms == 1);
        let (want, other) = if plus { (&r.complex, &r.para) } else { (&r.para, &r.complex) };
        let kind = if plus { "complex" } else { "para" };
        c.check(
            format!(
                "{id}: exactly one {kind} candidate, integrable (got {} / {} integrable)",
                want.candidates.len(),
                want.integrable
            ),
            want.candidates.len() == 1 && want.integrable == 1,
        );
        c.check(format!("{id}: no candidate of the other kind"), other.candidates.is_empty());
        let (p, q) = match id {
            LplusS(p, q) | LminusS(p, q) => (p, q),
            _ => unreachable!(),
        };
        let (eps, sig) = if plus { (-1, (2 * (p - 1), 2 * q)) } else { (1, (p + q - 1, p + q - 1)) };
        c.check(format!("{id}: compatible pair of signature {sig:?}"), has_pair(&r, eps, sig));
        c.check(
            format!("{id}: verdict MATCH (got {:?})", r.comparison.verdict),
            r.comparison.verdict == Verdict::Match,
        );
    }
    c.finish();
}

#[test]
fn criterion_04_complex_projective() {
    let mut c = Criterion::new(4, "L(CP^n) for n = 2, 3");
    for id in [LCP(2), LCP(3)] {
        let (r, elapsed) = run(id);
        c.check(format!("{id}: closed 2-forms = 2 (got {})", r.closed_two_forms), r.closed_two_forms == 2);
        c.check(
            format!("{id}: 4 complex candidates (got {})", r.complex.candidates.len()),
            r.complex.candidates.len() == 4,
        );
        c.check(
            format!("{id}: exactly 2 integrable (got {})", r.complex.integrable),
            r.complex.integrable == 2,
        );
        c.check(
            format!("{id}: 0 para candidates (got {})", r.para.candidates.len()),
            r.para.candidates.is_empty(),
        );
        let paired = (0..r.complex.candidates.len()).all(|k| r.pairs_for(-1).any(|p| p.structure == k));
        c.check(format!("{id}: every candidate has a Kähler record"), paired);
        c.check(format!("{id}: {:.1?} < {:?}", elapsed, BUDGET_CP), elapsed < BUDGET_CP);
    }
    c.finish();
}

#[test]
fn criterion_05_complex_hyperbolic() {
    let mut c = Criterion::new(5, "L(CH^2)");
    let (r, _) = run(LCH(2));
    c.check(
        format!("0 complex candidates (got {})", r.complex.candidates.len()),
        r.complex.candidates.is_empty(),
    );
    c.check(
        format!(
            "2 para candidates, exactly 1 integrable (got {} / {})",
            r.para.candidates.len(),
            r.para.integrable
        ),
        r.para.candidates.len() == 2 && r.para.integrable == 1,
    );
    c.check(format!("closed 2-forms = 2 (got {})", r.closed_two_forms), r.closed_two_forms == 2);
    c.check("para-Kähler pairs exist", r.pairs_for(1).next().is_some());
    c.finish();
}

#[test]
fn criterion_06_quaternionic() {
    let mut c = Criterion::new(6, "L(HP^2) and L(HH^2)");
    let (r, _) = run(LHP(2));
    c.check(format!("LHP(2): closed 2-forms = 1 (got {})", r.closed_two_forms), r.closed_two_forms == 1);
    c.check(
        format!(
            "LHP(2): 2 complex, exactly 1 integrable (got {} / {})",
            r.complex.candidates.len(),
            r.complex.integrable
        ),
        r.complex.candidates.len() == 2 && r.complex.integrable == 1,
    );
    c.check("LHP(2): Kähler pair exists", r.pairs_for(-1).next().is_some());
    let (r, _) = run(LHH(2));
    c.check(
        format!("LHH(2): 0 complex (got {})", r.complex.candidates.len()),
        r.complex.candidates.is_empty(),
    );
    c.check(
        format!(
            "LHH(2): 2 para, exactly 1 integrable (got {} / {})",
            r.para.candidates.len(),
            r.para.integrable
        ),
        r.para.candidates.len() == 2 && r.para.integrable == 1,
    );
    c.finish();
}

/// `dim ker(a + λ·Id)`.
fn nullity(a: &RationalMatrix, shift: &geostruct_core::exactnum::Rational) -> usize {
    let n = a.rows();
    (a + &RationalMatrix::identity(n).scale(shift)).kernel().len()
}

#[test]
fn criterion_07_octonionic() {
    let mut c = Criterion::new(7, "L(OP^2)");
    let start = Instant::now();
    let data = f4_data().expect("f4 builds");
    let h1 = data.algebra.element("h1").expect("h1 labelled");
    let ad = data.algebra.algebra.adjoint(&h1).unwrap();
    let sq = &ad * &ad;
    let t2 = &data.tau_squared;
    let mult = (nullity(&sq, &int(0)), nullity(&sq, t2), nullity(&sq, &(t2 * int(4))));
    c.check(
        format!("(ad h1)² multiplicities 0:22, -τ²:16, -4τ²:14 (got {mult:?})"),
        mult == (22, 16, 14),
    );
    let (r, _) = run(LOP2);
    let dims = (r.dims.g, r.dims.h, r.dims.m);
    c.check(format!("dims (52, 22, 30) (got {dims:?})"), dims == (52, 22, 30));
    c.check(format!("closed 2-forms = 1 (got {})", r.closed_two_forms), r.closed_two_forms == 1);
    c.check(
        format!("exactly 1 complex candidate (got {})", r.complex.candidates.len()),
        r.complex.candidates.len() == 1,
    );
    c.check(
        format!("the complex candidate is integrable (integrable count {})", r.complex.integrable),
        r.complex.integrable == 1,
    );
    c.check(
        format!("0 para (got {})", r.para.candidates.len()),
        r.para.candidates.is_empty(),
    );
    c.check("Kähler pair exists", r.pairs_for(-1).next().is_some());
    let elapsed = start.elapsed();
    c.check(format!("{:.1?} < {:?}", elapsed, BUDGET_OP2), elapsed < BUDGET_OP2);
    c.finish();
}

#[test]
fn criterion_08_flat_cases() {
    let mut c = Criterion::new(8, "flat spaces L-(E^{p,q})");
    for id in [LminusE(3, 0), LminusE(2, 1)] {
        let built = build_space(id).unwrap();
        let s = &built.split;
        c.check(format!("{id}: symmetric pair"), s.is_symmetric());
        let alt = invariant_tensors(s, TensorKind::Alt2).unwrap();
        c.check(
            format!("{id}: all {} invariant 2-forms closed", alt.dim()),
            alt.elements.iter().all(|w| is_closed(s, w)),
        );
        let dim_w = s.dim_m() / 2;
        c.check(
            format!("{id}: m = W ⊗ R² with dim W = {dim_w}"),
            tensor_decomposition_check(s, dim_w, 2).unwrap(),
        );
        let (r, _) = run(id);
        c.check(format!("{id}: neutral (2,2) Kähler pair"), has_pair(&r, -1, (2, 2)));
    }
    let (r, _) = run(LminusE(4, 0));
    let isolated = r.complex.status == RootStatus::Isolated && !r.complex.candidates.is_empty();
    c.check(
        format!("LminusE(4,0): no isolated complex candidate (status {:?})", r.complex.status),
        !isolated,
    );
    c.finish();
}

#[test]
fn criterion_09_three_dimensional_spheres() {
    let mut c = Criterion::new(9, "pseudo-sphere rows with p + q = 3");
    for id in [LplusS(3, 0), LplusS(2, 1), LplusS(1, 2), LminusS(2, 1), LminusS(1, 2), LminusS(0, 3)] {
        let (r, _) = run(id);
        c.check(
            format!("{id}: invariant 2-forms = 2 (got {})", r.invariant_two_forms),
            r.invariant_two_forms == 2,
        );
        c.check(format!("{id}: commutant dim 4 (got {})", r.commutant_dim), r.commutant_dim == 4);
        c.check(
            format!(
                "{id}: raw counts reported ({} complex, {} para)",
                r.complex.candidates.len(),
                r.para.candidates.len()
            ),
            r.complex.status != RootStatus::Family && r.para.status != RootStatus::Family,
        );
        let v = r.comparison.verdict;
        if r.comparison.convention_flag {
            c.check(format!("{id}: flagged row, verdict {v:?}"), v == Verdict::MatchUpToConvention);
        }
        c.check(format!("{id}: not a mismatch"), v != Verdict::Mismatch);
    }
    c.finish();
}

/// `dω = 0` on basis triples, for invariant `ω`, by the Chevalley formula.
fn chevalley_closed(s: &ReductiveSplit, w: &RationalMatrix) -> bool {
    let n = s.dim_m();
    let unit = |i: usize| {
        let mut v = vec![int(0); n];
        v[i] = int(1);
        v
    };
    let br = |i: usize, j: usize| s.bracket_m(&unit(i), &unit(j));
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            (j + 1..n).all(|k| {
                -w.bilinear(&br(i, j), &unit(k)) + w.bilinear(&br(i, k), &unit(j)) - w.bilinear(&br(j, k), &unit(i))
                    == int(0)
            })
        })
    })
}

fn integrable_counts(s: &ReductiveSplit) -> Vec<Option<(usize, usize)>> {
    let c = commutant(s).unwrap();
    [-1i8, 1]
        .iter()
        .map(|&eps| {
            square_roots(&c, eps).ok().map(|mut roots| {
                evaluate_integrability(s, &mut roots);
                let all = roots.candidates();
                (all.len(), all.iter().filter(|x| x.integrable == Some(true)).count())
            })
        })
        .collect()
}

fn rebased(s: &ReductiveSplit, seed: i64) -> ReductiveSplit {
    let n = s.dim_m();
    // unit lower triangular: invertible for every seed
    let t = RationalMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Greater => int((seed * (i as i64 + 2) + j as i64) % 5 - 2),
        std::cmp::Ordering::Less => int(0),
    });
    let old = s.m().basis();
    let d = old[0].len();
    let basis = (0..n)
        .map(|j| {
            let mut v = vec![int(0); d];
            for (i, b) in old.iter().enumerate() {
                for (a, x) in v.iter_mut().zip(b) {
                    *a += x * &t.row(i)[j];
                }
            }
            v
        })
        .collect();
    make_split(s.parent(), s.h(), &Subspace::new(d, basis).unwrap()).unwrap()
}

#[test]
fn criterion_10_property_sweeps() {
    let mut c = Criterion::new(10, "property sweeps");
    let spaces = [LplusS(3, 0), LminusS(2, 1), LminusE(3, 0), LplusS(4, 0), LCP(2), LCH(2), LHP(2), LHH(2)];
    for id in spaces {
        let built = build_space(id).unwrap();
        let s = &built.split;
        let rep = isotropy_rep(s).unwrap();
        // (a)
        let mut invariant = true;
        for kind in [TensorKind::Sym2, TensorKind::Alt2, TensorKind::Endo] {
            let basis = invariant_tensors(s, kind).unwrap();
            invariant &= basis.elements.iter().all(|t| is_invariant(&rep, t, kind));
        }
        c.check(format!("(a) {id}: every returned tensor is invariant"), invariant);
        // (b)
        let alt = invariant_tensors(s, TensorKind::Alt2).unwrap();
        let agree = alt.elements.iter().all(|w| is_closed(s, w) == chevalley_closed(s, w));
        c.check(format!("(b) {id}: closedness agrees with the Chevalley residual"), agree);
        if s.is_symmetric() {
            c.check(
                format!("(b) {id}: symmetric, all invariant 2-forms closed"),
                alt.elements.iter().all(|w| chevalley_closed(s, w)),
            );
        }
        // (c)
        let base = integrable_counts(s);
        let stable = (1..=3).all(|seed| integrable_counts(&rebased(s, seed)) == base);
        c.check(format!("(c) {id}: integrable counts stable under change of m basis"), stable);
        // (d)
        if matches!(id, LCP(2) | LCH(2) | LHP(2) | LHH(2)) {
            let closed = closed_subspace(s, &alt.elements);
            let central: Vec<RationalMatrix> =
                center_of_h(s).iter().map(|z| form_from_central(s, z).unwrap()).collect();
            let equal =
                central.iter().all(|w| w.in_span(&closed)) && closed.iter().all(|w| w.in_span(&central));
            c.check(format!("(d) {id}: central forms span the closed invariant forms"), equal);
        }
    }
    // (e)
    for chart in [MetricChart::round_sphere(), MetricChart::hyperbolic_plane()] {
        for seed in [0u64, 1, 2] {
            let start = Instant::now();
            let stats = contact_residuals(&chart, FLOW_SAMPLES, FLOW_TOL, seed).unwrap();
            let elapsed = start.elapsed();
            c.check(
                format!(
                    "(e) {} seed {seed}: max dθ {:.1e}, θ defect {:.1e} < {FLOW_TOL:e} in {:.1?}",
                    stats.chart, stats.max_dtheta, stats.max_theta_defect, elapsed
                ),
                stats.pass
                    && stats.max_dtheta < FLOW_TOL
                    && stats.max_theta_defect < FLOW_TOL
                    && elapsed < BUDGET_FLOW,
            );
        }
    }
    let grid = GeodesicSample::uniform_grid(FLOW_SAMPLES, 2.0);
    for (p, q, causal) in [(2, 1, Causal::Spacelike), (2, 1, Causal::Timelike), (3, 0, Causal::Spacelike)] {
        let g = geodesic_residuals(&GeodesicSample::random(p, q, causal, grid.clone(), 7).unwrap());
        c.check(
            format!("(e) S^({p},{q}) {causal:?} geodesic residual {:.1e}", g.max_equation),
            g.max_equation < FLOW_TOL && g.max_constraint < FLOW_TOL && g.max_speed_defect < FLOW_TOL,
        );
    }
    c.finish();
}
