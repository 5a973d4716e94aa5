//! Floating-point checks of the geodesic-flow contact identities and of the
//! explicit geodesics on pseudo-spheres.
//!
//! This is the only `f64` code in the crate. Nothing here feeds the exact
//! classification pipeline.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Central-difference step for first derivatives.
pub const FD_STEP: f64 = 1e-5;
/// Step of the five-point central stencil for second derivatives. Cancellation
/// error grows like `eps / h^2`, so 1e-5 would swamp the 1e-6 tolerance;
/// at 1e-2 both truncation and cancellation stay below 1e-9.
pub const FD_STEP_SECOND: f64 = 1e-2;
/// Default pass threshold for every residual.
pub const DEFAULT_TOL: f64 = 1e-6;

type MetricFn = Box<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// A coordinate chart carrying a metric `g_ij(x)` (row-major, `n x n`) on a
/// box-shaped sampling domain.
pub struct MetricChart {
    pub name: String,
    pub dimension: usize,
    /// Numbers of positive and negative directions of `g`.
    pub signature: (usize, usize),
    pub domain: Vec<(f64, f64)>,
    metric: MetricFn,
    /// Added to every `Γ^0_ij`; only used to build failing controls.
    christoffel_bias: f64,
}

impl std::fmt::Debug for MetricChart {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MetricChart")
            .field("name", &self.name)
            .field("dimension", &self.dimension)
            .field("signature", &self.signature)
            .field("domain", &self.domain)
            .field("christoffel_bias", &self.christoffel_bias)
            .finish()
    }
}

impl MetricChart {
    pub fn new(
        name: impl Into<String>,
        signature: (usize, usize),
        domain: Vec<(f64, f64)>,
        metric: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        MetricChart {
            name: name.into(),
            dimension: domain.len(),
            signature,
            domain,
            metric: Box::new(metric),
            christoffel_bias: 0.0,
        }
    }

    /// Round unit 2-sphere in polar coordinates `(θ, φ)`, kept away from the poles.
    pub fn round_sphere() -> Self {
        MetricChart::new(
            "sphere",
            (2, 0),
            vec![(0.4, std::f64::consts::PI - 0.4), (-3.0, 3.0)],
            |x| {
                let s = x[0].sin();
                vec![1.0, 0.0, 0.0, s * s]
            },
        )
    }

    /// Hyperbolic plane in the upper half-plane model.
    pub fn hyperbolic_plane() -> Self {
        MetricChart::new("hyperbolic", (2, 0), vec![(-1.0, 1.0), (0.5, 2.0)], |x| {
            let w = 1.0 / (x[1] * x[1]);
            vec![w, 0.0, 0.0, w]
        })
    }

    /// Two-dimensional de Sitter space, `-dt^2 + cosh(t)^2 dφ^2`. Samples use
    /// spacelike unit vectors.
    pub fn de_sitter() -> Self {
        MetricChart::new("de-sitter", (1, 1), vec![(-1.0, 1.0), (-3.0, 3.0)], |x| {
            let c = x[0].cosh();
            vec![-1.0, 0.0, 0.0, c * c]
        })
    }

    /// Metric that degenerates along `x0 = 0`; sampling it must fail.
    pub fn degenerate() -> Self {
        MetricChart::new("degenerate", (2, 0), vec![(0.0, 0.0), (-1.0, 1.0)], |x| {
            vec![x[0] * x[0], 0.0, 0.0, 1.0]
        })
    }

    pub const NAMES: [&'static str; 3] = ["sphere", "hyperbolic", "de-sitter"];

    pub fn by_name(name: &str) -> Option<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "sphere" | "s2" | "round-sphere" => Some(Self::round_sphere()),
            "hyperbolic" | "h2" | "hyperbolic-plane" => Some(Self::hyperbolic_plane()),
            "de-sitter" | "desitter" | "ds2" => Some(Self::de_sitter()),
            _ => None,
        }
    }

    /// Copy of a built-in chart with deliberately wrong connection coefficients.
    pub fn with_christoffel_bias(mut self, bias: f64) -> Self {
        self.christoffel_bias = bias;
        self.name = format!("{}+bias", self.name);
        self
    }

    pub fn metric(&self, x: &[f64]) -> Vec<f64> {
        (self.metric)(x)
    }

    /// `∂_l g_ij` as `d[l][i*n + j]`.
    fn metric_derivatives(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let n = self.dimension;
        (0..n)
            .map(|l| {
                let mut xp = x.to_vec();
                let mut xm = x.to_vec();
                xp[l] += FD_STEP;
                xm[l] -= FD_STEP;
                let gp = self.metric(&xp);
                let gm = self.metric(&xm);
                gp.iter().zip(&gm).map(|(a, b)| (a - b) / (2.0 * FD_STEP)).collect()
            })
            .collect()
    }

    /// `Γ^k_ij` stored at `k*n*n + i*n + j`.
    pub fn christoffel(&self, x: &[f64]) -> Result<Vec<f64>> {
        let n = self.dimension;
        let g = self.metric(x);
        let ginv = invert(&g, n).ok_or_else(|| Error::SingularChart(x.to_vec()))?;
        let dg = self.metric_derivatives(x);
        let mut out = vec![0.0; n * n * n];
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let mut s = 0.0;
                    for l in 0..n {
                        let lower = dg[i][j * n + l] + dg[j][i * n + l] - dg[l][i * n + j];
                        s += 0.5 * ginv[k * n + l] * lower;
                    }
                    if k == 0 {
                        s += self.christoffel_bias;
                    }
                    out[k * n * n + i * n + j] = s;
                }
            }
        }
        Ok(out)
    }

    /// Geodesic spray at `(x, y)` as a vector on the tangent bundle.
    fn spray(&self, x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
        let n = self.dimension;
        let gam = self.christoffel(x)?;
        let mut v = y.to_vec();
        for k in 0..n {
            let mut s = 0.0;
            for i in 0..n {
                for j in 0..n {
                    s += gam[k * n * n + i * n + j] * y[i] * y[j];
                }
            }
            v.push(-s);
        }
        Ok(v)
    }

    /// Components of the Liouville form `g_ij y^i dx^j` at `z = (x, y)`.
    fn liouville(&self, z: &[f64]) -> Vec<f64> {
        let n = self.dimension;
        let g = self.metric(&z[..n]);
        let mut th = vec![0.0; 2 * n];
        for j in 0..n {
            th[j] = (0..n).map(|i| g[i * n + j] * z[n + i]).sum();
        }
        th
    }

    fn norm2(&self, x: &[f64], y: &[f64]) -> f64 {
        let n = self.dimension;
        let g = self.metric(x);
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                s += g[i * n + j] * y[i] * y[j];
            }
        }
        s
    }

    /// Random point of the unit (spacelike) sphere bundle.
    fn sample_bundle(&self, rng: &mut ChaCha8Rng) -> Result<(Vec<f64>, Vec<f64>)> {
        let n = self.dimension;
        let x: Vec<f64> = self
            .domain
            .iter()
            .map(|&(a, b)| if a < b { rng.gen_range(a..b) } else { a })
            .collect();
        let g = self.metric(&x);
        if invert(&g, n).is_none() {
            return Err(Error::SingularChart(x));
        }
        for _ in 0..1000 {
            let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let e: f64 = y.iter().map(|t| t * t).sum();
            let q = self.norm2(&x, &y);
            if e > 1e-2 && q > 0.1 * e {
                let s = q.sqrt();
                return Ok((x, y.iter().map(|t| t / s).collect()));
            }
        }
        Err(Error::SingularChart(x))
    }
}

/// Gauss-Jordan inverse with partial pivoting; `None` when numerically singular.
fn invert(a: &[f64], n: usize) -> Option<Vec<f64>> {
    let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return None;
    }
    let mut m = a.to_vec();
    let mut inv = vec![0.0; n * n];
    for i in 0..n {
        inv[i * n + i] = 1.0;
    }
    for c in 0..n {
        let p = (c..n).max_by(|&r, &s| m[r * n + c].abs().total_cmp(&m[s * n + c].abs()))?;
        if m[p * n + c].abs() < 1e-12 * scale {
            return None;
        }
        for k in 0..n {
            m.swap(c * n + k, p * n + k);
            inv.swap(c * n + k, p * n + k);
        }
        let d = m[c * n + c];
        for k in 0..n {
            m[c * n + k] /= d;
            inv[c * n + k] /= d;
        }
        for r in 0..n {
            if r != c {
                let f = m[r * n + c];
                if f != 0.0 {
                    for k in 0..n {
                        m[r * n + k] -= f * m[c * n + k];
                        inv[r * n + k] -= f * inv[c * n + k];
                    }
                }
            }
        }
    }
    Some(inv)
}

/// Residual statistics of the contact identities over random bundle samples.
#[derive(Debug, Clone, Serialize)]
pub struct ContactStats {
    pub chart: String,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// `|θ(Γ) - 1|`.
    pub max_theta_defect: f64,
    pub mean_theta_defect: f64,
    /// `max |dθ(Γ, V)|` over a spanning set of unit-bundle tangent vectors `V`.
    pub max_dtheta: f64,
    pub mean_dtheta: f64,
    pub max_metric_asymmetry: f64,
    pub max_christoffel_asymmetry: f64,
    pub pass: bool,
}

/// Evaluates `θ(Γ) - 1` and `dθ(Γ, ·)` on the unit sphere bundle at `samples`
/// random points. Tangent vectors to the bundle are the coordinate vectors
/// projected onto the kernel of `d(g(y,y))`.
pub fn contact_residuals(chart: &MetricChart, samples: usize, tol: f64, seed: u64) -> Result<ContactStats> {
    let n = chart.dimension;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut max_t, mut sum_t, mut max_d, mut sum_d) = (0.0f64, 0.0, 0.0f64, 0.0);
    let (mut asym_g, mut asym_c) = (0.0f64, 0.0f64);
    for _ in 0..samples {
        let (x, y) = chart.sample_bundle(&mut rng)?;
        let g = chart.metric(&x);
        for i in 0..n {
            for j in 0..n {
                asym_g = asym_g.max((g[i * n + j] - g[j * n + i]).abs());
            }
        }
        let gam = chart.christoffel(&x)?;
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let d = gam[k * n * n + i * n + j] - gam[k * n * n + j * n + i];
                    asym_c = asym_c.max(d.abs());
                }
            }
        }
        let spray = chart.spray(&x, &y)?;
        let z: Vec<f64> = x.iter().chain(&y).copied().collect();
        let th = chart.liouville(&z);
        let theta_gamma: f64 = th.iter().zip(&spray).map(|(a, b)| a * b).sum();
        let td = (theta_gamma - 1.0).abs();
        max_t = max_t.max(td);
        sum_t += td;

        // dθ_ab = ∂_a θ_b - ∂_b θ_a in the 2n bundle coordinates.
        let m = 2 * n;
        let mut dth = vec![vec![0.0; m]; m];
        for a in 0..m {
            let mut zp = z.clone();
            let mut zm = z.clone();
            zp[a] += FD_STEP;
            zm[a] -= FD_STEP;
            let tp = chart.liouville(&zp);
            let tm = chart.liouville(&zm);
            for b in 0..m {
                dth[a][b] += (tp[b] - tm[b]) / (2.0 * FD_STEP);
                dth[b][a] -= (tp[b] - tm[b]) / (2.0 * FD_STEP);
            }
        }
        // Differential of the energy g(y,y)/2.
        let dg = chart.metric_derivatives(&x);
        let mut de = vec![0.0; m];
        for l in 0..n {
            let mut s = 0.0;
            for i in 0..n {
                for j in 0..n {
                    s += 0.5 * dg[l][i * n + j] * y[i] * y[j];
                }
            }
            de[l] = s;
            de[n + l] = (0..n).map(|j| g[l * n + j] * y[j]).sum();
        }
        let de2: f64 = de.iter().map(|t| t * t).sum();
        let mut worst = 0.0f64;
        for c in 0..m {
            let mut v = vec![0.0; m];
            v[c] = 1.0;
            let f = de[c] / de2;
            for (vi, di) in v.iter_mut().zip(&de) {
                *vi -= f * di;
            }
            let mut s = 0.0;
            for a in 0..m {
                for b in 0..m {
                    s += dth[a][b] * spray[a] * v[b];
                }
            }
            worst = worst.max(s.abs());
        }
        max_d = max_d.max(worst);
        sum_d += worst;
    }
    let count = samples.max(1) as f64;
    let pass = samples > 0 && max_t < tol && max_d < tol && asym_g < tol && asym_c < tol;
    Ok(ContactStats {
        chart: chart.name.clone(),
        samples,
        seed,
        tol,
        max_theta_defect: max_t,
        mean_theta_defect: sum_t / count,
        max_dtheta: max_d,
        mean_dtheta: sum_d / count,
        max_metric_asymmetry: asym_g,
        max_christoffel_asymmetry: asym_c,
        pass,
    })
}

/// Causal type of a geodesic on a pseudo-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Causal {
    Spacelike,
    Timelike,
}

impl Causal {
    pub fn sign(self) -> f64 {
        match self {
            Causal::Spacelike => 1.0,
            Causal::Timelike => -1.0,
        }
    }
}

/// Unit-speed geodesic data on the pseudo-sphere `S^{p,q}` inside
/// `R^{p+1,q}`, whose form has `p+1` plus signs followed by `q` minus signs.
#[derive(Debug, Clone, Serialize)]
pub struct GeodesicSample {
    pub p: usize,
    pub q: usize,
    pub base: Vec<f64>,
    pub direction: Vec<f64>,
    pub causal: Causal,
    pub grid: Vec<f64>,
}

const SAMPLE_TOL: f64 = 1e-12;

impl GeodesicSample {
    pub fn new(p: usize, q: usize, base: Vec<f64>, direction: Vec<f64>, causal: Causal, grid: Vec<f64>) -> Result<Self> {
        let s = GeodesicSample { p, q, base, direction, causal, grid };
        let n = p + 1 + q;
        if s.base.len() != n || s.direction.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: s.base.len().min(s.direction.len()) });
        }
        let checks = [
            (s.inner(&s.base, &s.base) - 1.0, "<e,e> = 1"),
            (s.inner(&s.base, &s.direction), "<e,e1> = 0"),
            (s.inner(&s.direction, &s.direction) - causal.sign(), "<e1,e1> = ±1"),
        ];
        for (r, what) in checks {
            if r.abs() > SAMPLE_TOL * (1.0 + s.scale()) {
                return Err(Error::Construction(format!("geodesic sample violates {what} (residual {r:e})")));
            }
        }
        Ok(s)
    }

    /// Random sample with components of moderate size. Timelike samples need `q ≥ 1`.
    pub fn random(p: usize, q: usize, causal: Causal, grid: Vec<f64>, seed: u64) -> Result<Self> {
        if causal == Causal::Timelike && q == 0 {
            return Err(Error::UnsupportedParameters {
                space: format!("S^{{{p},{q}}}"),
                reason: "no timelike directions when q = 0".into(),
            });
        }
        let n = p + 1 + q;
        let form = |a: &[f64], b: &[f64]| -> f64 {
            a.iter().zip(b).enumerate().map(|(i, (x, y))| if i <= p { x * y } else { -x * y }).sum()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draw = |rng: &mut ChaCha8Rng| -> Vec<f64> { (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect() };
        let base = loop {
            let v = draw(&mut rng);
            let e: f64 = v.iter().map(|t| t * t).sum();
            let s = form(&v, &v);
            if s > 0.25 * e && e > 1e-2 {
                let r = s.sqrt();
                break v.iter().map(|t| t / r).collect::<Vec<_>>();
            }
        };
        let direction = loop {
            let w = draw(&mut rng);
            let c = form(&w, &base);
            let w: Vec<f64> = w.iter().zip(&base).map(|(a, b)| a - c * b).collect();
            let e: f64 = w.iter().map(|t| t * t).sum();
            let s = form(&w, &w) * causal.sign();
            if s > 0.25 * e && e > 1e-2 {
                let r = s.sqrt();
                let mut d: Vec<f64> = w.iter().map(|t| t / r).collect();
                // one re-orthogonalization pass against rounding
                let c2 = form(&d, &base);
                for (di, bi) in d.iter_mut().zip(&base) {
                    *di -= c2 * bi;
                }
                break d;
            }
        };
        GeodesicSample::new(p, q, base, direction, causal, grid)
    }

    /// Evenly spaced grid of `count` parameters on `[-half, half]`.
    pub fn uniform_grid(count: usize, half: f64) -> Vec<f64> {
        if count < 2 {
            return vec![0.0; count];
        }
        (0..count).map(|i| -half + 2.0 * half * i as f64 / (count - 1) as f64).collect()
    }

    pub fn inner(&self, a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .enumerate()
            .map(|(i, (x, y))| if i <= self.p { x * y } else { -x * y })
            .sum()
    }

    fn scale(&self) -> f64 {
        self.base.iter().chain(&self.direction).fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

/// `cos(s) e + sin(s) e1` for spacelike samples, `cosh(s) e + sinh(s) e1` for timelike ones.
pub fn geodesic_curve(sample: &GeodesicSample, s: f64) -> Vec<f64> {
    let (a, b) = match sample.causal {
        Causal::Spacelike => (s.cos(), s.sin()),
        Causal::Timelike => (s.cosh(), s.sinh()),
    };
    sample.base.iter().zip(&sample.direction).map(|(e, d)| a * e + b * d).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GeodesicStats {
    pub causal: Causal,
    pub grid_points: usize,
    /// `max |<γ,γ> - 1|`.
    pub max_constraint: f64,
    /// `max |γ'' + <γ',γ'> γ|`: the ambient acceleration must be normal to the pseudo-sphere.
    pub max_equation: f64,
    /// `max |<γ',γ'> ∓ 1|`.
    pub max_speed_defect: f64,
}

/// Finite-difference check of the geodesic equation along the sample grid.
pub fn geodesic_residuals(sample: &GeodesicSample) -> GeodesicStats {
    let (mut mc, mut me, mut ms) = (0.0f64, 0.0f64, 0.0f64);
    for &s in &sample.grid {
        let g = geodesic_curve(sample, s);
        mc = mc.max((sample.inner(&g, &g) - 1.0).abs());
        let gp = geodesic_curve(sample, s + FD_STEP);
        let gm = geodesic_curve(sample, s - FD_STEP);
        let vel: Vec<f64> = gp.iter().zip(&gm).map(|(a, b)| (a - b) / (2.0 * FD_STEP)).collect();
        let speed = sample.inner(&vel, &vel);
        ms = ms.max((speed - sample.causal.sign()).abs());
        let h = FD_STEP_SECOND;
        let at = |k: f64| geodesic_curve(sample, s + k * h);
        let (p1, m1, p2, m2) = (at(1.0), at(-1.0), at(2.0), at(-2.0));
        for i in 0..g.len() {
            let acc = (-p2[i] + 16.0 * p1[i] - 30.0 * g[i] + 16.0 * m1[i] - m2[i]) / (12.0 * h * h);
            me = me.max((acc + speed * g[i]).abs());
        }
    }
    GeodesicStats { causal: sample.causal, grid_points: sample.grid.len(), max_constraint: mc, max_equation: me, max_speed_defect: ms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn builtin_charts_pass() {
        for name in MetricChart::NAMES {
            let chart = MetricChart::by_name(name).unwrap();
            let st = contact_residuals(&chart, 100, DEFAULT_TOL, 7).unwrap();
            assert!(st.pass, "{st:?}");
        }
    }

    #[test]
    fn biased_connection_fails() {
        let chart = MetricChart::round_sphere().with_christoffel_bias(1e-2);
        let st = contact_residuals(&chart, 50, DEFAULT_TOL, 7).unwrap();
        assert!(!st.pass);
        assert!(st.max_dtheta > 1e-4);
    }

    #[test]
    fn degenerate_chart_is_rejected() {
        let err = contact_residuals(&MetricChart::degenerate(), 5, DEFAULT_TOL, 1).unwrap_err();
        assert!(matches!(err, Error::SingularChart(_)));
    }

    #[test]
    fn spacelike_quarter_turn_hits_direction() {
        let s = GeodesicSample::random(2, 1, Causal::Spacelike, vec![], 3).unwrap();
        assert_eq!(geodesic_curve(&s, 0.0), s.base);
        let g = geodesic_curve(&s, FRAC_PI_2);
        for (a, b) in g.iter().zip(&s.direction) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn timelike_needs_negative_directions() {
        assert!(GeodesicSample::random(3, 0, Causal::Timelike, vec![], 0).is_err());
    }

    #[test]
    fn invalid_sample_is_rejected() {
        let r = GeodesicSample::new(1, 0, vec![1.0, 0.0], vec![1.0, 0.0], Causal::Spacelike, vec![]);
        assert!(r.is_err());
    }
}
