//! Floating-point search for nilsoliton metrics: multi-restart gradient
//! descent on a Cholesky parameterization of the metric, minimizing the
//! scale-invariant distance of Ric from span{I} + Der. Numeric success is
//! only reported as a certificate after the rationalized metric passes the
//! exact `nilsoliton_check`; non-existence is never concluded numerically.

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{Field, Matrix, Rational};
use crate::lie::LieAlgebra;
use crate::metric::{nilsoliton_check, InnerProduct, MetricError, SolitonCertificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolitonError {
    #[error("metric is degenerate (eigenvalue below the 1e-10 floor)")]
    DegenerateMetric,
    #[error("search requires a nilpotent algebra")]
    NonNilpotent,
    #[error("dimension mismatch: algebra dim {0}, metric {1}x{2}")]
    DimensionMismatch(usize, usize, usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Normalization {
    UnitDeterminant,
    FixedScalarCurvature,
}

#[derive(Clone, Debug)]
pub struct FlowConfig {
    pub max_iters: usize,
    pub tol: f64,
    pub restarts: usize,
    pub seed: u64,
    pub step: f64,
    pub normalization: Normalization,
}

impl Default for FlowConfig {
    fn default() -> Self {
        FlowConfig {
            max_iters: 5000,
            tol: 1e-8,
            restarts: 8,
            seed: 1,
            step: 0.1,
            normalization: Normalization::UnitDeterminant,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchVerdict {
    CertificateFound,
    NoCertificateFound,
}

#[derive(Clone, Debug)]
pub struct RestartSummary {
    pub index: usize,
    pub iterations: usize,
    pub final_residual: f64,
    pub certified: bool,
}

#[derive(Clone, Debug)]
pub struct FlowTrace {
    pub residuals: Vec<f64>,
    pub final_metric: DMatrix<f64>,
    pub final_residual: f64,
    pub verdict: SearchVerdict,
    /// Condition number of the best final metric; large values flag
    /// degeneration toward the boundary of the positive-definite cone.
    pub condition_number: f64,
    pub restarts: Vec<RestartSummary>,
    /// Exact witness backing a certificate-found verdict.
    pub certificate: Option<(InnerProduct, SolitonCertificate)>,
}

/// Shared float context: structure constants and the derivation space are
/// fixed by the algebra; the derivation space is computed once exactly.
struct ResidualCtx {
    n: usize,
    ad: Vec<DMatrix<f64>>,
    /// flattened operator basis of span{I} + Der (orthonormal-frame ops are
    /// transformed per metric)
    ders: Vec<DMatrix<f64>>,
}

fn to_f64(x: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).expect("rational fits in f64")
}

impl ResidualCtx {
    fn new(a: &LieAlgebra<Rational>) -> Self {
        let n = a.dim();
        let ad = (0..n)
            .map(|i| {
                let m = a.bracket().ad_basis(i);
                DMatrix::from_fn(n, n, |r, c| to_f64(&m[(r, c)]))
            })
            .collect();
        let ders = a
            .derivation_matrices()
            .iter()
            .map(|d| DMatrix::from_fn(n, n, |r, c| to_f64(&d[(r, c)])))
            .collect();
        ResidualCtx { n, ad, ders }
    }

    fn ricci_f64(&self, g: &DMatrix<f64>, h: &DMatrix<f64>) -> DMatrix<f64> {
        let n = self.n;
        let gad: Vec<DMatrix<f64>> = self.ad.iter().map(|ad| g * ad).collect();
        let mut form = DMatrix::zeros(n, n);
        for x in 0..n {
            for y in x..n {
                let k = gad[x].transpose() * h * &gad[y];
                let mut acc = 0.0;
                for p in 0..n {
                    for q in 0..n {
                        acc += h[(p, q)] * k[(p, q)];
                    }
                }
                form[(x, y)] -= 0.5 * acc;
                if x != y {
                    form[(y, x)] = form[(x, y)];
                }
            }
        }
        for a in 0..n {
            for c in 0..n {
                let hac = h[(a, c)];
                if hac == 0.0 {
                    continue;
                }
                let m = &gad[a] * h * gad[c].transpose();
                for x in 0..n {
                    for y in 0..n {
                        form[(x, y)] += 0.25 * hac * m[(x, y)];
                    }
                }
            }
        }
        h * form
    }

    /// ||Ric - P(Ric)|| / max(||Ric||, eps) in the g-induced operator inner
    /// product, computed in a g-orthonormal frame.
    fn residual(&self, g: &DMatrix<f64>) -> Result<f64, SolitonError> {
        let n = self.n;
        if g.nrows() != n || g.ncols() != n {
            return Err(SolitonError::DimensionMismatch(n, g.nrows(), g.ncols()));
        }
        let eig = g.clone().symmetric_eigen();
        let max_ev = eig.eigenvalues.iter().cloned().fold(0.0f64, f64::max);
        let min_ev = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
        if !(min_ev > 1e-10 * max_ev.max(1.0)) {
            return Err(SolitonError::DegenerateMetric);
        }
        let chol = g
            .clone()
            .cholesky()
            .ok_or(SolitonError::DegenerateMetric)?;
        let l = chol.l();
        let linv = l
            .clone()
            .try_inverse()
            .ok_or(SolitonError::DegenerateMetric)?;
        let h = &linv.transpose() * &linv; // G^{-1}
        let ric = self.ricci_f64(g, &h);
        // orthonormal-frame transform A -> L^T A L^{-T}
        let lt = l.transpose();
        let linvt = linv.transpose();
        let ric_t = &lt * &ric * &linvt;
        let mut cols: Vec<DVector<f64>> = Vec::with_capacity(1 + self.ders.len());
        cols.push(DVector::from_element(n * n, 0.0));
        for i in 0..n {
            cols[0][i * n + i] = 1.0;
        }
        for d in &self.ders {
            let dt = &lt * d * &linvt;
            cols.push(DVector::from_iterator(n * n, dt.iter().cloned()));
        }
        let basis = DMatrix::from_columns(&cols);
        let ric_flat = DVector::from_iterator(n * n, ric_t.iter().cloned());
        let svd = basis.svd(true, true);
        let coeffs = svd
            .solve(&ric_flat, 1e-12)
            .map_err(|_| SolitonError::DegenerateMetric)?;
        let resid = &ric_flat - basis * coeffs;
        let denom = ric_flat.norm().max(1e-30);
        Ok(resid.norm() / denom)
    }
}

/// Distance of Ric_g from the affine space cI + Der(n), normalized by
/// ||Ric_g||; zero exactly at nilsoliton metrics (up to roundoff).
pub fn soliton_residual(a: &LieAlgebra<Rational>, g: &DMatrix<f64>) -> Result<f64, SolitonError> {
    ResidualCtx::new(a).residual(g)
}

fn params_to_metric(theta: &[f64], n: usize) -> DMatrix<f64> {
    let mut l = DMatrix::zeros(n, n);
    let mut idx = 0;
    for i in 0..n {
        for j in 0..=i {
            if i == j {
                l[(i, j)] = theta[idx].exp();
            } else {
                l[(i, j)] = theta[idx];
            }
            idx += 1;
        }
    }
    &l * l.transpose()
}

fn normalize_metric(ctx: &ResidualCtx, g: &DMatrix<f64>, norm: Normalization) -> DMatrix<f64> {
    let n = g.nrows() as f64;
    match norm {
        Normalization::UnitDeterminant => {
            let det = g.determinant();
            if det > 0.0 {
                g * det.powf(-1.0 / n)
            } else {
                g.clone()
            }
        }
        Normalization::FixedScalarCurvature => {
            let Some(chol) = g.clone().cholesky() else {
                return g.clone();
            };
            let h = chol.inverse();
            let sc = ctx.ricci_f64(g, &h).trace();
            // Ric scales by 1/s under g -> s g; pin scal = -1 when negative
            if sc < -1e-14 {
                g * (-sc)
            } else {
                g.clone()
            }
        }
    }
}

/// Continued-fraction rationalization with bounded denominator.
pub fn rationalize(x: f64, max_den: i64) -> Rational {
    if !x.is_finite() {
        return Rational::from_int(0);
    }
    let negative = x < 0.0;
    let mut v = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    for _ in 0..40 {
        let a = v.floor();
        if a > i64::MAX as f64 / 2.0 {
            break;
        }
        let ai = a as i64;
        let p2 = ai.saturating_mul(p1).saturating_add(p0);
        let q2 = ai.saturating_mul(q1).saturating_add(q0);
        if q2 > max_den || q2 < 0 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = v - a;
        if frac < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return Rational::from_int(0);
    }
    let r = Rational::new(BigInt::from(p1), BigInt::from(q1));
    if negative {
        -r
    } else {
        r
    }
}

fn try_certify(
    a: &LieAlgebra<Rational>,
    g: &DMatrix<f64>,
) -> Option<(InnerProduct, SolitonCertificate)> {
    let n = g.nrows();
    for max_den in [12i64, 100, 1000, 10_000] {
        let m = Matrix::from_fn(n, n, |i, j| {
            // symmetrize through the upper triangle
            let v = if i <= j { g[(i, j)] } else { g[(j, i)] };
            rationalize(v, max_den)
        });
        let Ok(ip) = InnerProduct::new(m) else {
            continue;
        };
        match nilsoliton_check(a, &ip) {
            Ok(Some(cert)) => return Some((ip, cert)),
            _ => continue,
        }
    }
    None
}

struct RestartOutcome {
    residuals: Vec<f64>,
    metric: DMatrix<f64>,
    final_residual: f64,
    iterations: usize,
    certificate: Option<(InnerProduct, SolitonCertificate)>,
}

fn run_restart(
    a: &LieAlgebra<Rational>,
    ctx: &ResidualCtx,
    cfg: &FlowConfig,
    index: usize,
) -> Result<RestartOutcome, SolitonError> {
    let n = ctx.n;
    let nparams = n * (n + 1) / 2;
    let mut theta = vec![0.0f64; nparams];
    if index > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(index as u64));
        for t in theta.iter_mut() {
            *t = rng.gen_range(-0.5..0.5);
        }
    }
    let eval = |th: &[f64]| -> f64 {
        let g = params_to_metric(th, n);
        ctx.residual(&g).unwrap_or(f64::INFINITY)
    };
    let mut f = eval(&theta);
    let mut residuals = vec![f];
    let mut iterations = 0;
    while iterations < cfg.max_iters && f >= cfg.tol {
        // central finite differences
        let mut grad = vec![0.0f64; nparams];
        let mut gnorm2 = 0.0;
        for p in 0..nparams {
            let hstep = 1e-6 * theta[p].abs().max(1.0);
            let mut tp = theta.clone();
            tp[p] += hstep;
            let fp = eval(&tp);
            tp[p] = theta[p] - hstep;
            let fm = eval(&tp);
            grad[p] = (fp - fm) / (2.0 * hstep);
            gnorm2 += grad[p] * grad[p];
        }
        if gnorm2.sqrt() < 1e-14 {
            break; // flat point
        }
        // backtracking line search accepting only non-increasing steps
        let mut t = cfg.step;
        let mut accepted = false;
        for _ in 0..40 {
            let cand: Vec<f64> = theta
                .iter()
                .zip(&grad)
                .map(|(x, g)| x - t * g)
                .collect();
            let fc = eval(&cand);
            if fc <= f - 1e-4 * t * gnorm2 || fc < f {
                theta = cand;
                f = fc;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            break; // line search stalled
        }
        residuals.push(f);
        iterations += 1;
    }
    let metric = normalize_metric(ctx, &params_to_metric(&theta, n), cfg.normalization);
    let final_residual = ctx.residual(&metric).unwrap_or(f);
    let certificate = if final_residual < cfg.tol {
        try_certify(a, &metric)
    } else {
        None
    };
    Ok(RestartOutcome {
        residuals,
        metric,
        final_residual,
        iterations,
        certificate,
    })
}

/// Multi-restart descent; deterministic for a fixed (algebra, config) pair
/// regardless of scheduling, since restarts are independent and aggregated
/// in index order.
pub fn search(a: &LieAlgebra<Rational>, cfg: &FlowConfig) -> Result<FlowTrace, SolitonError> {
    if !a.is_nilpotent() {
        return Err(SolitonError::NonNilpotent);
    }
    assert!(cfg.tol > 0.0 && cfg.restarts >= 1 && cfg.step > 0.0);
    let ctx = ResidualCtx::new(a);
    let outcomes: Vec<Result<RestartOutcome, SolitonError>> = (0..cfg.restarts)
        .into_par_iter()
        .map(|i| run_restart(a, &ctx, cfg, i))
        .collect();
    let mut summaries = Vec::new();
    let mut best: Option<RestartOutcome> = None;
    let mut certificate = None;
    for (i, oc) in outcomes.into_iter().enumerate() {
        let oc = oc?;
        summaries.push(RestartSummary {
            index: i,
            iterations: oc.iterations,
            final_residual: oc.final_residual,
            certified: oc.certificate.is_some(),
        });
        if certificate.is_none() && oc.certificate.is_some() {
            certificate = oc.certificate.clone();
        }
        let better = match &best {
            None => true,
            Some(b) => oc.final_residual < b.final_residual,
        };
        if better {
            best = Some(oc);
        }
    }
    let best = best.expect("at least one restart");
    let eig = best.metric.clone().symmetric_eigen();
    let max_ev = eig.eigenvalues.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min_ev = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    let condition_number = if min_ev > 0.0 { max_ev / min_ev } else { f64::INFINITY };
    Ok(FlowTrace {
        residuals: best.residuals,
        final_metric: best.metric,
        final_residual: best.final_residual,
        verdict: if certificate.is_some() {
            SearchVerdict::CertificateFound
        } else {
            SearchVerdict::NoCertificateFound
        },
        condition_number,
        restarts: summaries,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::lie::test_algebras::{abelian, h3};

    #[test]
    fn h3_identity_is_a_soliton_metric() {
        let a = h3();
        let g = DMatrix::identity(3, 3);
        let r = soliton_residual(&a, &g).unwrap();
        assert!(r < 1e-14, "residual {r}");
    }

    #[test]
    fn abelian_residual_zero_by_convention() {
        let a = abelian(4);
        let g = DMatrix::identity(4, 4) * 3.0;
        assert_eq!(soliton_residual(&a, &g).unwrap(), 0.0);
    }

    #[test]
    fn residual_is_scale_invariant() {
        let a = h3();
        let mut g = DMatrix::identity(3, 3);
        g[(0, 1)] = 0.3;
        g[(1, 0)] = 0.3;
        g[(1, 1)] = 2.0;
        let r1 = soliton_residual(&a, &g).unwrap();
        let r2 = soliton_residual(&a, &(g * 7.5)).unwrap();
        assert!((r1 - r2).abs() < 1e-10);
    }

    #[test]
    fn degenerate_metric_rejected() {
        let a = h3();
        let mut g = DMatrix::identity(3, 3);
        g[(2, 2)] = 1e-14;
        assert!(matches!(
            soliton_residual(&a, &g),
            Err(SolitonError::DegenerateMetric)
        ));
    }

    #[test]
    fn search_h3_certifies() {
        let a = h3();
        let cfg = FlowConfig {
            restarts: 2,
            ..Default::default()
        };
        let trace = search(&a, &cfg).unwrap();
        assert_eq!(trace.verdict, SearchVerdict::CertificateFound);
        assert!(trace.final_residual < 1e-8);
        let (_, cert) = trace.certificate.unwrap();
        assert_eq!(cert.c, rat(-3, 2));
        // the trace is monotonically non-increasing
        for w in trace.residuals.windows(2) {
            assert!(w[1] <= w[0] + 1e-15);
        }
    }

    #[test]
    fn search_is_deterministic() {
        let a = h3();
        let cfg = FlowConfig {
            restarts: 3,
            max_iters: 60,
            ..Default::default()
        };
        let t1 = search(&a, &cfg).unwrap();
        let t2 = search(&a, &cfg).unwrap();
        assert_eq!(t1.residuals, t2.residuals);
        assert_eq!(t1.final_residual, t2.final_residual);
        assert_eq!(t1.final_metric, t2.final_metric);
    }

    #[test]
    fn rationalize_round_trips_small_fractions() {
        for (num, den) in [(1i64, 2i64), (-3, 4), (7, 3), (0, 1), (22, 7)] {
            let x = num as f64 / den as f64;
            assert_eq!(rationalize(x, 10_000), rat(num, den));
        }
    }
}
