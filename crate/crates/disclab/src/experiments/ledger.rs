//! The constants ledger.
//!
//! Only the Szegő norm csc(π/p) is known in closed form. Every other
//! constant is estimated as an empirical supremum over a seeded corpus and
//! must be read as a LOWER bound on the true constant; bound checks that
//! consume ledger entries are therefore ledger-conditional. Entries:
//!
//! * `calderon_upper` — C_{p,δ}: sup ‖S(|F|^δ)‖_p / ‖|F|^δ‖_p;
//! * `calderon_lower` — Ĉ_{p,δ}: sup of the reciprocal ratio over the
//!   subfamily with F(0) = 0;
//! * `maximal` — 𝔪_q: sup ‖h*‖_q / ‖h‖_{H^q} for the nontangential maximal
//!   function;
//! * `point_eval` — 𝔨_q: sup of |A| / ((p|p-2|/(p-1))·‖F‖_{(p-1)q}^{p-1}
//!   ‖h‖_{q'}), A the quarter-disc logarithmic integral of Δ(fh);
//!
//! assembled into C̃_{q,p} = 𝔰_{q'}·[ (p|p-2|/(p-1))𝔨_q
//!   + (|p-2|/(4(p-1)))·C_{q,p-1}·C_{q',1}
//!   + 𝔪_{q'}·(p|p-2|/(2(p-1)))·C²_{2q,(p-1)/2} ].
//!
//! Every term carries a factor |p-2|, so C̃_{q,2} = 0 exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiments::checks::laplacian_of_lift_product;
use crate::experiments::corpus::{self, Stream};
use crate::grid::PolarGrid;
use crate::norms::{conjugate_exponent, hardy_norm_value};
use crate::squarefn::{
    grad_modulus_power, nontangential_max_profile, profile_lp_norm, square_function_profile,
    ConeSpec,
};

/// Exact Szegő projection norm on L^p: csc(π/p).
pub fn szego_norm(p: f64) -> f64 {
    assert!(p > 1.0);
    1.0 / (std::f64::consts::PI / p).sin()
}

fn cell_key(exponent: f64, delta: f64) -> String {
    format!("p={exponent:.6}:delta={delta:.6}")
}

fn exp_key(q: f64) -> String {
    format!("q={q:.6}")
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct ConstantsLedger {
    pub seed: u64,
    pub corpus_size: usize,
    pub degree: usize,
    /// C_{p,δ} empirical suprema, keyed by "p=..:delta=..".
    pub calderon_upper: BTreeMap<String, f64>,
    /// Ĉ_{p,δ} empirical suprema (F(0) = 0 subfamily).
    pub calderon_lower: BTreeMap<String, f64>,
    /// 𝔪_q empirical suprema, keyed by "q=..".
    pub maximal: BTreeMap<String, f64>,
    /// 𝔨_q empirical suprema, keyed by "q=..".
    pub point_eval: BTreeMap<String, f64>,
}

impl ConstantsLedger {
    /// Manual entry, for synthetic what-if ledgers.
    pub fn set_calderon(&mut self, p: f64, delta: f64, value: f64) {
        self.calderon_upper.insert(cell_key(p, delta), value);
    }

    pub fn set_maximal(&mut self, q: f64, value: f64) {
        self.maximal.insert(exp_key(q), value);
    }

    pub fn set_point_eval(&mut self, q: f64, value: f64) {
        self.point_eval.insert(exp_key(q), value);
    }

    pub fn calderon(&self, p: f64, delta: f64) -> Result<f64> {
        self.calderon_upper
            .get(&cell_key(p, delta))
            .copied()
            .ok_or_else(|| Error::MissingLedgerEntry {
                entry: format!("C[{}]", cell_key(p, delta)),
            })
    }

    pub fn maximal(&self, q: f64) -> Result<f64> {
        self.maximal
            .get(&exp_key(q))
            .copied()
            .ok_or_else(|| Error::MissingLedgerEntry {
                entry: format!("m[{}]", exp_key(q)),
            })
    }

    pub fn point_eval(&self, q: f64) -> Result<f64> {
        self.point_eval
            .get(&exp_key(q))
            .copied()
            .ok_or_else(|| Error::MissingLedgerEntry {
                entry: format!("k[{}]", exp_key(q)),
            })
    }

    /// C̃_{q,p} from ledger entries. Exactly 0 at p = 2 (every term carries
    /// |p-2|), without requiring any entries in that case.
    pub fn assemble_ctilde(&self, q: f64, p: f64) -> Result<f64> {
        assert!(p > 1.0 && q > 1.0);
        if p == 2.0 {
            return Ok(0.0);
        }
        let qp = conjugate_exponent(q);
        let abs_pm2 = (p - 2.0).abs();
        let term_point = (p * abs_pm2 / (p - 1.0)) * self.point_eval(q)?;
        let term_cross =
            (abs_pm2 / (4.0 * (p - 1.0))) * self.calderon(q, p - 1.0)? * self.calderon(qp, 1.0)?;
        let term_square = self.maximal(qp)?
            * (p * abs_pm2 / (2.0 * (p - 1.0)))
            * self.calderon(2.0 * q, (p - 1.0) / 2.0)?.powi(2);
        Ok(szego_norm(qp) * (term_point + term_cross + term_square))
    }
}

/// What to estimate: Calderón cells, maximal-function exponents, and
/// point-evaluation exponents (the latter need an accompanying p grid).
#[derive(Debug, Clone)]
pub struct LedgerPlan {
    /// (exponent, δ) cells for C_{p,δ} and Ĉ_{p,δ}.
    pub calderon_cells: Vec<(f64, f64)>,
    /// Exponents q for 𝔪_q.
    pub maximal_exponents: Vec<f64>,
    /// (q, p) pairs feeding the 𝔨_q estimate; p = 2 cells are skipped
    /// (the numerator and the normalising factor both vanish).
    pub point_eval_cells: Vec<(f64, f64)>,
}

impl LedgerPlan {
    /// Plan covering `assemble_ctilde(q, p)` for every requested pair.
    pub fn for_targets(targets: &[(f64, f64)]) -> Self {
        let mut calderon_cells: Vec<(f64, f64)> = Vec::new();
        let mut maximal_exponents: Vec<f64> = Vec::new();
        let mut point_eval_cells: Vec<(f64, f64)> = Vec::new();
        let push_cell = |list: &mut Vec<(f64, f64)>, cell: (f64, f64)| {
            if !list
                .iter()
                .any(|&(a, b)| (a - cell.0).abs() < 1e-12 && (b - cell.1).abs() < 1e-12)
            {
                list.push(cell);
            }
        };
        for &(q, p) in targets {
            if p == 2.0 {
                continue;
            }
            let qp = conjugate_exponent(q);
            push_cell(&mut calderon_cells, (q, p - 1.0));
            push_cell(&mut calderon_cells, (qp, 1.0));
            push_cell(&mut calderon_cells, (2.0 * q, (p - 1.0) / 2.0));
            if !maximal_exponents.iter().any(|&e| (e - qp).abs() < 1e-12) {
                maximal_exponents.push(qp);
            }
            push_cell(&mut point_eval_cells, (q, p));
        }
        Self {
            calderon_cells,
            maximal_exponents,
            point_eval_cells,
        }
    }
}

/// Grid and cone parameters for ledger estimation.
#[derive(Debug, Clone)]
pub struct LedgerParams {
    pub seed: u64,
    pub corpus_size: usize,
    pub degree: usize,
    pub n_r: usize,
    pub n_theta: usize,
    /// Cone cutoff for the Calderón cells (δ < 1 with F(0) = 0 diverges at
    /// the origin in the dr dφ measure, so sweeps use a positive cutoff).
    pub cone_r_min: f64,
}

impl Default for LedgerParams {
    fn default() -> Self {
        Self {
            seed: 7,
            corpus_size: 200,
            degree: 16,
            n_r: 96,
            n_theta: 256,
            cone_r_min: 0.25,
        }
    }
}

/// Estimates every constant in the plan over the seeded corpus.
pub fn build_ledger(plan: &LedgerPlan, params: &LedgerParams) -> Result<ConstantsLedger> {
    let mut ledger = ConstantsLedger {
        seed: params.seed,
        corpus_size: params.corpus_size,
        degree: params.degree,
        ..Default::default()
    };
    let cone = ConeSpec {
        r_min: params.cone_r_min,
        ..Default::default()
    };
    let grid = PolarGrid::annulus(params.n_r, params.n_theta, params.cone_r_min)?;

    // Calderón cells: one field per (sample, δ), norms per exponent
    let mut deltas: Vec<f64> = Vec::new();
    for &(_, d) in &plan.calderon_cells {
        if !deltas.iter().any(|&x| (x - d).abs() < 1e-12) {
            deltas.push(d);
        }
    }
    for i in 0..params.corpus_size as u64 {
        let f_general = corpus::random_poly(params.seed, Stream::CalderonPolys, i, params.degree);
        let f_vanishing =
            corpus::random_poly_vanishing(params.seed, Stream::CalderonPolys, i, params.degree);
        for &delta in &deltas {
            let field = grad_modulus_power(&f_general, delta, &grid)?;
            let profile = square_function_profile(&field, &cone);
            let field_v = grad_modulus_power(&f_vanishing, delta, &grid)?;
            let profile_v = square_function_profile(&field_v, &cone);
            let g_boundary = |f: &crate::poly::TaylorPoly, exp: f64| -> Result<f64> {
                let samples = crate::boundary::BoundarySamples::from_poly(f, params.n_theta)?;
                let mean: f64 = samples
                    .values()
                    .iter()
                    .map(|v| v.norm().powf(delta * exp))
                    .sum::<f64>()
                    / params.n_theta as f64;
                Ok(mean.powf(1.0 / exp))
            };
            for &(exponent, d) in &plan.calderon_cells {
                if (d - delta).abs() > 1e-12 {
                    continue;
                }
                let s_norm = profile_lp_norm(&profile, exponent);
                let g_norm = g_boundary(&f_general, exponent)?;
                let key = cell_key(exponent, delta);
                let upper = ledger.calderon_upper.entry(key.clone()).or_insert(0.0);
                *upper = upper.max(s_norm / g_norm);

                let s_norm_v = profile_lp_norm(&profile_v, exponent);
                let g_norm_v = g_boundary(&f_vanishing, exponent)?;
                if s_norm_v > 0.0 {
                    let lower = ledger.calderon_lower.entry(key).or_insert(0.0);
                    *lower = lower.max(g_norm_v / s_norm_v);
                }
            }
        }
    }

    // 𝔪_q: nontangential maximal function against the Hardy norm
    if !plan.maximal_exponents.is_empty() {
        let max_grid = PolarGrid::new(params.n_r, params.n_theta)?;
        let cone_full = ConeSpec::default();
        for i in 0..params.corpus_size as u64 {
            let h = corpus::random_poly(params.seed, Stream::MaximalPolys, i, params.degree);
            let star = nontangential_max_profile(&h, &max_grid, &cone_full);
            for &q in &plan.maximal_exponents {
                let num = profile_lp_norm(&star, q);
                let den = hardy_norm_value(&h, q)?;
                let entry = ledger.maximal.entry(exp_key(q)).or_insert(0.0);
                *entry = entry.max(num / den);
            }
        }
    }

    // 𝔨_q: quarter-disc logarithmic integral against point-evaluation norms
    if !plan.point_eval_cells.is_empty() {
        let quarter = PolarGrid::on_radial_interval(params.n_r, params.n_theta, 0.0, 0.25)?;
        let log_weights: Vec<f64> = quarter.r_nodes().iter().map(|&r| (1.0 / r).ln()).collect();
        for i in 0..params.corpus_size as u64 {
            let f = corpus::random_poly_nonvanishing(params.seed, Stream::PointEvalPairs, i, params.degree);
            let h_raw = corpus::random_poly_vanishing(params.seed, Stream::PointEvalPairs, i + 1_000_000, params.degree);
            for &(q, p) in &plan.point_eval_cells {
                let lap = laplacian_of_lift_product(&f, &h_raw, p, &quarter);
                // A = (1/2π) ∫ Δ(fh) log(1/|z|) dA = (1/2) ∫ … dA/π
                let mut a_val = num_complex::Complex64::new(0.0, 0.0);
                for (ri, &lw) in log_weights.iter().enumerate() {
                    let w = quarter.area_weight(ri);
                    let mut ring = num_complex::Complex64::new(0.0, 0.0);
                    for j in 0..quarter.n_theta() {
                        ring += lap[ri * quarter.n_theta() + j];
                    }
                    a_val += 0.5 * w * lw * ring;
                }
                let qp = conjugate_exponent(q);
                let factor = p * (p - 2.0).abs() / (p - 1.0);
                let f_norm = hardy_norm_value(&f, (p - 1.0) * q)?.powf(p - 1.0);
                let h_norm = hardy_norm_value(&h_raw, qp)?;
                let denom = factor * f_norm * h_norm;
                if denom > 0.0 {
                    let entry = ledger.point_eval.entry(exp_key(q)).or_insert(0.0);
                    *entry = entry.max(a_val.norm() / denom);
                }
            }
        }
    }

    Ok(ledger)
}
