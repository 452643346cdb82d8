//! The empirical constants ledger.
//!
//! Only the Szego norm csc(pi/p) is exact; the Calderon constants, the
//! nontangential-maximal constant, and the point-evaluation constant are
//! estimated as suprema over a seeded corpus, so every assembled bound is a
//! ledger-conditional statement. The assembled Ctilde(q, p) carries a factor
//! |p-2| in every term and vanishes identically at p = 2.
//!
//! Run with: cargo run --release --example constants_ledger

use disclab::experiments::checks::szego_lower_bound_check;
use disclab::experiments::ledger::{build_ledger, szego_norm, LedgerParams, LedgerPlan};
use disclab::poly::TaylorPoly;

fn main() -> disclab::Result<()> {
    println!("Exact Szego norms csc(pi/p):");
    for p in [6.0 / 5.0, 4.0 / 3.0, 2.0, 3.0, 4.0, 6.0] {
        println!("  s_{p:<5.3} = {:.8}", szego_norm(p));
    }

    let q = 2.0;
    let p_grid = [1.9, 1.95, 2.0, 2.05, 2.1];
    let targets: Vec<(f64, f64)> = p_grid.iter().map(|&p| (q, p)).collect();
    let plan = LedgerPlan::for_targets(&targets);
    let params = LedgerParams {
        corpus_size: 60, // the shipped experiments use 200; smaller here for speed
        ..Default::default()
    };
    println!("\nBuilding ledger: {} Calderon cells, corpus of {} degree-{} polynomials, seed {} ...",
        plan.calderon_cells.len(), params.corpus_size, params.degree, params.seed);
    let ledger = build_ledger(&plan, &params)?;

    println!("\nCalderon upper cells (empirical lower bounds for C_p,delta):");
    for (key, value) in &ledger.calderon_upper {
        println!("  C[{key}] >= {value:.6}");
    }
    println!("maximal-function and point-evaluation constants:");
    for (key, value) in &ledger.maximal {
        println!("  m[{key}] >= {value:.6}");
    }
    for (key, value) in &ledger.point_eval {
        println!("  k[{key}] >= {value:.6}");
    }

    println!("\nAssembled Ctilde(q = {q}, p) across the p grid:");
    for &p in &p_grid {
        let value = ledger.assemble_ctilde(q, p)?;
        println!("  p = {p:<5}: Ctilde = {value:.8}");
    }
    println!("  (every term carries |p-2|, so the value at p = 2 is exactly zero)");

    println!("\nLedger-conditional Szego lower bound ||P_S f||_q >= (1 - Ctilde) ||f||_q");
    println!("for f = |F|^(p-2) F, F = 1 + z/2, p = 2.1, q = 2:");
    let check = szego_lower_bound_check(&TaylorPoly::from_real(&[1.0, 0.5]), 2.1, 2.0, &ledger, 256)?;
    println!(
        "  lhs = {:.8}, rhs = {:.8}, Ctilde = {:.6}, ok = {}",
        check.lhs, check.rhs, check.ctilde, check.ok
    );
    Ok(())
}
