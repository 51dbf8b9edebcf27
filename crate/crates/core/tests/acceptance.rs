//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use plane_decomp::sweep::{self, CriterionReport, SweepConfig};
use plane_decomp::decompose::Options;
use plane_decomp::generators;

fn main() -> ExitCode {
    let cfg = SweepConfig::default();
    let start = Instant::now();
    let graphs = sweep::catalog(cfg.max_n);
    println!("catalog: {} connected subcubic planar graphs with n <= {} ({:.1}s)", graphs.len(), cfg.max_n, start.elapsed().as_secs_f64());
    let cubic = sweep::cubic_instances(cfg.cubic_max_n);
    let random = sweep::random_sep_instances(cfg.random_instances, cfg.random_max_n, cfg.seed);
    let chain = generators::two_cut_chain(cfg.chain_length).unwrap();

    let mut reports: Vec<CriterionReport> = Vec::new();
    let mut run = |r: CriterionReport| {
        println!("{}", r.line());
        reports.push(r);
    };
    run(sweep::catalog_soundness(&graphs));
    run(sweep::tree_sharpness(&graphs));
    run(sweep::single_edge_coverage(&graphs));
    run(sweep::tightness_control(&graphs));
    run(sweep::cubic_three_decompose(&cubic));
    run(sweep::class_equivalence(&graphs));
    run(sweep::gadget_round_trip(&random));
    run(sweep::scale_smoke(&chain, Duration::from_secs(60), Options { validate: true }));
    run(sweep::lemma_suite(&graphs));

    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("acceptance: {} of {} criteria passed in {:.1}s", reports.len() - failed, reports.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
