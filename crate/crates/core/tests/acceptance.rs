use std::process::ExitCode;
use std::time::{Duration, Instant};

use dunkl_core::birep::verify_rep;
use dunkl_core::ck::fischer_decompose;
use dunkl_core::exactnum::Params;
use dunkl_core::operators::IdentityReport;
use dunkl_core::poly::spinor_basis;
use dunkl_core::suite::{
    random_homogeneous, run_suite, run_suites, sample_params, Perturbation, SuiteConfig, SuiteKind, SuiteReport,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 2024;

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    match reports.iter().find_map(|r| r.first_failure().map(|f| (r, f))) {
        None => Outcome { passed: true, detail: format!("{checks} exact checks") },
        Some((r, f)) => Outcome { passed: false, detail: format!("μ = {:?}: {f}", r.mu.to_strings()) },
    }
}

fn suites(kinds: &[SuiteKind], samples: &[Params], config: &SuiteConfig) -> Outcome {
    from_reports(&run_suites(kinds, samples, config, None).suites)
}

fn line(index: usize, title: &str, target: Option<Duration>, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = run();
    let elapsed = start.elapsed();
    let slow = target.is_some_and(|t| elapsed > t);
    let passed = outcome.passed && !slow;
    let budget = target.map(|t| format!(", target < {} s", t.as_secs())).unwrap_or_default();
    let timing = if slow { " (over runtime target)" } else { "" };
    println!(
        "{} criterion {index}: {title} [{:.1} s{budget}{timing}] {}",
        if passed { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        outcome.detail
    );
    passed
}

fn fischer(samples: &[Params], n_max: u32) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut count = 0;
    for p in samples {
        for n in 0..=n_max {
            let f = random_homogeneous(&mut rng, n);
            let parts = match fischer_decompose(&f, p) {
                Ok(parts) => parts,
                Err(e) => return Outcome { passed: false, detail: format!("N={n}: {e}") },
            };
            if parts.reassemble() != f {
                return Outcome { passed: false, detail: format!("N={n}: reassembly differs from input") };
            }
            let dims: usize = (0..=n as usize).map(|j| 2 * (j + 1)).sum();
            let expected = (n as usize + 1) * (n as usize + 2);
            if dims != expected || spinor_basis(n).len() != expected {
                return Outcome { passed: false, detail: format!("N={n}: dimension audit {dims} ≠ {expected}") };
            }
            count += 1;
        }
    }
    let config = SuiteConfig { fischer_max: n_max, seed: SEED, ..SuiteConfig::default() };
    let report = suites(&[SuiteKind::Fischer], samples, &config);
    if report.passed {
        Outcome { passed: true, detail: format!("{count} random inputs reconstructed; {}", report.detail) }
    } else {
        report
    }
}

fn representation(samples: &[Params], config: &SuiteConfig) -> Outcome {
    let direct: Vec<IdentityReport> =
        samples.iter().flat_map(|p| (0..=config.rep_max).map(move |n| verify_rep(n, p))).collect();
    if let Some(f) = direct.iter().find(|r| !r.passed()) {
        return Outcome { passed: false, detail: f.to_string() };
    }
    suites(&[SuiteKind::Representation], samples, config)
}

fn mutation(sample: &Params, config: &SuiteConfig) -> Outcome {
    let plan: Vec<(SuiteKind, Perturbation)> = SuiteKind::ALL
        .iter()
        .map(|&kind| {
            let p = Perturbation::ALL.into_iter().find(|p| p.target() == kind).unwrap_or(Perturbation::Gamma3);
            (kind, p)
        })
        .collect();
    let mut caught = Vec::new();
    for (kind, p) in plan {
        if !run_suite(kind, sample, config, None).passed() {
            return Outcome { passed: false, detail: format!("{} fails without perturbation", kind.name()) };
        }
        let report = run_suite(kind, sample, config, Some(p));
        match report.first_failure() {
            Some(f) if f.counterexample.is_some() => caught.push(format!("{p}→{}", kind.name())),
            Some(f) => return Outcome { passed: false, detail: format!("{}: failure without counterexample: {f}", kind.name()) },
            None => return Outcome { passed: false, detail: format!("{} stays green under {p}", kind.name()) },
        }
    }
    Outcome { passed: true, detail: format!("caught {}", caught.join(", ")) }
}

fn main() -> ExitCode {
    let samples = sample_params(SEED, 5);
    let three = &samples[..3];
    let config = SuiteConfig { seed: SEED, ..SuiteConfig::default() };
    let results = [
        line(1, "osp(1|2) relations and sCasimir on degree ≤ 6, 5 μ samples", Some(Duration::from_secs(30)), || {
            suites(&[SuiteKind::Osp12, SuiteKind::Scasimir], &samples, &config)
        }),
        line(2, "symmetry algebra, Bannai–Ito relations, Casimir, Laplace/angular identities on degree ≤ 4, 5 μ samples", Some(Duration::from_secs(60)), || {
            suites(&[SuiteKind::Symmetry, SuiteKind::Laplace], &samples, &SuiteConfig { identity_degree: 4, ..config.clone() })
        }),
        line(3, "monogenic basis for N ≤ 5, 3 μ samples", None, || suites(&[SuiteKind::Monogenic], three, &config)),
        line(4, "closed-form ψ equals CK ψ for N ≤ 5, 3 μ samples", None, || suites(&[SuiteKind::ClosedForm], three, &config)),
        line(5, "Gram orthogonality, Υ eigen equations and overlap sum rule for N ≤ 3, 3 μ samples", None, || {
            suites(&[SuiteKind::Orthogonality], three, &config)
        }),
        line(6, "Bannai–Ito representation for N ≤ 6 and function realization for N ≤ 4, 5 μ samples", None, || {
            representation(&samples, &config)
        }),
        line(7, "Fischer decomposition and dimension audit for N ≤ 4, 3 μ samples", None, || fischer(three, 4)),
        line(8, "every suite fails with a named counterexample under a deliberate perturbation", None, || {
            let small = SuiteConfig { identity_degree: 3, symmetry_degree: 3, monogenic_max: 3, closedform_max: 3, orthogonality_max: 2, rep_max: 3, realization_max: 2, fischer_max: 3, seed: SEED };
            mutation(&samples[0], &small)
        }),
    ];
    if results.iter().all(|&r| r) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
