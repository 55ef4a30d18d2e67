//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::time::{Duration, Instant};

use cycle_ramsey::checks::{self, Lemma, SuiteConfig, SuiteReport};
use cycle_ramsey::generate::{clique_union_cross, rng};
use cycle_ramsey::oracle;
use cycle_ramsey::verify;
use cycle_ramsey::witness::{extremal_graph, ramsey_witness, verify_certificate, CertificateKind};
use cycle_ramsey::Graph;
use rand::Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    let detail = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; ");
    Outcome {
        ok: reports.iter().all(SuiteReport::ok),
        detail,
    }
}

fn suite(lemma: Lemma, trials: usize, seed: u64, max_n: usize) -> SuiteReport {
    checks::run_suite(
        lemma,
        &SuiteConfig {
            trials,
            seed,
            max_n,
            mutate: false,
        },
    )
}

fn extremal_lower_bound() -> Outcome {
    for p in 3..=7 {
        for r in 1..=3 {
            let g = extremal_graph(p, r).expect("valid parameters");
            if g.order() != p * r {
                return fail(format!("({p}, {r}): order {}", g.order()));
            }
            // every cycle lies inside one component
            let mut longest = 0;
            for comp in g.components() {
                let sub = g.induced(&comp);
                let orders = oracle::all_cycle_orders(&sub.graph).expect("small component");
                longest = longest.max(orders.last().copied().unwrap_or(0));
            }
            if longest != p {
                return fail(format!("({p}, {r}): longest cycle {longest}"));
            }
            let alpha = oracle::independence_number(&g).expect("small graph");
            if alpha != r {
                return fail(format!("({p}, {r}): independence number {alpha}"));
            }
        }
    }
    pass("25 parameter pairs: order pr, longest cycle p, independence number r")
}

fn witness_dichotomy() -> Outcome {
    let mut slowest = Duration::ZERO;
    for seed in 0..100u64 {
        let m = rng(seed ^ 0xC0FFEE).random_range(0..=30);
        let g = clique_union_cross(&[13, 14], m, &mut rng(seed)).expect("feasible");
        if oracle::independence_number(&g).expect("order 27") != 2 {
            return fail(format!("seed {seed}: independence number is not 2"));
        }
        let t = Instant::now();
        let cert = ramsey_witness(&g, 13, 2);
        let took = t.elapsed();
        slowest = slowest.max(took);
        if cert.kind != CertificateKind::CycleFound {
            return fail(format!("seed {seed}, m = {m}: {:?}: {}", cert.kind, cert.explanation));
        }
        let cycle = cert.cycle.as_ref().expect("cycle present");
        if cycle.order() != 14 || verify::check_cycle(&g, cycle).is_err() || verify_certificate(&g, 13, 2, &cert).is_err() {
            return fail(format!("seed {seed}: certificate rejected"));
        }
        if took > Duration::from_secs(5) {
            return fail(format!("seed {seed}: {took:?}"));
        }
    }
    pass(format!("100/100 verified C_14, slowest trial {:.3}s", slowest.as_secs_f64()))
}

fn degenerate_dichotomy() -> Outcome {
    let k27 = Graph::complete(27);
    let c = ramsey_witness(&k27, 13, 2);
    if c.kind != CertificateKind::CycleFound || verify_certificate(&k27, 13, 2, &c).is_err() {
        return fail(format!("K_27: {:?}", c.kind));
    }
    let mut g = extremal_graph(13, 2).expect("valid");
    g.add_vertex();
    let c = ramsey_witness(&g, 13, 2);
    let set = match (&c.kind, &c.independent_set) {
        (CertificateKind::IndependentSetFound, Some(s)) => s.clone(),
        _ => return fail(format!("2 K_13 + K_1: {:?}", c.kind)),
    };
    if set.len() != 3 || verify::check_independent_set(&g, &set).is_err() || verify_certificate(&g, 13, 2, &c).is_err() {
        return fail("2 K_13 + K_1: certificate rejected");
    }
    pass(format!("K_27 gives C_14; 2 K_13 + K_1 gives independent set {:?}", set.to_vec()))
}

fn erdos_gallai() -> Outcome {
    from_reports(&[
        checks::run_trials(Lemma::ErdosGallai, 300, 6, |r| checks::eg_trial(r, 11)),
        checks::run_trials(Lemma::ErdosGallai, 100, 61, |r| checks::avoiding_trial(r, 11)),
        checks::run_trials(Lemma::ErdosGallai, 100, 62, |r| checks::one_exception_trial(r, 11)),
    ])
}

fn main() {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("1 extremal lower bound", Duration::from_secs(10), extremal_lower_bound),
        ("2 witness dichotomy end-to-end", Duration::from_secs(500), witness_dichotomy),
        ("3 degenerate dichotomy", Duration::from_secs(1), degenerate_dichotomy),
        ("4 chopping oracle equivalence", Duration::from_secs(60), || {
            from_reports(&[suite(Lemma::Chop, 500, 7, 12)])
        }),
        ("5 saw lemma suite", Duration::from_secs(300), || {
            from_reports(&[
                suite(Lemma::Pr1, 200, 5, 13),
                suite(Lemma::Super, 200, 5, 13),
                suite(Lemma::Lux, 200, 5, 13),
                suite(Lemma::Flat, 200, 5, 13),
                suite(Lemma::SawCycles, 200, 5, 13),
            ])
        }),
        ("6 Erdős–Gallai suite", Duration::from_secs(120), erdos_gallai),
        ("7 collating oracle equivalence", Duration::from_secs(60), || {
            from_reports(&[suite(Lemma::Collate, 100, 7, 14)])
        }),
        ("8 find_saw contract", Duration::from_secs(60), || {
            from_reports(&[suite(Lemma::SawFind, 200, 8, 30)])
        }),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let t = Instant::now();
        let mut out = run();
        let took = t.elapsed();
        if took > limit {
            out.ok = false;
            out.detail.push_str(&format!("; over the {}s limit", limit.as_secs()));
        }
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {name} ({:.2}s): {}", took.as_secs_f64(), out.detail);
        failed += usize::from(!out.ok);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
