//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//! All comparisons are exact; the only tolerances are the wall-clock budgets.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use foldhard::dyck_reduction::check_dyck_identity;
use foldhard::gadget::GadgetParams;
use foldhard::graph::has_3k_clique_bruteforce;
use foldhard::seq::seq;
use foldhard::solvers::dyck::dyck;
use foldhard::solvers::dyck_edit_distance;
use foldhard::verify::{
    case_rng, dyck_oracle_case, random_dyck, random_graph, random_rna, rna_exhaustive_case, rna_oracle_case, run_suite,
    Suite, SuiteOptions, SuiteReport, RNA_EXHAUSTIVE_LEN,
};

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    summary: String,
}

fn suite(s: Suite, trials: usize) -> SuiteReport {
    run_suite(s, &SuiteOptions { seed: SEED, trials: Some(trials), gadget: GadgetParams::STANDARD })
}

fn from_report(r: &SuiteReport, what: &str) -> Outcome {
    let mut summary = format!("{what}: {}/{} cases agree", r.passed, r.cases);
    if let Some(f) = r.failures.first() {
        summary.push_str(&format!("; first failure (case {}): {}", f.case, f.detail));
    }
    Outcome { pass: r.ok(), summary }
}

fn rna_oracle() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=RNA_EXHAUSTIVE_LEN {
        if let Err(e) = rna_exhaustive_case(n) {
            bad.push(e);
        }
    }
    let exhaustive: usize = (0..=RNA_EXHAUSTIVE_LEN as u32).map(|n| 4usize.pow(n)).sum();
    for i in 0..2000 {
        let mut rng = case_rng(SEED, Suite::Oracles, i);
        let n = rng.gen_range(0..=12);
        if let Err(e) = rna_oracle_case(&random_rna(&mut rng, n)) {
            bad.push(e);
        }
    }
    Outcome {
        pass: bad.is_empty(),
        summary: format!(
            "folding DP vs exhaustive search on all {exhaustive} strings with n <= 7 and 2000 random n <= 12: {} mismatches{}",
            bad.len(),
            bad.first().map(|e| format!("; first: {e}")).unwrap_or_default()
        ),
    }
}

fn dyck_oracle() -> Outcome {
    let mut bad = Vec::new();
    for i in 0..2000 {
        let mut rng = case_rng(SEED, Suite::Oracles, 10_000 + i);
        let n = rng.gen_range(0..=10);
        if let Err(e) = dyck_oracle_case(&random_dyck(&mut rng, n, 4)) {
            bad.push(e);
        }
    }
    Outcome {
        pass: bad.is_empty(),
        summary: format!(
            "Dyck DP vs exhaustive search on 2000 random strings, n <= 10, 4 bracket types: {} mismatches{}",
            bad.len(),
            bad.first().map(|e| format!("; first: {e}")).unwrap_or_default()
        ),
    }
}

fn gadget_sandwich() -> Outcome {
    let ok = suite(Suite::Gadget, 500);
    let shrunk = GadgetParams { guard: GadgetParams::STANDARD.guard, fence: 0 };
    let control = run_suite(Suite::Gadget, &SuiteOptions { seed: SEED, trials: Some(500), gadget: shrunk });
    let mut out = from_report(&ok, "500 random instances, n <= 4, |X_i| <= 6, within [all, structural]");
    out.summary.push_str(&format!(
        "; negative control without zero fences: {} violations reported",
        control.failures.len()
    ));
    out.pass &= !control.ok();
    out
}

fn thresholds() -> Outcome {
    let r = suite(Suite::Thresholds, 30);
    // regenerate the same graphs to report how many positive instances the sweep covered
    let (mut pos1, mut pos2) = (0, 0);
    for i in 0..30 {
        let mut rng = case_rng(SEED, Suite::Thresholds, i);
        let g = random_graph(&mut rng, 3..=8, 0.4..1.0);
        pos1 += has_3k_clique_bruteforce(&g, 1) as usize;
        pos2 += has_3k_clique_bruteforce(&g, 2) as usize;
    }
    let mut out = from_report(&r, "30 random graphs n <= 8, k = 1 and 2, q = 3 c1 vs exhaustive 3k-clique search");
    out.summary.push_str(&format!(" (3-cliques in {pos1}, 6-cliques in {pos2})"));
    out
}

fn dyck_identity() -> Outcome {
    let r = suite(Suite::DyckIdentity, 200);
    let mut out = from_report(&r, "200 random S with |S| <= 120 plus fixed literals");
    let lit = [
        dyck_edit_distance(&dyck("ababac'a'a'a'c'")).cost,
        dyck_edit_distance(&dyck("abbaac'a'a'a'c'")).cost,
    ];
    let pair = check_dyck_identity(&seq("00'")).expect("tiny input");
    let empty = check_dyck_identity(&seq("")).expect("empty input");
    out.summary.push_str(&format!(
        "; distance(ababac'a'a'a'c') = {}, distance(abbaac'a'a'a'c') = {}, 00' gives {} = {}",
        lit[0], lit[1], pair.dyck, pair.predicted
    ));
    out.pass &= lit == [4, 3] && pair.holds() && pair.dyck == 3 && empty.holds() && empty.dyck == 0;
    out
}

fn main() -> ExitCode {
    type Check = fn() -> Outcome;
    let criteria: [(&str, u64, Check); 10] = [
        ("folding oracle", 60, rna_oracle),
        ("Dyck oracle", 60, dyck_oracle),
        ("LCS embedding", 120, || from_report(&suite(Suite::LcsEmbedding, 500), "500 binary pairs, |X|, |Y| <= 150, RNA(X p(Y^R)) = LCS")),
        ("alignment gadget", 300, gadget_sandwich),
        ("edge test", 300, || from_report(&suite(Suite::Edges, 50), "50 random graphs n <= 16, all ordered vertex pairs")),
        ("2k-clique test", 600, || from_report(&suite(Suite::CliquePairs, 20), "20 random graphs n <= 8, k = 2, all ordered clique pairs")),
        ("clique thresholds", 900, thresholds),
        ("Dyck identity", 600, dyck_identity),
        ("gadget closed forms", 600, || from_report(&suite(Suite::ClosedForms, 60), "60 payload/schedule samples meeting every inequality")),
        ("S_G structure", 60, || from_report(&suite(Suite::Structure, 12), "growth 2, k = 1, n = 2..=5: length, runs, parse, determinism")),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut out = check();
        let took = start.elapsed();
        if took > Duration::from_secs(budget) {
            out.pass = false;
        }
        failed += !out.pass as usize;
        println!(
            "criterion {:>2} {} {name}: {} [{:.1}s of {budget}s]",
            i + 1,
            if out.pass { "PASS" } else { "FAIL" },
            out.summary,
            took.as_secs_f64()
        );
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
