//! Seeded property suites that compare every layer against an independent
//! oracle. Shared by the `foldhard verify` command and the acceptance tests.
//!
//! Every case draws from its own ChaCha stream derived from `(seed, case)`,
//! so cases run in parallel and reports are identical across runs.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clique_encoding::{list_gadget, node_gadget, edge_constant_c0, CliqueEncoding, GadgetCounts};
use crate::dyck_reduction::{check_dyck_identity, dyck_to_rna, rna_to_dyck};
use crate::error::{Error, Result};
use crate::gadget::GadgetParams;
use crate::graph::{has_3k_clique_bruteforce, Graph};
use crate::reduction::{
    build_s_g, clique_gadget, make_schedule, parse_s_g, projected_len, recover_clique_order, thresholds,
    GadgetKind, LengthSchedule, DEFAULT_GROWTH, DEFAULT_MAX_LEN,
};
use crate::seq::{Seq, Symbol};
use crate::solvers::dyck::{dyck, DyckSeq, DyckSymbol};
use crate::solvers::lcs::lcs_len_quadratic;
use crate::solvers::{
    dyck_edit_bruteforce, dyck_edit_distance, lcs_delta, lcs_delta_bitparallel, min_alignment_cost, rna_fold,
    rna_fold_bruteforce, rna_score,
};

/// Version of the JSON report layout.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Folding and Dyck solvers against exhaustive search.
    Oracles,
    /// `RNA(X ∘ p(Y^R)) = LCS(X, Y)`.
    LcsEmbedding,
    /// Alignment gadget value between the two alignment optima.
    Gadget,
    /// Edge test through `δ_LCS(LG(u), NG(v)) = c0`.
    Edges,
    /// `2k`-clique test through `δ_LCS(CLG(t1), CNG(t2)) = c1`.
    CliquePairs,
    /// Folding scores of single and paired clique gadgets.
    ClosedForms,
    /// Dyck distance of the mapped string against the folding score.
    DyckIdentity,
    /// `q = 3 c1` against exhaustive `3k`-clique search.
    Thresholds,
    /// Length, runs, parsing and determinism of `S_G`.
    Structure,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Oracles,
        Suite::LcsEmbedding,
        Suite::Gadget,
        Suite::Edges,
        Suite::CliquePairs,
        Suite::ClosedForms,
        Suite::DyckIdentity,
        Suite::Thresholds,
        Suite::Structure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracles => "oracles",
            Suite::LcsEmbedding => "lcs-embedding",
            Suite::Gadget => "gadget",
            Suite::Edges => "edges",
            Suite::CliquePairs => "clique-pairs",
            Suite::ClosedForms => "closed-forms",
            Suite::DyckIdentity => "dyck-identity",
            Suite::Thresholds => "thresholds",
            Suite::Structure => "structure",
        }
    }

    /// Trials used when none are requested.
    pub fn default_trials(self) -> usize {
        match self {
            Suite::Oracles => 2000,
            Suite::LcsEmbedding => 500,
            Suite::Gadget => 500,
            Suite::Edges => 50,
            Suite::CliquePairs => 20,
            Suite::ClosedForms => 60,
            Suite::DyckIdentity => 200,
            Suite::Thresholds => 30,
            Suite::Structure => 12,
        }
    }

    fn tag(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    pub seed: u64,
    /// `None` uses [`Suite::default_trials`].
    pub trials: Option<usize>,
    /// Gadget run lengths for the `gadget` suite; shrink them to see it fail.
    pub gadget: GadgetParams,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0, trials: None, gadget: GadgetParams::STANDARD }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseFailure {
    pub case: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<CaseFailure>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

type Outcome = std::result::Result<(), String>;

/// Runs `trials` cases, each with its own generator, and collects failures in case order.
fn run_cases(suite: Suite, opts: &SuiteOptions, cases: usize, case: impl Fn(usize, &mut ChaCha8Rng) -> Outcome + Sync) -> SuiteReport {
    let trials = opts.trials.unwrap_or(suite.default_trials());
    let outcomes: Vec<Outcome> = (0..cases)
        .into_par_iter()
        .map(|i| {
            let mut rng = case_rng(opts.seed, suite, i);
            case(i, &mut rng)
        })
        .collect();
    let failures: Vec<CaseFailure> = outcomes
        .into_iter()
        .enumerate()
        .filter_map(|(case, o)| o.err().map(|detail| CaseFailure { case, detail }))
        .collect();
    SuiteReport {
        schema: SCHEMA,
        suite,
        seed: opts.seed,
        trials,
        cases,
        passed: cases - failures.len(),
        failures,
    }
}

pub fn case_rng(seed: u64, suite: Suite, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((suite.tag() << 48) | case as u64);
    rng
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> SuiteReport {
    let trials = opts.trials.unwrap_or(suite.default_trials());
    match suite {
        Suite::Oracles => oracles(opts, trials),
        Suite::LcsEmbedding => run_cases(suite, opts, trials, |_, rng| lcs_embedding_case(rng)),
        Suite::Gadget => {
            let params = opts.gadget;
            run_cases(suite, opts, trials, move |_, rng| gadget_case(rng, params))
        }
        Suite::Edges => run_cases(suite, opts, trials, |_, rng| edge_case(rng)),
        Suite::CliquePairs => run_cases(suite, opts, trials, |_, rng| clique_pair_case(rng)),
        Suite::ClosedForms => run_cases(suite, opts, trials, |_, rng| closed_form_case(rng)),
        Suite::DyckIdentity => {
            let fixed = DYCK_LITERALS.len();
            run_cases(suite, opts, fixed + trials, move |i, rng| {
                if i < fixed {
                    dyck_literal_case(i)
                } else {
                    dyck_identity_case(rng)
                }
            })
        }
        Suite::Thresholds => run_cases(suite, opts, trials, |_, rng| threshold_case(rng)),
        Suite::Structure => run_cases(suite, opts, trials, structure_case),
    }
}

// ---- generators ----

pub fn random_rna(rng: &mut impl Rng, n: usize) -> Seq {
    (0..n).map(|_| Symbol::from_code(rng.gen_range(0..4))).collect()
}

pub fn random_binary(rng: &mut impl Rng, n: usize) -> Seq {
    Seq::from_bits((0..n).map(|_| rng.gen_range(0..2)))
}

/// A uniformly placed binary string with `ones` ones.
pub fn random_of_type(rng: &mut impl Rng, len: usize, ones: usize) -> Seq {
    let mut bits: Vec<u8> = (0..len).map(|i| (i < ones) as u8).collect();
    bits.shuffle(rng);
    Seq::from_bits(bits)
}

pub fn random_dyck(rng: &mut impl Rng, n: usize, kinds: u8) -> DyckSeq {
    DyckSeq((0..n).map(|_| DyckSymbol { kind: rng.gen_range(0..kinds), primed: rng.gen_bool(0.5) }).collect())
}

/// `G(n, p)` with `n` and `p` drawn from the given ranges.
pub fn random_graph(rng: &mut impl Rng, n: std::ops::RangeInclusive<usize>, p: std::ops::Range<f64>) -> Graph {
    let n = rng.gen_range(n);
    let p = rng.gen_range(p);
    Graph::random(n, p, rng)
}

// ---- oracles ----

/// Longest strings enumerated exhaustively by the folding oracle suite.
pub const RNA_EXHAUSTIVE_LEN: usize = 7;

fn oracles(opts: &SuiteOptions, trials: usize) -> SuiteReport {
    let exhaustive = RNA_EXHAUSTIVE_LEN + 1;
    let mut report = run_cases(Suite::Oracles, opts, exhaustive + 2 * trials, move |i, rng| {
        if i < exhaustive {
            rna_exhaustive_case(i)
        } else if i < exhaustive + trials {
            let n = rng.gen_range(0..=12);
            rna_oracle_case(&random_rna(rng, n))
        } else {
            let n = rng.gen_range(0..=10);
            dyck_oracle_case(&random_dyck(rng, n, 4))
        }
    });
    report.trials = trials;
    report
}

/// Every string of length `n` over the four folding symbols.
pub fn rna_exhaustive_case(n: usize) -> Outcome {
    for mut code in 0..4usize.pow(n as u32) {
        let s: Seq = (0..n)
            .map(|_| {
                let sym = Symbol::from_code((code % 4) as u8);
                code /= 4;
                sym
            })
            .collect();
        rna_oracle_case(&s)?;
    }
    Ok(())
}

pub fn rna_oracle_case(s: &Seq) -> Outcome {
    let (score, folding) = rna_fold(s);
    let brute = rna_fold_bruteforce(s).map_err(|e| e.to_string())?;
    if score != brute {
        return Err(format!("RNA({}) = {score}, exhaustive search gives {brute}", s.to_digit_string()));
    }
    folding.validate(s).map_err(|e| format!("{}: invalid witness: {e}", s.to_digit_string()))?;
    if folding.len() != score {
        return Err(format!("{}: witness has {} pairs, score {score}", s.to_digit_string(), folding.len()));
    }
    Ok(())
}

pub fn dyck_oracle_case(s: &DyckSeq) -> Outcome {
    let sol = dyck_edit_distance(s);
    let brute = dyck_edit_bruteforce(s).map_err(|e| e.to_string())?;
    if sol.cost != brute {
        return Err(format!("Dyck({s}) = {}, exhaustive search gives {brute}", sol.cost));
    }
    sol.validate(s).map_err(|e| format!("{s}: invalid witness: {e}"))
}

// ---- LCS ----

pub fn lcs_embedding_case(rng: &mut impl Rng) -> Outcome {
    let (a, b) = (rng.gen_range(0..=150), rng.gen_range(0..=150));
    let (x, y) = (random_binary(rng, a), random_binary(rng, b));
    let lcs = lcs_len_quadratic(&x.digits(), &y.digits());
    let folded = x.concat(&y.reverse().prime_map().map_err(|e| e.to_string())?);
    let rna = rna_score(&folded);
    if rna != lcs {
        return Err(format!("X = {}, Y = {}: RNA {rna}, LCS {lcs}", x.to_digit_string(), y.to_digit_string()));
    }
    let d = lcs_delta(&x, &y).map_err(|e| e.to_string())?;
    let bp = lcs_delta_bitparallel(&x, &y).map_err(|e| e.to_string())?;
    if d != a + b - 2 * lcs || bp != d {
        return Err(format!("X = {}, Y = {}: δ {d}, bit-parallel δ {bp}, LCS {lcs}", x.to_digit_string(), y.to_digit_string()));
    }
    Ok(())
}

// ---- alignment gadget ----

/// Where the gadget value fell relative to the two alignment optima.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sandwich {
    pub all: i64,
    /// `δ_LCS(S_X, S_Y) - C`; negative when a shrunk gadget breaks down.
    pub value: i64,
    pub structural: i64,
}

impl Sandwich {
    pub fn holds(&self) -> bool {
        self.all <= self.value && self.value <= self.structural
    }
}

pub fn gadget_sandwich(params: GadgetParams, xs: &[Seq], ys: &[Seq]) -> Result<Sandwich> {
    let (tx, ty) = (xs[0].seq_type(), ys[0].seq_type());
    let sx = params.ga_x(ys.len(), ty, xs)?;
    let sy = params.ga_y(xs.len(), tx, ys)?;
    let c = params.ga_constant(xs.len(), ys.len(), tx, ty)?;
    let d = lcs_delta_bitparallel(&sx, &sy)?;
    Ok(Sandwich {
        all: min_alignment_cost(xs, ys, false)? as i64,
        value: d as i64 - c as i64,
        structural: min_alignment_cost(xs, ys, true)? as i64,
    })
}

pub fn gadget_case(rng: &mut impl Rng, params: GadgetParams) -> Outcome {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=n);
    let xs = random_list(rng, n);
    let ys = random_list(rng, m);
    let show = |l: &[Seq]| l.iter().map(Seq::to_digit_string).collect::<Vec<_>>().join(",");
    let s = gadget_sandwich(params, &xs, &ys).map_err(|e| e.to_string())?;
    if !s.holds() {
        return Err(format!(
            "X = [{}], Y = [{}]: all {} <= value {} <= structural {} fails",
            show(&xs),
            show(&ys),
            s.all,
            s.value,
            s.structural
        ));
    }
    Ok(())
}

/// `count` strings of one random type with length at most 6.
fn random_list(rng: &mut impl Rng, count: usize) -> Vec<Seq> {
    let len = rng.gen_range(0..=6);
    let ones = rng.gen_range(0..=len);
    (0..count).map(|_| random_of_type(rng, len, ones)).collect()
}

// ---- clique encoding ----

pub fn edge_case(rng: &mut impl Rng) -> Outcome {
    let g = random_graph(rng, 2..=16, 0.1..0.9);
    let n = g.n();
    let c0 = edge_constant_c0(n).map_err(|e| e.to_string())?;
    let lg: Vec<Seq> = (0..n).map(|v| list_gadget(v, &g)).collect::<Result<_>>().map_err(|e| e.to_string())?;
    let ng: Vec<Seq> = (0..n).map(|v| node_gadget(v, n)).collect::<Result<_>>().map_err(|e| e.to_string())?;
    for u in 0..n {
        for v in 0..n {
            let d = lcs_delta_bitparallel(&lg[u], &ng[v]).map_err(|e| e.to_string())?;
            if (d == c0) != g.has_edge(u, v) {
                return Err(format!("graph {:?}: pair ({u}, {v}) has δ {d}, c0 {c0}", g.edges()));
            }
        }
    }
    Ok(())
}

pub fn clique_pair_case(rng: &mut impl Rng) -> Outcome {
    let g = random_graph(rng, 4..=8, 0.3..0.9);
    let enc = CliqueEncoding::new(&g, 2).map_err(|e| e.to_string())?;
    let (clg, cng) = enc.all_gadgets().map_err(|e| e.to_string())?;
    let cliques = enc.cliques();
    let pairs: Vec<(usize, usize)> = (0..cliques.len()).flat_map(|a| (0..cliques.len()).map(move |b| (a, b))).collect();
    pairs.into_par_iter().try_for_each(|(a, b)| {
        let d = lcs_delta_bitparallel(&clg[a], &cng[b]).map_err(|e| e.to_string())?;
        let joins = cliques[a].joins_to_clique(&cliques[b], &g);
        if (d == enc.c1()) != joins {
            return Err(format!(
                "graph {:?}: cliques {:?} and {:?} have δ {d}, c1 {}",
                g.edges(),
                cliques[a].vertices(),
                cliques[b].vertices(),
                enc.c1()
            ));
        }
        Ok(())
    })
}

// ---- reduction ----

/// The inequalities on `(counts, schedule)` under which the single and
/// paired clique gadget scores take their closed forms.
pub fn closed_form_conditions(c: &GadgetCounts, s: &LengthSchedule) -> Vec<(&'static str, bool)> {
    let [l0, l1, l2, _, l4] = s.ell;
    let m = 2 * l2 + c.clg1.min(c.cng1);
    vec![
        ("ℓ1 + clg0 < m", l1 + c.clg0 < m),
        ("ℓ1 + clg0 + clg1 + ℓ2 < m", l1 + c.clg0 + c.clg1 + l2 < m),
        // the pairing 0' -> 0 around the middle ones leaves CNG's ones free as well
        ("ℓ1 + clg0 + cng1 + ℓ2 < m", l1 + c.clg0 + c.cng1 + l2 < m),
        ("ℓ4 >= 2ℓ1 + clg0 + cng0", l4 >= 2 * l1 + c.clg0 + c.cng0),
        ("10(cng1 + 2clg0 + cng0) <= ℓ1", 10 * (c.cng1 + 2 * c.clg0 + c.cng0) <= l1),
        ("10(clg1 + clg0) <= ℓ1", 10 * (c.clg1 + c.clg0) <= l1),
        ("10 ℓ0 <= ℓ1", 10 * l0 <= l1),
        ("ℓ1 < ℓ2", l1 < l2),
    ]
}

/// Folding scores of `0^{ℓ4} CG_x` and of the three mixed pairs, next to
/// their closed forms and bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub alpha: (u64, u64),
    pub beta: (u64, u64),
    pub gamma: (u64, u64),
    /// `(score, bound)` with bounds scaled by 10 to stay integral.
    pub alpha_beta: (u64, u64),
    pub alpha_gamma: (u64, u64),
    pub beta_gamma: (u64, u64),
}

impl ClosedForms {
    pub fn holds(&self) -> bool {
        let eq = |p: (u64, u64)| p.0 == p.1;
        let le = |p: (u64, u64)| 10 * p.0 <= p.1;
        eq(self.alpha) && eq(self.beta) && eq(self.gamma) && le(self.alpha_beta) && le(self.alpha_gamma) && le(self.beta_gamma)
    }
}

pub fn closed_forms(s: &LengthSchedule, clg: &Seq, clg2: &Seq, cng: &Seq, cng2: &Seq) -> Result<ClosedForms> {
    let c = GadgetCounts::of(clg, cng);
    let [_, l1, l2, _, l4] = s.ell;
    let zeros = Seq::run(Symbol::Zero, usize::try_from(l4).map_err(|_| Error::Overflow("ℓ4"))?);
    let g = |kind, clg: &Seq, cng: &Seq| clique_gadget(kind, s, clg, cng).map(|x| zeros.concat(&x));
    let (a, b, gm) = (g(GadgetKind::Alpha, clg, cng)?, g(GadgetKind::Beta, clg, cng)?, g(GadgetKind::Gamma, clg, cng)?);
    let (b2, gm2) = (g(GadgetKind::Beta, clg2, cng2)?, g(GadgetKind::Gamma, clg2, cng2)?);
    let score = |x: &Seq| rna_score(x) as u64;
    Ok(ClosedForms {
        alpha: (score(&a), 2 * l2 + c.clg1.min(c.cng1)),
        beta: (score(&b), 2 * l1 + c.clg0 + c.cng0),
        gamma: (score(&gm), 0),
        alpha_beta: (score(&a.concat(&b2)), 31 * l1 + 20 * l2),
        alpha_gamma: (score(&a.concat(&gm2)), 11 * l1 + 20 * l2),
        beta_gamma: (score(&b.concat(&gm2)), 11 * l1 + 40 * l2),
    })
}

/// A payload pair of one type and a schedule drawn so that every closed-form
/// condition holds, with random slack on top of the minimum.
pub fn closed_form_instance(rng: &mut impl Rng) -> (LengthSchedule, [Seq; 4]) {
    let (a, b) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
    let (a1, b1) = (rng.gen_range(0..=a), rng.gen_range(0..=b));
    let clg = random_of_type(rng, a, a1);
    let cng = random_of_type(rng, b, b1);
    let clg2 = random_of_type(rng, a, a1);
    let cng2 = random_of_type(rng, b, b1);
    let c = GadgetCounts::of(&clg, &cng);
    let l0 = c.total();
    let l1 = 10 * l0.max(c.cng1 + 2 * c.clg0 + c.cng0) + rng.gen_range(0..8);
    let l2 = l1 + c.clg1.max(c.cng1) + c.clg0 + 1 + rng.gen_range(0..8);
    let l4 = (2 * l1 + c.clg0 + c.cng0 + rng.gen_range(0..8)).max(l2);
    let sched = LengthSchedule::custom([l0, l1, l2, l2, l4]).expect("non-decreasing by construction");
    (sched, [clg, clg2, cng, cng2])
}

pub fn closed_form_case(rng: &mut impl Rng) -> Outcome {
    let (s, [clg, clg2, cng, cng2]) = closed_form_instance(rng);
    let c = GadgetCounts::of(&clg, &cng);
    for (name, ok) in closed_form_conditions(&c, &s) {
        if !ok {
            return Err(format!("generator produced {s} violating {name}"));
        }
    }
    let f = closed_forms(&s, &clg, &clg2, &cng, &cng2).map_err(|e| e.to_string())?;
    if !f.holds() {
        return Err(format!("{s}, CLG = {}, CNG = {}: {f:?}", clg.to_digit_string(), cng.to_digit_string()));
    }
    Ok(())
}

/// Threshold decision for `(G, k)`; `false` when `G` has no `k`-clique.
pub fn threshold_decision(g: &Graph, k: usize) -> Result<bool> {
    let enc = CliqueEncoding::new(g, k)?;
    if enc.cliques().is_empty() {
        return Ok(false);
    }
    let sched = make_schedule(&enc, DEFAULT_GROWTH)?;
    let r = thresholds(&enc, &sched)?;
    if r.q < 3 * r.c1 {
        return Err(Error::Layout { position: 0, message: format!("q = {} below 3 c1 = {}", r.q, 3 * r.c1) });
    }
    Ok(r.decision)
}

pub fn threshold_case(rng: &mut impl Rng) -> Outcome {
    let g = random_graph(rng, 3..=8, 0.4..1.0);
    for k in 1..=2 {
        let got = threshold_decision(&g, k).map_err(|e| format!("graph {:?}, k = {k}: {e}", g.edges()))?;
        let want = has_3k_clique_bruteforce(&g, k);
        if got != want {
            return Err(format!("graph {:?}, k = {k}: threshold says {got}, exhaustive search {want}", g.edges()));
        }
    }
    Ok(())
}

/// Maximal runs of `sym` with length at least `min`, as `(start, len)`.
pub fn long_runs(s: &Seq, sym: Symbol, min: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    let syms = s.symbols();
    while i < syms.len() {
        let start = i;
        while i < syms.len() && syms[i] == syms[start] {
            i += 1;
        }
        if syms[start] == sym && i - start >= min {
            out.push((start, i - start));
        }
    }
    out
}

pub fn structure_case(i: usize, rng: &mut impl Rng) -> Outcome {
    // sweep n = 2..=5 before drawing at random
    let n = if i < 4 { i + 2 } else { rng.gen_range(2..=5) };
    let g = Graph::random(n, rng.gen_range(0.3..1.0), rng);
    structure_check(&g).map_err(|e| format!("graph {:?}: {e}", g.edges()))
}

/// Structural invariants of `S_G` at growth 2, `k = 1`.
pub fn structure_check(g: &Graph) -> std::result::Result<(), String> {
    let enc = CliqueEncoding::new(g, 1).map_err(|e| e.to_string())?;
    let c = enc.cliques().len() as u64;
    let (clg, cng) = enc.all_gadgets().map_err(|e| e.to_string())?;
    let counted = GadgetCounts::of(&clg[0], &cng[0]);
    if Ok(counted) != enc.counts() {
        return Err(format!("counted {counted:?}, types give {:?}", enc.counts()));
    }
    let sched = make_schedule(&enc, 2).map_err(|e| e.to_string())?;
    let l0 = counted.total();
    let expected = [l0, 2 * l0, 4 * l0, 8 * l0, 2 * c * 8 * l0];
    if sched.ell != expected {
        return Err(format!("schedule {:?}, expected {expected:?}", sched.ell));
    }
    let s1 = build_s_g(&enc, &sched, DEFAULT_MAX_LEN).map_err(|e| e.to_string())?;
    let s2 = build_s_g(&enc, &sched, DEFAULT_MAX_LEN).map_err(|e| e.to_string())?;
    if s1 != s2 {
        return Err("two builds differ".into());
    }
    let gadget_total: u64 = (0..clg.len()).map(|t| 3 * (4 * sched.ell[2] + 2 * sched.ell[1]) + 3 * (clg[t].len() + cng[t].len()) as u64).sum();
    let formula = 3 * sched.ell[4] + 3 * (c + 1) * sched.ell[3] + gadget_total;
    if s1.len() as u64 != formula || s1.len() as u128 != projected_len(&sched, &counted, c as usize) {
        return Err(format!("length {}, formula {formula}", s1.len()));
    }
    let zero_runs = long_runs(&s1, Symbol::Zero, sched.ell[4] as usize);
    if zero_runs.len() != 3 || zero_runs.iter().any(|r| r.1 as u64 != sched.ell[4]) {
        return Err(format!("long 0 runs {zero_runs:?}"));
    }
    let sep_runs = long_runs(&s1, Symbol::ZeroPrime, sched.ell[3] as usize);
    if sep_runs.len() as u64 != 3 * (c + 1) || sep_runs.iter().any(|r| r.1 as u64 != sched.ell[3]) {
        return Err(format!("{} long 0' runs, expected {}", sep_runs.len(), 3 * (c + 1)));
    }
    let layout = parse_s_g(&s1, &sched, &counted).map_err(|e| e.to_string())?;
    let order = recover_clique_order(&layout, &enc).map_err(|e| e.to_string())?;
    if order != enc.cliques() {
        return Err("parsed clique order differs from enumeration order".into());
    }
    Ok(())
}

// ---- Dyck ----

/// Fixed Dyck distances: two worked examples, the smallest mapped instance, and trivial strings.
pub const DYCK_LITERALS: [(&str, usize); 5] =
    [("ababac'a'a'a'c'", 4), ("abbaac'a'a'a'c'", 3), ("a'a", 2), ("ab", 1), ("aa'", 0)];

fn dyck_literal_case(i: usize) -> Outcome {
    let (text, want) = DYCK_LITERALS[i];
    let got = dyck_edit_distance(&dyck(text)).cost;
    if got != want {
        return Err(format!("Dyck({text}) = {got}, expected {want}"));
    }
    Ok(())
}

pub fn dyck_identity_case(rng: &mut impl Rng) -> Outcome {
    let n = rng.gen_range(0..=120);
    let s = random_rna(rng, n);
    let id = check_dyck_identity(&s).map_err(|e| e.to_string())?;
    if !id.holds() {
        return Err(format!("S = {}: {id:?}", s.to_digit_string()));
    }
    let back = dyck_to_rna(&rna_to_dyck(&s)).map_err(|e| e.to_string())?;
    if back != s {
        return Err(format!("S = {}: decoding gives {}", s.to_digit_string(), back.to_digit_string()));
    }
    Ok(())
}
