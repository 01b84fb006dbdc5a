//! The folding instance `S_G` whose optimum reveals whether `G` has a
//! `3k`-clique.
//!
//! Every `k`-clique `t` contributes three clique gadgets built from
//! `CLG(t)`, `CNG(t)` and the length schedule `ℓ_0 < ... < ℓ_4`:
//!
//! ```text
//! CG_α(t) = 1'^{2ℓ2} p(CLG(t)^R) 0'^{ℓ1} 1^{ℓ2}   0^{ℓ1}  CNG(t)    1^{ℓ2}
//! CG_β(t) = 1'^{ℓ2}  p(CLG(t)^R) 0'^{ℓ1} 1'^{2ℓ2} 0'^{ℓ1} p(CNG(t)) 1'^{ℓ2}
//! CG_γ(t) = 1^{ℓ2}   CLG(t)^R    0^{ℓ1}  1^{ℓ2}   0^{ℓ1}  CNG(t)    1^{2ℓ2}
//! ```
//!
//! and the sequence is
//!
//! ```text
//! S_G = 0^{ℓ4} [0'^{ℓ3} ○_t (CG_α(t) 0'^{ℓ3})]
//!       0^{ℓ4} [0'^{ℓ3} ○_t (CG_β(t) 0'^{ℓ3})]
//!       0^{ℓ4} [0'^{ℓ3} ○_t (CG_γ(t) 0'^{ℓ3})]
//! ```
//!
//! With `growth >= 100`, `RNA(S_G) = m1 + m2`, where `m2` reaches its
//! largest possible value exactly when some triple of cliques is pairwise
//! joinable. [`thresholds`] evaluates that criterion directly from the
//! `|C_k| × |C_k|` LCS matrix; [`decide_3k_clique_via_rna`] folds `S_G`
//! itself, which only finishes on toy schedules.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clique_encoding::{CliqueEncoding, GadgetCounts};
use crate::error::{Error, Result};
use crate::graph::Clique;
use crate::seq::{Seq, Symbol};
use crate::solvers::lcs_delta_bitparallel;

pub const DEFAULT_GROWTH: u64 = 100;

/// Default cap on the number of symbols [`build_s_g`] will materialize.
pub const DEFAULT_MAX_LEN: usize = 1 << 28;

/// `ℓ_0..ℓ_4`. `growth` is `None` for hand-picked schedules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthSchedule {
    pub ell: [u64; 5],
    pub growth: Option<u64>,
}

impl LengthSchedule {
    /// `ℓ_i = growth · ℓ_{i-1}` for `i = 1, 2, 3` and `ℓ_4 = growth · cliques · ℓ_3`.
    pub fn ladder(ell0: u64, cliques: usize, growth: u64) -> Result<LengthSchedule> {
        if growth < 2 {
            return Err(Error::GrowthTooSmall { growth });
        }
        if ell0 % 2 == 1 {
            return Err(Error::OddEll0 { ell0 });
        }
        let mut ell = [ell0, 0, 0, 0, 0];
        for i in 1..4 {
            ell[i] = ell[i - 1].checked_mul(growth).ok_or(Error::Overflow("length schedule"))?;
        }
        ell[4] = (cliques as u64)
            .checked_mul(growth)
            .and_then(|x| x.checked_mul(ell[3]))
            .ok_or(Error::Overflow("length schedule"))?;
        LengthSchedule::check(ell)?;
        Ok(LengthSchedule { ell, growth: Some(growth) })
    }

    /// A schedule with arbitrary non-decreasing positive lengths, for
    /// experiments below the ladder's scale.
    pub fn custom(ell: [u64; 5]) -> Result<LengthSchedule> {
        LengthSchedule::check(ell)?;
        Ok(LengthSchedule { ell, growth: None })
    }

    fn check(ell: [u64; 5]) -> Result<()> {
        if ell[0] == 0 || ell.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BadSchedule(ell));
        }
        Ok(())
    }

    pub fn ell(&self, i: usize) -> u64 {
        self.ell[i]
    }

    fn run(&self, i: usize) -> Result<usize> {
        usize::try_from(self.ell[i]).map_err(|_| Error::Overflow("run length"))
    }
}

impl fmt::Display for LengthSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.ell;
        write!(f, "ell = ({a}, {b}, {c}, {d}, {e})")?;
        if let Some(g) = self.growth {
            write!(f, ", growth {g}")?;
        }
        Ok(())
    }
}

/// The ladder schedule of `(G, k)`, starting from `ℓ_0 = |CLG(t)| + |CNG(t)|`.
pub fn make_schedule(enc: &CliqueEncoding, growth: u64) -> Result<LengthSchedule> {
    if enc.cliques().is_empty() {
        return Err(Error::NoCliques { k: enc.k() });
    }
    LengthSchedule::ladder(enc.counts()?.total(), enc.cliques().len(), growth)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetKind {
    Alpha,
    Beta,
    Gamma,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 3] = [GadgetKind::Alpha, GadgetKind::Beta, GadgetKind::Gamma];
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetKind::Alpha => "alpha",
            GadgetKind::Beta => "beta",
            GadgetKind::Gamma => "gamma",
        })
    }
}

/// One run or payload of a clique gadget, in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Piece {
    Run(Symbol, u64),
    /// `CLG^R`, primed or not.
    ListRev(bool),
    /// `CNG`, primed or not.
    Node(bool),
}

fn pieces(kind: GadgetKind, sched: &LengthSchedule) -> [Piece; 7] {
    use Piece::*;
    use Symbol::*;
    let [_, l1, l2, _, _] = sched.ell;
    match kind {
        GadgetKind::Alpha => [
            Run(OnePrime, 2 * l2),
            ListRev(true),
            Run(ZeroPrime, l1),
            Run(One, l2),
            Run(Zero, l1),
            Node(false),
            Run(One, l2),
        ],
        GadgetKind::Beta => [
            Run(OnePrime, l2),
            ListRev(true),
            Run(ZeroPrime, l1),
            Run(OnePrime, 2 * l2),
            Run(ZeroPrime, l1),
            Node(true),
            Run(OnePrime, l2),
        ],
        GadgetKind::Gamma => [
            Run(One, l2),
            ListRev(false),
            Run(Zero, l1),
            Run(One, l2),
            Run(Zero, l1),
            Node(false),
            Run(One, 2 * l2),
        ],
    }
}

/// `CG_kind` around arbitrary binary payloads standing in for `CLG(t)` and `CNG(t)`.
pub fn clique_gadget(kind: GadgetKind, sched: &LengthSchedule, clg: &Seq, cng: &Seq) -> Result<Seq> {
    let mut out = Seq::new();
    push_clique_gadget(&mut out, kind, sched, clg, cng)?;
    Ok(out)
}

fn push_clique_gadget(
    out: &mut Seq,
    kind: GadgetKind,
    sched: &LengthSchedule,
    clg: &Seq,
    cng: &Seq,
) -> Result<()> {
    clg.ensure_binary()?;
    cng.ensure_binary()?;
    for piece in pieces(kind, sched) {
        match piece {
            Piece::Run(sym, len) => {
                out.push_run(sym, usize::try_from(len).map_err(|_| Error::Overflow("run length"))?)
            }
            Piece::ListRev(primed) => {
                let r = clg.reverse();
                out.extend_from(&if primed { r.prime_map()? } else { r });
            }
            Piece::Node(primed) => out.extend_from(&if primed { cng.prime_map()? } else { cng.clone() }),
        }
    }
    Ok(())
}

/// `|CG_x(t)| = 4ℓ_2 + 2ℓ_1 + |CLG| + |CNG|`, the same for every kind.
pub fn clique_gadget_len(sched: &LengthSchedule, counts: &GadgetCounts) -> u128 {
    4 * sched.ell[2] as u128 + 2 * sched.ell[1] as u128 + counts.total() as u128
}

/// `|S_G| = 3ℓ_4 + 3(|C_k| + 1)ℓ_3 + 3|C_k| · |CG|`.
pub fn projected_len(sched: &LengthSchedule, counts: &GadgetCounts, cliques: usize) -> u128 {
    let c = cliques as u128;
    3 * sched.ell[4] as u128 + 3 * (c + 1) * sched.ell[3] as u128 + 3 * c * clique_gadget_len(sched, counts)
}

/// One `(CLG(t), CNG(t))` pair, or an injected stand-in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Payload {
    pub clg: Seq,
    pub cng: Seq,
}

/// Checks that all payloads share one pair of types and returns their counts.
pub fn payload_counts(payloads: &[Payload]) -> Result<GadgetCounts> {
    let first = payloads.first().ok_or(Error::NoCliques { k: 0 })?;
    let counts = GadgetCounts::of(&first.clg, &first.cng);
    for (index, p) in payloads.iter().enumerate().skip(1) {
        let found = GadgetCounts::of(&p.clg, &p.cng);
        if found != counts {
            return Err(Error::MixedTypes {
                index,
                expected: format!("{counts:?}"),
                found: format!("{found:?}"),
            });
        }
    }
    Ok(counts)
}

/// `S_G` over explicit payloads, refusing to grow past `max_len` symbols.
pub fn build_s_g_from_payloads(payloads: &[Payload], sched: &LengthSchedule, max_len: usize) -> Result<Seq> {
    let counts = payload_counts(payloads)?;
    let needed = projected_len(sched, &counts, payloads.len());
    if needed > max_len as u128 {
        return Err(Error::InfeasibleScale { what: "S_G", needed, limit: max_len as u128 });
    }
    let (l3, l4) = (sched.run(3)?, sched.run(4)?);
    let mut out = Seq::with_capacity(needed as usize);
    for kind in GadgetKind::ALL {
        out.push_run(Symbol::Zero, l4);
        out.push_run(Symbol::ZeroPrime, l3);
        for p in payloads {
            push_clique_gadget(&mut out, kind, sched, &p.clg, &p.cng)?;
            out.push_run(Symbol::ZeroPrime, l3);
        }
    }
    debug_assert_eq!(out.len() as u128, needed);
    Ok(out)
}

/// The payloads of `(G, k)` in clique enumeration order.
pub fn clique_payloads(enc: &CliqueEncoding) -> Result<Vec<Payload>> {
    if enc.cliques().is_empty() {
        return Err(Error::NoCliques { k: enc.k() });
    }
    let (clg, cng) = enc.all_gadgets()?;
    Ok(clg.into_iter().zip(cng).map(|(clg, cng)| Payload { clg, cng }).collect())
}

pub fn build_s_g(enc: &CliqueEncoding, sched: &LengthSchedule, max_len: usize) -> Result<Seq> {
    if enc.cliques().is_empty() {
        return Err(Error::NoCliques { k: enc.k() });
    }
    let needed = projected_len(sched, &enc.counts()?, enc.cliques().len());
    if needed > max_len as u128 {
        return Err(Error::InfeasibleScale { what: "S_G", needed, limit: max_len as u128 });
    }
    build_s_g_from_payloads(&clique_payloads(enc)?, sched, max_len)
}

/// `S_G` split back into its three sections of payloads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SgLayout {
    pub alpha: Vec<Payload>,
    pub beta: Vec<Payload>,
    pub gamma: Vec<Payload>,
}

struct Cursor<'a> {
    s: &'a [Symbol],
    pos: usize,
}

impl Cursor<'_> {
    fn fail(&self, message: String) -> Error {
        Error::Layout { position: self.pos + 1, message }
    }

    fn run(&mut self, sym: Symbol, len: u64) -> Result<()> {
        let len = usize::try_from(len).map_err(|_| Error::Overflow("run length"))?;
        let end = self.pos.checked_add(len).filter(|&e| e <= self.s.len());
        match end {
            Some(end) if self.s[self.pos..end].iter().all(|&x| x == sym) => {
                self.pos = end;
                Ok(())
            }
            _ => Err(self.fail(format!("expected a run of {len} {}", sym.digit_str()))),
        }
    }

    fn take(&mut self, len: u64, primed: bool, ones: u64) -> Result<Seq> {
        let len = usize::try_from(len).map_err(|_| Error::Overflow("payload length"))?;
        if self.pos + len > self.s.len() {
            return Err(self.fail(format!("payload of {len} symbols runs past the end")));
        }
        let raw = Seq::from_symbols(self.s[self.pos..self.pos + len].to_vec());
        let plain = if primed { raw.unprime_map() } else { raw.ensure_binary().map(|_| raw) }
            .map_err(|e| self.fail(format!("payload has the wrong alphabet: {e}")))?;
        if plain.count(Symbol::One) as u64 != ones {
            return Err(self.fail(format!("payload should contain {ones} ones")));
        }
        self.pos += len;
        Ok(plain)
    }
}

/// Parses `S_G` given the schedule and payload counts it was built with,
/// checking every run exactly.
pub fn parse_s_g(s: &Seq, sched: &LengthSchedule, counts: &GadgetCounts) -> Result<SgLayout> {
    let [_, _, _, l3, l4] = sched.ell.map(|x| x as u128);
    let fixed = 3 * l4 + 3 * l3;
    let per = 3 * l3 + 3 * clique_gadget_len(sched, counts);
    let len = s.len() as u128;
    if len < fixed || !(len - fixed).is_multiple_of(per) || len == fixed {
        return Err(Error::Layout {
            position: s.len(),
            message: format!("length {len} does not fit the schedule and payload counts"),
        });
    }
    let cliques = ((len - fixed) / per) as usize;
    let mut cur = Cursor { s: s.symbols(), pos: 0 };
    let mut sections: Vec<Vec<Payload>> = Vec::with_capacity(3);
    for kind in GadgetKind::ALL {
        cur.run(Symbol::Zero, sched.ell[4])?;
        cur.run(Symbol::ZeroPrime, sched.ell[3])?;
        let mut section = Vec::with_capacity(cliques);
        for _ in 0..cliques {
            let (mut clg, mut cng) = (None, None);
            for piece in pieces(kind, sched) {
                match piece {
                    Piece::Run(sym, len) => cur.run(sym, len)?,
                    Piece::ListRev(primed) => {
                        clg = Some(cur.take(counts.clg_len(), primed, counts.clg1)?.reverse())
                    }
                    Piece::Node(primed) => cng = Some(cur.take(counts.cng_len(), primed, counts.cng1)?),
                }
            }
            section.push(Payload { clg: clg.expect("every kind has a list payload"), cng: cng.expect("and a node payload") });
            cur.run(Symbol::ZeroPrime, sched.ell[3])?;
        }
        sections.push(section);
    }
    debug_assert_eq!(cur.pos, s.len());
    let gamma = sections.pop().expect("three sections");
    let beta = sections.pop().expect("three sections");
    let alpha = sections.pop().expect("three sections");
    Ok(SgLayout { alpha, beta, gamma })
}

/// Maps the parsed payloads back to cliques of `enc`, checking that all three
/// sections list them in the same order.
pub fn recover_clique_order(layout: &SgLayout, enc: &CliqueEncoding) -> Result<Vec<Clique>> {
    let known = clique_payloads(enc)?;
    let mut order = Vec::with_capacity(layout.alpha.len());
    for (i, p) in layout.alpha.iter().enumerate() {
        let idx = known.iter().position(|q| q == p).ok_or_else(|| Error::Layout {
            position: 0,
            message: format!("gadget {} of the first section matches no clique", i + 1),
        })?;
        for (name, section) in [("second", &layout.beta), ("third", &layout.gamma)] {
            if section.get(i) != Some(p) {
                return Err(Error::Layout {
                    position: 0,
                    message: format!("gadget {} of the {name} section disagrees with the first", i + 1),
                });
            }
        }
        order.push(enc.cliques()[idx].clone());
    }
    Ok(order)
}

/// Both threshold terms and the clique criterion behind them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub schedule: LengthSchedule,
    pub counts: GadgetCounts,
    pub cliques: usize,
    pub c0: u64,
    pub c1: u64,
    /// `min D[a][b] + D[a][c] + D[b][c]` over ordered triples, `D[x][y] = δ_LCS(CLG(x), CNG(y))`.
    pub q: u64,
    /// Indices into the clique list of one minimizing triple.
    pub argmin: [usize; 3],
    pub m1: u128,
    pub m2: u128,
    /// `q == 3 c1`.
    pub decision: bool,
}

/// `m1 = 3(|C_k|+1)ℓ_3 + (|C_k|-1)(2ℓ_1 + 2ℓ_2 + min(ℓ_CLG,1, ℓ_CNG,1) + ℓ_CLG,0 + ℓ_CNG,0)`.
pub fn m1(sched: &LengthSchedule, counts: &GadgetCounts, cliques: usize) -> u128 {
    let [_, l1, l2, l3, _] = sched.ell.map(|x| x as u128);
    let c = cliques as u128;
    let blocked = 2 * l1 + 2 * l2 + counts.clg1.min(counts.cng1) as u128 + (counts.clg0 + counts.cng0) as u128;
    3 * (c + 1) * l3 + c.saturating_sub(1) * blocked
}

/// `m2 = 6ℓ_2 + 3ℓ_1 + (3ℓ_0 - q) / 2`. `q` always has the parity of `ℓ_0`.
pub fn m2(sched: &LengthSchedule, q: u64) -> Result<u128> {
    let [l0, l1, l2, _, _] = sched.ell.map(|x| x as u128);
    let slack = (3 * l0).checked_sub(q as u128).ok_or(Error::Overflow("m2"))?;
    if slack % 2 == 1 {
        return Err(Error::OddEll0 { ell0: sched.ell[0] });
    }
    Ok(6 * l2 + 3 * l1 + slack / 2)
}

/// `D[x][y] = δ_LCS(CLG(x), CNG(y))`, rows in parallel.
pub fn distance_matrix(payloads: &[Payload]) -> Result<Vec<Vec<u64>>> {
    payloads
        .par_iter()
        .map(|a| {
            payloads
                .iter()
                .map(|b| lcs_delta_bitparallel(&a.clg, &b.cng).map(|d| d as u64))
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

/// Smallest `D[a][b] + D[a][c] + D[b][c]` over ordered triples with repeats.
pub fn min_triple(d: &[Vec<u64>]) -> Option<(u64, [usize; 3])> {
    let c = d.len();
    let mut best: Option<(u64, [usize; 3])> = None;
    for a in 0..c {
        for b in 0..c {
            let ab = d[a][b];
            for g in 0..c {
                let v = ab + d[a][g] + d[b][g];
                if best.is_none_or(|(bv, _)| v < bv) {
                    best = Some((v, [a, b, g]));
                }
            }
        }
    }
    best
}

/// Threshold report over explicit payloads with a given `c1`.
pub fn thresholds_from_payloads(payloads: &[Payload], c0: u64, c1: u64, sched: &LengthSchedule) -> Result<ThresholdReport> {
    let counts = payload_counts(payloads)?;
    let d = distance_matrix(payloads)?;
    let (q, argmin) = min_triple(&d).ok_or(Error::NoCliques { k: 0 })?;
    Ok(ThresholdReport {
        schedule: *sched,
        counts,
        cliques: payloads.len(),
        c0,
        c1,
        q,
        argmin,
        m1: m1(sched, &counts, payloads.len()),
        m2: m2(sched, q)?,
        decision: q == 3 * c1,
    })
}

pub fn thresholds(enc: &CliqueEncoding, sched: &LengthSchedule) -> Result<ThresholdReport> {
    thresholds_from_payloads(&clique_payloads(enc)?, enc.c0() as u64, enc.c1() as u64, sched)
}

/// `m1 + 6ℓ_2 + 3ℓ_1 + (3ℓ_0 - 3c_1) / 2`: the value `RNA(S_G)` reaches exactly
/// when a `3k`-clique exists.
pub fn clique_target(sched: &LengthSchedule, counts: &GadgetCounts, cliques: usize, c1: u64) -> Result<u128> {
    Ok(m1(sched, counts, cliques) + m2(sched, 3 * c1)?)
}

/// Builds `S_G`, folds it with `solver` and compares against [`clique_target`].
/// Fails with [`Error::InfeasibleScale`] when `S_G` would exceed `max_len`.
pub fn decide_3k_clique_via_rna(
    enc: &CliqueEncoding,
    sched: &LengthSchedule,
    max_len: usize,
    solver: impl Fn(&Seq) -> usize,
) -> Result<bool> {
    let s = build_s_g(enc, sched, max_len)?;
    let target = clique_target(sched, &enc.counts()?, enc.cliques().len(), enc.c1() as u64)?;
    Ok(solver(&s) as u128 == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::seq::seq;
    use crate::solvers::rna_score;

    fn tiny() -> LengthSchedule {
        LengthSchedule::custom([2, 3, 5, 7, 11]).unwrap()
    }

    #[test]
    fn ladder_values() {
        let s = LengthSchedule::ladder(4, 3, 10).unwrap();
        assert_eq!(s.ell, [4, 40, 400, 4000, 120_000]);
        assert_eq!(LengthSchedule::ladder(4, 3, 1), Err(Error::GrowthTooSmall { growth: 1 }));
        assert_eq!(LengthSchedule::ladder(5, 3, 2), Err(Error::OddEll0 { ell0: 5 }));
        assert!(matches!(LengthSchedule::ladder(2, 1, u64::MAX), Err(Error::Overflow(_))));
        assert!(matches!(LengthSchedule::custom([3, 2, 5, 7, 9]), Err(Error::BadSchedule(_))));
    }

    #[test]
    fn gadget_layouts() {
        let (clg, cng) = (seq("01"), seq("110"));
        let s = tiny();
        let a = clique_gadget(GadgetKind::Alpha, &s, &clg, &cng).unwrap();
        let expected = ["1'".repeat(10), "1'0'".into(), "0'".repeat(3), "1".repeat(5), "000".into(), "110".into(), "1".repeat(5)];
        assert_eq!(a, seq(&expected.concat()));
        let b = clique_gadget(GadgetKind::Beta, &s, &clg, &cng).unwrap();
        assert!(b.iter().all(|x| x.is_primed()));
        let g = clique_gadget(GadgetKind::Gamma, &s, &clg, &cng).unwrap();
        assert!(g.is_binary());
        let counts = GadgetCounts::of(&clg, &cng);
        for x in [&a, &b, &g] {
            assert_eq!(x.len() as u128, clique_gadget_len(&s, &counts));
        }
    }

    #[test]
    fn s_g_round_trip() {
        let payloads = vec![
            Payload { clg: seq("01"), cng: seq("110") },
            Payload { clg: seq("10"), cng: seq("011") },
        ];
        let s = tiny();
        let sg = build_s_g_from_payloads(&payloads, &s, 10_000).unwrap();
        let counts = payload_counts(&payloads).unwrap();
        assert_eq!(sg.len() as u128, projected_len(&s, &counts, 2));
        let layout = parse_s_g(&sg, &s, &counts).unwrap();
        assert_eq!(layout.alpha, payloads);
        assert_eq!(layout.beta, payloads);
        assert_eq!(layout.gamma, payloads);
        let mut broken = sg.clone().into_symbols();
        broken[20] = Symbol::Zero;
        assert!(matches!(
            parse_s_g(&Seq::from_symbols(broken), &s, &counts),
            Err(Error::Layout { .. })
        ));
        assert!(matches!(
            build_s_g_from_payloads(&payloads, &s, 10),
            Err(Error::InfeasibleScale { .. })
        ));
    }

    #[test]
    fn mixed_payload_types_are_rejected() {
        let payloads = vec![
            Payload { clg: seq("01"), cng: seq("110") },
            Payload { clg: seq("11"), cng: seq("011") },
        ];
        assert!(matches!(payload_counts(&payloads), Err(Error::MixedTypes { index: 1, .. })));
    }

    #[test]
    fn min_triple_allows_repeats() {
        let d = vec![vec![0, 5], vec![5, 1]];
        assert_eq!(min_triple(&d), Some((0, [0, 0, 0])));
        let d = vec![vec![9, 1], vec![1, 9]];
        // (a, b, c) = (0, 1, ?) gives 1 + D[0][c] + D[1][c] >= 1 + 1 + 9
        assert_eq!(min_triple(&d).unwrap().0, 11);
    }

    #[test]
    fn target_equals_m1_plus_m2_at_equality() {
        let s = LengthSchedule::ladder(10, 4, 3).unwrap();
        let counts = GadgetCounts { cng0: 3, cng1: 2, clg0: 4, clg1: 1 };
        let c1 = 4;
        assert_eq!(clique_target(&s, &counts, 4, c1).unwrap(), m1(&s, &counts, 4) + m2(&s, 3 * c1).unwrap());
    }

    #[test]
    fn complete_graph_meets_the_threshold() {
        let enc = CliqueEncoding::new(&Graph::complete(6), 2).unwrap();
        let sched = make_schedule(&enc, DEFAULT_GROWTH).unwrap();
        let r = thresholds(&enc, &sched).unwrap();
        assert_eq!(r.q, 3 * r.c1);
        assert!(r.decision);
    }

    #[test]
    fn structure_of_a_small_s_g() {
        let g = Graph::complete(4);
        let enc = CliqueEncoding::new(&g, 1).unwrap();
        let sched = make_schedule(&enc, 2).unwrap();
        let sg = build_s_g(&enc, &sched, DEFAULT_MAX_LEN).unwrap();
        let counts = enc.counts().unwrap();
        assert_eq!(sg.len() as u128, projected_len(&sched, &counts, 4));
        let layout = parse_s_g(&sg, &sched, &counts).unwrap();
        assert_eq!(recover_clique_order(&layout, &enc).unwrap(), enc.cliques());
    }

    #[test]
    fn rna_decision_refuses_large_instances() {
        let enc = CliqueEncoding::new(&Graph::complete(4), 1).unwrap();
        let sched = make_schedule(&enc, DEFAULT_GROWTH).unwrap();
        let err = decide_3k_clique_via_rna(&enc, &sched, 1 << 20, rna_score).unwrap_err();
        assert!(matches!(err, Error::InfeasibleScale { .. }));
    }
}
