//! Alignment gadgets: collapse "how well can list `Y` be aligned into list `X`"
//! into a single LCS instance.
//!
//! For lists `X_1..X_n` of type `T_X` and `Y_1..Y_m` of type `T_Y` (`n >= m`)
//! the gadget produces binary strings `S_X`, `S_Y` and an integer `C` with
//!
//! ```text
//! min over all alignments δ(A)  <=  δ_LCS(S_X, S_Y) - C  <=  min over structural alignments δ(A)
//! ```
//!
//! where the types of `S_X`, `S_Y` and the value of `C` depend only on
//! `(n, m, T_X, T_Y)`.
//!
//! # Layout
//!
//! With `u = max(1, ℓ_X + ℓ_Y)`, `G = 1^g`, `H = 0^h` (`g`, `h` multiples of
//! `u`, see [`GadgetParams`]) and `β = 2h + #zeros(X_i)`:
//!
//! ```text
//! S_X = G H X_1 H G H X_2 H G ... G H X_n H G
//! S_Y = 0^{(n-m)β}  G H Y_1 H G ... G H Y_m H G  0^{(n-m)β}
//! ```
//!
//! `S_Y` has `m + 1` guards and `S_X` has `n + 1`. Aligning `Y_1..Y_m` to the
//! window `X_s..X_{s+m-1}` matches the guards around the window and sends the
//! other `n - m` fenced `X` blocks into the zero runs at the ends of `S_Y`,
//! where each of them matches exactly its `β` zeros no matter how many share
//! the run. A block skipped inside the window cannot reach those runs and
//! loses `β`; leaving a `Y` guard unmatched loses `g`. Both exceed what the
//! content can win back once `h >= u` and `g >= 2u`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{Seq, SeqType, Symbol};

/// Run lengths of the gadget, as multiples of `u = max(1, ℓ_X + ℓ_Y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetParams {
    /// `g / u`: one-runs separating consecutive blocks.
    pub guard: usize,
    /// `h / u`: zero fences around every content block.
    pub fence: usize,
}

impl Default for GadgetParams {
    fn default() -> Self {
        GadgetParams::STANDARD
    }
}

/// Run lengths resolved for one `(T_X, T_Y)` pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Runs {
    pub guard: usize,
    pub fence: usize,
}

impl GadgetParams {
    pub const STANDARD: GadgetParams = GadgetParams { guard: 3, fence: 1 };

    /// Size bound: `|S_X| + |S_Y| <= kappa · (n + m) · u`.
    pub fn kappa(&self) -> usize {
        2 * self.guard + 6 * self.fence + 3
    }

    pub fn runs(&self, t_x: SeqType, t_y: SeqType) -> Runs {
        let u = (t_x.ell + t_y.ell).max(1);
        Runs { guard: self.guard * u, fence: self.fence * u }
    }

    /// Zeros in one fenced `X` block: what an absorber can take from it.
    fn absorbed(r: Runs, t_x: SeqType) -> usize {
        2 * r.fence + t_x.zeros()
    }

    /// `GA_X^{m, T_Y}(X_1..X_n)`.
    pub fn ga_x(&self, m: usize, t_y: SeqType, xs: &[Seq]) -> Result<Seq> {
        let t_x = common_type(xs)?;
        check_sizes(xs.len(), m)?;
        let r = self.runs(t_x, t_y);
        let n = xs.len();
        let mut out = Seq::with_capacity((n + 1) * r.guard + n * (2 * r.fence + t_x.ell));
        out.push_run(Symbol::One, r.guard);
        for x in xs {
            push_block(&mut out, x, r.fence);
            out.push_run(Symbol::One, r.guard);
        }
        Ok(out)
    }

    /// `GA_Y^{n, T_X}(Y_1..Y_m)`.
    pub fn ga_y(&self, n: usize, t_x: SeqType, ys: &[Seq]) -> Result<Seq> {
        let t_y = common_type(ys)?;
        let m = ys.len();
        check_sizes(n, m)?;
        let r = self.runs(t_x, t_y);
        let absorber = (n - m) * Self::absorbed(r, t_x);
        let mut out =
            Seq::with_capacity(2 * absorber + (m + 1) * r.guard + m * (2 * r.fence + t_y.ell));
        out.push_run(Symbol::Zero, absorber);
        out.push_run(Symbol::One, r.guard);
        for y in ys {
            push_block(&mut out, y, r.fence);
            out.push_run(Symbol::One, r.guard);
        }
        out.push_run(Symbol::Zero, absorber);
        Ok(out)
    }

    /// The offset `C`, from the parameters alone.
    pub fn ga_constant(&self, n: usize, m: usize, t_x: SeqType, t_y: SeqType) -> Result<usize> {
        check_sizes(n, m)?;
        let r = self.runs(t_x, t_y);
        // Every X block outside the window loses its guard and its ones.
        Ok((n - m) * (r.guard + 2 * r.fence + t_x.ell))
    }

    /// Types of `(S_X, S_Y)` for the given parameters.
    pub fn output_types(&self, n: usize, m: usize, t_x: SeqType, t_y: SeqType) -> Result<(SeqType, SeqType)> {
        check_sizes(n, m)?;
        let r = self.runs(t_x, t_y);
        let absorber = (n - m) * Self::absorbed(r, t_x);
        let sx = SeqType {
            ell: (n + 1) * r.guard + n * (2 * r.fence + t_x.ell),
            s: (n + 1) * r.guard + n * t_x.s,
        };
        let sy = SeqType {
            ell: 2 * absorber + (m + 1) * r.guard + m * (2 * r.fence + t_y.ell),
            s: (m + 1) * r.guard + m * t_y.s,
        };
        Ok((sx, sy))
    }
}

/// [`GadgetParams::ga_x`] with the standard parameters.
pub fn ga_x(m: usize, t_y: SeqType, xs: &[Seq]) -> Result<Seq> {
    GadgetParams::STANDARD.ga_x(m, t_y, xs)
}

/// [`GadgetParams::ga_y`] with the standard parameters.
pub fn ga_y(n: usize, t_x: SeqType, ys: &[Seq]) -> Result<Seq> {
    GadgetParams::STANDARD.ga_y(n, t_x, ys)
}

/// [`GadgetParams::ga_constant`] with the standard parameters.
pub fn ga_constant(n: usize, m: usize, t_x: SeqType, t_y: SeqType) -> Result<usize> {
    GadgetParams::STANDARD.ga_constant(n, m, t_x, t_y)
}

fn push_block(out: &mut Seq, content: &Seq, fence: usize) {
    out.push_run(Symbol::Zero, fence);
    out.extend_from(content);
    out.push_run(Symbol::Zero, fence);
}

fn check_sizes(n: usize, m: usize) -> Result<()> {
    if m == 0 || n < m {
        return Err(Error::TooFewSequences { n, m });
    }
    Ok(())
}

fn common_type(list: &[Seq]) -> Result<SeqType> {
    let first = list.first().ok_or(Error::TooFewSequences { n: 0, m: 1 })?;
    for s in list {
        s.ensure_binary()?;
    }
    let expected = first.seq_type();
    for (index, s) in list.iter().enumerate().skip(1) {
        let found = s.seq_type();
        if found != expected {
            return Err(Error::MixedTypes {
                index,
                expected: expected.to_string(),
                found: found.to_string(),
            });
        }
    }
    Ok(expected)
}
