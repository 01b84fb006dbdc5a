//! Maps an RNA string to a Dyck string whose edit distance is determined by
//! the folding score:
//!
//! ```text
//! Dyck(map(S)) = |map(S)| / 2 - 2 · RNA(S)
//! ```
//!
//! Each symbol becomes a fixed block over the five bracket kinds `a..e`:
//!
//! | symbol | block       |
//! |--------|-------------|
//! | `0`    | `aeb'aeb'`  |
//! | `0'`   | `bba'a'`    |
//! | `1`    | `ced'ced'`  |
//! | `1'`   | `ddc'c'`    |
//!
//! The first letter of a block names it, so the map is a prefix code and
//! [`dyck_to_rna`] inverts it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{Seq, Symbol};
use crate::solvers::dyck::{dyck_cost, DyckSeq, DyckSymbol};
use crate::solvers::rna_score;

/// Longest RNA input [`check_dyck_identity`] accepts; the Dyck side is up to
/// six times longer and the solver is cubic.
pub const IDENTITY_LIMIT: usize = 400;

const A: u8 = 0;
const B: u8 = 1;
const C: u8 = 2;
const D: u8 = 3;
const E: u8 = 4;

fn block(sym: Symbol) -> &'static [DyckSymbol] {
    const fn o(k: u8) -> DyckSymbol {
        DyckSymbol { kind: k, primed: false }
    }
    const fn c(k: u8) -> DyckSymbol {
        DyckSymbol { kind: k, primed: true }
    }
    const ZERO: [DyckSymbol; 6] = [o(A), o(E), c(B), o(A), o(E), c(B)];
    const ZERO_P: [DyckSymbol; 4] = [o(B), o(B), c(A), c(A)];
    const ONE: [DyckSymbol; 6] = [o(C), o(E), c(D), o(C), o(E), c(D)];
    const ONE_P: [DyckSymbol; 4] = [o(D), o(D), c(C), c(C)];
    match sym {
        Symbol::Zero => &ZERO,
        Symbol::ZeroPrime => &ZERO_P,
        Symbol::One => &ONE,
        Symbol::OnePrime => &ONE_P,
    }
}

pub fn rna_to_dyck(s: &Seq) -> DyckSeq {
    DyckSeq(s.iter().flat_map(|&sym| block(sym).iter().copied()).collect())
}

/// Inverse of [`rna_to_dyck`]; fails on strings outside its image.
pub fn dyck_to_rna(d: &DyckSeq) -> Result<Seq> {
    let syms = d.symbols();
    let mut out = Seq::new();
    let mut i = 0;
    while i < syms.len() {
        let sym = match (syms[i].kind, syms[i].primed) {
            (A, false) => Symbol::Zero,
            (B, false) => Symbol::ZeroPrime,
            (C, false) => Symbol::One,
            (D, false) => Symbol::OnePrime,
            _ => return Err(not_an_image(i)),
        };
        let b = block(sym);
        if syms.len() < i + b.len() || &syms[i..i + b.len()] != b {
            return Err(not_an_image(i));
        }
        out.push(sym);
        i += b.len();
    }
    Ok(out)
}

fn not_an_image(i: usize) -> Error {
    Error::Parse {
        line: 1,
        message: format!("symbol {} does not start a block of the RNA map", i + 1),
    }
}

/// Both sides of the identity for one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyckIdentity {
    pub rna_len: usize,
    pub dyck_len: usize,
    pub rna: usize,
    pub dyck: usize,
    /// `dyck_len / 2 - 2 · rna`
    pub predicted: usize,
}

impl DyckIdentity {
    pub fn holds(&self) -> bool {
        self.dyck == self.predicted
    }
}

/// Solves both problems and reports the two sides of the identity.
pub fn check_dyck_identity(s: &Seq) -> Result<DyckIdentity> {
    if s.len() > IDENTITY_LIMIT {
        return Err(Error::TooLong { what: "Dyck identity check", len: s.len(), limit: IDENTITY_LIMIT });
    }
    let d = rna_to_dyck(s);
    let rna = rna_score(s);
    Ok(DyckIdentity {
        rna_len: s.len(),
        dyck_len: d.len(),
        rna,
        dyck: dyck_cost(&d),
        predicted: d.len() / 2 - 2 * rna,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::seq;
    use crate::solvers::dyck::dyck;

    #[test]
    fn blocks() {
        assert_eq!(rna_to_dyck(&seq("0")).to_string(), "aeb'aeb'");
        assert_eq!(rna_to_dyck(&seq("0'")).to_string(), "bba'a'");
        assert_eq!(rna_to_dyck(&seq("1")).to_string(), "ced'ced'");
        assert_eq!(rna_to_dyck(&seq("1'")).to_string(), "ddc'c'");
    }

    #[test]
    fn single_pair() {
        let id = check_dyck_identity(&seq("00'")).unwrap();
        assert_eq!((id.dyck_len, id.rna, id.dyck), (10, 1, 3));
        assert!(id.holds());
    }

    #[test]
    fn decode_round_trip() {
        let s = seq("01'0'1100'");
        assert_eq!(dyck_to_rna(&rna_to_dyck(&s)).unwrap(), s);
        assert!(dyck_to_rna(&dyck("aeb'")).is_err());
        assert!(dyck_to_rna(&dyck("e")).is_err());
        assert!(dyck_to_rna(&dyck("bba'b'")).is_err());
    }

    #[test]
    fn size_guard() {
        let s = Seq::run(Symbol::Zero, IDENTITY_LIMIT + 1);
        assert!(matches!(check_dyck_identity(&s), Err(Error::TooLong { .. })));
    }
}
