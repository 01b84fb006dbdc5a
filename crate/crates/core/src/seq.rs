//! Four-letter folding alphabet, sequences over it, and sequence types.
//!
//! Letters are the binary digits `0`, `1` and their primed partners `0'`, `1'`.
//! The external text form uses the RNA nucleotides with `0 = A`, `0' = U`,
//! `1 = C` and `1' = G`, so the complementary pairs are exactly `{A,U}` and
//! `{C,G}`. Parsing accepts either notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One letter of `{0, 1, 0', 1'}`, stored as a 2-bit code.
///
/// Bit 0 is the digit, bit 1 the prime flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[repr(u8)]
pub enum Symbol {
    Zero = 0b00,
    One = 0b01,
    ZeroPrime = 0b10,
    OnePrime = 0b11,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::Zero, Symbol::One, Symbol::ZeroPrime, Symbol::OnePrime];

    #[inline]
    pub fn code(self) -> u8 {
        self as u8
    }

    #[inline]
    pub fn from_code(code: u8) -> Symbol {
        match code & 0b11 {
            0b00 => Symbol::Zero,
            0b01 => Symbol::One,
            0b10 => Symbol::ZeroPrime,
            _ => Symbol::OnePrime,
        }
    }

    /// Binary digit carried by the letter (0 or 1), ignoring the prime.
    #[inline]
    pub fn digit(self) -> u8 {
        self.code() & 1
    }

    #[inline]
    pub fn is_primed(self) -> bool {
        self.code() & 0b10 != 0
    }

    /// `x -> x'`. `None` when the letter is already primed.
    #[inline]
    pub fn primed(self) -> Option<Symbol> {
        (!self.is_primed()).then(|| Symbol::from_code(self.code() | 0b10))
    }

    /// `x' -> x`. `None` when the letter is not primed.
    #[inline]
    pub fn unprimed(self) -> Option<Symbol> {
        self.is_primed().then(|| Symbol::from_code(self.code() & 0b01))
    }

    /// True when `{self, other}` is a foldable pair, i.e. `{x, x'}` in either order.
    #[inline]
    pub fn complements(self, other: Symbol) -> bool {
        self.code() ^ other.code() == 0b10
    }

    pub fn nucleotide(self) -> char {
        match self {
            Symbol::Zero => 'A',
            Symbol::One => 'C',
            Symbol::ZeroPrime => 'U',
            Symbol::OnePrime => 'G',
        }
    }

    pub fn from_nucleotide(c: char) -> Option<Symbol> {
        match c.to_ascii_uppercase() {
            'A' => Some(Symbol::Zero),
            'C' => Some(Symbol::One),
            'U' => Some(Symbol::ZeroPrime),
            'G' => Some(Symbol::OnePrime),
            _ => None,
        }
    }

    /// Digit notation: `0`, `1`, `0'`, `1'`.
    pub fn digit_str(self) -> &'static str {
        match self {
            Symbol::Zero => "0",
            Symbol::One => "1",
            Symbol::ZeroPrime => "0'",
            Symbol::OnePrime => "1'",
        }
    }
}

/// Sequence type: `(length, number of ones)`. Only meaningful for prime-free strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeqType {
    pub ell: usize,
    pub s: usize,
}

impl SeqType {
    pub fn new(ell: usize, s: usize) -> Result<SeqType> {
        if s > ell {
            return Err(Error::InvalidType { ell, s });
        }
        Ok(SeqType { ell, s })
    }

    pub fn zeros(&self) -> usize {
        self.ell - self.s
    }
}

impl fmt::Display for SeqType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.ell, self.s)
    }
}

/// Per-letter occurrence counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub zero: usize,
    pub one: usize,
    pub zero_prime: usize,
    pub one_prime: usize,
}

impl Counts {
    pub fn total(&self) -> usize {
        self.zero + self.one + self.zero_prime + self.one_prime
    }

    pub fn of(&self, sym: Symbol) -> usize {
        match sym {
            Symbol::Zero => self.zero,
            Symbol::One => self.one,
            Symbol::ZeroPrime => self.zero_prime,
            Symbol::OnePrime => self.one_prime,
        }
    }
}

/// A string over `{0, 1, 0', 1'}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seq(Vec<Symbol>);

impl Seq {
    pub fn new() -> Seq {
        Seq(Vec::new())
    }

    pub fn with_capacity(cap: usize) -> Seq {
        Seq(Vec::with_capacity(cap))
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Seq {
        Seq(symbols)
    }

    /// Binary string from digits; anything non-zero becomes `1`.
    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Seq {
        Seq(bits
            .into_iter()
            .map(|b| if b == 0 { Symbol::Zero } else { Symbol::One })
            .collect())
    }

    /// `sym` repeated `count` times.
    pub fn run(sym: Symbol, count: usize) -> Seq {
        Seq(vec![sym; count])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    pub fn push(&mut self, sym: Symbol) {
        self.0.push(sym);
    }

    pub fn push_run(&mut self, sym: Symbol, count: usize) {
        self.0.extend(std::iter::repeat_n(sym, count));
    }

    pub fn extend_from(&mut self, other: &Seq) {
        self.0.extend_from_slice(&other.0);
    }

    /// `X ∘ Y`.
    pub fn concat(&self, other: &Seq) -> Seq {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Seq(out)
    }

    /// `X^R`.
    pub fn reverse(&self) -> Seq {
        Seq(self.0.iter().rev().copied().collect())
    }

    /// `p(X)`: primes every letter. Fails on input that already contains a primed letter.
    pub fn prime_map(&self) -> Result<Seq> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, s)| s.primed().ok_or(Error::PrimedSymbol { position: i }))
            .collect::<Result<Vec<_>>>()
            .map(Seq)
    }

    /// Inverse of [`Seq::prime_map`].
    pub fn unprime_map(&self) -> Result<Seq> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, s)| s.unprimed().ok_or(Error::UnprimedSymbol { position: i }))
            .collect::<Result<Vec<_>>>()
            .map(Seq)
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for s in &self.0 {
            match s {
                Symbol::Zero => c.zero += 1,
                Symbol::One => c.one += 1,
                Symbol::ZeroPrime => c.zero_prime += 1,
                Symbol::OnePrime => c.one_prime += 1,
            }
        }
        c
    }

    pub fn count(&self, sym: Symbol) -> usize {
        self.0.iter().filter(|&&s| s == sym).count()
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|s| !s.is_primed())
    }

    /// Fails with the first primed position when the string is not over `{0, 1}`.
    pub fn ensure_binary(&self) -> Result<()> {
        match self.0.iter().position(|s| s.is_primed()) {
            Some(position) => Err(Error::PrimedSymbol { position }),
            None => Ok(()),
        }
    }

    /// `(|X|, Σ X[i])` with letters read as their digit value.
    pub fn seq_type(&self) -> SeqType {
        let s = self.0.iter().map(|s| s.digit() as usize).sum();
        SeqType { ell: self.len(), s }
    }

    /// Digits only, e.g. `[0, 1, 1]`. Primes are dropped.
    pub fn digits(&self) -> Vec<u8> {
        self.0.iter().map(|s| s.digit()).collect()
    }

    /// `0`/`1`/`0'`/`1'` notation.
    pub fn to_digit_string(&self) -> String {
        self.0.iter().map(|s| s.digit_str()).collect()
    }

    /// `A`/`C`/`G`/`U` notation.
    pub fn to_nucleotides(&self) -> String {
        self.0.iter().map(|s| s.nucleotide()).collect()
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_nucleotides())
    }
}

impl FromStr for Seq {
    type Err = Error;

    /// Accepts nucleotides (`ACGU`, any case) and digits with an optional
    /// trailing apostrophe (`0`, `1`, `0'`, `1'`), freely mixed.
    fn from_str(text: &str) -> Result<Seq> {
        let mut out = Vec::with_capacity(text.len());
        let mut chars = text.char_indices().peekable();
        while let Some((col, c)) = chars.next() {
            let sym = match c {
                '0' | '1' => {
                    let base = if c == '0' { Symbol::Zero } else { Symbol::One };
                    if matches!(chars.peek(), Some((_, '\''))) {
                        chars.next();
                        base.primed().unwrap()
                    } else {
                        base
                    }
                }
                other => Symbol::from_nucleotide(other).ok_or(Error::BadChar {
                    line: 1,
                    column: col + 1,
                    found: other,
                })?,
            };
            out.push(sym);
        }
        Ok(Seq(out))
    }
}

impl FromIterator<Symbol> for Seq {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Seq {
        Seq(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Seq {
    type Item = &'a Symbol;
    type IntoIter = std::slice::Iter<'a, Symbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl std::ops::Index<usize> for Seq {
    type Output = Symbol;

    fn index(&self, i: usize) -> &Symbol {
        &self.0[i]
    }
}

/// Shorthand for tests and examples: parses or panics.
pub fn seq(text: &str) -> Seq {
    text.parse().unwrap_or_else(|e| panic!("bad sequence literal {text:?}: {e}"))
}
