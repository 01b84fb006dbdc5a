//! Dyck edit distance in its matching formulation.
//!
//! A solution is a crossing-free set of pairs split into matched pairs
//! `(x, x')` (free) and substituted pairs (cost 1 each), plus deleted
//! positions (cost 1 each). A substituted pair may not have the form
//! `(y', x)`: an opener after a closer cannot be repaired by one substitution.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of bracket types, written `a` to `p`.
pub const MAX_KINDS: u8 = 16;

/// Longest input accepted by [`dyck_edit_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 12;

/// One bracket: an opener `x` or a closer `x'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyckSymbol {
    pub kind: u8,
    pub primed: bool,
}

impl DyckSymbol {
    pub fn open(kind: u8) -> DyckSymbol {
        assert!(kind < MAX_KINDS);
        DyckSymbol { kind, primed: false }
    }

    pub fn close(kind: u8) -> DyckSymbol {
        assert!(kind < MAX_KINDS);
        DyckSymbol { kind, primed: true }
    }

    pub fn letter(self) -> char {
        (b'a' + self.kind) as char
    }
}

impl fmt::Display for DyckSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())?;
        if self.primed {
            write!(f, "'")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyckSeq(pub Vec<DyckSymbol>);

impl DyckSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[DyckSymbol] {
        &self.0
    }
}

impl fmt::Display for DyckSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

impl FromStr for DyckSeq {
    type Err = Error;

    /// Letters `a`..`p`, each optionally followed by `'`.
    fn from_str(text: &str) -> Result<DyckSeq> {
        let mut out = Vec::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            match c {
                'a'..='p' => out.push(DyckSymbol::open(c as u8 - b'a')),
                '\'' => match out.last_mut() {
                    Some(last) if !last.primed && i > 0 => last.primed = true,
                    _ => {
                        return Err(Error::BadChar { line: 1, column: i + 1, found: c });
                    }
                },
                _ => return Err(Error::BadChar { line: 1, column: i + 1, found: c }),
            }
        }
        Ok(DyckSeq(out))
    }
}

/// Parse-or-panic helper for literals in tests and examples.
pub fn dyck(text: &str) -> DyckSeq {
    text.parse().unwrap_or_else(|e| panic!("bad Dyck literal {text:?}: {e}"))
}

/// Cost of pairing `x` (left) with `y` (right), `None` when forbidden.
pub fn pair_cost(x: DyckSymbol, y: DyckSymbol) -> Option<u32> {
    match (x.primed, y.primed) {
        (false, true) if x.kind == y.kind => Some(0),
        (true, false) => None,
        _ => Some(1),
    }
}

/// A witness: 1-based positions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyckSolution {
    pub matched: Vec<(usize, usize)>,
    pub substituted: Vec<(usize, usize)>,
    pub deleted: Vec<usize>,
    pub cost: usize,
}

impl DyckSolution {
    /// Checks the partition, the pair forms, crossing-freeness and the cost.
    pub fn validate(&self, s: &DyckSeq) -> std::result::Result<(), String> {
        let n = s.len();
        let mut seen = vec![false; n + 1];
        let mut mark = |p: usize| -> std::result::Result<(), String> {
            if p == 0 || p > n {
                return Err(format!("position {p} out of range"));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(format!("position {p} used twice"));
            }
            Ok(())
        };
        for &(i, j) in self.matched.iter().chain(&self.substituted) {
            if i >= j {
                return Err(format!("pair ({i}, {j}) is not increasing"));
            }
            mark(i)?;
            mark(j)?;
        }
        for &p in &self.deleted {
            mark(p)?;
        }
        if let Some(p) = (1..=n).find(|&p| !seen[p]) {
            return Err(format!("position {p} is not covered"));
        }
        let sym = |p: usize| s.0[p - 1];
        for &(i, j) in &self.matched {
            if pair_cost(sym(i), sym(j)) != Some(0) {
                return Err(format!("matched pair ({i}, {j}) is not x x'"));
            }
        }
        for &(i, j) in &self.substituted {
            if pair_cost(sym(i), sym(j)).is_none() {
                return Err(format!("substituted pair ({i}, {j}) has the form y' x"));
            }
        }
        let all: Vec<_> = self.matched.iter().chain(&self.substituted).copied().collect();
        for (a, &(i1, j1)) in all.iter().enumerate() {
            for &(i2, j2) in &all[a + 1..] {
                if (i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1) {
                    return Err(format!("pairs ({i1}, {j1}) and ({i2}, {j2}) cross"));
                }
            }
        }
        if self.cost != self.substituted.len() + self.deleted.len() {
            return Err(format!(
                "cost {} differs from {} substitutions + {} deletions",
                self.cost,
                self.substituted.len(),
                self.deleted.len()
            ));
        }
        Ok(())
    }
}

const FORBIDDEN: u32 = u32::MAX / 4;

/// Exact Dyck edit distance with a witness, `O(n^3)` time and `O(n^2)` memory.
///
/// `D[i][j]` (inclusive interval) is the minimum of deleting `S[i]`, splitting
/// at any `k`, or pairing `S[i]` with `S[j]`.
pub fn dyck_edit_distance(s: &DyckSeq) -> DyckSolution {
    let n = s.len();
    if n == 0 {
        return DyckSolution::default();
    }
    let t = DyckTable::fill(s.symbols());
    let sol = t.traceback(s.symbols());
    debug_assert_eq!(sol.cost, t.get(0, n - 1) as usize);
    sol
}

/// Dyck edit distance without the witness.
pub fn dyck_cost(s: &DyckSeq) -> usize {
    if s.is_empty() {
        return 0;
    }
    DyckTable::fill(s.symbols()).get(0, s.len() - 1) as usize
}

struct DyckTable {
    n: usize,
    rows: Vec<u32>,
}

impl DyckTable {
    fn fill(s: &[DyckSymbol]) -> DyckTable {
        let n = s.len();
        let mut rows = vec![0u32; n * n];
        // transpose of `rows`, so both split operands are contiguous
        let mut cols = vec![0u32; n * n];
        for i in (0..n).rev() {
            rows[i * n + i] = 1;
            cols[i * n + i] = 1;
            for j in i + 1..n {
                let below = |a: usize, b: usize| if a > b { 0 } else { rows[a * n + b] };
                let mut v = below(i + 1, j) + 1;
                if let Some(c) = pair_cost(s[i], s[j]) {
                    v = v.min(c + below(i + 1, j - 1));
                }
                // D[i][k] for k in i..j sits in row i; D[k+1][j] in column j
                let row = &rows[i * n + i..i * n + j];
                let col = &cols[j * n + i + 1..j * n + j + 1];
                let split = row.iter().zip(col).map(|(a, b)| a + b).min().unwrap_or(FORBIDDEN);
                v = v.min(split);
                rows[i * n + j] = v;
                cols[j * n + i] = v;
            }
        }
        DyckTable { n, rows }
    }

    fn get(&self, i: usize, j: usize) -> u32 {
        if i > j {
            0
        } else {
            self.rows[i * self.n + j]
        }
    }

    fn traceback(&self, s: &[DyckSymbol]) -> DyckSolution {
        let mut sol = DyckSolution::default();
        let mut stack = vec![(0usize, self.n - 1)];
        while let Some((i, j)) = stack.pop() {
            if i > j {
                continue;
            }
            let v = self.get(i, j);
            if i == j {
                sol.deleted.push(i + 1);
                continue;
            }
            if let Some(c) = pair_cost(s[i], s[j]) {
                if c + self.get(i + 1, j - 1) == v {
                    if c == 0 {
                        sol.matched.push((i + 1, j + 1));
                    } else {
                        sol.substituted.push((i + 1, j + 1));
                    }
                    if i + 1 < j {
                        stack.push((i + 1, j - 1));
                    }
                    continue;
                }
            }
            if self.get(i + 1, j) + 1 == v {
                sol.deleted.push(i + 1);
                stack.push((i + 1, j));
                continue;
            }
            let k = (i..j)
                .find(|&k| self.get(i, k) + self.get(k + 1, j) == v)
                .expect("table value must be realized");
            stack.push((i, k));
            stack.push((k + 1, j));
        }
        sol.matched.sort_unstable();
        sol.substituted.sort_unstable();
        sol.deleted.sort_unstable();
        sol.cost = sol.substituted.len() + sol.deleted.len();
        sol
    }
}

/// Exhaustive Dyck edit distance over all crossing-free pairings: the first
/// position is deleted or paired with each later position it may pair with.
/// Rejects inputs longer than [`BRUTEFORCE_LIMIT`].
pub fn dyck_edit_bruteforce(s: &DyckSeq) -> Result<usize> {
    if s.len() > BRUTEFORCE_LIMIT {
        return Err(Error::TooLong {
            what: "Dyck brute force",
            len: s.len(),
            limit: BRUTEFORCE_LIMIT,
        });
    }
    fn go(s: &[DyckSymbol]) -> usize {
        let Some((&first, rest)) = s.split_first() else {
            return 0;
        };
        let mut best = 1 + go(rest);
        for (j, &y) in rest.iter().enumerate() {
            if let Some(c) = pair_cost(first, y) {
                best = best.min(c as usize + go(&rest[..j]) + go(&rest[j + 1..]));
            }
        }
        best
    }
    Ok(go(s.symbols()))
}
