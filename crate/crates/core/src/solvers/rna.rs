//! Generalized RNA folding: the largest crossing-free set of complementary
//! pairs `(x, x')` or `(x', x)`.
//!
//! The solver fills the interval table
//!
//! ```text
//! best[i][j] = max(best[i][j-1], max_k best[i][k-1] + 1 + best[k+1][j-1])
//! ```
//!
//! over the `k` in `i..j` whose symbol complements `S[j]`, then walks it back
//! to a witness, preferring the smallest such `k`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{Seq, Symbol};

/// Longest input accepted by [`rna_fold_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 16;

/// A set of pairs `(i, j)`, `i < j`, 1-based, sorted by `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Folding {
    pub pairs: Vec<(usize, usize)>,
}

impl Folding {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks that every pair is complementary and that no two pairs cross.
    pub fn validate(&self, s: &Seq) -> std::result::Result<(), String> {
        let mut used = vec![false; s.len() + 1];
        for &(i, j) in &self.pairs {
            if !(1 <= i && i < j && j <= s.len()) {
                return Err(format!("pair ({i}, {j}) out of range"));
            }
            if !s[i - 1].complements(s[j - 1]) {
                return Err(format!("pair ({i}, {j}) joins {} and {}", s[i - 1].nucleotide(), s[j - 1].nucleotide()));
            }
            for e in [i, j] {
                if std::mem::replace(&mut used[e], true) {
                    return Err(format!("position {e} used twice"));
                }
            }
        }
        for (a, &(i1, j1)) in self.pairs.iter().enumerate() {
            for &(i2, j2) in &self.pairs[a + 1..] {
                if (i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1) {
                    return Err(format!("pairs ({i1}, {j1}) and ({i2}, {j2}) cross"));
                }
            }
        }
        Ok(())
    }
}

/// Exact `RNA(S)` with a witness, `O(n^3)` time and `O(n^2)` memory.
pub fn rna_fold(s: &Seq) -> (usize, Folding) {
    let n = s.len();
    if n < 2 {
        return (0, Folding::default());
    }
    let table = Table::fill(s.symbols());
    let score = table.get(0, n - 1) as usize;
    let folding = table.traceback(s.symbols());
    debug_assert_eq!(folding.len(), score);
    (score, folding)
}

/// `RNA(S)` without the witness.
pub fn rna_score(s: &Seq) -> usize {
    if s.len() < 2 {
        return 0;
    }
    Table::fill(s.symbols()).get(0, s.len() - 1) as usize
}

struct Table {
    n: usize,
    best: Vec<u32>,
    // positions of each symbol code, ascending
    positions: [Vec<usize>; 4],
}

impl Table {
    fn fill(s: &[Symbol]) -> Table {
        let n = s.len();
        let mut positions: [Vec<usize>; 4] = Default::default();
        for (i, sym) in s.iter().enumerate() {
            positions[sym.code() as usize].push(i);
        }
        let mut best = vec![0u32; n * n];
        // column j - 1 of the table, copied out for contiguous access
        let mut prev_col = vec![0u32; n + 1];
        let mut cur_col = vec![0u32; n + 1];
        for j in 0..n {
            let partners = &positions[complement_code(s[j])];
            let hi = partners.partition_point(|&k| k < j);
            cur_col[j] = 0;
            for i in (0..j).rev() {
                let row = &best[i * n..i * n + n];
                let mut v = row[j - 1];
                let lo = partners[..hi].partition_point(|&k| k < i);
                for &k in &partners[lo..hi] {
                    let left = if k > i { row[k - 1] } else { 0 };
                    let inner = if k + 1 < j { prev_col[k + 1] } else { 0 };
                    v = v.max(left + 1 + inner);
                }
                best[i * n + j] = v;
                cur_col[i] = v;
            }
            std::mem::swap(&mut prev_col, &mut cur_col);
        }
        Table { n, best, positions }
    }

    fn get(&self, i: usize, j: usize) -> u32 {
        if i >= j {
            0
        } else {
            self.best[i * self.n + j]
        }
    }

    fn traceback(&self, s: &[Symbol]) -> Folding {
        let mut pairs = Vec::new();
        let mut stack = vec![(0usize, self.n - 1)];
        while let Some((i, mut j)) = stack.pop() {
            while i < j {
                let target = self.get(i, j);
                if target == 0 {
                    break;
                }
                let partners = &self.positions[complement_code(s[j])];
                let lo = partners.partition_point(|&k| k < i);
                let hit = partners[lo..].iter().take_while(|&&k| k < j).copied().find(|&k| {
                    let left = if k > i { self.get(i, k - 1) } else { 0 };
                    let inner = if k + 1 < j { self.get(k + 1, j - 1) } else { 0 };
                    left + 1 + inner == target
                });
                match hit {
                    Some(k) => {
                        pairs.push((k + 1, j + 1));
                        if k + 1 < j {
                            stack.push((k + 1, j - 1));
                        }
                        if k == 0 {
                            break;
                        }
                        j = k - 1;
                    }
                    None => j -= 1,
                }
            }
        }
        pairs.sort_unstable();
        Folding { pairs }
    }
}

fn complement_code(sym: Symbol) -> usize {
    (sym.code() ^ 0b10) as usize
}

/// Exhaustive `RNA(S)`: the first symbol is either unmatched or paired with
/// each compatible later position. Rejects inputs longer than
/// [`BRUTEFORCE_LIMIT`].
pub fn rna_fold_bruteforce(s: &Seq) -> Result<usize> {
    if s.len() > BRUTEFORCE_LIMIT {
        return Err(Error::TooLong {
            what: "RNA brute force",
            len: s.len(),
            limit: BRUTEFORCE_LIMIT,
        });
    }
    fn go(s: &[Symbol]) -> usize {
        let Some((&first, rest)) = s.split_first() else {
            return 0;
        };
        let mut best = go(rest);
        for (j, &sym) in rest.iter().enumerate() {
            if first.complements(sym) {
                best = best.max(1 + go(&rest[..j]) + go(&rest[j + 1..]));
            }
        }
        best
    }
    Ok(go(s.symbols()))
}
