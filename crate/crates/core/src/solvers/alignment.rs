//! Exhaustive optimum over alignments of two ordered lists of binary strings.
//!
//! An alignment is a set of index pairs increasing in both coordinates. Its
//! cost adds `δ_LCS` over the aligned pairs and charges every unaligned `Y`
//! with the largest pairwise distance. A structural alignment aligns every
//! `Y_j` to a contiguous window of `X`.

use crate::error::{Error, Result};
use crate::seq::Seq;
use crate::solvers::lcs::lcs_delta;

/// Hard limit for the exhaustive enumeration.
pub const MAX_ALIGNMENT_LIST: usize = 8;

/// Pairwise `δ_LCS` matrix, `d[i][j] = δ_LCS(X_i, Y_j)`.
pub fn distance_matrix(xs: &[Seq], ys: &[Seq]) -> Result<Vec<Vec<usize>>> {
    xs.iter()
        .map(|x| ys.iter().map(|y| lcs_delta(x, y)).collect())
        .collect()
}

/// Cost of a given alignment (pairs are 0-based).
pub fn alignment_cost(d: &[Vec<usize>], m: usize, pairs: &[(usize, usize)]) -> usize {
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    pairs.iter().map(|&(i, j)| d[i][j]).sum::<usize>() + (m - pairs.len()) * max
}

/// `min δ(A)` over all alignments, or over structural ones when `structural_only`.
pub fn min_alignment_cost(xs: &[Seq], ys: &[Seq], structural_only: bool) -> Result<usize> {
    let (n, m) = (xs.len(), ys.len());
    if n < m {
        return Err(Error::TooFewSequences { n, m });
    }
    if n > MAX_ALIGNMENT_LIST {
        return Err(Error::TooLong {
            what: "exhaustive alignment enumeration",
            len: n,
            limit: MAX_ALIGNMENT_LIST,
        });
    }
    let d = distance_matrix(xs, ys)?;
    Ok(if structural_only {
        min_structural(&d, n, m)
    } else {
        let mut best = usize::MAX;
        let mut pairs = Vec::with_capacity(m);
        enumerate(&d, n, m, 0, 0, &mut pairs, &mut best);
        best
    })
}

fn min_structural(d: &[Vec<usize>], n: usize, m: usize) -> usize {
    (0..=n - m)
        .map(|start| (0..m).map(|j| d[start + j][j]).sum())
        .min()
        .unwrap_or(0)
}

// Visits every set of increasing pairs whose X indices are >= `i` and Y indices >= `j`.
fn enumerate(
    d: &[Vec<usize>],
    n: usize,
    m: usize,
    i: usize,
    j: usize,
    pairs: &mut Vec<(usize, usize)>,
    best: &mut usize,
) {
    *best = (*best).min(alignment_cost(d, m, pairs));
    for ni in i..n {
        for nj in j..m {
            pairs.push((ni, nj));
            enumerate(d, n, m, ni + 1, nj + 1, pairs, best);
            pairs.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::seq;

    #[test]
    fn single_y_present_in_xs() {
        let xs = vec![seq("0101"), seq("0110"), seq("1001")];
        let ys = vec![seq("0110")];
        assert_eq!(min_alignment_cost(&xs, &ys, false).unwrap(), 0);
        assert_eq!(min_alignment_cost(&xs, &ys, true).unwrap(), 0);
    }

    #[test]
    fn diagonal_for_equal_lists() {
        let xs = vec![seq("01"), seq("0011"), seq("1")];
        assert_eq!(min_alignment_cost(&xs, &xs, true).unwrap(), 0);
        assert_eq!(min_alignment_cost(&xs, &xs, false).unwrap(), 0);
    }

    #[test]
    fn two_disjoint_candidates() {
        // δ(00, 01) = 2 and δ(11, 01) = 2
        let xs = vec![seq("00"), seq("11")];
        let ys = vec![seq("01")];
        assert_eq!(min_alignment_cost(&xs, &ys, false).unwrap(), 2);
        assert_eq!(min_alignment_cost(&xs, &ys, true).unwrap(), 2);
    }

    #[test]
    fn non_structural_can_be_cheaper() {
        // Y = (a, b) matches X_1 and X_3 exactly, but no window of length 2 does.
        let xs = vec![seq("0000"), seq("1111"), seq("0011")];
        let ys = vec![seq("0000"), seq("0011")];
        assert_eq!(min_alignment_cost(&xs, &ys, false).unwrap(), 0);
        assert!(min_alignment_cost(&xs, &ys, true).unwrap() > 0);
    }

    #[test]
    fn rejects_n_less_than_m() {
        let err = min_alignment_cost(&[seq("0")], &[seq("0"), seq("1")], false).unwrap_err();
        assert_eq!(err, Error::TooFewSequences { n: 1, m: 2 });
    }

    #[test]
    fn unaligned_penalty_is_the_maximum() {
        let d = vec![vec![1, 5], vec![3, 2]];
        assert_eq!(alignment_cost(&d, 2, &[]), 10);
        assert_eq!(alignment_cost(&d, 2, &[(0, 0)]), 6);
        assert_eq!(alignment_cost(&d, 2, &[(0, 0), (1, 1)]), 3);
    }
}
