//! Longest common subsequence over binary strings and the induced distance
//! `δ_LCS(X, Y) = |X| + |Y| - 2·LCS(X, Y)`.
//!
//! Two kernels are provided: the textbook quadratic table and a word-parallel
//! bit-vector kernel that processes 64 columns per machine word.

use crate::error::Result;
use crate::seq::Seq;

/// `δ_LCS` via the quadratic DP.
pub fn lcs_delta(x: &Seq, y: &Seq) -> Result<usize> {
    x.ensure_binary()?;
    y.ensure_binary()?;
    let l = lcs_len_quadratic(&x.digits(), &y.digits());
    Ok(x.len() + y.len() - 2 * l)
}

/// `δ_LCS` via the bit-parallel kernel.
pub fn lcs_delta_bitparallel(x: &Seq, y: &Seq) -> Result<usize> {
    x.ensure_binary()?;
    y.ensure_binary()?;
    let l = lcs_len_bitparallel(&x.digits(), &y.digits());
    Ok(x.len() + y.len() - 2 * l)
}

/// LCS length with a rolling row, `O(|a|·|b|)` time and `O(|b|)` space.
pub fn lcs_len_quadratic(a: &[u8], b: &[u8]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut prev = vec![0u32; b.len() + 1];
    let mut cur = vec![0u32; b.len() + 1];
    for &ca in a {
        for (j, &cb) in b.iter().enumerate() {
            cur[j + 1] = if ca == cb {
                prev[j] + 1
            } else {
                prev[j + 1].max(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()] as usize
}

/// One longest common subsequence as 1-based index pairs `(i, j)` with
/// `x[i] = y[j]`, increasing in both coordinates. `O(|x| |y|)` memory.
pub fn lcs_matching(x: &Seq, y: &Seq) -> Vec<(usize, usize)> {
    let (a, b) = (x.symbols(), y.symbols());
    let w = b.len() + 1;
    let mut t = vec![0u32; (a.len() + 1) * w];
    for i in (0..a.len()).rev() {
        for j in (0..b.len()).rev() {
            t[i * w + j] = if a[i] == b[j] {
                t[(i + 1) * w + j + 1] + 1
            } else {
                t[(i + 1) * w + j].max(t[i * w + j + 1])
            };
        }
    }
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            out.push((i + 1, j + 1));
            i += 1;
            j += 1;
        } else if t[(i + 1) * w + j] >= t[i * w + j + 1] {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

/// Bit-vector LCS length (Allison–Dix / Hyyrö row update).
///
/// `a` is packed into bit masks; every symbol of `b` updates the state
/// vector `V` with `V' = (V + (V & M)) | (V & !M)`. Zeros of `V` within the
/// first `|a|` bits count the LCS. Symbols are compared by equality of bytes,
/// so any alphabet with at most 256 letters works.
pub fn lcs_len_bitparallel(a: &[u8], b: &[u8]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    // keep the shorter string in the bit vector
    let (a, b) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let words = a.len().div_ceil(64);

    let mut alphabet: Vec<u8> = a.to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();
    let mut masks = vec![vec![0u64; words]; alphabet.len()];
    for (i, &c) in a.iter().enumerate() {
        let k = alphabet.binary_search(&c).unwrap();
        masks[k][i / 64] |= 1u64 << (i % 64);
    }

    let mut v = vec![u64::MAX; words];
    for &c in b {
        let Ok(k) = alphabet.binary_search(&c) else {
            continue;
        };
        let m = &masks[k];
        let mut carry = 0u64;
        for w in 0..words {
            let vw = v[w];
            let u = vw & m[w];
            let (s1, c1) = vw.overflowing_add(u);
            let (s2, c2) = s1.overflowing_add(carry);
            carry = (c1 | c2) as u64;
            v[w] = s2 | (vw & !m[w]);
        }
    }

    let full = a.len() / 64;
    let mut zeros: usize = v[..full].iter().map(|w| w.count_zeros() as usize).sum();
    let rem = a.len() % 64;
    if rem > 0 {
        let mask = (1u64 << rem) - 1;
        zeros += (!v[full] & mask).count_ones() as usize;
    }
    zeros
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::seq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matching_is_a_common_subsequence() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let (n, m) = (rng.gen_range(0..30), rng.gen_range(0..30));
            let x = Seq::from_bits((0..n).map(|_| rng.gen_range(0..2)));
            let y = Seq::from_bits((0..m).map(|_| rng.gen_range(0..2)));
            let pairs = lcs_matching(&x, &y);
            assert_eq!(pairs.len(), lcs_len_quadratic(&x.digits(), &y.digits()));
            assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1));
            assert!(pairs.iter().all(|&(i, j)| x[i - 1] == y[j - 1]));
        }
    }

    #[test]
    fn identity_is_zero() {
        let x = seq("0110101");
        assert_eq!(lcs_delta(&x, &x).unwrap(), 0);
        assert_eq!(lcs_delta_bitparallel(&x, &x).unwrap(), 0);
    }

    #[test]
    fn small_examples() {
        // LCS("0110", "010") = 3 ("010"), so δ = 4 + 3 - 6 = 1
        assert_eq!(lcs_delta(&seq("0110"), &seq("010")).unwrap(), 1);
        assert_eq!(lcs_delta(&seq("00"), &seq("11")).unwrap(), 4);
        assert_eq!(lcs_delta(&seq(""), &seq("101")).unwrap(), 3);
    }

    #[test]
    fn rejects_primed_letters() {
        assert!(lcs_delta(&seq("01'"), &seq("0")).is_err());
        assert!(lcs_delta_bitparallel(&seq("0"), &seq("0'")).is_err());
    }

    #[test]
    fn long_identity_bitparallel() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = Seq::from_bits((0..4096).map(|_| rng.gen_range(0..2u8)));
        assert_eq!(lcs_delta_bitparallel(&x, &x).unwrap(), 0);
    }

    #[test]
    fn alternating_blocks_agree() {
        let x = Seq::from_bits((0..2000).map(|i| (i % 2) as u8));
        let y = Seq::from_bits((0..2000).map(|i| ((i + 1) % 2) as u8));
        let slow = lcs_delta(&x, &y).unwrap();
        assert_eq!(lcs_delta_bitparallel(&x, &y).unwrap(), slow);
        // "01"^1000 vs "10"^1000 share "0101..." of length 1999
        assert_eq!(slow, 2);
    }

    #[test]
    fn bitparallel_matches_quadratic_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for trial in 0..300 {
            let la = rng.gen_range(0..300);
            let lb = rng.gen_range(0..300);
            let p = rng.gen_range(0.05..0.95);
            let a: Vec<u8> = (0..la).map(|_| rng.gen_bool(p) as u8).collect();
            let b: Vec<u8> = (0..lb).map(|_| rng.gen_bool(p) as u8).collect();
            assert_eq!(
                lcs_len_bitparallel(&a, &b),
                lcs_len_quadratic(&a, &b),
                "trial {trial}"
            );
        }
    }

    #[test]
    fn bitparallel_handles_larger_alphabets() {
        let a = b"ACGTTGCAAGT";
        let b = b"GTTACGCAT";
        assert_eq!(lcs_len_bitparallel(a, b), lcs_len_quadratic(a, b));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn bits(max: usize) -> impl Strategy<Value = Seq> {
            prop::collection::vec(0u8..2, 0..max).prop_map(Seq::from_bits)
        }

        proptest! {
            #[test]
            fn symmetric_and_bounded(x in bits(80), y in bits(80)) {
                let d = lcs_delta(&x, &y).unwrap();
                prop_assert_eq!(d, lcs_delta(&y, &x).unwrap());
                prop_assert!(d <= x.len() + y.len());
                prop_assert!(d >= x.len().abs_diff(y.len()));
                prop_assert_eq!(d % 2, (x.len() + y.len()) % 2);
            }

            #[test]
            fn kernels_agree(x in bits(200), y in bits(200)) {
                prop_assert_eq!(lcs_delta(&x, &y).unwrap(), lcs_delta_bitparallel(&x, &y).unwrap());
            }
        }
    }
}
