//! Binomial coefficients and lexicographic ranking of fixed-size subsets.

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// The `rank`-th (0-based) size-`k` subset of `{0, .., m-1}` in
/// lexicographic order, as ascending positions. Requires `rank < C(m, k)`.
pub fn unrank_combination(mut rank: u64, m: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        loop {
            let remaining = k - slot - 1;
            let block = binomial((m - next - 1) as u64, remaining as u64).unwrap_or(u64::MAX);
            if rank < block {
                break;
            }
            rank -= block;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// SplitMix64 finalizer; derives independent per-trial seeds.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
