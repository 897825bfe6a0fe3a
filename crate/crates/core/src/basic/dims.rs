use super::{check_rank, BasicSubset};
use crate::error::Result;

/// Largest orbit dimension in `(A_{n-1}^+)^*`.
pub fn max_dimension(n: usize) -> Result<usize> {
    check_rank(n)?;
    Ok(if n.is_multiple_of(2) { (n - 2) * n / 2 } else { (n - 1) * (n - 1) / 2 })
}

/// `0, 2, ..., max_dimension(n)`.
pub fn achievable_dimensions(n: usize) -> Result<Vec<usize>> {
    Ok((0..=max_dimension(n)?).step_by(2).collect())
}

/// Weyl algebra indices `m` with `2m` an achievable dimension.
pub fn weyl_indices(n: usize) -> Result<Vec<usize>> {
    Ok((0..=max_dimension(n)? / 2).collect())
}

/// The single root `D_r` of the midpoint-outward family, `0 <= r <= n - 2`.
fn spiral_root(n: usize, r: usize) -> (usize, usize) {
    let a = n.div_ceil(2);
    let (mut i, mut j) = (a, a + 1);
    let mut right = n.is_multiple_of(2);
    for _ in 0..r {
        if right {
            j += 1;
        } else {
            i -= 1;
        }
        right = !right;
    }
    (i, j)
}

fn witness_pairs(n: usize, m: usize) -> Vec<(usize, usize)> {
    if m + 2 <= n {
        return vec![spiral_root(n, m)];
    }
    let mut inner: Vec<(usize, usize)> = witness_pairs(n - 2, m - (n - 2))
        .into_iter()
        .map(|(i, j)| (i + 1, j + 1))
        .collect();
    inner.push((1, n));
    inner
}

/// For each `m`, a basic subset with empty derived set and `s = 2m`.
pub fn witness_basic_subsets(n: usize) -> Result<Vec<(usize, BasicSubset)>> {
    let top = max_dimension(n)? / 2;
    (0..=top)
        .map(|m| Ok((m, BasicSubset::from_pairs(n, &witness_pairs(n, m))?)))
        .collect()
}

/// `{e_1 - e_n, e_2 - e_{n-1}, ...}` down to the middle.
pub fn max_singular_witness(n: usize) -> Result<BasicSubset> {
    check_rank(n)?;
    let pairs: Vec<(usize, usize)> = (1..=n / 2).map(|k| (k, n + 1 - k)).collect();
    BasicSubset::from_pairs(n, &pairs)
}
