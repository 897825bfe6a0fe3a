use super::{BasicMap, BasicSubset};
use crate::error::{Error, Result};
use crate::liealg::Functional;
use crate::linalg;
use crate::rational::Rational;
use crate::rootsys::{PositiveRoot, RootSystemKind};
use num_traits::Zero;
use std::collections::BTreeMap;

/// The unique `(D, phi)` with `f` in `O_D(phi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub subset: BasicSubset,
    pub map: BasicMap,
}

/// `f` as the strictly upper triangular array `a[i][j] = f(e_{e_i - e_j})`, 1-based.
fn upper_array(f: &Functional) -> Vec<Vec<Rational>> {
    let n = f.system().rank();
    let mut a = vec![vec![Rational::zero(); n + 1]; n + 1];
    for (root, v) in f.nonzero() {
        if let PositiveRoot::Diff(i, j) = root {
            a[i][j] = v.clone();
        }
    }
    a
}

fn block(a: &[Vec<Rational>], rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>) -> Vec<Vec<Rational>> {
    rows.map(|r| cols.clone().map(|c| a[r][c].clone()).collect())
        .collect()
}

/// Ranks of the north-east blocks `rows 1..=i, cols j..=n`, indexed `[i][j]`
/// for `0 <= i <= n`, `1 <= j <= n + 1`; empty blocks have rank 0.
///
/// These are invariant under the coadjoint action, which only adds multiples
/// of lower rows to higher ones inside such a block, and of right columns to left ones.
pub fn ne_rank(f: &Functional) -> Result<Vec<Vec<usize>>> {
    let kind = f.system().kind();
    if kind != RootSystemKind::A {
        return Err(Error::WrongKind(kind));
    }
    let n = f.system().rank();
    let a = upper_array(f);
    let mut r = vec![vec![0; n + 2]; n + 1];
    for i in 1..=n {
        for j in (i + 1)..=n {
            r[i][j] = linalg::rank(&block(&a, 1..=i, j..=n));
        }
    }
    Ok(r)
}

/// Finds the basic sum containing a type A functional.
///
/// Pieces of `O_{e_a - e_b}(c)` are rank-one on the rectangle `a <= r < s <= b`
/// and equal `c` at `(a, b)`, so the north-east ranks count members of `D`
/// weakly north-east of each cell and `phi(e_a - e_b)` is the Schur complement
/// of the `(a, b)` entry against the block strictly north-east of it.
/// Results are checked for consistency; a failure is reported as
/// [`Error::DecompositionUnverified`].
pub fn decompose(f: &Functional) -> Result<DecompositionResult> {
    let r = ne_rank(f)?;
    let n = f.system().rank();
    let a = upper_array(f);
    let mut rooks = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let d = r[i][j] as i64 - r[i - 1][j] as i64 - r[i][j + 1] as i64 + r[i - 1][j + 1] as i64;
            match d {
                0 => {}
                1 => rooks.push((i, j)),
                _ => {
                    return Err(Error::DecompositionUnverified(format!(
                        "rank corner count {d} at e{i}-e{j}"
                    )))
                }
            }
        }
    }
    let subset = BasicSubset::from_pairs(n, &rooks).map_err(|e| {
        Error::DecompositionUnverified(format!("pivot set {rooks:?} is not basic: {e}"))
    })?;

    let mut phi = BTreeMap::new();
    for &(i, j) in &rooks {
        let value = schur_value(&a, n, i, j).ok_or_else(|| {
            Error::DecompositionUnverified(format!("no consistent value at e{i}-e{j}"))
        })?;
        if value.is_zero() {
            return Err(Error::DecompositionUnverified(format!(
                "zero value at e{i}-e{j}"
            )));
        }
        phi.insert(PositiveRoot::Diff(i, j), value);
    }
    let map = BasicMap::new(&subset, phi)?;

    for i in 1..=n {
        for j in (i + 1)..=n {
            let count = rooks.iter().filter(|&&(x, y)| x <= i && y >= j).count();
            if count != r[i][j] {
                return Err(Error::DecompositionUnverified(format!(
                    "rank at e{i}-e{j} is {} but {count} members lie north-east",
                    r[i][j]
                )));
            }
        }
    }
    if f.orbit_dimension() > subset.s() {
        return Err(Error::DecompositionUnverified(format!(
            "orbit dimension {} exceeds s(D) = {}",
            f.orbit_dimension(),
            subset.s()
        )));
    }
    Ok(DecompositionResult { subset, map })
}

/// `a[i][j] - a[i][>j] z` where `a[<i][>j] z = a[<i][j]`.
fn schur_value(a: &[Vec<Rational>], n: usize, i: usize, j: usize) -> Option<Rational> {
    if i == 1 || j == n {
        return Some(a[i][j].clone());
    }
    let inner = block(a, 1..=i - 1, j + 1..=n);
    let rhs: Vec<Rational> = (1..i).map(|r| a[r][j].clone()).collect();
    let z = linalg::solve(&inner, &rhs, n - j)?;
    let correction: Rational = (j + 1..=n).zip(&z).map(|(c, zc)| &a[i][c] * zc).sum();
    Some(&a[i][j] - correction)
}
