use super::BasicSubset;
use crate::error::{Error, Result};
use crate::rootsys::PositiveRoot;
use std::collections::BTreeSet;

/// Roots `e_{i_1} - e_{i_2}, ..., e_{i_{r-1}} - e_{i_r}` along `i_1 < ... < i_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    indices: Vec<usize>,
}

impl Chain {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.len() < 2 || indices.windows(2).any(|w| w[0] >= w[1]) || indices[0] == 0 {
            return Err(Error::Internal(format!("{indices:?} is not a chain")));
        }
        Ok(Chain { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Number of roots, one less than the number of indices.
    pub fn len(&self) -> usize {
        self.indices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn roots(&self) -> impl Iterator<Item = PositiveRoot> + '_ {
        self.indices.windows(2).map(|w| PositiveRoot::Diff(w[0], w[1]))
    }
}

/// All chains contained in `D`.
pub fn chains(d: &BasicSubset) -> Vec<Chain> {
    let mut out = Vec::new();
    for (i, j) in d.pairs() {
        let mut indices = vec![i, j];
        out.push(Chain {
            indices: indices.clone(),
        });
        let mut tail = j;
        while let Some(next) = d.from_index(tail) {
            indices.push(next);
            tail = next;
            out.push(Chain {
                indices: indices.clone(),
            });
        }
    }
    out.sort();
    out
}

/// Pairs `(C, C')` of chains in `D` of equal length that intertwine, where
/// no member of `D` ends at `j_1` from above `i_1` and none leaves `i_r` past `j_r`.
pub fn special_pairs(d: &BasicSubset) -> Vec<(Chain, Chain)> {
    let all = chains(d);
    let mut out = Vec::new();
    for c in &all {
        for cp in &all {
            if c.len() == cp.len() && is_special(d, c, cp) {
                out.push((c.clone(), cp.clone()));
            }
        }
    }
    out
}

fn is_special(d: &BasicSubset, c: &Chain, cp: &Chain) -> bool {
    let (is, js) = (&c.indices, &cp.indices);
    let r = is.len();
    let intertwine = (0..r).all(|k| is[k] < js[k] && (k + 1 == r || js[k] < is[k + 1]));
    if !intertwine {
        return false;
    }
    if let Some(j0) = d.into_index(js[0]) {
        if is[0] >= j0 {
            return false;
        }
    }
    if let Some(next) = d.from_index(is[r - 1]) {
        if next >= js[r - 1] {
            return false;
        }
    }
    true
}

/// The derived set `D'`: roots `e_{i_1} - e_{j_1}` over all special pairs.
pub fn derived_set(d: &BasicSubset) -> BTreeSet<PositiveRoot> {
    special_pairs(d)
        .into_iter()
        .map(|(c, cp)| PositiveRoot::Diff(c.indices[0], cp.indices[0]))
        .collect()
}

/// Whether `O_D(phi)` is a single coadjoint orbit, i.e. `D'` is empty.
pub fn is_single_orbit(d: &BasicSubset) -> bool {
    special_pairs(d).is_empty()
}
