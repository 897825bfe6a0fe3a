//! Basic subsets of `Phi+(A_{n-1})`, basic sums `O_D(phi)`, derived sets and
//! achievable orbit dimensions.
//!
//! A basic subset is a set `D` of roots `e_i - e_j` such that no difference
//! of two members is a positive root; concretely no two members share a
//! first index or a second index. Every functional lies in exactly one basic
//! sum `O_D(phi) = sum_{alpha in D} O_alpha(phi(alpha))`.

mod chains;
mod decompose;
mod dims;

pub use chains::{chains, derived_set, is_single_orbit, special_pairs, Chain};
pub use decompose::{decompose, ne_rank, DecompositionResult};
pub use dims::{
    achievable_dimensions, max_dimension, max_singular_witness, weyl_indices,
    witness_basic_subsets,
};

use crate::error::{Error, Result};
use crate::liealg::Functional;
use crate::rational::Rational;
use crate::rootsys::{PositiveRoot, RootSystem, RootSystemKind};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

/// A basic subset of `Phi+(A_{n-1})`; `n` counts indices, not the rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasicSubset {
    n: usize,
    roots: BTreeSet<PositiveRoot>,
}

impl BasicSubset {
    pub fn new(n: usize, roots: impl IntoIterator<Item = PositiveRoot>) -> Result<Self> {
        check_rank(n)?;
        let roots: BTreeSet<PositiveRoot> = roots.into_iter().collect();
        for &r in &roots {
            if !matches!(r, PositiveRoot::Diff(..)) || !r.is_valid(RootSystemKind::A, n) {
                return Err(Error::InvalidRoot {
                    kind: RootSystemKind::A,
                    n,
                    root: r,
                });
            }
        }
        let list: Vec<PositiveRoot> = roots.iter().copied().collect();
        if !is_basic(&list) {
            return Err(Error::NotBasic);
        }
        Ok(BasicSubset { n, roots })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(i, j)| PositiveRoot::Diff(i, j)))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> impl Iterator<Item = PositiveRoot> + '_ {
        self.roots.iter().copied()
    }

    /// Members as `(i, j)` index pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.roots.iter().map(|&r| ends(r))
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: PositiveRoot) -> bool {
        self.roots.contains(&root)
    }

    /// The member starting at index `i`, if any.
    pub fn from_index(&self, i: usize) -> Option<usize> {
        self.pairs().find(|&(a, _)| a == i).map(|(_, b)| b)
    }

    /// The member ending at index `j`, if any.
    pub fn into_index(&self, j: usize) -> Option<usize> {
        self.pairs().find(|&(_, b)| b == j).map(|(a, _)| a)
    }

    /// `S(D)`, the union of the singular sets of the members.
    pub fn singular_union(&self) -> BTreeSet<PositiveRoot> {
        self.pairs()
            .flat_map(|(i, j)| {
                (i + 1..j).flat_map(move |k| [PositiveRoot::Diff(i, k), PositiveRoot::Diff(k, j)])
            })
            .collect()
    }

    /// `s(D) = |S(D)|`.
    pub fn s(&self) -> usize {
        self.singular_union().len()
    }

    pub fn system(&self) -> Result<Arc<RootSystem>> {
        RootSystem::shared(RootSystemKind::A, self.n)
    }

    /// `sum_{alpha in D} phi(alpha) e_alpha^*`.
    pub fn basic_functional(&self, system: &Arc<RootSystem>, map: &BasicMap) -> Result<Functional> {
        if system.kind() != RootSystemKind::A {
            return Err(Error::WrongKind(system.kind()));
        }
        if system.rank() != self.n {
            return Err(Error::SystemMismatch);
        }
        map.check_domain(self)?;
        Functional::from_values(system.clone(), map.iter().map(|(r, v)| (r, v.clone())))
    }
}

impl fmt::Display for BasicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, r) in self.roots.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

/// `phi: D -> nonzero rationals`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasicMap {
    phi: BTreeMap<PositiveRoot, Rational>,
}

impl BasicMap {
    pub fn new(subset: &BasicSubset, phi: BTreeMap<PositiveRoot, Rational>) -> Result<Self> {
        let map = BasicMap { phi };
        map.check_domain(subset)?;
        Ok(map)
    }

    /// `phi = 1` on every member.
    pub fn ones(subset: &BasicSubset) -> Self {
        BasicMap {
            phi: subset.roots().map(|r| (r, Rational::from_integer(1.into()))).collect(),
        }
    }

    fn check_domain(&self, subset: &BasicSubset) -> Result<()> {
        if !self.phi.keys().copied().eq(subset.roots()) {
            return Err(Error::BasicMapDomain);
        }
        match self.phi.iter().find(|(_, v)| v.is_zero()) {
            Some((&r, _)) => Err(Error::ZeroBasicValue(r)),
            None => Ok(()),
        }
    }

    pub fn get(&self, root: PositiveRoot) -> Option<&Rational> {
        self.phi.get(&root)
    }

    pub fn iter(&self) -> impl Iterator<Item = (PositiveRoot, &Rational)> + '_ {
        self.phi.iter().map(|(&r, v)| (r, v))
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }
}

fn check_rank(n: usize) -> Result<()> {
    let min = RootSystemKind::A.min_rank();
    if n < min {
        return Err(Error::RankOutOfRange {
            kind: RootSystemKind::A,
            n,
            min,
        });
    }
    Ok(())
}

fn ends(root: PositiveRoot) -> (usize, usize) {
    match root {
        PositiveRoot::Diff(i, j) => (i, j),
        other => unreachable!("basic subsets hold type A roots only, found {other}"),
    }
}

/// The roots `alpha` with `f(e_alpha) != 0`.
pub fn support(f: &Functional) -> Result<BTreeSet<PositiveRoot>> {
    let kind = f.system().kind();
    if kind != RootSystemKind::A {
        return Err(Error::WrongKind(kind));
    }
    Ok(f.nonzero().map(|(r, _)| r).collect())
}

/// Whether `alpha - beta` avoids `Phi+(A)` for all members; any non-`e_i - e_j`
/// root makes the answer `false`.
pub fn is_basic(roots: &[PositiveRoot]) -> bool {
    let mut weights = Vec::with_capacity(roots.len());
    for &r in roots {
        match r {
            PositiveRoot::Diff(i, j) if i < j => weights.push((i, j)),
            _ => return false,
        }
    }
    weights.iter().all(|&a| {
        weights
            .iter()
            .all(|&b| !difference_is_positive_root(a, b))
    })
}

/// `(e_i - e_j) - (e_k - e_l)` as a sparse weight, tested against `e_a - e_b`, `a < b`.
fn difference_is_positive_root((i, j): (usize, usize), (k, l): (usize, usize)) -> bool {
    let mut w: BTreeMap<usize, i32> = BTreeMap::new();
    *w.entry(i).or_default() += 1;
    *w.entry(j).or_default() -= 1;
    *w.entry(k).or_default() -= 1;
    *w.entry(l).or_default() += 1;
    let nz: Vec<(usize, i32)> = w.into_iter().filter(|&(_, c)| c != 0).collect();
    matches!(nz.as_slice(), [(_, 1), (_, -1)])
}

/// Every basic subset of `Phi+(A_{n-1})` exactly once.
pub fn enumerate_basic_subsets(n: usize) -> Result<impl Iterator<Item = BasicSubset>> {
    check_rank(n)?;
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    let mut current = Vec::new();
    place_rooks(n, 1, &mut used, &mut current, &mut out);
    Ok(out.into_iter().map(move |pairs| BasicSubset {
        n,
        roots: pairs.into_iter().map(|(i, j)| PositiveRoot::Diff(i, j)).collect(),
    }))
}

fn place_rooks(
    n: usize,
    row: usize,
    used: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if row >= n {
        out.push(current.clone());
        return;
    }
    place_rooks(n, row + 1, used, current, out);
    for col in row + 1..=n {
        if used[col] {
            continue;
        }
        used[col] = true;
        current.push((row, col));
        place_rooks(n, row + 1, used, current, out);
        current.pop();
        used[col] = false;
    }
}
