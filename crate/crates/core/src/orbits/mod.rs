//! Singular and regular root sets, and the defining-equation charts of the
//! elementary coadjoint orbits `O_alpha(c)`.
//!
//! For a positive root `alpha`, the singular set `S(alpha)` is the union of
//! all pairs of positive roots summing to `alpha`; the regular set `R(alpha)`
//! is its complement. The orbit through `c e_alpha^*` has dimension
//! `|S(alpha)|`: its points take arbitrary values on `S(alpha)` and are
//! determined on `R(alpha)` by polynomial equations (see [`OrbitChart`]).

mod chart;
pub mod poly;

pub use chart::{
    chart_point, construct_group_word, contains, orbit_chart, orbit_chart_with, OrbitChart,
    SignConvention, SumSignRule,
};
pub use poly::{Monomial, Polynomial, Style};

use crate::error::{Error, Result};
use crate::rootsys::{PositiveRoot, RootSystem, RootSystemKind};
use std::collections::BTreeSet;

/// `S(alpha)`, `R(alpha)` and the pairing `gamma -> gamma'` with
/// `gamma + gamma' = alpha`.
///
/// `left[k] + right[k] = alpha` and `[e_left[k], e_right[k]] = signs[k] e_alpha`.
/// For `alpha = e_i + e_j` the left half is `S_(i)` (roots carrying `e_i`)
/// and the right half is `S_(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularData {
    pub alpha: PositiveRoot,
    pub singular: Vec<PositiveRoot>,
    pub regular: Vec<PositiveRoot>,
    pub left: Vec<PositiveRoot>,
    pub right: Vec<PositiveRoot>,
    pub signs: Vec<i64>,
}

impl SingularData {
    pub fn is_singular(&self, root: PositiveRoot) -> bool {
        self.singular.binary_search(&root).is_ok()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (PositiveRoot, PositiveRoot, i64)> + '_ {
        self.left
            .iter()
            .zip(&self.right)
            .zip(&self.signs)
            .map(|((&g, &gp), &s)| (g, gp, s))
    }
}

fn pairing(kind: RootSystemKind, n: usize, alpha: PositiveRoot) -> Vec<(PositiveRoot, PositiveRoot)> {
    use PositiveRoot::*;
    match alpha {
        Diff(i, j) => (i + 1..j).map(|k| (Diff(i, k), Diff(k, j))).collect(),
        Short(i) => (i + 1..=n).map(|k| (Diff(i, k), Short(k))).collect(),
        Sum(i, j) => {
            let mut pairs: Vec<(PositiveRoot, PositiveRoot)> =
                (i + 1..j).map(|k| (Diff(i, k), Sum(k, j))).collect();
            pairs.extend((j + 1..=n).map(|k| (Diff(i, k), Sum(j, k))));
            if kind == RootSystemKind::B {
                pairs.push((Short(i), Short(j)));
            }
            pairs.extend((j + 1..=n).map(|k| (Sum(i, k), Diff(j, k))));
            pairs
        }
    }
}

pub fn singular_set(system: &RootSystem, alpha: PositiveRoot) -> Result<SingularData> {
    system.require(alpha)?;
    let (kind, n) = (system.kind(), system.rank());
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut signs = Vec::new();
    for (g, gp) in pairing(kind, n, alpha) {
        match system.bracket(g, gp)? {
            Some((s, root)) if root == alpha && s.abs() == 1 => signs.push(s),
            other => {
                return Err(Error::Internal(format!(
                    "[e_{g}, e_{gp}] = {other:?}, expected a unit multiple of e_{alpha}"
                )))
            }
        }
        left.push(g);
        right.push(gp);
    }
    let singular: BTreeSet<PositiveRoot> = left.iter().chain(&right).copied().collect();
    let regular = system
        .roots()
        .iter()
        .copied()
        .filter(|r| !singular.contains(r))
        .collect();
    Ok(SingularData {
        alpha,
        singular: singular.into_iter().collect(),
        regular,
        left,
        right,
        signs,
    })
}
