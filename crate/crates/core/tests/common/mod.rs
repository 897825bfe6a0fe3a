//! Dense-matrix reference implementation used as an independent oracle.
#![allow(dead_code)]

use coorbit_core::rational::{frac, int, Rational};
use coorbit_core::{Functional, GroupWord, PositiveRoot, RootSystem, RootSystemKind};
use num_traits::Zero;
use proptest::prelude::*;
use std::sync::Arc;

pub type Mat = Vec<Vec<Rational>>;

pub fn size(kind: RootSystemKind, n: usize) -> usize {
    match kind {
        RootSystemKind::A => n,
        RootSystemKind::B => 2 * n + 1,
        RootSystemKind::D => 2 * n,
    }
}

fn zero(d: usize) -> Mat {
    vec![vec![Rational::zero(); d]; d]
}

fn identity(d: usize) -> Mat {
    let mut m = zero(d);
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = int(1);
    }
    m
}

/// Entry positions (0-based) and signs of `e_root`, written out per type.
fn entries(kind: RootSystemKind, n: usize, root: PositiveRoot) -> Vec<(usize, usize, i64)> {
    use PositiveRoot::*;
    let b = 2 * n + 2;
    let d = 2 * n + 1;
    let raw = match (kind, root) {
        (RootSystemKind::A, Diff(i, j)) => vec![(i, j, 1)],
        (RootSystemKind::B, Diff(i, j)) => vec![(i, j, 1), (b - j, b - i, -1)],
        (RootSystemKind::B, Short(i)) => vec![(i, n + 1, 1), (n + 1, b - i, -1)],
        (RootSystemKind::B, Sum(i, j)) => vec![(i, b - j, 1), (j, b - i, -1)],
        (RootSystemKind::D, Diff(i, j)) => vec![(i, j, 1), (d - j, d - i, -1)],
        (RootSystemKind::D, Sum(i, j)) => vec![(i, d - j, 1), (j, d - i, -1)],
        other => panic!("no root vector for {other:?}"),
    };
    raw.into_iter().map(|(r, c, s)| (r - 1, c - 1, s)).collect()
}

pub fn root_matrix(kind: RootSystemKind, n: usize, root: PositiveRoot) -> Mat {
    let mut m = zero(size(kind, n));
    for (r, c, s) in entries(kind, n, root) {
        m[r][c] += int(s);
    }
    m
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    let mut out = zero(d);
    for i in 0..d {
        for k in 0..d {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn lin(a: &Mat, x: &Rational, b: &Mat, y: &Rational) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(p, q)| p * x + q * y).collect())
        .collect()
}

pub fn commutator(a: &Mat, b: &Mat) -> Mat {
    lin(&mul(a, b), &int(1), &mul(b, a), &int(-1))
}

/// `exp(t X)` for nilpotent `X`.
pub fn exp(x: &Mat, t: &Rational) -> Mat {
    let d = x.len();
    let tx: Mat = x.iter().map(|r| r.iter().map(|v| v * t).collect()).collect();
    let mut out = identity(d);
    let mut term = identity(d);
    for k in 1..=d {
        term = mul(&term, &tx);
        term = term.iter().map(|r| r.iter().map(|v| v / int(k as i64)).collect()).collect();
        out = lin(&out, &int(1), &term, &int(1));
    }
    out
}

/// Coordinates of `x` in the root basis, asserting that `x` lies in its span.
pub fn coordinates(system: &RootSystem, x: &Mat) -> Vec<Rational> {
    let (kind, n) = (system.kind(), system.rank());
    let coords: Vec<Rational> = system
        .roots()
        .iter()
        .map(|&r| {
            let (row, col, s) = entries(kind, n, r)[0];
            &x[row][col] * int(s)
        })
        .collect();
    let mut rebuilt = zero(x.len());
    for (&r, c) in system.roots().iter().zip(&coords) {
        rebuilt = lin(&rebuilt, &int(1), &root_matrix(kind, n, r), c);
    }
    assert_eq!(&rebuilt, x, "matrix is not in the span of the root vectors");
    coords
}

/// `(g . f)(e_gamma) = f(g^{-1} e_gamma g)` with `g` the ordered product of the word.
pub fn act(word: &GroupWord, f: &Functional) -> Functional {
    let system = f.system().clone();
    let (kind, n) = (system.kind(), system.rank());
    let d = size(kind, n);
    let mut g = identity(d);
    let mut g_inv = identity(d);
    for (root, t) in &word.letters {
        let x = root_matrix(kind, n, *root);
        g = mul(&g, &exp(&x, t));
        g_inv = mul(&exp(&x, &-t.clone()), &g_inv);
    }
    let values = system
        .roots()
        .iter()
        .map(|&gamma| {
            let conj = mul(&mul(&g_inv, &root_matrix(kind, n, gamma)), &g);
            coordinates(&system, &conj)
                .iter()
                .zip(f.values())
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect();
    Functional::from_dense(system, values).unwrap()
}

pub fn kind_strategy() -> impl Strategy<Value = RootSystemKind> {
    prop_oneof![
        Just(RootSystemKind::A),
        Just(RootSystemKind::B),
        Just(RootSystemKind::D)
    ]
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// A root system with ranks in `lo..=hi` (clamped to the type's minimum).
pub fn system_strategy(lo: usize, hi: usize) -> impl Strategy<Value = Arc<RootSystem>> {
    (kind_strategy(), lo..=hi).prop_map(|(k, n)| RootSystem::shared(k, n.max(k.min_rank())).unwrap())
}

pub fn word_strategy(system: Arc<RootSystem>, max_len: usize) -> impl Strategy<Value = GroupWord> {
    let len = system.len();
    prop::collection::vec((0..len, small_rational()), 0..=max_len).prop_map(move |letters| {
        GroupWord::new(letters.into_iter().map(|(k, t)| (system.root(k), t)).collect())
    })
}

pub fn functional_strategy(system: Arc<RootSystem>) -> impl Strategy<Value = Functional> {
    let len = system.len();
    prop::collection::vec(small_rational(), len)
        .prop_map(move |values| Functional::from_dense(system.clone(), values).unwrap())
}
