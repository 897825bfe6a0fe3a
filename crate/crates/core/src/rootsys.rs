//! Positive root systems of types A, B and D, their matrix root vectors and
//! the bracket table obtained from matrix commutators.
//!
//! Indices are 1-based throughout, matching the usual `epsilon_i` notation:
//! `Diff(i, j)` is `e_i - e_j`, `Short(i)` is `e_i` and `Sum(i, j)` is
//! `e_i + e_j`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootSystemKind {
    A,
    B,
    D,
}

impl RootSystemKind {
    pub const ALL: [RootSystemKind; 3] = [RootSystemKind::A, RootSystemKind::B, RootSystemKind::D];

    pub fn min_rank(self) -> usize {
        2
    }

    /// Number of positive roots for rank `n`.
    pub fn root_count(self, n: usize) -> usize {
        match self {
            RootSystemKind::A => n * (n - 1) / 2,
            RootSystemKind::B => n * n,
            RootSystemKind::D => n * n - n,
        }
    }

    /// Side length of the matrices realizing the algebra.
    pub fn matrix_dim(self, n: usize) -> usize {
        match self {
            RootSystemKind::A => n,
            RootSystemKind::B => 2 * n + 1,
            RootSystemKind::D => 2 * n,
        }
    }
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootSystemKind::A => "A",
            RootSystemKind::B => "B",
            RootSystemKind::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for RootSystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(RootSystemKind::A),
            "B" | "b" => Ok(RootSystemKind::B),
            "D" | "d" => Ok(RootSystemKind::D),
            other => Err(Error::KindSyntax(other.to_string())),
        }
    }
}

/// A positive root, written in the `epsilon` basis with 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum PositiveRoot {
    /// `e_i - e_j`, `i < j`.
    Diff(usize, usize),
    /// `e_i`, type B only.
    Short(usize),
    /// `e_i + e_j`, `i < j`, types B and D.
    Sum(usize, usize),
}

impl PositiveRoot {
    /// `e_i + e_j` with the indices put in increasing order.
    pub fn sum(a: usize, b: usize) -> PositiveRoot {
        PositiveRoot::Sum(a.min(b), a.max(b))
    }

    pub fn is_valid(&self, kind: RootSystemKind, n: usize) -> bool {
        match *self {
            PositiveRoot::Diff(i, j) => 1 <= i && i < j && j <= n,
            PositiveRoot::Short(i) => kind == RootSystemKind::B && 1 <= i && i <= n,
            PositiveRoot::Sum(i, j) => kind != RootSystemKind::A && 1 <= i && i < j && j <= n,
        }
    }

    /// Coordinates in the `epsilon` basis of `Z^n`.
    pub fn weight(&self, n: usize) -> Vec<i32> {
        let mut w = vec![0; n];
        match *self {
            PositiveRoot::Diff(i, j) => {
                w[i - 1] += 1;
                w[j - 1] -= 1;
            }
            PositiveRoot::Short(i) => w[i - 1] += 1,
            PositiveRoot::Sum(i, j) => {
                w[i - 1] += 1;
                w[j - 1] += 1;
            }
        }
        w
    }

    /// Inverse of [`weight`](Self::weight) restricted to positive roots of `kind`.
    pub fn from_weight(kind: RootSystemKind, w: &[i32]) -> Option<PositiveRoot> {
        let n = w.len();
        let nz: Vec<(usize, i32)> = w
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k + 1, c))
            .collect();
        let root = match nz.as_slice() {
            [(i, 1)] => PositiveRoot::Short(*i),
            [(i, 1), (j, -1)] => PositiveRoot::Diff(*i, *j),
            [(i, 1), (j, 1)] => PositiveRoot::Sum(*i, *j),
            _ => return None,
        };
        root.is_valid(kind, n).then_some(root)
    }

    fn canonical_key(&self) -> (u8, usize, usize) {
        match *self {
            PositiveRoot::Diff(i, j) => (0, j - i, i),
            PositiveRoot::Short(i) => (1, i, 0),
            PositiveRoot::Sum(i, j) => (2, i + j, i),
        }
    }
}

// Canonical order: Diff by (j - i, i), then Short by i, then Sum by (i + j, i).
impl Ord for PositiveRoot {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl PartialOrd for PositiveRoot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PositiveRoot::Diff(i, j) => write!(f, "e{i}-e{j}"),
            PositiveRoot::Short(i) => write!(f, "e{i}"),
            PositiveRoot::Sum(i, j) => write!(f, "e{i}+e{j}"),
        }
    }
}

impl FromStr for PositiveRoot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::RootSyntax(s.to_string());
        let t = s.trim();
        let index = |part: &str| -> Result<usize> {
            let digits = part.strip_prefix('e').ok_or_else(err)?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            digits.parse().map_err(|_| err())
        };
        if let Some((a, b)) = t.split_once('-') {
            let (i, j) = (index(a)?, index(b)?);
            if i == 0 || i >= j {
                return Err(err());
            }
            Ok(PositiveRoot::Diff(i, j))
        } else if let Some((a, b)) = t.split_once('+') {
            let (i, j) = (index(a)?, index(b)?);
            if i == 0 || i >= j {
                return Err(err());
            }
            Ok(PositiveRoot::Sum(i, j))
        } else {
            let i = index(t)?;
            if i == 0 {
                return Err(err());
            }
            Ok(PositiveRoot::Short(i))
        }
    }
}

impl From<PositiveRoot> for String {
    fn from(r: PositiveRoot) -> String {
        r.to_string()
    }
}

impl TryFrom<String> for PositiveRoot {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Sparse integer matrix; entries are keyed by 1-based `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRealization {
    pub dim: usize,
    pub entries: BTreeMap<(usize, usize), i64>,
}

impl MatrixRealization {
    pub fn zero(dim: usize) -> Self {
        MatrixRealization {
            dim,
            entries: BTreeMap::new(),
        }
    }

    fn add_entry(&mut self, row: usize, col: usize, v: i64) {
        let e = self.entries.entry((row, col)).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries.remove(&(row, col));
        }
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries.get(&(row, col)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut out = MatrixRealization::zero(self.dim);
        for (&(r, col), &v) in &self.entries {
            out.add_entry(r, col, c * v);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MatrixRealization::zero(self.dim);
        for (&(r, k), &a) in &self.entries {
            for (&(k2, c), &b) in other.entries.range((k, 0)..(k + 1, 0)) {
                debug_assert_eq!(k, k2);
                out.add_entry(r, c, a * b);
            }
        }
        out
    }

    /// `XY - YX`.
    pub fn commutator(&self, other: &Self) -> Self {
        let mut out = self.mul(other);
        for (&(r, c), &v) in &other.mul(self).entries {
            out.add_entry(r, c, -v);
        }
        out
    }

    /// First nonzero entry in row-major order.
    pub fn leading_entry(&self) -> Option<((usize, usize), i64)> {
        self.entries.iter().next().map(|(&p, &v)| (p, v))
    }

    pub fn is_strictly_upper(&self) -> bool {
        self.entries.keys().all(|&(r, c)| r < c)
    }

    /// `X^t J + J X = 0` for the antidiagonal identity `J`.
    pub fn is_antidiagonal_antisymmetric(&self) -> bool {
        let m = self.dim + 1;
        let mirrored_ok = self
            .entries
            .iter()
            .all(|(&(r, c), &v)| self.get(m - c, m - r) == -v);
        let antidiag_zero = self.entries.keys().all(|&(r, c)| r + c != m);
        mirrored_ok && antidiag_zero
    }
}

/// Matrix root vector `e_alpha` in the standard realization.
pub fn root_vector(kind: RootSystemKind, n: usize, alpha: PositiveRoot) -> Result<MatrixRealization> {
    if !alpha.is_valid(kind, n) {
        return Err(Error::InvalidRoot { kind, n, root: alpha });
    }
    let dim = kind.matrix_dim(n);
    let mut m = MatrixRealization::zero(dim);
    match (kind, alpha) {
        (RootSystemKind::A, PositiveRoot::Diff(i, j)) => m.add_entry(i, j, 1),
        (RootSystemKind::B, PositiveRoot::Diff(i, j)) => {
            m.add_entry(i, j, 1);
            m.add_entry(2 * n + 2 - j, 2 * n + 2 - i, -1);
        }
        (RootSystemKind::B, PositiveRoot::Short(i)) => {
            m.add_entry(i, n + 1, 1);
            m.add_entry(n + 1, 2 * n + 2 - i, -1);
        }
        (RootSystemKind::B, PositiveRoot::Sum(i, j)) => {
            m.add_entry(i, 2 * n + 2 - j, 1);
            m.add_entry(j, 2 * n + 2 - i, -1);
        }
        (RootSystemKind::D, PositiveRoot::Diff(i, j)) => {
            m.add_entry(i, j, 1);
            m.add_entry(2 * n + 1 - j, 2 * n + 1 - i, -1);
        }
        (RootSystemKind::D, PositiveRoot::Sum(i, j)) => {
            m.add_entry(i, 2 * n + 1 - j, 1);
            m.add_entry(j, 2 * n + 1 - i, -1);
        }
        _ => unreachable!("validity checked above"),
    }
    Ok(m)
}

/// `[e_alpha, e_beta]` as `coefficient * e_gamma`, computed from the matrices.
///
/// Returns `Ok(None)` when the commutator vanishes. An `Internal` error means
/// the commutator is not a multiple of a single root vector, which would be a
/// bug in [`root_vector`].
pub fn bracket(
    kind: RootSystemKind,
    n: usize,
    alpha: PositiveRoot,
    beta: PositiveRoot,
) -> Result<Option<(i64, PositiveRoot)>> {
    let x = root_vector(kind, n, alpha)?;
    let y = root_vector(kind, n, beta)?;
    let comm = x.commutator(&y);
    if comm.is_zero() {
        return Ok(None);
    }
    let w: Vec<i32> = alpha
        .weight(n)
        .iter()
        .zip(beta.weight(n))
        .map(|(a, b)| a + b)
        .collect();
    let gamma = PositiveRoot::from_weight(kind, &w).ok_or_else(|| {
        Error::Internal(format!("[e_{alpha}, e_{beta}] is nonzero but {alpha} + {beta} is not a root"))
    })?;
    let eg = root_vector(kind, n, gamma)?;
    let ((r, c), lead) = eg.leading_entry().expect("root vectors are nonzero");
    let v = comm.get(r, c);
    if v % lead != 0 || comm != eg.scaled(v / lead) {
        return Err(Error::Internal(format!(
            "[e_{alpha}, e_{beta}] is not a multiple of e_{gamma}"
        )));
    }
    Ok(Some((v / lead, gamma)))
}

/// Dense table of brackets between root vectors, indexed by root ordinals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    size: usize,
    entries: Vec<Option<(i64, usize)>>,
}

impl BracketTable {
    pub fn size(&self) -> usize {
        self.size
    }

    /// `[e_a, e_b] = c * e_g` as `Some((c, g))`, by ordinal.
    pub fn get(&self, a: usize, b: usize) -> Option<(i64, usize)> {
        self.entries[a * self.size + b]
    }

    /// Nonzero entries as `(a, b, c, g)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, i64, usize)> + '_ {
        self.entries.iter().enumerate().filter_map(move |(k, e)| {
            e.map(|(c, g)| (k / self.size, k % self.size, c, g))
        })
    }
}

/// The positive roots of a root system in canonical order, with an ordinal index.
#[derive(Debug)]
pub struct RootSystem {
    kind: RootSystemKind,
    rank: usize,
    roots: Vec<PositiveRoot>,
    index: HashMap<PositiveRoot, usize>,
    table: OnceLock<BracketTable>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    pub fn new(kind: RootSystemKind, n: usize) -> Result<Self> {
        if n < kind.min_rank() {
            return Err(Error::RankOutOfRange {
                kind,
                n,
                min: kind.min_rank(),
            });
        }
        let mut roots = Vec::with_capacity(kind.root_count(n));
        for i in 1..=n {
            for j in i + 1..=n {
                roots.push(PositiveRoot::Diff(i, j));
            }
        }
        if kind == RootSystemKind::B {
            roots.extend((1..=n).map(PositiveRoot::Short));
        }
        if kind != RootSystemKind::A {
            for i in 1..=n {
                for j in i + 1..=n {
                    roots.push(PositiveRoot::Sum(i, j));
                }
            }
        }
        roots.sort();
        let index = roots.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        Ok(RootSystem {
            kind,
            rank: n,
            roots,
            index,
            table: OnceLock::new(),
        })
    }

    pub fn shared(kind: RootSystemKind, n: usize) -> Result<Arc<Self>> {
        Self::new(kind, n).map(Arc::new)
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[PositiveRoot] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, ordinal: usize) -> PositiveRoot {
        self.roots[ordinal]
    }

    pub fn ordinal(&self, root: PositiveRoot) -> Option<usize> {
        self.index.get(&root).copied()
    }

    pub fn contains(&self, root: PositiveRoot) -> bool {
        self.index.contains_key(&root)
    }

    pub fn require(&self, root: PositiveRoot) -> Result<usize> {
        self.ordinal(root).ok_or(Error::InvalidRoot {
            kind: self.kind,
            n: self.rank,
            root,
        })
    }

    /// The bracket table, computed from matrix commutators on first use.
    pub fn brackets(&self) -> &BracketTable {
        self.table.get_or_init(|| {
            let size = self.roots.len();
            let mut entries = Vec::with_capacity(size * size);
            for &a in &self.roots {
                for &b in &self.roots {
                    let e = bracket(self.kind, self.rank, a, b)
                        .expect("matrix brackets decompose in the root basis")
                        .map(|(c, g)| (c, self.index[&g]));
                    entries.push(e);
                }
            }
            BracketTable { size, entries }
        })
    }

    /// `[e_a, e_b]` by root.
    pub fn bracket(&self, a: PositiveRoot, b: PositiveRoot) -> Result<Option<(i64, PositiveRoot)>> {
        let (ia, ib) = (self.require(a)?, self.require(b)?);
        Ok(self.brackets().get(ia, ib).map(|(c, g)| (c, self.roots[g])))
    }
}

pub fn positive_roots(kind: RootSystemKind, n: usize) -> Result<RootSystem> {
    RootSystem::new(kind, n)
}

pub fn structure_table(kind: RootSystemKind, n: usize) -> Result<BracketTable> {
    Ok(RootSystem::new(kind, n)?.brackets().clone())
}
