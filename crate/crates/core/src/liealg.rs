//! Functionals on the nilpotent algebra, the coadjoint action of `G = exp(g)`,
//! and the skew form whose rank is the orbit dimension.

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rational;
use crate::rootsys::{PositiveRoot, RootSystem};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

/// An element `f` of the dual space, stored by its values `f(e_alpha)` in
/// canonical root order.
#[derive(Clone, Debug)]
pub struct Functional {
    system: Arc<RootSystem>,
    values: Vec<Rational>,
}

impl PartialEq for Functional {
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system && self.values == other.values
    }
}

impl Eq for Functional {}

impl Functional {
    pub fn zero(system: Arc<RootSystem>) -> Self {
        let values = vec![Rational::zero(); system.len()];
        Functional { system, values }
    }

    /// `c * e_alpha^*`.
    pub fn basis(system: Arc<RootSystem>, alpha: PositiveRoot, c: Rational) -> Result<Self> {
        Self::from_values(system, [(alpha, c)])
    }

    /// Builds a functional from `(root, value)` pairs; repeated roots accumulate.
    pub fn from_values<I>(system: Arc<RootSystem>, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PositiveRoot, Rational)>,
    {
        let mut f = Self::zero(system);
        for (root, v) in values {
            let k = f.system.require(root)?;
            f.values[k] += v;
        }
        Ok(f)
    }

    pub fn from_dense(system: Arc<RootSystem>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != system.len() {
            return Err(Error::Internal(format!(
                "expected {} values, got {}",
                system.len(),
                values.len()
            )));
        }
        Ok(Functional { system, values })
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    /// `f(e_root)`; zero for roots outside the system.
    pub fn get(&self, root: PositiveRoot) -> Rational {
        self.system
            .ordinal(root)
            .map_or_else(Rational::zero, |k| self.values[k].clone())
    }

    pub fn at(&self, ordinal: usize) -> &Rational {
        &self.values[ordinal]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (PositiveRoot, &Rational)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (self.system.root(k), v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Functional {
            system: self.system.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &Functional) -> Result<Self> {
        if self.system != other.system {
            return Err(Error::SystemMismatch);
        }
        Ok(Functional {
            system: self.system.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn orbit_dimension(&self) -> usize {
        orbit_dimension(self)
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (root, v) in self.nonzero() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*e*[{}]", crate::rational::format(v), root)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A product `exp(t_1 e_{b_1}) ... exp(t_m e_{b_m})` of one-parameter subgroups.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupWord {
    pub letters: Vec<(PositiveRoot, Rational)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn new(letters: Vec<(PositiveRoot, Rational)>) -> Self {
        GroupWord { letters }
    }

    pub fn push(&mut self, root: PositiveRoot, t: Rational) {
        self.letters.push((root, t));
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self.letters.iter().rev().map(|(r, t)| (*r, -t.clone())).collect(),
        }
    }

    /// The product `self * other`.
    pub fn then(&self, other: &GroupWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        GroupWord { letters }
    }
}

/// `exp(t e_beta) . f`, i.e. `gamma -> f(exp(ad(-t e_beta)) e_gamma)`.
///
/// `ad(e_beta)` raises height, so the series stops once the bracket chain
/// leaves the root system.
pub fn coadjoint_apply_one(beta: PositiveRoot, t: &Rational, f: &Functional) -> Result<Functional> {
    let system = f.system();
    let b = system.require(beta)?;
    if t.is_zero() {
        return Ok(f.clone());
    }
    let table = system.brackets();
    let minus_t = -t.clone();
    let values = (0..system.len())
        .map(|g| {
            let mut acc = f.values[g].clone();
            let mut coef = BigInt::one();
            let mut weight = Rational::one();
            let mut cur = g;
            let mut k = 0u32;
            while let Some((c, next)) = table.get(b, cur) {
                k += 1;
                coef *= c;
                weight = weight * &minus_t / Rational::from_integer(BigInt::from(k));
                cur = next;
                let v = &f.values[cur];
                if !v.is_zero() {
                    acc += v * &weight * Rational::from_integer(coef.clone());
                }
            }
            acc
        })
        .collect();
    Ok(Functional {
        system: system.clone(),
        values,
    })
}

/// `g . f` for the group element named by `word`; the rightmost letter acts first.
pub fn coadjoint_apply(word: &GroupWord, f: &Functional) -> Result<Functional> {
    let mut out = f.clone();
    for (root, t) in word.letters.iter().rev() {
        out = coadjoint_apply_one(*root, t, &out)?;
    }
    Ok(out)
}

/// The matrix `M[a][b] = f([e_a, e_b])` over canonical root order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewForm {
    pub matrix: Vec<Vec<Rational>>,
}

impl SkewForm {
    pub fn is_skew(&self) -> bool {
        let m = &self.matrix;
        (0..m.len()).all(|a| (0..m.len()).all(|b| (&m[a][b] + &m[b][a]).is_zero()))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }
}

pub fn skew_form(f: &Functional) -> SkewForm {
    let system = f.system();
    let size = system.len();
    let table = system.brackets();
    let matrix = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| match table.get(a, b) {
                    Some((c, g)) => &f.values[g] * Rational::from_integer(BigInt::from(c)),
                    None => Rational::zero(),
                })
                .collect()
        })
        .collect();
    SkewForm { matrix }
}

/// `dim g / g^f`, the dimension of the coadjoint orbit through `f`.
pub fn orbit_dimension(f: &Functional) -> usize {
    skew_form(f).rank()
}

/// Basis of the radical `g^f`, as coefficient vectors over canonical root order.
pub fn radical_basis(f: &Functional) -> Vec<Vec<Rational>> {
    let form = skew_form(f);
    linalg::kernel(&form.matrix, f.system().len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::rootsys::RootSystemKind::*;
    use PositiveRoot::*;

    fn sys(kind: crate::RootSystemKind, n: usize) -> Arc<RootSystem> {
        RootSystem::shared(kind, n).unwrap()
    }

    #[test]
    fn simple_root_functionals_are_fixed_points() {
        for kind in crate::RootSystemKind::ALL {
            let s = sys(kind, 3);
            let simple: Vec<PositiveRoot> = match kind {
                A => vec![Diff(1, 2), Diff(2, 3)],
                B => vec![Diff(1, 2), Diff(2, 3), Short(3)],
                D => vec![Diff(1, 2), Diff(2, 3), Sum(2, 3)],
            };
            for &a in &simple {
                let f = Functional::basis(s.clone(), a, int(5)).unwrap();
                for &beta in s.roots() {
                    let g = coadjoint_apply_one(beta, &frac(-7, 3), &f).unwrap();
                    assert_eq!(g, f, "{kind} {a} moved by {beta}");
                }
            }
        }
    }

    #[test]
    fn zero_parameter_is_identity() {
        let s = sys(B, 3);
        let f = Functional::from_values(s.clone(), [(Sum(1, 3), int(2)), (Short(2), int(1))]).unwrap();
        assert_eq!(coadjoint_apply_one(Short(1), &int(0), &f).unwrap(), f);
    }

    #[test]
    fn hand_expanded_a2_action() {
        let s = sys(A, 3);
        let f = Functional::basis(s.clone(), Diff(1, 3), int(1)).unwrap();
        let t = frac(5, 2);
        let g = coadjoint_apply_one(Diff(2, 3), &t, &f).unwrap();
        assert_eq!(g.get(Diff(1, 2)), t);
        assert_eq!(g.get(Diff(1, 3)), int(1));
        assert_eq!(g.get(Diff(2, 3)), int(0));
    }

    #[test]
    fn word_laws() {
        let s = sys(D, 4);
        let f = Functional::from_values(
            s.clone(),
            [(Sum(1, 2), int(1)), (Diff(1, 3), int(-2)), (Sum(3, 4), frac(1, 2))],
        )
        .unwrap();
        assert_eq!(coadjoint_apply(&GroupWord::identity(), &f).unwrap(), f);

        let beta = Diff(2, 4);
        let w = GroupWord::new(vec![(beta, int(3)), (beta, int(-3))]);
        assert_eq!(coadjoint_apply(&w, &f).unwrap(), f);

        let split = GroupWord::new(vec![(beta, frac(1, 3)), (beta, int(2))]);
        let joined = GroupWord::new(vec![(beta, frac(7, 3))]);
        assert_eq!(
            coadjoint_apply(&split, &f).unwrap(),
            coadjoint_apply(&joined, &f).unwrap()
        );

        let w = GroupWord::new(vec![(Diff(1, 2), int(2)), (Sum(2, 3), int(-1)), (Diff(3, 4), int(1))]);
        let back = coadjoint_apply(&w.inverse(), &coadjoint_apply(&w, &f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn skew_form_examples() {
        let s = sys(A, 3);
        assert!(skew_form(&Functional::zero(s.clone())).matrix.iter().flatten().all(Zero::is_zero));

        let f = Functional::basis(s.clone(), Diff(1, 3), int(1)).unwrap();
        let form = skew_form(&f);
        assert!(form.is_skew());
        assert_eq!(form.rank(), 2);
        let a = s.ordinal(Diff(1, 2)).unwrap();
        let b = s.ordinal(Diff(2, 3)).unwrap();
        assert_eq!(form.matrix[a][b], int(1));
        assert_eq!(form.matrix[b][a], int(-1));
    }

    #[test]
    fn orbit_dimension_examples() {
        assert_eq!(orbit_dimension(&Functional::zero(sys(A, 4))), 0);
        let f = Functional::basis(sys(A, 4), Diff(1, 4), int(1)).unwrap();
        assert_eq!(orbit_dimension(&f), 4);
        let f = Functional::basis(sys(D, 3), Sum(1, 3), int(1)).unwrap();
        assert_eq!(orbit_dimension(&f), 2);
    }

    #[test]
    fn radical_examples() {
        let s = sys(A, 3);
        assert_eq!(radical_basis(&Functional::zero(s.clone())).len(), 3);
        let f = Functional::basis(s.clone(), Diff(1, 3), int(1)).unwrap();
        let rad = radical_basis(&f);
        assert_eq!(rad.len(), 1);
        let k = s.ordinal(Diff(1, 3)).unwrap();
        for (i, v) in rad[0].iter().enumerate() {
            assert_eq!(v.is_zero(), i != k);
        }
    }
}
