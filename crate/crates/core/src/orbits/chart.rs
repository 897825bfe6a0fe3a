use super::poly::{Polynomial, Style};
use super::{singular_set, SingularData};
use crate::error::{Error, Result};
use crate::liealg::{Functional, GroupWord};
use crate::rational::{frac, int, Rational};
use crate::rootsys::{PositiveRoot, RootSystem, RootSystemKind};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Candidate coefficient of `f(e_{e_i - e_k}) f(e_{e_i + e_k})` inside the
/// `beta = e_r - e_j` equation of a sum-root orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SumSignRule {
    /// `(-1)^k`
    PowK,
    /// `(-1)^(k-j)`
    PowKMinusJ,
    /// `-(-1)^k`
    NegPowK,
    /// `-(-1)^(k-j)`
    NegPowKMinusJ,
    /// `+1` for every `k`
    Plus,
    /// `-1` for every `k`
    Minus,
}

impl SumSignRule {
    pub const CANDIDATES: [SumSignRule; 6] = [
        SumSignRule::PowK,
        SumSignRule::PowKMinusJ,
        SumSignRule::NegPowK,
        SumSignRule::NegPowKMinusJ,
        SumSignRule::Plus,
        SumSignRule::Minus,
    ];

    pub fn sign(self, k: usize, j: usize) -> i64 {
        let alt = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
        match self {
            SumSignRule::PowK => alt(k),
            SumSignRule::PowKMinusJ => alt(k - j),
            SumSignRule::NegPowK => -alt(k),
            SumSignRule::NegPowKMinusJ => -alt(k - j),
            SumSignRule::Plus => 1,
            SumSignRule::Minus => -1,
        }
    }
}

impl fmt::Display for SumSignRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SumSignRule::PowK => "(-1)^k",
            SumSignRule::PowKMinusJ => "(-1)^(k-j)",
            SumSignRule::NegPowK => "-(-1)^k",
            SumSignRule::NegPowKMinusJ => "-(-1)^(k-j)",
            SumSignRule::Plus => "+1",
            SumSignRule::Minus => "-1",
        };
        f.write_str(s)
    }
}

/// Sign rule per root-system kind for the alternating-sum family of the
/// sum-root charts. Only types B and D have sum roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignConvention {
    pub type_b: SumSignRule,
    pub type_d: SumSignRule,
}

impl SignConvention {
    /// The alternating sign `(-1)^k` as it is usually printed.
    pub const AS_PRINTED: SignConvention = SignConvention {
        type_b: SumSignRule::PowK,
        type_d: SumSignRule::PowK,
    };

    /// The convention certified by `oracle::resolve_sign_conventions`.
    /// See `CONVENTIONS.md`.
    pub const fn certified() -> SignConvention {
        SignConvention {
            type_b: SumSignRule::Minus,
            type_d: SumSignRule::Minus,
        }
    }

    pub fn rule(&self, kind: RootSystemKind) -> Option<SumSignRule> {
        match kind {
            RootSystemKind::A => None,
            RootSystemKind::B => Some(self.type_b),
            RootSystemKind::D => Some(self.type_d),
        }
    }
}

impl Default for SignConvention {
    fn default() -> Self {
        Self::certified()
    }
}

/// Defining equations of the elementary orbit `O_alpha(c)`.
///
/// Stored as the `c = 1` equations; `f` lies in `O_alpha(c)` exactly when
/// `f / c` satisfies them. Every regular root carries one polynomial in the
/// singular coordinates, singular roots are free.
#[derive(Clone, Debug)]
pub struct OrbitChart {
    system: Arc<RootSystem>,
    data: SingularData,
    c: Rational,
    unit: BTreeMap<PositiveRoot, Polynomial>,
    convention: SignConvention,
}

impl OrbitChart {
    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn alpha(&self) -> PositiveRoot {
        self.data.alpha
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn singular(&self) -> &SingularData {
        &self.data
    }

    pub fn convention(&self) -> SignConvention {
        self.convention
    }

    /// The `c = 1` polynomial at a regular root.
    pub fn unit_constraint(&self, beta: PositiveRoot) -> Option<&Polynomial> {
        self.unit.get(&beta)
    }

    /// The polynomial giving `f(e_beta)` on `O_alpha(c)`.
    pub fn constraint(&self, beta: PositiveRoot) -> Option<Polynomial> {
        self.unit.get(&beta).map(|p| p.rescale_for(&self.c))
    }

    /// All constraints for `O_alpha(c)` in canonical root order.
    pub fn constraints(&self) -> Vec<(PositiveRoot, Polynomial)> {
        self.unit
            .iter()
            .map(|(&b, p)| (b, p.rescale_for(&self.c)))
            .collect()
    }

    pub fn contains(&self, f: &Functional) -> Result<bool> {
        if f.system() != &self.system {
            return Err(Error::SystemMismatch);
        }
        let g = f.scale(&self.c.recip());
        Ok(self.unit.iter().all(|(&beta, p)| p.eval(g.values()) == g.get(beta)))
    }

    /// The point of `O_alpha(c)` with the given singular coordinates.
    pub fn point(&self, assignment: &BTreeMap<PositiveRoot, Rational>) -> Result<Functional> {
        for &root in assignment.keys() {
            if !self.data.is_singular(root) {
                return Err(Error::ExtraVariable(root));
            }
        }
        let inv = self.c.recip();
        let mut values = vec![Rational::zero(); self.system.len()];
        for &root in &self.data.singular {
            let v = assignment.get(&root).ok_or(Error::MissingVariable(root))?;
            values[self.system.require(root)?] = v * &inv;
        }
        for (&beta, p) in &self.unit {
            let v = p.eval(&values);
            values[self.system.require(beta)?] = v;
        }
        let unit = Functional::from_dense(self.system.clone(), values)?;
        Ok(unit.scale(&self.c))
    }

    /// A word `w` with `w . (c e_alpha^*) = f`, following the product formula
    /// `prod exp(n f(e_g) e_g') prod exp(-n f(e_g') e_g)` over the pairs `(g, g')`.
    pub fn group_word_for(&self, f: &Functional) -> Result<GroupWord> {
        if !self.contains(f)? {
            return Err(Error::NotInOrbit(self.data.alpha));
        }
        let g = f.scale(&self.c.recip());
        let mut word = GroupWord::identity();
        for (gamma, gamma_p, n) in self.data.pairs() {
            word.push(gamma_p, g.get(gamma) * int(n));
        }
        for (gamma, gamma_p, n) in self.data.pairs() {
            word.push(gamma, -g.get(gamma_p) * int(n));
        }
        Ok(word)
    }

    /// One `f(e_beta) = ...` line per regular root.
    pub fn render(&self, style: Style) -> Vec<String> {
        self.constraints()
            .into_iter()
            .map(|(beta, p)| {
                format!(
                    "{} = {}",
                    super::poly::render_coordinate(beta, style),
                    p.render(&self.system, style)
                )
            })
            .collect()
    }
}

/// Chart of `O_alpha(c)` using the certified sign convention.
pub fn orbit_chart(system: &Arc<RootSystem>, alpha: PositiveRoot, c: Rational) -> Result<OrbitChart> {
    orbit_chart_with(system, alpha, c, SignConvention::certified())
}

pub fn orbit_chart_with(
    system: &Arc<RootSystem>,
    alpha: PositiveRoot,
    c: Rational,
    convention: SignConvention,
) -> Result<OrbitChart> {
    if c.is_zero() {
        return Err(Error::ZeroScalar);
    }
    let data = singular_set(system, alpha)?;
    let builder = Builder {
        system,
        data: &data,
        convention,
    };
    let mut unit = BTreeMap::new();
    for &beta in &data.regular {
        unit.insert(beta, builder.constraint(beta)?);
    }
    Ok(OrbitChart {
        system: system.clone(),
        data,
        c,
        unit,
        convention,
    })
}

pub fn contains(chart: &OrbitChart, f: &Functional) -> Result<bool> {
    chart.contains(f)
}

pub fn chart_point(chart: &OrbitChart, assignment: &BTreeMap<PositiveRoot, Rational>) -> Result<Functional> {
    chart.point(assignment)
}

/// Word carrying `e_alpha^*` to `f`, for `f` in `O_alpha(1)`.
pub fn construct_group_word(system: &Arc<RootSystem>, alpha: PositiveRoot, f: &Functional) -> Result<GroupWord> {
    orbit_chart(system, alpha, int(1))?.group_word_for(f)
}

struct Builder<'a> {
    system: &'a RootSystem,
    data: &'a SingularData,
    convention: SignConvention,
}

impl Builder<'_> {
    /// The coordinate `f(e_root)` as a polynomial; `f(e_alpha) = 1`.
    fn v(&self, root: PositiveRoot) -> Result<Polynomial> {
        if root == self.data.alpha {
            return Ok(Polynomial::constant(int(1)));
        }
        if !self.data.is_singular(root) {
            return Err(Error::Internal(format!(
                "chart for {} refers to regular coordinate {root}",
                self.data.alpha
            )));
        }
        Ok(Polynomial::var(self.system.require(root)?))
    }

    fn vv(&self, a: PositiveRoot, b: PositiveRoot) -> Result<Polynomial> {
        Ok(self.v(a)? * self.v(b)?)
    }

    fn constraint(&self, beta: PositiveRoot) -> Result<Polynomial> {
        use PositiveRoot::*;
        let alpha = self.data.alpha;
        if beta == alpha {
            return Ok(Polynomial::constant(int(1)));
        }
        match alpha {
            Diff(i, j) => match beta {
                Diff(r, s) if i < r && s < j => self.vv(Diff(i, s), Diff(r, j)),
                _ => Ok(Polynomial::zero()),
            },
            Short(i) => match beta {
                Diff(r, s) if i < r => self.vv(Diff(i, s), Short(r)),
                _ => Ok(Polynomial::zero()),
            },
            Sum(i, j) => self.sum_root_constraint(i, j, beta),
        }
    }

    /// `-1/2 f(e_i)^2 (type B) + sum_{k>j} sign(k) f(e_i - e_k) f(e_i + e_k)`.
    fn inner_sum(&self, i: usize, j: usize) -> Result<Polynomial> {
        use PositiveRoot::*;
        let kind = self.system.kind();
        let rule = self
            .convention
            .rule(kind)
            .ok_or_else(|| Error::Internal("sum roots need type B or D".into()))?;
        let mut p = Polynomial::zero();
        if kind == RootSystemKind::B {
            p = p + Polynomial::constant(frac(-1, 2)) * self.vv(Short(i), Short(i))?;
        }
        for k in j + 1..=self.system.rank() {
            let term = self.vv(Diff(i, k), PositiveRoot::sum(i, k))?;
            p = p + term.scale(&int(rule.sign(k, j)));
        }
        Ok(p)
    }

    fn sum_root_constraint(&self, i: usize, j: usize, beta: PositiveRoot) -> Result<Polynomial> {
        use PositiveRoot::*;
        let s = PositiveRoot::sum;
        match beta {
            Diff(r, sx) if sx == j && i <= r => {
                let p = self.v(s(r, j))? * self.inner_sum(i, j)?;
                if r > i {
                    // The same coordinate through the e_r - e_s family at s = j.
                    let via_rect = self.constraint(Diff(i, j))? * self.v(s(r, j))?;
                    if via_rect != p {
                        return Err(Error::Internal(format!(
                            "overlapping cases disagree at {beta} in the chart of e{i}+e{j}"
                        )));
                    }
                }
                Ok(p)
            }
            Diff(r, sx) if i <= r && sx < j => self.vv(Diff(i, sx), s(r, j)),
            Diff(r, sx) if i < r && r < j && j < sx => self.vv(Diff(i, sx), s(r, j)),
            Diff(r, sx) if j < r => {
                Ok(self.vv(Diff(j, sx), s(i, r))? - self.vv(Diff(i, sx), s(j, r))?)
            }
            Sum(r, sx) if i < r && r < j && j < sx => self.vv(Sum(i, sx), s(r, j)),
            Sum(r, sx) if j < r => {
                Ok(self.vv(Sum(j, sx), s(i, r))? - self.vv(Sum(i, sx), s(j, r))?)
            }
            Short(r) if i < r && r < j => self.vv(Short(i), s(r, j)),
            Short(r) if j < r => Ok(self.vv(Short(j), s(i, r))? - self.vv(Short(i), s(j, r))?),
            _ => Ok(Polynomial::zero()),
        }
    }
}
