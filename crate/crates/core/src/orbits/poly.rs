//! Sparse multivariate polynomials with rational coefficients whose variables
//! are root coordinates `f(e_beta)`, identified by root ordinal.

use crate::rational::{self, Rational};
use crate::rootsys::{PositiveRoot, RootSystem};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

/// Product of variables; `(ordinal, exponent)` pairs sorted by ordinal.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: usize) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        for (v, e) in powers {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn powers(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial::from_powers(self.0.iter().chain(&other.0).copied())
    }

    pub fn eval(&self, values: &[Rational]) -> Rational {
        self.0
            .iter()
            .map(|&(v, e)| rational::pow(&values[v], e))
            .fold(Rational::one(), |acc, x| acc * x)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

/// Output flavour for [`Polynomial::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: usize) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::var(v), Rational::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Polynomial::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Evaluates with `values[ordinal]` as the value of each variable.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| c * m.eval(values))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// `c * P(x / c)`: turns a defining polynomial of `O(1)` into one of `O(c)`.
    pub fn rescale_for(&self, c: &Rational) -> Self {
        let mut out = Polynomial::zero();
        for (m, v) in &self.terms {
            let d = m.degree();
            let factor = if d == 0 {
                c.clone()
            } else {
                rational::pow(&c.recip(), d - 1)
            };
            out.add_term(m.clone(), v * factor);
        }
        out
    }

    /// Terms in rendering order: by degree, then by variable order.
    fn ordered_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| (a.0.degree(), a.0).cmp(&(b.0.degree(), b.0)));
        terms
    }

    /// Renders in the `f(e_beta)` notation, e.g. `-1/2*f(e1)^2`.
    pub fn render(&self, system: &RootSystem, style: Style) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.ordered_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .map(|&(v, e)| render_var(system.root(v), e, style))
                .collect();
            let coeff = render_coeff(&mag, style);
            if vars.is_empty() {
                out.push_str(&coeff);
                continue;
            }
            let sep = match style {
                Style::Text => "*",
                Style::Latex => " ",
            };
            if !mag.is_one() {
                out.push_str(&coeff);
                out.push_str(sep);
            }
            out.push_str(&vars.join(sep));
        }
        out
    }
}

pub fn render_root(root: PositiveRoot, style: Style) -> String {
    match style {
        Style::Text => root.to_string(),
        Style::Latex => match root {
            PositiveRoot::Diff(i, j) => format!("\\epsilon_{{{i}}}-\\epsilon_{{{j}}}"),
            PositiveRoot::Short(i) => format!("\\epsilon_{{{i}}}"),
            PositiveRoot::Sum(i, j) => format!("\\epsilon_{{{i}}}+\\epsilon_{{{j}}}"),
        },
    }
}

pub fn render_coordinate(root: PositiveRoot, style: Style) -> String {
    match style {
        Style::Text => format!("f({root})"),
        Style::Latex => format!("f(e_{{{}}})", render_root(root, style)),
    }
}

fn render_var(root: PositiveRoot, exp: u32, style: Style) -> String {
    let base = render_coordinate(root, style);
    match (exp, style) {
        (1, _) => base,
        (e, Style::Text) => format!("{base}^{e}"),
        (e, Style::Latex) => format!("{base}^{{{e}}}"),
    }
}

fn render_coeff(c: &Rational, style: Style) -> String {
    match style {
        Style::Text => rational::format(c),
        Style::Latex if c.denom().is_one() => c.numer().to_string(),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}
