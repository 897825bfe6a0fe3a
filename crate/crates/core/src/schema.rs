//! JSON documents exchanged by the CLI.
//!
//! Roots are written `"e1-e4"`, `"e2"`, `"e1+e3"` and rationals `"p/q"` or `"p"`.

use crate::basic::{BasicMap, BasicSubset, DecompositionResult};
use crate::error::{Error, Result};
use crate::liealg::Functional;
use crate::orbits::{Monomial, OrbitChart, Polynomial};
use crate::rational::{self, Rational};
use crate::rootsys::{PositiveRoot, RootSystem, RootSystemKind};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

/// `{"kind","n","values":{"e1-e2":"p/q",...}}`; omitted roots are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalDoc {
    pub kind: RootSystemKind,
    pub n: usize,
    #[serde(default)]
    pub values: BTreeMap<String, String>,
}

impl FunctionalDoc {
    pub fn new(f: &Functional) -> Self {
        FunctionalDoc {
            kind: f.system().kind(),
            n: f.system().rank(),
            values: values_map(f),
        }
    }

    pub fn to_functional(&self) -> Result<Functional> {
        let system = RootSystem::shared(self.kind, self.n)?;
        let mut pairs = Vec::with_capacity(self.values.len());
        for (root, v) in &self.values {
            let root: PositiveRoot = root.parse()?;
            system.require(root)?;
            pairs.push((root, rational::parse(v)?));
        }
        Functional::from_values(system, pairs)
    }

    pub fn parse(text: &str) -> Result<Functional> {
        serde_json::from_str::<FunctionalDoc>(text)?.to_functional()
    }
}

/// Nonzero values of `f` keyed by root name.
pub fn values_map(f: &Functional) -> BTreeMap<String, String> {
    f.nonzero()
        .map(|(r, v)| (r.to_string(), rational::format(v)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    pub monomial: BTreeMap<String, u32>,
}

/// `{"kind","n","alpha","c","constraints":{root:[terms]}}`; one entry per regular root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartDoc {
    pub kind: RootSystemKind,
    pub n: usize,
    pub alpha: String,
    pub c: String,
    pub singular: Vec<String>,
    pub constraints: BTreeMap<String, Vec<TermDoc>>,
}

impl ChartDoc {
    pub fn new(chart: &OrbitChart) -> Self {
        let system = chart.system();
        let constraints = chart
            .constraints()
            .into_iter()
            .map(|(beta, p)| {
                let terms = p
                    .terms()
                    .map(|(m, c)| TermDoc {
                        coeff: rational::format(c),
                        monomial: m
                            .powers()
                            .iter()
                            .map(|&(v, e)| (system.root(v).to_string(), e))
                            .collect(),
                    })
                    .collect();
                (beta.to_string(), terms)
            })
            .collect();
        ChartDoc {
            kind: system.kind(),
            n: system.rank(),
            alpha: chart.alpha().to_string(),
            c: rational::format(chart.c()),
            singular: chart.singular().singular.iter().map(ToString::to_string).collect(),
            constraints,
        }
    }

    /// The constraint polynomials over the document's root system.
    pub fn polynomials(&self) -> Result<(Arc<RootSystem>, BTreeMap<PositiveRoot, Polynomial>)> {
        let system = RootSystem::shared(self.kind, self.n)?;
        let mut out = BTreeMap::new();
        for (root, terms) in &self.constraints {
            let beta: PositiveRoot = root.parse()?;
            system.require(beta)?;
            let mut p = Polynomial::zero();
            for t in terms {
                let mut powers = Vec::with_capacity(t.monomial.len());
                for (var, &e) in &t.monomial {
                    powers.push((system.require(var.parse()?)?, e));
                }
                let term = Polynomial::constant(rational::parse(&t.coeff)?);
                let mono = monomial_polynomial(Monomial::from_powers(powers));
                p = p + term * mono;
            }
            out.insert(beta, p);
        }
        Ok((system, out))
    }
}

fn monomial_polynomial(m: Monomial) -> Polynomial {
    let mut p = Polynomial::zero();
    p.add_term(m, Rational::from_integer(1.into()));
    p
}

/// `{"n","roots","phi"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicSubsetDoc {
    pub n: usize,
    pub roots: Vec<String>,
    #[serde(default)]
    pub phi: BTreeMap<String, String>,
}

impl BasicSubsetDoc {
    pub fn new(subset: &BasicSubset, map: Option<&BasicMap>) -> Self {
        BasicSubsetDoc {
            n: subset.n(),
            roots: subset.roots().map(|r| r.to_string()).collect(),
            phi: map
                .map(|m| m.iter().map(|(r, v)| (r.to_string(), rational::format(v))).collect())
                .unwrap_or_default(),
        }
    }

    pub fn from_decomposition(res: &DecompositionResult) -> Self {
        Self::new(&res.subset, Some(&res.map))
    }

    /// The subset, and its map when `phi` is present.
    pub fn parse(&self) -> Result<(BasicSubset, Option<BasicMap>)> {
        let roots = self
            .roots
            .iter()
            .map(|r| r.parse())
            .collect::<Result<Vec<PositiveRoot>>>()?;
        let subset = BasicSubset::new(self.n, roots)?;
        if self.phi.is_empty() && !subset.is_empty() {
            return Ok((subset, None));
        }
        let mut phi = BTreeMap::new();
        for (r, v) in &self.phi {
            phi.insert(r.parse()?, rational::parse(v)?);
        }
        let map = BasicMap::new(&subset, phi)?;
        Ok((subset, Some(map)))
    }
}

/// One line of a basic-subset scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub n: usize,
    pub roots: Vec<String>,
    pub s: usize,
    pub derived: Vec<String>,
    pub single_orbit: bool,
}

impl ScanRecord {
    pub fn new(subset: &BasicSubset) -> Self {
        let derived: Vec<String> = crate::basic::derived_set(subset)
            .into_iter()
            .map(|r| r.to_string())
            .collect();
        ScanRecord {
            n: subset.n(),
            roots: subset.roots().map(|r| r.to_string()).collect(),
            s: subset.s(),
            single_orbit: derived.is_empty(),
            derived,
        }
    }
}

/// Reads a JSON document, mapping decode failures to [`Error::Schema`].
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
}
