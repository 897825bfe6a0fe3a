use crate::{Format, Outcome, VerifyArgs};
use coorbit_core::basic::{self, enumerate_basic_subsets};
use coorbit_core::oracle::{self, run_suite, Suite, SuiteConfig};
use coorbit_core::orbits::{orbit_chart, Style};
use coorbit_core::rational::{self, Rational};
use coorbit_core::schema::{BasicSubsetDoc, ChartDoc, FunctionalDoc, ScanRecord};
use coorbit_core::{Error, Functional, PositiveRoot, Result, RootSystem, RootSystemKind};
use serde_json::json;
use std::io::Read;
use std::path::Path;

fn to_json(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

pub fn roots(kind: RootSystemKind, n: usize, format: Format) -> Result<String> {
    let sys = RootSystem::new(kind, n)?;
    match format {
        Format::Json => to_json(&sys.roots().iter().map(ToString::to_string).collect::<Vec<_>>()),
        Format::Text => Ok(sys
            .roots()
            .iter()
            .enumerate()
            .map(|(k, r)| format!("{:>3}  {r}", k + 1))
            .collect::<Vec<_>>()
            .join("\n")),
        Format::Latex => Ok(sys
            .roots()
            .iter()
            .map(|&r| coorbit_core::orbits::poly::render_root(r, Style::Latex))
            .collect::<Vec<_>>()
            .join(",\\ ")),
    }
}

pub fn chart(kind: RootSystemKind, n: usize, alpha: PositiveRoot, c: Rational, format: Format) -> Result<String> {
    let sys = RootSystem::shared(kind, n)?;
    let chart = orbit_chart(&sys, alpha, c)?;
    match format {
        Format::Json => to_json(&ChartDoc::new(&chart)),
        Format::Text => Ok(chart.render(Style::Text).join("\n")),
        Format::Latex => {
            let body: Vec<String> = chart
                .render(Style::Latex)
                .into_iter()
                .map(|l| format!("  {}", l.replacen(" = ", " &= ", 1)))
                .collect();
            Ok(format!("\\begin{{align*}}\n{}\n\\end{{align*}}", body.join(" \\\\\n")))
        }
    }
}

fn read_functional(path: &Path) -> Result<Functional> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Schema(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))?
    };
    coorbit_core::schema::from_json::<FunctionalDoc>(&text)?.to_functional()
}

pub fn dim(path: &Path, format: Format) -> Result<String> {
    let f = read_functional(path)?;
    let d = f.orbit_dimension();
    match format {
        Format::Json => to_json(&json!({ "dimension": d })),
        _ => Ok(d.to_string()),
    }
}

pub fn decompose(path: &Path, format: Format) -> Result<String> {
    let f = read_functional(path)?;
    let res = basic::decompose(&f)?;
    match format {
        Format::Json => to_json(&BasicSubsetDoc::from_decomposition(&res)),
        _ => {
            let mut lines = vec![format!("D = {}", res.subset)];
            lines.extend(res.map.iter().map(|(r, v)| format!("phi({r}) = {}", rational::format(v))));
            lines.push(format!("s(D) = {}", res.subset.s()));
            Ok(lines.join("\n"))
        }
    }
}

pub fn dims(n: usize, format: Format) -> Result<String> {
    let dims = basic::achievable_dimensions(n)?;
    match format {
        Format::Json => to_json(&dims),
        _ => Ok(dims.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")),
    }
}

pub fn weyl(n: usize, format: Format) -> Result<String> {
    let dims = basic::achievable_dimensions(n)?;
    match format {
        Format::Json => to_json(
            &dims
                .iter()
                .map(|d| json!({ "dimension": d, "m": d / 2 }))
                .collect::<Vec<_>>(),
        ),
        _ => Ok(dims
            .iter()
            .map(|d| format!("dimension {d}: m = {}", d / 2))
            .collect::<Vec<_>>()
            .join("\n")),
    }
}

pub fn scan(n: usize) -> Result<String> {
    let mut lines = Vec::new();
    for d in enumerate_basic_subsets(n)? {
        lines.push(serde_json::to_string(&ScanRecord::new(&d))?);
    }
    Ok(lines.join("\n"))
}

fn config(args: &VerifyArgs, seed: u64) -> SuiteConfig {
    SuiteConfig {
        kind: args.kind,
        n: args.n,
        max_n: args.max_n,
        alpha: args.alpha,
        c: args.c.clone(),
        seed,
        trials: args.trials,
    }
}

pub fn verify(args: &VerifyArgs, seed: u64, format: Format) -> Result<Outcome> {
    if args.suite == "sign-conventions" {
        let n_max = args.max_n.unwrap_or(4);
        let survey = oracle::survey_sign_conventions(n_max, seed)?;
        let resolved = oracle::resolve_sign_conventions(n_max, seed);
        let text = match format {
            Format::Json => to_json(&json!({
                "survey": survey,
                "convention": resolved.as_ref().ok(),
                "error": resolved.as_ref().err().map(ToString::to_string),
            }))?,
            _ => {
                let mut lines = Vec::new();
                for (kind, fails) in &survey.failures {
                    for (rule, count) in fails {
                        lines.push(format!("{kind} {rule}: {count} of {} samples fail", survey.samples[kind]));
                    }
                }
                lines.push(match &resolved {
                    Ok(c) => format!("certified: B {}, D {}", c.type_b, c.type_d),
                    Err(e) => format!("unresolved: {e}"),
                });
                lines.join("\n")
            }
        };
        return Ok(Outcome {
            text,
            verified: resolved.is_ok(),
        });
    }
    let names: Vec<&str> = if args.suite == "all" {
        Suite::ALL.iter().map(|s| s.name()).collect()
    } else {
        vec![args.suite.as_str()]
    };
    let cfg = config(args, seed);
    let mut reports = Vec::new();
    for name in names {
        reports.push(run_suite(name, &cfg)?);
    }
    let verified = reports.iter().all(|r| r.passed());
    let text = match format {
        Format::Json if reports.len() == 1 => reports[0].to_json()?,
        Format::Json => to_json(&reports)?,
        _ => reports
            .iter()
            .map(|r| {
                let mut line = format!(
                    "{}: {} ({} trials, {} failures)",
                    r.check_name,
                    if r.passed() { "pass" } else { "FAIL" },
                    r.trials,
                    r.failures.len()
                );
                for (k, v) in &r.observations {
                    line.push_str(&format!("\n  {k}: {v}"));
                }
                for f in r.failures.iter().take(5) {
                    line.push_str(&format!("\n  counterexample: {}", f.detail));
                }
                line
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Outcome { text, verified })
}
