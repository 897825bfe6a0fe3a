//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion.

use coorbit_core::basic::{
    decompose, derived_set, enumerate_basic_subsets, max_dimension, max_singular_witness, witness_basic_subsets,
};
use coorbit_core::liealg::{coadjoint_apply, orbit_dimension};
use coorbit_core::oracle::{default_word_length, resolve_sign_conventions, Sampler, DEFAULT_SEED};
use coorbit_core::orbits::{construct_group_word, orbit_chart, singular_set, Style};
use coorbit_core::rational::{frac, int};
use coorbit_core::{BasicMap, BasicSubset, Functional, PositiveRoot, Rational, RootSystem, RootSystemKind, SignConvention};
use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use PositiveRoot::{Diff, Short, Sum};
use RootSystemKind::{A, B, D};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: coorbit_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn system(kind: RootSystemKind, n: usize) -> Result<Arc<RootSystem>, String> {
    lib(RootSystem::shared(kind, n))
}

fn scalars() -> [Rational; 3] {
    [int(1), int(2), frac(-3, 5)]
}

fn singular_size(kind: RootSystemKind, n: usize, alpha: PositiveRoot) -> usize {
    match (kind, alpha) {
        (_, Diff(i, j)) => 2 * (j - i - 1),
        (_, Short(i)) => 2 * (n - i),
        (B, Sum(i, j)) => 2 * (2 * n - i - j),
        (_, Sum(i, j)) => 2 * (2 * n - i - j - 1),
    }
}

fn max_dim_closed_form(n: usize) -> usize {
    if n.is_multiple_of(2) {
        (n - 2) * n / 2
    } else {
        (n - 1) * (n - 1) / 2
    }
}

fn root_counts() -> Outcome {
    let mut checked = 0;
    for kind in RootSystemKind::ALL {
        for n in 2..=10 {
            let expected = match kind {
                A => n * (n - 1) / 2,
                B => n * n,
                D => n * n - n,
            };
            let sys = system(kind, n)?;
            ensure(sys.len() == expected, || format!("{kind}{n}: {} roots, expected {expected}", sys.len()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} systems"))
}

fn singular_sets() -> Outcome {
    let mut checked = 0;
    for kind in RootSystemKind::ALL {
        for n in 2..=8 {
            let sys = system(kind, n)?;
            for &alpha in sys.roots() {
                let data = lib(singular_set(&sys, alpha))?;
                let expected = singular_size(kind, n, alpha);
                ensure(data.singular.len() == expected, || {
                    format!("{kind}{n} {alpha}: |S| = {}, expected {expected}", data.singular.len())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} roots"))
}

fn elementary_dimensions() -> Outcome {
    let mut checked = 0;
    for kind in RootSystemKind::ALL {
        for n in 2..=6 {
            let sys = system(kind, n)?;
            for &alpha in sys.roots() {
                for c in scalars() {
                    let f = lib(Functional::basis(sys.clone(), alpha, c.clone()))?;
                    let dim = orbit_dimension(&f);
                    let expected = singular_size(kind, n, alpha);
                    ensure(dim == expected, || format!("{kind}{n} {alpha} c={c}: rank {dim}, expected {expected}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} functionals"))
}

fn chart_soundness() -> Outcome {
    let certified = lib(resolve_sign_conventions(4, DEFAULT_SEED))?;
    ensure(certified == SignConvention::certified(), || {
        format!("oracle certifies {certified:?}, library uses {:?}", SignConvention::certified())
    })?;

    let b3 = system(B, 3)?;
    let lines = lib(orbit_chart(&b3, Sum(1, 3), int(1)))?.render(Style::Text);
    ensure(lines.iter().any(|l| l == "f(e1-e3) = -1/2*f(e1)^2"), || format!("B3 e1+e3 chart: {lines:?}"))?;

    let mut sampler = Sampler::new(DEFAULT_SEED ^ 4);
    let mut checked = 0;
    for kind in RootSystemKind::ALL {
        for n in 2..=4 {
            let sys = system(kind, n)?;
            let len = default_word_length(&sys);
            for &alpha in sys.roots() {
                let charts: Vec<_> = scalars()
                    .into_iter()
                    .map(|c| orbit_chart(&sys, alpha, c))
                    .collect::<coorbit_core::Result<_>>()
                    .map_err(|e| e.to_string())?;
                for t in 0..100 {
                    let chart = &charts[t % 3];
                    let base = lib(Functional::basis(sys.clone(), alpha, chart.c().clone()))?;
                    let word = sampler.word(&sys, len);
                    let image = lib(coadjoint_apply(&word, &base))?;
                    ensure(lib(chart.contains(&image))?, || {
                        format!("{kind}{n} {alpha} c={}: image {image:?} under {word:?} violates the chart", chart.c())
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} images, convention B {} / D {}", certified.type_b, certified.type_d))
}

fn chart_round_trip() -> Outcome {
    let mut sampler = Sampler::new(DEFAULT_SEED ^ 5);
    let mut checked = 0;
    for kind in RootSystemKind::ALL {
        for n in 2..=4 {
            let sys = system(kind, n)?;
            for &alpha in sys.roots() {
                for t in 0..50 {
                    let c = scalars()[t % 3].clone();
                    let chart = lib(orbit_chart(&sys, alpha, c.clone()))?;
                    let assignment: BTreeMap<PositiveRoot, Rational> = chart
                        .singular()
                        .singular
                        .iter()
                        .map(|&r| (r, if sampler.coin() { sampler.param() } else { frac(sampler.index(7) as i64 - 3, 2) }))
                        .collect();
                    let point = lib(chart.point(&assignment))?;
                    let word = if c == int(1) {
                        lib(construct_group_word(&sys, alpha, &point))?
                    } else {
                        lib(chart.group_word_for(&point))?
                    };
                    let base = lib(Functional::basis(sys.clone(), alpha, c.clone()))?;
                    let back = lib(coadjoint_apply(&word, &base))?;
                    ensure(back == point, || format!("{kind}{n} {alpha} c={c}: {point:?} came back as {back:?}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} round trips"))
}

fn decomposition() -> Outcome {
    let mut sampler = Sampler::new(DEFAULT_SEED ^ 6);
    let mut checked = 0;
    for n in 2..=6 {
        let sys = system(A, n)?;
        let subsets: Vec<BasicSubset> = lib(enumerate_basic_subsets(n))?.collect();
        let len = default_word_length(&sys);
        for _ in 0..200 {
            let d = &subsets[sampler.index(subsets.len())];
            let phi = sampler.basic_map(d);
            let word = sampler.word(&sys, len);
            let f = lib(coadjoint_apply(&word, &lib(d.basic_functional(&sys, &phi))?))?;
            let res = lib(decompose(&f))?;
            ensure(res.subset == *d && res.map == phi, || {
                format!("A{n}: {d} with {phi:?} decomposed as {} with {:?}", res.subset, res.map)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} triples"))
}

fn derived_example() -> Outcome {
    let d = lib(BasicSubset::new(6, [Diff(1, 3), Diff(3, 5), Diff(2, 4), Diff(4, 6)]))?;
    let derived = derived_set(&d);
    let expected = BTreeSet::from([Diff(1, 2)]);
    ensure(derived == expected, || format!("D' = {derived:?}"))?;
    Ok("D' = {e1-e2}".into())
}

fn dichotomy() -> Outcome {
    let mut sampler = Sampler::new(DEFAULT_SEED ^ 8);
    let mut checked = 0;
    for n in 2..=5 {
        let sys = system(A, n)?;
        for d in lib(enumerate_basic_subsets(n))? {
            let single = derived_set(&d).is_empty();
            let maps = std::iter::once(BasicMap::ones(&d)).chain((0..20).map(|_| sampler.basic_map(&d))).collect::<Vec<_>>();
            for phi in maps {
                let dim = orbit_dimension(&lib(d.basic_functional(&sys, &phi))?);
                ensure((dim == d.s()) == single, || {
                    format!("A{n} {d} {phi:?}: dimension {dim}, s = {}, derived empty = {single}", d.s())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} basic sums"))
}

fn single_orbit_dimensions(n: usize) -> Result<BTreeSet<usize>, String> {
    Ok(lib(enumerate_basic_subsets(n))?
        .filter(|d| derived_set(d).is_empty())
        .map(|d| d.s())
        .collect())
}

fn achievable_dimensions() -> Outcome {
    for n in 2..=8 {
        let found = single_orbit_dimensions(n)?;
        let expected: BTreeSet<usize> = (0..=max_dim_closed_form(n)).step_by(2).collect();
        ensure(found == expected, || format!("n = {n}: found {found:?}"))?;
        let sys = system(A, n)?;
        for (m, d) in lib(witness_basic_subsets(n))? {
            let dim = orbit_dimension(&lib(d.basic_functional(&sys, &BasicMap::ones(&d)))?);
            ensure(dim == 2 * m && derived_set(&d).is_empty(), || format!("n = {n}: witness {d} for m = {m} has dimension {dim}"))?;
        }
    }
    let printed: [(usize, &[(usize, usize)]); 2] = [
        (6, &[(3, 4), (3, 5), (2, 5), (2, 6), (1, 6)]),
        (5, &[(3, 4), (2, 4), (2, 5), (1, 5)]),
    ];
    for (n, list) in printed {
        let witnesses = lib(witness_basic_subsets(n))?;
        for (r, &(i, j)) in list.iter().enumerate() {
            let (m, d) = &witnesses[r];
            let roots: Vec<_> = d.roots().collect();
            ensure(*m == r && roots == [Diff(i, j)], || format!("n = {n}: D_{r} = {d}, expected {{e{i}-e{j}}}"))?;
        }
    }
    Ok("n = 2..8".into())
}

fn max_dimension_bound() -> Outcome {
    for n in 2..=8 {
        let best = lib(enumerate_basic_subsets(n))?.map(|d| d.s()).max().unwrap_or(0);
        let bound = max_dim_closed_form(n);
        ensure(best == bound && lib(max_dimension(n))? == bound, || format!("n = {n}: max s = {best}, bound {bound}"))?;
        ensure(lib(max_singular_witness(n))?.s() == bound, || format!("n = {n}: witness misses the bound"))?;
    }
    let mut sampler = Sampler::new(DEFAULT_SEED ^ 10);
    let mut checked = 0;
    for n in 2..=6 {
        let sys = system(A, n)?;
        let bound = max_dim_closed_form(n);
        for _ in 0..500 {
            let f = sampler.functional(&sys);
            let dim = orbit_dimension(&f);
            ensure(dim <= bound, || format!("A{n}: {f:?} has dimension {dim} > {bound}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} sampled functionals"))
}

fn two_dimensional_support() -> Outcome {
    let mut sampler = Sampler::new(DEFAULT_SEED ^ 11);
    let mut checked = 0;
    for n in 4..=6 {
        let sys = system(A, n)?;
        let long: Vec<PositiveRoot> = sys.roots().iter().copied().filter(|r| matches!(r, Diff(i, j) if j - i > 2)).collect();
        for _ in 0..100 {
            let f = sampler.functional(&sys);
            let root = long[sampler.index(long.len())];
            let mut values = f.values().to_vec();
            values[lib(sys.require(root))?] = sampler.param();
            let f = lib(Functional::from_dense(sys.clone(), values))?;
            let dim = orbit_dimension(&f);
            ensure(dim >= 4, || format!("A{n}: {f:?} with {root} set has dimension {dim}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} functionals"))
}

fn weyl_report() -> Outcome {
    #[derive(serde::Deserialize)]
    struct Entry {
        dimension: usize,
        m: usize,
    }
    for n in 2..=8 {
        let out = Command::new(env!("CARGO_BIN_EXE_coorbit"))
            .args(["weyl", "--n", &n.to_string(), "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("n = {n}: exit {:?}", out.status.code()))?;
        let entries: Vec<Entry> = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let bound = if n % 2 == 0 { (n - 2) * n / 4 } else { (n - 1) * (n - 1) / 4 };
        let ms: Vec<usize> = entries.iter().map(|e| e.m).collect();
        ensure(ms == (0..=bound).collect::<Vec<_>>(), || format!("n = {n}: m values {ms:?}, bound {bound}"))?;
        let dims: BTreeSet<usize> = entries.iter().map(|e| e.dimension).collect();
        ensure(entries.iter().all(|e| e.dimension == 2 * e.m), || format!("n = {n}: dimension is not 2m"))?;
        ensure(dims == single_orbit_dimensions(n)?, || format!("n = {n}: reported dimensions {dims:?}"))?;
    }
    Ok("n = 2..8".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("root counts", root_counts),
        ("singular-set sizes", singular_sets),
        ("elementary orbit dimensions", elementary_dimensions),
        ("chart soundness", chart_soundness),
        ("chart round trip", chart_round_trip),
        ("decomposition", decomposition),
        ("derived-set example", derived_example),
        ("single-orbit dichotomy", dichotomy),
        ("achievable dimensions", achievable_dimensions),
        ("max-dimension bound", max_dimension_bound),
        ("two-dimensional support", two_dimensional_support),
        ("weyl index report", weyl_report),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
