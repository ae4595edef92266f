//! The verify subcommand: re-derives the enumerations for one rank and
//! cross-checks them against the polyhedral oracle and the Weyl dimension.
//! Checks that would not finish at the requested rank are reported as
//! skipped rather than silently dropped.

use fflv::oracle::{
    count_lattice, fundamental_summands_a, fundamental_summands_c, is_simple_oracle,
    is_vertex_oracle, oracle_vertex_set,
};
use fflv::perm::PermA;
use fflv::polytope_a::hrep_a;
use fflv::polytope_c::{
    enumerate_symmetric_rp, enumerate_vertices_c, hrep_c, permutation_vertices_c,
    simple_vertices_c,
};
use fflv::rat::{int, Rat};
use fflv::segments::{
    enumerate_rp, enumerate_rs, family_of_perm, is_simple_permutation, large_schroder,
    perm_of_family, tight_point,
};
use fflv::vertices_a::enumerate_vertices_a;
use fflv::weights::{weyl_dim_a, weyl_dim_c, WeightA, WeightC};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{check_rank, from_lib, Failure, Report, TypeArg};

struct Check {
    name: &'static str,
    pass: bool,
    cases: usize,
    detail: Option<String>,
}

impl Check {
    fn done(name: &'static str, cases: usize, bad: Option<String>) -> Self {
        Check {
            name,
            pass: bad.is_none(),
            cases,
            detail: bad,
        }
    }

    fn skip(name: &'static str, why: &str) -> Self {
        Check {
            name,
            pass: true,
            cases: 0,
            detail: Some(format!("skipped: {why}")),
        }
    }
}

pub fn run(
    ty: TypeArg,
    n: usize,
    upto: i64,
    seed: u64,
    budget: u64,
    max_rank: Option<usize>,
) -> Result<Report, Failure> {
    if upto < 0 {
        return Err(Failure::Input(format!(
            "--weights-upto must be nonnegative, got {upto}"
        )));
    }
    let checks = match ty {
        TypeArg::A => {
            if n < 2 {
                return Err(Failure::Input(format!(
                    "type A needs rank at least 2, got {n}"
                )));
            }
            check_rank(TypeArg::A, n, max_rank)?;
            run_a(n, upto, seed, budget)?
        }
        TypeArg::C => {
            if n < 1 {
                return Err(Failure::Input("type C needs rank at least 1".to_string()));
            }
            check_rank(TypeArg::C, n, max_rank)?;
            run_c(n, upto, seed, budget)?
        }
    };
    Ok(finish(ty, n, upto, seed, checks))
}

fn finish(ty: TypeArg, n: usize, upto: i64, seed: u64, checks: Vec<Check>) -> Report {
    let ty_str = match ty {
        TypeArg::A => "A",
        TypeArg::C => "C",
    };
    let pass = checks.iter().all(|c| c.pass);
    let json = json!({
        "checks": checks
            .iter()
            .map(|c| {
                json!({
                    "cases": c.cases,
                    "detail": c.detail,
                    "name": c.name,
                    "pass": c.pass,
                })
            })
            .collect::<Vec<Value>>(),
        "command": "verify",
        "n": n,
        "pass": pass,
        "seed": seed,
        "type": ty_str,
        "weights_upto": upto,
    });
    let mut table = format!("verify  type {ty_str}  n={n}  weights up to {upto}  seed {seed}\n");
    for c in &checks {
        let status = if !c.pass {
            "FAIL"
        } else if c.cases == 0 && c.detail.is_some() {
            "skip"
        } else {
            "ok"
        };
        let unit = if c.cases == 1 { "case" } else { "cases" };
        table.push_str(&format!("{status:<4}  {} ({} {unit})\n", c.name, c.cases));
        if let Some(d) = &c.detail {
            table.push_str(&format!("      {d}\n"));
        }
    }
    table.push_str(&format!(
        "result: {}\n",
        if pass { "pass" } else { "FAIL" }
    ));
    Report {
        json,
        table,
        exit: if pass { 0 } else { 1 },
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn all_weights(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=max).map(move |a| {
                    let mut next = w.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}

/// At most `k` entries, spread evenly over the list.
fn sample<T: Clone>(xs: &[T], k: usize) -> Vec<T> {
    if xs.len() <= k {
        return xs.to_vec();
    }
    let step = xs.len().div_ceil(k);
    xs.iter().step_by(step).cloned().collect()
}

fn point_set<I: IntoIterator<Item = Vec<Rat>>>(points: I) -> Vec<Vec<Rat>> {
    let mut v: Vec<Vec<Rat>> = points.into_iter().collect();
    v.sort();
    v.dedup();
    v
}

fn wa(coords: &[i64]) -> WeightA {
    WeightA::new(coords.to_vec()).expect("valid weight coordinates")
}

fn wc(coords: &[i64]) -> WeightC {
    WeightC::new(coords.to_vec()).expect("valid weight coordinates")
}

fn run_a(n: usize, upto: i64, seed: u64, budget: u64) -> Result<Vec<Check>, Failure> {
    let mut checks = Vec::new();
    let weights = all_weights(n - 1, upto);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    {
        let name = "segment families biject with permutations";
        let rp = enumerate_rp(n);
        let expected = factorial(n);
        let cases = 2 * expected;
        let mut bad = None;
        if rp.len() != expected {
            bad = Some(format!("expected {expected} families, found {}", rp.len()));
        }
        if bad.is_none() {
            for family in &rp {
                let w = perm_of_family(family, n).expect("family is admissible");
                if &family_of_perm(&w) != family {
                    bad = Some(format!("round trip failed for {family:?}"));
                    break;
                }
            }
        }
        if bad.is_none() {
            for w in PermA::all(n) {
                if perm_of_family(&family_of_perm(&w), n).expect("image family is admissible") != w
                {
                    bad = Some(format!("round trip failed for {w:?}"));
                    break;
                }
            }
        }
        checks.push(Check::done(name, cases, bad));
    }

    {
        let name = "simple-vertex count matches the large Schroder number";
        let rs = enumerate_rs(n).len();
        let by_perm = PermA::all(n)
            .into_iter()
            .filter(is_simple_permutation)
            .count();
        let expected = large_schroder(n - 1);
        let bad = if int(rs as i64) == expected && by_perm == rs {
            None
        } else {
            Some(format!(
                "laminar families {rs}, permutation criterion {by_perm}, expected {expected}"
            ))
        };
        checks.push(Check::done(name, 2, bad));
    }

    {
        let name = "permutation-vertex points pass the vertex oracle";
        let rp = enumerate_rp(n);
        let mut cases = 0;
        let mut bad = None;
        'outer: for coords in sample(&weights, 8) {
            let lambda = wa(&coords);
            let h = hrep_a(&lambda);
            for family in &rp {
                let x = tight_point(&lambda, family).expect("family is admissible");
                cases += 1;
                if !is_vertex_oracle(&h, x.entries()) {
                    bad = Some(format!("x({family:?}) is not a vertex for weight {coords:?}"));
                    break 'outer;
                }
            }
        }
        checks.push(Check::done(name, cases, bad));
    }

    if n <= 4 {
        let name = "vertex sets equal the oracle";
        let mut list = weights.clone();
        for _ in 0..5 {
            list.push((1..n).map(|_| rng.gen_range(0..=upto)).collect());
        }
        let mut cases = 0;
        let mut bad = None;
        for coords in &list {
            cases += 1;
            let lambda = wa(coords);
            let walked = point_set(
                enumerate_vertices_a(&lambda)
                    .into_iter()
                    .map(|v| v.point.entries().to_vec()),
            );
            let oracle = oracle_vertex_set(&hrep_a(&lambda), &fundamental_summands_a(&lambda));
            if point_set(oracle.points) != walked {
                bad = Some(format!("vertex sets differ for weight {coords:?}"));
                break;
            }
        }
        checks.push(Check::done(name, cases, bad));
    } else {
        checks.push(Check::skip(
            "vertex sets equal the oracle",
            "rank above the cross-check range",
        ));
    }

    {
        let name = "lattice counts equal Weyl dimensions";
        let mut cases = 0;
        let mut bad = None;
        for coords in &weights {
            cases += 1;
            let lambda = wa(coords);
            let count = count_lattice(&hrep_a(&lambda), budget).map_err(from_lib)?;
            let dim = weyl_dim_a(&lambda);
            if count != dim {
                bad = Some(format!(
                    "weight {coords:?}: counted {count}, Weyl dimension {dim}"
                ));
                break;
            }
        }
        checks.push(Check::done(name, cases, bad));
    }

    Ok(checks)
}

fn run_c(n: usize, upto: i64, seed: u64, budget: u64) -> Result<Vec<Check>, Failure> {
    let mut checks = Vec::new();
    let weights = all_weights(n, upto);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    {
        let name = "symmetric family count is 2^n n!";
        let found = enumerate_symmetric_rp(n).len();
        let expected = factorial(n) << n;
        let bad = if found == expected {
            None
        } else {
            Some(format!("expected {expected}, found {found}"))
        };
        checks.push(Check::done(name, 1, bad));
    }

    {
        let name = "folded tight points are integral vertices";
        let mut cases = 0;
        let mut bad = None;
        'outer: for coords in sample(&weights, 8) {
            let lambda = wc(&coords);
            let h = hrep_c(&lambda);
            for row in permutation_vertices_c(&lambda) {
                cases += 1;
                if !row.point.is_integral() || !is_vertex_oracle(&h, row.point.entries()) {
                    bad = Some(format!(
                        "x({:?}) fails for weight {coords:?}",
                        row.family
                    ));
                    break 'outer;
                }
            }
        }
        checks.push(Check::done(name, cases, bad));
    }

    if n <= 3 {
        let name = "vertex sets equal the oracle";
        let mut list = weights.clone();
        for _ in 0..5 {
            list.push((0..n).map(|_| rng.gen_range(0..=upto)).collect());
        }
        let mut cases = 0;
        let mut bad = None;
        for coords in &list {
            cases += 1;
            let lambda = wc(coords);
            let walked = point_set(
                enumerate_vertices_c(&lambda)
                    .into_iter()
                    .map(|v| v.point.entries().to_vec()),
            );
            let oracle = oracle_vertex_set(&hrep_c(&lambda), &fundamental_summands_c(&lambda));
            if point_set(oracle.points) != walked {
                bad = Some(format!("vertex sets differ for weight {coords:?}"));
                break;
            }
        }
        checks.push(Check::done(name, cases, bad));
    } else {
        checks.push(Check::skip(
            "vertex sets equal the oracle",
            "rank above the cross-check range",
        ));
    }

    if n <= 3 {
        let name = "simple-vertex sets equal the oracle";
        let mut cases = 0;
        let mut bad = None;
        for coords in weights.iter().filter(|c| !c.contains(&0)) {
            cases += 1;
            let lambda = wc(coords);
            let h = hrep_c(&lambda);
            let walked = point_set(
                simple_vertices_c(&lambda)
                    .expect("weight is regular")
                    .into_iter()
                    .map(|(_, x)| x.entries().to_vec()),
            );
            let oracle = oracle_vertex_set(&h, &fundamental_summands_c(&lambda));
            let confirmed = point_set(
                oracle
                    .points
                    .into_iter()
                    .filter(|p| matches!(is_simple_oracle(&h, p), Ok(true))),
            );
            if confirmed != walked {
                bad = Some(format!("simple sets differ for weight {coords:?}"));
                break;
            }
        }
        checks.push(Check::done(name, cases, bad));
    } else {
        checks.push(Check::skip(
            "simple-vertex sets equal the oracle",
            "rank above the cross-check range",
        ));
    }

    {
        let name = "lattice counts equal Weyl dimensions";
        let mut cases = 0;
        let mut bad = None;
        for coords in &weights {
            cases += 1;
            let lambda = wc(coords);
            let count = count_lattice(&hrep_c(&lambda), budget).map_err(from_lib)?;
            let dim = weyl_dim_c(&lambda);
            if count != dim {
                bad = Some(format!(
                    "weight {coords:?}: counted {count}, Weyl dimension {dim}"
                ));
                break;
            }
        }
        checks.push(Check::done(name, cases, bad));
    }

    Ok(checks)
}
