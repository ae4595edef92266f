//! Command-line front end: builds the polytope of a dominant weight for type
//! A or C, lists and classifies its vertices, maps segment families to
//! permutations and back, and runs the oracle cross-check suites.
//!
//! Exit codes: 0 success (for verify: all checks passed), 1 a verify check
//! failed, 2 invalid input, 3 budget exceeded.

mod output;
mod verify;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fflv::oracle::{count_lattice, is_simple_oracle, tight_rows};
use fflv::perm::PermA;
use fflv::polytope_a::{hrep_a, lattice_points_a};
use fflv::polytope_c::{
    enumerate_vertices_c, hrep_c, lattice_points_c, permutation_vertices_c,
    signed_perm_of_family, simple_vertices_c,
};
use fflv::rat::{format_rat, int, Int};
use fflv::segments::{
    family_of_perm, large_schroder, pbw_degree, pbw_poly, perm_of_family,
    permutation_vertices_a, simple_vertices_a, Seg, SegmentFamily,
};
use fflv::vertices_a::enumerate_vertices_a;
use fflv::weights::{
    weight_of_point_a, weight_of_point_c, weyl_dim_a, weyl_dim_c, WeightA, WeightC,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "fflv",
    version,
    about = "FFLV polytopes for types A and C: vertices, classifications, exact cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Highest permitted rank (defaults: 6 for type A, 4 for type C).
    #[arg(long, global = true)]
    max_rank: Option<usize>,

    /// Node budget for lattice enumeration (default 10000000); the
    /// FFLV_BUDGET environment variable overrides the default.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Seed for the randomized portion of verify.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all vertices with their antichain-tuple certificates.
    Vertices(WeightArgs),
    /// List the permutation vertices x(E) with w(E), the vertex weight, and
    /// the PBW degree.
    Perm(WeightArgs),
    /// List the simple vertices of a regular weight, each confirmed by the
    /// tangent-cone oracle.
    Simple(WeightArgs),
    /// Map a segment family to its permutation.
    Psi {
        /// Comma-separated segments, e.g. 1-2,1-3.
        #[arg(long)]
        segments: String,
        /// The segments live on [1, n].
        #[arg(long)]
        n: usize,
    },
    /// Map a permutation in one-line notation back to its segment family.
    PsiInv {
        /// Comma-separated images, e.g. 3,1,4,2.
        #[arg(long)]
        perm: String,
    },
    /// The PBW degree generating polynomial over permutation vertices
    /// (type A).
    Char(WeightArgs),
    /// Run the self-check suite for one rank: enumerations against the
    /// oracle, lattice counts against Weyl dimensions, family bijections.
    Verify {
        /// Root system type.
        #[arg(long, value_enum, default_value_t = TypeArg::A)]
        r#type: TypeArg,
        /// Rank to check.
        #[arg(long)]
        n: usize,
        /// Check every weight whose coordinates are at most this value.
        #[arg(long, default_value_t = 2)]
        weights_upto: i64,
    },
    /// Count lattice points two independent ways and compare with the Weyl
    /// dimension.
    LatticeCount(WeightArgs),
}

#[derive(Args)]
struct WeightArgs {
    /// Root system type.
    #[arg(long, value_enum, default_value_t = TypeArg::A)]
    r#type: TypeArg,
    /// Comma-separated nonnegative weight coordinates; the rank is inferred
    /// (length + 1 for type A, length for type C).
    #[arg(long)]
    weight: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// A failed run: invalid input (exit 2) or an exceeded cap (exit 3).
pub enum Failure {
    Input(String),
    Budget(String),
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn from_lib(e: fflv::Error) -> Failure {
    match e {
        fflv::Error::BudgetExceeded { budget } => Failure::Budget(format!(
            "lattice enumeration exceeded the budget of {budget} nodes; raise it with --budget or FFLV_BUDGET"
        )),
        other => Failure::Input(other.to_string()),
    }
}

struct Report {
    json: Value,
    table: String,
    exit: u8,
}

impl Report {
    fn ok(json: Value, table: String) -> Self {
        Report {
            json,
            table,
            exit: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match resolve_budget(cli.budget) {
        Ok(b) => b,
        Err(f) => return fail(f),
    };
    let result = match &cli.command {
        Command::Vertices(args) => cmd_vertices(args, cli.max_rank),
        Command::Perm(args) => cmd_perm(args, cli.max_rank),
        Command::Simple(args) => cmd_simple(args, cli.max_rank),
        Command::Psi { segments, n } => cmd_psi(segments, *n, cli.max_rank),
        Command::PsiInv { perm } => cmd_psi_inv(perm, cli.max_rank),
        Command::Char(args) => cmd_char(args, cli.max_rank),
        Command::Verify {
            r#type,
            n,
            weights_upto,
        } => verify::run(*r#type, *n, *weights_upto, cli.seed, budget, cli.max_rank),
        Command::LatticeCount(args) => cmd_lattice_count(args, cli.max_rank, budget),
    };
    match result {
        Ok(report) => {
            let text = match cli.format {
                Format::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&report.json).expect("report serializes");
                    s.push('\n');
                    s
                }
                Format::Table => report.table,
            };
            // a closed pipe (e.g. piping into head) is not an error
            let _ = std::io::Write::write_all(&mut std::io::stdout(), text.as_bytes());
            ExitCode::from(report.exit)
        }
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    match f {
        Failure::Input(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Failure::Budget(msg) => {
            eprintln!("budget exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("FFLV_BUDGET") {
        Ok(s) => s.trim().parse::<u64>().map_err(|_| {
            Failure::Input(format!("FFLV_BUDGET must be a nonnegative integer, got {s:?}"))
        }),
        Err(_) => Ok(10_000_000),
    }
}

fn rank_cap(ty: TypeArg, max_rank: Option<usize>) -> usize {
    max_rank.unwrap_or(match ty {
        TypeArg::A => 6,
        TypeArg::C => 4,
    })
}

pub fn check_rank(ty: TypeArg, n: usize, max_rank: Option<usize>) -> Result<(), Failure> {
    let cap = rank_cap(ty, max_rank);
    if n > cap {
        return Err(Failure::Budget(format!(
            "rank {n} exceeds the cap of {cap}; raise it with --max-rank"
        )));
    }
    Ok(())
}

fn parse_weight(s: &str) -> Result<Vec<i64>, Failure> {
    let mut coords = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let v: i64 = part.parse().map_err(|_| {
            Failure::Input(format!("weight coordinates must be integers, got {part:?}"))
        })?;
        if v < 0 {
            return Err(Failure::Input(format!(
                "weight coordinates must be nonnegative, got {v}"
            )));
        }
        coords.push(v);
    }
    Ok(coords)
}

fn weight_a(coords: Vec<i64>, max_rank: Option<usize>) -> Result<WeightA, Failure> {
    let lambda = WeightA::new(coords).map_err(input)?;
    check_rank(TypeArg::A, lambda.rank(), max_rank)?;
    Ok(lambda)
}

fn weight_c(coords: Vec<i64>, max_rank: Option<usize>) -> Result<WeightC, Failure> {
    let lambda = WeightC::new(coords).map_err(input)?;
    check_rank(TypeArg::C, lambda.rank(), max_rank)?;
    Ok(lambda)
}

fn cmd_vertices(args: &WeightArgs, max_rank: Option<usize>) -> Result<Report, Failure> {
    let coords = parse_weight(&args.weight)?;
    let mut entries = Vec::new();
    let mut rows = vec![vec![
        "#".to_string(),
        "point".to_string(),
        "tight".to_string(),
        "certificate".to_string(),
    ]];
    let (n, count, ty) = match args.r#type {
        TypeArg::A => {
            let lambda = weight_a(coords.clone(), max_rank)?;
            let h = hrep_a(&lambda);
            let verts = enumerate_vertices_a(&lambda);
            for (k, v) in verts.iter().enumerate() {
                let tight = tight_rows(&h, v.point.entries())
                    .expect("enumerated vertex is feasible")
                    .len();
                entries.push(json!({
                    "certificate": output::certificate_json(&v.certificate),
                    "point": output::triangle_a_json(&v.point),
                    "tight_rows": tight,
                }));
                rows.push(vec![
                    (k + 1).to_string(),
                    output::triangle_a_compact(&v.point),
                    tight.to_string(),
                    output::certificate_compact(&v.certificate),
                ]);
            }
            (lambda.rank(), verts.len(), "A")
        }
        TypeArg::C => {
            let lambda = weight_c(coords.clone(), max_rank)?;
            let h = hrep_c(&lambda);
            let verts = enumerate_vertices_c(&lambda);
            for (k, v) in verts.iter().enumerate() {
                let tight = tight_rows(&h, v.point.entries())
                    .expect("enumerated vertex is feasible")
                    .len();
                entries.push(json!({
                    "certificate": output::certificate_json(&v.certificate),
                    "point": output::triangle_c_json(&v.point),
                    "tight_rows": tight,
                }));
                rows.push(vec![
                    (k + 1).to_string(),
                    output::triangle_c_compact(&v.point),
                    tight.to_string(),
                    output::certificate_compact(&v.certificate),
                ]);
            }
            (lambda.rank(), verts.len(), "C")
        }
    };
    let json = json!({
        "command": "vertices",
        "count": count,
        "n": n,
        "type": ty,
        "vertices": entries,
        "weight": coords,
    });
    let table = format!(
        "vertices  type {ty}  n={n}  weight {}\ncount: {count}\n{}",
        output::weight_compact(&coords),
        output::aligned(&rows)
    );
    Ok(Report::ok(json, table))
}

fn cmd_perm(args: &WeightArgs, max_rank: Option<usize>) -> Result<Report, Failure> {
    let coords = parse_weight(&args.weight)?;
    let mut entries = Vec::new();
    let mut rows = vec![vec![
        "family".to_string(),
        "point".to_string(),
        "w".to_string(),
        "mu".to_string(),
        "b".to_string(),
    ]];
    let (n, count, ty) = match args.r#type {
        TypeArg::A => {
            let lambda = weight_a(coords.clone(), max_rank)?;
            let verts = permutation_vertices_a(&lambda);
            for v in &verts {
                let mu = weight_of_point_a(&lambda, &v.point);
                let b = pbw_degree(&lambda, &v.family).expect("family is admissible");
                entries.push(json!({
                    "b": format_rat(&b),
                    "family": output::family_json(&v.family),
                    "mu": output::eps_json(&mu),
                    "perm": output::perm_json(&v.perm),
                    "point": output::triangle_a_json(&v.point),
                }));
                rows.push(vec![
                    output::family_compact(&v.family),
                    output::triangle_a_compact(&v.point),
                    output::perm_compact(&v.perm),
                    output::eps_compact(&mu),
                    format_rat(&b),
                ]);
            }
            (lambda.rank(), verts.len(), "A")
        }
        TypeArg::C => {
            let lambda = weight_c(coords.clone(), max_rank)?;
            let verts = permutation_vertices_c(&lambda);
            for v in &verts {
                let mu = weight_of_point_c(&lambda, &v.point);
                let b = v.point.sum();
                entries.push(json!({
                    "b": format_rat(&b),
                    "family": output::family_json(&v.family),
                    "mu": output::eps_json(&mu),
                    "point": output::triangle_c_json(&v.point),
                    "signed_perm": output::signed_perm_json(&v.perm),
                }));
                rows.push(vec![
                    output::family_compact(&v.family),
                    output::triangle_c_compact(&v.point),
                    output::signed_perm_compact(&v.perm),
                    output::eps_compact(&mu),
                    format_rat(&b),
                ]);
            }
            (lambda.rank(), verts.len(), "C")
        }
    };
    let json = json!({
        "command": "perm",
        "count": count,
        "entries": entries,
        "n": n,
        "type": ty,
        "weight": coords,
    });
    let table = format!(
        "permutation vertices  type {ty}  n={n}  weight {}\ncount: {count}\n{}",
        output::weight_compact(&coords),
        output::aligned(&rows)
    );
    Ok(Report::ok(json, table))
}

fn cmd_simple(args: &WeightArgs, max_rank: Option<usize>) -> Result<Report, Failure> {
    let coords = parse_weight(&args.weight)?;
    let mut entries = Vec::new();
    let mut rows = vec![vec![
        "family".to_string(),
        "point".to_string(),
        "w".to_string(),
        "oracle".to_string(),
    ]];
    let (n, count, ty, schroder) = match args.r#type {
        TypeArg::A => {
            let lambda = weight_a(coords.clone(), max_rank)?;
            if !lambda.is_regular() {
                return Err(Failure::Input(format!(
                    "the simple-vertex classification requires a regular weight (all coordinates positive), got {coords:?}"
                )));
            }
            let h = hrep_a(&lambda);
            let verts = simple_vertices_a(&lambda).map_err(input)?;
            for (family, point) in &verts {
                let w = perm_of_family(family, lambda.rank()).expect("family is admissible");
                let confirmed = matches!(is_simple_oracle(&h, point.entries()), Ok(true));
                entries.push(json!({
                    "family": output::family_json(family),
                    "oracle_simple": confirmed,
                    "perm": output::perm_json(&w),
                    "point": output::triangle_a_json(point),
                }));
                rows.push(vec![
                    output::family_compact(family),
                    output::triangle_a_compact(point),
                    output::perm_compact(&w),
                    if confirmed { "ok" } else { "FAIL" }.to_string(),
                ]);
            }
            let schroder = large_schroder(lambda.rank() - 1);
            (lambda.rank(), verts.len(), "A", Some(schroder))
        }
        TypeArg::C => {
            let lambda = weight_c(coords.clone(), max_rank)?;
            if !lambda.is_regular() {
                return Err(Failure::Input(format!(
                    "the simple-vertex classification requires a regular weight (all coordinates positive), got {coords:?}"
                )));
            }
            let h = hrep_c(&lambda);
            let verts = simple_vertices_c(&lambda).map_err(input)?;
            for (family, point) in &verts {
                let w = signed_perm_of_family(family, lambda.rank()).expect("family is admissible");
                let confirmed = matches!(is_simple_oracle(&h, point.entries()), Ok(true));
                entries.push(json!({
                    "family": output::family_json(family),
                    "oracle_simple": confirmed,
                    "point": output::triangle_c_json(point),
                    "signed_perm": output::signed_perm_json(&w),
                }));
                rows.push(vec![
                    output::family_compact(family),
                    output::triangle_c_compact(point),
                    output::signed_perm_compact(&w),
                    if confirmed { "ok" } else { "FAIL" }.to_string(),
                ]);
            }
            (lambda.rank(), verts.len(), "C", None)
        }
    };
    let mut json = json!({
        "command": "simple",
        "count": count,
        "entries": entries,
        "n": n,
        "type": ty,
        "weight": coords,
    });
    let mut head = format!(
        "simple vertices  type {ty}  n={n}  weight {}\ncount: {count}\n",
        output::weight_compact(&coords)
    );
    if let Some(s) = schroder {
        let matches = int(count as i64) == s;
        json["schroder"] = json!(s.to_string());
        json["schroder_match"] = json!(matches);
        head.push_str(&format!("large Schroder number: {s}  match: {matches}\n"));
    }
    let table = format!("{head}{}", output::aligned(&rows));
    Ok(Report::ok(json, table))
}

fn parse_segments(s: &str) -> Result<Vec<Seg>, Failure> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in t.split(',') {
        let part = part.trim();
        let Some((a, b)) = part.split_once('-') else {
            return Err(Failure::Input(format!(
                "segments must look like i-j, got {part:?}"
            )));
        };
        let i: usize = a
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("bad segment endpoint in {part:?}")))?;
        let j: usize = b
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("bad segment endpoint in {part:?}")))?;
        if i == 0 || j <= i {
            return Err(Failure::Input(format!(
                "a segment needs 1 <= i < j, got {part:?}"
            )));
        }
        out.push(Seg::new(i, j));
    }
    Ok(out)
}

fn cmd_psi(segments: &str, n: usize, max_rank: Option<usize>) -> Result<Report, Failure> {
    if n < 2 {
        return Err(Failure::Input(format!("rank must be at least 2, got {n}")));
    }
    check_rank(TypeArg::A, n, max_rank)?;
    let segs = parse_segments(segments)?;
    for s in &segs {
        if s.j > n {
            return Err(Failure::Input(format!(
                "segment {}-{} does not fit in [1, {n}]",
                s.i, s.j
            )));
        }
    }
    let family = SegmentFamily::new(segs);
    let w = perm_of_family(&family, n).map_err(input)?;
    let json = json!({
        "command": "psi",
        "n": n,
        "perm": output::perm_json(&w),
        "segments": output::family_json(&family),
    });
    let table = format!("{}\n", output::perm_compact(&w));
    Ok(Report::ok(json, table))
}

fn cmd_psi_inv(perm: &str, max_rank: Option<usize>) -> Result<Report, Failure> {
    let mut images = Vec::new();
    for part in perm.split(',') {
        let part = part.trim();
        let v: usize = part
            .parse()
            .map_err(|_| Failure::Input(format!("permutation images must be integers, got {part:?}")))?;
        images.push(v);
    }
    let w = PermA::from_images(images).map_err(input)?;
    let n = w.n();
    if n < 2 {
        return Err(Failure::Input(format!("rank must be at least 2, got {n}")));
    }
    check_rank(TypeArg::A, n, max_rank)?;
    let family = family_of_perm(&w);
    let json = json!({
        "command": "psi-inv",
        "family": output::family_json(&family),
        "n": n,
        "perm": output::perm_json(&w),
    });
    let table = format!("{}\n", output::family_compact(&family));
    Ok(Report::ok(json, table))
}

fn poly_string(poly: &BTreeMap<Int, Int>) -> String {
    let one = int(1);
    let mut parts = Vec::new();
    for (e, c) in poly {
        let part = if e == &int(0) {
            c.to_string()
        } else {
            let q = if e == &one {
                "q".to_string()
            } else {
                format!("q^{e}")
            };
            if c == &one {
                q
            } else {
                format!("{c}{q}")
            }
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn cmd_char(args: &WeightArgs, max_rank: Option<usize>) -> Result<Report, Failure> {
    if args.r#type == TypeArg::C {
        return Err(Failure::Input(
            "char supports type A only".to_string(),
        ));
    }
    let coords = parse_weight(&args.weight)?;
    let lambda = weight_a(coords.clone(), max_rank)?;
    let poly = pbw_poly(&lambda);
    let terms: Vec<Value> = poly
        .iter()
        .map(|(e, c)| {
            json!({
                "coeff": c.to_string(),
                "exponent": e.to_string(),
            })
        })
        .collect();
    let pretty = poly_string(&poly);
    let json = json!({
        "command": "char",
        "n": lambda.rank(),
        "polynomial": pretty,
        "terms": terms,
        "type": "A",
        "weight": coords,
    });
    let table = format!("{pretty}\n");
    Ok(Report::ok(json, table))
}

fn cmd_lattice_count(
    args: &WeightArgs,
    max_rank: Option<usize>,
    budget: u64,
) -> Result<Report, Failure> {
    let coords = parse_weight(&args.weight)?;
    let (n, ty, points, oracle, dim) = match args.r#type {
        TypeArg::A => {
            let lambda = weight_a(coords.clone(), max_rank)?;
            let points = lattice_points_a(&lambda, budget).map_err(from_lib)?.len();
            let oracle = count_lattice(&hrep_a(&lambda), budget).map_err(from_lib)?;
            let dim = weyl_dim_a(&lambda);
            (lambda.rank(), "A", points, oracle, dim)
        }
        TypeArg::C => {
            let lambda = weight_c(coords.clone(), max_rank)?;
            let points = lattice_points_c(&lambda, budget).map_err(from_lib)?.len();
            let oracle = count_lattice(&hrep_c(&lambda), budget).map_err(from_lib)?;
            let dim = weyl_dim_c(&lambda);
            (lambda.rank(), "C", points, oracle, dim)
        }
    };
    let matched = int(points as i64) == oracle && oracle == dim;
    let json = json!({
        "command": "lattice-count",
        "count": points.to_string(),
        "match": matched,
        "n": n,
        "oracle_count": oracle.to_string(),
        "type": ty,
        "weight": coords,
        "weyl_dim": dim.to_string(),
    });
    let table = format!(
        "lattice points  type {ty}  n={n}  weight {}\nenumerated: {points}\noracle:     {oracle}\nweyl dim:   {dim}\nmatch: {matched}\n",
        output::weight_compact(&coords)
    );
    Ok(Report::ok(json, table))
}
