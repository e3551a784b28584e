use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use m23_core::extension::{extend, generator_f, generator_g, generator_h, m24_test, search_beta, ExtensionCandidate};
use m23_core::group::{bfs_closure, spin_all, DEFAULT_CLOSURE_CAP};
use m23_core::perm::group_order;
use m23_core::poly::{irreducibility_witness, Gf2Poly, Irreducibility};
use m23_core::report::{verification_report, ReportOptions, Section};
use m23_core::subgroup::doubling_orbit;
use m23_core::tables::{emit_table, split_rows, Construction, TableId};
use m23_core::{CSubgroup, FieldSpec, Permutation, SubgroupSpec};

/// Build and check the 11-dimensional GF(2) representation of M23.
#[derive(Parser, Debug)]
#[command(name = "m23", version)]
struct Cli {
    /// Field modulus, as a binary string or an exponent list like 11,2,0.
    #[arg(long, global = true, default_value = "11,2,0")]
    modulus: Gf2Poly,
    /// alpha = X^ALPHA_EXP must have order 23.
    #[arg(long, global = true, default_value_t = 89)]
    alpha_exp: u64,
    /// beta = alpha^BETA_EXP.
    #[arg(long, global = true, default_value_t = 5, allow_negative_numbers = true)]
    beta_exp: i64,
    /// Element limit for the matrix closure.
    #[arg(long, global = true, default_value_t = DEFAULT_CLOSURE_CAP)]
    closure_cap: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Regenerate one of the published tables.
    Tables {
        #[arg(long)]
        id: TableId,
        /// First X exponent (x-powers only).
        #[arg(long)]
        from: Option<u64>,
        /// Last X exponent (x-powers only).
        #[arg(long)]
        to: Option<u64>,
    },
    /// Try to extend a permutation of C to a linear map.
    Extend {
        /// Cycle notation on 1..23, or `f` for (1,2,...,23).
        #[arg(long)]
        perm: Permutation,
    },
    /// Run the extension for every beta exponent 1..22.
    SearchBeta {
        #[arg(long)]
        perm: Permutation,
    },
    /// Order of <f, g>.
    Order {
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Spin every nonzero vector under the generator matrices.
    Irreducible,
    /// Check the modulus and exhibit a factor if it is reducible.
    IsIrreducible {
        /// Defaults to the field modulus.
        poly: Option<Gf2Poly>,
    },
    /// Additivity test for the involution h on the doubling orbit of beta.
    M24,
    /// Run the whole verification suite.
    Verify {
        /// Sections to leave out.
        #[arg(long, value_delimiter = ',')]
        skip: Vec<Section>,
        /// Record per-check wall time (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Ss,
    Bfs,
    Both,
}

const FAIL: u8 = 1;
const USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn subgroup(cli: &Cli) -> Result<CSubgroup, String> {
    let field = FieldSpec::new(cli.modulus).map_err(|e| e.to_string())?;
    let spec = SubgroupSpec { alpha_exp: cli.alpha_exp, beta_exp: cli.beta_exp, subgroup_order: 23 };
    CSubgroup::new(field, spec).map_err(|e| e.to_string())
}

fn construction(cli: &Cli) -> Result<Construction, String> {
    Construction::new(subgroup(cli)?).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Tables { id, from, to } => tables(&cli, *id, *from, *to),
        Command::Extend { perm } => run_extend(&cli, perm),
        Command::SearchBeta { perm } => run_search(&cli, perm),
        Command::Order { method } => order(&cli, *method),
        Command::Irreducible => irreducible(&cli),
        Command::IsIrreducible { poly } => is_irreducible(&cli, poly.unwrap_or(cli.modulus)),
        Command::M24 => m24(&cli),
        Command::Verify { skip, timings } => verify(&cli, skip, *timings),
    }
}

fn tables(cli: &Cli, id: TableId, from: Option<u64>, to: Option<u64>) -> ExitCode {
    let k = match construction(cli) {
        Ok(k) => k,
        Err(e) => return usage(e),
    };
    let range = match (from, to) {
        (None, None) => None,
        (f, t) => Some(f.unwrap_or(11)..=t.unwrap_or(100)),
    };
    let text = match emit_table(&k, id, range) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    if cli.json {
        print_json(&json!({ "table": id, "rows": split_rows(id, &text) }));
    } else {
        print!("{text}");
    }
    ExitCode::SUCCESS
}

fn run_extend(cli: &Cli, perm: &Permutation) -> ExitCode {
    let c = match subgroup(cli) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let report = match ExtensionCandidate::new(perm.clone(), cli.beta_exp).and_then(|cand| extend(&c, &cand)) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    if cli.json {
        print_json(&report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FAIL)
    }
}

fn run_search(cli: &Cli, perm: &Permutation) -> ExitCode {
    let c = match subgroup(cli) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let s = match search_beta(&c, perm) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    if cli.json {
        let mut v = serde_json::to_value(&s).expect("serializable");
        v["union_of_doubling_orbits"] = json!(s.is_union_of_orbits());
        print_json(&v);
        return ExitCode::SUCCESS;
    }
    for v in &s.verdicts {
        let outcome = match v.first_failure {
            None => "extends".to_string(),
            Some(k) => format!("fails at a^{k}"),
        };
        println!("b = a^{:<2}  orbit {:<2}  {outcome}", v.beta_exp, v.orbit_label);
    }
    println!("success set: {:?}", s.success_set);
    println!("union of doubling orbits: {}", s.is_union_of_orbits());
    ExitCode::SUCCESS
}

fn order(cli: &Cli, method: Method) -> ExitCode {
    let mut ss = None;
    let mut bfs = None;
    if method != Method::Bfs {
        let start = Instant::now();
        match group_order(&[generator_f(), generator_g()]) {
            Ok(n) => ss = Some(n),
            Err(e) => return usage(e),
        }
        eprintln!("schreier-sims done in {:.1?}", start.elapsed());
    }
    if method != Method::Ss {
        let k = match construction(cli) {
            Ok(k) => k,
            Err(e) => return usage(e),
        };
        let (Some(f), Some(g)) = (k.f_a, k.g_a) else {
            eprintln!("generators do not extend for beta = a^{}", cli.beta_exp);
            return ExitCode::from(FAIL);
        };
        let start = Instant::now();
        let res = bfs_closure(&[f, g], cli.closure_cap, |gen, n| eprintln!("generation {gen}: {n} elements"))
            .expect("generators are invertible 11x11 matrices");
        eprintln!("closure done in {:.1?}", start.elapsed());
        bfs = Some(res);
    }
    let exact_bfs = bfs.filter(|r| !r.cap_hit).map(|r| u128::from(r.element_count));
    let ok = match method {
        Method::Ss => true,
        Method::Bfs => exact_bfs.is_some(),
        Method::Both => exact_bfs.is_some() && exact_bfs == ss,
    };
    if cli.json {
        print_json(&json!({
            "schreier_sims": ss.map(|n| n as u64),
            "bfs": bfs,
            "agree": (method == Method::Both).then_some(ok),
        }));
    } else {
        if let Some(n) = ss {
            println!("schreier-sims: {n}");
        }
        if let Some(r) = bfs {
            if r.cap_hit {
                println!("bfs: cap of {} reached, order exceeds it", cli.closure_cap);
            } else {
                println!("bfs: {} ({} generations)", r.element_count, r.frontier_generations);
            }
        }
        if method == Method::Both {
            println!("{}", if ok { "agree" } else { "DISAGREE" });
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FAIL)
    }
}

fn irreducible(cli: &Cli) -> ExitCode {
    let k = match construction(cli) {
        Ok(k) => k,
        Err(e) => return usage(e),
    };
    let (Some(f), Some(g)) = (k.f_a, k.g_a) else {
        eprintln!("generators do not extend for beta = a^{}", cli.beta_exp);
        return ExitCode::from(FAIL);
    };
    let s = spin_all(&[f, g]).expect("generators present");
    if cli.json {
        print_json(&serde_json::to_value(&s).expect("serializable"));
    } else if s.irreducible {
        println!("all {} spins reach dimension {}", s.vectors_checked, f.dim());
    } else {
        println!(
            "reducible: vector {:0width$b} spins to dimension {}",
            s.first_proper.unwrap_or(0),
            s.min_dimension,
            width = f.dim()
        );
    }
    if s.irreducible {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FAIL)
    }
}

fn is_irreducible(cli: &Cli, p: Gf2Poly) -> ExitCode {
    let w = irreducibility_witness(p);
    let factor = match w {
        Irreducibility::Irreducible => None,
        Irreducibility::Factor(q) => Some(q),
    };
    if cli.json {
        print_json(&json!({
            "polynomial": p.to_string(),
            "irreducible": factor.is_none(),
            "factor": factor.map(|q| q.to_string()),
        }));
    } else {
        match factor {
            None => println!("{p} is irreducible"),
            Some(q) => println!("{p} is reducible: divisible by {q}"),
        }
    }
    ExitCode::SUCCESS
}

fn m24(cli: &Cli) -> ExitCode {
    let c = match subgroup(cli) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let h = generator_h();
    let mut verdicts = Vec::new();
    for b in doubling_orbit(cli.beta_exp.rem_euclid(23) as u32) {
        match m24_test(&c, &h, i64::from(b)) {
            Ok(v) => verdicts.push(v),
            Err(e) => return usage(e),
        }
    }
    if cli.json {
        print_json(&serde_json::to_value(&verdicts).expect("serializable"));
        return ExitCode::SUCCESS;
    }
    println!("h = {}", h);
    for v in &verdicts {
        match &v.violation {
            None => println!("b = a^{:<2}  consistent on {} points", v.beta_exp, v.checked_points.len()),
            Some(x) => println!(
                "b = a^{:<2}  inconsistent at point {}: expected b^{}, got {}, discrepancy {} (relation on {:?})",
                v.beta_exp,
                x.point,
                x.expected,
                x.computed.to_binary_string(),
                x.discrepancy.to_binary_string(),
                x.relation
            ),
        }
    }
    ExitCode::SUCCESS
}

fn verify(cli: &Cli, skip: &[Section], timings: bool) -> ExitCode {
    let opts = ReportOptions {
        modulus: cli.modulus,
        subgroup: SubgroupSpec { alpha_exp: cli.alpha_exp, beta_exp: cli.beta_exp, subgroup_order: 23 },
        closure_cap: cli.closure_cap,
        disabled: skip.to_vec(),
        timings,
    };
    let report = match verification_report(&opts, |s| eprintln!("running {s}")) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    if cli.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(report.exit_code() as u8)
}
