use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use manin::catalog::{
    check_dual_link, count_classes, default_samples, entries, entry, export_json, import_json, solver_cross_check,
    verify_catalog, verify_entry, CatalogEntry, DualLinkCheck, EntryReport,
};
use manin::exact::{parse_assignment, Assignment, RatFunc, Rational, Scalar};
use manin::liealg::{algebra_from_json, classify_bianchi, na_decompose, BianchiClass, StructureConstants};
use manin::manin::{double_to_json, DoubleAlgebra};
use manin::solver::{compare_with_reference, dual_jacobi_ideal, solve_dual_family, SamplingConfig};
use manin::Error;

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "manin",
    version,
    about = "Exact tools for 3-dimensional Lie bialgebras and their Manin triples"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a 3-dimensional Lie algebra given as structure-constant JSON.
    Classify { path: PathBuf },
    /// Solve the mixed Jacobi identities for all dual algebras of a Bianchi type.
    SolveDuals {
        /// Bianchi class, e.g. IX, VI_a or VIIa.
        class: String,
        /// Fix the parameter of VI_a / VII_a, e.g. `a=2`. Without it `a` stays symbolic.
        #[arg(long)]
        param: Option<String>,
        /// Seed for the sampling comparison with the reference conditions.
        #[arg(long, default_value_t = SamplingConfig::default().seed)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print every nonzero bracket of the 6-dimensional double of a catalog entry.
    Double {
        id: String,
        /// Parameter values such as `b=1` or `a=2,b=-1`. Parameters left out stay symbolic.
        #[arg(long, value_delimiter = ',')]
        values: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Verify every catalog entry: Jacobi identities, type claims and the double.
    VerifyCatalog {
        /// Sample assignments replacing the defaults, e.g. `--samples a=2,b=1`.
        /// Repeat the flag for several samples.
        #[arg(long, value_name = "ASSIGNMENT")]
        samples: Vec<String>,
        /// Verify a catalog JSON file instead of the built-in catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Seed for the sampling comparison with the reference conditions.
        #[arg(long, default_value_t = SamplingConfig::default().seed)]
        seed: u64,
        /// Also confirm every dual link by witness search (slow).
        #[arg(long)]
        links: bool,
    },
    /// Pretty-print one catalog entry.
    Show { id: String },
    /// Write the catalog to a file.
    Export {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        path: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotLieAlgebra
            | Error::JacobiViolation { .. }
            | Error::ClaimMismatch { .. }
            | Error::InvalidEntry { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { path } => classify(&path),
        Command::SolveDuals {
            class,
            param,
            seed,
            json,
        } => solve_duals(&class, param.as_deref(), seed, json),
        Command::Double { id, values, json } => double(&id, &values, json),
        Command::VerifyCatalog {
            samples,
            catalog,
            seed,
            links,
        } => verify(&samples, catalog.as_deref(), seed, links),
        Command::Show { id } => show(&id),
        Command::Export { format, path } => export(format, &path),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_VERIFICATION)
        }
    }
}

fn read(path: &std::path::Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn lookup(id: &str) -> Result<CatalogEntry, Failure> {
    entry(id).ok_or_else(|| Failure::Usage(Error::UnknownEntry(id.to_string()).to_string()))
}

fn vector(v: &[Rational; 3]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn classify(path: &std::path::Path) -> CmdResult {
    let f = algebra_from_json(&read(path)?)?.to_rational()?;
    let ty = classify_bianchi(&f)?;
    let na = na_decompose(&f)?;
    println!("type: {ty}");
    let unimodular = na.a_vec.iter().all(Rational::is_zero);
    println!(
        "class: {}",
        if unimodular {
            "A (unimodular)"
        } else {
            "B (non-unimodular)"
        }
    );
    println!("a: {}", vector(&na.a_vec));
    let rows: Vec<String> = na.n_mat.iter().map(vector).collect();
    println!("n: [{}]", rows.join(", "));
    Ok(())
}

fn solve_duals(class: &str, param: Option<&str>, seed: u64, json: bool) -> CmdResult {
    let class: BianchiClass = class.parse()?;
    let (dim, relations, ideal) = match param {
        Some(p) => {
            if !class.is_parametric() {
                return Err(Failure::Usage(format!("{class} has no parameter")));
            }
            let values = parse_assignment(p.split(','))?;
            let a = values
                .get("a")
                .cloned()
                .ok_or_else(|| Failure::Usage("expected --param a=<value>".into()))?;
            family_summary(&class.form_at(a))?
        }
        None => family_summary(&class.symbolic_form())?,
    };
    let config = SamplingConfig {
        seed,
        ..SamplingConfig::default()
    };
    let reference = compare_with_reference(class, &config)?;
    if json {
        let doc = serde_json::json!({
            "algebra": class.name(),
            "nullspace_dim": dim,
            "relations": relations,
            "ideal": ideal,
            "appendix_match": reference.matches(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        return Ok(());
    }
    println!("algebra: {class}");
    let ideal_text = if ideal.is_empty() {
        "empty".to_string()
    } else {
        format!("{} generator(s)", ideal.len())
    };
    println!("nullspace_dim: {dim}, ideal: {ideal_text}");
    println!("relations:");
    for r in &relations {
        println!("  {r}");
    }
    if !ideal.is_empty() {
        println!("ideal generators:");
        for g in &ideal {
            println!("  {g} = 0");
        }
    }
    println!("appendix_match: {}", reference.matches());
    Ok(())
}

fn family_summary<S: Scalar>(f: &StructureConstants<S>) -> Result<(usize, Vec<String>, Vec<String>), Failure> {
    let fam = solve_dual_family(f)?;
    let ideal = dual_jacobi_ideal(&fam);
    Ok((fam.dim(), fam.relation_strings(), ideal.generator_strings()))
}

fn double(id: &str, values: &[String], json: bool) -> CmdResult {
    let e = lookup(id)?;
    let values = parse_assignment(values.iter().map(String::as_str))?;
    let subs = values
        .iter()
        .map(|(k, v)| (k.clone(), RatFunc::constant(v.clone())))
        .collect();
    for c in e.param_constraints() {
        let poly = c.poly.substitute(&subs)?;
        if let Some(v) = poly.as_constant() {
            if !c.rel.holds(&v) {
                return Err(Failure::Usage(format!("{id}: constraint {c} violated")));
            }
        }
    }
    let triple = manin::manin::ManinTriple::unchecked(
        e.triple.f().substitute(&subs)?,
        e.triple.f_dual().substitute(&subs)?,
        e.param_constraints().to_vec(),
    );
    let d = DoubleAlgebra::build(&triple)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&double_to_json(&d)).expect("serializable")
        );
    } else {
        for line in d.bracket_lines() {
            println!("{line}");
        }
    }
    Ok(())
}

/// Restricts each requested sample to the entry's parameters and drops those
/// violating its constraints; falls back to the defaults when none remain.
fn samples_for(e: &CatalogEntry, requested: &[Assignment]) -> Vec<Assignment> {
    let params = e.parameters();
    let mut out: Vec<Assignment> = Vec::new();
    for s in requested {
        let mut v: Assignment = s
            .iter()
            .filter(|(k, _)| params.contains(k))
            .map(|(k, x)| (k.clone(), x.clone()))
            .collect();
        for p in &params {
            if !v.contains_key(p) {
                if let Some(d) = default_samples(e).into_iter().next().and_then(|d| d.get(p).cloned()) {
                    v.insert(p.clone(), d);
                }
            }
        }
        if e.param_constraints().iter().all(|c| c.check(&v).is_ok()) && !out.contains(&v) {
            out.push(v);
        }
    }
    if out.is_empty() {
        default_samples(e)
    } else {
        out
    }
}

fn verify(samples: &[String], catalog: Option<&std::path::Path>, seed: u64, links: bool) -> CmdResult {
    let builtin = catalog.is_none();
    let list = match catalog {
        Some(p) => {
            read(p)?;
            import_json(p)?
        }
        None => entries(),
    };
    let requested: Vec<Assignment> = samples
        .iter()
        .map(|s| parse_assignment(s.split(',')))
        .collect::<manin::Result<_>>()?;
    let reports: Vec<EntryReport> = if requested.is_empty() {
        verify_catalog(&list)
    } else {
        list.iter()
            .map(|e| verify_entry(e, &samples_for(e, &requested)))
            .collect()
    };
    let mut problems: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .flat_map(|r| r.failures())
        .collect();

    for id in solver_cross_check(&list)? {
        problems.push(format!("{id}: second algebra is not in the solver's family"));
    }
    let config = SamplingConfig {
        seed,
        ..SamplingConfig::default()
    };
    for class in BianchiClass::ALL {
        if !compare_with_reference(class, &config)?.matches() {
            problems.push(format!(
                "{class}: solved relations differ from the reference conditions"
            ));
        }
    }
    if builtin {
        let counts = count_classes(&list);
        if (counts.total, counts.up_to_duality, counts.self_dual) != (78, 44, 10) {
            problems.push(format!(
                "counts {}/{}/{} instead of 78/44/10",
                counts.total, counts.up_to_duality, counts.self_dual
            ));
        }
    }
    if links {
        for e in &list {
            if check_dual_link(e, &list)? == DualLinkCheck::NotConfirmed {
                problems.push(format!("{}: dual link not confirmed", e.id));
            }
        }
    }

    if problems.is_empty() {
        println!("{} classes verified", list.len());
        Ok(())
    } else {
        for p in &problems {
            println!("{p}");
        }
        Err(Failure::Verification(format!("{} problem(s)", problems.len())))
    }
}

fn show(id: &str) -> CmdResult {
    let e = lookup(id)?;
    println!("{}: ({}, {})", e.id, e.g_type, e.g_dual_type);
    if let Some(d) = &e.dual_of {
        println!("dual: {d}");
    }
    if e.self_dual {
        println!("self-dual");
    }
    println!("{}", e.triple.pretty());
    Ok(())
}

fn export(format: Format, path: &std::path::Path) -> CmdResult {
    match format {
        Format::Json => export_json(path, &entries())?,
    }
    println!("wrote {} entries to {}", entries().len(), path.display());
    Ok(())
}
