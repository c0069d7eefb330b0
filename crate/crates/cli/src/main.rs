use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use coxlehmer::codes::{code_by_name, LehmerCode};
use coxlehmer::coxeter::{cache, BruhatPoset, CoxeterSystem, Group, TypeLabel};
use coxlehmer::input::{element_from_one_line, element_from_word};
use coxlehmer::intervals::{pal_set, CodedGroup, HRoute, DEFAULT_MAXIMA_BOUND};
use coxlehmer::verify::{self, VerifyConfig};
use coxlehmer::{ElementId, Error};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "coxlehmer",
    version,
    about = "Lehmer codes of finite Coxeter groups"
)]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory for cached Bruhat posets.
    #[arg(long, global = true, env = "COXLEHMER_CACHE")]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print L(w) and l(w).
    Code(ElementArgs),
    /// Print the h-polynomial of the lower interval [e, w].
    Hpoly {
        #[command(flatten)]
        element: ElementArgs,
        /// direct, complex, maduro or all.
        #[arg(long, default_value = "direct")]
        route: String,
        /// Largest number of maxima for the inclusion-exclusion route.
        #[arg(long, default_value_t = DEFAULT_MAXIMA_BOUND)]
        max_maxima: usize,
    },
    /// Print the complex of the ideal L([e, w]) as JSON.
    Complex(ElementArgs),
    /// List principal and unimodal elements and the palindromic polynomials.
    Classify(SystemArgs),
    /// Run a check suite.
    Verify {
        /// Suite name, or `all`.
        suite: String,
        /// Largest rank of the systems a suite builds.
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        /// Symmetric group S_n for the permutation suites.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Sampled ideals and linear extensions per sampling step.
        #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
        samples: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct SystemArgs {
    /// A, B, D, H3 or I2.
    #[arg(long = "type")]
    type_label: String,
    #[arg(long)]
    rank: Option<usize>,
    /// Dihedral order for I2(m).
    #[arg(long)]
    m: Option<u32>,
    /// standard, dual, variant or dual-variant (type B).
    #[arg(long, default_value = "standard")]
    code: String,
    /// Refuse groups with more elements than this.
    #[arg(long, default_value_t = coxlehmer::coxeter::DEFAULT_POSET_LIMIT)]
    max_elements: usize,
}

#[derive(Args, Clone)]
struct ElementArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Generator word such as "s2 s1 s3 s2" (1-based; "s0" in type D).
    #[arg(long, conflicts_with = "perm")]
    word: Option<String>,
    /// One-line notation such as 3412 or -2,-1,3,4.
    #[arg(long, conflicts_with = "longest")]
    perm: Option<String>,
    /// Use the longest element w0.
    #[arg(long, conflicts_with = "word")]
    longest: bool,
}

fn system_of(a: &SystemArgs) -> Result<CoxeterSystem, Error> {
    let label: TypeLabel = a.type_label.parse()?;
    let rank = match (label, a.rank) {
        (_, Some(r)) => r,
        (TypeLabel::H3, None) => 3,
        (TypeLabel::I2, None) => 2,
        (_, None) => {
            return Err(Error::InvalidSystem {
                label: a.type_label.clone(),
                reason: "--rank is required for this type".into(),
            })
        }
    };
    CoxeterSystem::build(label, rank, a.m)
}

fn poset_of(a: &SystemArgs, cache_dir: Option<&PathBuf>) -> Result<BruhatPoset, Error> {
    let sys = system_of(a)?;
    if sys.order() > a.max_elements {
        return Err(Error::LimitExceeded {
            order: sys.order(),
            limit: a.max_elements,
        });
    }
    match cache_dir {
        Some(dir) => cache::load_or_build(sys, dir),
        None => BruhatPoset::build(sys),
    }
}

fn element_of(g: &Group, a: &ElementArgs) -> Result<ElementId, Error> {
    if a.longest {
        return Ok(g.longest());
    }
    match (&a.word, &a.perm) {
        (_, Some(p)) => element_from_one_line(g, p),
        (Some(w), None) => element_from_word(g, w),
        (None, None) => Ok(g.identity()),
    }
}

struct Setup {
    poset: BruhatPoset,
    code: LehmerCode,
}

fn setup(a: &SystemArgs, cache_dir: Option<&PathBuf>) -> Result<Setup, Error> {
    let poset = poset_of(a, cache_dir)?;
    let code = code_by_name(&poset, &a.code)?;
    Ok(Setup { poset, code })
}

fn print_json(v: &serde_json::Value) {
    let _ = writeln!(
        std::io::stdout(),
        "{}",
        serde_json::to_string_pretty(v).expect("json")
    );
}

fn cmd_code(cli: &Cli, a: &ElementArgs) -> Result<u8, Error> {
    let s = setup(&a.system, cli.cache.as_ref())?;
    let g = s.poset.group();
    let w = element_of(g, a)?;
    let v = s.code.vector(w);
    match cli.format {
        Format::Text => {
            println!("{v}");
            println!("length {}", g.length(w));
        }
        Format::Json => print_json(&json!({
            "system": g.system().name(),
            "code": s.code.name(),
            "element": g.display(w),
            "word": g.word_string(w),
            "lehmer": v,
            "length": g.length(w),
        })),
    }
    Ok(0)
}

fn cmd_hpoly(cli: &Cli, a: &ElementArgs, route: &str, bound: usize) -> Result<u8, Error> {
    let s = setup(&a.system, cli.cache.as_ref())?;
    let cg = CodedGroup::new(&s.poset, &s.code)?;
    let g = s.poset.group();
    let w = element_of(g, a)?;
    let routes: Vec<HRoute> = if route == "all" {
        HRoute::ALL.to_vec()
    } else {
        vec![route.parse()?]
    };
    let mut results = Vec::new();
    for r in routes {
        results.push((r, cg.h_poly_with_bound(w, r, bound)?));
    }
    let agree = results.windows(2).all(|p| p[0].1 == p[1].1);
    match cli.format {
        Format::Text => {
            for (r, h) in &results {
                if results.len() > 1 {
                    println!("{r}: {h}");
                } else {
                    println!("{h}");
                }
            }
            if !agree {
                eprintln!("routes disagree");
            }
        }
        Format::Json => print_json(&json!({
            "system": g.system().name(),
            "code": s.code.name(),
            "element": g.display(w),
            "routes": results.iter().map(|(r, h)| json!({
                "route": r.to_string(),
                "coefficients": h.coeffs(),
                "polynomial": h.to_string(),
            })).collect::<Vec<_>>(),
            "agree": agree,
        })),
    }
    Ok(if agree { 0 } else { EXIT_FAIL })
}

fn cmd_complex(cli: &Cli, a: &ElementArgs) -> Result<u8, Error> {
    let s = setup(&a.system, cli.cache.as_ref())?;
    let cg = CodedGroup::new(&s.poset, &s.code)?;
    let g = s.poset.group();
    let w = element_of(g, a)?;
    let c = cg.complex(w)?;
    let mut v = c.to_json();
    v["system"] = json!(g.system().name());
    v["code"] = json!(s.code.name());
    v["element"] = json!(g.display(w));
    v["h"] = json!(cg.h_poly(w, HRoute::Direct)?.coeffs());
    if cli.format == Format::Text {
        println!(
            "{} facets, dimension {}, h = {}",
            c.num_facets(),
            c.dim(),
            cg.h_poly(w, HRoute::Direct)?
        );
    }
    print_json(&v);
    Ok(0)
}

fn cmd_classify(cli: &Cli, a: &SystemArgs) -> Result<u8, Error> {
    let s = setup(a, cli.cache.as_ref())?;
    let cg = CodedGroup::new(&s.poset, &s.code)?;
    let g = s.poset.group();
    let principal = cg.principal_set();
    let unimodal = cg.unimodal_set();
    let pal = pal_set(&s.poset);
    let listing = |set: &[ElementId]| -> Vec<serde_json::Value> {
        set.iter()
            .map(|&w| {
                json!({
                    "element": g.display(w),
                    "lehmer": s.code.vector(w),
                    "h": cg.h_poly(w, HRoute::Direct).expect("direct route").coeffs(),
                })
            })
            .collect()
    };
    match cli.format {
        Format::Text => {
            println!("{} with {}", g.system().name(), s.code.name());
            println!("principal: {}", principal.len());
            println!("unimodal: {}", unimodal.len());
            for &w in &unimodal {
                println!("  {} {}", g.display(w), s.code.vector(w));
            }
            println!("palindromic polynomials: {}", pal.len());
        }
        Format::Json => print_json(&json!({
            "system": g.system().name(),
            "code": s.code.name(),
            "principal": listing(&principal),
            "unimodal": listing(&unimodal),
            "pal": pal.iter().map(|h| h.coeffs().to_vec()).collect::<Vec<_>>(),
        })),
    }
    Ok(0)
}

fn cmd_verify(
    cli: &Cli,
    suite: &str,
    cfg: &VerifyConfig,
    output: Option<&PathBuf>,
) -> Result<u8, Error> {
    let report = verify::run_named(suite, cfg)?;
    let text = match cli.format {
        Format::Text => report.to_string(),
        Format::Json => serde_json::to_string_pretty(&report).expect("json") + "\n",
    };
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?,
        None => {
            let _ = write!(std::io::stdout(), "{text}");
        }
    }
    Ok(if report.pass { 0 } else { EXIT_FAIL })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let result = match &cli.command {
        Command::Code(a) => cmd_code(&cli, a),
        Command::Hpoly {
            element,
            route,
            max_maxima,
        } => cmd_hpoly(&cli, element, route, *max_maxima),
        Command::Complex(a) => cmd_complex(&cli, a),
        Command::Classify(a) => cmd_classify(&cli, a),
        Command::Verify {
            suite,
            max_rank,
            n,
            seed,
            samples,
            output,
        } => {
            let cfg = VerifyConfig {
                max_rank: *max_rank,
                n: *n,
                seed: *seed,
                samples: *samples,
            };
            cmd_verify(&cli, suite, &cfg, output.as_ref())
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
