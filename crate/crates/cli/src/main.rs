//! Single-binary CLI over the invariant library: alcove enumeration,
//! symbolic J, color sums, tau, divisibility certificates, TQFT dimensions,
//! periodicity scans and the verification suites.
//!
//! Exit codes: 0 success, 1 computation-level failure (including a failed
//! divisibility or degree check), 2 usage errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wrt::diagram::{
    builtin, parse_with_coupons, ComponentColor, CouponSignature, CouponSignatures,
    FramedLinkPresentation,
};
use wrt::exact::CyclotomicInteger;
use wrt::invariant::{
    divisibility_certificate, evaluate_j, f_value, projective_invariant, tau, tqft_dimension,
    CouponData, CouponTable, ExtendedManifold, InvariantContext, JOutput, RingMode,
};
use wrt::lie::CartanDatum;
use wrt::periodicity::periodicity_scan;
use wrt::rep::Sign;

#[derive(Parser)]
#[command(
    name = "wrt",
    about = "Exact quantum invariants of colored ribbon graphs and 3-manifolds (sl2 at odd prime roots of unity)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct DiagramOpts {
    /// Diagram source: a file path, `builtin:NAME`, or `empty`.
    /// Builtins: unknot(f), hopf(f1,f2), trefoil_left(f), trefoil_right(f),
    /// poincare, brieskorn, s1xs2, s3_empty, s3_stab_pm
    #[arg(long)]
    diagram: String,
    /// Companion coupon file (JSON: NAME -> {domain, codomain, matrix})
    #[arg(long)]
    coupons: Option<PathBuf>,
    /// Colors per component, e.g. --colors C1=1,C2=0
    #[arg(long)]
    colors: Option<String>,
    /// Framings per component, e.g. --framing C1=-1
    #[arg(long)]
    framing: Option<String>,
    /// Components of the surgery link, e.g. --surgery C1,C2
    #[arg(long)]
    surgery: Option<String>,
}

#[derive(Args)]
struct WorkerOpts {
    /// Color-sum worker threads (default: available cores)
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the alcove colors of an algebra at an odd prime r
    Alcove {
        #[arg(long, default_value = "sl2")]
        algebra: String,
        #[arg(long)]
        r: u64,
    },
    /// Symbolic J of a fully colored closed diagram, over Z[v, v^-1]
    Jpoly {
        #[command(flatten)]
        diagram: DiagramOpts,
    },
    /// The surgery color sum F_{(L, Omega)} at xi_r
    Fvalue {
        #[command(flatten)]
        diagram: DiagramOpts,
        #[arg(long)]
        r: u64,
        #[command(flatten)]
        workers: WorkerOpts,
    },
    /// The 3-manifold invariant tau
    Tau {
        #[command(flatten)]
        diagram: DiagramOpts,
        #[arg(long)]
        r: u64,
        /// weight of the extended manifold
        #[arg(long, default_value_t = 0)]
        weight: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        workers: WorkerOpts,
    },
    /// The projective (eta-normalized) invariant, a cyclotomic integer when
    /// beta_1 + w is even
    Projective {
        #[command(flatten)]
        diagram: DiagramOpts,
        #[arg(long)]
        r: u64,
        #[arg(long, default_value_t = 0)]
        weight: i64,
        #[command(flatten)]
        workers: WorkerOpts,
    },
    /// The (xi-1)-divisibility certificate of F; exits 1 when it fails
    Divisibility {
        #[command(flatten)]
        diagram: DiagramOpts,
        #[arg(long)]
        r: u64,
        #[command(flatten)]
        workers: WorkerOpts,
    },
    /// TQFT state-space dimension for a genus-g surface with marks
    Tqftdim {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        r: u64,
        /// marks as color:sign pairs, e.g. --marks 1:+,2:-
        #[arg(long)]
        marks: Option<String>,
    },
    /// Congruence obstruction scan over a list of primes
    Periodicity {
        /// manifold: builtin:NAME or a diagram file (with --surgery etc.)
        #[arg(long)]
        manifold: String,
        /// comma-separated odd primes, e.g. 5,7,11,13
        #[arg(long)]
        rs: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Verification suites
    Verify {
        /// `degree` or `weights`
        #[arg(long)]
        suite: String,
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_color: u64,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Alcove { algebra, r } => {
            let datum = CartanDatum::by_name(&algebra).map_err(|e| e.to_string())?;
            let colors = datum.alcove_colors(r).map_err(|e| e.to_string())?;
            for c in colors {
                println!("{c}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Jpoly { diagram } => {
            let (pres, coupons) = load_presentation(&diagram)?;
            let colors = full_coloring(&pres)?;
            let out = evaluate_j(
                &pres.diagram,
                &colors,
                &pres.framings,
                RingMode::Symbolic,
                &coupons,
            )
            .map_err(|e| e.to_string())?;
            match out {
                JOutput::ClosedSymbolic(p) => {
                    println!("{}", serde_json::json!({ "j": p.to_json() }));
                    Ok(ExitCode::SUCCESS)
                }
                _ => Err("jpoly needs a closed diagram".into()),
            }
        }
        Command::Fvalue { diagram, r, workers } => {
            init_workers(&workers);
            let (pres, coupons) = load_presentation(&diagram)?;
            let ctx = InvariantContext::new(r).map_err(|e| e.to_string())?;
            let f = f_value(&pres, &ctx, &coupons).map_err(|e| e.to_string())?;
            println!("{}", f.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Tau { diagram, r, weight, format, workers } => {
            init_workers(&workers);
            let (pres, coupons) = load_presentation(&diagram)?;
            let ctx = InvariantContext::new(r).map_err(|e| e.to_string())?;
            let m = ExtendedManifold::with_weight(pres, weight);
            let t = tau(&m, &ctx, &coupons).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!("{}", t.to_json()),
                Format::Table => {
                    println!("tau        = {}", t.value);
                    println!("m          = {}", t.m);
                    println!("sigma      = ({}, {})", t.sigma_plus, t.sigma_minus);
                    println!("betti1     = {}", t.betti1);
                    println!("weight     = {}", t.weight);
                    println!(
                        "valuation  = required {}, actual {}",
                        t.divisibility.required, t.divisibility.actual
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Projective { diagram, r, weight, workers } => {
            init_workers(&workers);
            let (pres, coupons) = load_presentation(&diagram)?;
            let ctx = InvariantContext::new(r).map_err(|e| e.to_string())?;
            let m = ExtendedManifold::with_weight(pres, weight);
            let v = projective_invariant(&m, &ctx, &coupons).map_err(|e| e.to_string())?;
            println!("{}", v.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Divisibility { diagram, r, workers } => {
            init_workers(&workers);
            let (pres, coupons) = load_presentation(&diagram)?;
            let ctx = InvariantContext::new(r).map_err(|e| e.to_string())?;
            let (cert, f) =
                divisibility_certificate(&pres, &ctx, &coupons).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::json!({
                    "required": cert.required,
                    "actual": cert.actual.to_string(),
                    "pass": cert.pass,
                    "f": f.to_json(),
                })
            );
            Ok(if cert.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Tqftdim { genus, r, marks } => {
            let ctx = InvariantContext::new(r).map_err(|e| e.to_string())?;
            let marks = parse_marks(marks.as_deref())?;
            let dim = tqft_dimension(genus, &marks, &ctx).map_err(|e| e.to_string())?;
            println!("{}", serde_json::json!({ "genus": genus, "r": r, "dim": dim }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Periodicity { manifold, rs, format } => {
            let opts = DiagramOpts {
                diagram: manifold.clone(),
                coupons: None,
                colors: None,
                framing: None,
                surgery: None,
            };
            let (pres, coupons) = load_presentation(&opts)?;
            let primes = parse_int_list::<u64>(&rs)?;
            let m = ExtendedManifold::new(pres);
            let report =
                periodicity_scan(&manifold, &m, &primes, &coupons).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Table => {
                    println!("manifold: {}", report.manifold);
                    println!("{:>4}  {:<28}  {:<18}  verdict", "r", "invariant", "witnesses");
                    for e in &report.entries {
                        let w = if e.witnesses.is_empty() {
                            "-".to_string()
                        } else {
                            e.witnesses
                                .iter()
                                .map(|s| s.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        };
                        println!("{:>4}  {:<28}  {:<18}  {}", e.r, e.invariant.to_string(), w, e.verdict);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, diagram, max_color, order } => match suite.as_str() {
            "degree" => {
                let name = diagram.ok_or("--diagram required for the degree suite")?;
                let opts = DiagramOpts {
                    diagram: name,
                    coupons: None,
                    colors: None,
                    framing: None,
                    surgery: None,
                };
                let (pres, _) = load_presentation(&opts)?;
                let report = wrt::analysis::degree_bound_check(&pres, max_color, order)
                    .map_err(|e| e.to_string())?;
                for o in &report.orders {
                    let measured = o
                        .measured
                        .map(|d| d.to_string())
                        .unwrap_or_else(|| "-".to_string());
                    println!(
                        "order {:>2}: measured degree {:>2}  bound {:>2}  {}",
                        o.order,
                        measured,
                        o.bound,
                        if o.pass { "ok" } else { "VIOLATION" }
                    );
                }
                Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
            }
            "weights" => {
                run_weights_suite();
                Ok(ExitCode::SUCCESS)
            }
            other => Err(format!("unknown suite `{other}` (use degree or weights)")),
        },
    }
}

fn run_weights_suite() {
    use wrt::analysis::{weight_sl2, ChordComponent, ChordDiagram, ComponentKind, RatMatrix};
    for n in 0..=2u64 {
        let comps = vec![ChordComponent { kind: ComponentKind::Strand(Sign::Plus), points: vec![] }];
        let d = ChordDiagram::chordless(comps).unwrap();
        let w = weight_sl2(&d, n);
        let ok = w == RatMatrix::identity((2 * n + 1) as usize);
        println!("chordless strand, color {n}: identity {}", if ok { "ok" } else { "FAIL" });
    }
    for n in 1..=3u64 {
        let d = ChordDiagram::new(
            vec![ChordComponent { kind: ComponentKind::Circle, points: vec![0, 1] }],
            vec![(0, 1)],
        )
        .unwrap();
        let w = weight_sl2(&d, n);
        println!("self-chord circle, color {n}: trace {}", w.get(0, 0));
    }
}

fn init_workers(w: &WorkerOpts) {
    if let Some(n) = w.workers {
        // ignore the error when a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn parse_marks(spec: Option<&str>) -> Result<Vec<(u64, Sign)>, String> {
    let mut out = Vec::new();
    let Some(spec) = spec else {
        return Ok(out);
    };
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (color, sign) = part
            .split_once(':')
            .ok_or_else(|| format!("bad mark `{part}`, expected COLOR:+ or COLOR:-"))?;
        let color: u64 = color
            .parse()
            .map_err(|_| format!("bad mark color `{color}`"))?;
        let sign = Sign::parse(sign).ok_or_else(|| format!("bad mark sign `{sign}`"))?;
        out.push((color, sign));
    }
    Ok(out)
}

fn parse_int_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|x| x.trim())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<T>().map_err(|_| format!("bad integer `{x}`")))
        .collect()
}

/// Component references are C1, C2, ... in discovery order.
fn parse_component(name: &str) -> Result<usize, String> {
    let id: usize = name
        .trim()
        .strip_prefix('C')
        .and_then(|x| x.parse().ok())
        .ok_or_else(|| format!("bad component `{name}`, expected C1, C2, ..."))?;
    if id == 0 {
        return Err(format!("bad component `{name}`: numbering starts at C1"));
    }
    Ok(id - 1)
}

fn parse_component_map<T: std::str::FromStr>(spec: &str) -> Result<BTreeMap<usize, T>, String> {
    let mut out = BTreeMap::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (comp, value) = part
            .split_once('=')
            .ok_or_else(|| format!("bad assignment `{part}`, expected C1=VALUE"))?;
        let value: T = value
            .trim()
            .parse()
            .map_err(|_| format!("bad value in `{part}`"))?;
        out.insert(parse_component(comp)?, value);
    }
    Ok(out)
}

fn load_coupon_table(path: &PathBuf) -> Result<(CouponSignatures, CouponTable), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("bad coupon JSON: {e}"))?;
    let obj = value.as_object().ok_or("coupon file must be an object")?;
    let mut sigs = CouponSignatures::new();
    let mut table = CouponTable::new();
    for (name, entry) in obj {
        let parse_word = |key: &str| -> Result<Vec<(u64, Sign)>, String> {
            let arr = entry
                .get(key)
                .and_then(|v| v.as_array())
                .ok_or_else(|| format!("coupon `{name}`: missing {key}"))?;
            arr.iter()
                .map(|pair| {
                    let pair = pair.as_array().filter(|p| p.len() == 2);
                    let pair = pair.ok_or_else(|| format!("coupon `{name}`: bad {key} letter"))?;
                    let color = pair[0]
                        .as_u64()
                        .ok_or_else(|| format!("coupon `{name}`: bad color"))?;
                    let sign = pair[1]
                        .as_str()
                        .and_then(Sign::parse)
                        .ok_or_else(|| format!("coupon `{name}`: bad sign"))?;
                    Ok((color, sign))
                })
                .collect()
        };
        let domain = parse_word("domain")?;
        let codomain = parse_word("codomain")?;
        let rows = entry
            .get("matrix")
            .and_then(|v| v.as_array())
            .ok_or_else(|| format!("coupon `{name}`: missing matrix"))?;
        let mut entries = Vec::new();
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| format!("coupon `{name}`: matrix rows must be arrays"))?;
            for cell in row {
                entries.push(
                    CyclotomicInteger::from_json(cell)
                        .ok_or_else(|| format!("coupon `{name}`: bad matrix entry"))?,
                );
            }
        }
        let signature = CouponSignature { domain: domain.clone(), codomain: codomain.clone() };
        sigs.insert(name.clone(), signature.clone());
        table.insert(name.clone(), CouponData { signature, entries });
    }
    Ok((sigs, table))
}

fn load_presentation(
    opts: &DiagramOpts,
) -> Result<(FramedLinkPresentation, CouponTable), String> {
    let (sigs, coupons) = match &opts.coupons {
        Some(path) => load_coupon_table(path)?,
        None => (CouponSignatures::new(), CouponTable::new()),
    };
    let mut pres = if opts.diagram == "empty" {
        builtin("s3_empty").map_err(|e| e.to_string())?
    } else if let Some(name) = opts.diagram.strip_prefix("builtin:") {
        builtin(name).map_err(|e| e.to_string())?
    } else {
        let text = std::fs::read_to_string(&opts.diagram)
            .map_err(|e| format!("cannot read {}: {e}", opts.diagram))?;
        let diagram = parse_with_coupons(&text, &sigs).map_err(|e| e.to_string())?;
        let count = wrt::diagram::components(&diagram)
            .map_err(|e| e.to_string())?
            .count;
        FramedLinkPresentation {
            diagram,
            framings: BTreeMap::new(),
            coloring: (0..count).map(|c| (c, ComponentColor::Surgery)).collect(),
        }
    };
    if let Some(spec) = &opts.framing {
        for (c, f) in parse_component_map::<i64>(spec)? {
            pres.framings.insert(c, f);
        }
    }
    if let Some(spec) = &opts.colors {
        for (c, n) in parse_component_map::<u64>(spec)? {
            pres.coloring.insert(c, ComponentColor::Color(n));
        }
    }
    if let Some(spec) = &opts.surgery {
        for name in spec.split(',').filter(|s| !s.trim().is_empty()) {
            pres.coloring
                .insert(parse_component(name)?, ComponentColor::Surgery);
        }
    }
    Ok((pres, coupons))
}

/// jpoly needs every component colored (no surgery placeholders).
fn full_coloring(pres: &FramedLinkPresentation) -> Result<BTreeMap<usize, u64>, String> {
    let mut out = BTreeMap::new();
    for (c, col) in &pres.coloring {
        match col {
            ComponentColor::Color(n) => {
                out.insert(*c, *n);
            }
            ComponentColor::Surgery => {
                return Err(format!(
                    "component C{} has no color; jpoly needs --colors for every component",
                    c + 1
                ));
            }
        }
    }
    Ok(out)
}
