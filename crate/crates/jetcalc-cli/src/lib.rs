//! Command-line front end: every library operation behind one `jetcalc`
//! binary with byte-stable text and JSON output.
//!
//! Exit codes: 0 on success, 1 on a domain error (reported on the
//! diagnostic stream), 2 on a usage error.

pub mod cache;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use jetcalc::dimension::{
    self, enumerate_monomials, generation_check, growth_exponent_check, hilbert_gg,
};
use jetcalc::invariants::{
    bracket, check_invariance, coordinate_change, picard_operator, q_sequence, wronskian,
    BracketConvention, Group, InvarianceStatus,
};
use jetcalc::jetcore::{faa_di_bruno, JetConfig, JetPolynomial, Reparametrization};
use jetcalc::ratpoly::{parse_rational, rat_int, Polynomial, VarId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    #[value(name = "Gk", alias = "gk")]
    Gk,
    #[value(name = "Uk", alias = "uk")]
    Uk,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::Gk => Group::Full,
            GroupArg::Uk => Group::Unipotent,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Normalized,
    Merker,
}

impl From<ConventionArg> for BracketConvention {
    fn from(c: ConventionArg) -> BracketConvention {
        match c {
            ConventionArg::Normalized => BracketConvention::Normalized,
            ConventionArg::Merker => BracketConvention::Merker,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "jetcalc",
    version,
    about = "Exact computations with jet differentials"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cache directory (overrides JETCALC_CACHE).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Timing and cache diagnostics on stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct PolyInput {
    /// Polynomial in the text grammar, e.g. "x[1,1]*x[2,2] - x[2,1]*x[1,2]".
    #[arg(long)]
    poly: Vec<String>,
    /// File containing one polynomial.
    #[arg(long)]
    poly_file: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The matrix of the reparametrization action on divided jets.
    FaaDiBruno {
        #[arg(long, value_parser = positive_u32())]
        k: u32,
    },
    /// Pullback of a jet polynomial along a reparametrization.
    Pullback {
        #[command(flatten)]
        input: PolyInput,
        /// "formal", "unipotent", or comma-separated rationals "1,1/2,-3".
        #[arg(long)]
        phi: String,
        /// Truncation order (defaults to the coefficient count for a
        /// concrete phi).
        #[arg(long, value_parser = positive_u32())]
        k: Option<u32>,
    },
    /// Total derivative along the curve.
    Derive {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Wronskian determinant of the given polynomials.
    Wronskian {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Weight-raising bracket of two homogeneous polynomials.
    Bracket {
        /// Left operand, inline.
        #[arg(long)]
        lhs: String,
        /// Right operand, inline.
        #[arg(long)]
        rhs: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::Normalized)]
        convention: ConventionArg,
    },
    /// Entries of the bracket recursion at level k.
    Qseq {
        #[arg(long, value_parser = positive_u32())]
        k: u32,
        #[arg(long, value_parser = positive_u32())]
        r: u32,
    },
    /// Certify (relative) invariance of a polynomial.
    Check {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Jet order (defaults to the largest order in the polynomial).
        #[arg(long, value_parser = positive_u32())]
        k: Option<u32>,
    },
    /// Numerator of a derivative in the coordinates normalized along the
    /// first component.
    CoordChange {
        #[arg(long, value_parser = positive_u32())]
        k: u32,
        /// Rank (defaults to the component index).
        #[arg(long, value_parser = positive_u32())]
        r: Option<u32>,
        /// Component index, at least 2.
        #[arg(long, value_parser = positive_u32())]
        j: u32,
        /// Derivative order.
        #[arg(long, value_parser = positive_u32())]
        s: u32,
    },
    /// Monic differential operator annihilating the given solutions.
    Picard {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Fiber dimension counts by weight.
    Hilbert {
        #[arg(long, value_parser = positive_u32())]
        k: u32,
        #[arg(long, value_parser = positive_u32())]
        r: u32,
        #[arg(long)]
        m_max: u32,
    },
    /// All monomials of one weighted degree.
    Monomials {
        #[arg(long, value_parser = positive_u32())]
        k: u32,
        #[arg(long, value_parser = positive_u32())]
        r: u32,
        #[arg(long)]
        m: u32,
    },
    /// Basis of the unipotent-invariant fiber (cached).
    InvBasis {
        #[arg(long, value_parser = positive_u32())]
        k: u32,
        #[arg(long, value_parser = positive_u32())]
        r: u32,
        #[arg(long)]
        m: u32,
        /// Column limit for the exact elimination.
        #[arg(long, value_parser = positive_usize(), default_value_t = dimension::DEFAULT_MAX_COLUMNS)]
        size_limit: usize,
        /// Skip the on-disk cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Compare products of generators against the invariant fiber.
    GenCheck {
        #[arg(long, value_parser = positive_u32())]
        k: u32,
        #[arg(long, value_parser = positive_u32())]
        r: u32,
        #[arg(long)]
        m: u32,
        /// Generator polynomial, repeatable.
        #[arg(long = "gen")]
        gens: Vec<String>,
        /// File with one generator polynomial, repeatable.
        #[arg(long = "gen-file")]
        gen_files: Vec<PathBuf>,
        /// How many total derivatives of each generator to admit
        /// (default k-1).
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long, value_parser = positive_usize(), default_value_t = dimension::DEFAULT_MAX_COLUMNS)]
        size_limit: usize,
    },
    /// Certify the per-class polynomial growth degree of fiber counts.
    GrowthCheck {
        #[arg(long, value_parser = positive_u32())]
        k: u32,
        #[arg(long, value_parser = positive_u32())]
        r: u32,
        #[arg(long)]
        m_max: u32,
    },
}

fn positive_u32() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

fn positive_usize() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::new().range(1..)
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn domain(err: impl std::fmt::Display) -> CliError {
        CliError::Domain(err.to_string())
    }
}

/// Run with explicit argument list and output sinks; returns the exit code.
pub fn run(args: &[String], stdout: &mut impl Write, stderr: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    match execute(&cli, stderr) {
        Ok(output) => {
            let _ = stdout.write_all(output.as_bytes());
            0
        }
        Err(CliError::Domain(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            1
        }
        Err(CliError::Usage(message)) => {
            let _ = writeln!(stderr, "usage error: {message}");
            2
        }
    }
}

fn execute(cli: &Cli, stderr: &mut impl Write) -> Result<String, CliError> {
    match &cli.command {
        Command::FaaDiBruno { k } => {
            let matrix = faa_di_bruno(*k);
            Ok(match cli.format {
                Format::Json => render_json(&matrix.to_json()),
                Format::Text => {
                    let mut out = String::new();
                    for s in 1..=*k {
                        let row: Vec<String> =
                            (1..=*k).map(|d| matrix.entry(s, d).to_string()).collect();
                        let _ = writeln!(out, "[{}]", row.join(", "));
                    }
                    out
                }
            })
        }
        Command::Pullback { input, phi, k } => {
            let body = read_single_poly(input)?;
            let phi = parse_phi(phi, *k)?;
            let config = infer_config(&body, Some(phi.order()), None)?;
            let p = JetPolynomial::new(body, config).map_err(CliError::domain)?;
            let pulled = p.pullback(&phi).map_err(CliError::domain)?;
            Ok(render_poly(cli.format, pulled.body()))
        }
        Command::Derive { input } => {
            let body = read_single_poly(input)?;
            let config = infer_config(&body, None, None)?;
            let p = JetPolynomial::new(body, config).map_err(CliError::domain)?;
            Ok(render_poly(cli.format, p.total_derivative().body()))
        }
        Command::Wronskian { input } => {
            let polys = read_polys(input, 1)?;
            let jets = to_jets(polys)?;
            let w = wronskian(&jets).map_err(CliError::domain)?;
            Ok(render_poly(cli.format, w.body()))
        }
        Command::Bracket {
            lhs,
            rhs,
            convention,
        } => {
            let lhs = parse_poly(lhs)?;
            let rhs = parse_poly(rhs)?;
            let jets = to_jets(vec![lhs, rhs])?;
            let b = bracket(&jets[0], &jets[1], (*convention).into()).map_err(CliError::domain)?;
            Ok(render_poly(cli.format, b.body()))
        }
        Command::Qseq { k, r } => {
            let entries = q_sequence(JetConfig::new(*k, *r), *k).map_err(CliError::domain)?;
            Ok(match cli.format {
                Format::Json => render_json(&Value::Array(
                    entries
                        .iter()
                        .map(|e| e.body().to_string().into())
                        .collect(),
                )),
                Format::Text => {
                    let mut out = String::new();
                    for e in &entries {
                        let _ = writeln!(out, "{}", e.body());
                    }
                    out
                }
            })
        }
        Command::Check { input, group, k } => {
            let body = read_single_poly(input)?;
            let config = infer_config(&body, *k, None)?;
            let p = JetPolynomial::new(body, config).map_err(CliError::domain)?;
            let report = check_invariance(&p, (*group).into()).map_err(CliError::domain)?;
            Ok(match cli.format {
                Format::Json => render_json(&report.to_json()),
                Format::Text => {
                    let mut out = String::new();
                    match &report.status {
                        InvarianceStatus::RelativeInvariant { weight } => {
                            let _ = writeln!(out, "relative_invariant weight {weight}");
                        }
                        InvarianceStatus::UnipotentInvariantOnly => {
                            let _ = writeln!(out, "unipotent_invariant_only");
                        }
                        InvarianceStatus::NotInvariant { witness } => {
                            let _ = writeln!(out, "not_invariant witness {witness}");
                        }
                    }
                    if report.restricted_to_unipotent {
                        let _ = writeln!(out, "restricted_to_unipotent true");
                    }
                    out
                }
            })
        }
        Command::CoordChange { k, r, j, s } => {
            let rank = r.unwrap_or(*j).max(*j);
            let config = JetConfig::new(*k, rank);
            let result = coordinate_change(config, *j, *s).map_err(CliError::domain)?;
            Ok(match cli.format {
                Format::Json => render_json(&serde_json::json!({
                    "component": result.component,
                    "order": result.order,
                    "numerator": result.numerator.body().to_string(),
                    "denominator_exponent": result.denominator_exponent,
                })),
                Format::Text => format!(
                    "numerator {}\ndenominator x[1,1]^{}\n",
                    result.numerator.body(),
                    result.denominator_exponent
                ),
            })
        }
        Command::Picard { input } => {
            let polys = read_polys(input, 1)?;
            let jets = to_jets(polys)?;
            let op = picard_operator(&jets).map_err(CliError::domain)?;
            Ok(match cli.format {
                Format::Json => render_json(&serde_json::json!({
                    "order": op.order(),
                    "coefficients": op.coefficients().iter().map(|c| serde_json::json!({
                        "numerator": c.numerator().to_string(),
                        "denominator": c.denominator().to_string(),
                    })).collect::<Vec<_>>(),
                })),
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "order {}", op.order());
                    for i in 1..=op.order() {
                        let _ = writeln!(out, "a[{i}] = {}", op.coefficient(i));
                    }
                    out
                }
            })
        }
        Command::Hilbert { k, r, m_max } => {
            let table = hilbert_gg(JetConfig::new(*k, *r), *m_max);
            Ok(match cli.format {
                Format::Json => render_json(&table.to_json()),
                Format::Text => {
                    let mut out = String::new();
                    for (m, c) in table.coefficients().iter().enumerate() {
                        let _ = writeln!(out, "c[{m}] = {c}");
                    }
                    out
                }
            })
        }
        Command::Monomials { k, r, m } => {
            let monos = enumerate_monomials(JetConfig::new(*k, *r), *m);
            Ok(match cli.format {
                Format::Json => render_json(&Value::Array(
                    monos.iter().map(|mono| mono.to_string().into()).collect(),
                )),
                Format::Text => {
                    let mut out = String::new();
                    for mono in &monos {
                        let _ = writeln!(out, "{mono}");
                    }
                    out
                }
            })
        }
        Command::InvBasis {
            k,
            r,
            m,
            size_limit,
            no_cache,
        } => {
            let config = JetConfig::new(*k, *r);
            let basis = if *no_cache {
                dimension::invariant_basis(config, *m, *size_limit).map_err(CliError::domain)?
            } else {
                cached_basis(config, *m, *size_limit, cli, stderr)?
            };
            Ok(match cli.format {
                Format::Json => render_json(&basis.to_json()),
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "dim {}", basis.dim());
                    for e in &basis.basis {
                        let _ = writeln!(out, "{}", e.body());
                    }
                    out
                }
            })
        }
        Command::GenCheck {
            k,
            r,
            m,
            gens,
            gen_files,
            depth,
            size_limit,
        } => {
            let config = JetConfig::new(*k, *r);
            let mut generator_polys = Vec::new();
            for g in gens {
                generator_polys.push(parse_poly(g)?);
            }
            for path in gen_files {
                generator_polys.push(parse_poly(read_file(path)?.trim())?);
            }
            let generators = generator_polys
                .into_iter()
                .map(|p| JetPolynomial::new(p, config).map_err(CliError::domain))
                .collect::<Result<Vec<_>, _>>()?;
            let report = generation_check(config, *m, &generators, *depth, *size_limit)
                .map_err(CliError::domain)?;
            Ok(match cli.format {
                Format::Json => render_json(&report.to_json()),
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "depth {}", report.differential_depth);
                    let _ = writeln!(out, "spanned_dim {}", report.spanned_dim);
                    let _ = writeln!(out, "invariant_dim {}", report.invariant_dim);
                    let _ = writeln!(out, "spans {}", report.spans());
                    for c in &report.cogenerators {
                        let _ = writeln!(out, "cogenerator {}", c.body());
                    }
                    out
                }
            })
        }
        Command::GrowthCheck { k, r, m_max } => {
            let report =
                growth_exponent_check(JetConfig::new(*k, *r), *m_max).map_err(CliError::domain)?;
            Ok(match cli.format {
                Format::Json => render_json(&report.to_json()),
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "modulus {}", report.modulus);
                    let _ = writeln!(out, "expected_degree {}", report.expected_degree);
                    let _ = writeln!(out, "certified {}", report.certified);
                    for c in &report.classes {
                        let _ = writeln!(
                            out,
                            "class {} degree {} leading {}",
                            c.residue, c.degree, c.leading_difference
                        );
                    }
                    out
                }
            })
        }
    }
}

fn cached_basis(
    config: JetConfig,
    m: u32,
    size_limit: usize,
    cli: &Cli,
    stderr: &mut impl Write,
) -> Result<dimension::InvariantBasis, CliError> {
    let dir = cache::resolve_cache_dir(cli.cache_dir.clone());
    let path = cache::basis_path(&dir, config, m);
    let start = Instant::now();
    if let Some(basis) = cache::load(&path, config, m, stderr) {
        if cli.verbose {
            let _ = writeln!(
                stderr,
                "cache hit {} ({} us)",
                path.display(),
                start.elapsed().as_micros()
            );
        }
        return Ok(basis);
    }
    let start = Instant::now();
    let basis = dimension::invariant_basis(config, m, size_limit).map_err(CliError::domain)?;
    if cli.verbose {
        let _ = writeln!(
            stderr,
            "cache miss; computed in {} us",
            start.elapsed().as_micros()
        );
    }
    cache::store(&path, &basis, stderr);
    Ok(basis)
}

fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn render_poly(format: Format, p: &Polynomial) -> String {
    match format {
        Format::Json => render_json(&p.to_json()),
        Format::Text => format!("{p}\n"),
    }
}

fn parse_poly(text: &str) -> Result<Polynomial, CliError> {
    Polynomial::parse(text).map_err(|e| CliError::Usage(format!("polynomial {text:?}: {e}")))
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_polys(input: &PolyInput, at_least: usize) -> Result<Vec<Polynomial>, CliError> {
    let mut polys = Vec::new();
    for text in &input.poly {
        polys.push(parse_poly(text)?);
    }
    for path in &input.poly_file {
        polys.push(parse_poly(read_file(path)?.trim())?);
    }
    if polys.len() < at_least {
        return Err(CliError::Usage(format!(
            "need at least {at_least} polynomial(s) via --poly/--poly-file"
        )));
    }
    Ok(polys)
}

fn read_single_poly(input: &PolyInput) -> Result<Polynomial, CliError> {
    let polys = read_polys(input, 1)?;
    if polys.len() > 1 {
        return Err(CliError::Usage(
            "exactly one polynomial expected".to_string(),
        ));
    }
    Ok(polys.into_iter().next().expect("checked length"))
}

/// Smallest universe containing the polynomial, with optional overrides.
fn infer_config(
    body: &Polynomial,
    k_override: Option<u32>,
    r_override: Option<u32>,
) -> Result<JetConfig, CliError> {
    let mut k = 1;
    let mut r = 1;
    for v in body.variables() {
        if let VarId::Jet { component, order } = v {
            k = k.max(order);
            r = r.max(component);
        }
    }
    if let Some(ko) = k_override {
        if ko < k {
            return Err(CliError::Usage(format!(
                "--k {ko} is below the largest jet order {k} in the input"
            )));
        }
        k = ko;
    }
    if let Some(ro) = r_override {
        if ro < r {
            return Err(CliError::Usage(format!(
                "--r {ro} is below the largest component {r} in the input"
            )));
        }
        r = ro;
    }
    Ok(JetConfig::new(k, r))
}

fn to_jets(polys: Vec<Polynomial>) -> Result<Vec<JetPolynomial>, CliError> {
    let mut k = 1;
    let mut r = 1;
    for p in &polys {
        let c = infer_config(p, None, None)?;
        k = k.max(c.k);
        r = r.max(c.r);
    }
    let config = JetConfig::new(k, r);
    polys
        .into_iter()
        .map(|p| JetPolynomial::new(p, config).map_err(CliError::domain))
        .collect()
}

fn parse_phi(spec: &str, k: Option<u32>) -> Result<Reparametrization, CliError> {
    match spec {
        "formal" => {
            let k = k
                .ok_or_else(|| CliError::Usage("--k is required with --phi formal".to_string()))?;
            Ok(Reparametrization::formal(k))
        }
        "unipotent" => {
            let k = k.ok_or_else(|| {
                CliError::Usage("--k is required with --phi unipotent".to_string())
            })?;
            Ok(Reparametrization::formal_unipotent(k))
        }
        list => {
            let mut coeffs = Vec::new();
            for part in list.split(',') {
                coeffs.push(
                    parse_rational(part.trim())
                        .map_err(|e| CliError::Usage(format!("--phi coefficient {part:?}: {e}")))?,
                );
            }
            let order = match k {
                Some(k) if (k as usize) < coeffs.len() => {
                    return Err(CliError::Usage(format!(
                        "--k {k} is below the {} given coefficients",
                        coeffs.len()
                    )));
                }
                Some(k) => k as usize,
                None => coeffs.len(),
            };
            coeffs.resize(order, rat_int(0));
            Reparametrization::concrete(coeffs).map_err(CliError::domain)
        }
    }
}
