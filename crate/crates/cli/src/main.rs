use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orbitdeg::bessel::bessel_zeros;
use orbitdeg::burnside::BurnsideElement;
use orbitdeg::degree::basic_degree;
use orbitdeg::elliptic::{existence_report, DegreeReport, ReportOptions};
use orbitdeg::group::{CharacterTable, FiniteGroup, SubgroupClassTable};
use orbitdeg::io::{self, record};
use orbitdeg::lattice::Catalog;
use orbitdeg::representations::{IrrDescriptor, Sign};
use orbitdeg::Error;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "orbitdeg", version, about = "Equivariant degree and Burnside ring computations for O(2) x K")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Fold bound of the O(2) x K class catalog.
    #[arg(long, global = true)]
    max_mode: Option<u32>,
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
    /// Conjugacy classes of subgroups of a finite group, or with `--product`
    /// the finite-Weyl classes of O(2) x K.
    Ccs {
        group: String,
        #[arg(long)]
        product: bool,
    },
    /// Character table of a finite group.
    Chartab { group: String },
    /// Basic degree of W_m (x) U_j^sign.
    BasicDegree {
        m: u32,
        j: usize,
        #[arg(allow_hyphen_values = true)]
        sign: String,
        #[arg(long, default_value = "S4*Z2")]
        group: String,
    },
    /// Product of two Burnside ring elements given in text form.
    BurnsideMul {
        a: String,
        b: String,
        #[arg(long, default_value = "S4*Z2")]
        group: String,
    },
    /// Image of an element under the nu-fold homomorphism.
    Fold {
        nu: u32,
        element: String,
        #[arg(long, default_value = "S4*Z2")]
        group: String,
    },
    /// Positive zeros of J_m up to a bound.
    BesselZeros {
        m: u32,
        #[arg(allow_hyphen_values = true)]
        upper: f64,
    },
    /// Full existence report for a problem file.
    Solve { problem: PathBuf },
    /// Compares the degree terms of a report with an expected expansion.
    GoldenCheck { report: PathBuf, expected: PathBuf },
}

enum Failure {
    Error(Error),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.into())
    }
}

type Out<'a> = &'a mut dyn Write;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        // reader went away (e.g. `| head`)
        Err(Failure::Error(Error::Io(e))) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Error(e)) => {
            let _ = lock.flush();
            let msg = e.to_string().replace('\n', " ");
            eprintln!("orbitdeg: {msg}");
            match e {
                Error::Resonance { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn header(cli: &Cli, out: Out) -> std::io::Result<()> {
    if cli.format == Format::Text {
        writeln!(out, "# orbitdeg {VERSION}")?;
    }
    Ok(())
}

fn catalog(cli: &Cli, group: &str, need: u32) -> Result<Catalog, Error> {
    let bound = cli.max_mode.unwrap_or(need).max(1);
    if bound < need {
        return Err(Error::CatalogTooSmall {
            required: need,
            available: bound,
        });
    }
    Catalog::from_descriptor(group, bound)
}

fn emit_element(cli: &Cli, out: Out, cat: &Catalog, e: &BurnsideElement) -> Result<(), Failure> {
    match cli.format {
        Format::Text => writeln!(out, "{}", e.display(cat))?,
        Format::Json => {
            for t in e.to_named(cat) {
                writeln!(out, "{}", record("term", &t)?)?;
            }
        }
    }
    Ok(())
}

fn run(cli: &Cli, out: Out) -> Result<(), Failure> {
    header(cli, out)?;
    match &cli.command {
        Command::Ccs { group, product: false } => {
            let g = FiniteGroup::from_descriptor(group)?;
            let table = SubgroupClassTable::build(&g).export();
            for c in &table.classes {
                match cli.format {
                    Format::Text => writeln!(
                        out,
                        "{:>3}  {:<8} order {:>2}  weyl {:>2}  conjugates {:>2}",
                        c.id, c.name, c.order, c.weyl_order, c.conjugates
                    )?,
                    Format::Json => writeln!(out, "{}", record("subgroup_class", c)?)?,
                }
            }
        }
        Command::Ccs { group, product: true } => {
            let dir = std::env::var_os(io::CACHE_ENV).map(PathBuf::from);
            let export = io::cached_export(dir.as_deref(), group, cli.max_mode.unwrap_or(1).max(1))?;
            for c in &export.classes {
                match cli.format {
                    Format::Text => {
                        let order = c.order.map_or("inf".to_string(), |o| o.to_string());
                        writeln!(
                            out,
                            "{:>4}  fold {}  weyl {:>2}  order {:>4}  {}",
                            c.id, c.fold, c.weyl_order, order, c.name
                        )?
                    }
                    Format::Json => writeln!(out, "{}", record("product_class", c)?)?,
                }
            }
        }
        Command::Chartab { group } => {
            let g = FiniteGroup::from_descriptor(group)?;
            let t = CharacterTable::build(&g)?;
            match cli.format {
                Format::Text => {
                    write!(out, "{:<12}", "")?;
                    for c in &t.classes {
                        write!(out, " {:>12}", c.label)?;
                    }
                    writeln!(out)?;
                    write!(out, "{:<12}", "size")?;
                    for c in &t.classes {
                        write!(out, " {:>12}", c.size)?;
                    }
                    writeln!(out)?;
                    for (name, row) in t.names.iter().zip(&t.values) {
                        write!(out, "{name:<12}")?;
                        for v in row {
                            write!(out, " {v:>12}")?;
                        }
                        writeln!(out)?;
                    }
                }
                Format::Json => {
                    for c in &t.classes {
                        let body = serde_json::json!({ "label": c.label, "size": c.size });
                        writeln!(out, "{}", record("element_class", &body)?)?;
                    }
                    for (name, row) in t.names.iter().zip(&t.values) {
                        let body = serde_json::json!({ "name": name, "values": row });
                        writeln!(out, "{}", record("irreducible", &body)?)?;
                    }
                }
            }
        }
        Command::BasicDegree { m, j, sign, group } => {
            let sign: Sign = sign.parse()?;
            let cat = catalog(cli, group, *m)?;
            let d = basic_degree(&IrrDescriptor::new(*m, *j, sign), &cat)?;
            emit_element(cli, out, &cat, &d)?;
        }
        Command::BurnsideMul { a, b, group } => {
            let cat = catalog(cli, group, 1)?;
            let x = io::parse_element(&cat, a)?;
            let y = io::parse_element(&cat, b)?;
            emit_element(cli, out, &cat, &x.mul(&y, &cat)?)?;
        }
        Command::Fold { nu, element, group } => {
            if *nu == 0 {
                return Err(Error::Invalid("fold index must be positive".into()).into());
            }
            let cat = catalog(cli, group, *nu)?;
            let x = io::parse_element(&cat, element)?;
            emit_element(cli, out, &cat, &x.fold_hom(*nu, &cat)?)?;
        }
        Command::BesselZeros { m, upper } => {
            if !(*upper > 0.0) {
                return Err(Error::Invalid("upper bound must be positive".into()).into());
            }
            for (i, z) in bessel_zeros(*m, *upper)?.iter().enumerate() {
                match cli.format {
                    Format::Text => writeln!(out, "{:>3}  {z:.12}", i + 1)?,
                    Format::Json => {
                        let body = serde_json::json!({ "n": i + 1, "m": m, "zero": z });
                        writeln!(out, "{}", record("zero", &body)?)?
                    }
                }
            }
        }
        Command::Solve { problem } => {
            let p = io::read_problem(problem)?;
            let opts = ReportOptions { max_mode: cli.max_mode };
            let report = existence_report(&p, opts)?;
            match cli.format {
                Format::Text => write_report(out, &report)?,
                Format::Json => {
                    for line in io::report_records(&report)? {
                        writeln!(out, "{line}")?;
                    }
                }
            }
        }
        Command::GoldenCheck { report, expected } => {
            let actual = io::read_terms(&read(report)?)?;
            let want = io::read_terms(&read(expected)?)?;
            let diff = io::golden_diff(&actual, &want);
            match cli.format {
                Format::Text => {
                    for t in &diff.missing {
                        writeln!(out, "missing     {:+} ({})", t.coeff, t.class)?;
                    }
                    for t in &diff.unexpected {
                        writeln!(out, "unexpected  {:+} ({})", t.coeff, t.class)?;
                    }
                    let verdict = if diff.is_match() { "match" } else { "MISMATCH" };
                    writeln!(out, "{verdict}: {} actual terms, {} expected", actual.len(), want.len())?;
                }
                Format::Json => writeln!(out, "{}", record("golden_diff", &diff)?)?,
            }
            if !diff.is_match() {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Error> {
    Ok(std::fs::read_to_string(path)?)
}

fn write_report(out: Out, r: &DegreeReport) -> std::io::Result<()> {
    writeln!(out, "K = {}, modes 0..={}, catalog fold bound {}", r.k, r.max_mode, r.fold_bound)?;
    writeln!(out)?;
    writeln!(out, "spectrum")?;
    for c in &r.components {
        writeln!(out, "  mu = {:<10} on {:<8} dim {}  multiplicity {}", c.mu, c.irreducible, c.dim, c.multiplicity)?;
    }
    writeln!(out)?;
    writeln!(out, "non-resonance: {}", if r.condition_d.satisfied { "satisfied" } else { "violated" })?;
    writeln!(out)?;
    writeln!(out, "negative spectrum factors")?;
    for f in &r.factors {
        writeln!(out, "  s_{{{},{}}} = {:.4} < {}: {}^{}", f.n, f.m, f.zero, f.mu, f.rep, f.multiplicity)?;
    }
    writeln!(out)?;
    writeln!(out, "parity counters")?;
    for c in &r.counters.classes {
        let per: Vec<String> = c.folds.iter().map(|f| f.total.to_string()).collect();
        let nu0 = c.nu0.map_or("-".to_string(), |n| n.to_string());
        writeln!(out, "  ({})  m(H_nu) = [{}]  nu0 = {}", c.class, per.join(", "), nu0)?;
    }
    writeln!(out)?;
    writeln!(out, "degree ({} terms)", r.degree.len())?;
    for t in &r.degree {
        writeln!(out, "  {:+} ({})", t.coeff, t.class)?;
    }
    writeln!(out)?;
    writeln!(out, "non-radial orbit types ({})", r.non_radial.len())?;
    for o in &r.non_radial {
        writeln!(out, "  ({})  nu0 = {}", o.family, o.nu0)?;
    }
    writeln!(out, "radial orbit types ({})", r.radial.len())?;
    for o in &r.radial {
        writeln!(out, "  ({})", o.class)?;
    }
    Ok(())
}
