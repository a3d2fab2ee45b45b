use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use theta::adc::{AugmentedDirectedComplex, ChainMorphism};
use theta::simple::{enumerate_hom, Convention, SimpleAdc};
use theta::text::{self, ObjectFile, WreathComponentSource};
use theta::wreath::{check_fully_faithful, v_object, WreathObject};
use theta::{cells, disc, suite};

/// Exact-integer models of simple omega-categories as chain complexes.
#[derive(Parser)]
#[command(name = "theta", version, about)]
struct Cli {
    /// Boundary orientation for complexes generated from dimension
    /// sequences
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Std)]
    convention: ConventionArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Std,
    Swapped,
}

impl From<ConventionArg> for Convention {
    fn from(value: ConventionArg) -> Convention {
        match value {
            ConventionArg::Std => Convention::Std,
            ConventionArg::Swapped => Convention::Swapped,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Seq,
    Updown,
    Tree,
}

#[derive(Subcommand)]
enum Command {
    /// Convert an object between its representations
    Convert {
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
        /// The representation itself, e.g. "0 1 0" or "(()())"
        input: String,
    },
    /// Report the basis and structure checks for an object file
    Check { file: PathBuf },
    /// Enumerate the morphisms between two objects (dims inline or files)
    Hom {
        a: String,
        b: String,
        /// Print only the cardinality (default)
        #[arg(long)]
        count: bool,
        /// Print every morphism in the morphism text format
        #[arg(long, conflicts_with = "count")]
        list: bool,
    },
    /// Validate a morphism file against its endpoint complexes
    ValidateMorphism { file: PathBuf },
    /// Enumerate the cells of an object up to a coefficient cap
    Cells {
        a: String,
        #[arg(long, default_value_t = 1)]
        cap: u32,
    },
    /// Print the dual coaugmented cochain complex of an object
    Dual { a: String },
    /// Build the joined suspension of a wreath spec file
    WreathV { spec: PathBuf },
    /// Compare wreath morphisms with suspension morphisms for two specs
    WreathCheck { a: PathBuf, b: PathBuf },
    /// Run every catalog property check
    Suite {
        /// Cell-coefficient cap used by the cell checks
        #[arg(long, default_value_t = 1)]
        cap: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let convention: Convention = cli.convention.into();
    match run(cli.command, convention) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, convention: Convention) -> Result<ExitCode> {
    match command {
        Command::Convert { from, to, input } => convert(from, to, &input),
        Command::Check { file } => check(&file, convention),
        Command::Hom { a, b, count, list } => hom(&a, &b, count, list, convention),
        Command::ValidateMorphism { file } => validate_morphism(&file),
        Command::Cells { a, cap } => {
            let object = load_object(&a, convention)?;
            let cells = cells::enumerate(&object, cap);
            print!("{}", text::format_cells(&cells));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { a } => {
            let object = load_object(&a, convention)?;
            print!("{}", text::format_cochain(&disc::dualize(&object)));
            Ok(ExitCode::SUCCESS)
        }
        Command::WreathV { spec } => {
            let object = load_wreath(&spec, convention)?;
            print!("{}", text::format_adc(&v_object(&object, convention)));
            Ok(ExitCode::SUCCESS)
        }
        Command::WreathCheck { a, b } => wreath_check(&a, &b, convention),
        Command::Suite { cap } => suite_command(convention, cap),
    }
}

fn convert(from: Format, to: Format, input: &str) -> Result<ExitCode> {
    let updown = match from {
        Format::Seq => text::parse_dims(input)?.to_updown(),
        Format::Updown => text::parse_updown(input)?,
        Format::Tree => text::parse_tree(input)?.to_updown(),
    };
    match to {
        Format::Seq => println!("{}", updown.to_seq()),
        Format::Updown => println!("{updown}"),
        Format::Tree => println!("{}", updown.to_tree()),
    }
    Ok(ExitCode::SUCCESS)
}

/// Inline dimension sequences are accepted wherever an object is expected;
/// anything that does not parse as integers is treated as a path.
fn load_simple(input: &str, convention: Convention) -> Result<SimpleAdc> {
    if let Ok(dims) = text::parse_dims(input) {
        return Ok(SimpleAdc::from_dims(&dims, convention));
    }
    let content = std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    match text::parse_object(&content)? {
        ObjectFile::Dims(dims) => Ok(SimpleAdc::from_dims(&dims, convention)),
        ObjectFile::Adc(adc) => SimpleAdc::try_from_adc_with(&adc, convention).ok_or_else(|| {
            anyhow!(
                "{input}: the complex is not generated by a graded ordered set \
                 under the selected convention"
            )
        }),
    }
}

fn load_object(input: &str, convention: Convention) -> Result<Arc<AugmentedDirectedComplex>> {
    if let Ok(dims) = text::parse_dims(input) {
        return Ok(SimpleAdc::from_dims(&dims, convention).adc().clone());
    }
    let content = std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    match text::parse_object(&content)? {
        ObjectFile::Dims(dims) => Ok(SimpleAdc::from_dims(&dims, convention).adc().clone()),
        ObjectFile::Adc(adc) => Ok(adc),
    }
}

fn check(file: &Path, convention: Convention) -> Result<ExitCode> {
    let content =
        std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let complex = match text::parse_object(&content)? {
        ObjectFile::Dims(dims) => SimpleAdc::from_dims(&dims, convention).adc().clone(),
        ObjectFile::Adc(adc) => adc,
    };
    let structure = complex.check_structure();
    let unital = complex.is_unital();
    let loop_free = complex.is_loop_free();
    let strongly = complex.is_strongly_loop_free();
    println!(
        "structure: {}",
        match &structure {
            Ok(()) => "pass".to_string(),
            Err(e) => format!("FAIL ({e})"),
        }
    );
    println!("unital: {}", if unital { "pass" } else { "FAIL" });
    println!("loop-free: {}", if loop_free { "pass" } else { "FAIL" });
    println!("strongly-loop-free: {}", if strongly { "pass" } else { "FAIL" });
    match SimpleAdc::try_from_adc(&complex) {
        Some(s) => println!("simple: yes ({})", s.dims()),
        None => println!("simple: no"),
    }
    if structure.is_ok() && unital && loop_free && strongly {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn hom(a: &str, b: &str, _count: bool, list: bool, convention: Convention) -> Result<ExitCode> {
    let ka = load_simple(a, convention)?;
    let kb = load_simple(b, convention)?;
    let morphisms = enumerate_hom(&ka, &kb);
    if list {
        for f in &morphisms {
            print!("{}", text::format_morphism(f, a, b));
        }
    } else {
        println!("{}", morphisms.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn validate_morphism(file: &Path) -> Result<ExitCode> {
    let content =
        std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let parsed = text::parse_morphism(&content)?;
    let dir = file.parent().unwrap_or_else(|| Path::new("."));
    let source = load_endpoint(dir, &parsed.source_name)?;
    let target = load_endpoint(dir, &parsed.target_name)?;
    match ChainMorphism::from_degree_matrices(source, target, &parsed.matrices) {
        Ok(_) => {
            println!("valid");
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(ExitCode::from(2))
        }
    }
}

fn load_endpoint(dir: &Path, name: &str) -> Result<Arc<AugmentedDirectedComplex>> {
    let path = dir.join(name);
    let content =
        std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    match text::parse_object(&content)? {
        ObjectFile::Dims(dims) => Ok(SimpleAdc::from_dims(&dims, Convention::Std).adc().clone()),
        ObjectFile::Adc(adc) => Ok(adc),
    }
}

fn load_wreath(spec: &Path, convention: Convention) -> Result<WreathObject> {
    let content =
        std::fs::read_to_string(spec).with_context(|| format!("reading {}", spec.display()))?;
    let dir = spec.parent().unwrap_or_else(|| Path::new("."));
    let mut components = Vec::new();
    for source in text::parse_wreath_spec(&content)? {
        let component = match source {
            WreathComponentSource::Inline(dims) => {
                SimpleAdc::from_dims(&dims, convention).adc().clone()
            }
            WreathComponentSource::Path(p) => load_endpoint(dir, &p)?,
        };
        components.push(component);
    }
    Ok(WreathObject::new(components))
}

fn wreath_check(a: &Path, b: &Path, convention: Convention) -> Result<ExitCode> {
    let wa = load_wreath(a, convention)?;
    let wb = load_wreath(b, convention)?;
    let report = check_fully_faithful(&wa, &wb, convention)?;
    println!("wreath hom: {}", report.wreath_hom);
    println!("suspension hom: {}", report.suspension_hom);
    println!("bijective: {}", if report.bijective { "yes" } else { "no" });
    if report.bijective {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn suite_command(convention: Convention, cap: u32) -> Result<ExitCode> {
    let outcomes = suite::run(convention, cap);
    let mut failures = 0;
    for outcome in &outcomes {
        if outcome.passed {
            if outcome.detail.is_empty() {
                println!("PASS {}", outcome.name);
            } else {
                println!("PASS {} ({})", outcome.name, outcome.detail);
            }
        } else {
            failures += 1;
            println!("FAIL {}: {}", outcome.name, outcome.detail);
        }
    }
    if failures == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}
