//! The `immanant` command line: character tables, point evaluation, grid
//! export, orbit inspection, and the verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification check fails (or output
//! cannot be written), 2 on usage errors including invalid arguments.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::characters::{character_table, CharacterTable, MAX_TABLE_DEGREE};
use crate::error::{Error, Result};
use crate::functions::{exp_matrix, ImmanantFamily, ImmanantSpec};
use crate::geometry::Weight;
use crate::grid::{compute_grid, render_csv, sidecar, GridSpec, DEFAULT_RANGE};
use crate::matrix::matrix_immanant;
use crate::verify::{run_suite, Suite, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "immanant",
    version,
    about = "Immanant functions on the weight lattices of the symmetric-group Weyl groups",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Grid data only comes as CSV; the flag exists so the choice is explicit
/// and extensible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GridFormat {
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of the symmetric group S_m
    Chartable {
        /// Symmetric group degree, 2..=8
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate one function at one point through two independent routes
    Eval {
        /// Rank of the root system
        #[arg(long)]
        n: usize,
        /// Which function, 1-based; 1 is symmetric, 2 antisymmetric
        #[arg(long)]
        k: usize,
        /// Dominant weight as comma-separated fundamental-weight coordinates
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        /// Point as comma-separated fundamental-weight coordinates
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Vec<f64>,
    },
    /// Sample a rank-2 function on a regular grid: CSV plus a JSON sidecar
    Grid {
        /// Rank; grids are drawn on the rank-2 plane
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        /// Window lo,hi applied to both plane coordinates
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        range: Option<Vec<f64>>,
        /// Points per axis
        #[arg(long, default_value_t = 64)]
        resolution: usize,
        #[arg(long, value_enum, default_value_t = GridFormat::Csv)]
        format: GridFormat,
        /// CSV output path; the sidecar replaces its extension with .json
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-derive a family of identities and report each check
    Verify {
        /// characters, identities, orthogonality-exact, orthogonality-mc, or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Largest weight coordinate in the exact sweeps
        #[arg(long = "max-coord", default_value_t = 2)]
        max_coord: i64,
        /// Monte Carlo samples per inner product
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Weyl orbit and the stabilizer of a weight
    Orbit {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
    },
}

/// Parses the process arguments and runs the selected command, returning
/// the process exit code.
pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 0 for --help/--version and 2 for usage errors.
        Err(err) => err.exit(),
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

/// Failures to write output are runtime errors; everything else a command
/// surfaces comes from its arguments.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Io(_) | Error::Json(_) => 1,
        _ => 2,
    }
}

fn dispatch(command: Command) -> Result<u8> {
    match command {
        Command::Chartable { m, format } => cmd_chartable(m, format),
        Command::Eval { n, k, lambda, x } => cmd_eval(n, k, lambda, x),
        Command::Grid { n, k, lambda, range, resolution, format: GridFormat::Csv, out } => {
            cmd_grid(n, k, lambda, range, resolution, out)
        }
        Command::Verify { suite, n, max_coord, samples, seed, format } => {
            cmd_verify(&suite, VerifyOptions { n, max_coord, samples, seed }, format)
        }
        Command::Orbit { n, lambda } => cmd_orbit(n, lambda),
    }
}

/// Classes in display order: identity first, the long cycle last. The
/// table stores them in the opposite order.
fn display_classes(table: &CharacterTable) -> Vec<usize> {
    (0..table.classes().len()).rev().collect()
}

fn cmd_chartable(m: usize, format: Format) -> Result<u8> {
    if m < 2 {
        return Err(Error::DegreeOutOfRange { degree: m, max: MAX_TABLE_DEGREE });
    }
    let table = character_table(m)?;
    match format {
        Format::Text => print!("{}", chartable_text(&table)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&chartable_json(&table))?),
    }
    Ok(0)
}

fn chartable_text(table: &CharacterTable) -> String {
    let order = display_classes(table);
    let labels: Vec<String> =
        order.iter().map(|&c| table.classes()[c].to_string()).collect();
    let sizes: Vec<String> =
        order.iter().map(|&c| table.class_sizes()[c].to_string()).collect();
    let rows: Vec<(String, Vec<String>)> = (1..=table.num_characters())
        .map(|k| {
            let values = order
                .iter()
                .map(|&c| table.value(k, c).expect("index in range").to_string())
                .collect();
            (format!("chi_{k}"), values)
        })
        .collect();

    let mut widths: Vec<usize> = labels.iter().map(|l| l.len()).collect();
    for (_, values) in &rows {
        for (w, v) in widths.iter_mut().zip(values) {
            *w = (*w).max(v.len());
        }
    }
    for (w, s) in widths.iter_mut().zip(&sizes) {
        *w = (*w).max(s.len());
    }
    let head = rows.iter().map(|(name, _)| name.len()).max().unwrap_or(5).max(5);

    let mut out = format!(
        "character table of S_{} ({} elements, {} classes)\n\n",
        table.m(),
        (1..=table.m() as u64).product::<u64>(),
        labels.len()
    );
    let mut line = |name: &str, cells: &[String]| {
        let mut row = format!("  {name:>head$}");
        for (w, c) in widths.iter().zip(cells) {
            let _ = write!(row, "  {c:>w$}");
        }
        out.push_str(row.trim_end());
        out.push('\n');
    };
    line("class", &labels);
    line("size", &sizes);
    for (name, values) in &rows {
        line(name, values);
    }
    out
}

fn chartable_json(table: &CharacterTable) -> serde_json::Value {
    let order = display_classes(table);
    let classes: Vec<serde_json::Value> = order
        .iter()
        .map(|&c| {
            serde_json::json!({
                "label": table.classes()[c].to_string(),
                "cycle_type": table.classes()[c].parts(),
                "size": table.class_sizes()[c],
            })
        })
        .collect();
    let characters: Vec<serde_json::Value> = (1..=table.num_characters())
        .map(|k| {
            let values: Vec<i64> = order
                .iter()
                .map(|&c| table.value(k, c).expect("index in range"))
                .collect();
            serde_json::json!({
                "k": k,
                "shape": table.shape(k).expect("index in range").parts(),
                "degree": table.degree(k).expect("index in range"),
                "values": values,
            })
        })
        .collect();
    serde_json::json!({
        "m": table.m(),
        "classes": classes,
        "characters": characters,
    })
}

fn format_complex(z: Complex64) -> String {
    format!(
        "{:.16e} {} {:.16e}i",
        z.re,
        if z.im < 0.0 { "-" } else { "+" },
        z.im.abs()
    )
}

fn cmd_eval(n: usize, k: usize, lambda: Vec<i64>, x: Vec<f64>) -> Result<u8> {
    let family = ImmanantFamily::new(n)?;
    let spec = ImmanantSpec::new(n, k, Weight::from_omega(lambda)?)?;
    if x.len() != n {
        return Err(Error::CoordinateLength { got: x.len(), expected: n });
    }
    let point = crate::geometry::Point::from_omega(&x)?;

    let via_sum = family.eval(&spec, &point)?;
    let via_matrix = matrix_immanant(&exp_matrix(spec.lambda(), &point)?, family.table(), k)?;

    let coords = |v: &[i64]| {
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
    };
    let xs = x.iter().map(|c| format!("{c}")).collect::<Vec<_>>().join(", ");
    println!(
        "Imm^({},{}) at lambda = ({}) and x = ({})",
        n + 1,
        k,
        coords(spec.lambda().omega()),
        xs
    );
    println!("  character sum  : {}", format_complex(via_sum));
    println!("  matrix route   : {}", format_complex(via_matrix));
    println!("  |difference|   : {:.3e}", (via_sum - via_matrix).norm());
    Ok(0)
}

fn cmd_grid(
    n: usize,
    k: usize,
    lambda: Vec<i64>,
    range: Option<Vec<f64>>,
    resolution: usize,
    out: PathBuf,
) -> Result<u8> {
    if n != 2 {
        return Err(Error::GridRank(n));
    }
    let window = match range {
        None => DEFAULT_RANGE,
        Some(r) if r.len() == 2 => (r[0], r[1]),
        Some(r) => {
            return Err(Error::GridSpec(format!(
                "--range takes lo,hi; got {} values",
                r.len()
            )))
        }
    };
    let spec = GridSpec::new(k, Weight::from_omega(lambda)?, window, window, resolution)?;
    let points = compute_grid(&spec)?;
    std::fs::write(&out, render_csv(&points))?;
    let sidecar_path = out.with_extension("json");
    std::fs::write(&sidecar_path, serde_json::to_string_pretty(&sidecar(&spec))?)?;
    println!(
        "wrote {} points to {} (sidecar {})",
        points.len(),
        out.display(),
        sidecar_path.display()
    );
    Ok(0)
}

fn cmd_verify(suite: &str, opts: VerifyOptions, format: Format) -> Result<u8> {
    let suite: Suite = suite.parse()?;
    let reports = run_suite(suite, &opts)?;
    let passed = reports.iter().all(|r| r.passed);
    match format {
        Format::Text => {
            for report in &reports {
                print!("{}", report.render_text());
            }
            println!("verify {}: {}", suite, if passed { "passed" } else { "FAILED" });
        }
        Format::Json => {
            // One suite renders as a single report object, "all" as an array.
            let value = match reports.as_slice() {
                [only] => serde_json::to_value(only)?,
                many => serde_json::to_value(many)?,
            };
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
    }
    Ok(u8::from(!passed))
}

fn cmd_orbit(n: usize, lambda: Vec<i64>) -> Result<u8> {
    let weight = Weight::from_omega(lambda)?;
    if weight.rank() != n {
        return Err(Error::CoordinateLength { got: weight.rank(), expected: n });
    }
    let orbit = weight.orbit()?;
    let stabilizer = weight.stabilizer()?;
    let coords = |w: &Weight| {
        let parts: Vec<String> = w.omega().iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(", "))
    };
    println!(
        "orbit of lambda = {} under the rank-{n} Weyl group: {} points, stabilizer order {}",
        coords(&weight),
        orbit.len(),
        stabilizer.len()
    );
    for (w, image) in &orbit {
        println!("  {w:<16} -> {}", coords(image));
    }
    println!("stabilizer:");
    for w in &stabilizer {
        println!("  {w}");
    }
    Ok(0)
}
