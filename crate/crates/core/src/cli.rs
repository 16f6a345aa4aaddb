//! Command-line adapter over the library. Each subcommand parses its
//! arguments, calls the matching library function and prints the result.
//!
//! Exit status: 0 on success, 1 on a domain error (for example an
//! inadmissible `(p, n)`), 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::fibration::{
    build_fibration, circle_base_points, export_fiber_samples, invariant_failures, project,
    samples_to_csv, samples_to_jsonl, verify_random_pairs,
};
use crate::hrfamily::{construct_family, verify_hurwitz_equations, verify_linear_combinations};
use crate::linalg::{format_vec, parse_rational, parse_vec};
use crate::rho::{exists_fibration, fiber_dims, generate_table, rho, scan_propositions};
use crate::sampling::{RationalSampler, RNG_NAME};
use crate::squares::{identity_from_family, verify_identity};
use crate::vfields::{check_independence, tangent_fields};

/// Relative `--out` paths are resolved against this directory when it is set.
pub const OUT_DIR_ENV: &str = "SKEWFIB_OUT_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "skewfib",
    about = "Hurwitz-Radon families and skew affine fibrations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SampleFormat {
    Csv,
    Jsonl,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hurwitz-Radon number of Q
    Rho { q: u64 },
    /// Whether R^N is fibered by skew P-planes
    Exists { p: u64, n: u64 },
    /// Admissible fiber dimensions in R^N
    Dims { n: u64 },
    /// Existence table for n = 1..N_MAX
    Table {
        n_max: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
    },
    /// Dominant (p, n) pairs up to N_MAX
    Dominant { n_max: u64 },
    /// Maximal Hurwitz-Radon family in dimension Q (JSON)
    Family {
        q: usize,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Square identity of the maximal family in dimension Q
    Identity {
        q: usize,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Build the (P, N) skew fibration and optionally check random fiber pairs
    Fibration {
        p: usize,
        n: usize,
        #[arg(long, default_value_t = 0)]
        verify_samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Base point of the fiber of the (P, N) fibration through a point
    Project {
        p: usize,
        n: usize,
        /// Comma separated rationals, e.g. 1,1/2,-3
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Sample the (1,3) fibration along circles of base points
    ExportLines {
        #[arg(long, default_value = "1,2")]
        circles: String,
        #[arg(long, default_value_t = 12)]
        per_circle: usize,
        #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 2)]
        samples: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: SampleFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tangent vector fields on the sphere in R^Q
    Vfields {
        q: usize,
        #[arg(long, default_value_t = 0)]
        check_points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Finite-range checks of the consequences of the existence criterion
    ScanProps { n_max: u64 },
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn out_path(path: PathBuf) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path,
    }
}

fn write_file(path: PathBuf, contents: &str) -> Result<String> {
    let path = out_path(path);
    std::fs::write(&path, contents)?;
    Ok(path.display().to_string())
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

/// `yes (p <= rho(q)-1 = b)` or `no (p > rho(q)-1 = b)`.
pub fn explain_existence(p: u64, n: u64) -> Result<String> {
    let ok = exists_fibration(p, n)?;
    let q = n - p;
    let bound = rho(q)? - 1;
    Ok(if ok {
        format!("yes ({p} <= rho({q})-1 = {bound})")
    } else {
        format!("no ({p} > rho({q})-1 = {bound})")
    })
}

fn execute(command: Command) -> Result<String> {
    let mut s = String::new();
    match command {
        Command::Rho { q } => s = format!("{}\n", rho(q)?),
        Command::Exists { p, n } => s = format!("{}\n", explain_existence(p, n)?),
        Command::Dims { n } => {
            let dims: Vec<String> = fiber_dims(n)?.iter().map(u64::to_string).collect();
            s = format!("{}\n", dims.join(","));
        }
        Command::Table { n_max, format } => {
            let t = generate_table(n_max)?;
            s = match format {
                TableFormat::Tsv => t.to_tsv(),
                TableFormat::Json => t.to_json(),
                TableFormat::Latex => t.to_latex(),
            };
        }
        Command::Dominant { n_max } => {
            s.push_str("p\tn\tdoubly_dominant\n");
            for (p, n, doubly) in generate_table(n_max)?.dominant_pairs() {
                s.push_str(&format!("{p}\t{n}\t{doubly}\n"));
            }
        }
        Command::Family { q, verify, out } => {
            let family = construct_family(q)?;
            match out {
                Some(path) => {
                    let written = write_file(path, &family.to_json())?;
                    s.push_str(&format!("wrote {written} (q={q}, r={})\n", family.r()));
                }
                None => s.push_str(&family.to_json()),
            }
            if verify {
                let eq = verify_hurwitz_equations(&family)?.passed();
                let lin = verify_linear_combinations(&family);
                s.push_str(&format!(
                    "hurwitz_equations\t{}\nlinear_combinations\t{}\n",
                    pass(eq),
                    pass(lin)
                ));
                if !(eq && lin) {
                    return Err(Error::InvalidFamily(format!(
                        "constructed family for q={q} failed verification"
                    )));
                }
            }
        }
        Command::Identity { q, verify, pretty } => {
            let identity = identity_from_family(&construct_family(q)?);
            s.push_str(&if pretty {
                identity.pretty()
            } else {
                identity.to_json()?
            });
            if verify {
                let check = verify_identity(&identity);
                s.push_str(&format!("verified\t{}\n", check.holds()));
                if !check.holds() {
                    return Err(Error::InvalidFamily(format!(
                        "identity for q={q}: {check:?}"
                    )));
                }
            }
        }
        Command::Fibration {
            p,
            n,
            verify_samples,
            seed,
            out,
        } => {
            let fib = build_fibration(p, n)?;
            let failures = invariant_failures(&fib);
            s.push_str(&format!("fibration\tp={p}\tn={n}\tq={}\n", fib.q()));
            s.push_str(&format!("invariants\t{}\n", pass(failures.is_empty())));
            if verify_samples > 0 {
                let mut sampler = RationalSampler::new(seed);
                let r = verify_random_pairs(&fib, verify_samples, &mut sampler);
                s.push_str(&format!("# seed={seed} rng={RNG_NAME}\n"));
                s.push_str(&format!(
                    "pairs\t{}\tskew={}\tsame_fiber={}\tviolations={}\t{}\n",
                    r.pairs,
                    r.skew,
                    r.same_fiber,
                    r.violations,
                    pass(r.all_skew())
                ));
            }
            if let Some(path) = out {
                s.push_str(&format!("wrote {}\n", write_file(path, &fib.to_json())?));
            }
        }
        Command::Project { p, n, point } => {
            let fib = build_fibration(p, n)?;
            let point = parse_vec(&point)?;
            if point.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "point has {} coordinates, expected {n}",
                    point.len()
                )));
            }
            s = format!("{}\n", format_vec(&project(&fib, &point)));
        }
        Command::ExportLines {
            circles,
            per_circle,
            range,
            samples,
            format,
            out,
        } => {
            let fib = build_fibration(1, 3)?;
            let (lo, hi) = range
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("range must be A:B, got {range:?}")))?;
            let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
            let mut bases = Vec::new();
            for c in parse_vec(&circles)? {
                bases.extend(circle_base_points(&c, per_circle));
            }
            let samples = export_fiber_samples(&fib, &bases, (&lo, &hi), samples);
            let text = match format {
                SampleFormat::Csv => samples_to_csv(&samples, fib.n()),
                SampleFormat::Jsonl => samples_to_jsonl(&samples),
            };
            match out {
                Some(path) => {
                    s = format!(
                        "wrote {} ({} samples)\n",
                        write_file(path, &text)?,
                        samples.len()
                    )
                }
                None => s = text,
            }
        }
        Command::Vfields {
            q,
            check_points,
            seed,
        } => {
            let set = tangent_fields(q)?;
            s.push_str(&format!("fields\t{}\n", set.fields.len()));
            s.push_str(&format!("tangency\t{}\n", pass(set.tangency_holds())));
            s.push_str(&format!(
                "gram_identity\t{}\n",
                pass(set.gram_identity_holds())
            ));
            if check_points > 0 && q > 0 {
                let mut sampler = RationalSampler::new(seed);
                let points: Vec<_> = (0..check_points)
                    .map(|_| sampler.nonzero_vector(q))
                    .collect();
                let r = check_independence(&set, &points)?;
                s.push_str(&format!("# seed={seed} rng={RNG_NAME}\n"));
                s.push_str(&format!(
                    "points\t{}\ttangent_failures={}\trank_failures={}\t{}\n",
                    r.points,
                    r.tangent_failures,
                    r.rank_failures,
                    pass(r.passed())
                ));
            }
        }
        Command::ScanProps { n_max } => s = scan_propositions(n_max)?.render(),
    }
    Ok(s)
}
