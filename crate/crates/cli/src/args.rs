use crate::config::{FieldSpec, Format, JobConfig, Task};
use crate::error::CliError;
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

const SYNTAX: &str = "\
Field elements: integers mod p, `w` or `w^k` for the field generator, or a
digit vector `[c0,c1,...]` over GF(p). Polynomials: an expression in X such as
`X^4 + X^3 + w*X^2 + 1` or `(X-5)(X-3)`, or an ascending coefficient list
`[1,0,w,1,1]`. Products follow the ring's multiplication order. Matrices:
rows in brackets separated by `;`, e.g. `[1,w];[0,1]`, or `I<n>` for the identity.";

#[derive(Parser, Debug)]
#[command(name = "skewcodes", version, about = "Skew polynomial rings over finite fields and skew GC codes", after_help = SYNTAX)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Search for MDS codes generated by products of linear factors.
    MdsSearch {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// List the codes given by right divisors of f.
    Enumerate {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        f: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Split GF(q)^n into kernels of the prime-power factors of an invariant f.
    Decompose {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        f: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Generator matrix of the dual of the code (g) modulo f.
    Dual {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Minimal polynomial of the semi-linear map v -> theta(v) M.
    Minpoly {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "M", alias = "matrix")]
        matrix: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check the hypotheses of the designed-distance bound for the code (g).
    Bound {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Evaluation point, in the extension of degree --ext.
        #[arg(long)]
        beta: String,
        #[arg(long, default_value_t = 1)]
        ext: u32,
        #[arg(long, default_value_t = 0)]
        l: u64,
        /// Step of the first direction (same as --cs with one entry).
        #[arg(long, conflicts_with = "cs")]
        c: Option<u64>,
        /// Steps c_1,...,c_r.
        #[arg(long, value_delimiter = ',')]
        cs: Vec<u64>,
        /// Extents s_2,...,s_r.
        #[arg(long, value_delimiter = ',')]
        ss: Vec<u64>,
        #[arg(long)]
        delta: usize,
        /// Also compute the true minimum distance.
        #[arg(long)]
        distance: bool,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Field order, a prime power.
    #[arg(long, conflicts_with_all = ["p", "s"])]
    pub q: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
    /// Defining polynomial over GF(p), ascending, e.g. [1,1,0,1].
    #[arg(long)]
    pub modulus: Option<String>,
    /// Automorphism exponent t, theta(a) = a^(p^t).
    #[arg(long, default_value_t = 0)]
    pub theta: u32,
}

#[derive(Args, Debug, Clone)]
pub struct RingArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Derivation parameter: delta(a) = beta (theta(a) - a).
    #[arg(long, default_value = "0")]
    pub beta: String,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for the parallel searches.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Largest number of candidates an exhaustive search may visit.
    #[arg(long, env = "SKEWCODES_BUDGET", default_value_t = 1 << 24)]
    pub budget: u64,
}

impl FieldArgs {
    fn spec(&self) -> Result<FieldSpec, CliError> {
        let (p, s) = match (self.q, self.p) {
            (Some(q), _) => prime_power(q).ok_or_else(|| CliError::usage(format!("{q} is not a prime power")))?,
            (None, Some(p)) => (p, self.s.unwrap_or(1)),
            (None, None) => return Err(CliError::usage("give the field with --q or --p/--s")),
        };
        let modulus = self.modulus.as_deref().map(parse_int_list).transpose()?;
        Ok(FieldSpec { p, s, modulus })
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut s = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        s += 1;
    }
    (rest == 1).then_some((p, s))
}

fn parse_int_list(text: &str) -> Result<Vec<u32>, CliError> {
    text.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| CliError::usage(format!("bad modulus entry `{t}`"))))
        .collect()
}

impl Cli {
    pub fn into_config(self) -> Result<JobConfig, CliError> {
        let (field, beta, task, run) = match self.command {
            Command::MdsSearch { ring, n, run } => (ring.field, ring.beta, Task::MdsSearch { n }, run),
            Command::Enumerate { ring, f, run } => (ring.field, ring.beta, Task::Enumerate { f }, run),
            Command::Decompose { ring, f, run } => (ring.field, ring.beta, Task::Decompose { f }, run),
            Command::Dual { ring, f, g, run } => (ring.field, ring.beta, Task::Dual { f, g }, run),
            Command::Minpoly { field, matrix, run } => (field, "0".into(), Task::Minpoly { matrix }, run),
            Command::Bound { field, f, g, beta, ext, l, c, cs, ss, delta, distance, run } => {
                let cs = match c {
                    Some(c) => vec![c],
                    None if cs.is_empty() => return Err(CliError::usage("give the step with --c or --cs")),
                    None => cs,
                };
                (field, "0".into(), Task::Bound { f, g, beta, ext, l, cs, ss, delta, distance }, run)
            }
        };
        Ok(JobConfig {
            field: field.spec()?,
            theta_t: field.theta,
            beta,
            task,
            format: run.format,
            out: run.out,
            jobs: run.jobs,
            budget: run.budget,
        })
    }
}
