//! Batch JSON front end: every subcommand maps to one library operation or
//! verification suite. Inputs come from flags or a JSON payload file;
//! output is a single deterministic JSON document on stdout. Exit codes:
//! 0 success, 1 malformed input, 2 domain error (pole, constraint, depth).

use clap::{Args, Parser, Subcommand};

mod run;
mod schema;

#[derive(Parser)]
#[command(name = "gsp4l", version, about = "exact computations for GSp(4) x GL(2) interpolation data")]
pub struct Cli {
    #[command(flatten)]
    pub globals: Globals,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Clone)]
pub struct Globals {
    /// Working prime (env GSP4L_P).
    #[arg(long, global = true, env = "GSP4L_P", default_value_t = 3)]
    pub p: u32,
    /// Default q-expansion truncation (env GSP4L_TRUNC).
    #[arg(long, global = true, env = "GSP4L_TRUNC", default_value_t = 50)]
    pub trunc: usize,
    /// Seed for randomized identity checks (env GSP4L_SEED).
    #[arg(long, global = true, env = "GSP4L_SEED", default_value_t = 7)]
    pub seed: u64,
    /// Write the JSON output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Scalar arithmetic: Gauss sums and additive character sums.
    Exactnum {
        #[command(subcommand)]
        cmd: ExactnumCmd,
    },
    /// Weight and Weyl-group operations.
    #[command(alias = "weyl")]
    Weights {
        #[command(subcommand)]
        cmd: WeightsCmd,
    },
    /// Function-model branching, factorization, and identity checks.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Truncated q-expansions and the star action.
    Qexp {
        #[command(subcommand)]
        cmd: QexpCmd,
    },
    /// Euler factors, archimedean factors, interpolation data.
    #[command(alias = "ep")]
    Lfac {
        #[command(subcommand)]
        cmd: LfacCmd,
    },
    /// Local zeta closed forms at deep Iwahori level.
    Zeta {
        #[command(subcommand)]
        cmd: ZetaCmd,
    },
    /// Distribution growth estimates and analyticity constants.
    Dist {
        #[command(subcommand)]
        cmd: DistCmd,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
pub enum ExactnumCmd {
    /// Gauss sum of a p-power-conductor character.
    Gauss {
        /// Character: "triv", "quad", or "<k>@<c>".
        #[arg(long)]
        chi: String,
    },
    /// Sum of the primitive p^h-th roots of unity.
    Addsum {
        #[arg(long)]
        h: u32,
    },
    /// p-adic valuation of a rational.
    Vp {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(Subcommand)]
pub enum WeightsCmd {
    /// Apply a Weyl element to a weight.
    Act {
        #[arg(long)]
        elt: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Apply the shifted action.
    Star {
        #[arg(long)]
        elt: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// The derived weight dictionary for (r1, r2, t1, t2, xi1).
    Situation {
        #[arg(long)]
        r1: i64,
        #[arg(long)]
        r2: i64,
        #[arg(long)]
        t1: i64,
        #[arg(long)]
        t2: i64,
        #[arg(long, allow_hyphen_values = true)]
        xi1: i64,
    },
    /// Small-slope test on eigenvalue valuations.
    Slope {
        /// klingen, siegel, or borel.
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        v_kl: String,
        #[arg(long, allow_hyphen_values = true)]
        v_si: String,
        #[arg(long)]
        r1: i64,
        #[arg(long)]
        r2: i64,
    },
    /// Semisimplification predicate by bounded search.
    Ss {
        /// minimal-cosets or levi.
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        v_siegel: String,
        #[arg(long, allow_hyphen_values = true)]
        v_klingen: String,
        #[arg(long, allow_hyphen_values = true)]
        v_center: String,
        #[arg(long)]
        r1: i64,
        #[arg(long)]
        r2: i64,
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Index set and weight family of the nearly-algebraic dual.
    SigmaSet {
        #[arg(long)]
        r1: i64,
        #[arg(long)]
        r2: i64,
    },
}

#[derive(Subcommand)]
pub enum RepCmd {
    /// Evaluate the branched vector at a unipotent point.
    BranchEval {
        #[arg(long)]
        t1: i64,
        #[arg(long)]
        t2: i64,
        #[arg(long)]
        r2: i64,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Unipotent factorization of a matrix (rows separated by ';').
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = 1)]
        beta: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Run the matrix-identity suite.
    Verify {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Subcommand)]
pub enum QexpCmd {
    /// Divisor-sum family coefficients to the truncation.
    Eis {
        /// Character descriptor "k" or "k*quad" or "k*<g>@<c>".
        #[arg(long, allow_hyphen_values = true)]
        kappa1: String,
        #[arg(long, allow_hyphen_values = true)]
        kappa2: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        /// Tame parity at -1 (+1 or -1).
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        tame_parity: i64,
    },
    /// Apply a locally analytic function to an expansion payload.
    Star {
        /// Function: "identity", "indicator", "one", or "power:<k>[:quad]".
        #[arg(long = "fn")]
        function: String,
        /// Path to the expansion JSON ("-" for stdin).
        #[arg(long)]
        payload: String,
    },
    /// p-depletion of an expansion payload.
    Deplete {
        #[arg(long)]
        payload: String,
    },
}

#[derive(Subcommand)]
pub enum LfacCmd {
    /// Degree-8 spin-times-standard Euler polynomial.
    Euler {
        /// Four comma-separated rationals with t1 t4 = t2 t3.
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        chi_value: String,
    },
    /// Archimedean Gamma factor.
    Linf {
        #[arg(long)]
        r1: i64,
        #[arg(long)]
        r2: i64,
        #[arg(long)]
        t2: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
    },
    /// Critical range in the absolute and shifted variables.
    Crit {
        #[arg(long)]
        r1: i64,
        #[arg(long)]
        r2: i64,
        #[arg(long)]
        t2: i64,
    },
    /// Modified interpolation factor at p (8-dimensional case).
    #[command(name = "ep-a", alias = "a")]
    EpA {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        chi: String,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
    },
    /// Central multiplier for the triple product.
    #[command(name = "ep-b", alias = "b")]
    EpB {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long, allow_hyphen_values = true)]
        mu1: String,
        #[arg(long, allow_hyphen_values = true)]
        mu2: String,
    },
    /// Interpolation-region membership.
    Region {
        /// a or b.
        #[arg(long)]
        case: String,
        #[arg(long)]
        r1: i64,
        #[arg(long)]
        r2: i64,
        #[arg(long, default_value_t = 0)]
        t2: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        j: i64,
        #[arg(long, default_value_t = 0)]
        d1: i64,
        #[arg(long, default_value_t = 0)]
        d2: i64,
    },
    /// Assemble the 8-dimensional interpolation right-hand side.
    #[command(name = "interp-a")]
    InterpA {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        chi: String,
        #[arg(long)]
        r1: i64,
        #[arg(long)]
        r2: i64,
        #[arg(long)]
        t2: i64,
        /// Shifted critical variable 0 <= j <= r1-r2-t2.
        #[arg(long)]
        j: i64,
        /// Local-integral ratio (rational).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        zs: String,
        /// Optional per-prime Euler data payload.
        #[arg(long)]
        payload: Option<String>,
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// Assemble the triple-product right-hand side.
    #[command(name = "interp-b")]
    InterpB {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long, allow_hyphen_values = true)]
        mu1: String,
        #[arg(long, allow_hyphen_values = true)]
        mu2: String,
        #[arg(long)]
        r1: i64,
        #[arg(long)]
        r2: i64,
        #[arg(long)]
        d1: i64,
        #[arg(long)]
        d2: i64,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        period: String,
    },
}

#[derive(Subcommand)]
pub enum ZetaCmd {
    /// Closed form of the twisted zeta integral at depth beta.
    Iwahori {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        chi: String,
        #[arg(long)]
        beta: u32,
        /// Optional integer s at which to evaluate the body.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<i64>,
    },
    /// Depth bound for a conductor exponent.
    Minbeta {
        #[arg(long)]
        r: u32,
    },
    /// Degenerate-orbit Whittaker value at depth beta.
    Vanish {
        #[arg(long)]
        beta: u32,
    },
}

#[derive(Subcommand)]
pub enum DistCmd {
    /// Least-slope growth order of a norm profile.
    Order {
        /// Comma-separated log_p norms for levels 1..n.
        #[arg(long, allow_hyphen_values = true)]
        norms: String,
    },
    /// Analyticity constants for a radius parameter.
    Eps {
        #[arg(long)]
        epsilon: String,
    },
    /// Binomial-norm bound sweep plus analytic maximum.
    Bound {
        #[arg(long)]
        epsilon: String,
        #[arg(long, default_value_t = 10000)]
        kmax: u64,
    },
    /// Star-action integrality audit on an expansion payload.
    Audit {
        #[arg(long)]
        payload: String,
        /// Function: "identity", "indicator", "one", or "power:<k>[:quad]".
        #[arg(long = "fn", default_value = "indicator")]
        function: String,
        #[arg(long)]
        radius: u32,
    },
}

#[derive(Subcommand)]
pub enum VerifyCmd {
    /// The conjugation/factorization identity suite.
    Identities {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    match run::dispatch(&cli) {
        Ok(value) => {
            let text = serde_json::to_string_pretty(&value).expect("serialization");
            match &cli.globals.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text + "\n") {
                        eprintln!("error: cannot write output: {e}");
                        std::process::exit(1);
                    }
                }
                None => println!("{text}"),
            }
        }
        Err(run::CliError::Input(msg)) => {
            eprintln!("input error: {msg}");
            std::process::exit(1);
        }
        Err(run::CliError::Domain(msg)) => {
            eprintln!("domain error: {msg}");
            std::process::exit(2);
        }
    }
}
