use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "quotcoh",
    version,
    about = "Cohomology and point counts of Quot schemes of points"
)]
pub struct Cli {
    /// Print the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poincaré polynomials and series.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Dimension bounds for the loci Z_{n,r,l} and l_max.
    #[command(subcommand)]
    Loci(LociCmd),
    /// Torus-fixed points and cell dimensions.
    #[command(subcommand)]
    Bb(BbCmd),
    /// Point counts over small prime fields.
    #[command(subcommand)]
    Count(CountCmd),
    /// Identity checks; exit status 1 on any mismatch.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct NrArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct NrpArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub p: u32,
}

#[derive(Debug, Subcommand)]
pub enum SeriesCmd {
    /// Hilb_2(A^n x P^(r-1)).
    Hilb2 {
        #[command(flatten)]
        nr: NrArgs,
    },
    /// Quot_2(O^r) on A^n.
    Quot2 {
        #[command(flatten)]
        nr: NrArgs,
    },
    /// The n -> infinity limit of Quot_2(O^r).
    Stable {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 20)]
        prec: usize,
    },
    /// Hilbert series of Z[c_1..c_d]/(c_d^r).
    Target {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 20)]
        prec: usize,
    },
    /// Quot_1(O^r) on A^n.
    D1 {
        #[command(flatten)]
        nr: NrArgs,
    },
    /// The R-locus of d x d matrices.
    Rlocus {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
    },
    /// Gaussian binomial [a choose b]_q.
    Grass {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum LociCmd {
    /// Lower and upper bounds on dim Z_{n,r,l}.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        l: u64,
    },
    /// Closed-form l_max(d, r).
    Lmax {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Pos,
    Neg,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum BbCmd {
    /// Fixed points of Hilb_2(A^n x P^(r-1)).
    Hilb2 {
        #[command(flatten)]
        nr: NrArgs,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
    },
    /// Fixed points of the R-locus stratum with parameters (m, s).
    Rcells {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CountCmd {
    /// Brute-force count of Quot_d(O^r) on A^n over F_p.
    Quot {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: u32,
    },
    /// Count of Hilb_2(A^n x P^(r-1)) over F_p.
    Hilb2 {
        #[command(flatten)]
        nrp: NrpArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Every identity check over a parameter sweep.
    All {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_r: usize,
        /// Comma-separated primes for the finite-field checks.
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        fields: Vec<u32>,
        /// Emit one CSV row per parameter tuple.
        #[arg(long)]
        csv: bool,
    },
    /// #Quot_2 = #Hilb_2 + #Z - #Z' over F_p.
    Blowup {
        #[command(flatten)]
        nrp: NrpArgs,
    },
    /// Exhaustive l_max search over F_p.
    Lmax {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        gens: usize,
    },
    /// Structure of the spaces W_{d-k,k} for all 0 < k < d.
    Wspace {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
}
