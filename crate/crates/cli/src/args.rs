use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "frobhom", version)]
#[command(about = "Verify and certify identities of Frobenius n-homomorphisms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest n for which S_n may be enumerated (default 10).
    #[arg(long, global = true)]
    pub limit_perms: Option<usize>,

    /// Largest ground set whose set partitions may be enumerated (default 12).
    #[arg(long, global = true)]
    pub limit_partitions: Option<usize>,

    /// Size cap for every `verify` target (defaults 6/5/5/4 for
    /// recursion/symmetry/sum/compose).
    #[arg(long, global = true)]
    pub limit_symbolic: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact symbolic verification in the free algebra.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Certification on concrete matrix and product rings.
    Check {
        #[command(subcommand)]
        target: CheckTarget,
    },
    /// Time the explicit and recursive evaluation strategies.
    Bench {
        #[command(subcommand)]
        target: BenchTarget,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyTarget {
    /// Explicit permutation sum equals the recursion on the last argument.
    Recursion {
        #[arg(long)]
        n: usize,
    },
    /// f_n is invariant under every reordering of its arguments.
    Symmetry {
        #[arg(long)]
        n: usize,
    },
    /// (f+g)_p is the sum over bipartitions of f_U g_V.
    Sum {
        #[arg(long)]
        p: usize,
    },
    /// (f.g)_n is the sum over set partitions of f_k(b_P1, .., b_Pk).
    Compose {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckTarget {
    /// Tr_{d+1} = 0 on d x d integer matrices.
    Trace {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Entries are drawn uniformly from [-bound, bound].
        #[arg(long, default_value_t = 3)]
        bound: i64,
        /// Replace the trace by the non-central map A -> A[1][2].
        #[arg(long, hide = true)]
        inject_noncentral: bool,
    },
    /// Sum of an n- and an m-homomorphism on Z^p is an (n+m)-homomorphism.
    SumTheorem {
        #[arg(long)]
        p: usize,
        /// Coordinates summed by f, e.g. `1,2`.
        #[arg(long, value_parser = parse_indices)]
        f_indices: Indices,
        #[arg(long, value_parser = parse_indices)]
        g_indices: Indices,
    },
    /// Composition of an n- and an m-homomorphism is an nm-homomorphism.
    ComposeTheorem {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Coordinate sets of g: Z^p -> Z^q separated by `;`, e.g. `1,2;3,4`.
        #[arg(long, value_parser = parse_spec)]
        g_spec: Spec,
        #[arg(long, value_parser = parse_indices)]
        f_indices: Indices,
    },
    /// f_m = 0 propagates to f_{m+1} and f_{m+2}.
    Vanishing {
        #[arg(long)]
        p: usize,
        #[arg(long, value_parser = parse_indices)]
        f_indices: Indices,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum BenchTarget {
    Explicit(BenchArgs),
    Recursive(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchRing {
    Matrix,
    Symbolic,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = BenchRing::Matrix)]
    pub ring: BenchRing,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    /// Required for the matrix ring.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 3)]
    pub bound: i64,
}

pub type Indices = Vec<usize>;
pub type Spec = Vec<Vec<usize>>;

fn parse_indices(s: &str) -> Result<Indices, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| format!("`{t}` is not a coordinate index"))
        })
        .collect()
}

fn parse_spec(s: &str) -> Result<Spec, String> {
    s.split(';').map(parse_indices).collect()
}
