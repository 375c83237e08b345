use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use twistlab::twisted_cells::Variant;
use twistlab_cli::output::{render, Format};
use twistlab_cli::{parse, ClassInput, CliResult, Outcome};

#[derive(Parser)]
#[command(name = "twistlab", version, about = "Exact checks for foldings, twisted Schubert cells, E6 and hyperspecial current algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
}

#[derive(Args)]
struct TypeArgs {
    /// Family letter A-G.
    #[arg(long = "type", value_parser = parse::family)]
    family: twistlab::root_system::Family,
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    rank: u16,
}

#[derive(Args)]
struct FoldArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Order of the standard automorphism.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4))]
    m: u32,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ClassArgs {
    /// Base coweight in fundamental-coweight coordinates; fractions allowed.
    #[arg(long, value_parser = parse::coords)]
    lambda: Option<parse::Coords>,
    /// Coinvariant class in fundamental-weight coordinates of H.
    #[arg(long, value_parser = parse::coords)]
    class: Option<parse::Coords>,
}

impl ClassArgs {
    fn input(&self) -> ClassInput {
        match (&self.lambda, &self.class) {
            (Some(l), _) => ClassInput::Lambda(l.0.clone()),
            (_, Some(c)) => ClassInput::Class(c.0.clone()),
            _ => unreachable!("clap enforces one of --lambda/--class"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Special,
    AbsolutelySpecial,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan data, root counts and Weyl group order.
    Rootsys(TypeArgs),
    /// Folding tables for a standard automorphism.
    Fold(FoldArgs),
    /// Dominant classes below a coinvariant class and their cover relation.
    Dominance {
        #[command(flatten)]
        fold: FoldArgs,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Smooth and singular cells of a twisted affine Schubert variety.
    SmoothLocus {
        #[command(flatten)]
        fold: FoldArgs,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value = "special")]
        variant: VariantArg,
    },
    /// The V(ω4) suite for E6.
    E6Duality,
    /// Images of the hyperspecial current algebra basis.
    HyperspecialCheck {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        ell: u16,
        #[arg(long, default_value_t = 6)]
        degree: i64,
        /// Random bracket-compatibility trials.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Levi-extremality of all lowering words of weight ω2 in V(ω4).
    LeviExtremal,
    /// The numbers-game poset above ω2.
    NumbersGame,
}

fn progress(msg: &str) {
    eprintln!("twistlab: {msg}");
}

fn fold_system(f: &FoldArgs) -> CliResult<twistlab::folding::FoldedSystem> {
    let ty = parse::cartan_type(f.ty.family, f.ty.rank.into())?;
    twistlab_cli::folded_system(ty, f.m)
}

fn run(cmd: &Command) -> CliResult<Outcome> {
    match cmd {
        Command::Rootsys(t) => twistlab_cli::rootsys(parse::cartan_type(t.family, t.rank.into())?),
        Command::Fold(f) => twistlab_cli::fold(&fold_system(f)?),
        Command::Dominance { fold, class } => twistlab_cli::dominance(&fold_system(fold)?, &class.input()),
        Command::SmoothLocus { fold, class, variant } => {
            let v = match variant {
                VariantArg::Special => Variant::Special,
                VariantArg::AbsolutelySpecial => Variant::AbsolutelySpecial,
            };
            twistlab_cli::smooth_locus(&fold_system(fold)?, &class.input(), v)
        }
        Command::E6Duality => {
            let suite = twistlab_cli::build_suite(&mut progress)?;
            twistlab_cli::e6_duality(&suite, &mut progress)
        }
        Command::HyperspecialCheck { ell, degree, trials, seed } => {
            twistlab_cli::hyperspecial_check((*ell).into(), *degree, *trials, *seed)
        }
        Command::LeviExtremal => {
            let suite = twistlab_cli::build_suite(&mut progress)?;
            progress("sweep");
            twistlab_cli::levi_extremal(&suite)
        }
        Command::NumbersGame => twistlab_cli::numbers_game(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.into());
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("twistlab: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli.command)) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(render(&out.value, cli.format).as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("twistlab: error: {e}");
            ExitCode::from(2)
        }
    }
}
