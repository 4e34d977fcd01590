//! `selfdist`: command-line access to the selfdist library.
//!
//! Exit status is 0 when a check holds or a command succeeds, 1 when a check
//! fails or nothing is found, and 2 on any error.

mod report;

/// Like `println!`, but a closed stdout (as in `selfdist ... | head`) is not an error.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

macro_rules! outp {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($arg)*);
    }};
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use selfdist::construct::{self, Built};
use selfdist::enumerate::{self, Family, Options};
use selfdist::format;
use selfdist::identities::{self, Constraints, Identity, ModelQuery};
use selfdist::perm::{PermGroup, DEFAULT_CAP};
use selfdist::represent::{self, Envelope};
use selfdist::{CayleyTable, LoopView};

#[derive(Parser)]
#[command(name = "selfdist", version, about = "Quasigroups, loops and quandles from Cayley tables")]
struct Cli {
    /// Worker threads for enumeration (0: one per core)
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Largest permutation group to materialize
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Run both latin criteria and both trimediality checks, failing on disagreement
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full property report
    Props { file: PathBuf },
    /// Check one named property
    Check { file: PathBuf, property: String },
    /// Evaluate identities or search for models
    #[command(subcommand)]
    Identity(IdentityCmd),
    /// Principal loop isotope a·b = (a/e1)*(e2\b)
    Isotope { file: PathBuf, e1: usize, e2: usize },
    /// Print a named example table
    Construct {
        /// Builder name; omit to list them
        name: Option<String>,
    },
    /// Core a*b = a·(b⁻¹·a) of a loop
    Core { file: PathBuf },
    /// Belousov-Onoi loop of a latin quandle at base point e
    BoLoop { file: PathBuf, e: usize },
    /// Quandle φ(a)·ψ(b) of a BO-module
    BoQuandle { loop_file: PathBuf, psi_file: PathBuf },
    /// Envelope of a connected quandle, or a quandle from an envelope
    Envelope(EnvelopeArgs),
    /// Representation extraction
    #[command(subcommand)]
    Represent(RepresentCmd),
    /// Isomorphism test
    Iso { a: PathBuf, b: PathBuf },
    /// Count (and optionally list) a family up to isomorphism
    Enumerate {
        /// quandle, connected-quandle, latin-quandle, loop, medial-idempotent or bo
        family: String,
        n: usize,
        /// Write the tables to a census file
        #[arg(long)]
        census: Option<PathBuf>,
        /// Print the tables as well
        #[arg(long)]
        list: bool,
        /// Raise the order bound for this family
        #[arg(long)]
        bound: Option<usize>,
    },
}

#[derive(Subcommand)]
enum IdentityCmd {
    /// Does the identity hold in the table?
    Check { file: PathBuf, identity: String },
    /// Search for a model of the identities
    Find {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long = "loop")]
        loop_: bool,
        #[arg(long)]
        quasigroup: bool,
        #[arg(long)]
        idempotent: bool,
        /// An identity the model must violate (repeatable)
        #[arg(long = "not")]
        negated: Vec<String>,
        /// Count models up to isomorphism instead of printing one
        #[arg(long)]
        count: bool,
        /// Largest order searched
        #[arg(long, default_value_t = identities::DEFAULT_MODEL_BOUND)]
        bound: usize,
        #[arg(required = true)]
        identities: Vec<String>,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct EnvelopeArgs {
    #[command(subcommand)]
    build: Option<EnvelopeCmd>,
    file: Option<PathBuf>,
    e: Option<usize>,
}

#[derive(Subcommand)]
enum EnvelopeCmd {
    /// Coset quandle of a group given by generators and ζ
    Build {
        group_file: PathBuf,
        zeta_file: PathBuf,
        e: usize,
    },
}

#[derive(Subcommand)]
enum RepresentCmd {
    /// Affine form of a medial quasigroup over its loop isotope at (e1, e2)
    Medial { file: PathBuf, e1: usize, e2: usize },
}

type Outcome<T> = Result<T, Box<dyn std::error::Error>>;

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn read_table(path: &Path) -> Outcome<CayleyTable> {
    format::parse_table(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn read_loop(path: &Path) -> Outcome<LoopView> {
    Ok(LoopView::new(read_table(path)?)?)
}

fn parse_identity(text: &str) -> Outcome<Identity> {
    Identity::parse(text).map_err(|e| format!("{text:?}: {e}").into())
}

/// Ok(true) exits 0, Ok(false) exits 1.
fn run(cli: Cli) -> Outcome<bool> {
    let strict = cli.strict;
    let cap = cli.cap;
    match cli.command {
        Command::Props { file } => {
            let t = read_table(&file)?;
            outp!("{}", report::properties(&t, cap, strict)?);
            Ok(true)
        }
        Command::Check { file, property } => {
            let t = read_table(&file)?;
            let v = report::check(&t, &property, strict)?;
            out!("{v}");
            Ok(v)
        }
        Command::Identity(IdentityCmd::Check { file, identity }) => {
            let t = read_table(&file)?;
            let id = parse_identity(&identity)?;
            match identities::holds(&t, &id)? {
                None => {
                    out!("holds");
                    Ok(true)
                }
                Some(w) => {
                    let s: Vec<String> = w.iter().map(|(v, x)| format!("{v}={x}")).collect();
                    out!("fails at {}", s.join(" "));
                    Ok(false)
                }
            }
        }
        Command::Identity(IdentityCmd::Find {
            n,
            loop_,
            quasigroup,
            idempotent,
            negated,
            count,
            bound,
            identities: ids,
        }) => {
            let mut q = ModelQuery::new(
                ids.iter().map(|s| parse_identity(s)).collect::<Outcome<_>>()?,
                n,
                Constraints {
                    quasigroup,
                    loop_,
                    idempotent,
                },
            );
            q.negated = negated.iter().map(|s| parse_identity(s)).collect::<Outcome<_>>()?;
            q.bound = bound;
            if count {
                let c = identities::count_models_up_to_isomorphism(&q)?;
                out!("{c}");
                return Ok(c > 0);
            }
            match identities::find_model_with(&q)? {
                Some(t) => {
                    outp!("{}", format::write_table(&t));
                    Ok(true)
                }
                None => {
                    out!("none");
                    Ok(false)
                }
            }
        }
        Command::Isotope { file, e1, e2 } => {
            let l = construct::principal_loop_isotope(&read_table(&file)?, e1, e2)?;
            out!("# unit {}", l.unit());
            outp!("{}", format::write_table(l.table()));
            Ok(true)
        }
        Command::Construct { name: None } => {
            for n in construct::builder_names() {
                out!("{n}");
            }
            Ok(true)
        }
        Command::Construct { name: Some(name) } => {
            let b = construct::by_name(&name)?;
            outp!("{}", format::write_table(b.table()));
            if let (Built::Loop(_), "boloop15") = (&b, name.as_str()) {
                out!("%");
                outp!(
                    "{}",
                    format::write_permutations(15, &[construct::boloop15_automorphism()])
                );
            }
            Ok(true)
        }
        Command::Core { file } => {
            outp!("{}", format::write_table(&construct::core_of_loop(&read_loop(&file)?)?));
            Ok(true)
        }
        Command::BoLoop { file, e } => {
            let t = read_table(&file)?;
            let (l, psi) = construct::bo_loop_from_ldq(&t, e)?;
            outp!("{}", format::write_table(l.table()));
            out!("%");
            outp!("{}", format::write_permutations(t.order(), &[psi]));
            Ok(true)
        }
        Command::BoQuandle { loop_file, psi_file } => {
            let l = read_loop(&loop_file)?;
            let psi = format::parse_permutation(&read(&psi_file)?)?;
            outp!("{}", format::write_table(&construct::bo_quandle(&l, &psi)?));
            Ok(true)
        }
        Command::Envelope(EnvelopeArgs {
            build: Some(EnvelopeCmd::Build {
                group_file,
                zeta_file,
                e,
            }),
            ..
        }) => {
            let gens = format::parse_permutations(&read(&group_file)?)?;
            let zeta = format::parse_permutation(&read(&zeta_file)?)?;
            let g = PermGroup::generate(zeta.degree(), &gens, cap)?;
            let env = Envelope::new(g, zeta, e)?;
            outp!("{}", format::write_table(&represent::quandle_from_envelope(&env)?));
            Ok(true)
        }
        Command::Envelope(EnvelopeArgs {
            build: None,
            file: Some(file),
            e: Some(e),
        }) => {
            let t = read_table(&file)?;
            let env = represent::envelope_of_with_cap(&t, e, cap)?;
            let latin = represent::envelope_is_latin(&env, strict)?;
            out!("group order: {}", env.group().order());
            out!("stabilizer order: {}", env.stabilizer().order());
            out!("base: {}", env.base());
            let zeta: Vec<String> = env.zeta().images().iter().map(|v| v.to_string()).collect();
            out!("zeta: {}", zeta.join(" "));
            out!("latin: {latin}");
            out!("generators:");
            outp!(
                "{}",
                format::write_permutations(t.order(), env.group().generators())
            );
            Ok(true)
        }
        Command::Envelope(_) => {
            Err("usage: envelope <quandle-file> <e> | envelope build <group-file> <zeta-file> <e>".into())
        }
        Command::Represent(RepresentCmd::Medial { file, e1, e2 }) => {
            let t = read_table(&file)?;
            let f = represent::medial_to_affine(&t, e1, e2)?;
            let n = t.order();
            out!("# loop isotope, unit {}", f.loop_.unit());
            outp!("{}", format::write_table(f.loop_.table()));
            out!("%");
            out!("# s, t");
            outp!("{}", format::write_permutations(n, &[f.s().clone(), f.t().clone()]));
            out!("%");
            out!("u: {}", f.phi.u);
            out!("v: {}", f.psi.u);
            out!("c: {}", f.constant);
            Ok(true)
        }
        Command::Iso { a, b } => {
            let (a, b) = (read_table(&a)?, read_table(&b)?);
            match enumerate::are_isomorphic(&a, &b) {
                Some(f) => {
                    let s: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                    out!("isomorphic: {}", s.join(" "));
                    Ok(true)
                }
                None => {
                    out!("not isomorphic");
                    Ok(false)
                }
            }
        }
        Command::Enumerate {
            family,
            n,
            census,
            list,
            bound,
        } => {
            let mut opts = Options {
                jobs: cli.jobs,
                ..Options::default()
            };
            if family == "bo" {
                if let Some(b) = bound {
                    opts.bounds.loops = b;
                }
                let c = enumerate::count_bo_with(n, &opts)?;
                out!("bom {} bol {} boq {}", c.bom, c.bol, c.boq);
                return Ok(true);
            }
            let family: Family = family.parse()?;
            if let Some(b) = bound {
                match family {
                    Family::Quandle => opts.bounds.quandles = b,
                    Family::ConnectedQuandle => opts.bounds.connected_quandles = b,
                    Family::LatinQuandle => opts.bounds.latin_quandles = b,
                    Family::Loop => opts.bounds.loops = b,
                    Family::MedialIdempotent => opts.bounds.medial_idempotent = b,
                }
            }
            let tables = enumerate::enumerate(family, n, &opts)?;
            out!("{}", tables.len());
            if list {
                for t in &tables {
                    out!("%");
                    outp!("{}", format::write_table(t));
                }
            }
            if let Some(path) = census {
                fs::write(&path, format::write_census(family.name(), n, &tables))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
