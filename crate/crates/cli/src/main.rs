//! Command-line front end for petrisem.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use petrisem::gluing::{
    boundary_compose, identify, is_synchronization, monoidal_product, pushout_glue,
    synchronize_transitions_bounded, DEFAULT_FAITHFUL_BOUND,
};
use petrisem::io::{
    export_dot, parse_functor, parse_net, parse_petri_net, parse_recipe, parse_semantics_functor,
    parse_witness, serialize_net,
};
use petrisem::semantics::transport;
use petrisem::{free_smc, Error, NetWithSemantics, Semantics};

#[derive(Parser)]
#[command(
    name = "petrisem",
    version,
    about = "Build and check Petri nets with semantics"
)]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load a net document and check it.
    Validate { file: PathBuf },
    /// Print the presentation of the net's free category.
    Freecat { file: PathBuf },
    /// Check that a functor between two nets is a synchronization.
    CheckFunctor {
        functor: PathBuf,
        #[arg(long)]
        src: PathBuf,
        #[arg(long)]
        tgt: PathBuf,
        #[arg(long, default_value_t = DEFAULT_FAITHFUL_BOUND)]
        faithful_bound: usize,
    },
    /// Replace the transitions of a recipe's expression by one transition.
    Sync {
        #[arg(long)]
        recipe: PathBuf,
        net: PathBuf,
        #[arg(long, default_value_t = DEFAULT_FAITHFUL_BOUND)]
        faithful_bound: usize,
    },
    /// Quotient a net by a witness.
    Identify {
        #[arg(long)]
        witness: PathBuf,
        net: PathBuf,
    },
    /// Disjoint union of two nets over the same semantics.
    Coproduct { a: PathBuf, b: PathBuf },
    /// Glue two nets along a shared net and two maps into them.
    Pushout {
        /// A bare net: places and transitions.
        #[arg(long)]
        witness: PathBuf,
        #[arg(long)]
        l: PathBuf,
        #[arg(long)]
        r: PathBuf,
        a: PathBuf,
        b: PathBuf,
    },
    /// Connect output places of A with input places of B.
    Compose {
        /// `LEFT=RIGHT` place names; repeatable.
        #[arg(long = "pair", required = true, value_parser = parse_pair)]
        pairs: Vec<(String, String)>,
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_FAITHFUL_BOUND)]
        faithful_bound: usize,
    },
    /// Change the semantics of a net along a semantics functor.
    Transport {
        #[arg(long)]
        functor: PathBuf,
        net: PathBuf,
    },
    /// Render a net as Graphviz DOT.
    Dot { net: PathBuf },
}

fn parse_pair(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((l, r)) if !l.is_empty() && !r.is_empty() => Ok((l.to_string(), r.to_string())),
        _ => Err(format!("expected LEFT=RIGHT, got `{s}`")),
    }
}

enum Failure {
    /// Unreadable or malformed input.
    Input(String),
    /// The input was fine but a check failed or a construction is obstructed.
    Verdict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::Validation(_)
            | Error::UnknownPlace(_)
            | Error::UnknownGenerator(_)
            | Error::DuplicateName { .. }
            | Error::InvalidName(_)
            | Error::ZeroCount(_)
            | Error::TypeMismatch { .. }
            | Error::BadPermutation { .. }
            | Error::NotStrict { .. }
            | Error::MissingImage(_)
            | Error::ExtraImage(_) => Failure::Input(e.to_string()),
            _ => Failure::Verdict(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<NetWithSemantics, Failure> {
    parse_net(&read(path)?).map_err(|e| in_file(path, e))
}

/// Tags an error with the file it came from, keeping its class.
fn in_file(path: &Path, e: Error) -> Failure {
    match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", path.display())),
        other => other,
    }
}

fn presentation_text(nets: &NetWithSemantics) -> String {
    let sig = nets.presentation();
    let mut out = format!("objects: {}\n", sig.objects().join(" "));
    for g in sig.morphisms() {
        let _ = writeln!(out, "{} : [{}] -> [{}]", g.name, g.dom, g.cod);
    }
    out
}

fn run(cli: &Cli) -> Result<String, Failure> {
    Ok(match &cli.command {
        Command::Validate { file } => {
            let nets = load(file)?;
            format!(
                "ok: {} places, {} transitions\n",
                nets.net().places().len(),
                nets.net().transitions().len()
            )
        }
        Command::Freecat { file } => presentation_text(&load(file)?),
        Command::CheckFunctor {
            functor,
            src,
            tgt,
            faithful_bound,
        } => {
            let (m, n) = (load(src)?, load(tgt)?);
            let f = parse_functor(&read(functor)?, m.presentation(), n.presentation())
                .map_err(|e| in_file(functor, e))?;
            let verdict = is_synchronization(&f, &m, &n, *faithful_bound)?;
            if !verdict.pass() {
                return Err(Failure::Verdict(verdict.to_string()));
            }
            format!("{verdict}\n")
        }
        Command::Sync {
            recipe,
            net,
            faithful_bound,
        } => {
            let nets = load(net)?;
            let recipe = parse_recipe(&read(recipe)?).map_err(|e| in_file(recipe, e))?;
            let (out, _) = synchronize_transitions_bounded(&nets, &recipe, *faithful_bound)?;
            serialize_net(&out)
        }
        Command::Identify { witness, net } => {
            let nets = load(net)?;
            let w = parse_witness(&read(witness)?, nets.presentation())
                .map_err(|e| in_file(witness, e))?;
            serialize_net(&identify(&nets, &w)?.0)
        }
        Command::Coproduct { a, b } => serialize_net(&monoidal_product(&load(a)?, &load(b)?)?.0),
        Command::Pushout {
            witness,
            l,
            r,
            a,
            b,
        } => {
            let (m, n) = (load(a)?, load(b)?);
            let w = parse_petri_net(&read(witness)?).map_err(|e| in_file(witness, e))?;
            let sig = free_smc(&w);
            let lf = parse_functor(&read(l)?, &sig, m.presentation()).map_err(|e| in_file(l, e))?;
            let rf = parse_functor(&read(r)?, &sig, n.presentation()).map_err(|e| in_file(r, e))?;
            serialize_net(&pushout_glue(&m, &n, &w, &lf, &rf)?.net)
        }
        Command::Compose {
            pairs,
            a,
            b,
            faithful_bound,
        } => {
            let composite = boundary_compose(&load(a)?, &load(b)?, pairs, *faithful_bound)?;
            serialize_net(&composite.net)
        }
        Command::Transport { functor, net } => {
            let nets = load(net)?;
            let Semantics::Free(source) = nets.semantics() else {
                return Err(Failure::Input(format!(
                    "{}: transport needs a net folded into a free semantics",
                    net.display()
                )));
            };
            let h = parse_semantics_functor(&read(functor)?, &source)
                .map_err(|e| in_file(functor, e))?;
            serialize_net(&transport(&h, &nets)?)
        }
        Command::Dot { net } => {
            let nets = load(net)?;
            export_dot(nets.net(), Some(nets.fold()))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map(|_| String::new())
            .map_err(|e| Failure::Input(format!("writing {}: {e}", path.display()))),
        None => Ok(text),
    });
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verdict(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
