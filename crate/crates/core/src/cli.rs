//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so tests can drive it in-process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};

use crate::chain::{self, ChainSpec};
use crate::congruence::{self, Side};
use crate::error::Error;
use crate::expr;
use crate::green::{self, GreenRelation};
use crate::oracle;
use crate::{Cfinj, PointSet};

/// Exit code for parse and validation failures.
pub const EXIT_INPUT: i32 = 1;
/// Exit code for domain errors such as `NotIdempotent`.
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cfinj", about = "Exact arithmetic for cofinite partial injections of the naturals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression to its canonical form
    Eval { expr: String },
    /// Value of an element at a point
    Apply { expr: String, point: i64 },
    /// Complement sizes and index
    Stats { expr: String },
    /// Domain and range complements
    Complements { expr: String },
    /// Unit / idempotent flags
    Classify { expr: String },
    /// Whether an element is idempotent
    Idempotent { expr: String },
    /// Identity on the complement of a finite set, e.g. {1,3}
    Idem { set: String },
    /// Natural order on idempotents
    Leq { lhs: String, rhs: String },
    /// Green's relation test
    Green { relation: String, lhs: String, rhs: String },
    /// Order-preserving bijection with prescribed complements
    Hclass { dom_complement: String, ran_complement: String },
    /// Element R-related to the first and L-related to the second argument
    Dwitness { lhs: String, rhs: String },
    /// gamma, delta with gamma*a*delta = b
    Factor { a: String, b: String },
    /// Idempotent separating a non-identity unit from the identity
    Sepidem { expr: String },
    /// Value of the index homomorphism onto the integers
    Index { expr: String },
    /// Equal-index test
    Dequiv { lhs: String, rhs: String },
    /// Witness idempotent for the least group congruence
    Sigma { lhs: String, rhs: String },
    /// Unit sigma-related to an index-zero element
    Unitrep { expr: String },
    /// All solutions of a*x = b (right) or x*a = b (left)
    Solve { side: String, a: String, b: String },
    /// Exhaustive solution search
    Brute {
        side: String,
        a: String,
        b: String,
        #[arg(long, default_value_t = oracle::DEFAULT_BOUND)]
        bound: usize,
    },
    /// Chains of idempotents and their bicyclic generators
    Chain {
        #[command(subcommand)]
        action: ChainCommand,
    },
    /// Covering relation between idempotents
    Covers { lower: String, upper: String },
    /// Embed a strictly descending list of idempotents into a bicyclic subsemigroup
    Embed {
        #[arg(required = true)]
        members: Vec<String>,
    },
    /// Values on 0..W
    Window { expr: String, width: usize },
    /// Cross-check a product against pointwise composition on 0..W
    Occheck { a: String, b: String, width: usize },
    /// All partial injections between two finite sets
    Pinj { from: String, into: String },
}

#[derive(Debug, Subcommand)]
enum ChainCommand {
    /// Bicyclic generators p, q of the chain
    Gens {
        #[arg(num_args = 1..=2, required = true)]
        spec: Vec<String>,
    },
    /// i-th member of the chain (i >= 1)
    Elem {
        index: usize,
        #[arg(num_args = 1..=2, required = true)]
        spec: Vec<String>,
    },
    /// First `count` distinct members of nu*L
    Translate {
        nu: String,
        count: usize,
        #[arg(num_args = 1..=2, required = true)]
        spec: Vec<String>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command line; `args` excludes the program name.
pub fn run<S: AsRef<str>>(args: &[S]) -> Outcome {
    let argv = std::iter::once("cfinj").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: if e.is_input_error() { EXIT_INPUT } else { EXIT_DOMAIN },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn el(text: &str) -> Result<Cfinj, Error> {
    expr::parse_element(text)
}

fn chain_spec(args: &[String]) -> Result<ChainSpec<i64>, Error> {
    if let [single] = args {
        if single.trim_start().starts_with("chain") {
            return expr::parse_chain(single);
        }
    }
    let mut start = None;
    let mut prefix = Vec::new();
    for arg in args {
        if let Some(rest) = arg.strip_prefix("start=") {
            start = Some(el(rest)?);
        } else if let Some(rest) = arg.strip_prefix("prefix=") {
            prefix = expr::parse_point_list(rest)?;
        } else {
            return Err(Error::Validation(format!("expected start=<expr> or prefix=[...], got {arg:?}")));
        }
    }
    let start = start.ok_or_else(|| Error::Validation("missing start=<expr>".into()))?;
    ChainSpec::new(start, prefix)
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().fold(String::new(), |mut s, line| {
        s.push_str(&line);
        s.push('\n');
        s
    })
}

fn execute(command: Command) -> Result<String, Error> {
    let out = match command {
        Command::Eval { expr } => lines([el(&expr)?.to_string()]),
        Command::Apply { expr, point } => {
            let v = el(&expr)?.apply(point)?;
            lines([v.map_or("undefined".to_string(), |v| v.to_string())])
        }
        Command::Stats { expr } => {
            let s = el(&expr)?.stats();
            lines([format!("dbar={} rbar={} index={}", s.dbar, s.rbar, s.index)])
        }
        Command::Complements { expr } => {
            let (d, r) = el(&expr)?.complements();
            lines([format!("dom_complement={d}"), format!("ran_complement={r}")])
        }
        Command::Classify { expr } => lines([el(&expr)?.classify().to_string()]),
        Command::Idempotent { expr } => lines([el(&expr)?.is_idempotent().to_string()]),
        Command::Idem { set } => {
            let set: PointSet = expr::parse_set(&set)?;
            lines([Cfinj::idempotent_on_complement(&set)?.to_string()])
        }
        Command::Leq { lhs, rhs } => lines([el(&lhs)?.natural_leq(&el(&rhs)?)?.to_string()]),
        Command::Green { relation, lhs, rhs } => {
            let rel: GreenRelation = relation.parse()?;
            lines([green::related(rel, &el(&lhs)?, &el(&rhs)?).to_string()])
        }
        Command::Hclass { dom_complement, ran_complement } => {
            let d: PointSet = expr::parse_set(&dom_complement)?;
            let r: PointSet = expr::parse_set(&ran_complement)?;
            lines([green::h_class_element(&d, &r)?.to_string()])
        }
        Command::Dwitness { lhs, rhs } => lines([green::d_witness(&el(&lhs)?, &el(&rhs)?)?.to_string()]),
        Command::Factor { a, b } => {
            let (gamma, delta) = green::simple_factorization(&el(&a)?, &el(&b)?)?;
            lines([format!("gamma={gamma}"), format!("delta={delta}")])
        }
        Command::Sepidem { expr } => {
            let (eps, x0) = green::separating_idempotent(&el(&expr)?)?;
            lines([format!("epsilon={eps}"), format!("x0={x0}")])
        }
        Command::Index { expr } => lines([congruence::index_hom(&el(&expr)?).to_string()]),
        Command::Dequiv { lhs, rhs } => lines([congruence::d_equiv(&el(&lhs)?, &el(&rhs)?).to_string()]),
        Command::Sigma { lhs, rhs } => {
            let w = congruence::sigma_related(&el(&lhs)?, &el(&rhs)?)?;
            lines([w.map_or("not related".to_string(), |e| e.to_string())])
        }
        Command::Unitrep { expr } => {
            let (alpha, eps) = congruence::unit_representative(&el(&expr)?)?;
            lines([format!("alpha={alpha}"), format!("epsilon={eps}")])
        }
        Command::Solve { side, a, b } => {
            let side: Side = side.parse()?;
            let sols = congruence::solve_translation(side, &el(&a)?, &el(&b)?)?;
            solution_listing(&sols)
        }
        Command::Brute { side, a, b, bound } => {
            let side: Side = side.parse()?;
            let sols = oracle::brute_force_solutions(side, &el(&a)?, &el(&b)?, bound)?;
            solution_listing(&sols)
        }
        Command::Chain { action } => match action {
            ChainCommand::Gens { spec } => {
                let pair = chain_spec(&spec)?.bicyclic_generators()?;
                lines([format!("p={}", pair.p), format!("q={}", pair.q), format!("unit={}", pair.unit)])
            }
            ChainCommand::Elem { index, spec } => lines([chain_spec(&spec)?.element(index)?.to_string()]),
            ChainCommand::Translate { nu, count, spec } => {
                let members = chain::translate_chain(&el(&nu)?, &chain_spec(&spec)?, count)?;
                lines(members.iter().map(ToString::to_string))
            }
        },
        Command::Covers { lower, upper } => lines([chain::covers(&el(&lower)?, &el(&upper)?)?.to_string()]),
        Command::Embed { members } => {
            let members = members.iter().map(|m| el(m)).collect::<Result<Vec<_>, _>>()?;
            let (spec, pair) = chain::embed_finite_chain(&members)?;
            lines([
                format!("chain={spec}"),
                format!("p={}", pair.p),
                format!("q={}", pair.q),
                format!("unit={}", pair.unit),
            ])
        }
        Command::Window { expr, width } => lines([oracle::window_eval(&el(&expr)?, width)?.to_string()]),
        Command::Occheck { a, b, width } => {
            lines([oracle::oracle_compose_check(&el(&a)?, &el(&b)?, width)?.to_string()])
        }
        Command::Pinj { from, into } => {
            let from: PointSet = expr::parse_set(&from)?;
            let into: PointSet = expr::parse_set(&into)?;
            let maps = oracle::enumerate_partial_injections(&from, &into);
            let mut s = format!("count={}\n", maps.len());
            for m in maps {
                let pairs: Vec<String> = m.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                let _ = writeln!(s, "{{{}}}", pairs.join(", "));
            }
            s
        }
    };
    Ok(out)
}

fn solution_listing(sols: &[Cfinj]) -> String {
    let mut s = format!("count={}\n", sols.len());
    for e in sols {
        let _ = writeln!(s, "{e}");
    }
    s
}
