//! Argument parsing and dispatch for the `cha` binary.

use std::ffi::OsString;
use std::path::Path;

use cha_core::engine::star_closed;
use cha_core::linear::{deconcat, pair, word_degree, Sym};
use cha_core::pinter::{PinterAlgebra, PolyBialgebra, TableBialgebra};
use cha_core::qed::QedAlgebra;
use cha_core::fdb::FaaDiBruno;
use cha_core::trees::{iota, mu_element, star_via_trees_element, FreeTreeBrace};
use cha_core::{Element, Letter, TensorElement};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::front::{latex_decorated_tree, Front};
use crate::parse::parse_expr;
use crate::render::{self, Format};
use crate::verify::{self, Law, Options};

/// Safety cap on input and enumeration degrees unless `CHA_MAX_DEGREE` is set.
pub const DEFAULT_SAFETY_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraKind {
    Fdb,
    Qed,
    Pinter,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Dual,
    Primal,
}

#[derive(Debug, Parser)]
#[command(name = "cha", version, about = "Products, braces and coproducts in right-sided combinatorial Hopf algebras")]
pub struct Cli {
    /// Algebra to work in.
    #[arg(short = 'a', long = "algebra", value_enum, default_value_t = AlgebraKind::Fdb, global = true)]
    pub algebra: AlgebraKind,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Which side of the duality the operands live on.
    #[arg(long, value_enum, default_value_t = Side::Dual, global = true)]
    pub side: Side,
    /// Degree bound for `verify` (default 6, or 8 for fdb).
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
    /// Bialgebra for `-a pinter`: `poly`, `z2` or `file:PATH`.
    #[arg(long, global = true)]
    pub bialgebra: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// `X ⋆ Y` on the dual side, concatenation on the primal side.
    Star {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// `M(head; args)`; the arguments are joined into one word.
    Brace {
        #[arg(allow_hyphen_values = true)]
        head: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Primal coproduct, or deconcatenation on the dual side.
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Pairing of a dual element with a primal element.
    Pair {
        #[arg(allow_hyphen_values = true)]
        dual: String,
        #[arg(allow_hyphen_values = true)]
        primal: String,
    },
    /// Shows `ι(X)` and `μ(ι(X))`, and `μ(ι(X) ⋆ ι(Y))` when `Y` is given.
    Lift {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: Option<String>,
    },
    /// Checks one law and prints a report.
    Verify {
        #[arg(long, value_enum)]
        law: Law,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Outcome { stdout, stderr: String::new(), code }
    }

    fn usage(message: String) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {message}\n"), code: 2 }
    }
}

/// Reads `CHA_MAX_DEGREE`, falling back to [`DEFAULT_SAFETY_CAP`].
pub fn safety_cap() -> Result<usize, String> {
    match std::env::var("CHA_MAX_DEGREE") {
        Err(_) => Ok(DEFAULT_SAFETY_CAP),
        Ok(v) => v.trim().parse().map_err(|_| format!("CHA_MAX_DEGREE={v:?} is not a non-negative integer")),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: 2 }
            } else {
                Outcome::ok(text, 0)
            };
        }
    };
    let cap = match safety_cap() {
        Ok(cap) => cap,
        Err(msg) => return Outcome::usage(msg),
    };
    match dispatch(&cli, cap) {
        Ok((stdout, code)) => Outcome::ok(stdout, code),
        Err(msg) => Outcome::usage(msg),
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

type Done = Result<(String, i32), String>;

fn dispatch(cli: &Cli, cap: usize) -> Done {
    if cli.bialgebra.is_some() && cli.algebra != AlgebraKind::Pinter {
        return Err("--bialgebra only applies to -a pinter".into());
    }
    match cli.algebra {
        AlgebraKind::Fdb => execute(&FaaDiBruno, cli, cap),
        AlgebraKind::Qed => execute(&QedAlgebra, cli, cap),
        AlgebraKind::Tree => execute(&tree_algebra(), cli, cap),
        AlgebraKind::Pinter => match cli.bialgebra.as_deref().unwrap_or("poly") {
            "poly" => execute(&PinterAlgebra::new(PolyBialgebra), cli, cap),
            "z2" => execute(&PinterAlgebra::new(TableBialgebra::z2()), cli, cap),
            other => match other.strip_prefix("file:") {
                Some(path) => {
                    let b = crate::bialgebra_file::load(Path::new(path)).map_err(|e| e.to_string())?;
                    execute(&PinterAlgebra::new(b), cli, cap)
                }
                None => Err(format!("unknown bialgebra {other:?}; expected poly, z2 or file:PATH")),
            },
        },
    }
}

/// The free tree brace algebra used by `-a tree`, with decorations `a`, `b`
/// for sampling.
pub fn tree_algebra() -> FreeTreeBrace<Sym> {
    FreeTreeBrace::with_decorations(vec![Sym::new("a"), Sym::new("b")])
}

fn parse<F: Front>(front: &F, text: &str) -> Result<Element<F::Letter>, String> {
    parse_expr(front, text).map_err(|e| format!("{e}\n  {text}\n  {}^", " ".repeat(e.column.saturating_sub(1))))
}

fn degree<L: Letter>(e: &Element<L>) -> usize {
    e.words().map(|w| word_degree(w)).max().unwrap_or(0)
}

fn check_cap(degree: usize, cap: usize) -> Result<(), String> {
    if degree > cap {
        Err(format!("degree {degree} exceeds the safety cap {cap} (set CHA_MAX_DEGREE to raise it)"))
    } else {
        Ok(())
    }
}

fn require_dual(cli: &Cli, verb: &str) -> Result<(), String> {
    match cli.side {
        Side::Dual => Ok(()),
        Side::Primal => Err(format!("{verb} acts on the dual side only")),
    }
}

fn line(mut s: String) -> String {
    s.push('\n');
    s
}

fn execute<F: Front>(front: &F, cli: &Cli, cap: usize) -> Done {
    let fmt = cli.format;
    match &cli.command {
        Command::Star { x, y } => {
            let (a, b) = (parse(front, x)?, parse(front, y)?);
            check_cap(degree(&a) + degree(&b), cap)?;
            let out = match cli.side {
                Side::Dual => star_closed(&a, &b, front),
                Side::Primal => a.concat(&b),
            };
            Ok((line(render::element(front, &out, fmt)), 0))
        }
        Command::Brace { head, args } => {
            require_dual(cli, "brace")?;
            let h = parse(front, head)?;
            let args = if args.is_empty() { Element::one() } else { parse(front, &args.join(" "))? };
            check_cap(degree(&h) + degree(&args), cap)?;
            let mut out = Element::zero();
            for (w, c) in h.iter() {
                let [letter] = w.as_slice() else {
                    return Err(format!("brace head must be a combination of generators, got {}", cha_core::linear::render_word(w)));
                };
                out += cha_core::engine::brace_with(front, letter, &args).scale(c);
            }
            Ok((line(render::element(front, &out, fmt)), 0))
        }
        Command::Coproduct { x } => {
            let a = parse(front, x)?;
            check_cap(degree(&a), cap)?;
            let out = match cli.side {
                Side::Dual => deconcat(&a, 2).map_err(|e| e.to_string())?,
                Side::Primal => {
                    let mut acc = TensorElement::zero(2);
                    for (w, c) in a.iter() {
                        let t = front
                            .primal_coproduct(w)
                            .ok_or_else(|| format!("algebra {} has no primal coproduct", front.name()))?;
                        acc += &t.scale(c);
                    }
                    acc
                }
            };
            Ok((line(render::tensor(front, &out, fmt)), 0))
        }
        Command::Pair { dual, primal } => {
            let (d, p) = (parse(front, dual)?, parse(front, primal)?);
            check_cap(degree(&d).max(degree(&p)), cap)?;
            Ok((line(render::scalar(&pair(&d, &p), fmt)), 0))
        }
        Command::Lift { x, y } => {
            require_dual(cli, "lift")?;
            let a = parse(front, x)?;
            let b = y.as_deref().map(|y| parse(front, y)).transpose()?;
            check_cap(degree(&a) + b.as_ref().map_or(0, degree), cap)?;
            Ok((line(lift(front, &a, b.as_ref(), fmt)), 0))
        }
        Command::Verify { law, trials, seed } => {
            let max_degree = cli.max_degree.unwrap_or(if front.name() == "fdb" { 8 } else { 6 });
            check_cap(max_degree, cap)?;
            let opts = Options { trials: *trials, max_degree, seed: *seed };
            let report = verify::run(front, *law, &opts).map_err(|e| e.to_string())?;
            let text = match fmt {
                Format::Json => verify::report_json(&report).to_string(),
                Format::Text | Format::Latex => verify::report_text(&report),
            };
            Ok((line(text), if report.passed() { 0 } else { 1 }))
        }
    }
}

fn lift<F: Front>(front: &F, a: &Element<F::Letter>, b: Option<&Element<F::Letter>>, fmt: Format) -> String {
    let lifted = a.map_linear(|w| Element::from_word(iota(w)));
    let back = mu_element(&lifted, front);
    let product = b.map(|b| (star_via_trees_element(a, b, front), star_closed(a, b, front)));
    let tree_latex = |e: &Element<_>| {
        render::element_latex_with(e, &|t: &cha_core::trees::DecoratedTree<F::Letter>| {
            latex_decorated_tree(t, &|l: &F::Letter| front.latex_letter(l))
        })
    };
    match fmt {
        Format::Json => {
            let mut v = json!({"iota": render::element_json(&lifted), "mu_iota": render::element_json(&back)});
            if let Some((via, direct)) = &product {
                v["mu_star"] = render::element_json(via);
                v["star"] = render::element_json(direct);
            }
            v.to_string()
        }
        Format::Text | Format::Latex => {
            let show = |e: &Element<F::Letter>| render::element(front, e, fmt);
            let iota_text = if fmt == Format::Latex { tree_latex(&lifted) } else { lifted.to_string() };
            let mut out = format!("iota(X) = {iota_text}\nmu(iota(X)) = {}", show(&back));
            if let Some((via, direct)) = &product {
                out.push_str(&format!("\nmu(iota(X)*iota(Y)) = {}\nX*Y = {}", show(via), show(direct)));
            }
            out
        }
    }
}
