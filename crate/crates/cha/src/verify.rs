//! Randomized and exhaustive law checks producing [`LawReport`]s.

use cha_core::engine::{
    check_associativity, check_brace_relation, check_closed_vs_recursive, check_compatibility, check_right_sided,
    star_words, words_of_degree, Counterexample, LawReport,
};
use cha_core::linear::{render_word, Sym};
use cha_core::trees::{brace_trees, enumerate_graftings, forest_shapes, iota, mu, shapes, star_via_trees, DecoratedTree};
use cha_core::{Element, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::front::Front;

/// Laws exposed by `cha verify --law`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Law {
    Assoc,
    Brace,
    RightSided,
    Compat,
    Oracle,
    MuIota,
    GraftEnum,
    ClosedVsRecursive,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::Assoc => "assoc",
            Law::Brace => "brace",
            Law::RightSided => "right-sided",
            Law::Compat => "compat",
            Law::Oracle => "oracle",
            Law::MuIota => "mu-iota",
            Law::GraftEnum => "graft-enum",
            Law::ClosedVsRecursive => "closed-vs-recursive",
        }
    }
}

/// Bounds and seed for one law run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub trials: usize,
    pub max_degree: usize,
    pub seed: u64,
}

/// Degree cap for the randomized half of `mu-iota`, which expands products
/// of whole forests.
pub const STAR_VIA_TREES_MAX_DEGREE: usize = 5;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("law {law} does not apply to algebra {algebra}")]
    NotApplicable { law: &'static str, algebra: &'static str },
    #[error("law {law} needs --max-degree at least {min}")]
    DegreeTooSmall { law: &'static str, min: usize },
    #[error(transparent)]
    Core(#[from] cha_core::Error),
}

/// Generators tabulated by degree, for sampling.
struct Sampler<'a, F: Front> {
    front: &'a F,
    gens: Vec<Vec<F::Letter>>,
    /// `fillable[d]`: some word has degree exactly `d`.
    fillable: Vec<bool>,
    rng: ChaCha8Rng,
}

impl<'a, F: Front> Sampler<'a, F> {
    fn new(front: &'a F, max_degree: usize, seed: u64) -> Self {
        let gens: Vec<Vec<F::Letter>> = (0..=max_degree).map(|d| front.generators_of_degree(d)).collect();
        let mut fillable = vec![false; max_degree + 1];
        fillable[0] = true;
        for d in 1..=max_degree {
            fillable[d] = (1..=d).any(|e| !gens[e].is_empty() && fillable[d - e]);
        }
        Sampler { front, gens, fillable, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn pick<T: Clone>(&mut self, options: &[T]) -> Option<T> {
        if options.is_empty() {
            return None;
        }
        Some(options[self.rng.random_range(0..options.len())].clone())
    }

    fn generator(&mut self, degree: usize) -> Option<F::Letter> {
        let gens = std::mem::take(&mut self.gens[degree]);
        let g = self.pick(&gens);
        self.gens[degree] = gens;
        g
    }

    /// A random word of exactly the given degree.
    fn word(&mut self, degree: usize) -> Option<Word<F::Letter>> {
        if !self.fillable[degree] {
            return None;
        }
        let mut rest = degree;
        let mut out = Vec::new();
        while rest > 0 {
            let next: Vec<usize> =
                (1..=rest).filter(|&d| !self.gens[d].is_empty() && self.fillable[rest - d]).collect();
            let d = self.pick(&next)?;
            out.push(self.generator(d)?);
            rest -= d;
        }
        Some(out)
    }

    /// Degree splits `(d1,…,dk)` with total in `[min_total, max]`, each part
    /// at least `min_part` and fillable, the first part a generator degree
    /// when `head` is set.
    fn split(&mut self, parts: usize, min_part: usize, min_total: usize, max: usize, head: bool) -> Option<Vec<usize>> {
        let mut options = Vec::new();
        for total in min_total..=max {
            for c in cha_core::combinat::weak_compositions(total, parts) {
                let ok = c.iter().all(|&d| d >= min_part && self.fillable[d]) && (!head || !self.gens[c[0]].is_empty());
                if ok {
                    options.push(c);
                }
            }
        }
        self.pick(&options)
    }

    /// Two nonempty words of total degree in `[2, max]`.
    fn pair(&mut self, max: usize) -> Option<(Word<F::Letter>, Word<F::Letter>)> {
        let d = self.split(2, 1, 2, max, false)?;
        Some((self.word(d[0])?, self.word(d[1])?))
    }

    /// Three nonempty words of total degree in `[3, max]`.
    fn triple(&mut self, max: usize) -> Option<(Word<F::Letter>, Word<F::Letter>, Word<F::Letter>)> {
        let d = self.split(3, 1, 3, max, false)?;
        Some((self.word(d[0])?, self.word(d[1])?, self.word(d[2])?))
    }

    /// A generator and two possibly empty words, total degree in `[2, max]`.
    fn brace_input(&mut self, max: usize) -> Option<(F::Letter, Word<F::Letter>, Word<F::Letter>)> {
        let d = self.split(3, 0, 2, max, true)?;
        Some((self.generator(d[0])?, self.word(d[1])?, self.word(d[2])?))
    }
}

fn finish(mut report: LawReport, law: Law, trials: usize, opts: &Options, seeded: bool) -> LawReport {
    report.law = law.name().to_string();
    report.trials = trials;
    report.max_degree = opts.max_degree;
    report.seed = seeded.then_some(opts.seed);
    report
}

fn random_trials<F: Front>(
    front: &F,
    law: Law,
    opts: &Options,
    min: usize,
    mut trial: impl FnMut(&mut Sampler<'_, F>) -> Option<LawReport>,
) -> Result<LawReport, VerifyError> {
    if opts.max_degree < min {
        return Err(VerifyError::DegreeTooSmall { law: law.name(), min });
    }
    let mut sampler = Sampler::new(front, opts.max_degree, opts.seed);
    let mut done = 0;
    while done < opts.trials {
        let Some(report) = trial(&mut sampler) else {
            return Err(VerifyError::NotApplicable { law: law.name(), algebra: front.name() });
        };
        done += 1;
        if !report.passed() {
            return Ok(finish(report, law, done, opts, true));
        }
    }
    Ok(finish(LawReport::pass(law.name(), done, opts.max_degree), law, done, opts, true))
}

fn oracle_law<F: Front>(front: &F, opts: &Options) -> Result<LawReport, VerifyError> {
    let cases = front.oracle_cases(opts.max_degree);
    let mut count = 0;
    for (head, args) in &cases {
        let Some(oracle) = front.oracle(head, args, usize::MAX) else {
            return Err(VerifyError::NotApplicable { law: Law::Oracle.name(), algebra: front.name() });
        };
        let oracle = oracle?;
        let closed = front.brace(head, args);
        count += 1;
        if closed != oracle {
            let cx = Counterexample {
                inputs: vec![("head".into(), head.to_string()), ("args".into(), render_word(args))],
                sides: vec![("closed form".into(), closed.to_string()), ("oracle".into(), oracle.to_string())],
            };
            return Ok(finish(LawReport::fail("oracle", count, opts.max_degree, cx), Law::Oracle, count, opts, false));
        }
    }
    Ok(finish(LawReport::pass("oracle", count, opts.max_degree), Law::Oracle, count, opts, false))
}

/// `μ(ι(w)) = w` for every word of degree at most `max_degree`.
pub fn check_mu_iota_exhaustive<F: Front>(front: &F, max_degree: usize) -> (usize, Option<Counterexample>) {
    let mut count = 0;
    for d in 0..=max_degree {
        for w in words_of_degree(front, d) {
            count += 1;
            let back = mu(&iota(&w), front);
            if back != Element::from_word(w.clone()) {
                return (
                    count,
                    Some(Counterexample {
                        inputs: vec![("X".into(), render_word(&w))],
                        sides: vec![("mu(iota(X))".into(), back.to_string())],
                    }),
                );
            }
        }
    }
    (count, None)
}

/// `μ(ι(X) ⋆ ι(Y)) = X ⋆ Y` on one pair.
pub fn check_star_via_trees<F: Front>(front: &F, x: &[F::Letter], y: &[F::Letter]) -> Option<Counterexample> {
    let direct = star_words(x, y, front);
    let lifted = star_via_trees(x, y, front);
    (direct != lifted).then(|| Counterexample {
        inputs: vec![("X".into(), render_word(x)), ("Y".into(), render_word(y))],
        sides: vec![("X*Y".into(), direct.to_string()), ("mu(iota(X)*iota(Y))".into(), lifted.to_string())],
    })
}

fn mu_iota_law<F: Front>(front: &F, opts: &Options) -> Result<LawReport, VerifyError> {
    let (count, cx) = check_mu_iota_exhaustive(front, opts.max_degree);
    if let Some(cx) = cx {
        return Ok(finish(LawReport::fail("mu-iota", count, opts.max_degree, cx), Law::MuIota, count, opts, false));
    }
    let degree = opts.max_degree.min(STAR_VIA_TREES_MAX_DEGREE);
    let inner = Options { max_degree: degree, ..*opts };
    let report = random_trials(front, Law::MuIota, &inner, 2, |s| {
        let (x, y) = s.pair(degree)?;
        Some(match check_star_via_trees(s.front, &x, &y) {
            None => LawReport::pass("mu-iota", 1, degree),
            Some(cx) => LawReport::fail("mu-iota", 1, degree, cx),
        })
    })?;
    let total = count + report.trials;
    Ok(finish(report, Law::MuIota, total, opts, true))
}

/// Labels the vertices of a host tree and a forest with distinct symbols.
pub fn label_distinct(host: &DecoratedTree<Sym>, forest: &[DecoratedTree<Sym>]) -> (DecoratedTree<Sym>, Vec<DecoratedTree<Sym>>) {
    let mut labels = (1..).map(|i| Sym(format!("a{i}")));
    let host = host.relabel(&mut labels);
    let forest = forest.iter().map(|t| t.relabel(&mut labels)).collect();
    (host, forest)
}

/// Grafting enumeration against the recursive tree brace, for every host
/// tree and forest with at most `max_vertices` vertices in total.
pub fn check_grafting_exhaustive(max_vertices: usize) -> (usize, Option<Counterexample>) {
    let mut count = 0;
    for n in 1..=max_vertices {
        for h in 1..=n {
            let hosts = shapes(h);
            let forests = forest_shapes(n - h);
            for host in &hosts {
                for forest in &forests {
                    let (t, f) = label_distinct(host, forest);
                    count += 1;
                    let recursive = brace_trees(&t, &f);
                    let enumerated = enumerate_graftings(&t, &f);
                    if recursive != enumerated {
                        let f_text = f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                        return (
                            count,
                            Some(Counterexample {
                                inputs: vec![("t".into(), t.to_string()), ("f".into(), f_text)],
                                sides: vec![
                                    ("brace".into(), recursive.to_string()),
                                    ("graftings".into(), enumerated.to_string()),
                                ],
                            }),
                        );
                    }
                }
            }
        }
    }
    (count, None)
}

/// Runs one law against one algebra.
pub fn run<F: Front>(front: &F, law: Law, opts: &Options) -> Result<LawReport, VerifyError> {
    let max = opts.max_degree;
    match law {
        Law::Assoc => random_trials(front, law, opts, 3, |s| {
            let (x, y, z) = s.triple(max)?;
            Some(check_associativity(&x, &y, &z, s.front))
        }),
        Law::Brace => random_trials(front, law, opts, 2, |s| {
            let (x, y, z) = s.brace_input(max)?;
            Some(check_brace_relation(&x, &y, &z, s.front))
        }),
        Law::RightSided => random_trials(front, law, opts, 2, |s| {
            let (x, y) = s.pair(max)?;
            Some(check_right_sided(&x, &y, s.front))
        }),
        Law::Compat => random_trials(front, law, opts, 2, |s| {
            let (x, y) = s.pair(max)?;
            Some(check_compatibility(&x, &y, s.front))
        }),
        Law::ClosedVsRecursive => random_trials(front, law, opts, 2, |s| {
            let (x, y) = s.pair(max)?;
            Some(check_closed_vs_recursive(&x, &y, s.front))
        }),
        Law::Oracle => oracle_law(front, opts),
        Law::MuIota => mu_iota_law(front, opts),
        Law::GraftEnum => {
            if front.name() != "tree" {
                return Err(VerifyError::NotApplicable { law: law.name(), algebra: front.name() });
            }
            let (count, cx) = check_grafting_exhaustive(max);
            let report = match cx {
                None => LawReport::pass(law.name(), count, max),
                Some(cx) => LawReport::fail(law.name(), count, max, cx),
            };
            Ok(finish(report, law, count, opts, false))
        }
    }
}

fn pairs_object(pairs: &[(String, String)]) -> Value {
    Value::Object(pairs.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<Map<_, _>>())
}

/// `{"law", "verdict", "trials", "max_degree", "seed", "counterexample"}`.
pub fn report_json(report: &LawReport) -> Value {
    let cx = report
        .counterexample
        .as_ref()
        .map(|cx| json!({"inputs": pairs_object(&cx.inputs), "sides": pairs_object(&cx.sides)}));
    json!({
        "law": report.law,
        "verdict": report.verdict.as_str(),
        "trials": report.trials,
        "max_degree": report.max_degree,
        "seed": report.seed,
        "counterexample": cx,
    })
}

pub fn report_text(report: &LawReport) -> String {
    let seed = report.seed.map_or_else(|| "none".to_string(), |s| s.to_string());
    let mut out = format!(
        "{}: {} (trials {}, max degree {}, seed {})",
        report.law,
        report.verdict.as_str(),
        report.trials,
        report.max_degree,
        seed
    );
    if let Some(cx) = &report.counterexample {
        for (k, v) in &cx.inputs {
            out.push_str(&format!("\n  input {k} = {v}"));
        }
        for (k, v) in &cx.sides {
            out.push_str(&format!("\n  {k} = {v}"));
        }
    }
    out
}
