//! Generic right-sided machinery over any brace system.
//!
//! The associative product on `T(R)` is reconstructed from the brace
//! `M_{1q}` with the conventions
//!
//! ```text
//! M00 = 0,  M01 = M10 = Id,  M0p = Mp0 = 0 (p > 1),  Mpq = 0 (p > 1, q ≠ 0)
//! ```
//!
//! [`star_recursive`] is the normative evaluation (split off the last letter
//! of the left factor). [`star_closed`] sums over block compositions and
//! [`star_left_recursive`] splits off the first letter; both exist as
//! independent cross-checks.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::linear::{render_word, split_word, word_degree, Element, Letter, Scalar, TensorElement, Word};
use crate::{Error, Result};

/// A graded alphabet of generators, finite in each degree.
pub trait Alphabet {
    type Letter: Letter;

    fn generators_of_degree(&self, degree: usize) -> Vec<Self::Letter>;
}

/// A brace structure `M_{1q}` on the span of an alphabet.
///
/// Implementations must return `head` itself for empty `args` and a
/// combination of single-letter words otherwise.
pub trait BraceSystem: Alphabet {
    fn brace(&self, head: &Self::Letter, args: &[Self::Letter]) -> Element<Self::Letter>;
}

/// A primal coproduct on the generators of a free algebra `T(V)`, extended
/// multiplicatively to words by [`coproduct_word`].
pub trait CoproductSystem: Alphabet {
    /// Arity-2 coproduct of a generator. Left legs have length at most one.
    fn coproduct(&self, generator: &Self::Letter) -> TensorElement<Self::Letter>;

    /// Generators whose coproduct can pair nontrivially with
    /// `head ⊗ args`. Defaults to the degree slice `deg(head) + deg(args)`.
    fn oracle_candidates(&self, head: &Self::Letter, args: &[Self::Letter]) -> Vec<Self::Letter> {
        self.generators_of_degree(head.degree() + word_degree(args))
    }
}

/// Coproduct of a word as an algebra morphism: `Δ(vw) = Δ(v)Δ(w)`.
pub fn coproduct_word<C: CoproductSystem>(cop: &C, word: &[C::Letter]) -> TensorElement<C::Letter> {
    word.iter()
        .fold(TensorElement::one(2), |acc, l| acc.concat(&cop.coproduct(l)))
}

/// Linear extension of [`coproduct_word`].
pub fn coproduct_element<C: CoproductSystem>(cop: &C, e: &Element<C::Letter>) -> TensorElement<C::Letter> {
    let mut out = TensorElement::zero(2);
    for (w, c) in e.iter() {
        out += &coproduct_word(cop, w).scale(c);
    }
    out
}

/// `M(X; Y)` on words, with `M` extended by the block conventions.
pub fn extend_m<S: BraceSystem>(x: &[S::Letter], y: &[S::Letter], sys: &S) -> Element<S::Letter> {
    match (x.len(), y.len()) {
        (1, _) => sys.brace(&x[0], y),
        (0, 1) => Element::from_word(y.to_vec()),
        _ => Element::zero(),
    }
}

/// `M(x; Y)` extended linearly in `Y`.
pub fn brace_with<S: BraceSystem>(sys: &S, head: &S::Letter, args: &Element<S::Letter>) -> Element<S::Letter> {
    args.map_linear(|w| sys.brace(head, w))
}

/// `M(E; Y)` for `E` a combination of words, using [`extend_m`].
pub fn brace_of<S: BraceSystem>(sys: &S, head: &Element<S::Letter>, args: &[S::Letter]) -> Element<S::Letter> {
    head.map_linear(|x| extend_m(x, args, sys))
}

/// The product `X ⋆ Y` on words, evaluated by splitting off the last letter
/// of `X`:
///
/// ```text
/// (x1⋯xn) ⋆ (y1⋯ym) = [(x1⋯x_{n-1}) ⋆ Y] xn + [X ⋆ (y1⋯y_{m-1})] ym
///                    + Σ_{i=0}^{m-1} [(x1⋯x_{n-1}) ⋆ (y1⋯yi)] M_{1,m-i}(xn; y_{i+1}⋯ym)
/// ```
///
/// Prefix products are tabulated, so each is computed once per call.
pub fn star_words<S: BraceSystem>(x: &[S::Letter], y: &[S::Letter], sys: &S) -> Element<S::Letter> {
    let n = x.len();
    let m = y.len();
    if n == 0 {
        return Element::from_word(y.to_vec());
    }
    if m == 0 {
        return Element::from_word(x.to_vec());
    }
    // table[i][j] = x[..i] ⋆ y[..j]
    let mut table: Vec<Vec<Element<S::Letter>>> = Vec::with_capacity(n + 1);
    table.push((0..=m).map(|j| Element::from_word(y[..j].to_vec())).collect());
    for i in 1..=n {
        let mut row = Vec::with_capacity(m + 1);
        row.push(Element::from_word(x[..i].to_vec()));
        for j in 1..=m {
            let mut acc = table[i - 1][j].concat_word(&x[i - 1..i]);
            acc += row[j - 1].concat_word(&y[j - 1..j]);
            for s in 0..j {
                let b = sys.brace(&x[i - 1], &y[s..j]);
                if !b.is_zero() {
                    acc += table[i - 1][s].concat(&b);
                }
            }
            row.push(acc);
        }
        table.push(row);
    }
    table.pop().and_then(|mut r| r.pop()).unwrap_or_default()
}

/// Bilinear extension of [`star_words`].
pub fn star_recursive<S: BraceSystem>(a: &Element<S::Letter>, b: &Element<S::Letter>, sys: &S) -> Element<S::Letter> {
    let mut out = Element::zero();
    for (x, c1) in a.iter() {
        for (y, c2) in b.iter() {
            out += star_words(x, y, sys).scale(&(c1 * c2));
        }
    }
    out
}

/// The product evaluated by splitting off the first letter of `X`:
/// `X ⋆ Y = Σ M(X¹; Y¹)(X² ⋆ Y²)`. Cross-check only.
pub fn star_left_recursive<S: BraceSystem>(x: &[S::Letter], y: &[S::Letter], sys: &S) -> Element<S::Letter> {
    let n = x.len();
    let m = y.len();
    if n == 0 {
        return Element::from_word(y.to_vec());
    }
    if m == 0 {
        return Element::from_word(x.to_vec());
    }
    // table[i][j] = x[i..] ⋆ y[j..]
    let mut table: Vec<Vec<Element<S::Letter>>> = vec![vec![Element::zero(); m + 1]; n + 1];
    for j in 0..=m {
        table[n][j] = Element::from_word(y[j..].to_vec());
    }
    for i in (0..n).rev() {
        table[i][m] = Element::from_word(x[i..].to_vec());
        for j in (0..m).rev() {
            // X¹ = 1, Y¹ = y_j
            let mut acc = Element::from_word(y[j..j + 1].to_vec()).concat(&table[i][j + 1]);
            // X¹ = x_i, Y¹ = y[j..e]
            for e in j..=m {
                let b = sys.brace(&x[i], &y[j..e]);
                if !b.is_zero() {
                    acc += b.concat(&table[i + 1][e]);
                }
            }
            table[i][j] = acc;
        }
    }
    core::mem::take(&mut table[0][0])
}

/// The product as the closed sum over block compositions
/// `X = X¹⋯Xᵏ`, `Y = Y¹⋯Yᵏ` of `M(X¹;Y¹)⋯M(Xᵏ;Yᵏ)`, where each block
/// holds at most one letter of `X`. Blocks `(0,0)` and `(0,q≥2)` vanish and
/// are never generated, which bounds `k ≤ n + m`.
pub fn star_closed_words<S: BraceSystem>(x: &[S::Letter], y: &[S::Letter], sys: &S) -> Element<S::Letter> {
    let mut out = Element::zero();
    closed_blocks(x, y, sys, Element::one(), &mut out);
    out
}

fn closed_blocks<S: BraceSystem>(
    x: &[S::Letter],
    y: &[S::Letter],
    sys: &S,
    acc: Element<S::Letter>,
    out: &mut Element<S::Letter>,
) {
    if acc.is_zero() {
        return;
    }
    if x.is_empty() && y.is_empty() {
        *out += acc;
        return;
    }
    if let Some((first, rest)) = y.split_first() {
        // block (p, q) = (0, 1)
        closed_blocks(x, rest, sys, acc.concat_word(core::slice::from_ref(first)), out);
    }
    if let Some((head, xs)) = x.split_first() {
        // block (1, q)
        for q in 0..=y.len() {
            let b = sys.brace(head, &y[..q]);
            if !b.is_zero() {
                closed_blocks(xs, &y[q..], sys, acc.concat(&b), out);
            }
        }
    }
}

/// Bilinear extension of [`star_closed_words`].
pub fn star_closed<S: BraceSystem>(a: &Element<S::Letter>, b: &Element<S::Letter>, sys: &S) -> Element<S::Letter> {
    let mut out = Element::zero();
    for (x, c1) in a.iter() {
        for (y, c2) in b.iter() {
            out += star_closed_words(x, y, sys).scale(&(c1 * c2));
        }
    }
    out
}

/// Componentwise product on tensors: `(a⊗b) ⋆ (c⊗d) = (a⋆c) ⊗ (b⋆d)`.
pub fn star_tensor<S: BraceSystem>(
    a: &TensorElement<S::Letter>,
    b: &TensorElement<S::Letter>,
    sys: &S,
) -> TensorElement<S::Letter> {
    assert_eq!(a.arity(), b.arity(), "tensor arity mismatch");
    let mut out = TensorElement::zero(a.arity());
    for (l1, c1) in a.iter() {
        for (l2, c2) in b.iter() {
            let factors: Vec<Element<S::Letter>> =
                l1.iter().zip(l2).map(|(u, v)| star_words(u, v, sys)).collect();
            let coeff = c1 * c2;
            expand_tensor(&factors, 0, Vec::new(), coeff, &mut out);
        }
    }
    out
}

fn expand_tensor<L: Letter>(
    factors: &[Element<L>],
    at: usize,
    legs: Vec<Word<L>>,
    coeff: Scalar,
    out: &mut TensorElement<L>,
) {
    if at == factors.len() {
        out.add_term(legs, coeff);
        return;
    }
    for (w, c) in factors[at].iter() {
        let mut l = legs.clone();
        l.push(w.clone());
        expand_tensor(factors, at + 1, l, &coeff * c, out);
    }
}

/// Verdict of a law check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// Inputs and both evaluated sides of a failing check, rendered as text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: Vec<(String, String)>,
    pub sides: Vec<(String, String)>,
}

/// Outcome of checking one law on one or more inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub verdict: Verdict,
    pub trials: usize,
    pub max_degree: usize,
    pub seed: Option<u64>,
    pub counterexample: Option<Counterexample>,
}

impl LawReport {
    pub fn pass(law: &str, trials: usize, max_degree: usize) -> Self {
        LawReport {
            law: law.to_string(),
            verdict: Verdict::Pass,
            trials,
            max_degree,
            seed: None,
            counterexample: None,
        }
    }

    pub fn fail(law: &str, trials: usize, max_degree: usize, cx: Counterexample) -> Self {
        LawReport {
            law: law.to_string(),
            verdict: Verdict::Fail,
            trials,
            max_degree,
            seed: None,
            counterexample: Some(cx),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Expanded right-hand side of the brace relation
///
/// ```text
/// {{x; y1..yn}; z1..zm} = Σ {x; Z0, {y1; Z'1}, Z1, …, {yn; Z'n}, Zn}
/// ```
///
/// summed over all cuttings `Z = Z0 Z'1 Z1 ⋯ Z'n Zn` into consecutive
/// blocks. The `Zi` letters stay as direct arguments. No `⋆` product is
/// evaluated.
pub fn brace_relation_expanded<S: BraceSystem>(
    x: &S::Letter,
    y: &[S::Letter],
    z: &[S::Letter],
    sys: &S,
) -> Element<S::Letter> {
    let mut args = Element::zero();
    insertions(y, z, sys, Element::one(), &mut args);
    brace_with(sys, x, &args)
}

fn insertions<S: BraceSystem>(
    y: &[S::Letter],
    z: &[S::Letter],
    sys: &S,
    acc: Element<S::Letter>,
    out: &mut Element<S::Letter>,
) {
    if acc.is_zero() {
        return;
    }
    if y.is_empty() && z.is_empty() {
        *out += acc;
        return;
    }
    if let Some((first, rest)) = z.split_first() {
        insertions(y, rest, sys, acc.concat_word(core::slice::from_ref(first)), out);
    }
    if let Some((yi, ys)) = y.split_first() {
        for len in 0..=z.len() {
            let inner = sys.brace(yi, &z[..len]);
            insertions(ys, &z[len..], sys, acc.concat(&inner), out);
        }
    }
}

/// Checks `M(M(x;Y);Z) = M(x; Y⋆Z)` and compares both with the expanded
/// brace relation.
pub fn check_brace_relation<S: BraceSystem>(
    x: &S::Letter,
    y: &[S::Letter],
    z: &[S::Letter],
    sys: &S,
) -> LawReport {
    let lhs = brace_of(sys, &sys.brace(x, y), z);
    let via_star = brace_with(sys, x, &star_words(y, z, sys));
    let expanded = brace_relation_expanded(x, y, z, sys);
    let degree = x.degree() + word_degree(y) + word_degree(z);
    if lhs == via_star && via_star == expanded {
        LawReport::pass("brace", 1, degree)
    } else {
        LawReport::fail(
            "brace",
            1,
            degree,
            Counterexample {
                inputs: vec![
                    ("x".to_string(), x.to_string()),
                    ("Y".to_string(), render_word(y)),
                    ("Z".to_string(), render_word(z)),
                ],
                sides: vec![
                    ("M(M(x;Y);Z)".to_string(), lhs.to_string()),
                    ("M(x;Y*Z)".to_string(), via_star.to_string()),
                    ("expanded".to_string(), expanded.to_string()),
                ],
            },
        )
    }
}

/// Checks that every word of `X ⋆ Y` is at least as long as `X`.
pub fn check_right_sided<S: BraceSystem>(x: &[S::Letter], y: &[S::Letter], sys: &S) -> LawReport {
    let product = star_words(x, y, sys);
    let degree = word_degree(x) + word_degree(y);
    let short = product.words().find(|w| w.len() < x.len()).cloned();
    match short {
        None => LawReport::pass("right-sided", 1, degree),
        Some(short) => LawReport::fail(
            "right-sided",
            1,
            degree,
            Counterexample {
                inputs: vec![("X".to_string(), render_word(x)), ("Y".to_string(), render_word(y))],
                sides: vec![
                    ("X*Y".to_string(), product.to_string()),
                    ("short word".to_string(), render_word(&short)),
                ],
            },
        ),
    }
}

/// Brute-force dual brace
/// `M_{1q}(v*; a*) = Σ_m ⟨v* ⊗ a* | Δ v_m⟩ v*_m`, enumerating the candidate
/// generators `v_m` and reading off their primal coproducts.
///
/// For `q = 0` the result is `v*` (`M10 = Id`). Fails with
/// [`Error::BoundExceeded`] when the output degree is above `max_degree`.
pub fn dual_brace_oracle<C: CoproductSystem>(
    vstar: &C::Letter,
    a: &[C::Letter],
    cop: &C,
    max_degree: usize,
) -> Result<Element<C::Letter>> {
    let degree = vstar.degree() + word_degree(a);
    if degree > max_degree {
        return Err(Error::BoundExceeded { degree, max: max_degree });
    }
    if a.is_empty() {
        return Ok(Element::from_letter(vstar.clone()));
    }
    let legs = [vec![vstar.clone()], a.to_vec()];
    let mut out = Element::zero();
    for m in cop.oracle_candidates(vstar, a) {
        let c = cop.coproduct(&m).coefficient(&legs);
        if !c.is_zero() {
            out.add_term(vec![m], c);
        }
    }
    Ok(out)
}

/// Brute-force dual product `⟨X ⋆ Y | w⟩ = ⟨X ⊗ Y | Δ w⟩` over all words `w`
/// of degree `deg X + deg Y`.
pub fn dual_star_oracle<C: CoproductSystem>(
    x: &[C::Letter],
    y: &[C::Letter],
    cop: &C,
    max_degree: usize,
) -> Result<Element<C::Letter>> {
    let degree = word_degree(x) + word_degree(y);
    if degree > max_degree {
        return Err(Error::BoundExceeded { degree, max: max_degree });
    }
    let legs = [x.to_vec(), y.to_vec()];
    let mut out = Element::zero();
    for w in words_of_degree(cop, degree) {
        let c = coproduct_word(cop, &w).coefficient(&legs);
        if !c.is_zero() {
            out.add_term(w, c);
        }
    }
    Ok(out)
}

/// Every word of exactly the given degree over the alphabet.
pub fn words_of_degree<A: Alphabet + ?Sized>(alphabet: &A, degree: usize) -> Vec<Word<A::Letter>> {
    let gens: Vec<Vec<A::Letter>> = (0..=degree).map(|d| alphabet.generators_of_degree(d)).collect();
    let mut out = Vec::new();
    fill_words(&gens, degree, Vec::new(), &mut out);
    out
}

fn fill_words<L: Letter>(gens: &[Vec<L>], rest: usize, prefix: Vec<L>, out: &mut Vec<Vec<L>>) {
    if rest == 0 {
        out.push(prefix);
        return;
    }
    for d in 1..=rest {
        for g in &gens[d] {
            let mut p = prefix.clone();
            p.push(g.clone());
            fill_words(gens, rest - d, p, out);
        }
    }
}

/// Renders a list of words for diagnostics.
pub fn describe_words<L: Letter>(words: &[&[L]]) -> String {
    let parts: Vec<String> = words.iter().map(|w| render_word(w)).collect();
    format!("[{}]", parts.join(", "))
}

/// Checks `(X⋆Y)⋆Z = X⋆(Y⋆Z)` on words.
pub fn check_associativity<S: BraceSystem>(
    x: &[S::Letter],
    y: &[S::Letter],
    z: &[S::Letter],
    sys: &S,
) -> LawReport {
    let xy = star_words(x, y, sys);
    let left = star_recursive(&xy, &Element::from_word(z.to_vec()), sys);
    let yz = star_words(y, z, sys);
    let right = star_recursive(&Element::from_word(x.to_vec()), &yz, sys);
    let degree = word_degree(x) + word_degree(y) + word_degree(z);
    if left == right {
        LawReport::pass("assoc", 1, degree)
    } else {
        LawReport::fail(
            "assoc",
            1,
            degree,
            Counterexample {
                inputs: vec![
                    ("X".to_string(), render_word(x)),
                    ("Y".to_string(), render_word(y)),
                    ("Z".to_string(), render_word(z)),
                ],
                sides: vec![
                    ("(X*Y)*Z".to_string(), left.to_string()),
                    ("X*(Y*Z)".to_string(), right.to_string()),
                ],
            },
        )
    }
}

/// Checks `Δ*(X⋆Y) = Δ*(X) ⋆ Δ*(Y)` with the componentwise product.
pub fn check_compatibility<S: BraceSystem>(x: &[S::Letter], y: &[S::Letter], sys: &S) -> LawReport {
    let deconcat2 = |e: &Element<S::Letter>| {
        let mut t = TensorElement::zero(2);
        for (w, c) in e.iter() {
            for legs in split_word(w, 2, true) {
                t.add_term(legs, c.clone());
            }
        }
        t
    };
    let left = deconcat2(&star_words(x, y, sys));
    let right = star_tensor(
        &deconcat2(&Element::from_word(x.to_vec())),
        &deconcat2(&Element::from_word(y.to_vec())),
        sys,
    );
    let degree = word_degree(x) + word_degree(y);
    if left == right {
        LawReport::pass("compat", 1, degree)
    } else {
        LawReport::fail(
            "compat",
            1,
            degree,
            Counterexample {
                inputs: vec![("X".to_string(), render_word(x)), ("Y".to_string(), render_word(y))],
                sides: vec![
                    ("D(X*Y)".to_string(), left.to_string()),
                    ("D(X)*D(Y)".to_string(), right.to_string()),
                ],
            },
        )
    }
}

/// Checks that the closed form, the right-split recursion and the left-split
/// recursion agree on a pair of words.
pub fn check_closed_vs_recursive<S: BraceSystem>(x: &[S::Letter], y: &[S::Letter], sys: &S) -> LawReport {
    let recursive = star_words(x, y, sys);
    let closed = star_closed_words(x, y, sys);
    let left = star_left_recursive(x, y, sys);
    let degree = word_degree(x) + word_degree(y);
    if recursive == closed && closed == left {
        LawReport::pass("closed-vs-recursive", 1, degree)
    } else {
        LawReport::fail(
            "closed-vs-recursive",
            1,
            degree,
            Counterexample {
                inputs: vec![("X".to_string(), render_word(x)), ("Y".to_string(), render_word(y))],
                sides: vec![
                    ("recursive".to_string(), recursive.to_string()),
                    ("closed".to_string(), closed.to_string()),
                    ("left-split".to_string(), left.to_string()),
                ],
            },
        )
    }
}
