//! Text, JSON and LaTeX renderings of elements, tensors and scalars.

use cha_core::{Element, Letter, Scalar, TensorElement};
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::front::Front;

/// Output format selected by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// JSON rendering: `{"terms":[{"coeff":"p/q","word":["key",...]}]}`.
pub fn element_json<L: Letter>(e: &Element<L>) -> Value {
    let terms: Vec<Value> = e
        .canonical_terms()
        .into_iter()
        .map(|(w, c)| json!({"coeff": c.to_string(), "word": w.iter().map(ToString::to_string).collect::<Vec<_>>()}))
        .collect();
    json!({ "terms": terms })
}

/// JSON rendering of a tensor: each term carries its `legs` as word arrays.
pub fn tensor_json<L: Letter>(t: &TensorElement<L>) -> Value {
    let terms: Vec<Value> = t
        .canonical_terms()
        .into_iter()
        .map(|(legs, c)| {
            let legs: Vec<Vec<String>> = legs.iter().map(|w| w.iter().map(ToString::to_string).collect()).collect();
            json!({"coeff": c.to_string(), "legs": legs})
        })
        .collect();
    json!({ "arity": t.arity(), "terms": terms })
}

/// LaTeX scalar: integers plainly, fractions as `\frac{p}{q}`.
pub fn latex_scalar(c: &Scalar) -> String {
    let sign = if c.is_negative() { "-" } else { "" };
    let a = c.abs();
    if a.denom().is_one() {
        format!("{sign}{}", a.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

fn latex_word<L>(letter: &impl Fn(&L) -> String, w: &[L]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter().map(letter).collect::<Vec<_>>().join("\\,")
}

fn latex_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Scalar, String)>,
{
    let mut out = String::new();
    for (i, (c, body)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if i > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&latex_scalar(&a));
            out.push_str("\\,");
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn element_latex<F: Front>(front: &F, e: &Element<F::Letter>) -> String {
    element_latex_with(e, &|l: &F::Letter| front.latex_letter(l))
}

/// LaTeX for an element over any letter type, given a letter renderer.
pub fn element_latex_with<L: Letter>(e: &Element<L>, letter: &impl Fn(&L) -> String) -> String {
    latex_terms(e.canonical_terms().into_iter().map(|(w, c)| (c, latex_word(letter, w))))
}

pub fn tensor_latex<F: Front>(front: &F, t: &TensorElement<F::Letter>) -> String {
    latex_terms(t.canonical_terms().into_iter().map(|(legs, c)| {
        let body = legs.iter().map(|w| latex_word(&|l: &F::Letter| front.latex_letter(l), w)).collect::<Vec<_>>().join(" \\otimes ");
        (c, body)
    }))
}

pub fn element<F: Front>(front: &F, e: &Element<F::Letter>, format: Format) -> String {
    match format {
        Format::Text => e.to_string(),
        Format::Json => element_json(e).to_string(),
        Format::Latex => element_latex(front, e),
    }
}

pub fn tensor<F: Front>(front: &F, t: &TensorElement<F::Letter>, format: Format) -> String {
    match format {
        Format::Text => t.to_string(),
        Format::Json => tensor_json(t).to_string(),
        Format::Latex => tensor_latex(front, t),
    }
}

pub fn scalar(c: &Scalar, format: Format) -> String {
    match format {
        Format::Text => c.to_string(),
        Format::Json => json!({ "value": c.to_string() }).to_string(),
        Format::Latex => latex_scalar(c),
    }
}
