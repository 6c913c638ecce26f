//! Exact scalars, words and formal linear combinations.
//!
//! Every algebra in this crate is a tensor algebra `T(V)` (or its graded dual
//! `T(V*)`) on some alphabet of generators. A basis vector is a [`Word`] of
//! letters, an [`Element`] is a finite linear combination of words with
//! rational coefficients, and a [`TensorElement`] is a linear combination of
//! fixed-arity tuples of words.
//!
//! Primal generators and their dual letters share one key: the pairing
//! `⟨v*_n | v_m⟩ = δ_{n,m}` is the identity on keys.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::block_lengths;
use crate::{Error, Result};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q` as a scalar.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// A generator of some algebra. Two letters are equal iff their rendered keys
/// are equal; `Display` renders the key.
pub trait Letter: Clone + Ord + fmt::Debug + fmt::Display {
    fn degree(&self) -> usize;
}

/// Ordered sequence of letters; the empty word is the unit `1`.
pub type Word<L> = Vec<L>;

/// Sum of letter degrees.
pub fn word_degree<L: Letter>(word: &[L]) -> usize {
    word.iter().map(Letter::degree).sum()
}

/// Renders a word as whitespace-separated keys, `1` for the empty word.
pub fn render_word<L: Letter>(word: &[L]) -> String {
    if word.is_empty() {
        return String::from("1");
    }
    let mut s = String::new();
    for (i, l) in word.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&l.to_string());
    }
    s
}

fn word_keys<L: Letter>(word: &[L]) -> Vec<String> {
    word.iter().map(ToString::to_string).collect()
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Scalar) -> fmt::Result {
    if !c.is_one() {
        write!(f, "{}*", c)?;
    }
    Ok(())
}

/// Finite linear combination of words with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element<L: Letter> {
    terms: BTreeMap<Word<L>, Scalar>,
}

impl<L: Letter> Default for Element<L> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<L: Letter> Element<L> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    /// The unit word with coefficient 1.
    pub fn one() -> Self {
        Self::from_word(Vec::new())
    }

    pub fn from_word(word: Word<L>) -> Self {
        Self::term(word, Scalar::one())
    }

    pub fn from_letter(letter: L) -> Self {
        Self::from_word(vec![letter])
    }

    pub fn term(word: Word<L>, coeff: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(word, coeff);
        e
    }

    /// Adds `coeff · word`, dropping the entry if it cancels.
    pub fn add_term(&mut self, word: Word<L>, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word<L>, &Scalar)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word<L>> {
        self.terms.keys()
    }

    pub fn coefficient(&self, word: &[L]) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Concatenation product, the tensor product of `T(V)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// `self · word`.
    pub fn concat_word(&self, word: &[L]) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut w = w.clone();
            w.extend(word.iter().cloned());
            out.add_term(w, c.clone());
        }
        out
    }

    /// Applies a linear map given on basis words.
    pub fn map_linear<M: Letter>(&self, mut f: impl FnMut(&[L]) -> Element<M>) -> Element<M> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out += f(w).scale(c);
        }
        out
    }

    /// Projection onto words of the given length.
    pub fn length_part(&self, len: usize) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms in canonical order: lexicographic on rendered letter keys.
    pub fn canonical_terms(&self) -> Vec<(&Word<L>, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, c)| (word_keys(w), w, c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }
}

impl<L: Letter> fmt::Display for Element<L> {
    /// `coeff*word + coeff*word`, `0` for the zero element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.canonical_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_coeff(f, c)?;
            f.write_str(&render_word(w))?;
        }
        Ok(())
    }
}

impl<L: Letter> fmt::Debug for Element<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<L: Letter> AddAssign<Element<L>> for Element<L> {
    fn add_assign(&mut self, rhs: Element<L>) {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
    }
}

impl<L: Letter> AddAssign<&Element<L>> for Element<L> {
    fn add_assign(&mut self, rhs: &Element<L>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl<L: Letter> Add for Element<L> {
    type Output = Element<L>;
    fn add(mut self, rhs: Element<L>) -> Element<L> {
        self += rhs;
        self
    }
}

impl<L: Letter> Add<&Element<L>> for &Element<L> {
    type Output = Element<L>;
    fn add(self, rhs: &Element<L>) -> Element<L> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<L: Letter> Neg for Element<L> {
    type Output = Element<L>;
    fn neg(self) -> Element<L> {
        Element { terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect() }
    }
}

impl<L: Letter> Sub for Element<L> {
    type Output = Element<L>;
    fn sub(self, rhs: Element<L>) -> Element<L> {
        self + (-rhs)
    }
}

impl<L: Letter> Sub<&Element<L>> for &Element<L> {
    type Output = Element<L>;
    fn sub(self, rhs: &Element<L>) -> Element<L> {
        self.clone() + (-rhs.clone())
    }
}

impl<L: Letter> FromIterator<(Word<L>, Scalar)> for Element<L> {
    fn from_iter<I: IntoIterator<Item = (Word<L>, Scalar)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (w, c) in iter {
            e.add_term(w, c);
        }
        e
    }
}

/// Linear combination of `arity`-tuples of words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement<L: Letter> {
    arity: usize,
    terms: BTreeMap<Vec<Word<L>>, Scalar>,
}

impl<L: Letter> TensorElement<L> {
    pub fn zero(arity: usize) -> Self {
        TensorElement { arity, terms: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Adds `coeff · (legs[0] ⊗ … ⊗ legs[k-1])`.
    ///
    /// Panics if the number of legs differs from the arity.
    pub fn add_term(&mut self, legs: Vec<Word<L>>, coeff: Scalar) {
        assert_eq!(legs.len(), self.arity, "tensor arity mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Word<L>>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, legs: &[Word<L>]) -> Scalar {
        self.terms.get(legs).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.arity);
        for (legs, x) in &self.terms {
            out.add_term(legs.clone(), x * c);
        }
        out
    }

    /// Componentwise concatenation `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        let mut out = Self::zero(self.arity);
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                let legs = l1
                    .iter()
                    .zip(l2)
                    .map(|(a, b)| {
                        let mut w = a.clone();
                        w.extend(b.iter().cloned());
                        w
                    })
                    .collect();
                out.add_term(legs, c1 * c2);
            }
        }
        out
    }

    /// The unit `1⊗…⊗1`.
    pub fn one(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.add_term(vec![Vec::new(); arity], Scalar::one());
        t
    }

    pub fn canonical_terms(&self) -> Vec<(&Vec<Word<L>>, &Scalar)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(legs, c)| (legs.iter().map(|w| word_keys(w)).collect::<Vec<_>>(), legs, c))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, l, c)| (l, c)).collect()
    }
}

impl<L: Letter> AddAssign<&TensorElement<L>> for TensorElement<L> {
    fn add_assign(&mut self, rhs: &TensorElement<L>) {
        for (legs, c) in &rhs.terms {
            self.add_term(legs.clone(), c.clone());
        }
    }
}

impl<L: Letter> fmt::Display for TensorElement<L> {
    /// `coeff*w1 ⊗ w2 + …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (legs, c)) in self.canonical_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_coeff(f, c)?;
            for (j, w) in legs.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ⊗ ")?;
                }
                f.write_str(&render_word(w))?;
            }
        }
        Ok(())
    }
}

impl<L: Letter> fmt::Debug for TensorElement<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Deconcatenation applied `parts - 1` times: every ordered splitting of each
/// word into `parts` consecutive, possibly empty, blocks.
pub fn deconcat<L: Letter>(a: &Element<L>, parts: usize) -> Result<TensorElement<L>> {
    if parts < 2 {
        return Err(Error::Domain(alloc::format!(
            "deconcatenation needs at least 2 parts, got {parts}"
        )));
    }
    let mut out = TensorElement::zero(parts);
    for (w, c) in a.iter() {
        for legs in split_word(w, parts, true) {
            out.add_term(legs, c.clone());
        }
    }
    Ok(out)
}

/// All splittings of `word` into `parts` consecutive blocks.
pub fn split_word<L: Clone>(word: &[L], parts: usize, allow_empty: bool) -> Vec<Vec<Vec<L>>> {
    block_lengths(word.len(), parts, allow_empty)
        .into_iter()
        .map(|lens| {
            let mut at = 0;
            lens.into_iter()
                .map(|n| {
                    let b = word[at..at + n].to_vec();
                    at += n;
                    b
                })
                .collect()
        })
        .collect()
}

/// Dual pairing `⟨dual | primal⟩`, diagonal on words.
pub fn pair<L: Letter>(dual: &Element<L>, primal: &Element<L>) -> Scalar {
    let (small, large) = if dual.len() <= primal.len() { (dual, primal) } else { (primal, dual) };
    small
        .iter()
        .map(|(w, c)| c * large.coefficient(w))
        .fold(Scalar::zero(), |acc, x| acc + x)
}

/// Pairing of tensors of equal arity, leg by leg.
pub fn pair_tensor<L: Letter>(dual: &TensorElement<L>, primal: &TensorElement<L>) -> Result<Scalar> {
    if dual.arity() != primal.arity() {
        return Err(Error::Domain(alloc::format!(
            "cannot pair tensors of arity {} and {}",
            dual.arity(),
            primal.arity()
        )));
    }
    Ok(dual
        .iter()
        .map(|(legs, c)| c * primal.coefficient(legs))
        .fold(Scalar::zero(), |acc, x| acc + x))
}

/// Free symbolic letter of degree 1, used to reproduce formulas with
/// uninterpreted generators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym(pub String);

impl Sym {
    pub fn new(name: &str) -> Self {
        Sym(String::from(name))
    }
}

impl Letter for Sym {
    fn degree(&self) -> usize {
        1
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}
