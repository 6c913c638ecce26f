//! The noncommutative Faà di Bruno algebra `T(V)`, `V = span{v1, v2, …}`
//! with `|vn| = n`, and the brace on its graded dual.
//!
//! `v0` is identified with the unit and never appears inside a word.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::combinat::{binomial, compositions, weak_compositions};
use crate::engine::{Alphabet, BraceSystem, CoproductSystem};
use crate::linear::{Element, Letter, Scalar, TensorElement};
use crate::{Error, Result};

/// The generator `vn` (or its dual `vn*`), `n ≥ 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FdbLetter(u32);

impl FdbLetter {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("v0 is the unit, not a generator".into()));
        }
        Ok(FdbLetter(n))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl Letter for FdbLetter {
    fn degree(&self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for FdbLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Debug for FdbLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// The word `v_{k0} ⋯ v_{km}` with zero indices dropped.
fn word_dropping_units(indices: &[usize]) -> Vec<FdbLetter> {
    indices
        .iter()
        .filter(|&&k| k > 0)
        .map(|&k| FdbLetter(k as u32))
        .collect()
}

/// `Δ^dif(vn) = Σ_{m=0}^{n} vm ⊗ Σ_{k0+…+km = n−m} v_{k0} ⋯ v_{km}`.
pub fn delta_dif(n: usize) -> Result<TensorElement<FdbLetter>> {
    if n == 0 {
        return Err(Error::Domain("delta_dif needs n >= 1".into()));
    }
    let mut out = TensorElement::zero(2);
    for m in 0..=n {
        let left = word_dropping_units(&[m]);
        for ks in weak_compositions(n - m, m + 1) {
            out.add_term(vec![left.clone(), word_dropping_units(&ks)], Scalar::from_integer(1.into()));
        }
    }
    Ok(out)
}

/// `Q^{(k)}_d(v) = Σ_{l=1}^{k+1} C(k+1, l) Σ_{j1+…+jl = d, ji > 0} v_{j1} ⋯ v_{jl}`,
/// and `Q^{(k)}_0 = 1`.
pub fn q_poly(k: usize, d: usize) -> Element<FdbLetter> {
    if d == 0 {
        return Element::one();
    }
    let mut out = Element::zero();
    for l in 1..=(k + 1) {
        let c = Scalar::from_integer(binomial(k + 1, l));
        if c.is_zero() {
            continue;
        }
        for js in compositions(d, l) {
            out.add_term(word_dropping_units(&js), c.clone());
        }
    }
    out
}

/// `M_{1q}(vn*; v_{m1}* ⋯ v_{mq}*) = C(n+1, q) · v*_{n+m1+…+mq}`.
pub fn brace_fdb(n: usize, ms: &[usize]) -> Element<FdbLetter> {
    let c = binomial(n + 1, ms.len());
    let total = n + ms.iter().sum::<usize>();
    Element::term(vec![FdbLetter(total as u32)], Scalar::from_integer(c))
}

/// The Faà di Bruno algebra as a brace system (dual side) and a coproduct
/// system (primal side).
#[derive(Debug, Clone, Copy, Default)]
pub struct FaaDiBruno;

impl Alphabet for FaaDiBruno {
    type Letter = FdbLetter;

    fn generators_of_degree(&self, degree: usize) -> Vec<FdbLetter> {
        if degree == 0 {
            Vec::new()
        } else {
            vec![FdbLetter(degree as u32)]
        }
    }
}

impl BraceSystem for FaaDiBruno {
    fn brace(&self, head: &FdbLetter, args: &[FdbLetter]) -> Element<FdbLetter> {
        let ms: Vec<usize> = args.iter().map(Letter::degree).collect();
        brace_fdb(head.degree(), &ms)
    }
}

impl CoproductSystem for FaaDiBruno {
    fn coproduct(&self, generator: &FdbLetter) -> TensorElement<FdbLetter> {
        delta_dif(generator.degree()).expect("generators have positive index")
    }
}
