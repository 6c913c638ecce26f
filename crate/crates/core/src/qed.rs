//! The noncommutative QED charge algebra on planar binary trees.
//!
//! Trees form a free algebra under the over product `s/t`, generated by the
//! trees `v(t) = o ∨ t`. A tree is identified with its left-spine word of
//! generators: `(L, R) = L / v(R)`. The coproduct `Δ^α` is computed through
//! dressed combs `γ(t1,…,tk) = t1 ∨ (t2 ∨ (… ∨ (tk ∨ o)))`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::combinat::cartesian;
use crate::engine::{coproduct_word, star_words, Alphabet, BraceSystem, CoproductSystem};
use crate::linear::{split_word, word_degree, Element, Letter, Scalar, TensorElement, Word};
use crate::{Error, Result};

/// Full planar binary tree: the leaf `o` or an ordered pair `(L,R)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanarBinaryTree {
    Leaf,
    Node(Box<PlanarBinaryTree>, Box<PlanarBinaryTree>),
}

use PlanarBinaryTree::{Leaf, Node};

impl PlanarBinaryTree {
    pub fn leaf() -> Self {
        Leaf
    }

    pub fn node(left: PlanarBinaryTree, right: PlanarBinaryTree) -> Self {
        Node(Box::new(left), Box::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Leaf)
    }

    /// Number of internal vertices.
    pub fn size(&self) -> usize {
        match self {
            Leaf => 0,
            Node(l, r) => l.size() + r.size() + 1,
        }
    }

    /// All trees with `n` internal vertices, a Catalan number of them.
    pub fn all_of_size(n: usize) -> Vec<PlanarBinaryTree> {
        if n == 0 {
            return vec![Leaf];
        }
        let mut out = Vec::new();
        for left in 0..n {
            let ls = Self::all_of_size(left);
            let rs = Self::all_of_size(n - 1 - left);
            for l in &ls {
                for r in &rs {
                    out.push(Self::node(l.clone(), r.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => f.write_str("o"),
            Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl fmt::Debug for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The generator `v(t)`, stored by its shape `t`. Degree `|t| + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QedLetter(pub PlanarBinaryTree);

impl QedLetter {
    pub fn shape(&self) -> &PlanarBinaryTree {
        &self.0
    }

    /// The tree `o ∨ t` this generator stands for.
    pub fn tree(&self) -> PlanarBinaryTree {
        vee(Leaf, self.0.clone())
    }
}

impl Letter for QedLetter {
    fn degree(&self) -> usize {
        self.0.size() + 1
    }
}

impl fmt::Display for QedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({})", self.0)
    }
}

impl fmt::Debug for QedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `s / t`: `s` grafted on the leftmost leaf of `t`.
pub fn over(s: &PlanarBinaryTree, t: &PlanarBinaryTree) -> PlanarBinaryTree {
    match t {
        Leaf => s.clone(),
        Node(l, r) => Node(Box::new(over(s, l)), r.clone()),
    }
}

/// `s ∨ t`: both trees joined under a new root.
pub fn vee(s: PlanarBinaryTree, t: PlanarBinaryTree) -> PlanarBinaryTree {
    PlanarBinaryTree::node(s, t)
}

/// The dressed comb `γ(t1,…,tk)`.
pub fn gamma(ts: &[PlanarBinaryTree]) -> Result<PlanarBinaryTree> {
    if ts.is_empty() {
        return Err(Error::Domain("gamma needs at least one tree".into()));
    }
    Ok(ts.iter().rev().fold(Leaf, |acc, t| vee(t.clone(), acc)))
}

/// Inverse of [`gamma`]: the left subtrees hanging off the right spine.
pub fn gamma_decompose(t: &PlanarBinaryTree) -> Result<Vec<PlanarBinaryTree>> {
    if t.is_leaf() {
        return Err(Error::Domain("the leaf is not a dressed comb".into()));
    }
    let mut out = Vec::new();
    let mut cur = t;
    while let Node(l, r) = cur {
        out.push((**l).clone());
        cur = r;
    }
    Ok(out)
}

/// Left-spine factorization `t = v(u1) / … / v(ul)`.
pub fn spine_factorize(t: &PlanarBinaryTree) -> Word<QedLetter> {
    let mut out = Vec::new();
    let mut cur = t;
    while let Node(l, r) = cur {
        out.push(QedLetter((**r).clone()));
        cur = l;
    }
    out.reverse();
    out
}

/// Inverse of [`spine_factorize`]: the iterated over product.
pub fn from_spine(word: &[QedLetter]) -> PlanarBinaryTree {
    word.iter()
        .fold(Leaf, |acc, l| PlanarBinaryTree::node(acc, l.0.clone()))
}

/// `Δ^α` on a generator.
pub fn delta_alpha_generator(v: &QedLetter) -> TensorElement<QedLetter> {
    let mut out = TensorElement::zero(2);
    out.add_term(vec![Vec::new(), vec![v.clone()]], Scalar::one());
    let ts = match gamma_decompose(&v.0) {
        Ok(ts) => ts,
        Err(_) => {
            // v(o): primitive
            out.add_term(vec![vec![v.clone()], Vec::new()], Scalar::one());
            return out;
        }
    };
    let legs: Vec<Vec<(Word<QedLetter>, Word<QedLetter>, Scalar)>> = ts
        .iter()
        .map(|ti| {
            delta_alpha_word(&spine_factorize(ti))
                .iter()
                .map(|(l, c)| (l[0].clone(), l[1].clone(), c.clone()))
                .collect()
        })
        .collect();
    for choice in cartesian(&legs) {
        let lefts: Vec<PlanarBinaryTree> = choice.iter().map(|(l, _, _)| from_spine(l)).collect();
        let head = QedLetter(gamma(&lefts).expect("k >= 1"));
        let right: Word<QedLetter> = choice.iter().flat_map(|(_, r, _)| r.iter().cloned()).collect();
        let coeff = choice.iter().fold(Scalar::one(), |acc, (_, _, c)| acc * c);
        out.add_term(vec![vec![head], right], coeff);
    }
    out
}

/// `Δ^α` on a word of generators, multiplicatively.
pub fn delta_alpha_word(word: &[QedLetter]) -> TensorElement<QedLetter> {
    coproduct_word(&QedAlgebra, word)
}

/// `Δ^α` on a tree, through its spine word.
pub fn delta_alpha(t: &PlanarBinaryTree) -> TensorElement<QedLetter> {
    delta_alpha_word(&spine_factorize(t))
}

fn emit_comb(blocks: &[Element<QedLetter>], out: &mut Element<QedLetter>) {
    let choices: Vec<Vec<(PlanarBinaryTree, Scalar)>> = blocks
        .iter()
        .map(|b| b.iter().map(|(w, c)| (from_spine(w), c.clone())).collect())
        .collect();
    for choice in cartesian(&choices) {
        let trees: Vec<PlanarBinaryTree> = choice.iter().map(|(t, _)| t.clone()).collect();
        let coeff = choice.iter().fold(Scalar::one(), |acc, (_, c)| acc * c);
        out.add_term(vec![QedLetter(gamma(&trees).expect("k >= 1"))], coeff);
    }
}

/// Dual brace `M_{1q}(v(t)*; v(s1)*⋯v(sq)*)`.
///
/// Zero for `t = o` and `q ≥ 1`. Otherwise, with `t = γ(t1,…,tk)`, it is the
/// sum over deconcatenations `a = a(1)⋯a(k)` of the argument word into `k`
/// possibly empty blocks of `v(γ(t1* ⋆ a(1), …, tk* ⋆ a(k)))*`, where each
/// `ti*` is the dual of the spine word of `ti`.
pub fn brace_qed(t: &PlanarBinaryTree, ss: &[PlanarBinaryTree]) -> Element<QedLetter> {
    let head = QedLetter(t.clone());
    let args: Vec<QedLetter> = ss.iter().cloned().map(QedLetter).collect();
    QedAlgebra.brace(&head, &args)
}

fn brace_blockwise(head: &QedLetter, args: &[QedLetter]) -> Element<QedLetter> {
    if args.is_empty() {
        return Element::from_letter(head.clone());
    }
    let ts = match gamma_decompose(&head.0) {
        Ok(ts) => ts,
        Err(_) => return Element::zero(),
    };
    let budget = head.degree() + word_degree(args);
    let spines: Vec<Word<QedLetter>> = ts.iter().map(spine_factorize).collect();
    let mut out = Element::zero();
    for blocks in split_word(args, ts.len(), true) {
        let factors: Vec<Element<QedLetter>> = spines
            .iter()
            .zip(&blocks)
            .map(|(spine, block)| {
                assert!(word_degree(spine) + word_degree(block) < budget);
                star_words(spine, block, &QedAlgebra)
            })
            .collect();
        emit_comb(&factors, &mut out);
    }
    out
}

/// The brace with the whole product `p* = (t1*⋯tk*) ⋆ a*` deconcatenated
/// into `k` blocks. Agrees with [`brace_qed`] when `k = 1` or when every
/// `ti` is the leaf, and overcounts otherwise. Kept for comparison.
pub fn brace_qed_concatenated(t: &PlanarBinaryTree, ss: &[PlanarBinaryTree]) -> Element<QedLetter> {
    let args: Vec<QedLetter> = ss.iter().cloned().map(QedLetter).collect();
    if args.is_empty() {
        return Element::from_letter(QedLetter(t.clone()));
    }
    let ts = match gamma_decompose(t) {
        Ok(ts) => ts,
        Err(_) => return Element::zero(),
    };
    let concatenated: Word<QedLetter> = ts.iter().flat_map(spine_factorize).collect();
    let p = star_words(&concatenated, &args, &QedAlgebra);
    let mut out = Element::zero();
    for (w, c) in p.iter() {
        for blocks in split_word(w, ts.len(), true) {
            let trees: Vec<PlanarBinaryTree> = blocks.iter().map(|b| from_spine(b)).collect();
            out.add_term(vec![QedLetter(gamma(&trees).expect("k >= 1"))], c.clone());
        }
    }
    out
}

/// The QED algebra: generators `v(t)` for all planar binary trees `t`.
#[derive(Debug, Clone, Copy, Default)]
pub struct QedAlgebra;

impl Alphabet for QedAlgebra {
    type Letter = QedLetter;

    fn generators_of_degree(&self, degree: usize) -> Vec<QedLetter> {
        if degree == 0 {
            return Vec::new();
        }
        PlanarBinaryTree::all_of_size(degree - 1).into_iter().map(QedLetter).collect()
    }
}

impl BraceSystem for QedAlgebra {
    fn brace(&self, head: &QedLetter, args: &[QedLetter]) -> Element<QedLetter> {
        brace_blockwise(head, args)
    }
}

impl CoproductSystem for QedAlgebra {
    fn coproduct(&self, generator: &QedLetter) -> TensorElement<QedLetter> {
        delta_alpha_generator(generator)
    }
}
