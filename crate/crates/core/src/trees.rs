//! The free brace algebra on decorated planar rooted trees.
//!
//! Trees are letters of the tensor algebra of forests. The brace is defined
//! recursively by `M(B₊ˣ(f1); f2) = B₊ˣ(f1 ⋆ f2)`, where `⋆` is the product
//! induced by the same brace. [`enumerate_graftings`] computes the same brace
//! by direct enumeration of order-preserving graftings.
//!
//! The lifting `ι : T(R) → T(R^𝒯)` sends a word to a forest of one-vertex
//! trees, and `μ` collapses a forest back with the brace of a client system.
//! Together they give `X ⋆ Y = μ(ι(X) ⋆ ι(Y))`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::combinat::multichoose;
use crate::engine::{star_recursive, star_words, Alphabet, BraceSystem};
use crate::linear::{Element, Letter, Sym};

/// Planar rooted tree with one decoration per vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedTree<D> {
    decoration: D,
    children: Vec<DecoratedTree<D>>,
}

/// Ordered sequence of trees; empty is the unit.
pub type Forest<D> = Vec<DecoratedTree<D>>;

impl<D: Letter> DecoratedTree<D> {
    /// One-vertex tree `•x`.
    pub fn leaf(x: D) -> Self {
        DecoratedTree { decoration: x, children: Vec::new() }
    }

    pub fn decoration(&self) -> &D {
        &self.decoration
    }

    pub fn children(&self) -> &[DecoratedTree<D>] {
        &self.children
    }

    /// Inverse of [`b_plus`].
    pub fn root_decomposition(&self) -> (&D, &[DecoratedTree<D>]) {
        (&self.decoration, &self.children)
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(Self::vertex_count).sum::<usize>()
    }

    /// Decorations in preorder.
    pub fn decorations(&self) -> Vec<&D> {
        let mut out = vec![&self.decoration];
        for c in &self.children {
            out.extend(c.decorations());
        }
        out
    }

    /// Replaces decorations in preorder by the given sequence.
    pub fn relabel<E: Letter>(&self, labels: &mut impl Iterator<Item = E>) -> DecoratedTree<E> {
        let decoration = labels.next().expect("not enough labels");
        DecoratedTree {
            decoration,
            children: self.children.iter().map(|c| c.relabel(labels)).collect(),
        }
    }
}

impl<D: Letter> Letter for DecoratedTree<D> {
    fn degree(&self) -> usize {
        self.decoration.degree() + self.children.iter().map(Letter::degree).sum::<usize>()
    }
}

impl<D: Letter> fmt::Display for DecoratedTree<D> {
    /// `x[c1,c2,…]`, a leaf is just `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decoration)?;
        if !self.children.is_empty() {
            f.write_str("[")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl<D: Letter> fmt::Debug for DecoratedTree<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `B₊ˣ(f)`: joins the trees of `f`, in order, to a new root decorated `x`.
pub fn b_plus<D: Letter>(x: D, f: Forest<D>) -> DecoratedTree<D> {
    DecoratedTree { decoration: x, children: f }
}

/// The free brace algebra on trees decorated by `D`. The alphabet, used only
/// for generator enumeration, is a finite list of decorations.
#[derive(Debug, Clone)]
pub struct FreeTreeBrace<D> {
    decorations: Vec<D>,
}

impl<D: Letter> Default for FreeTreeBrace<D> {
    fn default() -> Self {
        FreeTreeBrace { decorations: Vec::new() }
    }
}

impl<D: Letter> FreeTreeBrace<D> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_decorations(decorations: Vec<D>) -> Self {
        FreeTreeBrace { decorations }
    }

    pub fn decorations(&self) -> &[D] {
        &self.decorations
    }

    fn forests_of_degree(&self, degree: usize) -> Vec<Forest<D>> {
        if degree == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in 1..=degree {
            let heads = self.generators_of_degree(first);
            if heads.is_empty() {
                continue;
            }
            let tails = self.forests_of_degree(degree - first);
            for h in &heads {
                for t in &tails {
                    let mut f = vec![h.clone()];
                    f.extend(t.iter().cloned());
                    out.push(f);
                }
            }
        }
        out
    }
}

impl<D: Letter> Alphabet for FreeTreeBrace<D> {
    type Letter = DecoratedTree<D>;

    fn generators_of_degree(&self, degree: usize) -> Vec<DecoratedTree<D>> {
        let mut out = Vec::new();
        for x in &self.decorations {
            let d = x.degree();
            if d == 0 || d > degree {
                continue;
            }
            for f in self.forests_of_degree(degree - d) {
                out.push(b_plus(x.clone(), f));
            }
        }
        out
    }
}

impl<D: Letter> BraceSystem for FreeTreeBrace<D> {
    fn brace(&self, head: &DecoratedTree<D>, args: &[DecoratedTree<D>]) -> Element<DecoratedTree<D>> {
        if args.is_empty() {
            return Element::from_letter(head.clone());
        }
        let inner = star_words(&head.children, args, self);
        inner.map_linear(|f| Element::from_letter(b_plus(head.decoration.clone(), f.to_vec())))
    }
}

/// `M(t; f)` in the free brace algebra.
pub fn brace_trees<D: Letter>(t: &DecoratedTree<D>, f: &[DecoratedTree<D>]) -> Element<DecoratedTree<D>> {
    FreeTreeBrace::new().brace(t, f)
}

/// `f1 ⋆ f2` on forests.
pub fn star_forests<D: Letter>(f1: &[DecoratedTree<D>], f2: &[DecoratedTree<D>]) -> Element<DecoratedTree<D>> {
    star_words(f1, f2, &FreeTreeBrace::new())
}

/// Sum of all graftings of the trees of `f` onto the vertices of `t` that
/// keep the trees of `f` in their left-to-right order.
///
/// An attachment point is a vertex together with a gap among its current
/// children. Gaps are numbered in planar order: for a vertex with children
/// `c1…cr` the sequence is `gap0, slots(c1), gap1, …, slots(cr), gapr`. The
/// trees of `f` are assigned to gaps by every non-decreasing sequence, so a
/// tree of `t` with `n` vertices has `2n − 1` gaps.
pub fn enumerate_graftings<D: Letter>(t: &DecoratedTree<D>, f: &[DecoratedTree<D>]) -> Element<DecoratedTree<D>> {
    let slots = 2 * t.vertex_count() - 1;
    let mut out = Element::zero();
    for assignment in multichoose(slots, f.len()) {
        let mut groups: Vec<Vec<DecoratedTree<D>>> = vec![Vec::new(); slots];
        for (tree, &slot) in f.iter().zip(&assignment) {
            groups[slot].push(tree.clone());
        }
        let mut next = 0;
        let grafted = rebuild_with_gaps(t, &mut groups, &mut next);
        debug_assert_eq!(next, slots);
        out.add_term(vec![grafted], crate::linear::int(1));
    }
    out
}

fn rebuild_with_gaps<D: Letter>(
    t: &DecoratedTree<D>,
    groups: &mut [Vec<DecoratedTree<D>>],
    next: &mut usize,
) -> DecoratedTree<D> {
    let mut children = Vec::new();
    children.append(&mut groups[*next]);
    *next += 1;
    for c in &t.children {
        children.push(rebuild_with_gaps(c, groups, next));
        children.append(&mut groups[*next]);
        *next += 1;
    }
    b_plus(t.decoration.clone(), children)
}

/// `ι(x1⋯xn) = •x1 ⋯ •xn`.
pub fn iota<L: Letter>(word: &[L]) -> Forest<L> {
    word.iter().cloned().map(DecoratedTree::leaf).collect()
}

/// `μ` on a forest: multiplicative, with `μ(B₊ˣ(s)) = M_{1q}(x; μ(s))`.
pub fn mu<S: BraceSystem>(forest: &[DecoratedTree<S::Letter>], sys: &S) -> Element<S::Letter> {
    forest
        .iter()
        .fold(Element::one(), |acc, t| acc.concat(&mu_tree(t, sys)))
}

fn mu_tree<S: BraceSystem>(t: &DecoratedTree<S::Letter>, sys: &S) -> Element<S::Letter> {
    mu(&t.children, sys).map_linear(|w| sys.brace(&t.decoration, w))
}

/// Linear extension of [`mu`].
pub fn mu_element<S: BraceSystem>(e: &Element<DecoratedTree<S::Letter>>, sys: &S) -> Element<S::Letter> {
    e.map_linear(|f| mu(f, sys))
}

/// `X ⋆ Y` computed as `μ(ι(X) ⋆ ι(Y))`.
pub fn star_via_trees<S: BraceSystem>(x: &[S::Letter], y: &[S::Letter], sys: &S) -> Element<S::Letter> {
    mu_element(&star_forests(&iota(x), &iota(y)), sys)
}

/// Linear extension of [`star_via_trees`].
pub fn star_via_trees_element<S: BraceSystem>(
    a: &Element<S::Letter>,
    b: &Element<S::Letter>,
    sys: &S,
) -> Element<S::Letter> {
    let lifted_a = a.map_linear(|w| Element::from_word(iota(w)));
    let lifted_b = b.map_linear(|w| Element::from_word(iota(w)));
    mu_element(&star_recursive(&lifted_a, &lifted_b, &FreeTreeBrace::new()), sys)
}

/// Planar rooted tree shapes with `n` vertices, every vertex decorated `x`.
pub fn shapes(n: usize) -> Vec<DecoratedTree<Sym>> {
    FreeTreeBrace::with_decorations(vec![Sym::new("x")]).generators_of_degree(n)
}

/// Planar forests with `n` vertices in total, every vertex decorated `x`.
pub fn forest_shapes(n: usize) -> Vec<Forest<Sym>> {
    FreeTreeBrace::with_decorations(vec![Sym::new("x")]).forests_of_degree(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;

    fn leaf(n: &str) -> DecoratedTree<Sym> {
        DecoratedTree::leaf(Sym::new(n))
    }

    fn node(n: &str, children: Vec<DecoratedTree<Sym>>) -> DecoratedTree<Sym> {
        b_plus(Sym::new(n), children)
    }

    fn trees(ts: Vec<DecoratedTree<Sym>>) -> Element<DecoratedTree<Sym>> {
        ts.into_iter().map(|t| (vec![t], int(1))).collect()
    }

    fn forests(fs: Vec<Vec<DecoratedTree<Sym>>>) -> Element<DecoratedTree<Sym>> {
        fs.into_iter().map(|f| (f, int(1))).collect()
    }

    #[test]
    fn b_plus_examples() {
        assert_eq!(b_plus(Sym::new("x"), vec![]), leaf("x"));
        let t = b_plus(Sym::new("x"), vec![leaf("y"), node("u", vec![leaf("v")])]);
        assert_eq!(alloc::format!("{t}"), "x[y,u[v]]");
        assert_eq!(t.vertex_count(), 4);
        let (x, f) = t.root_decomposition();
        assert_eq!(x, &Sym::new("x"));
        assert_eq!(f, &[leaf("y"), node("u", vec![leaf("v")])][..]);
    }

    #[test]
    fn single_graft() {
        assert_eq!(brace_trees(&leaf("x"), &[leaf("y")]), trees(vec![node("x", vec![leaf("y")])]));
        assert_eq!(brace_trees(&leaf("x"), &[]), trees(vec![leaf("x")]));
    }

    #[test]
    fn six_term_grafting_display() {
        let t = node("x", vec![leaf("y")]);
        let f = [leaf("u"), leaf("v")];
        let expected = trees(vec![
            node("x", vec![leaf("u"), leaf("v"), leaf("y")]),
            node("x", vec![leaf("u"), node("y", vec![leaf("v")])]),
            node("x", vec![leaf("u"), leaf("y"), leaf("v")]),
            node("x", vec![node("y", vec![leaf("u"), leaf("v")])]),
            node("x", vec![node("y", vec![leaf("u")]), leaf("v")]),
            node("x", vec![leaf("y"), leaf("u"), leaf("v")]),
        ]);
        let got = brace_trees(&t, &f);
        assert_eq!(got, expected);
        assert!(got.iter().all(|(_, c)| *c == int(1)));
        assert_eq!(enumerate_graftings(&t, &f), expected);
    }

    #[test]
    fn leaf_star_leaf() {
        let expected = forests(vec![
            vec![node("x", vec![leaf("y")])],
            vec![leaf("x"), leaf("y")],
            vec![leaf("y"), leaf("x")],
        ]);
        assert_eq!(star_forests(&[leaf("x")], &[leaf("y")]), expected);
    }

    #[test]
    fn leaf_star_forest_display() {
        let vw = node("v", vec![leaf("w")]);
        let expected = forests(vec![
            vec![leaf("x"), leaf("u"), vw.clone()],
            vec![leaf("u"), leaf("x"), vw.clone()],
            vec![leaf("u"), vw.clone(), leaf("x")],
            vec![node("x", vec![leaf("u")]), vw.clone()],
            vec![node("x", vec![leaf("u"), vw.clone()])],
            vec![leaf("u"), node("x", vec![vw.clone()])],
        ]);
        assert_eq!(star_forests(&[leaf("x")], &[leaf("u"), vw]), expected);
        assert_eq!(star_forests(&[], &[leaf("u")]), forests(vec![vec![leaf("u")]]));
    }

    #[test]
    fn grafting_two_leaves_on_a_vertex() {
        let f = [leaf("u"), leaf("v")];
        let expected = trees(vec![node("x", vec![leaf("u"), leaf("v")])]);
        assert_eq!(brace_trees(&leaf("x"), &f), expected);
        assert_eq!(enumerate_graftings(&leaf("x"), &f), expected);
        assert_eq!(enumerate_graftings(&leaf("x"), &[leaf("s")]).len(), 1);
    }

    #[test]
    fn iota_basics() {
        assert!(iota::<Sym>(&[]).is_empty());
        assert_eq!(iota(&[Sym::new("x")]), vec![leaf("x")]);
        assert_eq!(iota(&[Sym::new("x"), Sym::new("y")]), vec![leaf("x"), leaf("y")]);
    }

    #[test]
    fn shape_counts_are_catalan() {
        let counts: Vec<usize> = (1..=6).map(|n| shapes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
        let counts: Vec<usize> = (0..=5).map(|n| forest_shapes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
    }
}
