//! The noncommutative Pinter renormalization algebra `T(T̄(B))` over a
//! graded bialgebra `B`.
//!
//! Generators are nonempty tuples `(x1,…,xn)` of basis elements of `B`. The
//! coproduct `Δ^H` combines reduced deconcatenation, the coproduct `δ` of `B`
//! in each slot, and the product of `B` inside each block. The dual brace
//! works blockwise in the dual bialgebra `B*`, whose product and coproduct
//! are the transposes of those of `B`.
//!
//! `Δ^H` as defined on `T(T̄(B))` has no `1 ⊗ v` or `v ⊗ 1` terms. Both appear
//! once the grouplike tuple `(1_B)` is identified with the empty word, and
//! this quotient is the bialgebra the brace system here is dual to: the
//! generators exclude `(1_B)`, [`delta_h_reduced`] is the coproduct, and
//! [`brace_pinter`] pads the arguments with `(1_B)*` in every way.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::combinat::{binomial, cartesian, subsets};
use crate::engine::{Alphabet, BraceSystem, CoproductSystem};
use crate::linear::{split_word, Element, Letter, Scalar, TensorElement, Word};
use crate::{Error, Result};

/// Sparse combination of basis elements.
pub type Combination<B> = Vec<(B, Scalar)>;

/// A graded bialgebra given by structure constants on a fixed basis. The
/// basis letter's degree is its grading in `B`.
pub trait Bialgebra {
    type Basis: Letter;

    /// Basis elements of degree `d`; finite for every `d`.
    fn basis_of_degree(&self, d: usize) -> Vec<Self::Basis>;

    /// Largest degree with nonzero basis, if `B` is finite dimensional.
    fn max_degree(&self) -> Option<usize>;

    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> Combination<Self::Basis>;

    fn coproduct(&self, a: &Self::Basis) -> Vec<(Self::Basis, Self::Basis, Scalar)>;

    fn unit(&self) -> Self::Basis;

    fn counit(&self, a: &Self::Basis) -> Scalar;

    /// `x*·y*`, the transpose of `δ`.
    fn dual_product(&self, x: &Self::Basis, y: &Self::Basis) -> Combination<Self::Basis> {
        let mut out = Vec::new();
        for z in self.basis_of_degree(x.degree() + y.degree()) {
            let c: Scalar = self
                .coproduct(&z)
                .into_iter()
                .filter(|(l, r, _)| l == x && r == y)
                .map(|(_, _, c)| c)
                .fold(Scalar::zero(), |acc, c| acc + c);
            if !c.is_zero() {
                out.push((z, c));
            }
        }
        out
    }

    /// `δ*(c*)`, the transpose of the product.
    fn dual_coproduct(&self, c: &Self::Basis) -> Vec<(Self::Basis, Self::Basis, Scalar)> {
        let d = c.degree();
        let mut out = Vec::new();
        for da in 0..=d {
            for a in self.basis_of_degree(da) {
                for b in self.basis_of_degree(d - da) {
                    let k: Scalar = self
                        .product(&a, &b)
                        .into_iter()
                        .filter(|(z, _)| z == c)
                        .map(|(_, k)| k)
                        .fold(Scalar::zero(), |acc, k| acc + k);
                    if !k.is_zero() {
                        out.push((a.clone(), b, k));
                    }
                }
            }
        }
        out
    }
}

/// Product of a sequence of basis elements in `B`; the unit for an empty one.
pub fn product_many<B: Bialgebra>(bialg: &B, xs: &[B::Basis]) -> Combination<B::Basis> {
    let mut acc: BTreeMap<B::Basis, Scalar> = BTreeMap::new();
    acc.insert(bialg.unit(), Scalar::one());
    for x in xs {
        let mut next: BTreeMap<B::Basis, Scalar> = BTreeMap::new();
        for (a, c) in &acc {
            for (z, k) in bialg.product(a, x) {
                *next.entry(z).or_insert_with(Scalar::zero) += c * k;
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc.into_iter().collect()
}

/// `(δ*)^{k-1}(x*)` as a list of `k`-tuples; `k = 1` returns `x*` itself.
pub fn iterated_dual_coproduct<B: Bialgebra>(bialg: &B, x: &B::Basis, k: usize) -> Vec<(Vec<B::Basis>, Scalar)> {
    assert!(k >= 1, "iterated coproduct needs at least one leg");
    let mut acc = vec![(vec![x.clone()], Scalar::one())];
    for _ in 1..k {
        let mut next = Vec::new();
        for (legs, c) in &acc {
            let (last, init) = legs.split_last().expect("nonempty");
            for (a, b, k) in bialg.dual_coproduct(last) {
                let mut l = init.to_vec();
                l.push(a);
                l.push(b);
                next.push((l, c * &k));
            }
        }
        acc = next;
    }
    acc
}

/// Verifies the bialgebra axioms and the grading on all basis elements up to
/// degree `bound`.
pub fn check_bialgebra<B: Bialgebra>(bialg: &B, bound: usize) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidBialgebra(msg));
    let top = bialg.max_degree().map_or(bound, |m| m.min(bound));
    let basis: Vec<B::Basis> = (0..=top).flat_map(|d| bialg.basis_of_degree(d)).collect();
    let unit = bialg.unit();
    if unit.degree() != 0 {
        return bad(format!("unit {unit} has degree {}", unit.degree()));
    }
    let as_map = |c: Combination<B::Basis>| -> BTreeMap<B::Basis, Scalar> {
        let mut m = BTreeMap::new();
        for (z, k) in c {
            *m.entry(z).or_insert_with(Scalar::zero) += k;
        }
        m.retain(|_, k: &mut Scalar| !k.is_zero());
        m
    };
    let pair_map = |c: Vec<(B::Basis, B::Basis, Scalar)>| -> BTreeMap<(B::Basis, B::Basis), Scalar> {
        let mut m = BTreeMap::new();
        for (a, b, k) in c {
            *m.entry((a, b)).or_insert_with(Scalar::zero) += k;
        }
        m.retain(|_, k: &mut Scalar| !k.is_zero());
        m
    };
    let single = |x: &B::Basis| -> BTreeMap<B::Basis, Scalar> { as_map(vec![(x.clone(), Scalar::one())]) };

    for x in &basis {
        if as_map(bialg.product(&unit, x)) != single(x) || as_map(bialg.product(x, &unit)) != single(x) {
            return bad(format!("unit law fails on {x}"));
        }
        let cop = bialg.coproduct(x);
        for (a, b, _) in &cop {
            if a.degree() + b.degree() != x.degree() {
                return bad(format!("coproduct of {x} is not graded"));
            }
        }
        // counit laws
        let mut left: BTreeMap<B::Basis, Scalar> = BTreeMap::new();
        let mut right: BTreeMap<B::Basis, Scalar> = BTreeMap::new();
        for (a, b, k) in &cop {
            *left.entry(b.clone()).or_insert_with(Scalar::zero) += bialg.counit(a) * k;
            *right.entry(a.clone()).or_insert_with(Scalar::zero) += bialg.counit(b) * k;
        }
        left.retain(|_, k| !k.is_zero());
        right.retain(|_, k| !k.is_zero());
        if left != single(x) || right != single(x) {
            return bad(format!("counit law fails on {x}"));
        }
        // coassociativity
        let mut lhs: BTreeMap<(B::Basis, B::Basis, B::Basis), Scalar> = BTreeMap::new();
        let mut rhs: BTreeMap<(B::Basis, B::Basis, B::Basis), Scalar> = BTreeMap::new();
        for (a, b, k) in &cop {
            for (a1, a2, k1) in bialg.coproduct(a) {
                *lhs.entry((a1, a2, b.clone())).or_insert_with(Scalar::zero) += k * &k1;
            }
            for (b1, b2, k2) in bialg.coproduct(b) {
                *rhs.entry((a.clone(), b1, b2)).or_insert_with(Scalar::zero) += k * &k2;
            }
        }
        lhs.retain(|_, k| !k.is_zero());
        rhs.retain(|_, k| !k.is_zero());
        if lhs != rhs {
            return bad(format!("coproduct is not coassociative on {x}"));
        }
    }
    let unit_cop = pair_map(bialg.coproduct(&unit));
    if unit_cop != pair_map(vec![(unit.clone(), unit.clone(), Scalar::one())]) || !bialg.counit(&unit).is_one() {
        return bad(format!("unit {unit} is not grouplike"));
    }
    for x in &basis {
        for y in &basis {
            let xy = bialg.product(x, y);
            for (z, _) in &xy {
                if z.degree() != x.degree() + y.degree() {
                    return bad(format!("product {x}·{y} is not graded"));
                }
            }
            if bialg.counit(x) * bialg.counit(y) != xy.iter().fold(Scalar::zero(), |acc, (z, k)| acc + bialg.counit(z) * k) {
                return bad(format!("counit is not multiplicative on {x}, {y}"));
            }
            for z in &basis {
                let left = product_many(bialg, &[x.clone(), y.clone(), z.clone()]);
                let mut right: BTreeMap<B::Basis, Scalar> = BTreeMap::new();
                for (yz, k) in bialg.product(y, z) {
                    for (w, k2) in bialg.product(x, &yz) {
                        *right.entry(w).or_insert_with(Scalar::zero) += &k * k2;
                    }
                }
                right.retain(|_, k| !k.is_zero());
                if as_map(left) != right {
                    return bad(format!("product is not associative on {x}, {y}, {z}"));
                }
            }
            // δ(xy) = δ(x)δ(y)
            let mut lhs: BTreeMap<(B::Basis, B::Basis), Scalar> = BTreeMap::new();
            for (z, k) in &xy {
                for (a, b, k2) in bialg.coproduct(z) {
                    *lhs.entry((a, b)).or_insert_with(Scalar::zero) += k * k2;
                }
            }
            let mut rhs: BTreeMap<(B::Basis, B::Basis), Scalar> = BTreeMap::new();
            for (x1, x2, k1) in bialg.coproduct(x) {
                for (y1, y2, k2) in bialg.coproduct(y) {
                    for (a, ka) in bialg.product(&x1, &y1) {
                        for (b, kb) in bialg.product(&x2, &y2) {
                            *rhs.entry((a.clone(), b)).or_insert_with(Scalar::zero) += &k1 * &k2 * &ka * kb;
                        }
                    }
                }
            }
            lhs.retain(|_, k| !k.is_zero());
            rhs.retain(|_, k| !k.is_zero());
            if lhs != rhs {
                return bad(format!("coproduct is not multiplicative on {x}, {y}"));
            }
        }
    }
    Ok(())
}

/// Basis element `x_n` of the polynomial bialgebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyBasis(pub u32);

impl Letter for PolyBasis {
    fn degree(&self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for PolyBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

impl fmt::Debug for PolyBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ℚ[x]` with basis `x_n`, `x_m·x_n = x_{m+n}` and
/// `δ(x_n) = Σ_i C(n,i) x_i ⊗ x_{n−i}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PolyBialgebra;

impl Bialgebra for PolyBialgebra {
    type Basis = PolyBasis;

    fn basis_of_degree(&self, d: usize) -> Vec<PolyBasis> {
        vec![PolyBasis(d as u32)]
    }

    fn max_degree(&self) -> Option<usize> {
        None
    }

    fn product(&self, a: &PolyBasis, b: &PolyBasis) -> Combination<PolyBasis> {
        vec![(PolyBasis(a.0 + b.0), Scalar::one())]
    }

    fn coproduct(&self, a: &PolyBasis) -> Vec<(PolyBasis, PolyBasis, Scalar)> {
        let n = a.0 as usize;
        (0..=n)
            .map(|i| (PolyBasis(i as u32), PolyBasis((n - i) as u32), Scalar::from_integer(binomial(n, i))))
            .collect()
    }

    fn unit(&self) -> PolyBasis {
        PolyBasis(0)
    }

    fn counit(&self, a: &PolyBasis) -> Scalar {
        if a.0 == 0 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }
}

/// Named basis element of a [`TableBialgebra`], with its degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableBasis {
    name: String,
    degree: usize,
}

impl TableBasis {
    pub fn name(&self) -> &str {
        &self.name
    }
}

impl Letter for TableBasis {
    fn degree(&self) -> usize {
        self.degree
    }
}

impl fmt::Display for TableBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Debug for TableBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A finite-dimensional bialgebra given by explicit structure constants.
#[derive(Debug, Clone)]
pub struct TableBialgebra {
    basis: Vec<TableBasis>,
    product: BTreeMap<(String, String), Vec<(String, Scalar)>>,
    coproduct: BTreeMap<String, Vec<(String, String, Scalar)>>,
    unit: String,
    counit: BTreeMap<String, Scalar>,
}

/// Raw structure constants for [`TableBialgebra::new`]. Missing products and
/// coproducts are zero; missing counit values are zero.
#[derive(Debug, Clone, Default)]
pub struct TableData {
    pub basis: Vec<(String, usize)>,
    pub product: Vec<((String, String), Vec<(String, Scalar)>)>,
    pub coproduct: Vec<(String, Vec<(String, String, Scalar)>)>,
    pub unit: String,
    pub counit: Vec<(String, Scalar)>,
}

impl TableBialgebra {
    /// Builds the bialgebra and runs [`check_bialgebra`] on it.
    pub fn new(data: TableData) -> Result<Self> {
        let names: BTreeMap<&str, usize> = data.basis.iter().map(|(n, d)| (n.as_str(), *d)).collect();
        if names.len() != data.basis.len() {
            return Err(Error::InvalidBialgebra("duplicate basis element".into()));
        }
        let known = |n: &str| -> Result<()> {
            if names.contains_key(n) {
                Ok(())
            } else {
                Err(Error::InvalidBialgebra(format!("unknown basis element {n:?}")))
            }
        };
        known(&data.unit)?;
        for ((a, b), terms) in &data.product {
            known(a)?;
            known(b)?;
            for (c, _) in terms {
                known(c)?;
            }
        }
        for (a, terms) in &data.coproduct {
            known(a)?;
            for (b, c, _) in terms {
                known(b)?;
                known(c)?;
            }
        }
        for (a, _) in &data.counit {
            known(a)?;
        }
        let table = TableBialgebra {
            basis: data.basis.iter().map(|(n, d)| TableBasis { name: n.clone(), degree: *d }).collect(),
            product: data.product.into_iter().collect(),
            coproduct: data.coproduct.into_iter().collect(),
            unit: data.unit,
            counit: data.counit.into_iter().collect(),
        };
        let top = table.basis.iter().map(|b| b.degree).max().unwrap_or(0);
        check_bialgebra(&table, top)?;
        Ok(table)
    }

    /// The monoid bialgebra `ℚ[M]`: every element grouplike of degree 0.
    /// `table[i][j]` is the index of `elements[i]·elements[j]`.
    pub fn monoid(elements: &[&str], table: &[Vec<usize>], unit: &str) -> Result<Self> {
        let n = elements.len();
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&k| k >= n)) {
            return Err(Error::InvalidBialgebra("monoid table has the wrong shape".into()));
        }
        let mut data = TableData { unit: unit.into(), ..TableData::default() };
        for (i, a) in elements.iter().enumerate() {
            data.basis.push(((*a).into(), 0));
            data.coproduct.push(((*a).into(), vec![((*a).into(), (*a).into(), Scalar::one())]));
            data.counit.push(((*a).into(), Scalar::one()));
            for (j, b) in elements.iter().enumerate() {
                data.product
                    .push((((*a).into(), (*b).into()), vec![(elements[table[i][j]].into(), Scalar::one())]));
            }
        }
        Self::new(data)
    }

    /// The group bialgebra of `ℤ/2` on `{e, g}`.
    pub fn z2() -> Self {
        Self::monoid(&["e", "g"], &[vec![0, 1], vec![1, 0]], "e").expect("Z/2 is a group")
    }

    pub fn basis(&self) -> &[TableBasis] {
        &self.basis
    }

    /// Looks up a basis element by name.
    pub fn element(&self, name: &str) -> Option<&TableBasis> {
        self.basis.iter().find(|b| b.name == name)
    }

    fn lookup(&self, name: &str) -> TableBasis {
        self.element(name).cloned().expect("validated at construction")
    }
}

impl Bialgebra for TableBialgebra {
    type Basis = TableBasis;

    fn basis_of_degree(&self, d: usize) -> Vec<TableBasis> {
        self.basis.iter().filter(|b| b.degree == d).cloned().collect()
    }

    fn max_degree(&self) -> Option<usize> {
        Some(self.basis.iter().map(|b| b.degree).max().unwrap_or(0))
    }

    fn product(&self, a: &TableBasis, b: &TableBasis) -> Combination<TableBasis> {
        self.product
            .get(&(a.name.clone(), b.name.clone()))
            .map(|terms| terms.iter().map(|(c, k)| (self.lookup(c), k.clone())).collect())
            .unwrap_or_default()
    }

    fn coproduct(&self, a: &TableBasis) -> Vec<(TableBasis, TableBasis, Scalar)> {
        self.coproduct
            .get(&a.name)
            .map(|terms| terms.iter().map(|(b, c, k)| (self.lookup(b), self.lookup(c), k.clone())).collect())
            .unwrap_or_default()
    }

    fn unit(&self) -> TableBasis {
        self.lookup(&self.unit)
    }

    fn counit(&self, a: &TableBasis) -> Scalar {
        self.counit.get(&a.name).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// A generator `(x1,…,xn)` of `T̄(B)`, `n ≥ 1`.
///
/// Its degree is the tensor length plus the total degree in `B`, so that
/// every degree slice is finite even when `B` has a degree-0 part.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PinterLetter<B>(Vec<B>);

impl<B: Letter> PinterLetter<B> {
    pub fn new(entries: Vec<B>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("a tensor generator needs at least one entry".into()));
        }
        Ok(PinterLetter(entries))
    }

    pub fn entries(&self) -> &[B] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree of the entries in `B`.
    pub fn b_degree(&self) -> usize {
        self.0.iter().map(Letter::degree).sum()
    }
}

impl<B: Letter> Letter for PinterLetter<B> {
    fn degree(&self) -> usize {
        self.len() + self.b_degree()
    }
}

impl<B: Letter> fmt::Display for PinterLetter<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl<B: Letter> fmt::Debug for PinterLetter<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splittings of a tuple into `n` nonempty consecutive blocks.
pub fn reduced_deconcat<B: Clone>(v: &[B], n: usize) -> Vec<Vec<Vec<B>>> {
    split_word(v, n, false)
}

/// `δ(x1,…,xn) = Σ (x1₍₁₎,…,xn₍₁₎) ⊗ (x1₍₂₎,…,xn₍₂₎)`.
pub fn delta_b<S: Bialgebra>(bialg: &S, v: &[S::Basis]) -> Vec<(Vec<S::Basis>, Vec<S::Basis>, Scalar)> {
    let slots: Vec<Vec<(S::Basis, S::Basis, Scalar)>> = v.iter().map(|x| bialg.coproduct(x)).collect();
    let mut acc: BTreeMap<(Vec<S::Basis>, Vec<S::Basis>), Scalar> = BTreeMap::new();
    for choice in cartesian(&slots) {
        let left = choice.iter().map(|(a, _, _)| a.clone()).collect();
        let right = choice.iter().map(|(_, b, _)| b.clone()).collect();
        let c = choice.iter().fold(Scalar::one(), |acc, (_, _, k)| acc * k);
        *acc.entry((left, right)).or_insert_with(Scalar::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((l, r), c)| (l, r, c)).collect()
}

/// `Δ^H` on a generator.
pub fn delta_h<S: Bialgebra>(bialg: &S, v: &PinterLetter<S::Basis>) -> TensorElement<PinterLetter<S::Basis>> {
    let mut out = TensorElement::zero(2);
    for n in 1..=v.len() {
        for blocks in reduced_deconcat(&v.0, n) {
            // per block: (μ of left legs, right leg, coeff)
            let per_block: Vec<Vec<(S::Basis, Vec<S::Basis>, Scalar)>> = blocks
                .iter()
                .map(|block| {
                    let mut terms = Vec::new();
                    for (left, right, c) in delta_b(bialg, block) {
                        for (m, k) in product_many(bialg, &left) {
                            terms.push((m, right.clone(), &c * k));
                        }
                    }
                    terms
                })
                .collect();
            for choice in cartesian(&per_block) {
                let head = PinterLetter(choice.iter().map(|(m, _, _)| m.clone()).collect());
                let right: Word<PinterLetter<S::Basis>> =
                    choice.iter().map(|(_, r, _)| PinterLetter(r.clone())).collect();
                let c = choice.iter().fold(Scalar::one(), |acc, (_, _, k)| acc * k);
                out.add_term(vec![vec![head], right], c);
            }
        }
    }
    out
}

/// The tuple `(1_B)`, identified with the empty word.
pub fn unit_letter<S: Bialgebra>(bialg: &S) -> PinterLetter<S::Basis> {
    PinterLetter(vec![bialg.unit()])
}

/// [`delta_h`] with `(1_B)` replaced by the empty word in both legs.
pub fn delta_h_reduced<S: Bialgebra>(bialg: &S, v: &PinterLetter<S::Basis>) -> TensorElement<PinterLetter<S::Basis>> {
    let one = unit_letter(bialg);
    let mut out = TensorElement::zero(2);
    for (legs, c) in delta_h(bialg, v).iter() {
        let reduced = legs.iter().map(|w| w.iter().filter(|l| **l != one).cloned().collect()).collect();
        out.add_term(reduced, c.clone());
    }
    out
}

/// Blockwise brace `M_{1q}((x¹,…,xⁿ)*; u1*⋯uq*)`: zero unless `n = q`;
/// otherwise block `i` is `(xⁱ₍₁₎·y¹, …, xⁱ₍ₖ₎·yᵏ)` with `ui = (y¹,…,yᵏ)`, the
/// legs of `xⁱ` taken from the iterated coproduct of `B*` and the products
/// in `B*`.
///
/// This is the brace dual to the unreduced [`delta_h`]. It fails the brace
/// relation, see [`brace_pinter`].
pub fn brace_pinter_blockwise<S: Bialgebra>(
    bialg: &S,
    v: &PinterLetter<S::Basis>,
    us: &[PinterLetter<S::Basis>],
) -> Element<PinterLetter<S::Basis>> {
    if us.is_empty() {
        return Element::from_letter(v.clone());
    }
    if v.len() != us.len() {
        return Element::zero();
    }
    let blocks: Vec<Vec<(Vec<S::Basis>, Scalar)>> = v
        .0
        .iter()
        .zip(us)
        .map(|(x, u)| {
            let mut terms = Vec::new();
            for (legs, c) in iterated_dual_coproduct(bialg, x, u.len()) {
                let slots: Vec<Combination<S::Basis>> =
                    legs.iter().zip(&u.0).map(|(l, y)| bialg.dual_product(l, y)).collect();
                for choice in cartesian(&slots) {
                    let entries = choice.iter().map(|(z, _)| z.clone()).collect();
                    let k = choice.iter().fold(c.clone(), |acc, (_, k)| acc * k);
                    terms.push((entries, k));
                }
            }
            terms
        })
        .collect();
    let mut out = Element::zero();
    for choice in cartesian(&blocks) {
        let entries: Vec<S::Basis> = choice.iter().flat_map(|(e, _)| e.iter().cloned()).collect();
        let c = choice.iter().fold(Scalar::one(), |acc, (_, k)| acc * k);
        out.add_term(vec![PinterLetter(entries)], c);
    }
    out
}

/// Dual brace of the reduced coproduct: for `q ≤ n`, the sum over the ways
/// of placing `u1,…,uq` in order into `q` of the `n` slots of the head, with
/// `(1_B)` in the remaining slots, of [`brace_pinter_blockwise`]. Zero for
/// `q > n`; agrees with the blockwise form when `q = n`.
pub fn brace_pinter<S: Bialgebra>(
    bialg: &S,
    v: &PinterLetter<S::Basis>,
    us: &[PinterLetter<S::Basis>],
) -> Element<PinterLetter<S::Basis>> {
    if us.is_empty() {
        return Element::from_letter(v.clone());
    }
    let one = unit_letter(bialg);
    let mut out = Element::zero();
    for slots in subsets(v.len(), us.len()) {
        let mut padded = vec![one.clone(); v.len()];
        for (&i, u) in slots.iter().zip(us) {
            padded[i] = u.clone();
        }
        out += brace_pinter_blockwise(bialg, v, &padded);
    }
    out
}

/// The Pinter algebra over a bialgebra `B`.
#[derive(Debug, Clone, Default)]
pub struct PinterAlgebra<S> {
    bialgebra: S,
}

impl<S: Bialgebra> PinterAlgebra<S> {
    pub fn new(bialgebra: S) -> Self {
        PinterAlgebra { bialgebra }
    }

    pub fn bialgebra(&self) -> &S {
        &self.bialgebra
    }

    /// Generators of tensor length `len` and total `B`-degree `b_degree`,
    /// leaving out `(1_B)`.
    pub fn generators_of_bidegree(&self, len: usize, b_degree: usize) -> Vec<PinterLetter<S::Basis>> {
        if len == 0 {
            return Vec::new();
        }
        let one = unit_letter(&self.bialgebra);
        let mut out = Vec::new();
        for degrees in crate::combinat::weak_compositions(b_degree, len) {
            let slots: Vec<Vec<S::Basis>> = degrees.iter().map(|&d| self.bialgebra.basis_of_degree(d)).collect();
            out.extend(cartesian(&slots).into_iter().map(PinterLetter).filter(|l| *l != one));
        }
        out
    }
}

impl<S: Bialgebra> Alphabet for PinterAlgebra<S> {
    type Letter = PinterLetter<S::Basis>;

    fn generators_of_degree(&self, degree: usize) -> Vec<PinterLetter<S::Basis>> {
        (1..=degree)
            .flat_map(|len| self.generators_of_bidegree(len, degree - len))
            .collect()
    }
}

impl<S: Bialgebra> BraceSystem for PinterAlgebra<S> {
    fn brace(&self, head: &PinterLetter<S::Basis>, args: &[PinterLetter<S::Basis>]) -> Element<PinterLetter<S::Basis>> {
        brace_pinter(&self.bialgebra, head, args)
    }
}

impl<S: Bialgebra> CoproductSystem for PinterAlgebra<S> {
    fn coproduct(&self, generator: &PinterLetter<S::Basis>) -> TensorElement<PinterLetter<S::Basis>> {
        delta_h_reduced(&self.bialgebra, generator)
    }

    /// `Δ^H` preserves `B`-degree and `len − 1` summed over letters, so
    /// only the slice with length `len(head) + Σ (len(ui) − 1)` and
    /// `B`-degree `deg(head) + Σ deg(ui)` can contribute.
    fn oracle_candidates(
        &self,
        head: &PinterLetter<S::Basis>,
        args: &[PinterLetter<S::Basis>],
    ) -> Vec<PinterLetter<S::Basis>> {
        let len = head.len() + args.iter().map(|u| u.len() - 1).sum::<usize>();
        let b_degree = head.b_degree() + args.iter().map(PinterLetter::b_degree).sum::<usize>();
        self.generators_of_bidegree(len, b_degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{check_brace_relation, dual_brace_oracle, words_of_degree};
    use crate::linear::int;

    fn p(ns: &[u32]) -> PinterLetter<PolyBasis> {
        PinterLetter(ns.iter().map(|&n| PolyBasis(n)).collect())
    }

    #[test]
    fn builtin_bialgebras_pass_self_test() {
        check_bialgebra(&PolyBialgebra, 6).unwrap();
        let z2 = TableBialgebra::z2();
        check_bialgebra(&z2, 0).unwrap();
        assert_eq!(z2.basis().len(), 2);
    }

    #[test]
    fn broken_table_is_rejected() {
        // not associative: a·a = e, but nothing else defined
        let data = TableData {
            basis: vec![("e".into(), 0), ("a".into(), 0)],
            product: vec![(("e".into(), "e".into()), vec![("e".into(), int(1))])],
            coproduct: vec![],
            unit: "e".into(),
            counit: vec![],
        };
        assert!(matches!(TableBialgebra::new(data), Err(Error::InvalidBialgebra(_))));
        assert!(TableBialgebra::monoid(&["e"], &[vec![3]], "e").is_err());
    }

    #[test]
    fn poly_duals() {
        let b = PolyBialgebra;
        assert_eq!(b.dual_product(&PolyBasis(1), &PolyBasis(1)), vec![(PolyBasis(2), int(2))]);
        assert_eq!(b.dual_product(&PolyBasis(2), &PolyBasis(1)), vec![(PolyBasis(3), int(3))]);
        let cop = b.dual_coproduct(&PolyBasis(2));
        assert_eq!(cop.len(), 3);
        assert!(cop.iter().all(|(_, _, k)| *k == int(1)));
        assert_eq!(iterated_dual_coproduct(&b, &PolyBasis(2), 3).len(), 6);
        assert_eq!(iterated_dual_coproduct(&b, &PolyBasis(2), 1), vec![(vec![PolyBasis(2)], int(1))]);
    }

    #[test]
    fn reduced_deconcat_examples() {
        let s = ["x", "y", "z"];
        assert_eq!(
            reduced_deconcat(&s, 2),
            vec![vec![vec!["x"], vec!["y", "z"]], vec![vec!["x", "y"], vec!["z"]]]
        );
        assert!(reduced_deconcat(&["x"], 2).is_empty());
    }

    #[test]
    fn delta_b_example() {
        let terms = delta_b(&PolyBialgebra, &[PolyBasis(1), PolyBasis(1)]);
        let find = |l: &[u32], r: &[u32]| {
            terms
                .iter()
                .find(|(a, b, _)| a.iter().map(|x| x.0).eq(l.iter().copied()) && b.iter().map(|x| x.0).eq(r.iter().copied()))
                .map(|(_, _, c)| c.clone())
        };
        assert_eq!(find(&[1, 1], &[0, 0]), Some(int(1)));
        assert_eq!(terms.len(), 4);
    }

    #[test]
    fn delta_h_is_right_sided_and_finite() {
        let b = PolyBialgebra;
        let v = p(&[1, 0, 2]);
        let d = delta_h(&b, &v);
        for (legs, _) in d.iter() {
            assert_eq!(legs[0].len(), 1);
            assert!(legs[0][0].len() <= v.len());
            assert_eq!(legs[0][0].len(), legs[1].len());
        }
    }

    #[test]
    fn brace_examples_in_poly() {
        let b = PolyBialgebra;
        assert_eq!(brace_pinter(&b, &p(&[1]), &[p(&[1])]), Element::term(vec![p(&[2])], int(2)));
        assert!(brace_pinter(&b, &p(&[1, 1]), &[p(&[1]), p(&[1]), p(&[1])]).is_zero());
        assert_eq!(brace_pinter(&b, &p(&[1, 2]), &[]), Element::from_letter(p(&[1, 2])));
    }

    #[test]
    fn padding_fills_unused_slots() {
        let b = PolyBialgebra;
        // (x1,x0)* with one argument (x1)*: either slot takes it
        let got = brace_pinter(&b, &p(&[1, 0]), &[p(&[1])]);
        let expected = Element::term(vec![p(&[2, 0])], int(2)) + Element::from_letter(p(&[1, 1]));
        assert_eq!(got, expected);
        assert!(brace_pinter_blockwise(&b, &p(&[1, 0]), &[p(&[1])]).is_zero());
    }

    #[test]
    fn blockwise_form_breaks_brace_relation() {
        let b = PolyBialgebra;
        let sys = PinterAlgebra::new(b);
        let (x, y, z) = (p(&[1, 0]), vec![p(&[0, 0])], vec![p(&[1])]);
        assert!(brace_pinter_blockwise(&b, &x, &y).is_zero());
        assert!(!brace_pinter_blockwise(&b, &x, &[y[0].clone(), z[0].clone()]).is_zero());
        assert!(check_brace_relation(&x, &y, &z, &sys).passed());
    }

    #[test]
    fn brace_relation_exhaustive_small() {
        let sys = PinterAlgebra::new(PolyBialgebra);
        for dx in 1..=3 {
            for x in sys.generators_of_degree(dx) {
                for dy in 0..=4 - dx {
                    for dz in 0..=4 - dx - dy {
                        for y in words_of_degree(&sys, dy) {
                            for z in words_of_degree(&sys, dz) {
                                let r = check_brace_relation(&x, &y, &z, &sys);
                                assert!(r.passed(), "{:?}", r.counterexample);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_coproduct_is_unital() {
        let b = PolyBialgebra;
        for v in [p(&[2]), p(&[1, 0]), p(&[0, 0]), p(&[1, 0, 2])] {
            let d = delta_h_reduced(&b, &v);
            assert_eq!(d.coefficient(&[vec![], vec![v.clone()]]), int(1));
            assert_eq!(d.coefficient(&[vec![v.clone()], vec![]]), int(1));
        }
    }

    #[test]
    fn oracle_agreement_poly_small() {
        let sys = PinterAlgebra::new(PolyBialgebra);
        for total in 2..=5 {
            for hd in 1..total {
                for head in sys.generators_of_degree(hd) {
                    for args in words_of_degree(&sys, total - hd) {
                        let oracle = dual_brace_oracle(&head, &args, &sys, 16).unwrap();
                        assert_eq!(sys.brace(&head, &args), oracle, "{head} ; {args:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_agreement_z2_small() {
        let sys = PinterAlgebra::new(TableBialgebra::z2());
        for total in 2..=4 {
            for hd in 1..total {
                for head in sys.generators_of_degree(hd) {
                    for args in words_of_degree(&sys, total - hd) {
                        let oracle = dual_brace_oracle(&head, &args, &sys, 16).unwrap();
                        assert_eq!(sys.brace(&head, &args), oracle, "{head} ; {args:?}");
                    }
                }
            }
        }
    }
}
