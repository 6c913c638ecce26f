//! Per-algebra front ends: letter syntax, LaTeX, and the optional primal
//! coproduct and oracle used by the CLI and the verifier.

use cha_core::engine::{coproduct_word, dual_brace_oracle, words_of_degree, BraceSystem};
use cha_core::fdb::{FaaDiBruno, FdbLetter};
use cha_core::linear::Sym;
use cha_core::pinter::{unit_letter, Bialgebra, PinterAlgebra, PinterLetter, PolyBasis, PolyBialgebra, TableBasis, TableBialgebra};
use cha_core::qed::{spine_factorize, PlanarBinaryTree, QedAlgebra, QedLetter};
use cha_core::trees::{b_plus, DecoratedTree, FreeTreeBrace};
use cha_core::{Element, Letter, TensorElement, Word};

use crate::parse::{identifier, Cursor, ParseError};

/// A brace system with a concrete text syntax.
pub trait Front: BraceSystem {
    /// Name used by `-a`.
    fn name(&self) -> &'static str;

    /// Parses one factor of a word. Most grammars yield one letter; a bare
    /// QED tree yields its spine word.
    fn parse_factor(&self, cur: &mut Cursor<'_>) -> Result<Word<Self::Letter>, ParseError>;

    fn latex_letter(&self, letter: &Self::Letter) -> String;

    /// Primal coproduct of a word, when the algebra has one.
    fn primal_coproduct(&self, _word: &[Self::Letter]) -> Option<TensorElement<Self::Letter>> {
        None
    }

    /// Brute-force dual brace, when the algebra has a primal coproduct.
    fn oracle(
        &self,
        _head: &Self::Letter,
        _args: &[Self::Letter],
        _max_degree: usize,
    ) -> Option<cha_core::Result<Element<Self::Letter>>> {
        None
    }

    /// Inputs `(head, args)` checked by the exhaustive oracle law, with
    /// `q ≥ 1`. By default every head and argument word of total degree at
    /// most `max_degree`.
    fn oracle_cases(&self, max_degree: usize) -> Vec<(Self::Letter, Word<Self::Letter>)> {
        let mut out = Vec::new();
        for total in 2..=max_degree {
            for hd in 1..total {
                for head in self.generators_of_degree(hd) {
                    for args in words_of_degree(self, total - hd) {
                        out.push((head.clone(), args));
                    }
                }
            }
        }
        out
    }
}

fn parse_index(cur: &mut Cursor<'_>) -> Result<u32, ParseError> {
    let start = cur.position();
    let digits = cur.take_while(|c| c.is_ascii_digit());
    if digits.is_empty() {
        return Err(cur.error("expected an index"));
    }
    digits.parse().map_err(|_| cur.error_at(start, format!("index {digits} is too large")))
}

impl Front for FaaDiBruno {
    fn name(&self) -> &'static str {
        "fdb"
    }

    fn parse_factor(&self, cur: &mut Cursor<'_>) -> Result<Word<FdbLetter>, ParseError> {
        cur.expect('v')?;
        let start = cur.position();
        let n = parse_index(cur)?;
        FdbLetter::new(n).map(|l| vec![l]).map_err(|e| cur.error_at(start, e.to_string()))
    }

    fn latex_letter(&self, letter: &FdbLetter) -> String {
        format!("v_{{{}}}", letter.index())
    }

    fn primal_coproduct(&self, word: &[FdbLetter]) -> Option<TensorElement<FdbLetter>> {
        Some(coproduct_word(self, word))
    }

    fn oracle(&self, head: &FdbLetter, args: &[FdbLetter], max: usize) -> Option<cha_core::Result<Element<FdbLetter>>> {
        Some(dual_brace_oracle(head, args, self, max))
    }
}

/// Parses `o` or `(L,R)`.
pub fn parse_binary_tree(cur: &mut Cursor<'_>) -> Result<PlanarBinaryTree, ParseError> {
    cur.skip_ws();
    if cur.eat('o') {
        return Ok(PlanarBinaryTree::leaf());
    }
    cur.expect('(')?;
    let left = parse_binary_tree(cur)?;
    cur.skip_ws();
    cur.expect(',')?;
    let right = parse_binary_tree(cur)?;
    cur.skip_ws();
    cur.expect(')')?;
    Ok(PlanarBinaryTree::node(left, right))
}

/// LaTeX for a binary tree: `\circ` for the leaf, `\vee` for pairs.
pub fn latex_binary_tree(t: &PlanarBinaryTree) -> String {
    match t {
        PlanarBinaryTree::Leaf => "\\circ".to_string(),
        PlanarBinaryTree::Node(l, r) => format!("({} \\vee {})", latex_binary_tree(l), latex_binary_tree(r)),
    }
}

impl Front for QedAlgebra {
    fn name(&self) -> &'static str {
        "qed"
    }

    fn parse_factor(&self, cur: &mut Cursor<'_>) -> Result<Word<QedLetter>, ParseError> {
        if cur.eat('v') {
            cur.expect('(')?;
            let t = parse_binary_tree(cur)?;
            cur.skip_ws();
            cur.expect(')')?;
            return Ok(vec![QedLetter(t)]);
        }
        match cur.peek() {
            Some('o') | Some('(') => Ok(spine_factorize(&parse_binary_tree(cur)?)),
            Some(c) => Err(cur.error(format!("expected 'v(', 'o' or '(', found '{c}'"))),
            None => Err(cur.error("expected a tree, found end of input")),
        }
    }

    fn latex_letter(&self, letter: &QedLetter) -> String {
        format!("v({})", latex_binary_tree(letter.shape()))
    }

    fn primal_coproduct(&self, word: &[QedLetter]) -> Option<TensorElement<QedLetter>> {
        Some(coproduct_word(self, word))
    }

    fn oracle(&self, head: &QedLetter, args: &[QedLetter], max: usize) -> Option<cha_core::Result<Element<QedLetter>>> {
        Some(dual_brace_oracle(head, args, self, max))
    }
}

/// Entry syntax for the basis of a bialgebra used inside Pinter tuples.
pub trait EntrySyntax: Bialgebra {
    fn parse_entry(&self, token: &str) -> Option<Self::Basis>;
    fn latex_entry(&self, entry: &Self::Basis) -> String;
}

impl EntrySyntax for PolyBialgebra {
    fn parse_entry(&self, token: &str) -> Option<PolyBasis> {
        let digits = token.strip_prefix('x')?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        digits.parse().ok().map(PolyBasis)
    }

    fn latex_entry(&self, entry: &PolyBasis) -> String {
        format!("x_{{{}}}", entry.0)
    }
}

impl EntrySyntax for TableBialgebra {
    fn parse_entry(&self, token: &str) -> Option<TableBasis> {
        self.element(token).cloned()
    }

    fn latex_entry(&self, entry: &TableBasis) -> String {
        format!("\\mathrm{{{}}}", entry.name())
    }
}

/// Largest tensor length of head and of the argument word in the Pinter
/// oracle law.
pub const PINTER_ORACLE_MAX_LEN: usize = 3;

fn pinter_words<S: Bialgebra>(
    gens: &[PinterLetter<S::Basis>],
    len_budget: usize,
    deg_budget: usize,
    prefix: Vec<PinterLetter<S::Basis>>,
    out: &mut Vec<Vec<PinterLetter<S::Basis>>>,
) {
    if !prefix.is_empty() {
        out.push(prefix.clone());
    }
    for g in gens {
        if g.len() <= len_budget && g.b_degree() <= deg_budget {
            let mut p = prefix.clone();
            p.push(g.clone());
            pinter_words::<S>(gens, len_budget - g.len(), deg_budget - g.b_degree(), p, out);
        }
    }
}

impl<S: EntrySyntax> Front for PinterAlgebra<S> {
    fn name(&self) -> &'static str {
        "pinter"
    }

    fn parse_factor(&self, cur: &mut Cursor<'_>) -> Result<Word<PinterLetter<S::Basis>>, ParseError> {
        cur.expect('(')?;
        let mut entries = Vec::new();
        loop {
            cur.skip_ws();
            let start = cur.position();
            let token = cur.take_while(|c| !c.is_whitespace() && c != ',' && c != '(' && c != ')');
            if token.is_empty() {
                return Err(cur.error("expected a basis element"));
            }
            let entry = self
                .bialgebra()
                .parse_entry(token)
                .ok_or_else(|| cur.error_at(start, format!("{token:?} is not a basis element of the bialgebra")))?;
            entries.push(entry);
            cur.skip_ws();
            if cur.eat(')') {
                break;
            }
            cur.expect(',')?;
        }
        let letter = PinterLetter::new(entries).expect("at least one entry");
        // (1_B) is the unit word
        if letter == unit_letter(self.bialgebra()) {
            return Ok(Vec::new());
        }
        Ok(vec![letter])
    }

    fn latex_letter(&self, letter: &PinterLetter<S::Basis>) -> String {
        let parts: Vec<String> = letter.entries().iter().map(|e| self.bialgebra().latex_entry(e)).collect();
        format!("({})", parts.join(", "))
    }

    fn primal_coproduct(&self, word: &[PinterLetter<S::Basis>]) -> Option<TensorElement<PinterLetter<S::Basis>>> {
        Some(coproduct_word(self, word))
    }

    fn oracle(
        &self,
        head: &PinterLetter<S::Basis>,
        args: &[PinterLetter<S::Basis>],
        max: usize,
    ) -> Option<cha_core::Result<Element<PinterLetter<S::Basis>>>> {
        Some(dual_brace_oracle(head, args, self, max))
    }

    /// Heads and argument words of tensor length at most
    /// [`PINTER_ORACLE_MAX_LEN`] each, with total `B`-degree at most
    /// `max_degree − 2`.
    fn oracle_cases(&self, max_degree: usize) -> Vec<(PinterLetter<S::Basis>, Word<PinterLetter<S::Basis>>)> {
        let b_max = max_degree.saturating_sub(2);
        let gens: Vec<PinterLetter<S::Basis>> = (1..=PINTER_ORACLE_MAX_LEN)
            .flat_map(|len| (0..=b_max).flat_map(move |d| self.generators_of_bidegree(len, d)))
            .collect();
        let mut out = Vec::new();
        for head in &gens {
            let mut words = Vec::new();
            pinter_words::<S>(&gens, PINTER_ORACLE_MAX_LEN, b_max - head.b_degree(), Vec::new(), &mut words);
            out.extend(words.into_iter().map(|w| (head.clone(), w)));
        }
        out
    }
}

/// Parses `x` or `x[c1,c2,…]`.
pub fn parse_decorated_tree(cur: &mut Cursor<'_>) -> Result<DecoratedTree<Sym>, ParseError> {
    cur.skip_ws();
    let name = identifier(cur)?;
    let mut children = Vec::new();
    if cur.eat('[') {
        cur.skip_ws();
        if !cur.eat(']') {
            loop {
                children.push(parse_decorated_tree(cur)?);
                cur.skip_ws();
                if cur.eat(']') {
                    break;
                }
                cur.expect(',')?;
            }
        }
    }
    Ok(b_plus(Sym::new(name), children))
}

/// LaTeX for a decorated tree: `\bullet_{x}` or `B_+^{x}(…)`.
pub fn latex_decorated_tree<D: Letter>(t: &DecoratedTree<D>, deco: &impl Fn(&D) -> String) -> String {
    if t.children().is_empty() {
        return format!("\\bullet_{{{}}}", deco(t.decoration()));
    }
    let parts: Vec<String> = t.children().iter().map(|c| latex_decorated_tree(c, deco)).collect();
    format!("B_+^{{{}}}({})", deco(t.decoration()), parts.join("\\,"))
}

impl Front for FreeTreeBrace<Sym> {
    fn name(&self) -> &'static str {
        "tree"
    }

    fn parse_factor(&self, cur: &mut Cursor<'_>) -> Result<Word<DecoratedTree<Sym>>, ParseError> {
        Ok(vec![parse_decorated_tree(cur)?])
    }

    fn latex_letter(&self, letter: &DecoratedTree<Sym>) -> String {
        latex_decorated_tree(letter, &|s: &Sym| s.0.clone())
    }
}
