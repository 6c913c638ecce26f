use cha_core::engine::{
    dual_star_oracle, star_closed_words, star_left_recursive, star_words, words_of_degree, Alphabet, BraceSystem,
};
use cha_core::fdb::{brace_fdb, FaaDiBruno, FdbLetter};
use cha_core::linear::{deconcat, int, pair, pair_tensor, ratio, Element, TensorElement};
use cha_core::qed::{delta_alpha_generator, from_spine, spine_factorize, PlanarBinaryTree, QedAlgebra};
use cha_core::Letter;
use proptest::prelude::*;

fn fdb_word() -> impl Strategy<Value = Vec<FdbLetter>> {
    prop::collection::vec(1u32..4, 0..4).prop_map(|ns| ns.into_iter().map(|n| FdbLetter::new(n).unwrap()).collect())
}

fn fdb_element() -> impl Strategy<Value = Element<FdbLetter>> {
    prop::collection::vec((fdb_word(), -3i64..4, 1i64..3), 0..4)
        .prop_map(|terms| terms.into_iter().map(|(w, p, q)| (w, ratio(p, q))).collect())
}

fn qed_word() -> impl Strategy<Value = Vec<cha_core::qed::QedLetter>> {
    (0usize..5, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let trees = PlanarBinaryTree::all_of_size(n);
        spine_factorize(&trees[i.index(trees.len())])
    })
}

/// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ`, both compared against the three-way split.
fn coassociative<L: Letter>(e: &Element<L>) -> bool {
    let two = deconcat(e, 2).unwrap();
    let three = deconcat(e, 3).unwrap();
    let mut left = TensorElement::zero(3);
    let mut right = TensorElement::zero(3);
    for (legs, c) in two.iter() {
        for (sub, k) in deconcat(&Element::from_word(legs[0].clone()), 2).unwrap().iter() {
            left.add_term(vec![sub[0].clone(), sub[1].clone(), legs[1].clone()], c * k);
        }
        for (sub, k) in deconcat(&Element::from_word(legs[1].clone()), 2).unwrap().iter() {
            right.add_term(vec![legs[0].clone(), sub[0].clone(), sub[1].clone()], c * k);
        }
    }
    left == three && right == three
}

proptest! {
    #[test]
    fn deconcatenation_is_coassociative(e in fdb_element()) {
        prop_assert!(coassociative(&e));
    }

    #[test]
    fn deconcatenation_counit(e in fdb_element()) {
        // (ε ⊗ id)Δ = id: keep the terms whose left leg is empty
        let mut left_unit = Element::zero();
        let mut right_unit = Element::zero();
        for (legs, c) in deconcat(&e, 2).unwrap().iter() {
            if legs[0].is_empty() {
                left_unit.add_term(legs[1].clone(), c.clone());
            }
            if legs[1].is_empty() {
                right_unit.add_term(legs[0].clone(), c.clone());
            }
        }
        prop_assert_eq!(&left_unit, &e);
        prop_assert_eq!(&right_unit, &e);
    }

    #[test]
    fn pairing_is_bilinear_and_dualizes_concatenation(a in fdb_element(), b in fdb_element(), x in fdb_word(), y in fdb_word()) {
        let c = int(3);
        prop_assert_eq!(pair(&(a.clone() + b.scale(&c)), &Element::from_word(x.clone())),
            pair(&a, &Element::from_word(x.clone())) + c * pair(&b, &Element::from_word(x.clone())));
        // ⟨Δ a, x ⊗ y⟩ = ⟨a, xy⟩
        let mut xy = TensorElement::zero(2);
        xy.add_term(vec![x.clone(), y.clone()], int(1));
        let xy_word = Element::from_word([x, y].concat());
        prop_assert_eq!(pair_tensor(&deconcat(&a, 2).unwrap(), &xy).unwrap(), pair(&a, &xy_word));
    }

    #[test]
    fn fdb_product_forms_agree(x in fdb_word(), y in fdb_word()) {
        let s = star_words(&x, &y, &FaaDiBruno);
        prop_assert_eq!(&s, &star_closed_words(&x, &y, &FaaDiBruno));
        prop_assert_eq!(&s, &star_left_recursive(&x, &y, &FaaDiBruno));
        if x.iter().chain(&y).map(Letter::degree).sum::<usize>() <= 8 {
            prop_assert_eq!(&s, &dual_star_oracle(&x, &y, &FaaDiBruno, 8).unwrap());
        }
    }

    #[test]
    fn unit_laws(x in fdb_word()) {
        let one: Vec<FdbLetter> = vec![];
        prop_assert_eq!(star_words(&x, &one, &FaaDiBruno), Element::from_word(x.clone()));
        prop_assert_eq!(star_words(&one, &x, &FaaDiBruno), Element::from_word(x));
    }

    #[test]
    fn fdb_brace_closed_form(n in 1usize..5, ms in prop::collection::vec(1usize..4, 0..4)) {
        let head = FdbLetter::new(n as u32).unwrap();
        let args: Vec<FdbLetter> = ms.iter().map(|&m| FdbLetter::new(m as u32).unwrap()).collect();
        prop_assert_eq!(FaaDiBruno.brace(&head, &args), brace_fdb(n, &ms));
    }

    #[test]
    fn qed_spine_round_trip(w in qed_word()) {
        prop_assert_eq!(spine_factorize(&from_spine(&w)), w);
    }

    #[test]
    fn qed_coproduct_is_right_sided_and_counital(w in qed_word()) {
        for v in &w {
            let d = delta_alpha_generator(v);
            for (legs, _) in d.iter() {
                prop_assert!(legs[0].len() <= 1);
            }
            prop_assert_eq!(d.coefficient(&[vec![], vec![v.clone()]]), int(1));
            prop_assert_eq!(d.coefficient(&[vec![v.clone()], vec![]]), int(1));
        }
    }

    #[test]
    fn qed_products_match_oracle(x in qed_word(), y in qed_word()) {
        prop_assume!(x.iter().chain(&y).map(Letter::degree).sum::<usize>() <= 6);
        prop_assert_eq!(star_words(&x, &y, &QedAlgebra), dual_star_oracle(&x, &y, &QedAlgebra, 12).unwrap());
    }
}

#[test]
fn fdb_words_are_counted_by_compositions() {
    for d in 0..8 {
        assert_eq!(words_of_degree(&FaaDiBruno, d).len(), if d == 0 { 1 } else { 1 << (d - 1) });
    }
    assert_eq!(FaaDiBruno.generators_of_degree(3).len(), 1);
}
