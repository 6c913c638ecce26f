//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//!
//! Every comparison is exact equality of canonical elements.

use std::fmt::Debug;
use std::time::Instant;

use cha::cli::tree_algebra;
use cha::front::Front;
use cha::parse::{parse_expr, parse_letter, parse_word_only};
use cha::verify::{self, check_grafting_exhaustive, report_text, Law, Options};
use cha_core::engine::{star_closed, star_words, BraceSystem};
use cha_core::fdb::{delta_dif, q_poly, FaaDiBruno, FdbLetter};
use cha_core::linear::int;
use cha_core::pinter::{delta_h, Bialgebra, PinterAlgebra, PinterLetter, PolyBialgebra, TableBialgebra};
use cha_core::qed::{delta_alpha, PlanarBinaryTree, QedAlgebra};
use cha_core::trees::{brace_trees, enumerate_graftings, star_forests, star_via_trees};
use cha_core::{Element, TensorElement};

type Check = Result<String, String>;

fn same<T: PartialEq + Debug>(label: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got:?}, expected {want:?}"))
    }
}

fn expr<F: Front>(front: &F, text: &str) -> Element<F::Letter> {
    parse_expr(front, text).unwrap_or_else(|e| panic!("fixture {text:?}: {e}"))
}

fn word<F: Front>(front: &F, text: &str) -> Vec<F::Letter> {
    parse_word_only(front, text).unwrap_or_else(|e| panic!("fixture {text:?}: {e}"))
}

fn letter<F: Front>(front: &F, text: &str) -> F::Letter {
    parse_letter(front, text).unwrap_or_else(|e| panic!("fixture {text:?}: {e}"))
}

fn law<F: Front>(front: &F, law: Law, trials: usize, max_degree: usize) -> Result<usize, String> {
    let report = verify::run(front, law, &Options { trials, max_degree, seed: 2024 }).map_err(|e| e.to_string())?;
    if report.passed() {
        Ok(report.trials)
    } else {
        Err(format!("[{}] {}", front.name(), report_text(&report)))
    }
}

// ---- criterion 1 ------------------------------------------------------------

fn free_products() -> Result<(), String> {
    let t = tree_algebra();
    let s = |a: &str, b: &str| star_closed(&expr(&t, a), &expr(&t, b), &t);
    same("x*y", s("x", "y"), expr(&t, "x[y] + x y + y x"))?;
    same("(xy)*z", s("x y", "z"), expr(&t, "x y[z] + x[z] y + z x y + x z y + x y z"))?;
    same("x*(yz)", s("x", "y z"), expr(&t, "x[y,z] + y x[z] + x[y] z + y z x + y x z + x y z"))?;
    // the same expansions with braces evaluated in the Faà di Bruno algebra
    let f = FaaDiBruno;
    let (x, y, z) = (letter(&f, "v1"), letter(&f, "v2"), letter(&f, "v3"));
    let m = |h: &FdbLetter, a: &[FdbLetter]| f.brace(h, a);
    let w = |ls: &[FdbLetter]| Element::from_word(ls.to_vec());
    let want = m(&x, &[y]) + w(&[x, y]) + w(&[y, x]);
    same("v1*v2", star_words(&[x], &[y], &f), want)?;
    let want = w(&[x]).concat(&m(&y, &[z]))
        + m(&x, &[z]).concat_word(&[y])
        + w(&[z, x, y])
        + w(&[x, z, y])
        + w(&[x, y, z]);
    same("(v1 v2)*v3", star_words(&[x, y], &[z], &f), want)?;
    let want = m(&x, &[y, z])
        + w(&[y]).concat(&m(&x, &[z]))
        + m(&x, &[y]).concat_word(&[z])
        + w(&[y, z, x])
        + w(&[y, x, z])
        + w(&[x, y, z]);
    same("v1*(v2 v3)", star_words(&[x], &[y, z], &f), want)
}

fn tree_displays() -> Result<(), String> {
    let t = tree_algebra();
    let forest = |s: &str| word(&t, s);
    let host = letter(&t, "x[y]");
    let want = expr(&t, "x[u,v,y] + x[u,y[v]] + x[u,y,v] + x[y[u,v]] + x[y[u],v] + x[y,u,v]");
    same("M(x[y]; u v)", brace_trees(&host, &forest("u v")), want.clone())?;
    same("graftings of u v on x[y]", enumerate_graftings(&host, &forest("u v")), want)?;
    let want = expr(&t, "x u v[w] + u x v[w] + u v[w] x + x[u] v[w] + x[u,v[w]] + u x[v[w]]");
    same("x * (u v[w])", star_forests(&forest("x"), &forest("u v[w]")), want)?;
    let want = expr(&t, "x y z + y x z + y z x + x[y] z + y x[z] + x[y,z]");
    same("x * (y z) on forests", star_forests(&forest("x"), &forest("y z")), want)?;
    // μ of that forest product in the Faà di Bruno algebra
    let f = FaaDiBruno;
    let (x, y, z) = (letter(&f, "v1"), letter(&f, "v2"), letter(&f, "v3"));
    let w = |ls: &[FdbLetter]| Element::from_word(ls.to_vec());
    let want = w(&[x, y, z])
        + w(&[y, x, z])
        + w(&[y, z, x])
        + f.brace(&x, &[y]).concat_word(&[z])
        + w(&[y]).concat(&f.brace(&x, &[z]))
        + f.brace(&x, &[y, z]);
    same("mu(iota(v1) * iota(v2 v3))", star_via_trees(&[x], &[y, z], &f), want)
}

fn qed_examples() -> Result<(), String> {
    let q = QedAlgebra;
    // heads and arguments are generator trees, written in full
    let cases = [
        ("(o,(o,o))", "(o,o)", "(o,((o,o),o))"),
        ("(o,(o,o))", "(o,(o,o))", "(o,((o,(o,o)),o))"),
        ("(o,((o,o),o))", "(o,o)", "2*(o,(((o,o),o),o))"),
        ("(o,(o,(o,o)))", "(o,o)", "(o,((o,o),(o,o))) + (o,(o,((o,o),o)))"),
        ("(o,(o,o))", "(o,o) (o,o)", "(o,(((o,o),o),o))"),
        (
            "(o,(o,(o,o)))",
            "(o,o) (o,o)",
            "(o,(((o,o),o),(o,o))) + (o,((o,o),((o,o),o))) + (o,(o,(((o,o),o),o)))",
        ),
        ("(o,o)", "(o,o)", "0"),
        ("(o,o)", "(o,o) (o,(o,o))", "0"),
    ];
    for (head, args, want) in cases {
        let got = q.brace(&letter(&q, head), &word(&q, args));
        same(&format!("M({head}; {args})"), got, expr(&q, want))?;
    }
    Ok(())
}

fn pinter_examples() -> Result<(), String> {
    let p = PinterAlgebra::new(PolyBialgebra);
    // (head, args, expected): symbolic entries instantiated in k[x]
    let cases = [
        ("(x1)", "(x2)", "3*(x3)"),
        ("(x2)", "(x1,x0)", "(x1,x2) + 2*(x2,x1) + 3*(x3,x0)"),
        ("(x1)", "(x0,x0,x0)", "(x1,x0,x0) + (x0,x1,x0) + (x0,x0,x1)"),
        ("(x1,x0)", "(x1) (x2)", "2*(x2,x2)"),
        ("(x1,x1)", "(x2) (x1,x0)", "3*(x3,x1,x1) + 6*(x3,x2,x0)"),
        ("(x1,x2)", "(x0,x1) (x1)", "6*(x0,x2,x3) + 3*(x1,x1,x3)"),
        (
            "(x1,x1)",
            "(x1,x1) (x0,x0)",
            "2*(x1,x2,x0,x1) + 2*(x1,x2,x1,x0) + 2*(x2,x1,x0,x1) + 2*(x2,x1,x1,x0)",
        ),
        ("(x1,x1)", "(x1) (x1) (x1)", "0"),
    ];
    for (head, args, want) in cases {
        let got = p.brace(&letter(&p, head), &word(&p, args));
        same(&format!("M({head}; {args})"), got, expr(&p, want))?;
    }
    Ok(())
}

fn criterion_1() -> Check {
    free_products()?;
    tree_displays()?;
    qed_examples()?;
    pinter_examples()?;
    Ok("expansions, tree displays, 8 QED and 8 Pinter braces".into())
}

// ---- criteria 2, 4, 5 -------------------------------------------------------

fn per_algebra(laws: &[(Law, usize)], max_degree: usize) -> Check {
    let mut total = 0;
    for &(l, trials) in laws {
        total += law(&FaaDiBruno, l, trials, max_degree)?;
        total += law(&QedAlgebra, l, trials, max_degree)?;
        total += law(&PinterAlgebra::new(PolyBialgebra), l, trials, max_degree)?;
        total += law(&tree_algebra(), l, trials, max_degree)?;
    }
    Ok(format!("{total} checks over fdb, qed, pinter, tree"))
}

fn criterion_2() -> Check {
    per_algebra(&[(Law::ClosedVsRecursive, 200)], 6)
}

fn criterion_4() -> Check {
    per_algebra(&[(Law::Assoc, 200), (Law::Brace, 200), (Law::Compat, 200), (Law::RightSided, 200)], 6)
}

fn criterion_5() -> Check {
    per_algebra(&[(Law::MuIota, 200)], 6)
}

// ---- criterion 3 ------------------------------------------------------------

fn criterion_3() -> Check {
    let fdb = law(&FaaDiBruno, Law::Oracle, 0, 8)?;
    let qed = law(&QedAlgebra, Law::Oracle, 0, 6)?;
    // B-degree at most 4, tensor lengths at most 3
    let poly = law(&PinterAlgebra::new(PolyBialgebra), Law::Oracle, 0, 6)?;
    let z2 = law(&PinterAlgebra::new(TableBialgebra::z2()), Law::Oracle, 0, 6)?;
    Ok(format!("fdb {fdb}, qed {qed}, pinter/poly {poly}, pinter/z2 {z2} cases"))
}

// ---- criterion 6 ------------------------------------------------------------

fn criterion_6() -> Check {
    let (count, cx) = check_grafting_exhaustive(7);
    if let Some(cx) = cx {
        return Err(format!("{cx:?}"));
    }
    let t = tree_algebra();
    let got = brace_trees(&letter(&t, "x[y]"), &word(&t, "u v"));
    same("six terms", got.len(), 6)?;
    if got.iter().any(|(_, c)| *c != int(1)) {
        return Err(format!("coefficient other than 1 in {got}"));
    }
    Ok(format!("{count} host/forest pairs, 6-term display"))
}

// ---- criterion 7 ------------------------------------------------------------

fn fdb_coproducts() -> Result<(), String> {
    for n in 1..=8 {
        let mut want = TensorElement::zero(2);
        for k in 0..=n {
            let left = if k == 0 { vec![] } else { vec![FdbLetter::new(k as u32).expect("k > 0")] };
            for (w, c) in q_poly(k, n - k).iter() {
                want.add_term(vec![left.clone(), w.clone()], c.clone());
            }
        }
        same(&format!("delta_dif({n})"), delta_dif(n).map_err(|e| e.to_string())?, want)?;
    }
    Ok(())
}

/// The three displayed expansions, written out with `δ` and `·` of `B`.
fn displayed_delta_h<S: Bialgebra>(b: &S, xs: &[S::Basis]) -> TensorElement<PinterLetter<S::Basis>> {
    let tuple = |es: Vec<S::Basis>| PinterLetter::new(es).expect("nonempty");
    let mut out = TensorElement::zero(2);
    let mul = |a: &S::Basis, c: &S::Basis| b.product(a, c);
    match xs {
        [x] => {
            for (x1, x2, c) in b.coproduct(x) {
                out.add_term(vec![vec![tuple(vec![x1])], vec![tuple(vec![x2])]], c);
            }
        }
        [x, y] => {
            for (x1, x2, cx) in b.coproduct(x) {
                for (y1, y2, cy) in b.coproduct(y) {
                    let c = &cx * &cy;
                    out.add_term(
                        vec![vec![tuple(vec![x1.clone(), y1.clone()])], vec![tuple(vec![x2.clone()]), tuple(vec![y2.clone()])]],
                        c.clone(),
                    );
                    for (m, k) in mul(&x1, &y1) {
                        out.add_term(vec![vec![tuple(vec![m])], vec![tuple(vec![x2.clone(), y2.clone()])]], &c * &k);
                    }
                }
            }
        }
        [x, y, z] => {
            for (x1, x2, cx) in b.coproduct(x) {
                for (y1, y2, cy) in b.coproduct(y) {
                    for (z1, z2, cz) in b.coproduct(z) {
                        let c = &cx * &cy * &cz;
                        let (t1, t2, t3) = (tuple(vec![x2.clone()]), tuple(vec![y2.clone()]), tuple(vec![z2.clone()]));
                        out.add_term(
                            vec![vec![tuple(vec![x1.clone(), y1.clone(), z1.clone()])], vec![t1.clone(), t2.clone(), t3.clone()]],
                            c.clone(),
                        );
                        for (m, k) in mul(&y1, &z1) {
                            out.add_term(
                                vec![vec![tuple(vec![x1.clone(), m])], vec![t1.clone(), tuple(vec![y2.clone(), z2.clone()])]],
                                &c * &k,
                            );
                        }
                        for (m, k) in mul(&x1, &y1) {
                            out.add_term(
                                vec![vec![tuple(vec![m, z1.clone()])], vec![tuple(vec![x2.clone(), y2.clone()]), t3.clone()]],
                                &c * &k,
                            );
                        }
                        for (m, k) in mul(&x1, &y1) {
                            for (m2, k2) in mul(&m, &z1) {
                                out.add_term(
                                    vec![vec![tuple(vec![m2])], vec![tuple(vec![x2.clone(), y2.clone(), z2.clone()])]],
                                    &c * &k * &k2,
                                );
                            }
                        }
                    }
                }
            }
        }
        _ => unreachable!("only the displayed lengths"),
    }
    out
}

fn delta_h_displays<S: Bialgebra>(b: &S, basis: &[S::Basis]) -> Result<usize, String> {
    let mut count = 0;
    for len in 1..=3 {
        let slots = vec![basis.to_vec(); len];
        for xs in cha_core::combinat::cartesian(&slots) {
            let v = PinterLetter::new(xs.clone()).expect("nonempty");
            same(&format!("delta_H{v}"), delta_h(b, &v), displayed_delta_h(b, &xs))?;
            count += 1;
        }
    }
    Ok(count)
}

fn s3() -> TableBialgebra {
    // permutations of {0,1,2} in one-line notation, composed left to right
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let names = ["e", "s", "t", "u", "r", "rr"];
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composed = [q[p[0]], q[p[1]], q[p[2]]];
                    perms.iter().position(|r| *r == composed).expect("closed")
                })
                .collect()
        })
        .collect();
    TableBialgebra::monoid(&names, &table, "e").expect("S3 is a monoid")
}

fn criterion_7() -> Check {
    fdb_coproducts()?;
    let poly_basis: Vec<_> = (0..=2).flat_map(|d| PolyBialgebra.basis_of_degree(d)).collect();
    let mut displays = delta_h_displays(&PolyBialgebra, &poly_basis)?;
    let z2 = TableBialgebra::z2();
    displays += delta_h_displays(&z2, z2.basis())?;
    let s3 = s3();
    displays += delta_h_displays(&s3, s3.basis())?;
    // generator trees v(s) = (o,s) with at most 5 internal vertices
    let mut trees = 0;
    for k in 0..=4 {
        for s in PlanarBinaryTree::all_of_size(k) {
            let t = PlanarBinaryTree::node(PlanarBinaryTree::leaf(), s);
            trees += 1;
            for (legs, _) in delta_alpha(&t).iter() {
                if legs[0].len() > 1 {
                    return Err(format!("delta_alpha({t}) has left leg of length {}", legs[0].len()));
                }
            }
        }
    }
    Ok(format!("delta_dif n<=8, {displays} delta_H expansions over poly/Z2/S3, {trees} generator trees"))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Check); 7] = [
        (1, "worked examples", criterion_1),
        (2, "closed form vs recursive product", criterion_2),
        (3, "dual oracle equivalence", criterion_3),
        (4, "law suites", criterion_4),
        (5, "tree lifting", criterion_5),
        (6, "grafting enumeration", criterion_6),
        (7, "coproduct fidelity", criterion_7),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n} ({name}): pass [{detail}] {secs:.2}s"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} ({name}): FAIL {why} {secs:.2}s");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 7 criteria pass");
}
