use proptest::prelude::*;
use sotype_cli::{eval_expr, parse_expr, Atom, GroupExpr};
use sotype_core::{order_spectrum, ClassicalFamily, DEFAULT_CAP};

const CORPUS: [&str; 50] = [
    "PSL(2,5)",
    "PSL(2,7)",
    "PSL(2,8)",
    "PSL(2,9)",
    "PSL(2,17)",
    "PSL(3,3)",
    "PSU(3,3)",
    "PSU(4,2)",
    "PSL(2,4)",
    "A(5)",
    "A(6)",
    "Q(8) x F(7,3,2)",
    "Q(8)xF(7,3,2)",
    "C(7) x SL(2,3)",
    "cex3",
    "cex3()",
    "C(2) x ((C(14) x C(2)) x C(3))",
    "SL(2,3)",
    "SL(3,2)",
    "SU(3,3)",
    "SU(4,2)",
    "SL(2,9)",
    "C(1)",
    "C(168)",
    "D(4)",
    "D(7) x C(12)",
    "Dic(2)",
    "Dic(3) x C(7)",
    "Q(16)",
    "S(3)",
    "S(4) x C(7)",
    "S(5)",
    "A(4) x C(14)",
    "F(5,4,2)",
    "F(13,3,3)",
    "F(21,3,4)",
    "F(7,6,3) x C(4)",
    "C(2) x C(2) x C(2)",
    "C(2) x (C(2) x C(2))",
    "(C(2) x C(3)) x (C(5) x C(7))",
    "((PSL(2,7)))",
    "PSL(2,7) x C(1)",
    "SL(2,3) x Q(8)",
    "Perm[(1,2,3)(4,5), (1,2)]",
    "Perm[()]",
    "Perm[(1,2)] x Perm[(1,2,3)]",
    "Perm[(1,2,3,4,5,6,7), (2,3,5)(4,7,6)]",
    "  C ( 3 )   x   D ( 5 ) ",
    "PSL(2,7) × cex3",
    "C(3) x (D(4) x (Dic(2) x A(4)))",
];

#[test]
fn corpus_round_trips() {
    for text in CORPUS {
        let ast = parse_expr(text).unwrap_or_else(|e| panic!("{text}: {e}"));
        let printed = ast.to_string();
        let reparsed = parse_expr(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert_eq!(reparsed, ast, "{text} -> {printed}");
        assert_eq!(
            reparsed.to_string(),
            printed,
            "printing is not a fixed point for {text}"
        );
    }
}

#[test]
fn reassociation_preserves_the_group() {
    for (left, right) in [
        ("(C(2) x C(3)) x C(4)", "C(2) x (C(3) x C(4))"),
        ("(Dic(2) x C(7)) x C(3)", "Dic(2) x (C(7) x C(3))"),
        ("(SL(2,3) x C(2)) x C(3)", "SL(2,3) x (C(2) x C(3))"),
        ("(C(7) x SL(2,3)) x C(1)", "C(7) x (SL(2,3) x C(1))"),
    ] {
        let a = eval_expr(&parse_expr(left).unwrap(), DEFAULT_CAP).unwrap();
        let b = eval_expr(&parse_expr(right).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(a.order(), b.order());
        assert_eq!(order_spectrum(&a), order_spectrum(&b), "{left} vs {right}");
    }
}

fn atom() -> impl Strategy<Value = Atom> {
    let n = 1u64..200;
    prop_oneof![
        n.clone().prop_map(Atom::Cyclic),
        n.clone().prop_map(Atom::Dihedral),
        n.clone().prop_map(Atom::Dicyclic),
        n.clone().prop_map(Atom::Symmetric),
        n.clone().prop_map(Atom::Alternating),
        (n.clone(), n.clone(), n.clone()).prop_map(|(m, n, k)| Atom::Frobenius { m, n, k }),
        (
            prop_oneof![
                Just(ClassicalFamily::SL),
                Just(ClassicalFamily::PSL),
                Just(ClassicalFamily::SU),
                Just(ClassicalFamily::PSU)
            ],
            n.clone(),
            n
        )
            .prop_map(|(family, n, q)| Atom::Classical { family, n, q }),
        Just(Atom::Cex3),
        proptest::collection::vec(
            proptest::collection::vec(proptest::collection::vec(1u64..20, 1..4), 0..3),
            1..3
        )
        .prop_map(Atom::Perm),
    ]
}

fn expr() -> impl Strategy<Value = GroupExpr> {
    atom()
        .prop_map(GroupExpr::Atom)
        .prop_recursive(4, 16, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| GroupExpr::product(l, r))
        })
}

proptest! {
    #[test]
    fn printed_ast_parses_back(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse_expr(&printed).unwrap(), e);
    }

    #[test]
    fn garbage_never_panics(s in "[A-Za-z0-9(),\\[\\] x]{0,24}") {
        if let Err(e) = parse_expr(&s) {
            prop_assert!(e.offset() <= s.len());
        }
    }
}
