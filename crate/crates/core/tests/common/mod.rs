#![allow(dead_code)]

use sotype_core::*;

fn perm(f: PermFamily) -> GroupHandle<AnyElement> {
    family_group(&f, DEFAULT_CAP)
        .unwrap()
        .map_into(|p| AnyElement::Perm(p.clone()))
}

fn classical(f: ClassicalFamily, n: usize, q: u64) -> GroupHandle<AnyElement> {
    classical_group(f, n, q, DEFAULT_CAP)
        .unwrap()
        .map_into(|m| AnyElement::Matrix(m.clone()))
}

/// Small groups covering every element kind.
pub fn catalog() -> Vec<(&'static str, GroupHandle<AnyElement>)> {
    use ClassicalFamily::*;
    use PermFamily::*;
    let q8 = perm(Dicyclic(2));
    let f21 = perm(Frobenius { m: 7, n: 3, k: 2 });
    let c7 = perm(Cyclic(7));
    let sl23 = classical(SL, 2, 3);
    let q8_f21 = any_direct_product(&q8, &f21, DEFAULT_CAP).unwrap();
    let c7_sl23 = any_direct_product(&c7, &sl23, DEFAULT_CAP).unwrap();
    vec![
        ("C(1)", perm(Cyclic(1))),
        ("C(2)", perm(Cyclic(2))),
        ("C(6)", perm(Cyclic(6))),
        ("C(7)", c7),
        ("D(2)", perm(Dihedral(2))),
        ("D(4)", perm(Dihedral(4))),
        ("D(5)", perm(Dihedral(5))),
        ("Dic(2)", q8),
        ("Dic(3)", perm(Dicyclic(3))),
        ("S(3)", perm(Symmetric(3))),
        ("S(4)", perm(Symmetric(4))),
        ("S(5)", perm(Symmetric(5))),
        ("A(4)", perm(Alternating(4))),
        ("A(5)", perm(Alternating(5))),
        ("F(7,3,2)", f21),
        ("F(5,4,2)", perm(Frobenius { m: 5, n: 4, k: 2 })),
        ("F(13,3,3)", perm(Frobenius { m: 13, n: 3, k: 3 })),
        ("cex3", perm(Cex3)),
        ("SL(2,2)", classical(SL, 2, 2)),
        ("SL(2,3)", sl23),
        ("SL(2,5)", classical(SL, 2, 5)),
        ("PSL(2,4)", classical(PSL, 2, 4)),
        ("PSL(2,5)", classical(PSL, 2, 5)),
        ("PSL(2,7)", classical(PSL, 2, 7)),
        ("Q8 x F(7,3,2)", q8_f21),
        ("C(7) x SL(2,3)", c7_sl23),
    ]
}
