//! A dynamically typed element, for groups assembled at run time.

use crate::element::{ElementKind, GroupElement, Pair};
use crate::error::GroupError;
use crate::group::{closure, GroupHandle};
use crate::matrix::Matrix;
use crate::perm::{disjoint_generators, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyElement {
    Perm(Permutation),
    Matrix(Matrix),
    Pair(Box<Pair<AnyElement, AnyElement>>),
}

impl From<Permutation> for AnyElement {
    fn from(p: Permutation) -> Self {
        AnyElement::Perm(p)
    }
}

impl From<Matrix> for AnyElement {
    fn from(m: Matrix) -> Self {
        AnyElement::Matrix(m)
    }
}

impl GroupElement for AnyElement {
    fn kind(&self) -> ElementKind {
        match self {
            AnyElement::Perm(p) => p.kind(),
            AnyElement::Matrix(m) => m.kind(),
            AnyElement::Pair(pair) => pair.kind(),
        }
    }

    fn compose(&self, other: &Self) -> Self {
        match (self, other) {
            (AnyElement::Perm(a), AnyElement::Perm(b)) => AnyElement::Perm(a.compose(b)),
            (AnyElement::Matrix(a), AnyElement::Matrix(b)) => AnyElement::Matrix(a.compose(b)),
            (AnyElement::Pair(a), AnyElement::Pair(b)) => AnyElement::Pair(Box::new(a.compose(b))),
            (a, b) => panic!("cannot compose {} with {}", a.kind(), b.kind()),
        }
    }

    fn inverse(&self) -> Self {
        match self {
            AnyElement::Perm(p) => AnyElement::Perm(p.inverse()),
            AnyElement::Matrix(m) => AnyElement::Matrix(m.inverse()),
            AnyElement::Pair(pair) => AnyElement::Pair(Box::new(pair.inverse())),
        }
    }

    fn identity(&self) -> Self {
        match self {
            AnyElement::Perm(p) => AnyElement::Perm(p.identity()),
            AnyElement::Matrix(m) => AnyElement::Matrix(m.identity()),
            AnyElement::Pair(pair) => AnyElement::Pair(Box::new(pair.identity())),
        }
    }

    fn encode(&self) -> Vec<u8> {
        match self {
            AnyElement::Perm(p) => p.encode(),
            AnyElement::Matrix(m) => m.encode(),
            AnyElement::Pair(pair) => pair.encode(),
        }
    }

    fn is_identity(&self) -> bool {
        match self {
            AnyElement::Perm(p) => p.is_identity(),
            AnyElement::Matrix(m) => m.is_identity(),
            AnyElement::Pair(pair) => pair.left.is_identity() && pair.right.is_identity(),
        }
    }

    fn fast_order(&self) -> Option<u64> {
        match self {
            AnyElement::Perm(p) => p.fast_order(),
            AnyElement::Matrix(m) => m.fast_order(),
            AnyElement::Pair(pair) => pair.fast_order(),
        }
    }
}

fn as_perm(g: &AnyElement) -> Option<&Permutation> {
    match g {
        AnyElement::Perm(p) => Some(p),
        _ => None,
    }
}

/// `A x B`. Two permutation groups act on disjoint point sets; any other
/// combination uses pair elements.
pub fn any_direct_product(
    a: &GroupHandle<AnyElement>,
    b: &GroupHandle<AnyElement>,
    cap: usize,
) -> Result<GroupHandle<AnyElement>, GroupError> {
    if let (Some(_), Some(_)) = (as_perm(a.identity()), as_perm(b.identity())) {
        let gens = disjoint_generators(&perm_generators(a), &perm_generators(b));
        let gens: Vec<AnyElement> = gens.into_iter().map(AnyElement::Perm).collect();
        return closure(&gens, cap);
    }
    let ea = a.identity().clone();
    let eb = b.identity().clone();
    let gens: Vec<AnyElement> = a
        .generating_set()
        .into_iter()
        .map(|g| pair(g, eb.clone()))
        .chain(b.generating_set().into_iter().map(|g| pair(ea.clone(), g)))
        .collect();
    closure(&gens, cap)
}

fn pair(a: AnyElement, b: AnyElement) -> AnyElement {
    AnyElement::Pair(Box::new(Pair::new(a, b)))
}

fn perm_generators(g: &GroupHandle<AnyElement>) -> Vec<Permutation> {
    g.generating_set()
        .iter()
        .map(|x| as_perm(x).expect("checked permutation kind").clone())
        .collect()
}
