//! The element contract every concrete group representation implements.

use std::fmt;
use std::hash::Hash;

use serde::Serialize;

/// Kind tag of an element, including the shape of its parent structure.
///
/// Two elements may only be composed when their kinds are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum ElementKind {
    Permutation {
        degree: usize,
    },
    Matrix {
        dim: usize,
        field_order: u32,
        projective: bool,
    },
    Pair(Box<ElementKind>, Box<ElementKind>),
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementKind::Permutation { degree } => write!(f, "permutation[{degree}]"),
            ElementKind::Matrix {
                dim,
                field_order,
                projective,
            } => {
                let p = if *projective { "projective " } else { "" };
                write!(f, "{p}matrix[{dim}x{dim} over GF({field_order})]")
            }
            ElementKind::Pair(a, b) => write!(f, "pair[{a}, {b}]"),
        }
    }
}

/// A composable, invertible value with a canonical encoding.
///
/// `Eq` and `Hash` must agree with [`GroupElement::encode`]: two elements of the
/// same kind are equal exactly when their encodings are equal.
pub trait GroupElement: Clone + Eq + Hash + fmt::Debug + Send + Sync {
    fn kind(&self) -> ElementKind;

    /// Group product; `self` is applied first for permutation-like elements.
    fn compose(&self, other: &Self) -> Self;

    fn inverse(&self) -> Self;

    /// The identity of the structure `self` lives in.
    fn identity(&self) -> Self;

    fn encode(&self) -> Vec<u8>;

    fn is_identity(&self) -> bool {
        *self == self.identity()
    }

    /// Order computed directly from the representation, when that is cheap.
    fn fast_order(&self) -> Option<u64> {
        None
    }
}

/// `g^e` by repeated squaring.
pub fn power<E: GroupElement>(g: &E, mut e: u64) -> E {
    let mut acc = g.identity();
    let mut base = g.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.compose(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.compose(&base);
        }
    }
    acc
}

/// Element of an external direct product, composed componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair<A, B> {
    pub left: A,
    pub right: B,
}

impl<A, B> Pair<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Self { left, right }
    }
}

impl<A: GroupElement, B: GroupElement> GroupElement for Pair<A, B> {
    fn kind(&self) -> ElementKind {
        ElementKind::Pair(Box::new(self.left.kind()), Box::new(self.right.kind()))
    }

    fn compose(&self, other: &Self) -> Self {
        Pair::new(
            self.left.compose(&other.left),
            self.right.compose(&other.right),
        )
    }

    fn inverse(&self) -> Self {
        Pair::new(self.left.inverse(), self.right.inverse())
    }

    fn identity(&self) -> Self {
        Pair::new(self.left.identity(), self.right.identity())
    }

    // Length-prefixed so the split point is recoverable.
    fn encode(&self) -> Vec<u8> {
        let left = self.left.encode();
        let right = self.right.encode();
        let mut out = Vec::with_capacity(8 + left.len() + right.len());
        out.extend_from_slice(&(left.len() as u64).to_le_bytes());
        out.extend(left);
        out.extend(right);
        out
    }

    fn fast_order(&self) -> Option<u64> {
        Some(crate::arith::lcm(
            self.left.fast_order()?,
            self.right.fast_order()?,
        ))
    }
}
