//! Enumerated finite groups and breadth-first closure.

use std::collections::HashMap;

use crate::arith;
use crate::element::{power, ElementKind, GroupElement};
use crate::error::GroupError;

/// Default upper bound on the number of elements enumerated by a closure.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A fully enumerated finite group.
///
/// Elements are stored in discovery order with the identity at index 0, and
/// every element has a stable `u32` index used by the invariant code.
#[derive(Debug, Clone)]
pub struct GroupHandle<E> {
    generators: Vec<E>,
    elements: Vec<E>,
    index: HashMap<E, u32>,
    /// Indices of a non-redundant subset of `generators` that still generates.
    essential: Vec<u32>,
}

impl<E: GroupElement> GroupHandle<E> {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &E {
        &self.elements[i as usize]
    }

    pub fn identity(&self) -> &E {
        &self.elements[0]
    }

    pub fn kind(&self) -> ElementKind {
        self.elements[0].kind()
    }

    pub fn contains(&self, g: &E) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &E) -> Option<u32> {
        self.index.get(g).copied()
    }

    /// Indices of a generating set with no redundant members.
    pub fn essential_generators(&self) -> &[u32] {
        &self.essential
    }

    /// The non-redundant generators as elements; `[identity]` for the trivial
    /// group.
    pub fn generating_set(&self) -> Vec<E> {
        if self.essential.is_empty() {
            return vec![self.identity().clone()];
        }
        self.essential
            .iter()
            .map(|&i| self.element(i).clone())
            .collect()
    }

    /// Index of the product of two indexed elements.
    ///
    /// Panics if the product is not in the group, which would mean the
    /// element set is not closed.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = self.element(a).compose(self.element(b));
        self.index[&prod]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.index[&self.element(a).inverse()]
    }

    /// Primes dividing the group order.
    pub fn prime_divisors(&self) -> Vec<u64> {
        arith::prime_divisors(self.order())
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.essential;
        gens.iter().enumerate().all(|(i, &a)| {
            gens[i + 1..]
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    /// Re-expresses the group over another element type via an injective
    /// homomorphism, keeping element order and indices.
    pub fn map_into<F, T>(&self, f: F) -> GroupHandle<T>
    where
        F: Fn(&E) -> T,
        T: GroupElement,
    {
        let elements: Vec<T> = self.elements.iter().map(&f).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        GroupHandle {
            generators: self.generators.iter().map(&f).collect(),
            elements,
            index,
            essential: self.essential.clone(),
        }
    }
}

/// Enumerates the group generated by `generators`.
///
/// Generators are folded in one at a time: when a generator is not already
/// present, the old elements are multiplied by it alone and newly found
/// elements by every generator kept so far. The element set does not depend on
/// the order of `generators`.
pub fn closure<E: GroupElement>(
    generators: &[E],
    cap: usize,
) -> Result<GroupHandle<E>, GroupError> {
    let first = generators.first().ok_or(GroupError::NoGenerators)?;
    let kind = first.kind();
    if let Some(other) = generators.iter().find(|g| g.kind() != kind) {
        return Err(GroupError::KindMismatch {
            first: kind.to_string(),
            other: other.kind().to_string(),
        });
    }

    let identity = first.identity();
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0u32);
    let mut kept: Vec<E> = Vec::new();
    let mut essential = Vec::new();

    for (gi, g) in generators.iter().enumerate() {
        if index.contains_key(g) {
            continue;
        }
        kept.push(g.clone());
        essential.push(gi as u32);

        let old = elements.len();
        let mut frontier = Vec::new();
        for i in 0..old {
            let y = elements[i].compose(g);
            if !index.contains_key(&y) {
                push_new(&mut elements, &mut index, &mut frontier, y, cap)?;
            }
        }
        while let Some(i) = frontier.pop() {
            for h in &kept {
                let y = elements[i].compose(h);
                if !index.contains_key(&y) {
                    push_new(&mut elements, &mut index, &mut frontier, y, cap)?;
                }
            }
        }
    }

    let handle = GroupHandle {
        generators: generators.to_vec(),
        elements,
        index,
        essential: Vec::new(),
    };
    // `essential` holds positions in `generators`; translate to element indices.
    let essential = essential
        .into_iter()
        .map(|gi| handle.index[&generators[gi as usize]])
        .collect();
    Ok(GroupHandle {
        essential,
        ..handle
    })
}

fn push_new<E: GroupElement>(
    elements: &mut Vec<E>,
    index: &mut HashMap<E, u32>,
    frontier: &mut Vec<usize>,
    y: E,
    cap: usize,
) -> Result<(), GroupError> {
    if elements.len() >= cap {
        return Err(GroupError::CapExceeded { cap });
    }
    let i = elements.len();
    index.insert(y.clone(), i as u32);
    elements.push(y);
    frontier.push(i);
    Ok(())
}

/// Builds a handle for a set already known to be a subgroup of `parent`.
pub(crate) fn subgroup_handle<E: GroupElement>(
    parent: &GroupHandle<E>,
    generators: &[u32],
    members: &[u32],
) -> GroupHandle<E> {
    let mut members = members.to_vec();
    members.sort_unstable();
    let elements: Vec<E> = members.iter().map(|&i| parent.element(i).clone()).collect();
    let index: HashMap<E, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i as u32))
        .collect();
    let gens: Vec<E> = if generators.is_empty() {
        vec![parent.identity().clone()]
    } else {
        generators
            .iter()
            .map(|&i| parent.element(i).clone())
            .collect()
    };
    let essential = if generators.is_empty() {
        Vec::new()
    } else {
        gens.iter().map(|g| index[g]).collect()
    };
    GroupHandle {
        generators: gens,
        elements,
        index,
        essential,
    }
}

/// Order of `g` in a group of order `group_order`.
///
/// Divisor refinement over the factorization `N = prod p^e`: for each prime,
/// `h = g^(N / p^e)` has order `p^j` for the `p`-part of `|g|`, found by
/// raising `h` to the `p`-th power until it becomes the identity.
pub fn element_order<E: GroupElement>(g: &E, group_order: u64) -> u64 {
    match g.fast_order() {
        Some(o) => o,
        None => refined_order(g, group_order),
    }
}

/// The divisor-refinement path of [`element_order`], ignoring any fast path.
pub fn refined_order<E: GroupElement>(g: &E, group_order: u64) -> u64 {
    let mut order = 1;
    for (p, e) in arith::factorize(group_order) {
        let pe = p.pow(e);
        let mut h = power(g, group_order / pe);
        for _ in 0..e {
            if h.is_identity() {
                break;
            }
            h = power(&h, p);
            order *= p;
        }
        debug_assert!(h.is_identity(), "g^{group_order} is not the identity");
    }
    order
}
