//! Structural invariants of enumerated groups: center, derived series,
//! conjugacy classes, simplicity, the odd-prime witness and non-isomorphism
//! certificates.
//!
//! Everything here works on element indices of a [`GroupHandle`].

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_divisors};
use crate::element::GroupElement;
use crate::error::GroupError;
use crate::group::{subgroup_handle, GroupHandle};
use crate::spectrum::{order_spectrum, OrderSpectrum};

/// A subgroup of an enumerated group, grown one generator at a time.
pub struct Subgroup<'a, E> {
    group: &'a GroupHandle<E>,
    member: Vec<bool>,
    elements: Vec<u32>,
    generators: Vec<u32>,
}

impl<'a, E: GroupElement> Subgroup<'a, E> {
    /// The trivial subgroup.
    pub fn trivial(group: &'a GroupHandle<E>) -> Self {
        let mut member = vec![false; group.order() as usize];
        member[0] = true;
        Self {
            group,
            member,
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    pub fn generated_by(group: &'a GroupHandle<E>, gens: impl IntoIterator<Item = u32>) -> Self {
        let mut h = Self::trivial(group);
        for g in gens {
            h.adjoin(g);
        }
        h
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, g: u32) -> bool {
        self.member[g as usize]
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// Replaces `self` by `<self, g>`; returns whether it grew.
    pub fn adjoin(&mut self, g: u32) -> bool {
        if self.contains(g) {
            return false;
        }
        self.generators.push(g);
        let mut frontier = Vec::new();
        for i in 0..self.elements.len() {
            let y = self.group.mul(self.elements[i], g);
            self.insert(y, &mut frontier);
        }
        while let Some(x) = frontier.pop() {
            for gi in 0..self.generators.len() {
                let y = self.group.mul(x, self.generators[gi]);
                self.insert(y, &mut frontier);
            }
        }
        true
    }

    fn insert(&mut self, y: u32, frontier: &mut Vec<u32>) {
        if !self.member[y as usize] {
            self.member[y as usize] = true;
            self.elements.push(y);
            frontier.push(y);
        }
    }

    pub fn to_handle(&self) -> GroupHandle<E> {
        subgroup_handle(self.group, &self.generators, &self.elements)
    }
}

fn conjugate<E: GroupElement>(group: &GroupHandle<E>, x: u32, by: u32, by_inv: u32) -> u32 {
    group.mul(group.mul(by_inv, x), by)
}

/// Smallest subgroup containing `seeds` that is normalized by `ambient`.
fn normal_closure<'a, E: GroupElement>(
    group: &'a GroupHandle<E>,
    ambient: &[u32],
    seeds: impl IntoIterator<Item = u32>,
) -> Subgroup<'a, E> {
    let ambient: Vec<(u32, u32)> = ambient.iter().map(|&h| (h, group.inv(h))).collect();
    let mut k = Subgroup::generated_by(group, seeds);
    let mut i = 0;
    while i < k.generators.len() {
        let x = k.generators[i];
        for &(h, h_inv) in &ambient {
            let c = conjugate(group, x, h, h_inv);
            k.adjoin(c);
        }
        i += 1;
    }
    k
}

/// Elements commuting with every element of the group.
pub fn center<E: GroupElement>(group: &GroupHandle<E>) -> GroupHandle<E> {
    let gens = group.essential_generators();
    let central = (0..group.order() as u32)
        .filter(|&x| gens.iter().all(|&g| group.mul(x, g) == group.mul(g, x)));
    Subgroup::generated_by(group, central).to_handle()
}

/// Orders of the derived series and whether it reaches the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedSeries {
    /// `|G|, |G'|, |G''|, ...`, stopping at the first repeated term.
    pub orders: Vec<u64>,
    pub solvable: bool,
}

/// Iterates commutator subgroups until the series stabilizes.
pub fn derived_series<E: GroupElement>(group: &GroupHandle<E>) -> DerivedSeries {
    let mut orders = vec![group.order()];
    let mut gens: Vec<u32> = group.essential_generators().to_vec();
    while *orders.last().unwrap() > 1 {
        let mut commutators = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let ab = group.mul(a, b);
                let ba = group.mul(b, a);
                commutators.push(group.mul(group.inv(ba), ab));
            }
        }
        let next = normal_closure(group, &gens, commutators);
        if next.order() == *orders.last().unwrap() {
            break;
        }
        orders.push(next.order());
        gens = next.generators().to_vec();
    }
    let solvable = *orders.last().unwrap() == 1;
    DerivedSeries { orders, solvable }
}

/// Conjugacy classes as lists of element indices. Classes are listed by their
/// smallest index, so the identity class comes first; each class starts with
/// its smallest member.
pub fn conjugacy_classes<E: GroupElement>(group: &GroupHandle<E>) -> Vec<Vec<u32>> {
    let n = group.order() as usize;
    let gens: Vec<(u32, u32)> = group
        .essential_generators()
        .iter()
        .map(|&g| (g, group.inv(g)))
        .collect();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n as u32 {
        if assigned[x as usize] {
            continue;
        }
        assigned[x as usize] = true;
        let mut class = vec![x];
        let mut i = 0;
        while i < class.len() {
            let y = class[i];
            for &(g, g_inv) in &gens {
                let c = conjugate(group, y, g, g_inv);
                if !assigned[c as usize] {
                    assigned[c as usize] = true;
                    class.push(c);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// True when every non-identity conjugacy class generates the whole group.
///
/// A class generates its own normal closure, so this is the usual criterion;
/// abelian groups short-circuit to "order is prime". The trivial group is not
/// simple.
pub fn is_simple<E: GroupElement>(group: &GroupHandle<E>) -> bool {
    let n = group.order();
    if n == 1 {
        return false;
    }
    if group.is_abelian() {
        return is_prime(n);
    }
    conjugacy_classes(group).iter().skip(1).all(|class| {
        let mut h = Subgroup::trivial(group);
        for &x in class {
            h.adjoin(x);
            if h.order() == n {
                return true;
            }
        }
        false
    })
}

/// Two odd primes dividing `|G|` whose element counts differ, together with
/// the involution count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddPrimeWitness {
    pub p: u64,
    pub q: u64,
    pub s_p: u64,
    pub s_q: u64,
    pub s_2: u64,
}

/// Finds the lexicographically first pair of odd primes `p < q` dividing `|G|`
/// with `s_p != s_q`, and checks that `1, s_2, s_p, s_q` all occur in the
/// same-order type.
pub fn odd_prime_witness<E: GroupElement>(
    group: &GroupHandle<E>,
) -> Result<OddPrimeWitness, GroupError> {
    odd_prime_witness_from_spectrum(&order_spectrum(group))
}

pub fn odd_prime_witness_from_spectrum(
    spectrum: &OrderSpectrum,
) -> Result<OddPrimeWitness, GroupError> {
    let odd: Vec<u64> = prime_divisors(spectrum.group_order())
        .into_iter()
        .filter(|&p| p != 2)
        .collect();
    let (p, q) = odd
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| odd[i + 1..].iter().map(move |&q| (p, q)))
        .find(|&(p, q)| spectrum.count(p) != spectrum.count(q))
        .ok_or_else(|| {
            GroupError::NoWitness(format!(
                "odd prime divisors {odd:?} of {} all have equal counts",
                spectrum.group_order()
            ))
        })?;
    let witness = OddPrimeWitness {
        p,
        q,
        s_p: spectrum.count(p),
        s_q: spectrum.count(q),
        s_2: spectrum.count(2),
    };
    let alpha = spectrum.alpha();
    let required = [1, witness.s_2, witness.s_p, witness.s_q];
    if witness.s_2 == 0 || !required.iter().all(|&s| alpha.contains(s)) {
        return Err(GroupError::NoWitness(format!(
            "{{1, s_2, s_p, s_q}} = {required:?} is not contained in {alpha}"
        )));
    }
    Ok(witness)
}

/// The cheap invariants compared by [`noniso_certificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInvariants {
    pub order: u64,
    pub spectrum: OrderSpectrum,
    pub center_order: u64,
    pub solvable: bool,
}

impl GroupInvariants {
    pub fn compute<E: GroupElement>(group: &GroupHandle<E>) -> Self {
        Self {
            order: group.order(),
            spectrum: order_spectrum(group),
            center_order: center(group).order(),
            solvable: derived_series(group).solvable,
        }
    }
}

/// Why two groups cannot be isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum NonIsoCertificate {
    OrderMismatch {
        left: u64,
        right: u64,
    },
    /// `t` is the largest element order of the left group whose count differs.
    SpectrumMismatch {
        t: u64,
        left: u64,
        right: u64,
    },
    CenterSizeMismatch {
        left: u64,
        right: u64,
    },
    SolvabilityMismatch {
        left: bool,
        right: bool,
    },
}

impl NonIsoCertificate {
    /// Re-checks the cited values against freshly computed invariants.
    pub fn holds(&self, left: &GroupInvariants, right: &GroupInvariants) -> bool {
        match *self {
            Self::OrderMismatch { left: a, right: b } => {
                a != b && left.order == a && right.order == b
            }
            Self::SpectrumMismatch {
                t,
                left: a,
                right: b,
            } => a != b && left.spectrum.count(t) == a && right.spectrum.count(t) == b,
            Self::CenterSizeMismatch { left: a, right: b } => {
                a != b && left.center_order == a && right.center_order == b
            }
            Self::SolvabilityMismatch { left: a, right: b } => {
                a != b && left.solvable == a && right.solvable == b
            }
        }
    }
}

/// Compares order, order spectrum, center size and solvability, in that
/// order. `None` means every tested invariant agrees; it does not prove the
/// groups isomorphic.
pub fn certificate_from_invariants(
    left: &GroupInvariants,
    right: &GroupInvariants,
) -> Option<NonIsoCertificate> {
    if left.order != right.order {
        return Some(NonIsoCertificate::OrderMismatch {
            left: left.order,
            right: right.order,
        });
    }
    if let Some(cert) = spectrum_certificate(&left.spectrum, &right.spectrum) {
        return Some(cert);
    }
    if left.center_order != right.center_order {
        return Some(NonIsoCertificate::CenterSizeMismatch {
            left: left.center_order,
            right: right.center_order,
        });
    }
    if left.solvable != right.solvable {
        return Some(NonIsoCertificate::SolvabilityMismatch {
            left: left.solvable,
            right: right.solvable,
        });
    }
    None
}

fn spectrum_certificate(left: &OrderSpectrum, right: &OrderSpectrum) -> Option<NonIsoCertificate> {
    // Equal totals make a spectrum that agrees on every left order agree
    // everywhere, so searching the left orders suffices.
    left.element_orders()
        .rev()
        .find(|&t| left.count(t) != right.count(t))
        .map(|t| NonIsoCertificate::SpectrumMismatch {
            t,
            left: left.count(t),
            right: right.count(t),
        })
}

/// A non-isomorphism certificate for two enumerated groups, if the cheap
/// invariants tell them apart. Invariants are computed lazily.
pub fn noniso_certificate<A, B>(
    left: &GroupHandle<A>,
    right: &GroupHandle<B>,
) -> Option<NonIsoCertificate>
where
    A: GroupElement,
    B: GroupElement,
{
    if left.order() != right.order() {
        return Some(NonIsoCertificate::OrderMismatch {
            left: left.order(),
            right: right.order(),
        });
    }
    if let Some(cert) = spectrum_certificate(&order_spectrum(left), &order_spectrum(right)) {
        return Some(cert);
    }
    certificate_from_invariants(
        &GroupInvariants::compute(left),
        &GroupInvariants::compute(right),
    )
}
