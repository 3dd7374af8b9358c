//! Search for groups with the same order and the same number of distinct
//! element-order counts as a simple group.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use sotype_core::arith::{divisors, gcd, multiplicative_order, pow_mod, prime_power};
use sotype_core::{
    certificate_from_invariants, classical_order, ClassicalFamily, GroupError, NonIsoCertificate,
};

use crate::engine::{CliError, Engine};
use crate::expr::{Atom, GroupExpr};
use crate::report::format_alpha;

/// Simple groups the hunt compares against. Only the first of several
/// entries with the same order is used.
pub const SIMPLE_CATALOG: [(ClassicalFamily, u64, u64); 10] = [
    (ClassicalFamily::PSL, 2, 5),
    (ClassicalFamily::PSL, 2, 7),
    (ClassicalFamily::PSL, 2, 8),
    (ClassicalFamily::PSL, 2, 9),
    (ClassicalFamily::PSL, 2, 11),
    (ClassicalFamily::PSL, 2, 13),
    (ClassicalFamily::PSL, 2, 17),
    (ClassicalFamily::PSL, 3, 3),
    (ClassicalFamily::PSU, 3, 3),
    (ClassicalFamily::PSU, 4, 2),
];

pub const MAX_FACTORS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub simple: String,
    pub candidate: String,
    pub alpha_cardinality: usize,
    pub simple_alpha: Vec<u64>,
    pub candidate_alpha: Vec<u64>,
    pub certificate: NonIsoCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub candidate: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HuntReport {
    pub order: u64,
    pub max_factors: usize,
    pub simple: Option<String>,
    pub candidates_searched: usize,
    pub collisions: Vec<Collision>,
    /// Same alpha cardinality and no distinguishing invariant found.
    pub uncertified: Vec<String>,
    pub skipped: Vec<Skipped>,
    pub note: Option<String>,
}

fn simple_of_order(order: u64) -> Option<GroupExpr> {
    SIMPLE_CATALOG
        .iter()
        .find(|&&(family, n, q)| classical_order(family, n as usize, q).ok() == Some(order))
        .map(|&(family, n, q)| GroupExpr::Atom(Atom::Classical { family, n, q }))
}

/// `k` is kept only if it is the smallest generator of the cyclic subgroup
/// it generates in the unit group, so each action appears once.
fn canonical_multiplier(k: u64, m: u64, n: u64) -> bool {
    (1..n)
        .filter(|&j| gcd(j, n) == 1)
        .all(|j| pow_mod(k, j, m) >= k)
}

/// Every atom of order dividing `order`, other than the trivial group and
/// the duplicates `D(1) = C(2)`, `Dic(1) = C(4)`, `S(2) = C(2)`, `A(3) = C(3)`.
pub fn hunt_atoms(order: u64) -> Vec<Atom> {
    let divs = divisors(order);
    let divides = |n: u64| n > 1 && order % n == 0;
    let mut atoms = Vec::new();
    for &d in &divs {
        if d > 1 {
            atoms.push(Atom::Cyclic(d));
        }
        if d >= 2 && divides(2 * d) {
            atoms.push(Atom::Dihedral(d));
        }
        if d >= 2 && divides(4 * d) {
            atoms.push(Atom::Dicyclic(d));
        }
    }
    let mut fact = 2u64;
    for n in 3.. {
        fact = match fact.checked_mul(n) {
            Some(f) if f / 2 <= order => f,
            _ => break,
        };
        if divides(fact) {
            atoms.push(Atom::Symmetric(n));
        }
        if n >= 4 && divides(fact / 2) {
            atoms.push(Atom::Alternating(n));
        }
    }
    for &m in divs.iter().filter(|&&m| m >= 3) {
        for k in 2..m {
            if gcd(k, m) != 1 {
                continue;
            }
            let n = multiplicative_order(k, m).expect("k is a unit");
            if divides(m * n) && canonical_multiplier(k, m, n) {
                atoms.push(Atom::Frobenius { m, n, k });
            }
        }
    }
    for n in 2u64.. {
        if classical_order(ClassicalFamily::SL, n as usize, 2).map_or(true, |o| o > order) {
            break;
        }
        for q in 2..=order {
            if prime_power(q).is_none() {
                continue;
            }
            match classical_order(ClassicalFamily::SL, n as usize, q) {
                Ok(o) if o > order => break,
                Ok(o) if order % o == 0 => atoms.push(Atom::Classical {
                    family: ClassicalFamily::SL,
                    n,
                    q,
                }),
                _ => {}
            }
        }
    }
    atoms.sort_by_key(|a| a.to_string());
    atoms
}

fn atom_order(atom: &Atom) -> u64 {
    match *atom {
        Atom::Cyclic(n) => n,
        Atom::Dihedral(n) => 2 * n,
        Atom::Dicyclic(n) => 4 * n,
        Atom::Symmetric(n) => (1..=n).product(),
        Atom::Alternating(n) => (1..=n).product::<u64>() / 2,
        Atom::Frobenius { m, n, .. } => m * n,
        Atom::Classical { family, n, q } => classical_order(family, n as usize, q).unwrap_or(0),
        Atom::Cex3 => 168,
        Atom::Perm(_) => 0,
    }
}

/// Products of at most `max_factors` atoms, as non-decreasing index
/// sequences, whose orders multiply to `order`.
pub fn hunt_candidates(order: u64, max_factors: usize) -> Vec<GroupExpr> {
    let atoms = hunt_atoms(order);
    let orders: Vec<u64> = atoms.iter().map(atom_order).collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn walk(
        start: usize,
        remaining: u64,
        left: usize,
        atoms: &[Atom],
        orders: &[u64],
        stack: &mut Vec<usize>,
        out: &mut Vec<GroupExpr>,
    ) {
        if remaining == 1 && !stack.is_empty() {
            let mut it = stack.iter().map(|&i| GroupExpr::Atom(atoms[i].clone()));
            let first = it.next().expect("non-empty");
            out.push(it.fold(first, GroupExpr::product));
            return;
        }
        if left == 0 {
            return;
        }
        for i in start..atoms.len() {
            if remaining % orders[i] == 0 {
                stack.push(i);
                walk(
                    i,
                    remaining / orders[i],
                    left - 1,
                    atoms,
                    orders,
                    stack,
                    out,
                );
                stack.pop();
            }
        }
    }
    walk(0, order, max_factors, &atoms, &orders, &mut stack, &mut out);
    out.sort_by_key(|e| e.to_string());
    out
}

pub fn cmd_hunt(engine: &Engine, order: u64, max_factors: usize) -> Result<HuntReport, CliError> {
    let mut report = HuntReport {
        order,
        max_factors,
        simple: None,
        candidates_searched: 0,
        collisions: Vec::new(),
        uncertified: Vec::new(),
        skipped: Vec::new(),
        note: None,
    };
    let Some(simple) = simple_of_order(order) else {
        report.note = Some(format!(
            "no simple catalog group of order {order} (nonabelian)"
        ));
        return Ok(report);
    };
    if order > engine.cap() as u64 {
        return Err(CliError::Group {
            expression: format!("hunt({order})"),
            source: GroupError::CapExceeded { cap: engine.cap() },
        });
    }
    let s = engine.report(&simple)?;
    let s_inv = s.invariants();
    report.simple = Some(s.expression.clone());

    let candidates = hunt_candidates(order, max_factors.min(MAX_FACTORS));
    report.candidates_searched = candidates.len();
    let results: Vec<_> = candidates
        .par_iter()
        .map(|c| (c, engine.report(c)))
        .collect();
    for (expr, result) in results {
        let r = match result {
            Ok(r) => r,
            Err(CliError::Group { source, .. }) => {
                report.skipped.push(Skipped {
                    candidate: expr.to_string(),
                    reason: source.to_string(),
                });
                continue;
            }
            Err(e) => return Err(e),
        };
        if r.alpha_cardinality != s.alpha_cardinality {
            continue;
        }
        match certificate_from_invariants(&s_inv, &r.invariants()) {
            Some(certificate) => report.collisions.push(Collision {
                simple: s.expression.clone(),
                candidate: r.expression,
                alpha_cardinality: r.alpha_cardinality,
                simple_alpha: s.alpha.clone(),
                candidate_alpha: r.alpha,
                certificate,
            }),
            None => report.uncertified.push(r.expression),
        }
    }
    if report.collisions.is_empty() {
        report.note = Some("none found in searched families".into());
    }
    Ok(report)
}

impl fmt::Display for HuntReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(simple) = &self.simple else {
            return write!(f, "{}", self.note.as_deref().unwrap_or(""));
        };
        writeln!(
            f,
            "order {}: {} candidates with at most {} factors compared against {simple}",
            self.order, self.candidates_searched, self.max_factors
        )?;
        for c in &self.collisions {
            writeln!(
                f,
                "collision: {} has |alpha| = {} like {}; alpha {} vs {}; certificate {}",
                c.candidate,
                c.alpha_cardinality,
                c.simple,
                format_alpha(&c.candidate_alpha),
                format_alpha(&c.simple_alpha),
                serde_json::to_string(&c.certificate).expect("certificate serializes")
            )?;
        }
        for u in &self.uncertified {
            writeln!(f, "no distinguishing invariant: {u}")?;
        }
        for s in &self.skipped {
            writeln!(f, "skipped {}: {}", s.candidate, s.reason)?;
        }
        if let Some(note) = &self.note {
            writeln!(f, "{note}")?;
        }
        write!(f, "{} collision(s)", self.collisions.len())
    }
}
