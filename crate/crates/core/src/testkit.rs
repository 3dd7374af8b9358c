//! Independent oracles for tests. Nothing here goes through closure
//! enumeration or the fast order paths.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arith::totient;
use crate::element::GroupElement;
use crate::field::FiniteField;
use crate::group::GroupHandle;
use crate::spectrum::OrderSpectrum;

/// Order by repeated composition.
pub fn naive_order<E: GroupElement>(g: &E) -> u64 {
    let mut x = g.clone();
    let mut n = 1;
    while x != g.identity() {
        x = x.compose(g);
        n += 1;
    }
    n
}

/// Checks associativity, identity and inverse laws on random triples.
pub fn check_axioms<E: GroupElement, R: Rng>(
    group: &GroupHandle<E>,
    samples: usize,
    rng: &mut R,
) -> Result<(), String> {
    let elements = group.elements();
    let e = group.identity();
    for _ in 0..samples {
        let a = elements.choose(rng).unwrap();
        let b = elements.choose(rng).unwrap();
        let c = elements.choose(rng).unwrap();
        if a.compose(b).compose(c) != a.compose(&b.compose(c)) {
            return Err(format!("associativity fails on {a:?}, {b:?}, {c:?}"));
        }
        if e.compose(a) != *a || a.compose(e) != *a {
            return Err(format!("identity law fails on {a:?}"));
        }
        if !a.compose(&a.inverse()).is_identity() || !a.inverse().compose(a).is_identity() {
            return Err(format!("inverse law fails on {a:?}"));
        }
        if !group.contains(&a.compose(b)) || !group.contains(&a.inverse()) {
            return Err(format!("not closed at {a:?}, {b:?}"));
        }
        if (a == b) != (a.encode() == b.encode()) {
            return Err(format!("encoding disagrees with equality on {a:?}, {b:?}"));
        }
    }
    Ok(())
}

/// Spectrum invariants checked from first principles.
pub fn check_spectrum(spectrum: &OrderSpectrum) -> Result<(), String> {
    let n = spectrum.group_order();
    let counts = spectrum.counts();
    if counts.values().sum::<u64>() != n {
        return Err(format!("sum of counts != {n}"));
    }
    if counts.get(&1) != Some(&1) {
        return Err("s_1 != 1".into());
    }
    for (&t, &s) in counts {
        if n % t != 0 {
            return Err(format!("{t} does not divide {n}"));
        }
        if s % totient(t) != 0 {
            return Err(format!("phi({t}) does not divide {s}"));
        }
    }
    if n % 2 == 0 && counts.get(&2).copied().unwrap_or(0) % 2 == 0 {
        return Err("s_2 even for an even-order group".into());
    }
    Ok(())
}

/// Square matrices as plain row-major vectors, with their own arithmetic.
fn mat_mul(f: &FiniteField, n: usize, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = (0..n).fold(0, |acc, l| f.add(acc, f.mul(a[i * n + l], b[l * n + j])));
        }
    }
    out
}

/// Determinant by cofactor expansion along the first row.
fn det_cofactor(f: &FiniteField, n: usize, m: &[u32]) -> u32 {
    if n == 1 {
        return m[0];
    }
    let mut acc = 0;
    for col in 0..n {
        let minor: Vec<u32> = (1..n)
            .flat_map(|r| (0..n).filter(move |&c| c != col).map(move |c| (r, c)))
            .map(|(r, c)| m[r * n + c])
            .collect();
        let term = f.mul(m[col], det_cofactor(f, n - 1, &minor));
        acc = if col % 2 == 0 {
            f.add(acc, term)
        } else {
            f.sub(acc, term)
        };
    }
    acc
}

fn naive_matrix_order(
    f: &FiniteField,
    n: usize,
    m: &[u32],
    same: impl Fn(&[u32], &[u32]) -> bool,
) -> u64 {
    let id: Vec<u32> = (0..n * n).map(|i| u32::from(i / n == i % n)).collect();
    let mut x = m.to_vec();
    let mut k = 1;
    while !same(&x, &id) {
        x = mat_mul(f, n, &x, m);
        k += 1;
    }
    k
}

/// Every `n x n` matrix of determinant 1, by exhaustive search.
pub fn brute_force_sl(f: &FiniteField, n: usize) -> Vec<Vec<u32>> {
    let q = f.order() as u64;
    let total = q.pow((n * n) as u32);
    (0..total)
        .map(|mut code| {
            (0..n * n)
                .map(|_| {
                    let d = (code % q) as u32;
                    code /= q;
                    d
                })
                .collect::<Vec<u32>>()
        })
        .filter(|m| det_cofactor(f, n, m) == 1)
        .collect()
}

/// Order and spectrum of SL(n, q) by exhaustive search and naive powering.
pub fn brute_force_sl_spectrum(f: &FiniteField, n: usize) -> OrderSpectrum {
    let mut counts = BTreeMap::new();
    for m in brute_force_sl(f, n) {
        *counts
            .entry(naive_matrix_order(f, n, &m, |a, b| a == b))
            .or_default() += 1;
    }
    OrderSpectrum::from_counts(counts)
}

/// Order and spectrum of PSL(n, q): SL(n, q) modulo the scalars it contains,
/// each coset represented by its lexicographically smallest member.
pub fn brute_force_psl_spectrum(f: &FiniteField, n: usize) -> OrderSpectrum {
    let scalars: Vec<u32> = (1..f.order())
        .filter(|&l| f.pow(l, n as u64) == 1)
        .collect();
    let scale = |m: &[u32], l: u32| -> Vec<u32> { m.iter().map(|&x| f.mul(x, l)).collect() };
    let canonical = |m: &[u32]| -> Vec<u32> { scalars.iter().map(|&l| scale(m, l)).min().unwrap() };
    let mut seen = HashSet::new();
    let mut counts = BTreeMap::new();
    for m in brute_force_sl(f, n) {
        let c = canonical(&m);
        if !seen.insert(c.clone()) {
            continue;
        }
        let same = |a: &[u32], b: &[u32]| canonical(a) == canonical(b);
        *counts
            .entry(naive_matrix_order(f, n, &c, same))
            .or_default() += 1;
    }
    OrderSpectrum::from_counts(counts)
}

/// A random word in the given generators.
pub fn random_product<E: GroupElement, R: Rng>(gens: &[E], length: usize, rng: &mut R) -> E {
    let mut x = gens[0].identity();
    for _ in 0..length {
        x = x.compose(gens.choose(rng).unwrap());
    }
    x
}
