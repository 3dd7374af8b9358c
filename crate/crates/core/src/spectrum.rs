//! Element-order spectra and same-order types.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{lcm, totient};
use crate::element::GroupElement;
use crate::group::{element_order, GroupHandle};

/// The map `t -> s_t` giving the number of elements of each order `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderSpectrum {
    counts: BTreeMap<u64, u64>,
    group_order: u64,
}

/// A violated spectrum invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("counts sum to {sum}, not the group order {order}")]
    SumMismatch { sum: u64, order: u64 },
    #[error("s_1 is {0}, expected 1")]
    IdentityCount(u64),
    #[error("element order {t} does not divide the group order {order}")]
    OrderNotDividing { t: u64, order: u64 },
    #[error("phi({t}) does not divide s_{t} = {count}")]
    TotientNotDividing { t: u64, count: u64 },
    #[error("even group order but s_2 = {0} is even")]
    EvenInvolutionCount(u64),
    #[error("zero count recorded for order {0}")]
    ZeroCount(u64),
}

impl OrderSpectrum {
    /// Builds a spectrum from raw counts; the group order is their sum.
    pub fn from_counts(counts: BTreeMap<u64, u64>) -> Self {
        let group_order = counts.values().sum();
        let counts = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        Self {
            counts,
            group_order,
        }
    }

    /// The spectrum of the trivial group.
    pub fn trivial() -> Self {
        Self::from_counts(BTreeMap::from([(1, 1)]))
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// `s_t`, zero when no element has order `t`.
    pub fn count(&self, t: u64) -> u64 {
        self.counts.get(&t).copied().unwrap_or(0)
    }

    /// The set of element orders.
    pub fn element_orders(&self) -> impl DoubleEndedIterator<Item = u64> + '_ {
        self.counts.keys().copied()
    }

    pub fn alpha(&self) -> AlphaType {
        alpha_type(self)
    }

    pub fn validate(&self) -> Result<(), SpectrumError> {
        let sum: u64 = self.counts.values().sum();
        if sum != self.group_order {
            return Err(SpectrumError::SumMismatch {
                sum,
                order: self.group_order,
            });
        }
        if self.count(1) != 1 {
            return Err(SpectrumError::IdentityCount(self.count(1)));
        }
        for (&t, &count) in &self.counts {
            if count == 0 {
                return Err(SpectrumError::ZeroCount(t));
            }
            if self.group_order % t != 0 {
                return Err(SpectrumError::OrderNotDividing {
                    t,
                    order: self.group_order,
                });
            }
            if count % totient(t) != 0 {
                return Err(SpectrumError::TotientNotDividing { t, count });
            }
        }
        if self.group_order % 2 == 0 && self.count(2) % 2 == 0 {
            return Err(SpectrumError::EvenInvolutionCount(self.count(2)));
        }
        Ok(())
    }
}

impl fmt::Display for OrderSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (t, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}:{c}")?;
        }
        f.write_str("}")
    }
}

/// The set of distinct values `s_t` of a spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlphaType {
    sizes: BTreeSet<u64>,
}

impl AlphaType {
    pub fn sizes(&self) -> &BTreeSet<u64> {
        &self.sizes
    }

    /// `n` such that the group is an alpha_n-group.
    pub fn cardinality(&self) -> usize {
        self.sizes.len()
    }

    pub fn contains(&self, s: u64) -> bool {
        self.sizes.contains(&s)
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.sizes.iter().copied().collect()
    }
}

impl fmt::Display for AlphaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Counts elements of every order in an enumerated group.
pub fn order_spectrum<E: GroupElement>(group: &GroupHandle<E>) -> OrderSpectrum {
    let n = group.order();
    let counts = group
        .elements()
        .par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<u64, u64>, g| {
            *acc.entry(element_order(g, n)).or_default() += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (t, c) in b {
                *a.entry(t).or_default() += c;
            }
            a
        });
    OrderSpectrum {
        counts,
        group_order: n,
    }
}

pub fn alpha_type(spectrum: &OrderSpectrum) -> AlphaType {
    AlphaType {
        sizes: spectrum.counts.values().copied().collect(),
    }
}

/// Spectrum of `A x B` from the spectra of the factors, using
/// `|(x, y)| = lcm(|x|, |y|)`.
pub fn spectrum_direct_product(a: &OrderSpectrum, b: &OrderSpectrum) -> OrderSpectrum {
    let mut counts = BTreeMap::new();
    for (&u, &cu) in &a.counts {
        for (&v, &cv) in &b.counts {
            *counts.entry(lcm(u, v)).or_default() += cu * cv;
        }
    }
    OrderSpectrum {
        counts,
        group_order: a.group_order * b.group_order,
    }
}
