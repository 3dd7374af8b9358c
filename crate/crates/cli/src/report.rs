use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sotype_core::{
    center, derived_series, is_simple, order_spectrum, AnyElement, GroupHandle, GroupInvariants,
    OrderSpectrum,
};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything the CLI prints about one group. Field order is the JSON key
/// order; maps and alpha are ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub expression: String,
    pub order: u64,
    pub spectrum: BTreeMap<u64, u64>,
    pub alpha: Vec<u64>,
    pub alpha_cardinality: usize,
    pub simple: bool,
    pub solvable: bool,
    pub center_order: u64,
    pub engine_version: String,
}

impl SpectrumReport {
    pub fn compute(expression: &str, group: &GroupHandle<AnyElement>) -> Self {
        let spectrum = order_spectrum(group);
        let alpha = spectrum.alpha().to_vec();
        Self {
            expression: expression.to_string(),
            order: group.order(),
            spectrum: spectrum.counts().clone(),
            alpha_cardinality: alpha.len(),
            alpha,
            simple: is_simple(group),
            solvable: derived_series(group).solvable,
            center_order: center(group).order(),
            engine_version: ENGINE_VERSION.to_string(),
        }
    }

    pub fn order_spectrum(&self) -> OrderSpectrum {
        OrderSpectrum::from_counts(self.spectrum.clone())
    }

    pub fn invariants(&self) -> GroupInvariants {
        GroupInvariants {
            order: self.order,
            spectrum: self.order_spectrum(),
            center_order: self.center_order,
            solvable: self.solvable,
        }
    }

    /// Checks that the fields agree with each other.
    pub fn check_consistency(&self) -> Result<(), String> {
        let sum: u64 = self.spectrum.values().sum();
        if sum != self.order {
            return Err(format!("counts sum to {sum}, order is {}", self.order));
        }
        if self.spectrum.get(&1) != Some(&1) {
            return Err("the identity is not the only element of order 1".into());
        }
        if let Some((t, _)) = self
            .spectrum
            .iter()
            .find(|&(&t, &s)| s == 0 || self.order % t != 0)
        {
            return Err(format!(
                "order {t} has a zero count or does not divide {}",
                self.order
            ));
        }
        let mut distinct: Vec<u64> = self.spectrum.values().copied().collect();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct != self.alpha {
            return Err(format!(
                "alpha {:?} is not the set of counts {distinct:?}",
                self.alpha
            ));
        }
        if self.alpha_cardinality != self.alpha.len() {
            return Err(format!(
                "alpha cardinality {} but {} sizes listed",
                self.alpha_cardinality,
                self.alpha.len()
            ));
        }
        if self.center_order == 0 || self.order % self.center_order != 0 {
            return Err(format!(
                "center order {} does not divide {}",
                self.center_order, self.order
            ));
        }
        if self.simple && self.center_order != 1 && self.center_order != self.order {
            return Err("a simple group with a proper nontrivial center".into());
        }
        Ok(())
    }
}

fn braces(items: impl Iterator<Item = String>) -> String {
    format!("{{{}}}", items.collect::<Vec<_>>().join(", "))
}

pub fn format_alpha(alpha: &[u64]) -> String {
    braces(alpha.iter().map(u64::to_string))
}

pub fn format_spectrum(spectrum: &BTreeMap<u64, u64>) -> String {
    braces(spectrum.iter().map(|(t, s)| format!("{t}:{s}")))
}

impl fmt::Display for SpectrumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group:        {}", self.expression)?;
        writeln!(f, "order:        {}", self.order)?;
        writeln!(f, "spectrum:     {}", format_spectrum(&self.spectrum))?;
        writeln!(
            f,
            "alpha:        {} (|alpha| = {})",
            format_alpha(&self.alpha),
            self.alpha_cardinality
        )?;
        writeln!(f, "simple:       {}", self.simple)?;
        writeln!(f, "solvable:     {}", self.solvable)?;
        write!(f, "center order: {}", self.center_order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::eval_expr;
    use crate::expr::parse_expr;
    use sotype_core::DEFAULT_CAP;

    fn report(text: &str) -> SpectrumReport {
        let e = parse_expr(text).unwrap();
        SpectrumReport::compute(&e.to_string(), &eval_expr(&e, DEFAULT_CAP).unwrap())
    }

    #[test]
    fn psl27_report() {
        let r = report("PSL(2,7)");
        assert_eq!(r.alpha, vec![1, 21, 42, 48, 56]);
        assert!(r.simple && !r.solvable);
        assert_eq!(r.center_order, 1);
        r.check_consistency().unwrap();
    }

    #[test]
    fn trivial_group_report() {
        let r = report("C(1)");
        assert_eq!(r.order, 1);
        assert_eq!(r.alpha, vec![1]);
        assert!(!r.simple && r.solvable);
        r.check_consistency().unwrap();
    }

    #[test]
    fn tampering_is_detected() {
        let good = report("S(3)");
        let mut r = good.clone();
        r.order = 7;
        assert!(r.check_consistency().is_err());
        let mut r = good.clone();
        r.alpha.push(5);
        assert!(r.check_consistency().is_err());
        let mut r = good.clone();
        r.alpha_cardinality = 9;
        assert!(r.check_consistency().is_err());
        let mut r = good;
        r.center_order = 4;
        assert!(r.check_consistency().is_err());
    }
}
