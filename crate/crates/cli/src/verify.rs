//! Mechanical checks of the published claims about same-order types.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use sotype_core::arith::prime_divisors;
use sotype_core::{
    certificate_from_invariants, odd_prime_witness_from_spectrum, NonIsoCertificate,
    OddPrimeWitness,
};

use crate::engine::{CliError, Engine};
use crate::report::{format_alpha, format_spectrum, SpectrumReport};

/// The nonabelian simple groups whose order has exactly three prime divisors.
pub const THREE_PRIME_SIMPLE: [&str; 8] = [
    "PSL(2,5)",
    "PSL(2,7)",
    "PSL(2,8)",
    "PSL(2,9)",
    "PSL(2,17)",
    "PSL(3,3)",
    "PSU(3,3)",
    "PSU(4,2)",
];

const ALPHA_FIVE: [&str; 3] = ["PSL(2,7)", "PSL(2,8)", "PSL(2,9)"];

/// Reports for several expressions, computed concurrently, returned in input order.
fn reports(engine: &Engine, exprs: &[&str]) -> Result<Vec<SpectrumReport>, CliError> {
    exprs.par_iter().map(|e| engine.report_text(e)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub group: String,
    pub order: u64,
    pub primes: Vec<u64>,
    pub simple: bool,
    pub alpha: Vec<u64>,
    pub alpha_cardinality: usize,
    pub witness: Option<OddPrimeWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub rows: Vec<TheoremRow>,
    pub failures: Vec<String>,
    pub passed: bool,
}

pub fn cmd_verify_theorem(engine: &Engine) -> Result<TheoremReport, CliError> {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for r in reports(engine, &THREE_PRIME_SIMPLE)? {
        let name = r.expression.clone();
        let primes = prime_divisors(r.order);
        if !r.simple {
            failures.push(format!("{name}: not simple"));
        }
        if primes.len() != 3 {
            failures.push(format!(
                "{name}: order {} has prime divisors {primes:?}, expected three",
                r.order
            ));
        }
        let card = r.alpha_cardinality;
        let expected_ok = match name.as_str() {
            "PSL(2,5)" => card == 4,
            n if ALPHA_FIVE.contains(&n) => card == 5,
            _ => card >= 6,
        };
        if !expected_ok {
            failures.push(format!("{name}: alpha cardinality {card}"));
        }
        if name == "PSL(2,7)" && r.alpha != [1, 21, 42, 48, 56] {
            failures.push(format!(
                "{name}: alpha {}, expected {{1, 21, 42, 48, 56}}",
                format_alpha(&r.alpha)
            ));
        }
        let witness = match odd_prime_witness_from_spectrum(&r.order_spectrum()) {
            Ok(w) => Some(w),
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                None
            }
        };
        rows.push(TheoremRow {
            group: name,
            order: r.order,
            primes,
            simple: r.simple,
            alpha: r.alpha,
            alpha_cardinality: card,
            witness,
        });
    }
    let fives: Vec<&str> = rows
        .iter()
        .filter(|r| r.alpha_cardinality == 5)
        .map(|r| r.group.as_str())
        .collect();
    if fives != ALPHA_FIVE {
        failures.push(format!(
            "groups with |alpha| = 5 are {fives:?}, expected {ALPHA_FIVE:?}"
        ));
    }
    Ok(TheoremReport {
        passed: failures.is_empty(),
        rows,
        failures,
    })
}

fn witness_text(w: &Option<OddPrimeWitness>) -> String {
    match w {
        Some(w) => format!(
            "p={} q={} s_p={} s_q={} s_2={}",
            w.p, w.q, w.s_p, w.s_q, w.s_2
        ),
        None => "none".into(),
    }
}

fn verdict(f: &mut fmt::Formatter<'_>, failures: &[String]) -> fmt::Result {
    for msg in failures {
        writeln!(f, "FAIL: {msg}")?;
    }
    write!(
        f,
        "result: {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    )
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<10} {:>6}  {:<9} {:<7} {:>7}  {:<40} witness",
            "group", "order", "primes", "simple", "|alpha|", "alpha"
        )?;
        for r in &self.rows {
            let primes = r
                .primes
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            writeln!(
                f,
                "{:<10} {:>6}  {:<9} {:<7} {:>7}  {:<40} {}",
                r.group,
                r.order,
                format!("{{{primes}}}"),
                r.simple,
                r.alpha_cardinality,
                format_alpha(&r.alpha),
                witness_text(&r.witness)
            )?;
        }
        verdict(f, &self.failures)
    }
}

/// The groups of order 168 compared with PSL(2,7).
pub const COUNTEREXAMPLES: [&str; 3] = ["Q(8) x F(7,3,2)", "C(7) x SL(2,3)", "cex3"];

/// The spectrum of Q8 x F(7,3,2) as stated in the literature.
pub const STATED_Q8_F21: [(u64, u64); 9] = [
    (1, 1),
    (2, 1),
    (3, 14),
    (4, 6),
    (6, 14),
    (7, 6),
    (12, 84),
    (14, 6),
    (28, 36),
];

/// Intermediate values stated in prose for Q8 x F(7,3,2), checked against
/// enumeration.
const PROSE_CLAIMS: [(u64, u64); 2] = [(2, 8), (7, 56)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleRow {
    pub group: String,
    pub order: u64,
    pub spectrum: BTreeMap<u64, u64>,
    pub alpha: Vec<u64>,
    pub alpha_cardinality: usize,
    pub solvable: bool,
    pub certificate: Option<NonIsoCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProseClaim {
    pub group: String,
    pub order: u64,
    pub stated: u64,
    pub enumerated: u64,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub reference: CounterexampleRow,
    pub candidates: Vec<CounterexampleRow>,
    pub stated_spectrum_matches: bool,
    pub prose_claims: Vec<ProseClaim>,
    pub failures: Vec<String>,
    pub passed: bool,
}

fn row(r: SpectrumReport, certificate: Option<NonIsoCertificate>) -> CounterexampleRow {
    CounterexampleRow {
        group: r.expression,
        order: r.order,
        spectrum: r.spectrum,
        alpha: r.alpha,
        alpha_cardinality: r.alpha_cardinality,
        solvable: r.solvable,
        certificate,
    }
}

pub fn cmd_verify_counterexample(engine: &Engine) -> Result<CounterexampleReport, CliError> {
    let mut exprs = vec!["PSL(2,7)"];
    exprs.extend(COUNTEREXAMPLES);
    let mut all = reports(engine, &exprs)?.into_iter();
    let psl = all.next().expect("reference report");
    let mut failures = Vec::new();

    if psl.alpha != [1, 21, 42, 48, 56] {
        failures.push(format!(
            "PSL(2,7): alpha {}, expected {{1, 21, 42, 48, 56}}",
            format_alpha(&psl.alpha)
        ));
    }
    let psl_inv = psl.invariants();
    let mut candidates = Vec::new();
    for r in all {
        let name = r.expression.clone();
        let cert = certificate_from_invariants(&psl_inv, &r.invariants());
        match &cert {
            Some(c) if c.holds(&psl_inv, &r.invariants()) => {}
            Some(c) => failures.push(format!("{name}: certificate {c:?} does not hold")),
            None if r.solvable => failures.push(format!("{name}: no certificate against PSL(2,7)")),
            None => {}
        }
        candidates.push(row(r, cert));
    }
    for r in std::iter::once(&row(psl.clone(), None)).chain(&candidates) {
        if r.order != 168 {
            failures.push(format!("{}: order {}, expected 168", r.group, r.order));
        }
        if r.alpha_cardinality != 5 {
            failures.push(format!(
                "{}: alpha cardinality {}, expected 5",
                r.group, r.alpha_cardinality
            ));
        }
    }
    for (name, alpha) in [
        ("Dic(2) x F(7,3,2)", [1, 6, 14, 36, 84]),
        ("C(7) x SL(2,3)", [1, 6, 8, 36, 48]),
    ] {
        let r = candidates
            .iter()
            .find(|r| r.group == name)
            .expect("candidate evaluated");
        if r.alpha != alpha {
            failures.push(format!(
                "{name}: alpha {}, expected {}",
                format_alpha(&r.alpha),
                format_alpha(&alpha)
            ));
        }
    }

    let q8f = &candidates[0];
    let stated: BTreeMap<u64, u64> = STATED_Q8_F21.into_iter().collect();
    let stated_spectrum_matches = q8f.spectrum == stated;
    if !stated_spectrum_matches {
        failures.push(format!(
            "{}: spectrum {}, stated {}",
            q8f.group,
            format_spectrum(&q8f.spectrum),
            format_spectrum(&stated)
        ));
    }
    let prose_claims = PROSE_CLAIMS
        .iter()
        .map(|&(t, stated)| {
            let enumerated = q8f.spectrum.get(&t).copied().unwrap_or(0);
            ProseClaim {
                group: q8f.group.clone(),
                order: t,
                stated,
                enumerated,
                consistent: stated == enumerated,
            }
        })
        .collect();

    Ok(CounterexampleReport {
        reference: row(psl, None),
        candidates,
        stated_spectrum_matches,
        prose_claims,
        passed: failures.is_empty(),
        failures,
    })
}

fn cert_text(c: &Option<NonIsoCertificate>) -> String {
    match c {
        None => "none".into(),
        Some(NonIsoCertificate::OrderMismatch { left, right }) => {
            format!("order {left} vs {right}")
        }
        Some(NonIsoCertificate::SpectrumMismatch { t, left, right }) => {
            format!("elements of order {t}: {left} vs {right}")
        }
        Some(NonIsoCertificate::CenterSizeMismatch { left, right }) => {
            format!("center {left} vs {right}")
        }
        Some(NonIsoCertificate::SolvabilityMismatch { left, right }) => {
            format!("solvable {left} vs {right}")
        }
    }
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in std::iter::once(&self.reference).chain(&self.candidates) {
            writeln!(f, "{}", r.group)?;
            writeln!(f, "  order {}, solvable {}", r.order, r.solvable)?;
            writeln!(f, "  spectrum {}", format_spectrum(&r.spectrum))?;
            writeln!(
                f,
                "  alpha {} (|alpha| = {})",
                format_alpha(&r.alpha),
                r.alpha_cardinality
            )?;
            if r.group != self.reference.group {
                writeln!(
                    f,
                    "  not isomorphic to {}: {}",
                    self.reference.group,
                    cert_text(&r.certificate)
                )?;
            }
        }
        writeln!(
            f,
            "stated spectrum of {} matches: {}",
            self.candidates[0].group, self.stated_spectrum_matches
        )?;
        for c in &self.prose_claims {
            let tag = if c.consistent {
                "consistent"
            } else {
                "INCONSISTENT"
            };
            writeln!(
                f,
                "prose claim s_{} = {} for {}: enumerated {} ({tag})",
                c.order, c.stated, c.group, c.enumerated
            )?;
        }
        verdict(f, &self.failures)
    }
}
