//! The full verification battery, one entry per check, as run by
//! `weylnu report-all`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::diagram::{cartan_of_type, DecompositionLabel, Family, TypeLabel};
use crate::geometry::{montecarlo_nu, partition_check, planar_cone_fraction};
use crate::identity::verify_many;
use crate::invariants::{degrees_of, exponents_from_heights, nu_of};
use crate::linalg::{rat, ratio};
use crate::rootsys::RootSystem;
use crate::series::{central_binomial, check_all, DEFAULT_ORDER};
use crate::standard_types;
use crate::weylgrp::{
    average_det_one_minus, default_expansion_points, default_solomon_points, enumerate_type, verify_companion,
    verify_restricted_expansion, verify_solomon, verify_steinberg, DEFAULT_CAP,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub criterion: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn result(criterion: u8, name: &'static str, failures: Vec<String>, ok_detail: String) -> CriterionResult {
    CriterionResult {
        criterion,
        name,
        pass: failures.is_empty(),
        detail: if failures.is_empty() { ok_detail } else { failures.join("; ") },
    }
}

fn t(s: &str) -> TypeLabel {
    s.parse().expect("known label")
}

/// Scaled terms `|W| nu(R^(i))` as printed for the exceptional types.
pub fn printed_breakdowns() -> Vec<(TypeLabel, Vec<i64>)> {
    vec![
        (t("G2"), vec![5, 3, 4]),
        (t("F4"), vec![385, 180, 128, 144, 315]),
        (t("E6"), vec![12320, 12320, 12320, 1920, 4320, 4320, 4320]),
        (
            t("E7"),
            vec![765765, 765765, 297675, 297675, 161280, 161280, 90720, 362880],
        ),
        (
            t("E8"),
            vec![
                215656441, 91891800, 55193600, 38102400, 27869184, 19353600, 43545600, 127702575, 77414400,
            ],
        ),
    ]
}

/// `nu` by the closed forms of the classical families and the exceptional table.
pub fn tabulated_nu(label: TypeLabel) -> BigRational {
    let n = label.rank() as u64;
    let cb = |k: u64| BigRational::from_integer(BigInt::from(central_binomial(k)));
    let four = |k: u64| BigRational::from_integer(BigInt::from(4u8).pow(k as u32));
    match (label.family(), n) {
        (Family::A, _) => ratio(1, n as i64 + 1),
        (Family::B | Family::C, _) => cb(n) / four(n),
        (Family::D, _) => ratio(n as i64 - 1, n as i64) * cb(n - 1) / four(n - 1),
        (Family::G, _) => ratio(5, 12),
        (Family::F, _) => ratio(385, 1152),
        (Family::E, 6) => ratio(77, 324),
        (Family::E, 7) => ratio(2431, 9216),
        _ => ratio(30808063, 99532800),
    }
}

pub fn exact_identity() -> CriterionResult {
    let types = standard_types(12);
    let mut failures = Vec::new();
    for r in verify_many(&types) {
        match r {
            Ok(rep) if rep.pass => {}
            Ok(rep) => failures.push(format!("{}: total {}", rep.label, rep.total)),
            Err(e) => failures.push(e.to_string()),
        }
    }
    result(1, "exact identity", failures, format!("{} types sum to exactly 1", types.len()))
}

pub fn nu_tables() -> CriterionResult {
    let mut failures = Vec::new();
    for label in standard_types(12) {
        let got = nu_of(&label.into());
        if got != tabulated_nu(label) {
            failures.push(format!("nu({label}) = {got}"));
        }
    }
    let labels: Vec<TypeLabel> = printed_breakdowns().iter().map(|(l, _)| *l).collect();
    for ((label, printed), rep) in printed_breakdowns().into_iter().zip(verify_many(&labels)) {
        let mut want: Vec<BigRational> = printed.iter().map(|&x| rat(x)).collect();
        want.sort();
        match rep {
            Ok(r) if r.scaled_multiset() == want => {}
            Ok(r) => failures.push(format!(
                "{label}: scaled terms {:?}",
                r.scaled_multiset().iter().map(ToString::to_string).collect::<Vec<_>>()
            )),
            Err(e) => failures.push(e.to_string()),
        }
    }
    result(2, "nu tables", failures, "nu table and five scaled breakdowns match".into())
}

pub fn lemma() -> CriterionResult {
    let checks = check_all(DEFAULT_ORDER as u64);
    let failures = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("part {} n={}: {} vs {} / {}", c.part, c.n, c.lhs, c.direct, c.series))
        .collect();
    result(3, "binomial lemma", failures, format!("{} instances, direct and series", checks.len()))
}

pub fn degree_oracle() -> CriterionResult {
    let mut failures = Vec::new();
    for label in standard_types(12) {
        let rs = match RootSystem::generate(&cartan_of_type(label)) {
            Ok(rs) => rs,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        let oracle = exponents_from_heights(&rs).degrees();
        if oracle != degrees_of(&label.into()) {
            failures.push(format!("{label}: heights give {:?}", oracle.as_slice()));
        }
    }
    result(4, "degree oracle", failures, "catalogue degrees = height-duality degrees".into())
}

pub fn solomon_types() -> Vec<TypeLabel> {
    ["A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "C3", "D4", "D5", "G2", "F4"]
        .iter()
        .map(|s| t(s))
        .collect()
}

pub fn steinberg_types() -> Vec<TypeLabel> {
    ["A1", "A2", "B2", "G2", "A3", "B3", "D4", "F4"].iter().map(|s| t(s)).collect()
}

pub fn solomon() -> CriterionResult {
    let mut failures = Vec::new();
    let types = solomon_types();
    for &label in &types {
        let g = match enumerate_type(label, DEFAULT_CAP) {
            Ok(g) => g,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        match verify_solomon(&g, &default_solomon_points()) {
            Ok(r) if r.pass => {}
            Ok(r) => failures.push(format!("{label}: {} vs {}", r.lhs, r.rhs)),
            Err(e) => failures.push(e.to_string()),
        }
        let avg = average_det_one_minus(&g);
        if avg != rat(1) {
            failures.push(format!("{label}: <det(1-w), 1> = {avg}"));
        }
    }
    result(5, "solomon", failures, format!("{} groups, 5 points each", types.len()))
}

pub fn steinberg_companion() -> CriterionResult {
    let mut failures = Vec::new();
    for label in steinberg_types() {
        let g = match enumerate_type(label, DEFAULT_CAP) {
            Ok(g) => g,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        for r in [verify_steinberg(&g), verify_companion(&g)] {
            if !r.pass {
                failures.push(format!("{label} {}: {} failing elements", r.check, r.points.len()));
            }
        }
    }
    result(6, "steinberg and companion", failures, "every element of every group".into())
}

pub fn expansion() -> CriterionResult {
    let mut failures = Vec::new();
    for label in steinberg_types() {
        let g = match enumerate_type(label, DEFAULT_CAP) {
            Ok(g) => g,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        match verify_restricted_expansion(&g, &default_expansion_points()) {
            Ok(r) if r.pass => {}
            Ok(r) => failures.push(format!("{label}: {} vs {}", r.lhs, r.rhs)),
            Err(e) => failures.push(e.to_string()),
        }
    }
    result(7, "restricted expansion", failures, "3 points per group plus limit checks".into())
}

pub const VOLUME_SEEDS: [u64; 3] = [1, 2, 3];
pub const VOLUME_SAMPLES: usize = 1_000_000;
pub const VOLUME_WORKERS: usize = 4;

pub fn volume_labels() -> Vec<DecompositionLabel> {
    ["A1", "A2", "A1xA1", "B2", "G2", "A3", "B3", "C3"]
        .iter()
        .map(|s| s.parse().expect("known label"))
        .collect()
}

pub fn volume() -> CriterionResult {
    let mut failures = Vec::new();
    for label in volume_labels() {
        let mut good = 0;
        for seed in VOLUME_SEEDS {
            match montecarlo_nu(&label, VOLUME_SAMPLES, seed, VOLUME_WORKERS) {
                Ok(r) if r.z_score.abs() <= 4.0 => good += 1,
                Ok(_) => {}
                Err(e) => failures.push(e.to_string()),
            }
        }
        if good < 2 {
            failures.push(format!("{label}: only {good}/3 seeds within 4 sigma"));
        }
        if label.rank() == 2 {
            let planar = planar_cone_fraction(&label.cartan());
            if planar.as_ref() != Some(&nu_of(&label)) {
                failures.push(format!("{label}: planar angle {planar:?}"));
            }
        }
    }
    result(8, "monte carlo volume", failures, "8 systems, 3 seeds, 1e6 samples".into())
}

pub const PARTITION_SAMPLES: usize = 10_000;
pub const PARTITION_SEED: u64 = 2024;

pub fn partition_types() -> Vec<TypeLabel> {
    ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"]
        .iter()
        .map(|s| t(s))
        .collect()
}

pub fn partition() -> CriterionResult {
    let mut failures = Vec::new();
    for label in partition_types() {
        match partition_check(label, PARTITION_SAMPLES, PARTITION_SEED) {
            Ok(r) if r.pass => {}
            Ok(r) => failures.push(format!(
                "{label}: {} bad, {} disagreeing, max |z| {:.2}",
                r.bad_membership,
                r.disagreements,
                r.cones.iter().map(|c| c.estimate.z_score.abs()).fold(0.0, f64::max)
            )),
            Err(e) => failures.push(e.to_string()),
        }
    }
    result(9, "cone partition", failures, "rank <= 4, 1e4 samples each".into())
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        exact_identity(),
        nu_tables(),
        lemma(),
        degree_oracle(),
        solomon(),
        steinberg_companion(),
        expansion(),
        volume(),
        partition(),
    ]
}
