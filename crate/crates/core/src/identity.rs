//! Per-node terms `nu(R^(i))` of the extended diagram and their exact sum.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{cartan_of_type, classify, extend, DecompositionLabel, TypeLabel};
use crate::error::Result;
use crate::invariants::{degrees_of, nu, weyl_order};
use crate::rootsys::RootSystem;
use crate::serde_rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeTerm {
    pub node: usize,
    pub decomposition: DecompositionLabel,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub nu: BigRational,
    /// `|W(R)| * nu`, integral for every irreducible type
    #[serde(serialize_with = "serde_rat::serialize")]
    pub scaled: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub terms: Vec<NodeTerm>,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub total: BigRational,
    pub gamma: Vec<usize>,
    pub pass: bool,
}

/// One term per node of the extended diagram: delete, classify, take degrees, `nu`.
pub fn node_terms(label: TypeLabel) -> Result<Vec<NodeTerm>> {
    let rs = RootSystem::generate(&cartan_of_type(label))?;
    let ext = extend(&rs)?;
    let order = BigRational::from_integer(weyl_order(&degrees_of(&label.into())).into());
    (0..=rs.rank())
        .map(|node| {
            let decomposition = classify(&ext.delete_node(node)?)?;
            let nu = nu(&degrees_of(&decomposition));
            let scaled = &order * &nu;
            Ok(NodeTerm {
                node,
                decomposition,
                nu,
                scaled,
            })
        })
        .collect()
}

fn gamma_of(label: TypeLabel, terms: &[NodeTerm]) -> Vec<usize> {
    let whole = DecompositionLabel::from(label);
    terms
        .iter()
        .filter(|t| t.decomposition == whole)
        .map(|t| t.node)
        .collect()
}

/// Nodes `i` whose deletion gives back a system of the same type as `label`.
pub fn gamma_set(label: TypeLabel) -> Result<Vec<usize>> {
    Ok(gamma_of(label, &node_terms(label)?))
}

/// Sums the node terms exactly. A total other than 1 is reported with
/// `pass = false` and the full term table rather than as an error.
pub fn verify_identity(label: TypeLabel) -> Result<IdentityReport> {
    let terms = node_terms(label)?;
    let total: BigRational = terms.iter().map(|t| t.nu.clone()).sum();
    let gamma = gamma_of(label, &terms);
    Ok(IdentityReport {
        label,
        pass: total.is_one(),
        terms,
        total,
        gamma,
    })
}

pub fn verify_many(labels: &[TypeLabel]) -> Vec<Result<IdentityReport>> {
    labels.par_iter().map(|&l| verify_identity(l)).collect()
}

impl IdentityReport {
    /// Sorted multiset of the scaled terms.
    pub fn scaled_multiset(&self) -> Vec<BigRational> {
        let mut v: Vec<BigRational> = self.terms.iter().map(|t| t.scaled.clone()).collect();
        v.sort();
        v
    }

    pub fn to_text(&self) -> String {
        let rows: Vec<[String; 4]> = self
            .terms
            .iter()
            .map(|t| {
                [
                    t.node.to_string(),
                    t.decomposition.to_string(),
                    t.nu.to_string(),
                    t.scaled.to_string(),
                ]
            })
            .collect();
        let header = ["node", "decomposition", "nu", "scaled"];
        let mut width = header.map(str::len);
        for r in &rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "type {}", self.label);
        let line = |cells: [&str; 4]| {
            format!(
                "{:>w0$}  {:<w1$}  {:>w2$}  {:>w3$}",
                cells[0],
                cells[1],
                cells[2],
                cells[3],
                w0 = width[0],
                w1 = width[1],
                w2 = width[2],
                w3 = width[3]
            )
        };
        let _ = writeln!(out, "{}", line(header));
        for r in &rows {
            let _ = writeln!(out, "{}", line([&r[0], &r[1], &r[2], &r[3]]));
        }
        let scaled: BigRational = self.terms.iter().map(|t| t.scaled.clone()).sum();
        let _ = writeln!(out, "sum of scaled = {scaled}");
        let _ = writeln!(out, "total = {}", self.total);
        let _ = writeln!(out, "gamma = {:?}", self.gamma);
        let _ = writeln!(out, "{}", if self.pass { "PASS" } else { "FAIL" });
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("type\tnode\tdecomposition\tnu\tscaled\n");
        for t in &self.terms {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                self.label, t.node, t.decomposition, t.nu, t.scaled
            );
        }
        out
    }
}
