//! Explicit Weyl groups as integer matrices, and the character identities
//! checked on them: Solomon's invariant formula, Steinberg's alternating sum
//! over proper subsets of the extended generating set, its parabolic
//! companion, and the expansion into rank-`l` subsets.
//!
//! Elements act on row vectors in the simple-root basis: row `i` of the matrix
//! is `w(alpha_i)`. Every row is a root, so entries are small.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{cartan_of_type, TypeLabel};
use crate::error::{Error, Result};
use crate::identity::node_terms;
use crate::invariants::{degrees_of, exponents_from_heights, nu, weyl_order, DegreeVector};
use crate::linalg::{char_poly, det_rational, pow, rat, ratio};
use crate::rootsys::RootSystem;
use crate::serde_rat;

pub const DEFAULT_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    n: usize,
    m: Vec<i8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        Self { n, m }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let m = rows
            .iter()
            .flatten()
            .map(|&x| i8::try_from(x).expect("Weyl matrix entries are root coordinates"))
            .collect();
        Self { n, m }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.m[i * self.n + j] as i64
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    fn entries(&self) -> Vec<i64> {
        self.m.iter().map(|&x| x as i64).collect()
    }

    /// `self o other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.n;
        let mut m = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0i32;
                for k in 0..n {
                    s += other.m[i * n + k] as i32 * self.m[k * n + j] as i32;
                }
                m[i * n + j] = s as i8;
            }
        }
        WeylElement { n, m }
    }

    /// `w(v)` for `v` in simple-root coordinates.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| v[i] * self.get(i, j)).sum())
            .collect()
    }

    pub fn char_poly(&self) -> Vec<i64> {
        char_poly(&self.entries(), self.n)
    }

    pub fn det(&self) -> i64 {
        let c = self.char_poly();
        if self.n.is_multiple_of(2) {
            c[0]
        } else {
            -c[0]
        }
    }

    /// `det(1 - q w)` by exact elimination on the matrix `1 - q w`.
    pub fn det_one_minus(&self, q: &BigRational) -> BigRational {
        let a: Vec<Vec<BigRational>> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let id = if i == j { BigRational::one() } else { BigRational::zero() };
                        id - q * rat(self.get(i, j))
                    })
                    .collect()
            })
            .collect();
        det_rational(&a)
    }
}

/// `det(1 - q w) = sum_k c_k q^(l-k)` from the characteristic polynomial.
fn eval_det_one_minus(cp: &[i64], q: &BigRational) -> BigRational {
    let l = cp.len() - 1;
    // Horner in q over c_0, c_1, ..., c_l
    let mut acc = BigRational::zero();
    for &c in &cp[..=l] {
        acc = acc * q + rat(c);
    }
    acc
}

fn check_t(t: &BigRational) -> Result<()> {
    if t.abs().is_one() {
        return Err(Error::InvalidArgument(format!(
            "|t| = 1 makes det(1 - t w) vanish (t = {t})"
        )));
    }
    Ok(())
}

/// `delta_W(q, t)(w) = det(1 - q w) / det(1 - t w)`.
pub fn delta_value(w: &WeylElement, q: &BigRational, t: &BigRational) -> Result<BigRational> {
    check_t(t)?;
    Ok(w.det_one_minus(q) / w.det_one_minus(t))
}

/// A Weyl group with its extended generating set: generator `j` is the
/// reflection for node `j` of the extended diagram (`0` is `s_theta`).
#[derive(Clone, Debug)]
pub struct GroupTable {
    label: TypeLabel,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    generators: Vec<WeylElement>,
}

impl GroupTable {
    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    fn product_index(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    /// Left multiplication by element `w` as a permutation of indices.
    fn left_mult(&self, w: usize) -> Vec<u32> {
        (0..self.order())
            .map(|x| self.product_index(w, x) as u32)
            .collect()
    }

    /// Multiset of characteristic polynomials (one per conjugacy-invariant
    /// value) with multiplicities; class functions of `det` type only need this.
    pub fn char_poly_counts(&self) -> Vec<(Vec<i64>, usize)> {
        let mut counts: HashMap<Vec<i64>, usize> = HashMap::new();
        for w in &self.elements {
            *counts.entry(w.char_poly()).or_default() += 1;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort();
        v
    }

    /// `W_J` for `J` given as a bitmask over extended nodes `0..=l`.
    pub fn subgroup(&self, mask: u32) -> Vec<usize> {
        let gens: Vec<usize> = (0..self.generators.len())
            .filter(|&j| mask & (1 << j) != 0)
            .map(|j| self.index[&self.generators[j]])
            .collect();
        let id = self.index[&WeylElement::identity(self.rank())];
        let mut seen = vec![false; self.order()];
        seen[id] = true;
        let mut out = vec![id];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.product_index(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn cosets(&self, mask: u32) -> SubgroupCosets {
        let subgroup = self.subgroup(mask);
        let mut coset_of = vec![u32::MAX; self.order()];
        let mut reps = Vec::new();
        for x in 0..self.order() {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &h in &subgroup {
                coset_of[self.product_index(x, h)] = c;
            }
        }
        SubgroupCosets {
            mask,
            subgroup,
            coset_of,
            reps,
        }
    }
}

/// Left cosets `x W_J` of a subgroup generated by a subset of the extended generators.
#[derive(Clone, Debug)]
pub struct SubgroupCosets {
    pub mask: u32,
    pub subgroup: Vec<usize>,
    coset_of: Vec<u32>,
    reps: Vec<usize>,
}

impl SubgroupCosets {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn subset_size(&self) -> u32 {
        self.mask.count_ones()
    }

    fn fixed_with(&self, lmul: &[u32]) -> i64 {
        self.reps
            .iter()
            .enumerate()
            .filter(|&(c, &x)| self.coset_of[lmul[x] as usize] as usize == c)
            .count() as i64
    }
}

/// Value of the permutation character `1_{W_J}^W` at element `w`: the
/// number of cosets `x W_J` fixed by left multiplication.
pub fn perm_character(table: &GroupTable, cosets: &SubgroupCosets, w: &WeylElement) -> Result<i64> {
    let wi = table
        .index_of(w)
        .ok_or_else(|| Error::InvalidArgument("element not in group table".into()))?;
    Ok(cosets
        .reps
        .iter()
        .enumerate()
        .filter(|&(c, &x)| cosets.coset_of[table.product_index(wi, x)] as usize == c)
        .count() as i64)
}

/// Breadth-first closure over the simple reflections.
pub fn enumerate_group(rs: &RootSystem, label: TypeLabel, cap: usize) -> Result<GroupTable> {
    let theta = rs.highest_root()?;
    let l = rs.rank();
    let expected = weyl_order(&exponents_from_heights(rs).degrees());
    if expected > cap.into() {
        return Err(Error::CapExceeded {
            cap,
            expected: expected.to_string(),
        });
    }
    let mut generators = vec![WeylElement::from_rows(&rs.reflection_matrix(&theta)?)];
    for i in 0..l {
        let alpha = crate::rootsys::Root::simple(l, i);
        generators.push(WeylElement::from_rows(&rs.reflection_matrix(&alpha)?));
    }
    let id = WeylElement::identity(l);
    let mut index = HashMap::from([(id.clone(), 0usize)]);
    let mut elements = vec![id];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in &generators[1..] {
            let y = x.compose(g);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded {
                        cap,
                        expected: expected.to_string(),
                    });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    Ok(GroupTable {
        label,
        elements,
        index,
        generators,
    })
}

pub fn enumerate_type(label: TypeLabel, cap: usize) -> Result<GroupTable> {
    let rs = RootSystem::generate(&cartan_of_type(label))?;
    enumerate_group(&rs, label, cap)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointResult {
    pub at: String,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub lhs: BigRational,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub rhs: BigRational,
    pub pass: bool,
}

/// Outcome of one identity check. `points` lists every sample point for the
/// evaluation checks and only the failing elements for the per-element ones;
/// top-level `lhs`/`rhs` repeat the first failing entry, else the first entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    #[serde(rename = "type")]
    pub label: String,
    pub check: &'static str,
    pub checked: usize,
    pub points: Vec<PointResult>,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub lhs: BigRational,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub rhs: BigRational,
    pub pass: bool,
}

impl CheckReport {
    fn build(label: TypeLabel, check: &'static str, checked: usize, all: Vec<PointResult>, keep_all: bool) -> Self {
        let pass = all.iter().all(|p| p.pass);
        let witness = all
            .iter()
            .find(|p| !p.pass)
            .or_else(|| all.first())
            .cloned();
        let (lhs, rhs) = witness
            .map(|p| (p.lhs, p.rhs))
            .unwrap_or_else(|| (BigRational::zero(), BigRational::zero()));
        let points = if keep_all {
            all
        } else {
            all.into_iter().filter(|p| !p.pass).collect()
        };
        Self {
            label: label.to_string(),
            check,
            checked,
            points,
            lhs,
            rhs,
            pass,
        }
    }
}

pub fn default_solomon_points() -> Vec<(BigRational, BigRational)> {
    vec![
        (ratio(2, 3), ratio(1, 2)),
        (rat(1), rat(0)),
        (ratio(-1, 2), ratio(1, 3)),
        (rat(3), ratio(-2, 5)),
        (ratio(5, 7), rat(2)),
    ]
}

pub fn default_expansion_points() -> Vec<BigRational> {
    vec![ratio(1, 2), ratio(1, 3), ratio(-2, 7)]
}

/// `prod_i (1 - q t^(d_i - 1)) / (1 - t^(d_i))`.
pub fn solomon_product(d: &DegreeVector, q: &BigRational, t: &BigRational) -> BigRational {
    d.as_slice()
        .iter()
        .map(|&di| {
            let di = di as u32;
            (BigRational::one() - q * pow(t, di - 1)) / (BigRational::one() - pow(t, di))
        })
        .fold(BigRational::one(), |a, b| a * b)
}

/// Group average `<1, delta_W(q,t)>_W` against the degree product.
pub fn verify_solomon(table: &GroupTable, points: &[(BigRational, BigRational)]) -> Result<CheckReport> {
    for (_, t) in points {
        check_t(t)?;
    }
    let degrees = degrees_of(&table.label().into());
    let classes = table.char_poly_counts();
    let order = rat(table.order() as i64);
    let results = points
        .iter()
        .map(|(q, t)| {
            let sum: BigRational = classes
                .iter()
                .map(|(cp, k)| rat(*k as i64) * eval_det_one_minus(cp, q) / eval_det_one_minus(cp, t))
                .sum();
            let lhs = sum / &order;
            let rhs = solomon_product(&degrees, q, t);
            PointResult {
                at: format!("q={q},t={t}"),
                pass: lhs == rhs,
                lhs,
                rhs,
            }
        })
        .collect();
    Ok(CheckReport::build(table.label(), "solomon", points.len(), results, true))
}

/// `|W|^-1 sum_w det(1 - w)`, which must be 1.
pub fn average_det_one_minus(table: &GroupTable) -> BigRational {
    let sum: BigRational = table
        .char_poly_counts()
        .iter()
        .map(|(cp, k)| rat(*k as i64) * rat(cp.iter().sum()))
        .sum();
    sum / rat(table.order() as i64)
}

fn alternating_check(
    table: &GroupTable,
    check: &'static str,
    masks: &[u32],
    sign: impl Fn(u32) -> i64 + Sync,
    lhs_of: impl Fn(&WeylElement) -> i64 + Sync,
) -> CheckReport {
    let cosets: Vec<SubgroupCosets> = masks.par_iter().map(|&m| table.cosets(m)).collect();
    let results: Vec<PointResult> = (0..table.order())
        .into_par_iter()
        .map(|w| {
            let lmul = table.left_mult(w);
            let rhs: i64 = cosets
                .iter()
                .map(|c| sign(c.subset_size()) * c.fixed_with(&lmul))
                .sum();
            let lhs = lhs_of(&table.elements[w]);
            PointResult {
                at: format!("w{w}={:?}", table.elements[w].rows()),
                lhs: rat(lhs),
                rhs: rat(rhs),
                pass: lhs == rhs,
            }
        })
        .collect();
    CheckReport::build(table.label(), check, table.order(), results, false)
}

/// `det(1 - w) = sum_{J proper subset of S_0} (-1)^(|S| - |J|) 1_{W_J}^W(w)` for every `w`.
pub fn verify_steinberg(table: &GroupTable) -> CheckReport {
    let l = table.rank() as u32;
    let full = (1u32 << (l + 1)) - 1;
    let masks: Vec<u32> = (0..full).collect();
    alternating_check(
        table,
        "steinberg",
        &masks,
        |size| if (l - size).is_multiple_of(2) { 1 } else { -1 },
        |w| w.char_poly().iter().sum(),
    )
}

/// `det(w) = sum_{J subset of S} (-1)^|J| 1_{W_J}^W(w)` for every `w`.
pub fn verify_companion(table: &GroupTable) -> CheckReport {
    let l = table.rank() as u32;
    // simple generators are nodes 1..=l, i.e. even masks
    let masks: Vec<u32> = (0..(1u32 << l)).map(|m| m << 1).collect();
    alternating_check(
        table,
        "companion",
        &masks,
        |size| if size % 2 == 0 { 1 } else { -1 },
        WeylElement::det,
    )
}

/// `<delta_W(1,0), delta_W(1,t)>_W` against the sum over the `l`-subsets
/// `S_0 - {s_j}` of `prod_i (1 - t^(d_i^(j) - 1)) / (1 - t^(d_i^(j)))`, with
/// the degrees `d^(j)` read off the node decompositions of the extended diagram.
///
/// Also checked: `|W_J|` by closure equals `prod d^(j)`, and at
/// `t = 1 - 1/k` for `k = 10^3, 10^4` both sides agree, each `j`-term moves
/// strictly closer to `nu(R^(j))`, and the left side moves closer to 1.
pub fn verify_restricted_expansion(table: &GroupTable, t_samples: &[BigRational]) -> Result<CheckReport> {
    for t in t_samples {
        check_t(t)?;
    }
    let label = table.label();
    let l = table.rank();
    let terms = node_terms(label)?;
    let node_degrees: Vec<DegreeVector> = terms.iter().map(|t| degrees_of(&t.decomposition)).collect();
    let classes = table.char_poly_counts();
    let order = rat(table.order() as i64);
    let one = BigRational::one();

    let lhs_at = |t: &BigRational| -> BigRational {
        let sum: BigRational = classes
            .iter()
            .map(|(cp, k)| {
                let d1 = eval_det_one_minus(cp, &one);
                rat(*k as i64) * &d1 * &d1 / eval_det_one_minus(cp, t)
            })
            .sum();
        sum / &order
    };
    let term_at = |d: &DegreeVector, t: &BigRational| solomon_product(d, &one, t);
    let rhs_at = |t: &BigRational| -> BigRational { node_degrees.iter().map(|d| term_at(d, t)).sum() };

    let mut results = Vec::new();
    for t in t_samples {
        let lhs = lhs_at(t);
        let rhs = rhs_at(t);
        results.push(PointResult {
            at: format!("t={t}"),
            pass: lhs == rhs,
            lhs,
            rhs,
        });
    }

    for (j, d) in node_degrees.iter().enumerate() {
        let mask = ((1u32 << (l + 1)) - 1) & !(1 << j);
        let closure = table.subgroup(mask).len();
        let product = weyl_order(d);
        results.push(PointResult {
            at: format!("|W_J| for J = S_0 - s_{j}"),
            lhs: rat(closure as i64),
            rhs: BigRational::from_integer(BigInt::from(product.clone())),
            pass: product == closure.into(),
        });
    }

    let near = [ratio(999, 1000), ratio(9999, 10000)];
    let lhs_near: Vec<BigRational> = near.iter().map(&lhs_at).collect();
    for (t, lhs) in near.iter().zip(&lhs_near) {
        let rhs = rhs_at(t);
        results.push(PointResult {
            at: format!("t={t}"),
            pass: *lhs == rhs,
            lhs: lhs.clone(),
            rhs,
        });
    }
    let closer = (&lhs_near[1] - &one).abs() < (&lhs_near[0] - &one).abs();
    results.push(PointResult {
        at: "lhs -> 1 as t -> 1".into(),
        lhs: lhs_near[1].clone(),
        rhs: one.clone(),
        pass: closer,
    });
    for (j, d) in node_degrees.iter().enumerate() {
        let target = nu(d);
        let far = term_at(d, &near[0]);
        let close = term_at(d, &near[1]);
        let pass = (&close - &target).abs() < (&far - &target).abs();
        results.push(PointResult {
            at: format!("term {j} -> nu({})", terms[j].decomposition),
            lhs: close,
            rhs: target,
            pass,
        });
    }
    Ok(CheckReport::build(label, "expansion", results.len(), results, true))
}
