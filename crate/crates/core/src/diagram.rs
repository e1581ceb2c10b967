//! Cartan matrices and Dynkin diagrams.
//!
//! Convention: `a[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`, so the
//! simple reflection `s_j` sends `alpha_i` to `alpha_i - a[i][j] alpha_j`.
//!
//! Canonical node numbering (0-based, Bourbaki order shifted down by one):
//!
//! ```text
//! A_n  0 - 1 - ... - (n-1)
//! B_n  0 - 1 - ... - (n-2) => (n-1)      last node short
//! C_n  0 - 1 - ... - (n-2) <= (n-1)      last node long
//! D_n  0 - 1 - ... - (n-3) - (n-2)
//!                        \ - (n-1)        fork at node n-3
//! E_n  0 - 2 - 3 - 4 - ... - (n-1)
//!              |
//!              1                          node 1 hangs off node 3
//! F_4  0 - 1 => 2 - 3                     nodes 0,1 long
//! G_2  0 <= 1                             node 0 short, node 1 long
//! ```

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{leading_minors, rat};
use crate::rootsys::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn rule(self) -> &'static str {
        match self {
            Family::A => "A_n needs n >= 1",
            Family::B => "B_n needs n >= 2",
            Family::C => "C_n needs n >= 2",
            Family::D => "D_n needs n >= 4",
            Family::E => "E_n needs n in {6, 7, 8}",
            Family::F => "F_n needs n = 4",
            Family::G => "G_n needs n = 2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An irreducible Cartan type such as `E8` or `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeLabel {
    family: Family,
    rank: usize,
}

impl TypeLabel {
    /// Strict constructor: only admissible `(family, rank)` pairs.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::Inadmissible {
                label: format!("{family}{rank}"),
                rule: family.rule(),
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The classification representative: `C2` is reported as `B2`.
    pub fn canonical(self) -> Self {
        match (self.family, self.rank) {
            (Family::C, 2) => Self { family: Family::B, rank: 2 },
            _ => self,
        }
    }

    /// Expands the low-rank aliases `B1, C1 -> A1`, `D2 -> A1xA1`, `D3 -> A3`;
    /// `B0`, `C0`, `D0` are the trivial system.
    fn expand(family: Family, rank: usize) -> Result<Vec<TypeLabel>> {
        let a = |n| TypeLabel { family: Family::A, rank: n };
        Ok(match (family, rank) {
            (_, 0) if matches!(family, Family::B | Family::C | Family::D) => vec![],
            (Family::B | Family::C, 1) => vec![a(1)],
            (Family::D, 2) => vec![a(1), a(1)],
            (Family::D, 3) => vec![a(3)],
            _ => vec![TypeLabel::new(family, rank)?.canonical()],
        })
    }

    /// Parses a family sweep `B2..B12` or a single label.
    pub fn parse_sweep(s: &str) -> Result<Vec<TypeLabel>> {
        match s.split_once("..") {
            None => Ok(vec![s.parse()?]),
            Some((lo, hi)) => {
                let lo: TypeLabel = lo.parse()?;
                let (fam, hi_rank) = split_label(hi)?;
                if fam != lo.family || hi_rank < lo.rank {
                    return Err(Error::Parse(s.to_string()));
                }
                (lo.rank..=hi_rank).map(|r| TypeLabel::new(fam, r)).collect()
            }
        }
    }
}

fn split_label(s: &str) -> Result<(Family, usize)> {
    let s = s.trim();
    let mut chars = s.chars();
    let fam = chars
        .next()
        .and_then(Family::from_char)
        .ok_or_else(|| Error::Parse(s.to_string()))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(s.to_string()))?;
    Ok((fam, rank))
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Accepts admissible labels plus the irreducible aliases `B1`, `C1`, `D3`.
    fn from_str(s: &str) -> Result<Self> {
        let (fam, rank) = split_label(s)?;
        if (fam, rank) == (Family::C, 2) {
            return TypeLabel::new(fam, rank);
        }
        match TypeLabel::expand(fam, rank)?.as_slice() {
            [one] => Ok(*one),
            _ => Err(Error::Inadmissible {
                label: s.to_string(),
                rule: "label is not irreducible (D2 = A1xA1, rank 0 is trivial)",
            }),
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A product of irreducible types, kept sorted by `(family, rank)`.
/// The empty product is the trivial root system, written `-`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecompositionLabel {
    factors: Vec<TypeLabel>,
}

impl DecompositionLabel {
    pub fn new(mut factors: Vec<TypeLabel>) -> Self {
        for f in factors.iter_mut() {
            *f = f.canonical();
        }
        factors.sort();
        Self { factors }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[TypeLabel] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Block-diagonal Cartan matrix of the factors, in sorted order.
    pub fn cartan(&self) -> CartanMatrix {
        let blocks: Vec<CartanMatrix> = self.factors.iter().map(|&t| cartan_of_type(t)).collect();
        CartanMatrix::block_diagonal(&blocks)
    }
}

impl From<TypeLabel> for DecompositionLabel {
    fn from(t: TypeLabel) -> Self {
        Self::new(vec![t])
    }
}

impl FromStr for DecompositionLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Self::trivial());
        }
        let mut factors = Vec::new();
        for part in s.split(['x', 'X', '×', '*']) {
            let (fam, rank) = split_label(part)?;
            factors.extend(TypeLabel::expand(fam, rank)?);
        }
        Ok(Self::new(factors))
    }
}

impl fmt::Display for DecompositionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "-");
        }
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl Serialize for DecompositionLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A generalized Cartan matrix: `a_ii = 2`, `a_ij <= 0` off the diagonal and
/// `a_ij = 0` iff `a_ji = 0`. Finite type is checked separately by
/// [`CartanMatrix::is_finite_type`] since extended diagrams are not finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    n: usize,
    a: Vec<i64>,
}

impl CartanMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("Cartan matrix must be square".into()));
        }
        let a: Vec<i64> = rows.iter().flatten().copied().collect();
        let m = Self { n, a };
        m.check_axioms()?;
        Ok(m)
    }

    fn check_axioms(&self) -> Result<()> {
        for i in 0..self.n {
            if self.get(i, i) != 2 {
                return Err(Error::NotFiniteType(format!("a[{i}][{i}] != 2")));
            }
            for j in 0..self.n {
                if i == j {
                    continue;
                }
                let (x, y) = (self.get(i, j), self.get(j, i));
                if x > 0 || (x == 0) != (y == 0) {
                    return Err(Error::NotFiniteType(format!(
                        "bad off-diagonal pair a[{i}][{j}] = {x}, a[{j}][{i}] = {y}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn empty() -> Self {
        Self { n: 0, a: vec![] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.a.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    /// Principal submatrix on `idx`, in the given order.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let a = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        Self { n: idx.len(), a }
    }

    /// Removes node `i`.
    pub fn delete(&self, i: usize) -> Result<Self> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n.saturating_sub(1),
            });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&j| j != i).collect();
        Ok(self.submatrix(&keep))
    }

    /// Reorders nodes: node `k` of the result is node `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        self.submatrix(perm)
    }

    pub fn block_diagonal(blocks: &[CartanMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut a = vec![0; n * n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    a[(off + i) * n + off + j] = b.get(i, j);
                }
            }
            off += b.n;
        }
        Self { n, a }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| j != i && self.get(i, j) != 0)
    }

    /// Connected components, each sorted, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Half squared lengths `d_j = (alpha_j, alpha_j) / 2`, normalized so the
    /// shortest root in each component has `d = 1`. Fails if the matrix is not
    /// symmetrizable.
    pub fn half_lengths(&self) -> Result<Vec<BigRational>> {
        let mut d: Vec<Option<BigRational>> = vec![None; self.n];
        for comp in self.components() {
            d[comp[0]] = Some(BigRational::one());
            let mut stack = vec![comp[0]];
            while let Some(i) = stack.pop() {
                let di = d[i].clone().expect("visited");
                for j in self.neighbors(i) {
                    // (alpha_i, alpha_j) = a_ij d_j = a_ji d_i
                    let dj = &di * rat(self.get(j, i)) / rat(self.get(i, j));
                    match &d[j] {
                        Some(old) if *old != dj => {
                            return Err(Error::NotFiniteType(format!(
                                "not symmetrizable around nodes {i}, {j}"
                            )))
                        }
                        Some(_) => {}
                        None => {
                            d[j] = Some(dj);
                            stack.push(j);
                        }
                    }
                }
            }
            let min = comp
                .iter()
                .map(|&k| d[k].clone().expect("visited"))
                .min()
                .expect("nonempty component");
            for &k in &comp {
                let v = d[k].take().expect("visited") / &min;
                d[k] = Some(v);
            }
        }
        Ok(d.into_iter().map(|x| x.expect("all nodes visited")).collect())
    }

    /// Gram matrix `(alpha_i, alpha_j) = a_ij d_j`, short roots of squared length 2.
    pub fn gram(&self) -> Result<Vec<Vec<BigRational>>> {
        let d = self.half_lengths()?;
        Ok((0..self.n)
            .map(|i| (0..self.n).map(|j| rat(self.get(i, j)) * &d[j]).collect())
            .collect())
    }

    /// Finite type: bond products at most 3 and a positive-definite
    /// symmetrization (all leading principal minors of the Gram matrix > 0).
    pub fn is_finite_type(&self) -> bool {
        for i in 0..self.n {
            for j in self.neighbors(i) {
                if self.get(i, j) * self.get(j, i) > 3 {
                    return false;
                }
            }
        }
        match self.gram() {
            Ok(g) => leading_minors(&g).iter().all(|m| m.is_positive()),
            Err(_) => false,
        }
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}

/// Standard Cartan data in the canonical numbering documented at module level.
pub fn cartan_of_type(label: TypeLabel) -> CartanMatrix {
    let n = label.rank;
    let mut a = vec![0i64; n * n];
    for i in 0..n {
        a[i * n + i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        a[i * n + j] = -1;
        a[j * n + i] = -1;
    };
    match label.family {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 1..n {
                bond(i - 1, i);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                bond(i - 1, i);
            }
            bond(n - 3, n - 1);
        }
        Family::E => {
            bond(0, 2);
            bond(1, 3);
            for i in 3..n {
                bond(i - 1, i);
            }
        }
    }
    // a[i][j] = 2(a_i,a_j)/(a_j,a_j): the entry is -2 (or -3) in the row of the
    // long root and the column of the short one.
    match label.family {
        Family::B => a[(n - 2) * n + (n - 1)] = -2,
        Family::C => a[(n - 1) * n + (n - 2)] = -2,
        Family::F => a[n + 2] = -2,
        Family::G => a[n] = -3,
        _ => {}
    }
    CartanMatrix { n, a }
}

/// Splits a finite-type Cartan matrix into irreducible components and names
/// each one, up to node reordering.
pub fn classify(cartan: &CartanMatrix) -> Result<DecompositionLabel> {
    if !cartan.is_finite_type() {
        return Err(Error::NotFiniteType(format!("{cartan}")));
    }
    let mut factors = Vec::new();
    for comp in cartan.components() {
        factors.push(identify_component(&cartan.submatrix(&comp))?);
    }
    Ok(DecompositionLabel::new(factors))
}

fn identify_component(c: &CartanMatrix) -> Result<TypeLabel> {
    let k = c.size();
    let bad = || Error::NotFiniteType(format!("component {c} matches no catalogue entry"));
    if k == 1 {
        return TypeLabel::new(Family::A, 1);
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if c.get(i, j) != 0 {
                edges.push((i, j, c.get(i, j) * c.get(j, i)));
            }
        }
    }
    if edges.len() != k - 1 {
        return Err(bad());
    }
    let degree: Vec<usize> = (0..k).map(|i| c.neighbors(i).count()).collect();
    let multi: Vec<_> = edges.iter().filter(|e| e.2 > 1).collect();
    match multi.as_slice() {
        [] => identify_simply_laced(c, &degree).ok_or_else(bad),
        [(_, _, 3)] if k == 2 => TypeLabel::new(Family::G, 2),
        [(_, _, 2)] if k == 2 => TypeLabel::new(Family::B, 2),
        [(_, _, 2)] => {
            if degree.iter().any(|&d| d > 2) {
                return Err(bad());
            }
            let path = path_order(c, &degree);
            let pos = |v: usize| path.iter().position(|&x| x == v).expect("on path");
            let (u, v) = (multi[0].0, multi[0].1);
            let (pu, pv) = (pos(u), pos(v));
            let lo = pu.min(pv);
            if k == 4 && lo == 1 {
                return TypeLabel::new(Family::F, 4);
            }
            let (end, inner) = if lo == 0 {
                (path[0], path[1])
            } else if lo == k - 2 {
                (path[k - 1], path[k - 2])
            } else {
                return Err(bad());
            };
            // |a[inner][end]| = 2 means the terminal root is the short one
            if c.get(inner, end) == -2 {
                TypeLabel::new(Family::B, k)
            } else {
                TypeLabel::new(Family::C, k)
            }
        }
        _ => Err(bad()),
    }
}

fn path_order(c: &CartanMatrix, degree: &[usize]) -> Vec<usize> {
    let start = (0..c.size()).find(|&i| degree[i] <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = c.neighbors(cur).find(|&j| j != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn identify_simply_laced(c: &CartanMatrix, degree: &[usize]) -> Option<TypeLabel> {
    let k = c.size();
    let branch: Vec<usize> = (0..k).filter(|&i| degree[i] >= 3).collect();
    match branch.as_slice() {
        [] => TypeLabel::new(Family::A, k).ok(),
        [b] if degree[*b] == 3 => {
            let mut arms: Vec<usize> = c
                .neighbors(*b)
                .map(|first| {
                    let mut len = 1;
                    let (mut prev, mut cur) = (*b, first);
                    while let Some(next) = c.neighbors(cur).find(|&j| j != prev) {
                        len += 1;
                        prev = cur;
                        cur = next;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => TypeLabel::new(Family::D, k).ok(),
                [1, 2, 2] => TypeLabel::new(Family::E, 6).ok(),
                [1, 2, 3] => TypeLabel::new(Family::E, 7).ok(),
                [1, 2, 4] => TypeLabel::new(Family::E, 8).ok(),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Extended Dynkin diagram: node 0 is the affine node `alpha_0 = -theta`,
/// node `j >= 1` is simple root `alpha_j` (original index `j - 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedDiagram {
    cartan: CartanMatrix,
    marks: Vec<i64>,
}

impl MarkedDiagram {
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Coefficients `n_j` of `alpha_0 = sum_j n_j alpha_j`, all negative.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn affine_node(&self) -> usize {
        0
    }

    pub fn rank(&self) -> usize {
        self.marks.len()
    }

    /// Cartan matrix of the diagram with node `i` removed.
    pub fn delete_node(&self, i: usize) -> Result<CartanMatrix> {
        self.cartan.delete(i)
    }
}

/// Attaches the affine node to an irreducible root system.
pub fn extend(rs: &RootSystem) -> Result<MarkedDiagram> {
    let theta = rs.highest_root()?;
    let l = rs.rank();
    let gram = rs.gram();
    // (alpha_0, alpha_j) = -(theta, alpha_j)
    let pair0: Vec<BigRational> = (0..l)
        .map(|j| -(0..l).map(|k| rat(theta.coords()[k]) * &gram[k][j]).sum::<BigRational>())
        .collect();
    let theta_sq: BigRational = (0..l).map(|j| -(rat(theta.coords()[j]) * &pair0[j])).sum();
    let two = rat(2);
    let mut rows = vec![vec![0i64; l + 1]; l + 1];
    rows[0][0] = 2;
    for j in 0..l {
        let a0j = &two * &pair0[j] / &gram[j][j];
        let aj0 = &two * &pair0[j] / &theta_sq;
        if !a0j.is_integer() || !aj0.is_integer() {
            return Err(Error::NotFiniteType("non-integral affine pairing".into()));
        }
        rows[0][j + 1] = a0j.to_integer().try_into().expect("small");
        rows[j + 1][0] = aj0.to_integer().try_into().expect("small");
        for k in 0..l {
            rows[j + 1][k + 1] = rs.cartan().get(j, k);
        }
    }
    let cartan = CartanMatrix::from_rows(&rows)?;
    let marks = theta.coords().iter().map(|&c| -c).collect();
    Ok(MarkedDiagram { cartan, marks })
}

/// Convenience: `extend(generate_roots(cartan_of_type(label)))`.
pub fn extend_type(label: TypeLabel) -> Result<MarkedDiagram> {
    let rs = RootSystem::generate(&cartan_of_type(label))?;
    extend(&rs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_zero_row(m: &CartanMatrix, i: usize) -> bool {
        (0..m.size()).all(|j| j == i || m.get(i, j) == 0)
    }

    fn t(s: &str) -> TypeLabel {
        s.parse().unwrap()
    }

    fn d(s: &str) -> DecompositionLabel {
        s.parse().unwrap()
    }

    #[test]
    fn a2_and_g2_cartan_data() {
        assert_eq!(cartan_of_type(t("A2")).rows(), vec![vec![2, -1], vec![-1, 2]]);
        let g2 = cartan_of_type(t("G2"));
        assert_eq!(g2.get(0, 1) * g2.get(1, 0), 3);
        assert!(g2.is_finite_type());
    }

    #[test]
    fn b3_minors_positive() {
        let b3 = cartan_of_type(t("B3"));
        let minors = leading_minors(&b3.gram().unwrap());
        assert!(minors.iter().all(|m| m.is_positive()));
        // gram of B3: long roots length^2 4, short 2
        assert_eq!(b3.half_lengths().unwrap(), vec![rat(2), rat(2), rat(1)]);
    }

    #[test]
    fn inadmissible_labels_name_the_rule() {
        let err = TypeLabel::new(Family::E, 9).unwrap_err();
        assert!(err.to_string().contains("E_n needs n in {6, 7, 8}"));
        assert!(TypeLabel::new(Family::D, 3).is_err());
        assert!("D2".parse::<TypeLabel>().is_err());
        assert!("Q3".parse::<TypeLabel>().is_err());
    }

    #[test]
    fn aliases() {
        assert_eq!(t("B1"), t("A1"));
        assert_eq!(t("C1"), t("A1"));
        assert_eq!(t("D3"), t("A3"));
        assert_eq!(d("D2"), d("A1xA1"));
        assert_eq!(d("C2"), d("B2"));
        assert_eq!(d("-"), DecompositionLabel::trivial());
        assert_eq!(d("C3xA1").to_string(), "A1xC3");
        assert_eq!(d("B0xA2").to_string(), "A2");
    }

    #[test]
    fn classify_is_reorder_invariant() {
        let a3 = cartan_of_type(t("A3")).permuted(&[2, 0, 1]);
        assert_eq!(classify(&a3).unwrap(), d("A3"));
        let e7 = cartan_of_type(t("E7")).permuted(&[6, 3, 0, 5, 1, 2, 4]);
        assert_eq!(classify(&e7).unwrap(), d("E7"));
        let f4 = cartan_of_type(t("F4")).permuted(&[3, 2, 1, 0]);
        assert_eq!(classify(&f4).unwrap(), d("F4"));
        let c5 = cartan_of_type(t("C5")).permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(classify(&c5).unwrap(), d("C5"));
    }

    #[test]
    fn classify_splits_components() {
        let a1 = cartan_of_type(t("A1"));
        let m = CartanMatrix::block_diagonal(&[a1.clone(), a1]);
        assert_eq!(classify(&m).unwrap(), d("A1xA1"));
        assert_eq!(classify(&CartanMatrix::empty()).unwrap(), DecompositionLabel::trivial());
    }

    #[test]
    fn classify_rejects_affine_and_garbage() {
        let ext = extend_type(t("A2")).unwrap();
        assert!(matches!(classify(ext.cartan()), Err(Error::NotFiniteType(_))));
        let bad = CartanMatrix::from_rows(&[vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(classify(&bad).is_err());
        assert!(CartanMatrix::from_rows(&[vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanMatrix::from_rows(&[vec![2, -1], vec![0, 2]]).is_err());
    }

    #[test]
    fn extend_small_types() {
        let a1 = extend_type(t("A1")).unwrap();
        assert_eq!(a1.cartan().get(0, 1) * a1.cartan().get(1, 0), 4);
        assert_eq!(a1.marks(), &[-1]);

        let a2 = extend_type(t("A2")).unwrap();
        assert_eq!(a2.marks(), &[-1, -1]);
        for i in 0..3 {
            assert_eq!(a2.cartan().neighbors(i).count(), 2);
            for j in a2.cartan().neighbors(i) {
                assert_eq!(a2.cartan().get(i, j), -1);
            }
        }

        let g2 = extend_type(t("G2")).unwrap();
        let mut marks = g2.marks().to_vec();
        marks.sort();
        assert_eq!(marks, vec![-3, -2]);
        // chain: the affine node is a leaf
        assert_eq!(g2.cartan().neighbors(0).count(), 1);
    }

    #[test]
    fn central_deletion_of_extended_d4() {
        let ext = extend_type(t("D4")).unwrap();
        let centre = (0..5).find(|&i| ext.cartan().neighbors(i).count() == 4).unwrap();
        let m = ext.delete_node(centre).unwrap();
        assert!((0..4).all(|i| is_zero_row(&m, i)));
        assert_eq!(classify(&m).unwrap(), d("A1xA1xA1xA1"));
    }

    #[test]
    fn deletions_named_in_the_proofs() {
        let g2 = extend_type(t("G2")).unwrap();
        assert_eq!(classify(&g2.delete_node(0).unwrap()).unwrap(), d("G2"));

        let f4 = extend_type(t("F4")).unwrap();
        let adjacent = f4.cartan().neighbors(0).next().unwrap();
        assert_eq!(classify(&f4.delete_node(adjacent).unwrap()).unwrap(), d("A1xC3"));

        for n in 1..=6 {
            let ext = extend_type(TypeLabel::new(Family::A, n).unwrap()).unwrap();
            for i in 0..=n {
                assert_eq!(
                    classify(&ext.delete_node(i).unwrap()).unwrap(),
                    DecompositionLabel::from(TypeLabel::new(Family::A, n).unwrap())
                );
            }
        }
        assert!(f4.delete_node(5).is_err());
    }

    #[test]
    fn sweep_parsing() {
        let v = TypeLabel::parse_sweep("B2..B5").unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!(v[3], t("B5"));
        assert!(TypeLabel::parse_sweep("B2..C5").is_err());
        assert!(TypeLabel::parse_sweep("E6..E9").is_err());
    }
}
