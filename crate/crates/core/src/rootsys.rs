//! Root systems generated from Cartan data by reflection closure.

use std::collections::{HashMap, VecDeque};

use num_rational::BigRational;
use serde::Serialize;

use crate::diagram::{CartanMatrix, MarkedDiagram};
use crate::error::{Error, Result};
use crate::linalg::rat;

/// Closure bound: ten times the number of roots of E8.
pub const ROOT_CAP: usize = 2400;

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Self { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    /// positive roots sorted by (height, coords), then their negatives in the same order
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    gram: Vec<Vec<BigRational>>,
}

impl RootSystem {
    /// Breadth-first orbit of the simple roots under the simple reflections.
    pub fn generate(cartan: &CartanMatrix) -> Result<Self> {
        let l = cartan.size();
        let gram = cartan.gram()?;
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..l {
            let r = Root::simple(l, i).coords;
            seen.insert(r.clone(), ());
            queue.push_back(r);
        }
        while let Some(v) = queue.pop_front() {
            for j in 0..l {
                let pairing: i64 = (0..l).map(|i| v[i] * cartan.get(i, j)).sum();
                if pairing == 0 {
                    continue;
                }
                let mut w = v.clone();
                w[j] -= pairing;
                if !seen.contains_key(&w) {
                    if seen.len() >= ROOT_CAP {
                        return Err(Error::NotFiniteType(format!(
                            "reflection closure exceeded {ROOT_CAP} roots"
                        )));
                    }
                    seen.insert(w.clone(), ());
                    queue.push_back(w);
                }
            }
        }
        let mut positive: Vec<Root> = Vec::new();
        for v in seen.into_keys() {
            let r = Root::new(v);
            if r.is_positive() {
                positive.push(r);
            } else if !r.neg().is_positive() {
                return Err(Error::NotFiniteType(format!("mixed-sign vector {:?}", r.coords)));
            }
        }
        positive.sort_by(|a, b| (a.height(), &a.coords).cmp(&(b.height(), &b.coords)));
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::neg));
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), k))
            .collect();
        let rs = Self {
            cartan: cartan.clone(),
            roots,
            index,
            gram,
        };
        if rs.roots.len() != 2 * rs.positive().len() || rs.roots.iter().any(|r| !rs.contains(&r.neg().coords)) {
            return Err(Error::NotFiniteType("closure is not symmetric under negation".into()));
        }
        Ok(rs)
    }

    pub fn rank(&self) -> usize {
        self.cartan.size()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn positive(&self) -> &[Root] {
        &self.roots[..self.roots.len() / 2]
    }

    /// Exact Gram matrix `(alpha_i, alpha_j)`, short roots of squared length 2.
    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn inner(&self, u: &[i64], v: &[i64]) -> BigRational {
        let l = self.rank();
        let mut s = BigRational::default();
        for i in 0..l {
            if u[i] == 0 {
                continue;
            }
            for j in 0..l {
                if v[j] != 0 {
                    s += rat(u[i] * v[j]) * &self.gram[i][j];
                }
            }
        }
        s
    }

    /// Unique positive root of maximal height; it dominates every positive root.
    pub fn highest_root(&self) -> Result<Root> {
        if self.rank() == 0 || !self.cartan.is_connected() {
            return Err(Error::Reducible("highest_root"));
        }
        let pos = self.positive();
        let top = pos.last().expect("nonempty").clone();
        if pos.iter().rev().skip(1).any(|r| r.height() == top.height()) {
            return Err(Error::Reducible("highest_root"));
        }
        debug_assert!(pos
            .iter()
            .all(|r| r.coords.iter().zip(&top.coords).all(|(a, b)| a <= b)));
        Ok(top)
    }

    /// Matrix of `s_alpha` in the simple-root basis; row `i` holds the
    /// coordinates of `s_alpha(alpha_i)`, so a vector acts as a row: `v -> v M`.
    pub fn reflection_matrix(&self, alpha: &Root) -> Result<Vec<Vec<i64>>> {
        if !self.contains(&alpha.coords) {
            return Err(Error::NotARoot(alpha.coords.clone()));
        }
        let l = self.rank();
        let norm = self.inner(&alpha.coords, &alpha.coords);
        let two = rat(2);
        Ok((0..l)
            .map(|i| {
                let simple = Root::simple(l, i).coords;
                let coroot = &two * self.inner(&simple, &alpha.coords) / &norm;
                debug_assert!(coroot.is_integer());
                let k: i64 = coroot.to_integer().try_into().expect("small pairing");
                let mut row = simple;
                for (r, a) in row.iter_mut().zip(&alpha.coords) {
                    *r -= k * a;
                }
                row
            })
            .collect())
    }
}

/// The subsystem for a deleted node, computed two ways.
#[derive(Clone, Debug)]
pub struct Subsystem {
    pub node: usize,
    /// roots of the ambient system lying in the integral span of the remaining nodes
    pub filtered: Vec<Root>,
    /// roots regenerated from the deleted diagram, in its own basis
    pub regenerated: RootSystem,
}

impl Subsystem {
    pub fn len(&self) -> usize {
        self.filtered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filtered.is_empty()
    }
}

/// `R^(i)`: the roots of `rs` that are integral combinations of
/// `alpha_0, ..., alpha_l` with `alpha_i` omitted.
pub fn subsystem(rs: &RootSystem, d: &MarkedDiagram, i: usize) -> Result<Subsystem> {
    let l = rs.rank();
    if i > l {
        return Err(Error::IndexOutOfRange { index: i, max: l });
    }
    let filtered: Vec<Root> = if i == 0 {
        rs.roots().to_vec()
    } else {
        // beta = m * alpha_0 + sum_{j != i} e_j alpha_j forces m = c_i / n_i
        let mark = d.marks()[i - 1];
        rs.roots()
            .iter()
            .filter(|r| r.coords[i - 1] % mark == 0)
            .cloned()
            .collect()
    };
    let regenerated = RootSystem::generate(&d.delete_node(i)?)?;
    if regenerated.len() != filtered.len() {
        return Err(Error::SubsystemMismatch {
            node: i,
            filtered: filtered.len(),
            regenerated: regenerated.len(),
        });
    }
    Ok(Subsystem {
        node: i,
        filtered,
        regenerated,
    })
}
