//! Spherical cones spanned by simple roots.
//!
//! Points are sampled as isotropic Gaussians in Cartesian coordinates, which
//! gives directions uniform on the sphere, and mapped back to simple-root
//! coordinates through a Cholesky factor of the Gram matrix.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{cartan_of_type, classify, extend, CartanMatrix, DecompositionLabel, TypeLabel};
use crate::error::{Error, Result};
use crate::invariants::nu_of;
use crate::linalg::ratio;
use crate::rootsys::RootSystem;
use crate::serde_rat;

/// Walls closer than this (in coordinates of a unit vector) count as boundary.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Cartesian realization of a Gram matrix.
#[derive(Clone, Debug)]
pub struct Embedding {
    gram: Vec<Vec<BigRational>>,
    /// lower triangular, `factor * factor^T = gram`; row `i` is `alpha_i`
    factor: Vec<Vec<f64>>,
}

impl Embedding {
    pub fn new(gram: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = gram.len();
        let g: Vec<Vec<f64>> = gram
            .iter()
            .map(|r| r.iter().map(|x| x.to_f64().expect("finite")).collect())
            .collect();
        let mut l = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..=i {
                let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
                if i == j {
                    let d = g[i][i] - s;
                    if d <= 0.0 {
                        return Err(Error::NotFiniteType("Gram matrix is not positive definite".into()));
                    }
                    l[i][i] = d.sqrt();
                } else {
                    l[i][j] = (g[i][j] - s) / l[j][j];
                }
            }
        }
        Ok(Self { gram, factor: l })
    }

    pub fn of_cartan(cartan: &CartanMatrix) -> Result<Self> {
        Self::new(cartan.gram()?)
    }

    pub fn dim(&self) -> usize {
        self.factor.len()
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    pub fn factor(&self) -> &[Vec<f64>] {
        &self.factor
    }

    /// Cartesian point of `sum_i b_i alpha_i`.
    pub fn embed(&self, b: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|k| (k..n).map(|i| b[i] * self.factor[i][k]).sum())
            .collect()
    }

    /// Simple-root coordinates of a Cartesian point.
    pub fn coords(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim();
        let mut b = vec![0.0; n];
        for k in (0..n).rev() {
            let s: f64 = (k + 1..n).map(|i| self.factor[i][k] * b[i]).sum();
            b[k] = (x[k] - s) / self.factor[k][k];
        }
        b
    }
}

/// Which cone `C(Delta^(i))` contains a point, with its coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeLocation {
    pub cone: usize,
    /// indexed by extended node `0..=l`; the entry for `cone` itself is 0
    pub coefficients: Vec<f64>,
}

/// If every `b_h >= 0` the point is in cone 0. Otherwise pick `i` maximizing
/// `b_i / n_i` (smallest index on ties) and rewrite
/// `u = (b_i/n_i) alpha_0 + sum_{h != i} (b_h - n_h b_i / n_i) alpha_h`.
pub fn locate_cone(b: &[f64], marks: &[i64]) -> ConeLocation {
    let l = b.len();
    let mut coefficients = vec![0.0; l + 1];
    if b.iter().all(|&x| x >= 0.0) {
        coefficients[1..].copy_from_slice(b);
        return ConeLocation { cone: 0, coefficients };
    }
    let mut best = 0;
    let mut best_ratio = f64::NEG_INFINITY;
    for h in 0..l {
        let r = b[h] / marks[h] as f64;
        if r > best_ratio {
            best_ratio = r;
            best = h;
        }
    }
    coefficients[0] = best_ratio;
    for h in 0..l {
        if h != best {
            coefficients[h + 1] = b[h] - marks[h] as f64 * best_ratio;
        }
    }
    ConeLocation {
        cone: best + 1,
        coefficients,
    }
}

/// Solves `sum_k c_k v_k = x` by partial-pivot elimination.
fn solve_in_basis(basis: &[Vec<f64>], x: &[f64]) -> Option<Vec<f64>> {
    let n = x.len();
    // columns are basis vectors
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|r| {
            let mut row: Vec<f64> = basis.iter().map(|v| v[r]).collect();
            row.push(x[r]);
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[p][col].abs() < 1e-14 {
            return None;
        }
        a.swap(p, col);
        for r in 0..n {
            if r != col {
                let f = a[r][col] / a[col][col];
                for c in col..=n {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
    }
    Some((0..n).map(|i| a[i][n] / a[i][i]).collect())
}

fn gaussian_direction(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let x: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            return x.into_iter().map(|v| v / norm).collect();
        }
    }
}

fn worker_rng(seed: u64, worker: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(worker as u64);
    rng
}

fn chunk_sizes(n: usize, workers: usize) -> Vec<usize> {
    let workers = workers.max(1);
    (0..workers)
        .map(|k| n / workers + usize::from(k < n % workers))
        .collect()
}

/// Binomial estimate with its standard error and z-score against an exact value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub hits: usize,
    pub estimate: f64,
    pub stderr: f64,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub exact: BigRational,
    pub z_score: f64,
}

impl Estimate {
    pub fn new(hits: usize, samples: usize, exact: BigRational) -> Self {
        let p = hits as f64 / samples as f64;
        let stderr = (p * (1.0 - p) / samples as f64).sqrt();
        let e = exact.to_f64().expect("finite");
        let z_score = if stderr > 0.0 {
            (p - e) / stderr
        } else if p == e {
            0.0
        } else {
            f64::INFINITY
        };
        Self {
            hits,
            estimate: p,
            stderr,
            exact,
            z_score,
        }
    }

    pub fn within(&self, sigmas: f64) -> bool {
        self.z_score.abs() <= sigmas
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VolumeEstimate {
    #[serde(rename = "type")]
    pub label: DecompositionLabel,
    pub samples: usize,
    pub seed: u64,
    pub workers: usize,
    pub estimate: f64,
    pub stderr: f64,
    #[serde(serialize_with = "serde_rat::serialize")]
    pub exact: BigRational,
    pub z_score: f64,
}

/// Fraction of uniform directions with all simple-root coordinates `>= 0`.
/// Results depend only on `(seed, workers)`, never on scheduling.
pub fn montecarlo_nu(label: &DecompositionLabel, samples: usize, seed: u64, workers: usize) -> Result<VolumeEstimate> {
    if samples < 1000 {
        return Err(Error::InvalidArgument(format!(
            "need at least 1000 samples, got {samples}"
        )));
    }
    let workers = workers.max(1);
    let emb = Embedding::of_cartan(&label.cartan())?;
    let dim = emb.dim();
    let hits: usize = chunk_sizes(samples, workers)
        .into_par_iter()
        .enumerate()
        .map(|(k, n)| {
            let mut rng = worker_rng(seed, k);
            (0..n)
                .filter(|_| {
                    let x = gaussian_direction(&mut rng, dim);
                    emb.coords(&x).iter().all(|&c| c >= -BOUNDARY_TOL)
                })
                .count()
        })
        .sum();
    let est = Estimate::new(hits, samples, nu_of(label));
    Ok(VolumeEstimate {
        label: label.clone(),
        samples,
        seed,
        workers,
        estimate: est.estimate,
        stderr: est.stderr,
        exact: est.exact,
        z_score: est.z_score,
    })
}

/// Exact fraction of the circle cut out by two simple roots in rank 2:
/// the angle is 90, 120, 135 or 150 degrees as `a_12 a_21` is 0, 1, 2 or 3.
pub fn planar_cone_fraction(cartan: &CartanMatrix) -> Option<BigRational> {
    if cartan.size() != 2 {
        return None;
    }
    let degrees = match cartan.get(0, 1) * cartan.get(1, 0) {
        0 => 90,
        1 => 120,
        2 => 135,
        3 => 150,
        _ => return None,
    };
    Some(ratio(degrees, 360))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConeFrequency {
    pub node: usize,
    pub decomposition: DecompositionLabel,
    #[serde(flatten)]
    pub estimate: Estimate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartitionReport {
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub samples: usize,
    pub seed: u64,
    /// samples within tolerance of a wall (flagged, not failed)
    pub boundary: usize,
    /// non-boundary samples found in no cone or in several
    pub bad_membership: usize,
    /// non-boundary samples where the scan and the rewrite rule disagree
    pub disagreements: usize,
    pub cones: Vec<ConeFrequency>,
    pub pass: bool,
}

/// Assigns each sampled direction to a cone twice: by [`locate_cone`] and by
/// solving for coordinates in every basis `Delta^(i)` independently.
pub fn partition_check(label: TypeLabel, samples: usize, seed: u64) -> Result<PartitionReport> {
    let rs = RootSystem::generate(&cartan_of_type(label))?;
    let ext = extend(&rs)?;
    let emb = Embedding::new(rs.gram().to_vec())?;
    let l = rs.rank();
    let marks = ext.marks();

    // Cartesian vectors of alpha_0..alpha_l
    let mut nodes: Vec<Vec<f64>> = vec![emb.embed(&marks.iter().map(|&m| m as f64).collect::<Vec<_>>())];
    for i in 0..l {
        let mut e = vec![0.0; l];
        e[i] = 1.0;
        nodes.push(emb.embed(&e));
    }
    let bases: Vec<Vec<Vec<f64>>> = (0..=l)
        .map(|i| (0..=l).filter(|&j| j != i).map(|j| nodes[j].clone()).collect())
        .collect();

    let mut rng = worker_rng(seed, 0);
    let mut counts = vec![0usize; l + 1];
    let (mut boundary, mut bad, mut disagree) = (0, 0, 0);
    for _ in 0..samples {
        let x = gaussian_direction(&mut rng, l);
        let b = emb.coords(&x);
        let located = locate_cone(&b, marks);
        counts[located.cone] += 1;

        let mut containing = Vec::new();
        let mut on_wall = false;
        for (i, basis) in bases.iter().enumerate() {
            let Some(c) = solve_in_basis(basis, &x) else {
                continue;
            };
            let min = c.iter().copied().fold(f64::INFINITY, f64::min);
            if min >= -BOUNDARY_TOL {
                containing.push(i);
                if min <= BOUNDARY_TOL {
                    on_wall = true;
                }
            }
        }
        if on_wall {
            boundary += 1;
            continue;
        }
        match containing.as_slice() {
            [only] if *only == located.cone => {}
            [_] => disagree += 1,
            _ => bad += 1,
        }
    }

    let mut cones = Vec::with_capacity(l + 1);
    for (node, &hits) in counts.iter().enumerate() {
        let decomposition = classify(&ext.delete_node(node)?)?;
        let estimate = Estimate::new(hits, samples, nu_of(&decomposition));
        cones.push(ConeFrequency {
            node,
            decomposition,
            estimate,
        });
    }
    let pass = bad == 0 && disagree == 0 && cones.iter().all(|c| c.estimate.within(4.0));
    Ok(PartitionReport {
        label,
        samples,
        seed,
        boundary,
        bad_membership: bad,
        disagreements: disagree,
        cones,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn factor_reproduces_gram() {
        for s in ["B3", "G2", "F4", "E8"] {
            let c = cartan_of_type(s.parse().unwrap());
            let emb = Embedding::of_cartan(&c).unwrap();
            let g = emb.gram();
            let f = emb.factor();
            for i in 0..emb.dim() {
                for j in 0..emb.dim() {
                    let dot: f64 = (0..emb.dim()).map(|k| f[i][k] * f[j][k]).sum();
                    let want = g[i][j].to_f64().unwrap();
                    assert!((dot - want).abs() <= 1e-12 * want.abs().max(1.0));
                }
            }
            let b: Vec<f64> = (0..emb.dim()).map(|k| k as f64 - 1.5).collect();
            assert!(close(&emb.coords(&emb.embed(&b)), &b, 1e-10));
        }
    }

    #[test]
    fn locate_examples() {
        let a1 = locate_cone(&[-3.0], &[-1]);
        assert_eq!(a1.cone, 1);
        assert_eq!(a1.coefficients[0], 3.0);

        let a2 = locate_cone(&[1.0, -1.0], &[-1, -1]);
        assert_eq!(a2.cone, 2);
        assert_eq!(a2.coefficients, vec![1.0, 2.0, 0.0]);

        let pos = locate_cone(&[0.5, 2.0, 1.0], &[-1, -2, -1]);
        assert_eq!(pos.cone, 0);
        assert_eq!(pos.coefficients[1..], [0.5, 2.0, 1.0]);
    }

    #[test]
    fn locate_ties_pick_smallest_index() {
        let r = locate_cone(&[-1.0, -1.0], &[-1, -1]);
        assert_eq!(r.cone, 1);
    }

    #[test]
    fn planar_fractions() {
        let f = |s: &str| planar_cone_fraction(&cartan_of_type(s.parse().unwrap())).unwrap();
        assert_eq!(f("A2"), ratio(1, 3));
        assert_eq!(f("B2"), ratio(3, 8));
        assert_eq!(f("G2"), ratio(5, 12));
        assert!(planar_cone_fraction(&cartan_of_type("A3".parse().unwrap())).is_none());
    }

    #[test]
    fn montecarlo_rejects_tiny_runs() {
        let l: DecompositionLabel = "A2".parse().unwrap();
        assert!(montecarlo_nu(&l, 10, 1, 1).is_err());
    }

    #[test]
    fn montecarlo_is_deterministic() {
        let l: DecompositionLabel = "B2".parse().unwrap();
        let a = montecarlo_nu(&l, 20_000, 7, 3).unwrap();
        let b = montecarlo_nu(&l, 20_000, 7, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.z_score.abs() <= 4.0);
    }

    #[test]
    fn quadrant_for_a1_squared() {
        let l: DecompositionLabel = "A1xA1".parse().unwrap();
        let r = montecarlo_nu(&l, 40_000, 3, 2).unwrap();
        assert_eq!(r.exact, ratio(1, 4));
        assert!(r.z_score.abs() <= 4.0);
    }

    #[test]
    fn a1_partition_halves() {
        let r = partition_check("A1".parse().unwrap(), 2000, 11).unwrap();
        assert!(r.pass);
        assert_eq!(r.cones.len(), 2);
        assert_eq!(r.cones[0].estimate.hits + r.cones[1].estimate.hits, 2000);
    }
}
