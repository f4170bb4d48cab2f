//! Brute-force checks of predicted spectra against the explicit graph.
//!
//! Two independent routes: exact closed-walk counts `trace(A^k)` compared
//! with `sum mult * lambda^k`, and a cyclic Jacobi eigensolve of the dense
//! adjacency matrix compared line by line within a tolerance.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partitions::enumerate_partitions;
use crate::spectrum::{spectrum, SpectrumReport};
use crate::symgroup::{build_adjacency, AdjacencyMatrix, ClassSpec, ORACLE_CAP, ORACLE_CAP_EXTENDED};

/// Size caps for the brute-force oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest `n` for exact moment matching.
    pub exact_max_n: usize,
    /// Largest `n` for the floating-point eigensolve.
    pub float_max_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            exact_max_n: 5,
            float_max_n: ORACLE_CAP,
        }
    }
}

impl OracleLimits {
    pub fn with_exact_n6(mut self) -> Self {
        self.exact_max_n = self.exact_max_n.max(6);
        self
    }

    pub fn with_n7(mut self) -> Self {
        self.float_max_n = ORACLE_CAP_EXTENDED;
        self
    }

    fn graph_cap(&self) -> usize {
        self.exact_max_n.max(self.float_max_n)
    }
}

/// Largest vertex count accepted for `max_n`.
fn max_order(max_n: usize) -> usize {
    (1..=max_n).product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ExactMoments,
    FloatEigensolve,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ExactMoments => "exact-moments",
            Method::FloatEigensolve => "float-eigensolve",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub spec: ClassSpec,
    pub method: Method,
    pub matched: bool,
    /// First discrepancy; `None` when matched.
    pub detail: Option<String>,
    /// Highest moment compared (exact method).
    pub max_moment: Option<usize>,
    /// Assignment tolerance (float method).
    pub tol: Option<f64>,
}

/// Default moment depth: `p(n) + 2`.
pub fn default_moment_depth(n: usize) -> usize {
    enumerate_partitions(n).len() + 2
}

/// `[trace(A^0), ..., trace(A^k_max)]` in exact integers.
pub fn exact_moments(adj: &AdjacencyMatrix, k_max: usize, limits: &OracleLimits) -> Result<Vec<BigUint>> {
    let order = adj.order();
    if order > max_order(limits.exact_max_n) {
        return Err(Error::Capacity {
            what: "exact moments",
            n: order,
            cap: max_order(limits.exact_max_n),
        });
    }
    let neighbors: Vec<Vec<usize>> = (0..order).map(|u| adj.neighbors(u).collect()).collect();
    let mut moments = Vec::with_capacity(k_max + 1);
    moments.push(BigUint::from(order));
    // walks[i][j] = number of walks of the current length from i to j
    let mut walks: Vec<Vec<BigUint>> = (0..order)
        .map(|i| {
            let mut row = vec![BigUint::zero(); order];
            row[i] = BigUint::from(1u32);
            row
        })
        .collect();
    for _ in 1..=k_max {
        walks = walks
            .iter()
            .map(|row| {
                let mut next = vec![BigUint::zero(); order];
                for (l, count) in row.iter().enumerate() {
                    if count.is_zero() {
                        continue;
                    }
                    for &j in &neighbors[l] {
                        next[j] += count;
                    }
                }
                next
            })
            .collect();
        moments.push((0..order).map(|i| walks[i][i].clone()).sum());
    }
    Ok(moments)
}

/// `[sum mult * lambda^k for k in 0..=k_max]`.
pub fn predicted_moments(report: &SpectrumReport, k_max: usize) -> Vec<BigRational> {
    (0..=k_max).map(|k| report.moment(k as u32)).collect()
}

/// Matches exact walk counts of the explicit graph against the
/// character-theoretic prediction for `k = 0..=k_max`.
pub fn verify_exact(spec: &ClassSpec, k_max: usize, limits: &OracleLimits) -> Result<Verdict> {
    let n = spec.n();
    if n > limits.exact_max_n {
        return Err(Error::Capacity {
            what: "exact verification",
            n,
            cap: limits.exact_max_n,
        });
    }
    let report = spectrum(spec)?;
    let adj = build_adjacency(spec, limits.graph_cap())?;
    let actual = exact_moments(&adj, k_max, limits)?;
    let predicted = predicted_moments(&report, k_max);

    let mut detail = None;
    if report.lines.len() > k_max + 1 {
        detail = Some(format!(
            "{} distinct predicted eigenvalues need at least K = {}",
            report.lines.len(),
            report.lines.len() - 1
        ));
    }
    if detail.is_none() {
        detail = actual
            .iter()
            .zip(&predicted)
            .enumerate()
            .find(|(_, (a, p))| BigRational::from_integer(BigInt::from((*a).clone())) != **p)
            .map(|(k, (a, p))| format!("moment {k}: graph has {a}, prediction gives {p}"));
    }
    Ok(Verdict {
        spec: spec.clone(),
        method: Method::ExactMoments,
        matched: detail.is_none(),
        detail,
        max_moment: Some(k_max),
        tol: None,
    })
}

const JACOBI_MAX_SWEEPS: usize = 30;
const JACOBI_REL_TOL: f64 = 1e-10;

/// Eigenvalues of a dense symmetric matrix (row-major, `dim x dim`) by
/// cyclic Jacobi rotations, sorted descending.
pub fn jacobi_eigenvalues(mut a: Vec<f64>, dim: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), dim * dim, "matrix storage does not match dimension");
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..dim {
            for j in (i + 1)..dim {
                s += 2.0 * a[i * dim + j] * a[i * dim + j];
            }
        }
        s.sqrt()
    };
    let target = JACOBI_REL_TOL * norm;
    // Entries this small cannot move the off-diagonal norm above target.
    let skip = f64::EPSILON * norm / (dim.max(1) as f64);

    let mut sweeps = 0;
    let mut off = off_norm(&a);
    while off > target {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::Solver { sweeps, off_norm: off });
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                let apq = a[p * dim + q];
                if apq.abs() <= skip {
                    continue;
                }
                let app = a[p * dim + p];
                let aqq = a[q * dim + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..dim {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * dim + p];
                    let arq = a[r * dim + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * dim + p] = new_rp;
                    a[p * dim + r] = new_rp;
                    a[r * dim + q] = new_rq;
                    a[q * dim + r] = new_rq;
                }
                a[p * dim + p] = app - t * apq;
                a[q * dim + q] = aqq + t * apq;
                a[p * dim + q] = 0.0;
                a[q * dim + p] = 0.0;
            }
        }
        sweeps += 1;
        off = off_norm(&a);
    }
    log::debug!("jacobi: {dim}x{dim} converged in {sweeps} sweeps");
    let mut eig: Vec<f64> = (0..dim).map(|i| a[i * dim + i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    Ok(eig)
}

/// Floating-point spectrum of an adjacency matrix, sorted descending.
pub fn eig_float(adj: &AdjacencyMatrix, limits: &OracleLimits) -> Result<Vec<f64>> {
    let dim = adj.order();
    if dim > max_order(limits.float_max_n) {
        return Err(Error::Capacity {
            what: "float eigensolve",
            n: dim,
            cap: max_order(limits.float_max_n),
        });
    }
    let mut dense = vec![0.0; dim * dim];
    for u in 0..dim {
        for v in adj.neighbors(u) {
            dense[u * dim + v] = 1.0;
        }
    }
    jacobi_eigenvalues(dense, dim)
}

/// Assigns each computed eigenvalue to the nearest predicted line and
/// compares multiplicities.
pub fn verify_float(spec: &ClassSpec, tol: f64, limits: &OracleLimits) -> Result<Verdict> {
    let n = spec.n();
    if n > limits.float_max_n {
        return Err(Error::Capacity {
            what: "float verification",
            n,
            cap: limits.float_max_n,
        });
    }
    let report = spectrum(spec)?;
    let adj = build_adjacency(spec, limits.graph_cap())?;
    let computed = eig_float(&adj, limits)?;
    let detail = compare_float(&report, &computed, tol);
    Ok(Verdict {
        spec: spec.clone(),
        method: Method::FloatEigensolve,
        matched: detail.is_none(),
        detail,
        max_moment: None,
        tol: Some(tol),
    })
}

fn compare_float(report: &SpectrumReport, computed: &[f64], tol: f64) -> Option<String> {
    let predicted: Vec<f64> = report
        .lines
        .iter()
        .map(|l| l.eigenvalue.to_f64().unwrap_or(f64::NAN))
        .collect();
    let min_gap = predicted
        .windows(2)
        .map(|w| (w[0] - w[1]).abs())
        .fold(f64::INFINITY, f64::min);
    if min_gap <= 4.0 * tol {
        return Some(format!(
            "predicted eigenvalues are {min_gap} apart, too close for tolerance {tol}"
        ));
    }
    let mut counts = vec![0usize; predicted.len()];
    for &x in computed {
        let (idx, dist) = predicted
            .iter()
            .enumerate()
            .map(|(i, &p)| (i, (x - p).abs()))
            .min_by(|a, b| a.1.total_cmp(&b.1))?;
        if dist > tol {
            return Some(format!("computed eigenvalue {x} is {dist:e} from the nearest prediction"));
        }
        counts[idx] += 1;
    }
    report
        .lines
        .iter()
        .zip(&counts)
        .find(|(l, &c)| BigUint::from(c) != l.multiplicity)
        .map(|(l, c)| {
            format!(
                "eigenvalue {}: predicted multiplicity {}, computed {c}",
                l.eigenvalue, l.multiplicity
            )
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn limits() -> OracleLimits {
        OracleLimits::default()
    }

    #[test]
    fn low_moments() {
        let spec = ClassSpec::n_cycles(4).unwrap();
        let adj = build_adjacency(&spec, ORACLE_CAP).unwrap();
        let m = exact_moments(&adj, 3, &limits()).unwrap();
        assert_eq!(m[0], BigUint::from(24u32));
        assert_eq!(m[1], BigUint::zero());
        assert_eq!(m[2], BigUint::from(144u32));
        assert_eq!(m[3], BigUint::zero());
    }

    #[test]
    fn predicted_moment_values() {
        let r4 = spectrum(&ClassSpec::n_cycles(4).unwrap()).unwrap();
        let m4 = predicted_moments(&r4, 3);
        assert_eq!(m4[0], BigRational::from_integer(24.into()));
        assert_eq!(m4[3], BigRational::zero());
        let r5 = spectrum(&ClassSpec::n_cycles(5).unwrap()).unwrap();
        assert_eq!(predicted_moments(&r5, 2)[2], BigRational::from_integer(2880.into()));
    }

    #[test]
    fn exact_verdicts() {
        let v = verify_exact(&ClassSpec::n_cycles(4).unwrap(), 12, &limits()).unwrap();
        assert!(v.matched, "{:?}", v.detail);
        assert_eq!(v.method, Method::ExactMoments);
        let v = verify_exact(&ClassSpec::n_cycles(3).unwrap(), 8, &limits()).unwrap();
        assert!(v.matched);
        let spec = ClassSpec::parse(5, "2,1,1,1").unwrap();
        let v = verify_exact(&spec, 14, &limits()).unwrap();
        assert!(v.matched, "{:?}", v.detail);
    }

    #[test]
    fn shallow_depth_is_reported() {
        // Gamma_4 has five distinct eigenvalues; K = 2 cannot pin them.
        let v = verify_exact(&ClassSpec::n_cycles(4).unwrap(), 2, &limits()).unwrap();
        assert!(!v.matched);
        assert!(v.detail.unwrap().contains("distinct"));
    }

    #[test]
    fn wrong_prediction_is_caught() {
        let spec = ClassSpec::n_cycles(4).unwrap();
        let mut report = spectrum(&spec).unwrap();
        // Move one unit of multiplicity from 2 to 0.
        report.lines[1].multiplicity -= 1u32;
        report.lines[2].multiplicity += 1u32;
        let adj = build_adjacency(&spec, ORACLE_CAP).unwrap();
        let actual = exact_moments(&adj, 4, &limits()).unwrap();
        let predicted = predicted_moments(&report, 4);
        assert_ne!(BigRational::from_integer(BigInt::from(actual[2].clone())), predicted[2]);
        let computed = eig_float(&adj, &limits()).unwrap();
        assert!(compare_float(&report, &computed, 1e-6).is_some());
    }

    #[test]
    fn capacity_errors() {
        let spec = ClassSpec::n_cycles(6).unwrap();
        assert!(matches!(
            verify_exact(&spec, 3, &limits()),
            Err(Error::Capacity { n: 6, cap: 5, .. })
        ));
        let spec7 = ClassSpec::n_cycles(7).unwrap();
        assert!(matches!(
            verify_float(&spec7, 1e-6, &limits()),
            Err(Error::Capacity { n: 7, cap: 6, .. })
        ));
        let adj = build_adjacency(&spec, ORACLE_CAP).unwrap();
        assert!(exact_moments(&adj, 1, &limits()).is_err());
        assert!(exact_moments(&adj, 1, &limits().with_exact_n6()).is_ok());
    }

    #[test]
    fn jacobi_small_cases() {
        assert_eq!(jacobi_eigenvalues(vec![0.0], 1).unwrap(), vec![0.0]);
        let eig = jacobi_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2).unwrap();
        assert!((eig[0] - 3.0).abs() < 1e-12 && (eig[1] - 1.0).abs() < 1e-12);
        // Path on 3 vertices: +-sqrt(2), 0.
        let eig = jacobi_eigenvalues(vec![0., 1., 0., 1., 0., 1., 0., 1., 0.], 3).unwrap();
        let r2 = 2f64.sqrt();
        assert!((eig[0] - r2).abs() < 1e-12 && eig[1].abs() < 1e-12 && (eig[2] + r2).abs() < 1e-12);
    }

    #[test]
    fn jacobi_gamma_4_is_integral() {
        let adj = build_adjacency(&ClassSpec::n_cycles(4).unwrap(), ORACLE_CAP).unwrap();
        let eig = eig_float(&adj, &limits()).unwrap();
        assert_eq!(eig.len(), 24);
        assert!(eig.iter().all(|x| (x - x.round()).abs() < 1e-8));
        let v = verify_float(&ClassSpec::n_cycles(4).unwrap(), 1e-6, &limits()).unwrap();
        assert!(v.matched, "{:?}", v.detail);
    }

    #[test]
    fn transposition_graph_float() {
        let spec = ClassSpec::new(5, [Partition::from_unsorted(vec![1, 1, 1, 2]).unwrap()]).unwrap();
        let v = verify_float(&spec, 1e-6, &limits()).unwrap();
        assert!(v.matched, "{:?}", v.detail);
    }
}
