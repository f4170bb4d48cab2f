//! Irreducible characters of Sym(n) by the Murnaghan–Nakayama rule.
//!
//! `chi^alpha(beta)` is evaluated by stripping one cycle of `beta` at a time:
//! for a cycle of length `k`, sum over the nodes of `alpha` with hook length
//! `k`, removing the corresponding rim hook and weighting by `(-1)^leg`. An
//! empty set of `k`-hooks makes the value vanish. Intermediate results are
//! memoized on `(alpha, remaining cycles)`.

pub mod cache;

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symgroup::{class_size, factorial};

/// Default largest `n` for full character tables.
pub const TABLE_CAP: usize = 12;

/// Order in which the cycles of `beta` are stripped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PartOrder {
    #[default]
    LargestFirst,
    SmallestFirst,
}

/// Memoizing Murnaghan–Nakayama evaluator.
///
/// The memo is owned by the evaluator; share one evaluator across many
/// calls with the same `n` to reuse sub-results.
#[derive(Debug, Default)]
pub struct MnEvaluator {
    order: PartOrder,
    memo: HashMap<(Partition, Vec<usize>), BigInt>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_order(order: PartOrder) -> Self {
        MnEvaluator {
            order,
            memo: HashMap::new(),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `chi^alpha(beta)`.
    pub fn character(&mut self, alpha: &Partition, beta: &Partition) -> Result<BigInt> {
        if alpha.size() != beta.size() {
            return Err(Error::SizeMismatch {
                left: alpha.clone(),
                left_n: alpha.size(),
                right: beta.clone(),
                right_n: beta.size(),
            });
        }
        let mut cycles = beta.parts().to_vec();
        if self.order == PartOrder::SmallestFirst {
            cycles.reverse();
        }
        self.eval(alpha, &cycles)
    }

    fn eval(&mut self, alpha: &Partition, cycles: &[usize]) -> Result<BigInt> {
        let Some((&k, rest)) = cycles.split_first() else {
            debug_assert!(alpha.is_empty());
            return Ok(BigInt::one());
        };
        let key = (alpha.clone(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let mut total = BigInt::zero();
        for node in alpha.hooks_of_length(k) {
            let leg = alpha.leg_length(node)?;
            let smaller = alpha.remove_rim_hook(node)?;
            let sub = self.eval(&smaller, rest)?;
            if leg % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        Ok(total)
    }
}

/// `chi^alpha(beta)` with a fresh evaluator.
pub fn mn_character(alpha: &Partition, beta: &Partition) -> Result<BigInt> {
    MnEvaluator::new().character(alpha, beta)
}

/// `chi^alpha(1) = n! / prod h(i,j)`.
pub fn degree(alpha: &Partition) -> BigUint {
    let hooks = alpha
        .hook_lengths()
        .into_iter()
        .flatten()
        .fold(BigUint::one(), |acc, h| acc * h);
    factorial(alpha.size()) / hooks
}

/// Exact character table of Sym(n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
    degrees: Vec<BigUint>,
    class_sizes: Vec<BigUint>,
}

impl CharacterTable {
    /// Assembles a table from raw parts, checking shape and the degree column.
    pub fn from_parts(
        n: usize,
        partitions: Vec<Partition>,
        values: Vec<Vec<BigInt>>,
        class_sizes: Vec<BigUint>,
    ) -> Result<Self> {
        let expected = enumerate_partitions(n);
        if partitions != expected {
            return Err(Error::Integrity(format!(
                "labels are not the partitions of {n} in reverse lexicographic order"
            )));
        }
        let k = partitions.len();
        if values.len() != k || values.iter().any(|r| r.len() != k) || class_sizes.len() != k {
            return Err(Error::Integrity(format!("table for n = {n} is not {k} x {k}")));
        }
        let identity_col = k - 1;
        let degrees = values
            .iter()
            .map(|row| {
                row[identity_col].to_biguint().ok_or_else(|| {
                    Error::Integrity("negative value in the identity column".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            n,
            partitions,
            values,
            degrees,
            class_sizes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels (identical, reverse lexicographic).
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn degrees(&self) -> &[BigUint] {
        &self.degrees
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.class_sizes
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        // Labels are sorted descending.
        self.partitions.binary_search_by(|q| p.cmp(q)).ok()
    }

    pub fn value(&self, alpha: &Partition, beta: &Partition) -> Option<&BigInt> {
        Some(&self.values[self.index_of(alpha)?][self.index_of(beta)?])
    }

    /// `sum_alpha deg(alpha)^2 == n!`
    pub fn degree_sum_holds(&self) -> bool {
        self.degrees.iter().map(|d| d * d).sum::<BigUint>() == factorial(self.n)
    }

    /// Compares the first and second orthogonality relations in exact
    /// integer arithmetic and reports the first violation.
    pub fn check_orthogonality(&self) -> OrthogonalityReport {
        let k = self.partitions.len();
        let order = BigInt::from(factorial(self.n));
        for a in 0..k {
            for b in a..k {
                let inner: BigInt = (0..k)
                    .map(|c| {
                        BigInt::from(self.class_sizes[c].clone())
                            * &self.values[a][c]
                            * &self.values[b][c]
                    })
                    .sum();
                let expected = if a == b { order.clone() } else { BigInt::zero() };
                if inner != expected {
                    return OrthogonalityReport::fail(Violation {
                        relation: Relation::Rows,
                        first: self.partitions[a].clone(),
                        second: self.partitions[b].clone(),
                        got: inner,
                        expected,
                    });
                }
            }
        }
        for c in 0..k {
            for d in c..k {
                let inner: BigInt = (0..k)
                    .map(|a| &self.values[a][c] * &self.values[a][d])
                    .sum();
                let expected = if c == d {
                    &order / BigInt::from(self.class_sizes[c].clone())
                } else {
                    BigInt::zero()
                };
                if inner != expected {
                    return OrthogonalityReport::fail(Violation {
                        relation: Relation::Columns,
                        first: self.partitions[c].clone(),
                        second: self.partitions[d].clone(),
                        got: inner,
                        expected,
                    });
                }
            }
        }
        OrthogonalityReport { violation: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Rows,
    Columns,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub relation: Relation,
    pub first: Partition,
    pub second: Partition,
    pub got: BigInt,
    pub expected: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub violation: Option<Violation>,
}

impl OrthogonalityReport {
    fn fail(v: Violation) -> Self {
        OrthogonalityReport { violation: Some(v) }
    }

    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Full table of Sym(n), `n <= cap`.
pub fn character_table(n: usize, cap: usize) -> Result<CharacterTable> {
    if n > cap {
        return Err(Error::Capacity {
            what: "character table",
            n,
            cap,
        });
    }
    let partitions = enumerate_partitions(n);
    let mut mn = MnEvaluator::new();
    let mut values = Vec::with_capacity(partitions.len());
    for alpha in &partitions {
        let row = partitions
            .iter()
            .map(|beta| mn.character(alpha, beta))
            .collect::<Result<Vec<_>>>()?;
        values.push(row);
    }
    let class_sizes = partitions
        .iter()
        .map(|t| class_size(n, t))
        .collect::<Result<Vec<_>>>()?;
    let degrees = partitions.iter().map(degree).collect();
    Ok(CharacterTable {
        n,
        partitions,
        values,
        degrees,
        class_sizes,
    })
}
