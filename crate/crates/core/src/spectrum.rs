//! Spectra of normal Cayley graphs on Sym(n) from the character table.
//!
//! For a connection set `S` that is a union of conjugacy classes, each
//! irreducible character `chi` contributes the eigenvalue
//! `sum_{a in S} chi(a) / chi(1)` with multiplicity `chi(1)^2`. Everything
//! here is exact rational arithmetic.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::characters::{degree, CharacterTable, MnEvaluator, TABLE_CAP};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symgroup::{binomial, class_size, factorial, ClassSpec};

/// One distinct eigenvalue with its multiplicity and the characters that
/// produce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumLine {
    pub eigenvalue: BigRational,
    pub multiplicity: BigUint,
    /// Reverse lexicographic.
    pub contributors: Vec<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub spec: ClassSpec,
    /// Sorted by eigenvalue, descending.
    pub lines: Vec<SpectrumLine>,
    pub vertex_count: BigUint,
    /// `|S|`.
    pub degree: BigUint,
    pub energy: BigRational,
    pub nullity: BigUint,
    pub is_integral: bool,
    pub is_hyperenergetic: bool,
}

impl SpectrumReport {
    pub fn n(&self) -> usize {
        self.spec.n()
    }

    /// Multiplicity of `value`, zero if it is not an eigenvalue.
    pub fn multiplicity_of(&self, value: &BigRational) -> BigUint {
        self.lines
            .iter()
            .find(|l| &l.eigenvalue == value)
            .map_or_else(BigUint::zero, |l| l.multiplicity.clone())
    }

    pub fn energy_equals(&self, value: &BigUint) -> bool {
        self.energy == BigRational::from_integer(BigInt::from(value.clone()))
    }

    pub fn energy_is_integer(&self) -> bool {
        self.energy.is_integer()
    }

    /// `sum_lines mult * lambda^k`.
    pub fn moment(&self, k: u32) -> BigRational {
        self.lines
            .iter()
            .map(|l| BigRational::from_integer(BigInt::from(l.multiplicity.clone())) * pow(&l.eigenvalue, k))
            .sum()
    }

    /// True iff the eigenvalue multiset is closed under negation.
    pub fn is_symmetric(&self) -> bool {
        self.lines
            .iter()
            .all(|l| self.multiplicity_of(&-l.eigenvalue.clone()) == l.multiplicity)
    }
}

fn pow(x: &BigRational, k: u32) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * x)
}

fn check_sizes(alpha: &Partition, spec: &ClassSpec) -> Result<()> {
    if alpha.size() != spec.n() {
        let t = &spec.cycle_types()[0];
        return Err(Error::SizeMismatch {
            left: alpha.clone(),
            left_n: alpha.size(),
            right: t.clone(),
            right_n: spec.n(),
        });
    }
    Ok(())
}

fn eigenvalue_with(mn: &mut MnEvaluator, alpha: &Partition, spec: &ClassSpec) -> Result<BigRational> {
    check_sizes(alpha, spec)?;
    let mut numerator = BigInt::zero();
    for t in spec.cycle_types() {
        numerator += BigInt::from(class_size(spec.n(), t)?) * mn.character(alpha, t)?;
    }
    Ok(BigRational::new(numerator, BigInt::from(degree(alpha))))
}

/// `eta_alpha = sum_{t in S} |C_t| chi^alpha(t) / chi^alpha(1)`.
pub fn character_eigenvalue(alpha: &Partition, spec: &ClassSpec) -> Result<BigRational> {
    eigenvalue_with(&mut MnEvaluator::new(), alpha, spec)
}

/// Spectrum of `Cay(Sym(n), S)` with the default table cap.
pub fn spectrum(spec: &ClassSpec) -> Result<SpectrumReport> {
    spectrum_capped(spec, TABLE_CAP)
}

pub fn spectrum_capped(spec: &ClassSpec, cap: usize) -> Result<SpectrumReport> {
    let n = spec.n();
    if n > cap {
        return Err(Error::Capacity {
            what: "spectrum",
            n,
            cap,
        });
    }
    let mut mn = MnEvaluator::new();
    let per_character = enumerate_partitions(n)
        .into_iter()
        .map(|alpha| {
            let eta = eigenvalue_with(&mut mn, &alpha, spec)?;
            let d = degree(&alpha);
            Ok((alpha, d, eta))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(spec, per_character))
}

/// Spectrum read off a precomputed table of the same `n`.
pub fn spectrum_from_table(spec: &ClassSpec, table: &CharacterTable) -> Result<SpectrumReport> {
    if table.n() != spec.n() {
        return Err(Error::Integrity(format!(
            "table for n = {} used with {spec}",
            table.n()
        )));
    }
    let cols: Vec<(usize, BigInt)> = spec
        .cycle_types()
        .iter()
        .map(|t| {
            let c = table.index_of(t).expect("table covers every cycle type");
            (c, BigInt::from(table.class_sizes()[c].clone()))
        })
        .collect();
    let per_character = table
        .partitions()
        .iter()
        .enumerate()
        .map(|(a, alpha)| {
            let numerator: BigInt = cols
                .iter()
                .map(|(c, size)| size * &table.values()[a][*c])
                .sum();
            let d = table.degrees()[a].clone();
            let eta = BigRational::new(numerator, BigInt::from(d.clone()));
            (alpha.clone(), d, eta)
        })
        .collect();
    Ok(assemble(spec, per_character))
}

fn assemble(spec: &ClassSpec, per_character: Vec<(Partition, BigUint, BigRational)>) -> SpectrumReport {
    let n = spec.n();
    let mut grouped: BTreeMap<BigRational, (BigUint, Vec<Partition>)> = BTreeMap::new();
    let mut energy = BigRational::zero();
    for (alpha, d, eta) in per_character {
        let weight = &d * &d;
        energy += BigRational::from_integer(BigInt::from(weight.clone())) * eta.abs();
        let entry = grouped
            .entry(eta)
            .or_insert_with(|| (BigUint::zero(), Vec::new()));
        entry.0 += weight;
        entry.1.push(alpha);
    }
    let lines: Vec<SpectrumLine> = grouped
        .into_iter()
        .rev()
        .map(|(eigenvalue, (multiplicity, contributors))| SpectrumLine {
            eigenvalue,
            multiplicity,
            contributors,
        })
        .collect();

    let vertex_count = factorial(n);
    let nonzero: BigUint = lines
        .iter()
        .filter(|l| !l.eigenvalue.is_zero())
        .map(|l| l.multiplicity.clone())
        .sum();
    let nullity = &vertex_count - nonzero;
    let is_integral = lines.iter().all(|l| l.eigenvalue.is_integer());
    // Energy of the complete graph on the same vertex set is 2N - 2.
    let threshold = BigRational::from_integer(BigInt::from(vertex_count.clone()) * 2 - 2);
    let is_hyperenergetic = energy > threshold;

    SpectrumReport {
        spec: spec.clone(),
        lines,
        vertex_count,
        degree: spec.connection_set_size(),
        energy,
        nullity,
        is_integral,
        is_hyperenergetic,
    }
}

/// Whether the closed forms below are claimed for `n` (they need `n >= 4`
/// for hyperenergeticity; the formulas themselves are evaluated for any `n`).
pub fn theorem_hypothesis_holds(n: usize) -> bool {
    n >= 4
}

/// `2^(n-1) (n-1)!`, the energy of the n-cycle Cayley graph.
pub fn closed_form_energy(n: usize) -> BigUint {
    assert!(n >= 1, "closed form energy needs n >= 1");
    (BigUint::one() << (n - 1)) * factorial(n - 1)
}

/// `n! - C(2n-2, n-1)`, the nullity of the n-cycle Cayley graph.
pub fn closed_form_nullity(n: usize) -> BigUint {
    assert!(n >= 1, "closed form nullity needs n >= 1");
    factorial(n) - binomial(2 * n - 2, n - 1)
}

/// `sum_{m=0}^{n-1} C(n-1,m)^2 == C(2n-2, n-1)`.
pub fn vandermonde_check(n: usize) -> bool {
    assert!(n >= 1, "vandermonde check needs n >= 1");
    let lhs: BigUint = (0..n).map(|m| binomial(n - 1, m).pow(2)).sum();
    lhs == binomial(2 * n - 2, n - 1)
}

/// `a_n` evaluated two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryA {
    pub n: usize,
    /// `sum_{k=0}^{n-1} (C(2n,n) - 2 C(2n,k))`
    pub sum_form: BigInt,
    /// `(n+1) C(2n,n) - 4^n`
    pub closed_form: BigInt,
}

impl CorollaryA {
    pub fn is_non_negative(&self) -> bool {
        !self.sum_form.is_negative()
    }
}

pub fn corollary_a(n: usize) -> Result<CorollaryA> {
    if n == 0 {
        return Err(Error::Integrity("a_n is defined for n >= 1".into()));
    }
    let central = BigInt::from(binomial(2 * n, n));
    let sum_form: BigInt = (0..n)
        .map(|k| &central - BigInt::from(binomial(2 * n, k)) * 2)
        .sum();
    let closed_form = &central * (n + 1) - (BigInt::one() << (2 * n));
    if sum_form != closed_form {
        return Err(Error::Integrity(format!(
            "a_{n}: sum form {sum_form} != closed form {closed_form}"
        )));
    }
    Ok(CorollaryA {
        n,
        sum_form,
        closed_form,
    })
}

/// `4^n (n!)^2 <= (n+1)! n! C(2n,n)`, the squared form of
/// `2^n n! <= sqrt((n+1)! n! C(2n,n))`.
pub fn energy_bound_check(n: usize) -> bool {
    let lhs = (BigUint::one() << (2 * n)) * factorial(n).pow(2);
    let rhs = factorial(n + 1) * factorial(n) * binomial(2 * n, n);
    lhs <= rhs
}
