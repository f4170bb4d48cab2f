//! Concrete symmetric groups: permutations, cycle types, conjugacy classes
//! and explicit Cayley-graph adjacency matrices.

use std::fmt;
use std::io::Write;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};

/// Largest `n` the brute-force graph side accepts without an override.
pub const ORACLE_CAP: usize = 6;
/// Largest `n` accepted with the extended override (5040 vertices).
pub const ORACLE_CAP_EXTENDED: usize = 7;

/// A permutation of `{1..n}`, stored 0-based: `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation, e.g. `[2,3,1]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &x in one_line {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a bijection on 1..={n}"
                )));
            }
            seen[x - 1] = true;
            images.push(x - 1);
        }
        Ok(Permutation { images })
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]` on `n` letters (1-based).
    pub fn cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for (idx, &x) in cycle.iter().enumerate() {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{cycle:?} is not a cycle on 1..={n}"
                )));
            }
            seen[x - 1] = true;
            images[x - 1] = cycle[(idx + 1) % cycle.len()] - 1;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::Arity(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Cycle lengths (fixed points included) as a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths).expect("cycle lengths are positive")
    }

    /// Order in the group: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycle_type()
            .parts()
            .iter()
            .fold(1, |acc, &l| num_integer::lcm(acc, l))
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &x)| *i == x).count()
    }

    /// Position in the lexicographic listing of one-line notations (Lehmer code).
    pub fn rank(&self) -> usize {
        let n = self.images.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            rank = rank * (n - i) + smaller_later;
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn from_rank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        let images = digits.into_iter().map(|d| pool.remove(d)).collect();
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "[{}]", cells.join(" "))
    }
}

/// All of Sym(n) in lexicographic one-line order, so `all(n)[r].rank() == r`.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let total = factorial_usize(n);
    (0..total).map(|r| Permutation::from_rank(n, r)).collect()
}

fn factorial_usize(n: usize) -> usize {
    (1..=n).product()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    // Each prefix product is itself a binomial coefficient, so division is exact.
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `z_t = prod_i i^{t_i} t_i!`, the centralizer order of an element of type `t`.
pub fn centralizer_order(t: &Partition) -> BigUint {
    t.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigUint::one(), |acc, (i, &ti)| {
            acc * BigUint::from(i).pow(ti as u32) * factorial(ti)
        })
}

/// Number of permutations in Sym(n) of cycle type `t`: `n! / z_t`.
pub fn class_size(n: usize, t: &Partition) -> Result<BigUint> {
    if t.size() != n {
        return Err(Error::InvalidClass(format!(
            "{t} is not a cycle type of Sym({n})"
        )));
    }
    Ok(factorial(n) / centralizer_order(t))
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::Capacity { what, n, cap })
    } else {
        Ok(())
    }
}

/// Every permutation of cycle type `t`, in lexicographic order.
pub fn enumerate_class(n: usize, t: &Partition, cap: usize) -> Result<Vec<Permutation>> {
    check_cap("conjugacy class enumeration", n, cap)?;
    if t.size() != n {
        return Err(Error::InvalidClass(format!(
            "{t} is not a cycle type of Sym({n})"
        )));
    }
    Ok(all_permutations(n)
        .into_iter()
        .filter(|x| x.cycle_type() == *t)
        .collect())
}

/// A union of conjugacy classes of Sym(n), excluding the identity class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    n: usize,
    cycle_types: Vec<Partition>,
}

impl ClassSpec {
    pub fn new(n: usize, cycle_types: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let mut cycle_types: Vec<Partition> = cycle_types.into_iter().collect();
        if n == 0 {
            return Err(Error::InvalidClass("Sym(0) has no non-identity class".into()));
        }
        if cycle_types.is_empty() {
            return Err(Error::InvalidClass("class list is empty".into()));
        }
        for t in &cycle_types {
            if t.size() != n {
                return Err(Error::InvalidClass(format!(
                    "{t} is not a cycle type of Sym({n})"
                )));
            }
            if *t == Partition::column(n) {
                return Err(Error::InvalidClass(format!(
                    "identity class {t} is not allowed in the connection set"
                )));
            }
        }
        cycle_types.sort_unstable_by(|a, b| b.cmp(a));
        cycle_types.dedup();
        Ok(ClassSpec { n, cycle_types })
    }

    /// `{(n)}`: the connection set of all n-cycles.
    pub fn n_cycles(n: usize) -> Result<Self> {
        ClassSpec::new(n, [Partition::row(n)])
    }

    /// Parses `"3,1;2,2"`: semicolon-separated cycle types.
    pub fn parse(n: usize, classes: &str) -> Result<Self> {
        let types = classes
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        ClassSpec::new(n, types)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cycle types in reverse lexicographic order.
    pub fn cycle_types(&self) -> &[Partition] {
        &self.cycle_types
    }

    /// `|S|`, the valency of the Cayley graph.
    pub fn connection_set_size(&self) -> BigUint {
        self.cycle_types
            .iter()
            .map(|t| class_size(self.n, t).expect("validated cycle type"))
            .sum()
    }

    pub fn to_text(&self) -> String {
        self.cycle_types
            .iter()
            .map(Partition::to_text)
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Every non-empty union of non-identity classes of Sym(n).
    pub fn all_for(n: usize) -> Vec<ClassSpec> {
        let types: Vec<Partition> = enumerate_partitions(n)
            .into_iter()
            .filter(|t| *t != Partition::column(n))
            .collect();
        (1u64..(1 << types.len()))
            .map(|mask| {
                let chosen = types
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, t)| t.clone());
                ClassSpec::new(n, chosen).expect("valid subset")
            })
            .collect()
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let types: Vec<String> = self.cycle_types.iter().map(|t| t.to_string()).collect();
        write!(f, "Sym({}) {{{}}}", self.n, types.join(", "))
    }
}

/// Dense 0/1 matrix with bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    order: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl AdjacencyMatrix {
    pub fn zeros(order: usize) -> Self {
        let words_per_row = order.div_ceil(64);
        AdjacencyMatrix {
            order,
            words_per_row,
            bits: vec![0; order * words_per_row],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words_per_row + v / 64] |= 1 << (v % 64);
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&v| self.get(u, v))
    }

    pub fn row_sum(&self, u: usize) -> usize {
        self.bits[u * self.words_per_row..(u + 1) * self.words_per_row]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|u| self.neighbors(u).all(|v| self.get(v, u)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.order).all(|u| !self.get(u, u))
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order)
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// One `"u v"` line per edge, `u < v`, sorted.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}")?;
        }
        Ok(())
    }

    /// Connected components, by breadth-first search.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut count = 0;
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        count
    }
}

/// Adjacency matrix of `Cay(Sym(n), S)`: vertices in lexicographic rank
/// order, `u ~ v` iff `v = a * u` for some `a` in `S`.
pub fn build_adjacency(spec: &ClassSpec, cap: usize) -> Result<AdjacencyMatrix> {
    let n = spec.n();
    check_cap("Cayley graph construction", n, cap)?;
    let connection: Vec<Permutation> = spec
        .cycle_types()
        .iter()
        .map(|t| enumerate_class(n, t, cap))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let vertices = all_permutations(n);
    let mut adj = AdjacencyMatrix::zeros(vertices.len());
    for (u_rank, u) in vertices.iter().enumerate() {
        for a in &connection {
            let v = a.compose(u)?;
            adj.set(u_rank, v.rank());
        }
    }
    Ok(adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).cycle_type(), p("1,1,1,1"));
        let c4 = Permutation::cycle(4, &[1, 2, 3, 4]).unwrap();
        assert_eq!(c4.cycle_type(), p("4"));
        let t = Permutation::cycle(3, &[1, 2]).unwrap();
        assert_eq!(t.cycle_type(), p("2,1"));
    }

    #[test]
    fn group_operations() {
        let x = Permutation::from_one_line(&[3, 1, 4, 2]).unwrap();
        assert_eq!(x.compose(&Permutation::identity(4)).unwrap(), x);
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
        let c = Permutation::cycle(4, &[1, 2, 3, 4]).unwrap();
        assert_eq!(c.inverse(), Permutation::cycle(4, &[1, 4, 3, 2]).unwrap());
        assert!(matches!(
            x.compose(&Permutation::identity(3)),
            Err(Error::Arity(4, 3))
        ));
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Permutation::cycle(3, &[1, 2]).unwrap();
        let b = Permutation::cycle(3, &[2, 3]).unwrap();
        // (a*b)(2) = a(b(2)) = a(3) = 3
        assert_eq!(a.compose(&b).unwrap().apply(2), 3);
    }

    #[test]
    fn bad_one_line_rejected() {
        assert!(Permutation::from_one_line(&[1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 4, 2]).is_err());
    }

    #[test]
    fn rank_round_trip() {
        let all = all_permutations(5);
        for (r, x) in all.iter().enumerate() {
            assert_eq!(x.rank(), r);
        }
        assert!(all.windows(2).all(|w| w[0].one_line() < w[1].one_line()));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(4, &p("4")).unwrap(), BigUint::from(6u32));
        assert_eq!(class_size(7, &Partition::column(7)).unwrap(), BigUint::from(1u32));
        assert!(matches!(class_size(4, &p("3")), Err(Error::InvalidClass(_))));
    }

    #[test]
    fn class_sizes_match_exhaustive_scan() {
        for n in 1..=6 {
            let perms = all_permutations(n);
            for t in enumerate_partitions(n) {
                let count = perms.iter().filter(|x| x.cycle_type() == t).count();
                assert_eq!(class_size(n, &t).unwrap(), BigUint::from(count), "{t}");
            }
        }
    }

    #[test]
    fn enumerate_three_cycles() {
        let c = enumerate_class(3, &p("3"), ORACLE_CAP).unwrap();
        let lines: Vec<Vec<usize>> = c.iter().map(Permutation::one_line).collect();
        assert_eq!(lines, vec![vec![2, 3, 1], vec![3, 1, 2]]);
        assert_eq!(
            enumerate_class(3, &p("1,1,1"), ORACLE_CAP).unwrap(),
            vec![Permutation::identity(3)]
        );
        let c4 = enumerate_class(4, &p("4"), ORACLE_CAP).unwrap();
        assert_eq!(c4.len(), 6);
        assert!(c4.iter().all(|x| x.fixed_points() == 0 && x.order() == 4));
        assert!(matches!(
            enumerate_class(8, &p("8"), ORACLE_CAP),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn classes_are_inverse_closed() {
        for n in 1..=5 {
            for x in all_permutations(n) {
                assert_eq!(x.inverse().cycle_type(), x.cycle_type());
            }
        }
    }

    #[test]
    fn class_spec_validation() {
        assert!(ClassSpec::new(4, []).is_err());
        assert!(ClassSpec::parse(4, "1,1,1,1").is_err());
        assert!(ClassSpec::parse(4, "3,1;2").is_err());
        assert!(ClassSpec::parse(0, "").is_err());
        let s = ClassSpec::parse(4, "2,1,1;4;4").unwrap();
        assert_eq!(s.cycle_types(), &[p("4"), p("2,1,1")]);
        assert_eq!(s.to_text(), "4;2,1,1");
        assert_eq!(s.connection_set_size(), BigUint::from(12u32));
        assert_eq!(ClassSpec::all_for(4).len(), 15);
    }

    #[test]
    fn two_triangles() {
        let adj = build_adjacency(&ClassSpec::n_cycles(3).unwrap(), ORACLE_CAP).unwrap();
        assert_eq!(adj.order(), 6);
        assert!((0..6).all(|u| adj.row_sum(u) == 2));
        assert_eq!(adj.edges().len(), 6);
        assert_eq!(adj.component_count(), 2);
        assert!(adj.is_symmetric() && adj.has_zero_diagonal());
    }

    #[test]
    fn four_cycle_graph_is_six_regular() {
        let adj = build_adjacency(&ClassSpec::n_cycles(4).unwrap(), ORACLE_CAP).unwrap();
        assert_eq!(adj.order(), 24);
        assert!((0..24).all(|u| adj.row_sum(u) == 6));
        assert_eq!(adj.component_count(), 1);
    }

    #[test]
    fn adjacency_cap() {
        let spec = ClassSpec::n_cycles(7).unwrap();
        assert!(matches!(
            build_adjacency(&spec, ORACLE_CAP),
            Err(Error::Capacity { n: 7, cap: 6, .. })
        ));
    }

    #[test]
    fn edge_list_format() {
        let adj = build_adjacency(&ClassSpec::n_cycles(3).unwrap(), ORACLE_CAP).unwrap();
        let mut buf = Vec::new();
        adj.write_edge_list(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        // Ranks: 0=123 1=132 2=213 3=231 4=312 5=321; even perms {0,3,4}.
        assert_eq!(text, "0 3\n0 4\n1 2\n1 5\n2 5\n3 4\n");
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(18, 9), BigUint::from(48620u32));
        assert_eq!(binomial(3, 4), BigUint::from(0u32));
    }
}
