//! Integer partitions and Young-diagram combinatorics.
//!
//! Nodes are 1-based `(row, column)` pairs. Everything that asks "is this box
//! in the diagram?" goes through [`Partition::contains`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `n`: weakly decreasing positive parts.
///
/// The empty partition is the unique partition of 0. Ordering is
/// lexicographic on the parts, so sorting descending gives reverse
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub const fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    /// Validates `parts` as a canonical partition.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(n)`, the one-row diagram.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// `(1^n)`, the one-column diagram.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook shape `(m+1, 1^(n-m-1))` for `0 <= m <= n-1`.
    pub fn hook(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m >= n {
            return Err(Error::InvalidPartition(format!(
                "no hook shape with arm {m} in a partition of {n}"
            )));
        }
        let mut parts = vec![m + 1];
        parts.resize(parts.len() + n - m - 1, 1);
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-based); 0 past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based): the number of parts `>= j`.
    pub fn col_len(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.row_len(node.row)
    }

    fn check_node(&self, node: Node) -> Result<()> {
        if self.contains(node) {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                partition: self.clone(),
                node,
            })
        }
    }

    /// All nodes in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Node::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=first).map(|j| self.col_len(j)).collect(),
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Cells strictly to the right of `node` in its row.
    pub fn arm_length(&self, node: Node) -> Result<usize> {
        self.check_node(node)?;
        Ok(self.row_len(node.row) - node.col)
    }

    /// Cells strictly below `node` in its column.
    pub fn leg_length(&self, node: Node) -> Result<usize> {
        self.check_node(node)?;
        Ok(self.col_len(node.col) - node.row)
    }

    pub fn hook_length(&self, node: Node) -> Result<usize> {
        self.check_node(node)?;
        Ok(self.row_len(node.row) - node.col + self.col_len(node.col) - node.row + 1)
    }

    /// Hook length of every node, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (1..=len)
                    .map(|j| len - j + conj.parts[j - 1] - (i + 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// Nodes whose hook length is exactly `k`.
    pub fn hooks_of_length(&self, k: usize) -> Vec<Node> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len {
                if len - j + conj.parts[j - 1] - i == k {
                    out.push(Node::new(i + 1, j));
                }
            }
        }
        out
    }

    /// The `(i,j)`-rim: nodes `(l,k)` with `l >= i`, `k >= j` and
    /// `(l+1,k+1)` outside the diagram.
    pub fn rim(&self, node: Node) -> Result<Vec<Node>> {
        self.check_node(node)?;
        Ok(self
            .nodes()
            .filter(|x| {
                x.row >= node.row
                    && x.col >= node.col
                    && !self.contains(Node::new(x.row + 1, x.col + 1))
            })
            .collect())
    }

    /// Removes the `(i,j)`-rim, leaving a partition of `n - h(i,j)`.
    pub fn remove_rim_hook(&self, node: Node) -> Result<Partition> {
        self.check_node(node)?;
        // Row r >= i keeps its first j-1 cells plus every cell (r,k), k >= j,
        // whose diagonal neighbour (r+1,k+1) is still in the diagram.
        let parts: Vec<usize> = self
            .parts
            .iter()
            .enumerate()
            .map(|(idx, &len)| {
                let r = idx + 1;
                if r < node.row || len < node.col {
                    len
                } else {
                    let below = self.row_len(r + 1);
                    (node.col - 1).max(below.saturating_sub(1))
                }
            })
            .filter(|&p| p > 0)
            .collect();
        let result = Partition::new(parts).map_err(|e| {
            Error::Integrity(format!("rim removal at {node} from {self} broke shape: {e}"))
        })?;
        let removed = self.hook_length(node)?;
        if result.size() + removed != self.size() {
            return Err(Error::Integrity(format!(
                "rim removal at {node} from {self} removed {} cells, expected {removed}",
                self.size() - result.size()
            )));
        }
        Ok(result)
    }

    /// `Some(m)` iff this is the hook shape `(m+1, 1^(n-m-1))`.
    pub fn hook_partition_index(&self) -> Option<usize> {
        let (&first, rest) = self.parts.split_first()?;
        if rest.iter().all(|&p| p == 1) {
            Some(first - 1)
        } else {
            None
        }
    }

    /// Multiplicity of each part size: `t[i]` = number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut t = vec![0; self.parts.first().map_or(1, |&p| p + 1)];
        for &p in &self.parts {
            t[p] += 1;
        }
        t
    }

    /// Command-line / JSON text form: `"3,1,1"`, or `"()"` for the empty
    /// partition.
    pub fn to_text(&self) -> String {
        if self.parts.is_empty() {
            "()".to_string()
        } else {
            self.parts
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Exponent notation, e.g. `(3,1^2)`.
    pub fn to_exponent_notation(&self) -> String {
        let mut groups: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            groups.push(if run == 1 {
                p.to_string()
            } else {
                format!("{p}^{run}")
            });
            i += run;
        }
        format!("({})", groups.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            f.write_str("()")
        } else {
            write!(f, "({})", self.to_text())
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"3,1,1"`, `"(3,1,1)"`, `"()"` and `""`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {tok:?} in partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
