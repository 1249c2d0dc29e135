//! Integer partitions and Young-diagram combinatorics.
//!
//! Parts are row lengths: the partition `(3,1)` has a first row of three boxes
//! and a second row of one box.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on partition sizes accepted by [`partitions_up_to`].
pub const DEFAULT_MAX_PARTITION_SIZE: usize = 8;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts already known to be valid.
    ///
    /// Panics on invalid input; meant for literals in code and tests.
    pub fn from_parts(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i`, zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of column `j`, zero past the last column.
    pub fn column(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > j).count()
    }

    /// True iff the diagram of `other` sits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        Partition { parts: (0..width).map(|j| self.column(j)).collect() }
    }

    /// Boxes as `(row, column)` pairs in row-reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.parts.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect()
    }

    /// Partitions obtained by adding a single box.
    pub fn add_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.row(i) < self.row(i - 1) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Partitions obtained by removing a single corner box.
    pub fn remove_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.row(i) > self.row(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// True iff every part equals the first one.
    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Hook length of the box at `(i, j)`.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        (self.row(i) - j - 1) + (self.column(j) - i - 1) + 1
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The partition with `rows` parts, each equal to `cols`.
pub fn rectangle(rows: usize, cols: usize) -> Partition {
    assert!(rows >= 1 && cols >= 1, "rectangle needs at least one row and one column");
    Partition { parts: vec![cols; rows] }
}

/// All partitions of `n` in lexicographically descending order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition of size `1..=bound`, ordered by size and then
/// lexicographically descending.
pub fn partitions_up_to(bound: usize) -> Result<Vec<Partition>> {
    partitions_up_to_with_limit(bound, DEFAULT_MAX_PARTITION_SIZE)
}

pub fn partitions_up_to_with_limit(bound: usize, limit: usize) -> Result<Vec<Partition>> {
    if bound > limit {
        return Err(Error::PartitionTooLarge { size: bound, limit });
    }
    Ok((1..=bound).flat_map(partitions_of).collect())
}

/// Every partition whose diagram is contained in `lambda`, including the
/// empty partition and `lambda` itself.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn go(lambda: &Partition, i: usize, prev: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: prefix.clone() });
        if i >= lambda.len() {
            return;
        }
        for part in 1..=lambda.row(i).min(prev) {
            prefix.push(part);
            go(lambda, i + 1, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Number of standard Young tableaux of shape `lambda` (hook length formula).
pub fn count_standard_tableaux(lambda: &Partition) -> u64 {
    let hooks: u64 = lambda.boxes().iter().map(|&(i, j)| lambda.hook(i, j) as u64).product();
    factorial(lambda.size()) / hooks
}

/// The Littlewood-Richardson coefficient `c^lambda_{mu,nu}`.
///
/// Counts semistandard fillings of the skew shape `lambda/mu` with content
/// `nu` whose reverse reading word (rows top to bottom, each row right to
/// left) is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    // Skew boxes in reverse reading order.
    let cells: Vec<(usize, usize)> =
        (0..lambda.len()).flat_map(|i| (mu.row(i)..lambda.row(i)).rev().map(move |j| (i, j))).collect();
    let mut filling = vec![vec![0usize; lambda.row(0)]; lambda.len()];
    let mut counts = vec![0usize; nu.len()];
    let mut total = 0;
    lr_fill(lambda, mu, nu, &cells, 0, &mut filling, &mut counts, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn lr_fill(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cells: &[(usize, usize)],
    k: usize,
    filling: &mut [Vec<usize>],
    counts: &mut [usize],
    total: &mut u64,
) {
    let Some(&(i, j)) = cells.get(k) else {
        *total += 1;
        return;
    };
    // Rows weakly increase left to right: bounded above by the right neighbour.
    let upper = if j + 1 < lambda.row(i) { filling[i][j + 1] } else { nu.len() };
    // Columns strictly increase downward, when the box above is in the skew shape.
    let lower = if i > 0 && j >= mu.row(i - 1) { filling[i - 1][j] + 1 } else { 1 };
    for v in lower..=upper {
        let idx = v - 1;
        if counts[idx] >= nu.row(idx) {
            continue;
        }
        if idx > 0 && counts[idx - 1] <= counts[idx] {
            continue;
        }
        counts[idx] += 1;
        filling[i][j] = v;
        lr_fill(lambda, mu, nu, cells, k + 1, filling, counts, total);
        counts[idx] -= 1;
    }
    filling[i][j] = 0;
}
