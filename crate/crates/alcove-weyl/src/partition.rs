use std::fmt;
use std::str::FromStr;

/// Integer partition with positive parts in weakly decreasing order.
///
/// A partition of `n + 1` indexes a row tableau whose k-th row holds the
/// consecutive entries `end(k-1)+1, ..., end(k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(!parts.is_empty(), "empty partition");
        for w in parts.windows(2) {
            assert!(w[0] >= w[1], "parts must be weakly decreasing");
        }
        assert!(*parts.last().unwrap() >= 1, "parts must be positive");
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Total size; the rank of the ambient group is this value.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Partial sum `end(k) = parts[0] + ... + parts[k-1]`, with `end(0) = 0`.
    pub fn end(&self, k: usize) -> usize {
        self.parts[..k].iter().sum()
    }

    /// Entry in row `k`, column `i` of the row tableau (all 1-based).
    pub fn entry(&self, k: usize, i: usize) -> usize {
        assert!(k >= 1 && k <= self.rows() && i >= 1 && i <= self.parts[k - 1]);
        self.end(k - 1) + i
    }

    /// Row index (1-based) containing a tableau entry.
    pub fn row_of(&self, e: usize) -> usize {
        assert!(e >= 1 && e <= self.total());
        let mut acc = 0;
        for (k, &p) in self.parts.iter().enumerate() {
            acc += p;
            if e <= acc {
                return k + 1;
            }
        }
        unreachable!()
    }

    /// Column index (1-based) of a tableau entry within its row.
    pub fn col_of(&self, e: usize) -> usize {
        let k = self.row_of(e);
        e - self.end(k - 1)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition::new(parts)
    }

    /// Simple indices `j` with `j` and `j+1` in the same row.
    pub fn j_set(&self) -> Vec<usize> {
        (1..self.total())
            .filter(|&j| self.row_of(j) == self.row_of(j + 1))
            .collect()
    }

    /// `sum_k (k-1) * parts[k-1]`; the length of the longest element of the
    /// Young subgroup of the transpose.
    pub fn a_val(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .map(|(k, &p)| k * p)
            .sum()
    }

    /// `total! / prod(parts!)`, the number of minimal coset representatives.
    pub fn rep_count(&self) -> u64 {
        let fact = |m: usize| -> u64 { (1..=m as u64).product() };
        let mut v = fact(self.total());
        for &p in &self.parts {
            v /= fact(p);
        }
        v
    }

    /// Dominance order: `self <= other` iff every prefix sum of `self` is at
    /// most the corresponding prefix sum of `other`. Both must partition the
    /// same total.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        assert_eq!(self.total(), other.total());
        let rows = self.rows().max(other.rows());
        let mut a = 0usize;
        let mut b = 0usize;
        for k in 0..rows {
            a += self.parts.get(k).copied().unwrap_or(0);
            b += other.parts.get(k).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Maximal runs of equal parts, as `(part length, row range)` with rows
    /// 0-based.
    pub fn blocks(&self) -> Vec<(usize, std::ops::Range<usize>)> {
        let mut out = Vec::new();
        let mut start = 0;
        while start < self.parts.len() {
            let mut stop = start + 1;
            while stop < self.parts.len() && self.parts[stop] == self.parts[start] {
                stop += 1;
            }
            out.push((self.parts[start], start..stop));
            start = stop;
        }
        out
    }

    /// All partitions of `m` in descending lexicographic order.
    pub fn all(m: usize) -> Vec<Partition> {
        fn rec(m: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if m == 0 {
                out.push(Partition::new(prefix.clone()));
                return;
            }
            for p in (1..=max.min(m)).rev() {
                prefix.push(p);
                rec(m - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid partition: {0}")]
pub struct ParsePartitionError(String);

impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse()).collect();
        let parts = parts.map_err(|_| ParsePartitionError(s.to_string()))?;
        if parts.is_empty() || parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0)
        {
            return Err(ParsePartitionError(s.to_string()));
        }
        Ok(Partition::new(parts))
    }
}
