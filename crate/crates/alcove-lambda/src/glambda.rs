use std::ops::Range;

use alcove_weyl::{Partition, Perm};
use itertools::Itertools;

/// The group permuting equal-length rows of the tableau of lambda, acting on
/// the weight lattice while stabilising each column. Isomorphic to a product
/// of symmetric groups, one per maximal run of equal parts.
pub struct GLambdaGroup {
    lambda: Partition,
    blocks: Vec<(usize, Range<usize>)>,
}

impl GLambdaGroup {
    pub fn new(lambda: &Partition) -> Self {
        GLambdaGroup {
            lambda: lambda.clone(),
            blocks: lambda.blocks(),
        }
    }

    pub fn order(&self) -> u64 {
        self.blocks
            .iter()
            .map(|(_, r)| (1..=r.len() as u64).product::<u64>())
            .product()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|(_, r)| r.len() == 1)
    }

    /// Adjacent-row swap generators as (i, i+1), rows 1-based.
    pub fn generators_rows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (_, r) in &self.blocks {
            for i in r.start + 1..r.end {
                out.push((i, i + 1));
            }
        }
        out
    }

    /// Positive roots e~_i - e~_j: pairs i < j of rows of equal length.
    pub fn pos_roots(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (_, r) in &self.blocks {
            for i in r.start + 1..=r.end {
                for j in i + 1..=r.end {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// A row permutation as an element of W: row i maps onto row pi(i)
    /// columnwise. pi is given by 1-based images, and must preserve lengths.
    pub fn perm_of_rows(&self, pi: &[usize]) -> Perm {
        let la = &self.lambda;
        let mut img = vec![0u8; la.total()];
        for k in 1..=la.rows() {
            let target = pi[k - 1];
            assert_eq!(la.parts()[k - 1], la.parts()[target - 1], "length-preserving row map");
            for c in 1..=la.parts()[k - 1] {
                img[la.entry(k, c) - 1] = la.entry(target, c) as u8;
            }
        }
        Perm::from_images(img)
    }

    pub fn generators_perm(&self) -> Vec<Perm> {
        self.generators_rows()
            .iter()
            .map(|&(i, j)| {
                let mut pi: Vec<usize> = (1..=self.lambda.rows()).collect();
                pi.swap(i - 1, j - 1);
                self.perm_of_rows(&pi)
            })
            .collect()
    }

    /// All elements as row permutations (1-based images), identity first.
    pub fn row_elements(&self) -> Vec<Vec<usize>> {
        let per_block: Vec<Vec<Vec<usize>>> = self
            .blocks
            .iter()
            .map(|(_, r)| {
                (r.start + 1..=r.end)
                    .permutations(r.len())
                    .collect::<Vec<_>>()
            })
            .collect();
        per_block
            .into_iter()
            .multi_cartesian_product()
            .map(|choice| {
                let mut pi: Vec<usize> = (1..=self.lambda.rows()).collect();
                for (b, assigned) in choice.iter().enumerate() {
                    let r = &self.blocks[b].1;
                    for (off, &img) in assigned.iter().enumerate() {
                        pi[r.start + off] = img;
                    }
                }
                pi
            })
            .collect()
    }

    /// Action on class coefficient vectors: entry i moves to position pi(i).
    pub fn act_rows(&self, pi: &[usize], a: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len()];
        for (i, &target) in pi.iter().enumerate() {
            out[target - 1] = a[i];
        }
        out
    }

    /// a_i >= a_j for i < j within each equal-length block. Well-defined on
    /// cosets since the shift lattice is constant on blocks.
    pub fn is_dominant(&self, a: &[i64]) -> bool {
        self.blocks
            .iter()
            .all(|(_, r)| (r.start + 1..r.end).all(|i| a[i - 1] >= a[i]))
    }

    /// Sort each block descending.
    pub fn dominant_rep(&self, a: &[i64]) -> Vec<i64> {
        let mut out = a.to_vec();
        for (_, r) in &self.blocks {
            out[r.start..r.end].sort_unstable_by(|x, y| y.cmp(x));
        }
        out
    }
}
