use crate::perm::Perm;

/// Root `e_i - e_j` with `i != j`. Positive iff `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Root {
    i: u8,
    j: u8,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j && i >= 1 && j >= 1);
        Root {
            i: i as u8,
            j: j as u8,
        }
    }

    pub fn simple(i: usize) -> Self {
        Root::new(i, i + 1)
    }

    /// Highest root `e_1 - e_rank`.
    pub fn phi(rank: usize) -> Self {
        Root::new(1, rank)
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn neg(&self) -> Root {
        Root { i: self.j, j: self.i }
    }

    /// `u(e_i - e_j) = e_{u(i)} - e_{u(j)}`.
    pub fn act(&self, u: &Perm) -> Root {
        Root::new(u.apply(self.i()), u.apply(self.j()))
    }

    /// Sum of simple-root coefficients, signed.
    pub fn height(&self) -> i64 {
        self.j as i64 - self.i as i64
    }

    pub fn all_positive(rank: usize) -> impl Iterator<Item = Root> {
        (1..=rank).flat_map(move |i| (i + 1..=rank).map(move |j| Root::new(i, j)))
    }
}
