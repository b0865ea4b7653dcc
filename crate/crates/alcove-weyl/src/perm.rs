use std::fmt;

/// Permutation of `{1, ..., rank}` stored as one-line images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(rank: usize) -> Self {
        assert!((1..=u8::MAX as usize).contains(&rank), "rank out of range");
        Perm {
            img: (1..=rank as u8).collect(),
        }
    }

    /// Builds from one-line images, `img[i-1] = w(i)`. Panics unless bijective.
    pub fn from_images(img: Vec<u8>) -> Self {
        Self::try_from_images(img).expect("not a permutation")
    }

    pub fn try_from_images(img: Vec<u8>) -> Option<Self> {
        let rank = img.len();
        if rank == 0 || rank > u8::MAX as usize {
            return None;
        }
        let mut seen = vec![false; rank + 1];
        for &v in &img {
            if v < 1 || v as usize > rank || seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        Some(Perm { img })
    }

    pub fn rank(&self) -> usize {
        self.img.len()
    }

    /// Adjacent transposition `s_i = (i, i+1)`, `1 <= i < rank`.
    pub fn s(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i < rank, "simple reflection index out of range");
        let mut p = Perm::identity(rank);
        p.img.swap(i - 1, i);
        p
    }

    pub fn transposition(rank: usize, a: usize, b: usize) -> Self {
        assert!(a != b && a >= 1 && b >= 1 && a <= rank && b <= rank);
        let mut p = Perm::identity(rank);
        p.img.swap(a - 1, b - 1);
        p
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.rank(), other.rank());
        Perm {
            img: other.img.iter().map(|&v| self.img[v as usize - 1]).collect(),
        }
    }

    pub fn inv(&self) -> Perm {
        let mut img = vec![0u8; self.rank()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize - 1] = i as u8 + 1;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn one_line(&self) -> &[u8] {
        &self.img
    }

    /// 1-based position of the value `v` in one-line notation.
    pub fn position_of(&self, v: usize) -> usize {
        self.img
            .iter()
            .position(|&x| x as usize == v)
            .expect("value out of range")
            + 1
    }

    /// Inversion count; equals the Coxeter length in the finite group.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for a in 0..self.img.len() {
            for b in a + 1..self.img.len() {
                if self.img[a] > self.img[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `l(w s_i) < l(w)`, i.e. `w(i) > w(i+1)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        assert!(i >= 1 && i < self.rank());
        self.img[i - 1] > self.img[i]
    }

    /// `l(s_i w) < l(w)`, i.e. `i+1` appears before `i` in one-line notation.
    pub fn is_left_descent(&self, i: usize) -> bool {
        assert!(i >= 1 && i < self.rank());
        self.position_of(i + 1) < self.position_of(i)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.img.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.img.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}
