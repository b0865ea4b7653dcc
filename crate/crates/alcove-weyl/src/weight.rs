use crate::perm::Perm;
use crate::root::Root;
use std::fmt;

/// Element of `P = Z^rank / Z*(1,...,1)`, stored with last coordinate 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightP {
    c: Vec<i64>,
}

impl WeightP {
    pub fn zero(rank: usize) -> Self {
        WeightP { c: vec![0; rank] }
    }

    pub fn from_coeffs(mut c: Vec<i64>) -> Self {
        assert!(!c.is_empty());
        let last = c[c.len() - 1];
        if last != 0 {
            for v in &mut c {
                *v -= last;
            }
        }
        WeightP { c }
    }

    /// Class of the standard basis vector `e_i`.
    pub fn e(i: usize, rank: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        WeightP::from_coeffs(c)
    }

    /// Fundamental weight `omega_i = e_1 + ... + e_i`.
    pub fn omega(i: usize, rank: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        let mut c = vec![0; rank];
        for v in c.iter_mut().take(i) {
            *v = 1;
        }
        WeightP::from_coeffs(c)
    }

    pub fn rank(&self) -> usize {
        self.c.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }

    /// `<gamma, e_i - e_j> = c_i - c_j`; independent of the representative.
    pub fn pair(&self, r: &Root) -> i64 {
        self.c[r.i() - 1] - self.c[r.j() - 1]
    }

    pub fn add(&self, other: &WeightP) -> WeightP {
        assert_eq!(self.rank(), other.rank());
        WeightP::from_coeffs(self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightP) -> WeightP {
        assert_eq!(self.rank(), other.rank());
        WeightP::from_coeffs(self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> WeightP {
        WeightP::from_coeffs(self.c.iter().map(|a| -a).collect())
    }

    /// `(u . gamma)_{u(i)} = gamma_i`.
    pub fn act(&self, u: &Perm) -> WeightP {
        let mut c = vec![0; self.rank()];
        for (i, &v) in self.c.iter().enumerate() {
            c[u.apply(i + 1) - 1] = v;
        }
        WeightP::from_coeffs(c)
    }
}

impl fmt::Debug for WeightP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for WeightP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.c.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_kills_all_ones() {
        let a = WeightP::from_coeffs(vec![3, 2, 2, 1]);
        let b = WeightP::from_coeffs(vec![5, 4, 4, 3]);
        assert_eq!(a, b);
        assert_eq!(a.coeffs()[3], 0);
    }

    #[test]
    fn pairing_is_representative_free() {
        let a = WeightP::from_coeffs(vec![3, 2, 2, 1]);
        let r = Root::new(1, 3);
        assert_eq!(a.pair(&r), 1);
        assert_eq!(WeightP::e(4, 4).pair(&Root::new(1, 4)), -1);
    }

    #[test]
    fn equivariance_of_pairing() {
        let gamma = WeightP::from_coeffs(vec![2, 0, 1, 0]);
        let u = Perm::from_images(vec![2, 4, 1, 3]);
        let r = Root::new(1, 3);
        assert_eq!(gamma.act(&u).pair(&r.act(&u)), gamma.pair(&r));
    }

    #[test]
    fn omega_sums() {
        let rank = 5;
        let mut acc = WeightP::zero(rank);
        for i in 1..=3 {
            acc = acc.add(&WeightP::e(i, rank));
        }
        assert_eq!(acc, WeightP::omega(3, rank));
    }
}
