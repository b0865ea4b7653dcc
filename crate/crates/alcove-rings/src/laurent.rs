use std::collections::BTreeMap;
use std::fmt;

/// Z[q, q^-1] with sparse integer coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentQPoly {
    pub fn zero() -> Self {
        LaurentQPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_terms(&[(0, c)])
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_terms(&[(e, 1)])
    }

    /// v = -q^{-1}, so v^k = (-1)^k q^{-k}.
    pub fn v_pow(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::from_terms(&[(-k, sign)])
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = LaurentQPoly::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// None for the zero polynomial (deg 0 = -infinity).
    pub fn deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn add(&self, other: &LaurentQPoly) -> LaurentQPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentQPoly) -> LaurentQPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentQPoly {
        LaurentQPoly { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }

    pub fn scalar(&self, k: i64) -> LaurentQPoly {
        if k == 0 {
            return LaurentQPoly::zero();
        }
        LaurentQPoly { terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect() }
    }

    pub fn mul(&self, other: &LaurentQPoly) -> LaurentQPoly {
        let mut out = LaurentQPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplication by q^k.
    pub fn q_shift(&self, k: i64) -> LaurentQPoly {
        LaurentQPoly { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn pow(&self, n: u32) -> LaurentQPoly {
        let mut out = LaurentQPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// q -> q^{-1}.
    pub fn bar(&self) -> LaurentQPoly {
        LaurentQPoly { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    pub fn constant_coeff(&self) -> i64 {
        self.coeff(0)
    }

    /// Exact division; None if `other` is zero or does not divide `self`.
    pub fn div_exact(&self, other: &LaurentQPoly) -> Option<LaurentQPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentQPoly::zero());
        }
        let dlead = other.deg().unwrap();
        let dc = other.coeff(dlead);
        let mut rem = self.clone();
        let mut quot = LaurentQPoly::zero();
        while let Some(rlead) = rem.deg() {
            let rc = rem.coeff(rlead);
            if rc % dc != 0 {
                return None;
            }
            let t = LaurentQPoly::from_terms(&[(rlead - dlead, rc / dc)]);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(other));
        }
        Some(quot)
    }
}

/// Poincare polynomial W_J(q^2) of the parabolic subgroup whose blocks have
/// the given sizes: a product of q^2-integers [1][2]...[p] per block.
pub fn poincare_q2(parts: &[usize]) -> LaurentQPoly {
    let mut out = LaurentQPoly::one();
    for &p in parts {
        for k in 1..=p {
            let factor = LaurentQPoly::from_terms(
                &(0..k).map(|j| (2 * j as i64, 1)).collect::<Vec<_>>(),
            );
            out = out.mul(&factor);
        }
    }
    out
}

impl fmt::Display for LaurentQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.terms.iter().rev() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{a}")?;
            } else {
                if a != 1 {
                    write!(f, "{a}")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alcove_weyl::Perm;
    use itertools::Itertools;

    fn rng_poly(state: &mut u64) -> LaurentQPoly {
        let mut p = LaurentQPoly::zero();
        for _ in 0..4 {
            *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let e = ((*state >> 33) % 9) as i64 - 4;
            let c = ((*state >> 13) % 11) as i64 - 5;
            p = p.add(&LaurentQPoly::from_terms(&[(e, c)]));
        }
        p
    }

    #[test]
    fn display_matches_expected_form() {
        let p = LaurentQPoly::from_terms(&[(2, 1), (0, -3), (-2, 1)]);
        assert_eq!(p.to_string(), "q^2 - 3 + q^-2");
        assert_eq!(LaurentQPoly::zero().to_string(), "0");
        let m = LaurentQPoly::from_terms(&[(1, -1), (-1, 2), (-5, -3)]);
        assert_eq!(m.to_string(), "-q + 2q^-1 - 3q^-5");
    }

    #[test]
    fn arithmetic_basics() {
        let q = LaurentQPoly::q_pow(1);
        let qinv = LaurentQPoly::q_pow(-1);
        let s = q.sub(&qinv);
        assert_eq!(s.mul(&s), LaurentQPoly::from_terms(&[(2, 1), (0, -2), (-2, 1)]));
        assert_eq!(q.add(&q.neg()), LaurentQPoly::zero());
        assert_eq!(LaurentQPoly::one().mul(&s), s);
        assert_eq!(s.deg(), Some(1));
        assert_eq!(s.low_deg(), Some(-1));
        assert_eq!(LaurentQPoly::zero().deg(), None);
    }

    #[test]
    fn v_is_minus_q_inverse() {
        assert_eq!(LaurentQPoly::v_pow(1), LaurentQPoly::from_terms(&[(-1, -1)]));
        assert_eq!(LaurentQPoly::v_pow(2), LaurentQPoly::q_pow(-2));
        assert_eq!(LaurentQPoly::v_pow(-3), LaurentQPoly::from_terms(&[(3, -1)]));
        assert_eq!(LaurentQPoly::v_pow(0), LaurentQPoly::one());
    }

    #[test]
    fn bar_involution_and_hom() {
        let p = LaurentQPoly::from_terms(&[(1, 1), (-1, 1)]);
        assert_eq!(p.bar(), p);
        let mut st = 7u64;
        for _ in 0..20 {
            let a = rng_poly(&mut st);
            let b = rng_poly(&mut st);
            assert_eq!(a.bar().bar(), a);
            assert_eq!(a.mul(&b).bar(), a.bar().mul(&b.bar()));
            assert_eq!(a.add(&b).bar(), a.bar().add(&b.bar()));
        }
    }

    #[test]
    fn mul_laws_randomized() {
        let mut st = 99u64;
        for _ in 0..20 {
            let a = rng_poly(&mut st);
            let b = rng_poly(&mut st);
            let c = rng_poly(&mut st);
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            if !a.is_zero() && !b.is_zero() {
                assert_eq!(a.mul(&b).deg(), Some(a.deg().unwrap() + b.deg().unwrap()));
            }
        }
    }

    #[test]
    fn div_exact_roundtrip() {
        let mut st = 3u64;
        for _ in 0..20 {
            let a = rng_poly(&mut st);
            let mut b = rng_poly(&mut st);
            if b.is_zero() {
                b = LaurentQPoly::one();
            }
            let prod = a.mul(&b);
            assert_eq!(prod.div_exact(&b), Some(a.clone()));
        }
        let p = LaurentQPoly::from_terms(&[(1, 1), (0, 1)]);
        assert_eq!(LaurentQPoly::one().div_exact(&p), None);
    }

    #[test]
    fn poincare_closed_form_small() {
        // S2 x S2 inside S4: lengths 0,1,1,2.
        assert_eq!(
            poincare_q2(&[2, 2]),
            LaurentQPoly::from_terms(&[(0, 1), (2, 2), (4, 1)])
        );
        // S3: lengths 0,1,1,2,2,3.
        assert_eq!(
            poincare_q2(&[3]),
            LaurentQPoly::from_terms(&[(0, 1), (2, 2), (4, 2), (6, 1)])
        );
        assert_eq!(poincare_q2(&[1, 1, 1]), LaurentQPoly::one());
    }

    #[test]
    fn poincare_matches_direct_parabolic_sum() {
        // Blocks (3,2) inside S5: sum q^{2 l(w)} over block-preserving permutations.
        let mut direct = LaurentQPoly::zero();
        for p1 in (1..=3u8).permutations(3) {
            for p2 in (4..=5u8).permutations(2) {
                let mut img = p1.clone();
                img.extend(p2);
                let w = Perm::from_images(img);
                direct = direct.add(&LaurentQPoly::q_pow(2 * w.inversions() as i64));
            }
        }
        assert_eq!(direct, poincare_q2(&[3, 2]));
    }
}
