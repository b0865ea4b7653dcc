use crate::perm::Perm;
use crate::root::Root;
use crate::weight::WeightP;
use itertools::Itertools;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

/// Element `t_gamma * u` of the extended affine symmetric group.
///
/// Multiplication follows `(g1, u1)(g2, u2) = (g1 + u1.g2, u1 u2)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffine {
    t: WeightP,
    u: Perm,
}

impl ExtAffine {
    pub fn identity(rank: usize) -> Self {
        ExtAffine {
            t: WeightP::zero(rank),
            u: Perm::identity(rank),
        }
    }

    pub fn from_parts(t: WeightP, u: Perm) -> Self {
        assert_eq!(t.rank(), u.rank());
        ExtAffine { t, u }
    }

    pub fn translation(t: WeightP) -> Self {
        let u = Perm::identity(t.rank());
        ExtAffine { t, u }
    }

    pub fn finite(u: Perm) -> Self {
        let t = WeightP::zero(u.rank());
        ExtAffine { t, u }
    }

    /// Generator `s_i` for `0 <= i < rank`; `s_0 = t_phi * s_phi`.
    pub fn s(rank: usize, i: usize) -> Self {
        assert!(i < rank, "generator index out of range");
        if i == 0 {
            let phi = WeightP::e(1, rank).sub(&WeightP::e(rank, rank));
            ExtAffine {
                t: phi,
                u: Perm::transposition(rank, 1, rank),
            }
        } else {
            ExtAffine::finite(Perm::s(rank, i))
        }
    }

    /// The length-zero generator of the cyclic factor: the unique length-zero
    /// element whose weight part is exactly `omega_1`. Found by bounded search
    /// over linear parts and cached per rank.
    pub fn sigma(rank: usize) -> Self {
        static CACHE: OnceLock<Mutex<HashMap<usize, Perm>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        if let Some(u) = guard.get(&rank) {
            return ExtAffine::from_parts(WeightP::omega(1, rank), u.clone());
        }
        assert!(rank <= 9, "sigma search is factorial in rank");
        let omega = WeightP::omega(1, rank);
        for img in (1..=rank as u8).permutations(rank) {
            let cand = ExtAffine::from_parts(omega.clone(), Perm::from_images(img));
            if cand.length() == 0 {
                guard.insert(rank, cand.u.clone());
                return cand;
            }
        }
        panic!("no length-zero element over omega_1 at rank {rank}");
    }

    pub fn sigma_pow(rank: usize, k: usize) -> Self {
        let s = ExtAffine::sigma(rank);
        let mut acc = ExtAffine::identity(rank);
        for _ in 0..(k % rank) {
            acc = acc.compose(&s);
        }
        acc
    }

    pub fn rank(&self) -> usize {
        self.u.rank()
    }

    pub fn wt(&self) -> &WeightP {
        &self.t
    }

    pub fn lin(&self) -> &Perm {
        &self.u
    }

    pub fn compose(&self, other: &ExtAffine) -> ExtAffine {
        ExtAffine {
            t: self.t.add(&other.t.act(&self.u)),
            u: self.u.compose(&other.u),
        }
    }

    pub fn inv(&self) -> ExtAffine {
        let u_inv = self.u.inv();
        ExtAffine {
            t: self.t.act(&u_inv).neg(),
            u: u_inv,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_zero() && self.u.is_identity()
    }

    pub fn is_translation(&self) -> bool {
        self.u.is_identity()
    }

    /// `l(t_gamma u) = sum over positive roots of |<gamma, a> - chi(u^-1 a)|`
    /// where `chi(b) = 1` iff `b` is negative.
    pub fn length(&self) -> usize {
        let u_inv = self.u.inv();
        let mut total: i64 = 0;
        for a in Root::all_positive(self.rank()) {
            let chi = if a.act(&u_inv).is_positive() { 0 } else { 1 };
            total += (self.t.pair(&a) - chi).abs();
        }
        total as usize
    }

    pub fn mul_s_right(&self, i: usize) -> ExtAffine {
        self.compose(&ExtAffine::s(self.rank(), i))
    }

    pub fn mul_s_left(&self, i: usize) -> ExtAffine {
        ExtAffine::s(self.rank(), i).compose(self)
    }

    /// `l(w s_i) < l(w)`. Exact inequality test; for `i >= 1` a pairing
    /// criterion avoids the two length evaluations.
    pub fn is_right_descent(&self, i: usize) -> bool {
        if i == 0 {
            return self.mul_s_right(0).length() < self.length();
        }
        let a = Root::simple(i);
        let p = self.t.act(&self.u.inv()).pair(&a);
        p > 0 || (p == 0 && !a.act(&self.u).is_positive())
    }

    /// `l(s_i w) < l(w)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        if i == 0 {
            return self.mul_s_left(0).length() < self.length();
        }
        let a = Root::simple(i);
        let p = self.t.pair(&a);
        p < 0 || (p == 0 && !a.act(&self.u.inv()).is_positive())
    }

    /// Smallest left-descent index, or None at length zero.
    pub fn min_left_descent(&self) -> Option<usize> {
        (0..self.rank()).find(|&i| self.is_left_descent(i))
    }

    /// Canonical reduced word: repeatedly strip the smallest left descent.
    /// Returns the letters (so `self = s_{i1} ... s_{il} * sigma^k`) and the
    /// power of sigma left over at length zero.
    pub fn reduced_word(&self) -> (Vec<u8>, usize) {
        let rank = self.rank();
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = w.min_left_descent() {
            letters.push(i as u8);
            w = w.mul_s_left(i);
        }
        for k in 0..rank {
            if w == ExtAffine::sigma_pow(rank, k) {
                return (letters, k);
            }
        }
        panic!("length-zero element is not a sigma power");
    }

    pub fn from_word(rank: usize, letters: &[u8], sigma_pow: usize) -> ExtAffine {
        let mut acc = ExtAffine::identity(rank);
        for &i in letters {
            acc = acc.mul_s_right(i as usize);
        }
        acc.compose(&ExtAffine::sigma_pow(rank, sigma_pow))
    }

    /// Children of this node in the canonical-word tree: elements `s_i * w`
    /// one step longer whose canonical word starts with `i`.
    pub fn canonical_children(&self) -> Vec<(usize, ExtAffine)> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            let c = self.mul_s_left(i);
            if !c.is_left_descent(i) {
                continue; // would shorten, not lengthen
            }
            if c.min_left_descent() == Some(i) {
                out.push((i, c));
            }
        }
        out
    }
}

impl fmt::Debug for ExtAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ExtAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.t, self.u)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid group element `{0}`")]
pub struct ParseElemError(String);

impl FromStr for ExtAffine {
    type Err = ParseElemError;

    /// Parses `c1,...,cr:u1,...,ur` (weight coordinates, then one-line images).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseElemError(s.to_string());
        let (ws, us) = s.split_once(':').ok_or_else(err)?;
        let coeffs: Vec<i64> = ws
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| err())?;
        let imgs: Vec<u8> = us
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| err())?;
        if coeffs.is_empty() || coeffs.len() != imgs.len() {
            return Err(err());
        }
        let u = Perm::try_from_images(imgs).ok_or_else(err)?;
        Ok(ExtAffine::from_parts(WeightP::from_coeffs(coeffs), u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ball(rank: usize, max_len: usize) -> Vec<ExtAffine> {
        let mut layer = vec![ExtAffine::identity(rank)];
        let mut all = layer.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for (_, c) in w.canonical_children() {
                    next.push(c);
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }

    #[test]
    fn generators_have_length_one() {
        for rank in 2..=5 {
            for i in 0..rank {
                assert_eq!(ExtAffine::s(rank, i).length(), 1, "rank {rank} i {i}");
            }
        }
    }

    #[test]
    fn group_law_and_inverse() {
        let rank = 4;
        let a = ExtAffine::s(rank, 0).compose(&ExtAffine::s(rank, 2));
        let b = ExtAffine::s(rank, 1).compose(&ExtAffine::sigma(rank));
        let ab = a.compose(&b);
        assert_eq!(ab.inv().compose(&ab), ExtAffine::identity(rank));
        assert_eq!(a.inv().inv(), a);
        assert_eq!(a.length(), a.inv().length());
    }

    #[test]
    fn translation_length_is_pairing_sum() {
        let rank = 4;
        let gamma = WeightP::omega(2, rank);
        let t = ExtAffine::translation(gamma.clone());
        let expect: i64 = Root::all_positive(rank).map(|a| gamma.pair(&a).abs()).sum();
        assert_eq!(t.length() as i64, expect);
    }

    #[test]
    fn sigma_properties() {
        for rank in 2..=5 {
            let sigma = ExtAffine::sigma(rank);
            assert_eq!(sigma.length(), 0);
            assert_eq!(sigma.wt(), &WeightP::omega(1, rank));
            // conjugation shifts generator indices cyclically
            for i in 0..rank {
                let lhs = sigma.compose(&ExtAffine::s(rank, i)).compose(&sigma.inv());
                assert_eq!(lhs, ExtAffine::s(rank, (i + 1) % rank));
            }
            assert_eq!(ExtAffine::sigma_pow(rank, rank), ExtAffine::identity(rank));
        }
    }

    #[test]
    fn descents_match_length_comparison() {
        let rank = 3;
        for w in ball(rank, 5) {
            let l = w.length();
            for i in 0..rank {
                assert_eq!(
                    w.is_right_descent(i),
                    w.mul_s_right(i).length() < l,
                    "right {w} {i}"
                );
                assert_eq!(
                    w.is_left_descent(i),
                    w.mul_s_left(i).length() < l,
                    "left {w} {i}"
                );
                // lengths always move by exactly one
                let d = w.mul_s_right(i).length() as i64 - l as i64;
                assert_eq!(d.abs(), 1);
            }
        }
    }

    #[test]
    fn reduced_words_reconstruct() {
        let rank = 3;
        for k in 0..rank {
            for w in ball(rank, 5) {
                let w = w.compose(&ExtAffine::sigma_pow(rank, k));
                let (letters, pow) = w.reduced_word();
                assert_eq!(letters.len(), w.length());
                assert_eq!(ExtAffine::from_word(rank, &letters, pow), w);
            }
        }
    }

    #[test]
    fn canonical_tree_enumerates_without_repeats() {
        // ball sizes match a direct closure computation
        let rank = 3;
        let by_tree = ball(rank, 4);
        let mut set: std::collections::HashSet<ExtAffine> = by_tree.iter().cloned().collect();
        assert_eq!(set.len(), by_tree.len());
        // closure under right multiplication, filtered by length
        let mut frontier: Vec<ExtAffine> = vec![ExtAffine::identity(rank)];
        let mut seen: std::collections::HashSet<ExtAffine> = frontier.iter().cloned().collect();
        for _ in 0..4 {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..rank {
                    let c = w.mul_s_right(i);
                    if c.length() > w.length() && seen.insert(c.clone()) {
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        for w in seen {
            assert!(set.remove(&w), "tree missed {w}");
        }
        assert!(set.is_empty());
    }

    #[test]
    fn serialization_roundtrip() {
        let rank = 4;
        let w = ExtAffine::s(rank, 0)
            .compose(&ExtAffine::s(rank, 2))
            .compose(&ExtAffine::sigma(rank));
        let s = w.to_string();
        let back: ExtAffine = s.parse().unwrap();
        assert_eq!(back, w);
        assert!("1,2:1,2,3".parse::<ExtAffine>().is_err());
        assert!("0,0:2,2".parse::<ExtAffine>().is_err());
    }
}
