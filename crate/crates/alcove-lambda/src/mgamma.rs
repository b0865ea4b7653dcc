use alcove_weyl::{ExtAffine, Partition, Perm, Root, WeightP};

use crate::data::{LambdaData, LambdaError};
use crate::tau::{tau, y_gamma};
use crate::weight::{LambdaAlcoveCoords, LambdaWeight};

/// u_lambda^{-1} tau_gamma u_lambda.
pub fn tau_conjugate(gamma: &WeightP, data: &LambdaData) -> Result<ExtAffine, LambdaError> {
    let t = tau(gamma, data)?;
    let u = ExtAffine::finite(data.u_lambda().clone());
    Ok(u.inv().compose(&t).compose(&u))
}

/// Longest element of the double coset W_{lambda'} u^{-1} tau_gamma u W_{lambda'},
/// returned as (x, middle, y) with m = x * middle * y and lengths additive.
pub fn m_gamma_factored(
    gamma: &WeightP,
    data: &LambdaData,
) -> Result<(Perm, ExtAffine, Perm), LambdaError> {
    let mid = tau_conjugate(gamma, data)?;
    let rank = data.rank();
    let mut m = mid.clone();
    let mut x = Perm::identity(rank);
    'left: loop {
        for &j in data.j_lambda_prime() {
            if !m.is_left_descent(j) {
                m = m.mul_s_left(j);
                x = Perm::s(rank, j).compose(&x);
                continue 'left;
            }
        }
        break;
    }
    let mut y = Perm::identity(rank);
    'right: loop {
        for &j in data.j_lambda_prime() {
            if !m.is_right_descent(j) {
                m = m.mul_s_right(j);
                y = y.compose(&Perm::s(rank, j));
                continue 'right;
            }
        }
        break;
    }
    debug_assert_eq!(
        m.length(),
        mid.length() + x.inversions() + y.inversions()
    );
    debug_assert_eq!(x.inversions() + y.inversions(), data.a_lambda());
    Ok((x, mid, y))
}

pub fn m_gamma(gamma: &WeightP, data: &LambdaData) -> Result<ExtAffine, LambdaError> {
    let (x, mid, y) = m_gamma_factored(gamma, data)?;
    Ok(ExtAffine::finite(x)
        .compose(&mid)
        .compose(&ExtAffine::finite(y)))
}

/// Length of u_lambda^{-1} tau_gamma u_lambda from the row coordinates alone:
/// the sum over row pairs k < l of
///   |lambda_l a_k - lambda_k a_l|            when b_k != b_l,
///   c_l* |c_k - c_l| + c_l |c_k* - c_l*|     when b_k = b_l.
pub fn length_tau_conj(class: &LambdaWeight, la: &Partition) -> usize {
    let coords = LambdaAlcoveCoords::of(class, la);
    let a = class.coeffs();
    let mut total = 0i64;
    for k in 1..=la.rows() {
        for l in k + 1..=la.rows() {
            let z = if coords.b(k) != coords.b(l) {
                (la.parts()[l - 1] as i64 * a[k - 1] - la.parts()[k - 1] as i64 * a[l - 1]).abs()
            } else {
                coords.c_star(l, la) * (coords.c(k) - coords.c(l)).abs()
                    + coords.c(l) * (coords.c_star(k, la) - coords.c_star(l, la)).abs()
            };
            total += z;
        }
    }
    total as usize
}

/// The root sets controlling the left and right padding of the double coset:
/// within the image of the positive lambda'-parabolic roots under u_lambda,
///   L(gamma) pairs positively with gamma, or pairs to zero with
///            u_lambda^{-1} y_gamma^{-1} beta still positive;
///   R(gamma) pairs negatively with w_lambda gamma, or pairs to zero with
///            u_lambda^{-1} y_gamma beta positive but outside the
///            lambda'-parabolic positives.
/// Their sizes always sum to l(w_{lambda'}).
pub fn l_r_sets(
    gamma: &WeightP,
    data: &LambdaData,
) -> Result<(Vec<Root>, Vec<Root>), LambdaError> {
    let y = y_gamma(gamma, data)?;
    let u_inv = data.u_lambda().inv();
    let left_map = u_inv.compose(&y.inv());
    let right_map = u_inv.compose(&y);
    let w_gamma = gamma.act(data.w_lambda());
    let mut left = Vec::new();
    let mut right = Vec::new();
    for beta in data.u_lambda_phi_prime_pos() {
        let p = gamma.pair(&beta);
        if p > 0 || (p == 0 && beta.act(&left_map).is_positive()) {
            left.push(beta);
        }
        let q = w_gamma.pair(&beta);
        let img = beta.act(&right_map);
        if q < 0 || (q == 0 && img.is_positive() && !data.in_phi_lambda_prime_pos(&img)) {
            right.push(beta);
        }
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domin::{dominant_reps, lambda_dominance_leq};
    use crate::weight::is_lambda_alcove_weight;
    use itertools::Itertools;

    fn alcove_weights(data: &LambdaData, height: i64) -> Vec<WeightP> {
        let la = data.lambda();
        let r = la.rows();
        let mut stack: Vec<Vec<i64>> = vec![Vec::with_capacity(r)];
        let mut out = Vec::new();
        while let Some(a) = stack.pop() {
            if a.len() == r {
                let w = LambdaWeight::new(la, &a);
                out.push(LambdaAlcoveCoords::of(&w, la).materialize(la));
                continue;
            }
            let k = a.len();
            let lk = la.parts()[k] as i64;
            let bs = if k + 1 == r { 0..=0 } else { -height..=height };
            for b in bs {
                for c in 0..lk {
                    let mut next = a.clone();
                    next.push(lk * b + c);
                    stack.push(next);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn parabolic_prime(data: &LambdaData) -> Vec<Perm> {
        let m = data.rank();
        (1..=m as u8)
            .permutations(m)
            .map(Perm::from_images)
            .filter(|w| data.in_w_lambda_prime(w))
            .collect()
    }

    #[test]
    fn worked_example_length_and_element() {
        let la = Partition::new(vec![4, 2]);
        let d = LambdaData::new(la.clone());
        let class = LambdaWeight::new(&la, &[2, 1]);
        assert_eq!(length_tau_conj(&class, &la), 2);
        let gamma = LambdaAlcoveCoords::of(&class, &la).materialize(&la);
        let conj = tau_conjugate(&gamma, &d).unwrap();
        assert_eq!(conj, ExtAffine::from_word(6, &[1, 4], 3));
        assert_eq!(conj.length(), 2);
    }

    #[test]
    fn length_formula_matches_direct() {
        for m in 2..=5usize {
            for la in Partition::all(m) {
                let d = LambdaData::new(la.clone());
                for gamma in alcove_weights(&d, 1) {
                    let class = LambdaWeight::class_of(&gamma, &la);
                    let direct = tau_conjugate(&gamma, &d).unwrap().length();
                    assert_eq!(length_tau_conj(&class, &la), direct, "{gamma} {la}");
                }
            }
        }
    }

    #[test]
    fn one_block_simplification() {
        // lambda = (d^r): the formula collapses to d * sum |a_k - a_l|
        for (d_len, r) in [(2usize, 2usize), (3, 2), (2, 3)] {
            let la = Partition::new(vec![d_len; r]);
            for a in (0..r).map(|_| -3i64..=3).multi_cartesian_product() {
                let class = LambdaWeight::new(&la, &a);
                let simple: i64 = (0..r)
                    .tuple_combinations()
                    .map(|(k, l)| (d_len as i64) * (class.coeffs()[k] - class.coeffs()[l]).abs())
                    .sum();
                assert_eq!(length_tau_conj(&class, &la) as i64, simple, "{class}");
            }
        }
    }

    #[test]
    fn m_zero_is_longest_parabolic() {
        for m in 2..=5usize {
            for la in Partition::all(m) {
                let d = LambdaData::new(la.clone());
                let zero = WeightP::zero(m);
                let got = m_gamma(&zero, &d).unwrap();
                assert_eq!(got, ExtAffine::finite(d.w_lambda_prime().clone()), "{la}");
            }
        }
    }

    #[test]
    fn factored_lengths_add() {
        for m in 2..=4usize {
            for la in Partition::all(m) {
                let d = LambdaData::new(la.clone());
                for gamma in alcove_weights(&d, 1) {
                    let (x, mid, y) = m_gamma_factored(&gamma, &d).unwrap();
                    assert_eq!(x.inversions() + y.inversions(), d.a_lambda());
                    let m_el = m_gamma(&gamma, &d).unwrap();
                    assert_eq!(m_el.length(), mid.length() + d.a_lambda());
                }
            }
        }
    }

    #[test]
    fn matches_double_coset_brute_force() {
        for m in 2..=4usize {
            for la in Partition::all(m) {
                let d = LambdaData::new(la.clone());
                let wj = parabolic_prime(&d);
                for gamma in alcove_weights(&d, 1) {
                    let mid = tau_conjugate(&gamma, &d).unwrap();
                    let mut coset = std::collections::HashSet::new();
                    for x in &wj {
                        let xe = ExtAffine::finite(x.clone());
                        for y in &wj {
                            coset.insert(xe.compose(&mid).compose(&ExtAffine::finite(y.clone())));
                        }
                    }
                    let max_len = coset.iter().map(|c| c.length()).max().unwrap();
                    let longest: Vec<&ExtAffine> =
                        coset.iter().filter(|c| c.length() == max_len).collect();
                    assert_eq!(longest.len(), 1, "unique longest element {gamma} {la}");
                    assert_eq!(&m_gamma(&gamma, &d).unwrap(), longest[0], "{gamma} {la}");
                }
            }
        }
    }

    #[test]
    fn glambda_invariance() {
        for la in [Partition::new(vec![2, 2]), Partition::new(vec![2, 2, 1]), Partition::new(vec![1, 1, 1])] {
            let d = LambdaData::new(la.clone());
            let gens = d.glambda().generators_perm();
            for gamma in alcove_weights(&d, 1) {
                let m0 = m_gamma(&gamma, &d).unwrap();
                for g in &gens {
                    let moved = gamma.act(g);
                    assert!(is_lambda_alcove_weight(&moved, &la));
                    assert_eq!(m_gamma(&moved, &d).unwrap(), m0, "{gamma} {la}");
                }
            }
        }
    }

    #[test]
    fn l_r_counts() {
        for m in 2..=5usize {
            for la in Partition::all(m) {
                let d = LambdaData::new(la.clone());
                for gamma in alcove_weights(&d, 1) {
                    let (l, r) = l_r_sets(&gamma, &d).unwrap();
                    assert_eq!(l.len() + r.len(), d.a_lambda(), "{gamma} {la}");
                    // blockwise: the roots joining rows k < l contribute lambda_l
                    for k in 1..=la.rows() {
                        for ll in k + 1..=la.rows() {
                            let cnt = l
                                .iter()
                                .chain(r.iter())
                                .filter(|b| d.row_pair(b) == (k, ll))
                                .count();
                            assert_eq!(cnt, la.parts()[ll - 1], "{gamma} {la} rows {k},{ll}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn l_r_matches_m_gamma_padding() {
        for m in 2..=4usize {
            for la in Partition::all(m) {
                let d = LambdaData::new(la.clone());
                for gamma in alcove_weights(&d, 1) {
                    let (l, r) = l_r_sets(&gamma, &d).unwrap();
                    let (x, _, y) = m_gamma_factored(&gamma, &d).unwrap();
                    assert_eq!(l.len(), x.inversions(), "{gamma} {la}");
                    assert_eq!(r.len(), y.inversions(), "{gamma} {la}");
                }
            }
        }
    }

    #[test]
    fn monotone_along_dominance() {
        for la in [Partition::new(vec![2, 2]), Partition::new(vec![2, 1]), Partition::new(vec![1, 1, 1])] {
            let d = LambdaData::new(la.clone());
            let reps = dominant_reps(&d, 2);
            for x in &reps {
                for y in &reps {
                    if x != y && lambda_dominance_leq(x, y, &la) {
                        assert!(
                            length_tau_conj(x, &la) < length_tau_conj(y, &la),
                            "{x} strictly below {y} in {la}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_non_alcove_weights() {
        let d = LambdaData::new(Partition::new(vec![2, 2]));
        let bad = WeightP::from_coeffs(vec![3, 1, 0, 0]);
        assert!(m_gamma(&bad, &d).is_err());
        assert!(l_r_sets(&bad, &d).is_err());
    }
}
