use crate::extaffine::ExtAffine;
use crate::root::Root;

/// Point with coordinates `num / rank`; the fixed denominator keeps all
/// alcove predicates in integer arithmetic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlcovePoint {
    num: Vec<i64>,
}

impl AlcovePoint {
    /// Barycenter of the fundamental alcove: pairs to `1/rank` with every
    /// simple root and to `(rank-1)/rank` with the highest root.
    pub fn barycenter(rank: usize) -> Self {
        AlcovePoint {
            num: (0..rank).map(|i| (rank - 1 - i) as i64).collect(),
        }
    }

    // points live modulo the all-ones line; keep the last numerator at 0
    fn normalize(mut num: Vec<i64>) -> Vec<i64> {
        let last = num[num.len() - 1];
        if last != 0 {
            for v in &mut num {
                *v -= last;
            }
        }
        num
    }

    pub fn rank(&self) -> usize {
        self.num.len()
    }

    pub fn numerators(&self) -> &[i64] {
        &self.num
    }

    /// Image under the affine action `t_gamma u . x = gamma + u.x`.
    pub fn acted(&self, w: &ExtAffine) -> AlcovePoint {
        let rank = self.rank();
        assert_eq!(rank, w.rank());
        let mut num = vec![0i64; rank];
        for (i, &v) in self.num.iter().enumerate() {
            num[w.lin().apply(i + 1) - 1] = v;
        }
        for (i, &c) in w.wt().coeffs().iter().enumerate() {
            num[i] += c * rank as i64;
        }
        AlcovePoint {
            num: Self::normalize(num),
        }
    }

    /// `rank * <x, e_i - e_j>`, an exact integer.
    pub fn pair_num(&self, r: &Root) -> i64 {
        self.num[r.i() - 1] - self.num[r.j() - 1]
    }
}

/// Wall direction of the fundamental alcove for generator `i`: the simple
/// root for `i >= 1`, the highest root for `i = 0`.
pub fn wall_direction(rank: usize, i: usize) -> Root {
    if i == 0 {
        Root::phi(rank)
    } else {
        Root::simple(i)
    }
}

/// `+1` iff the step from `v A0` to `v s_i A0` crosses its wall from the
/// negative side to the positive side.
pub fn crossing_sign(v: &ExtAffine, i: usize) -> i32 {
    let rank = v.rank();
    let mut beta = wall_direction(rank, i).act(v.lin());
    if !beta.is_positive() {
        beta = beta.neg();
    }
    let x1 = AlcovePoint::barycenter(rank).acted(v);
    let x2 = AlcovePoint::barycenter(rank).acted(&v.mul_s_right(i));
    let d = x2.pair_num(&beta) - x1.pair_num(&beta);
    debug_assert!(d != 0);
    if d > 0 {
        1
    } else {
        -1
    }
}
