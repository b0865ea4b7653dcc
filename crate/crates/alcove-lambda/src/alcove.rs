use alcove_weyl::{AlcovePoint, ExtAffine};

use crate::data::LambdaData;

/// True if the alcove v A_0 lies inside the fundamental lambda-alcove, i.e.
/// the barycenter pairs strictly between 0 and 1 against every positive root
/// of the lambda parabolic. Exact: pairings scaled by n+1 stay integral.
pub fn in_fundamental_lambda_alcove(v: &ExtAffine, data: &LambdaData) -> bool {
    let rank = data.rank() as i64;
    let x = AlcovePoint::barycenter(data.rank()).acted(v);
    data.phi_lambda_pos()
        .iter()
        .all(|r| {
            let p = x.pair_num(r);
            0 < p && p < rank
        })
}
