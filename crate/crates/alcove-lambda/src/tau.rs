use alcove_weyl::{ExtAffine, Perm, Root, WeightP};

use crate::data::{longest_parabolic, LambdaData, LambdaError};
use crate::weight::is_lambda_alcove_weight;

/// The J_lambda walls on which gamma sits at level one.
pub fn j_lambda_gamma(gamma: &WeightP, data: &LambdaData) -> Vec<usize> {
    data.j_lambda()
        .iter()
        .copied()
        .filter(|&j| gamma.pair(&Root::simple(j)) == 1)
        .collect()
}

/// The parabolic part of the pseudo-translation attached to gamma:
/// w_{J_lambda minus J_lambda(gamma)} * w_{J_lambda}.
pub fn y_gamma(gamma: &WeightP, data: &LambdaData) -> Result<Perm, LambdaError> {
    if !is_lambda_alcove_weight(gamma, data.lambda()) {
        return Err(LambdaError::NotLambdaWeight(
            format!("{gamma}"),
            format!("{}", data.lambda()),
        ));
    }
    let on_wall = j_lambda_gamma(gamma, data);
    let rest: Vec<usize> = data
        .j_lambda()
        .iter()
        .copied()
        .filter(|j| !on_wall.contains(j))
        .collect();
    Ok(longest_parabolic(data.rank(), &rest).compose(data.w_lambda()))
}

/// Pseudo-translation t_gamma y_gamma. These form an abelian group under the
/// projected addition of weights.
pub fn tau(gamma: &WeightP, data: &LambdaData) -> Result<ExtAffine, LambdaError> {
    let y = y_gamma(gamma, data)?;
    Ok(ExtAffine::from_parts(gamma.clone(), y))
}
