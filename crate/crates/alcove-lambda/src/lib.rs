//! Structures attached to a partition lambda of n+1: the parabolic data
//! (J sets, longest elements), minimal coset representatives, the fundamental
//! lambda-alcove and its integral points, pseudo-translations, the symmetry
//! group G_lambda, the lambda-dominance order, and the maximal double coset
//! representatives m_gamma together with their length formulas.

mod alcove;
mod coset;
mod data;
mod domin;
mod glambda;
mod mgamma;
mod tau;
mod weight;

pub use alcove::in_fundamental_lambda_alcove;
pub use coset::{ascent_set, coset_decompose, is_min_rep, lambda_expression, mu_of};
pub use data::{longest_parabolic, LambdaData, LambdaError};
pub use domin::{dominant_reps, lambda_dominance_leq};
pub use glambda::GLambdaGroup;
pub use mgamma::{l_r_sets, length_tau_conj, m_gamma, m_gamma_factored};
pub use tau::{j_lambda_gamma, tau, y_gamma};
pub use weight::{
    is_lambda_alcove_weight, project_to_fundamental, LambdaAlcoveCoords, LambdaWeight,
};
