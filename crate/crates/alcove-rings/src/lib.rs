//! Exact coefficient arithmetic: Laurent polynomials in q, the group ring of
//! P/Q_lambda (with torsion handled through the class normal form), and
//! floor-truncated q-series for c-function expansions.

mod groupring;
mod laurent;
mod series;

pub use groupring::{same_context, Coeff, GroupRingElem, ZetaLaurent, ZetaRing};
pub use laurent::{poincare_q2, LaurentQPoly};
pub use series::{
    expand_inverse_factor, TruncatedQSeries, TruncatedZetaSeries, DEFAULT_TRUNCATION,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("group ring elements over different lambda contexts: {0} vs {1}")]
    LambdaMismatch(String, String),
    #[error("sp0 undefined: coefficient has positive q-degree {0}")]
    PositiveQDegree(i64),
    #[error("inverse factor exponent must be positive, got {0} (wrong factor orientation)")]
    BadExpansionExponent(i64),
    #[error("bad ring element JSON: {0}")]
    BadJson(String),
}
