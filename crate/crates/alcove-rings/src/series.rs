use std::collections::BTreeMap;
use std::fmt;

use alcove_lambda::LambdaWeight;
use alcove_weyl::Partition;

use crate::groupring::ZetaLaurent;
use crate::laurent::LaurentQPoly;
use crate::RingError;

/// Default truncation floor parameter M (series kept down to q^{-M}).
pub const DEFAULT_TRUNCATION: i64 = 16;

/// Laurent series in q known only down to q^floor. floor=None means exact.
/// Coefficients below the floor are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedQSeries {
    terms: BTreeMap<i64, i64>,
    floor: Option<i64>,
}

fn floor_max(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

/// Floor of a product: errors of one factor are smeared up by the top degree
/// of the other. `maxdeg` must already account for possibly-unknown terms.
fn product_floor(fa: Option<i64>, maxa: Option<i64>, fb: Option<i64>, maxb: Option<i64>) -> Option<i64> {
    let part1 = match (fa, maxb) {
        (Some(f), Some(d)) => Some(f + d),
        _ => None,
    };
    let part2 = match (fb, maxa) {
        (Some(f), Some(d)) => Some(f + d),
        _ => None,
    };
    floor_max(part1, part2)
}

impl TruncatedQSeries {
    pub fn exact(p: &LaurentQPoly) -> Self {
        TruncatedQSeries { terms: p.terms().collect(), floor: None }
    }

    pub fn zero() -> Self {
        Self::exact(&LaurentQPoly::zero())
    }

    pub fn one() -> Self {
        Self::exact(&LaurentQPoly::one())
    }

    pub fn with_floor(p: &LaurentQPoly, floor: i64) -> Self {
        let mut s = Self::exact(p);
        s.truncate(floor);
        s
    }

    pub fn floor(&self) -> Option<i64> {
        self.floor
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Stored terms as an exact Laurent polynomial (the known part).
    pub fn known_part(&self) -> LaurentQPoly {
        LaurentQPoly::from_terms(&self.terms.iter().map(|(&e, &c)| (e, c)).collect::<Vec<_>>())
    }

    /// Highest degree that could carry a nonzero coefficient.
    fn effective_maxdeg(&self) -> Option<i64> {
        let stored = self.terms.keys().next_back().copied();
        match self.floor {
            None => stored,
            Some(f) => floor_max(stored, Some(f - 1)),
        }
    }

    pub fn maxdeg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Raise the floor to at least `floor`, discarding lower terms.
    pub fn truncate(&mut self, floor: i64) {
        self.floor = floor_max(self.floor, Some(floor));
        let f = self.floor.unwrap();
        self.terms.retain(|&e, _| e >= f);
    }

    fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        if let Some(f) = self.floor {
            if e < f {
                return;
            }
        }
        let entry = self.terms.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = TruncatedQSeries {
            terms: BTreeMap::new(),
            floor: floor_max(self.floor, other.floor),
        };
        for (&e, &c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        TruncatedQSeries {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
            floor: self.floor,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar(&self, k: i64) -> Self {
        if k == 0 {
            return TruncatedQSeries { terms: BTreeMap::new(), floor: self.floor };
        }
        TruncatedQSeries {
            terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect(),
            floor: self.floor,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let floor = product_floor(
            self.floor,
            self.effective_maxdeg(),
            other.floor,
            other.effective_maxdeg(),
        );
        let mut out = TruncatedQSeries { terms: BTreeMap::new(), floor };
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Equality of the known parts on the overlap (degrees at or above the
    /// larger floor); exact equality when both are exact.
    pub fn agrees_with(&self, other: &Self) -> bool {
        match floor_max(self.floor, other.floor) {
            None => self.terms == other.terms,
            Some(f) => {
                let keys: std::collections::BTreeSet<i64> = self
                    .terms
                    .keys()
                    .chain(other.terms.keys())
                    .copied()
                    .filter(|&e| e >= f)
                    .collect();
                keys.into_iter().all(|e| self.coeff(e) == other.coeff(e))
            }
        }
    }
}

impl fmt::Display for TruncatedQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.floor {
            None => write!(f, "{}", self.known_part()),
            Some(fl) => {
                if self.terms.is_empty() {
                    write!(f, "O(q^{})", fl - 1)
                } else {
                    write!(f, "{} + O(q^{})", self.known_part(), fl - 1)
                }
            }
        }
    }
}

impl fmt::Debug for TruncatedQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Truncated q-series with coefficients in Z[zeta_lambda], stored per
/// q-exponent as class -> integer maps. The workhorse for c-function
/// expansions.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedZetaSeries {
    lambda: Partition,
    terms: BTreeMap<i64, BTreeMap<Vec<i64>, i64>>,
    floor: Option<i64>,
}

impl TruncatedZetaSeries {
    pub fn zero(la: &Partition) -> Self {
        TruncatedZetaSeries { lambda: la.clone(), terms: BTreeMap::new(), floor: None }
    }

    pub fn one(la: &Partition) -> Self {
        let mut s = Self::zero(la);
        s.add_term(0, LambdaWeight::zero(la).coeffs().to_vec(), 1);
        s
    }

    pub fn from_zeta_laurent(x: &ZetaLaurent) -> Self {
        let mut s = Self::zero(x.lambda());
        for (class, poly) in x.terms() {
            for (e, c) in poly.terms() {
                s.add_term(e, class.to_vec(), c);
            }
        }
        s
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn floor(&self) -> Option<i64> {
        self.floor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64, class: &LambdaWeight) -> i64 {
        self.terms
            .get(&e)
            .and_then(|row| row.get(class.coeffs()))
            .copied()
            .unwrap_or(0)
    }

    /// Number of stored (q-exponent, class) entries.
    pub fn num_entries(&self) -> usize {
        self.terms.values().map(|row| row.len()).sum()
    }

    pub fn maxdeg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn effective_maxdeg(&self) -> Option<i64> {
        let stored = self.maxdeg();
        match self.floor {
            None => stored,
            Some(f) => floor_max(stored, Some(f - 1)),
        }
    }

    pub fn truncate(&mut self, floor: i64) {
        self.floor = floor_max(self.floor, Some(floor));
        let f = self.floor.unwrap();
        self.terms.retain(|&e, _| e >= f);
    }

    fn add_term(&mut self, e: i64, class: Vec<i64>, c: i64) {
        if c == 0 {
            return;
        }
        if let Some(f) = self.floor {
            if e < f {
                return;
            }
        }
        let row = self.terms.entry(e).or_default();
        match row.get_mut(&class) {
            Some(v) => {
                *v += c;
                if *v == 0 {
                    row.remove(&class);
                    if row.is_empty() {
                        self.terms.remove(&e);
                    }
                }
            }
            None => {
                row.insert(class, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.lambda, other.lambda, "series over different lambda contexts");
        let mut out = TruncatedZetaSeries {
            lambda: self.lambda.clone(),
            terms: BTreeMap::new(),
            floor: floor_max(self.floor, other.floor),
        };
        for (&e, row) in self.terms.iter().chain(other.terms.iter()) {
            for (class, &c) in row {
                out.add_term(e, class.clone(), c);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        TruncatedZetaSeries {
            lambda: self.lambda.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&e, row)| (e, row.iter().map(|(k, &c)| (k.clone(), -c)).collect()))
                .collect(),
            floor: self.floor,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.lambda, other.lambda, "series over different lambda contexts");
        let la = &self.lambda;
        let floor = product_floor(
            self.floor,
            self.effective_maxdeg(),
            other.floor,
            other.effective_maxdeg(),
        );
        let mut out =
            TruncatedZetaSeries { lambda: la.clone(), terms: BTreeMap::new(), floor };
        for (&e1, row1) in &self.terms {
            for (&e2, row2) in &other.terms {
                let e = e1 + e2;
                if let Some(f) = floor {
                    if e < f {
                        continue;
                    }
                }
                for (k1, &c1) in row1 {
                    let w1 = LambdaWeight::new(la, k1);
                    for (k2, &c2) in row2 {
                        let key = w1.add(&LambdaWeight::new(la, k2), la);
                        out.add_term(e, key.coeffs().to_vec(), c1 * c2);
                    }
                }
            }
        }
        out
    }

    /// zeta^gamma -> zeta^{-gamma}.
    pub fn conj(&self) -> Self {
        let la = &self.lambda;
        let mut out = TruncatedZetaSeries {
            lambda: la.clone(),
            terms: BTreeMap::new(),
            floor: self.floor,
        };
        for (&e, row) in &self.terms {
            for (k, &c) in row {
                let key = LambdaWeight::new(la, k).neg(la);
                out.add_term(e, key.coeffs().to_vec(), c);
            }
        }
        out
    }

    /// Coefficient of the zero class, as a scalar q-series.
    pub fn constant_term_series(&self) -> TruncatedQSeries {
        let zero_key = LambdaWeight::zero(&self.lambda).coeffs().to_vec();
        let mut p = LaurentQPoly::zero();
        for (&e, row) in &self.terms {
            if let Some(&c) = row.get(&zero_key) {
                p = p.add(&LaurentQPoly::from_terms(&[(e, c)]));
            }
        }
        match self.floor {
            None => TruncatedQSeries::exact(&p),
            Some(f) => TruncatedQSeries::with_floor(&p, f),
        }
    }

    /// Collect the stored terms into a group ring element (drops the floor).
    pub fn known_part(&self) -> ZetaLaurent {
        let la = &self.lambda;
        let mut out = ZetaLaurent::zero(la);
        for (&e, row) in &self.terms {
            for (k, &c) in row {
                out = out.add(&ZetaLaurent::monomial(
                    la,
                    &LambdaWeight::new(la, k),
                    LaurentQPoly::from_terms(&[(e, c)]),
                ));
            }
        }
        out
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        assert_eq!(self.lambda, other.lambda, "series over different lambda contexts");
        match floor_max(self.floor, other.floor) {
            None => self.terms == other.terms,
            Some(f) => {
                let keys: std::collections::BTreeSet<i64> = self
                    .terms
                    .keys()
                    .chain(other.terms.keys())
                    .copied()
                    .filter(|&e| e >= f)
                    .collect();
                keys.into_iter().all(|e| {
                    let empty = BTreeMap::new();
                    let r1 = self.terms.get(&e).unwrap_or(&empty);
                    let r2 = other.terms.get(&e).unwrap_or(&empty);
                    r1 == r2
                })
            }
        }
    }
}

/// Expansion of 1/(1 - v^m z_i^{-1} z_j) = sum_{r>=0} v^{mr} z_i^{-r} z_j^r,
/// truncated below q^{-floor_m}. Requires m >= 1; m <= 0 signals a factor with
/// the wrong orientation and is an error.
pub fn expand_inverse_factor(
    la: &Partition,
    m: i64,
    i: usize,
    j: usize,
    floor_m: i64,
) -> Result<TruncatedZetaSeries, RingError> {
    if m <= 0 {
        return Err(RingError::BadExpansionExponent(m));
    }
    assert!(floor_m >= 0, "truncation parameter must be nonnegative");
    let step = LambdaWeight::e_tilde(la, i).neg(la).add(&LambdaWeight::e_tilde(la, j), la);
    let mut out = TruncatedZetaSeries::zero(la);
    out.floor = Some(-floor_m);
    let mut class = LambdaWeight::zero(la);
    let mut r = 0i64;
    while m * r <= floor_m {
        let sign = if (m * r).rem_euclid(2) == 0 { 1 } else { -1 };
        out.add_term(-m * r, class.coeffs().to_vec(), sign);
        class = class.add(&step, la);
        r += 1;
    }
    Ok(out)
}
