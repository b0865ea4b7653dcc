use std::collections::BTreeMap;
use std::fmt;

use alcove_lambda::LambdaWeight;
use alcove_weyl::{Partition, WeightP};

use crate::laurent::LaurentQPoly;
use crate::RingError;

/// Coefficient ring for the group ring over P/Q_lambda.
pub trait Coeff: Clone + Eq {
    fn c_zero() -> Self;
    fn c_one() -> Self;
    fn is_zero(&self) -> bool;
    fn c_add(&self, other: &Self) -> Self;
    fn c_neg(&self) -> Self;
    fn c_mul(&self, other: &Self) -> Self;
    /// Terms as (q-exponent, integer) pairs, for serialization.
    fn q_terms(&self) -> Vec<(i64, i64)>;
    fn from_q_terms(terms: &[(i64, i64)]) -> Self;
}

impl Coeff for i64 {
    fn c_zero() -> Self {
        0
    }
    fn c_one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn c_add(&self, other: &Self) -> Self {
        self + other
    }
    fn c_neg(&self) -> Self {
        -self
    }
    fn c_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn q_terms(&self) -> Vec<(i64, i64)> {
        if *self == 0 {
            vec![]
        } else {
            vec![(0, *self)]
        }
    }
    fn from_q_terms(terms: &[(i64, i64)]) -> Self {
        terms.iter().filter(|&&(e, _)| e == 0).map(|&(_, c)| c).sum()
    }
}

impl Coeff for LaurentQPoly {
    fn c_zero() -> Self {
        LaurentQPoly::zero()
    }
    fn c_one() -> Self {
        LaurentQPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentQPoly::is_zero(self)
    }
    fn c_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn c_neg(&self) -> Self {
        self.neg()
    }
    fn c_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn q_terms(&self) -> Vec<(i64, i64)> {
        self.terms().collect()
    }
    fn from_q_terms(terms: &[(i64, i64)]) -> Self {
        LaurentQPoly::from_terms(terms)
    }
}

/// Element of the group ring of P/Q_lambda over the coefficient ring C.
/// Keys are class coefficient vectors in LambdaWeight normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElem<C> {
    lambda: Partition,
    terms: BTreeMap<Vec<i64>, C>,
}

/// Z[zeta_lambda].
pub type ZetaRing = GroupRingElem<i64>;
/// Z[q,q^-1][zeta_lambda].
pub type ZetaLaurent = GroupRingElem<LaurentQPoly>;

/// Checks that two elements live over the same lambda; most binary operations
/// assert this internally, API boundaries can surface it as an error instead.
pub fn same_context<C>(a: &GroupRingElem<C>, b: &GroupRingElem<C>) -> Result<(), RingError> {
    if a.lambda == b.lambda {
        Ok(())
    } else {
        Err(RingError::LambdaMismatch(a.lambda.to_string(), b.lambda.to_string()))
    }
}

impl<C: Coeff> GroupRingElem<C> {
    pub fn zero(la: &Partition) -> Self {
        GroupRingElem { lambda: la.clone(), terms: BTreeMap::new() }
    }

    pub fn one(la: &Partition) -> Self {
        Self::monomial(la, &LambdaWeight::zero(la), C::c_one())
    }

    pub fn monomial(la: &Partition, class: &LambdaWeight, c: C) -> Self {
        let mut out = Self::zero(la);
        out.add_term(class.coeffs().to_vec(), c);
        out
    }

    /// zeta^gamma for a weight gamma of the ambient lattice.
    pub fn zeta(la: &Partition, gamma: &WeightP) -> Self {
        Self::monomial(la, &LambdaWeight::class_of(gamma, la), C::c_one())
    }

    /// z_r = zeta^{e-tilde_r}, the class of the first box of row r (1-based).
    pub fn z_var(la: &Partition, r: usize) -> Self {
        Self::monomial(la, &LambdaWeight::e_tilde(la, r), C::c_one())
    }

    /// z_r^k for possibly negative k.
    pub fn z_pow(la: &Partition, r: usize, k: i64) -> Self {
        let mut coeffs = vec![0i64; la.rows()];
        coeffs[r - 1] = k;
        Self::monomial(la, &LambdaWeight::new(la, &coeffs), C::c_one())
    }

    fn add_term(&mut self, key: Vec<i64>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = v.c_add(&c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &C)> + '_ {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, class: &LambdaWeight) -> C {
        self.terms.get(class.coeffs()).cloned().unwrap_or_else(C::c_zero)
    }

    /// Coefficient of the zero class.
    pub fn constant_term(&self) -> C {
        self.terms
            .get(LambdaWeight::zero(&self.lambda).coeffs())
            .cloned()
            .unwrap_or_else(C::c_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.lambda, other.lambda,
            "group ring elements over different lambda contexts"
        );
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupRingElem {
            lambda: self.lambda.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.c_neg())).collect(),
        }
    }

    pub fn scalar(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.lambda);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.c_mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.lambda, other.lambda,
            "group ring elements over different lambda contexts"
        );
        let la = &self.lambda;
        let mut out = Self::zero(la);
        for (k1, v1) in &self.terms {
            let w1 = LambdaWeight::new(la, k1);
            for (k2, v2) in &other.terms {
                let key = w1.add(&LambdaWeight::new(la, k2), la);
                out.add_term(key.coeffs().to_vec(), v1.c_mul(v2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.lambda);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// zeta^gamma -> zeta^{-gamma}; coefficients fixed.
    pub fn conj(&self) -> Self {
        let la = &self.lambda;
        let mut out = Self::zero(la);
        for (k, v) in &self.terms {
            let key = LambdaWeight::new(la, k).neg(la);
            out.add_term(key.coeffs().to_vec(), v.clone());
        }
        out
    }

    /// Multiply by zeta^class (a monomial shift).
    pub fn shift(&self, class: &LambdaWeight) -> Self {
        let la = &self.lambda;
        let mut out = Self::zero(la);
        for (k, v) in &self.terms {
            let key = LambdaWeight::new(la, k).add(class, la);
            out.add_term(key.coeffs().to_vec(), v.clone());
        }
        out
    }

    /// Terms flattened to {"zeta":[a_1..a_r],"q":e,"c":c} objects, sorted by
    /// class then q-exponent.
    pub fn to_json(&self) -> serde_json::Value {
        let mut items = Vec::new();
        for (k, v) in &self.terms {
            for (e, c) in v.q_terms() {
                items.push(serde_json::json!({"zeta": k, "q": e, "c": c}));
            }
        }
        serde_json::Value::Array(items)
    }

    pub fn from_json(la: &Partition, v: &serde_json::Value) -> Result<Self, RingError> {
        let arr = v.as_array().ok_or_else(|| RingError::BadJson("expected array".into()))?;
        let mut grouped: BTreeMap<Vec<i64>, Vec<(i64, i64)>> = BTreeMap::new();
        for item in arr {
            let zeta = item
                .get("zeta")
                .and_then(|z| z.as_array())
                .ok_or_else(|| RingError::BadJson("missing zeta".into()))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| RingError::BadJson("bad zeta entry".into())))
                .collect::<Result<Vec<i64>, _>>()?;
            let e = item
                .get("q")
                .and_then(|x| x.as_i64())
                .ok_or_else(|| RingError::BadJson("missing q".into()))?;
            let c = item
                .get("c")
                .and_then(|x| x.as_i64())
                .ok_or_else(|| RingError::BadJson("missing c".into()))?;
            if zeta.len() != la.rows() {
                return Err(RingError::BadJson(format!(
                    "zeta key has {} entries, lambda has {} rows",
                    zeta.len(),
                    la.rows()
                )));
            }
            grouped.entry(zeta).or_default().push((e, c));
        }
        let mut out = Self::zero(la);
        for (zeta, qterms) in grouped {
            let key = LambdaWeight::new(la, &zeta);
            out.add_term(key.coeffs().to_vec(), C::from_q_terms(&qterms));
        }
        Ok(out)
    }
}

impl ZetaLaurent {
    /// q -> q^{-1} on every coefficient; zeta fixed.
    pub fn bar(&self) -> Self {
        GroupRingElem {
            lambda: self.lambda.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.bar())).collect(),
        }
    }

    /// Multiply every coefficient by q^k.
    pub fn q_shift(&self, k: i64) -> Self {
        GroupRingElem {
            lambda: self.lambda.clone(),
            terms: self.terms.iter().map(|(kk, v)| (kk.clone(), v.q_shift(k))).collect(),
        }
    }

    pub fn scalar_int(&self, c: i64) -> Self {
        self.scalar(&LaurentQPoly::constant(c))
    }

    /// Largest q-degree over all coefficients; None for zero.
    pub fn q_deg(&self) -> Option<i64> {
        self.terms.values().filter_map(|p| p.deg()).max()
    }

    /// Specialization at q^{-1} = 0: keeps the q-degree-0 part of every
    /// coefficient. Errors if any coefficient has positive q-degree.
    pub fn sp0(&self) -> Result<ZetaRing, RingError> {
        let mut out = ZetaRing::zero(&self.lambda);
        for (k, v) in &self.terms {
            if let Some(d) = v.deg() {
                if d > 0 {
                    return Err(RingError::PositiveQDegree(d));
                }
            }
            out.add_term(k.clone(), v.coeff(0));
        }
        Ok(out)
    }

    /// Inclusion-of-scalars inverse: view an integer-coefficient element as a
    /// Laurent-coefficient one.
    pub fn from_zeta_ring(x: &ZetaRing) -> Self {
        let mut out = Self::zero(&x.lambda);
        for (k, &c) in &x.terms {
            out.add_term(k.clone(), LaurentQPoly::constant(c));
        }
        out
    }
}

fn fmt_zeta_key(f: &mut fmt::Formatter<'_>, key: &[i64]) -> fmt::Result {
    let mut wrote = false;
    for (i, &a) in key.iter().enumerate() {
        if a == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        wrote = true;
        if a == 1 {
            write!(f, "z{}", i + 1)?;
        } else {
            write!(f, "z{}^{}", i + 1, a)?;
        }
    }
    if !wrote {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for ZetaRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in &self.terms {
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
            if k.iter().all(|&x| x == 0) {
                write!(f, "{a}")?;
            } else {
                if a != 1 {
                    write!(f, "{a}")?;
                }
                fmt_zeta_key(f, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ZetaLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let trivial_key = k.iter().all(|&x| x == 0);
            if trivial_key {
                if v.terms().count() == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "({v})")?;
                }
            } else {
                if v == &LaurentQPoly::one() {
                    // coefficient 1: just the monomial
                } else if v.terms().count() == 1 {
                    write!(f, "{v}*")?;
                } else {
                    write!(f, "({v})*")?;
                }
                fmt_zeta_key(f, k)?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for GroupRingElem<C>
where
    GroupRingElem<C>: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
