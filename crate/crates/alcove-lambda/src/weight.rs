use std::fmt;

use alcove_weyl::{Partition, WeightP};

/// A class in the quotient of Z^r by the cyclic lattice generated by
/// (lambda_1, ..., lambda_r). Normal form keeps the last coordinate in
/// [0, lambda_r). Torsion is possible: for lambda=(2,2) the class (1,1)
/// is nonzero but doubles to zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaWeight {
    a: Vec<i64>,
}

impl LambdaWeight {
    pub fn new(la: &Partition, coeffs: &[i64]) -> Self {
        assert_eq!(coeffs.len(), la.rows(), "one coefficient per row");
        let mut a = coeffs.to_vec();
        let last = *la.parts().last().unwrap() as i64;
        let m = a[la.rows() - 1].div_euclid(last);
        if m != 0 {
            for (x, &p) in a.iter_mut().zip(la.parts()) {
                *x -= m * p as i64;
            }
        }
        LambdaWeight { a }
    }

    pub fn zero(la: &Partition) -> Self {
        LambdaWeight {
            a: vec![0; la.rows()],
        }
    }

    /// The class of e_i for i in row k.
    pub fn e_tilde(la: &Partition, k: usize) -> Self {
        let mut a = vec![0; la.rows()];
        a[k - 1] = 1;
        LambdaWeight::new(la, &a)
    }

    /// Row sums of any coefficient representative of gamma.
    pub fn class_of(gamma: &WeightP, la: &Partition) -> Self {
        assert_eq!(gamma.rank(), la.total());
        let mut a = vec![0i64; la.rows()];
        for (i, &d) in gamma.coeffs().iter().enumerate() {
            a[la.row_of(i + 1) - 1] += d;
        }
        LambdaWeight::new(la, &a)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.a
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &LambdaWeight, la: &Partition) -> LambdaWeight {
        let a: Vec<i64> = self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect();
        LambdaWeight::new(la, &a)
    }

    pub fn sub(&self, other: &LambdaWeight, la: &Partition) -> LambdaWeight {
        let a: Vec<i64> = self.a.iter().zip(&other.a).map(|(x, y)| x - y).collect();
        LambdaWeight::new(la, &a)
    }

    pub fn neg(&self, la: &Partition) -> LambdaWeight {
        let a: Vec<i64> = self.a.iter().map(|x| -x).collect();
        LambdaWeight::new(la, &a)
    }

    pub fn parse(la: &Partition, s: &str) -> Result<LambdaWeight, String> {
        let coeffs: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        let coeffs = coeffs.map_err(|e| format!("bad class coefficient in {s:?}: {e}"))?;
        if coeffs.len() != la.rows() {
            return Err(format!(
                "expected {} class coefficients, got {}",
                la.rows(),
                coeffs.len()
            ));
        }
        Ok(LambdaWeight::new(la, &coeffs))
    }
}

impl fmt::Display for LambdaWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for LambdaWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaWeight({self})")
    }
}

/// Per-row Euclidean coordinates a_k = lambda_k b_k + c_k with 0 <= c_k < lambda_k.
/// These describe the unique integral point of the fundamental lambda-alcove
/// in the class: row k of the tableau filling reads b_k + 1 in the first c_k
/// columns and b_k in the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaAlcoveCoords {
    b: Vec<i64>,
    c: Vec<i64>,
}

impl LambdaAlcoveCoords {
    pub fn of(w: &LambdaWeight, la: &Partition) -> Self {
        let mut b = Vec::with_capacity(la.rows());
        let mut c = Vec::with_capacity(la.rows());
        for (k, &a) in w.coeffs().iter().enumerate() {
            let l = la.parts()[k] as i64;
            b.push(a.div_euclid(l));
            c.push(a.rem_euclid(l));
        }
        LambdaAlcoveCoords { b, c }
    }

    pub fn b(&self, k: usize) -> i64 {
        self.b[k - 1]
    }

    pub fn c(&self, k: usize) -> i64 {
        self.c[k - 1]
    }

    pub fn c_star(&self, k: usize, la: &Partition) -> i64 {
        la.parts()[k - 1] as i64 - self.c[k - 1]
    }

    /// The integral point of the fundamental lambda-alcove with these coordinates.
    pub fn materialize(&self, la: &Partition) -> WeightP {
        let mut coeffs = vec![0i64; la.total()];
        for k in 1..=la.rows() {
            for col in 1..=la.parts()[k - 1] {
                let v = if (col as i64) <= self.c[k - 1] {
                    self.b[k - 1] + 1
                } else {
                    self.b[k - 1]
                };
                coeffs[la.entry(k, col) - 1] = v;
            }
        }
        WeightP::from_coeffs(coeffs)
    }
}

/// The unique weight in the fundamental lambda-alcove congruent to gamma.
pub fn project_to_fundamental(gamma: &WeightP, la: &Partition) -> WeightP {
    LambdaAlcoveCoords::of(&LambdaWeight::class_of(gamma, la), la).materialize(la)
}

/// Membership of the integral points of the fundamental lambda-alcove.
pub fn is_lambda_alcove_weight(gamma: &WeightP, la: &Partition) -> bool {
    project_to_fundamental(gamma, la) == *gamma
}
