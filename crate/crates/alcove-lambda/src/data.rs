use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use alcove_weyl::{Partition, Perm, Root};
use thiserror::Error;

use crate::glambda::GLambdaGroup;

#[derive(Debug, Error)]
pub enum LambdaError {
    #[error("weight {0} does not lie in the fundamental lambda-alcove for lambda={1}")]
    NotLambdaWeight(String, String),
    #[error("permutation {0} is not a minimal coset representative for lambda={1}")]
    NotMinRep(String, String),
}

/// Longest element of the standard parabolic subgroup generated by {s_j : j in js}.
/// Reverses the support interval of each maximal run of consecutive indices.
pub fn longest_parabolic(rank: usize, js: &[usize]) -> Perm {
    let mut img: Vec<u8> = (1..=rank as u8).collect();
    let mut k = 0;
    while k < js.len() {
        let start = js[k];
        let mut end = js[k];
        while k + 1 < js.len() && js[k + 1] == end + 1 {
            k += 1;
            end = js[k];
        }
        img[start - 1..=end].reverse();
        k += 1;
    }
    Perm::from_images(img)
}

/// Derived data for a partition of n+1, computed once and shared.
pub struct LambdaData {
    lambda: Partition,
    lambda_prime: Partition,
    rank: usize,
    j_lambda: Vec<usize>,
    j_lambda_prime: Vec<usize>,
    phi_lambda_pos: Vec<Root>,
    u_lambda: Perm,
    w_lambda: Perm,
    w_lambda_prime: Perm,
    a_lambda: usize,
    glambda: GLambdaGroup,
    min_reps: OnceLock<Vec<Perm>>,
    rep_index: OnceLock<HashMap<Perm, usize>>,
}

impl LambdaData {
    pub fn new(lambda: Partition) -> Self {
        let rank = lambda.total();
        let lambda_prime = lambda.transpose();
        let j_lambda = lambda.j_set();
        let j_lambda_prime = lambda_prime.j_set();
        let mut phi_lambda_pos = Vec::new();
        for r in Root::all_positive(rank) {
            if lambda.row_of(r.i()) == lambda.row_of(r.j()) {
                phi_lambda_pos.push(r);
            }
        }
        // column reading of the row tableau, top to bottom then left to right
        let mut img = Vec::with_capacity(rank);
        for col in 1..=lambda.parts()[0] {
            for k in 1..=lambda.rows() {
                if lambda.parts()[k - 1] >= col {
                    img.push(lambda.entry(k, col) as u8);
                }
            }
        }
        let u_lambda = Perm::from_images(img);
        let w_lambda = longest_parabolic(rank, &j_lambda);
        let w_lambda_prime = longest_parabolic(rank, &j_lambda_prime);
        let a_lambda = lambda.a_val();
        let glambda = GLambdaGroup::new(&lambda);
        LambdaData {
            lambda,
            lambda_prime,
            rank,
            j_lambda,
            j_lambda_prime,
            phi_lambda_pos,
            u_lambda,
            w_lambda,
            w_lambda_prime,
            a_lambda,
            glambda,
            min_reps: OnceLock::new(),
            rep_index: OnceLock::new(),
        }
    }

    /// Shared per-partition instance.
    pub fn get(lambda: &Partition) -> Arc<LambdaData> {
        static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<LambdaData>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = cache.lock().unwrap();
        map.entry(lambda.parts().to_vec())
            .or_insert_with(|| Arc::new(LambdaData::new(lambda.clone())))
            .clone()
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn lambda_prime(&self) -> &Partition {
        &self.lambda_prime
    }

    /// n+1.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn j_lambda(&self) -> &[usize] {
        &self.j_lambda
    }

    pub fn j_lambda_prime(&self) -> &[usize] {
        &self.j_lambda_prime
    }

    /// Positive roots e_i - e_j with i, j in a common row of the tableau.
    pub fn phi_lambda_pos(&self) -> &[Root] {
        &self.phi_lambda_pos
    }

    pub fn u_lambda(&self) -> &Perm {
        &self.u_lambda
    }

    /// Longest element of the parabolic on J_lambda.
    pub fn w_lambda(&self) -> &Perm {
        &self.w_lambda
    }

    /// Longest element of the parabolic on J_{lambda'}.
    pub fn w_lambda_prime(&self) -> &Perm {
        &self.w_lambda_prime
    }

    /// l(w_{lambda'}), also the a-function value of the lambda cell.
    pub fn a_lambda(&self) -> usize {
        self.a_lambda
    }

    pub fn glambda(&self) -> &GLambdaGroup {
        &self.glambda
    }

    /// True if u permutes each row of the tableau of lambda' within itself.
    pub fn in_w_lambda_prime(&self, u: &Perm) -> bool {
        (1..=self.rank).all(|i| self.lambda_prime.row_of(u.apply(i)) == self.lambda_prime.row_of(i))
    }

    /// True if r is a positive root of the parabolic on J_{lambda'}.
    pub fn in_phi_lambda_prime_pos(&self, r: &Root) -> bool {
        r.is_positive() && self.lambda_prime.row_of(r.i()) == self.lambda_prime.row_of(r.j())
    }

    /// The image of the positive parabolic roots of J_{lambda'} under u_lambda:
    /// all e_{t(k,i)} - e_{t(l,i)} with k < l and i a column of row l.
    pub fn u_lambda_phi_prime_pos(&self) -> Vec<Root> {
        let mut out = Vec::new();
        for k in 1..=self.lambda.rows() {
            for l in (k + 1)..=self.lambda.rows() {
                for i in 1..=self.lambda.parts()[l - 1] {
                    out.push(Root::new(self.lambda.entry(k, i), self.lambda.entry(l, i)));
                }
            }
        }
        out
    }

    /// Row pair (k, l) with k < l such that r or -r joins row k to row l.
    pub fn row_pair(&self, r: &Root) -> (usize, usize) {
        let a = self.lambda.row_of(r.i());
        let b = self.lambda.row_of(r.j());
        (a.min(b), a.max(b))
    }

    /// Minimal coset representatives in canonical order: u_lambda first, the
    /// rest by (length, lexicographic reduced word).
    pub fn min_reps(&self) -> &[Perm] {
        self.min_reps.get_or_init(|| {
            // interleavings of the rows: row entries must appear in increasing order
            let mut stack = vec![Vec::with_capacity(self.rank)];
            let mut out = Vec::new();
            while let Some(word) = stack.pop() {
                if word.len() == self.rank {
                    out.push(self.rep_from_row_word(&word));
                    continue;
                }
                for k in (1..=self.lambda.rows()).rev() {
                    let used = word.iter().filter(|&&r| r == k).count();
                    if used < self.lambda.parts()[k - 1] {
                        let mut next = word.clone();
                        next.push(k);
                        stack.push(next);
                    }
                }
            }
            let mut keyed: Vec<(usize, Vec<u8>, Perm)> = out
                .into_iter()
                .map(|p| {
                    let (w, pow) = alcove_weyl::ExtAffine::finite(p.clone()).reduced_word();
                    debug_assert_eq!(pow, 0);
                    (p.inversions(), w, p)
                })
                .collect();
            keyed.sort();
            let mut reps: Vec<Perm> = keyed.into_iter().map(|(_, _, p)| p).collect();
            let pos = reps.iter().position(|p| *p == self.u_lambda).expect("u_lambda is a minimal rep");
            let u = reps.remove(pos);
            reps.insert(0, u);
            assert_eq!(reps.len() as u64, self.lambda.rep_count());
            reps
        })
    }

    // one-line filled row by row: the positions holding row k receive the
    // entries of row k in increasing order
    fn rep_from_row_word(&self, word: &[usize]) -> Perm {
        let mut next_col = vec![0usize; self.lambda.rows()];
        let mut img = vec![0u8; self.rank];
        for (pos, &k) in word.iter().enumerate() {
            next_col[k - 1] += 1;
            img[pos] = self.lambda.entry(k, next_col[k - 1]) as u8;
        }
        Perm::from_images(img)
    }

    /// Position of a minimal representative in the canonical order.
    pub fn rep_index(&self, u: &Perm) -> Option<usize> {
        let map = self.rep_index.get_or_init(|| {
            self.min_reps()
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i))
                .collect()
        });
        map.get(u).copied()
    }
}
