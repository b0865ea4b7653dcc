use alcove_weyl::{Partition, Perm};

use crate::data::LambdaError;

/// Minimal length representative of its coset W_lambda u: no left descent in
/// J_lambda, equivalently the entries of each tableau row appear left to
/// right in increasing order in the one-line word.
pub fn is_min_rep(u: &Perm, la: &Partition) -> bool {
    la.j_set().iter().all(|&j| !u.is_left_descent(j))
}

/// Factor u = theta_lambda * theta^lambda with theta_lambda in W_lambda and
/// theta^lambda minimal in W_lambda u. Lengths add.
pub fn coset_decompose(u: &Perm, la: &Partition) -> (Perm, Perm) {
    let rank = la.total();
    let mut v = u.clone();
    'outer: loop {
        for &j in &la.j_set() {
            if v.is_left_descent(j) {
                v = Perm::s(rank, j).compose(&v);
                continue 'outer;
            }
        }
        break;
    }
    let theta = u.compose(&v.inv());
    (theta, v)
}

fn divider(la: &Partition, x: usize, y: usize) -> bool {
    y < x || la.row_of(x) == la.row_of(y)
}

/// Cut the one-line word of w before every descent and between ascending
/// neighbours lying in a common tableau row. The resulting runs are the
/// blocks of the lambda-expression.
pub fn lambda_expression(w: &Perm, la: &Partition) -> Vec<Vec<usize>> {
    let word = w.one_line();
    let mut blocks = vec![vec![word[0] as usize]];
    for p in 1..word.len() {
        let (x, y) = (word[p - 1] as usize, word[p] as usize);
        if divider(la, x, y) {
            blocks.push(Vec::new());
        }
        blocks.last_mut().unwrap().push(y);
    }
    blocks
}

/// Block sizes of the lambda-expression, sorted decreasingly.
pub fn mu_of(w: &Perm, la: &Partition) -> Partition {
    let mut sizes: Vec<usize> = lambda_expression(w, la).iter().map(|b| b.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(sizes)
}

/// Positions i such that u(i) and u(i+1) lie in a common block of the
/// lambda-expression. For minimal representatives this is the set of
/// ascents staying inside the minimal representatives.
pub fn ascent_set(u: &Perm, la: &Partition) -> Result<Vec<usize>, LambdaError> {
    if !is_min_rep(u, la) {
        return Err(LambdaError::NotMinRep(
            format!("{u}"),
            format!("{la}"),
        ));
    }
    let word = u.one_line();
    Ok((1..word.len())
        .filter(|&p| !divider(la, word[p - 1] as usize, word[p] as usize))
        .collect())
}
