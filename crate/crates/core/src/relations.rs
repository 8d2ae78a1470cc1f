//! Defining relations written as linear combinations of generator words, so
//! that one list can be checked against lazy operators and dense matrices.

use crate::linalg::Matrix;
use crate::scalar::{Params, Scalar};
use crate::tensor::{LinOp, RelationCheck, Word};

/// `Σ c_k · g_{w_k} = 0`, where `w_k` is a generator word read as a product
/// (last factor acts first) and the empty word is the identity.
#[derive(Clone, Debug)]
pub struct Relation<S> {
    pub name: String,
    pub terms: Vec<(S, Vec<usize>)>,
}

impl<S: Scalar> Relation<S> {
    fn new(name: String, terms: Vec<(S, Vec<usize>)>) -> Self {
        Relation { name, terms }
    }

    /// The relation obtained by reversing every word (the image under the
    /// antiinvolution fixing the generators).
    pub fn reversed(&self) -> Self {
        Relation {
            name: format!("{} (reversed)", self.name),
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.clone(), w.iter().rev().copied().collect()))
                .collect(),
        }
    }
}

/// Relations of `b_n` in the generators `U_0, …, U_{n−1}`.
pub fn blob_relations<S: Scalar>(n: usize, params: &Params<S>) -> Vec<Relation<S>> {
    let one = S::one;
    let mut out = vec![Relation::new(
        "U0^2 = -[m] U0".into(),
        vec![(one(), vec![0, 0]), (params.gauss(params.m()), vec![0])],
    )];
    for i in 1..n {
        out.push(Relation::new(
            format!("U{i}^2 = -[2] U{i}"),
            vec![(one(), vec![i, i]), (params.gauss(2), vec![i])],
        ));
    }
    if n >= 2 {
        out.push(Relation::new(
            "U1 U0 U1 = [m-1] U1".into(),
            vec![(one(), vec![1, 0, 1]), (-params.gauss(params.m() - 1), vec![1])],
        ));
    }
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        out.push(Relation::new(
            format!("U{i} U{j} U{i} = U{i}"),
            vec![(one(), vec![i, j, i]), (-one(), vec![i])],
        ));
        out.push(Relation::new(
            format!("U{j} U{i} U{j} = U{j}"),
            vec![(one(), vec![j, i, j]), (-one(), vec![j])],
        ));
    }
    for i in 0..n {
        for j in i + 2..n {
            out.push(Relation::new(
                format!("U{i} U{j} = U{j} U{i}"),
                vec![(one(), vec![i, j]), (-one(), vec![j, i])],
            ));
        }
    }
    out
}

/// Relations of `H(n,2)` in the generators `X = 0` and `g_i = i`,
/// `1 ≤ i ≤ n−1`.
pub fn ariki_koike_relations<S: Scalar>(n: usize, params: &Params<S>) -> Vec<Relation<S>> {
    let one = S::one;
    let (l1, l2) = (params.lambda1().clone(), params.lambda2().clone());
    let mut out = vec![Relation::new(
        "(X - lambda1)(X - lambda2) = 0".into(),
        vec![
            (one(), vec![0, 0]),
            (-(l1.clone() + &l2), vec![0]),
            (l1 * &l2, vec![]),
        ],
    )];
    for i in 1..n {
        out.push(Relation::new(
            format!("(g{i} - q)(g{i} + q^-1) = 0"),
            vec![
                (one(), vec![i, i]),
                (-params.q_minus_q_inv(), vec![i]),
                (-one(), vec![]),
            ],
        ));
    }
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        out.push(Relation::new(
            format!("g{i} g{j} g{i} = g{j} g{i} g{j}"),
            vec![(one(), vec![i, j, i]), (-one(), vec![j, i, j])],
        ));
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push(Relation::new(
                format!("g{i} g{j} = g{j} g{i}"),
                vec![(one(), vec![i, j]), (-one(), vec![j, i])],
            ));
        }
    }
    if n >= 2 {
        out.push(Relation::new(
            "g1 X g1 X = X g1 X g1".into(),
            vec![(one(), vec![1, 0, 1, 0]), (-one(), vec![0, 1, 0, 1])],
        ));
    }
    for j in 2..n {
        out.push(Relation::new(
            format!("X g{j} = g{j} X"),
            vec![(one(), vec![0, j]), (-one(), vec![j, 0])],
        ));
    }
    out
}

/// The operator `Σ c_k · g_{w_k}`.
pub fn relation_operator<S: Scalar>(n: usize, gens: &[LinOp<S>], rel: &Relation<S>) -> LinOp<S> {
    let mut acc = LinOp::scalar(n, S::zero());
    for (c, w) in &rel.terms {
        let ops: Vec<LinOp<S>> = w.iter().map(|&i| gens[i].clone()).collect();
        acc = acc.combine(&LinOp::product(n, &ops), c.clone());
    }
    acc
}

/// Check each relation on every word of `words`.
pub fn check_on_words<S: Scalar>(
    n: usize,
    gens: &[LinOp<S>],
    rels: &[Relation<S>],
    words: &[Word],
) -> Vec<RelationCheck> {
    rels.iter()
        .map(|r| RelationCheck::new(r.name.clone(), relation_operator(n, gens, r).first_nonzero(words)))
        .collect()
}

/// The matrix `Σ c_k · g_{w_k}`.
pub fn relation_matrix<S: Scalar>(gens: &[Matrix<S>], rel: &Relation<S>) -> Matrix<S> {
    let d = gens.first().map_or(0, Matrix::rows);
    let mut acc = Matrix::zeros(d, d);
    for (c, w) in &rel.terms {
        let mut m = Matrix::identity(d);
        for &i in w {
            m = m.mul(&gens[i]);
        }
        let term = if c.is_one() { m } else { m.scale(c) };
        acc = acc.add(&term);
    }
    acc
}

/// Check each relation as a matrix identity; failures name the first
/// offending basis column by `labels`.
pub fn check_on_matrices<S: Scalar>(
    gens: &[Matrix<S>],
    rels: &[Relation<S>],
    labels: &[String],
) -> Vec<RelationCheck> {
    rels.iter()
        .map(|r| {
            let m = relation_matrix(gens, r);
            let bad = (0..m.cols()).find(|&c| (0..m.rows()).any(|row| !m[(row, c)].is_zero()));
            RelationCheck::labeled(r.name.clone(), bad.map(|c| labels[c].clone()))
        })
        .collect()
}
