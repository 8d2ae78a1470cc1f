//! Dense reference construction of the tensor-space operators from Kronecker
//! products of the 2x2 and 4x4 local pieces. Shares only scalar arithmetic
//! and matrix multiplication with the library.

#![allow(dead_code)]

use blobtensor::linalg::Matrix;
use blobtensor::tensor::Word;
use blobtensor::{Params, Scalar};

pub fn kron<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    Matrix::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |r, c| {
        a[(r / b.rows(), c / b.cols())].clone() * &b[(r % b.rows(), c % b.cols())]
    })
}

/// Index of a word: letter `2` at position `p` sets bit `n − 1 − p`.
pub fn index(w: &Word) -> usize {
    let n = w.len();
    w.letters()
        .iter()
        .enumerate()
        .map(|(p, &c)| usize::from(c == 2) << (n - 1 - p))
        .sum()
}

/// Reorder the oracle (integer-indexed) matrix to the basis `words`.
pub fn on_basis<S: Scalar>(m: &Matrix<S>, words: &[Word]) -> Matrix<S> {
    let idx: Vec<usize> = words.iter().map(index).collect();
    Matrix::from_fn(idx.len(), idx.len(), |r, c| m[(idx[r], idx[c])].clone())
}

fn local<S: Scalar>(entries: [[S; 4]; 4]) -> Matrix<S> {
    Matrix::from_rows(entries.into_iter().map(|r| r.to_vec()).collect())
}

/// Local R on the basis 11, 12, 21, 22 (columns are images).
pub fn r_local<S: Scalar>(p: &Params<S>) -> Matrix<S> {
    let (o, z, q, d) = (S::one(), S::zero(), p.q().clone(), p.q_minus_q_inv());
    local([
        [q.clone(), z.clone(), z.clone(), z.clone()],
        [z.clone(), d, o.clone(), z.clone()],
        [z.clone(), o, z.clone(), z.clone()],
        [z.clone(), z.clone(), z, q],
    ])
}

/// Local S: `q` on equal letters, swap otherwise.
pub fn s_local<S: Scalar>(p: &Params<S>) -> Matrix<S> {
    let (o, z, q) = (S::one(), S::zero(), p.q().clone());
    local([
        [q.clone(), z.clone(), z.clone(), z.clone()],
        [z.clone(), z.clone(), o.clone(), z.clone()],
        [z.clone(), o, z.clone(), z.clone()],
        [z.clone(), z.clone(), z, q],
    ])
}

/// A local 4x4 operator on 1-based positions `(i − 1, i)` of an `n`-fold tensor.
pub fn embed<S: Scalar>(n: usize, i: usize, loc: &Matrix<S>) -> Matrix<S> {
    let left = Matrix::identity(1 << (i - 2));
    let right = Matrix::identity(1 << (n - i));
    kron(&kron(&left, loc), &right)
}

pub fn t<S: Scalar>(n: usize, i: usize, p: &Params<S>) -> Matrix<S> {
    embed(n, i, &r_local(p))
}

pub fn t_inv<S: Scalar>(n: usize, i: usize, p: &Params<S>) -> Matrix<S> {
    t(n, i, p).sub_scalar(&p.q_minus_q_inv())
}

pub fn s<S: Scalar>(n: usize, j: usize, p: &Params<S>) -> Matrix<S> {
    embed(n, j, &s_local(p))
}

pub fn varpi<S: Scalar>(n: usize, p: &Params<S>) -> Matrix<S> {
    let z = S::zero;
    let d = Matrix::from_rows(vec![vec![p.lambda1().clone(), z()], vec![z(), p.lambda2().clone()]]);
    kron(&d, &Matrix::identity(1 << (n - 1)))
}

/// `S_n ⋯ S_2 ϖ`.
pub fn theta_varpi<S: Scalar>(n: usize, p: &Params<S>) -> Matrix<S> {
    let mut m = varpi(n, p);
    for j in 2..=n {
        m = s(n, j, p).mul(&m);
    }
    m
}

/// `T_2^{-1} ⋯ T_n^{-1} θϖ`.
pub fn x<S: Scalar>(n: usize, p: &Params<S>) -> Matrix<S> {
    let mut m = theta_varpi(n, p);
    for i in (2..=n).rev() {
        m = t_inv(n, i, p).mul(&m);
    }
    m
}

/// `X_1, …, X_n`.
pub fn xs<S: Scalar>(n: usize, p: &Params<S>) -> Vec<Matrix<S>> {
    let mut out = vec![x(n, p)];
    for k in 2..=n {
        let tk = t(n, k, p);
        let prev = out.last().unwrap();
        out.push(tk.mul(prev).mul(&tk));
    }
    out
}

/// `U_0 = X − λ_1`, `U_i = T_{i+1} − q`.
pub fn blob_gens<S: Scalar>(n: usize, p: &Params<S>) -> Vec<Matrix<S>> {
    let mut out = vec![x(n, p).sub_scalar(p.lambda1())];
    for i in 1..n {
        out.push(t(n, i + 1, p).sub_scalar(p.q()));
    }
    out
}

/// Restrict an operator preserving the span of `words`.
pub fn block<S: Scalar>(m: &Matrix<S>, words: &[Word]) -> Matrix<S> {
    on_basis(m, words)
}

/// Words of length `n` with `ones` letters 1: 2-initial lex, then 1-initial lex.
pub fn weight_words(n: usize, ones: usize) -> Vec<Word> {
    let mut all: Vec<Word> = (0..(1usize << n))
        .map(|b| {
            let letters: Vec<u8> = (0..n).map(|p| if (b >> (n - 1 - p)) & 1 == 1 { 2 } else { 1 }).collect();
            Word::from_letters(&letters).unwrap()
        })
        .filter(|w| w.letters().iter().filter(|&&c| c == 1).count() == ones)
        .collect();
    all.sort_by_key(|w| (w.letters()[0] == 1, w.letters()));
    all
}

/// Dimension of the smallest subspace containing `vs` and stable under `gens`.
pub fn closure_dim<S: Scalar>(dim: usize, vs: Vec<Vec<S>>, gens: &[Matrix<S>]) -> usize {
    let mut basis: Vec<Vec<S>> = Vec::new();
    let mut queue = vs;
    while let Some(v) = queue.pop() {
        let mut cand = basis.clone();
        cand.push(v.clone());
        if Matrix::from_columns(dim, &cand).rank() > basis.len() {
            basis.push(v.clone());
            for g in gens {
                queue.push(g.mul_vec(&v));
            }
        }
    }
    basis.len()
}
