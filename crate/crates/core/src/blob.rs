//! The blob algebra `b_n(q, m)` acting on `V^{⊗n}` through
//! `U_0 = X − λ_1` and `U_i = T_{i+1} − q`.

use serde::{Deserialize, Serialize};

use crate::error::{BlobError, Result};
use crate::linalg::Matrix;
use crate::relations::{blob_relations, check_on_matrices, check_on_words};
use crate::scalar::{Params, Scalar};
use crate::tensor::{op_t, op_x, op_xk, LinOp, RelationReport, Vect, Word};

/// A scalar multiple of a product `U_{f_1} U_{f_2} ⋯ U_{f_k}`.
///
/// The product is read as in the algebra: the last factor acts first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlobWord<S> {
    pub factors: Vec<usize>,
    pub coefficient: S,
}

impl<S: Scalar> BlobWord<S> {
    pub fn new(factors: Vec<usize>) -> Self {
        BlobWord {
            factors,
            coefficient: S::one(),
        }
    }

    pub fn identity() -> Self {
        Self::new(Vec::new())
    }

    pub fn scaled(mut self, c: S) -> Self {
        self.coefficient = self.coefficient * &c;
        self
    }
}

/// The generators `U_0, …, U_{n−1}` as operators on `V^{⊗n}`.
#[derive(Clone, Debug)]
pub struct BlobAction<S> {
    n: usize,
    params: Params<S>,
    gens: Vec<LinOp<S>>,
}

impl<S: Scalar> BlobAction<S> {
    pub fn new(n: usize, params: &Params<S>) -> Result<Self> {
        if n == 0 {
            return Err(BlobError::Precondition("tensor length must be positive".into()));
        }
        let mut gens = vec![op_x(n, params).minus_scalar(params.lambda1().clone())];
        for i in 1..n {
            gens.push(op_t(n, i + 1, params)?.minus_scalar(params.q().clone()).memoized());
        }
        Ok(BlobAction {
            n,
            params: params.clone(),
            gens,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &Params<S> {
        &self.params
    }

    pub fn generators(&self) -> &[LinOp<S>] {
        &self.gens
    }

    pub fn generator(&self, i: usize) -> Result<&LinOp<S>> {
        self.gens.get(i).ok_or(BlobError::IndexOutOfRange {
            what: "U",
            index: i,
            lo: 0,
            hi: self.n - 1,
        })
    }

    pub fn word_operator(&self, w: &BlobWord<S>) -> Result<LinOp<S>> {
        let ops = w
            .factors
            .iter()
            .map(|&i| self.generator(i).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(LinOp::product(self.n, &ops).scale(w.coefficient.clone()))
    }

    pub fn apply_word(&self, w: &BlobWord<S>, v: &Vect<S>) -> Result<Vect<S>> {
        if v.tensor_len() != self.n {
            return Err(BlobError::LengthMismatch {
                expected: self.n,
                found: v.tensor_len(),
            });
        }
        let mut out = v.clone();
        for &i in w.factors.iter().rev() {
            out = self.generator(i)?.apply(&out);
        }
        Ok(out.scaled(&w.coefficient))
    }

    /// Generator matrices on a basis closed under the action.
    pub fn matrices(&self, basis: &[Word]) -> Result<Vec<Matrix<S>>> {
        self.gens.iter().map(|g| g.matrix(basis)).collect()
    }
}

pub fn blob_generator<S: Scalar>(i: usize, action: &BlobAction<S>) -> Result<LinOp<S>> {
    action.generator(i).cloned()
}

pub fn apply_word<S: Scalar>(w: &BlobWord<S>, v: &Vect<S>, action: &BlobAction<S>) -> Result<Vect<S>> {
    action.apply_word(w, v)
}

/// Every blob relation on every word of `V^{⊗n}`, plus the ideal generator
/// `(X_1 X_2 − λ_1 λ_2)(T_2 − q) = 0`.
pub fn verify_blob_relations<S: Scalar>(n: usize, params: &Params<S>) -> Result<RelationReport> {
    if n < 2 {
        return Err(BlobError::Precondition("blob relations need n ≥ 2".into()));
    }
    let action = BlobAction::new(n, params)?;
    let words = Word::all(n);
    let mut rep = RelationReport::new(n, params);
    rep.checks = check_on_words(n, action.generators(), &blob_relations(n, params), &words);
    let x1 = op_x(n, params);
    let x2 = op_xk(n, 2, params)?;
    let ll = params.lambda1().clone() * params.lambda2();
    let ideal = x1
        .compose(&x2)
        .minus_scalar(ll)
        .compose(&op_t(n, 2, params)?.minus_scalar(params.q().clone()));
    rep.push("(X1 X2 - lambda1 lambda2)(T2 - q) = 0", ideal.first_nonzero(&words));
    Ok(rep)
}

/// The blob relations for the transposed generator matrices on every weight
/// space of `V^{⊗n}`.
pub fn verify_transposed_relations<S: Scalar>(n: usize, params: &Params<S>) -> Result<RelationReport> {
    let action = BlobAction::new(n, params)?;
    let rels = blob_relations(n, params);
    let mut rep = RelationReport::new(n, params);
    for ones in 0..=n {
        let basis = Word::with_ones(n, ones);
        let labels: Vec<String> = basis.iter().map(Word::to_string).collect();
        let gens: Vec<Matrix<S>> = action.matrices(&basis)?.iter().map(Matrix::transpose).collect();
        for mut c in check_on_matrices(&gens, &rels, &labels) {
            c.relation = format!("transpose, {ones} ones: {}", c.relation);
            rep.checks.push(c);
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RationalFunction as R;

    #[test]
    fn u0_on_two_initial_words() {
        let p = Params::<R>::new(0, 3).unwrap();
        let a = BlobAction::new(3, &p).unwrap();
        let w: Word = "212".parse().unwrap();
        let got = a.generator(0).unwrap().apply_word(w);
        assert_eq!(got, Vect::term(w, -p.gauss(3)));
    }

    #[test]
    fn relations_hold_small() {
        let p = Params::<R>::new(0, 2).unwrap();
        for n in 2..=4 {
            assert!(verify_blob_relations(n, &p).unwrap().passed());
            assert!(verify_transposed_relations(n, &p).unwrap().passed());
        }
    }
}
