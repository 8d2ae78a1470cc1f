//! Weight spaces `M_n(λ)` of `V^{⊗n}`, the idempotent `e = −U_{n−1}/[2]`,
//! localization to `b_{n−2}` and the adjointness criteria.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::blob::BlobAction;
use crate::error::{BlobError, Result};
use crate::linalg::{Matrix, Subspace};
use crate::relations::{ariki_koike_relations, blob_relations, check_on_matrices};
use crate::scalar::{Params, Scalar};
use crate::tensor::{op_theta_varpi, LinOp, RelationReport, Vect, Word};

/// A weight `λ ∈ Λ_n = {n, n−2, …, −n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightLabel {
    pub n: usize,
    pub lambda: i64,
}

impl WeightLabel {
    pub fn new(n: usize, lambda: i64) -> Result<Self> {
        let ni = n as i64;
        if lambda.abs() > ni || (lambda + ni) % 2 != 0 {
            return Err(BlobError::WeightOutOfRange { n, lambda });
        }
        Ok(WeightLabel { n, lambda })
    }

    /// `Λ_n` in ascending order.
    pub fn all(n: usize) -> Vec<WeightLabel> {
        let ni = n as i64;
        (0..=n)
            .map(|k| WeightLabel {
                n,
                lambda: -ni + 2 * k as i64,
            })
            .collect()
    }

    /// `Λ_n \ {±n}`.
    pub fn interior(n: usize) -> Vec<WeightLabel> {
        Self::all(n).into_iter().filter(|w| !w.is_extremal()).collect()
    }

    /// Number of letters `1`; also written `a`.
    pub fn n1(&self) -> usize {
        ((self.lambda + self.n as i64) / 2) as usize
    }

    pub fn n2(&self) -> usize {
        self.n - self.n1()
    }

    pub fn is_extremal(&self) -> bool {
        self.lambda.unsigned_abs() as usize == self.n
    }

    fn require_interior(&self) -> Result<()> {
        if self.is_extremal() {
            return Err(BlobError::DegenerateWeight {
                n: self.n,
                lambda: self.lambda,
            });
        }
        Ok(())
    }
}

/// Words with `n_1` ones: the `2`-initial block, then the `1`-initial block,
/// each lexicographic.
pub fn weight_basis(n: usize, lambda: i64) -> Result<Vec<Word>> {
    let label = WeightLabel::new(n, lambda)?;
    let words = Word::with_ones(n, label.n1());
    let (ones, twos): (Vec<Word>, Vec<Word>) = words.into_iter().partition(|w| w.first() == 1);
    Ok(twos.into_iter().chain(ones).collect())
}

/// `M_n(λ)` with materialized generator matrices.
#[derive(Clone, Debug)]
pub struct WeightModule<S> {
    params: Params<S>,
    label: WeightLabel,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    gens: Vec<Matrix<S>>,
}

impl<S: Scalar> WeightModule<S> {
    pub fn new(n: usize, lambda: i64, params: &Params<S>) -> Result<Self> {
        let basis = weight_basis(n, lambda)?;
        Self::on_basis(n, lambda, basis, params)
    }

    /// Same module on a caller-chosen ordering of the weight words.
    pub fn on_basis(n: usize, lambda: i64, basis: Vec<Word>, params: &Params<S>) -> Result<Self> {
        let label = WeightLabel::new(n, lambda)?;
        crate::config::check_n(n, params.l())?;
        let action = BlobAction::new(n, params)?;
        let gens = action.matrices(&basis)?;
        let index = basis.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        Ok(WeightModule {
            params: params.clone(),
            label,
            basis,
            index,
            gens,
        })
    }

    pub fn params(&self) -> &Params<S> {
        &self.params
    }

    pub fn label(&self) -> WeightLabel {
        self.label
    }

    pub fn n(&self) -> usize {
        self.label.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.iter().map(Word::to_string).collect()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// `U_0, …, U_{n−1}`.
    pub fn generators(&self) -> &[Matrix<S>] {
        &self.gens
    }

    pub fn generator(&self, i: usize) -> &Matrix<S> {
        &self.gens[i]
    }

    pub fn x(&self) -> Matrix<S> {
        self.gens[0].sub_scalar(&-self.params.lambda1().clone())
    }

    /// `g_i = U_i + q` as a matrix (acts by `T_{i+1}`).
    pub fn g(&self, i: usize) -> Matrix<S> {
        self.gens[i].sub_scalar(&-self.params.q().clone())
    }

    /// `[X, g_1, …, g_{n−1}]`.
    pub fn hecke_generators(&self) -> Vec<Matrix<S>> {
        let mut out = vec![self.x()];
        out.extend((1..self.n()).map(|i| self.g(i)));
        out
    }

    /// `X_1, …, X_n` with `X_k = g_{k−1} X_{k−1} g_{k−1}`.
    pub fn xk_matrices(&self) -> Vec<Matrix<S>> {
        let mut out = vec![self.x()];
        for k in 2..=self.n() {
            let g = self.g(k - 1);
            let prev = out.last().expect("nonempty");
            out.push(g.mul(prev).mul(&g));
        }
        out
    }

    pub fn coords(&self, v: &Vect<S>) -> Result<Vec<S>> {
        v.dense(&self.basis)
    }

    pub fn vector(&self, coords: &[S]) -> Vect<S> {
        Vect::from_dense(self.n(), &self.basis, coords)
    }

    /// Blob and Hecke relations as matrix identities.
    pub fn verify_relations(&self) -> RelationReport {
        let labels = self.labels();
        let mut rep = RelationReport::new(self.n(), &self.params);
        rep.checks = check_on_matrices(&self.gens, &blob_relations(self.n(), &self.params), &labels);
        rep.checks.extend(check_on_matrices(
            &self.hecke_generators(),
            &ariki_koike_relations(self.n(), &self.params),
            &labels,
        ));
        rep
    }
}

/// `e = −U_{n−1}/[2]` on `V^{⊗n}`.
pub fn idempotent_e<S: Scalar>(n: usize, params: &Params<S>) -> Result<LinOp<S>> {
    if n < 2 {
        return Err(BlobError::Precondition("e needs n ≥ 2".into()));
    }
    let c = -params.gauss(2).try_inv()?;
    let u = BlobAction::new(n, params)?.generator(n - 1)?.clone();
    Ok(u.scale(c))
}

/// `eM` as a `b_{n−2}`-module.
#[derive(Clone, Debug)]
pub struct Localized<S> {
    /// Spanning vectors of `eM`, as coordinates in the basis of `M`.
    pub basis: Vec<Vec<S>>,
    /// `U_0, …, U_{n−3}` on `eM` in that basis.
    pub gens: Vec<Matrix<S>>,
}

impl<S> Localized<S> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Matrix of `m` restricted to the invariant span of the independent
/// columns `basis`.
pub(crate) fn restrict_to<S: Scalar>(m: &Matrix<S>, basis: &[Vec<S>]) -> Result<Matrix<S>> {
    if basis.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    let b = Matrix::from_columns(m.rows(), basis);
    let images = m.mul(&b);
    b.solve(&images).ok_or(BlobError::Precondition(
        "subspace is not invariant under the operator".into(),
    ))
}

pub fn localize<S: Scalar>(m: &WeightModule<S>) -> Result<Localized<S>> {
    let n = m.n();
    if n < 3 {
        return Err(BlobError::Precondition("localization needs n ≥ 3".into()));
    }
    let e = idempotent_e(n, m.params())?.matrix(m.basis())?;
    let basis = e.column_space();
    let gens = (0..n - 2)
        .map(|i| restrict_to(m.generator(i), &basis))
        .collect::<Result<_>>()?;
    Ok(Localized { basis, gens })
}

/// `w_1 \underline{12} w_2 = q^{-1} w_1 12 w_2 − w_1 21 w_2`.
pub fn underline<S: Scalar>(prefix: Word, suffix: Word, params: &Params<S>) -> Vect<S> {
    let a = prefix.concat(&"12".parse().expect("word")).concat(&suffix);
    let b = prefix.concat(&"21".parse().expect("word")).concat(&suffix);
    Vect::from_terms(a.len(), [(a, params.q_inv().clone()), (b, -S::one())])
}

/// Outcome of comparing `M_{n−2}(λ)` with `eM_n(λ)` through
/// `w ↦ w\underline{12}`.
#[derive(Clone, Debug)]
pub struct UnderlineReport<S> {
    /// Columns are the images of the basis of `M_{n−2}(λ)`.
    pub matrix: Matrix<S>,
    pub injective: bool,
    pub onto_e_m: bool,
    /// Generators `U_i`, `i ≤ n−3`, that fail to intertwine.
    pub non_intertwining: Vec<usize>,
    pub e_dim: usize,
}

impl<S> UnderlineReport<S> {
    pub fn passed(&self) -> bool {
        self.injective && self.onto_e_m && self.non_intertwining.is_empty()
    }
}

pub fn underline_map<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<UnderlineReport<S>> {
    let label = WeightLabel::new(n, lambda)?;
    label.require_interior()?;
    if n < 3 {
        return Err(BlobError::Precondition("underline map needs n ≥ 3".into()));
    }
    let big = WeightModule::new(n, lambda, params)?;
    let small = WeightModule::new(n - 2, lambda, params)?;
    let cols = small
        .basis()
        .iter()
        .map(|w| big.coords(&underline(*w, Word::empty(), params)))
        .collect::<Result<Vec<_>>>()?;
    let f = Matrix::from_columns(big.dim(), &cols);
    let injective = f.rank() == small.dim();
    let e = idempotent_e(n, params)?.matrix(big.basis())?;
    let image = Subspace::spanned_by(big.dim(), cols.iter().cloned());
    let e_space = Subspace::spanned_by(big.dim(), e.columns());
    let non_intertwining = (0..n - 2)
        .filter(|&i| big.generator(i).mul(&f) != f.mul(small.generator(i)))
        .collect();
    Ok(UnderlineReport {
        matrix: f,
        injective,
        onto_e_m: image.same_as(&e_space),
        non_intertwining,
        e_dim: e_space.dim(),
    })
}

/// Reduce a combination of words in `M/N_2` to a multiple of
/// `2^{n_2} 1^{n_1}` by rewriting the leftmost `12` as `q·21`.
pub fn straighten<S: Scalar>(v: &Vect<S>, params: &Params<S>) -> S {
    let mut acc = S::zero();
    for (w, c) in v.terms() {
        let mut w = *w;
        let mut k = 0i64;
        while let Some(p) = (0..w.len().saturating_sub(1)).find(|&p| w.letter(p) == 1 && w.letter(p + 1) == 2) {
            w = w.swapped(p);
            k += 1;
        }
        acc = acc + c.clone() * &params.q_pow(k);
    }
    acc
}

/// `I_1 = {(X − λ_1) \underline{12} x}`.
fn i1_vectors<S: Scalar>(m: &WeightModule<S>) -> Result<Vec<Vec<S>>> {
    let n = m.n();
    let p = m.params();
    let u0 = m.generator(0);
    Word::with_ones(n - 2, m.label().n1() - 1)
        .into_iter()
        .map(|x| Ok(u0.mul_vec(&m.coords(&underline(Word::empty(), x, p))?)))
        .collect()
}

/// `I_2 = {v_1 \underline{12} v_2}`, every underline position.
fn i2_vectors<S: Scalar>(m: &WeightModule<S>) -> Result<Vec<Vec<S>>> {
    let n = m.n();
    let p = m.params();
    let mut out = Vec::new();
    for w in Word::with_ones(n - 2, m.label().n1() - 1) {
        for k in 0..=n - 2 {
            out.push(m.coords(&underline(w.slice(0, k), w.slice(k, n - 2), p))?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurjectivityData {
    pub dim: usize,
    /// Rank of `I_1 ∪ I_2`.
    pub rank: usize,
    pub codim: usize,
    /// Dimension of the submodule generated by `eM`.
    pub closure_dim: usize,
    pub surjective: bool,
    pub closure_surjective: bool,
    /// The span of `I_1 ∪ I_2` equals the submodule generated by `eM`.
    pub closure_matches_span: bool,
}

pub fn adjointness_surjective<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<SurjectivityData> {
    let m = WeightModule::new(n, lambda, params)?;
    surjectivity_on(&m)
}

fn surjectivity_on<S: Scalar>(m: &WeightModule<S>) -> Result<SurjectivityData> {
    m.label().require_interior()?;
    let n = m.n();
    if n < 3 {
        return Err(BlobError::Precondition("adjointness needs n ≥ 3".into()));
    }
    let d = m.dim();
    let mut span = Subspace::spanned_by(d, i2_vectors(m)?);
    for v in i1_vectors(m)? {
        span.insert(v);
    }
    let e = idempotent_e(n, m.params())?.matrix(m.basis())?;
    let gens: Vec<&Matrix<S>> = m.generators().iter().collect();
    let closure = Subspace::spanned_by(d, e.columns()).closure_under(&gens);
    Ok(SurjectivityData {
        dim: d,
        rank: span.dim(),
        codim: d - span.dim(),
        closure_dim: closure.dim(),
        surjective: span.dim() == d,
        closure_surjective: closure.dim() == d,
        closure_matches_span: closure.same_as(&span),
    })
}

/// The two readings of `X` on `Q = M/N_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientScalars<S> {
    /// Via `v = 1^{n_1} 2^{n_2}`.
    pub scalar_v: S,
    /// Via `w = 2^{n_2} 1^{n_1}`.
    pub scalar_w: S,
    /// `λ_1 q^{−2n_2}`.
    pub expected_v: S,
    /// `λ_2`.
    pub expected_w: S,
}

impl<S: Scalar> QuotientScalars<S> {
    pub fn matches_closed_forms(&self) -> bool {
        self.scalar_v == self.expected_v && self.scalar_w == self.expected_w
    }

    pub fn coincide(&self) -> bool {
        self.scalar_v == self.scalar_w
    }
}

pub fn quotient_q_scalars<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<QuotientScalars<S>> {
    let label = WeightLabel::new(n, lambda)?;
    label.require_interior()?;
    let (n1, n2) = (label.n1(), label.n2());
    let x = crate::tensor::op_x(n, params);
    let v = Word::constant(1, n1).concat(&Word::constant(2, n2));
    let w = Word::constant(2, n2).concat(&Word::constant(1, n1));
    let read = |u: Word| -> Result<S> {
        let base = straighten(&Vect::basis(u), params);
        Ok(straighten(&x.apply_word(u), params).try_div(&base)?)
    };
    Ok(QuotientScalars {
        scalar_v: read(v)?,
        scalar_w: read(w)?,
        expected_v: params.lambda1().clone() * &params.q_pow(-2 * n2 as i64),
        expected_w: params.lambda2().clone(),
    })
}

/// `−λ_2 q^{2n_2+n_1−2} + λ_1 q^{n_1−2}`.
pub fn special_element_scalar<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<S> {
    let label = WeightLabel::new(n, lambda)?;
    label.require_interior()?;
    let (n1, n2) = (label.n1() as i64, label.n2() as i64);
    Ok(-params.lambda2().clone() * &params.q_pow(2 * n2 + n1 - 2)
        + params.lambda1().clone() * &params.q_pow(n1 - 2))
}

/// `\underline{1} u \underline{2} = −λ_2 q^{n_2−1} 1u2 + λ_1 q^{n_1−2} 2u1`.
pub fn decorated<S: Scalar>(u: Word, n1: usize, n2: usize, params: &Params<S>) -> Vect<S> {
    let one = Word::constant(1, 1);
    let two = Word::constant(2, 1);
    let a = one.concat(&u).concat(&two);
    let b = two.concat(&u).concat(&one);
    Vect::from_terms(
        a.len(),
        [
            (a, -params.lambda2().clone() * &params.q_pow(n2 as i64 - 1)),
            (b, params.lambda1().clone() * &params.q_pow(n1 as i64 - 2)),
        ],
    )
}

/// The canonical family `2^a 1^b \underline{12} w_2` with `2^a 1^b w_2` of weight
/// `λ` in length `n − 2`.
pub fn canonical_tl_family<S: Scalar>(n: usize, n1: usize, params: &Params<S>) -> Vec<Vect<S>> {
    let mut out = Vec::new();
    for w in Word::with_ones(n - 2, n1 - 1) {
        for k in 0..=n - 2 {
            let head = w.slice(0, k);
            let has_12 = (0..k.saturating_sub(1)).any(|p| head.letter(p) == 1 && head.letter(p + 1) == 2);
            if !has_12 {
                out.push(underline(head, w.slice(k, n - 2), params));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivityData<S> {
    pub family_size: usize,
    pub rank: usize,
    pub injective: bool,
    /// The decorated element reduced modulo the TL span, as a multiple of
    /// the class of `2^{n_2} 1^{n_1}`.
    pub decorated_residue: S,
    /// The decorated element equals `θϖ(\underline{12} u)`.
    pub decorated_is_theta_varpi: bool,
}

pub fn adjointness_injective<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<InjectivityData<S>> {
    let m = WeightModule::new(n, lambda, params)?;
    injectivity_on(&m)
}

fn injectivity_on<S: Scalar>(m: &WeightModule<S>) -> Result<InjectivityData<S>> {
    let label = m.label();
    label.require_interior()?;
    let (n, n1, n2) = (label.n, label.n1(), label.n2());
    if n < 3 {
        return Err(BlobError::Precondition("adjointness needs n ≥ 3".into()));
    }
    let p = m.params();
    let u = Word::constant(2, n2 - 1).concat(&Word::constant(1, n1 - 1));
    let dec = decorated(u, n1, n2, p);
    let via_op = op_theta_varpi(n, p).apply(&underline(Word::empty(), u, p));
    let mut family = canonical_tl_family(n, n1, p);
    family.push(dec.clone());
    let cols = family.iter().map(|v| m.coords(v)).collect::<Result<Vec<_>>>()?;
    let rank = Subspace::spanned_by(m.dim(), cols).dim();
    Ok(InjectivityData {
        family_size: family.len(),
        rank,
        injective: rank == family.len(),
        decorated_residue: straighten(&dec, p),
        decorated_is_theta_varpi: via_op == dec,
    })
}

/// `Triv_1` and `Triv_2` as identities in `M_n(λ)`, over all index choices.
pub fn verify_trivial_relations<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<RelationReport> {
    let label = WeightLabel::new(n, lambda)?;
    let (n1, n2) = (label.n1(), label.n2());
    let mut rep = RelationReport::new(n, params);
    let qi = params.q_inv().clone();
    let w12: Word = "12".parse()?;
    let w21: Word = "21".parse()?;
    let mut fail1 = None;
    let room = n >= 4 && n1 >= 2 && n2 >= 2;
    if room {
        'outer: for w in Word::with_ones(n - 4, n1 - 2) {
            for i in 0..=n - 4 {
                for j in i..=n - 4 {
                    let (w1, w2, w3) = (w.slice(0, i), w.slice(i, j), w.slice(j, n - 4));
                    let lhs = underline(w1.concat(&w12).concat(&w2), w3, params)
                        .scaled(&qi)
                        .sub(&underline(w1.concat(&w21).concat(&w2), w3, params));
                    let rhs = underline(w1, w2.concat(&w12).concat(&w3), params)
                        .scaled(&qi)
                        .sub(&underline(w1, w2.concat(&w21).concat(&w3), params));
                    if lhs != rhs {
                        fail1 = Some(w1.concat(&w2).concat(&w3));
                        break 'outer;
                    }
                }
            }
        }
    }
    rep.push("Triv1", fail1);
    let mut fail2 = None;
    if room {
        let one = Word::constant(1, 1);
        let two = Word::constant(2, 1);
        let c1 = -params.lambda2().clone() * &params.q_pow(n2 as i64 - 1);
        let c2 = params.lambda1().clone() * &params.q_pow(n1 as i64 - 2);
        'outer2: for w in Word::with_ones(n - 4, n1 - 2) {
            for i in 0..=n - 4 {
                let (w1, w2) = (w.slice(0, i), w.slice(i, n - 4));
                let lhs = decorated(w1.concat(&w12).concat(&w2), n1, n2, params)
                    .scaled(&qi)
                    .sub(&decorated(w1.concat(&w21).concat(&w2), n1, n2, params));
                let mut rhs = underline(one.concat(&w1), w2.concat(&two), params).scaled(&c1);
                rhs.add_scaled(&underline(two.concat(&w1), w2.concat(&one), params), &c2);
                if lhs != rhs {
                    fail2 = Some(w);
                    break 'outer2;
                }
            }
        }
    }
    rep.push("Triv2", fail2);
    Ok(rep)
}

/// One point of the adjointness grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointnessVerdict {
    pub n: usize,
    pub l: u32,
    pub m: i64,
    pub lambda: i64,
    pub n1: usize,
    pub n2: usize,
    pub dim: usize,
    pub rank_phi_image: usize,
    pub codim: usize,
    pub surjective: bool,
    pub closure_surjective: bool,
    pub closure_matches_span: bool,
    pub injective: bool,
    pub special_scalar: String,
    pub special_nonzero: bool,
    pub decorated_residue_matches: bool,
    pub scalar_v: String,
    pub scalar_w: String,
    pub scalars_match_closed_forms: bool,
    /// `n_2 ≢ m (mod l)`; plain inequality when `l = 0`.
    pub predicted_iso: bool,
    pub agree: bool,
}

pub fn adjointness_verdict<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<AdjointnessVerdict> {
    let m = WeightModule::new(n, lambda, params)?;
    let label = m.label();
    let surj = surjectivity_on(&m)?;
    let inj = injectivity_on(&m)?;
    let special = special_element_scalar(n, lambda, params)?;
    let qs = quotient_q_scalars(n, lambda, params)?;
    let predicted = !params.congruent(label.n2() as i64, params.m());
    let special_nonzero = !special.is_zero();
    let agree = [surj.surjective, surj.closure_surjective, inj.injective, special_nonzero]
        .iter()
        .all(|&b| b == predicted);
    Ok(AdjointnessVerdict {
        n,
        l: params.l(),
        m: params.m(),
        lambda,
        n1: label.n1(),
        n2: label.n2(),
        dim: m.dim(),
        rank_phi_image: surj.rank,
        codim: surj.codim,
        surjective: surj.surjective,
        closure_surjective: surj.closure_surjective,
        closure_matches_span: surj.closure_matches_span,
        injective: inj.injective,
        special_scalar: special.to_string(),
        special_nonzero,
        decorated_residue_matches: inj.decorated_residue == special && inj.decorated_is_theta_varpi,
        scalar_v: qs.scalar_v.to_string(),
        scalar_w: qs.scalar_w.to_string(),
        scalars_match_closed_forms: qs.matches_closed_forms(),
        predicted_iso: predicted,
        agree,
    })
}
