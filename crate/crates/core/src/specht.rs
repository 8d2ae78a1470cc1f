//! Standard bitableaux for two-line and two-column bipartitions, the Specht
//! action rules, the word map `φ`, contragredient duals and the duality
//! checks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BlobError, Result};
use crate::linalg::{Matrix, Subspace};
use crate::relations::{ariki_koike_relations, blob_relations, check_on_matrices};
use crate::scalar::{Params, Scalar};
use crate::tensor::{op_xk, RelationCheck, RelationReport, Vect, Word};
use crate::weightmod::{
    canonical_tl_family, idempotent_e, underline, WeightLabel, WeightModule,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    /// `((n_1), (n_2))`.
    Row,
    /// `((1^{n_2}), (1^{n_1}))`.
    Col,
}

/// A two-line or two-column bipartition, given by its component sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Shape {
    pub kind: ShapeKind,
    /// Size of the first component.
    pub first: usize,
    /// Size of the second component.
    pub second: usize,
}

impl Shape {
    /// `((n_1), (n_2))`.
    pub fn row(n1: usize, n2: usize) -> Self {
        Shape {
            kind: ShapeKind::Row,
            first: n1,
            second: n2,
        }
    }

    /// `((1^{n_2}), (1^{n_1}))`.
    pub fn col(n2: usize, n1: usize) -> Self {
        Shape {
            kind: ShapeKind::Col,
            first: n2,
            second: n1,
        }
    }

    pub fn n(&self) -> usize {
        self.first + self.second
    }
}

/// A filling `(t^1, t^2)` of a [`Shape`] by `1, …, n`. Entries are listed
/// left to right for rows and top to bottom for columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bitableau {
    pub t1: Vec<usize>,
    pub t2: Vec<usize>,
    pub shape: ShapeKind,
}

impl Bitableau {
    pub fn n(&self) -> usize {
        self.t1.len() + self.t2.len()
    }

    /// Both components increase and together they partition `1..=n`.
    pub fn is_standard(&self) -> bool {
        let inc = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        let mut all: Vec<usize> = self.t1.iter().chain(&self.t2).copied().collect();
        all.sort_unstable();
        inc(&self.t1) && inc(&self.t2) && all == (1..=self.n()).collect::<Vec<_>>()
    }

    /// `1` if `i` sits in `t^1`, `2` if in `t^2`.
    pub fn component(&self, i: usize) -> u8 {
        if self.t1.contains(&i) {
            1
        } else {
            2
        }
    }

    /// Exchange the entries `i` and `i + 1`.
    pub fn sigma(&self, i: usize) -> Bitableau {
        let sw = |x: usize| {
            if x == i {
                i + 1
            } else if x == i + 1 {
                i
            } else {
                x
            }
        };
        Bitableau {
            t1: self.t1.iter().map(|&x| sw(x)).collect(),
            t2: self.t2.iter().map(|&x| sw(x)).collect(),
            shape: self.shape,
        }
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", j(&self.t1), j(&self.t2))
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// All standard bitableaux of `shape`, ordered by `t^1` lexicographically.
pub fn standard_bitableaux(shape: Shape) -> Result<Vec<Bitableau>> {
    let n = shape.n();
    if n == 0 {
        return Err(BlobError::UnsupportedShape("empty bipartition".into()));
    }
    Ok(subsets(n, shape.first)
        .into_iter()
        .map(|t1| {
            let t2 = (1..=n).filter(|x| !t1.contains(x)).collect();
            Bitableau {
                t1,
                t2,
                shape: shape.kind,
            }
        })
        .collect())
}

/// `g_i [t]` by the three-case rule, as `(tableau, coefficient)` pairs.
pub fn gi_action<S: Scalar>(i: usize, t: &Bitableau, params: &Params<S>) -> Result<Vec<(Bitableau, S)>> {
    let n = t.n();
    if i == 0 || i >= n {
        return Err(BlobError::IndexOutOfRange {
            what: "g",
            index: i,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    Ok(match (t.component(i), t.component(i + 1)) {
        (1, 2) => vec![(t.sigma(i), S::one())],
        (2, 1) => vec![(t.sigma(i), S::one()), (t.clone(), params.q_minus_q_inv())],
        _ => vec![(t.clone(), params.q().clone())],
    })
}

/// `t^{μ′τ′}`: `1, …, n_2` down the first column, then the second.
pub fn special_col_tableau(n1: usize, n2: usize) -> Bitableau {
    Bitableau {
        t1: (1..=n2).collect(),
        t2: (n2 + 1..=n1 + n2).collect(),
        shape: ShapeKind::Col,
    }
}

/// `φ[t] = i_1 ⋯ i_n` with `i_j = 1` iff `j ∈ t^2`.
pub fn phi(t: &Bitableau) -> Word {
    let letters: Vec<u8> = (1..=t.n()).map(|j| if t.t2.contains(&j) { 1 } else { 2 }).collect();
    Word::from_letters(&letters).expect("valid letters")
}

/// `φ` on every standard two-column bitableau of shape `((1^{n_2}), (1^{n_1}))`.
pub fn phi_map(n1: usize, n2: usize) -> Result<Vec<(Bitableau, Word)>> {
    Ok(standard_bitableaux(Shape::col(n2, n1))?
        .into_iter()
        .map(|t| {
            let w = phi(&t);
            (t, w)
        })
        .collect())
}

/// A matrix representation of `H(n,2)` given by `X` and `g_1, …, g_{n−1}`.
#[derive(Clone, Debug)]
pub struct MatrixRep<S> {
    pub labels: Vec<String>,
    pub x: Matrix<S>,
    /// `g[i − 1]` is `g_i`.
    pub g: Vec<Matrix<S>>,
}

impl<S: Scalar> MatrixRep<S> {
    pub fn n(&self) -> usize {
        self.g.len() + 1
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn from_weight_module(m: &WeightModule<S>) -> Self {
        MatrixRep {
            labels: m.labels(),
            x: m.x(),
            g: (1..m.n()).map(|i| m.g(i)).collect(),
        }
    }

    /// `[X, g_1, …, g_{n−1}]`.
    pub fn hecke_generators(&self) -> Vec<Matrix<S>> {
        let mut out = vec![self.x.clone()];
        out.extend(self.g.iter().cloned());
        out
    }

    /// `U_0 = X − λ_1`, `U_i = g_i − q`.
    pub fn blob_generators(&self, params: &Params<S>) -> Vec<Matrix<S>> {
        let mut out = vec![self.x.sub_scalar(params.lambda1())];
        out.extend(self.g.iter().map(|g| g.sub_scalar(params.q())));
        out
    }

    /// `X_1, …, X_n`.
    pub fn xk(&self) -> Vec<Matrix<S>> {
        let mut out = vec![self.x.clone()];
        for g in &self.g {
            let prev = out.last().expect("nonempty");
            out.push(g.mul(prev).mul(g));
        }
        out
    }

    /// Hecke relations, blob relations and `(X_1 X_2 − λ_1λ_2)(g_1 − q) = 0`.
    pub fn verify_relations(&self, params: &Params<S>) -> RelationReport {
        let n = self.n();
        let mut rep = RelationReport::new(n, params);
        rep.checks = check_on_matrices(&self.hecke_generators(), &ariki_koike_relations(n, params), &self.labels);
        rep.checks.extend(check_on_matrices(
            &self.blob_generators(params),
            &blob_relations(n, params),
            &self.labels,
        ));
        if n >= 2 {
            let xs = self.xk();
            let ll = params.lambda1().clone() * params.lambda2();
            let z = xs[0].mul(&xs[1]).sub_scalar(&ll).mul(&self.g[0].sub_scalar(params.q()));
            let bad = (0..z.cols()).find(|&c| z.column(c).iter().any(|e| !e.is_zero()));
            rep.checks.push(RelationCheck::labeled(
                "(X1 X2 - lambda1 lambda2)(g1 - q) = 0",
                bad.map(|c| self.labels[c].clone()),
            ));
        }
        rep
    }
}

/// Same labels, every generator transposed.
pub fn dualize<S: Scalar>(rep: &MatrixRep<S>) -> MatrixRep<S> {
    MatrixRep {
        labels: rep.labels.clone(),
        x: rep.x.transpose(),
        g: rep.g.iter().map(Matrix::transpose).collect(),
    }
}

/// `g_i` on the standard basis of `shape` from the action rules.
pub fn specht_g_matrices<S: Scalar>(shape: Shape, params: &Params<S>) -> Result<Vec<Matrix<S>>> {
    let basis = standard_bitableaux(shape)?;
    let d = basis.len();
    (1..shape.n())
        .map(|i| {
            let mut m = Matrix::<S>::zeros(d, d);
            for (c, t) in basis.iter().enumerate() {
                for (s, k) in gi_action(i, t, params)? {
                    let r = basis
                        .iter()
                        .position(|b| *b == s)
                        .ok_or_else(|| BlobError::UnsupportedShape("g_i left the standard basis".into()))?;
                    m[(r, c)] = m[(r, c)].clone() + &k;
                }
            }
            Ok(m)
        })
        .collect()
}

/// Permutation matrix of `φ`: column `j` is `φ` of bitableau `j` in the
/// basis of `m`.
fn phi_matrix<S: Scalar>(basis: &[Bitableau], m: &WeightModule<S>) -> Result<Matrix<S>> {
    let cols = basis
        .iter()
        .map(|t| m.coords(&Vect::basis(phi(t))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(m.dim(), &cols))
}

/// `S′(1^{n_2}, 1^{n_1})` with `g_i` from the action rules and `X`
/// transported from `M_n(n_1 − n_2)` through `φ`.
pub fn build_s_prime<S: Scalar>(n1: usize, n2: usize, params: &Params<S>) -> Result<MatrixRep<S>> {
    let n = n1 + n2;
    let lambda = n1 as i64 - n2 as i64;
    let shape = Shape::col(n2, n1);
    let basis = standard_bitableaux(shape)?;
    let m = WeightModule::new(n, lambda, params)?;
    let p = phi_matrix(&basis, &m)?;
    let x = p
        .solve(&m.x().mul(&p))
        .ok_or_else(|| BlobError::Precondition("φ is not invertible".into()))?;
    Ok(MatrixRep {
        labels: basis.iter().map(Bitableau::to_string).collect(),
        x,
        g: specht_g_matrices(shape, params)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub n1: usize,
    pub n2: usize,
    pub l: u32,
    pub m: i64,
    pub phi_bijective: bool,
    /// Indices `i` with `φ g_i ≠ g_i φ`.
    pub non_intertwining: Vec<usize>,
    pub x_quadratic: bool,
    /// `X_i [t^{μ′τ′}]` against the closed forms, `i = 1..n`.
    pub tableau_eigen: Vec<bool>,
    pub relations: RelationReport,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.phi_bijective
            && self.non_intertwining.is_empty()
            && self.x_quadratic
            && self.tableau_eigen.iter().all(|&b| b)
            && self.relations.passed()
    }
}

/// `λ_2 q^{2(i−1)}` for `i ≤ n_2`, else `λ_1 q^{2(i−n_2−1)}`.
pub fn xi_eigenvalue<S: Scalar>(i: usize, n2: usize, params: &Params<S>) -> S {
    if i <= n2 {
        params.lambda2().clone() * &params.q_pow(2 * (i as i64 - 1))
    } else {
        params.lambda1().clone() * &params.q_pow(2 * (i as i64 - n2 as i64 - 1))
    }
}

pub fn duality_report<S: Scalar>(n1: usize, n2: usize, params: &Params<S>) -> Result<DualityReport> {
    let n = n1 + n2;
    let lambda = n1 as i64 - n2 as i64;
    let shape = Shape::col(n2, n1);
    let basis = standard_bitableaux(shape)?;
    let m = WeightModule::new(n, lambda, params)?;
    let p = phi_matrix(&basis, &m)?;
    let phi_bijective = p.rank() == m.dim() && basis.len() == m.dim();
    let sg = specht_g_matrices(shape, params)?;
    let non_intertwining = (1..n).filter(|&i| p.mul(&sg[i - 1]) != m.g(i).mul(&p)).collect();
    let rep = build_s_prime(n1, n2, params)?;
    let quad = rep
        .x
        .sub_scalar(params.lambda1())
        .mul(&rep.x.sub_scalar(params.lambda2()));
    let special = basis
        .iter()
        .position(|t| *t == special_col_tableau(n1, n2))
        .expect("special tableau is standard");
    let tableau_eigen = rep
        .xk()
        .iter()
        .enumerate()
        .map(|(k, xm)| {
            let mut e = vec![S::zero(); rep.dim()];
            e[special] = xi_eigenvalue(k + 1, n2, params);
            xm.column(special) == e
        })
        .collect();
    Ok(DualityReport {
        n1,
        n2,
        l: params.l(),
        m: params.m(),
        phi_bijective,
        non_intertwining,
        x_quadratic: quad.is_zero(),
        tableau_eigen,
        relations: rep.verify_relations(params),
    })
}

/// `X_i (2^{n_2} 1^{n_1})` against the closed forms, computed with the
/// tensor-space operators.
pub fn verify_xi_row_shape<S: Scalar>(n1: usize, n2: usize, params: &Params<S>) -> Result<RelationReport> {
    let n = n1 + n2;
    let w = Word::constant(2, n2).concat(&Word::constant(1, n1));
    let mut rep = RelationReport::new(n, params);
    for i in 1..=n {
        let got = op_xk(n, i, params)?.apply_word(w);
        let want = Vect::term(w, xi_eigenvalue(i, n2, params));
        rep.push(format!("X{i} on 2^{n2}1^{n1}"), (got != want).then_some(w));
    }
    Ok(rep)
}

/// Which residue condition the dual verdicts follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ResidueMatch {
    #[serde(rename = "n1 = m mod l")]
    Congruent,
    #[serde(rename = "n1 != m mod l")]
    NotCongruent,
}

/// Adjointness data for `M_n(λ)^⊛`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualVerdict {
    pub n: usize,
    pub l: u32,
    pub m: i64,
    pub lambda: i64,
    pub n1: usize,
    pub n2: usize,
    pub dim: usize,
    /// Dimension of the submodule generated by `eM^⊛`.
    pub closure_dim: usize,
    pub surjective: bool,
    /// Dimension of the largest submodule of `M` killed by `e`.
    pub killed_dim: usize,
    pub injective: bool,
    pub routes_agree: bool,
    /// `λ_2/λ_1 − (−q)^{−2n_1}`.
    pub obstruction: String,
    pub obstruction_zero: bool,
    pub n1_congruent_m: bool,
    pub n1_congruent_neg_m: bool,
    /// The special scalar with `(n_1, n_2, λ_1, λ_2)` swapped:
    /// `−λ_1 q^{2n_1+n_2−2} + λ_2 q^{n_2−2}`.
    pub swapped_special: String,
    /// `surjective` iff the swapped special scalar is nonzero.
    pub swap_symmetry: bool,
    pub matches: ResidueMatch,
    /// Multiplicities of `λ_1, λ_2` for `X^T` agree with those of `λ_2, λ_1`
    /// on `M_n(−λ)`.
    pub eigen_swap: bool,
}

pub fn dual_adjointness_check<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<DualVerdict> {
    let label = WeightLabel::new(n, lambda)?;
    if label.is_extremal() {
        return Err(BlobError::DegenerateWeight { n, lambda });
    }
    if n < 3 {
        return Err(BlobError::Precondition("adjointness needs n ≥ 3".into()));
    }
    let (n1, n2) = (label.n1(), label.n2());
    let m = WeightModule::new(n, lambda, params)?;
    let d = m.dim();
    let dual_gens: Vec<Matrix<S>> = m.generators().iter().map(Matrix::transpose).collect();
    let e = idempotent_e(n, params)?.matrix(m.basis())?;
    let et = e.transpose();

    // image of G F M^⊛ → M^⊛
    let refs: Vec<&Matrix<S>> = dual_gens.iter().collect();
    let closure = Subspace::spanned_by(d, et.columns()).closure_under(&refs);

    // annihilator route: largest submodule of M inside ker e
    let mut k = Subspace::spanned_by(d, e.kernel());
    loop {
        let ann = annihilator(&k, d);
        let mut blocks = vec![ann.clone()];
        blocks.extend(m.generators().iter().map(|u| ann.mul(u)));
        let next = Subspace::spanned_by(d, stack_rows(&blocks).kernel());
        if next.dim() == k.dim() {
            break;
        }
        k = next;
    }

    // canonical family, decorated element built with the dual action
    let x_t = m.x().transpose();
    let u = Word::constant(2, n2 - 1).concat(&Word::constant(1, n1 - 1));
    let mut dec = x_t.mul_vec(&m.coords(&underline(Word::empty(), u, params))?);
    for i in 1..n {
        dec = m.g(i).transpose().mul_vec(&dec);
    }
    let mut family = canonical_tl_family(n, n1, params)
        .iter()
        .map(|v| m.coords(v))
        .collect::<Result<Vec<_>>>()?;
    family.push(dec);
    let rank = Subspace::spanned_by(d, family.iter().cloned()).dim();
    let injective = rank == family.len();

    let surjective = closure.dim() == d;
    let swap = params.lambda2().try_div(params.lambda1())?;
    let minus_q = -params.q().clone();
    let obstruction = swap - &minus_q.powi(-2 * n1 as i64)?;
    let congruent = params.congruent(n1 as i64, params.m());
    let (a1, a2) = (n1 as i64, n2 as i64);
    let swapped_special = -params.lambda1().clone() * &params.q_pow(2 * a1 + a2 - 2)
        + params.lambda2().clone() * &params.q_pow(a2 - 2);
    let matches = if surjective == congruent {
        ResidueMatch::Congruent
    } else {
        ResidueMatch::NotCongruent
    };

    let mneg = WeightModule::new(n, -lambda, params)?;
    let mult = |x: &Matrix<S>, s: &S| x.sub_scalar(s).kernel().len();
    let eigen_swap = mult(&x_t, params.lambda1()) == mult(&mneg.x(), params.lambda2())
        && mult(&x_t, params.lambda2()) == mult(&mneg.x(), params.lambda1());

    Ok(DualVerdict {
        n,
        l: params.l(),
        m: params.m(),
        lambda,
        n1,
        n2,
        dim: d,
        closure_dim: closure.dim(),
        surjective,
        killed_dim: k.dim(),
        injective,
        routes_agree: (k.dim() == 0) == surjective && k.dim() + closure.dim() == d && injective == surjective,
        obstruction_zero: obstruction.is_zero(),
        obstruction: obstruction.to_string(),
        n1_congruent_m: congruent,
        n1_congruent_neg_m: params.congruent(n1 as i64, -params.m()),
        swap_symmetry: surjective != swapped_special.is_zero(),
        swapped_special: swapped_special.to_string(),
        matches,
        eigen_swap,
    })
}

/// Rows cutting out `k`.
fn annihilator<S: Scalar>(k: &Subspace<S>, d: usize) -> Matrix<S> {
    if k.dim() == 0 {
        return Matrix::identity(d);
    }
    let b = Matrix::from_rows(k.basis());
    let ann = b.kernel();
    if ann.is_empty() {
        return Matrix::zeros(1, d);
    }
    Matrix::from_rows(ann)
}

fn stack_rows<S: Scalar>(blocks: &[Matrix<S>]) -> Matrix<S> {
    let rows: Vec<Vec<S>> = blocks
        .iter()
        .flat_map(|b| (0..b.rows()).map(move |r| b.row(r).to_vec()))
        .collect();
    Matrix::from_rows(rows)
}
