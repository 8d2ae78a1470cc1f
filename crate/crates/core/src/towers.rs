//! Restriction to `b_{n−1}`, the central element `z`, splitting of the
//! restriction sequence and the small Grothendieck-group checks.

use serde::{Deserialize, Serialize};

use crate::error::{BlobError, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Params, Scalar};
use crate::tensor::{op_s, op_t_inv, op_x, xk_chain, LinOp, Word};
use crate::weightmod::{underline, WeightLabel, WeightModule};

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn block<S: Scalar>(m: &Matrix<S>, rows: &[usize], cols: &[usize]) -> Matrix<S> {
    Matrix::from_fn(rows.len(), cols.len(), |r, c| m[(rows[r], cols[c])].clone())
}

/// `T_n^{−1} S_n`, which carries `x11 ↦ x11` and `x12 ↦ x12` modulo words
/// ending in `1`.
pub fn bridge<S: Scalar>(n: usize, params: &Params<S>) -> Result<LinOp<S>> {
    Ok(op_t_inv(n, n, params)?.compose(&op_s(n, n, params)?))
}

/// `res M_n(λ)` and its sequence `0 → M_{n−1}(λ−1) → res M_n(λ) → M_{n−1}(λ+1) → 0`.
#[derive(Clone, Debug)]
pub struct RestrictionData<S> {
    pub n: usize,
    pub lambda: i64,
    /// `U_0, …, U_{n−2}` on `M_n(λ)`.
    pub gens: Vec<Matrix<S>>,
    /// Indices of basis words ending in `1`.
    pub sub: Vec<usize>,
    /// Indices of basis words ending in `2`.
    pub quotient: Vec<usize>,
    pub invariant: bool,
    pub sub_intertwines: bool,
    pub quotient_intertwines: bool,
}

impl<S> RestrictionData<S> {
    pub fn passed(&self) -> bool {
        self.invariant && self.sub_intertwines && self.quotient_intertwines
    }
}

pub fn restriction_sequence<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<RestrictionData<S>> {
    let label = WeightLabel::new(n, lambda)?;
    if label.is_extremal() || n < 2 {
        return Err(BlobError::DegenerateWeight { n, lambda });
    }
    let m = WeightModule::new(n, lambda, params)?;
    let (sub, quotient): (Vec<usize>, Vec<usize>) = (0..m.dim()).partition(|&i| m.basis()[i].last() == 1);
    let small_sub = WeightModule::new(n - 1, lambda - 1, params)?;
    let small_quo = WeightModule::new(n - 1, lambda + 1, params)?;
    // drop-last preserves the basis order on each block
    let dropped = |idx: &[usize]| idx.iter().map(|&i| m.basis()[i].drop_last()).collect::<Vec<Word>>();
    if dropped(&sub) != small_sub.basis() || dropped(&quotient) != small_quo.basis() {
        return Err(BlobError::Precondition("drop-last does not match the weight bases".into()));
    }
    let gens: Vec<Matrix<S>> = m.generators()[..n - 1].to_vec();
    let invariant = gens.iter().all(|g| block(g, &quotient, &sub).is_zero());
    let sub_intertwines = gens
        .iter()
        .enumerate()
        .all(|(i, g)| block(g, &sub, &sub) == *small_sub.generator(i));
    let quotient_intertwines = gens
        .iter()
        .enumerate()
        .all(|(i, g)| block(g, &quotient, &quotient) == *small_quo.generator(i));
    Ok(RestrictionData {
        n,
        lambda,
        gens,
        sub,
        quotient,
        invariant,
        sub_intertwines,
        quotient_intertwines,
    })
}

/// `z = X_1 ⋯ X_k` on `V^{⊗n}`.
pub fn central_z<S: Scalar>(n: usize, k: usize, params: &Params<S>) -> Result<LinOp<S>> {
    if k == 0 || k > n {
        return Err(BlobError::IndexOutOfRange {
            what: "k",
            index: k,
            lo: 1,
            hi: n,
        });
    }
    if k == 1 {
        return Ok(op_x(n, params));
    }
    let xs = xk_chain(n, k, params);
    Ok(LinOp::product(n, &xs).memoized())
}

/// `λ_1^{n_1} λ_2^{n_2} q^{n_1(n_1−1) + n_2(n_2−1)}`.
pub fn z_scalar<S: Scalar>(n1: usize, n2: usize, params: &Params<S>) -> S {
    let (a, b) = (n1 as i64, n2 as i64);
    params.lambda1().powi(a).expect("nonzero") * &params.lambda2().powi(b).expect("nonzero")
        * &params.q_pow(a * (a - 1) + b * (b - 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralScalarReport {
    pub n: usize,
    pub lambda: i64,
    pub l: u32,
    pub m: i64,
    /// `None` when `z` is not a scalar on the module.
    pub computed: Option<String>,
    pub formula: String,
    pub central: bool,
    pub matches: bool,
}

impl CentralScalarReport {
    pub fn passed(&self) -> bool {
        self.central && self.matches
    }
}

pub fn central_scalar_report<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<CentralScalarReport> {
    let label = WeightLabel::new(n, lambda)?;
    let m = WeightModule::new(n, lambda, params)?;
    let z = central_z(n, n, params)?.matrix(m.basis())?;
    let central = m.generators().iter().all(|u| u.mul(&z) == z.mul(u));
    let d = m.dim();
    let c = z[(0, 0)].clone();
    let computed = (z == Matrix::identity(d).scale(&c)).then_some(c);
    let formula = z_scalar(label.n1(), label.n2(), params);
    Ok(CentralScalarReport {
        n,
        lambda,
        l: params.l(),
        m: params.m(),
        matches: computed.as_ref() == Some(&formula),
        computed: computed.map(|c| c.to_string()),
        formula: formula.to_string(),
        central,
    })
}

/// `true`, `false` or `"undetermined"` in JSON.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Split {
    Known(bool),
    Undetermined,
}

impl Serialize for Split {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        match self {
            Split::Known(b) => s.serialize_bool(*b),
            Split::Undetermined => s.serialize_str("undetermined"),
        }
    }
}

impl<'de> Deserialize<'de> for Split {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            B(bool),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::B(b) => Ok(Split::Known(b)),
            Raw::S(s) if s == "undetermined" => Ok(Split::Undetermined),
            Raw::S(s) => Err(serde::de::Error::custom(format!("unexpected split value {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingVerdict {
    pub n: usize,
    pub lambda: i64,
    pub l: u32,
    pub m: i64,
    /// The two candidate scalars of `z_{n−1}` coincide.
    pub wall: bool,
    /// Splitting as decided by the eigenspace criterion; on walls, by the
    /// complement search when it ran.
    pub split: Split,
    /// Dimensions of the eigenspaces of `z_{n−1}` for the sub and quotient
    /// scalars (equal scalars give the same number twice).
    pub eigdims: (usize, usize),
    /// Expected `(binom(n−1, a−1), binom(n−1, a))`.
    pub expected_dims: (usize, usize),
    /// Both eigenspaces are invariant under `U_0, …, U_{n−2}`.
    pub invariant: bool,
    /// Outcome of the direct search for an invariant complement; beyond the
    /// eigenvalue criterion.
    pub complement_search: Option<bool>,
    /// `λ ≡ −m mod l`.
    pub lambda_congruent_neg_m: bool,
}

impl SplittingVerdict {
    pub fn passed(&self) -> bool {
        self.wall == self.lambda_congruent_neg_m
            && (self.wall || (self.eigdims == self.expected_dims && self.invariant && self.split == Split::Known(true)))
    }
}

/// Largest `n` for which the complement search runs on walls.
pub const COMPLEMENT_SEARCH_MAX_N: usize = 6;

pub fn splitting_check<S: Scalar>(n: usize, lambda: i64, params: &Params<S>) -> Result<SplittingVerdict> {
    if n < 3 {
        return Err(BlobError::Precondition("splitting needs n ≥ 3".into()));
    }
    let res = restriction_sequence(n, lambda, params)?;
    let label = WeightLabel::new(n, lambda)?;
    let (n1, n2) = (label.n1(), label.n2());
    let m = WeightModule::new(n, lambda, params)?;
    let z = central_z(n, n - 1, params)?.matrix(m.basis())?;
    let s_sub = z_scalar(n1 - 1, n2, params);
    let s_quo = z_scalar(n1, n2 - 1, params);
    let wall = s_sub == s_quo;
    let k_sub = Subspace::spanned_by(m.dim(), z.sub_scalar(&s_sub).kernel());
    let k_quo = Subspace::spanned_by(m.dim(), z.sub_scalar(&s_quo).kernel());
    let eigdims = (k_sub.dim(), k_quo.dim());
    let expected_dims = (binom(n - 1, n1 - 1), binom(n - 1, n1));
    let invariant = res
        .gens
        .iter()
        .all(|g| k_sub.is_invariant_under(g) && k_quo.is_invariant_under(g));
    let complement_search = (wall && n <= COMPLEMENT_SEARCH_MAX_N).then(|| has_invariant_complement(&res));
    let split = if !wall {
        Split::Known(invariant && eigdims == expected_dims)
    } else {
        match complement_search {
            Some(b) => Split::Known(b),
            None => Split::Undetermined,
        }
    };
    Ok(SplittingVerdict {
        n,
        lambda,
        l: params.l(),
        m: params.m(),
        wall,
        split,
        eigdims,
        expected_dims,
        invariant,
        complement_search,
        lambda_congruent_neg_m: params.congruent(lambda, -params.m()),
    })
}

/// Solve for `Y` with `A_i Y − Y B_i = C_i` for all generators, where the
/// generator matrices have block form `[[A_i, C_i], [0, B_i]]`; a solution
/// gives the invariant complement spanned by the columns of `[Y; −I]`.
fn has_invariant_complement<S: Scalar>(res: &RestrictionData<S>) -> bool {
    let (p, r) = (res.sub.len(), res.quotient.len());
    let unknowns = p * r;
    let mut rows: Vec<Vec<S>> = Vec::new();
    for g in &res.gens {
        let a = block(g, &res.sub, &res.sub);
        let b = block(g, &res.quotient, &res.quotient);
        let c = block(g, &res.sub, &res.quotient);
        // equation (i, j): Σ_k a_ik y_kj − Σ_k y_ik b_kj = c_ij, y_kj at k*r + j
        for i in 0..p {
            for j in 0..r {
                let mut row = vec![S::zero(); unknowns + 1];
                for k in 0..p {
                    row[k * r + j] = row[k * r + j].clone() + &a[(i, k)];
                }
                for k in 0..r {
                    row[i * r + k] = row[i * r + k].clone() - &b[(k, j)];
                }
                row[unknowns] = c[(i, j)].clone();
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return true;
    }
    let aug = Matrix::from_rows(rows);
    let (_, pivots) = aug.rref();
    !pivots.contains(&unknowns)
}

/// Entries of one row of the multiplicity triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleRow {
    pub n: usize,
    /// `(λ, multiplicity of λ_2 for X on M_n(λ))`, ascending in `λ`.
    pub entries: Vec<(i64, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityTable {
    pub rows: Vec<TriangleRow>,
    /// Number of `2`-initial words equals the eigenvalue multiplicity, and
    /// `X` is upper triangular with the block diagonal `λ_2, …, λ_1`.
    pub triangular: bool,
    pub pascal: bool,
    pub binomial: bool,
}

impl MultiplicityTable {
    pub fn entry(&self, n: usize, lambda: i64) -> Option<usize> {
        self.rows
            .iter()
            .find(|r| r.n == n)?
            .entries
            .iter()
            .find(|(l, _)| *l == lambda)
            .map(|(_, c)| *c)
    }

    /// One line per `n`: `n` followed by the entries for `λ = −n, −n+2, …, n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,multiplicities\n");
        for row in &self.rows {
            let cells: Vec<String> = row.entries.iter().map(|(_, c)| c.to_string()).collect();
            out.push_str(&format!("{},{}\n", row.n, cells.join(",")));
        }
        out
    }
}

fn x_triangular<S: Scalar>(m: &WeightModule<S>) -> bool {
    let x = m.x();
    let twos = m.basis().iter().filter(|w| w.first() == 2).count();
    let p = m.params();
    (0..m.dim()).all(|c| {
        (c + 1..m.dim()).all(|r| x[(r, c)].is_zero())
            && x[(c, c)] == if c < twos { p.lambda2().clone() } else { p.lambda1().clone() }
    })
}

pub fn x_multiplicity_table<S: Scalar>(n_max: usize, params: &Params<S>) -> Result<MultiplicityTable> {
    if n_max == 0 {
        return Err(BlobError::Precondition("n_max must be at least 1".into()));
    }
    let mut rows = Vec::new();
    let mut triangular = true;
    let mut binomial = true;
    for n in 1..=n_max {
        let mut entries = Vec::new();
        for label in WeightLabel::all(n) {
            let m = WeightModule::new(n, label.lambda, params)?;
            let twos = m.basis().iter().filter(|w| w.first() == 2).count();
            let mult = m.x().sub_scalar(params.lambda2()).kernel().len();
            triangular &= mult == twos && x_triangular(&m);
            binomial &= twos == binom(n - 1, label.n1());
            entries.push((label.lambda, twos));
        }
        rows.push(TriangleRow { n, entries });
    }
    let mut table = MultiplicityTable {
        rows,
        triangular,
        pascal: true,
        binomial,
    };
    let get = |t: &MultiplicityTable, n: usize, l: i64| t.entry(n, l).unwrap_or(0);
    let mut pascal = true;
    for n in 2..=n_max {
        for label in WeightLabel::all(n) {
            let l = label.lambda;
            pascal &= get(&table, n, l) == get(&table, n - 1, l - 1) + get(&table, n - 1, l + 1);
        }
    }
    table.pascal = pascal;
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallCaseReport {
    pub l: u32,
    pub m: i64,
    /// Basis labels, `["12", "21"]`.
    pub basis: Vec<String>,
    pub u1: Vec<Vec<String>>,
    pub u0: Vec<Vec<String>>,
    pub x: Vec<Vec<String>>,
    pub u1_matches: bool,
    pub u0_matches: bool,
    pub x_matches: bool,
    /// `c` in `U_0 \underline{12} = c · 21`.
    pub coefficient: String,
    pub coefficient_matches: bool,
    pub coefficient_nonzero: bool,
    /// `q^{2m} ≠ q^2`.
    pub q_condition: bool,
}

impl SmallCaseReport {
    pub fn passed(&self) -> bool {
        self.u1_matches
            && self.u0_matches
            && self.x_matches
            && self.coefficient_matches
            && self.coefficient_nonzero == self.q_condition
    }
}

/// `M_2(0)` in the basis `{12, 21}`.
pub fn grothendieck_smallcase<S: Scalar>(params: &Params<S>) -> Result<SmallCaseReport> {
    let w12: Word = "12".parse()?;
    let w21: Word = "21".parse()?;
    let m = WeightModule::on_basis(2, 0, vec![w12, w21], params)?;
    let q = params.q().clone();
    let qi = params.q_inv().clone();
    let l1 = params.lambda1().clone();
    let z = S::zero;
    let u1_want = Matrix::from_rows(vec![vec![-qi.clone(), S::one()], vec![S::one(), -q.clone()]]);
    let corner = -(l1.clone() * &params.q_minus_q_inv());
    let u0_want = Matrix::from_rows(vec![vec![z(), z()], vec![corner.clone(), -params.gauss(params.m())]]);
    let x_want = u0_want.sub_scalar(&-l1.clone());
    let image = m.vector(&m.generator(0).mul_vec(&m.coords(&underline(Word::empty(), Word::empty(), params))?));
    let coeff = image.coeff(&w21);
    let want_coeff = qi * &(corner + &(q.clone() * &params.gauss(params.m())));
    Ok(SmallCaseReport {
        l: params.l(),
        m: params.m(),
        basis: m.labels(),
        u1: m.generator(1).to_strings(),
        u0: m.generator(0).to_strings(),
        x: m.x().to_strings(),
        u1_matches: *m.generator(1) == u1_want,
        u0_matches: *m.generator(0) == u0_want,
        x_matches: m.x() == x_want,
        coefficient_matches: coeff == want_coeff && image.coeff(&w12).is_zero(),
        coefficient_nonzero: !coeff.is_zero(),
        coefficient: coeff.to_string(),
        q_condition: params.q_pow(2 * params.m()) != params.q_pow(2),
    })
}
