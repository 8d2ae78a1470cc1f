//! Deterministic parameter-grid sweeps behind the command-line reports.
//!
//! Points run in parallel; records come back in grid order (l, then m,
//! then n, then λ, all ascending).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::backend::{dispatch, WithScalar, SUPPORTED_ORDERS};
use crate::blob::{verify_blob_relations, verify_transposed_relations};
use crate::error::{BlobError, Result};
use crate::scalar::{validate_params, BlobParams, Params, Scalar};
use crate::specht::{dual_adjointness_check, duality_report, verify_xi_row_shape, DualVerdict, DualityReport, ResidueMatch};
use crate::tensor::{verify_ariki_koike, verify_blob_identity, verify_lemma_y, RelationCheck};
use crate::towers::{
    central_scalar_report, grothendieck_smallcase, restriction_sequence, splitting_check, x_multiplicity_table,
    CentralScalarReport, MultiplicityTable, SmallCaseReport, SplittingVerdict,
};
use crate::weightmod::{adjointness_verdict, idempotent_e, underline_map, AdjointnessVerdict, WeightLabel, WeightModule};

/// Default `m` values on the generic backend.
pub const GENERIC_DEFAULT_M: &[i64] = &[2, 3];

/// Which points to visit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub ls: Vec<u32>,
    /// Empty means every valid residue `2..l` (or [`GENERIC_DEFAULT_M`]).
    pub ms: Vec<i64>,
    pub ns: Vec<usize>,
    /// `None` means all of `Λ_n`.
    pub lambdas: Option<Vec<i64>>,
}

/// A parameter pair left out of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub l: u32,
    pub m: i64,
    pub reason: String,
}

pub trait Checked {
    fn passed(&self) -> bool;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report<T> {
    pub records: Vec<T>,
    pub skipped: Vec<Skip>,
}

impl<T: Checked> Report<T> {
    pub fn passed(&self) -> bool {
        self.records.iter().all(Checked::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &T> {
        self.records.iter().filter(|r| !r.passed())
    }
}

impl Grid {
    /// `(l, m)` pairs in sweep order, plus the rejected ones.
    pub fn param_pairs(&self) -> (Vec<(u32, i64)>, Vec<Skip>) {
        let mut ls = self.ls.clone();
        ls.sort_unstable();
        ls.dedup();
        let mut pairs = Vec::new();
        let mut skipped = Vec::new();
        for l in ls {
            let mut ms = if !self.ms.is_empty() {
                self.ms.clone()
            } else if l == 0 {
                GENERIC_DEFAULT_M.to_vec()
            } else {
                (2..l as i64).collect()
            };
            ms.sort_unstable();
            ms.dedup();
            for m in ms {
                if let Err(e) = validate_params(&BlobParams { n: 1, l, m }) {
                    skipped.push(Skip {
                        l,
                        m,
                        reason: e.to_string(),
                    });
                } else if l != 0 && !SUPPORTED_ORDERS.contains(&l) {
                    skipped.push(Skip {
                        l,
                        m,
                        reason: BlobError::UnsupportedOrder(l).to_string(),
                    });
                } else {
                    pairs.push((l, m));
                }
            }
        }
        (pairs, skipped)
    }

    fn ns(&self) -> Vec<usize> {
        let mut ns = self.ns.clone();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    fn lambdas(&self, n: usize, interior: bool) -> Vec<i64> {
        WeightLabel::all(n)
            .into_iter()
            .filter(|w| !(interior && w.is_extremal()))
            .map(|w| w.lambda)
            .filter(|l| self.lambdas.as_ref().is_none_or(|v| v.contains(l)))
            .collect()
    }
}

/// A per-point computation.
pub trait PointFn: Sync {
    type Rec: Send;
    /// Smallest admissible `n`.
    const MIN_N: usize;
    /// Skip `λ = ±n`.
    const INTERIOR: bool;
    /// One point per `n` instead of per `(n, λ)`.
    const PER_N: bool = false;
    fn eval<S: Scalar>(&self, params: &Params<S>, n: usize, lambda: i64) -> Result<Self::Rec>;
}

struct Sweep<'a, F> {
    f: &'a F,
    m: i64,
    points: &'a [(usize, i64)],
}

impl<F: PointFn> WithScalar for Sweep<'_, F> {
    type Output = Result<Vec<F::Rec>>;
    fn run<S: Scalar>(self) -> Self::Output {
        let params = Params::<S>::new(S::ROOT_ORDER, self.m)?;
        self.points
            .par_iter()
            .map(|&(n, lambda)| self.f.eval(&params, n, lambda))
            .collect()
    }
}

pub fn sweep<F: PointFn>(grid: &Grid, f: &F) -> Result<Report<F::Rec>> {
    let (pairs, skipped) = grid.param_pairs();
    let mut points = Vec::new();
    for n in grid.ns().into_iter().filter(|&n| n >= F::MIN_N) {
        if F::PER_N {
            points.push((n, 0));
        } else {
            points.extend(grid.lambdas(n, F::INTERIOR).into_iter().map(|l| (n, l)));
        }
    }
    let mut records = Vec::new();
    for (l, m) in pairs {
        records.extend(dispatch(
            l,
            Sweep {
                f,
                m,
                points: &points,
            },
        )??);
    }
    Ok(Report { records, skipped })
}

/// Relation suites on all of `V^{⊗n}`.
pub struct Relations;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationsRecord {
    pub n: usize,
    pub l: u32,
    pub m: i64,
    pub checks: usize,
    pub passed: bool,
    pub failures: Vec<RelationCheck>,
}

impl Checked for RelationsRecord {
    fn passed(&self) -> bool {
        self.passed
    }
}

impl PointFn for Relations {
    type Rec = RelationsRecord;
    const MIN_N: usize = 2;
    const INTERIOR: bool = false;
    const PER_N: bool = true;

    fn eval<S: Scalar>(&self, params: &Params<S>, n: usize, _: i64) -> Result<RelationsRecord> {
        crate::config::check_n(n, params.l())?;
        let mut rep = verify_ariki_koike(n, params)?;
        for j in 1..=2 {
            for p in 1..=n {
                rep.checks.push(verify_lemma_y(j, p, n, params)?);
            }
        }
        rep.extend(verify_blob_identity(n, params)?);
        rep.extend(verify_blob_relations(n, params)?);
        rep.extend(verify_transposed_relations(n, params)?);
        Ok(RelationsRecord {
            n,
            l: params.l(),
            m: params.m(),
            checks: rep.checks.len(),
            passed: rep.passed(),
            failures: rep.failures().cloned().collect(),
        })
    }
}

/// `F M_n(λ) ≅ M_{n−2}(λ)` through the underline map.
pub struct Localize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizeRecord {
    pub n: usize,
    pub l: u32,
    pub m: i64,
    pub lambda: i64,
    pub e_dim: usize,
    pub expected_dim: usize,
    /// `None` for `λ = ±n`, where `eM = 0`.
    pub injective: Option<bool>,
    pub onto_e_m: Option<bool>,
    pub non_intertwining: Vec<usize>,
    pub relations_hold: bool,
}

impl Checked for LocalizeRecord {
    fn passed(&self) -> bool {
        self.e_dim == self.expected_dim
            && self.injective != Some(false)
            && self.onto_e_m != Some(false)
            && self.non_intertwining.is_empty()
            && self.relations_hold
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl PointFn for Localize {
    type Rec = LocalizeRecord;
    const MIN_N: usize = 3;
    const INTERIOR: bool = false;

    fn eval<S: Scalar>(&self, params: &Params<S>, n: usize, lambda: i64) -> Result<LocalizeRecord> {
        let label = WeightLabel::new(n, lambda)?;
        let m = WeightModule::new(n, lambda, params)?;
        let relations_hold = m.verify_relations().passed();
        let expected_dim = if label.is_extremal() {
            0
        } else {
            binom(n - 2, label.n1() - 1)
        };
        let (e_dim, injective, onto, non) = if label.is_extremal() {
            let e = idempotent_e(n, params)?.matrix(m.basis())?;
            (e.rank(), None, None, Vec::new())
        } else {
            let r = underline_map(n, lambda, params)?;
            (r.e_dim, Some(r.injective), Some(r.onto_e_m), r.non_intertwining)
        };
        Ok(LocalizeRecord {
            n,
            l: params.l(),
            m: params.m(),
            lambda,
            e_dim,
            expected_dim,
            injective,
            onto_e_m: onto,
            non_intertwining: non,
            relations_hold,
        })
    }
}

/// Adjointness on `M_n(λ)` and on its dual.
pub struct Adjointness;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointnessRecord {
    #[serde(flatten)]
    pub verdict: AdjointnessVerdict,
    pub dual: DualVerdict,
}

impl Checked for AdjointnessRecord {
    fn passed(&self) -> bool {
        let v = &self.verdict;
        v.agree
            && v.closure_matches_span
            && v.decorated_residue_matches
            && v.scalars_match_closed_forms
            && v.codim == usize::from(!v.surjective)
            && self.dual.routes_agree
            && self.dual.swap_symmetry
            && self.dual.eigen_swap
    }
}

impl PointFn for Adjointness {
    type Rec = AdjointnessRecord;
    const MIN_N: usize = 3;
    const INTERIOR: bool = true;

    fn eval<S: Scalar>(&self, params: &Params<S>, n: usize, lambda: i64) -> Result<AdjointnessRecord> {
        Ok(AdjointnessRecord {
            verdict: adjointness_verdict(n, lambda, params)?,
            dual: dual_adjointness_check(n, lambda, params)?,
        })
    }
}

/// Counts of iso / non-iso points by residue class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueTally {
    pub iso_when_congruent: usize,
    pub not_iso_when_congruent: usize,
    pub iso_when_not_congruent: usize,
    pub not_iso_when_not_congruent: usize,
}

impl ResidueTally {
    fn add(&mut self, congruent: bool, iso: bool) {
        match (congruent, iso) {
            (true, true) => self.iso_when_congruent += 1,
            (true, false) => self.not_iso_when_congruent += 1,
            (false, true) => self.iso_when_not_congruent += 1,
            (false, false) => self.not_iso_when_not_congruent += 1,
        }
    }

    /// The residue condition every point follows, if any.
    pub fn consistent(&self) -> Option<ResidueMatch> {
        let cong = self.iso_when_congruent + self.not_iso_when_not_congruent;
        let neg = self.iso_when_not_congruent + self.not_iso_when_congruent;
        match (cong, neg) {
            (_, 0) => Some(ResidueMatch::Congruent),
            (0, _) => Some(ResidueMatch::NotCongruent),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointnessSummary {
    /// `M_n(λ)` against `n_2 ≡ m`.
    pub module_vs_n2: ResidueTally,
    /// Dual against `n_1 ≡ m`.
    pub dual_vs_n1: ResidueTally,
    /// Dual against `n_1 ≡ −m`.
    pub dual_vs_neg_n1: ResidueTally,
    /// One answer for the dual across the grid, against `n_1 ≡ m`.
    pub dual_answer: Option<ResidueMatch>,
}

impl AdjointnessSummary {
    pub fn new(records: &[AdjointnessRecord]) -> Self {
        let mut module_vs_n2 = ResidueTally::default();
        let mut dual_vs_n1 = ResidueTally::default();
        let mut dual_vs_neg_n1 = ResidueTally::default();
        for r in records {
            module_vs_n2.add(!r.verdict.predicted_iso, r.verdict.surjective && r.verdict.injective);
            let iso = r.dual.surjective && r.dual.injective;
            dual_vs_n1.add(r.dual.n1_congruent_m, iso);
            dual_vs_neg_n1.add(r.dual.n1_congruent_neg_m, iso);
        }
        let dual_answer = dual_vs_n1.consistent();
        AdjointnessSummary {
            module_vs_n2,
            dual_vs_n1,
            dual_vs_neg_n1,
            dual_answer,
        }
    }
}

/// Restriction sequence, central element and splitting.
pub struct Restrict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictRecord {
    pub n: usize,
    pub l: u32,
    pub m: i64,
    pub lambda: i64,
    pub sub_invariant: bool,
    pub sub_intertwines: bool,
    pub quotient_intertwines: bool,
    pub central: CentralScalarReport,
    pub splitting: SplittingVerdict,
}

impl Checked for RestrictRecord {
    fn passed(&self) -> bool {
        self.sub_invariant
            && self.sub_intertwines
            && self.quotient_intertwines
            && self.central.passed()
            && self.splitting.passed()
    }
}

impl PointFn for Restrict {
    type Rec = RestrictRecord;
    const MIN_N: usize = 3;
    const INTERIOR: bool = true;

    fn eval<S: Scalar>(&self, params: &Params<S>, n: usize, lambda: i64) -> Result<RestrictRecord> {
        let r = restriction_sequence(n, lambda, params)?;
        Ok(RestrictRecord {
            n,
            l: params.l(),
            m: params.m(),
            lambda,
            sub_invariant: r.invariant,
            sub_intertwines: r.sub_intertwines,
            quotient_intertwines: r.quotient_intertwines,
            central: central_scalar_report(n, lambda, params)?,
            splitting: splitting_check(n, lambda, params)?,
        })
    }
}

/// Two-column Specht modules against `M_n(λ)`.
pub struct Duality;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityRecord {
    pub n: usize,
    pub lambda: i64,
    #[serde(flatten)]
    pub report: DualityReport,
    pub row_word_eigen: bool,
}

impl Checked for DualityRecord {
    fn passed(&self) -> bool {
        self.report.passed() && self.row_word_eigen
    }
}

impl PointFn for Duality {
    type Rec = DualityRecord;
    const MIN_N: usize = 1;
    const INTERIOR: bool = false;

    fn eval<S: Scalar>(&self, params: &Params<S>, n: usize, lambda: i64) -> Result<DualityRecord> {
        let label = WeightLabel::new(n, lambda)?;
        let (n1, n2) = (label.n1(), label.n2());
        Ok(DualityRecord {
            n,
            lambda,
            report: duality_report(n1, n2, params)?,
            row_word_eigen: verify_xi_row_shape(n1, n2, params)?.passed(),
        })
    }
}

/// Rows `n = 1..4` of the printed multiplicity triangle, `λ` ascending.
pub const PRINTED_TRIANGLE: [&[usize]; 4] = [&[1, 0], &[1, 1, 0], &[1, 2, 1, 0], &[1, 3, 3, 1, 0]];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleRecord {
    pub l: u32,
    pub m: i64,
    pub table: MultiplicityTable,
    pub printed_rows_match: bool,
}

impl Checked for TriangleRecord {
    fn passed(&self) -> bool {
        self.printed_rows_match && self.table.triangular && self.table.pascal && self.table.binomial
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallCaseRecord {
    #[serde(flatten)]
    pub report: SmallCaseReport,
}

impl Checked for SmallCaseRecord {
    fn passed(&self) -> bool {
        self.report.passed()
    }
}

struct PerParams<F>(F, i64);

macro_rules! per_params {
    ($name:ident, $rec:ty, $body:expr) => {
        impl WithScalar for PerParams<$name> {
            type Output = Result<$rec>;
            fn run<S: Scalar>(self) -> Self::Output {
                let params = Params::<S>::new(S::ROOT_ORDER, self.1)?;
                let f = $body;
                f(&self.0, &params)
            }
        }
    };
}

struct TriangleJob(usize);
struct SmallCaseJob;

per_params!(TriangleJob, TriangleRecord, |job: &TriangleJob, params: &Params<S>| -> Result<TriangleRecord> {
    let table = x_multiplicity_table(job.0, params)?;
    let printed_rows_match = PRINTED_TRIANGLE.iter().enumerate().all(|(i, want)| {
        let n = i + 1;
        n > job.0
            || table.rows[i].entries.iter().map(|(_, c)| *c).collect::<Vec<_>>() == *want
    });
    Ok(TriangleRecord {
        l: params.l(),
        m: params.m(),
        table,
        printed_rows_match,
    })
});

per_params!(SmallCaseJob, SmallCaseRecord, |_: &SmallCaseJob, params: &Params<S>| -> Result<SmallCaseRecord> {
    Ok(SmallCaseRecord {
        report: grothendieck_smallcase(params)?,
    })
});

/// The multiplicity triangle up to `n_max` for every parameter pair.
pub fn triangle(grid: &Grid, n_max: usize) -> Result<Report<TriangleRecord>> {
    let (pairs, skipped) = grid.param_pairs();
    let records = pairs
        .into_iter()
        .map(|(l, m)| dispatch(l, PerParams(TriangleJob(n_max), m))?)
        .collect::<Result<_>>()?;
    Ok(Report { records, skipped })
}

/// `M_2(0)` goldens for every parameter pair.
pub fn smallcase(grid: &Grid) -> Result<Report<SmallCaseRecord>> {
    let (pairs, skipped) = grid.param_pairs();
    let records = pairs
        .into_iter()
        .map(|(l, m)| dispatch(l, PerParams(SmallCaseJob, m))?)
        .collect::<Result<_>>()?;
    Ok(Report { records, skipped })
}
