use blobtensor::report::*;
use blobtensor::specht::ResidueMatch;
use blobtensor::weightmod::{localize, WeightModule};
use blobtensor::Params;
use blobtensor::Cyclo5;

/// Criteria expected to fail, with the reason printed next to FAIL.
const KNOWN_RED: &[(usize, &str)] = &[(
    9,
    "dual iso follows n1 != -m mod l (swapped special scalar), mixed against n1 = m",
)];

fn grid(ls: &[u32], ms: &[i64], ns: std::ops::RangeInclusive<usize>) -> Grid {
    Grid {
        ls: ls.to_vec(),
        ms: ms.to_vec(),
        ns: ns.collect(),
        lambdas: None,
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
}

struct Outcome {
    results: Vec<(usize, bool, String)>,
    json: Vec<String>,
    dual_follows_neg: bool,
}

fn run_all() -> Outcome {
    let mut results = Vec::new();
    let mut json = Vec::new();
    let mut push = |k: usize, ok: bool, detail: String| results.push((k, ok, detail));

    // 1
    let mut ok = true;
    let mut checks = 0;
    for (ls, ms) in [(vec![0], vec![2, 3]), (vec![5, 7], vec![2, 3])] {
        let r = sweep(&grid(&ls, &ms, 2..=6), &Relations).unwrap();
        ok &= r.passed() && r.skipped.is_empty() && !r.records.is_empty();
        checks += r.records.iter().map(|x| x.checks).sum::<usize>();
        json.push(serde_json::to_string(&r).unwrap());
    }
    push(1, ok, format!("{checks} relation checks"));

    // 2
    let r = sweep(&grid(&[0, 3, 5, 7], &[], 3..=8), &Localize).unwrap();
    let mut ok = r.passed();
    ok &= r.records.iter().all(|x| x.e_dim == x.expected_dim);
    ok &= r.records.iter().all(|x| {
        let a = (x.n as i64 + x.lambda) / 2;
        x.lambda.unsigned_abs() == x.n as u64 || x.e_dim == binom(x.n - 2, a as usize - 1)
    });
    let p = Params::<Cyclo5>::new(5, 2).unwrap();
    for n in 3..=8 {
        for lambda in [-(n as i64), n as i64] {
            let m = WeightModule::new(n, lambda, &p).unwrap();
            ok &= localize(&m).unwrap().dim() == 0;
        }
    }
    push(2, ok, format!("{} points", r.records.len()));
    json.push(serde_json::to_string(&r).unwrap());

    // 3, 4, 9
    let r = sweep(&grid(&[3, 5, 7], &[], 3..=8), &Adjointness).unwrap();
    let ok3 = r.records.iter().all(|x| {
        let v = &x.verdict;
        v.agree
            && v.surjective == v.predicted_iso
            && v.closure_surjective == v.surjective
            && v.injective == v.surjective
            && v.special_nonzero == v.surjective
            && v.closure_matches_span
            && v.codim == usize::from(!v.surjective)
    });
    let failing = r.records.iter().filter(|x| !x.verdict.surjective).count();
    let ok4 = r.records.iter().all(|x| x.verdict.scalars_match_closed_forms && x.verdict.decorated_residue_matches);
    push(3, ok3 && !r.records.is_empty(), format!("{} points, {failing} with codim 1", r.records.len()));
    push(4, ok4, format!("{} points", r.records.len()));
    let s = AdjointnessSummary::new(&r.records);
    let ok9 = s.dual_answer == Some(ResidueMatch::NotCongruent);
    let dual_follows_neg = s.dual_vs_neg_n1.consistent() == Some(ResidueMatch::NotCongruent)
        && r.records.iter().all(|x| x.dual.routes_agree && x.dual.swap_symmetry && x.dual.eigen_swap);
    let t = &s.dual_vs_n1;
    push(
        9,
        ok9,
        format!(
            "against n1 = m: iso {}/{} congruent, {}/{} not congruent",
            t.iso_when_congruent,
            t.iso_when_congruent + t.not_iso_when_congruent,
            t.iso_when_not_congruent,
            t.iso_when_not_congruent + t.not_iso_when_not_congruent
        ),
    );
    json.push(serde_json::to_string(&r).unwrap());
    json.push(serde_json::to_string(&s).unwrap());

    // 5
    let all = grid(&[0, 3, 5, 7, 9, 11, 13], &[], 2..=2);
    let r = smallcase(&all).unwrap();
    let ok = r.passed() && r.records.iter().all(|x| x.report.coefficient_nonzero);
    push(5, ok, format!("{} parameter pairs", r.records.len()));
    json.push(serde_json::to_string(&r).unwrap());

    // 6
    let r = triangle(&grid(&[0, 3, 5, 7], &[], 1..=1), 10).unwrap();
    let mut ok = r.passed();
    for rec in &r.records {
        let t = &rec.table;
        ok &= rec.printed_rows_match && t.pascal && t.binomial && t.triangular;
        ok &= t.rows.len() == 10;
        ok &= t.rows.iter().all(|row| {
            row.entries.iter().all(|&(lambda, c)| {
                let a = (row.n as i64 + lambda) / 2;
                c == binom(row.n - 1, a as usize)
            })
        });
    }
    push(6, ok, format!("{} tables up to n = 10", r.records.len()));
    json.push(serde_json::to_string(&r).unwrap());

    // 7
    let mut ok = true;
    let mut pts = 0;
    for g in [grid(&[0], &[2, 3], 1..=7), grid(&[3, 5, 7], &[], 1..=7)] {
        let r = sweep(&g, &Duality).unwrap();
        ok &= r.passed() && r.records.iter().all(|x| x.row_word_eigen);
        pts += r.records.len();
        json.push(serde_json::to_string(&r).unwrap());
    }
    push(7, ok, format!("{pts} shapes"));

    // 8
    let r = sweep(&grid(&[3, 5, 7], &[], 3..=8), &Restrict).unwrap();
    let walls = r.records.iter().filter(|x| x.splitting.wall).count();
    let ok = r.passed()
        && r.records.iter().all(|x| {
            let s = &x.splitting;
            x.central.passed() && s.wall == s.lambda_congruent_neg_m && (s.wall || s.eigdims == s.expected_dims)
        });
    push(8, ok, format!("{} points, {walls} walls", r.records.len()));
    json.push(serde_json::to_string(&r).unwrap());

    let r = sweep(&grid(&[0], &[2, 3], 3..=6), &Restrict).unwrap();
    json.push(serde_json::to_string(&r).unwrap());

    results.sort_by_key(|r| r.0);
    Outcome {
        results,
        json,
        dual_follows_neg,
    }
}

#[test]
fn acceptance() {
    let first = run_all();
    let second = run_all();
    let mut results = first.results;
    let same = first.json == second.json;
    results.push((10, same, format!("{} reports byte-identical", first.json.len())));

    let mut unexpected = Vec::new();
    for (k, ok, detail) in &results {
        let red = KNOWN_RED.iter().find(|r| r.0 == *k);
        let tag = if *ok { "PASS" } else { "FAIL" };
        match (ok, red) {
            (false, Some((_, why))) => println!("{tag} criterion {k}: {detail} [known red: {why}]"),
            _ => println!("{tag} criterion {k}: {detail}"),
        }
        if *ok == red.is_some() {
            unexpected.push(*k);
        }
    }
    assert!(unexpected.is_empty(), "unexpected outcome for criteria {unexpected:?}");
    // the red criterion must still be red for the analysed reason
    assert!(first.dual_follows_neg);
}
