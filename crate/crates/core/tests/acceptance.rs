//! Acceptance gate: one line per criterion, nonzero exit on any failure.
//!
//! Oracles here are written independently of the library: Čech slices are
//! rebuilt from scratch and ranked over `Q`, products with `d_n` are expanded
//! term by term, and the pairing is recomputed on raw exponent maps.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use matlis_core::cech::verify_realization;
use matlis_core::duality::{matlis_pair, pairing_perfection_check, regular_on_dual_check, tensor_surjectivity_witness};
use matlis_core::independence::{delta, make_d, shift_equiv_window, DeltaEntry, ShiftOutcome};
use matlis_core::sample::random_element;
use matlis_core::suite::{
    all_shapes, fit_matches, injectivity_check, leibniz_check, random_coefficients, round_trip_check,
    run_suite, run_trial, weyl_check, Suite, TrialOutcome,
};
use matlis_core::{
    ring_act, write_document, Body, Document, Element, Exponent, Field, ModuleShape, Role, TruncationBox,
};

struct Verdict {
    passed: bool,
    detail: String,
}

fn report(id: u32, title: &str, elapsed: Duration, v: &Verdict) {
    let status = if v.passed { "PASS" } else { "FAIL" };
    println!("criterion {id} [{status}] {title}: {} ({:.2?})", v.detail, elapsed);
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

// --- oracles ----------------------------------------------------------------

fn rational_rank(rows: Vec<Vec<BigRational>>) -> usize {
    let mut m = rows;
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                for c in 0..ncols {
                    let d = &f * &m[rank][c];
                    m[r][c] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (idx, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[idx + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// `dim H^l` of the degree-`a` Čech slice, from the definition.
fn oracle_cech_dims(n: usize, i: usize, a: &[i64]) -> Vec<usize> {
    let idx: Vec<usize> = (0..i).collect();
    let present = |s: &Vec<usize>| (0..n).all(|j| s.contains(&j) || a[j] >= 0);
    let basis: Vec<Vec<Vec<usize>>> =
        (0..=i).map(|l| combinations(&idx, l).into_iter().filter(|s| present(s)).collect()).collect();
    let rank = |l: usize| -> usize {
        if l >= i || basis[l].is_empty() || basis[l + 1].is_empty() {
            return 0;
        }
        let rows: Vec<Vec<BigRational>> = basis[l + 1]
            .iter()
            .map(|t| {
                basis[l]
                    .iter()
                    .map(|s| {
                        let extra: Vec<usize> = t.iter().copied().filter(|x| !s.contains(x)).collect();
                        if extra.len() != 1 || !s.iter().all(|x| t.contains(x)) {
                            return q(0);
                        }
                        let pos = t.iter().position(|&x| x == extra[0]).unwrap();
                        q(if pos % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        rational_rank(rows)
    };
    (0..=i)
        .map(|l| basis[l].len() - rank(l) - if l == 0 { 0 } else { rank(l - 1) })
        .collect()
}

fn rational(c: &matlis_core::Scalar) -> BigRational {
    match c {
        matlis_core::Scalar::Rational(v) => v.clone(),
        _ => unreachable!("rational trials"),
    }
}

type Poly = BTreeMap<(i64, i64), BigRational>;

/// `sum_j r_j d_j` restricted to `X^l`, `l <= lmax`, expanded from scratch.
fn oracle_sum(r_list: &[Element], lmax: u64) -> Poly {
    let mut out = Poly::new();
    for (k, r) in r_list.iter().enumerate() {
        let power = (k + 1) as u32;
        for (e, c) in r.terms() {
            let c = rational(c);
            for l in 0..=lmax as i64 {
                let (x, y) = (e[0] + l, e[1] - l.pow(power));
                if x > lmax as i64 || y > 0 {
                    continue;
                }
                let slot = out.entry((x, y)).or_insert_with(|| q(0));
                *slot += &c;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn oracle_delta(p: &Poly, l: i64) -> Option<i64> {
    p.keys().filter(|(x, _)| *x == l).map(|&(_, y)| y).min()
}

fn as_map(e: &Element) -> BTreeMap<Exponent, String> {
    e.terms().map(|(x, c)| (x.clone(), c.to_string())).collect()
}

// --- criteria ---------------------------------------------------------------

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let mut tables = Vec::new();
    for n in 1..=4 {
        for i in 1..=n {
            tables.push(verify_realization(n, i, 4).expect("valid indices"));
        }
    }
    let library_time = start.elapsed();
    let mut degrees = 0;
    let mut bad = Vec::new();
    for t in &tables {
        for e in &t.entries {
            degrees += 1;
            let a = &e.degree.0;
            let want_top = (0..t.n).all(|j| if j < t.i { a[j] <= -1 } else { a[j] >= 0 });
            let formula: Vec<usize> = (0..=t.i).map(|l| usize::from(l == t.i && want_top)).collect();
            let oracle = oracle_cech_dims(t.n, t.i, a);
            if e.dims != formula || oracle != formula || !t.passed {
                bad.push(format!("n={} i={} a={}", t.n, t.i, e.degree));
            }
        }
    }
    let fast = library_time < Duration::from_secs(60);
    Verdict {
        passed: bad.is_empty() && fast,
        detail: format!(
            "{degrees} multidegrees over 10 (n, i) pairs, {} mismatches, sweep {:.2?}",
            bad.len(),
            library_time
        ),
    }
}

fn criterion_2() -> Verdict {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=4u32 {
        let d = make_d(n, 30, None, Field::Rational).expect("box fits");
        let seq = delta(&d, 0, 30).expect("window inside box");
        for l in 0..=30u64 {
            checked += 1;
            let want = -(l as i64).pow(n);
            let scanned = d.terms().filter(|(e, _)| e[0] == l as i64).map(|(e, _)| e[1]).min();
            if seq.get(l) != Some(DeltaEntry::MinExponent(want)) || scanned != Some(want) {
                bad.push((n, l));
            }
        }
    }
    Verdict { passed: bad.is_empty(), detail: format!("{checked} values, mismatches {bad:?}") }
}

fn criterion_3() -> Verdict {
    const TRIALS: usize = 200;
    const LMAX: u64 = 30;
    let mut rng = ChaCha8Rng::seed_from_u64(20_230_915);
    let (mut certified, mut beyond_window, mut never_dominant) = (0, 0, 0);
    let (mut higher, mut higher_certified) = (0, 0);
    let mut failures = Vec::new();
    for t in 0..TRIALS {
        let r_list = random_coefficients(&mut rng, 3);
        let m0 = r_list.iter().rposition(|r| !r.is_zero()).unwrap();
        let lead = &r_list[m0];
        let a = lead.terms().map(|(e, _)| e[0]).min().unwrap();
        let b = lead.terms().filter(|(e, _)| e[0] == a).map(|(e, _)| e[1]).min().unwrap();
        let sum = oracle_sum(&r_list, LMAX);
        higher += usize::from(m0 > 0);
        match run_trial(&r_list, LMAX) {
            TrialOutcome::Certified(c) => {
                certified += 1;
                higher_certified += usize::from(m0 > 0);
                let delta_agrees = (0..=LMAX as i64).all(|l| {
                    let lib = match c.delta.get(l as u64) {
                        Some(DeltaEntry::MinExponent(v)) => Some(v),
                        _ => None,
                    };
                    lib == oracle_delta(&sum, l)
                });
                let ok = c.sum_nonzero
                    && !sum.is_empty()
                    && (c.a, c.b) == (a as u64, b as u64)
                    && fit_matches(&c)
                    && delta_agrees;
                if !ok {
                    failures.push(format!("trial {t}: certificate disagrees with oracle"));
                }
            }
            TrialOutcome::Inconclusive { required_lmax: Some(need) } => {
                beyond_window += 1;
                if need <= LMAX {
                    failures.push(format!("trial {t}: inconclusive but needs only {need}"));
                }
            }
            TrialOutcome::Inconclusive { required_lmax: None } => {
                never_dominant += 1;
                // Only the linear family can fail to dominate: there the tail is
                // t_min - l with t_min the least degree whose part has r_t(1,1) != 0.
                let mut sums: BTreeMap<i64, BigRational> = BTreeMap::new();
                for (e, c) in lead.terms() {
                    *sums.entry(e[0] + e[1]).or_insert_with(|| q(0)) += rational(c);
                }
                let t_min = sums.iter().find(|(_, v)| !v.is_zero()).map(|(&t, _)| t);
                let explained = m0 == 0 && t_min != Some(a + b);
                if !explained {
                    failures.push(format!("trial {t}: reported never dominant"));
                }
            }
            TrialOutcome::Failed(why) => failures.push(format!("trial {t}: {why}")),
        }
    }
    let rate = certified as f64 / TRIALS as f64;
    // The 95% figure is an expectation, not a pass condition: linear leads
    // whose tail is not the decomposition shift have no dominance tail at all.
    println!(
        "criterion 3 rate [{}] {certified}/{TRIALS} = {:.1}% certified against an expected 95%; \
         m0 >= 2: {higher_certified}/{higher}; linear leads without a dominance tail: {never_dominant}",
        if rate >= 0.95 { "MET" } else { "BELOW EXPECTATION" },
        100.0 * rate
    );
    Verdict {
        passed: failures.is_empty() && higher_certified == higher,
        detail: format!(
            "every inconclusive trial explained ({beyond_window} need a longer window, {never_dominant} never dominant), \
             {} hard failures{}",
            failures.len(),
            failures.first().map(|f| format!(", first: {f}")).unwrap_or_default()
        ),
    }
}

fn criterion_4() -> Verdict {
    let field = Field::Rational;
    let (mut targets, mut reports) = (0, 0);
    let mut bad = Vec::new();
    for n in 1..=3usize {
        let bounds = TruncationBox::uniform(n, 3);
        for i in 0..=n {
            for target in bounds.monomials(&ModuleShape::injective_hull(n)) {
                targets += 1;
                let (m, d) = tensor_surjectivity_witness(&target, i, &bounds, field).expect("target in E");
                let p = matlis_pair(&d, &m).expect("dual shapes");
                let want: BTreeMap<Exponent, String> = [(target.clone(), "1".to_string())].into();
                if as_map(&p) != want {
                    bad.push(format!("surjectivity n={n} i={i} target={target}"));
                }
            }
            reports += 1;
            let r = pairing_perfection_check(n, i, 3, field).expect("valid indices");
            // Independent reading: dual X^u pairs to 1 exactly with primal X^-u.
            let perm_ok = r.dual_basis.iter().enumerate().all(|(a, u)| {
                let neg = Exponent(u.0.iter().map(|v| -v).collect());
                r.permutation[a].map(|b| &r.primal_basis[b]) == Some(&neg)
            });
            let mut hit = r.permutation.clone();
            hit.sort();
            hit.dedup();
            if !(r.passed && perm_ok && hit.len() == r.primal_basis.len() && r.dual_basis.len() == r.primal_basis.len()) {
                bad.push(format!("perfection n={n} i={i}"));
            }
        }
    }
    Verdict {
        passed: bad.is_empty(),
        detail: format!("{targets} E-monomials hit, {reports} pairing matrices are permutations, failures {bad:?}"),
    }
}

fn oracle_pair(d: &Element, m: &Element) -> BTreeMap<Exponent, String> {
    let mut acc: BTreeMap<Exponent, matlis_core::Scalar> = BTreeMap::new();
    for (u, cu) in d.terms() {
        for (v, cv) in m.terms() {
            let w = u.add(v);
            if w.0.iter().all(|&x| x <= 0) {
                let prod = cu * cv;
                let next = match acc.get(&w) {
                    Some(prev) => prev + &prod,
                    None => prod,
                };
                acc.insert(w, next);
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(x, c)| (x, c.to_string())).collect()
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bad = 0;
    for k in 0..500usize {
        let n = 1 + k % 3;
        let i = k / 3 % (n + 1);
        let field = if k % 2 == 0 { Field::Rational } else { Field::Prime(101) };
        let primal = ModuleShape::local_cohomology(n, i);
        let bounds = TruncationBox::uniform(n, 4);
        let r = random_element(&mut rng, field, &ModuleShape::ring(n), &TruncationBox::uniform(n, 2), 4);
        let d = random_element(&mut rng, field, &primal.dual(), &bounds, 6);
        let m = random_element(&mut rng, field, &primal, &bounds, 6);
        let left = matlis_pair(&ring_act(&r, &d).unwrap(), &m).unwrap();
        let middle = matlis_pair(&d, &ring_act(&r, &m).unwrap()).unwrap();
        let base = matlis_pair(&d, &m).unwrap();
        let right = ring_act(&r, &base).unwrap();
        if !(left == middle && middle == right && as_map(&base) == oracle_pair(&d, &m)) {
            bad += 1;
        }
    }
    Verdict { passed: bad == 0, detail: format!("500 triples, {bad} violations") }
}

fn criterion_6() -> Verdict {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 2..=4usize {
        for i in 1..n {
            count += 1;
            let r = regular_on_dual_check(n, i, 4, Field::Rational).expect("valid indices");
            let expected_size = 5usize.pow((n - i) as u32);
            let ok = r.passed
                && r.steps.iter().all(|s| s.kernel_dim == 0 && s.sub_box_size > 0)
                && r.quotient_shape.0.iter().all(|&role| role == Role::Inverse)
                && r.quotient_shape.arity() == n - i
                && r.quotient_basis_size == expected_size
                && r.quotient_nonzero;
            if !ok {
                bad.push((n, i));
            }
        }
    }
    Verdict { passed: bad.is_empty(), detail: format!("{count} (n, i) pairs, failures {bad:?}") }
}

fn criterion_7() -> Verdict {
    let mut configs = 0;
    let mut instances = 0;
    let mut bad = Vec::new();
    for n in 1..=3 {
        for shape in all_shapes(n) {
            configs += 1;
            for r in [leibniz_check(7, &shape, 500), weyl_check(7, &shape, 500)] {
                instances += r.instances;
                if !r.passed {
                    bad.push(format!("{shape} {}: {:?}", r.name, r.first_failure));
                }
            }
        }
    }
    Verdict {
        passed: bad.is_empty(),
        detail: format!("{configs} shape configurations x 500 samples, {instances} identities checked, failures {bad:?}"),
    }
}

fn criterion_8() -> Verdict {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for (start, end) in [(0u64, 9u64), (0, 15), (3, 14), (0, 24)] {
        let seqs: Vec<_> = (1..=4u32)
            .map(|n| delta(&make_d(n, end, None, Field::Rational).unwrap(), start, end).unwrap())
            .collect();
        for n1 in 1..=4u32 {
            for n2 in 1..=4u32 {
                if n1 == n2 {
                    continue;
                }
                pairs += 1;
                let lib = shift_equiv_window(&seqs[n1 as usize - 1], &seqs[n2 as usize - 1], 5);
                // Brute force over the same shifts with the closed form -l^n.
                let mut oracle_witness = false;
                for big_n in 0..=5u64 {
                    for big_m in 0..=5u64 {
                        let diffs: Vec<i64> = (1u64..)
                            .map(|k| (big_n + k, big_m + k))
                            .skip_while(|&(x, y)| x < start || y < start)
                            .take_while(|&(x, y)| x <= end && y <= end)
                            .map(|(x, y)| -(x as i64).pow(n1) + (y as i64).pow(n2))
                            .collect();
                        if diffs.len() >= 3 && diffs.windows(2).all(|w| w[0] == w[1]) {
                            oracle_witness = true;
                        }
                    }
                }
                if lib != ShiftOutcome::NoWitness || oracle_witness {
                    bad.push(format!("n1={n1} n2={n2} window=[{start},{end}]: {lib:?}"));
                }
            }
        }
    }
    Verdict { passed: bad.is_empty(), detail: format!("{pairs} ordered pairs over 4 windows, failures {bad:?}") }
}

fn criterion_9() -> Verdict {
    let rt = round_trip_check(9, 1000);
    let inj = injectivity_check(9, 1000);
    let render = || write_document(&Document::new(Body::CheckReport(run_suite(Suite::Io, 42))));
    let independence_doc = || {
        let r = random_coefficients(&mut ChaCha8Rng::seed_from_u64(42), 3);
        match run_trial(&r, 30) {
            TrialOutcome::Certified(c) => write_document(&Document::new(Body::IndependenceCertificate(*c))),
            other => format!("{other:?}"),
        }
    };
    let identical = render() == render() && independence_doc() == independence_doc();
    Verdict {
        passed: rt.passed && rt.instances == 1000 && inj.passed && identical,
        detail: format!(
            "round trip {}/{} ok, injectivity {} failures, reports byte-identical: {identical}",
            rt.instances - rt.failures,
            rt.instances,
            inj.failures
        ),
    }
}

type Criterion = (u32, &'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "Čech realization, n <= 4, window 4", criterion_1),
        (2, "δ(d_n)(l) = -l^n, n <= 4, l <= 30", criterion_2),
        (3, "independence certificates, 200 trials, Lmax 30", criterion_3),
        (4, "surjectivity and perfect pairing, n <= 3, box 3", criterion_4),
        (5, "balance of the pairing, 500 triples", criterion_5),
        (6, "regular sequence on the dual, n <= 4, box 4", criterion_6),
        (7, "Leibniz and Weyl laws, 500 samples per shape", criterion_7),
        (8, "shift separation of δ(d_n), search bound 5", criterion_8),
        (9, "round trip and byte-identical reports", criterion_9),
    ];
    let mut all = true;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let v = run();
        report(id, title, start.elapsed(), &v);
        all &= v.passed;
    }
    println!("acceptance: {}", if all { "all criteria passed" } else { "FAILED" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
