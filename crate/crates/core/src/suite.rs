//! Seeded invariant suites.
//!
//! Every invariant draws from its own ChaCha stream, so its result depends
//! only on the seed and not on which other invariants ran.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cech::{equivariance_check, verify_realization, window_degrees, CechDegreePiece};
use crate::duality::{
    gamma_of_shape, matlis_pair, pairing_perfection_check, regular_on_dual_check,
    tensor_surjectivity_witness, Torsion,
};
use crate::element::{
    derivation_act, linear_combine, ring_act, Element, Exponent, ModuleShape, Role, TruncationBox,
};
use crate::expr_io::{parse_element, read_document, serialize_element, write_document, Document};
use crate::independence::{
    delta, independence_certificate, make_d, shift_equiv_window, verify_witness, DeltaEntry,
    IndependenceCertificate, IndependenceError, ShiftOutcome,
};
use crate::sample::{random_element, random_element_within, random_polynomial, random_scalar};
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Algebra,
    Cech,
    Duality,
    Independence,
    Io,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["algebra", "cech", "duality", "independence", "io", "all"];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Algebra => "algebra",
            Suite::Cech => "cech",
            Suite::Duality => "duality",
            Suite::Independence => "independence",
            Suite::Io => "io",
            Suite::All => "all",
        };
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "algebra" => Suite::Algebra,
            "cech" => Suite::Cech,
            "duality" => Suite::Duality,
            "independence" => Suite::Independence,
            "io" => Suite::Io,
            "all" => Suite::All,
            other => return Err(format!("unknown suite `{other}`, expected one of {:?}", Suite::NAMES)),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    pub passed: bool,
    pub first_failure: Option<String>,
}

#[derive(Default)]
struct Tally {
    instances: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn finish(self, name: &str) -> InvariantResult {
        InvariantResult {
            name: name.to_string(),
            instances: self.instances,
            failures: self.failures,
            passed: self.failures == 0 && self.instances > 0,
            first_failure: self.first_failure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: Suite,
    pub seed: u64,
    pub invariants: Vec<InvariantResult>,
    pub passed: bool,
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

/// Every role assignment on `n` variables, series-first.
pub fn all_shapes(n: usize) -> Vec<ModuleShape> {
    (0u32..1 << n)
        .map(|bits| {
            ModuleShape(
                (0..n)
                    .map(|j| if bits >> j & 1 == 1 { Role::Inverse } else { Role::Series })
                    .collect(),
            )
        })
        .collect()
}

fn field_for(k: usize) -> Field {
    if k.is_multiple_of(2) {
        Field::Rational
    } else {
        Field::Prime(101)
    }
}

fn ring_sample(rng: &mut ChaCha8Rng, field: Field, n: usize, bound: u64) -> Element {
    let b = TruncationBox::uniform(n, bound);
    random_element(rng, field, &ModuleShape::ring(n), &b, 4)
}

fn var(field: Field, n: usize, j: usize) -> Element {
    Element::monomial(field, ModuleShape::ring(n), TruncationBox::uniform(n, 1), Exponent::unit(n, j), field.one())
        .expect("unit exponent")
}

// --- algebra -----------------------------------------------------------------

/// `(rs)m = r(sm)` and `1m = m`, with every product inside the box.
pub fn associativity_check(seed: u64, shape: &ModuleShape, samples: usize) -> InvariantResult {
    let n = shape.arity();
    let mut rng = stream(seed, 1);
    let mut t = Tally::default();
    let mbox = TruncationBox::uniform(n, 6);
    for k in 0..samples {
        let field = field_for(k);
        let r = ring_sample(&mut rng, field, n, 2);
        let s = ring_sample(&mut rng, field, n, 2);
        let m = random_element_within(&mut rng, field, shape, &mbox, &[2; 8][..n], 5);
        let rs = ring_act(&r, &s.rebox(TruncationBox::uniform(n, 4)).unwrap()).unwrap();
        let lhs = ring_act(&rs, &m).unwrap();
        let rhs = ring_act(&r, &ring_act(&s, &m).unwrap()).unwrap();
        let one = Element::one(field, ModuleShape::ring(n), TruncationBox::uniform(n, 0));
        let unit = ring_act(&one, &m).unwrap();
        let ok = lhs == rhs && lhs.is_exact() && rhs.is_exact() && unit == m;
        t.record(ok, || format!("r = {}, s = {}, m = {}", serialize_element(&r), serialize_element(&s), serialize_element(&m)));
    }
    t.finish("algebra.associativity")
}

/// `r(a m1 + b m2) = a r m1 + b r m2` and `(a r1 + b r2) m = a r1 m + b r2 m`.
pub fn bilinearity_check(seed: u64, shape: &ModuleShape, samples: usize) -> InvariantResult {
    let n = shape.arity();
    let mut rng = stream(seed, 2);
    let mut t = Tally::default();
    let mbox = TruncationBox::uniform(n, 3);
    for k in 0..samples {
        let field = field_for(k);
        let (a, b) = (random_scalar(&mut rng, field, 4), random_scalar(&mut rng, field, 4));
        let r1 = ring_sample(&mut rng, field, n, 2);
        let r2 = ring_sample(&mut rng, field, n, 2);
        let m1 = random_element(&mut rng, field, shape, &mbox, 5);
        let m2 = random_element(&mut rng, field, shape, &mbox, 5);
        let m_comb = linear_combine(&[(a.clone(), &m1), (b.clone(), &m2)]).unwrap();
        let left = ring_act(&r1, &m_comb).unwrap();
        let right = linear_combine(&[
            (a.clone(), &ring_act(&r1, &m1).unwrap()),
            (b.clone(), &ring_act(&r1, &m2).unwrap()),
        ])
        .unwrap();
        let r_comb = linear_combine(&[(a.clone(), &r1), (b.clone(), &r2)]).unwrap();
        let left2 = ring_act(&r_comb, &m1).unwrap();
        let right2 = linear_combine(&[
            (a.clone(), &ring_act(&r1, &m1).unwrap()),
            (b.clone(), &ring_act(&r2, &m1).unwrap()),
        ])
        .unwrap();
        t.record(left == right && left2 == right2, || {
            format!("r1 = {}, m1 = {}, m2 = {}", serialize_element(&r1), serialize_element(&m1), serialize_element(&m2))
        });
    }
    t.finish("algebra.bilinearity")
}

/// `d_j(r m) = (d_j r) m + r d_j(m)` for every `j`, all results exact.
pub fn leibniz_check(seed: u64, shape: &ModuleShape, samples: usize) -> InvariantResult {
    let n = shape.arity();
    let mut rng = stream(seed, 3);
    let mut t = Tally::default();
    let mbox = TruncationBox::uniform(n, 6);
    for k in 0..samples {
        let field = field_for(k);
        let r = ring_sample(&mut rng, field, n, 2);
        let m = random_element_within(&mut rng, field, shape, &mbox, &[3; 8][..n], 5);
        for j in 0..n {
            let lhs = derivation_act(j, &ring_act(&r, &m).unwrap()).unwrap();
            let a = ring_act(&derivation_act(j, &r).unwrap(), &m).unwrap();
            let b = ring_act(&r, &derivation_act(j, &m).unwrap()).unwrap();
            let rhs = &a + &b;
            let ok = lhs == rhs && lhs.is_exact() && rhs.is_exact();
            t.record(ok, || format!("j = {j}, r = {}, m = {}", serialize_element(&r), serialize_element(&m)));
        }
    }
    t.finish("algebra.leibniz")
}

/// `d_i d_j = d_j d_i` and `d_j(X_j m) - X_j d_j(m) = m`.
pub fn weyl_check(seed: u64, shape: &ModuleShape, samples: usize) -> InvariantResult {
    let n = shape.arity();
    let mut rng = stream(seed, 4);
    let mut t = Tally::default();
    let mbox = TruncationBox::uniform(n, 6);
    for k in 0..samples {
        let field = field_for(k);
        let m = random_element_within(&mut rng, field, shape, &mbox, &[3; 8][..n], 5);
        for i in 0..n {
            for j in 0..n {
                let ij = derivation_act(i, &derivation_act(j, &m).unwrap()).unwrap();
                let ji = derivation_act(j, &derivation_act(i, &m).unwrap()).unwrap();
                t.record(ij == ji && ij.is_exact(), || format!("i = {i}, j = {j}, m = {}", serialize_element(&m)));
            }
            let x = var(field, n, i);
            let first = derivation_act(i, &ring_act(&x, &m).unwrap()).unwrap();
            let second = ring_act(&x, &derivation_act(i, &m).unwrap()).unwrap();
            let bracket = &first - &second;
            t.record(bracket == m && bracket.is_exact(), || format!("[d, X] at j = {i}, m = {}", serialize_element(&m)));
        }
    }
    t.finish("algebra.weyl")
}

/// `parse(serialize(e)) = e` on random elements of every shape, both fields.
pub fn round_trip_check(seed: u64, samples: usize) -> InvariantResult {
    let mut rng = stream(seed, 5);
    let mut t = Tally::default();
    for k in 0..samples {
        let n = rng.random_range(1..=4);
        let shapes = all_shapes(n);
        let shape = &shapes[rng.random_range(0..shapes.len())];
        let field = if k % 3 == 2 { Field::Prime(7) } else { Field::Rational };
        let bounds = TruncationBox((0..n).map(|_| rng.random_range(0..=5)).collect());
        let e = random_element(&mut rng, field, shape, &bounds, 7);
        let text = serialize_element(&e);
        let ok = parse_element(&text, shape, &bounds, field).is_ok_and(|back| back == e);
        t.record(ok, || format!("{shape}: {text}"));
    }
    t.finish("io.round_trip")
}

/// Distinct canonical elements of one shape and box serialize differently.
pub fn injectivity_check(seed: u64, samples: usize) -> InvariantResult {
    let mut rng = stream(seed, 6);
    let mut t = Tally::default();
    let shape = ModuleShape::matlis_dual(2, 1);
    let bounds = TruncationBox::uniform(2, 2);
    let mut seen: BTreeMap<String, Element> = BTreeMap::new();
    for _ in 0..samples {
        let e = random_element(&mut rng, Field::Rational, &shape, &bounds, 3);
        let text = serialize_element(&e);
        let ok = seen.get(&text).is_none_or(|prev| *prev == e);
        t.record(ok, || text.clone());
        seen.entry(text).or_insert(e);
    }
    t.finish("io.injectivity")
}

/// Element documents read back to the same element and re-serialize byte-identically.
pub fn document_round_trip_check(seed: u64, samples: usize) -> InvariantResult {
    let mut rng = stream(seed, 7);
    let mut t = Tally::default();
    for k in 0..samples {
        let n = rng.random_range(1..=3);
        let shapes = all_shapes(n);
        let shape = &shapes[rng.random_range(0..shapes.len())];
        let field = if k % 2 == 0 { Field::Rational } else { Field::Prime(13) };
        let bounds = TruncationBox::uniform(n, 3);
        let e = random_element(&mut rng, field, shape, &bounds, 6);
        let e = if rng.random_bool(0.3) { e.mark_inexact() } else { e };
        let text = write_document(&Document::element(&e));
        let ok = read_document(&text)
            .ok()
            .and_then(|d| d.into_element().ok())
            .is_some_and(|back| back == e && back.is_exact() == e.is_exact() && write_document(&Document::element(&back)) == text);
        t.record(ok, || serialize_element(&e));
    }
    t.finish("io.document_round_trip")
}

// --- cech --------------------------------------------------------------------

pub fn complex_check(max_n: usize, window: u64) -> InvariantResult {
    let mut t = Tally::default();
    for n in 1..=max_n {
        for i in 1..=n {
            for a in window_degrees(n, window) {
                let p = CechDegreePiece::build(n, i, &a).expect("valid indices");
                let euler = |v: &[usize]| -> i64 {
                    v.iter().enumerate().map(|(l, &d)| if l % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
                };
                let ok = p.is_complex() && euler(&p.dims()) == euler(&p.cohomology_dims());
                t.record(ok, || format!("n = {n}, i = {i}, a = {a}"));
            }
        }
    }
    t.finish("cech.complex_and_euler")
}

pub fn realization_check(max_n: usize, window: u64) -> InvariantResult {
    let mut t = Tally::default();
    for n in 1..=max_n {
        for i in 1..=n {
            let table = verify_realization(n, i, window).expect("valid indices");
            t.record(table.passed, || format!("n = {n}, i = {i}: {:?}", table.mismatches.first()));
        }
    }
    t.finish("cech.realization")
}

pub fn equivariance_invariant(max_n: usize, window: u64) -> InvariantResult {
    let mut t = Tally::default();
    for n in 1..=max_n {
        for i in 1..=n {
            let report = equivariance_check(n, i, window).expect("valid indices");
            t.record(report.passed() && report.checked > 0, || {
                format!("n = {n}, i = {i}: {:?}", report.mismatches.first())
            });
        }
    }
    t.finish("cech.equivariance")
}

// --- duality -----------------------------------------------------------------

/// `<r d, m> = <d, r m> = r <d, m>` on random triples over `n <= max_n`, all `i`.
pub fn balance_check(seed: u64, max_n: usize, samples: usize) -> InvariantResult {
    let mut rng = stream(seed, 8);
    let mut t = Tally::default();
    for k in 0..samples {
        let n = rng.random_range(1..=max_n);
        let i = rng.random_range(0..=n);
        let field = field_for(k);
        let primal = ModuleShape::local_cohomology(n, i);
        let bounds = TruncationBox::uniform(n, 4);
        let r = ring_sample(&mut rng, field, n, 2);
        let d = random_element(&mut rng, field, &primal.dual(), &bounds, 6);
        let m = random_element(&mut rng, field, &primal, &bounds, 6);
        let left = matlis_pair(&ring_act(&r, &d).unwrap(), &m).unwrap();
        let middle = matlis_pair(&d, &ring_act(&r, &m).unwrap()).unwrap();
        let right = ring_act(&r, &matlis_pair(&d, &m).unwrap()).unwrap();
        t.record(left == middle && middle == right, || {
            format!("n = {n}, i = {i}, r = {}, d = {}, m = {}", serialize_element(&r), serialize_element(&d), serialize_element(&m))
        });
    }
    t.finish("duality.balance")
}

pub fn perfection_check(max_n: usize, bound: u64) -> InvariantResult {
    let mut t = Tally::default();
    for n in 1..=max_n {
        for i in 0..=n {
            let report = pairing_perfection_check(n, i, bound, Field::Rational).expect("valid indices");
            t.record(report.passed, || format!("n = {n}, i = {i}"));
        }
    }
    t.finish("duality.perfection")
}

/// Every `E`-monomial of the box is hit by its decomposable witness.
pub fn surjectivity_check(max_n: usize, bound: u64) -> InvariantResult {
    let mut t = Tally::default();
    let field = Field::Rational;
    for n in 1..=max_n {
        let bounds = TruncationBox::uniform(n, bound);
        let e_shape = ModuleShape::injective_hull(n);
        for i in 0..=n {
            for target in bounds.monomials(&e_shape) {
                let ok = tensor_surjectivity_witness(&target, i, &bounds, field).is_ok_and(|(m, d)| {
                    let expected =
                        Element::monomial(field, e_shape.clone(), bounds.clone(), target.clone(), field.one()).unwrap();
                    matlis_pair(&d, &m).is_ok_and(|p| p == expected)
                });
                t.record(ok, || format!("n = {n}, i = {i}, target = {target}"));
            }
        }
    }
    t.finish("duality.surjectivity")
}

/// `Γ` of the `E`-shape is everything for every generator set, and of `R` nothing.
pub fn gamma_composition_check(max_n: usize) -> InvariantResult {
    let mut t = Tally::default();
    for n in 1..=max_n {
        for bits in 1u32..1 << n {
            let gens: Vec<usize> = (0..n).filter(|&j| bits >> j & 1 == 1).collect();
            let ok = gamma_of_shape(&ModuleShape::injective_hull(n), &gens) == Torsion::Full
                && gamma_of_shape(&ModuleShape::ring(n), &gens) == Torsion::Zero;
            t.record(ok, || format!("n = {n}, gens = {gens:?}"));
        }
    }
    t.finish("duality.gamma_composition")
}

pub fn regularity_check(max_n: usize, bound: u64) -> InvariantResult {
    let mut t = Tally::default();
    for n in 2..=max_n {
        for i in 1..n {
            let report = regular_on_dual_check(n, i, bound, Field::Rational).expect("valid indices");
            t.record(report.passed, || format!("n = {n}, i = {i}"));
        }
    }
    t.finish("duality.regularity")
}

// --- independence -----------------------------------------------------------

pub fn delta_formula_check(max_n: u32, lmax: u64) -> InvariantResult {
    let mut t = Tally::default();
    for n in 1..=max_n {
        let d = make_d(n, lmax, None, Field::Rational).expect("box fits");
        let seq = delta(&d, 0, lmax).expect("window inside box");
        for l in 0..=lmax {
            let want = DeltaEntry::MinExponent(-(l as i64).pow(n));
            t.record(seq.get(l) == Some(want), || format!("n = {n}, l = {l}"));
        }
    }
    t.finish("independence.delta_formula")
}

/// Reflexivity and symmetry of `~` on the `δ(d_n)` and shifted products.
pub fn shift_relation_check(max_n: u32, lmax: u64, search_bound: u64) -> InvariantResult {
    let mut t = Tally::default();
    let mut seqs = Vec::new();
    for n in 1..=max_n {
        let d = make_d(n, lmax, None, Field::Rational).expect("box fits");
        seqs.push(delta(&d, 0, lmax).expect("window inside box"));
        seqs.push(delta(&d, 2, lmax).expect("window inside box"));
    }
    for (x, s1) in seqs.iter().enumerate() {
        let refl = matches!(shift_equiv_window(s1, s1, search_bound), ShiftOutcome::Witness(_));
        t.record(refl, || format!("reflexivity of sequence {x}"));
        for (y, s2) in seqs.iter().enumerate() {
            let ok = match shift_equiv_window(s1, s2, search_bound) {
                ShiftOutcome::Witness(w) => {
                    verify_witness(s2, s1, w.reversed())
                        && matches!(shift_equiv_window(s2, s1, search_bound), ShiftOutcome::Witness(_))
                }
                other => shift_equiv_window(s2, s1, search_bound) == other,
            };
            t.record(ok, || format!("symmetry of sequences {x}, {y}"));
        }
    }
    t.finish("independence.shift_symmetry")
}

/// No witness between `δ(d_n1)` and `δ(d_n2)` for `n1 != n2`.
pub fn separation_check(max_n: u32, window: u64, search_bound: u64) -> InvariantResult {
    let mut t = Tally::default();
    let seqs: Vec<_> = (1..=max_n)
        .map(|n| {
            let d = make_d(n, window, None, Field::Rational).expect("box fits");
            delta(&d, 0, window).expect("window inside box")
        })
        .collect();
    for (x, s1) in seqs.iter().enumerate() {
        for (y, s2) in seqs.iter().enumerate() {
            if x != y {
                let outcome = shift_equiv_window(s1, s2, search_bound);
                t.record(outcome == ShiftOutcome::NoWitness, || format!("n = {}, {}: {outcome:?}", x + 1, y + 1));
            }
        }
    }
    t.finish("independence.separation")
}

/// Random coefficient lists for independence trials: `m` uniform in
/// `1..=max_m`, each entry of total degree `<= 3` with coefficients in
/// `[-2, 2]`, at least one entry nonzero.
pub fn random_coefficients(rng: &mut impl Rng, max_m: usize) -> Vec<Element> {
    let m = rng.random_range(1..=max_m);
    loop {
        let list: Vec<Element> =
            (0..m).map(|_| random_polynomial(rng, Field::Rational, 2, 3, 2, 0.5)).collect();
        if list.iter().any(|r| !r.is_zero()) {
            return list;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrialOutcome {
    Certified(Box<IndependenceCertificate>),
    Inconclusive { required_lmax: Option<u64> },
    Failed(String),
}

pub fn run_trial(r_list: &[Element], lmax: u64) -> TrialOutcome {
    match independence_certificate(r_list, lmax) {
        Ok(c) => TrialOutcome::Certified(Box::new(c)),
        Err(IndependenceError::Inconclusive { required_lmax, .. }) => TrialOutcome::Inconclusive { required_lmax },
        Err(e) => TrialOutcome::Failed(e.to_string()),
    }
}

/// The fitted tail parameters agree with the decomposition: exactly when the
/// fit is unique, and through `a + b` in the linear case.
pub fn fit_matches(c: &IndependenceCertificate) -> bool {
    match c.fitted {
        Some(f) if c.fit_unique => f == (c.a, c.b),
        Some((fa, fb)) => c.m0 == 1 && fa + fb == c.a + c.b,
        None => false,
    }
}

/// Certified trials have nonzero sums and fitted parameters equal to the
/// decomposition of the last nonzero coefficient; the rest are inconclusive.
pub fn certificate_soundness_check(seed: u64, trials: usize, lmax: u64) -> InvariantResult {
    let mut rng = stream(seed, 9);
    let mut t = Tally::default();
    for _ in 0..trials {
        let r_list = random_coefficients(&mut rng, 3);
        let ok = match run_trial(&r_list, lmax) {
            TrialOutcome::Certified(c) => c.sum_nonzero && fit_matches(&c),
            TrialOutcome::Inconclusive { .. } => true,
            TrialOutcome::Failed(_) => false,
        };
        t.record(ok, || r_list.iter().map(serialize_element).collect::<Vec<_>>().join(" ; "));
    }
    t.finish("independence.certificate_soundness")
}

// --- suites ------------------------------------------------------------------

fn algebra_suite(seed: u64) -> Vec<InvariantResult> {
    let shapes: Vec<ModuleShape> = (1..=3).flat_map(all_shapes).collect();
    let merge = |name: &str, f: &dyn Fn(&ModuleShape) -> InvariantResult| {
        let mut t = Tally::default();
        for s in &shapes {
            let r = f(s);
            t.instances += r.instances;
            t.failures += r.failures;
            if t.first_failure.is_none() {
                t.first_failure = r.first_failure.map(|f| format!("{s}: {f}"));
            }
        }
        t.finish(name)
    };
    vec![
        merge("algebra.associativity", &|s| associativity_check(seed, s, 20)),
        merge("algebra.bilinearity", &|s| bilinearity_check(seed, s, 20)),
        merge("algebra.leibniz", &|s| leibniz_check(seed, s, 20)),
        merge("algebra.weyl", &|s| weyl_check(seed, s, 20)),
    ]
}

pub fn run_suite(suite: Suite, seed: u64) -> CheckReport {
    let invariants: Vec<InvariantResult> = match suite {
        Suite::Algebra => algebra_suite(seed),
        Suite::Cech => vec![complex_check(4, 2), realization_check(4, 4), equivariance_invariant(4, 3)],
        Suite::Duality => vec![
            balance_check(seed, 3, 100),
            perfection_check(3, 3),
            surjectivity_check(3, 3),
            gamma_composition_check(4),
            regularity_check(4, 4),
        ],
        Suite::Independence => vec![
            delta_formula_check(5, 20),
            shift_relation_check(4, 16, 5),
            separation_check(4, 12, 5),
            certificate_soundness_check(seed, 50, 30),
        ],
        Suite::Io => vec![round_trip_check(seed, 300), injectivity_check(seed, 300), document_round_trip_check(seed, 100)],
        Suite::All => [Suite::Algebra, Suite::Cech, Suite::Duality, Suite::Independence, Suite::Io]
            .into_iter()
            .flat_map(|s| run_suite(s, seed).invariants)
            .collect(),
    };
    let passed = invariants.iter().all(|r| r.passed);
    CheckReport { suite, seed, invariants, passed }
}
