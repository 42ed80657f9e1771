//! Verification suites behind `verify-paper`.

use gradcon::contraction::{
    apply_normalization, classify, contract_unchecked, find_normalization, make_normal_form, make_normal_form_roots,
    merge_supports, merge_witness, check_admissible, check_general, sample_admissible, split_epsilon, AdmissibleMap,
    ClassDescriptor, NormalForm,
};
use gradcon::exactnum::{Field, Scalar};
use gradcon::fano::{all_collineations, p, Line};
use gradcon::invariants::{killing, verify_table};
use gradcon::liealg::{ad_square_matrix, build_algebra, AlgebraKind};
use gradcon::linalg::Poly;
use gradcon::nicesets::representative;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    Table,
    Normalforms,
    Merge,
    Real,
    Spectra,
    All,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub passes: bool,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub data: Value,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport { suite, passes: true, checked: 0, failed: 0, failures: Vec::new(), data: Value::Null }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            self.passes = false;
            self.failures.push(what());
        }
    }
}

pub fn run(scope: Scope, samples: usize, seed: u64) -> Vec<SuiteReport> {
    let all = [Scope::Table, Scope::Normalforms, Scope::Merge, Scope::Real, Scope::Spectra];
    let selected: Vec<Scope> = if scope == Scope::All { all.to_vec() } else { vec![scope] };
    selected
        .into_iter()
        .map(|s| match s {
            Scope::Table => table(samples, seed),
            Scope::Normalforms => normal_forms(samples, seed),
            Scope::Merge => merge(),
            Scope::Real => real(),
            Scope::Spectra => spectra(samples, seed),
            Scope::All => unreachable!(),
        })
        .collect()
}

fn table(samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("table");
    let mut rows = Vec::new();
    for kind in [AlgebraKind::B3, AlgebraKind::D4] {
        match verify_table(kind, samples, seed) {
            Ok(table) => {
                for row in table {
                    rep.record(row.passes, || format!("{kind} T{}: {:?}", row.row, row.mismatches));
                    rows.push(serde_json::to_value(&row).expect("row serializes"));
                }
            }
            Err(e) => rep.record(false, || format!("{kind}: {e}")),
        }
    }
    rep.data = Value::Array(rows);
    rep
}

fn normal_forms(samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("normalforms");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cols = all_collineations();
    for n in 0..samples {
        let id = (n % 24) as u8 + 1;
        let sigma = &cols[rng.gen_range(0..cols.len())];
        let eps = sample_admissible(sigma.act_on_set(representative(id)), Field::Complex, &mut rng);
        let ok = find_normalization(&eps).is_ok_and(|(nf, alpha)| {
            apply_normalization(&eps.to_roots(), &alpha).ok() == make_normal_form_roots(&nf).ok()
        });
        rep.record(ok, || format!("T{id}: no exact witness for {eps:?}"));
    }
    let (i, j, k) = (p(1), p(2), p(3));
    let s = Scalar::from;
    let nf = |f: NormalForm| find_normalization(&make_normal_form(&f).unwrap()).map(|x| x.0).ok();
    let cls = |f: NormalForm| classify(&make_normal_form(&f).unwrap()).ok();
    let relations = [
        ("beta λ ↔ −λ", nf(NormalForm::beta(s(2), s(3), i, j, k)) == nf(NormalForm::beta(s(-2), s(3), i, j, k))),
        ("beta λ′ ↔ −λ′", nf(NormalForm::beta(s(2), s(3), i, j, k)) == nf(NormalForm::beta(s(2), s(-3), i, j, k))),
        ("mu λ ↔ −λ", nf(NormalForm::mu(s(5), i, j, k)) == nf(NormalForm::mu(s(-5), i, j, k))),
        (
            "eta λ ↔ 1/λ",
            cls(NormalForm::eta(s(2), i, j, k)) == cls(NormalForm::eta(Scalar::from_frac(1, 2), i, j, k)),
        ),
        ("mu 2 ≁ 3", cls(NormalForm::mu(s(2), i, j, k)) != cls(NormalForm::mu(s(3), i, j, k))),
    ];
    for (name, ok) in relations {
        rep.record(ok, || format!("relation failed: {name}"));
    }
    rep
}

fn merge() -> SuiteReport {
    let mut rep = SuiteReport::new("merge");
    let mut data = Vec::new();
    for kind in [AlgebraKind::B3, AlgebraKind::D4] {
        let alg = build_algebra(kind, Field::Complex).expect("algebra builds");
        let ok = merge_witness(&alg).is_ok_and(|(theta, ok)| ok && theta.is_graded(&alg));
        rep.record(ok, || format!("{kind}: θ is not an isomorphism"));
        data.push(json!({"algebra": kind, "theta_isomorphism": ok}));
    }
    let (t10, t8) = merge_supports();
    let c = classify(&AdmissibleMap::indicator(t10));
    rep.record(c == Ok(ClassDescriptor::Merged { id: 8, support_class: 10 }), || format!("classify(T10) = {c:?}"));
    rep.data = json!({"source": t10.to_string(), "target": t8.to_string(), "algebras": data});
    rep
}

fn real() -> SuiteReport {
    let mut rep = SuiteReport::new("real");
    let mut data = Vec::new();
    for (kind, index) in [(AlgebraKind::G2, -14), (AlgebraKind::B3, -21), (AlgebraKind::D4, -28)] {
        let alg = build_algebra(kind, Field::Real).expect("algebra builds");
        let compact = killing(&alg).signature.expect("real algebra");
        rep.record(compact.index() == index && compact.negative == alg.dim(), || {
            format!("{kind}: compact signature {compact:?}")
        });
        let eps = split_epsilon(Line::through(p(1), p(2)));
        let valid = check_admissible(&eps).is_ok() && check_general(&eps.embed(), &alg);
        let l = contract_unchecked(&alg, &eps);
        let k = killing(&l);
        let split = k.signature.clone().expect("real algebra");
        rep.record(valid && l.is_lie() && k.rank == alg.dim() && split.positive > 0, || {
            format!("{kind}: split contraction signature {split:?}")
        });
        data.push(json!({"algebra": kind, "compact": compact, "split": split}));
    }
    rep.data = Value::Array(data);
    rep
}

fn spectra(samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("spectra");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let expected = |roots: &[Scalar]| roots.iter().fold(Poly::new(vec![Scalar::from(1)]), |acc, s| acc.mul(&Poly::linear(s * s)));
    let triples = [(p(1), p(2), p(3)), (p(3), p(4), p(1)), (p(6), p(2), p(7))];
    for n in 0..samples {
        let [a, b, c, d]: [Scalar; 4] = std::array::from_fn(|_| Field::Complex.sample(&mut rng));
        let (i, j, k) = triples[n % triples.len()];
        let m = ad_square_matrix(AlgebraKind::D4, [&a, &b, &c, &d], i, j, k).expect("generic triple");
        rep.record(m.charpoly() == expected(&[&a + &d, &a - &d, &b + &c, &b - &c]), || {
            format!("d4 spectrum at a={a} b={b} c={c} d={d}")
        });
        let m = ad_square_matrix(AlgebraKind::B3, [&a, &b, &c, &d], i, j, k).expect("generic triple");
        rep.record(m.charpoly() == expected(&[a.clone(), &b + &c, &b - &c]), || format!("b3 spectrum at a={a} b={b} c={c}"));
    }
    rep
}
