//! Randomized check harness. Each suite runs seeded trials of an exact
//! identity (band-sum additivity, the linking-form identities, oracle
//! equivalences, algebraic invariant properties) and reports every
//! counterexample with the seed that reproduces it. Trial seeds are derived
//! from the master seed by index, so runs are bit-reproducible regardless of
//! scheduling.

use std::time::{Duration, Instant};

use compose::{band_sum, congruence_transform, double, LinkPresentation1, LinkPresentation2};
use concord1::prop12_report;
use exactalg::{
    derive_seed, det_int, inertia, random_unimodular, IntMatrix, SplitMix64,
};
use num::{BigInt, BigRational, Integer, One, Signed};
use obstruct::{fox_milnor, metabolizer_search, MetabolizerOutcome};
use oracles::{arf_by_counting, det_cofactor_int, inertia_by_sturm, CountingArf};
use seifert::{alexander, arf, conway, signature, Arf, Epsilon, SeifertForm};

use crate::catalog::{catalog, Payload};
use crate::random::{random_form, random_matrix};

/// Entry bound for the component matrices the harness samples. Bound 1 keeps
/// the unimodularity acceptance rate above a fraction of a percent even at
/// rank 8 with epsilon -1, where larger entries make unit determinants
/// vanishingly rare.
const COMPONENT_ENTRY_BOUND: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    pub seed: u64,
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub trials: usize,
    pub failures: Vec<CheckFailure>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn run_trials(
    name: &str,
    trials: usize,
    master_seed: u64,
    mut trial: impl FnMut(u64, &mut Vec<CheckFailure>),
) -> CheckReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    for index in 0..trials {
        trial(derive_seed(master_seed, index as u64), &mut failures);
    }
    CheckReport {
        name: name.to_string(),
        trials,
        failures,
        elapsed: started.elapsed(),
    }
}

fn brief_matrix(m: &IntMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn brief_form(f: &SeifertForm) -> String {
    format!("eps {} {}", f.epsilon(), brief_matrix(f.matrix()))
}

/// Draws a valid form, or records the sampling shortfall as a failure so the
/// report never silently shrinks.
fn sampled_form(
    rank: usize,
    epsilon: Epsilon,
    seed: u64,
    failures: &mut Vec<CheckFailure>,
) -> Option<SeifertForm> {
    match random_form(rank, epsilon, COMPONENT_ENTRY_BOUND, seed) {
        Ok(f) => Some(f),
        Err(e) => {
            failures.push(CheckFailure {
                seed,
                inputs: format!("rank {rank}, epsilon {epsilon}"),
                expected: "a valid sampled form".to_string(),
                got: e.to_string(),
            });
            None
        }
    }
}

fn even_rank(rng: &mut SplitMix64, rank_max: usize) -> usize {
    2 * rng.below(rank_max as u64 / 2 + 1) as usize
}

/// Band-sum additivity of Arf (epsilon +1) or signature (epsilon -1) over
/// random two-component presentations.
pub fn check_additivity(
    epsilon: Epsilon,
    trials: usize,
    rank_max: usize,
    coupling_bound: i64,
    seed: u64,
) -> CheckReport {
    let name = match epsilon {
        Epsilon::Plus => "arf-additivity",
        Epsilon::Minus => "signature-additivity",
    };
    run_trials(name, trials, seed, |trial_seed, failures| {
        let mut rng = SplitMix64::new(derive_seed(trial_seed, 0));
        let rank1 = even_rank(&mut rng, rank_max);
        let rank2 = even_rank(&mut rng, rank_max);
        let Some(f1) = sampled_form(rank1, epsilon, derive_seed(trial_seed, 1), failures) else {
            return;
        };
        let Some(f2) = sampled_form(rank2, epsilon, derive_seed(trial_seed, 2), failures) else {
            return;
        };
        let coupling = random_matrix(rank1, rank2, coupling_bound, &mut rng);
        let link = LinkPresentation2::new(f1.clone(), f2.clone(), coupling.clone())
            .expect("components are knots with a shared epsilon");
        let k = band_sum(&link);
        let inputs = || {
            format!(
                "A1 = {}, A2 = {}, B = {}, epsilon {epsilon}",
                brief_matrix(f1.matrix()),
                brief_matrix(f2.matrix()),
                brief_matrix(&coupling)
            )
        };
        match epsilon {
            Epsilon::Plus => {
                let total = arf(&k).expect("epsilon +1 band sum");
                let parts = arf(&f1)
                    .expect("epsilon +1 component")
                    .xor(arf(&f2).expect("epsilon +1 component"));
                if total != parts {
                    failures.push(CheckFailure {
                        seed: trial_seed,
                        inputs: inputs(),
                        expected: format!("Arf {parts}"),
                        got: format!("Arf {total}"),
                    });
                }
            }
            Epsilon::Minus => {
                let total = signature(&k);
                let parts = signature(&f1) + signature(&f2);
                if total != parts {
                    failures.push(CheckFailure {
                        seed: trial_seed,
                        inputs: inputs(),
                        expected: format!("signature {parts}"),
                        got: format!("signature {total}"),
                    });
                }
            }
        }
    })
}

fn ladder_presentation(k: i64) -> LinkPresentation1 {
    let n = (2 * k - 1) as usize;
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        rows[i][i] = 1;
        if i + 1 < n {
            rows[i][i + 1] = 1;
        }
    }
    let empty = SeifertForm::knot(IntMatrix::zeros(0, 0), Epsilon::Plus);
    LinkPresentation1::new(
        SeifertForm::link1(IntMatrix::from_i64_rows(&rows)),
        empty.clone(),
        empty,
    )
    .expect("ladder form is a valid link1 presentation")
}

fn expect_identities_hold(
    p: &LinkPresentation1,
    label: &str,
    seed: u64,
    failures: &mut Vec<CheckFailure>,
) {
    match prop12_report(p) {
        Ok(r) => {
            let ok = r.identity1_holds == Some(true)
                && r.identity2_holds == Some(true)
                && r.violations.is_empty();
            if !ok {
                failures.push(CheckFailure {
                    seed,
                    inputs: label.to_string(),
                    expected: "identity1 = identity2 = true, no violations".to_string(),
                    got: format!(
                        "identity1 {:?}, identity2 {:?}, violations {:?}",
                        r.identity1_holds, r.identity2_holds, r.violations
                    ),
                });
            }
        }
        Err(e) => failures.push(CheckFailure {
            seed,
            inputs: label.to_string(),
            expected: "a concordance report".to_string(),
            got: e.to_string(),
        }),
    }
}

/// The two Arf identities on a family of link1 presentations: the catalog
/// torus link, twist ladders of every linking number, and random split
/// unions padded with a null circle. Odd linking numbers must come back with
/// every derived quantity undefined and no identity claims.
pub fn check_prop12(trials: usize, seed: u64) -> CheckReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut fixed = 0usize;

    for entry in catalog() {
        if let Payload::Link1(p) = &entry.payload {
            fixed += 1;
            expect_identities_hold(p, entry.name, seed, &mut failures);
        }
    }

    for k in 1..=8i64 {
        fixed += 1;
        let p = ladder_presentation(k);
        let label = format!("(2,{}) twist ladder", 2 * k);
        match prop12_report(&p) {
            Ok(r) if k % 2 == 0 => {
                if r.lk != BigInt::from(k)
                    || r.identity1_holds != Some(true)
                    || r.identity2_holds != Some(true)
                {
                    failures.push(CheckFailure {
                        seed,
                        inputs: label,
                        expected: format!("lk {k}, both identities true"),
                        got: format!(
                            "lk {}, identity1 {:?}, identity2 {:?}",
                            r.lk, r.identity1_holds, r.identity2_holds
                        ),
                    });
                }
            }
            Ok(r) => {
                let silent = r.arf_l == Arf::Undefined
                    && r.beta_star.is_none()
                    && r.lambda_mod2.is_none()
                    && r.identity1_holds.is_none()
                    && r.identity2_holds.is_none();
                if !silent {
                    failures.push(CheckFailure {
                        seed,
                        inputs: label,
                        expected: "odd linking: undefined Arf and no identity claims".to_string(),
                        got: format!("{r:?}"),
                    });
                }
            }
            Err(e) => failures.push(CheckFailure {
                seed,
                inputs: label,
                expected: "a concordance report".to_string(),
                got: e.to_string(),
            }),
        }
    }

    for index in 0..trials {
        let trial_seed = derive_seed(seed, index as u64);
        let mut rng = SplitMix64::new(derive_seed(trial_seed, 0));
        let rank1 = even_rank(&mut rng, 4);
        let rank2 = even_rank(&mut rng, 4);
        let Some(f1) =
            sampled_form(rank1, Epsilon::Plus, derive_seed(trial_seed, 1), &mut failures)
        else {
            continue;
        };
        let Some(f2) =
            sampled_form(rank2, Epsilon::Plus, derive_seed(trial_seed, 2), &mut failures)
        else {
            continue;
        };
        let padded = IntMatrix::block_diag(
            &IntMatrix::block_diag(f1.matrix(), f2.matrix()),
            &IntMatrix::zeros(1, 1),
        );
        let p = LinkPresentation1::new(SeifertForm::link1(padded), f1.clone(), f2.clone())
            .expect("split union with a null circle is a link1 presentation");
        let label = format!(
            "split union of {} and {} plus null circle",
            brief_form(&f1),
            brief_form(&f2)
        );
        expect_identities_hold(&p, &label, trial_seed, &mut failures);
    }

    CheckReport {
        name: "prop12-identities".to_string(),
        trials: trials + fixed,
        failures,
        elapsed: started.elapsed(),
    }
}

/// Every epsilon +1 form the oracle suite feeds to the Arf/counting
/// comparison: the catalog entries plus block-sum composites up to rank 10.
fn arf_test_set() -> Vec<(String, SeifertForm)> {
    let mut set: Vec<(String, SeifertForm)> = Vec::new();
    for entry in catalog() {
        let f = entry.payload.underlying_form();
        if f.epsilon() == Epsilon::Plus {
            set.push((entry.name.to_string(), f));
        }
    }
    let k91 = catalog()
        .into_iter()
        .find(|e| e.name == "prop91_K")
        .expect("catalog entry")
        .payload
        .underlying_form();
    let trefoil = SeifertForm::knot(
        IntMatrix::from_i64_rows(&[vec![-1, 1], vec![0, -1]]),
        Epsilon::Plus,
    );
    let doubled = double(&k91).expect("knot form");
    set.push((
        "prop91_K + trefoil".to_string(),
        SeifertForm::knot(
            IntMatrix::block_diag(k91.matrix(), trefoil.matrix()),
            Epsilon::Plus,
        ),
    ));
    set.push(("double(prop91_K)".to_string(), doubled.clone()));
    set.push((
        "double(prop91_K) + trefoil".to_string(),
        SeifertForm::knot(
            IntMatrix::block_diag(doubled.matrix(), trefoil.matrix()),
            Epsilon::Plus,
        ),
    ));
    set
}

fn arf_agrees(a: Arf, c: CountingArf) -> bool {
    matches!(
        (a, c),
        (Arf::Zero, CountingArf::Zero)
            | (Arf::One, CountingArf::One)
            | (Arf::Undefined, CountingArf::Undefined)
    )
}

/// Oracle equivalence suites: fraction-free determinant vs cofactor
/// expansion, congruence inertia vs Sturm root counts, and symplectic Arf vs
/// the brute-force zero-counting classifier.
pub fn check_oracles(trials: usize, seed: u64) -> Vec<CheckReport> {
    let det = run_trials("det-vs-cofactor", trials, seed, |trial_seed, failures| {
        let mut rng = SplitMix64::new(trial_seed);
        let n = rng.below(7) as usize;
        let m = random_matrix(n, n, 5, &mut rng);
        let fast = det_int(&m).expect("square matrix");
        let slow = det_cofactor_int(&m);
        if fast != slow {
            failures.push(CheckFailure {
                seed: trial_seed,
                inputs: brief_matrix(&m),
                expected: format!("det {slow}"),
                got: format!("det {fast}"),
            });
        }
    });

    let sturm = run_trials("inertia-vs-sturm", trials, seed, |trial_seed, failures| {
        let mut rng = SplitMix64::new(trial_seed);
        let n = rng.below(7) as usize;
        let m = random_matrix(n, n, 5, &mut rng);
        let s = m.add(&m.transpose());
        let fast = inertia(&s).expect("symmetric matrix");
        let slow = inertia_by_sturm(&s);
        if fast != slow {
            failures.push(CheckFailure {
                seed: trial_seed,
                inputs: brief_matrix(&s),
                expected: format!("{slow:?}"),
                got: format!("{fast:?}"),
            });
        }
    });

    let started = Instant::now();
    let mut failures = Vec::new();
    let set = arf_test_set();
    for (label, form) in &set {
        assert!(form.rank() <= 10, "test set stays within rank 10");
        let a = arf(form).expect("test set uses epsilon +1 forms");
        let c = arf_by_counting(form.matrix());
        if !arf_agrees(a, c) {
            failures.push(CheckFailure {
                seed,
                inputs: format!("{label}: {}", brief_form(form)),
                expected: format!("counting oracle {c:?}"),
                got: format!("Arf {a}"),
            });
        }
    }
    let mut counting = run_trials("arf-vs-counting", trials, seed, |trial_seed, failures| {
        let mut rng = SplitMix64::new(derive_seed(trial_seed, 0));
        let rank = even_rank(&mut rng, 8);
        let Some(f) = sampled_form(rank, Epsilon::Plus, derive_seed(trial_seed, 1), failures)
        else {
            return;
        };
        let a = arf(&f).expect("epsilon +1 form");
        let c = arf_by_counting(f.matrix());
        if !arf_agrees(a, c) {
            failures.push(CheckFailure {
                seed: trial_seed,
                inputs: brief_form(&f),
                expected: format!("counting oracle {c:?}"),
                got: format!("Arf {a}"),
            });
        }
    });
    counting.trials += set.len();
    failures.extend(counting.failures);
    let counting = CheckReport {
        name: counting.name,
        trials: counting.trials,
        failures,
        elapsed: started.elapsed(),
    };

    vec![det, sturm, counting]
}

/// Alexander polynomial basics on random valid knot forms: unit value at
/// t = 1 and reciprocality up to a unit.
pub fn check_alexander_basics(trials: usize, seed: u64) -> CheckReport {
    run_trials("alexander-reciprocality", trials, seed, |trial_seed, failures| {
        let mut rng = SplitMix64::new(derive_seed(trial_seed, 0));
        let rank = even_rank(&mut rng, 6);
        let epsilon = if rng.chance(1, 2) {
            Epsilon::Plus
        } else {
            Epsilon::Minus
        };
        let Some(f) = sampled_form(rank, epsilon, derive_seed(trial_seed, 1), failures) else {
            return;
        };
        let delta = alexander(&f).expect("knot form");
        let at_one = delta
            .eval(&BigRational::one())
            .expect("exponents are nonnegative after normalization");
        let reciprocal_ok = delta.reciprocal().eq_up_to_unit(&delta);
        if !at_one.abs().is_one() || !reciprocal_ok {
            failures.push(CheckFailure {
                seed: trial_seed,
                inputs: brief_form(&f),
                expected: "Delta(1) = +-1 and Delta reciprocal up to a unit".to_string(),
                got: format!(
                    "Delta = {}, Delta(1) = {at_one}, reciprocal {}",
                    delta,
                    if reciprocal_ok { "ok" } else { "mismatch" }
                ),
            });
        }
    })
}

/// All four invariants are unchanged by unimodular congruence A -> P^T A P.
pub fn check_congruence_invariance(trials: usize, seed: u64) -> CheckReport {
    run_trials("congruence-invariance", trials, seed, |trial_seed, failures| {
        let mut rng = SplitMix64::new(derive_seed(trial_seed, 0));
        let rank = even_rank(&mut rng, 6);
        let Some(f) = sampled_form(rank, Epsilon::Plus, derive_seed(trial_seed, 1), failures)
        else {
            return;
        };
        let p = random_unimodular(rank, derive_seed(trial_seed, 2));
        let g = congruence_transform(&f, &p).expect("random_unimodular has unit determinant");
        let mut mismatches = Vec::new();
        if signature(&f) != signature(&g) {
            mismatches.push(format!("signature {} vs {}", signature(&f), signature(&g)));
        }
        let (af, ag) = (arf(&f).expect("+1"), arf(&g).expect("+1"));
        if af != ag {
            mismatches.push(format!("arf {af} vs {ag}"));
        }
        let (df, dg) = (alexander(&f).expect("knot"), alexander(&g).expect("knot"));
        if df != dg {
            mismatches.push(format!("alexander {df} vs {dg}"));
        }
        let (cf, cg) = (
            conway(&f).expect("+1").nabla,
            conway(&g).expect("+1").nabla,
        );
        if cf != cg {
            mismatches.push(format!(
                "conway {} vs {}",
                cf.display_with("z"),
                cg.display_with("z")
            ));
        }
        if !mismatches.is_empty() {
            failures.push(CheckFailure {
                seed: trial_seed,
                inputs: format!("{} conjugated by {}", brief_form(&f), brief_matrix(&p)),
                expected: "all four invariants unchanged".to_string(),
                got: mismatches.join("; "),
            });
        }
    })
}

/// Doubles diag(A, -A) look slice to every implemented obstruction: the
/// factorization condition passes and a metabolizer is found within entry
/// bound 1 (the diagonal subspace qualifies).
pub fn check_doubles_slice(trials: usize, seed: u64) -> CheckReport {
    run_trials("double-sliceness", trials, seed, |trial_seed, failures| {
        let mut rng = SplitMix64::new(derive_seed(trial_seed, 0));
        let rank = even_rank(&mut rng, 4);
        let epsilon = if rng.chance(1, 2) {
            Epsilon::Plus
        } else {
            Epsilon::Minus
        };
        let Some(f) = sampled_form(rank, epsilon, derive_seed(trial_seed, 1), failures) else {
            return;
        };
        let d = double(&f).expect("knot form");
        let fm = fox_milnor(&d).expect("degree within default cap");
        let metab = metabolizer_search(&d, 1, 8).expect("even rank within cap");
        let fm_ok = fm.passed();
        let metab_ok = matches!(metab, MetabolizerOutcome::Found { .. });
        if !fm_ok || !metab_ok {
            failures.push(CheckFailure {
                seed: trial_seed,
                inputs: format!("double of {}", brief_form(&f)),
                expected: "factorization Pass and metabolizer Found".to_string(),
                got: format!("factorization {fm:?}, metabolizer {metab:?}"),
            });
        }
    })
}

/// Levine's congruence: Arf is 0 exactly when Delta(-1) is +-1 mod 8.
pub fn check_levine(trials: usize, seed: u64) -> CheckReport {
    run_trials("levine-mod8", trials, seed, |trial_seed, failures| {
        let mut rng = SplitMix64::new(derive_seed(trial_seed, 0));
        let rank = even_rank(&mut rng, 6);
        let Some(f) = sampled_form(rank, Epsilon::Plus, derive_seed(trial_seed, 1), failures)
        else {
            return;
        };
        let a = arf(&f).expect("epsilon +1 knot form");
        let delta = alexander(&f).expect("knot form");
        let at_minus_one = delta
            .eval(&BigRational::from_integer(BigInt::from(-1)))
            .expect("exponents are nonnegative after normalization");
        assert!(at_minus_one.is_integer(), "integer polynomial at t = -1");
        let residue = at_minus_one.to_integer().mod_floor(&BigInt::from(8));
        let pm_one = residue == BigInt::from(1) || residue == BigInt::from(7);
        if (a == Arf::Zero) != pm_one {
            failures.push(CheckFailure {
                seed: trial_seed,
                inputs: brief_form(&f),
                expected: "Arf 0 exactly when Delta(-1) = +-1 mod 8".to_string(),
                got: format!("Arf {a}, Delta(-1) = {at_minus_one} = {residue} mod 8"),
            });
        }
    })
}

/// The four algebraic property suites bundled for the CLI.
pub fn check_properties(trials: usize, seed: u64) -> Vec<CheckReport> {
    vec![
        check_alexander_basics(trials, seed),
        check_congruence_invariance(trials, seed),
        check_doubles_slice(trials, seed),
        check_levine(trials, seed),
    ]
}
