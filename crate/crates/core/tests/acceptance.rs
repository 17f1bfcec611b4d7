//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with a
//! nonzero status if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use codeal::bases::primitive_characterization_violations;
use codeal::{
    buchberger, circuits, closed_form_gb, graver, is_member, is_primitive, is_singleton_code,
    rank_condition, universal_gb_binary, Binomial, BinomialIdealPresentation, LinearCode,
};
use common::*;
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: &[String], ok_detail: String) -> Outcome {
    match failures.first() {
        None => Outcome {
            passed: true,
            detail: ok_detail,
        },
        Some(first) => Outcome {
            passed: false,
            detail: format!("{} failure(s), first: {first}", failures.len()),
        },
    }
}

fn criterion_1() -> Outcome {
    let code = hamming74();
    let mut failures = Vec::new();
    let wd = code.weight_distribution().unwrap();
    if wd.counts() != [1, 0, 0, 7, 7, 0, 0, 1] {
        failures.push(format!("weight distribution {wd}"));
    }
    let ugb = universal_gb_binary(&code).unwrap();
    let mut by_weight: BTreeMap<usize, usize> = BTreeMap::new();
    for b in ugb.elements() {
        let key = if b.is_field_relation(2) {
            0
        } else {
            b.word(code.field()).weight()
        };
        *by_weight.entry(key).or_default() += if b.is_one_sided() { 1 } else { 2 };
    }
    let expected = BTreeMap::from([(0, 7), (3, 7 * 6), (4, 7 * 14)]);
    if ugb.oriented_count() != 147 || by_weight != expected {
        failures.push(format!(
            "oriented {} by weight {by_weight:?}",
            ugb.oriented_count()
        ));
    }
    if !is_singleton_code(&code).unwrap().is_singleton {
        failures.push("not classified as Singleton".into());
    }
    outcome(
        &failures,
        format!(
            "{wd}; universal basis 147 = 7 + 42 + 98 oriented, {} unordered; Singleton",
            ugb.unordered_count()
        ),
    )
}

fn criterion_2() -> Outcome {
    let code = ex1();
    let mut failures = Vec::new();
    let listed_circuits = parse_set(
        &[
            "b - c^6",
            "a - c^3",
            "c^6 - b",
            "b^2 - c^5",
            "c^3 - a",
            "a^2 - b",
            "b - a^2",
            "a^3 - c^2",
            "c^2 - a^3",
            "a^5 - c",
            "c - a^5",
            "c^5 - b^2",
            "b^3 - c^4",
            "c^4 - b^3",
            "b^4 - c^3",
            "b^4 - a",
            "c^3 - b^4",
            "b^5 - c^2",
            "a - b^4",
            "c^2 - b^5",
            "b^6 - c",
            "c - b^6",
        ],
        3,
    );
    let c = circuits(&code).unwrap();
    let listed: BTreeSet<Binomial> = listed_circuits.iter().map(Binomial::canonical).collect();
    if c.unordered_set() != listed || c.oriented_count() != 22 || c.unordered_count() != 11 {
        failures.push(format!(
            "circuits: {} oriented, {} unordered",
            c.oriented_count(),
            c.unordered_count()
        ));
    }
    for (s, expected) in [
        ("a^3 - b^5", false),
        ("a^2 - b", true),
        ("b^6 - a^5", false),
        ("a*c^4 - 1", true),
    ] {
        let got = is_primitive(&Binomial::parse(s, 3).unwrap(), &code).unwrap();
        if got != expected {
            failures.push(format!("is_primitive({s}) = {got}"));
        }
    }
    let extra = [
        "b*c - 1",
        "a^2*c - 1",
        "a*b^3 - 1",
        "b^2 - a*c^2",
        "a*b - c^2",
        "b^3 - a*c",
        "a*c^2 - b^2",
        "c^2 - a*b",
        "a*b^2 - c",
        "a*c - b^3",
        "c - a*b^2",
        "a^7 - 1",
        "b^7 - 1",
        "c^7 - 1",
    ];
    let universal: Vec<Binomial> = listed_circuits
        .into_iter()
        .chain(parse_set(&extra, 3))
        .collect();
    for b in &universal {
        if !is_member(b, &code) || !is_primitive(b, &code).unwrap() {
            failures.push(format!(
                "listed universal element {b} is not a primitive member"
            ));
        }
    }
    outcome(
        &failures,
        format!("22 circuits match; 4 primitivity verdicts match; {} listed universal elements are primitive members", universal.len()),
    )
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut corpus: BTreeMap<(u64, Vec<Vec<u64>>), LinearCode> = BTreeMap::new();
    for &p in &[2u64, 3, 5, 7] {
        let target = corpus.len() + 60;
        while corpus.len() < target {
            let n = rng.gen_range(1..=5);
            let k = rng.gen_range(1..=n.min(3));
            if let Some(code) = random_code(&mut rng, p, n, k) {
                corpus.insert((p, code.generator().rref().reduced.row_vecs()), code);
            }
        }
    }
    let mut failures = Vec::new();
    let mut checks = 0;
    for code in corpus.values() {
        let pres = BinomialIdealPresentation::of_code(code);
        for j in code.information_sets() {
            for ordered in j.iter().copied().permutations(j.len()) {
                let closed = closed_form_gb(code, &ordered).unwrap();
                let engine = buchberger(&pres, closed.order()).unwrap();
                checks += 1;
                if engine.to_set() != closed.to_set() {
                    failures.push(format!("{code} J = {ordered:?}"));
                }
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{} distinct codes, {checks} ordered information sets agree",
            corpus.len()
        ),
    )
}

fn unit_relations(code: &LinearCode) -> BTreeSet<Binomial> {
    let n = code.length();
    (0..n)
        .map(|i| {
            let mut unit = vec![0; n];
            unit[i] = 1;
            if code.contains(&unit) {
                Binomial::from_vecs(unit, vec![0; n]).unwrap().canonical()
            } else {
                Binomial::power_minus_one(n, i, 2).canonical()
            }
        })
        .collect()
}

fn criterion_4(corpus: &[LinearCode]) -> Outcome {
    let mut failures = Vec::new();
    for code in corpus {
        let mut circ = circuits(code).unwrap().unordered_set();
        circ.extend(unit_relations(code));
        let grav = graver(code).unwrap().unordered_set();
        let ugb = universal_gb_binary(code).unwrap().unordered_set();
        if circ != grav || grav != ugb {
            failures.push(format!("{code} {:?}", code.generator().row_vecs()));
        }
    }
    outcome(
        &failures,
        format!("{} binary codes with n <= 6", corpus.len()),
    )
}

fn criterion_5(corpus: &[LinearCode]) -> Outcome {
    let mut failures = Vec::new();
    for code in corpus {
        let grav = graver(code).unwrap().unordered_set();
        for v in primitive_characterization_violations(code, &grav).unwrap() {
            failures.push(format!("{code} {:?}: {v}", code.generator().row_vecs()));
        }
    }
    outcome(
        &failures,
        format!("{} binary codes with n <= 6", corpus.len()),
    )
}

/// Everything criterion 6 compares across generator matrices of one code.
#[derive(PartialEq, Eq, Debug)]
struct Invariants {
    information_sets: Vec<Vec<usize>>,
    rank_conditions: Vec<bool>,
    singleton: Option<bool>,
    bases: Vec<BTreeSet<Binomial>>,
}

fn invariants(code: &LinearCode, words: &[codeal::Codeword]) -> Invariants {
    let binary = code.field().is_binary();
    let mut bases = vec![
        circuits(code).unwrap().unordered_set(),
        graver(code).unwrap().unordered_set(),
    ];
    if binary {
        bases.push(universal_gb_binary(code).unwrap().unordered_set());
    }
    Invariants {
        information_sets: code.information_sets(),
        rank_conditions: words
            .iter()
            .map(|w| rank_condition(code, w).unwrap())
            .collect(),
        singleton: binary.then(|| is_singleton_code(code).unwrap().is_singleton),
        bases,
    }
}

fn criterion_6(corpus: &[LinearCode]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = Vec::new();
    let mut transforms = 0;
    for code in corpus {
        let words: Vec<_> = code.nonzero_codewords().unwrap().collect();
        let reference = invariants(code, &words);
        for _ in 0..100 {
            let r = random_invertible(&mut rng, code.dimension(), code.p());
            let other = transformed(code, &r);
            transforms += 1;
            if invariants(&other, &words) != reference {
                failures.push(format!(
                    "{code} {:?} under {:?}",
                    code.generator().row_vecs(),
                    r.row_vecs()
                ));
            }
        }
    }
    outcome(
        &failures,
        format!("{} codes, {transforms} transforms", corpus.len()),
    )
}

fn criterion_7() -> Outcome {
    let mut named: Vec<(String, LinearCode)> = (2..=10)
        .map(|n| (format!("parity [{n}, {}]", n - 1), parity_code(n)))
        .collect();
    named.push(("simplex [7, 3]".into(), simplex(3)));
    named.push(("RM(1, 3) [8, 4]".into(), reed_muller_1(3)));
    let mut failures = Vec::new();
    for (name, code) in &named {
        let verdict = is_singleton_code(code).unwrap();
        if !verdict.is_singleton {
            failures.push(format!(
                "{name}: witness {:?}",
                verdict.witness.map(|w| w.to_string())
            ));
        }
    }
    let h15 = hamming(4);
    let verdict = is_singleton_code(&h15).unwrap();
    let recorded = match verdict.witness {
        None => "Singleton".to_string(),
        Some(w) => format!("not Singleton, witness {w}"),
    };
    outcome(
        &failures,
        format!(
            "{} named codes are Singleton; Hamming {h15}: {recorded} (recorded only)",
            named.len()
        ),
    )
}

fn criterion_6_corpus(binary: &[LinearCode]) -> Vec<LinearCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(66);
    let mut corpus = binary.to_vec();
    corpus.push(ex1());
    corpus.push(hamming74());
    for (p, n, k) in [
        (3, 4, 2),
        (3, 5, 2),
        (5, 4, 2),
        (5, 3, 1),
        (7, 4, 2),
        (3, 4, 3),
    ] {
        let mut all = all_codes(p, n, k);
        all.shuffle(&mut rng);
        corpus.extend(all.into_iter().take(5));
    }
    corpus
}

fn main() -> ExitCode {
    let binary = binary_corpus(6);
    let criterion_6_codes = criterion_6_corpus(&binary);
    let criteria: Vec<Criterion> = vec![
        ("1 Hamming [7,4] golden", Box::new(criterion_1)),
        ("2 Example code over F_7 golden", Box::new(criterion_2)),
        ("3 closed form equals Buchberger", Box::new(criterion_3)),
        ("4 binary chain equality", Box::new(|| criterion_4(&binary))),
        (
            "5 primitive binomials characterization",
            Box::new(|| criterion_5(&binary)),
        ),
        (
            "6 generator invariance",
            Box::new(|| criterion_6(&criterion_6_codes)),
        ),
        ("7 known Singleton families", Box::new(criterion_7)),
    ];
    let mut all_passed = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let result = run();
        all_passed &= result.passed;
        println!(
            "{} criterion {name}: {} [{:.1}s]",
            if result.passed { "PASS" } else { "FAIL" },
            result.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
