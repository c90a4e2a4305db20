//! Acceptance battery. Prints one line per criterion and exits non-zero if
//! any criterion fails or overruns its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qcoset::coset::Object;
use qcoset::verify::{
    check_associativity, check_colligation, check_completeness, check_cone, check_foundations,
    check_involution, check_isomorphism, check_structure, check_well_definedness, CheckReport,
    Sizes,
};
use qcoset::{Gf, Result};

const SEED: u64 = 7;

const WELL_DEFINED_TRIALS: u64 = 500;
const ASSOC_RANDOM_TRIPLES: u64 = 200;
const ISO_PAIRS: u64 = 500;
const COLLIGATION_PAIRS: u64 = 200;
const EXPECTED_ORBITS: u64 = 6;

const LIMIT_WELL_DEFINED: Duration = Duration::from_secs(60);
const LIMIT_ASSOC: Duration = Duration::from_secs(120);
const LIMIT_ISO: Duration = Duration::from_secs(120);
const LIMIT_COMPLETENESS: Duration = Duration::from_secs(60);
const LIMIT_COLLIGATION: Duration = Duration::from_secs(30);

struct Outcome {
    trials: u64,
    failures: u64,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome {
            trials: 0,
            failures: 0,
            notes: Vec::new(),
        }
    }

    fn add(&mut self, r: &CheckReport) {
        self.trials += r.trials;
        self.failures += r.failures;
        for w in &r.witnesses {
            self.notes.push(format!("{} witness: {w}", r.name));
        }
    }
}

fn unit_objects() -> Vec<Object> {
    vec![Object::new(0, 1).unwrap(), Object::new(1, 2).unwrap()]
}

fn well_definedness() -> Result<Outcome> {
    let mut out = Outcome::new();
    for q in [2, 3, 4] {
        let r = check_well_definedness(
            &Gf::of_order(q)?,
            Sizes {
                max_block: 2,
                max_pad: 2,
            },
            WELL_DEFINED_TRIALS,
            SEED,
        )?;
        out.add(&r);
    }
    Ok(out)
}

fn associativity() -> Result<Outcome> {
    let mut out = Outcome::new();
    let r = check_associativity(
        &Gf::prime(2)?,
        &unit_objects(),
        1,
        ASSOC_RANDOM_TRIPLES,
        Sizes::default(),
        SEED,
    )?;
    out.notes.push(format!(
        "exhaustive triples {}",
        r.metrics["exhaustive_triples"]
    ));
    out.add(&r);
    Ok(out)
}

fn isomorphism() -> Result<Outcome> {
    let mut out = Outcome::new();
    for q in [2, 3, 4] {
        let r = check_isomorphism(&Gf::of_order(q)?, Sizes::default(), ISO_PAIRS, SEED)?;
        out.add(&r);
    }
    Ok(out)
}

fn completeness() -> Result<Outcome> {
    let mut out = Outcome::new();
    let r = check_completeness(&Gf::prime(2)?, [1, 1, 1, 1, 1, 1])?;
    let orbits = r.metrics["orbits"].as_u64().unwrap_or(0);
    let tables = r.metrics["kappa_tables"].as_u64().unwrap_or(0);
    out.add(&r);
    out.trials += 1;
    if orbits != EXPECTED_ORBITS || tables != EXPECTED_ORBITS {
        out.failures += 1;
    }
    out.notes
        .push(format!("orbits {orbits}, kappa tables {tables}"));
    Ok(out)
}

fn involution() -> Result<Outcome> {
    let mut out = Outcome::new();
    out.add(&check_involution(&Gf::prime(2)?, &unit_objects(), 1)?);
    Ok(out)
}

fn structure() -> Result<Outcome> {
    let mut out = Outcome::new();
    out.add(&check_structure(&Gf::prime(2)?, 2, 2)?);
    Ok(out)
}

fn cone() -> Result<Outcome> {
    let mut out = Outcome::new();
    out.add(&check_cone(&Gf::prime(2)?, 2)?);
    Ok(out)
}

fn colligations() -> Result<Outcome> {
    let mut out = Outcome::new();
    for q in [2, 3, 4, 5] {
        out.add(&check_colligation(
            &Gf::of_order(q)?,
            2,
            3,
            COLLIGATION_PAIRS,
            SEED,
        )?);
    }
    Ok(out)
}

fn foundations() -> Result<Outcome> {
    let mut out = Outcome::new();
    out.add(&check_foundations()?);
    Ok(out)
}

type Criterion = (u32, &'static str, fn() -> Result<Outcome>, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            1,
            "well-definedness",
            well_definedness,
            Some(LIMIT_WELL_DEFINED),
        ),
        (2, "associativity", associativity, Some(LIMIT_ASSOC)),
        (
            3,
            "isomorphism and xi identity",
            isomorphism,
            Some(LIMIT_ISO),
        ),
        (4, "completeness", completeness, Some(LIMIT_COMPLETENESS)),
        (5, "involution", involution, None),
        (6, "structure", structure, None),
        (7, "cone", cone, None),
        (8, "colligations", colligations, Some(LIMIT_COLLIGATION)),
        (9, "foundations", foundations, None),
    ];
    let mut all_ok = true;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let limit_text = limit.map_or("none".to_string(), |l| format!("{}s", l.as_secs()));
        match result {
            Ok(out) => {
                let in_time = limit.is_none_or(|l| elapsed < l);
                let ok = out.failures == 0 && in_time;
                all_ok &= ok;
                println!(
                    "criterion {id} {name}: {} (trials {}, failures {}, {:.2}s, limit {limit_text})",
                    if ok { "PASS" } else { "FAIL" },
                    out.trials,
                    out.failures,
                    elapsed.as_secs_f64()
                );
                for note in out.notes {
                    println!("    {note}");
                }
            }
            Err(e) => {
                all_ok = false;
                println!("criterion {id} {name}: FAIL (error: {e})");
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
