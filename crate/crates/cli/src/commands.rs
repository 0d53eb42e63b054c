//! Command implementations.
//!
//! Every command prints its verdict on stdout, complaints about inputs on
//! stderr, and reports through the shared exit-code contract:
//! 0 pass, 1 semantic failure, 2 input error, 3 internal verification
//! failure.

use std::fs;
use std::path::Path;

use outcast_core::choice::{ChoiceError, ChoiceFunction};
use outcast_core::oracle;
use outcast_core::order::{HyperOrder, OrderError};
use outcast_core::subset::{SubsetId, Universe};
use outcast_core::synthesis::{self, SynthesisError};

use crate::format::{to_json, ChoiceFunctionFile, OrderFile};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Decides the Outcast condition for a choice function file.
pub fn check(path: &Path) -> i32 {
    let f = match load_choice(path) {
        Ok(f) => f,
        Err(message) => return input_error(message),
    };
    match f.check_outcast() {
        Ok(()) => {
            println!("OUTCAST");
            EXIT_PASS
        }
        Err(witness) => {
            let u = f.universe();
            println!("NOT OUTCAST");
            println!(
                "witness: A = {}, B = {}",
                u.format_subset(witness.a),
                u.format_subset(witness.b)
            );
            println!(
                "f(A) = {} but f(B) = {}",
                u.format_subset(f.value(witness.a)),
                u.format_subset(f.value(witness.b))
            );
            EXIT_FAIL
        }
    }
}

/// Constructs a hyper-order inducing the function in `path`, self-verifies
/// the round trip, and writes it as an order file.
pub fn synthesize(path: &Path, out: Option<&Path>) -> i32 {
    let f = match load_choice(path) {
        Ok(f) => f,
        Err(message) => return input_error(message),
    };
    let u = f.universe().clone();
    let trace = match synthesis::synthesize_order(&f) {
        Ok(trace) => trace,
        Err(SynthesisError::NotOutcast(witness)) => {
            println!("NOT OUTCAST");
            println!(
                "witness: A = {}, B = {}",
                u.format_subset(witness.a),
                u.format_subset(witness.b)
            );
            return EXIT_FAIL;
        }
        Err(SynthesisError::PrecedenceCycle { cycle }) => {
            println!("NOT REPRESENTABLE");
            let mut chain: Vec<String> = cycle.iter().map(|s| u.format_subset(*s)).collect();
            chain.push(u.format_subset(cycle[0]));
            println!(
                "no hyper-order induces this function; it forces the rank cycle {}",
                chain.join(" < ")
            );
            return EXIT_FAIL;
        }
    };
    if let Err(mismatch) = synthesis::verify_representation(&f, trace.ranks()) {
        eprintln!(
            "internal error: synthesized order fails self-verification at {}",
            u.format_subset(mismatch.subset)
        );
        return EXIT_INTERNAL;
    }
    emit(out, &to_json(&OrderFile::from_order(trace.ranks())))
}

/// Evaluates the choice function induced by an order file and writes it as a
/// choice function file.
pub fn induce(path: &Path, out: Option<&Path>) -> i32 {
    let order = match load_order(path) {
        Ok(order) => order,
        Err(message) => return input_error(message),
    };
    let induced = order.induced_choice();
    emit(out, &to_json(&ChoiceFunctionFile::from_function(&induced)))
}

/// Checks that an order file induces exactly the function in a choice file.
pub fn verify(function_path: &Path, order_path: &Path) -> i32 {
    let f = match load_choice(function_path) {
        Ok(f) => f,
        Err(message) => return input_error(message),
    };
    let order = match load_order(order_path) {
        Ok(order) => order,
        Err(message) => return input_error(message),
    };
    if f.universe() != order.universe() {
        return input_error(format!(
            "universe mismatch: {} names {:?} but {} names {:?}",
            function_path.display(),
            f.universe().names(),
            order_path.display(),
            order.universe().names()
        ));
    }
    match synthesis::verify_representation(&f, &order) {
        Ok(()) => {
            println!("REPRESENTS");
            EXIT_PASS
        }
        Err(mismatch) => {
            let u = f.universe();
            println!(
                "MISMATCH at {}: order induces {}, function chooses {}",
                u.format_subset(mismatch.subset),
                u.format_subset(mismatch.induced),
                u.format_subset(mismatch.expected)
            );
            EXIT_FAIL
        }
    }
}

/// Runs the exhaustive census and prints every report field.
pub fn census(n: usize) -> i32 {
    let report = match oracle::theorem_census(n) {
        Ok(report) => report,
        Err(err) => return input_error(err.to_string()),
    };
    println!("n = {}", report.n);
    println!("total_choice_functions = {}", report.total_choice_functions);
    println!("outcast_count = {}", report.outcast_count);
    println!("total_orders = {}", report.total_orders);
    println!("induced_distinct = {}", report.induced_distinct);
    println!("directions_hold = {}", report.directions_hold);
    if report.directions_hold {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Writes a seeded uniformly random order file.
pub fn random_order(n: usize, seed: u64, out: Option<&Path>) -> i32 {
    let order = match oracle::random_order(n, seed) {
        Ok(order) => order,
        Err(err) => return input_error(err.to_string()),
    };
    emit(out, &to_json(&OrderFile::from_order(&order)))
}

fn input_error(message: String) -> i32 {
    eprintln!("error: {message}");
    EXIT_INPUT
}

fn emit(out: Option<&Path>, contents: &str) -> i32 {
    match out {
        Some(path) => {
            if let Err(err) = fs::write(path, contents) {
                return input_error(format!("cannot write {}: {err}", path.display()));
            }
        }
        None => print!("{contents}"),
    }
    EXIT_PASS
}

fn read_text(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|err| format!("cannot read {}: {err}", path.display()))
}

fn load_choice(path: &Path) -> Result<ChoiceFunction, String> {
    let text = read_text(path)?;
    let file: ChoiceFunctionFile = serde_json::from_str(&text)
        .map_err(|err| format!("{}: not a choice function file: {err}", path.display()))?;
    let universe =
        Universe::new(file.universe.clone()).map_err(|err| format!("{}: {err}", path.display()))?;
    let table: Vec<SubsetId> = file.choice.iter().copied().map(SubsetId::new).collect();
    ChoiceFunction::new(universe.clone(), table).map_err(|err| match err {
        ChoiceError::ChoiceViolation { subset, value } => format!(
            "{}: choice[{}] = {}: {} is not a subset of {}",
            path.display(),
            subset.bits(),
            value.bits(),
            universe.format_subset(value),
            universe.format_subset(subset)
        ),
        other => format!("{}: {other}", path.display()),
    })
}

fn load_order(path: &Path) -> Result<HyperOrder, String> {
    let text = read_text(path)?;
    let file: OrderFile = serde_json::from_str(&text)
        .map_err(|err| format!("{}: not an order file: {err}", path.display()))?;
    let universe =
        Universe::new(file.universe.clone()).map_err(|err| format!("{}: {err}", path.display()))?;
    HyperOrder::new(universe, file.ranks.clone()).map_err(|err| match err {
        OrderError::RankOutOfRange { index, value } => format!(
            "{}: ranks[{index}] = {value} is out of range",
            path.display()
        ),
        OrderError::DuplicateRank { index, value } => format!(
            "{}: ranks[{index}] = {value} duplicates an earlier rank",
            path.display()
        ),
        other => format!("{}: {other}", path.display()),
    })
}
