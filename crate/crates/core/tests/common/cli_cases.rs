//! Golden CLI invocations. Each case has a transcript under
//! `tests/golden/<name>.out` recording the exit status, stdout and stderr.

#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: &'static str,
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case { name, args, stdin: "" }
}

const VALID: &str = "tests/golden/inputs/valid.json";
const BAD: &str = "tests/golden/inputs/bad.json";

pub const CASES: &[Case] = &[
    case("partition_conjugate", &["partition", "conjugate", "--mu", "[4,2,1]"]),
    case("partition_dominates", &["partition", "dominates", "--mu", "[1,1,1]", "--nu", "[3]"]),
    case("partition_dominates_false", &["partition", "dominates", "--mu", "[3,3]", "--nu", "[4,1,1]"]),
    case("partition_meet", &["partition", "meet", "--mu", "[3,3]", "--nu", "[4,1,1]"]),
    case("partition_join", &["partition", "join", "--mu", "[3,3]", "--nu", "[4,1,1]"]),
    case("partition_min", &["partition", "min", "--set", "[[3,1],[2,2],[2,1,1]]"]),
    case("partition_min_none", &["partition", "min", "--set", "[[3,3],[4,1,1]]"]),
    case("partition_min_file", &["partition", "min", "--file", "tests/golden/inputs/set.json"]),
    case("partition_meet_size_mismatch", &["partition", "meet", "--mu", "[2]", "--nu", "[1,1,1]"]),
    case("partition_invalid_part", &["partition", "conjugate", "--mu", "[2,0]"]),
    case("jordan_matrix", &["jordan", "matrix", "--mu", "[2,1]"]),
    case("jordan_matrix_table", &["--format", "table", "jordan", "matrix", "--mu", "[3,1]"]),
    case("jordan_type", &["jordan", "type", "--file", "tests/golden/inputs/nilpotent.json"]),
    case("jordan_type_modular", &["jordan", "type", "--file", "tests/golden/inputs/modular.json"]),
    case(
        "jordan_type_not_nilpotent",
        &["jordan", "type", "--matrix", r#"{"rows":2,"cols":2,"entries":[[1,0],[0,0]]}"#],
    ),
    case("jordan_log", &["jordan", "log", "--file", "tests/golden/inputs/unipotent.json"]),
    case("jordan_log_table", &["--format", "table", "jordan", "log", "--file", "tests/golden/inputs/unipotent.json"]),
    case("monodromy_tensor", &["monodromy", "tensor", "--alpha", "[2]", "--beta", "[2]"]),
    case("monodromy_tensor_23", &["monodromy", "tensor", "--alpha", "[2]", "--beta", "[3]"]),
    case("monodromy_dsum", &["monodromy", "dsum", "--alpha", "[2,1]", "--beta", "[3]"]),
    case("monodromy_induce", &["monodromy", "induce", "--alpha", "[2,1]", "--mult", "2"]),
    case("monodromy_total", &["monodromy", "total", "--file", "tests/golden/inputs/blocks.json"]),
    case("strat_validate", &["strat", "validate", "--complex", VALID]),
    case("strat_validate_bad", &["strat", "validate", "--complex", BAD]),
    case("strat_validate_bad_table", &["--format", "table", "strat", "validate", "--complex", BAD]),
    case("strat_stratum", &["strat", "stratum", "--complex", VALID, "--mu", "[2,2]"]),
    case("strat_stratum_table", &["--format", "table", "strat", "stratum", "--complex", VALID, "--mu", "[3,1]"]),
    case("strat_mu", &["strat", "mu", "--complex", VALID, "--point", "x"]),
    case("strat_mu_bad", &["strat", "mu", "--complex", BAD, "--point", "x"]),
    case("strat_minimal_lift", &["strat", "minimal-lift", "--complex", VALID, "--point", "x"]),
    case("strat_minimal_lift_bad", &["strat", "minimal-lift", "--complex", BAD, "--point", "x"]),
    case("strat_minimal_lift_unknown", &["strat", "minimal-lift", "--complex", VALID, "--point", "nowhere"]),
    case("strat_closure", &["strat", "closure", "--complex", VALID, "--point", "x", "--mu", "[2,2]"]),
    case("strat_closure_false", &["strat", "closure", "--complex", VALID, "--point", "y", "--mu", "[2,2]"]),
    case("strat_product", &["strat", "product", "--input", "tests/golden/inputs/product.json"]),
    case(
        "strat_product_table",
        &["--format", "table", "strat", "product", "--input", "tests/golden/inputs/product.json"],
    ),
    case("strat_product_cap", &["strat", "product", "--input", "tests/golden/inputs/product.json", "--cap", "1"]),
    case("moduli_enumerate", &["moduli", "enumerate", "--q", "2", "--r", "1", "--p", "3"]),
    case("moduli_enumerate_table", &["--format", "table", "moduli", "enumerate", "--q", "1", "--r", "1", "--p", "5"]),
    case("moduli_enumerate_cap", &["moduli", "enumerate", "--q", "1", "--r", "2", "--p", "3", "--cap", "1000"]),
    case(
        "moduli_enumerate_cap_raised",
        &["moduli", "enumerate", "--q", "2", "--r", "1", "--p", "3", "--cap", "100000000"],
    ),
    case("moduli_stratify", &["moduli", "stratify", "--q", "1", "--r", "2", "--p", "2", "--a", "1"]),
    case(
        "moduli_stratify_table",
        &["--format", "table", "moduli", "stratify", "--q", "1", "--r", "1", "--p", "5", "--a", "4"],
    ),
    case("moduli_orbits", &["moduli", "orbits", "--q", "1", "--r", "2", "--p", "2"]),
    case("moduli_invalid_modulus", &["moduli", "enumerate", "--q", "1", "--r", "1", "--p", "4"]),
    case("reduced_complement", &["reduced", "complement", "--r", "[2,0,-3]"]),
    case("reduced_complement_file", &["reduced", "complement", "--file", "tests/golden/inputs/ring.json"]),
    case("reduced_complement_table", &["--format", "table", "reduced", "complement", "--r", "[0,0,5]"]),
    Case { name: "reduced_complement_stdin", args: &["reduced", "complement"], stdin: "[0,1]" },
    Case {
        name: "strat_mu_stdin",
        args: &["strat", "mu", "--complex", "-", "--point", "y"],
        stdin: r#"{"n":2,"components":{"k":[1,1]},"points":{"y":["k"]}}"#,
    },
    case("error_parse", &["jordan", "type", "--file", "tests/golden/inputs/malformed.json"]),
    case("error_io", &["jordan", "type", "--file", "tests/golden/inputs/missing.json"]),
    case("error_usage", &["partition", "meet", "--mu", "[1]"]),
    case("error_unknown_subcommand", &["partition", "frobnicate"]),
];

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    /// Transcript stored in the golden file.
    pub fn transcript(&self) -> String {
        format!("exit: {}\n--- stdout\n{}--- stderr\n{}", self.code, self.stdout, self.stderr)
    }
}

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests").join("golden").join(format!("{name}.out"))
}

pub fn run_bin(bin: &Path, args: &[&str], stdin: &str) -> Outcome {
    let mut child = Command::new(bin)
        .args(args)
        .current_dir(manifest_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Outcome {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn run_case(bin: &Path, case: &Case) -> Outcome {
    run_bin(bin, case.args, case.stdin)
}
