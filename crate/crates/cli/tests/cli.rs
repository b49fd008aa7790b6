use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bilaguerre"))
        .args(args)
        .env_remove("BILAGUERRE_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_prints_canonical_json() {
    let o = run(&["gen", "--n", "1", "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"vars":["x","y"],"terms":[{"e":[0,0],"num":"2","den":"1"},{"e":[1,0],"num":"-2","den":"1"},{"e":[0,1],"num":"-2","den":"1"},{"e":[1,1],"num":"1","den":"1"}]}"#
    );
}

#[test]
fn gen_is_route_independent_and_deterministic() {
    let reference = stdout(&run(&["gen", "--n", "3", "--m", "2"]));
    for route in ["explicit", "rodrigues", "x-exp", "y-exp"] {
        let o = run(&["gen", "--n", "3", "--m", "2", "--route", route]);
        assert_eq!(stdout(&o), reference, "route {route}");
    }
}

#[test]
fn eval_at_rational_point() {
    let o = run(&["eval", "--n", "1", "--m", "1", "--x", "1/2", "--y", "-3", "--format", "pretty"]);
    assert_eq!(o.status.code(), Some(0));
    // 2 - 1 + 6 - 3/2
    assert_eq!(stdout(&o).trim(), "11/2");
}

#[test]
fn eval_rejects_decimal_points() {
    let o = run(&["eval", "--n", "1", "--m", "1", "--x", "0.5", "--y", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn main_check_holds() {
    let o = run(&["check", "--statement", "main", "--n", "1", "--m", "1", "--p", "2", "--q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["modulus"], "2");
    assert!(v["witness"].is_null());
}

#[test]
fn violation_exits_one_with_witness() {
    let o = run(&[
        "check", "--statement", "binomial-product", "--m", "2", "--s", "1", "--q", "2", "--i", "2",
        "--no-factorial",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], false);
    assert!(v["witness"].is_object());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["check", "--statement", "main", "--n", "1", "--m", "1", "--p", "2"][..],
        &["check", "--statement", "main", "--n", "1", "--m", "1", "--p", "0", "--q", "2"],
        &["check", "--statement", "nonsense", "--n", "1"],
        &["gen", "--n", "1"],
        &["gen", "--n", "1", "--m", "1", "--route", "taylor"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn rook_table_from_both_routes() {
    let o = run(&["rook", "--n", "2", "--brute"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,k,r_k\n2,0,1\n2,1,4\n2,2,2\n");
    let o = run(&["rook", "--n", "2", "--brute", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["laguerre"], serde_json::json!(["1", "4", "2"]));
    assert_eq!(v["brute"], v["laguerre"]);
}

#[test]
fn sweep_output_is_independent_of_jobs() {
    let args = ["sweep", "--statement", "main", "--max-n", "2", "--max-m", "2", "--max-p", "3", "--max-q", "3"];
    let outputs: Vec<String> = ["1", "2", "5"]
        .iter()
        .map(|j| {
            let mut a = args.to_vec();
            a.extend(["--jobs", j]);
            let o = run(&a);
            assert_eq!(o.status.code(), Some(0));
            stdout(&o)
        })
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let v: serde_json::Value = serde_json::from_str(&outputs[0]).unwrap();
    assert_eq!(v["checked"], 3 * 3 * 3 * 3);
    assert_eq!(v["failed"], 0);
}

#[test]
fn jobs_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_bilaguerre"))
        .args(["sweep", "--statement", "alpha-periodicity", "--max-n", "2", "--max-m", "2", "--max-p", "0", "--max-q", "3"])
        .env("BILAGUERRE_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn pde_residuals_vanish() {
    let o = run(&["pde", "--n", "2", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["zero"], true);
    assert_eq!(run(&["pde", "ode", "--n", "4", "--alpha", "2"]).status.code(), Some(0));
    assert_eq!(run(&["pde", "product", "--n", "2", "--alpha", "1", "--m", "3"]).status.code(), Some(0));
}

#[test]
fn certificate() {
    let o = run(&["cert", "--n", "2", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["conclusion"], "irreducible");
    assert_eq!(v["diagonal_ok"], true);
    assert_eq!(run(&["cert", "--n", "0", "--m", "0"]).status.code(), Some(2));
}
