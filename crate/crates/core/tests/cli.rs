use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str], cache: Option<&Path>) -> (i32, Value) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_resloc"));
    cmd.args(args).env_remove("RESLOC_CACHE");
    if let Some(c) = cache {
        cmd.env("RESLOC_CACHE", c);
    }
    let out = cmd.output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or_else(|e| panic!("not json ({e}): {text}"));
    (out.status.code().unwrap(), v)
}

#[test]
fn direct_n_zero_example() {
    let (code, v) = run(&["direct", "--surface", "P2", "--bundle", "3", "--n", "0", "--m", "8"], None);
    assert_eq!(code, 0);
    assert_eq!(v["coefficient"], "-10");
    assert_eq!(v["t_exponent"], 8);
}

#[test]
fn eval_n_one_plane_cubic_is_zero() {
    let (code, v) = run(
        &["eval", "--n", "1", "--m", "9", "--beta-sq", "9", "--beta-c1", "9", "--c1-sq", "9", "--c2", "3", "--h01", "0", "--h02", "0"],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(v["coefficient"], "0");
}

#[test]
fn eval_k3_plain_and_picard_agree() {
    let k3 = ["--n", "0", "--m", "0", "--beta-sq", "2", "--beta-c1", "0", "--c1-sq", "0", "--c2", "24", "--h02", "1"];
    let (code, one) = run(&[&["eval"][..], &k3].concat(), None);
    assert_eq!(code, 0);
    assert_eq!(one["coefficient"], "3");
    assert_eq!(one["t_exponent"], -1);
    let (code, two) = run(&[&["eval", "--picard"][..], &k3].concat(), None);
    assert_eq!(code, 0);
    assert_eq!(one, two);
}

#[test]
fn validation_errors_exit_one() {
    let (code, v) = run(&["eval", "--n", "0", "--m", "0", "--beta-sq", "1", "--beta-c1", "3", "--c1-sq", "9", "--c2", "3", "--h01", "1"], None);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "validation");
    let (code, v) = run(
        &["eval", "--picard", "--n", "0", "--m", "0", "--beta-sq", "0", "--beta-c1", "0", "--c1-sq", "0", "--c2", "0", "--h01", "2", "--h02", "1"],
        None,
    );
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "unsupported_scope");
    let (code, v) = run(&["direct", "--surface", "Bl9P2", "--bundle", "1", "--n", "0", "--m", "0"], None);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "toric");
    let (code, v) = run(&["direct", "--surface", "P2"], None);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "usage");
    let (code, _) = run(&["check-purity", "--delta", "1", "--chi", "1"], None);
    assert_eq!(code, 1);
}

#[test]
fn wedge_on_standard_abelian_model() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("abelian_std.json");
    std::fs::write(
        &path,
        r#"{"b1":4,"M_beta":[[0,1,0,0],[-1,0,0,0],[0,0,0,1],[0,0,-1,0]],"M_c1":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]],"T_one":{"1234":1},"oriented_basis":true}"#,
    )
    .unwrap();
    let (code, v) = run(&["wedge", "--model", path.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert_eq!(v["w"]["(0,0,1)"], 1);
    assert_eq!(v["w"]["(2,0,0)"], 2);
    assert_eq!(v["pushforward"]["beta.id^2"]["multiple_of_class"], "-2");
    assert_eq!(v["pushforward"]["1.id^4"]["multiple_of_class"], "24");

    std::fs::write(&path, r#"{"b1":3,"M_beta":[],"M_c1":[],"T_one":{},"oriented_basis":true}"#).unwrap();
    let (code, v) = run(&["wedge", "--model", path.to_str().unwrap()], None);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "model");
}

#[test]
fn fit_writes_cache_and_eval_reuses_it() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = run(&["fit", "--n", "1", "--k", "0"], Some(dir.path()));
    assert_eq!(code, 0);
    assert_eq!(v["polynomial"], "-beta_sq + beta_c1");
    let file = dir.path().join("F_1_0.json");
    let bytes = std::fs::read(&file).unwrap();
    let (code, _) = run(&["fit", "--n", "1", "--k", "0", "--cache-dir", dir.path().to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read(&file).unwrap(), bytes);

    // A corrupt entry is reported, never silently replaced.
    std::fs::write(&file, b"{\"n\": 1}").unwrap();
    let (code, v) = run(&["eval", "--n", "1", "--m", "2", "--beta-sq", "1", "--beta-c1", "3", "--c1-sq", "9", "--c2", "3"], Some(dir.path()));
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "cache");
}

#[test]
fn check_purity_output() {
    let (code, v) = run(
        &["check-purity", "--beta-sq", "10", "--beta-c1", "4", "--delta", "2", "--chi", "-1", "--splitting", "3,7", "--l-sq", "9", "--l-dot-a", "3"],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(v["h"], 4);
    assert_eq!(v["chi_bound"], true);
    assert_eq!(v["splitting_lower_bound"], "3");
    assert_eq!(v["hodge_index_max_square"], "1");
}

#[test]
fn toric_info_reports_fixed_points() {
    let (code, v) = run(&["toric-info", "--surface", "P2", "--bundle", "3", "--n", "3"], None);
    assert_eq!(code, 0);
    assert_eq!(v["hilb_fixed_points"]["count"], 22);
    assert_eq!(v["bundle"]["h0"], 10);
    assert_eq!(v["bundle"]["chi"], 10);
    assert_eq!(v["charts"].as_array().unwrap().len(), 3);
}
