use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tsa_bench::compare::compare;
use tsa_bench::results::{read_summary, FunctionResults, ResultsFile, RunRecord};
use tsa_bench::runner::read_trace;
use tsa_bench::ExperimentConfig;
use tsa_core::stats::{summarize, SampleSet};

fn bench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tsa-bench"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn traces_in(dir: &Path) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(dir.join("traces"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    v.sort();
    v
}

#[test]
fn classical_suite_writes_one_trace_per_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r");
    let o = bench(&["run", "--suite", "classical30", "--runs", "2", "--max-fe", "1000", "--out", path_str(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let traces = traces_in(&out);
    assert_eq!(traces.len(), 24);
    for t in &traces {
        assert_eq!(fs::read_to_string(t).unwrap().lines().next(), Some("fe,best"));
        let pts = read_trace(t).unwrap();
        assert!(pts.windows(2).all(|w| w[1].1 <= w[0].1), "{}", t.display());
        assert_eq!(pts.last().unwrap().0, 1000);
    }
    let rows = read_summary(&out.join("summary.csv")).unwrap();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r.runs == 2 && r.max_fe == 1000 && r.mean >= r.best));
    let res = ResultsFile::load(&out.join("results.json")).unwrap();
    assert_eq!(res.functions.len(), 12);
}

#[test]
fn repeated_runs_give_identical_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("exp.json");
    fs::write(
        &cfg,
        r#"{"suite": "custom", "function_ids": ["fc07", "h03", "fc19"], "runs": 3, "max_fe": 800, "base_seed": 5}"#,
    )
    .unwrap();
    let mut summaries = Vec::new();
    for name in ["a", "b"] {
        let out = dir.path().join(name);
        let o = bench(&["run", "--config", path_str(&cfg), "--out", path_str(&out)]);
        assert!(o.status.success(), "{}", stderr(&o));
        let rows: Vec<_> = read_summary(&out.join("summary.csv"))
            .unwrap()
            .into_iter()
            .map(|r| (r.function_id, r.mean.to_bits(), r.std.to_bits(), r.best.to_bits()))
            .collect();
        summaries.push(rows);
        let traces: Vec<String> = traces_in(&out).iter().map(|p| fs::read_to_string(p).unwrap()).collect();
        summaries.last_mut().unwrap().push((traces.concat(), 0, 0, 0));
    }
    assert_eq!(summaries[0], summaries[1]);
}

#[test]
fn single_run_reproduces_its_row() {
    let dir = tempfile::tempdir().unwrap();
    let all = dir.path().join("all");
    let one = dir.path().join("one");
    let base = ["run", "--suite", "hard", "--max-fe", "600"];
    let o = bench(&[&base[..], &["--runs", "4", "--seed", "20", "--out", path_str(&all)]].concat());
    assert!(o.status.success(), "{}", stderr(&o));
    let o = bench(&[&base[..], &["--runs", "1", "--seed", "22", "--out", path_str(&one)]].concat());
    assert!(o.status.success(), "{}", stderr(&o));
    let all = ResultsFile::load(&all.join("results.json")).unwrap();
    let one = ResultsFile::load(&one.join("results.json")).unwrap();
    for (f, g) in all.functions.iter().zip(&one.functions) {
        let (a, b) = (&f.runs[2], &g.runs[0]);
        assert_eq!(a.seed, 22);
        assert_eq!(a.best_fitness.to_bits(), b.best_fitness.to_bits());
        assert_eq!(a.best_position, b.best_position);
    }
}

#[test]
fn config_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("never");
    let cfg = dir.path().join("bad.json");
    fs::write(&cfg, r#"{"suite": "custom", "function_ids": ["fc01", "fc99", "bogus"]}"#).unwrap();
    let o = bench(&["run", "--config", path_str(&cfg), "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("fc99") && stderr(&o).contains("bogus"), "{}", stderr(&o));
    assert!(!out.exists(), "nothing may be written before validation");

    let o = bench(&["run", "--suite", "fixed", "--runs", "0", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(2));
    let o = bench(&["run", "--suite", "sideways", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(2));
    fs::write(&cfg, "{ not json").unwrap();
    let o = bench(&["run", "--config", path_str(&cfg)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn io_errors_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    let o = bench(&["run", "--config", path_str(&missing)]);
    assert_eq!(o.status.code(), Some(3));
    let o = bench(&["compare", path_str(&missing), path_str(&missing)]);
    assert_eq!(o.status.code(), Some(3));
}

fn synthetic(ids: &[&str], value: impl Fn(usize) -> f64) -> ResultsFile {
    let functions = ids
        .iter()
        .enumerate()
        .map(|(i, id)| {
            let runs: Vec<RunRecord> = (0..3)
                .map(|r| RunRecord {
                    run: r,
                    seed: r as u64,
                    best_fitness: value(i),
                    used_fe: 100,
                    iterations: 4,
                    wall_time: 0.0,
                    best_position: vec![0.0],
                })
                .collect();
            let sample = SampleSet::new(*id, runs.iter().map(|r| r.best_fitness).collect()).unwrap();
            FunctionResults {
                function_id: id.to_string(),
                name: id.to_string(),
                dimension: 1,
                max_fe: 100,
                summary: summarize(&sample),
                runs,
            }
        })
        .collect();
    ResultsFile {
        config: ExperimentConfig::default(),
        functions,
    }
}

const TWELVE: [&str; 12] = [
    "fc01", "fc02", "fc03", "fc04", "fc05", "fc06", "fc07", "fc08", "fc09", "fc10", "fc11", "fc12",
];

#[test]
fn compare_outputs_round_trip_from_run() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for (out, seed) in [(&a, "0"), (&b, "100")] {
        let o = bench(&["run", "--suite", "fixed", "--runs", "3", "--max-fe", "300", "--seed", seed, "--out", path_str(out)]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let report = dir.path().join("cmp.json");
    let o = bench(&[
        "compare",
        path_str(&a.join("results.json")),
        path_str(&b.join("results.json")),
        "--out",
        path_str(&report),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["functions"].as_array().unwrap().len(), 8);
    assert_eq!(v["wilcoxon"].as_array().unwrap().len(), 1);
}

#[test]
fn compare_against_itself_finds_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    synthetic(&TWELVE, |i| i as f64).save(&p).unwrap();
    let o = bench(&["compare", path_str(&p), path_str(&p)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let w = &v["wilcoxon"][0];
    assert_eq!(w["p_value"], 1.0);
    assert_eq!(w["h"], 0);
    assert_eq!(w["direction"], "=");
}

#[test]
fn clear_winner_on_twelve_functions() {
    let a = synthetic(&TWELVE, |i| i as f64);
    let b = synthetic(&TWELVE, |i| i as f64 + 100.0);
    let c = compare(&[("a".into(), a), ("b".into(), b)], 0.05).unwrap();
    let w = &c.wilcoxon[0];
    assert_eq!(w.h, 1);
    assert_eq!(w.direction.to_string(), "+");
    // all twelve differences negative: exact two-sided p = 2 / 2^12
    assert!((w.p_value - 2.0 / 4096.0).abs() < 1e-15);
}

#[test]
fn three_identical_sets_have_no_spread() {
    let r = synthetic(&TWELVE, |i| (i * i) as f64);
    let sets: Vec<_> = ["x", "y", "z"].iter().map(|l| (l.to_string(), r.clone())).collect();
    let c = compare(&sets, 0.05).unwrap();
    assert_eq!(c.kruskal_wallis.statistic, 0.0);
    assert_eq!(c.kruskal_wallis.p_value, 1.0);
    assert!(!c.kruskal_wallis.reject);
}

#[test]
fn mismatched_function_sets_abort() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    synthetic(&["fc01", "fc02", "fc03", "fc04", "fc05", "fc06"], |i| i as f64).save(&a).unwrap();
    synthetic(&["fc01", "fc02", "fc03", "fc04", "fc05", "h01"], |i| i as f64).save(&b).unwrap();
    let o = bench(&["compare", path_str(&a), path_str(&b)]);
    assert_eq!(o.status.code(), Some(2));
    let msg = stderr(&o);
    assert!(msg.contains("fc06") && msg.contains("h01"), "{msg}");
}

fn scatter_values(args: &[&str]) -> Vec<f64> {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    let o = bench(&[&["scatter", "--out", path_str(&out)], args].concat());
    assert!(o.status.success(), "{}", stderr(&o));
    let mut r = csv::Reader::from_path(&out).unwrap();
    assert_eq!(r.headers().unwrap(), vec!["index", "value"]);
    r.deserialize::<(usize, f64)>().map(|row| row.unwrap().1).collect()
}

#[test]
fn raw_tangent_ranges() {
    let quarter = format!("{}", std::f64::consts::FRAC_PI_4);
    let v = scatter_values(&["--mode", "raw_tangent", "--samples", "5000", "--seed", "9", "--theta-max", &quarter]);
    assert!(v.iter().all(|x| (0.0..=1.0).contains(x)));
    let v = scatter_values(&["--mode", "raw_tangent", "--samples", "100000", "--seed", "1"]);
    assert_eq!(v.len(), 100_000);
    assert!(v.iter().all(|x| (0.0..=13.34 + 1e-2).contains(x)));
}

#[test]
fn decayed_scatter_shrinks() {
    let v = scatter_values(&["--mode", "decayed", "--samples", "10000", "--seed", "4"]);
    let peak = |s: &[f64]| s.iter().map(|x| x.abs()).fold(0.0, f64::max);
    assert!(peak(&v[9_000..]) < peak(&v[..1_000]));
}

#[test]
fn listing() {
    let o = bench(&["list"]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().count(), 26);

    let o = bench(&["list", "--suite", "hard"]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().count(), 6);

    let o = bench(&["list", "--machine"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 25);
    let branin = rows.iter().find(|r| r["id"] == "fc16").unwrap();
    assert_eq!(branin["bounds"], serde_json::json!([[-5.0, 10.0], [0.0, 15.0]]));
    assert_eq!(branin["optimum"], 0.398);

    let o = bench(&["list", "--suite", "custom"]);
    assert_eq!(o.status.code(), Some(2));
}
