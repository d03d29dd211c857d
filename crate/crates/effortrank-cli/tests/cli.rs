//! End-to-end tests of the `effortrank` binary: exit codes, help text,
//! output trees, and byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

fn effortrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_effortrank"))
        .args(args)
        .env_remove("EFFORTRANK_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn synth_corpus(dir: &Path, seed: u64) {
    let out = effortrank(&[
        "synth",
        "--n",
        "80",
        "--defect-rate",
        "0.25",
        "--loc-skew",
        "5",
        "--seed",
        &seed.to_string(),
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "synth failed: {}", stderr(&out));
}

fn run_args<'a>(data: &'a str, out: &'a str) -> Vec<&'a str> {
    vec![
        "run",
        "--manifest",
        Box::leak(format!("{data}/synth-manifest.txt").into_boxed_str()),
        "--data-dir",
        data,
        "--learners",
        "nb,cart",
        "--strategies",
        "prob,label_loc,cbs_plus,prob_loc,ea_z,manual_up",
        "--seed",
        "42",
        "--id-column",
        "id",
        "--out",
        out,
    ]
}

#[test]
fn minor_chaos_demo_prints_both_recalls() {
    let out = effortrank(&["minor-chaos-demo"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0.0025"), "missing baseline ratio:\n{text}");
    assert!(text.contains("0.00125"), "missing perturbed ratio:\n{text}");
    assert!(text.contains("1.0000"));
    assert!(text.contains("0.6667"));
}

#[test]
fn missing_manifest_exits_1_naming_the_flag() {
    let out = effortrank(&["run", "--learners", "nb", "--out", "/tmp/nowhere"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--manifest"), "{}", stderr(&out));
}

#[test]
fn unknown_flag_exits_1() {
    let out = effortrank(&["run", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_learner_exits_1_and_svm_points_to_external() {
    let tmp = tempfile::tempdir().unwrap();
    let data = tmp.path().join("data");
    synth_corpus(&data, 1);
    let manifest = data.join("synth-manifest.txt");
    let out_dir = tmp.path().join("o");
    let base = [
        "run",
        "--manifest",
        manifest.to_str().unwrap(),
        "--data-dir",
        data.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
    ];

    let mut bogus = base.to_vec();
    bogus.extend(["--learners", "mystery"]);
    let out = effortrank(&bogus);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("mystery"));

    let mut svm = base.to_vec();
    svm.extend(["--learners", "svm"]);
    let out = effortrank(&svm);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("external"), "{}", stderr(&out));
}

#[test]
fn help_documents_defaults() {
    for sub in ["run", "sweep-zeta"] {
        let out = effortrank(&[sub, "--help"]);
        assert!(out.status.success());
        let text = stdout(&out);
        assert!(text.contains("0.05"), "{sub} --help lacks zeta default");
        assert!(text.contains("0.5"), "{sub} --help lacks threshold default");
        assert!(text.contains("k=8"), "{sub} --help lacks k default");
        assert!(text.contains("ir=1"), "{sub} --help lacks ir default");
        assert!(text.contains("200"), "{sub} --help lacks tree count");
        assert!(text.contains("50"), "{sub} --help lacks nested tree count");
    }
    let out = effortrank(&["--help"]);
    assert!(out.status.success());
    for sub in ["run", "sweep-zeta", "synth", "stats", "minor-chaos-demo"] {
        assert!(stdout(&out).contains(sub));
    }
}

#[test]
fn run_produces_the_result_tree() {
    let tmp = tempfile::tempdir().unwrap();
    let data = tmp.path().join("data");
    synth_corpus(&data, 7);
    let run_dir = tmp.path().join("run");
    let out = effortrank(&run_args(
        data.to_str().unwrap(),
        run_dir.to_str().unwrap(),
    ));
    assert!(out.status.success(), "{}", stderr(&out));

    for file in [
        "results.csv",
        "summary.txt",
        "summary_strategies.csv",
        "summary_learner_strategy.csv",
        "comparisons.csv",
        "sk_groups.csv",
        "tradeoff.csv",
        "config.txt",
        "boxplot_recall20_SYNTH.csv",
        "boxplot_popt_SYNTH.csv",
        "boxplot_ifa_SYNTH.csv",
    ] {
        assert!(run_dir.join(file).is_file(), "missing {file}");
    }

    let results = std::fs::read_to_string(run_dir.join("results.csv")).unwrap();
    assert!(results.starts_with("pair,learner,strategy,zeta,recall20,popt,ifa,status"));
    // 1 pair x 2 learners x 6 strategies.
    assert_eq!(results.lines().count(), 1 + 12);
    // The resolved config is embedded.
    let config = std::fs::read_to_string(run_dir.join("config.txt")).unwrap();
    assert!(config.contains("seed = 42"));
    assert!(config.contains("zeta = 0.05"));
    // The summary prints the published reference values.
    let summary = std::fs::read_to_string(run_dir.join("summary.txt")).unwrap();
    assert!(summary.contains("0.605"));
    assert!(summary.contains("0.813"));
    assert!(summary.contains("14.198"));
}

#[test]
fn identical_invocations_yield_identical_trees() {
    let tmp = tempfile::tempdir().unwrap();
    let data = tmp.path().join("data");
    synth_corpus(&data, 11);
    let dir_a = tmp.path().join("a");
    let dir_b = tmp.path().join("b");
    let out = effortrank(&run_args(data.to_str().unwrap(), dir_a.to_str().unwrap()));
    assert!(out.status.success(), "{}", stderr(&out));
    let out = effortrank(&run_args(data.to_str().unwrap(), dir_b.to_str().unwrap()));
    assert!(out.status.success(), "{}", stderr(&out));

    let mut names: Vec<String> = std::fs::read_dir(&dir_a)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert!(!names.is_empty());
    for name in names {
        if name == "config.txt" {
            // Differs by the out path itself.
            continue;
        }
        let a = std::fs::read(dir_a.join(&name)).unwrap();
        let b = std::fs::read(dir_b.join(&name)).unwrap();
        assert_eq!(a, b, "{name} differs between identical invocations");
    }
}

#[test]
fn stats_recomputes_from_results_file() {
    let tmp = tempfile::tempdir().unwrap();
    let data = tmp.path().join("data");
    synth_corpus(&data, 13);
    let run_dir = tmp.path().join("run");
    let out = effortrank(&run_args(data.to_str().unwrap(), run_dir.to_str().unwrap()));
    assert!(out.status.success(), "{}", stderr(&out));

    let stats_dir = tmp.path().join("stats");
    let out = effortrank(&[
        "stats",
        "--results",
        run_dir.join("results.csv").to_str().unwrap(),
        "--out",
        stats_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    // The re-summarized strategy table matches the original run's, up to
    // the 6-decimal rounding of the results file itself.
    let a = std::fs::read_to_string(run_dir.join("summary_strategies.csv")).unwrap();
    let b = std::fs::read_to_string(stats_dir.join("summary_strategies.csv")).unwrap();
    for (line_a, line_b) in a.lines().zip(b.lines()).skip(1) {
        let fields = |l: &str| l.split(',').map(str::to_string).collect::<Vec<_>>();
        let (fa, fb) = (fields(line_a), fields(line_b));
        assert_eq!(fa[0], fb[0], "strategy order differs");
        assert_eq!(fa[1], fb[1], "cell count differs");
        for (x, y) in fa[2..].iter().zip(&fb[2..]) {
            let (x, y): (f64, f64) = (x.parse().unwrap(), y.parse().unwrap());
            assert!((x - y).abs() < 2e-6, "{line_a} vs {line_b}");
        }
    }
    assert_eq!(a.lines().count(), b.lines().count());
}

#[test]
fn sweep_zeta_emits_per_zeta_rows_and_summary() {
    let tmp = tempfile::tempdir().unwrap();
    let data = tmp.path().join("data");
    synth_corpus(&data, 17);
    let sweep_dir = tmp.path().join("sweep");
    let manifest = data.join("synth-manifest.txt");
    let out = effortrank(&[
        "sweep-zeta",
        "--grid",
        "0.005,0.01,0.05,0.1",
        "--manifest",
        manifest.to_str().unwrap(),
        "--data-dir",
        data.to_str().unwrap(),
        "--learners",
        "nb",
        "--strategies",
        "ea_z,prob_loc",
        "--seed",
        "42",
        "--id-column",
        "id",
        "--out",
        sweep_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let results = std::fs::read_to_string(sweep_dir.join("results.csv")).unwrap();
    // 4 ea_z rows + 1 prob_loc row.
    assert_eq!(results.lines().count(), 1 + 5);
    let sweep = std::fs::read_to_string(sweep_dir.join("zeta_sweep.csv")).unwrap();
    assert_eq!(sweep.lines().count(), 1 + 4);
}

#[test]
fn seed_env_var_is_the_fallback() {
    let tmp = tempfile::tempdir().unwrap();
    let data = tmp.path().join("data");
    synth_corpus(&data, 19);
    let manifest = data.join("synth-manifest.txt");

    let run = |dir: &Path, seed_flag: Option<&str>, env: Option<&str>| {
        let mut args = vec![
            "run".to_string(),
            "--manifest".into(),
            manifest.to_str().unwrap().into(),
            "--data-dir".into(),
            data.to_str().unwrap().into(),
            "--learners".into(),
            "cart".into(),
            "--strategies".into(),
            "ea_z".into(),
            "--id-column".into(),
            "id".into(),
            "--out".into(),
            dir.to_str().unwrap().into(),
        ];
        if let Some(s) = seed_flag {
            args.push("--seed".into());
            args.push(s.into());
        }
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_effortrank"));
        cmd.args(&args).env_remove("EFFORTRANK_SEED");
        if let Some(e) = env {
            cmd.env("EFFORTRANK_SEED", e);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        std::fs::read_to_string(dir.join("config.txt")).unwrap()
    };

    let via_env = run(&tmp.path().join("e"), None, Some("777"));
    assert!(via_env.contains("seed = 777"));
    // Explicit flag wins over the environment.
    let via_flag = run(&tmp.path().join("f"), Some("5"), Some("777"));
    assert!(via_flag.contains("seed = 5"));
    // Neither: the documented default.
    let fallback = run(&tmp.path().join("d"), None, None);
    assert!(fallback.contains("seed = 42"));
}

#[test]
fn config_file_supplies_flags_with_cli_precedence() {
    let tmp = tempfile::tempdir().unwrap();
    let data = tmp.path().join("data");
    synth_corpus(&data, 23);
    let manifest = data.join("synth-manifest.txt");
    let cfg_path = tmp.path().join("run.cfg");
    let out_dir = tmp.path().join("out");
    std::fs::write(
        &cfg_path,
        format!(
            "manifest = {}\ndata_dir = {}\nlearners = nb\nstrategies = ea_z\nseed = 9\nid_column = id\nout = {}\n",
            manifest.display(),
            data.display(),
            out_dir.display()
        ),
    )
    .unwrap();

    let out = effortrank(&[
        "run",
        "--config",
        cfg_path.to_str().unwrap(),
        "--seed",
        "100",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let config = std::fs::read_to_string(out_dir.join("config.txt")).unwrap();
    assert!(config.contains("seed = 100"), "flag must beat file:\n{config}");
    assert!(config.contains("learners = nb"));
}
