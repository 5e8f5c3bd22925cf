use logmaj::error::Error;
use logmaj::harness::{self, Checker, Execution, OutputFormat, TrialConfig};

fn config(suite: &str, trials: usize, dims: Vec<usize>, seed: u64) -> TrialConfig {
    TrialConfig {
        suite: vec![suite.to_string()],
        trials,
        dims,
        seed,
        ..TrialConfig::default()
    }
}

#[test]
fn lemma36_suite_passes_every_trial() {
    let cfg = config("check_lemma36", 100, vec![2, 4, 8], 7);
    let report = harness::run_suite_with(&cfg, Execution::Serial).unwrap();
    let s = report.summary(Checker::Lemma36).unwrap();
    assert_eq!(s.trials, 300);
    assert_eq!(s.passes, 300);
    assert!(report.all_passed());
}

#[test]
fn zero_trials_is_a_config_error() {
    let cfg = config("all", 0, vec![2], 1);
    assert!(matches!(
        harness::run_suite_with(&cfg, Execution::Serial),
        Err(Error::ConfigInvalid(_))
    ));
    let cfg = config("no_such_checker", 1, vec![2], 1);
    assert!(matches!(cfg.validate(), Err(Error::ConfigInvalid(_))));
}

#[test]
fn counts_add_up() {
    let cfg = config("all", 5, vec![1, 3], 2);
    let report = harness::run_suite_with(&cfg, Execution::Serial).unwrap();
    for s in &report.checkers {
        assert_eq!(s.passes + s.vacuous + s.failures, s.trials);
        assert_eq!(s.trials, 10);
    }
}

#[test]
fn reports_are_deterministic() {
    let cfg = config("all", 4, vec![1, 2, 4], 99);
    let a = harness::run_suite_with(&cfg, Execution::Serial).unwrap();
    let b = harness::run_suite_with(&cfg, Execution::Serial).unwrap();
    let c = harness::run_suite_with(&cfg, Execution::Parallel { threads: Some(3) }).unwrap();
    assert_eq!(a.deterministic_json(), b.deterministic_json());
    assert_eq!(a.deterministic_json(), c.deterministic_json());
}

#[test]
fn replay_reproduces_a_trial() {
    let cfg = config("check_cayley", 3, vec![4], 5);
    let first = harness::replay(Checker::Cayley, 4, 2, &cfg);
    let again = harness::run_trial(Checker::Cayley, 4, 2, first.seed, &cfg);
    assert_eq!(first.result, again.result);
    assert!(first.passed());
}

#[test]
fn csv_and_json_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("r.csv");
    let mut cfg = config("check_harnack_lower", 3, vec![2], 4);
    cfg.output = Some(csv_path.clone());
    cfg.format = OutputFormat::Csv;
    harness::run_suite_with(&cfg, Execution::Serial).unwrap();
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "checker,dim,trial,lhs,rhs,slack,pass,vacuous,seed"
    );
    assert_eq!(lines.count(), 3);

    let json_path = dir.path().join("r.json");
    cfg.output = Some(json_path.clone());
    cfg.format = OutputFormat::Json;
    harness::run_suite_with(&cfg, Execution::Serial).unwrap();
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(v["total_trials"], 3);
    assert!(v["wall_time_seconds"].is_number());
}
