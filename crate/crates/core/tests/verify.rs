use vertexpoly::lattice::ParamSet;
use vertexpoly::verify::*;

fn spec(name: CheckName, m: usize, n: usize, mode: Mode) -> CheckSpec {
    CheckSpec::new(name, m, n, mode)
}

fn assert_pass(report: &CheckReport) {
    assert!(report.pass, "{}", report.to_json_line());
    assert!(report.comparisons > 0);
}

#[test]
fn correspondence_passes() {
    assert_pass(&check_correspondence(&spec(CheckName::Correspondence, 4, 2, Mode::Exact)).unwrap());
    assert_pass(&check_correspondence(&spec(CheckName::Correspondence, 6, 3, Mode::Eval)).unwrap());
    let packed = check_correspondence(&spec(CheckName::Correspondence, 3, 3, Mode::Eval)).unwrap();
    assert_pass(&packed);
    assert_eq!(packed.comparisons, 4 * 5);
}

#[test]
fn perturbed_constraint_breaks_correspondence() {
    let p = ParamSet::sample(3);
    let broken = spec(CheckName::Correspondence, 4, 2, Mode::Eval).params(p.with_f_perturbed());
    let report = check_correspondence(&broken).unwrap();
    assert!(!report.pass);
    let witness = report.witness.expect("failing comparison is recorded");
    assert_ne!(witness.lhs, witness.rhs);
    let fine = spec(CheckName::Correspondence, 4, 2, Mode::Eval).params(p);
    assert_pass(&check_correspondence(&fine).unwrap());
}

#[test]
fn pairing_passes() {
    for (m, n) in [(1, 1), (2, 1), (3, 1), (3, 2), (4, 2)] {
        assert_pass(&check_pairing(&spec(CheckName::Pairing, m, n, Mode::Eval)).unwrap());
    }
    assert_pass(&check_pairing(&spec(CheckName::Pairing, 2, 1, Mode::Exact)).unwrap());
}

#[test]
fn branching_passes() {
    assert_pass(&check_branching(&spec(CheckName::Branching, 3, 1, Mode::Exact)).unwrap());
    assert_pass(&check_branching(&spec(CheckName::Branching, 5, 2, Mode::Eval)).unwrap());
    assert!(check_branching(&spec(CheckName::Branching, 2, 2, Mode::Eval)).is_err());
}

#[test]
fn degeneration_passes() {
    assert_pass(&check_degeneration(&spec(CheckName::Degeneration, 3, 1, Mode::Exact)).unwrap());
    assert_pass(&check_degeneration(&spec(CheckName::Degeneration, 4, 2, Mode::Eval)).unwrap());
}

#[test]
fn mp_algebra_passes() {
    assert_pass(&check_mp_algebra(&spec(CheckName::MpAlgebra, 2, 1, Mode::Exact)).unwrap());
    assert_pass(&check_mp_algebra(&spec(CheckName::MpAlgebra, 5, 3, Mode::Eval)).unwrap());
}

#[test]
fn ik_and_structural_checks_pass() {
    assert_pass(&check_ik(&spec(CheckName::IkProperties, 3, 3, Mode::Eval).trials(2)).unwrap());
    assert_pass(&check_rll_spec(&spec(CheckName::Rll, 0, 0, Mode::Eval).seed(7)).unwrap());
    assert_pass(&check_ybe_spec(&spec(CheckName::Ybe, 0, 0, Mode::Exact)).unwrap());
    let broken = spec(CheckName::Rll, 0, 0, Mode::Eval).params(ParamSet::sample(2).with_f_perturbed());
    assert!(!check_rll_spec(&broken).unwrap().pass);
}

#[test]
fn reports_are_reproducible() {
    let s = spec(CheckName::Branching, 4, 1, Mode::Eval).seed(11).trials(3);
    let mut a = check_branching(&s).unwrap();
    let mut b = check_branching(&s).unwrap();
    a.ms = 0;
    b.ms = 0;
    assert_eq!(a.to_json_line(), b.to_json_line());
    assert_eq!(a.breakdown.len(), 3);
}

#[test]
fn exact_and_eval_agree() {
    for name in [CheckName::Correspondence, CheckName::Branching, CheckName::Degeneration] {
        let exact = run_check(&spec(name, 3, 1, Mode::Exact)).unwrap();
        let eval = run_check(&spec(name, 3, 1, Mode::Eval)).unwrap();
        assert_eq!(exact.pass, eval.pass, "{name}");
    }
}

#[test]
fn run_all_at_desk_scale() {
    let reports = with_thread_pool(|| run_all(&spec(CheckName::Correspondence, 4, 2, Mode::Exact))).unwrap().unwrap();
    let names: Vec<CheckName> = reports.iter().map(|r| r.name).collect();
    assert_eq!(names, CheckName::ALL.to_vec());
    for r in &reports {
        assert_pass(r);
    }
}

#[test]
fn json_line_has_expected_keys() {
    let report = check_rll_spec(&spec(CheckName::Rll, 0, 0, Mode::Eval).trials(1)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report.to_json_line()).unwrap();
    for key in ["name", "pass", "witness", "ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["name"], "rll");
}

#[test]
fn large_config_sets_are_sampled() {
    let configs = configs_for(12, 6, 1);
    assert_eq!(configs.len(), CONFIG_SAMPLE_LIMIT);
    assert!(configs.windows(2).all(|w| w[0].bits() != w[1].bits()));
    assert_eq!(configs, configs_for(12, 6, 1));
    assert_eq!(configs_for(6, 3, 1).len(), 20);
}
