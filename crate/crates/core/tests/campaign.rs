use ginv_core::campaign::{run_campaign, Family};

#[test]
fn campaigns_for_each_family_are_clean() {
    for (family, cases) in [(Family::DoubleStar, 150), (Family::DLinked, 150), (Family::General, 120)] {
        let report = run_campaign(cases, 2024, Some(family)).unwrap();
        assert_eq!(report.cases_run, cases);
        assert!(report.passed(), "{family:?}: {:#?}", report.failures);
    }
}

#[test]
fn report_depends_only_on_seed() {
    let a = run_campaign(30, 99, None).unwrap();
    let b = run_campaign(30, 99, None).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert!(a.checks_run > a.cases_run);
}
