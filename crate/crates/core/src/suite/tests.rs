use super::*;

#[test]
fn default_config_is_valid() {
    let c = SuiteConfig::default();
    c.validate().unwrap();
    assert_eq!(c.grid.len(), 18);
    assert_eq!(c.momenta().unwrap().len(), 19);
}

#[test]
fn invalid_configs_are_rejected() {
    let base = SuiteConfig::default();
    let cases = [
        SuiteConfig { tolerance: 0.0, ..base.clone() },
        SuiteConfig { tolerance: f64::NAN, ..base.clone() },
        SuiteConfig { masses: vec![], ..base.clone() },
        SuiteConfig { masses: vec![1.0, -2.0], ..base.clone() },
        SuiteConfig { grid: GridSpec { magnitudes: vec![], directions: vec![(0.0, 0.0)] }, ..base.clone() },
        SuiteConfig { suites: BTreeSet::new(), ..base.clone() },
    ];
    for c in cases {
        assert!(matches!(run(&c), Err(Error::InvalidConfig(_))), "{c:?}");
    }
}

#[test]
fn grid_spec_parsing() {
    let g: GridSpec = "0.5,2".parse().unwrap();
    assert_eq!(g.magnitudes, vec![0.5, 2.0]);
    assert_eq!(g.directions.len(), 6);
    let g: GridSpec = "1@0:0,1.5:0.25".parse().unwrap();
    assert_eq!(g.directions, vec![(0.0, 0.0), (1.5, 0.25)]);
    assert!("1@0".parse::<GridSpec>().is_err());
    assert!("x".parse::<GridSpec>().is_err());
}

#[test]
fn suite_filter_emits_exactly_its_ids() {
    for s in Suite::ALL {
        let c = SuiteConfig { suites: [s].into_iter().collect(), ..SuiteConfig::default() };
        let ids: Vec<String> = run(&c).unwrap().results.into_iter().map(|r| r.id).collect();
        assert_eq!(ids, check_ids(s), "{s}");
        assert!(ids.iter().all(|id| id.starts_with(s.name())));
    }
}

#[test]
fn anchors_are_unique_per_id() {
    let r = run(&SuiteConfig::default()).unwrap();
    let mut ids: Vec<&str> = r.results.iter().map(|x| x.id.as_str()).collect();
    ids.dedup();
    assert_eq!(ids.len(), r.results.len());
    assert!(r.results.iter().all(|x| !x.anchor.is_empty()));
}

#[test]
fn report_is_deterministic() {
    let c = SuiteConfig::default();
    assert_eq!(run(&c).unwrap().to_json_lines(), run(&c).unwrap().to_json_lines());
}

#[test]
fn mr_table_has_zero_longitudinal_u_plus_on_z_axis() {
    let p = FourMomentum::from_cartesian(1.0, [0.0, 0.0, 1.0]).unwrap();
    let t = tabulate(&p, &PhaseConvention::default(), TableKind::Mr).unwrap();
    let long = t.lines().find(|l| l.starts_with("U+_longitudinal ")).unwrap();
    assert!(long.split_whitespace().skip(1).all(|x| x.parse::<f64>().unwrap() == 0.0), "{long}");
}

#[test]
fn loose_tolerance_cannot_hide_lower_bounds() {
    let c = SuiteConfig { tolerance: 1.0, suites: [Suite::Halfspin].into_iter().collect(), ..SuiteConfig::default() };
    let r = run(&c).unwrap();
    let h = r.get("halfspin.lambda_not_helicity_eigen").unwrap();
    assert_eq!(h.tolerance, 0.1);
}
