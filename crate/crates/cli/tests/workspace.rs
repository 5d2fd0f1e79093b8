use crossbial::zoo::{radford, RadfordParams};
use crossbial::Error;
use crossbial_cli::workspace::{Workspace, WORKSPACE_SCHEMA};

fn sweedler() -> Workspace {
    let s = radford(RadfordParams::new(2, 1, 2, 1)).unwrap();
    let mut ws = Workspace::new();
    ws.add_structure("H", &s.h.bialgebra, Some(&s.h.antipode))
        .unwrap();
    ws.add_system("system", &s.system).unwrap();
    ws.add_datum("datum", &s.datum).unwrap();
    ws
}

#[test]
fn empty_workspace_round_trips() {
    let text = Workspace::new().to_json().unwrap();
    assert_eq!(
        text,
        format!("{{\n  \"conductor\": 1,\n  \"schema\": \"{WORKSPACE_SCHEMA}\"\n}}\n")
    );
    assert_eq!(
        Workspace::from_json(&text).unwrap().to_json().unwrap(),
        text
    );
}

#[test]
fn sweedler_workspace_round_trips_with_identical_scalars() {
    let ws = sweedler();
    let text = ws.to_json().unwrap();
    let back = Workspace::from_json(&text).unwrap();
    assert_eq!(back.to_json().unwrap(), text);
    let s = radford(RadfordParams::new(2, 1, 2, 1)).unwrap();
    assert_eq!(back.hopf("H").unwrap(), s.h);
    let d = back.datum("datum").unwrap();
    assert_eq!(d.mu_l, s.datum.mu_l);
    assert_eq!(d.nu_l, s.datum.nu_l);
    assert!(text.contains("\"-1\""));
}

#[test]
fn cyclotomic_workspace_round_trips() {
    let s = radford(RadfordParams::new(3, 1, 3, 1)).unwrap();
    let mut ws = Workspace::new();
    ws.add_datum("datum", &s.datum).unwrap();
    assert_eq!(ws.conductor, 3);
    let text = ws.to_json().unwrap();
    let back = Workspace::from_json(&text).unwrap();
    assert_eq!(back.to_json().unwrap(), text);
    assert_eq!(back.datum("datum").unwrap().mu_l, s.datum.mu_l);
}

#[test]
fn malformed_rational_reports_pointer() {
    let text = sweedler().to_json().unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["maps"]["datum.mu_l"]["matrix"][1][1] = "1/0".into();
    match Workspace::from_json(&v.to_string()) {
        Err(Error::Parse { pointer, message }) => {
            assert_eq!(pointer, "/maps/datum.mu_l/matrix/1/1");
            assert!(message.contains("1/0"), "{message}");
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn schema_violations_are_parse_errors() {
    let cases = [
        (r#"{"schema":"other","conductor":1}"#, "/schema"),
        (
            r#"{"schema":"crossbial-workspace/1","conductor":1,"extra":0}"#,
            "/extra",
        ),
        (
            r#"{"schema":"crossbial-workspace/1","conductor":1,"spaces":[{"name":"a","dim":1},{"name":"a","dim":2}]}"#,
            "/spaces/1",
        ),
        (
            r#"{"schema":"crossbial-workspace/1","conductor":1,"maps":{"f":{"dom":["a"],"cod":[],"matrix":[["1"]]}}}"#,
            "/maps/f",
        ),
        (
            r#"{"schema":"crossbial-workspace/1","conductor":1,"spaces":[{"name":"a","dim":1}],"maps":{"f":{"dom":["a"],"cod":[],"matrix":[[{"n":3,"coeffs":["0","1"]}]]}}}"#,
            "/maps/f/matrix/0/0",
        ),
    ];
    for (text, ptr) in cases {
        match Workspace::from_json(text) {
            Err(Error::Parse { pointer, .. }) => assert_eq!(pointer, ptr, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn duplicate_names_are_rejected() {
    let text = r#"{"schema":"crossbial-workspace/1","conductor":1,"spaces":[{"name":"a","dim":1}],
      "maps":{"f":{"dom":["a"],"cod":["a"],"matrix":[["1"]]},"f":{"dom":["a"],"cod":["a"],"matrix":[["2"]]}}}"#;
    let e = Workspace::from_json(text).unwrap_err();
    assert!(e.to_string().contains("duplicate name `f`"), "{e}");
}

#[test]
fn default_selection() {
    let mut ws = sweedler();
    assert_eq!(ws.pick("data", None).unwrap(), "datum");
    assert_eq!(ws.pick("data", Some("x")).unwrap(), "x");
    ws.set_default("structures", "H");
    assert_eq!(ws.pick("structures", None).unwrap(), "H");
    assert!(ws.pick("cocycles", None).is_err());
}
