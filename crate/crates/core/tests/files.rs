use squeezelab::experiment::{render_svg, run_sweep, write_csv_to, SweepConfig, SweepRow};
use squeezelab::model::{ModelError, SqueezingSpec};

#[test]
fn xi_document_round_trip() {
    let text = r#"{ "d": 2, "entries": [[0.1, 0.2], [0.3, -0.4], [0.3, -0.4], [0.0, 1.5]] }"#;
    let spec = SqueezingSpec::from_json(text).unwrap();
    assert_eq!(spec.dim(), 2);
    assert_eq!(spec.xi()[(1, 0)].im, -0.4);
    assert_eq!(spec.xi()[(1, 1)].im, 1.5);
    let again = SqueezingSpec::from_json(&spec.to_json()).unwrap();
    assert_eq!(again.xi(), spec.xi());
}

#[test]
fn xi_document_errors() {
    assert!(matches!(
        SqueezingSpec::from_json(r#"{ "d": 2, "entries": [[0, 0]] }"#),
        Err(ModelError::Parse(_))
    ));
    assert!(SqueezingSpec::from_json(r#"{ "d": 2 }"#).is_err());
    assert!(SqueezingSpec::from_json(r#"{ "d": 2, "entries": [[0, 0], [1, 0], [2, 0], [0, 0]] }"#).is_err());
}

#[test]
fn svg_is_well_formed() {
    let rows = run_sweep(&SweepConfig {
        r_steps: 4,
        samples: 5000,
        ..Default::default()
    })
    .unwrap();
    let svg = render_svg(&rows).unwrap();
    // Tag balance: every opened element is closed or self-closing.
    let opens = svg.matches('<').count();
    let self_closing = svg.matches("/>").count();
    let closers = svg.matches("</").count();
    assert_eq!(opens, self_closing + 2 * closers);
    for id in ["series-s", "series-eta", "reference-lines", "axes"] {
        assert_eq!(svg.matches(&format!("id=\"{id}\"")).count(), 1);
    }
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn undefined_cells_render_as_na() {
    let rows: Vec<SweepRow> = run_sweep(&SweepConfig {
        r_steps: 2,
        samples: 200,
        gamma: 30.0,
        ..Default::default()
    })
    .unwrap();
    let mut out = Vec::new();
    write_csv_to(&mut out, &rows).unwrap();
    let text = String::from_utf8(out).unwrap();
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        assert!(cells[1..8].iter().all(|c| *c == "NA"), "{line}");
        assert_eq!(cells[8], "0");
    }
}
