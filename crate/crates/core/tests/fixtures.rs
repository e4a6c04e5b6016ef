use std::path::PathBuf;

use chordalkit::oracle::fixtures::{fixtures, Fixture, Run};
use chordalkit::search::{complement_mls, mls};
use chordalkit::{with_builtin, Graph, LabelingStructure, TieBreak};

fn rendered_run(f: &Fixture) -> (Vec<String>, Vec<(String, String)>) {
    let g = &f.graph;
    let tb = TieBreak::reproduce(g, &f.ordering).unwrap();
    with_builtin!(f.structure, l => {
        let (alpha, trace) = match f.run {
            Run::Search => mls(g, &l, &tb).unwrap(),
            Run::Complement => complement_mls(g, &l, &tb).unwrap(),
        };
        let labels = trace
            .final_labels()
            .iter()
            .enumerate()
            .map(|(v, lab)| (g.name(v).to_string(), l.render(lab)))
            .collect();
        (alpha.names(g), labels)
    })
}

#[test]
fn scripted_runs_reproduce_fixture_labels() {
    for f in fixtures() {
        let (ordering, labels) = rendered_run(&f);
        assert_eq!(ordering, f.ordering, "{}", f.name);
        let expected: Vec<(String, String)> = f.labels.iter().map(|&(v, l)| (v.to_string(), l.to_string())).collect();
        assert_eq!(labels, expected, "{}", f.name);
    }
}

#[test]
fn fig1_lexdfs_labels() {
    let f = chordalkit::oracle::fixtures::fig1_h();
    let (_, labels) = rendered_run(&f);
    let expected = [
        ("a", "(2,6)"),
        ("b", "(6)"),
        ("c", "(4,5)"),
        ("d", "(5)"),
        ("e", "(6)"),
        ("f", "()"),
    ];
    for (got, want) in labels.iter().zip(expected) {
        assert_eq!((got.0.as_str(), got.1.as_str()), want);
    }
}

#[test]
fn fig3_complement_labels() {
    let f = chordalkit::oracle::fixtures::fig3_g();
    let (_, labels) = rendered_run(&f);
    let expected = [
        ("a", "(3,4,5)"),
        ("b", "(3,4,5)"),
        ("c", "(6)"),
        ("d", "(6)"),
        ("e", "()"),
        ("f", "()"),
    ];
    for (got, want) in labels.iter().zip(expected) {
        assert_eq!((got.0.as_str(), got.1.as_str()), want);
    }
}

#[test]
fn edge_list_files_match_fixtures() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for (file, f) in ["fig1.txt", "fig3.txt", "fig4.txt", "fig5.txt", "fig6.txt"]
        .iter()
        .zip(fixtures())
    {
        let text = std::fs::read_to_string(dir.join(file)).unwrap();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), f.graph, "{file}");
    }
}

#[test]
fn reproduced_script_rejects_inadmissible_orders() {
    let f = chordalkit::oracle::fixtures::fig1_h();
    let tb = TieBreak::reproduce(&f.graph, &["f", "e", "d", "c", "b", "a"]).unwrap();
    let err = mls(&f.graph, &chordalkit::lexdfs(), &tb).unwrap_err();
    assert!(matches!(err, chordalkit::Error::ScriptConflict { .. }), "{err}");
}
