use std::io::Write;

use totdom::corpus::{
    connected_corpus, enumerate_all, enumerate_connected, filter_stream, parse_graph6, read_graph6_file, write_graph6,
    Predicate,
};
use totdom::iso::canonical_form;
use totdom::Error;

#[test]
fn seven_vertex_classes() {
    assert_eq!(enumerate_all(7).unwrap().len(), 1044);
    assert_eq!(enumerate_connected(7).unwrap().len(), 853);
}

#[test]
fn round_trip_through_seven_vertices() {
    for n in 1..=7 {
        for g in enumerate_all(n).unwrap() {
            let line = write_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&line).unwrap(), g);
        }
    }
}

#[test]
fn enumeration_is_deterministic_and_canonically_ordered() {
    let a: Vec<String> = enumerate_connected(6).unwrap().iter().map(|g| write_graph6(g).unwrap()).collect();
    let b: Vec<String> = enumerate_connected(6).unwrap().iter().map(|g| write_graph6(g).unwrap()).collect();
    assert_eq!(a, b);
    let graphs = enumerate_connected(6).unwrap();
    let forms: Vec<_> = graphs.iter().map(canonical_form).collect();
    assert!(forms.windows(2).all(|w| w[0] < w[1]));
    for (g, f) in graphs.iter().zip(&forms) {
        assert_eq!(&f.graph(g), g, "representatives are already canonical");
    }
}

#[test]
fn gamma_t_filter_over_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, ">>graph6<<").unwrap();
    for r in connected_corpus(1, 6).unwrap() {
        writeln!(file, "{}", r.g6).unwrap();
    }
    writeln!(file).unwrap();
    file.flush().unwrap();

    let all = read_graph6_file(file.path(), vec![]).unwrap();
    assert_eq!(all.len(), 143);
    let two = read_graph6_file(file.path(), vec![Predicate::Nontrivial, Predicate::GammaT(2)]).unwrap();
    // Connected graphs with a dominating edge.
    let expected = connected_corpus(2, 6)
        .unwrap()
        .into_iter()
        .filter(|r| {
            r.graph
                .edges()
                .any(|(u, v)| r.graph.closed_neighborhood(u).unwrap().union(&r.graph.closed_neighborhood(v).unwrap()).len() == r.graph.n())
        })
        .count();
    assert_eq!(two.len(), expected);
}

#[test]
fn bad_line_reports_its_number() {
    let input = "A_\nBw\nC~x\n";
    let results: Vec<_> = filter_stream(input.as_bytes(), "mem".into(), vec![]).collect();
    assert!(results[0].is_ok() && results[1].is_ok());
    match &results[2] {
        Err(e @ Error::AtLine { line: 3, .. }) => assert!(e.is_format_error()),
        other => panic!("{other:?}"),
    }
}
