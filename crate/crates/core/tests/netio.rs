use proptest::prelude::*;
use trapspaces::fixtures::{f_ex3, FIXTURES};
use trapspaces::netio::{
    export_dot, parse_expression_network, parse_truth_table, write_truth_table, NetworkDocument,
};
use trapspaces::{build_graph, trapping_graph, BooleanNetwork, Error, GraphKind};

/// A test-side expression tree, rendered to text and evaluated independently
/// of the library parser.
#[derive(Clone, Debug)]
enum E {
    Lit(bool),
    Var(usize),
    Not(Box<E>),
    Bin(char, Box<E>, Box<E>),
}

impl E {
    fn render(&self) -> String {
        match self {
            E::Lit(b) => (*b as u8).to_string(),
            E::Var(i) => format!("x{i}"),
            E::Not(e) => format!("!{}", e.render()),
            E::Bin(op, a, b) => format!("({} {op} {})", a.render(), b.render()),
        }
    }

    fn value(&self, x: u32) -> bool {
        match self {
            E::Lit(b) => *b,
            E::Var(i) => (x >> (i - 1)) & 1 == 1,
            E::Not(e) => !e.value(x),
            E::Bin('&', a, b) => a.value(x) & b.value(x),
            E::Bin('|', a, b) => a.value(x) | b.value(x),
            E::Bin(_, a, b) => a.value(x) ^ b.value(x),
        }
    }
}

fn expr(n: usize) -> impl Strategy<Value = E> {
    let leaf = prop_oneof![any::<bool>().prop_map(E::Lit), (1..=n).prop_map(E::Var)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| E::Not(Box::new(e))),
            (prop::sample::select(vec!['&', '|', '^']), inner.clone(), inner)
                .prop_map(|(op, a, b)| E::Bin(op, Box::new(a), Box::new(b))),
        ]
    })
}

fn expression_network() -> impl Strategy<Value = (usize, Vec<E>)> {
    (1usize..=6).prop_flat_map(|n| (Just(n), prop::collection::vec(expr(n), n)))
}

fn network(max_n: usize) -> impl Strategy<Value = BooleanNetwork> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u32..1 << n, 1 << n)
            .prop_map(move |t| BooleanNetwork::from_table(n, t).unwrap())
    })
}

#[test]
fn shipped_fixtures_are_canonical() {
    for (label, text) in FIXTURES {
        let doc = parse_truth_table(text).unwrap();
        let written = write_truth_table(&doc);
        assert_eq!(parse_truth_table(&written).unwrap(), doc, "{label}");
        // comments other than the name line are dropped, rows are kept verbatim
        let rows = |s: &str| {
            s.lines()
                .filter(|l| !l.starts_with('#'))
                .map(str::to_string)
                .collect::<Vec<_>>()
        };
        assert_eq!(rows(&written), rows(text), "{label}");
    }
}

#[test]
fn parse_errors() {
    let err = parse_truth_table("n=2\n00 01\n10 1x\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    assert!(matches!(parse_truth_table("00 01\n").unwrap_err(), Error::Parse { line: 1, .. }));
    assert!(matches!(parse_truth_table("n=1\n0  1\n1 1\n").unwrap_err(), Error::Parse { line: 2, .. }));
    let err = parse_expression_network("x1, x1 &\n").unwrap_err();
    assert!(matches!(err, Error::Syntax { line: 1, .. }), "{err}");
    assert!(parse_expression_network("x1, x2\n").is_err());
    assert!(parse_expression_network("x2, x1\n").is_err());
}

#[test]
fn expression_precedence() {
    // ! binds tightest, then &, ^, |
    let doc = parse_expression_network("x1, x1 | x2 & !x2 ^ 1\nx2, x2\n").unwrap();
    for x in 0u32..4 {
        let (a, b) = (x & 1 == 1, x & 2 == 2);
        let expected = a | ((b & !b) ^ true);
        assert_eq!(doc.network.table()[x as usize] & 1 == 1, expected);
    }
}

#[test]
fn dot_output_is_stable() {
    let f = f_ex3();
    let layers = [
        build_graph(&f, GraphKind::Asynchronous).unwrap(),
        build_graph(&f, GraphKind::General).unwrap(),
        trapping_graph(&f).unwrap(),
    ];
    let labels = ["asynchronous", "general asynchronous", "trapping"];
    let first = export_dot(&layers, &labels).unwrap();
    for _ in 0..5 {
        assert_eq!(export_dot(&layers, &labels).unwrap(), first);
    }
    assert!(first.contains("\"001\" -> \"111\" [color=orange];"));
    assert!(first.contains("\"000\" -> \"110\" [color=magenta];"));
    assert!(first.contains("\"000\" -> \"100\" [color=blue];"));
    let reversed = [layers[1].clone(), layers[0].clone()];
    assert_eq!(export_dot(&reversed, &[]).unwrap_err(), Error::LayersNotNested(0, 1));
}

proptest! {
    #[test]
    fn truth_tables_round_trip(f in network(6), named in any::<bool>()) {
        let mut doc = NetworkDocument::new(f);
        if named {
            doc.name = Some("sample".into());
        }
        let text = write_truth_table(&doc);
        prop_assert_eq!(&parse_truth_table(&text).unwrap(), &doc);
        prop_assert_eq!(write_truth_table(&parse_truth_table(&text).unwrap()), text);
    }

    #[test]
    fn expressions_match_brute_force((n, rules) in expression_network(), rotate in 0usize..6) {
        // lines may come in any order
        let mut lines: Vec<String> = rules
            .iter()
            .enumerate()
            .map(|(i, e)| format!("x{}, {}", i + 1, e.render()))
            .collect();
        lines.rotate_left(rotate % n);
        let doc = parse_expression_network(&lines.join("\n")).unwrap();
        prop_assert_eq!(doc.dimension(), n);
        for x in 0u32..1 << n {
            let expected: u32 = rules
                .iter()
                .enumerate()
                .map(|(i, e)| (e.value(x) as u32) << i)
                .sum();
            prop_assert_eq!(doc.network.table()[x as usize], expected);
        }
    }
}
