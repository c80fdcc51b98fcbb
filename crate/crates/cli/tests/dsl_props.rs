use dickson_cli::catalog::PROGRAMS;
use dickson_cli::dsl::{build, parse_spec, render, DiagnosticKind};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = String> {
    prop_oneof![
        (-9i64..10).prop_filter("nonzero", |n| *n != 0).prop_map(|n| n.to_string()),
        (-9i64..10, 1i64..6).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| format!("{n}/{d}")),
    ]
}

fn label_expr() -> impl Strategy<Value = String> {
    prop::collection::vec((-3i64..4, prop::sample::select(vec!["1", "i", "j", "k"])), 1..4).prop_map(|terms| {
        terms.iter().map(|(c, l)| format!("{c}*{l}")).collect::<Vec<_>>().join(" + ")
    })
}

fn program() -> impl Strategy<Value = String> {
    (
        scalar(),
        scalar(),
        label_expr(),
        prop::sample::select(vec!["cay", "cay_m", "cay_r"]),
        prop::bool::ANY,
        prop::collection::vec(scalar(), 4),
    )
        .prop_map(|(a, b, c, placement, opp, coeffs)| {
            let mut s = format!("field Q\nquaternion D = ({a}, {b})\nelement x in D = [{}]\n", coeffs.join(", "));
            s.push_str(&format!("element c in D = {c}\nalgebra A = {placement}(D, c)\n"));
            if opp {
                s.push_str("opposite B = op(A)\n");
            }
            s
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn render_round_trips(text in program()) {
        let p = parse_spec(&text).unwrap();
        prop_assert_eq!(parse_spec(&render(&p)).unwrap(), p.clone());
        prop_assert_eq!(render(&parse_spec(&render(&p)).unwrap()), render(&p));
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,80}") {
        let _ = parse_spec(&text);
    }

    #[test]
    fn build_errors_carry_locations(text in program()) {
        let p = parse_spec(&text).unwrap();
        match build(&p) {
            Ok(env) => prop_assert!(env.algebra("A").is_some()),
            Err(d) => {
                prop_assert!(d.line >= 1 && d.line <= text.lines().count());
                prop_assert!(d.col >= 1);
                prop_assert!(d.kind == DiagnosticKind::InvalidConstruction, "{}", d);
            }
        }
    }
}

#[test]
fn catalog_programs_round_trip() {
    for text in PROGRAMS {
        let p = parse_spec(text).unwrap();
        assert_eq!(parse_spec(&render(&p)).unwrap(), p);
        assert!(build(&p).is_ok());
    }
}
