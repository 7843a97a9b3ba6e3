use proptest::prelude::*;
use valdist::dsl::{
    elaborate, elaborate_diffpoly, elaborate_poly, elaborate_ratfunc, parse, print_diffpoly, print_poly, print_ratfunc,
    print_value, Context, ElabError, Value,
};
use valdist::io;
use valdist_core::algebra::DiffPoly;
use valdist_core::scalar::rat;
use valdist_core::{Poly, RatFunc};

fn poly_from(c: &[(i64, i64)]) -> Poly {
    Poly::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-60i64..=60, 1i64..=12), 1..=5)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (coeffs(), coeffs()).prop_filter_map("nonzero denominator", |(n, d)| {
        RatFunc::new(poly_from(&n), poly_from(&d)).ok()
    })
}

fn diffpoly() -> impl Strategy<Value = DiffPoly> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec((ratfunc(), prop::collection::vec(0u32..=3, n)), 0..=4)
            .prop_map(move |terms| DiffPoly::from_terms(n, terms).unwrap())
    })
}

/// Characters that make up valid expressions, plus a few that do not.
fn noisy_text() -> impl Strategy<Value = String> {
    prop::collection::vec(
        prop::sample::select(vec![
            "z", "X", "0", "1", "7", "12", "+", "-", "*", "/", "^", "(", ")", " ", "X1", "$",
        ]),
        0..=14,
    )
    .prop_map(|parts| parts.concat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn polynomials_round_trip(c in coeffs()) {
        let f = poly_from(&c);
        let text = print_poly(&f);
        let back = elaborate_poly(&text).unwrap();
        prop_assert_eq!(io::poly(&back).to_string(), io::poly(&f).to_string());
    }

    #[test]
    fn rational_functions_round_trip(f in ratfunc()) {
        let text = print_ratfunc(&f);
        let back = elaborate_ratfunc(&text).unwrap();
        prop_assert_eq!(io::ratfunc(&back).to_string(), io::ratfunc(&f).to_string());
    }

    #[test]
    fn difference_polynomials_round_trip(p in diffpoly()) {
        let text = print_diffpoly(&p);
        let back = elaborate_diffpoly(&text, Some(p.nvars())).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn syntax_errors_point_into_the_offending_token(text in noisy_text()) {
        if let Err(e) = parse(&text) {
            prop_assert!(e.offset <= text.len());
            if e.offset < text.len() {
                let c = text[e.offset..].chars().next().unwrap();
                prop_assert!(!c.is_whitespace(), "offset {} of {:?} is whitespace", e.offset, text);
            } else {
                prop_assert_eq!(e.found, "end of input");
            }
        }
    }
}

#[test]
fn values_print_in_their_context() {
    for (text, ctx) in [
        ("z^2 - 5*z", Context::Poly),
        ("1/(z-5)", Context::RatFunc),
        ("X0^2*X1/z", Context::DiffPoly),
    ] {
        let v = elaborate(text, ctx).unwrap();
        assert_eq!(elaborate(&print_value(&v), ctx).unwrap(), v);
    }
    assert!(matches!(
        elaborate("X0 + z", Context::DiffPoly).unwrap(),
        Value::DiffPoly(_)
    ));
}

#[test]
fn context_errors() {
    assert!(matches!(
        elaborate("X0", Context::RatFunc),
        Err(ElabError::ContextViolation { .. })
    ));
    assert!(matches!(
        elaborate("1/z", Context::Poly),
        Err(ElabError::ContextViolation { .. })
    ));
    assert!(matches!(
        elaborate("X0/(z-z)", Context::DiffPoly),
        Err(ElabError::DivisionByZeroFunction { offset: 3 })
    ));
    assert!(matches!(elaborate("z^-1", Context::RatFunc), Err(ElabError::Syntax(e)) if e.offset == 2));
}
