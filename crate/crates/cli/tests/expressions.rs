use proptest::prelude::*;
use symkron::combinat::enumerate_partitions;
use symkron::{Basis, ContingencyMatrix, Rational, SymFunc};
use symkron_cli::{evaluate, parse};

fn basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::ALL.to_vec())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// A nonzero symmetric function of degree at most 5.
fn symfunc() -> impl Strategy<Value = SymFunc> {
    (basis(), 0usize..=5)
        .prop_flat_map(|(b, d)| {
            let parts = enumerate_partitions(d);
            let n = parts.len();
            prop::collection::vec((0..n, rational()), 1..=n.min(4)).prop_map(move |terms| {
                let mut f = SymFunc::zero(b, d);
                for (k, q) in terms {
                    let t = SymFunc::from_terms(b, d, [(parts[k].clone(), q)]).unwrap();
                    f = f.checked_add(&t).unwrap();
                }
                f
            })
        })
        .prop_filter("nonzero", |f| !f.is_zero())
}

fn atom_text(b: Basis, parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("{b}[{}]", inner.join(","))
}

/// Atoms of one degree, each with a small integer coefficient.
fn operands(d: usize) -> impl Strategy<Value = Vec<String>> {
    let parts = enumerate_partitions(d);
    let n = parts.len();
    prop::collection::vec((basis(), 0..n, 1i64..=3), 2..=4).prop_map(move |atoms| {
        atoms
            .into_iter()
            .map(|(b, k, c)| format!("{c}*{}", atom_text(b, parts[k].parts())))
            .collect()
    })
}

/// Brackets `items` into a binary tree whose split points come from `splits`.
fn bracket(items: &[String], op: &str, splits: &mut impl Iterator<Item = usize>) -> String {
    if items.len() == 1 {
        return items[0].clone();
    }
    let at = 1 + splits.next().unwrap_or(0) % (items.len() - 1);
    format!(
        "({} {op} {})",
        bracket(&items[..at], op, splits),
        bracket(&items[at..], op, splits)
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn parse_inverts_render(f in symfunc()) {
        let text = f.to_string();
        let back = evaluate(&parse(&text).unwrap(), f.basis()).unwrap();
        prop_assert_eq!(back, f, "{}", text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sums_ignore_bracketing(items in operands(4), splits in prop::collection::vec(0usize..8, 8), target in basis()) {
        let flat = items.join(" + ");
        let nested = bracket(&items, "+", &mut splits.into_iter());
        prop_assert_eq!(
            evaluate(&parse(&flat).unwrap(), target).unwrap(),
            evaluate(&parse(&nested).unwrap(), target).unwrap()
        );
    }

    #[test]
    fn internal_products_ignore_bracketing(items in operands(3), splits in prop::collection::vec(0usize..8, 8)) {
        let flat = items.join(" # ");
        let nested = bracket(&items, "#", &mut splits.into_iter());
        prop_assert_eq!(
            evaluate(&parse(&flat).unwrap(), Basis::Schur).unwrap(),
            evaluate(&parse(&nested).unwrap(), Basis::Schur).unwrap()
        );
    }

    #[test]
    fn outer_products_ignore_bracketing(items in operands(1), splits in prop::collection::vec(0usize..8, 8), target in basis()) {
        let flat = items.join(" . ");
        let nested = bracket(&items, ".", &mut splits.into_iter());
        prop_assert_eq!(
            evaluate(&parse(&flat).unwrap(), target).unwrap(),
            evaluate(&parse(&nested).unwrap(), target).unwrap()
        );
    }

    #[test]
    fn precedence_matches_explicit_brackets(a in operands(2), b in operands(1)) {
        // '.' binds tighter than '+', and scalar '*' tighter than '.'
        let text = format!("{} + {} . {}", a[0], b[0], b[1]);
        let explicit = format!("{} + (({}) . ({}))", a[0], b[0], b[1]);
        prop_assert_eq!(
            evaluate(&parse(&text).unwrap(), Basis::Schur).unwrap(),
            evaluate(&parse(&explicit).unwrap(), Basis::Schur).unwrap()
        );
    }

    #[test]
    fn symfunc_json_round_trips(f in symfunc()) {
        let json = serde_json::to_string(&f).unwrap();
        let back: SymFunc = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }
}

fn run(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = symkron_cli::run(
        std::iter::once("symkron").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn cli_json_matches_library_schema() {
    let (code, out) = run(&[
        "--format",
        "json",
        "convert",
        "--expr",
        "2*s[2,1] - s[1,1,1]",
        "--basis",
        "p",
    ]);
    assert_eq!(code, 0);
    let f: SymFunc = serde_json::from_str(&out).unwrap();
    let expected = evaluate(&parse("2*s[2,1] - s[1,1,1]").unwrap(), Basis::PowerSum).unwrap();
    assert_eq!(f, expected);

    let (code, out) = run(&[
        "--format",
        "json",
        "contingency",
        "--lambda",
        "3,1",
        "--mu",
        "2,1,1",
    ]);
    assert_eq!(code, 0);
    let matrices: Vec<ContingencyMatrix> = serde_json::from_str(&out).unwrap();
    assert_eq!(matrices.len(), 3);
    assert_eq!(matrices[2].rows(), &[vec![1, 1, 1], vec![1, 0, 0]]);
    assert!(matrices.iter().all(|a| a.row_sums().parts() == [3, 1]));
}

#[test]
fn verify_json_reports_every_check() {
    let (code, out) = run(&[
        "--format",
        "json",
        "verify",
        "--suite",
        "jacobi-trudi",
        "--d",
        "4",
        "--seed",
        "9",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["suite"], "jacobi-trudi");
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 9);
    assert_eq!(v["checks"].as_array().unwrap().len(), 5);
}
