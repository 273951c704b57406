use hodge_core::detsym::{a_dis_ideal_t2, build_minor_hodge_data, detsym_report, exhibited_facets, omega_ideal, x_var};
use hodge_core::monomial::MonomialIdeal;
use hodge_core::FieldSpec;

#[test]
fn omega_ideals_are_poset_ideals() {
    for n in 1..=4 {
        let data = build_minor_hodge_data(n).unwrap();
        for t in 1..=n {
            let omega = omega_ideal(&data, t).unwrap();
            assert!(data.poset().is_ideal(omega.members()), "n = {n}, t = {t}");
        }
    }
}

#[test]
fn core_drops_the_corner_minors() {
    for n in 3..=4 {
        let data = build_minor_hodge_data(n).unwrap();
        let reduced = data.quotient(&omega_ideal(&data, 2).unwrap()).unwrap();
        let (_, removed) = reduced.core();
        assert_eq!(removed, ["[1|1]".to_string(), format!("[{n}|{n}]")]);
    }
}

#[test]
fn regular_part_is_the_corner_variables() {
    for n in 3..=5 {
        let ideal = a_dis_ideal_t2(n).unwrap();
        let support = ideal.support();
        let absent: Vec<&str> = (0..ideal.variables().len())
            .filter(|v| !support.contains(v))
            .map(|v| ideal.variables()[v].as_str())
            .collect();
        assert_eq!(absent, [x_var(n, 1, 1), x_var(n, n, n)]);
    }
}

#[test]
fn colon_by_the_maximal_ideal() {
    let vars = ["X12", "X13", "X22", "X23"];
    let i = MonomialIdeal::from_named(
        &vars,
        &[
            vec![("X12", 2)],
            vec![("X12", 1), ("X13", 1)],
            vec![("X13", 2)],
            vec![("X13", 1), ("X22", 1)],
            vec![("X13", 1), ("X23", 1)],
            vec![("X23", 2)],
        ],
    )
    .unwrap();
    let m = MonomialIdeal::from_named(&vars, &[vec![("X12", 1)], vec![("X13", 1)], vec![("X22", 1)], vec![("X23", 1)]])
        .unwrap();
    let expected = MonomialIdeal::from_named(&vars, &[vec![("X12", 2)], vec![("X13", 1)], vec![("X23", 2)]]).unwrap();
    assert_eq!(i.colon(&m).unwrap(), expected);
    assert_eq!(expected.to_string(), "(X12^2, X13, X23^2)");
}

#[test]
fn small_reports_follow_the_formulas() {
    for n in 3..=4 {
        for f in [FieldSpec::RATIONAL, FieldSpec::GF2] {
            let r = detsym_report(n, f).unwrap();
            assert_eq!((r.dim, r.depth, r.core_dim, r.core_depth), (n, 2, n - 2, 0), "n = {n}, {f}");
            assert!(r.facets_present);
            assert_eq!(r.facet_sizes, [n * (n - 1) / 2 + 2, n * (n + 1) / 2]);
            // depth is bounded by the smallest facet
            assert!(r.polarized_depth <= r.facet_sizes[0]);
            assert!(r.polarized_dim - r.polarized_depth >= n - 2);
            assert_eq!(r.regular_part, [x_var(n, 1, 1), x_var(n, n, n)]);
        }
    }
}

#[test]
fn exhibited_facets_are_disjoint_from_the_ideal() {
    let (small, large) = exhibited_facets(3);
    assert_eq!(small.len(), 5);
    assert_eq!(large.len(), 6);
    assert!(small.contains(&"X11".to_string()) && large.contains(&"X13(2)".to_string()));
}

#[test]
fn report_rejects_small_n() {
    assert!(detsym_report(2, FieldSpec::RATIONAL).is_err());
}
