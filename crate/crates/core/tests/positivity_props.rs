use orderpoly::ehrhart::{ehrhart_qk_closed_form, run_table1};
use orderpoly::ehrhart::ehrhart_pmn;
use orderpoly::positivity::{poset_with_negatives, qk_negative_count, sign_report};
use orderpoly::poset::make_qk;

#[test]
fn negative_degrees_span_for_qk() {
    for k in 20..=60usize {
        let r = sign_report(&ehrhart_qk_closed_form(k));
        let largest_multiple = k / 4 * 4;
        assert_eq!(*r.negative_degrees.iter().max().unwrap(), k - 19, "k={k}");
        assert_eq!(*r.negative_degrees.iter().min().unwrap(), k + 1 - largest_multiple, "k={k}");
        assert!(r.negative_degrees.iter().all(|&j| (1..=k - 19).contains(&j)));
    }
}

#[test]
fn negative_count_formula() {
    for k in 0..=60 {
        assert_eq!(qk_negative_count(k), sign_report(&ehrhart_qk_closed_form(k)).negative_count(), "k={k}");
    }
}

#[test]
fn family_minimality() {
    for ell in 1..=8usize {
        assert_eq!(poset_with_negatives(ell).unwrap(), make_qk(4 * ell + 16));
        assert_eq!(
            sign_report(&ehrhart_qk_closed_form(4 * ell + 15)).negative_count(),
            ell - 1,
            "ell={ell}"
        );
    }
}

#[test]
fn table1_sign_pattern() {
    let report = run_table1().unwrap();
    for row in &report.rows {
        let positive = sign_report(&ehrhart_pmn(row.m, row.n).unwrap()).is_ehrhart_positive;
        assert_eq!(positive, row.m == 6, "P_{{{},{}}}", row.m, row.n);
    }
}
