use num_bigint::BigUint;
use symcay::oracle::{default_moment_depth, exact_moments, verify_exact, verify_float, OracleLimits};
use symcay::partitions::{enumerate_partitions, Partition};
use symcay::symgroup::{build_adjacency, factorial, ClassSpec, ORACLE_CAP};

fn single_class_specs(n: usize) -> Vec<ClassSpec> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|t| *t != Partition::column(n))
        .map(|t| ClassSpec::new(n, [t]).unwrap())
        .collect()
}

#[test]
fn every_single_class_matches_exactly() {
    let limits = OracleLimits::default();
    for n in 3..=5 {
        for spec in single_class_specs(n) {
            let v = verify_exact(&spec, default_moment_depth(n), &limits).unwrap();
            assert!(v.matched, "{spec}: {:?}", v.detail);
        }
    }
}

#[test]
fn multi_class_unions_match_exactly() {
    let limits = OracleLimits::default();
    for (n, classes) in [
        (4, "4;2,1,1"),
        (4, "3,1;2,2"),
        (4, "4;3,1;2,2;2,1,1"),
        (5, "5;2,1,1,1"),
        (5, "3,2;2,2,1"),
        (5, "4,1;3,1,1;5"),
    ] {
        let spec = ClassSpec::parse(n, classes).unwrap();
        let v = verify_exact(&spec, default_moment_depth(n), &limits).unwrap();
        assert!(v.matched, "{spec}: {:?}", v.detail);
    }
}

#[test]
fn handshake_moment() {
    let limits = OracleLimits::default();
    for n in 2..=5 {
        for spec in ClassSpec::all_for(n).into_iter().step_by(3) {
            let adj = build_adjacency(&spec, ORACLE_CAP).unwrap();
            let m = exact_moments(&adj, 2, &limits).unwrap();
            assert_eq!(m[2], factorial(n) * spec.connection_set_size(), "{spec}");
        }
    }
}

#[test]
fn float_and_exact_verdicts_agree() {
    let limits = OracleLimits::default();
    for n in 3..=5 {
        for spec in single_class_specs(n) {
            let k = default_moment_depth(n);
            let exact = verify_exact(&spec, k, &limits).unwrap();
            let float = verify_float(&spec, 1e-6, &limits).unwrap();
            assert_eq!(exact.matched, float.matched, "{spec}");
        }
    }
}

#[test]
fn adjacency_structure() {
    for n in 2..=5 {
        for spec in ClassSpec::all_for(n) {
            let adj = build_adjacency(&spec, ORACLE_CAP).unwrap();
            let s: usize = spec.connection_set_size().try_into().unwrap();
            assert!(adj.is_symmetric() && adj.has_zero_diagonal(), "{spec}");
            assert!((0..adj.order()).all(|u| adj.row_sum(u) == s), "{spec}");
        }
    }
    for n in 3..=6 {
        let adj = build_adjacency(&ClassSpec::n_cycles(n).unwrap(), ORACLE_CAP).unwrap();
        assert_eq!(adj.component_count(), if n % 2 == 0 { 1 } else { 2 }, "n = {n}");
    }
}

#[test]
fn six_vertex_oracle_depth_guard() {
    let k = default_moment_depth(3);
    assert_eq!(k, 5);
    let m = exact_moments(
        &build_adjacency(&ClassSpec::n_cycles(3).unwrap(), ORACLE_CAP).unwrap(),
        k,
        &OracleLimits::default(),
    )
    .unwrap();
    // two triangles: 2 * (2^k + 2(-1)^k)
    let expected: Vec<BigUint> = (0..=k as u32)
        .map(|k| {
            let v = 2 * (2i64.pow(k) + 2 * (-1i64).pow(k));
            BigUint::from(v as u64)
        })
        .collect();
    assert_eq!(m, expected);
}
