//! Every benchmark function against a direct loop-by-loop transcription of
//! its formula.

mod common;

use common::{oracle_mismatches, ORACLE_POINTS, ORACLE_REL_TOL};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use windplan::benchmarks::{evaluate, spec, FunctionId};

#[test]
fn all_functions_match_formula_oracle() {
    let bad = oracle_mismatches(ORACLE_POINTS, ORACLE_REL_TOL);
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn zeros_at_known_minimizers() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let f = |n: u8| FunctionId::new(n).unwrap();
    assert_eq!(evaluate(f(1), &[0.0; 30], &mut rng).unwrap(), 0.0);
    assert_eq!(evaluate(f(5), &[1.0; 30], &mut rng).unwrap(), 0.0);
    assert_eq!(evaluate(f(7), &[0.0; 30], &mut rng).unwrap(), 0.0);
}

#[test]
fn low_dimensional_minima_match_table() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let cases: [(u8, Vec<f64>); 5] = [
        (12, vec![0.0898, -0.7126]),
        (
            13,
            vec![0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573],
        ),
        (14, vec![4.0; 4]),
        (15, vec![4.0; 4]),
        (16, vec![4.0; 4]),
    ];
    for (n, x) in cases {
        let id = FunctionId::new(n).unwrap();
        let v = evaluate(id, &x, &mut rng).unwrap();
        assert!(
            (v - spec(id).known_min).abs() < 0.01,
            "{id}: {v} vs {}",
            spec(id).known_min
        );
    }
}
