// B_{n,n} and B'_{n,n}: which computable invariants tell the semidirect
// products apart.

use frobenius_masa::classify::{invariant_bundle, separating_invariants};
use frobenius_masa::corpus::build;

#[test]
fn bundles_separate() {
    for n in 3..=6 {
        let a = invariant_bundle(&build("Bnn", &[n]).unwrap().algebra).unwrap();
        let b = invariant_bundle(&build("BnnPrime", &[n]).unwrap().algebra).unwrap();
        let sep = separating_invariants(&a, &b);
        println!("n = {n}: Bnn [{a}] / BnnPrime [{b}] -> {sep:?}");
        if n == 3 {
            assert!(sep.is_empty());
        } else {
            assert_eq!(sep, ["square form"], "n = {n}");
            assert_eq!(a.square_form.unwrap().abs_signature, n - 2);
            assert!(b.square_form.unwrap().abs_signature <= 1);
        }
    }
}
