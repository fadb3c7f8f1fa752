use frobenius_masa::algebra::freedom_degree;
use frobenius_masa::classify::{derivations_direct, derivations_via_normalizer, eig_profile};
use frobenius_masa::corpus::{build, standard_entries, FAMILIES};
use frobenius_masa::exact::{int, is_squarefree};
use frobenius_masa::frobenius::build_semidirect;
use frobenius_masa::matrix::{char_poly, Mat};
use frobenius_masa::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn bnp_freedom_degrees_distinct() {
    for n in 2..=6 {
        let mut seen: Vec<usize> = (1..n).map(|p| freedom_degree(&build("Bnp", &[n, p]).unwrap().generators).unwrap()).collect();
        assert_eq!(seen, (1..n).map(|p| n - p).collect::<Vec<_>>());
        seen.dedup();
        assert_eq!(seen.len(), n - 1);
    }
}

#[test]
fn builder_examples() {
    let g = build("gerstenhaber4", &[]).unwrap();
    assert_eq!(g.generators.len(), 4);
    assert_eq!(g.algebra.dim(), 5);
    assert!(matches!(build("winternitz", &[0]), Err(Error::InvalidParams { .. })));
    assert!(matches!(build("Bnp", &[3, 0]), Err(Error::InvalidParams { .. })));
    for (name, _) in FAMILIES {
        assert!(!matches!(build(name, &[]), Err(Error::UnknownFamily(_))), "{name}");
    }
    assert_eq!(build("G31", &[]).unwrap().algebra.basis(), build("B31", &[]).unwrap().algebra.basis());
}

fn invertible(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    loop {
        let p = Mat::new(n, n, (0..n * n).map(|_| int(rng.gen_range(-3..=3))).collect()).unwrap();
        if p.inverse().is_some() {
            return p;
        }
    }
}

#[test]
fn profile_conjugation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for e in standard_entries() {
        let Some(m) = &e.matrix else { continue };
        let want = eig_profile(m).unwrap();
        for _ in 0..10 {
            let p = invertible(&mut rng, e.n());
            let pm = &(&p * m) * &p.inverse().unwrap();
            assert_eq!(eig_profile(&pm).unwrap(), want, "{} {:?}", e.name, e.params);
        }
    }
}

#[test]
fn squarefree_iff_inner_derivations_only() {
    for e in standard_entries() {
        let Some(m) = &e.matrix else { continue };
        let b = frobenius_masa::algebra::closure(e.n(), std::slice::from_ref(m)).unwrap();
        let g = build_semidirect(&b).unwrap();
        let der = derivations_direct(g.lie()).dimension();
        let sf = is_squarefree(&char_poly(m).unwrap());
        assert_eq!(sf, der == 2 * e.n(), "{} {:?}", e.name, e.params);
        assert_eq!(derivations_via_normalizer(&b).unwrap(), der);
    }
}
