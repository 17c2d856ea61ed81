use pairmds::algebra::linalg::RankScratch;
use pairmds::code::SupportSolver;
use pairmds::distance::{bar_code, dh_repeated_root, radix_weight, weight_decomposition};
use pairmds::families::{build_family, theorem1_code, theorem2_code, theorem3_code, FamilyName};
use pairmds::metric::{is_mds_hamming, run_profile};
use pairmds::pairsearch::{class_size, enumerate_patterns, exact_pair_distance, SearchOptions};
use pairmds::{Codeword, FieldElement, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn encoding_is_linear_and_closed() {
    let code = theorem1_code(5).unwrap();
    let f = code.field();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let msg = |rng: &mut ChaCha8Rng| -> Vec<FieldElement> {
        (0..code.k())
            .map(|_| f.from_u64(rng.gen_range(0..5)))
            .collect()
    };
    for _ in 0..1000 {
        let (a, b) = (msg(&mut rng), msg(&mut rng));
        let s = rng.gen_range(0..5u64);
        let ca = code.encode(&a).unwrap();
        let cb = code.encode(&b).unwrap();
        assert!(code.contains(&ca).unwrap());
        assert!(code.contains(&code.shift(&ca).unwrap()).unwrap());
        let sum: Vec<FieldElement> = a
            .iter()
            .zip(&b)
            .map(|(&x, &y)| x * f.from_u64(s) + y)
            .collect();
        assert_eq!(code.encode(&sum).unwrap(), ca.scale(s).add(&cb));
    }
}

#[test]
fn theorem1_witnesses() {
    for p in [3u64, 5, 7] {
        let code = theorem1_code(p).unwrap();
        let cert = exact_pair_distance(&code).unwrap();
        assert_eq!((cert.d_h, cert.d_p), (4, 7));
        assert!(cert.is_mds_pair);
        let w = cert.witness.unwrap();
        assert!(code.contains(&w).unwrap());
        let prof = run_profile(w.coords());
        assert_eq!(prof.weight() + prof.run_count(), 7);
    }
}

#[test]
fn theorem3_excludes_low_classes() {
    let code = theorem3_code(11).unwrap();
    let cert =
        pairmds::pairsearch::exact_pair_distance_with(&code, SearchOptions::parallel(), |_| {})
            .unwrap();
    assert_eq!((cert.n, cert.k, cert.d_h, cert.d_p), (55, 49, 4, 8));
    assert!(cert.is_mds_pair);
    let excluded: Vec<(usize, usize)> = cert.excluded_classes().map(|c| (c.w, c.r)).collect();
    for class in [(4, 1), (4, 2), (5, 1), (4, 3), (5, 2), (6, 1)] {
        assert!(excluded.contains(&class), "{class:?} not excluded");
    }
    for c in cert.excluded_classes() {
        assert_eq!(c.patterns as u128, class_size(55, c.w, c.r));
    }
}

/// Membership via Hasse derivatives: a root `a` of multiplicity `e` forces
/// `D^(j) c(a) = 0` for `j < e`.
#[test]
fn witnesses_vanish_to_the_right_order() {
    let codes = [
        theorem1_code(5).unwrap(),
        theorem1_code(13).unwrap(),
        theorem2_code(11).unwrap(),
        theorem3_code(11).unwrap(),
    ];
    for code in codes {
        let f = code.field();
        let w = exact_pair_distance(&code)
            .unwrap()
            .witness
            .unwrap()
            .to_polynomial();
        for (m, e) in code.generator().factors() {
            let root = f.neg(m.coeff(0).value());
            let root = f.from_u64(root);
            for j in 0..*e as usize {
                assert!(w.hasse_derivative_eval(root, j).is_zero());
            }
        }
    }
}

#[test]
fn level_products_split_into_blocks() {
    let code = theorem2_code(11).unwrap();
    let f = code.field();
    let base = Polynomial::x_pow_minus(f, code.l(), 1);
    for t in 0..code.p_power() {
        let bar = bar_code(&code, t).unwrap();
        if bar.distance.finite().is_none() {
            continue;
        }
        let c = &base.pow(t) * &bar.generator_poly();
        let word = Codeword::from_polynomial(&c, code.n()).unwrap();
        let d = weight_decomposition(&code, &word).unwrap();
        assert_eq!(d.t, t);
        assert_eq!(
            word.hamming_weight() as u64,
            radix_weight(t, 11) * d.n_v as u64
        );
    }
}

#[test]
fn minimum_weight_word_decomposes_exactly() {
    let code = theorem2_code(11).unwrap();
    let cert = dh_repeated_root(&code).unwrap();
    assert_eq!(cert.d_h, 4);
    let solver = SupportSolver::new(&code);
    let mut scratch = RankScratch::default();
    let n = code.n();
    let mut found = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let pos = [a, b, c, d];
                    if solver.has_solution(&pos, &mut scratch) {
                        found = Some(solver.solve(&pos).remove(0));
                        break 'outer;
                    }
                }
            }
        }
    }
    let word = found.expect("a weight-4 codeword exists");
    assert_eq!(word.hamming_weight(), 4);
    let d = weight_decomposition(&code, &word).unwrap();
    assert_eq!(radix_weight(d.t, 11) * d.n_v as u64, 4);
}

#[test]
fn pattern_classes_cover_each_support_once() {
    let n = 20;
    let mut total = 0u128;
    for w in 1..n {
        for r in 1..=w.min(n - w) {
            let count = enumerate_patterns(n, w, r).unwrap().count() as u128;
            assert_eq!(count, class_size(n, w, r));
            total += count;
        }
    }
    // every support except the empty and the full one
    assert_eq!(total, (1u128 << n) - 2);
}

#[test]
fn every_family_is_not_hamming_mds() {
    for (name, p) in [
        (FamilyName::Thm1, 3u64),
        (FamilyName::Thm1, 5),
        (FamilyName::Thm2, 11),
        (FamilyName::Thm3, 11),
    ] {
        let code = build_family(name, p).unwrap();
        let cert = exact_pair_distance(&code).unwrap();
        assert!(!is_mds_hamming(code.n(), code.k(), cert.d_h));
        assert!(cert.d_p >= cert.d_h + 2);
    }
}
