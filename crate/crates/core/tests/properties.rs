use proptest::prelude::*;
use qchar::char_ring::{decompose_p, ev, is_in_jn, kernel_decompose, lift_weight, PBasisExpansion};
use qchar::expr::{from_json, parse_poly, render_text, to_json};
use qchar::laurent::{rat, Exponent, ExponentVector, LaurentPoly};
use qchar::perm::{symmetric_group, Permutation};
use qchar::schur::{odd_product, schur_p, schur_s, weights_in_box, GeneralWeight, Weight};
use qchar::super_rings::{coset_split, is_in_ring, RingId};
use qchar::weyl_groupoid::{build_groupoid, check_functoriality, is_groupoid_invariant, AffineRealization};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly_with(n: usize, den: i64, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        (prop::collection::vec(-4i64..=4, n), -9i64..=9, 1i64..=4),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .map(|(e, p, q)| {
                let exps: Vec<Exponent> = e.iter().map(|&k| Exponent::new(k, den)).collect();
                (ExponentVector::new(&exps), rat(p, q))
            })
            .collect();
        LaurentPoly::make(terms, n).unwrap()
    })
}

fn poly(n: usize) -> impl Strategy<Value = LaurentPoly> {
    prop_oneof![poly_with(n, 1, 5), poly_with(n, 2, 4)]
}

fn integral_poly(n: usize) -> impl Strategy<Value = LaurentPoly> {
    poly_with(n, 1, 5)
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    let all = symmetric_group(n);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

fn weight(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Weight> {
    let all = weights_in_box(n, lo, hi);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

fn expansion(n: usize) -> impl Strategy<Value = PBasisExpansion> {
    prop::collection::vec((weight(n, -2, 3), -6i64..=6, 1i64..=4), 0..=4).prop_map(move |terms| {
        let mut out = PBasisExpansion::new(n);
        for (l, p, q) in terms {
            out.add(l, rat(p, q));
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(3), g in poly(3), h in poly(3)) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &LaurentPoly::one(3), f.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(f in poly(2), g in poly(2)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn permutation_action_composes(f in poly(3), w in perm(3), v in perm(3)) {
        let lhs = f.act_permutation(&w.compose(&v)).unwrap();
        let rhs = f.act_permutation(&v).unwrap().act_permutation(&w).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(w.compose(&v).sign(), w.sign() * v.sign());
    }

    #[test]
    fn permutation_action_is_a_ring_map(f in poly(3), g in poly(3), w in perm(3)) {
        let act = |p: &LaurentPoly| p.act_permutation(&w).unwrap();
        prop_assert_eq!(act(&(&f * &g)), &act(&f) * &act(&g));
    }

    #[test]
    fn wall_substitution_is_multiplicative(f in integral_poly(3), g in integral_poly(3), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        let w = |p: &LaurentPoly| p.wall_substitute(i, j).unwrap();
        prop_assert_eq!(w(&(&f * &g)), &w(&f) * &w(&g));
        prop_assert_eq!(w(&(&f + &g)), &w(&f) + &w(&g));
    }

    #[test]
    fn components_sum_back(f in poly(3)) {
        let by_degree: LaurentPoly = f
            .homogeneous_components()
            .into_values()
            .fold(LaurentPoly::zero(3), |acc, c| acc + c);
        prop_assert_eq!(&by_degree, &f);
        if let Ok(classes) = f.coset_components() {
            let by_class = classes.into_values().fold(LaurentPoly::zero(3), |acc, c| acc + c);
            prop_assert_eq!(by_class, f);
        }
    }

    #[test]
    fn text_and_json_roundtrip(f in poly(3)) {
        prop_assert_eq!(parse_poly(&render_text(&f), 3).unwrap(), f.clone());
        prop_assert_eq!(from_json(&to_json(&f).to_string()).unwrap(), f);
    }

    #[test]
    fn decomposition_roundtrip(truth in expansion(3)) {
        prop_assert_eq!(decompose_p(&truth.reconstruct()).unwrap(), truth);
    }

    #[test]
    fn p_basis_is_normalized(l in weight(4, -2, 3)) {
        let d = decompose_p(&schur_p(&l)).unwrap();
        prop_assert_eq!(d.len(), 1);
        prop_assert!(d.coeff(&l) == rat(1, 1));
    }

    #[test]
    fn products_stay_in_jn(l in weight(3, -2, 2), m in weight(3, -2, 2)) {
        let f = &schur_p(&l) * &schur_p(&m);
        prop_assert!(is_in_jn(&f).unwrap().member);
        prop_assert_eq!(decompose_p(&f).unwrap().reconstruct(), f.clone());
        prop_assert!(is_groupoid_invariant(&f).unwrap());
    }

    #[test]
    fn ev_is_multiplicative_and_inverts_lift(l in weight(4, -2, 2), m in weight(4, -2, 2), mu in weight(2, -3, 3)) {
        let (p, q) = (schur_p(&l), schur_p(&m));
        prop_assert_eq!(ev(&(&p * &q)).unwrap(), &ev(&p).unwrap() * &ev(&q).unwrap());
        prop_assert_eq!(ev(&schur_p(&lift_weight(&mu))).unwrap(), schur_p(&mu));
    }

    #[test]
    fn kernel_factorization_reconstructs(parts in prop::collection::vec(-2i64..=3, 3)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mu = GeneralWeight::new(parts).unwrap();
        let f = &odd_product(3) * &schur_s(&mu);
        let k = kernel_decompose(&f).unwrap();
        prop_assert_eq!(k.reconstruct(), f.clone());
        prop_assert_eq!(k.to_p_expansion().reconstruct(), f);
    }

    #[test]
    fn group_rings_agree(f in integral_poly(2)) {
        let q = is_in_ring(&f, RingId::GroupQ).unwrap();
        prop_assert_eq!(&q, &is_in_ring(&f, RingId::GroupSQ).unwrap());
        prop_assert_eq!(q.member, is_groupoid_invariant(&f).unwrap());
        if q.member {
            prop_assert!(is_in_ring(&f, RingId::AlgebraQ).unwrap().member);
        }
    }

    #[test]
    fn coset_split_reconstructs(l in weight(2, -2, 2), mu in prop::collection::vec(-1i64..=2, 2), num in 1i64..=5, den in 2i64..=6) {
        prop_assume!(num % den != 0);
        let mut mu = mu;
        mu.sort_unstable_by(|a, b| b.cmp(a));
        let a = Exponent::new(num, den);
        let det = LaurentPoly::monomial(ExponentVector::new(&[a, a]), rat(1, 1));
        let f = schur_p(&l) + &(&odd_product(2) * &det) * &schur_s(&GeneralWeight::new(mu).unwrap());
        let d = coset_split(&f).unwrap();
        prop_assert_eq!(d.reconstruct(), f);
    }

    #[test]
    fn groupoid_words_are_functorial(seed in any::<u64>(), len in 0usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = build_groupoid(3).unwrap();
        for &obj in &g.objects {
            let m = g.random_word(obj, len, &mut rng);
            let x = AffineRealization::of(obj).sample(3, &mut rng);
            prop_assert!(check_functoriality(&m, &x));
        }
    }
}
