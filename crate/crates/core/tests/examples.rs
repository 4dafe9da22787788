//! Worked examples for every module, checked exactly.

use hopfsmash::catalog::{self, GroupTable};
use hopfsmash::exact_math::{basis_vector, dot, FieldSpec, Matrix, Scalar, Vector};
use hopfsmash::indicators::{
    module_indicator, p_map, regular_twisted_indicator, theorem41_check, theorem54_check,
    twisted_module_indicator,
};
use hopfsmash::integrals::{
    dual_integral, integral_pair, is_semisimple, left_integral, normalize_pair, right_integral, Side,
};
use hopfsmash::powers_exponents::{
    coprime_power_experiment, exponent, hopf_power, hopf_power_endo, twisted_exponent, twisted_power,
    twisted_power_endo, verify_automorphism, ExponentOutcome, HopfAutomorphism, Q38Verdict,
};
use hopfsmash::representations::{
    character, character_vector, decompose_by_group, dual_rep, extend_to_smash, regular,
    restrict_to_base, tensor_rep, trivial, twist_rep, verify_representation,
};
use hopfsmash::smash::{
    cyclic_action, dual_group_algebra, group_algebra, lemma21_check, smash_coproduct, smash_product,
    verify_action,
};
use hopfsmash::{FiniteHopfAlgebra, HopfError};

fn vec_of(f: &FieldSpec, d: usize, terms: &[(usize, Scalar)]) -> Vector {
    let mut v = vec![f.zero(); d];
    for (i, c) in terms {
        v[*i] = &v[*i] + c;
    }
    v
}

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

#[test]
fn h8_relations() {
    let h = catalog::h8().algebra;
    let f = q();
    let e = |l: &str| h.basis_element(h.index_of(l).unwrap());
    assert_eq!(h.multiply(&e("x"), &e("z")).unwrap(), h.multiply(&e("z"), &e("y")).unwrap());
    assert_eq!(h.multiply(&e("y"), &e("z")).unwrap(), h.multiply(&e("z"), &e("x")).unwrap());
    let z2 = h.multiply(&e("z"), &e("z")).unwrap();
    let half = f.frac(1, 2);
    assert_eq!(z2, vec_of(&f, 8, &[(0, half.clone()), (1, half.clone()), (2, half.clone()), (3, -&half)]));
    for i in 0..8 {
        let b = h.basis_element(i);
        assert_eq!(h.multiply(h.unit(), &b).unwrap(), b);
    }
    // Δz = ½(1⊗1 + 1⊗x + y⊗1 − y⊗x)(z⊗z)
    let d = h.comultiply(&e("z")).unwrap();
    let at = |a: &str, b: &str| d[h.index_of(a).unwrap() * 8 + h.index_of(b).unwrap()].clone();
    assert_eq!(at("z", "z"), half);
    assert_eq!(at("z", "xz"), half);
    assert_eq!(at("yz", "z"), half);
    assert_eq!(at("yz", "xz"), -&half);
    assert_eq!(d.iter().filter(|c| !c.is_zero()).count(), 4);
}

#[test]
fn nichols8_relations() {
    let h = catalog::nichols8().algebra;
    let f = q();
    let (x, y, g) = (h.basis_element(2), h.basis_element(4), h.basis_element(1));
    let xy = h.multiply(&x, &y).unwrap();
    let yx = h.multiply(&y, &x).unwrap();
    assert_eq!(xy, yx.iter().map(|c| -c).collect::<Vec<_>>());
    assert!(h.multiply(&x, &x).unwrap().iter().all(Scalar::is_zero));
    assert_eq!(h.multiply(&g, &g).unwrap(), basis_vector(&f, 8, 0));
    // Δx = x⊗g + 1⊗x
    let d = h.comultiply(&x).unwrap();
    let mut expected = vec![f.zero(); 64];
    expected[2 * 8 + 1] = f.one();
    expected[2] = f.one();
    assert_eq!(d, expected);
    let report = h.verify_hopf_axioms();
    assert!(report.all_passed());
    assert!(!report.antipode_squared_is_identity);
}

#[test]
fn duals_and_convolution() {
    let f = q();
    let s3 = GroupTable::symmetric_group_3();
    assert!(group_algebra(&s3, &f).dual().same_structure(&dual_group_algebra(&s3, &f)));
    let h8 = catalog::h8().algebra;
    assert_eq!(h8.dual().dual(), h8);
    assert!(catalog::nichols8().algebra.dual().verify_hopf_axioms().all_passed());
    for h in [h8, catalog::nichols8().algebra] {
        let ue = h.unit_counit();
        assert_eq!(h.convolve(&h.identity(), h.antipode()), ue);
        assert_eq!(h.convolve(h.antipode(), &h.identity()), ue);
        let f_rand = Matrix::from_fn(h.field(), 8, 8, |i, j| h.field().int(((i * 3 + j * 5) % 7) as i64 - 3));
        assert_eq!(h.convolve(&f_rand, &ue), f_rand);
        assert_eq!(h.convolve(&ue, &f_rand), f_rand);
    }
}

#[test]
fn corrupted_antipode_is_reported() {
    let f = q();
    let h = group_algebra(&GroupTable::cyclic(2), &f);
    let file = hopfsmash::formats::hopf_to_file(&h);
    let mut broken = file.clone();
    broken.antipode = vec![
        hopfsmash::formats::Entry2 { i: 0, j: 0, c: "1".into() },
        hopfsmash::formats::Entry2 { i: 0, j: 1, c: "1".into() },
    ];
    let bad = hopfsmash::formats::hopf_from_file(&broken).unwrap();
    let report = bad.verify_hopf_axioms();
    assert!(!report.all_passed());
    assert!(!report.passed(hopfsmash::hopf_core::Axiom::Antipode));
    assert!(report.passed(hopfsmash::hopf_core::Axiom::Associativity));
}

#[test]
fn integrals_examples() {
    let f = q();
    let kc2 = catalog::kc(2).algebra;
    assert_eq!(left_integral(&kc2).unwrap(), vec![f.one(), f.one()]);
    let kc3 = catalog::kc(3).algebra;
    assert_eq!(right_integral(&kc3).unwrap(), vec![f.one(); 3]);
    assert_eq!(dual_integral(&kc3, Side::Right).unwrap(), basis_vector(&f, 3, 0));
    let ks3 = catalog::ks3_dual().algebra;
    assert_eq!(left_integral(&ks3).unwrap(), basis_vector(&f, 6, 0));
    assert_eq!(dual_integral(&ks3, Side::Left).unwrap(), vec![f.one(); 6]);

    let n8 = catalog::nichols8().algebra;
    let pair = integral_pair(&n8, Side::Left, Side::Right).unwrap();
    assert_eq!(pair.element, vec_of(&f, 8, &[(6, f.one()), (7, f.one())]));
    assert_eq!(pair.functional, basis_vector(&f, 8, 6));

    let pair = integral_pair(&kc2, Side::Left, Side::Right).unwrap();
    assert_eq!(dot(&pair.functional, &pair.element), f.one());
    let doubled: Vec<Scalar> = pair.element.iter().map(|c| c * f.int(2)).collect();
    let rescaled = normalize_pair(&doubled, Side::Left, &pair.functional, Side::Right).unwrap();
    assert_eq!(rescaled.functional, pair.functional.iter().map(|c| c * f.frac(1, 2)).collect::<Vec<_>>());

    for name in catalog::NAMES {
        let h = catalog::lookup(name).unwrap().algebra;
        let s_left = h.antipode().mul_vec(&left_integral(&h).unwrap());
        let right = right_integral(&h).unwrap();
        // S(Λ_l) is a right integral: proportional to the normalized one
        let lead = s_left.iter().find(|c| !c.is_zero()).unwrap().clone();
        assert_eq!(s_left, right.iter().map(|c| c * &lead).collect::<Vec<_>>(), "{name}");
    }
    assert!(is_semisimple(&kc3).unwrap());
    assert!(!is_semisimple(&n8).unwrap());
    assert!(is_semisimple(&catalog::h8().algebra).unwrap());
}

#[test]
fn automorphism_examples() {
    let f = q();
    let e = catalog::h8();
    assert_eq!(e.automorphism("tau4").unwrap().order(), 2);
    let kc2 = catalog::kc(2).algebra;
    let collapse = Matrix::from_ints(&f, &[&[1, 1], &[0, 0]]);
    assert!(verify_automorphism(&kc2, &collapse).is_err());
    // inversion g ↦ g²
    let kc3 = catalog::kc(3).algebra;
    let m = Matrix::from_ints(&f, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    assert!(verify_automorphism(&kc3, &m).is_ok());
}

#[test]
fn power_examples() {
    let f = q();
    let n8 = catalog::nichols8().algebra;
    // x^[2] = xg + x; xg = −gx
    let x2 = hopf_power(&n8, &n8.basis_element(2), 2);
    assert_eq!(x2, vec_of(&f, 8, &[(2, f.one()), (3, f.int(-1))]));

    let kc5 = catalog::kc(5).algebra;
    for n in 1..=6u64 {
        assert_eq!(hopf_power(&kc5, &kc5.basis_element(1), n), kc5.basis_element((n % 5) as usize));
    }

    let s3 = GroupTable::symmetric_group_3();
    let kdual = dual_group_algebra(&s3, &f);
    for x in 0..6 {
        let expected: Vec<Scalar> = (0..6)
            .map(|y| if s3.mul(y, y) == x { f.one() } else { f.zero() })
            .collect();
        assert_eq!(hopf_power(&kdual, &kdual.basis_element(x), 2), expected);
    }

    let kc3 = catalog::kc(3);
    let inv = kc3.automorphism("inversion").unwrap();
    assert_eq!(twisted_power(&kc3.algebra, &kc3.algebra.basis_element(1), 2, inv).unwrap(), basis_vector(&f, 3, 0));
    assert_eq!(
        twisted_power(&kc3.algebra, &kc3.algebra.basis_element(1), 3, inv).unwrap_err(),
        HopfError::OrderDoesNotDivide { order: 2, n: 3 }
    );

    let h8 = catalog::h8().algebra;
    let id = HopfAutomorphism::identity(&h8);
    assert!(twisted_power_endo(&h8, 1, &id).unwrap().is_identity());
    for n in 1..=8 {
        assert_eq!(twisted_power_endo(&h8, n, &id).unwrap(), hopf_power_endo(&h8, n));
    }

    let e = catalog::nichols8();
    let neg = e.automorphism("neg").unwrap();
    let lambda = vec_of(&f, 8, &[(6, f.one()), (7, f.one())]);
    let q2 = twisted_power_endo(&e.algebra, 2, neg).unwrap();
    assert_eq!(q2.mul_vec(&lambda), twisted_power(&e.algebra, &lambda, 2, neg).unwrap());
    let xy_power = twisted_power(&e.algebra, &e.algebra.basis_element(6), 2, neg).unwrap();
    assert_eq!(xy_power[6], f.int(2));
}

#[test]
fn exponent_examples() {
    for n in 1..=6 {
        let h = catalog::kc(n).algebra;
        assert_eq!(exponent(&h, 64).outcome, ExponentOutcome::Found(n as u64));
    }
    let r = exponent(&catalog::ks3_dual().algebra, 64);
    assert_eq!(r.outcome, ExponentOutcome::Found(6));
    assert!(!r.antipode_warning);
    let n8 = exponent(&catalog::nichols8().algebra, 100);
    assert_eq!(n8.outcome, ExponentOutcome::NotFoundUpTo(100));
    assert!(n8.antipode_warning);

    let kc3 = catalog::kc(3);
    assert_eq!(
        twisted_exponent(&kc3.algebra, kc3.automorphism("inversion").unwrap(), 64).outcome,
        ExponentOutcome::Found(2)
    );
    assert_eq!(
        twisted_exponent(&kc3.algebra, kc3.automorphism("id").unwrap(), 64).outcome,
        exponent(&kc3.algebra, 64).outcome
    );
    let kc5 = catalog::kc(5);
    let tau = kc5.automorphism("pow:2").unwrap();
    assert_eq!(tau.order(), 4);
    assert_eq!(twisted_exponent(&kc5.algebra, tau, 64).outcome, ExponentOutcome::Found(4));

    let report = coprime_power_experiment(&kc5.algebra, tau, 64);
    assert_eq!(report.verdict, Q38Verdict::Agree);
    assert_eq!(report.rows, vec![(1, ExponentOutcome::Found(4)), (3, ExponentOutcome::Found(4))]);
    let h8 = catalog::h8();
    let report = coprime_power_experiment(&h8.algebra, h8.automorphism("tau4").unwrap(), 64);
    assert_eq!(report.rows.len(), 1);
    assert_eq!(report.verdict, Q38Verdict::Agree);
    let n8 = catalog::nichols8();
    let report = coprime_power_experiment(&n8.algebra, n8.automorphism("order3").unwrap(), 12);
    assert_eq!(report.rows, vec![(1, ExponentOutcome::Found(6)), (2, ExponentOutcome::Found(6))]);
    assert_eq!(report.verdict, Q38Verdict::Agree);
    let report = coprime_power_experiment(&n8.algebra, n8.automorphism("neg").unwrap(), 40);
    assert_eq!(report.verdict, Q38Verdict::Inconclusive);
}

#[test]
fn smash_examples() {
    let f = q();
    let kc3 = catalog::kc(3);
    let action = catalog::kc3_inversion_action();
    let k = smash_coproduct(&action).unwrap();
    assert_eq!(k.algebra().dim(), 6);
    assert!(smash_product(&action).unwrap().verify_hopf_axioms().all_passed());
    assert!(lemma21_check(&action).unwrap().equal());

    // Λ_K = Λ_A ♮ p₁ is a two-sided integral of K
    let kalg = k.algebra();
    for i in 0..kalg.dim() {
        let b = kalg.basis_element(i);
        let eps = kalg.apply_counit(&b);
        let scaled: Vec<Scalar> = k.integral().iter().map(|c| c * &eps).collect();
        assert_eq!(kalg.multiply(&b, k.integral()).unwrap(), scaled);
        assert_eq!(kalg.multiply(k.integral(), &b).unwrap(), scaled);
    }

    // idempotents
    let mut total = vec![f.zero(); 6];
    for x in 0..2 {
        let e = k.component_idempotent(x);
        for y in 0..2 {
            let prod = kalg.multiply(&e, &k.component_idempotent(y)).unwrap();
            if x == y {
                assert_eq!(prod, e);
            } else {
                assert!(prod.iter().all(Scalar::is_zero));
            }
        }
        assert_eq!(kalg.apply_counit(&e), if x == 0 { f.one() } else { f.zero() });
        total = total.iter().zip(&e).map(|(a, b)| a + b).collect();
    }
    assert_eq!(&total, kalg.unit());

    // trivial group
    let trivial_group = GroupTable::cyclic(1);
    let a = &kc3.algebra;
    let one = verify_action(a, &trivial_group, &[Matrix::identity(&f, 3)]).unwrap();
    let k1 = smash_coproduct(&one).unwrap();
    assert!(k1.algebra().same_structure(a));
    assert!(smash_product(&one).unwrap().same_structure(&a.dual()));

    // H8 with ⟨τ4⟩
    let h = smash_coproduct(&catalog::h8_tau4_action()).unwrap();
    assert_eq!(h.algebra().dim(), 16);
    assert!(lemma21_check(&catalog::h8_tau4_action()).unwrap().equal());

    // both generators of C2 × C2 sent to one matrix of order 2 that is not a homomorphism
    let v4 = GroupTable::new(
        vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]],
        0,
    )
    .unwrap();
    let inv = kc3.automorphism("inversion").unwrap().matrix().clone();
    let id = Matrix::identity(&f, 3);
    let err = verify_action(a, &v4, &[id, inv.clone(), inv.clone(), inv]).unwrap_err();
    assert!(matches!(err, HopfError::InvalidAction(msg) if msg.contains("homomorphism")));
}

#[test]
fn group_algebra_examples() {
    let f = q();
    let s3 = GroupTable::symmetric_group_3();
    let ks3 = group_algebra(&s3, &f);
    assert_eq!(ks3.dim(), 6);
    let (a, b) = (ks3.basis_element(1), ks3.basis_element(3));
    assert_ne!(ks3.multiply(&a, &b).unwrap(), ks3.multiply(&b, &a).unwrap());
    // cocommutative
    for i in 0..6 {
        let d = ks3.coproduct(&ks3.basis_element(i));
        assert!(d.iter().all(|((j, k), c)| d.get(&(*k, *j)) == Some(c)));
    }
    assert_eq!(exponent(&group_algebra(&GroupTable::cyclic(4), &f), 64).outcome, ExponentOutcome::Found(4));
    let c2 = dual_group_algebra(&GroupTable::cyclic(2), &f);
    assert!(c2.verify_hopf_axioms().all_passed());
    assert_eq!(left_integral(&c2).unwrap(), basis_vector(&f, 2, 0));
}

#[test]
fn indicator_examples() {
    let f = q();
    let kc3 = group_algebra(&GroupTable::cyclic(3), &f);
    let id = HopfAutomorphism::identity(&kc3);
    assert_eq!(p_map(&kc3, 1, &id).unwrap(), kc3.unit_counit());

    let kc2 = catalog::kc(2).algebra;
    assert_eq!(regular_twisted_indicator(&kc2, 2, &HopfAutomorphism::identity(&kc2)).unwrap().value, f.int(2));

    let n8 = catalog::nichols8();
    let v = regular_twisted_indicator(&n8.algebra, 2, n8.automorphism("diag1m1").unwrap()).unwrap();
    assert_eq!(v.value, f.zero());
    assert_eq!(v.methods.len(), 4);
    let v = regular_twisted_indicator(&n8.algebra, 3, n8.automorphism("id").unwrap()).unwrap();
    assert_eq!(v.value, f.int(9));
    assert!(matches!(
        regular_twisted_indicator(&n8.algebra, 3, n8.automorphism("neg").unwrap()),
        Err(HopfError::OrderDoesNotDivide { .. })
    ));
    assert_eq!(
        module_indicator(&n8.algebra, &trivial(&n8.algebra), 2).unwrap_err(),
        HopfError::NotSemisimple
    );

    let h8 = catalog::h8();
    let n = h8.representation("N").unwrap();
    let tau = h8.automorphism("tau4").unwrap();
    assert_eq!(twisted_module_indicator(&h8.algebra, n, 2, tau).unwrap().value, f.int(-1));
    for m in 1..=4 {
        assert_eq!(module_indicator(&h8.algebra, &trivial(&h8.algebra), m).unwrap().value, f.one());
    }
    // χ_N(Λ^[2]) expanded by hand from the normalized integral
    let lambda = hopfsmash::integrals::normalized_integral(&h8.algebra).unwrap();
    let power = hopf_power(&h8.algebra, &lambda, 2);
    let direct = character(n, &power);
    assert_eq!(module_indicator(&h8.algebra, n, 2).unwrap().value, direct);

    let k = smash_coproduct(&catalog::h8_tau4_action()).unwrap();
    let m = extend_to_smash(&k, n, 1).unwrap();
    assert_eq!(module_indicator(k.algebra(), &m, 2).unwrap().value, f.int(-1));
    assert_eq!(module_indicator(k.algebra(), &m, 1).unwrap().value, f.zero());

    let report = theorem41_check(&k, &m, 2).unwrap();
    assert_eq!((report.lhs.clone(), report.equal()), (f.int(-1), true));
    // M concentrated in a degree of order 2: ν_1 vanishes
    let report = theorem41_check(&k, &m, 1).unwrap();
    assert_eq!(report.lhs, f.zero());
    assert!(report.equal());

    let report = theorem54_check(&catalog::nichols8_neg_action(), 3).unwrap();
    assert_eq!(report.terms.len(), 1);
    assert!(report.equal());
    let one = verify_action(&kc3, &GroupTable::cyclic(1), &[Matrix::identity(&f, 3)]).unwrap();
    let report = theorem54_check(&one, 2).unwrap();
    assert_eq!(report.lhs, regular_twisted_indicator(&kc3, 2, &id).unwrap().value);
    assert!(report.equal());
}

#[test]
fn indicator_formulas_agree_on_catalog() {
    for name in catalog::NAMES {
        let e = catalog::lookup(name).unwrap();
        for (_, tau) in &e.automorphisms {
            for m in (1..=6).filter(|m| m % tau.order() == 0) {
                regular_twisted_indicator(&e.algebra, m, tau).unwrap();
            }
        }
    }
}

#[test]
fn untwisted_indicator_matches_regular_module() {
    for name in ["h8", "kC3", "kS3", "k^S3"] {
        let h = catalog::lookup(name).unwrap().algebra;
        let id = HopfAutomorphism::identity(&h);
        for m in 1..=4 {
            assert_eq!(
                regular_twisted_indicator(&h, m, &id).unwrap().value,
                module_indicator(&h, &regular(&h), m).unwrap().value,
                "{name} m={m}"
            );
        }
    }
}

#[test]
fn nichols8_closed_forms() {
    let e = catalog::nichols8();
    let f = e.algebra.field().clone();
    let entries: Vec<[i64; 4]> = vec![
        [1, 0, 0, 1],
        [-1, 0, 0, -1],
        [1, 0, 0, -1],
        [0, 1, 1, 0],
        [-1, 0, 0, 1],
        [1, 1, 0, -1],
        [0, -1, -1, 0],
    ];
    for p in entries {
        let tau = catalog::nichols8_automorphism_int(&e.algebra, p).unwrap();
        let det = p[0] * p[3] - p[1] * p[2];
        for m in [2i64, 4, 6] {
            let v = regular_twisted_indicator(&e.algebra, m as u64, &tau).unwrap().value;
            assert_eq!(v, f.frac(m * m, 2) * f.int(1 + det), "{p:?} m={m}");
        }
    }
    for p in [[0, -1, 1, -1], [-1, 1, -1, 0], [1, 0, 0, 1]] {
        let tau = catalog::nichols8_automorphism_int(&e.algebra, p).unwrap();
        let (tr, det) = (p[0] + p[3], p[0] * p[3] - p[1] * p[2]);
        let closed = (tr + det) * (tr + det) + (tr + 1) * (1 - det);
        assert_eq!(regular_twisted_indicator(&e.algebra, 3, &tau).unwrap().value, f.int(closed));
    }
}

#[test]
fn representation_examples() {
    let h8 = catalog::h8();
    let a = &h8.algebra;
    let n = h8.representation("N").unwrap();
    let f = q();
    assert_eq!(character(n, &a.basis_element(4)), f.zero());
    assert_eq!(character(n, a.unit()), f.int(2));
    for name in catalog::NAMES {
        let e = catalog::lookup(name).unwrap();
        verify_representation(&e.algebra, trivial(&e.algebra).matrices().to_vec()).unwrap();
    }

    let action = catalog::h8_tau4_action();
    let k = smash_coproduct(&action).unwrap();
    let m = extend_to_smash(&k, n, 1).unwrap();
    assert_eq!(decompose_by_group(&k, &m).unwrap().dims(), vec![0, 2]);
    assert_eq!(restrict_to_base(&k, &m), *n);
    let reg = regular(k.algebra());
    assert_eq!(decompose_by_group(&k, &reg).unwrap().dims(), vec![8, 8]);
    let at_identity = extend_to_smash(&k, n, 0).unwrap();
    assert_eq!(decompose_by_group(&k, &at_identity).unwrap().support(), vec![0]);

    // twists
    assert_eq!(twist_rep(&action, n, 0), *n);
    let twice = twist_rep(&action, &twist_rep(&action, n, 1), 1);
    assert_eq!(twice, *n);
    let tau = action.aut(1);
    let twisted = twist_rep(&action, n, 1);
    for i in 0..8 {
        assert_eq!(character(&twisted, &a.basis_element(i)), character(n, &tau.apply(&a.basis_element(i))));
    }

    // tensor and dual
    let t = tensor_rep(a, n, n);
    assert_eq!(t.rank(), 4);
    verify_representation(a, t.matrices().to_vec()).unwrap();
    let chi = character_vector(n);
    for i in 0..8 {
        let expected = a
            .basis_coproduct(i)
            .iter()
            .fold(f.zero(), |acc, (j, k, c)| acc + c * &chi[*j] * &chi[*k]);
        assert_eq!(character(&t, &a.basis_element(i)), expected);
    }
    let triv = trivial(a);
    assert_eq!(tensor_rep(a, &triv, n), *n);
    assert_eq!(dual_rep(a, &triv), triv);
    let nd = dual_rep(a, n);
    verify_representation(a, nd.matrices().to_vec()).unwrap();
    assert_eq!(character_vector(&nd), chi);
}

#[test]
fn tensor_of_extended_module_with_itself() {
    let h8 = catalog::h8();
    let k = smash_coproduct(&catalog::h8_tau4_action()).unwrap();
    let m = extend_to_smash(&k, h8.representation("N").unwrap(), 1).unwrap();
    let t = tensor_rep(k.algebra(), &m, &m);
    assert_eq!(t.rank(), 4);
    assert_eq!(decompose_by_group(&k, &t).unwrap().dims(), vec![4, 0]);
    let d = dual_rep(k.algebra(), &m);
    assert_eq!(decompose_by_group(&k, &d).unwrap().support(), vec![1]);
    let r = hopfsmash::representations::theorem71_check(&k, &m, &m).unwrap();
    assert!(r.all_passed());
    assert_eq!(r.pairs.len(), 1);
}

#[test]
fn cyclic_action_of_identity_is_trivial_group() {
    let h: FiniteHopfAlgebra = catalog::h8().algebra;
    let action = cyclic_action(&h, &HopfAutomorphism::identity(&h)).unwrap();
    assert_eq!(action.group().order(), 1);
}
