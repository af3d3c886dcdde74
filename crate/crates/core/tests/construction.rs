use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unigen_core::certificate::{expected_z_char_poly, su_certificate, Claim, Status};
use unigen_core::construct::{build_su6, build_su6_q2, build_sun, derived_params};
use unigen_core::gf::{split_prime_power, FieldSpec};
use unigen_core::matrix::{commutant_dim, spin};
use unigen_core::verify::{
    check_conditions, irreducibility_check, reducibility_witness, search_parameter, WitnessKind,
};
use unigen_core::Error;

const SWEEP_Q: [u64; 6] = [3, 4, 5, 7, 8, 9];

fn field(q: u64) -> FieldSpec {
    let (p, f) = split_prime_power(q).unwrap();
    FieldSpec::new(p, f, None).unwrap()
}

#[test]
fn z_char_poly_formula_over_full_sweep() {
    for q in SWEEP_Q {
        let f = field(q);
        for a in f
            .elements()
            .filter(|&a| check_conditions(&f, a).admissible())
        {
            let sys = build_su6(&f, a).unwrap();
            let p = sys.params().unwrap();
            assert_eq!(sys.z().char_poly(&f), expected_z_char_poly(&f, p), "q={q}");
            if check_conditions(&f, a).irreducible() {
                // single invariant factor, so the centraliser is 6-dimensional
                assert_eq!(commutant_dim(&[sys.z().clone()], &f), 6, "q={q}");
            }
        }
    }
}

#[test]
fn c_vanishes_exactly_on_norm_four() {
    for q in SWEEP_Q {
        let f = field(q);
        let four = f.from_int(4);
        for a in f.elements().filter(|&a| !f.in_subfield(a)) {
            let on_locus = f.norm(a) == four;
            let r = derived_params(&f, a);
            assert_eq!(on_locus, r == Err(Error::ParameterNormFour), "q={q}");
            if !on_locus {
                assert!(!r.unwrap().c.is_zero());
            }
            // a^3 = 8 outside GF(q) forces c = 0
            if f.pow(a, 3) == f.from_int(8) {
                assert!(on_locus, "q={q}");
            }
        }
    }
}

#[test]
fn construction_rejects_bad_parameters() {
    let f = field(5);
    assert_eq!(
        build_su6(&f, f.from_int(2)).unwrap_err(),
        Error::ParameterInSubfield
    );
    assert_eq!(
        build_su6(&field(2), field(2).generator()).unwrap_err(),
        Error::UseQ2Construction
    );
    assert_eq!(
        build_sun(8, &field(4), None).unwrap_err(),
        Error::UnsupportedCase { n: 8, q: 4 }
    );
    assert_eq!(
        build_sun(6, &f, None).unwrap_err(),
        Error::DimensionTooSmall(6)
    );
    assert_eq!(build_sun(9, &f, None).unwrap_err(), Error::MissingParameter);
}

#[test]
fn q2_pair_orders() {
    let sys = build_su6_q2().unwrap();
    let f = sys.field();
    assert_eq!(f.q(), 2);
    assert_eq!(sys.z().order(100, f).unwrap().finite(), Some(11));
    assert!(sys.gram().is_identity(f));
}

#[test]
fn norm_nine_witness_at_q11() {
    let f = field(11);
    let nine = f.from_int(9);
    let a = f
        .elements()
        .find(|&a| !f.in_subfield(a) && f.norm(a) == nine)
        .expect("norm is onto GF(11)*");
    let r = check_conditions(&f, a);
    assert!(r.admissible() && r.cond_i && !r.cond_ii);
    let w = reducibility_witness(&f, a).unwrap();
    assert_eq!(w.kind, WitnessKind::SpunSubspace);
    assert_eq!(w.basis.len(), 3);
    assert!(w.verified_invariant);
}

#[test]
fn gamma_zero_witness_at_q5() {
    let f = field(5);
    let mut seen = 0;
    for a in f.elements() {
        let r = check_conditions(&f, a);
        if !r.admissible() || r.cond_i {
            continue;
        }
        seen += 1;
        let w = reducibility_witness(&f, a).unwrap();
        assert_eq!(w.kind, WitnessKind::KernelOfGram);
        assert!(!w.basis.is_empty() && w.verified_invariant);
        // the right kernel of J is invariant too at these parameters
        let sys = build_su6(&f, a).unwrap();
        let k = sys.gram().kernel_basis(&f);
        assert!(!k.is_empty());
        assert_eq!(spin(&k, &sys.generators(), &f).dim(), k.len());
    }
    assert!(seen > 0);
}

#[test]
fn irreducible_parameters_have_no_witness() {
    let (f, a) = unigen_core::verify::table_parameter(5).unwrap();
    assert_eq!(
        reducibility_witness(&f, a).unwrap_err(),
        Error::NotReducible
    );
}

#[test]
fn sampled_sweep_beyond_the_guard() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for q in [11u64, 13] {
        let f = field(q);
        let sample: Vec<_> = (0..500)
            .map(|_| f.element(rng.gen_range(0..f.size())))
            .collect();
        let r = irreducibility_check(&f, sample).unwrap();
        assert!(r.passed(), "q={q}: {:?}", r.disagreements);
        assert!(r.admissible > 400);
    }
}

#[test]
fn certificates_are_deterministic() {
    for q in [2u64, 3, 4] {
        let f = field(q);
        let a = (q > 2).then(|| search_parameter(&f).unwrap());
        let one = su_certificate(&f, 6, a);
        let two = su_certificate(&f, 6, a);
        assert_eq!(format!("{:?}", one.checks), format!("{:?}", two.checks));
        assert!(one.passed());
    }
}

#[test]
fn failing_certificate_for_subfield_parameter() {
    let f = field(3);
    let cert = su_certificate(&f, 6, Some(f.one()));
    assert!(!cert.passed());
    assert_eq!(cert.check("conditions").unwrap().status, Status::Fail);
    assert_eq!(cert.check("construction").unwrap().status, Status::Fail);
    assert!(cert.system.is_none());
}

#[test]
fn claims_by_shape() {
    let f = field(3);
    let a = search_parameter(&f).unwrap();
    assert_eq!(su_certificate(&field(2), 6, None).claim, Claim::Generation);
    assert_eq!(
        su_certificate(&f, 6, Some(a)).claim,
        Claim::ConditionalGeneration
    );
    let ev = su_certificate(&f, 7, Some(a));
    assert_eq!(ev.claim, Claim::Evidence);
    assert!(ev.check("generation").is_none());
    assert!(ev.passed());
}
