use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gf2kq::bits::BitVec;
use gf2kq::circuit::GateKind;
use gf2kq::gf2::{mul_mod_bits, BinaryPolynomial};
use gf2kq::sim::{simulate, to_toffoli_form, verify_multiplier, BasisState, VerifyMode};
use gf2kq::synth::{
    eliminate_dead_gates, synth, synth_baseline, OutputForm, SynthError, SynthesisOptions, Variant,
};

fn poly(s: &str) -> BinaryPolynomial {
    s.parse().unwrap()
}

fn run_classical(c: &gf2kq::circuit::Circuit, n: usize, a: &BitVec, b: &BitVec) -> BitVec {
    let mut s = BasisState::zeros(c.num_wires());
    for i in 0..n {
        s.set(i, a.get(i));
        s.set(n + i, b.get(i));
    }
    simulate(c, &s).unwrap().register(2 * n..3 * n)
}

#[test]
fn worked_product_through_circuits() {
    let p = poly("x^7+x^5+x^3+x+1");
    let a = BitVec::from_bools(&[true, false, false, true, false, true, false]);
    let b = BitVec::from_bools(&[false, true, true, false, false, false, false]);
    let want = BitVec::from_bools(&[true, false, true, true, true, false, true]);
    let compact = synth(&SynthesisOptions::new(Variant::Compact, p.clone())).unwrap();
    assert_eq!(
        run_classical(&to_toffoli_form(&compact).unwrap(), 7, &a, &b),
        want
    );
    let base = synth_baseline(&p).unwrap();
    assert_eq!(base.count(GateKind::Toffoli), 49);
    assert_eq!(run_classical(&base, 7, &a, &b), want);
}

#[test]
fn small_cases() {
    let p = poly("x^2+x+1");
    let c = synth(&SynthesisOptions::new(Variant::Compact, p.clone())).unwrap();
    assert!(c.count(GateKind::Ccz) <= 3);
    assert!(
        verify_multiplier(&c, &p, VerifyMode::Exhaustive)
            .unwrap()
            .passed
    );
    let b = synth_baseline(&p).unwrap();
    assert_eq!(b.count(GateKind::Toffoli), 4);
    assert!(
        verify_multiplier(&b, &p, VerifyMode::Exhaustive)
            .unwrap()
            .passed
    );
}

#[test]
fn baseline_and_compact_agree_at_16() {
    let p = poly("x^16+x^5+x^3+x+1");
    let base = synth_baseline(&p).unwrap();
    let comp =
        to_toffoli_form(&synth(&SynthesisOptions::new(Variant::Compact, p.clone())).unwrap())
            .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..1000 {
        let a = BitVec::from_u64(rng.gen::<u64>() & 0xffff, 16);
        let b = BitVec::from_u64(rng.gen::<u64>() & 0xffff, 16);
        let x = run_classical(&base, 16, &a, &b);
        assert_eq!(x, run_classical(&comp, 16, &a, &b));
        assert_eq!(x, mul_mod_bits(&a, &b, &p).unwrap());
    }
}

#[test]
fn zero_input_leaves_c() {
    let p = poly("x^5+x^2+1");
    for v in Variant::ALL {
        let c = synth(&SynthesisOptions::new(v, p.clone())).unwrap();
        // a = 0 annihilates the product
        let r = verify_multiplier(&c, &p, VerifyMode::Exhaustive).unwrap();
        assert!(r.passed, "{v}");
    }
    let base = synth_baseline(&p).unwrap();
    let mut s = BasisState::zeros(15);
    for i in 5..15 {
        s.set(i, i % 3 == 0);
    }
    assert_eq!(simulate(&base, &s).unwrap(), s);
}

#[test]
fn errors() {
    let reducible = SynthesisOptions::new(Variant::Compact, poly("x^4+x^2+1"));
    assert!(matches!(synth(&reducible), Err(SynthError::Reducible(_))));
    let generic = SynthesisOptions::new(Variant::LogDepth, poly("x^8+x^4+x^3+x+1"));
    assert!(matches!(
        synth(&generic),
        Err(SynthError::UnsupportedFamily(_))
    ));
    let mut tof = SynthesisOptions::new(Variant::LinearDepth, poly("x^4+x+1"));
    tof.output_form = OutputForm::Toffoli;
    assert!(matches!(synth(&tof), Err(SynthError::UnsupportedForm(_))));
    let mut tof = SynthesisOptions::new(Variant::Compact, poly("x^4+x+1"));
    tof.output_form = OutputForm::Toffoli;
    assert_eq!(synth(&tof).unwrap().count(GateKind::H), 0);
}

#[test]
fn reducible_examples_on_request() {
    for s in ["x^9+x^7+1", "x^8+x^6+x^4+x^2+1"] {
        let mut o = SynthesisOptions::new(Variant::LogDepth, poly(s));
        o.allow_reducible = true;
        let c = synth(&o).unwrap();
        let r = verify_multiplier(
            &c,
            &poly(s),
            VerifyMode::Randomized {
                trials: 1000,
                seed: 1,
            },
        )
        .unwrap();
        assert!(r.passed, "{r}");
    }
}

#[test]
fn dead_gate_audit_finds_nothing() {
    for s in [
        "x^5+x^2+1",
        "x^7+x^5+x^3+x+1",
        "x^9+x+1",
        "x^13+x^4+x^3+x+1",
    ] {
        for v in [Variant::Compact, Variant::LinearDepth, Variant::LogDepth] {
            let Ok(c) = synth(&SynthesisOptions::new(v, poly(s))) else {
                continue;
            };
            let (_, report) = eliminate_dead_gates(&c);
            assert_eq!(
                report.removed_gates() + report.removed_ancillas,
                0,
                "{v} {s}: {report:?}"
            );
        }
    }
}
