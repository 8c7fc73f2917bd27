//! End-to-end checks of `|a>|b>|c>|0> -> |a>|b>|c ^ a·b mod P>|0>`.
//!
//! Classical circuits (or framed circuits that convert to one) are simulated
//! 64 inputs at a time. Framed circuits whose ancillas carry `c`-derived
//! values have no Toffoli form; for those the core is evaluated in the phase
//! frame: every wire holds `κ(a,b) ^ λ·y` with `λ` fixed by the CNOT
//! structure, each CCZ adds `κκ·λ` to the `y`-linear phase, and that phase
//! must equal `y · (a·b mod P)`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ccz_core, check_classical, simulate_sliced, to_toffoli_form, SimError};
use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate, RegisterLayout};
use crate::gf2::{mul_mod_bits, BinaryPolynomial};
use crate::synth::Variant;

pub const EXHAUSTIVE_MAX_N: usize = 8;
pub const DEFAULT_SEED: u64 = 0x6af2_2c31;

/// `GF2KQ_SEED` (decimal or `0x` hex) if set and valid, else [`DEFAULT_SEED`].
pub fn default_seed() -> u64 {
    std::env::var("GF2KQ_SEED")
        .ok()
        .and_then(|s| {
            let s = s.trim();
            match s.strip_prefix("0x") {
                Some(h) => u64::from_str_radix(h, 16).ok(),
                None => s.parse().ok(),
            }
        })
        .unwrap_or(DEFAULT_SEED)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// All `2^{2n}` pairs; `n <= 8`.
    Exhaustive,
    Randomized {
        trials: usize,
        seed: u64,
    },
}

impl VerifyMode {
    /// Exhaustive up to the cap, else 1000 seeded trials.
    pub fn auto(n: usize) -> Self {
        if n <= EXHAUSTIVE_MAX_N {
            VerifyMode::Exhaustive
        } else {
            VerifyMode::Randomized {
                trials: 1000,
                seed: default_seed(),
            }
        }
    }
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyMode::Exhaustive => f.write_str("exhaustive"),
            VerifyMode::Randomized { trials, seed } => {
                write!(f, "randomized({trials}, seed {seed:#x})")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Bit-sliced simulation of the {CNOT, Toffoli} form.
    Classical,
    /// Bit-sliced evaluation of the framed core's phase.
    PhaseFrame,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub a: BitVec,
    pub b: BitVec,
    pub c_in: BitVec,
    pub expected: BitVec,
    pub got: BitVec,
    pub reason: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} b={} c_in={} expected c_out={} got {} ({})",
            self.a, self.b, self.c_in, self.expected, self.got, self.reason
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub modulus: BinaryPolynomial,
    pub variant: Option<Variant>,
    pub mode: VerifyMode,
    pub method: Method,
    /// Input triples `(a, b, c_in)` simulated.
    pub samples: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub ancillas_clean: bool,
}

impl VerificationReport {
    pub fn with_variant(mut self, v: Variant) -> Self {
        self.variant = Some(v);
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", if self.passed { "PASS" } else { "FAIL" })?;
        if let Some(v) = self.variant {
            write!(f, "{v} ")?;
        }
        write!(
            f,
            "P={} mode={} method={:?} samples={} ancillas_clean={}",
            self.modulus.to_pretty(),
            self.mode,
            self.method,
            self.samples,
            self.ancillas_clean
        )?;
        if let Some(cx) = &self.counterexample {
            write!(f, "\ncounterexample: {cx}")?;
        }
        Ok(())
    }
}

#[derive(Clone)]
struct Sample {
    a: BitVec,
    b: BitVec,
    c: BitVec,
    expected: BitVec,
}

fn samples(n: usize, p: &BinaryPolynomial, mode: VerifyMode) -> Vec<Sample> {
    let pairs: Vec<(BitVec, BitVec)>;
    let mut rng;
    match mode {
        VerifyMode::Exhaustive => {
            rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
            pairs = (0..1u64 << (2 * n))
                .map(|t| (BitVec::from_u64(t, n), BitVec::from_u64(t >> n, n)))
                .collect();
        }
        VerifyMode::Randomized { trials, seed } => {
            rng = ChaCha8Rng::seed_from_u64(seed);
            let rand_vec = |rng: &mut ChaCha8Rng| {
                BitVec::from_bools(&(0..n).map(|_| rng.gen()).collect::<Vec<bool>>())
            };
            pairs = (0..trials)
                .map(|_| (rand_vec(&mut rng), rand_vec(&mut rng)))
                .collect();
        }
    }
    let mut out = Vec::with_capacity(2 * pairs.len());
    for (a, b) in pairs {
        let expected = mul_mod_bits(&a, &b, p).expect("degree checked");
        let c_rand = BitVec::from_bools(&(0..n).map(|_| rng.gen()).collect::<Vec<bool>>());
        out.push(Sample {
            a: a.clone(),
            b: b.clone(),
            c: BitVec::zeros(n),
            expected: expected.clone(),
        });
        out.push(Sample {
            a,
            b,
            c: c_rand,
            expected,
        });
    }
    out
}

fn pack(chunk: &[Sample], f: impl Fn(&Sample) -> bool) -> u64 {
    chunk
        .iter()
        .enumerate()
        .fold(0, |acc, (s, x)| acc | (f(x) as u64) << s)
}

fn unpack(lanes: &[u64], s: usize) -> BitVec {
    BitVec::from_bools(&lanes.iter().map(|l| (l >> s) & 1 == 1).collect::<Vec<_>>())
}

/// Outcome of one 64-sample chunk: first failure and whether ancillas stayed clean.
type ChunkResult = (Option<(usize, Counterexample)>, bool);

fn fail(x: &Sample, got: BitVec, reason: impl Into<String>) -> Counterexample {
    Counterexample {
        a: x.a.clone(),
        b: x.b.clone(),
        c_in: x.c.clone(),
        expected: x.c.xor(&x.expected),
        got,
        reason: reason.into(),
    }
}

fn classical_chunk(
    gates: &[Gate],
    layout: &RegisterLayout,
    wires: usize,
    chunk: &[Sample],
) -> ChunkResult {
    let mut lanes = vec![0u64; wires];
    let (ar, br, cr, anc) = (layout.a(), layout.b(), layout.c(), layout.anc());
    for i in 0..ar.len() {
        lanes[ar.start + i] = pack(chunk, |x| x.a.get(i));
        lanes[br.start + i] = pack(chunk, |x| x.b.get(i));
        lanes[cr.start + i] = pack(chunk, |x| x.c.get(i));
    }
    simulate_sliced(gates, &mut lanes);
    let mut clean = true;
    let mut first = None;
    for (s, x) in chunk.iter().enumerate() {
        let got = unpack(&lanes[cr.clone()], s);
        let dirty = anc.clone().any(|w| (lanes[w] >> s) & 1 == 1);
        clean &= !dirty;
        if first.is_some() {
            continue;
        }
        let reason = if unpack(&lanes[ar.clone()], s) != x.a || unpack(&lanes[br.clone()], s) != x.b
        {
            Some("input register changed")
        } else if dirty {
            Some("ancilla left dirty")
        } else if got != x.c.xor(&x.expected) {
            Some("wrong product")
        } else {
            None
        };
        if let Some(r) = reason {
            first = Some((s, fail(x, got, r)));
        }
    }
    (first, clean)
}

enum Step {
    Cnot(usize, usize),
    X(usize),
    /// CCZ with no `y` part.
    Const([usize; 3]),
    /// CCZ whose operand `r` carries `λ = ys`.
    Lin {
        p: usize,
        q: usize,
        r: usize,
        ys: Vec<usize>,
    },
}

/// Static pass over the framed core. `Err` carries a reason the circuit is
/// wrong for every input; unsupported shapes are `SimError`s.
fn phase_program(
    core: &[Gate],
    layout: &RegisterLayout,
    wires: usize,
) -> Result<Result<Vec<Step>, String>, SimError> {
    let cr = layout.c();
    let n = cr.len();
    let mut lam: Vec<BitVec> = (0..wires)
        .map(|w| {
            if cr.contains(&w) {
                BitVec::unit(n, w - cr.start)
            } else {
                BitVec::zeros(n)
            }
        })
        .collect();
    let mut steps = Vec::with_capacity(core.len());
    for g in core {
        match *g {
            Gate::Cnot { control, target } => {
                let l = lam[control].clone();
                lam[target].xor_assign(&l);
                steps.push(Step::Cnot(control, target));
            }
            Gate::X(q) => steps.push(Step::X(q)),
            Gate::Ccz(qs) => {
                let live: Vec<usize> = qs.iter().copied().filter(|&q| !lam[q].is_zero()).collect();
                match live.as_slice() {
                    [] => steps.push(Step::Const(qs)),
                    [r] => {
                        let mut o = qs.iter().copied().filter(|q| q != r);
                        let (p, q) = (o.next().unwrap(), o.next().unwrap());
                        steps.push(Step::Lin {
                            p,
                            q,
                            r: *r,
                            ys: lam[*r].ones().collect(),
                        });
                    }
                    _ => {
                        return Err(SimError::Unsupported(format!(
                            "{g} has {} operands depending on the phase register",
                            live.len()
                        )))
                    }
                }
            }
            _ => {
                return Err(SimError::Unsupported(format!(
                    "{g} inside the Hadamard frame"
                )))
            }
        }
    }
    for (w, l) in lam.iter().enumerate() {
        let want = if cr.contains(&w) {
            BitVec::unit(n, w - cr.start)
        } else {
            BitVec::zeros(n)
        };
        if *l != want {
            return Ok(Err(format!("wire {w} ends with a c-dependent value")));
        }
    }
    Ok(Ok(steps))
}

fn phase_chunk(
    steps: &[Step],
    layout: &RegisterLayout,
    wires: usize,
    chunk: &[Sample],
) -> ChunkResult {
    let (ar, br, cr, anc) = (layout.a(), layout.b(), layout.c(), layout.anc());
    let n = cr.len();
    let mut k = vec![0u64; wires];
    for i in 0..ar.len() {
        k[ar.start + i] = pack(chunk, |x| x.a.get(i));
        k[br.start + i] = pack(chunk, |x| x.b.get(i));
    }
    let mut lin = vec![0u64; n];
    let mut constant = 0u64;
    for st in steps {
        match st {
            Step::Cnot(c, t) => k[*t] ^= k[*c],
            Step::X(q) => k[*q] ^= !0,
            Step::Const([p, q, r]) => constant ^= k[*p] & k[*q] & k[*r],
            Step::Lin { p, q, r, ys } => {
                let m = k[*p] & k[*q];
                constant ^= m & k[*r];
                for &y in ys {
                    lin[y] ^= m;
                }
            }
        }
    }
    let mut clean = true;
    let mut first = None;
    for (s, x) in chunk.iter().enumerate() {
        let bit = |l: u64| (l >> s) & 1 == 1;
        let got = x.c.xor(&unpack(&lin, s));
        let dirty = anc.clone().any(|w| bit(k[w]));
        clean &= !dirty;
        if first.is_some() {
            continue;
        }
        let reason = if unpack(&k[ar.clone()], s) != x.a || unpack(&k[br.clone()], s) != x.b {
            Some("input register changed")
        } else if dirty {
            Some("ancilla left dirty")
        } else if cr.clone().any(|w| bit(k[w])) {
            Some("phase register shifted by an input-dependent value")
        } else if bit(constant) {
            Some("input-dependent phase outside the product")
        } else if got != x.c.xor(&x.expected) {
            Some("wrong product")
        } else {
            None
        };
        if let Some(r) = reason {
            first = Some((s, fail(x, got, r)));
        }
    }
    (first, clean)
}

pub fn verify_multiplier(
    circuit: &Circuit,
    p: &BinaryPolynomial,
    mode: VerifyMode,
) -> Result<VerificationReport, SimError> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => {
            return Err(SimError::Layout(format!(
                "modulus {} has no positive degree",
                p.to_pretty()
            )))
        }
    };
    let layout = circuit.layout();
    if layout.a().len() != n || layout.b().len() != n || layout.c().len() != n {
        return Err(SimError::Layout(format!(
            "registers a/b/c have sizes {}/{}/{}, modulus degree is {n}",
            layout.a().len(),
            layout.b().len(),
            layout.c().len()
        )));
    }
    if mode == VerifyMode::Exhaustive && n > EXHAUSTIVE_MAX_N {
        return Err(SimError::Unsupported(format!(
            "exhaustive mode is capped at n = {EXHAUSTIVE_MAX_N}"
        )));
    }
    let wires = circuit.num_wires();
    let samples = samples(n, p, mode);

    let framed = circuit.gates().iter().any(|g| matches!(g, Gate::H(_)));
    let converted = if framed {
        to_toffoli_form(circuit).ok()
    } else {
        None
    };
    let results: Vec<ChunkResult>;
    let method;
    if !framed || converted.is_some() {
        method = Method::Classical;
        let gates = converted.as_ref().map_or(circuit.gates(), |c| c.gates());
        check_classical(gates)?;
        results = samples
            .par_chunks(64)
            .map(|ch| classical_chunk(gates, layout, wires, ch))
            .collect();
    } else {
        method = Method::PhaseFrame;
        let (core, phase) = ccz_core(circuit).map_err(|e| SimError::Unsupported(e.to_string()))?;
        if phase != layout.c().collect::<Vec<_>>() {
            return Err(SimError::Layout(
                "the Hadamard frame must cover exactly the c register".into(),
            ));
        }
        match phase_program(core, layout, wires)? {
            Ok(steps) => {
                results = samples
                    .par_chunks(64)
                    .map(|ch| phase_chunk(&steps, layout, wires, ch))
                    .collect();
            }
            Err(reason) => {
                let x = &samples[0];
                let cx = fail(x, x.c.clone(), reason);
                results = vec![(Some((0, cx)), true)];
            }
        }
    }

    let ancillas_clean = results.iter().all(|r| r.1);
    let counterexample = results
        .into_iter()
        .enumerate()
        .find_map(|(i, r)| r.0.map(|(s, cx)| (i * 64 + s, cx)))
        .map(|x| x.1);
    Ok(VerificationReport {
        modulus: p.clone(),
        variant: None,
        mode,
        method,
        samples: samples.len(),
        passed: counterexample.is_none(),
        counterexample,
        ancillas_clean,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::GateKind;
    use crate::synth::{synth, synth_baseline, SynthesisOptions};

    fn poly(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn all_variants_small_fields() {
        for s in [
            "x^2+x+1",
            "x^3+x+1",
            "x^4+x+1",
            "x^5+x^2+1",
            "x^6+x+1",
            "x^4+x^3+x^2+x+1",
            "x^5+x^4+x^3+x^2+1",
        ] {
            let p = poly(s);
            for v in Variant::ALL {
                let c = match synth(&SynthesisOptions::new(v, p.clone())) {
                    Ok(c) => c,
                    Err(crate::synth::SynthError::UnsupportedFamily(_))
                        if v == Variant::LogDepth =>
                    {
                        continue
                    }
                    Err(e) => panic!("{s} {v}: {e}"),
                };
                let r = verify_multiplier(&c, &p, VerifyMode::Exhaustive).unwrap();
                assert!(r.passed && r.ancillas_clean, "{s} {v}: {r}");
            }
        }
    }

    #[test]
    fn methods() {
        let p = poly("x^4+x+1");
        let run = |v| {
            let c = synth(&SynthesisOptions::new(v, p.clone())).unwrap();
            verify_multiplier(&c, &p, VerifyMode::Exhaustive)
                .unwrap()
                .method
        };
        assert_eq!(run(Variant::Compact), Method::Classical);
        assert_eq!(run(Variant::Baseline), Method::Classical);
        assert_eq!(run(Variant::LinearDepth), Method::PhaseFrame);
    }

    #[test]
    fn corrupted_circuit_fails() {
        let p = poly("x^4+x+1");
        let c = synth_baseline(&p).unwrap();
        let (layout, mut gates) = c.clone().into_parts();
        let last = gates
            .iter()
            .rposition(|g| g.kind() == GateKind::Toffoli)
            .unwrap();
        gates.remove(last);
        let bad = Circuit::from_parts_unchecked(layout, gates);
        let r = verify_multiplier(&bad, &p, VerifyMode::Exhaustive).unwrap();
        assert!(!r.passed);
        let cx = r.counterexample.unwrap();
        // replay
        let mut input = crate::sim::BasisState::zeros(bad.num_wires());
        for i in 0..4 {
            input.set(i, cx.a.get(i));
            input.set(4 + i, cx.b.get(i));
            input.set(8 + i, cx.c_in.get(i));
        }
        let out = crate::sim::simulate(&bad, &input).unwrap();
        assert_eq!(out.register(8..12), cx.got);
        assert_ne!(cx.got, cx.expected);

        // framed variant with a CCZ dropped
        for v in [Variant::Compact, Variant::LinearDepth, Variant::LogDepth] {
            let c = synth(&SynthesisOptions::new(v, p.clone())).unwrap();
            let (layout, mut gates) = c.into_parts();
            let last = gates
                .iter()
                .rposition(|g| g.kind() == GateKind::Ccz)
                .unwrap();
            gates.remove(last);
            let bad = Circuit::from_parts_unchecked(layout, gates);
            let r = verify_multiplier(&bad, &p, VerifyMode::Exhaustive).unwrap();
            assert!(!r.passed && r.counterexample.is_some(), "{v}");
        }
    }

    #[test]
    fn randomized_larger() {
        for s in ["x^17+x^3+1", "x^33+x^13+1", "x^64+x^4+x^3+x+1"] {
            let p = poly(s);
            for v in Variant::ALL {
                let Ok(c) = synth(&SynthesisOptions::new(v, p.clone())) else {
                    continue;
                };
                let r = verify_multiplier(
                    &c,
                    &p,
                    VerifyMode::Randomized {
                        trials: 200,
                        seed: 5,
                    },
                )
                .unwrap();
                assert!(r.passed && r.ancillas_clean, "{s} {v}: {r}");
            }
        }
    }

    #[test]
    fn exhaustive_cap() {
        let p = poly("x^9+x^4+1");
        let c = synth(&SynthesisOptions::new(Variant::Compact, p.clone())).unwrap();
        assert!(verify_multiplier(&c, &p, VerifyMode::Exhaustive).is_err());
        assert!(verify_multiplier(&c, &poly("x^4+x+1"), VerifyMode::Exhaustive).is_err());
    }
}
