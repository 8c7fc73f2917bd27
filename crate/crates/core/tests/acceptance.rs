//! Acceptance criteria 1–9. Each prints one PASS/FAIL line; the test fails
//! if any criterion does. Tolerances are the constants below.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use gf2kq::bits::BitVec;
use gf2kq::catalog::{self, catalog_lookup, CatalogEntry, FamilyKind};
use gf2kq::circuit::{emit_netlist, parse_netlist, Circuit, GateKind};
use gf2kq::gf2::{
    build_reduction_matrix, mastrovito_product, mastrovito_vectors, BinaryPolynomial, Gf2Matrix,
};
use gf2kq::phase::{
    check_half_split_identities, check_padding_identity, check_split_identity, extract_phase,
    g_half_split, h_half_split, padding_identity, split_identity, substitute_cprime,
    target_polynomial, CheckMode,
};
use gf2kq::sim::{ccz_core, to_toffoli_form, verify_multiplier, Method, VerifyMode};
use gf2kq::synth::{
    classify_family, karatsuba_core, prepare_parallel, synth, CoreMode, Family, SynthesisOptions,
    Variant,
};

// criterion 1
const C1_TIME: Duration = Duration::from_secs(1);
// criterion 2
const C2_RANDOM_TRIALS: usize = 1000;
const C2_SEED: u64 = 0x5eed;
const C2_TIME: Duration = Duration::from_secs(300);
// criterion 4
const C4_SLOPE: (f64, f64) = (1.50, 1.66);
const C4_TIME: Duration = Duration::from_secs(120);
// criterion 5
const C5_DOUBLING_RATIO: f64 = 2.5;
const C5_DEPTH_PER_N: f64 = 12.0;
const C5_ANCILLA_PER_NLOGN: f64 = 2.0;
// criterion 6
const C6_DEPTH_PER_LOGN: f64 = 40.0;
const C6_QUBITS_PER_N1585: f64 = 16.0;
const C6_EXPONENT: f64 = 1.585;
// criterion 7
const C7_TIME: Duration = Duration::from_secs(60);
// criterion 9
const C9_MAX_CCZ: usize = 9;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(s: &str) -> BinaryPolynomial {
    s.parse().unwrap()
}

fn bits(v: &[u8]) -> BitVec {
    BitVec::from_bools(&v.iter().map(|&x| x == 1).collect::<Vec<_>>())
}

fn matrix(rows: &[&str]) -> Gf2Matrix {
    Gf2Matrix::from_row_strs(rows).unwrap()
}

fn variants_for(p: &BinaryPolynomial) -> Vec<Variant> {
    Variant::ALL
        .into_iter()
        .filter(|&v| v != Variant::LogDepth || classify_family(p) != Family::Generic)
        .collect()
}

fn build(v: Variant, p: &BinaryPolynomial) -> Result<Circuit, String> {
    synth(&SynthesisOptions::new(v, p.clone())).map_err(|e| format!("{v} {}: {e}", p.to_pretty()))
}

fn ccz_bound(n: usize) -> usize {
    3usize.pow((n as f64).log2().ceil() as u32)
}

fn log2(x: usize) -> f64 {
    (x as f64).log2()
}

fn criterion1() -> Outcome {
    let t = Instant::now();
    let p7 = poly("x^7+x^5+x^3+x+1");
    let q7 = build_reduction_matrix(&p7).map_err(|e| e.to_string())?;
    let want = matrix(&[
        "101000", "111100", "011110", "100111", "010011", "100001", "010000",
    ]);
    ensure(q7 == want, || format!("GF(2^7) Q = {q7:?}"))?;
    let a = bits(&[1, 0, 0, 1, 0, 1, 0]);
    let b = bits(&[0, 1, 1, 0, 0, 0, 0]);
    let (d, e) = mastrovito_vectors(&a, &b).map_err(|e| e.to_string())?;
    ensure(d == bits(&[0, 1, 1, 0, 1, 1, 1]), || format!("d = {d}"))?;
    ensure(e == bits(&[1, 0, 0, 0, 0, 0]), || format!("e = {e}"))?;
    let prod = mastrovito_product(&a, &b, &q7).map_err(|e| e.to_string())?;
    ensure(prod == bits(&[1, 0, 1, 1, 1, 0, 1]), || {
        format!("product = {prod}")
    })?;

    let q9 = build_reduction_matrix(&poly("x^9+x^7+1")).map_err(|e| e.to_string())?;
    let want9 = matrix(&[
        "10101010", "01010101", "00101010", "00010101", "00001010", "00000101", "00000010",
        "10101011", "01010101",
    ]);
    ensure(q9 == want9, || format!("x^9+x^7+1 Q = {q9:?}"))?;
    let q8 = build_reduction_matrix(&poly("x^8+x^6+x^4+x^2+1")).map_err(|e| e.to_string())?;
    let want8 = matrix(&[
        "1010000", "0101000", "1000100", "0100010", "1000001", "0100000", "1000000", "0100000",
    ]);
    ensure(q8 == want8, || format!("x^8+x^6+x^4+x^2+1 Q = {q8:?}"))?;
    let el = t.elapsed();
    ensure(el < C1_TIME, || format!("took {el:?}"))?;
    Ok(format!(
        "Q(2^7), d, e, product and both structured Q matrices exact ({el:?})"
    ))
}

fn criterion2() -> Outcome {
    let t = Instant::now();
    let entries: Vec<CatalogEntry> = (2..=64)
        .flat_map(|n| catalog::entries(n).unwrap())
        .collect();
    let jobs: Vec<(CatalogEntry, Variant)> = entries
        .iter()
        .flat_map(|e| {
            variants_for(&e.polynomial)
                .into_iter()
                .map(move |v| (e.clone(), v))
        })
        .collect();
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|(e, v)| {
            let c = match build(*v, &e.polynomial) {
                Ok(c) => c,
                Err(msg) => return Some(msg),
            };
            let mode = if e.n <= 6 {
                VerifyMode::Exhaustive
            } else {
                VerifyMode::Randomized {
                    trials: C2_RANDOM_TRIALS,
                    seed: C2_SEED,
                }
            };
            match verify_multiplier(&c, &e.polynomial, mode) {
                Ok(r) if r.passed && r.ancillas_clean => None,
                Ok(r) => Some(r.to_string()),
                Err(err) => Some(format!("{v} {}: {err}", e.polynomial.to_pretty())),
            }
        })
        .collect();
    ensure(failures.is_empty(), || {
        format!("{} failures, first: {}", failures.len(), failures[0])
    })?;
    let el = t.elapsed();
    ensure(el < C2_TIME, || format!("took {el:?}"))?;
    Ok(format!(
        "{} (modulus, variant) pairs over {} catalog moduli, n in [2,64] ({el:?})",
        jobs.len(),
        entries.len()
    ))
}

fn criterion3() -> Outcome {
    let worst: Vec<(usize, Variant, usize)> = (2..=512usize)
        .into_par_iter()
        .flat_map_iter(|n| {
            let p = catalog_lookup(n, FamilyKind::Generic).unwrap().polynomial;
            [Variant::Compact, Variant::LinearDepth]
                .into_iter()
                .map(move |v| (n, v, build(v, &p).unwrap().count(GateKind::Ccz)))
                .collect::<Vec<_>>()
        })
        .collect();
    if let Some((n, v, c)) = worst.iter().find(|(n, _, c)| *c > ccz_bound(*n)) {
        return Err(format!("{v} n={n}: {c} CCZ > {}", ccz_bound(*n)));
    }
    for mode in [CoreMode::Compact, CoreMode::LinearDepth, CoreMode::LogDepth] {
        let one = karatsuba_core(4, &[Some(0)], &[Some(1)], &[Some(2)], &[Some(3)], mode)
            .map_err(|e| e.to_string())?;
        ensure(one.count(GateKind::Ccz) == 1 && one.len() == 1, || {
            format!("{mode:?} n=1 core: {:?}", one.gates())
        })?;
    }
    let tight = worst.iter().filter(|(n, _, c)| *c == ccz_bound(*n)).count();
    Ok(format!("compact and linear-depth within 3^ceil(log2 n) for n in [2,512] ({tight} tight); n=1 core is one CCZ"))
}

fn criterion4() -> Outcome {
    let t = Instant::now();
    let sizes: Vec<usize> = (2..=8).map(|k| 1usize << k).collect();
    let mut report = Vec::new();
    for v in [Variant::Compact, Variant::LinearDepth] {
        let pts: Vec<(f64, f64)> = sizes
            .iter()
            .map(|&n| {
                let p = catalog_lookup(n, FamilyKind::Generic).unwrap().polynomial;
                (n as f64, build(v, &p).unwrap().count(GateKind::Ccz) as f64)
            })
            .collect();
        let (slope, _) = gf2kq::bench::loglog_fit(&pts).ok_or("degenerate fit")?;
        ensure((C4_SLOPE.0..=C4_SLOPE.1).contains(&slope), || {
            format!("{v} slope {slope:.4}")
        })?;
        report.push(format!("{v} slope {slope:.4}"));
    }
    for n in (2..=64).chain([128, 256]) {
        let p = catalog_lookup(n, FamilyKind::Generic).unwrap().polynomial;
        let c = build(Variant::Baseline, &p)?;
        let tof = c.count(GateKind::Toffoli);
        ensure(tof == n * n && c.ancilla_count() == 0, || {
            format!("baseline n={n}: {tof} Toffolis")
        })?;
    }
    let el = t.elapsed();
    ensure(el < C4_TIME, || format!("took {el:?}"))?;
    Ok(format!(
        "{}; baseline Toffoli count n^2 exactly ({el:?})",
        report.join(", ")
    ))
}

fn criterion5() -> Outcome {
    let sizes: Vec<usize> = (3..=9).map(|k| 1usize << k).collect();
    let stats: Vec<(usize, usize, usize)> = sizes
        .par_iter()
        .map(|&n| {
            let p = catalog_lookup(n, FamilyKind::Generic).unwrap().polynomial;
            let r = build(Variant::LinearDepth, &p).unwrap().report();
            (n, r.depth, r.ancilla_count)
        })
        .collect();
    let mut max_ratio = 0f64;
    for w in stats.windows(2) {
        let ((n, d1, _), (_, d2, _)) = (w[0], w[1]);
        if n >= 16 {
            let r = d2 as f64 / d1 as f64;
            max_ratio = max_ratio.max(r);
            ensure(r <= C5_DOUBLING_RATIO, || {
                format!("depth({})/depth({n}) = {r:.3}", 2 * n)
            })?;
        }
    }
    let per_n: Vec<f64> = stats.iter().map(|&(n, d, _)| d as f64 / n as f64).collect();
    let c_depth = per_n.iter().cloned().fold(0.0, f64::max);
    ensure(c_depth <= C5_DEPTH_PER_N, || {
        format!("depth/n reaches {c_depth:.3}: {per_n:?}")
    })?;
    // no upward trend: the largest size is not above the smallest
    ensure(per_n.last() <= per_n.first(), || {
        format!("depth/n grows: {per_n:?}")
    })?;
    let c_anc = stats
        .iter()
        .map(|&(n, _, a)| a as f64 / (n as f64 * log2(n)))
        .fold(0.0, f64::max);
    ensure(c_anc <= C5_ANCILLA_PER_NLOGN, || {
        format!("ancillas/(n log2 n) reaches {c_anc:.3}")
    })?;
    Ok(format!(
        "max depth(2n)/depth(n) = {max_ratio:.3}, depth/n <= {c_depth:.3}, ancillas <= {c_anc:.3} n log2 n (n = 8..512)"
    ))
}

fn criterion6() -> Outcome {
    let family: Vec<CatalogEntry> = catalog::all_entries()
        .into_iter()
        .filter(|e| {
            matches!(
                e.family,
                Family::Trinomial { .. } | Family::EquallySpaced { .. }
            )
        })
        .collect();
    let stats: Vec<(usize, String, f64, f64)> = family
        .par_iter()
        .map(|e| {
            let r = build(Variant::LogDepth, &e.polynomial).unwrap().report();
            let n = e.n;
            (
                n,
                e.polynomial.to_exponent_list(),
                r.depth as f64 / log2(n),
                r.qubit_count as f64 / (n as f64).powf(C6_EXPONENT),
            )
        })
        .collect();
    let (mut c_depth, mut c_qubits) = (0f64, 0f64);
    for (n, p, d, q) in &stats {
        ensure(*d <= C6_DEPTH_PER_LOGN, || {
            format!("n={n} [{p}]: depth/log2 n = {d:.2}")
        })?;
        ensure(*q <= C6_QUBITS_PER_N1585, || {
            format!("n={n} [{p}]: qubits/n^1.585 = {q:.2}")
        })?;
        c_depth = c_depth.max(*d);
        c_qubits = c_qubits.max(*q);
    }
    for k in (2..=64).step_by(2) {
        let f = prepare_parallel(k).map_err(|e| e.to_string())?;
        let (d1, d2) = (f.parallel.report().depth, f.third.report().depth);
        ensure(d1 == 2 && d2 == 2, || {
            format!("k={k}: preparation depths {d1}, {d2}")
        })?;
    }
    Ok(format!(
        "{} trinomial/equally spaced moduli up to n=512: depth <= {c_depth:.2} log2 n, qubits <= {c_qubits:.2} n^1.585; preparations depth 2",
        stats.len()
    ))
}

fn criterion7() -> Outcome {
    let t = Instant::now();
    let ok = |r: Result<bool, _>, what: &str| -> Result<(), String> {
        match r {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("{what} does not hold")),
            Err(e) => Err(format!("{what}: {e:?}")),
        }
    };
    for n in (2..=12).step_by(2) {
        ok(
            check_split_identity(n, CheckMode::Symbolic),
            &format!("even-split identity n={n}"),
        )?;
        ok(
            check_half_split_identities(n, CheckMode::Symbolic),
            &format!("split identities n={n}"),
        )?;
    }
    for n in 1..=11 {
        ok(
            check_padding_identity(n, CheckMode::Symbolic),
            &format!("odd padding identity n={n}"),
        )?;
    }
    let random = CheckMode::Random {
        trials: 1000,
        seed: 7,
    };
    for n in [16, 32, 48, 64] {
        ok(
            check_split_identity(n, random),
            &format!("even-split identity n={n} random"),
        )?;
        ok(
            check_half_split_identities(n, random),
            &format!("split identities n={n} random"),
        )?;
    }
    for n in [13, 33, 63] {
        ok(
            check_padding_identity(n, random),
            &format!("odd padding identity n={n} random"),
        )?;
    }
    // mutations: dropping any right-hand term must be detected
    let mut detected = 0;
    for (name, id) in [
        ("even-split", split_identity(8)),
        ("odd padding", padding_identity(7)),
        ("g-split", g_half_split(8)),
        ("h-split", h_half_split(8)),
    ] {
        let id = id.map_err(|e| format!("{e:?}"))?;
        for i in 0..id.rhs.len() {
            let holds = id
                .without_rhs_term(i)
                .check(CheckMode::Symbolic)
                .map_err(|e| format!("{e:?}"))?;
            ensure(!holds, || {
                format!("{name}: dropping term {i} went unnoticed")
            })?;
            detected += 1;
        }
    }
    let el = t.elapsed();
    ensure(el < C7_TIME, || format!("took {el:?}"))?;
    Ok(format!("all identities hold symbolically and on 1000 random points up to n=64; {detected}/{detected} mutations caught ({el:?})"))
}

fn criterion8() -> Outcome {
    let mut checked = 0;
    for n in 2..=12 {
        for e in catalog::entries(n).unwrap() {
            let p = &e.polynomial;
            let q = build_reduction_matrix(p).map_err(|e| e.to_string())?;
            let want = substitute_cprime(&target_polynomial(n).unwrap(), n, &q)
                .map_err(|e| format!("{e:?}"))?;
            for v in variants_for(p)
                .into_iter()
                .filter(|&v| v != Variant::Baseline)
            {
                let c = build(v, p)?;
                let (core, _) = ccz_core(&c).map_err(|e| e.to_string())?;
                let mut frag = Circuit::with_wires(c.num_wires());
                frag.extend(core.iter().copied())
                    .map_err(|e| e.to_string())?;
                let (phase, state) = extract_phase(&frag).map_err(|e| format!("{e:?}"))?;
                ensure(state.is_identity(), || {
                    format!("{v} {}: net linear map is not the identity", p.to_pretty())
                })?;
                let phase = phase.restrict_zero(|x| x >= 3 * n);
                ensure(phase == want, || {
                    format!("{v} {}: phase polynomial differs", p.to_pretty())
                })?;
                checked += 1;
            }
            if n <= 5 {
                let c = build(Variant::Compact, p)?;
                let tof = to_toffoli_form(&c).map_err(|e| e.to_string())?;
                let r = verify_multiplier(&tof, p, VerifyMode::Exhaustive)
                    .map_err(|e| e.to_string())?;
                ensure(r.passed && r.method == Method::Classical, || r.to_string())?;
            }
        }
    }
    Ok(format!("{checked} cores match the substituted target polynomial (n in [2,12]); Toffoli forms verified for n <= 5"))
}

fn criterion9() -> Outcome {
    let p = poly("x^4+x+1");
    let c = build(Variant::LinearDepth, &p)?;
    let ccz = c.count(GateKind::Ccz);
    ensure(ccz <= C9_MAX_CCZ, || format!("{ccz} CCZ"))?;
    let r = verify_multiplier(&c, &p, VerifyMode::Exhaustive).map_err(|e| e.to_string())?;
    ensure(r.passed && r.ancillas_clean, || r.to_string())?;
    let text = emit_netlist(&c);
    let back = parse_netlist(&text).map_err(|e| e.to_string())?;
    ensure(back == c, || {
        "netlist round trip changed the circuit".into()
    })?;
    let r2 = verify_multiplier(&back, &p, VerifyMode::Exhaustive).map_err(|e| e.to_string())?;
    ensure(r2.passed, || r2.to_string())?;
    Ok(format!(
        "{ccz} CCZ, {} ancillas, exhaustive pass, netlist round trip exact",
        c.ancilla_count()
    ))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("worked-example fidelity", criterion1),
        ("oracle equivalence", criterion2),
        ("CCZ-count bound", criterion3),
        ("subquadratic scaling", criterion4),
        ("linear-depth scaling", criterion5),
        ("logarithmic-depth scaling", criterion6),
        ("identity suite", criterion7),
        ("phase-semantics equivalence", criterion8),
        ("GF(2^4) linear-depth instance", criterion9),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or(e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let line = match outcome {
            Ok(msg) => format!("criterion {}: PASS {name}: {msg}", i + 1),
            Err(msg) => {
                failed.push(i + 1);
                format!("criterion {}: FAIL {name}: {msg}", i + 1)
            }
        };
        // straight to stderr so the line survives output capture
        let _ = writeln!(std::io::stderr(), "{line}");
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
