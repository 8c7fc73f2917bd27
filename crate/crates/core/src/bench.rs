//! Resource tables: one row per `(n, variant)`, CSV output and log-log fits.

use std::time::Instant;

use rayon::prelude::*;

use crate::catalog::{catalog_lookup, FamilyKind};
use crate::gf2::BinaryPolynomial;
use crate::synth::{synth, SynthesisOptions, Variant};

pub const CSV_HEADER: [&str; 14] = [
    "n",
    "polynomial",
    "variant",
    "ccz",
    "toffoli",
    "cnot",
    "h",
    "total_gates",
    "depth",
    "toffoli_depth",
    "qubits",
    "ancillas",
    "spacetime",
    "wall_time_ms",
];

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub polynomial: BinaryPolynomial,
    pub variant: Variant,
    pub ccz: usize,
    pub toffoli: usize,
    pub cnot: usize,
    pub h: usize,
    pub total_gates: usize,
    pub depth: usize,
    pub toffoli_depth: usize,
    pub qubits: usize,
    pub ancillas: usize,
    pub spacetime: usize,
    pub wall_time_ms: f64,
}

impl BenchRow {
    /// CCZ plus Toffoli count.
    pub fn non_clifford(&self) -> usize {
        self.ccz + self.toffoli
    }

    fn record(&self) -> [String; 14] {
        [
            self.n.to_string(),
            self.polynomial.to_exponent_list(),
            self.variant.to_string(),
            self.ccz.to_string(),
            self.toffoli.to_string(),
            self.cnot.to_string(),
            self.h.to_string(),
            self.total_gates.to_string(),
            self.depth.to_string(),
            self.toffoli_depth.to_string(),
            self.qubits.to_string(),
            self.ancillas.to_string(),
            self.spacetime.to_string(),
            format!("{:.3}", self.wall_time_ms),
        ]
    }
}

/// A `(n, variant)` pair that could not be synthesized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchFailure {
    pub n: usize,
    pub variant: Variant,
    pub reason: String,
}

pub fn bench_row(p: &BinaryPolynomial, variant: Variant) -> Result<BenchRow, String> {
    let t = Instant::now();
    let circuit = synth(&SynthesisOptions::new(variant, p.clone())).map_err(|e| e.to_string())?;
    let wall_time_ms = t.elapsed().as_secs_f64() * 1e3;
    let r = circuit.report();
    Ok(BenchRow {
        n: p.degree().unwrap_or(0),
        polynomial: p.clone(),
        variant,
        ccz: r.ccz,
        toffoli: r.toffoli,
        cnot: r.cnot,
        h: r.h,
        total_gates: r.total_gates,
        depth: r.depth,
        toffoli_depth: r.toffoli_depth,
        qubits: r.qubit_count,
        ancillas: r.ancilla_count,
        spacetime: r.spacetime,
        wall_time_ms,
    })
}

/// Rows for every `(n, variant)`, moduli from the catalog; sorted by
/// `(n, variant)` whatever order the workers finish in.
pub fn run_bench(
    sizes: &[usize],
    variants: &[Variant],
    family: FamilyKind,
) -> (Vec<BenchRow>, Vec<BenchFailure>) {
    let jobs: Vec<(usize, Variant)> = sizes
        .iter()
        .flat_map(|&n| variants.iter().map(move |&v| (n, v)))
        .collect();
    let results: Vec<Result<BenchRow, BenchFailure>> = jobs
        .par_iter()
        .map(|&(n, variant)| {
            let fail = |reason: String| BenchFailure { n, variant, reason };
            let entry = catalog_lookup(n, family).map_err(|e| fail(e.to_string()))?;
            bench_row(&entry.polynomial, variant).map_err(fail)
        })
        .collect();
    let (mut rows, mut fails) = (Vec::new(), Vec::new());
    for r in results {
        match r {
            Ok(row) => rows.push(row),
            Err(f) => fails.push(f),
        }
    }
    rows.sort_by_key(|r| (r.n, r.variant));
    fails.sort_by_key(|f| (f.n, f.variant));
    (rows, fails)
}

/// Least-squares fit of `ln y = slope · ln n + intercept`.
#[derive(Clone, Debug, PartialEq)]
pub struct Fit {
    pub variant: Variant,
    pub column: &'static str,
    pub slope: f64,
    pub intercept: f64,
    pub points: usize,
}

pub fn loglog_fit(points: &[(f64, f64)]) -> Option<(f64, f64)> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.0 > 0.0 && p.1 > 0.0)
        .map(|p| (p.0.ln(), p.1.ln()))
        .collect();
    let m = pts.len() as f64;
    if pts.len() < 2 {
        return None;
    }
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |a, p| (a.0 + p.0, a.1 + p.1));
    let (mx, my) = (sx / m, sy / m);
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    Some((slope, my - slope * mx))
}

/// Per variant: non-Clifford count and depth against `n`, over the rows
/// whose `n` is a power of two.
pub fn fits(rows: &[BenchRow]) -> Vec<Fit> {
    let mut variants: Vec<Variant> = rows.iter().map(|r| r.variant).collect();
    variants.sort();
    variants.dedup();
    let mut out = Vec::new();
    for v in variants {
        let sel: Vec<&BenchRow> = rows
            .iter()
            .filter(|r| r.variant == v && r.n.is_power_of_two())
            .collect();
        let columns: [(&'static str, fn(&BenchRow) -> usize); 2] = [
            (
                if v == Variant::Baseline {
                    "toffoli"
                } else {
                    "ccz"
                },
                BenchRow::non_clifford,
            ),
            ("depth", |r| r.depth),
        ];
        for (column, get) in columns {
            let pts: Vec<(f64, f64)> = sel.iter().map(|r| (r.n as f64, get(r) as f64)).collect();
            if let Some((slope, intercept)) = loglog_fit(&pts) {
                out.push(Fit {
                    variant: v,
                    column,
                    slope,
                    intercept,
                    points: pts.len(),
                });
            }
        }
    }
    out
}

/// CSV with the fixed header; failures and fits follow as `#` lines.
pub fn to_csv(rows: &[BenchRow], failures: &[BenchFailure], fits: &[Fit]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in rows {
        w.write_record(r.record()).expect("in-memory write");
    }
    let mut s = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii");
    for f in failures {
        s += &format!("# failed n={} variant={}: {}\n", f.n, f.variant, f.reason);
    }
    for f in fits {
        s += &format!(
            "# fit variant={} column={} slope={:.4} intercept={:.4} points={}\n",
            f.variant, f.column, f.slope, f.intercept, f.points
        );
    }
    s
}
