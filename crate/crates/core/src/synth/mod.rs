//! Multiplier synthesis: the compact (zero-ancilla), linear-depth and
//! logarithmic-depth Karatsuba-style constructions and the quadratic
//! baseline.

mod baseline;
mod compact;
mod dead;
mod linear;
mod logdepth;
mod reduction;

pub use baseline::synth_baseline;
pub use dead::{eliminate_dead_gates, DeadGateReport};
pub use linear::{prepare_parallel, PreparedFragments};
pub use reduction::{
    cnot_ladder, cprime_ancilla_circuit, linear_map_cnots, reduction_cnot_equally_spaced,
    reduction_cnot_trinomial,
};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::circuit::{Circuit, CircuitError, Gate, RegisterLayout};
use crate::gf2::{build_reduction_matrix, is_irreducible, BinaryPolynomial, Gf2Error};
use crate::sim::{to_toffoli_form, FormError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthError {
    #[error("modulus {0} is reducible")]
    Reducible(String),
    #[error("invalid modulus: {0}")]
    Degree(String),
    #[error("unsupported modulus family: {0}")]
    UnsupportedFamily(String),
    #[error("unsupported output form: {0}")]
    UnsupportedForm(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Form(#[from] FormError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Compact,
    LinearDepth,
    LogDepth,
    Baseline,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Compact,
        Variant::LinearDepth,
        Variant::LogDepth,
        Variant::Baseline,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::Compact => "compact",
            Variant::LinearDepth => "linear-depth",
            Variant::LogDepth => "log-depth",
            Variant::Baseline => "baseline",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s || v.name().replace('-', "_") == s)
            .ok_or_else(|| format!("unknown variant `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputForm {
    /// H layer on the phase wires, {CNOT, CCZ} core, H layer.
    #[default]
    Ccz,
    /// Classical reversible {CNOT, Toffoli}.
    Toffoli,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LadderStyle {
    Sequential,
    /// Logarithmic-depth prefix network.
    #[default]
    Prefix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisOptions {
    pub variant: Variant,
    pub modulus: BinaryPolynomial,
    pub output_form: OutputForm,
    /// Only used by the logarithmic-depth variant.
    pub ladder_style: LadderStyle,
    /// Skip the irreducibility requirement (the circuit then multiplies in
    /// the ring GF(2)[x]/P).
    pub allow_reducible: bool,
}

impl SynthesisOptions {
    pub fn new(variant: Variant, modulus: BinaryPolynomial) -> Self {
        let output_form = if variant == Variant::Baseline {
            OutputForm::Toffoli
        } else {
            OutputForm::Ccz
        };
        SynthesisOptions {
            variant,
            modulus,
            output_form,
            ladder_style: LadderStyle::Prefix,
            allow_reducible: false,
        }
    }
}

/// Modulus shapes with a logarithmic-depth reduction circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Generic,
    /// `x^n + x^k + 1`.
    Trinomial {
        k: usize,
    },
    /// `Σ_{i=0}^{terms} x^{i·spacing}`.
    EquallySpaced {
        terms: usize,
        spacing: usize,
    },
}

pub fn classify_family(p: &BinaryPolynomial) -> Family {
    let exps: Vec<usize> = p.exponents_ascending().collect();
    match exps.as_slice() {
        [0, k, n] if k < n => Family::Trinomial { k: *k },
        [0, s, ..] if exps.len() >= 3 && exps.iter().enumerate().all(|(i, &e)| e == i * s) => {
            Family::EquallySpaced {
                terms: exps.len() - 1,
                spacing: *s,
            }
        }
        _ => Family::Generic,
    }
}

/// Reduction fragment applying `Q` in place on `c` for the supported families.
pub fn reduction_cnot(
    p: &BinaryPolynomial,
    c: &[usize],
    style: LadderStyle,
) -> Result<Vec<Gate>, SynthError> {
    match classify_family(p) {
        Family::Trinomial { k } => reduction_cnot_trinomial(c, k, style),
        Family::EquallySpaced { terms, spacing } => {
            reduction_cnot_equally_spaced(c, terms, spacing, style)
        }
        Family::Generic => Err(SynthError::UnsupportedFamily(format!(
            "{} is neither a trinomial nor equally spaced",
            p.to_pretty()
        ))),
    }
}

pub(crate) fn check_modulus(
    p: &BinaryPolynomial,
    allow_reducible: bool,
) -> Result<usize, SynthError> {
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        d => {
            return Err(SynthError::Degree(format!(
                "degree {d:?} of {} is below 2",
                p.to_pretty()
            )))
        }
    };
    if !allow_reducible && !is_irreducible(p) {
        return Err(SynthError::Reducible(p.to_pretty()));
    }
    Ok(n)
}

/// Wraps a {CNOT, CCZ} core in H layers on the `c` register.
pub(crate) fn h_sandwich(n: usize, ancillas: usize, core: Vec<Gate>) -> Circuit {
    let layout = RegisterLayout::multiplier(n, ancillas);
    let h: Vec<Gate> = layout.c().map(Gate::H).collect();
    let mut gates = Vec::with_capacity(core.len() + 2 * n);
    gates.extend_from_slice(&h);
    gates.extend(core);
    gates.extend_from_slice(&h);
    Circuit::from_parts_unchecked(layout, gates)
}

/// Synthesizes `|a>|b>|c>|0> -> |a>|b>|c ^ a·b mod P>|0>`.
pub fn synth(options: &SynthesisOptions) -> Result<Circuit, SynthError> {
    let p = &options.modulus;
    let n = check_modulus(p, options.allow_reducible)?;
    if options.variant == Variant::Baseline {
        let c = synth_baseline_unchecked(p, n)?;
        return match options.output_form {
            OutputForm::Toffoli => Ok(c),
            OutputForm::Ccz => Ok(crate::sim::to_ccz_form(&c)?),
        };
    }
    let q = build_reduction_matrix(p)?;
    let circuit = match options.variant {
        Variant::Compact => compact::synth_compact(n, &q),
        Variant::LinearDepth => linear::synth_linear(n, &q),
        Variant::LogDepth => logdepth::synth_log(p, n, options.ladder_style)?,
        Variant::Baseline => unreachable!(),
    };
    match options.output_form {
        OutputForm::Ccz => Ok(circuit),
        OutputForm::Toffoli => to_toffoli_form(&circuit).map_err(|e| {
            SynthError::UnsupportedForm(format!(
                "{} keeps c-derived values on ancillas inside the Hadamard frame and has no gate-by-gate Toffoli form ({e})",
                options.variant
            ))
        }),
    }
}

fn synth_baseline_unchecked(p: &BinaryPolynomial, n: usize) -> Result<Circuit, SynthError> {
    baseline::build(p, n)
}

/// Which recursion schedule [`karatsuba_core`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoreMode {
    /// Sequential calls, in-place basis changes, no ancillas.
    Compact,
    /// Two calls in parallel after a depth-2 preparation.
    LinearDepth,
    /// All three calls in parallel on private copies.
    LogDepth,
}

/// The recursive `g ⊕ h` fragment on slots held by `wires` wires (`None` =
/// constant zero). Slots must be distinct wires. Fresh ancillas, if the mode
/// needs them, are numbered from `wires` upward; the returned circuit is
/// sized to include them and leaves them clean.
pub fn karatsuba_core(
    wires: usize,
    a: &[Option<usize>],
    b: &[Option<usize>],
    c: &[Option<usize>],
    cp: &[Option<usize>],
    mode: CoreMode,
) -> Result<Circuit, SynthError> {
    let k = a.len();
    if k == 0 || b.len() != k || c.len() != k || cp.len() != k {
        return Err(SynthError::InvalidInput(
            "slot vectors must share a positive length".into(),
        ));
    }
    let mut used: Vec<usize> = a
        .iter()
        .chain(b)
        .chain(c)
        .chain(cp)
        .flatten()
        .copied()
        .collect();
    used.sort_unstable();
    if used.windows(2).any(|w| w[0] == w[1]) || used.last().map_or(false, |&w| w >= wires) {
        return Err(SynthError::InvalidInput(
            "slots must be distinct wires in range".into(),
        ));
    }
    let (gates, total) = match mode {
        CoreMode::Compact => (compact::core_on_wires(a, b, c, cp), wires),
        CoreMode::LinearDepth => linear::core_on_wires(wires, a, b, c, cp),
        CoreMode::LogDepth => logdepth::core_on_wires(wires, a, b, c, cp),
    };
    let mut circuit = Circuit::with_wires(total);
    circuit.extend(gates)?;
    Ok(circuit)
}

/// Padding of odd-size slot vectors to size `k+1`:
/// `ã = [a; 0]`, `b̃ = [b; 0]`, `c̃ = [c; c'_0]`, `c̃' = [c'_1 .. c'_{k-1}; 0; 0]`.
#[allow(clippy::type_complexity)]
pub fn pad_odd<A: Clone + Default, C: Clone + Default>(
    a: &[A],
    b: &[A],
    c: &[C],
    cp: &[C],
) -> Result<(Vec<A>, Vec<A>, Vec<C>, Vec<C>), SynthError> {
    let k = a.len();
    if k % 2 == 0 {
        return Err(SynthError::InvalidInput(format!(
            "padding needs an odd size, got {k}"
        )));
    }
    let pad = |v: &[A]| v.iter().cloned().chain([A::default()]).collect::<Vec<_>>();
    let c_t = c.iter().cloned().chain([cp[0].clone()]).collect();
    let cp_t = cp[1..]
        .iter()
        .cloned()
        .chain([C::default(), C::default()])
        .collect();
    Ok((pad(a), pad(b), c_t, cp_t))
}
