//! Conversion between the Hadamard-framed {CNOT, CCZ} form and the
//! classical {CNOT, Toffoli} form. Conjugating by H on the phase wires turns
//! a CCZ into a Toffoli onto its phase wire and reverses CNOTs between
//! phase wires.

use thiserror::Error;

use crate::circuit::{Circuit, Gate, GateKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("not an H-framed circuit: {0}")]
    NotFramed(String),
    #[error("gate {gate}: CCZ touches {count} phase wires (need exactly 1)")]
    CczPhaseWires { gate: usize, count: usize },
    #[error("gate {gate}: CNOT mixes phase and non-phase wires")]
    MixedCnot { gate: usize },
    #[error("gate {gate}: Toffoli must target a phase wire from two non-phase controls")]
    ToffoliShape { gate: usize },
    #[error("gate {gate}: {kind:?} not allowed here")]
    UnexpectedGate { gate: usize, kind: GateKind },
}

/// Phase wires of the frame: the layout's, or (when it declares none) the
/// wires of the leading run of H gates.
fn frame_wires(circuit: &Circuit) -> Vec<usize> {
    let declared = circuit.layout().phase_wires();
    if !declared.is_empty() {
        return declared.to_vec();
    }
    let mut w: Vec<usize> = circuit
        .gates()
        .iter()
        .map_while(|g| match *g {
            Gate::H(q) => Some(q),
            _ => None,
        })
        .collect();
    w.sort_unstable();
    w.dedup();
    w
}

fn is_h_layer(gates: &[Gate], wires: &[usize]) -> bool {
    let mut seen: Vec<usize> = gates
        .iter()
        .filter_map(|g| match *g {
            Gate::H(q) => Some(q),
            _ => None,
        })
        .collect();
    seen.sort_unstable();
    seen.len() == gates.len() && seen == wires
}

/// The gates strictly inside the H frame, plus the (sorted) phase wires.
pub fn ccz_core(circuit: &Circuit) -> Result<(&[Gate], Vec<usize>), FormError> {
    let wires = frame_wires(circuit);
    let gates = circuit.gates();
    let m = wires.len();
    if m == 0 || gates.len() < 2 * m {
        return Err(FormError::NotFramed("missing H layers".into()));
    }
    let (head, rest) = gates.split_at(m);
    let (core, tail) = rest.split_at(rest.len() - m);
    if !is_h_layer(head, &wires) || !is_h_layer(tail, &wires) {
        return Err(FormError::NotFramed(
            "first and last layers must be H on every phase wire".into(),
        ));
    }
    if let Some(i) = core.iter().position(|g| matches!(g, Gate::H(_))) {
        return Err(FormError::UnexpectedGate {
            gate: m + i,
            kind: GateKind::H,
        });
    }
    Ok((core, wires))
}

pub fn to_toffoli_form(circuit: &Circuit) -> Result<Circuit, FormError> {
    let (core, wires) = ccz_core(circuit)?;
    let phase = |q: usize| wires.binary_search(&q).is_ok();
    let offset = wires.len();
    let mut out = Vec::with_capacity(core.len());
    for (i, g) in core.iter().enumerate() {
        let gate = offset + i;
        out.push(match *g {
            Gate::Ccz(qs) => {
                let on: Vec<usize> = qs.iter().copied().filter(|&q| phase(q)).collect();
                if on.len() != 1 {
                    return Err(FormError::CczPhaseWires {
                        gate,
                        count: on.len(),
                    });
                }
                let ctl: Vec<usize> = qs.iter().copied().filter(|&q| !phase(q)).collect();
                Gate::toffoli(ctl[0], ctl[1], on[0])
            }
            Gate::Cnot { control, target } => match (phase(control), phase(target)) {
                (true, true) => Gate::cnot(target, control),
                (false, false) => *g,
                _ => return Err(FormError::MixedCnot { gate }),
            },
            Gate::X(q) if !phase(q) => *g,
            _ => {
                return Err(FormError::UnexpectedGate {
                    gate,
                    kind: g.kind(),
                })
            }
        });
    }
    Ok(Circuit::from_parts_unchecked(circuit.layout().clone(), out))
}

/// Inverse of [`to_toffoli_form`]; phase wires come from the layout.
pub fn to_ccz_form(circuit: &Circuit) -> Result<Circuit, FormError> {
    let wires = circuit.layout().phase_wires().to_vec();
    if wires.is_empty() {
        return Err(FormError::NotFramed(
            "layout declares no phase wires".into(),
        ));
    }
    let phase = |q: usize| wires.binary_search(&q).is_ok();
    let h: Vec<Gate> = wires.iter().map(|&q| Gate::H(q)).collect();
    let mut out = h.clone();
    for (gate, g) in circuit.gates().iter().enumerate() {
        out.push(match *g {
            Gate::Toffoli {
                controls: [x, y],
                target,
            } => {
                if !phase(target) || phase(x) || phase(y) {
                    return Err(FormError::ToffoliShape { gate });
                }
                Gate::ccz(x, y, target)
            }
            Gate::Cnot { control, target } => match (phase(control), phase(target)) {
                (true, true) => Gate::cnot(target, control),
                (false, false) => *g,
                _ => return Err(FormError::MixedCnot { gate }),
            },
            Gate::X(q) if !phase(q) => *g,
            _ => {
                return Err(FormError::UnexpectedGate {
                    gate,
                    kind: g.kind(),
                })
            }
        });
    }
    out.extend(h);
    Ok(Circuit::from_parts_unchecked(circuit.layout().clone(), out))
}
