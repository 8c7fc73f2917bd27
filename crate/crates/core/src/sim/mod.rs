//! Classical simulation, form conversion and end-to-end multiplier checks.

mod form;
mod verify;

pub use form::{ccz_core, to_ccz_form, to_toffoli_form, FormError};
pub use verify::{
    default_seed, verify_multiplier, Counterexample, Method, VerificationReport, VerifyMode,
    DEFAULT_SEED, EXHAUSTIVE_MAX_N,
};

use thiserror::Error;

use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate, GateKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error("gate {gate}: {kind:?} is not classical")]
    NonClassical { gate: usize, kind: GateKind },
    #[error("state has {got} bits, circuit has {expected} wires")]
    Length { expected: usize, got: usize },
    #[error("layout: {0}")]
    Layout(String),
    #[error("cannot check this circuit: {0}")]
    Unsupported(String),
}

/// A computational basis state, one bit per wire.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisState(pub BitVec);

impl BasisState {
    pub fn zeros(wires: usize) -> Self {
        BasisState(BitVec::zeros(wires))
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        BasisState(BitVec::from_bools(bits))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, w: usize) -> bool {
        self.0.get(w)
    }

    pub fn set(&mut self, w: usize, v: bool) {
        self.0.set(w, v)
    }

    /// Bits of wires `range`, in order.
    pub fn register(&self, range: std::ops::Range<usize>) -> BitVec {
        self.0.slice(range.start, range.end)
    }
}

pub(crate) fn check_classical(gates: &[Gate]) -> Result<(), SimError> {
    match gates
        .iter()
        .position(|g| matches!(g, Gate::H(_) | Gate::Ccz(_)))
    {
        Some(gate) => Err(SimError::NonClassical {
            gate,
            kind: gates[gate].kind(),
        }),
        None => Ok(()),
    }
}

pub fn simulate(circuit: &Circuit, input: &BasisState) -> Result<BasisState, SimError> {
    if input.len() != circuit.num_wires() {
        return Err(SimError::Length {
            expected: circuit.num_wires(),
            got: input.len(),
        });
    }
    check_classical(circuit.gates())?;
    let mut s = input.clone();
    for g in circuit.gates() {
        match *g {
            Gate::Cnot { control, target } => {
                if s.get(control) {
                    s.0.flip(target);
                }
            }
            Gate::Toffoli {
                controls: [x, y],
                target,
            } => {
                if s.get(x) && s.get(y) {
                    s.0.flip(target);
                }
            }
            Gate::X(q) => s.0.flip(q),
            Gate::H(_) | Gate::Ccz(_) => unreachable!(),
        }
    }
    Ok(s)
}

/// 64 classical runs at once: bit `s` of `lanes[w]` is wire `w` in run `s`.
pub(crate) fn simulate_sliced(gates: &[Gate], lanes: &mut [u64]) {
    for g in gates {
        match *g {
            Gate::Cnot { control, target } => lanes[target] ^= lanes[control],
            Gate::Toffoli {
                controls: [x, y],
                target,
            } => lanes[target] ^= lanes[x] & lanes[y],
            Gate::X(q) => lanes[q] ^= !0,
            Gate::H(_) | Gate::Ccz(_) => unreachable!("checked classical"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toffoli_semantics() {
        let mut c = Circuit::with_wires(3);
        c.append(Gate::toffoli(0, 1, 2)).unwrap();
        let out = simulate(&c, &BasisState::from_bools(&[true, true, false])).unwrap();
        assert_eq!(out, BasisState::from_bools(&[true, true, true]));
        let out = simulate(&c, &BasisState::from_bools(&[true, false, false])).unwrap();
        assert_eq!(out, BasisState::from_bools(&[true, false, false]));
    }

    #[test]
    fn zero_state_stays_zero() {
        let mut c = Circuit::with_wires(4);
        c.extend([Gate::cnot(0, 1), Gate::toffoli(1, 2, 3), Gate::cnot(3, 0)])
            .unwrap();
        assert_eq!(
            simulate(&c, &BasisState::zeros(4)).unwrap(),
            BasisState::zeros(4)
        );
    }

    #[test]
    fn rejects_non_classical() {
        let mut c = Circuit::with_wires(3);
        c.extend([Gate::H(2), Gate::ccz(0, 1, 2), Gate::H(2)])
            .unwrap();
        assert!(matches!(
            simulate(&c, &BasisState::zeros(3)),
            Err(SimError::NonClassical { gate: 0, .. })
        ));
        assert!(matches!(
            simulate(&c, &BasisState::zeros(2)),
            Err(SimError::Length { .. })
        ));
    }

    #[test]
    fn sliced_matches_scalar() {
        let mut c = Circuit::with_wires(4);
        c.extend([
            Gate::cnot(0, 1),
            Gate::toffoli(1, 2, 3),
            Gate::X(0),
            Gate::toffoli(0, 3, 2),
        ])
        .unwrap();
        let mut lanes = [0u64; 4];
        for s in 0..16u64 {
            for (w, l) in lanes.iter_mut().enumerate() {
                *l |= ((s >> w) & 1) << s;
            }
        }
        simulate_sliced(c.gates(), &mut lanes);
        for s in 0..16u64 {
            let input = BasisState(BitVec::from_u64(s, 4));
            let out = simulate(&c, &input).unwrap();
            for (w, l) in lanes.iter().enumerate() {
                assert_eq!(out.get(w), (l >> s) & 1 == 1);
            }
        }
    }
}
