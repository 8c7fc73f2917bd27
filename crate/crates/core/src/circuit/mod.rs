//! Gate-level circuit representation, register layout, depth metrics and
//! the line-oriented netlist format.

mod depth;
mod netlist;

pub use depth::{asap_layers, compute_depth, gate_list_depth, ResourceReport};
pub use netlist::{emit_netlist, parse_netlist, NetlistError};

use std::fmt;
use std::ops::Range;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("operand {operand} out of range for {wires} wires")]
    OutOfRange { operand: usize, wires: usize },
    #[error("duplicate operand {0} in gate")]
    DuplicateOperand(usize),
    #[error("invalid register layout: {0}")]
    Layout(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    Cnot {
        control: usize,
        target: usize,
    },
    /// Operands kept in ascending order.
    Ccz([usize; 3]),
    Toffoli {
        controls: [usize; 2],
        target: usize,
    },
    H(usize),
    X(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Cnot,
    Ccz,
    Toffoli,
    H,
    X,
}

impl Gate {
    pub fn cnot(control: usize, target: usize) -> Gate {
        Gate::Cnot { control, target }
    }

    pub fn ccz(p: usize, q: usize, r: usize) -> Gate {
        let mut ops = [p, q, r];
        ops.sort_unstable();
        Gate::Ccz(ops)
    }

    pub fn toffoli(c1: usize, c2: usize, target: usize) -> Gate {
        Gate::Toffoli {
            controls: [c1, c2],
            target,
        }
    }

    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Cnot { .. } => GateKind::Cnot,
            Gate::Ccz(_) => GateKind::Ccz,
            Gate::Toffoli { .. } => GateKind::Toffoli,
            Gate::H(_) => GateKind::H,
            Gate::X(_) => GateKind::X,
        }
    }

    pub fn wires(&self) -> impl Iterator<Item = usize> {
        let (buf, len): ([usize; 3], usize) = match *self {
            Gate::Cnot { control, target } => ([control, target, 0], 2),
            Gate::Ccz(ops) => (ops, 3),
            Gate::Toffoli { controls, target } => ([controls[0], controls[1], target], 3),
            Gate::H(q) | Gate::X(q) => ([q, 0, 0], 1),
        };
        buf.into_iter().take(len)
    }

    pub fn is_non_clifford(&self) -> bool {
        matches!(self, Gate::Ccz(_) | Gate::Toffoli { .. })
    }

    /// Applies a wire renaming.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> Gate {
        match *self {
            Gate::Cnot { control, target } => Gate::cnot(f(control), f(target)),
            Gate::Ccz([p, q, r]) => Gate::ccz(f(p), f(q), f(r)),
            Gate::Toffoli { controls, target } => {
                Gate::toffoli(f(controls[0]), f(controls[1]), f(target))
            }
            Gate::H(q) => Gate::H(f(q)),
            Gate::X(q) => Gate::X(f(q)),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Cnot { control, target } => write!(f, "CNOT {control} {target}"),
            Gate::Ccz([p, q, r]) => write!(f, "CCZ {p} {q} {r}"),
            Gate::Toffoli { controls, target } => {
                write!(f, "TOF {} {} {target}", controls[0], controls[1])
            }
            Gate::H(q) => write!(f, "H {q}"),
            Gate::X(q) => write!(f, "X {q}"),
        }
    }
}

/// Named wire ranges plus the set of wires that carry the Hadamard frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegisterLayout {
    a: Range<usize>,
    b: Range<usize>,
    c: Range<usize>,
    anc: Range<usize>,
    phase_wires: Vec<usize>,
}

impl RegisterLayout {
    /// Standard layout `a | b | c | anc` with `c` as the phase register.
    pub fn multiplier(n: usize, ancillas: usize) -> Self {
        RegisterLayout {
            a: 0..n,
            b: n..2 * n,
            c: 2 * n..3 * n,
            anc: 3 * n..3 * n + ancillas,
            phase_wires: (2 * n..3 * n).collect(),
        }
    }

    /// Arbitrary ranges; they must be disjoint and tile `0..total`.
    pub fn from_ranges(
        a: Range<usize>,
        b: Range<usize>,
        c: Range<usize>,
        anc: Range<usize>,
        mut phase_wires: Vec<usize>,
    ) -> Result<Self, CircuitError> {
        let mut ranges = [a.clone(), b.clone(), c.clone(), anc.clone()];
        ranges.sort_by_key(|r| (r.start, r.end));
        let mut cursor = 0;
        for r in &ranges {
            if r.start > r.end {
                return Err(CircuitError::Layout(format!("reversed range {r:?}")));
            }
            if r.start != cursor {
                return Err(CircuitError::Layout(format!(
                    "ranges overlap or leave a gap at {cursor}"
                )));
            }
            cursor = r.end;
        }
        phase_wires.sort_unstable();
        phase_wires.dedup();
        if let Some(&w) = phase_wires.iter().find(|&&w| w >= cursor) {
            return Err(CircuitError::Layout(format!(
                "phase wire {w} outside {cursor} wires"
            )));
        }
        Ok(RegisterLayout {
            a,
            b,
            c,
            anc,
            phase_wires,
        })
    }

    pub fn total(&self) -> usize {
        self.a.len() + self.b.len() + self.c.len() + self.anc.len()
    }

    pub fn a(&self) -> Range<usize> {
        self.a.clone()
    }

    pub fn b(&self) -> Range<usize> {
        self.b.clone()
    }

    pub fn c(&self) -> Range<usize> {
        self.c.clone()
    }

    pub fn anc(&self) -> Range<usize> {
        self.anc.clone()
    }

    pub fn ancilla_count(&self) -> usize {
        self.anc.len()
    }

    pub fn phase_wires(&self) -> &[usize] {
        &self.phase_wires
    }

    pub fn is_phase_wire(&self, w: usize) -> bool {
        self.phase_wires.binary_search(&w).is_ok()
    }
}

/// An ordered gate list over a register layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    layout: RegisterLayout,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(layout: RegisterLayout) -> Self {
        Circuit {
            layout,
            gates: Vec::new(),
        }
    }

    /// A bare circuit over `wires` wires, all of them in register `a`.
    pub fn with_wires(wires: usize) -> Self {
        let layout =
            RegisterLayout::from_ranges(0..wires, wires..wires, wires..wires, wires..wires, vec![])
                .expect("single range layout");
        Circuit::new(layout)
    }

    pub fn from_gates(layout: RegisterLayout, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        let mut c = Circuit::new(layout);
        for g in gates {
            c.append(g)?;
        }
        Ok(c)
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn num_wires(&self) -> usize {
        self.layout.total()
    }

    pub fn ancilla_count(&self) -> usize {
        self.layout.ancilla_count()
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn validate(&self, gate: &Gate) -> Result<(), CircuitError> {
        let wires = self.num_wires();
        let ops: Vec<usize> = gate.wires().collect();
        for (i, &w) in ops.iter().enumerate() {
            if w >= wires {
                return Err(CircuitError::OutOfRange { operand: w, wires });
            }
            if ops[..i].contains(&w) {
                return Err(CircuitError::DuplicateOperand(w));
            }
        }
        Ok(())
    }

    pub fn append(&mut self, gate: Gate) -> Result<(), CircuitError> {
        self.validate(&gate)?;
        let gate = match gate {
            Gate::Ccz([p, q, r]) => Gate::ccz(p, q, r),
            g => g,
        };
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<(), CircuitError> {
        for g in gates {
            self.append(g)?;
        }
        Ok(())
    }

    /// Gate list reversed; every supported gate is self-inverse.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            layout: self.layout.clone(),
            gates: self.gates.iter().rev().copied().collect(),
        }
    }

    /// `self` followed by `other` on the same layout.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit, CircuitError> {
        if self.layout != other.layout {
            return Err(CircuitError::Layout(
                "compose requires identical layouts".into(),
            ));
        }
        let mut out = self.clone();
        out.gates.extend_from_slice(&other.gates);
        Ok(out)
    }

    pub fn count(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind() == kind).count()
    }

    pub fn report(&self) -> ResourceReport {
        compute_depth(self)
    }

    pub(crate) fn from_parts_unchecked(layout: RegisterLayout, gates: Vec<Gate>) -> Circuit {
        Circuit { layout, gates }
    }

    pub fn into_parts(self) -> (RegisterLayout, Vec<Gate>) {
        (self.layout, self.gates)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn append_validates_and_canonicalizes() {
        let mut c = Circuit::with_wires(2);
        c.append(Gate::cnot(0, 1)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(
            c.append(Gate::cnot(0, 0)),
            Err(CircuitError::DuplicateOperand(0))
        );
        assert!(matches!(
            c.append(Gate::cnot(0, 2)),
            Err(CircuitError::OutOfRange { .. })
        ));

        let mut c = Circuit::with_wires(3);
        c.append(Gate::Ccz([2, 1, 0])).unwrap();
        assert_eq!(c.gates()[0], Gate::Ccz([0, 1, 2]));
    }

    #[test]
    fn inverse_reverses() {
        let c = Circuit::from_gates(
            RegisterLayout::multiplier(1, 0),
            vec![Gate::cnot(0, 1), Gate::cnot(1, 2)],
        )
        .unwrap();
        assert_eq!(c.inverse().gates(), &[Gate::cnot(1, 2), Gate::cnot(0, 1)]);
        assert!(Circuit::with_wires(3).inverse().is_empty());
    }

    #[test]
    fn layout_rejects_overlap_and_gaps() {
        assert!(RegisterLayout::from_ranges(0..2, 1..3, 3..4, 4..4, vec![]).is_err());
        assert!(RegisterLayout::from_ranges(0..2, 3..4, 4..5, 5..5, vec![]).is_err());
        assert!(RegisterLayout::from_ranges(0..2, 2..4, 4..6, 6..6, vec![7]).is_err());
        let l = RegisterLayout::multiplier(3, 2);
        assert_eq!(l.total(), 11);
        assert!(l.is_phase_wire(6) && !l.is_phase_wire(9));
    }
}
