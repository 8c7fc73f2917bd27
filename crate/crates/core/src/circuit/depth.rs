use std::fmt;

use super::{Circuit, Gate, GateKind};

/// Gate counts and ASAP-scheduled depth of a circuit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResourceReport {
    pub cnot: usize,
    pub ccz: usize,
    pub toffoli: usize,
    pub h: usize,
    pub x: usize,
    pub total_gates: usize,
    /// Layers over all gates.
    pub depth: usize,
    /// Layers counting only CCZ and Toffoli gates.
    pub toffoli_depth: usize,
    pub qubit_count: usize,
    pub ancilla_count: usize,
    /// `qubit_count * depth`.
    pub spacetime: usize,
}

impl ResourceReport {
    /// CCZ plus Toffoli count.
    pub fn non_clifford(&self) -> usize {
        self.ccz + self.toffoli
    }
}

impl fmt::Display for ResourceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits        {}", self.qubit_count)?;
        writeln!(f, "ancillas      {}", self.ancilla_count)?;
        writeln!(f, "ccz           {}", self.ccz)?;
        writeln!(f, "toffoli       {}", self.toffoli)?;
        writeln!(f, "cnot          {}", self.cnot)?;
        writeln!(f, "h             {}", self.h)?;
        writeln!(f, "x             {}", self.x)?;
        writeln!(f, "total_gates   {}", self.total_gates)?;
        writeln!(f, "depth         {}", self.depth)?;
        writeln!(f, "toffoli_depth {}", self.toffoli_depth)?;
        write!(f, "spacetime     {}", self.spacetime)
    }
}

/// Layer index (0-based) of every gate under as-soon-as-possible placement.
pub fn asap_layers(circuit: &Circuit) -> Vec<usize> {
    let mut frontier = vec![0usize; circuit.num_wires()];
    circuit
        .gates()
        .iter()
        .map(|g| {
            let layer = g.wires().map(|w| frontier[w]).max().unwrap_or(0);
            for w in g.wires() {
                frontier[w] = layer + 1;
            }
            layer
        })
        .collect()
}

pub fn compute_depth(circuit: &Circuit) -> ResourceReport {
    let wires = circuit.num_wires();
    let mut frontier = vec![0usize; wires];
    let mut t_frontier = vec![0usize; wires];
    let mut report = ResourceReport {
        qubit_count: wires,
        ancilla_count: circuit.ancilla_count(),
        total_gates: circuit.len(),
        ..Default::default()
    };
    for g in circuit.gates() {
        match g.kind() {
            GateKind::Cnot => report.cnot += 1,
            GateKind::Ccz => report.ccz += 1,
            GateKind::Toffoli => report.toffoli += 1,
            GateKind::H => report.h += 1,
            GateKind::X => report.x += 1,
        }
        let layer = g.wires().map(|w| frontier[w]).max().unwrap_or(0) + 1;
        let t_layer =
            g.wires().map(|w| t_frontier[w]).max().unwrap_or(0) + usize::from(g.is_non_clifford());
        for w in g.wires() {
            frontier[w] = layer;
            t_frontier[w] = t_layer;
        }
        report.depth = report.depth.max(layer);
        report.toffoli_depth = report.toffoli_depth.max(t_layer);
    }
    report.spacetime = report.qubit_count * report.depth;
    report
}

/// Depth of a bare gate list over `wires` wires.
pub fn gate_list_depth(gates: &[Gate], wires: usize) -> usize {
    let mut frontier = vec![0usize; wires];
    let mut depth = 0;
    for g in gates {
        let layer = g.wires().map(|w| frontier[w]).max().unwrap_or(0) + 1;
        for w in g.wires() {
            frontier[w] = layer;
        }
        depth = depth.max(layer);
    }
    depth
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Circuit;
    use proptest::prelude::*;

    fn circuit(wires: usize, gates: &[Gate]) -> Circuit {
        let mut c = Circuit::with_wires(wires);
        c.extend(gates.iter().copied()).unwrap();
        c
    }

    #[test]
    fn disjoint_and_shared_wires() {
        assert_eq!(
            compute_depth(&circuit(4, &[Gate::cnot(0, 1), Gate::cnot(2, 3)])).depth,
            1
        );
        assert_eq!(
            compute_depth(&circuit(4, &[Gate::cnot(0, 1), Gate::cnot(1, 2)])).depth,
            2
        );
    }

    #[test]
    fn toffoli_depth_ignores_cliffords() {
        let c = circuit(
            4,
            &[
                Gate::H(2),
                Gate::ccz(0, 1, 2),
                Gate::cnot(2, 3),
                Gate::toffoli(0, 1, 3),
                Gate::H(2),
            ],
        );
        let r = compute_depth(&c);
        assert_eq!(r.depth, 4);
        assert_eq!(r.toffoli_depth, 2);
        assert_eq!(r.spacetime, 16);
        assert_eq!((r.ccz, r.toffoli, r.cnot, r.h), (1, 1, 1, 2));
    }

    fn arb_gate(wires: usize) -> impl Strategy<Value = Gate> {
        (0..wires, 0..wires, 0..wires, 0..3u8).prop_filter_map("distinct", move |(p, q, r, k)| {
            match k {
                0 if p != q => Some(Gate::cnot(p, q)),
                1 if p != q && q != r && p != r => Some(Gate::ccz(p, q, r)),
                2 => Some(Gate::H(p)),
                _ => None,
            }
        })
    }

    proptest! {
        #[test]
        fn asap_layers_are_disjoint_and_minimal(gates in prop::collection::vec(arb_gate(6), 0..40)) {
            let c = circuit(6, &gates);
            let layers = asap_layers(&c);
            let depth = layers.iter().map(|l| l + 1).max().unwrap_or(0);
            prop_assert_eq!(depth, compute_depth(&c).depth);
            for (i, g) in gates.iter().enumerate() {
                for (j, h) in gates.iter().enumerate().take(i) {
                    if layers[i] == layers[j] {
                        prop_assert!(g.wires().all(|w| h.wires().all(|v| v != w)));
                    }
                }
                if layers[i] > 0 {
                    // some earlier gate on a shared wire sits in the layer just below
                    let blocked = gates[..i].iter().enumerate().any(|(j, h)| {
                        layers[j] + 1 == layers[i] && h.wires().any(|v| g.wires().any(|w| w == v))
                    });
                    prop_assert!(blocked);
                }
            }
        }
    }
}
