//! Removes gates that provably act on constant-zero wires, then drops
//! ancillas no remaining gate touches.

use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate, RegisterLayout};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DeadGateReport {
    pub removed_cnot: usize,
    pub removed_ccz: usize,
    pub removed_toffoli: usize,
    pub removed_ancillas: usize,
}

impl DeadGateReport {
    pub fn removed_gates(&self) -> usize {
        self.removed_cnot + self.removed_ccz + self.removed_toffoli
    }
}

/// Forms are tracked over the non-ancilla wires (ancillas start at 0);
/// `None` means "not a known linear form", which is never treated as zero.
pub fn eliminate_dead_gates(circuit: &Circuit) -> (Circuit, DeadGateReport) {
    let layout = circuit.layout();
    let anc = layout.anc();
    let w = circuit.num_wires();
    let vars = w - anc.len();
    let var_of = |q: usize| if q < anc.start { q } else { q - anc.len() };
    let mut forms: Vec<Option<BitVec>> = (0..w)
        .map(|q| {
            Some(if anc.contains(&q) {
                BitVec::zeros(vars)
            } else {
                BitVec::unit(vars, var_of(q))
            })
        })
        .collect();
    let zero = |f: &Option<BitVec>| f.as_ref().map_or(false, BitVec::is_zero);

    let mut report = DeadGateReport::default();
    let mut kept = Vec::with_capacity(circuit.len());
    for g in circuit.gates() {
        match *g {
            Gate::Cnot { control, target } => {
                if zero(&forms[control]) {
                    report.removed_cnot += 1;
                    continue;
                }
                forms[target] = match (&forms[control], &forms[target]) {
                    (Some(x), Some(y)) => Some(x.xor(y)),
                    _ => None,
                };
            }
            Gate::Ccz(qs) => {
                if qs.iter().any(|&q| zero(&forms[q])) {
                    report.removed_ccz += 1;
                    continue;
                }
            }
            Gate::Toffoli { controls, target } => {
                if controls.iter().any(|&q| zero(&forms[q])) {
                    report.removed_toffoli += 1;
                    continue;
                }
                forms[target] = None;
            }
            Gate::H(q) | Gate::X(q) => forms[q] = None,
        }
        kept.push(*g);
    }

    let mut touched = vec![false; w];
    for g in &kept {
        for q in g.wires() {
            touched[q] = true;
        }
    }
    let live: Vec<usize> = anc.clone().filter(|&q| touched[q]).collect();
    report.removed_ancillas = anc.len() - live.len();
    let mut remap: Vec<usize> = (0..w).collect();
    for (i, &q) in live.iter().enumerate() {
        remap[q] = anc.start + i;
    }
    let gates = kept.iter().map(|g| g.remap(|q| remap[q])).collect();
    let (a, b, c) = (layout.a(), layout.b(), layout.c());
    let new_layout = RegisterLayout::from_ranges(
        a,
        b,
        c,
        anc.start..anc.start + live.len(),
        layout.phase_wires().to_vec(),
    )
    .expect("same non-ancilla ranges");
    (Circuit::from_parts_unchecked(new_layout, gates), report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drops_gates_on_clean_ancillas() {
        let mut c = Circuit::new(RegisterLayout::multiplier(1, 3));
        c.extend([
            Gate::cnot(3, 4),
            Gate::ccz(0, 1, 4),
            Gate::cnot(2, 5),
            Gate::ccz(0, 1, 5),
            Gate::cnot(2, 5),
            Gate::toffoli(5, 0, 2),
        ])
        .unwrap();
        let (out, r) = eliminate_dead_gates(&c);
        assert_eq!(
            r,
            DeadGateReport {
                removed_cnot: 1,
                removed_ccz: 1,
                removed_toffoli: 1,
                removed_ancillas: 2
            }
        );
        assert_eq!(out.num_wires(), 4);
        assert_eq!(
            out.gates(),
            &[Gate::cnot(2, 3), Gate::ccz(0, 1, 3), Gate::cnot(2, 3)]
        );
    }
}
