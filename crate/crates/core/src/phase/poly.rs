use std::collections::BTreeSet;
use std::fmt;

use super::PhaseError;
use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::gf2::rank_of;

const NONE: u32 = u32::MAX;

/// A multilinear monomial of degree at most three; variables ascending,
/// unused slots hold `u32::MAX`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([u32; 3]);

impl Monomial {
    /// Product `x_i x_j x_k` reduced with `x^2 = x`.
    pub fn new(i: usize, j: usize, k: usize) -> Monomial {
        let mut v = [i as u32, j as u32, k as u32];
        v.sort_unstable();
        if v[1] == v[2] {
            v[2] = NONE;
        }
        if v[0] == v[1] {
            v[1] = v[2];
            v[2] = NONE;
        }
        Monomial(v)
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().filter(|&&v| v != NONE).map(|&v| v as usize)
    }

    pub fn degree(&self) -> usize {
        self.vars().count()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vars().map(|v| format!("x{v}")).collect();
        f.write_str(&names.join("·"))
    }
}

/// GF(2) polynomial made of cubic (or, for degenerate products, lower
/// degree) multilinear monomials. Adding a monomial twice cancels it.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct CubicPhasePolynomial {
    monomials: BTreeSet<Monomial>,
}

impl CubicPhasePolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn toggle(&mut self, m: Monomial) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    pub fn toggle_triple(&mut self, i: usize, j: usize, k: usize) {
        self.toggle(Monomial::new(i, j, k));
    }

    /// XORs in the expansion of the product of three linear forms.
    pub fn add_product(&mut self, f: &BitVec, g: &BitVec, h: &BitVec) {
        let (gs, hs): (Vec<usize>, Vec<usize>) = (g.ones().collect(), h.ones().collect());
        for i in f.ones() {
            for &j in &gs {
                for &k in &hs {
                    self.toggle_triple(i, j, k);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &CubicPhasePolynomial) {
        for &m in &other.monomials {
            self.toggle(m);
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn is_homogeneous_cubic(&self) -> bool {
        self.monomials.iter().all(|m| m.degree() == 3)
    }

    /// Replaces each variable `v` by the linear form `subst(v)` and expands.
    pub fn substitute(&self, subst: impl Fn(usize) -> BitVec) -> CubicPhasePolynomial {
        let mut out = CubicPhasePolynomial::new();
        for m in &self.monomials {
            let forms: Vec<BitVec> = m.vars().map(&subst).collect();
            match forms.len() {
                3 => out.add_product(&forms[0], &forms[1], &forms[2]),
                2 => out.add_product(&forms[0], &forms[1], &forms[1]),
                1 => out.add_product(&forms[0], &forms[0], &forms[0]),
                _ => {}
            }
        }
        out
    }

    /// Drops every monomial that mentions a variable for which `is_zero` holds.
    pub fn restrict_zero(&self, is_zero: impl Fn(usize) -> bool) -> CubicPhasePolynomial {
        CubicPhasePolynomial {
            monomials: self
                .monomials
                .iter()
                .filter(|m| !m.vars().any(&is_zero))
                .copied()
                .collect(),
        }
    }

    /// Evaluates at a point given as a bit vector over the variables.
    pub fn evaluate(&self, point: &BitVec) -> bool {
        self.monomials
            .iter()
            .fold(false, |acc, m| acc ^ m.vars().all(|v| point.get(v)))
    }
}

impl fmt::Debug for CubicPhasePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.monomials.iter()).finish()
    }
}

/// Each wire's current value as a linear combination of initial wire values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearWireState {
    rows: Vec<BitVec>,
}

impl LinearWireState {
    pub fn identity(wires: usize) -> Self {
        LinearWireState {
            rows: (0..wires).map(|i| BitVec::unit(wires, i)).collect(),
        }
    }

    pub fn row(&self, wire: usize) -> &BitVec {
        &self.rows[wire]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// `CNOT(control, target)`: row `target` absorbs row `control`.
    pub fn cnot(&mut self, control: usize, target: usize) {
        let c = self.rows[control].clone();
        self.rows[target].xor_assign(&c);
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.count_ones() == 1 && r.get(i))
    }

    pub fn is_invertible(&self) -> bool {
        rank_of(self.rows.clone()) == self.rows.len()
    }
}

/// Phase polynomial and final wire state of a {CNOT, CCZ} circuit, both in
/// terms of the initial wire values.
pub fn extract_phase(
    circuit: &Circuit,
) -> Result<(CubicPhasePolynomial, LinearWireState), PhaseError> {
    extract_phase_gates(circuit.gates(), circuit.num_wires())
}

pub(crate) fn extract_phase_gates(
    gates: &[Gate],
    wires: usize,
) -> Result<(CubicPhasePolynomial, LinearWireState), PhaseError> {
    let mut state = LinearWireState::identity(wires);
    let mut poly = CubicPhasePolynomial::new();
    for (idx, g) in gates.iter().enumerate() {
        match *g {
            Gate::Cnot { control, target } => state.cnot(control, target),
            Gate::Ccz([p, q, r]) => {
                let rows = vec![
                    state.row(p).clone(),
                    state.row(q).clone(),
                    state.row(r).clone(),
                ];
                if rank_of(rows.clone()) < 3 {
                    return Err(PhaseError::DegenerateCcz { gate: idx });
                }
                poly.add_product(&rows[0], &rows[1], &rows[2]);
            }
            other => {
                return Err(PhaseError::UnsupportedGate {
                    gate: idx,
                    kind: other.kind(),
                })
            }
        }
    }
    Ok((poly, state))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;

    #[test]
    fn monomial_reduction() {
        assert_eq!(Monomial::new(3, 1, 2), Monomial::new(1, 2, 3));
        assert_eq!(Monomial::new(1, 1, 2).degree(), 2);
        assert_eq!(Monomial::new(2, 1, 2), Monomial::new(1, 2, 2));
        assert_eq!(Monomial::new(4, 4, 4).degree(), 1);
    }

    #[test]
    fn toggling_cancels() {
        let mut p = CubicPhasePolynomial::new();
        p.toggle_triple(0, 1, 2);
        p.toggle_triple(2, 1, 0);
        assert!(p.is_empty());
    }

    #[test]
    fn cnot_then_ccz_factors() {
        let mut c = Circuit::with_wires(4);
        c.extend([Gate::cnot(0, 1), Gate::ccz(1, 2, 3)]).unwrap();
        let (poly, state) = extract_phase(&c).unwrap();
        let mut expect = CubicPhasePolynomial::new();
        expect.toggle_triple(0, 2, 3);
        expect.toggle_triple(1, 2, 3);
        assert_eq!(poly, expect);
        assert_eq!(state.row(1).ones().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn empty_and_self_inverse() {
        let c = Circuit::with_wires(5);
        let (poly, state) = extract_phase(&c).unwrap();
        assert!(poly.is_empty() && state.is_identity());

        let mut c = Circuit::with_wires(5);
        c.extend([
            Gate::cnot(0, 1),
            Gate::ccz(1, 2, 3),
            Gate::cnot(3, 4),
            Gate::ccz(0, 2, 4),
            Gate::cnot(2, 0),
        ])
        .unwrap();
        let both = c.compose(&c.inverse()).unwrap();
        let (poly, state) = extract_phase(&both).unwrap();
        assert!(poly.is_empty(), "{poly:?}");
        assert!(state.is_identity());
    }

    #[test]
    fn rejects_foreign_gates() {
        let mut c = Circuit::with_wires(3);
        c.append(Gate::H(0)).unwrap();
        assert!(matches!(
            extract_phase(&c),
            Err(PhaseError::UnsupportedGate { gate: 0, .. })
        ));
    }
}
