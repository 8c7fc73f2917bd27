//! Quadratic schoolbook multiplier, in place and ancilla-free: the high half
//! `e` of the product is accumulated in the basis `M⁻¹c`, where `M` is
//! multiplication by `x^n` (first `n-1` columns are `Q`), then `M` maps it
//! back and the low half `d` is added directly.

use super::{check_modulus, linear_map_cnots, SynthError};
use crate::circuit::{Circuit, Gate, RegisterLayout};
use crate::gf2::{shift_matrix, BinaryPolynomial};

/// `n²` Toffolis, no ancillas, {CNOT, Toffoli} form.
pub fn synth_baseline(p: &BinaryPolynomial) -> Result<Circuit, SynthError> {
    let n = check_modulus(p, false)?;
    build(p, n)
}

pub(super) fn build(p: &BinaryPolynomial, n: usize) -> Result<Circuit, SynthError> {
    let m = shift_matrix(p)?;
    let m_inv = m.inverse().ok_or_else(|| {
        SynthError::InvalidInput(format!(
            "x is not invertible modulo {}; the baseline needs P(0) = 1",
            p.to_pretty()
        ))
    })?;
    let layout = RegisterLayout::multiplier(n, 0);
    let (a, b, c) = (layout.a(), layout.b(), layout.c());
    let cw: Vec<usize> = c.clone().collect();
    let mut gates = linear_map_cnots(&m_inv, &cw)?;
    for i in 0..n - 1 {
        for j in i + 1..n {
            gates.push(Gate::toffoli(a.start + j, b.start + n + i - j, c.start + i));
        }
    }
    gates.extend(linear_map_cnots(&m, &cw)?);
    for i in 0..n {
        for j in 0..=i {
            gates.push(Gate::toffoli(a.start + j, b.start + i - j, c.start + i));
        }
    }
    Ok(Circuit::from_parts_unchecked(layout, gates))
}
