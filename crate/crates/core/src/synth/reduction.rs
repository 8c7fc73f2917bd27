//! CNOT fragments: ladders, in-place reduction circuits for trinomials and
//! equally spaced moduli, and the out-of-place `c' = Qᵀc` copy.

use super::{LadderStyle, SynthError};
use crate::circuit::Gate;
use crate::gf2::Gf2Matrix;

/// `x_i <- x_i ^ x_{i-1}` (original values) along `wires`.
///
/// `Sequential` walks the chain from the far end, depth `m`. `Prefix` is the
/// inverse of an in-place Brent–Kung prefix-parity network: depth
/// `O(log m)`, no ancillas.
pub fn cnot_ladder(wires: &[usize], style: LadderStyle) -> Result<Vec<Gate>, SynthError> {
    if wires.len() < 2 {
        return Err(SynthError::InvalidInput(format!(
            "a ladder needs at least 2 wires, got {}",
            wires.len()
        )));
    }
    Ok(match style {
        LadderStyle::Sequential => (1..wires.len())
            .rev()
            .map(|i| Gate::cnot(wires[i - 1], wires[i]))
            .collect(),
        LadderStyle::Prefix => {
            let mut g = prefix_parity(wires);
            g.reverse();
            g
        }
    })
}

/// In-place `x_i <- x_0 ^ ... ^ x_i`.
fn prefix_parity(wires: &[usize]) -> Vec<Gate> {
    let len = wires.len();
    let mut gates = Vec::new();
    let mut d = 1;
    while d < len {
        let mut j = 2 * d - 1;
        while j < len {
            gates.push(Gate::cnot(wires[j - d], wires[j]));
            j += 2 * d;
        }
        d *= 2;
    }
    d /= 2;
    while d >= 1 {
        let mut j = 2 * d - 1;
        while j + d < len {
            gates.push(Gate::cnot(wires[j], wires[j + d]));
            j += 2 * d;
        }
        d /= 2;
    }
    gates
}

fn inverse(mut gates: Vec<Gate>) -> Vec<Gate> {
    gates.reverse();
    gates
}

/// Ladder, or nothing for chains shorter than two wires.
fn ladder_or_empty(wires: &[usize], style: LadderStyle) -> Vec<Gate> {
    cnot_ladder(wires, style).unwrap_or_default()
}

/// Applies `Q` of `x^n + x^k + 1` in place on `c` (`c[n-1]` must enter as 0).
///
/// Step 1 turns each chain `r, r+(n-k), ...` into suffix parities; step 2
/// adds every chain total `k` positions up through ladders `r, r+k, ...`.
pub fn reduction_cnot_trinomial(
    c: &[usize],
    k: usize,
    style: LadderStyle,
) -> Result<Vec<Gate>, SynthError> {
    let n = c.len();
    if k == 0 || k >= n {
        return Err(SynthError::UnsupportedFamily(format!(
            "x^{n}+x^{k}+1 is not a trinomial with 0 < k < n"
        )));
    }
    let step = n - k;
    let mut gates = Vec::new();
    for r in 0..step {
        let chain: Vec<usize> = (r..=n - 2)
            .step_by(step)
            .map(|i| c[i])
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .collect();
        gates.extend(inverse(ladder_or_empty(&chain, style)));
    }
    for r in 0..k {
        let chain: Vec<usize> = (r..n).step_by(k).map(|i| c[i]).collect();
        gates.extend(ladder_or_empty(&chain, style));
    }
    Ok(gates)
}

/// Applies `Q` of `Σ_{i=0}^{terms} x^{i·spacing}` in place on `c`
/// (degree `terms·spacing`, last wire enters as 0). Each stride class gets a
/// reversed ladder followed by a prefix-parity pass.
pub fn reduction_cnot_equally_spaced(
    c: &[usize],
    terms: usize,
    spacing: usize,
    style: LadderStyle,
) -> Result<Vec<Gate>, SynthError> {
    if terms < 2 || spacing == 0 || terms * spacing != c.len() {
        return Err(SynthError::UnsupportedFamily(format!(
            "{} wires do not match an equally spaced modulus with {terms} steps of {spacing}",
            c.len()
        )));
    }
    let mut gates = Vec::new();
    for j in 0..spacing {
        let class: Vec<usize> = (0..terms).map(|m| c[j + m * spacing]).collect();
        let reversed: Vec<usize> = class.iter().rev().copied().collect();
        gates.extend(ladder_or_empty(&reversed, style));
        gates.extend(inverse(ladder_or_empty(&class, style)));
    }
    Ok(gates)
}

/// `anc_i ^= c_j` for every `Q[j][i] = 1`, grouped by diagonal `(j - i) mod n`
/// so each group is one layer: depth at most `n`, `popcount(Q)` CNOTs.
pub fn cprime_ancilla_circuit(q: &Gf2Matrix, c: &[usize], anc: &[usize]) -> Vec<Gate> {
    let n = q.rows();
    debug_assert!(c.len() == n && anc.len() >= q.cols());
    let mut gates = Vec::with_capacity(q.count_ones());
    for t in 0..n {
        for i in 0..q.cols() {
            let j = (i + t) % n;
            if q.get(j, i) {
                gates.push(Gate::cnot(c[j], anc[i]));
            }
        }
    }
    gates
}

/// CNOTs realizing `x -> A x` for an invertible `A` (Gaussian elimination
/// without row swaps; the recorded row operations are replayed backwards).
pub fn linear_map_cnots(a: &Gf2Matrix, wires: &[usize]) -> Result<Vec<Gate>, SynthError> {
    let n = a.rows();
    if a.cols() != n || wires.len() != n {
        return Err(SynthError::InvalidInput(
            "linear map must be square and match the wire count".into(),
        ));
    }
    let mut m = a.clone();
    let mut ops = Vec::new();
    for col in 0..n {
        if !m.get(col, col) {
            let r = (col + 1..n)
                .find(|&r| m.get(r, col))
                .ok_or_else(|| SynthError::InvalidInput("linear map is singular".into()))?;
            m.add_row(r, col);
            ops.push((r, col));
        }
        for r in 0..n {
            if r != col && m.get(r, col) {
                m.add_row(col, r);
                ops.push((col, r));
            }
        }
    }
    Ok(ops
        .into_iter()
        .rev()
        .map(|(src, dst)| Gate::cnot(wires[src], wires[dst]))
        .collect())
}
