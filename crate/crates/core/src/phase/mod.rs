//! Cubic phase polynomials: symbolic semantics of {CNOT, CCZ} circuits, the
//! multiplication target polynomial `g ⊕ h`, and checks of the recursive
//! identities the synthesizer is built on.

mod identities;
mod poly;

pub use identities::{
    check_half_split_identities, check_padding_identity, check_split_identity, g_half_split,
    h_half_split, padding_identity, split_identity, CheckMode, Identity, Term, TermKind,
};
pub use poly::{extract_phase, CubicPhasePolynomial, LinearWireState, Monomial};

use thiserror::Error;

use crate::bits::BitVec;
use crate::circuit::GateKind;
use crate::gf2::Gf2Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PhaseError {
    #[error("CCZ at gate {gate} acts on linearly dependent wire values")]
    DegenerateCcz { gate: usize },
    #[error("gate {gate} of kind {kind:?} is not CNOT or CCZ")]
    UnsupportedGate { gate: usize, kind: GateKind },
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
}

/// Variable numbering for size `n`: `a_i = i`, `b_i = n+i`, `c_i = 2n+i`,
/// `c'_i = 3n+i`. The first three blocks coincide with the wire numbering of
/// the standard multiplier layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarLayout {
    pub n: usize,
}

impl VarLayout {
    pub fn new(n: usize) -> Self {
        VarLayout { n }
    }
    pub fn a(&self, i: usize) -> usize {
        i
    }
    pub fn b(&self, i: usize) -> usize {
        self.n + i
    }
    pub fn c(&self, i: usize) -> usize {
        2 * self.n + i
    }
    pub fn cp(&self, i: usize) -> usize {
        3 * self.n + i
    }
    pub fn total(&self) -> usize {
        4 * self.n
    }
}

/// Index triples `(a, b, c)` of the monomials `a_j b_{i-j} c_i` in `g` of size `k`.
pub fn g_triples(k: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..k).flat_map(|i| (0..=i).map(move |j| (j, i - j, i)))
}

/// Index triples `(a, b, c')` of the monomials `a_j b_{k+i-j} c'_i` in `h` of size `k`.
pub fn h_triples(k: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..k.saturating_sub(1)).flat_map(move |i| (i + 1..k).map(move |j| (j, k + i - j, i)))
}

/// `g ⊕ h` of size `n` over the variables of [`VarLayout`]; `n²` monomials.
pub fn target_polynomial(n: usize) -> Result<CubicPhasePolynomial, PhaseError> {
    if n < 1 {
        return Err(PhaseError::InvalidSize(
            "target polynomial needs n >= 1".into(),
        ));
    }
    let v = VarLayout::new(n);
    let mut p = CubicPhasePolynomial::new();
    for (j, l, i) in g_triples(n) {
        p.toggle_triple(v.a(j), v.b(l), v.c(i));
    }
    for (j, l, i) in h_triples(n) {
        p.toggle_triple(v.a(j), v.b(l), v.cp(i));
    }
    Ok(p)
}

/// Replaces each `c'_i` by `Σ_j Q[j][i] c_j`, i.e. `c' = Qᵀ c`.
pub fn substitute_cprime(
    poly: &CubicPhasePolynomial,
    n: usize,
    q: &Gf2Matrix,
) -> Result<CubicPhasePolynomial, PhaseError> {
    if n == 0 || q.rows() != n || q.cols() + 1 != n {
        return Err(PhaseError::Arity(format!(
            "size {n} needs an {n}x{} matrix, got {}x{}",
            n.saturating_sub(1),
            q.rows(),
            q.cols()
        )));
    }
    let v = VarLayout::new(n);
    let width = v.total();
    let cprime_forms: Vec<BitVec> = (0..n - 1)
        .map(|i| {
            let mut f = BitVec::zeros(width);
            for j in (0..n).filter(|&j| q.get(j, i)) {
                f.set(v.c(j), true);
            }
            f
        })
        .collect();
    if let Some(m) = poly
        .monomials()
        .find(|m| m.vars().any(|x| x >= v.cp(n - 1)))
    {
        return Err(PhaseError::Arity(format!(
            "monomial {m:?} uses a variable outside (a, b, c, c'_0..c'_{})",
            n - 1
        )));
    }
    Ok(poly.substitute(|x| {
        if x >= v.cp(0) {
            cprime_forms[x - v.cp(0)].clone()
        } else {
            BitVec::unit(width, x)
        }
    }))
}
