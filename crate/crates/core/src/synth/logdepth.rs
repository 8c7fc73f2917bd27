//! Logarithmic-depth recursion: every level builds private copies of the
//! operands the first two calls need, so all three calls run side by side.
//! `c'` is computed onto ancillas by a copy of `c` followed by the transpose
//! of the in-place reduction fragment, which is shallow for trinomials and
//! equally spaced moduli.

use super::linear::Alloc;
use super::{pad_odd, reduction_cnot, LadderStyle, SynthError};
use crate::circuit::{Circuit, Gate};
use crate::gf2::BinaryPolynomial;

type Slots = Vec<Option<usize>>;

struct Engine {
    gates: Vec<Gate>,
    alloc: Alloc,
}

impl Engine {
    /// Fresh wire holding the sum of the given slots, or `None` if all are zero.
    fn fresh_sum(&mut self, srcs: &[Option<usize>], log: &mut Vec<Gate>) -> Option<usize> {
        if srcs.iter().all(Option::is_none) {
            return None;
        }
        let z = self.alloc.take();
        for &s in srcs.iter().flatten() {
            log.push(Gate::cnot(s, z));
        }
        Some(z)
    }

    /// `x ^= y` in place; a zero target gets a fresh copy instead.
    fn add_into(
        &mut self,
        x: Option<usize>,
        y: Option<usize>,
        log: &mut Vec<Gate>,
    ) -> Option<usize> {
        match (x, y) {
            (Some(x), Some(y)) => {
                log.push(Gate::cnot(y, x));
                Some(x)
            }
            (None, y) => self.fresh_sum(&[y], log),
            (x, None) => x,
        }
    }

    fn node(
        &mut self,
        a: &[Option<usize>],
        b: &[Option<usize>],
        c: &[Option<usize>],
        cp: &[Option<usize>],
    ) {
        let k = a.len();
        if a.iter().all(Option::is_none)
            || b.iter().all(Option::is_none)
            || c.iter().chain(cp).all(Option::is_none)
        {
            return;
        }
        if k == 1 {
            if let (Some(x), Some(y), Some(z)) = (a[0], b[0], c[0]) {
                self.gates.push(Gate::ccz(x, y, z));
            }
            return;
        }
        let mut cp = cp.to_vec();
        cp[k - 1] = None;
        if k % 2 == 1 {
            let (a, b, c, cp) = pad_odd(a, b, c, &cp).expect("odd size");
            return self.node(&a, &b, &c, &cp);
        }
        let h = k / 2;
        let (al, ar) = a.split_at(h);
        let (bl, br) = b.split_at(h);
        let (cl, cr) = c.split_at(h);
        let (cpl, cpr) = cp.split_at(h);

        let mut log = Vec::new();
        let fresh = |e: &mut Engine, srcs: &[&[Option<usize>]], log: &mut Vec<Gate>| -> Slots {
            (0..h)
                .map(|i| e.fresh_sum(&srcs.iter().map(|s| s[i]).collect::<Vec<_>>(), log))
                .collect()
        };
        // copies are read before the in-place updates below
        let aa = fresh(self, &[al, ar], &mut log);
        let ab = fresh(self, &[bl, br], &mut log);
        let ac = fresh(self, &[cr], &mut log);
        let acp = fresh(self, &[cpl], &mut log);
        let bc = fresh(self, &[cpl, cr], &mut log);
        let bcp = fresh(self, &[cpl, cpr], &mut log);
        let cc: Slots = (0..h)
            .map(|i| self.add_into(cl[i], cr[i], &mut log))
            .collect();
        let ccp: Slots = (0..h)
            .map(|i| self.add_into(cpl[i], cr[i], &mut log))
            .collect();
        self.gates.extend_from_slice(&log);

        self.node(&aa, &ab, &ac, &acp);
        self.node(ar, br, &bc, &bcp);
        self.node(al, bl, &cc, &ccp);
        self.gates.extend(log.iter().rev());
    }
}

pub(super) fn synth_log(
    p: &BinaryPolynomial,
    n: usize,
    style: LadderStyle,
) -> Result<Circuit, SynthError> {
    let mut e = Engine {
        gates: Vec::new(),
        alloc: Alloc::starting_at(3 * n),
    };
    let cw: Vec<usize> = (2 * n..3 * n).collect();
    let anc: Vec<usize> = (0..n).map(|_| e.alloc.take()).collect();
    // F has Q as its first n-1 columns, so Fᵀ puts c' on anc[..n-1]
    let reduce = reduction_cnot(p, &anc, style)?;
    let mut prep: Vec<Gate> = cw
        .iter()
        .zip(&anc)
        .map(|(&c, &z)| Gate::cnot(c, z))
        .collect();
    prep.extend(reduce.iter().rev().map(|g| match *g {
        Gate::Cnot { control, target } => Gate::cnot(target, control),
        g => g,
    }));
    e.gates.extend_from_slice(&prep);
    let a: Slots = (0..n).map(Some).collect();
    let b: Slots = (n..2 * n).map(Some).collect();
    let c: Slots = cw.iter().copied().map(Some).collect();
    let cp: Slots = anc[..n - 1]
        .iter()
        .copied()
        .map(Some)
        .chain([None])
        .collect();
    e.node(&a, &b, &c, &cp);
    e.gates.extend(prep.iter().rev());
    let ancillas = e.alloc.high_water() - 3 * n;
    Ok(super::h_sandwich(n, ancillas, e.gates))
}

pub(super) fn core_on_wires(
    wires: usize,
    a: &[Option<usize>],
    b: &[Option<usize>],
    c: &[Option<usize>],
    cp: &[Option<usize>],
) -> (Vec<Gate>, usize) {
    let mut e = Engine {
        gates: Vec::new(),
        alloc: Alloc::starting_at(wires),
    };
    e.node(a, b, c, cp);
    (e.gates, e.alloc.high_water())
}
