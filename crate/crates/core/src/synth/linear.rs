//! Linear-depth recursion: `c'` lives on ancillas, the first two calls run in
//! parallel after a depth-2 preparation, the third runs after a second
//! depth-2 transform. Ancillas are recycled once both parallel calls have
//! finished, keeping the pool at `O(n log n)`.

use std::collections::BTreeSet;

use super::{cprime_ancilla_circuit, pad_odd};
use crate::circuit::{Circuit, Gate};
use crate::gf2::Gf2Matrix;

type Slots = Vec<Option<usize>>;

#[derive(Default)]
pub(super) struct Alloc {
    next: usize,
    free: BTreeSet<usize>,
}

impl Alloc {
    pub(super) fn starting_at(next: usize) -> Alloc {
        Alloc {
            next,
            free: BTreeSet::new(),
        }
    }

    pub(super) fn take(&mut self) -> usize {
        self.free.pop_first().unwrap_or_else(|| {
            self.next += 1;
            self.next - 1
        })
    }

    pub(super) fn high_water(&self) -> usize {
        self.next
    }
}

#[derive(Default)]
struct Engine {
    gates: Vec<Gate>,
    alloc: Alloc,
}

/// Gates of one preparation step plus the wires it allocated.
#[derive(Default)]
struct Prep {
    gates: Vec<Gate>,
    fresh: Vec<usize>,
}

impl Prep {
    fn cnot(&mut self, c: usize, t: usize) {
        self.gates.push(Gate::cnot(c, t));
    }

    /// Slot holding `x ^ y`, written onto `x` in place; a missing target is
    /// replaced by a fresh wire so `y` stays private to its own call.
    fn xor_into(&mut self, x: Option<usize>, y: Option<usize>, alloc: &mut Alloc) -> Option<usize> {
        match (x, y) {
            (Some(x), Some(y)) => {
                self.cnot(y, x);
                Some(x)
            }
            (None, Some(y)) => {
                let z = alloc.take();
                self.fresh.push(z);
                self.cnot(y, z);
                Some(z)
            }
            (x, None) => x,
        }
    }
}

/// Operands of two calls that may run side by side.
struct ParallelPrep {
    prep: Prep,
    a_call: [Slots; 4],
    b_call: [Slots; 4],
}

/// `A = (aL^aR, bL^bR, cR, c'L)` in place on the left halves and
/// `B = (aR, bR, c'L^cR, c'L^c'R)` with `c'L^cR` on fresh wires.
fn prep_parallel_pair(
    a: &[Option<usize>],
    b: &[Option<usize>],
    c: &[Option<usize>],
    cp: &[Option<usize>],
    alloc: &mut Alloc,
) -> ParallelPrep {
    let h = a.len() / 2;
    let mut p = Prep::default();
    let (al, ar) = a.split_at(h);
    let (bl, br) = b.split_at(h);
    let (_, cr) = c.split_at(h);
    let (cpl, cpr) = cp.split_at(h);
    // layer 1
    let aa: Slots = (0..h).map(|i| p.xor_into(al[i], ar[i], alloc)).collect();
    let bb: Slots = (0..h).map(|i| p.xor_into(bl[i], br[i], alloc)).collect();
    let cpb: Slots = (0..h).map(|i| p.xor_into(cpr[i], cpl[i], alloc)).collect();
    let cb: Slots = (0..h)
        .map(|i| {
            if cr[i].is_none() && cpl[i].is_none() {
                return None;
            }
            let z = alloc.take();
            p.fresh.push(z);
            if let Some(w) = cr[i] {
                p.cnot(w, z);
            }
            Some(z)
        })
        .collect();
    // layer 2
    for i in 0..h {
        if let (Some(z), Some(w)) = (cb[i], cpl[i]) {
            p.cnot(w, z);
        }
    }
    ParallelPrep {
        prep: p,
        a_call: [aa, bb, cr.to_vec(), cpl.to_vec()],
        b_call: [ar.to_vec(), br.to_vec(), cb, cpb],
    }
}

/// `C = (aL, bL, cL^cR, c'L^cR)`, both in place.
fn prep_third(
    c: &[Option<usize>],
    cp: &[Option<usize>],
    alloc: &mut Alloc,
) -> (Prep, Slots, Slots) {
    let h = c.len() / 2;
    let mut p = Prep::default();
    let (cl, cr) = c.split_at(h);
    let cc: Slots = (0..h).map(|i| p.xor_into(cl[i], cr[i], alloc)).collect();
    let cpc: Slots = (0..h).map(|i| p.xor_into(cp[i], cr[i], alloc)).collect();
    (p, cc, cpc)
}

impl Engine {
    fn emit(&mut self, gates: &[Gate]) {
        self.gates.extend_from_slice(gates);
    }

    fn undo(&mut self, gates: &[Gate]) {
        self.gates.extend(gates.iter().rev());
    }

    /// Returns every wire the subtree allocated; none of them is on the
    /// free list when this returns.
    fn node(
        &mut self,
        a: &[Option<usize>],
        b: &[Option<usize>],
        c: &[Option<usize>],
        cp: &[Option<usize>],
    ) -> Vec<usize> {
        let k = a.len();
        if a.iter().all(Option::is_none)
            || b.iter().all(Option::is_none)
            || c.iter().chain(cp).all(Option::is_none)
        {
            return Vec::new();
        }
        if k == 1 {
            if let (Some(x), Some(y), Some(z)) = (a[0], b[0], c[0]) {
                self.gates.push(Gate::ccz(x, y, z));
            }
            return Vec::new();
        }
        let mut cp = cp.to_vec();
        cp[k - 1] = None;
        if k % 2 == 1 {
            let (a, b, c, cp) = pad_odd(a, b, c, &cp).expect("odd size");
            return self.node(&a, &b, &c, &cp);
        }
        let h = k / 2;

        let prep = prep_parallel_pair(a, b, c, &cp, &mut self.alloc);
        self.emit(&prep.prep.gates);
        let [x0, x1, x2, x3] = &prep.a_call;
        let mut used = self.node(x0, x1, x2, x3);
        let [y0, y1, y2, y3] = &prep.b_call;
        used.extend(self.node(y0, y1, y2, y3));
        self.undo(&prep.prep.gates);
        used.extend(&prep.prep.fresh);
        self.alloc.free.extend(used.iter().copied());

        let (p31, cc, cpc) = prep_third(c, &cp, &mut self.alloc);
        self.emit(&p31.gates);
        used.extend(self.node(&a[..h], &b[..h], &cc, &cpc));
        self.undo(&p31.gates);
        used.extend(&p31.fresh);
        for w in &used {
            self.alloc.free.remove(w);
        }
        used
    }
}

pub(super) fn synth_linear(n: usize, q: &Gf2Matrix) -> Circuit {
    let mut e = Engine {
        gates: Vec::new(),
        alloc: Alloc::starting_at(3 * n),
    };
    let cwires: Vec<usize> = (2 * n..3 * n).collect();
    let cpw: Vec<usize> = (0..n - 1).map(|_| e.alloc.take()).collect();
    let copy = cprime_ancilla_circuit(q, &cwires, &cpw);
    e.emit(&copy);
    let a: Slots = (0..n).map(Some).collect();
    let b: Slots = (n..2 * n).map(Some).collect();
    let c: Slots = cwires.iter().copied().map(Some).collect();
    let cp: Slots = cpw.iter().copied().map(Some).chain([None]).collect();
    e.node(&a, &b, &c, &cp);
    e.undo(&copy);
    let ancillas = e.alloc.high_water() - 3 * n;
    super::h_sandwich(n, ancillas, e.gates)
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

/// The two preparation fragments of one even-size level on the slot layout
/// `a = 0..k, b = k..2k, c = 2k..3k, c' = 3k..4k`, ancillas from `4k`.
#[derive(Clone, Debug)]
pub struct PreparedFragments {
    /// Forms the operands of the two parallel calls.
    pub parallel: Circuit,
    /// Forms the operands of the third call (after `parallel` is undone).
    pub third: Circuit,
    /// Wires read or written by the first and second parallel calls.
    pub first_call_wires: Vec<usize>,
    pub second_call_wires: Vec<usize>,
}

pub fn prepare_parallel(k: usize) -> Result<PreparedFragments, super::SynthError> {
    if k < 2 || k % 2 == 1 {
        return Err(super::SynthError::InvalidInput(format!(
            "preparation needs an even size >= 2, got {k}"
        )));
    }
    let slots = |r: usize| -> Slots { (0..k).map(|i| Some(r * k + i)).collect() };
    let (a, b, c, cp) = (slots(0), slots(1), slots(2), slots(3));
    let mut alloc = Alloc::starting_at(4 * k);
    let p28 = prep_parallel_pair(&a, &b, &c, &cp, &mut alloc);
    let (p31, _, _) = prep_third(&c, &cp, &mut Alloc::starting_at(4 * k));
    let total = alloc.high_water();
    let wires_of = |s: &[Slots; 4]| s.iter().flatten().flatten().copied().collect::<Vec<_>>();
    let mk = |g: &[Gate]| {
        let mut circ = Circuit::with_wires(total);
        circ.extend(g.iter().copied()).expect("in range");
        circ
    };
    Ok(PreparedFragments {
        parallel: mk(&p28.prep.gates),
        third: mk(&p31.gates),
        first_call_wires: wires_of(&p28.a_call),
        second_call_wires: wires_of(&p28.b_call),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preparation_fragments() {
        let f = prepare_parallel(4).unwrap();
        assert_eq!(f.parallel.len(), 10);
        assert_eq!(f.parallel.report().depth, 2);
        assert_eq!(f.third.report().depth, 2);
        assert!(f
            .first_call_wires
            .iter()
            .all(|w| !f.second_call_wires.contains(w)));
        for k in (2..=64).step_by(2) {
            let f = prepare_parallel(k).unwrap();
            assert_eq!((f.parallel.report().depth, f.third.report().depth), (2, 2));
            assert_eq!(f.parallel.ancilla_count(), 0);
            assert_eq!(f.parallel.num_wires(), 4 * k + k / 2);
            let both = f.parallel.compose(&f.parallel.inverse()).unwrap();
            let (_, state) = crate::phase::extract_phase(&both).unwrap();
            assert!(state.is_identity());
        }
        assert!(prepare_parallel(3).is_err());
    }
}
