//! Zero-ancilla recursion. The three calls run one after another; every
//! operand combination is formed in place and undone afterwards.
//!
//! On the `c` side a slot is a linear form over the initial `c`-side values,
//! optionally held by a wire. Combinations of held slots become single
//! CNOTs. When that is impossible (e.g. at the top level, where `c' = Qᵀc`
//! is held nowhere) the child's forms are materialized by a generic in-place
//! basis change if they are independent, or passed down symbolically.

use super::pad_odd;
use crate::bits::BitVec;
use crate::circuit::Gate;
use crate::gf2::{rank_of, Gf2Matrix};

#[derive(Clone, Debug)]
struct Held {
    form: BitVec,
    /// Local c-side wire currently holding `form`.
    wire: Option<usize>,
}

/// `None` is the constant zero.
type Slot = Option<Held>;

struct Engine {
    gates: Vec<Gate>,
    /// Global index of each local c-side wire.
    cw: Vec<usize>,
    /// Current form on each local wire.
    rows: Vec<BitVec>,
    /// Column `w` of the inverse of `rows`: coordinates of a form in the
    /// current wire basis are `f · inv_cols[w]`.
    inv_cols: Vec<BitVec>,
}

impl Engine {
    fn new(cw: Vec<usize>) -> Engine {
        let m = cw.len();
        let id: Vec<BitVec> = (0..m).map(|i| BitVec::unit(m, i)).collect();
        Engine {
            gates: Vec::new(),
            cw,
            rows: id.clone(),
            inv_cols: id,
        }
    }

    fn cnot(&mut self, ctl: usize, tgt: usize) {
        let r = self.rows[ctl].clone();
        self.rows[tgt].xor_assign(&r);
        let c = self.inv_cols[tgt].clone();
        self.inv_cols[ctl].xor_assign(&c);
        self.gates.push(Gate::cnot(self.cw[ctl], self.cw[tgt]));
    }

    fn undo(&mut self, log: &[(usize, usize)]) {
        for &(c, t) in log.iter().rev() {
            self.cnot(c, t);
        }
    }

    /// Puts each (independent, nonzero) form on its own wire.
    fn materialize(&mut self, forms: &[&BitVec], log: &mut Vec<(usize, usize)>) -> Vec<usize> {
        let m = self.cw.len();
        let mut locked = vec![false; m];
        let mut pivots = Vec::with_capacity(forms.len());
        for f in forms {
            let coords: Vec<usize> = (0..m).filter(|&w| f.dot(&self.inv_cols[w])).collect();
            let p = *coords
                .iter()
                .find(|&&w| !locked[w])
                .expect("forms are independent");
            for &w in coords.iter().filter(|&&w| w != p) {
                self.cnot(w, p);
                log.push((w, p));
            }
            locked[p] = true;
            pivots.push(p);
        }
        pivots
    }

    /// Builds a child's c-side slots from `(target, control)` pairs whose
    /// sum each child slot holds. Returns the slots and the CNOT log to undo.
    fn enter(&mut self, pairs: &[(&Slot, &Slot)]) -> (Vec<Slot>, Vec<(usize, usize)>) {
        let forms: Vec<Option<BitVec>> = pairs
            .iter()
            .map(|(x, y)| match (x, y) {
                (None, None) => None,
                (Some(h), None) | (None, Some(h)) => Some(h.form.clone()),
                (Some(hx), Some(hy)) => Some(hx.form.xor(&hy.form)).filter(|f| !f.is_zero()),
            })
            .collect();

        if let Some((wires, cnots)) = plan_in_place(pairs) {
            for &(c, t) in &cnots {
                self.cnot(c, t);
            }
            let slots = forms
                .into_iter()
                .zip(wires)
                .map(|(f, w)| f.map(|form| Held { form, wire: w }))
                .collect();
            return (slots, cnots);
        }

        let nonzero: Vec<&BitVec> = forms.iter().flatten().collect();
        let mut log = Vec::new();
        if rank_of(nonzero.iter().map(|f| (*f).clone()).collect()) == nonzero.len() {
            let mut pivots = self.materialize(&nonzero, &mut log).into_iter();
            let slots = forms
                .into_iter()
                .map(|f| {
                    f.map(|form| Held {
                        form,
                        wire: pivots.next(),
                    })
                })
                .collect();
            (slots, log)
        } else {
            (
                forms
                    .into_iter()
                    .map(|f| f.map(|form| Held { form, wire: None }))
                    .collect(),
                log,
            )
        }
    }

    fn leaf(&mut self, a: usize, b: usize, c: &Held) {
        match c.wire {
            Some(w) => self.gates.push(Gate::ccz(a, b, self.cw[w])),
            None => {
                let mut log = Vec::new();
                let p = self.materialize(&[&c.form], &mut log)[0];
                self.gates.push(Gate::ccz(a, b, self.cw[p]));
                self.undo(&log);
            }
        }
    }

    fn node(&mut self, a: &[Option<usize>], b: &[Option<usize>], c: &[Slot], cp: &[Slot]) {
        let k = a.len();
        if a.iter().all(Option::is_none) || b.iter().all(Option::is_none) {
            return;
        }
        if c.iter().chain(cp).all(Option::is_none) {
            return;
        }
        if k == 1 {
            if let (Some(a0), Some(b0), Some(c0)) = (a[0], b[0], &c[0]) {
                self.leaf(a0, b0, c0);
            }
            return;
        }
        // c'_{k-1} is never read at size k
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

        // A: (aL^aR, bL^bR, cR, c'L)
        let mut ab_log = Vec::new();
        let mut sum = |l: &[Option<usize>],
                       r: &[Option<usize>],
                       gates: &mut Vec<Gate>|
         -> Vec<Option<usize>> {
            l.iter()
                .zip(r)
                .map(|(&x, &y)| match (x, y) {
                    (Some(x), Some(y)) => {
                        let g = Gate::cnot(y, x);
                        gates.push(g);
                        ab_log.push(g);
                        Some(x)
                    }
                    _ => x.or(y),
                })
                .collect()
        };
        let aa = sum(al, ar, &mut self.gates);
        let bb = sum(bl, br, &mut self.gates);
        let pairs: Vec<(&Slot, &Slot)> = cr.iter().chain(cpl).map(|s| (s, &None)).collect();
        self.child(&aa, &bb, &pairs, h);
        self.gates.extend(ab_log.iter().rev());

        // B: (aR, bR, c'L^cR, c'L^c'R)
        let pairs: Vec<(&Slot, &Slot)> = cr.iter().zip(cpl).chain(cpr.iter().zip(cpl)).collect();
        self.child(ar, br, &pairs, h);

        // C: (aL, bL, cL^cR, c'L^cR)
        let pairs: Vec<(&Slot, &Slot)> = cl.iter().zip(cr).chain(cpl.iter().zip(cr)).collect();
        self.child(al, bl, &pairs, h);
    }

    fn child(
        &mut self,
        a: &[Option<usize>],
        b: &[Option<usize>],
        pairs: &[(&Slot, &Slot)],
        h: usize,
    ) {
        if a.iter().all(Option::is_none) || b.iter().all(Option::is_none) {
            return;
        }
        let (slots, log) = self.enter(pairs);
        self.node(a, b, &slots[..h], &slots[h..]);
        self.undo(&log);
    }
}

/// Wires and CNOTs realizing each pair with in-place XORs of held slots, or
/// `None` if some needed value is not held or two child slots would share
/// a wire.
#[allow(clippy::type_complexity)]
fn plan_in_place(pairs: &[(&Slot, &Slot)]) -> Option<(Vec<Option<usize>>, Vec<(usize, usize)>)> {
    let mut wires = Vec::with_capacity(pairs.len());
    let mut cnots = Vec::new();
    for (x, y) in pairs {
        let w = match (x, y) {
            (None, None) => None,
            (Some(h), None) | (None, Some(h)) => Some(h.wire?),
            (Some(hx), Some(hy)) => {
                let (tx, ty) = (hx.wire?, hy.wire?);
                cnots.push((ty, tx));
                Some(tx)
            }
        };
        wires.push(w);
    }
    let mut seen: Vec<usize> = wires.iter().flatten().copied().collect();
    seen.sort_unstable();
    if seen.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((wires, cnots))
}

/// Core for the full multiplier on the standard layout: `c` held on the `c`
/// register, `c' = Qᵀc` symbolic.
pub(super) fn core(n: usize, q: &Gf2Matrix) -> Vec<Gate> {
    let a: Vec<Option<usize>> = (0..n).map(Some).collect();
    let b: Vec<Option<usize>> = (n..2 * n).map(Some).collect();
    let c: Vec<Slot> = (0..n)
        .map(|i| {
            Some(Held {
                form: BitVec::unit(n, i),
                wire: Some(i),
            })
        })
        .collect();
    let cp: Vec<Slot> = (0..n)
        .map(|i| {
            if i + 1 == n {
                return None;
            }
            let f = q.column(i);
            (!f.is_zero()).then_some(Held {
                form: f,
                wire: None,
            })
        })
        .collect();
    let mut e = Engine::new((2 * n..3 * n).collect());
    e.node(&a, &b, &c, &cp);
    e.gates
}

pub(super) fn synth_compact(n: usize, q: &Gf2Matrix) -> crate::circuit::Circuit {
    super::h_sandwich(n, 0, core(n, q))
}

/// Fragment on explicit wires; the c-side variables are the slot wires.
pub(super) fn core_on_wires(
    a: &[Option<usize>],
    b: &[Option<usize>],
    c: &[Option<usize>],
    cp: &[Option<usize>],
) -> Vec<Gate> {
    let cw: Vec<usize> = c.iter().chain(cp).flatten().copied().collect();
    let m = cw.len();
    let mut local = cw.iter().enumerate();
    let mut slot = |s: &Option<usize>| {
        s.map(|_| {
            let (i, _) = local.next().unwrap();
            Held {
                form: BitVec::unit(m, i),
                wire: Some(i),
            }
        })
    };
    let cs: Vec<Slot> = c.iter().map(&mut slot).collect();
    let cps: Vec<Slot> = cp.iter().map(&mut slot).collect();
    let mut e = Engine::new(cw);
    e.node(a, b, &cs, &cps);
    e.gates
}
