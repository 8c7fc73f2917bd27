//! The recursive `g ⊕ h` identities, expressed as sums of `g`/`h` terms whose
//! arguments are vectors of linear forms, checkable by evaluation or by
//! symbolic expansion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{g_triples, h_triples, CubicPhasePolynomial, PhaseError, VarLayout};
use crate::bits::BitVec;

const SYMBOLIC_MAX_N: usize = 16;
const EXHAUSTIVE_MAX_VARS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Every assignment of the variables (at most 20 of them).
    Exhaustive,
    /// Uniform random assignments; trial `t` draws from a generator seeded
    /// with `seed + t`, so the outcome does not depend on scheduling.
    Random { trials: usize, seed: u64 },
    /// Expand both sides and compare monomial sets (n ≤ 16).
    Symbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermKind {
    G,
    H,
}

/// `g(a, b, c)` or `h(a, b, c)` of size `a.len()`, each argument entry a
/// linear form over the identity's variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub kind: TermKind,
    pub a: Vec<BitVec>,
    pub b: Vec<BitVec>,
    pub c: Vec<BitVec>,
}

impl Term {
    fn new(kind: TermKind, a: Vec<BitVec>, b: Vec<BitVec>, c: Vec<BitVec>) -> Term {
        debug_assert!(a.len() == b.len() && b.len() == c.len());
        Term { kind, a, b, c }
    }

    fn triples(&self) -> Box<dyn Iterator<Item = (usize, usize, usize)>> {
        let k = self.a.len();
        match self.kind {
            TermKind::G => Box::new(g_triples(k)),
            TermKind::H => Box::new(h_triples(k)),
        }
    }

    fn expand_into(&self, poly: &mut CubicPhasePolynomial) {
        for (j, l, i) in self.triples() {
            poly.add_product(&self.a[j], &self.b[l], &self.c[i]);
        }
    }

    fn evaluate(&self, point: &BitVec) -> bool {
        let eval = |v: &[BitVec]| v.iter().map(|f| f.dot(point)).collect::<Vec<bool>>();
        let (a, b, c) = (eval(&self.a), eval(&self.b), eval(&self.c));
        self.triples()
            .fold(false, |acc, (j, l, i)| acc ^ (a[j] & b[l] & c[i]))
    }
}

/// `lhs` and `rhs` are XOR-sums of terms.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub vars: usize,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

impl Identity {
    /// Negative control: the same identity with one right-hand term removed.
    pub fn without_rhs_term(&self, idx: usize) -> Identity {
        let mut out = self.clone();
        out.rhs.remove(idx);
        out
    }

    fn side_poly(terms: &[Term]) -> CubicPhasePolynomial {
        let mut p = CubicPhasePolynomial::new();
        for t in terms {
            t.expand_into(&mut p);
        }
        p
    }

    fn holds_at(&self, point: &BitVec) -> bool {
        let side = |ts: &[Term]| ts.iter().fold(false, |acc, t| acc ^ t.evaluate(point));
        side(&self.lhs) == side(&self.rhs)
    }

    pub fn check(&self, mode: CheckMode) -> Result<bool, PhaseError> {
        match mode {
            CheckMode::Symbolic => {
                if self.vars > 4 * SYMBOLIC_MAX_N {
                    return Err(PhaseError::InvalidSize(format!(
                        "symbolic check limited to n <= {SYMBOLIC_MAX_N}"
                    )));
                }
                Ok(Self::side_poly(&self.lhs) == Self::side_poly(&self.rhs))
            }
            CheckMode::Exhaustive => {
                if self.vars > EXHAUSTIVE_MAX_VARS {
                    return Err(PhaseError::InvalidSize(format!(
                        "{} variables exceed the exhaustive limit of {EXHAUSTIVE_MAX_VARS}",
                        self.vars
                    )));
                }
                Ok((0u64..1 << self.vars)
                    .into_par_iter()
                    .all(|x| self.holds_at(&BitVec::from_u64(x, self.vars))))
            }
            CheckMode::Random { trials, seed } => Ok((0..trials as u64).into_par_iter().all(|t| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t));
                let bits: Vec<bool> = (0..self.vars).map(|_| rng.gen()).collect();
                self.holds_at(&BitVec::from_bools(&bits))
            })),
        }
    }
}

/// Named variable vectors `a, b, c, c'` of size `n`, as unit forms.
struct Vars {
    width: usize,
    a: Vec<BitVec>,
    b: Vec<BitVec>,
    c: Vec<BitVec>,
    cp: Vec<BitVec>,
}

impl Vars {
    fn new(n: usize) -> Vars {
        let v = VarLayout::new(n);
        let width = v.total();
        let block =
            |f: &dyn Fn(usize) -> usize| (0..n).map(|i| BitVec::unit(width, f(i))).collect();
        Vars {
            width,
            a: block(&|i| v.a(i)),
            b: block(&|i| v.b(i)),
            c: block(&|i| v.c(i)),
            cp: block(&|i| v.cp(i)),
        }
    }

    fn zero(&self) -> BitVec {
        BitVec::zeros(self.width)
    }
}

fn xor(x: &[BitVec], y: &[BitVec]) -> Vec<BitVec> {
    x.iter().zip(y).map(|(p, q)| p.xor(q)).collect()
}

fn halves(v: &[BitVec]) -> (Vec<BitVec>, Vec<BitVec>) {
    let (l, r) = v.split_at(v.len() / 2);
    (l.to_vec(), r.to_vec())
}

fn require_even(n: usize) -> Result<(), PhaseError> {
    if n == 0 || n % 2 != 0 {
        return Err(PhaseError::InvalidSize(format!(
            "n = {n} must be even and positive"
        )));
    }
    Ok(())
}

fn base_lhs(v: &Vars) -> Vec<Term> {
    vec![
        Term::new(TermKind::G, v.a.clone(), v.b.clone(), v.c.clone()),
        Term::new(TermKind::H, v.a.clone(), v.b.clone(), v.cp.clone()),
    ]
}

/// Size-`n` `g ⊕ h` as the six half-size terms of the Karatsuba-like split.
pub fn split_identity(n: usize) -> Result<Identity, PhaseError> {
    require_even(n)?;
    let v = Vars::new(n);
    let ((al, ar), (bl, br), (cl, cr), (cpl, cpr)) =
        (halves(&v.a), halves(&v.b), halves(&v.c), halves(&v.cp));
    let (aa, bb) = (xor(&al, &ar), xor(&bl, &br));
    use TermKind::{G, H};
    let rhs = vec![
        Term::new(G, aa.clone(), bb.clone(), cr.clone()),
        Term::new(H, aa, bb, cpl.clone()),
        Term::new(G, ar.clone(), br.clone(), xor(&cpl, &cr)),
        Term::new(H, ar, br, xor(&cpl, &cpr)),
        Term::new(G, al.clone(), bl.clone(), xor(&cl, &cr)),
        Term::new(H, al, bl, xor(&cpl, &cr)),
    ];
    Ok(Identity {
        name: "recursive split",
        vars: v.width,
        lhs: base_lhs(&v),
        rhs,
    })
}

/// Size-`n` `g ⊕ h` as a size-`n+1` instance with zero padding.
pub fn padding_identity(n: usize) -> Result<Identity, PhaseError> {
    if n == 0 {
        return Err(PhaseError::InvalidSize("n must be positive".into()));
    }
    let v = Vars::new(n);
    let pad = |x: &[BitVec]| x.iter().cloned().chain([v.zero()]).collect::<Vec<_>>();
    let c_t: Vec<BitVec> = v.c.iter().cloned().chain([v.cp[0].clone()]).collect();
    let cp_t: Vec<BitVec> = v.cp[1..]
        .iter()
        .cloned()
        .chain([v.zero(), v.zero()])
        .collect();
    let rhs = vec![
        Term::new(TermKind::G, pad(&v.a), pad(&v.b), c_t),
        Term::new(TermKind::H, pad(&v.a), pad(&v.b), cp_t),
    ];
    Ok(Identity {
        name: "odd padding",
        vars: v.width,
        lhs: base_lhs(&v),
        rhs,
    })
}

/// The `g` half of the split; the last term borrows an `h`.
pub fn g_half_split(n: usize) -> Result<Identity, PhaseError> {
    require_even(n)?;
    let v = Vars::new(n);
    let ((al, ar), (bl, br), (cl, cr)) = (halves(&v.a), halves(&v.b), halves(&v.c));
    use TermKind::{G, H};
    let rhs = vec![
        Term::new(G, xor(&al, &ar), xor(&bl, &br), cr.clone()),
        Term::new(G, ar, br, cr.clone()),
        Term::new(G, al.clone(), bl.clone(), xor(&cl, &cr)),
        Term::new(H, al, bl, cr),
    ];
    let lhs = vec![Term::new(G, v.a.clone(), v.b.clone(), v.c.clone())];
    Ok(Identity {
        name: "g split",
        vars: v.width,
        lhs,
        rhs,
    })
}

/// The `h` half of the split; the second term borrows a `g`.
pub fn h_half_split(n: usize) -> Result<Identity, PhaseError> {
    require_even(n)?;
    let v = Vars::new(n);
    let ((al, ar), (bl, br), (cpl, cpr)) = (halves(&v.a), halves(&v.b), halves(&v.cp));
    use TermKind::{G, H};
    let rhs = vec![
        Term::new(H, xor(&al, &ar), xor(&bl, &br), cpl.clone()),
        Term::new(G, ar.clone(), br.clone(), cpl.clone()),
        Term::new(H, ar, br, xor(&cpl, &cpr)),
        Term::new(H, al, bl, cpl),
    ];
    let lhs = vec![Term::new(H, v.a.clone(), v.b.clone(), v.cp.clone())];
    Ok(Identity {
        name: "h split",
        vars: v.width,
        lhs,
        rhs,
    })
}

pub fn check_split_identity(n: usize, mode: CheckMode) -> Result<bool, PhaseError> {
    split_identity(n)?.check(mode)
}

pub fn check_padding_identity(n: usize, mode: CheckMode) -> Result<bool, PhaseError> {
    padding_identity(n)?.check(mode)
}

/// Both halves must hold.
pub fn check_half_split_identities(n: usize, mode: CheckMode) -> Result<bool, PhaseError> {
    Ok(g_half_split(n)?.check(mode)? && h_half_split(n)?.check(mode)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const RANDOM: CheckMode = CheckMode::Random {
        trials: 1000,
        seed: 7,
    };

    #[test]
    fn split() {
        assert!(check_split_identity(2, CheckMode::Exhaustive).unwrap());
        for n in (2..=12).step_by(2) {
            assert!(
                check_split_identity(n, CheckMode::Symbolic).unwrap(),
                "n = {n}"
            );
        }
        assert!(check_split_identity(8, RANDOM).unwrap());
        assert!(check_split_identity(3, RANDOM).is_err());
    }

    #[test]
    fn split_mutations_detected() {
        for n in [4, 8] {
            let id = split_identity(n).unwrap();
            for k in 0..id.rhs.len() {
                assert!(
                    !id.without_rhs_term(k).check(CheckMode::Symbolic).unwrap(),
                    "n = {n}, term {k}"
                );
            }
        }
        // at n = 2 the half-size h terms are empty, so only g terms matter
        let id = split_identity(2).unwrap();
        for k in [0, 2, 4] {
            assert!(!id.without_rhs_term(k).check(CheckMode::Exhaustive).unwrap());
        }
    }

    #[test]
    fn padding() {
        let id = padding_identity(1).unwrap();
        assert!(id.check(CheckMode::Exhaustive).unwrap());
        assert!(check_padding_identity(3, CheckMode::Symbolic).unwrap());
        for n in 1..=11 {
            assert!(
                check_padding_identity(n, CheckMode::Symbolic).unwrap(),
                "n = {n}"
            );
        }
        assert!(check_padding_identity(7, RANDOM).unwrap());
        assert!(!id.without_rhs_term(0).check(CheckMode::Exhaustive).unwrap());
    }

    #[test]
    fn half_splits() {
        assert!(check_half_split_identities(2, CheckMode::Exhaustive).unwrap());
        assert!(check_half_split_identities(6, CheckMode::Symbolic).unwrap());
        let g = g_half_split(6).unwrap();
        assert!(!g.without_rhs_term(3).check(CheckMode::Symbolic).unwrap());
        assert!(check_half_split_identities(5, CheckMode::Symbolic).is_err());
    }

    #[test]
    fn limits() {
        assert!(check_split_identity(18, CheckMode::Symbolic).is_err());
        assert!(check_split_identity(6, CheckMode::Exhaustive).is_err());
        assert!(check_split_identity(
            64,
            CheckMode::Random {
                trials: 50,
                seed: 1
            }
        )
        .unwrap());
    }
}
