use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Gf2Error;
use crate::bits::BitVec;

/// A polynomial over GF(2); bit `i` is the coefficient of `x^i`.
///
/// The word vector never carries trailing zero words, so equality is
/// structural and the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryPolynomial {
    words: Vec<u64>,
}

impl BinaryPolynomial {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(exp: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(exp, true);
        p
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.words_mut_for(e);
            p.words[e >> 6] ^= 1u64 << (e & 63);
        }
        p.normalize();
        p
    }

    /// Builds from a little-endian coefficient vector.
    pub fn from_bits(bits: &BitVec) -> Self {
        Self::from_exponents(&bits.ones().collect::<Vec<_>>())
    }

    /// Low `len` coefficients as a bit vector (index i is coefficient of x^i).
    pub fn to_bits(&self, len: usize) -> BitVec {
        let mut v = BitVec::zeros(len);
        for e in self.exponents_ascending().filter(|&e| e < len) {
            v.set(e, true);
        }
        v
    }

    pub fn from_u64(value: u64) -> Self {
        let mut p = Self { words: vec![value] };
        p.normalize();
        p
    }

    fn words_mut_for(&mut self, exp: usize) {
        let need = exp / 64 + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, exp: usize) -> bool {
        self.words
            .get(exp >> 6)
            .map_or(false, |w| (w >> (exp & 63)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, exp: usize, value: bool) {
        if value {
            self.words_mut_for(exp);
            self.words[exp >> 6] |= 1u64 << (exp & 63);
        } else if exp >> 6 < self.words.len() {
            self.words[exp >> 6] &= !(1u64 << (exp & 63));
            self.normalize();
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn exponents_ascending(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    /// Exponents from highest to lowest, e.g. `[9, 7, 0]`.
    pub fn exponents(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.exponents_ascending().collect();
        e.reverse();
        e
    }

    /// Comma-separated exponent list, highest first: `9,7,0`.
    pub fn to_exponent_list(&self) -> String {
        self.exponents()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (a, b) in words.iter_mut().zip(&short.words) {
            *a ^= *b;
        }
        let mut p = Self { words };
        p.normalize();
        p
    }

    /// Multiplies by `x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = Self { words };
        p.normalize();
        p
    }

    /// Schoolbook carry-less product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for e in other.exponents_ascending() {
            acc = acc.add(&self.shl(e));
        }
        acc
    }

    /// Quotient and remainder of long division.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), Gf2Error> {
        let d = divisor.degree().ok_or(Gf2Error::ZeroDivisor)?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            quot.set_coeff(r - d, !quot.coeff(r - d));
            rem = rem.add(&divisor.shl(r - d));
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, Gf2Error> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// `self^2 mod modulus`; squaring over GF(2) spreads the bits.
    fn square_mod(&self, modulus: &Self) -> Self {
        let mut sq = Self::zero();
        for e in self.exponents_ascending() {
            sq.set_coeff(2 * e, true);
        }
        sq.rem(modulus).expect("nonzero modulus")
    }

    /// Pretty form, e.g. `x^9+x^7+1`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.exponents()
            .iter()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl Ord for BinaryPolynomial {
    /// Orders by integer value of the coefficient bits.
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BinaryPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pretty())
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

/// Accepts an exponent list (`9,7,0`) or a pretty form (`x^9+x^7+1`).
impl FromStr for BinaryPolynomial {
    type Err = Gf2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Gf2Error::Parse(s.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        let mut exps = Vec::new();
        if s.contains('x') {
            for term in s.split('+') {
                let term = term.trim();
                let e = match term {
                    "1" => 0,
                    "x" => 1,
                    t => t
                        .strip_prefix("x^")
                        .and_then(|e| e.trim().parse::<usize>().ok())
                        .ok_or_else(bad)?,
                };
                exps.push(e);
            }
        } else {
            for tok in s.split(',') {
                exps.push(tok.trim().parse::<usize>().map_err(|_| bad())?);
            }
        }
        let mut sorted = exps.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != exps.len() {
            return Err(Gf2Error::Parse(format!("{s}: repeated exponent")));
        }
        Ok(Self::from_exponents(&exps))
    }
}

/// Ben-Or test: `P` of degree `n` is irreducible iff
/// `gcd(x^(2^i) - x, P) = 1` for every `1 <= i <= n/2`.
pub fn is_irreducible(p: &BinaryPolynomial) -> bool {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    if !p.coeff(0) {
        return false;
    }
    let x = BinaryPolynomial::monomial(1);
    let mut u = x.clone();
    for _ in 1..=n / 2 {
        u = u.square_mod(p);
        let g = p.gcd(&u.add(&x));
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parses_both_syntaxes() {
        assert_eq!(poly("9,7,0"), poly("x^9+x^7+1"));
        assert_eq!(poly("x^4 + x + 1").exponents(), vec![4, 1, 0]);
        assert_eq!(poly("4,1,0").to_pretty(), "x^4+x+1");
        assert_eq!(poly("x^9+x^7+1").to_exponent_list(), "9,7,0");
        assert!("4,4,0".parse::<BinaryPolynomial>().is_err());
        assert!("x^a+1".parse::<BinaryPolynomial>().is_err());
        assert!("".parse::<BinaryPolynomial>().is_err());
    }

    #[test]
    fn degree_and_zero() {
        assert_eq!(BinaryPolynomial::zero().degree(), None);
        assert_eq!(poly("130,1").degree(), Some(130));
        let mut p = poly("70,3");
        p.set_coeff(70, false);
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn long_division_matches_hand_computation() {
        // x^4 mod (x^4+x+1) = x+1
        let r = BinaryPolynomial::monomial(4).rem(&poly("4,1,0")).unwrap();
        assert_eq!(r, poly("1,0"));
        let (q, r) = poly("7,5,2,6,4,1").div_rem(&poly("7,5,3,1,0")).unwrap();
        assert_eq!(q, poly("0"));
        assert_eq!(r, poly("6,4,3,2,0"));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&poly("2,1,0")));
        assert!(!is_irreducible(&poly("4,2,0")));
        assert!(is_irreducible(&poly("7,5,3,1,0")));
        assert!(is_irreducible(&poly("9,4,0")));
        // the trinomial example of degree 9 factors as a quartic times a quintic
        assert!(!is_irreducible(&poly("9,7,0")));
        assert_eq!(poly("4,1,0").mul(&poly("5,3,2,1,0")), poly("9,7,0"));
        assert!(is_irreducible(&poly("4,1,0")));
        // the square of the all-one quartic
        assert!(!is_irreducible(&poly("8,6,4,2,0")));
        assert_eq!(poly("4,3,2,1,0").mul(&poly("4,3,2,1,0")), poly("8,6,4,2,0"));
    }

    #[test]
    fn ben_or_agrees_with_trial_division() {
        // trial division by every polynomial of degree <= n/2
        for value in 4u64..(1 << 9) {
            let p = BinaryPolynomial::from_u64(value);
            let n = p.degree().unwrap();
            let mut irreducible = true;
            for d in 2u64..(1 << (n / 2 + 1)) {
                let q = BinaryPolynomial::from_u64(d);
                if q.degree().unwrap() >= 1
                    && q.degree().unwrap() < n
                    && p.rem(&q).unwrap().is_zero()
                {
                    irreducible = false;
                    break;
                }
            }
            assert_eq!(is_irreducible(&p), irreducible, "{p}");
        }
    }
}
