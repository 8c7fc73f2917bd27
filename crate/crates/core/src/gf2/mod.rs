//! Classical GF(2) polynomial and matrix arithmetic.
//!
//! Two independent multiplication routes live here: [`poly_mul_mod`]
//! (schoolbook product then long division) and [`mastrovito_product`]
//! (`d ^ Q e` from the lower/upper Toeplitz split). Every circuit in the
//! crate is checked against one or both of them.

mod matrix;
mod poly;

pub use matrix::{rank_of, Gf2Matrix};
pub use poly::{is_irreducible, BinaryPolynomial};

use thiserror::Error;

use crate::bits::BitVec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("cannot parse polynomial or bit string `{0}`")]
    Parse(String),
    #[error("degree precondition violated: {0}")]
    Degree(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
}

fn modulus_degree(p: &BinaryPolynomial, min: usize) -> Result<usize, Gf2Error> {
    match p.degree() {
        Some(n) if n >= min => Ok(n),
        d => Err(Gf2Error::Degree(format!(
            "modulus degree {d:?} must be at least {min}"
        ))),
    }
}

/// `A * B mod P` by schoolbook multiplication and long division.
pub fn poly_mul_mod(
    a: &BinaryPolynomial,
    b: &BinaryPolynomial,
    p: &BinaryPolynomial,
) -> Result<BinaryPolynomial, Gf2Error> {
    let n = modulus_degree(p, 1)?;
    for (name, x) in [("A", a), ("B", b)] {
        if x.degree().map_or(false, |d| d >= n) {
            return Err(Gf2Error::Degree(format!(
                "deg({name}) = {:?} not below {n}",
                x.degree()
            )));
        }
    }
    a.mul(b).rem(p)
}

/// Bit-vector form of [`poly_mul_mod`].
pub fn mul_mod_bits(a: &BitVec, b: &BitVec, p: &BinaryPolynomial) -> Result<BitVec, Gf2Error> {
    let n = modulus_degree(p, 1)?;
    let prod = poly_mul_mod(
        &BinaryPolynomial::from_bits(a),
        &BinaryPolynomial::from_bits(b),
        p,
    )?;
    Ok(prod.to_bits(n))
}

/// `n x cols` matrix whose column `j` is `x^(n+j) mod P`, built by
/// repeated multiplication by `x`.
fn power_columns(p: &BinaryPolynomial, cols: usize) -> Result<Gf2Matrix, Gf2Error> {
    let n = modulus_degree(p, 1)?;
    let low = p.to_bits(n);
    let mut columns = Vec::with_capacity(cols);
    let mut col = low.clone();
    for j in 0..cols {
        if j > 0 {
            let carry = col.get(n - 1);
            let mut next = BitVec::zeros(n);
            for i in col.ones().filter(|&i| i + 1 < n) {
                next.set(i + 1, true);
            }
            if carry {
                next.xor_assign(&low);
            }
            col = next;
        }
        columns.push(col.clone());
    }
    Ok(Gf2Matrix::from_columns(&columns, n))
}

/// The `n x (n-1)` reduction matrix `Q` of a degree-`n` modulus.
pub fn build_reduction_matrix(p: &BinaryPolynomial) -> Result<Gf2Matrix, Gf2Error> {
    let n = modulus_degree(p, 2)?;
    power_columns(p, n - 1)
}

/// The invertible `n x n` matrix of multiplication by `x^n` in GF(2)[x]/P.
/// Its first `n-1` columns are `Q`.
pub fn shift_matrix(p: &BinaryPolynomial) -> Result<Gf2Matrix, Gf2Error> {
    let n = modulus_degree(p, 1)?;
    power_columns(p, n)
}

/// Lower Toeplitz `L` (`n x n`) and upper `U` (`(n-1) x n`) built from `a`.
pub fn toeplitz_split(a: &BitVec) -> (Gf2Matrix, Gf2Matrix) {
    let n = a.len();
    let mut l = Gf2Matrix::zeros(n, n);
    let mut u = Gf2Matrix::zeros(n.saturating_sub(1), n);
    for i in 0..n {
        for j in 0..=i {
            l.set(i, j, a.get(i - j));
        }
    }
    for i in 0..n.saturating_sub(1) {
        for j in i + 1..n {
            u.set(i, j, a.get(n + i - j));
        }
    }
    (l, u)
}

/// Returns `(d, e) = (L b, U b)`.
pub fn mastrovito_vectors(a: &BitVec, b: &BitVec) -> Result<(BitVec, BitVec), Gf2Error> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Gf2Error::Dimension(format!(
            "|a| = {}, |b| = {}",
            a.len(),
            b.len()
        )));
    }
    let (l, u) = toeplitz_split(a);
    Ok((l.mul_vec(b)?, u.mul_vec(b)?))
}

/// `d ^ Q e`; must agree with [`poly_mul_mod`].
pub fn mastrovito_product(a: &BitVec, b: &BitVec, q: &Gf2Matrix) -> Result<BitVec, Gf2Error> {
    if a.len() != q.rows() || q.cols() + 1 != q.rows() {
        return Err(Gf2Error::Dimension(format!(
            "|a| = {} against {}x{} reduction matrix",
            a.len(),
            q.rows(),
            q.cols()
        )));
    }
    let (d, e) = mastrovito_vectors(a, b)?;
    Ok(d.xor(&q.mul_vec(&e)?))
}

/// `c' = Q^T c`: the functional with `sum_i c_i (Q e)_i = sum_k e_k c'_k`.
pub fn transpose_apply(q: &Gf2Matrix, c: &BitVec) -> Result<BitVec, Gf2Error> {
    if c.len() != q.rows() {
        return Err(Gf2Error::Dimension(format!(
            "|c| = {} but Q has {} rows",
            c.len(),
            q.rows()
        )));
    }
    let mut out = BitVec::zeros(q.cols());
    for j in c.ones() {
        out.xor_assign(q.row(j));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    fn bits(s: &str) -> BitVec {
        BitVec::from_bit_str(s).unwrap()
    }

    #[test]
    fn worked_product_of_degree_seven_field() {
        let p = poly("7,5,3,1,0");
        let r = poly_mul_mod(&poly("5,3,0"), &poly("2,1"), &p).unwrap();
        assert_eq!(r, poly("6,4,3,2,0"));
    }

    #[test]
    fn identity_and_hand_division() {
        let p = poly("4,1,0");
        let b = poly("3,1");
        assert_eq!(poly_mul_mod(&BinaryPolynomial::one(), &b, &p).unwrap(), b);
        assert_eq!(
            poly_mul_mod(&poly("3"), &poly("1"), &p).unwrap(),
            poly("1,0")
        );
    }

    #[test]
    fn degree_preconditions() {
        let p = poly("4,1,0");
        assert!(matches!(
            poly_mul_mod(&poly("4"), &poly("1"), &p),
            Err(Gf2Error::Degree(_))
        ));
        assert!(matches!(
            build_reduction_matrix(&poly("1,0")),
            Err(Gf2Error::Degree(_))
        ));
        assert!(poly_mul_mod(&poly("1"), &poly("1"), &BinaryPolynomial::zero()).is_err());
    }

    #[test]
    fn mastrovito_vectors_examples() {
        let (d, e) = mastrovito_vectors(&bits("1001010"), &bits("0110000")).unwrap();
        assert_eq!(d.to_string(), "0110111");
        assert_eq!(e.to_string(), "100000");

        let (d, e) = mastrovito_vectors(&bits("0000000"), &bits("1011011")).unwrap();
        assert!(d.is_zero() && e.is_zero());

        // n = 2: L = [[a0,0],[a1,a0]], U = [[0,a1]]
        let (d, e) = mastrovito_vectors(&bits("11"), &bits("10")).unwrap();
        assert_eq!(d.to_string(), "11");
        assert_eq!(e.to_string(), "0");

        assert!(mastrovito_vectors(&bits("11"), &bits("101")).is_err());
    }

    #[test]
    fn toeplitz_structure() {
        let a = bits("1001010");
        let (l, u) = toeplitz_split(&a);
        for i in 0..7 {
            assert_eq!(l.get(i, i), a.get(0));
            for j in i + 1..7 {
                assert!(!l.get(i, j));
            }
        }
        for i in 0..6 {
            assert!(!u.get(i, 0));
            for j in 0..=i {
                assert!(!u.get(i, j));
            }
        }
    }

    #[test]
    fn mastrovito_identity_and_errors() {
        let p = poly("5,2,0");
        let q = build_reduction_matrix(&p).unwrap();
        let a = bits("10110");
        assert_eq!(mastrovito_product(&a, &bits("10000"), &q).unwrap(), a);
        assert!(mastrovito_product(&bits("1011"), &bits("1000"), &q).is_err());
    }

    #[test]
    fn transpose_apply_extracts_rows() {
        let q = build_reduction_matrix(&poly("7,5,3,1,0")).unwrap();
        let c6 = BitVec::unit(7, 6);
        assert_eq!(transpose_apply(&q, &c6).unwrap().to_string(), "010000");
        assert!(transpose_apply(&q, &BitVec::zeros(7)).unwrap().is_zero());
        for i in 0..7 {
            assert_eq!(&transpose_apply(&q, &BitVec::unit(7, i)).unwrap(), q.row(i));
        }
        assert!(transpose_apply(&q, &BitVec::zeros(6)).is_err());
    }

    #[test]
    fn shift_matrix_extends_q_invertibly() {
        let p = poly("7,5,3,1,0");
        let q = build_reduction_matrix(&p).unwrap();
        let m = shift_matrix(&p).unwrap();
        for j in 0..6 {
            assert_eq!(m.column(j), q.column(j));
        }
        assert!(m.inverse().is_some());
    }
}
