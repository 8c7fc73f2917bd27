use std::fmt;

use super::Gf2Error;
use crate::bits::BitVec;

/// Dense bit matrix over GF(2), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVec>) -> Result<Self, Gf2Error> {
        let cols = rows.first().map_or(0, BitVec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Gf2Error::Dimension("ragged rows".into()));
        }
        Ok(Gf2Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Parses rows written as `0`/`1` strings.
    pub fn from_row_strs(rows: &[&str]) -> Result<Self, Gf2Error> {
        let parsed = rows
            .iter()
            .map(|r| BitVec::from_bit_str(r).ok_or_else(|| Gf2Error::Parse((*r).to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(parsed)
    }

    pub fn from_columns(cols: &[BitVec], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for i in col.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(
            r < self.rows && c < self.cols,
            "({r},{c}) outside {}x{}",
            self.rows,
            self.cols
        );
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < self.rows && c < self.cols,
            "({r},{c}) outside {}x{}",
            self.rows,
            self.cols
        );
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    /// `row[dst] ^= row[src]`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert!(src != dst && src < self.rows && dst < self.rows);
        let s = self.data[src].clone();
        self.data[dst].xor_assign(&s);
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::Dimension(format!(
                "vector of length {} against {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.data[r].dot(v) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, Gf2Error> {
        if self.cols != other.rows {
            return Err(Gf2Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc = BitVec::zeros(other.cols);
            for k in self.data[r].ones() {
                acc.xor_assign(&other.data[k]);
            }
            out.data[r] = acc;
        }
        Ok(out)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(BitVec::count_ones).sum()
    }

    pub fn rank(&self) -> usize {
        rank_of(self.data.clone())
    }

    /// Gauss-Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Gf2Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r].get(col))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r].get(col) {
                    let (ar, ir) = (a[col].clone(), inv[col].clone());
                    a[r].xor_assign(&ar);
                    inv[r].xor_assign(&ir);
                }
            }
        }
        Some(Gf2Matrix {
            rows: n,
            cols: n,
            data: inv,
        })
    }
}

/// Rank of a set of vectors over GF(2).
pub fn rank_of(mut vecs: Vec<BitVec>) -> usize {
    let mut rank = 0;
    let width = vecs.first().map_or(0, BitVec::len);
    for col in 0..width {
        if let Some(p) = (rank..vecs.len()).find(|&r| vecs[r].get(col)) {
            vecs.swap(rank, p);
            let pivot = vecs[rank].clone();
            for (r, v) in vecs.iter_mut().enumerate() {
                if r != rank && v.get(col) {
                    v.xor_assign(&pivot);
                }
            }
            rank += 1;
        }
    }
    rank
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<&str> = (0..self.cols)
                .map(|c| if row.get(c) { "1" } else { "0" })
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = Gf2Matrix::from_row_strs(&["110", "011", "001"]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Gf2Matrix::identity(3));
        let singular = Gf2Matrix::from_row_strs(&["110", "110", "001"]).unwrap();
        assert!(singular.inverse().is_none());
        assert_eq!(singular.rank(), 2);
    }

    #[test]
    fn transpose_and_columns() {
        let m = Gf2Matrix::from_row_strs(&["10", "11", "01"]).unwrap();
        assert_eq!(m.transpose().row(1).to_string(), "011");
        assert_eq!(m.column(0).to_string(), "110");
        assert!(m.mul_vec(&BitVec::zeros(3)).is_err());
    }
}
