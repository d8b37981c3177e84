//! Exact matrices over a [`RingSpec`].
//!
//! A morphism `m -> k` of the matrix category is a `k x m` matrix; rows are
//! elements, maps act by right multiplication, and composition is the matrix
//! product. Matrices with zero rows or columns are first-class and compose
//! as empty products.

use num_bigint::BigInt;

use crate::ring::{Elem, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub ring: RingSpec,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Elem>,
}

impl Mat {
    pub fn new(ring: RingSpec, rows: usize, cols: usize, entries: Vec<Elem>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        let entries = entries.into_iter().map(|e| ring.canon(e)).collect();
        Mat { ring, rows, cols, entries }
    }

    pub fn zero(ring: RingSpec, rows: usize, cols: usize) -> Self {
        let entries = vec![ring.zero(); rows * cols];
        Mat { ring, rows, cols, entries }
    }

    pub fn identity(ring: RingSpec, n: usize) -> Self {
        let mut m = Mat::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, m.ring.one());
        }
        m
    }

    pub fn from_i64(ring: RingSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let entries = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&v| ring.from_i64(v))
            })
            .collect();
        Mat { ring, rows: r, cols: c, entries }
    }

    pub fn from_rows(ring: RingSpec, rows: Vec<Vec<Elem>>, cols: usize) -> Self {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row.into_iter().map(|e| ring.canon(e)));
        }
        Mat { ring, rows: r, cols, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> &Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: Elem) {
        self.entries[i * self.cols + j] = self.ring.canon(e);
    }

    pub fn row(&self, i: usize) -> Vec<Elem> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn row_mat(&self, i: usize) -> Mat {
        Mat::from_rows(self.ring.clone(), vec![self.row(i)], self.cols)
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zero(self.ring.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if self.ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = self.ring.mul(a, other.at(k, j));
                    let s = self.ring.add(out.at(i, j), &v);
                    out.set(i, j, s);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Mat { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.sub(a, b))
            .collect();
        Mat { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        assert_eq!(self.cols, other.cols, "dimension mismatch");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Mat { ring: self.ring.clone(), rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Reinterprets the same entries over another ring with identical
    /// element representation (e.g. the opposite algebra).
    pub fn with_ring(&self, ring: RingSpec) -> Mat {
        Mat { ring, rows: self.rows, cols: self.cols, entries: self.entries.clone() }
    }

    /// Integer lift for scalar rings (entries are canonical residues).
    pub fn to_zmat(&self) -> crate::zlin::ZMat {
        let e = self
            .entries
            .iter()
            .map(|x| match x {
                Elem::Int(v) => v.clone(),
                Elem::Alg(_) => panic!("algebra matrix has no integer lift"),
            })
            .collect();
        crate::zlin::ZMat { rows: self.rows, cols: self.cols, e }
    }

    pub fn from_zmat(ring: RingSpec, z: &crate::zlin::ZMat) -> Mat {
        let entries = z.e.iter().map(|v| ring.canon_int(v.clone())).collect();
        Mat { ring, rows: z.rows, cols: z.cols, entries }
    }

    pub fn to_string_grid(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.ring.fmt_elem(self.at(i, j))).collect())
            .collect()
    }
}

impl std::fmt::Display for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{}]", self.rows, self.cols);
        }
        let grid = self.to_string_grid();
        let lines: Vec<String> = grid.iter().map(|r| r.join(" ")).collect();
        write!(f, "[{}]", lines.join("; "))
    }
}

/// Convenience: an integer entry for matrix literals.
pub fn int(v: i64) -> Elem {
    Elem::Int(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_matrices_compose() {
        let r = RingSpec::Integers;
        let a = Mat::zero(r.clone(), 0, 3);
        let b = Mat::zero(r.clone(), 3, 2);
        let c = a.mul(&b);
        assert_eq!((c.rows, c.cols), (0, 2));
        let d = Mat::zero(r.clone(), 2, 0).mul(&Mat::zero(r, 0, 3));
        assert!(d.is_zero());
        assert_eq!((d.rows, d.cols), (2, 3));
    }

    #[test]
    fn entries_are_canonical() {
        let r = RingSpec::integers_mod(4);
        let m = Mat::from_i64(r.clone(), &[&[6, -1]]);
        assert_eq!(m.at(0, 0), &r.from_i64(2));
        assert_eq!(m.at(0, 1), &r.from_i64(3));
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn ring_mismatch_panics() {
        let a = Mat::identity(RingSpec::Integers, 1);
        let b = Mat::identity(RingSpec::integers_mod(4), 1);
        let _ = a.mul(&b);
    }
}
