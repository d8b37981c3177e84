//! Exact integer linear algebra: Hermite and Smith normal forms, left
//! kernels and left-division, all with explicit transformation matrices.
//!
//! Row convention throughout: vectors are rows, maps act by right
//! multiplication, so the "left kernel" of `A` is `{ x : x * A = 0 }`.
//!
//! The environment variable `HEREDITAS_MAX_ENTRY_BITS` (default 4096) caps
//! the bit size of intermediate entries; exceeding it aborts the computation
//! rather than silently grinding through a coefficient explosion.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn max_entry_bits() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("HEREDITAS_MAX_ENTRY_BITS")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(4096)
    })
}

fn check_size(x: &BigInt) {
    if x.bits() > max_entry_bits() {
        panic!(
            "integer entry exceeded HEREDITAS_MAX_ENTRY_BITS = {} bits",
            max_entry_bits()
        );
    }
}

/// Dense matrix over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMat {
    pub rows: usize,
    pub cols: usize,
    pub e: Vec<BigInt>,
}

impl ZMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ZMat { rows, cols, e: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ZMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let r = rows.len();
        let mut e = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            e.extend(row);
        }
        ZMat { rows: r, cols, e }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = ZMat::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.e[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &ZMat) -> ZMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = ZMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * &other[(k, j)];
                    out[(i, j)] += add;
                    check_size(&out[(i, j)]);
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &ZMat) -> ZMat {
        assert_eq!(self.cols, other.cols);
        let mut e = self.e.clone();
        e.extend(other.e.iter().cloned());
        ZMat { rows: self.rows + other.rows, cols: self.cols, e }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.e.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row_i -= q * row_r
    fn sub_row(&mut self, i: usize, r: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(r, j)] * q;
            self[(i, j)] -= v;
            check_size(&self[(i, j)]);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for ZMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.e[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ZMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.e[i * self.cols + j]
    }
}

/// Row Hermite normal form: returns `(H, U)` with `U * A = H`, `U`
/// unimodular, `H` in row echelon form with positive pivots and entries
/// above each pivot reduced to `[0, pivot)`. Zero rows sit at the bottom.
pub fn row_hnf(a: &ZMat) -> (ZMat, ZMat) {
    let mut h = a.clone();
    let mut u = ZMat::identity(a.rows);
    let mut r = 0;
    for c in 0..h.cols {
        // Gcd elimination in column c among rows r.. .
        loop {
            let mut pivot: Option<usize> = None;
            for i in r..h.rows {
                if !h[(i, c)].is_zero() {
                    pivot = match pivot {
                        None => Some(i),
                        Some(p) if h[(i, c)].abs() < h[(p, c)].abs() => Some(i),
                        keep => keep,
                    };
                }
            }
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..h.rows {
                if !h[(i, c)].is_zero() {
                    let q = h[(i, c)].div_floor(&h[(r, c)]);
                    h.sub_row(i, r, &q);
                    u.sub_row(i, r, &q);
                    if !h[(i, c)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < h.rows && !h[(r, c)].is_zero() {
            if h[(r, c)].is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            for i in 0..r {
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                h.sub_row(i, r, &q);
                u.sub_row(i, r, &q);
            }
            r += 1;
            if r == h.rows {
                break;
            }
        }
    }
    (h, u)
}

/// Pivot positions `(row, col)` of a matrix in row echelon form.
fn pivots(h: &ZMat) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..h.rows {
        if let Some(c) = (0..h.cols).find(|&c| !h[(i, c)].is_zero()) {
            out.push((i, c));
        }
    }
    out
}

/// Canonical basis of `{ x : x * A = 0 }`, as the HNF of the kernel lattice.
pub fn left_kernel(a: &ZMat) -> ZMat {
    let (h, u) = row_hnf(a);
    let mut ker_rows = Vec::new();
    for i in 0..h.rows {
        if (0..h.cols).all(|c| h[(i, c)].is_zero()) {
            ker_rows.push(u.row(i));
        }
    }
    let k = ZMat::from_rows(ker_rows, a.rows);
    let (kh, _) = row_hnf(&k);
    // Drop trailing zero rows (there are none for a lattice basis, but HNF
    // of an overdetermined generating set may produce them).
    let piv = pivots(&kh);
    ZMat::from_rows(piv.iter().map(|&(i, _)| kh.row(i)).collect(), a.rows)
}

/// Solves `X * A = B` over the integers, row by row.
pub fn solve_left(a: &ZMat, b: &ZMat) -> Option<ZMat> {
    assert_eq!(a.cols, b.cols, "dimension mismatch");
    let (h, u) = row_hnf(a);
    let piv = pivots(&h);
    let mut xs = Vec::with_capacity(b.rows);
    for bi in 0..b.rows {
        let mut t = b.row(bi);
        let mut coeff = vec![BigInt::zero(); a.rows];
        for &(ri, ci) in &piv {
            if t[ci].is_zero() {
                continue;
            }
            let (q, rem) = t[ci].div_rem(&h[(ri, ci)]);
            if !rem.is_zero() {
                return None;
            }
            for j in 0..a.cols {
                let v = &q * &h[(ri, j)];
                t[j] -= v;
            }
            coeff[ri] = q;
        }
        if t.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let x = ZMat::from_rows(vec![coeff], a.rows).mul(&u);
        xs.push(x.row(0));
    }
    Some(ZMat::from_rows(xs, a.rows))
}

/// Smith normal form: `(U, D, V)` with `U * A * V = D`, `U`, `V` unimodular,
/// `D` diagonal with non-negative entries and `d_1 | d_2 | ...`.
pub fn snf(a: &ZMat) -> (ZMat, ZMat, ZMat) {
    let mut d = a.clone();
    let mut u = ZMat::identity(a.rows);
    let mut v = ZMat::identity(a.cols);

    // col_op on d mirrors into v (v is applied on the right: d_new = d * E
    // means v_new = v * E).
    fn swap_cols(m: &mut ZMat, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..m.rows {
            m.e.swap(i * m.cols + a, i * m.cols + b);
        }
    }
    fn sub_col(m: &mut ZMat, j: usize, c: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..m.rows {
            let val = &m[(i, c)] * q;
            m[(i, j)] -= val;
            check_size(&m[(i, j)]);
        }
    }
    fn negate_col(m: &mut ZMat, j: usize) {
        for i in 0..m.rows {
            let val = -m[(i, j)].clone();
            m[(i, j)] = val;
        }
    }

    let n = d.rows.min(d.cols);
    for t in 0..n {
        'outer: loop {
            // Find a minimal nonzero entry in the trailing submatrix.
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if !d[(i, j)].is_zero() {
                        best = match best {
                            None => Some((i, j)),
                            Some(b) if d[(i, j)].abs() < d[b].abs() => Some((i, j)),
                            keep => keep,
                        };
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            swap_cols(&mut d, t, bj);
            swap_cols(&mut v, t, bj);

            // Clear column t.
            for i in t + 1..d.rows {
                if !d[(i, t)].is_zero() {
                    let q = d[(i, t)].div_floor(&d[(t, t)]);
                    d.sub_row(i, t, &q);
                    u.sub_row(i, t, &q);
                    if !d[(i, t)].is_zero() {
                        continue 'outer;
                    }
                }
            }
            // Clear row t.
            for j in t + 1..d.cols {
                if !d[(t, j)].is_zero() {
                    let q = d[(t, j)].div_floor(&d[(t, t)]);
                    sub_col(&mut d, j, t, &q);
                    sub_col(&mut v, j, t, &q);
                    if !d[(t, j)].is_zero() {
                        continue 'outer;
                    }
                }
            }
            // Enforce the divisibility chain.
            for i in t + 1..d.rows {
                for j in t + 1..d.cols {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        // Absorb row i into row t and restart the pivot.
                        let mone = -BigInt::one();
                        d.sub_row(t, i, &mone);
                        u.sub_row(t, i, &mone);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        if t < n && d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    debug_assert!((0..d.rows)
        .all(|i| (0..d.cols).all(|j| i == j || d[(i, j)].is_zero())));
    let _ = negate_col;
    (u, d, v)
}

/// Determinant by Bareiss fraction-free elimination. Used to check
/// unimodularity of transformation matrices.
pub fn det(a: &ZMat) -> BigInt {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            m.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = num / &prev;
            }
            m[(i, k)] = BigInt::zero();
        }
        prev = m[(k, k)].clone();
    }
    sign * m[(n - 1, n - 1)].clone()
}

/// Inverse of a unimodular matrix.
pub fn inverse_unimodular(a: &ZMat) -> ZMat {
    solve_left(a, &ZMat::identity(a.rows)).expect("matrix is not unimodular")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_of_simple_matrix() {
        let a = ZMat::from_i64(&[&[2, 4], &[6, 8]]);
        let (h, u) = row_hnf(&a);
        assert_eq!(u.mul(&a), h);
        assert_eq!(det(&u).abs(), BigInt::one());
        // Echelon with positive pivots.
        assert_eq!(h[(0, 0)], BigInt::from(2));
    }

    #[test]
    fn kernel_of_stacked_column() {
        let a = ZMat::from_i64(&[&[2], &[3]]);
        let k = left_kernel(&a);
        assert_eq!(k.rows, 1);
        assert_eq!(k.row(0), vec![BigInt::from(3), BigInt::from(-2)]);
        assert!(k.mul(&a).is_zero());
    }

    #[test]
    fn kernel_of_injective_map_is_empty() {
        let a = ZMat::identity(2);
        let k = left_kernel(&a);
        assert_eq!(k.rows, 0);
    }

    #[test]
    fn solve_left_divisibility() {
        let a = ZMat::from_i64(&[&[2]]);
        assert_eq!(
            solve_left(&a, &ZMat::from_i64(&[&[4]])).unwrap().row(0),
            vec![BigInt::from(2)]
        );
        assert!(solve_left(&a, &ZMat::from_i64(&[&[3]])).is_none());
    }

    #[test]
    fn snf_divisibility_chain() {
        let a = ZMat::from_i64(&[&[2, 0], &[0, 3]]);
        let (u, d, v) = snf(&a);
        assert_eq!(u.mul(&a).mul(&v), d);
        assert_eq!(d[(0, 0)], BigInt::one());
        assert_eq!(d[(1, 1)], BigInt::from(6));
        assert_eq!(det(&u).abs(), BigInt::one());
        assert_eq!(det(&v).abs(), BigInt::one());
    }

    #[test]
    fn snf_of_zero_matrix() {
        let a = ZMat::zero(2, 2);
        let (u, d, v) = snf(&a);
        assert_eq!(u.mul(&a).mul(&v), d);
        assert!(d.is_zero());
    }

    #[test]
    fn unimodular_inverse() {
        let a = ZMat::from_i64(&[&[1, 2], &[0, 1]]);
        let inv = inverse_unimodular(&a);
        assert_eq!(inv.mul(&a), ZMat::identity(2));
    }
}
