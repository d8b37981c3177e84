//! Dense linear algebra over a prime field F_p, row convention.

/// Dense matrix over F_p with entries in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub e: Vec<u64>,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid; p prime, a != 0 mod p.
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "element not invertible");
    (t.rem_euclid(p as i128)) as u64
}

impl FpMat {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        FpMat { p, rows, cols, e: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = FpMat::zero(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(p: u64, rows: Vec<Vec<u64>>, cols: usize) -> Self {
        let r = rows.len();
        let mut e = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            e.extend(row.into_iter().map(|x| x % p));
        }
        FpMat { p, rows: r, cols, e }
    }

    pub fn row(&self, i: usize) -> Vec<u64> {
        self.e[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        assert_eq!(self.p, other.p);
        let p = self.p as u128;
        let mut out = FpMat::zero(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)] as u128;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out[(i, j)] as u128 + a * other[(k, j)] as u128) % p;
                    out[(i, j)] = v as u64;
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.cols);
        let mut e = self.e.clone();
        e.extend_from_slice(&other.e);
        FpMat { p: self.p, rows: self.rows + other.rows, cols: self.cols, e }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.e.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: u64) {
        let p = self.p as u128;
        for j in 0..self.cols {
            self[(i, j)] = (self[(i, j)] as u128 * c as u128 % p) as u64;
        }
    }

    /// row_i -= c * row_r
    fn sub_row(&mut self, i: usize, r: usize, c: u64) {
        if c == 0 {
            return;
        }
        let p = self.p as u128;
        for j in 0..self.cols {
            let sub = c as u128 * self[(r, j)] as u128 % p;
            self[(i, j)] = ((self[(i, j)] as u128 + p - sub) % p) as u64;
        }
    }
}

impl std::ops::Index<(usize, usize)> for FpMat {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.e[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FpMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.e[i * self.cols + j]
    }
}

/// Reduced row echelon form with transform: `(R, U, pivots)` with
/// `U * A = R`, `U` invertible.
pub fn rref(a: &FpMat) -> (FpMat, FpMat, Vec<(usize, usize)>) {
    let mut r = a.clone();
    let mut u = FpMat::identity(a.p, a.rows);
    let mut piv = Vec::new();
    let mut rank = 0;
    for c in 0..r.cols {
        let Some(pr) = (rank..r.rows).find(|&i| r[(i, c)] != 0) else { continue };
        r.swap_rows(rank, pr);
        u.swap_rows(rank, pr);
        let inv = inv_mod(r[(rank, c)], r.p);
        r.scale_row(rank, inv);
        u.scale_row(rank, inv);
        for i in 0..r.rows {
            if i != rank && r[(i, c)] != 0 {
                let f = r[(i, c)];
                r.sub_row(i, rank, f);
                u.sub_row(i, rank, f);
            }
        }
        piv.push((rank, c));
        rank += 1;
        if rank == r.rows {
            break;
        }
    }
    (r, u, piv)
}

pub fn rank(a: &FpMat) -> usize {
    rref(a).2.len()
}

/// Canonical (rref) basis of `{ x : x * A = 0 }`.
pub fn left_kernel(a: &FpMat) -> FpMat {
    let (r, u, piv) = rref(a);
    let _ = r;
    let rank = piv.len();
    let rows: Vec<Vec<u64>> = (rank..a.rows).map(|i| u.row(i)).collect();
    let k = FpMat::from_rows(a.p, rows, a.rows);
    let (kr, _, kpiv) = rref(&k);
    FpMat::from_rows(a.p, kpiv.iter().map(|&(i, _)| kr.row(i)).collect(), a.rows)
}

/// Solves `X * A = B`, row by row.
pub fn solve_left(a: &FpMat, b: &FpMat) -> Option<FpMat> {
    assert_eq!(a.cols, b.cols, "dimension mismatch");
    assert_eq!(a.p, b.p);
    let p = a.p as u128;
    let (r, u, piv) = rref(a);
    let mut xs = Vec::with_capacity(b.rows);
    for bi in 0..b.rows {
        let mut t = b.row(bi);
        let mut coeff = vec![0u64; a.rows];
        for &(ri, ci) in &piv {
            let q = t[ci];
            if q == 0 {
                continue;
            }
            for j in 0..a.cols {
                let sub = q as u128 * r[(ri, j)] as u128 % p;
                t[j] = ((t[j] as u128 + p - sub) % p) as u64;
            }
            coeff[ri] = q;
        }
        if t.iter().any(|&x| x != 0) {
            return None;
        }
        let x = FpMat::from_rows(a.p, vec![coeff], a.rows).mul(&u);
        xs.push(x.row(0));
    }
    Some(FpMat::from_rows(a.p, xs, a.rows))
}

/// Basis of the row space in rref, for canonical span comparison.
pub fn row_space_basis(a: &FpMat) -> FpMat {
    let (r, _, piv) = rref(a);
    FpMat::from_rows(a.p, piv.iter().map(|&(i, _)| r.row(i)).collect(), a.cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_solve_over_f5() {
        let a = FpMat::from_rows(5, vec![vec![2, 1], vec![4, 2]], 2);
        let k = left_kernel(&a);
        assert_eq!(k.rows, 1);
        assert!(k.mul(&a).is_zero());
        let b = FpMat::from_rows(5, vec![vec![2, 1]], 2);
        let x = solve_left(&a, &b).unwrap();
        assert_eq!(x.mul(&a), b);
        let no = FpMat::from_rows(5, vec![vec![1, 1]], 2);
        assert!(solve_left(&a, &no).is_none());
    }

    #[test]
    fn rref_transform_is_consistent() {
        let a = FpMat::from_rows(3, vec![vec![1, 2, 0], vec![2, 1, 1]], 3);
        let (r, u, piv) = rref(&a);
        assert_eq!(u.mul(&a), r);
        assert_eq!(piv.len(), 2);
    }
}
