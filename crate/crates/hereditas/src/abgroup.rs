//! Finitely generated abelian groups in invariant-factor form, and the
//! lattice quotients that produce them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::zlin::{self, ZMat};

/// Free rank plus invariant factors `d_1 | d_2 | ...` with each `d_i >= 2`.
/// The representation is unique, so equality is isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgAbGroup {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn zero() -> Self {
        FgAbGroup { free_rank: 0, invariant_factors: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }

    pub fn exponent(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.invariant_factors.last().cloned().unwrap_or_else(BigInt::one))
    }

    /// Direct sum of `n` copies of F_p, as invariant factors.
    pub fn elementary(p: u64, n: usize) -> Self {
        FgAbGroup { free_rank: 0, invariant_factors: vec![BigInt::from(p); n] }
    }
}

impl std::fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The cokernel `Z^rank / rowspace(rels)`.
pub fn cokernel(rank: usize, rels: &ZMat) -> FgAbGroup {
    assert_eq!(rels.cols, rank);
    let (_, d, _) = zlin::snf(rels);
    let mut invariant_factors = Vec::new();
    let mut nonzero = 0;
    for i in 0..d.rows.min(d.cols) {
        let di = &d[(i, i)];
        if di.is_zero() {
            continue;
        }
        nonzero += 1;
        if *di > BigInt::one() {
            invariant_factors.push(di.clone());
        }
    }
    FgAbGroup { free_rank: rank - nonzero, invariant_factors }
}

/// The quotient of the lattice spanned by the rows of `ambient` by the
/// lattice spanned by the rows of `sub` (which must be contained in it).
/// Also returns generator rows in the ambient coordinates together with
/// their orders (`0` meaning infinite), trivial generators dropped.
pub fn lattice_quotient(ambient: &ZMat, sub: &ZMat) -> (FgAbGroup, Vec<(Vec<BigInt>, BigInt)>) {
    assert_eq!(ambient.cols, sub.cols);
    let t = ambient.rows;
    let e = zlin::solve_left(ambient, sub)
        .expect("sub-lattice is not contained in the ambient lattice");
    let (_, d, v) = zlin::snf(&e);
    let vinv = zlin::inverse_unimodular(&v);
    let gen_mat = vinv.mul(ambient);
    let mut invariant_factors = Vec::new();
    let mut free_rank = 0;
    let mut gens = Vec::new();
    for j in 0..t {
        let order = if j < d.rows.min(d.cols) { d[(j, j)].clone() } else { BigInt::zero() };
        if order.is_one() {
            continue;
        }
        if order.is_zero() {
            free_rank += 1;
        } else {
            invariant_factors.push(order.clone());
        }
        gens.push((gen_mat.row(j), order));
    }
    (FgAbGroup { free_rank, invariant_factors }, gens)
}

/// Rows `x` in `Z^m` (HNF basis) whose image `x * map` lies in the lattice
/// spanned by `target_rels`. This is the presentation-level kernel of a map
/// into `Z^c / rowspace(target_rels)`.
pub fn kernel_into_quotient(m: usize, map: &ZMat, target_rels: &ZMat) -> ZMat {
    assert_eq!(map.rows, m);
    assert_eq!(map.cols, target_rels.cols);
    let stacked = map.vstack(target_rels);
    let k = zlin::left_kernel(&stacked);
    let proj = ZMat::from_rows((0..k.rows).map(|i| k.row(i)[..m].to_vec()).collect(), m);
    let (h, _) = zlin::row_hnf(&proj);
    let rows: Vec<Vec<BigInt>> = (0..h.rows)
        .map(|i| h.row(i))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    ZMat::from_rows(rows, m)
}

/// Homology `ker(out) / (im(in) + rels_mid)` at a presented middle term
/// `Z^mid / rowspace(rels_mid)`.
pub fn homology(
    mid: usize,
    rels_mid: &ZMat,
    out_map: &ZMat,
    rels_out: &ZMat,
    in_rows: &ZMat,
) -> FgAbGroup {
    let kernel = kernel_into_quotient(mid, out_map, rels_out);
    let sub = in_rows.vstack(rels_mid);
    let (group, _) = lattice_quotient(&kernel, &sub);
    group
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernel_of_diag() {
        let rels = ZMat::from_i64(&[&[2, 0], &[0, 3]]);
        let g = cokernel(2, &rels);
        assert_eq!(g, FgAbGroup { free_rank: 0, invariant_factors: vec![BigInt::from(6)] });
        assert_eq!(g.to_string(), "Z/6");
    }

    #[test]
    fn cokernel_with_free_part() {
        let rels = ZMat::from_i64(&[&[2, 0, 0]]);
        let g = cokernel(3, &rels);
        assert_eq!(g.free_rank, 2);
        assert_eq!(g.invariant_factors, vec![BigInt::from(2)]);
    }

    #[test]
    fn quotient_of_lattices() {
        // Z^2 / <(2,0),(0,4)> = Z/2 + Z/4
        let ambient = ZMat::identity(2);
        let sub = ZMat::from_i64(&[&[2, 0], &[0, 4]]);
        let (g, gens) = lattice_quotient(&ambient, &sub);
        assert_eq!(g.invariant_factors, vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(gens.len(), 2);
        assert_eq!(g.order(), Some(BigInt::from(8)));
    }

    #[test]
    fn kernel_into_quotient_mod_two() {
        // Z --2--> Z/4: kernel is 2Z.
        let map = ZMat::from_i64(&[&[2]]);
        let rels = ZMat::from_i64(&[&[4]]);
        let k = kernel_into_quotient(1, &map, &rels);
        assert_eq!(k.rows, 1);
        assert_eq!(k[(0, 0)], BigInt::from(2));
    }
}
