//! Ring arithmetic for the supported coefficient rings.
//!
//! Four ring families are supported: the integers, integer residue rings,
//! prime fields, and finite-dimensional algebras over a prime field given by
//! structure constants together with a complete orthogonal idempotent set.
//! Elements are kept in canonical form at all times (residues reduced,
//! algebra coordinates reduced mod p), so equality of representations is
//! equality in the ring.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;

/// Structure data of a finite-dimensional algebra over F_p.
///
/// `table[i][j][s]` is the coefficient of basis element `s` in the product
/// `b_i * b_j`. Paths in a path algebra compose left to right: an arrow
/// `1 -> 2` lives in `e_2 * A * e_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub p: u64,
    pub dim: usize,
    pub table: Vec<Vec<Vec<u64>>>,
    /// Indices of basis elements forming the complete orthogonal idempotent set.
    pub idempotents: Vec<usize>,
    pub basis_names: Vec<String>,
}

impl AlgebraData {
    /// Checks associativity on all basis triples, orthogonality of the
    /// idempotents and that their sum is a two-sided identity.
    pub fn validate(&self) -> Result<(), Error> {
        let d = self.dim;
        if d == 0 {
            return Err(Error::BadRing("algebra dimension must be positive".into()));
        }
        if self.p < 2 || !is_prime(self.p) {
            return Err(Error::BadRing(format!("{} is not prime", self.p)));
        }
        if self.table.len() != d
            || self.table.iter().any(|r| r.len() != d)
            || self
                .table
                .iter()
                .any(|r| r.iter().any(|c| c.len() != d || c.iter().any(|&x| x >= self.p)))
        {
            return Err(Error::BadRing("structure-constant table has wrong shape".into()));
        }
        if self.basis_names.len() != d {
            return Err(Error::BadRing("basis name list has wrong length".into()));
        }
        if self.idempotents.is_empty() || self.idempotents.iter().any(|&i| i >= d) {
            return Err(Error::BadRing("idempotent index out of range".into()));
        }
        // Associativity on basis triples.
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let ij_k = self.mul(&self.mul(&basis_vec(d, i), &basis_vec(d, j)), &basis_vec(d, k));
                    let i_jk = self.mul(&basis_vec(d, i), &self.mul(&basis_vec(d, j), &basis_vec(d, k)));
                    if ij_k != i_jk {
                        return Err(Error::BadRing(format!(
                            "multiplication is not associative at basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        // Orthogonal idempotents summing to a two-sided identity.
        for (a, &i) in self.idempotents.iter().enumerate() {
            for (b, &j) in self.idempotents.iter().enumerate() {
                let prod = self.mul(&basis_vec(d, i), &basis_vec(d, j));
                let expect = if a == b { basis_vec(d, i) } else { vec![0; d] };
                if prod != expect {
                    return Err(Error::BadRing(format!(
                        "idempotents {a} and {b} are not orthogonal idempotents"
                    )));
                }
            }
        }
        let unit = self.unit();
        for t in 0..d {
            let b = basis_vec(d, t);
            if self.mul(&unit, &b) != b || self.mul(&b, &unit) != b {
                return Err(Error::BadRing("idempotent sum is not a two-sided identity".into()));
            }
        }
        Ok(())
    }

    pub fn unit(&self) -> Vec<u64> {
        let mut u = vec![0u64; self.dim];
        for &i in &self.idempotents {
            u[i] = (u[i] + 1) % self.p;
        }
        u
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let d = self.dim;
        let mut out = vec![0u64; d];
        for i in 0..d {
            if a[i] == 0 {
                continue;
            }
            for j in 0..d {
                if b[j] == 0 {
                    continue;
                }
                let coef = (a[i] as u128 * b[j] as u128 % self.p as u128) as u64;
                if coef == 0 {
                    continue;
                }
                for s in 0..d {
                    let t = self.table[i][j][s];
                    if t != 0 {
                        out[s] = ((out[s] as u128 + coef as u128 * t as u128) % self.p as u128) as u64;
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `a`: column `t` holds the
    /// coordinates of `a * b_t`.
    pub fn left_mul_matrix(&self, a: &[u64]) -> Vec<Vec<u64>> {
        (0..self.dim)
            .map(|s| (0..self.dim).map(|t| self.mul(a, &basis_vec(self.dim, t))[s]).collect())
            .collect()
    }

    /// Matrix of right multiplication by `a`: column `t` holds the
    /// coordinates of `b_t * a`.
    pub fn right_mul_matrix(&self, a: &[u64]) -> Vec<Vec<u64>> {
        (0..self.dim)
            .map(|s| (0..self.dim).map(|t| self.mul(&basis_vec(self.dim, t), a)[s]).collect())
            .collect()
    }
}

pub fn basis_vec(dim: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0u64; dim];
    v[i] = 1;
    v
}

/// A concrete computable coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Integers,
    IntegersMod(BigInt),
    PrimeField(u64),
    FinDimAlgebra(Arc<AlgebraData>),
}

/// A ring element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Int(BigInt),
    Alg(Vec<u64>),
}

impl RingSpec {
    pub fn integers_mod(n: i64) -> Self {
        RingSpec::IntegersMod(BigInt::from(n))
    }

    pub fn validate(&self) -> Result<(), Error> {
        match self {
            RingSpec::Integers => Ok(()),
            RingSpec::IntegersMod(n) => {
                if *n < BigInt::from(2) {
                    Err(Error::BadRing("modulus must be at least 2".into()))
                } else {
                    Ok(())
                }
            }
            RingSpec::PrimeField(p) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(Error::BadRing(format!("{p} is not prime")))
                }
            }
            RingSpec::FinDimAlgebra(alg) => alg.validate(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            RingSpec::FinDimAlgebra(alg) => {
                let d = alg.dim;
                (0..d).all(|i| {
                    (0..d).all(|j| {
                        alg.mul(&basis_vec(d, i), &basis_vec(d, j))
                            == alg.mul(&basis_vec(d, j), &basis_vec(d, i))
                    })
                })
            }
            _ => true,
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, RingSpec::Integers)
    }

    /// The opposite ring. Right modules are handled as left modules over it.
    pub fn opposite(&self) -> RingSpec {
        match self {
            RingSpec::FinDimAlgebra(alg) => {
                let d = alg.dim;
                let table = (0..d)
                    .map(|i| (0..d).map(|j| alg.table[j][i].clone()).collect())
                    .collect();
                RingSpec::FinDimAlgebra(Arc::new(AlgebraData {
                    p: alg.p,
                    dim: alg.dim,
                    table,
                    idempotents: alg.idempotents.clone(),
                    basis_names: alg.basis_names.clone(),
                }))
            }
            other => other.clone(),
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            RingSpec::FinDimAlgebra(alg) => Elem::Alg(vec![0; alg.dim]),
            _ => Elem::Int(BigInt::zero()),
        }
    }

    pub fn one(&self) -> Elem {
        match self {
            RingSpec::FinDimAlgebra(alg) => Elem::Alg(alg.unit()),
            _ => self.canon_int(BigInt::one()),
        }
    }

    pub fn from_i64(&self, x: i64) -> Elem {
        match self {
            RingSpec::FinDimAlgebra(alg) => {
                // x copies of the identity.
                let mut acc = vec![0u64; alg.dim];
                let r = x.rem_euclid(alg.p as i64) as u64;
                for &i in &alg.idempotents {
                    acc[i] = (acc[i] + r) % alg.p;
                }
                Elem::Alg(acc)
            }
            _ => self.canon_int(BigInt::from(x)),
        }
    }

    fn modulus(&self) -> Option<BigInt> {
        match self {
            RingSpec::Integers => None,
            RingSpec::IntegersMod(n) => Some(n.clone()),
            RingSpec::PrimeField(p) => Some(BigInt::from(*p)),
            RingSpec::FinDimAlgebra(_) => None,
        }
    }

    pub fn canon_int(&self, x: BigInt) -> Elem {
        match self.modulus() {
            None => Elem::Int(x),
            Some(n) => Elem::Int(x.mod_floor(&n)),
        }
    }

    pub fn canon(&self, e: Elem) -> Elem {
        match e {
            Elem::Int(x) => self.canon_int(x),
            Elem::Alg(v) => {
                let alg = self.algebra();
                Elem::Alg(v.iter().map(|&c| c % alg.p).collect())
            }
        }
    }

    pub fn algebra(&self) -> &AlgebraData {
        match self {
            RingSpec::FinDimAlgebra(alg) => alg,
            _ => panic!("ring is not a finite-dimensional algebra"),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => self.canon_int(x + y),
            (Elem::Alg(x), Elem::Alg(y)) => {
                let p = self.algebra().p;
                Elem::Alg(x.iter().zip(y).map(|(&u, &v)| (u + v) % p).collect())
            }
            _ => panic!("mixed element kinds"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Int(x) => self.canon_int(-x),
            Elem::Alg(x) => {
                let p = self.algebra().p;
                Elem::Alg(x.iter().map(|&u| (p - u % p) % p).collect())
            }
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => self.canon_int(x * y),
            (Elem::Alg(x), Elem::Alg(y)) => Elem::Alg(self.algebra().mul(x, y)),
            _ => panic!("mixed element kinds"),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(x) => x.is_zero(),
            Elem::Alg(v) => v.iter().all(|&c| c == 0),
        }
    }

    /// All ring elements, for finite rings small enough to enumerate.
    pub fn elements(&self) -> Vec<Elem> {
        match self {
            RingSpec::Integers => panic!("cannot enumerate an infinite ring"),
            RingSpec::IntegersMod(n) => {
                let n: u64 = n.try_into().expect("modulus too large to enumerate");
                (0..n).map(|x| Elem::Int(BigInt::from(x))).collect()
            }
            RingSpec::PrimeField(p) => (0..*p).map(|x| Elem::Int(BigInt::from(x))).collect(),
            RingSpec::FinDimAlgebra(alg) => {
                let mut out = vec![vec![0u64; alg.dim]];
                for i in 0..alg.dim {
                    let mut next = Vec::with_capacity(out.len() * alg.p as usize);
                    for v in &out {
                        for c in 0..alg.p {
                            let mut w = v.clone();
                            w[i] = c;
                            next.push(w);
                        }
                    }
                    out = next;
                }
                out.into_iter().map(Elem::Alg).collect()
            }
        }
    }

    /// Number of elements of the ring, when finite and small.
    pub fn size(&self) -> Option<u64> {
        match self {
            RingSpec::Integers => None,
            RingSpec::IntegersMod(n) => n.try_into().ok(),
            RingSpec::PrimeField(p) => Some(*p),
            RingSpec::FinDimAlgebra(alg) => {
                (alg.p as u128).checked_pow(alg.dim as u32).and_then(|x| x.try_into().ok())
            }
        }
    }

    pub fn fmt_elem(&self, e: &Elem) -> String {
        match e {
            Elem::Int(x) => x.to_string(),
            Elem::Alg(v) => {
                let alg = self.algebra();
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| {
                        if c == 1 {
                            alg.basis_names[i].clone()
                        } else {
                            format!("{c}*{}", alg.basis_names[i])
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(n) => write!(f, "Z/{n}"),
            RingSpec::PrimeField(p) => write!(f, "F_{p}"),
            RingSpec::FinDimAlgebra(alg) => {
                write!(f, "algebra(dim {}, F_{})", alg.dim, alg.p)
            }
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The path algebra of the quiver `1 -> 2` over F_p, basis `{e1, e2, a}`
/// with `a` in `e_2 * A * e_1`.
pub fn a2_path_algebra(p: u64) -> RingSpec {
    let d = 3;
    let mut table = vec![vec![vec![0u64; d]; d]; d];
    // Indices: 0 = e1, 1 = e2, 2 = a.
    table[0][0][0] = 1; // e1 e1 = e1
    table[1][1][1] = 1; // e2 e2 = e2
    table[2][0][2] = 1; // a e1 = a
    table[1][2][2] = 1; // e2 a = a
    RingSpec::FinDimAlgebra(Arc::new(AlgebraData {
        p,
        dim: d,
        table,
        idempotents: vec![0, 1],
        basis_names: vec!["e1".into(), "e2".into(), "a".into()],
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_arithmetic_is_canonical() {
        let r = RingSpec::integers_mod(6);
        let a = r.from_i64(4);
        let b = r.from_i64(5);
        assert_eq!(r.mul(&a, &b), r.from_i64(2));
        assert_eq!(r.add(&a, &b), r.from_i64(3));
        assert_eq!(r.neg(&a), r.from_i64(2));
    }

    #[test]
    fn a2_path_algebra_is_valid() {
        let ring = a2_path_algebra(2);
        assert!(ring.validate().is_ok());
        assert!(!ring.is_commutative());
        let alg = ring.algebra();
        let e1 = basis_vec(3, 0);
        let a = basis_vec(3, 2);
        assert_eq!(alg.mul(&a, &e1), a);
        assert_eq!(alg.mul(&e1, &a), vec![0, 0, 0]);
        assert_eq!(ring.size(), Some(8));
    }

    #[test]
    fn opposite_ring_reverses_products() {
        let ring = a2_path_algebra(2);
        let op = ring.opposite();
        let e2 = Elem::Alg(basis_vec(3, 1));
        let a = Elem::Alg(basis_vec(3, 2));
        assert_eq!(op.mul(&e2, &a), ring.mul(&a, &e2));
        assert_eq!(op.mul(&a, &e2), ring.mul(&e2, &a));
        assert!(op.validate().is_ok());
    }

    #[test]
    fn bad_rings_are_rejected() {
        assert!(RingSpec::PrimeField(6).validate().is_err());
        assert!(RingSpec::integers_mod(1).validate().is_err());
    }
}
