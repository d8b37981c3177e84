//! The matrix category of a ring and its splitting certificates: pseudo
//! n-cokernel chains, endomorphism certificates, kernel-splitting
//! certificates and split-cokernel tests, plus bounded ring-level search.
//!
//! A morphism `m -> k` is a `k x m` matrix and composition is the matrix
//! product, so a pseudo cokernel of `A` is a generating matrix `B` of the
//! left kernel: `X * A = 0` iff `X = Y * B` for some `Y`. Exactness of the
//! chain is checked row by row on representable evaluations, which is
//! equivalent to the functor-level statement.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::linear::{self, SandwichEq};
use crate::mat::Mat;
use crate::ring::RingSpec;

/// A pseudo n-cokernel chain `f_1, ..., f_n` after the seed morphism `f`,
/// with composition-zero and exactness witnesses.
#[derive(Clone, Debug)]
pub struct PseudoCokChain {
    pub ring: RingSpec,
    pub f: Mat,
    pub chain: Vec<Mat>,
    /// `witnesses[i]` expresses each left-kernel row of the previous map as
    /// a combination of `chain[i]`'s rows.
    pub witnesses: Vec<Mat>,
}

impl PseudoCokChain {
    /// Re-verifies the chain by multiplication alone: consecutive
    /// composites vanish and every exactness witness multiplies out.
    pub fn verify(&self) -> bool {
        let mut prev = &self.f;
        for (i, step) in self.chain.iter().enumerate() {
            if !step.mul(prev).is_zero() {
                return false;
            }
            let kernel = linear::left_kernel(prev);
            if self.witnesses[i].mul(step) != kernel {
                return false;
            }
            prev = step;
        }
        true
    }
}

/// The pseudo 1-cokernel of `A`: a generating matrix of its left kernel.
pub fn pseudo_cokernel(a: &Mat) -> Mat {
    linear::left_kernel(a)
}

/// Iterates `pseudo_cokernel` n times; always exists over the supported
/// coherent rings.
pub fn pseudo_n_cokernel(a: &Mat, n: usize) -> PseudoCokChain {
    assert!(n >= 1, "chain length must be positive");
    let mut chain = Vec::with_capacity(n);
    let mut witnesses = Vec::with_capacity(n);
    let mut prev = a.clone();
    for _ in 0..n {
        let k = linear::left_kernel(&prev);
        witnesses.push(Mat::identity(a.ring.clone(), k.rows));
        chain.push(k.clone());
        prev = k;
    }
    PseudoCokChain { ring: a.ring.clone(), f: a.clone(), chain, witnesses }
}

/// Finds the endomorphism `alpha` of the (n-1)-st chain object with
/// `f_n * alpha = 0` and `alpha * f_{n-1} = f_{n-1}` (reading `f_0 := f`),
/// as one flattened linear system.
pub fn alpha_solve(chain: &PseudoCokChain) -> Option<Mat> {
    let n = chain.chain.len();
    assert!(n >= 1);
    let f_n = &chain.chain[n - 1];
    let f_prev = if n == 1 { &chain.f } else { &chain.chain[n - 2] };
    let size = f_n.cols;
    assert_eq!(f_prev.rows, size, "shape mismatch within chain");
    let id = Mat::identity(chain.ring.clone(), size);
    let zero = Mat::zero(chain.ring.clone(), f_n.rows, size);
    linear::solve_sandwich(
        &chain.ring,
        size,
        size,
        &[
            SandwichEq { left: f_n, right: &id, target: &zero },
            SandwichEq { left: &id, right: f_prev, target: f_prev },
        ],
    )
}

/// Record of a linear system that admitted no solution, for refutations.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UnsolvableSystem {
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertKind {
    Success,
    Failure,
}

/// Certificate for the splitting behaviour of one matrix: on success the
/// stored matrices re-verify by multiplication (`B*C = 0`, `C*A = A`, or
/// `f_n*alpha = 0`, `alpha*f_{n-1} = f_{n-1}`); on failure the unsolvable
/// system is recorded.
#[derive(Clone, Debug)]
pub struct HereditaryCertificate {
    pub kind: CertKind,
    pub a: Mat,
    pub b: Mat,
    pub c: Option<Mat>,
    pub alpha: Option<Mat>,
    pub refutation: Option<UnsolvableSystem>,
}

impl HereditaryCertificate {
    /// Independent verifier: multiplications and comparisons only.
    pub fn verify(&self) -> bool {
        match self.kind {
            CertKind::Success => {
                if let Some(c) = &self.c {
                    if !self.b.mul(c).is_zero() || c.mul(&self.a) != self.a {
                        return false;
                    }
                }
                if let Some(alpha) = &self.alpha {
                    if !self.b.mul(alpha).is_zero() {
                        return false;
                    }
                    if alpha.mul(&self.a) != self.a {
                        return false;
                    }
                }
                self.c.is_some() || self.alpha.is_some()
            }
            CertKind::Failure => self.refutation.is_some(),
        }
    }
}

/// Kernel-splitting certificate for `A`: computes `B = pseudo_cokernel(A)`
/// and solves `B*C = 0` and `C*A = A` for `C` as one flattened system.
pub fn semi_hereditary_witness(a: &Mat) -> HereditaryCertificate {
    let b = pseudo_cokernel(a);
    let k = a.rows;
    let id = Mat::identity(a.ring.clone(), k);
    let zero = Mat::zero(a.ring.clone(), b.rows, k);
    let c = linear::solve_sandwich(
        &a.ring,
        k,
        k,
        &[
            SandwichEq { left: &b, right: &id, target: &zero },
            SandwichEq { left: &id, right: a, target: a },
        ],
    );
    match c {
        Some(c) => HereditaryCertificate {
            kind: CertKind::Success,
            a: a.clone(),
            b,
            c: Some(c),
            alpha: None,
            refutation: None,
        },
        None => HereditaryCertificate {
            kind: CertKind::Failure,
            a: a.clone(),
            b,
            c: None,
            alpha: None,
            refutation: Some(UnsolvableSystem {
                description: format!("no C with B*C = 0 and C*A = A for A = {a}"),
            }),
        },
    }
}

/// Endomorphism certificate at level `n`: builds the pseudo n-cokernel and
/// solves for `alpha`.
pub fn n_hereditary_witness(a: &Mat, n: usize) -> HereditaryCertificate {
    let chain = pseudo_n_cokernel(a, n);
    let f_n = chain.chain[n - 1].clone();
    let f_prev = if n == 1 { chain.f.clone() } else { chain.chain[n - 2].clone() };
    match alpha_solve(&chain) {
        Some(alpha) => HereditaryCertificate {
            kind: CertKind::Success,
            a: f_prev,
            b: f_n,
            c: None,
            alpha: Some(alpha),
            refutation: None,
        },
        None => HereditaryCertificate {
            kind: CertKind::Failure,
            a: f_prev,
            b: f_n,
            c: None,
            alpha: None,
            refutation: Some(UnsolvableSystem {
                description: format!(
                    "no alpha with f_n*alpha = 0 and alpha*f_(n-1) = f_(n-1) for A = {a}, n = {n}"
                ),
            }),
        },
    }
}

/// Section test: returns `P` with `G * P = I`, or `None`.
pub fn split_cokernel_test(g: &Mat) -> Option<Mat> {
    let id = Mat::identity(g.ring.clone(), g.rows);
    linear::solve_middle_linear(g, &id, &id)
}

/// Size limits for bounded ring-level search.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchBound {
    pub max_rows: usize,
    pub max_cols: usize,
    /// Entry range for sampling over the integers: entries in
    /// `[-entry_bound, entry_bound]`.
    pub entry_bound: i64,
    /// Number of sampled matrices for infinite rings.
    pub samples: usize,
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound { max_rows: 2, max_cols: 2, entry_bound: 10, samples: 200 }
    }
}

/// Verdict of a bounded search over the morphisms of the matrix category.
#[derive(Clone, Debug)]
pub struct RingHereditaryReport {
    pub ring: RingSpec,
    pub n: usize,
    pub exhaustive: bool,
    pub tested: usize,
    pub counterexample: Option<HereditaryCertificate>,
}

impl RingHereditaryReport {
    pub fn verified(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Every matrix over the ring with shape within `bound`, entries
/// exhaustive. Finite rings only.
pub fn enumerate_matrices(ring: &RingSpec, max_rows: usize, max_cols: usize) -> Vec<Mat> {
    let elems = ring.elements();
    let mut out = Vec::new();
    for r in 0..=max_rows {
        for c in 0..=max_cols {
            let cells = r * c;
            let mut stack = vec![Vec::with_capacity(cells)];
            for _ in 0..cells {
                let mut next = Vec::with_capacity(stack.len() * elems.len());
                for pfx in &stack {
                    for e in &elems {
                        let mut v = pfx.clone();
                        v.push(e.clone());
                        next.push(v);
                    }
                }
                stack = next;
            }
            for entries in stack {
                out.push(Mat::new(ring.clone(), r, c, entries));
            }
        }
    }
    out
}

/// A seeded random matrix; entries uniform over the ring (finite case) or
/// over `[-entry_bound, entry_bound]` (integers).
pub fn random_matrix(ring: &RingSpec, rows: usize, cols: usize, entry_bound: i64, rng: &mut StdRng) -> Mat {
    let entries = (0..rows * cols)
        .map(|_| match ring {
            RingSpec::Integers => ring.from_i64(rng.gen_range(-entry_bound..=entry_bound)),
            _ => {
                let elems = ring.elements();
                elems[rng.gen_range(0..elems.len())].clone()
            }
        })
        .collect();
    Mat::new(ring.clone(), rows, cols, entries)
}

/// Bounded verification of the level-n splitting property over a ring:
/// exhaustive over finite rings, seeded sampling over the integers. The
/// verdict is always bound-annotated and never claims the unbounded
/// ring-level statement.
pub fn ring_hereditary_report(
    ring: &RingSpec,
    n: usize,
    bound: &SearchBound,
    seed: u64,
) -> RingHereditaryReport {
    let mut tested = 0;
    let mut counterexample = None;
    let exhaustive = ring.is_finite();
    let candidates: Vec<Mat> = if exhaustive {
        enumerate_matrices(ring, bound.max_rows, bound.max_cols)
    } else {
        let mut rng = StdRng::seed_from_u64(seed);
        (0..bound.samples)
            .map(|_| {
                let r = rng.gen_range(1..=bound.max_rows);
                let c = rng.gen_range(1..=bound.max_cols);
                random_matrix(ring, r, c, bound.entry_bound, &mut rng)
            })
            .collect()
    };
    for a in candidates {
        tested += 1;
        let cert = n_hereditary_witness(&a, n);
        if cert.kind == CertKind::Failure {
            counterexample = Some(cert);
            break;
        }
    }
    RingHereditaryReport { ring: ring.clone(), n, exhaustive, tested, counterexample }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pseudo_cokernel_examples() {
        let z4 = RingSpec::integers_mod(4);
        assert_eq!(
            pseudo_cokernel(&Mat::from_i64(z4.clone(), &[&[2]])),
            Mat::from_i64(z4, &[&[2]])
        );
        let z = RingSpec::Integers;
        assert_eq!(pseudo_cokernel(&Mat::identity(z.clone(), 2)).rows, 0);
        let z6 = RingSpec::integers_mod(6);
        assert_eq!(
            pseudo_cokernel(&Mat::from_i64(z6.clone(), &[&[2]])),
            Mat::from_i64(z6, &[&[3]])
        );
    }

    #[test]
    fn pseudo_n_cokernel_examples() {
        let z4 = RingSpec::integers_mod(4);
        let chain = pseudo_n_cokernel(&Mat::from_i64(z4.clone(), &[&[2]]), 3);
        assert!(chain.chain.iter().all(|m| *m == Mat::from_i64(z4.clone(), &[&[2]])));
        assert!(chain.verify());

        let z = RingSpec::Integers;
        let chain = pseudo_n_cokernel(&Mat::from_i64(z.clone(), &[&[1]]), 2);
        assert!(chain.chain.iter().all(|m| m.rows == 0));
        assert!(chain.verify());

        let chain = pseudo_n_cokernel(&Mat::from_i64(z.clone(), &[&[2], &[3]]), 2);
        assert_eq!(chain.chain[0], Mat::from_i64(z, &[&[3, -2]]));
        assert_eq!(chain.chain[1].rows, 0);
        assert!(chain.verify());
    }

    #[test]
    fn alpha_solve_examples() {
        // Over Z, f = [2]: the chain is empty, alpha = identity works.
        let z = RingSpec::Integers;
        let chain = pseudo_n_cokernel(&Mat::from_i64(z.clone(), &[&[2]]), 1);
        let alpha = alpha_solve(&chain).unwrap();
        assert_eq!(alpha, Mat::identity(z, 1));

        // Over Z/4, f = [2], chain [2]: unsolvable.
        let z4 = RingSpec::integers_mod(4);
        let chain = pseudo_n_cokernel(&Mat::from_i64(z4, &[&[2]]), 1);
        assert!(alpha_solve(&chain).is_none());

        // Over Z/6, f = [2], chain [3]: alpha = [4].
        let z6 = RingSpec::integers_mod(6);
        let chain = pseudo_n_cokernel(&Mat::from_i64(z6.clone(), &[&[2]]), 1);
        assert_eq!(alpha_solve(&chain).unwrap(), Mat::from_i64(z6, &[&[4]]));
    }

    #[test]
    fn semi_hereditary_examples() {
        let z = RingSpec::Integers;
        let cert = semi_hereditary_witness(&Mat::from_i64(z.clone(), &[&[2]]));
        assert_eq!(cert.kind, CertKind::Success);
        assert_eq!(cert.b.rows, 0);
        assert_eq!(cert.c, Some(Mat::identity(z, 1)));
        assert!(cert.verify());

        let z4 = RingSpec::integers_mod(4);
        let cert = semi_hereditary_witness(&Mat::from_i64(z4, &[&[2]]));
        assert_eq!(cert.kind, CertKind::Failure);

        let z6 = RingSpec::integers_mod(6);
        let cert = semi_hereditary_witness(&Mat::from_i64(z6.clone(), &[&[2]]));
        assert_eq!(cert.b, Mat::from_i64(z6.clone(), &[&[3]]));
        assert_eq!(cert.c, Some(Mat::from_i64(z6, &[&[4]])));
        assert!(cert.verify());
    }

    #[test]
    fn split_cokernel_examples() {
        let z = RingSpec::Integers;
        let id = Mat::identity(z, 2);
        assert_eq!(split_cokernel_test(&id), Some(id.clone()));

        let z4 = RingSpec::integers_mod(4);
        assert!(split_cokernel_test(&Mat::from_i64(z4, &[&[2]])).is_none());

        let z6 = RingSpec::integers_mod(6);
        assert!(split_cokernel_test(&Mat::from_i64(z6, &[&[3]])).is_none());
    }

    #[test]
    fn ring_reports() {
        let z4 = RingSpec::integers_mod(4);
        let report = ring_hereditary_report(&z4, 1, &SearchBound { max_rows: 1, max_cols: 1, ..Default::default() }, 0);
        let cert = report.counterexample.expect("Z/4 must fail");
        assert_eq!(cert.a, Mat::from_i64(z4, &[&[2]]));

        let f2 = RingSpec::PrimeField(2);
        let report = ring_hereditary_report(&f2, 1, &SearchBound { max_rows: 2, max_cols: 2, ..Default::default() }, 0);
        assert!(report.verified());

        let z = RingSpec::Integers;
        let report = ring_hereditary_report(
            &z,
            1,
            &SearchBound { max_rows: 3, max_cols: 3, entry_bound: 5, samples: 25 },
            42,
        );
        assert!(report.verified());
    }
}
