//! Acceptance suite: one test per criterion, each checked against an
//! independent brute-force oracle in plain u64 arithmetic where one is
//! required. Every test prints a single pass line; a failed assertion is
//! the fail line.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;

use hereditas::fpmod::{FpModule, Side};
use hereditas::homdual::{
    character, ext1, tensor_group, tor1, verify_ext_tor_duality, verify_flat_injective_duality,
    yoneda_check, DualityPart,
};
use hereditas::job::{demo_spec, run_job};
use hereditas::linear;
use hereditas::mat::Mat;
use hereditas::matcat::{
    alpha_solve, n_hereditary_witness, pseudo_n_cokernel, random_matrix, semi_hereditary_witness,
    split_cokernel_test, CertKind, SearchBound,
};
use hereditas::ring::{a2_path_algebra, RingSpec};
use hereditas::torsionlab::{enumerate_modules, hereditary_consistency_report};

// ---------------------------------------------------------------- oracle
// Plain-u64 matrix arithmetic mod n, independent of the library's
// BigInt/HNF code paths.

type OMat = Vec<Vec<u64>>;

fn omul(n: u64, a: &OMat, b: &OMat) -> OMat {
    let (r, k) = (a.len(), b.len());
    let c = b.first().map_or(0, |row| row.len());
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| (0..k).fold(0u64, |acc, t| (acc + a[i][t] * b[t][j]) % n))
                .collect()
        })
        .collect()
}

fn ovec_mul(n: u64, x: &[u64], a: &OMat, cols: usize) -> Vec<u64> {
    (0..cols)
        .map(|j| x.iter().zip(a).fold(0u64, |acc, (&xi, row)| (acc + xi * row[j]) % n))
        .collect()
}

fn oeq(a: &OMat, b: &OMat) -> bool {
    a == b
}

fn all_vectors(n: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

fn all_matrices(n: u64, rows: usize, cols: usize) -> Vec<OMat> {
    all_vectors(n, rows * cols)
        .into_iter()
        .map(|flat| (0..rows).map(|i| flat[i * cols..(i + 1) * cols].to_vec()).collect())
        .collect()
}

fn oidentity(rows: usize) -> OMat {
    (0..rows).map(|i| (0..rows).map(|j| u64::from(i == j)).collect()).collect()
}

fn to_lib(ring: &RingSpec, m: &OMat, cols: usize) -> Mat {
    let rows = m.iter().map(|r| r.iter().map(|&e| ring.from_i64(e as i64)).collect()).collect();
    Mat::from_rows(ring.clone(), rows, cols)
}

fn from_lib(m: &Mat) -> OMat {
    (0..m.rows)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|e| match e {
                    hereditas::Elem::Int(x) => {
                        let v: i64 = x.try_into().expect("entry fits in i64");
                        v as u64
                    }
                    _ => panic!("scalar entry expected"),
                })
                .collect()
        })
        .collect()
}

/// All vectors in the row span of `basis` (closure under the module
/// operations, by enumerating coefficient vectors).
fn span_set(n: u64, basis: &OMat, cols: usize) -> std::collections::BTreeSet<Vec<u64>> {
    let mut out = std::collections::BTreeSet::new();
    if basis.is_empty() {
        out.insert(vec![0; cols]);
        return out;
    }
    for coef in all_vectors(n, basis.len()) {
        out.insert(ovec_mul(n, &coef, basis, cols));
    }
    out
}

#[test]
fn criterion_1_exhaustive_oracle_equivalence() {
    for n in [2u64, 3, 4, 5, 6, 8] {
        let ring = RingSpec::IntegersMod(BigInt::from(n));
        for rows in 0..=2usize {
            for cols in 0..=2usize {
                for a in all_matrices(n, rows, cols) {
                    let a_lib = to_lib(&ring, &a, cols);

                    // left_kernel: the library rows generate exactly
                    // { x : x*A = 0 }.
                    let kernel_set: std::collections::BTreeSet<Vec<u64>> = all_vectors(n, rows)
                        .into_iter()
                        .filter(|x| ovec_mul(n, x, &a, cols).iter().all(|&e| e == 0))
                        .collect();
                    let k_lib = from_lib(&linear::left_kernel(&a_lib));
                    for row in &k_lib {
                        assert!(kernel_set.contains(row), "kernel row fails x*A = 0");
                    }
                    assert_eq!(span_set(n, &k_lib, rows), kernel_set, "kernel span mismatch");

                    // solve_left against every single-row target.
                    for b in all_vectors(n, cols) {
                        let exists =
                            all_vectors(n, rows).iter().any(|x| ovec_mul(n, x, &a, cols) == b);
                        let b_lib = to_lib(&ring, &vec![b.clone()], cols);
                        match linear::solve_left(&a_lib, &b_lib) {
                            Some(x) => {
                                assert!(exists, "n={n} a={a:?} b={b:?} x={x}");
                                assert_eq!(x.mul(&a_lib), b_lib, "solve_left does not verify");
                            }
                            None => assert!(!exists, "solve_left missed a solution"),
                        }
                    }

                    // is_projective: exhaustive search for U with A*U*A = A.
                    let u_exists = all_matrices(n, cols, rows)
                        .iter()
                        .any(|u| oeq(&omul(n, &omul(n, &a, u), &a), &a));
                    let module = FpModule::new(ring.clone(), Side::Left, a_lib.clone());
                    match module.is_projective() {
                        Some(u) => {
                            assert!(u_exists);
                            assert_eq!(a_lib.mul(&u).mul(&a_lib), a_lib);
                        }
                        None => assert!(!u_exists, "is_projective missed a witness"),
                    }

                    // semi_hereditary_witness and alpha_solve: exhaustive
                    // search for C with x*C = 0 on the kernel and C*A = A
                    // (for a 1-chain the alpha system is the same system).
                    let c_exists = all_matrices(n, rows, rows).iter().any(|c| {
                        oeq(&omul(n, c, &a), &a)
                            && kernel_set.iter().all(|x| ovec_mul(n, x, c, rows).iter().all(|&e| e == 0))
                    });
                    let cert = semi_hereditary_witness(&a_lib);
                    assert_eq!(cert.kind == CertKind::Success, c_exists, "C-certificate verdict");
                    assert!(cert.verify());
                    let chain = pseudo_n_cokernel(&a_lib, 1);
                    match alpha_solve(&chain) {
                        Some(alpha) => {
                            assert!(c_exists);
                            assert!(chain.chain[0].mul(&alpha).is_zero());
                            assert_eq!(alpha.mul(&a_lib), a_lib);
                        }
                        None => assert!(!c_exists, "alpha_solve missed a witness"),
                    }

                    // split_cokernel_test: exhaustive search for a section.
                    let p_exists = all_matrices(n, cols, rows)
                        .iter()
                        .any(|p| oeq(&omul(n, &a, p), &oidentity(rows)));
                    match split_cokernel_test(&a_lib) {
                        Some(p) => {
                            assert!(p_exists);
                            assert_eq!(a_lib.mul(&p), Mat::identity(ring.clone(), rows));
                        }
                        None => assert!(!p_exists, "split_cokernel_test missed a section"),
                    }
                }
            }
        }
    }
    println!("criterion 1 (exhaustive oracle equivalence, Z/n for n in 2,3,4,5,6,8): PASS");
}

#[test]
fn criterion_2_kernel_splitting_ground_truth() {
    // Z: 200 seeded random matrices up to 4x4, entries |a| <= 10.
    let z = RingSpec::Integers;
    let mut rng = StdRng::seed_from_u64(2);
    for _ in 0..200 {
        use rand::Rng;
        let r = rng.gen_range(1..=4);
        let c = rng.gen_range(1..=4);
        let a = random_matrix(&z, r, c, 10, &mut rng);
        let cert = semi_hereditary_witness(&a);
        assert_eq!(cert.kind, CertKind::Success, "Z must certify {a}");
        assert!(cert.verify());
    }

    // Z/4: refutation on A = [2].
    let z4 = RingSpec::integers_mod(4);
    let a = Mat::from_rows(z4.clone(), vec![vec![z4.from_i64(2)]], 1);
    let cert = semi_hereditary_witness(&a);
    assert_eq!(cert.kind, CertKind::Failure);
    assert!(cert.refutation.is_some());

    // Z/6: (B, C) = ([3], [4]) on A = [2].
    let z6 = RingSpec::integers_mod(6);
    let a = Mat::from_rows(z6.clone(), vec![vec![z6.from_i64(2)]], 1);
    let cert = semi_hereditary_witness(&a);
    assert_eq!(cert.kind, CertKind::Success);
    assert_eq!(format!("{}", cert.b), "[3]");
    assert_eq!(format!("{}", cert.c.clone().unwrap()), "[4]");

    // F_2: exhaustive up to 3x3, all succeed.
    let f2 = RingSpec::PrimeField(2);
    for a in hereditas::matcat::enumerate_matrices(&f2, 3, 3) {
        let cert = semi_hereditary_witness(&a);
        assert_eq!(cert.kind, CertKind::Success, "field must certify {a}");
        assert!(cert.verify());
    }
    println!("criterion 2 (kernel-splitting ground truth on Z, Z/4, Z/6, F_2): PASS");
}

#[test]
fn criterion_3_cross_certificate_check() {
    let z6 = RingSpec::integers_mod(6);
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..50 {
        use rand::Rng;
        let r = rng.gen_range(1..=3);
        let c = rng.gen_range(1..=3);
        let a = random_matrix(&z6, r, c, 0, &mut rng);
        let c_cert = semi_hereditary_witness(&a);
        let a_cert = n_hereditary_witness(&a, 1);
        assert_eq!(c_cert.kind, a_cert.kind, "certificate verdicts differ on {a}");
        if c_cert.kind == CertKind::Success {
            // reconstruct alpha = I - h*f_1 from the C-route
            let b = &c_cert.b;
            let cc = c_cert.c.as_ref().unwrap();
            let id = Mat::identity(z6.clone(), a.rows);
            let target = id.sub(cc);
            let h = linear::solve_left(b, &target).expect("I - C lies in the kernel row span");
            let alpha = id.sub(&h.mul(b));
            assert!(b.mul(&alpha).is_zero(), "f_1 * alpha != 0");
            assert_eq!(alpha.mul(&a), a, "alpha * f != f");
        }
    }
    println!("criterion 3 (Thm 5.5 cross-certificate agreement over Z/6): PASS");
}

fn duality_corpus(ring: &RingSpec) -> Vec<FpModule> {
    enumerate_modules(ring, Side::Left, 2, 2)
}

#[test]
fn criterion_4_duality_suite() {
    for ring in [RingSpec::integers_mod(4), RingSpec::integers_mod(6)] {
        let corpus = duality_corpus(&ring);
        for n_mod in &corpus {
            let dual = character(n_mod).expect("finite module").dual;
            let dual = FpModule { side: Side::Left, ..dual };
            for f in &corpus {
                let e = ext1(f, &dual);
                let t = tor1(n_mod, f);
                assert_eq!(e, t, "part (i) fails: F={f:?} N={n_mod:?}");
                let tens = tensor_group(f, &dual);
                let hom = hereditas::fpmod::hom_module(f, n_mod).group;
                assert_eq!(tens, hom, "part (ii) fails: F={f:?} N={n_mod:?}");
                let t2 = tor1(f, &dual);
                let e2 = ext1(f, n_mod);
                assert_eq!(t2, e2, "part (iii) fails: F={f:?} N={n_mod:?}");
            }
        }
        // exercise the packaged checker on a nontrivial pair
        let two = FpModule::cyclic(ring.clone(), Side::Left, ring.from_i64(2));
        for part in [DualityPart::ExtTor, DualityPart::TensorHom, DualityPart::TorExt] {
            assert!(verify_ext_tor_duality(&two, &two, part).unwrap().holds());
        }
    }
    println!("criterion 4 (Prop A.7 duality suite over Z/4 and Z/6): PASS");
}

#[test]
fn criterion_5_membership_equivalence() {
    for ring in [RingSpec::integers_mod(4), RingSpec::integers_mod(6)] {
        let corpus = duality_corpus(&ring);
        for n_mod in &corpus {
            let rec = verify_flat_injective_duality(n_mod, &corpus).unwrap();
            assert!(rec.holds(), "violations for N={n_mod:?}: {:?}", rec.violations);
            assert_eq!(rec.checked, corpus.len());
        }
    }
    println!("criterion 5 (Prop 4.8 (i) flat/injective membership equivalence): PASS");
}

#[test]
fn criterion_6_tri_consistency() {
    let bound = SearchBound { max_rows: 2, max_cols: 2, entry_bound: 10, samples: 150 };

    // Z/4: all three fail, witnesses cross-reference A=[2] / module Z/2.
    let rep = hereditary_consistency_report(&RingSpec::integers_mod(4), 1, &bound, 7).unwrap();
    assert!(rep.consistent() && !rep.all_pass());
    let cert = rep.hereditary.counterexample.as_ref().unwrap();
    assert_eq!(format!("{}", cert.a), "[2]");
    let (m, _) = rep.pd.counterexample.as_ref().unwrap();
    assert_eq!(m.underlying_group().order(), Some(BigInt::from(2)));
    let cex = rep.closure.counterexample.as_ref().unwrap();
    assert_eq!(cex.produced.underlying_group().order(), Some(BigInt::from(2)));
    assert!(cex.reverify(hereditas::torsionlab::TorsionClass::ExtVanishing));

    // Z/6, F_2: all pass.
    for ring in [RingSpec::integers_mod(6), RingSpec::PrimeField(2)] {
        let rep = hereditary_consistency_report(&ring, 1, &bound, 7).unwrap();
        assert!(rep.consistent() && rep.all_pass(), "{ring}");
    }

    // Z at a sampled bound: all pass.
    let zbound = SearchBound { max_rows: 3, max_cols: 3, entry_bound: 6, samples: 60 };
    let rep = hereditary_consistency_report(&RingSpec::Integers, 1, &zbound, 7).unwrap();
    assert!(rep.consistent() && rep.all_pass());
    println!("criterion 6 (tri-consistency on Z/4, Z/6, F_2, Z): PASS");
}

#[test]
fn criterion_7_yoneda_on_path_algebra() {
    let ring = a2_path_algebra(2);
    let e = |i: usize| {
        let mut v = vec![0u64; 3];
        v[i] = 1;
        hereditas::Elem::Alg(v)
    };
    let proj = |i: usize| {
        let em = Mat::from_rows(ring.clone(), vec![vec![e(i)]], 1);
        FpModule::new(ring.clone(), Side::Left, linear::left_kernel(&em))
    };
    let modules = vec![
        FpModule::free(ring.clone(), Side::Left, 1), // A
        proj(0),                                     // A e_1
        proj(1),                                     // A e_2
        FpModule::zero(ring.clone(), Side::Left),    // 0
    ];
    for m in &modules {
        for idx in [0usize, 1] {
            let rec = yoneda_check(idx, m).unwrap();
            assert!(rec.holds(), "Lemma A.6 fails at e_{idx} on {m:?}: {rec:?}");
        }
    }
    println!("criterion 7 (Lemma A.6 Yoneda/coYoneda on the A_2 path algebra): PASS");
}

#[test]
fn criterion_8_character_involution_and_exactness() {
    use rand::Rng;
    for ring in [RingSpec::integers_mod(4), RingSpec::integers_mod(6)] {
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..100 {
            let r = rng.gen_range(0..=3);
            let g = rng.gen_range(1..=3);
            let m = FpModule::new(ring.clone(), Side::Left, random_matrix(&ring, r, g, 0, &mut rng));
            let c = character(&m).unwrap();
            assert!(c.verify_involution(), "involution fails on {m:?}");

            // A short exact sequence 0 -> K -> M -> Q -> 0 from a random
            // quotient; dualizing must preserve the order equation
            // |K| * |Q| = |M|.
            let extra = random_matrix(&ring, 1, g, 0, &mut rng);
            let q = FpModule::new(ring.clone(), Side::Left, m.relations.vstack(&extra));
            let stacked = extra.vstack(&m.relations);
            let ker = linear::left_kernel(&stacked);
            let sub_rels = Mat::from_rows(
                ring.clone(),
                (0..ker.rows).map(|i| vec![ker.at(i, 0).clone()]).collect(),
                1,
            );
            let k = FpModule::new(ring.clone(), Side::Left, sub_rels);
            let (om, ok_, oq) = (
                m.underlying_group().order().unwrap(),
                k.underlying_group().order().unwrap(),
                q.underlying_group().order().unwrap(),
            );
            assert_eq!(&ok_ * &oq, om, "SES order count fails");
            let dm = character(&m).unwrap().dual.underlying_group().order().unwrap();
            let dk = character(&k).unwrap().dual.underlying_group().order().unwrap();
            let dq = character(&q).unwrap().dual.underlying_group().order().unwrap();
            assert_eq!(dm, om, "|M+| != |M|");
            assert_eq!(&dk * &dq, dm, "dualized SES order count fails");
        }
    }
    println!("criterion 8 (character involution and exactness over Z/4, Z/6): PASS");
}

#[test]
fn criterion_9_determinism() {
    for name in ["z", "z4", "z6", "f2", "a2-quiver"] {
        let job = demo_spec(name).unwrap();
        let a = serde_json::to_vec_pretty(&run_job(&job).unwrap()).unwrap();
        let b = serde_json::to_vec_pretty(&run_job(&job).unwrap()).unwrap();
        assert_eq!(a, b, "demo {name} report is not byte-identical");
    }
    println!("criterion 9 (byte-identical demo reports): PASS");
}
