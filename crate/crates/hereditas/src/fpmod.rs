//! Finitely presented modules via presentation matrices: syzygies, partial
//! free resolutions, projectivity and projective-dimension tests, and Hom
//! groups.
//!
//! Elements are row vectors, relations are rows, and module maps act by
//! right multiplication on rows; this convention is fixed globally. A right
//! module over a noncommutative algebra is handled as a left module over
//! the opposite algebra, so every solver runs in the left convention.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abgroup::{self, FgAbGroup};
use crate::fplin::{self, FpMat};
use crate::linear::{self, SandwichEq};
use crate::mat::Mat;
use crate::ring::{basis_vec, Elem, RingSpec};
use crate::zlin::ZMat;

/// Resolution length cap for projective-dimension probing; only the first
/// syzygy matters for every pd <= 1 decision, so the cap is generous.
pub const DEFAULT_PD_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A finitely presented module: the quotient of the free module of rank
/// `generators` by the row space of `relations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule {
    pub ring: RingSpec,
    pub side: Side,
    pub generators: usize,
    pub relations: Mat,
}

impl FpModule {
    pub fn new(ring: RingSpec, side: Side, relations: Mat) -> Self {
        assert_eq!(relations.ring, ring, "ring mismatch");
        FpModule { ring, side, generators: relations.cols, relations }
    }

    pub fn free(ring: RingSpec, side: Side, rank: usize) -> Self {
        let relations = Mat::zero(ring.clone(), 0, rank);
        FpModule { ring, side, generators: rank, relations }
    }

    pub fn zero(ring: RingSpec, side: Side) -> Self {
        FpModule::free(ring, side, 0)
    }

    /// Cyclic module `R / (a)`.
    pub fn cyclic(ring: RingSpec, side: Side, a: Elem) -> Self {
        let relations = Mat::from_rows(ring.clone(), vec![vec![a]], 1);
        FpModule { ring, side, generators: 1, relations }
    }

    pub fn is_free_presentation(&self) -> bool {
        self.relations.rows == 0 || self.relations.is_zero()
    }

    /// Ring in which all row-convention solving happens: the opposite
    /// algebra for right modules over a noncommutative ring.
    pub fn conv_ring(&self) -> RingSpec {
        if self.side == Side::Right && !self.ring.is_commutative() {
            self.ring.opposite()
        } else {
            self.ring.clone()
        }
    }

    pub fn conv_relations(&self) -> Mat {
        self.relations.with_ring(self.conv_ring())
    }

    /// The syzygy module: generators are the relations of `self`, relations
    /// are the relations among them.
    pub fn syzygy(&self) -> FpModule {
        let rels = linear::left_kernel(&self.conv_relations());
        FpModule {
            ring: self.ring.clone(),
            side: self.side,
            generators: self.relations.rows,
            relations: rels.with_ring(self.ring.clone()),
        }
    }

    /// Splitting witness `U` with `A * U * A = A` for `A = relations`,
    /// present iff the module is projective (then `I - U * A` projects onto
    /// a complement of the relation submodule).
    pub fn is_projective(&self) -> Option<Mat> {
        let a = self.conv_relations();
        let u = linear::solve_sandwich(
            &a.ring,
            a.cols,
            a.rows,
            &[SandwichEq { left: &a, right: &a, target: &a }],
        )?;
        Some(u.with_ring(self.ring.clone()))
    }

    /// Underlying abelian group, in invariant-factor form.
    pub fn underlying_group(&self) -> FgAbGroup {
        match &self.ring {
            RingSpec::Integers | RingSpec::IntegersMod(_) => {
                abgroup::cokernel(self.generators, &self.group_relations_z())
            }
            RingSpec::PrimeField(p) => {
                let rank = fplin::rank(&linear::mat_rows_to_fp(&self.conv_relations()));
                FgAbGroup::elementary(*p, self.generators - rank)
            }
            RingSpec::FinDimAlgebra(alg) => {
                let sub = self.flat_submodule_rows();
                FgAbGroup::elementary(alg.p, self.generators * alg.dim - sub.rows)
            }
        }
    }

    /// Integer relation lattice of the underlying abelian group, for scalar
    /// rings: lifted relations plus the modulus on each generator.
    pub(crate) fn group_relations_z(&self) -> ZMat {
        let r = self.relations.to_zmat();
        match &self.ring {
            RingSpec::Integers => r,
            RingSpec::IntegersMod(n) => {
                let mut ni = ZMat::zero(self.generators, self.generators);
                for i in 0..self.generators {
                    ni[(i, i)] = n.clone();
                }
                r.vstack(&ni)
            }
            RingSpec::PrimeField(p) => {
                let mut ni = ZMat::zero(self.generators, self.generators);
                for i in 0..self.generators {
                    ni[(i, i)] = BigInt::from(*p);
                }
                r.vstack(&ni)
            }
            RingSpec::FinDimAlgebra(_) => panic!("algebra modules have no scalar lift"),
        }
    }

    /// F_p basis (rref) of the flattened relation submodule, for algebra
    /// modules, in the left convention of `conv_ring`.
    pub(crate) fn flat_submodule_rows(&self) -> FpMat {
        let ring = self.conv_ring();
        let alg = ring.algebra().clone();
        let rels = self.conv_relations();
        let mut rows = Vec::new();
        for i in 0..rels.rows {
            for u in 0..alg.dim {
                let scalar = Elem::Alg(basis_vec(alg.dim, u));
                let scaled: Vec<Elem> =
                    rels.row(i).iter().map(|e| ring.mul(&scalar, e)).collect();
                let m = Mat::from_rows(ring.clone(), vec![scaled], rels.cols);
                rows.push(linear::mat_rows_to_fp(&m).row(0));
            }
        }
        let f = FpMat::from_rows(alg.p, rows, self.generators * alg.dim);
        fplin::row_space_basis(&f)
    }

    /// Canonical relations matrix generating the same row space; equal
    /// canonical forms mean equal quotient modules.
    pub fn canonical_relations(&self) -> Mat {
        match &self.ring {
            RingSpec::Integers => {
                let (h, _) = crate::zlin::row_hnf(&self.relations.to_zmat());
                let rows: Vec<Vec<BigInt>> = (0..h.rows)
                    .map(|i| h.row(i))
                    .filter(|r| r.iter().any(|x| !x.is_zero()))
                    .collect();
                Mat::from_zmat(self.ring.clone(), &ZMat::from_rows(rows, self.generators))
            }
            RingSpec::IntegersMod(n) => {
                let (h, _) = crate::zlin::row_hnf(&self.group_relations_z());
                let rows: Vec<Vec<BigInt>> = (0..h.rows)
                    .map(|i| h.row(i))
                    .filter(|r| r.iter().any(|x| !(x % n).is_zero()))
                    .collect();
                Mat::from_zmat(self.ring.clone(), &ZMat::from_rows(rows, self.generators))
            }
            RingSpec::PrimeField(_) => {
                let b = fplin::row_space_basis(&linear::mat_rows_to_fp(&self.conv_relations()));
                linear::fp_rows_to_mat(&self.ring, &b, self.generators)
                    .with_ring(self.ring.clone())
            }
            RingSpec::FinDimAlgebra(_) => {
                let b = self.flat_submodule_rows();
                linear::fp_rows_to_mat(&self.conv_ring(), &b, self.generators)
                    .with_ring(self.ring.clone())
            }
        }
    }
}

/// An explicit `n`-presentation by finite-rank free modules:
/// `free(k_n) -> ... -> free(k_1) -> free(k_0) -> M -> 0` with
/// `maps = [d_1, ..., d_n]` and exactness witnesses expressing each kernel
/// row as a combination of the next map's rows.
#[derive(Clone, Debug)]
pub struct NPresentation {
    pub module: FpModule,
    pub maps: Vec<Mat>,
    pub witnesses: Vec<Mat>,
}

impl NPresentation {
    /// Checks all consecutive composites vanish and all witnesses multiply
    /// out, by plain matrix arithmetic.
    pub fn verify(&self) -> bool {
        let ring = self.module.conv_ring();
        for i in 0..self.maps.len().saturating_sub(1) {
            let d_next = self.maps[i + 1].with_ring(ring.clone());
            let d_i = self.maps[i].with_ring(ring.clone());
            if !d_next.mul(&d_i).is_zero() {
                return false;
            }
            let kernel = linear::left_kernel(&d_i);
            let w = self.witnesses[i].with_ring(ring.clone());
            if w.mul(&d_next) != kernel {
                return false;
            }
        }
        true
    }
}

/// Builds an `n`-presentation by iterated left kernels; always succeeds
/// over the supported (coherent) rings. Determinism of `left_kernel` makes
/// longer runs extend shorter ones.
pub fn build_n_presentation(module: &FpModule, n: usize) -> NPresentation {
    let ring = module.conv_ring();
    let mut maps = Vec::with_capacity(n);
    let mut witnesses = Vec::new();
    if n >= 1 {
        maps.push(module.conv_relations());
        for _ in 1..n {
            let prev = maps.last().unwrap();
            let k = linear::left_kernel(prev);
            witnesses.push(Mat::identity(ring.clone(), k.rows).with_ring(module.ring.clone()));
            maps.push(k);
        }
    }
    let maps = maps.into_iter().map(|m| m.with_ring(module.ring.clone())).collect();
    NPresentation { module: module.clone(), maps, witnesses }
}

/// Outcome of a projective-dimension-at-most-one test.
#[derive(Clone, Debug)]
pub struct PdCertificate {
    pub le_one: bool,
    pub syzygy: FpModule,
    /// Splitting witness for the syzygy presentation when `le_one`.
    pub witness: Option<Mat>,
}

/// True iff the first syzygy is projective; carries the splitting witness
/// or the refuted presentation.
pub fn pd_le_1(module: &FpModule) -> PdCertificate {
    let syzygy = module.syzygy();
    let witness = syzygy.is_projective();
    PdCertificate { le_one: witness.is_some(), syzygy, witness }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PdResult {
    Exact(usize),
    AtLeast(usize),
}

/// Projective dimension probed up to `cap` syzygy steps.
pub fn projective_dimension(module: &FpModule, cap: usize) -> PdResult {
    let mut current = module.clone();
    for d in 0..=cap {
        if current.is_projective().is_some() {
            return PdResult::Exact(d);
        }
        current = current.syzygy();
    }
    PdResult::AtLeast(cap + 1)
}

/// A morphism of finitely presented modules, acting on generator rows by
/// right multiplication by `gen_matrix`.
#[derive(Clone, Debug)]
pub struct ModMorphism {
    pub source: FpModule,
    pub target: FpModule,
    pub gen_matrix: Mat,
    /// Expresses `source.relations * gen_matrix` as combinations of
    /// `target.relations` rows.
    pub rel_witness: Mat,
}

impl ModMorphism {
    pub fn verify(&self) -> bool {
        let ring = self.source.conv_ring();
        let lhs = self
            .source
            .conv_relations()
            .mul(&self.gen_matrix.with_ring(ring.clone()));
        let rhs = self
            .rel_witness
            .with_ring(ring.clone())
            .mul(&self.target.conv_relations());
        lhs == rhs
    }
}

/// `Hom(M, N)` as an abelian group with generating morphisms.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub group: FgAbGroup,
    pub basis: Vec<ModMorphism>,
}

/// Computes `Hom(M, N)` as the solution space of `A_M * S = W * A_N` in
/// `(S, W)`, modulo morphisms `S = V * A_N` that are zero on the quotient.
pub fn hom_module(m: &FpModule, n: &FpModule) -> HomGroup {
    assert_eq!(m.ring, n.ring, "ring mismatch");
    assert_eq!(m.side, n.side, "side mismatch");
    let ring = m.conv_ring();
    let am = m.conv_relations();
    let an = n.conv_relations();
    match &ring {
        RingSpec::Integers | RingSpec::IntegersMod(_) | RingSpec::PrimeField(_) => {
            hom_scalar(m, n, &am, &an)
        }
        RingSpec::FinDimAlgebra(_) => hom_algebra(m, n, &ring, &am, &an),
    }
}

fn scalar_modulus(ring: &RingSpec) -> Option<BigInt> {
    match ring {
        RingSpec::Integers => None,
        RingSpec::IntegersMod(n) => Some(n.clone()),
        RingSpec::PrimeField(p) => Some(BigInt::from(*p)),
        RingSpec::FinDimAlgebra(_) => panic!("not a scalar ring"),
    }
}

fn hom_scalar(m: &FpModule, n: &FpModule, am: &Mat, an: &Mat) -> HomGroup {
    let ring = am.ring.clone();
    let modulus = scalar_modulus(&ring);
    let (km, mm) = (am.cols, am.rows);
    let (kn, mn) = (an.cols, an.rows);
    let sdim = km * kn;
    let wdim = mm * mn;
    let cols = mm * kn;
    let amz = am.to_zmat();
    let anz = an.to_zmat();

    // Constraint matrix on unknowns (S, W): A_M * S - W * A_N = 0 (mod n).
    let mut q = ZMat::zero(sdim + wdim, cols);
    for i in 0..km {
        for j in 0..kn {
            for r in 0..mm {
                q[(i * kn + j, r * kn + j)] = amz[(r, i)].clone();
            }
        }
    }
    for r in 0..mm {
        for v in 0..mn {
            for l in 0..kn {
                q[(sdim + r * mn + v, r * kn + l)] = -anz[(v, l)].clone();
            }
        }
    }
    let stacked = match &modulus {
        None => q,
        Some(nn) => {
            let mut ni = ZMat::zero(cols, cols);
            for i in 0..cols {
                ni[(i, i)] = nn.clone();
            }
            q.vstack(&ni)
        }
    };
    let zker = crate::zlin::left_kernel(&stacked);
    let mut proj_rows: Vec<Vec<BigInt>> =
        (0..zker.rows).map(|i| zker.row(i)[..sdim].to_vec()).collect();
    if let Some(nn) = &modulus {
        // The flat S-coordinates live mod n.
        for i in 0..sdim {
            let mut row = vec![BigInt::zero(); sdim];
            row[i] = nn.clone();
            proj_rows.push(row);
        }
    }
    let (h, _) = crate::zlin::row_hnf(&ZMat::from_rows(proj_rows, sdim));
    let l1_rows: Vec<Vec<BigInt>> = (0..h.rows)
        .map(|i| h.row(i))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let l1 = ZMat::from_rows(l1_rows, sdim);

    // Null morphisms: S = V * A_N, one generator per (row of V, relation of N),
    // plus modulus multiples.
    let mut l2_rows = Vec::new();
    for i in 0..km {
        for v in 0..mn {
            let mut row = vec![BigInt::zero(); sdim];
            for j in 0..kn {
                row[i * kn + j] = anz[(v, j)].clone();
            }
            l2_rows.push(row);
        }
    }
    if let Some(nn) = &modulus {
        for i in 0..sdim {
            let mut row = vec![BigInt::zero(); sdim];
            row[i] = nn.clone();
            l2_rows.push(row);
        }
    }
    let l2 = ZMat::from_rows(l2_rows, sdim);
    let (group, gens) = abgroup::lattice_quotient(&l1, &l2);

    let basis = gens
        .into_iter()
        .map(|(flat, _)| {
            let rows = (0..km)
                .map(|i| {
                    (0..kn)
                        .map(|j| ring.canon_int(flat[i * kn + j].clone()))
                        .collect()
                })
                .collect();
            let gen_matrix = Mat::from_rows(ring.clone(), rows, kn);
            let image = am.mul(&gen_matrix);
            let rel_witness = linear::solve_left(an, &image)
                .expect("hom generator image must factor through target relations");
            ModMorphism {
                source: m.clone(),
                target: n.clone(),
                gen_matrix: gen_matrix.with_ring(m.ring.clone()),
                rel_witness: rel_witness.with_ring(m.ring.clone()),
            }
        })
        .collect();
    HomGroup { group, basis }
}

fn hom_algebra(m: &FpModule, n: &FpModule, ring: &RingSpec, am: &Mat, an: &Mat) -> HomGroup {
    let alg = ring.algebra().clone();
    let (p, d) = (alg.p, alg.dim);
    let (km, mm) = (am.cols, am.rows);
    let (kn, mn) = (an.cols, an.rows);
    let sdim = km * kn * d;
    let wdim = mm * mn * d;
    let cols = mm * kn * d;

    let mut q = FpMat::zero(p, sdim + wdim, cols);
    for r in 0..mm {
        for j in 0..kn {
            for i in 0..km {
                // coefficient of S_{i,j} coords: left multiplication by A_M[r][i]
                let Elem::Alg(a) = am.at(r, i) else { unreachable!() };
                for t in 0..d {
                    let prod = alg.mul(a, &basis_vec(d, t));
                    for s in 0..d {
                        let row = (i * kn + j) * d + t;
                        let col = (r * kn + j) * d + s;
                        q[(row, col)] = (q[(row, col)] + prod[s]) % p;
                    }
                }
            }
            for v in 0..mn {
                // coefficient of W_{r,v} coords: right multiplication by A_N[v][j]
                let Elem::Alg(a) = an.at(v, j) else { unreachable!() };
                for t in 0..d {
                    let prod = alg.mul(&basis_vec(d, t), a);
                    for s in 0..d {
                        let row = sdim + (r * mn + v) * d + t;
                        let col = (r * kn + j) * d + s;
                        q[(row, col)] = (q[(row, col)] + (p - prod[s]) % p) % p;
                    }
                }
            }
        }
    }
    let ker = fplin::left_kernel(&q);
    let proj = FpMat::from_rows(
        p,
        (0..ker.rows).map(|i| ker.row(i)[..sdim].to_vec()).collect(),
        sdim,
    );
    let l1 = fplin::row_space_basis(&proj);

    let mut l2_rows = Vec::new();
    for i in 0..km {
        for v in 0..mn {
            for u in 0..d {
                let mut row = vec![0u64; sdim];
                for j in 0..kn {
                    let Elem::Alg(a) = an.at(v, j) else { unreachable!() };
                    let prod = alg.mul(&basis_vec(d, u), a);
                    for s in 0..d {
                        row[(i * kn + j) * d + s] = prod[s];
                    }
                }
                l2_rows.push(row);
            }
        }
    }
    let l2 = fplin::row_space_basis(&FpMat::from_rows(p, l2_rows, sdim));

    // Quotient basis: rows of l1 that grow the span of l2.
    let mut span = l2.clone();
    let mut gens = Vec::new();
    for i in 0..l1.rows {
        let cand = FpMat::from_rows(p, vec![l1.row(i)], sdim);
        let grown = span.vstack(&cand);
        if fplin::rank(&grown) > fplin::rank(&span) {
            span = fplin::row_space_basis(&grown);
            gens.push(l1.row(i));
        }
    }
    let group = FgAbGroup::elementary(p, gens.len());
    let basis = gens
        .into_iter()
        .map(|flat| {
            let f = FpMat::from_rows(p, vec![flat], sdim);
            let gen_matrix = linear::fp_rows_to_mat(ring, &f, km * kn);
            // fp_rows_to_mat reads one row of km*kn entries; reshape to km x kn.
            let rows: Vec<Vec<Elem>> = (0..km)
                .map(|i| (0..kn).map(|j| gen_matrix.at(0, i * kn + j).clone()).collect())
                .collect();
            let gen_matrix = Mat::from_rows(ring.clone(), rows, kn);
            let image = am.mul(&gen_matrix);
            let rel_witness = linear::solve_left(an, &image)
                .expect("hom generator image must factor through target relations");
            ModMorphism {
                source: m.clone(),
                target: n.clone(),
                gen_matrix: gen_matrix.with_ring(m.ring.clone()),
                rel_witness: rel_witness.with_ring(m.ring.clone()),
            }
        })
        .collect();
    HomGroup { group, basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::int;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    #[test]
    fn syzygy_examples() {
        // Z/2 over Z: syzygy is free of rank 1.
        let m = FpModule::cyclic(z(), Side::Left, int(2));
        let s = m.syzygy();
        assert_eq!(s.generators, 1);
        assert_eq!(s.relations.rows, 0);

        // Z/2 over Z/4: syzygy presented by [2] again.
        let z4 = RingSpec::integers_mod(4);
        let m = FpModule::cyclic(z4.clone(), Side::Left, z4.from_i64(2));
        let s = m.syzygy();
        assert_eq!(s.relations, Mat::from_i64(z4, &[&[2]]));

        // Free module: syzygy is zero.
        let f = FpModule::free(z(), Side::Left, 3);
        let s = f.syzygy();
        assert_eq!(s.generators, 0);
    }

    #[test]
    fn n_presentation_examples() {
        // Z/6 over Z with n = 3: resolution 0 -> Z -> Z -> M.
        let m = FpModule::cyclic(z(), Side::Left, int(6));
        let p = build_n_presentation(&m, 3);
        assert_eq!(p.maps.len(), 3);
        assert_eq!(p.maps[0], Mat::from_i64(z(), &[&[6]]));
        assert_eq!(p.maps[1].rows, 0);
        assert_eq!(p.maps[2].rows, 0);
        assert!(p.verify());

        // Z/2 over Z/4 with n = 2: periodic resolution [2], [2].
        let z4 = RingSpec::integers_mod(4);
        let m = FpModule::cyclic(z4.clone(), Side::Left, z4.from_i64(2));
        let p = build_n_presentation(&m, 2);
        assert_eq!(p.maps[0], Mat::from_i64(z4.clone(), &[&[2]]));
        assert_eq!(p.maps[1], Mat::from_i64(z4, &[&[2]]));
        assert!(p.verify());

        // Zero module: all maps empty.
        let m = FpModule::zero(z(), Side::Left);
        let p = build_n_presentation(&m, 2);
        assert!(p.maps.iter().all(|d| d.rows == 0 && d.cols == 0));
    }

    #[test]
    fn longer_presentations_extend_shorter_ones() {
        let z4 = RingSpec::integers_mod(4);
        let m = FpModule::cyclic(z4.clone(), Side::Left, z4.from_i64(2));
        let p2 = build_n_presentation(&m, 2);
        let p4 = build_n_presentation(&m, 4);
        assert_eq!(p2.maps[..], p4.maps[..2]);
    }

    #[test]
    fn projectivity_examples() {
        let z4 = RingSpec::integers_mod(4);
        let m = FpModule::cyclic(z4.clone(), Side::Left, z4.from_i64(2));
        assert!(m.is_projective().is_none());

        let z6 = RingSpec::integers_mod(6);
        let m = FpModule::cyclic(z6.clone(), Side::Left, z6.from_i64(2));
        let u = m.is_projective().unwrap();
        let a = &m.relations;
        assert_eq!(a.mul(&u).mul(a), *a);

        let f = FpModule::free(z(), Side::Left, 2);
        assert!(f.is_projective().is_some());
    }

    #[test]
    fn pd_examples() {
        // Every f.p. module over Z has pd <= 1.
        let m = FpModule::new(z(), Side::Left, Mat::from_i64(z(), &[&[2, 4], &[0, 6]]));
        assert!(pd_le_1(&m).le_one);

        let z4 = RingSpec::integers_mod(4);
        let m = FpModule::cyclic(z4.clone(), Side::Left, z4.from_i64(2));
        let cert = pd_le_1(&m);
        assert!(!cert.le_one);
        assert_eq!(cert.syzygy.relations, Mat::from_i64(z4, &[&[2]]));

        let f2 = RingSpec::PrimeField(2);
        let m = FpModule::cyclic(f2.clone(), Side::Left, f2.from_i64(1));
        assert!(pd_le_1(&m).le_one);
        assert_eq!(projective_dimension(&m, 4), PdResult::Exact(0));
    }

    #[test]
    fn hom_examples() {
        // Hom(Z/2, Z/4) over Z/4 is Z/2.
        let z4 = RingSpec::integers_mod(4);
        let m = FpModule::cyclic(z4.clone(), Side::Left, z4.from_i64(2));
        let n = FpModule::free(z4.clone(), Side::Left, 1);
        let h = hom_module(&m, &n);
        assert_eq!(h.group, FgAbGroup { free_rank: 0, invariant_factors: vec![BigInt::from(2)] });
        assert!(h.basis.iter().all(|f| f.verify()));

        // Hom(free(1), N) is N's underlying group.
        let n = FpModule::new(z(), Side::Left, Mat::from_i64(z(), &[&[2, 0], &[0, 3]]));
        let f = FpModule::free(z(), Side::Left, 1);
        let h = hom_module(&f, &n);
        assert_eq!(h.group, n.underlying_group());

        // Hom(Z/2, Z/3) over Z is 0.
        let a = FpModule::cyclic(z(), Side::Left, int(2));
        let b = FpModule::cyclic(z(), Side::Left, int(3));
        assert!(hom_module(&a, &b).group.is_zero());
    }

    #[test]
    fn underlying_groups() {
        let z6 = RingSpec::integers_mod(6);
        let m = FpModule::new(z6.clone(), Side::Left, Mat::from_i64(z6, &[&[2, 0], &[0, 0]]));
        let g = m.underlying_group();
        assert_eq!(g.order(), Some(BigInt::from(12)));
    }

    #[test]
    fn canonical_relations_dedup() {
        let z6 = RingSpec::integers_mod(6);
        let a = FpModule::new(z6.clone(), Side::Left, Mat::from_i64(z6.clone(), &[&[2]]));
        let b = FpModule::new(z6.clone(), Side::Left, Mat::from_i64(z6.clone(), &[&[4], &[2]]));
        assert_eq!(a.canonical_relations(), b.canonical_relations());
        let c = FpModule::new(z6.clone(), Side::Left, Mat::from_i64(z6, &[&[3]]));
        assert_ne!(a.canonical_relations(), c.canonical_relations());
    }
}
