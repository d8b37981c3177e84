//! Job specifications and JSON reports.
//!
//! A job file is self-describing: ring block, task name, inputs, bound and
//! seed. Matrix entries are decimal strings over the scalar rings
//! (arbitrary precision) and coefficient arrays over a structure-constant
//! algebra. Reports echo enough input to reproduce the run byte for byte
//! and carry a `paper_ref` per result naming the statement each check
//! instantiates.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::fpmod::{FpModule, Side};
use crate::homdual::{
    character, ext1, tor1, unital_decomposition, verify_ext_tor_duality, yoneda_check,
    DualityPart,
};
use crate::mat::Mat;
use crate::matcat::{
    n_hereditary_witness, pseudo_n_cokernel, ring_hereditary_report, semi_hereditary_witness,
    split_cokernel_test, CertKind, SearchBound,
};
use crate::ring::{AlgebraData, Elem, RingSpec};
use crate::torsionlab::{
    closure_check, hereditary_consistency_report, membership, pd_fpn_search, ClosureProperty,
    TorsionClass, Verdict,
};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum RingDesc {
    Integers,
    IntegersMod {
        modulus: String,
    },
    PrimeField {
        p: u64,
    },
    FinDimAlgebra {
        p: u64,
        basis: Vec<String>,
        table: Vec<Vec<Vec<u64>>>,
        idempotents: Vec<usize>,
    },
}

impl RingDesc {
    pub fn to_ring(&self) -> Result<RingSpec, Error> {
        let ring = match self {
            RingDesc::Integers => RingSpec::Integers,
            RingDesc::IntegersMod { modulus } => RingSpec::IntegersMod(
                BigInt::from_str(modulus)
                    .map_err(|e| Error::BadInput(format!("bad modulus: {e}")))?,
            ),
            RingDesc::PrimeField { p } => RingSpec::PrimeField(*p),
            RingDesc::FinDimAlgebra { p, basis, table, idempotents } => {
                RingSpec::FinDimAlgebra(Arc::new(AlgebraData {
                    p: *p,
                    dim: basis.len(),
                    table: table.clone(),
                    idempotents: idempotents.clone(),
                    basis_names: basis.clone(),
                }))
            }
        };
        ring.validate()?;
        Ok(ring)
    }

    pub fn from_ring(ring: &RingSpec) -> RingDesc {
        match ring {
            RingSpec::Integers => RingDesc::Integers,
            RingSpec::IntegersMod(n) => RingDesc::IntegersMod { modulus: n.to_string() },
            RingSpec::PrimeField(p) => RingDesc::PrimeField { p: *p },
            RingSpec::FinDimAlgebra(alg) => RingDesc::FinDimAlgebra {
                p: alg.p,
                basis: alg.basis_names.clone(),
                table: alg.table.clone(),
                idempotents: alg.idempotents.clone(),
            },
        }
    }
}

/// One matrix entry: a decimal string (scalar rings) or a coefficient
/// vector in the algebra basis.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum EntryDesc {
    Int(String),
    Alg(Vec<u64>),
}

fn entry_to_desc(ring: &RingSpec, e: &Elem) -> EntryDesc {
    let _ = ring;
    match e {
        Elem::Int(x) => EntryDesc::Int(x.to_string()),
        Elem::Alg(v) => EntryDesc::Alg(v.clone()),
    }
}

fn desc_to_entry(ring: &RingSpec, d: &EntryDesc) -> Result<Elem, Error> {
    match (ring, d) {
        (RingSpec::FinDimAlgebra(alg), EntryDesc::Alg(v)) => {
            if v.len() != alg.dim {
                return Err(Error::BadInput("entry has wrong coefficient count".into()));
            }
            Ok(ring.canon(Elem::Alg(v.clone())))
        }
        (RingSpec::FinDimAlgebra(_), EntryDesc::Int(_)) => {
            Err(Error::BadInput("algebra entries are coefficient arrays".into()))
        }
        (_, EntryDesc::Int(s)) => Ok(ring.canon_int(
            BigInt::from_str(s).map_err(|e| Error::BadInput(format!("bad entry {s:?}: {e}")))?,
        )),
        (_, EntryDesc::Alg(_)) => {
            Err(Error::BadInput("scalar entries are decimal strings".into()))
        }
    }
}

/// A matrix with an explicit column count, so empty matrices round-trip.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MatrixDesc {
    pub cols: usize,
    pub rows: Vec<Vec<EntryDesc>>,
}

impl MatrixDesc {
    pub fn to_mat(&self, ring: &RingSpec) -> Result<Mat, Error> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            if r.len() != self.cols {
                return Err(Error::BadInput("ragged matrix row".into()));
            }
            rows.push(r.iter().map(|d| desc_to_entry(ring, d)).collect::<Result<Vec<_>, _>>()?);
        }
        Ok(Mat::from_rows(ring.clone(), rows, self.cols))
    }

    pub fn from_mat(m: &Mat) -> MatrixDesc {
        MatrixDesc {
            cols: m.cols,
            rows: (0..m.rows)
                .map(|i| m.row(i).iter().map(|e| entry_to_desc(&m.ring, e)).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ModuleDesc {
    #[serde(default = "default_side")]
    pub side: String,
    pub relations: MatrixDesc,
}

fn default_side() -> String {
    "left".into()
}

impl ModuleDesc {
    pub fn to_module(&self, ring: &RingSpec) -> Result<FpModule, Error> {
        let side = match self.side.as_str() {
            "left" => Side::Left,
            "right" => Side::Right,
            other => return Err(Error::BadInput(format!("unknown side {other:?}"))),
        };
        Ok(FpModule::new(ring.clone(), side, self.relations.to_mat(ring)?))
    }

    pub fn from_module(m: &FpModule) -> ModuleDesc {
        ModuleDesc {
            side: match m.side {
                Side::Left => "left".into(),
                Side::Right => "right".into(),
            },
            relations: MatrixDesc::from_mat(&m.relations),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BoundDesc {
    #[serde(default = "d2")]
    pub max_rows: usize,
    #[serde(default = "d2")]
    pub max_cols: usize,
    #[serde(default = "d10")]
    pub entry_bound: i64,
    #[serde(default = "d200")]
    pub samples: usize,
}

fn d2() -> usize {
    2
}
fn d10() -> i64 {
    10
}
fn d200() -> usize {
    200
}

impl Default for BoundDesc {
    fn default() -> Self {
        BoundDesc { max_rows: 2, max_cols: 2, entry_bound: 10, samples: 200 }
    }
}

impl BoundDesc {
    pub fn to_bound(&self) -> SearchBound {
        SearchBound {
            max_rows: self.max_rows,
            max_cols: self.max_cols,
            entry_bound: self.entry_bound,
            samples: self.samples,
        }
    }
}

/// A fully self-describing job: a report plus its JobSpec reproduces
/// byte-identical output.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub task: String,
    pub ring: RingDesc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleDesc>,
    /// Module pair for ext/tor/duality tasks, in argument order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// "I" or "F" for membership/closure tasks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub property: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportResult {
    pub name: String,
    pub paper_ref: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, MatrixDesc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub groups: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ReportResult {
    fn new(name: &str, paper_ref: &str, verdict: &str) -> ReportResult {
        ReportResult {
            name: name.into(),
            paper_ref: paper_ref.into(),
            verdict: verdict.into(),
            matrices: BTreeMap::new(),
            groups: BTreeMap::new(),
            detail: None,
        }
    }

    fn with_mat(mut self, key: &str, m: &Mat) -> ReportResult {
        self.matrices.insert(key.into(), MatrixDesc::from_mat(m));
        self
    }

    fn with_group(mut self, key: &str, g: &crate::abgroup::FgAbGroup) -> ReportResult {
        self.groups.insert(key.into(), g.to_string());
        self
    }

    fn with_detail(mut self, text: String) -> ReportResult {
        self.detail = Some(text);
        self
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub task: String,
    pub ring: RingDesc,
    pub seed: u64,
    pub verdict: String,
    pub exit_code: i32,
    pub results: Vec<ReportResult>,
}

const REF_COK: &str = "§5.1 pseudo n-cokernel, sequence (5.1.2)";
const REF_SEMI: &str = "Cor. 5.6, BC = 0 and CA = A";
const REF_NHER: &str = "Thm. 5.5 (ii), endomorphism alpha with f_n.alpha = 0";
const REF_SPLIT: &str = "Lemma 5.7/Cor. 5.8, split cokernel";
const REF_EXT: &str = "Def. 3.3, Ext^1(F, M) = 0";
const REF_TOR: &str = "Def. 4.5, Tor_1(N, F) = 0";
const REF_CHAR: &str = "§A.4, character module M^+";
const REF_DUAL: &str = "Prop. A.7 (i)-(iii)";
const REF_YONEDA: &str = "Lemma A.6 (i)-(ii)";
const REF_UNITAL: &str = "§A.1, M = (+) e_i M";
const REF_MEMBER: &str = "Def. 3.3 / Def. 4.5 membership";
const REF_CLOSURE: &str = "Prop. 3.11 / Prop. 3.10 / Thm. 4.12 (i) closure";
const REF_PD: &str = "Cor. 3.12, torsion class iff pd(FP_n) <= 1";
const REF_CONSIST: &str = "Cor. 3.12 + Thm. 5.5 tri-consistency";
const REF_RINGSEARCH: &str = "Thm. 5.5 (i), bounded search over morphisms";

fn need_matrix(job: &JobSpec, ring: &RingSpec) -> Result<Mat, Error> {
    job.matrix
        .as_ref()
        .ok_or_else(|| Error::BadInput(format!("task {:?} needs a matrix", job.task)))?
        .to_mat(ring)
}

fn need_module(job: &JobSpec, ring: &RingSpec) -> Result<FpModule, Error> {
    job.module
        .as_ref()
        .ok_or_else(|| Error::BadInput(format!("task {:?} needs a module", job.task)))?
        .to_module(ring)
}

fn need_module_pair(job: &JobSpec, ring: &RingSpec) -> Result<(FpModule, FpModule), Error> {
    if job.modules.len() != 2 {
        return Err(Error::BadInput(format!("task {:?} needs exactly two modules", job.task)));
    }
    Ok((job.modules[0].to_module(ring)?, job.modules[1].to_module(ring)?))
}

fn parse_class(job: &JobSpec) -> Result<TorsionClass, Error> {
    match job.class.as_deref().unwrap_or("I") {
        "I" => Ok(TorsionClass::ExtVanishing),
        "F" => Ok(TorsionClass::TorVanishing),
        other => Err(Error::BadInput(format!("unknown class {other:?} (expected \"I\" or \"F\")"))),
    }
}

fn parse_property(job: &JobSpec) -> Result<ClosureProperty, Error> {
    match job.property.as_deref() {
        Some("quotients") => Ok(ClosureProperty::Quotients),
        Some("extensions") => Ok(ClosureProperty::Extensions),
        Some("finite-coproducts") => Ok(ClosureProperty::FiniteCoproducts),
        Some("subobjects") => Ok(ClosureProperty::Subobjects),
        Some("finite-products") => Ok(ClosureProperty::FiniteProducts),
        other => Err(Error::BadInput(format!("unknown closure property {other:?}"))),
    }
}

fn cert_result(name: &str, paper_ref: &str, cert: &crate::matcat::HereditaryCertificate) -> ReportResult {
    let mut r = ReportResult::new(
        name,
        paper_ref,
        if cert.kind == CertKind::Success { "verified" } else { "counterexample" },
    )
    .with_mat("A", &cert.a)
    .with_mat("B", &cert.b);
    if let Some(c) = &cert.c {
        r = r.with_mat("C", c);
    }
    if let Some(alpha) = &cert.alpha {
        r = r.with_mat("alpha", alpha);
    }
    if let Some(ref refutation) = cert.refutation {
        r = r.with_detail(refutation.description.clone());
    }
    r
}

/// Executes a job. Exit code 0 = verified/success certificate, 1 =
/// counterexample or refutation (still a correct run); input errors are
/// surfaced as `Err` and map to exit code 2.
pub fn run_job(job: &JobSpec) -> Result<Report, Error> {
    let ring = job.ring.to_ring()?;
    let seed = job.seed.unwrap_or(0);
    let n = job.n.unwrap_or(1);
    if n < 1 {
        return Err(Error::BadInput("n must be at least 1".into()));
    }
    let bound = job.bound.clone().unwrap_or_default().to_bound();
    let trials = job.trials.unwrap_or(100);
    let mut results = Vec::new();
    let mut exit_code = 0;

    match job.task.as_str() {
        "pseudo-cok" => {
            let a = need_matrix(job, &ring)?;
            let chain = pseudo_n_cokernel(&a, n);
            let ok = chain.verify();
            let mut r = ReportResult::new("pseudo-cok", REF_COK, if ok { "verified" } else { "counterexample" })
                .with_mat("f", &chain.f);
            for (i, step) in chain.chain.iter().enumerate() {
                r = r.with_mat(&format!("c{}", i + 1), step);
            }
            if !ok {
                exit_code = 1;
            }
            results.push(r);
        }
        "semi-hereditary" => {
            let a = need_matrix(job, &ring)?;
            let cert = semi_hereditary_witness(&a);
            if cert.kind == CertKind::Failure {
                exit_code = 1;
            }
            results.push(cert_result("semi-hereditary", REF_SEMI, &cert));
        }
        "n-hereditary" => {
            let a = need_matrix(job, &ring)?;
            let cert = n_hereditary_witness(&a, n);
            if cert.kind == CertKind::Failure {
                exit_code = 1;
            }
            results.push(cert_result("n-hereditary", REF_NHER, &cert));
        }
        "split-cokernel" => {
            let g = need_matrix(job, &ring)?;
            match split_cokernel_test(&g) {
                Some(p) => results.push(
                    ReportResult::new("split-cokernel", REF_SPLIT, "verified")
                        .with_mat("G", &g)
                        .with_mat("P", &p),
                ),
                None => {
                    exit_code = 1;
                    results.push(
                        ReportResult::new("split-cokernel", REF_SPLIT, "counterexample")
                            .with_mat("G", &g)
                            .with_detail("no section P with G*P = I".into()),
                    );
                }
            }
        }
        "ring-search" => {
            let report = ring_hereditary_report(&ring, n, &bound, seed);
            match &report.counterexample {
                None => results.push(
                    ReportResult::new("ring-search", REF_RINGSEARCH, "verified")
                        .with_detail(format!("{} matrices tested", report.tested)),
                ),
                Some(cert) => {
                    exit_code = 1;
                    results.push(cert_result("ring-search", REF_RINGSEARCH, cert));
                }
            }
        }
        "ext" => {
            let (f, m) = need_module_pair(job, &ring)?;
            let value = ext1(&f, &m);
            results.push(
                ReportResult::new("ext", REF_EXT, if value.is_zero() { "verified" } else { "counterexample" })
                    .with_group("ext1", &value),
            );
            if !value.is_zero() {
                exit_code = 1;
            }
        }
        "tor" => {
            let (nn, f) = need_module_pair(job, &ring)?;
            let value = tor1(&nn, &f);
            results.push(
                ReportResult::new("tor", REF_TOR, if value.is_zero() { "verified" } else { "counterexample" })
                    .with_group("tor1", &value),
            );
            if !value.is_zero() {
                exit_code = 1;
            }
        }
        "character" => {
            let m = need_module(job, &ring)?;
            let c = character(&m)?;
            let ok = c.verify_involution();
            if !ok {
                exit_code = 1;
            }
            results.push(
                ReportResult::new("character", REF_CHAR, if ok { "verified" } else { "counterexample" })
                    .with_mat("dual_relations", &c.dual.relations)
                    .with_group("dual_group", &c.dual.underlying_group())
                    .with_detail(format!(
                        "exponent {}, generator orders {:?}",
                        c.pairing.exponent,
                        c.pairing.orders.iter().map(|o| o.to_string()).collect::<Vec<_>>()
                    )),
            );
        }
        "duality-check" => {
            let (f, m) = need_module_pair(job, &ring)?;
            for part in [DualityPart::ExtTor, DualityPart::TensorHom, DualityPart::TorExt] {
                let rec = verify_ext_tor_duality(&f, &m, part)?;
                let ok = rec.holds();
                if !ok {
                    exit_code = 1;
                }
                results.push(
                    ReportResult::new(
                        &format!("duality-{part:?}").to_lowercase(),
                        REF_DUAL,
                        if ok { "verified" } else { "counterexample" },
                    )
                    .with_group("lhs", &rec.lhs)
                    .with_group("rhs", &rec.rhs),
                );
            }
        }
        "yoneda" => {
            let m = need_module(job, &ring)?;
            let idx = job.idempotent.ok_or_else(|| {
                Error::BadInput("task \"yoneda\" needs an idempotent index".into())
            })?;
            let rec = yoneda_check(idx, &m)?;
            let ok = rec.holds();
            if !ok {
                exit_code = 1;
            }
            results.push(
                ReportResult::new("yoneda", REF_YONEDA, if ok { "verified" } else { "counterexample" })
                    .with_detail(format!(
                        "hom dim {}, tensor dim {}, e_i M dim {}",
                        rec.hom_dim, rec.tensor_dim, rec.component_dim
                    )),
            );
        }
        "unital-decomposition" => {
            let m = need_module(job, &ring)?;
            let dec = unital_decomposition(&m)?;
            if !dec.reconstructs {
                exit_code = 1;
            }
            results.push(
                ReportResult::new(
                    "unital-decomposition",
                    REF_UNITAL,
                    if dec.reconstructs { "verified" } else { "counterexample" },
                )
                .with_detail(format!(
                    "component dims {:?}, total {}",
                    dec.components.iter().map(|c| c.dim).collect::<Vec<_>>(),
                    dec.total_dim
                )),
            );
        }
        "membership" => {
            let m = need_module(job, &ring)?;
            let class = parse_class(job)?;
            let v = membership(&m, class, n, &bound)?;
            let verdict = match v.verdict {
                Verdict::In => "in",
                Verdict::Out => "out",
                Verdict::InUpToBound => "in-up-to-bound",
            };
            if v.verdict == Verdict::Out {
                exit_code = 1;
            }
            let mut r = ReportResult::new("membership", REF_MEMBER, verdict)
                .with_detail(format!("class {}, test set: {}", class.label(n), v.bound));
            if let Some((f, value)) = &v.witness {
                r = r.with_mat("witness_relations", &f.relations).with_group("witness_value", value);
            }
            results.push(r);
        }
        "closure" => {
            let class = parse_class(job)?;
            let property = parse_property(job)?;
            let rep = closure_check(class, n, &ring, property, trials, seed, &bound)?;
            match &rep.counterexample {
                None => results.push(
                    ReportResult::new("closure", REF_CLOSURE, "verified")
                        .with_detail(format!("{} trials, no counterexample", rep.trials)),
                ),
                Some(cex) => {
                    exit_code = 1;
                    let mut r = ReportResult::new("closure", REF_CLOSURE, "counterexample")
                        .with_mat("produced_relations", &cex.produced.relations)
                        .with_mat("witness_relations", &cex.witness.0.relations)
                        .with_group("witness_value", &cex.witness.1);
                    for (i, m) in cex.members.iter().enumerate() {
                        r = r.with_mat(&format!("member{}_relations", i + 1), &m.relations);
                    }
                    results.push(r);
                }
            }
        }
        "pd-search" => {
            let rep = pd_fpn_search(&ring, n, &bound, seed);
            match &rep.counterexample {
                None => results.push(
                    ReportResult::new("pd-search", REF_PD, "verified")
                        .with_detail(format!("{} modules tested", rep.tested)),
                ),
                Some((m, _)) => {
                    exit_code = 1;
                    results.push(
                        ReportResult::new("pd-search", REF_PD, "counterexample")
                            .with_mat("module_relations", &m.relations)
                            .with_group("underlying_group", &m.underlying_group()),
                    );
                }
            }
        }
        "consistency-report" => {
            let rep = hereditary_consistency_report(&ring, n, &bound, seed)?;
            if !rep.consistent() {
                // Tri-consistency is a theorem; disagreement is a bug here.
                return Err(Error::BadInput(format!(
                    "implementation bug: verdicts disagree {:?} (ring {ring}, n {n}, seed {seed})",
                    rep.verdicts()
                )));
            }
            if !rep.all_pass() {
                exit_code = 1;
            }
            let verdict = |b: bool| if b { "verified" } else { "counterexample" };
            let mut pd_r = ReportResult::new("pd-search", REF_PD, verdict(rep.pd.verified()));
            if let Some((m, _)) = &rep.pd.counterexample {
                pd_r = pd_r
                    .with_mat("module_relations", &m.relations)
                    .with_group("underlying_group", &m.underlying_group());
            }
            results.push(pd_r);
            match &rep.hereditary.counterexample {
                None => results.push(ReportResult::new("ring-search", REF_RINGSEARCH, "verified")),
                Some(cert) => results.push(cert_result("ring-search", REF_RINGSEARCH, cert)),
            }
            let mut cl_r =
                ReportResult::new("closure", REF_CLOSURE, verdict(rep.closure.passed()));
            if let Some(cex) = &rep.closure.counterexample {
                cl_r = cl_r
                    .with_mat("produced_relations", &cex.produced.relations)
                    .with_mat("witness_relations", &cex.witness.0.relations)
                    .with_group("witness_value", &cex.witness.1);
            }
            results.push(cl_r);
            results.push(
                ReportResult::new("tri-consistency", REF_CONSIST, verdict(rep.all_pass()))
                    .with_detail(format!("verdicts {:?} agree", rep.verdicts())),
            );
        }
        other => return Err(Error::BadInput(format!("unknown task {other:?}"))),
    }

    Ok(Report {
        task: job.task.clone(),
        ring: job.ring.clone(),
        seed,
        verdict: if exit_code == 0 { "verified".into() } else { "counterexample".into() },
        exit_code,
        results,
    })
}

/// Outcome of independent certificate re-verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub checked: usize,
    /// First failed equation, if any.
    pub failure: Option<String>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Re-verifies every success certificate in a report by multiplications
/// and comparisons only. `Err` is reserved for malformed reports; a
/// certificate that does not multiply out is a `failure` in the outcome.
pub fn verify_report(report: &Report) -> Result<VerifyOutcome, Error> {
    let ring = report.ring.to_ring()?;
    let mut checked = 0;
    for r in &report.results {
        if r.verdict != "verified" {
            continue;
        }
        let get = |k: &str| -> Result<Option<Mat>, Error> {
            r.matrices.get(k).map(|d| d.to_mat(&ring)).transpose()
        };
        let fail = |checked: usize, what: &str| VerifyOutcome {
            checked,
            failure: Some(format!("certificate {:?} failed: {what}", r.name)),
        };
        if let (Some(a), Some(b)) = (get("A")?, get("B")?) {
            if !b.mul(&a).is_zero() {
                return Ok(fail(checked, "B*A != 0"));
            }
            if let Some(c) = get("C")? {
                if !b.mul(&c).is_zero() {
                    return Ok(fail(checked, "B*C != 0"));
                }
                if c.mul(&a) != a {
                    return Ok(fail(checked, "C*A != A"));
                }
                checked += 1;
            }
            if let Some(alpha) = get("alpha")? {
                if !b.mul(&alpha).is_zero() {
                    return Ok(fail(checked, "B*alpha != 0"));
                }
                if alpha.mul(&a) != a {
                    return Ok(fail(checked, "alpha*A != A"));
                }
                checked += 1;
            }
        }
        if let (Some(g), Some(p)) = (get("G")?, get("P")?) {
            if g.mul(&p) != Mat::identity(ring.clone(), g.rows) {
                return Ok(fail(checked, "G*P != I"));
            }
            checked += 1;
        }
        if let Some(f) = get("f")? {
            // pseudo-cokernel chain: consecutive composites vanish
            let mut prev = f;
            let mut i = 1;
            while let Some(step) = get(&format!("c{i}"))? {
                if !step.mul(&prev).is_zero() {
                    return Ok(fail(checked, "chain composite is nonzero"));
                }
                prev = step;
                i += 1;
            }
            checked += 1;
        }
    }
    Ok(VerifyOutcome { checked, failure: None })
}

/// Built-in job specifications for the demo subcommand.
pub fn demo_spec(name: &str) -> Option<JobSpec> {
    let scalar_matrix = |entries: &[&[i64]]| MatrixDesc {
        cols: entries.first().map_or(0, |r| r.len()),
        rows: entries
            .iter()
            .map(|r| r.iter().map(|x| EntryDesc::Int(x.to_string())).collect())
            .collect(),
    };
    let blank = |task: &str, ring: RingDesc| JobSpec {
        task: task.into(),
        ring,
        matrix: None,
        module: None,
        modules: vec![],
        n: Some(1),
        class: None,
        property: None,
        idempotent: None,
        bound: None,
        trials: None,
        seed: Some(0),
        output: None,
    };
    Some(match name {
        "z" => JobSpec {
            matrix: Some(scalar_matrix(&[&[2]])),
            ..blank("semi-hereditary", RingDesc::Integers)
        },
        "z4" => blank("consistency-report", RingDesc::IntegersMod { modulus: "4".into() }),
        "z6" => JobSpec {
            matrix: Some(scalar_matrix(&[&[2]])),
            ..blank("semi-hereditary", RingDesc::IntegersMod { modulus: "6".into() })
        },
        "f2" => blank("consistency-report", RingDesc::PrimeField { p: 2 }),
        "a2-quiver" => {
            let ring = crate::ring::a2_path_algebra(2);
            let desc = RingDesc::from_ring(&ring);
            JobSpec {
                // the arrow a: A e_1 -> A e_2 as a 1x1 matrix
                matrix: Some(MatrixDesc {
                    cols: 1,
                    rows: vec![vec![EntryDesc::Alg(vec![0, 0, 1])]],
                }),
                ..blank("n-hereditary", desc)
            }
        }
        _ => return None,
    })
}
