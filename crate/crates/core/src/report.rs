//! The full analysis pipeline and its JSON report.
//!
//! Subspaces are written as their canonical RREF rows, vectors as scalar
//! strings, and basis indices 1-based.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::EvolutionAlgebra;
use crate::classify::{self, AlmostAbelian, NormalForm};
use crate::enumerate::Budget;
use crate::error::{Error, Result};
use crate::format::{subspace_rows, vector_strings, AlgebraFile};
use crate::frattini;
use crate::linalg::Subspace;
use crate::radicals::{self, NilradicalVerdict};
use crate::supersolvable::{self, Supersolvability};
use crate::tk;

pub type Rows = Vec<Vec<String>>;

/// Outcome of a report section that may not apply or may run out of budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Section<T> {
    Ok { value: T },
    Skipped { reason: String },
    BudgetExceeded { needed: u128, budget: u64 },
}

impl<T> Section<T> {
    fn from_result(r: Result<T>, skip_reason: &str) -> Result<Self> {
        match r {
            Ok(value) => Ok(Section::Ok { value }),
            Err(Error::BudgetExceeded { needed, budget }) => Ok(Section::BudgetExceeded { needed, budget }),
            Err(Error::NotFiniteField) | Err(Error::NotTK) => Ok(Section::Skipped {
                reason: skip_reason.to_string(),
            }),
            Err(e) => Err(e),
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Section::Ok { value } => Some(value),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnSection {
    pub terms: Vec<Rows>,
    pub stabilized_at: usize,
    pub bnil: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassJson {
    pub indices: Vec<usize>,
    pub w: Vec<String>,
    pub alphas: Vec<String>,
    pub lift: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepJson {
    pub term: Rows,
    pub gamma: Vec<usize>,
    pub classes: Vec<ClassJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesSection {
    pub steps: Vec<StepJson>,
    pub stabilized_at: usize,
    /// Complete flag of ideals of `E` ending in `snil`.
    pub flag: Vec<Rows>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordJson {
    pub w: Vec<String>,
    pub j: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianIdealsSection {
    pub ann_part: Rows,
    pub tk_records: Vec<RecordJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupersolvableSection {
    pub verdict: String,
    pub flag: Option<Vec<Rows>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TkSection {
    pub k: usize,
    pub lambdas: Vec<String>,
    pub canonical_basis: Rows,
    pub basis_change: Rows,
    pub nilradical: Rows,
    pub frattini_subalgebra: Rows,
    pub frattini_ideal: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilradicalSection {
    pub verdict: String,
    pub nilradical: Option<Rows>,
    pub witness: Option<Rows>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecessaryJson {
    pub bnil_eq_ann: bool,
    pub snil_sq_ideal: bool,
    pub snil_eq_asoc1: Option<bool>,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FullSupportJson {
    pub applicable: bool,
    pub phi_free: Option<bool>,
    pub m: Option<usize>,
    pub k: Option<Rows>,
    pub ann: Option<Rows>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteForceJson {
    pub field: String,
    pub maximal_subalgebras: Vec<Rows>,
    pub frattini_subalgebra: Rows,
    pub frattini_ideal: Rows,
    pub phi_free: bool,
    pub dually_atomistic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiFreeSection {
    pub necessary: NecessaryJson,
    pub snil_eq_asoc1: bool,
    pub full_support: FullSupportJson,
    pub brute_force: Section<BruteForceJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationSection {
    pub kind: String,
    pub normal_form_basis: Option<Rows>,
    pub abelian_ideal: Option<Rows>,
    pub dually_atomistic: Option<bool>,
    pub phi_free: Option<bool>,
    pub dually_atomistic_structural: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub algebra: AlgebraFile,
    pub annihilator: Rows,
    pub derived: Rows,
    pub upper_annihilating_series: AnnSection,
    pub one_dim_abelian_ideals: AbelianIdealsSection,
    pub asoc1: Rows,
    pub sn_series: SeriesSection,
    pub snil: Rows,
    pub supersolvable: SupersolvableSection,
    pub tk: Section<TkSection>,
    pub nilradical: NilradicalSection,
    pub phi_free: PhiFreeSection,
    pub classification: ClassificationSection,
    /// Wall-clock milliseconds per section; omitted unless requested so that
    /// reports stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("plain data");
        out.push('\n');
        out
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub budget: Budget,
    pub timings: bool,
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

fn flag_rows(flag: &[Subspace]) -> Vec<Rows> {
    flag.iter().map(subspace_rows).collect()
}

struct Clock {
    enabled: bool,
    times: BTreeMap<String, f64>,
}

impl Clock {
    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.times.insert(name.to_string(), start.elapsed().as_secs_f64() * 1e3);
        }
        out
    }
}

pub fn analyze(e: &EvolutionAlgebra, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut clock = Clock {
        enabled: opts.timings,
        times: BTreeMap::new(),
    };

    let ann_series = clock.time("upper_annihilating_series", || radicals::upper_annihilating_series(e));
    let abelian = clock.time("one_dim_abelian_ideals", || radicals::one_dim_abelian_ideals(e));
    let asoc1 = clock.time("asoc1", || radicals::asoc1(e));
    let series = clock.time("sn_series", || radicals::sn_series(e));
    let snil = series.last().clone();
    let superv = clock.time("supersolvable", || supersolvable::is_supersolvable(e));
    let tk_section = clock.time("tk", || Section::from_result(tk_section(e), "not in T_K"))?;
    let nil = clock.time("nilradical", || radicals::nilradical_if_exists(e, &opts.budget));
    let phi = clock.time("phi_free", || phi_section(e, &opts.budget))?;
    let classification = clock.time("classification", || classification_section(e));

    Ok(AnalysisReport {
        algebra: AlgebraFile::from_algebra(e),
        annihilator: subspace_rows(&e.annihilator()),
        derived: subspace_rows(&e.derived()),
        upper_annihilating_series: AnnSection {
            terms: ann_series.terms.iter().map(subspace_rows).collect(),
            stabilized_at: ann_series.stabilized_at,
            bnil: subspace_rows(ann_series.last()),
        },
        one_dim_abelian_ideals: AbelianIdealsSection {
            ann_part: subspace_rows(&abelian.ann_part),
            tk_records: abelian
                .tk_records
                .iter()
                .map(|r| RecordJson {
                    w: vector_strings(&r.w),
                    j: subspace_rows(&r.j),
                })
                .collect(),
        },
        asoc1: subspace_rows(&asoc1),
        sn_series: SeriesSection {
            steps: series
                .steps
                .iter()
                .map(|s| StepJson {
                    term: subspace_rows(&s.term),
                    gamma: one_based(&s.gamma),
                    classes: s
                        .records
                        .iter()
                        .map(|c| ClassJson {
                            indices: one_based(&c.indices),
                            w: vector_strings(&c.w),
                            alphas: c.alphas.iter().map(|a| a.to_string()).collect(),
                            lift: subspace_rows(&c.lift),
                        })
                        .collect(),
                })
                .collect(),
            stabilized_at: series.stabilized_at,
            flag: flag_rows(&series.flag(e)),
        },
        snil: subspace_rows(&snil),
        supersolvable: match &superv {
            Supersolvability::Supersolvable(flag) => SupersolvableSection {
                verdict: "supersolvable".into(),
                flag: Some(flag_rows(flag)),
            },
            Supersolvability::NotSupersolvable => SupersolvableSection {
                verdict: "not_supersolvable".into(),
                flag: None,
            },
            Supersolvability::Undetermined => SupersolvableSection {
                verdict: "undetermined".into(),
                flag: None,
            },
        },
        tk: tk_section,
        nilradical: match nil {
            NilradicalVerdict::Exists(s) => NilradicalSection {
                verdict: "exists".into(),
                nilradical: Some(subspace_rows(&s)),
                witness: None,
            },
            NilradicalVerdict::NotMaximal { witness, .. } => NilradicalSection {
                verdict: "snil_not_maximal".into(),
                nilradical: None,
                witness: Some(subspace_rows(&witness)),
            },
            NilradicalVerdict::Undetermined => NilradicalSection {
                verdict: "undetermined".into(),
                nilradical: None,
                witness: None,
            },
        },
        phi_free: phi,
        classification,
        timings_ms: opts.timings.then_some(clock.times),
    })
}

fn tk_section(e: &EvolutionAlgebra) -> Result<TkSection> {
    let form = tk::canonicalize_tk(e)?;
    let (f, phi) = tk::tk_frattini(e)?;
    Ok(TkSection {
        k: form.k,
        lambdas: form.lambdas.iter().map(|l| l.to_string()).collect(),
        canonical_basis: form.canonical_basis.row_vectors().iter().map(vector_strings).collect(),
        basis_change: form.basis_change.row_vectors().iter().map(vector_strings).collect(),
        nilradical: subspace_rows(&tk::nilradical_of_form(&form)),
        frattini_subalgebra: subspace_rows(&f),
        frattini_ideal: subspace_rows(&phi),
    })
}

fn phi_section(e: &EvolutionAlgebra, budget: &Budget) -> Result<PhiFreeSection> {
    let nec = frattini::phi_free_necessary(e);
    let full = frattini::phi_free_full_support(e)?;
    let brute = (|| -> Result<BruteForceJson> {
        let lattice = frattini::subalgebra_lattice(e, budget)?;
        let maximal = lattice.maximal_subalgebras();
        let f = maximal.iter().fold(e.whole(), |acc, m| acc.intersect(m));
        let phi = frattini::largest_ideal_in(e, &f);
        Ok(BruteForceJson {
            field: e.field().to_string(),
            maximal_subalgebras: maximal.iter().map(subspace_rows).collect(),
            frattini_subalgebra: subspace_rows(&f),
            phi_free: phi.is_zero(),
            frattini_ideal: subspace_rows(&phi),
            dually_atomistic: lattice.is_dually_atomistic(),
        })
    })();
    Ok(PhiFreeSection {
        necessary: NecessaryJson {
            bnil_eq_ann: nec.bnil_eq_ann,
            snil_sq_ideal: nec.snil_sq_ideal,
            snil_eq_asoc1: nec.snil_eq_asoc1,
            passes: nec.passes(),
        },
        snil_eq_asoc1: frattini::snil_ab_check(e)?,
        full_support: FullSupportJson {
            applicable: full.applicable,
            phi_free: full.phi_free,
            m: full.decomposition.as_ref().map(|d| d.m),
            k: full.decomposition.as_ref().map(|d| subspace_rows(&d.k)),
            ann: full.decomposition.as_ref().map(|d| subspace_rows(&d.ann)),
        },
        brute_force: Section::from_result(brute, "requires prime field")?,
    })
}

pub fn kind_name(kind: &AlmostAbelian) -> &'static str {
    match kind {
        AlmostAbelian::Abelian => "abelian",
        AlmostAbelian::AlmostBasicAbelian {
            canonical: NormalForm::En1,
            ..
        } => "almost_basic_abelian_en1",
        AlmostAbelian::AlmostBasicAbelian {
            canonical: NormalForm::En2,
            ..
        } => "almost_basic_abelian_en2",
        AlmostAbelian::NilpotentAlmostAbelian => "nilpotent_almost_abelian",
        AlmostAbelian::TKCodimTwo => "tk_codim_two",
        AlmostAbelian::NotAlmostAbelian => "not_almost_abelian",
    }
}

pub fn classification_section(e: &EvolutionAlgebra) -> ClassificationSection {
    let v = classify::almost_abelian_classify(e);
    let normal_form_basis = match &v.kind {
        AlmostAbelian::AlmostBasicAbelian { basis, .. } => {
            Some(basis.row_vectors().iter().map(vector_strings).collect())
        }
        _ => None,
    };
    ClassificationSection {
        kind: kind_name(&v.kind).into(),
        normal_form_basis,
        abelian_ideal: v.abelian_ideal.as_ref().map(subspace_rows),
        dually_atomistic: v.dually_atomistic,
        phi_free: v.phi_free,
        dually_atomistic_structural: classify::dually_atomistic_structural(e),
    }
}
