//! Seeded cross-checks of structural theorems on random algebras over a
//! prime field.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::EvolutionAlgebra;
use crate::corpus;
use crate::enumerate::{self, Budget};
use crate::error::{Error, Result};
use crate::frattini;
use crate::linalg::{Subspace, Vector};
use crate::radicals;
use crate::scalar::FieldSpec;
use crate::supersolvable;
use crate::tk;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub dim: usize,
    pub field: FieldSpec,
    pub samples: usize,
    pub seed: u64,
    pub budget: Budget,
}

pub const PROPERTIES: &[&str] = &[
    "sum_stability",
    "nilpotency_characterization",
    "tk_nilradical_oracle",
    "frattini_in_derived",
    "dually_atomistic_implies_phi_free",
    "supersolvable_maximal_codim_one",
    "quotient_multiplicative",
    "grassmann_identity",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.violations == 0)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "dim {} over {}, {} samples, seed {}", c.dim, c.field, c.samples, c.seed)?;
        for p in &self.properties {
            let status = if p.violations == 0 { "PASS" } else { "FAIL" };
            write!(f, "{status} {:<36} checked {:>6}  violations {}", p.name, p.checked, p.violations)?;
            if let Some(msg) = &p.first_failure {
                write!(f, "  first: {msg}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    violations: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.violations += other.violations;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

fn matrix_text(e: &EvolutionAlgebra) -> String {
    let rows: Vec<String> = (0..e.dim())
        .map(|i| {
            let v = e.square_of_basis(i);
            let cells: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn random_vector<R: Rng>(rng: &mut R, field: FieldSpec, n: usize) -> Vector {
    let p = field.modulus().expect("prime field") as i64;
    let coords: Vec<i64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
    Vector::from_i64(field, &coords)
}

fn random_subspace<R: Rng>(rng: &mut R, field: FieldSpec, n: usize) -> Subspace {
    let count = rng.gen_range(0..=n);
    let vs: Vec<Vector> = (0..count).map(|_| random_vector(rng, field, n)).collect();
    Subspace::span(field, n, &vs).expect("vectors of length n")
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    if !config.field.is_finite() {
        return Err(Error::NotFiniteField);
    }
    let n = config.dim;
    config.budget.check(enumerate::count_subspaces(n as u32, config.field.modulus().unwrap()))?;

    // one independent stream per sample keeps results identical under any
    // thread count
    let per_sample: Vec<Result<Vec<Tally>>> = (0..config.samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(s as u64);
            check_sample(&mut rng, config)
        })
        .collect();

    let mut totals: Vec<Tally> = PROPERTIES.iter().map(|_| Tally::default()).collect();
    for sample in per_sample {
        for (t, s) in totals.iter_mut().zip(sample?) {
            t.merge(s);
        }
    }
    Ok(VerifyReport {
        config: *config,
        properties: PROPERTIES
            .iter()
            .zip(totals)
            .map(|(name, t)| PropertyResult {
                name,
                checked: t.checked,
                violations: t.violations,
                first_failure: t.first_failure,
            })
            .collect(),
    })
}

fn check_sample(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Result<Vec<Tally>> {
    let field = config.field;
    let n = config.dim;
    let e = corpus::random_algebra(rng, field, n);
    let label = matrix_text(&e);
    let mut t: Vec<Tally> = PROPERTIES.iter().map(|_| Tally::default()).collect();

    let all = enumerate::enumerate_subspaces(field, n, &config.budget)?;
    let ideals: Vec<&Subspace> = all.iter().filter(|s| e.is_ideal(s)).collect();
    let nilpotent: Vec<&Subspace> = ideals.iter().copied().filter(|s| e.is_nilpotent(s).unwrap_or(false)).collect();
    let snil = radicals::snil(&e);

    for i in &nilpotent {
        let sum = i.sum(&snil);
        t[0].record(e.is_ideal(&sum) && e.is_nilpotent(&sum)?, || format!("{label}: I = {}", i.pretty()));
    }

    for i in &ideals {
        let direct = e.is_nilpotent(i)?;
        let via_series = radicals::is_nilpotent_ideal_characterized(&e, i)?;
        t[1].record(direct == via_series, || {
            format!("{label}: I = {}, direct {direct}, characterized {via_series}", i.pretty())
        });
    }

    if n >= 2 {
        let tk_algebra = corpus::random_tk(rng, field, n);
        let nil = tk::tk_nilradical(&tk_algebra)?;
        let ok = nil == tk::ann_of_derived(&tk_algebra)
            && tk_algebra.is_ideal(&nil)
            && tk_algebra.is_nilpotent(&nil)?
            && nil.codim() == 1;
        t[2].record(ok, || format!("{}: nil = {}", matrix_text(&tk_algebra), nil.pretty()));
    }

    let lattice = frattini::subalgebra_lattice(&e, &config.budget)?;
    let maximal = lattice.maximal_subalgebras();
    let f = maximal.iter().fold(e.whole(), |acc, m| acc.intersect(m));
    let derived = e.derived();
    let nilpotent_algebra = e.is_nilpotent_algebra();
    t[3].record(derived.contains(&f) && (!nilpotent_algebra || f == derived), || {
        format!("{label}: F = {}, E^2 = {}", f.pretty(), derived.pretty())
    });

    let phi = frattini::largest_ideal_in(&e, &f);
    if lattice.is_dually_atomistic() {
        t[4].record(phi.is_zero(), || format!("{label}: phi = {}", phi.pretty()));
    }

    if supersolvable::is_supersolvable(&e).is_supersolvable() {
        t[5].record(maximal.iter().all(|m| m.codim() == 1), || label.to_string());
    }

    for i in &ideals {
        let q = e.quotient(i)?;
        let u = random_vector(rng, field, n);
        let v = random_vector(rng, field, n);
        let lhs = q.project(&e.multiply(&u, &v));
        let rhs = q.algebra.multiply(&q.project(&u), &q.project(&v));
        let kernel_ok = q.algebra.dim() + i.dim() == n && i.basis().iter().all(|b| q.project(b).is_zero());
        t[6].record(lhs == rhs && kernel_ok, || format!("{label}: I = {}", i.pretty()));
    }

    let u = random_subspace(rng, field, n);
    let v = random_subspace(rng, field, n);
    let ok = u.sum(&v).dim() + u.intersect(&v).dim() == u.dim() + v.dim();
    t[7].record(ok, || format!("U = {}, V = {}", u.pretty(), v.pretty()));

    Ok(t)
}
