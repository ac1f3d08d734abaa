//! Annihilating series, one-dimensional abelian ideals and the supersolvable
//! nilpotent series `N^1 ⊆ N^2 ⊆ ⋯` whose last term is `snil(E)`.

use std::collections::BTreeMap;

use crate::algebra::{EvolutionAlgebra, PowerKind};
use crate::enumerate::{self, Budget};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::scalar::Scalar;
use crate::tk;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnSeries {
    /// `ann^1 ⊆ ann^2 ⊆ ⋯ ⊆ ann^r`.
    pub terms: Vec<Subspace>,
    pub stabilized_at: usize,
}

impl AnnSeries {
    pub fn last(&self) -> &Subspace {
        self.terms.last().expect("series has at least one term")
    }
}

/// `ann^i = span{e_j : e_j^2 ∈ ann^{i-1}}`, starting from `ann^0 = 0`.
pub fn upper_annihilating_series(e: &EvolutionAlgebra) -> AnnSeries {
    let mut terms: Vec<Subspace> = Vec::new();
    let mut prev = e.zero_subspace();
    loop {
        let idx: Vec<usize> = (0..e.dim())
            .filter(|&j| prev.contains_vector(&e.square_of_basis(j)))
            .collect();
        let next = e.coordinate_subspace(&idx);
        if !terms.is_empty() && next == prev {
            break;
        }
        terms.push(next.clone());
        prev = next;
    }
    AnnSeries {
        stabilized_at: terms.len(),
        terms,
    }
}

/// Largest nilpotent basic ideal.
pub fn basic_nilradical(e: &EvolutionAlgebra) -> Subspace {
    upper_annihilating_series(e).last().clone()
}

/// A one-dimensional abelian ideal `span{w}` outside the annihilator, with
/// the basic ideal `J = span{e_i : i ∈ supp(w)}` whose derived subalgebra
/// it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TkRecord {
    pub w: Vector,
    pub j: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneDimAbelian {
    /// Every line in here is an abelian ideal.
    pub ann_part: Subspace,
    pub tk_records: Vec<TkRecord>,
}

pub fn one_dim_abelian_ideals(e: &EvolutionAlgebra) -> OneDimAbelian {
    let ann = e.annihilator();
    let mut seen: Vec<Vector> = Vec::new();
    let mut records = Vec::new();
    for k in 0..e.dim() {
        let sq = e.square_of_basis(k);
        if sq.is_zero() {
            continue;
        }
        let w = sq.normalized();
        if seen.contains(&w) {
            continue;
        }
        seen.push(w.clone());
        if ann.contains_vector(&w) {
            continue;
        }
        let line = e.span(std::slice::from_ref(&w)).expect("square in ambient space");
        let supp = w.support();
        let closed = supp.iter().all(|&i| line.contains_vector(&e.square_of_basis(i)));
        if closed && e.square(&w).is_zero() {
            records.push(TkRecord {
                j: e.coordinate_subspace(&supp),
                w,
            });
        }
    }
    OneDimAbelian {
        ann_part: ann,
        tk_records: records,
    }
}

/// Sum of all one-dimensional abelian ideals.
pub fn asoc1(e: &EvolutionAlgebra) -> Subspace {
    let parts = one_dim_abelian_ideals(e);
    parts
        .tk_records
        .iter()
        .fold(parts.ann_part, |acc, r| acc.add_vector(&r.w))
}

/// One collinearity class of a series step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    /// Indices `k` outside the previous support whose squares reduce onto
    /// the line of `w`.
    pub indices: Vec<usize>,
    /// Reduced representative, disjoint in support from the previous term.
    pub w: Vector,
    /// `e_k^2 ≡ α_k w` modulo the previous term, aligned with `indices`.
    pub alphas: Vec<Scalar>,
    /// `{x supported on supp(w) : x·w ∈ N^{i-1}}`.
    pub lift: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesStep {
    /// Indices `k` outside the previous support with `e_k^2 ∈ N^{i-1}`.
    pub gamma: Vec<usize>,
    pub records: Vec<ClassRecord>,
    pub term: Subspace,
    /// Ideals of `E` strictly between `N^{i-1}` and `N^i`, one dimension apart,
    /// ending with `N^i`.
    pub flag: Vec<Subspace>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SNSeries {
    pub steps: Vec<SeriesStep>,
    pub stabilized_at: usize,
}

impl SNSeries {
    pub fn terms(&self) -> Vec<Subspace> {
        self.steps.iter().map(|s| s.term.clone()).collect()
    }

    pub fn last(&self) -> &Subspace {
        &self.steps.last().expect("series has at least one step").term
    }

    /// Complete flag of ideals of `E` from `0` up to the last term.
    pub fn flag(&self, e: &EvolutionAlgebra) -> Vec<Subspace> {
        let mut out = vec![e.zero_subspace()];
        for step in &self.steps {
            out.extend(step.flag.iter().cloned());
        }
        out
    }
}

pub fn sn_series(e: &EvolutionAlgebra) -> SNSeries {
    let mut steps = vec![series_step(e, &e.zero_subspace())];
    loop {
        let prev = &steps.last().expect("non-empty").term;
        let step = series_step(e, prev);
        if step.term == *prev {
            break;
        }
        steps.push(step);
    }
    SNSeries {
        stabilized_at: steps.len(),
        steps,
    }
}

fn series_step(e: &EvolutionAlgebra, prev: &Subspace) -> SeriesStep {
    let n = e.dim();
    let field = e.field();
    let prev_supp = prev.support();
    let outside: Vec<usize> = (0..n).filter(|i| !prev_supp.contains(i)).collect();

    let mut gamma = Vec::new();
    // class line -> member indices, ordered by first member
    let mut classes: Vec<(Vector, Vec<usize>)> = Vec::new();
    let mut class_of: BTreeMap<Vector, usize> = BTreeMap::new();
    for &k in &outside {
        let r = prev.reduce(&e.square_of_basis(k));
        if r.is_zero() {
            gamma.push(k);
            continue;
        }
        let key = r.normalized();
        match class_of.get(&key) {
            Some(&c) => classes[c].1.push(k),
            None => {
                class_of.insert(key.clone(), classes.len());
                classes.push((key, vec![k]));
            }
        }
    }

    let mut term = prev.clone();
    let mut flag = Vec::new();
    let push = |term: &mut Subspace, v: &Vector, flag: &mut Vec<Subspace>| {
        let next = term.add_vector(v);
        if next.dim() > term.dim() {
            *term = next;
            flag.push(term.clone());
        }
    };
    for &k in &gamma {
        push(&mut term, &Vector::unit(field, n, k), &mut flag);
    }

    let mut records = Vec::new();
    for (w, indices) in classes {
        let supp = w.support();
        if !supp.iter().all(|i| outside.contains(i)) {
            continue;
        }
        if !prev.contains_vector(&e.square(&w)) {
            continue;
        }
        let lead = w.leading_index().expect("nonzero representative");
        // e_i^2 ≡ c_i w modulo the previous term
        let mut coeffs = Vec::with_capacity(supp.len());
        let mut closed = true;
        for &i in &supp {
            let r = prev.reduce(&e.square_of_basis(i));
            let c = r.get(lead).clone();
            if r != w.scale(&c) {
                closed = false;
                break;
            }
            coeffs.push(c);
        }
        if !closed || coeffs.iter().all(Scalar::is_zero) {
            continue;
        }
        let alphas = indices
            .iter()
            .map(|&k| prev.reduce(&e.square_of_basis(k)).get(lead).clone())
            .collect();

        // x·w ≡ (Σ x_i w_i c_i) w, so the lift is a hyperplane of span{e_i : i ∈ supp(w)}
        let a: Vec<Scalar> = supp.iter().zip(&coeffs).map(|(&i, c)| w.get(i) * c).collect();
        let p = a.iter().position(|x| !x.is_zero()).expect("some coefficient is nonzero");
        let inv = a[p].inv().expect("nonzero");
        let mut gens = Vec::with_capacity(supp.len() - 1);
        for (t, &i) in supp.iter().enumerate() {
            if t == p {
                continue;
            }
            let mut v = Vector::unit(field, n, i);
            v.set(supp[p], -(&a[t] * &inv));
            gens.push(v);
        }
        let lift = e.span(&gens).expect("vectors in ambient space");

        push(&mut term, &w, &mut flag);
        for v in lift.basis() {
            push(&mut term, v, &mut flag);
        }
        records.push(ClassRecord {
            indices,
            w,
            alphas,
            lift,
        });
    }

    SeriesStep {
        gamma,
        records,
        term,
        flag,
    }
}

/// Largest `E`-supersolvable nilpotent ideal.
pub fn snil(e: &EvolutionAlgebra) -> Subspace {
    sn_series(e).last().clone()
}

/// Nilpotency of an ideal through the series: with `N^k` the largest term
/// inside `I`, some right power of `I` falls into `N^k` and the coordinate
/// restriction of `I` to `supp(N^k)` stays in `N^k`.
pub fn is_nilpotent_ideal_characterized(e: &EvolutionAlgebra, i: &Subspace) -> Result<bool> {
    if !e.is_ideal(i) {
        return Err(Error::NotAnIdeal);
    }
    let series = sn_series(e);
    let mut nk = e.zero_subspace();
    for t in series.terms() {
        if i.contains(&t) {
            nk = t;
        }
    }
    let powers = e.power_sequence(i, PowerKind::RightPowers, e.dim() + 1)?;
    if !powers.iter().any(|p| nk.contains(p)) {
        return Ok(false);
    }
    let supp = nk.support();
    Ok(i.basis().iter().all(|w| nk.contains_vector(&w.restrict(&supp))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NilradicalVerdict {
    /// `snil(E)` is the unique maximal nilpotent ideal.
    Exists(Subspace),
    /// A nilpotent ideal strictly containing `snil(E)`.
    NotMaximal { snil: Subspace, witness: Subspace },
    Undetermined,
}

/// Over prime fields within `budget`, all nilpotent ideals are enumerated.
/// Otherwise only one-step extensions of `snil(E)` are tried, which can
/// refute maximality but never confirm it.
pub fn nilradical_if_exists(e: &EvolutionAlgebra, budget: &Budget) -> NilradicalVerdict {
    let s = snil(e);
    if tk::detect_tk(e) && tk::tk_nilradical(e).as_ref() == Ok(&s) {
        return NilradicalVerdict::Exists(s);
    }
    if e.field().is_finite() {
        if let Ok(all) = enumerate::enumerate_subspaces(e.field(), e.dim(), budget) {
            let nilpotent: Vec<Subspace> = all
                .into_iter()
                .filter(|u| e.is_ideal(u) && e.is_nilpotent(u).unwrap_or(false))
                .collect();
            let maximal = maximal_elements(&nilpotent);
            return match maximal.iter().find(|m| m.contains(&s) && m.dim() > s.dim()) {
                Some(m) => NilradicalVerdict::NotMaximal {
                    snil: s,
                    witness: m.clone(),
                },
                None => NilradicalVerdict::Exists(s),
            };
        }
    }
    match one_step_extension(e, &s) {
        Some(witness) => NilradicalVerdict::NotMaximal { snil: s, witness },
        None => NilradicalVerdict::Undetermined,
    }
}

fn one_step_extension(e: &EvolutionAlgebra, s: &Subspace) -> Option<Subspace> {
    let field = e.field();
    let n = e.dim();
    let mut candidates: Vec<Vector> = Vec::new();
    for k in 0..n {
        let r = s.reduce(&e.square_of_basis(k));
        let v = if r.is_zero() {
            Vector::unit(field, n, k)
        } else {
            r.normalized()
        };
        if !s.contains_vector(&v) && !candidates.contains(&v) {
            candidates.push(v);
        }
    }
    candidates.into_iter().find_map(|v| {
        let i = e.ideal_generated(&s.add_vector(&v));
        (i.dim() > s.dim() && e.is_nilpotent(&i).unwrap_or(false)).then_some(i)
    })
}

/// Elements not strictly contained in another element.
pub fn maximal_elements(subspaces: &[Subspace]) -> Vec<Subspace> {
    subspaces
        .iter()
        .filter(|a| !subspaces.iter().any(|b| b.dim() > a.dim() && b.contains(a)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    #[test]
    fn annihilating_series() {
        let e = EvolutionAlgebra::abelian(q(), 3);
        let s = upper_annihilating_series(&e);
        assert_eq!(s.terms, vec![e.whole()]);
        let e = corpus::e_n2(q(), 3);
        assert!(basic_nilradical(&e).is_full());
        let e = corpus::eight_dim(q());
        assert_eq!(basic_nilradical(&e), e.coordinate_subspace(&[3]));
        let e = corpus::e_k(q(), 2, &[1, -1, 0]).unwrap();
        let s = upper_annihilating_series(&e);
        assert_eq!(s.terms, vec![e.annihilator()]);
    }

    #[test]
    fn abelian_ideals_eight_dim() {
        let e = corpus::eight_dim(q());
        let parts = one_dim_abelian_ideals(&e);
        assert_eq!(parts.ann_part, e.coordinate_subspace(&[3]));
        assert_eq!(parts.tk_records.len(), 1);
        assert_eq!(parts.tk_records[0].w, Vector::from_i64(q(), &[1, 1, 1, 0, 0, 0, 0, 0]));
        assert_eq!(parts.tk_records[0].j, e.coordinate_subspace(&[0, 1, 2]));
    }

    #[test]
    fn abelian_ideals_absorb_annihilator_indices() {
        let e = corpus::e_k(q(), 3, &[1, -1, 0]).unwrap();
        let parts = one_dim_abelian_ideals(&e);
        assert_eq!(parts.ann_part, e.coordinate_subspace(&[2]));
        assert_eq!(parts.tk_records.len(), 1);
        assert_eq!(parts.tk_records[0].w, Vector::from_i64(q(), &[1, 1, 1]));
    }

    #[test]
    fn asoc1_values() {
        let e = corpus::phi_nonzero(q());
        assert_eq!(asoc1(&e), e.span_i64(&[&[1, 1, 0]]));
        assert!(asoc1(&EvolutionAlgebra::abelian(q(), 2)).is_full());
        assert!(asoc1(&corpus::two_maximal_nilpotent(q())).is_zero());
    }

    #[test]
    fn eight_dim_series() {
        let e = corpus::eight_dim(q());
        let s = sn_series(&e);
        assert_eq!(s.stabilized_at, 2);
        let n1 = e.span_i64(&[&[-1, 1, 0, 0, 0, 0, 0, 0], &[2, 0, 1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0, 0, 0]]);
        assert_eq!(s.steps[0].term, n1);
        let n2 = n1.add_vector(&Vector::from_i64(q(), &[0, 0, 0, 0, 1, 1, 0, 0]))
            .add_vector(&Vector::from_i64(q(), &[0, 0, 0, 0, 0, 0, 1, 1]));
        assert_eq!(s.steps[1].term, n2);
        assert!(s.steps[1].records.iter().all(|r| r.w.support().iter().all(|i| !n1.support().contains(i))));
        let flag = s.flag(&e);
        assert_eq!(flag.len(), 6);
        for (d, f) in flag.iter().enumerate() {
            assert_eq!(f.dim(), d);
            assert!(e.is_ideal(f));
        }
    }

    #[test]
    fn snil_values() {
        let e = corpus::snil_square_not_ideal(q());
        assert_eq!(snil(&e), e.span_i64(&[&[1, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 1]]));
        assert!(snil(&corpus::nil_ne_snil(q())).is_zero());
        assert!(snil(&corpus::two_maximal_nilpotent(q())).is_zero());
        assert!(snil(&EvolutionAlgebra::abelian(q(), 3)).is_full());
    }

    #[test]
    fn characterization_examples() {
        let e = corpus::two_maximal_nilpotent(q());
        let n1 = e.span_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(is_nilpotent_ideal_characterized(&e, &n1), Ok(true));
        assert_eq!(is_nilpotent_ideal_characterized(&e, &e.whole()), Ok(false));
        let e = corpus::eight_dim(q());
        assert_eq!(is_nilpotent_ideal_characterized(&e, &snil(&e)), Ok(true));
        assert_eq!(
            is_nilpotent_ideal_characterized(&e, &e.span_i64(&[&[1, 0, 0, 0, 0, 0, 0, 0]])),
            Err(Error::NotAnIdeal)
        );
    }

    #[test]
    fn nilradical_verdicts() {
        let f5 = FieldSpec::prime(5).unwrap();
        let e = corpus::e_k(q(), 3, &[1, 1, -2]).unwrap();
        let budget = Budget::default();
        assert_eq!(
            nilradical_if_exists(&e, &budget),
            NilradicalVerdict::Exists(tk::tk_nilradical(&e).unwrap())
        );
        let e = corpus::e_n1(q(), 3);
        assert_eq!(nilradical_if_exists(&e, &budget), NilradicalVerdict::Undetermined);
        let e = corpus::e_k(f5, 3, &[1, 1, -2]).unwrap();
        assert_eq!(
            nilradical_if_exists(&e, &budget),
            NilradicalVerdict::Exists(tk::tk_nilradical(&e).unwrap())
        );
        let e = corpus::nil_ne_snil(q());
        assert!(matches!(
            nilradical_if_exists(&e, &budget),
            NilradicalVerdict::NotMaximal { ref snil, .. } if snil.is_zero()
        ));
        let e = corpus::nil_ne_snil(f5);
        assert_eq!(
            nilradical_if_exists(&e, &budget),
            NilradicalVerdict::NotMaximal {
                snil: e.zero_subspace(),
                witness: e.span_i64(&[&[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
            }
        );
        let e = corpus::two_maximal_nilpotent(f5);
        assert!(matches!(nilradical_if_exists(&e, &budget), NilradicalVerdict::NotMaximal { .. }));
    }
}
