//! Frattini subalgebra and ideal, φ-freeness criteria and the subalgebra
//! lattice over prime fields.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::algebra::EvolutionAlgebra;
use crate::enumerate::{self, Budget};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::radicals;
use crate::tk;

/// All subalgebras, sorted by dimension and then canonical basis.
pub fn subalgebras(e: &EvolutionAlgebra, budget: &Budget) -> Result<Vec<Subspace>> {
    let all = enumerate::enumerate_subspaces(e.field(), e.dim(), budget)?;
    let mut subs: Vec<Subspace> = all.into_par_iter().filter(|s| e.is_subalgebra(s)).collect();
    subs.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
    Ok(subs)
}

/// `a ⊆ b` with the pivot-subset shortcut: leading positions of vectors in
/// a subspace are exactly its pivots.
fn contained(a: &Subspace, b: &Subspace) -> bool {
    a.dim() <= b.dim() && a.pivots().iter().all(|p| b.pivots().contains(p)) && b.contains(a)
}

fn maximal_among(subs: &[Subspace], n: usize) -> Vec<Subspace> {
    let proper: Vec<&Subspace> = subs.iter().filter(|s| s.dim() < n).collect();
    proper
        .par_iter()
        .filter(|a| !proper.iter().any(|b| b.dim() > a.dim() && contained(a, b)))
        .map(|a| (*a).clone())
        .collect()
}

pub fn maximal_subalgebras(e: &EvolutionAlgebra, budget: &Budget) -> Result<Vec<Subspace>> {
    Ok(maximal_among(&subalgebras(e, budget)?, e.dim()))
}

fn intersection_of(e: &EvolutionAlgebra, subs: &[Subspace]) -> Subspace {
    subs.iter().fold(e.whole(), |acc, s| acc.intersect(s))
}

/// Intersection of all maximal subalgebras (`E` itself when there are none).
pub fn frattini_subalgebra(e: &EvolutionAlgebra, budget: &Budget) -> Result<Subspace> {
    Ok(intersection_of(e, &maximal_subalgebras(e, budget)?))
}

/// Largest ideal of `e` inside `u`: `K_{i+1} = {x ∈ K_i : x·E ⊆ K_i}`.
pub fn largest_ideal_in(e: &EvolutionAlgebra, u: &Subspace) -> Subspace {
    let mut k = u.clone();
    loop {
        let good: Vec<usize> = (0..e.dim())
            .filter(|&j| k.contains_vector(&e.square_of_basis(j)))
            .collect();
        let next = k.intersect(&e.coordinate_subspace(&good));
        if next == k {
            return k;
        }
        k = next;
    }
}

pub fn frattini_ideal(e: &EvolutionAlgebra, budget: &Budget) -> Result<Subspace> {
    Ok(largest_ideal_in(e, &frattini_subalgebra(e, budget)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrattiniData {
    pub maximal: Vec<Subspace>,
    pub f: Subspace,
    pub phi: Subspace,
}

/// Maximal subalgebras, `F(E)` and `φ(E)` from a single enumeration.
pub fn frattini(e: &EvolutionAlgebra, budget: &Budget) -> Result<FrattiniData> {
    let maximal = maximal_subalgebras(e, budget)?;
    let f = intersection_of(e, &maximal);
    let phi = largest_ideal_in(e, &f);
    Ok(FrattiniData { maximal, f, phi })
}

/// `F(E) ⊆ E^2`, with equality when `E` is nilpotent.
pub fn check_f_in_derived(e: &EvolutionAlgebra, budget: &Budget) -> Result<bool> {
    let f = frattini_subalgebra(e, budget)?;
    let d = e.derived();
    Ok(d.contains(&f) && (!e.is_nilpotent_algebra() || f == d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NecessaryConditions {
    pub bnil_eq_ann: bool,
    pub snil_sq_ideal: bool,
    /// Only evaluated when `snil^2` is an ideal.
    pub snil_eq_asoc1: Option<bool>,
}

impl NecessaryConditions {
    /// `false` certifies that `E` is not φ-free.
    pub fn passes(&self) -> bool {
        self.bnil_eq_ann && self.snil_eq_asoc1 != Some(false)
    }
}

pub fn phi_free_necessary(e: &EvolutionAlgebra) -> NecessaryConditions {
    let s = radicals::snil(e);
    let s2 = e.subspace_product(&s, &s);
    let snil_sq_ideal = e.is_ideal(&s2);
    NecessaryConditions {
        bnil_eq_ann: radicals::basic_nilradical(e) == e.annihilator(),
        snil_sq_ideal,
        snil_eq_asoc1: snil_sq_ideal.then(|| s == radicals::asoc1(e)),
    }
}

/// `snil = asoc1`, cross-checked against `snil^2 = 0 ∧ snil = N^1`.
pub fn snil_ab_check(e: &EvolutionAlgebra) -> Result<bool> {
    let series = radicals::sn_series(e);
    let s = series.last();
    let lhs = *s == radicals::asoc1(e);
    let rhs = e.subspace_product(s, s).is_zero() && *s == series.steps[0].term;
    if lhs != rhs {
        return Err(Error::TheoremViolation(format!(
            "snil = asoc1 is {lhs} but snil^2 = 0 and snil = N^1 is {rhs}"
        )));
    }
    Ok(lhs)
}

/// `E = K ⊕ ann(E)` with `K` a sum of `m` copies of `E_2(1,-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub m: usize,
    pub k: Subspace,
    pub ann: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullSupportVerdict {
    pub applicable: bool,
    pub phi_free: Option<bool>,
    pub decomposition: Option<Decomposition>,
}

/// φ-freeness when `snil(E)` has full support: φ-free iff `snil^2 = 0` and
/// `snil = N^1`, in which case the splitting is constructed and verified.
pub fn phi_free_full_support(e: &EvolutionAlgebra) -> Result<FullSupportVerdict> {
    let series = radicals::sn_series(e);
    let s = series.last();
    if s.support().len() != e.dim() || e.dim() == 0 {
        return Ok(FullSupportVerdict {
            applicable: false,
            phi_free: None,
            decomposition: None,
        });
    }
    let phi_free = e.subspace_product(s, s).is_zero() && *s == series.steps[0].term;
    if !phi_free {
        return Ok(FullSupportVerdict {
            applicable: true,
            phi_free: Some(false),
            decomposition: None,
        });
    }
    let records = radicals::one_dim_abelian_ideals(e).tk_records;
    let mut k = e.zero_subspace();
    for r in &records {
        let idx = r.w.support();
        let j = e.basic_subalgebra(&idx)?;
        let form = tk::canonicalize_tk(&j)?;
        if form.k != 2 {
            return Err(Error::TheoremViolation(format!(
                "basic ideal {} has {} non-annihilating canonical vectors",
                r.j.pretty(),
                form.k
            )));
        }
        let (kj, _) = tk::split_over_annihilator(&j)?;
        for v in kj.basis() {
            k = k.add_vector(&e.embed(&idx, v));
        }
    }
    let ann = e.annihilator();
    if !k.intersect(&ann).is_zero() || !k.sum(&ann).is_full() || k.dim() != 2 * records.len() {
        return Err(Error::TheoremViolation("E does not split as K ⊕ ann(E)".into()));
    }
    Ok(FullSupportVerdict {
        applicable: true,
        phi_free: Some(true),
        decomposition: Some(Decomposition {
            m: records.len(),
            k,
            ann,
        }),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraLattice {
    pub algebra: EvolutionAlgebra,
    /// Sorted by dimension, then canonical basis; first is `0`, last is `E`.
    pub nodes: Vec<Subspace>,
    /// Indices into `nodes`.
    pub maximal: Vec<usize>,
    /// `(lower, upper)` Hasse covers.
    pub cover_edges: Vec<(usize, usize)>,
}

pub fn subalgebra_lattice(e: &EvolutionAlgebra, budget: &Budget) -> Result<SubalgebraLattice> {
    let nodes = subalgebras(e, budget)?;
    let count = nodes.len();
    let words = count.div_ceil(64);
    // above[a]: strict supersets of a
    let above: Vec<Vec<u64>> = (0..count)
        .into_par_iter()
        .map(|a| {
            let mut bits = vec![0u64; words];
            for b in (a + 1)..count {
                if nodes[b].dim() > nodes[a].dim() && contained(&nodes[a], &nodes[b]) {
                    bits[b / 64] |= 1 << (b % 64);
                }
            }
            bits
        })
        .collect();
    let is_above = |a: usize, b: usize| above[a][b / 64] >> (b % 64) & 1 == 1;

    let mut cover_edges = Vec::new();
    for a in 0..count {
        for b in (a + 1)..count {
            if !is_above(a, b) {
                continue;
            }
            let between = ((a + 1)..b).any(|c| is_above(a, c) && is_above(c, b));
            if !between {
                cover_edges.push((a, b));
            }
        }
    }
    let top = count - 1;
    let maximal = cover_edges
        .iter()
        .filter(|&&(_, b)| b == top)
        .map(|&(a, _)| a)
        .filter(|&a| a != top)
        .collect();
    Ok(SubalgebraLattice {
        algebra: e.clone(),
        nodes,
        maximal,
        cover_edges,
    })
}

impl SubalgebraLattice {
    pub fn maximal_subalgebras(&self) -> Vec<Subspace> {
        self.maximal.iter().map(|&i| self.nodes[i].clone()).collect()
    }

    pub fn contains_node(&self, s: &Subspace) -> bool {
        self.nodes.binary_search_by(|n| n.dim().cmp(&s.dim()).then_with(|| n.cmp(s))).is_ok()
    }

    /// Proper subalgebras that are not the intersection of the maximal
    /// subalgebras containing them.
    pub fn non_atomistic_nodes(&self) -> Vec<Subspace> {
        let e = &self.algebra;
        let maximal = self.maximal_subalgebras();
        self.nodes
            .iter()
            .filter(|s| !s.is_full())
            .filter(|s| {
                let over: Vec<Subspace> = maximal.iter().filter(|m| contained(s, m)).cloned().collect();
                intersection_of(e, &over) != **s
            })
            .cloned()
            .collect()
    }

    pub fn is_dually_atomistic(&self) -> bool {
        self.non_atomistic_nodes().is_empty()
    }
}

/// Every proper subalgebra is an intersection of maximal subalgebras.
pub fn dually_atomistic(e: &EvolutionAlgebra, budget: &Budget) -> Result<bool> {
    Ok(subalgebra_lattice(e, budget)?.is_dually_atomistic())
}

/// Hasse diagram in DOT; nodes are labelled by dimension and canonical basis.
pub fn lattice_to_dot(l: &SubalgebraLattice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph subalgebras {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box];");
    for (i, s) in l.nodes.iter().enumerate() {
        let style = if l.maximal.contains(&i) { ", style=bold" } else { "" };
        let _ = writeln!(out, "  n{i} [label=\"dim {}: {}\"{style}];", s.dim(), s.pretty());
    }
    for &(a, b) in &l.cover_edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::scalar::FieldSpec;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn maximal_of_e2() {
        let e = corpus::e_k(f(5), 2, &[1, -1]).unwrap();
        let m = maximal_subalgebras(&e, &Budget::default()).unwrap();
        assert_eq!(m, vec![e.span_i64(&[&[1, 1]]), e.span_i64(&[&[1, -1]])]);
        assert!(frattini_subalgebra(&e, &Budget::default()).unwrap().is_zero());
    }

    #[test]
    fn abelian_planes() {
        let e = EvolutionAlgebra::abelian(f(3), 3);
        let m = maximal_subalgebras(&e, &Budget::default()).unwrap();
        assert_eq!(m.len(), 13);
        assert!(m.iter().all(|s| s.dim() == 2));
    }

    #[test]
    fn phi_nonzero_example() {
        let e = corpus::phi_nonzero(f(5));
        let data = frattini(&e, &Budget::default()).unwrap();
        assert_eq!(data.phi, e.coordinate_subspace(&[0, 1]));
        assert!(data.maximal.contains(&e.coordinate_subspace(&[0, 1])));
        let c = phi_free_necessary(&e);
        assert!(c.bnil_eq_ann && c.passes());
        assert_eq!(c.snil_eq_asoc1, Some(true));
        assert!(!dually_atomistic(&e, &Budget::default()).unwrap());
        let l = subalgebra_lattice(&e, &Budget::default()).unwrap();
        assert_eq!(l.nodes.len(), 5);
    }

    #[test]
    fn e_n2_frattini() {
        let e = corpus::e_n2(f(3), 3);
        let data = frattini(&e, &Budget::default()).unwrap();
        assert_eq!(data.f, e.coordinate_subspace(&[1]));
        assert_eq!(data.phi, e.coordinate_subspace(&[1]));
        assert!(check_f_in_derived(&e, &Budget::default()).unwrap());
        assert!(!phi_free_necessary(&e).bnil_eq_ann);
    }

    #[test]
    fn core_of_whole_space() {
        let e = corpus::eight_dim(FieldSpec::rational());
        assert!(largest_ideal_in(&e, &e.whole()).is_full());
        assert!(largest_ideal_in(&e, &e.coordinate_subspace(&[0])).is_zero());
    }

    #[test]
    fn snil_ab() {
        let q = FieldSpec::rational();
        assert_eq!(snil_ab_check(&corpus::phi_nonzero(q)), Ok(true));
        assert_eq!(snil_ab_check(&corpus::e_k(q, 3, &[1, 1, -2]).unwrap()), Ok(false));
        assert_eq!(snil_ab_check(&EvolutionAlgebra::abelian(q, 2)), Ok(true));
    }

    #[test]
    fn full_support() {
        let q = FieldSpec::rational();
        let v = phi_free_full_support(&corpus::e2_direct_sum(q, 2)).unwrap();
        assert_eq!(v.phi_free, Some(true));
        let d = v.decomposition.unwrap();
        assert_eq!(d.m, 2);
        assert!(d.ann.is_zero());
        let v = phi_free_full_support(&corpus::eight_dim(q)).unwrap();
        assert!(v.applicable);
        assert_eq!(v.phi_free, Some(false));
        let v = phi_free_full_support(&corpus::e_k(q, 3, &[1, 1, -2]).unwrap()).unwrap();
        assert_eq!((v.applicable, v.phi_free), (true, Some(false)));
        let v = phi_free_full_support(&corpus::nil_ne_snil(q)).unwrap();
        assert!(!v.applicable);
    }

    #[test]
    fn lattice_shapes() {
        let e = corpus::e_k(f(3), 2, &[1, -1]).unwrap();
        let l = subalgebra_lattice(&e, &Budget::default()).unwrap();
        assert_eq!(l.nodes.len(), 4);
        assert_eq!(l.cover_edges.len(), 4);
        let dot = lattice_to_dot(&l);
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("->").count(), 4);

        let e = EvolutionAlgebra::abelian(f(5), 1);
        let l = subalgebra_lattice(&e, &Budget::default()).unwrap();
        assert_eq!(l.cover_edges, vec![(0, 1)]);
        assert_eq!(l.maximal, vec![0]);
    }

    #[test]
    fn dually_atomistic_example() {
        let e = corpus::dually_atomistic_example(f(5));
        let l = subalgebra_lattice(&e, &Budget::default()).unwrap();
        assert!(l.is_dually_atomistic());
        for rows in [
            &[&[1, 0, 0][..]][..],
            &[&[0, 1, 0]],
            &[&[1, 1, 0]],
            &[&[1, 1, 2]],
            &[&[1, 0, 0], &[0, 1, 0]],
            &[&[1, 0, 0], &[0, 1, 2]],
            &[&[0, 1, 0], &[1, 0, 2]],
            &[&[0, 0, 1], &[1, 1, 0]],
        ] {
            assert!(l.contains_node(&e.span_i64(rows)), "{rows:?}");
        }
    }
}
