//! Search for a complete flag of ideals `0 ⊊ I_1 ⊊ ⋯ ⊊ I_n = E`.

use std::collections::HashSet;

use crate::algebra::EvolutionAlgebra;
use crate::enumerate::{self, Budget};
use crate::linalg::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Supersolvability {
    /// Flag of ideals with dimensions `0, 1, …, n`.
    Supersolvable(Vec<Subspace>),
    NotSupersolvable,
    /// Only reachable over infinite fields, where lines inside the
    /// annihilator are sampled rather than enumerated.
    Undetermined,
}

impl Supersolvability {
    pub fn flag(&self) -> Option<&[Subspace]> {
        match self {
            Supersolvability::Supersolvable(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_supersolvable(&self) -> bool {
        matches!(self, Supersolvability::Supersolvable(_))
    }
}

pub fn is_supersolvable(e: &EvolutionAlgebra) -> Supersolvability {
    let mut search = Search {
        failed: HashSet::new(),
        complete: true,
    };
    match search.run(e) {
        Some(flag) => Supersolvability::Supersolvable(flag),
        None if search.complete => Supersolvability::NotSupersolvable,
        None => Supersolvability::Undetermined,
    }
}

/// Checks that `flag` is a chain of ideals of `e` with dimensions `0..=n`.
pub fn is_ideal_flag(e: &EvolutionAlgebra, flag: &[Subspace]) -> bool {
    flag.len() == e.dim() + 1
        && flag.iter().enumerate().all(|(i, s)| s.dim() == i && e.is_ideal(s))
        && flag.windows(2).all(|w| w[1].contains(&w[0]))
}

struct Search {
    failed: HashSet<EvolutionAlgebra>,
    complete: bool,
}

impl Search {
    fn candidates(&mut self, e: &EvolutionAlgebra) -> Vec<Subspace> {
        let ideals = e.one_dim_ideals();
        let w = &ideals.free_part;
        let mut out: Vec<Subspace> = w
            .basis()
            .iter()
            .map(|v| e.span(std::slice::from_ref(v)).expect("basis vector"))
            .collect();
        out.extend(ideals.lines.iter().cloned());
        if w.dim() >= 2 {
            match enumerate::lines_in(w, &Budget::default()) {
                Ok(lines) => {
                    for l in lines {
                        if !out.contains(&l) {
                            out.push(l);
                        }
                    }
                }
                Err(_) => self.complete = false,
            }
        }
        out
    }

    fn run(&mut self, e: &EvolutionAlgebra) -> Option<Vec<Subspace>> {
        if e.dim() == 0 {
            return Some(vec![e.zero_subspace()]);
        }
        for line in self.candidates(e) {
            let q = e.quotient(&line).expect("one-dimensional ideal");
            if self.failed.contains(&q.algebra) {
                continue;
            }
            match self.run(&q.algebra) {
                Some(flag) => {
                    let mut out = vec![e.zero_subspace()];
                    out.extend(flag.iter().map(|s| q.preimage(s)));
                    return Some(out);
                }
                None => {
                    self.failed.insert(q.algebra.clone());
                }
            }
        }
        None
    }
}
