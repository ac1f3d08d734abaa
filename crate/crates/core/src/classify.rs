//! Almost abelian evolution algebras and the structural test for being
//! dually atomistic.

use crate::algebra::EvolutionAlgebra;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::radicals;
use crate::tk;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalForm {
    /// `e_1^2 = e_1`, other squares zero.
    En1,
    /// `e_1^2 = e_2`, other squares zero.
    En2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlmostAbelian {
    Abelian,
    AlmostBasicAbelian {
        canonical: NormalForm,
        /// Rows are the new natural basis in input coordinates.
        basis: Matrix,
    },
    NilpotentAlmostAbelian,
    TKCodimTwo,
    NotAlmostAbelian,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub kind: AlmostAbelian,
    /// Abelian ideal of codimension one, when one was found.
    pub abelian_ideal: Option<Subspace>,
    pub dually_atomistic: Option<bool>,
    pub phi_free: Option<bool>,
}

pub fn almost_abelian_classify(e: &EvolutionAlgebra) -> ClassificationVerdict {
    let n = e.dim();
    let field = e.field();
    let ann = e.annihilator();
    if e.derived().is_zero() {
        return ClassificationVerdict {
            kind: AlmostAbelian::Abelian,
            abelian_ideal: None,
            dually_atomistic: Some(true),
            phi_free: Some(true),
        };
    }

    if ann.codim() == 1 {
        let p = (0..n).find(|&i| !e.square_of_basis(i).is_zero()).expect("one nonzero square");
        let alpha = e.square_of_basis(p);
        let others: Vec<usize> = (0..n).filter(|&i| i != p).collect();
        let (canonical, rows) = if !alpha.get(p).is_zero() {
            // x = Σ (α_i / α_p^2) e_i is idempotent
            let inv = alpha.get(p).inv().expect("nonzero");
            let x = alpha.scale(&(&inv * &inv));
            let mut rows = vec![x];
            rows.extend(others.iter().map(|&i| Vector::unit(field, n, i)));
            (NormalForm::En1, rows)
        } else {
            let k = alpha.leading_index().expect("nonzero square");
            let mut rows = vec![Vector::unit(field, n, p), alpha.clone()];
            rows.extend(others.iter().filter(|&&i| i != k).map(|&i| Vector::unit(field, n, i)));
            (NormalForm::En2, rows)
        };
        let basis = Matrix::from_rows(field, n, &rows).expect("rows of length n");
        return ClassificationVerdict {
            dually_atomistic: Some(canonical == NormalForm::En1),
            phi_free: Some(canonical == NormalForm::En1),
            kind: AlmostAbelian::AlmostBasicAbelian { canonical, basis },
            abelian_ideal: Some(ann),
        };
    }

    if ann.codim() == 2 {
        let nz: Vec<usize> = (0..n).filter(|&i| !e.square_of_basis(i).is_zero()).collect();
        let (p, k) = (nz[0], nz[1]);
        let sp = e.square_of_basis(p);
        let sk = e.square_of_basis(k);
        // e_p^2 = c e_k^2 and α^2 = -c make e_p + α e_k square to zero
        let lead = sk.leading_index().expect("nonzero");
        let c = sp.get(lead) * &sk.get(lead).inv().expect("nonzero");
        if sp == sk.scale(&c) {
            if let Some(alpha) = (-&c).sqrt() {
                for a in [alpha.clone(), -&alpha] {
                    let mut v = Vector::unit(field, n, p);
                    v.set(k, a);
                    let mut gens = vec![v];
                    gens.extend((0..n).filter(|&i| i != p && i != k).map(|i| Vector::unit(field, n, i)));
                    let h = e.span(&gens).expect("vectors of length n");
                    if e.is_ideal(&h) && e.subspace_product(&h, &h).is_zero() {
                        let nilpotent = e.is_nilpotent_algebra();
                        let kind = if nilpotent {
                            AlmostAbelian::NilpotentAlmostAbelian
                        } else {
                            AlmostAbelian::TKCodimTwo
                        };
                        let e2_pair = !nilpotent && n == 2;
                        return ClassificationVerdict {
                            kind,
                            abelian_ideal: Some(h),
                            dually_atomistic: Some(e2_pair),
                            phi_free: Some(!nilpotent),
                        };
                    }
                }
            }
        }
    }

    ClassificationVerdict {
        kind: AlmostAbelian::NotAlmostAbelian,
        abelian_ideal: None,
        dually_atomistic: None,
        phi_free: None,
    }
}

/// Whether `e` is dually atomistic, decided from its structure alone. Only
/// answers for abelian or almost abelian algebras and for algebras whose
/// supersolvable nilradical has full support.
pub fn dually_atomistic_structural(e: &EvolutionAlgebra) -> Option<bool> {
    let verdict = almost_abelian_classify(e);
    match verdict.kind {
        AlmostAbelian::Abelian => return Some(true),
        AlmostAbelian::NotAlmostAbelian => {}
        _ => return verdict.dually_atomistic,
    }
    if e.dim() == 0 || radicals::snil(e).support().len() != e.dim() {
        return None;
    }
    let is_e2 = tk::canonicalize_tk(e).map(|f| f.n == 2 && f.k == 2).unwrap_or(false);
    Some(is_e2)
}
