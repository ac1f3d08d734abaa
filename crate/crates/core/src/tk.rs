//! Solvable, non-nilpotent evolution algebras with one-dimensional derived
//! subalgebra, and their closed-form invariants.
//!
//! Every such algebra is isomorphic to some `E_k(λ_1, …, λ_n)` with
//! `e_i^2 = λ_i (e_1 + ⋯ + e_k)`, `k ≥ 2`, `λ_1, …, λ_k ≠ 0` and
//! `λ_1 + ⋯ + λ_k = 0`. [`canonicalize_tk`] finds that form together with
//! the basis change realising it, normalised so that `λ_1 = 1`.

use crate::algebra::EvolutionAlgebra;
use crate::corpus;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TKForm {
    pub n: usize,
    pub k: usize,
    pub lambdas: Vec<Scalar>,
    /// Row `j` holds the canonical basis vector `f_{j+1}` in input coordinates.
    pub canonical_basis: Matrix,
    /// Inverse of `canonical_basis`: input row vector times this gives
    /// canonical coordinates.
    pub basis_change: Matrix,
}

impl TKForm {
    pub fn canonical_algebra(&self) -> EvolutionAlgebra {
        corpus::e_k_scalars(self.canonical_basis.field(), self.k, &self.lambdas).expect("canonical parameters are valid")
    }

    /// Input coordinates of a vector given in canonical coordinates.
    pub fn to_input(&self, v: &Vector) -> Vector {
        self.canonical_basis.apply_row(v).expect("canonical coordinates")
    }

    pub fn to_canonical(&self, v: &Vector) -> Vector {
        self.basis_change.apply_row(v).expect("input coordinates")
    }

    fn span_in_input(&self, canonical: &[Vector]) -> Subspace {
        let vs: Vec<Vector> = canonical.iter().map(|v| self.to_input(v)).collect();
        Subspace::span(self.canonical_basis.field(), self.n, &vs).expect("vectors of the right length")
    }
}

/// Solvable, not nilpotent, and `dim E^2 = 1`.
pub fn detect_tk(e: &EvolutionAlgebra) -> bool {
    e.derived().dim() == 1 && e.is_solvable_algebra() && !e.is_nilpotent_algebra()
}

pub fn canonicalize_tk(e: &EvolutionAlgebra) -> Result<TKForm> {
    if !detect_tk(e) {
        return Err(Error::NotTK);
    }
    let field = e.field();
    let n = e.dim();
    let derived = e.derived();
    let w = derived.basis()[0].clone();
    let lead = derived.pivots()[0];

    // e_i^2 = c_i w; w has a 1 at its pivot
    let coeff: Vec<Scalar> = (0..n).map(|i| e.square_of_basis(i).get(lead).clone()).collect();

    // first stage: g_j = w_j e_j on supp(w), e_j elsewhere, so that w = Σ_{supp} g_j
    let supp = w.support();
    let mut stage_vectors = Vec::with_capacity(n);
    let mut stage_lambdas = Vec::with_capacity(n);
    for j in 0..n {
        let wj = w.get(j);
        if wj.is_zero() {
            stage_vectors.push(Vector::unit(field, n, j));
            stage_lambdas.push(coeff[j].clone());
        } else {
            stage_vectors.push(Vector::unit(field, n, j).scale(wj));
            stage_lambdas.push(&(wj * wj) * &coeff[j]);
        }
    }

    // order: supp with λ ≠ 0, supp with λ = 0, then the rest
    let mut order: Vec<usize> = supp.iter().copied().filter(|&j| !stage_lambdas[j].is_zero()).collect();
    let m = order.len();
    order.extend(supp.iter().copied().filter(|&j| stage_lambdas[j].is_zero()));
    let k = supp.len();
    order.extend((0..n).filter(|j| !supp.contains(j)));
    if m < 2 {
        return Err(Error::TheoremViolation(format!(
            "derived line meets only {m} non-annihilating basis vectors"
        )));
    }

    let g: Vec<&Vector> = order.iter().map(|&j| &stage_vectors[j]).collect();
    let mu: Vec<&Scalar> = order.iter().map(|&j| &stage_lambdas[j]).collect();
    let inv = mu[0].inv()?;

    // second stage: f_1 = (g_1 + g_{m+1} + ⋯ + g_k)/μ_1, f_t = g_t/μ_1
    let mut rows = Vec::with_capacity(n);
    let mut first = g[0].clone();
    for t in m..k {
        first = first.add(g[t]);
    }
    rows.push(first.scale(&inv));
    for t in 1..n {
        rows.push(g[t].scale(&inv));
    }
    let lambdas: Vec<Scalar> = mu.iter().map(|l| *l * &inv).collect();

    let canonical_basis = Matrix::from_rows(field, n, &rows)?;
    let basis_change = canonical_basis.inverse()?;
    let form = TKForm {
        n,
        k: m,
        lambdas,
        canonical_basis,
        basis_change,
    };
    if e.change_basis(&form.canonical_basis)? != form.canonical_algebra() {
        return Err(Error::TheoremViolation("canonical basis does not reproduce E_k(λ)".into()));
    }
    Ok(form)
}

/// `span{λ_i e_1 − λ_1 e_i (2 ≤ i ≤ k), e_{k+1}, …, e_n}` in canonical
/// coordinates, returned in input coordinates.
pub fn tk_nilradical(e: &EvolutionAlgebra) -> Result<Subspace> {
    let form = canonicalize_tk(e)?;
    Ok(nilradical_of_form(&form))
}

pub fn nilradical_of_form(form: &TKForm) -> Subspace {
    let field = form.canonical_basis.field();
    let n = form.n;
    let l1 = &form.lambdas[0];
    let mut gens = Vec::with_capacity(n - 1);
    for i in 1..form.k {
        let mut v = Vector::zeros(field, n);
        v.set(0, form.lambdas[i].clone());
        v.set(i, -l1);
        gens.push(v);
    }
    for i in form.k..n {
        gens.push(Vector::unit(field, n, i));
    }
    form.span_in_input(&gens)
}

/// `{x : x·E^2 = 0}`, the left kernel of `x ↦ (x·b)_{b ∈ basis(E^2)}`.
pub fn ann_of_derived(e: &EvolutionAlgebra) -> Subspace {
    annihilator_of(e, &e.derived())
}

/// `{x : x·u = 0 for all u in s}`.
pub fn annihilator_of(e: &EvolutionAlgebra, s: &Subspace) -> Subspace {
    let n = e.dim();
    let field = e.field();
    if s.is_zero() {
        return e.whole();
    }
    let cols = n * s.dim();
    let mut a = Matrix::zeros(field, n, cols);
    for (block, b) in s.basis().iter().enumerate() {
        for i in 0..n {
            let bi = b.get(i);
            if bi.is_zero() {
                continue;
            }
            let sq = e.square_of_basis(i);
            for j in 0..n {
                a.set(i, block * n + j, bi * sq.get(j));
            }
        }
    }
    a.left_kernel()
}

/// Frattini subalgebra and ideal: both zero when the annihilator has
/// codimension two, both `E^2` otherwise.
pub fn tk_frattini(e: &EvolutionAlgebra) -> Result<(Subspace, Subspace)> {
    if !detect_tk(e) {
        return Err(Error::NotTK);
    }
    if e.annihilator().codim() == 2 {
        Ok((e.zero_subspace(), e.zero_subspace()))
    } else {
        let d = e.derived();
        Ok((d.clone(), d))
    }
}

/// `E = K ⊕ ann(E)` with `K` spanned by the canonical basis vectors whose
/// parameter is nonzero.
pub fn split_over_annihilator(e: &EvolutionAlgebra) -> Result<(Subspace, Subspace)> {
    let form = canonicalize_tk(e)?;
    let field = e.field();
    let gens: Vec<Vector> = (0..form.n)
        .filter(|&i| !form.lambdas[i].is_zero())
        .map(|i| Vector::unit(field, form.n, i))
        .collect();
    Ok((form.span_in_input(&gens), e.annihilator()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn lambdas(form: &TKForm) -> Vec<String> {
        form.lambdas.iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn detection() {
        assert!(detect_tk(&corpus::e_k(q(), 2, &[1, -1]).unwrap()));
        assert!(!detect_tk(&EvolutionAlgebra::abelian(q(), 3)));
        assert!(!detect_tk(&corpus::two_maximal_nilpotent(q())));
    }

    #[test]
    fn scaled_pair_normalises() {
        let e = corpus::e_k(q(), 2, &[3, -3, 0, 0]).unwrap();
        let form = canonicalize_tk(&e).unwrap();
        assert_eq!(form.k, 2);
        assert_eq!(lambdas(&form), ["1", "-1", "0", "0"]);
    }

    #[test]
    fn already_canonical() {
        let e = corpus::e_k(q(), 3, &[1, 1, -2]).unwrap();
        let form = canonicalize_tk(&e).unwrap();
        assert_eq!(form.k, 3);
        assert_eq!(lambdas(&form), ["1", "1", "-2"]);
        assert_eq!(form.canonical_basis, Matrix::identity(q(), 3));
    }

    #[test]
    fn zero_inside_head_is_absorbed() {
        // e1^2 = e1+e2+e3, e2^2 = 0, e3^2 = -(e1+e2+e3)
        let e = corpus::e_k(q(), 3, &[1, 0, -1]).unwrap();
        let form = canonicalize_tk(&e).unwrap();
        assert_eq!(form.k, 2);
        assert_eq!(lambdas(&form), ["1", "-1", "0"]);
        // f1 = e1 + e2, f2 = e3, f3 = e2 reproduce E_2(1,-1,0) by hand:
        // f1^2 = e1^2 = f1 + f2, f2^2 = -(f1 + f2), f3^2 = 0
        assert_eq!(form.canonical_basis.row(0), Vector::from_i64(q(), &[1, 1, 0]));
        assert_eq!(form.canonical_basis.row(1), Vector::from_i64(q(), &[0, 0, 1]));
        assert_eq!(form.canonical_basis.row(2), Vector::from_i64(q(), &[0, 1, 0]));
    }

    #[test]
    fn nilradical_closed_forms() {
        let e = corpus::e_k(q(), 3, &[1, 1, -2]).unwrap();
        assert_eq!(tk_nilradical(&e).unwrap(), e.span_i64(&[&[-1, 1, 0], &[2, 0, 1]]));
        let e = corpus::e_k(q(), 3, &[1, -1, 0]).unwrap();
        assert_eq!(tk_nilradical(&e).unwrap(), e.span_i64(&[&[1, 1, 0], &[0, 0, 1]]));
        let e = corpus::e_k(q(), 2, &[1, -1]).unwrap();
        assert_eq!(tk_nilradical(&e).unwrap(), e.span_i64(&[&[1, 1]]));
        assert_eq!(tk_nilradical(&EvolutionAlgebra::abelian(q(), 2)), Err(Error::NotTK));
    }

    #[test]
    fn ann_of_derived_cases() {
        assert!(ann_of_derived(&EvolutionAlgebra::abelian(q(), 3)).is_full());
        let e = corpus::e_k(q(), 2, &[1, -1]).unwrap();
        // x·(e1+e2) = (x1 - x2)(e1+e2)
        assert_eq!(ann_of_derived(&e), e.span_i64(&[&[1, 1]]));
    }

    #[test]
    fn frattini_closed_forms() {
        let e = corpus::e_k(q(), 2, &[1, -1, 0, 0]).unwrap();
        let (f, phi) = tk_frattini(&e).unwrap();
        assert!(f.is_zero() && phi.is_zero());
        let e = corpus::e_k(q(), 3, &[1, 1, -2]).unwrap();
        let (f, phi) = tk_frattini(&e).unwrap();
        assert_eq!(f, e.span_i64(&[&[1, 1, 1]]));
        assert_eq!(phi, f);
    }

    #[test]
    fn splitting() {
        let e = corpus::e_k(q(), 2, &[1, -1, 0]).unwrap();
        let (k, ann) = split_over_annihilator(&e).unwrap();
        assert_eq!(k, e.coordinate_subspace(&[0, 1]));
        assert_eq!(ann, e.coordinate_subspace(&[2]));
        let e = corpus::e_k(q(), 2, &[1, -1]).unwrap();
        let (k, ann) = split_over_annihilator(&e).unwrap();
        assert!(k.is_full() && ann.is_zero());
    }
}
