//! Evolution algebras given by a structure matrix relative to a natural basis.
//!
//! Row `i` of the structure matrix holds the coordinates of `e_i^2`. Distinct
//! basis vectors multiply to zero, so `u·v = Σ u_i v_i e_i^2`.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvolutionAlgebra {
    structure: Matrix,
}

impl EvolutionAlgebra {
    /// Build from a square structure matrix. Dimension zero is allowed so that
    /// quotients by the whole algebra stay representable.
    pub fn new(structure: Matrix) -> Result<Self> {
        if structure.rows() != structure.cols() {
            return Err(Error::DimensionMismatch {
                expected: structure.rows(),
                found: structure.cols(),
            });
        }
        Ok(Self { structure })
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        Self::new(Matrix::from_i64(field, rows)).expect("square integer matrix")
    }

    /// From the squares `e_i^2`, one vector per basis element.
    pub fn from_squares(field: FieldSpec, squares: &[Vector]) -> Result<Self> {
        Self::new(Matrix::from_rows(field, squares.len(), squares)?)
    }

    /// The algebra with zero product.
    pub fn abelian(field: FieldSpec, n: usize) -> Self {
        Self {
            structure: Matrix::zeros(field, n, n),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.structure.field()
    }

    pub fn dim(&self) -> usize {
        self.structure.rows()
    }

    pub fn structure_matrix(&self) -> &Matrix {
        &self.structure
    }

    /// `e_i^2` (zero-based index).
    pub fn square_of_basis(&self, i: usize) -> Vector {
        self.structure.row(i)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.field(), self.dim(), i)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field(), self.dim())
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field(), self.dim())
    }

    pub fn span(&self, vectors: &[Vector]) -> Result<Subspace> {
        Subspace::span(self.field(), self.dim(), vectors)
    }

    /// Convenience for tests and examples: span of integer coordinate rows.
    pub fn span_i64(&self, rows: &[&[i64]]) -> Subspace {
        let vs: Vec<Vector> = rows.iter().map(|r| Vector::from_i64(self.field(), r)).collect();
        self.span(&vs).expect("rows match the algebra dimension")
    }

    pub fn coordinate_subspace(&self, indices: &[usize]) -> Subspace {
        Subspace::coordinate(self.field(), self.dim(), indices)
    }

    fn check_vector(&self, v: &Vector) -> Result<()> {
        if v.field() != self.field() {
            return Err(Error::MixedFields);
        }
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn try_multiply(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        Ok(self.multiply(u, v))
    }

    /// Bilinear product `Σ u_i v_i e_i^2`.
    pub fn multiply(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field(), self.dim());
        for i in 0..self.dim() {
            let (a, b) = (u.get(i), v.get(i));
            if a.is_zero() || b.is_zero() {
                continue;
            }
            out.axpy(&(a * b), &self.structure.row(i));
        }
        out
    }

    pub fn square(&self, u: &Vector) -> Vector {
        self.multiply(u, u)
    }

    pub fn support(&self, v: &Vector) -> Vec<usize> {
        v.support()
    }

    pub fn support_subspace(&self, s: &Subspace) -> Vec<usize> {
        s.support()
    }

    /// Indices `i` with `e_i^2 = 0`.
    pub fn zero_square_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.square_of_basis(i).is_zero()).collect()
    }

    /// `span{e_i : e_i^2 = 0}`.
    pub fn annihilator(&self) -> Subspace {
        self.coordinate_subspace(&self.zero_square_indices())
    }

    /// `span{u·v : u in U, v in V}`, from products of basis vectors.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let symmetric = u == v;
        let mut products = Vec::new();
        for (i, a) in u.basis().iter().enumerate() {
            for (j, b) in v.basis().iter().enumerate() {
                if symmetric && j < i {
                    continue;
                }
                let p = self.multiply(a, b);
                if !p.is_zero() {
                    products.push(p);
                }
            }
        }
        self.span(&products).expect("products live in the algebra")
    }

    /// The derived subalgebra `E·E = span{e_i^2}`.
    pub fn derived(&self) -> Subspace {
        self.span(&self.structure.row_vectors()).expect("rows of the structure matrix")
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        let b = u.basis();
        for i in 0..b.len() {
            for j in i..b.len() {
                if !u.contains_vector(&self.multiply(&b[i], &b[j])) {
                    return false;
                }
            }
        }
        true
    }

    /// `E·U ⊆ U`. Since `e_j·u = u_j e_j^2`, this holds exactly when
    /// `e_j^2 ∈ U` for every `j` in the support of `U`.
    pub fn is_ideal(&self, u: &Subspace) -> bool {
        u.support().into_iter().all(|j| u.contains_vector(&self.square_of_basis(j)))
    }

    /// An ideal spanned by natural basis vectors.
    pub fn is_basic_ideal(&self, u: &Subspace) -> bool {
        self.is_ideal(u) && *u == self.coordinate_subspace(&u.support())
    }

    pub fn is_abelian(&self) -> bool {
        self.derived().is_zero()
    }

    /// The smallest ideal containing `u`.
    pub fn ideal_generated(&self, u: &Subspace) -> Subspace {
        let mut current = u.clone();
        loop {
            let squares: Vec<Vector> = current.support().into_iter().map(|j| self.square_of_basis(j)).collect();
            let mut next = current.clone();
            for s in &squares {
                next = next.add_vector(s);
            }
            if next == current {
                return current;
            }
            current = next;
        }
    }

    pub fn power_sequence(&self, u: &Subspace, kind: PowerKind, max_k: usize) -> Result<Vec<Subspace>> {
        if !self.is_subalgebra(u) {
            return Err(Error::NotASubalgebra);
        }
        let mut terms: Vec<Subspace> = vec![u.clone()];
        while terms.len() < max_k {
            let k = terms.len();
            let next = match kind {
                PowerKind::RightPowers => self.subspace_product(&terms[k - 1], u),
                PowerKind::DerivedSeries => {
                    let last = &terms[k - 1];
                    self.subspace_product(last, last)
                }
                PowerKind::PrincipalPowers => {
                    // U^{k+1} = Σ_{i=1}^{k} U^i U^{k+1-i}
                    let mut acc = self.zero_subspace();
                    for i in 1..=k {
                        acc = acc.sum(&self.subspace_product(&terms[i - 1], &terms[k - i]));
                    }
                    acc
                }
            };
            terms.push(next);
        }
        Ok(terms)
    }

    /// Right powers of `u` reach zero. For a commutative algebra this is the
    /// same as nilpotency.
    pub fn is_nilpotent(&self, u: &Subspace) -> Result<bool> {
        let terms = self.power_sequence(u, PowerKind::RightPowers, u.dim() + 2)?;
        Ok(terms.last().is_some_and(Subspace::is_zero))
    }

    pub fn is_solvable(&self, u: &Subspace) -> Result<bool> {
        let terms = self.power_sequence(u, PowerKind::DerivedSeries, u.dim() + 2)?;
        Ok(terms.last().is_some_and(Subspace::is_zero))
    }

    pub fn is_nilpotent_algebra(&self) -> bool {
        self.is_nilpotent(&self.whole()).expect("E is a subalgebra of itself")
    }

    pub fn is_solvable_algebra(&self) -> bool {
        self.is_solvable(&self.whole()).expect("E is a subalgebra of itself")
    }

    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientPresentation> {
        QuotientPresentation::new(self, ideal)
    }

    /// Block-diagonal structure matrix: `e_i` of `other` becomes `e_{dim+i}`.
    pub fn direct_sum(&self, other: &EvolutionAlgebra) -> Result<EvolutionAlgebra> {
        if self.field() != other.field() {
            return Err(Error::MixedFields);
        }
        let (a, b) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(self.field(), a + b, a + b);
        for r in 0..a {
            for c in 0..a {
                m.set(r, c, self.structure.get(r, c).clone());
            }
        }
        for r in 0..b {
            for c in 0..b {
                m.set(a + r, a + c, other.structure.get(r, c).clone());
            }
        }
        EvolutionAlgebra::new(m)
    }

    /// Embed a vector of the subalgebra `span{e_i : i in indices}` back into `E`.
    pub(crate) fn embed(&self, indices: &[usize], v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field(), self.dim());
        for (local, &global) in indices.iter().enumerate() {
            out.set(global, v.get(local).clone());
        }
        out
    }

    /// The algebra induced on a basic ideal `span{e_i : i in indices}`, which
    /// must be closed under squaring of its basis vectors.
    pub fn basic_subalgebra(&self, indices: &[usize]) -> Result<EvolutionAlgebra> {
        let squares: Result<Vec<Vector>> = indices
            .iter()
            .map(|&i| {
                let sq = self.square_of_basis(i);
                if sq.support().iter().any(|j| !indices.contains(j)) {
                    return Err(Error::NotAnIdeal);
                }
                Ok(Vector::from_scalars(self.field(), indices.iter().map(|&j| sq.get(j).clone()).collect())
                    .expect("same field"))
            })
            .collect();
        EvolutionAlgebra::from_squares(self.field(), &squares?)
    }

    /// One-dimensional ideals: every line inside `W = span{e_i : e_i^2 = 0}`,
    /// plus finitely many lines `span{e_k^2}` not inside `W`.
    pub fn one_dim_ideals(&self) -> OneDimIdeals {
        let w = self.annihilator();
        let mut lines: Vec<Subspace> = Vec::new();
        for k in 0..self.dim() {
            let sq = self.square_of_basis(k);
            if sq.is_zero() || w.contains_vector(&sq) {
                continue;
            }
            let line = self.span(std::slice::from_ref(&sq)).expect("square in ambient space");
            if lines.contains(&line) {
                continue;
            }
            if self.is_ideal(&line) {
                lines.push(line);
            }
        }
        OneDimIdeals { free_part: w, lines }
    }

    /// Structure matrix after the natural-basis change whose new basis
    /// vectors are the rows of `basis` (in current coordinates).
    pub fn change_basis(&self, basis: &Matrix) -> Result<EvolutionAlgebra> {
        let inv = basis.inverse()?;
        let mut squares = Vec::with_capacity(self.dim());
        for r in 0..basis.rows() {
            let f = basis.row(r);
            squares.push(inv.apply_row(&self.square(&f))?);
        }
        for i in 0..basis.rows() {
            for j in (i + 1)..basis.rows() {
                if !self.multiply(&basis.row(i), &basis.row(j)).is_zero() {
                    return Err(Error::Format(format!("basis vectors {} and {} do not multiply to zero", i + 1, j + 1)));
                }
            }
        }
        EvolutionAlgebra::from_squares(self.field(), &squares)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerKind {
    /// `U^{<k+1>} = U^{<k>} U`
    RightPowers,
    /// `U^{k+1} = Σ U^i U^{k+1-i}`
    PrincipalPowers,
    /// `U^{(k+1)} = U^{(k)} U^{(k)}`
    DerivedSeries,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneDimIdeals {
    /// Every line in this subspace is an ideal.
    pub free_part: Subspace,
    /// Ideal lines outside `free_part`.
    pub lines: Vec<Subspace>,
}

/// `E / I` with basis the images of the lexicographically first parent basis
/// vectors that are independent modulo `I`.
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    pub parent: EvolutionAlgebra,
    pub ideal: Subspace,
    pub kept_indices: Vec<usize>,
    pub algebra: EvolutionAlgebra,
    /// `n × |S|`; parent row vector times this gives quotient coordinates.
    pub project: Matrix,
}

impl QuotientPresentation {
    fn new(parent: &EvolutionAlgebra, ideal: &Subspace) -> Result<Self> {
        if ideal.field() != parent.field() {
            return Err(Error::MixedFields);
        }
        if ideal.ambient_dim() != parent.dim() {
            return Err(Error::DimensionMismatch {
                expected: parent.dim(),
                found: ideal.ambient_dim(),
            });
        }
        if !parent.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let n = parent.dim();
        let field = parent.field();
        let mut acc = ideal.clone();
        let mut kept = Vec::new();
        for i in 0..n {
            let e = Vector::unit(field, n, i);
            if !acc.contains_vector(&e) {
                acc = acc.add_vector(&e);
                kept.push(i);
            }
        }
        // rows: basis of I followed by the kept e_i; invert to read coordinates
        let mut rows: Vec<Vector> = ideal.basis().to_vec();
        rows.extend(kept.iter().map(|&i| Vector::unit(field, n, i)));
        let b = Matrix::from_rows(field, n, &rows)?;
        let inv = b.inverse()?;
        let offset = ideal.dim();
        let mut project = Matrix::zeros(field, n, kept.len());
        for r in 0..n {
            for c in 0..kept.len() {
                project.set(r, c, inv.get(r, offset + c).clone());
            }
        }
        let squares: Vec<Vector> = kept
            .iter()
            .map(|&i| project.apply_row(&parent.square_of_basis(i)).expect("shapes agree"))
            .collect();
        let algebra = EvolutionAlgebra::from_squares(field, &squares)?;
        Ok(Self {
            parent: parent.clone(),
            ideal: ideal.clone(),
            kept_indices: kept,
            algebra,
            project,
        })
    }

    pub fn project(&self, v: &Vector) -> Vector {
        self.project.apply_row(v).expect("parent coordinates")
    }

    /// The parent vector `Σ c_i e_{S_i}` for quotient coordinates `c`.
    pub fn lift(&self, v: &Vector) -> Vector {
        self.parent.embed(&self.kept_indices, v)
    }

    /// Full preimage of a quotient subspace.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        let mut out = self.ideal.clone();
        for v in s.basis() {
            out = out.add_vector(&self.lift(v));
        }
        out
    }

    pub fn image(&self, s: &Subspace) -> Subspace {
        let vs: Vec<Vector> = s.basis().iter().map(|v| self.project(v)).collect();
        self.algebra.span(&vs).expect("projected vectors")
    }
}
