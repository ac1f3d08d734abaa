//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! Vectors are row vectors of coordinates in the natural basis. Subspaces are
//! stored as their reduced row echelon basis, so two subspaces are equal exactly
//! when their stored bases are equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    field: FieldSpec,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: FieldSpec, n: usize) -> Self {
        Self {
            field,
            coords: vec![field.zero(); n],
        }
    }

    /// The natural basis vector `e_{i+1}` (indices are zero-based).
    pub fn unit(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, n);
        v.coords[i] = field.one();
        v
    }

    pub fn from_scalars(field: FieldSpec, coords: Vec<Scalar>) -> Result<Self> {
        if coords.iter().any(|c| c.field() != field) {
            return Err(Error::MixedFields);
        }
        Ok(Self { field, coords })
    }

    pub fn from_i64(field: FieldSpec, coords: &[i64]) -> Self {
        Self {
            field,
            coords: coords.iter().map(|&c| field.from_i64(c)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "coordinate from another field");
        self.coords[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn leading_index(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }

    fn check(&self, other: &Vector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Vector) -> Result<Vector> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Vector) -> Result<Vector> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Vector, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.try_add(other).expect("vector addition")
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.try_sub(other).expect("vector subtraction")
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// `self + c * other`, in place.
    pub fn axpy(&mut self, c: &Scalar, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (x, y) in self.coords.iter_mut().zip(&other.coords) {
            if !y.is_zero() {
                *x = &*x + &(c * y);
            }
        }
    }

    /// Scaled so the first nonzero coordinate is 1. Zero stays zero.
    pub fn normalized(&self) -> Vector {
        match self.leading_index() {
            Some(i) => self.scale(&self.coords[i].inv().expect("nonzero leading coordinate")),
            None => self.clone(),
        }
    }

    /// Coordinates restricted to `indices`; the others are zeroed.
    pub fn restrict(&self, indices: &[usize]) -> Vector {
        let mut out = Vector::zeros(self.field, self.len());
        for &i in indices {
            out.coords[i] = self.coords[i].clone();
        }
        out
    }

    /// Human-readable linear combination of the natural basis, e.g. `e1 - 2e3`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(&mag);
            }
            out.push_str(&format!("e{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.field() != field {
                return Err(Error::MixedFields);
            }
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.coords().iter().cloned());
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vs: Vec<Vector> = rows.iter().map(|r| Vector::from_i64(field, r)).collect();
        Self::from_rows(field, cols, &vs).expect("rectangular integer matrix")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "entry from another field");
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector {
            field: self.field,
            coords: self.data[r * self.cols..(r + 1) * self.cols].to_vec(),
        }
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * other.cols + c;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `v * self`.
    pub fn apply_row(&self, v: &Vector) -> Result<Vector> {
        if v.field() != self.field {
            return Err(Error::MixedFields);
        }
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = Vector::zeros(self.field, self.cols);
        for (k, a) in v.coords().iter().enumerate() {
            out.axpy(a, &self.row(k));
        }
        Ok(out)
    }

    /// Canonical reduced row echelon form. Pivots are taken column by column
    /// from the left, choosing the first nonzero entry at or below the current
    /// row.
    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = rref_in_place(&mut rows, self.cols);
        let m = Matrix::from_rows(self.field, self.cols, &rows).expect("same shape");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Right kernel `{x : self * x^T = 0}` as a subspace of the column space
    /// dimension.
    pub fn kernel(&self) -> Subspace {
        let mut rows = self.row_vectors();
        let pivots = rref_in_place(&mut rows, self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = Vector::unit(self.field, self.cols, f);
            for (r, &p) in pivots.iter().enumerate() {
                let entry = rows[r].get(f);
                if !entry.is_zero() {
                    v.set(p, -entry);
                }
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, &basis).expect("kernel vectors are well formed")
    }

    /// Left kernel `{x : x * self = 0}`.
    pub fn left_kernel(&self) -> Subspace {
        self.transpose().kernel()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut rows: Vec<Vector> = (0..n)
            .map(|r| {
                let mut coords = self.row(r).coords;
                coords.extend(Vector::unit(self.field, n, r).coords);
                Vector {
                    field: self.field,
                    coords,
                }
            })
            .collect();
        let pivots = rref_in_place(&mut rows, n);
        if pivots.len() < n {
            return Err(Error::DivisionByZero);
        }
        let inv_rows: Vec<Vector> = rows
            .into_iter()
            .map(|r| Vector {
                field: self.field,
                coords: r.coords[n..].to_vec(),
            })
            .collect();
        Matrix::from_rows(self.field, n, &inv_rows)
    }
}

/// Reduce `rows` to RREF considering only the first `cols` columns for pivots.
/// Zero rows are dropped. Returns the pivot columns.
fn rref_in_place(rows: &mut Vec<Vector>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i].get(c).is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r].get(c).inv().expect("pivot is nonzero");
        rows[r] = rows[r].scale(&inv);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row.get(c).is_zero() {
                let factor = -row.get(c);
                row.axpy(&factor, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

/// A subspace of `K^n`, stored as its canonical RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Self::coordinate(field, ambient, &(0..ambient).collect::<Vec<_>>())
    }

    /// `span{e_i : i in indices}`.
    pub fn coordinate(field: FieldSpec, ambient: usize, indices: &[usize]) -> Self {
        let mut idx: Vec<usize> = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        Self {
            field,
            ambient,
            basis: idx.iter().map(|&i| Vector::unit(field, ambient, i)).collect(),
            pivots: idx,
        }
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            if v.field() != field {
                return Err(Error::MixedFields);
            }
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        let mut rows: Vec<Vector> = vectors.iter().filter(|v| !v.is_zero()).cloned().collect();
        let pivots = rref_in_place(&mut rows, ambient);
        Ok(Self {
            field,
            ambient,
            basis: rows,
            pivots,
        })
    }

    /// Build directly from rows that are already in canonical RREF. Used by the
    /// enumerator; the caller guarantees the invariant.
    pub(crate) fn from_rref_unchecked(field: FieldSpec, ambient: usize, basis: Vec<Vector>, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.len(), pivots.len());
        Self {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_vector(&self, v: &Vector) -> Result<()> {
        if v.field() != self.field {
            return Err(Error::MixedFields);
        }
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_subspace(&self, other: &Subspace) -> Result<()> {
        if other.field != self.field {
            return Err(Error::MixedFields);
        }
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// The representative of `v + self` vanishing on every pivot coordinate.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out.get(p).clone();
            if !c.is_zero() {
                out.axpy(&-c, row);
            }
        }
        out
    }

    pub fn try_reduce(&self, v: &Vector) -> Result<Vector> {
        self.check_vector(v)?;
        Ok(self.reduce(v))
    }

    pub fn contains_vector(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn try_contains_vector(&self, v: &Vector) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.contains_vector(v))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        other.dim() <= self.dim() && other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn try_contains(&self, other: &Subspace) -> Result<bool> {
        self.check_subspace(other)?;
        Ok(self.contains(other))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.try_sum(other).expect("subspace sum")
    }

    pub fn try_sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_subspace(other)?;
        if self.contains(other) {
            return Ok(self.clone());
        }
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, &all)
    }

    pub fn add_vector(&self, v: &Vector) -> Subspace {
        if self.contains_vector(v) {
            return self.clone();
        }
        let mut all = self.basis.clone();
        all.push(v.clone());
        Subspace::span(self.field, self.ambient, &all).expect("vector in ambient space")
    }

    /// `{x : x·u = 0 for every u in self}` under the standard dot product.
    pub fn orthogonal(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.field, self.ambient);
        }
        Matrix::from_rows(self.field, self.ambient, &self.basis)
            .expect("basis rows")
            .kernel()
    }

    /// Computed as the orthogonal of `orthogonal(self) + orthogonal(other)`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.try_intersect(other).expect("subspace intersection")
    }

    pub fn try_intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_subspace(other)?;
        if self.contains(other) {
            return Ok(other.clone());
        }
        if other.contains(self) {
            return Ok(self.clone());
        }
        Ok(self.orthogonal().sum(&other.orthogonal()).orthogonal())
    }

    /// Union of the supports of the basis vectors.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ambient];
        for v in &self.basis {
            for i in v.support() {
                seen[i] = true;
            }
        }
        (0..self.ambient).filter(|&i| seen[i]).collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, &self.basis).expect("basis rows")
    }

    pub fn pretty(&self) -> String {
        let parts: Vec<String> = self.basis.iter().map(Vector::pretty).collect();
        format!("span{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}
