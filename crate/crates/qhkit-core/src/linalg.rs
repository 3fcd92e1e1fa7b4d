//! Exact dense linear algebra: RREF, kernels, and subspace arithmetic.
//!
//! Subspaces are always stored through their unique reduced-row-echelon
//! basis, so subspace equality is entrywise basis equality and every
//! subspace identity in a report is a testable assertion.

use crate::field::{FieldSpec, Scalar};

/// Dense row-major matrix over a fixed field. Internally 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            field,
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut m = Matrix::zero(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let f = self.field;
        let mut m = Matrix::zero(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if f.is_zero(b) {
                        continue;
                    }
                    let v = f.add(m.get(r, c), &f.mul(a, b));
                    m.set(r, c, v);
                }
            }
        }
        m
    }

    /// Row vector times matrix: `v · self`.
    pub fn apply_row(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "shape mismatch in apply_row");
        let f = self.field;
        let mut out = vec![f.zero(); self.cols];
        for (r, coeff) in v.iter().enumerate() {
            if f.is_zero(coeff) {
                continue;
            }
            for c in 0..self.cols {
                let e = self.get(r, c);
                if f.is_zero(e) {
                    continue;
                }
                out[c] = f.add(&out[c], &f.mul(coeff, e));
            }
        }
        out
    }

    /// The unique reduced row echelon form, with rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            // Find a pivot row for this column.
            let Some(pr) = (lead..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            for c in 0..m.cols {
                m.entries.swap(lead * m.cols + c, pr * m.cols + c);
            }
            // Normalize the pivot row.
            let inv = f.inv(m.get(lead, col));
            for c in 0..m.cols {
                let v = f.mul(m.get(lead, c), &inv);
                m.set(lead, c, v);
            }
            // Clear the column everywhere else.
            for r in 0..m.rows {
                if r == lead || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..m.cols {
                    let v = f.sub(m.get(r, c), &f.mul(&factor, m.get(lead, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == m.rows {
                break;
            }
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    /// Basis of `{v : self · v = 0}` (column-vector kernel), returned as a
    /// subspace of the column space, ambient dimension `cols`.
    pub fn kernel_basis(&self) -> Subspace {
        let f = self.field;
        let Rref {
            matrix: r, pivots, ..
        } = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for col in 0..self.cols {
                if let Some(row) = pivot_of_col[col] {
                    v[col] = f.neg(r.get(row, free));
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(f, self.cols, basis)
    }

    /// The canonical solution of `v · self = rhs` (a row vector of length
    /// `rows`), with all free variables set to zero, or `None` if the system
    /// is inconsistent.
    pub fn solve_row_system(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.cols);
        let f = self.field;
        // v·self = rhs  ⟺  selfᵗ·vᵗ = rhsᵗ; row-reduce the augmented system.
        let mut aug = self.transpose();
        let extra = Matrix::from_rows(f, rhs.iter().map(|c| vec![c.clone()]).collect());
        aug = aug.hstack(&extra);
        let r = aug.rref();
        let mut v = vec![f.zero(); self.rows];
        for (row, &col) in r.pivots.iter().enumerate() {
            if col == self.rows {
                return None; // Pivot in the augmented column: inconsistent.
            }
            v[col] = r.matrix.get(row, self.rows).clone();
        }
        Some(v)
    }
}

/// A linear subspace of K^ambient_dim in canonical (RREF) form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub field: FieldSpec,
    pub ambient_dim: usize,
    /// RREF matrix whose rows form the canonical basis; no zero rows.
    pub basis: Matrix,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Matrix::zero(field, 0, ambient_dim),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
        }
    }

    pub fn from_vectors(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "vector length mismatch");
        }
        let m = Matrix::from_rows(field, vectors);
        let r = m.rref();
        let rows = (0..r.rank).map(|i| r.matrix.row_vec(i)).collect();
        Subspace {
            field,
            ambient_dim,
            basis: Matrix::from_rows(field, rows),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    /// Residual of `v` after eliminating along the basis. Zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let f = self.field;
        let mut v = v.to_vec();
        for row in 0..self.dim() {
            // RREF rows are monic at their pivot column.
            let pivot_col = (0..self.ambient_dim)
                .find(|&c| !f.is_zero(self.basis.get(row, c)))
                .expect("no zero rows in a canonical basis");
            if f.is_zero(&v[pivot_col]) {
                continue;
            }
            let factor = v[pivot_col].clone();
            for c in 0..self.ambient_dim {
                v[c] = f.sub(&v[c], &f.mul(&factor, self.basis.get(row, c)));
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let f = self.field;
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the space.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.field;
        let mut v = v.to_vec();
        let mut coords = vec![f.zero(); self.dim()];
        for row in 0..self.dim() {
            let pivot_col = (0..self.ambient_dim)
                .find(|&c| !f.is_zero(self.basis.get(row, c)))
                .expect("no zero rows in a canonical basis");
            if f.is_zero(&v[pivot_col]) {
                continue;
            }
            let factor = v[pivot_col].clone();
            for c in 0..self.ambient_dim {
                v[c] = f.sub(&v[c], &f.mul(&factor, self.basis.get(row, c)));
            }
            coords[row] = factor;
        }
        if v.iter().all(|x| f.is_zero(x)) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    /// U + V as the RREF of the stacked bases.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Subspace::from_vectors(self.field, self.ambient_dim, vectors)
    }

    /// Exact intersection U ∩ V via the joint-kernel construction: solve
    /// a·U − b·V = 0 over stacked coefficients (a, b), then map back.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        let f = self.field;
        let neg_other = Matrix::from_rows(
            f,
            other
                .basis_vectors()
                .into_iter()
                .map(|row| row.iter().map(|x| f.neg(x)).collect())
                .collect(),
        );
        let mut stacked = self.basis.clone();
        if neg_other.rows > 0 {
            stacked = if stacked.rows > 0 {
                stacked.vstack(&neg_other)
            } else {
                neg_other
            };
        }
        // Coefficient vectors live in the row space: kernel of transpose.
        let coeff_kernel = stacked.transpose().kernel_basis();
        let mut vectors = Vec::new();
        for k in 0..coeff_kernel.dim() {
            let coeffs = coeff_kernel.basis.row(k);
            let a = &coeffs[..self.dim()];
            vectors.push(self.basis.apply_row(a));
        }
        Subspace::from_vectors(f, self.ambient_dim, vectors)
    }

    /// dim(U/V) for V ⊆ U; panics if V ⊄ U.
    pub fn quotient_dim(&self, sub: &Subspace) -> usize {
        assert!(sub.is_subspace_of(self), "quotient_dim: argument not a subspace");
        self.dim() - sub.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_row_system_finds_the_canonical_solution() {
        let f = FieldSpec::Rationals;
        // v · [[1,2],[0,0],[3,4]] = [7,10] has v = (1,0,2) with free var zero.
        let m = Matrix::from_rows(
            f,
            vec![
                vec![f.from_i64(1), f.from_i64(2)],
                vec![f.from_i64(0), f.from_i64(0)],
                vec![f.from_i64(3), f.from_i64(4)],
            ],
        );
        let v = m
            .solve_row_system(&[f.from_i64(7), f.from_i64(10)])
            .unwrap();
        assert_eq!(m.apply_row(&v), vec![f.from_i64(7), f.from_i64(10)]);
        assert!(f.is_zero(&v[1]));
        // Inconsistent target.
        let none = Matrix::zero(f, 2, 2).solve_row_system(&[f.one(), f.zero()]);
        assert!(none.is_none());
    }

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn qm(rows: &[&[i64]]) -> Matrix {
        let f = q();
        Matrix::from_rows(
            f,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity_is_fixed() {
        let m = Matrix::identity(q(), 2);
        let r = m.rref();
        assert_eq!(r.matrix, m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_dependent_rows() {
        let r = qm(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, qm(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_over_f2_hand_checked() {
        // [[1,1],[1,2]] over 𝔽₂ is [[1,1],[1,0]]: row reduce to the identity.
        let f = FieldSpec::prime_field(2).unwrap();
        let m = Matrix::from_rows(
            f,
            vec![
                vec![f.from_i64(1), f.from_i64(1)],
                vec![f.from_i64(1), f.from_i64(2)],
            ],
        );
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.matrix, Matrix::identity(f, 2));
    }

    #[test]
    fn rref_is_idempotent() {
        let m = qm(&[&[2, 4, 1], &[1, 2, 3], &[3, 6, 4]]);
        let r1 = m.rref();
        let r2 = r1.matrix.rref();
        assert_eq!(r1.matrix, r2.matrix);
        assert_eq!(r1.rank, r2.rank);
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(Matrix::zero(q(), 3, 3).kernel_basis().dim(), 3);
        assert_eq!(Matrix::identity(q(), 3).kernel_basis().dim(), 0);
    }

    #[test]
    fn kernel_hand_solved() {
        // ker [[1,1,0]] contains (1,−1,0) and (0,0,1).
        let f = q();
        let ker = qm(&[&[1, 1, 0]]).kernel_basis();
        assert_eq!(ker.dim(), 2);
        assert!(ker.contains(&[f.from_i64(1), f.from_i64(-1), f.from_i64(0)]));
        assert!(ker.contains(&[f.from_i64(0), f.from_i64(0), f.from_i64(1)]));
        // Every returned vector satisfies m·v = 0 exactly.
        let m = qm(&[&[1, 1, 0]]);
        for v in ker.basis_vectors() {
            let out = m.mul(&Matrix::from_rows(f, vec![v]).transpose());
            assert!((0..out.rows).all(|r| f.is_zero(out.get(r, 0))));
        }
    }

    #[test]
    fn subspace_sum_and_intersection_in_q3() {
        let f = q();
        let e = |i: usize| {
            let mut v = vec![f.zero(); 3];
            v[i] = f.one();
            v
        };
        let u = Subspace::from_vectors(f, 3, vec![e(0), e(1)]);
        let v = Subspace::from_vectors(f, 3, vec![e(1), e(2)]);
        assert_eq!(u.sum(&v), Subspace::full(f, 3));
        let w = u.intersect(&v);
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&e(1)));
        // Idempotence and the two trivial identities.
        assert_eq!(u.sum(&u), u);
        assert_eq!(u.intersect(&Subspace::full(f, 3)), u);
        assert_eq!(u.quotient_dim(&w), 1);
    }
}
