//! Finite-dimensional associative algebras with explicit structure constants.
//!
//! An algebra is stored as a basis with a sparse multiplication table, a
//! unit vector, distinguished generator images, and a verified Jacobson
//! radical. Construction from a free presentation `K⟨x₁..x_r⟩/J` goes
//! through the word-rewriting quotient in [`crate::rewrite`]; the radical of
//! such a quotient (with `J` inside the square of the augmentation ideal)
//! is spanned by the basis words of positive length.

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Subspace};
use crate::rewrite::{self, Alphabet, RewriteError, WordCombination, WordKey};
use itertools::Itertools;
use thiserror::Error;

/// A noncommutative polynomial in the generators, as (coefficient, word).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

impl NcPoly {
    pub fn render(&self, field: &FieldSpec, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, (c, word)) in self.terms.iter().enumerate() {
            let word_str = render_word(names, word);
            let coef_str = field.render(c);
            let body = if word.is_empty() {
                coef_str.trim_start_matches('-').to_string()
            } else if coef_str == "1" {
                word_str
            } else if coef_str == "-1" {
                word_str
            } else {
                format!("{}*{}", coef_str.trim_start_matches('-'), word_str)
            };
            if i == 0 {
                if field.is_negative(c) {
                    parts.push(format!("-{body}"));
                } else {
                    parts.push(body);
                }
            } else if field.is_negative(c) {
                parts.push(format!(" - {body}"));
            } else {
                parts.push(format!(" + {body}"));
            }
        }
        parts.concat()
    }
}

/// Render a word over generator names with `^` powers for repeated runs.
pub fn render_word(names: &[String], word: &[usize]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let g = word[i];
        let mut run = 1;
        while i + run < word.len() && word[i + run] == g {
            run += 1;
        }
        if run == 1 {
            parts.push(names[g].clone());
        } else {
            parts.push(format!("{}^{}", names[g], run));
        }
        i += run;
    }
    parts.join("*")
}

/// A free presentation of a finite-dimensional algebra.
#[derive(Debug, Clone)]
pub struct FreePresentation {
    pub field: FieldSpec,
    pub generators: Vec<String>,
    pub relations: Vec<NcPoly>,
    /// If set, commutators x_i x_j − x_j x_i are appended as relations.
    pub commutative: bool,
    pub nilpotency_cap: usize,
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("relation has a term of length {0} < 2; relations must lie in the square of the augmentation ideal")]
    RelationTooShort(usize),
    #[error("rewriting failed: {0}")]
    Rewrite(#[from] RewriteError),
    #[error("multiplication table is not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit vector does not act as a two-sided identity on basis element {0}")]
    BadUnit(usize),
    #[error("claimed radical is not a two-sided ideal")]
    RadicalNotIdeal,
    #[error("claimed radical is not nilpotent within {0} powers")]
    RadicalNotNilpotent(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Sparse vector: (basis index, coefficient), ascending by index.
pub type SparseVec = Vec<(usize, Scalar)>;

/// A finite-dimensional associative unital algebra over an exact field.
#[derive(Debug, Clone)]
pub struct FiniteAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// table[i·dim + j] = coordinates of (basis i)·(basis j).
    table: Vec<SparseVec>,
    pub unit: Vec<Scalar>,
    /// Images of the presentation generators (empty when not presented).
    pub generator_images: Vec<Vec<Scalar>>,
    pub radical: Subspace,
}

fn to_sparse(field: &FieldSpec, v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !field.is_zero(c))
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

impl FiniteAlgebra {
    /// Build and verify an algebra from a dense multiplication table:
    /// `products[i][j]` = coordinates of (basis i)·(basis j). Checks the
    /// unit laws, full associativity, and that `radical` is a nilpotent
    /// two-sided ideal.
    pub fn new(
        field: FieldSpec,
        basis_labels: Vec<String>,
        products: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        generator_images: Vec<Vec<Scalar>>,
        radical: Subspace,
    ) -> Result<Self, AlgebraError> {
        let dim = basis_labels.len();
        let mut table = Vec::with_capacity(dim * dim);
        for row in &products {
            for p in row {
                table.push(to_sparse(&field, p));
            }
        }
        let alg = FiniteAlgebra {
            field,
            dim,
            basis_labels,
            table,
            unit,
            generator_images,
            radical,
        };
        alg.verify()?;
        Ok(alg)
    }

    fn verify(&self) -> Result<(), AlgebraError> {
        let f = &self.field;
        let dim = self.dim;
        // Unit laws.
        for i in 0..dim {
            let mut e = vec![f.zero(); dim];
            e[i] = f.one();
            if self.multiply(&self.unit, &e) != e || self.multiply(&e, &self.unit) != e {
                return Err(AlgebraError::BadUnit(i));
            }
        }
        // Associativity, exhaustively over basis triples, skipping zeros.
        for i in 0..dim {
            for j in 0..dim {
                let ij = &self.table[i * dim + j];
                for k in 0..dim {
                    let mut lhs = vec![f.zero(); dim];
                    for (m, c) in ij {
                        for (t, d) in &self.table[m * dim + k] {
                            lhs[*t] = f.add(&lhs[*t], &f.mul(c, d));
                        }
                    }
                    let mut rhs = vec![f.zero(); dim];
                    for (m, c) in &self.table[j * dim + k] {
                        for (t, d) in &self.table[i * dim + m] {
                            rhs[*t] = f.add(&rhs[*t], &f.mul(c, d));
                        }
                    }
                    if lhs != rhs {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        // Radical: two-sided ideal, nilpotent.
        let rad_vecs = self.radical.basis_vectors();
        for r in &rad_vecs {
            for i in 0..dim {
                let mut e = vec![f.zero(); dim];
                e[i] = f.one();
                if !self.radical.contains(&self.multiply(&e, r))
                    || !self.radical.contains(&self.multiply(r, &e))
                {
                    return Err(AlgebraError::RadicalNotIdeal);
                }
            }
        }
        let chain = self.radical_power_chain(dim + 1);
        if chain.last().map(|s| s.dim()) != Some(0) {
            return Err(AlgebraError::RadicalNotNilpotent(dim + 1));
        }
        Ok(())
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, ca) in a.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if f.is_zero(cb) {
                    continue;
                }
                let cab = f.mul(ca, cb);
                for (t, c) in &self.table[i * self.dim + j] {
                    out[*t] = f.add(&out[*t], &f.mul(&cab, c));
                }
            }
        }
        out
    }

    /// Product of two basis elements, sparse.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let f = &self.field;
        let mut e = vec![f.zero(); self.dim];
        e[i] = f.one();
        e
    }

    /// Matrix of v ↦ a·v in the row-vector convention (row i = a·eᵢ).
    pub fn left_mul_operator(&self, a: &[Scalar]) -> Matrix {
        let rows = (0..self.dim)
            .map(|i| self.multiply(a, &self.basis_vector(i)))
            .collect();
        Matrix::from_rows(self.field, rows)
    }

    /// Matrix of v ↦ v·a in the row-vector convention (row i = eᵢ·a).
    pub fn right_mul_operator(&self, a: &[Scalar]) -> Matrix {
        let rows = (0..self.dim)
            .map(|i| self.multiply(&self.basis_vector(i), a))
            .collect();
        Matrix::from_rows(self.field, rows)
    }

    /// Evaluate a word in the presentation generators.
    pub fn evaluate_word(&self, word: &[usize]) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for &g in word {
            acc = self.multiply(&acc, &self.generator_images[g]);
        }
        acc
    }

    /// Evaluate a noncommutative polynomial in the presentation generators.
    pub fn evaluate(&self, poly: &NcPoly) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (c, word) in &poly.terms {
            let v = self.evaluate_word(word);
            for (o, x) in out.iter_mut().zip(v.iter()) {
                *o = f.add(o, &f.mul(c, x));
            }
        }
        out
    }

    fn radical_power_chain(&self, limit: usize) -> Vec<Subspace> {
        let mut chain = vec![self.radical.clone()];
        let rad_vecs = self.radical.basis_vectors();
        while chain.last().unwrap().dim() > 0 && chain.len() < limit {
            let prev = chain.last().unwrap();
            let mut products = Vec::new();
            for v in prev.basis_vectors() {
                for r in &rad_vecs {
                    products.push(self.multiply(&v, r));
                }
            }
            let next = Subspace::from_vectors(self.field, self.dim, products);
            chain.push(next);
        }
        chain
    }

    /// The chain rad ⊇ rad² ⊇ … ⊇ 0 (last term is the zero space).
    pub fn radical_chain(&self) -> Vec<Subspace> {
        self.radical_power_chain(self.dim + 1)
    }

    /// Least d with rad^d = 0 (d = 1 for semisimple).
    pub fn nilpotency_index(&self) -> usize {
        self.radical_chain().len()
    }

    /// Left socle {b : rad·b = 0} or right socle {b : b·rad = 0}.
    pub fn socle(&self, left: bool) -> Subspace {
        let rad_vecs = self.radical.basis_vectors();
        if rad_vecs.is_empty() {
            return Subspace::full(self.field, self.dim);
        }
        // Stack, per radical generator r, the matrix of v ↦ r·v (or v·r);
        // the socle is the common row kernel.
        let mut stacked: Option<Matrix> = None;
        for r in &rad_vecs {
            let m = if left {
                self.left_mul_operator(r)
            } else {
                self.right_mul_operator(r)
            };
            stacked = Some(match stacked {
                None => m,
                Some(s) => s.hstack(&m),
            });
        }
        stacked.unwrap().transpose().kernel_basis()
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self.table[i * self.dim + j] != self.table[j * self.dim + i] {
                    return false;
                }
            }
        }
        true
    }

    /// The opposite algebra (products reversed); radical and generators carry over.
    pub fn opposite(&self) -> FiniteAlgebra {
        let mut table = vec![Vec::new(); self.dim * self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                table[i * self.dim + j] = self.table[j * self.dim + i].clone();
            }
        }
        FiniteAlgebra {
            field: self.field,
            dim: self.dim,
            basis_labels: self.basis_labels.clone(),
            table,
            unit: self.unit.clone(),
            generator_images: self.generator_images.clone(),
            radical: self.radical.clone(),
        }
    }

    /// Dimension of the semisimple quotient B/rad.
    pub fn top_dim(&self) -> usize {
        self.dim - self.radical.dim()
    }
}

/// Summary facts about a basic algebra: locality and self-injectivity in the
/// sense relevant to local algebras (simple socle).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalClassification {
    pub local: bool,
    pub left_socle_dim: usize,
    pub right_socle_dim: usize,
    pub self_injective: bool,
    pub nilpotency_index: usize,
    pub radical_dims: Vec<usize>,
}

/// Classify a basic algebra as local/self-injective via radical and socles.
pub fn classify_local_selfinjective(b: &FiniteAlgebra) -> LocalClassification {
    let chain = b.radical_chain();
    let left = b.socle(true).dim();
    let right = b.socle(false).dim();
    LocalClassification {
        local: b.top_dim() == 1,
        left_socle_dim: left,
        right_socle_dim: right,
        self_injective: b.top_dim() == 1 && left == 1 && right == 1,
        nilpotency_index: chain.len(),
        radical_dims: chain.iter().map(|s| s.dim()).collect(),
    }
}

/// Build the quotient algebra of a free presentation, with the canonical
/// basis of words greedy by (length, lex order).
pub fn from_free_presentation(p: &FreePresentation) -> Result<FiniteAlgebra, AlgebraError> {
    let f = p.field;
    let r = p.generators.len();
    let mut relations: Vec<WordCombination> = Vec::new();
    for rel in &p.relations {
        for (_, w) in &rel.terms {
            if w.len() < 2 {
                return Err(AlgebraError::RelationTooShort(w.len()));
            }
        }
        relations.push(
            rel.terms
                .iter()
                .map(|(c, w)| (c.clone(), WordKey::Seq(w.clone())))
                .collect(),
        );
    }
    if p.commutative {
        for (i, j) in (0..r).tuple_combinations() {
            relations.push(vec![
                (f.one(), WordKey::Seq(vec![i, j])),
                (f.from_i64(-1), WordKey::Seq(vec![j, i])),
            ]);
        }
    }
    let quot = rewrite::quotient(f, Alphabet::free(r), &relations, p.nilpotency_cap)?;
    let dim = quot.dim();

    let basis_labels: Vec<String> = quot
        .basis_words()
        .iter()
        .map(|w| render_word(&p.generators, w.letters()))
        .collect();
    let products: Vec<Vec<Vec<Scalar>>> = (0..dim)
        .map(|i| (0..dim).map(|j| quot.multiply_basis_words(i, j)).collect())
        .collect();
    let unit = quot.normal_form(&WordKey::Trivial(0));
    let generator_images: Vec<Vec<Scalar>> = (0..r)
        .map(|g| quot.normal_form(&WordKey::Seq(vec![g])))
        .collect();
    // Relations lie in aug², so positive-length basis words span the
    // augmentation ideal, which is nilpotent and hence the radical.
    let rad_vectors: Vec<Vec<Scalar>> = quot
        .basis_words()
        .iter()
        .enumerate()
        .filter(|(_, w)| !w.is_empty())
        .map(|(i, _)| {
            let mut e = vec![f.zero(); dim];
            e[i] = f.one();
            e
        })
        .collect();
    let radical = Subspace::from_vectors(f, dim, rad_vectors);

    FiniteAlgebra::new(f, basis_labels, products, unit, generator_images, radical)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn poly(f: &FieldSpec, terms: &[(i64, &[usize])]) -> NcPoly {
        NcPoly {
            terms: terms
                .iter()
                .map(|(c, w)| (f.from_i64(*c), w.to_vec()))
                .collect(),
        }
    }

    fn example_b(f: FieldSpec) -> FiniteAlgebra {
        // B = K[x,y]/(xy, x³−y³), dimension 6.
        let p = FreePresentation {
            field: f,
            generators: vec!["x".into(), "y".into()],
            relations: vec![
                poly(&f, &[(1, &[0, 1])]),
                poly(&f, &[(1, &[0, 0, 0]), (-1, &[1, 1, 1])]),
            ],
            commutative: true,
            nilpotency_cap: 16,
        };
        from_free_presentation(&p).unwrap()
    }

    #[test]
    fn example_b_structure() {
        let f = q();
        let b = example_b(f);
        assert_eq!(b.dim, 6);
        assert_eq!(
            b.basis_labels,
            vec!["1", "x", "y", "x^2", "y^2", "x^3"]
        );
        let cls = classify_local_selfinjective(&b);
        assert!(cls.local && cls.self_injective);
        assert_eq!(cls.radical_dims, vec![5, 3, 1, 0]);
        assert_eq!(cls.nilpotency_index, 4);
        assert!(b.is_commutative());
        // y³ = x³ and x²·y = 0.
        let y3 = b.evaluate(&poly(&f, &[(1, &[1, 1, 1])]));
        let x3 = b.evaluate(&poly(&f, &[(1, &[0, 0, 0])]));
        assert_eq!(y3, x3);
        let x2y = b.evaluate(&poly(&f, &[(1, &[0, 0, 1])]));
        assert!(x2y.iter().all(|c| f.is_zero(c)));
    }

    #[test]
    fn example_b_over_f13() {
        let f = FieldSpec::prime_field(13).unwrap();
        let b = example_b(f);
        assert_eq!(b.dim, 6);
        assert!(classify_local_selfinjective(&b).self_injective);
    }

    #[test]
    fn inhomogeneous_example_structure() {
        // B = K[x,y]/(xy, x⁴−y²): dim 6, radical chain (5, 3, 2, 1, 0).
        let f = q();
        let p = FreePresentation {
            field: f,
            generators: vec!["x".into(), "y".into()],
            relations: vec![
                poly(&f, &[(1, &[0, 1])]),
                poly(&f, &[(1, &[0, 0, 0, 0]), (-1, &[1, 1])]),
            ],
            commutative: true,
            nilpotency_cap: 20,
        };
        let b = from_free_presentation(&p).unwrap();
        assert_eq!(b.dim, 6);
        assert_eq!(
            b.basis_labels,
            vec!["1", "x", "y", "x^2", "y^2", "x^3"]
        );
        let cls = classify_local_selfinjective(&b);
        assert!(cls.local && cls.self_injective);
        assert_eq!(cls.radical_dims, vec![5, 3, 2, 1, 0]);
        // y² = x⁴ is the socle; x⁵ = x·x⁴ = x·y² = 0.
        let x4 = b.evaluate(&poly(&f, &[(1, &[0; 4])]));
        let y2 = b.evaluate(&poly(&f, &[(1, &[1, 1])]));
        assert_eq!(x4, y2);
        let x5 = b.evaluate(&poly(&f, &[(1, &[0; 5])]));
        assert!(x5.iter().all(|c| f.is_zero(c)));
    }

    #[test]
    fn noncommutative_truncated_algebra() {
        // B₄-type algebra: x₂x₃ = x₂² = x₃², x₃x₂ = 0, cubes vanish.
        let f = q();
        let p = FreePresentation {
            field: f,
            generators: vec!["u".into(), "v".into()],
            relations: vec![
                poly(&f, &[(1, &[1, 0])]),
                poly(&f, &[(1, &[0, 0]), (-1, &[0, 1])]),
                poly(&f, &[(1, &[0, 0]), (-1, &[1, 1])]),
                poly(&f, &[(1, &[0, 0, 0])]),
            ],
            commutative: false,
            nilpotency_cap: 16,
        };
        let b = from_free_presentation(&p).unwrap();
        assert_eq!(b.dim, 4);
        assert!(!b.is_commutative());
        let cls = classify_local_selfinjective(&b);
        assert!(cls.local && cls.self_injective);
        assert_eq!(cls.radical_dims, vec![3, 1, 0]);
        // The opposite algebra swaps uv and vu.
        let op = b.opposite();
        let uv = b.evaluate(&poly(&f, &[(1, &[0, 1])]));
        let vu_op = op.evaluate(&poly(&f, &[(1, &[1, 0])]));
        assert_eq!(uv, vu_op);
    }

    #[test]
    fn render_word_uses_powers() {
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(render_word(&names, &[]), "1");
        assert_eq!(render_word(&names, &[0, 0, 1]), "x^2*y");
    }
}
