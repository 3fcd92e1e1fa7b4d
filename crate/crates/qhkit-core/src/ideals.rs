//! Left-ideal modules over a finite-dimensional algebra, morphism-existence
//! tests between them, Hom-spaces, and the lattice compatibility condition
//! linking a family of local two-sided ideals to a poset.

use crate::algebra::{classify_local_selfinjective, FiniteAlgebra};
use crate::field::Scalar;
use crate::linalg::{Matrix, Subspace};
use crate::poset::Poset;

/// A left ideal B·x presented by a generator and its spanned subspace.
#[derive(Debug, Clone)]
pub struct IdealModule {
    /// Coordinates of the generator x in the algebra basis.
    pub generator: Vec<Scalar>,
    /// The subspace B·x ⊆ B.
    pub space: Subspace,
}

impl IdealModule {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Build the left ideal B·x from a generator.
pub fn ideal_from_generator(b: &FiniteAlgebra, x: &[Scalar]) -> IdealModule {
    let vectors = (0..b.dim)
        .map(|i| b.multiply(&b.basis_vector(i), x))
        .collect();
    IdealModule {
        generator: x.to_vec(),
        space: Subspace::from_vectors(b.field, b.dim, vectors),
    }
}

/// Is the subspace closed under right multiplication (i.e. two-sided)?
pub fn is_two_sided(b: &FiniteAlgebra, m: &IdealModule) -> bool {
    m.space.basis_vectors().iter().all(|v| {
        (0..b.dim).all(|i| m.space.contains(&b.multiply(v, &b.basis_vector(i))))
    })
}

/// rad B · M, the radical of a left module inside B.
pub fn module_radical(b: &FiniteAlgebra, m: &IdealModule) -> Subspace {
    let mut vectors = Vec::new();
    for r in b.radical.basis_vectors() {
        for v in m.space.basis_vectors() {
            vectors.push(b.multiply(&r, &v));
        }
    }
    Subspace::from_vectors(b.field, b.dim, vectors)
}

/// A left module is local iff its generator lies outside rad·M.
pub fn is_local_module(b: &FiniteAlgebra, m: &IdealModule) -> bool {
    m.dim() > 0 && !module_radical(b, m).contains(&m.generator)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphismTests {
    pub surjection_exists: bool,
    pub injection_exists: bool,
}

/// Deterministic existence tests for B-module maps between left ideals of a
/// local algebra B. A map M → N sends the generator x of M to some element
/// of (x·B) ∩ N; it is surjective iff some image generates N, equivalently
/// iff (x·B) ∩ N ⊄ rad N. An injection M ↪ N between local left ideals of a
/// self-injective local algebra exists iff M ⊆ N as subspaces.
pub fn morphism_tests(b: &FiniteAlgebra, m: &IdealModule, n: &IdealModule) -> MorphismTests {
    let xb = {
        let vectors = (0..b.dim)
            .map(|i| b.multiply(&m.generator, &b.basis_vector(i)))
            .collect();
        Subspace::from_vectors(b.field, b.dim, vectors)
    };
    let candidates = xb.intersect(&n.space);
    let rad_n = module_radical(b, n);
    let surjection_exists =
        n.dim() == 0 || candidates.basis_vectors().iter().any(|v| !rad_n.contains(v));
    let injection_exists = m.space.is_subspace_of(&n.space);
    MorphismTests {
        surjection_exists,
        injection_exists,
    }
}

/// The space of B-module homomorphisms M → N (as matrices in the bases of
/// the two subspaces, row convention: coords(φ(mᵢ)) = row i).
pub fn hom_space(b: &FiniteAlgebra, m: &IdealModule, n: &IdealModule) -> Vec<Matrix> {
    let f = b.field;
    let dm = m.dim();
    let dn = n.dim();
    if dm == 0 || dn == 0 {
        return Vec::new();
    }
    let m_basis = m.space.basis_vectors();
    let n_basis = n.space.basis_vectors();
    // Left action matrices of each algebra basis element on M and N.
    let act = |space: &Subspace, basis: &[Vec<Scalar>], g: usize| -> Matrix {
        let rows = basis
            .iter()
            .map(|v| {
                space
                    .coords_of(&b.multiply(&b.basis_vector(g), v))
                    .expect("left ideals are closed under the left action")
            })
            .collect();
        Matrix::from_rows(f, rows)
    };
    // Unknown F (dm×dn), flattened row-major; constraints L_M·F = F·L_N.
    let mut equations: Vec<Vec<Scalar>> = Vec::new();
    for g in 0..b.dim {
        let lm = act(&m.space, &m_basis, g);
        let ln = act(&n.space, &n_basis, g);
        for r in 0..dm {
            for c in 0..dn {
                let mut eq = vec![f.zero(); dm * dn];
                for k in 0..dm {
                    eq[k * dn + c] = f.add(&eq[k * dn + c], lm.get(r, k));
                }
                for k in 0..dn {
                    eq[r * dn + k] = f.sub(&eq[r * dn + k], ln.get(k, c));
                }
                equations.push(eq);
            }
        }
    }
    let kernel = Matrix::from_rows(f, equations).kernel_basis();
    kernel
        .basis_vectors()
        .into_iter()
        .map(|flat| {
            let rows = (0..dm).map(|r| flat[r * dn..(r + 1) * dn].to_vec()).collect();
            Matrix::from_rows(f, rows)
        })
        .collect()
}

/// Report for the poset-compatibility check on a family of ideals.
#[derive(Debug, Clone)]
pub struct MaReport {
    pub passed: bool,
    pub local_self_injective: bool,
    pub top_dim: usize,
    pub socle_dim: usize,
    pub radical_dims: Vec<usize>,
    pub dim_b: usize,
    pub labeling_ok: bool,
    pub minimal_elements: Vec<usize>,
    pub maximal_elements: Vec<usize>,
    pub l_min_is_b: bool,
    pub module_dims: Vec<usize>,
    pub module_local: Vec<bool>,
    pub module_two_sided: Vec<bool>,
    /// (i, j, expected surjection?, found surjection?) for the first failure.
    pub surjection_witness: Option<(usize, usize, bool, bool)>,
    pub surjections_match_order: bool,
    /// First i where rad L(i) ≠ Σ_{j > i} L(j).
    pub radical_sum_witness: Option<usize>,
    pub radical_sums_match: bool,
}

/// Check that a family L(1), …, L(n) of left ideals realizes the poset:
/// B local self-injective; every L(i) a local two-sided ideal; L at the
/// minimum equal to B; surjections L(i) ↠ L(j) exactly for i ⩽ j; and
/// rad L(i) = Σ_{j > i} L(j). With `standard_labeling`, the minimum must be
/// labeled 1 and the maximum n.
pub fn check_condition_ma(
    b: &FiniteAlgebra,
    modules: &[IdealModule],
    poset: &Poset,
    standard_labeling: bool,
) -> MaReport {
    let n = poset.n;
    assert_eq!(modules.len(), n, "one module per poset element");
    let cls = classify_local_selfinjective(b);
    let local_self_injective = cls.local && cls.self_injective;

    let minimal = poset.minimal_elements();
    let maximal = poset.maximal_elements();
    let labeling_ok = if standard_labeling {
        poset.minimum() == Some(1) && poset.maximum() == Some(n)
    } else {
        poset.minimum().is_some() && poset.maximum().is_some()
    };

    let l_min_is_b = poset
        .minimum()
        .map(|m| modules[m - 1].space == Subspace::full(b.field, b.dim))
        .unwrap_or(false);

    let module_dims: Vec<usize> = modules.iter().map(|m| m.dim()).collect();
    let module_local: Vec<bool> = modules.iter().map(|m| is_local_module(b, m)).collect();
    let module_two_sided: Vec<bool> = modules.iter().map(|m| is_two_sided(b, m)).collect();

    let mut surjection_witness = None;
    'surj: for i in 1..=n {
        for j in 1..=n {
            let expected = poset.leq(i, j);
            let found = morphism_tests(b, &modules[i - 1], &modules[j - 1]).surjection_exists;
            if expected != found {
                surjection_witness = Some((i, j, expected, found));
                break 'surj;
            }
        }
    }
    let surjections_match_order = surjection_witness.is_none();

    let mut radical_sum_witness = None;
    for i in 1..=n {
        let rad = module_radical(b, &modules[i - 1]);
        let mut sum = Subspace::zero(b.field, b.dim);
        for j in 1..=n {
            if poset.lt(i, j) {
                sum = sum.sum(&modules[j - 1].space);
            }
        }
        if rad != sum {
            radical_sum_witness = Some(i);
            break;
        }
    }
    let radical_sums_match = radical_sum_witness.is_none();

    let passed = local_self_injective
        && labeling_ok
        && l_min_is_b
        && module_local.iter().all(|&x| x)
        && module_two_sided.iter().all(|&x| x)
        && surjections_match_order
        && radical_sums_match;

    MaReport {
        passed,
        local_self_injective,
        top_dim: b.top_dim(),
        socle_dim: cls.left_socle_dim,
        radical_dims: cls.radical_dims,
        dim_b: b.dim,
        labeling_ok,
        minimal_elements: minimal,
        maximal_elements: maximal,
        l_min_is_b,
        module_dims,
        module_local,
        module_two_sided,
        surjection_witness,
        surjections_match_order,
        radical_sum_witness,
        radical_sums_match,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{from_free_presentation, FreePresentation, NcPoly};
    use crate::field::FieldSpec;

    fn poly(f: &FieldSpec, terms: &[(i64, &[usize])]) -> NcPoly {
        NcPoly {
            terms: terms
                .iter()
                .map(|(c, w)| (f.from_i64(*c), w.to_vec()))
                .collect(),
        }
    }

    fn example_b() -> FiniteAlgebra {
        let f = FieldSpec::Rationals;
        from_free_presentation(&FreePresentation {
            field: f,
            generators: vec!["x".into(), "y".into()],
            relations: vec![
                poly(&f, &[(1, &[0, 1])]),
                poly(&f, &[(1, &[0, 0, 0]), (-1, &[1, 1, 1])]),
            ],
            commutative: true,
            nilpotency_cap: 16,
        })
        .unwrap()
    }

    fn lattice_one(b: &FiniteAlgebra) -> Vec<IdealModule> {
        // Generators 1, x, y, x², y², x³ in the word basis of example B.
        let f = b.field;
        let gens: Vec<Vec<crate::field::Scalar>> = [
            &[0usize][..1],
            &[1][..1],
            &[2][..1],
            &[3][..1],
            &[4][..1],
            &[5][..1],
        ]
        .iter()
        .map(|idx| {
            let mut v = vec![f.zero(); b.dim];
            v[idx[0]] = f.one();
            v
        })
        .collect();
        gens.iter().map(|g| ideal_from_generator(b, g)).collect()
    }

    fn example_poset() -> Poset {
        Poset::new(6, &[(1, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 6)]).unwrap()
    }

    #[test]
    fn ideal_dims_of_the_diamond_lattice() {
        let b = example_b();
        let mods = lattice_one(&b);
        assert_eq!(
            mods.iter().map(|m| m.dim()).collect::<Vec<_>>(),
            vec![6, 3, 3, 2, 2, 1]
        );
        for m in &mods {
            assert!(is_two_sided(&b, m));
            assert!(is_local_module(&b, m));
        }
    }

    #[test]
    fn condition_passes_on_the_diamond_lattice() {
        let b = example_b();
        let mods = lattice_one(&b);
        let report = check_condition_ma(&b, &mods, &example_poset(), true);
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn condition_fails_on_a_wrong_poset() {
        let b = example_b();
        let mods = lattice_one(&b);
        // Chain order 1<2<3<4<5<6 disagrees with the surjection pattern.
        let chain = Poset::new(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let report = check_condition_ma(&b, &mods, &chain, true);
        assert!(!report.passed);
        assert!(report.surjection_witness.is_some());
    }

    #[test]
    fn surjections_follow_the_order() {
        let b = example_b();
        let mods = lattice_one(&b);
        let p = example_poset();
        // x·B ∋ x³ generates L(6) but L(4) ⟶̸ L(5): incomparable.
        let t45 = morphism_tests(&b, &mods[3], &mods[4]);
        assert!(!t45.surjection_exists && !t45.injection_exists);
        let t26 = morphism_tests(&b, &mods[1], &mods[5]);
        assert!(t26.surjection_exists);
        assert!(p.leq(2, 6));
        let t61 = morphism_tests(&b, &mods[5], &mods[0]);
        assert!(!t61.surjection_exists && t61.injection_exists);
    }

    #[test]
    fn hom_space_dimensions_match_shared_upper_bounds() {
        // dim Hom(L(i), L(j)) = |Λ^(i) ∩ Λ^(j)| on the diamond lattice.
        let b = example_b();
        let mods = lattice_one(&b);
        let p = example_poset();
        for i in 1..=6usize {
            for j in 1..=6usize {
                let shared = (1..=6)
                    .filter(|&k| p.leq(i, k) && p.leq(j, k))
                    .count();
                let homs = hom_space(&b, &mods[i - 1], &mods[j - 1]);
                assert_eq!(homs.len(), shared, "Hom(L({i}), L({j}))");
            }
        }
    }
}
