//! Endomorphism algebras of ideal-lattice modules, their quivers,
//! defining relations, and corner-algebra recovery.
//!
//! For a family L(1), …, L(n) of left ideals of a local self-injective
//! algebra B indexed by a poset, A = End_B(⊕L(i))^op is assembled on the
//! canonical hom basis: f_(k,i,j) : L(j) → L(i) ⊆ L(k) acts by right
//! multiplication with the canonical solution t of x_j·t = x_i, for every
//! i in Λ^(j) ∩ Λ^(k). The product is `a ⋆ b = b ∘ a` ("apply a, then b"),
//! so the (s, t) hom block is e_s·A·e_t and projectives are P(i) = A⋆e_i.

use crate::algebra::{AlgebraError, FiniteAlgebra};
use crate::field::{FieldSpec, Scalar};
use crate::ideals::{hom_space, IdealModule};
use crate::linalg::{Matrix, Subspace};
use crate::poset::Poset;
use crate::rewrite::{concat, endpoints, enumerate_words, Alphabet, RowBasis, WordCombination, WordKey};
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EndoError {
    #[error("no multiplier t with x_{0}·t = x_{1} exists")]
    NoMultiplier(usize, usize),
    #[error("canonical hom elements of block ({0}, {1}) are dependent or do not span: got {2}, hom dimension {3}")]
    BlockMismatch(usize, usize, usize, usize),
    #[error("composite of basis maps left its hom block")]
    CompositeOutsideBlock,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("vertex path ({0}, {1}) has no unique arrow in the quiver")]
    NoUniqueArrow(usize, usize),
    #[error("path-relation extraction mismatch in block ({0}, {1}): {2} basis paths for hom dimension {3}")]
    PathCountMismatch(usize, usize, usize, usize),
    #[error("a path of maximal length escaped the relation ideal")]
    LongPathSurvives,
    #[error("corner recovery failed: {0}")]
    Corner(String),
}

/// One canonical basis endomorphism f_(dst, mid, src) : L(src) → L(dst).
#[derive(Debug, Clone)]
pub struct HomElement {
    pub src: usize,
    pub dst: usize,
    pub mid: usize,
    /// Matrix in the subspace bases of L(src), L(dst); row convention.
    pub map: Matrix,
}

/// The endomorphism algebra with its hom-block bookkeeping.
#[derive(Debug, Clone)]
pub struct EndoAlgebra {
    pub algebra: FiniteAlgebra,
    pub n: usize,
    /// (src, dst, mid) of each algebra basis element.
    pub elements: Vec<HomElement>,
    /// Basis index of the block idempotent e_i (1-based i).
    pub idempotent: Vec<usize>,
    /// Basis indices of the (src, dst) hom block, ascending by mid.
    pub blocks: BTreeMap<(usize, usize), Vec<usize>>,
    pub module_dims: Vec<usize>,
}

/// Canonical solution t of x_src · t = x_mid (free variables zero).
pub fn canonical_multiplier(
    b: &FiniteAlgebra,
    x_src: &[Scalar],
    x_mid: &[Scalar],
) -> Option<Vec<Scalar>> {
    b.left_mul_operator(x_src).solve_row_system(x_mid)
}

/// The canonical hom basis of Hom(L(src), L(dst)): one element per
/// mid ∈ Λ^(src) ∩ Λ^(dst), ascending.
pub fn canonical_hom_basis(
    b: &FiniteAlgebra,
    modules: &[IdealModule],
    poset: &Poset,
    src: usize,
    dst: usize,
) -> Result<Vec<HomElement>, EndoError> {
    let f = b.field;
    let mut out = Vec::new();
    for mid in 1..=poset.n {
        if !(poset.leq(src, mid) && poset.leq(dst, mid)) {
            continue;
        }
        let t = canonical_multiplier(b, &modules[src - 1].generator, &modules[mid - 1].generator)
            .ok_or(EndoError::NoMultiplier(src, mid))?;
        let rows = modules[src - 1]
            .space
            .basis_vectors()
            .into_iter()
            .map(|m| {
                modules[dst - 1]
                    .space
                    .coords_of(&b.multiply(&m, &t))
                    .ok_or(EndoError::CompositeOutsideBlock)
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(HomElement {
            src,
            dst,
            mid,
            map: Matrix::from_rows(f, rows),
        });
    }
    Ok(out)
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    (0..m.rows).flat_map(|r| m.row_vec(r)).collect()
}

/// Assemble A = End_B(⊕L(i))^op on the canonical hom basis and verify it
/// against the general Hom-space solver blockwise.
pub fn build_endo(
    b: &FiniteAlgebra,
    modules: &[IdealModule],
    poset: &Poset,
) -> Result<EndoAlgebra, EndoError> {
    let f = b.field;
    let n = poset.n;
    let mut elements: Vec<HomElement> = Vec::new();
    let mut blocks: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut block_spaces: BTreeMap<(usize, usize), Subspace> = BTreeMap::new();
    for src in 1..=n {
        for dst in 1..=n {
            let basis = canonical_hom_basis(b, modules, poset, src, dst)?;
            let flat: Vec<Vec<Scalar>> = basis.iter().map(|h| flatten(&h.map)).collect();
            let count = basis.len();
            let dims = modules[src - 1].dim() * modules[dst - 1].dim();
            let span = Subspace::from_vectors(f, dims, flat);
            let general = hom_space(b, &modules[src - 1], &modules[dst - 1]).len();
            if span.dim() != count || general != count {
                return Err(EndoError::BlockMismatch(src, dst, count, general));
            }
            let start = elements.len();
            blocks.insert((src, dst), (start..start + count).collect());
            block_spaces.insert((src, dst), span);
            elements.extend(basis);
        }
    }
    let dim = elements.len();

    let mut idempotent = vec![0usize; n];
    for (idx, h) in elements.iter().enumerate() {
        if h.src == h.dst && h.mid == h.src {
            idempotent[h.src - 1] = idx;
        }
    }

    // a ⋆ b = b ∘ a: defined when dst(a) = src(b); composite matrix is
    // map(a)·map(b) in the row convention.
    let mut products: Vec<Vec<Vec<Scalar>>> = vec![vec![Vec::new(); dim]; dim];
    for (ia, a) in elements.iter().enumerate() {
        for (ib, bb) in elements.iter().enumerate() {
            if a.dst != bb.src {
                products[ia][ib] = vec![f.zero(); dim];
                continue;
            }
            let comp = a.map.mul(&bb.map);
            let space = &block_spaces[&(a.src, bb.dst)];
            let coords = space
                .coords_of(&flatten(&comp))
                .ok_or(EndoError::CompositeOutsideBlock)?;
            let mut out = vec![f.zero(); dim];
            for (pos, idx) in blocks[&(a.src, bb.dst)].iter().enumerate() {
                out[*idx] = coords[pos].clone();
            }
            products[ia][ib] = out;
        }
    }

    let mut unit = vec![f.zero(); dim];
    for &e in &idempotent {
        unit[e] = f.one();
    }
    // Non-idempotent canonical elements span the radical; nilpotence and
    // ideal closure are verified during algebra construction.
    let rad_vectors: Vec<Vec<Scalar>> = elements
        .iter()
        .enumerate()
        .filter(|(_, h)| !(h.src == h.dst && h.mid == h.src))
        .map(|(i, _)| {
            let mut v = vec![f.zero(); dim];
            v[i] = f.one();
            v
        })
        .collect();
    let radical = Subspace::from_vectors(f, dim, rad_vectors);
    let labels: Vec<String> = elements
        .iter()
        .map(|h| format!("f({},{},{})", h.dst, h.mid, h.src))
        .collect();
    let algebra = FiniteAlgebra::new(f, labels, products, unit, Vec::new(), radical)?;
    Ok(EndoAlgebra {
        algebra,
        n,
        elements,
        idempotent,
        blocks,
        module_dims: modules.iter().map(|m| m.dim()).collect(),
    })
}

impl EndoAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn idempotent_vector(&self, i: usize) -> Vec<Scalar> {
        self.algebra.basis_vector(self.idempotent[i - 1])
    }

    /// The coordinate subspace spanned by a hom block.
    pub fn block_space(&self, src: usize, dst: usize) -> Subspace {
        let f = self.algebra.field;
        let vectors = self.blocks[&(src, dst)]
            .iter()
            .map(|&i| self.algebra.basis_vector(i))
            .collect();
        Subspace::from_vectors(f, self.dim(), vectors)
    }

    /// Basis index of the canonical element f_(dst, mid, src), if present.
    pub fn canonical_index(&self, dst: usize, mid: usize, src: usize) -> Option<usize> {
        self.elements
            .iter()
            .position(|h| h.src == src && h.dst == dst && h.mid == mid)
    }
}

/// The radical power chain of the endomorphism algebra.
pub fn endo_radical(e: &EndoAlgebra) -> Vec<Subspace> {
    e.algebra.radical_chain()
}

/// An arrow of the extracted quiver, with its representing element of A.
#[derive(Debug, Clone)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub element: Vec<Scalar>,
}

#[derive(Debug, Clone)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    /// The arrow alphabet: letter ℓ runs from(ℓ) → to(ℓ).
    pub fn alphabet(&self) -> Alphabet {
        Alphabet {
            vertices: self.vertices,
            letters: self.arrows.iter().map(|a| (a.from - 1, a.to - 1)).collect(),
        }
    }

    pub fn arrow_between(&self, from: usize, to: usize) -> Result<usize, EndoError> {
        let hits: Vec<usize> = self
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.from == from && a.to == to)
            .map(|(i, _)| i)
            .collect();
        match hits[..] {
            [one] => Ok(one),
            _ => Err(EndoError::NoUniqueArrow(from, to)),
        }
    }

    /// Render an arrow word as its vertex sequence "(v0, v1, …)".
    pub fn render_path(&self, w: &WordKey) -> String {
        match w {
            WordKey::Trivial(v) => format!("e_{}", v + 1),
            WordKey::Seq(s) => {
                let mut verts = vec![self.arrows[s[0]].from];
                verts.extend(s.iter().map(|&l| self.arrows[l].to));
                format!(
                    "({})",
                    verts
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            }
        }
    }
}

/// Gabriel quiver of A: arrows l → t with multiplicity
/// dim(e_t·(rad/rad²)·e_l), with canonical representing elements.
pub fn extract_quiver(e: &EndoAlgebra) -> Quiver {
    let rad_chain = e.algebra.radical_chain();
    let rad2 = &rad_chain[1.min(rad_chain.len() - 1)];
    let mut arrows = Vec::new();
    for l in 1..=e.n {
        for t in 1..=e.n {
            // e_t·A·e_l is the hom block (t, l) under the ⋆ convention.
            let block = e.block_space(t, l);
            let in_rad = block.intersect(&e.algebra.radical);
            let mut seen = block.intersect(rad2);
            for v in in_rad.basis_vectors() {
                if !seen.contains(&v) {
                    arrows.push(Arrow {
                        from: l,
                        to: t,
                        element: v.clone(),
                    });
                    seen = seen.sum(&Subspace::from_vectors(
                        e.algebra.field,
                        e.dim(),
                        vec![v],
                    ));
                }
            }
        }
    }
    Quiver {
        vertices: e.n,
        arrows,
    }
}

/// Evaluate an arrow word in A: the composite "traverse the arrows in
/// order", i.e. the ⋆-product of the representatives in reverse order.
pub fn path_eval(e: &EndoAlgebra, quiver: &Quiver, w: &WordKey) -> Vec<Scalar> {
    match w {
        WordKey::Trivial(v) => e.idempotent_vector(v + 1),
        WordKey::Seq(s) => {
            let mut acc = quiver.arrows[*s.last().unwrap()].element.clone();
            for &l in s.iter().rev().skip(1) {
                acc = e.algebra.multiply(&acc, &quiver.arrows[l].element);
            }
            acc
        }
    }
}

/// A presentation of A as a path algebra modulo relations.
#[derive(Debug, Clone)]
pub struct BoundQuiver {
    pub quiver: Quiver,
    pub alphabet: Alphabet,
    /// Minimal generating relations, in (length, lex) discovery order.
    pub relations: Vec<WordCombination>,
    /// Paths whose images form a basis of A.
    pub basis_paths: Vec<WordKey>,
    /// Maximal path length considered (nilpotency index of rad A).
    pub degree_cap: usize,
    /// All paths up to the cap, ascending, with the final relation ideal.
    pub words: Vec<WordKey>,
    pub rank_of: HashMap<WordKey, usize>,
    pub ideal: RowBasis,
}

fn insert_all_shifts(
    f: &FieldSpec,
    alphabet: &Alphabet,
    rank_of: &HashMap<WordKey, usize>,
    rel: &WordCombination,
    cap: usize,
    ideal: &mut RowBasis,
) {
    let (start, end) = endpoints(alphabet, &rel[0].1);
    let mut seen: HashSet<(WordKey, WordKey)> = HashSet::new();
    let mut queue: VecDeque<(WordKey, WordKey)> = VecDeque::new();
    let seed = (WordKey::Trivial(start), WordKey::Trivial(end));
    seen.insert(seed.clone());
    queue.push_back(seed);
    while let Some((u, v)) = queue.pop_front() {
        let shifted: Option<Vec<(usize, Scalar)>> = rel
            .iter()
            .map(|(c, w)| {
                let uw = concat(alphabet, &u, w)?;
                let uwv = concat(alphabet, &uw, &v)?;
                if uwv.len() > cap {
                    None
                } else {
                    Some((rank_of[&uwv], c.clone()))
                }
            })
            .collect();
        if let Some(mut row) = shifted {
            row.sort_by(|a, b| b.0.cmp(&a.0));
            ideal.insert(f, row);
        }
        let (u_start, _) = endpoints(alphabet, &u);
        let (_, v_end) = endpoints(alphabet, &v);
        for (l, (from, to)) in alphabet.letters.iter().enumerate() {
            if *to == u_start {
                let lu = concat(alphabet, &WordKey::Seq(vec![l]), &u).unwrap();
                let key = (lu, v.clone());
                if seen.insert(key.clone()) {
                    queue.push_back(key);
                }
            }
            if *from == v_end {
                let vl = concat(alphabet, &v, &WordKey::Seq(vec![l])).unwrap();
                let key = (u.clone(), vl);
                if seen.insert(key.clone()) {
                    queue.push_back(key);
                }
            }
        }
    }
}

/// Extract a minimal set of defining relations for A on the quiver: walk
/// paths in (length, lex) order, keep a basis of path images, and whenever
/// a path image becomes dependent emit the dependency as a relation unless
/// it already lies in the ideal generated by earlier relations.
pub fn extract_relations(e: &EndoAlgebra, quiver: &Quiver) -> Result<BoundQuiver, EndoError> {
    let f = e.algebra.field;
    let alphabet = quiver.alphabet();
    let cap = e.algebra.nilpotency_index();
    let words = enumerate_words(&alphabet, cap);
    let rank_of: HashMap<WordKey, usize> = words
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();

    // Echelon rows over A-coordinates, each tagged with the combination of
    // basis paths whose images it equals.
    struct TaggedRow {
        pivot: usize,
        avec: Vec<Scalar>,
        expr: BTreeMap<usize, Scalar>,
    }
    let mut image_rows: Vec<TaggedRow> = Vec::new();
    let mut basis_paths: Vec<WordKey> = Vec::new();
    let mut relations: Vec<WordCombination> = Vec::new();
    let mut ideal = RowBasis::default();

    for (rank, w) in words.iter().enumerate() {
        let mut avec = path_eval(e, quiver, w);
        let mut expr: BTreeMap<usize, Scalar> = BTreeMap::new();
        expr.insert(rank, f.one());
        for row in &image_rows {
            let factor = avec[row.pivot].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for (a, b) in avec.iter_mut().zip(row.avec.iter()) {
                *a = f.sub(a, &f.mul(&factor, b));
            }
            for (r, c) in &row.expr {
                let entry = expr.entry(*r).or_insert_with(|| f.zero());
                *entry = f.sub(entry, &f.mul(&factor, c));
            }
        }
        expr.retain(|_, c| !f.is_zero(c));
        if let Some(pivot) = avec.iter().position(|c| !f.is_zero(c)) {
            let inv = f.inv(&avec[pivot]);
            for a in avec.iter_mut() {
                *a = f.mul(a, &inv);
            }
            for c in expr.values_mut() {
                *c = f.mul(c, &inv);
            }
            image_rows.push(TaggedRow { pivot, avec, expr });
            basis_paths.push(w.clone());
        } else {
            // Image vanished: Σ expr·path evaluates to zero in A.
            let mut row: Vec<(usize, Scalar)> =
                expr.iter().map(|(r, c)| (*r, c.clone())).collect();
            row.sort_by(|a, b| b.0.cmp(&a.0));
            if !ideal.is_member(&f, row) {
                let rel: WordCombination = expr
                    .iter()
                    .map(|(r, c)| (c.clone(), words[*r].clone()))
                    .collect();
                insert_all_shifts(&f, &alphabet, &rank_of, &rel, cap, &mut ideal);
                relations.push(rel);
            }
        }
    }

    // Sanity: basis paths fill each hom block exactly, and every path of
    // maximal length lies in the relation ideal.
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for p in &basis_paths {
        let (s, t) = endpoints(&alphabet, p);
        *counts.entry((s + 1, t + 1)).or_insert(0) += 1;
    }
    for s in 1..=e.n {
        for t in 1..=e.n {
            let got = counts.get(&(s, t)).copied().unwrap_or(0);
            // Traversal s → t evaluates into the hom block (t, s).
            let want = e.blocks[&(t, s)].len();
            if got != want {
                return Err(EndoError::PathCountMismatch(s, t, got, want));
            }
        }
    }
    for (rank, w) in words.iter().enumerate() {
        if w.len() == cap && !ideal.is_member(&f, vec![(rank, f.one())]) {
            return Err(EndoError::LongPathSurvives);
        }
    }

    Ok(BoundQuiver {
        quiver: quiver.clone(),
        alphabet,
        relations,
        basis_paths,
        degree_cap: cap,
        words,
        rank_of,
        ideal,
    })
}

/// A relation candidate written over vertex sequences:
/// Σ c · (v0, v1, …, vm).
pub type VertexCombination = Vec<(Scalar, Vec<usize>)>;

#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub rendered: String,
    pub zero_forward: bool,
    pub zero_reversed: bool,
}

fn vertex_path_eval(
    e: &EndoAlgebra,
    quiver: &Quiver,
    verts: &[usize],
    reversed: bool,
) -> Result<Vec<Scalar>, EndoError> {
    let order: Vec<usize> = if reversed {
        verts.iter().rev().copied().collect()
    } else {
        verts.to_vec()
    };
    if order.len() == 1 {
        return Ok(e.idempotent_vector(order[0]));
    }
    let mut letters = Vec::new();
    for pair in order.windows(2) {
        letters.push(quiver.arrow_between(pair[0], pair[1])?);
    }
    Ok(path_eval(e, quiver, &WordKey::Seq(letters)))
}

/// Evaluate vertex-sequence relation candidates in A under both reading
/// conventions (as written, and with every path reversed).
pub fn verify_relations(
    e: &EndoAlgebra,
    quiver: &Quiver,
    candidates: &[VertexCombination],
) -> Result<Vec<RelationCheck>, EndoError> {
    let f = e.algebra.field;
    let mut out = Vec::new();
    for comb in candidates {
        let mut results = [true, true];
        for (slot, reversed) in [(0, false), (1, true)] {
            let mut acc = vec![f.zero(); e.dim()];
            for (c, verts) in comb {
                let v = vertex_path_eval(e, quiver, verts, reversed)?;
                for (a, x) in acc.iter_mut().zip(v.iter()) {
                    *a = f.add(a, &f.mul(c, x));
                }
            }
            results[slot] = acc.iter().all(|c| f.is_zero(c));
        }
        let rendered = comb
            .iter()
            .map(|(c, verts)| {
                format!(
                    "{}·({})",
                    f.render(c),
                    verts
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect::<Vec<_>>()
            .join(" + ");
        out.push(RelationCheck {
            rendered,
            zero_forward: results[0],
            zero_reversed: results[1],
        });
    }
    Ok(out)
}

/// Recover a local algebra and its ideal lattice from a bound quiver by
/// taking the corner at `vertex`: the cycle subalgebra of the path-algebra
/// quotient, with L'(i) generated by the canonical round trip through i.
pub fn corner_pair(
    bq: &BoundQuiver,
    vertex: usize,
    field: FieldSpec,
    degree_cap: usize,
) -> Result<(FiniteAlgebra, Vec<IdealModule>), EndoError> {
    let quot = crate::rewrite::quotient(field, bq.alphabet.clone(), &bq.relations, degree_cap)
        .map_err(|err| EndoError::Corner(err.to_string()))?;
    let v0 = vertex - 1;
    let f = field;

    // Basis cycles at the corner vertex.
    let cycle_positions: Vec<usize> = quot
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &r)| endpoints(&bq.alphabet, &quot.words[r]) == (v0, v0))
        .map(|(pos, _)| pos)
        .collect();
    let dim = cycle_positions.len();
    let pos_of: HashMap<usize, usize> = cycle_positions
        .iter()
        .enumerate()
        .map(|(c, &p)| (p, c))
        .collect();
    let restrict = |full: Vec<Scalar>| -> Result<Vec<Scalar>, EndoError> {
        let mut out = vec![f.zero(); dim];
        for (p, c) in full.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let Some(&cp) = pos_of.get(&p) else {
                return Err(EndoError::Corner(
                    "a corner product left the cycle subalgebra".to_string(),
                ));
            };
            out[cp] = c.clone();
        }
        Ok(out)
    };

    let mut products = vec![vec![Vec::new(); dim]; dim];
    for (ci, &pi) in cycle_positions.iter().enumerate() {
        for (cj, &pj) in cycle_positions.iter().enumerate() {
            products[ci][cj] = restrict(quot.multiply_basis_words(pi, pj))?;
        }
    }
    let unit = restrict(quot.normal_form(&WordKey::Trivial(v0)))?;
    let labels: Vec<String> = cycle_positions
        .iter()
        .map(|&p| bq.quiver.render_path(&quot.words[quot.basis[p]]))
        .collect();
    let rad_vectors: Vec<Vec<Scalar>> = cycle_positions
        .iter()
        .enumerate()
        .filter(|(_, &p)| quot.words[quot.basis[p]].len() > 0)
        .map(|(c, _)| {
            let mut v = vec![f.zero(); dim];
            v[c] = f.one();
            v
        })
        .collect();
    let radical = Subspace::from_vectors(f, dim, rad_vectors);
    let corner = FiniteAlgebra::new(f, labels, products, unit, Vec::new(), radical)
        .map_err(|e| EndoError::Corner(e.to_string()))?;

    // Canonical generators: the lex-first shortest round trip through i.
    let shortest_to = bfs_paths(&bq.quiver, vertex);
    let shortest_from = bfs_paths(&reverse_placeholder(&bq.quiver), vertex);
    let mut modules = Vec::new();
    for i in 1..=bq.quiver.vertices {
        let out_path = shortest_to[i - 1]
            .clone()
            .ok_or_else(|| EndoError::Corner(format!("vertex {i} unreachable from {vertex}")))?;
        let back_path = shortest_from[i - 1]
            .clone()
            .ok_or_else(|| EndoError::Corner(format!("vertex {vertex} unreachable from {i}")))?
            .iter()
            .rev()
            .map(|&l| l)
            .collect::<Vec<_>>();
        let mut letters = out_path;
        letters.extend(back_path);
        let word = if letters.is_empty() {
            WordKey::Trivial(v0)
        } else {
            WordKey::Seq(letters)
        };
        let g = restrict(quot.normal_form(&word))?;
        modules.push(crate::ideals::ideal_from_generator(&corner, &g));
    }
    Ok((corner, modules))
}

/// Lex-first shortest arrow paths from `start` to every vertex.
fn bfs_paths(q: &Quiver, start: usize) -> Vec<Option<Vec<usize>>> {
    let mut best: Vec<Option<Vec<usize>>> = vec![None; q.vertices];
    best[start - 1] = Some(Vec::new());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            let path = best[v - 1].clone().unwrap();
            let mut arrows: Vec<(usize, &Arrow)> = q
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, a)| a.from == v)
                .collect();
            arrows.sort_by_key(|(l, _)| *l);
            for (l, a) in arrows {
                if best[a.to - 1].is_none() {
                    let mut p = path.clone();
                    p.push(l);
                    best[a.to - 1] = Some(p);
                    next.push(a.to);
                }
            }
        }
        next.sort();
        next.dedup();
        frontier = next;
    }
    best
}

/// The quiver with all arrows reversed (used to find return paths whose
/// reversal is a genuine forward path).
fn reverse_placeholder(q: &Quiver) -> Quiver {
    Quiver {
        vertices: q.vertices,
        arrows: q
            .arrows
            .iter()
            .map(|a| Arrow {
                from: a.to,
                to: a.from,
                element: a.element.clone(),
            })
            .collect(),
    }
}
