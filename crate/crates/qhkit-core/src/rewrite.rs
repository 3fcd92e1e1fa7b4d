//! Degree-filtered quotients of free and path algebras by word rewriting.
//!
//! Words over an alphabet of composable letters (free-algebra generators or
//! quiver arrows) are ordered by length, then lexicographically. The span of
//! all shifted relations `u·g·v` up to a degree cap is kept as an echelon
//! row basis whose leading word is the largest word of each row; rewriting
//! a leading word into its strictly smaller tail is therefore
//! order-decreasing, which yields the termination certificate: the first
//! length at which every word is a leading word (the *frontier*) bounds the
//! radical filtration, and the quotient basis is the set of non-leading
//! words below it — the basis "greedy by word length then lex order".

use crate::field::{FieldSpec, Scalar};
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use thiserror::Error;

/// Letters with endpoints; a free algebra is the one-vertex case.
#[derive(Debug, Clone)]
pub struct Alphabet {
    pub vertices: usize,
    /// (from, to) of each letter.
    pub letters: Vec<(usize, usize)>,
}

impl Alphabet {
    pub fn free(generators: usize) -> Self {
        Alphabet {
            vertices: 1,
            letters: vec![(0, 0); generators],
        }
    }
}

/// A word: the trivial (empty) word at a vertex, or a composable letter
/// sequence. Ordered by (length, content).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordKey {
    Trivial(usize),
    Seq(Vec<usize>),
}

impl WordKey {
    pub fn len(&self) -> usize {
        match self {
            WordKey::Trivial(_) => 0,
            WordKey::Seq(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn letters(&self) -> &[usize] {
        match self {
            WordKey::Trivial(_) => &[],
            WordKey::Seq(s) => s,
        }
    }
}

/// A linear combination of words, with common endpoints required by callers.
pub type WordCombination = Vec<(Scalar, WordKey)>;

#[derive(Debug, Error)]
pub enum RewriteError {
    #[error("relation term of length {0} lies outside the square of the augmentation ideal")]
    RelationTooShort(usize),
    #[error("relation terms do not share endpoints")]
    MixedEndpoints,
    #[error("relation uses an invalid letter sequence")]
    InvalidWord,
    #[error("quotient did not stabilize below the nilpotency/degree cap {0}")]
    CapExceeded(usize),
}

/// The finished quotient: a canonical word basis plus normal forms for all
/// words up to twice the frontier, enough to multiply any two basis words.
#[derive(Debug, Clone)]
pub struct WordQuotient {
    pub field: FieldSpec,
    pub alphabet: Alphabet,
    /// All enumerated words in ascending (length, lex) order.
    pub words: Vec<WordKey>,
    pub rank_of: HashMap<WordKey, usize>,
    /// Ranks of the quotient-basis words, ascending.
    pub basis: Vec<usize>,
    /// Normal form of every enumerated word as coordinates in `basis`.
    nf: Vec<Vec<(usize, Scalar)>>,
    /// Echelon rows of the truncated relation ideal (leading word first).
    pub ideal_rows: Vec<Vec<(usize, Scalar)>>,
    /// First length at which no basis word survives (radical nilpotency bound).
    pub frontier: usize,
    /// Degree cap actually used (≥ 2·(frontier−1)).
    pub degree_used: usize,
}

/// Sparse row over word ranks, terms sorted by descending rank (leading first).
type Row = Vec<(usize, Scalar)>;

fn row_sub_scaled(field: &FieldSpec, a: &Row, b: &Row, factor: &Scalar) -> Row {
    // a − factor·b, both sorted descending.
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 > b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 > a[i].0 {
            let c = field.neg(&field.mul(factor, &b[j].1));
            if !field.is_zero(&c) {
                out.push((b[j].0, c));
            }
            j += 1;
        } else {
            let c = field.sub(&a[i].1, &field.mul(factor, &b[j].1));
            if !field.is_zero(&c) {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Echelon basis keyed by leading word rank; rows are monic at the lead.
#[derive(Debug, Default, Clone)]
pub struct RowBasis {
    pub rows: BTreeMap<usize, Row>,
}

impl RowBasis {
    /// Fully reduce `row` by the basis; the result has no basis lead.
    pub fn reduce(&self, field: &FieldSpec, mut row: Row) -> Row {
        let mut out: Row = Vec::new();
        while let Some((lead, coef)) = row.first().cloned() {
            if let Some(r) = self.rows.get(&lead) {
                row = row_sub_scaled(field, &row, r, &coef);
            } else {
                out.push((lead, coef));
                row.remove(0);
            }
        }
        out
    }

    /// Insert after reduction; returns true if the row enlarged the span.
    pub fn insert(&mut self, field: &FieldSpec, row: Row) -> bool {
        let mut row = self.reduce(field, row);
        // `reduce` leaves a row none of whose terms is a current lead, but a
        // non-leading term may later become one; re-reduction on lookup is
        // avoided by only ever reducing through `reduce`.
        if row.is_empty() {
            return false;
        }
        let lead_inv = field.inv(&row[0].1);
        for t in row.iter_mut() {
            t.1 = field.mul(&t.1, &lead_inv);
        }
        let lead = row[0].0;
        self.rows.insert(lead, row);
        true
    }

    pub fn is_member(&self, field: &FieldSpec, row: Row) -> bool {
        self.reduce(field, row).is_empty()
    }
}

/// All words of length ≤ max_len in ascending (length, lex) order.
pub fn enumerate_words(alphabet: &Alphabet, max_len: usize) -> Vec<WordKey> {
    let mut words: Vec<WordKey> = (0..alphabet.vertices).map(WordKey::Trivial).collect();
    // Grow composable sequences length by length, in lex order.
    let mut current: Vec<Vec<usize>> = (0..alphabet.letters.len()).map(|l| vec![l]).collect();
    for _len in 1..=max_len {
        words.extend(current.iter().cloned().map(WordKey::Seq));
        let mut next = Vec::new();
        for w in &current {
            let end = alphabet.letters[*w.last().unwrap()].1;
            for (l, (from, _)) in alphabet.letters.iter().enumerate() {
                if *from == end {
                    let mut ext = w.clone();
                    ext.push(l);
                    next.push(ext);
                }
            }
        }
        current = next;
    }
    words
}

fn word_valid(alphabet: &Alphabet, w: &WordKey) -> bool {
    match w {
        WordKey::Trivial(v) => *v < alphabet.vertices,
        WordKey::Seq(s) => {
            !s.is_empty()
                && s.iter().all(|&l| l < alphabet.letters.len())
                && s.windows(2)
                    .all(|p| alphabet.letters[p[0]].1 == alphabet.letters[p[1]].0)
        }
    }
}

/// (start, end) vertices of a word.
pub fn endpoints(alphabet: &Alphabet, w: &WordKey) -> (usize, usize) {
    match w {
        WordKey::Trivial(v) => (*v, *v),
        WordKey::Seq(s) => (
            alphabet.letters[*s.first().unwrap()].0,
            alphabet.letters[*s.last().unwrap()].1,
        ),
    }
}

/// Concatenate two words if their endpoints compose.
pub fn concat(alphabet: &Alphabet, a: &WordKey, b: &WordKey) -> Option<WordKey> {
    let (_, a_end) = endpoints(alphabet, a);
    let (b_start, _) = endpoints(alphabet, b);
    if a_end != b_start {
        return None;
    }
    Some(match (a, b) {
        (WordKey::Trivial(_), _) => b.clone(),
        (_, WordKey::Trivial(_)) => a.clone(),
        (WordKey::Seq(x), WordKey::Seq(y)) => {
            let mut s = x.clone();
            s.extend_from_slice(y);
            WordKey::Seq(s)
        }
    })
}

/// Compute the quotient of the (free or path) algebra on `alphabet` by the
/// two-sided ideal generated by `relations`, or fail if the quotient does
/// not become visibly finite-dimensional below `cap`.
pub fn quotient(
    field: FieldSpec,
    alphabet: Alphabet,
    relations: &[WordCombination],
    cap: usize,
) -> Result<WordQuotient, RewriteError> {
    for rel in relations {
        let mut ends: Option<(usize, usize)> = None;
        for (_, w) in rel {
            if !word_valid(&alphabet, w) {
                return Err(RewriteError::InvalidWord);
            }
            if w.len() < 2 {
                return Err(RewriteError::RelationTooShort(w.len()));
            }
            let e = endpoints(&alphabet, w);
            if *ends.get_or_insert(e) != e {
                return Err(RewriteError::MixedEndpoints);
            }
        }
    }

    let max_rel_len = relations
        .iter()
        .flat_map(|r| r.iter().map(|(_, w)| w.len()))
        .max()
        .unwrap_or(2);
    let mut degree = (2 * max_rel_len).max(4);
    if degree > cap.max(4) {
        return Err(RewriteError::CapExceeded(cap));
    }

    loop {
        let words = enumerate_words(&alphabet, degree);
        let rank_of: HashMap<WordKey, usize> =
            words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

        let to_row = |comb: &WordCombination| -> Row {
            let mut row: Row = comb
                .iter()
                .filter(|(c, _)| !field.is_zero(c))
                .map(|(c, w)| (rank_of[w], c.clone()))
                .collect();
            row.sort_by(|a, b| b.0.cmp(&a.0));
            row
        };

        // Span of u·g·v over all shifts with every term's length ≤ degree.
        let mut ideal = RowBasis::default();
        let mut seen: HashSet<(WordKey, usize, WordKey)> = HashSet::new();
        let mut queue: VecDeque<(WordKey, usize, WordKey)> = VecDeque::new();
        for (g, rel) in relations.iter().enumerate() {
            if rel.iter().all(|(c, _)| field.is_zero(c)) {
                continue;
            }
            let (start, end) = endpoints(&alphabet, &rel[0].1);
            let key = (WordKey::Trivial(start), g, WordKey::Trivial(end));
            seen.insert(key.clone());
            queue.push_back(key);
        }
        while let Some((u, g, v)) = queue.pop_front() {
            let rel = &relations[g];
            let shifted: Option<WordCombination> = rel
                .iter()
                .map(|(c, w)| {
                    let uw = concat(&alphabet, &u, w)?;
                    let uwv = concat(&alphabet, &uw, &v)?;
                    if uwv.len() > degree {
                        None
                    } else {
                        Some((c.clone(), uwv))
                    }
                })
                .collect();
            let Some(shifted) = shifted else { continue };
            ideal.insert(&field, to_row(&shifted));
            // One-letter extensions on both sides.
            let (u_start, _) = endpoints(&alphabet, &u);
            let (_, v_end) = endpoints(&alphabet, &v);
            for (l, (from, to)) in alphabet.letters.iter().enumerate() {
                if *to == u_start {
                    let lu = concat(&alphabet, &WordKey::Seq(vec![l]), &u).unwrap();
                    let key = (lu, g, v.clone());
                    if seen.insert(key.clone()) {
                        queue.push_back(key);
                    }
                }
                if *from == v_end {
                    let vl = concat(&alphabet, &v, &WordKey::Seq(vec![l])).unwrap();
                    let key = (u.clone(), g, vl);
                    if seen.insert(key.clone()) {
                        queue.push_back(key);
                    }
                }
            }
        }

        // Frontier: first length at which every word is a leading word.
        let mut frontier = None;
        'outer: for f in 1..=degree {
            for (r, w) in words.iter().enumerate() {
                if w.len() >= f && !ideal.rows.contains_key(&r) {
                    continue 'outer;
                }
            }
            frontier = Some(f);
            break;
        }
        let needed = frontier.map(|f| 2 * f.saturating_sub(1));
        match (frontier, needed) {
            (Some(f), Some(need)) if need <= degree => {
                return finish(field, alphabet, words, rank_of, ideal, f, degree);
            }
            _ => {
                let next = needed.unwrap_or(degree + 2).max(degree + 2);
                if next > cap {
                    return Err(RewriteError::CapExceeded(cap));
                }
                degree = next;
            }
        }
    }
}

fn finish(
    field: FieldSpec,
    alphabet: Alphabet,
    words: Vec<WordKey>,
    rank_of: HashMap<WordKey, usize>,
    ideal: RowBasis,
    frontier: usize,
    degree_used: usize,
) -> Result<WordQuotient, RewriteError> {
    let basis: Vec<usize> = (0..words.len())
        .filter(|r| words[*r].len() < frontier && !ideal.rows.contains_key(r))
        .collect();
    let basis_pos: HashMap<usize, usize> =
        basis.iter().enumerate().map(|(p, r)| (*r, p)).collect();

    // Normal forms by ascending rank: nf(lead) = −Σ tail·nf(tail terms).
    let mut nf: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(words.len());
    for r in 0..words.len() {
        if let Some(pos) = basis_pos.get(&r) {
            nf.push(vec![(*pos, field.one())]);
            continue;
        }
        let Some(row) = ideal.rows.get(&r) else {
            // Non-basis, non-leading word: above the frontier yet untouched
            // by a relation cannot happen once the frontier certificate holds.
            return Err(RewriteError::CapExceeded(degree_used));
        };
        debug_assert_eq!(row[0].0, r);
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (tr, c) in row.iter().skip(1) {
            for (bp, bc) in &nf[*tr] {
                let add = field.neg(&field.mul(c, bc));
                let e = acc.entry(*bp).or_insert_with(|| field.zero());
                *e = field.add(e, &add);
            }
        }
        nf.push(
            acc.into_iter()
                .filter(|(_, c)| !field.is_zero(c))
                .collect(),
        );
    }

    let ideal_rows = ideal.rows.into_values().collect();
    Ok(WordQuotient {
        field,
        alphabet,
        words,
        rank_of,
        basis,
        nf,
        ideal_rows,
        frontier,
        degree_used,
    })
}

impl WordQuotient {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_words(&self) -> Vec<&WordKey> {
        self.basis.iter().map(|&r| &self.words[r]).collect()
    }

    /// Normal form of an enumerated word, as dense coordinates in the basis.
    pub fn normal_form(&self, w: &WordKey) -> Vec<Scalar> {
        let r = self.rank_of[w];
        let mut out = vec![self.field.zero(); self.dim()];
        for (p, c) in &self.nf[r] {
            out[*p] = c.clone();
        }
        out
    }

    /// Product of two basis words, as coordinates in the basis.
    pub fn multiply_basis_words(&self, a: usize, b: usize) -> Vec<Scalar> {
        let wa = &self.words[self.basis[a]];
        let wb = &self.words[self.basis[b]];
        match concat(&self.alphabet, wa, wb) {
            None => vec![self.field.zero(); self.dim()],
            Some(w) => self.normal_form(&w),
        }
    }

    /// Membership of a word combination in the truncated relation ideal.
    pub fn ideal_contains(&self, comb: &WordCombination) -> bool {
        let mut row: Row = comb
            .iter()
            .filter(|(c, _)| !self.field.is_zero(c))
            .map(|(c, w)| (self.rank_of[w], c.clone()))
            .collect();
        row.sort_by(|a, b| b.0.cmp(&a.0));
        let mut basis = RowBasis::default();
        for r in &self.ideal_rows {
            basis.rows.insert(r[0].0, r.clone());
        }
        basis.is_member(&self.field, row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn dual_numbers() {
        // K⟨x⟩/(x²) has basis {1, x}.
        let f = q();
        let rel = vec![vec![(f.one(), WordKey::Seq(vec![0, 0]))]];
        let quot = quotient(f, Alphabet::free(1), &rel, 16).unwrap();
        assert_eq!(quot.dim(), 2);
        assert_eq!(quot.frontier, 2);
        let x = quot.normal_form(&WordKey::Seq(vec![0]));
        assert!(!f.is_zero(&x[1]));
        // x·x = 0 in the quotient.
        let sq = quot.multiply_basis_words(1, 1);
        assert!(sq.iter().all(|c| f.is_zero(c)));
    }

    #[test]
    fn example_b_quotient_has_the_paper_basis() {
        // K[x,y]/(xy, yx, x³−y³): basis {1, x, y, x², y², x³}, y³ ≡ x³.
        let f = q();
        let x = 0usize;
        let y = 1usize;
        let rels = vec![
            vec![(f.one(), WordKey::Seq(vec![x, y]))],
            vec![(f.one(), WordKey::Seq(vec![y, x]))],
            vec![
                (f.one(), WordKey::Seq(vec![x, x, x])),
                (f.from_i64(-1), WordKey::Seq(vec![y, y, y])),
            ],
        ];
        let quot = quotient(f, Alphabet::free(2), &rels, 16).unwrap();
        assert_eq!(quot.dim(), 6);
        let labels: Vec<&WordKey> = quot.basis_words();
        assert_eq!(
            labels,
            vec![
                &WordKey::Trivial(0),
                &WordKey::Seq(vec![x]),
                &WordKey::Seq(vec![y]),
                &WordKey::Seq(vec![x, x]),
                &WordKey::Seq(vec![y, y]),
                &WordKey::Seq(vec![x, x, x]),
            ]
        );
        // y³ rewrites to x³ (x³ is the smaller word, so it survives).
        let y3 = quot.normal_form(&WordKey::Seq(vec![y, y, y]));
        let x3 = quot.normal_form(&WordKey::Seq(vec![x, x, x]));
        assert_eq!(y3, x3);
    }

    #[test]
    fn inhomogeneous_rewriting_pushes_long_words_down() {
        // K[x,y]/(xy, yx, x⁴−y²): dim 6, x⁴ ≡ y².
        let f = q();
        let (x, y) = (0usize, 1usize);
        let rels = vec![
            vec![(f.one(), WordKey::Seq(vec![x, y]))],
            vec![(f.one(), WordKey::Seq(vec![y, x]))],
            vec![
                (f.one(), WordKey::Seq(vec![x, x, x, x])),
                (f.from_i64(-1), WordKey::Seq(vec![y, y])),
            ],
        ];
        let quot = quotient(f, Alphabet::free(2), &rels, 20).unwrap();
        assert_eq!(quot.dim(), 6);
        let x4 = quot.normal_form(&WordKey::Seq(vec![x, x, x, x]));
        let y2 = quot.normal_form(&WordKey::Seq(vec![y, y]));
        assert_eq!(x4, y2);
        assert!(!quot.field.is_zero(&x4.iter().fold(f.zero(), |a, b| f.add(&a, b))));
    }

    #[test]
    fn cap_exceeded_reports_an_error() {
        // K⟨x⟩ with no relations never stabilizes.
        let f = q();
        let err = quotient(f, Alphabet::free(1), &[], 8).unwrap_err();
        assert!(matches!(err, RewriteError::CapExceeded(8)));
    }

    #[test]
    fn path_algebra_of_a2_quiver() {
        // Quiver 0 →α 1 with relation none: dim 3 (e₀, e₁, α).
        let f = q();
        let alphabet = Alphabet {
            vertices: 2,
            letters: vec![(0, 1)],
        };
        let quot = quotient(f, alphabet, &[], 8).unwrap();
        assert_eq!(quot.dim(), 3);
        assert_eq!(quot.frontier, 2);
    }
}
