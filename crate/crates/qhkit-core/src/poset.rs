//! Finite posets on {1, …, n} given by covering relations.

use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PosetError {
    #[error("poset element {0} is out of range 1..={1}")]
    OutOfRange(usize, usize),
    #[error("cover relation ({0}, {0}) is reflexive")]
    Reflexive(usize),
    #[error("the covering relations contain a cycle")]
    Cycle,
}

/// A finite poset on {1, …, n}; `covers` holds the canonical covering
/// pairs (i, j) with i ◁ j after transitive reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
    /// leq[(i−1)·n + (j−1)] ⟺ i ⩽ j.
    leq: Vec<bool>,
}

impl Poset {
    /// Build from covering pairs (i, j) meaning i ◁ j; pairs implied by
    /// transitivity are dropped from the canonical cover list.
    pub fn new(n: usize, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        for &(i, j) in covers {
            for &k in &[i, j] {
                if k == 0 || k > n {
                    return Err(PosetError::OutOfRange(k, n));
                }
            }
            if i == j {
                return Err(PosetError::Reflexive(i));
            }
        }
        // Transitive closure (Floyd–Warshall on the strict order).
        let idx = |i: usize, j: usize| (i - 1) * n + (j - 1);
        let mut lt = vec![false; n * n];
        for &(i, j) in covers {
            lt[idx(i, j)] = true;
        }
        for k in 1..=n {
            for i in 1..=n {
                if !lt[idx(i, k)] {
                    continue;
                }
                for j in 1..=n {
                    if lt[idx(k, j)] {
                        lt[idx(i, j)] = true;
                    }
                }
            }
        }
        for i in 1..=n {
            if lt[idx(i, i)] {
                return Err(PosetError::Cycle);
            }
        }
        let mut leq = lt.clone();
        for i in 1..=n {
            leq[idx(i, i)] = true;
        }
        // Transitive reduction: i ◁ j iff i < j with nothing strictly between.
        let mut reduced = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if lt[idx(i, j)]
                    && !(1..=n).any(|k| lt[idx(i, k)] && lt[idx(k, j)])
                {
                    reduced.push((i, j));
                }
            }
        }
        reduced.sort();
        Ok(Poset {
            n,
            covers: reduced,
            leq,
        })
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[(i - 1) * self.n + (j - 1)]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// The up-set {j : j ⩾ i}, ascending by label.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.leq(i, j)).collect()
    }

    /// The down-set {j : j ⩽ i}, ascending by label.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.leq(j, i)).collect()
    }

    pub fn covers_of(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(a, _)| a == i)
            .map(|&(_, b)| b)
            .collect()
    }

    pub fn covered_by(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, b)| b == i)
            .map(|&(a, _)| a)
            .collect()
    }

    /// Neighbors in the Hasse diagram (covers in either direction).
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out: BTreeSet<usize> = self.covers_of(i).into_iter().collect();
        out.extend(self.covered_by(i));
        out.into_iter().collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| (1..=self.n).all(|j| !self.lt(j, i)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| (1..=self.n).all(|j| !self.lt(i, j)))
            .collect()
    }

    pub fn minimum(&self) -> Option<usize> {
        match self.minimal_elements()[..] {
            [m] if (1..=self.n).all(|j| self.leq(m, j)) => Some(m),
            _ => None,
        }
    }

    pub fn maximum(&self) -> Option<usize> {
        match self.maximal_elements()[..] {
            [m] if (1..=self.n).all(|j| self.leq(j, m)) => Some(m),
            _ => None,
        }
    }

    /// The opposite poset (order reversed), same labels.
    pub fn opposite(&self) -> Poset {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&(i, j)| (j, i)).collect();
        Poset::new(self.n, &covers).expect("reversing a poset preserves acyclicity")
    }

    /// The lex-first linear extension of a subset: repeatedly take the
    /// smallest label that is minimal among the remainder.
    pub fn linear_extension_lex(&self, subset: &[usize]) -> Vec<usize> {
        let mut rest: BTreeSet<usize> = subset.iter().copied().collect();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let pick = rest
                .iter()
                .copied()
                .find(|&i| rest.iter().all(|&j| !self.lt(j, i)))
                .expect("a finite nonempty poset has a minimal element");
            rest.remove(&pick);
            out.push(pick);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamondish() -> Poset {
        // 1 < {2,3} < {4,5} < 6 with 2◁4, 3◁5 only in the middle.
        Poset::new(6, &[(1, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 6)]).unwrap()
    }

    #[test]
    fn order_and_extremes() {
        let p = diamondish();
        assert!(p.leq(1, 6) && p.leq(2, 4) && !p.leq(2, 5) && !p.leq(4, 3));
        assert_eq!(p.minimum(), Some(1));
        assert_eq!(p.maximum(), Some(6));
        assert_eq!(p.up_set(2), vec![2, 4, 6]);
        assert_eq!(p.down_set(5), vec![1, 3, 5]);
        assert_eq!(p.neighbors(4), vec![2, 6]);
    }

    #[test]
    fn opposite_reverses() {
        let p = diamondish();
        let q = p.opposite();
        assert!(q.leq(6, 1));
        assert_eq!(q.minimum(), Some(6));
        assert_eq!(q.maximum(), Some(1));
    }

    #[test]
    fn transitive_reduction_drops_implied_pairs() {
        let p = Poset::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(p.covers, vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn cycle_is_rejected() {
        assert!(matches!(
            Poset::new(2, &[(1, 2), (2, 1)]),
            Err(PosetError::Cycle)
        ));
        assert!(matches!(
            Poset::new(2, &[(1, 3)]),
            Err(PosetError::OutOfRange(3, 2))
        ));
    }

    #[test]
    fn no_minimum_when_two_minimal_elements() {
        let p = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(p.minimum(), None);
        assert_eq!(p.maximum(), Some(3));
        assert_eq!(p.minimal_elements(), vec![1, 2]);
    }

    #[test]
    fn lex_first_linear_extension() {
        let p = diamondish();
        assert_eq!(
            p.linear_extension_lex(&[1, 2, 3, 4, 5, 6]),
            vec![1, 2, 3, 4, 5, 6]
        );
        assert_eq!(p.linear_extension_lex(&[5, 3, 6]), vec![3, 5, 6]);
    }
}
