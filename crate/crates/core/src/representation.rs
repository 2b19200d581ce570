//! Boolean element-by-set membership matrices and the
//! conditional-probability form of set similarity. Test-scale substrate:
//! it links set Jaccard, the probabilistic formulation, and the
//! signature algorithms; it is never on the corpus-scale path.

use std::collections::HashSet;
use std::hash::Hash;

use crate::error::{Error, Result};

/// n x m membership grid: cell (i, j) is true iff universe element i
/// belongs to set j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationMatrix {
    n: usize,
    m: usize,
    cells: Vec<bool>,
}

impl RepresentationMatrix {
    pub fn new(n: usize, m: usize) -> Self {
        RepresentationMatrix {
            n,
            m,
            cells: vec![false; n * m],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.m + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.cells[i * self.m + j] = value;
    }

    /// Row indices (0-based) of the members of column j.
    pub fn column_members(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.get(i, j))
    }

    pub(crate) fn check_column(&self, j: usize) -> Result<()> {
        if j >= self.m {
            return Err(Error::parameter(format!(
                "column {j} out of range for {} sets",
                self.m
            )));
        }
        Ok(())
    }
}

/// Build the membership matrix of `sets` over an ordered universe.
pub fn build_matrix<T: Eq + Hash>(
    universe: &[T],
    sets: &[HashSet<T>],
) -> Result<RepresentationMatrix> {
    let index: std::collections::HashMap<&T, usize> =
        universe.iter().enumerate().map(|(i, e)| (e, i)).collect();
    if index.len() != universe.len() {
        return Err(Error::parameter("universe elements must be distinct"));
    }
    let mut matrix = RepresentationMatrix::new(universe.len(), sets.len());
    for (j, set) in sets.iter().enumerate() {
        for element in set {
            let &i = index
                .get(element)
                .ok_or_else(|| Error::parameter(format!("set {j} has a member outside the universe")))?;
            matrix.set(i, j, true);
        }
    }
    Ok(matrix)
}

/// Similarity of columns h and k: rows where both are 1 over rows where
/// at least one is 1; rows zero in both columns never participate.
pub fn matrix_similarity(matrix: &RepresentationMatrix, h: usize, k: usize) -> Result<f64> {
    matrix.check_column(h)?;
    matrix.check_column(k)?;
    let mut both = 0usize;
    let mut either = 0usize;
    for i in 0..matrix.n() {
        match (matrix.get(i, h), matrix.get(i, k)) {
            (true, true) => {
                both += 1;
                either += 1;
            }
            (false, false) => {}
            _ => either += 1,
        }
    }
    if either == 0 {
        Ok(1.0)
    } else {
        Ok(both as f64 / either as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::similarity_exact::set_jaccard;
    use proptest::prelude::*;

    #[test]
    fn two_singleton_sets() {
        let m = build_matrix(&[1, 2], &[[1].into(), [2].into()]).unwrap();
        assert!(m.get(0, 0) && !m.get(0, 1));
        assert!(!m.get(1, 0) && m.get(1, 1));
        assert_eq!(matrix_similarity(&m, 0, 1).unwrap(), 0.0);
    }

    #[test]
    fn empty_set_gives_all_zero_column() {
        let m = build_matrix(&[1, 2, 3], &[HashSet::new()]).unwrap();
        assert_eq!(m.column_members(0).count(), 0);
    }

    #[test]
    fn both_all_zero_columns_are_identical() {
        let m = build_matrix(&[1, 2], &[HashSet::new(), HashSet::new()]).unwrap();
        assert_eq!(matrix_similarity(&m, 0, 1).unwrap(), 1.0);
    }

    #[test]
    fn member_outside_universe_is_rejected() {
        assert!(matches!(
            build_matrix(&[1, 2], &[[3].into()]),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn duplicate_universe_is_rejected() {
        let sets: [HashSet<i32>; 0] = [];
        assert!(matches!(
            build_matrix(&[1, 1], &sets),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn column_out_of_range_is_rejected() {
        let m = RepresentationMatrix::new(3, 2);
        assert!(matches!(
            matrix_similarity(&m, 0, 2),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn similarity_equals_set_jaccard_exhaustively_small() {
        // Every pair of subsets of a 5-element universe.
        let universe: Vec<u32> = (0..5).collect();
        for a_bits in 0u32..32 {
            for b_bits in 0u32..32 {
                let a: HashSet<u32> = (0..5).filter(|i| a_bits >> i & 1 == 1).collect();
                let b: HashSet<u32> = (0..5).filter(|i| b_bits >> i & 1 == 1).collect();
                let m = build_matrix(&universe, &[a.clone(), b.clone()]).unwrap();
                assert_eq!(matrix_similarity(&m, 0, 1).unwrap(), set_jaccard(&a, &b));
            }
        }
    }

    proptest! {
        #[test]
        fn column_support_round_trips(bits in proptest::collection::vec(any::<bool>(), 8)) {
            let universe: Vec<usize> = (0..8).collect();
            let set: HashSet<usize> =
                bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
            let m = build_matrix(&universe, std::slice::from_ref(&set)).unwrap();
            let support: HashSet<usize> = m.column_members(0).collect();
            prop_assert_eq!(support, set);
        }
    }
}
