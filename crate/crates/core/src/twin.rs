//! Twin games: reversal of the free type representation, cross-checked
//! against transposition of the incidence matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{build_game, FreeTypeRep, PGame};
use crate::incidence::{build_incidence_matrix, IncidenceMatrix};

/// A game, its twin, and both transposed forms of the game's incidence
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPair {
    pub game: PGame,
    pub twin: PGame,
    /// Plain transpose; non-top players and coalitions appear in reversed
    /// order relative to the twin's standard ordering.
    pub a_transposed: IncidenceMatrix,
    /// Transpose re-indexed into the standard ordering.
    pub a_tau: IncidenceMatrix,
}

pub fn twin_rep(rep: &FreeTypeRep) -> FreeTypeRep {
    rep.reversed()
}

/// Transposes `a` and reverses the order of every index except the last,
/// on both rows and columns.
pub fn modified_transpose(a: &IncidenceMatrix) -> IncidenceMatrix {
    let n = a.n();
    if n == 0 {
        return a.clone();
    }
    let reindex = |k: usize| if k == n - 1 { k } else { n - 2 - k };
    let rows = (0..n)
        .map(|i| (0..n).map(|j| a.get(reindex(j), reindex(i))).collect())
        .collect();
    IncidenceMatrix::from_rows(rows).expect("re-indexed binary square matrix")
}

/// Builds the twin by reversal and verifies that the re-indexed
/// transpose of the game's matrix is exactly the twin's matrix.
pub fn twin_game(g: &PGame) -> Result<TwinPair> {
    let twin = build_game(&twin_rep(g.free_rep()))?;
    let a = build_incidence_matrix(g);
    let a_tau = modified_transpose(&a);
    if a_tau != build_incidence_matrix(&twin) {
        return Err(Error::TwinMismatch);
    }
    Ok(TwinPair {
        game: g.clone(),
        twin,
        a_transposed: a.transpose(),
        a_tau,
    })
}

pub fn is_self_twin(g: &PGame) -> bool {
    g.free_rep().is_palindrome()
}

/// The three equivalent characterizations of a self-twin game, evaluated
/// independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfTwinConditions {
    pub palindrome: bool,
    pub same_representation: bool,
    pub same_incidence: bool,
}

impl SelfTwinConditions {
    pub fn agree(&self) -> bool {
        self.palindrome == self.same_representation && self.palindrome == self.same_incidence
    }
}

pub fn self_twin_conditions(g: &PGame) -> Result<SelfTwinConditions> {
    let twin = build_game(&twin_rep(g.free_rep()))?;
    let a = build_incidence_matrix(g);
    Ok(SelfTwinConditions {
        palindrome: g.free_rep().is_palindrome(),
        same_representation: twin.quota() == g.quota()
            && twin.player_weights() == g.player_weights(),
        same_incidence: modified_transpose(&a) == a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(counts: &[u64]) -> FreeTypeRep {
        FreeTypeRep::new(counts.to_vec()).unwrap()
    }

    #[test]
    fn reversal() {
        assert_eq!(twin_rep(&rep(&[3, 1, 2, 2])).counts(), &[2, 2, 1, 3]);
        assert_eq!(twin_rep(&rep(&[3, 1, 1, 3])).counts(), &[3, 1, 1, 3]);
        assert_eq!(twin_rep(&rep(&[3])).counts(), &[3]);
    }

    #[test]
    fn twin_of_first_example() {
        let g = build_game(&rep(&[3, 1, 2, 2])).unwrap();
        let pair = twin_game(&g).unwrap();
        assert_eq!(pair.twin.representation(), "26; 1, 1, 2, 2, 5, 7, 7, 7, 19");
        assert_eq!(pair.a_transposed, build_incidence_matrix(&g).transpose());
        assert!(!is_self_twin(&g));
    }

    #[test]
    fn palindromes_are_self_twins() {
        for counts in [&[3, 1, 1, 3][..], &[2, 2], &[3], &[5]] {
            let g = build_game(&rep(counts)).unwrap();
            let pair = twin_game(&g).unwrap();
            assert_eq!(pair.twin, g);
            assert!(is_self_twin(&g));
            let c = self_twin_conditions(&g).unwrap();
            assert!(c.agree() && c.palindrome);
        }
    }

    #[test]
    fn two_type_games_are_symmetric() {
        let g = build_game(&rep(&[4])).unwrap();
        let a = build_incidence_matrix(&g);
        assert_eq!(a, a.transpose());
        assert_eq!(a, modified_transpose(&a));
    }

    #[test]
    fn all_ones_is_fixed() {
        let ones = IncidenceMatrix::from_rows(vec![vec![1; 6]; 6]).unwrap();
        assert_eq!(modified_transpose(&ones), ones);
    }
}
