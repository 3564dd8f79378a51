//! Incidence matrix of a game over its minimal winning coalitions.
//!
//! Row `i` is the coalition associated with player `i`; column `j` is
//! player `j`. For a parsimonious game the matrix is square, its leading
//! `(n-1) x (n-1)` block is unit upper triangular by type blocks, and its
//! determinant is `q * (-1)^(h+1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::PGame;
use crate::linalg::bareiss_determinant;

/// Square 0/1 matrix whose rows are coalitions and columns are players.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u8>>", into = "Vec<Vec<u8>>")]
pub struct IncidenceMatrix {
    entries: Vec<Vec<u8>>,
    row_coalitions: Vec<Vec<usize>>,
}

impl IncidenceMatrix {
    /// Wraps a square 0/1 matrix.
    pub fn from_rows(entries: Vec<Vec<u8>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::BadInput(format!(
                "incidence matrix must be {n} x {n}"
            )));
        }
        if entries.iter().flatten().any(|&a| a > 1) {
            return Err(Error::BadInput("incidence entries must be 0 or 1".into()));
        }
        let row_coalitions = entries
            .iter()
            .map(|row| (0..n).filter(|&j| row[j] == 1).collect())
            .collect();
        Ok(IncidenceMatrix {
            entries,
            row_coalitions,
        })
    }

    /// Builds the matrix whose row `i` is the characteristic vector of
    /// `coalitions[i]`.
    pub fn from_coalitions(n: usize, coalitions: &[Vec<usize>]) -> Result<Self> {
        let mut rows = vec![vec![0u8; n]; coalitions.len()];
        for (row, members) in rows.iter_mut().zip(coalitions) {
            for &j in members {
                if j >= n {
                    return Err(Error::BadInput(format!("player {j} out of range")));
                }
                row[j] = 1;
            }
        }
        Self::from_rows(rows)
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
            .collect();
        Self::from_rows(rows).expect("identity is square and binary")
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.entries
    }

    /// Members of the coalition in row `i`, ascending.
    pub fn row_coalition(&self, i: usize) -> &[usize] {
        &self.row_coalitions[i]
    }

    pub fn row_coalitions(&self) -> &[Vec<usize>] {
        &self.row_coalitions
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let n = self.n();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
            .collect();
        Self::from_rows(rows).expect("transpose of a binary square matrix")
    }

    /// Returns a copy with entry `(i, j)` flipped.
    pub fn with_flipped(&self, i: usize, j: usize) -> IncidenceMatrix {
        let mut rows = self.entries.clone();
        rows[i][j] ^= 1;
        Self::from_rows(rows).expect("flip keeps the matrix binary")
    }

    pub fn to_integer_rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&a| i64::from(a)).collect())
            .collect()
    }
}

impl TryFrom<Vec<Vec<u8>>> for IncidenceMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u8>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<IncidenceMatrix> for Vec<Vec<u8>> {
    fn from(m: IncidenceMatrix) -> Self {
        m.entries
    }
}

/// Space-separated rows, one per line, each terminated by a newline.
impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<&str> = row
                .iter()
                .map(|&a| if a == 1 { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The minimal winning coalition associated with player `j` (0-based).
///
/// A non-top player is joined by every heavier player whose type has the
/// other parity. The top player is associated with the coalition of all
/// odd-type players.
pub fn coalition_of_player(g: &PGame, j: usize) -> Vec<usize> {
    let weights = g.player_weights();
    if j == g.top() {
        return (0..g.n()).filter(|&k| g.player_type(k) % 2 == 1).collect();
    }
    let parity = g.player_type(j) % 2;
    (0..g.n())
        .filter(|&k| k == j || (g.player_type(k) % 2 != parity && weights[k] > weights[j]))
        .collect()
}

pub fn build_incidence_matrix(g: &PGame) -> IncidenceMatrix {
    let coalitions: Vec<Vec<usize>> = (0..g.n()).map(|j| coalition_of_player(g, j)).collect();
    IncidenceMatrix::from_coalitions(g.n(), &coalitions).expect("coalitions index valid players")
}

/// Checks the type-block pattern of `m` against the types of `g`.
///
/// With `r` the row type and `c` the column type: diagonal blocks below
/// the top are identities, blocks below them are zero, blocks above them
/// are all ones exactly when `r + c` is odd, the top column follows the
/// same parity rule, and the top row is one exactly on odd column types.
pub fn verify_block_structure(m: &IncidenceMatrix, g: &PGame) -> bool {
    let n = g.n();
    if m.n() != n {
        return false;
    }
    let h = g.h();
    for i in 0..n {
        let r = g.player_type(i);
        for j in 0..n {
            let c = g.player_type(j);
            let expected = if r == h {
                c % 2 == 1
            } else if c == h {
                (r + c) % 2 == 1
            } else if r == c {
                i == j
            } else if c < r {
                false
            } else {
                (r + c) % 2 == 1
            };
            if m.get(i, j) != u8::from(expected) {
                return false;
            }
        }
    }
    true
}

/// Exact determinant by fraction-free elimination.
pub fn determinant(m: &IncidenceMatrix) -> Result<i64> {
    bareiss_determinant(&m.to_integer_rows())
}

/// `q * (-1)^(h+1)`, the determinant every parsimonious game's incidence
/// matrix must have.
pub fn expected_determinant(g: &PGame) -> i64 {
    if g.h() % 2 == 1 {
        g.quota()
    } else {
        -g.quota()
    }
}

/// Result of clearing the last row of the incidence matrix with a signed
/// weight combination of the other rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangularization {
    /// `z_i = (-1)^t * w_i` for the first `n - 1` rows, `t` the row's type.
    pub coefficients: Vec<i64>,
    /// Last row after adding `sum z_i * a_i`.
    pub last_row: Vec<i64>,
}

impl Triangularization {
    /// Determinant of the triangularized matrix: its leading block is unit
    /// upper triangular, so this is the last diagonal entry.
    pub fn determinant(&self) -> i64 {
        *self.last_row.last().expect("non-empty row")
    }
}

/// Triangularizes the incidence matrix of `g` by row combination and
/// checks the transformed last row is `(0, ..., 0, q * (-1)^(h+1))`.
pub fn triangularization_coefficients(g: &PGame) -> Result<Triangularization> {
    let a = build_incidence_matrix(g);
    let n = g.n();
    let overflow = || Error::Overflow("triangularization");
    let coefficients: Vec<i64> = (0..n - 1)
        .map(|i| {
            let w = g.player_weights()[i];
            if g.player_type(i) % 2 == 1 {
                -w
            } else {
                w
            }
        })
        .collect();

    let mut last_row: Vec<i64> = a.rows()[n - 1].iter().map(|&v| i64::from(v)).collect();
    for (i, &z) in coefficients.iter().enumerate() {
        for (j, cell) in last_row.iter_mut().enumerate() {
            if a.get(i, j) == 1 {
                *cell = cell.checked_add(z).ok_or_else(overflow)?;
            }
        }
    }

    if let Some(j) = last_row[..n - 1].iter().position(|&v| v != 0) {
        return Err(Error::TheoremViolation(format!(
            "transformed last row has {} in column {}",
            last_row[j],
            j + 1
        )));
    }
    let expected = expected_determinant(g);
    if last_row[n - 1] != expected {
        return Err(Error::TheoremViolation(format!(
            "transformed last entry is {}, expected {expected}",
            last_row[n - 1]
        )));
    }
    Ok(Triangularization {
        coefficients,
        last_row,
    })
}
