//! Free type representations and the minimal homogeneous representation
//! they generate.
//!
//! Player indices are 0-based throughout the library. Type indices are
//! 1-based (`1..=h`) because the parity of the type index drives the
//! coalition rule; type 1 holds the lightest players and type `h` the
//! single top player.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest number of players for which the construction applies.
pub const MIN_PLAYERS: u64 = 4;

/// The counts `(x_1, ..., x_{h-1})` of players per non-top type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FreeTypeRep(Vec<u64>);

impl FreeTypeRep {
    /// Checks the bounds on a raw count vector. Nothing is normalized.
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        let last = match counts.len() {
            0 => return Err(Error::EmptyRep),
            len => len,
        };
        if counts[0] < 2 {
            return Err(Error::BoundViolation { index: 1, min: 2 });
        }
        if counts[last - 1] < 2 {
            return Err(Error::BoundViolation {
                index: last,
                min: 2,
            });
        }
        if let Some(pos) = counts.iter().position(|&x| x < 1) {
            return Err(Error::BoundViolation {
                index: pos + 1,
                min: 1,
            });
        }
        let n = counts
            .iter()
            .try_fold(1u64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow("player count"))?;
        if n < MIN_PLAYERS {
            return Err(Error::TooSmall { n });
        }
        Ok(FreeTypeRep(counts))
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// Number of types, top included.
    pub fn types(&self) -> usize {
        self.0.len() + 1
    }

    pub fn players(&self) -> usize {
        1 + self.0.iter().map(|&x| x as usize).sum::<usize>()
    }

    /// Count of type `t` (1-based); the top type always has count 1.
    pub fn count(&self, t: usize) -> u64 {
        if t == self.types() {
            1
        } else {
            self.0[t - 1]
        }
    }

    pub fn reversed(&self) -> FreeTypeRep {
        FreeTypeRep(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

/// Free-function form of [`FreeTypeRep::new`].
pub fn validate_free_type_rep(counts: &[u64]) -> Result<FreeTypeRep> {
    FreeTypeRep::new(counts.to_vec())
}

impl TryFrom<Vec<u64>> for FreeTypeRep {
    type Error = Error;

    fn try_from(counts: Vec<u64>) -> Result<Self> {
        FreeTypeRep::new(counts)
    }
}

impl From<FreeTypeRep> for Vec<u64> {
    fn from(rep: FreeTypeRep) -> Self {
        rep.0
    }
}

impl fmt::Display for FreeTypeRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for FreeTypeRep {
    type Err = Error;

    /// Parses `"3,1,2,2"`; surrounding parentheses and blanks are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Err(Error::EmptyRep);
        }
        let counts = body
            .split(',')
            .map(|part| {
                part.trim().parse::<u64>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("{:?} is not a non-negative integer ({e})", part.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        FreeTypeRep::new(counts)
    }
}

/// A parsimonious game in its minimal homogeneous representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PGame {
    free_rep: FreeTypeRep,
    n: usize,
    h: usize,
    /// `type_weights[t - 1]` is the weight of type `t`.
    type_weights: Vec<i64>,
    player_weights: Vec<i64>,
    quota: i64,
    total_weight: i64,
    /// `player_type[j]` is the 1-based type of player `j`.
    player_type: Vec<usize>,
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("type weights"))
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("type weights"))
}

fn count_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow("type count"))
}

/// Builds the game generated by a free type representation.
pub fn build_game(rep: &FreeTypeRep) -> Result<PGame> {
    let h = rep.types();
    let x = |t: usize| count_i64(rep.count(t));

    // weights[t] for t = 0..=h, with weights[0] = 0 so the top-type rule
    // also covers h = 2.
    let mut weights = vec![0i64; h + 1];
    weights[1] = 1;
    for t in 2..=h {
        weights[t] = if t == h {
            add(mul(x(h - 1)? - 1, weights[h - 1])?, weights[h - 2])?
        } else if t == 2 {
            x(1)?
        } else {
            add(mul(x(t - 1)?, weights[t - 1])?, weights[t - 2])?
        };
    }
    let type_weights = weights[1..].to_vec();

    let mut odd_sum = 0i64;
    for t in (1..=h).step_by(2) {
        odd_sum = add(odd_sum, mul(x(t)?, weights[t])?)?;
    }
    let quota = odd_sum;
    let total_weight = mul(2, odd_sum)? - 1;

    let n = rep.players();
    let mut player_weights = Vec::with_capacity(n);
    let mut player_type = Vec::with_capacity(n);
    for (t, &w) in weights.iter().enumerate().skip(1) {
        for _ in 0..rep.count(t) {
            player_weights.push(w);
            player_type.push(t);
        }
    }

    Ok(PGame {
        free_rep: rep.clone(),
        n,
        h,
        type_weights,
        player_weights,
        quota,
        total_weight,
        player_type,
    })
}

impl PGame {
    pub fn free_rep(&self) -> &FreeTypeRep {
        &self.free_rep
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn type_weights(&self) -> &[i64] {
        &self.type_weights
    }

    /// Weight of type `t` (1-based).
    pub fn type_weight(&self, t: usize) -> i64 {
        self.type_weights[t - 1]
    }

    pub fn player_weights(&self) -> &[i64] {
        &self.player_weights
    }

    pub fn quota(&self) -> i64 {
        self.quota
    }

    pub fn total_weight(&self) -> i64 {
        self.total_weight
    }

    /// 1-based type of the 0-based player `j`.
    pub fn player_type(&self, j: usize) -> usize {
        self.player_type[j]
    }

    pub fn player_types(&self) -> &[usize] {
        &self.player_type
    }

    pub fn top(&self) -> usize {
        self.n - 1
    }

    /// Sum over types of parity `parity` of `x_t * w_t`, top included.
    fn parity_mass(&self, odd: bool) -> Option<i64> {
        (1..=self.h)
            .filter(|t| (t % 2 == 1) == odd)
            .try_fold(0i64, |acc, t| {
                let x = i64::try_from(self.free_rep.count(t)).ok()?;
                acc.checked_add(x.checked_mul(self.type_weight(t))?)
            })
    }

    /// The two closed forms of the quota: `1 + even mass` and `odd mass`.
    pub fn quota_expressions(&self) -> Option<(i64, i64)> {
        let even = self.parity_mass(false)?.checked_add(1)?;
        let odd = self.parity_mass(true)?;
        Some((even, odd))
    }

    /// Renders `"q; w_1, ..., w_n"`.
    pub fn representation(&self) -> String {
        format_representation(self.quota, &self.player_weights)
    }
}

impl fmt::Display for PGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.representation())
    }
}

pub fn format_representation(quota: i64, weights: &[i64]) -> String {
    let ws: Vec<String> = weights.iter().map(i64::to_string).collect();
    format!("{quota}; {}", ws.join(", "))
}

/// Checks the recursive weight identities, both quota expressions and the
/// total-weight identity.
pub fn check_weight_identities(g: &PGame) -> bool {
    let rep = &g.free_rep;
    for t in 1..g.h {
        let mut sum = if t % 2 == 1 { 1i64 } else { 0 };
        for s in (1..t).filter(|s| s % 2 != t % 2) {
            let term = i64::try_from(rep.count(s))
                .ok()
                .and_then(|x| x.checked_mul(g.type_weight(s)));
            match term.and_then(|v| sum.checked_add(v)) {
                Some(v) => sum = v,
                None => return false,
            }
        }
        if sum != g.type_weight(t) {
            return false;
        }
    }
    let Some((q_even, q_odd)) = g.quota_expressions() else {
        return false;
    };
    if q_even != g.quota || q_odd != g.quota {
        return false;
    }
    let direct: Option<i64> = g
        .player_weights
        .iter()
        .try_fold(0i64, |acc, &w| acc.checked_add(w));
    let (Some(even), Some(odd)) = (g.parity_mass(false), g.parity_mass(true)) else {
        return false;
    };
    let from_even = even.checked_mul(2).and_then(|v| v.checked_add(1));
    let from_odd = odd.checked_mul(2).and_then(|v| v.checked_sub(1));
    direct == Some(g.total_weight)
        && from_even == Some(g.total_weight)
        && from_odd == Some(g.total_weight)
}

/// Recovers a game from `(q; w)`, rejecting anything that is not exactly
/// the minimal homogeneous representation of a parsimonious game.
pub fn parse_min_homog_rep(quota: i64, weights: &[i64]) -> Result<PGame> {
    if weights.is_empty() {
        return Err(Error::BadInput("no weights".into()));
    }
    if weights[0] != 1 {
        return Err(Error::BadInput(format!(
            "the lightest weight must be 1, got {}",
            weights[0]
        )));
    }
    if weights.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::BadInput("weights must be non-decreasing".into()));
    }

    let mut runs: Vec<u64> = Vec::new();
    let mut prev = None;
    for &w in weights {
        if prev == Some(w) {
            *runs.last_mut().expect("run started") += 1;
        } else {
            runs.push(1);
            prev = Some(w);
        }
    }
    if runs.last() != Some(&1) {
        return Err(Error::NotParsimonious(
            "the heaviest weight must belong to a single top player".into(),
        ));
    }
    runs.pop();
    let rep = FreeTypeRep::new(runs).map_err(|e| Error::NotParsimonious(e.to_string()))?;
    let game = build_game(&rep)?;
    if game.quota != quota || game.player_weights != weights {
        return Err(Error::NotParsimonious(format!(
            "type counts {rep} generate {game}, not {}",
            format_representation(quota, weights)
        )));
    }
    Ok(game)
}

/// Parses `"q; w_1, ..., w_n"` into its quota and weights without any
/// game-theoretic validation.
pub fn parse_representation(s: &str) -> Result<(i64, Vec<i64>)> {
    let err = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let (q, ws) = s
        .split_once(';')
        .ok_or_else(|| err("expected \"q; w_1, ..., w_n\""))?;
    let quota = q
        .trim()
        .parse::<i64>()
        .map_err(|_| err("quota is not an integer"))?;
    let weights = ws
        .split(',')
        .map(|w| {
            w.trim()
                .parse::<i64>()
                .map_err(|_| err("weight is not an integer"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((quota, weights))
}
