//! Balanced lotteries over minimal winning coalitions.
//!
//! A lottery is balanced when every player has the same probability of
//! belonging to the drawn coalition. A parsimonious game has exactly one,
//! and its probabilities are the normalized weights of the twin game read
//! in reversed non-top order. [`solve_balanced_system`] reaches the same
//! vector by exact elimination without using the twin.

use num_integer::gcd;
use num_traits::{CheckedAdd, CheckedMul, One, Zero};
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{build_game, PGame};
use crate::incidence::{build_incidence_matrix, IncidenceMatrix};
use crate::linalg::{format_rational, parse_rational, rational_sum, solve_rational, Rational};
use crate::twin::twin_rep;

/// Probabilities `probs[i]` of drawing the coalition of row `i`, and the
/// common membership probability `pi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedLottery {
    pub probs: Vec<Rational>,
    pub pi: Rational,
}

#[derive(Serialize, Deserialize)]
struct LotteryRepr {
    probs: Vec<String>,
    pi: String,
}

impl Serialize for BalancedLottery {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LotteryRepr {
            probs: self.probs.iter().map(format_rational).collect(),
            pi: format_rational(&self.pi),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BalancedLottery {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = LotteryRepr::deserialize(deserializer)?;
        let parse = |s: &str| parse_rational(s).map_err(serde::de::Error::custom);
        Ok(BalancedLottery {
            probs: repr
                .probs
                .iter()
                .map(|s| parse(s))
                .collect::<Result<_, _>>()?,
            pi: parse(&repr.pi)?,
        })
    }
}

impl BalancedLottery {
    /// The uniform lottery, balanced only by accident.
    pub fn uniform(n: usize, pi: Rational) -> Self {
        BalancedLottery {
            probs: vec![Rational::new(1, n as i64); n],
            pi,
        }
    }
}

/// Closed form from the twin's weights: for a non-top row `j` the
/// probability is the twin weight of player `n - 2 - j`; the top row gets
/// the twin top weight. All normalized by the twin's total weight.
pub fn balanced_lottery(g: &PGame) -> Result<BalancedLottery> {
    let twin = build_game(&twin_rep(g.free_rep()))?;
    let n = g.n();
    let total = twin.total_weight();
    let tw = twin.player_weights();
    let probs = (0..n)
        .map(|j| {
            let w = if j == n - 1 { tw[n - 1] } else { tw[n - 2 - j] };
            Rational::new(w, total)
        })
        .collect();
    Ok(BalancedLottery {
        probs,
        pi: Rational::new(g.quota(), g.total_weight()),
    })
}

/// Membership probability of each player: column sums of `p^T A`.
pub fn membership_probabilities(a: &IncidenceMatrix, probs: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.n();
    if probs.len() != n {
        return None;
    }
    (0..n)
        .map(|j| rational_sum((0..n).filter(|&i| a.get(i, j) == 1).map(|i| &probs[i])))
        .collect()
}

/// Exact check of `p^T A = pi * 1^T` and `sum p = 1`.
pub fn verify_balanced(g: &PGame, l: &BalancedLottery) -> bool {
    let a = build_incidence_matrix(g);
    let Some(columns) = membership_probabilities(&a, &l.probs) else {
        return false;
    };
    rational_sum(&l.probs) == Some(Rational::one()) && columns.iter().all(|c| *c == l.pi)
}

/// Solves `A^T p = pi * 1`, `1^T p = 1` for `(p, pi)` by exact rational
/// elimination.
pub fn solve_balanced_system(g: &PGame) -> Result<BalancedLottery> {
    let a = build_incidence_matrix(g);
    let n = g.n();
    // Unknowns are p_0..p_{n-1} followed by pi.
    let mut system = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    for j in 0..n {
        let mut row: Vec<Rational> = (0..n)
            .map(|i| Rational::from_integer(i64::from(a.get(i, j))))
            .collect();
        row.push(-Rational::one());
        system.push(row);
        rhs.push(Rational::zero());
    }
    let mut norm = vec![Rational::one(); n];
    norm.push(Rational::zero());
    system.push(norm);
    rhs.push(Rational::one());

    let mut solution = solve_rational(&system, &rhs)?;
    let pi = solution.pop().ok_or(Error::SingularSystem)?;
    Ok(BalancedLottery {
        probs: solution,
        pi,
    })
}

/// `E(j) = (w_j / q) * pi` for every player.
pub fn expected_payoffs(g: &PGame, l: &BalancedLottery) -> Result<Vec<Rational>> {
    let q = g.quota();
    g.player_weights()
        .iter()
        .map(|&w| {
            Rational::new(w, q)
                .checked_mul(&l.pi)
                .ok_or(Error::Overflow("expected payoffs"))
        })
        .collect()
}

/// Empirical outcome of repeatedly drawing a coalition and splitting a
/// unit reward among its members in proportion to weight.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationSummary {
    pub draws: u64,
    pub seed: u64,
    /// How often each coalition was drawn.
    pub coalition_counts: Vec<u64>,
    /// Fraction of draws in which each player was a member.
    pub membership_rate: Vec<f64>,
    /// Average reward per draw for each player.
    pub mean_payoff: Vec<f64>,
}

/// Seeded Monte-Carlo run of the draw-then-split mechanism.
pub fn simulate(
    g: &PGame,
    l: &BalancedLottery,
    draws: u64,
    seed: u64,
) -> Result<SimulationSummary> {
    let a = build_incidence_matrix(g);
    let n = g.n();
    if l.probs.len() != n {
        return Err(Error::BadInput(format!(
            "lottery has {} probabilities for {n} coalitions",
            l.probs.len()
        )));
    }
    // Integer weights over a common denominator.
    let denom = l
        .probs
        .iter()
        .try_fold(1i64, |acc, p| {
            (acc / gcd(acc, *p.denom())).checked_mul(*p.denom())
        })
        .ok_or(Error::Overflow("lottery denominator"))?;
    let weights: Vec<u64> = l
        .probs
        .iter()
        .map(|p| {
            p.checked_mul(&Rational::from_integer(denom))
                .map(|v| v.to_integer().max(0) as u64)
                .ok_or(Error::Overflow("lottery weights"))
        })
        .collect::<Result<_>>()?;
    let dist = WeightedIndex::new(&weights)
        .map_err(|e| Error::BadInput(format!("lottery cannot be sampled: {e}")))?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coalition_counts = vec![0u64; n];
    for _ in 0..draws {
        coalition_counts[dist.sample(&mut rng)] += 1;
    }

    let weights = g.player_weights();
    let mut membership = vec![0u64; n];
    let mut payoff = vec![0f64; n];
    for (i, &count) in coalition_counts.iter().enumerate() {
        let members = a.row_coalition(i);
        let coalition_weight: i64 = members.iter().map(|&j| weights[j]).sum();
        for &j in members {
            membership[j] += count;
            payoff[j] += count as f64 * weights[j] as f64 / coalition_weight as f64;
        }
    }
    let scale = if draws == 0 { 0.0 } else { 1.0 / draws as f64 };
    Ok(SimulationSummary {
        draws,
        seed,
        coalition_counts,
        membership_rate: membership.iter().map(|&m| m as f64 * scale).collect(),
        mean_payoff: payoff.iter().map(|&p| p * scale).collect(),
    })
}

/// `sum_j E(j)`, which is 1 under the balanced lottery.
pub fn total_expected_payoff(payoffs: &[Rational]) -> Option<Rational> {
    payoffs
        .iter()
        .try_fold(Rational::zero(), |acc, p| acc.checked_add(p))
}

/// Normalized weight vector `w / w(N)`.
pub fn normalized_weights(g: &PGame) -> Vec<Rational> {
    g.player_weights()
        .iter()
        .map(|&w| Rational::new(w, g.total_weight()))
        .collect()
}

/// Decimal approximation for display only.
pub fn approximate(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
