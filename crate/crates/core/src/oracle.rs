//! Definition-level brute force.
//!
//! Everything here works from a raw `(q; w)` representation by scanning
//! all `2^n` coalitions, so it can judge arbitrary inputs, including games
//! that are not parsimonious. Coalitions are bit masks over player indices.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{build_game, format_representation, FreeTypeRep, PGame, MIN_PLAYERS};
use crate::incidence::{
    build_incidence_matrix, determinant, expected_determinant, triangularization_coefficients,
    IncidenceMatrix,
};
use crate::lottery::{balanced_lottery, solve_balanced_system, verify_balanced};
use crate::twin::{twin_game, twin_rep};

/// Largest game the subset scan accepts.
pub const MAX_BRUTE_FORCE_N: usize = 24;
/// Default upper bound on `n` for enumeration sweeps.
pub const DEFAULT_SWEEP_MAX_N: usize = 14;
/// Hard ceiling on any configured sweep bound.
pub const MAX_SWEEP_N: usize = 30;
/// Largest matrix the cofactor expansion accepts.
pub const MAX_COFACTOR_N: usize = 8;
/// Largest game the definition-level minimality scan accepts.
pub const MAX_EXHAUSTIVE_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightedCoalition {
    pub mask: u32,
    pub weight: i64,
}

impl WeightedCoalition {
    pub fn members(&self) -> Vec<usize> {
        (0..32).filter(|&j| self.mask >> j & 1 == 1).collect()
    }
}

/// A family of coalitions over `n` players.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoalitionSet {
    pub n: usize,
    pub coalitions: Vec<WeightedCoalition>,
}

impl CoalitionSet {
    pub fn len(&self) -> usize {
        self.coalitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coalitions.is_empty()
    }

    pub fn masks(&self) -> BTreeSet<u32> {
        self.coalitions.iter().map(|c| c.mask).collect()
    }

    /// No member set contains another.
    pub fn is_antichain(&self) -> bool {
        self.coalitions.iter().all(|a| {
            self.coalitions
                .iter()
                .all(|b| a.mask == b.mask || a.mask & b.mask != a.mask)
        })
    }
}

pub fn mask_of(members: &[usize]) -> u32 {
    members.iter().fold(0u32, |m, &j| m | 1 << j)
}

/// Split lookup tables giving the weight and lightest member of any mask
/// in two lookups.
struct SubsetTables {
    low_bits: usize,
    low_sum: Vec<i64>,
    high_sum: Vec<i64>,
    low_min: Vec<i64>,
    high_min: Vec<i64>,
}

impl SubsetTables {
    fn new(weights: &[i64]) -> Self {
        let n = weights.len();
        let low_bits = n / 2;
        let build = |ws: &[i64]| {
            let size = 1usize << ws.len();
            let mut sum = vec![0i64; size];
            let mut min = vec![i64::MAX; size];
            for mask in 1..size {
                let j = mask.trailing_zeros() as usize;
                let rest = mask & (mask - 1);
                sum[mask] = sum[rest] + ws[j];
                min[mask] = min[rest].min(ws[j]);
            }
            (sum, min)
        };
        let (low_sum, low_min) = build(&weights[..low_bits]);
        let (high_sum, high_min) = build(&weights[low_bits..]);
        SubsetTables {
            low_bits,
            low_sum,
            high_sum,
            low_min,
            high_min,
        }
    }

    fn weight(&self, mask: u32) -> i64 {
        let low = mask as usize & ((1 << self.low_bits) - 1);
        let high = (mask as usize) >> self.low_bits;
        self.low_sum[low] + self.high_sum[high]
    }

    fn lightest(&self, mask: u32) -> i64 {
        let low = mask as usize & ((1 << self.low_bits) - 1);
        let high = (mask as usize) >> self.low_bits;
        self.low_min[low].min(self.high_min[high])
    }
}

/// Validates a raw representation and returns its total weight.
fn check_representation(weights: &[i64], max: usize, what: &'static str) -> Result<i64> {
    if weights.len() > max {
        return Err(Error::TooLarge {
            what,
            n: weights.len(),
            max,
        });
    }
    if weights.is_empty() {
        return Err(Error::BadInput("no weights".into()));
    }
    if weights.iter().any(|&w| w <= 0) {
        return Err(Error::BadInput("weights must be positive".into()));
    }
    weights
        .iter()
        .try_fold(0i64, |acc, &w| acc.checked_add(w))
        .ok_or(Error::Overflow("total weight"))
}

/// Every coalition `S` with `w(S) >= q` and `w(S) - min_{j in S} w_j < q`.
///
/// With positive weights, dropping the lightest member is the cheapest way
/// to shrink `S`, so this is exactly subset-minimality.
pub fn minimal_winning_coalitions_bruteforce(quota: i64, weights: &[i64]) -> Result<CoalitionSet> {
    check_representation(weights, MAX_BRUTE_FORCE_N, "subset scan")?;
    let n = weights.len();
    let tables = SubsetTables::new(weights);
    let coalitions = (1u32..1 << n)
        .filter_map(|mask| {
            let weight = tables.weight(mask);
            (weight >= quota && weight - tables.lightest(mask) < quota)
                .then_some(WeightedCoalition { mask, weight })
        })
        .collect();
    Ok(CoalitionSet { n, coalitions })
}

/// Minimal winning coalitions straight from the definition: `S` wins and
/// every proper subset of `S` loses.
pub fn minimal_winning_coalitions_exhaustive(quota: i64, weights: &[i64]) -> Result<CoalitionSet> {
    check_representation(weights, MAX_EXHAUSTIVE_N, "exhaustive minimality scan")?;
    let n = weights.len();
    let weight = |mask: u32| -> i64 {
        (0..n)
            .filter(|&j| mask >> j & 1 == 1)
            .map(|j| weights[j])
            .sum()
    };
    let mut coalitions = Vec::new();
    for mask in 1u32..1 << n {
        let w = weight(mask);
        if w < quota {
            continue;
        }
        let mut sub = (mask - 1) & mask;
        let mut minimal = true;
        loop {
            if weight(sub) >= quota {
                minimal = false;
                break;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        if minimal {
            coalitions.push(WeightedCoalition { mask, weight: w });
        }
    }
    Ok(CoalitionSet { n, coalitions })
}

/// Outcome of every check run on one game. `None` means the check was not
/// part of this run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ReportJson", try_from = "ReportJson")]
pub struct VerificationReport {
    pub game: String,
    pub parsimony: bool,
    pub homogeneity: bool,
    pub constant_sum: bool,
    pub incidence_match: Option<bool>,
    pub det_theorem: Option<bool>,
    pub quota_twin_equality: Option<bool>,
    pub lottery_balanced: Option<bool>,
    pub lottery_unique: Option<bool>,
}

impl VerificationReport {
    /// Named results of the checks that were run, in a fixed order.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let mut out = vec![
            ("parsimony", self.parsimony),
            ("homogeneity", self.homogeneity),
            ("constant_sum", self.constant_sum),
        ];
        let optional = [
            ("incidence_match", self.incidence_match),
            ("det_theorem", self.det_theorem),
            ("quota_twin_equality", self.quota_twin_equality),
            ("lottery_balanced", self.lottery_balanced),
            ("lottery_unique", self.lottery_unique),
        ];
        out.extend(optional.into_iter().filter_map(|(k, v)| v.map(|v| (k, v))));
        out
    }

    pub fn pass(&self) -> bool {
        self.checks().iter().all(|&(_, ok)| ok)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks()
            .into_iter()
            .filter_map(|(name, ok)| (!ok).then_some(name))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    game: String,
    parsimony: bool,
    homogeneity: bool,
    constant_sum: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    incidence_match: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    det_theorem: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    quota_twin_equality: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lottery_balanced: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lottery_unique: Option<bool>,
    pass: bool,
}

impl From<VerificationReport> for ReportJson {
    fn from(r: VerificationReport) -> Self {
        let pass = r.pass();
        ReportJson {
            game: r.game,
            parsimony: r.parsimony,
            homogeneity: r.homogeneity,
            constant_sum: r.constant_sum,
            incidence_match: r.incidence_match,
            det_theorem: r.det_theorem,
            quota_twin_equality: r.quota_twin_equality,
            lottery_balanced: r.lottery_balanced,
            lottery_unique: r.lottery_unique,
            pass,
        }
    }
}

impl TryFrom<ReportJson> for VerificationReport {
    type Error = String;

    fn try_from(j: ReportJson) -> Result<Self, String> {
        let report = VerificationReport {
            game: j.game,
            parsimony: j.parsimony,
            homogeneity: j.homogeneity,
            constant_sum: j.constant_sum,
            incidence_match: j.incidence_match,
            det_theorem: j.det_theorem,
            quota_twin_equality: j.quota_twin_equality,
            lottery_balanced: j.lottery_balanced,
            lottery_unique: j.lottery_unique,
        };
        if report.pass() != j.pass {
            return Err("\"pass\" disagrees with the individual checks".into());
        }
        Ok(report)
    }
}

/// Parsimony, homogeneity and constant-sum checks on a raw representation.
///
/// Parsimony means exactly `n` minimal winning coalitions and no dummy
/// player.
pub fn check_axioms(quota: i64, weights: &[i64]) -> Result<VerificationReport> {
    let total = check_representation(weights, MAX_BRUTE_FORCE_N, "subset scan")?;
    let wm = minimal_winning_coalitions_bruteforce(quota, weights)?;
    let n = weights.len();
    let tables = SubsetTables::new(weights);
    let constant_sum = (0u32..1 << n).all(|mask| {
        let w = tables.weight(mask);
        (w >= quota) != (total - w >= quota)
    });
    // n counts non-dummy players only, so every player must appear in some
    // minimal winning coalition.
    let covered = wm.coalitions.iter().fold(0u32, |acc, c| acc | c.mask);
    let no_dummies = covered == ((1u64 << n) - 1) as u32;
    Ok(VerificationReport {
        game: format_representation(quota, weights),
        parsimony: no_dummies && wm.len() == n,
        homogeneity: wm.coalitions.iter().all(|c| c.weight == quota),
        constant_sum,
        incidence_match: None,
        det_theorem: None,
        quota_twin_equality: None,
        lottery_balanced: None,
        lottery_unique: None,
    })
}

/// Runs every check on a built game against the brute-force oracle.
pub fn full_verify(g: &PGame) -> Result<VerificationReport> {
    if g.n() > MAX_BRUTE_FORCE_N {
        return Err(Error::TooLarge {
            what: "full verification",
            n: g.n(),
            max: MAX_BRUTE_FORCE_N,
        });
    }
    let mut report = check_axioms(g.quota(), g.player_weights())?;
    report.game = g.free_rep().to_string();

    let a = build_incidence_matrix(g);
    let wm = minimal_winning_coalitions_bruteforce(g.quota(), g.player_weights())?;
    let rule_built: BTreeSet<u32> = a.row_coalitions().iter().map(|s| mask_of(s)).collect();
    report.incidence_match = Some(rule_built.len() == g.n() && rule_built == wm.masks());

    let expected = expected_determinant(g);
    let bareiss_ok = determinant(&a).is_ok_and(|d| d == expected);
    let triangular_ok =
        triangularization_coefficients(g).is_ok_and(|t| t.determinant() == expected);
    let cofactor_ok =
        g.n() > MAX_COFACTOR_N || determinant_cofactor_oracle(&a).is_ok_and(|d| d == expected);
    report.det_theorem = Some(bareiss_ok && triangular_ok && cofactor_ok);

    report.quota_twin_equality = Some(twin_game(g).is_ok_and(|pair| {
        pair.twin.quota() == g.quota()
            && build_game(&twin_rep(pair.twin.free_rep())).is_ok_and(|back| back == *g)
    }));

    let closed = balanced_lottery(g).ok();
    let solved = solve_balanced_system(g).ok();
    report.lottery_balanced = Some(closed.as_ref().is_some_and(|l| verify_balanced(g, l)));
    report.lottery_unique = Some(closed.is_some() && closed == solved);
    Ok(report)
}

/// All free type representations of `n`-player games, for
/// `4 <= n <= DEFAULT_SWEEP_MAX_N`.
pub fn enumerate_p_games(n: usize) -> Result<Vec<FreeTypeRep>> {
    enumerate_p_games_bounded(n, DEFAULT_SWEEP_MAX_N)
}

/// All free type representations of `n`-player games, ordered by number
/// of types and then lexicographically.
pub fn enumerate_p_games_bounded(n: usize, max_n: usize) -> Result<Vec<FreeTypeRep>> {
    let min = MIN_PLAYERS as usize;
    let max = max_n.min(MAX_SWEEP_N);
    if n < min || n > max {
        return Err(Error::OutOfRange { n, min, max });
    }
    let total = (n - 1) as u64;
    let mut out = Vec::new();
    for parts in 1..=n - 3 {
        let mut prefix = Vec::with_capacity(parts);
        compositions(total, parts, &mut prefix, &mut out);
    }
    Ok(out)
}

fn compositions(remaining: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<FreeTypeRep>) {
    let slots_left = parts - prefix.len();
    if slots_left == 1 {
        if remaining >= 2 {
            prefix.push(remaining);
            out.push(FreeTypeRep::new(prefix.clone()).expect("bounds enforced during generation"));
            prefix.pop();
        }
        return;
    }
    let min_here = if prefix.is_empty() { 2 } else { 1 };
    // Later slots need 1 each, except the last which needs 2.
    let reserve = slots_left as u64;
    if remaining < reserve + min_here {
        return;
    }
    for x in min_here..=remaining - reserve {
        prefix.push(x);
        compositions(remaining - x, parts, prefix, out);
        prefix.pop();
    }
}

/// Laplace expansion along the first row.
pub fn determinant_cofactor_oracle(m: &IncidenceMatrix) -> Result<i64> {
    if m.n() > MAX_COFACTOR_N {
        return Err(Error::TooLarge {
            what: "cofactor expansion",
            n: m.n(),
            max: MAX_COFACTOR_N,
        });
    }
    Ok(laplace(&m.to_integer_rows()))
}

fn laplace(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    match n {
        0 => 1,
        1 => rows[0][0],
        _ => (0..n)
            .filter(|&c| rows[0][c] != 0)
            .map(|c| {
                let minor: Vec<Vec<i64>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * rows[0][c] * laplace(&minor)
            })
            .sum(),
    }
}
