#![allow(dead_code)]

use parsigame::{build_game, FreeTypeRep, IncidenceMatrix, PGame, Rational};

pub const EX1_A: &str = include_str!("../data/ex1_a.txt");
pub const EX1_A_TRANSPOSED: &str = include_str!("../data/ex1_a_transposed.txt");
pub const EX1_A_TAU: &str = include_str!("../data/ex1_a_tau.txt");
pub const EX2_A: &str = include_str!("../data/ex2_a.txt");
pub const EX2_A_TRANSPOSED: &str = include_str!("../data/ex2_a_transposed.txt");
pub const EX2_A_TAU: &str = include_str!("../data/ex2_a_tau.txt");

pub fn game(counts: &[u64]) -> PGame {
    build_game(&FreeTypeRep::new(counts.to_vec()).unwrap()).unwrap()
}

pub fn parse_matrix(text: &str) -> IncidenceMatrix {
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|c| c.parse::<u8>().unwrap())
                .collect()
        })
        .collect();
    IncidenceMatrix::from_rows(rows).unwrap()
}

pub fn over(den: i64, nums: &[i64]) -> Vec<Rational> {
    nums.iter().map(|&k| Rational::new(k, den)).collect()
}

/// Every game with `lo <= n <= hi`.
pub fn all_games(lo: usize, hi: usize) -> Vec<PGame> {
    (lo..=hi)
        .flat_map(|n| parsigame::enumerate_p_games_bounded(n, hi).unwrap())
        .map(|r| build_game(&r).unwrap())
        .collect()
}
