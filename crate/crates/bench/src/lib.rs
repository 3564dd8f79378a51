//! Fixtures shared by the criterion benches.

use parsigame::{build_game, FreeTypeRep, PGame};

/// Representative games: a two-type game, the zig-zag family at several
/// sizes, and one lopsided rep near the upper end of the sweep range.
pub fn sample_games() -> Vec<(String, PGame)> {
    let reps: [&[u64]; 5] = [
        &[8],
        &[3, 1, 2, 2],
        &[2, 1, 1, 1, 1, 2],
        &[2, 1, 1, 1, 1, 1, 1, 1, 1, 2],
        &[5, 3, 1, 4],
    ];
    reps.iter()
        .map(|counts| {
            let rep = FreeTypeRep::new(counts.to_vec()).expect("valid fixture");
            (rep.to_string(), build_game(&rep).expect("fixture builds"))
        })
        .collect()
}
