//! Exit-gate suite. Every check is exact; each criterion prints one line.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use parsigame::oracle::{mask_of, MAX_COFACTOR_N};
use parsigame::{
    balanced_lottery, build_incidence_matrix, check_axioms, determinant,
    determinant_cofactor_oracle, expected_determinant, expected_payoffs,
    minimal_winning_coalitions_bruteforce, modified_transpose, solve_balanced_system,
    triangularization_coefficients, twin_game, validate_free_type_rep, verify_balanced,
    BalancedLottery, Error, PGame, Rational,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep(hi: usize) -> Vec<PGame> {
    all_games(4, hi)
}

fn golden_first_example() -> Outcome {
    let g = game(&[3, 1, 2, 2]);
    ensure(
        g.representation() == "26; 1, 1, 1, 3, 4, 4, 11, 11, 15",
        || format!("representation {}", g.representation()),
    )?;
    let a = build_incidence_matrix(&g);
    ensure(a == parse_matrix(EX1_A), || "matrix A differs".into())?;
    let pair = twin_game(&g).map_err(|e| e.to_string())?;
    ensure(
        pair.twin.representation() == "26; 1, 1, 2, 2, 5, 7, 7, 7, 19",
        || format!("twin {}", pair.twin.representation()),
    )?;
    ensure(pair.a_tau == parse_matrix(EX1_A_TAU), || {
        "A^tau differs".into()
    })?;
    let l = balanced_lottery(&g).map_err(|e| e.to_string())?;
    ensure(l.probs == over(51, &[7, 7, 7, 5, 2, 2, 1, 1, 19]), || {
        format!("lottery {:?}", l.probs)
    })?;
    let lt = balanced_lottery(&pair.twin).map_err(|e| e.to_string())?;
    ensure(
        lt.probs == over(51, &[11, 11, 4, 4, 3, 1, 1, 1, 15]),
        || format!("twin lottery {:?}", lt.probs),
    )?;
    Ok("representation, A, twin, A^tau and both lotteries exact".into())
}

fn golden_second_example() -> Outcome {
    let g = game(&[3, 1, 1, 3]);
    ensure(
        g.representation() == "25; 1, 1, 1, 3, 4, 7, 7, 7, 18",
        || format!("representation {}", g.representation()),
    )?;
    let a = build_incidence_matrix(&g);
    ensure(a == parse_matrix(EX2_A), || "matrix A differs".into())?;
    ensure(modified_transpose(&a) == a, || "A^tau != A".into())?;
    let pair = twin_game(&g).map_err(|e| e.to_string())?;
    ensure(pair.twin == g, || "twin differs from the game".into())?;
    let l = balanced_lottery(&g).map_err(|e| e.to_string())?;
    ensure(l.probs == over(49, &[7, 7, 7, 4, 3, 1, 1, 1, 18]), || {
        format!("lottery {:?}", l.probs)
    })?;
    Ok(
        "self-twin, lottery numerators (7,7,7,4,3,1,1,1,18)/49 (a /25 denominator would not sum to 1)"
            .into(),
    )
}

fn determinant_theorem() -> Outcome {
    let games = sweep(14);
    let mut cofactor_checked = 0;
    for g in &games {
        let expected = expected_determinant(g);
        let a = build_incidence_matrix(g);
        let bareiss = determinant(&a).map_err(|e| e.to_string())?;
        let triangular = triangularization_coefficients(g)
            .map_err(|e| format!("{}: {e}", g.free_rep()))?
            .determinant();
        ensure(bareiss == expected && triangular == expected, || {
            format!(
                "{}: bareiss {bareiss}, triangular {triangular}, expected {expected}",
                g.free_rep()
            )
        })?;
        if g.n() <= MAX_COFACTOR_N {
            let cofactor = determinant_cofactor_oracle(&a).map_err(|e| e.to_string())?;
            ensure(cofactor == expected, || {
                format!("{}: cofactor {cofactor}, expected {expected}", g.free_rep())
            })?;
            cofactor_checked += 1;
        }
    }
    Ok(format!(
        "{} games, n = 4..=14 ({cofactor_checked} also by cofactor expansion)",
        games.len()
    ))
}

fn twin_quota_theorem() -> Outcome {
    let games = sweep(14);
    for g in &games {
        let pair = twin_game(g).map_err(|e| format!("{}: {e}", g.free_rep()))?;
        ensure(pair.twin.quota() == g.quota(), || {
            format!(
                "{}: q = {}, twin q = {}",
                g.free_rep(),
                g.quota(),
                pair.twin.quota()
            )
        })?;
        let back = twin_game(&pair.twin).map_err(|e| e.to_string())?.twin;
        ensure(back == *g, || {
            format!("{}: twin of twin differs", g.free_rep())
        })?;
    }
    Ok(format!("{} games, n = 4..=14", games.len()))
}

fn oracle_equivalence() -> Outcome {
    let games = sweep(12);
    for g in &games {
        let wm = minimal_winning_coalitions_bruteforce(g.quota(), g.player_weights())
            .map_err(|e| e.to_string())?;
        let a = build_incidence_matrix(g);
        let rule: BTreeSet<u32> = a.row_coalitions().iter().map(|s| mask_of(s)).collect();
        ensure(rule == wm.masks(), || {
            format!("{}: coalition families differ", g.free_rep())
        })?;
        ensure(wm.len() == g.n(), || {
            format!("{}: |WM| = {}", g.free_rep(), wm.len())
        })?;
        ensure(wm.coalitions.iter().all(|c| c.weight == g.quota()), || {
            format!("{}: not homogeneous", g.free_rep())
        })?;
        let axioms = check_axioms(g.quota(), g.player_weights()).map_err(|e| e.to_string())?;
        ensure(axioms.constant_sum && axioms.parsimony, || {
            format!("{}: {:?}", g.free_rep(), axioms.failures())
        })?;
    }
    Ok(format!("{} games, n = 4..=12, full 2^n scans", games.len()))
}

fn balanced_lottery_theorem() -> Outcome {
    let games = sweep(12);
    for g in &games {
        let closed = balanced_lottery(g).map_err(|e| e.to_string())?;
        let solved = solve_balanced_system(g).map_err(|e| e.to_string())?;
        ensure(closed == solved, || {
            format!("{}: closed form != linear solve", g.free_rep())
        })?;
        ensure(verify_balanced(g, &closed), || {
            format!("{}: not balanced", g.free_rep())
        })?;
        ensure(
            closed.pi == Rational::new(g.quota(), 2 * g.quota() - 1),
            || format!("{}: pi = {}", g.free_rep(), closed.pi),
        )?;
        let payoffs = expected_payoffs(g, &closed).map_err(|e| e.to_string())?;
        let normalized: Vec<Rational> = g
            .player_weights()
            .iter()
            .map(|&w| Rational::new(w, g.total_weight()))
            .collect();
        ensure(payoffs == normalized, || {
            format!("{}: payoffs != w / w(N)", g.free_rep())
        })?;
    }
    Ok(format!("{} games, n = 4..=12", games.len()))
}

fn negative_controls() -> Outcome {
    let g = game(&[3, 1, 2, 2]);
    let mut perturbations = 0;
    for j in 0..g.n() {
        for delta in [-1i64, 1] {
            let mut w = g.player_weights().to_vec();
            w[j] += delta;
            if w[j] <= 0 {
                continue;
            }
            let r = check_axioms(g.quota(), &w).map_err(|e| e.to_string())?;
            ensure(!r.pass(), || format!("weight {j} {delta:+} still passes"))?;
            perturbations += 1;
        }
    }
    let uniform = BalancedLottery::uniform(9, Rational::new(26, 51));
    ensure(!verify_balanced(&g, &uniform), || {
        "uniform lottery accepted".into()
    })?;
    for bad in [&[1u64, 2][..], &[2, 1]] {
        let rejected = matches!(
            validate_free_type_rep(bad),
            Err(Error::BoundViolation { .. })
        );
        ensure(rejected, || format!("{bad:?} accepted"))?;
    }
    Ok(format!(
        "{perturbations} single-weight perturbations fail, uniform lottery rejected, (1,2) and (2,1) rejected"
    ))
}

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "golden example 1",
            limit: Duration::from_secs(1),
            run: golden_first_example,
        },
        Criterion {
            id: 2,
            name: "golden example 2",
            limit: Duration::from_secs(1),
            run: golden_second_example,
        },
        Criterion {
            id: 3,
            name: "determinant theorem",
            limit: Duration::from_secs(60),
            run: determinant_theorem,
        },
        Criterion {
            id: 4,
            name: "twin quota theorem",
            limit: Duration::from_secs(10),
            run: twin_quota_theorem,
        },
        Criterion {
            id: 5,
            name: "oracle equivalence",
            limit: Duration::from_secs(60),
            run: oracle_equivalence,
        },
        Criterion {
            id: 6,
            name: "balanced lottery theorem",
            limit: Duration::from_secs(10),
            run: balanced_lottery_theorem,
        },
        Criterion {
            id: 7,
            name: "negative controls",
            limit: Duration::from_secs(1),
            run: negative_controls,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.limit => {
                Err(format!("{detail}; took {elapsed:.2?}, limit {:?}", c.limit))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {} {}: PASS ({elapsed:.2?}) {detail}",
                c.id, c.name
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {} {}: FAIL ({elapsed:.2?}) {why}", c.id, c.name);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
