//! JSON documents. Schemas are described in docs/json-schema.md.
//!
//! Documents are built as `serde_json::Value`, so object keys come out
//! sorted and re-rendering a parsed document reproduces it exactly.

use parsigame::{
    format_rational, is_self_twin, BalancedLottery, IncidenceMatrix, PGame, Rational,
    SimulationSummary, TwinPair, VerificationReport,
};
use serde_json::{json, Value};

pub fn render(doc: &Value) -> String {
    serde_json::to_string_pretty(doc).expect("Value always serializes")
}

/// Compact single-line form for streamed output.
pub fn render_line(doc: &Value) -> String {
    serde_json::to_string(doc).expect("Value always serializes")
}

fn rationals(values: &[Rational]) -> Value {
    values.iter().map(format_rational).collect()
}

fn matrix(m: &IncidenceMatrix) -> Value {
    serde_json::to_value(m).expect("matrix serializes")
}

fn game_fields(g: &PGame) -> Value {
    json!({
        "free_rep": g.free_rep().counts(),
        "representation": g.representation(),
        "n": g.n(),
        "h": g.h(),
        "quota": g.quota(),
        "total_weight": g.total_weight(),
        "type_weights": g.type_weights(),
        "player_weights": g.player_weights(),
        "player_types": g.player_types(),
    })
}

pub fn game(g: &PGame, a: &IncidenceMatrix) -> Value {
    let mut doc = game_fields(g);
    doc["incidence"] = matrix(a);
    doc["self_twin"] = is_self_twin(g).into();
    doc
}

pub fn twin(pair: &TwinPair) -> Value {
    json!({
        "game": game_fields(&pair.game),
        "twin": game_fields(&pair.twin),
        "a_transposed": matrix(&pair.a_transposed),
        "a_tau": matrix(&pair.a_tau),
        "self_twin": is_self_twin(&pair.game),
    })
}

pub fn lottery(g: &PGame, l: &BalancedLottery, payoffs: &[Rational]) -> Value {
    json!({
        "free_rep": g.free_rep().counts(),
        "representation": g.representation(),
        "lottery": serde_json::to_value(l).expect("lottery serializes"),
        "expected_payoffs": rationals(payoffs),
    })
}

pub fn report(r: &VerificationReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

pub fn summary(max_n: usize, checked: usize, failures: usize) -> Value {
    json!({
        "summary": {
            "max_n": max_n,
            "games_checked": checked,
            "failures": failures,
            "pass": failures == 0,
        }
    })
}

pub fn enumeration(n: usize, games: &[PGame]) -> Value {
    let rows: Vec<Value> = games
        .iter()
        .map(|g| {
            json!({
                "free_rep": g.free_rep().counts(),
                "representation": g.representation(),
                "quota": g.quota(),
                "self_twin": is_self_twin(g),
            })
        })
        .collect();
    json!({ "n": n, "count": rows.len(), "games": rows })
}

pub fn simulation(g: &PGame, s: &SimulationSummary) -> Value {
    json!({
        "free_rep": g.free_rep().counts(),
        "representation": g.representation(),
        "note": "Monte-Carlo estimate, demonstration only",
        "draws": s.draws,
        "seed": s.seed,
        "coalition_counts": s.coalition_counts,
        "membership_rate": s.membership_rate,
        "mean_payoff": s.mean_payoff,
    })
}
