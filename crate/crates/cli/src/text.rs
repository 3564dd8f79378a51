//! Human-readable output. Player and coalition numbers are 1-based.

use std::fmt::Write;

use parsigame::lottery::approximate;
use parsigame::{
    format_rational, is_self_twin, BalancedLottery, IncidenceMatrix, PGame, Rational,
    SimulationSummary, TwinPair, VerificationReport,
};

fn players_span(g: &PGame, t: usize) -> String {
    let members: Vec<usize> = (0..g.n()).filter(|&j| g.player_type(j) == t).collect();
    let first = members[0] + 1;
    let last = members[members.len() - 1] + 1;
    if first == last {
        first.to_string()
    } else {
        format!("{first}-{last}")
    }
}

fn type_table(g: &PGame, out: &mut String) {
    writeln!(out, "type  count  weight  parity  players").unwrap();
    for t in 1..=g.h() {
        let parity = if t % 2 == 1 { "odd" } else { "even" };
        writeln!(
            out,
            "{t:>4}  {:>5}  {:>6}  {parity:<6}  {}",
            g.free_rep().count(t),
            g.type_weight(t),
            players_span(g, t)
        )
        .unwrap();
    }
}

fn header(g: &PGame, out: &mut String) {
    writeln!(out, "{}", g.representation()).unwrap();
    writeln!(out, "free type representation: {}", g.free_rep()).unwrap();
    writeln!(
        out,
        "players: {}  types: {}  quota: {}  total weight: {}",
        g.n(),
        g.h(),
        g.quota(),
        g.total_weight()
    )
    .unwrap();
}

pub fn game(g: &PGame, a: &IncidenceMatrix) -> String {
    let mut out = String::new();
    header(g, &mut out);
    out.push('\n');
    type_table(g, &mut out);
    out.push('\n');
    out.push_str("incidence matrix A:\n");
    out.push_str(&a.to_string());
    out
}

pub fn twin(pair: &TwinPair) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "game: {}  ({})",
        pair.game.representation(),
        pair.game.free_rep()
    )
    .unwrap();
    writeln!(
        out,
        "twin: {}  ({})",
        pair.twin.representation(),
        pair.twin.free_rep()
    )
    .unwrap();
    writeln!(out, "self_twin: {}", is_self_twin(&pair.game)).unwrap();
    out.push('\n');
    out.push_str("A^T (non-top players and coalitions in reversed order):\n");
    out.push_str(&pair.a_transposed.to_string());
    out.push('\n');
    out.push_str("A^tau (standard order; the twin's incidence matrix):\n");
    out.push_str(&pair.a_tau.to_string());
    out
}

fn members(a: &IncidenceMatrix, i: usize) -> String {
    let m: Vec<String> = a
        .row_coalition(i)
        .iter()
        .map(|j| (j + 1).to_string())
        .collect();
    m.join(" ")
}

pub fn lottery(g: &PGame, a: &IncidenceMatrix, l: &BalancedLottery, e: &[Rational]) -> String {
    let mut out = String::new();
    writeln!(out, "game: {}  ({})", g.representation(), g.free_rep()).unwrap();
    writeln!(
        out,
        "pi: {}  (approx. {:.6})",
        format_rational(&l.pi),
        approximate(&l.pi)
    )
    .unwrap();
    out.push('\n');
    let width = (0..g.n())
        .map(|i| members(a, i).len())
        .max()
        .unwrap_or(0)
        .max(7);
    writeln!(out, "coalition  {:<width$}  {:>8}  approx.", "members", "p").unwrap();
    for (i, p) in l.probs.iter().enumerate() {
        writeln!(
            out,
            "{:>9}  {:<width$}  {:>8}  {:.6}",
            i + 1,
            members(a, i),
            format_rational(p),
            approximate(p)
        )
        .unwrap();
    }
    out.push('\n');
    writeln!(out, "player  weight      E(j)  approx.").unwrap();
    for (j, ej) in e.iter().enumerate() {
        writeln!(
            out,
            "{:>6}  {:>6}  {:>8}  {:.6}",
            j + 1,
            g.player_weights()[j],
            format_rational(ej),
            approximate(ej)
        )
        .unwrap();
    }
    out
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn report(r: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "game {}", r.game).unwrap();
    for (name, ok) in r.checks() {
        writeln!(out, "  {name:<20} {}", verdict(ok)).unwrap();
    }
    writeln!(out, "result: {}", verdict(r.pass())).unwrap();
    out
}

pub fn report_line(r: &VerificationReport) -> String {
    if r.pass() {
        format!("{}  pass", r.game)
    } else {
        format!("{}  FAIL ({})", r.game, r.failures().join(", "))
    }
}

pub fn enumeration(games: &[PGame]) -> String {
    let width = games
        .iter()
        .map(|g| g.free_rep().to_string().len())
        .max()
        .unwrap_or(0);
    let rep_width = games
        .iter()
        .map(|g| g.representation().len())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for g in games {
        writeln!(
            out,
            "{:<width$}  {:<rep_width$}  q={}  self_twin={}",
            g.free_rep().to_string(),
            g.representation(),
            g.quota(),
            is_self_twin(g)
        )
        .unwrap();
    }
    out
}

pub fn simulation(g: &PGame, l: &BalancedLottery, s: &SimulationSummary) -> String {
    let mut out = String::new();
    writeln!(out, "game: {}  ({})", g.representation(), g.free_rep()).unwrap();
    writeln!(
        out,
        "Monte-Carlo estimate, demonstration only: {} draws, seed {}",
        s.draws, s.seed
    )
    .unwrap();
    writeln!(
        out,
        "exact membership probability pi = {}",
        format_rational(&l.pi)
    )
    .unwrap();
    out.push('\n');
    writeln!(out, "player  membership (est.)  payoff (est.)  w_j/w(N)").unwrap();
    for j in 0..g.n() {
        let exact = Rational::new(g.player_weights()[j], g.total_weight());
        writeln!(
            out,
            "{:>6}  {:>17.6}  {:>13.6}  {}",
            j + 1,
            s.membership_rate[j],
            s.mean_payoff[j],
            format_rational(&exact)
        )
        .unwrap();
    }
    out
}
