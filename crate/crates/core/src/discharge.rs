//! The iterated discharging engine.
//!
//! Every vertex starts with charge d(v) − 3.2. Rule 0 moves 0.4 along each
//! (triangle, degree-3 member) incidence; Rule i repeatedly lets degree-≥4
//! vertices with enough charge send 0.4 to each degree-3 neighbor still below
//! 0.6; Rule T finally sends 0.2 to such neighbors from senders that never
//! paid them before. Rounds are synchronous — every rule computes all of its
//! transfers from a snapshot of the charges, so the whole procedure is a pure
//! function of the graph. Charge is moved, never created: totals are
//! preserved exactly in scaled integers.

use std::collections::BTreeSet;

use crate::graph::{bits_of, Graph};
use crate::scaled::Scaled;

/// Charge needed to stop qualifying as a Rule-i / Rule-T receiver (0.6).
const SATISFIED: Scaled = Scaled(3);
/// Rule 0 / Rule i transfer size (0.4).
const SEND_BIG: Scaled = Scaled(2);
/// Rule T transfer size (0.2).
const SEND_SMALL: Scaled = Scaled(1);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Zero,
    Iterated,
    T,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Zero => "0",
            Rule::Iterated => "i",
            Rule::T => "T",
        }
    }
}

/// One charge movement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub round: usize,
    pub rule: Rule,
    pub from: usize,
    pub to: usize,
    pub amount: Scaled,
}

impl Transfer {
    /// The transcript line for this transfer.
    pub fn jsonl_line(&self) -> String {
        format!(
            "{{\"round\":{},\"rule\":\"{}\",\"from\":{},\"to\":{},\"amount_scaled\":{}}}",
            self.round,
            self.rule.as_str(),
            self.from,
            self.to,
            self.amount.0
        )
    }
}

/// Newline-terminated JSON-lines transcript.
pub fn transcript_jsonl(transcript: &[Transfer]) -> String {
    let mut out = String::new();
    for t in transcript {
        out.push_str(&t.jsonl_line());
        out.push('\n');
    }
    out
}

/// Charges after some prefix of the procedure. `sent` remembers every
/// (sender, receiver) pair used by any rule so far — Rule T excludes them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeState {
    pub charges: Vec<Scaled>,
    pub round: usize,
    pub sent: BTreeSet<(usize, usize)>,
}

impl ChargeState {
    pub fn total(&self) -> Scaled {
        Scaled(self.charges.iter().map(|c| c.0).sum())
    }
}

/// ch(v) = d(v) − 3.2, so Σ = 2|E| − 3.2n.
pub fn initial_charges(g: &Graph) -> ChargeState {
    ChargeState {
        charges: (0..g.n()).map(|v| Scaled(5 * g.degree(v) as i64 - 16)).collect(),
        round: 0,
        sent: BTreeSet::new(),
    }
}

fn execute(state: &ChargeState, transfers: &[Transfer], next_round: usize) -> ChargeState {
    let mut out = state.clone();
    for t in transfers {
        out.charges[t.from].0 -= t.amount.0;
        out.charges[t.to].0 += t.amount.0;
        out.sent.insert((t.from, t.to));
    }
    out.round = next_round;
    debug_assert_eq!(out.total(), state.total(), "rules move charge, never create it");
    out
}

/// For every triangle T = vw₁w₂ whose member v has degree 3, w₁ and w₂ each
/// send 0.4 to v — once per (triangle, degree-3 member) incidence, all from
/// the round-0 snapshot.
pub fn apply_rule0(g: &Graph, state: &ChargeState) -> (ChargeState, Vec<Transfer>) {
    assert_eq!(state.round, 0, "Rule 0 opens the procedure");
    let mut transfers = Vec::new();
    for v in 0..g.n() {
        if g.degree(v) != 3 {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbor_set(v).to_vec();
        for (i, &w1) in nbrs.iter().enumerate() {
            for &w2 in nbrs.iter().skip(i + 1) {
                if g.has_edge(w1, w2) {
                    for from in [w1, w2] {
                        transfers.push(Transfer {
                            round: 0,
                            rule: Rule::Zero,
                            from,
                            to: v,
                            amount: SEND_BIG,
                        });
                    }
                }
            }
        }
    }
    (execute(state, &transfers, 1), transfers)
}

/// One synchronous Rule-i round: N_i(v) collects the degree-3 neighbors of v
/// still below 0.6; every v of degree ≥ 4 holding at least 0.4·|N_i(v)| sends
/// 0.4 to each of them. Fired ⟺ the returned transfers are non-empty, in
/// which case the round counter advances.
pub fn apply_rule_i(g: &Graph, state: &ChargeState) -> (ChargeState, Vec<Transfer>) {
    assert!(state.round >= 1, "Rule i follows Rule 0");
    let mut transfers = Vec::new();
    for v in 0..g.n() {
        if g.degree(v) < 4 {
            continue;
        }
        let targets: Vec<usize> = bits_of(g.row(v))
            .filter(|&u| g.degree(u) == 3 && state.charges[u] < SATISFIED)
            .collect();
        if targets.is_empty() || state.charges[v].0 < SEND_BIG.0 * targets.len() as i64 {
            continue;
        }
        for u in targets {
            transfers.push(Transfer {
                round: state.round,
                rule: Rule::Iterated,
                from: v,
                to: u,
                amount: SEND_BIG,
            });
        }
    }
    let next_round = if transfers.is_empty() { state.round } else { state.round + 1 };
    (execute(state, &transfers, next_round), transfers)
}

/// Rule T: every degree-≥4 vertex sends 0.2 to each degree-3 neighbor that is
/// still below 0.6 (on the pre-Rule-T snapshot) and that it never sent charge
/// to under any earlier rule.
pub fn apply_rule_t(g: &Graph, state: &ChargeState) -> (ChargeState, Vec<Transfer>) {
    let mut transfers = Vec::new();
    for v in 0..g.n() {
        if g.degree(v) < 4 {
            continue;
        }
        for u in bits_of(g.row(v)) {
            if g.degree(u) == 3
                && state.charges[u] < SATISFIED
                && !state.sent.contains(&(v, u))
            {
                transfers.push(Transfer {
                    round: state.round,
                    rule: Rule::T,
                    from: v,
                    to: u,
                    amount: SEND_SMALL,
                });
            }
        }
    }
    (execute(state, &transfers, state.round + 1), transfers)
}

/// The full procedure: Rule 0, Rule i to fixpoint, Rule T. Returns the final
/// state and every transfer in order. Termination of the Rule-i loop is
/// guaranteed: receivers never send during it, so each fired round strictly
/// drains the finite surplus held by degree-≥4 vertices.
pub fn run_discharging(g: &Graph) -> (ChargeState, Vec<Transfer>) {
    let (mut state, mut transcript) = {
        let init = initial_charges(g);
        apply_rule0(g, &init)
    };
    loop {
        let (next, transfers) = apply_rule_i(g, &state);
        state = next;
        if transfers.is_empty() {
            break;
        }
        transcript.extend(transfers);
    }
    let (finished, transfers) = apply_rule_t(g, &state);
    transcript.extend(transfers);
    (finished, transcript)
}
