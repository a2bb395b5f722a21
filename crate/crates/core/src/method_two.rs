//! Method 2: the associated centre via derivative ideals D^{≤m}I and the
//! iterated derive-then-restrict ideals D[β].
//!
//! Reuses the Method 1 search state so that every restriction is a
//! coordinate slice of the current system.

use crate::core_algebra::{Ideal, MultiIndex, PointQ, Polynomial, Rat, Trunc, TruncatedSeries};
use crate::error::{Error, Result};
use crate::method_one::{start_state, CentreResult, CentreSearchState, SearchOptions, StepRecord};
use crate::newton_graph::prune_to_antichain;
use crate::weighting::{delta, simplex_points, Certified};
use crate::work;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;

/// All multi-indices of length n with total degree ≤ m, graded-lex ascending.
pub(crate) fn multi_indices_up_to(n: usize, m: u32) -> Vec<MultiIndex> {
    fn rec(cur: &mut Vec<u32>, slot: usize, left: u32, out: &mut Vec<MultiIndex>) {
        if slot == cur.len() {
            out.push(MultiIndex::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[slot] = e;
            rec(cur, slot + 1, left - e, out);
        }
        cur[slot] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    rec(&mut cur, 0, m, &mut out);
    out.sort();
    out
}

/// Prune a generator list: drop zeros, normalize unit scalings, dedup, and
/// drop any generator all of whose monomials are divisible by some kept
/// monomial generator (such a generator lies in the monomial ideal they
/// span). A generator that is a unit at the origin collapses the list to (1).
pub fn prune_gens(gens: Vec<TruncatedSeries>) -> Vec<TruncatedSeries> {
    let mut live: Vec<TruncatedSeries> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if !g.body.constant_term().is_zero() {
            let one = Polynomial::one(g.body.vars());
            return vec![TruncatedSeries::exact(one)];
        }
        let norm = TruncatedSeries::new(g.body.normalize_lowest(), g.trunc);
        if !live.iter().any(|h| h.body == norm.body) {
            live.push(norm);
        }
    }
    let mono: Vec<MultiIndex> = live
        .iter()
        .filter(|g| g.body.num_terms() == 1)
        .map(|g| g.body.monomial_support()[0].clone())
        .collect();
    let antichain = prune_to_antichain(mono);
    live.retain(|g| {
        if g.body.num_terms() == 1 {
            let e = &g.body.monomial_support()[0];
            return antichain.contains(e);
        }
        !g.body
            .monomial_support()
            .iter()
            .all(|m| antichain.iter().any(|a| m.dominates(a)))
    });
    live
}

/// D^{≤m}I, built as a chain of single derivation steps with pruning at
/// each level: D^{≤m} = D^{≤1}(D^{≤m-1}) and D^{≤1}J is generated by J
/// together with the first partials of any generating set (Leibniz).
pub fn derive_ideal(gens: &[TruncatedSeries], m: u32) -> Vec<TruncatedSeries> {
    let mut cur = prune_gens(gens.to_vec());
    for _ in 0..m {
        if cur.iter().any(|g| !g.body.constant_term().is_zero()) {
            break;
        }
        let mut next = cur.clone();
        let n = cur.first().map_or(0, |g| g.body.nvars());
        for g in &cur {
            // Later variables first, matching the graded-lex enumeration of
            // derivative multi-indices; the maximal-contact tie-breaks
            // depend on this order.
            for i in (0..n).rev() {
                let d = g.partial_derivative(i);
                if !d.is_zero() {
                    work::count_deriv_gens(1);
                    next.push(d);
                }
            }
        }
        let pruned = prune_gens(next);
        if pruned.len() == cur.len() && pruned == cur {
            break;
        }
        cur = pruned;
    }
    cur
}

/// Substitute 0 for the listed ambient coordinates of the ideal.
pub fn restrict_to_coordinate_slice(ideal: &Ideal, kill: &[String]) -> Result<Ideal> {
    let mut slots = Vec::new();
    for name in kill {
        match ideal.vars.iter().position(|v| v == name) {
            Some(i) => slots.push(i),
            None => return Err(Error::NotACoordinate(name.clone())),
        }
    }
    let gens: Vec<TruncatedSeries> = ideal
        .gens
        .iter()
        .map(|g| g.kill_vars(&slots))
        .filter(|g| !g.is_zero())
        .collect();
    if gens.is_empty() {
        let zero = Polynomial::zero(&ideal.vars);
        return Ok(Ideal::from_series(
            ideal.vars.clone(),
            vec![TruncatedSeries::exact(zero)],
        ));
    }
    Ok(Ideal::from_series(ideal.vars.clone(), gens))
}

/// Memoized D[β] ideals for one coordinate-system epoch; cleared whenever
/// the search state changes coordinates.
#[derive(Default)]
pub struct M2Cache {
    map: HashMap<Vec<u32>, Vec<TruncatedSeries>>,
}

impl M2Cache {
    pub fn new() -> Self {
        M2Cache::default()
    }

    pub fn clear(&mut self) {
        self.map.clear();
    }
}

/// D[β] in the current coordinates: D[(β_1)] = D^{≤β_1}I and
/// D[(β_1..β_l)] = D^{≤β_l}(D[(β_1..β_{l-1})] restricted to the slice of
/// the (l-1)th accepted coordinate).
pub fn d_bracket(
    state: &CentreSearchState,
    cache: &mut M2Cache,
    beta: &[u32],
) -> Vec<TruncatedSeries> {
    assert!(!beta.is_empty() && beta.len() <= state.j() + 1);
    if let Some(hit) = cache.map.get(beta) {
        return hit.clone();
    }
    let l = beta.len();
    let result = if l == 1 {
        derive_ideal(&state.cur_gens, beta[0])
    } else {
        let prev = d_bracket(state, cache, &beta[..l - 1]);
        let sliced: Vec<TruncatedSeries> = prev
            .iter()
            .map(|g| g.kill_vars(&[l - 2]))
            .filter(|g| !g.is_zero())
            .collect();
        derive_ideal(&sliced, beta[l - 1])
    };
    cache.map.insert(beta.to_vec(), result.clone());
    result
}

/// D[prefix] restricted to the slice of the last accepted coordinate: the
/// base whose order at the origin is the least admissible β_{j+1}.
fn bracket_base(
    state: &CentreSearchState,
    cache: &mut M2Cache,
    prefix: &[u32],
) -> Vec<TruncatedSeries> {
    let j = state.j();
    if j == 0 {
        return state.cur_gens.clone();
    }
    let prev = d_bracket(state, cache, prefix);
    prev.iter()
        .map(|g| g.kill_vars(&[j - 1]))
        .filter(|g| !g.is_zero())
        .collect()
}

#[derive(Debug, Clone)]
pub enum M2Next {
    Found {
        value: Rat,
        witness: MultiIndex,
        certified: bool,
    },
    NoCandidate {
        exhaustive: bool,
    },
}

/// Next invariant entry: minimize Ξ(β) over length-(j+1) multi-indices with
/// Δ(β) < 1 and D[β] the unit ideal at the point. For a fixed prefix the
/// least admissible last entry is the order at the origin of the restricted
/// bracket, and Ξ is increasing in it, so one candidate per prefix suffices.
pub fn next_entry_m2(state: &CentreSearchState, cache: &mut M2Cache) -> M2Next {
    let a = &state.accepted;
    let mut best: Option<(Rat, MultiIndex)> = None;
    // (trunc bound, 1-Δ) for prefixes whose base vanishes to truncation.
    let mut blind: Vec<(u32, Rat)> = Vec::new();
    let mut all_exact = true;
    for prefix in simplex_points(a) {
        let base = bracket_base(state, cache, prefix.entries());
        let trunc = base
            .iter()
            .chain(state.cur_gens.iter())
            .fold(Trunc::Exact, |t, g| t.min(g.trunc));
        all_exact &= trunc.is_exact();
        let rem = Rat::one() - delta(a, &prefix);
        match base.iter().filter_map(|g| g.body.order_at_origin()).min() {
            None => {
                if let Some(t) = trunc.bound() {
                    blind.push((t, rem.clone()));
                }
            }
            Some(ord) => {
                let mut entries = prefix.entries().to_vec();
                entries.push(ord);
                let witness = MultiIndex::new(entries);
                let value = Rat::from_integer(BigInt::from(ord)) / &rem;
                match &best {
                    None => best = Some((value, witness)),
                    Some((bv, bw)) => {
                        if value < *bv || (value == *bv && witness < *bw) {
                            best = Some((value, witness));
                        }
                    }
                }
            }
        }
    }
    match best {
        None => M2Next::NoCandidate {
            exhaustive: all_exact,
        },
        Some((value, witness)) => {
            // A blind prefix could beat the candidate only if its hidden
            // order were below the truncation bound it vanished to.
            let certified = blind
                .iter()
                .all(|(t, rem)| Rat::from_integer(BigInt::from(*t)) / rem >= value);
            M2Next::Found {
                value,
                witness,
                certified,
            }
        }
    }
}

/// Least-index generator with a nonvanishing linear part, normalized to
/// unit coefficient at its least linear slot. The generators already live
/// in ambient coordinates, so the lift is verbatim.
pub fn maximal_contact(gens: &[TruncatedSeries]) -> Result<Polynomial> {
    for g in gens {
        if !g.body.constant_term().is_zero() {
            continue;
        }
        let lin = g.body.linear_part();
        if let Some(slot) = lin.iter().position(|c| !c.is_zero()) {
            return Ok(g.body.scale(&(Rat::one() / lin[slot].clone())));
        }
    }
    Err(Error::NoMaximalContact)
}

/// Admissibility in the derivative framework: for every length-j β with
/// Δ(β) < 1 the restricted bracket D[β]|_{V(x_j)} vanishes identically (to
/// the certified truncation) near the point.
pub fn admissible_m2(state: &CentreSearchState, cache: &mut M2Cache) -> Certified<bool> {
    if state.j() == 0 {
        return Certified::yes(false);
    }
    let mut certified = true;
    for prefix in simplex_points(&state.accepted) {
        let base = bracket_base(state, cache, prefix.entries());
        for g in &base {
            certified &= g.trunc.is_exact();
            if !g.is_zero() {
                return Certified::yes(false);
            }
        }
    }
    Certified::new(true, certified)
}

fn m2_admissibility_need(state: &CentreSearchState) -> u32 {
    let sum: Rat = state.accepted.iter().sum();
    let base = sum
        .ceil()
        .to_integer()
        .to_u32()
        .unwrap_or(u32::MAX)
        .max(state.t0);
    base.saturating_mul(2)
}

fn run_m2_at_truncation(
    ideal: &Ideal,
    p: &PointQ,
    opts: &SearchOptions,
    t: u32,
) -> Result<CentreResult> {
    let mut state = start_state(ideal, p, opts)?;
    state.t = t.max(state.t0);
    let mut cache = M2Cache::new();
    loop {
        let j = state.j();
        let n = state.n();
        match next_entry_m2(&state, &mut cache) {
            M2Next::NoCandidate { exhaustive } => {
                if exhaustive {
                    return state.finish();
                }
                let need = m2_admissibility_need(&state);
                if state.t >= need {
                    state.all_certified = false;
                    return state.finish();
                }
                return Err(Error::RaiseTruncation {
                    have: state.t,
                    need,
                });
            }
            M2Next::Found {
                value,
                witness,
                certified,
            } => {
                if !certified {
                    return Err(Error::RaiseTruncation {
                        have: state.t,
                        need: state.t.saturating_mul(2),
                    });
                }
                if j >= n {
                    return Err(Error::InvariantViolation(
                        "candidate found past full length".into(),
                    ));
                }
                // Maximal contact of D[(β_1..β_j, β_{j+1}-1)].
                let last = witness.get(j);
                debug_assert!(last > 0);
                let mut contact_key = witness.entries().to_vec();
                contact_key[j] = last - 1;
                let contact_gens = if j == 0 {
                    derive_ideal(&state.cur_gens, contact_key[0])
                } else {
                    let base = bracket_base(&state, &mut cache, &contact_key[..j]);
                    derive_ideal(&base, contact_key[j])
                };
                let contact = maximal_contact(&contact_gens)?;
                // The coordinate change needs a linear term past the
                // accepted slots.
                let lin = contact.linear_part();
                let l = (j..n).find(|&i| !lin[i].is_zero()).ok_or_else(|| {
                    Error::InvariantViolation(
                        "maximal contact has no linear term in the remaining coordinates".into(),
                    )
                })?;
                let param = contact.scale(&(Rat::one() / lin[l].clone()));
                state.swap_coords(j, l);
                let param = param.swap_slots(j, l);
                let record = StepRecord {
                    entry: value.clone(),
                    witness: witness.clone(),
                    slot: l,
                    gen_index: 0,
                    trunc_used: state
                        .cur_gens
                        .iter()
                        .fold(Trunc::Exact, |t, g| t.min(g.trunc)),
                    certified,
                };
                state.accept(value, &param, record)?;
                cache.clear();
            }
        }
    }
}

/// Full Method 2 run with the same deepening loop as Method 1.
pub fn associated_centre_m2(
    ideal: &Ideal,
    p: &PointQ,
    opts: &SearchOptions,
) -> Result<CentreResult> {
    let mut t = start_state(ideal, p, opts)?.t;
    loop {
        match run_m2_at_truncation(ideal, p, opts, t) {
            Err(Error::RaiseTruncation { need, .. }) => {
                let next = need.max(t.saturating_mul(2));
                if next > opts.cap {
                    return Err(Error::TruncationCap(
                        opts.cap,
                        format!("needed certified degree {}", need),
                    ));
                }
                t = next;
            }
            other => return other,
        }
    }
}

pub fn invariant_value_m2(ideal: &Ideal, p: &PointQ) -> Result<crate::weighting::InvariantValue> {
    let r = associated_centre_m2(ideal, p, &SearchOptions::default())?;
    Ok(crate::weighting::InvariantValue::Inv(
        r.centre.inv.entries().to_vec(),
    ))
}
