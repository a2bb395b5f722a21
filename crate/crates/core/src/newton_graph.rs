//! Newton sets of ideals at a point: staircase minimal elements and the
//! half-space admissibility test.

use crate::core_algebra::{MultiIndex, Rat, Trunc, TruncatedSeries};
use crate::error::{Error, Result};
use crate::weighting::{delta, xi, Certified, RatOrInf};
use num_traits::{One, ToPrimitive};

/// Antichain of minimal exponents representing the upward-closed Newton set,
/// complete for all β with |β| ≤ the certified degree.
#[derive(Debug, Clone)]
pub struct NewtonSet {
    pub minimal_elements: Vec<MultiIndex>,
    pub certified: Trunc,
    pub nvars: usize,
}

/// Prune a list of exponents to the antichain of componentwise-minimal ones.
/// Graded-lex presorting makes the scan deterministic: any dominator of an
/// element precedes it.
pub fn prune_to_antichain(mut elems: Vec<MultiIndex>) -> Vec<MultiIndex> {
    elems.sort();
    elems.dedup();
    let mut kept: Vec<MultiIndex> = Vec::new();
    for e in elems {
        if !kept.iter().any(|m| e.dominates(m)) {
            kept.push(e);
        }
    }
    kept
}

/// Newton set of an ideal from its generators: the minimal elements of
/// ∪_i (support(g_i) + Z_{≥0}^n). Any monomial in that union appears in some
/// x^γ·g_i, and the support of every element of the ideal lies inside it, so
/// the union is exactly {β : ∂^β I = (1)} at the origin.
pub fn newton_set(gens: &[TruncatedSeries]) -> Result<NewtonSet> {
    let live: Vec<&TruncatedSeries> = gens.iter().filter(|g| !g.is_zero()).collect();
    if live.is_empty() {
        return Err(Error::EmptyNewtonSet);
    }
    let nvars = live[0].body.nvars();
    let mut elems = Vec::new();
    let mut certified = Trunc::Exact;
    for g in gens {
        certified = certified.min(g.trunc);
        elems.extend(g.body.monomial_support());
    }
    Ok(NewtonSet {
        minimal_elements: prune_to_antichain(elems),
        certified,
        nvars,
    })
}

/// Outcome of minimizing Ξ over the certified part of a Newton set.
#[derive(Debug, Clone)]
pub enum XiMin {
    /// Minimizer found; `certified` records whether a smaller value could
    /// still hide above the truncation.
    Found {
        value: Rat,
        witness: MultiIndex,
        certified: bool,
    },
    /// No element with Δ < 1 is visible. `exhaustive` is true when the
    /// Newton set is complete, which makes the current centre admissible.
    NoCandidate { exhaustive: bool },
}

/// min Ξ over minimal elements with Δ < 1. Ξ is monotone under componentwise
/// domination, so the antichain suffices. The witness is the graded-lex-least
/// minimizer. A candidate c is certified when every β that could beat it
/// (Δ(β) < 1 and Ξ(β) ≤ c forces |β| ≤ Σ a_i + c) lies within the certified
/// degree.
pub fn min_xi_over_newton(a: &[Rat], n: &NewtonSet) -> XiMin {
    let mut best: Option<(Rat, MultiIndex)> = None;
    for m in &n.minimal_elements {
        if delta(a, m) >= Rat::one() {
            continue;
        }
        if let RatOrInf::Finite(v) = xi(a, m) {
            match &best {
                None => best = Some((v, m.clone())),
                Some((bv, bm)) => {
                    if v < *bv || (v == *bv && m < bm) {
                        best = Some((v, m.clone()));
                    }
                }
            }
        }
    }
    match best {
        None => XiMin::NoCandidate {
            exhaustive: n.certified.is_exact(),
        },
        Some((value, witness)) => {
            let certified = match n.certified.bound() {
                None => true,
                Some(t) => {
                    let need: Rat = a.iter().sum::<Rat>() + &value;
                    need.ceil()
                        .to_integer()
                        .to_u32()
                        .map_or(false, |b| b <= t)
                }
            };
            XiMin::Found {
                value,
                witness,
                certified,
            }
        }
    }
}

/// True iff every minimal element β satisfies λ_a(β) = Σ β_i / a_i ≥ 1, i.e.
/// the hyperplane H(a) lies below the Newton set. This is the graphical form
/// of admissibility and must agree with the valuation-based test.
pub fn hyperplane_below(a: &[Rat], n: &NewtonSet) -> Certified<bool> {
    for m in &n.minimal_elements {
        if delta(a, m) < Rat::one() {
            return Certified::yes(false);
        }
    }
    let certified = match n.certified.bound() {
        None => true,
        Some(t) => {
            if a.len() != n.nvars {
                false
            } else {
                let sum: Rat = a.iter().sum();
                sum.ceil()
                    .to_integer()
                    .to_u32()
                    .map_or(false, |b| b <= t)
            }
        }
    };
    Certified::new(true, certified)
}

/// The required certified degree for deciding a candidate next entry c at
/// partial invariant a: ⌈Σ a_i + c⌉.
pub fn required_degree(a: &[Rat], candidate: &Rat) -> u32 {
    let need: Rat = a.iter().sum::<Rat>() + candidate;
    need.ceil()
        .to_integer()
        .to_u32()
        .unwrap_or(u32::MAX)
}
