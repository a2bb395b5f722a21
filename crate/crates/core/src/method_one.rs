//! Method 1: the point-local associated marked centre by iterated
//! Ξ-minimization over Newton sets, with explicit coordinate changes.
//!
//! The search state and its coordinate-change machinery are shared with the
//! derivative-ideal method, which performs the same changes so that its
//! restrictions are coordinate slices.

use crate::core_algebra::{
    invert_etale_change, substitute_series, Ideal, MultiIndex, PointQ, Polynomial, Rat,
    SubstitutionMap, Trunc, TruncatedSeries,
};
use crate::error::{Error, Result};
use crate::expr_io::{rat_pq, Json};
use crate::newton_graph::{min_xi_over_newton, newton_set, required_degree, XiMin};
use crate::weighting::{b_completion_inv, delta, is_admissible, MarkedCentre, PreInvariant};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Deepening policy for truncated coordinate changes.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Initial working truncation; defaults to max generator degree + 2.
    pub t0: Option<u32>,
    /// Hard cap for deepening, doubling each round.
    pub cap: u32,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { t0: None, cap: 1024 }
    }
}

/// One accepted invariant entry with its audit trail.
#[derive(Debug, Clone)]
pub struct StepRecord {
    pub entry: Rat,
    pub witness: MultiIndex,
    pub slot: usize,
    pub gen_index: usize,
    pub trunc_used: Trunc,
    pub certified: bool,
}

/// The coordinate frame reached by a finished search: how to move between
/// the original coordinates and the compatible ones where the accepted
/// parameters are the leading coordinates.
#[derive(Debug, Clone)]
pub struct Frame {
    pub vars: Vec<String>,
    /// Original variables as series in the current coordinates.
    pub from_orig: SubstitutionMap,
    /// Current coordinate functions as exact polynomials in the original
    /// (translated-to-origin) variables.
    pub to_orig: Vec<Polynomial>,
    /// Generators re-expressed in the current coordinates.
    pub cur_gens: Vec<TruncatedSeries>,
}

#[derive(Debug, Clone)]
pub struct CentreTrace {
    pub steps: Vec<StepRecord>,
    pub frame: Frame,
    pub t_used: u32,
    pub certified: bool,
}

impl CentreTrace {
    pub fn to_json(&self) -> Json {
        Json::Arr(
            self.steps
                .iter()
                .map(|s| {
                    Json::Obj(vec![
                        ("entry".into(), Json::str(rat_pq(&s.entry))),
                        (
                            "witness".into(),
                            Json::Arr(
                                s.witness
                                    .entries()
                                    .iter()
                                    .map(|e| Json::Int(*e as i64))
                                    .collect(),
                            ),
                        ),
                        ("slot".into(), Json::Int(s.slot as i64)),
                        ("generator".into(), Json::Int(s.gen_index as i64)),
                        ("certified".into(), Json::Bool(s.certified)),
                    ])
                })
                .collect(),
        )
    }
}

#[derive(Debug, Clone)]
pub struct CentreResult {
    pub centre: MarkedCentre,
    pub trace: CentreTrace,
}

/// Search state: the original (translated) ideal, its re-expression in the
/// current coordinates, and the partial invariant. In the current
/// coordinates the accepted parameters are exactly the leading coordinates.
#[derive(Debug, Clone)]
pub struct CentreSearchState {
    pub vars: Vec<String>,
    pub base_point: PointQ,
    pub orig_gens: Vec<Polynomial>,
    pub cur_gens: Vec<TruncatedSeries>,
    pub from_orig: SubstitutionMap,
    pub to_orig: Vec<Polynomial>,
    pub accepted: Vec<Rat>,
    pub t: u32,
    pub t0: u32,
    pub steps: Vec<StepRecord>,
    pub all_certified: bool,
}

pub enum StepOutcome {
    Continued(CentreSearchState),
    Done(CentreSearchState, bool),
}

/// Translate to the base point and initialize the identity frame.
pub fn start_state(ideal: &Ideal, p: &PointQ, opts: &SearchOptions) -> Result<CentreSearchState> {
    if p.len() != ideal.nvars() {
        return Err(Error::VarMismatch("point length vs variables".into()));
    }
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut trunc_in = Trunc::Exact;
    for g in &ideal.gens {
        if !g.trunc.is_exact() && !p.is_origin() {
            // A truncated expansion is only meaningful around its own origin.
            return Err(Error::TooLarge(
                "cannot translate a truncated series to another point".into(),
            ));
        }
        if !g.body.eval(p).is_zero() {
            return Err(Error::PointNotOnVariety);
        }
        let t = g.body.translate_to_origin(p);
        if !t.is_zero() {
            gens.push(t);
            trunc_in = trunc_in.min(g.trunc);
        }
    }
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let maxdeg = gens
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .unwrap_or(0);
    let t0 = opts.t0.unwrap_or(0).max(maxdeg + 2);
    let vars = ideal.vars.clone();
    let cur_gens = gens
        .iter()
        .map(|g| TruncatedSeries::new(g.clone(), trunc_in))
        .collect();
    let to_orig = (0..vars.len()).map(|i| Polynomial::var(&vars, i)).collect();
    Ok(CentreSearchState {
        from_orig: SubstitutionMap::identity(&vars),
        vars,
        base_point: p.clone(),
        orig_gens: gens,
        cur_gens,
        to_orig,
        accepted: Vec::new(),
        t: t0,
        t0,
        steps: Vec::new(),
        all_certified: true,
    })
}

impl CentreSearchState {
    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn j(&self) -> usize {
        self.accepted.len()
    }

    /// Degree past which further deepening is abandoned for j < n and the
    /// admissibility verdict is reported uncertified.
    fn admissibility_need(&self) -> u32 {
        let sum: Rat = self.accepted.iter().sum();
        let base = sum
            .ceil()
            .to_integer()
            .to_u32()
            .unwrap_or(u32::MAX)
            .max(self.t0);
        base.saturating_mul(2)
    }

    pub(crate) fn swap_coords(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for g in &mut self.cur_gens {
            *g = TruncatedSeries::new(g.body.swap_slots(a, b), g.trunc);
        }
        for im in &mut self.from_orig.images {
            *im = TruncatedSeries::new(im.body.swap_slots(a, b), im.trunc);
        }
        self.from_orig.to_vars.swap(a, b);
        self.to_orig.swap(a, b);
        self.vars.swap(a, b);
    }

    /// Install `param` (a polynomial in the current coordinates with unit
    /// linear coefficient in slot j) as coordinate j via the inverse étale
    /// change, and record the new entry.
    pub(crate) fn accept(
        &mut self,
        entry: Rat,
        param_current: &Polynomial,
        record: StepRecord,
    ) -> Result<()> {
        let j = self.j();
        // New coordinate as a function of the original variables; computed
        // against the pre-change frame.
        let new_coord_orig = param_current.eval_poly(&self.to_orig, Trunc::Exact);
        let sigma = invert_etale_change(&self.vars, j, param_current, self.t)?;
        for g in &mut self.cur_gens {
            *g = substitute_series(g, &sigma)?;
        }
        self.from_orig = self.from_orig.then(&sigma)?;
        self.to_orig[j] = new_coord_orig;
        if let Some(last) = self.accepted.last() {
            if entry < *last {
                return Err(Error::InvariantViolation(format!(
                    "entry {} decreased below {}",
                    entry, last
                )));
            }
        }
        self.accepted.push(entry);
        self.all_certified &= record.certified;
        self.steps.push(record);
        Ok(())
    }

    /// Parameters in user coordinates (vanishing at the base point).
    pub fn params_user_coords(&self) -> Vec<Polynomial> {
        self.to_orig[..self.j()]
            .iter()
            .map(|p| p.translate_to_origin(&self.base_point.neg()))
            .collect()
    }

    pub fn finish(&self) -> Result<CentreResult> {
        let inv = PreInvariant::new(self.accepted.clone())?;
        let centre = MarkedCentre::new(self.params_user_coords(), inv, self.base_point.clone())?;
        Ok(CentreResult {
            centre,
            trace: CentreTrace {
                steps: self.steps.clone(),
                frame: Frame {
                    vars: self.vars.clone(),
                    from_orig: self.from_orig.clone(),
                    to_orig: self.to_orig.clone(),
                    cur_gens: self.cur_gens.clone(),
                },
                t_used: self.t,
                certified: self.all_certified,
            },
        })
    }
}

/// One Ξ-minimization step: either accepts the next invariant entry together
/// with a new parameter, or reports the current centre admissible.
pub fn step(mut state: CentreSearchState) -> Result<StepOutcome> {
    let j = state.j();
    let n = state.n();
    let newton = newton_set(&state.cur_gens)?;
    match min_xi_over_newton(&state.accepted, &newton) {
        XiMin::NoCandidate { exhaustive } => {
            if exhaustive {
                return Ok(StepOutcome::Done(state, true));
            }
            // Full-length invariants are decidable within ⌈Σ a_i⌉.
            let sum: Rat = state.accepted.iter().sum();
            let full_need = sum.ceil().to_integer().to_u32().unwrap_or(u32::MAX);
            if j == n {
                if newton.certified.admits(full_need) {
                    return Ok(StepOutcome::Done(state, true));
                }
                return Err(Error::RaiseTruncation {
                    have: state.t,
                    need: full_need,
                });
            }
            // Shorter invariants cannot be certified from a truncated
            // expansion; deepen once past the adaptive bound, then accept
            // with the uncertified flag set.
            let need = state.admissibility_need();
            if state.t >= need {
                state.all_certified = false;
                return Ok(StepOutcome::Done(state, false));
            }
            Err(Error::RaiseTruncation {
                have: state.t,
                need,
            })
        }
        XiMin::Found {
            value,
            witness,
            certified,
        } => {
            if !certified {
                let need = required_degree(&state.accepted, &value);
                return Err(Error::RaiseTruncation {
                    have: state.t,
                    need: need.max(state.t.saturating_mul(2)),
                });
            }
            if j >= n {
                return Err(Error::InvariantViolation(
                    "candidate found past full length".into(),
                ));
            }
            // l: least coordinate past the accepted ones carried by the witness.
            let l = (j..n).find(|&i| witness.get(i) > 0).ok_or_else(|| {
                Error::InvariantViolation(
                    "minimizer has no tail support; semi-associativity is violated".into(),
                )
            })?;
            // Least-index generator exhibiting the witness monomial.
            let gen_index = state
                .cur_gens
                .iter()
                .position(|g| !g.body.coeff(&witness).is_zero())
                .ok_or_else(|| {
                    Error::InvariantViolation("witness not in any generator support".into())
                })?;
            let bar_beta = witness.minus_unit(l);
            let param_raw = state.cur_gens[gen_index].iterated_derivative(&bar_beta);
            let lin = param_raw.body.linear_part();
            if lin[l].is_zero() {
                return Err(Error::InvariantViolation(
                    "derived parameter lost its linear term".into(),
                ));
            }
            let param = param_raw.body.scale(&(Rat::one() / lin[l].clone()));
            debug_assert!(param.constant_term().is_zero());
            state.swap_coords(j, l);
            let param = param.swap_slots(j, l);
            let record = StepRecord {
                entry: value.clone(),
                witness: witness.clone(),
                slot: l,
                gen_index,
                trunc_used: newton.certified,
                certified,
            };
            state.accept(value, &param, record)?;
            Ok(StepOutcome::Continued(state))
        }
    }
}

fn run_at_truncation(ideal: &Ideal, p: &PointQ, opts: &SearchOptions, t: u32) -> Result<CentreResult> {
    let mut state = start_state(ideal, p, opts)?;
    state.t = t.max(state.t0);
    loop {
        match step(state)? {
            StepOutcome::Continued(s) => state = s,
            StepOutcome::Done(s, _) => return s.finish(),
        }
    }
}

/// Full Method 1 run with deepening: restart at doubled truncation whenever
/// a step reports its certified degree insufficient, failing loudly at the
/// cap.
pub fn associated_centre_m1(
    ideal: &Ideal,
    p: &PointQ,
    opts: &SearchOptions,
) -> Result<CentreResult> {
    let mut t = start_state(ideal, p, opts)?.t;
    loop {
        match run_at_truncation(ideal, p, opts, t) {
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

/// Independent recomputation of the next entry as max{b : J^{(j)}[b]
/// admissible}, sweeping b over the well-ordered candidate set Γ(a_1..a_j).
/// Admissibility of b-completions is monotone decreasing in b, so an
/// ascending sweep stops at the first inadmissible candidate. Used only as
/// a test oracle; a mismatch with the step value falsifies the Newton-set
/// representation and must abort.
pub fn bcompletion_oracle(state: &CentreSearchState) -> Result<Rat> {
    let n = state.n();
    let a = &state.accepted;
    let start: Rat = a.last().cloned().unwrap_or_else(Rat::one);
    let mut window: Rat = (start.clone() + Rat::one()) * Rat::from_integer(BigInt::from(2));
    let mut best: Option<Rat> = None;
    for _round in 0..16 {
        let candidates = gamma_candidates(a, &start, &window);
        for b in &candidates {
            if best.as_ref().map_or(false, |prev| b <= prev) {
                continue;
            }
            let inv = b_completion_inv(a, b, n)?;
            if is_admissible(&inv, n, &state.cur_gens).value {
                best = Some(b.clone());
            } else {
                return best.ok_or_else(|| {
                    Error::InvariantViolation("no admissible b-completion at all".into())
                });
            }
        }
        window *= Rat::from_integer(BigInt::from(2));
    }
    Err(Error::InvariantViolation(
        "b-completion sweep did not terminate".into(),
    ))
}

/// Γ(a_1..a_j) ∩ [start, window]: all m/(1 − Δ(β)) for β in the Δ < 1
/// simplex and integral m, sorted ascending.
fn gamma_candidates(a: &[Rat], start: &Rat, window: &Rat) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    for beta in crate::weighting::simplex_points(a) {
        let rem = Rat::one() - delta(a, &beta);
        debug_assert!(rem.is_positive());
        let lo = (start.clone() * &rem).ceil().to_integer();
        let hi = (window.clone() * &rem).floor().to_integer();
        let mut m = if lo.is_positive() { lo } else { BigInt::one() };
        while m <= hi {
            out.push(Rat::new(m.clone(), BigInt::one()) / &rem);
            m += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Invariant entries of a finished run as a plain vector.
pub fn invariant_of(result: &CentreResult) -> Vec<Rat> {
    result.centre.inv.entries().to_vec()
}

/// Run the method and return just the invariant.
pub fn invariant_value_m1(ideal: &Ideal, p: &PointQ) -> Result<crate::weighting::InvariantValue> {
    let r = associated_centre_m1(ideal, p, &SearchOptions::default())?;
    Ok(crate::weighting::InvariantValue::Inv(invariant_of(&r)))
}

/// Check that the step value and the b-completion oracle agree at the
/// current state; abort on discrepancy.
pub fn oracle_agrees(state: &CentreSearchState, entry: &Rat) -> Result<()> {
    let oracle = bcompletion_oracle(state)?;
    if oracle != *entry {
        return Err(Error::InvariantViolation(format!(
            "b-completion oracle {} disagrees with step value {}",
            oracle, entry
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_algebra::{rat, rat_int};
    use crate::expr_io::parse_poly;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn ideal(texts: &[&str], vs: &[&str]) -> Ideal {
        let v = vars(vs);
        Ideal::from_polys(
            v.clone(),
            texts.iter().map(|t| parse_poly(t, &v).unwrap()).collect(),
        )
    }

    fn run(texts: &[&str], vs: &[&str]) -> CentreResult {
        associated_centre_m1(
            &ideal(texts, vs),
            &PointQ::origin(vs.len()),
            &SearchOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn a_m_family() {
        for m in 1..=6u32 {
            let r = run(&[&format!("x^2 - y^{}", m + 1)], &["x", "y"]);
            assert_eq!(
                invariant_of(&r),
                vec![rat_int(2), rat_int(m as i64 + 1)],
                "A_{} invariant",
                m
            );
            if m % 2 == 0 {
                assert_eq!(r.centre.weights, vec![m as u64 + 1, 2]);
            } else {
                assert_eq!(r.centre.weights, vec![(m as u64 + 1) / 2, 1]);
            }
            assert!(r.trace.certified);
        }
    }

    #[test]
    fn newt_curve() {
        let r = run(&["x^4 + x*y^4 + y^6"], &["x", "y"]);
        assert_eq!(invariant_of(&r), vec![rat_int(4), rat(16, 3)]);
        assert_eq!(r.centre.marking, 16);
        assert_eq!(r.centre.weights, vec![4, 3]);
        let vs = vars(&["x", "y"]);
        assert_eq!(r.centre.params[0], parse_poly("x", &vs).unwrap());
        assert_eq!(r.centre.params[1], parse_poly("y", &vs).unwrap());
    }

    #[test]
    fn whitney_umbrella() {
        let r = run(&["x^2 - y^2*z"], &["x", "y", "z"]);
        assert_eq!(invariant_of(&r), vec![rat_int(2), rat_int(3), rat_int(3)]);
        assert_eq!(r.centre.weights, vec![3, 2, 2]);
        assert_eq!(r.centre.marking, 6);
    }

    #[test]
    fn comparison_example() {
        let r = run(&["x^4 + y^5 + z^6"], &["x", "y", "z"]);
        assert_eq!(invariant_of(&r), vec![rat_int(4), rat_int(5), rat_int(6)]);
    }

    #[test]
    fn smooth_hypersurface() {
        let r = run(&["x - y^2"], &["x", "y"]);
        assert_eq!(invariant_of(&r), vec![rat_int(1)]);
        let vs = vars(&["x", "y"]);
        assert_eq!(r.centre.params[0], parse_poly("x - y^2", &vs).unwrap());
    }

    #[test]
    fn perturbed_cusp_with_oracle() {
        // Cross-checked by the b-completion sweep at every step.
        let id = ideal(&["x^2 - y^3 + y^4"], &["x", "y"]);
        let mut state = start_state(&id, &PointQ::origin(2), &SearchOptions::default()).unwrap();
        loop {
            let before = state.clone();
            match step(state).unwrap() {
                StepOutcome::Continued(s) => {
                    let entry = s.accepted.last().unwrap().clone();
                    oracle_agrees(&before, &entry).unwrap();
                    state = s;
                }
                StepOutcome::Done(s, certified) => {
                    assert!(certified);
                    assert_eq!(s.accepted, vec![rat_int(2), rat_int(3)]);
                    break;
                }
            }
        }
    }

    #[test]
    fn translated_start_state() {
        let id = ideal(&["x^2 - y^2*z"], &["x", "y", "z"]);
        let p = PointQ::new(vec![rat_int(0), rat_int(0), rat_int(1)]);
        let st = start_state(&id, &p, &SearchOptions::default()).unwrap();
        let vs = vars(&["x", "y", "z"]);
        assert_eq!(
            st.orig_gens[0],
            parse_poly("x^2 - y^2*z - y^2", &vs).unwrap()
        );
        // Point not on the variety is rejected.
        let q = PointQ::new(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert!(matches!(
            start_state(&id, &q, &SearchOptions::default()),
            Err(Error::PointNotOnVariety)
        ));
    }

    #[test]
    fn whitney_off_origin_invariant() {
        let id = ideal(&["x^2 - y^2*z"], &["x", "y", "z"]);
        let p = PointQ::new(vec![rat_int(0), rat_int(0), rat_int(1)]);
        let r = associated_centre_m1(&id, &p, &SearchOptions::default()).unwrap();
        assert_eq!(invariant_of(&r), vec![rat_int(2), rat_int(2)]);
        // Away from the singular line the surface is smooth.
        let q = PointQ::new(vec![rat_int(1), rat_int(1), rat_int(1)]);
        let r = associated_centre_m1(&id, &q, &SearchOptions::default()).unwrap();
        assert_eq!(invariant_of(&r), vec![rat_int(1)]);
    }

    #[test]
    fn bcompletion_oracle_checkpoints() {
        // A_m after (x^2): oracle gives m+1.
        for m in [2u32, 4] {
            let id = ideal(&[&format!("x^2 - y^{}", m + 1)], &["x", "y"]);
            let st = start_state(&id, &PointQ::origin(2), &SearchOptions::default()).unwrap();
            let st = match step(st).unwrap() {
                StepOutcome::Continued(s) => s,
                _ => panic!(),
            };
            assert_eq!(st.accepted, vec![rat_int(2)]);
            assert_eq!(bcompletion_oracle(&st).unwrap(), rat_int(m as i64 + 1));
        }
        // Whitney after (x^2): oracle gives 3.
        let id = ideal(&["x^2 - y^2*z"], &["x", "y", "z"]);
        let st = start_state(&id, &PointQ::origin(3), &SearchOptions::default()).unwrap();
        let st = match step(st).unwrap() {
            StepOutcome::Continued(s) => s,
            _ => panic!(),
        };
        assert_eq!(bcompletion_oracle(&st).unwrap(), rat_int(3));
        // Plane curve after (x^4): oracle gives 16/3.
        let id = ideal(&["x^4 + x*y^4 + y^6"], &["x", "y"]);
        let st = start_state(&id, &PointQ::origin(2), &SearchOptions::default()).unwrap();
        let st = match step(st).unwrap() {
            StepOutcome::Continued(s) => s,
            _ => panic!(),
        };
        assert_eq!(bcompletion_oracle(&st).unwrap(), rat(16, 3));
    }

    #[test]
    fn deterministic_traces() {
        let run1 = run(&["x^2 - y^2*z"], &["x", "y", "z"]);
        let run2 = run(&["x^2 - y^2*z"], &["x", "y", "z"]);
        assert_eq!(
            format!("{:?}", run1.trace.steps),
            format!("{:?}", run2.trace.steps)
        );
        assert_eq!(run1.centre.params, run2.centre.params);
    }

    #[test]
    fn bumped_tail_is_inadmissible() {
        // For each example, raising the last entry breaks admissibility.
        for (texts, vs) in [
            (vec!["x^2 - y^3"], vec!["x", "y"]),
            (vec!["x^2 - y^2*z"], vec!["x", "y", "z"]),
            (vec!["x^4 + x*y^4 + y^6"], vec!["x", "y"]),
        ] {
            let r = run(&texts, &vs);
            let frame = &r.trace.frame;
            let mut bumped = r.centre.inv.entries().to_vec();
            let last = bumped.last_mut().unwrap();
            *last += Rat::one();
            let adm = is_admissible(&bumped, vs.len(), &frame.cur_gens);
            assert!(!adm.value, "bumped invariant should fail for {:?}", texts);
        }
    }

    #[test]
    fn reembedding_law() {
        for (texts, vs, expect) in [
            (
                vec!["x^2 - y^3"],
                vec!["x", "y"],
                vec![rat_int(2), rat_int(3)],
            ),
            (
                vec!["x^2 - y^2*z"],
                vec!["x", "y", "z"],
                vec![rat_int(2), rat_int(3), rat_int(3)],
            ),
        ] {
            let mut vs2: Vec<&str> = vs.clone();
            vs2.push("w");
            let mut texts2 = texts.clone();
            texts2.push("w");
            let r = run(&texts2, &vs2);
            let mut want = vec![rat_int(1)];
            want.extend(expect.clone());
            assert_eq!(invariant_of(&r), want);
        }
    }

    #[test]
    fn smooth_pullback_invariance() {
        let base = run(&["x^2 - y^3"], &["x", "y"]);
        let pulled = run(&["x^2 - y^3"], &["x", "y", "u"]);
        assert_eq!(invariant_of(&base), invariant_of(&pulled));
    }

    #[test]
    fn multi_generator_ideal() {
        // Non-reduced input is accepted as-is.
        let r = run(&["x", "y^2"], &["x", "y"]);
        assert_eq!(invariant_of(&r), vec![rat_int(1), rat_int(2)]);
    }
}
