//! Small-scale global computations: a Buchberger Gröbner engine,
//! unit-ideal tests, maximal order, stratum ideals A(a_1..a_j; b), and
//! invariant-at-point sampling.

use crate::core_algebra::{Ideal, MultiIndex, PointQ, Polynomial, Rat, TruncatedSeries};
use crate::error::{Error, Result};
use crate::method_two::{derive_ideal, invariant_value_m2, prune_gens};
use crate::weighting::{delta, simplex_points, InvariantValue};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Desk-scale guard: at most 4 variables and generator degree at most 12.
fn guard(gens: &[Polynomial]) -> Result<()> {
    let nvars = gens.first().map_or(0, |g| g.nvars());
    if nvars > 4 {
        return Err(Error::TooLarge(format!("{} variables (max 4)", nvars)));
    }
    for g in gens {
        if let Some(d) = g.total_degree() {
            if d > 12 {
                return Err(Error::TooLarge(format!("degree {} (max 12)", d)));
            }
        }
    }
    Ok(())
}

/// Graded reverse lexicographic order: higher total degree wins; on equal
/// degree the exponent vector whose last nonzero difference entry is
/// negative is the greater one.
pub fn cmp_grevlex(a: &MultiIndex, b: &MultiIndex) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        let (ea, eb) = (a.get(i), b.get(i));
        if ea != eb {
            return if ea < eb {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
    }
    Ordering::Equal
}

fn leading_term(f: &Polynomial) -> Option<(MultiIndex, Rat)> {
    f.terms()
        .max_by(|(m1, _), (m2, _)| cmp_grevlex(m1, m2))
        .map(|(m, c)| (m.clone(), c.clone()))
}

/// Fully reduce f modulo the basis: repeatedly cancel the grevlex-greatest
/// term divisible by some leading term.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let lts: Vec<(MultiIndex, Rat)> = basis.iter().filter_map(leading_term).collect();
    let mut r = f.clone();
    'outer: loop {
        let mut terms: Vec<(MultiIndex, Rat)> =
            r.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(m1, _), (m2, _)| cmp_grevlex(m2, m1));
        for (m, c) in terms {
            for (i, (lt, lc)) in lts.iter().enumerate() {
                if m.dominates(lt) {
                    let shift = m.checked_sub(lt).unwrap();
                    let factor = Polynomial::monomial(r.vars(), shift, c.clone() / lc);
                    r = r.sub(&factor.mul(&basis[i]));
                    continue 'outer;
                }
            }
        }
        return r;
    }
}

/// Reduced Gröbner basis with respect to grevlex.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub generators: Vec<Polynomial>,
    pub order: &'static str,
    pub reduced: bool,
}

/// Buchberger's algorithm followed by inter-reduction. Deterministic: pairs
/// are processed in insertion order and the final basis is sorted by
/// leading term.
pub fn buchberger(ideal: &Ideal) -> Result<GroebnerBasis> {
    let gens: Vec<Polynomial> = ideal
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.body.clone())
        .collect();
    guard(&gens)?;
    if gens.is_empty() {
        return Ok(GroebnerBasis {
            generators: vec![],
            order: "grevlex",
            reduced: true,
        });
    }
    let mut basis = gens;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    let mut cursor = 0;
    while cursor < pairs.len() {
        let (i, j) = pairs[cursor];
        cursor += 1;
        let (lti, ci) = leading_term(&basis[i]).unwrap();
        let (ltj, cj) = leading_term(&basis[j]).unwrap();
        // Coprime leading monomials reduce to zero (first Buchberger
        // criterion).
        let lcm = lti.lcm(&ltj);
        if lcm == lti.add(&ltj) {
            continue;
        }
        let mi = lcm.checked_sub(&lti).unwrap();
        let mj = lcm.checked_sub(&ltj).unwrap();
        let spoly = Polynomial::monomial(basis[i].vars(), mi, Rat::one() / ci)
            .mul(&basis[i])
            .sub(&Polynomial::monomial(basis[j].vars(), mj, Rat::one() / cj).mul(&basis[j]));
        let red = normal_form(&spoly, &basis);
        if !red.is_zero() {
            let newi = basis.len();
            for k in 0..newi {
                pairs.push((k, newi));
            }
            basis.push(red);
            if basis.len() > 200 {
                return Err(Error::TooLarge("Groebner basis blow-up".into()));
            }
        }
    }
    // Minimalize: drop generators whose leading term is divisible by
    // another's.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (lti, _) = leading_term(&basis[i]).unwrap();
        for j in 0..basis.len() {
            if i != j && keep[j] {
                let (ltj, _) = leading_term(&basis[j]).unwrap();
                if lti.dominates(&ltj) && lti != ltj {
                    keep[i] = false;
                    break;
                }
                if lti == ltj && j < i {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // Inter-reduce tails and normalize leading coefficients.
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = normal_form(&minimal[i], &others);
        if !r.is_zero() {
            let (_, lc) = leading_term(&r).unwrap();
            reduced.push(r.scale(&(Rat::one() / lc)));
        }
    }
    reduced.sort_by(|a, b| {
        let (la, _) = leading_term(a).unwrap();
        let (lb, _) = leading_term(b).unwrap();
        cmp_grevlex(&la, &lb)
    });
    Ok(GroebnerBasis {
        generators: reduced,
        order: "grevlex",
        reduced: true,
    })
}

/// True iff the reduced basis is {1}.
pub fn is_unit_ideal(ideal: &Ideal) -> Result<bool> {
    let gb = buchberger(ideal)?;
    Ok(gb.generators.len() == 1 && gb.generators[0] == Polynomial::one(&ideal.vars))
}

fn gens_to_ideal(vars: &[String], gens: &[TruncatedSeries]) -> Ideal {
    if gens.is_empty() {
        return Ideal::from_series(
            vars.to_vec(),
            vec![TruncatedSeries::exact(Polynomial::zero(vars))],
        );
    }
    Ideal::from_series(vars.to_vec(), gens.to_vec())
}

/// Maximal order of vanishing over all points: the least m with
/// D^{≤m}I = (1) globally.
pub fn max_order(ideal: &Ideal) -> Result<u32> {
    let polys: Vec<Polynomial> = ideal.gens.iter().map(|g| g.body.clone()).collect();
    guard(&polys)?;
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens: Vec<TruncatedSeries> = ideal.gens.clone();
    for m in 0..=64u32 {
        let d = derive_ideal(&gens, m);
        if is_unit_ideal(&gens_to_ideal(&ideal.vars, &d))? {
            if m == 0 {
                return Err(Error::UnitIdeal);
            }
            return Ok(m);
        }
    }
    Err(Error::TooLarge("order exceeds 64".into()))
}

/// Global search state: accepted parameters are required to be literal
/// coordinates, which covers the worked examples; anything needing genuine
/// chart refinement falls back to point sampling.
pub struct GlobalRun {
    pub vars: Vec<String>,
    pub gens: Vec<TruncatedSeries>,
    /// Coordinate slots of the accepted parameters, in acceptance order.
    pub param_slots: Vec<usize>,
    pub entries: Vec<Rat>,
}

impl GlobalRun {
    pub fn new(ideal: &Ideal) -> Result<Self> {
        let polys: Vec<Polynomial> = ideal.gens.iter().map(|g| g.body.clone()).collect();
        guard(&polys)?;
        Ok(GlobalRun {
            vars: ideal.vars.clone(),
            gens: ideal.gens.clone(),
            param_slots: Vec::new(),
            entries: Vec::new(),
        })
    }

    /// D[β] with global restrictions along the accepted coordinate slots.
    fn bracket(&self, beta: &[u32]) -> Vec<TruncatedSeries> {
        let mut cur = derive_ideal(&self.gens, beta[0]);
        for (l, &b) in beta.iter().enumerate().skip(1) {
            let slot = self.param_slots[l - 1];
            let sliced: Vec<TruncatedSeries> = cur
                .iter()
                .map(|g| g.kill_vars(&[slot]))
                .filter(|g| !g.is_zero())
                .collect();
            cur = derive_ideal(&sliced, b);
        }
        cur
    }

    /// The stratum ideal A(a_1..a_j; b) = ( D[β] : l(β) = j+1, Ξ(β) < b ).
    pub fn stratum_ideal(&self, b: &Rat) -> Vec<TruncatedSeries> {
        let mut gens = Vec::new();
        for prefix in simplex_points(&self.entries) {
            let rem = Rat::one() - delta(&self.entries, &prefix);
            // β_{j+1} < b · (1 − Δ) strictly.
            let cap = b.clone() * &rem;
            let mut last = 0u32;
            loop {
                let v = Rat::from_integer(BigInt::from(last));
                if v >= cap {
                    break;
                }
                let mut beta = prefix.entries().to_vec();
                beta.push(last);
                gens.extend(self.bracket(&beta));
                last += 1;
            }
        }
        prune_gens(gens)
    }

    /// Unit test on V(x_1..x_j): kill the accepted coordinates, then take a
    /// Gröbner basis.
    fn unit_on_slice(&self, gens: &[TruncatedSeries]) -> Result<bool> {
        let sliced: Vec<TruncatedSeries> = gens
            .iter()
            .map(|g| g.kill_vars(&self.param_slots))
            .filter(|g| !g.is_zero())
            .collect();
        if sliced.is_empty() {
            return Ok(false);
        }
        is_unit_ideal(&gens_to_ideal(&self.vars, &sliced))
    }

    /// Globally admissible: every length-j bracket over the Δ < 1 simplex
    /// restricts to the zero ideal on the last accepted coordinate slice.
    fn admissible(&self) -> bool {
        if self.param_slots.is_empty() {
            return false;
        }
        let last = *self.param_slots.last().unwrap();
        for prefix in simplex_points(&self.entries) {
            let bracket = self.bracket(prefix.entries());
            for g in bracket {
                if !g.kill_vars(&[last]).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Next entry of the global maximal invariant:
    /// max{b : A(a_1..a_j; b) != (1) on V(x_1..x_j)}, swept over the
    /// candidate set Γ(a_1..a_j). Unit-ness is monotone in b, so the sweep
    /// stops at the first unit level. Returns (entry, first unit level).
    pub fn next_entry(&self) -> Result<(Rat, Rat)> {
        let start: Rat = self.entries.last().cloned().unwrap_or_else(Rat::one);
        let mut window = (start.clone() + Rat::one()) * Rat::from_integer(BigInt::from(2));
        let mut best: Option<Rat> = None;
        for _ in 0..16 {
            for b in gamma_candidates(&self.entries, &start, &window) {
                if best.as_ref().map_or(false, |prev| b <= *prev) {
                    continue;
                }
                let a = self.stratum_ideal(&b);
                if self.unit_on_slice(&a)? {
                    let best =
                        best.ok_or_else(|| Error::InvariantViolation("no stratum level".into()))?;
                    return Ok((best, b));
                }
                best = Some(b);
            }
            window *= Rat::from_integer(BigInt::from(2));
        }
        Err(Error::TooLarge("stratum sweep did not terminate".into()))
    }

    /// Maximal-contact lift for the found entry: gathered from the brackets
    /// D[(β_1..β_j, β_{j+1}-1)] over all minimizing β. The lift must be a
    /// plain coordinate here; anything else is genuine chart refinement.
    pub fn accept_entry(&mut self, value: Rat) -> Result<()> {
        let mut contact: Option<usize> = None;
        'search: for prefix in simplex_points(&self.entries) {
            let rem = Rat::one() - delta(&self.entries, &prefix);
            let need = value.clone() * &rem;
            // Ξ(prefix, b) = value needs integral b = value·(1-Δ).
            if !need.denom().is_one() || !need.is_positive() {
                continue;
            }
            let b: u32 = match need.to_integer().try_into() {
                Ok(v) => v,
                Err(_) => continue,
            };
            if b == 0 {
                continue;
            }
            let mut beta = prefix.entries().to_vec();
            beta.push(b - 1);
            for g in self.bracket(&beta) {
                let lin = g.body.linear_part();
                for (slot, c) in lin.iter().enumerate() {
                    if c.is_zero() || self.param_slots.contains(&slot) {
                        continue;
                    }
                    // Plain coordinate check: x_slot on the nose, up to unit.
                    let coord = Polynomial::var(&self.vars, slot);
                    if g.body.scale(&(Rat::one() / c.clone())) == coord {
                        contact = Some(slot);
                        break 'search;
                    }
                }
            }
        }
        let slot = contact.ok_or_else(|| {
            Error::TooLarge("global maximal contact is not a coordinate; falling back".into())
        })?;
        self.param_slots.push(slot);
        self.entries.push(value);
        Ok(())
    }
}

fn gamma_candidates(a: &[Rat], start: &Rat, window: &Rat) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    for beta in simplex_points(a) {
        let rem = Rat::one() - delta(a, &beta);
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

/// The global maximal invariant computed from stratum ideals, with the
/// coordinate slots realizing it. Errors with `TooLarge` whenever the run
/// leaves the guarded regime; callers then fall back to point sampling.
pub fn global_maxinv(ideal: &Ideal) -> Result<(Vec<Rat>, Vec<usize>)> {
    let mut run = GlobalRun::new(ideal)?;
    let n = ideal.nvars();
    loop {
        if run.admissible() {
            return Ok((run.entries.clone(), run.param_slots.clone()));
        }
        if run.entries.len() == n {
            return Err(Error::InvariantViolation(
                "not admissible at full length".into(),
            ));
        }
        let (value, _flip) = run.next_entry()?;
        run.accept_entry(value)?;
    }
}

/// Invariant at a rational point: translate and run the derivative method.
pub fn invariant_at_point(ideal: &Ideal, p: &PointQ) -> Result<InvariantValue> {
    invariant_value_m2(ideal, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_algebra::{rat_int, Trunc};
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

    #[test]
    fn buchberger_examples() {
        // Already reduced.
        let id = ideal(&["x", "y^2", "y*z"], &["x", "y", "z"]);
        let gb = buchberger(&id).unwrap();
        let texts: Vec<String> = gb.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(texts, vec!["x", "y*z", "y^2"]);
        // One S-polynomial reduction.
        let id = ideal(&["x^2 - y^2*z", "x"], &["x", "y", "z"]);
        let gb = buchberger(&id).unwrap();
        let texts: Vec<String> = gb.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(texts, vec!["x", "y^2*z"]);
        // One variable, shifted unit root.
        let id = ideal(&["x - 1"], &["x"]);
        let gb = buchberger(&id).unwrap();
        assert_eq!(gb.generators.len(), 1);
        assert!(!is_unit_ideal(&id).unwrap());
    }

    #[test]
    fn buchberger_spolys_reduce_to_zero() {
        let id = ideal(&["x^2 + y", "x*y - 1"], &["x", "y"]);
        let gb = buchberger(&id).unwrap();
        for i in 0..gb.generators.len() {
            for j in 0..i {
                let (lti, ci) = super::leading_term(&gb.generators[i]).unwrap();
                let (ltj, cj) = super::leading_term(&gb.generators[j]).unwrap();
                let lcm = lti.lcm(&ltj);
                let mi = lcm.checked_sub(&lti).unwrap();
                let mj = lcm.checked_sub(&ltj).unwrap();
                let s = Polynomial::monomial(gb.generators[i].vars(), mi, Rat::one() / ci)
                    .mul(&gb.generators[i])
                    .sub(
                        &Polynomial::monomial(gb.generators[j].vars(), mj, Rat::one() / cj)
                            .mul(&gb.generators[j]),
                    );
                assert!(normal_form(&s, &gb.generators).is_zero());
            }
        }
        // Normal form is idempotent.
        let f = parse_poly("x^3*y + x", &vars(&["x", "y"])).unwrap();
        let nf = normal_form(&f, &gb.generators);
        assert_eq!(nf, normal_form(&nf, &gb.generators));
    }

    #[test]
    fn unit_ideal_tests() {
        let whitney = ideal(&["x^2 - y^2*z"], &["x", "y", "z"]);
        let d1 = derive_ideal(&whitney.gens, 1);
        assert!(!is_unit_ideal(&gens_to_ideal(&whitney.vars, &d1)).unwrap());
        let d2 = derive_ideal(&whitney.gens, 2);
        assert!(is_unit_ideal(&gens_to_ideal(&whitney.vars, &d2)).unwrap());
        let zero = Ideal::from_series(
            vars(&["x"]),
            vec![TruncatedSeries::new(
                Polynomial::zero(&vars(&["x"])),
                Trunc::Exact,
            )],
        );
        assert!(!is_unit_ideal(&zero).unwrap());
    }

    #[test]
    fn max_order_examples() {
        assert_eq!(
            max_order(&ideal(&["x^2 - y^2*z"], &["x", "y", "z"])).unwrap(),
            2
        );
        assert_eq!(
            max_order(&ideal(&["x^4 + y^5 + z^6"], &["x", "y", "z"])).unwrap(),
            4
        );
        assert_eq!(max_order(&ideal(&["x"], &["x", "y"])).unwrap(), 1);
        assert!(matches!(
            max_order(&ideal(&["x"], &["a", "b", "c", "d", "x"])),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn whitney_stratum_flip() {
        let id = ideal(&["x^2 - y^2*z"], &["x", "y", "z"]);
        let mut run = GlobalRun::new(&id).unwrap();
        // First entry: the stratum sweep reproduces the maximal order.
        let (a1, _) = run.next_entry().unwrap();
        assert_eq!(a1, rat_int(2));
        run.accept_entry(a1).unwrap();
        assert_eq!(run.param_slots, vec![0]);
        // A(2; b) stays proper through b = 3 and flips above it.
        let (a2, flip) = run.next_entry().unwrap();
        assert_eq!(a2, rat_int(3));
        assert_eq!(flip, rat_int(4));
        run.accept_entry(a2).unwrap();
        assert_eq!(run.param_slots, vec![0, 1]);
        let (a3, _) = run.next_entry().unwrap();
        assert_eq!(a3, rat_int(3));
        run.accept_entry(a3).unwrap();
        assert!(run.admissible());
    }

    #[test]
    fn comparison_stratum_flip() {
        let id = ideal(&["x^4 + y^5 + z^6"], &["x", "y", "z"]);
        let mut run = GlobalRun::new(&id).unwrap();
        let (a1, _) = run.next_entry().unwrap();
        assert_eq!(a1, rat_int(4));
        run.accept_entry(a1).unwrap();
        let (a2, _) = run.next_entry().unwrap();
        assert_eq!(a2, rat_int(5));
    }

    #[test]
    fn global_maxinv_examples() {
        let (inv, slots) = global_maxinv(&ideal(&["x^2 - y^2*z"], &["x", "y", "z"])).unwrap();
        assert_eq!(inv, vec![rat_int(2), rat_int(3), rat_int(3)]);
        assert_eq!(slots, vec![0, 1, 2]);
        let (inv, _) = global_maxinv(&ideal(&["x^2 - y^3"], &["x", "y"])).unwrap();
        assert_eq!(inv, vec![rat_int(2), rat_int(3)]);
        let (inv, _) = global_maxinv(&ideal(&["x^4 + y^5 + z^6"], &["x", "y", "z"])).unwrap();
        assert_eq!(inv, vec![rat_int(4), rat_int(5), rat_int(6)]);
    }

    #[test]
    fn whitney_point_sampling() {
        let id = ideal(&["x^2 - y^2*z"], &["x", "y", "z"]);
        let at = |p: Vec<i64>| {
            invariant_at_point(&id, &PointQ::new(p.into_iter().map(rat_int).collect())).unwrap()
        };
        assert_eq!(
            at(vec![0, 0, 1]),
            InvariantValue::Inv(vec![rat_int(2), rat_int(2)])
        );
        assert_eq!(
            at(vec![0, 0, -2]),
            InvariantValue::Inv(vec![rat_int(2), rat_int(2)])
        );
        assert_eq!(at(vec![1, 1, 1]), InvariantValue::Inv(vec![rat_int(1)]));
        assert_eq!(
            at(vec![0, 0, 0]),
            InvariantValue::Inv(vec![rat_int(2), rat_int(3), rat_int(3)])
        );
        // Off the variety: rejected.
        assert!(matches!(
            invariant_at_point(&id, &PointQ::new(vec![rat_int(1), rat_int(0), rat_int(0)])),
            Err(Error::PointNotOnVariety)
        ));
    }

    #[test]
    fn upper_semicontinuity_along_singular_line() {
        // Along V(x,y) the invariant is constant (2,2) except at the origin
        // where it is (2,3,3); off the line it drops to (1).
        let id = ideal(&["x^2 - y^2*z"], &["x", "y", "z"]);
        for z in [-3i64, -1, 1, 2, 5] {
            let inv = invariant_at_point(
                &id,
                &PointQ::new(vec![rat_int(0), rat_int(0), rat_int(z)]),
            )
            .unwrap();
            assert_eq!(inv, InvariantValue::Inv(vec![rat_int(2), rat_int(2)]));
        }
        let off = invariant_at_point(
            &id,
            &PointQ::new(vec![rat_int(2), rat_int(2), rat_int(1)]),
        )
        .unwrap();
        assert_eq!(off, InvariantValue::Inv(vec![rat_int(1)]));
    }

    #[test]
    fn global_vs_point_consistency() {
        // The stratum-derived maximal invariant equals the best sampled
        // point invariant on the acceptance examples.
        for (texts, vs, samples) in [
            (
                vec!["x^2 - y^2*z"],
                vec!["x", "y", "z"],
                vec![vec![0i64, 0, 0], vec![0, 0, 1], vec![1, 1, 1]],
            ),
            (
                vec!["x^2 - y^3"],
                vec!["x", "y"],
                vec![vec![0, 0], vec![1, 1]],
            ),
        ] {
            let id = ideal(&texts, &vs);
            let (ginv, _) = global_maxinv(&id).unwrap();
            let mut best: Option<InvariantValue> = None;
            for s in samples {
                let p = PointQ::new(s.into_iter().map(rat_int).collect());
                if id.gens.iter().all(|g| g.body.eval(&p).is_zero()) {
                    let inv = invariant_at_point(&id, &p).unwrap();
                    best = Some(match best {
                        None => inv,
                        Some(b) => {
                            if crate::weighting::compare_inv(&inv, &b) == Ordering::Greater {
                                inv
                            } else {
                                b
                            }
                        }
                    });
                }
            }
            assert_eq!(best.unwrap(), InvariantValue::Inv(ginv));
        }
    }
}
