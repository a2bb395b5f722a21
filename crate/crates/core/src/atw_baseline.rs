//! The coefficient-ideal construction of the prior resolution algorithm,
//! with exact factorial-exponent tracking, plus the σ simplex-size bound.
//! This is the benchmark baseline the derivative-ideal method is compared
//! against.

use crate::core_algebra::{
    invert_etale_change, substitute_series, Ideal, MultiIndex, PointQ, Polynomial, Rat, Trunc,
    TruncatedSeries,
};
use crate::error::{Error, Result};
use crate::method_two::{derive_ideal, maximal_contact, prune_gens};
use crate::weighting::delta;
use crate::work;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

/// Expansion policy for powered summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionMode {
    /// Materialize every power; errors when an exponent exceeds the cap.
    Full,
    /// Track (base ideal, exponent) pairs; orders of sums are minima and
    /// orders of powers scale by the exponent, which is all the b-sequence
    /// needs.
    OrderOnly,
}

/// Exponent cap for materialization. The prior algorithm's exponents grow
/// factorially and computer algebra systems error out on them; the cap is
/// where this artifact draws the same line.
pub const EXPONENT_CAP: u64 = 64;

/// Sum of powered ideals Σ (base_s)^{e_s} with exact big-integer exponents.
#[derive(Debug, Clone)]
pub struct PoweredIdealSum {
    pub summands: Vec<(Vec<TruncatedSeries>, BigUint)>,
    pub mode: ExpansionMode,
}

impl PoweredIdealSum {
    pub fn is_zero(&self) -> bool {
        self.summands
            .iter()
            .all(|(base, _)| base.iter().all(|g| g.is_zero()))
    }

    /// min over summands of exponent · ord(base) at the origin.
    pub fn order_at_origin(&self) -> Option<BigUint> {
        self.summands
            .iter()
            .filter_map(|(base, e)| {
                base.iter()
                    .filter_map(|g| g.body.order_at_origin())
                    .min()
                    .map(|o| e * BigUint::from(o))
            })
            .min()
    }

    /// Expand every summand into a plain generator list. Fails above the
    /// exponent cap.
    pub fn materialize(&self) -> Result<Vec<TruncatedSeries>> {
        let mut out = Vec::new();
        for (base, e) in &self.summands {
            let e64 = e.to_u64().filter(|e| *e <= EXPONENT_CAP);
            let Some(e64) = e64 else {
                return Err(Error::ExponentOverflow);
            };
            out.extend(ideal_power(base, e64 as u32));
        }
        Ok(prune_gens(out))
    }
}

/// Generators of (g_1,…,g_r)^e: products of e generators with repetition,
/// enumerated by non-decreasing factor index so each multiset appears once.
fn ideal_power(base: &[TruncatedSeries], e: u32) -> Vec<TruncatedSeries> {
    if base.is_empty() {
        return Vec::new();
    }
    if e == 0 {
        return vec![TruncatedSeries::exact(Polynomial::one(base[0].body.vars()))];
    }
    // acc holds (product, least allowed next factor index).
    let mut acc: Vec<(TruncatedSeries, usize)> =
        base.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
    for _ in 1..e {
        let mut next = Vec::new();
        for (prod, lo) in &acc {
            for (i, g) in base.iter().enumerate().skip(*lo) {
                next.push((prod.mul(g), i));
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(g, _)| g).collect()
}

fn factorial(n: u64) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= BigUint::from(i);
    }
    f
}

/// The b-th coefficient ideal C(I, b) = Σ_{i=0}^{b-1} (D^{≤i}I)^{b!/(b-i)}.
/// The exponents are always taken from the current order b; the worked
/// comparison labels its first coefficient ideal C(I,3) while displaying
/// exactly these b = 4 exponents.
pub fn coefficient_ideal(
    gens: &[TruncatedSeries],
    b: u64,
    mode: ExpansionMode,
) -> Result<PoweredIdealSum> {
    if b == 0 {
        return Err(Error::InvariantViolation(
            "coefficient ideal needs b >= 1".into(),
        ));
    }
    let bfact = factorial(b);
    let mut summands = Vec::new();
    for i in 0..b {
        let e = &bfact / BigUint::from(b - i);
        work::count_atw_exponent(&e);
        if mode == ExpansionMode::Full && e.to_u64().map_or(true, |v| v > EXPONENT_CAP) {
            return Err(Error::ExponentOverflow);
        }
        let d = derive_ideal(gens, i as u32);
        summands.push((d, e));
    }
    let sum = PoweredIdealSum { summands, mode };
    if mode == ExpansionMode::Full {
        let flat = sum.materialize()?;
        return Ok(PoweredIdealSum {
            summands: vec![(flat, BigUint::one())],
            mode,
        });
    }
    Ok(sum)
}

/// Result of the baseline run: the exploding b-sequence, the recovered
/// a-sequence, and the chosen parameters in user coordinates.
#[derive(Debug, Clone)]
pub struct AtwResult {
    pub b_seq: Vec<BigUint>,
    pub a_seq: Vec<Rat>,
    pub params: Vec<Polynomial>,
}

enum AtwIdeal {
    Plain(Vec<TruncatedSeries>),
    Powered(PoweredIdealSum),
}

impl AtwIdeal {
    fn order(&self) -> Option<BigUint> {
        match self {
            AtwIdeal::Plain(gens) => gens
                .iter()
                .filter_map(|g| g.body.order_at_origin())
                .min()
                .map(BigUint::from),
            AtwIdeal::Powered(p) => p.order_at_origin(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            AtwIdeal::Plain(gens) => gens.iter().all(|g| g.is_zero()),
            AtwIdeal::Powered(p) => p.is_zero(),
        }
    }
}

/// The associated-centre construction by coefficient ideals: b_1 = ord_p I,
/// I[j+1] = C(I[j], b_j)|_{V(x_j)}, stop at I[k+1] = (0), and
/// a_j = b_j / ((b_{j-1}-1)! ⋯ (b_1-1)!).
pub fn atw_centre(ideal: &Ideal, p: &PointQ, mode: ExpansionMode) -> Result<AtwResult> {
    let n = ideal.nvars();
    let mut vars = ideal.vars.clone();
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in &ideal.gens {
        if !g.body.eval(p).is_zero() {
            return Err(Error::PointNotOnVariety);
        }
        let t = g.body.translate_to_origin(p);
        if !t.is_zero() {
            gens.push(t);
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
    let t_work = maxdeg + 2;
    let mut current = AtwIdeal::Plain(
        gens.iter()
            .map(|g| TruncatedSeries::exact(g.clone()))
            .collect(),
    );
    let mut to_orig: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&vars, i)).collect();
    let mut b_seq: Vec<BigUint> = Vec::new();
    let mut a_seq: Vec<Rat> = Vec::new();
    let mut params: Vec<Polynomial> = Vec::new();

    for j in 0..n {
        if current.is_zero() {
            break;
        }
        let b = current.order().ok_or(Error::ZeroIdeal)?;
        if b.is_zero() {
            return Err(Error::UnitIdeal);
        }
        let mut denom = BigUint::one();
        for prev in &b_seq {
            denom *= factorial((prev - BigUint::one()).to_u64().ok_or_else(|| {
                Error::TooLarge("factorial denominator exceeds u64".into())
            })?);
        }
        let a = Rat::new(BigInt::from(b.clone()), BigInt::from(denom));
        // Parameter: maximal contact of the relevant derivative factor.
        let contact = match &current {
            AtwIdeal::Plain(g) => {
                let ord = b.to_u64().ok_or(Error::ExponentOverflow)? as u32;
                maximal_contact(&derive_ideal(g, ord - 1))?
            }
            AtwIdeal::Powered(ps) => {
                let (base, ord) = ps
                    .summands
                    .iter()
                    .filter_map(|(base, e)| {
                        base.iter()
                            .filter_map(|g| g.body.order_at_origin())
                            .min()
                            .map(|o| (base, o, e * BigUint::from(o)))
                    })
                    .min_by_key(|(_, _, v)| v.clone())
                    .map(|(base, o, _)| (base.clone(), o))
                    .ok_or(Error::ZeroIdeal)?;
                maximal_contact(&derive_ideal(&base, ord - 1))?
            }
        };
        b_seq.push(b.clone());
        a_seq.push(a);
        // Install the contact element as coordinate j.
        let lin = contact.linear_part();
        let l = (j..n).find(|&i| !lin[i].is_zero()).ok_or_else(|| {
            Error::InvariantViolation("contact has no linear term in the remaining slots".into())
        })?;
        let param = contact.scale(&(Rat::one() / lin[l].clone()));
        swap_everywhere(&mut current, &mut vars, &mut to_orig, j, l);
        let param = param.swap_slots(j, l);
        let new_coord_orig = param.eval_poly(&to_orig, Trunc::Exact);
        let sigma = invert_etale_change(&vars, j, &param, t_work)?;
        apply_change(&mut current, &sigma)?;
        to_orig[j] = new_coord_orig;
        params.push(to_orig[j].translate_to_origin(&p.neg()));

        // Next ideal: C(I[j], b_j) restricted to the new coordinate slice.
        if j + 1 == n {
            // All coordinates consumed: the generators are powers of the
            // last coordinate alone, so every derivative of order below b
            // vanishes on its slice and I[n+1] = (0).
            current = AtwIdeal::Plain(vec![TruncatedSeries::exact(Polynomial::zero(&vars))]);
            continue;
        }
        let plain = match &current {
            AtwIdeal::Plain(g) => g.clone(),
            AtwIdeal::Powered(ps) => ps.materialize().map_err(|_| {
                Error::TooLarge("order-only continuation would need a power above the cap".into())
            })?,
        };
        let b64 = b.to_u64().ok_or(Error::ExponentOverflow)?;
        let coeff = coefficient_ideal(&plain, b64, mode)?;
        let restricted = PoweredIdealSum {
            summands: coeff
                .summands
                .iter()
                .map(|(base, e)| {
                    let sliced: Vec<TruncatedSeries> = base
                        .iter()
                        .map(|g| g.kill_vars(&[j]))
                        .filter(|g| !g.is_zero())
                        .collect();
                    (sliced, e.clone())
                })
                .filter(|(base, _)| !base.is_empty())
                .collect(),
            mode,
        };
        current = AtwIdeal::Powered(restricted);
    }

    Ok(AtwResult {
        b_seq,
        a_seq,
        params,
    })
}

fn swap_everywhere(
    current: &mut AtwIdeal,
    vars: &mut [String],
    to_orig: &mut [Polynomial],
    a: usize,
    b: usize,
) {
    if a == b {
        return;
    }
    match current {
        AtwIdeal::Plain(gens) => {
            for g in gens.iter_mut() {
                *g = TruncatedSeries::new(g.body.swap_slots(a, b), g.trunc);
            }
        }
        AtwIdeal::Powered(ps) => {
            for (base, _) in ps.summands.iter_mut() {
                for g in base.iter_mut() {
                    *g = TruncatedSeries::new(g.body.swap_slots(a, b), g.trunc);
                }
            }
        }
    }
    vars.swap(a, b);
    to_orig.swap(a, b);
}

fn apply_change(
    current: &mut AtwIdeal,
    sigma: &crate::core_algebra::SubstitutionMap,
) -> Result<()> {
    match current {
        AtwIdeal::Plain(gens) => {
            for g in gens.iter_mut() {
                *g = substitute_series(g, sigma)?;
            }
        }
        AtwIdeal::Powered(ps) => {
            for (base, _) in ps.summands.iter_mut() {
                for g in base.iter_mut() {
                    *g = substitute_series(g, sigma)?;
                }
            }
        }
    }
    Ok(())
}

/// σ(a_1,…,a_j): the number of multi-indices β of length j with Δ(β) < 1,
/// by recursive enumeration.
pub fn simplex_size(a: &[Rat]) -> u64 {
    fn rec(a: &[Rat], slot: usize, used: Rat) -> u64 {
        if slot == a.len() {
            return 1;
        }
        let mut count = 0;
        let mut b = 0u32;
        loop {
            let d = used.clone() + Rat::from_integer(BigInt::from(b)) / &a[slot];
            if d >= Rat::one() {
                break;
            }
            count += rec(a, slot + 1, d);
            b += 1;
        }
        count
    }
    rec(a, 0, Rat::zero())
}

/// Upper bound σ(a) ≤ Σ_{A ⊆ {1..j}} (1/|A|!) Π_{l∈A} a_l.
pub fn sigma_bound(a: &[Rat]) -> Rat {
    let j = a.len();
    let mut total = Rat::zero();
    for mask in 0u32..(1 << j) {
        let size = mask.count_ones() as u64;
        let mut prod = Rat::one();
        for (l, al) in a.iter().enumerate() {
            if mask & (1 << l) != 0 {
                prod *= al;
            }
        }
        total += prod / Rat::from_integer(BigInt::from(factorial(size)));
    }
    total
}

/// Render a b-value compactly, recognizing m·k! shapes the way the worked
/// example reports them.
pub fn display_b(b: &BigUint) -> String {
    let million = BigUint::from(1_000_000u64);
    if b < &million {
        return b.to_string();
    }
    let mut k = 2u64;
    let mut best: Option<(BigUint, u64)> = None;
    loop {
        let f = factorial(k);
        if &f > b {
            break;
        }
        if (b % &f).is_zero() {
            let q = b / &f;
            if q < million {
                best = Some((q, k));
            }
        }
        k += 1;
    }
    match best {
        Some((q, k)) => format!("{}*{}!", q, k),
        None => b.to_string(),
    }
}

#[allow(dead_code)]
fn _delta_is_shared(a: &[Rat], m: &MultiIndex) -> Rat {
    delta(a, m)
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

    fn series(text: &str, vs: &[&str]) -> TruncatedSeries {
        TruncatedSeries::exact(parse_poly(text, &vars(vs)).unwrap())
    }

    #[test]
    fn coefficient_ideal_exponents() {
        // b = 4 gives exponents 4!/(4-i) = (6, 8, 12, 24).
        let g = [series("x^4 + y^5 + z^6", &["x", "y", "z"])];
        let c = coefficient_ideal(&g, 4, ExpansionMode::OrderOnly).unwrap();
        let exps: Vec<u64> = c
            .summands
            .iter()
            .map(|(_, e)| e.to_u64().unwrap())
            .collect();
        assert_eq!(exps, vec![6, 8, 12, 24]);
        // b = 1: single summand with exponent 1!/(1-0) = 1.
        let c = coefficient_ideal(&g, 1, ExpansionMode::OrderOnly).unwrap();
        assert_eq!(c.summands.len(), 1);
        assert_eq!(c.summands[0].1, BigUint::one());
    }

    #[test]
    fn coefficient_ideal_restricted_order() {
        // The restricted expansion has the same order (30) as the displayed
        // simplified ideal ((y^5+z^6)^6, y^32, z^40); the displayed identity
        // holds at the level of orders, which is what the b-sequence uses.
        let g = [series("x^4 + y^5 + z^6", &["x", "y", "z"])];
        let c = coefficient_ideal(&g, 4, ExpansionMode::OrderOnly).unwrap();
        let restricted_ord = c
            .summands
            .iter()
            .filter_map(|(base, e)| {
                base.iter()
                    .filter_map(|g| g.kill_vars(&[0]).body.order_at_origin())
                    .min()
                    .map(|o| e * BigUint::from(o))
            })
            .min()
            .unwrap();
        assert_eq!(restricted_ord, BigUint::from(30u32));
        let displayed = [
            series("(y^5 + z^6)^6", &["y", "z"]),
            series("y^32", &["y", "z"]),
            series("z^40", &["y", "z"]),
        ];
        let displayed_ord = displayed
            .iter()
            .filter_map(|g| g.body.order_at_origin())
            .min()
            .unwrap();
        assert_eq!(displayed_ord, 30);
    }

    #[test]
    fn atw_comparison_example() {
        let id = ideal(&["x^4 + y^5 + z^6"], &["x", "y", "z"]);
        let r = atw_centre(&id, &PointQ::origin(3), ExpansionMode::OrderOnly).unwrap();
        let b3 = BigUint::from(36u32) * factorial(29);
        assert_eq!(
            r.b_seq,
            vec![BigUint::from(4u32), BigUint::from(30u32), b3.clone()]
        );
        assert_eq!(r.a_seq, vec![rat_int(4), rat_int(5), rat_int(6)]);
        assert_eq!(display_b(&b3), "36*29!");
        // Full-expansion mode hits the factorial wall.
        assert!(matches!(
            atw_centre(&id, &PointQ::origin(3), ExpansionMode::Full),
            Err(Error::ExponentOverflow)
        ));
    }

    #[test]
    fn atw_cusp_and_smooth() {
        let id = ideal(&["x^2 - y^3"], &["x", "y"]);
        let r = atw_centre(&id, &PointQ::origin(2), ExpansionMode::Full).unwrap();
        assert_eq!(r.b_seq, vec![BigUint::from(2u32), BigUint::from(3u32)]);
        assert_eq!(r.a_seq, vec![rat_int(2), rat_int(3)]);
        let id = ideal(&["x"], &["x", "y"]);
        let r = atw_centre(&id, &PointQ::origin(2), ExpansionMode::Full).unwrap();
        assert_eq!(r.b_seq, vec![BigUint::one()]);
        assert_eq!(r.a_seq, vec![rat_int(1)]);
    }

    #[test]
    fn atw_whitney_full_mode() {
        let id = ideal(&["x^2 - y^2*z"], &["x", "y", "z"]);
        let r = atw_centre(&id, &PointQ::origin(3), ExpansionMode::Full).unwrap();
        assert_eq!(
            r.b_seq,
            vec![
                BigUint::from(2u32),
                BigUint::from(3u32),
                BigUint::from(6u32)
            ]
        );
        assert_eq!(r.a_seq, vec![rat_int(2), rat_int(3), rat_int(3)]);
    }

    #[test]
    fn atw_a_m_family() {
        for m in 1..=6u32 {
            let id = ideal(&[&format!("x^2 - y^{}", m + 1)], &["x", "y"]);
            let r = atw_centre(&id, &PointQ::origin(2), ExpansionMode::OrderOnly).unwrap();
            assert_eq!(
                r.b_seq,
                vec![BigUint::from(2u32), BigUint::from(m + 1)],
                "A_{}",
                m
            );
            assert_eq!(r.a_seq, vec![rat_int(2), rat_int(m as i64 + 1)]);
        }
    }

    #[test]
    fn simplex_counts() {
        assert_eq!(simplex_size(&[rat_int(4), rat_int(5)]), 14);
        assert_eq!(simplex_size(&[rat_int(1)]), 1);
        // Frozen from the brute-force box-scan oracle below.
        assert_eq!(simplex_size(&[rat_int(2), rat_int(3), rat_int(3)]), 9);
        assert_eq!(
            simplex_size(&[rat_int(2), rat_int(3), rat_int(3)]),
            box_scan_count(&[rat_int(2), rat_int(3), rat_int(3)])
        );
        assert_eq!(
            simplex_size(&[rat_int(4), rat(16, 3)]),
            box_scan_count(&[rat_int(4), rat(16, 3)])
        );
    }

    /// Independent oracle: scan the full bounding box and count Δ < 1.
    fn box_scan_count(a: &[Rat]) -> u64 {
        let caps: Vec<u32> = a
            .iter()
            .map(|ai| ai.ceil().to_integer().to_u32().unwrap())
            .collect();
        let mut count = 0;
        let mut beta = vec![0u32; a.len()];
        'outer: loop {
            let m = MultiIndex::new(beta.clone());
            if delta(a, &m) < Rat::one() {
                count += 1;
            }
            for i in 0..a.len() {
                if beta[i] < caps[i] {
                    beta[i] += 1;
                    continue 'outer;
                }
                beta[i] = 0;
            }
            return count;
        }
    }

    #[test]
    fn sigma_bound_examples() {
        // 1 + 4 + 5 + 20/2 = 20 ≥ 14.
        assert_eq!(sigma_bound(&[rat_int(4), rat_int(5)]), rat_int(20));
        assert_eq!(sigma_bound(&[]), rat_int(1));
        for a in [
            vec![rat_int(2), rat_int(3), rat_int(3)],
            vec![rat_int(1), rat_int(7)],
            vec![rat(16, 3), rat_int(6), rat_int(9)],
        ] {
            let bound = sigma_bound(&a);
            let count = Rat::from_integer(BigInt::from(simplex_size(&a)));
            assert!(count <= bound, "σ bound violated at {:?}", a);
        }
    }
}
