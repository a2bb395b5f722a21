//! Marked centres, pre-invariants, valuations, filtration pieces,
//! admissibility, the invariant total order, the Γ value set, and the
//! marking computation.

use crate::core_algebra::{MultiIndex, PointQ, Polynomial, Rat, TruncatedSeries};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Rational or the distinguished +∞ sentinel. Never a large number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RatOrInf {
    Finite(Rat),
    Infinite,
}

impl RatOrInf {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            RatOrInf::Finite(r) => Some(r),
            RatOrInf::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, RatOrInf::Infinite)
    }
}

impl Ord for RatOrInf {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RatOrInf::Infinite, RatOrInf::Infinite) => Ordering::Equal,
            (RatOrInf::Infinite, _) => Ordering::Greater,
            (_, RatOrInf::Infinite) => Ordering::Less,
            (RatOrInf::Finite(a), RatOrInf::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for RatOrInf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A value plus whether the truncation in play was sufficient to make it
/// definitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certified<T> {
    pub value: T,
    pub certified: bool,
}

impl<T> Certified<T> {
    pub fn yes(value: T) -> Self {
        Certified {
            value,
            certified: true,
        }
    }

    pub fn new(value: T, certified: bool) -> Self {
        Certified { value, certified }
    }
}

/// Non-empty non-decreasing sequence of positive rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreInvariant(Vec<Rat>);

impl PreInvariant {
    pub fn new(entries: Vec<Rat>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvariantViolation(
                "pre-invariant must be non-empty".into(),
            ));
        }
        for a in &entries {
            if !a.is_positive() {
                return Err(Error::InvariantViolation(
                    "pre-invariant entries must be positive".into(),
                ));
            }
        }
        for w in entries.windows(2) {
            if w[0] > w[1] {
                return Err(Error::InvariantViolation(
                    "pre-invariant must be non-decreasing".into(),
                ));
            }
        }
        Ok(PreInvariant(entries))
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Δ(a_1..a_j; β) = Σ_{i≤j} β_i / a_i, over the first `a.len()` slots of β.
pub fn delta(a: &[Rat], beta: &MultiIndex) -> Rat {
    debug_assert!(beta.len() >= a.len());
    let mut s = Rat::zero();
    for (i, ai) in a.iter().enumerate() {
        if beta.get(i) > 0 {
            s += Rat::from_integer(BigInt::from(beta.get(i))) / ai;
        }
    }
    s
}

/// Ξ(a_1..a_j; β) = (Σ_{i>j} β_i) / (1 − Δ), or +∞ when Δ ≥ 1.
pub fn xi(a: &[Rat], beta: &MultiIndex) -> RatOrInf {
    debug_assert!(beta.len() >= a.len() + 1);
    let d = delta(a, beta);
    let one = Rat::one();
    if d >= one {
        return RatOrInf::Infinite;
    }
    let tail: u64 = (a.len()..beta.len()).map(|i| beta.get(i) as u64).sum();
    RatOrInf::Finite(Rat::from_integer(BigInt::from(tail)) / (one - d))
}

/// The marking d (lcm of the reduced numerators of the a_i) and the weights
/// w_i = d / a_i. The gcd-1 condition is re-verified at runtime.
pub fn marking_of(a: &[Rat]) -> Result<(u64, Vec<u64>)> {
    let mut d = BigInt::one();
    for ai in a {
        d = d.lcm(ai.numer());
    }
    let mut weights = Vec::with_capacity(a.len());
    for ai in a {
        let w = Rat::from_integer(d.clone()) / ai;
        if !w.denom().is_one() {
            return Err(Error::InvariantViolation(format!(
                "weight d/a_i = {} is not integral",
                w
            )));
        }
        weights.push(w.numer().to_u64().ok_or_else(|| {
            Error::InvariantViolation("weight exceeds u64".into())
        })?);
    }
    if !weights.is_empty() {
        let g = weights.iter().fold(0u64, |acc, w| acc.gcd(w));
        if g != 1 {
            return Err(Error::InvariantViolation(format!(
                "weights {:?} have gcd {} != 1",
                weights, g
            )));
        }
    }
    for pair in weights.windows(2) {
        if pair[0] < pair[1] {
            return Err(Error::InvariantViolation(
                "weights must be non-increasing".into(),
            ));
        }
    }
    let d = d
        .to_u64()
        .ok_or_else(|| Error::InvariantViolation("marking exceeds u64".into()))?;
    Ok((d, weights))
}

/// v(f) = min over the support of Σ_{i≤k} β_i / a_i; +∞ for 0. The certified
/// flag records whether the truncation suffices to pin the value down: exact
/// input always does; for k = n any unseen monomial has value > T / a_n.
pub fn valuation(a: &[Rat], n: usize, f: &TruncatedSeries) -> Certified<RatOrInf> {
    let mut best: Option<Rat> = None;
    for (m, _) in f.body.terms() {
        let v = delta(a, m);
        if best.as_ref().map_or(true, |b| v < *b) {
            best = Some(v);
        }
    }
    let value = match best {
        Some(v) => RatOrInf::Finite(v),
        None => RatOrInf::Infinite,
    };
    let certified = match f.trunc.bound() {
        None => true,
        Some(t) => match (&value, a.last()) {
            (RatOrInf::Finite(v), Some(amax)) if a.len() == n => {
                v * amax <= Rat::from_integer(BigInt::from(t))
            }
            _ => false,
        },
    };
    Certified::new(value, certified)
}

/// Unscaled weighted order v_F(f) = min over the support of Σ β_i w_i.
pub fn weighted_valuation(weights: &[u64], n: usize, f: &TruncatedSeries) -> Certified<RatOrInf> {
    let mut best: Option<u64> = None;
    for (m, _) in f.body.terms() {
        let v: u64 = weights
            .iter()
            .enumerate()
            .map(|(i, w)| *w * m.get(i) as u64)
            .sum();
        if best.map_or(true, |b| v < b) {
            best = Some(v);
        }
    }
    let value = match best {
        Some(v) => RatOrInf::Finite(Rat::from_integer(BigInt::from(v))),
        None => RatOrInf::Infinite,
    };
    let certified = match f.trunc.bound() {
        None => true,
        Some(t) => match (&value, weights.iter().min()) {
            (RatOrInf::Finite(v), Some(wmin)) if weights.len() == n => {
                *v <= Rat::from_integer(BigInt::from(t as u64 * *wmin))
            }
            _ => false,
        },
    };
    Certified::new(value, certified)
}

/// Minimal monomial generators of F_j = ({x^β : Σ β_i w_i ≥ j}), in
/// graded-lex order over the first k = weights.len() coordinates.
pub fn filtration_piece(weights: &[u64], j: u64) -> Vec<MultiIndex> {
    let k = weights.len();
    if j == 0 || k == 0 {
        return vec![MultiIndex::zero(k)];
    }
    // Bounded box enumeration: a minimal generator never needs β_i beyond
    // ceil(j / w_i).
    let caps: Vec<u32> = weights
        .iter()
        .map(|w| ((j + w - 1) / w) as u32)
        .collect();
    let mut out = Vec::new();
    let mut beta = vec![0u32; k];
    loop {
        let wdeg: u64 = beta
            .iter()
            .zip(weights)
            .map(|(b, w)| *b as u64 * w)
            .sum();
        if wdeg >= j {
            let minimal = beta
                .iter()
                .zip(weights)
                .all(|(b, w)| *b == 0 || wdeg - w < j);
            if minimal {
                out.push(MultiIndex::new(beta.clone()));
            }
        }
        // Odometer step.
        let mut i = 0;
        loop {
            if i == k {
                out.sort();
                return out;
            }
            if beta[i] < caps[i] {
                beta[i] += 1;
                break;
            }
            beta[i] = 0;
            i += 1;
        }
    }
}

/// All β of length a.len() with Δ(a; β) < 1.
pub fn simplex_points(a: &[Rat]) -> Vec<MultiIndex> {
    let j = a.len();
    let mut out = Vec::new();
    let mut beta = vec![0u32; j];
    fn rec(a: &[Rat], beta: &mut Vec<u32>, slot: usize, used: Rat, out: &mut Vec<MultiIndex>) {
        if slot == a.len() {
            out.push(MultiIndex::new(beta.clone()));
            return;
        }
        let mut b = 0u32;
        loop {
            let d = used.clone() + Rat::from_integer(BigInt::from(b)) / &a[slot];
            if d >= Rat::one() {
                break;
            }
            beta[slot] = b;
            rec(a, beta, slot + 1, d, out);
            b += 1;
        }
        beta[slot] = 0;
    }
    if j == 0 {
        return vec![MultiIndex::zero(0)];
    }
    rec(a, &mut beta, 0, Rat::zero(), &mut out);
    out.sort();
    out
}

/// I-admissibility by direct valuation scan: true iff every generator has
/// v ≥ 1 in the J-compatible coordinates the generators are expressed in.
/// A visible violation is definitive regardless of truncation. The zero
/// centre () is the start state only and is never admissible for a proper
/// ideal.
pub fn is_admissible(a: &[Rat], n: usize, gens: &[TruncatedSeries]) -> Certified<bool> {
    if a.is_empty() {
        return Certified::yes(false);
    }
    let one = RatOrInf::Finite(Rat::one());
    let mut certified = true;
    for g in gens {
        let v = valuation(a, n, g);
        if v.value < one {
            return Certified::yes(false);
        }
        certified &= g.trunc.is_exact() || admissibility_region_certified(a, n, g);
    }
    Certified::new(true, certified)
}

/// The deciding region {β : Σ β_i / a_i ≤ 1} lies within total degree T
/// only when every ambient direction carries weight, i.e. k = n; the degree
/// bound used is ⌈Σ a_i⌉.
fn admissibility_region_certified(a: &[Rat], n: usize, g: &TruncatedSeries) -> bool {
    match g.trunc.bound() {
        None => true,
        Some(t) => {
            if a.len() != n {
                return false;
            }
            let sum: Rat = a.iter().sum();
            sum.ceil().to_integer().to_u32().map_or(false, |b| b <= t)
        }
    }
}

/// True iff the candidates are a parameter sequence at the origin and
/// v_F(y_i) = w_i for each i. Rank deficiency yields false, not an error.
/// Candidates are expected in J-compatible coordinates.
pub fn compatible_check(
    weights: &[u64],
    n: usize,
    candidates: &[TruncatedSeries],
) -> Certified<bool> {
    if candidates.len() != weights.len() {
        return Certified::yes(false);
    }
    for c in candidates {
        if !c.body.constant_term().is_zero() {
            return Certified::yes(false);
        }
    }
    let rows: Vec<Vec<Rat>> = candidates.iter().map(|c| c.body.linear_part()).collect();
    if crate::core_algebra::rank(&rows) != candidates.len() {
        return Certified::yes(false);
    }
    let mut certified = true;
    for (c, w) in candidates.iter().zip(weights) {
        let v = weighted_valuation(weights, n, c);
        certified &= v.certified;
        match v.value.finite() {
            Some(val) if *val == Rat::from_integer(BigInt::from(*w)) => {}
            _ => return Certified::new(false, certified),
        }
    }
    Certified::new(true, certified)
}

/// Invariant of the b-completion (a_1,…,a_j, b,…,b) of length n.
pub fn b_completion_inv(a: &[Rat], b: &Rat, n: usize) -> Result<Vec<Rat>> {
    if let Some(last) = a.last() {
        if b < last {
            return Err(Error::InvariantViolation(format!(
                "b-completion needs b >= a_j, got {} < {}",
                b, last
            )));
        }
    }
    let mut out = a.to_vec();
    while out.len() < n {
        out.push(b.clone());
    }
    Ok(out)
}

/// Membership in the well-ordered value set Γ: a_1 is a positive integer and
/// each later entry satisfies a_{j+1} ≥ a_j together with the integrality
/// condition a_{j+1}·(1 − Δ(a_1..a_j; β)) ∈ Z_{>0} for some β with Δ < 1.
/// The search is finite since Δ(β) < 1 forces β_i < a_i.
pub fn gamma_member(a: &[Rat]) -> bool {
    if a.is_empty() {
        return false;
    }
    if !a[0].is_positive() || !a[0].denom().is_one() {
        return false;
    }
    for j in 1..a.len() {
        if a[j] < a[j - 1] {
            return false;
        }
        let prefix = &a[..j];
        let found = simplex_points(prefix).into_iter().any(|beta| {
            let m = (Rat::one() - delta(prefix, &beta)) * &a[j];
            m.denom().is_one() && m.is_positive()
        });
        if !found {
            return false;
        }
    }
    true
}

/// A resolution-invariant value: either the distinguished zero-centre value
/// `()` or a finite non-decreasing sequence of positive rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantValue {
    ZeroCentre,
    Inv(Vec<Rat>),
}

impl InvariantValue {
    pub fn smooth(codim: usize) -> Self {
        InvariantValue::Inv(vec![Rat::one(); codim])
    }

    pub fn is_smooth(&self) -> bool {
        match self {
            InvariantValue::ZeroCentre => false,
            InvariantValue::Inv(v) => v.iter().all(|a| a.is_one()),
        }
    }

    pub fn entries(&self) -> &[Rat] {
        match self {
            InvariantValue::ZeroCentre => &[],
            InvariantValue::Inv(v) => v,
        }
    }

    pub fn display(&self) -> String {
        match self {
            InvariantValue::ZeroCentre => "()".to_string(),
            InvariantValue::Inv(v) => format!(
                "({})",
                v.iter()
                    .map(crate::expr_io::rat_pq)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        }
    }
}

/// Lexicographic comparison with the "truncated sequences are greater" rule:
/// exhausted entries compare as +∞. The zero centre () sits above everything.
pub fn compare_inv(u: &InvariantValue, v: &InvariantValue) -> Ordering {
    let a = u.entries();
    let b = v.entries();
    let zero_u = matches!(u, InvariantValue::ZeroCentre);
    let zero_v = matches!(v, InvariantValue::ZeroCentre);
    if zero_u || zero_v {
        return zero_v.cmp(&zero_u).reverse();
    }
    let mut i = 0;
    loop {
        match (a.get(i), b.get(i)) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Greater,
            (Some(_), None) => return Ordering::Less,
            (Some(x), Some(y)) => match x.cmp(y) {
                Ordering::Equal => i += 1,
                o => return o,
            },
        }
    }
}

/// Smooth centre plus marking: parameters (vanishing at the base point, with
/// independent differentials there), the invariant, and the derived weights.
#[derive(Debug, Clone)]
pub struct MarkedCentre {
    pub params: Vec<Polynomial>,
    pub inv: PreInvariant,
    pub weights: Vec<u64>,
    pub marking: u64,
    pub base_point: PointQ,
}

impl MarkedCentre {
    pub fn new(params: Vec<Polynomial>, inv: PreInvariant, base_point: PointQ) -> Result<Self> {
        let (marking, weights) = marking_of(inv.entries())?;
        if params.len() != inv.len() {
            return Err(Error::InvariantViolation(
                "one parameter per invariant entry".into(),
            ));
        }
        let rows: Vec<Vec<Rat>> = params
            .iter()
            .map(|p| p.translate_to_origin(&base_point).linear_part())
            .collect();
        if crate::core_algebra::rank(&rows) != params.len() {
            return Err(Error::InvariantViolation(
                "parameter differentials are dependent at the base point".into(),
            ));
        }
        for p in &params {
            if !p.eval(&base_point).is_zero() {
                return Err(Error::InvariantViolation(
                    "parameters must vanish at the base point".into(),
                ));
            }
        }
        Ok(MarkedCentre {
            params,
            inv,
            weights,
            marking,
            base_point,
        })
    }

    pub fn k(&self) -> usize {
        self.params.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_algebra::{rat, rat_int, Trunc};
    use crate::expr_io::parse_poly;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn series(text: &str, vs: &[&str]) -> TruncatedSeries {
        TruncatedSeries::exact(parse_poly(text, &vars(vs)).unwrap())
    }

    #[test]
    fn delta_examples() {
        assert_eq!(
            delta(&[rat_int(4)], &MultiIndex::new(vec![1, 4])),
            rat(1, 4)
        );
        assert_eq!(delta(&[], &MultiIndex::new(vec![7, 3])), rat_int(0));
        assert_eq!(
            delta(&[rat_int(2), rat_int(3)], &MultiIndex::new(vec![1, 1, 0])),
            rat(5, 6)
        );
    }

    #[test]
    fn xi_examples() {
        assert_eq!(
            xi(&[rat_int(4)], &MultiIndex::new(vec![1, 4])),
            RatOrInf::Finite(rat(16, 3))
        );
        for m in 1..=6 {
            assert_eq!(
                xi(&[rat_int(2)], &MultiIndex::new(vec![0, m + 1])),
                RatOrInf::Finite(rat_int(m as i64 + 1))
            );
        }
        assert_eq!(
            xi(&[rat_int(2)], &MultiIndex::new(vec![2, 5])),
            RatOrInf::Infinite
        );
    }

    #[test]
    fn marking_examples() {
        assert_eq!(
            marking_of(&[rat_int(2), rat_int(3)]).unwrap(),
            (6, vec![3, 2])
        );
        assert_eq!(
            marking_of(&[rat_int(1), rat_int(1), rat_int(1)]).unwrap(),
            (1, vec![1, 1, 1])
        );
        assert_eq!(
            marking_of(&[rat_int(4), rat(16, 3)]).unwrap(),
            (16, vec![4, 3])
        );
        assert_eq!(marking_of(&[]).unwrap(), (1, vec![]));
    }

    #[test]
    fn valuation_cusp() {
        // Weighting of the cusp: weights (3,2) over parameters (x,y).
        let w = [3u64, 2];
        let a = [rat_int(2), rat_int(3)];
        let xy = series("x*y", &["x", "y"]);
        assert_eq!(
            weighted_valuation(&w, 2, &xy).value,
            RatOrInf::Finite(rat_int(5))
        );
        assert_eq!(
            valuation(&a, 2, &series("1", &["x", "y"])).value,
            RatOrInf::Finite(rat_int(0))
        );
        assert_eq!(
            valuation(&a, 2, &series("0", &["x", "y"])).value,
            RatOrInf::Infinite
        );
        let f = series("x + y^2", &["x", "y"]);
        assert_eq!(
            weighted_valuation(&w, 2, &f).value,
            RatOrInf::Finite(rat_int(3))
        );
    }

    #[test]
    fn valuation_is_a_valuation_smoke() {
        let a = [rat_int(2), rat_int(3)];
        let f = series("x + y^2", &["x", "y"]);
        let g = series("x*y - y^3", &["x", "y"]);
        let vf = valuation(&a, 2, &f).value;
        let vg = valuation(&a, 2, &g).value;
        let vfg = valuation(&a, 2, &f.mul(&g)).value;
        match (vf, vg, vfg) {
            (RatOrInf::Finite(a1), RatOrInf::Finite(b), RatOrInf::Finite(c)) => {
                assert_eq!(a1 + b, c)
            }
            _ => panic!(),
        }
    }

    #[test]
    fn filtration_cusp_rows() {
        let w = [3u64, 2];
        let rows: Vec<Vec<MultiIndex>> = (0..=6).map(|j| filtration_piece(&w, j)).collect();
        let mi = |e: &[u32]| MultiIndex::new(e.to_vec());
        assert_eq!(rows[0], vec![mi(&[0, 0])]);
        assert_eq!(rows[1], vec![mi(&[0, 1]), mi(&[1, 0])]);
        assert_eq!(rows[2], vec![mi(&[0, 1]), mi(&[1, 0])]);
        assert_eq!(rows[3], vec![mi(&[1, 0]), mi(&[0, 2])]);
        assert_eq!(rows[4], vec![mi(&[0, 2]), mi(&[1, 1]), mi(&[2, 0])]);
        assert_eq!(rows[5], vec![mi(&[1, 1]), mi(&[2, 0]), mi(&[0, 3])]);
        assert_eq!(rows[6], vec![mi(&[2, 0]), mi(&[0, 3]), mi(&[1, 2])]);
    }

    #[test]
    fn filtration_monotone() {
        // F_j ⊇ F_{j+1} as monomial ideals; no generator of weighted degree < j.
        let w = [5u64, 3, 2];
        for j in 0..18u64 {
            let cur = filtration_piece(&w, j);
            let next = filtration_piece(&w, j + 1);
            for g in &cur {
                let wd: u64 = g
                    .entries()
                    .iter()
                    .zip(&w)
                    .map(|(b, wi)| *b as u64 * wi)
                    .sum();
                assert!(wd >= j);
            }
            // Every generator of the next piece lies in the upward closure
            // of the current one.
            for g in &next {
                assert!(cur.iter().any(|m| g.dominates(m)));
            }
        }
    }

    #[test]
    fn admissibility_examples() {
        // (x^2, y^3) is admissible for (x^2 - y^3).
        let gens = [series("x^2 - y^3", &["x", "y"])];
        let r = is_admissible(&[rat_int(2), rat_int(3)], 2, &gens);
        assert!(r.value && r.certified);
        // (x^2, y^4) is not: monomial (0,3) has 3/4 < 1.
        let r = is_admissible(&[rat_int(2), rat_int(4)], 2, &gens);
        assert!(!r.value && r.certified);
        // Zero centre: start state only.
        let r = is_admissible(&[], 2, &gens);
        assert!(!r.value);
    }

    #[test]
    fn admissibility_on_truncated_input() {
        let body = parse_poly("x^2", &vars(&["x", "y"])).unwrap();
        let g = TruncatedSeries::new(body, Trunc::AtMost(6));
        // Visible violation is definitive even when truncated.
        let r = is_admissible(&[rat_int(3), rat_int(3)], 2, &[g.clone()]);
        assert!(!r.value && r.certified);
        // Positive answer with full-length invariant within the bound: certified.
        let r = is_admissible(&[rat_int(2), rat_int(2)], 2, &[g.clone()]);
        assert!(r.value && r.certified);
        // Length-1 invariant on truncated input cannot be certified true.
        let r = is_admissible(&[rat_int(2)], 2, &[g]);
        assert!(r.value && !r.certified);
    }

    #[test]
    fn compatible_parameters_cusp() {
        let w = [3u64, 2];
        let ok = [
            series("x + y^2", &["x", "y"]),
            series("x^3 + y", &["x", "y"]),
        ];
        assert!(compatible_check(&w, 2, &ok).value);
        let swapped = [series("y", &["x", "y"]), series("x", &["x", "y"])];
        assert!(!compatible_check(&w, 2, &swapped).value);
        let own = [series("x", &["x", "y"]), series("y", &["x", "y"])];
        assert!(compatible_check(&w, 2, &own).value);
        // Rank deficiency is false, not an error.
        let dep = [series("x", &["x", "y"]), series("x + x^2", &["x", "y"])];
        assert!(!compatible_check(&w, 2, &dep).value);
    }

    #[test]
    fn b_completion_invariants() {
        assert_eq!(
            b_completion_inv(&[], &rat_int(2), 2).unwrap(),
            vec![rat_int(2), rat_int(2)]
        );
        assert_eq!(
            b_completion_inv(&[rat_int(2)], &rat_int(3), 2).unwrap(),
            vec![rat_int(2), rat_int(3)]
        );
        assert!(b_completion_inv(&[rat_int(3)], &rat_int(2), 2).is_err());
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma_member(&[rat_int(4), rat(16, 3)]));
        assert!(gamma_member(&[rat_int(1), rat_int(1), rat_int(1)]));
        assert!(!gamma_member(&[rat_int(2), rat(5, 2)]));
        assert!(gamma_member(&[rat_int(2), rat_int(3), rat_int(3)]));
        assert!(!gamma_member(&[rat(3, 2)]));
    }

    #[test]
    fn invariant_order_chain() {
        let iv = |e: &[Rat]| InvariantValue::Inv(e.to_vec());
        let chain = [
            iv(&[rat_int(1), rat_int(2), rat_int(2), rat_int(2)]),
            iv(&[rat_int(1), rat_int(2), rat_int(2)]),
            iv(&[rat_int(1), rat_int(3), rat_int(3)]),
            iv(&[rat_int(1)]),
            iv(&[rat_int(2), rat_int(2)]),
            iv(&[rat_int(2), rat_int(3)]),
            InvariantValue::ZeroCentre,
        ];
        for w in chain.windows(2) {
            assert_eq!(compare_inv(&w[0], &w[1]), Ordering::Less);
        }
        assert_eq!(compare_inv(&chain[0], &chain[0]), Ordering::Equal);
    }

    #[test]
    fn simplex_enumeration() {
        // Fourteen lattice points under β1/4 + β2/5 < 1.
        assert_eq!(simplex_points(&[rat_int(4), rat_int(5)]).len(), 14);
        assert_eq!(simplex_points(&[rat_int(1)]).len(), 1);
    }
}
