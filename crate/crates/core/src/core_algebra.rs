//! Exact sparse multivariate polynomial arithmetic, truncated power-series
//! composition, and formal inversion of étale coordinate changes at a point.
//!
//! Everything here is immutable after construction and all operations are
//! pure functions over arbitrary-precision rationals.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rat = BigRational;

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Exponent vector. Ordered by graded-lexicographic order: total degree
/// first, then lexicographic on entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(len: usize) -> Self {
        MultiIndex(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut e = vec![0; len];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &MultiIndex) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// `self` with entry `l` lowered by one.
    pub fn minus_unit(&self, l: usize) -> MultiIndex {
        debug_assert!(self.0[l] > 0);
        let mut e = self.0.clone();
        e[l] -= 1;
        MultiIndex(e)
    }

    pub fn lcm(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// How much of an expansion is known: all of it, or only the terms of total
/// degree at most the bound. `Exact` compares greater than any finite bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trunc {
    AtMost(u32),
    Exact,
}

impl Trunc {
    pub fn min(self, other: Trunc) -> Trunc {
        match (self, other) {
            (Trunc::Exact, t) | (t, Trunc::Exact) => t,
            (Trunc::AtMost(a), Trunc::AtMost(b)) => Trunc::AtMost(a.min(b)),
        }
    }

    pub fn admits(self, degree: u32) -> bool {
        match self {
            Trunc::Exact => true,
            Trunc::AtMost(t) => degree <= t,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Trunc::Exact)
    }

    /// Finite bound, if any.
    pub fn bound(self) -> Option<u32> {
        match self {
            Trunc::Exact => None,
            Trunc::AtMost(t) => Some(t),
        }
    }

    pub fn lower_by(self, d: u32) -> Trunc {
        match self {
            Trunc::Exact => Trunc::Exact,
            Trunc::AtMost(t) => Trunc::AtMost(t.saturating_sub(d)),
        }
    }
}

/// Sparse multivariate polynomial over named variables with exact rational
/// coefficients. No zero coefficients are stored; term keys all have length
/// equal to the variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<MultiIndex, Rat>,
}

impl Polynomial {
    pub fn zero(vars: &[String]) -> Self {
        Polynomial {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: Rat) -> Self {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(MultiIndex::zero(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Polynomial::constant(vars, Rat::one())
    }

    pub fn var(vars: &[String], i: usize) -> Self {
        let mut p = Polynomial::zero(vars);
        p.terms.insert(MultiIndex::unit(vars.len(), i), Rat::one());
        p
    }

    pub fn monomial(vars: &[String], m: MultiIndex, c: Rat) -> Self {
        assert_eq!(m.len(), vars.len());
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(vars: &[String], terms: Vec<(MultiIndex, Rat)>) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &MultiIndex) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&MultiIndex::zero(self.nvars()))
    }

    fn add_term(&mut self, m: MultiIndex, c: Rat) {
        if c.is_zero() {
            return;
        }
        assert_eq!(m.len(), self.nvars());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_same_vars(&self, other: &Polynomial) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarMismatch(format!(
                "{:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_same_vars(other).expect("mismatched rings");
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.mul_trunc(other, Trunc::Exact)
    }

    /// Product with terms above the truncation bound dropped (never rounded).
    pub fn mul_trunc(&self, other: &Polynomial, trunc: Trunc) -> Polynomial {
        self.check_same_vars(other).expect("mismatched rings");
        let mut r = Polynomial::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.add(mb);
                if trunc.admits(m.degree()) {
                    r.add_term(m, ca * cb);
                }
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        self.pow_trunc(e, Trunc::Exact)
    }

    pub fn pow_trunc(&self, e: u32, trunc: Trunc) -> Polynomial {
        let mut r = Polynomial::one(&self.vars);
        for _ in 0..e {
            r = r.mul_trunc(self, trunc);
        }
        r
    }

    /// Drop every term of total degree above `t`.
    pub fn truncate(&self, t: Trunc) -> Polynomial {
        match t {
            Trunc::Exact => self.clone(),
            Trunc::AtMost(b) => Polynomial {
                vars: self.vars.clone(),
                terms: self
                    .terms
                    .iter()
                    .filter(|(m, _)| m.degree() <= b)
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect(),
            },
        }
    }

    /// Formal partial derivative with respect to the `i`th variable.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars(), "variable index out of range");
        let mut r = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e > 0 {
                r.add_term(m.minus_unit(i), c * rat_int(e as i64));
            }
        }
        r
    }

    /// Iterated partial derivative per the multi-index.
    pub fn iterated_derivative(&self, beta: &MultiIndex) -> Polynomial {
        assert_eq!(beta.len(), self.nvars());
        let mut r = self.clone();
        for i in 0..beta.len() {
            for _ in 0..beta.get(i) {
                r = r.partial_derivative(i);
                if r.is_zero() {
                    return r;
                }
            }
        }
        r
    }

    /// Keys of the nonzero terms.
    pub fn monomial_support(&self) -> Vec<MultiIndex> {
        self.terms.keys().cloned().collect()
    }

    pub fn eval(&self, p: &PointQ) -> Rat {
        assert_eq!(p.coords.len(), self.nvars());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..m.len() {
                for _ in 0..m.get(i) {
                    t *= &p.coords[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// g with g(x) = f(x + p), so g(0) = f(p).
    pub fn translate_to_origin(&self, p: &PointQ) -> Polynomial {
        assert_eq!(p.coords.len(), self.nvars());
        if p.coords.iter().all(|c| c.is_zero()) {
            return self.clone();
        }
        let images: Vec<Polynomial> = (0..self.nvars())
            .map(|i| {
                Polynomial::var(&self.vars, i)
                    .add(&Polynomial::constant(&self.vars, p.coords[i].clone()))
            })
            .collect();
        self.eval_poly(&images, Trunc::Exact)
    }

    /// Substitute each variable by the given polynomial over the same ring.
    pub fn eval_poly(&self, images: &[Polynomial], trunc: Trunc) -> Polynomial {
        assert_eq!(images.len(), self.nvars());
        let vars = if images.is_empty() {
            self.vars.clone()
        } else {
            images[0].vars.to_vec()
        };
        // Per-variable power caches keep repeated exponents cheap.
        let mut caches: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|im| vec![Polynomial::one(im.vars()), im.clone()])
            .collect();
        let mut acc = Polynomial::zero(&vars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&vars, c.clone());
            for i in 0..m.len() {
                let e = m.get(i) as usize;
                if e == 0 {
                    continue;
                }
                while caches[i].len() <= e {
                    let next = caches[i].last().unwrap().mul_trunc(&images[i], trunc);
                    caches[i].push(next);
                }
                t = t.mul_trunc(&caches[i][e], trunc);
            }
            acc = acc.add(&t);
        }
        acc.truncate(trunc)
    }

    /// Substitute zero for the listed variable slots; the ambient ring is kept.
    pub fn kill_vars(&self, slots: &[usize]) -> Polynomial {
        let mut r = Polynomial::zero(&self.vars);
        'outer: for (m, c) in &self.terms {
            for &s in slots {
                if m.get(s) > 0 {
                    continue 'outer;
                }
            }
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Order of vanishing at the origin: least total degree in the support.
    pub fn order_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    /// Coefficients of the degree-one part, one slot per variable.
    pub fn linear_part(&self) -> Vec<Rat> {
        (0..self.nvars())
            .map(|i| self.coeff(&MultiIndex::unit(self.nvars(), i)))
            .collect()
    }

    /// Divide by the coefficient of the graded-lex-least term.
    pub fn normalize_lowest(&self) -> Polynomial {
        match self.terms.iter().next() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rat::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Rename the variable list without touching exponents.
    pub fn with_vars(&self, vars: &[String]) -> Polynomial {
        assert_eq!(vars.len(), self.nvars());
        Polynomial {
            vars: vars.to_vec(),
            terms: self.terms.clone(),
        }
    }

    /// The same polynomial over a ring extended by fresh trailing variables.
    pub fn extend_vars(&self, extra: &[String]) -> Polynomial {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().cloned());
        let n = vars.len();
        Polynomial {
            vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.entries().to_vec();
                    e.resize(n, 0);
                    (MultiIndex::new(e), c.clone())
                })
                .collect(),
        }
    }

    /// Swap two variable slots (names and exponents).
    pub fn swap_slots(&self, a: usize, b: usize) -> Polynomial {
        if a == b {
            return self.clone();
        }
        let mut vars = self.vars.clone();
        vars.swap(a, b);
        Polynomial {
            vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.entries().to_vec();
                    e.swap(a, b);
                    (MultiIndex::new(e), c.clone())
                })
                .collect(),
        }
    }
}

/// Renders in the grammar accepted by the expression parser: descending
/// graded-lex term order, explicit `*` between factors, `^` powers.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_zero() {
                factors.push(abs.to_string());
            }
            for i in 0..m.len() {
                match m.get(i) {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    e => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Polynomial together with the truncation state of its expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub body: Polynomial,
    pub trunc: Trunc,
}

impl TruncatedSeries {
    pub fn new(body: Polynomial, trunc: Trunc) -> Self {
        TruncatedSeries {
            body: body.truncate(trunc),
            trunc,
        }
    }

    pub fn exact(body: Polynomial) -> Self {
        TruncatedSeries {
            body,
            trunc: Trunc::Exact,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let t = self.trunc.min(other.trunc);
        TruncatedSeries::new(self.body.add(&other.body), t)
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let t = self.trunc.min(other.trunc);
        TruncatedSeries::new(self.body.sub(&other.body), t)
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let t = self.trunc.min(other.trunc);
        TruncatedSeries::new(self.body.mul_trunc(&other.body, t), t)
    }

    pub fn scale(&self, c: &Rat) -> TruncatedSeries {
        TruncatedSeries {
            body: self.body.scale(c),
            trunc: self.trunc,
        }
    }

    /// Differentiating loses one known degree per step.
    pub fn iterated_derivative(&self, beta: &MultiIndex) -> TruncatedSeries {
        TruncatedSeries::new(
            self.body.iterated_derivative(beta),
            self.trunc.lower_by(beta.degree()),
        )
    }

    pub fn partial_derivative(&self, i: usize) -> TruncatedSeries {
        TruncatedSeries::new(self.body.partial_derivative(i), self.trunc.lower_by(1))
    }

    pub fn kill_vars(&self, slots: &[usize]) -> TruncatedSeries {
        TruncatedSeries {
            body: self.body.kill_vars(slots),
            trunc: self.trunc,
        }
    }
}

/// A closed rational point of affine space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointQ {
    pub coords: Vec<Rat>,
}

impl PointQ {
    pub fn new(coords: Vec<Rat>) -> Self {
        PointQ { coords }
    }

    pub fn origin(n: usize) -> Self {
        PointQ {
            coords: vec![Rat::zero(); n],
        }
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn neg(&self) -> PointQ {
        PointQ {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// Per-variable images defining `f ↦ f ∘ s`. Domain variables are matched by
/// name; images live over the target variable list.
#[derive(Debug, Clone)]
pub struct SubstitutionMap {
    pub from_vars: Vec<String>,
    pub to_vars: Vec<String>,
    pub images: Vec<TruncatedSeries>,
    pub trunc: Trunc,
}

impl SubstitutionMap {
    pub fn new(
        from_vars: Vec<String>,
        to_vars: Vec<String>,
        images: Vec<TruncatedSeries>,
    ) -> Self {
        assert_eq!(from_vars.len(), images.len());
        let trunc = images
            .iter()
            .fold(Trunc::Exact, |t, im| t.min(im.trunc));
        SubstitutionMap {
            from_vars,
            to_vars,
            images,
            trunc,
        }
    }

    pub fn identity(vars: &[String]) -> Self {
        let images = (0..vars.len())
            .map(|i| TruncatedSeries::exact(Polynomial::var(vars, i)))
            .collect();
        SubstitutionMap::new(vars.to_vec(), vars.to_vec(), images)
    }

    /// Fixes the origin: every image has zero constant term.
    pub fn fixes_origin(&self) -> bool {
        self.images.iter().all(|im| im.body.constant_term().is_zero())
    }

    /// Jacobian at the origin is invertible (images over the same slot count).
    pub fn etale_at_origin(&self) -> bool {
        if self.from_vars.len() != self.to_vars.len() || !self.fixes_origin() {
            return false;
        }
        let n = self.from_vars.len();
        let rows: Vec<Vec<Rat>> = self.images.iter().map(|im| im.body.linear_part()).collect();
        rank(&rows) == n
    }

    /// Composition `self` then `after`: images of `self` pushed through `after`.
    pub fn then(&self, after: &SubstitutionMap) -> Result<SubstitutionMap> {
        let images = self
            .images
            .iter()
            .map(|im| substitute_series(im, after))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubstitutionMap::new(
            self.from_vars.clone(),
            after.to_vars.clone(),
            images,
        ))
    }
}

/// Rank of a small exact rational matrix by Gaussian elimination.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let pivot = (r..nrows).find(|&i| !m[i][c].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = Rat::one() / m[r][c].clone();
        for j in c..ncols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    m[i][j] = &m[i][j] - &f * &m[r][j];
                }
            }
        }
        r += 1;
    }
    r
}

/// `f ∘ s`, truncated at the substitution's order; exact within the truncation.
pub fn substitute(f: &Polynomial, s: &SubstitutionMap) -> Result<TruncatedSeries> {
    for (i, v) in f.vars().iter().enumerate() {
        let used = f.terms().any(|(m, _)| m.get(i) > 0);
        if used && !s.from_vars.contains(v) {
            return Err(Error::IncompleteSubstitution(v.clone()));
        }
    }
    let trunc = s.trunc;
    let target_vars = &s.to_vars;
    let zero = Polynomial::zero(target_vars);
    // Power caches, one per domain variable of f.
    let mut caches: Vec<Vec<Polynomial>> = Vec::with_capacity(f.nvars());
    for v in f.vars() {
        let image = match s.from_vars.iter().position(|w| w == v) {
            Some(k) => s.images[k].body.clone(),
            None => zero.clone(),
        };
        caches.push(vec![Polynomial::one(target_vars), image]);
    }
    let imgs: Vec<Polynomial> = caches.iter().map(|c| c[1].clone()).collect();
    let mut acc = Polynomial::zero(target_vars);
    for (m, c) in f.terms() {
        let mut t = Polynomial::constant(target_vars, c.clone());
        for i in 0..m.len() {
            let e = m.get(i) as usize;
            if e == 0 {
                continue;
            }
            while caches[i].len() <= e {
                let next = caches[i].last().unwrap().mul_trunc(&imgs[i], trunc);
                caches[i].push(next);
            }
            t = t.mul_trunc(&caches[i][e], trunc);
            if t.is_zero() {
                break;
            }
        }
        acc = acc.add(&t);
    }
    Ok(TruncatedSeries::new(acc, trunc))
}

pub fn substitute_series(f: &TruncatedSeries, s: &SubstitutionMap) -> Result<TruncatedSeries> {
    // Substituting origin-fixing images cannot recover dropped high-order
    // terms, so the result is only known to the weaker of the two bounds.
    let r = substitute(&f.body, s)?;
    Ok(TruncatedSeries::new(r.body, r.trunc.min(f.trunc)))
}

/// Solve for the coordinate change inverse to "replace variable `slot` by
/// `new_param`". The returned map σ satisfies: substituting x_slot ↦ new_param
/// and then applying σ is the identity up to total degree T.
///
/// The parameter is first normalized to unit linear coefficient in `slot`;
/// scaling a parameter by a unit does not change the induced weighting. Each
/// fixed-point pass raises the error order by at least one, so at most T
/// passes are needed.
pub fn invert_etale_change(
    vars: &[String],
    slot: usize,
    new_param: &Polynomial,
    t: u32,
) -> Result<SubstitutionMap> {
    if t == 0 {
        return Err(Error::BadTruncation);
    }
    if !new_param.constant_term().is_zero() {
        return Err(Error::NotAParameter(format!(
            "`{}` does not vanish at the origin",
            new_param
        )));
    }
    let lin = new_param.linear_part();
    if lin[slot].is_zero() {
        return Err(Error::NotAParameter(format!(
            "zero linear part in slot {}",
            vars[slot]
        )));
    }
    let p = new_param.scale(&(Rat::one() / lin[slot].clone()));
    // p = x_slot + r, where r has no linear x_slot term.
    let r = p.sub(&Polynomial::var(vars, slot));
    let trunc = Trunc::AtMost(t);
    let y_slot = Polynomial::var(vars, slot);
    // When r does not involve the solved variable at all, x_slot = y - r is
    // the exact inverse and no iteration is needed.
    let r_free_of_slot = r.terms().all(|(m, _)| m.get(slot) == 0);
    let mut s = y_slot.sub(&r);
    let mut exact = r_free_of_slot;
    if !r_free_of_slot {
        s = y_slot.clone();
        for _ in 0..=t {
            let mut images: Vec<Polynomial> =
                (0..vars.len()).map(|i| Polynomial::var(vars, i)).collect();
            images[slot] = s.clone();
            let next = y_slot.sub(&r.eval_poly(&images, trunc)).truncate(trunc);
            if next == s {
                break;
            }
            s = next;
        }
        exact = false;
    }
    let image_trunc = if exact { Trunc::Exact } else { trunc };
    let images = (0..vars.len())
        .map(|i| {
            if i == slot {
                TruncatedSeries::new(s.clone(), image_trunc)
            } else {
                TruncatedSeries::exact(Polynomial::var(vars, i))
            }
        })
        .collect();
    Ok(SubstitutionMap::new(vars.to_vec(), vars.to_vec(), images))
}

/// Finite generator list in a fixed ambient variable list, with an optional
/// distinguished rational base point.
#[derive(Debug, Clone)]
pub struct Ideal {
    pub vars: Vec<String>,
    pub gens: Vec<TruncatedSeries>,
    pub base_point: Option<PointQ>,
}

impl Ideal {
    pub fn from_polys(vars: Vec<String>, gens: Vec<Polynomial>) -> Self {
        assert!(!gens.is_empty(), "ideal needs at least one generator");
        for g in &gens {
            assert_eq!(g.vars(), &vars[..], "generator over wrong ring");
        }
        Ideal {
            vars,
            gens: gens.into_iter().map(TruncatedSeries::exact).collect(),
            base_point: None,
        }
    }

    pub fn from_series(vars: Vec<String>, gens: Vec<TruncatedSeries>) -> Self {
        assert!(!gens.is_empty());
        Ideal {
            vars,
            gens,
            base_point: None,
        }
    }

    pub fn with_base_point(mut self, p: PointQ) -> Self {
        self.base_point = Some(p);
        self
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    /// Some generator has a nonzero constant term.
    pub fn is_unit_at_origin(&self) -> bool {
        self.gens
            .iter()
            .any(|g| !g.body.constant_term().is_zero())
    }

    /// Least order of vanishing at the origin over the generators, to the
    /// extent the truncations reveal it.
    pub fn order_at_origin(&self) -> Option<u32> {
        self.gens
            .iter()
            .filter_map(|g| g.body.order_at_origin())
            .min()
    }
}
