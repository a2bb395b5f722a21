//! Weighted blow-up charts, proper transforms, initial forms,
//! invariant-decrease verification, and a step-capped resolution driver.
//!
//! Stacky structure is metadata: charts are plain affine patches and the
//! stabilizer order μ_{w_i} of each chart is recorded alongside, which is
//! all the invariant computations need on a smooth atlas.

use crate::core_algebra::{
    substitute, Ideal, MultiIndex, PointQ, Polynomial, Rat, SubstitutionMap,
    TruncatedSeries,
};
use crate::error::{Error, Result};
use crate::expr_io::Json;
use crate::method_one::SearchOptions;
use crate::method_two::associated_centre_m2;
use crate::weighting::{compare_inv, InvariantValue};
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;

/// One chart of the weighted blow-up at a centre with weights w_1..w_k in
/// compatible coordinates: x_j ↦ s^{w_j}·x̃_j for j ≠ i and x_i ↦ s^{w_i},
/// the x̃_i = 1 slice. The chart carries the μ_{w_i} stabilizer order as
/// metadata.
#[derive(Debug, Clone)]
pub struct ChartData {
    /// 0-based index i < k of the slice coordinate.
    pub index: usize,
    pub subst: SubstitutionMap,
    pub stabilizer_order: u64,
    pub vars: Vec<String>,
    pub weights: Vec<u64>,
    /// Slot of s in the chart variables (always 0).
    pub s_slot: usize,
    /// For each old slot j != i, the chart slot of x̃_j (old slots >= k map
    /// to themselves shifted); the slice slot i maps to None.
    pub slot_map: Vec<Option<usize>>,
}

fn fresh_s_name(vars: &[String]) -> String {
    if !vars.iter().any(|v| v == "s") {
        return "s".to_string();
    }
    let mut i = 2;
    loop {
        let cand = format!("s{}", i);
        if !vars.iter().any(|v| *v == cand) {
            return cand;
        }
        i += 1;
    }
}

/// Build the i-th chart substitution for a centre with the given weights,
/// expressed in compatible coordinates (parameters first).
pub fn chart_substitution(weights: &[u64], compat_vars: &[String], i: usize) -> ChartData {
    let k = weights.len();
    let n = compat_vars.len();
    assert!(i < k, "chart index must address a parameter");
    let s = fresh_s_name(compat_vars);
    let mut chart_vars = vec![s.clone()];
    let mut slot_map: Vec<Option<usize>> = vec![None; n];
    for (j, name) in compat_vars.iter().enumerate() {
        if j == i {
            continue;
        }
        let new_name = if j < k {
            format!("{}~", name)
        } else {
            name.clone()
        };
        slot_map[j] = Some(chart_vars.len());
        chart_vars.push(new_name);
    }
    let images: Vec<TruncatedSeries> = (0..n)
        .map(|j| {
            let mut e = vec![0u32; chart_vars.len()];
            if j < k {
                e[0] = weights[j]
                    .to_u32()
                    .expect("weight fits chart exponent");
            }
            if let Some(t) = slot_map[j] {
                e[t] += 1;
            }
            TruncatedSeries::exact(Polynomial::monomial(
                &chart_vars,
                MultiIndex::new(e),
                Rat::from_integer(1.into()),
            ))
        })
        .collect();
    let subst = SubstitutionMap::new(compat_vars.to_vec(), chart_vars.clone(), images);
    ChartData {
        index: i,
        subst,
        stabilizer_order: weights[i],
        vars: chart_vars,
        weights: weights.to_vec(),
        s_slot: 0,
        slot_map,
    }
}

/// Unscaled weighted valuation of a polynomial in compatible coordinates.
fn weighted_val(weights: &[u64], f: &Polynomial) -> Option<u64> {
    f.terms()
        .map(|(m, _)| {
            weights
                .iter()
                .enumerate()
                .map(|(i, w)| w * m.get(i) as u64)
                .sum::<u64>()
        })
        .min()
}

/// Divide a polynomial by s^v exactly; any remainder is a valuation bug.
fn divide_s_power(f: &Polynomial, s_slot: usize, v: u64) -> Result<Polynomial> {
    let mut terms = Vec::new();
    for (m, c) in f.terms() {
        let e = m.get(s_slot) as u64;
        if e < v {
            return Err(Error::InvariantViolation(format!(
                "exceptional exponent: term has s^{} but the valuation is {}",
                e, v
            )));
        }
        let mut entries = m.entries().to_vec();
        entries[s_slot] = (e - v) as u32;
        terms.push((MultiIndex::new(entries), c.clone()));
    }
    Ok(Polynomial::from_terms(f.vars(), terms))
}

/// Proper transform: substitute each generator through the chart and divide
/// by the exact exceptional power s^{v_F(g)}. Every transformed generator
/// keeps an s-free part (its initial form survives on the chart slice).
pub fn proper_transform(
    gens: &[TruncatedSeries],
    weights: &[u64],
    chart: &ChartData,
) -> Result<Vec<TruncatedSeries>> {
    let mut out = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let v = weighted_val(weights, &g.body).unwrap();
        let image = substitute(&g.body, &chart.subst)?;
        let divided = divide_s_power(&image.body, chart.s_slot, v)?;
        let s_free = divided
            .terms()
            .any(|(m, _)| m.get(chart.s_slot) == 0);
        if !s_free {
            return Err(Error::InvariantViolation(
                "proper transform still divisible by s".into(),
            ));
        }
        out.push(TruncatedSeries::new(divided, g.trunc.min(image.trunc)));
    }
    if out.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    Ok(out)
}

/// Sum of the monomials of minimal weighted valuation.
pub fn initial_form(f: &Polynomial, weights: &[u64]) -> Polynomial {
    let Some(v) = weighted_val(weights, f) else {
        return f.clone();
    };
    let terms: Vec<(MultiIndex, Rat)> = f
        .terms()
        .filter(|(m, _)| {
            weights
                .iter()
                .enumerate()
                .map(|(i, w)| w * m.get(i) as u64)
                .sum::<u64>()
                == v
        })
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    Polynomial::from_terms(f.vars(), terms)
}

/// Monomial-level stability of a transformed generator under the recorded
/// μ_{w_i} action: every monomial s^c ∏ x̃^e has the same class of
/// Σ w_j e_j − c modulo w_i.
pub fn mu_semi_invariant(g: &Polynomial, chart: &ChartData) -> bool {
    let w_i = chart.stabilizer_order as i64;
    if w_i == 1 {
        return true;
    }
    let mut class: Option<i64> = None;
    for (m, _) in g.terms() {
        let mut weight = -(m.get(chart.s_slot) as i64);
        for (old, slot) in chart.slot_map.iter().enumerate() {
            if let Some(t) = slot {
                if old < chart.weights.len() {
                    weight += chart.weights[old] as i64 * m.get(*t) as i64;
                }
            }
        }
        let c = weight.rem_euclid(w_i);
        match class {
            None => class = Some(c),
            Some(prev) if prev == c => {}
            _ => return false,
        }
    }
    true
}

/// The invariant is blind to the weighted normal-cone degeneration: the
/// invariant of the initial forms equals the invariant of the original
/// ideal at the point.
pub fn check_initialisation_invariance(ideal: &Ideal, p: &PointQ) -> Result<bool> {
    let opts = SearchOptions::default();
    let run = associated_centre_m2(ideal, p, &opts)?;
    let frame = &run.trace.frame;
    let weights = &run.centre.weights;
    let init_gens: Vec<Polynomial> = frame
        .cur_gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| initial_form(&g.body, weights))
        .collect();
    let init_ideal = Ideal::from_polys(frame.vars.clone(), init_gens);
    let init_run = associated_centre_m2(&init_ideal, &PointQ::origin(frame.vars.len()), &opts)?;
    Ok(init_run.centre.inv.entries() == run.centre.inv.entries())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeStatus {
    /// Every inspected on-variety point is smooth.
    SmoothAtInspected,
    /// No inspected point lies on the variety at all.
    NoVanishingPoint,
    /// Blown up at the recorded centre; children follow.
    BlownUp,
    /// A singular point remains but the step budget ran out.
    StepBudgetExhausted,
}

#[derive(Debug, Clone)]
pub struct CentreSummary {
    pub params: Vec<String>,
    pub invariant: Vec<Rat>,
    pub weights: Vec<u64>,
    pub marking: u64,
}

#[derive(Debug, Clone)]
pub struct ChartInfo {
    pub index: usize,
    pub stabilizer_order: u64,
    pub substitution: Vec<(String, String)>,
}

#[derive(Debug, Clone)]
pub struct TraceNode {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub maxinv: InvariantValue,
    pub point: Option<PointQ>,
    pub centre: Option<CentreSummary>,
    pub regime: String,
    pub status: NodeStatus,
    pub children: Vec<(ChartInfo, TraceNode)>,
}

#[derive(Debug, Clone)]
pub struct ResolutionTrace {
    pub root: TraceNode,
    pub blowups: u32,
    pub complete: bool,
}

/// Deterministic inspected points: the origin first, then the full
/// {0, 1, -1} grid, then caller-supplied samples.
fn inspected_points(n: usize, extra: &[PointQ]) -> Vec<PointQ> {
    let vals = [0i64, 1, -1];
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let mut coords = Vec::with_capacity(n);
        for _ in 0..n {
            coords.push(crate::core_algebra::rat_int(vals[c % 3]));
            c /= 3;
        }
        out.push(PointQ::new(coords));
    }
    for p in extra {
        if p.len() == n && !out.contains(p) {
            out.push(p.clone());
        }
    }
    out
}

struct Resolver {
    budget: u32,
    blowups: u32,
    complete: bool,
    opts: SearchOptions,
}

impl Resolver {
    fn node(
        &mut self,
        vars: &[String],
        gens: &[TruncatedSeries],
        extra: &[PointQ],
    ) -> Result<TraceNode> {
        let n = vars.len();
        let gens_text: Vec<String> = gens.iter().map(|g| g.body.to_string()).collect();
        let exact = gens.iter().all(|g| g.trunc.is_exact());
        let mut regime = String::from("chart-origin+grid-samples");
        let mut singular: Vec<(PointQ, InvariantValue, crate::method_one::CentreResult)> =
            Vec::new();
        let mut best_smooth_seen = false;
        let mut skipped = 0usize;
        for p in inspected_points(n, extra) {
            if !gens.iter().all(|g| g.body.eval(&p).is_zero()) {
                continue;
            }
            if !exact && !p.is_origin() {
                // Truncated expansions are origin-local; off-origin points
                // cannot be inspected faithfully.
                skipped += 1;
                continue;
            }
            let ideal = Ideal::from_series(vars.to_vec(), gens.to_vec());
            let run = associated_centre_m2(&ideal, &p, &self.opts)?;
            let inv = InvariantValue::Inv(run.centre.inv.entries().to_vec());
            if inv.is_smooth() {
                best_smooth_seen = true;
            } else {
                singular.push((p, inv, run));
            }
        }
        if skipped > 0 {
            regime = format!("{}; {} off-origin points skipped (truncated)", regime, skipped);
        }
        if singular.is_empty() {
            let status = if best_smooth_seen {
                NodeStatus::SmoothAtInspected
            } else {
                NodeStatus::NoVanishingPoint
            };
            return Ok(TraceNode {
                vars: vars.to_vec(),
                gens: gens_text,
                maxinv: InvariantValue::smooth(1),
                point: None,
                centre: None,
                regime,
                status,
                children: Vec::new(),
            });
        }
        // Deterministic argmax: first point attaining the maximum.
        let mut best = 0;
        for i in 1..singular.len() {
            if compare_inv(&singular[i].1, &singular[best].1) == Ordering::Greater {
                best = i;
            }
        }
        let (point, maxinv, run) = singular.swap_remove(best);
        let centre = CentreSummary {
            params: run.centre.params.iter().map(|p| p.to_string()).collect(),
            invariant: run.centre.inv.entries().to_vec(),
            weights: run.centre.weights.clone(),
            marking: run.centre.marking,
        };
        if self.budget == 0 {
            self.complete = false;
            return Ok(TraceNode {
                vars: vars.to_vec(),
                gens: gens_text,
                maxinv,
                point: Some(point),
                centre: Some(centre),
                regime,
                status: NodeStatus::StepBudgetExhausted,
                children: Vec::new(),
            });
        }
        self.budget -= 1;
        self.blowups += 1;
        let frame = &run.trace.frame;
        let weights = &run.centre.weights;
        let mut children = Vec::new();
        for i in 0..weights.len() {
            let chart = chart_substitution(weights, &frame.vars, i);
            let transform = proper_transform(&frame.cur_gens, weights, &chart)?;
            for t in &transform {
                debug_assert!(mu_semi_invariant(&t.body, &chart));
            }
            let info = ChartInfo {
                index: i + 1,
                stabilizer_order: chart.stabilizer_order,
                substitution: frame
                    .vars
                    .iter()
                    .zip(&chart.subst.images)
                    .map(|(v, im)| (v.clone(), im.body.to_string()))
                    .collect(),
            };
            let child = self.node(&chart.vars, &transform, &[])?;
            children.push((info, child));
        }
        Ok(TraceNode {
            vars: vars.to_vec(),
            gens: gens_text,
            maxinv,
            point: Some(point),
            centre: Some(centre),
            regime,
            status: NodeStatus::BlownUp,
            children,
        })
    }
}

/// Blow up repeatedly at the associated centre of the worst inspected point
/// until every chart is smooth at all inspected points or the step budget
/// runs out. The trace verifier then asserts strict invariant decrease
/// along every edge.
pub fn resolve(
    ideal: &Ideal,
    hint: Option<&PointQ>,
    max_steps: u32,
    samples: &[PointQ],
) -> Result<ResolutionTrace> {
    if max_steps == 0 {
        return Err(Error::InvariantViolation("max_steps must be >= 1".into()));
    }
    let mut extra: Vec<PointQ> = samples.to_vec();
    if let Some(p) = hint {
        extra.push(p.clone());
    }
    let mut resolver = Resolver {
        budget: max_steps,
        blowups: 0,
        complete: true,
        opts: SearchOptions::default(),
    };
    let root = resolver.node(&ideal.vars, &ideal.gens, &extra)?;
    let trace = ResolutionTrace {
        root,
        blowups: resolver.blowups,
        complete: resolver.complete,
    };
    verify_trace(&trace)?;
    Ok(trace)
}

/// Strict decrease of the inspected maximal invariant along every edge.
/// A violation falsifies the decrease theorem at desk scale, which can only
/// mean an implementation bug.
pub fn verify_trace(trace: &ResolutionTrace) -> Result<()> {
    fn walk(node: &TraceNode) -> Result<()> {
        for (_, child) in &node.children {
            if compare_inv(&child.maxinv, &node.maxinv) != Ordering::Less {
                return Err(Error::InvariantViolation(format!(
                    "invariant did not decrease: parent {} child {}",
                    node.maxinv.display(),
                    child.maxinv.display()
                )));
            }
            walk(child)?;
        }
        Ok(())
    }
    walk(&trace.root)
}

impl TraceNode {
    pub fn to_json(&self) -> Json {
        let mut fields = vec![
            (
                "vars".to_string(),
                Json::Arr(self.vars.iter().map(Json::str).collect()),
            ),
            (
                "generators".to_string(),
                Json::Arr(self.gens.iter().map(Json::str).collect()),
            ),
            ("maxinv".to_string(), Json::str(self.maxinv.display())),
            ("regime".to_string(), Json::str(self.regime.clone())),
            (
                "status".to_string(),
                Json::str(match self.status {
                    NodeStatus::SmoothAtInspected => "smooth at inspected points",
                    NodeStatus::NoVanishingPoint => "no inspected point on the variety",
                    NodeStatus::BlownUp => "blown up",
                    NodeStatus::StepBudgetExhausted => "incomplete: step budget exhausted",
                }),
            ),
        ];
        if let Some(p) = &self.point {
            fields.push((
                "point".to_string(),
                Json::Arr(
                    p.coords
                        .iter()
                        .map(|c| Json::str(crate::expr_io::rat_pq(c)))
                        .collect(),
                ),
            ));
        }
        if let Some(c) = &self.centre {
            fields.push((
                "centre".to_string(),
                Json::Obj(vec![
                    (
                        "parameters".to_string(),
                        Json::Arr(c.params.iter().map(Json::str).collect()),
                    ),
                    (
                        "invariant".to_string(),
                        Json::Arr(
                            c.invariant
                                .iter()
                                .map(|r| Json::str(crate::expr_io::rat_pq(r)))
                                .collect(),
                        ),
                    ),
                    (
                        "weights".to_string(),
                        Json::Arr(c.weights.iter().map(|w| Json::Int(*w as i64)).collect()),
                    ),
                    ("marking".to_string(), Json::Int(c.marking as i64)),
                ]),
            ));
        }
        if !self.children.is_empty() {
            fields.push((
                "charts".to_string(),
                Json::Arr(
                    self.children
                        .iter()
                        .map(|(info, child)| {
                            Json::Obj(vec![
                                ("index".to_string(), Json::Int(info.index as i64)),
                                (
                                    "stabilizer".to_string(),
                                    Json::Int(info.stabilizer_order as i64),
                                ),
                                (
                                    "substitution".to_string(),
                                    Json::Obj(
                                        info.substitution
                                            .iter()
                                            .map(|(v, im)| (v.clone(), Json::str(im.clone())))
                                            .collect(),
                                    ),
                                ),
                                ("node".to_string(), child.to_json()),
                            ])
                        })
                        .collect(),
                ),
            ));
        }
        Json::Obj(fields)
    }
}

impl ResolutionTrace {
    pub fn to_json(&self) -> Json {
        Json::Obj(vec![
            ("root".to_string(), self.root.to_json()),
            ("blowups".to_string(), Json::Int(self.blowups as i64)),
            ("complete".to_string(), Json::Bool(self.complete)),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_algebra::{rat_int, TruncatedSeries};
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
    fn chart_substitutions() {
        // Cusp centre with weights (3,2): the x-chart maps x ↦ s^3, y ↦ s^2 ỹ.
        let chart = chart_substitution(&[3, 2], &vars(&["x", "y"]), 0);
        assert_eq!(chart.vars, vars(&["s", "y~"]));
        assert_eq!(chart.stabilizer_order, 3);
        assert_eq!(chart.subst.images[0].body.to_string(), "s^3");
        assert_eq!(chart.subst.images[1].body.to_string(), "s^2*y~");
        // Classical blow-up chart.
        let chart = chart_substitution(&[1], &vars(&["x"]), 0);
        assert_eq!(chart.subst.images[0].body.to_string(), "s");
        // Whitney weights (3,2,2), third chart: z ↦ s^2.
        let chart = chart_substitution(&[3, 2, 2], &vars(&["x", "y", "z"]), 2);
        assert_eq!(chart.vars, vars(&["s", "x~", "y~"]));
        assert_eq!(chart.subst.images[0].body.to_string(), "s^3*x~");
        assert_eq!(chart.subst.images[1].body.to_string(), "s^2*y~");
        assert_eq!(chart.subst.images[2].body.to_string(), "s^2");
        assert_eq!(chart.stabilizer_order, 2);
    }

    #[test]
    fn proper_transforms_cusp() {
        let g = [series("x^2 - y^3", &["x", "y"])];
        let x_chart = chart_substitution(&[3, 2], &vars(&["x", "y"]), 0);
        let t = proper_transform(&g, &[3, 2], &x_chart).unwrap();
        assert_eq!(t[0].body.to_string(), "-y~^3 + 1");
        let y_chart = chart_substitution(&[3, 2], &vars(&["x", "y"]), 1);
        let t = proper_transform(&g, &[3, 2], &y_chart).unwrap();
        assert_eq!(t[0].body.to_string(), "x~^2 - 1");
    }

    #[test]
    fn proper_transform_whitney_charts() {
        let g = [series("x^2 - y^2*z", &["x", "y", "z"])];
        let w = [3u64, 2, 2];
        let texts: Vec<String> = (0..3)
            .map(|i| {
                let chart = chart_substitution(&w, &vars(&["x", "y", "z"]), i);
                let t = proper_transform(&g, &w, &chart).unwrap();
                assert!(mu_semi_invariant(&t[0].body, &chart));
                t[0].body.to_string()
            })
            .collect();
        assert_eq!(texts[0], "-y~^2*z~ + 1");
        assert_eq!(texts[1], "x~^2 - z~");
        assert_eq!(texts[2], "x~^2 - y~^2");
    }

    #[test]
    fn initial_forms() {
        let f = parse_poly("x^2 - y^3 + y^4", &vars(&["x", "y"])).unwrap();
        assert_eq!(
            initial_form(&f, &[3, 2]),
            parse_poly("x^2 - y^3", &vars(&["x", "y"])).unwrap()
        );
        let q = parse_poly("x^2 - y^3", &vars(&["x", "y"])).unwrap();
        assert_eq!(initial_form(&q, &[3, 2]), q);
        let f = parse_poly("x^2 - y^2*z - y^4", &vars(&["x", "y", "z"])).unwrap();
        assert_eq!(
            initial_form(&f, &[3, 2, 2]),
            parse_poly("x^2 - y^2*z", &vars(&["x", "y", "z"])).unwrap()
        );
    }

    #[test]
    fn initialisation_invariance() {
        let p2 = PointQ::origin(2);
        let p3 = PointQ::origin(3);
        assert!(
            check_initialisation_invariance(&ideal(&["x^2 - y^3 + y^4"], &["x", "y"]), &p2)
                .unwrap()
        );
        assert!(check_initialisation_invariance(
            &ideal(&["x^2 - y^2*z - y^5"], &["x", "y", "z"]),
            &p3
        )
        .unwrap());
        // Quasi-homogeneous input is its own initialisation.
        assert!(
            check_initialisation_invariance(&ideal(&["x^2 - y^3"], &["x", "y"]), &p2).unwrap()
        );
    }

    #[test]
    fn cusp_resolves_in_one_step() {
        let trace = resolve(&ideal(&["x^2 - y^3"], &["x", "y"]), None, 10, &[]).unwrap();
        assert_eq!(trace.blowups, 1);
        assert!(trace.complete);
        assert_eq!(trace.root.status, NodeStatus::BlownUp);
        assert_eq!(trace.root.children.len(), 2);
        for (_, child) in &trace.root.children {
            assert_eq!(child.status, NodeStatus::SmoothAtInspected);
        }
        verify_trace(&trace).unwrap();
    }

    #[test]
    fn a_m_even_resolves_in_one_step() {
        for m in [2u32, 4, 6] {
            let trace = resolve(
                &ideal(&[&format!("x^2 - y^{}", m + 1)], &["x", "y"]),
                None,
                10,
                &[],
            )
            .unwrap();
            assert_eq!(trace.blowups, 1, "A_{}", m);
            for (_, child) in &trace.root.children {
                assert!(matches!(
                    child.status,
                    NodeStatus::SmoothAtInspected | NodeStatus::NoVanishingPoint
                ));
            }
        }
    }

    #[test]
    fn whitney_first_blowup_decreases() {
        let trace = resolve(&ideal(&["x^2 - y^2*z"], &["x", "y", "z"]), None, 10, &[]).unwrap();
        assert_eq!(
            trace.root.maxinv,
            InvariantValue::Inv(vec![rat_int(2), rat_int(3), rat_int(3)])
        );
        // After one step the inspected maxinv over all charts is (2,2).
        let bound = InvariantValue::Inv(vec![rat_int(2), rat_int(2)]);
        let mut seen_22 = false;
        for (_, child) in &trace.root.children {
            assert_ne!(compare_inv(&child.maxinv, &bound), Ordering::Greater);
            if child.maxinv == bound {
                seen_22 = true;
            }
        }
        assert!(seen_22, "the z-chart keeps a (2,2) line");
        assert!(trace.complete);
        verify_trace(&trace).unwrap();
    }

    #[test]
    fn step_budget_flags_incomplete() {
        let trace = resolve(&ideal(&["x^2 - y^2*z"], &["x", "y", "z"]), None, 1, &[]).unwrap();
        assert!(!trace.complete);
        let found = trace
            .root
            .children
            .iter()
            .any(|(_, c)| c.status == NodeStatus::StepBudgetExhausted);
        assert!(found);
    }

    #[test]
    fn smooth_input_has_no_blowups() {
        let trace = resolve(&ideal(&["x - y^2"], &["x", "y"]), None, 10, &[]).unwrap();
        assert_eq!(trace.blowups, 0);
        assert_eq!(trace.root.status, NodeStatus::SmoothAtInspected);
    }
}
