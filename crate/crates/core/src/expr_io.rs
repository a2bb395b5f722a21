//! Text front end: polynomial expression parsing, stable report
//! serialization, and SVG Newton-polygon figures for plane curves.

use crate::core_algebra::{MultiIndex, Polynomial, Rat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Expression tree produced by the parser. Exponents are non-negative
/// integer literals; division appears only inside rational literals.
#[derive(Debug, Clone, PartialEq)]
pub enum ExprAst {
    Sum(Box<ExprAst>, Box<ExprAst>),
    Diff(Box<ExprAst>, Box<ExprAst>),
    Product(Box<ExprAst>, Box<ExprAst>),
    Power(Box<ExprAst>, u32),
    Neg(Box<ExprAst>),
    Var(usize),
    Lit(Rat),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            b'/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                toks.push((Tok::Int(n), start));
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => {
                return Err(Error::Parse {
                    msg: format!("unexpected character `{}`", b as char),
                    offset: i,
                })
            }
        }
    }
    Ok(Lexer {
        toks,
        pos: 0,
        end: text.len(),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        let off = self.offset();
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            _ => Err(Error::Parse {
                msg: format!("expected {}", what),
                offset: off,
            }),
        }
    }
}

struct Parser<'a> {
    lx: Lexer,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<ExprAst> {
        let mut acc = self.term()?;
        loop {
            match self.lx.peek() {
                Some(Tok::Plus) => {
                    self.lx.next();
                    acc = ExprAst::Sum(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.lx.next();
                    acc = ExprAst::Diff(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := unary ('*' unary)*
    fn term(&mut self) -> Result<ExprAst> {
        let mut acc = self.unary()?;
        while matches!(self.lx.peek(), Some(Tok::Star)) {
            self.lx.next();
            acc = ExprAst::Product(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<ExprAst> {
        if matches!(self.lx.peek(), Some(Tok::Minus)) {
            self.lx.next();
            return Ok(ExprAst::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    // power := atom ('^' exponent)?
    fn power(&mut self) -> Result<ExprAst> {
        let base = self.atom()?;
        if matches!(self.lx.peek(), Some(Tok::Caret)) {
            self.lx.next();
            let e = self.exponent()?;
            return Ok(ExprAst::Power(Box::new(base), e));
        }
        Ok(base)
    }

    // exponent := uint ('^' exponent)?   (right-associative tower)
    fn exponent(&mut self) -> Result<u32> {
        let off = self.lx.offset();
        match self.lx.next() {
            Some(Tok::Int(n)) => {
                let base = n.to_u32().ok_or(Error::Parse {
                    msg: "exponent too large".into(),
                    offset: off,
                })?;
                if matches!(self.lx.peek(), Some(Tok::Caret)) {
                    self.lx.next();
                    let e = self.exponent()?;
                    let mut acc: u32 = 1;
                    for _ in 0..e {
                        acc = acc.checked_mul(base).ok_or(Error::Parse {
                            msg: "exponent too large".into(),
                            offset: off,
                        })?;
                    }
                    Ok(acc)
                } else {
                    Ok(base)
                }
            }
            _ => Err(Error::Parse {
                msg: "exponent must be a non-negative integer literal".into(),
                offset: off,
            }),
        }
    }

    // atom := ident | number | '(' expr ')'
    // number := uint ('/' uint)?   (exact rational literal)
    fn atom(&mut self) -> Result<ExprAst> {
        let off = self.lx.offset();
        match self.lx.next() {
            Some(Tok::Ident(name)) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(ExprAst::Var(i)),
                None => Err(Error::Parse {
                    msg: format!("unknown identifier `{}`", name),
                    offset: off,
                }),
            },
            Some(Tok::Int(n)) => {
                if matches!(self.lx.peek(), Some(Tok::Slash)) {
                    self.lx.next();
                    let doff = self.lx.offset();
                    match self.lx.next() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(Error::Parse {
                                    msg: "zero denominator".into(),
                                    offset: doff,
                                });
                            }
                            Ok(ExprAst::Lit(Rat::new(n, d)))
                        }
                        _ => Err(Error::Parse {
                            msg: "malformed rational literal: expected denominator".into(),
                            offset: doff,
                        }),
                    }
                } else {
                    Ok(ExprAst::Lit(Rat::from_integer(n)))
                }
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.lx.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(Error::Parse {
                msg: "expected a variable, literal or `(`".into(),
                offset: off,
            }),
        }
    }
}

fn ast_to_poly(ast: &ExprAst, vars: &[String]) -> Polynomial {
    match ast {
        ExprAst::Sum(a, b) => ast_to_poly(a, vars).add(&ast_to_poly(b, vars)),
        ExprAst::Diff(a, b) => ast_to_poly(a, vars).sub(&ast_to_poly(b, vars)),
        ExprAst::Product(a, b) => ast_to_poly(a, vars).mul(&ast_to_poly(b, vars)),
        ExprAst::Power(a, e) => ast_to_poly(a, vars).pow(*e),
        ExprAst::Neg(a) => ast_to_poly(a, vars).neg(),
        ExprAst::Var(i) => Polynomial::var(vars, *i),
        ExprAst::Lit(c) => Polynomial::constant(vars, c.clone()),
    }
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parse an expression into a polynomial over the declared variables.
/// Standard precedence (`^` > unary `-` > `*` > binary `+`/`-`), no implicit
/// multiplication, exact rational literals `p/q`.
pub fn parse_poly(text: &str, vars: &[String]) -> Result<Polynomial> {
    if vars.is_empty() {
        return Err(Error::Parse {
            msg: "variable list is empty".into(),
            offset: 0,
        });
    }
    for (i, v) in vars.iter().enumerate() {
        if !valid_var_name(v) {
            return Err(Error::Parse {
                msg: format!("invalid variable name `{}`", v),
                offset: 0,
            });
        }
        if vars[..i].contains(v) {
            return Err(Error::Parse {
                msg: format!("duplicate variable name `{}`", v),
                offset: 0,
            });
        }
    }
    let lx = lex(text)?;
    let mut p = Parser { lx, vars };
    let ast = p.expr()?;
    if p.lx.pos != p.lx.toks.len() {
        return Err(Error::Parse {
            msg: "trailing input".into(),
            offset: p.lx.offset(),
        });
    }
    Ok(ast_to_poly(&ast, vars))
}

/// Rational as `p/q` with q >= 1 and gcd(p, q) = 1, denominator always shown.
pub fn rat_pq(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Minimal JSON value with deterministic, key-sorted serialization.
#[derive(Debug, Clone, PartialEq)]
pub enum Json {
    Bool(bool),
    Int(i64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

fn escape(s: &str, out: &mut String) {
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
}

impl Json {
    pub fn str(s: impl Into<String>) -> Json {
        Json::Str(s.into())
    }

    fn write(&self, out: &mut String) {
        match self {
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(n) => out.push_str(&n.to_string()),
            Json::Str(s) => {
                out.push('"');
                escape(s, out);
                out.push('"');
            }
            Json::Arr(items) => {
                out.push('[');
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    it.write(out);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                let mut sorted: Vec<&(String, Json)> = fields.iter().collect();
                sorted.sort_by(|a, b| a.0.cmp(&b.0));
                out.push('{');
                for (i, (k, v)) in sorted.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('"');
                    escape(k, out);
                    out.push_str("\":");
                    v.write(out);
                }
                out.push('}');
            }
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        self.write(&mut s);
        s.push('\n');
        s
    }
}

/// Structured result record for an invariant/centre computation.
#[derive(Debug, Clone)]
pub struct ReportDocument {
    pub invariant: Vec<Rat>,
    pub parameters: Vec<String>,
    pub weights: Vec<u64>,
    pub marking: u64,
    pub method: String,
    pub point: Vec<Rat>,
    pub trace: Option<Json>,
}

impl ReportDocument {
    fn check(&self) {
        assert_eq!(self.weights.len(), self.invariant.len());
        for (w, a) in self.weights.iter().zip(&self.invariant) {
            let lhs = Rat::from_integer(BigInt::from(*w)) * a;
            assert_eq!(
                lhs,
                Rat::from_integer(BigInt::from(self.marking)),
                "weights[i] * invariant[i] must equal the marking"
            );
        }
        for pair in self.invariant.windows(2) {
            assert!(pair[0] <= pair[1], "invariant must be non-decreasing");
        }
    }

    pub fn to_json(&self) -> Json {
        let mut fields = vec![
            (
                "invariant".to_string(),
                Json::Arr(self.invariant.iter().map(|r| Json::str(rat_pq(r))).collect()),
            ),
            (
                "parameters".to_string(),
                Json::Arr(self.parameters.iter().map(Json::str).collect()),
            ),
            (
                "weights".to_string(),
                Json::Arr(self.weights.iter().map(|w| Json::Int(*w as i64)).collect()),
            ),
            ("marking".to_string(), Json::Int(self.marking as i64)),
            ("method".to_string(), Json::str(self.method.clone())),
            (
                "point".to_string(),
                Json::Arr(self.point.iter().map(|r| Json::str(rat_pq(r))).collect()),
            ),
        ];
        if let Some(t) = &self.trace {
            fields.push(("trace".to_string(), t.clone()));
        }
        Json::Obj(fields)
    }
}

/// Deterministic, key-sorted, newline-terminated serialization.
pub fn render_report(doc: &ReportDocument) -> String {
    doc.check();
    doc.to_json().render()
}

/// Human-readable variant of the same record.
pub fn render_report_text(doc: &ReportDocument) -> String {
    doc.check();
    let mut s = String::new();
    s.push_str(&format!(
        "invariant: ({})\n",
        doc.invariant
            .iter()
            .map(rat_pq)
            .collect::<Vec<_>>()
            .join(", ")
    ));
    s.push_str(&format!("parameters: {}\n", doc.parameters.join(", ")));
    s.push_str(&format!(
        "weights: ({})\n",
        doc.weights
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    s.push_str(&format!("marking: {}\n", doc.marking));
    s.push_str(&format!("method: {}\n", doc.method));
    s.push_str(&format!(
        "point: ({})\n",
        doc.point.iter().map(rat_pq).collect::<Vec<_>>().join(", ")
    ));
    s
}

fn fpix(x: f64) -> String {
    format!("{:.2}", x)
}

/// SVG figure of a plane-curve Newton polygon: lattice dots for the minimal
/// Newton elements and one hyperplane segment H(a_1, a_j) per invariant
/// entry, axes labelled a_1 and a_2.
pub fn newton_svg(minimal: &[MultiIndex], preinv: &[Rat]) -> Result<String> {
    if minimal.iter().any(|m| m.len() != 2) || minimal.is_empty() {
        return Err(Error::PlotDimension);
    }
    let ratf = |r: &Rat| -> f64 {
        r.numer().to_f64().unwrap_or(0.0) / r.denom().to_f64().unwrap_or(1.0)
    };
    let mut maxc: f64 = 1.0;
    for m in minimal {
        maxc = maxc.max(m.get(0) as f64).max(m.get(1) as f64);
    }
    for a in preinv {
        maxc = maxc.max(ratf(a));
    }
    let scale = 40.0;
    let margin = 50.0;
    let extent = maxc.ceil() + 1.0;
    let w = 2.0 * margin + scale * extent;
    let h = 2.0 * margin + scale * extent;
    let px = |v: f64| margin + scale * v;
    let py = |v: f64| h - margin - scale * v;

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        fpix(w), fpix(h), fpix(w), fpix(h)
    ));
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    // Lattice grid.
    let n = extent as u32;
    for i in 0..=n {
        let v = i as f64;
        s.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#ccd\" stroke-width=\"0.5\"/>\n",
            fpix(px(v)), fpix(py(0.0)), fpix(px(v)), fpix(py(extent))
        ));
        s.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#ccd\" stroke-width=\"0.5\"/>\n",
            fpix(px(0.0)), fpix(py(v)), fpix(px(extent)), fpix(py(v))
        ));
    }
    // Axes.
    s.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
        fpix(px(0.0)), fpix(py(0.0)), fpix(px(extent)), fpix(py(0.0))
    ));
    s.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
        fpix(px(0.0)), fpix(py(0.0)), fpix(px(0.0)), fpix(py(extent))
    ));
    // Hyperplane segments H(a_1, a_j); intercepts are (a_1, a_j).
    let palette = ["#b03030", "#3050b0", "#208040", "#806020"];
    if let Some(a1) = preinv.first() {
        for (j, aj) in preinv.iter().enumerate() {
            let color = palette[j.min(palette.len() - 1)];
            s.push_str(&format!(
                "<line data-intercepts=\"{},{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                rat_pq(a1),
                rat_pq(aj),
                fpix(px(ratf(a1))),
                fpix(py(0.0)),
                fpix(px(0.0)),
                fpix(py(ratf(aj))),
                color
            ));
        }
        // Axis intercept labels.
        s.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">a1 = {}</text>\n",
            fpix(px(ratf(a1)) - 10.0),
            fpix(py(0.0) + 16.0),
            rat_pq(a1)
        ));
        if let Some(ak) = preinv.last() {
            s.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" font-size=\"12\">a2 = {}</text>\n",
                fpix(px(0.0) - 45.0),
                fpix(py(ratf(ak))),
                rat_pq(ak)
            ));
        }
    }
    // Newton dots on top.
    for m in minimal {
        s.push_str(&format!(
            "<circle data-point=\"{},{}\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"black\"/>\n",
            m.get(0),
            m.get(1),
            fpix(px(m.get(0) as f64)),
            fpix(py(m.get(1) as f64))
        ));
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_algebra::{rat, rat_int};

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_spec_examples() {
        let p = parse_poly("x^2 - y^2*z", &vars(&["x", "y", "z"])).unwrap();
        assert_eq!(p.coeff(&MultiIndex::new(vec![2, 0, 0])), rat_int(1));
        assert_eq!(p.coeff(&MultiIndex::new(vec![0, 2, 1])), rat_int(-1));
        assert_eq!(p.num_terms(), 2);

        let z = parse_poly("0", &vars(&["x"])).unwrap();
        assert!(z.is_zero());

        let c = parse_poly("x^4 + x*y^4 + y^6", &vars(&["x", "y"])).unwrap();
        assert_eq!(c.num_terms(), 3);
    }

    #[test]
    fn parses_rationals_and_precedence() {
        let p = parse_poly("1/2*x + 3", &vars(&["x"])).unwrap();
        assert_eq!(p.coeff(&MultiIndex::new(vec![1])), rat(1, 2));
        assert_eq!(p.constant_term(), rat_int(3));
        // ^ binds tighter than unary minus.
        let q = parse_poly("-x^2", &vars(&["x"])).unwrap();
        assert_eq!(q.coeff(&MultiIndex::new(vec![2])), rat_int(-1));
        // Parentheses.
        let r = parse_poly("(x + 1)^2", &vars(&["x"])).unwrap();
        assert_eq!(r, parse_poly("x^2 + 2*x + 1", &vars(&["x"])).unwrap());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let e = parse_poly("x + w", &vars(&["x", "y"])).unwrap_err();
        match e {
            Error::Parse { offset, .. } => assert_eq!(offset, 4),
            _ => panic!("wrong error"),
        }
        let e = parse_poly("x^y", &vars(&["x", "y"])).unwrap_err();
        match e {
            Error::Parse { offset, msg } => {
                assert_eq!(offset, 2);
                assert!(msg.contains("integer"));
            }
            _ => panic!("wrong error"),
        }
        assert!(parse_poly("x x", &vars(&["x"])).is_err());
        assert!(parse_poly("x/2", &vars(&["x"])).is_err());
    }

    #[test]
    fn display_roundtrip() {
        let vs = vars(&["x", "y", "z"]);
        for text in [
            "x^2 - y^2*z",
            "0",
            "-x + 3/7*y^4 - 2",
            "x*y*z - 1/2",
            "5",
        ] {
            let p = parse_poly(text, &vs).unwrap();
            let q = parse_poly(&p.to_string(), &vs).unwrap();
            assert_eq!(p, q, "roundtrip failed for {}", text);
        }
    }

    #[test]
    fn report_is_stable_and_exact() {
        let doc = ReportDocument {
            invariant: vec![rat_int(2), rat_int(3), rat_int(3)],
            parameters: vec!["x".into(), "y".into(), "z".into()],
            weights: vec![3, 2, 2],
            marking: 6,
            method: "2".into(),
            point: vec![rat_int(0), rat_int(0), rat_int(0)],
            trace: None,
        };
        let out = render_report(&doc);
        assert!(out.contains("\"invariant\":[\"2/1\",\"3/1\",\"3/1\"]"));
        assert!(out.contains("\"weights\":[3,2,2]"));
        assert!(out.contains("\"marking\":6"));
        assert!(out.ends_with('\n'));
        assert_eq!(out, render_report(&doc));
        // Keys are sorted.
        let i = out.find("\"invariant\"").unwrap();
        let m = out.find("\"marking\"").unwrap();
        let w = out.find("\"weights\"").unwrap();
        assert!(i < m && m < w);
    }

    #[test]
    fn smooth_line_report() {
        let doc = ReportDocument {
            invariant: vec![rat_int(1)],
            parameters: vec!["x".into()],
            weights: vec![1],
            marking: 1,
            method: "1".into(),
            point: vec![rat_int(0), rat_int(0)],
            trace: None,
        };
        assert!(render_report(&doc).contains("\"invariant\":[\"1/1\"]"));
    }

    #[test]
    fn svg_newton_curve() {
        let dots = vec![
            MultiIndex::new(vec![4, 0]),
            MultiIndex::new(vec![1, 4]),
            MultiIndex::new(vec![0, 6]),
        ];
        let inv = vec![rat_int(4), rat(16, 3)];
        let svg = newton_svg(&dots, &inv).unwrap();
        assert!(svg.contains("data-point=\"4,0\""));
        assert!(svg.contains("data-point=\"1,4\""));
        assert!(svg.contains("data-point=\"0,6\""));
        assert!(svg.contains("data-intercepts=\"4/1,4/1\""));
        assert!(svg.contains("data-intercepts=\"4/1,16/3\""));
        // Single-dot smooth case.
        let svg = newton_svg(&[MultiIndex::new(vec![1, 0])], &[rat_int(1)]).unwrap();
        assert!(svg.contains("data-point=\"1,0\""));
        assert!(svg.contains("data-intercepts=\"1/1,1/1\""));
        // Cusp.
        let svg = newton_svg(
            &[MultiIndex::new(vec![2, 0]), MultiIndex::new(vec![0, 3])],
            &[rat_int(2), rat_int(3)],
        )
        .unwrap();
        assert!(svg.contains("data-intercepts=\"2/1,3/1\""));
        // Plane curves only.
        assert!(matches!(
            newton_svg(&[MultiIndex::new(vec![1, 0, 0])], &[rat_int(1)]),
            Err(Error::PlotDimension)
        ));
    }

    #[test]
    fn parse_render_fuzz_roundtrip() {
        // Deterministic LCG over random small polynomials.
        let vs = vars(&["x", "y"]);
        let mut seed = 42u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as i64
        };
        for _ in 0..200 {
            let mut p = Polynomial::zero(&vs);
            for _ in 0..4 {
                let e0 = (next().unsigned_abs() % 5) as u32;
                let e1 = (next().unsigned_abs() % 5) as u32;
                let num = next() % 9 - 4;
                let den = 1 + next().unsigned_abs() % 4;
                p = p.add(&Polynomial::monomial(
                    &vs,
                    MultiIndex::new(vec![e0, e1]),
                    rat(num, den as i64),
                ));
            }
            let q = parse_poly(&p.to_string(), &vs).unwrap();
            assert_eq!(p, q);
        }
    }
}
