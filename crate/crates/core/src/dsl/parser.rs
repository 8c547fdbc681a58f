//! Recursive-descent parser for scenario files. The grammar is documented
//! in `docs/grammar.ebnf`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::ast::*;
use super::lexer::{lex, Tok, Token};
use super::{Diagnostic, SourceSpan};
use crate::monoid::{MonoidRule, MonoidSpec, Trigger, WitnessSel};
use crate::monomial::{DegreeFunctional, IndexRange, Monomial, Selector, VarKey};
use crate::poly::{LinComb, RingPoly};
use crate::verdict::Bounds;

type PResult<T> = Result<T, Diagnostic>;

/// Parses every scenario in `src`.
pub fn parse(file: &str, src: &str) -> PResult<Vec<Scenario>> {
    let toks = lex(file, src)?;
    let mut p = Parser { file: file.to_string(), toks, pos: 0 };
    let mut out = Vec::new();
    p.skip_newlines();
    while !p.at_end() {
        out.push(p.scenario()?);
    }
    if out.is_empty() {
        return Err(Diagnostic::new(file, SourceSpan::new(1, 1), "no scenario in file"));
    }
    Ok(out)
}

/// Parses a file that must hold exactly one scenario.
pub fn parse_scenario(file: &str, src: &str) -> PResult<Scenario> {
    let mut all = parse(file, src)?;
    if all.len() > 1 {
        return Err(Diagnostic::new(file, SourceSpan::new(1, 1), format!("expected one scenario, found {}", all.len())));
    }
    Ok(all.remove(0))
}

struct Parser {
    file: String,
    toks: Vec<Token>,
    pos: usize,
}

/// Names visible inside one scenario.
#[derive(Default)]
struct Scope {
    kinds: HashMap<String, Kind>,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.tok)
    }

    fn span(&self) -> SourceSpan {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|t| t.span)
            .unwrap_or_default()
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(self.diag(self.span(), msg))
    }

    fn diag(&self, span: SourceSpan, msg: impl Into<String>) -> Diagnostic {
        Diagnostic::new(&self.file, span, msg)
    }

    fn skip_newlines(&mut self) {
        while self.peek() == Some(&Tok::Newline) {
            self.pos += 1;
        }
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(t)) if *t == s)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(t)) if t == w)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        let hit = self.is_sym(s);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn eat_word(&mut self, w: &str) -> bool {
        let hit = self.is_word(w);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn expect_sym(&mut self, s: &str) -> PResult<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            self.err(format!("expected `{s}`, found {}", self.found()))
        }
    }

    fn expect_word(&mut self, w: &str) -> PResult<()> {
        if self.eat_word(w) {
            Ok(())
        } else {
            self.err(format!("expected `{w}`, found {}", self.found()))
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            None => "end of file".into(),
            Some(Tok::Newline) => "end of line".into(),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::Int(n)) => format!("`{n}`"),
            Some(Tok::Str(s)) => format!("\"{s}\""),
            Some(Tok::Sym(s)) => format!("`{s}`"),
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err(format!("expected a name, found {}", self.found())),
        }
    }

    fn int(&mut self) -> PResult<i64> {
        let neg = self.eat_sym("-");
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(if neg { -n } else { n })
            }
            _ => self.err(format!("expected an integer, found {}", self.found())),
        }
    }

    fn index(&mut self) -> PResult<u32> {
        let span = self.span();
        let n = self.int()?;
        u32::try_from(n).map_err(|_| self.diag(span, format!("index {n} must be nonnegative")))
    }

    fn string(&mut self) -> PResult<String> {
        match self.peek() {
            Some(Tok::Str(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err(format!("expected a string, found {}", self.found())),
        }
    }

    fn end_line(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::Newline) => {
                self.skip_newlines();
                Ok(())
            }
            _ => self.err(format!("expected end of line, found {}", self.found())),
        }
    }

    fn comma_list<T>(&mut self, close: &str, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat_sym(close) {
                return Ok(out);
            }
            self.expect_sym(",")?;
        }
    }

    fn scenario(&mut self) -> PResult<Scenario> {
        self.expect_word("scenario")?;
        let name = self.string()?;
        self.end_line()?;
        let mut sc = Scenario {
            name,
            file: self.file.clone(),
            spec: MonoidSpec::default(),
            indeterminate: None,
            bounds: None,
            items: Vec::new(),
        };
        let mut scope = Scope::default();
        let start = self.span();
        while !self.at_end() && !self.is_word("scenario") {
            self.statement(&mut sc, &mut scope)?;
        }
        sc.spec.validate().map_err(|e| self.diag(start, e.to_string()))?;
        Ok(sc)
    }

    fn statement(&mut self, sc: &mut Scenario, scope: &mut Scope) -> PResult<()> {
        let span = self.span();
        let kw = self.ident()?;
        match kw.as_str() {
            "vars" => {
                let names = self.names()?;
                for n in names {
                    self.fresh_var(sc, &n, span)?;
                    sc.spec.scalars.push(Arc::from(n.as_str()));
                }
            }
            "family" => {
                let names = self.names()?;
                for n in names {
                    self.fresh_var(sc, &n, span)?;
                    sc.spec.families.push(Arc::from(n.as_str()));
                }
            }
            "indeterminate" => {
                let n = self.ident()?;
                self.fresh_var(sc, &n, span)?;
                sc.indeterminate = Some(n);
            }
            "rule" => {
                let r = self.rule(sc)?;
                sc.spec.rules.push(r);
            }
            "bounds" => {
                self.expect_word("degree")?;
                let d = self.index()?;
                self.expect_word("window")?;
                let w = self.index()?;
                sc.bounds = Some(Bounds::new(d, w));
            }
            "ideal" | "poly" | "upper" => {
                let d = self.decl(&kw, sc, scope, span)?;
                sc.items.push(Item::Decl(d));
            }
            "fixture" => {
                let n = self.ident()?;
                match scope.kinds.get(&n) {
                    None => return Err(self.diag(span, format!("unknown identifier `{n}`"))),
                    Some(Kind::Poly) => {
                        return Err(self.diag(span, format!("type mismatch: fixture `{n}` is a polynomial, expected an ideal")))
                    }
                    _ => {}
                }
                sc.items.push(Item::Fixture(n, span));
            }
            "assert" => {
                let a = self.assertion(sc, scope, span)?;
                sc.items.push(Item::Assert(a));
            }
            _ => return Err(self.diag(span, format!("unknown statement `{kw}`"))),
        }
        self.end_line()
    }

    fn names(&mut self) -> PResult<Vec<String>> {
        let mut out = vec![self.ident()?];
        while self.eat_sym(",") {
            out.push(self.ident()?);
        }
        Ok(out)
    }

    fn fresh_var(&self, sc: &Scenario, n: &str, span: SourceSpan) -> PResult<()> {
        let taken = sc.spec.scalars.iter().chain(&sc.spec.families).any(|s| &**s == n)
            || sc.indeterminate.as_deref() == Some(n);
        if taken {
            Err(self.diag(span, format!("`{n}` is declared twice")))
        } else {
            Ok(())
        }
    }

    fn rule(&mut self, sc: &Scenario) -> PResult<MonoidRule> {
        let span = self.span();
        let kind = self.ident()?;
        let malformed = |p: &Self, what: &str| p.diag(span, format!("malformed rule: {what}"));
        match kind.as_str() {
            "nonneg" => Ok(MonoidRule::NonNegative),
            "linear" => {
                self.expect_sym(":").map_err(|_| malformed(self, "expected `linear: deg(...) >= deg(F[*])`"))?;
                let lhs = self.functional(sc).map_err(|d| malformed(self, &d.message))?;
                if !self.eat_sym(">=") || !self.eat_word("deg") || !self.eat_sym("(") {
                    return Err(malformed(self, "expected `>= deg(F[*])`"));
                }
                let fam = self.ident()?;
                if !self.family_exists(sc, &fam) {
                    return Err(malformed(self, &format!("`{fam}` is not a family")));
                }
                if !(self.eat_sym("[") && self.eat_sym("*") && self.eat_sym("]") && self.eat_sym(")")) {
                    return Err(malformed(self, "expected `F[*])`"));
                }
                Ok(MonoidRule::LinearDegree { lhs, family: Arc::from(fam.as_str()) })
            }
            "support" => {
                self.expect_sym(":").map_err(|_| malformed(self, "expected `support: A => B or ...`"))?;
                let t = self.ident()?;
                let trigger = if self.eat_sym("[") {
                    if !self.family_exists(sc, &t) || !self.eat_word("n") || !self.eat_sym("]") {
                        return Err(malformed(self, "a family trigger is written `F[n]`"));
                    }
                    Trigger::Family(Arc::from(t.as_str()))
                } else {
                    if !self.scalar_exists(sc, &t) {
                        return Err(malformed(self, &format!("`{t}` is not a variable")));
                    }
                    Trigger::Scalar(Arc::from(t.as_str()))
                };
                if !self.eat_sym("=>") {
                    return Err(malformed(self, "expected `=>`"));
                }
                let mut witnesses = vec![self.witness(sc, &trigger).map_err(|d| malformed(self, &d.message))?];
                while self.eat_word("or") {
                    witnesses.push(self.witness(sc, &trigger).map_err(|d| malformed(self, &d.message))?);
                }
                Ok(MonoidRule::SupportImplication { trigger, witnesses })
            }
            "exclude" => {
                self.expect_sym(":").map_err(|_| malformed(self, "expected `exclude: deg(...) != k, ...`"))?;
                let functional = self.functional(sc).map_err(|d| malformed(self, &d.message))?;
                if !self.eat_sym("!=") {
                    return Err(malformed(self, "expected `!=`"));
                }
                let mut excluded = vec![self.int()?];
                while self.eat_sym(",") {
                    excluded.push(self.int()?);
                }
                Ok(MonoidRule::DegreeExcludes { functional, excluded })
            }
            other => Err(malformed(self, &format!("unknown rule kind `{other}`"))),
        }
    }

    fn witness(&mut self, sc: &Scenario, trigger: &Trigger) -> PResult<WitnessSel> {
        if self.eat_word("exists") {
            let fam = self.ident()?;
            if !self.family_exists(sc, &fam) {
                return self.err(format!("`{fam}` is not a family"));
            }
            self.expect_sym("[")?;
            let up_to_trigger = if self.eat_sym("*") {
                false
            } else if self.eat_sym("<=") && self.eat_word("n") {
                if !matches!(trigger, Trigger::Family(_)) {
                    return self.err("`<= n` needs a family trigger");
                }
                true
            } else {
                return self.err("expected `[*]` or `[<=n]`");
            };
            self.expect_sym("]")?;
            Ok(WitnessSel::Family { family: Arc::from(fam.as_str()), up_to_trigger })
        } else {
            let n = self.ident()?;
            if !self.scalar_exists(sc, &n) {
                return self.err(format!("`{n}` is not a variable"));
            }
            Ok(WitnessSel::Scalar(Arc::from(n.as_str())))
        }
    }

    fn family_exists(&self, sc: &Scenario, n: &str) -> bool {
        sc.spec.families.iter().any(|f| &**f == n)
    }

    fn scalar_exists(&self, sc: &Scenario, n: &str) -> bool {
        sc.spec.scalars.iter().any(|f| &**f == n)
    }

    /// `deg(sel, ...)`, with the keyword already consumed or not.
    fn functional(&mut self, sc: &Scenario) -> PResult<DegreeFunctional> {
        self.eat_word("deg");
        self.selectors(sc)
    }

    fn selectors(&mut self, sc: &Scenario) -> PResult<DegreeFunctional> {
        self.expect_sym("(")?;
        let sels = self.comma_list(")", |p| p.selector(sc))?;
        if sels.is_empty() {
            return self.err("empty selector list");
        }
        Ok(DegreeFunctional::new(sels))
    }

    fn selector(&mut self, sc: &Scenario) -> PResult<Selector> {
        if self.eat_sym("*") {
            return Ok(Selector::All);
        }
        let span = self.span();
        let n = self.ident()?;
        if self.eat_sym("[") {
            if !self.family_exists(sc, &n) {
                return Err(self.diag(span, format!("unknown identifier `{n}`")));
            }
            let r = if self.eat_sym("*") {
                IndexRange::Any
            } else if self.eat_sym("<=") {
                IndexRange::AtMost(self.index()?)
            } else {
                IndexRange::Exactly(self.index()?)
            };
            self.expect_sym("]")?;
            Ok(Selector::Family(Arc::from(n.as_str()), r))
        } else if self.scalar_exists(sc, &n) {
            Ok(Selector::Scalar(Arc::from(n.as_str())))
        } else {
            Err(self.diag(span, format!("unknown identifier `{n}`")))
        }
    }

    /// `name[index]^exp`; the indeterminate is returned as `Err(power)`.
    fn factor(&mut self, sc: &Scenario) -> PResult<Result<(VarKey, i64), u32>> {
        let span = self.span();
        let n = self.ident()?;
        let key = if self.eat_sym("[") {
            if !self.family_exists(sc, &n) {
                return Err(self.diag(span, format!("unknown identifier `{n}`")));
            }
            let i = self.index()?;
            self.expect_sym("]")?;
            Some(VarKey::indexed(&n, i))
        } else if self.scalar_exists(sc, &n) {
            Some(VarKey::scalar(&n))
        } else if sc.indeterminate.as_deref() == Some(n.as_str()) {
            None
        } else if self.family_exists(sc, &n) {
            return Err(self.diag(span, format!("family `{n}` needs an index")));
        } else {
            return Err(self.diag(span, format!("unknown identifier `{n}`")));
        };
        let e = if self.eat_sym("^") { self.int()? } else { 1 };
        match key {
            Some(k) => Ok(Ok((k, e))),
            None if e >= 0 => Ok(Err(e as u32)),
            None => Err(self.diag(span, format!("negative power of {n}"))),
        }
    }

    fn monomial(&mut self, sc: &Scenario) -> PResult<Monomial> {
        let span = self.span();
        let p = self.poly(sc)?;
        match (p.degree(), p.coeff(0).as_term()) {
            (Some(0), Some((m, c))) if c.is_one() => Ok(m.clone()),
            _ => Err(self.diag(span, format!("type mismatch: `{p}` is not a monomial"))),
        }
    }

    /// A polynomial in the indeterminate with rational coefficients.
    fn poly(&mut self, sc: &Scenario) -> PResult<RingPoly> {
        let mut out = RingPoly::zero();
        let mut neg = self.eat_sym("-");
        loop {
            let (c, m, k) = self.term(sc)?;
            let c = if neg { -c } else { c };
            out = out.add(&RingPoly::from_coeffs([(k, LinComb::term(c, m))]));
            if self.eat_sym("+") {
                neg = false;
            } else if self.eat_sym("-") {
                neg = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn term(&mut self, sc: &Scenario) -> PResult<(BigRational, Monomial, u32)> {
        let mut c = BigRational::one();
        let mut m = Monomial::one();
        let mut k = 0;
        loop {
            if let Some(Tok::Int(n)) = self.peek() {
                let n = BigInt::from(*n);
                self.pos += 1;
                let d = if self.eat_sym("/") {
                    let span = self.span();
                    let d = self.int()?;
                    if d == 0 {
                        return Err(self.diag(span, "zero denominator"));
                    }
                    BigInt::from(d)
                } else {
                    BigInt::one()
                };
                c *= BigRational::new(n, d);
            } else {
                match self.factor(sc)? {
                    Ok((key, e)) => m.add_exp(key, e),
                    Err(p) => k += p,
                }
            }
            if !self.eat_sym("*") {
                return Ok((c, m, k));
            }
        }
    }
}

/// Argument shapes accepted by assertion predicates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Param {
    Ideal,
    /// An ideal of `R` or an upper to zero.
    Prime,
    /// Any set: ideal, extended ideal or upper to zero.
    Set,
    Elem,
    Mono,
}

impl Param {
    fn accepts(&self, k: Kind) -> bool {
        match self {
            Param::Ideal => k == Kind::Ideal,
            Param::Prime => matches!(k, Kind::Ideal | Kind::Upper),
            Param::Set => k != Kind::Poly,
            Param::Elem | Param::Mono => k == Kind::Poly,
        }
    }

    fn describe(&self) -> &'static str {
        match self {
            Param::Ideal => "an ideal",
            Param::Prime => "an ideal or an upper to zero",
            Param::Set => "an ideal, extended ideal or upper to zero",
            Param::Elem => "an element",
            Param::Mono => "a monomial",
        }
    }
}

/// Predicate names and their parameters.
fn signature(pred: &str) -> Option<&'static [Param]> {
    use Param::*;
    Some(match pred {
        "closed" | "integrally_closed" | "completely_integrally_closed" => &[],
        "member" => &[Set, Elem],
        "t_member" | "v_member" | "prop_max_converse" => &[Ideal, Mono],
        "divisorial" | "maximal_divisorial" | "v_invertible" | "v_finite" | "prime" => &[Prime],
        "strong" | "t_invertible" | "t_ideal" | "maxdiv_rep" | "invertible" => &[Ideal],
        "upperdiv" => &[Prime],
        "subset" | "equal" => &[Set, Set],
        "not_t_maximal" => &[Prime, Set, Elem],
        _ => return None,
    })
}

impl Parser {
    fn decl(&mut self, kw: &str, sc: &Scenario, scope: &mut Scope, span: SourceSpan) -> PResult<Decl> {
        let name = self.ident()?;
        if scope.kinds.contains_key(&name) {
            return Err(self.diag(span, format!("`{name}` is declared twice")));
        }
        let is_var = sc.spec.scalars.iter().chain(&sc.spec.families).any(|s| **s == *name)
            || sc.indeterminate.as_deref() == Some(name.as_str());
        if is_var {
            return Err(self.diag(span, format!("`{name}` shadows a variable")));
        }
        self.expect_sym("=")?;
        let (value, kind) = match kw {
            "poly" => {
                if sc.indeterminate.is_none() {
                    return Err(self.diag(span, "`poly` needs an `indeterminate` declaration"));
                }
                (DeclValue::Poly(self.poly(sc)?), Kind::Poly)
            }
            "upper" => {
                self.expect_word("u2z")?;
                self.expect_sym("(")?;
                let f = self.name_of(scope, Kind::Poly)?;
                self.expect_sym(")")?;
                (DeclValue::Upper(f), Kind::Upper)
            }
            _ => {
                let (e, k) = self.ideal_expr(sc, scope)?;
                (DeclValue::Ideal(e), k)
            }
        };
        scope.kinds.insert(name.clone(), kind);
        Ok(Decl { name, value, span })
    }

    /// A declared name of the given kind.
    fn name_of(&mut self, scope: &Scope, want: Kind) -> PResult<String> {
        let span = self.span();
        let n = self.ident()?;
        match scope.kinds.get(&n) {
            None => Err(self.diag(span, format!("unknown identifier `{n}`"))),
            Some(k) if *k != want => Err(self.diag(
                span,
                format!("type mismatch: `{n}` is {} {}, expected {} {}", article(k.describe()), k.describe(), article(want.describe()), want.describe()),
            )),
            Some(_) => Ok(n),
        }
    }

    /// `term ('&' term)* ['certify' family]`.
    fn ideal_expr(&mut self, sc: &Scenario, scope: &Scope) -> PResult<(IdealExpr, Kind)> {
        let span = self.span();
        let (first, k) = self.ideal_term(sc, scope)?;
        let mut parts = vec![first];
        while self.eat_sym("&") {
            parts.push(self.ideal_term(sc, scope)?.0);
        }
        let cert = if self.eat_word("certify") {
            let f = self.ident()?;
            if !self.family_exists(sc, &f) {
                return Err(self.diag(span, format!("`{f}` is not a family")));
            }
            Some(f)
        } else {
            None
        };
        if parts.len() > 1 && k != Kind::Ideal {
            return Err(self.diag(span, "type mismatch: only ideals of R can be intersected"));
        }
        if parts.len() == 1 && cert.is_none() {
            let only = parts.pop().expect("one part");
            if matches!(only, IdealExpr::Atoms(_)) {
                return Err(self.diag(span, "a constraint block needs a bounding ideal, e.g. `ring & constraint{...}`"));
            }
            return Ok((only, k));
        }
        Ok((IdealExpr::Meet(parts, cert), Kind::Ideal))
    }

    fn ideal_term(&mut self, sc: &Scenario, scope: &Scope) -> PResult<(IdealExpr, Kind)> {
        let span = self.span();
        if self.eat_sym("(") {
            let (a, ka) = self.ideal_expr(sc, scope)?;
            self.expect_sym(":")?;
            let (b, kb) = self.ideal_expr(sc, scope)?;
            self.expect_sym(")")?;
            if ka != Kind::Ideal || kb != Kind::Ideal {
                return Err(self.diag(span, "type mismatch: colon takes two ideals of R"));
            }
            return Ok((IdealExpr::Colon(Box::new(a), Box::new(b)), Kind::Ideal));
        }
        let word = self.ident()?;
        let e = match word.as_str() {
            "ring" => IdealExpr::Ring,
            "gens" => {
                self.expect_sym("(")?;
                let gens = self.comma_list(")", |p| p.monomial(sc))?;
                if gens.is_empty() {
                    return Err(self.diag(span, "empty generator list"));
                }
                IdealExpr::Gens(gens)
            }
            "constraint" => {
                self.expect_sym("{")?;
                let atoms = self.comma_list("}", |p| p.atom(sc))?;
                if atoms.is_empty() {
                    return Err(self.diag(span, "empty constraint block"));
                }
                IdealExpr::Atoms(atoms)
            }
            "adjoin" => {
                self.expect_sym("(")?;
                let v = self.ident()?;
                if !self.scalar_exists(sc, &v) {
                    return Err(self.diag(span, format!("unknown identifier `{v}`")));
                }
                self.expect_sym(")")?;
                IdealExpr::Adjoin(v)
            }
            "content" => {
                self.expect_sym("(")?;
                let f = self.name_of(scope, Kind::Poly)?;
                self.expect_sym(")")?;
                IdealExpr::Content(f)
            }
            "extend" => {
                self.expect_sym("(")?;
                let q = self.name_of(scope, Kind::Ideal)?;
                self.expect_sym(")")?;
                return Ok((IdealExpr::Extend(q), Kind::Extended));
            }
            "sum" | "product" => {
                self.expect_sym("(")?;
                let (a, ka) = self.ideal_expr(sc, scope)?;
                self.expect_sym(",")?;
                let (b, kb) = self.ideal_expr(sc, scope)?;
                self.expect_sym(")")?;
                if ka != Kind::Ideal || kb != Kind::Ideal {
                    return Err(self.diag(span, format!("type mismatch: {word} takes two ideals of R")));
                }
                if word == "sum" {
                    IdealExpr::Sum(Box::new(a), Box::new(b))
                } else {
                    IdealExpr::Product(Box::new(a), Box::new(b))
                }
            }
            _ => {
                self.pos -= 1;
                let k = *scope.kinds.get(&word).ok_or_else(|| self.diag(span, format!("unknown identifier `{word}`")))?;
                self.pos += 1;
                if k == Kind::Poly {
                    return Err(self.diag(span, format!("type mismatch: `{word}` is a polynomial, expected an ideal")));
                }
                return Ok((IdealExpr::Name(word), k));
            }
        };
        Ok((e, Kind::Ideal))
    }

    fn atom(&mut self, sc: &Scenario) -> PResult<Atom> {
        if self.eat_word("deg") {
            let f = self.selectors(sc)?;
            self.expect_sym(">=")?;
            Ok(Atom::Degree(f, self.int()?))
        } else if self.eat_word("occurs") {
            Ok(Atom::Occurs(self.selectors(sc)?))
        } else {
            self.err(format!("expected `deg(...) >= k` or `occurs(...)`, found {}", self.found()))
        }
    }

    fn assertion(&mut self, sc: &Scenario, scope: &Scope, span: SourceSpan) -> PResult<Assertion> {
        let pred_span = self.span();
        let predicate = self.ident()?;
        let params = signature(&predicate).ok_or_else(|| self.diag(pred_span, format!("unknown predicate `{predicate}`")))?;
        self.expect_sym("(")?;
        let mut args = Vec::new();
        let mut spans = Vec::new();
        if !self.eat_sym(")") {
            loop {
                spans.push(self.span());
                args.push(self.arg(sc, scope)?);
                if self.eat_sym(")") {
                    break;
                }
                self.expect_sym(",")?;
            }
        }
        if args.len() != params.len() {
            return Err(self.diag(pred_span, format!("`{predicate}` takes {} arguments, got {}", params.len(), args.len())));
        }
        for ((a, p), s) in args.iter().zip(params).zip(&spans) {
            let (kind, label) = match a {
                Arg::Name(n) => (scope.kinds[n], format!("`{n}`")),
                Arg::Elem(e) => (Kind::Poly, format!("`{e}`")),
            };
            let elem_ok = matches!(a, Arg::Elem(_)) || !matches!(p, Param::Elem | Param::Mono);
            if !p.accepts(kind) || !elem_ok {
                return Err(self.diag(*s, format!("type mismatch: {label} is {} {}, expected {}", article(kind.describe()), kind.describe(), p.describe())));
            }
            if let (Param::Mono, Arg::Elem(e)) = (p, a) {
                if e.degree() != Some(0) || e.coeff(0).as_term().map(|(_, c)| !c.is_one()).unwrap_or(true) {
                    return Err(self.diag(*s, format!("type mismatch: `{e}` is not a monomial")));
                }
            }
        }
        self.expect_sym("=")?;
        let ex = self.ident()?;
        let expected = match ex.as_str() {
            "proved" => Expected::Proved,
            "refuted" => Expected::Refuted,
            "inconclusive" => Expected::Inconclusive,
            "unproved" => Expected::Unproved,
            _ => return self.err(format!("expected proved, refuted, inconclusive or unproved, found `{ex}`")),
        };
        let witness = if self.eat_sym("(") {
            if expected != Expected::Refuted {
                return self.err("only `refuted` takes a witness");
            }
            let w = self.poly(sc)?;
            self.expect_sym(")")?;
            Some(w)
        } else {
            None
        };
        self.expect_sym("@")?;
        let step = self.string()?;
        Ok(Assertion { predicate, args, expected, witness, step, span })
    }

    fn arg(&mut self, sc: &Scenario, scope: &Scope) -> PResult<Arg> {
        if let Some(Tok::Ident(n)) = self.peek() {
            let ends = matches!(self.peek_at(1), Some(Tok::Sym(",")) | Some(Tok::Sym(")")));
            if ends && scope.kinds.contains_key(n) {
                let n = n.clone();
                self.pos += 1;
                return Ok(Arg::Name(n));
            }
        }
        Ok(Arg::Elem(self.poly(sc)?))
    }
}

fn article(noun: &str) -> &'static str {
    if noun.starts_with(['a', 'e', 'i', 'o', 'u']) {
        "an"
    } else {
        "a"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::print;

    const HEAD: &str = "scenario \"t\"\nvars y, z\nfamily t\nindeterminate X\nrule nonneg\n";

    fn err(body: &str) -> String {
        parse("s.stide", &format!("{HEAD}{body}\n")).unwrap_err().to_string()
    }

    #[test]
    fn shipped_scenarios_parse() {
        for (name, src) in [("ex3_1", crate::harness::EX3_1), ("ex3_2", crate::harness::EX3_2)] {
            let sc = parse_scenario(name, src).unwrap();
            assert!(sc.assertions().count() > 10);
            assert_eq!(sc.bounds, Some(Bounds::new(8, 3)));
        }
        let sc = parse_scenario("ex3_2", crate::harness::EX3_2).unwrap();
        assert_eq!(sc.spec, crate::monoid::catalog::support_yzxt());
    }

    #[test]
    fn diagnostics_carry_positions() {
        assert_eq!(err("ideal I = gens(w)"), "s.stide:6:16: unknown identifier `w`");
        assert_eq!(err("rule linear: deg(y) >= 3"), "s.stide:6:6: malformed rule: expected `>= deg(F[*])`");
        assert_eq!(err("ideal I = gens()"), "s.stide:6:11: empty generator list");
        assert_eq!(
            err("poly f = y + X\nassert divisorial(f) = proved @ \"s\""),
            "s.stide:7:19: type mismatch: `f` is a polynomial, expected an ideal or an upper to zero"
        );
        assert!(err("ideal I = gens(y)\nassert divisorial(I, I) = proved @ \"s\"").contains("takes 1 arguments"));
        assert!(err("ideal I = gens(t)").contains("needs an index"));
        assert!(err("ideal y = ring").contains("shadows a variable"));
        assert!(err("ideal I = ring\nideal I = ring").contains("declared twice"));
        assert!(err("assert nonsense() = proved @ \"s\"").contains("unknown predicate"));
        assert!(err("ideal I = constraint{ deg(y) >= 1 }").contains("needs a bounding ideal"));
        assert!(err("rule support: t => y").contains("malformed rule"));
        assert!(err("assert member(y, 1) = proved @ \"s\"").contains("type mismatch"));
    }

    #[test]
    fn expressions() {
        let src = format!(
            "{HEAD}ideal I = gens(y^2*t[1], z^-1)\nideal J = (ring : I)\nideal K = sum(I, product(J, gens(y)))\n\
             ideal Q = ring & constraint{{ deg(y, t[<=2]) >= 1, occurs(*) }} certify t\n\
             poly f = -3/2*y*X^2 + z\nupper P = u2z(f)\nfixture P\n\
             assert member(P, y*X + 1) = refuted(y) @ \"x\"\n"
        );
        let sc = parse_scenario("e", &src).unwrap();
        assert_eq!(sc.decls().count(), 6);
        assert_eq!(sc.fixtures().collect::<Vec<_>>(), ["P"]);
        let q = sc.decls().find(|d| d.name == "Q").unwrap();
        assert!(matches!(&q.value, DeclValue::Ideal(IdealExpr::Meet(p, Some(c))) if p.len() == 2 && c == "t"));
    }

    /// Spans differ between a source and its printed form; nothing else may.
    fn without_spans(mut sc: Scenario) -> Scenario {
        for item in &mut sc.items {
            match item {
                Item::Decl(d) => d.span = SourceSpan::default(),
                Item::Fixture(_, s) => *s = SourceSpan::default(),
                Item::Assert(a) => a.span = SourceSpan::default(),
            }
        }
        sc
    }

    #[test]
    fn print_round_trips() {
        for src in [crate::harness::EX3_1, crate::harness::EX3_2] {
            let sc = parse_scenario("f", src).unwrap();
            let text = print(&sc);
            let again = parse_scenario("f", &text).unwrap();
            assert_eq!(without_spans(again), without_spans(sc));
            assert_eq!(print(&parse_scenario("f", &text).unwrap()), text);
        }
    }
}
