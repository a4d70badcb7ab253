use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, MultiPoly, TermOrder};
use super::LndError;
use crate::linalg::Q;

/// `lead -> replacement`; the lead monomial must exceed every monomial of the
/// replacement in the ring's term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lead: Monomial,
    pub replacement: MultiPoly,
}

/// Polynomial ring over named generators modulo a list of rewrite rules.
///
/// Normal forms are computed by exhaustive rewriting, which terminates because
/// every rule strictly decreases monomials in a well-order. Confluence is not
/// checked: with several rules that overlap, the result depends on rule order
/// unless the rules form a Groebner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    names: Vec<String>,
    rules: Vec<RewriteRule>,
    order: TermOrder,
}

impl QuotientRing {
    /// Free polynomial ring, no relations.
    pub fn polynomial_ring<S: AsRef<str>>(names: &[S], order: TermOrder) -> Result<Self, LndError> {
        Self::new(names, order, Vec::new())
    }

    pub fn new<S: AsRef<str>>(
        names: &[S],
        order: TermOrder,
        rules: Vec<RewriteRule>,
    ) -> Result<Self, LndError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let valid = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid || names[..i].contains(name) {
                return Err(LndError::BadGeneratorName(name.clone()));
            }
        }
        for rule in &rules {
            if rule.lead.nvars() != names.len() || rule.replacement.nvars() != names.len() {
                return Err(LndError::ArityMismatch {
                    expected: names.len(),
                    found: rule.lead.nvars(),
                });
            }
            if rule
                .replacement
                .terms()
                .any(|(m, _)| order.cmp(m, &rule.lead) != std::cmp::Ordering::Less)
            {
                return Err(LndError::RuleNotDecreasing);
            }
        }
        Ok(QuotientRing { names, rules, order })
    }

    /// Builds a ring from textual rules such as `("a1*b2", "a2*b1 + 1")`.
    pub fn with_text_rules<S: AsRef<str>>(
        names: &[S],
        order: TermOrder,
        rules: &[(&str, &str)],
    ) -> Result<Self, LndError> {
        let free = Self::polynomial_ring(names, order)?;
        let mut parsed = Vec::new();
        for (lead, replacement) in rules {
            let lead_poly = free.parse(lead)?;
            let lead_monomial = match lead_poly.terms().next() {
                Some((m, c)) if lead_poly.num_terms() == 1 && c.is_one() => m.clone(),
                _ => return Err(LndError::RuleLeadNotMonomial(lead.to_string())),
            };
            parsed.push(RewriteRule {
                lead: lead_monomial,
                replacement: free.parse(replacement)?,
            });
        }
        Self::new(names, order, parsed)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn gen(&self, name: &str) -> Result<MultiPoly, LndError> {
        let i = self
            .generator_index(name)
            .ok_or_else(|| LndError::UnknownGenerator(name.to_string()))?;
        Ok(MultiPoly::var(self.nvars(), i))
    }

    pub fn constant(&self, c: Q) -> MultiPoly {
        MultiPoly::constant(self.nvars(), c)
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.nvars())
    }

    pub fn one(&self) -> MultiPoly {
        MultiPoly::one(self.nvars())
    }

    pub fn check_arity(&self, f: &MultiPoly) -> Result<(), LndError> {
        if f.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(LndError::ArityMismatch {
                expected: self.nvars(),
                found: f.nvars(),
            })
        }
    }

    /// Exhaustive rewriting: the result contains no monomial divisible by any
    /// rule's lead monomial.
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        assert_eq!(f.nvars(), self.nvars(), "polynomial does not belong to this ring");
        if self.rules.is_empty() {
            return f.clone();
        }
        let mut cache = HashMap::new();
        let mut out = self.zero();
        for (m, c) in f.terms() {
            let reduced = self.reduce_monomial(m, &mut cache);
            out.add_scaled(&reduced, c);
        }
        out
    }

    fn reduce_monomial(&self, m: &Monomial, cache: &mut HashMap<Monomial, MultiPoly>) -> MultiPoly {
        if let Some(hit) = cache.get(m) {
            return hit.clone();
        }
        let reduced = match self.rules.iter().find(|r| r.lead.divides(m)) {
            None => MultiPoly::monomial(m.clone(), Q::one()),
            Some(rule) => {
                let cofactor = rule.lead.quotient_of(m);
                let mut acc = self.zero();
                for (rm, rc) in rule.replacement.terms() {
                    let sub = self.reduce_monomial(&rm.mul(&cofactor), cache);
                    acc.add_scaled(&sub, rc);
                }
                acc
            }
        };
        cache.insert(m.clone(), reduced.clone());
        reduced
    }

    pub fn is_normal(&self, f: &MultiPoly) -> bool {
        f.terms()
            .all(|(m, _)| !self.rules.iter().any(|r| r.lead.divides(m)))
    }

    /// Canonical text: terms from largest to smallest in the term order,
    /// `coef*gen^exp*...` joined by ` + ` / ` - `, unit coefficients and `^1`
    /// omitted, rationals as `p/q`.
    pub fn format(&self, f: &MultiPoly) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in f.sorted_terms(self.order).into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let abs = c.abs();
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                s.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{}*{}", format_rational(&abs), mono);
            }
        }
        s
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.names.iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }

    /// Parses `coef*gen^exp*...` terms joined by `+`/`-`. Whitespace is
    /// ignored, `^1` may be omitted, coefficients may be integers or `p/q`,
    /// and parenthesized subexpressions (optionally raised to a power) are
    /// accepted. The result is not reduced.
    pub fn parse(&self, text: &str) -> Result<MultiPoly, LndError> {
        let mut parser = Parser {
            ring: self,
            src: text,
            pos: 0,
        };
        let p = parser.sum()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

pub fn format_rational(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

struct Parser<'a> {
    ring: &'a QuotientRing,
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> LndError {
        LndError::Parse {
            input: self.src.to_string(),
            position: self.pos,
            message: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<MultiPoly, LndError> {
        let mut acc = self.ring.zero();
        let mut first = true;
        loop {
            let sign = if self.eat('-') {
                -Q::one()
            } else if self.eat('+') || first {
                Q::one()
            } else {
                break;
            };
            first = false;
            let t = self.product()?;
            acc.add_scaled(&t, &sign);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<MultiPoly, LndError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, LndError> {
        self.skip_ws();
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let value = if self.eat('/') {
                    self.skip_ws();
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    Q::new(num, den)
                } else {
                    Q::from_integer(num)
                };
                self.ring.constant(value)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                self.ring.gen(name).map_err(|_| LndError::Parse {
                    input: self.src.to_string(),
                    position: start,
                    message: format!("unknown generator '{name}'"),
                })?
            }
            _ => return Err(self.error("expected a number, generator or '('")),
        };
        if self.eat('^') {
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<BigInt, LndError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }
}
