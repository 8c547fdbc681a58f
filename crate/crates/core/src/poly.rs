//! Polynomials in one indeterminate `X` over the Laurent monomials of `k[S]`.
//!
//! A coefficient is a finite `Q`-linear combination of Laurent monomials
//! ([`LinComb`]). Division by a polynomial whose leading coefficient is a
//! single monomial stays inside these combinations, which is all that the
//! upper-to-zero membership test needs.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A Laurent polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LinComb(BTreeMap<Monomial, BigRational>);

impl LinComb {
    pub fn zero() -> Self {
        LinComb(BTreeMap::new())
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut out = LinComb::zero();
        out.add_term(c, m);
        out
    }

    pub fn monomial(m: Monomial) -> Self {
        LinComb::term(BigRational::one(), m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.0.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.0.keys()
    }

    /// The single term, if there is exactly one.
    pub fn as_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.0.len() == 1 {
            self.0.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, c: BigRational, m: Monomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        for (m, c) in &other.0 {
            out.add_term(c.clone(), m.clone());
        }
        out
    }

    pub fn neg(&self) -> LinComb {
        LinComb(self.0.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }

    pub fn mul(&self, other: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (a, c) in &self.0 {
            for (b, d) in &other.0 {
                out.add_term(c * d, a.mul(b));
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational, m: &Monomial) -> LinComb {
        let mut out = LinComb::zero();
        for (a, d) in &self.0 {
            out.add_term(c * d, a.mul(m));
        }
        out
    }
}

/// `Σ c_i X^i` with `c_i` a [`LinComb`]; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RingPoly {
    terms: BTreeMap<u32, LinComb>,
}

impl RingPoly {
    pub fn zero() -> Self {
        RingPoly::default()
    }

    pub fn constant(c: LinComb) -> Self {
        RingPoly::from_coeffs([(0, c)])
    }

    pub fn monomial(m: Monomial) -> Self {
        RingPoly::constant(LinComb::monomial(m))
    }

    /// `m·X^k`.
    pub fn term(m: Monomial, k: u32) -> Self {
        RingPoly::from_coeffs([(k, LinComb::monomial(m))])
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, LinComb)>>(coeffs: I) -> Self {
        let mut out = RingPoly::zero();
        for (k, c) in coeffs {
            out.add_coeff(k, &c);
        }
        out
    }

    fn add_coeff(&mut self, k: u32, c: &LinComb) {
        let sum = self.terms.get(&k).map_or_else(|| c.clone(), |old| old.add(c));
        if sum.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest stored power; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, k: u32) -> LinComb {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &LinComb)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Every monomial appearing in any coefficient.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.values().flat_map(|c| c.monomials())
    }

    pub fn add(&self, other: &RingPoly) -> RingPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_coeff(*k, c);
        }
        out
    }

    pub fn neg(&self) -> RingPoly {
        RingPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    pub fn sub(&self, other: &RingPoly) -> RingPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingPoly) -> RingPoly {
        let mut out = RingPoly::zero();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                out.add_coeff(i + j, &a.mul(b));
            }
        }
        out
    }

    /// Multiplies every coefficient by the monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> RingPoly {
        let one = BigRational::one();
        RingPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.scale(&one, m))).collect() }
    }

    /// Exact division by `f`, whose leading coefficient must be a single
    /// term (a unit among Laurent polynomials). Returns `(q, r)` with
    /// `self = q·f + r` and `deg r < deg f`.
    pub fn div_rem(&self, f: &RingPoly) -> Result<(RingPoly, RingPoly)> {
        let d = f.degree().ok_or_else(|| Error::Input("division by the zero polynomial".into()))?;
        let lead = f.coeff(d);
        let (lm, lc) = lead
            .as_term()
            .ok_or_else(|| Error::Unsupported(format!("leading coefficient of `{f}` is not a monomial")))?;
        let (inv_m, inv_c) = (lm.inv(), lc.recip());
        let mut q = RingPoly::zero();
        let mut r = self.clone();
        while let Some(k) = r.degree().filter(|k| *k >= d) {
            let c = r.coeff(k).scale(&inv_c, &inv_m);
            let step = RingPoly::from_coeffs([(k - d, c)]);
            r = r.sub(&step.mul(f));
            q = q.add(&step);
        }
        Ok((q, r))
    }

    /// Parses a polynomial written with `*`, `^`, `+`, `-` and rational
    /// constants; `x` names the polynomial indeterminate.
    pub fn parse(text: &str, x: &str) -> Result<RingPoly> {
        let mut out = RingPoly::zero();
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Input("empty polynomial".into()));
        }
        // Split before every sign that does not follow `^`.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut prev = None;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                terms.push((ch == '-', String::new()));
            } else {
                if terms.is_empty() {
                    terms.push((false, String::new()));
                }
                terms.last_mut().expect("nonempty").1.push(ch);
            }
            prev = Some(ch);
        }
        for (neg, term) in terms {
            let (c, m, k) = parse_term(&term, x)?;
            let c = if neg { -c } else { c };
            out.add_coeff(k, &LinComb::term(c, m));
        }
        Ok(out)
    }
}

fn parse_term(term: &str, x: &str) -> Result<(BigRational, Monomial, u32)> {
    if term.is_empty() {
        return Err(Error::Input("empty term".into()));
    }
    let mut coeff = BigRational::one();
    let mut mono = Monomial::one();
    let mut power: u32 = 0;
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Input(format!("empty factor in `{term}`")));
        }
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            let c: BigRational = factor
                .parse()
                .map_err(|_| Error::Input(format!("bad constant `{factor}`")))?;
            coeff *= c;
            continue;
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b, e.parse::<i64>().map_err(|_| Error::Input(format!("bad exponent in `{factor}`")))?),
            None => (factor, 1),
        };
        if base == x {
            if exp < 0 {
                return Err(Error::Input(format!("negative power of {x}")));
            }
            power += exp as u32;
        } else {
            mono = mono.mul(&factor.parse::<Monomial>()?);
        }
    }
    Ok((coeff, mono, power))
}

impl fmt::Display for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, "X")
    }
}

impl RingPoly {
    /// Canonical text, naming the indeterminate `x`.
    pub fn display_with(&self, x: &str) -> String {
        struct D<'a>(&'a RingPoly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write_with(f, self.1)
            }
        }
        D(self, x).to_string()
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, x: &str) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            for (m, r) in c.terms() {
                let neg = r.is_negative();
                match (first, neg) {
                    (true, true) => f.write_str("-")?,
                    (false, true) => f.write_str(" - ")?,
                    (false, false) => f.write_str(" + ")?,
                    (true, false) => {}
                }
                first = false;
                let a = r.abs();
                let mut parts: Vec<String> = Vec::new();
                if !a.is_one() {
                    parts.push(a.to_string());
                }
                if !m.is_one() {
                    parts.push(m.to_string());
                }
                match k {
                    0 => {}
                    1 => parts.push(x.to_string()),
                    _ => parts.push(format!("{x}^{k}")),
                }
                if parts.is_empty() {
                    parts.push("1".into());
                }
                f.write_str(&parts.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RingPoly {
        RingPoly::parse(s, "X").unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("y + z*X").to_string(), "y + z*X");
        assert_eq!(p("y^2*X^3").to_string(), "y^2*X^3");
        assert_eq!(p("-3/2*y*t[1] + X").to_string(), "-3/2*y*t[1] + X");
        assert_eq!(p("y^-1*X - y^-1*X"), RingPoly::zero());
        assert!(RingPoly::parse("y +", "X").is_err());
        assert!(RingPoly::parse("X^-1", "X").is_err());
    }

    #[test]
    fn division_is_exact_on_products() {
        let f = p("y + z*X");
        let h = p("t[1] + 2*y*X^2");
        let (q, r) = f.mul(&h).div_rem(&f).unwrap();
        assert_eq!(q, h);
        assert!(r.is_zero());
        let (_, r) = p("y").div_rem(&f).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn leading_coefficient_must_be_a_term() {
        assert!(p("X").div_rem(&p("y*X + z*X")).is_err());
    }
}
