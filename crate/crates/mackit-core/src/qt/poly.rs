use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer-coefficient polynomial in the two parameters q and t.
///
/// Terms are keyed by `(deg_q, deg_t)`; the map never stores zero
/// coefficients, so structural equality is mathematical equality. Iteration
/// order of the underlying `BTreeMap` is the canonical term order
/// (lexicographic on `(deg_q, deg_t)`), which `Display` and the JSON
/// emitters rely on.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QtPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QtPoly::from_int(1)
    }

    pub fn q() -> Self {
        QtPoly::monomial(1, 0, BigInt::one())
    }

    pub fn t() -> Self {
        QtPoly::monomial(0, 1, BigInt::one())
    }

    pub fn from_int(n: i64) -> Self {
        QtPoly::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        QtPoly::monomial(0, 0, n)
    }

    pub fn monomial(deg_q: u32, deg_t: u32, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((deg_q, deg_t), coeff);
        }
        QtPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&(0, 0)))
    }

    /// Single stored term (not necessarily constant).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, deg_q: u32, deg_t: u32) -> BigInt {
        self.terms
            .get(&(deg_q, deg_t))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0, 0)
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Coefficient of the lexicographically greatest term, zero for the zero
    /// polynomial. This is the sign reference for canonical forms.
    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    fn insert_add(terms: &mut BTreeMap<(u32, u32), BigInt>, key: (u32, u32), val: BigInt) {
        if val.is_zero() {
            return;
        }
        match terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(val);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += val;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &QtPoly) -> QtPoly {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            Self::insert_add(&mut terms, *k, v.clone());
        }
        QtPoly { terms }
    }

    pub fn sub(&self, other: &QtPoly) -> QtPoly {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            Self::insert_add(&mut terms, *k, -v.clone());
        }
        QtPoly { terms }
    }

    pub fn neg(&self) -> QtPoly {
        QtPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &QtPoly) -> QtPoly {
        if self.is_zero() || other.is_zero() {
            return QtPoly::zero();
        }
        let mut terms = BTreeMap::new();
        for ((aq, at), ac) in &self.terms {
            for ((bq, bt), bc) in &other.terms {
                Self::insert_add(&mut terms, (aq + bq, at + bt), ac * bc);
            }
        }
        QtPoly { terms }
    }

    pub fn mul_bigint(&self, c: &BigInt) -> QtPoly {
        if c.is_zero() {
            return QtPoly::zero();
        }
        QtPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, deg_q: u32, deg_t: u32) -> QtPoly {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + deg_q, b + deg_t), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> QtPoly {
        let mut acc = QtPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// gcd of all integer coefficients, nonnegative; zero for the zero poly.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Smallest q- and t-degrees appearing in any term: the monomial part of
    /// the content.
    pub fn min_degrees(&self) -> (u32, u32) {
        let mut mq = u32::MAX;
        let mut mt = u32::MAX;
        for (dq, dt) in self.terms.keys() {
            mq = mq.min(*dq);
            mt = mt.min(*dt);
        }
        if self.is_zero() {
            (0, 0)
        } else {
            (mq, mt)
        }
    }

    pub fn eval_i64(&self, q: i64, t: i64) -> BigInt {
        let qb = BigInt::from(q);
        let tb = BigInt::from(t);
        let mut acc = BigInt::zero();
        for ((dq, dt), c) in &self.terms {
            acc += c * qb.pow(*dq) * tb.pow(*dt);
        }
        acc
    }

    /// Exact quotient `self / divisor`, or an error when the division leaves
    /// a remainder or the divisor is zero.
    pub fn exact_div(&self, divisor: &QtPoly) -> Result<QtPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QtPoly::zero());
        }
        if divisor.is_one() {
            return Ok(self.clone());
        }
        if divisor.is_monomial() {
            let ((dq, dt), c) = divisor.terms.iter().next().unwrap();
            let mut terms = BTreeMap::new();
            for ((aq, at), ac) in &self.terms {
                if aq < dq || at < dt {
                    return Err(Error::NotDivisible(format!("{} / {}", self, divisor)));
                }
                let (quo, rem) = ac.div_rem(c);
                if !rem.is_zero() {
                    return Err(Error::NotDivisible(format!("{} / {}", self, divisor)));
                }
                terms.insert((aq - dq, at - dt), quo);
            }
            return Ok(QtPoly { terms });
        }
        let a = dense::to_qpoly(self);
        let b = dense::to_qpoly(divisor);
        dense::exact_div(&a, &b)
            .map(|q| dense::from_qpoly(&q))
            .ok_or_else(|| Error::NotDivisible(format!("{} / {}", self, divisor)))
    }

    /// gcd over the integers-in-two-variables ring, integer content
    /// included. Result has a positive leading coefficient; gcd(0,0) = 0.
    pub fn gcd(&self, other: &QtPoly) -> QtPoly {
        fn positive(p: QtPoly) -> QtPoly {
            if p.leading_coeff().is_negative() {
                p.neg()
            } else {
                p
            }
        }
        if self.is_zero() {
            return positive(other.clone());
        }
        if other.is_zero() {
            return positive(self.clone());
        }
        if self == other {
            return positive(self.clone());
        }

        // Monomial gcd never needs a remainder sequence.
        let mono = |m: &QtPoly, p: &QtPoly| -> QtPoly {
            let c = m.content().gcd(&p.content());
            let (mq, mt) = m.min_degrees();
            let (pq, pt) = p.min_degrees();
            QtPoly::monomial(mq.min(pq), mt.min(pt), c)
        };
        if self.is_monomial() {
            return mono(self, other);
        }
        if other.is_monomial() {
            return mono(other, self);
        }

        // Trial division: in cancellation chains the smaller operand very
        // often divides the larger one outright.
        let (small, large) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        if large.exact_div(small).is_ok() {
            return positive(small.clone());
        }

        // Subresultant-style primitive remainder sequence, main variable
        // chosen as the one of lower degree to keep coefficients small.
        let transpose = self.deg_q().max(other.deg_q()) > self.deg_t().max(other.deg_t());
        let (a, b) = if transpose {
            (self.transpose(), other.transpose())
        } else {
            (self.clone(), other.clone())
        };
        let g = dense::gcd(&dense::to_qpoly(&a), &dense::to_qpoly(&b));
        let g = dense::from_qpoly(&g);
        positive(if transpose { g.transpose() } else { g })
    }

    /// Least common multiple, positive leading coefficient.
    pub fn lcm(&self, other: &QtPoly) -> QtPoly {
        if self.is_zero() || other.is_zero() {
            return QtPoly::zero();
        }
        let g = self.gcd(other);
        let q = self.exact_div(&g).expect("gcd divides its arguments");
        let p = q.mul(other);
        if p.leading_coeff().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    fn transpose(&self) -> QtPoly {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((b, a), v.clone()))
                .collect(),
        }
    }
}

/// Dense recursive view used by gcd and exact division: a polynomial in the
/// main variable whose coefficients are dense integer polynomials in the
/// other variable.
mod dense {
    use super::*;

    /// Dense univariate integer polynomial; empty means zero, the last entry
    /// is never zero.
    pub type TPoly = Vec<BigInt>;
    /// Dense polynomial in the main variable with `TPoly` coefficients.
    pub type QPoly = Vec<TPoly>;

    fn t_trim(mut p: TPoly) -> TPoly {
        while p.last().map(|c| c.is_zero()).unwrap_or(false) {
            p.pop();
        }
        p
    }

    fn t_is_zero(p: &TPoly) -> bool {
        p.is_empty()
    }

    fn t_add(a: &TPoly, b: &TPoly) -> TPoly {
        let mut r = vec![BigInt::zero(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            r[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            r[i] += c;
        }
        t_trim(r)
    }

    fn t_sub(a: &TPoly, b: &TPoly) -> TPoly {
        let mut r = vec![BigInt::zero(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            r[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            r[i] -= c;
        }
        t_trim(r)
    }

    fn t_mul(a: &TPoly, b: &TPoly) -> TPoly {
        if t_is_zero(a) || t_is_zero(b) {
            return Vec::new();
        }
        let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[i + j] += x * y;
            }
        }
        t_trim(r)
    }

    fn t_neg(a: &TPoly) -> TPoly {
        a.iter().map(|c| -c.clone()).collect()
    }

    fn t_content(a: &TPoly) -> BigInt {
        let mut g = BigInt::zero();
        for c in a {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn t_div_bigint(a: &TPoly, d: &BigInt) -> Option<TPoly> {
        let mut r = Vec::with_capacity(a.len());
        for c in a {
            let (q, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return None;
            }
            r.push(q);
        }
        Some(r)
    }

    /// Exact division in the integer univariate ring, None on remainder.
    fn t_exact_div(a: &TPoly, b: &TPoly) -> Option<TPoly> {
        if t_is_zero(b) {
            return None;
        }
        if t_is_zero(a) {
            return Some(Vec::new());
        }
        if a.len() < b.len() {
            return None;
        }
        let mut rem = a.clone();
        let mut quo = vec![BigInt::zero(); a.len() - b.len() + 1];
        let lead = b.last().unwrap();
        while !t_is_zero(&rem) && rem.len() >= b.len() {
            let shift = rem.len() - b.len();
            let (c, r) = rem.last().unwrap().div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            quo[shift] = c.clone();
            for (i, bc) in b.iter().enumerate() {
                rem[shift + i] -= &c * bc;
            }
            rem = t_trim(rem);
        }
        if t_is_zero(&rem) {
            Some(t_trim(quo))
        } else {
            None
        }
    }

    /// Primitive-PRS gcd over the integers, nonnegative content convention.
    fn t_gcd(a: &TPoly, b: &TPoly) -> TPoly {
        if t_is_zero(a) {
            return b.clone();
        }
        if t_is_zero(b) {
            return a.clone();
        }
        let ca = t_content(a);
        let cb = t_content(b);
        let cg = ca.gcd(&cb);
        let mut f = t_div_bigint(a, &ca).unwrap();
        let mut g = t_div_bigint(b, &cb).unwrap();
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        loop {
            if t_is_zero(&g) {
                break;
            }
            // pseudo-remainder of f by g
            let d = f.len() as i64 - g.len() as i64;
            if d < 0 {
                std::mem::swap(&mut f, &mut g);
                continue;
            }
            let lead = g.last().unwrap().clone();
            let mut r = f.clone();
            for _ in 0..=d {
                if t_is_zero(&r) || r.len() < g.len() {
                    break;
                }
                let shift = r.len() - g.len();
                let c = r.last().unwrap().clone();
                // r = lead*r - c*x^shift*g
                for coef in r.iter_mut() {
                    *coef *= &lead;
                }
                for (i, gc) in g.iter().enumerate() {
                    r[shift + i] -= &c * gc;
                }
                r = t_trim(r);
            }
            let rc = t_content(&r);
            let r = if rc.is_zero() {
                Vec::new()
            } else {
                t_div_bigint(&r, &rc).unwrap()
            };
            f = g;
            g = r;
        }
        let mut out: TPoly = f.iter().map(|c| c * &cg).collect();
        if out.last().map(|c| c.is_negative()).unwrap_or(false) {
            out = t_neg(&out);
        }
        out
    }

    fn q_trim(mut p: QPoly) -> QPoly {
        while p.last().map(t_is_zero).unwrap_or(false) {
            p.pop();
        }
        p
    }

    pub fn to_qpoly(p: &QtPoly) -> QPoly {
        let mut out: QPoly = vec![Vec::new(); p.deg_q() as usize + 1];
        for (&(dq, dt), c) in &p.terms {
            let t = &mut out[dq as usize];
            if t.len() <= dt as usize {
                t.resize(dt as usize + 1, BigInt::zero());
            }
            t[dt as usize] = c.clone();
        }
        q_trim(out.into_iter().map(t_trim).collect())
    }

    pub fn from_qpoly(p: &QPoly) -> QtPoly {
        let mut terms = BTreeMap::new();
        for (dq, tp) in p.iter().enumerate() {
            for (dt, c) in tp.iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((dq as u32, dt as u32), c.clone());
                }
            }
        }
        QtPoly { terms }
    }

    fn q_is_zero(p: &QPoly) -> bool {
        p.is_empty()
    }

    /// gcd of all main-variable coefficients, as a polynomial in the other
    /// variable.
    fn q_content(p: &QPoly) -> TPoly {
        let mut g: TPoly = Vec::new();
        for c in p {
            g = t_gcd(&g, c);
            if g.len() == 1 && g[0].is_one() {
                break;
            }
        }
        g
    }

    fn q_primitive(p: &QPoly, cont: &TPoly) -> QPoly {
        p.iter()
            .map(|c| t_exact_div(c, cont).expect("content divides"))
            .collect()
    }

    fn q_mul_t(p: &QPoly, s: &TPoly) -> QPoly {
        p.iter().map(|c| t_mul(c, s)).collect()
    }

    /// Pseudo-remainder: lead(g)^(deg f - deg g + 1) * f mod g.
    fn q_prem(f: &QPoly, g: &QPoly) -> QPoly {
        let mut r = f.clone();
        let lead = g.last().unwrap().clone();
        let steps = f.len() as i64 - g.len() as i64 + 1;
        for _ in 0..steps {
            if q_is_zero(&r) || r.len() < g.len() {
                break;
            }
            let shift = r.len() - g.len();
            let c = r.last().unwrap().clone();
            let mut nr: QPoly = r.iter().map(|tc| t_mul(tc, &lead)).collect();
            for (i, gc) in g.iter().enumerate() {
                nr[shift + i] = t_sub(&nr[shift + i], &t_mul(&c, gc));
            }
            r = q_trim(nr);
        }
        r
    }

    /// Primitive PRS gcd in (other-variable coefficients)[main variable],
    /// integer content folded in.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        if q_is_zero(a) {
            return b.clone();
        }
        if q_is_zero(b) {
            return a.clone();
        }
        let ca = q_content(a);
        let cb = q_content(b);
        let cg = t_gcd(&ca, &cb);
        let mut f = q_primitive(a, &ca);
        let mut g = q_primitive(b, &cb);
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        while !q_is_zero(&g) {
            let r = q_prem(&f, &g);
            let r = if q_is_zero(&r) {
                r
            } else {
                let rc = q_content(&r);
                q_primitive(&r, &rc)
            };
            f = g;
            g = r;
        }
        q_mul_t(&f, &cg)
    }

    /// Exact division, None when the quotient does not exist in the ring.
    pub fn exact_div(a: &QPoly, b: &QPoly) -> Option<QPoly> {
        if q_is_zero(b) {
            return None;
        }
        if q_is_zero(a) {
            return Some(Vec::new());
        }
        if a.len() < b.len() {
            return None;
        }
        let mut rem = a.clone();
        let mut quo: QPoly = vec![Vec::new(); a.len() - b.len() + 1];
        let lead = b.last().unwrap();
        while !q_is_zero(&rem) && rem.len() >= b.len() {
            let shift = rem.len() - b.len();
            let c = t_exact_div(rem.last().unwrap(), lead)?;
            for (i, bc) in b.iter().enumerate() {
                rem[shift + i] = t_sub(&rem[shift + i], &t_mul(&c, bc));
            }
            quo[shift] = c;
            rem = q_trim(rem);
        }
        if q_is_zero(&rem) {
            Some(q_trim(quo))
        } else {
            None
        }
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(dq, dt), c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
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
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (dq == 0 && dt == 0) {
                parts.push(mag.to_string());
            }
            match dq {
                0 => {}
                1 => parts.push("q".into()),
                _ => parts.push(format!("q^{}", dq)),
            }
            match dt {
                0 => {}
                1 => parts.push("t".into()),
                _ => parts.push(format!("t^{}", dt)),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for QtPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

fn parse_poly(s: &str) -> Result<QtPoly> {
    #[derive(Debug, PartialEq)]
    enum Tok {
        Plus,
        Minus,
        Star,
        Caret,
        Int(BigInt),
        Q,
        T,
    }
    let mut toks = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            'q' => {
                chars.next();
                toks.push(Tok::Q);
            }
            't' => {
                chars.next();
                toks.push(Tok::T);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(digits.parse().expect("digits")));
            }
            _ => return Err(Error::Parse(format!("unexpected character '{c}' in '{s}'"))),
        }
    }
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial string".into()));
    }

    let mut result = QtPoly::zero();
    let mut i = 0;
    let mut sign = BigInt::one();
    // optional leading sign
    while let Some(Tok::Plus | Tok::Minus) = toks.get(i) {
        if matches!(toks[i], Tok::Minus) {
            sign = -sign;
        }
        i += 1;
    }
    loop {
        // one term: factors separated by '*'
        let mut coeff = sign.clone();
        let mut dq = 0u32;
        let mut dt = 0u32;
        loop {
            match toks.get(i) {
                Some(Tok::Int(n)) => {
                    coeff *= n;
                    i += 1;
                }
                Some(Tok::Q) | Some(Tok::T) => {
                    let is_q = matches!(toks[i], Tok::Q);
                    i += 1;
                    let mut e = 1u32;
                    if let Some(Tok::Caret) = toks.get(i) {
                        i += 1;
                        match toks.get(i) {
                            Some(Tok::Int(n)) => {
                                e = u32::try_from(n.clone())
                                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                                i += 1;
                            }
                            _ => return Err(Error::Parse("expected exponent after '^'".into())),
                        }
                    }
                    if is_q {
                        dq += e;
                    } else {
                        dt += e;
                    }
                }
                other => {
                    return Err(Error::Parse(format!(
                        "expected a factor, found {other:?} in '{s}'"
                    )))
                }
            }
            if let Some(Tok::Star) = toks.get(i) {
                i += 1;
            } else {
                break;
            }
        }
        result = result.add(&QtPoly::monomial(dq, dt, coeff));
        // next term separator
        match toks.get(i) {
            None => break,
            Some(Tok::Plus) => {
                sign = BigInt::one();
                i += 1;
            }
            Some(Tok::Minus) => {
                sign = -BigInt::one();
                i += 1;
            }
            Some(tok) => return Err(Error::Parse(format!("unexpected token {tok:?} in '{s}'"))),
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QtPoly {
        s.parse().unwrap()
    }

    #[test]
    fn display_canonical_order() {
        let f = QtPoly::one()
            .sub(&QtPoly::q().mul(&QtPoly::t()))
            .add(&QtPoly::monomial(2, 3, BigInt::one()));
        assert_eq!(f.to_string(), "1 - q*t + q^2*t^3");
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "0",
            "1",
            "-1",
            "q",
            "1 - q*t + q^2*t^3",
            "-2*q + 3*t^2",
            "q^4 - 2*q^2*t^2 + t^4",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
        // non-canonical spellings normalize
        assert_eq!(p("q*q + t*q").to_string(), "q*t + q^2");
        assert_eq!(p(" 1+q ").to_string(), "1 + q");
        assert!("1 +".parse::<QtPoly>().is_err());
        assert!("x".parse::<QtPoly>().is_err());
    }

    #[test]
    fn gcd_cancels_factor() {
        // (1-q^2) and (1-q) share (1-q)
        let a = p("1 - q^2");
        let b = p("1 - q");
        let g = a.gcd(&b);
        // sign normalized to positive leading coefficient: q - 1
        assert_eq!(g, p("-1 + q"));
        assert_eq!(a.exact_div(&g).unwrap(), p("-1 - q"));
    }

    #[test]
    fn gcd_bivariate() {
        let common = p("1 - q*t");
        let a = common.mul(&p("1 + q + t"));
        let b = common.mul(&p("2 - t^2"));
        let g = a.gcd(&b);
        // sign-normalized: leading (lex-max) coefficient positive
        assert_eq!(g, p("-1 + q*t"));
        assert!(a.exact_div(&g).is_ok());
        assert!(b.exact_div(&g).is_ok());
    }

    #[test]
    fn gcd_coprime() {
        let a = p("1 + q");
        let b = p("1 + t");
        assert_eq!(a.gcd(&b), QtPoly::one());
    }

    #[test]
    fn exact_div_detects_remainder() {
        let a = p("1 + q");
        let b = p("1 - q");
        assert!(a.exact_div(&b).is_err());
    }

    #[test]
    fn content_and_monomial_gcd() {
        let a = p("2*q^2*t - 4*q*t^2");
        let b = p("6*q*t");
        let g = a.gcd(&b);
        assert_eq!(g, p("2*q*t"));
    }
}
