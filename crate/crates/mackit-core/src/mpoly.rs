//! Sparse multivariate polynomials in x_1..x_N over the q,t coefficient
//! field, together with the primitive motions every operator in this crate
//! is assembled from: adjacent-variable swaps, q-shifts of a single
//! variable, and exact division by binomials x_a - c*x_b.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qt::{QtPoly, QtRat};

/// Exponent vector of a single monomial; always exactly `nvars` entries.
/// The derived `Ord` is lexicographic, which is the crate-wide canonical
/// monomial order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn zeros(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Entries sorted weakly decreasing, i.e. the dominant representative of
    /// the orbit of this exponent vector.
    pub fn sorted_desc(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition(v)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

/// Sparse polynomial in a fixed number of variables. No zero coefficients
/// are stored; two polynomials are equal iff their term maps are equal.
/// Mixing variable counts in arithmetic is a bug and panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Composition, QtRat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, QtRat::one())
    }

    pub fn constant(nvars: usize, c: QtRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Composition::zeros(nvars), c);
        }
        MPoly { nvars, terms }
    }

    /// The variable x_i, 1-based like all operator indices in this crate.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "variable index {i} out of range 1..={nvars}");
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        MPoly::monomial(Composition(exps), QtRat::one())
    }

    pub fn monomial(exps: Composition, coeff: QtRat) -> Self {
        let nvars = exps.0.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        MPoly { nvars, terms }
    }

    /// Build from an arbitrary term stream, summing duplicate exponents.
    pub fn from_terms<I>(nvars: usize, iter: I) -> Self
    where
        I: IntoIterator<Item = (Composition, QtRat)>,
    {
        let mut out = MPoly::zero(nvars);
        for (e, c) in iter {
            assert_eq!(e.0.len(), nvars, "exponent arity mismatch");
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exps: Composition, coeff: QtRat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &QtRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Composition) -> QtRat {
        self.terms.get(exps).cloned().unwrap_or_else(QtRat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars, "variable-count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars, "variable-count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars, "variable-count mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps =
                    Composition(ea.0.iter().zip(&eb.0).map(|(a, b)| a + b).collect());
                out.add_term(exps, ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &QtRat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// Multiply by the monomial with the given exponents (coefficient 1).
    pub fn mul_monomial(&self, delta: &Composition) -> MPoly {
        assert_eq!(delta.0.len(), self.nvars, "exponent arity mismatch");
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    (
                        Composition(e.0.iter().zip(&delta.0).map(|(a, b)| a + b).collect()),
                        v.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Swap the exponents of x_i and x_{i+1} in every term (the adjacent
    /// transposition s_i). `i` is 1-based, valid range 1..=N-1.
    pub fn apply_transposition(&self, i: usize) -> MPoly {
        assert!(
            (1..self.nvars).contains(&i),
            "transposition index {i} out of range 1..={}",
            self.nvars.saturating_sub(1)
        );
        self.apply_swap(i, i + 1)
    }

    /// Swap the exponents of an arbitrary variable pair.
    pub fn apply_swap(&self, a: usize, b: usize) -> MPoly {
        assert!((1..=self.nvars).contains(&a) && (1..=self.nvars).contains(&b));
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut exps = e.0.clone();
                    exps.swap(a - 1, b - 1);
                    (Composition(exps), c.clone())
                })
                .collect(),
        }
    }

    /// The q-shift of x_i: each term with exponent e_i in x_i picks up the
    /// factor q^(power * e_i). Negative powers land in denominators.
    pub fn apply_shift(&self, i: usize, power: i64) -> MPoly {
        assert!((1..=self.nvars).contains(&i), "shift index {i} out of range");
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let k = power * i64::from(e.0[i - 1]);
                    (e.clone(), c.mul(&QtRat::q_pow(k)))
                })
                .collect(),
        }
    }

    /// Exact quotient by (x_i - x_{i+1}). The dividend must vanish under
    /// x_i = x_{i+1}; in practice it is (s_i - 1)g for some g.
    pub fn exact_divide(&self, i: usize) -> Result<MPoly> {
        assert!(
            (1..self.nvars).contains(&i),
            "division index {i} out of range 1..={}",
            self.nvars.saturating_sub(1)
        );
        self.exact_div_pair(i, i + 1, &QtRat::one())
    }

    /// Exact quotient by (x_a - c*x_b) for distinct variables a, b and a
    /// nonzero coefficient c. Works group by group: terms sharing the same
    /// exponents on all other variables form a two-variable polynomial which
    /// is divided synthetically; any nonzero remainder is an error.
    pub fn exact_div_pair(&self, a: usize, b: usize, c: &QtRat) -> Result<MPoly> {
        assert!(a != b, "divisor variables must be distinct");
        assert!((1..=self.nvars).contains(&a) && (1..=self.nvars).contains(&b));
        assert!(!c.is_zero(), "divisor coefficient must be nonzero");
        if self.is_zero() {
            return Ok(MPoly::zero(self.nvars));
        }
        let (a, b) = (a - 1, b - 1);

        // group key: exponents with positions a and b zeroed
        let mut groups: BTreeMap<Vec<u32>, BTreeMap<(u32, u32), QtRat>> = BTreeMap::new();
        for (e, coeff) in &self.terms {
            let mut key = e.0.clone();
            let ea = std::mem::replace(&mut key[a], 0);
            let eb = std::mem::replace(&mut key[b], 0);
            groups
                .entry(key)
                .or_default()
                .insert((ea, eb), coeff.clone());
        }

        let mut out = MPoly::zero(self.nvars);
        for (key, group) in groups {
            let deg_a = group.keys().map(|k| k.0).max().unwrap_or(0);
            if deg_a == 0 {
                return Err(Error::NotDivisible(
                    "dividend has a group without the leading divisor variable".into(),
                ));
            }
            // f = sum_j F_j(x_b) x_a^j; quotient H_{j-1} = F_j + c x_b H_j
            // downward from j = deg_a, remainder F_0 + c x_b H_0 must vanish.
            let mut h_cur: BTreeMap<u32, QtRat> = BTreeMap::new();
            for j in (0..=deg_a).rev() {
                let mut next: BTreeMap<u32, QtRat> = BTreeMap::new();
                for ((_, eb), coeff) in group.iter().filter(|((ea, _), _)| *ea == j) {
                    insert_add(&mut next, *eb, coeff.clone());
                }
                for (eb, coeff) in &h_cur {
                    insert_add(&mut next, eb + 1, coeff.mul(c));
                }
                if j == 0 {
                    if !next.is_empty() {
                        return Err(Error::NotDivisible(
                            "nonzero remainder in pairwise division".into(),
                        ));
                    }
                } else {
                    h_cur = next;
                    for (eb, coeff) in &h_cur {
                        let mut exps = key.clone();
                        exps[a] = j - 1;
                        exps[b] = *eb;
                        out.add_term(Composition(exps), coeff.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// True iff the polynomial is invariant under every adjacent-variable
    /// swap, i.e. fully symmetric.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.apply_transposition(i) == *self)
    }

    /// True iff the polynomial is invariant under all permutations of the
    /// given (1-based) variable subset.
    pub fn is_symmetric_in(&self, vars: &[usize]) -> bool {
        vars.windows(2).all(|w| self.apply_swap(w[0], w[1]) == *self)
    }

    /// Split into homogeneous components keyed by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(e.degree())
                .or_insert_with(|| MPoly::zero(self.nvars))
                .add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MPolyJson::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MPoly> {
        let dto: MPolyJson = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("bad polynomial JSON: {e}")))?;
        dto.try_into()
    }
}

fn insert_add(map: &mut BTreeMap<u32, QtRat>, key: u32, val: QtRat) {
    if val.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(val);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().add(&val);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct MPolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl From<&MPoly> for MPolyJson {
    fn from(p: &MPoly) -> Self {
        MPolyJson {
            nvars: p.nvars,
            terms: p
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.0.clone(),
                    num: c.num().to_string(),
                    den: c.den().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<MPolyJson> for MPoly {
    type Error = Error;

    fn try_from(dto: MPolyJson) -> Result<MPoly> {
        let mut out = MPoly::zero(dto.nvars);
        for term in dto.terms {
            if term.exp.len() != dto.nvars {
                return Err(Error::Parse("exponent arity mismatch in JSON".into()));
            }
            let num: QtPoly = term.num.parse()?;
            let den: QtPoly = term.den.parse()?;
            out.add_term(Composition(term.exp), QtRat::new(num, den)?);
        }
        Ok(out)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Polynomial coefficients of a formal parameter (the X of a generating
/// function or the u labelling an operator family): entry m is the
/// coefficient of the m-th power. Trailing zero entries are trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSeries {
    nvars: usize,
    coeffs: Vec<MPoly>,
}

impl ParamSeries {
    pub fn new(nvars: usize, mut coeffs: Vec<MPoly>) -> Self {
        for c in &coeffs {
            assert_eq!(c.nvars(), nvars, "variable-count mismatch in series");
        }
        while coeffs.last().map(MPoly::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        ParamSeries { nvars, coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    /// Coefficient of the m-th power, zero beyond the stored length.
    pub fn coeff(&self, m: usize) -> MPoly {
        self.coeffs
            .get(m)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(self.nvars))
    }

    /// Collapse the series at a concrete parameter value.
    pub fn evaluate(&self, u: &QtRat) -> MPoly {
        let mut acc = MPoly::zero(self.nvars);
        let mut upow = QtRat::one();
        for c in &self.coeffs {
            acc = acc.add(&c.mul_scalar(&upow));
            upow = upow.mul(u);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }

    #[test]
    fn transposition_swaps_exponents() {
        // s_1 on x1^2 x2 -> x1 x2^2
        let f = x(2, 1).pow(2).mul(&x(2, 2));
        let g = x(2, 1).mul(&x(2, 2).pow(2));
        assert_eq!(f.apply_transposition(1), g);
        // involution
        assert_eq!(f.apply_transposition(1).apply_transposition(1), f);
        // untouched variable
        let h = x(3, 3);
        assert_eq!(h.apply_transposition(1), h);
    }

    #[test]
    fn transposition_fixes_symmetric() {
        let m1 = x(3, 1).add(&x(3, 2)).add(&x(3, 3));
        for i in 1..3 {
            assert_eq!(m1.apply_transposition(i), m1);
        }
        assert!(m1.is_symmetric());
        assert!(!x(2, 1).is_symmetric());
    }

    #[test]
    fn shift_multiplies_by_q_powers() {
        // tau_1 on x1 x2 -> q x1 x2
        let f = x(2, 1).mul(&x(2, 2));
        assert_eq!(f.apply_shift(1, 1), f.mul_scalar(&QtRat::q()));
        // tau_2 on x2^3 -> q^3 x2^3
        let g = x(2, 2).pow(3);
        assert_eq!(g.apply_shift(2, 1), g.mul_scalar(&QtRat::q_pow(3)));
        // inverse shift fixes constants
        assert_eq!(MPoly::one(2).apply_shift(2, -1), MPoly::one(2));
        // shifts compose additively
        let h = x(2, 1).pow(2).add(&x(2, 2));
        assert_eq!(h.apply_shift(1, 2).apply_shift(1, 3), h.apply_shift(1, 5));
    }

    #[test]
    fn exact_divide_difference_of_squares() {
        let n = 2;
        let f = x(n, 1).pow(2).sub(&x(n, 2).pow(2));
        assert_eq!(f.exact_divide(1).unwrap(), x(n, 1).add(&x(n, 2)));
        assert!(MPoly::zero(2).exact_divide(1).unwrap().is_zero());
    }

    #[test]
    fn exact_divide_with_spectator_variable() {
        // (x1 x3 - x2 x3) / (x1 - x2) = x3
        let n = 3;
        let f = x(n, 1).mul(&x(n, 3)).sub(&x(n, 2).mul(&x(n, 3)));
        assert_eq!(f.exact_divide(1).unwrap(), x(n, 3));
    }

    #[test]
    fn exact_divide_rejects_nondivisible() {
        assert!(x(2, 1).exact_divide(1).is_err());
        assert!(MPoly::one(2).exact_divide(1).is_err());
    }

    #[test]
    fn exact_div_pair_with_coefficient() {
        // (x1 - q x3) * (x1 + x2) divided back by (x1 - q x3)
        let n = 3;
        let divisor_terms = x(n, 1).sub(&x(n, 3).mul_scalar(&QtRat::q()));
        let g = x(n, 1).add(&x(n, 2));
        let f = divisor_terms.mul(&g);
        assert_eq!(f.exact_div_pair(1, 3, &QtRat::q()).unwrap(), g);
    }

    #[test]
    fn division_reconstructs_antisymmetrized_input() {
        // (s_i - 1) g is divisible and the quotient times the divisor
        // reproduces it
        let n = 3;
        let g = x(n, 1).pow(3).mul(&x(n, 2)).add(&x(n, 2).mul(&x(n, 3).pow(2)));
        for i in 1..n {
            let diff = g.apply_transposition(i).sub(&g);
            let quot = diff.exact_divide(i).unwrap();
            let divisor = x(n, i).sub(&x(n, i + 1));
            assert_eq!(quot.mul(&divisor), diff);
        }
    }

    #[test]
    fn json_round_trip() {
        let n = 2;
        let f = x(n, 1)
            .pow(2)
            .mul_scalar(&QtRat::new("1 - t".parse().unwrap(), "q".parse().unwrap()).unwrap())
            .add(&x(n, 2));
        let v = f.to_json();
        assert_eq!(MPoly::from_json(&v).unwrap(), f);
    }

    #[test]
    fn param_series_trims_and_evaluates() {
        let n = 1;
        let s = ParamSeries::new(
            n,
            vec![MPoly::one(n), x(n, 1), MPoly::zero(n)],
        );
        assert_eq!(s.len(), 2);
        let at_t = s.evaluate(&QtRat::t());
        assert_eq!(at_t, MPoly::one(n).add(&x(n, 1).mul_scalar(&QtRat::t())));
    }
}
