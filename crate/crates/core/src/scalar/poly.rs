//! Sparse multivariate polynomials with rational coefficients and a
//! graded-lexicographic term order. The order is only needed for
//! deterministic printing, hashing, and leading-term bookkeeping.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use super::{ParamAssignment, Rational};
use crate::error::Result;

/// An exponent vector of fixed length, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `larger / self`, assuming divisibility.
    fn quotient_from(&self, larger: &Monomial) -> Monomial {
        Monomial(
            larger
                .0
                .iter()
                .zip(&self.0)
                .map(|(b, a)| b - a)
                .collect(),
        )
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A multivariate polynomial: exponent vector -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(nvars), c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(nvars, idx), Rational::one());
        MultiPoly { nvars, terms }
    }

    pub fn monomial(nvars: usize, mono: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_unit() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_unit())
    }

    /// The constant value, when the polynomial is constant.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if !self.is_constant() {
            return None;
        }
        self.terms.values().next().cloned()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Leading (graded-lex largest) term.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn mark_used(&self, used: &mut [bool]) {
        for m in self.terms.keys() {
            for (i, e) in m.exponents().iter().enumerate() {
                if *e > 0 {
                    used[i] = true;
                }
            }
        }
    }

    fn insert_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_ref(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable universe mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }

    pub fn sub_ref(&self, rhs: &MultiPoly) -> MultiPoly {
        self.add_ref(&rhs.neg_ref())
    }

    pub fn mul_ref(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable universe mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..exp {
            out = out.mul_ref(self);
        }
        out
    }

    pub fn evaluate(&self, assignment: &ParamAssignment) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, e) in m.exponents().iter().enumerate() {
                if *e > 0 {
                    let v = assignment.get(i).cloned().unwrap_or_else(Rational::zero);
                    term = &term * &v.pow(*e as i64)?;
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Substitutes assigned variables, leaving others symbolic.
    pub fn substitute(&self, assignment: &ParamAssignment) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.exponents().to_vec();
            for (i, e) in m.exponents().iter().enumerate() {
                if *e > 0 {
                    if let Some(v) = assignment.get(i) {
                        coeff = &coeff * &v.pow(*e as i64).expect("nonnegative exponent");
                        exps[i] = 0;
                    }
                }
            }
            out.insert_term(Monomial(exps), coeff);
        }
        out
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        let (lm, lc) = {
            let (m, c) = divisor.leading().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        let lc_inv = lc.recip().expect("leading coefficient nonzero");
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().expect("nonzero remainder");
                (m.clone(), c.clone())
            };
            if !lm.divides(&rm) {
                return None;
            }
            let t_mono = lm.quotient_from(&rm);
            let t_coeff = &rc * &lc_inv;
            let t = MultiPoly::monomial(self.nvars, t_mono, t_coeff);
            rem = rem.sub_ref(&t.mul_ref(divisor));
            quot = quot.add_ref(&t);
        }
        Some(quot)
    }

    /// Content: the positive rational `c` such that `self / c` has coprime
    /// integer coefficients. Zero polynomial has content 1.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::from_big(BigRational::new(num_gcd, den_lcm))
    }

    /// Sign of the leading coefficient: +1 or -1.
    fn leading_sign(&self) -> i64 {
        match self.leading() {
            Some((_, c)) if c.is_negative() => -1,
            _ => 1,
        }
    }

    /// The factor that scales this polynomial to primitive integer form with a
    /// positive leading coefficient (i.e. `self / factor` is normalized).
    pub fn normalizing_factor(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let c = self.content();
        if self.leading_sign() < 0 {
            -c
        } else {
            c
        }
    }

    pub fn primitive_normalized(&self) -> MultiPoly {
        let f = self.normalizing_factor();
        if f.is_one() {
            return self.clone();
        }
        self.scale(&f.recip().expect("nonzero factor"))
    }

    /// Largest variable index occurring, if any.
    fn main_var(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for m in self.terms.keys() {
            for (i, e) in m.exponents().iter().enumerate() {
                if *e > 0 && best.map_or(true, |b| i > b) {
                    best = Some(i);
                }
            }
        }
        best
    }

    fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `var^k`, a polynomial in the remaining variables.
    fn coeff_in(&self, var: usize, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.exponents()[var] == k {
                let mut e = m.exponents().to_vec();
                e[var] = 0;
                out.insert_term(Monomial(e), c.clone());
            }
        }
        out
    }

    fn mul_var_pow(&self, var: usize, k: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e[var] += k;
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// GCD in Q[x1..xn], returned primitive with positive leading coefficient.
    /// Constants are units, so gcd(a, c) = 1 for any nonzero constant c.
    pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        assert_eq!(a.nvars, b.nvars);
        if a.is_zero() {
            return b.primitive_normalized();
        }
        if b.is_zero() {
            return a.primitive_normalized();
        }
        if a.is_constant() || b.is_constant() {
            return MultiPoly::one(a.nvars);
        }
        let var = a.main_var().max(b.main_var()).expect("non-constant");
        // contents and primitive parts w.r.t. the main variable
        let (ca, pa) = a.univariate_content_prim(var);
        let (cb, pb) = b.univariate_content_prim(var);
        let cont_gcd = MultiPoly::gcd(&ca, &cb);

        // primitive Euclid with pseudo-remainders in the main variable
        let mut f = pa;
        let mut g = pb;
        if f.degree_in(var) < g.degree_in(var) {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = MultiPoly::pseudo_rem(&f, &g, var);
            f = g;
            g = if r.is_zero() {
                r
            } else {
                r.univariate_content_prim(var).1
            };
        }
        let prim_gcd = f.univariate_content_prim(var).1;
        cont_gcd.mul_ref(&prim_gcd).primitive_normalized()
    }

    /// Content/primitive split with respect to one variable: content is the
    /// gcd of the `var`-coefficients, a polynomial in the other variables.
    fn univariate_content_prim(&self, var: usize) -> (MultiPoly, MultiPoly) {
        let d = self.degree_in(var);
        let mut cont = MultiPoly::zero(self.nvars);
        for k in 0..=d {
            let c = self.coeff_in(var, k);
            if !c.is_zero() {
                cont = MultiPoly::gcd(&cont, &c);
                if cont.is_one() {
                    break;
                }
            }
        }
        if cont.is_zero() {
            cont = MultiPoly::one(self.nvars);
        }
        let prim = self.exact_div(&cont).expect("content divides");
        (cont, prim)
    }

    /// Pseudo-remainder of `a` by `b` in variable `var` (deg_a >= deg_b).
    fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
        let db = b.degree_in(var);
        let lb = b.coeff_in(var, db);
        let mut r = a.clone();
        while !r.is_zero() && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let lr = r.coeff_in(var, dr);
            // r := lb*r - lr*b*x^(dr-db)
            r = lb
                .mul_ref(&r)
                .sub_ref(&lr.mul_ref(&b.mul_var_pow(var, dr - db)));
        }
        r
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.add_ref(rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.sub_ref(rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_ref(rhs)
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    names: &'a [&'a str],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // descending graded-lex for a stable, human-friendly order
        for (m, c) in self.poly.terms.iter().rev() {
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
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_unit() {
                factors.push(format!("{mag}"));
            }
            for (i, e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names[i].to_string()),
                    _ => factors.push(format!("{}^{}", self.names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", PolyDisplay {
            poly: self,
            names: &refs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::NPARAMS;

    fn var(i: usize) -> MultiPoly {
        MultiPoly::var(NPARAMS, i)
    }

    #[test]
    fn gcd_of_univariate() {
        // gcd(p^2-1, p^2+2p+1) = p+1
        let p = var(0);
        let one = MultiPoly::one(NPARAMS);
        let a = &(&p * &p) - &one;
        let b = &(&(&p * &p) + &p.scale(&Rational::from_int(2))) + &one;
        let g = MultiPoly::gcd(&a, &b);
        assert_eq!(g, &p + &one);
    }

    #[test]
    fn gcd_multivariate() {
        // gcd((p+q)*p, (p+q)*q) = p+q
        let p = var(0);
        let q = var(1);
        let s = &p + &q;
        let g = MultiPoly::gcd(&(&s * &p), &(&s * &q));
        assert_eq!(g, s);
    }

    #[test]
    fn exact_division() {
        let p = var(0);
        let q = var(1);
        let a = &(&p + &q) * &(&p - &q);
        assert_eq!(a.exact_div(&(&p + &q)).unwrap(), &p - &q);
        assert!(a.exact_div(&(&p + &MultiPoly::one(NPARAMS))).is_none());
    }

    #[test]
    fn grlex_leading_term() {
        // p*q beats q^2? grlex: same degree, compare exponent vectors lexically:
        // (1,1,..) > (0,2,..) so p*q is the leader
        let p = var(0);
        let q = var(1);
        let f = &(&p * &q) + &(&q * &q);
        let (m, _) = f.leading().unwrap();
        assert_eq!(m.exponents()[0], 1);
        assert_eq!(m.exponents()[1], 1);
    }
}
