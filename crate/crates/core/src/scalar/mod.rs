//! Exact arithmetic in Q and in the rational-function field Q(p, q, lambda,
//! gamma, mu, nu, delta), the coefficient domain for every other module.
//!
//! All catalog data is expressed over this field: table entries such as
//! `1/2`, `-(q+1)` or `(p^2-1)/p` parse into [`Scalar`] values in a unique
//! canonical form, so equality of scalars is representation equality.

mod parse;
mod poly;

pub use poly::{Monomial, MultiPoly};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The fixed ordered parameter universe shared by the whole catalog.
pub const PARAMS: [&str; 7] = ["p", "q", "lambda", "gamma", "mu", "nu", "delta"];

/// Number of parameters in [`PARAMS`].
pub const NPARAMS: usize = PARAMS.len();

/// Index of a parameter name in [`PARAMS`].
pub fn param_index(name: &str) -> Result<usize> {
    PARAMS
        .iter()
        .position(|p| *p == name)
        .ok_or_else(|| Error::UnknownParameter(name.to_string()))
}

/// An exact rational number. Always stored reduced with positive denominator;
/// zero is 0/1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numer/denom`; fails on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.pow(
            i32::try_from(exp).map_err(|_| Error::ScalarParse("exponent overflow".into()))?,
        )))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub(crate) fn inner(&self) -> &BigRational {
        &self.0
    }

    pub(crate) fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    /// Parses "a" or "a/b" with optional sign.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let (sign, rest) = match t.strip_prefix('-') {
            Some(r) => (-1i64, r.trim()),
            None => (1, t),
        };
        let parts: Vec<&str> = rest.split('/').collect();
        let bad = || Error::ScalarParse(format!("bad rational literal `{text}`"));
        match parts.as_slice() {
            [a] => {
                let n: BigInt = a.trim().parse().map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(n * sign)))
            }
            [a, b] => {
                let n: BigInt = a.trim().parse().map_err(|_| bad())?;
                let d: BigInt = b.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Rational(BigRational::new(n * sign, d)))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// An element of Q(p, q, lambda, gamma, mu, nu, delta), stored as a reduced
/// fraction of polynomials over the fixed parameter universe.
///
/// Canonical form: numerator and denominator are coprime, the denominator is a
/// primitive integer polynomial with positive leading coefficient (graded-lex),
/// a constant denominator is folded away to 1, and zero is 0/1. Two scalars
/// are equal exactly when their canonical representations coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: MultiPoly,
    den: MultiPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: MultiPoly::zero(NPARAMS),
            den: MultiPoly::one(NPARAMS),
        }
    }

    pub fn one() -> Self {
        Scalar::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar {
            num: MultiPoly::constant(NPARAMS, r),
            den: MultiPoly::one(NPARAMS),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from_int(n))
    }

    /// `numer/denom` as a scalar constant.
    pub fn from_frac(numer: i64, denom: i64) -> Self {
        Scalar::from_rational(Rational::new(numer, denom).expect("nonzero denominator"))
    }

    /// The parameter with index `idx` in [`PARAMS`].
    pub fn param(idx: usize) -> Self {
        assert!(idx < NPARAMS, "parameter index out of range");
        Scalar {
            num: MultiPoly::var(NPARAMS, idx),
            den: MultiPoly::one(NPARAMS),
        }
    }

    /// The parameter with the given name.
    pub fn param_named(name: &str) -> Result<Self> {
        Ok(Scalar::param(param_index(name)?))
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        debug_assert_eq!(num.nvars(), NPARAMS);
        Scalar {
            num,
            den: MultiPoly::one(NPARAMS),
        }
    }

    /// Builds `num/den` in canonical form.
    pub fn from_fraction(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut s = Scalar { num, den };
        s.canonicalize();
        Ok(s)
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff the numerator is the zero polynomial.
    pub fn is_identically_zero(&self) -> bool {
        self.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when no parameter occurs.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value, when parameter-free.
    pub fn as_rational(&self) -> Option<Rational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        // canonical form folds constant denominators to one
        debug_assert!(d.is_one());
        Some(&n * &d.recip().expect("canonical denominator is nonzero"))
    }

    /// Marks which parameters occur in numerator or denominator.
    pub fn used_params(&self) -> [bool; NPARAMS] {
        let mut used = [false; NPARAMS];
        self.num.mark_used(&mut used);
        self.den.mark_used(&mut used);
        used
    }

    pub fn uses_any_param(&self) -> bool {
        self.used_params().iter().any(|b| *b)
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one(NPARAMS);
            return;
        }
        if !self.den.is_constant() {
            let g = MultiPoly::gcd(&self.num, &self.den);
            if !g.is_one() {
                self.num = self.num.exact_div(&g).expect("gcd divides numerator");
                self.den = self.den.exact_div(&g).expect("gcd divides denominator");
            }
        }
        // scale so the denominator is a primitive integer polynomial with
        // positive leading coefficient; a constant denominator becomes 1
        let factor = self.den.normalizing_factor();
        if !factor.is_one() {
            let inv = factor.recip().expect("normalizing factor is nonzero");
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn add_ref(&self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        let mut s = Scalar { num, den };
        s.canonicalize();
        s
    }

    pub fn sub_ref(&self, rhs: &Scalar) -> Scalar {
        self.add_ref(&rhs.neg_ref())
    }

    pub fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        let mut s = Scalar {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        };
        s.canonicalize();
        s
    }

    pub fn div_ref(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut s = Scalar {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        };
        s.canonicalize();
        Ok(s)
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        Scalar::one().div_ref(self)
    }

    pub fn pow(&self, exp: i64) -> Result<Scalar> {
        if exp >= 0 {
            let mut s = Scalar {
                num: self.num.pow(exp as u32),
                den: self.den.pow(exp as u32),
            };
            s.canonicalize();
            Ok(s)
        } else {
            self.recip()?.pow(-exp)
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Scalar {
        let mut s = Scalar {
            num: self.num.scale(c),
            den: self.den.clone(),
        };
        s.canonicalize();
        s
    }

    /// Exact value of the fraction at a full assignment of the occurring
    /// parameters. Unassigned occurring parameters and poles are errors.
    pub fn evaluate(&self, assignment: &ParamAssignment) -> Result<Rational> {
        let used = self.used_params();
        for (i, u) in used.iter().enumerate() {
            if *u && assignment.get(i).is_none() {
                return Err(Error::UnboundParameter(PARAMS[i].to_string()));
            }
        }
        let den = self.den.evaluate(assignment)?;
        if den.is_zero() {
            return Err(Error::PoleAtSamplePoint);
        }
        let num = self.num.evaluate(assignment)?;
        Ok(&num * &den.recip().expect("checked nonzero"))
    }

    /// Substitutes the assigned parameters, leaving the rest symbolic.
    pub fn substitute(&self, assignment: &ParamAssignment) -> Result<Scalar> {
        let num = self.num.substitute(assignment);
        let den = self.den.substitute(assignment);
        if den.is_zero() {
            return Err(Error::PoleAtSamplePoint);
        }
        let mut s = Scalar { num, den };
        s.canonicalize();
        Ok(s)
    }

    /// Parses the catalog scalar grammar: rational literals, parameter names,
    /// `+ - * / ^` and parentheses.
    pub fn parse(text: &str) -> Result<Scalar> {
        parse::parse_scalar(text)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.display_with(&PARAMS))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.display_with(&PARAMS),
                self.den.display_with(&PARAMS)
            )
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_ref(rhs)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.sub_ref(rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.div_ref(rhs).expect("division by zero scalar")
    }
}

/// The four field operations, dispatched by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic in canonical reduced form.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => Ok(a.add_ref(b)),
        ArithOp::Sub => Ok(a.sub_ref(b)),
        ArithOp::Mul => Ok(a.mul_ref(b)),
        ArithOp::Div => a.div_ref(b),
    }
}

/// A partial assignment of rational values to the parameter universe.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ParamAssignment {
    values: Vec<Option<Rational>>,
}

impl ParamAssignment {
    pub fn empty() -> Self {
        ParamAssignment {
            values: vec![None; NPARAMS],
        }
    }

    pub fn set(&mut self, idx: usize, value: Rational) {
        assert!(idx < NPARAMS);
        self.values[idx] = Some(value);
    }

    pub fn set_named(&mut self, name: &str, value: Rational) -> Result<()> {
        self.values[param_index(name)?] = Some(value);
        Ok(())
    }

    pub fn get(&self, idx: usize) -> Option<&Rational> {
        self.values.get(idx).and_then(|v| v.as_ref())
    }

    pub fn from_pairs(pairs: &[(&str, Rational)]) -> Result<Self> {
        let mut a = ParamAssignment::empty();
        for (name, v) in pairs {
            a.set_named(name, v.clone())?;
        }
        Ok(a)
    }

    /// Merge, with `other` winning on conflicts.
    pub fn merged(&self, other: &ParamAssignment) -> ParamAssignment {
        let mut out = self.clone();
        for i in 0..NPARAMS {
            if let Some(v) = other.get(i) {
                out.values[i] = Some(v.clone());
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.values.iter().all(|v| v.is_none())
    }

    /// Stable human-readable rendering, ordered by the parameter universe.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for (i, v) in self.values.iter().enumerate() {
            if let Some(v) = v {
                parts.push(format!("{}={}", PARAMS[i], v));
            }
        }
        parts.join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        Scalar::parse(text).unwrap()
    }

    #[test]
    fn rational_identity_half_plus_half() {
        assert_eq!(
            scalar_arith(&s("1/2"), &s("1/2"), ArithOp::Add).unwrap(),
            Scalar::one()
        );
    }

    #[test]
    fn difference_of_squares() {
        let lhs = scalar_arith(&s("p+1"), &s("p-1"), ArithOp::Mul).unwrap();
        assert_eq!(lhs, s("p^2-1"));
    }

    #[test]
    fn evaluate_p2_minus_1_over_p_at_half() {
        // hand-check oracle: ((1/2)^2 - 1) / (1/2) = (-3/4)*2 = -3/2
        let expr = s("(p^2-1)/p");
        let mut a = ParamAssignment::empty();
        a.set_named("p", Rational::new(1, 2).unwrap()).unwrap();
        assert_eq!(expr.evaluate(&a).unwrap(), Rational::new(-3, 2).unwrap());
    }

    #[test]
    fn evaluate_simple_cases() {
        let mut a = ParamAssignment::empty();
        a.set_named("q", Rational::from_int(-1)).unwrap();
        assert_eq!(s("q+1").evaluate(&a).unwrap(), Rational::zero());

        let mut b = ParamAssignment::empty();
        b.set_named("p", Rational::new(1, 2).unwrap()).unwrap();
        assert_eq!(s("2/p").evaluate(&b).unwrap(), Rational::from_int(4));

        let mut c = ParamAssignment::empty();
        c.set_named("q", Rational::from_int(2)).unwrap();
        assert_eq!(s("-(q+1)").evaluate(&c).unwrap(), Rational::from_int(-3));
    }

    #[test]
    fn evaluate_errors() {
        let expr = s("p+q");
        let mut a = ParamAssignment::empty();
        a.set_named("p", Rational::one()).unwrap();
        assert_eq!(
            expr.evaluate(&a),
            Err(Error::UnboundParameter("q".to_string()))
        );

        let pole = s("1/p");
        let mut b = ParamAssignment::empty();
        b.set_named("p", Rational::zero()).unwrap();
        assert_eq!(pole.evaluate(&b), Err(Error::PoleAtSamplePoint));
    }

    #[test]
    fn identically_zero() {
        assert!(s("(p+1)-(p+1)").is_identically_zero());
        assert!(!s("p-q").is_identically_zero());
    }

    #[test]
    fn canonical_gcd_reduction() {
        // (p^2-1)/(p-1) canonicalizes to p+1
        let q = s("p^2-1").div_ref(&s("p-1")).unwrap();
        assert_eq!(q, s("p+1"));
        assert_eq!(format!("{q}"), "p + 1");
    }

    #[test]
    fn denominator_normalization_is_canonical() {
        // 1/(2p) and (1/2)/p must agree bit-for-bit
        let a = Scalar::one().div_ref(&s("2*p")).unwrap();
        let b = s("1/2").div_ref(&s("p")).unwrap();
        assert_eq!(a, b);
        // leading-coefficient sign of the denominator is normalized
        let c = s("1/(-p)");
        let d = s("-(1/p)");
        assert_eq!(c, d);
    }

    #[test]
    fn division_by_zero_errors() {
        assert_eq!(
            scalar_arith(&Scalar::one(), &Scalar::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn display_round_trip_examples() {
        for text in [
            "-(q+1)",
            "1/2",
            "(p^2-1)/p",
            "p*q - 2",
            "lambda*mu",
            "-(1/2)*p^3 + q/7",
            "(p+q)^2/(p-q)",
            "0",
            "delta^2*(mu^2 - 2*lambda*nu)",
        ] {
            let v = s(text);
            let round = Scalar::parse(&format!("{v}")).unwrap();
            assert_eq!(v, round, "round trip failed for {text}");
        }
    }
}
