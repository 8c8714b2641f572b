use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::exactalg::ring::RingSpec;

/// Exponent vector; unused trailing slots stay zero.
///
/// Ordered graded-lexicographically: total degree first, then exponents of
/// `v_1, v_2, ...` compared in turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 3]);

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial([other.0[0] - self.0[0], other.0[1] - self.0[1], other.0[2] - self.0[2]])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn add_coeff(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

fn mul_coeff(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

/// Sparse polynomial with exact integer or mod-2 coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: RingSpec,
    terms: BTreeMap<Monomial, i128>,
}

/// Result of substituting values for some or all variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    Scalar(BigRational),
    Poly(Poly),
}

impl Poly {
    pub fn zero(ring: RingSpec) -> Poly {
        Poly { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: RingSpec) -> Poly {
        Poly::constant(ring, 1)
    }

    pub fn constant(ring: RingSpec, c: i128) -> Poly {
        Poly::monomial(ring, Monomial::ONE, c)
    }

    pub fn monomial(ring: RingSpec, m: Monomial, c: i128) -> Poly {
        let mut p = Poly::zero(ring);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, i128)>>(ring: RingSpec, terms: I) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &i128)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> i128 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(Monomial, i128)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, *c))
    }

    /// Constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<i128> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Monomial::ONE).copied(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: i128) {
        let c = self.normalize(c);
        if c == 0 {
            return;
        }
        let sum = self.normalize(add_coeff(self.coeff(&m), c));
        if sum == 0 {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    fn normalize(&self, c: i128) -> i128 {
        if self.ring.is_mod2() {
            c.rem_euclid(2)
        } else {
            c
        }
    }

    /// Degree with every variable in degree 2; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| 2 * m.total()).max()
    }

    /// The common degree of all terms, or `None` when inhomogeneous or zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| 2 * m.total());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn scale(&self, c: i128) -> Poly {
        Poly::from_terms(self.ring, self.terms.iter().map(|(m, a)| (*m, mul_coeff(*a, c))))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    fn check_ring(&self, other: &Poly) {
        assert_eq!(self.ring, other.ring, "polynomials from different rings");
    }

    /// Exact quotient `self / den`.
    pub fn exact_divide(&self, den: &Poly) -> Result<Poly> {
        self.check_ring(den);
        let (dm, dc) = den.leading().ok_or(Error::NonExactDivision)?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.ring);
        while let Some((m, c)) = rem.leading() {
            if !dm.divides(&m) || c % dc != 0 {
                return Err(Error::NonExactDivision);
            }
            let qm = dm.quotient_of(&m);
            let qc = c / dc;
            quot.add_term(qm, qc);
            for (m2, c2) in den.terms.iter() {
                rem.add_term(qm.mul(m2), -mul_coeff(qc, *c2));
            }
        }
        Ok(quot)
    }

    /// Substitute `x_i -> x_{sigma[i]}`.
    pub fn permute_vars(&self, sigma: &[usize]) -> Poly {
        let n = self.ring.nvars();
        assert_eq!(sigma.len(), n, "permutation length");
        Poly::from_terms(
            self.ring,
            self.terms.iter().map(|(m, c)| {
                let mut e = [0u32; 3];
                for i in 0..n {
                    e[sigma[i]] = m.0[i];
                }
                (Monomial(e), *c)
            }),
        )
    }

    /// Integer content (gcd of coefficients), zero for the zero polynomial.
    pub fn content(&self) -> i128 {
        self.terms.values().fold(0i128, |g, c| g.gcd(c))
    }

    pub fn specialize(&self, assignment: &[Option<BigRational>]) -> Result<Specialized> {
        let n = self.ring.nvars();
        assert_eq!(assignment.len(), n, "assignment length");
        if self.ring.is_mod2() && assignment.iter().flatten().any(|v| !v.is_integer()) {
            return Err(Error::NonIntegral);
        }
        if assignment.iter().all(Option::is_some) {
            let mut total = BigRational::zero();
            for (m, c) in self.terms.iter() {
                let mut t = BigRational::from_integer(BigInt::from(*c));
                for (i, v) in assignment.iter().enumerate() {
                    let v = v.as_ref().expect("checked above");
                    t *= Pow::pow(v, m.0[i]);
                }
                total += t;
            }
            if self.ring.is_mod2() {
                let two = BigInt::from(2);
                total = BigRational::from_integer(total.to_integer().mod_floor(&two));
            }
            return Ok(Specialized::Scalar(total));
        }
        if assignment.iter().flatten().any(|v| !v.is_integer()) {
            return Err(Error::NonIntegral);
        }
        let mut out = Poly::zero(self.ring);
        for (m, c) in self.terms.iter() {
            let mut factor = BigInt::from(*c);
            let mut rest = *m;
            for (i, v) in assignment.iter().enumerate() {
                if let Some(v) = v {
                    factor *= Pow::pow(v.to_integer(), m.0[i]);
                    rest.0[i] = 0;
                }
            }
            let c: i128 = i128::try_from(factor).expect("specialized coefficient overflow");
            out.add_term(rest, c);
        }
        Ok(Specialized::Poly(out))
    }

    /// Full integer evaluation.
    pub fn eval_int(&self, values: &[i64]) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in self.terms.iter() {
            let mut t = BigInt::from(*c);
            for (i, v) in values.iter().enumerate().take(self.ring.nvars()) {
                t *= Pow::pow(BigInt::from(*v), m.0[i]);
            }
            total += t;
        }
        if self.ring.is_mod2() {
            total = total.mod_floor(&BigInt::from(2));
        }
        total
    }

    /// Full evaluation at rational points.
    pub fn eval_rational(&self, values: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in self.terms.iter() {
            let mut t = BigRational::from_integer(BigInt::from(*c));
            for (i, v) in values.iter().enumerate().take(self.ring.nvars()) {
                t *= Pow::pow(v, m.0[i]);
            }
            total += t;
        }
        total
    }

    fn write_with(&self, f: &mut impl Write, pretty: bool) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_char('0');
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = *c < 0;
            let abs = c.unsigned_abs();
            match (k, neg) {
                (0, true) => f.write_char('-')?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
                continue;
            }
            let mut first = true;
            if abs != 1 {
                write!(f, "{abs}")?;
                first = false;
            }
            for i in 0..self.ring.nvars() {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                if pretty {
                    f.write_str(self.ring.pretty_name(i))?;
                    if e > 1 {
                        write_superscript(f, e)?;
                    }
                } else {
                    if !first {
                        f.write_char('*')?;
                    }
                    f.write_str(self.ring.var_name(i))?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
                first = false;
            }
        }
        Ok(())
    }

    /// Parses the canonical text form, e.g. `-x1^2*x2 + 3*x3`.
    pub fn parse(ring: RingSpec, text: &str) -> Result<Poly> {
        let bad = || Error::InvariantViolation(alloc::format!("cannot parse polynomial {text:?}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = Poly::zero(ring);
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && i > start {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'-') => (-1i128, &piece[1..]),
                Some(b'+') => (1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coeff = sign;
            let mut exps = [0u32; 3];
            for factor in body.split('*') {
                if let Ok(c) = factor.parse::<i128>() {
                    coeff = coeff.checked_mul(c).ok_or_else(bad)?;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                let i = (0..ring.nvars())
                    .find(|&i| ring.var_name(i) == name || ring.pretty_name(i) == name)
                    .ok_or_else(bad)?;
                exps[i] += e;
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }

    /// Unicode rendering such as `α₁²α₂ - 3α₂`.
    pub fn pretty(&self) -> String {
        let mut s = String::new();
        self.write_with(&mut s, true).expect("writing to a String");
        s
    }
}

fn write_superscript(f: &mut impl Write, e: u32) -> fmt::Result {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut digits = Vec::new();
    let mut e = e;
    while e > 0 {
        digits.push(DIGITS[(e % 10) as usize]);
        e /= 10;
    }
    for d in digits.iter().rev() {
        f.write_char(*d)?;
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(*m, *c);
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(*m, -*c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = Poly::zero(self.ring);
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                out.add_term(m1.mul(m2), mul_coeff(*c1, *c2));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                self.$f(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        self.check_ring(rhs);
        for (m, c) in rhs.terms.iter() {
            self.add_term(*m, *c);
        }
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        *self += &rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        self.check_ring(rhs);
        for (m, c) in rhs.terms.iter() {
            self.add_term(*m, -*c);
        }
    }
}

impl SubAssign<Poly> for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        *self -= &rhs;
    }
}

impl Poly {
    pub fn is_one(&self) -> bool {
        self.as_constant() == Some(1)
    }
}
