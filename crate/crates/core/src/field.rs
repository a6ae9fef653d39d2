//! Exact coefficient fields.
//!
//! Three fields cover every computation in this crate:
//! - `BigRational`: the ground field Q,
//! - `RatFunc`: rational functions Q(s) in one transcendental parameter,
//! - `KElem<F>`: elements of a simple extension F[c]/(m(c)) over either base.
//!
//! `Coeff = KElem<BigRational>` is the coefficient type of the public series
//! API. Extension elements are kept reduced modulo the minimal polynomial,
//! which must be monic and squarefree; nesting extensions is rejected.

use std::fmt;
use std::sync::Arc;

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact field arithmetic by reference. Mismatched extension generators are a
/// programming error and panic; division by a non-invertible element is a
/// domain error and returns `Err`.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn from_i64(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if num::Zero::is_zero(self) {
            return Err(Error::NotInvertible);
        }
        Ok(self.recip())
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

// ---------------------------------------------------------------------------
// Rational functions in one parameter.
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over Q used as numerator/denominator of
/// `RatFunc` and for minimal polynomials. Coefficients in ascending degree,
/// no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct QPoly(pub Vec<BigRational>);

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn variable() -> Self {
        QPoly(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.0.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; panics if `div` is zero.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let mut rem = self.0.clone();
        let d = div.degree();
        let lead_inv = div.leading().recip();
        if rem.len() <= d && !(d == 0) {
            return (Self::zero(), Self::new(rem));
        }
        let mut quo = vec![BigRational::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d || (d == 0 && !rem.is_empty()) {
            let k = rem.len() - 1;
            let c = rem[k].clone() * &lead_inv;
            if !c.is_zero() {
                quo[k - d] = c.clone();
                for (i, b) in div.0.iter().enumerate() {
                    let t = &c * b;
                    rem[k - d + i] -= t;
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= d && d > 0 {
                break;
            }
            if d == 0 && rem.is_empty() {
                break;
            }
        }
        (Self::new(quo), Self::new(rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            // monic normalization for canonical results
            let inv = a.leading().recip();
            a.scale(&inv)
        }
    }

    pub fn derivative(&self) -> Self {
        if self.0.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == 0
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            first = false;
            if i == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if i == 1 {
                    write!(f, "s")?;
                } else {
                    write!(f, "s^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Rational function in one parameter `s`, kept reduced with a monic
/// denominator so equality is structural.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc {
    pub num: QPoly,
    pub den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: QPoly::zero(),
                den: QPoly::constant(BigRational::one()),
            };
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.divrem(&g);
        let (mut den, _) = den.divrem(&g);
        let lead_inv = den.leading().recip();
        num = num.scale(&lead_inv);
        den = den.scale(&lead_inv);
        RatFunc { num, den }
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self::new(p, QPoly::constant(BigRational::one()))
    }

    pub fn parameter() -> Self {
        Self::from_poly(QPoly::variable())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == 0
    }

    /// Numerator after clearing the (constant) denominator; only valid when
    /// `is_polynomial`.
    pub fn poly_part(&self) -> QPoly {
        debug_assert!(self.is_polynomial());
        let inv = self.den.leading().recip();
        self.num.scale(&inv)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == 0 && self.den.leading().is_one() {
            if self.num.degree() == 0 || self.num.is_zero() {
                write!(f, "{}", self.num)
            } else {
                write!(f, "({})", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        Self::constant(BigRational::zero())
    }
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(Self::new(self.den.clone(), self.num.clone()))
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }
}

// ---------------------------------------------------------------------------
// Simple algebraic extensions.
// ---------------------------------------------------------------------------

/// Monic squarefree minimal polynomial of an extension generator over the
/// base field `F`. Stored without the leading 1: `lower[i]` is the
/// coefficient of `c^i`, `0 <= i < degree`.
#[derive(Clone, PartialEq, Debug)]
pub struct MinPoly<F: Field> {
    pub lower: Vec<F>,
    pub symbol: String,
}

impl<F: Field> MinPoly<F> {
    pub fn new(lower: Vec<F>, symbol: impl Into<String>) -> Self {
        assert!(!lower.is_empty(), "extension of degree zero");
        MinPoly {
            lower,
            symbol: symbol.into(),
        }
    }

    pub fn degree(&self) -> usize {
        self.lower.len()
    }

    /// Full coefficient vector including the leading 1.
    pub fn monic_coeffs(&self) -> Vec<F> {
        let mut v = self.lower.clone();
        v.push(F::one());
        v
    }
}

impl MinPoly<BigRational> {
    /// Squarefree test over Q via gcd with the derivative.
    pub fn is_squarefree(&self) -> bool {
        QPoly::new(self.monic_coeffs()).is_squarefree()
    }
}

/// Element of the base field `F` or of one simple extension `F[c]/(m(c))`.
///
/// `Ext` coordinates have length `m.degree()` and are reduced modulo `m`.
#[derive(Clone, Debug)]
pub enum KElem<F: Field> {
    Base(F),
    Ext(Arc<MinPoly<F>>, Vec<F>),
}

/// The public coefficient type: Q or one simple extension of Q.
pub type Coeff = KElem<BigRational>;

impl<F: Field> KElem<F> {
    pub fn from_base(c: F) -> Self {
        KElem::Base(c)
    }

    /// The extension generator `c` itself.
    pub fn generator(m: &Arc<MinPoly<F>>) -> Self {
        let mut coords = vec![F::zero(); m.degree()];
        if m.degree() == 1 {
            // degree-1 "extension": c = -m0
            coords[0] = m.lower[0].neg();
        } else {
            coords[1] = F::one();
        }
        KElem::Ext(m.clone(), coords).normalize()
    }

    pub fn in_ext(m: &Arc<MinPoly<F>>, mut coords: Vec<F>) -> Self {
        assert!(coords.len() <= m.degree(), "coordinates exceed extension degree");
        coords.resize(m.degree(), F::zero());
        KElem::Ext(m.clone(), coords).normalize()
    }

    pub fn min_poly(&self) -> Option<&Arc<MinPoly<F>>> {
        match self {
            KElem::Base(_) => None,
            KElem::Ext(m, _) => Some(m),
        }
    }

    /// Base-field value if this element has no generator component.
    pub fn as_base(&self) -> Option<&F> {
        match self {
            KElem::Base(c) => Some(c),
            KElem::Ext(_, coords) => {
                if coords[1..].iter().all(|c| c.is_zero()) {
                    Some(&coords[0])
                } else {
                    None
                }
            }
        }
    }

    /// Coordinates in the power basis 1, c, ..., c^{d-1}; a bare base element
    /// has the single coordinate itself.
    pub fn coords(&self) -> Vec<F> {
        match self {
            KElem::Base(c) => vec![c.clone()],
            KElem::Ext(_, coords) => coords.clone(),
        }
    }

    fn normalize(self) -> Self {
        match self {
            KElem::Ext(m, coords) if coords[1..].iter().all(|c| c.is_zero()) => {
                KElem::Base(coords[0].clone())
            }
            other => other,
        }
    }

    fn lift(&self, m: &Arc<MinPoly<F>>) -> Vec<F> {
        match self {
            KElem::Base(c) => {
                let mut v = vec![F::zero(); m.degree()];
                v[0] = c.clone();
                v
            }
            KElem::Ext(m2, coords) => {
                assert!(
                    Arc::ptr_eq(m, m2) || m.as_ref() == m2.as_ref(),
                    "elements of distinct extensions: {} vs {}",
                    m.symbol,
                    m2.symbol
                );
                coords.clone()
            }
        }
    }

    fn join(&self, other: &Self) -> Option<Arc<MinPoly<F>>> {
        match (self.min_poly(), other.min_poly()) {
            (None, None) => None,
            (Some(m), None) | (None, Some(m)) => Some(m.clone()),
            (Some(a), Some(b)) => {
                assert!(
                    Arc::ptr_eq(a, b) || a.as_ref() == b.as_ref(),
                    "elements of distinct extensions: {} vs {}",
                    a.symbol,
                    b.symbol
                );
                Some(a.clone())
            }
        }
    }

    fn reduce(m: &Arc<MinPoly<F>>, mut raw: Vec<F>) -> Self {
        let d = m.degree();
        // reduce c^k for k >= d using c^d = -lower
        while raw.len() > d {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = raw.len() - d;
            for (i, mi) in m.lower.iter().enumerate() {
                let t = top.mul(mi);
                raw[k + i] = raw[k + i].sub(&t);
            }
        }
        raw.resize(d, F::zero());
        KElem::Ext(m.clone(), raw).normalize()
    }

    /// Multiplication matrix trace: sum of the conjugate embeddings of the
    /// element, exact over the base field.
    pub fn trace(&self) -> F {
        match self {
            KElem::Base(c) => c.clone(),
            KElem::Ext(m, coords) => {
                let d = m.degree();
                // trace of multiplication-by-self on the power basis
                let mut tr = F::zero();
                // basis vectors e_j = c^j; (self * c^j) coordinate j contributes
                let mut cur = self.lift(m);
                for j in 0..d {
                    tr = tr.add(&cur[j]);
                    if j + 1 < d {
                        // multiply by c: shift and reduce
                        let mut shifted = vec![F::zero(); d + 1];
                        for (i, c) in cur.iter().enumerate() {
                            shifted[i + 1] = c.clone();
                        }
                        if let KElem::Ext(_, next) = Self::reduce(m, shifted) {
                            cur = next;
                        } else {
                            // reduce collapsed to base: rebuild coords
                            let mut shifted2 = vec![F::zero(); d + 1];
                            for (i, c) in self.lift(m).iter().enumerate() {
                                shifted2[i + 1] = c.clone();
                            }
                            cur = match Self::reduce(m, shifted2) {
                                KElem::Ext(_, v) => v,
                                KElem::Base(b) => {
                                    let mut v = vec![F::zero(); d];
                                    v[0] = b;
                                    v
                                }
                            };
                        }
                    }
                }
                tr
            }
        }
    }
}

impl<F: Field> PartialEq for KElem<F> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (KElem::Base(a), KElem::Base(b)) => a == b,
            (KElem::Ext(_, _), KElem::Base(b)) => self.as_base().map_or(false, |a| a == b),
            (KElem::Base(a), KElem::Ext(_, _)) => other.as_base().map_or(false, |b| a == b),
            (KElem::Ext(ma, a), KElem::Ext(mb, b)) => ma.as_ref() == mb.as_ref() && a == b,
        }
    }
}

impl<F: Field> fmt::Display for KElem<F> {
    fmt_kelem!();
}

macro_rules! fmt_kelem {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match self {
                KElem::Base(c) => write!(f, "{}", c),
                KElem::Ext(m, coords) => {
                    let mut parts = Vec::new();
                    for (i, c) in coords.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let body = if i == 0 {
                            format!("{}", c)
                        } else if i == 1 {
                            if c.is_one() {
                                m.symbol.clone()
                            } else {
                                format!("{}*{}", c, m.symbol)
                            }
                        } else if c.is_one() {
                            format!("{}^{}", m.symbol, i)
                        } else {
                            format!("{}*{}^{}", c, m.symbol, i)
                        };
                        parts.push(body);
                    }
                    if parts.is_empty() {
                        write!(f, "0")
                    } else if parts.len() == 1 {
                        write!(f, "{}", parts[0])
                    } else {
                        write!(f, "({})", parts.join(" + "))
                    }
                }
            }
        }
    };
}
use fmt_kelem;

impl<F: Field> Field for KElem<F> {
    fn zero() -> Self {
        KElem::Base(F::zero())
    }
    fn one() -> Self {
        KElem::Base(F::one())
    }
    fn is_zero(&self) -> bool {
        match self {
            KElem::Base(c) => c.is_zero(),
            KElem::Ext(_, coords) => coords.iter().all(|c| c.is_zero()),
        }
    }
    fn add(&self, other: &Self) -> Self {
        match self.join(other) {
            None => {
                let (KElem::Base(a), KElem::Base(b)) = (self, other) else {
                    unreachable!()
                };
                KElem::Base(a.add(b))
            }
            Some(m) => {
                let a = self.lift(&m);
                let b = other.lift(&m);
                let coords = a.iter().zip(&b).map(|(x, y)| x.add(y)).collect();
                KElem::Ext(m, coords).normalize()
            }
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        match self.join(other) {
            None => {
                let (KElem::Base(a), KElem::Base(b)) = (self, other) else {
                    unreachable!()
                };
                KElem::Base(a.mul(b))
            }
            Some(m) => {
                let a = self.lift(&m);
                let b = other.lift(&m);
                let mut raw = vec![F::zero(); 2 * m.degree()];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            raw[i + j] = raw[i + j].add(&x.mul(y));
                        }
                    }
                }
                Self::reduce(&m, raw)
            }
        }
    }
    fn neg(&self) -> Self {
        match self {
            KElem::Base(c) => KElem::Base(c.neg()),
            KElem::Ext(m, coords) => {
                KElem::Ext(m.clone(), coords.iter().map(|c| c.neg()).collect())
            }
        }
    }
    fn inv(&self) -> Result<Self> {
        match self {
            KElem::Base(c) => Ok(KElem::Base(c.inv()?)),
            KElem::Ext(m, coords) => {
                if self.is_zero() {
                    return Err(Error::NotInvertible);
                }
                // extended Euclid in F[c] against the minimal polynomial
                let mut r0 = m.monic_coeffs();
                let mut r1 = coords.clone();
                trim(&mut r1);
                let mut t0: Vec<F> = vec![];
                let mut t1: Vec<F> = vec![F::one()];
                while !r1.is_empty() {
                    let (q, r) = poly_divrem(&r0, &r1)?;
                    let t = poly_sub(&t0, &poly_mul(&q, &t1));
                    r0 = r1;
                    r1 = r;
                    t0 = t1;
                    t1 = t;
                }
                if r0.len() != 1 {
                    // gcd non-constant: zero divisor modulo a reducible m
                    return Err(Error::NotInvertible);
                }
                let scale = r0[0].inv()?;
                let coords: Vec<F> = t0.iter().map(|c| c.mul(&scale)).collect();
                Ok(Self::reduce(m, coords))
            }
        }
    }
    fn from_i64(n: i64) -> Self {
        KElem::Base(F::from_i64(n))
    }
}

fn trim<F: Field>(v: &mut Vec<F>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn poly_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    let mut out = out;
    trim(&mut out);
    out
}

pub(crate) fn poly_sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let mut out = vec![F::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = out[i].add(x);
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = out[i].sub(y);
    }
    trim(&mut out);
    out
}

pub(crate) fn poly_divrem<F: Field>(a: &[F], b: &[F]) -> Result<(Vec<F>, Vec<F>)> {
    assert!(!b.is_empty(), "division by zero polynomial");
    let lead_inv = b.last().unwrap().inv()?;
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quo = vec![F::zero(); a.len().saturating_sub(db)];
    while rem.len() > db {
        let k = rem.len() - 1;
        let c = rem[k].mul(&lead_inv);
        if !c.is_zero() {
            quo[k - db] = c.clone();
            for (i, bi) in b.iter().enumerate() {
                rem[k - db + i] = rem[k - db + i].sub(&c.mul(bi));
            }
        }
        rem.pop();
        trim(&mut rem);
        if rem.len() <= db {
            break;
        }
    }
    trim(&mut quo);
    Ok((quo, rem))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn extension_arithmetic_sqrt2() {
        // m(c) = c^2 - 2
        let m = Arc::new(MinPoly::new(vec![q(-2), q(0)], "c"));
        let c = Coeff::generator(&m);
        let one = Coeff::one();
        let a = one.add(&c); // 1 + c
        let b = one.sub(&c); // 1 - c
        let prod = a.mul(&b); // 1 - c^2 = -1
        assert_eq!(prod, Coeff::from_i64(-1));
    }

    #[test]
    fn extension_inverse() {
        let m = Arc::new(MinPoly::new(vec![q(-2), q(0)], "c"));
        let c = Coeff::generator(&m);
        let a = Coeff::one().add(&c);
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), Coeff::one());
    }

    #[test]
    fn trace_of_generator() {
        // c^2 + c + 1: trace(c) = -1, trace(1) = 2
        let m = Arc::new(MinPoly::new(vec![q(1), q(1)], "w"));
        let c = Coeff::generator(&m);
        assert_eq!(c.trace(), q(-1));
        assert_eq!(Coeff::one().mul(&Coeff::from_base(q(1))).trace(), q(1));
        let one_ext = Coeff::in_ext(&m, vec![q(1), q(0)]);
        assert_eq!(one_ext.trace(), q(1));
    }

    #[test]
    fn ratfunc_reduction() {
        let s = RatFunc::parameter();
        let num = s.mul(&s).sub(&RatFunc::one()); // s^2 - 1
        let den = s.sub(&RatFunc::one()); // s - 1
        let r = num.div(&den).unwrap();
        assert_eq!(r, s.add(&RatFunc::one()));
    }
}
