//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! A [`CycScalar`] is an element of Q(ζ_n), stored as its canonical
//! representative in the power basis 1, ζ, ..., ζ^(φ(n)-1) of Q[x]/(Φ_n)
//! with arbitrary-precision rational coefficients. Arithmetic between scalars
//! of different moduli promotes both operands into Q(ζ_lcm) first, so values
//! built from unrelated roots of unity combine freely. Everything here is
//! exact; no floating point is involved at any stage.
//!
//! The module also provides the text form used by config files and reports:
//! `z8` is ζ_8, `z8^3` its cube, and full expressions like
//! `1/2 - 3*z8 + z8^2` parse with the usual precedence (see [`parse_scalar`]).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{capacity_err, domain_err, Error, Result};

/// Arbitrary-precision rational, the coefficient type for everything exact.
pub type Rat = BigRational;

/// Small-rational constructor: `rat(p, q)` is p/q. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Largest root-of-unity order accepted from input data (configs, parsed
/// scalar text, representation weights).
pub const DEFAULT_MODULUS_CAP: u32 = 256;

/// Hard ceiling on any modulus the arithmetic will materialize on its own
/// when promoting operands to a common field.
pub const PROMOTION_CAP: u32 = 1 << 16;

/// Euler's totient. `euler_phi(0) == 0` by convention; callers validate.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as u32
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Coefficients of the n-th cyclotomic polynomial Φ_n, constant term first.
/// The vector has length φ(n)+1 and trailing coefficient 1 (monic).
pub fn cyclotomic_polynomial(n: u32) -> Vec<i128> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    // Φ_d(x) = (x^d - 1) / prod of Φ_e over proper divisors e of d. Building
    // the table in ascending divisor order means every factor is already at
    // hand, and each division is exact over the integers because cyclotomic
    // polynomials are monic.
    let mut table: Vec<(u32, Vec<i128>)> = Vec::new();
    for d in divisors(n) {
        let mut poly = vec![0i128; d as usize + 1];
        poly[0] = -1;
        poly[d as usize] = 1;
        for (e, phi_e) in &table {
            if d % e == 0 {
                poly = poly_div_exact_int(&poly, phi_e);
            }
        }
        table.push((d, poly));
    }
    table.pop().expect("divisor list is never empty").1
}

/// Exact division of integer polynomials; `den` must be monic and divide
/// `num` exactly. Coefficients are constant term first.
fn poly_div_exact_int(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    debug_assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![0i128; dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "polynomial division not exact");
    quot
}

/// An element of the cyclotomic field Q(ζ_n), reduced mod Φ_n.
#[derive(Clone, Debug)]
pub struct CycScalar {
    n: u32,
    /// Exactly φ(n) coefficients: the canonical representative in the power
    /// basis of Q[x]/(Φ_n).
    coeffs: Vec<Rat>,
}

impl CycScalar {
    pub fn zero() -> Self {
        CycScalar { n: 1, coeffs: vec![Rat::zero()] }
    }

    pub fn one() -> Self {
        CycScalar { n: 1, coeffs: vec![Rat::one()] }
    }

    pub fn from_rat(r: Rat) -> Self {
        CycScalar { n: 1, coeffs: vec![r] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(k)))
    }

    /// p/q as a scalar. Panics if `q == 0`.
    pub fn rational(p: i64, q: i64) -> Self {
        Self::from_rat(rat(p, q))
    }

    /// ζ_n^k for any integer k (reduced mod n). Orders above
    /// [`DEFAULT_MODULUS_CAP`] are refused.
    pub fn try_root_of_unity(n: u32, k: i64) -> Result<Self> {
        if n == 0 {
            return domain_err("root of unity order must be positive");
        }
        if n > DEFAULT_MODULUS_CAP {
            return capacity_err(format!(
                "root of unity order {n} exceeds the modulus cap {DEFAULT_MODULUS_CAP}"
            ));
        }
        let k = k.rem_euclid(n as i64) as usize;
        let mut full = vec![Rat::zero(); n as usize];
        full[k] = Rat::one();
        Ok(Self::from_poly(n, full))
    }

    /// Panicking form of [`CycScalar::try_root_of_unity`].
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        Self::try_root_of_unity(n, k).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Order of the ambient field: this value lives in Q(ζ_modulus).
    pub fn modulus(&self) -> u32 {
        self.n
    }

    /// Build from coefficients of powers 1, ζ, ζ², ... (any length),
    /// reducing modulo Φ_n into the canonical basis.
    fn from_poly(n: u32, mut full: Vec<Rat>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        if full.len() < deg {
            full.resize(deg, Rat::zero());
        }
        for k in (deg..full.len()).rev() {
            if full[k].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut full[k], Rat::zero());
            for (i, &pc) in phi.iter().enumerate().take(deg) {
                if pc != 0 {
                    let delta = &c * Rat::from_integer(BigInt::from(pc));
                    full[k - deg + i] -= delta;
                }
            }
        }
        full.truncate(deg);
        CycScalar { n, coeffs: full }
    }

    /// Re-express in Q(ζ_m); requires `self.modulus()` to divide m.
    fn promote_raw(&self, m: u32) -> Self {
        debug_assert_eq!(m % self.n, 0, "promotion target must be a multiple");
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut full = vec![Rat::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                full[i * step] = c.clone();
            }
        }
        Self::from_poly(m, full)
    }

    /// Put both operands into the smallest common field.
    fn try_align(&self, other: &Self) -> Result<(Self, Self)> {
        if self.n == other.n {
            return Ok((self.clone(), other.clone()));
        }
        let m = (self.n as u64).lcm(&(other.n as u64));
        if m > PROMOTION_CAP as u64 {
            return capacity_err(format!(
                "common modulus {m} exceeds the promotion cap {PROMOTION_CAP}"
            ));
        }
        let m = m as u32;
        Ok((self.promote_raw(m), other.promote_raw(m)))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (mut a, b) = self.try_align(other)?;
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        Ok(a)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let (mut a, b) = self.try_align(other)?;
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        Ok(a)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.try_align(other)?;
        let len = a.coeffs.len();
        let mut full = vec![Rat::zero(); 2 * len];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    full[i + j] += x * y;
                }
            }
        }
        Ok(Self::from_poly(a.n, full))
    }

    /// Multiply by a rational without changing the field.
    pub fn scale(&self, r: &Rat) -> Self {
        CycScalar { n: self.n, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_one())
    }

    /// The value as a rational number, if it lies in Q. The canonical basis
    /// makes this a plain coefficient check.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Complex conjugation, ζ_n ↦ ζ_n^(n-1). An involutive field
    /// automorphism; fixes exactly the real subfield.
    pub fn conj(&self) -> Self {
        let n = self.n as usize;
        let mut full = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                full[(n - i) % n] += c;
            }
        }
        Self::from_poly(self.n, full)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return domain_err("division by zero");
        }
        if let Some(r) = self.as_rational() {
            let mut coeffs = vec![Rat::zero(); self.coeffs.len()];
            coeffs[0] = Rat::one() / r;
            return Ok(CycScalar { n: self.n, coeffs });
        }
        // Extended Euclid in Q[x] against Φ_n. Since Φ_n is irreducible over
        // Q and self reduces to a nonzero polynomial of smaller degree, the
        // gcd is a nonzero constant c with t·self ≡ c (mod Φ_n).
        let phi: Vec<Rat> = cyclotomic_polynomial(self.n)
            .into_iter()
            .map(|c| Rat::from_integer(BigInt::from(c)))
            .collect();
        let mut r0 = poly_trim(phi);
        let mut r1 = poly_trim(self.coeffs.clone());
        let mut t0: Vec<Rat> = Vec::new();
        let mut t1: Vec<Rat> = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            r0 = r1;
            r1 = r;
            let tn = poly_sub(&t0, &poly_mul(&q, &t1));
            t0 = t1;
            t1 = tn;
        }
        debug_assert_eq!(r0.len(), 1, "gcd with an irreducible must be constant");
        let c = r0[0].clone();
        let mut coeffs: Vec<Rat> = t0.into_iter().map(|t| t / &c).collect();
        coeffs.resize(self.coeffs.len(), Rat::zero());
        Ok(CycScalar { n: self.n, coeffs })
    }

    /// Panicking form of [`CycScalar::try_inv`].
    pub fn inv(&self) -> Self {
        self.try_inv().unwrap_or_else(|e| panic!("{e}"))
    }

    /// Integer power; negative exponents invert first (panics on zero base
    /// with negative exponent).
    pub fn pow(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inv() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Default for CycScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycScalar {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.coeffs == other.coeffs;
        }
        // The canonical basis makes equality a coefficient comparison once
        // both sides live in the same field. Promote unconditionally so
        // equality stays total.
        let m = (self.n as u64).lcm(&(other.n as u64)) as u32;
        self.promote_raw(m).coeffs == other.promote_raw(m).coeffs
    }
}

impl Eq for CycScalar {}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: CycScalar) -> CycScalar {
        &self + &rhs
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: CycScalar) -> CycScalar {
        &self - &rhs
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: CycScalar) -> CycScalar {
        &self * &rhs
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

// ---- rational-coefficient polynomial helpers (for the inverse) ----

fn poly_trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = den.len() - 1;
    let lead = &den[dd];
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (Vec::new(), poly_trim(rem));
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / lead;
        if !c.is_zero() {
            for (i, dc) in den.iter().enumerate() {
                if !dc.is_zero() {
                    let delta = &c * dc;
                    rem[k + i] -= delta;
                }
            }
        }
        quot[k] = c;
    }
    (poly_trim(quot), poly_trim(rem))
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rat::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(out)
}

// ---- text form ----

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "z{}", self.n)?;
                } else {
                    write!(f, "z{}^{}", self.n, i)?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for CycScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Root(u32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex_scalar(input: &str) -> Result<Vec<Tok>> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' => i += 1,
            b'+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            b'-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            b'*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            b'/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            b'^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            b'(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            b')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &input[start..i];
                let value = digits
                    .parse::<BigInt>()
                    .map_err(|_| Error::Domain(format!("bad integer literal {digits:?}")))?;
                toks.push(Tok::Num(value));
            }
            b'z' => {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return domain_err(format!("expected digits after 'z' at byte {start}"));
                }
                let order: u32 = input[start..i]
                    .parse()
                    .map_err(|_| Error::Domain(format!("root order out of range at byte {start}")))?;
                toks.push(Tok::Root(order));
            }
            _ => {
                return domain_err(format!(
                    "unexpected character {:?} at byte {i}",
                    input[i..].chars().next().unwrap()
                ))
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_expr(&mut self) -> Result<CycScalar> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = acc.try_add(&rhs)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = acc.try_sub(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<CycScalar> {
        let mut acc = self.parse_atom()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.parse_atom()?;
                    acc = acc.try_mul(&rhs)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.parse_atom()?;
                    acc = acc.try_mul(&rhs.try_inv()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_atom(&mut self) -> Result<CycScalar> {
        match self.next() {
            Some(Tok::Minus) => Ok(-&self.parse_atom()?),
            Some(Tok::Num(v)) => Ok(CycScalar::from_rat(Rat::from_integer(v))),
            Some(Tok::Root(n)) => {
                let k = if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let negate = if self.peek() == Some(&Tok::Minus) {
                        self.pos += 1;
                        true
                    } else {
                        false
                    };
                    match self.next() {
                        Some(Tok::Num(v)) => {
                            if n == 0 {
                                return domain_err("root of unity order must be positive");
                            }
                            // reduce mod n before narrowing so huge literals stay valid
                            let r = v.mod_floor(&BigInt::from(n));
                            let r: i64 = i64::try_from(r)
                                .map_err(|_| Error::Internal("residue out of range".into()))?;
                            if negate {
                                -r
                            } else {
                                r
                            }
                        }
                        _ => return domain_err("expected an integer exponent after '^'"),
                    }
                } else {
                    1
                };
                CycScalar::try_root_of_unity(n, k)
            }
            Some(Tok::LParen) => {
                let inner = self.parse_expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => domain_err("missing closing parenthesis"),
                }
            }
            Some(t) => domain_err(format!("unexpected token {t:?}")),
            None => domain_err("unexpected end of expression"),
        }
    }
}

/// Parse the scalar grammar: integers, `p/q`, roots `z{n}` with optional
/// `^{k}` (k may be negative), `+ - * /`, parentheses and unary minus.
pub fn parse_scalar(input: &str) -> Result<CycScalar> {
    let toks = lex_scalar(input)?;
    if toks.is_empty() {
        return domain_err("empty scalar expression");
    }
    let mut parser = Parser { toks, pos: 0 };
    let value = parser.parse_expr()?;
    if parser.pos != parser.toks.len() {
        return domain_err(format!(
            "trailing input after expression (token {:?})",
            parser.toks[parser.pos]
        ));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u32, k: i64) -> CycScalar {
        CycScalar::root_of_unity(n, k)
    }

    #[test]
    fn phi_and_cyclotomic_polynomials() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(105), 48);
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
        assert_eq!(cyclotomic_polynomial(105)[7], -2);
    }

    #[test]
    fn fourth_and_eighth_roots() {
        assert_eq!(&z(4, 1) * &z(4, 1), CycScalar::from_int(-1));
        assert_eq!(z(8, 1).pow(4), CycScalar::from_int(-1));
        assert_eq!(z(8, 8), CycScalar::one());
        assert_eq!(&z(8, 3) * &z(8, 5), CycScalar::one());
        assert_eq!(z(2, 1), CycScalar::from_int(-1));
        assert_eq!(z(1, 0), CycScalar::one());
    }

    #[test]
    fn mixed_modulus_arithmetic() {
        // ζ_2 · ζ_3 = ζ_6^5, computed across different fields.
        assert_eq!(&z(2, 1) * &z(3, 1), z(6, 5));
        // 1 + ζ_3 + ζ_3² = 0 even when assembled from modulus-1 pieces.
        let sum = &(&CycScalar::one() + &z(3, 1)) + &z(3, 2);
        assert!(sum.is_zero());
    }

    #[test]
    fn roots_sum_to_zero() {
        for n in [2u32, 6, 8, 12] {
            let mut acc = CycScalar::zero();
            for k in 0..n {
                acc = &acc + &z(n, k as i64);
            }
            assert!(acc.is_zero(), "sum of all {n}-th roots");
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(8, 1).conj(), z(8, 7));
        assert_eq!(CycScalar::rational(3, 7).conj(), CycScalar::rational(3, 7));
        let x = &z(12, 5) + &CycScalar::rational(1, 2);
        assert_eq!(x.conj().conj(), x);
        // ζ_8 + conj(ζ_8) is the real number √2.
        let s = &z(8, 1) + &z(8, 1).conj();
        assert_eq!(&s * &s, CycScalar::from_int(2));
    }

    #[test]
    fn inverses() {
        assert_eq!(z(8, 1).inv(), z(8, 7));
        let x = &CycScalar::one() + &z(4, 1); // 1 + i
        assert_eq!(&x * &x.inv(), CycScalar::one());
        let y = &(&z(12, 1) + &z(12, 7)) + &CycScalar::rational(2, 3);
        assert_eq!(&y.inv() * &y, CycScalar::one());
        assert!(CycScalar::zero().try_inv().is_err());
    }

    #[test]
    fn rational_detection() {
        assert_eq!(z(8, 1).pow(4).as_rational(), Some(rat(-1, 1)));
        assert_eq!(z(8, 1).as_rational(), None);
        assert!((&z(4, 1) * &z(4, 3)).is_one());
    }

    #[test]
    fn display_round_trips() {
        let samples = [
            CycScalar::zero(),
            CycScalar::from_int(-7),
            CycScalar::rational(-3, 4),
            z(8, 3),
            &(&z(8, 1).scale(&rat(-3, 1)) + &CycScalar::rational(1, 2)) + &z(8, 2),
            &z(12, 7) - &CycScalar::from_int(2),
        ];
        for s in &samples {
            let text = alloc::format!("{s}");
            let back: CycScalar = text.parse().unwrap();
            assert_eq!(&back, s, "round trip through {text:?}");
        }
    }

    #[test]
    fn parser_accepts_grammar() {
        let v: CycScalar = "1/2 - 3*z8 + z8^2".parse().unwrap();
        let expect = &(&CycScalar::rational(1, 2) - &z(8, 1).scale(&rat(3, 1))) + &z(8, 2);
        assert_eq!(v, expect);
        let p: CycScalar = "(1+z4)*(1-z4)".parse().unwrap();
        assert_eq!(p, CycScalar::from_int(2));
        let inv: CycScalar = "z8^-1".parse().unwrap();
        assert_eq!(inv, z(8, 7));
        assert_eq!("-z4".parse::<CycScalar>().unwrap(), -&z(4, 1));
        assert_eq!("6/4".parse::<CycScalar>().unwrap(), CycScalar::rational(3, 2));
        assert_eq!("z8^9".parse::<CycScalar>().unwrap(), z(8, 1));
    }

    #[test]
    fn parser_rejects_garbage() {
        for bad in ["", "z0", "1/0", "z300", "1 +", "(1", "z8^", "@", "2 2"] {
            assert!(bad.parse::<CycScalar>().is_err(), "should reject {bad:?}");
        }
    }

    #[test]
    fn promotion_cap_is_enforced() {
        assert!(CycScalar::try_root_of_unity(257, 1).is_err());
        assert!(CycScalar::try_root_of_unity(0, 1).is_err());
        // 128 and 255 are each fine; their lcm 32640 is still under the
        // promotion cap, so arithmetic between them works.
        let a = z(128, 1);
        let b = z(255, 1);
        assert_eq!((&a * &b).modulus(), 32640);
    }

    fn arb_scalar() -> impl Strategy<Value = CycScalar> {
        prop::sample::select(alloc::vec![1u32, 2, 3, 4, 6, 8, 12]).prop_flat_map(|n| {
            let phi = euler_phi(n) as usize;
            prop::collection::vec((-4i64..=4, 1i64..=3), phi).prop_map(move |cs| {
                let mut acc = CycScalar::zero();
                for (i, (p, q)) in cs.into_iter().enumerate() {
                    let term = CycScalar::root_of_unity(n, i as i64).scale(&rat(p, q));
                    acc = &acc + &term;
                }
                acc
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, CycScalar::zero());
            prop_assert_eq!(&a * &CycScalar::one(), a.clone());
        }

        #[test]
        fn multiplicative_inverses(a in arb_scalar()) {
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv(), CycScalar::one());
            }
        }

        #[test]
        fn conjugation_is_an_automorphism(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }
    }
}
