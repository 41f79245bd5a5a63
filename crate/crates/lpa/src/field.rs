//! Exact coefficient arithmetic: arbitrary-precision rationals and prime
//! fields, plus the monic-polynomial machinery (irreducibility testing,
//! enumeration of Laurent-irreducible representatives, necklace counts)
//! that feeds the simple-module census.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime modulus {0} exceeds the supported range (p < 2^31)")]
    ModulusTooLarge(u64),
    #[error("operation requires a finite prime field, not the rationals")]
    UnsupportedField,
    #[error("polynomial must be monic of degree at least 1 for this operation")]
    NotMonic,
    #[error("cannot parse `{text}` as a polynomial: {reason}")]
    ParsePolynomial { text: String, reason: String },
    #[error("cannot parse `{0}` as a field (expected `q` or `F<p>`)")]
    ParseField(String),
    #[error("division by zero")]
    DivisionByZero,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The coefficient field: exact rationals or a prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec, FieldError> {
        if p >= 1 << 31 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    /// Accepts `q`, `Q`, `rationals`, `F<p>` or a bare prime.
    pub fn parse(text: &str) -> Result<FieldSpec, FieldError> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t.strip_prefix(['F', 'f']).unwrap_or(t);
        let p: u64 = digits
            .parse()
            .map_err(|_| FieldError::ParseField(text.to_string()))?;
        FieldSpec::prime(p)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(u64::from(*p)),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    pub fn integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let p = i64::from(*p);
                Scalar::Mod((n.rem_euclid(p)) as u64)
            }
        }
    }

    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::Prime(_) => {
                let d = self.integer(den);
                self.div(&self.integer(num), &d)
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x + y)
            }
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod((x + y) % u64::from(*p))
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldSpec::Prime(p), Scalar::Mod(x)) => {
                let p = u64::from(*p);
                Scalar::Mod((p - x % p) % p)
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x * y)
            }
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(x * y % u64::from(*p))
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => {
                Ok(Scalar::Rational(x.recip()))
            }
            (FieldSpec::Prime(p), Scalar::Mod(x)) => {
                Ok(Scalar::Mod(mod_inverse(*x, u64::from(*p))))
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field element. `Mod` values are always reduced
/// representatives in `0..p` of their owning prime field.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Mod(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Mod(x) => *x == 1,
        }
    }

    /// True for rationals that print with a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_negative(),
            Scalar::Mod(_) => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(x.abs()),
            Scalar::Mod(x) => Scalar::Mod(*x),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::Mod(x) => write!(f, "{x}"),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid; p prime and a != 0 mod p
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} has no inverse mod {p}");
    t.rem_euclid(p as i128) as u64
}

/// A polynomial over a prime field, coefficients lowest degree first,
/// already reduced mod p with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn new(coeffs: &[u64], k: &FieldSpec) -> Result<Polynomial, FieldError> {
        let p = k.modulus().ok_or(FieldError::UnsupportedField)?;
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Ok(Polynomial { coeffs: c })
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn x(k: &FieldSpec) -> Result<Polynomial, FieldError> {
        Polynomial::new(&[0, 1], k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Constant term; relevant because `x | f` iff it vanishes.
    pub fn constant_term(&self) -> u64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    fn mul(&self, other: &Polynomial, p: u64) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        let mut poly = Polynomial { coeffs: out };
        poly.trim();
        poly
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Euclidean division by a monic divisor: returns (quotient, remainder).
    fn divmod_monic(&self, divisor: &Polynomial, p: u64) -> (Polynomial, Polynomial) {
        assert!(divisor.is_monic());
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            quot[i - d] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = i - d + j;
                rem[idx] = (rem[idx] + p - c * b % p) % p;
            }
        }
        rem.truncate(d);
        let mut q = Polynomial { coeffs: quot };
        q.trim();
        let mut r = Polynomial { coeffs: rem };
        r.trim();
        (q, r)
    }

    fn rem_monic(&self, divisor: &Polynomial, p: u64) -> Polynomial {
        self.divmod_monic(divisor, p).1
    }

    fn divides(&self, other: &Polynomial, p: u64) -> bool {
        other.rem_monic(self, p).is_zero()
    }

    fn scale(&self, c: u64, p: u64) -> Polynomial {
        let mut poly = Polynomial {
            coeffs: self.coeffs.iter().map(|&a| a * c % p).collect(),
        };
        poly.trim();
        poly
    }

    fn monic(&self, p: u64) -> Polynomial {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lead) => self.scale(mod_inverse(lead, p), p),
        }
    }

    fn sub(&self, other: &Polynomial, p: u64) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + p - b) % p;
        }
        let mut poly = Polynomial { coeffs: out };
        poly.trim();
        poly
    }

    fn gcd(&self, other: &Polynomial, p: u64) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem_monic(&b.monic(p), p);
            a = b;
            b = r;
        }
        a.monic(p)
    }

    /// x^(p^iterations) mod f, by repeated Frobenius powering.
    fn frobenius_power(f: &Polynomial, iterations: u32, p: u64) -> Polynomial {
        let x = Polynomial {
            coeffs: vec![0, 1],
        };
        let mut acc = x.rem_monic(f, p);
        for _ in 0..iterations {
            acc = poly_pow_mod(&acc, p, f, p);
        }
        acc
    }

    /// Canonical text form, highest power first: `x^3+x+1`, `2x+2`, `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            parts.push(part);
        }
        parts.join("+")
    }

    /// Parses `x^3+x+1` style text (also tolerates `2*x^2`, spaces, and
    /// `-` over the integers before reduction).
    pub fn parse(text: &str, k: &FieldSpec) -> Result<Polynomial, FieldError> {
        let p = k.modulus().ok_or(FieldError::UnsupportedField)? as i128;
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(FieldError::ParsePolynomial {
                text: text.to_string(),
                reason: "empty input".to_string(),
            });
        }
        let mut coeffs: Vec<i128> = Vec::new();
        let mut term = String::new();
        let mut sign: i128 = 1;
        let mut terms: Vec<(i128, String)> = Vec::new();
        for (i, ch) in cleaned.chars().enumerate() {
            match ch {
                '+' | '-' if i > 0 => {
                    terms.push((sign, std::mem::take(&mut term)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
                '-' => sign = -1,
                _ => term.push(ch),
            }
        }
        terms.push((sign, term));
        for (sign, term) in terms {
            let err = |reason: &str| FieldError::ParsePolynomial {
                text: text.to_string(),
                reason: reason.to_string(),
            };
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coeff_str, exp) = match term.find('x') {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let coeff = &term[..pos];
                    let rest = &term[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| err("expected `^` after x"))?
                            .parse::<usize>()
                            .map_err(|_| err("bad exponent"))?
                    };
                    (coeff.trim_end_matches('*'), exp)
                }
            };
            let coeff: i128 = if coeff_str.is_empty() {
                1
            } else {
                coeff_str.parse().map_err(|_| err("bad coefficient"))?
            };
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, 0);
            }
            coeffs[exp] += sign * coeff;
        }
        let reduced: Vec<u64> = coeffs.iter().map(|&c| c.rem_euclid(p) as u64).collect();
        Polynomial::new(&reduced, k)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn poly_pow_mod(base: &Polynomial, mut exp: u64, modulus: &Polynomial, p: u64) -> Polynomial {
    let mut result = Polynomial { coeffs: vec![1] };
    let mut base = base.rem_monic(modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result.mul(&base, p).rem_monic(modulus, p);
        }
        base = base.mul(&base, p).rem_monic(modulus, p);
        exp >>= 1;
    }
    result
}

/// All monic polynomials of exactly `degree` over F_p, in lexicographic
/// order of (highest power first) coefficient words.
fn monic_polynomials(p: u64, degree: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let count = p.pow(degree as u32);
    for code in 0..count {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut c = code;
        for _ in 0..degree {
            coeffs.push(c % p);
            c /= p;
        }
        coeffs.push(1);
        out.push(Polynomial { coeffs });
    }
    out.sort_by(|a, b| {
        let ka: Vec<u64> = a.coeffs.iter().rev().copied().collect();
        let kb: Vec<u64> = b.coeffs.iter().rev().copied().collect();
        ka.cmp(&kb)
    });
    out
}

/// Trial-division irreducibility for a monic polynomial of degree ≥ 1
/// over a prime field: no monic factor of degree in `1..=deg/2`.
pub fn is_irreducible(f: &Polynomial, k: &FieldSpec) -> Result<bool, FieldError> {
    let p = k.modulus().ok_or(FieldError::UnsupportedField)?;
    if !f.is_monic() || f.degree().unwrap_or(0) < 1 {
        return Err(FieldError::NotMonic);
    }
    let deg = f.degree().unwrap();
    for d in 1..=deg / 2 {
        for g in monic_polynomials(p, d) {
            if g.divides(f, p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rabin-style irreducibility via Frobenius powers and gcds. Must agree
/// with `is_irreducible`; kept as the fast cross-check route.
pub fn is_irreducible_fast(f: &Polynomial, k: &FieldSpec) -> Result<bool, FieldError> {
    let p = k.modulus().ok_or(FieldError::UnsupportedField)?;
    if !f.is_monic() || f.degree().unwrap_or(0) < 1 {
        return Err(FieldError::NotMonic);
    }
    let n = f.degree().unwrap() as u32;
    let x = Polynomial {
        coeffs: vec![0, 1],
    };
    // x^(p^n) must reduce to x mod f
    let xn = Polynomial::frobenius_power(f, n, p);
    if xn.sub(&x.rem_monic(f, p), p) != Polynomial::zero() {
        return Ok(false);
    }
    // and for every prime divisor q of n, gcd(x^(p^(n/q)) - x, f) = 1
    let mut m = n;
    let mut prime_divisors = Vec::new();
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            prime_divisors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        prime_divisors.push(m);
    }
    for q in prime_divisors {
        let xq = Polynomial::frobenius_power(f, n / q, p);
        let diff = xq.sub(&x.rem_monic(f, p), p);
        if diff.is_zero() {
            return Ok(false);
        }
        let g = f.gcd(&diff, p);
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Canonical representatives of the irreducibles of the Laurent ring
/// F_p[x, x⁻¹] up to `max_degree`: monic irreducibles of F_p[x] other
/// than `x` (a unit there), sorted by degree then lexicographically.
pub fn enumerate_laurent_irreducibles(
    k: &FieldSpec,
    max_degree: u32,
) -> Result<Vec<Polynomial>, FieldError> {
    let p = k.modulus().ok_or(FieldError::UnsupportedField)?;
    let mut out = Vec::new();
    for d in 1..=max_degree as usize {
        for f in monic_polynomials(p, d) {
            if d == 1 && f.constant_term() == 0 {
                continue; // that's x itself
            }
            if is_irreducible(&f, k)? {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// Number of monic irreducibles of exact degree `n` over F_p, by the
/// Möbius necklace formula (1/n)·Σ_{d|n} μ(d)·p^(n/d).
pub fn count_irreducibles(k: &FieldSpec, n: u32) -> Result<u64, FieldError> {
    let p = k.modulus().ok_or(FieldError::UnsupportedField)?;
    assert!(n >= 1, "degree must be at least 1");
    let mut total: i128 = 0;
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        total += i128::from(mu) * i128::from(p).pow(n / d);
    }
    debug_assert!(total > 0 && total % i128::from(n) == 0);
    Ok((total / i128::from(n)) as u64)
}

fn moebius(mut n: u32) -> i32 {
    let mut factors = 0;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            n /= q;
            if n % q == 0 {
                return 0; // squareful
            }
            factors += 1;
        }
        q += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2147483659).is_err()); // >= 2^31
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("F5").unwrap(), FieldSpec::Prime(5));
        assert_eq!(FieldSpec::parse("7").unwrap(), FieldSpec::Prime(7));
        assert!(FieldSpec::parse("F6").is_err());
    }

    #[test]
    fn scalar_arithmetic() {
        let q = FieldSpec::Rationals;
        let half = q.ratio(1, 2).unwrap();
        let third = q.ratio(1, 3).unwrap();
        let sum = q.add(&half, &third);
        assert_eq!(sum, q.ratio(5, 6).unwrap());
        assert_eq!(q.mul(&half, &q.integer(2)), q.one());

        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.integer(-1), Scalar::Mod(4));
        assert_eq!(f5.inv(&Scalar::Mod(2)).unwrap(), Scalar::Mod(3));
        assert!(f5.inv(&f5.zero()).is_err());
    }

    #[test]
    fn polynomial_text_round_trip() {
        let k = f2();
        let f = Polynomial::parse("x^3+x+1", &k).unwrap();
        assert_eq!(f.coefficients(), &[1, 1, 0, 1]);
        assert_eq!(f.to_text(), "x^3+x+1");
        let g = Polynomial::parse("x^2 + 2x + 2", &f3()).unwrap();
        assert_eq!(g.to_text(), "x^2+2x+2");
        // reduction happens at parse time
        let h = Polynomial::parse("2x^2+x", &k).unwrap();
        assert_eq!(h.to_text(), "x");
    }

    #[test]
    fn irreducibility_examples() {
        let k = f2();
        let f = Polynomial::parse("x^2+x+1", &k).unwrap();
        assert!(is_irreducible(&f, &k).unwrap());
        let g = Polynomial::parse("x^2+1", &k).unwrap(); // (x+1)^2
        assert!(!is_irreducible(&g, &k).unwrap());
        let x = Polynomial::x(&k).unwrap();
        assert!(is_irreducible(&x, &k).unwrap()); // irreducible in F2[x]...
        assert!(is_irreducible(&x, &FieldSpec::Rationals).is_err());
    }

    #[test]
    fn laurent_enumeration_f2_degree_3() {
        let k = f2();
        let irr = enumerate_laurent_irreducibles(&k, 3).unwrap();
        let texts: Vec<String> = irr.iter().map(Polynomial::to_text).collect();
        assert_eq!(texts, ["x+1", "x^2+x+1", "x^3+x+1", "x^3+x^2+1"]);
        assert_eq!(
            enumerate_laurent_irreducibles(&k, 1)
                .unwrap()
                .iter()
                .map(Polynomial::to_text)
                .collect::<Vec<_>>(),
            ["x+1"]
        );
        assert_eq!(
            enumerate_laurent_irreducibles(&f3(), 1)
                .unwrap()
                .iter()
                .map(Polynomial::to_text)
                .collect::<Vec<_>>(),
            ["x+1", "x+2"]
        );
    }

    #[test]
    fn necklace_counts() {
        let k = f2();
        assert_eq!(count_irreducibles(&k, 3).unwrap(), 2);
        assert_eq!(count_irreducibles(&k, 1).unwrap(), 2);
        assert_eq!(count_irreducibles(&f3(), 2).unwrap(), 3);
    }

    #[test]
    fn enumeration_matches_necklace_formula() {
        for p in [2u64, 3, 5] {
            let k = FieldSpec::prime(p).unwrap();
            let irr = enumerate_laurent_irreducibles(&k, 6).unwrap();
            for n in 1..=6u32 {
                let found = irr
                    .iter()
                    .filter(|f| f.degree() == Some(n as usize))
                    .count() as u64;
                let expected = count_irreducibles(&k, n).unwrap() - u64::from(n == 1);
                assert_eq!(found, expected, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn fast_irreducibility_agrees_with_trial_division() {
        for p in [2u64, 3, 5] {
            let k = FieldSpec::prime(p).unwrap();
            for d in 1..=4usize {
                for f in monic_polynomials(p, d) {
                    assert_eq!(
                        is_irreducible(&f, &k).unwrap(),
                        is_irreducible_fast(&f, &k).unwrap(),
                        "p={p} f={f}"
                    );
                }
            }
        }
    }
}
