//! Finite fields `GF(p^l)` in polynomial representation.
//!
//! An element is the residue class of a polynomial of degree `< l` over `Z_p`
//! modulo a monic irreducible polynomial. Elements are packed into an [`Elem`]
//! code `c_0 + c_1 p + ... + c_{l-1} p^{l-1}`, so that the code order is the
//! lexicographic order of the coefficient vector read from the top degree down.
//! In particular `0` and `1` are always the first two codes.
//!
//! Arithmetic is performed through the owning [`Gf`] handle, which keeps
//! lookup tables for small fields.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order accepted by [`Gf::new`].
pub const MAX_ORDER: u64 = 1 << 20;

/// Fields up to this order get full addition/multiplication tables.
const TABLE_ORDER: u32 = 256;

/// Packed field element. Only meaningful together with the [`Gf`] it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Position of the element in the canonical enumeration order.
    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

struct Inner {
    p: u32,
    degree: u32,
    q: u32,
    modulus: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    tables: Option<Tables>,
}

/// A validated finite field `F_q`, `q = p^l`. Cheap to clone.
#[derive(Clone)]
pub struct Gf(Arc<Inner>);

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Gf {}

impl Hash for Gf {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}; {:?})",
            self.0.p, self.0.degree, self.0.modulus
        )
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)?;
        if self.0.degree > 1 {
            write!(f, " = F_{}[x]/({})", self.0.p, format_poly(&self.0.modulus))?;
        }
        Ok(())
    }
}

fn format_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && i > 0 {
            String::new()
        } else {
            c.to_string()
        };
        terms.push(match i {
            0 => coef,
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{i}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q = p^l` into `(p, l)`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut l = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        l += 1;
    }
    (rest == 1).then_some((p, l))
}

// Dense polynomial helpers over Z_p, coefficients low degree first.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    // m is monic
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &mc) in m.iter().enumerate() {
            let sub = (lead as u64 * mc as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    out.into_iter().map(|c| c as u32).collect()
}

/// Monic polynomials of the given degree in lexicographic order of their
/// lower coefficients (compared low degree first).
fn monic_polys(p: u32, degree: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree);
    (0..count).map(move |mut k| {
        let mut c = Vec::with_capacity(degree as usize + 1);
        for _ in 0..degree {
            c.push((k % p as u64) as u32);
            k /= p as u64;
        }
        c.push(1);
        c
    })
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    let degree = modulus.len() as u32 - 1;
    if degree == 0 {
        return false;
    }
    for d in 1..=degree / 2 {
        for divisor in monic_polys(p, d) {
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn lex_low_to_high(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    a.cmp(b)
}

/// Lexicographically least (coefficients compared low to high) monic
/// irreducible polynomial of the given degree over `Z_p`.
pub fn default_modulus(p: u32, degree: u32) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for cand in monic_polys(p, degree) {
        if is_irreducible(p, &cand)
            && best
                .as_ref()
                .is_none_or(|b| lex_low_to_high(&cand, b) == std::cmp::Ordering::Less)
        {
            best = Some(cand);
        }
    }
    best.expect("irreducible polynomials exist in every degree")
}

impl Gf {
    /// Builds `GF(p^degree)`. Without a modulus the lexicographically least
    /// monic irreducible polynomial is used.
    pub fn new(p: u32, degree: u32, modulus: Option<Vec<u32>>) -> Result<Gf> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if degree == 0 {
            return Err(Error::DegreeMismatch {
                degree,
                modulus: modulus.unwrap_or_default(),
            });
        }
        let q = (p as u64).checked_pow(degree).unwrap_or(u64::MAX);
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != degree as usize + 1 || m.last() != Some(&1) {
                    return Err(Error::DegreeMismatch { degree, modulus: m });
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::DegreeMismatch { degree, modulus: m });
                }
                if !is_irreducible(p, &m) {
                    return Err(Error::ReducibleModulus(m));
                }
                m
            }
            None => default_modulus(p, degree),
        };
        let q = q as u32;
        let mut inner = Inner {
            p,
            degree,
            q,
            modulus,
            neg: Vec::new(),
            inv: Vec::new(),
            tables: None,
        };
        inner.neg = (0..q).map(|a| raw_neg(&inner, a)).collect();
        if q <= TABLE_ORDER {
            let mut add = vec![0; (q * q) as usize];
            let mut mul = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = raw_add(&inner, a, b);
                    mul[(a * q + b) as usize] = raw_mul(&inner, a, b);
                }
            }
            inner.tables = Some(Tables { add, mul });
        }
        let mut inv = vec![0; q as usize];
        for a in 1..q {
            // a^(q-2)
            inv[a as usize] = raw_pow(&inner, a, q as u64 - 2);
        }
        inner.inv = inv;
        Ok(Gf(Arc::new(inner)))
    }

    /// The prime field `Z_p`.
    pub fn prime(p: u32) -> Result<Gf> {
        Gf::new(p, 1, None)
    }

    /// Field of order `q` with the default modulus.
    pub fn of_order(q: u32) -> Result<Gf> {
        let (p, l) = prime_power(q).ok_or(Error::NonPrimeCharacteristic(q))?;
        Gf::new(p, l, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, low degree first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The class of `x` in an extension field; zero in a prime field.
    pub fn x(&self) -> Elem {
        if self.0.degree > 1 {
            Elem(self.0.p)
        } else {
            Elem::ZERO
        }
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.0 < self.0.q
    }

    /// Canonical enumeration: `0, 1, ...` in code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.0.q).map(Elem)
    }

    /// Nonzero elements in code order.
    pub fn units(&self) -> impl Iterator<Item = Elem> + '_ {
        (1..self.0.q).map(Elem)
    }

    pub fn elem_from_code(&self, code: u32) -> Option<Elem> {
        (code < self.0.q).then_some(Elem(code))
    }

    /// Image of an integer under `Z -> Z_p -> F_q`.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn coeffs(&self, e: Elem) -> Vec<u32> {
        decode(&self.0, e.0)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.degree as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::Parse(format!(
                "coefficients {coeffs:?} do not describe an element of {self}"
            )));
        }
        Ok(Elem(encode(&self.0, coeffs)))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.add[(a.0 * self.0.q + b.0) as usize]),
            None => Elem(raw_add(&self.0, a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.mul[(a.0 * self.0.q + b.0) as usize]),
            None => Elem(raw_mul(&self.0, a.0, b.0)),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (!a.is_zero()).then(|| Elem(self.0.inv[a.0 as usize]))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Parses the text form: a residue for prime fields, or coefficients
    /// low-to-high joined by `:` (e.g. `1:1` is `1 + x`). A bare integer is
    /// accepted in extension fields as the constant `n mod p`.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid scalar {s:?} for {self}"));
        if s.contains(':') {
            let coeffs = s
                .split(':')
                .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if coeffs.len() > self.0.degree as usize {
                return Err(bad());
            }
            self.from_coeffs(&coeffs).map_err(|_| bad())
        } else {
            let v: i64 = s.parse().map_err(|_| bad())?;
            if v < 0 || v >= self.0.p as i64 {
                return Err(bad());
            }
            Ok(Elem(v as u32))
        }
    }

    pub fn format_elem(&self, e: Elem) -> String {
        if self.0.degree == 1 {
            e.0.to_string()
        } else {
            self.coeffs(e)
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(":")
        }
    }

    pub fn scalar(&self, e: Elem) -> Scalar {
        Scalar {
            field: self.clone(),
            elem: e,
        }
    }
}

fn decode(f: &Inner, mut code: u32) -> Vec<u32> {
    let mut c = Vec::with_capacity(f.degree as usize);
    for _ in 0..f.degree {
        c.push(code % f.p);
        code /= f.p;
    }
    c
}

fn encode(f: &Inner, coeffs: &[u32]) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * f.p + c)
}

fn raw_add(f: &Inner, a: u32, b: u32) -> u32 {
    if f.degree == 1 {
        return (a + b) % f.p;
    }
    let (x, y) = (decode(f, a), decode(f, b));
    let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % f.p).collect();
    encode(f, &s)
}

fn raw_neg(f: &Inner, a: u32) -> u32 {
    let x = decode(f, a);
    let s: Vec<u32> = x.iter().map(|u| (f.p - u) % f.p).collect();
    encode(f, &s)
}

fn raw_mul(f: &Inner, a: u32, b: u32) -> u32 {
    if f.degree == 1 {
        return (a as u64 * b as u64 % f.p as u64) as u32;
    }
    let prod = poly_mul(&trim(decode(f, a)), &trim(decode(f, b)), f.p);
    let r = poly_rem(&prod, &f.modulus, f.p);
    encode(f, &r)
}

fn raw_pow(f: &Inner, a: u32, mut e: u64) -> u32 {
    let mut base = a;
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(f, acc, base);
        }
        base = raw_mul(f, base, base);
        e >>= 1;
    }
    acc
}

/// A field element bundled with its field, for checked standalone arithmetic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub field: Gf,
    pub elem: Elem,
}

impl Scalar {
    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.field.scalar(self.field.add(self.elem, other.elem)))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.field.scalar(self.field.mul(self.elem, other.elem)))
    }

    pub fn inv(&self) -> Result<Scalar> {
        self.field
            .inv(self.elem)
            .map(|e| self.field.scalar(e))
            .ok_or(Error::ZeroInverse)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_elem(self.elem))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_elem(self.elem))
    }
}

/// Serialized field presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u32,
    pub l: u32,
    pub modulus: Vec<u32>,
}

impl Gf {
    pub fn to_json(&self) -> FieldJson {
        FieldJson {
            p: self.characteristic(),
            l: self.degree(),
            modulus: self.modulus().to_vec(),
        }
    }

    pub fn from_json(j: &FieldJson) -> Result<Gf> {
        Gf::new(j.p, j.l, Some(j.modulus.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields_up_to_9() -> Vec<Gf> {
        [2, 3, 4, 5, 7, 8, 9]
            .iter()
            .map(|&q| Gf::of_order(q).unwrap())
            .collect()
    }

    #[test]
    fn construction_examples() {
        let f2 = Gf::new(2, 1, None).unwrap();
        assert_eq!(f2.order(), 2);
        assert_eq!(f2.modulus(), &[0, 1]);
        let f3 = Gf::new(3, 1, None).unwrap();
        assert_eq!(
            f3.elements().map(|e| e.code()).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        let f4 = Gf::new(2, 2, None).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn only_irreducible_quadratic_over_f2() {
        // trial division oracle: x^2, x^2+1 = (x+1)^2, x^2+x = x(x+1) are reducible
        let irreducible: Vec<_> = monic_polys(2, 2).filter(|m| is_irreducible(2, m)).collect();
        assert_eq!(irreducible, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Gf::new(4, 1, None).unwrap_err(),
            Error::NonPrimeCharacteristic(4)
        );
        assert!(matches!(
            Gf::new(2, 2, Some(vec![1, 0, 1])),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(matches!(
            Gf::new(2, 2, Some(vec![1, 1])),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            Gf::new(2, 2, Some(vec![1, 1, 2])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn small_examples() {
        let f2 = Gf::prime(2).unwrap();
        assert_eq!(f2.add(Elem::ONE, Elem::ONE), Elem::ZERO);
        let f3 = Gf::prime(3).unwrap();
        assert_eq!(f3.inv(Elem(2)), Some(Elem(2)));
        let f4 = Gf::new(2, 2, None).unwrap();
        let x = f4.x();
        // x^2 = x + 1 mod x^2 + x + 1
        assert_eq!(f4.coeffs(f4.mul(x, x)), vec![1, 1]);
        assert_eq!(f4.inv(Elem::ZERO), None);
    }

    #[test]
    fn enumeration_is_closed() {
        let f4 = Gf::of_order(4).unwrap();
        let all: Vec<_> = f4.elements().collect();
        assert_eq!(all.len(), 4);
        assert_eq!(all[0], Elem::ZERO);
        assert_eq!(all[1], Elem::ONE);
        for &a in &all {
            for &b in &all {
                assert!(all.contains(&f4.add(a, b)));
                assert!(all.contains(&f4.mul(a, b)));
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in fields_up_to_9() {
            let all: Vec<_> = f.elements().collect();
            for &a in &all {
                assert_eq!(f.pow(a, f.order() as u64), a, "Frobenius in {f}");
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                for &b in &all {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &all {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn untabled_path_agrees_with_tables() {
        let f = Gf::of_order(9).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(raw_mul(&f.0, a, b), f.mul(Elem(a), Elem(b)).0);
                assert_eq!(raw_add(&f.0, a, b), f.add(Elem(a), Elem(b)).0);
            }
        }
        // 3^6 = 729 > table limit
        let big = Gf::new(3, 6, None).unwrap();
        let x = big.x();
        assert_eq!(big.mul(x, big.inv(x).unwrap()), Elem::ONE);
        assert_eq!(big.pow(x, 729), x);
    }

    #[test]
    fn text_form() {
        let f4 = Gf::of_order(4).unwrap();
        let e = f4.parse_elem("1:1").unwrap();
        assert_eq!(f4.format_elem(e), "1:1");
        assert_eq!(f4.parse_elem("1").unwrap(), Elem::ONE);
        assert!(f4.parse_elem("2").is_err());
        assert!(f4.parse_elem("1:1:1").is_err());
        let f5 = Gf::prime(5).unwrap();
        assert_eq!(f5.format_elem(f5.parse_elem("4").unwrap()), "4");
        assert!(f5.parse_elem("5").is_err());
    }

    #[test]
    fn scalar_checks() {
        let f2 = Gf::prime(2).unwrap();
        let f3 = Gf::prime(3).unwrap();
        let a = f2.scalar(Elem::ONE);
        let b = f3.scalar(Elem::ONE);
        assert_eq!(a.add(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(f3.scalar(Elem::ZERO).inv().unwrap_err(), Error::ZeroInverse);
        assert_eq!(f3.scalar(Elem(2)).inv().unwrap().elem, Elem(2));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }
}
