//! Exact Laurent polynomials, q-analogs and evaluation at roots of unity.
//!
//! A value `f(ξ^d)` with `ξ` a primitive `n`-th root of unity is kept as a
//! residue modulo the cyclotomic polynomial `Φ_o`, `o = n / gcd(n, d)`, in the
//! power basis of `Z[ζ_o]`. That basis is a Z-basis, so the value is a rational
//! integer exactly when the residue is constant.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use rayon::prelude::*;
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::charge;
use crate::error::{Error, Result};
use crate::scalar::Coeff;
use crate::shapes::{Composition, Partition, SkewShape};
use crate::tableaux::enumerate_ssyt;

/// Laurent polynomial in `q`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn q() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `coeffs[i]` is the coefficient of `q^i`.
    pub fn from_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(e as i64, C::of_i64(c));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `Σ q^e` over the given exponents.
    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        let mut hist: BTreeMap<i64, usize> = BTreeMap::new();
        for e in exps {
            *hist.entry(e).or_default() += 1;
        }
        Self::from_terms(hist.into_iter().map(|(e, c)| (e, C::of_usize(c))))
    }

    pub fn add_term(&mut self, e: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficients symmetric about the centre of the exponent range.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => self.terms.iter().all(|(&e, c)| self.coeff(lo + hi - e) == *c),
            _ => true,
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// The substitution `q ↦ 1/q`.
    pub fn invert(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// The substitution `q ↦ q^k` for `k ≥ 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect() }
    }

    pub fn eval_one(&self) -> C {
        self.terms.values().fold(C::zero(), |a, c| a + c.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient; fails when `div` does not divide `self`.
    pub fn div_exact(&self, div: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(div)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Long division by the leading term of `div`, both taken as polynomials
    /// after clearing the lowest exponents. Fails if a leading coefficient
    /// does not divide exactly.
    pub fn div_rem(&self, div: &Self) -> Result<(Self, Self)> {
        let (Some(dlo), Some(dhi)) = (div.min_exp(), div.max_exp()) else {
            return Err(Error::Invalid { what: "divisor", detail: "zero polynomial".into() });
        };
        let lead = div.coeff(dhi);
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some(hi) = rem.max_exp() {
            let lo = rem.min_exp().unwrap_or(hi);
            if hi - lo < dhi - dlo {
                break;
            }
            let c = rem.coeff(hi);
            let (qc, r) = c.div_rem(&lead);
            if !r.is_zero() {
                break;
            }
            let e = hi - dhi;
            quo.add_term(e, qc.clone());
            for (de, dc) in div.terms() {
                rem.add_term(de + e, -(qc.clone() * dc.clone()));
            }
        }
        Ok((quo, rem))
    }

    /// `f(ξ^d)` for `ξ` a primitive `n`-th root of unity.
    pub fn eval_at_root(&self, n: u64, d: i64) -> CycloValue<C> {
        let (o, step) = root_order(n, d);
        let mut folded = vec![C::zero(); o as usize];
        for (&e, c) in &self.terms {
            let k = (e as i128 * step as i128).rem_euclid(o as i128) as usize;
            folded[k] = folded[k].clone() + c.clone();
        }
        CycloValue::from_folded(o, folded)
    }

    /// Converts the coefficients into another ring.
    pub fn map_coeffs<D: Coeff>(&self) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, c)| {
            let v = c.to_i128().expect("coefficient does not fit");
            (e, D::from_i128(v).expect("coefficient does not fit"))
        }))
    }
}

/// Order `o` of `ξ^d` and the exponent `s` with `ξ^d = ζ_o^s`, `ζ_o = ξ^{n/o}`.
fn root_order(n: u64, d: i64) -> (u64, i64) {
    assert!(n >= 1, "root of unity order must be positive");
    let d = d.rem_euclid(n as i64) as u64;
    let g = n.gcd(&d);
    (n / g, (d / g) as i64)
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}*q^{e}")?;
        }
        Ok(())
    }
}

fn parse_coeff<C: Coeff>(s: &str) -> Result<C> {
    C::from_str_radix(s, 10).map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))
}

/// Accepts the canonical form as well as shorthand such as `1+q+2q^2-q^-1`.
impl<C: Coeff> FromStr for LaurentPoly<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        let mut prev = None;
        for ch in s.chars() {
            let split = match ch {
                '+' => true,
                '-' => !matches!(prev, None | Some('^') | Some('+')),
                _ => false,
            };
            if split {
                terms.push(std::mem::take(&mut cur));
            }
            if ch != '+' {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        terms.push(cur);
        let mut p = Self::zero();
        for t in terms {
            if t.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let (e, c) = parse_term::<C>(&t)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

fn parse_term<C: Coeff>(t: &str) -> Result<(i64, C)> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let (coef, exp) = match body.find('q') {
        None => (parse_coeff::<C>(body)?, 0),
        Some(i) => {
            let cpart = body[..i].trim_end_matches('*');
            let c = if cpart.is_empty() { C::one() } else { parse_coeff::<C>(cpart)? };
            let rest = &body[i + 1..];
            let e = if rest.is_empty() {
                1
            } else {
                let es = rest.strip_prefix('^').ok_or_else(|| Error::Parse(format!("bad term `{t}`")))?;
                es.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{t}`")))?
            };
            (c, e)
        }
    };
    Ok((exp, if neg { -coef } else { coef }))
}

fn coeff_json<C: Coeff>(c: &C) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

/// Serialised as a map from exponent (string key) to coefficient; the
/// coefficient is a JSON number when it fits in an `i64` and a string otherwise.
impl<C: Coeff> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &coeff_json(c))?;
        }
        map.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V<C>(std::marker::PhantomData<C>);
        impl<'de, C: Coeff> Visitor<'de> for V<C> {
            type Value = LaurentPoly<C>;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a map from exponents to integer coefficients")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut m: A) -> std::result::Result<Self::Value, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((k, v)) = m.next_entry::<String, serde_json::Value>()? {
                    let e: i64 = k.parse().map_err(de::Error::custom)?;
                    let c = match &v {
                        serde_json::Value::Number(n) => n.to_string(),
                        serde_json::Value::String(s) => s.clone(),
                        _ => return Err(de::Error::custom("coefficient must be an integer")),
                    };
                    p.add_term(e, parse_coeff::<C>(&c).map_err(de::Error::custom)?);
                }
                Ok(p)
            }
        }
        d.deserialize_map(V(std::marker::PhantomData))
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

macro_rules! by_value {
    ($ty:ident, $($tr:ident $m:ident),*) => {$(
        impl<C: Coeff> $tr for $ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: Self) -> $ty<C> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
by_value!(LaurentPoly, Add add, Sub sub, Mul mul);

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coeff> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

// ---------------------------------------------------------------------------
// Cyclotomic arithmetic

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, Vec<i64>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Dense coefficients of `Φ_n` (ascending), cached.
fn cyclotomic_dense(n: u64) -> Vec<i64> {
    if let Some(v) = cyclotomic_cache().lock().unwrap().get(&n) {
        return v.clone();
    }
    let p: LaurentPoly<i128> = cyclotomic(n);
    let deg = p.max_exp().unwrap_or(0) as usize;
    let v: Vec<i64> =
        (0..=deg).map(|e| i64::try_from(p.coeff(e as i64)).expect("cyclotomic coefficient overflow")).collect();
    cyclotomic_cache().lock().unwrap().insert(n, v.clone());
    v
}

/// The `n`-th cyclotomic polynomial, by dividing `q^n − 1` by `Φ_d` for the
/// proper divisors `d` of `n`.
pub fn cyclotomic<C: Coeff>(n: u64) -> LaurentPoly<C> {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    let mut p = LaurentPoly::from_terms([(n as i64, C::one()), (0, -C::one())]);
    for d in (1..n).filter(|d| n % d == 0) {
        p = p.div_exact(&cyclotomic(d)).expect("q^n - 1 is divisible by Φ_d");
    }
    p
}

/// An element of `Z[ζ_o]`, as a residue of degree below `φ(o)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloValue<C> {
    order: u64,
    residue: Vec<C>,
}

impl<C: Coeff> CycloValue<C> {
    fn from_folded(order: u64, mut v: Vec<C>) -> Self {
        let phi = cyclotomic_dense(order);
        let deg = phi.len() - 1;
        for i in (deg..v.len()).rev() {
            let c = v[i].clone();
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate() {
                let k = i - deg + j;
                v[k] = v[k].clone() - c.clone() * C::of_i64(pj);
            }
        }
        v.truncate(deg);
        v.resize(deg, C::zero());
        CycloValue { order, residue: v }
    }

    pub fn integer(order: u64, c: C) -> Self {
        let mut v = vec![C::zero(); cyclotomic_dense(order).len() - 1];
        v[0] = c;
        CycloValue { order, residue: v }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coordinates in the basis `1, ζ, …, ζ^{φ(o)−1}`.
    pub fn residue(&self) -> &[C] {
        &self.residue
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<C> {
        if self.residue[1..].iter().all(|c| c.is_zero()) {
            Some(self.residue[0].clone())
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.residue.iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "values live in different cyclotomic rings");
    }
}

impl<C: Coeff> fmt::Debug for CycloValue<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Integers print as themselves; other values as a polynomial in `z = ζ_o`.
impl<C: Coeff> fmt::Display for CycloValue<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_integer() {
            return write!(f, "{c}");
        }
        let p: LaurentPoly<C> =
            LaurentPoly::from_terms(self.residue.iter().cloned().enumerate().map(|(e, c)| (e as i64, c)));
        write!(f, "{}", p.to_string().replace('q', "z"))?;
        write!(f, " (z of order {})", self.order)
    }
}

impl<C: Coeff> Add for &CycloValue<C> {
    type Output = CycloValue<C>;
    fn add(self, rhs: Self) -> CycloValue<C> {
        self.check(rhs);
        let residue = self.residue.iter().zip(&rhs.residue).map(|(a, b)| a.clone() + b.clone()).collect();
        CycloValue { order: self.order, residue }
    }
}

impl<C: Coeff> Sub for &CycloValue<C> {
    type Output = CycloValue<C>;
    fn sub(self, rhs: Self) -> CycloValue<C> {
        self.check(rhs);
        let residue = self.residue.iter().zip(&rhs.residue).map(|(a, b)| a.clone() - b.clone()).collect();
        CycloValue { order: self.order, residue }
    }
}

impl<C: Coeff> Mul for &CycloValue<C> {
    type Output = CycloValue<C>;
    fn mul(self, rhs: Self) -> CycloValue<C> {
        self.check(rhs);
        let n = self.residue.len();
        let mut v = vec![C::zero(); (2 * n).saturating_sub(1).max(1)];
        for (i, a) in self.residue.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.residue.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        CycloValue::from_folded(self.order, v)
    }
}

by_value!(CycloValue, Add add, Sub sub, Mul mul);

// ---------------------------------------------------------------------------
// Bivariate polynomials

/// Polynomial in `q` and `t`, keyed by `(q-exponent, t-exponent)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly<C> {
    terms: BTreeMap<(i64, i64), C>,
}

impl<C: Coeff> BiPoly<C> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, e: (i64, i64), c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Embeds a polynomial in `q`.
    pub fn in_q(p: &LaurentPoly<C>) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((e, 0), c.clone())))
    }

    /// Embeds a polynomial in `q` as a polynomial in `t`.
    pub fn in_t(p: &LaurentPoly<C>) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((0, e), c.clone())))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: (i64, i64)) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval_one(&self) -> C {
        self.terms.values().fold(C::zero(), |a, c| a + c.clone())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `ψ(ξ^{d1}, ζ^{d2})` with `ξ`, `ζ` primitive `n1`-th and `n2`-th roots
    /// of unity, computed in `Z[ζ_L]` for `L` the lcm of the two orders.
    pub fn eval_at_roots(&self, n1: u64, d1: i64, n2: u64, d2: i64) -> CycloValue<C> {
        let (o1, s1) = root_order(n1, d1);
        let (o2, s2) = root_order(n2, d2);
        let l = o1.lcm(&o2);
        let (m1, m2) = ((l / o1) as i128 * s1 as i128, (l / o2) as i128 * s2 as i128);
        let mut folded = vec![C::zero(); l as usize];
        for (&(a, b), c) in &self.terms {
            let k = (a as i128 * m1 + b as i128 * m2).rem_euclid(l as i128) as usize;
            folded[k] = folded[k].clone() + c.clone();
        }
        CycloValue::from_folded(l, folded)
    }
}

impl<C: Coeff> fmt::Debug for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `c*q^a*t^b` terms joined by `+`, ordered by `(a, b)`.
impl<C: Coeff> fmt::Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}*q^{a}*t^{b}")?;
        }
        Ok(())
    }
}

/// Serialised as a map from `"a,b"` to coefficient.
impl<C: Coeff> Serialize for BiPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for ((a, b), c) in &self.terms {
            map.serialize_entry(&format!("{a},{b}"), &coeff_json(c))?;
        }
        map.end()
    }
}

impl<C: Coeff> Add for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: Self) -> BiPoly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: Self) -> BiPoly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Mul for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: Self) -> BiPoly<C> {
        let mut out = BiPoly::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term((a + c, b + d), x.clone() * y.clone());
            }
        }
        out
    }
}

by_value!(BiPoly, Add add, Sub sub, Mul mul);

// ---------------------------------------------------------------------------
// q-analogs

/// `[n]_q = 1 + q + … + q^{n−1}`.
pub fn q_int<C: Coeff>(n: usize) -> LaurentPoly<C> {
    LaurentPoly::from_terms((0..n as i64).map(|e| (e, C::one())))
}

pub fn q_factorial<C: Coeff>(n: usize) -> LaurentPoly<C> {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &q_int(k))
}

/// Gaussian binomial, via the q-Pascal rule; zero when `b > m`.
pub fn q_binomial<C: Coeff>(m: usize, b: usize) -> LaurentPoly<C> {
    if b > m {
        return LaurentPoly::zero();
    }
    // row[j] = [i choose j]_q for the current i
    let mut row: Vec<LaurentPoly<C>> = vec![LaurentPoly::one()];
    for i in 1..=m {
        let mut next = vec![LaurentPoly::one(); i + 1];
        for j in 1..i {
            next[j] = &row[j - 1] + &row[j].shift(j as i64);
        }
        row = next;
    }
    row.swap_remove(b)
}

/// `[n; k_1, …, k_r]_q` with `n = Σ k_i`.
pub fn q_multinomial<C: Coeff>(parts: &[usize]) -> LaurentPoly<C> {
    let mut total = 0;
    let mut out = LaurentPoly::one();
    for &k in parts {
        total += k;
        out = &out * &q_binomial(total, k);
    }
    out
}

fn content_partition(content: &Composition) -> Result<Partition> {
    if !content.is_partition() {
        return Err(Error::NonPartitionContent(content.parts().to_vec()));
    }
    Ok(content.sorted())
}

fn gf_over_ssyt<C, F>(shape: &SkewShape, content: &Composition, stat: F) -> Result<LaurentPoly<C>>
where
    C: Coeff,
    F: Fn(&crate::tableaux::Tableau) -> Result<usize> + Sync,
{
    content_partition(content)?;
    if shape.size() != content.size() {
        return Err(Error::ShapeMismatch(format!(
            "shape {shape} has {} cells but content {content} has size {}",
            shape.size(),
            content.size()
        )));
    }
    let tabs = enumerate_ssyt(shape, content);
    let exps: Vec<i64> = tabs.par_iter().map(|t| stat(t).map(|s| s as i64)).collect::<Result<_>>()?;
    Ok(LaurentPoly::from_exponents(exps))
}

/// Charge generating function `K_{λ/μ,ν}(q)` over semistandard tableaux.
pub fn kostka_foulkes<C: Coeff>(shape: &SkewShape, content: &Composition) -> Result<LaurentPoly<C>> {
    gf_over_ssyt(shape, content, charge::tableau_charge)
}

/// Cocharge generating function `K̃_{λ/μ,ν}(q)`.
pub fn modified_kf<C: Coeff>(shape: &SkewShape, content: &Composition) -> Result<LaurentPoly<C>> {
    gf_over_ssyt(shape, content, charge::tableau_cocharge)
}

/// `∏_{i≤a, j≤b} [i+j+n−1]_q / [i+j−1]_q`.
pub fn macmahon<C: Coeff>(a: usize, b: usize, n: usize) -> LaurentPoly<C> {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=a {
        for j in 1..=b {
            num = &num * &q_int(i + j + n - 1);
            den = &den * &q_int(i + j - 1);
        }
    }
    num.div_exact(&den).expect("MacMahon product is a polynomial")
}

/// `s_λ(1, q, …, q^{k−1})` as `Σ_T q^{Σ T − |λ|}` over tableaux with entries `≤ k`.
pub fn principal_specialization<C: Coeff>(lam: &Partition, k: usize) -> LaurentPoly<C> {
    let shape = SkewShape::straight(lam.clone());
    if k == 0 {
        return if lam.is_empty() { LaurentPoly::one() } else { LaurentPoly::zero() };
    }
    let mut out = LaurentPoly::zero();
    for c in Composition::all_weak(lam.size(), k) {
        let count = enumerate_ssyt(&shape, &c).len();
        let weight: usize = c.parts().iter().enumerate().map(|(i, &x)| i * x).sum();
        out.add_term(weight as i64, C::of_usize(count));
    }
    out
}
