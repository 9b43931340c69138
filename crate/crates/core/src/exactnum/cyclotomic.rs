use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{ToPrimitive, Zero};

use super::{signed_term, Rational};
use crate::error::{Error, Result};

/// An element of `Q(ζ_m)` in the power basis `1, ζ, …, ζ^{φ(m)-1}`, i.e.
/// reduced modulo the m-th cyclotomic polynomial. Two values are equal iff
/// their coefficient vectors are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

pub fn euler_phi(m: u32) -> u32 {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count() as u32
}

/// Coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    assert!(m >= 1);
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        poly = exact_div(&poly, &cyclotomic_polynomial(d));
    }
    let poly = Arc::new(poly);
    cache.lock().unwrap().insert(m, poly.clone());
    poly
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd] / lead;
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

impl Cyclotomic {
    /// Reduces an arbitrary coefficient vector on `ζ^0, ζ^1, …`.
    pub fn from_powers(order: u32, powers: &[Rational]) -> Self {
        let m = order as usize;
        let mut folded = vec![Rational::zero(); m];
        for (j, c) in powers.iter().enumerate() {
            folded[j % m] += c;
        }
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        for i in (deg..m).rev() {
            let c = std::mem::replace(&mut folded[i], Rational::zero());
            if c.is_zero() {
                continue;
            }
            // Φ is monic: x^i ≡ -Σ_{k<deg} φ_k x^{i-deg+k}.
            for (k, &pk) in phi.iter().take(deg).enumerate() {
                folded[i - deg + k] -= &c * Rational::from_integer(pk.into());
            }
        }
        folded.truncate(deg);
        Cyclotomic { order, coeffs: folded }
    }

    pub fn rational(order: u32, value: Rational) -> Self {
        Self::from_powers(order, &[value])
    }

    pub fn zero(order: u32) -> Self {
        Self::rational(order, Rational::zero())
    }

    pub fn one(order: u32) -> Self {
        Self::rational(order, Rational::from_integer(1.into()))
    }

    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// `ζ_m^k` for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let m = order as i64;
        let j = k.rem_euclid(m) as usize;
        let mut powers = vec![Rational::zero(); j + 1];
        powers[j] = Rational::from_integer(1.into());
        Self::from_powers(order, &powers)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cyclotomic { order: self.order, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Cyclotomic { order: self.order, coeffs })
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut prod = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Ok(Self::from_powers(self.order, &prod))
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.order as usize;
        let mut powers = vec![Rational::zero(); m];
        for (j, c) in self.coeffs.iter().enumerate() {
            powers[(m - j) % m] += c;
        }
        Self::from_powers(self.order, &powers)
    }

    /// Approximate complex value under `ζ ↦ exp(2πi/m)`. Display and test use only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.order as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * j as f64 / m;
            (re + c * t.cos(), im + c * t.sin())
        })
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = if j == 0 { String::new() } else { format!("zeta{}^{}", self.order, j) };
            signed_term(&mut out, c, &body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
