//! Exact arithmetic in cyclotomic fields `ℚ(ω_N)`, `ω_N = e^{2πi/N}`.
//!
//! An element is stored in the power basis `1, ω_N, …, ω_N^{φ(N)-1}` of its
//! smallest cyclotomic field; operands from different fields are lifted to
//! the field of the lcm conductor and the result is reduced again.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse cyclotomic number: {0}")]
    Parse(String),
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Integer coefficients of `Φ_N`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.as_ref().clone();
    }
    // x^n - 1 = Π_{d | n} Φ_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        num = exact_poly_div(&num, &phi_d);
    }
    cache.lock().unwrap().insert(n, Arc::new(num.clone()));
    num
}

fn exact_poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    debug_assert!(lead == 1);
    let qlen = rem.len() - dd;
    let mut q = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd] / lead;
        q[k] = c;
        for (i, &dc) in den.iter().enumerate() {
            rem[k + i] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Per-conductor data: `ω_N^e` in the power basis for every `0 ≤ e < N`.
struct FieldData {
    phi: usize,
    powers: Vec<Vec<i64>>,
}

fn field_data(n: u32) -> Arc<FieldData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().unwrap().get(&n) {
        return d.clone();
    }
    let phi_poly = cyclotomic_polynomial(n);
    let phi = phi_poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x and reduce with the monic Φ_N
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        for i in (1..phi).rev() {
            next[i] = cur[i - 1];
        }
        for i in 0..phi {
            next[i] -= top * phi_poly[i];
        }
        cur = next;
    }
    let data = Arc::new(FieldData { phi, powers });
    cache.lock().unwrap().insert(n, data.clone());
    data
}

/// Data for recognising elements of `ℚ(ω_N)` that lie in `ℚ(ω_d)`.
struct Descent {
    /// `lift[i]` = image of `ω_d^i` in the power basis of `ℚ(ω_N)`.
    lift: Vec<Vec<i64>>,
    /// Rows of the lift matrix that form an invertible square block.
    pivots: Vec<usize>,
    /// Inverse of that block.
    inverse: Vec<Vec<BigRational>>,
}

fn descent(n: u32, d: u32) -> Arc<Descent> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Descent>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(x) = cache.lock().unwrap().get(&(n, d)) {
        return x.clone();
    }
    let big = field_data(n);
    let phi_d = euler_phi(d) as usize;
    let step = n / d;
    let lift: Vec<Vec<i64>> = (0..phi_d)
        .map(|i| big.powers[(i as u32 * step % n) as usize].clone())
        .collect();
    // lift is phi_d columns of length phi_n; pick pivot rows greedily
    let rows = big.phi;
    let mut pivots = Vec::new();
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    for r in 0..rows {
        let row: Vec<BigRational> = (0..phi_d)
            .map(|c| BigRational::from_integer(BigInt::from(lift[c][r])))
            .collect();
        let mut candidate = basis.clone();
        candidate.push(row);
        if crate::linalg::rank_of_rows(&candidate) == candidate.len() {
            basis = candidate;
            pivots.push(r);
            if pivots.len() == phi_d {
                break;
            }
        }
    }
    let inverse = crate::linalg::invert_rational(&basis).expect("lift block is invertible");
    let out = Arc::new(Descent { lift, pivots, inverse });
    cache.lock().unwrap().insert((n, d), out.clone());
    out
}

/// An exact element of `ℚ(ω_N)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    /// Power-basis coordinates; empty for zero.
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            Cyclotomic::zero()
        } else {
            Cyclotomic {
                conductor: 1,
                coeffs: vec![q],
            }
        }
    }

    pub fn from_int(k: i64) -> Self {
        Cyclotomic::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        Cyclotomic::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `ω_N^k` for any integer `k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let data = field_data(n);
        let coeffs = data.powers[e]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Cyclotomic::canonical(n, coeffs)
    }

    /// Builds `Σ coeffs[i] ω_N^i` (any length; exponents are taken mod `N`).
    pub fn from_power_sum(n: u32, coeffs: &[BigRational]) -> Self {
        let data = field_data(n);
        let mut acc = vec![BigRational::zero(); data.phi];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, &p) in data.powers[i % n as usize].iter().enumerate() {
                if p != 0 {
                    acc[k] += c * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        Cyclotomic::canonical(n, acc)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coordinates in `ℚ(ω_conductor)`; empty for zero.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match (self.conductor, self.coeffs.len()) {
            (1, 0) => Some(BigRational::zero()),
            (1, 1) => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Reduces `coeffs` (length `φ(n)`) in `ℚ(ω_n)` to the smallest field.
    fn canonical(n: u32, coeffs: Vec<BigRational>) -> Self {
        if coeffs.iter().all(Zero::is_zero) {
            return Cyclotomic::zero();
        }
        if coeffs.iter().skip(1).all(Zero::is_zero) {
            return Cyclotomic::from_rational(coeffs[0].clone());
        }
        for d in divisors(n) {
            // ℚ(ω_d) = ℚ(ω_{d/2}) when d ≡ 2 mod 4, and d/2 comes first
            if d == 1 || d == n || d % 4 == 2 {
                continue;
            }
            if let Some(small) = Self::try_descend(n, d, &coeffs) {
                return Cyclotomic {
                    conductor: d,
                    coeffs: small,
                };
            }
        }
        Cyclotomic { conductor: n, coeffs }
    }

    fn try_descend(n: u32, d: u32, coeffs: &[BigRational]) -> Option<Vec<BigRational>> {
        let ds = descent(n, d);
        let rhs: Vec<&BigRational> = ds.pivots.iter().map(|&r| &coeffs[r]).collect();
        let sol: Vec<BigRational> = ds
            .inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&rhs)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * *b)
            })
            .collect();
        for (r, c) in coeffs.iter().enumerate() {
            let mut v = BigRational::zero();
            for (i, s) in sol.iter().enumerate() {
                let l = ds.lift[i][r];
                if l != 0 && !s.is_zero() {
                    v += s * BigRational::from_integer(BigInt::from(l));
                }
            }
            if &v != c {
                return None;
            }
        }
        Some(sol)
    }

    /// Coordinates of `self` in `ℚ(ω_m)`, where the conductor divides `m`.
    fn lifted(&self, m: u32) -> Vec<BigRational> {
        let data = field_data(m);
        let mut out = vec![BigRational::zero(); data.phi];
        let step = m / self.conductor;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as u32 * step % m) as usize;
            for (k, &p) in data.powers[e].iter().enumerate() {
                if p != 0 {
                    out[k] += c * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        out
    }

    fn common(a: &Self, b: &Self) -> u32 {
        a.conductor.lcm(&b.conductor)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.conductor == 1 && other.conductor == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] + &other.coeffs[0]);
        }
        let m = Self::common(self, other);
        let mut a = if self.conductor == m { self.coeffs.clone() } else { self.lifted(m) };
        let b = if other.conductor == m { other.coeffs.clone() } else { other.lifted(m) };
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        Cyclotomic::canonical(m, a)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        if self.conductor == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.conductor == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let m = Self::common(self, other);
        let a = if self.conductor == m { self.coeffs.clone() } else { self.lifted(m) };
        let b = if other.conductor == m { other.coeffs.clone() } else { other.lifted(m) };
        let mut prod = vec![BigRational::zero(); m as usize];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[(i + j) % m as usize] += x * y;
                }
            }
        }
        Cyclotomic::from_power_sum(m, &prod)
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// The Galois automorphism `ω ↦ ω^k` of `ℚ(ω_N)`, `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        let mut sum = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i as i64 * k).rem_euclid(n as i64) as usize;
            sum[e] += c;
        }
        Cyclotomic::from_power_sum(n, &sum)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Cyclotomic::from_rational(q.recip()));
        }
        // Solve x·y = 1 with the matrix of multiplication by x in the power basis.
        let n = self.conductor;
        let data = field_data(n);
        let phi = data.phi;
        let mut rows = vec![vec![BigRational::zero(); phi + 1]; phi];
        for j in 0..phi {
            for (i, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, &p) in data.powers[(i + j) % n as usize].iter().enumerate() {
                    if p != 0 {
                        rows[k][j] += c * BigRational::from_integer(BigInt::from(p));
                    }
                }
            }
        }
        rows[0][phi] = BigRational::one();
        // Clear denominators row by row, then fraction-free Gauss-Jordan:
        // every division is exact and the diagonal ends up equal to det.
        let mut m: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                let den = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter().map(|q| q.numer() * (&den / q.denom())).collect()
            })
            .collect();
        let mut prev = BigInt::one();
        for col in 0..phi {
            let pivot = (col..phi)
                .find(|&r| !m[r][col].is_zero())
                .expect("multiplication by a nonzero element is invertible");
            m.swap(col, pivot);
            let pivot_row = m[col].clone();
            let p = pivot_row[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == col {
                    continue;
                }
                let f = row[col].clone();
                for (x, q) in row.iter_mut().zip(&pivot_row) {
                    *x = (&p * &*x - &f * q) / &prev;
                }
            }
            prev = p;
        }
        let y = m.iter().enumerate().map(|(i, row)| BigRational::new(row[phi].clone(), row[i].clone())).collect();
        Ok(Cyclotomic::canonical(n, y))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycloError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().expect("negative power of zero").pow(-k);
        }
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order if `self` is a root of unity.
    pub fn order_of(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = (self.conductor as u64).lcm(&2);
        if !self.pow(bound as i64).is_one() {
            return None;
        }
        (1..=bound)
            .filter(|d| bound % d == 0)
            .find(|&d| self.pow(d as i64).is_one())
    }

    /// `(m, k)` with `self = ω_m^k`, `m` the order and `0 ≤ k < m` coprime to `m`.
    pub fn root_exponent(&self) -> Option<(u64, u64)> {
        let m = self.order_of()?;
        (0..m)
            .find(|&k| Cyclotomic::root_of_unity(m as u32, k as i64) == *self)
            .map(|k| (m, k))
    }

    /// Floating-point embedding with `ω_N = e^{2πi/N}`; display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let angle = std::f64::consts::TAU * i as f64 / n;
            (re + v * angle.cos(), im + v * angle.sin())
        })
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::one()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.add_ref(b));
binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.add_ref(&-b));
binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_ref(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_ref(&-rhs);
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.mul_ref(rhs);
    }
}

impl From<i64> for Cyclotomic {
    fn from(k: i64) -> Self {
        Cyclotomic::from_int(k)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// `0`, `-3/2`, `w(4)^1`, or a power-basis sum like `1 + 2*w(5)^1 - w(5)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{}", fmt_rational(&q));
        }
        if let Some((m, k)) = self.root_exponent() {
            return write!(f, "w({m})^{k}");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            let body = match (i, abs.is_one()) {
                (0, _) => fmt_rational(&abs),
                (_, true) => format!("w({})^{}", self.conductor, i),
                (_, false) => format!("{}*w({})^{}", fmt_rational(&abs), self.conductor, i),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Cyclotomic {
    type Err = CycloError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || CycloError::Parse(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // split into signed terms at top-level '+'/'-' (not inside "^-k")
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let chars: Vec<char> = compact.chars().collect();
        for (i, &ch) in chars.iter().enumerate() {
            let exponent_sign = i > 0 && chars[i - 1] == '^';
            if (ch == '+' || ch == '-') && !exponent_sign {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if i > 0 {
                    return Err(err());
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err());
        }
        terms.push((neg, cur));

        let mut total = Cyclotomic::zero();
        for (neg, term) in terms {
            let (coef, root) = match term.find("w(") {
                Some(0) => (BigRational::one(), Some(term.as_str())),
                Some(pos) => {
                    let c = term[..pos].strip_suffix('*').ok_or_else(err)?;
                    (parse_rational(c).ok_or_else(err)?, Some(&term[pos..]))
                }
                None => (parse_rational(&term).ok_or_else(err)?, None),
            };
            let value = match root {
                None => Cyclotomic::from_rational(coef),
                Some(r) => {
                    let inner = r.strip_prefix("w(").ok_or_else(err)?;
                    let close = inner.find(')').ok_or_else(err)?;
                    let n: u32 = inner[..close].parse().map_err(|_| err())?;
                    if n == 0 {
                        return Err(err());
                    }
                    let rest = &inner[close + 1..];
                    let k: i64 = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(err)?.parse().map_err(|_| err())?
                    };
                    Cyclotomic::root_of_unity(n, k).scale(&coef)
                }
            };
            total = if neg { total - value } else { total + value };
        }
        Ok(total)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().ok()?;
            let b: BigInt = b.parse().ok()?;
            if b.is_zero() {
                None
            } else {
                Some(BigRational::new(a, b))
            }
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(w(3, 1) + w(3, 2), Cyclotomic::from_int(-1));
        assert_eq!(w(4, 1) * w(4, 1), Cyclotomic::from_int(-1));
        for n in 1..=12u32 {
            for k in 0..n as i64 {
                assert_eq!(w(n, k).inv().unwrap(), w(n, n as i64 - k));
            }
        }
        assert_eq!(Cyclotomic::zero().inv(), Err(CycloError::DivisionByZero));
    }

    #[test]
    fn roots_of_unity() {
        assert!(w(1, 0).is_one());
        assert_eq!(w(2, 1), Cyclotomic::from_int(-1));
        let x = w(6, 2);
        assert_eq!(x.conductor(), 3);
        assert_eq!(x, w(3, 1));
        // ω₆ generates the same field as ω₃
        assert_eq!(w(6, 1).conductor(), 3);
        assert_eq!(w(12, 3), w(4, 1));
    }

    #[test]
    fn orders() {
        assert_eq!(Cyclotomic::from_int(-1).order_of(), Some(2));
        assert_eq!(w(3, 1).order_of(), Some(3));
        assert_eq!(Cyclotomic::from_int(2).order_of(), None);
        assert_eq!(w(6, 1).order_of(), Some(6));
        assert_eq!(-w(3, 1), w(6, 5));
        assert_eq!((w(4, 1) + Cyclotomic::one()).order_of(), None);
        assert_eq!(Cyclotomic::zero().order_of(), None);
    }

    #[test]
    fn roots_satisfy_their_polynomials() {
        for n in 1..=24u32 {
            assert!(w(n, n as i64).is_one());
            assert!(w(n, 1).pow(n as i64).is_one());
            let phi = cyclotomic_polynomial(n);
            assert_eq!(phi.len() as u32 - 1, euler_phi(n));
            let value = phi
                .iter()
                .enumerate()
                .fold(Cyclotomic::zero(), |acc, (i, &c)| acc + w(n, i as i64) * Cyclotomic::from_int(c));
            assert!(value.is_zero(), "Φ_{n}(ω_{n}) = {value}");
        }
    }

    #[test]
    fn text_round_trip() {
        let samples = [
            Cyclotomic::zero(),
            Cyclotomic::from_fraction(-3, 2),
            w(4, 1),
            w(3, 2),
            w(5, 1) + Cyclotomic::from_int(2) * w(5, 3),
            w(8, 1) - Cyclotomic::from_fraction(1, 3),
            w(12, 1) + w(4, 1),
        ];
        for x in samples {
            let text = x.to_string();
            assert_eq!(text.parse::<Cyclotomic>().unwrap(), x, "{text}");
        }
        assert_eq!(w(4, 1).to_string(), "w(4)^1");
        assert_eq!(Cyclotomic::from_int(-1).to_string(), "-1");
        assert_eq!("w(4)^-1".parse::<Cyclotomic>().unwrap(), w(4, 3));
        assert!("w(0)^1".parse::<Cyclotomic>().is_err());
        assert!("1 ++ 2".parse::<Cyclotomic>().is_err());
        assert!("1/0".parse::<Cyclotomic>().is_err());
    }

    #[test]
    fn canonical_form_is_unique() {
        // ω₈ + ω₈⁷ = √2 has conductor 8; ω₈ + ω₈³ = i√2 too; ω₁₂ + ω₁₂¹¹ = √3 has conductor 12
        let sqrt2 = w(8, 1) + w(8, 7);
        assert_eq!(sqrt2.conductor(), 8);
        assert_eq!(&sqrt2 * &sqrt2, Cyclotomic::from_int(2));
        let sqrt3 = w(12, 1) + w(12, 11);
        assert_eq!((&sqrt3 * &sqrt3), Cyclotomic::from_int(3));
        // computing in a bigger field and reducing gives the same value
        let lifted = Cyclotomic::from_power_sum(24, &[BigRational::zero(), BigRational::zero(), BigRational::one()]);
        assert_eq!(lifted, w(12, 1));
        assert_eq!(lifted.conductor(), 12);
    }

    #[test]
    fn galois_and_conjugation() {
        assert_eq!(w(5, 1).galois(2), w(5, 2));
        assert_eq!(w(4, 1).conj(), w(4, 3));
        let x = w(7, 1) + w(7, 3);
        assert!((&x * &x.conj()).to_complex().1.abs() < 1e-12);
    }
}
