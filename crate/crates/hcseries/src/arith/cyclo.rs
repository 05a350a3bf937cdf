//! Elements of cyclotomic fields Q(ζ_n), stored in the power basis
//! 1, ζ, ..., ζ^{φ(n)-1} with a common denominator.
//!
//! Arithmetic between elements of different conductors lifts both to the
//! lcm. Rational results collapse to conductor 1 immediately; full reduction
//! to the minimal conductor happens in [`CycNumber::reduce`], which equality,
//! hashing and text output go through.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Ring};
use crate::error::{Error, Result};

pub fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut res = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            res -= res / p;
        }
        p += 1;
    }
    if m > 1 {
        res -= res / m;
    }
    res as usize
}

pub(crate) fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

static PHI_CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();

/// Integer coefficients (low degree first) of the n-th cyclotomic polynomial.
pub fn phi_coeffs(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    let cache = PHI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = phi_coeffs(d);
            num = poly_exact_div(&num, &div);
        }
    }
    let v = Arc::new(num);
    cache.lock().unwrap().insert(n, v.clone());
    v
}

fn poly_exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db];
        q[k] = c;
        if c != 0 {
            for (i, bi) in b.iter().enumerate() {
                rem[k + i] -= c * bi;
            }
        }
    }
    debug_assert!(rem.iter().all(|x| *x == 0));
    q
}

fn reduce_mod_phi(poly: &mut Vec<BigInt>, n: u32) {
    let phi = phi_coeffs(n);
    let d = phi.len() - 1;
    if poly.len() > d {
        for k in (d..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[k]);
            for i in 0..d {
                if phi[i] != 0 {
                    poly[k - d + i] -= &c * phi[i];
                }
            }
        }
    }
    poly.resize(d, BigInt::zero());
}

#[derive(Clone)]
pub struct CycNumber {
    n: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNumber {
    fn from_parts(n: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(num.len(), euler_phi(n));
        if den.is_negative() {
            den = -den;
            for x in num.iter_mut() {
                *x = -&*x;
            }
        }
        let mut g = den.clone();
        for x in &num {
            if g.is_one() {
                break;
            }
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if !g.is_one() {
            for x in num.iter_mut() {
                *x = &*x / &g;
            }
            den /= &g;
        }
        if n > 1 && num[1..].iter().all(|x| x.is_zero()) {
            let c = num.swap_remove(0);
            return CycNumber { n: 1, num: vec![c], den };
        }
        CycNumber { n, num, den }
    }

    pub fn from_int(v: i64) -> Self {
        CycNumber { n: 1, num: vec![BigInt::from(v)], den: BigInt::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        CycNumber::from_parts(1, vec![r.numer().clone()], r.denom().clone())
    }

    pub fn from_frac(a: i64, b: i64) -> Self {
        assert!(b != 0);
        CycNumber::from_parts(1, vec![BigInt::from(a)], BigInt::from(b))
    }

    /// ζ_n^k with ζ_n = e^{2πi/n}.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![BigInt::zero(); k + 1];
        poly[k] = BigInt::one();
        reduce_mod_phi(&mut poly, n);
        CycNumber::from_parts(n, poly, BigInt::one())
    }

    pub fn zeta(n: u32) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// 2cos(2πk/n) as an element of Q(ζ_n).
    pub fn two_cos(n: u32, k: i64) -> Self {
        Self::zeta_pow(n, k).add(&Self::zeta_pow(n, -k))
    }

    /// Coordinates in the power basis of the current conductor.
    pub fn coords(&self) -> Vec<BigRational> {
        self.num.iter().map(|x| BigRational::new(x.clone(), self.den.clone())).collect()
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.n == 1 {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.n == 1 && self.den.is_one() {
            self.num[0].to_i64()
        } else {
            None
        }
    }

    fn lift_num(&self, m: u32) -> Vec<BigInt> {
        if m == self.n {
            return self.num.clone();
        }
        debug_assert_eq!(m % self.n, 0);
        let step = (m / self.n) as usize;
        let mut poly = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (j, c) in self.num.iter().enumerate() {
            poly[j * step] = c.clone();
        }
        reduce_mod_phi(&mut poly, m);
        poly
    }

    /// Same value, re-expressed over Q(ζ_m) for a multiple m of the conductor.
    pub fn lift(&self, m: u32) -> Self {
        assert_eq!(m % self.n, 0, "lift target must be a multiple of the conductor");
        CycNumber::from_parts(m, self.lift_num(m), self.den.clone())
    }

    fn scale(&self, r: &BigInt, d: &BigInt) -> Self {
        let num = self.num.iter().map(|x| x * r).collect();
        CycNumber::from_parts(self.n, num, &self.den * d)
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k (gcd(k, n) = 1).
    pub fn galois(&self, k: i64) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as i64;
        assert_eq!(k.gcd(&n), 1, "galois exponent must be coprime to the conductor");
        let mut poly = vec![BigInt::zero(); self.n as usize];
        for (j, c) in self.num.iter().enumerate() {
            let e = ((j as i64) * k).rem_euclid(n) as usize;
            poly[e] += c;
        }
        reduce_mod_phi(&mut poly, self.n);
        CycNumber::from_parts(self.n, poly, self.den.clone())
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Canonical form over the minimal conductor.
    pub fn reduce(&self) -> Self {
        let mut cur = self.clone();
        'outer: loop {
            let n = cur.n;
            if n == 1 {
                return cur;
            }
            if n % 4 == 2 {
                let m = n / 2;
                let half = ((m + 1) / 2) as usize;
                let mut poly = vec![BigInt::zero(); (m as usize).max(1)];
                for (j, c) in cur.num.iter().enumerate() {
                    let e = (j * half) % m as usize;
                    if j % 2 == 1 {
                        poly[e] -= c;
                    } else {
                        poly[e] += c;
                    }
                }
                reduce_mod_phi(&mut poly, m);
                cur = CycNumber::from_parts(m, poly, cur.den.clone());
                continue;
            }
            for l in prime_factors(n) {
                let m = n / l;
                if let Some(c) = cur.descend(m) {
                    cur = c;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Express self over Q(ζ_m) if it lies there.
    fn descend(&self, m: u32) -> Option<Self> {
        let dn = self.num.len();
        let dm = euler_phi(m);
        // columns: lifts of ζ_m^i
        let cols: Vec<Vec<BigInt>> = (0..dm)
            .map(|i| {
                let mut e = vec![BigInt::zero(); dm];
                e[i] = BigInt::one();
                CycNumber { n: m, num: e, den: BigInt::one() }.lift_num(self.n)
            })
            .collect();
        let mut mat: Vec<Vec<BigRational>> = (0..dn)
            .map(|r| {
                let mut row: Vec<BigRational> =
                    (0..dm).map(|c| BigRational::from_integer(cols[c][r].clone())).collect();
                row.push(BigRational::from_integer(self.num[r].clone()));
                row
            })
            .collect();
        let sol = solve_augmented(&mut mat, dm)?;
        let den = sol.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let num: Vec<BigInt> = sol.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        Some(CycNumber::from_parts(m, num, den * &self.den))
    }

    /// Image in F_P under ζ_n ↦ g^{(P-1)/n}, g a primitive root mod P.
    pub fn to_fp(&self, p: u64, g: u64) -> Option<u64> {
        let (pm1, n) = (p - 1, self.n as u64);
        if pm1 % n != 0 {
            return None;
        }
        let r = super::modp::pow_mod(g, pm1 / n, p);
        let pb = BigInt::from(p);
        let den = self.den.mod_floor(&pb).to_u64().unwrap();
        if den == 0 {
            return None;
        }
        let mut acc = 0u64;
        for c in self.num.iter().rev() {
            let cm = c.mod_floor(&pb).to_u64().unwrap();
            acc = ((acc as u128 * r as u128 + cm as u128) % p as u128) as u64;
        }
        let dinv = super::modp::pow_mod(den, p - 2, p);
        Some(((acc as u128 * dinv as u128) % p as u128) as u64)
    }

    /// Numerical value, for diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.num.iter().enumerate() {
            let t = 2.0 * std::f64::consts::PI * j as f64 / self.n as f64;
            let cf = c.to_f64().unwrap_or(f64::NAN) / d;
            re += cf * t.cos();
            im += cf * t.sin();
        }
        (re, im)
    }

    /// Multiplicative order if self is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let c = self.reduce();
        let bound = if c.n % 2 == 0 { c.n } else { 2 * c.n };
        let mut x = CycNumber::one();
        for k in 1..=bound {
            x = x.mul(&c);
            if x.is_one() {
                return Some(k);
            }
        }
        None
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse_cyc(s).map_err(|msg| Error::Invalid(format!("bad cyclotomic `{s}`: {msg}")))
    }
}

/// e^{-2πic}: the KZ parameter attached to c.
pub fn unit_root(c: &BigRational) -> CycNumber {
    let a = c.numer();
    let d = c.denom();
    let d32 = d.to_u32().expect("denominator too large for a cyclotomic conductor");
    let k = (-a).mod_floor(d).to_i64().unwrap();
    CycNumber::zeta_pow(d32, k)
}

/// Gaussian elimination on an augmented matrix with `nvars` unknowns.
/// Returns None if inconsistent; free variables are set to zero.
pub(crate) fn solve_augmented(mat: &mut [Vec<BigRational>], nvars: usize) -> Option<Vec<BigRational>> {
    let rows = mat.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nvars {
        let Some(pr) = (r..rows).find(|&i| !mat[i][c].is_zero()) else { continue };
        mat.swap(r, pr);
        let inv = mat[r][c].recip();
        for x in mat[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..=nvars {
                    let t = &mat[r][j] * &f;
                    mat[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if mat[r..].iter().any(|row| !row[nvars].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); nvars];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = mat[i][nvars].clone();
    }
    Some(sol)
}

impl Ring for CycNumber {
    fn zero() -> Self {
        CycNumber::from_int(0)
    }
    fn one() -> Self {
        CycNumber::from_int(1)
    }
    fn from_i64(v: i64) -> Self {
        CycNumber::from_int(v)
    }
    fn is_zero(&self) -> bool {
        self.n == 1 && self.num[0].is_zero()
    }
    fn is_one(&self) -> bool {
        self.n == 1 && self.num[0].is_one() && self.den.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let m = lcm(self.n, o.n);
        let a = self.lift_num(m);
        let b = o.lift_num(m);
        if self.den == o.den {
            let num = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
            return CycNumber::from_parts(m, num, self.den.clone());
        }
        let num = a.iter().zip(b.iter()).map(|(x, y)| x * &o.den + y * &self.den).collect();
        CycNumber::from_parts(m, num, &self.den * &o.den)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.n == 1 {
            return o.scale(&self.num[0], &self.den);
        }
        if o.n == 1 {
            return self.scale(&o.num[0], &o.den);
        }
        let m = lcm(self.n, o.n);
        let a = self.lift_num(m);
        let b = o.lift_num(m);
        let mut poly = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        reduce_mod_phi(&mut poly, m);
        CycNumber::from_parts(m, poly, &self.den * &o.den)
    }
    fn neg(&self) -> Self {
        CycNumber { n: self.n, num: self.num.iter().map(|x| -x).collect(), den: self.den.clone() }
    }
}

impl Field for CycNumber {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.n == 1 {
            return Some(CycNumber::from_parts(1, vec![self.den.clone()], self.num[0].clone()));
        }
        let d = self.num.len();
        let cols: Vec<Vec<BigInt>> = (0..d)
            .map(|i| self.mul(&CycNumber::zeta_pow(self.n, i as i64)).lift_num(self.n))
            .collect();
        // self * ζ^i has the same denominator as self
        let mut mat: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..d)
                    .map(|c| BigRational::new(cols[c][r].clone(), self.den.clone()))
                    .collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        let sol = solve_augmented(&mut mat, d)?;
        let den = sol.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let num = sol.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        Some(CycNumber::from_parts(self.n, num, den))
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, o: &Self) -> bool {
        if self.n == o.n {
            return self.den == o.den && self.num == o.num;
        }
        if self.n == 1 || o.n == 1 {
            return false;
        }
        let m = lcm(self.n, o.n);
        self.den == o.den && self.lift_num(m) == o.lift_num(m)
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let c = self.reduce();
        c.n.hash(state);
        c.num.hash(state);
        c.den.hash(state);
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_rat(num: &BigInt, den: &BigInt) -> String {
    if den.is_one() {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.reduce();
        if c.n == 1 {
            return write!(f, "{}", fmt_rat(&c.num[0], &c.den));
        }
        let mut out = String::new();
        for (j, x) in c.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let r = BigRational::new(x.clone(), c.den.clone());
            let neg = r.is_negative();
            let a = r.abs();
            if !out.is_empty() || neg {
                out.push(if neg { '-' } else { '+' });
            }
            let mono = match j {
                0 => String::new(),
                1 => format!("E({})", c.n),
                _ => format!("E({})^{}", c.n, j),
            };
            if mono.is_empty() {
                out.push_str(&fmt_rat(a.numer(), a.denom()));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&fmt_rat(a.numer(), a.denom()));
                out.push('*');
                out.push_str(&mono);
            }
        }
        write!(f, "{out}")
    }
}

fn parse_cyc(s: &str) -> std::result::Result<CycNumber, String> {
    let b: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if b.is_empty() {
        return Err("empty".into());
    }
    let mut i = 0;
    let mut acc = CycNumber::zero();
    while i < b.len() {
        let mut sign = 1i64;
        if b[i] == '+' || b[i] == '-' {
            if b[i] == '-' {
                sign = -1;
            }
            i += 1;
        }
        let mut coef = BigRational::one();
        let start = i;
        while i < b.len() && (b[i].is_ascii_digit() || b[i] == '/') {
            i += 1;
        }
        let had_coef = i > start;
        if had_coef {
            let t: String = b[start..i].iter().collect();
            coef = parse_rational(&t).ok_or_else(|| format!("bad rational `{t}`"))?;
            if i < b.len() && b[i] == '*' {
                i += 1;
            }
        }
        let mut term = CycNumber::from_rational(&coef);
        if i < b.len() && b[i] == 'E' {
            if b.get(i + 1) != Some(&'(') {
                return Err("expected `(` after E".into());
            }
            let close = (i..b.len()).find(|&k| b[k] == ')').ok_or("unclosed E(")?;
            let n: u32 = b[i + 2..close].iter().collect::<String>().parse().map_err(|_| "bad conductor")?;
            i = close + 1;
            let mut k = 1i64;
            if i < b.len() && b[i] == '^' {
                i += 1;
                let st = i;
                if i < b.len() && b[i] == '-' {
                    i += 1;
                }
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                k = b[st..i].iter().collect::<String>().parse().map_err(|_| "bad exponent")?;
            }
            if n == 0 {
                return Err("conductor 0".into());
            }
            term = term.mul(&CycNumber::zeta_pow(n, k));
        } else if !had_coef {
            return Err(format!("unexpected character at {i}"));
        }
        if sign < 0 {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

pub(crate) fn parse_rational(t: &str) -> Option<BigRational> {
    let t = t.trim();
    if let Some((a, b)) = t.split_once('/') {
        let a: BigInt = a.trim().parse().ok()?;
        let b: BigInt = b.trim().parse().ok()?;
        if b.is_zero() {
            return None;
        }
        Some(BigRational::new(a, b))
    } else {
        Some(BigRational::from_integer(t.parse().ok()?))
    }
}
