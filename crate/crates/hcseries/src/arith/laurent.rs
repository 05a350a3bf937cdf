//! Sparse multivariate Laurent polynomials with cyclotomic coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::cyclo::CycNumber;
use super::{Field, Ring};
use crate::error::{Error, Result};

pub const MAX_VARS: usize = 4;
pub type Mono = [i32; MAX_VARS];

#[derive(Clone)]
pub struct LaurentPoly {
    vars: Arc<[String]>,
    terms: Vec<(Mono, CycNumber)>,
}

fn no_vars() -> Arc<[String]> {
    Arc::from(Vec::<String>::new())
}

impl LaurentPoly {
    pub fn constant(c: CycNumber) -> Self {
        let terms = if c.is_zero() { vec![] } else { vec![([0; MAX_VARS], c)] };
        LaurentPoly { vars: no_vars(), terms }
    }

    /// The monomial c·x^e over the given variables.
    pub fn monomial(vars: &Arc<[String]>, e: Mono, c: CycNumber) -> Self {
        assert!(vars.len() <= MAX_VARS);
        let terms = if c.is_zero() { vec![] } else { vec![(e, c)] };
        LaurentPoly { vars: vars.clone(), terms }
    }

    pub fn var(vars: &Arc<[String]>, i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Self::monomial(vars, e, CycNumber::one())
    }

    pub fn vars_from(names: &[&str]) -> Arc<[String]> {
        Arc::from(names.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> &[(Mono, CycNumber)] {
        &self.terms
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().all(|x| *x == 0))
    }

    pub fn constant_value(&self) -> Option<CycNumber> {
        if self.terms.is_empty() {
            return Some(CycNumber::zero());
        }
        if self.is_constant() {
            return Some(self.terms[0].1.clone());
        }
        None
    }

    /// Single-term polynomial: (exponent, coefficient).
    pub fn as_monomial(&self) -> Option<(Mono, CycNumber)> {
        if self.terms.len() == 1 {
            Some(self.terms[0].clone())
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    fn merged_vars(&self, o: &Self) -> Arc<[String]> {
        if self.vars.is_empty() {
            return o.vars.clone();
        }
        if o.vars.is_empty() || Arc::ptr_eq(&self.vars, &o.vars) || self.vars == o.vars {
            return self.vars.clone();
        }
        panic!("Laurent polynomials over different variable sets: {:?} vs {:?}", self.vars, o.vars);
    }

    fn from_map(vars: Arc<[String]>, m: BTreeMap<Mono, CycNumber>) -> Self {
        let terms = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly { vars, terms }
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        if c.is_zero() {
            return LaurentPoly { vars: self.vars.clone(), terms: vec![] };
        }
        let terms = self.terms.iter().map(|(e, x)| (*e, x.mul(c))).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn shift(&self, e: &Mono) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(f, x)| {
                let mut g = *f;
                for i in 0..MAX_VARS {
                    g[i] += e[i];
                }
                (g, x.clone())
            })
            .collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Inverse of a unit (monomial with invertible coefficient).
    pub fn inv_unit(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        let mut ne = e;
        for x in ne.iter_mut() {
            *x = -*x;
        }
        Some(LaurentPoly::monomial(&self.vars, ne, c.inv()?))
    }

    /// Substitute x_i ↦ x_i^{-1} for every variable.
    pub fn bar_vars(&self) -> Self {
        let mut m = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = *e;
            for x in f.iter_mut() {
                *x = -*x;
            }
            m.insert(f, c.clone());
        }
        LaurentPoly::from_map(self.vars.clone(), m)
    }

    /// Partial substitution: variables with an assigned value are replaced by
    /// that value; the rest remain symbolic.
    pub fn substitute(&self, assignment: &[Option<CycNumber>]) -> Result<Self> {
        let mut m: BTreeMap<Mono, CycNumber> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut f = *e;
            for (i, v) in assignment.iter().enumerate() {
                if let Some(v) = v {
                    if e[i] != 0 {
                        let base = if e[i] < 0 {
                            v.inv().ok_or_else(|| {
                                Error::Invalid(format!("zero assigned to `{}` with negative exponent", self.vars[i]))
                            })?
                        } else {
                            v.clone()
                        };
                        coeff = coeff.mul(&base.pow(e[i].unsigned_abs() as u64));
                    }
                    f[i] = 0;
                }
            }
            let slot = m.entry(f).or_insert_with(CycNumber::zero);
            *slot = slot.add(&coeff);
        }
        Ok(LaurentPoly::from_map(self.vars.clone(), m))
    }

    pub fn parse(s: &str, vars: &Arc<[String]>) -> Result<Self> {
        parse_laurent(s, vars).map_err(|m| Error::Invalid(format!("bad Laurent polynomial `{s}`: {m}")))
    }

    pub fn total_degree_range(&self) -> Option<(i32, i32)> {
        let degs = self.terms.iter().map(|(e, _)| e.iter().sum::<i32>());
        let lo = degs.clone().min()?;
        Some((lo, degs.max()?))
    }
}

/// Evaluate a Laurent polynomial at nonzero cyclotomic values of every variable.
pub fn specialize(poly: &LaurentPoly, assignment: &[(String, CycNumber)]) -> Result<CycNumber> {
    let mut vals = vec![None; poly.vars.len()];
    for (name, v) in assignment {
        if let Some(i) = poly.vars.iter().position(|x| x == name) {
            vals[i] = Some(v.clone());
        }
    }
    for (e, _) in &poly.terms {
        for (i, x) in e.iter().enumerate().take(poly.vars.len()) {
            if *x != 0 && vals[i].is_none() {
                return Err(Error::Invalid(format!("variable `{}` is unassigned", poly.vars[i])));
            }
        }
    }
    let r = poly.substitute(&vals)?;
    Ok(r.constant_value().expect("all variables substituted"))
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { vars: no_vars(), terms: vec![] }
    }
    fn one() -> Self {
        LaurentPoly::constant(CycNumber::one())
    }
    fn from_i64(v: i64) -> Self {
        LaurentPoly::constant(CycNumber::from_int(v))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; MAX_VARS] && self.terms[0].1.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        let vars = self.merged_vars(o);
        let (mut i, mut j) = (0, 0);
        let mut terms = Vec::with_capacity(self.terms.len() + o.terms.len());
        while i < self.terms.len() || j < o.terms.len() {
            if j == o.terms.len() || (i < self.terms.len() && self.terms[i].0 < o.terms[j].0) {
                terms.push(self.terms[i].clone());
                i += 1;
            } else if i == self.terms.len() || o.terms[j].0 < self.terms[i].0 {
                terms.push(o.terms[j].clone());
                j += 1;
            } else {
                let c = self.terms[i].1.add(&o.terms[j].1);
                if !c.is_zero() {
                    terms.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        LaurentPoly { vars, terms }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let vars = self.merged_vars(o);
        if self.terms.is_empty() || o.terms.is_empty() {
            return LaurentPoly { vars, terms: vec![] };
        }
        let mut m: BTreeMap<Mono, CycNumber> = BTreeMap::new();
        for (e, a) in &self.terms {
            for (f, b) in &o.terms {
                let mut g = *e;
                for k in 0..MAX_VARS {
                    g[k] += f[k];
                }
                let p = a.mul(b);
                match m.get_mut(&g) {
                    Some(slot) => *slot = slot.add(&p),
                    None => {
                        m.insert(g, p);
                    }
                }
            }
        }
        LaurentPoly::from_map(vars, m)
    }
    fn neg(&self) -> Self {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, o: &Self) -> bool {
        if self.terms != o.terms {
            return false;
        }
        self.vars == o.vars || self.is_constant() || self.vars.is_empty() || o.vars.is_empty()
    }
}

impl Eq for LaurentPoly {}

impl std::hash::Hash for LaurentPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn mono_text(vars: &[String], e: &Mono) -> String {
    let mut parts = Vec::new();
    for (i, x) in e.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        let name = vars.get(i).map(|s| s.as_str()).unwrap_or("?");
        if *x == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{name}^{x}"));
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // ascending total degree, then exponent order
        let mut ts: Vec<&(Mono, CycNumber)> = self.terms.iter().collect();
        ts.sort_by_key(|(e, _)| (e.iter().sum::<i32>(), *e));
        let mut out = String::new();
        for (e, c) in ts {
            let mono = mono_text(&self.vars, e);
            let cr = c.to_rational();
            let (neg, body) = match &cr {
                Some(r) => {
                    let neg = r < &num_rational::BigRational::from_integer(0.into());
                    let a = if neg { -r.clone() } else { r.clone() };
                    let a1 = a == num_rational::BigRational::from_integer(1.into());
                    let at = CycNumber::from_rational(&a).to_string();
                    let body = if mono.is_empty() {
                        at
                    } else if a1 {
                        mono.clone()
                    } else {
                        format!("{at}*{mono}")
                    };
                    (neg, body)
                }
                None => {
                    let body =
                        if mono.is_empty() { format!("({c})") } else { format!("({c})*{mono}") };
                    (false, body)
                }
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            out.push_str(&body);
        }
        write!(f, "{out}")
    }
}

fn parse_laurent(s: &str, vars: &Arc<[String]>) -> std::result::Result<LaurentPoly, String> {
    let b: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if b.is_empty() {
        return Err("empty".into());
    }
    if b == ['0'] {
        return Ok(LaurentPoly { vars: vars.clone(), terms: vec![] });
    }
    let mut acc = LaurentPoly { vars: vars.clone(), terms: vec![] };
    let mut i = 0;
    while i < b.len() {
        let mut neg = false;
        if b[i] == '+' || b[i] == '-' {
            neg = b[i] == '-';
            i += 1;
        }
        let mut coef = CycNumber::one();
        let mut e = [0i32; MAX_VARS];
        let mut first = true;
        loop {
            if i >= b.len() {
                if first {
                    return Err("dangling sign".into());
                }
                break;
            }
            if b[i] == '(' {
                let mut depth = 0;
                let mut k = i;
                loop {
                    if k >= b.len() {
                        return Err("unbalanced parenthesis".into());
                    }
                    if b[k] == '(' {
                        depth += 1;
                    }
                    if b[k] == ')' {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    k += 1;
                }
                let inner: String = b[i + 1..k].iter().collect();
                coef = coef.mul(&CycNumber::parse(&inner).map_err(|e| e.to_string())?);
                i = k + 1;
            } else if b[i].is_ascii_digit() {
                let st = i;
                while i < b.len() && (b[i].is_ascii_digit() || b[i] == '/') {
                    i += 1;
                }
                let t: String = b[st..i].iter().collect();
                let r = super::cyclo::parse_rational(&t).ok_or("bad rational")?;
                coef = coef.mul(&CycNumber::from_rational(&r));
            } else if b[i].is_alphabetic() {
                let st = i;
                while i < b.len() && (b[i].is_alphanumeric() || b[i] == '_' || b[i] == '\'') {
                    i += 1;
                }
                let name: String = b[st..i].iter().collect();
                let vi = vars.iter().position(|v| *v == name).ok_or(format!("unknown variable `{name}`"))?;
                let mut x = 1i32;
                if i < b.len() && b[i] == '^' {
                    i += 1;
                    let st = i;
                    if i < b.len() && b[i] == '-' {
                        i += 1;
                    }
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    x = b[st..i].iter().collect::<String>().parse().map_err(|_| "bad exponent")?;
                }
                e[vi] += x;
            } else {
                return Err(format!("unexpected `{}`", b[i]));
            }
            first = false;
            if i < b.len() && b[i] == '*' {
                i += 1;
                continue;
            }
            break;
        }
        if neg {
            coef = coef.neg();
        }
        acc = acc.add(&LaurentPoly::monomial(vars, e, coef));
    }
    Ok(acc)
}
