//! Lowest-weight labels and the data attached to them: partitions and
//! bipartitions, contents, block scalars of central elements, inertia
//! twists, finite-dimensional tables and explicit Hecke representations.

pub mod findim;
pub mod reps;
pub mod twist;

use std::fmt;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::arith::laurent::MAX_VARS;
use crate::arith::{CycNumber, LaurentPoly, Ring};
use crate::coxeter::CoxType;
use crate::error::{Error, Result};
use crate::hecke::HeckeElt;
use crate::zelt::{linear_eval, type_b_closed_form};

pub use findim::{load_findim_table, parse_findim, type_d_reduce, FinDimRecord, FinDimTable};
pub use reps::{check_hecke_rep, reflection_rep, PluginRep, RepContext};
pub use twist::{parabolic_factors, twist_action};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&x| x > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    pub fn row(n: usize) -> Self {
        Partition(if n == 0 { vec![] } else { vec![n] })
    }

    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((0..m).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect())
    }

    /// (row, column) of every box, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Accepts "0", "-", "∅" for the empty partition, otherwise parts
    /// separated by '.' or ',' with optional exponents ("3^2.1").
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "0" || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(['.', ',']) {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e),
                None => (tok, "1"),
            };
            let b: usize = base.parse().map_err(|_| Error::Invalid(format!("bad partition part `{tok}`")))?;
            let e: usize = exp.parse().map_err(|_| Error::Invalid(format!("bad exponent in `{tok}`")))?;
            parts.extend(std::iter::repeat(b).take(e));
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            out.push(if j - i == 1 { self.0[i].to_string() } else { format!("{}^{}", self.0[i], j - i) });
            i = j;
        }
        write!(f, "{}", out.join("."))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn is_symmetric(&self) -> bool {
        self.first == self.second
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition { first: self.second.clone(), second: self.first.clone() }
    }

    /// Representative of the unordered pair, as used for type D.
    pub fn unordered(&self) -> Bipartition {
        if self.first >= self.second {
            self.clone()
        } else {
            self.swapped()
        }
    }

    /// "(3,1)" is ((3),(1)); "(0,3^2)" is (∅,(3,3)); nested "((2,1),(1))"
    /// is also accepted.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Invalid(format!("bipartition `{s}` must be parenthesized")))?;
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    if split.is_some() {
                        return Err(Error::Invalid(format!("bipartition `{s}` has more than two parts")));
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        let k = split.ok_or_else(|| Error::Invalid(format!("bipartition `{s}` needs two parts")))?;
        Ok(Bipartition { first: Partition::parse(&inner[..k])?, second: Partition::parse(&inner[k + 1..])? })
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Label of one irreducible factor of W'.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FactorLabel {
    Triv,
    Sign,
    /// reflection representation
    Refl,
    /// Galois conjugate of the reflection representation (types H, I)
    ReflConj,
    ExtSquare,
    Bip(Bipartition),
    /// exceptional character such as phi_{15,7}
    Named(String),
    /// explicit matrices supplied in a plugin file
    Plugin(String),
}

impl FactorLabel {
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_lowercase();
        Ok(match lower.as_str() {
            "triv" | "trivial" | "1" => FactorLabel::Triv,
            "sign" | "sgn" => FactorLabel::Sign,
            "v" | "refl" => FactorLabel::Refl,
            "vt" | "v~" | "ṽ" | "\\widetilde{v}" => FactorLabel::ReflConj,
            "l2v" | "λ²v" | "λ^2v" | "\\lambda^2v" | "ext2" => FactorLabel::ExtSquare,
            _ if t.starts_with('(') => FactorLabel::Bip(Bipartition::parse(t)?),
            _ if lower.starts_with("plugin:") => FactorLabel::Plugin(t[7..].trim().to_string()),
            _ => {
                let rest = ["\\varphi", "\\phi", "varphi", "phi", "φ"].iter().find_map(|p| lower.strip_prefix(p).map(|_| &t[p.len()..]));
                match rest {
                    Some(r) => {
                        let body: String = r.chars().filter(|c| !matches!(c, '_' | '{' | '}' | ' ')).collect();
                        if body.is_empty() {
                            return Err(Error::Invalid(format!("empty character name `{s}`")));
                        }
                        FactorLabel::Named(format!("phi_{{{body}}}"))
                    }
                    None => return Err(Error::Invalid(format!("unknown lowest weight `{s}`"))),
                }
            }
        })
    }

    pub fn is_linear(&self) -> bool {
        matches!(self, FactorLabel::Triv | FactorLabel::Sign)
    }

    /// Form used for comparisons within a component of the given type:
    /// linear characters and the reflection representation of types B and D
    /// become bipartitions, and type D bipartitions are unordered.
    pub fn canonical(&self, t: CoxType) -> FactorLabel {
        match (t, self) {
            (CoxType::B(n), FactorLabel::Triv) => FactorLabel::Bip(Bipartition::new(Partition::row(n), Partition::empty())),
            (CoxType::B(n), FactorLabel::Sign) => FactorLabel::Bip(Bipartition::new(Partition::empty(), Partition::column(n))),
            (CoxType::B(n), FactorLabel::Refl) if n >= 2 => {
                FactorLabel::Bip(Bipartition::new(Partition::row(n - 1), Partition::row(1)))
            }
            (CoxType::D(n), FactorLabel::Triv) => FactorLabel::Bip(Bipartition::new(Partition::row(n), Partition::empty())),
            (CoxType::D(n), FactorLabel::Sign) => FactorLabel::Bip(Bipartition::new(Partition::column(n), Partition::empty())),
            (CoxType::D(n), FactorLabel::Refl) => FactorLabel::Bip(Bipartition::new(Partition::row(n - 1), Partition::row(1))),
            (CoxType::D(_), FactorLabel::Bip(b)) => FactorLabel::Bip(b.unordered()),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for FactorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorLabel::Triv => write!(f, "triv"),
            FactorLabel::Sign => write!(f, "sign"),
            FactorLabel::Refl => write!(f, "V"),
            FactorLabel::ReflConj => write!(f, "Vt"),
            FactorLabel::ExtSquare => write!(f, "L2V"),
            FactorLabel::Bip(b) => write!(f, "{b}"),
            FactorLabel::Named(n) => write!(f, "{n}"),
            FactorLabel::Plugin(n) => write!(f, "plugin:{n}"),
        }
    }
}

/// λ as a list of factor labels, one per irreducible factor of W'.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LowestWeightLabel {
    pub factors: Vec<FactorLabel>,
}

impl LowestWeightLabel {
    pub fn new(factors: Vec<FactorLabel>) -> Self {
        LowestWeightLabel { factors }
    }

    pub fn triv() -> Self {
        LowestWeightLabel { factors: vec![FactorLabel::Triv] }
    }

    /// Factors separated by '⊗' or '*'.
    pub fn parse(s: &str) -> Result<Self> {
        let factors = s.split(['⊗', '*']).map(FactorLabel::parse).collect::<Result<Vec<_>>>()?;
        Ok(LowestWeightLabel { factors })
    }

    /// The factor list for a parabolic with `n` factors; a lone triv or
    /// sign is broadcast.
    pub fn resolve(&self, n: usize) -> Result<Vec<FactorLabel>> {
        if self.factors.len() == n {
            return Ok(self.factors.clone());
        }
        if self.factors.len() == 1 && self.factors[0].is_linear() {
            return Ok(vec![self.factors[0].clone(); n]);
        }
        Err(Error::Invalid(format!("label {self} has {} factors but the parabolic has {n}", self.factors.len())))
    }
}

impl fmt::Display for LowestWeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarSource {
    ContentFormula,
    LinearCharacter,
    ReflectionRep,
    PluginMatrix,
}

impl fmt::Display for ScalarSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ScalarSource::ContentFormula => "content-formula",
            ScalarSource::LinearCharacter => "linear-character",
            ScalarSource::ReflectionRep => "reflection-rep",
            ScalarSource::PluginMatrix => "plugin-matrix",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ScalarValue {
    Generic(LaurentPoly),
    Special(CycNumber),
}

/// The scalar by which a central element acts on a block.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockScalar {
    pub value: ScalarValue,
    pub source: ScalarSource,
}

impl BlockScalar {
    pub fn specialize(&self, assignment: &[(String, CycNumber)]) -> Result<CycNumber> {
        match &self.value {
            ScalarValue::Generic(p) => crate::arith::specialize(p, assignment),
            ScalarValue::Special(c) => Ok(c.clone()),
        }
    }
}

/// Which box coordinate difference enters the content q^{x−y}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContentOrientation {
    /// x = column, y = row
    Literal,
    /// x = row, y = column
    Transposed,
}

/// Fixed by [`calibrate`]: with triv = ((n),∅) and sign = (∅,(1ⁿ)) only
/// this orientation matches the linear-character evaluation.
pub const CALIBRATED_ORIENTATION: ContentOrientation = ContentOrientation::Transposed;

fn pq_vars() -> Arc<[String]> {
    LaurentPoly::vars_from(&["p", "q"])
}

fn pq_mono(a: i32, b: i32) -> LaurentPoly {
    let mut e = [0; MAX_VARS];
    e[0] = a;
    e[1] = b;
    LaurentPoly::monomial(&pq_vars(), e, CycNumber::one())
}

/// z_{p,q}(λ) = (1−p)qⁿ + (1−q)² qⁿ⁻¹ (Σ_{b∈λ¹} q^{e(b)} − p Σ_{b∈λ²} q^{e(b)}),
/// in the variables p, q.
pub fn content_scalar_with(lambda: &Bipartition, orientation: ContentOrientation) -> LaurentPoly {
    let n = lambda.size() as i32;
    let e = |(r, c): (usize, usize)| -> i32 {
        match orientation {
            ContentOrientation::Literal => c as i32 - r as i32,
            ContentOrientation::Transposed => r as i32 - c as i32,
        }
    };
    let mut sum = LaurentPoly::zero();
    for b in lambda.first.cells() {
        sum = sum.add(&pq_mono(0, e(b)));
    }
    for b in lambda.second.cells() {
        sum = sum.sub(&pq_mono(1, e(b)));
    }
    let one = LaurentPoly::one();
    let omq = one.sub(&pq_mono(0, 1));
    let head = one.sub(&pq_mono(1, 0)).mul(&pq_mono(0, n));
    head.add(&omq.mul(&omq).mul(&pq_mono(0, n - 1)).mul(&sum))
}

pub fn content_scalar(lambda: &Bipartition) -> BlockScalar {
    BlockScalar { value: ScalarValue::Generic(content_scalar_with(lambda, CALIBRATED_ORIENTATION)), source: ScalarSource::ContentFormula }
}

/// z_{p,q}(λ) at numeric p, q.
pub fn content_scalar_at(lambda: &Bipartition, p: &CycNumber, q: &CycNumber) -> Result<CycNumber> {
    crate::arith::specialize(&content_scalar_with(lambda, CALIBRATED_ORIENTATION), &[("p".into(), p.clone()), ("q".into(), q.clone())])
}

/// Evaluate z under the linear character with the given value on each
/// generator; every value must be 1 or −q_s.
pub fn linear_char_value<C: Ring>(z: &HeckeElt<C>, values: &[C]) -> Result<C> {
    let alg = z.algebra();
    if values.len() != alg.params().len() {
        return Err(Error::Invalid(format!("{} character values for {} generators", values.len(), alg.params().len())));
    }
    for (s, v) in values.iter().enumerate() {
        if !v.is_one() && *v != alg.param(s).neg() {
            return Err(Error::Invalid(format!("value {v} on generator {s} is neither 1 nor -q_s")));
        }
    }
    Ok(linear_eval(z, values))
}

/// Result of the content-orientation calibration.
#[derive(Clone, Debug)]
pub struct Calibration {
    pub orientation: ContentOrientation,
    pub checks: Vec<String>,
}

impl Calibration {
    pub fn describe(&self) -> String {
        format!(
            "content orientation {:?}: q^(row-col) per box; triv = ((n),0), sign = (0,(1^n)); T_s relation (T_s-1)(T_s+q_s)=0",
            self.orientation
        )
    }

    /// Short hash of the convention text, printed in output footers.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.describe().as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

/// Compare content_scalar with the evaluation of the type B closed form at
/// both linear characters for n = 1..=max_n and keep the orientation that
/// agrees everywhere.
pub fn calibrate(max_n: usize) -> Result<Calibration> {
    let mut passing = Vec::new();
    let mut checks = Vec::new();
    let mut cases = Vec::new();
    for n in 1..=max_n {
        let (sub, _, z) = type_b_closed_form(n)?;
        let triv: Vec<LaurentPoly> = vec![LaurentPoly::one(); n];
        let sign: Vec<LaurentPoly> = (0..n).map(|s| sub.param(s).neg()).collect();
        let tv = linear_char_value(&z, &triv)?;
        let sv = linear_char_value(&z, &sign)?;
        cases.push((n, Bipartition::new(Partition::row(n), Partition::empty()), tv));
        cases.push((n, Bipartition::new(Partition::empty(), Partition::column(n)), sv));
    }
    for o in [ContentOrientation::Literal, ContentOrientation::Transposed] {
        let ok = cases.iter().all(|(_, lam, v)| content_scalar_with(lam, o) == *v);
        checks.push(format!("{o:?}: {}", if ok { "agrees" } else { "disagrees" }));
        if ok {
            passing.push(o);
        }
    }
    match passing.as_slice() {
        [o] if *o == CALIBRATED_ORIENTATION => Ok(Calibration { orientation: *o, checks }),
        [o] => Err(Error::Invariant(format!("calibration selects {o:?}, but the built-in convention is {CALIBRATED_ORIENTATION:?}"))),
        [] => Err(Error::Invariant("no content orientation matches the linear characters".into())),
        _ => Err(Error::Invariant("content orientation is not determined by the linear characters".into())),
    }
}

/// The e-core, by sliding beads up on an e-runner abacus.
pub fn e_core(lambda: &Partition, e: usize) -> Result<Partition> {
    if e < 2 {
        return Err(Error::Invalid("e-core needs e >= 2".into()));
    }
    let k = lambda.0.len();
    let beta: Vec<usize> = lambda.0.iter().enumerate().map(|(i, &l)| l + k - 1 - i).collect();
    let mut per_runner = vec![0usize; e];
    for b in &beta {
        per_runner[b % e] += 1;
    }
    let mut nb: Vec<usize> = Vec::with_capacity(k);
    for (r, &cnt) in per_runner.iter().enumerate() {
        for j in 0..cnt {
            nb.push(r + j * e);
        }
    }
    nb.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<usize> = nb.iter().enumerate().map(|(i, &b)| b - (k - 1 - i)).collect();
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartition_parsing() {
        let b = Bipartition::parse("(3,1)").unwrap();
        assert_eq!(b, Bipartition::new(Partition::row(3), Partition::row(1)));
        let b = Bipartition::parse("(0,3^2)").unwrap();
        assert_eq!(b.second.parts(), &[3, 3]);
        assert!(b.first.is_empty());
        assert_eq!(b.to_string(), "(0,3^2)");
        let b = Bipartition::parse("((2,1),(1))").unwrap();
        assert_eq!(b.first.parts(), &[2, 1]);
        assert_eq!(b.to_string(), "(2.1,1)");
        assert_eq!(Bipartition::parse(&b.to_string()).unwrap(), b);
        assert!(Bipartition::parse("(1,2,3)").is_err());
        assert!(Bipartition::parse("(1.2,0)").is_err());
    }

    #[test]
    fn label_parsing() {
        let l = LowestWeightLabel::parse("(3,1)⊗triv").unwrap();
        assert_eq!(l.factors.len(), 2);
        assert_eq!(l.to_string(), "(3,1)⊗triv");
        assert_eq!(FactorLabel::parse("phi_{15,7}").unwrap(), FactorLabel::Named("phi_{15,7}".into()));
        assert_eq!(FactorLabel::parse("\\varphi_{21, 6}").unwrap(), FactorLabel::Named("phi_{21,6}".into()));
        assert_eq!(FactorLabel::parse("Ṽ").unwrap(), FactorLabel::ReflConj);
        assert_eq!(LowestWeightLabel::triv().resolve(3).unwrap().len(), 3);
        assert!(LowestWeightLabel::parse("V").unwrap().resolve(2).is_err());
        assert!(FactorLabel::parse("bogus").is_err());
    }

    #[test]
    fn single_box_contents() {
        let one = CycNumber::one();
        let p = pq_mono(1, 0);
        let q = pq_mono(0, 1);
        let omq = LaurentPoly::one().sub(&q);
        let a = content_scalar_with(&Bipartition::parse("(1,0)").unwrap(), CALIBRATED_ORIENTATION);
        assert_eq!(a, LaurentPoly::one().sub(&p).mul(&q).add(&omq.mul(&omq)));
        let b = content_scalar_with(&Bipartition::parse("(0,1)").unwrap(), CALIBRATED_ORIENTATION);
        assert_eq!(b, LaurentPoly::one().sub(&p).mul(&q).sub(&p.mul(&omq).mul(&omq)));
        let v = content_scalar_at(&Bipartition::parse("(1,0)").unwrap(), &one, &one).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn calibration_selects_transposed() {
        let c = calibrate(3).unwrap();
        assert_eq!(c.orientation, ContentOrientation::Transposed);
        assert_eq!(c.hash().len(), 16);
    }

    #[test]
    fn linear_char_validation() {
        let (sub, _, z) = type_b_closed_form(1).unwrap();
        assert!(linear_char_value(&z, &[LaurentPoly::from_i64(2)]).is_err());
        let v = linear_char_value(&sub.one(), &[LaurentPoly::one()]).unwrap();
        assert!(v.is_one());
    }

    fn hooks(p: &Partition) -> Vec<usize> {
        let conj = p.conjugate();
        p.cells().map(|(r, c)| p.parts()[r] - c + conj.parts()[c] - r - 1).collect()
    }

    fn residues(p: &Partition, e: usize) -> Vec<i64> {
        let mut v = vec![0i64; e];
        for (r, c) in p.cells() {
            v[(c as i64 - r as i64).rem_euclid(e as i64) as usize] += 1;
        }
        v
    }

    /// core: no hook divisible by e, and every residue loses the same count
    fn is_core_of(core: &Partition, p: &Partition, e: usize) -> bool {
        let (a, b) = (residues(p, e), residues(core, e));
        let d: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        hooks(core).iter().all(|h| h % e != 0) && d.iter().all(|&x| x == d[0] && x >= 0)
    }

    #[test]
    fn cores() {
        let p = |s: &str| Partition::parse(s).unwrap();
        // (2,1) is the 3-hook itself
        assert_eq!(e_core(&p("2.1"), 3).unwrap(), Partition::empty());
        assert_eq!(e_core(&p("2.1"), 2).unwrap(), p("2.1"));
        assert_eq!(e_core(&p("3"), 3).unwrap(), Partition::empty());
        assert_eq!(e_core(&Partition::empty(), 4).unwrap(), Partition::empty());
        assert_eq!(e_core(&p("4.1"), 2).unwrap(), p("2.1"));
        assert_eq!(e_core(&p("3.1^2"), 2).unwrap(), p("1"));
        assert!(e_core(&p("1"), 1).is_err());
    }

    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn cores_match_residue_oracle() {
        for n in 0..=10 {
            for parts in partitions(n, n) {
                let lam = Partition::new(parts).unwrap();
                for e in 2..=5 {
                    let c = e_core(&lam, e).unwrap();
                    assert!(is_core_of(&c, &lam, e), "{lam} e={e} -> {c}");
                    assert_eq!((lam.size() - c.size()) % e, 0);
                    assert_eq!(e_core(&c, e).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn conjugate_partition() {
        let p = Partition::parse("3.1").unwrap();
        assert_eq!(p.conjugate(), Partition::parse("2.1^2").unwrap());
    }
}
