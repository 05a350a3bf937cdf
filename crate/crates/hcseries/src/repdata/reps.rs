//! Explicit matrix representations of Hecke algebras of irreducible factors.
//!
//! Matrices act on row vectors: row i of the matrix of T_s is the image of
//! the basis vector e_i.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use crate::arith::linalg::Matrix;
use crate::arith::{specialize, CycNumber, LaurentPoly, Ring};
use crate::coxeter::CoxType;
use crate::error::{Error, Result};
use crate::zelt::{mat_mul, word_action};

use super::{FactorLabel, ScalarSource};

fn identity<C: Ring>(n: usize) -> Matrix<C> {
    (0..n).map(|i| (0..n).map(|k| if i == k { C::one() } else { C::zero() }).collect()).collect()
}

/// Reflection representation of H(W) for an irreducible type, at node
/// parameters `params` (standard node order): T_s e_s = −q_s e_s and
/// T_s e_t = e_t + c_st e_s, with c_st c_ts = 4cos²(kπ/m) q for edges inside
/// a class and q_s + q_t for the m = 4 edges joining two classes. `conj`
/// selects 2cos(3π/5) on edges of order 5.
pub fn reflection_rep(t: CoxType, params: &[CycNumber], conj: bool) -> Result<Vec<Matrix<CycNumber>>> {
    let r = t.rank();
    if params.len() != r {
        return Err(Error::Invalid(format!("{t} needs {r} node parameters")));
    }
    if conj && !matches!(t, CoxType::H(_) | CoxType::I2(_)) {
        return Err(Error::Invalid(format!("{t} has no Galois conjugate reflection representation")));
    }
    let (cls, _) = t.classes();
    let mut c = vec![vec![CycNumber::zero(); r]; r];
    for (a, b, m) in t.edges() {
        let prod = if cls[a] == cls[b] {
            let k = if conj && m == 5 { 3 } else { 1 };
            let tc = CycNumber::two_cos(2 * m, k);
            tc.mul(&tc).mul(&params[a])
        } else if m == 4 {
            params[a].add(&params[b])
        } else {
            return Err(Error::NoStrategy(format!("reflection representation of {t} with unequal parameters on an edge of order {m}")));
        };
        let (s, u) = (a.min(b), a.max(b));
        c[s][u] = prod;
        c[u][s] = CycNumber::one();
    }
    let mut gens = Vec::with_capacity(r);
    for s in 0..r {
        let mut m: Matrix<CycNumber> = identity(r);
        m[s][s] = params[s].neg();
        for u in 0..r {
            if u != s {
                m[u][s] = c[s][u].clone();
            }
        }
        gens.push(m);
    }
    check_hecke_rep(t, params, &gens)?;
    Ok(gens)
}

/// Second exterior power of a representation whose generators have
/// eigenvalues 1 and −q_s only.
pub fn exterior_square(gens: &[Matrix<CycNumber>]) -> Vec<Matrix<CycNumber>> {
    let n = gens.first().map_or(0, |g| g.len());
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    gens.iter()
        .map(|a| {
            pairs
                .iter()
                .map(|&(i, j)| pairs.iter().map(|&(k, l)| a[i][k].mul(&a[j][l]).sub(&a[i][l].mul(&a[j][k]))).collect())
                .collect()
        })
        .collect()
}

/// Check the quadratic and braid relations of H(W) for the given matrices.
pub fn check_hecke_rep(t: CoxType, params: &[CycNumber], gens: &[Matrix<CycNumber>]) -> Result<()> {
    let r = t.rank();
    if gens.len() != r || params.len() != r {
        return Err(Error::Data(format!("{t} needs {r} generator matrices")));
    }
    let dim = gens[0].len();
    if gens.iter().any(|g| g.len() != dim || g.iter().any(|row| row.len() != dim)) {
        return Err(Error::Data("generator matrices are not square of one size".into()));
    }
    let id: Matrix<CycNumber> = identity(dim);
    for (s, g) in gens.iter().enumerate() {
        // (T − 1)(T + q) = 0
        let a: Matrix<CycNumber> = g.iter().zip(&id).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u.sub(v)).collect()).collect();
        let b: Matrix<CycNumber> = g.iter().zip(&id).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u.add(&v.mul(&params[s]))).collect()).collect();
        if mat_mul(&a, &b).iter().flatten().any(|x| !x.is_zero()) {
            return Err(Error::Data(format!("generator {} violates the quadratic relation", s + 1)));
        }
    }
    let m = t.coxeter_matrix();
    for s in 0..r {
        for u in s + 1..r {
            let len = m[s][u] as usize;
            let w1: Vec<usize> = (0..len).map(|k| if k % 2 == 0 { s } else { u }).collect();
            let w2: Vec<usize> = (0..len).map(|k| if k % 2 == 0 { u } else { s }).collect();
            if word_action(gens, &w1, dim) != word_action(gens, &w2, dim) {
                return Err(Error::Data(format!("generators {} and {} violate the braid relation", s + 1, u + 1)));
            }
        }
    }
    Ok(())
}

/// A representation read from a plugin file: generator matrices with
/// Laurent polynomial entries in the class variables of the type.
///
/// ```text
/// type H3
/// label V
/// params 1
/// dim 3
/// gen 1
/// -q 0 0
/// ...
/// ```
#[derive(Clone, Debug)]
pub struct PluginRep {
    pub ctype: CoxType,
    pub label: FactorLabel,
    pub dim: usize,
    pub vars: Arc<[String]>,
    pub gens: Vec<Matrix<LaurentPoly>>,
}

impl PluginRep {
    pub fn parse(text: &str) -> Result<Self> {
        let mut ctype = None;
        let mut label = None;
        let mut arity = None;
        let mut dim = None;
        let mut gens: Vec<Matrix<LaurentPoly>> = Vec::new();
        let mut vars: Option<Arc<[String]>> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: i + 1, msg };
            let mut words = line.split_whitespace();
            let head = words.next().unwrap();
            match head {
                "type" => {
                    let t: CoxType = words.next().ok_or_else(|| err("missing type".into()))?.parse().map_err(|e: Error| err(e.to_string()))?;
                    let names = t.classes().1;
                    vars = Some(LaurentPoly::vars_from(&names.iter().map(String::as_str).collect::<Vec<_>>()));
                    ctype = Some(t);
                }
                "label" => label = Some(FactorLabel::parse(&words.collect::<Vec<_>>().join(" ")).map_err(|e| err(e.to_string()))?),
                "params" => arity = Some(words.next().and_then(|w| w.parse::<usize>().ok()).ok_or_else(|| err("bad parameter arity".into()))?),
                "dim" => dim = Some(words.next().and_then(|w| w.parse::<usize>().ok()).ok_or_else(|| err("bad dimension".into()))?),
                "gen" => {
                    let k: usize = words.next().and_then(|w| w.parse().ok()).ok_or_else(|| err("bad generator index".into()))?;
                    if k != gens.len() + 1 {
                        return Err(err(format!("generator {k} out of order")));
                    }
                    gens.push(Vec::new());
                }
                _ => {
                    let (Some(v), Some(d), Some(g)) = (vars.as_ref(), dim, gens.last_mut()) else {
                        return Err(err("matrix row before the header is complete".into()));
                    };
                    let row: Vec<LaurentPoly> = line.split_whitespace().map(|x| LaurentPoly::parse(x, v)).collect::<Result<_>>().map_err(|e| err(e.to_string()))?;
                    if row.len() != d || g.len() == d {
                        return Err(err(format!("matrix rows must have {d} entries, {d} rows per generator")));
                    }
                    g.push(row);
                }
            }
        }
        let ctype = ctype.ok_or_else(|| Error::Data("plugin file has no type line".into()))?;
        let dim = dim.ok_or_else(|| Error::Data("plugin file has no dim line".into()))?;
        let label = label.unwrap_or_else(|| FactorLabel::Plugin(String::new()));
        let vars = vars.unwrap();
        if let Some(a) = arity {
            if a != vars.len() {
                return Err(Error::Data(format!("{ctype} has {} parameter classes, plugin declares {a}", vars.len())));
            }
        }
        if gens.len() != ctype.rank() || gens.iter().any(|g| g.len() != dim) {
            return Err(Error::Data(format!("plugin needs {} complete {dim}×{dim} generator matrices", ctype.rank())));
        }
        Ok(PluginRep { ctype, label, dim, vars, gens })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Data(format!("cannot read {}: {e}", path.display())))?;
        PluginRep::parse(&text)
    }

    /// Matrices at the given node parameters, validated against the
    /// relations.
    pub fn specialize(&self, params: &[CycNumber]) -> Result<Vec<Matrix<CycNumber>>> {
        let (cls, names) = self.ctype.classes();
        if params.len() != cls.len() {
            return Err(Error::Invalid(format!("{} needs {} node parameters", self.ctype, cls.len())));
        }
        let asg: Vec<(String, CycNumber)> =
            names.iter().enumerate().map(|(k, n)| (n.clone(), params[cls.iter().position(|&x| x == k).unwrap()].clone())).collect();
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().map(|row| row.iter().map(|x| specialize(x, &asg)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        check_hecke_rep(self.ctype, params, &gens)?;
        Ok(gens)
    }
}

/// Registry of plugin representations keyed by type and label.
#[derive(Clone, Debug, Default)]
pub struct RepContext {
    plugins: BTreeMap<(String, String), PluginRep>,
    /// prefer plugin matrices over the built-in reflection representations
    pub prefer_plugins: bool,
}

impl RepContext {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, rep: PluginRep) {
        self.plugins.insert((rep.ctype.normalized().to_string(), rep.label.to_string()), rep);
    }

    /// Load every `*.rep` file of a directory (sorted by name).
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let mut ctx = RepContext::new();
        if !dir.is_dir() {
            return Ok(ctx);
        }
        let mut paths: Vec<_> = std::fs::read_dir(dir)?.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "rep")).collect();
        paths.sort();
        for p in paths {
            ctx.add(PluginRep::load(&p).map_err(|e| Error::Data(format!("{}: {e}", p.display())))?);
        }
        Ok(ctx)
    }

    pub fn len(&self) -> usize {
        self.plugins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plugins.is_empty()
    }

    pub fn plugin(&self, t: CoxType, label: &FactorLabel) -> Option<&PluginRep> {
        let key = match label {
            FactorLabel::Plugin(n) => n.clone(),
            l => l.to_string(),
        };
        self.plugins.get(&(t.normalized().to_string(), key))
    }

    /// Generator matrices of the factor representation at node parameters
    /// in standard order, with their source.
    pub fn factor_matrices(&self, t: CoxType, label: &FactorLabel, params: &[CycNumber]) -> Result<(Vec<Matrix<CycNumber>>, ScalarSource)> {
        let canon = label.canonical(t);
        let is = |l: FactorLabel| l.canonical(t) == canon;
        if is(FactorLabel::Triv) {
            return Ok((params.iter().map(|_| vec![vec![CycNumber::one()]]).collect(), ScalarSource::LinearCharacter));
        }
        if is(FactorLabel::Sign) {
            return Ok((params.iter().map(|q| vec![vec![q.neg()]]).collect(), ScalarSource::LinearCharacter));
        }
        let plugin = self.plugin(t, label);
        if let (Some(p), true) = (plugin, self.prefer_plugins) {
            return Ok((p.specialize(params)?, ScalarSource::PluginMatrix));
        }
        if is(FactorLabel::Refl) {
            return Ok((reflection_rep(t, params, false)?, ScalarSource::ReflectionRep));
        }
        if *label == FactorLabel::ReflConj {
            return Ok((reflection_rep(t, params, true)?, ScalarSource::ReflectionRep));
        }
        if *label == FactorLabel::ExtSquare {
            return Ok((exterior_square(&reflection_rep(t, params, false)?), ScalarSource::ReflectionRep));
        }
        match plugin {
            Some(p) => Ok((p.specialize(params)?, ScalarSource::PluginMatrix)),
            None => Err(Error::NoStrategy(format!("no matrices for {label} of {t}; supply a plugin file with `type {t}` and `label {label}`"))),
        }
    }
}
