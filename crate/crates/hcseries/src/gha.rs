//! Generalized Hecke algebras End(Ind L): quadratic relations of the
//! corank-one overgroups, their normalized parameters, and the assembled
//! presentation Icomp ⋉ H(Iref; params).

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::arith::linalg::Matrix;
use crate::arith::{unit_root, CycNumber, Field, Ring};
use crate::coxeter::classify::classify_subset;
use crate::coxeter::fixed::overgroup_simple;
use crate::coxeter::{longest_element, standardize_subsystem, Component, CoxType, CoxeterDatum, FixedSpaceGroup, GroupElement};
use crate::error::{Error, Result};
use crate::repdata::twist::{opposition, relabel};
use crate::repdata::{content_scalar_at, parabolic_factors, twist_action, FactorLabel, RepContext, ScalarSource};
use crate::zelt::{mat_mul, word_action, CosetModule};

/// How the scalar of z_top on the block was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// 1×1 action of a linear character on the coset module
    Linear,
    /// B_n ⊂ B_{n+1} or D_n ⊂ D_{n+1} with a bipartition label
    Content,
    /// matrices with σ trivial
    Matrix,
    /// matrices composed with T_{w0'} when σ is the opposition of J
    TwistedMatrix,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Strategy::Linear => "linear",
            Strategy::Content => "content",
            Strategy::Matrix => "matrix",
            Strategy::TwistedMatrix => "twisted-matrix",
        };
        write!(f, "{s}")
    }
}

/// A normalized Hecke parameter q', determined up to inversion.
#[derive(Clone, Debug)]
pub struct QParam {
    /// a representative when q' is cyclotomic
    pub value: Option<CycNumber>,
    /// q' + 1/q', which determines the pair {q', 1/q'}
    pub sum: CycNumber,
    pub text: String,
}

impl PartialEq for QParam {
    fn eq(&self, o: &Self) -> bool {
        self.sum == o.sum
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text)
    }
}

impl QParam {
    /// The parameter with a given representative.
    pub fn from_value(v: CycNumber, classes: &[(String, CycNumber)]) -> QParam {
        let sum = v.add(&v.inv().expect("parameter is a unit")).reduce();
        let text = display_param(&v, classes);
        QParam { value: Some(v), sum, text }
    }

    pub fn same_up_to_inverse(&self, v: &CycNumber) -> bool {
        v.inv().is_some_and(|i| v.add(&i).reduce() == self.sum)
    }
}

/// T² = a·T + b for the monodromy generator on Ind L.
#[derive(Clone, Debug)]
pub struct QuadraticRelation {
    pub linear: CycNumber,
    pub constant: CycNumber,
    pub source: ScalarSource,
    pub strategy: Strategy,
    pub param: QParam,
}

/// KZ parameters e^{-2πic} per reflection class, paired with class names.
pub fn class_params(datum: &CoxeterDatum, c: &[BigRational]) -> Result<Vec<(String, CycNumber)>> {
    if c.len() != datum.num_classes() {
        return Err(Error::Invalid(format!("{} expects {} parameter values, got {}", datum.name, datum.num_classes(), c.len())));
    }
    Ok(datum.class_names.iter().cloned().zip(c.iter().map(unit_root)).collect())
}

fn power(x: &CycNumber, k: u32) -> CycNumber {
    x.pow(k as u64).reduce()
}

/// "1", "-1", "q^k" or "-q^k" in the first class that works, smallest k,
/// positive powers before negated ones; the raw number otherwise.
pub fn display_param(v: &CycNumber, classes: &[(String, CycNumber)]) -> String {
    let v = v.reduce();
    let vi = v.inv().expect("parameter is a unit").reduce();
    if v.is_one() {
        return "1".into();
    }
    if v.neg().is_one() {
        return "-1".into();
    }
    let fmt_pow = |name: &str, k: u32| if k == 1 { name.to_string() } else { format!("{name}^{k}") };
    for negate in [false, true] {
        for (name, p) in classes {
            let Some(ord) = p.root_of_unity_order() else { continue };
            for k in 1..ord {
                let mut x = power(p, k);
                if negate {
                    x = x.neg();
                }
                if x == v || x == vi {
                    let s = fmt_pow(name, k);
                    return if negate { format!("-{s}") } else { s };
                }
            }
        }
    }
    v.to_string()
}

/// The root of unity ζ with ζ + 1/ζ = s, if any.
fn root_from_sum(s: &CycNumber) -> Option<CycNumber> {
    let (re, im) = s.to_complex();
    if im.abs() > 1e-9 || re.abs() > 2.0 + 1e-9 {
        return None;
    }
    let theta = (re / 2.0).clamp(-1.0, 1.0).acos() / (2.0 * std::f64::consts::PI);
    for m in 1..=20_000u32 {
        let k = (theta * m as f64).round();
        if (theta * m as f64 - k).abs() < 1e-8 {
            let z = CycNumber::zeta_pow(m, k as i64);
            if z.add(&z.inv()?).reduce() == *s {
                return Some(z);
            }
        }
    }
    None
}

/// Rescale T² = aT + b to the form (T−1)(T+q') = 0 and read off q'.
pub fn normalize_relation(a: &CycNumber, b: &CycNumber, classes: &[(String, CycNumber)]) -> Result<QParam> {
    let binv = b.inv().ok_or_else(|| Error::Invariant("quadratic relation with zero constant term".into()))?;
    let one = CycNumber::one();
    let sum = CycNumber::from_int(2).add(&a.mul(a).mul(&binv)).reduce();
    if one.sub(a).sub(b).is_zero() || one.add(a).sub(b).is_zero() {
        return Ok(QParam::from_value(b.reduce(), classes));
    }
    match root_from_sum(&sum) {
        Some(z) => Ok(QParam::from_value(z, classes)),
        None => Ok(QParam { value: None, text: format!("root of x^2-({sum})x+1"), sum }),
    }
}

fn same_labels(factors: &[Component], a: &[FactorLabel], b: &[FactorLabel]) -> bool {
    factors.iter().zip(a.iter().zip(b)).all(|(f, (x, y))| x.canonical(f.ctype) == y.canonical(f.ctype))
}

fn kron(a: &Matrix<CycNumber>, b: &Matrix<CycNumber>) -> Matrix<CycNumber> {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![CycNumber::zero(); ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a[i][j].mul(&b[k][l]);
                }
            }
        }
    }
    out
}

fn identity(n: usize) -> Matrix<CycNumber> {
    (0..n).map(|i| (0..n).map(|k| CycNumber::from_int((i == k) as i64)).collect()).collect()
}

fn scalar_of(m: &Matrix<CycNumber>) -> Option<CycNumber> {
    let c = m.first()?.first()?.clone();
    for (i, row) in m.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            let want = if i == k { &c } else { &CycNumber::zero() };
            if x.sub(want).reduce() != CycNumber::zero() {
                return None;
            }
        }
    }
    Some(c.reduce())
}

/// Generator matrices of ⊗ factors on the local nodes of J (sorted order).
fn tensor_gens(j: &[usize], factors: &[Component], labels: &[FactorLabel], params: &[CycNumber], ctx: &RepContext) -> Result<(Vec<Matrix<CycNumber>>, usize, ScalarSource)> {
    let mut per_factor = Vec::new();
    let mut source = ScalarSource::LinearCharacter;
    for (f, l) in factors.iter().zip(labels) {
        let p: Vec<CycNumber> = f.nodes.iter().map(|&s| params[s].clone()).collect();
        let (mats, src) = ctx.factor_matrices(f.ctype, l, &p)?;
        if src != ScalarSource::LinearCharacter {
            source = src;
        }
        per_factor.push(mats);
    }
    let dims: Vec<usize> = per_factor.iter().map(|m| m.first().map_or(1, |x| x.len())).collect();
    let dim: usize = dims.iter().product();
    let mut gens = vec![Vec::new(); j.len()];
    for (fi, f) in factors.iter().enumerate() {
        for (k, &s) in f.nodes.iter().enumerate() {
            let mut m = identity(1);
            for (gi, d) in dims.iter().enumerate() {
                let piece = if gi == fi { per_factor[fi][k].clone() } else { identity(*d) };
                m = kron(&m, &piece);
            }
            let local = j.iter().position(|&u| u == s).expect("factor node lies in J");
            gens[local] = m;
        }
    }
    Ok((gens, dim, source))
}

/// The scalar pair (a, b) on an irreducible datum with J of corank one.
fn block_relation(
    datum: &Arc<CoxeterDatum>,
    j: &[usize],
    params: &[CycNumber],
    labels: &[FactorLabel],
    ctx: &RepContext,
    use_content: bool,
) -> Result<(CycNumber, CycNumber, ScalarSource, Strategy)> {
    let module = CosetModule::new(datum, j)?;
    let pair = &module.pair;
    let factors = parabolic_factors(datum, j)?;
    if labels.len() != factors.len() {
        return Err(Error::Invalid(format!("{} factor labels for {} factors of W_J", labels.len(), factors.len())));
    }
    let twisted = twist_action(datum, j, &pair.x, labels).map_err(|e| Error::Invalid(format!("label is not σ-invariant: {e}")))?;
    if !same_labels(&factors, &twisted, labels) {
        return Err(Error::Invalid("label is not σ-invariant".into()));
    }
    let b = pair.x.word().iter().fold(CycNumber::one(), |acc, &s| acc.mul(&params[s])).reduce();

    if labels.iter().zip(&factors).all(|(l, f)| l.canonical(f.ctype).is_linear() || l.is_linear()) {
        let (gens, dim, src) = tensor_gens(j, &factors, labels, params, ctx)?;
        let z = module.z_top_action(params, &gens, dim)?;
        return Ok((z[0][0].reduce(), b, src, Strategy::Linear));
    }

    if let (true, Some(t), [f], [l]) = (use_content, datum.irreducible_type(), factors.as_slice(), labels) {
        let standard: Vec<usize> = (0..j.len()).collect();
        let shifted: Vec<usize> = (1..=j.len()).collect();
        if let FactorLabel::Bip(bip) = l.canonical(f.ctype) {
            match (t, f.ctype) {
                (CoxType::B(_), CoxType::B(_)) if j == standard.as_slice() => {
                    let a = content_scalar_at(&bip, &params[0], &params[j.len()])?;
                    return Ok((a.reduce(), b, ScalarSource::ContentFormula, Strategy::Content));
                }
                (CoxType::D(_), CoxType::D(_)) if j == shifted.as_slice() => {
                    let a = content_scalar_at(&bip, &CycNumber::one(), &params[1])?;
                    return Ok((a.reduce(), b, ScalarSource::ContentFormula, Strategy::Content));
                }
                _ => {}
            }
        }
    }

    let (gens, dim, src) = tensor_gens(j, &factors, labels, params, ctx)?;
    let z = module.z_top_action(params, &gens, dim)?;
    if pair.sigma_is_trivial() {
        let a = scalar_of(&z).ok_or_else(|| Error::Invariant("z_top does not act by a scalar on an irreducible block".into()))?;
        return Ok((a, b, src, Strategy::Matrix));
    }
    let t = datum.irreducible_type().ok_or_else(|| Error::Invalid("reducible ambient datum".into()))?;
    if opposition(t).iter().enumerate().any(|(i, &x)| i != x) {
        return Err(Error::NoStrategy(format!("σ is nontrivial and w0 ≠ −1 in {t}; supply a content-formula case")));
    }
    let w0p = longest_element(datum, j);
    let local: Vec<usize> = w0p.word().iter().map(|s| j.iter().position(|u| u == s).expect("w0' lies in W_J")).collect();
    let tw = word_action(&gens, &local, dim);
    let a = scalar_of(&mat_mul(&z, &tw))
        .or_else(|| scalar_of(&mat_mul(&tw, &z)))
        .ok_or_else(|| Error::Invariant("z_top·T_{w0'} is not scalar on the block".into()))?;
    let sq = scalar_of(&mat_mul(&tw, &tw)).ok_or_else(|| Error::Invariant("T_{w0'}² is not scalar on the block".into()))?;
    Ok((a, b.mul(&sq).reduce(), src, Strategy::TwistedMatrix))
}

/// Restrict (K, J ⊂ K of corank one, labels on the factors of J) to the
/// irreducible component of K containing the extra node.
fn restrict_to_extra(datum: &CoxeterDatum, k: &[usize], j: &[usize], labels: &[FactorLabel]) -> Result<(Arc<CoxeterDatum>, Vec<usize>, Vec<FactorLabel>)> {
    let mut ks = k.to_vec();
    ks.sort_unstable();
    let extra: Vec<usize> = ks.iter().copied().filter(|s| !j.contains(s)).collect();
    if extra.len() != 1 || j.iter().any(|s| !ks.contains(s)) {
        return Err(Error::Invalid(format!("{j:?} is not of corank one in {ks:?}")));
    }
    let comps = classify_subset(&datum.coxeter_matrix, &ks)?;
    let comp = comps.into_iter().find(|c| c.nodes.contains(&extra[0])).expect("extra node lies in a component");
    let sub = Arc::new(datum.sub_datum(&comp.nodes)?);
    let jfactors = parabolic_factors(datum, j)?;
    let (inside, inside_labels): (Vec<Component>, Vec<FactorLabel>) =
        jfactors.into_iter().zip(labels.iter().cloned()).filter(|(f, _)| f.nodes.iter().all(|s| comp.nodes.contains(s))).unzip();
    let mut jl: Vec<usize> = inside.iter().flat_map(|f| f.nodes.iter().map(|s| comp.nodes.iter().position(|u| u == s).unwrap())).collect();
    jl.sort_unstable();
    let target = parabolic_factors(&sub, &jl)?;
    let local = relabel(&inside, &target, |s| comp.nodes.iter().position(|&u| u == s), &inside_labels)?;
    Ok((sub, jl, local))
}

/// The quadratic relation of T for W_J ⊂ W of corank one and a lowest
/// weight L given per factor of W_J; c is given per class of W.
pub fn quadratic_param(datum: &Arc<CoxeterDatum>, j: &[usize], c: &[BigRational], labels: &[FactorLabel], ctx: &RepContext) -> Result<QuadraticRelation> {
    let classes = class_params(datum, c)?;
    let all: Vec<usize> = (0..datum.rank()).collect();
    relation_in(datum, &all, j, &classes, labels, ctx)
}

fn relation_in(datum: &Arc<CoxeterDatum>, k: &[usize], j: &[usize], classes: &[(String, CycNumber)], labels: &[FactorLabel], ctx: &RepContext) -> Result<QuadraticRelation> {
    let (sub, jl, local) = restrict_to_extra(datum, k, j, labels)?;
    let params: Vec<CycNumber> = sub.node_class.iter().map(|&c| classes[c].1.clone()).collect();
    let (a, b, source, strategy) = block_relation(&sub, &jl, &params, &local, ctx, true)?;
    let param = normalize_relation(&a, &b, classes)?;
    Ok(QuadraticRelation { linear: a, constant: b, source, strategy, param })
}

/// One simple reflection of Iref and the data of its overgroup.
#[derive(Clone, Debug)]
pub struct RayRelation {
    /// type of the overgroup component containing the extra node
    pub overgroup: String,
    pub relation: QuadraticRelation,
}

/// End(Ind L) ≅ Icomp ⋉ H(Iref; params) with trivial cocycle.
#[derive(Clone, Debug)]
pub struct GHAPresentation {
    pub ambient: String,
    pub parabolic: Vec<usize>,
    pub labels: Vec<FactorLabel>,
    pub normalizer_order: usize,
    pub ref_label: String,
    pub ref_datum: Option<Arc<CoxeterDatum>>,
    pub rays: Vec<RayRelation>,
    /// one parameter per class of `ref_datum`
    pub params: Vec<QParam>,
    pub complement: Vec<GroupElement>,
    /// permutation of the simple reflections by each complement element
    pub complement_action: Vec<Vec<usize>>,
    pub cocycle_trivial: bool,
}

fn group_name(elems: &[GroupElement]) -> String {
    let n = elems.len();
    let order = |g: &GroupElement| -> usize {
        let mut x = g.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.multiply(g).expect("same datum");
            k += 1;
        }
        k
    };
    let abelian = elems.iter().all(|a| elems.iter().all(|b| a.multiply(b).ok() == b.multiply(a).ok()));
    if n == 1 {
        "1".into()
    } else if elems.iter().any(|g| order(g) == n) {
        format!("Z/{n}")
    } else if n == 4 {
        "Z/2×Z/2".into()
    } else if n == 6 && !abelian {
        "S3".into()
    } else {
        format!("G{n}")
    }
}

impl GHAPresentation {
    pub fn complement_name(&self) -> String {
        group_name(&self.complement)
    }

    pub fn dimension(&self) -> u64 {
        self.ref_datum.as_ref().map_or(1, |d| d.order()) * self.complement.len() as u64
    }

    /// Parameter of each simple reflection of Iref.
    pub fn node_params(&self) -> Vec<QParam> {
        match &self.ref_datum {
            Some(d) => d.node_class.iter().map(|&c| self.params[c].clone()).collect(),
            None => vec![],
        }
    }

    /// "Z/2 ⋉ H(A1; x1=q^2)"; the prefix is omitted for trivial Icomp.
    pub fn text(&self) -> String {
        let body = match &self.ref_datum {
            None => "H(1)".to_string(),
            Some(d) => {
                let ps: Vec<String> = d.class_names.iter().zip(&self.params).map(|(n, p)| format!("{n}={p}")).collect();
                format!("H({}; {})", self.ref_label, ps.join(","))
            }
        };
        if self.complement.len() == 1 {
            body
        } else {
            format!("{} ⋉ {body}", self.complement_name())
        }
    }
}

impl fmt::Display for GHAPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

/// Assemble End(Ind L) for a parabolic W_J ⊂ W and a lowest weight L
/// whose inertia group is all of N_W(W_J)/W_J.
pub fn assemble_presentation(datum: &Arc<CoxeterDatum>, j: &[usize], c: &[BigRational], labels: &[FactorLabel], ctx: &RepContext) -> Result<GHAPresentation> {
    let classes = class_params(datum, c)?;
    let mut sorted = j.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let factors = parabolic_factors(datum, &sorted)?;
    if labels.len() != factors.len() {
        return Err(Error::Invalid(format!("{} factor labels for {} factors of W_J", labels.len(), factors.len())));
    }
    let fs = FixedSpaceGroup::compute(datum, &sorted)?;
    for n in &fs.normalizer {
        let img = twist_action(datum, &sorted, n, labels).map_err(|e| Error::Invalid(format!("inertia is not maximal: {e}")))?;
        if !same_labels(&factors, &img, labels) {
            return Err(Error::Invalid(format!("inertia is not maximal: {n} moves the label")));
        }
    }
    let rays: Vec<RayRelation> = fs
        .simple
        .par_iter()
        .map(|&i| -> Result<RayRelation> {
            let ov = overgroup_simple(datum, &fs, i);
            let (w, knodes) = standardize_subsystem(datum, &ov)?;
            let jimg: Vec<usize> = sorted.iter().map(|&s| w.apply(s)).collect();
            if jimg.iter().any(|&k| k >= datum.rank()) {
                return Err(Error::Invariant("overgroup does not contain Δ_J".into()));
            }
            let mut jp = jimg.clone();
            jp.sort_unstable();
            let target = parabolic_factors(datum, &jp)?;
            let moved = relabel(&factors, &target, |s| sorted.iter().position(|&u| u == s).map(|p| jimg[p]), labels)?;
            let (sub, _, _) = restrict_to_extra(datum, &knodes, &jp, &moved)?;
            let relation = relation_in(datum, &knodes, &jp, &classes, &moved, ctx)?;
            let label = sub.irreducible_type().map_or(sub.name.clone(), |t| t.to_string());
            Ok(RayRelation { overgroup: label, relation })
        })
        .collect::<Result<_>>()?;

    let mut params: Vec<QParam> = Vec::new();
    if let Some(d) = &fs.ref_datum {
        for cl in 0..d.num_classes() {
            let first = (0..rays.len()).find(|&k| d.node_class[k] == cl).expect("class has a node");
            let p = rays[first].relation.param.clone();
            for (k, r) in rays.iter().enumerate() {
                if d.node_class[k] == cl && r.relation.param != p {
                    return Err(Error::Invariant(format!("parameters {} and {} within one class of {}", p, r.relation.param, fs.ref_label)));
                }
            }
            params.push(p);
        }
        for act in &fs.complement_action {
            for (k, &m) in act.iter().enumerate() {
                if rays[k].relation.param != rays[m].relation.param {
                    return Err(Error::Invariant("complement does not preserve the parameters".into()));
                }
            }
        }
    }
    Ok(GHAPresentation {
        ambient: datum.name.clone(),
        parabolic: sorted,
        labels: labels.to_vec(),
        normalizer_order: fs.normalizer.len(),
        ref_label: fs.ref_label.clone(),
        ref_datum: fs.ref_datum.clone(),
        rays,
        params,
        complement: fs.complement.clone(),
        complement_action: fs.complement_action.clone(),
        cocycle_trivial: true,
    })
}

/// Split H(Iref) along the components of Iref; requires trivial Icomp.
pub fn tensor_decompose(p: &GHAPresentation) -> Result<Vec<(CoxType, Vec<QParam>)>> {
    if p.complement.len() > 1 {
        return Err(Error::Invalid(format!("{} does not factor: Icomp is nontrivial", p.text())));
    }
    let Some(d) = &p.ref_datum else { return Ok(vec![]) };
    let nodes = p.node_params();
    Ok(d.components.iter().map(|c| (c.ctype, c.nodes.iter().map(|&s| nodes[s].clone()).collect())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdata::{Bipartition, LowestWeightLabel};

    fn datum(s: &str) -> Arc<CoxeterDatum> {
        Arc::new(CoxeterDatum::build(s).unwrap())
    }

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn triv(d: &CoxeterDatum, j: &[usize]) -> Vec<FactorLabel> {
        LowestWeightLabel::triv().resolve(parabolic_factors(d, j).unwrap().len()).unwrap()
    }

    fn qparam(d: &Arc<CoxeterDatum>, j: &[usize], c: &[BigRational], l: &[FactorLabel]) -> QuadraticRelation {
        quadratic_param(d, j, c, l, &RepContext::new()).unwrap()
    }

    #[test]
    fn normalize_rules() {
        let q = CycNumber::zeta_pow(6, -1);
        let cl = vec![("q".to_string(), q.clone())];
        // the trivial character of A1: T² = (1−q)T + q
        let p = normalize_relation(&CycNumber::one().sub(&q), &q, &cl).unwrap();
        assert_eq!(p.text, "q");
        let p = normalize_relation(&CycNumber::zero(), &CycNumber::from_int(3), &cl).unwrap();
        assert_eq!(p.text, "1");
        assert_eq!(display_param(&power(&q, 4), &cl), "q^2");
        assert_eq!(display_param(&CycNumber::from_int(-1), &cl), "-1");
    }

    #[test]
    fn rank_one() {
        let a1 = datum("A1");
        let rel = qparam(&a1, &[], &[r(1, 5)], &[]);
        assert_eq!(rel.param.text, "q");
    }

    #[test]
    fn d4_in_d5() {
        let d5 = datum("D5");
        let j = [1, 2, 3, 4];
        let rel = qparam(&d5, &j, &[r(1, 6)], &triv(&d5, &j));
        assert_eq!(rel.param.text, "q^2");
        assert_eq!(rel.strategy, Strategy::Linear);
        for c in [r(1, 4), r(1, 2)] {
            assert_eq!(qparam(&d5, &j, &[c], &triv(&d5, &j)).param.text, "1");
        }
        let refl = vec![FactorLabel::Bip(Bipartition::parse("(3,1)").unwrap())];
        let rel = qparam(&d5, &j, &[r(1, 2)], &refl);
        assert_eq!(rel.strategy, Strategy::Content);
        assert_eq!(rel.param.text, "1");
    }

    fn forced_matrix(d: &Arc<CoxeterDatum>, j: &[usize], c: &[BigRational], l: &[FactorLabel]) -> (QParam, Strategy, CycNumber) {
        let all: Vec<usize> = (0..d.rank()).collect();
        let classes = class_params(d, c).unwrap();
        let (sub, jl, local) = restrict_to_extra(d, &all, j, l).unwrap();
        let params: Vec<CycNumber> = sub.node_class.iter().map(|&k| classes[k].1.clone()).collect();
        let (a, b, _, st) = block_relation(&sub, &jl, &params, &local, &RepContext::new(), false).unwrap();
        (normalize_relation(&a, &b, &classes).unwrap(), st, a)
    }

    #[test]
    fn content_agrees_with_matrices() {
        // B3 ⊂ B4 reflection label: σ trivial
        let b4 = datum("B4");
        let j = [0, 1, 2];
        let c = [r(1, 5), r(1, 7)];
        let bip = vec![FactorLabel::Bip(Bipartition::parse("(2,1)").unwrap())];
        let via_content = qparam(&b4, &j, &c, &bip);
        assert_eq!(via_content.strategy, Strategy::Content);
        let (p, st, a) = forced_matrix(&b4, &j, &c, &[FactorLabel::Refl]);
        assert_eq!(st, Strategy::Matrix);
        assert_eq!(a, via_content.linear);
        assert_eq!(p, via_content.param);
    }

    #[test]
    fn twisted_matrices_agree_with_content() {
        // D5 ⊂ D6: σ is the fork swap and w0 = −1 in D6
        let d6 = datum("D6");
        let j = [1, 2, 3, 4, 5];
        for c in [r(1, 7), r(1, 10), r(2, 9)] {
            let via_content = qparam(&d6, &j, &[c.clone()], &[FactorLabel::Bip(Bipartition::parse("(4,1)").unwrap())]);
            assert_eq!(via_content.strategy, Strategy::Content);
            let (p, st, _) = forced_matrix(&d6, &j, &[c], &[FactorLabel::Refl]);
            assert_eq!(st, Strategy::TwistedMatrix);
            assert_eq!(p, via_content.param);
        }
    }

    #[test]
    fn double_eigenvalue_in_b3() {
        // L(triv) of B2 with c_short = c_long / 2 = ±1/6: T has a repeated eigenvalue,
        // so (T−1)² = 0 after rescaling and q' = −1
        let b3 = datum("B3");
        for c in [[r(1, 6), r(1, 3)], [r(-1, 6), r(-1, 3)]] {
            let rel = qparam(&b3, &[0, 1], &c, &[FactorLabel::Triv]);
            let disc = rel.linear.mul(&rel.linear).add(&rel.constant.mul(&CycNumber::from_int(4)));
            assert!(disc.reduce().is_zero(), "{} {}", rel.linear, rel.constant);
            assert_eq!(rel.param.text, "-1");
        }
    }

    #[test]
    fn linear_twisted_agrees() {
        let a5 = datum("A5");
        let d = datum("D6");
        let j = [0, 1, 2, 3, 4];
        let rel = qparam(&d, &j, &[r(1, 6)], &triv(&d, &j));
        assert_eq!(rel.param.text, "-1");
        let rel = qparam(&a5, &[0, 1, 3, 4], &[r(1, 3)], &triv(&a5, &[0, 1, 3, 4]));
        assert_eq!(rel.param.text, "1");
    }

    #[test]
    fn table_rows_small() {
        let d4 = datum("D4");
        let j = [0, 2, 3];
        assert_eq!(qparam(&d4, &j, &[r(1, 2)], &triv(&d4, &j)).param.text, "-1");
        for j in [[0usize, 1, 2], [0, 1, 3], [1, 2, 3]] {
            assert_eq!(qparam(&d4, &j, &[r(1, 4)], &triv(&d4, &j)).param.text, "-1", "{j:?}");
        }
        let h4 = datum("H4");
        let j = [0, 1, 2];
        for (c, l) in [(r(1, 10), FactorLabel::Triv), (r(1, 6), FactorLabel::Triv), (r(1, 2), FactorLabel::Triv), (r(1, 2), FactorLabel::Refl), (r(1, 2), FactorLabel::ReflConj)] {
            assert_eq!(qparam(&h4, &j, &[c.clone()], &[l.clone()]).param.text, "-1", "{c} {l}");
        }
        let b3 = datum("B3");
        for c1 in [r(1, 5), r(2, 7), r(1, 11)] {
            let rel = qparam(&b3, &[1, 2], &[c1.clone(), r(1, 3)], &triv(&b3, &[1, 2]));
            assert!(rel.param.same_up_to_inverse(&power(&unit_root(&c1), 3)), "{c1}: {}", rel.param);
        }
    }

    #[test]
    fn i2_formula() {
        for m in 2..=6u32 {
            let d = datum(&format!("I2({})", 2 * m));
            let c2 = r(1, 7);
            let rel = qparam(&d, &[0], &[r(1, 2), c2.clone()], &[FactorLabel::Triv]);
            let q = unit_root(&c2);
            let sign = if m % 2 == 1 { CycNumber::one() } else { CycNumber::from_int(-1) };
            let want = sign.mul(&power(&q, m));
            assert!(rel.param.same_up_to_inverse(&want), "m={m}: {}", rel.param);
        }
    }

    #[test]
    fn presentations() {
        let d5 = datum("D5");
        let j = [1, 2, 3, 4];
        let p = assemble_presentation(&d5, &j, &[r(1, 6)], &triv(&d5, &j), &RepContext::new()).unwrap();
        assert_eq!(p.text(), "H(A1; x1=q^2)");
        assert_eq!(p.dimension(), 2);
        // S_6 ⊃ S_2^3: wreath-type with parameter 1
        let a5 = datum("A5");
        let j = [0, 2, 4];
        let p = assemble_presentation(&a5, &j, &[r(1, 2)], &triv(&a5, &j), &RepContext::new()).unwrap();
        assert_eq!(p.text(), "H(A2; x1=1)");
        let e6 = datum("E6");
        let j = [1, 2, 3, 4];
        let p = assemble_presentation(&e6, &j, &[r(1, 6)], &triv(&e6, &j), &RepContext::new()).unwrap();
        assert_eq!(p.dimension(), 6);
        assert!(p.text().contains("q^2"), "{}", p.text());
    }

    #[test]
    fn rejects_moved_labels() {
        let a3 = datum("A3");
        let j = [0, 2];
        let err = assemble_presentation(&a3, &j, &[r(1, 2)], &[FactorLabel::Triv, FactorLabel::Sign], &RepContext::new());
        assert!(err.is_err());
    }
}
