//! Tables of finite-dimensional lowest weights.
//!
//! One record per line: `types | params | labels [| provenance]`. Types are
//! comma-separated symbols; params are comma-separated rationals, either a
//! single value for every reflection class or one value per class of each
//! factor in turn (types B, F4 and even dihedral types list the short class
//! first); labels are separated by ';'. Blank lines and '#' comments are
//! skipped.

use std::path::Path;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coxeter::{CoxType, CoxeterDatum};
use crate::error::{Error, Result};

use super::twist::parabolic_factors;
use super::{FactorLabel, LowestWeightLabel};

#[derive(Clone, Debug, PartialEq)]
pub struct FinDimRecord {
    pub types: Vec<CoxType>,
    /// one value per class of each factor, concatenated
    pub params: Vec<BigRational>,
    pub labels: Vec<LowestWeightLabel>,
    pub provenance: Option<String>,
    pub line: usize,
}

fn num_classes(t: CoxType) -> usize {
    t.classes().1.len()
}

impl FinDimRecord {
    /// Class parameters of factor `k`.
    pub fn factor_params(&self, k: usize) -> &[BigRational] {
        let start: usize = self.types[..k].iter().map(|&t| num_classes(t)).sum();
        &self.params[start..start + num_classes(self.types[k])]
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let r = match s.split_once('/') {
        Some((a, b)) => {
            let a: num_bigint::BigInt = a.trim().parse().map_err(|_| Error::Invalid(format!("bad rational `{s}`")))?;
            let b: num_bigint::BigInt = b.trim().parse().map_err(|_| Error::Invalid(format!("bad rational `{s}`")))?;
            if b.is_zero() {
                return Err(Error::Invalid(format!("zero denominator in `{s}`")));
            }
            BigRational::new(a, b)
        }
        None => BigRational::from_integer(s.parse().map_err(|_| Error::Invalid(format!("bad rational `{s}`")))?),
    };
    Ok(r)
}

fn check_label(types: &[CoxType], label: &LowestWeightLabel) -> std::result::Result<(), String> {
    let factors = label.resolve(types.len()).map_err(|e| e.to_string())?;
    for (t, f) in types.iter().zip(&factors) {
        match f {
            FactorLabel::Bip(b) => {
                let ok = matches!(t, CoxType::B(n) | CoxType::D(n) if *n == b.size());
                if !ok {
                    return Err(format!("bipartition {b} does not label a representation of {t}"));
                }
            }
            FactorLabel::ReflConj if !matches!(t, CoxType::H(_) | CoxType::I2(_)) => {
                return Err(format!("{t} has no Galois conjugate reflection representation"));
            }
            _ => {}
        }
    }
    Ok(())
}

fn parse_line(line: &str, lineno: usize) -> Result<Option<FinDimRecord>> {
    let body = line.split('#').next().unwrap_or("").trim();
    if body.is_empty() {
        return Ok(None);
    }
    let err = |msg: String| Error::Parse { line: lineno, msg };
    let fields: Vec<&str> = body.split('|').map(str::trim).collect();
    if fields.len() < 3 || fields.len() > 4 {
        return Err(err(format!("expected 3 or 4 '|'-separated fields, found {}", fields.len())));
    }
    let types: Vec<CoxType> = if fields[0] == "1" {
        vec![]
    } else {
        fields[0].split(',').map(|s| s.trim().parse::<CoxType>()).collect::<Result<_>>().map_err(|e| err(e.to_string()))?
    };
    let raw: Vec<BigRational> = fields[1].split(',').map(parse_rational).collect::<Result<_>>().map_err(|e| err(e.to_string()))?;
    let total: usize = types.iter().map(|&t| num_classes(t)).sum();
    let params = if raw.len() == total {
        raw
    } else if raw.len() == 1 {
        vec![raw[0].clone(); total]
    } else {
        return Err(err(format!("{} parameters given, {} reflection classes expected", raw.len(), total)));
    };
    let labels: Vec<LowestWeightLabel> = fields[2]
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(LowestWeightLabel::parse)
        .collect::<Result<_>>()
        .map_err(|e| err(e.to_string()))?;
    for l in &labels {
        check_label(&types, l).map_err(err)?;
    }
    let provenance = fields.get(3).map(|s| s.to_string()).filter(|s| !s.is_empty());
    Ok(Some(FinDimRecord { types, params, labels, provenance, line: lineno }))
}

pub fn parse_findim(text: &str) -> Result<Vec<FinDimRecord>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(r) = parse_line(line, i + 1)? {
            out.push(r);
        }
    }
    Ok(out)
}

pub fn load_findim_table(path: &Path) -> Result<Vec<FinDimRecord>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Data(format!("cannot read {}: {e}", path.display())))?;
    parse_findim(&text)
}

/// Indexed view of a list of records.
#[derive(Clone, Debug, Default)]
pub struct FinDimTable {
    pub records: Vec<FinDimRecord>,
}

/// Labels found for a parabolic, with the provenance of the records used.
#[derive(Clone, Debug, PartialEq)]
pub struct FinDimMatch {
    pub labels: Vec<LowestWeightLabel>,
    pub provenance: Vec<String>,
}

impl FinDimTable {
    pub fn new(records: Vec<FinDimRecord>) -> Self {
        FinDimTable { records }
    }

    pub fn load(path: &Path) -> Result<Self> {
        Ok(FinDimTable::new(load_findim_table(path)?))
    }

    /// Finite-dimensional lowest weights of W_J at the ambient class
    /// parameters `c`, with factor labels in [`parabolic_factors`] order.
    /// A whole-product record is preferred; otherwise the labels are the
    /// tensor products of single-factor records. No record means no labels.
    pub fn lookup(&self, datum: &CoxeterDatum, j: &[usize], c: &[BigRational]) -> Result<FinDimMatch> {
        if c.len() != datum.num_classes() {
            return Err(Error::Invalid(format!("{} needs {} parameters", datum.name, datum.num_classes())));
        }
        let factors = parabolic_factors(datum, j)?;
        if factors.is_empty() {
            return Ok(FinDimMatch { labels: vec![LowestWeightLabel::new(vec![])], provenance: vec![] });
        }
        let fparams: Vec<Vec<BigRational>> = factors
            .iter()
            .map(|comp| {
                let (local_class, names) = comp.ctype.classes();
                (0..names.len())
                    .map(|k| {
                        let pos = local_class.iter().position(|&x| x == k).unwrap();
                        c[datum.node_class[comp.nodes[pos]]].clone()
                    })
                    .collect()
            })
            .collect();
        // whole-product record, factors matched up to permutation
        for rec in self.records.iter().filter(|r| r.types.len() == factors.len() && factors.len() > 1) {
            if let Some(perm) = match_factors(rec, &factors.iter().map(|f| f.ctype).collect::<Vec<_>>(), &fparams) {
                let labels = rec
                    .labels
                    .iter()
                    .map(|l| {
                        let fl = l.resolve(factors.len())?;
                        Ok(LowestWeightLabel::new(perm.iter().map(|&k| fl[k].clone()).collect()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                return Ok(FinDimMatch { labels, provenance: rec.provenance.iter().cloned().collect() });
            }
        }
        let mut per_factor: Vec<Vec<FactorLabel>> = Vec::new();
        let mut provenance = Vec::new();
        for (comp, p) in factors.iter().zip(&fparams) {
            let rec = self.records.iter().find(|r| r.types.len() == 1 && same_type(r.types[0], comp.ctype) && r.params == *p);
            match rec {
                Some(r) => {
                    per_factor.push(r.labels.iter().map(|l| l.resolve(1).map(|mut v| v.remove(0))).collect::<Result<_>>()?);
                    provenance.extend(r.provenance.iter().cloned());
                }
                None => return Ok(FinDimMatch { labels: vec![], provenance: vec![] }),
            }
        }
        let mut labels: Vec<Vec<FactorLabel>> = vec![vec![]];
        for opts in &per_factor {
            labels = labels.iter().flat_map(|pre| opts.iter().map(move |o| [pre.clone(), vec![o.clone()]].concat())).collect();
        }
        provenance.dedup();
        Ok(FinDimMatch { labels: labels.into_iter().map(LowestWeightLabel::new).collect(), provenance })
    }
}

fn same_type(a: CoxType, b: CoxType) -> bool {
    a.normalized() == b.normalized()
}

/// A permutation `perm` with record factor perm[k] matching parabolic
/// factor k, if one exists.
fn match_factors(rec: &FinDimRecord, types: &[CoxType], params: &[Vec<BigRational>]) -> Option<Vec<usize>> {
    fn rec_search(rec: &FinDimRecord, types: &[CoxType], params: &[Vec<BigRational>], used: &mut Vec<bool>, cur: &mut Vec<usize>) -> bool {
        let k = cur.len();
        if k == types.len() {
            return true;
        }
        for i in 0..rec.types.len() {
            if !used[i] && same_type(rec.types[i], types[k]) && rec.factor_params(i) == params[k].as_slice() {
                used[i] = true;
                cur.push(i);
                if rec_search(rec, types, params, used, cur) {
                    return true;
                }
                cur.pop();
                used[i] = false;
            }
        }
        false
    }
    let mut used = vec![false; rec.types.len()];
    let mut cur = Vec::new();
    rec_search(rec, types, params, &mut used, &mut cur).then_some(cur)
}

/// Replace each type D_n factor by B_n with short-class parameter 0, i.e.
/// KZ parameter p = 1. Labels of D factors must be non-symmetric
/// bipartitions or linear characters, and c must have even denominator.
pub fn type_d_reduce(rec: &FinDimRecord) -> Result<FinDimRecord> {
    let mut types = Vec::new();
    let mut params = Vec::new();
    for (k, &t) in rec.types.iter().enumerate() {
        let p = rec.factor_params(k).to_vec();
        match t {
            CoxType::D(n) => {
                let c = &p[0];
                if !c.is_zero() && (c.denom() % 2u32).is_one() {
                    return Err(Error::Data(format!("D{n} at c = {c}: odd denominators admit no finite-dimensional representations")));
                }
                types.push(CoxType::B(n));
                params.push(BigRational::zero());
                params.push(c.clone());
            }
            _ => {
                types.push(t);
                params.extend(p);
            }
        }
    }
    let mut labels = Vec::new();
    for l in &rec.labels {
        let fl = l.resolve(rec.types.len())?;
        let mut out = Vec::new();
        for (&t, f) in rec.types.iter().zip(fl) {
            match (t, f.canonical(t)) {
                (CoxType::D(_), FactorLabel::Bip(b)) => {
                    if b.is_symmetric() {
                        return Err(Error::Data(format!("symmetric bipartition {b} has no type B counterpart")));
                    }
                    out.push(FactorLabel::Bip(b));
                }
                (CoxType::D(n), other) => {
                    return Err(Error::Data(format!("label {other} of D{n} is not a bipartition")));
                }
                (_, _) => out.push(f),
            }
        }
        labels.push(LowestWeightLabel::new(out));
    }
    Ok(FinDimRecord { types, params, labels, provenance: rec.provenance.clone(), line: rec.line })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::repdata::Bipartition;

    #[test]
    fn parses_records() {
        let r = parse_findim("# header\n\nD4 | 1/2 | triv;(3,1)\n").unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].labels.len(), 2);
        assert_eq!(r[0].line, 3);
        let r = parse_findim("E7 | 1/2 | triv;V;phi_{15,7};phi_{21,6};phi_{27,2};phi_{35,13};phi_{189,5}").unwrap();
        assert_eq!(r[0].labels.len(), 7);
        assert!(parse_findim("").unwrap().is_empty());
    }

    #[test]
    fn reports_line_numbers() {
        match parse_findim("A1 | 1/2 | triv\nX9 | 1/2 | triv") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        match parse_findim("B2 | 1/2,1/3,1/4 | triv") {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 1);
                assert!(msg.contains("parameters"));
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_findim("A3 | 1/4 | (2,1)").is_err());
    }

    #[test]
    fn products_from_factors() {
        let t = FinDimTable::new(parse_findim("A1 | 1/2 | triv\nD4 | 1/2 | triv;(3,1)").unwrap());
        let d6 = CoxeterDatum::build("D6").unwrap();
        let half = parse_rational("1/2").unwrap();
        // D4 × A1 = {s1} ∪ {s3,...,s6}
        let m = t.lookup(&d6, &[0, 2, 3, 4, 5], &[half.clone()]).unwrap();
        assert_eq!(m.labels.len(), 2);
        let third = parse_rational("1/3").unwrap();
        assert!(t.lookup(&d6, &[0], &[third]).unwrap().labels.is_empty());
        let m = t.lookup(&d6, &[], &[half]).unwrap();
        assert_eq!(m.labels.len(), 1);
    }

    #[test]
    fn restricted_class_parameters() {
        let t = FinDimTable::new(parse_findim("A2 | 1/3 | triv").unwrap());
        let b3 = Arc::new(CoxeterDatum::build("B3").unwrap());
        let c = vec![parse_rational("1/7").unwrap(), parse_rational("1/3").unwrap()];
        assert_eq!(t.lookup(&b3, &[1, 2], &c).unwrap().labels.len(), 1);
        let c = vec![parse_rational("1/3").unwrap(), parse_rational("1/7").unwrap()];
        assert!(t.lookup(&b3, &[1, 2], &c).unwrap().labels.is_empty());
    }

    #[test]
    fn d_reduction() {
        let r = parse_findim("D4,A1 | 1/2 | triv;(3,1)*triv").unwrap();
        let b = type_d_reduce(&r[0]).unwrap();
        assert_eq!(b.types, vec![CoxType::B(4), CoxType::A(1)]);
        assert_eq!(b.params[0], BigRational::zero());
        assert_eq!(b.labels[0].factors[0], FactorLabel::Bip(Bipartition::parse("(4,0)").unwrap()));
        let r = parse_findim("D4 | 1/3 | triv").unwrap();
        assert!(type_d_reduce(&r[0]).is_err());
        let r = parse_findim("D4 | 1/2 | (2,2)").unwrap();
        assert!(type_d_reduce(&r[0]).is_err());
    }
}
