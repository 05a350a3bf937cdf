//! Multi-parameter Iwahori-Hecke algebras in the T_w basis.
//!
//! Quadratic relation: (T_s − 1)(T_s + q_s) = 0, i.e. T_s² = (1 − q_s)T_s + q_s.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::{CycNumber, LaurentPoly, Ring};
use crate::coxeter::{CoxeterDatum, ElementTable, GroupElement};
use crate::error::{Error, Result};

/// Coefficients with a canonical text form.
pub trait Coeff: Ring {
    fn parse_coeff(s: &str, vars: &Arc<[String]>) -> Result<Self>;
    /// true if the text form is a single signed term
    fn is_atomic(&self) -> bool;
}

impl Coeff for LaurentPoly {
    fn parse_coeff(s: &str, vars: &Arc<[String]>) -> Result<Self> {
        LaurentPoly::parse(s, vars)
    }
    fn is_atomic(&self) -> bool {
        self.terms().len() <= 1 && self.terms().iter().all(|(_, c)| c.to_rational().is_some())
    }
}

impl Coeff for CycNumber {
    fn parse_coeff(s: &str, _vars: &Arc<[String]>) -> Result<Self> {
        CycNumber::parse(s)
    }
    fn is_atomic(&self) -> bool {
        self.to_rational().is_some()
    }
}

pub struct HeckeAlgebra<C: Ring> {
    pub table: Arc<ElementTable>,
    q: Vec<C>,
    one_minus_q: Vec<C>,
    /// for a parabolic subalgebra: the ambient node of each local node
    pub embedding: Option<Vec<usize>>,
}

impl<C: Ring> fmt::Debug for HeckeAlgebra<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeAlgebra({}; {:?})", self.table.datum.name, self.q)
    }
}

impl HeckeAlgebra<LaurentPoly> {
    /// Generic parameters: one Laurent variable per reflection class.
    pub fn generic(datum: &Arc<CoxeterDatum>) -> Result<Arc<Self>> {
        let table = Arc::new(ElementTable::new(datum)?);
        let q = (0..datum.rank()).map(|s| datum.generic_param(s)).collect();
        Ok(Arc::new(Self::from_parts(table, q, None)))
    }
}

impl HeckeAlgebra<CycNumber> {
    /// Parameters given per reflection class.
    pub fn specialized(datum: &Arc<CoxeterDatum>, class_params: &[CycNumber]) -> Result<Arc<Self>> {
        if class_params.len() != datum.num_classes() {
            return Err(Error::Invalid(format!("{} needs {} parameters, got {}", datum.name, datum.num_classes(), class_params.len())));
        }
        if class_params.iter().any(|c| c.is_zero()) {
            return Err(Error::Invalid("Hecke parameters must be nonzero".into()));
        }
        let table = Arc::new(ElementTable::new(datum)?);
        let q = (0..datum.rank()).map(|s| class_params[datum.node_class[s]].clone()).collect();
        Ok(Arc::new(Self::from_parts(table, q, None)))
    }
}

impl<C: Ring> HeckeAlgebra<C> {
    pub fn new(table: Arc<ElementTable>, node_params: Vec<C>) -> Result<Arc<Self>> {
        if node_params.len() != table.rank() {
            return Err(Error::Invalid("one parameter per simple reflection expected".into()));
        }
        Ok(Arc::new(Self::from_parts(table, node_params, None)))
    }

    fn from_parts(table: Arc<ElementTable>, q: Vec<C>, embedding: Option<Vec<usize>>) -> Self {
        let one_minus_q = q.iter().map(|x| C::one().sub(x)).collect();
        HeckeAlgebra { table, q, one_minus_q, embedding }
    }

    pub fn datum(&self) -> &Arc<CoxeterDatum> {
        &self.table.datum
    }

    pub fn param(&self, s: usize) -> &C {
        &self.q[s]
    }

    pub fn params(&self) -> &[C] {
        &self.q
    }

    /// The subalgebra H(W_J) with parameters restricted.
    pub fn parabolic(&self, j: &[usize]) -> Result<Arc<Self>> {
        let sub = Arc::new(self.datum().sub_datum(j)?);
        let table = Arc::new(ElementTable::new(&sub)?);
        let q = j.iter().map(|&s| self.q[s].clone()).collect();
        Ok(Arc::new(Self::from_parts(table, q, Some(j.to_vec()))))
    }

    pub fn zero(self: &Arc<Self>) -> HeckeElt<C> {
        HeckeElt { alg: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(self: &Arc<Self>) -> HeckeElt<C> {
        self.t(0)
    }

    pub fn t(self: &Arc<Self>, w: u32) -> HeckeElt<C> {
        self.term(w, C::one())
    }

    pub fn term(self: &Arc<Self>, w: u32, c: C) -> HeckeElt<C> {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        HeckeElt { alg: self.clone(), terms }
    }

    pub fn scalar(self: &Arc<Self>, c: C) -> HeckeElt<C> {
        self.term(0, c)
    }

    pub fn t_basis(self: &Arc<Self>, w: &GroupElement) -> Result<HeckeElt<C>> {
        let idx = self.table.index_of(w).ok_or_else(|| Error::Invalid(format!("{w} is not an element of {}", self.datum().name)))?;
        Ok(self.t(idx))
    }

    pub fn t_word(self: &Arc<Self>, word: &[usize]) -> HeckeElt<C> {
        let mut x = self.one();
        for &s in word {
            x = x.mul_simple_right(s);
        }
        x
    }

    pub fn generator(self: &Arc<Self>, s: usize) -> HeckeElt<C> {
        self.t(self.table.lmul(0, s))
    }
}

/// A sparse element Σ c_w T_w; keys are element indices of the algebra's
/// table, so iteration order is deterministic.
#[derive(Clone)]
pub struct HeckeElt<C: Ring> {
    alg: Arc<HeckeAlgebra<C>>,
    terms: BTreeMap<u32, C>,
}

fn add_into<C: Ring>(m: &mut BTreeMap<u32, C>, w: u32, c: C) {
    if c.is_zero() {
        return;
    }
    match m.get_mut(&w) {
        Some(x) => {
            *x = x.add(&c);
            if x.is_zero() {
                m.remove(&w);
            }
        }
        None => {
            m.insert(w, c);
        }
    }
}

impl<C: Ring> HeckeElt<C> {
    pub fn algebra(&self) -> &Arc<HeckeAlgebra<C>> {
        &self.alg
    }

    pub fn terms(&self) -> &BTreeMap<u32, C> {
        &self.terms
    }

    pub fn coeff(&self, w: u32) -> C {
        self.terms.get(&w).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &o.alg) {
            Ok(())
        } else {
            Err(Error::Invalid("Hecke elements belong to different algebras".into()))
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut terms = self.terms.clone();
        for (w, c) in &o.terms {
            add_into(&mut terms, *w, c.clone());
        }
        Ok(HeckeElt { alg: self.alg.clone(), terms })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::one().neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        let terms = self.terms.iter().map(|(w, x)| (*w, x.mul(c))).filter(|(_, x)| !x.is_zero()).collect();
        HeckeElt { alg: self.alg.clone(), terms }
    }

    /// x·T_s
    pub fn mul_simple_right(&self, s: usize) -> Self {
        let t = &self.alg.table;
        let mut out = BTreeMap::new();
        for (&w, c) in &self.terms {
            let ws = t.rmul(w, s);
            if t.length(ws) > t.length(w) {
                add_into(&mut out, ws, c.clone());
            } else {
                add_into(&mut out, w, c.mul(&self.alg.one_minus_q[s]));
                add_into(&mut out, ws, c.mul(&self.alg.q[s]));
            }
        }
        HeckeElt { alg: self.alg.clone(), terms: out }
    }

    /// T_s·x
    pub fn mul_simple_left(&self, s: usize) -> Self {
        let t = &self.alg.table;
        let mut out = BTreeMap::new();
        for (&w, c) in &self.terms {
            let sw = t.lmul(w, s);
            if t.length(sw) > t.length(w) {
                add_into(&mut out, sw, c.clone());
            } else {
                add_into(&mut out, w, c.mul(&self.alg.one_minus_q[s]));
                add_into(&mut out, sw, c.mul(&self.alg.q[s]));
            }
        }
        HeckeElt { alg: self.alg.clone(), terms: out }
    }

    /// x·T_v, along a reduced word of v.
    pub fn mul_basis_right(&self, v: u32) -> Self {
        let mut x = self.clone();
        for s in self.alg.table.word(v) {
            x = x.mul_simple_right(s);
        }
        x
    }

    pub fn multiply(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let parts: Vec<BTreeMap<u32, C>> = o
            .terms
            .par_iter()
            .map(|(&v, c)| {
                let p = self.mul_basis_right(v);
                p.terms.into_iter().map(|(w, x)| (w, x.mul(c))).collect()
            })
            .collect();
        let mut terms = BTreeMap::new();
        for p in parts {
            for (w, c) in p {
                add_into(&mut terms, w, c);
            }
        }
        Ok(HeckeElt { alg: self.alg.clone(), terms })
    }

    pub fn map_coeffs<D: Ring>(&self, alg: &Arc<HeckeAlgebra<D>>, f: impl Fn(&C) -> Result<D>) -> Result<HeckeElt<D>> {
        if alg.table.size() != self.alg.table.size() {
            return Err(Error::Invalid("target algebra has a different group".into()));
        }
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            add_into(&mut terms, *w, f(c)?);
        }
        Ok(HeckeElt { alg: alg.clone(), terms })
    }

    /// Decompose as Σ_d z_d·T_d over minimal representatives d of the
    /// cosets W_J·d, with z_d in H(W_J).
    pub fn coset_decompose(&self, sub: &Arc<HeckeAlgebra<C>>) -> Result<BTreeMap<u32, HeckeElt<C>>> {
        let j = sub.embedding.as_ref().ok_or_else(|| Error::Invalid("not a parabolic subalgebra".into()))?;
        let t = &self.alg.table;
        let mut out: BTreeMap<u32, BTreeMap<u32, C>> = BTreeMap::new();
        for (&w, c) in &self.terms {
            let mut cur = w;
            let mut u_word = Vec::new();
            'strip: loop {
                for (local, &s) in j.iter().enumerate() {
                    if t.is_left_descent(cur, s) {
                        u_word.push(local);
                        cur = t.lmul(cur, s);
                        continue 'strip;
                    }
                }
                break;
            }
            let u = sub.table.from_word(&u_word);
            add_into(out.entry(cur).or_default(), u, c.clone());
        }
        Ok(out.into_iter().filter(|(_, m)| !m.is_empty()).map(|(d, m)| (d, HeckeElt { alg: sub.clone(), terms: m })).collect())
    }

    /// Reassemble Σ_d embed(z_d)·T_d.
    pub fn reassemble(ambient: &Arc<HeckeAlgebra<C>>, parts: &BTreeMap<u32, HeckeElt<C>>) -> Result<HeckeElt<C>> {
        let mut acc = ambient.zero();
        for (&d, z) in parts {
            let e = z.parabolic_embed(ambient)?;
            acc = acc.add(&e.mul_basis_right(d))?;
        }
        Ok(acc)
    }

    /// The image of an element of H(W_J) in the ambient algebra.
    pub fn parabolic_embed(&self, ambient: &Arc<HeckeAlgebra<C>>) -> Result<HeckeElt<C>> {
        let j = self.alg.embedding.as_ref().ok_or_else(|| Error::Invalid("not a parabolic subalgebra".into()))?;
        let mut terms = BTreeMap::new();
        for (&u, c) in &self.terms {
            let word: Vec<usize> = self.alg.table.word(u).into_iter().map(|s| j[s]).collect();
            add_into(&mut terms, ambient.table.from_word(&word), c.clone());
        }
        Ok(HeckeElt { alg: ambient.clone(), terms })
    }

    fn ordered_terms(&self) -> Vec<(Vec<usize>, &C)> {
        let t = &self.alg.table;
        let mut v: Vec<(Vec<usize>, &C)> = self.terms.iter().map(|(&w, c)| (t.word(w), c)).collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(&b.0)));
        v
    }
}

impl<C: Coeff> HeckeElt<C> {
    /// One line "coeff | word" per term, shortest words first.
    pub fn serialize(&self) -> String {
        let d = self.alg.datum();
        let mut out = String::new();
        for (w, c) in self.ordered_terms() {
            out.push_str(&format!("{} | {}\n", c, d.word_text(&w)));
        }
        out
    }

    pub fn deserialize(alg: &Arc<HeckeAlgebra<C>>, text: &str) -> Result<Self> {
        let d = alg.datum();
        let mut terms = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (c, w) = line.split_once('|').ok_or_else(|| Error::Parse { line: i + 1, msg: "expected `coeff | word`".into() })?;
            let coeff = C::parse_coeff(c.trim(), &d.vars).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
            let word = d.parse_word(w).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
            let g = GroupElement::from_word(d, &word);
            let idx = alg.table.index_of(&g).ok_or_else(|| Error::Parse { line: i + 1, msg: "word outside the group".into() })?;
            add_into(&mut terms, idx, coeff);
        }
        Ok(HeckeElt { alg: alg.clone(), terms })
    }
}

impl<C: Ring> PartialEq for HeckeElt<C> {
    fn eq(&self, o: &Self) -> bool {
        self.alg.table.size() == o.alg.table.size() && self.terms == o.terms
    }
}

impl<C: Coeff> fmt::Display for HeckeElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let d = self.alg.datum();
        let mut ts = self.ordered_terms();
        ts.reverse();
        let mut out = String::new();
        for (k, (w, c)) in ts.iter().enumerate() {
            let word = format!("[{}]", d.word_text(w));
            let text = c.to_string();
            let (neg, body) = if c.is_atomic() && text.starts_with('-') { (true, text[1..].to_string()) } else { (false, text) };
            let body = if body == "1" {
                word
            } else if c.is_atomic() {
                format!("{body}·{word}")
            } else {
                format!("({body})·{word}")
            };
            if k == 0 {
                out.push_str(if neg { "-" } else { "" });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        write!(f, "{out}")
    }
}

impl<C: Ring> fmt::Debug for HeckeElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.alg.table;
        f.debug_map().entries(self.terms.iter().map(|(&w, c)| (self.alg.datum().word_text(&t.word(w)), c))).finish()
    }
}

/// Coefficient-wise specialization of a generic element; `values` gives one
/// nonzero number per reflection class.
pub fn specialize_elt(x: &HeckeElt<LaurentPoly>, alg: &Arc<HeckeAlgebra<CycNumber>>, values: &[CycNumber]) -> Result<HeckeElt<CycNumber>> {
    if values.iter().any(|v| v.is_zero()) {
        return Err(Error::Invalid("Hecke parameters must be nonzero".into()));
    }
    let asg: Vec<Option<CycNumber>> = values.iter().cloned().map(Some).collect();
    x.map_coeffs(alg, |c| {
        let s = c.substitute(&asg)?;
        s.constant_value().ok_or_else(|| Error::Invalid("unassigned variable".into()))
    })
}

/// The parameter inversion q ↦ q⁻¹ paired with T_s ↦ −q_s⁻¹·T_s... used to
/// compare against tables written with the relation (T_s − q_s)(T_s + 1) = 0:
/// under T'_s = −T_s our relation becomes (T'_s + 1)(T'_s − q_s) = 0.
pub fn to_literature_convention(x: &HeckeElt<LaurentPoly>) -> HeckeElt<LaurentPoly> {
    let t = &x.alg.table;
    let terms = x
        .terms
        .iter()
        .map(|(&w, c)| (w, if t.length(w) % 2 == 1 { c.neg() } else { c.clone() }))
        .collect();
    HeckeElt { alg: x.alg.clone(), terms }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> Arc<HeckeAlgebra<LaurentPoly>> {
        HeckeAlgebra::generic(&Arc::new(CoxeterDatum::build(s).unwrap())).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let h = alg("A2");
        let ts = h.generator(0);
        let sq = ts.multiply(&ts).unwrap();
        assert_eq!(sq.to_string(), "(1-q)·[s1] + q·[]");
        let back = HeckeElt::deserialize(&h, &sq.serialize()).unwrap();
        assert_eq!(back, sq);
    }

    #[test]
    fn braid_relations() {
        for s in ["A3", "B3", "H3", "I2(5)", "A1xA2"] {
            let h = alg(s);
            let d = h.datum().clone();
            for a in 0..d.rank() {
                for b in 0..d.rank() {
                    if a == b {
                        continue;
                    }
                    let m = d.coxeter_matrix[a][b] as usize;
                    let w1: Vec<usize> = (0..m).map(|i| if i % 2 == 0 { a } else { b }).collect();
                    let w2: Vec<usize> = (0..m).map(|i| if i % 2 == 0 { b } else { a }).collect();
                    let x: HeckeElt<LaurentPoly> = w1.iter().fold(h.one(), |acc, &s| acc.multiply(&h.generator(s)).unwrap());
                    let y: HeckeElt<LaurentPoly> = w2.iter().fold(h.one(), |acc, &s| acc.multiply(&h.generator(s)).unwrap());
                    assert_eq!(x, y);
                    assert_eq!(x.len(), 1);
                }
            }
        }
    }

    #[test]
    fn coset_round_trip() {
        let h = alg("B3");
        let sub = h.parabolic(&[0, 1]).unwrap();
        let x = h.t(h.table.longest()).multiply(&h.t(h.table.longest())).unwrap();
        let parts = x.coset_decompose(&sub).unwrap();
        assert_eq!(HeckeElt::reassemble(&h, &parts).unwrap(), x);
    }

    #[test]
    fn a1_square_components() {
        let h = alg("A1");
        let sub = h.parabolic(&[]).unwrap();
        let x = h.generator(0).multiply(&h.generator(0)).unwrap();
        assert_eq!(x.coeff(0).to_string(), "q");
        assert_eq!(x.coeff(1).to_string(), "1-q");
        let parts = x.coset_decompose(&sub).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&0].to_string(), "q·[]");
    }
}
