use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::datum::CoxeterDatum;

/// A group element stored as its permutation of the root set.
#[derive(Clone)]
pub struct GroupElement {
    datum: Arc<CoxeterDatum>,
    perm: Arc<[u16]>,
    length: usize,
    word: Arc<[usize]>,
}

impl GroupElement {
    pub fn identity(datum: &Arc<CoxeterDatum>) -> GroupElement {
        let perm: Vec<u16> = (0..datum.num_roots() as u16).collect();
        GroupElement { datum: datum.clone(), perm: perm.into(), length: 0, word: Arc::from(vec![]) }
    }

    pub fn simple(datum: &Arc<CoxeterDatum>, s: usize) -> GroupElement {
        GroupElement::from_word(datum, &[s])
    }

    /// Product of the simple reflections in `word` (need not be reduced).
    pub fn from_word(datum: &Arc<CoxeterDatum>, word: &[usize]) -> GroupElement {
        let mut perm: Vec<u16> = (0..datum.num_roots() as u16).collect();
        for &s in word {
            // (w s)[k] = w[s[k]]
            let sp = &datum.sperm[s];
            perm = sp.iter().map(|&k| perm[k as usize]).collect();
        }
        GroupElement::from_perm(datum, perm)
    }

    pub fn parse(datum: &Arc<CoxeterDatum>, s: &str) -> Result<GroupElement> {
        let w = datum.parse_word(s)?;
        Ok(GroupElement::from_word(datum, &w))
    }

    pub(crate) fn from_perm(datum: &Arc<CoxeterDatum>, perm: Vec<u16>) -> GroupElement {
        let npos = datum.npos;
        let length = perm[..npos].iter().filter(|&&k| k as usize >= npos).count();
        // reduced word by stripping right descents
        let mut word = Vec::with_capacity(length);
        let mut cur = perm.clone();
        while let Some(s) = (0..datum.rank()).find(|&s| cur[s] as usize >= npos) {
            word.push(s);
            let sp = &datum.sperm[s];
            cur = sp.iter().map(|&k| cur[k as usize]).collect();
        }
        word.reverse();
        GroupElement { datum: datum.clone(), perm: perm.into(), length, word: word.into() }
    }

    /// Build from a permutation whose reduced word is already known.
    pub(crate) fn from_parts(datum: &Arc<CoxeterDatum>, perm: Vec<u16>, word: Vec<usize>) -> GroupElement {
        debug_assert_eq!(perm[..datum.npos].iter().filter(|&&k| k as usize >= datum.npos).count(), word.len());
        GroupElement { datum: datum.clone(), length: word.len(), perm: perm.into(), word: word.into() }
    }

    pub fn datum(&self) -> &Arc<CoxeterDatum> {
        &self.datum
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of root `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.perm[k] as usize
    }

    fn check_same(&self, o: &GroupElement) -> Result<()> {
        if Arc::ptr_eq(&self.datum, &o.datum) || self.datum.name == o.datum.name && self.datum.coxeter_matrix == o.datum.coxeter_matrix {
            Ok(())
        } else {
            Err(Error::Invalid(format!("elements of {} and {} cannot be combined", self.datum.name, o.datum.name)))
        }
    }

    pub fn multiply(&self, o: &GroupElement) -> Result<GroupElement> {
        self.check_same(o)?;
        let perm: Vec<u16> = o.perm.iter().map(|&k| self.perm[k as usize]).collect();
        Ok(GroupElement::from_perm(&self.datum, perm))
    }

    pub fn inverse(&self) -> GroupElement {
        let mut perm = vec![0u16; self.perm.len()];
        for (k, &v) in self.perm.iter().enumerate() {
            perm[v as usize] = k as u16;
        }
        GroupElement::from_perm(&self.datum, perm)
    }

    pub fn lmul_simple(&self, s: usize) -> GroupElement {
        let sp = &self.datum.sperm[s];
        let perm: Vec<u16> = self.perm.iter().map(|&k| sp[k as usize]).collect();
        GroupElement::from_perm(&self.datum, perm)
    }

    pub fn rmul_simple(&self, s: usize) -> GroupElement {
        let sp = &self.datum.sperm[s];
        let perm: Vec<u16> = sp.iter().map(|&k| self.perm[k as usize]).collect();
        GroupElement::from_perm(&self.datum, perm)
    }

    /// s is a right descent iff w(α_s) < 0.
    pub fn is_right_descent(&self, s: usize) -> bool {
        !self.datum.is_positive(self.perm[s] as usize)
    }

    /// s is a left descent iff w⁻¹(α_s) < 0.
    pub fn is_left_descent(&self, s: usize) -> bool {
        let k = self.perm.iter().position(|&v| v as usize == s).unwrap();
        !self.datum.is_positive(k)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.datum.rank()).filter(|&s| self.is_right_descent(s)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.datum.rank()).filter(|&s| self.is_left_descent(s)).collect()
    }

    /// Length split by reflection class: the number of positive roots of
    /// each class sent negative.
    pub fn class_lengths(&self) -> Vec<u32> {
        let d = &self.datum;
        let mut v = vec![0u32; d.num_classes()];
        for k in 0..d.npos {
            if !d.is_positive(self.perm[k] as usize) {
                v[d.root_class[k]] += 1;
            }
        }
        v
    }

    /// Conjugate w s w⁻¹ of a simple reflection, if it is again simple.
    pub fn conjugate_simple(&self, s: usize) -> Option<usize> {
        let k = self.perm[s] as usize;
        if k < self.datum.rank() {
            Some(k)
        } else {
            None
        }
    }

    pub fn word_text(&self) -> String {
        self.datum.word_text(&self.word)
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, o: &Self) -> bool {
        self.perm == o.perm
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.word_text())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.word_text())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> Arc<CoxeterDatum> {
        Arc::new(CoxeterDatum::build(s).unwrap())
    }

    #[test]
    fn basic_products() {
        let a2 = datum("A2");
        let s1 = GroupElement::simple(&a2, 0);
        let s2 = GroupElement::simple(&a2, 1);
        let w = s1.multiply(&s2).unwrap();
        assert_eq!(w.length(), 2);
        assert!(w.multiply(&w.inverse()).unwrap().is_identity());
        let b2 = datum("B2");
        let t = GroupElement::from_word(&b2, &[0, 1]);
        let mut p = GroupElement::identity(&b2);
        for _ in 0..4 {
            p = p.multiply(&t).unwrap();
        }
        assert!(p.is_identity());
    }

    #[test]
    fn reduced_words_and_descents() {
        let a3 = datum("A3");
        let w = GroupElement::from_word(&a3, &[0, 1, 0, 2, 1, 0]);
        assert_eq!(w.length(), 6);
        assert_eq!(w.right_descents(), vec![0, 1, 2]);
        assert_eq!(w.left_descents(), vec![0, 1, 2]);
        let again = GroupElement::from_word(&a3, w.word());
        assert_eq!(again, w);
        let e6 = datum("E6");
        let mut w0 = GroupElement::identity(&e6);
        while let Some(s) = (0..6).find(|&s| !w0.is_right_descent(s)) {
            w0 = w0.rmul_simple(s);
        }
        assert_eq!(w0.length(), 36);
    }

    #[test]
    fn mismatched_datum() {
        let a = GroupElement::simple(&datum("A2"), 0);
        let b = GroupElement::simple(&datum("B2"), 0);
        assert!(a.multiply(&b).is_err());
    }
}
