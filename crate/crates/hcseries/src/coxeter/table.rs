//! Full enumeration of a finite Coxeter group with multiplication tables by
//! simple reflections.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::datum::CoxeterDatum;
use super::element::GroupElement;

pub const DEFAULT_MAX_ORDER: usize = 500_000;

/// Elements are numbered in BFS order, so index 0 is the identity and
/// lengths are non-decreasing. Element `w` (w ≠ 1) equals `first[w]·parent[w]`
/// with lengths adding.
pub struct ElementTable {
    pub datum: Arc<CoxeterDatum>,
    rank: usize,
    len: Vec<u16>,
    first: Vec<u8>,
    parent: Vec<u32>,
    lmul: Vec<u32>,
    rmul: Vec<u32>,
    inv: Vec<u32>,
    class_len: Vec<[u16; 4]>,
    simple_images: Vec<u16>,
    index: HashMap<u64, u32>,
}

fn key_of(images: &[u16]) -> u64 {
    images.iter().fold(0u64, |acc, &x| (acc << 8) | x as u64)
}

impl ElementTable {
    pub fn new(datum: &Arc<CoxeterDatum>) -> Result<ElementTable> {
        Self::with_bound(datum, DEFAULT_MAX_ORDER)
    }

    pub fn with_bound(datum: &Arc<CoxeterDatum>, max_order: usize) -> Result<ElementTable> {
        let r = datum.rank();
        let order = datum.order();
        if order as u128 > max_order as u128 {
            return Err(Error::Resource(format!("|{}| = {order} exceeds the element-table bound {max_order}", datum.name)));
        }
        if r > 8 || datum.num_roots() > 256 {
            return Err(Error::Resource(format!("{}: rank or root count too large for packed keys", datum.name)));
        }
        let n = order as usize;
        let mut len = Vec::with_capacity(n);
        let mut first = Vec::with_capacity(n);
        let mut parent = Vec::with_capacity(n);
        let mut class_len: Vec<[u16; 4]> = Vec::with_capacity(n);
        let mut imgs: Vec<u16> = Vec::with_capacity(n * r);
        let mut lmul = vec![u32::MAX; n * r];
        let mut index: HashMap<u64, u32> = HashMap::with_capacity(n);
        let id: Vec<u16> = (0..r as u16).collect();
        index.insert(key_of(&id), 0);
        imgs.extend_from_slice(&id);
        len.push(0);
        first.push(u8::MAX);
        parent.push(u32::MAX);
        class_len.push([0; 4]);
        let mut k = 0usize;
        let mut scratch = vec![0u16; r];
        while k < len.len() {
            for s in 0..r {
                let sp = &datum.sperm[s];
                for i in 0..r {
                    scratch[i] = sp[imgs[k * r + i] as usize];
                }
                let key = key_of(&scratch);
                let j = match index.get(&key) {
                    Some(&j) => j,
                    None => {
                        let j = len.len() as u32;
                        if j as usize >= n {
                            return Err(Error::Invariant(format!("{}: enumeration exceeds the classified order", datum.name)));
                        }
                        index.insert(key, j);
                        imgs.extend_from_slice(&scratch);
                        len.push(len[k] + 1);
                        first.push(s as u8);
                        parent.push(k as u32);
                        let mut cl = class_len[k];
                        cl[datum.node_class[s]] += 1;
                        class_len.push(cl);
                        j
                    }
                };
                lmul[k * r + s] = j;
            }
            k += 1;
        }
        if len.len() != n {
            return Err(Error::Invariant(format!("{}: enumerated {} elements, expected {n}", datum.name, len.len())));
        }
        let mut t = ElementTable {
            datum: datum.clone(),
            rank: r,
            len,
            first,
            parent,
            lmul,
            rmul: vec![],
            inv: vec![0; n],
            class_len,
            simple_images: imgs,
            index,
        };
        for w in 0..n {
            // s_l ... s_1 applied to the identity by left multiplication
            let mut x = 0u32;
            let mut cur = w as u32;
            while cur != 0 {
                x = t.lmul(x, t.first[cur as usize] as usize);
                cur = t.parent[cur as usize];
            }
            t.inv[w] = x;
        }
        let mut rmul = vec![0u32; n * r];
        for w in 0..n {
            let wi = t.inv[w] as usize;
            for s in 0..r {
                rmul[w * r + s] = t.inv[t.lmul[wi * r + s] as usize];
            }
        }
        t.rmul = rmul;
        Ok(t)
    }

    pub fn size(&self) -> usize {
        self.len.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn length(&self, w: u32) -> usize {
        self.len[w as usize] as usize
    }

    #[inline]
    pub fn lmul(&self, w: u32, s: usize) -> u32 {
        self.lmul[w as usize * self.rank + s]
    }

    #[inline]
    pub fn rmul(&self, w: u32, s: usize) -> u32 {
        self.rmul[w as usize * self.rank + s]
    }

    #[inline]
    pub fn inverse(&self, w: u32) -> u32 {
        self.inv[w as usize]
    }

    pub fn class_lengths(&self, w: u32) -> &[u16] {
        &self.class_len[w as usize][..self.datum.num_classes()]
    }

    /// A reduced word (left to right).
    pub fn word(&self, w: u32) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while cur != 0 {
            out.push(self.first[cur as usize] as usize);
            cur = self.parent[cur as usize];
        }
        out
    }

    pub fn is_right_descent(&self, w: u32, s: usize) -> bool {
        self.len[self.rmul(w, s) as usize] < self.len[w as usize]
    }

    pub fn is_left_descent(&self, w: u32, s: usize) -> bool {
        self.len[self.lmul(w, s) as usize] < self.len[w as usize]
    }

    pub fn from_word(&self, word: &[usize]) -> u32 {
        word.iter().fold(0u32, |w, &s| self.rmul(w, s))
    }

    pub fn multiply(&self, u: u32, v: u32) -> u32 {
        self.word(v).into_iter().fold(u, |w, s| self.rmul(w, s))
    }

    pub fn longest(&self) -> u32 {
        (self.size() - 1) as u32
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<u32> {
        let imgs: Vec<u16> = (0..self.rank).map(|i| g.perm()[i]).collect();
        self.index.get(&key_of(&imgs)).copied()
    }

    pub fn element(&self, w: u32) -> GroupElement {
        GroupElement::from_word(&self.datum, &self.word(w))
    }

    /// Images of the simple roots under w.
    pub fn simple_images(&self, w: u32) -> &[u16] {
        &self.simple_images[w as usize * self.rank..(w as usize + 1) * self.rank]
    }
}
