//! z-elements of corank-one parabolic pairs W_J ⊂ W: the coset expansion
//! T_x² = Σ_d z_d·T_d with x = w0·w0', and their closed forms in types A, B.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::arith::linalg::Matrix;
use crate::arith::{LaurentPoly, Ring};
use crate::coxeter::{longest_element, CoxeterDatum, GroupElement};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElt};

/// Combinatorial data of a corank-one pair.
#[derive(Clone, Debug)]
pub struct CorankOne {
    pub datum: Arc<CoxeterDatum>,
    pub j: Vec<usize>,
    pub extra: usize,
    /// w0·w0'
    pub x: GroupElement,
    /// σ on local indices of J: x·s_j·x = s_{σ(j)}
    pub sigma: Vec<usize>,
}

impl CorankOne {
    pub fn new(datum: &Arc<CoxeterDatum>, j: &[usize]) -> Result<Self> {
        let mut sorted = j.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != j.len() || j.iter().any(|&s| s >= datum.rank()) {
            return Err(Error::Invalid(format!("bad parabolic subset {j:?} of {}", datum.name)));
        }
        if j.len() + 1 != datum.rank() {
            return Err(Error::Invalid(format!("{j:?} is not of corank 1 in {}", datum.name)));
        }
        let extra = (0..datum.rank()).find(|s| !j.contains(s)).unwrap();
        let all: Vec<usize> = (0..datum.rank()).collect();
        let w0 = longest_element(datum, &all);
        let w0p = longest_element(datum, j);
        let x = w0.multiply(&w0p)?;
        let mut sigma = Vec::with_capacity(j.len());
        for &s in j {
            let t = x.conjugate_simple(s).and_then(|t| j.iter().position(|&u| u == t));
            match t {
                Some(t) => sigma.push(t),
                None => {
                    return Err(Error::Invalid(format!("W_J for J = {j:?} is self-normalizing in {}", datum.name)));
                }
            }
        }
        Ok(CorankOne { datum: datum.clone(), j: j.to_vec(), extra, x, sigma })
    }

    pub fn sigma_is_trivial(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }
}

#[derive(Clone, Debug)]
pub struct ZPair<C: Ring> {
    pub z_1: HeckeElt<C>,
    pub z_top: HeckeElt<C>,
    /// class-graded length of w0·w0'
    pub l_vector: Vec<u32>,
    pub sigma: Vec<usize>,
}

/// Full coset decomposition of T_x², keyed by ambient element index of d.
pub fn z_elements<C: Ring>(alg: &Arc<HeckeAlgebra<C>>, j: &[usize]) -> Result<(Arc<HeckeAlgebra<C>>, BTreeMap<u32, HeckeElt<C>>)> {
    let pair = CorankOne::new(alg.datum(), j)?;
    let sub = alg.parabolic(j)?;
    let tx = alg.t_basis(&pair.x)?;
    let sq = tx.multiply(&tx)?;
    Ok((sub.clone(), sq.coset_decompose(&sub)?))
}

pub fn z_pair<C: Ring>(alg: &Arc<HeckeAlgebra<C>>, j: &[usize]) -> Result<ZPair<C>> {
    let pair = CorankOne::new(alg.datum(), j)?;
    let (sub, parts) = z_elements(alg, j)?;
    let xi = alg.table.index_of(&pair.x).unwrap();
    let z_1 = parts.get(&0).cloned().unwrap_or_else(|| sub.zero());
    let z_top = parts.get(&xi).cloned().unwrap_or_else(|| sub.zero());
    let l_vector = pair.x.class_lengths();
    // z_1 = ∏ q_c^{l_c}
    let expect = pair.x.word().iter().fold(C::one(), |acc, &s| acc.mul(alg.param(s)));
    if z_1 != sub.scalar(expect) {
        return Err(Error::Invariant(format!("z_1 = {:?} is not q^l(x)", z_1.terms())));
    }
    if !sigma_twist_check(&z_top, &pair.sigma) {
        return Err(Error::Invariant("z_top is not σ-twisted central".into()));
    }
    if apply_sigma(&z_top, &pair.sigma) != z_top {
        return Err(Error::Invariant("z_top is not σ-invariant".into()));
    }
    Ok(ZPair { z_1, z_top, l_vector, sigma: pair.sigma })
}

/// The image of z under the diagram automorphism σ of the subalgebra.
pub fn apply_sigma<C: Ring>(z: &HeckeElt<C>, sigma: &[usize]) -> HeckeElt<C> {
    let alg = z.algebra();
    let mut out = alg.zero();
    for (&w, c) in z.terms() {
        let word: Vec<usize> = alg.table.word(w).into_iter().map(|s| sigma[s]).collect();
        out = out.add(&alg.term(alg.table.from_word(&word), c.clone())).unwrap();
    }
    out
}

/// T_s·z = z·T_{σ(s)} for every generator s.
pub fn sigma_twist_check<C: Ring>(z: &HeckeElt<C>, sigma: &[usize]) -> bool {
    (0..sigma.len()).all(|s| z.mul_simple_left(s) == z.mul_simple_right(sigma[s]))
}

fn perm_word(mut w: Vec<usize>) -> Vec<usize> {
    let mut word = Vec::new();
    while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
        w.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    word
}

fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn rec(w: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        match w.iter().position(|x| x.is_none()) {
            None => out.push(w.iter().map(|x| x.unwrap()).collect()),
            Some(i) => {
                w[i] = Some(i);
                rec(w, out);
                for j in i + 1..w.len() {
                    if w[j].is_none() {
                        w[i] = Some(j);
                        w[j] = Some(i);
                        rec(w, out);
                        w[j] = None;
                    }
                }
                w[i] = None;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![None; n], &mut out);
    out
}

fn q_monomial(vars: &Arc<[String]>, class: usize, k: i32) -> LaurentPoly {
    let mut e = [0; crate::arith::laurent::MAX_VARS];
    e[class] = k;
    LaurentPoly::monomial(vars, e, crate::arith::CycNumber::one())
}

/// T_x² in H_q(S_{2e}) as the sum over X_e of (1−q)^{a(w)} q^{b(w)} T_w.
pub fn type_a_closed_form(e: usize) -> Result<HeckeElt<LaurentPoly>> {
    if e == 0 {
        return Err(Error::Invalid("e must be positive".into()));
    }
    let d = Arc::new(CoxeterDatum::build(&format!("A{}", 2 * e - 1))?);
    let alg = HeckeAlgebra::generic(&d)?;
    let q = q_monomial(&d.vars, 0, 1);
    let omq = LaurentPoly::one().sub(&q);
    let mut acc = alg.zero();
    for w in involutions(2 * e) {
        // 0-based: positions < e form the first block
        let ok = (0..e).all(|i| w[i] == i || w[i] >= e) && (e..2 * e).all(|i| w[i] == i || w[i] < e);
        if !ok {
            continue;
        }
        let a = (0..e).filter(|&i| w[i] >= e).count() as u64;
        let mut b: i64 = 0;
        for i in 0..e {
            for jj in i + 1..e {
                if w[i] > w[jj] {
                    b -= 1;
                }
            }
            b += if w[i] == i { e as i64 } else { 2 * e as i64 - (w[i] as i64 + 1) };
        }
        let c = omq.pow(a).mul(&q_monomial(&d.vars, 0, b as i32));
        acc = acc.add(&alg.t_word(&perm_word(w)).scale(&c))?;
    }
    Ok(acc)
}

/// (1−q)^e q^{e(e−1)/2} Σ_{w ∈ S_e} q^{−l(w)} T_w ⊗ T_{w⁻¹} in H(S_e × S_e).
pub fn type_a_z_top(sub: &Arc<HeckeAlgebra<LaurentPoly>>, e: usize) -> Result<HeckeElt<LaurentPoly>> {
    if sub.datum().rank() != 2 * e - 2 {
        return Err(Error::Invalid("subalgebra is not of type S_e × S_e".into()));
    }
    let vars = sub.datum().vars.clone();
    let q = q_monomial(&vars, 0, 1);
    let pref = LaurentPoly::one().sub(&q).pow(e as u64).mul(&q_monomial(&vars, 0, (e * (e - 1) / 2) as i32));
    let mut acc = sub.zero();
    for w in permutations(e) {
        let word = perm_word(w.clone());
        let mut inv = vec![0; e];
        for (i, &x) in w.iter().enumerate() {
            inv[x] = i;
        }
        let winv: Vec<usize> = perm_word(inv).into_iter().map(|s| s + e - 1).collect();
        let mut full = word.clone();
        full.extend(winv);
        let c = pref.mul(&q_monomial(&vars, 0, -(word.len() as i32)));
        acc = acc.add(&sub.t_word(&full).scale(&c))?;
    }
    Ok(acc)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// The pair (q^{l(x)}, z_top) for B_n ⊂ B_{n+1} from the closed form
/// z_top = (1−p)q^n + (1−q)² Σ_i q^{n−i} T_{t_i}.
pub fn type_b_closed_form(n: usize) -> Result<(Arc<HeckeAlgebra<LaurentPoly>>, HeckeElt<LaurentPoly>, HeckeElt<LaurentPoly>)> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let d = Arc::new(CoxeterDatum::build(&format!("B{}", n + 1))?);
    let alg = HeckeAlgebra::generic(&d)?;
    let sub = alg.parabolic(&(0..n).collect::<Vec<_>>())?;
    let vars = d.vars.clone();
    let p = q_monomial(&vars, 0, 1);
    let q = q_monomial(&vars, 1, 1);
    let z1 = sub.scalar(p.mul(&q_monomial(&vars, 1, 2 * n as i32)));
    let omq2 = LaurentPoly::one().sub(&q).pow(2);
    let mut z = sub.scalar(LaurentPoly::one().sub(&p).mul(&q_monomial(&vars, 1, n as i32)));
    for i in 1..=n {
        // t_i = s_{i−1} ⋯ s_1 s_0 s_1 ⋯ s_{i−1}
        let mut word: Vec<usize> = (1..i).rev().collect();
        word.push(0);
        word.extend(1..i);
        let c = omq2.mul(&q_monomial(&vars, 1, (n - i) as i32));
        z = z.add(&sub.t_word(&word).scale(&c))?;
    }
    Ok((sub, z1, z))
}

/// The right coset module ρ ⊗_{H(W_J)} H(W) on minimal representatives of
/// W_J\W, used to evaluate ρ(z_top) without expanding T_x² in H(W).
pub struct CosetModule {
    pub pair: CorankOne,
    reps: Vec<GroupElement>,
    moves: Vec<Vec<Move>>,
    x_index: usize,
}

#[derive(Clone, Copy, Debug)]
enum Move {
    Up(usize),
    /// d·s = t·d with t ∈ J (local index)
    Inner(usize),
    Down(usize),
}

impl CosetModule {
    pub fn new(datum: &Arc<CoxeterDatum>, j: &[usize]) -> Result<Self> {
        let pair = CorankOne::new(datum, j)?;
        let mut reps = vec![GroupElement::identity(datum)];
        let mut index: HashMap<GroupElement, usize> = HashMap::new();
        index.insert(reps[0].clone(), 0);
        let mut moves: Vec<Vec<Move>> = Vec::new();
        let mut k = 0;
        while k < reps.len() {
            let d = reps[k].clone();
            let mut row = Vec::with_capacity(datum.rank());
            for s in 0..datum.rank() {
                let ds = d.rmul_simple(s);
                let mv = if ds.length() < d.length() {
                    Move::Down(*index.get(&ds).ok_or_else(|| Error::Invariant("shorter coset representative missing".into()))?)
                } else if j.iter().any(|&t| ds.is_left_descent(t)) {
                    let t = d.apply(s);
                    let local = j.iter().position(|&u| u == t).ok_or_else(|| Error::Invariant("Deodhar condition failed".into()))?;
                    Move::Inner(local)
                } else {
                    let n = match index.get(&ds) {
                        Some(&n) => n,
                        None => {
                            reps.push(ds.clone());
                            index.insert(ds, reps.len() - 1);
                            reps.len() - 1
                        }
                    };
                    Move::Up(n)
                };
                row.push(mv);
            }
            moves.push(row);
            k += 1;
        }
        let x_index = *index.get(&pair.x).ok_or_else(|| Error::Invariant("w0·w0' is not a minimal coset representative".into()))?;
        Ok(CosetModule { pair, reps, moves, x_index })
    }

    pub fn num_cosets(&self) -> usize {
        self.reps.len()
    }

    /// ρ(z_top) for the representation given by generator matrices `gens`
    /// (indexed by local nodes of J); `params` are the ambient node parameters.
    pub fn z_top_action<C: Ring>(&self, params: &[C], gens: &[Matrix<C>], dim: usize) -> Result<Matrix<C>> {
        if gens.len() != self.pair.j.len() || params.len() != self.pair.datum.rank() {
            return Err(Error::Invalid("representation does not match the parabolic".into()));
        }
        let one_minus: Vec<C> = params.iter().map(|q| C::one().sub(q)).collect();
        let word: Vec<usize> = self.pair.x.word().iter().chain(self.pair.x.word().iter()).copied().collect();
        let mut out = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut state: Vec<Option<Vec<C>>> = vec![None; self.reps.len()];
            let mut e = vec![C::zero(); dim];
            e[i] = C::one();
            state[0] = Some(e);
            for &s in &word {
                let mut next: Vec<Option<Vec<C>>> = vec![None; self.reps.len()];
                for (d, v) in state.iter().enumerate() {
                    let Some(v) = v else { continue };
                    match self.moves[d][s] {
                        Move::Up(n) => acc_into(&mut next[n], v, None),
                        Move::Inner(t) => {
                            let w = vec_mat(v, &gens[t]);
                            acc_into(&mut next[d], &w, None);
                        }
                        Move::Down(n) => {
                            acc_into(&mut next[d], v, Some(&one_minus[s]));
                            acc_into(&mut next[n], v, Some(&params[s]));
                        }
                    }
                }
                state = next;
            }
            out.push(state[self.x_index].take().unwrap_or_else(|| vec![C::zero(); dim]));
        }
        Ok(out)
    }
}

fn acc_into<C: Ring>(slot: &mut Option<Vec<C>>, v: &[C], scale: Option<&C>) {
    let v: Vec<C> = match scale {
        Some(c) => v.iter().map(|x| x.mul(c)).collect(),
        None => v.to_vec(),
    };
    match slot {
        Some(acc) => {
            for (a, b) in acc.iter_mut().zip(v) {
                *a = a.add(&b);
            }
        }
        None => *slot = Some(v),
    }
}

pub fn vec_mat<C: Ring>(v: &[C], m: &Matrix<C>) -> Vec<C> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = vec![C::zero(); cols];
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (c, y) in m[k].iter().enumerate() {
            if !y.is_zero() {
                out[c] = out[c].add(&x.mul(y));
            }
        }
    }
    out
}

pub fn mat_mul<C: Ring>(a: &Matrix<C>, b: &Matrix<C>) -> Matrix<C> {
    a.iter().map(|row| vec_mat(row, b)).collect()
}

/// Product of generator matrices along a word.
pub fn word_action<C: Ring>(gens: &[Matrix<C>], word: &[usize], dim: usize) -> Matrix<C> {
    let mut m: Matrix<C> = (0..dim).map(|i| (0..dim).map(|k| if i == k { C::one() } else { C::zero() }).collect()).collect();
    for &s in word {
        m = mat_mul(&m, &gens[s]);
    }
    m
}

/// Evaluate an element of H(W_J) under a linear character given per node.
pub fn linear_eval<C: Ring>(z: &HeckeElt<C>, node_values: &[C]) -> C {
    let t = &z.algebra().table;
    let mut acc = C::zero();
    for (&w, c) in z.terms() {
        let mut v = c.clone();
        for s in t.word(w) {
            v = v.mul(&node_values[s]);
        }
        acc = acc.add(&v);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic(s: &str) -> Arc<HeckeAlgebra<LaurentPoly>> {
        HeckeAlgebra::generic(&Arc::new(CoxeterDatum::build(s).unwrap())).unwrap()
    }

    #[test]
    fn trivial_in_a1() {
        let h = generic("A1");
        let (_, parts) = z_elements(&h, &[]).unwrap();
        assert_eq!(parts[&0].to_string(), "q·[]");
        assert_eq!(parts[&1].to_string(), "(1-q)·[]");
    }

    #[test]
    fn type_a_matches_brute_force() {
        for e in 1..=3 {
            let closed = type_a_closed_form(e).unwrap();
            let h = closed.algebra().clone();
            let j: Vec<usize> = (0..2 * e - 1).filter(|&s| s != e - 1).collect();
            let p = CorankOne::new(h.datum(), &j).unwrap();
            let tx = h.t_basis(&p.x).unwrap();
            let sq = tx.multiply(&tx).unwrap();
            assert_eq!(closed.terms(), sq.terms(), "e = {e}");
            let zp = z_pair(&h, &j).unwrap();
            let zt = type_a_z_top(zp.z_top.algebra(), e).unwrap();
            assert_eq!(zt.terms(), zp.z_top.terms(), "e = {e}");
        }
    }

    #[test]
    fn type_b_matches_brute_force() {
        for n in 1..=3 {
            let (_, _, z) = type_b_closed_form(n).unwrap();
            let h = generic(&format!("B{}", n + 1));
            let zp = z_pair(&h, &(0..n).collect::<Vec<_>>()).unwrap();
            assert_eq!(z.terms(), zp.z_top.terms(), "n = {n}");
        }
    }

    #[test]
    fn b_constant_term() {
        for n in 1..=3 {
            let h = generic(&format!("B{}", n + 1));
            let zp = z_pair(&h, &(0..n).collect::<Vec<_>>()).unwrap();
            let (_, z1, _) = type_b_closed_form(n).unwrap();
            assert_eq!(zp.z_1.terms(), z1.terms());
            assert_eq!(zp.l_vector, vec![1, 2 * n as u32]);
        }
    }

    #[test]
    fn self_normalizing_rejected() {
        let d = Arc::new(CoxeterDatum::build("A2").unwrap());
        assert!(CorankOne::new(&d, &[0]).is_err());
        assert!(CorankOne::new(&d, &[]).is_err());
    }

    #[test]
    fn sigma_swaps_factors() {
        let d = Arc::new(CoxeterDatum::build("A3").unwrap());
        let p = CorankOne::new(&d, &[0, 2]).unwrap();
        assert_eq!(p.sigma, vec![1, 0]);
        assert_eq!(p.x.length(), 4);
    }

    #[test]
    fn coset_module_matches_expansion() {
        // linear characters on B2 ⊂ B3
        let h = generic("B3");
        let zp = z_pair(&h, &[0, 1]).unwrap();
        let m = CosetModule::new(h.datum(), &[0, 1]).unwrap();
        let params: Vec<LaurentPoly> = h.params().to_vec();
        for signs in [[false, false], [true, false], [false, true], [true, true]] {
            let vals: Vec<LaurentPoly> = (0..2).map(|s| if signs[s] { params[s].neg() } else { LaurentPoly::one() }).collect();
            let gens: Vec<Matrix<LaurentPoly>> = vals.iter().map(|v| vec![vec![v.clone()]]).collect();
            let a = m.z_top_action(&params, &gens, 1).unwrap();
            assert_eq!(a[0][0], linear_eval(&zp.z_top, &vals));
        }
    }
}
