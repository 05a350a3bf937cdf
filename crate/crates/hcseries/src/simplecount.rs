//! Counting simple modules of specialized Hecke and generalized Hecke
//! algebras, and the support tables built from those counts.
//!
//! For a finite-dimensional algebra A over a field of characteristic zero,
//! the radical is the kernel of the trace form τ(xy) = Tr(L_xL_y), and the
//! number of simple modules over the algebraic closure is
//! dim A − dim(rad A + [A, A]). Both ranks are computed after reduction
//! modulo two large primes; the primes must agree.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::modp::{pow_mod, PRIMES};
use crate::arith::{CycNumber, Ring};
use crate::coxeter::{parabolic_classes, CoxType, CoxeterDatum, ElementTable, GroupElement};
use crate::error::{Error, Result};
use crate::gha::{assemble_presentation, GHAPresentation};
use crate::repdata::{FinDimTable, RepContext};

pub const DEFAULT_DIM_BOUND: usize = 2000;
/// Ambient Hecke algebras above this dimension need the extended flag.
pub const STANDARD_HECKE_BOUND: usize = 1000;

const SEED: u64 = 0x5eed_c0de;
const COMMUTATOR_SAMPLES: usize = 3;

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub dim_bound: usize,
    pub extended: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { dim_bound: DEFAULT_DIM_BOUND, extended: false }
    }
}

type Column = Vec<(u32, CycNumber)>;

/// A finite-dimensional algebra given by the left and right actions of a
/// generating set on a basis; every basis element is reachable from the
/// unit by left (and by right) multiplications by generators.
pub struct AlgebraTable {
    pub labels: Vec<String>,
    pub gen_names: Vec<String>,
    /// left[g][v] = gen_g · b_v
    left: Vec<Vec<Column>>,
    /// right[g][v] = b_v · gen_g
    right: Vec<Vec<Column>>,
    /// b_v = gen · b_u
    left_parent: Vec<Option<(usize, usize)>>,
    /// b_v = b_u · gen
    right_parent: Vec<Option<(usize, usize)>>,
    pub unit: usize,
}

impl fmt::Debug for AlgebraTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraTable(dim {}, {} generators)", self.dim(), self.gen_names.len())
    }
}

fn hecke_columns(table: &ElementTable, params: &[CycNumber], right: bool) -> Vec<Vec<Column>> {
    (0..table.rank())
        .map(|s| {
            let q = &params[s];
            let omq = CycNumber::one().sub(q).reduce();
            (0..table.size() as u32)
                .map(|w| {
                    let ws = if right { table.rmul(w, s) } else { table.lmul(w, s) };
                    if table.length(ws) > table.length(w) {
                        vec![(ws, CycNumber::one())]
                    } else {
                        let mut col = vec![];
                        if !omq.is_zero() {
                            col.push((w, omq.clone()));
                        }
                        col.push((ws, q.clone()));
                        col
                    }
                })
                .collect()
        })
        .collect()
}

/// The product g·x·g⁻¹ for an element given by a word, with g acting on nodes.
fn act_on(table: &ElementTable, perm: &[usize], w: u32) -> u32 {
    let word: Vec<usize> = table.word(w).iter().map(|&s| perm[s]).collect();
    table.from_word(&word)
}

impl AlgebraTable {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// H(W) specialized at the given node parameters. Without the extended
    /// flag the size is also capped at [`STANDARD_HECKE_BOUND`].
    pub fn hecke(datum: &Arc<CoxeterDatum>, node_params: &[CycNumber], limits: &Limits) -> Result<AlgebraTable> {
        if !limits.extended && datum.order() > STANDARD_HECKE_BOUND as u64 {
            return Err(Error::Resource(format!("H({}) has dimension {}; the extended flag is required above {STANDARD_HECKE_BOUND}", datum.name, datum.order())));
        }
        Self::crossed(datum, node_params, &[], limits)
    }

    /// G ⋉ H(W) for a group G of diagram automorphisms given by node
    /// permutations, closed under composition (the identity may be omitted).
    pub fn crossed(datum: &Arc<CoxeterDatum>, node_params: &[CycNumber], group: &[Vec<usize>], limits: &Limits) -> Result<AlgebraTable> {
        let r = datum.rank();
        if node_params.len() != r {
            return Err(Error::Invalid(format!("{} node parameters for rank {r}", node_params.len())));
        }
        let ident: Vec<usize> = (0..r).collect();
        let mut perms: Vec<Vec<usize>> = vec![ident.clone()];
        for g in group {
            if g.len() != r {
                return Err(Error::Invalid("automorphism of the wrong rank".into()));
            }
            if !perms.contains(g) {
                perms.push(g.clone());
            }
        }
        let ng = perms.len();
        let order = datum.order() as u128 * ng as u128;
        if order > limits.dim_bound as u128 {
            return Err(Error::Resource(format!("algebra of dimension {order} exceeds the bound {}", limits.dim_bound)));
        }
        for g in &perms {
            for s in 0..r {
                if node_params[g[s]] != node_params[s] {
                    return Err(Error::Invalid("automorphism does not preserve the parameters".into()));
                }
                for t in 0..r {
                    if datum.coxeter_matrix[g[s]][g[t]] != datum.coxeter_matrix[s][t] {
                        return Err(Error::Invalid("permutation is not a diagram automorphism".into()));
                    }
                }
            }
        }
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { (0..r).map(|s| a[b[s]]).collect() };
        let mul: Vec<Vec<usize>> = (0..ng)
            .map(|a| {
                (0..ng)
                    .map(|b| {
                        let c = compose(&perms[a], &perms[b]);
                        perms.iter().position(|p| *p == c).ok_or_else(|| Error::Invalid("automorphisms do not form a group".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let inv: Vec<usize> = (0..ng).map(|a| (0..ng).find(|&b| mul[a][b] == 0).expect("group has inverses")).collect();

        let table = ElementTable::with_bound(datum, limits.dim_bound)?;
        let nw = table.size();
        let d = ng * nw;
        let idx = |g: usize, w: u32| (g * nw + w as usize) as u32;
        let hl = hecke_columns(&table, node_params, false);
        let hr = hecke_columns(&table, node_params, true);
        // image of each element under each automorphism
        let moved: Vec<Vec<u32>> = perms.iter().map(|p| (0..nw as u32).map(|w| act_on(&table, p, w)).collect()).collect();

        let mut left: Vec<Vec<Column>> = Vec::new();
        let mut right: Vec<Vec<Column>> = Vec::new();
        for s in 0..r {
            let mut l = Vec::with_capacity(d);
            let mut rr = Vec::with_capacity(d);
            for g in 0..ng {
                // T_s·g = g·T_{g⁻¹(s)}
                let sg = perms[inv[g]][s];
                for w in 0..nw {
                    l.push(hl[sg][w].iter().map(|(x, c)| (idx(g, *x), c.clone())).collect());
                    rr.push(hr[s][w].iter().map(|(x, c)| (idx(g, *x), c.clone())).collect());
                }
            }
            left.push(l);
            right.push(rr);
        }
        for h in 1..ng {
            let mut l = Vec::with_capacity(d);
            let mut rr = Vec::with_capacity(d);
            for g in 0..ng {
                for w in 0..nw as u32 {
                    l.push(vec![(idx(mul[h][g], w), CycNumber::one())]);
                    // g·T_w·h = gh·T_{h⁻¹(w)}
                    rr.push(vec![(idx(mul[g][h], moved[inv[h]][w as usize]), CycNumber::one())]);
                }
            }
            left.push(l);
            right.push(rr);
        }

        let mut left_parent = vec![None; d];
        let mut right_parent = vec![None; d];
        for g in 0..ng {
            for w in 0..nw as u32 {
                let v = idx(g, w) as usize;
                if w == 0 {
                    if g > 0 {
                        left_parent[v] = Some((r + g - 1, 0));
                        right_parent[v] = Some((r + g - 1, 0));
                    }
                    continue;
                }
                let s = (0..r).find(|&s| table.is_left_descent(w, s)).expect("nontrivial element has a descent");
                left_parent[v] = Some((perms[g][s], idx(g, table.lmul(w, s)) as usize));
                let s = (0..r).find(|&s| table.is_right_descent(w, s)).expect("nontrivial element has a descent");
                right_parent[v] = Some((s, idx(g, table.rmul(w, s)) as usize));
            }
        }
        let mut labels = Vec::with_capacity(d);
        for g in 0..ng {
            for w in 0..nw as u32 {
                let word = datum.word_text(&table.word(w));
                let tw = if word.is_empty() { "T[]".to_string() } else { format!("T[{word}]") };
                labels.push(if g == 0 { tw } else { format!("g{g}·{tw}") });
            }
        }
        let mut gen_names: Vec<String> = (0..r).map(|s| format!("T{}", datum.gen_names[s])).collect();
        gen_names.extend((1..ng).map(|g| format!("g{g}")));
        Ok(AlgebraTable { labels, gen_names, left, right, left_parent, right_parent, unit: 0 })
    }

    /// The algebra of a presentation Icomp ⋉ H(Iref; params).
    pub fn from_presentation(p: &GHAPresentation, limits: &Limits) -> Result<AlgebraTable> {
        let dim = p.dimension();
        if dim as u128 > limits.dim_bound as u128 {
            return Err(Error::Resource(format!("{} has dimension {dim}, above the bound {}", p.text(), limits.dim_bound)));
        }
        let params: Vec<CycNumber> = p
            .node_params()
            .iter()
            .map(|q| q.value.clone().ok_or_else(|| Error::NoStrategy(format!("parameter {q} is not cyclotomic"))))
            .collect::<Result<_>>()?;
        match &p.ref_datum {
            Some(d) => {
                let group: Vec<Vec<usize>> = p.complement_action.clone();
                Self::crossed(d, &params, &group, limits)
            }
            None => Self::group_algebra(&p.complement),
        }
    }

    /// The group algebra of a finite group of Coxeter group elements.
    pub fn group_algebra(elems: &[GroupElement]) -> Result<AlgebraTable> {
        let n = elems.len();
        let find = |g: &GroupElement| elems.iter().position(|x| x == g).ok_or_else(|| Error::Invalid("elements do not form a group".into()));
        let unit = elems.iter().position(|g| g.is_identity()).ok_or_else(|| Error::Invalid("group without identity".into()))?;
        let mut mul = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                mul[a][b] = find(&elems[a].multiply(&elems[b])?)?;
            }
        }
        let left: Vec<Vec<Column>> = (0..n).map(|g| (0..n).map(|v| vec![(mul[g][v] as u32, CycNumber::one())]).collect()).collect();
        let right: Vec<Vec<Column>> = (0..n).map(|g| (0..n).map(|v| vec![(mul[v][g] as u32, CycNumber::one())]).collect()).collect();
        let parent: Vec<Option<(usize, usize)>> = (0..n).map(|v| if v == unit { None } else { Some((v, unit)) }).collect();
        Ok(AlgebraTable {
            labels: elems.iter().map(|g| format!("[{}]", g.word_text())).collect(),
            gen_names: elems.iter().map(|g| format!("[{}]", g.word_text())).collect(),
            left,
            right,
            left_parent: parent.clone(),
            right_parent: parent,
            unit,
        })
    }

    /// A ⊗ B with generators of both factors.
    pub fn tensor(a: &AlgebraTable, b: &AlgebraTable) -> AlgebraTable {
        let (da, db) = (a.dim(), b.dim());
        let idx = |i: usize, j: usize| (i * db + j) as u32;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for g in 0..a.gen_names.len() {
            left.push((0..da * db).map(|v| a.left[g][v / db].iter().map(|(x, c)| (idx(*x as usize, v % db), c.clone())).collect()).collect());
            right.push((0..da * db).map(|v| a.right[g][v / db].iter().map(|(x, c)| (idx(*x as usize, v % db), c.clone())).collect()).collect());
        }
        for g in 0..b.gen_names.len() {
            left.push((0..da * db).map(|v| b.left[g][v % db].iter().map(|(x, c)| (idx(v / db, *x as usize), c.clone())).collect()).collect());
            right.push((0..da * db).map(|v| b.right[g][v % db].iter().map(|(x, c)| (idx(v / db, *x as usize), c.clone())).collect()).collect());
        }
        let ga = a.gen_names.len();
        let parent = |pa: &[Option<(usize, usize)>], pb: &[Option<(usize, usize)>]| -> Vec<Option<(usize, usize)>> {
            (0..da * db)
                .map(|v| {
                    let (i, j) = (v / db, v % db);
                    match (pb[j], pa[i]) {
                        (Some((g, u)), _) => Some((ga + g, idx(i, u) as usize)),
                        (None, Some((g, u))) => Some((g, idx(u, j) as usize)),
                        (None, None) => None,
                    }
                })
                .collect()
        };
        AlgebraTable {
            labels: (0..da * db).map(|v| format!("{}⊗{}", a.labels[v / db], b.labels[v % db])).collect(),
            gen_names: a.gen_names.iter().chain(&b.gen_names).cloned().collect(),
            left,
            right,
            left_parent: parent(&a.left_parent, &b.left_parent),
            right_parent: parent(&a.right_parent, &b.right_parent),
            unit: idx(a.unit, b.unit) as usize,
        }
    }

    /// Relabel the basis by a permutation: new basis element k is old perm[k].
    pub fn permuted(&self, perm: &[usize]) -> AlgebraTable {
        let d = self.dim();
        let mut pos = vec![0usize; d];
        for (k, &o) in perm.iter().enumerate() {
            pos[o] = k;
        }
        let remap = |cols: &Vec<Vec<Column>>| -> Vec<Vec<Column>> {
            cols.iter().map(|g| perm.iter().map(|&o| g[o].iter().map(|(x, c)| (pos[*x as usize] as u32, c.clone())).collect()).collect()).collect()
        };
        let reparent = |p: &[Option<(usize, usize)>]| -> Vec<Option<(usize, usize)>> { perm.iter().map(|&o| p[o].map(|(g, u)| (g, pos[u]))).collect() };
        AlgebraTable {
            labels: perm.iter().map(|&o| self.labels[o].clone()).collect(),
            gen_names: self.gen_names.clone(),
            left: remap(&self.left),
            right: remap(&self.right),
            left_parent: reparent(&self.left_parent),
            right_parent: reparent(&self.right_parent),
            unit: pos[self.unit],
        }
    }

    /// Exact product b_u·b_v, expanded along the left word of u.
    pub fn mul_basis(&self, u: usize, v: usize) -> Vec<CycNumber> {
        let mut x = vec![CycNumber::zero(); self.dim()];
        x[v] = CycNumber::one();
        let mut gens = Vec::new();
        let mut k = u;
        while let Some((g, p)) = self.left_parent[k] {
            gens.push(g);
            k = p;
        }
        for &g in gens.iter().rev() {
            x = self.apply_left(g, &x);
        }
        x
    }

    fn apply_left(&self, g: usize, x: &[CycNumber]) -> Vec<CycNumber> {
        let mut y = vec![CycNumber::zero(); self.dim()];
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, a) in &self.left[g][k] {
                y[*t as usize] = y[*t as usize].add(&c.mul(a)).reduce();
            }
        }
        y
    }

    fn apply_right(&self, g: usize, x: &[CycNumber]) -> Vec<CycNumber> {
        let mut y = vec![CycNumber::zero(); self.dim()];
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, a) in &self.right[g][k] {
                y[*t as usize] = y[*t as usize].add(&c.mul(a)).reduce();
            }
        }
        y
    }

    /// Associativity certificate: left and right generator actions commute,
    /// the unit is a two-sided unit, and the right-parent basis agrees with
    /// left multiplication on sampled basis pairs.
    pub fn check_associative(&self, samples: usize) -> Result<()> {
        let d = self.dim();
        let ng = self.gen_names.len();
        for g in 0..ng {
            for h in 0..ng {
                for v in 0..d {
                    let mut e = vec![CycNumber::zero(); d];
                    e[v] = CycNumber::one();
                    let a = self.apply_right(h, &self.apply_left(g, &e));
                    let b = self.apply_left(g, &self.apply_right(h, &e));
                    if a != b {
                        return Err(Error::Invariant(format!("left {} and right {} do not commute on {}", self.gen_names[g], self.gen_names[h], self.labels[v])));
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..samples {
            let (u, v) = (rng.gen_range(0..d), rng.gen_range(0..d));
            // b_u·b_v via right multiplications along the right word of v
            let mut x = vec![CycNumber::zero(); d];
            x[u] = CycNumber::one();
            let mut gens = Vec::new();
            let mut k = v;
            while let Some((g, p)) = self.right_parent[k] {
                gens.push(g);
                k = p;
            }
            for &g in gens.iter().rev() {
                x = self.apply_right(g, &x);
            }
            if x != self.mul_basis(u, v) {
                return Err(Error::Invariant(format!("{}·{} depends on the bracketing", self.labels[u], self.labels[v])));
            }
        }
        Ok(())
    }
}

/// The table reduced modulo a prime P ≡ 1 (mod 720720).
struct ModTable {
    p: u64,
    d: usize,
    left: Vec<Vec<Vec<(u32, u64)>>>,
    right: Vec<Vec<Vec<(u32, u64)>>>,
}

impl ModTable {
    fn new(a: &AlgebraTable, p: u64, g: u64) -> Result<ModTable> {
        let conv = |cols: &Vec<Vec<Column>>| -> Result<Vec<Vec<Vec<(u32, u64)>>>> {
            cols.iter()
                .map(|gen| {
                    gen.iter()
                        .map(|col| {
                            col.iter()
                                .map(|(t, c)| c.to_fp(p, g).map(|v| (*t, v)).ok_or_else(|| Error::Resource(format!("coefficient {c} has no image modulo {p}"))))
                                .collect()
                        })
                        .collect()
                })
                .collect()
        };
        Ok(ModTable { p, d: a.dim(), left: conv(&a.left)?, right: conv(&a.right)? })
    }
}

fn children(parents: &[Option<(usize, usize)>]) -> Vec<Vec<(usize, usize)>> {
    let mut ch = vec![Vec::new(); parents.len()];
    for (v, p) in parents.iter().enumerate() {
        if let Some((g, u)) = p {
            ch[*u].push((*g, v));
        }
    }
    ch
}

/// τ(b_v) = Tr(L_{b_v}) for every basis element, by walking the left-parent
/// tree with the full left-multiplication matrix of each node on the path.
fn traces(a: &AlgebraTable, m: &ModTable) -> Vec<u64> {
    let (d, p) = (m.d, m.p);
    let ch = children(&a.left_parent);
    let mut tau = vec![0u64; d];
    // columns of L_{b_v}: column u holds b_v·b_u
    let mut unit_cols = vec![vec![0u32; d]; d];
    for (u, col) in unit_cols.iter_mut().enumerate() {
        col[u] = 1;
    }
    tau[a.unit] = d as u64 % p;
    let mut stack: Vec<(usize, Arc<Vec<Vec<u32>>>, usize)> = vec![(a.unit, Arc::new(unit_cols), 0)];
    while let Some((v, mat, next)) = stack.pop() {
        if next >= ch[v].len() {
            continue;
        }
        let (g, w) = ch[v][next];
        stack.push((v, mat.clone(), next + 1));
        let lg = &m.left[g];
        let cols: Vec<Vec<u32>> = mat
            .par_iter()
            .map(|col| {
                let mut out = vec![0u64; d];
                for (k, &x) in col.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for &(t, c) in &lg[k] {
                        let o = &mut out[t as usize];
                        *o = (*o + x as u64 * c) % p;
                    }
                }
                out.into_iter().map(|x| x as u32).collect()
            })
            .collect();
        tau[w] = cols.iter().enumerate().fold(0u64, |acc, (u, col)| (acc + col[u] as u64) % p);
        stack.push((w, Arc::new(cols), 0));
    }
    tau
}

/// Rows G_v(x) = τ(b_v·b_x), from G_v = G_u∘R_gen when b_v = gen·b_u.
fn gram(a: &AlgebraTable, m: &ModTable, tau: &[u64]) -> Vec<Vec<u64>> {
    let (d, p) = (m.d, m.p);
    let mut rows: Vec<Option<Vec<u64>>> = vec![None; d];
    rows[a.unit] = Some(tau.to_vec());
    let ch = children(&a.left_parent);
    let mut queue = vec![a.unit];
    while let Some(u) = queue.pop() {
        let base = rows[u].clone().expect("parent row computed");
        for &(g, v) in &ch[u] {
            let rg = &m.right[g];
            let row: Vec<u64> = (0..d).map(|x| rg[x].iter().fold(0u64, |acc, &(y, c)| (acc + c * base[y as usize]) % p)).collect();
            rows[v] = Some(row);
            queue.push(v);
        }
    }
    rows.into_iter().map(|r| r.expect("every basis element reached")).collect()
}

fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[rank].clone();
        rows.par_iter_mut().enumerate().filter(|(i, _)| *i != rank).for_each(|(_, row)| {
            let f = row[c];
            if f != 0 {
                for (x, &y) in row.iter_mut().zip(&pivot).skip(c) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        });
        rank += 1;
    }
    rank
}

/// Rows (F − Fᵀ) with F(j, i) = τ(x·b_j·b_i) for a random x, spanning the
/// functionals τ(c·−) for c ∈ [x, A].
fn commutator_rows(a: &AlgebraTable, m: &ModTable, g: &[Vec<u64>], rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let (d, p) = (m.d, m.p);
    let x: Vec<u64> = (0..d).map(|_| rng.gen_range(0..p)).collect();
    // h(y) = τ(x·b_y)
    let h: Vec<u64> = (0..d).map(|y| (0..d).fold(0u64, |acc, w| (acc + x[w] * g[w][y]) % p)).collect();
    // u_j(i) = τ(x·b_j·b_i); b_j = b_k·gen gives u_j = u_k∘L_gen
    let mut f: Vec<Option<Vec<u64>>> = vec![None; d];
    f[a.unit] = Some(h);
    let ch = children(&a.right_parent);
    let mut queue = vec![a.unit];
    while let Some(k) = queue.pop() {
        let base = f[k].clone().expect("parent row computed");
        for &(gen, j) in &ch[k] {
            let lg = &m.left[gen];
            f[j] = Some((0..d).map(|i| lg[i].iter().fold(0u64, |acc, &(y, c)| (acc + c * base[y as usize]) % p)).collect());
            queue.push(j);
        }
    }
    let f: Vec<Vec<u64>> = f.into_iter().map(|r| r.expect("every basis element reached")).collect();
    (0..d).map(|j| (0..d).map(|i| (f[j][i] + p - f[i][j]) % p).collect()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub dim: usize,
    pub radical_dim: usize,
    pub simples: usize,
}

fn count_mod(a: &AlgebraTable, prime: (u64, u64)) -> Result<CountResult> {
    let m = ModTable::new(a, prime.0, prime.1)?;
    let tau = traces(a, &m);
    let g = gram(a, &m, &tau);
    let r = rank_mod(g.clone(), m.p);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ prime.0);
    let mut rows = Vec::new();
    for _ in 0..COMMUTATOR_SAMPLES {
        rows.extend(commutator_rows(a, &m, &g, &mut rng));
    }
    let rc = rank_mod(rows, m.p);
    Ok(CountResult { dim: a.dim(), radical_dim: a.dim() - r, simples: r - rc })
}

/// Radical dimension and number of simple modules, checked at two primes.
pub fn analyze(a: &AlgebraTable) -> Result<CountResult> {
    let (x, y) = rayon::join(|| count_mod(a, PRIMES[0]), || count_mod(a, PRIMES[1]));
    let (x, y) = (x?, y?);
    if x != y {
        return Err(Error::Invariant(format!("modular counts disagree: {x:?} vs {y:?}")));
    }
    Ok(x)
}

pub fn radical_dim(a: &AlgebraTable) -> Result<usize> {
    Ok(analyze(a)?.radical_dim)
}

pub fn count_simples(a: &AlgebraTable) -> Result<usize> {
    Ok(analyze(a)?.simples)
}

/// #Irr(W): the number of conjugacy classes, from the classification.
pub fn irr_count(datum: &CoxeterDatum) -> u64 {
    fn partitions(n: usize) -> u64 {
        let mut p = vec![0u64; n + 1];
        p[0] = 1;
        for k in 1..=n {
            for m in k..=n {
                p[m] += p[m - k];
            }
        }
        p[n]
    }
    fn bipartitions(n: usize) -> u64 {
        (0..=n).map(|k| partitions(k) * partitions(n - k)).sum()
    }
    datum
        .components
        .iter()
        .map(|c| match c.ctype {
            CoxType::A(n) => partitions(n + 1),
            CoxType::B(n) => bipartitions(n),
            CoxType::D(n) => {
                let b = bipartitions(n);
                if n % 2 == 0 {
                    (b + 3 * partitions(n / 2)) / 2
                } else {
                    b / 2
                }
            }
            CoxType::E(6) => 25,
            CoxType::E(7) => 60,
            CoxType::E(8) => 112,
            CoxType::F4 => 25,
            CoxType::H(3) => 10,
            CoxType::H(4) => 34,
            CoxType::I2(m) => {
                if m % 2 == 0 {
                    m as u64 / 2 + 3
                } else {
                    (m as u64 + 3) / 2
                }
            }
            t => unreachable!("no classification entry for {t}"),
        })
        .product()
}

/// One row of a support table.
#[derive(Clone, Debug, PartialEq)]
pub struct SupportRow {
    pub class: String,
    pub count: u64,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct SupportTable {
    pub ambient: String,
    pub params: Vec<BigRational>,
    pub irr: u64,
    /// proper nontrivial supports with a nonzero count, in class order
    pub rows: Vec<SupportRow>,
    pub full_support: SupportRow,
    pub finite_dim: SupportRow,
    /// presentations used, one per (class, label)
    pub presentations: Vec<(String, String, String)>,
}

impl SupportTable {
    pub fn all_rows(&self) -> Vec<&SupportRow> {
        let mut v = vec![&self.full_support];
        v.extend(self.rows.iter());
        v.push(&self.finite_dim);
        v
    }

    pub fn row(&self, class: &str) -> u64 {
        self.all_rows().iter().find(|r| r.class == class).map_or(0, |r| r.count)
    }

    pub fn text(&self) -> String {
        let c: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
        let mut out = format!("{} at c = ({})\n", self.ambient, c.join(","));
        let rows = self.all_rows();
        let w = rows.iter().map(|r| r.class.chars().count()).max().unwrap_or(1).max(5);
        for r in rows {
            if r.count == 0 && r.class != "1" {
                continue;
            }
            out.push_str(&format!("  {:<w$}  {:>3}  {}\n", r.class, r.count, r.note, w = w));
        }
        out.push_str(&format!("  {:<w$}  {:>3}\n", "total", self.irr, w = w));
        out
    }

    pub fn csv(&self) -> Result<String> {
        let mut wtr = csv::Writer::from_writer(vec![]);
        let io = |e: csv::Error| Error::Data(format!("csv output: {e}"));
        wtr.write_record(["parabolic_class", "count", "provenance_note"]).map_err(io)?;
        for r in self.all_rows() {
            wtr.write_record([r.class.as_str(), &r.count.to_string(), r.note.as_str()]).map_err(io)?;
        }
        let bytes = wtr.into_inner().map_err(|e| Error::Data(format!("csv output: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Data(e.to_string()))
    }
}

/// Counts of simple modules in O_c(W) by support, via the generalized Hecke
/// algebras of the listed finite-dimensional lowest weights.
pub fn count_supports(datum: &Arc<CoxeterDatum>, c: &[BigRational], findim: &FinDimTable, ctx: &RepContext, limits: &Limits) -> Result<SupportTable> {
    let irr = irr_count(datum);
    let classes = parabolic_classes(datum)?;
    let rank = datum.rank();
    let mut rows = Vec::new();
    let mut presentations = Vec::new();
    let mut full: Option<SupportRow> = None;
    let mut listed_fd: Option<(u64, String)> = None;
    for class in &classes {
        let found = findim.lookup(datum, &class.subset, c)?;
        let note = if found.provenance.is_empty() { String::new() } else { found.provenance.join("; ") };
        if class.rank() == rank {
            if !found.labels.is_empty() {
                listed_fd = Some((found.labels.len() as u64, note));
            }
            continue;
        }
        let is_full = class.subset.is_empty();
        let counts: Vec<(u64, String)> = found
            .labels
            .par_iter()
            .map(|label| -> Result<(u64, String)> {
                let p = assemble_presentation(datum, &class.subset, c, &label.factors, ctx)?;
                let hecke_limits = if is_full && !limits.extended {
                    Limits { dim_bound: limits.dim_bound.min(STANDARD_HECKE_BOUND), ..*limits }
                } else {
                    *limits
                };
                let alg = AlgebraTable::from_presentation(&p, &hecke_limits)?;
                Ok((count_simples(&alg)? as u64, p.text()))
            })
            .collect::<Result<_>>()
            .or_else(|e| match (is_full, e) {
                (true, Error::Resource(msg)) => {
                    full = Some(SupportRow { class: "1".into(), count: 0, note: format!("not computed: {msg}") });
                    Ok(vec![])
                }
                (_, e) => Err(e),
            })?;
        for (label, (_, text)) in found.labels.iter().zip(&counts) {
            let l = if label.factors.is_empty() { "triv".to_string() } else { label.to_string() };
            presentations.push((class.label.clone(), l, text.clone()));
        }
        let total: u64 = counts.iter().map(|x| x.0).sum();
        if is_full {
            if full.is_none() {
                full = Some(SupportRow { class: "1".into(), count: total, note: "count_simples".into() });
            }
        } else if total > 0 {
            rows.push(SupportRow { class: class.label.clone(), count: total, note });
        }
    }
    let proper: u64 = rows.iter().map(|r| r.count).sum();
    let full = full.expect("trivial parabolic is always present");
    let top = datum.irreducible_type().map_or(datum.name.clone(), |t| t.to_string());
    let (full, finite_dim) = if full.note.starts_with("not computed") {
        let (fd, note) = listed_fd.unwrap_or((0, "no finite-dimensional record".into()));
        let rest = irr.checked_sub(proper + fd).ok_or_else(|| Error::Invariant("support counts exceed #Irr(W)".into()))?;
        (SupportRow { class: "1".into(), count: rest, note: "row-sum identity".into() }, SupportRow { class: top, count: fd, note })
    } else {
        let fd = irr.checked_sub(proper + full.count).ok_or_else(|| Error::Invariant(format!("support counts {} exceed #Irr(W) = {irr}", proper + full.count)))?;
        if let Some((listed, _)) = &listed_fd {
            if *listed != fd {
                return Err(Error::Invariant(format!("{listed} finite-dimensional labels listed but the row sum leaves {fd}")));
            }
        }
        let note = match &listed_fd {
            Some((_, n)) => format!("row-sum identity; {n}"),
            None => "row-sum residue; no finite-dimensional record, so unlisted supports are included".into(),
        };
        (full, SupportRow { class: top, count: fd, note })
    };
    Ok(SupportTable { ambient: datum.name.clone(), params: c.to_vec(), irr, rows, full_support: full, finite_dim, presentations })
}

/// Node parameters of H(W) at KZ parameters of c.
pub fn kz_node_params(datum: &CoxeterDatum, c: &[BigRational]) -> Result<Vec<CycNumber>> {
    let cl = crate::gha::class_params(datum, c)?;
    Ok(datum.node_class.iter().map(|&k| cl[k].1.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::unit_root;

    fn datum(s: &str) -> Arc<CoxeterDatum> {
        Arc::new(CoxeterDatum::build(s).unwrap())
    }

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn hecke(s: &str, c: &[BigRational]) -> AlgebraTable {
        let d = datum(s);
        AlgebraTable::hecke(&d, &kz_node_params(&d, c).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn a1_quadratic() {
        let a = hecke("A1", &[r(1, 7)]);
        assert_eq!(a.dim(), 2);
        let q = unit_root(&r(1, 7));
        let sq = a.mul_basis(1, 1);
        assert_eq!(sq, vec![q.clone(), CycNumber::one().sub(&q)]);
        assert_eq!(analyze(&a).unwrap(), CountResult { dim: 2, radical_dim: 0, simples: 2 });
        // q = −1: T² = 2T − 1 has a nilpotent part
        let a = hecke("A1", &[r(1, 2)]);
        assert_eq!(analyze(&a).unwrap(), CountResult { dim: 2, radical_dim: 1, simples: 1 });
    }

    #[test]
    fn a2_at_cube_root() {
        let a = hecke("A2", &[r(1, 3)]);
        a.check_associative(50).unwrap();
        let res = analyze(&a).unwrap();
        assert_eq!(res.simples, 2);
        // brute-force nullity of the exact Gram matrix
        let d = a.dim();
        let tr = |x: &[CycNumber]| -> CycNumber {
            // Tr(L_x) = Σ_v (x·b_v)_v
            (0..d).fold(CycNumber::zero(), |acc, v| {
                let mut s = CycNumber::zero();
                for (u, c) in x.iter().enumerate() {
                    if !c.is_zero() {
                        s = s.add(&c.mul(&a.mul_basis(u, v)[v]));
                    }
                }
                acc.add(&s)
            })
        };
        let gram: Vec<Vec<CycNumber>> = (0..d).map(|u| (0..d).map(|v| tr(&a.mul_basis(u, v)).reduce()).collect()).collect();
        let rk = crate::arith::linalg::rank(&gram);
        assert_eq!(res.radical_dim, d - rk);
    }

    #[test]
    fn group_algebra_of_s3() {
        let a = hecke("A2", &[r(0, 1)]);
        assert_eq!(analyze(&a).unwrap(), CountResult { dim: 6, radical_dim: 0, simples: 3 });
        for u in 0..6 {
            for v in 0..6 {
                let p = a.mul_basis(u, v);
                assert_eq!(p.iter().filter(|x| !x.is_zero()).count(), 1);
            }
        }
    }

    #[test]
    fn generic_h3() {
        let a = hecke("H3", &[r(1, 7)]);
        assert_eq!(count_simples(&a).unwrap(), 10);
    }

    #[test]
    fn tensor_products_multiply() {
        let a = hecke("A1", &[r(1, 2)]);
        let b = hecke("A2", &[r(1, 3)]);
        let t = AlgebraTable::tensor(&a, &b);
        t.check_associative(30).unwrap();
        assert_eq!(count_simples(&t).unwrap(), count_simples(&a).unwrap() * count_simples(&b).unwrap());
    }

    #[test]
    fn basis_order_does_not_matter() {
        let a = hecke("B2", &[r(1, 2), r(1, 4)]);
        let base = analyze(&a).unwrap();
        let mut perm: Vec<usize> = (0..a.dim()).collect();
        perm.reverse();
        perm.swap(1, 5);
        assert_eq!(analyze(&a.permuted(&perm)).unwrap(), base);
    }

    #[test]
    fn crossed_product_dimension() {
        // Z/2 swapping the two A2 factors
        let d = datum("A2xA2");
        let q = unit_root(&r(1, 3));
        let params = vec![q.clone(); 4];
        let swap = vec![2, 3, 0, 1];
        let a = AlgebraTable::crossed(&d, &params, &[swap], &Limits::default()).unwrap();
        assert_eq!(a.dim(), 72);
        a.check_associative(30).unwrap();
        assert_eq!(count_simples(&a).unwrap(), 5);
    }

    #[test]
    fn irr_counts_match_classes() {
        for (s, n) in [("A3", 5), ("B3", 10), ("D4", 13), ("D5", 18), ("E6", 25), ("F4", 25), ("H3", 10), ("H4", 34), ("I2(5)", 4), ("I2(8)", 7), ("I2(6)", 6)] {
            assert_eq!(irr_count(&datum(s)), n, "{s}");
        }
    }

    #[test]
    fn bound_is_enforced() {
        let d = datum("H4");
        let p = kz_node_params(&d, &[r(1, 2)]).unwrap();
        assert!(matches!(AlgebraTable::hecke(&d, &p, &Limits::default()), Err(Error::Resource(_))));
    }
}

#[cfg(test)]
mod support_tests {
    use std::path::PathBuf;

    use super::*;

    fn data_dir() -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
    }

    fn table(ty: &str, c: BigRational) -> SupportTable {
        let d = Arc::new(CoxeterDatum::build(ty).unwrap());
        let fd = FinDimTable::load(&data_dir().join("findim.tsv")).unwrap();
        let ctx = RepContext::load_dir(&data_dir().join("plugins")).unwrap();
        count_supports(&d, &[c], &fd, &ctx, &Limits::default()).unwrap()
    }

    fn check(ty: &str, rows: &[(i64, &[(&str, u64)])]) {
        for (d, expect) in rows {
            let t = table(ty, BigRational::new(1.into(), (*d).into()));
            let got: std::collections::BTreeMap<String, u64> = t.all_rows().iter().filter(|r| r.count > 0).map(|r| (r.class.clone(), r.count)).collect();
            let want: std::collections::BTreeMap<String, u64> = expect.iter().map(|(c, n)| (c.to_string(), *n)).collect();
            assert_eq!(got, want, "{ty} at 1/{d}\n{}", t.text());
        }
    }

    #[test]
    fn h3_rows() {
        check(
            "H3",
            &[
                (10, &[("1", 9), ("H3", 1)]),
                (6, &[("1", 9), ("H3", 1)]),
                (5, &[("1", 8), ("I2(5)", 2)]),
                (3, &[("1", 8), ("A2", 2)]),
                (2, &[("1", 5), ("A1", 1), ("A1^2", 1), ("H3", 3)]),
            ],
        );
    }

    #[test]
    fn e6_rows() {
        check(
            "E6",
            &[
                (12, &[("1", 24), ("E6", 1)]),
                (9, &[("1", 24), ("E6", 1)]),
                (8, &[("1", 24), ("D5", 1)]),
                (6, &[("1", 20), ("A5", 1), ("D4", 2), ("E6", 2)]),
                (5, &[("1", 23), ("A4", 2)]),
                (4, &[("1", 19), ("A3", 3), ("D4", 3)]),
                (3, &[("1", 13), ("A2", 5), ("A2^2", 4), ("E6", 3)]),
                (2, &[("1", 8), ("A1", 4), ("A1^2", 4), ("A1^3", 3), ("D4", 6)]),
            ],
        );
    }
}
