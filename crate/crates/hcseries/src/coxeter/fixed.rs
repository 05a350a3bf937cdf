//! The action of N_J on the fixed space of W_J: its reflection subgroup,
//! classification, and the complement stabilizing a chamber.

use std::collections::HashSet;
use std::sync::Arc;

use crate::arith::linalg::{nullspace, rank};
use crate::arith::{CycNumber, Field, Ring};
use crate::error::{Error, Result};

use super::classify::product_label;
use super::datum::CoxeterDatum;
use super::element::GroupElement;
use super::parabolic::{normalizer_complement, simple_system};

#[derive(Clone, Debug)]
pub struct FixedSpaceGroup {
    pub subset: Vec<usize>,
    /// coordinates of the quotient h*/span Δ_J are indexed by these nodes
    pub coords: Vec<usize>,
    pub normalizer: Vec<GroupElement>,
    /// positive rays (normalized so the first nonzero coordinate is 1)
    pub rays: Vec<Vec<CycNumber>>,
    /// the reflection of N_J for each ray
    pub reflections: Vec<GroupElement>,
    /// indices into `rays` of the simple rays, in node order of `ref_datum`
    pub simple: Vec<usize>,
    pub ref_datum: Option<Arc<CoxeterDatum>>,
    pub ref_label: String,
    pub complement: Vec<GroupElement>,
    /// permutation of the simple rays induced by each complement element
    pub complement_action: Vec<Vec<usize>>,
}

fn sign(x: &CycNumber) -> i32 {
    if x.is_zero() {
        return 0;
    }
    let v = x.to_complex().0;
    if v > 0.0 {
        1
    } else {
        -1
    }
}

fn normalize(v: &[CycNumber]) -> Option<(Vec<CycNumber>, CycNumber)> {
    let p = v.iter().position(|x| !x.is_zero())?;
    let inv = v[p].inv()?;
    Some((v.iter().map(|x| x.mul(&inv).reduce()).collect(), v[p].clone()))
}

impl FixedSpaceGroup {
    pub fn compute(datum: &Arc<CoxeterDatum>, j: &[usize]) -> Result<FixedSpaceGroup> {
        let mut subset = j.to_vec();
        subset.sort();
        let coords: Vec<usize> = (0..datum.rank()).filter(|s| !subset.contains(s)).collect();
        let normalizer = normalizer_complement(datum, &subset);
        let m = coords.len();
        let matrix = |n: &GroupElement| -> Vec<Vec<CycNumber>> {
            let mut mat = vec![vec![CycNumber::zero(); m]; m];
            for (b, &i) in coords.iter().enumerate() {
                let img = &datum.roots[n.apply(i)];
                for (a, &k) in coords.iter().enumerate() {
                    mat[a][b] = img[k].clone();
                }
            }
            mat
        };
        let apply = |mat: &[Vec<CycNumber>], v: &[CycNumber]| -> Vec<CycNumber> {
            (0..m).map(|a| (0..m).fold(CycNumber::zero(), |acc, b| acc.add(&mat[a][b].mul(&v[b])))).collect()
        };
        let mats: Vec<Vec<Vec<CycNumber>>> = normalizer.iter().map(matrix).collect();

        let mut rays: Vec<Vec<CycNumber>> = Vec::new();
        let mut reflections = Vec::new();
        let mut ray_mats = Vec::new();
        for (n, mat) in normalizer.iter().zip(&mats) {
            if n.is_identity() || !n.multiply(n)?.is_identity() {
                continue;
            }
            let mut diff = mat.clone();
            for (a, row) in diff.iter_mut().enumerate() {
                row[a] = row[a].sub(&CycNumber::one());
            }
            if rank(&diff) != 1 {
                continue;
            }
            let col = (0..m).find(|&b| (0..m).any(|a| !diff[a][b].is_zero())).unwrap();
            let v: Vec<CycNumber> = (0..m).map(|a| diff[a][col].clone()).collect();
            let (ray, _) = normalize(&v).unwrap();
            if ray.iter().any(|x| sign(x) < 0) {
                return Err(Error::Invariant(format!("reflection ray {ray:?} is not a restricted root direction")));
            }
            rays.push(ray);
            reflections.push(n.clone());
            ray_mats.push(mat.clone());
        }
        let ray_set: Vec<Vec<CycNumber>> = rays.clone();
        let find_ray = |v: &[CycNumber]| -> Option<(usize, i32)> {
            let (nv, lead) = normalize(v)?;
            let k = ray_set.iter().position(|r| *r == nv)?;
            Some((k, sign(&lead)))
        };

        // simple rays: their reflection permutes the remaining positive rays
        let mut simple = Vec::new();
        for (i, mat) in ray_mats.iter().enumerate() {
            let ok = (0..rays.len()).filter(|&k| k != i).all(|k| {
                let img = apply(mat, &rays[k]);
                matches!(find_ray(&img), Some((_, 1)))
            });
            if ok {
                simple.push(i);
            }
        }

        let (ref_datum, ref_label) = if simple.is_empty() {
            (None, "1".to_string())
        } else {
            let r = simple.len();
            let mut cartan = vec![vec![CycNumber::zero(); r]; r];
            for (a, &i) in simple.iter().enumerate() {
                let pos = rays[i].iter().position(|x| !x.is_zero()).unwrap();
                for (b, &jj) in simple.iter().enumerate() {
                    let img = apply(&ray_mats[i], &rays[jj]);
                    let d = rays[jj][pos].sub(&img[pos]);
                    cartan[a][b] = d.mul(&rays[i][pos].inv().unwrap()).reduce();
                }
            }
            // classes: connectivity through odd Coxeter numbers
            let probe = CoxeterDatum::from_cartan("probe", cartan.clone(), (0..r).map(|i| format!("r{}", i + 1)).collect(), vec![0; r], vec!["x".into()])?;
            let mut cls: Vec<usize> = (0..r).collect();
            loop {
                let mut changed = false;
                for a in 0..r {
                    for b in 0..r {
                        if probe.coxeter_matrix[a][b] % 2 == 1 && a != b && cls[a] != cls[b] {
                            let v = cls[a].min(cls[b]);
                            cls[a] = v;
                            cls[b] = v;
                            changed = true;
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            let mut uniq: Vec<usize> = cls.clone();
            uniq.sort();
            uniq.dedup();
            let node_class: Vec<usize> = cls.iter().map(|c| uniq.iter().position(|u| u == c).unwrap()).collect();
            let class_names: Vec<String> = (0..uniq.len()).map(|i| format!("x{}", i + 1)).collect();
            let label_types: Vec<_> = probe.components.iter().map(|c| c.ctype).collect();
            let label = product_label(&label_types);
            let d = CoxeterDatum::from_cartan(&label, cartan, (0..r).map(|i| format!("r{}", i + 1)).collect(), node_class, class_names)?;
            (Some(Arc::new(d)), label)
        };

        let mut complement = Vec::new();
        let mut complement_action = Vec::new();
        for (n, mat) in normalizer.iter().zip(&mats) {
            let mut perm = Vec::with_capacity(rays.len());
            let mut ok = true;
            for r in &rays {
                match find_ray(&apply(mat, r)) {
                    Some((k, 1)) => perm.push(k),
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let act: Vec<usize> = simple.iter().map(|&i| simple.iter().position(|&k| k == perm[i]).expect("complement permutes simple rays")).collect();
                complement.push(n.clone());
                complement_action.push(act);
            }
        }
        let nref = ref_datum.as_ref().map_or(1, |d| d.order());
        if nref * complement.len() as u64 != normalizer.len() as u64 {
            return Err(Error::Invariant(format!(
                "|N_ref| {nref} × |N_comp| {} ≠ |N| {} for J = {:?} in {}",
                complement.len(),
                normalizer.len(),
                subset,
                datum.name
            )));
        }
        Ok(FixedSpaceGroup { subset, coords, normalizer, rays, reflections, simple, ref_datum, ref_label, complement, complement_action })
    }

    /// Positive roots of the corank-one overgroup W'' attached to ray `i`:
    /// Φ_J together with the roots whose restriction is proportional to it.
    pub fn overgroup_roots(&self, datum: &CoxeterDatum, i: usize) -> Vec<usize> {
        let ray = &self.rays[i];
        let mut out = Vec::new();
        for k in 0..datum.npos {
            let v: Vec<CycNumber> = self.coords.iter().map(|&c| datum.roots[k][c].clone()).collect();
            match normalize(&v) {
                None => out.push(k),
                Some((nv, _)) if nv == *ray => out.push(k),
                _ => {}
            }
        }
        out
    }
}

/// For a parabolic root subsystem with simple roots `simple`, an element w
/// with w(simple) ⊆ Δ; returns w and the images as node indices.
pub fn standardize_subsystem(datum: &Arc<CoxeterDatum>, simple: &[usize]) -> Result<(GroupElement, Vec<usize>)> {
    let r = datum.rank();
    // x ∈ h given by its values on simple roots, vanishing on the subsystem
    let rows: Vec<Vec<CycNumber>> = simple.iter().map(|&k| datum.roots[k].clone()).collect();
    let basis = if rows.is_empty() { (0..r).map(|i| (0..r).map(|j| CycNumber::from_int((i == j) as i64)).collect()).collect() } else { nullspace(&rows, r) };
    let span: HashSet<usize> = {
        let mut s: HashSet<usize> = HashSet::new();
        // roots in the span of the subsystem
        let mut all_rows = rows.clone();
        let base_rank = rank(&all_rows);
        for k in 0..datum.num_roots() {
            all_rows.push(datum.roots[k].clone());
            if rank(&all_rows) == base_rank {
                s.insert(k);
            }
            all_rows.pop();
        }
        s
    };
    let pair = |x: &[CycNumber], k: usize| -> CycNumber { datum.roots[k].iter().zip(x).fold(CycNumber::zero(), |a, (c, v)| a.add(&c.mul(v))) };
    let mut x: Option<Vec<CycNumber>> = None;
    'search: for attempt in 0..50i64 {
        let mut cand = vec![CycNumber::zero(); r];
        for (bi, b) in basis.iter().enumerate() {
            let c = CycNumber::from_int(1 + (bi as i64 + 1) * (attempt + 3) * (bi as i64 + 7) % 97);
            for i in 0..r {
                cand[i] = cand[i].add(&b[i].mul(&c));
            }
        }
        for k in 0..datum.npos {
            if !span.contains(&k) && pair(&cand, k).is_zero() {
                continue 'search;
            }
        }
        x = Some(cand);
        break;
    }
    let mut x = x.ok_or_else(|| Error::Invariant("no generic point in the fixed space".into()))?;
    let mut w = GroupElement::identity(datum);
    loop {
        let Some(s) = (0..r).find(|&s| sign(&x[s]) < 0) else { break };
        // ⟨α_i, s x⟩ = x_i − a_si x_s
        let xs = x[s].clone();
        for i in 0..r {
            x[i] = x[i].sub(&datum.cartan[s][i].mul(&xs));
        }
        w = w.lmul_simple(s);
    }
    let k_nodes: Vec<usize> = (0..r).filter(|&s| x[s].is_zero()).collect();
    // w maps the subsystem onto Φ_K; fix the positive system inside W_K
    let mut pos: HashSet<usize> = HashSet::new();
    for k in 0..datum.npos {
        if span.contains(&k) {
            pos.insert(w.apply(k));
        }
    }
    loop {
        let Some(&s) = k_nodes.iter().find(|&&s| !pos.contains(&s)) else { break };
        pos = pos.iter().map(|&k| datum.sperm[s][k] as usize).collect();
        w = w.lmul_simple(s);
    }
    let images: Vec<usize> = simple.iter().map(|&k| w.apply(k)).collect();
    if images.iter().any(|&k| k >= r) {
        return Err(Error::Invariant("subsystem is not parabolic".into()));
    }
    Ok((w, images))
}

/// Simple roots of the overgroup attached to a ray.
pub fn overgroup_simple(datum: &CoxeterDatum, fs: &FixedSpaceGroup, i: usize) -> Vec<usize> {
    simple_system(datum, &fs.overgroup_roots(datum, i))
}
