//! Parabolic subgroups: longest elements, coset and double-coset
//! representatives, normalizers and conjugacy classes.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::classify::{classify_subset, product_label};
use super::datum::CoxeterDatum;
use super::element::GroupElement;
use super::types::CoxType;

/// A parabolic subgroup: `conjugator · W_J · conjugator⁻¹`.
#[derive(Clone, Debug)]
pub struct ParabolicRef {
    pub subset: Vec<usize>,
    pub conjugator: Option<GroupElement>,
}

impl ParabolicRef {
    pub fn standard(subset: &[usize]) -> ParabolicRef {
        let mut s = subset.to_vec();
        s.sort();
        ParabolicRef { subset: s, conjugator: None }
    }

    pub fn is_standard(&self) -> bool {
        self.conjugator.as_ref().map_or(true, |c| c.is_identity())
    }
}

/// Which side the parabolic acts on in a coset decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetSide {
    /// cosets d·W_J; every w = d·u
    Left,
    /// cosets W_J·d; every w = u·d
    Right,
}

pub fn longest_element(datum: &Arc<CoxeterDatum>, j: &[usize]) -> GroupElement {
    let mut perm: Vec<u16> = (0..datum.num_roots() as u16).collect();
    let mut word = Vec::new();
    while let Some(&s) = j.iter().find(|&&s| datum.is_positive(perm[s] as usize)) {
        let sp = &datum.sperm[s];
        perm = sp.iter().map(|&k| perm[k as usize]).collect();
        word.push(s);
    }
    GroupElement::from_parts(datum, perm, word)
}

fn lmul_perm(datum: &CoxeterDatum, perm: &[u16], s: usize) -> Vec<u16> {
    let sp = &datum.sperm[s];
    perm.iter().map(|&k| sp[k as usize]).collect()
}

fn rmul_perm(datum: &CoxeterDatum, perm: &[u16], s: usize) -> Vec<u16> {
    let sp = &datum.sperm[s];
    sp.iter().map(|&k| perm[k as usize]).collect()
}

/// Minimal length coset representatives in BFS (length) order.
///
/// With `CosetSide::Left` these are the d with d(α_j) > 0 for j ∈ J, and
/// every element factors as d·u with lengths adding.
pub fn min_coset_reps(datum: &Arc<CoxeterDatum>, j: &[usize], side: CosetSide) -> Vec<GroupElement> {
    let npos = datum.npos;
    let inv_pos = |perm: &[u16], s: usize| -> bool {
        // d⁻¹(α_s) > 0
        let k = perm.iter().position(|&v| v as usize == s).unwrap();
        k < npos
    };
    let id: Vec<u16> = (0..datum.num_roots() as u16).collect();
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![(id, Vec::<usize>::new())];
    let mut k = 0;
    while k < out.len() {
        let (perm, word) = out[k].clone();
        for s in 0..datum.rank() {
            let (np, nw) = match side {
                CosetSide::Left => {
                    // extend on the left: s·d, longer iff d⁻¹(α_s) > 0
                    if !inv_pos(&perm, s) {
                        continue;
                    }
                    let np = lmul_perm(datum, &perm, s);
                    if j.iter().any(|&t| (np[t] as usize) >= npos) {
                        continue;
                    }
                    let mut nw = vec![s];
                    nw.extend_from_slice(&word);
                    (np, nw)
                }
                CosetSide::Right => {
                    if (perm[s] as usize) >= npos {
                        continue;
                    }
                    let np = rmul_perm(datum, &perm, s);
                    if j.iter().any(|&t| !inv_pos(&np, t)) {
                        continue;
                    }
                    let mut nw = word.clone();
                    nw.push(s);
                    (np, nw)
                }
            };
            if seen.insert(np.clone()) {
                out.push((np, nw));
            }
        }
        k += 1;
    }
    out.into_iter().map(|(p, w)| GroupElement::from_parts(datum, p, w)).collect()
}

/// Minimal length representatives of the double cosets W_K \ W / W_J.
pub fn min_double_coset_reps(datum: &Arc<CoxeterDatum>, k: &[usize], j: &[usize]) -> Vec<GroupElement> {
    min_coset_reps(datum, j, CosetSide::Left).into_iter().filter(|d| k.iter().all(|&s| !d.is_left_descent(s))).collect()
}

/// For d with d J d⁻¹ ⊆ S, the induced bijection s ↦ d s d⁻¹ on J.
pub fn coset_twist(d: &GroupElement, j: &[usize]) -> Result<Vec<(usize, usize)>> {
    j.iter()
        .map(|&s| {
            d.conjugate_simple(s)
                .map(|t| (s, t))
                .ok_or_else(|| Error::Invalid(format!("{} does not conjugate {} into S", d, d.datum().gen_names[s])))
        })
        .collect()
}

fn subset_key(j: &[usize]) -> u32 {
    j.iter().fold(0u32, |m, &s| m | (1 << s))
}

fn subset_of(mask: u32, r: usize) -> Vec<usize> {
    (0..r).filter(|&s| mask & (1 << s) != 0).collect()
}

/// The elementary conjugations of Deodhar / Brink–Howlett: for s ∉ K with
/// L = K ∪ {s}, v = w_L·w_K maps Δ_K onto Δ_{K'}.
struct Elementary {
    longest: HashMap<u32, GroupElement>,
}

impl Elementary {
    fn new() -> Self {
        Elementary { longest: HashMap::new() }
    }

    fn longest(&mut self, datum: &Arc<CoxeterDatum>, mask: u32) -> GroupElement {
        self.longest
            .entry(mask)
            .or_insert_with(|| longest_element(datum, &subset_of(mask, datum.rank())))
            .clone()
    }

    fn moves(&mut self, datum: &Arc<CoxeterDatum>, mask: u32) -> Vec<(u32, GroupElement)> {
        let r = datum.rank();
        let wk = self.longest(datum, mask);
        let mut out = Vec::new();
        for s in 0..r {
            if mask & (1 << s) != 0 {
                continue;
            }
            let wl = self.longest(datum, mask | (1 << s));
            let v = wl.multiply(&wk).expect("same datum");
            let mut m = 0u32;
            for t in subset_of(mask, r) {
                let img = v.apply(t);
                debug_assert!(img < r);
                m |= 1 << img;
            }
            out.push((m, v));
        }
        out
    }
}

/// N_J = {n ∈ W : n(Δ_J) = Δ_J}, the complement of W_J in its normalizer.
pub fn normalizer_complement(datum: &Arc<CoxeterDatum>, j: &[usize]) -> Vec<GroupElement> {
    let start = subset_key(j);
    let mut el = Elementary::new();
    let mut moves: HashMap<u32, Vec<(u32, GroupElement)>> = HashMap::new();
    let mut seen: HashSet<(u32, GroupElement)> = HashSet::new();
    let id = GroupElement::identity(datum);
    let mut queue = VecDeque::new();
    seen.insert((start, id.clone()));
    queue.push_back((start, id));
    let mut out = Vec::new();
    while let Some((mask, w)) = queue.pop_front() {
        if mask == start {
            out.push(w.clone());
        }
        let mv = moves.entry(mask).or_insert_with(|| el.moves(datum, mask)).clone();
        for (m2, v) in mv {
            let w2 = v.multiply(&w).expect("same datum");
            if seen.insert((m2, w2.clone())) {
                queue.push_back((m2, w2));
            }
        }
    }
    out.sort_by(|a, b| (a.length(), a.word()).cmp(&(b.length(), b.word())));
    out
}

/// An element w with w(Δ_J) = Δ_K, if the standard parabolics are conjugate
/// in that way.
pub fn conjugating_element(datum: &Arc<CoxeterDatum>, j: &[usize], k: &[usize]) -> Option<GroupElement> {
    let start = subset_key(j);
    let target = subset_key(k);
    let mut el = Elementary::new();
    let mut prev: HashMap<u32, (u32, GroupElement)> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    let mut seen = HashSet::from([start]);
    while let Some(m) = queue.pop_front() {
        if m == target {
            let mut w = GroupElement::identity(datum);
            let mut cur = m;
            let mut chain = Vec::new();
            while cur != start {
                let (p, v) = prev[&cur].clone();
                chain.push(v);
                cur = p;
            }
            for v in chain.into_iter().rev() {
                w = v.multiply(&w).expect("same datum");
            }
            return Some(w);
        }
        for (m2, v) in el.moves(datum, m) {
            if seen.insert(m2) {
                prev.insert(m2, (m, v));
                queue.push_back(m2);
            }
        }
    }
    None
}

/// One conjugacy class of parabolic subgroups.
#[derive(Clone, Debug)]
pub struct ParabolicClass {
    pub label: String,
    /// standard representative
    pub subset: Vec<usize>,
    /// all standard subsets in the class
    pub members: Vec<Vec<usize>>,
}

impl ParabolicClass {
    pub fn rank(&self) -> usize {
        self.subset.len()
    }

    pub fn as_ref(&self) -> ParabolicRef {
        ParabolicRef::standard(&self.subset)
    }
}

fn component_label(datum: &CoxeterDatum, j: &[usize]) -> Result<String> {
    let comps = classify_subset(&datum.coxeter_matrix, j)?;
    let f4 = datum.irreducible_type() == Some(CoxType::F4);
    if !f4 {
        return Ok(product_label(&comps.iter().map(|c| c.ctype).collect::<Vec<_>>()));
    }
    // F4: short components carry a prime and come first; B3 with two short
    // nodes is written C3
    let mut short = Vec::new();
    let mut long = Vec::new();
    let mut other = Vec::new();
    for c in &comps {
        let cls: BTreeSet<usize> = c.nodes.iter().map(|&n| datum.node_class[n]).collect();
        let nshort = c.nodes.iter().filter(|&&n| datum.node_class[n] == 0).count();
        match (c.ctype, cls.len()) {
            (CoxType::A(_), 1) if cls.contains(&0) => short.push(c.ctype),
            (CoxType::A(_), 1) => long.push(c.ctype),
            (CoxType::B(3), _) if nshort == 2 => other.push("C3".to_string()),
            (t, _) => other.push(t.to_string()),
        }
    }
    let mut parts = Vec::new();
    if !short.is_empty() {
        let l = product_label(&short);
        parts.push(l.split('x').map(|p| prime_part(p, "'")).collect::<Vec<_>>().join("x"));
    }
    if !long.is_empty() {
        parts.push(product_label(&long));
    }
    parts.extend(other);
    if parts.is_empty() {
        return Ok("1".into());
    }
    Ok(parts.join("x"))
}

fn prime_part(p: &str, mark: &str) -> String {
    match p.split_once('^') {
        Some((b, e)) => format!("({b}^{e}){mark}"),
        None => format!("{p}{mark}"),
    }
}

/// One standard representative per conjugacy class of parabolic subgroups,
/// ordered by rank and label.
pub fn parabolic_classes(datum: &Arc<CoxeterDatum>) -> Result<Vec<ParabolicClass>> {
    let r = datum.rank();
    if r > 12 {
        return Err(Error::Resource("too many subsets".into()));
    }
    let n = 1usize << r;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut el = Elementary::new();
    for mask in 0..n as u32 {
        for (m2, _) in el.moves(datum, mask) {
            let a = find(&mut parent, mask as usize);
            let b = find(&mut parent, m2 as usize);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for mask in 0..n {
        let root = find(&mut parent, mask);
        groups.entry(root).or_default().push(subset_of(mask as u32, r));
    }
    let mut classes = Vec::new();
    for (_, mut members) in groups {
        members.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let rep = members[0].clone();
        let label = component_label(datum, &rep)?;
        classes.push(ParabolicClass { label, subset: rep, members });
    }
    disambiguate(datum, &mut classes)?;
    classes.sort_by(|a, b| a.rank().cmp(&b.rank()).then(a.subset.cmp(&b.subset)));
    Ok(classes)
}

fn disambiguate(datum: &Arc<CoxeterDatum>, classes: &mut [ParabolicClass]) -> Result<()> {
    let mut by_label: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, c) in classes.iter().enumerate() {
        by_label.entry(c.label.clone()).or_default().push(i);
    }
    let e7 = datum.irreducible_type() == Some(CoxType::E(7));
    for (label, idx) in by_label {
        if idx.len() < 2 {
            continue;
        }
        if e7 && idx.len() == 2 && (label == "A5" || label == "A1^3") {
            let contained = |c: &ParabolicClass| -> Result<bool> {
                if label == "A5" {
                    // the class already present in E6 = ⟨s1..s6⟩
                    Ok(c.members.iter().any(|m| m.iter().all(|&s| s < 6)))
                } else {
                    // contained in some D4 parabolic
                    for m in &c.members {
                        for extra in 0..datum.rank() {
                            if m.contains(&extra) {
                                continue;
                            }
                            let mut l = m.clone();
                            l.push(extra);
                            l.sort();
                            let comps = classify_subset(&datum.coxeter_matrix, &l)?;
                            if comps.iter().any(|c| c.ctype == CoxType::D(4) && m.iter().filter(|s| c.nodes.contains(s)).count() == 3) {
                                return Ok(true);
                            }
                        }
                    }
                    Ok(false)
                }
            };
            let first = contained(&classes[idx[0]])?;
            let second = contained(&classes[idx[1]])?;
            if first == second {
                return Err(Error::Invariant(format!("cannot separate the two {label} classes of E7")));
            }
            let (a, b) = if first { (idx[0], idx[1]) } else { (idx[1], idx[0]) };
            classes[a].label = prime_part(&label, "'");
            classes[b].label = prime_part(&label, "''");
            continue;
        }
        for (k, &i) in idx.iter().enumerate() {
            classes[i].label = format!("{label}#{}", k + 1);
        }
    }
    Ok(())
}

/// Simple roots of a root subsystem given by a set of positive roots.
pub fn simple_system(datum: &CoxeterDatum, positive: &[usize]) -> Vec<usize> {
    // β is simple iff no reflection s_γ (γ in the set) makes it smaller;
    // equivalently β is not a positive combination of two others. We use
    // the criterion: β is simple iff s_β permutes the other positive roots.
    let set: HashSet<usize> = positive.iter().copied().collect();
    let mut out = Vec::new();
    for &b in positive {
        let refl = reflection_perm(datum, b);
        if positive.iter().all(|&g| g == b || set.contains(&(refl[g] as usize))) {
            out.push(b);
        }
    }
    out.sort();
    out
}

/// Permutation of the roots induced by the reflection in root `k`.
pub fn reflection_perm(datum: &CoxeterDatum, k: usize) -> Vec<u16> {
    // conjugate a simple reflection to the root: find w, s with w(α_s) = β
    let k = if datum.is_positive(k) { k } else { datum.neg_root(k) };
    let mut word = Vec::new();
    let mut cur = k;
    while cur >= datum.rank() {
        // some simple s lowers the height of cur
        let s = (0..datum.rank())
            .find(|&s| {
                let img = datum.sperm[s][cur] as usize;
                datum.is_positive(img) && height(datum, img) < height(datum, cur)
            })
            .expect("non-simple positive root has a lowering simple reflection");
        word.push(s);
        cur = datum.sperm[s][cur] as usize;
    }
    // β = s_{w1} ... s_{wm}(α_cur), reflection = w s_cur w⁻¹
    let mut full: Vec<usize> = word.clone();
    full.push(cur);
    full.extend(word.iter().rev());
    let mut perm: Vec<u16> = (0..datum.num_roots() as u16).collect();
    for &s in &full {
        let sp = &datum.sperm[s];
        perm = sp.iter().map(|&x| perm[x as usize]).collect();
    }
    perm
}

fn height(datum: &CoxeterDatum, k: usize) -> f64 {
    datum.roots[k].iter().map(|c| c.to_complex().0).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> Arc<CoxeterDatum> {
        Arc::new(CoxeterDatum::build(s).unwrap())
    }

    #[test]
    fn longest_elements() {
        let a3 = datum("A3");
        assert!(longest_element(&a3, &[]).is_identity());
        assert_eq!(longest_element(&a3, &[1]), GroupElement::simple(&a3, 1));
        let w0 = longest_element(&a3, &[0, 1, 2]);
        assert_eq!(w0.length(), 6);
        assert!(w0.multiply(&w0).unwrap().is_identity());
    }

    #[test]
    fn coset_representatives() {
        let a2 = datum("A2");
        let reps = min_coset_reps(&a2, &[0], CosetSide::Left);
        let lens: Vec<usize> = reps.iter().map(|d| d.length()).collect();
        assert_eq!(lens, vec![0, 1, 2]);
        assert_eq!(min_coset_reps(&a2, &[0, 1], CosetSide::Left).len(), 1);
        assert_eq!(min_coset_reps(&a2, &[], CosetSide::Right).len(), 6);
        let dc = min_double_coset_reps(&a2, &[0], &[0]);
        assert_eq!(dc.len(), 2);
        assert_eq!(dc[1], GroupElement::simple(&a2, 1));
    }

    #[test]
    fn normalizers() {
        let a2 = datum("A2");
        assert_eq!(normalizer_complement(&a2, &[0]).len(), 1);
        let b2 = datum("B2");
        let n = normalizer_complement(&b2, &[0]);
        assert_eq!(n.len(), 2);
        let w0 = longest_element(&b2, &[0, 1]);
        assert_eq!(n[1], w0.multiply(&GroupElement::simple(&b2, 0)).unwrap());
        let a3 = datum("A3");
        assert_eq!(normalizer_complement(&a3, &[0, 2]).len(), 2);
    }

    #[test]
    fn class_labels() {
        let labels = |s: &str| -> Vec<String> { parabolic_classes(&datum(s)).unwrap().into_iter().map(|c| c.label).collect() };
        assert_eq!(labels("A2"), vec!["1", "A1", "A2"]);
        let f4 = labels("F4");
        assert_eq!(f4.len(), 12);
        for l in ["A1'", "A1", "A1'xA1", "A2'", "A2", "B2", "B3", "C3", "A1'xA2", "A2'xA1"] {
            assert!(f4.contains(&l.to_string()), "{l} missing from {f4:?}");
        }
        let d4 = labels("D4");
        assert_eq!(d4.iter().filter(|l| l.starts_with("A3")).count(), 3);
    }

    #[test]
    fn reflections_of_roots() {
        let b3 = datum("B3");
        for k in 0..b3.npos {
            let p = reflection_perm(&b3, k);
            assert_eq!(p[k] as usize, b3.neg_root(k));
        }
    }
}
