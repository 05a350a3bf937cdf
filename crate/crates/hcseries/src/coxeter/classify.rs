//! Identification of Coxeter matrices with standard types.

use super::types::CoxType;
use crate::error::{Error, Result};

/// An irreducible component; `nodes[k]` is the node playing the role of the
/// k-th standard generator of `ctype`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub ctype: CoxType,
    pub nodes: Vec<usize>,
}

pub fn connected_components(m: &[Vec<u32>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; nodes.len()];
    let mut out = Vec::new();
    for start in 0..nodes.len() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(a) = stack.pop() {
            comp.push(nodes[a]);
            for b in 0..nodes.len() {
                if !seen[b] && m[nodes[a]][nodes[b]] >= 3 {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out.sort();
    out
}

/// Classify every component of the full matrix.
pub fn classify_components(m: &[Vec<u32>]) -> Result<Vec<Component>> {
    let all: Vec<usize> = (0..m.len()).collect();
    classify_subset(m, &all)
}

/// Classify the components of the submatrix on `nodes`.
pub fn classify_subset(m: &[Vec<u32>], nodes: &[usize]) -> Result<Vec<Component>> {
    connected_components(m, nodes).into_iter().map(|c| classify_connected(m, &c)).collect()
}

fn neighbours(m: &[Vec<u32>], comp: &[usize], a: usize) -> Vec<usize> {
    comp.iter().copied().filter(|&b| b != a && m[a][b] >= 3).collect()
}

/// Walk a path starting at `start`, away from `avoid`.
fn walk(m: &[Vec<u32>], comp: &[usize], start: usize, avoid: Option<usize>) -> Vec<usize> {
    let mut path = vec![start];
    let mut prev = avoid;
    let mut cur = start;
    loop {
        let next: Vec<usize> = neighbours(m, comp, cur).into_iter().filter(|&b| Some(b) != prev && !path.contains(&b)).collect();
        match next.as_slice() {
            [n] => {
                prev = Some(cur);
                cur = *n;
                path.push(cur);
            }
            _ => return path,
        }
    }
}

pub fn classify_connected(m: &[Vec<u32>], comp: &[usize]) -> Result<Component> {
    let n = comp.len();
    let fail = || Error::Invariant(format!("unclassifiable Coxeter graph on nodes {comp:?}"));
    if n == 1 {
        return Ok(Component { ctype: CoxType::A(1), nodes: comp.to_vec() });
    }
    if n == 2 {
        let l = m[comp[0]][comp[1]];
        let t = CoxType::I2(l).normalized();
        return Ok(Component { ctype: t, nodes: comp.to_vec() });
    }
    let mut labels = Vec::new();
    let mut degs = vec![0; n];
    for i in 0..n {
        for j in i + 1..n {
            let l = m[comp[i]][comp[j]];
            if l >= 3 {
                labels.push((comp[i], comp[j], l));
                degs[i] += 1;
                degs[j] += 1;
            }
        }
    }
    if labels.len() != n - 1 {
        return Err(fail());
    }
    let maxdeg = *degs.iter().max().unwrap();
    let special: Vec<&(usize, usize, u32)> = labels.iter().filter(|e| e.2 != 3).collect();
    let ends: Vec<usize> = (0..n).filter(|&i| degs[i] == 1).map(|i| comp[i]).collect();
    if maxdeg <= 2 {
        match special.as_slice() {
            [] => {
                let path = walk(m, comp, ends[0], None);
                Ok(Component { ctype: CoxType::A(n), nodes: path })
            }
            [&(a, b, 4)] => {
                if ends.contains(&a) || ends.contains(&b) {
                    let e = if ends.contains(&a) { a } else { b };
                    let path = walk(m, comp, e, None);
                    Ok(Component { ctype: CoxType::B(n), nodes: path })
                } else if n == 4 {
                    let path = walk(m, comp, ends[0], None);
                    Ok(Component { ctype: CoxType::F4, nodes: path })
                } else {
                    Err(fail())
                }
            }
            [&(a, b, 5)] if (n == 3 || n == 4) && (ends.contains(&a) || ends.contains(&b)) => {
                let e = if ends.contains(&a) { a } else { b };
                let path = walk(m, comp, e, None);
                Ok(Component { ctype: CoxType::H(n), nodes: path })
            }
            _ => Err(fail()),
        }
    } else {
        if maxdeg != 3 || !special.is_empty() {
            return Err(fail());
        }
        let ci = degs.iter().position(|&d| d == 3).unwrap();
        let center = comp[ci];
        if degs.iter().filter(|&&d| d == 3).count() != 1 {
            return Err(fail());
        }
        let mut arms: Vec<Vec<usize>> = neighbours(m, comp, center).into_iter().map(|b| walk(m, comp, b, Some(center))).collect();
        arms.sort_by_key(|a| (a.len(), a[0]));
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        match lens.as_slice() {
            [1, 1, c] => {
                // D_n: long arm reversed, then center, then the two short arms
                let mut nodes: Vec<usize> = arms[2].iter().rev().copied().collect();
                nodes.push(center);
                nodes.push(arms[0][0]);
                nodes.push(arms[1][0]);
                Ok(Component { ctype: CoxType::D(c + 3), nodes })
            }
            [1, 2, c] if (2..=4).contains(c) => {
                // E_n: s1 s3 | s2 | s4=center | s5 ...
                let short = arms[0][0];
                let two = &arms[1];
                let long = &arms[2];
                let mut nodes = vec![two[1], short, two[0], center];
                nodes.extend(long.iter().copied());
                Ok(Component { ctype: CoxType::E(n), nodes })
            }
            _ => Err(fail()),
        }
    }
}

/// All orderings of the component's nodes that realize the standard Coxeter
/// matrix of its type (the given one composed with every diagram automorphism).
pub fn standard_orders(m: &[Vec<u32>], c: &Component) -> Vec<Vec<usize>> {
    let std = c.ctype.coxeter_matrix();
    let n = c.nodes.len();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(
        m: &[Vec<u32>],
        std: &[Vec<u32>],
        nodes: &[usize],
        cur: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = cur.len();
        if k == nodes.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..nodes.len() {
            if used[i] {
                continue;
            }
            let cand = nodes[i];
            if (0..k).all(|j| m[cur[j]][cand] == std[j][k]) {
                used[i] = true;
                cur.push(cand);
                rec(m, std, nodes, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(m, &std, &c.nodes, &mut cur, &mut used, &mut out);
    out
}

/// Text label of a product of components, e.g. "A1^3", "D4xA1".
pub fn product_label(types: &[CoxType]) -> String {
    if types.is_empty() {
        return "1".into();
    }
    let mut ts = types.to_vec();
    ts.sort_by(|a, b| type_sort_key(b).cmp(&type_sort_key(a)));
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < ts.len() {
        let mut j = i;
        while j < ts.len() && ts[j] == ts[i] {
            j += 1;
        }
        let k = j - i;
        parts.push(if k == 1 { ts[i].to_string() } else { format!("{}^{}", ts[i], k) });
        i = j;
    }
    parts.join("x")
}

fn type_sort_key(t: &CoxType) -> (usize, u8) {
    let letter = match t {
        CoxType::A(_) => 0,
        CoxType::B(_) => 1,
        CoxType::D(_) => 2,
        CoxType::I2(_) => 3,
        CoxType::H(_) => 4,
        CoxType::F4 => 5,
        CoxType::E(_) => 6,
    };
    (t.rank(), letter)
}
