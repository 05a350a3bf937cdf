use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::{CycNumber, LaurentPoly, Ring};
use crate::error::{Error, Result};

use super::classify::{classify_components, Component};
use super::types::CoxType;

/// A finite Coxeter system with its geometric root system.
///
/// Roots are indexed `0..2N`: `0..N` are positive (the simple roots come
/// first, in node order) and `N + k` is the negative of root `k`.
#[derive(Clone)]
pub struct CoxeterDatum {
    pub name: String,
    pub components: Vec<Component>,
    pub gen_names: Vec<String>,
    pub coxeter_matrix: Vec<Vec<u32>>,
    pub cartan: Vec<Vec<CycNumber>>,
    pub node_class: Vec<usize>,
    pub class_names: Vec<String>,
    pub roots: Vec<Vec<CycNumber>>,
    pub npos: usize,
    pub sperm: Vec<Vec<u16>>,
    pub root_class: Vec<usize>,
    pub vars: Arc<[String]>,
    root_index: HashMap<Vec<CycNumber>, u16>,
}

impl fmt::Debug for CoxeterDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterDatum({})", self.name)
    }
}

fn coxeter_from_cartan(cartan: &[Vec<CycNumber>]) -> Result<Vec<Vec<u32>>> {
    // a_ij a_ji = 4 cos²(π/m)
    let r = cartan.len();
    let mut m = vec![vec![1u32; r]; r];
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let prod = cartan[i][j].mul(&cartan[j][i]);
            let mut found = None;
            for cand in 2..=60u32 {
                let c = CycNumber::two_cos(2 * cand, 1);
                if c.mul(&c) == prod {
                    found = Some(cand);
                    break;
                }
            }
            m[i][j] = found.ok_or_else(|| Error::Invalid(format!("Cartan entries ({i},{j}) give no finite order")))?;
        }
    }
    Ok(m)
}

impl CoxeterDatum {
    /// Build the standard datum for an irreducible type or a product such as
    /// "A2xA1" (components are numbered consecutively).
    pub fn build(symbol: &str) -> Result<CoxeterDatum> {
        let parts: Vec<&str> = symbol.split(['x', '×']).map(|s| s.trim()).filter(|s| !s.is_empty()).collect();
        if parts.is_empty() {
            return Err(Error::UnknownType(symbol.to_string()));
        }
        let mut types = Vec::new();
        for p in parts {
            // allow powers like A1^3
            let (base, pow) = match p.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| Error::UnknownType(symbol.to_string()))?),
                None => (p, 1),
            };
            let t: CoxType = base.parse()?;
            for _ in 0..pow {
                types.push(t);
            }
        }
        Self::from_types(&types)
    }

    pub fn from_type(t: CoxType) -> Result<CoxeterDatum> {
        Self::from_types(&[t])
    }

    pub fn from_types(types: &[CoxType]) -> Result<CoxeterDatum> {
        let r: usize = types.iter().map(|t| t.rank()).sum();
        if r == 0 {
            return Err(Error::UnknownType("rank 0".into()));
        }
        let mut cartan = vec![vec![CycNumber::zero(); r]; r];
        let mut gen_names = Vec::new();
        let mut node_class = Vec::new();
        let mut class_names: Vec<String> = Vec::new();
        let mut off = 0;
        let single = types.len() == 1;
        for (k, t) in types.iter().enumerate() {
            let a = t.cartan();
            let n = t.rank();
            for i in 0..n {
                for j in 0..n {
                    cartan[off + i][off + j] = a[i][j].clone();
                }
            }
            let names = t.gen_names();
            let (cls, cnames) = t.classes();
            let base = class_names.len();
            for i in 0..n {
                gen_names.push(if single { names[i].clone() } else { format!("{}_{}", names[i], k + 1) });
                node_class.push(base + cls[i]);
            }
            for c in cnames {
                class_names.push(if single { c } else { format!("{c}{}", k + 1) });
            }
            off += n;
        }
        let name = types.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x");
        Self::from_cartan(&name, cartan, gen_names, node_class, class_names)
    }

    /// Build from an arbitrary Cartan matrix with given node classes.
    pub fn from_cartan(
        name: &str,
        cartan: Vec<Vec<CycNumber>>,
        gen_names: Vec<String>,
        node_class: Vec<usize>,
        class_names: Vec<String>,
    ) -> Result<CoxeterDatum> {
        let r = cartan.len();
        let coxeter_matrix = coxeter_from_cartan(&cartan)?;
        // positive roots by closure: s_j permutes Φ⁺ \ {α_j}
        let mut roots: Vec<Vec<CycNumber>> = Vec::new();
        let mut root_class = Vec::new();
        let mut index: HashMap<Vec<CycNumber>, u16> = HashMap::new();
        for i in 0..r {
            let mut v = vec![CycNumber::zero(); r];
            v[i] = CycNumber::one();
            index.insert(v.clone(), i as u16);
            roots.push(v);
            root_class.push(node_class[i]);
        }
        let mut k = 0;
        while k < roots.len() {
            for j in 0..r {
                if k == j {
                    continue;
                }
                let beta = &roots[k];
                let mut pair = CycNumber::zero();
                for i in 0..r {
                    if !beta[i].is_zero() {
                        pair = pair.add(&beta[i].mul(&cartan[j][i]));
                    }
                }
                if pair.is_zero() {
                    continue;
                }
                let mut nb = beta.clone();
                nb[j] = nb[j].sub(&pair);
                let nb: Vec<CycNumber> = nb.into_iter().map(|x| x.reduce()).collect();
                if !index.contains_key(&nb) {
                    if roots.len() >= 400 {
                        return Err(Error::Invalid(format!("{name}: root system is not finite")));
                    }
                    index.insert(nb.clone(), roots.len() as u16);
                    roots.push(nb);
                    root_class.push(root_class[k]);
                }
            }
            k += 1;
        }
        let npos = roots.len();
        for k in 0..npos {
            let neg: Vec<CycNumber> = roots[k].iter().map(|x| x.neg()).collect();
            index.insert(neg.clone(), (npos + k) as u16);
            roots.push(neg);
            root_class.push(root_class[k]);
        }
        let mut sperm = vec![vec![0u16; 2 * npos]; r];
        for j in 0..r {
            for k in 0..2 * npos {
                let beta = &roots[k];
                let mut pair = CycNumber::zero();
                for i in 0..r {
                    if !beta[i].is_zero() {
                        pair = pair.add(&beta[i].mul(&cartan[j][i]));
                    }
                }
                let mut nb = beta.clone();
                nb[j] = nb[j].sub(&pair).reduce();
                sperm[j][k] = *index
                    .get(&nb)
                    .ok_or_else(|| Error::Invariant(format!("{name}: reflection image is not a root")))?;
            }
        }
        let components = classify_components(&coxeter_matrix)?;
        let vars: Arc<[String]> = Arc::from(class_names.clone());
        Ok(CoxeterDatum {
            name: name.to_string(),
            components,
            gen_names,
            coxeter_matrix,
            cartan,
            node_class,
            class_names,
            roots,
            npos,
            sperm,
            root_class,
            vars,
            root_index: index,
        })
    }

    pub fn rank(&self) -> usize {
        self.gen_names.len()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.npos
    }

    pub fn neg_root(&self, k: usize) -> usize {
        if k < self.npos {
            k + self.npos
        } else {
            k - self.npos
        }
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.npos
    }

    pub fn root_of(&self, v: &[CycNumber]) -> Option<usize> {
        let key: Vec<CycNumber> = v.iter().map(|x| x.reduce()).collect();
        self.root_index.get(&key).map(|x| *x as usize)
    }

    pub fn num_classes(&self) -> usize {
        self.class_names.len()
    }

    /// Order from the classification of the components.
    pub fn order(&self) -> u64 {
        self.components.iter().map(|c| c.ctype.order()).product()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn irreducible_type(&self) -> Option<CoxType> {
        if self.components.len() == 1 {
            Some(self.components[0].ctype)
        } else {
            None
        }
    }

    pub fn node_by_name(&self, s: &str) -> Option<usize> {
        self.gen_names.iter().position(|g| g == s)
    }

    /// Parse a whitespace-separated word of generator names; "" or "1" is the
    /// empty word.
    pub fn parse_word(&self, s: &str) -> Result<Vec<usize>> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() || s == "1" || s == "e" {
            return Ok(vec![]);
        }
        s.split(|c: char| c.is_whitespace() || c == ',' || c == '*' || c == '.')
            .filter(|t| !t.is_empty())
            .map(|t| self.node_by_name(t).ok_or_else(|| Error::Invalid(format!("unknown generator `{t}` in {}", self.name))))
            .collect()
    }

    pub fn word_text(&self, w: &[usize]) -> String {
        w.iter().map(|&i| self.gen_names[i].as_str()).collect::<Vec<_>>().join(" ")
    }

    /// Generic parameter of node s: the Laurent variable of its class.
    pub fn generic_param(&self, s: usize) -> LaurentPoly {
        LaurentPoly::var(&self.vars, self.node_class[s])
    }

    /// Datum of the standard parabolic subgroup W_J (nodes renumbered in
    /// the given order, classes and names inherited).
    pub fn sub_datum(&self, j: &[usize]) -> Result<CoxeterDatum> {
        let cartan = j.iter().map(|&a| j.iter().map(|&b| self.cartan[a][b].clone()).collect()).collect();
        let names = j.iter().map(|&a| self.gen_names[a].clone()).collect();
        let cls = j.iter().map(|&a| self.node_class[a]).collect();
        let name = format!("{}[{}]", self.name, j.iter().map(|&a| self.gen_names[a].as_str()).collect::<Vec<_>>().join(","));
        CoxeterDatum::from_cartan(&name, cartan, names, cls, self.class_names.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_parabolic() {
        let d = CoxeterDatum::build("B2").unwrap().sub_datum(&[]).unwrap();
        assert_eq!((d.rank(), d.order(), d.npos), (0, 1, 0));
    }

    #[test]
    fn root_counts() {
        for (s, n) in [("A2", 3), ("B3", 9), ("D4", 12), ("E6", 36), ("F4", 24), ("H3", 15), ("H4", 60), ("I2(7)", 7), ("E8", 120)] {
            let d = CoxeterDatum::build(s).unwrap();
            assert_eq!(d.npos, n, "{s}");
        }
    }

    #[test]
    fn classes() {
        let f4 = CoxeterDatum::build("F4").unwrap();
        assert_eq!(f4.node_class, vec![0, 0, 1, 1]);
        let short = (0..f4.npos).filter(|&k| f4.root_class[k] == 0).count();
        assert_eq!(short, 12);
        let b3 = CoxeterDatum::build("B3").unwrap();
        assert_eq!((0..b3.npos).filter(|&k| b3.root_class[k] == 0).count(), 3);
    }

    #[test]
    fn product_types() {
        let d = CoxeterDatum::build("A2xA1").unwrap();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.npos, 4);
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.order(), 12);
        let d = CoxeterDatum::build("A1^3").unwrap();
        assert_eq!(d.order(), 8);
    }
}
