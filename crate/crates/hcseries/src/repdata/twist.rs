//! Action of N_W(W_J) on lowest-weight labels of W_J by conjugation.

use crate::coxeter::classify::classify_subset;
use crate::coxeter::{Component, CoxType, CoxeterDatum, GroupElement};
use crate::error::{Error, Result};

use super::FactorLabel;

/// Irreducible factors of W_J in the order used for labels: components of
/// the sorted subset, each with its nodes in standard order.
pub fn parabolic_factors(datum: &CoxeterDatum, j: &[usize]) -> Result<Vec<Component>> {
    let mut sorted = j.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() {
        return Ok(vec![]);
    }
    classify_subset(&datum.coxeter_matrix, &sorted)
}

/// The permutation of standard positions induced by w0 of the type.
pub fn opposition(t: CoxType) -> Vec<usize> {
    let r = t.rank();
    match t {
        CoxType::A(_) => (0..r).rev().collect(),
        CoxType::D(n) if n % 2 == 1 => {
            let mut p: Vec<usize> = (0..r).collect();
            p.swap(n - 2, n - 1);
            p
        }
        CoxType::E(6) => vec![5, 1, 4, 3, 2, 0],
        CoxType::I2(m) if m % 2 == 1 => vec![1, 0],
        _ => (0..r).collect(),
    }
}

/// Shortest element of n·W_J; it maps Δ_J onto itself when n normalizes W_J.
fn reduce_mod_parabolic(n: &GroupElement, j: &[usize]) -> Result<GroupElement> {
    let mut m = n.clone();
    while let Some(&s) = j.iter().find(|&&s| m.is_right_descent(s)) {
        m = m.rmul_simple(s);
    }
    for &s in j {
        match m.conjugate_simple(s) {
            Some(t) if j.contains(&t) => {}
            _ => return Err(Error::Invalid(format!("{n} does not normalize W_J for J = {j:?}"))),
        }
    }
    Ok(m)
}

fn transport(t: CoxType, phi: &[usize], label: &FactorLabel) -> Result<FactorLabel> {
    let ident = phi.iter().enumerate().all(|(i, &x)| i == x);
    if ident || phi == opposition(t).as_slice() {
        return Ok(label.clone());
    }
    let geometric = matches!(label, FactorLabel::Triv | FactorLabel::Sign | FactorLabel::Refl | FactorLabel::ExtSquare);
    match t {
        CoxType::D(4) => {
            let canon = label.canonical(t);
            let fixed = [FactorLabel::Triv, FactorLabel::Sign, FactorLabel::Refl].iter().any(|x| x.canonical(t) == canon);
            if geometric || fixed {
                return Ok(label.clone());
            }
            // the fork swap alone behaves as in the general even case
            let swap_only = phi[0] == 0;
            if swap_only {
                if let FactorLabel::Bip(b) = label {
                    if !b.is_symmetric() {
                        return Ok(label.clone());
                    }
                }
            }
            Err(Error::Invalid(format!("triality does not fix the label {label} of D4")))
        }
        CoxType::D(_) => match label {
            FactorLabel::Bip(b) if b.is_symmetric() => {
                Err(Error::Invalid(format!("the fork swap exchanges the two constituents of {b}")))
            }
            FactorLabel::Bip(_) => Ok(label.clone()),
            _ if geometric => Ok(label.clone()),
            _ => Err(Error::Invalid(format!("no transport rule for {label} under the fork swap"))),
        },
        CoxType::I2(_) | CoxType::B(2) if matches!(label, FactorLabel::Triv | FactorLabel::Sign | FactorLabel::Refl | FactorLabel::ReflConj) => {
            Ok(label.clone())
        }
        _ => Err(Error::Invalid(format!("no transport rule for {label} under the diagram automorphism {phi:?} of {t}"))),
    }
}

/// Move labels from the factors `from` to the factors `to` along a node
/// bijection `map` that conjugates W_from onto W_to.
pub fn relabel(from: &[Component], to: &[Component], map: impl Fn(usize) -> Option<usize>, labels: &[FactorLabel]) -> Result<Vec<FactorLabel>> {
    if labels.len() != from.len() || from.len() != to.len() {
        return Err(Error::Invalid(format!("{} labels for {} factors", labels.len(), from.len())));
    }
    let mut out: Vec<Option<FactorLabel>> = vec![None; to.len()];
    for (a, comp) in from.iter().enumerate() {
        let images: Vec<usize> =
            comp.nodes.iter().map(|&s| map(s).ok_or_else(|| Error::Invalid("element does not normalize the parabolic".into()))).collect::<Result<_>>()?;
        let b = to
            .iter()
            .position(|c| c.nodes.contains(&images[0]))
            .ok_or_else(|| Error::Invalid("conjugate of a factor is not a factor".into()))?;
        let target = &to[b];
        if target.ctype != comp.ctype || out[b].is_some() {
            return Err(Error::Invariant(format!("{} is conjugate to {}", comp.ctype, target.ctype)));
        }
        let phi: Vec<usize> = images
            .iter()
            .map(|x| target.nodes.iter().position(|y| y == x).ok_or_else(|| Error::Invariant("factor image is split".into())))
            .collect::<Result<_>>()?;
        out[b] = Some(transport(comp.ctype, &phi, &labels[a])?);
    }
    Ok(out.into_iter().map(|x| x.expect("bijection on factors")).collect())
}

/// The labels of the conjugate representation ⁿL: the factor at C_b of the
/// result is the (transported) factor at C_a where n·C_a·n⁻¹ = C_b.
pub fn twist_action(datum: &CoxeterDatum, j: &[usize], n: &GroupElement, labels: &[FactorLabel]) -> Result<Vec<FactorLabel>> {
    let factors = parabolic_factors(datum, j)?;
    let mut sorted = j.to_vec();
    sorted.sort_unstable();
    let m = reduce_mod_parabolic(n, &sorted)?;
    relabel(&factors, &factors, |s| m.conjugate_simple(s), labels)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::coxeter::{longest_element, normalizer_complement};
    use crate::repdata::{Bipartition, LowestWeightLabel};

    #[test]
    fn oppositions_match_longest_elements() {
        for t in ["A1", "A2", "A5", "B3", "D4", "D5", "D6", "E6", "E7", "F4", "H3", "H4", "I2(5)", "I2(8)"] {
            let d = Arc::new(CoxeterDatum::build(t).unwrap());
            let ty = d.irreducible_type().unwrap();
            let all: Vec<usize> = (0..d.rank()).collect();
            let w0 = longest_element(&d, &all);
            let phi: Vec<usize> = all.iter().map(|&s| d.neg_root(w0.apply(s))).collect();
            assert_eq!(phi, opposition(ty), "{t}");
        }
    }

    #[test]
    fn type_a_swap_fixes_triv() {
        let d = Arc::new(CoxeterDatum::build("A5").unwrap());
        let j = [0, 1, 3, 4];
        let labels = LowestWeightLabel::triv().resolve(2).unwrap();
        for n in normalizer_complement(&d, &j) {
            assert_eq!(twist_action(&d, &j, &n, &labels).unwrap(), labels);
        }
        let mixed = vec![FactorLabel::Triv, FactorLabel::Sign];
        let images: Vec<_> = normalizer_complement(&d, &j).iter().map(|n| twist_action(&d, &j, n, &mixed).unwrap()).collect();
        assert!(images.contains(&vec![FactorLabel::Sign, FactorLabel::Triv]));
    }

    #[test]
    fn d4_in_e6_fixes_reflection() {
        let d = Arc::new(CoxeterDatum::build("E6").unwrap());
        let j = [1, 2, 3, 4];
        let l = vec![FactorLabel::Bip(Bipartition::parse("(3,1)").unwrap())];
        let norm = normalizer_complement(&d, &j);
        assert_eq!(norm.len(), 6);
        for n in &norm {
            assert_eq!(twist_action(&d, &j, n, &l).unwrap(), l);
        }
        let bad = vec![FactorLabel::Bip(Bipartition::parse("(2.1,1)").unwrap())];
        assert!(norm.iter().any(|n| twist_action(&d, &j, n, &bad).is_err()));
    }

    #[test]
    fn rejects_non_normalizing() {
        let d = Arc::new(CoxeterDatum::build("A3").unwrap());
        let n = GroupElement::simple(&d, 1);
        assert!(twist_action(&d, &[0], &n, &[FactorLabel::Triv]).is_err());
    }
}
