//! Cyclotomic and Poincaré polynomials.

use std::sync::Arc;

use super::cyclo::{phi_coeffs, CycNumber};
use super::laurent::{LaurentPoly, MAX_VARS};
use super::Ring;
use crate::coxeter::{CoxeterDatum, ElementTable};
use crate::error::{Error, Result};

/// Φ_d in the variable `x`.
pub fn cyclotomic_polynomial(d: u32) -> Result<LaurentPoly> {
    if d == 0 {
        return Err(Error::Invalid("cyclotomic polynomial of index 0".into()));
    }
    let vars = LaurentPoly::vars_from(&["x"]);
    let mut acc = LaurentPoly::zero();
    for (k, &c) in phi_coeffs(d).iter().enumerate() {
        let mut e = [0; MAX_VARS];
        e[0] = k as i32;
        acc = acc.add(&LaurentPoly::monomial(&vars, e, CycNumber::from_int(c)));
    }
    Ok(acc)
}

/// Σ_{w ∈ W_J} ∏_classes q_c^{l_c(w)} in the class variables of `datum`.
pub fn poincare_polynomial(datum: &CoxeterDatum, j: &[usize]) -> Result<LaurentPoly> {
    let vars = datum.vars.clone();
    if j.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let sub = datum.sub_datum(j)?;
    let mut acc = LaurentPoly::one();
    for comp in &sub.components {
        let cls: Vec<usize> = comp.nodes.iter().map(|&n| sub.node_class[n]).collect();
        let factor = if cls.iter().all(|&c| c == cls[0]) {
            // single class: ∏ (1 − q^{d_i}) / (1 − q)
            let mut f = LaurentPoly::one();
            for d in comp.ctype.degrees() {
                let mut s = LaurentPoly::zero();
                for k in 0..d {
                    let mut e = [0; MAX_VARS];
                    e[cls[0]] = k as i32;
                    s = s.add(&LaurentPoly::monomial(&vars, e, CycNumber::one()));
                }
                f = f.mul(&s);
            }
            f
        } else {
            let nodes: Vec<usize> = comp.nodes.clone();
            let cd = Arc::new(sub.sub_datum(&nodes)?);
            let table = ElementTable::new(&cd)?;
            let mut f = LaurentPoly::zero();
            for w in 0..table.size() as u32 {
                let mut e = [0; MAX_VARS];
                for (c, &l) in table.class_lengths(w).iter().enumerate() {
                    e[c] = l as i32;
                }
                f = f.add(&LaurentPoly::monomial(&vars, e, CycNumber::one()));
            }
            f
        };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}
