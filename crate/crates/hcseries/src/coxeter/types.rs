//! Irreducible finite Coxeter types and their standard presentations.
//!
//! Node numbering: A_n, E_n, H_n, I2(m) and D_n follow Bourbaki (for D_n the
//! fork is s_{n-1}, s_n); B_n uses s0 for the short (sign-change) node and
//! s1..s_{n-1} for the long chain; F4 has s1, s2 short and s3, s4 long.

use std::fmt;
use std::str::FromStr;

use crate::arith::{CycNumber, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl CoxType {
    /// Canonical form: I2(3) = A2, I2(4) = B2, D3 = A3.
    pub fn normalized(self) -> CoxType {
        match self {
            CoxType::I2(3) => CoxType::A(2),
            CoxType::I2(4) => CoxType::B(2),
            CoxType::D(3) => CoxType::A(3),
            t => t,
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            CoxType::A(n) | CoxType::B(n) | CoxType::D(n) | CoxType::E(n) | CoxType::H(n) => n,
            CoxType::F4 => 4,
            CoxType::I2(_) => 2,
        }
    }

    pub fn degrees(&self) -> Vec<u64> {
        match *self {
            CoxType::A(n) => (2..=n as u64 + 1).collect(),
            CoxType::B(n) => (1..=n as u64).map(|i| 2 * i).collect(),
            CoxType::D(n) => {
                let mut v: Vec<u64> = (1..n as u64).map(|i| 2 * i).collect();
                v.push(n as u64);
                v.sort();
                v
            }
            CoxType::E(6) => vec![2, 5, 6, 8, 9, 12],
            CoxType::E(7) => vec![2, 6, 8, 10, 12, 14, 18],
            CoxType::E(8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
            CoxType::F4 => vec![2, 6, 8, 12],
            CoxType::H(3) => vec![2, 6, 10],
            CoxType::H(4) => vec![2, 12, 20, 30],
            CoxType::I2(m) => vec![2, m as u64],
            t => panic!("no degrees for {t}"),
        }
    }

    pub fn order(&self) -> u64 {
        self.degrees().iter().product()
    }

    pub fn num_reflections(&self) -> u64 {
        self.degrees().iter().map(|d| d - 1).sum()
    }

    /// Number of irreducible characters of the Coxeter group.
    pub fn num_irreps(&self) -> usize {
        fn partitions(n: usize) -> usize {
            let mut p = vec![0usize; n + 1];
            p[0] = 1;
            for k in 1..=n {
                for i in k..=n {
                    p[i] += p[i - k];
                }
            }
            p[n]
        }
        fn bipartitions(n: usize) -> usize {
            (0..=n).map(|k| partitions(k) * partitions(n - k)).sum()
        }
        match *self {
            CoxType::A(n) => partitions(n + 1),
            CoxType::B(n) => bipartitions(n),
            CoxType::D(n) => {
                // unordered pairs; symmetric ones split in two
                let b = bipartitions(n);
                if n % 2 == 0 {
                    let sym = partitions(n / 2);
                    (b - sym) / 2 + 2 * sym
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
                    (m as usize + 6) / 2
                } else {
                    (m as usize + 3) / 2
                }
            }
            t => panic!("unsupported type {t}"),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            CoxType::A(n) => n >= 1,
            CoxType::B(n) => n >= 1,
            CoxType::D(n) => n >= 4,
            CoxType::E(n) => (6..=8).contains(&n),
            CoxType::F4 => true,
            CoxType::H(n) => n == 3 || n == 4,
            CoxType::I2(m) => m >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownType(self.to_string()))
        }
    }

    pub fn gen_names(&self) -> Vec<String> {
        match *self {
            CoxType::B(n) => (0..n).map(|i| format!("s{i}")).collect(),
            t => (1..=t.rank()).map(|i| format!("s{i}")).collect(),
        }
    }

    /// Edges (i, j, m) with m ≥ 3, 0-based node indices.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        match *self {
            CoxType::A(n) => (0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect(),
            CoxType::B(n) => (0..n.saturating_sub(1)).map(|i| (i, i + 1, if i == 0 { 4 } else { 3 })).collect(),
            CoxType::D(n) => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1, 3)).collect();
                e.push((n - 3, n - 1, 3));
                e
            }
            CoxType::E(n) => {
                let mut e = vec![(0, 2, 3), (1, 3, 3), (2, 3, 3)];
                for i in 3..n - 1 {
                    e.push((i, i + 1, 3));
                }
                e
            }
            CoxType::F4 => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
            CoxType::H(n) => {
                let mut e = vec![(0, 1, 5)];
                for i in 1..n - 1 {
                    e.push((i, i + 1, 3));
                }
                e
            }
            CoxType::I2(m) => {
                if m == 2 {
                    vec![]
                } else {
                    vec![(0, 1, m)]
                }
            }
        }
    }

    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let r = self.rank();
        let mut m = vec![vec![2u32; r]; r];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, j, x) in self.edges() {
            m[i][j] = x;
            m[j][i] = x;
        }
        m
    }

    /// Cartan matrix a_ij with s_i(α_j) = α_j − a_ij α_i.
    pub fn cartan(&self) -> Vec<Vec<CycNumber>> {
        let r = self.rank();
        let mut a = vec![vec![CycNumber::zero(); r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = CycNumber::from_int(2);
        }
        for (i, j, m) in self.edges() {
            let (aij, aji) = match (*self, m) {
                (_, 3) => (CycNumber::from_int(-1), CycNumber::from_int(-1)),
                // B_n: α0 short, α1 long
                (CoxType::B(_), 4) => (CycNumber::from_int(-2), CycNumber::from_int(-1)),
                // F4: α2 short, α3 long
                (CoxType::F4, 4) => (CycNumber::from_int(-2), CycNumber::from_int(-1)),
                (_, m) => {
                    let c = CycNumber::two_cos(2 * m, 1).neg();
                    (c.clone(), c)
                }
            };
            a[i][j] = aij;
            a[j][i] = aji;
        }
        a
    }

    /// Reflection class of each node and the class parameter names.
    pub fn classes(&self) -> (Vec<usize>, Vec<String>) {
        let r = self.rank();
        match *self {
            CoxType::B(1) => (vec![0], vec!["p".into()]),
            CoxType::B(n) => {
                let mut c = vec![1; n];
                c[0] = 0;
                (c, vec!["p".into(), "q".into()])
            }
            CoxType::F4 => (vec![0, 0, 1, 1], vec!["p".into(), "q".into()]),
            CoxType::I2(m) if m % 2 == 0 => (vec![0, 1], vec!["p".into(), "q".into()]),
            _ => (vec![0; r], vec!["q".into()]),
        }
    }
}

impl fmt::Display for CoxType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoxType::A(n) => write!(f, "A{n}"),
            CoxType::B(n) => write!(f, "B{n}"),
            CoxType::D(n) => write!(f, "D{n}"),
            CoxType::E(n) => write!(f, "E{n}"),
            CoxType::F4 => write!(f, "F4"),
            CoxType::H(n) => write!(f, "H{n}"),
            CoxType::I2(6) => write!(f, "G2"),
            CoxType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownType(s.to_string());
        if s == "F4" {
            return Ok(CoxType::F4);
        }
        if s == "G2" {
            return Ok(CoxType::I2(6));
        }
        if let Some(rest) = s.strip_prefix("I2(") {
            let m: u32 = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let t = CoxType::I2(m);
            t.validate()?;
            return Ok(t.normalized());
        }
        let (head, num) = s.split_at(1.min(s.len()));
        let n: usize = num.parse().map_err(|_| bad())?;
        let t = match head {
            "A" => CoxType::A(n),
            "B" | "C" => CoxType::B(n),
            "D" => CoxType::D(n),
            "E" => CoxType::E(n),
            "H" => CoxType::H(n),
            _ => return Err(bad()),
        };
        t.validate()?;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["A3", "B4", "D5", "E6", "F4", "H3", "I2(5)", "G2"] {
            assert_eq!(s.parse::<CoxType>().unwrap().to_string(), s);
        }
        assert_eq!("I2(4)".parse::<CoxType>().unwrap(), CoxType::B(2));
        assert!("E9".parse::<CoxType>().is_err());
        assert!("X3".parse::<CoxType>().is_err());
        assert!("A0".parse::<CoxType>().is_err());
    }

    #[test]
    fn orders_and_irreps() {
        assert_eq!(CoxType::E(6).order(), 51840);
        assert_eq!(CoxType::H(4).order(), 14400);
        assert_eq!(CoxType::D(7).order(), 322560);
        assert_eq!(CoxType::B(2).num_irreps(), 5);
        assert_eq!(CoxType::D(4).num_irreps(), 13);
        assert_eq!(CoxType::A(3).num_irreps(), 5);
        assert_eq!(CoxType::I2(5).num_irreps(), 4);
        assert_eq!(CoxType::I2(6).num_irreps(), 6);
        assert_eq!(CoxType::E(6).num_reflections(), 36);
    }
}
