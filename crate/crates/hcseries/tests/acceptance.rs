//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact (integers, cyclotomic numbers, Laurent
//! polynomials); the only tolerances are the runtime budgets, pinned below.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hcseries::arith::{unit_root, CycNumber, LaurentPoly, Ring};
use hcseries::cli::{parse_params, resolve_parabolic};
use hcseries::coxeter::{parabolic_classes, CoxType, CoxeterDatum};
use hcseries::gha::{assemble_presentation, class_params, quadratic_param, tensor_decompose, QParam};
use hcseries::hecke::HeckeAlgebra;
use hcseries::repdata::{calibrate, load_findim_table, parabolic_factors, ContentOrientation, FactorLabel, FinDimTable, LowestWeightLabel, RepContext};
use hcseries::simplecount::{analyze, count_supports, irr_count, kz_node_params, AlgebraTable, Limits, SupportTable};
use hcseries::zelt::{type_a_closed_form, type_a_z_top, type_b_closed_form, z_pair, CorankOne, CosetModule};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET_Z_SUITE: Duration = Duration::from_secs(25 * 60);
const BUDGET_CLOSED_FORMS: Duration = Duration::from_secs(120);
const BUDGET_CALIBRATION: Duration = Duration::from_secs(60);
const BUDGET_SANITY: Duration = Duration::from_secs(600);
const BUDGET_F4_POINT: Duration = Duration::from_secs(2 * 3600);
const SANITY_POINTS: usize = 20;

type Outcome = Result<String, String>;

fn r(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn datum(s: &str) -> Arc<CoxeterDatum> {
    Arc::new(CoxeterDatum::build(s).unwrap())
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn findim() -> FinDimTable {
    FinDimTable::load(&data_dir().join("findim.tsv")).unwrap()
}

fn plugins() -> RepContext {
    RepContext::load_dir(&data_dir().join("plugins")).unwrap()
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > budget {
        return Err(format!("{what} took {:.1}s, budget {:.0}s", t.as_secs_f64(), budget.as_secs_f64()));
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for ty in ["A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5", "H3", "F4", "E6"] {
        let d = datum(ty);
        let h = HeckeAlgebra::generic(&d).map_err(|e| e.to_string())?;
        for skip in 0..d.rank() {
            let j: Vec<usize> = (0..d.rank()).filter(|&s| s != skip).collect();
            if CorankOne::new(&d, &j).is_err() {
                continue;
            }
            // z_pair checks z_1 = q^{l(x)}, σ-twisted centrality and σ-invariance
            z_pair(&h, &j).map_err(|e| format!("{ty} J={j:?}: {e}"))?;
            pairs += 1;
        }
    }
    within(start, BUDGET_Z_SUITE, "z-invariant suite")?;
    Ok(format!("{pairs} corank-1 pairs in {:.1}s", start.elapsed().as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for e in 1..=3 {
        let closed = type_a_closed_form(e).map_err(|e| e.to_string())?;
        let h = closed.algebra().clone();
        let j: Vec<usize> = (0..2 * e - 1).filter(|&s| s != e - 1).collect();
        let x = CorankOne::new(h.datum(), &j).map_err(|e| e.to_string())?.x;
        let tx = h.t_basis(&x).map_err(|e| e.to_string())?;
        let sq = tx.multiply(&tx).map_err(|e| e.to_string())?;
        if closed.terms() != sq.terms() {
            return Err(format!("type A closed form differs from T_x² at e = {e}"));
        }
    }
    for n in 1..=3 {
        let (_, z1, z) = type_b_closed_form(n).map_err(|e| e.to_string())?;
        let h = HeckeAlgebra::generic(&datum(&format!("B{}", n + 1))).map_err(|e| e.to_string())?;
        let zp = z_pair(&h, &(0..n).collect::<Vec<_>>()).map_err(|e| e.to_string())?;
        if z.terms() != zp.z_top.terms() || z1.terms() != zp.z_1.terms() {
            return Err(format!("type B closed form differs from brute force at n = {n}"));
        }
    }
    within(start, BUDGET_CLOSED_FORMS, "closed forms")?;
    Ok("type A e=1..3 and type B n=1..3 equal brute force".into())
}

/// Expected parameter as a function of the ambient class parameters.
type Expect = fn(&[(String, CycNumber)]) -> CycNumber;

fn one(_: &[(String, CycNumber)]) -> CycNumber {
    CycNumber::one()
}
fn minus_one(_: &[(String, CycNumber)]) -> CycNumber {
    CycNumber::one().neg()
}
fn q2(c: &[(String, CycNumber)]) -> CycNumber {
    c[0].1.pow(2).reduce()
}
fn q3(c: &[(String, CycNumber)]) -> CycNumber {
    c[0].1.pow(3).reduce()
}
fn p3(c: &[(String, CycNumber)]) -> CycNumber {
    c[0].1.pow(3).reduce()
}

#[derive(Clone, Copy)]
struct Row {
    ambient: &'static str,
    parabolic: &'static str,
    c: &'static str,
    lambdas: &'static [&'static str],
    expect: Expect,
}

const fn row(ambient: &'static str, parabolic: &'static str, c: &'static str, lambdas: &'static [&'static str], expect: Expect) -> Row {
    Row { ambient, parabolic, c, lambdas, expect }
}

const DESK_ROWS: &[Row] = &[
    row("A3", "A1^2", "1/2", &["triv"], one),
    row("A5", "A2^2", "1/3", &["triv"], one),
    row("A7", "A3^2", "1/4", &["triv"], one),
    row("D4", "A1^3", "1/2", &["triv"], minus_one),
    row("D4", "A3", "1/4", &["triv"], minus_one),
    row("D5", "D4", "1/6", &["triv"], q2),
    row("D5", "D4", "1/4", &["triv"], one),
    row("D5", "D4", "1/2", &["triv", "(3,1)"], one),
    row("D6", "A5", "1/6", &["triv"], minus_one),
    row("D6", "D5", "1/8", &["triv"], q2),
    // labels follow the factor order of the parabolic, here A1 then D4
    row("D6", "D4xA1", "1/2", &["triv*triv", "triv*(3,1)"], minus_one),
    row("D7", "A3^2", "1/4", &["triv"], minus_one),
    row("D7", "D6", "1/10", &["triv"], q2),
    row("D7", "D6", "1/6", &["triv"], one),
    row("D7", "D6", "1/2", &["triv", "(0,3^2)", "(1,5)", "(2,4)"], one),
    row("E6", "A5", "1/6", &["triv"], minus_one),
    row("B3", "A1^2", "1/2,1/2", &["triv"], minus_one),
    row("B3", "A2", "1/5,1/3", &["triv"], p3),
    row("B3", "A2", "2/7,1/3", &["triv"], p3),
    row("B3", "A2", "1/11,1/3", &["triv"], p3),
    row("H3", "A2", "1/3", &["triv"], one),
    row("H3", "A1^2", "1/2", &["triv"], minus_one),
    row("H3", "I2(5)", "1/5", &["triv"], one),
    row("H4", "H3", "1/10", &["triv"], minus_one),
    row("H4", "H3", "1/6", &["triv"], minus_one),
    row("H4", "H3", "1/2", &["triv", "V", "Vt"], minus_one),
    row("H4", "A3", "1/4", &["triv"], minus_one),
];

const E7_ROWS: &[Row] = &[
    row("E7", "A6", "1/7", &["triv"], one),
    row("E7", "D6", "1/10", &["triv"], q3),
    row("E7", "D6", "1/6", &["triv"], minus_one),
    row("E7", "D6", "1/2", &["triv", "(0,3^2)", "(1,5)", "(2,4)"], minus_one),
    row("E7", "E6", "1/12", &["triv"], q3),
    row("E7", "E6", "1/9", &["triv"], one),
    row("E7", "E6", "1/6", &["triv", "V"], minus_one),
    row("E7", "E6", "1/3", &["triv", "V", "L2V"], one),
];

/// Checks a row over every non-self-normalizing class matching the label.
fn check_row(row: &Row, ctx: &RepContext) -> Result<usize, String> {
    let d = datum(row.ambient);
    let c = parse_params(&d, row.c).map_err(|e| e.to_string())?;
    let classes = parabolic_classes(&d).map_err(|e| e.to_string())?;
    let mut subsets: Vec<Vec<usize>> =
        classes.iter().filter(|k| k.label.split('#').next() == Some(row.parabolic)).map(|k| k.subset.clone()).collect();
    if subsets.is_empty() {
        subsets.push(resolve_parabolic(&d, row.parabolic).map_err(|e| e.to_string())?);
    }
    let cl = class_params(&d, &c).map_err(|e| e.to_string())?;
    let want = (row.expect)(&cl);
    let mut checked = 0;
    for j in subsets {
        if CorankOne::new(&d, &j).is_err() {
            continue;
        }
        let n = parabolic_factors(&d, &j).map_err(|e| e.to_string())?.len();
        for l in row.lambdas {
            let labels = LowestWeightLabel::parse(l).and_then(|x| x.resolve(n)).map_err(|e| e.to_string())?;
            let rel = quadratic_param(&d, &j, &c, &labels, ctx).map_err(|e| format!("{} ⊂ {} {l}: {e}", row.parabolic, row.ambient))?;
            if !rel.param.same_up_to_inverse(&want) {
                return Err(format!("{} ⊂ {} at c={} λ={l}: got {}, expected {}", row.parabolic, row.ambient, row.c, rel.param, QParam::from_value(want, &cl)));
            }
            checked += 1;
        }
    }
    if checked == 0 {
        return Err(format!("{} ⊂ {} has no non-self-normalizing representative", row.parabolic, row.ambient));
    }
    Ok(checked)
}

fn criterion_3() -> Outcome {
    let ctx = plugins();
    let mut n = 0;
    for row in DESK_ROWS {
        n += check_row(row, &ctx)?;
    }
    // I2(2m) ⊃ A1 at (1/2, c2): (−1)^{m−1} q^m with q the second class parameter
    for m in 2..=6u32 {
        let d = datum(&format!("I2({})", 2 * m));
        for c2 in [r(1, 7), r(2, 9), r(1, 5)] {
            let c = vec![r(1, 2), c2];
            let cl = class_params(&d, &c).map_err(|e| e.to_string())?;
            let mut v = cl[1].1.pow(m as u64).reduce();
            if m % 2 == 0 {
                v = v.neg();
            }
            let rel = quadratic_param(&d, &[0], &c, &[FactorLabel::Triv], &ctx).map_err(|e| e.to_string())?;
            if !rel.param.same_up_to_inverse(&v) {
                return Err(format!("I2({}) ⊃ A1 at c2 = {}: got {}", 2 * m, c[1], rel.param));
            }
            n += 1;
        }
    }
    // extended rows do not gate the criterion; each label is reported
    let (mut e7, mut e7_open) = (0, Vec::new());
    for row in E7_ROWS {
        for l in row.lambdas {
            let single = Row { lambdas: std::slice::from_ref(l), ..*row };
            match check_row(&single, &ctx) {
                Ok(k) => e7 += k,
                Err(e) if e.contains("no block scalar strategy") => e7_open.push(format!("{} {} λ={l}", row.parabolic, row.c)),
                Err(e) => return Err(e),
            }
        }
    }
    let open = if e7_open.is_empty() {
        String::new()
    } else {
        format!(", {} without representation matrices ({})", e7_open.len(), e7_open.join("; "))
    };
    let e8 = load_findim_table(&data_dir().join("findim.tsv"))
        .map_err(|e| e.to_string())?
        .iter()
        .filter(|r| r.types == [CoxType::E(7)])
        .count();
    Ok(format!("{n} desk-scale rows exact; extended: {e7} E7-ambient labels exact{open}; data-only: {e8} E7 ⊂ E8 records ingested, not recomputed"))
}

fn rows_of(t: &SupportTable) -> BTreeMap<String, u64> {
    t.all_rows().iter().filter(|r| r.count > 0).map(|r| (r.class.clone(), r.count)).collect()
}

fn expect_rows(rows: &[(&str, u64)]) -> BTreeMap<String, u64> {
    rows.iter().map(|(c, n)| (c.to_string(), *n)).collect()
}

fn criterion_4() -> Outcome {
    let fd = findim();
    let ctx = plugins();
    let h3: &[(i64, &[(&str, u64)])] = &[
        (10, &[("1", 9), ("H3", 1)]),
        (6, &[("1", 9), ("H3", 1)]),
        (5, &[("1", 8), ("I2(5)", 2)]),
        (3, &[("1", 8), ("A2", 2)]),
        (2, &[("1", 5), ("A1", 1), ("A1^2", 1), ("H3", 3)]),
    ];
    let e6: &[(i64, &[(&str, u64)])] = &[
        (12, &[("1", 24), ("E6", 1)]),
        (9, &[("1", 24), ("E6", 1)]),
        (8, &[("1", 24), ("D5", 1)]),
        (6, &[("1", 20), ("A5", 1), ("D4", 2), ("E6", 2)]),
        (5, &[("1", 23), ("A4", 2)]),
        (4, &[("1", 19), ("A3", 3), ("D4", 3)]),
        (3, &[("1", 13), ("A2", 5), ("A2^2", 4), ("E6", 3)]),
        (2, &[("1", 8), ("A1", 4), ("A1^2", 4), ("A1^3", 3), ("D4", 6)]),
    ];
    for (ty, table) in [("H3", h3), ("E6", e6)] {
        let d = datum(ty);
        for (den, want) in table {
            let t = count_supports(&d, &[r(1, *den)], &fd, &ctx, &Limits::default()).map_err(|e| format!("{ty} at 1/{den}: {e}"))?;
            let got = rows_of(&t);
            if got != expect_rows(want) {
                return Err(format!("{ty} at 1/{den}: got {got:?}"));
            }
            if ty == "H3" && t.full_support.note != "count_simples" {
                return Err(format!("H3 full-support row was not computed directly: {}", t.full_support.note));
            }
            if t.all_rows().iter().map(|r| r.count).sum::<u64>() != irr_count(&d) {
                return Err(format!("{ty} at 1/{den}: row sum differs from #Irr"));
            }
        }
    }
    Ok("H3 at 5 values and E6 at 8 values exact; H3 full support by count_simples, E6 full support by the row-sum identity".into())
}

struct F4Case {
    c: (i64, i64, i64, i64),
    class: &'static str,
    count: u64,
}

fn criterion_5(extended: bool) -> Outcome {
    let d = datum("F4");
    let fd = findim();
    let ctx = plugins();
    // per-parabolic tables: one representative (c_short, c_long) per condition stratum
    let cases = [
        F4Case { c: (1, 2, 1, 5), class: "A1'", count: 9 },
        F4Case { c: (1, 2, 0, 1), class: "A1'", count: 3 },
        F4Case { c: (1, 2, 1, 2), class: "A1'", count: 3 },
        F4Case { c: (1, 2, 1, 3), class: "A1'", count: 6 },
        F4Case { c: (1, 2, 2, 3), class: "A1'", count: 6 },
        F4Case { c: (1, 2, 1, 4), class: "A1'", count: 8 },
        F4Case { c: (1, 5, 1, 2), class: "A1", count: 9 },
        F4Case { c: (0, 1, 1, 2), class: "A1", count: 3 },
        F4Case { c: (1, 3, 1, 2), class: "A1", count: 6 },
        F4Case { c: (1, 4, 1, 2), class: "A1", count: 8 },
        F4Case { c: (1, 2, 1, 2), class: "A1'xA1", count: 1 },
        F4Case { c: (1, 3, 1, 5), class: "A2'", count: 6 },
        F4Case { c: (1, 3, 1, 2), class: "A2'", count: 3 },
        F4Case { c: (1, 3, 1, 6), class: "A2'", count: 3 },
        F4Case { c: (1, 3, 1, 3), class: "A2'", count: 4 },
        F4Case { c: (1, 3, 1, 12), class: "A2'", count: 5 },
        F4Case { c: (1, 5, 1, 3), class: "A2", count: 6 },
        F4Case { c: (1, 2, 1, 3), class: "A2", count: 3 },
        F4Case { c: (1, 3, 1, 3), class: "A2", count: 4 },
        F4Case { c: (1, 12, 1, 3), class: "A2", count: 5 },
        F4Case { c: (1, 2, 1, 3), class: "A1'xA2", count: 1 },
        F4Case { c: (1, 3, 1, 2), class: "A2'xA1", count: 1 },
    ];
    for case in &cases {
        let c = [r(case.c.0, case.c.1), r(case.c.2, case.c.3)];
        let t = count_supports(&d, &c, &fd, &ctx, &Limits::default()).map_err(|e| e.to_string())?;
        if t.row(case.class) != case.count {
            return Err(format!("{} at ({},{}): got {}, expected {}", case.class, c[0], c[1], t.row(case.class), case.count));
        }
    }
    if !extended {
        return Err("full-support F4 rows need the extended flag (HC_EXTENDED=1) for the 1152-dim algebra".into());
    }
    // full-support F4 rows; the (Φ1, Φ2) row is used in its p ↔ q mirror form.
    // Columns: A-type supports are computed; B2, B3, C3 and F4 are compared as one residue.
    struct Stratum {
        name: &'static str,
        c: (i64, i64, i64, i64),
        full: u64,
        a_cols: &'static [(&'static str, u64)],
        residue: u64,
    }
    let rows = [
        Stratum { name: "(Φ2(p),Φ1(q))", c: (1, 2, 0, 1), full: 9, a_cols: &[("A1'", 3)], residue: 4 + 3 + 6 },
        Stratum { name: "(Φ2(p),Φ2(q))", c: (1, 2, 1, 2), full: 8, a_cols: &[("A1'", 3), ("A1", 3), ("A1'xA1", 1)], residue: 2 + 2 + 2 + 4 },
        Stratum { name: "(Φ2(p),Φ3(q))", c: (1, 2, 1, 3), full: 11, a_cols: &[("A1'", 6), ("A2", 3), ("A1'xA2", 1)], residue: 1 + 3 },
        Stratum { name: "(Φ3(p),Φ3(q))", c: (1, 3, 1, 3), full: 15, a_cols: &[("A2'", 4), ("A2", 4)], residue: 2 },
    ];
    let limits = Limits { extended: true, ..Limits::default() };
    let mut times = Vec::new();
    for row in &rows {
        let start = Instant::now();
        let c = [r(row.c.0, row.c.1), r(row.c.2, row.c.3)];
        let t = count_supports(&d, &c, &fd, &ctx, &limits).map_err(|e| format!("{}: {e}", row.name))?;
        if t.full_support.note != "count_simples" || t.full_support.count != row.full {
            return Err(format!("{}: full support {} ({}), expected {}", row.name, t.full_support.count, t.full_support.note, row.full));
        }
        let computed: BTreeMap<String, u64> = t.rows.iter().map(|r| (r.class.clone(), r.count)).collect();
        if computed != expect_rows(row.a_cols) {
            return Err(format!("{}: proper supports {computed:?}", row.name));
        }
        let sum: u64 = row.full + row.a_cols.iter().map(|x| x.1).sum::<u64>() + row.residue;
        if sum != 25 || t.finite_dim.count != row.residue {
            return Err(format!("{}: residue {} vs expected {}", row.name, t.finite_dim.count, row.residue));
        }
        within(start, BUDGET_F4_POINT, row.name)?;
        times.push(format!("{:.0}s", start.elapsed().as_secs_f64()));
    }
    Ok(format!(
        "{} per-parabolic strata exact; full support 9/8/11/15 from the 1152-dim algebra ({}); rows sum to 25; B2/B3/C3 columns compared only in aggregate with F4 (no lowest-weight data for B2, B3, C3)",
        cases.len(),
        times.join(", ")
    ))
}

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

/// Partitions of n with no part repeated e or more times.
fn e_regular(n: usize, e: usize) -> u64 {
    fn go(n: usize, max: usize, e: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut t = 0;
        for part in 1..=max.min(n) {
            for mult in 1..e {
                if part * mult > n {
                    break;
                }
                t += go(n - part * mult, part - 1, e);
            }
        }
        t
    }
    go(n, n, e)
}

fn criterion_6() -> Outcome {
    let fd = findim();
    let ctx = plugins();
    let mut presentations = 0;
    for n in 2..=8usize {
        let d = datum(&format!("A{}", n - 1));
        for e in 2..=n {
            let c = [r(1, e as i64)];
            let q = unit_root(&c[0]);
            let cl = class_params(&d, &c).map_err(|e| e.to_string())?;
            for k in 1..=n / e {
                let j: Vec<usize> = (0..k).flat_map(|b| b * e..b * e + e - 1).collect();
                let labels = vec![FactorLabel::Triv; k];
                let p = assemble_presentation(&d, &j, &c, &labels, &ctx).map_err(|err| format!("S{n} e={e} k={k}: {err}"))?;
                let mut want: Vec<(CoxType, QParam)> = Vec::new();
                if k >= 2 {
                    want.push((CoxType::A(k - 1), QParam::from_value(CycNumber::one(), &cl)));
                }
                if n - k * e >= 2 {
                    want.push((CoxType::A(n - k * e - 1), QParam::from_value(q.clone(), &cl)));
                }
                // one parameter per node of each component
                let got = tensor_decompose(&p).map_err(|err| err.to_string())?;
                let same = got.len() == want.len()
                    && want.iter().all(|w| got.iter().any(|(t, ps)| *t == w.0 && ps.iter().all(|x| *x == w.1)));
                if !same {
                    return Err(format!("S{n} at 1/{e}, k={k}: presentation {}", p.text()));
                }
                presentations += 1;
            }
            let t = count_supports(&d, &c, &fd, &ctx, &Limits::default()).map_err(|err| err.to_string())?;
            for k in 0..=n / e {
                let want = partitions(k) * e_regular(n - k * e, e);
                let class = match k {
                    0 => "1".to_string(),
                    1 => format!("A{}", e - 1),
                    _ => format!("A{}^{k}", e - 1),
                };
                let class = if k * e == n && k == 1 { format!("A{}", n - 1) } else { class };
                if t.row(&class) != want {
                    return Err(format!("S{n} at 1/{e}: support {class} has {} simples, expected {want}", t.row(&class)));
                }
            }
        }
    }
    // z_top at the trivial character vanishes at a primitive e-th root
    for e in 2..=5usize {
        let d = datum(&format!("A{}", 2 * e - 1));
        let j: Vec<usize> = (0..2 * e - 1).filter(|&s| s != e - 1).collect();
        let m = CosetModule::new(&d, &j).map_err(|err| err.to_string())?;
        let qv = LaurentPoly::var(&d.vars, 0);
        let params = vec![qv.clone(); d.rank()];
        let gens: Vec<Vec<Vec<LaurentPoly>>> = j.iter().map(|_| vec![vec![LaurentPoly::one()]]).collect();
        let z = m.z_top_action(&params, &gens, 1).map_err(|err| err.to_string())?[0][0].clone();
        for k in 1..e {
            let root = unit_root(&r(k as i64, e as i64));
            let at = |x: &LaurentPoly| hcseries::arith::laurent::specialize(x, &[(d.vars[0].clone(), root.clone())]);
            if num_integer::gcd(k, e) == 1 && !at(&z).map_err(|err| err.to_string())?.is_zero() {
                return Err(format!("z_top(triv) does not vanish at e^(2πi·{k}/{e})"));
            }
        }
        if e <= 3 {
            let h = HeckeAlgebra::generic(&d).map_err(|err| err.to_string())?;
            let zp = z_pair(&h, &j).map_err(|err| err.to_string())?;
            let closed = type_a_z_top(zp.z_top.algebra(), e).map_err(|err| err.to_string())?;
            let ones = vec![LaurentPoly::one(); j.len()];
            if hcseries::zelt::linear_eval(&closed, &ones) != z {
                return Err(format!("coset-module z_top(triv) differs from the closed form at e = {e}"));
            }
        }
    }
    Ok(format!("{presentations} presentations (S_n, 1/e, k), n ≤ 8, have parameters (1, q); support counts match p(k)·#e-regular(n−ke); z_top(triv) vanishes for e = 2..5"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let cal = calibrate(3).map_err(|e| format!("calibration error: {e}"))?;
    if cal.orientation != ContentOrientation::Transposed {
        return Err(format!("unexpected orientation {:?}", cal.orientation));
    }
    within(start, BUDGET_CALIBRATION, "calibration")?;
    Ok(format!("orientation {:?} agrees for n = 1..3, hash {}", cal.orientation, cal.hash()))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    // Class parameters of coprime odd prime orders avoid every degree of
    // these groups and every (p, q) relation of B_n and I2(2m).
    let primes = [7i64, 11, 13];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a17);
    let groups = ["A1", "A2", "A3", "B2", "B3", "H3", "I2(5)", "I2(6)", "I2(8)", "A1xA1", "A1xA2", "A1xB2", "A1xA1xA1"];
    for g in groups {
        let d = datum(g);
        let irr = irr_count(&d) as usize;
        for _ in 0..SANITY_POINTS {
            let mut order = primes.to_vec();
            for i in (1..order.len()).rev() {
                order.swap(i, rng.gen_range(0..=i));
            }
            let c: Vec<BigRational> = (0..d.num_classes()).map(|k| {
                let b = order[k % order.len()];
                r(rng.gen_range(1..b), b)
            }).collect();
            let alg = AlgebraTable::hecke(&d, &kz_node_params(&d, &c).map_err(|e| e.to_string())?, &Limits::default()).map_err(|e| e.to_string())?;
            let res = analyze(&alg).map_err(|e| e.to_string())?;
            if res.simples != irr || res.radical_dim != 0 {
                let cs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                return Err(format!("{g} at c = ({}): {res:?}, #Irr = {irr}", cs.join(",")));
            }
        }
    }
    within(start, BUDGET_SANITY, "counting sanity")?;
    Ok(format!("{} groups × {SANITY_POINTS} points: #simples = #Irr, radical 0", groups.len()))
}

fn main() {
    let extended = std::env::var("HC_EXTENDED").map_or(true, |v| v != "0");
    let results: Vec<(usize, Outcome)> = vec![
        (1, criterion_1()),
        (2, criterion_2()),
        (3, criterion_3()),
        (4, criterion_4()),
        (5, criterion_5(extended)),
        (6, criterion_6()),
        (7, criterion_7()),
        (8, criterion_8()),
    ];
    let mut failed = Vec::new();
    for (n, r) in &results {
        match r {
            Ok(detail) => println!("criterion {n}: PASS: {detail}"),
            Err(reason) => {
                println!("criterion {n}: FAIL: {reason}");
                failed.push(*n);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
