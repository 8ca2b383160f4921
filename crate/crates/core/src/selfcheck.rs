//! The ten acceptance checks, runnable from the library and the CLI.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;

use crate::adequiver::{
    a_simple_roots, e8_simple_roots, identify_affine_ade, mckay_partner, quiver_checks,
    quiver_of_group, root_closure, DEFAULT_ROOT_CAP,
};
use crate::chartab::{
    binary_icosahedral_table, binary_tetrahedral_table, character_table, table_equivalent,
};
use crate::error::Result;
use crate::groups::{build_named_group, GroupName};
use crate::mckaycheck::{builder_battery, mckay_check_named, run_battery};
use crate::moonshine::{
    enumerate_decompositions, meaning_of_life, monster_order_check, verify_decomposition,
    CoefficientSource, CoefficientWindow, Decomposition, IrrepDims,
};
use crate::qseries::{cube_root_of_q_j, j_invariant};

/// Tolerance for the two special values of `j`.
pub const SPECIAL_VALUE_TOLERANCE: f64 = 1e-6;
/// Number of series terms summed for the special values.
pub const SPECIAL_VALUE_TERMS: usize = 30;
/// Expected `sum tau(n)^2 mod 70` over `n = 1..24`, and the same residue for
/// the default `j` window.
pub const MEANING_OF_LIFE: u32 = 42;

/// Time limits for the criteria that carry one.
pub const J_SERIES_LIMIT: Duration = Duration::from_secs(5);
pub const DECOMPOSITION_LIMIT: Duration = Duration::from_secs(10);
pub const QUIVER_SWEEP_LIMIT: Duration = Duration::from_secs(60);

/// Outcome of a single criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2}. {:<28} {:>8.2?}  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed,
            self.detail
        )
    }
}

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "j-expansion"),
    (2, "special values of j"),
    (3, "moonshine decompositions"),
    (4, "Monster order"),
    (5, "character tables"),
    (6, "McKay correspondence"),
    (7, "McKay conjecture battery"),
    (8, "cube root of j"),
    (9, "meaning of life"),
    (10, "property suites"),
];

/// Runs criterion `id` (1 to 10). Errors count as failures.
pub fn run_criterion(id: u8) -> CriterionResult {
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, n)| *n)
        .unwrap_or("unknown");
    let start = Instant::now();
    let outcome = match id {
        1 => j_expansion(),
        2 => special_values(),
        3 => decompositions(),
        4 => monster_order(),
        5 => character_tables(),
        6 => correspondence(),
        7 => conjecture_battery(),
        8 => cube_root(),
        9 => meaning(),
        10 => properties(),
        _ => Ok((false, format!("no criterion {id}"))),
    };
    let elapsed = start.elapsed();
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed,
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id)).collect()
}

type Outcome = Result<(bool, String)>;

fn j_expansion() -> Outcome {
    let start = Instant::now();
    let j = j_invariant(20)?;
    let elapsed = start.elapsed();
    let want = [1i64, 744, 196884, 21493760, 864299970, 20245856256];
    let got: Vec<BigInt> = (-1..=4)
        .map(|n| j.coeff(n).expect("in range").to_integer())
        .collect();
    let exact = got.iter().zip(want).all(|(g, w)| *g == BigInt::from(w));
    let integral = j.coeffs().iter().all(|c| c.is_integer());
    Ok((
        exact && integral && elapsed < J_SERIES_LIMIT,
        format!("c(-1..4) exact: {exact}, order 20 in {elapsed:.2?}"),
    ))
}

fn special_values() -> Outcome {
    let j = j_invariant(SPECIAL_VALUE_TERMS as i64 - 2)?;
    let at_i = j.eval_at_tau(Complex64::new(0.0, 1.0))?.value;
    let rho = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
    let at_rho = j.eval_at_tau(rho)?.value;
    let e1 = (at_i - 1728.0).norm();
    let e2 = at_rho.norm();
    Ok((
        e1 < SPECIAL_VALUE_TOLERANCE && e2 < SPECIAL_VALUE_TOLERANCE,
        format!("|j(i) - 1728| = {e1:.1e}, |j(rho)| = {e2:.1e}"),
    ))
}

/// Multiplicity vectors of the five published coefficient rows.
pub fn published_rows() -> Vec<(i64, Vec<u32>)> {
    vec![
        (1, vec![1]),
        (196884, vec![1, 1]),
        (21493760, vec![1, 1, 1]),
        (864299970, vec![2, 2, 1, 1]),
        (20245856256, vec![3, 3, 1, 2, 1]),
        (20245856256, vec![2, 3, 2, 1, 0, 1]),
    ]
}

fn decompositions() -> Outcome {
    let dims = IrrepDims::monster();
    let rows_ok = published_rows().into_iter().all(|(t, m)| {
        verify_decomposition(
            &Decomposition::from_multiplicities(BigInt::from(t), &m),
            &dims,
        )
    });
    let start = Instant::now();
    let found = enumerate_decompositions(&BigInt::from(20245856256i64), &dims, 6, 3)?;
    let elapsed = start.elapsed();
    let vectors: Vec<Vec<u32>> = found.iter().map(|d| d.multiplicities(6)).collect();
    let both = [vec![3, 3, 1, 2, 1, 0], vec![2, 3, 2, 1, 0, 1]]
        .iter()
        .all(|v| vectors.contains(v));
    Ok((
        rows_ok && both && elapsed < DECOMPOSITION_LIMIT,
        format!(
            "rows verified: {rows_ok}, search found {} ({}) in {elapsed:.2?}",
            found.len(),
            found
                .iter()
                .map(|d| d.render())
                .collect::<Vec<_>>()
                .join("; ")
        ),
    ))
}

fn monster_order() -> Outcome {
    let ok = monster_order_check();
    Ok((ok, "factorization and 196883 = 47 * 59 * 71".into()))
}

fn character_tables() -> Outcome {
    let g = build_named_group(GroupName::BinaryIcosahedral)?;
    let table = character_table(&g)?;
    let sylow = g.sylow(2)?;
    let n = g.restrict(&g.normalizer(&sylow)?)?;
    let n_table = character_table(&n)?;
    let a = table_equivalent(&table, &binary_icosahedral_table());
    let b = table_equivalent(&n_table, &binary_tetrahedral_table());
    let mut degrees = table.degrees();
    degrees.sort_unstable();
    let square_sum: u64 = degrees.iter().map(|d| d * d).sum();
    let degrees_ok = degrees == [1, 2, 2, 3, 3, 4, 4, 5, 6] && square_sum == 120;
    Ok((
        a && b && degrees_ok,
        format!("order 120 table: {a}, order 24 table: {b}, degrees {degrees:?}"),
    ))
}

/// The groups swept by the correspondence criterion.
pub fn correspondence_groups() -> Vec<GroupName> {
    let mut out: Vec<GroupName> = (3..=8).map(GroupName::Cyclic).collect();
    out.extend((2..=5).map(GroupName::BinaryDihedral));
    out.extend([
        GroupName::BinaryTetrahedral,
        GroupName::BinaryOctahedral,
        GroupName::BinaryIcosahedral,
    ]);
    out
}

fn correspondence() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for name in correspondence_groups() {
        let g = build_named_group(name)?;
        let (_, q) = quiver_of_group(&g)?;
        let found = identify_affine_ade(&q)?;
        let report = quiver_checks(&q, g.order() as u64);
        if Some(found) != mckay_partner(name) || !report.passed() {
            bad.push(format!("{name}: {found}, {:?}", report.failures));
        }
    }
    let elapsed = start.elapsed();
    Ok((
        bad.is_empty() && elapsed < QUIVER_SWEEP_LIMIT,
        if bad.is_empty() {
            format!("{} groups in {elapsed:.2?}", correspondence_groups().len())
        } else {
            bad.join("; ")
        },
    ))
}

fn conjecture_battery() -> Outcome {
    let reports = run_battery(&builder_battery())?;
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.holds)
        .map(|r| r.summary())
        .collect();
    let r = mckay_check_named(GroupName::BinaryIcosahedral, 2)?;
    let example = r.sylow_size == 8
        && r.sylow_is_quaternion8
        && r.normalizer_size == 24
        && r.count_g == 4
        && r.count_n == 4;
    Ok((
        failing.is_empty() && example,
        if failing.is_empty() {
            format!("{} pairs hold; {}", reports.len(), r.summary())
        } else {
            failing.join("; ")
        },
    ))
}

fn cube_root() -> Outcome {
    let root = cube_root_of_q_j(10)?;
    let q1 = root.coeff(1).expect("in range");
    let target = j_invariant(9)?.shift(1);
    let cubed = root.pow(3).truncate(10);
    let ok = q1 == crate::Rational::from_integer(248.into()) && cubed == target;
    Ok((
        ok,
        format!(
            "coefficient of q is {q1}, cube matches q j to order 10: {}",
            cubed == target
        ),
    ))
}

fn meaning() -> Outcome {
    let tau = meaning_of_life(CoefficientSource::Tau, CoefficientWindow::TAU)?;
    let j = meaning_of_life(CoefficientSource::J, CoefficientWindow::J)?;
    Ok((
        tau == MEANING_OF_LIFE && j == MEANING_OF_LIFE,
        format!("tau(1..24): {tau}, c(1..24) of j: {j}"),
    ))
}

/// Dims used by the search oracle.
pub const SYNTHETIC_DIMS: [u64; 4] = [1, 3, 7, 100];

/// Every multiplicity vector with entries at most `max_mult`, no pruning.
pub fn brute_force_decompositions(dims: &[u64], target: u64, max_mult: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut v = vec![0u32; dims.len()];
    loop {
        let sum: u64 = v.iter().zip(dims).map(|(m, d)| *m as u64 * d).sum();
        if sum == target {
            out.push(v.clone());
        }
        // odometer with the last index fastest, giving lexicographic order
        let mut k = dims.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if v[k] < max_mult {
                v[k] += 1;
                break;
            }
            v[k] = 0;
        }
    }
}

fn properties() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for name in builder_battery() {
        let t = character_table(&build_named_group(name)?)?;
        if !(t.rows_orthonormal() && t.columns_orthogonal()) {
            ok = false;
            notes.push(format!("{name} fails orthogonality"));
        }
    }
    let a2 = root_closure(&a_simple_roots(2), DEFAULT_ROOT_CAP)?
        .roots()
        .len();
    let e8 = root_closure(&e8_simple_roots(), DEFAULT_ROOT_CAP)?
        .roots()
        .len();
    ok &= a2 == 6 && e8 == 240;
    let dims = IrrepDims::from_dims(SYNTHETIC_DIMS.iter().map(|&d| BigUint::from(d)).collect());
    let mut mismatches = 0;
    for target in 0..=1200u64 {
        let found: Vec<Vec<u32>> = enumerate_decompositions(&BigInt::from(target), &dims, 4, 3)?
            .iter()
            .map(|d| d.multiplicities(4))
            .collect();
        if found != brute_force_decompositions(&SYNTHETIC_DIMS, target, 3) {
            mismatches += 1;
        }
    }
    ok &= mismatches == 0;
    notes.push(format!(
        "{} tables orthogonal, A2 has {a2} roots, E8 has {e8}, search mismatches {mismatches}",
        builder_battery().len()
    ));
    Ok((ok, notes.join("; ")))
}

/// Whether every result passed.
pub fn all_passed(results: &[CriterionResult]) -> bool {
    !results.is_empty() && results.iter().all(|r| r.passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_is_lexicographic() {
        let all = brute_force_decompositions(&[1, 1], 1, 1);
        assert_eq!(all, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            brute_force_decompositions(&[], 0, 3),
            vec![Vec::<u32>::new()]
        );
        assert!(brute_force_decompositions(&[2], 3, 5).is_empty());
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(11).passed);
    }
}
