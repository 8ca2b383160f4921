use num_traits::{One, Zero};

use crate::exactnum::{Cyclotomic, Rational};
use crate::groups::ConjugacyClasses;

/// Complex character table: rows are irreducible characters, columns are
/// conjugacy classes, column 0 is the identity class.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    order: usize,
    class_sizes: Vec<usize>,
    entries: Vec<Vec<Cyclotomic>>,
    classes: Option<ConjugacyClasses>,
    prime: Option<u64>,
}

impl CharacterTable {
    /// A table given explicitly, e.g. transcribed from a reference; the group
    /// order is the sum of the class sizes.
    pub fn from_entries(class_sizes: Vec<usize>, entries: Vec<Vec<Cyclotomic>>) -> Self {
        assert!(entries.iter().all(|row| row.len() == class_sizes.len()));
        Self {
            order: class_sizes.iter().sum(),
            class_sizes,
            entries,
            classes: None,
            prime: None,
        }
    }

    pub(crate) fn computed(
        classes: ConjugacyClasses,
        entries: Vec<Vec<Cyclotomic>>,
        prime: u64,
    ) -> Self {
        let mut table = Self::from_entries(classes.sizes.clone(), entries);
        table.classes = Some(classes);
        table.prime = Some(prime);
        table
    }

    /// Number of classes, equal to the number of irreducible characters.
    pub fn count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn entries(&self) -> &[Vec<Cyclotomic>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.entries[i]
    }

    /// The conjugacy classes the columns refer to, for computed tables.
    pub fn classes(&self) -> Option<&ConjugacyClasses> {
        self.classes.as_ref()
    }

    /// The prime field the table was computed over, for computed tables.
    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    /// Character degrees, as integers.
    pub fn degrees(&self) -> Vec<u64> {
        self.entries
            .iter()
            .map(|row| {
                let d = row[0].as_rational().expect("degree is rational");
                d.to_integer().try_into().expect("degree fits in u64")
            })
            .collect()
    }

    /// `(1/|G|) sum_c |C_c| a(c) conj(b(c))`.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for ((size, x), y) in self.class_sizes.iter().zip(a).zip(b) {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let term = (x * &y.conj()).scale(&Rational::from_integer((*size).into()));
            acc = &acc + &term;
        }
        acc.scale(&Rational::new(1.into(), self.order.into()))
    }

    /// Exact first orthogonality relation for every pair of rows.
    pub fn rows_orthonormal(&self) -> bool {
        (0..self.count()).all(|a| {
            (a..self.count()).all(|b| {
                let expect = if a == b {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                self.inner_product(&self.entries[a], &self.entries[b]) == expect
            })
        })
    }

    /// Exact second orthogonality relation:
    /// `sum_a chi_a(g) conj(chi_a(h)) = delta_gh |G| / |C_g|`.
    pub fn columns_orthogonal(&self) -> bool {
        let r = self.count();
        (0..r).all(|g| {
            (g..r).all(|h| {
                let mut acc = Cyclotomic::zero();
                for row in &self.entries {
                    acc = &acc + &(&row[g] * &row[h].conj());
                }
                let expect = if g == h {
                    Cyclotomic::from_integer((self.order / self.class_sizes[g]) as i64)
                } else {
                    Cyclotomic::zero()
                };
                acc == expect
            })
        })
    }

    /// Multiplicities of the irreducibles in a class function.
    pub fn decompose(&self, character: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.entries
            .iter()
            .map(|row| self.inner_product(character, row))
            .collect()
    }

    /// Copy with rows permuted: row `i` of the result is row `perm[i]`.
    pub fn with_rows_permuted(&self, perm: &[usize]) -> Self {
        let mut out = self.clone();
        out.entries = perm.iter().map(|&i| self.entries[i].clone()).collect();
        out
    }
}

/// True iff some row and column permutation, with columns matched only to
/// columns of equal class size, maps `a` onto `b` exactly.
pub fn table_equivalent(a: &CharacterTable, b: &CharacterTable) -> bool {
    let r = a.count();
    if r != b.count() || a.order != b.order {
        return false;
    }
    let column = |t: &CharacterTable, c: usize| {
        let mut col: Vec<Cyclotomic> = t.entries.iter().map(|row| row[c].clone()).collect();
        col.sort();
        col
    };
    let a_cols: Vec<_> = (0..r).map(|c| column(a, c)).collect();
    let b_cols: Vec<_> = (0..r).map(|c| column(b, c)).collect();
    let candidates: Vec<Vec<usize>> = (0..r)
        .map(|c| {
            (0..r)
                .filter(|&d| a.class_sizes[c] == b.class_sizes[d] && a_cols[c] == b_cols[d])
                .collect()
        })
        .collect();
    let mut assignment = Vec::with_capacity(r);
    let mut used = vec![false; r];
    search_columns(a, b, &candidates, &mut assignment, &mut used)
}

/// Rows restricted to the assigned columns must agree as multisets.
fn prefixes_match(a: &CharacterTable, b: &CharacterTable, assignment: &[usize]) -> bool {
    let mut left: Vec<Vec<&Cyclotomic>> = a
        .entries
        .iter()
        .map(|row| (0..assignment.len()).map(|c| &row[c]).collect())
        .collect();
    let mut right: Vec<Vec<&Cyclotomic>> = b
        .entries
        .iter()
        .map(|row| assignment.iter().map(|&d| &row[d]).collect())
        .collect();
    left.sort();
    right.sort();
    left == right
}

fn search_columns(
    a: &CharacterTable,
    b: &CharacterTable,
    candidates: &[Vec<usize>],
    assignment: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let c = assignment.len();
    if c == candidates.len() {
        return true;
    }
    for &d in &candidates[c] {
        if used[d] {
            continue;
        }
        assignment.push(d);
        used[d] = true;
        if prefixes_match(a, b, assignment) && search_columns(a, b, candidates, assignment, used) {
            return true;
        }
        used[d] = false;
        assignment.pop();
    }
    false
}
