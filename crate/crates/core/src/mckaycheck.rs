//! Counting characters of p'-degree in a group and in the normalizer of one
//! of its Sylow p-subgroups.

use crate::chartab::{character_table, CharacterTable};
use crate::error::Result;
use crate::groups::{build_named_group, is_quaternion8, FiniteGroup, GroupName};

/// Outcome of one `(G, p)` comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McKayReport {
    pub group: String,
    pub p: u64,
    pub group_order: usize,
    pub sylow_size: usize,
    pub normalizer_size: usize,
    pub sylow_is_quaternion8: bool,
    pub count_g: usize,
    pub count_n: usize,
    pub degrees_g: Vec<u64>,
    pub degrees_n: Vec<u64>,
    pub holds: bool,
}

impl McKayReport {
    /// One line, with both degree lists when the counts differ.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} p={}: |S|={} |N|={} {} {} {}",
            self.group,
            self.p,
            self.sylow_size,
            self.normalizer_size,
            self.count_g,
            if self.holds { "=" } else { "!=" },
            self.count_n
        );
        if !self.holds {
            s.push_str(&format!(
                " (G degrees {:?}, N degrees {:?})",
                self.degrees_g, self.degrees_n
            ));
        }
        s
    }
}

/// Rows whose degree is prime to `p`, with those degrees.
pub fn count_irr_prime_to_p(table: &CharacterTable, p: u64) -> (usize, Vec<u64>) {
    let degrees: Vec<u64> = table.degrees().into_iter().filter(|d| d % p != 0).collect();
    (degrees.len(), degrees)
}

/// Sylow subgroup, its normalizer as a standalone group, both character
/// tables and the two counts. `label` names the group in the report.
pub fn mckay_check(group: &FiniteGroup, p: u64, label: &str) -> Result<McKayReport> {
    let sylow = group.sylow(p)?;
    let normalizer = group.normalizer(&sylow)?;
    let n_group = group.restrict(&normalizer)?;
    let sylow_group = group.restrict(&sylow)?;
    let table_g = character_table(group)?;
    let table_n = character_table(&n_group)?;
    let (count_g, degrees_g) = count_irr_prime_to_p(&table_g, p);
    let (count_n, degrees_n) = count_irr_prime_to_p(&table_n, p);
    Ok(McKayReport {
        group: label.to_string(),
        p,
        group_order: group.order(),
        sylow_size: sylow.order(),
        normalizer_size: normalizer.order(),
        sylow_is_quaternion8: is_quaternion8(&sylow_group),
        count_g,
        count_n,
        degrees_g,
        degrees_n,
        holds: count_g == count_n,
    })
}

/// Builds the named group and checks it at `p`.
pub fn mckay_check_named(name: GroupName, p: u64) -> Result<McKayReport> {
    let group = build_named_group(name)?;
    mckay_check(&group, p, &name.to_string())
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Cyclic 2..12, binary dihedral 2..6, the three exceptional binary groups
/// and `SL(2, p)` for p in {2, 3, 5, 7}.
pub fn builder_battery() -> Vec<GroupName> {
    let mut out: Vec<GroupName> = (2..=12).map(GroupName::Cyclic).collect();
    out.extend((2..=6).map(GroupName::BinaryDihedral));
    out.extend([
        GroupName::BinaryTetrahedral,
        GroupName::BinaryOctahedral,
        GroupName::BinaryIcosahedral,
    ]);
    out.extend([2, 3, 5, 7].map(GroupName::Sl2));
    out
}

/// One report per group in `groups` and prime dividing its order, computed
/// sequentially.
pub fn run_battery(groups: &[GroupName]) -> Result<Vec<McKayReport>> {
    let mut out = Vec::new();
    for &name in groups {
        let group = build_named_group(name)?;
        for p in prime_divisors(group.order() as u64) {
            out.push(mckay_check(&group, p, &name.to_string())?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn primes() {
        assert_eq!(prime_divisors(120), vec![2, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(49), vec![7]);
    }

    #[test]
    fn coprime_prime_counts_everything() {
        let r = mckay_check_named(GroupName::BinaryTetrahedral, 5).unwrap();
        assert_eq!(r.sylow_size, 1);
        assert_eq!(r.normalizer_size, 24);
        assert_eq!(r.count_g, 7);
        assert!(r.holds);
    }

    #[test]
    fn non_prime_rejected() {
        let g = build_named_group(GroupName::Cyclic(4)).unwrap();
        assert_eq!(mckay_check(&g, 4, "cyclic-4"), Err(Error::NotPrime(4)));
    }
}
