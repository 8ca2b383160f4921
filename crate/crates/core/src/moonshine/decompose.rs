use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use super::dims::IrrepDims;
use crate::error::{Error, Result};

/// Largest accepted value for either search bound.
pub const MAX_SEARCH_BOUND: usize = 10;

/// `target = sum m * dims[index]` over `terms`, each multiplicity at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub target: BigInt,
    pub terms: Vec<(usize, u32)>,
}

impl Decomposition {
    /// From a multiplicity vector; zero entries are dropped.
    pub fn from_multiplicities(target: BigInt, multiplicities: &[u32]) -> Self {
        let terms = multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i, m))
            .collect();
        Self { target, terms }
    }

    /// Dense multiplicity vector of length `len`.
    pub fn multiplicities(&self, len: usize) -> Vec<u32> {
        let mut v = vec![0; len];
        for &(i, m) in &self.terms {
            if i < len {
                v[i] += m;
            }
        }
        v
    }

    /// Renders as `2r1 + 2r2 + r3 + r4`, with 1-based irrep labels.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|&(i, m)| {
                if m == 1 {
                    format!("r{}", i + 1)
                } else {
                    format!("{m}r{}", i + 1)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Exact check of `sum m_i dims[i] = target`; false when an index is out of
/// range or a multiplicity is zero.
pub fn verify_decomposition(d: &Decomposition, dims: &IrrepDims) -> bool {
    let mut sum = BigUint::zero();
    for &(i, m) in &d.terms {
        match dims.dims().get(i) {
            Some(dim) if m > 0 => sum += dim * m,
            _ => return false,
        }
    }
    BigInt::from_biguint(Sign::Plus, sum) == d.target
}

/// Every decomposition using irreps with index below `max_irreps` and
/// multiplicities at most `max_mult`, in lexicographic order of the
/// multiplicity vectors.
pub fn enumerate_decompositions(
    target: &BigInt,
    dims: &IrrepDims,
    max_irreps: usize,
    max_mult: u32,
) -> Result<Vec<Decomposition>> {
    if max_irreps > MAX_SEARCH_BOUND || max_mult as usize > MAX_SEARCH_BOUND {
        return Err(Error::SearchBounds {
            max_irreps,
            max_mult,
        });
    }
    let Some(remaining) = target.to_biguint() else {
        return Ok(Vec::new());
    };
    let used = &dims.dims()[..max_irreps.min(dims.len())];
    // reach[i] = max_mult * sum_{k >= i} used[k]
    let mut reach = vec![BigUint::zero(); used.len() + 1];
    for i in (0..used.len()).rev() {
        reach[i] = &reach[i + 1] + &used[i] * max_mult;
    }
    let mut search = Search {
        dims: used,
        reach,
        max_mult,
        current: vec![0; used.len()],
        found: Vec::new(),
    };
    search.descend(0, remaining);
    Ok(search
        .found
        .into_iter()
        .map(|m| Decomposition::from_multiplicities(target.clone(), &m))
        .collect())
}

struct Search<'a> {
    dims: &'a [BigUint],
    reach: Vec<BigUint>,
    max_mult: u32,
    current: Vec<u32>,
    found: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn descend(&mut self, index: usize, remaining: BigUint) {
        if remaining.is_zero() {
            self.found.push(self.current.clone());
            return;
        }
        if index == self.dims.len() || remaining > self.reach[index] {
            return;
        }
        let dim = &self.dims[index];
        let mut rest = remaining;
        for m in 0..=self.max_mult {
            if m > 0 {
                if rest < *dim {
                    break;
                }
                rest -= dim;
            }
            self.current[index] = m;
            self.descend(index + 1, rest.clone());
        }
        self.current[index] = 0;
    }
}
