use std::fmt;

use super::iso::find_isomorphism;
use super::quiver::Quiver;
use crate::error::{Error, Result};
use crate::groups::GroupName;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdeFamily {
    A,
    D,
    E,
}

/// An affine simply-laced Dynkin diagram; it has `index + 1` nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineAdeType {
    pub family: AdeFamily,
    pub index: usize,
}

impl AffineAdeType {
    pub const fn new(family: AdeFamily, index: usize) -> Self {
        Self { family, index }
    }

    pub fn node_count(&self) -> usize {
        self.index + 1
    }

    /// Adjacency matrix of the diagram. Affine `A1` is a double edge.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.node_count();
        let mut a = vec![vec![0u64; n]; n];
        let mut link = |i: usize, j: usize| {
            a[i][j] += 1;
            a[j][i] += 1;
        };
        match self.family {
            AdeFamily::A => {
                for i in 0..n {
                    link(i, (i + 1) % n);
                }
            }
            AdeFamily::D => {
                let k = self.index;
                link(0, 2);
                link(1, 2);
                for i in 2..k - 2 {
                    link(i, i + 1);
                }
                link(k - 2, k - 1);
                link(k - 2, k);
            }
            AdeFamily::E => {
                let arms: &[usize] = match self.index {
                    6 => &[2, 2, 2],
                    7 => &[1, 3, 3],
                    _ => &[1, 2, 5],
                };
                let mut next = 1;
                for &len in arms {
                    let mut prev = 0;
                    for _ in 0..len {
                        link(prev, next);
                        prev = next;
                        next += 1;
                    }
                }
            }
        }
        a
    }

    fn is_valid(&self) -> bool {
        match self.family {
            AdeFamily::A => self.index >= 1,
            AdeFamily::D => self.index >= 4,
            AdeFamily::E => (6..=8).contains(&self.index),
        }
    }

    /// Candidate types with the given number of nodes.
    fn candidates(nodes: usize) -> Vec<Self> {
        let index = nodes.saturating_sub(1);
        [
            Self::new(AdeFamily::A, index),
            Self::new(AdeFamily::D, index),
            Self::new(AdeFamily::E, index),
        ]
        .into_iter()
        .filter(Self::is_valid)
        .collect()
    }
}

impl fmt::Display for AffineAdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "affine {:?}{}", self.family, self.index)
    }
}

/// Matches a symmetric quiver with entries in `{0, 1, 2}` against the
/// affine A, D and E diagrams with the same number of nodes.
pub fn identify_affine_ade(q: &Quiver) -> Result<AffineAdeType> {
    let a = q.adjacency();
    if !q.is_symmetric() || a.iter().flatten().any(|&x| x > 2) {
        return Err(Error::NotAffineAde);
    }
    let matches: Vec<AffineAdeType> = AffineAdeType::candidates(q.len())
        .into_iter()
        .filter(|t| find_isomorphism(a, &t.adjacency()).is_some())
        .collect();
    match matches.as_slice() {
        [t] => Ok(*t),
        _ => Err(Error::NotAffineAde),
    }
}

/// The diagram a builder group should produce.
pub fn mckay_partner(name: GroupName) -> Option<AffineAdeType> {
    use AdeFamily::*;
    Some(match name {
        GroupName::Cyclic(n) if n >= 2 => AffineAdeType::new(A, n as usize - 1),
        // order 4: the cyclic group of order 4
        GroupName::BinaryDihedral(1) => AffineAdeType::new(A, 3),
        GroupName::BinaryDihedral(n) if n >= 2 => AffineAdeType::new(D, n as usize + 2),
        GroupName::BinaryTetrahedral => AffineAdeType::new(E, 6),
        GroupName::BinaryOctahedral => AffineAdeType::new(E, 7),
        GroupName::BinaryIcosahedral => AffineAdeType::new(E, 8),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(t: AffineAdeType) -> Vec<u64> {
        let mut d: Vec<u64> = t.adjacency().iter().map(|r| r.iter().sum()).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn templates() {
        use AdeFamily::*;
        assert_eq!(
            AffineAdeType::new(A, 1).adjacency(),
            vec![vec![0, 2], vec![2, 0]]
        );
        assert_eq!(degrees(AffineAdeType::new(D, 4)), vec![1, 1, 1, 1, 4]);
        assert_eq!(degrees(AffineAdeType::new(D, 6)), vec![1, 1, 1, 1, 2, 3, 3]);
        assert_eq!(degrees(AffineAdeType::new(E, 6)), vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(degrees(AffineAdeType::new(E, 8)).len(), 9);
        for t in [
            AffineAdeType::new(A, 5),
            AffineAdeType::new(D, 7),
            AffineAdeType::new(E, 7),
        ] {
            let edges: u64 = t.adjacency().iter().flatten().sum::<u64>() / 2;
            // a tree, except the cycle
            let expect = if t.family == A {
                t.node_count()
            } else {
                t.node_count() - 1
            };
            assert_eq!(edges as usize, expect);
        }
    }

    #[test]
    fn identification() {
        use AdeFamily::*;
        for t in [
            AffineAdeType::new(A, 1),
            AffineAdeType::new(A, 7),
            AffineAdeType::new(D, 4),
            AffineAdeType::new(D, 5),
            AffineAdeType::new(E, 6),
            AffineAdeType::new(E, 7),
            AffineAdeType::new(E, 8),
        ] {
            let n = t.node_count();
            let q = Quiver::from_adjacency(t.adjacency(), vec![1; n], 0);
            assert_eq!(identify_affine_ade(&q).unwrap(), t);
        }
        let path = Quiver::from_adjacency(vec![vec![0, 1], vec![1, 0]], vec![1, 1], 0);
        assert_eq!(identify_affine_ade(&path), Err(Error::NotAffineAde));
        let loop_only = Quiver::from_adjacency(vec![vec![2]], vec![1], 0);
        assert_eq!(identify_affine_ade(&loop_only), Err(Error::NotAffineAde));
    }
}
