//! Root systems from simple roots, and their Dynkin diagrams.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::{One, Signed, Zero};

use super::iso::find_isomorphism;
use crate::error::{Error, Result};
use crate::exactnum::{render_rational, Rational};

pub type RootVector = Vec<Rational>;

/// Default bound on the number of roots a closure may produce.
pub const DEFAULT_ROOT_CAP: usize = 10_000;

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(y: &[Rational], c: &Rational, x: &[Rational]) -> RootVector {
    y.iter().zip(x).map(|(yi, xi)| yi - c * xi).collect()
}

fn negate(v: &[Rational]) -> RootVector {
    v.iter().map(|x| -x).collect()
}

fn add(a: &[Rational], b: &[Rational]) -> RootVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `2 (a, b) / (a, a)`.
fn cartan_integer(a: &[Rational], b: &[Rational]) -> Rational {
    Rational::from_integer(2.into()) * dot(a, b) / dot(a, a)
}

/// `b - 2 (a, b)/(a, a) a`.
pub fn reflect(a: &[Rational], b: &[Rational]) -> RootVector {
    axpy(b, &cartan_integer(a, b), a)
}

/// Rank of a list of vectors, by Gaussian elimination.
fn rank(vectors: &[RootVector]) -> usize {
    let mut rows: Vec<RootVector> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                rows[i] = axpy(&rows[i], &f, &rows[r]);
            }
        }
        r += 1;
    }
    r
}

/// Solves `G x = rhs` for the Gram matrix `G` of the simple roots.
fn solve(gram: &[Vec<Rational>], rhs: &[Rational]) -> RootVector {
    let n = gram.len();
    let mut m: Vec<RootVector> = gram
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !m[i][c].is_zero())
            .expect("Gram matrix is invertible");
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x = &*x / &pivot;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                m[i] = axpy(&m[i], &f, &m[c]);
            }
        }
    }
    m.into_iter().map(|row| row[n].clone()).collect()
}

/// A finite root system closed under reflections.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple_roots: Vec<RootVector>,
    roots: Vec<RootVector>,
    /// Coordinates of each root in the basis of simple roots.
    coordinates: Vec<RootVector>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn simple_roots(&self) -> &[RootVector] {
        &self.simple_roots
    }

    /// Simple-root coordinates of `roots()[i]`.
    pub fn coordinates(&self, i: usize) -> &[Rational] {
        &self.coordinates[i]
    }

    /// Positive for the lexicographic order on simple-root coordinates.
    fn is_positive(&self, i: usize) -> bool {
        self.coordinates[i]
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_positive())
    }

    pub fn positive_roots(&self) -> Vec<RootVector> {
        (0..self.roots.len())
            .filter(|&i| self.is_positive(i))
            .map(|i| self.roots[i].clone())
            .collect()
    }

    /// Positive roots that are not a sum of two positive roots.
    pub fn recovered_simple_roots(&self) -> Vec<RootVector> {
        let positive = self.positive_roots();
        let set: HashSet<&RootVector> = positive.iter().collect();
        positive
            .iter()
            .filter(|alpha| {
                !positive.iter().any(|beta| {
                    let rest: RootVector =
                        alpha.iter().zip(beta.iter()).map(|(a, b)| a - b).collect();
                    set.contains(&rest)
                })
            })
            .cloned()
            .collect()
    }

    /// Checks the root system axioms and returns the ones that fail.
    pub fn axiom_failures(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let roots = &self.roots;
        let index: HashMap<&RootVector, usize> =
            roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
        if rank(roots) != self.rank() || rank(&self.simple_roots) != self.rank() {
            failures.push("roots do not span a space of the expected rank".into());
        }
        if roots.iter().any(|r| r.iter().all(Zero::is_zero)) {
            failures.push("zero vector among the roots".into());
        }
        'pairs: for a in roots {
            let aa = dot(a, a);
            for b in roots {
                let ab = dot(a, b);
                // parallel iff Cauchy-Schwarz is an equality
                if &ab * &ab == &aa * dot(b, b) && b != a && *b != negate(a) {
                    failures.push("a root has a multiple other than its negative".into());
                    break 'pairs;
                }
                if !cartan_integer(a, b).is_integer() {
                    failures.push("a reflection coefficient is not an integer".into());
                    break 'pairs;
                }
                if !index.contains_key(&reflect(a, b)) {
                    failures.push("not closed under reflections".into());
                    break 'pairs;
                }
            }
        }
        let positive: Vec<usize> = (0..roots.len()).filter(|&i| self.is_positive(i)).collect();
        for i in 0..roots.len() {
            let j = index[&negate(&roots[i])];
            if self.is_positive(i) == self.is_positive(j) {
                failures.push("a root and its negative have the same sign".into());
                break;
            }
        }
        'sums: for &i in &positive {
            for &j in &positive {
                if i != j {
                    if let Some(&k) = index.get(&add(&roots[i], &roots[j])) {
                        if !self.is_positive(k) {
                            failures.push("positive roots are not closed under sums".into());
                            break 'sums;
                        }
                    }
                }
            }
        }
        let mut recovered = self.recovered_simple_roots();
        let mut given = self.simple_roots.clone();
        recovered.sort();
        given.sort();
        if recovered != given {
            failures.push("recovered simple roots differ from the input".into());
        }
        for &i in &positive {
            if self.coordinates[i]
                .iter()
                .any(|c| !c.is_integer() || c.is_negative())
            {
                failures.push("a positive root is not a non-negative integer combination".into());
                break;
            }
        }
        failures
    }
}

/// Closes the simple roots under reflections, failing after `cap` roots.
pub fn root_closure(simple_roots: &[RootVector], cap: usize) -> Result<RootSystem> {
    if simple_roots.is_empty() || rank(simple_roots) != simple_roots.len() {
        return Err(Error::DependentRoots);
    }
    for a in simple_roots {
        for b in simple_roots {
            let c = cartan_integer(a, b);
            if !c.is_integer() {
                return Err(Error::NonIntegralReflection(render_rational(&c)));
            }
        }
    }
    let mut seen: HashSet<RootVector> = simple_roots.iter().cloned().collect();
    let mut roots: Vec<RootVector> = simple_roots.to_vec();
    let mut queue: VecDeque<RootVector> = simple_roots.iter().cloned().collect();
    while let Some(beta) = queue.pop_front() {
        for alpha in simple_roots {
            let image = reflect(alpha, &beta);
            if seen.insert(image.clone()) {
                if roots.len() >= cap {
                    return Err(Error::InfiniteRootSystem { cap });
                }
                roots.push(image.clone());
                queue.push_back(image);
            }
        }
    }
    roots.sort();
    let gram: Vec<RootVector> = simple_roots
        .iter()
        .map(|a| simple_roots.iter().map(|b| dot(a, b)).collect())
        .collect();
    let coordinates = roots
        .iter()
        .map(|r| {
            let rhs: RootVector = simple_roots.iter().map(|a| dot(a, r)).collect();
            solve(&gram, &rhs)
        })
        .collect();
    Ok(RootSystem {
        simple_roots: simple_roots.to_vec(),
        roots,
        coordinates,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum EdgeDirection {
    #[default]
    None,
    /// From the first node to the second.
    Forward,
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinEdge {
    pub i: usize,
    pub j: usize,
    pub multiplicity: u8,
    pub direction: EdgeDirection,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub nodes: usize,
    pub edges: Vec<DynkinEdge>,
}

impl DynkinDiagram {
    /// `labels[i][j] = (multiplicity, arrow from i to j)`.
    fn labels(&self) -> Vec<Vec<(u8, bool)>> {
        let mut m = vec![vec![(0u8, false); self.nodes]; self.nodes];
        for e in &self.edges {
            m[e.i][e.j] = (e.multiplicity, e.direction == EdgeDirection::Forward);
            m[e.j][e.i] = (e.multiplicity, e.direction == EdgeDirection::Backward);
        }
        m
    }

    pub fn is_isomorphic(&self, other: &DynkinDiagram) -> bool {
        find_isomorphism(&self.labels(), &other.labels()).is_some()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.edges.iter().all(|e| e.multiplicity == 1)
    }
}

/// Edges from the angles between simple roots: `cos^2` of `0, 1/4, 1/2, 3/4`
/// gives `0, 1, 2, 3` edges, and arrows point from the longer root to the
/// shorter one.
pub fn dynkin_from_simple_roots(simple_roots: &[RootVector]) -> Result<DynkinDiagram> {
    let mut edges = Vec::new();
    let quarter = |k: i64| Rational::new(k.into(), 4.into());
    for i in 0..simple_roots.len() {
        for j in i + 1..simple_roots.len() {
            let (a, b) = (&simple_roots[i], &simple_roots[j]);
            let (aa, bb, ab) = (dot(a, a), dot(b, b), dot(a, b));
            let cos2 = &ab * &ab / (&aa * &bb);
            let multiplicity = (0..4).find(|&k| cos2 == quarter(k));
            let multiplicity = match multiplicity {
                Some(m) if m == 0 || ab.is_negative() => m as u8,
                _ => {
                    let mut shown = render_rational(&cos2);
                    if ab.is_positive() {
                        shown.push_str(" (acute)");
                    }
                    return Err(Error::InadmissibleAngle { i, j, cos2: shown });
                }
            };
            if multiplicity == 0 {
                continue;
            }
            let direction = if aa > bb {
                EdgeDirection::Forward
            } else if bb > aa {
                EdgeDirection::Backward
            } else {
                EdgeDirection::None
            };
            edges.push(DynkinEdge {
                i,
                j,
                multiplicity,
                direction,
            });
        }
    }
    Ok(DynkinDiagram {
        nodes: simple_roots.len(),
        edges,
    })
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `e_i - e_{i+1}` in `Q^(n+1)`, `i = 1..n`.
pub fn a_simple_roots(n: usize) -> Vec<RootVector> {
    (0..n)
        .map(|i| {
            let mut v = vec![Rational::zero(); n + 1];
            v[i] = Rational::one();
            v[i + 1] = -Rational::one();
            v
        })
        .collect()
}

/// `e_i - e_{i+1}` for `i < n` and `e_{n-1} + e_n` in `Q^n`.
pub fn d_simple_roots(n: usize) -> Vec<RootVector> {
    let mut roots: Vec<RootVector> = a_simple_roots(n - 1)
        .into_iter()
        .map(|mut v| {
            v.truncate(n);
            v
        })
        .collect();
    let mut last = vec![Rational::zero(); n];
    last[n - 2] = Rational::one();
    last[n - 1] = Rational::one();
    roots.push(last);
    roots
}

/// Bourbaki's simple roots of `E8` in `Q^8`.
pub fn e8_simple_roots() -> Vec<RootVector> {
    let half = Rational::new(1.into(), 2.into());
    let mut roots = vec![vec![
        half.clone(),
        -&half,
        -&half,
        -&half,
        -&half,
        -&half,
        -&half,
        half,
    ]];
    let mut e1e2 = vec![Rational::zero(); 8];
    e1e2[0] = int(1);
    e1e2[1] = int(1);
    roots.push(e1e2);
    for i in 0..6 {
        let mut v = vec![Rational::zero(); 8];
        v[i] = int(-1);
        v[i + 1] = int(1);
        roots.push(v);
    }
    roots
}
