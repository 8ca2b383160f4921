use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::scalar::ExactScalar;

use super::matrix::Matrix;

/// Default bound on the number of elements enumerated by a closure.
pub const DEFAULT_SIZE_CAP: usize = 10_000;

/// A finite group given by its full multiplication table.
///
/// Element 0 is the identity. Element indices are assigned breadth-first
/// from the identity, right-multiplying by the generators in the order given.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    element_order: Vec<u32>,
    generators: Vec<usize>,
    defining_traces: Option<Vec<Cyclotomic>>,
}

impl FiniteGroup {
    /// Builds the table from the right action of the generators.
    ///
    /// `right[x][k]` is the index of `x * g_k` and `parent[y] = (x, k)` records
    /// how `y` was first reached (`y = x * g_k`); the identity has no parent.
    fn from_generator_action(right: &[Vec<u32>], parent: &[Option<(u32, u32)>]) -> Self {
        let n = right.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u32;
            for b in 1..n {
                let (pb, k) = parent[b].expect("non-identity element has a parent");
                row[b] = right[row[pb as usize] as usize][k as usize];
            }
        }
        Self::from_table(n, table, Vec::new())
    }

    fn from_table(n: usize, table: Vec<u32>, generators: Vec<usize>) -> Self {
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            inverse[a] = row.iter().position(|&x| x == 0).expect("inverse exists") as u32;
        }
        let mut element_order = vec![1u32; n];
        for (a, ord) in element_order.iter_mut().enumerate() {
            let mut x = a;
            while x != 0 {
                x = table[x * n + a] as usize;
                *ord += 1;
            }
        }
        Self {
            order: n,
            table,
            inverse,
            element_order,
            generators,
            defining_traces: None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g a g^-1`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn pow(&self, a: usize, exp: i64) -> usize {
        let ord = self.element_order[a] as i64;
        let e = exp.rem_euclid(ord);
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.element_order[a]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        use num_integer::Integer;
        self.element_order
            .iter()
            .fold(1u64, |acc, &o| acc.lcm(&(o as u64)))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Traces of the defining two-dimensional representation, one per
    /// element, when the group was built from SU(2) matrices.
    pub fn defining_traces(&self) -> Option<&[Cyclotomic]> {
        self.defining_traces.as_deref()
    }

    pub(crate) fn set_defining_traces(&mut self, traces: Vec<Cyclotomic>) {
        assert_eq!(traces.len(), self.order);
        self.defining_traces = Some(traces);
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(
            (0..self.order).collect(),
            self.order,
            self.generators.clone(),
        )
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(vec![0], self.order, Vec::new())
    }

    /// Closure of `gens` under multiplication.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let elements = (0..self.order).filter(|&i| mask[i]).collect();
        Subgroup::from_sorted(elements, self.order, gens.to_vec())
    }

    /// Validates that `elements` form a subgroup.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.iter().any(|&x| x >= self.order) || sorted.first() != Some(&0) {
            return Err(Error::NotASubgroup);
        }
        let s = Subgroup::from_sorted(sorted.clone(), self.order, sorted);
        self.check_subgroup(&s)?;
        Ok(s)
    }

    fn check_subgroup(&self, s: &Subgroup) -> Result<()> {
        if s.mask.len() != self.order || !s.contains(0) {
            return Err(Error::NotASubgroup);
        }
        for &a in &s.elements {
            for &b in &s.elements {
                if !s.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(())
    }

    /// `g S g^-1`.
    pub fn conjugate_subgroup(&self, s: &Subgroup, g: usize) -> Subgroup {
        let mut elements: Vec<usize> = s.elements.iter().map(|&x| self.conjugate(x, g)).collect();
        elements.sort_unstable();
        let gens = s.generators.iter().map(|&x| self.conjugate(x, g)).collect();
        Subgroup::from_sorted(elements, self.order, gens)
    }

    /// `N_G(S) = { g : g S g^-1 = S }`.
    pub fn normalizer(&self, s: &Subgroup) -> Result<Subgroup> {
        self.check_subgroup(s)?;
        let test: &[usize] = if s.generators.is_empty() {
            &s.elements
        } else {
            &s.generators
        };
        let elements = (0..self.order)
            .filter(|&g| test.iter().all(|&x| s.contains(self.conjugate(x, g))))
            .collect();
        Ok(Subgroup::from_sorted(elements, self.order, Vec::new()))
    }

    /// A Sylow p-subgroup: start from an element of largest p-power order and
    /// keep adjoining p-elements of the normalizer until the full p-part of
    /// the group order is reached.
    pub fn sylow(&self, p: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut target = 1usize;
        let mut rest = self.order;
        while rest % p as usize == 0 {
            rest /= p as usize;
            target *= p as usize;
        }
        if target == 1 {
            return Ok(self.trivial_subgroup());
        }
        let is_p_element = |x: usize| is_power_of(self.element_order[x] as u64, p);
        let start = (1..self.order)
            .filter(|&x| is_p_element(x))
            .max_by_key(|&x| (self.element_order[x], std::cmp::Reverse(x)))
            .expect("Cauchy: a p-element exists");
        let mut gens = vec![start];
        let mut current = self.subgroup_generated(&gens);
        while current.order() < target {
            let normalizer = self.normalizer(&current)?;
            let extra = normalizer
                .elements()
                .iter()
                .copied()
                .find(|&y| !current.contains(y) && is_p_element(y))
                .expect("a proper p-subgroup grows inside its normalizer");
            gens.push(extra);
            current = self.subgroup_generated(&gens);
        }
        Ok(current)
    }

    /// The subgroup as a standalone group, elements ordered by their index in
    /// `self`. Defining traces are restricted along.
    pub fn restrict(&self, s: &Subgroup) -> Result<FiniteGroup> {
        self.check_subgroup(s)?;
        let local: HashMap<usize, usize> = s
            .elements
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, i))
            .collect();
        let n = s.order();
        let mut table = Vec::with_capacity(n * n);
        for &a in &s.elements {
            for &b in &s.elements {
                table.push(local[&self.mul(a, b)] as u32);
            }
        }
        let gens = s.generators.iter().map(|x| local[x]).collect();
        let mut group = FiniteGroup::from_table(n, table, gens);
        if let Some(traces) = &self.defining_traces {
            group.set_defining_traces(s.elements.iter().map(|&x| traces[x].clone()).collect());
        }
        Ok(group)
    }

    /// Conjugacy classes, ordered by their smallest element index.
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = members.len();
            let mut orbit = Vec::new();
            for g in 0..n {
                let y = self.conjugate(x, g);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    orbit.push(y);
                }
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        let power_cache = members
            .iter()
            .map(|m| {
                let rep = m[0];
                let ord = self.element_order[rep] as usize;
                let mut classes = Vec::with_capacity(ord);
                let mut x = 0;
                for _ in 0..ord {
                    classes.push(class_of[x]);
                    x = self.mul(x, rep);
                }
                classes
            })
            .collect();
        ConjugacyClasses {
            representatives: members.iter().map(|m| m[0]).collect(),
            sizes: members.iter().map(Vec::len).collect(),
            orders: members.iter().map(|m| self.element_order[m[0]]).collect(),
            inverse_class: members.iter().map(|m| class_of[self.inv(m[0])]).collect(),
            class_of,
            members,
            power_cache,
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn is_power_of(mut x: u64, p: u64) -> bool {
    if x <= 1 {
        return false;
    }
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

/// A subgroup recorded by the sorted indices of its elements in the ambient
/// group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<usize>,
    mask: Vec<bool>,
    generators: Vec<usize>,
}

impl Subgroup {
    fn from_sorted(elements: Vec<usize>, ambient: usize, generators: Vec<usize>) -> Self {
        let mut mask = vec![false; ambient];
        for &x in &elements {
            mask[x] = true;
        }
        Self {
            elements,
            mask,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }
}

/// Partition of a group into conjugacy classes.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub class_of: Vec<usize>,
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
    /// Order of the elements in each class.
    pub orders: Vec<u32>,
    /// Class containing the inverses of each class.
    pub inverse_class: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    power_cache: Vec<Vec<usize>>,
}

impl ConjugacyClasses {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// Class of `g^k` for `g` in class `class`.
    pub fn power_map(&self, class: usize, k: i64) -> usize {
        let cycle = &self.power_cache[class];
        cycle[k.rem_euclid(cycle.len() as i64) as usize]
    }
}

/// A group enumerated from exact matrix generators, keeping the matrices.
#[derive(Clone, Debug)]
pub struct MatrixGroup<T> {
    elements: Vec<Matrix<T>>,
    lookup: HashMap<Matrix<T>, usize>,
    group: FiniteGroup,
}

impl<T: ExactScalar> MatrixGroup<T> {
    /// Breadth-first closure of `generators`; fails beyond `size_cap` elements.
    pub fn generate(generators: &[Matrix<T>], size_cap: usize) -> Result<Self> {
        let dim = generators.first().map_or(1, Matrix::dim);
        let identity = Matrix::identity(dim);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        let mut parent: Vec<Option<(u32, u32)>> = vec![None];
        let mut right: Vec<Vec<u32>> = Vec::new();
        let mut next = 0;
        while next < elements.len() {
            let mut row = Vec::with_capacity(generators.len());
            for (k, g) in generators.iter().enumerate() {
                let y = &elements[next] * g;
                let idx = match lookup.get(&y) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= size_cap {
                            return Err(Error::GroupTooLarge { cap: size_cap });
                        }
                        let i = elements.len();
                        lookup.insert(y.clone(), i);
                        elements.push(y);
                        parent.push(Some((next as u32, k as u32)));
                        i
                    }
                };
                row.push(idx as u32);
            }
            right.push(row);
            next += 1;
        }
        let mut group = FiniteGroup::from_generator_action(&right, &parent);
        group.generators = generators.iter().map(|g| lookup[g]).collect();
        Ok(Self {
            elements,
            lookup,
            group,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    pub fn element(&self, i: usize) -> &Matrix<T> {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Matrix<T>] {
        &self.elements
    }

    pub fn index_of(&self, m: &Matrix<T>) -> Option<usize> {
        self.lookup.get(m).copied()
    }
}

impl MatrixGroup<Cyclotomic> {
    /// Records the matrix traces as the defining character.
    pub(crate) fn attach_defining_traces(&mut self) {
        let traces = self.elements.iter().map(Matrix::trace).collect();
        self.group.set_defining_traces(traces);
    }
}

/// Order-8 non-abelian group with a unique involution, i.e. `Q_8`.
pub fn is_quaternion8(g: &FiniteGroup) -> bool {
    g.order() == 8 && !g.is_abelian() && (0..8).filter(|&x| g.element_order(x) == 2).count() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;
    use num_traits::{One, Zero};

    fn minus_identity() -> Matrix<Cyclotomic> {
        Matrix::scalar(2, Cyclotomic::from_integer(-1))
    }

    #[test]
    fn closure_of_minus_identity() {
        let g = MatrixGroup::generate(&[minus_identity()], 100).unwrap();
        assert_eq!(g.group().order(), 2);
        assert_eq!(g.group().element_order(1), 2);
    }

    #[test]
    fn size_cap_is_enforced() {
        // [[1,1],[0,1]] over Q has infinite order
        let t = Matrix::two_by_two(
            Cyclotomic::one(),
            Cyclotomic::one(),
            Cyclotomic::zero(),
            Cyclotomic::one(),
        );
        assert_eq!(
            MatrixGroup::generate(&[t], 50).unwrap_err(),
            Error::GroupTooLarge { cap: 50 }
        );
    }

    #[test]
    fn table_matches_matrices() {
        let gens = [
            Matrix::two_by_two(Fp::<3>::new(1), Fp::new(1), Fp::new(0), Fp::new(1)),
            Matrix::two_by_two(Fp::<3>::new(0), Fp::new(-1), Fp::new(1), Fp::new(0)),
        ];
        let mg = MatrixGroup::generate(&gens, 1000).unwrap();
        let g = mg.group();
        assert_eq!(g.order(), 24);
        for a in 0..24 {
            for b in 0..24 {
                let prod = mg.element(a) * mg.element(b);
                assert_eq!(mg.index_of(&prod), Some(g.mul(a, b)));
            }
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn subgroup_validation() {
        let gens = [Matrix::two_by_two(
            Fp::<5>::new(1),
            Fp::new(1),
            Fp::new(0),
            Fp::new(1),
        )];
        let g = MatrixGroup::generate(&gens, 100).unwrap().into_group();
        assert_eq!(g.order(), 5);
        assert_eq!(g.subgroup_from_elements(&[0, 1]), Err(Error::NotASubgroup));
        assert!(g.subgroup_from_elements(&[0]).is_ok());
        assert_eq!(g.sylow(4), Err(Error::NotPrime(4)));
    }
}
