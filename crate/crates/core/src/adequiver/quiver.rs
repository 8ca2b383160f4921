use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive};

use crate::chartab::{character_of_defining_rep, character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::groups::FiniteGroup;

/// The McKay quiver: `a[i][j]` is the multiplicity of irrep `j` in
/// `R2 (x) r_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    adjacency: Vec<Vec<u64>>,
    node_dims: Vec<u64>,
    affine_node: usize,
}

impl Quiver {
    pub fn from_adjacency(
        adjacency: Vec<Vec<u64>>,
        node_dims: Vec<u64>,
        affine_node: usize,
    ) -> Self {
        assert!(adjacency.iter().all(|row| row.len() == adjacency.len()));
        assert_eq!(node_dims.len(), adjacency.len());
        Self {
            adjacency,
            node_dims,
            affine_node,
        }
    }

    pub fn adjacency(&self) -> &[Vec<u64>] {
        &self.adjacency
    }

    pub fn node_dims(&self) -> &[u64] {
        &self.node_dims
    }

    /// Node of the trivial representation.
    pub fn affine_node(&self) -> usize {
        self.affine_node
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..i).all(|j| self.adjacency[i][j] == self.adjacency[j][i]))
    }

    /// `2I - A`, the affine Cartan matrix for the SU(2) quivers.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| 2 * i64::from(i == j) - self.adjacency[i][j] as i64)
                    .collect()
            })
            .collect()
    }

    /// Graphviz rendering. Nodes are labelled by dimension and the affine
    /// node is drawn as a double circle; an entry `a[i][j] = k` becomes `k`
    /// parallel edges.
    pub fn to_dot(&self, title: &str) -> String {
        let symmetric = self.is_symmetric();
        let (kind, arrow) = if symmetric {
            ("graph", "--")
        } else {
            ("digraph", "->")
        };
        let mut out = String::new();
        let _ = writeln!(out, "{kind} \"{}\" {{", title.replace('"', "'"));
        for (i, d) in self.node_dims.iter().enumerate() {
            let shape = if i == self.affine_node {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(out, "  n{i} [label=\"{d}\", shape={shape}];");
        }
        for i in 0..self.len() {
            let start = if symmetric { i } else { 0 };
            for j in start..self.len() {
                for _ in 0..self.adjacency[i][j] {
                    let _ = writeln!(out, "  n{i} {arrow} n{j};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the quiver from a character table and the character of `R2` on
/// the same classes, using
/// `a_ij = (1/|G|) sum_c |C_c| chi_R2(c) chi_i(c) conj(chi_j(c))`.
pub fn mckay_quiver(table: &CharacterTable, defining: &[Cyclotomic]) -> Result<Quiver> {
    let r = table.count();
    let tensors: Vec<Vec<Cyclotomic>> = table
        .entries()
        .iter()
        .map(|row| row.iter().zip(defining).map(|(x, y)| x * y).collect())
        .collect();
    let mut adjacency = vec![vec![0u64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let value = table.inner_product(&tensors[i], table.row(j));
            let not_a_character = || Error::NotACharacter {
                i,
                j,
                value: value.to_string(),
            };
            let q = value.as_rational().ok_or_else(not_a_character)?;
            if !q.is_integer() || q.is_negative() {
                return Err(not_a_character());
            }
            adjacency[i][j] = q.to_integer().to_u64().ok_or_else(not_a_character)?;
        }
    }
    let affine_node = (0..r)
        .find(|&i| {
            table
                .row(i)
                .iter()
                .all(|x| *x == Cyclotomic::from_integer(1))
        })
        .ok_or_else(|| Error::CharacterTable("no trivial character".into()))?;
    Ok(Quiver::from_adjacency(
        adjacency,
        table.degrees(),
        affine_node,
    ))
}

/// Character table, defining character and quiver of a group built from
/// SU(2) matrices.
pub fn quiver_of_group(group: &FiniteGroup) -> Result<(CharacterTable, Quiver)> {
    let table = character_table(group)?;
    let classes = table
        .classes()
        .expect("computed tables carry their classes");
    let defining = character_of_defining_rep(group, classes)?;
    let quiver = mckay_quiver(&table, &defining)?;
    Ok((table, quiver))
}

/// Outcome of the numerical checks on a quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverReport {
    pub group_order: u64,
    pub dims_square_sum: u64,
    /// `A d` computed exactly.
    pub adjacency_times_dims: Vec<u64>,
    pub failures: Vec<String>,
}

impl QuiverReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `sum d_i^2 = |G|` and `A d = 2 d`.
pub fn quiver_checks(q: &Quiver, group_order: u64) -> QuiverReport {
    let dims = q.node_dims();
    let dims_square_sum = dims.iter().map(|d| d * d).sum();
    let adjacency_times_dims: Vec<u64> = q
        .adjacency()
        .iter()
        .map(|row| row.iter().zip(dims).map(|(a, d)| a * d).sum())
        .collect();
    let mut failures = Vec::new();
    if dims_square_sum != group_order {
        failures.push(format!(
            "sum of squared dimensions is {dims_square_sum}, group order is {group_order}"
        ));
    }
    for (i, (ad, d)) in adjacency_times_dims.iter().zip(dims).enumerate() {
        if *ad != 2 * d {
            failures.push(format!(
                "node {i}: (A d)_{i} = {ad} but 2 d_{i} = {}",
                2 * d
            ));
        }
    }
    QuiverReport {
        group_order,
        dims_square_sum,
        adjacency_times_dims,
        failures,
    }
}
