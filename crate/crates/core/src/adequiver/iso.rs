//! Exhaustive isomorphism test for small labelled graphs given as label
//! matrices (`labels[i][j]` describes the edge from `i` to `j`).

/// A bijection `p` with `a[i][j] == b[p[i]][p[j]]` for all `i, j`.
pub(crate) fn find_isomorphism<L: PartialEq + Default>(
    a: &[Vec<L>],
    b: &[Vec<L>],
) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let none = L::default();
    let linked = |m: &[Vec<L>], i: usize, j: usize| m[i][j] != none || m[j][i] != none;
    // out- and in-degree
    let signature = |m: &[Vec<L>], i: usize| -> (usize, usize) {
        let out = (0..m.len()).filter(|&j| j != i && m[i][j] != none).count();
        let inc = (0..m.len()).filter(|&j| j != i && m[j][i] != none).count();
        (out, inc)
    };
    // breadth-first order keeps each new node next to an assigned one
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        order.push(root);
        let mut head = order.len() - 1;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for y in 0..n {
                if !seen[y] && linked(a, x, y) {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
    }
    let search = Search {
        a,
        b,
        sig_a: (0..n).map(|i| signature(a, i)).collect(),
        sig_b: (0..n).map(|i| signature(b, i)).collect(),
        order,
    };
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search.extend(0, &mut map, &mut used).then_some(map)
}

struct Search<'a, L> {
    a: &'a [Vec<L>],
    b: &'a [Vec<L>],
    sig_a: Vec<(usize, usize)>,
    sig_b: Vec<(usize, usize)>,
    order: Vec<usize>,
}

impl<L: PartialEq> Search<'_, L> {
    fn extend(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let i = self.order[depth];
        for j in 0..self.b.len() {
            if used[j] || self.sig_a[i] != self.sig_b[j] || self.a[i][i] != self.b[j][j] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&k| {
                let mk = map[k];
                self.a[i][k] == self.b[j][mk] && self.a[k][i] == self.b[mk][j]
            });
            if !consistent {
                continue;
            }
            map[i] = j;
            used[j] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used[j] = false;
            map[i] = usize::MAX;
        }
        false
    }
}
