//! Arithmetic and linear algebra over a prime field `F_l` with `l` chosen at
//! run time.

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeField {
    pub l: u64,
}

impl PrimeField {
    pub fn new(l: u64) -> Self {
        Self { l }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.l
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.l - b) % self.l
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.l
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.l;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.l != 0, "zero has no inverse");
        self.pow(a, self.l - 2)
    }

    /// An element of multiplicative order exactly `e`; `e` must divide `l - 1`.
    pub fn root_of_unity(&self, e: u64) -> u64 {
        let group = self.l - 1;
        assert_eq!(group % e, 0);
        let factors = crate::exactnum::prime_factors(group);
        let generator = (2..self.l)
            .find(|&g| factors.iter().all(|&q| self.pow(g, group / q) != 1))
            .expect("F_l^* is cyclic");
        self.pow(generator, group / e)
    }

    /// Basis of the null space of the `rows x cols` matrix `a` (row-major).
    pub fn kernel(&self, a: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut m: Vec<Vec<u64>> = a.to_vec();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(p) = (row..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, p);
            let inv = self.inv(m[row][col]);
            for x in m[row].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..m.len() {
                if r != row && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in 0..cols {
                        let v = self.mul(f, m[row][c]);
                        m[r][c] = self.sub(m[r][c], v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, m[r][f]);
                }
                v
            })
            .collect()
    }
}
