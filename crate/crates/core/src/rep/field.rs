//! Dense linear algebra over a small prime field `F_p`.

use super::RepError;

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub(crate) fn inv_mod(a: u32, p: u32) -> Option<u32> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    // p is small: Fermat by repeated multiplication is plenty
    let mut r = 1u64;
    let mut base = a as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    Some(r as u32)
}

/// Row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<u32>>, p: u32) -> Result<Self, RepError> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(RepError::Shape(format!(
                "expected {rows}x{cols}, got {} rows",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            data: entries.into_iter().flatten().map(|x| x % p).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix, p: u32) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + a * other.get(k, j)) % p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Matrix, k: u32, p: u32) {
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            *x = (*x + k * y) % p;
        }
    }

    pub fn apply(&self, v: &[u32], p: u32) -> Vec<u32> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum::<u32>() % p)
            .collect()
    }
}

/// Reduces `rows` to reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(rows: &mut Vec<Vec<u32>>, p: u32) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    rref(&mut rows, p).len()
}

/// A subspace of `F_p^n`, stored by its RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient).to_rows(),
        }
    }

    pub fn span(ambient: usize, mut vectors: Vec<Vec<u32>>, p: u32) -> Self {
        rref(&mut vectors, p);
        Self {
            ambient,
            basis: vectors,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains(&self, v: &[u32], p: u32) -> bool {
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank(rows, p) == self.basis.len()
    }

    pub fn contains_subspace(&self, other: &Subspace, p: u32) -> bool {
        other.dim() <= self.dim() && other.basis.iter().all(|v| self.contains(v, p))
    }

    /// All subspaces of `F_p^n`, ordered by dimension, then by pivot pattern
    /// and free entries.
    pub fn enumerate(ambient: usize, p: u32) -> Vec<Subspace> {
        let mut out = Vec::new();
        for k in 0..=ambient {
            for pivots in combinations(ambient, k) {
                // free slots: row r, column c > pivots[r], c not a pivot
                let slots: Vec<(usize, usize)> = (0..k)
                    .flat_map(|r| {
                        let pv = pivots.clone();
                        ((pivots[r] + 1)..ambient)
                            .filter(move |c| !pv.contains(c))
                            .map(move |c| (r, c))
                    })
                    .collect();
                let total = (p as usize).pow(slots.len() as u32);
                for code in 0..total {
                    let mut rows = vec![vec![0u32; ambient]; k];
                    for (r, &c) in pivots.iter().enumerate() {
                        rows[r][c] = 1;
                    }
                    let mut x = code;
                    for &(r, c) in &slots {
                        rows[r][c] = (x % p as usize) as u32;
                        x /= p as usize;
                    }
                    out.push(Subspace {
                        ambient,
                        basis: rows,
                    });
                }
            }
        }
        out
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
