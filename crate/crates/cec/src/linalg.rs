//! Exact sparse linear algebra over the rationals.
//!
//! Rows are kept as sorted `(column, BigInt)` pairs. Elimination uses
//! cross-multiplication followed by content reduction, so all intermediate
//! entries stay in Z. Pivot selection is deterministic: smallest leading
//! column first, then fewest nonzeros, then lowest row index.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

pub type Q = BigRational;
pub type Z = BigInt;

pub fn qz(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

pub fn qr(num: i64, den: i64) -> Q {
    Q::new(Z::from(num), Z::from(den))
}

/// Sorted sparse row over Z.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Row(pub Vec<(usize, Z)>);

impl Row {
    fn lead(&self) -> Option<usize> {
        self.0.first().map(|(c, _)| *c)
    }

    fn content_reduce(&mut self) {
        let mut g = Z::zero();
        for (_, v) in &self.0 {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for (_, v) in &mut self.0 {
            *v = &*v / &g;
        }
    }

    fn get(&self, col: usize) -> Z {
        match self.0.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => self.0[i].1.clone(),
            Err(_) => Z::zero(),
        }
    }
}

/// r2 <- a*r2 + b*r1, merged sparsely, then content-reduced.
fn row_combine(r2: &Row, a: &Z, r1: &Row, b: &Z) -> Row {
    let mut out = Vec::with_capacity(r2.0.len() + r1.0.len());
    let (mut i, mut j) = (0, 0);
    while i < r2.0.len() || j < r1.0.len() {
        let next = match (r2.0.get(i), r1.0.get(j)) {
            (Some((c2, v2)), Some((c1, v1))) => {
                if c2 < c1 {
                    i += 1;
                    (*c2, a * v2)
                } else if c1 < c2 {
                    j += 1;
                    (*c1, b * v1)
                } else {
                    i += 1;
                    j += 1;
                    (*c2, a * v2 + b * v1)
                }
            }
            (Some((c2, v2)), None) => {
                i += 1;
                (*c2, a * v2)
            }
            (None, Some((c1, v1))) => {
                j += 1;
                (*c1, b * v1)
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    let mut row = Row(out);
    row.content_reduce();
    row
}

#[derive(Clone, Debug)]
pub struct SparseMat {
    pub ncols: usize,
    pub rows: Vec<Row>,
    /// Original row = scale * stored integer row; needed by `solve`.
    scales: Vec<Q>,
}

impl SparseMat {
    pub fn new(ncols: usize) -> Self {
        SparseMat { ncols, rows: Vec::new(), scales: Vec::new() }
    }

    /// Build from rational rows, clearing denominators per row.
    pub fn from_q_rows(ncols: usize, rows: Vec<Vec<(usize, Q)>>) -> Self {
        let mut m = SparseMat::new(ncols);
        for r in rows {
            m.push_q_row(r);
        }
        m
    }

    pub fn push_q_row(&mut self, mut r: Vec<(usize, Q)>) {
        r.sort_by_key(|(c, _)| *c);
        r.retain(|(_, v)| !v.is_zero());
        let mut lcm = Z::one();
        for (_, v) in &r {
            lcm = lcm.lcm(v.denom());
        }
        let mut row = Row(
            r.into_iter()
                .map(|(c, v)| {
                    let scaled = v.numer() * (&lcm / v.denom());
                    (c, scaled)
                })
                .collect(),
        );
        let mut content = Z::zero();
        for (_, v) in &row.0 {
            content = content.gcd(v);
        }
        row.content_reduce();
        let scale = if content.is_zero() {
            Q::one()
        } else {
            Q::new(content, lcm)
        };
        self.rows.push(row);
        self.scales.push(scale);
    }

    /// In-place echelon form. Returns the pivot (row, col) list in order.
    fn echelonize(rows: &mut Vec<Row>) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut done = 0usize;
        loop {
            // deterministic pivot: min leading col, then fewest nnz, then index
            let mut best: Option<(usize, usize, usize)> = None; // (col, nnz, idx)
            for (idx, r) in rows.iter().enumerate().skip(done) {
                if let Some(c) = r.lead() {
                    let key = (c, r.0.len(), idx);
                    if best.map_or(true, |b| key < b) {
                        best = Some(key);
                    }
                }
            }
            let Some((col, _, idx)) = best else { break };
            rows.swap(done, idx);
            let pivot_row = rows[done].clone();
            let p = pivot_row.0[0].1.clone();
            for r in rows.iter_mut().skip(done + 1) {
                if r.lead() == Some(col) {
                    let q = r.0[0].1.clone();
                    *r = row_combine(r, &p, &pivot_row, &(-q));
                    debug_assert!(r.lead() != Some(col));
                }
            }
            pivots.push((done, col));
            done += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        rows.retain(|r| !r.0.is_empty());
        Self::echelonize(&mut rows).len()
    }

    /// Basis of { x : M x = 0 }, as dense rational vectors of length ncols.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut rows = self.rows.clone();
        rows.retain(|r| !r.0.is_empty());
        let pivots = Self::echelonize(&mut rows);
        let pivot_cols: Vec<usize> = pivots.iter().map(|(_, c)| *c).collect();
        let is_pivot = {
            let mut v = vec![false; self.ncols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if is_pivot[free] {
                continue;
            }
            let mut x = vec![Q::zero(); self.ncols];
            x[free] = Q::one();
            // back-substitution, bottom pivot row first
            for &(ri, pc) in pivots.iter().rev() {
                let row = &rows[ri];
                let mut acc = Q::zero();
                for (c, v) in &row.0 {
                    if *c == pc {
                        continue;
                    }
                    if !x[*c].is_zero() {
                        acc += Q::from_integer(v.clone()) * &x[*c];
                    }
                }
                let p = Q::from_integer(row.get(pc));
                x[pc] = -acc / p;
            }
            basis.push(x);
        }
        basis
    }

    /// Solve M x = b. Returns None when inconsistent. Free variables are 0.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows.len());
        let aug_col = self.ncols;
        let mut rows: Vec<Row> = self
            .rows
            .iter()
            .zip(b)
            .zip(&self.scales)
            .map(|((r, v), scale)| {
                // stored row equals original/scale, so the rhs rescales too
                let rhs = v / scale;
                let lcm = rhs.denom().clone();
                let mut row = r.clone();
                for (_, e) in &mut row.0 {
                    *e = &*e * &lcm;
                }
                if !rhs.is_zero() {
                    row.0.push((aug_col, rhs.numer().clone()));
                }
                row.content_reduce();
                row
            })
            .collect();
        rows.retain(|r| !r.0.is_empty());
        let pivots = Self::echelonize(&mut rows);
        if pivots.iter().any(|(_, c)| *c == aug_col) {
            return None;
        }
        let mut x = vec![Q::zero(); self.ncols];
        for &(ri, pc) in pivots.iter().rev() {
            let row = &rows[ri];
            let mut acc = Q::zero();
            for (c, v) in &row.0 {
                if *c == pc {
                    continue;
                }
                let xv = if *c == aug_col { -Q::one() } else { x[*c].clone() };
                if !xv.is_zero() {
                    acc += Q::from_integer(v.clone()) * xv;
                }
            }
            let p = Q::from_integer(row.get(pc));
            x[pc] = -acc / p;
        }
        Some(x)
    }

    /// Rank modulo a word-sized prime; cross-check for the exact path.
    pub fn rank_mod(&self, p: u64) -> usize {
        let reduce = |z: &Z| -> u64 {
            let m = z.mod_floor(&Z::from(p));
            let (_, digits) = m.to_u64_digits();
            *digits.first().unwrap_or(&0)
        };
        let mut rows: Vec<Vec<(usize, u64)>> = self
            .rows
            .iter()
            .map(|r| {
                r.0.iter()
                    .map(|(c, v)| (*c, reduce(v)))
                    .filter(|(_, v)| *v != 0)
                    .collect()
            })
            .collect();
        let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
        let powmod = |mut a: u64, mut e: u64| {
            let mut r = 1u64;
            while e > 0 {
                if e & 1 == 1 {
                    r = mulmod(r, a);
                }
                a = mulmod(a, a);
                e >>= 1;
            }
            r
        };
        let inv = |a: u64| powmod(a, p - 2);
        let mut rank = 0;
        let mut done = 0usize;
        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            for (idx, r) in rows.iter().enumerate().skip(done) {
                if let Some((c, _)) = r.first() {
                    let key = (*c, r.len(), idx);
                    if best.map_or(true, |b| key < b) {
                        best = Some(key);
                    }
                }
            }
            let Some((col, _, idx)) = best else { break };
            rows.swap(done, idx);
            let piv = rows[done].clone();
            let pinv = inv(piv[0].1);
            for r in rows.iter_mut().skip(done + 1) {
                if r.first().map(|(c, _)| *c) == Some(col) {
                    let factor = mulmod(r[0].1, pinv);
                    let mut merged: Vec<(usize, u64)> = Vec::new();
                    let (mut i, mut j) = (0, 0);
                    while i < r.len() || j < piv.len() {
                        match (r.get(i), piv.get(j)) {
                            (Some(&(c2, v2)), Some(&(c1, v1))) if c2 == c1 => {
                                i += 1;
                                j += 1;
                                let v = (v2 + p - mulmod(factor, v1)) % p;
                                if v != 0 {
                                    merged.push((c2, v));
                                }
                            }
                            (Some(&(c2, v2)), Some(&(c1, _))) if c2 < c1 => {
                                i += 1;
                                merged.push((c2, v2));
                            }
                            (Some(_), Some(&(c1, v1))) => {
                                j += 1;
                                let v = (p - mulmod(factor, v1)) % p;
                                if v != 0 {
                                    merged.push((c1, v));
                                }
                            }
                            (Some(&(c2, v2)), None) => {
                                i += 1;
                                merged.push((c2, v2));
                            }
                            (None, Some(&(c1, v1))) => {
                                j += 1;
                                let v = (p - mulmod(factor, v1)) % p;
                                if v != 0 {
                                    merged.push((c1, v));
                                }
                            }
                            (None, None) => break,
                        }
                    }
                    *r = merged;
                }
            }
            rank += 1;
            done += 1;
        }
        rank
    }
}

/// Small dense helpers for algebra-sized matrices.
pub mod dense {
    use super::Q;
    use num::{One, Zero};

    pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
        let n = a.len();
        let m = b[0].len();
        let k = b.len();
        let mut out = vec![vec![Q::zero(); m]; n];
        for i in 0..n {
            for l in 0..k {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..m {
                    if !b[l][j].is_zero() {
                        let t = &a[i][l] * &b[l][j];
                        out[i][j] += t;
                    }
                }
            }
        }
        out
    }

    pub fn mat_sub(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
        a.iter()
            .zip(b)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
            .collect()
    }

    pub fn trace(a: &[Vec<Q>]) -> Q {
        (0..a.len()).map(|i| a[i][i].clone()).sum()
    }

    /// Inverse via column-wise solves; None when singular.
    pub fn invert(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
        let n = a.len();
        let mat = super::SparseMat::from_q_rows(
            n,
            a.iter()
                .map(|r| r.iter().cloned().enumerate().collect())
                .collect(),
        );
        if mat.rank() != n {
            return None;
        }
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![Q::zero(); n];
            e[j] = Q::one();
            cols.push(mat.solve(&e)?);
        }
        // transpose columns into rows
        let mut out = vec![vec![Q::zero(); n]; n];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                out[i][j] = col[i].clone();
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: Vec<Vec<i64>>, ncols: usize) -> SparseMat {
        SparseMat::from_q_rows(
            ncols,
            rows.into_iter()
                .map(|r| r.into_iter().enumerate().map(|(c, v)| (c, qz(v))).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let m = mat(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]], 3);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for row in &m.rows {
            let mut acc = Q::zero();
            for (c, v) in &row.0 {
                acc += Q::from_integer(v.clone()) * &ns[0][*c];
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = mat(vec![vec![2, 0], vec![0, 3]], 2);
        let x = m.solve(&[qz(4), qz(9)]).unwrap();
        assert_eq!(x, vec![qz(2), qz(3)]);
        let m2 = mat(vec![vec![1, 1], vec![2, 2]], 2);
        assert!(m2.solve(&[qz(1), qz(3)]).is_none());
    }

    #[test]
    fn modular_rank_agrees() {
        let m = mat(
            vec![vec![1, 2, 3, 1], vec![0, 1, 1, 0], vec![1, 3, 4, 1], vec![5, 0, 1, 2]],
            4,
        );
        let exact = m.rank();
        assert_eq!(m.rank_mod(1_000_000_007), exact);
        assert_eq!(m.rank_mod(998_244_353), exact);
    }

    #[test]
    fn dense_invert() {
        let a = vec![vec![qz(2), qz(1)], vec![qz(1), qz(1)]];
        let inv = dense::invert(&a).unwrap();
        let prod = dense::mat_mul(&a, &inv);
        assert_eq!(prod[0][0], qz(1));
        assert_eq!(prod[0][1], qz(0));
        assert_eq!(prod[1][1], qz(1));
    }
}
