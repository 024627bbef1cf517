//! Small exact linear algebra over `i64` and `Ratio<i64>`.
//!
//! Matrices are dense, row-major `Vec<i64>` with an explicit column count.
//! Everything here is sized for root data (rank at most a few dozen), so
//! the algorithms favour clarity over asymptotics.

use num::rational::Ratio;
use num::{Integer, Zero};

pub type Q = Ratio<i64>;

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

pub fn scale(c: i64, a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| c * x).collect()
}

/// `m` is `n x n`, row-major; returns `m * x`.
pub fn mat_vec(m: &[i64], x: &[i64]) -> Vec<i64> {
    let n = x.len();
    (0..n).map(|i| dot(&m[i * n..(i + 1) * n], x)).collect()
}

pub fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

pub fn transpose(a: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j];
        }
    }
    out
}

pub fn identity(n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        out[i * n + i] = 1;
    }
    out
}

/// Inverse of a square rational matrix, `None` when singular.
pub fn rational_inverse(m: &[Q], n: usize) -> Option<Vec<Q>> {
    let mut a = m.to_vec();
    let mut inv: Vec<Q> = identity(n).into_iter().map(Q::from_integer).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r * n + col].is_zero())?;
        if pivot != col {
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
                inv.swap(pivot * n + j, col * n + j);
            }
        }
        let p = a[col * n + col];
        for j in 0..n {
            a[col * n + j] /= p;
            inv[col * n + j] /= p;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r * n + col];
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let (x, y) = (a[col * n + j], inv[col * n + j]);
                a[r * n + j] -= f * x;
                inv[r * n + j] -= f * y;
            }
        }
    }
    Some(inv)
}

/// Smith normal form of an integer `rows x cols` matrix.
///
/// Returns `(u, diag)` with `u` unimodular (`rows x rows`) such that the
/// rows of `u * a` are `diag[i] * e_i` after a column change of basis. Only
/// `u` and the diagonal are needed to read off the cokernel.
pub fn smith_left(a: &[i64], rows: usize, cols: usize) -> (Vec<i64>, Vec<i64>) {
    let mut m = a.to_vec();
    let mut u = identity(rows);
    let at = |m: &Vec<i64>, i: usize, j: usize| m[i * cols + j];
    let row_swap = |m: &mut Vec<i64>, w: usize, i: usize, j: usize| {
        for k in 0..w {
            m.swap(i * w + k, j * w + k);
        }
    };
    // row_i -= f * row_j
    let row_axpy = |m: &mut Vec<i64>, w: usize, i: usize, j: usize, f: i64| {
        for k in 0..w {
            let v = m[j * w + k];
            m[i * w + k] -= f * v;
        }
    };
    let col_swap = |m: &mut Vec<i64>, i: usize, j: usize| {
        for r in 0..rows {
            m.swap(r * cols + i, r * cols + j);
        }
    };
    let col_axpy = |m: &mut Vec<i64>, i: usize, j: usize, f: i64| {
        for r in 0..rows {
            let v = m[r * cols + j];
            m[r * cols + i] -= f * v;
        }
    };

    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero entry in the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = at(&m, i, j).abs();
                if v != 0 && best.is_none_or(|(bi, bj)| v < at(&m, bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        row_swap(&mut m, cols, t, pi);
        row_swap(&mut u, rows, t, pi);
        col_swap(&mut m, t, pj);
        loop {
            let p = at(&m, t, t);
            let mut dirty = false;
            for i in t + 1..rows {
                let q = Integer::div_floor(&at(&m, i, t), &p);
                if q != 0 {
                    row_axpy(&mut m, cols, i, t, q);
                    row_axpy(&mut u, rows, i, t, q);
                }
                if at(&m, i, t) != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&at(&m, t, j), &p);
                if q != 0 {
                    col_axpy(&mut m, j, t, q);
                }
                if at(&m, t, j) != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the rest of the block
                let mut fix = None;
                'scan: for i in t + 1..rows {
                    for j in t + 1..cols {
                        if at(&m, i, j) % p != 0 {
                            fix = Some(i);
                            break 'scan;
                        }
                    }
                }
                match fix {
                    Some(i) => {
                        row_axpy(&mut m, cols, t, i, -1);
                        row_axpy(&mut u, rows, t, i, -1);
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest nonzero entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                let v = at(&m, i, t).abs();
                if v != 0 && v < at(&m, best.0, best.1).abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                let v = at(&m, t, j).abs();
                if v != 0 && v < at(&m, best.0, best.1).abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                row_swap(&mut m, cols, t, best.0);
                row_swap(&mut u, rows, t, best.0);
            }
            if best.1 != t {
                col_swap(&mut m, t, best.1);
            }
        }
        if at(&m, t, t) < 0 {
            for k in 0..cols {
                m[t * cols + k] = -m[t * cols + k];
            }
            for k in 0..rows {
                u[t * rows + k] = -u[t * rows + k];
            }
        }
        diag.push(at(&m, t, t));
    }
    (u, diag)
}

/// Hermite-style reduction of a set of integer row vectors: returns a
/// basis of their span in echelon form with positive pivots.
pub fn row_echelon_basis(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let width = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut col = 0;
    while col < width && !m.is_empty() {
        loop {
            m.retain(|r| r.iter().any(|&x| x != 0));
            let nz: Vec<usize> = (0..m.len()).filter(|&i| m[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m[i][col].abs()).unwrap();
            for &i in &nz {
                if i != p {
                    let q = Integer::div_floor(&m[i][col], &m[p][col]);
                    let pr = m[p].clone();
                    for k in 0..width {
                        m[i][k] -= q * pr[k];
                    }
                }
            }
        }
        if let Some(i) = (0..m.len()).find(|&i| m[i][col] != 0) {
            let mut r = m.remove(i);
            if r[col] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(r);
        }
        col += 1;
    }
    out
}
