//! Smith normal form over ℤ with unimodular transforms.

pub type Matrix = Vec<Vec<i64>>;

/// U·R·V = D with U, V unimodular and D diagonal, d₁ | d₂ | …, dᵢ ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: Matrix,
    pub u_inv: Matrix,
    pub v: Matrix,
    /// Length = number of rows of R; entries past the rank are 0.
    pub diag: Vec<i64>,
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix, inner: usize) -> Matrix {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(0i64, |acc, k| acc.checked_add(row[k].checked_mul(b[k][j]).unwrap()).unwrap()))
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, x: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(x).fold(0i64, |acc, (r, v)| acc.checked_add(r.checked_mul(*v).unwrap()).unwrap()))
        .collect()
}

struct Work {
    a: Matrix,
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    rows: usize,
    cols: usize,
}

impl Work {
    // row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: i64) {
        if c == 0 {
            return;
        }
        for k in 0..self.cols {
            self.a[i][k] = self.a[i][k].checked_add(c.checked_mul(self.a[j][k]).unwrap()).unwrap();
        }
        for k in 0..self.rows {
            self.u[i][k] = self.u[i][k].checked_add(c.checked_mul(self.u[j][k]).unwrap()).unwrap();
        }
        for k in 0..self.rows {
            self.u_inv[k][j] = self.u_inv[k][j].checked_sub(c.checked_mul(self.u_inv[k][i]).unwrap()).unwrap();
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in self.u_inv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -*x;
        }
        for x in self.u[i].iter_mut() {
            *x = -*x;
        }
        for row in self.u_inv.iter_mut() {
            row[i] = -row[i];
        }
    }

    // col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: i64) {
        if c == 0 {
            return;
        }
        for row in self.a.iter_mut() {
            row[i] = row[i].checked_add(c.checked_mul(row[j]).unwrap()).unwrap();
        }
        for row in self.v.iter_mut() {
            row[i] = row[i].checked_add(c.checked_mul(row[j]).unwrap()).unwrap();
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        for row in self.v.iter_mut() {
            row.swap(i, j);
        }
    }

    fn smallest_from(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = self.a[i][j].abs();
                if x != 0 && best.is_none_or(|(bi, bj)| x < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

/// Smith decomposition of a `rows × cols` matrix given row-major.
pub fn smith(r: &Matrix, rows: usize, cols: usize) -> Smith {
    let mut w = Work {
        a: r.clone(),
        u: identity(rows),
        u_inv: identity(rows),
        v: identity(cols),
        rows,
        cols,
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.smallest_from(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let p = w.a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = w.a[i][t].div_euclid(p);
                w.add_row(i, t, -q);
                if w.a[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = w.a[t][j].div_euclid(p);
                w.add_col(j, t, -q);
                if w.a[t][j] != 0 {
                    dirty = true;
                }
            }
            if dirty {
                // a smaller remainder now sits in row or column t
                let (mut bi, mut bj) = (t, t);
                for i in t..rows {
                    if w.a[i][t] != 0 && w.a[i][t].abs() < w.a[bi][bj].abs() {
                        (bi, bj) = (i, t);
                    }
                }
                for j in t..cols {
                    if w.a[t][j] != 0 && w.a[t][j].abs() < w.a[bi][bj].abs() {
                        (bi, bj) = (t, j);
                    }
                }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            // pivot must divide the rest of the block
            let p = w.a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| w.a[i][j] % p != 0));
            match bad {
                Some(i) => w.add_row(t, i, 1),
                None => break,
            }
        }
        if w.a[t][t] < 0 {
            w.negate_row(t);
        }
        t += 1;
    }
    let diag = (0..rows).map(|i| if i < cols { w.a[i][i] } else { 0 }).collect();
    Smith { u: w.u, u_inv: w.u_inv, v: w.v, diag }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(r: Matrix) {
        let rows = r.len();
        let cols = r.first().map_or(0, |x| x.len());
        let s = smith(&r, rows, cols);
        let d = mat_mul(&mat_mul(&s.u, &r, rows), &s.v, cols);
        for i in 0..rows {
            for j in 0..cols {
                let want = if i == j { s.diag[i] } else { 0 };
                assert_eq!(d[i][j], want, "{r:?}");
            }
        }
        assert_eq!(mat_mul(&s.u, &s.u_inv, rows), identity(rows));
        let nz: Vec<i64> = s.diag.iter().copied().take_while(|&x| x != 0).collect();
        assert!(s.diag[nz.len()..].iter().all(|&x| x == 0));
        for w in nz.windows(2) {
            assert_eq!(w[1] % w[0], 0, "{:?}", s.diag);
        }
    }

    #[test]
    fn small_matrices() {
        check(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        check(vec![vec![2, 0], vec![0, 3]]);
        check(vec![vec![0, 0], vec![0, 0]]);
        check(vec![vec![6], vec![4]]);
        check(vec![vec![1, 1, -2]]);
        check(vec![vec![-2], vec![1], vec![1]]);
    }

    #[test]
    fn invariant_factors() {
        let s = smith(&vec![vec![2, 0], vec![0, 3]], 2, 2);
        assert_eq!(s.diag, vec![1, 6]);
        let s = smith(&vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3, 3);
        assert_eq!(s.diag, vec![2, 6, 12]);
    }
}
