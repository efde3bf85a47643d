//! Dense integer matrices and Smith normal form.
//!
//! The decomposition keeps all four transforms, `u * a * v = d` with
//! `u_inv * u = 1` and `v * v_inv = 1`, so callers can move between the
//! original and diagonal coordinates in either direction. Pivots are chosen
//! by minimal absolute value, which keeps entry growth tame at the matrix
//! sizes this crate produces.

use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat { rows: r, cols: c, data: rows.concat() }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<i64>]) -> Self {
        let mut m = IntMat::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * v[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.at(r, j);
            self.set(r, j, v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.at(i, c);
            self.set(i, c, v);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: i64) {
        for j in 0..self.cols {
            let v = self.at(dst, j) + c * self.at(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += c * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, c: i64) {
        for i in 0..self.rows {
            let v = self.at(i, dst) + c * self.at(i, src);
            self.set(i, dst, v);
        }
    }

    /// Smith normal form with transforms: `u * self * v = d`.
    pub fn smith(&self) -> Smith {
        let mut d = self.clone();
        let (m, n) = (d.rows, d.cols);
        let mut u = IntMat::identity(m);
        let mut u_inv = IntMat::identity(m);
        let mut v = IntMat::identity(n);
        let mut v_inv = IntMat::identity(n);

        let limit = m.min(n);
        let mut t = 0;
        while t < limit {
            let Some((pi, pj)) = min_abs_nonzero(&d, t) else {
                break;
            };
            // Bring the pivot to (t, t).
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            'reduce: loop {
                // Clear column t below the pivot.
                for i in t + 1..m {
                    let e = d.at(i, t);
                    if e == 0 {
                        continue;
                    }
                    let q = e / d.at(t, t);
                    if q != 0 {
                        d.add_row_multiple(i, t, -q);
                        u.add_row_multiple(i, t, -q);
                        u_inv.add_col_multiple(t, i, q);
                    }
                    if d.at(i, t) != 0 {
                        // Remainder is strictly smaller than the pivot.
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                        u_inv.swap_cols(t, i);
                        continue 'reduce;
                    }
                }
                // Clear row t right of the pivot.
                for j in t + 1..n {
                    let e = d.at(t, j);
                    if e == 0 {
                        continue;
                    }
                    let q = e / d.at(t, t);
                    if q != 0 {
                        d.add_col_multiple(j, t, -q);
                        v.add_col_multiple(j, t, -q);
                        v_inv.add_row_multiple(t, j, q);
                    }
                    if d.at(t, j) != 0 {
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                        v_inv.swap_rows(t, j);
                        continue 'reduce;
                    }
                }
                // Pivot now divides everything in its row and column. Enforce
                // divisibility of the trailing submatrix.
                let p = d.at(t, t);
                let mut fixed = true;
                'scan: for i in t + 1..m {
                    for j in t + 1..n {
                        if d.at(i, j) % p != 0 {
                            d.add_row_multiple(t, i, 1);
                            u.add_row_multiple(t, i, 1);
                            u_inv.add_col_multiple(i, t, -1);
                            fixed = false;
                            break 'scan;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
            if d.at(t, t) < 0 {
                d.negate_row(t);
                u.negate_row(t);
                u_inv.negate_col(t);
            }
            t += 1;
        }

        let rank = (0..limit).take_while(|&i| d.at(i, i) != 0).count();
        Smith { d, u, u_inv, v, v_inv, rank }
    }

    /// Basis of the integer kernel lattice `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<i64>> {
        let s = self.smith();
        (s.rank..self.cols).map(|j| s.v.column(j)).collect()
    }

    /// One integer solution of `self * x = b`, if any exists.
    pub fn solve(&self, b: &[i64]) -> Option<Vec<i64>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let s = self.smith();
        let c = s.u.mul_vec(b);
        let mut y = vec![0i64; self.cols];
        for (i, &ci) in c.iter().enumerate() {
            if i < s.rank {
                let p = s.d.at(i, i);
                if ci % p != 0 {
                    return None;
                }
                y[i] = ci / p;
            } else if ci != 0 {
                return None;
            }
        }
        Some(s.v.mul_vec(&y))
    }

    /// Basis of the lattice spanned by the columns of `self`.
    ///
    /// Returned vectors are `d_i * u_inv[:, i]` for the nonzero diagonal
    /// entries, which span the same lattice because `v` is unimodular.
    pub fn column_span_basis(&self) -> Vec<Vec<i64>> {
        let s = self.smith();
        (0..s.rank)
            .map(|i| {
                let di = s.d.at(i, i);
                s.u_inv.column(i).iter().map(|&x| x * di).collect()
            })
            .collect()
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

fn min_abs_nonzero(d: &IntMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, i64)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = d.at(i, j).abs();
            if v != 0 && best.is_none_or(|(_, _, b)| v < b) {
                best = Some((i, j, v));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[derive(Clone, Debug)]
pub struct Smith {
    pub d: IntMat,
    pub u: IntMat,
    pub u_inv: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
    pub rank: usize,
}

impl Smith {
    /// Nonzero diagonal entries, in divisor-chain order.
    pub fn invariant_factors(&self) -> Vec<u64> {
        (0..self.rank).map(|i| self.d.at(i, i).unsigned_abs()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_decomposition(a: &IntMat) {
        let s = a.smith();
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "u*a*v != d");
        assert_eq!(s.u_inv.mul(&s.u), IntMat::identity(a.rows()), "u_inv*u != 1");
        assert_eq!(s.v.mul(&s.v_inv), IntMat::identity(a.cols()), "v*v_inv != 1");
        // Diagonal, nonnegative, divisor chain.
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert_eq!(s.d.at(i, j), 0);
                }
            }
        }
        let diag = s.invariant_factors();
        for w in diag.windows(2) {
            assert_eq!(w[1] % w[0], 0, "divisor chain violated: {diag:?}");
        }
    }

    #[test]
    fn identity_and_zero() {
        check_decomposition(&IntMat::identity(3));
        assert_eq!(IntMat::identity(3).smith().invariant_factors(), vec![1, 1, 1]);
        let z = IntMat::zeros(2, 3);
        check_decomposition(&z);
        assert_eq!(z.smith().rank, 0);
    }

    #[test]
    fn diagonal_divisibility_fix() {
        let m = IntMat::from_rows(&[vec![6, 0], vec![0, 4]]);
        check_decomposition(&m);
        assert_eq!(m.smith().invariant_factors(), vec![2, 12]);
    }

    #[test]
    fn two_by_two() {
        let m = IntMat::from_rows(&[vec![1, 2], vec![3, 4]]);
        check_decomposition(&m);
        assert_eq!(m.smith().invariant_factors(), vec![1, 2]);
    }

    #[test]
    fn known_four_by_four() {
        let m = IntMat::from_rows(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        check_decomposition(&m);
        assert_eq!(m.smith().invariant_factors(), vec![1, 3, 21]);
    }

    #[test]
    fn kernel_of_projection() {
        // x + y + z = 0 has a rank-2 kernel.
        let m = IntMat::from_rows(&[vec![1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(m.mul_vec(v), vec![0]);
        }
    }

    #[test]
    fn solve_hits_and_misses() {
        let m = IntMat::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(m.solve(&[4, 9]), Some(vec![2, 3]));
        assert_eq!(m.solve(&[1, 0]), None);
        let wide = IntMat::from_rows(&[vec![2, 3]]);
        let x = wide.solve(&[7]).expect("2x+3y=7 is solvable");
        assert_eq!(2 * x[0] + 3 * x[1], 7);
    }

    #[test]
    fn span_basis_spans() {
        // Columns (2,0) and (3,0) span 1*Z x 0.
        let m = IntMat::from_rows(&[vec![2, 3], vec![0, 0]]);
        let basis = m.column_span_basis();
        assert_eq!(basis, vec![vec![1, 0]]);
    }
}
