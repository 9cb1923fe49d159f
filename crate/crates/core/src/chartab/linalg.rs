//! Dense linear algebra over a prime field `F_ℓ` with `ℓ < 2^32`.

use alloc::vec::Vec;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fl {
    pub l: u64,
}

impl Fl {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.l {
            s - self.l
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.l - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.l
    }

    pub fn pow(self, b: u64, e: u64) -> u64 {
        crate::arith::pow_mod(b, e, self.l)
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.l != 0);
        self.pow(a, self.l - 2)
    }

    #[cfg(test)]
    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.l as i64) as u64
    }
}

/// Row-reduces in place to reduced row echelon form, drops zero rows and
/// returns the pivot columns.
pub(crate) fn rref(rows: &mut Vec<Vec<u64>>, f: Fl) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        let Some(sel) = (top..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(top, sel);
        let inv = f.inv(rows[top][col]);
        for x in rows[top].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[top].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == top || row[col] == 0 {
                continue;
            }
            let c = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = f.sub(*x, f.mul(c, p));
            }
        }
        pivots.push(col);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    pivots
}

/// Basis of `{x : m·x = 0}` for a matrix given by rows.
pub(crate) fn nullspace(m: &[Vec<u64>], ncols: usize, f: Fl) -> Vec<Vec<u64>> {
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, f);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = alloc::vec![0u64; ncols];
            x[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = f.sub(0, rows[r][fc]);
            }
            x
        })
        .collect()
}

/// Characteristic polynomial `det(xI − A)`, low coefficient first, via
/// reduction to upper Hessenberg form.
pub(crate) fn charpoly(a: &[Vec<u64>], f: Fl) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&i| h[i][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = f.inv(h[col + 1][col]);
        for i in col + 2..n {
            if h[i][col] == 0 {
                continue;
            }
            let t = f.mul(h[i][col], inv);
            // row_i -= t · row_{col+1}
            let src = h[col + 1].clone();
            for (x, &s) in h[i].iter_mut().zip(&src) {
                *x = f.sub(*x, f.mul(t, s));
            }
            // col_{col+1} += t · col_i
            for row in h.iter_mut() {
                let v = row[i];
                row[col + 1] = f.add(row[col + 1], f.mul(t, v));
            }
        }
    }
    // p_k = charpoly of the leading k×k block.
    let mut p: Vec<Vec<u64>> = alloc::vec![alloc::vec![1]];
    for k in 0..n {
        // p_{k+1} = (x − h_kk) p_k − Σ_{i<k} h_ik (Π_{j=i+1}^{k} h_{j,j−1}) p_i
        let mut next = alloc::vec![0u64; k + 2];
        for (d, &c) in p[k].iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(h[k][k], c));
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            if prod == 0 {
                break;
            }
            let t = f.mul(prod, h[i][k]);
            if t == 0 {
                continue;
            }
            for (d, &c) in p[i].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(t, c));
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Distinct roots of a polynomial that splits into linear factors, by
/// exhaustive evaluation with deflation. `None` if it does not split.
pub(crate) fn split_roots(poly: &[u64], f: Fl) -> Option<Vec<u64>> {
    let mut q = poly.to_vec();
    let mut roots = Vec::new();
    let mut x = 0u64;
    while q.len() > 1 {
        if x >= f.l {
            return None;
        }
        // Horner with synthetic division by (X − x).
        let mut quot = alloc::vec![0u64; q.len() - 1];
        let mut acc = 0u64;
        for i in (0..q.len()).rev() {
            acc = f.add(f.mul(acc, x), q[i]);
            if i > 0 {
                quot[i - 1] = acc;
            }
        }
        if acc == 0 {
            if roots.last() != Some(&x) {
                roots.push(x);
            }
            q = quot;
        } else {
            x += 1;
        }
    }
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: Fl = Fl { l: 101 };

    #[test]
    fn charpoly_of_companion_matches() {
        // Companion-like matrix with eigenvalues 2, 3, 5.
        let a = alloc::vec![alloc::vec![2, 1, 0], alloc::vec![0, 3, 1], alloc::vec![0, 0, 5]];
        let p = charpoly(&a, F);
        // (x−2)(x−3)(x−5) = x^3 − 10x^2 + 31x − 30
        assert_eq!(p, alloc::vec![F.from_i64(-30), 31, F.from_i64(-10), 1]);
        assert_eq!(split_roots(&p, F).unwrap(), alloc::vec![2, 3, 5]);
        let dense = alloc::vec![alloc::vec![1, 2, 3], alloc::vec![4, 5, 6], alloc::vec![7, 8, 10]];
        // det(xI − A) for this A: x^3 − 16x^2 − 12x + 3 (trace 16, det −3)
        let p = charpoly(&dense, F);
        assert_eq!(p[2], F.from_i64(-16));
        assert_eq!(p[0], 3);
    }

    #[test]
    fn nullspace_and_rref() {
        let m = alloc::vec![alloc::vec![1, 2, 3], alloc::vec![2, 4, 6]];
        let ns = nullspace(&m, 3, F);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!(F.add(F.add(v[0], F.mul(2, v[1])), F.mul(3, v[2])), 0);
        }
    }
}
