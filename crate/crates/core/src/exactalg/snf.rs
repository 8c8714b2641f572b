use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exactalg::matrix::IntMatrix;

/// `left · M · right = diag`, with `diagonal[k] | diagonal[k + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub diagonal: Vec<BigInt>,
    pub left: Option<IntMatrix>,
    pub right: Option<IntMatrix>,
}

struct Work {
    a: IntMatrix,
    left: Option<IntMatrix>,
    right: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(l) = self.left.as_mut() {
            l.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(r) = self.right.as_mut() {
            r.swap_cols(i, j);
        }
    }

    /// row_dst += k · row_src
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        fn apply(m: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
            for j in 0..m.cols() {
                let v = m.get(src, j) * k;
                *m.get_mut(dst, j) += v;
            }
        }
        apply(&mut self.a, dst, src, k);
        if let Some(l) = self.left.as_mut() {
            apply(l, dst, src, k);
        }
    }

    /// col_dst += k · col_src
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        fn apply(m: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
            for i in 0..m.rows() {
                let v = m.get(i, src) * k;
                *m.get_mut(i, dst) += v;
            }
        }
        apply(&mut self.a, dst, src, k);
        if let Some(r) = self.right.as_mut() {
            apply(r, dst, src, k);
        }
    }

    fn negate_row(&mut self, i: usize) {
        fn apply(m: &mut IntMatrix, i: usize) {
            for j in 0..m.cols() {
                let v = -m.get(i, j);
                m.set(i, j, v);
            }
        }
        apply(&mut self.a, i);
        if let Some(l) = self.left.as_mut() {
            apply(l, i);
        }
    }
}

pub fn smith_normal_form(m: &IntMatrix, transforms: bool) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut w = Work {
        a: m.clone(),
        left: transforms.then(|| IntMatrix::identity(rows)),
        right: transforms.then(|| IntMatrix::identity(cols)),
    };
    let n = rows.min(cols);
    let mut diagonal = Vec::with_capacity(n);
    for t in 0..n {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !w.a.get(i, j).is_zero())
            .min_by_key(|&(i, j)| w.a.get(i, j).abs());
        let Some((pi, pj)) = pivot else {
            diagonal.resize(n, BigInt::zero());
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let q = w.a.get(i, t).div_floor(w.a.get(t, t));
                w.add_row(i, t, &-q);
                if !w.a.get(i, t).is_zero() {
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let q = w.a.get(t, j).div_floor(w.a.get(t, t));
                w.add_col(j, t, &-q);
                if !w.a.get(t, j).is_zero() {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            let piv = w.a.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a.get(i, j).is_multiple_of(&piv)));
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }
        diagonal.push(w.a.get(t, t).clone());
    }
    Snf { diagonal, left: w.left, right: w.right }
}

/// Nonzero invariant factors, ascending by divisibility.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    smith_normal_form(m, false).diagonal.into_iter().filter(|d| !d.is_zero()).collect()
}
