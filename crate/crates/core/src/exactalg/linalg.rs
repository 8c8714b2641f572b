use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactalg::matrix::{Entry, IntMatrix, Matrix, PolyMatrix};
use crate::exactalg::poly::{Poly, Specialized};

/// Fraction-free reduced row echelon form.
///
/// Every pivot entry equals `det`, the last pivot chosen; rows past
/// `pivots.len()` are zero.
#[derive(Clone, Debug)]
pub struct Rref<T> {
    pub matrix: Matrix<T>,
    pub pivots: Vec<usize>,
    pub det: T,
}

/// Fraction-free Gauss-Jordan, pivoting only in columns `< col_limit`.
pub fn rref<T: Entry>(m: &Matrix<T>, col_limit: usize, unit: &T) -> Rref<T> {
    let mut a = m.clone();
    let rows = a.rows();
    let cols = a.cols();
    let mut prev = unit.one_like();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..col_limit.min(cols) {
        if r == rows {
            break;
        }
        let best = (r..rows)
            .filter(|&i| !a.get(i, c).is_zero_entry())
            .min_by_key(|&i| a.get(i, c).cost());
        let Some(p) = best else { continue };
        a.swap_rows(r, p);
        let piv = a.get(r, c).clone();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in 0..cols {
                let v = piv.mul_entry(a.get(i, j)).sub_entry(&f.mul_entry(a.get(r, j)));
                let v = v.exact_div_entry(&prev).expect("Bareiss step divides exactly");
                a.set(i, j, v);
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    Rref { matrix: a, pivots, det: prev }
}

fn unit_of<T: Entry>(m: &Matrix<T>) -> Option<T> {
    m.entries().next().map(Entry::one_like)
}

pub fn rank_over_fraction_field(m: &PolyMatrix) -> usize {
    match unit_of(m) {
        Some(u) => rref(m, m.cols(), &u).pivots.len(),
        None => 0,
    }
}

pub fn integer_rank(m: &IntMatrix) -> usize {
    rref(m, m.cols(), &BigInt::one()).pivots.len()
}

pub fn rational_rank(m: &Matrix<BigRational>) -> usize {
    integer_rank(&clear_row_denominators(m))
}

fn clear_row_denominators(m: &Matrix<BigRational>) -> IntMatrix {
    let mut out = IntMatrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        let l = m.row(i).iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
        for j in 0..m.cols() {
            let v = m.get(i, j);
            out.set(i, j, v.numer() * (&l / v.denom()));
        }
    }
    out
}

fn mod2_rank(rows: Vec<Vec<u8>>) -> usize {
    let mut rows = rows;
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank at a full integer specialization of the variables.
pub fn specialized_rank(m: &PolyMatrix, values: &[i64]) -> usize {
    let Some(first) = m.entries().next() else { return 0 };
    if first.ring().is_mod2() {
        let rows = (0..m.rows())
            .map(|i| m.row(i).iter().map(|p| if p.eval_int(values).is_zero() { 0 } else { 1 }).collect())
            .collect();
        mod2_rank(rows)
    } else {
        integer_rank(&m.map(|p| p.eval_int(values)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    pub specializations: [(Vec<i64>, usize); 2],
}

/// Symbolic rank, cross-checked at two random points with distinct
/// coordinates drawn from `2..=97` (`{0, 1}` over F₂).
pub fn certified_rank(m: &PolyMatrix, seed: u64) -> Result<RankCertificate> {
    let rank = rank_over_fraction_field(m);
    let (nvars, mod2) = match m.entries().next() {
        Some(p) => (p.ring().nvars(), p.ring().is_mod2()),
        None => (0, false),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || -> Vec<i64> {
        if mod2 {
            return (0..nvars).map(|_| rng.gen_range(0..=1)).collect();
        }
        let mut vals: Vec<i64> = Vec::new();
        while vals.len() < nvars {
            let v = rng.gen_range(2..=97);
            if !vals.contains(&v) {
                vals.push(v);
            }
        }
        vals
    };
    let p1 = draw();
    let p2 = draw();
    let r1 = specialized_rank(m, &p1);
    let r2 = specialized_rank(m, &p2);
    if r1 > rank || r2 > rank {
        return Err(Error::InternalInconsistency(alloc::format!(
            "specialized rank exceeds symbolic rank {rank}"
        )));
    }
    Ok(RankCertificate { rank, specializations: [(p1, r1), (p2, r2)] })
}

fn normalize_vector(v: Vec<Poly>, det: &Poly) -> Vec<Poly> {
    let mut v = v;
    let mut candidates: Vec<Poly> = vec![det.clone()];
    candidates.extend(v.iter().filter(|p| p.as_constant().is_none()).cloned());
    let mut progress = true;
    while progress {
        progress = false;
        for g in candidates.iter() {
            if g.as_constant().is_some() {
                continue;
            }
            if v.iter().all(|p| p.exact_divide(g).is_ok()) {
                v = v.iter().map(|p| p.exact_divide(g).expect("checked")).collect();
                progress = true;
            }
        }
    }
    let content = v.iter().fold(0i128, |g, p| g.gcd(&p.content()));
    if content > 1 {
        v = v.iter().map(|p| p.exact_divide(&Poly::constant(p.ring(), content)).expect("content")).collect();
    }
    let lead_negative = v
        .iter()
        .find(|p| !p.is_zero())
        .and_then(Poly::leading)
        .is_some_and(|(_, c)| c < 0);
    if lead_negative {
        v = v.iter().map(|p| -p).collect();
    }
    v
}

/// Basis of the right kernel over the fraction field, denominators cleared.
pub fn kernel_basis(m: &PolyMatrix) -> Vec<Vec<Poly>> {
    let Some(unit) = unit_of(m) else { return Vec::new() };
    let red = rref(m, m.cols(), &unit);
    let zero = unit.zero_like();
    let mut basis = Vec::new();
    for f in (0..m.cols()).filter(|c| !red.pivots.contains(c)) {
        let mut v = vec![zero.clone(); m.cols()];
        v[f] = red.det.clone();
        for (r, &pc) in red.pivots.iter().enumerate() {
            v[pc] = -red.matrix.get(r, f);
        }
        basis.push(normalize_vector(v, &red.det));
    }
    basis
}

/// `X` with `G · X = B`, for `G` square of full rank; every entry of `X`
/// must be a polynomial.
pub fn solve(g: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    let n = g.rows();
    assert_eq!(g.cols(), n, "solve needs a square matrix");
    assert_eq!(b.rows(), n, "solve right-hand side rows");
    let Some(unit) = unit_of(g).or_else(|| unit_of(b)) else {
        return Ok(b.clone());
    };
    let red = rref(&g.hstack(b), n, &unit);
    if red.pivots.len() != n {
        return Err(Error::InternalInconsistency("singular Gram matrix".into()));
    }
    let mut out = b.clone();
    for r in 0..n {
        for j in 0..b.cols() {
            let v = red.matrix.get(r, n + j).exact_divide(&red.det).map_err(|_| Error::NonIntegral)?;
            out.set(red.pivots[r], j, v);
        }
    }
    Ok(out)
}

/// Specializes every entry at a full rational assignment.
pub fn specialize_matrix(m: &PolyMatrix, values: &[BigRational]) -> Matrix<BigRational> {
    m.map(|p| {
        let assignment: Vec<Option<BigRational>> = values.iter().cloned().map(Some).collect();
        match p.specialize(&assignment) {
            Ok(Specialized::Scalar(v)) => v,
            _ => unreachable!("full assignment yields a scalar"),
        }
    })
}
