//! Reference values computed by brute force, independently of the
//! coloring formulas in `foam-core`.

use std::collections::BTreeMap;

use foam_core::exactalg::Monomial;
use foam_core::{Poly, RingSpec};

pub fn mono(ring: RingSpec, e: [u32; 3], c: i128) -> Poly {
    Poly::monomial(ring, Monomial(e), c)
}

/// `α₁ - α₂` or `x_i - x_j` (`x_i + x_j` over F₂), by 0-based index.
pub fn diff(ring: RingSpec, i: usize, j: usize) -> Poly {
    &ring.var(i) - &ring.var(j)
}

/// `h_n(x₁, x₂, x₃)` as a sum over all monomials of degree `n`.
pub fn complete_h(ring: RingSpec, n: i64) -> Poly {
    let mut out = Poly::zero(ring);
    if n < 0 {
        return out;
    }
    let n = n as u32;
    for a in 0..=n {
        for b in 0..=n - a {
            out += &mono(ring, [a, b, n - a - b], 1);
        }
    }
    out
}

/// Permutations of three positions with their signs.
pub const PERMS: [([usize; 3], i128); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
];

/// Bialternant `a_d / a_(2,1,0)` over Z.
pub fn bialternant(d: [u32; 3]) -> Poly {
    let ring = RingSpec::X_INT;
    let mut num = Poly::zero(ring);
    for (p, sgn) in PERMS {
        let mut e = [0u32; 3];
        for j in 0..3 {
            e[p[j]] = d[j];
        }
        num += &mono(ring, e, sgn);
    }
    let vdm = &(&diff(ring, 0, 1) * &diff(ring, 0, 2)) * &diff(ring, 1, 2);
    num.exact_divide(&vdm).expect("alternant divisible by the Vandermonde")
}

/// Genus-`g` SL(2) surface with `d` dots and `2k` anchors labeled `labels`.
pub fn sl2_genus_family(g: u32, d: u32, labels: &[u8]) -> Poly {
    let r = RingSpec::ALPHA;
    let (a1, a2) = (r.var(0), r.var(1));
    let delta = diff(r, 0, 1);
    if labels.is_empty() {
        let sign = if g % 2 == 1 { 1 } else { -1 };
        let num = &a1.pow(d) + &a2.pow(d).scale(sign);
        return if g == 0 { num.exact_divide(&delta).expect("divisible") } else { &num * &delta.pow(g - 1) };
    }
    let e = labels.len() as u32 / 2 + g - 1;
    if labels.iter().all(|&l| l == 1) {
        &a2.pow(d) * &(-delta).pow(e)
    } else if labels.iter().all(|&l| l == 2) {
        &a1.pow(d) * &delta.pow(e)
    } else {
        Poly::zero(r)
    }
}

/// Unoriented genus-`g` surface with `d` dots and `2n > 0` anchors all
/// labeled `i` (0-based).
pub fn sl3u_genus_family(g: u32, n: u32, d: u32, i: usize) -> Poly {
    let r = RingSpec::X_MOD2;
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    let base = &diff(r, i, j) * &diff(r, i, k);
    &r.var(i).pow(d) * &base.pow(n + g - 1)
}

/// Laurent polynomial in two variables as `(q, a) → coefficient`.
pub type Laurent = BTreeMap<(i64, i64), usize>;

pub fn laurent_mul(x: &Laurent, y: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&(q1, a1), &c1) in x {
        for (&(q2, a2), &c2) in y {
            *out.entry((q1 + q2, a1 + a2)).or_default() += c1 * c2;
        }
    }
    out
}

pub fn laurent_pow(x: &Laurent, n: usize) -> Laurent {
    let mut out = Laurent::from([((0, 0), 1)]);
    for _ in 0..n {
        out = laurent_mul(&out, x);
    }
    out
}

/// Sum of `u_ℓ` over anchor labels in Z/2 × Z/2, with `u₃ = u₁ + u₂`.
pub fn klein_sum(labels: &[u8]) -> [u8; 2] {
    let mut s = [0u8; 2];
    for &l in labels {
        if l != 2 {
            s[0] ^= 1;
        }
        if l != 1 {
            s[1] ^= 1;
        }
    }
    s
}

/// `Σ (-1)^{i + ℓ(i)}` over anchors numbered from 1.
pub fn sl2_adeg(labels: &[u8]) -> i64 {
    labels.iter().enumerate().map(|(i, &l)| if (i + 1 + l as usize).is_multiple_of(2) { 1 } else { -1 }).sum()
}
