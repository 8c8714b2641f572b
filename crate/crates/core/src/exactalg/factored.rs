use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::poly::{Monomial, Poly};
use crate::exactalg::ring::RingSpec;

/// `sign · ∏ v_i^{dots_i} · ∏_{i<j} (v_i - v_j)^{exps_ij}`, with pairs in
/// [`RingSpec::pairs`] order. Negative exponents are poles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredTerm {
    pub sign: i8,
    pub dots: [u32; 3],
    pub exps: Vec<i64>,
}

impl FactoredTerm {
    pub fn new(sign: i8, dots: [u32; 3], exps: Vec<i64>) -> FactoredTerm {
        FactoredTerm { sign, dots, exps }
    }

    /// Total degree, with every variable in degree 2.
    pub fn degree(&self) -> i64 {
        2 * (self.dots.iter().map(|&d| d as i64).sum::<i64>() + self.exps.iter().sum::<i64>())
    }
}

struct PowerCache {
    ring: RingSpec,
    powers: BTreeMap<(usize, u32), Poly>,
}

impl PowerCache {
    fn get(&mut self, pair: usize, e: u32) -> Poly {
        let ring = self.ring;
        self.powers
            .entry((pair, e))
            .or_insert_with(|| {
                let (i, j) = ring.pairs()[pair];
                ring.linear_form(i, j).pow(e)
            })
            .clone()
    }
}

/// Sum of factored terms, cleared over the common denominator and divided back.
pub fn sum_factored(terms: &[FactoredTerm], ring: RingSpec) -> Result<Poly> {
    let npairs = ring.pairs().len();
    let mut shift = vec![0i64; npairs];
    for t in terms {
        assert_eq!(t.exps.len(), npairs, "exponent vector length");
        for (s, &e) in shift.iter_mut().zip(t.exps.iter()) {
            *s = (*s).max(-e);
        }
    }

    // Terms with equal exponent vectors share one multiplication by the forms.
    let mut groups: BTreeMap<Vec<i64>, Poly> = BTreeMap::new();
    for t in terms {
        let sign = if ring.is_mod2() { 1 } else { t.sign as i128 };
        let mono = Poly::monomial(ring, Monomial(t.dots), sign);
        let entry = groups.entry(t.exps.clone()).or_insert_with(|| Poly::zero(ring));
        *entry += &mono;
    }

    let mut cache = PowerCache { ring, powers: BTreeMap::new() };
    let mut numerator = Poly::zero(ring);
    for (exps, coeff) in groups {
        if coeff.is_zero() {
            continue;
        }
        let mut part = coeff;
        for (p, (&e, &s)) in exps.iter().zip(shift.iter()).enumerate() {
            let k = (e + s) as u32;
            if k > 0 {
                part = &part * &cache.get(p, k);
            }
        }
        numerator += &part;
    }

    for (p, &s) in shift.iter().enumerate() {
        if s == 0 || numerator.is_zero() {
            continue;
        }
        let form = cache.get(p, 1);
        for _ in 0..s {
            numerator = numerator.exact_divide(&form).map_err(|_| Error::NonIntegral)?;
        }
    }
    Ok(numerator)
}
