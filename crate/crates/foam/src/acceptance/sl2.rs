use std::time::{Duration, Instant};

use foam_core::skein::Suite;
use foam_core::surfaces_sl2::{AnchoredSurface, Component2};
use foam_core::{Error, Poly, RingSpec};

use super::oracle::{sl2_adeg, sl2_genus_family};
use super::{gen, ok, Check};
use crate::runner::run_suite_parallel;

pub const SEED: u64 = 0;

pub fn golden() -> Check {
    let start = Instant::now();
    let r = RingSpec::ALPHA;
    let zero = Poly::zero(r);
    let mut count = 0;
    for d in 0..=4 {
        for (labels, expect) in
            [([2u8, 2], r.var(0).pow(d)), ([1, 1], r.var(1).pow(d)), ([1, 2], zero.clone()), ([2, 1], zero.clone())]
        {
            let v = ok(AnchoredSurface::sphere(d, &labels).evaluate(), "sphere")?;
            ensure!(v == expect, "sphere with {d} dots and labels {labels:?}: got {v}, expected {expect}");
            count += 1;
        }
    }
    for g in 0..=3u32 {
        for k in 0..=2usize {
            let patterns: Vec<Vec<u8>> = if k == 0 {
                vec![vec![]]
            } else {
                let mut mixed = vec![2u8; 2 * k];
                mixed[0] = 1;
                vec![vec![1; 2 * k], vec![2; 2 * k], mixed.clone(), mixed.into_iter().rev().collect()]
            };
            for labels in patterns {
                for d in 0..=3u32 {
                    let s = AnchoredSurface {
                        components: vec![Component2::closed(g, d, (0..2 * k).collect())],
                        anchor_labels: labels.clone(),
                    };
                    let v = ok(s.evaluate(), "genus family")?;
                    let expect = sl2_genus_family(g, d, &labels);
                    ensure!(v == expect, "genus {g}, {d} dots, labels {labels:?}: got {v}, expected {expect}");
                    count += 1;
                }
            }
        }
    }
    let dt = start.elapsed();
    ensure!(dt < Duration::from_secs(1), "golden table took {:.3}s", dt.as_secs_f64());
    Ok(format!("{count} closed-form values match in {:.3}s", dt.as_secs_f64()))
}

pub fn homogeneity() -> Check {
    let mut nonzero = 0;
    for case in 0..500u64 {
        let s = gen::surface(&mut gen::rng(SEED, case));
        ok(s.validate(), format!("surface {case}"))?;
        let v = match s.evaluate() {
            Ok(v) => v,
            Err(Error::NonIntegral) => return Err(format!("surface {case} raised NonIntegral: {s:?}")),
            Err(e) => return Err(format!("surface {case}: {e}")),
        };
        let chi: i64 = s.components.iter().map(|c| 2 - 2 * c.genus as i64).sum();
        let dots: i64 = s.components.iter().map(|c| (c.dots + c.shifted[0] + c.shifted[1]) as i64).sum();
        let expect = -chi + 2 * dots + s.anchor_labels.len() as i64;
        if !v.is_zero() {
            nonzero += 1;
            let deg = v.homogeneous_degree().map(i64::from);
            ensure!(deg == Some(expect), "surface {case}: degree {deg:?}, expected {expect}: {s:?}");
            let adeg = sl2_adeg(&s.anchor_labels);
            ensure!(adeg == 0, "surface {case}: nonzero value with annular degree {adeg}: {s:?}");
        }
    }
    Ok(format!("500 surfaces ({nonzero} nonzero) homogeneous, integral, and zero or of annular degree 0"))
}

/// Runs every suite whose name starts with `prefix`, 100 cases each.
pub fn suites(prefix: &str) -> Check {
    let mut parts = Vec::new();
    for suite in Suite::ALL.into_iter().filter(|s| s.name().starts_with(prefix)) {
        let r = run_suite_parallel(suite, SEED, 100);
        if let Some(f) = r.failures.first() {
            return Err(format!("{}: case {} ({}) failed: {}", suite.name(), f.index, f.relation, f.detail));
        }
        parts.push(format!("{} {}/{}", suite.name(), r.nontrivial, r.count));
    }
    ensure!(!parts.is_empty(), "no suites named {prefix}*");
    Ok(format!("nontrivial/total: {}", parts.join(", ")))
}

pub fn skein() -> Check {
    suites("sl2-")
}
