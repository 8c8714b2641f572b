use std::collections::BTreeMap;

use foam_core::foams_sl3::{Facet, Foam3, Seam, Theory3};
use foam_core::{Poly, RingSpec};
use rand::Rng;

use super::gen;
use super::oracle::{bialternant, complete_h, klein_sum, mono, sl3u_genus_family, PERMS};
use super::sl2::{suites, SEED};
use super::{ok, Check};

const U: Theory3 = Theory3::Unoriented;
const O: Theory3 = Theory3::Oriented;

fn euler(f: &Foam3) -> i64 {
    f.facets.iter().map(|x| 2 - 2 * x.genus as i64 - x.slots as i64).sum()
}

/// Degree `2(d + m - χ)` of a nonzero evaluation.
fn expected_degree(f: &Foam3) -> i64 {
    let dots: i64 = f.facets.iter().map(|x| x.dots as i64).sum();
    2 * (dots + f.anchor_labels.len() as i64 - euler(f))
}

fn count(f: &Foam3, l: u8) -> i64 {
    f.anchor_labels.iter().filter(|&&x| x == l).count() as i64
}

fn lattice_sum(f: &Foam3) -> [i64; 2] {
    let mut w = [0i64; 2];
    for (k, &l) in f.anchor_labels.iter().enumerate() {
        let s = f.anchor_signs.get(k).copied().unwrap_or(1) as i64;
        let v = [[1, 0], [0, 1], [-1, -1]][l as usize - 1];
        w = [w[0] + s * v[0], w[1] + s * v[1]];
    }
    w
}

/// Degree-zero check for foams that admit a coloring.
fn degree_zero(f: &Foam3) -> Result<bool, String> {
    if f.admissible_colorings().is_empty() {
        return Ok(false);
    }
    let zero = match f.theory {
        Theory3::Unoriented => klein_sum(&f.anchor_labels) == [0, 0],
        Theory3::Oriented => lattice_sum(f) == [0, 0],
    };
    ensure!(zero, "colorable foam of nonzero annular degree: {f:?}");
    ensure!(f.annular_degree().is_zero(), "annular_degree disagrees with the direct sum: {f:?}");
    Ok(true)
}

fn check_value(f: &Foam3, v: &Poly, what: &str) -> Result<(), String> {
    if !v.is_zero() {
        let deg = v.homogeneous_degree().map(i64::from);
        let expect = expected_degree(f);
        ensure!(deg == Some(expect), "{what}: degree {deg:?}, expected {expect}: {f:?}");
    }
    Ok(())
}

pub fn unoriented() -> Check {
    let r = RingSpec::X_MOD2;
    let mut golden = 0;
    for i in 0..3usize {
        let l = i as u8 + 1;
        for d in 0..=4 {
            let v = ok(Foam3::sphere(U, d, &[l, l]).evaluate(), "sphere")?;
            ensure!(v == r.var(i).pow(d), "sphere with {d} dots and anchors ({l},{l}): got {v}");
            golden += 1;
        }
    }
    for (p, _) in PERMS {
        let labels = p.map(|k| k as u8 + 1);
        for n in 0..27u32 {
            let d = [n % 3, n / 3 % 3, n / 9];
            let mut e = [0u32; 3];
            for k in 0..3 {
                e[p[k]] = d[k];
            }
            let v = ok(Foam3::theta(U, d, &labels).evaluate(), "theta")?;
            ensure!(v == mono(r, e, 1), "theta with dots {d:?} and labels {labels:?}: got {v}");
            golden += 1;
        }
    }
    for g in 0..=2u32 {
        for n in 1..=2u32 {
            for d in 0..=2u32 {
                for i in 0..3usize {
                    let m = 2 * n as usize;
                    let f = Foam3::closed(U, vec![Facet::new(g, 0, d, (0..m).collect())], vec![], vec![i as u8 + 1; m]);
                    let v = ok(f.evaluate(), "genus family")?;
                    let expect = sl3u_genus_family(g, n, d, i);
                    ensure!(v == expect, "genus {g}, {m} anchors labeled {}, {d} dots: got {v}, expected {expect}", i + 1);
                    golden += 1;
                }
            }
        }
    }
    let (mut nonzero, mut not_pre) = (0, 0);
    for case in 0..300u64 {
        let f = gen::foam(&mut gen::rng(SEED, 1000 + case), U, 6, false);
        ok(f.validate(), format!("foam {case}"))?;
        let v = ok(f.evaluate(), format!("foam {case} {f:?}"))?;
        check_value(&f, &v, &format!("foam {case}"))?;
        degree_zero(&f)?;
        let pre_admissible = klein_sum(&f.anchor_labels) == [0, 0];
        ensure!(v.is_zero() || pre_admissible, "foam {case}: nonzero value on a non-pre-admissible labeling: {f:?}");
        nonzero += usize::from(!v.is_zero());
        not_pre += usize::from(!pre_admissible);
    }
    let suites = suites("sl3u-")?;
    Ok(format!(
        "{golden} golden values; 300 random foams ({nonzero} nonzero, {not_pre} not pre-admissible) clean; {suites}"
    ))
}

pub fn oriented() -> Check {
    let r = RingSpec::X_INT;
    let mut golden = 0;
    for d in 0..=6 {
        let v = ok(Foam3::sphere(O, d, &[]).evaluate(), "sphere")?;
        let expect = -complete_h(r, d as i64 - 2);
        ensure!(v == expect, "sphere with {d} dots: got {v}, expected {expect}");
        golden += 1;
    }
    for total in 0..=5u32 {
        for d1 in 0..=total {
            for d2 in 0..=total - d1 {
                let d = [d1, d2, total - d1 - d2];
                let v = ok(Foam3::theta(O, d, &[]).evaluate(), "theta")?;
                let expect = bialternant(d);
                ensure!(v == expect, "theta with dots {d:?}: got {v}, expected {expect}");
                golden += 1;
            }
        }
    }
    for i in 0..3usize {
        let l = i as u8 + 1;
        for d in 0..=4 {
            let v = ok(Foam3::sphere(O, d, &[l, l]).evaluate(), "anchored sphere")?;
            let sign = if l.is_multiple_of(2) { 1 } else { -1 };
            ensure!(v == r.var(i).pow(d).scale(sign), "sphere with {d} dots and anchors ({l},{l}): got {v}");
            golden += 1;
        }
    }
    let equivariant = equivariance()?;
    let kempe = kempe()?;
    let (mut colorable, mut nonzero) = (0, 0);
    for case in 0..300u64 {
        let f = gen::foam(&mut gen::rng(SEED, 3000 + case), O, 6, false);
        ok(f.validate(), format!("foam {case}"))?;
        for g in [f.clone(), gen::unanchored(&f)] {
            let v = ok(g.evaluate(), format!("foam {case} {g:?}"))?;
            check_value(&g, &v, &format!("foam {case}"))?;
            if g.anchor_labels.is_empty() {
                for p in [[1usize, 0, 2], [0, 2, 1]] {
                    ensure!(v.permute_vars(&p) == v, "foam {case}: unanchored value {v} is not symmetric");
                }
            }
            nonzero += usize::from(!v.is_zero());
        }
        colorable += usize::from(degree_zero(&f)?);
    }
    let suites = suites("sl3o-")?;
    Ok(format!(
        "{golden} golden values; {equivariant}; {kempe}; 300 random foams and their unanchored versions \
         integral ({nonzero} nonzero), {colorable} colorable of degree 0; {suites}"
    ))
}

/// `σ⟨F⟩ = (-1)^ε ⟨σF⟩` on 200 anchored foams, all six permutations.
fn equivariance() -> Check {
    let mut odd = 0;
    for case in 0..200u64 {
        let f = gen::foam(&mut gen::rng(SEED, 2000 + case), O, 6, true);
        ensure!(!f.anchor_labels.is_empty(), "foam {case} is unanchored");
        let v = ok(f.evaluate(), format!("foam {case}"))?;
        for (p, _) in PERMS {
            let sigma = p.map(|k| k as u8 + 1);
            let mut eps = 0;
            for (i, j) in [(1u8, 2u8), (1, 3), (2, 3)] {
                if sigma[i as usize - 1] > sigma[j as usize - 1] {
                    eps += (count(&f, i) + count(&f, j)) / 2;
                }
            }
            let eps = (eps % 2) as u8;
            let (g, core_eps) = f.permute_labels(sigma);
            ensure!(core_eps == eps, "foam {case}, σ={sigma:?}: ε={core_eps}, expected {eps}");
            let w = ok(g.evaluate(), format!("foam {case} relabeled"))?;
            let expect = if eps == 1 { -w } else { w };
            ensure!(v.permute_vars(&p) == expect, "foam {case}, σ={sigma:?}: equivariance fails");
            odd += usize::from(eps == 1 && !v.is_zero());
        }
    }
    Ok(format!("S₃-equivariance on 200 anchored foams ({odd} nonzero cases with ε=1)"))
}

/// Sign change of a Kempe move along Σ: `χ(Σ)/2` for the color pairs
/// {1,2} and {2,3}, the number of seams on Σ for {1,3}.
fn kempe() -> Check {
    let mut done = 0;
    let mut per_pair: BTreeMap<(u8, u8), usize> = BTreeMap::new();
    let mut flipped = 0;
    let mut attempt = 0u64;
    while done < 100 {
        ensure!(attempt < 20_000, "only {done} Kempe moves found");
        let mut rng = gen::rng(SEED, 4000 + attempt);
        attempt += 1;
        let anchored = rng.gen_ratio(1, 4);
        let f = gen::foam(&mut rng, O, 6, anchored);
        let cols = f.admissible_colorings();
        if cols.is_empty() {
            continue;
        }
        let c = &cols[rng.gen_range(0..cols.len())];
        let (i, j) = [(1u8, 2u8), (1, 3), (2, 3)][rng.gen_range(0..3)];
        let comps = f.bicolored_components(c, i, j);
        if comps.is_empty() {
            continue;
        }
        let k = rng.gen_range(0..comps.len());
        let sigma = &comps[k];
        if sigma.iter().any(|&x| !f.facets[x].anchors.is_empty()) {
            continue;
        }
        let moved = ok(f.kempe_move(c, i, j, k), "Kempe move")?;
        ensure!(cols.contains(&moved), "Kempe move left the admissible colorings: {f:?}");
        let before = ok(f.sign_exponent(c), "sign")? as i64;
        let after = ok(f.sign_exponent(&moved), "sign")? as i64;
        let chi: i64 = sigma.iter().map(|&x| 2 - 2 * f.facets[x].genus as i64 - f.facets[x].slots as i64).sum();
        let seams_on = f.seams.iter().filter(|s: &&Seam| s.facets().iter().any(|x| sigma.contains(x))).count() as i64;
        let expect = if (i, j) == (1, 3) { seams_on } else { chi / 2 };
        ensure!((after - before - expect) % 2 == 0, "Kempe sign on colors {i},{j}: {before} → {after}, χ={chi}: {f:?}");
        flipped += usize::from(before != after);
        *per_pair.entry((i, j)).or_default() += 1;
        done += 1;
    }
    Ok(format!("Kempe sign lemma on {done} moves {per_pair:?} ({flipped} change sign)"))
}

fn build(theory: Theory3, facets: Vec<(u32, u32)>, triples: &[[usize; 3]]) -> Foam3 {
    let mut fs: Vec<Facet> = facets.into_iter().map(|(g, d)| Facet::new(g, 0, d, vec![])).collect();
    let mut seams = Vec::new();
    for t in triples {
        let mut sides = [(0, 0); 3];
        for (k, &f) in t.iter().enumerate() {
            sides[k] = (f, fs[f].slots as usize);
            fs[f].slots += 1;
        }
        seams.push(Seam::new(sides));
    }
    Foam3::closed(theory, fs, seams, vec![])
}

/// Closed foams with ten facets used for timing: ten dotted spheres
/// (3¹⁰ colorings), a chain of seams, and the chain pierced by the line.
pub fn ten_facet_foams() -> Vec<Foam3> {
    let mut out = Vec::new();
    for theory in [U, O] {
        out.push(build(theory, (0..10).map(|k| (k % 2, 2 + k % 3)).collect(), &[]));
        let chain = [[0, 1, 2], [2, 3, 4], [4, 5, 6], [6, 7, 8], [8, 9, 0], [1, 3, 5], [5, 7, 9]];
        let base = build(theory, (0..10).map(|k| (k % 3 / 2, k % 4)).collect(), &chain);
        let mut pierced = base.clone();
        for (f, l) in [(0usize, 1u8), (1, 2), (2, 3)] {
            pierced.facets[f].anchors.push(pierced.anchor_labels.len());
            pierced.anchor_labels.push(l);
        }
        for l in [2u8, 2] {
            pierced.facets[5].anchors.push(pierced.anchor_labels.len());
            pierced.anchor_labels.push(l);
        }
        if theory == O {
            pierced.anchor_signs = vec![1, 1, 1, 1, -1];
        }
        out.push(base);
        out.push(pierced);
    }
    out
}

