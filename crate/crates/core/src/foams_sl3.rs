//! SL(3) anchored foams whose singular locus is a disjoint union of seam
//! circles, with the unoriented (F₂) and oriented (Z) evaluations.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::{sum_factored, FactoredTerm, Poly, RingSpec};
use crate::surfaces_sl2::CircleConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory3 {
    Unoriented,
    Oriented,
}

impl Theory3 {
    pub fn ring(self) -> RingSpec {
        match self {
            Theory3::Unoriented => RingSpec::X_MOD2,
            Theory3::Oriented => RingSpec::X_INT,
        }
    }
}

/// A facet: `slots` boundary circles attached to seams, plus optional
/// boundary circles on the bottom/top configurations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Facet {
    pub genus: u32,
    pub slots: u32,
    pub dots: u32,
    pub anchors: Vec<usize>,
    pub bottom: Vec<usize>,
    pub top: Vec<usize>,
}

impl Facet {
    pub fn new(genus: u32, slots: u32, dots: u32, anchors: Vec<usize>) -> Facet {
        Facet { genus, slots, dots, anchors, ..Facet::default() }
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.slots as i64 - (self.bottom.len() + self.top.len()) as i64
    }
}

/// Three (facet, slot) sides meeting along a circle. For oriented foams the
/// order is cyclic: rotations are equivalent, reflections are not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Seam {
    pub sides: [(usize, usize); 3],
}

impl Seam {
    pub fn new(sides: [(usize, usize); 3]) -> Seam {
        Seam { sides }
    }

    pub fn facets(&self) -> [usize; 3] {
        [self.sides[0].0, self.sides[1].0, self.sides[2].0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Foam3 {
    pub theory: Theory3,
    pub facets: Vec<Facet>,
    pub seams: Vec<Seam>,
    /// Labels in {1, 2, 3}, bottom to top.
    pub anchor_labels: Vec<u8>,
    /// Intersection signs with the upward line; empty when unknown.
    pub anchor_signs: Vec<i8>,
    pub bottom: CircleConfig,
    pub top: CircleConfig,
}

/// Color in {1, 2, 3} per facet.
pub type Coloring3 = Vec<u8>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnnularDegree {
    /// Coordinates over Z/2 in the basis `u₁ = (1,0)`, `u₂ = (0,1)`, `u₃ = u₁ + u₂`.
    Klein([u8; 2]),
    /// Coordinates in the basis `w₁, w₂` with `w₃ = -w₁ - w₂`.
    Lattice([i64; 2]),
}

impl AnnularDegree {
    pub fn is_zero(&self) -> bool {
        matches!(self, AnnularDegree::Klein([0, 0]) | AnnularDegree::Lattice([0, 0]))
    }
}

fn pair_color_index(i: u8, j: u8) -> usize {
    RingSpec::X_INT.pair_index(i as usize - 1, j as usize - 1)
}

impl Foam3 {
    pub fn closed(theory: Theory3, facets: Vec<Facet>, seams: Vec<Seam>, anchor_labels: Vec<u8>) -> Foam3 {
        Foam3 {
            theory,
            facets,
            seams,
            anchor_labels,
            anchor_signs: Vec::new(),
            bottom: CircleConfig::empty(),
            top: CircleConfig::empty(),
        }
    }

    /// Sphere with `d` dots and anchors labeled `labels`.
    pub fn sphere(theory: Theory3, d: u32, labels: &[u8]) -> Foam3 {
        Foam3::closed(theory, vec![Facet::new(0, 0, d, (0..labels.len()).collect())], vec![], labels.to_vec())
    }

    /// Two hemispheres and an equatorial disk on one seam. `dots` and
    /// `labels` list top, middle, bottom; `labels` may be empty. The seam is
    /// stored as (top, bottom, middle).
    pub fn theta(theory: Theory3, dots: [u32; 3], labels: &[u8]) -> Foam3 {
        let anchored = !labels.is_empty();
        assert!(!anchored || labels.len() == 3, "theta takes zero or three labels");
        // Anchor order along the line is bottom to top.
        let slot_of = |facet: usize| if anchored { vec![2 - facet] } else { vec![] };
        let facets = (0..3).map(|f| Facet::new(0, 1, dots[f], slot_of(f))).collect();
        let mut line = labels.to_vec();
        line.reverse();
        Foam3::closed(theory, facets, vec![Seam::new([(0, 0), (2, 0), (1, 0)])], line)
    }

    pub fn is_closed(&self) -> bool {
        self.bottom.is_empty() && self.top.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(l) = self.anchor_labels.iter().find(|&&l| !(1..=3).contains(&l)) {
            return Err(Error::InvariantViolation(format!("anchor label {l} is not in 1..=3")));
        }
        if !self.anchor_signs.is_empty() {
            if self.anchor_signs.len() != self.anchor_labels.len() {
                return Err(Error::InvariantViolation("anchor_signs length differs from anchor_labels".into()));
            }
            if self.anchor_signs.iter().any(|&s| s != 1 && s != -1) {
                return Err(Error::InvariantViolation("anchor sign must be +1 or -1".into()));
            }
        }
        let mut owned = vec![false; self.anchor_labels.len()];
        for f in &self.facets {
            for &a in &f.anchors {
                if a >= owned.len() || owned[a] {
                    return Err(Error::InvariantViolation(format!("anchor slot {a} missing or reused")));
                }
                owned[a] = true;
            }
        }
        if owned.iter().any(|o| !o) {
            return Err(Error::InvariantViolation("anchor slot owned by no facet".into()));
        }
        let mut used: Vec<Vec<bool>> = self.facets.iter().map(|f| vec![false; f.slots as usize]).collect();
        for (k, seam) in self.seams.iter().enumerate() {
            for &(f, s) in &seam.sides {
                let slot = used.get_mut(f).and_then(|v| v.get_mut(s)).ok_or_else(|| {
                    Error::InvariantViolation(format!("seam {k} refers to missing side ({f}, {s})"))
                })?;
                if *slot {
                    return Err(Error::InvariantViolation(format!("facet slot ({f}, {s}) used twice")));
                }
                *slot = true;
            }
        }
        if used.iter().flatten().any(|u| !u) {
            return Err(Error::InvariantViolation("facet boundary slot attached to no seam".into()));
        }
        for (side, config, pick) in [
            ("bottom", &self.bottom, (|f: &Facet| f.bottom.clone()) as fn(&Facet) -> Vec<usize>),
            ("top", &self.top, |f: &Facet| f.top.clone()),
        ] {
            let mut seen = vec![false; config.len()];
            for f in &self.facets {
                for c in pick(f) {
                    if c >= seen.len() || seen[c] {
                        return Err(Error::BoundaryMismatch(format!("{side} circle {c} missing or reused")));
                    }
                    seen[c] = true;
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::BoundaryMismatch(format!("{side} circle bounds no facet")));
            }
        }
        Ok(())
    }

    pub fn euler(&self) -> i64 {
        self.facets.iter().map(Facet::euler).sum()
    }

    pub fn dots(&self) -> u32 {
        self.facets.iter().map(|f| f.dots).sum()
    }

    /// Number of anchors labeled `i`.
    pub fn an(&self, i: u8) -> i64 {
        self.anchor_labels.iter().filter(|&&l| l == i).count() as i64
    }

    fn forced_colors(&self) -> Option<Vec<Option<u8>>> {
        let mut forced = vec![None; self.facets.len()];
        for (fi, f) in self.facets.iter().enumerate() {
            for &a in &f.anchors {
                let l = self.anchor_labels[a];
                match forced[fi] {
                    None => forced[fi] = Some(l),
                    Some(x) if x != l => return None,
                    _ => {}
                }
            }
        }
        Some(forced)
    }

    /// Admissible colorings in lexicographic order (facet 0 first, colors
    /// ascending).
    pub fn admissible_colorings(&self) -> Vec<Coloring3> {
        let Some(forced) = self.forced_colors() else { return Vec::new() };
        let n = self.facets.len();
        // Seams become checkable once their largest facet is colored.
        let mut checks: Vec<Vec<[usize; 3]>> = vec![Vec::new(); n];
        for seam in &self.seams {
            let fs = seam.facets();
            checks[*fs.iter().max().expect("three sides")].push(fs);
        }
        let mut out = Vec::new();
        let mut current = vec![0u8; n];
        fn go(
            k: usize,
            current: &mut Vec<u8>,
            forced: &[Option<u8>],
            checks: &[Vec<[usize; 3]>],
            out: &mut Vec<Coloring3>,
        ) {
            if k == current.len() {
                out.push(current.clone());
                return;
            }
            for color in 1..=3u8 {
                if forced[k].is_some_and(|f| f != color) {
                    continue;
                }
                current[k] = color;
                let ok = checks[k].iter().all(|fs| {
                    let (a, b, c) = (current[fs[0]], current[fs[1]], current[fs[2]]);
                    a != b && b != c && a != c
                });
                if ok {
                    go(k + 1, current, forced, checks, out);
                }
            }
            current[k] = 0;
        }
        go(0, &mut current, &forced, &checks, &mut out);
        out
    }

    /// `χ(F_ij(c))` for each pair in [`RingSpec::pairs`] order.
    fn bicolored_euler(&self, c: &[u8]) -> [i64; 3] {
        let mut per_color = [0i64; 3];
        for (f, &col) in self.facets.iter().zip(c) {
            per_color[col as usize - 1] += f.euler();
        }
        [per_color[0] + per_color[1], per_color[0] + per_color[2], per_color[1] + per_color[2]]
    }

    fn positive_wrt(&self, seam: &Seam, c: &[u8], i: u8, j: u8) -> bool {
        let cols = seam.facets().map(|f| c[f]);
        let pos = cols.iter().position(|&x| x == i).expect("admissible seam has every color");
        let k = 6 - i - j;
        cols[(pos + 1) % 3] == k && cols[(pos + 2) % 3] == j
    }

    /// `s(F, c)` mod 2, computed two ways and cross-checked.
    pub fn sign_exponent(&self, c: &[u8]) -> Result<u8> {
        let mut capped = [0i64; 3];
        let mut open = [0i64; 3];
        for (f, &col) in self.facets.iter().zip(c) {
            capped[col as usize - 1] += f.euler() + f.slots as i64;
            open[col as usize - 1] += f.euler();
        }
        let mut theta_plus_ij = 0i64;
        let mut theta_minus = 0i64;
        for seam in &self.seams {
            for (i, j) in [(1, 2), (1, 3), (2, 3)] {
                if self.positive_wrt(seam, c, i, j) {
                    theta_plus_ij += 1;
                }
            }
            if !self.positive_wrt(seam, c, 1, 3) {
                theta_minus += 1;
            }
        }
        let weighted_capped: i64 = (0..3).map(|i| (i as i64 + 1) * capped[i]).sum();
        let weighted_open: i64 = (0..3).map(|i| (i as i64 + 1) * open[i]).sum();
        if weighted_capped % 2 != 0 || weighted_open % 2 != 0 {
            return Err(Error::InternalInconsistency("odd Euler characteristic in sign".into()));
        }
        let s1 = (weighted_capped / 2 + theta_plus_ij).rem_euclid(2);
        let s2 = (weighted_open / 2 + theta_minus).rem_euclid(2);
        if s1 != s2 {
            return Err(Error::InternalInconsistency("sign formulas disagree".into()));
        }
        Ok(s1 as u8)
    }

    /// Factored contribution of one admissible coloring.
    pub fn coloring_term(&self, c: &[u8]) -> Result<FactoredTerm> {
        let chi = self.bicolored_euler(c);
        let mut exps = vec![0i64; 3];
        for (i, j) in [(1u8, 2u8), (1, 3), (2, 3)] {
            let p = pair_color_index(i, j);
            let top = self.an(i) + self.an(j) - chi[p];
            if top % 2 != 0 {
                return Err(Error::ParityViolation { i, j });
            }
            exps[p] = top / 2;
        }
        let mut dots = [0u32; 3];
        for (f, &col) in self.facets.iter().zip(c) {
            dots[col as usize - 1] += f.dots;
        }
        let sign = match self.theory {
            Theory3::Unoriented => 1,
            Theory3::Oriented => {
                if self.sign_exponent(c)? == 1 {
                    -1
                } else {
                    1
                }
            }
        };
        Ok(FactoredTerm::new(sign, dots, exps))
    }

    pub fn coloring_terms(&self) -> Result<Vec<FactoredTerm>> {
        self.admissible_colorings().iter().map(|c| self.coloring_term(c)).collect()
    }

    /// Evaluation over F₂ (unoriented) or Z (oriented). Closed, unanchored
    /// oriented foams are also checked to evaluate symmetrically.
    pub fn evaluate(&self) -> Result<Poly> {
        if !self.is_closed() {
            return Err(Error::BoundaryMismatch("only closed foams evaluate".into()));
        }
        let ring = self.theory.ring();
        let value = sum_factored(&self.coloring_terms()?, ring)?;
        if self.theory == Theory3::Oriented && self.anchor_labels.is_empty() {
            for sigma in [[1, 0, 2], [0, 2, 1]] {
                if value.permute_vars(&sigma) != value {
                    return Err(Error::InternalInconsistency("unanchored evaluation is not symmetric".into()));
                }
            }
        }
        Ok(value)
    }

    /// Connected components of `F_ij(c)` as sorted facet lists, ordered by
    /// smallest facet.
    pub fn bicolored_components(&self, c: &[u8], i: u8, j: u8) -> Vec<Vec<usize>> {
        let n = self.facets.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for seam in &self.seams {
            let fs: Vec<usize> = seam.facets().into_iter().filter(|&f| c[f] == i || c[f] == j).collect();
            for w in fs.windows(2) {
                let (a, b) = (root(&mut parent, w[0]), root(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        for f in (0..n).filter(|&f| c[f] == i || c[f] == j) {
            let r = root(&mut parent, f);
            match roots.iter().position(|&x| x == r) {
                Some(p) => comps[p].push(f),
                None => {
                    roots.push(r);
                    comps.push(vec![f]);
                }
            }
        }
        comps
    }

    /// Swaps colors `i, j` on the `component`-th component of `F_ij(c)`.
    /// For oriented foams the sign change is checked against
    /// `χ(Σ)/2` for the pairs (1,2), (2,3) and against the number of seams on
    /// `Σ` for (1,3).
    pub fn kempe_move(&self, c: &[u8], i: u8, j: u8, component: usize) -> Result<Coloring3> {
        let comps = self.bicolored_components(c, i, j);
        let Some(sigma) = comps.get(component) else { return Ok(c.to_vec()) };
        if sigma.iter().any(|&f| !self.facets[f].anchors.is_empty()) {
            return Err(Error::AnchoredComponent);
        }
        let mut out = c.to_vec();
        for &f in sigma {
            out[f] = if c[f] == i { j } else { i };
        }
        if self.theory == Theory3::Oriented {
            let before = self.sign_exponent(c)? as i64;
            let after = self.sign_exponent(&out)? as i64;
            let chi: i64 = sigma.iter().map(|&f| self.facets[f].euler()).sum();
            let seams_on = self
                .seams
                .iter()
                .filter(|s| s.facets().iter().filter(|f| sigma.contains(f)).count() == 2)
                .count() as i64;
            let (lo, hi) = (i.min(j), i.max(j));
            let expected = if (lo, hi) == (1, 3) { seams_on } else { chi / 2 };
            if (before - after - expected).rem_euclid(2) != 0 {
                return Err(Error::InternalInconsistency("Kempe sign lemma failed".into()));
            }
        }
        Ok(out)
    }

    pub fn annular_degree(&self) -> AnnularDegree {
        match self.theory {
            Theory3::Unoriented => {
                let mut u = [0u8; 2];
                for &l in &self.anchor_labels {
                    let v = match l {
                        1 => [1, 0],
                        2 => [0, 1],
                        _ => [1, 1],
                    };
                    u = [u[0] ^ v[0], u[1] ^ v[1]];
                }
                AnnularDegree::Klein(u)
            }
            Theory3::Oriented => {
                let mut w = [0i64; 2];
                for (k, &l) in self.anchor_labels.iter().enumerate() {
                    let s = self.anchor_signs.get(k).copied().unwrap_or(1) as i64;
                    let v = match l {
                        1 => [1, 0],
                        2 => [0, 1],
                        _ => [-1, -1],
                    };
                    w = [w[0] + s * v[0], w[1] + s * v[1]];
                }
                AnnularDegree::Lattice(w)
            }
        }
    }

    /// Relabels anchors by `sigma` (`sigma[i-1] = σ(i)`), returning the sign
    /// exponent ε with `σ⟨F⟩ = (-1)^ε ⟨σF⟩`.
    pub fn permute_labels(&self, sigma: [u8; 3]) -> (Foam3, u8) {
        let mut eps = 0i64;
        for (i, j) in [(1u8, 2u8), (1, 3), (2, 3)] {
            if sigma[i as usize - 1] > sigma[j as usize - 1] {
                eps += (self.an(i) + self.an(j)) / 2;
            }
        }
        let mut out = self.clone();
        out.anchor_labels = self.anchor_labels.iter().map(|&l| sigma[l as usize - 1]).collect();
        (out, eps.rem_euclid(2) as u8)
    }

    /// Disjoint union; `other` sits above `self` on the line.
    pub fn disjoint_union(&self, other: &Foam3) -> Foam3 {
        assert_eq!(self.theory, other.theory, "mixed foam theories");
        let nf = self.facets.len();
        let na = self.anchor_labels.len();
        let (nb, nt) = (self.bottom.len(), self.top.len());
        let mut facets = self.facets.clone();
        facets.extend(other.facets.iter().map(|f| Facet {
            anchors: f.anchors.iter().map(|a| a + na).collect(),
            bottom: f.bottom.iter().map(|b| b + nb).collect(),
            top: f.top.iter().map(|t| t + nt).collect(),
            ..f.clone()
        }));
        let mut seams = self.seams.clone();
        seams.extend(other.seams.iter().map(|s| Seam { sides: s.sides.map(|(f, k)| (f + nf, k)) }));
        let mut anchor_labels = self.anchor_labels.clone();
        anchor_labels.extend_from_slice(&other.anchor_labels);
        let anchor_signs = if self.anchor_signs.is_empty() && other.anchor_signs.is_empty() {
            Vec::new()
        } else {
            let pad = |f: &Foam3| {
                if f.anchor_signs.is_empty() {
                    vec![1; f.anchor_labels.len()]
                } else {
                    f.anchor_signs.clone()
                }
            };
            let mut s = pad(self);
            s.extend(pad(other));
            s
        };
        let cat = |a: &CircleConfig, b: &CircleConfig| {
            let mut circles = a.circles.clone();
            circles.extend_from_slice(&b.circles);
            CircleConfig { circles }
        };
        Foam3 {
            theory: self.theory,
            facets,
            seams,
            anchor_labels,
            anchor_signs,
            bottom: cat(&self.bottom, &other.bottom),
            top: cat(&self.top, &other.top),
        }
    }

    /// Mirror image: anchor order reversed, signs flipped, seams reversed
    /// (a reflection reverses every cyclic order), bottom and top swapped.
    pub fn reflect(&self) -> Foam3 {
        let m = self.anchor_labels.len();
        Foam3 {
            theory: self.theory,
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    anchors: f.anchors.iter().map(|&a| m - 1 - a).collect(),
                    bottom: f.top.clone(),
                    top: f.bottom.clone(),
                    ..f.clone()
                })
                .collect(),
            seams: self.seams.iter().map(|s| Seam { sides: [s.sides[0], s.sides[2], s.sides[1]] }).collect(),
            anchor_labels: self.anchor_labels.iter().rev().copied().collect(),
            anchor_signs: self.anchor_signs.iter().rev().map(|s| -s).collect(),
            bottom: self.top.clone(),
            top: self.bottom.clone(),
        }
    }

    /// Polynomial degree of a nonzero evaluation.
    pub fn expected_degree(&self) -> i64 {
        2 * (self.dots() as i64 + self.anchor_labels.len() as i64 - self.euler())
    }
}

/// Glue `top` above `bottom` along `bottom.top == top.bottom`. Facets glued
/// along circles merge; seams are carried over.
pub fn compose(bottom: &Foam3, top: &Foam3) -> Result<Foam3> {
    if bottom.theory != top.theory {
        return Err(Error::BoundaryMismatch("mixed foam theories".into()));
    }
    if bottom.top != top.bottom {
        return Err(Error::BoundaryMismatch("middle circle configurations differ".into()));
    }
    let nb = bottom.facets.len();
    let n = nb + top.facets.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut lower = vec![usize::MAX; bottom.top.len()];
    for (i, f) in bottom.facets.iter().enumerate() {
        for &c in &f.top {
            lower[c] = i;
        }
    }
    for (j, f) in top.facets.iter().enumerate() {
        for &c in &f.bottom {
            let (a, b) = (root(&mut parent, lower[c]), root(&mut parent, nb + j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let na = bottom.anchor_labels.len();
    let mut index = vec![usize::MAX; n];
    let mut merged: Vec<(Facet, i64)> = Vec::new();
    // Seam slots are renumbered per merged facet.
    let mut slot_map: Vec<Vec<(usize, usize)>> = Vec::with_capacity(n);
    for idx in 0..n {
        let r = root(&mut parent, idx);
        if index[r] == usize::MAX {
            index[r] = merged.len();
            merged.push((Facet::default(), 0));
        }
        let target = index[r];
        let (acc, chi) = &mut merged[target];
        let part = if idx < nb { &bottom.facets[idx] } else { &top.facets[idx - nb] };
        *chi += part.euler();
        acc.dots += part.dots;
        let base = acc.slots as usize;
        slot_map.push((0..part.slots as usize).map(|s| (target, base + s)).collect());
        acc.slots += part.slots;
        if idx < nb {
            acc.anchors.extend(part.anchors.iter().copied());
            acc.bottom.extend(part.bottom.iter().copied());
        } else {
            acc.anchors.extend(part.anchors.iter().map(|a| a + na));
            acc.top.extend(part.top.iter().copied());
        }
    }
    let mut facets = Vec::with_capacity(merged.len());
    for (mut f, chi) in merged {
        let g2 = 2 - f.slots as i64 - (f.bottom.len() + f.top.len()) as i64 - chi;
        if g2 < 0 || g2 % 2 != 0 {
            return Err(Error::InternalInconsistency(format!("glued facet has Euler characteristic {chi}")));
        }
        f.genus = (g2 / 2) as u32;
        facets.push(f);
    }
    let mut seams: Vec<Seam> = bottom.seams.iter().map(|s| Seam { sides: s.sides.map(|(f, k)| slot_map[f][k]) }).collect();
    seams.extend(top.seams.iter().map(|s| Seam { sides: s.sides.map(|(f, k)| slot_map[nb + f][k]) }));
    let mut anchor_labels = bottom.anchor_labels.clone();
    anchor_labels.extend_from_slice(&top.anchor_labels);
    let anchor_signs = if bottom.anchor_signs.is_empty() && top.anchor_signs.is_empty() {
        Vec::new()
    } else {
        let mut s = if bottom.anchor_signs.is_empty() { vec![1; na] } else { bottom.anchor_signs.clone() };
        if top.anchor_signs.is_empty() {
            s.extend(vec![1; top.anchor_labels.len()]);
        } else {
            s.extend_from_slice(&top.anchor_signs);
        }
        s
    };
    Ok(Foam3 {
        theory: bottom.theory,
        facets,
        seams,
        anchor_labels,
        anchor_signs,
        bottom: bottom.bottom.clone(),
        top: top.top.clone(),
    })
}

pub fn admissible_colorings(f: &Foam3) -> Vec<Coloring3> {
    f.admissible_colorings()
}

pub fn evaluate_unoriented(f: &Foam3) -> Result<Poly> {
    if f.theory != Theory3::Unoriented {
        return Err(Error::InvariantViolation("expected an unoriented foam".into()));
    }
    f.evaluate()
}

pub fn evaluate_oriented(f: &Foam3) -> Result<Poly> {
    if f.theory != Theory3::Oriented {
        return Err(Error::InvariantViolation("expected an oriented foam".into()));
    }
    f.evaluate()
}

pub fn sign_exponent(f: &Foam3, c: &[u8]) -> Result<u8> {
    f.sign_exponent(c)
}

/// `⟨reflect(a) ∘ b⟩` for foams out of the empty configuration.
pub fn pairing(a: &Foam3, b: &Foam3) -> Result<Poly> {
    compose(b, &a.reflect())?.evaluate()
}
