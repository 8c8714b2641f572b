//! SL(2) anchored surfaces and anchored cobordisms between circle
//! configurations in the punctured plane.
//!
//! Surfaces are abstract: a component is its genus, dots, anchor slots and
//! boundary circles. The anchor line is ordered bottom to top.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::{sum_factored, FactoredTerm, Poly, RingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CircleKind {
    Contractible,
    Essential,
}

/// A circle in the punctured plane. For essential circles `depth` is the
/// radial index, outermost = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circle {
    pub kind: CircleKind,
    pub depth: u32,
}

impl Circle {
    pub fn contractible() -> Circle {
        Circle { kind: CircleKind::Contractible, depth: 0 }
    }

    pub fn essential(radial: u32) -> Circle {
        Circle { kind: CircleKind::Essential, depth: radial }
    }

    pub fn is_essential(&self) -> bool {
        self.kind == CircleKind::Essential
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CircleConfig {
    pub circles: Vec<Circle>,
}

impl CircleConfig {
    pub fn empty() -> CircleConfig {
        CircleConfig::default()
    }

    pub fn new(circles: Vec<Circle>) -> CircleConfig {
        CircleConfig { circles }
    }

    /// `n` contractible circles followed by `m` essential ones, outermost first.
    pub fn standard(n: usize, m: usize) -> CircleConfig {
        let mut circles = vec![Circle::contractible(); n];
        circles.extend((0..m).map(|r| Circle::essential(r as u32)));
        CircleConfig { circles }
    }

    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn essential_count(&self) -> usize {
        self.circles.iter().filter(|c| c.is_essential()).count()
    }

    pub fn contractible_count(&self) -> usize {
        self.len() - self.essential_count()
    }

    pub fn validate(&self) -> Result<()> {
        let mut radial: Vec<u32> = self.circles.iter().filter(|c| c.is_essential()).map(|c| c.depth).collect();
        radial.sort_unstable();
        if radial.iter().enumerate().any(|(i, &r)| r as usize != i) {
            return Err(Error::InvariantViolation(format!(
                "essential radial indices {radial:?} are not a permutation"
            )));
        }
        Ok(())
    }
}

/// Connected component. `anchors` index the parent's anchor list; `bottom`
/// and `top` index circles of the boundary configurations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Component2 {
    pub genus: u32,
    pub dots: u32,
    /// Counts of the shifted dots `• - α₁` and `• - α₂`.
    pub shifted: [u32; 2],
    pub anchors: Vec<usize>,
    pub bottom: Vec<usize>,
    pub top: Vec<usize>,
}

impl Component2 {
    pub fn closed(genus: u32, dots: u32, anchors: Vec<usize>) -> Component2 {
        Component2 { genus, dots, anchors, ..Component2::default() }
    }

    pub fn boundary_count(&self) -> usize {
        self.bottom.len() + self.top.len()
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count() as i64
    }

    pub fn total_dots(&self) -> u32 {
        self.dots + self.shifted[0] + self.shifted[1]
    }
}

fn validate_parts(components: &[Component2], labels: &[u8]) -> Result<()> {
    if let Some(l) = labels.iter().find(|&&l| l != 1 && l != 2) {
        return Err(Error::InvariantViolation(format!("anchor label {l} is not 1 or 2")));
    }
    let mut seen = vec![false; labels.len()];
    for c in components {
        for &a in &c.anchors {
            if a >= labels.len() || seen[a] {
                return Err(Error::InvariantViolation(format!("anchor slot {a} missing or reused")));
            }
            seen[a] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::InvariantViolation("anchor slot owned by no component".into()));
    }
    Ok(())
}

fn adeg_of(labels: &[u8]) -> i64 {
    labels.iter().enumerate().map(|(i, &l)| if (i + 1 + l as usize).is_multiple_of(2) { 1 } else { -1 }).sum()
}

/// Closed anchored surface.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AnchoredSurface {
    pub components: Vec<Component2>,
    /// Labels in {1, 2}, bottom to top.
    pub anchor_labels: Vec<u8>,
}

impl AnchoredSurface {
    pub fn new(components: Vec<Component2>, anchor_labels: Vec<u8>) -> Result<AnchoredSurface> {
        let s = AnchoredSurface { components, anchor_labels };
        s.validate()?;
        Ok(s)
    }

    /// Sphere with `d` dots meeting the line in anchors labeled `labels`.
    pub fn sphere(d: u32, labels: &[u8]) -> AnchoredSurface {
        AnchoredSurface {
            components: vec![Component2::closed(0, d, (0..labels.len()).collect())],
            anchor_labels: labels.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        validate_parts(&self.components, &self.anchor_labels)?;
        for c in &self.components {
            if c.boundary_count() != 0 {
                return Err(Error::InvariantViolation("closed surface component has boundary".into()));
            }
            if c.anchors.len() % 2 != 0 {
                return Err(Error::InvariantViolation("closed component meets the line an odd number of times".into()));
            }
        }
        Ok(())
    }

    pub fn euler(&self) -> i64 {
        self.components.iter().map(Component2::euler).sum()
    }

    pub fn dots(&self) -> u32 {
        self.components.iter().map(Component2::total_dots).sum()
    }

    /// `(qdeg, adeg)` = `(-χ + 2d + m, Σ (-1)^{i + ℓ(i)})`.
    pub fn bidegree(&self) -> (i64, i64) {
        let q = -self.euler() + 2 * self.dots() as i64 + self.anchor_labels.len() as i64;
        (q, adeg_of(&self.anchor_labels))
    }

    /// Disjoint union with `other` placed above `self` on the line.
    pub fn disjoint_union(&self, other: &AnchoredSurface) -> AnchoredSurface {
        let shift = self.anchor_labels.len();
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|c| Component2 {
            anchors: c.anchors.iter().map(|a| a + shift).collect(),
            ..c.clone()
        }));
        let mut anchor_labels = self.anchor_labels.clone();
        anchor_labels.extend_from_slice(&other.anchor_labels);
        AnchoredSurface { components, anchor_labels }
    }

    /// Swaps labels 1 ↔ 2 and the two kinds of shifted dot.
    pub fn tau(&self) -> AnchoredSurface {
        AnchoredSurface {
            components: self
                .components
                .iter()
                .map(|c| Component2 { shifted: [c.shifted[1], c.shifted[0]], ..c.clone() })
                .collect(),
            anchor_labels: self.anchor_labels.iter().map(|&l| 3 - l).collect(),
        }
    }

    /// One factored term per nonvanishing coloring.
    pub fn coloring_terms(&self) -> Vec<FactoredTerm> {
        // Per component: for each color, None if it vanishes, else
        // (sign, dots on α_c, exponent of (α₁ - α₂)).
        let mut options: Vec<Vec<(usize, i8, u32, i64)>> = Vec::with_capacity(self.components.len());
        for comp in &self.components {
            let k = comp.anchors.len() as i64 / 2;
            let mut opts = Vec::new();
            for c in 0..2usize {
                let color = c as u8 + 1;
                if comp.anchors.iter().any(|&a| self.anchor_labels[a] == color) || comp.shifted[c] > 0 {
                    continue;
                }
                // (α_c - α_τc)^e with e = k - χ/2 + (shifted dots of the other kind).
                let e = k - comp.euler() / 2 + comp.shifted[1 - c] as i64;
                let sign = if c == 1 && e.rem_euclid(2) == 1 { -1 } else { 1 };
                opts.push((c, sign, comp.dots, e));
            }
            options.push(opts);
        }
        let mut terms = vec![FactoredTerm::new(1, [0; 3], vec![0])];
        for opts in options {
            let mut next = Vec::with_capacity(terms.len() * opts.len());
            for t in &terms {
                for &(c, sign, d, e) in &opts {
                    let mut dots = t.dots;
                    dots[c] += d;
                    next.push(FactoredTerm::new(t.sign * sign, dots, vec![t.exps[0] + e]));
                }
            }
            terms = next;
        }
        terms
    }

    pub fn evaluate(&self) -> Result<Poly> {
        sum_factored(&self.coloring_terms(), RingSpec::ALPHA)
    }

    /// Rewrites shifted dots as `• - α_i`: a list of (coefficient, surface
    /// with plain dots only) whose weighted sum is `self`.
    pub fn expand_shifted(&self) -> Vec<(Poly, AnchoredSurface)> {
        let ring = RingSpec::ALPHA;
        let mut out = vec![(Poly::one(ring), self.without_shifted())];
        for (ci, comp) in self.components.iter().enumerate() {
            // (t - α₁)^{s₁}(t - α₂)^{s₂} as coefficients of t^k.
            let mut coeffs = vec![Poly::one(ring)];
            for (i, &s) in comp.shifted.iter().enumerate() {
                for _ in 0..s {
                    let mut next = vec![Poly::zero(ring); coeffs.len() + 1];
                    for (k, c) in coeffs.iter().enumerate() {
                        next[k + 1] += c;
                        next[k] -= &(c * &ring.var(i));
                    }
                    coeffs = next;
                }
            }
            let mut expanded = Vec::with_capacity(out.len() * coeffs.len());
            for (coeff, surf) in &out {
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut s = surf.clone();
                    s.components[ci].dots += k as u32;
                    expanded.push((coeff * c, s));
                }
            }
            out = expanded;
        }
        out
    }

    fn without_shifted(&self) -> AnchoredSurface {
        AnchoredSurface {
            components: self.components.iter().map(|c| Component2 { shifted: [0, 0], ..c.clone() }).collect(),
            anchor_labels: self.anchor_labels.clone(),
        }
    }
}

/// Cobordism between circle configurations, bottom to top.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Cobordism2 {
    pub components: Vec<Component2>,
    pub anchor_labels: Vec<u8>,
    pub bottom: CircleConfig,
    pub top: CircleConfig,
}

impl Cobordism2 {
    pub fn new(
        components: Vec<Component2>,
        anchor_labels: Vec<u8>,
        bottom: CircleConfig,
        top: CircleConfig,
    ) -> Result<Cobordism2> {
        let c = Cobordism2 { components, anchor_labels, bottom, top };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        validate_parts(&self.components, &self.anchor_labels)?;
        self.bottom.validate()?;
        self.top.validate()?;
        for (side, config, pick) in [
            ("bottom", &self.bottom, (|c: &Component2| c.bottom.clone()) as fn(&Component2) -> Vec<usize>),
            ("top", &self.top, |c: &Component2| c.top.clone()),
        ] {
            let mut seen = vec![false; config.len()];
            for comp in &self.components {
                for s in pick(comp) {
                    if s >= config.len() || seen[s] {
                        return Err(Error::BoundaryMismatch(format!("{side} circle {s} missing or reused")));
                    }
                    seen[s] = true;
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::BoundaryMismatch(format!("{side} circle bounds no component")));
            }
        }
        Ok(())
    }

    pub fn identity(config: &CircleConfig) -> Cobordism2 {
        let components = (0..config.len())
            .map(|i| Component2 { bottom: vec![i], top: vec![i], ..Component2::default() })
            .collect();
        Cobordism2 { components, anchor_labels: Vec::new(), bottom: config.clone(), top: config.clone() }
    }

    pub fn from_closed(s: &AnchoredSurface) -> Cobordism2 {
        Cobordism2 {
            components: s.components.clone(),
            anchor_labels: s.anchor_labels.clone(),
            bottom: CircleConfig::empty(),
            top: CircleConfig::empty(),
        }
    }

    pub fn is_annular(&self) -> bool {
        self.anchor_labels.is_empty()
    }

    pub fn euler(&self) -> i64 {
        self.components.iter().map(Component2::euler).sum()
    }

    /// `qdeg = -χ + 2d + m`; `adeg` carries the sign `(-1)^n`, `n` the number
    /// of essential circles at the bottom.
    pub fn bidegree(&self) -> (i64, i64) {
        let d: u32 = self.components.iter().map(Component2::total_dots).sum();
        let q = -self.euler() + 2 * d as i64 + self.anchor_labels.len() as i64;
        let a = adeg_of(&self.anchor_labels);
        let sign = if self.bottom.essential_count().is_multiple_of(2) { 1 } else { -1 };
        (q, sign * a)
    }

    /// Mirror image: anchor order reversed, bottom and top swapped.
    pub fn reflect(&self) -> Cobordism2 {
        let m = self.anchor_labels.len();
        Cobordism2 {
            components: self
                .components
                .iter()
                .map(|c| Component2 {
                    anchors: c.anchors.iter().map(|&a| m - 1 - a).collect(),
                    bottom: c.top.clone(),
                    top: c.bottom.clone(),
                    ..c.clone()
                })
                .collect(),
            anchor_labels: self.anchor_labels.iter().rev().copied().collect(),
            bottom: self.top.clone(),
            top: self.bottom.clone(),
        }
    }

    /// `top ∘ self`: glue `top` above along the shared configuration.
    pub fn then(&self, top: &Cobordism2) -> Result<Cobordism2> {
        compose(self, top)
    }

    pub fn tau(&self) -> Cobordism2 {
        Cobordism2 {
            components: self
                .components
                .iter()
                .map(|c| Component2 { shifted: [c.shifted[1], c.shifted[0]], ..c.clone() })
                .collect(),
            anchor_labels: self.anchor_labels.iter().map(|&l| 3 - l).collect(),
            ..self.clone()
        }
    }

    pub fn into_closed(self) -> Result<AnchoredSurface> {
        if !self.bottom.is_empty() || !self.top.is_empty() {
            return Err(Error::BoundaryMismatch("cobordism has boundary".into()));
        }
        AnchoredSurface::new(self.components, self.anchor_labels)
    }

    /// Side-by-side union; anchors of `other` sit above those of `self`,
    /// circles of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Cobordism2) -> Cobordism2 {
        let (na, nb, nt) = (self.anchor_labels.len(), self.bottom.len(), self.top.len());
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|c| Component2 {
            anchors: c.anchors.iter().map(|a| a + na).collect(),
            bottom: c.bottom.iter().map(|b| b + nb).collect(),
            top: c.top.iter().map(|t| t + nt).collect(),
            ..c.clone()
        }));
        let cat = |a: &CircleConfig, b: &CircleConfig| {
            let mut circles = a.circles.clone();
            circles.extend_from_slice(&b.circles);
            CircleConfig { circles }
        };
        let mut anchor_labels = self.anchor_labels.clone();
        anchor_labels.extend_from_slice(&other.anchor_labels);
        Cobordism2 {
            components,
            anchor_labels,
            bottom: cat(&self.bottom, &other.bottom),
            top: cat(&self.top, &other.top),
        }
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Glue `top` above `bottom` along `bottom.top == top.bottom`.
pub fn compose(bottom: &Cobordism2, top: &Cobordism2) -> Result<Cobordism2> {
    if bottom.top != top.bottom {
        return Err(Error::BoundaryMismatch(format!(
            "cannot glue {:?} onto {:?}",
            top.bottom.circles, bottom.top.circles
        )));
    }
    let nb = bottom.components.len();
    let n = nb + top.components.len();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut lower = vec![usize::MAX; bottom.top.len()];
    for (i, c) in bottom.components.iter().enumerate() {
        for &s in &c.top {
            lower[s] = i;
        }
    }
    for (j, c) in top.components.iter().enumerate() {
        for &s in &c.bottom {
            let a = find(&mut parent, lower[s]);
            let b = find(&mut parent, nb + j);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let shift = bottom.anchor_labels.len();
    let mut roots: Vec<usize> = Vec::new();
    let mut merged: Vec<(Component2, i64)> = Vec::new();
    for idx in 0..n {
        let r = find(&mut parent, idx);
        let slot = match roots.iter().position(|&x| x == r) {
            Some(p) => p,
            None => {
                roots.push(r);
                merged.push((Component2::default(), 0));
                roots.len() - 1
            }
        };
        let (acc, chi) = &mut merged[slot];
        let part = if idx < nb { &bottom.components[idx] } else { &top.components[idx - nb] };
        *chi += part.euler();
        acc.dots += part.dots;
        acc.shifted[0] += part.shifted[0];
        acc.shifted[1] += part.shifted[1];
        if idx < nb {
            acc.anchors.extend(part.anchors.iter().copied());
            acc.bottom.extend(part.bottom.iter().copied());
        } else {
            acc.anchors.extend(part.anchors.iter().map(|a| a + shift));
            acc.top.extend(part.top.iter().copied());
        }
    }
    let mut components = Vec::with_capacity(merged.len());
    for (mut c, chi) in merged {
        let g2 = 2 - c.boundary_count() as i64 - chi;
        if g2 < 0 || g2 % 2 != 0 {
            return Err(Error::InternalInconsistency(format!("glued component has Euler characteristic {chi}")));
        }
        c.genus = (g2 / 2) as u32;
        components.push(c);
    }
    let mut anchor_labels = bottom.anchor_labels.clone();
    anchor_labels.extend_from_slice(&top.anchor_labels);
    Ok(Cobordism2 { components, anchor_labels, bottom: bottom.bottom.clone(), top: top.top.clone() })
}

pub fn evaluate_surface(s: &AnchoredSurface) -> Result<Poly> {
    s.evaluate()
}

/// `⟨reflect(a) ∘ b⟩` for cobordisms out of the empty configuration.
pub fn pairing(a: &Cobordism2, b: &Cobordism2) -> Result<Poly> {
    compose(b, &a.reflect())?.into_closed()?.evaluate()
}
