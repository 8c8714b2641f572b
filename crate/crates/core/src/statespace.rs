//! State spaces of circle configurations by the universal construction, and
//! the identification with the tensor-word functor on annular cobordisms.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{certified_rank, solve, PolyMatrix, Matrix, Poly, RankCertificate, RingSpec};
use crate::foams_sl3::{self, Facet, Foam3, Theory3};
use crate::surfaces_sl2::{compose, pairing, AnchoredSurface, CircleConfig, Cobordism2, Component2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    Sl2,
    Sl3u,
    Sl3o,
}

impl Theory {
    pub fn ring(self) -> RingSpec {
        match self {
            Theory::Sl2 => RingSpec::ALPHA,
            Theory::Sl3u => RingSpec::X_MOD2,
            Theory::Sl3o => RingSpec::X_INT,
        }
    }

    /// Basis size of a single circle.
    pub fn states(self) -> usize {
        match self {
            Theory::Sl2 => 2,
            _ => 3,
        }
    }

    fn foam_theory(self) -> Theory3 {
        match self {
            Theory::Sl3u => Theory3::Unoriented,
            _ => Theory3::Oriented,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorFoam {
    Sl2(Cobordism2),
    Sl3(Foam3),
}

impl GeneratorFoam {
    /// SL(2): `(qdeg, adeg)`. SL(3): `(deg, 0)`.
    pub fn bidegree(&self) -> (i64, i64) {
        match self {
            GeneratorFoam::Sl2(c) => c.bidegree(),
            GeneratorFoam::Sl3(f) => (f.expected_degree(), 0),
        }
    }
}

/// Circle indices of `c` in generator order: contractible circles as listed,
/// then essential circles outermost first.
pub fn circle_order(c: &CircleConfig) -> Vec<usize> {
    let mut order: Vec<usize> = (0..c.len()).filter(|&i| !c.circles[i].is_essential()).collect();
    let mut ess: Vec<usize> = (0..c.len()).filter(|&i| c.circles[i].is_essential()).collect();
    ess.sort_by_key(|&i| c.circles[i].depth);
    order.extend(ess);
    order
}

/// Local state of each circle (indexed as in `c`) for generator `index`.
/// The first circle in generator order is the most significant digit.
pub fn decode_index(c: &CircleConfig, theory: Theory, index: usize) -> Vec<usize> {
    let order = circle_order(c);
    let base = theory.states();
    let mut local = vec![0; c.len()];
    let mut rest = index;
    for &ci in order.iter().rev() {
        local[ci] = rest % base;
        rest /= base;
    }
    local
}

pub fn encode_index(c: &CircleConfig, theory: Theory, local: &[usize]) -> usize {
    let base = theory.states();
    circle_order(c).iter().fold(0, |acc, &ci| acc * base + local[ci])
}

/// Cups with `k` dots on contractible circles and disks anchored with label
/// `k + 1` on essential ones, for local state `k`.
pub fn standard_generators(c: &CircleConfig, theory: Theory) -> Vec<GeneratorFoam> {
    let total = theory.states().pow(c.len() as u32);
    (0..total).map(|i| generator(c, theory, &decode_index(c, theory, i))).collect()
}

fn generator(c: &CircleConfig, theory: Theory, local: &[usize]) -> GeneratorFoam {
    let order = circle_order(c);
    let m = c.essential_count();
    let mut labels = vec![0u8; m];
    match theory {
        Theory::Sl2 => {
            let components = order
                .iter()
                .map(|&ci| {
                    let circle = c.circles[ci];
                    if circle.is_essential() {
                        labels[circle.depth as usize] = local[ci] as u8 + 1;
                        Component2 { anchors: vec![circle.depth as usize], top: vec![ci], ..Component2::default() }
                    } else {
                        Component2 { dots: local[ci] as u32, top: vec![ci], ..Component2::default() }
                    }
                })
                .collect();
            GeneratorFoam::Sl2(Cobordism2 { components, anchor_labels: labels, bottom: CircleConfig::empty(), top: c.clone() })
        }
        _ => {
            let facets = order
                .iter()
                .map(|&ci| {
                    let circle = c.circles[ci];
                    let mut f = Facet { top: vec![ci], ..Facet::default() };
                    if circle.is_essential() {
                        labels[circle.depth as usize] = local[ci] as u8 + 1;
                        f.anchors = vec![circle.depth as usize];
                    } else {
                        f.dots = local[ci] as u32;
                    }
                    f
                })
                .collect();
            let mut foam = Foam3::closed(theory.foam_theory(), facets, vec![], labels);
            foam.top = c.clone();
            GeneratorFoam::Sl3(foam)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub matrix: PolyMatrix,
    pub generators: Vec<GeneratorFoam>,
}

/// Entry `(i, j)` is the closed evaluation of `reflect(gᵢ) ∘ gⱼ`.
pub fn gram_matrix(gens: &[GeneratorFoam], theory: Theory) -> Result<GramMatrix> {
    let n = gens.len();
    let mut matrix = Matrix::filled(n, n, Poly::zero(theory.ring()));
    for i in 0..n {
        for j in i..n {
            let v = match (&gens[i], &gens[j]) {
                (GeneratorFoam::Sl2(a), GeneratorFoam::Sl2(b)) => pairing(a, b)?,
                (GeneratorFoam::Sl3(a), GeneratorFoam::Sl3(b)) => foams_sl3::pairing(a, b)?,
                _ => return Err(Error::InvariantViolation("generators of mixed theories".into())),
            };
            if i != j {
                matrix.set(j, i, v.clone());
            }
            matrix.set(i, j, v);
        }
    }
    if !matrix.is_symmetric() {
        return Err(Error::InternalInconsistency("Gram matrix is not symmetric".into()));
    }
    Ok(GramMatrix { matrix, generators: gens.to_vec() })
}

/// Laurent polynomial in `q` and `a` with nonnegative coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedRank(pub BTreeMap<(i64, i64), usize>);

impl GradedRank {
    pub fn one() -> GradedRank {
        GradedRank(BTreeMap::from([((0, 0), 1)]))
    }

    pub fn add(&mut self, q: i64, a: i64, mult: usize) {
        if mult > 0 {
            *self.0.entry((q, a)).or_insert(0) += mult;
        }
    }

    pub fn at_one(&self) -> usize {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &GradedRank) -> GradedRank {
        let mut out = GradedRank::default();
        for (&(q1, a1), &m1) in &self.0 {
            for (&(q2, a2), &m2) in &other.0 {
                out.add(q1 + q2, a1 + a2, m1 * m2);
            }
        }
        out
    }

    /// One monomial `q^q a^a` per entry.
    pub fn from_terms(terms: &[(i64, i64)]) -> GradedRank {
        let mut out = GradedRank::default();
        for &(q, a) in terms {
            out.add(q, a, 1);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, usize)> + '_ {
        self.0.iter().map(|(&(q, a), &m)| (q, a, m))
    }
}

impl fmt::Display for GradedRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (k, (q, a, m)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut parts = Vec::new();
            if m != 1 || (q == 0 && a == 0) {
                parts.push(format!("{m}"));
            }
            for (name, e) in [("q", q), ("a", a)] {
                match e {
                    0 => {}
                    1 => parts.push(name.into()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct StateSpaceResult {
    pub theory: Theory,
    pub config: CircleConfig,
    pub rank: usize,
    pub grank: GradedRank,
    pub certificate: RankCertificate,
    pub gram: GramMatrix,
}

impl StateSpaceResult {
    pub fn generator_bidegrees(&self) -> Vec<(i64, i64)> {
        self.gram.generators.iter().map(GeneratorFoam::bidegree).collect()
    }
}

pub fn state_space(c: &CircleConfig, theory: Theory) -> Result<StateSpaceResult> {
    c.validate()?;
    let gens = standard_generators(c, theory);
    let gram = gram_matrix(&gens, theory)?;
    let certificate = certified_rank(&gram.matrix, c.len() as u64)?;
    if certificate.rank != gens.len() {
        return Err(Error::InternalInconsistency(format!(
            "standard generators span rank {} of {}",
            certificate.rank,
            gens.len()
        )));
    }
    let mut grank = GradedRank::default();
    for g in &gens {
        let (q, a) = g.bidegree();
        grank.add(q, a, 1);
    }
    Ok(StateSpaceResult { theory, config: c.clone(), rank: certificate.rank, grank, certificate, gram })
}

/// Matrix of `⟨S⟩ : ⟨C₀⟩ → ⟨C₁⟩` in the standard bases: column `j` holds the
/// coordinates of `S ∘ gⱼ`.
pub fn cobordism_matrix(s: &Cobordism2) -> Result<PolyMatrix> {
    s.validate()?;
    let source = standard_generators(&s.bottom, Theory::Sl2);
    let target = standard_generators(&s.top, Theory::Sl2);
    let gram = gram_matrix(&target, Theory::Sl2)?;
    let ring = RingSpec::ALPHA;
    let mut rhs = Matrix::filled(target.len(), source.len(), Poly::zero(ring));
    for (j, g) in source.iter().enumerate() {
        let GeneratorFoam::Sl2(g) = g else { unreachable!("SL(2) generators") };
        let image = compose(g, s)?;
        for (i, t) in target.iter().enumerate() {
            let GeneratorFoam::Sl2(t) = t else { unreachable!("SL(2) generators") };
            rhs.set(i, j, pairing(t, &image)?);
        }
    }
    solve(&gram.matrix, &rhs)
}

/// Tensor factor of the annular functor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    One,
    X,
    V0,
    V1,
    V0p,
    V1p,
}

impl Factor {
    /// `(qdeg', adeg)`.
    pub fn bidegree(self) -> (i64, i64) {
        match self {
            Factor::One => (-1, 0),
            Factor::X => (1, 0),
            Factor::V0 | Factor::V0p => (0, -1),
            Factor::V1 | Factor::V1p => (0, 1),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Factor::One => "1",
            Factor::X => "X",
            Factor::V0 => "v0",
            Factor::V1 => "v1",
            Factor::V0p => "v0'",
            Factor::V1p => "v1'",
        })
    }
}

/// Contractible factors in circle order, then essential factors outermost
/// first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorWord(pub Vec<Factor>);

impl TensorWord {
    pub fn bidegree(&self) -> (i64, i64) {
        self.0.iter().fold((0, 0), |(q, a), f| {
            let (dq, da) = f.bidegree();
            (q + dq, a + da)
        })
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("⊗")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Factor for local state `k` of an essential circle at radial `depth`.
pub fn essential_factor(depth: u32, k: usize) -> Factor {
    match (depth % 2, k) {
        (0, 0) => Factor::V1,
        (0, _) => Factor::V0,
        (_, 0) => Factor::V0p,
        _ => Factor::V1p,
    }
}

pub fn phi_map(g: &GeneratorFoam) -> Result<TensorWord> {
    let GeneratorFoam::Sl2(c) = g else { return Err(Error::NotStandardGenerator) };
    if !c.bottom.is_empty() || c.components.len() != c.top.len() {
        return Err(Error::NotStandardGenerator);
    }
    let mut local = vec![usize::MAX; c.top.len()];
    for comp in &c.components {
        if comp.genus != 0 || comp.shifted != [0, 0] || comp.top.len() != 1 || !comp.bottom.is_empty() {
            return Err(Error::NotStandardGenerator);
        }
        let ci = comp.top[0];
        let circle = c.top.circles[ci];
        local[ci] = if circle.is_essential() {
            match comp.anchors.as_slice() {
                [a] if *a == circle.depth as usize && comp.dots == 0 => c.anchor_labels[*a] as usize - 1,
                _ => return Err(Error::NotStandardGenerator),
            }
        } else {
            if !comp.anchors.is_empty() || comp.dots > 1 {
                return Err(Error::NotStandardGenerator);
            }
            comp.dots as usize
        };
    }
    Ok(word_of(&c.top, &local))
}

fn word_of(c: &CircleConfig, local: &[usize]) -> TensorWord {
    TensorWord(
        circle_order(c)
            .iter()
            .map(|&ci| {
                let circle = c.circles[ci];
                if circle.is_essential() {
                    essential_factor(circle.depth, local[ci])
                } else if local[ci] == 0 {
                    Factor::One
                } else {
                    Factor::X
                }
            })
            .collect(),
    )
}

/// Tensor word of the `index`-th standard basis element of `c`.
pub fn basis_word(c: &CircleConfig, index: usize) -> TensorWord {
    word_of(c, &decode_index(c, Theory::Sl2, index))
}

type LocalImage = Vec<(Poly, Vec<(usize, usize)>)>;

/// Matrix of the annular tensor-word functor on `s`, in the standard bases.
/// Each component must be a cup, cap, cylinder, pair of pants, or closed
/// and unanchored; dots are allowed on any piece.
pub fn g_alpha_matrix(s: &Cobordism2) -> Result<PolyMatrix> {
    s.validate()?;
    if !s.anchor_labels.is_empty() {
        return Err(Error::InvariantViolation("annular cobordism expected".into()));
    }
    let ring = RingSpec::ALPHA;
    let rows = 2usize.pow(s.top.len() as u32);
    let cols = 2usize.pow(s.bottom.len() as u32);
    let mut out = Matrix::filled(rows, cols, Poly::zero(ring));
    for j in 0..cols {
        let input = decode_index(&s.bottom, Theory::Sl2, j);
        let mut partial: LocalImage = vec![(Poly::one(ring), Vec::new())];
        for comp in &s.components {
            let images = component_image(s, comp, &input)?;
            let mut next = Vec::with_capacity(partial.len() * images.len());
            for (c1, a1) in &partial {
                for (c2, a2) in &images {
                    let c = c1 * c2;
                    if c.is_zero() {
                        continue;
                    }
                    let mut a = a1.clone();
                    a.extend_from_slice(a2);
                    next.push((c, a));
                }
            }
            partial = next;
        }
        for (c, assignment) in partial {
            let mut local = vec![0; s.top.len()];
            for (ci, k) in assignment {
                local[ci] = k;
            }
            let i = encode_index(&s.top, Theory::Sl2, &local);
            let v = out.get(i, j) + &c;
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// Swaps α₁ and α₂ when the essential circle at `depth` uses primed factors.
fn alphas(depth: u32) -> (Poly, Poly) {
    let (a1, a2) = (RingSpec::ALPHA.var(0), RingSpec::ALPHA.var(1));
    if depth.is_multiple_of(2) {
        (a1, a2)
    } else {
        (a2, a1)
    }
}

/// Essential state `k` as a `(v₀, v₁)` index (0 or 1), and back.
fn v_index(depth: u32, k: usize) -> usize {
    match essential_factor(depth, k) {
        Factor::V0 | Factor::V0p => 0,
        _ => 1,
    }
}

fn state_of_v(depth: u32, v: usize) -> usize {
    (0..2).find(|&k| v_index(depth, k) == v).expect("two essential states")
}

/// Multiplication by `X` on `{1, X}`: `X·X = E₁X - E₂`.
fn times_x(coeffs: [Poly; 2]) -> [Poly; 2] {
    let ring = RingSpec::ALPHA;
    let [c1, cx] = coeffs;
    [-(&cx * &ring.elementary(2)), &c1 + &(&cx * &ring.elementary(1))]
}

fn component_image(s: &Cobordism2, comp: &Component2, input: &[usize]) -> Result<LocalImage> {
    let ring = RingSpec::ALPHA;
    let one = Poly::one(ring);
    let zero = Poly::zero(ring);
    if comp.genus != 0 || comp.shifted != [0, 0] || !comp.anchors.is_empty() {
        if comp.boundary_count() == 0 && comp.anchors.is_empty() {
            let closed = AnchoredSurface { components: vec![comp.clone()], anchor_labels: vec![] };
            return Ok(vec![(closed.evaluate()?, vec![])]);
        }
        return Err(Error::InvariantViolation("not an elementary annular piece".into()));
    }
    let bot: Vec<_> = comp.bottom.iter().map(|&i| (i, s.bottom.circles[i])).collect();
    let top: Vec<_> = comp.top.iter().map(|&i| (i, s.top.circles[i])).collect();
    let ess_bot: Vec<_> = bot.iter().filter(|(_, c)| c.is_essential()).copied().collect();
    let ess_top: Vec<_> = top.iter().filter(|(_, c)| c.is_essential()).copied().collect();
    let con_bot: Vec<_> = bot.iter().filter(|(_, c)| !c.is_essential()).copied().collect();
    let con_top: Vec<_> = top.iter().filter(|(_, c)| !c.is_essential()).copied().collect();
    let dots = comp.dots;

    // Everything contractible: the Frobenius algebra {1, X}.
    if ess_bot.is_empty() && ess_top.is_empty() {
        let mut v = [one.clone(), zero.clone()];
        let power = dots + con_bot.iter().map(|&(ci, _)| input[ci] as u32).sum::<u32>();
        for _ in 0..power {
            v = times_x(v);
        }
        return Ok(match con_top.len() {
            0 => vec![(v[1].clone(), vec![])],
            1 => vec![(v[0].clone(), vec![(con_top[0].0, 0)]), (v[1].clone(), vec![(con_top[0].0, 1)])],
            2 => {
                // Δ(1) = 1⊗X + X⊗1 - E₁ 1⊗1, Δ(X) = X⊗X - E₂ 1⊗1.
                let (p, q) = (con_top[0].0, con_top[1].0);
                let e1 = ring.elementary(1);
                let e2 = ring.elementary(2);
                vec![
                    (v[0].clone(), vec![(p, 0), (q, 1)]),
                    (v[0].clone(), vec![(p, 1), (q, 0)]),
                    (-(&v[0] * &e1) - &v[1] * &e2, vec![(p, 0), (q, 0)]),
                    (v[1].clone(), vec![(p, 1), (q, 1)]),
                ]
            }
            _ => return Err(Error::InvariantViolation("component with more than three boundary circles".into())),
        });
    }

    // Pieces with essential boundary: their value depends on the v-basis,
    // with α₁ ↔ α₂ for primed circles.
    let lift = |depth: u32, v: usize, c: Poly, ci: usize| (c, vec![(ci, state_of_v(depth, v))]);
    match (ess_bot.len(), con_bot.len(), ess_top.len(), con_top.len()) {
        // Cylinder, possibly dotted: X·v₀ = a v₀, X·v₁ = b v₁.
        (1, 0, 1, 0) | (1, 1, 1, 0) => {
            let (bi, bc) = ess_bot[0];
            let (ti, tc) = ess_top[0];
            let (a, b) = alphas(bc.depth);
            let v = v_index(bc.depth, input[bi]);
            let mut d = dots;
            if let Some(&(ci, _)) = con_bot.first() {
                d += input[ci] as u32;
            }
            let c = if v == 0 { a.pow(d) } else { b.pow(d) };
            if tc.depth % 2 != bc.depth % 2 {
                return Err(Error::InternalInconsistency("cylinder changes nesting parity".into()));
            }
            Ok(vec![lift(tc.depth, v, c, ti)])
        }
        // Type C: v₀ ↦ v₀⊗(X - b), v₁ ↦ v₁⊗(X - a).
        (1, 0, 1, 1) => {
            let (bi, bc) = ess_bot[0];
            let (ti, tc) = ess_top[0];
            let ki = con_top[0].0;
            let (a, b) = alphas(bc.depth);
            let v = v_index(bc.depth, input[bi]);
            let scale = if v == 0 { a.pow(dots) } else { b.pow(dots) };
            let shift = if v == 0 { &b } else { &a };
            let tstate = state_of_v(tc.depth, v);
            Ok(vec![
                (-(&scale * shift), vec![(ti, tstate), (ki, 0)]),
                (scale, vec![(ti, tstate), (ki, 1)]),
            ])
        }
        // Type B: outer ⊗ inner ↦ X - a or X - b.
        (2, 0, 0, 1) => {
            let (outer, inner) = if ess_bot[0].1.depth < ess_bot[1].1.depth {
                (ess_bot[0], ess_bot[1])
            } else {
                (ess_bot[1], ess_bot[0])
            };
            let (a, b) = alphas(outer.1.depth);
            let vo = v_index(outer.1.depth, input[outer.0]);
            let vi = v_index(inner.1.depth, input[inner.0]);
            let ki = con_top[0].0;
            let shift = match (vo, vi) {
                (1, 0) => a,
                (0, 1) => b,
                _ => return Ok(vec![]),
            };
            let v = times_power([-shift, one.clone()], dots);
            Ok(vec![(v[0].clone(), vec![(ki, 0)]), (v[1].clone(), vec![(ki, 1)])])
        }
        // Type D: 1 ↦ v₀⊗v₁' + v₁⊗v₀', X ↦ a v₀⊗v₁' + b v₁⊗v₀'.
        (0, 1, 2, 0) => {
            let (outer, inner) = if ess_top[0].1.depth < ess_top[1].1.depth {
                (ess_top[0], ess_top[1])
            } else {
                (ess_top[1], ess_top[0])
            };
            let (a, b) = alphas(outer.1.depth);
            let ci = con_bot[0].0;
            let d = dots + input[ci] as u32;
            let place = |vo: usize, vi: usize| {
                vec![(outer.0, state_of_v(outer.1.depth, vo)), (inner.0, state_of_v(inner.1.depth, vi))]
            };
            Ok(vec![(a.pow(d), place(0, 1)), (b.pow(d), place(1, 0))])
        }
        _ => Err(Error::InvariantViolation("not an elementary annular piece".into())),
    }
}

fn times_power(v: [Poly; 2], d: u32) -> [Poly; 2] {
    (0..d).fold(v, |acc, _| times_x(acc))
}
