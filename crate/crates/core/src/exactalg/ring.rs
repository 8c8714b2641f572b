use crate::exactalg::poly::{Monomial, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficients {
    Integers,
    Mod2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variables {
    /// `α₁, α₂`
    Alpha,
    /// `x₁, x₂, x₃`
    X,
}

/// Polynomial ring with every variable in degree 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    pub vars: Variables,
    pub coeffs: Coefficients,
}

const ALPHA_NAMES: [&str; 2] = ["a1", "a2"];
const X_NAMES: [&str; 3] = ["x1", "x2", "x3"];
const ALPHA_PRETTY: [&str; 2] = ["α₁", "α₂"];
const X_PRETTY: [&str; 3] = ["x₁", "x₂", "x₃"];

impl RingSpec {
    /// `Z[α₁, α₂]`
    pub const ALPHA: RingSpec = RingSpec { vars: Variables::Alpha, coeffs: Coefficients::Integers };
    /// `Z[x₁, x₂, x₃]`
    pub const X_INT: RingSpec = RingSpec { vars: Variables::X, coeffs: Coefficients::Integers };
    /// `F₂[x₁, x₂, x₃]`
    pub const X_MOD2: RingSpec = RingSpec { vars: Variables::X, coeffs: Coefficients::Mod2 };

    pub const VARIABLE_DEGREE: u32 = 2;

    pub fn nvars(&self) -> usize {
        match self.vars {
            Variables::Alpha => 2,
            Variables::X => 3,
        }
    }

    pub fn var_name(&self, i: usize) -> &'static str {
        match self.vars {
            Variables::Alpha => ALPHA_NAMES[i],
            Variables::X => X_NAMES[i],
        }
    }

    pub fn pretty_name(&self, i: usize) -> &'static str {
        match self.vars {
            Variables::Alpha => ALPHA_PRETTY[i],
            Variables::X => X_PRETTY[i],
        }
    }

    pub fn is_mod2(&self) -> bool {
        self.coeffs == Coefficients::Mod2
    }

    /// Unordered variable pairs `(i, j)`, `i < j`, indexing the linear forms.
    pub fn pairs(&self) -> &'static [(usize, usize)] {
        match self.vars {
            Variables::Alpha => &[(0, 1)],
            Variables::X => &[(0, 1), (0, 2), (1, 2)],
        }
    }

    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.pairs().iter().position(|&p| p == (a, b)).expect("variable pair out of range")
    }

    pub fn var(&self, i: usize) -> Poly {
        assert!(i < self.nvars(), "variable index out of range");
        let mut e = [0u32; 3];
        e[i] = 1;
        Poly::monomial(*self, Monomial(e), 1)
    }

    /// `v_i - v_j` (a sum over F₂).
    pub fn linear_form(&self, i: usize, j: usize) -> Poly {
        &self.var(i) - &self.var(j)
    }

    /// Elementary symmetric polynomial `E_k`; zero past the variable count.
    pub fn elementary(&self, k: usize) -> Poly {
        let n = self.nvars();
        let mut out = Poly::zero(*self);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k {
                let mut e = [0u32; 3];
                for (i, slot) in e.iter_mut().enumerate().take(n) {
                    *slot = (mask >> i) & 1;
                }
                out = &out + &Poly::monomial(*self, Monomial(e), 1);
            }
        }
        out
    }
}
