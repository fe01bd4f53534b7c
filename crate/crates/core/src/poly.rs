//! Sparse polynomials with rational coefficients and the canonical Poisson
//! bracket. With `2n` variables, `0..n` are `p_1..p_n` and `n..2n` are
//! `q_1..q_n`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial { num_vars, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        Self::monomial(num_vars, alloc::vec![0; num_vars], c)
    }

    /// The coordinate function `x_i`.
    pub fn variable(num_vars: usize, i: usize) -> Self {
        let mut e = alloc::vec![0; num_vars];
        e[i] = 1;
        Self::monomial(num_vars, e, Rational::one())
    }

    pub fn monomial(num_vars: usize, exponents: Monomial, c: Rational) -> Self {
        assert_eq!(exponents.len(), num_vars, "exponent vector length");
        let mut p = Self::zero(num_vars);
        p.add_term(exponents, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(num_vars: usize, terms: I) -> Self {
        let mut p = Self::zero(num_vars);
        for (e, c) in terms {
            assert_eq!(e.len(), num_vars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Smallest total degree, `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        self.filtered(|e| e.iter().sum::<u32>() == d)
    }

    /// Drops every monomial of total degree above `max_degree`.
    pub fn truncated(&self, max_degree: u32) -> Self {
        self.filtered(|e| e.iter().sum::<u32>() <= max_degree)
    }

    fn filtered<F: Fn(&[u32]) -> bool>(&self, keep: F) -> Self {
        Polynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        Polynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.num_vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// Product with every monomial above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &Self, max_degree: u32) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = Self::zero(self.num_vars);
        for (a, x) in &self.terms {
            let da: u32 = a.iter().sum();
            for (b, y) in &other.terms {
                if da + b.iter().sum::<u32>() > max_degree {
                    continue;
                }
                let e = a.iter().zip(b).map(|(u, v)| u + v).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.num_vars);
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            total += t;
        }
        total
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_truncated(rhs, u32::MAX)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// `{f, g} = Σ_i (∂f/∂p_i ∂g/∂q_i − ∂f/∂q_i ∂g/∂p_i)`, truncated to total
/// degree `≤ max_degree`. Both arguments must have the same even number of
/// variables.
pub fn poisson_bracket(f: &Polynomial, g: &Polynomial, max_degree: u32) -> Polynomial {
    assert_eq!(f.num_vars, g.num_vars, "variable count mismatch");
    assert!(f.num_vars.is_multiple_of(2), "odd number of variables");
    let n = f.num_vars / 2;
    let mut out = Polynomial::zero(f.num_vars);
    for i in 0..n {
        let a = f.derivative(i).mul_truncated(&g.derivative(i + n), max_degree);
        let b = f.derivative(i + n).mul_truncated(&g.derivative(i), max_degree);
        out = &(&out + &a) - &b;
    }
    out
}

/// Multinomial coefficient `(Σ e)! / Π e_i!`.
pub fn multinomial(e: &[u32]) -> u64 {
    let mut total = 0u64;
    let mut out = 1u64;
    for &k in e {
        for j in 1..=k as u64 {
            total += 1;
            out = out * total / j;
        }
    }
    out
}

/// Exponent vector of the monomial `x_{i_1} ... x_{i_k}`.
pub fn exponents_of(num_vars: usize, indices: &[usize]) -> Monomial {
    let mut e = alloc::vec![0; num_vars];
    for &i in indices {
        e[i] += 1;
    }
    e
}
