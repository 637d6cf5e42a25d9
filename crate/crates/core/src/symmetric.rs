//! Homogeneous symmetric polynomials in a fixed number of variables, stored
//! by their dominant coefficients: the coefficient of `x^λ` for each
//! partition `λ` with at most `vars` parts determines the whole polynomial.
//!
//! [`SymmetricPoly::to_elementary`] rewrites a symmetric polynomial as a
//! polynomial in the elementary symmetric functions by repeatedly cancelling
//! the lexicographically leading monomial.

use std::collections::{BTreeMap, HashMap};

use crate::charclass::ChernPoly;
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricPoly<S> {
    vars: usize,
    degree: u32,
    coeffs: BTreeMap<Partition, S>,
}

impl<S: Scalar> SymmetricPoly<S> {
    pub fn zero(vars: usize, degree: u32) -> Self {
        SymmetricPoly { vars, degree, coeffs: BTreeMap::new() }
    }

    /// From dominant coefficients. Partitions with more than `vars` parts or
    /// of the wrong weight are rejected.
    pub fn from_dominant(
        vars: usize,
        degree: u32,
        coeffs: impl IntoIterator<Item = (Partition, S)>,
    ) -> Result<Self> {
        let mut out = Self::zero(vars, degree);
        for (p, c) in coeffs {
            if p.weight() != degree || p.len() > vars {
                return Err(Error::pre(format!("{p} is not a monomial of degree {degree} in {vars} variables")));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    /// Monomial symmetric function `m_λ`.
    pub fn monomial(vars: usize, lambda: &Partition) -> Self {
        let mut out = Self::zero(vars, lambda.weight());
        if lambda.len() <= vars {
            out.add_term(lambda.clone(), S::one());
        }
        out
    }

    pub fn elementary(vars: usize, j: u32) -> Self {
        Self::monomial(vars, &Partition::from_parts_lossy(std::iter::repeat(1).take(j as usize)))
    }

    pub fn power_sum(vars: usize, j: u32) -> Self {
        Self::monomial(vars, &Partition::single(j))
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vars, &Partition::empty())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> S {
        self.coeffs.get(lambda).cloned().unwrap_or_else(S::zero)
    }

    fn add_term(&mut self, p: Partition, c: S) {
        let v = self.coeffs.remove(&p).unwrap_or_else(S::zero) + c;
        if !v.is_zero() {
            self.coeffs.insert(p, v);
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.vars, self.degree);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.vars, self.degree), (other.vars, other.degree));
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let degree = self.degree + other.degree;
        let mut out = Self::zero(self.vars, degree);
        for nu in partitions(degree) {
            if nu.len() > self.vars {
                continue;
            }
            let mut padded = nu.parts().to_vec();
            padded.resize(self.vars, 0);
            let mut acc = S::zero();
            let mut alpha = vec![0u32; self.vars];
            split_exponents(&padded, 0, self.degree, &mut alpha, &mut |alpha| {
                let a = Partition::from_parts_lossy(alpha.iter().copied());
                let Some(ca) = self.coeffs.get(&a) else { return };
                let b = Partition::from_parts_lossy(padded.iter().zip(alpha).map(|(n, a)| n - a));
                if let Some(cb) = other.coeffs.get(&b) {
                    acc = acc.clone() + ca.clone() * cb.clone();
                }
            });
            out.add_term(nu, acc);
        }
        out
    }

    /// Rewrites `self` in elementary symmetric functions; `e_i` becomes `c_i`.
    pub fn to_elementary(&self) -> Result<ChernPoly<S>> {
        let mut rest = self.clone();
        let mut out = ChernPoly::zero();
        let mut cache: HashMap<Partition, SymmetricPoly<S>> = HashMap::new();
        let mut guard = partitions(self.degree).len() + 1;
        while let Some((lead, c)) = rest.coeffs.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) {
            if guard == 0 {
                return Err(Error::Inconsistent("elimination did not terminate".into()));
            }
            guard -= 1;
            let chern = lead.conjugate();
            let product = cache
                .entry(chern.clone())
                .or_insert_with(|| {
                    chern
                        .parts()
                        .iter()
                        .fold(Self::one(self.vars), |acc, &i| acc.mul(&Self::elementary(self.vars, i)))
                })
                .clone();
            rest = rest.sub(&product.scale(&c));
            if rest.coeffs.contains_key(&lead) {
                return Err(Error::Inconsistent(format!("leading term {lead} not cancelled")));
            }
            out = out.add(&ChernPoly::monomial(chern, c));
        }
        Ok(out)
    }
}

fn split_exponents(
    bound: &[u32],
    idx: usize,
    remaining: u32,
    alpha: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if idx == bound.len() {
        if remaining == 0 {
            visit(alpha);
        }
        return;
    }
    let capacity: u32 = bound[idx..].iter().sum();
    if capacity < remaining {
        return;
    }
    for v in 0..=bound[idx].min(remaining) {
        alpha[idx] = v;
        split_exponents(bound, idx + 1, remaining - v, alpha, visit);
    }
    alpha[idx] = 0;
}
