//! Linear algebra in the rational complex cobordism group of dimension `n`,
//! in the basis of monomials `α_m = α_{m_1} ··· α_{m_p}` in the generators of
//! [`alpha_generator`](crate::families::alpha_generator).

use serde::Serialize;

use crate::charclass::{chi_functionals, pontryagin_functionals, ChernVector, LinearFunctional};
use crate::error::{Error, Result};
use crate::families::{alpha_generator, point_vector, product_chern_vector};
use crate::linalg;
use crate::partition::{partition_count, partitions, Partition};
use crate::scalar::Scalar;

/// Chern vectors of `α_1..α_n`.
#[derive(Clone, Debug)]
pub struct Generators<S> {
    vectors: Vec<ChernVector<S>>,
}

impl<S: Scalar> Generators<S> {
    pub fn new(max_dimension: u32, polarization: &S) -> Result<Self> {
        let vectors = (1..=max_dimension)
            .map(|i| alpha_generator(i, polarization)?.chern_vector())
            .collect::<Result<Vec<_>>>()?;
        Ok(Generators { vectors })
    }

    pub fn max_dimension(&self) -> u32 {
        self.vectors.len() as u32
    }

    pub fn generator(&self, i: u32) -> Option<&ChernVector<S>> {
        self.vectors.get(i.checked_sub(1)? as usize)
    }

    /// Chern vector of the monomial `α_m`.
    pub fn monomial_vector(&self, m: &Partition) -> Result<ChernVector<S>> {
        m.parts().iter().try_fold(point_vector(), |acc, &i| {
            let g = self
                .generator(i)
                .ok_or_else(|| Error::pre(format!("generator α_{i} not computed")))?;
            Ok(product_chern_vector(&acc, g))
        })
    }
}

/// `Ω_n^U ⊗ Q` with its monomial basis.
#[derive(Clone, Debug)]
pub struct CobordismSpace<S> {
    dimension: u32,
    generators: Generators<S>,
    basis: Vec<Partition>,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> CobordismSpace<S> {
    pub fn new(dimension: u32, polarization: &S) -> Result<Self> {
        Self::with_generators(dimension, Generators::new(dimension, polarization)?)
    }

    pub fn with_generators(dimension: u32, generators: Generators<S>) -> Result<Self> {
        let basis = partitions(dimension);
        let rows = basis
            .iter()
            .map(|m| generators.monomial_vector(m).map(|v| v.dense()))
            .collect::<Result<Vec<_>>>()?;
        Ok(CobordismSpace { dimension, generators, basis, rows })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn generators(&self) -> &Generators<S> {
        &self.generators
    }

    /// Rows are the Chern vectors of the basis monomials.
    pub fn matrix(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn matrix_rank(&self) -> usize {
        linalg::rank(&self.rows)
    }

    pub fn monomial_vector(&self, m: &Partition) -> Result<ChernVector<S>> {
        self.generators.monomial_vector(m)
    }

    /// Coordinates of `v` over the monomial basis.
    pub fn decompose(&self, v: &ChernVector<S>) -> Result<Vec<(Partition, S)>> {
        if v.dimension() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension as usize,
                found: v.dimension() as usize,
            });
        }
        if self.matrix_rank() != self.basis.len() {
            return Err(Error::Inconsistent("monomial matrix is singular".into()));
        }
        let x = linalg::solve_combination(&self.rows, &v.dense())
            .ok_or_else(|| Error::Inconsistent("vector outside the monomial span".into()))?;
        Ok(self.basis.iter().cloned().zip(x).collect())
    }

    pub fn assemble(&self, coords: &[(Partition, S)]) -> Result<ChernVector<S>> {
        let mut acc = ChernVector::zero(self.dimension);
        for (m, c) in coords {
            acc = acc.add(&self.monomial_vector(m)?.scale(c))?;
        }
        Ok(acc)
    }

    fn slice(&self, generators: Vec<Partition>) -> Result<IdealSlice> {
        let rows = generators
            .iter()
            .map(|m| self.monomial_vector(m).map(|v| v.dense()))
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealSlice { dimension: self.dimension, rank: linalg::rank(&rows), generators })
    }

    /// Degree-`n` part of `I = ⟨α_1 α_k : k >= 3⟩`.
    pub fn ideal_slice_i(&self) -> Result<IdealSlice> {
        self.slice(ideal_i_generators(self.dimension))
    }

    /// Degree-`n` part of `J = ⟨α_{2k+1} : k >= 1⟩ + ⟨α_1 α_{2k} : k >= 2⟩`.
    pub fn ideal_slice_j(&self) -> Result<IdealSlice> {
        self.slice(ideal_j_generators(self.dimension))
    }

    fn dense_vectors(&self, gens: &[Partition]) -> Result<Vec<Vec<S>>> {
        gens.iter().map(|m| self.monomial_vector(m).map(|v| v.dense())).collect()
    }

    /// Whether `I^n ⊆ J^n`, and whether they are equal.
    pub fn compare_ideals(&self) -> Result<(bool, bool)> {
        let i = self.dense_vectors(&ideal_i_generators(self.dimension))?;
        let j = linalg::RowSpace::new(&self.dense_vectors(&ideal_j_generators(self.dimension))?);
        let sub = i.iter().all(|v| j.contains(v));
        Ok((sub, sub && linalg::rank(&i) == j.dim()))
    }

    /// Dimensions and memberships for the `χ^p` and Pontryagin spans.
    pub fn span_report(&self) -> Result<SpanReport> {
        let n = self.dimension;
        let chi: Vec<LinearFunctional<S>> = chi_functionals(n)?;
        let pont: Vec<LinearFunctional<S>> = if n % 2 == 0 {
            pontryagin_functionals(n)?.into_iter().map(|(_, f)| f).collect()
        } else {
            Vec::new()
        };
        let chi_rows: Vec<Vec<S>> = chi.iter().map(LinearFunctional::dense).collect();
        let pont_rows: Vec<Vec<S>> = pont.iter().map(LinearFunctional::dense).collect();
        let all_rows: Vec<Vec<S>> = chi_rows.iter().chain(&pont_rows).cloned().collect();
        let chi_space = linalg::RowSpace::new(&chi_rows);
        let all_space = linalg::RowSpace::new(&all_rows);
        let mut chi_members = Vec::new();
        let mut sum_members = Vec::new();
        for m in &self.basis {
            let target = LinearFunctional::<S>::indicator(m).dense();
            if chi_space.contains(&target) {
                chi_members.push(m.clone());
            }
            if all_space.contains(&target) {
                sum_members.push(m.clone());
            }
        }
        let i_slice = self.ideal_slice_i()?;
        let j_slice = self.ideal_slice_j()?;
        let mut annihilates_j = true;
        for m in &j_slice.generators {
            let v = self.monomial_vector(m)?;
            for f in chi.iter().chain(&pont) {
                if !crate::charclass::apply(f, &v)?.is_zero() {
                    annihilates_j = false;
                }
            }
        }
        let (i_in_j, i_eq_j) = self.compare_ideals()?;
        Ok(SpanReport {
            dimension: n,
            partition_count: partition_count(n),
            chi_dim: chi_space.dim(),
            pontryagin_dim: (n % 2 == 0).then(|| linalg::rank(&pont_rows)),
            sum_dim: all_space.dim(),
            intersection_dim: linalg::intersection_dim(&chi_rows, &pont_rows),
            chi_members,
            sum_members,
            i_rank: i_slice.rank,
            i_formula: ideal_i_formula(n),
            j_rank: j_slice.rank,
            upper_bound: upper_bound(n),
            i_in_j,
            i_eq_j,
            annihilates_j,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealSlice {
    pub dimension: u32,
    pub generators: Vec<Partition>,
    pub rank: usize,
}

pub fn ideal_i_generators(n: u32) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(|m| m.contains(1) && m.largest() >= 3)
        .collect()
}

pub fn ideal_j_generators(n: u32) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(|m| {
            let odd = m.parts().iter().any(|&p| p >= 3 && p % 2 == 1);
            let even_with_one = m.contains(1) && m.parts().iter().any(|&p| p >= 4 && p % 2 == 0);
            odd || even_with_one
        })
        .collect()
}

/// `p(n-1) - ⌊(n+1)/2⌋`.
pub fn ideal_i_formula(n: u32) -> i64 {
    if n == 0 {
        return 0;
    }
    partition_count(n - 1) as i64 - ((n as i64 + 1) / 2)
}

/// `p(n) - p(n-1) + ⌊(n+1)/2⌋`.
pub fn upper_bound(n: u32) -> i64 {
    partition_count(n) as i64 - ideal_i_formula(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub dimension: u32,
    pub partition_count: u64,
    pub chi_dim: usize,
    pub pontryagin_dim: Option<usize>,
    pub sum_dim: usize,
    pub intersection_dim: usize,
    /// Single Chern numbers inside `span{χ^p}`.
    pub chi_members: Vec<Partition>,
    /// Single Chern numbers inside `span{χ^p} + span{p_m}`.
    pub sum_members: Vec<Partition>,
    pub i_rank: usize,
    pub i_formula: i64,
    pub j_rank: usize,
    pub upper_bound: i64,
    pub i_in_j: bool,
    pub i_eq_j: bool,
    /// Every `χ^p` and Pontryagin number vanishes on the generators of `J^n`.
    pub annihilates_j: bool,
}

impl SpanReport {
    pub fn to_table(&self) -> String {
        let list = |v: &[Partition]| v.iter().map(Partition::chern_monomial).collect::<Vec<_>>().join(", ");
        let rows: Vec<(&str, String)> = vec![
            ("dimension n", self.dimension.to_string()),
            ("p(n)", self.partition_count.to_string()),
            ("dim span chi^p", self.chi_dim.to_string()),
            (
                "dim span Pontryagin",
                self.pontryagin_dim.map_or_else(|| "-".to_string(), |d| d.to_string()),
            ),
            ("dim chi + Pontryagin", self.sum_dim.to_string()),
            ("dim chi ∩ Pontryagin", self.intersection_dim.to_string()),
            ("c_m in chi span", list(&self.chi_members)),
            ("c_m in chi + Pontryagin", list(&self.sum_members)),
            ("rank I^n", self.i_rank.to_string()),
            ("p(n-1) - floor((n+1)/2)", self.i_formula.to_string()),
            ("rank J^n", self.j_rank.to_string()),
            ("upper bound", self.upper_bound.to_string()),
            ("I^n ⊆ J^n", self.i_in_j.to_string()),
            ("I^n = J^n", self.i_eq_j.to_string()),
            ("chi, Pontryagin vanish on J^n", self.annihilates_j.to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}
