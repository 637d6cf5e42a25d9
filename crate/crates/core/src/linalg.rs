//! Exact row reduction over a field. Pivots are the first nonzero entry in
//! column order, so results are deterministic.

use crate::scalar::Scalar;

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
pub fn rref<S: Scalar>(rows: &[Vec<S>]) -> (Vec<Vec<S>>, Vec<usize>) {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = S::one() / m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let delta = factor.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    rref(rows).1.len()
}

/// Solves `Σ x_i rows[i] = target`; `None` when `target` is outside the row
/// span. Free variables are set to zero.
pub fn solve_combination<S: Scalar>(rows: &[Vec<S>], target: &[S]) -> Option<Vec<S>> {
    let n = rows.len();
    let cols = target.len();
    // Augmented system on the transpose: one equation per column.
    let system: Vec<Vec<S>> = (0..cols)
        .map(|c| {
            let mut eq: Vec<S> = rows.iter().map(|r| r[c].clone()).collect();
            eq.push(target[c].clone());
            eq
        })
        .collect();
    let (reduced, pivots) = rref(&system);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![S::zero(); n];
    for (row, &p) in reduced.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

pub fn in_span<S: Scalar>(rows: &[Vec<S>], target: &[S]) -> bool {
    RowSpace::new(rows).contains(target)
}

/// A row span in reduced echelon form, for repeated membership tests.
#[derive(Clone, Debug)]
pub struct RowSpace<S> {
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> RowSpace<S> {
    pub fn new(rows: &[Vec<S>]) -> Self {
        let (rows, pivots) = rref(rows);
        RowSpace { rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, target: &[S]) -> bool {
        let mut v = target.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = x.clone() - factor.clone() * r.clone();
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

/// `dim(span(a) + span(b))`.
pub fn sum_dim<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> usize {
    let all: Vec<Vec<S>> = a.iter().chain(b).cloned().collect();
    rank(&all)
}

/// `dim(span(a) ∩ span(b))`.
pub fn intersection_dim<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> usize {
    rank(a) + rank(b) - sum_dim(a, b)
}

/// Whether `span(a) ⊆ span(b)`.
pub fn contained<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> bool {
    sum_dim(a, b) == rank(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| Rational::from_int(v)).collect()).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])), 2);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank::<Rational>(&[]), 0);
    }

    #[test]
    fn solve_and_reject() {
        let rows = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let x = solve_combination(&rows, &m(&[&[2, 3, 5]])[0]).unwrap();
        assert_eq!(x, m(&[&[2, 3]])[0]);
        assert!(solve_combination(&rows, &m(&[&[1, 1, 1]])[0]).is_none());
    }

    #[test]
    fn row_space_membership() {
        let space = RowSpace::new(&m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]));
        assert_eq!(space.dim(), 2);
        assert!(space.contains(&m(&[&[1, 3, 4]])[0]));
        assert!(!space.contains(&m(&[&[0, 0, 1]])[0]));
        assert!(RowSpace::<Rational>::new(&[]).contains(&[]));
    }

    #[test]
    fn intersections() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = m(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(intersection_dim(&a, &b), 1);
        assert!(!contained(&a, &b));
        assert!(contained(&a[..1], &a));
    }

    proptest! {
        #[test]
        fn recombination_is_recovered(coeffs in proptest::collection::vec(-5i64..5, 3), seed in proptest::collection::vec(-4i64..4, 12)) {
            // Rows of an upper-unitriangular 3x4 block are independent.
            let mut rows = m(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
            for (i, row) in rows.iter_mut().enumerate() {
                for j in (i + 1)..4 {
                    row[j] = Rational::from_int(seed[i * 4 + j]);
                }
            }
            let target: Vec<Rational> = (0..4)
                .map(|c| (0..3).fold(Rational::from_int(0), |acc, i| acc + rows[i][c].clone() * Rational::from_int(coeffs[i])))
                .collect();
            let x = solve_combination(&rows, &target).unwrap();
            prop_assert_eq!(x, coeffs.iter().map(|&c| Rational::from_int(c)).collect::<Vec<_>>());
        }
    }
}
