//! Exact Gaussian elimination over `Rat`.

use num_traits::{One, Zero};

use super::Rat;

/// Row-reduced echelon form of a dense matrix plus its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<Rat>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rat::zero(); self.ncols];
                x[f] = Rat::one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    x[p] = -self.rows[r][f].clone();
                }
                x
            })
            .collect()
    }
}

pub fn rref(mut m: Vec<Vec<Rat>>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(sel) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = Rat::one() / &m[row][col];
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (v, p) in other.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    Echelon { rows: m, pivots, ncols }
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum Solve {
    Unique(Vec<Rat>),
    /// The system has solutions but `A` has a kernel of this dimension.
    Underdetermined(usize),
    Inconsistent,
}

pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Solve {
    let ncols = a.first().map_or(0, Vec::len);
    let aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let ech = rref(aug, ncols + 1);
    if ech.pivots.contains(&ncols) {
        return Solve::Inconsistent;
    }
    if ech.rank() < ncols {
        return Solve::Underdetermined(ncols - ech.rank());
    }
    let mut x = vec![Rat::zero(); ncols];
    for (r, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.rows[r][ncols].clone();
    }
    Solve::Unique(x)
}

/// Incremental rank tracker: accepts rows one at a time and reports whether
/// each one enlarges the row space.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    basis: Vec<(usize, Vec<Rat>)>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn try_insert(&mut self, row: &[Rat]) -> bool {
        let mut v = row.to_vec();
        for (p, b) in &self.basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rat::one() / &v[p];
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, b) in self.basis.iter_mut() {
            if !b[p].is_zero() {
                let f = b[p].clone();
                for (x, y) in b.iter_mut().zip(&v) {
                    *x -= &f * y;
                }
            }
        }
        self.basis.push((p, v));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn solves_square_system() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![rat(3), rat(5)];
        assert_eq!(solve(&a, &b), Solve::Unique(vec![ratio(4, 5), ratio(7, 5)]));
    }

    #[test]
    fn detects_inconsistency_and_kernel() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&a, &[rat(1), rat(3)]), Solve::Inconsistent);
        assert_eq!(solve(&a, &[rat(1), rat(2)]), Solve::Underdetermined(1));
        let ker = rref(a.clone(), 2).nullspace();
        assert_eq!(ker, vec![vec![rat(-1), rat(1)]]);
    }

    #[test]
    fn row_space_tracks_rank() {
        let mut rs = RowSpace::new();
        assert!(rs.try_insert(&[rat(1), rat(2), rat(0)]));
        assert!(!rs.try_insert(&[rat(2), rat(4), rat(0)]));
        assert!(rs.try_insert(&[rat(0), rat(1), rat(1)]));
        assert!(!rs.try_insert(&[rat(1), rat(3), rat(1)]));
        assert_eq!(rs.rank(), 2);
    }
}
