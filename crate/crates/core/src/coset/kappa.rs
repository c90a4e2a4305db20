//! `κ`-tables: block sizes of the canonical 0-1 representatives.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::gf::Gf;
use crate::linalg::Mat;

use super::window::Window;
use super::{Coset, Object};

/// `k[i][j]` counts unit vectors sent from column block `j` to row block `i`.
/// Row sums are `(N-, |α|, N+)`, column sums `(M-, |β|, M+)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KappaTable {
    pub alpha: Object,
    pub beta: Object,
    pub k: [[usize; 3]; 3],
}

impl KappaTable {
    pub fn row_sum(&self, i: usize) -> usize {
        self.k[i].iter().sum()
    }

    pub fn col_sum(&self, j: usize) -> usize {
        (0..3).map(|i| self.k[i][j]).sum()
    }

    pub fn n_minus(&self) -> usize {
        self.row_sum(0)
    }

    pub fn n_plus(&self) -> usize {
        self.row_sum(2)
    }

    pub fn m_minus(&self) -> usize {
        self.col_sum(0)
    }

    pub fn m_plus(&self) -> usize {
        self.col_sum(2)
    }

    /// Middle sums and alignment of the outer blocks.
    pub fn is_consistent(&self) -> bool {
        self.row_sum(1) == self.alpha.size()
            && self.col_sum(1) == self.beta.size()
            && self.n_minus() as i64 - self.alpha.lo() == self.m_minus() as i64 - self.beta.lo()
            && self.n_plus() as i64 + self.alpha.hi() == self.m_plus() as i64 + self.beta.hi()
    }

    /// Table of the adjoint morphism.
    pub fn transpose(&self) -> KappaTable {
        let mut k = [[0; 3]; 3];
        for (i, row) in k.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.k[j][i];
            }
        }
        KappaTable {
            alpha: self.beta,
            beta: self.alpha,
            k,
        }
    }

    /// The 0-1 matrix `J_κ`.
    pub fn matrix(&self, field: &Gf) -> Mat {
        let n: usize = (0..3).map(|i| self.row_sum(i)).sum();
        let mut m = Mat::zeros(field, n, n);
        let row_base: Vec<usize> = (0..3)
            .map(|i| (0..i).map(|x| self.row_sum(x)).sum())
            .collect();
        let col_base: Vec<usize> = (0..3)
            .map(|j| (0..j).map(|x| self.col_sum(x)).sum())
            .collect();
        for (i, &rb) in row_base.iter().enumerate() {
            for (j, &cb) in col_base.iter().enumerate() {
                let r0 = rb + self.k[i][..j].iter().sum::<usize>();
                let c0 = cb + (0..i).map(|x| self.k[x][j]).sum::<usize>();
                for t in 0..self.k[i][j] {
                    m.set(r0 + t, c0 + t, Elem::ONE);
                }
            }
        }
        m
    }

    pub fn window(&self, field: &Gf) -> Result<Window> {
        Window::new(
            self.alpha,
            self.beta,
            (self.n_minus(), self.n_plus()),
            (self.m_minus(), self.m_plus()),
            self.matrix(field),
        )
    }
}

impl fmt::Display for KappaTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.k {
            writeln!(f, "{} {} {}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// Completes the table from `rk`, `dim ker`, `dim indef` and `η`, with
/// `κ_11 = κ_33 = 0`. Fails when any entry would be negative.
pub fn complete_kappa(
    alpha: Object,
    beta: Object,
    rk: usize,
    ker: usize,
    indef: usize,
    eta: usize,
) -> Result<KappaTable> {
    let (rk, ker, indef, eta) = (rk as i64, ker as i64, indef as i64, eta as i64);
    let k23 = alpha.size() as i64 - indef - rk;
    let k32 = beta.size() as i64 - ker - rk;
    let m_minus = indef + eta;
    let n_minus = m_minus - beta.lo() + alpha.lo();
    let k13 = n_minus - ker;
    let raw = [[0, ker, k13], [indef, rk, k23], [eta, k32, 0]];
    let mut k = [[0usize; 3]; 3];
    for (i, row) in raw.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v < 0 {
                return Err(Error::InvariantViolation(format!(
                    "kappa_{}{} = {v} is negative",
                    i + 1,
                    j + 1
                )));
            }
            k[i][j] = v as usize;
        }
    }
    Ok(KappaTable { alpha, beta, k })
}

pub fn canonical_kappa(c: &Coset) -> Result<KappaTable> {
    let inv = c.chi().invariants();
    complete_kappa(
        c.alpha(),
        c.beta(),
        inv.rk,
        inv.ker.dim(),
        inv.indef.dim(),
        c.eta(),
    )
}

/// Every table with the given outer sizes.
pub fn kappa_tables(
    alpha: Object,
    beta: Object,
    n: (usize, usize),
    m: (usize, usize),
) -> Vec<KappaTable> {
    let rows = [n.0, alpha.size(), n.1];
    let cols = [m.0, beta.size(), m.1];
    let mut out = Vec::new();
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return out;
    }
    for k11 in 0..=rows[0].min(cols[0]) {
        for k12 in 0..=(rows[0] - k11).min(cols[1]) {
            let k13 = rows[0] - k11 - k12;
            if k13 > cols[2] {
                continue;
            }
            for k21 in 0..=rows[1].min(cols[0] - k11) {
                for k22 in 0..=(rows[1] - k21).min(cols[1] - k12) {
                    let k23 = rows[1] - k21 - k22;
                    if k13 + k23 > cols[2] {
                        continue;
                    }
                    let k = [
                        [k11, k12, k13],
                        [k21, k22, k23],
                        [
                            cols[0] - k11 - k21,
                            cols[1] - k12 - k22,
                            cols[2] - k13 - k23,
                        ],
                    ];
                    let t = KappaTable { alpha, beta, k };
                    if t.is_consistent() && t.row_sum(2) == rows[2] {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::enumerate_cosets;
    use crate::relation::LinRel;

    fn obj(lo: i64, hi: i64) -> Object {
        Object::new(lo, hi).unwrap()
    }

    #[test]
    fn unit_and_zeta_tables() {
        let f = Gf::prime(2).unwrap();
        let a = obj(0, 2);
        let t = canonical_kappa(&Coset::unit(&f, a)).unwrap();
        assert_eq!(t.k, [[0, 0, 0], [0, 2, 0], [0, 0, 0]]);
        for k in 1..3 {
            let w = Window::zeta(&f, a, k);
            let c = w.coset();
            let t = canonical_kappa(&c).unwrap();
            assert_eq!(t.k, [[0, 0, k], [0, 2, 0], [k, 0, 0]]);
            assert_eq!(
                (t.n_minus(), t.n_plus(), t.m_minus(), t.m_plus()),
                (k, k, k, k)
            );
            assert_eq!(t.matrix(&f), *w.mat());
        }
    }

    #[test]
    fn sums_and_invariants_of_j() {
        let f = Gf::prime(2).unwrap();
        for (a, b) in [
            (obj(0, 2), obj(0, 2)),
            (obj(0, 1), obj(1, 2)),
            (obj(-1, 1), obj(0, 1)),
        ] {
            for c in enumerate_cosets(&f, b, a, 2).unwrap() {
                let t = canonical_kappa(&c).unwrap();
                assert!(t.is_consistent());
                let j = t.window(&f).unwrap().coset();
                let inv = j.chi().invariants();
                assert_eq!(inv.rk, t.k[1][1]);
                assert_eq!(inv.ker.dim(), t.k[0][1]);
                assert_eq!(inv.indef.dim(), t.k[1][0]);
                assert_eq!(j.eta(), t.k[2][0]);
                assert_eq!(j.involute().eta(), t.k[0][2]);
                assert_eq!(canonical_kappa(&c.involute()).unwrap(), t.transpose());
            }
        }
    }

    #[test]
    fn completion_fails_below_the_bound() {
        let f = Gf::prime(2).unwrap();
        let c = Coset::new_unchecked(obj(0, 1), obj(1, 2), LinRel::zero(&f, 1, 1), 0);
        assert!(matches!(
            canonical_kappa(&c),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn unit_margin_tables_are_permutations() {
        let a = obj(0, 1);
        let tables = kappa_tables(a, a, (1, 1), (1, 1));
        assert_eq!(tables.len(), 6);
        assert!(tables.iter().all(|t| t.k.iter().flatten().all(|&v| v <= 1)));
    }
}
