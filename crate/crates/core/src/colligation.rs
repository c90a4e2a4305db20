//! Block matrices `g = (a b; c d)` with a fixed `m x m` corner, their
//! `∘`-product and transfer functions `a + λ b (1 - λ d)^{-1} c`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Gf};
use crate::linalg::{BlockLayout, Cell, Mat};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Colligation {
    m: usize,
    mat: Mat,
}

impl Colligation {
    pub fn new(m: usize, mat: Mat) -> Result<Colligation> {
        if !mat.is_square() || mat.rows() < m {
            return Err(Error::BlockMismatch(format!(
                "a {}x{} matrix has no {m}x{m} corner split",
                mat.rows(),
                mat.cols()
            )));
        }
        if !mat.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(Colligation { m, mat })
    }

    pub fn identity(field: &Gf, m: usize, inner: usize) -> Colligation {
        Colligation {
            m,
            mat: Mat::identity(field, m + inner),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn inner(&self) -> usize {
        self.mat.rows() - self.m
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn field(&self) -> &Gf {
        self.mat.field()
    }

    fn size(&self) -> usize {
        self.mat.rows()
    }

    pub fn a(&self) -> Mat {
        self.mat.submatrix(0..self.m, 0..self.m)
    }

    pub fn b(&self) -> Mat {
        self.mat.submatrix(0..self.m, self.m..self.size())
    }

    pub fn c(&self) -> Mat {
        self.mat.submatrix(self.m..self.size(), 0..self.m)
    }

    pub fn d(&self) -> Mat {
        self.mat.submatrix(self.m..self.size(), self.m..self.size())
    }

    /// `diag(g, 1_k)`, the same class element.
    pub fn pad(&self, k: usize) -> Colligation {
        Colligation {
            m: self.m,
            mat: self.mat.pad_identity(0, k),
        }
    }

    /// `(a b 0; c d 0; 0 0 1) (p 0 q; 0 1 0; r 0 t)`.
    pub fn circ(&self, h: &Colligation) -> Result<Colligation> {
        if self.m != h.m {
            return Err(Error::BlockMismatch(format!(
                "corner sizes {} and {} differ",
                self.m, h.m
            )));
        }
        if self.field() != h.field() {
            return Err(Error::FieldMismatch);
        }
        let field = self.field();
        let (n, k) = (self.inner(), h.inner());
        let left = BlockLayout::new(vec![self.m, n, k], vec![self.m, n, k])
            .with(0, 0, Cell::Given(self.a()))
            .with(0, 1, Cell::Given(self.b()))
            .with(1, 0, Cell::Given(self.c()))
            .with(1, 1, Cell::Given(self.d()))
            .with(2, 2, Cell::Identity)
            .assemble(field)?;
        let right = BlockLayout::new(vec![self.m, n, k], vec![self.m, n, k])
            .with(0, 0, Cell::Given(h.a()))
            .with(0, 2, Cell::Given(h.b()))
            .with(1, 1, Cell::Identity)
            .with(2, 0, Cell::Given(h.c()))
            .with(2, 2, Cell::Given(h.d()))
            .assemble(field)?;
        Ok(Colligation {
            m: self.m,
            mat: left.mul(&right)?,
        })
    }

    /// `diag(1_m, h) g diag(1_m, h)^{-1}`.
    pub fn conjugate(&self, h: &Mat) -> Result<Colligation> {
        if h.rows() != self.inner() || !h.is_square() {
            return Err(Error::BlockMismatch(format!(
                "conjugator is {}x{}, inner size is {}",
                h.rows(),
                h.cols(),
                self.inner()
            )));
        }
        let big = h.pad_identity(self.m, 0);
        Ok(Colligation {
            m: self.m,
            mat: big.mul(&self.mat)?.mul(&big.inverse()?)?,
        })
    }

    pub fn transfer(&self, lambda: Elem) -> Result<Mat> {
        let field = self.field();
        let n = self.inner();
        let pencil = Mat::identity(field, n).sub(&self.d().scale(lambda))?;
        let resolvent = pencil
            .inverse()
            .map_err(|_| Error::SingularPencil(field.format_elem(lambda)))?;
        let tail = self.b().mul(&resolvent)?.mul(&self.c())?.scale(lambda);
        self.a().add(&tail)
    }

    /// Transfer at every point of the field; `None` where the pencil is singular.
    pub fn transfer_sweep(&self) -> Vec<(Elem, Option<Mat>)> {
        self.field()
            .elements()
            .map(|l| (l, self.transfer(l).ok()))
            .collect()
    }

    /// Header `m n` followed by the matrix, one row per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.m, self.inner());
        for i in 0..self.size() {
            let row: Vec<String> = self
                .mat
                .row(i)
                .iter()
                .map(|&e| self.field().format_elem(e))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(field: &Gf, text: &str) -> Result<Colligation> {
        let text = text.trim_start();
        let (header, body) = text.split_once('\n').unwrap_or((text, ""));
        let sizes = header
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad size {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let [m, n] = sizes[..] else {
            return Err(Error::Parse(format!(
                "expected header \"m n\", got {header:?}"
            )));
        };
        let mat = Mat::parse_text(field, body)?;
        if (mat.rows(), mat.cols()) != (m + n, m + n) {
            return Err(Error::Parse(format!(
                "header announces {0}x{0}, matrix is {1}x{2}",
                m + n,
                mat.rows(),
                mat.cols()
            )));
        }
        Colligation::new(m, mat)
    }
}

impl fmt::Debug for Colligation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Colligation({}+{}; {})",
            self.m,
            self.inner(),
            self.mat.to_text()
        )
    }
}

/// Whether conjugating the inner block by `h` leaves the transfer function
/// unchanged at every point where both pencils are invertible.
pub fn transfer_conjugation_invariance(g: &Colligation, h: &Mat) -> Result<bool> {
    let conj = g.conjugate(h)?;
    for lambda in g.field().elements() {
        if let (Ok(x), Ok(y)) = (g.transfer(lambda), conj.transfer(lambda)) {
            if x != y {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transfer_examples() {
        let f3 = Gf::prime(3).unwrap();
        let swap = Colligation::new(1, Mat::from_ints(&f3, &[&[0, 1], &[1, 0]])).unwrap();
        for l in f3.elements() {
            assert_eq!(swap.transfer(l).unwrap(), Mat::column(&f3, &[l]));
        }
        // the pencil of the identity is singular only at λ = 1
        let id = Colligation::identity(&f3, 2, 2);
        for l in f3.elements() {
            match id.transfer(l) {
                Ok(t) => assert_eq!(t, Mat::identity(&f3, 2)),
                Err(e) => assert!(l == Elem::ONE && matches!(e, Error::SingularPencil(_))),
            }
        }
        let g = Colligation::new(
            1,
            Mat::from_ints(&f3, &[&[2, 1, 0], &[1, 1, 1], &[0, 1, 1]]),
        )
        .unwrap();
        assert_eq!(g.transfer(Elem::ZERO).unwrap(), g.a());
    }

    #[test]
    fn singular_pencil_is_reported() {
        let f2 = Gf::prime(2).unwrap();
        // d = 1, so 1 - λd vanishes at λ = 1
        let g = Colligation::new(1, Mat::from_ints(&f2, &[&[0, 1], &[1, 1]])).unwrap();
        assert!(matches!(
            g.transfer(Elem::ONE),
            Err(Error::SingularPencil(_))
        ));
        assert!(g.transfer(Elem::ZERO).is_ok());
        let sweep = g.transfer_sweep();
        assert!(sweep[0].1.is_some() && sweep[1].1.is_none());
    }

    #[test]
    fn circ_with_identity_is_padding() {
        let f3 = Gf::prime(3).unwrap();
        let g = Colligation::new(
            1,
            Mat::from_ints(&f3, &[&[2, 1, 0], &[1, 1, 1], &[0, 1, 1]]),
        )
        .unwrap();
        let e = Colligation::identity(&f3, 1, 1);
        assert_eq!(g.circ(&e).unwrap(), g.pad(1));
        assert!(matches!(
            g.circ(&Colligation::identity(&f3, 2, 0)),
            Err(Error::BlockMismatch(_))
        ));
    }

    #[test]
    fn multiplicative_and_invariant() {
        let f5 = Gf::prime(5).unwrap();
        let g = Colligation::new(
            1,
            Mat::from_ints(&f5, &[&[1, 2, 0], &[3, 0, 1], &[1, 1, 4]]),
        )
        .unwrap();
        let h = Colligation::new(1, Mat::from_ints(&f5, &[&[2, 1], &[1, 4]])).unwrap();
        let gh = g.circ(&h).unwrap();
        for l in f5.elements() {
            if let (Ok(x), Ok(y)) = (g.transfer(l), h.transfer(l)) {
                assert_eq!(gh.transfer(l).unwrap(), x.mul(&y).unwrap());
            }
        }
        let c = Mat::from_ints(&f5, &[&[1, 2], &[0, 3]]);
        assert!(transfer_conjugation_invariance(&g, &c).unwrap());
        assert!(transfer_conjugation_invariance(&g, &Mat::identity(&f5, 2)).unwrap());
        let padded = g.pad(2);
        for l in f5.elements() {
            if let (Ok(x), Ok(y)) = (padded.transfer(l), g.transfer(l)) {
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let f4 = Gf::of_order(4).unwrap();
        let g = Colligation::new(
            1,
            Mat::from_fn(&f4, 2, 2, |i, j| if i == j { f4.x() } else { Elem::ONE }),
        )
        .unwrap();
        assert_eq!(Colligation::parse_text(&f4, &g.to_text()).unwrap(), g);
        assert!(Colligation::parse_text(&f4, "1 2\n1 0\n0 1").is_err());
    }
}
