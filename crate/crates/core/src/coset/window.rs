//! Finite matrix representatives of double cosets.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Gf};
use crate::linalg::{BlockLayout, Cell, Mat, Subspace};
use crate::relation::LinRel;

use super::kappa::canonical_kappa;
use super::{Coset, Object};

/// An invertible matrix with rows split as `(N-, |α|, N+)` and columns as
/// `(M-, |β|, M+)`. Both index ranges cover the same integer segment.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Window {
    alpha: Object,
    beta: Object,
    n_minus: usize,
    n_plus: usize,
    m_minus: usize,
    m_plus: usize,
    mat: Mat,
}

fn fits(alpha: Object, beta: Object, n: (usize, usize), m: (usize, usize)) -> bool {
    n.0 as i64 - alpha.lo() == m.0 as i64 - beta.lo()
        && n.1 as i64 + alpha.hi() == m.1 as i64 + beta.hi()
}

impl Window {
    pub fn new(
        alpha: Object,
        beta: Object,
        (n_minus, n_plus): (usize, usize),
        (m_minus, m_plus): (usize, usize),
        mat: Mat,
    ) -> Result<Window> {
        if !fits(alpha, beta, (n_minus, n_plus), (m_minus, m_plus)) {
            return Err(Error::LayoutInconsistent(format!(
                "paddings {n_minus},{n_plus} / {m_minus},{m_plus} do not align {alpha} with {beta}"
            )));
        }
        let rows = n_minus + alpha.size() + n_plus;
        let cols = m_minus + beta.size() + m_plus;
        if (mat.rows(), mat.cols()) != (rows, cols) {
            return Err(Error::DimMismatch(format!(
                "matrix is {}x{} but the split needs {rows}x{cols}",
                mat.rows(),
                mat.cols()
            )));
        }
        if !mat.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(Window {
            alpha,
            beta,
            n_minus,
            n_plus,
            m_minus,
            m_plus,
            mat,
        })
    }

    fn assume(
        alpha: Object,
        beta: Object,
        n: (usize, usize),
        m: (usize, usize),
        mat: Mat,
    ) -> Window {
        debug_assert!(fits(alpha, beta, n, m));
        Window {
            alpha,
            beta,
            n_minus: n.0,
            n_plus: n.1,
            m_minus: m.0,
            m_plus: m.1,
            mat,
        }
    }

    /// Identity matrix read as a morphism `β → α`, on the smallest segment
    /// containing both objects.
    pub fn identity(field: &Gf, alpha: Object, beta: Object) -> Window {
        let s = alpha.lo().min(beta.lo());
        let e = alpha.hi().max(beta.hi());
        let n = ((alpha.lo() - s) as usize, (e - alpha.hi()) as usize);
        let m = ((beta.lo() - s) as usize, (e - beta.hi()) as usize);
        Window::assume(alpha, beta, n, m, Mat::identity(field, (e - s) as usize))
    }

    /// Representative of `ζ_α^k`.
    pub fn zeta(field: &Gf, alpha: Object, k: usize) -> Window {
        let sizes = vec![k, alpha.size(), k];
        let mat = BlockLayout::new(sizes.clone(), sizes)
            .with(0, 2, Cell::Identity)
            .with(1, 1, Cell::Identity)
            .with(2, 0, Cell::Identity)
            .assemble(field)
            .expect("square blocks");
        Window::assume(alpha, alpha, (k, k), (k, k), mat)
    }

    pub fn alpha(&self) -> Object {
        self.alpha
    }

    pub fn beta(&self) -> Object {
        self.beta
    }

    pub fn n_minus(&self) -> usize {
        self.n_minus
    }

    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    pub fn m_minus(&self) -> usize {
        self.m_minus
    }

    pub fn m_plus(&self) -> usize {
        self.m_plus
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn field(&self) -> &Gf {
        self.mat.field()
    }

    fn row_splits(&self) -> [usize; 4] {
        let a = self.alpha.size();
        [
            0,
            self.n_minus,
            self.n_minus + a,
            self.n_minus + a + self.n_plus,
        ]
    }

    fn col_splits(&self) -> [usize; 4] {
        let b = self.beta.size();
        [
            0,
            self.m_minus,
            self.m_minus + b,
            self.m_minus + b + self.m_plus,
        ]
    }

    /// Block `a_ij`, 1-based as in the usual 3x3 notation.
    pub fn block(&self, i: usize, j: usize) -> Mat {
        let (r, c) = (self.row_splits(), self.col_splits());
        self.mat.submatrix(r[i - 1]..r[i], c[j - 1]..c[j])
    }

    /// Same split, different matrix.
    pub fn with_mat(&self, mat: Mat) -> Result<Window> {
        Window::new(
            self.alpha,
            self.beta,
            (self.n_minus, self.n_plus),
            (self.m_minus, self.m_plus),
            mat,
        )
    }

    /// The invariant pair of the double coset containing this matrix.
    pub fn coset(&self) -> Coset {
        let field = self.field();
        let (a21, a22) = (self.block(2, 1), self.block(2, 2));
        let (a31, a32) = (self.block(3, 1), self.block(3, 2));
        let (mm, b) = (self.m_minus, self.beta.size());
        let free = a31.hstack(&a32).expect("same rows").nullspace();
        let chi = if free.dim() == 0 {
            LinRel::zero(field, b, self.alpha.size())
        } else {
            let yv = free.basis();
            let v = yv.submatrix(0..yv.rows(), mm..mm + b);
            let image = yv
                .mul(&a21.hstack(&a22).expect("same rows").transpose())
                .expect("widths agree");
            LinRel::new(
                b,
                self.alpha.size(),
                Subspace::row_space(&v.hstack(&image).expect("same rows")),
            )
            .expect("ambient is |β| + |α|")
        };
        Coset::new_unchecked(self.alpha, self.beta, chi, a31.rank())
    }

    /// `ξ` read directly off the matrix.
    pub fn xi(&self) -> usize {
        self.block(2, 1)
            .vstack(&self.block(3, 1))
            .expect("same columns")
            .rank()
    }

    /// `diag(1_μ, A, 1_ν)`, which represents the same double coset.
    pub fn pad(&self, mu: usize, nu: usize) -> Window {
        Window::assume(
            self.alpha,
            self.beta,
            (self.n_minus + mu, self.n_plus + nu),
            (self.m_minus + mu, self.m_plus + nu),
            self.mat.pad_identity(mu, nu),
        )
    }

    /// Matrix representative of `self ⋆ b`.
    pub fn star(&self, b: &Window) -> Result<Window> {
        if self.beta != b.alpha {
            return Err(Error::NotComposable(format!(
                "source {} of the left factor differs from target {} of the right factor",
                self.beta, b.alpha
            )));
        }
        if self.field() != b.field() {
            return Err(Error::FieldMismatch);
        }
        let field = self.field();
        let mm = self.m_minus.max(b.n_minus);
        let mp = self.m_plus.max(b.n_plus);
        let a = self.pad(mm - self.m_minus, mp - self.m_plus);
        let b = b.pad(mm - b.n_minus, mp - b.n_plus);
        let (km, kp) = (b.m_minus, b.m_plus);
        let a_circ = a.mat.pad_identity(mm, mp);
        let g = |i, j| Cell::Given(b.block(i, j));
        let beta = self.beta.size();
        let b_diamond = BlockLayout::new(
            vec![mm, mm, beta, mp, mp],
            vec![km, mm, b.beta.size(), mp, kp],
        )
        .with(0, 0, g(1, 1))
        .with(0, 2, g(1, 2))
        .with(0, 4, g(1, 3))
        .with(1, 1, Cell::Identity)
        .with(2, 0, g(2, 1))
        .with(2, 2, g(2, 2))
        .with(2, 4, g(2, 3))
        .with(3, 3, Cell::Identity)
        .with(4, 0, g(3, 1))
        .with(4, 2, g(3, 2))
        .with(4, 4, g(3, 3))
        .assemble(field)?;
        Ok(Window::assume(
            self.alpha,
            b.beta,
            (mm + a.n_minus, a.n_plus + mp),
            (km + mm, mp + kp),
            a_circ.mul(&b_diamond)?,
        ))
    }

    /// Representative of the adjoint morphism.
    pub fn involute(&self) -> Window {
        Window::assume(
            self.beta,
            self.alpha,
            (self.m_minus, self.m_plus),
            (self.n_minus, self.n_plus),
            self.mat.inverse().expect("window matrices are invertible"),
        )
    }

    /// Header line `N- |a| N+ / M- |b| M+ @ alpha_lo beta_lo` followed by
    /// the matrix, one row per line.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {} / {} {} {} @ {} {}\n",
            self.n_minus,
            self.alpha.size(),
            self.n_plus,
            self.m_minus,
            self.beta.size(),
            self.m_plus,
            self.alpha.lo(),
            self.beta.lo()
        );
        for i in 0..self.mat.rows() {
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

    /// Parses the text form. Without the `@` part the target starts at 0 and
    /// the source is placed where the block sizes force it.
    pub fn parse_text(field: &Gf, text: &str) -> Result<Window> {
        let text = text.trim_start();
        let (header, body) = text.split_once('\n').unwrap_or((text, ""));
        let (sizes, anchor) = match header.split_once('@') {
            Some((s, a)) => (s, Some(a)),
            None => (header, None),
        };
        let (lhs, rhs) = sizes
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("window header {header:?} lacks '/'")))?;
        let nums = |s: &str| -> Result<Vec<usize>> {
            let v = s
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad size {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if v.len() != 3 {
                return Err(Error::Parse(format!("expected three sizes, got {s:?}")));
            }
            Ok(v)
        };
        let (n, m) = (nums(lhs)?, nums(rhs)?);
        let (alo, blo) = match anchor {
            Some(a) => {
                let v = a
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad offset {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                match v[..] {
                    [x, y] => (x, y),
                    _ => return Err(Error::Parse("expected two offsets after '@'".into())),
                }
            }
            None => (0, m[0] as i64 - n[0] as i64),
        };
        let alpha = Object::new(alo, alo + n[1] as i64)?;
        let beta = Object::new(blo, blo + m[1] as i64)?;
        let mat = Mat::parse_text(field, body)?;
        Window::new(alpha, beta, (n[0], n[2]), (m[0], m[2]), mat)
    }
}

impl fmt::Debug for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Window({} <- {}; {})",
            self.alpha,
            self.beta,
            self.to_text().replace('\n', "; ")
        )
    }
}

/// Columns of `vectors`, as a square matrix.
fn columns(field: &Gf, n: usize, vectors: &[Vec<Elem>]) -> Mat {
    Mat::from_fn(field, n, vectors.len(), |i, j| vectors[j][i])
}

/// Canonical 0-1 representative conjugated by block-diagonal changes of basis
/// so that its invariant pair is exactly `c`.
pub fn canonical_window(c: &Coset) -> Result<Window> {
    let field = c.field();
    let kappa = canonical_kappa(c)?;
    let j = kappa.window(field)?;
    let chi = c.chi();
    let (a, b) = (c.alpha().size(), c.beta().size());

    let ker = chi.ker().vectors();
    let dom_ext = chi.dom().extend_basis(&ker)?;
    let mut src = ker.clone();
    src.extend(dom_ext.iter().cloned());
    let rest = Subspace::full(field, b).extend_basis(&src)?;
    src.extend(rest);

    let mut tgt = chi.indef().vectors();
    for d in &dom_ext {
        tgt.push(
            chi.related(d)?
                .ok_or_else(|| Error::InvariantViolation("domain vector without image".into()))?,
        );
    }
    let rest = Subspace::full(field, a).extend_basis(&tgt)?;
    tgt.extend(rest);

    let t_s = columns(field, b, &src);
    let t_t = columns(field, a, &tgt);
    let left = t_t.pad_identity(j.n_minus, j.n_plus);
    let right = t_s.inverse()?.pad_identity(j.m_minus, j.m_plus);
    j.with_mat(left.mul(&j.mat)?.mul(&right)?)
}
