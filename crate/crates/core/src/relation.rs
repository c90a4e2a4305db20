//! Linear relations `V ⇉ W` over `F_q`, stored as subspaces of `V ⊕ W`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Gf};
use crate::linalg::{enumeration_guard, Mat, Subspace, SubspaceIter};

/// A subspace of `F^m ⊕ F^n`, source coordinates first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinRel {
    m: usize,
    n: usize,
    space: Subspace,
}

/// The five standard invariants of a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub ker: Subspace,
    pub im: Subspace,
    pub dom: Subspace,
    pub indef: Subspace,
    pub rk: usize,
}

impl LinRel {
    pub fn new(m: usize, n: usize, space: Subspace) -> Result<LinRel> {
        if space.ambient() != m + n {
            return Err(Error::DimMismatch(format!(
                "subspace of F^{} cannot be a relation F^{m} ⇉ F^{n}",
                space.ambient()
            )));
        }
        Ok(LinRel { m, n, space })
    }

    /// Span of the given `(source | target)` rows.
    pub fn span(field: &Gf, m: usize, n: usize, rows: &[Vec<Elem>]) -> Result<LinRel> {
        LinRel::new(m, n, Subspace::span(field, m + n, rows)?)
    }

    /// Graph `{(v, T v)}` of an `n x m` operator.
    pub fn graph(t: &Mat) -> LinRel {
        let (n, m) = (t.rows(), t.cols());
        let tt = t.transpose();
        let rows = Mat::identity(t.field(), m)
            .hstack(&tt)
            .expect("row counts agree");
        LinRel {
            m,
            n,
            space: Subspace::row_space(&rows),
        }
    }

    pub fn identity(field: &Gf, n: usize) -> LinRel {
        LinRel::graph(&Mat::identity(field, n))
    }

    pub fn zero(field: &Gf, m: usize, n: usize) -> LinRel {
        LinRel {
            m,
            n,
            space: Subspace::zero(field, m + n),
        }
    }

    pub fn full(field: &Gf, m: usize, n: usize) -> LinRel {
        LinRel {
            m,
            n,
            space: Subspace::full(field, m + n),
        }
    }

    pub fn src_dim(&self) -> usize {
        self.m
    }

    pub fn tgt_dim(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn field(&self) -> &Gf {
        self.space.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn source_block(&self) -> Mat {
        let b = self.space.basis();
        b.submatrix(0..b.rows(), 0..self.m)
    }

    fn target_block(&self) -> Mat {
        let b = self.space.basis();
        b.submatrix(0..b.rows(), self.m..self.m + self.n)
    }

    /// Combinations of basis rows whose `zeroed` block vanishes, read in `kept`.
    fn slice(zeroed: &Mat, kept: &Mat, ambient: usize) -> Subspace {
        let field = kept.field();
        if zeroed.rows() == 0 {
            return Subspace::zero(field, ambient);
        }
        let coeffs = zeroed.transpose().nullspace();
        if coeffs.dim() == 0 {
            return Subspace::zero(field, ambient);
        }
        Subspace::row_space(&coeffs.basis().mul(kept).expect("coefficient width matches"))
    }

    /// `{v : (v, 0) ∈ P}`.
    pub fn ker(&self) -> Subspace {
        LinRel::slice(&self.target_block(), &self.source_block(), self.m)
    }

    /// `{w : (0, w) ∈ P}`.
    pub fn indef(&self) -> Subspace {
        LinRel::slice(&self.source_block(), &self.target_block(), self.n)
    }

    pub fn dom(&self) -> Subspace {
        self.space.project(0..self.m)
    }

    pub fn im(&self) -> Subspace {
        self.space.project(self.m..self.m + self.n)
    }

    pub fn rank(&self) -> usize {
        self.dim() - self.ker().dim() - self.indef().dim()
    }

    pub fn invariants(&self) -> Invariants {
        let (ker, indef) = (self.ker(), self.indef());
        let rk = self.dim() - ker.dim() - indef.dim();
        Invariants {
            ker,
            im: self.im(),
            dom: self.dom(),
            indef,
            rk,
        }
    }

    /// The product `self ∘ p`, where `p: V ⇉ W` and `self: W ⇉ Y`.
    ///
    /// Pairs of basis combinations that agree on `W` are found as one null
    /// space; their outer coordinates span the product.
    pub fn compose(&self, p: &LinRel) -> Result<LinRel> {
        if self.field() != p.field() {
            return Err(Error::FieldMismatch);
        }
        if p.n != self.m {
            return Err(Error::DimMismatch(format!(
                "cannot compose F^{} ⇉ F^{} after F^{} ⇉ F^{}",
                self.m, self.n, p.m, p.n
            )));
        }
        let field = self.field();
        let (pv, pw) = (p.source_block(), p.target_block());
        let (qw, qy) = (self.source_block(), self.target_block());
        let (dp, dq) = (pv.rows(), qw.rows());
        let minus_one = field.neg(Elem::ONE);
        let link = Mat::from_fn(field, self.m, dp + dq, |i, j| {
            if j < dp {
                pw.get(j, i)
            } else {
                field.mul(minus_one, qw.get(j - dp, i))
            }
        });
        let sols = link.nullspace();
        let outer = Mat::from_fn(field, dp + dq, p.m + self.n, |i, j| {
            match (i < dp, j < p.m) {
                (true, true) => pv.get(i, j),
                (false, false) => qy.get(i - dp, j - p.m),
                _ => Elem::ZERO,
            }
        });
        let space = if sols.dim() == 0 {
            Subspace::zero(field, p.m + self.n)
        } else {
            Subspace::row_space(&sols.basis().mul(&outer)?)
        };
        Ok(LinRel {
            m: p.m,
            n: self.n,
            space,
        })
    }

    /// `{(w, v) : (v, w) ∈ P}`.
    pub fn pseudoinverse(&self) -> LinRel {
        let b = self.space.basis();
        let swapped = Mat::from_fn(self.field(), b.rows(), self.m + self.n, |i, j| {
            if j < self.n {
                b.get(i, self.m + j)
            } else {
                b.get(i, j - self.n)
            }
        });
        LinRel {
            m: self.n,
            n: self.m,
            space: Subspace::row_space(&swapped),
        }
    }

    /// Some `w` with `(v, w) ∈ P`, if `v ∈ dom P`.
    pub fn related(&self, v: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if v.len() != self.m {
            return Err(Error::DimMismatch(format!(
                "vector of length {} in F^{}",
                v.len(),
                self.m
            )));
        }
        let field = self.field();
        let src = self.source_block();
        let Some((c, _)) = src.transpose().solve_affine(&Mat::column(field, v))? else {
            return Ok(None);
        };
        let w = c.transpose().mul(&self.target_block())?;
        Ok(Some(w.row(0).to_vec()))
    }

    pub fn contains(&self, v: &[Elem], w: &[Elem]) -> Result<bool> {
        let mut pair = v.to_vec();
        pair.extend_from_slice(w);
        self.space.contains(&pair)
    }

    pub fn to_json(&self) -> RelJson {
        let f = self.field();
        RelJson {
            m: self.m,
            n: self.n,
            basis: self
                .space
                .vectors()
                .iter()
                .map(|r| r.iter().map(|&e| f.format_elem(e)).collect())
                .collect(),
        }
    }

    pub fn from_json(field: &Gf, j: &RelJson) -> Result<LinRel> {
        let rows = j
            .basis
            .iter()
            .map(|r| {
                r.iter()
                    .map(|t| field.parse_elem(t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        LinRel::span(field, j.m, j.n, &rows).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Header `m n`, then the echelon basis of pairs `(v | w)`, one per line.
    pub fn to_text(&self) -> String {
        let f = self.field();
        let mut out = format!("{} {}\n", self.m, self.n);
        for r in self.space.vectors() {
            let row: Vec<String> = r.iter().map(|&e| f.format_elem(e)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text form; the rows may be any spanning set.
    pub fn parse_text(field: &Gf, text: &str) -> Result<LinRel> {
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
        let rows = if body.trim().is_empty() {
            Vec::new()
        } else {
            Mat::parse_text(field, body)?.row_vecs()
        };
        if rows.iter().any(|r| r.len() != m + n) {
            return Err(Error::Parse(format!("rows must have {} entries", m + n)));
        }
        LinRel::span(field, m, n, &rows)
    }
}

impl fmt::Debug for LinRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinRel({} ⇉ {}; [{}])",
            self.m,
            self.n,
            self.space.basis().to_text()
        )
    }
}

/// Serialized relation; basis rows are in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelJson {
    pub m: usize,
    pub n: usize,
    pub basis: Vec<Vec<String>>,
}

/// Every relation `F^m ⇉ F^n`, each once.
pub fn enumerate_relations(field: &Gf, m: usize, n: usize) -> Result<RelIter> {
    enumeration_guard(field, m + n)?;
    Ok(RelIter {
        m,
        n,
        inner: crate::linalg::enumerate_subspaces(field, m + n)?,
    })
}

pub struct RelIter {
    m: usize,
    n: usize,
    inner: SubspaceIter,
}

impl Iterator for RelIter {
    type Item = LinRel;

    fn next(&mut self) -> Option<LinRel> {
        self.inner.next().map(|space| LinRel {
            m: self.m,
            n: self.n,
            space,
        })
    }
}
