//! Dense exact matrices over `F_q` and canonical subspaces.
//!
//! Matrices act on column vectors from the left. Subspaces are stored by the
//! reduced row echelon form of a spanning set, which makes equality of
//! subspaces equality of their basis matrices.

use std::fmt;
use std::ops::{Index, Range};

use crate::error::{Error, Result};
use crate::gf::{Elem, Gf};

/// Upper bound on `q^n` for exhaustive subspace enumeration.
pub const ENUMERATION_LIMIT: u64 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
    field: Gf,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Mat,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Mat {
    pub fn zeros(field: &Gf, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &Gf, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Elem::ONE;
        }
        m
    }

    pub fn from_fn(
        field: &Gf,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            rows,
            cols,
            data,
            field: field.clone(),
        }
    }

    pub fn from_rows(field: &Gf, cols: usize, rows: &[Vec<Elem>]) -> Result<Mat> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimMismatch(format!(
                    "row of length {} in a {cols}-column matrix",
                    r.len()
                )));
            }
            if let Some(bad) = r.iter().find(|e| !field.contains(**e)) {
                return Err(Error::Parse(format!(
                    "element code {} outside {field}",
                    bad.code()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Mat {
            rows: rows.len(),
            cols,
            data,
            field: field.clone(),
        })
    }

    /// Builds a matrix from integer rows reduced into the prime subfield.
    pub fn from_ints(field: &Gf, rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_fn(field, rows.len(), cols, |i, j| field.from_int(rows[i][j]))
    }

    /// Single column vector.
    pub fn column(field: &Gf, v: &[Elem]) -> Mat {
        Mat::from_fn(field, v.len(), 1, |i, _| v[i])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Raw entries in row-major order.
    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    fn check_field(&self, other: &Mat) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimMismatch("matrix sum of different shapes".into()));
        }
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Mat {
            data,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.add(&other.scale(self.field.neg(Elem::ONE)))
    }

    pub fn scale(&self, c: Elem) -> Mat {
        let f = &self.field;
        Mat {
            data: self.data.iter().map(|&a| f.mul(c, a)).collect(),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Mat {
        Mat::from_fn(&self.field, rows.len(), cols.len(), |i, j| {
            self.get(rows.start + i, cols.start + j)
        })
    }

    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimMismatch(
                "hstack of matrices with different row counts".into(),
            ));
        }
        Ok(Mat::from_fn(
            &self.field,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j)
                } else {
                    other.get(i, j - self.cols)
                }
            },
        ))
    }

    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimMismatch(
                "vstack of matrices with different column counts".into(),
            ));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
            field: self.field.clone(),
        })
    }

    /// `diag(1_before, self, 1_after)`.
    pub fn pad_identity(&self, before: usize, after: usize) -> Mat {
        BlockLayout::new(
            vec![before, self.rows, after],
            vec![before, self.cols, after],
        )
        .with(0, 0, Cell::Identity)
        .with(1, 1, Cell::Given(self.clone()))
        .with(2, 2, Cell::Identity)
        .assemble(&self.field)
        .expect("padding blocks are consistent")
    }

    /// Gauss-Jordan elimination; pivots are chosen as the first nonzero entry
    /// in each column, scanning rows top-down.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(inv, v));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::DimMismatch(format!(
                "inverse of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(&self.field, n))?;
        let rr = aug.rref();
        if rr.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) || rr.pivots.len() < n {
            return Err(Error::Singular);
        }
        Ok(rr.reduced.submatrix(0..n, n..2 * n))
    }

    /// Solutions `x` of `self * x = 0`, as a subspace of `F^cols`.
    pub fn nullspace(&self) -> Subspace {
        let f = &self.field;
        let rr = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rr.pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Elem::ZERO; self.cols];
            v[free] = Elem::ONE;
            for (i, &p) in rr.pivots.iter().enumerate() {
                v[p] = f.neg(rr.reduced.get(i, free));
            }
            basis.push(v);
        }
        Subspace::span(f, self.cols, &basis).expect("rows have the ambient length")
    }

    /// Full solution set of `self * x = b` as `particular + nullspace`, or
    /// `None` when the system is inconsistent.
    pub fn solve_affine(&self, b: &Mat) -> Result<Option<(Mat, Subspace)>> {
        if b.cols != 1 || b.rows != self.rows {
            return Err(Error::DimMismatch(format!(
                "right-hand side {}x{} for a {}x{} system",
                b.rows, b.cols, self.rows, self.cols
            )));
        }
        let rr = self.hstack(b)?.rref();
        if rr.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(&self.field, self.cols, 1);
        for (i, &p) in rr.pivots.iter().enumerate() {
            x.set(p, 0, rr.reduced.get(i, self.cols));
        }
        Ok(Some((x, self.nullspace())))
    }

    /// Text form: rows separated by `;`, entries by whitespace.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&e| self.field.format_elem(e))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("; ")
    }

    /// Parses the text form. Rows are split on `;` when present, otherwise on
    /// line breaks. An empty input is the `0 x 0` matrix.
    pub fn parse_text(field: &Gf, text: &str) -> Result<Mat> {
        let text = text.trim();
        let pieces: Vec<&str> = if text.contains(';') {
            text.split(';').collect()
        } else {
            text.lines().collect()
        };
        let mut rows = Vec::new();
        for piece in pieces {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            rows.push(
                piece
                    .split_whitespace()
                    .map(|t| field.parse_elem(t))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let cols = rows.first().map_or(0, Vec::len);
        Mat::from_rows(field, cols, &rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Elem;

    fn index(&self, (i, j): (usize, usize)) -> &Elem {
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[{}]", self.rows, self.cols, self.to_text())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&e| self.field.format_elem(e))
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// One cell of a [`BlockLayout`].
#[derive(Clone, Debug)]
pub enum Cell {
    Zero,
    Identity,
    Given(Mat),
}

/// A block matrix description: row heights, column widths and a grid of cells.
#[derive(Clone, Debug)]
pub struct BlockLayout {
    pub row_blocks: Vec<usize>,
    pub col_blocks: Vec<usize>,
    pub cells: Vec<Vec<Cell>>,
}

impl BlockLayout {
    /// All-zero layout with the given block sizes.
    pub fn new(row_blocks: Vec<usize>, col_blocks: Vec<usize>) -> BlockLayout {
        let cells = vec![vec![Cell::Zero; col_blocks.len()]; row_blocks.len()];
        BlockLayout {
            row_blocks,
            col_blocks,
            cells,
        }
    }

    pub fn with(mut self, i: usize, j: usize, cell: Cell) -> BlockLayout {
        self.cells[i][j] = cell;
        self
    }

    pub fn set(&mut self, i: usize, j: usize, cell: Cell) {
        self.cells[i][j] = cell;
    }

    pub fn assemble(&self, field: &Gf) -> Result<Mat> {
        block_assemble(field, self)
    }
}

/// Places every cell of the layout into one matrix.
pub fn block_assemble(field: &Gf, layout: &BlockLayout) -> Result<Mat> {
    let bad = |msg: String| Err(Error::LayoutInconsistent(msg));
    if layout.cells.len() != layout.row_blocks.len()
        || layout
            .cells
            .iter()
            .any(|r| r.len() != layout.col_blocks.len())
    {
        return bad("cell grid does not match the block grid".into());
    }
    let rows: usize = layout.row_blocks.iter().sum();
    let cols: usize = layout.col_blocks.iter().sum();
    let mut out = Mat::zeros(field, rows, cols);
    let mut r0 = 0;
    for (bi, &h) in layout.row_blocks.iter().enumerate() {
        let mut c0 = 0;
        for (bj, &w) in layout.col_blocks.iter().enumerate() {
            match &layout.cells[bi][bj] {
                Cell::Zero => {}
                Cell::Identity => {
                    if h != w {
                        return bad(format!("identity cell ({bi},{bj}) in a {h}x{w} block"));
                    }
                    for k in 0..h {
                        out.set(r0 + k, c0 + k, Elem::ONE);
                    }
                }
                Cell::Given(m) => {
                    if (m.rows, m.cols) != (h, w) {
                        return bad(format!(
                            "cell ({bi},{bj}) is {}x{} in a {h}x{w} block",
                            m.rows, m.cols
                        ));
                    }
                    if m.field != *field {
                        return Err(Error::FieldMismatch);
                    }
                    for i in 0..h {
                        for j in 0..w {
                            out.set(r0 + i, c0 + j, m.get(i, j));
                        }
                    }
                }
            }
            c0 += w;
        }
        r0 += h;
    }
    Ok(out)
}

/// Linear subspace of `F^n`, stored by its reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_rref(ambient: usize, rr: Rref) -> Subspace {
        let rank = rr.rank();
        Subspace {
            ambient,
            basis: rr.reduced.submatrix(0..rank, 0..ambient),
            pivots: rr.pivots,
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Mat) -> Subspace {
        Subspace::from_rref(m.cols, m.rref())
    }

    pub fn span(field: &Gf, ambient: usize, vectors: &[Vec<Elem>]) -> Result<Subspace> {
        Ok(Subspace::row_space(&Mat::from_rows(
            field, ambient, vectors,
        )?))
    }

    pub fn zero(field: &Gf, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Mat::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Gf, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Mat::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the standard basis vectors `e_i`, `i` in `coords`.
    pub fn coordinate(field: &Gf, ambient: usize, coords: Range<usize>) -> Subspace {
        let vecs: Vec<Vec<Elem>> = coords
            .map(|i| {
                (0..ambient)
                    .map(|j| if i == j { Elem::ONE } else { Elem::ZERO })
                    .collect()
            })
            .collect();
        Subspace::span(field, ambient, &vecs).expect("coordinate vectors have the ambient length")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn field(&self) -> &Gf {
        self.basis.field()
    }

    /// Basis in reduced row echelon form, one vector per row.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Elem>> {
        self.basis.row_vecs()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimMismatch(format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimMismatch(format!(
                "vector of length {} in F^{}",
                v.len(),
                self.ambient
            )));
        }
        let f = self.field();
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c.is_zero() {
                continue;
            }
            for (j, wj) in w.iter_mut().enumerate() {
                *wj = f.sub(*wj, f.mul(c, self.basis.get(i, j)));
            }
        }
        Ok(w.iter().all(|e| e.is_zero()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Vectors orthogonal to the subspace under the standard bilinear form.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.nullspace()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        for v in self.vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under the coordinate projection onto `coords`.
    pub fn project(&self, coords: Range<usize>) -> Subspace {
        let m = self.basis.submatrix(0..self.basis.rows(), coords.clone());
        let mut s = Subspace::row_space(&m);
        s.ambient = coords.len();
        s
    }

    /// Embeds into `F^ambient` with coordinates shifted by `offset`.
    pub fn embed(&self, ambient: usize, offset: usize) -> Result<Subspace> {
        if offset + self.ambient > ambient {
            return Err(Error::DimMismatch("embedding does not fit".into()));
        }
        let m = Mat::from_fn(self.field(), self.dim(), ambient, |i, j| {
            if j >= offset && j < offset + self.ambient {
                self.basis.get(i, j - offset)
            } else {
                Elem::ZERO
            }
        });
        Ok(Subspace::row_space(&m))
    }

    /// Appends to `start` the rows of this subspace's echelon basis, in order,
    /// that are not already in the span. Returns only the added vectors.
    pub fn extend_basis(&self, start: &[Vec<Elem>]) -> Result<Vec<Vec<Elem>>> {
        let mut current = Subspace::span(self.field(), self.ambient, start)?;
        let mut added = Vec::new();
        for v in self.vectors() {
            if !current.contains(&v)? {
                added.push(v.clone());
                let mut all = current.vectors();
                all.push(v);
                current = Subspace::span(self.field(), self.ambient, &all)?;
            }
        }
        Ok(added)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(F^{}; [{}])",
            self.ambient,
            self.basis.to_text()
        )
    }
}

pub fn enumeration_guard(field: &Gf, n: usize) -> Result<()> {
    let q = field.order() as u64;
    let mut total: u64 = 1;
    for _ in 0..n {
        total = total.saturating_mul(q);
        if total > ENUMERATION_LIMIT {
            return Err(Error::TooLarge(format!("q^n = {}^{} exceeds 2^20", q, n)));
        }
    }
    Ok(())
}

/// Every subspace of `F^n` exactly once: by dimension, then pivot set in
/// lexicographic order, then free entries counted in base `q`.
pub fn enumerate_subspaces(field: &Gf, n: usize) -> Result<SubspaceIter> {
    enumeration_guard(field, n)?;
    Ok(SubspaceIter::new(field, n))
}

pub struct SubspaceIter {
    field: Gf,
    n: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counter: Vec<u32>,
    done: bool,
}

impl SubspaceIter {
    fn new(field: &Gf, n: usize) -> SubspaceIter {
        let mut it = SubspaceIter {
            field: field.clone(),
            n,
            pivots: Vec::new(),
            free: Vec::new(),
            counter: Vec::new(),
            done: false,
        };
        it.reset_free();
        it
    }

    fn reset_free(&mut self) {
        self.free.clear();
        for (i, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.n {
                if !self.pivots.contains(&c) {
                    self.free.push((i, c));
                }
            }
        }
        self.counter = vec![0; self.free.len()];
    }

    fn next_pivots(&mut self) -> bool {
        let k = self.pivots.len();
        // next k-combination of 0..n in lexicographic order
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < self.n - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        if k < self.n {
            self.pivots = (0..k + 1).collect();
            return true;
        }
        false
    }

    fn current(&self) -> Subspace {
        let k = self.pivots.len();
        let mut m = Mat::zeros(&self.field, k, self.n);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, Elem::ONE);
        }
        for (&(i, c), &v) in self.free.iter().zip(&self.counter) {
            m.set(i, c, self.field.elem_from_code(v).expect("counter below q"));
        }
        Subspace {
            ambient: self.n,
            basis: m,
            pivots: self.pivots.clone(),
        }
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let out = self.current();
        let q = self.field.order();
        let mut carry = true;
        for c in self.counter.iter_mut() {
            *c += 1;
            if *c < q {
                carry = false;
                break;
            }
            *c = 0;
        }
        if carry {
            if self.next_pivots() {
                self.reset_free();
            } else {
                self.done = true;
            }
        }
        Some(out)
    }
}
