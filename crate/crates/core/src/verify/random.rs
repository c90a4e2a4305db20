//! Seeded samplers for fields, matrices, relations, morphisms and windows.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coset::{canonical_window, eta_bound, Coset, Object, Window};
use crate::gf::{Elem, Gf};
use crate::linalg::{BlockLayout, Cell, Mat};
use crate::relation::LinRel;

/// Independent stream `stream` under the root `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn elem(rng: &mut impl Rng, field: &Gf) -> Elem {
    field
        .elem_from_code(rng.random_range(0..field.order()))
        .expect("code below q")
}

pub fn unit(rng: &mut impl Rng, field: &Gf) -> Elem {
    field
        .elem_from_code(rng.random_range(1..field.order()))
        .expect("code below q")
}

pub fn mat(rng: &mut impl Rng, field: &Gf, rows: usize, cols: usize) -> Mat {
    Mat::from_fn(field, rows, cols, |_, _| elem(rng, field))
}

pub fn invertible(rng: &mut impl Rng, field: &Gf, n: usize) -> Mat {
    loop {
        let m = mat(rng, field, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Object with `lo` in `-1..=1` and size at most `max_size`.
pub fn object(rng: &mut impl Rng, max_size: usize) -> Object {
    let lo = rng.random_range(-1..=1);
    Object::new(lo, lo + rng.random_range(0..=max_size) as i64).expect("lo <= hi")
}

pub fn relation(rng: &mut impl Rng, field: &Gf, m: usize, n: usize) -> LinRel {
    let d = rng.random_range(0..=m + n);
    let rows: Vec<Vec<Elem>> = (0..d)
        .map(|_| (0..m + n).map(|_| elem(rng, field)).collect())
        .collect();
    LinRel::span(field, m, n, &rows).expect("rows have length m + n")
}

/// Morphism `β → α` with `η` at most `extra` above its lower bound.
pub fn coset(rng: &mut impl Rng, field: &Gf, alpha: Object, beta: Object, extra: usize) -> Coset {
    let chi = relation(rng, field, beta.size(), alpha.size());
    let eta = eta_bound(alpha, beta, &chi).max(0) as usize + rng.random_range(0..=extra);
    Coset::new(alpha, beta, chi, eta).expect("eta respects the bound")
}

/// The four generator families of the subgroup `Q̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `diag(μ, 1, ν)`
    Diag,
    /// block `(1,2)`
    Phi,
    /// block `(1,3)`
    Theta,
    /// block `(2,3)`
    Psi,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Diag, Family::Phi, Family::Theta, Family::Psi];

    pub fn name(self) -> &'static str {
        match self {
            Family::Diag => "diag",
            Family::Phi => "phi",
            Family::Theta => "theta",
            Family::Psi => "psi",
        }
    }
}

/// Random generator of `Q̃` for the split `(lo, mid, hi)`.
pub fn generator(rng: &mut impl Rng, field: &Gf, family: Family, split: [usize; 3]) -> Mat {
    let mut layout = BlockLayout::new(split.to_vec(), split.to_vec())
        .with(0, 0, Cell::Identity)
        .with(1, 1, Cell::Identity)
        .with(2, 2, Cell::Identity);
    match family {
        Family::Diag => {
            layout.set(0, 0, Cell::Given(invertible(rng, field, split[0])));
            layout.set(2, 2, Cell::Given(invertible(rng, field, split[2])));
        }
        Family::Phi => layout.set(0, 1, Cell::Given(mat(rng, field, split[0], split[1]))),
        Family::Theta => layout.set(0, 2, Cell::Given(mat(rng, field, split[0], split[2]))),
        Family::Psi => layout.set(1, 2, Cell::Given(mat(rng, field, split[1], split[2]))),
    }
    layout.assemble(field).expect("blocks match the split")
}

/// Random element of `Q̃`: block upper triangular, identity in the middle.
pub fn q_element(rng: &mut impl Rng, field: &Gf, split: [usize; 3]) -> Mat {
    BlockLayout::new(split.to_vec(), split.to_vec())
        .with(0, 0, Cell::Given(invertible(rng, field, split[0])))
        .with(0, 1, Cell::Given(mat(rng, field, split[0], split[1])))
        .with(0, 2, Cell::Given(mat(rng, field, split[0], split[2])))
        .with(1, 1, Cell::Identity)
        .with(1, 2, Cell::Given(mat(rng, field, split[1], split[2])))
        .with(2, 2, Cell::Given(invertible(rng, field, split[2])))
        .assemble(field)
        .expect("blocks match the split")
}

pub fn row_split(w: &Window) -> [usize; 3] {
    [w.n_minus(), w.alpha().size(), w.n_plus()]
}

pub fn col_split(w: &Window) -> [usize; 3] {
    [w.m_minus(), w.beta().size(), w.m_plus()]
}

/// Window `β → α`. Half of the draws are uniform invertible matrices with
/// up to `max_pad` extra padding; the rest are scrambled canonical forms of
/// random morphisms, which reach small `η` and degenerate relations.
pub fn window(
    rng: &mut impl Rng,
    field: &Gf,
    alpha: Object,
    beta: Object,
    max_pad: usize,
) -> Window {
    if rng.random_bool(0.5) {
        let n_minus = (alpha.lo() - beta.lo()).max(0) as usize + rng.random_range(0..=max_pad);
        let n_plus = (beta.hi() - alpha.hi()).max(0) as usize + rng.random_range(0..=max_pad);
        let m_minus = (n_minus as i64 - alpha.lo() + beta.lo()) as usize;
        let m_plus = (n_plus as i64 + alpha.hi() - beta.hi()) as usize;
        let n = n_minus + alpha.size() + n_plus;
        Window::new(
            alpha,
            beta,
            (n_minus, n_plus),
            (m_minus, m_plus),
            invertible(rng, field, n),
        )
        .expect("sizes align and the matrix is invertible")
    } else {
        let c = coset(rng, field, alpha, beta, 2);
        let w = canonical_window(&c)
            .expect("valid morphism")
            .pad(rng.random_range(0..=max_pad), rng.random_range(0..=max_pad));
        let left = q_element(rng, field, row_split(&w));
        let right = q_element(rng, field, col_split(&w));
        let mat = left
            .mul(w.mat())
            .and_then(|m| m.mul(&right))
            .expect("sizes agree");
        w.with_mat(mat).expect("product of invertibles")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let f = Gf::prime(3).unwrap();
        let a = mat(&mut trial_rng(7, 1), &f, 3, 3);
        assert_eq!(a, mat(&mut trial_rng(7, 1), &f, 3, 3));
        assert_ne!(a, mat(&mut trial_rng(7, 2), &f, 3, 3));
    }

    #[test]
    fn sampled_windows_are_valid() {
        let f = Gf::of_order(4).unwrap();
        let mut rng = trial_rng(1, 0);
        for _ in 0..50 {
            let (a, b) = (object(&mut rng, 2), object(&mut rng, 2));
            let w = window(&mut rng, &f, a, b, 2);
            assert!(w.mat().is_invertible());
            let c = w.coset();
            assert!(Coset::new(a, b, c.chi().clone(), c.eta()).is_ok());
            for fam in Family::ALL {
                let g = generator(&mut rng, &f, fam, col_split(&w));
                assert_eq!(w.with_mat(w.mat().mul(&g).unwrap()).unwrap().coset(), c);
            }
        }
    }
}
