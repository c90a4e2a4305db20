//! Morphisms of the double-coset category, stored as the invariant pair
//! `(χ, η)` together with their source and target objects.

mod diagram;
mod kappa;
mod window;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{FieldJson, Gf};
use crate::relation::{enumerate_relations, LinRel, RelJson};

pub use diagram::render_diagram;
pub use kappa::{canonical_kappa, complete_kappa, kappa_tables, KappaTable};
pub use window::{canonical_window, Window};

/// An object `α = (α_-, α_+)`: the integer segment `[α_- + 1, α_+]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct Object {
    lo: i64,
    hi: i64,
}

impl Object {
    pub fn new(lo: i64, hi: i64) -> Result<Object> {
        if lo > hi {
            return Err(Error::Parse(format!("object ({lo},{hi}) has lo > hi")));
        }
        Ok(Object { lo, hi })
    }

    pub fn lo(self) -> i64 {
        self.lo
    }

    pub fn hi(self) -> i64 {
        self.hi
    }

    pub fn size(self) -> usize {
        (self.hi - self.lo) as usize
    }

    /// `self ≺ other`: the segment of `self` lies inside that of `other`.
    pub fn precedes(self, other: Object) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

impl TryFrom<(i64, i64)> for Object {
    type Error = Error;

    fn try_from((lo, hi): (i64, i64)) -> Result<Object> {
        Object::new(lo, hi)
    }
}

impl From<Object> for (i64, i64) {
    fn from(o: Object) -> (i64, i64) {
        (o.lo, o.hi)
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// A morphism `β → α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coset {
    alpha: Object,
    beta: Object,
    chi: LinRel,
    eta: usize,
}

/// Lower bound on `η` for a relation between the given objects.
pub fn eta_bound(alpha: Object, beta: Object, chi: &LinRel) -> i64 {
    beta.lo - alpha.lo + chi.ker().dim() as i64 - chi.indef().dim() as i64
}

impl Coset {
    pub fn new(alpha: Object, beta: Object, chi: LinRel, eta: usize) -> Result<Coset> {
        if chi.src_dim() != beta.size() || chi.tgt_dim() != alpha.size() {
            return Err(Error::DimMismatch(format!(
                "relation F^{} ⇉ F^{} for a morphism {beta} → {alpha}",
                chi.src_dim(),
                chi.tgt_dim()
            )));
        }
        let bound = eta_bound(alpha, beta, &chi);
        if (eta as i64) < bound {
            return Err(Error::InvariantViolation(format!(
                "eta = {eta} is below the lower bound {bound}"
            )));
        }
        Ok(Coset {
            alpha,
            beta,
            chi,
            eta,
        })
    }

    pub(crate) fn new_unchecked(alpha: Object, beta: Object, chi: LinRel, eta: usize) -> Coset {
        Coset {
            alpha,
            beta,
            chi,
            eta,
        }
    }

    /// The unit `1_α`.
    pub fn unit(field: &Gf, alpha: Object) -> Coset {
        Coset {
            alpha,
            beta: alpha,
            chi: LinRel::identity(field, alpha.size()),
            eta: 0,
        }
    }

    /// The central element `ζ_α^k`.
    pub fn zeta(field: &Gf, alpha: Object, k: usize) -> Coset {
        Coset {
            eta: k,
            ..Coset::unit(field, alpha)
        }
    }

    pub fn alpha(&self) -> Object {
        self.alpha
    }

    pub fn beta(&self) -> Object {
        self.beta
    }

    pub fn chi(&self) -> &LinRel {
        &self.chi
    }

    pub fn eta(&self) -> usize {
        self.eta
    }

    pub fn field(&self) -> &Gf {
        self.chi.field()
    }

    /// `η + dim indef χ`.
    pub fn xi(&self) -> usize {
        self.eta + self.chi.indef().dim()
    }

    /// Product `self ⋆ b` computed from the invariants alone.
    pub fn star(&self, b: &Coset) -> Result<Coset> {
        if self.beta != b.alpha {
            return Err(Error::NotComposable(format!(
                "source {} of the left factor differs from target {} of the right factor",
                self.beta, b.alpha
            )));
        }
        let chi = self.chi.compose(&b.chi)?;
        let indef_b = b.chi.indef();
        let lost = indef_b.dim() - indef_b.intersect(&self.chi.dom())?.dim();
        Ok(Coset {
            alpha: self.alpha,
            beta: b.beta,
            chi,
            eta: self.eta + b.eta + lost,
        })
    }

    /// Value of `η` for the adjoint morphism; negative exactly when the
    /// pair violates the lower bound.
    pub fn adjoint_eta(&self) -> i64 {
        self.eta as i64 + self.chi.indef().dim() as i64 - self.chi.ker().dim() as i64 - self.beta.lo
            + self.alpha.lo
    }

    pub fn involute(&self) -> Coset {
        let eta = self.adjoint_eta();
        debug_assert!(eta >= 0);
        Coset {
            alpha: self.beta,
            beta: self.alpha,
            chi: self.chi.pseudoinverse(),
            eta: eta as usize,
        }
    }

    /// Base-`p` exponent of the point mass attached to the morphism.
    pub fn measure_weight(&self) -> i64 {
        self.beta.lo - self.eta as i64 - self.chi.indef().dim() as i64
    }

    pub fn to_json(&self) -> CosetJson {
        CosetJson {
            alpha: self.alpha,
            beta: self.beta,
            chi: self.chi.to_json(),
            eta: self.eta,
            field: self.field().to_json(),
        }
    }

    pub fn from_json(j: &CosetJson) -> Result<Coset> {
        let field = Gf::from_json(&j.field)?;
        Coset::new(j.alpha, j.beta, LinRel::from_json(&field, &j.chi)?, j.eta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetJson {
    pub alpha: Object,
    pub beta: Object,
    pub chi: RelJson,
    pub eta: usize,
    pub field: FieldJson,
}

/// The embedding `λ: β → α`, its adjoint `μ` and the idempotent `θ = λ ⋆ μ`.
pub fn lambda_mu_theta(field: &Gf, alpha: Object, beta: Object) -> Result<(Coset, Coset, Coset)> {
    if !beta.precedes(alpha) {
        return Err(Error::NotComparable(format!(
            "{beta} does not precede {alpha}"
        )));
    }
    let lambda = Window::identity(field, alpha, beta).coset();
    let mu = lambda.involute();
    let theta = lambda.star(&mu)?;
    Ok((lambda, mu, theta))
}

/// All morphisms `β → α` with `η ≤ eta_max`.
pub fn enumerate_cosets(
    field: &Gf,
    beta: Object,
    alpha: Object,
    eta_max: usize,
) -> Result<Vec<Coset>> {
    let mut out = Vec::new();
    for chi in enumerate_relations(field, beta.size(), alpha.size())? {
        let lo = eta_bound(alpha, beta, &chi).max(0) as usize;
        for eta in lo..=eta_max {
            out.push(Coset {
                alpha,
                beta,
                chi: chi.clone(),
                eta,
            });
        }
    }
    Ok(out)
}
