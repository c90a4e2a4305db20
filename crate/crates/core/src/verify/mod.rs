//! Seeded randomized and exhaustive checks of the category laws.
//!
//! Every check returns a [`CheckReport`]; a report passes when it has no
//! failures. Given the same parameters and seed, reports are identical.

pub mod random;

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::colligation::Colligation;
use crate::coset::{
    canonical_kappa, canonical_window, complete_kappa, enumerate_cosets, eta_bound, kappa_tables,
    lambda_mu_theta, Coset, Object, Window,
};
use crate::error::{Error, Result};
use crate::gf::{Elem, Gf};
use crate::linalg::{enumerate_subspaces, Mat, ENUMERATION_LIMIT};
use crate::relation::{enumerate_relations, LinRel};

use random::{col_split, generator, row_split, trial_rng, Family};

pub const MAX_WITNESSES: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub trials: u64,
    pub failures: u64,
    pub seed: u64,
    #[serde(skip)]
    pub elapsed: Duration,
    pub witnesses: Vec<Value>,
    pub metrics: BTreeMap<String, Value>,
}

impl CheckReport {
    pub fn new(name: &str, seed: u64) -> CheckReport {
        CheckReport {
            name: name.to_string(),
            trials: 0,
            failures: 0,
            seed,
            elapsed: Duration::ZERO,
            witnesses: Vec::new(),
            metrics: BTreeMap::new(),
        }
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn metric(&mut self, key: &str, value: impl Into<Value>) {
        self.metrics.insert(key.to_string(), value.into());
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Adds the counts and witnesses of `other`.
    pub fn absorb(&mut self, other: CheckReport) {
        self.trials += other.trials;
        self.failures += other.failures;
        self.elapsed += other.elapsed;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
        for (k, v) in other.metrics {
            self.metrics.insert(format!("{}.{k}", other.name), v);
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{} {}: {} trials, {} failures",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.trials,
            self.failures
        )
    }
}

fn timed(
    name: &str,
    seed: u64,
    body: impl FnOnce(&mut CheckReport) -> Result<()>,
) -> Result<CheckReport> {
    let start = Instant::now();
    let mut report = CheckReport::new(name, seed);
    body(&mut report)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Size limits for random windows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sizes {
    pub max_block: usize,
    pub max_pad: usize,
}

impl Default for Sizes {
    fn default() -> Sizes {
        Sizes {
            max_block: 2,
            max_pad: 2,
        }
    }
}

fn coset_json(c: &Coset) -> Value {
    serde_json::to_value(c.to_json()).expect("plain data")
}

fn window_json(w: &Window) -> Value {
    Value::String(w.to_text())
}

/// Objects `(lo, lo + s)` for `lo` in `los` and `s <= max_size`.
pub fn objects(los: &[i64], max_size: usize) -> Vec<Object> {
    los.iter()
        .flat_map(|&lo| {
            (0..=max_size).map(move |s| Object::new(lo, lo + s as i64).expect("lo <= hi"))
        })
        .collect()
}

/// Product of representatives does not depend on the representatives: each
/// family of generators is applied on both sides of the shared object.
pub fn check_well_definedness(
    field: &Gf,
    sizes: Sizes,
    trials: u64,
    seed: u64,
) -> Result<CheckReport> {
    timed("well-defined", seed, |report| {
        for (fi, family) in Family::ALL.into_iter().enumerate() {
            let mut failures = 0u64;
            for t in 0..trials {
                let rng = &mut trial_rng(seed, ((fi as u64) << 32) | t);
                let (a, b, c) = (
                    random::object(rng, sizes.max_block),
                    random::object(rng, sizes.max_block),
                    random::object(rng, sizes.max_block),
                );
                let x = random::window(rng, field, a, b, sizes.max_pad);
                let y = random::window(rng, field, b, c, sizes.max_pad);
                let base = x.star(&y)?.coset();
                let phi = generator(rng, field, family, col_split(&x));
                let x_phi = x.with_mat(x.mat().mul(&phi)?)?;
                let left = x_phi.star(&y)?.coset();
                let psi = generator(rng, field, family, row_split(&y));
                let psi_y = y.with_mat(psi.mul(y.mat())?)?;
                let right = x.star(&psi_y)?.coset();
                let ok = left == base && right == base;
                failures += u64::from(!ok);
                report.record(ok, || {
                    json!({"family": family.name(), "trial": t, "a": window_json(&x), "b": window_json(&y),
                           "phi": phi.to_text(), "psi": psi.to_text()})
                });
            }
            report.metric(&format!("failures.{}", family.name()), failures);
        }
        report.metric("q", field.order());
        Ok(())
    })
}

/// `(a ⋆ b) ⋆ c = a ⋆ (b ⋆ c)` over every triple of morphisms between the
/// given objects, then on random window triples by the matrix route.
pub fn check_associativity(
    field: &Gf,
    objs: &[Object],
    eta_max: usize,
    random_trials: u64,
    sizes: Sizes,
    seed: u64,
) -> Result<CheckReport> {
    timed("assoc", seed, |report| {
        let homs = hom_sets(field, objs, eta_max)?;
        let mut exhaustive = 0u64;
        for (&(_, b), xs) in &homs {
            for (&(b2, c), ys) in &homs {
                if b2 != b {
                    continue;
                }
                for (&(c2, _), zs) in &homs {
                    if c2 != c {
                        continue;
                    }
                    for x in xs {
                        for y in ys {
                            let xy = x.star(y)?;
                            for z in zs {
                                let ok = xy.star(z)? == x.star(&y.star(z)?)?;
                                exhaustive += 1;
                                report.record(ok, || {
                                    json!([coset_json(x), coset_json(y), coset_json(z)])
                                });
                            }
                        }
                    }
                }
            }
        }
        report.metric("exhaustive_triples", exhaustive);
        for t in 0..random_trials {
            let rng = &mut trial_rng(seed, t);
            let o: Vec<Object> = (0..4)
                .map(|_| random::object(rng, sizes.max_block))
                .collect();
            let x = random::window(rng, field, o[0], o[1], sizes.max_pad);
            let y = random::window(rng, field, o[1], o[2], sizes.max_pad);
            let z = random::window(rng, field, o[2], o[3], sizes.max_pad);
            let left = x.star(&y)?.star(&z)?.coset();
            let right = x.star(&y.star(&z)?)?.coset();
            let inv = x.coset().star(&y.coset())?.star(&z.coset())?;
            report.record(left == right && left == inv, || {
                json!([window_json(&x), window_json(&y), window_json(&z)])
            });
        }
        report.metric("random_triples", random_trials);
        Ok(())
    })
}

type HomSets = BTreeMap<(Object, Object), Vec<Coset>>;

/// Morphisms `β → α` keyed by `(α, β)`.
fn hom_sets(field: &Gf, objs: &[Object], eta_max: usize) -> Result<HomSets> {
    let mut out = BTreeMap::new();
    for &a in objs {
        for &b in objs {
            out.insert((a, b), enumerate_cosets(field, b, a, eta_max)?);
        }
    }
    Ok(out)
}

/// The involution is an involutive anti-homomorphism, matches inversion of
/// representatives, and never produces a negative `η`.
pub fn check_involution(field: &Gf, objs: &[Object], eta_max: usize) -> Result<CheckReport> {
    timed("involution", 0, |report| {
        let homs = hom_sets(field, objs, eta_max)?;
        for cs in homs.values() {
            for c in cs {
                let s = c.involute();
                let w = canonical_window(c)?;
                let ok = c.adjoint_eta() >= 0 && s.involute() == *c && w.involute().coset() == s;
                report.record(ok, || coset_json(c));
            }
        }
        for (&(_, b), xs) in &homs {
            for (&(b2, _), ys) in &homs {
                if b2 != b {
                    continue;
                }
                for x in xs {
                    for y in ys {
                        let ok = x.star(y)?.involute() == y.involute().star(&x.involute())?;
                        report.record(ok, || json!([coset_json(x), coset_json(y)]));
                    }
                }
            }
        }
        Ok(())
    })
}

/// Matrix route against invariant route on random composable windows,
/// together with the `ξ` identity.
pub fn check_isomorphism(field: &Gf, sizes: Sizes, trials: u64, seed: u64) -> Result<CheckReport> {
    timed("iso", seed, |report| {
        let mut xi_failures = 0u64;
        for t in 0..trials {
            let rng = &mut trial_rng(seed, t);
            let (a, b, c) = (
                random::object(rng, sizes.max_block),
                random::object(rng, sizes.max_block),
                random::object(rng, sizes.max_block),
            );
            let x = random::window(rng, field, a, b, sizes.max_pad);
            let y = random::window(rng, field, b, c, sizes.max_pad);
            let xy = x.star(&y)?;
            let (cx, cy) = (x.coset(), y.coset());
            let product = cx.star(&cy)?;
            let lost = cx.chi().ker().intersect(&cy.chi().indef())?.dim();
            let xi_ok = product.xi() + lost == cx.xi() + cy.xi()
                && x.xi() == cx.xi()
                && y.xi() == cy.xi()
                && xy.xi() == product.xi();
            xi_failures += u64::from(!xi_ok);
            report.record(xy.coset() == product && xi_ok, || {
                json!([window_json(&x), window_json(&y)])
            });
        }
        report.metric("xi_failures", xi_failures);
        report.metric("q", field.order());
        Ok(())
    })
}

/// Outer sizes `(N-, |α|, N+, M-, |β|, M+)` of a truncation.
pub type Truncation = [usize; 6];

fn codes(m: &Mat) -> Vec<u32> {
    m.entries().iter().map(|e| e.code()).collect()
}

/// Transvections inside the allowed blocks and scalings of the outer
/// diagonal blocks; together they generate `Q̃` for the split.
fn q_generators(field: &Gf, split: [usize; 3]) -> Vec<Mat> {
    let n: usize = split.iter().sum();
    let block = |i: usize| -> usize {
        if i < split[0] {
            0
        } else if i < split[0] + split[1] {
            1
        } else {
            2
        }
    };
    let allowed =
        |bi: usize, bj: usize| matches!((bi, bj), (0, 1) | (0, 2) | (1, 2) | (0, 0) | (2, 2));
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !allowed(block(i), block(j)) {
                continue;
            }
            for c in field.units() {
                let mut g = Mat::identity(field, n);
                g.set(i, j, c);
                out.push(g);
            }
        }
        if block(i) != 1 {
            for c in field.units().filter(|&c| c != Elem::ONE) {
                let mut g = Mat::identity(field, n);
                g.set(i, i, c);
                out.push(g);
            }
        }
    }
    out
}

/// Breadth-first search for the double cosets `Q̃_α \ GL(N) / Q̃_β` at a
/// fixed truncation. The orbit count is compared with the number of
/// `(κ, χ)` combinations allowed by the table margins, and `(χ, η)` must be
/// constant on orbits and distinct across them.
pub fn check_completeness(field: &Gf, t: Truncation) -> Result<CheckReport> {
    let [n_minus, a_size, n_plus, m_minus, b_size, m_plus] = t;
    let n = n_minus + a_size + n_plus;
    if n != m_minus + b_size + m_plus {
        return Err(Error::LayoutInconsistent(
            "row and column totals differ".into(),
        ));
    }
    let q = field.order() as u64;
    if q.checked_pow((n * n) as u32)
        .is_none_or(|x| x > ENUMERATION_LIMIT)
    {
        return Err(Error::TooLarge(format!(
            "GL({n}, {q}) is beyond brute force"
        )));
    }
    let alpha = Object::new(0, a_size as i64)?;
    let b_lo = m_minus as i64 - n_minus as i64;
    let beta = Object::new(b_lo, b_lo + b_size as i64)?;
    timed("completeness", 0, |report| {
        let mut group = Vec::new();
        let total = q.pow((n * n) as u32);
        for code in 0..total {
            let mut c = code;
            let m = Mat::from_fn(field, n, n, |_, _| {
                let e = field.elem_from_code((c % q) as u32).expect("digit below q");
                c /= q;
                e
            });
            if m.is_invertible() {
                group.push(m);
            }
        }
        let left = q_generators(field, [n_minus, a_size, n_plus]);
        let right = q_generators(field, [m_minus, b_size, m_plus]);
        let mut orbit_of: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut orbit_cosets: Vec<Coset> = Vec::new();
        let mut constant = true;
        for g in &group {
            if orbit_of.contains_key(&codes(g)) {
                continue;
            }
            let id = orbit_cosets.len();
            let rep =
                Window::new(alpha, beta, (n_minus, n_plus), (m_minus, m_plus), g.clone())?.coset();
            let mut queue = VecDeque::from([g.clone()]);
            orbit_of.insert(codes(g), id);
            while let Some(x) = queue.pop_front() {
                let xc = Window::new(alpha, beta, (n_minus, n_plus), (m_minus, m_plus), x.clone())?
                    .coset();
                if xc != rep {
                    constant = false;
                    if report.witnesses.len() < MAX_WITNESSES {
                        report
                            .witnesses
                            .push(json!({"orbit": id, "matrix": x.to_text()}));
                    }
                }
                let next = left
                    .iter()
                    .map(|l| l.mul(&x))
                    .chain(right.iter().map(|r| x.mul(r)));
                for y in next {
                    let y = y?;
                    if let Entry::Vacant(slot) = orbit_of.entry(codes(&y)) {
                        slot.insert(id);
                        queue.push_back(y);
                    }
                }
            }
            orbit_cosets.push(rep);
        }
        let distinct: HashSet<&Coset> = orbit_cosets.iter().collect();
        let injective = distinct.len() == orbit_cosets.len();

        let mut rel_counts: HashMap<(usize, usize, usize), u64> = HashMap::new();
        for r in enumerate_relations(field, b_size, a_size)? {
            let inv = r.invariants();
            *rel_counts
                .entry((inv.ker.dim(), inv.rk, inv.indef.dim()))
                .or_default() += 1;
        }
        let tables = kappa_tables(alpha, beta, (n_minus, n_plus), (m_minus, m_plus));
        let expected: u64 = tables
            .iter()
            .map(|t| {
                rel_counts
                    .get(&(t.k[0][1], t.k[1][1], t.k[1][0]))
                    .copied()
                    .unwrap_or(0)
            })
            .sum();
        let orbits = orbit_cosets.len() as u64;
        report.record(
            orbits == expected,
            || json!({"orbits": orbits, "expected": expected}),
        );
        report.record(constant, || json!("invariants vary inside an orbit"));
        report.record(injective, || json!("two orbits share invariants"));
        let identity_orbit = orbit_of.get(&codes(&Mat::identity(field, n))).copied();
        if alpha == beta {
            let unit_ok =
                identity_orbit.map(|i| &orbit_cosets[i]) == Some(&Coset::unit(field, alpha));
            report.record(unit_ok, || json!("identity orbit is not the unit"));
        }
        report.metric("group_order", group.len());
        report.metric("orbits", orbits);
        report.metric("expected_orbits", expected);
        report.metric("kappa_tables", tables.len());
        report.metric("q", field.order());
        report.metric("sizes", t.to_vec());
        Ok(())
    })
}

/// Centrality of `ζ`, the ordered-category identities for `λ, μ, θ`, and the
/// involution laws on small hom-sets.
pub fn check_structure(field: &Gf, max_size: usize, k_max: usize) -> Result<CheckReport> {
    timed("structure", 0, |report| {
        let objs = objects(&[0, 1], max_size);
        for &a in &objs {
            for k in 0..=k_max {
                for l in 0..=k_max {
                    let ok = Coset::zeta(field, a, k).star(&Coset::zeta(field, a, l))?
                        == Coset::zeta(field, a, k + l)
                        && Window::zeta(field, a, k)
                            .star(&Window::zeta(field, a, l))?
                            .coset()
                            == Coset::zeta(field, a, k + l);
                    report.record(ok, || json!({"zeta_sum": [a.lo(), a.hi(), k, l]}));
                }
            }
            report.record(
                Coset::zeta(field, a, 0) == Coset::unit(field, a),
                || json!({"zeta0": [a.lo(), a.hi()]}),
            );
        }
        for &a in &objs {
            for &b in &objs {
                for c in enumerate_cosets(field, b, a, k_max)? {
                    for k in 0..=k_max {
                        let lhs = Coset::zeta(field, a, k).star(&c)?;
                        let ok = lhs == c.star(&Coset::zeta(field, b, k))?
                            && lhs.eta() == c.eta() + k
                            && lhs.chi() == c.chi();
                        report.record(ok, || json!({"zeta_central": coset_json(&c), "k": k}));
                    }
                }
            }
        }
        let ordered = objects(&[-1, 0, 1], max_size);
        for &a in &ordered {
            for &b in ordered.iter().filter(|b| b.precedes(a)) {
                let (l, m, t) = lambda_mu_theta(field, a, b)?;
                let ok = l.star(&m)? == t
                    && m.star(&l)? == Coset::unit(field, b)
                    && t.star(&t)? == t
                    && l.involute() == m
                    && t.involute() == t;
                report.record(
                    ok,
                    || json!({"lambda_mu_theta": [[a.lo(), a.hi()], [b.lo(), b.hi()]]}),
                );
                for &c in ordered.iter().filter(|c| c.precedes(b)) {
                    let (l_bc, m_bc, _) = lambda_mu_theta(field, b, c)?;
                    let (l_ac, m_ac, t_ac) = lambda_mu_theta(field, a, c)?;
                    let ok =
                        l.star(&l_bc)? == l_ac && m_bc.star(&m)? == m_ac && t.star(&t_ac)? == t_ac;
                    report.record(ok, || json!({"nested": [[a.lo(), a.hi()], [b.lo(), b.hi()], [c.lo(), c.hi()]]}));
                }
            }
        }
        let small = objects(&[0, 1], 1);
        let inv = check_involution(field, &small, 1)?;
        report.absorb(inv);
        Ok(())
    })
}

/// Every `(χ, η)` with `η` up to two above its bound: completion of the
/// `κ`-table succeeds exactly when `η` meets the bound, and the resulting
/// 0-1 matrix has the requested invariants.
pub fn check_cone(field: &Gf, max_size: usize) -> Result<CheckReport> {
    timed("cone", 0, |report| {
        let objs = objects(&[-1, 0, 1], max_size);
        for &a in &objs {
            for &b in &objs {
                for chi in enumerate_relations(field, b.size(), a.size())? {
                    let inv = chi.invariants();
                    let bound = eta_bound(a, b, &chi);
                    for eta in 0..=(bound.max(0) + 2) as usize {
                        let table =
                            complete_kappa(a, b, inv.rk, inv.ker.dim(), inv.indef.dim(), eta);
                        let ok = match table {
                            Ok(t) => {
                                (eta as i64) >= bound
                                    && t.is_consistent()
                                    && t.window(field)?.coset()
                                        == canonical_kappa(&Coset::new(a, b, chi.clone(), eta)?)?
                                            .window(field)?
                                            .coset()
                                    && {
                                        let j = t.window(field)?.coset();
                                        let ji = j.chi().invariants();
                                        (ji.rk, ji.ker.dim(), ji.indef.dim(), j.eta())
                                            == (inv.rk, inv.ker.dim(), inv.indef.dim(), eta)
                                    }
                            }
                            Err(Error::InvariantViolation(_)) => (eta as i64) < bound,
                            Err(e) => return Err(e),
                        };
                        report.record(ok, || {
                            json!({"alpha": [a.lo(), a.hi()], "beta": [b.lo(), b.hi()], "eta": eta,
                                   "chi": serde_json::to_value(chi.to_json()).expect("plain data")})
                        });
                    }
                }
            }
        }
        Ok(())
    })
}

/// Transfer functions multiply under `∘` and ignore padding and inner
/// conjugation, checked at every point of the field.
pub fn check_colligation(
    field: &Gf,
    max_m: usize,
    max_inner: usize,
    trials: u64,
    seed: u64,
) -> Result<CheckReport> {
    timed("colligation", seed, |report| {
        let mut points = 0u64;
        let mut skipped = 0u64;
        for t in 0..trials {
            let rng = &mut trial_rng(seed, t);
            let m = rand::Rng::random_range(rng, 1..=max_m);
            let (n1, n2) = (
                rand::Rng::random_range(rng, 0..=max_inner),
                rand::Rng::random_range(rng, 0..=max_inner),
            );
            let g = Colligation::new(m, random::invertible(rng, field, m + n1))?;
            let h = Colligation::new(m, random::invertible(rng, field, m + n2))?;
            let gh = g.circ(&h)?;
            let conj = random::invertible(rng, field, n1);
            let gc = g.conjugate(&conj)?;
            let mut ok = true;
            for lambda in field.elements() {
                match (g.transfer(lambda), h.transfer(lambda)) {
                    (Ok(x), Ok(y)) => {
                        points += 1;
                        ok &= gh.transfer(lambda).ok() == Some(x.mul(&y)?);
                        for z in [g.pad(1).transfer(lambda), gc.transfer(lambda)]
                            .into_iter()
                            .flatten()
                        {
                            ok &= z == x;
                        }
                    }
                    _ => skipped += 1,
                }
            }
            ok &= g.transfer(Elem::ZERO)? == g.a();
            report.record(ok, || json!({"g": g.to_text(), "h": h.to_text()}));
        }
        report.metric("points", points);
        report.metric("skipped_points", skipped);
        report.metric("q", field.order());
        Ok(())
    })
}

fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Field axioms for `q <= 9`, subspace counts for `n <= 4`, `q ∈ {2, 3}`,
/// and associativity of relation composition on `F_2^1 ⇉ F_2^1`.
pub fn check_foundations() -> Result<CheckReport> {
    timed("foundations", 0, |report| {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = Gf::of_order(q)?;
            let els: Vec<Elem> = f.elements().collect();
            let mut ok = els.len() == q as usize;
            for &a in &els {
                ok &= f.pow(a, q as u64) == a;
                if !a.is_zero() {
                    ok &= f.inv(a).is_some_and(|i| f.mul(a, i) == Elem::ONE);
                }
                for &b in &els {
                    ok &= f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                    for &c in &els {
                        ok &= f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                        ok &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                        ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                    }
                }
            }
            report.record(ok, || json!({"field_axioms": q}));
        }
        for q in [2u32, 3] {
            let f = Gf::prime(q)?;
            for n in 0..=4usize {
                let mut by_dim = vec![0u64; n + 1];
                for s in enumerate_subspaces(&f, n)? {
                    by_dim[s.dim()] += 1;
                }
                let ok =
                    (0..=n).all(|k| by_dim[k] == gaussian_binomial(n as u32, k as u32, q as u64));
                report.record(ok, || json!({"subspaces": [q, n]}));
            }
        }
        let f = Gf::prime(2)?;
        let rels: Vec<LinRel> = enumerate_relations(&f, 1, 1)?.collect();
        for p in &rels {
            for q in &rels {
                let qp = q.compose(p)?;
                for r in &rels {
                    let ok = r.compose(&qp)? == r.compose(q)?.compose(p)?;
                    report.record(
                        ok,
                        || json!({"compose": [p.to_json(), q.to_json(), r.to_json()]}),
                    );
                }
            }
        }
        Ok(())
    })
}

/// The whole battery at one field.
pub fn run_all(field: &Gf, seed: u64, trials: u64) -> Result<Vec<CheckReport>> {
    let sizes = Sizes::default();
    let unit_objs = objects(&[0, 1], 1)
        .into_iter()
        .filter(|o| o.size() == 1)
        .collect::<Vec<_>>();
    let mut out = vec![
        check_foundations()?,
        check_well_definedness(field, sizes, trials, seed)?,
        check_associativity(field, &unit_objs, 1, trials, sizes, seed)?,
        check_isomorphism(field, sizes, trials, seed)?,
    ];
    let completeness = match field.order() {
        2 => Some([1, 1, 1, 1, 1, 1]),
        3 => Some([1, 1, 0, 1, 1, 0]),
        _ => None,
    };
    if let Some(t) = completeness {
        out.push(check_completeness(field, t)?);
    }
    out.push(check_involution(field, &unit_objs, 1)?);
    out.push(check_structure(field, 2, 2)?);
    out.push(check_cone(field, 2)?);
    out.push(check_colligation(field, 2, 3, trials, seed)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuous_and_identity_cases() {
        let f = Gf::prime(2).unwrap();
        let r = check_well_definedness(&f, Sizes::default(), 0, 1).unwrap();
        assert!(r.passed() && r.trials == 0 && r.witnesses.is_empty());
        let mut rng = trial_rng(3, 0);
        let a = Object::new(0, 1).unwrap();
        let w = random::window(&mut rng, &f, a, a, 1);
        let id = Mat::identity(&f, w.mat().rows());
        assert_eq!(w.with_mat(w.mat().mul(&id).unwrap()).unwrap(), w);
        let unit = Coset::unit(&f, a);
        assert_eq!(unit.star(&unit).unwrap().star(&unit).unwrap(), unit);
    }

    #[test]
    fn completeness_small_cases() {
        let f = Gf::prime(2).unwrap();
        let r = check_completeness(&f, [1, 1, 1, 1, 1, 1]).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.metrics["orbits"], json!(6));
        assert_eq!(r.metrics["group_order"], json!(168));
        // empty middle: orbits are the realizable η values
        let r = check_completeness(&f, [1, 0, 1, 1, 0, 1]).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.metrics["orbits"], json!(2));
        assert!(matches!(
            check_completeness(&f, [2, 1, 2, 2, 1, 2]),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn reports_are_reproducible() {
        let f = Gf::prime(3).unwrap();
        let a = check_isomorphism(&f, Sizes::default(), 20, 9).unwrap();
        let b = check_isomorphism(&f, Sizes::default(), 20, 9).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn failing_records_keep_three_witnesses() {
        let mut r = CheckReport::new("x", 0);
        for i in 0..5 {
            r.record(false, || json!(i));
        }
        assert_eq!((r.failures, r.witnesses.len()), (5, 3));
        assert!(!r.passed());
    }
}
