//! Individual verification checks. Each returns an [`Outcome`] describing what
//! was verified; a returned error means the check could not be evaluated.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::coeffs::{Coweight, GroupAlgElt, Int, LaurentPoly};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElt, SphericalCombination};
use crate::rootdata::{
    cexp, coweight_box, dot_act, dot_orbit_sum, is_dot_invariant, ExtAffWeylElt,
    ExtendedAffineWeyl, RootDatum,
};
use crate::tree::{
    apply_u, apply_v, beta_filtration, conductor, fiber_operator_u, hecke_t, noncommuting_vertex,
    retraction, sphere, trace_orbit, BaseConfig, TreeModel, TreeVertex, VertexSum,
};
use crate::uops::IntegralityCertificate;

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Outcome {
            passed: true,
            detail: detail.into(),
        }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Outcome {
            passed: false,
            detail: detail.into(),
        }
    }
}

/// Runs `f` over `items` and reports the first counterexample.
fn for_all<T, F>(items: impl IntoIterator<Item = T>, what: &str, mut f: F) -> Result<Outcome>
where
    F: FnMut(&T) -> Result<Option<String>>,
{
    let mut n = 0usize;
    for item in items {
        if let Some(bad) = f(&item)? {
            return Ok(Outcome::fail(format!("{what}: counterexample {bad}")));
        }
        n += 1;
    }
    Ok(Outcome::pass(format!("{what}: {n} cases")))
}

pub fn random_laurent<R: Rng>(rng: &mut R) -> LaurentPoly {
    let n = rng.gen_range(0..=8);
    LaurentPoly::from_terms((0..n).map(|_| {
        let c = if rng.gen_bool(0.1) {
            Int::from(rng.gen::<i64>())
        } else {
            Int::from(rng.gen_range(-20i64..=20))
        };
        (rng.gen_range(-6..=6), c)
    }))
}

pub fn random_group_alg<R: Rng>(rng: &mut R, rank: usize) -> GroupAlgElt {
    let n = rng.gen_range(0..=8);
    let mut out = GroupAlgElt::zero(rank);
    for _ in 0..n {
        let lambda = Coweight((0..rank).map(|_| rng.gen_range(-3..=3)).collect());
        let c =
            LaurentPoly::from_terms([(rng.gen_range(-6..=6), Int::from(rng.gen_range(-9i64..=9)))]);
        out.add_term(lambda, &c);
    }
    out
}

/// Commutative ring axioms for `Z[v, v^-1]` on random sparse elements.
pub fn laurent_ring_axioms<R: Rng>(rng: &mut R, cases: usize) -> Result<Outcome> {
    let triples: Vec<_> = (0..cases)
        .map(|_| {
            (
                random_laurent(rng),
                random_laurent(rng),
                random_laurent(rng),
            )
        })
        .collect();
    for_all(triples, "Laurent ring axioms", |(a, b, c)| {
        let one = LaurentPoly::one();
        let ok = (a * b) == (b * a)
            && (&(a * b) * c) == (a * &(b * c))
            && (a * &(b + c)) == (&(a * b) + &(a * c))
            && (a + b) == (b + a)
            && (&(a + b) + c) == (a + &(b + c))
            && &(a * &one) == a
            && (a + &-a).is_zero();
        Ok((!ok).then(|| format!("{a} / {b} / {c}")))
    })
}

/// Commutative ring axioms for the group algebra on random sparse elements.
pub fn group_algebra_ring_axioms<R: Rng>(
    rng: &mut R,
    cases: usize,
    rank: usize,
) -> Result<Outcome> {
    let triples: Vec<_> = (0..cases)
        .map(|_| {
            (
                random_group_alg(rng, rank),
                random_group_alg(rng, rank),
                random_group_alg(rng, rank),
            )
        })
        .collect();
    for_all(triples, "group algebra ring axioms", |(a, b, c)| {
        let ab = a.try_mul(b)?;
        let ok = ab == b.try_mul(a)?
            && ab.try_mul(c)? == a.try_mul(&b.try_mul(c)?)?
            && a.try_mul(&(b + c))? == &ab + &a.try_mul(c)?
            && a.try_mul(&GroupAlgElt::one(rank))? == *a
            && (a + &-a).is_zero()
            && ab
                .support()
                .all(|m| a.support().any(|x| b.support().any(|y| &(x + y) == m)));
        Ok((!ok).then(|| format!("{a} / {b} / {c}")))
    })
}

/// Evaluation at `v² = q` respects sums and products.
pub fn evaluation_homomorphism<R: Rng>(rng: &mut R, cases: usize) -> Result<Outcome> {
    let pairs: Vec<_> = (0..cases)
        .map(|_| (random_laurent(rng), random_laurent(rng)))
        .collect();
    for_all(pairs, "evaluation homomorphism at q = 4, 9", |(a, b)| {
        for q in [4, 9] {
            let (ea, eb) = (a.eval_q(q)?, b.eval_q(q)?);
            if (a * b).eval_q(q)? != &ea * &eb || (a + b).eval_q(q)? != &ea + &eb {
                return Ok(Some(format!("{a} / {b} at q = {q}")));
            }
        }
        Ok(None)
    })
}

/// Closure, inverses and the inversion count of every element of `W₀`.
pub fn weyl_group_consistency(d: &RootDatum) -> Result<Outcome> {
    let w = d.weyl();
    let n = w.order() as u32;
    for_all(0..n, "finite Weyl group", |&a| {
        if w.mul(a, w.inverse(a)) != 0 {
            return Ok(Some(format!("inverse of element {a}")));
        }
        let neg = (0..d.positive_roots().len())
            .filter(|&j| {
                let img = w.act_char(a, &d.positive_roots()[j]);
                d.two_rho_vee().dot(&img) < 0
            })
            .count() as u32;
        Ok((neg != w.length(a)).then(|| format!("length of element {a}")))
    })
}

/// `ℓ(xs) = ℓ(x) ± 1` for every simple affine reflection, and the greedy
/// decomposition reassembles `x`.
pub fn length_and_decomposition(g: &ExtendedAffineWeyl, radius: i32) -> Result<Outcome> {
    let elts = g.elements_in_box(radius, u32::MAX);
    for_all(elts, "length parity and reduced decompositions", |x| {
        let l = g.length(x) as i64;
        for s in 0..g.generators().len() {
            if (g.length(&g.mul_gen(x, s)) as i64 - l).abs() != 1 {
                return Ok(Some(g.render(x)));
            }
        }
        let d = g.decompose(x);
        let back = d
            .word
            .iter()
            .fold(d.omega.clone(), |acc, &s| g.mul_gen(&acc, s));
        Ok(
            (back != *x || d.word.len() as i64 != l || g.length(&d.omega) != 0)
                .then(|| g.render(x)),
        )
    })
}

/// The dot action composes as a group action and `cexp ≥ 0` on the cone.
pub fn dot_action_properties<R: Rng>(
    d: &RootDatum,
    rng: &mut R,
    cases: usize,
    radius: i32,
) -> Result<Outcome> {
    let w = d.weyl();
    let n = w.order() as u32;
    for lambda in coweight_box(d.rank(), radius) {
        if d.is_antidominant(&lambda) {
            if let Some(x) = (0..n).find(|&x| cexp(d, &lambda, x) < 0) {
                return Ok(Outcome::fail(format!("cexp({lambda}, {x}) < 0")));
            }
        }
    }
    let rs: Vec<_> = (0..cases)
        .map(|_| random_group_alg(rng, d.rank()))
        .collect();
    for_all(rs, "dot action is a group action", |r| {
        for a in 0..n {
            let ar = dot_act(d, a, r);
            for b in 0..n {
                if dot_act(d, b, &ar) != dot_act(d, w.mul(b, a), r) {
                    return Ok(Some(format!("{r} with elements {b}, {a}")));
                }
            }
        }
        Ok(None)
    })
}

fn basis_sample(alg: &HeckeAlgebra, radius: i32, max_len: u32) -> Vec<ExtAffWeylElt> {
    alg.group().elements_in_box(radius, max_len)
}

/// `(T_x T_y) T_z = T_x (T_y T_z)` on random triples with `ℓ ≤ max_len`.
pub fn associativity<R: Rng>(
    alg: &HeckeAlgebra,
    rng: &mut R,
    triples: usize,
    radius: i32,
    max_len: u32,
) -> Result<Outcome> {
    let pool = basis_sample(alg, radius, max_len);
    let picks: Vec<_> = (0..triples)
        .map(|_| {
            let mut p = || pool.choose(rng).expect("nonempty pool").clone();
            (p(), p(), p())
        })
        .collect();
    for_all(picks, "associativity of T-basis products", |(x, y, z)| {
        let (tx, ty, tz) = (
            alg.basis(x.clone()),
            alg.basis(y.clone()),
            alg.basis(z.clone()),
        );
        let lhs = alg.mul(&alg.mul(&tx, &ty), &tz);
        let rhs = alg.mul(&tx, &alg.mul(&ty, &tz));
        Ok((lhs != rhs).then(|| format!("{x:?} {y:?} {z:?}")))
    })
}

/// `T_x T_x⁻¹ = T_x⁻¹ T_x = 1`, with `T_x⁻¹` over `Z[q, q⁻¹]`.
pub fn inverse_round_trip(alg: &HeckeAlgebra, radius: i32, max_len: u32) -> Result<Outcome> {
    for_all(
        basis_sample(alg, radius, max_len),
        "T-basis inverses",
        |x| {
            let inv = alg.t_inverse(x);
            let b = alg.basis(x.clone());
            let ok = alg.mul(&b, &inv) == alg.one()
                && alg.mul(&inv, &b) == alg.one()
                && inv.terms().all(|(_, c)| c.has_only_even_exponents());
            Ok((!ok).then(|| format!("{x:?}")))
        },
    )
}

/// `θ_λ θ_μ = θ_{λ+μ}` for all `λ, μ` in the box.
pub fn theta_additivity(alg: &HeckeAlgebra, radius: i32) -> Result<Outcome> {
    let pts = coweight_box(alg.datum().rank(), radius);
    let mut pairs = vec![];
    for a in &pts {
        for b in &pts {
            pairs.push((a.clone(), b.clone()));
        }
    }
    for_all(pairs, "theta additivity", |(a, b)| {
        let lhs = alg.mul_theta(&*alg.theta(a)?, b)?;
        Ok((lhs != *alg.theta(&(a + b))?).then(|| format!("{a} + {b}")))
    })
}

/// `θ_λ` does not depend on the auxiliary antidominant coweight.
pub fn theta_aux_independence(alg: &HeckeAlgebra, radius: i32) -> Result<Outcome> {
    let step = alg.datum().two_rho_vee().clone();
    for_all(
        coweight_box(alg.datum().rank(), radius),
        "theta independent of the auxiliary coweight",
        |l| {
            let mu = alg.theta_aux(l);
            let other = &mu + &step;
            Ok((alg.theta_with(l, &mu)? != alg.theta_with(l, &other)?).then(|| l.to_string()))
        },
    )
}

/// Every `T_x` with `ℓ(x) ≤ max_len` in the box is recovered from its
/// Bernstein form.
pub fn bernstein_round_trip(alg: &HeckeAlgebra, radius: i32, max_len: u32) -> Result<Outcome> {
    for_all(
        basis_sample(alg, radius, max_len),
        "Bernstein form round trip",
        |x| {
            let h = alg.basis(x.clone());
            Ok((alg.expand(&alg.bernstein_form(&h)?)? != h).then(|| format!("{x:?}")))
        },
    )
}

/// `Θ(orbit sum)` commutes with every `T_x`, `ℓ(x) ≤ max_len`, for sampled `λ`.
pub fn center_check<R: Rng>(
    alg: &HeckeAlgebra,
    rng: &mut R,
    samples: usize,
    radius: i32,
    max_len: u32,
) -> Result<Outcome> {
    let d = alg.datum();
    let cone: Vec<Coweight> = coweight_box(d.rank(), radius)
        .into_iter()
        .filter(|l| d.is_antidominant(l))
        .collect();
    let lambdas: Vec<Coweight> = cone.choose_multiple(rng, samples).cloned().collect();
    let xs = basis_sample(alg, radius, max_len);
    let mut n = 0;
    for l in &lambdas {
        let z = alg.theta_of(&dot_orbit_sum(d, l))?;
        for x in &xs {
            if alg.right_mul_basis(&z, x) != alg.left_mul_basis(x, &z) {
                return Ok(Outcome::fail(format!(
                    "Θ(orbit sum {l}) does not commute with {x:?}"
                )));
            }
            n += 1;
        }
    }
    Ok(Outcome::pass(format!(
        "central elements for λ in {:?}: {n} commutators",
        lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>()
    )))
}

fn cone_points(d: &RootDatum, radius: i32) -> Vec<Coweight> {
    coweight_box(d.rank(), radius)
        .into_iter()
        .filter(|l| d.is_antidominant(l))
        .collect()
}

/// Satake images of the spherical basis are dot-invariant.
pub fn satake_invariance(alg: &HeckeAlgebra, radius: i32) -> Result<Outcome> {
    let d = alg.datum();
    for_all(
        cone_points(d, radius),
        "Satake images are dot-invariant",
        |l| {
            let r = alg.satake(&alg.spherical_elt(l)?)?;
            Ok((!is_dot_invariant(d, &r)).then(|| l.to_string()))
        },
    )
}

/// `S(a ⋆ b) = S(a) S(b)` under the product of `H_K`, for all pairs of spherical basis elements in the box.
pub fn satake_multiplicative(alg: &HeckeAlgebra, radius: i32) -> Result<Outcome> {
    let pts = cone_points(alg.datum(), radius);
    let mut pairs = vec![];
    for a in &pts {
        for b in &pts {
            pairs.push((a.clone(), b.clone()));
        }
    }
    for_all(pairs, "Satake is multiplicative", |(a, b)| {
        let (ha, hb) = (alg.spherical_elt(a)?, alg.spherical_elt(b)?);
        let lhs = alg.satake(&alg.spherical_mul(&ha, &hb)?)?;
        let rhs = alg.satake(&ha)?.try_mul(&alg.satake(&hb)?)?;
        Ok((lhs != rhs).then(|| format!("{a} * {b}")))
    })
}

/// `S⁻¹ ∘ S = id` on the spherical basis and `S ∘ S⁻¹ = id` on dot-orbit sums.
pub fn satake_round_trips(alg: &HeckeAlgebra, radius: i32) -> Result<Outcome> {
    let d = alg.datum();
    for_all(cone_points(d, radius), "Satake round trips", |l| {
        let r = alg.satake(&alg.spherical_elt(l)?)?;
        if alg.satake_inverse(&r)? != SphericalCombination::single(l.clone(), LaurentPoly::one()) {
            return Ok(Some(format!("S⁻¹(S(sph{l}))")));
        }
        let o = dot_orbit_sum(d, l);
        let back = alg.satake(&alg.satake_inverse(&o)?.to_hecke(alg)?)?;
        Ok((back != o).then(|| format!("S(S⁻¹(orbit sum {l}))")))
    })
}

fn interior_deltas(t: &TreeModel, margin: u32) -> Vec<(TreeVertex, VertexSum)> {
    t.interior(margin)
        .into_iter()
        .map(|w| (w.clone(), VertexSum::delta(w)))
        .collect()
}

/// `v∘u = q`, `T = u + v`, and a vertex where `u∘v ≠ q`.
pub fn tree_hecke_side(t: &TreeModel) -> Result<Outcome> {
    let q = t.q() as i64;
    let mut uv_differs = false;
    let out = for_all(
        interior_deltas(t, 2),
        "v∘u = q·Id and T = u + v",
        |(w, d)| {
            let u = apply_u(t, d)?;
            let v = apply_v(t, d)?;
            if apply_v(t, &u)? != d.scale(q) || hecke_t(t, d)? != u.add(&v) {
                return Ok(Some(w.to_string()));
            }
            uv_differs |= apply_u(t, &v)? != d.scale(q);
            Ok(None)
        },
    )?;
    if out.passed && !uv_differs {
        return Ok(Outcome::fail("u∘v = q·Id on every interior vertex"));
    }
    Ok(out)
}

/// `u² − T∘u + q = 0` and `v² − v∘T + q = 0`.
pub fn tree_hecke_polynomial(t: &TreeModel) -> Result<Outcome> {
    let q = t.q() as i64;
    for_all(
        interior_deltas(t, 2),
        "u and v are right and left roots of X² − TX + q",
        |(w, d)| {
            let u = apply_u(t, d)?;
            let right = apply_u(t, &u)?.sub(&hecke_t(t, &u)?).add(&d.scale(q));
            let v = apply_v(t, d)?;
            let left = apply_v(t, &v)?
                .sub(&apply_v(t, &hecke_t(t, d)?)?)
                .add(&d.scale(q));
            Ok((!right.is_zero() || !left.is_zero()).then(|| w.to_string()))
        },
    )
}

/// A vertex where `T∘u ≠ u∘T`.
pub fn tree_noncommutativity(t: &TreeModel) -> Result<Outcome> {
    Ok(match noncommuting_vertex(t)? {
        Some(w) => Outcome::pass(format!("T∘u ≠ u∘T at vertex {w}")),
        None => Outcome::fail("T∘u = u∘T on every interior vertex"),
    })
}

/// `𝒰_k = u^k`, `β_k = 𝒰_k` and `𝒰_j ∘ 𝒰_k = 𝒰_{j+k}` wherever the truncation allows.
pub fn tree_fiber_operators(t: &TreeModel, max_k: u32) -> Result<Outcome> {
    let mut cases = vec![];
    for k in 1..=max_k.min(t.depth()) {
        for b in t.vertices(t.depth() - k) {
            cases.push((k, b));
        }
    }
    for_all(
        cases,
        "fiber operators, successor iterates and filtration",
        |(k, b)| {
            let d = VertexSum::delta(b.clone());
            let fib = fiber_operator_u(t, *k, &d)?;
            let mut iter = d.clone();
            for _ in 0..*k {
                iter = apply_u(t, &iter)?;
            }
            if fib != iter
                || beta_filtration(t, *k, b)? != fib
                || fib.len() != t.q().pow(*k) as usize
            {
                return Ok(Some(format!("k = {k}, b = {b}")));
            }
            for j in 1..*k {
                let composed = fiber_operator_u(t, j, &fiber_operator_u(t, k - j, &d)?)?;
                if composed != fib {
                    return Ok(Some(format!("𝒰_{j} ∘ 𝒰_{} at {b}", k - j)));
                }
            }
            Ok(None)
        },
    )
}

/// The retraction fixes the apartment, its fibers partition the ball and the
/// fiber over the origin-based point at distance `k` is `𝒰_k(origin)`.
pub fn tree_retraction(t: &TreeModel) -> Result<Outcome> {
    let all = t.vertices(t.depth());
    for a in all.iter().filter(|a| a.on_apartment()) {
        if retraction(a) != *a {
            return Ok(Outcome::fail(format!(
                "retraction moves apartment vertex {a}"
            )));
        }
    }
    let mut sizes = std::collections::BTreeMap::new();
    for v in &all {
        let r = retraction(v);
        if !r.on_apartment() {
            return Ok(Outcome::fail(format!(
                "retraction of {v} is off the apartment"
            )));
        }
        *sizes.entry(r).or_insert(0usize) += 1;
    }
    if sizes.values().sum::<usize>() != all.len() {
        return Ok(Outcome::fail("retraction fibers do not partition the ball"));
    }
    for alcove in [TreeVertex::origin(), "0".parse()?] {
        if sizes.get(&alcove) != Some(&1) {
            return Ok(Outcome::fail(format!(
                "fiber over {alcove} is not a singleton"
            )));
        }
    }
    let origin = VertexSum::delta(t.origin());
    for k in 1..t.depth() {
        let target: TreeVertex = std::iter::once('1')
            .chain(std::iter::repeat_n('0', k as usize - 1))
            .collect::<String>()
            .parse()?;
        let fiber: VertexSum = all
            .iter()
            .filter(|a| retraction(a) == target)
            .cloned()
            .collect();
        if fiber_operator_u(t, k, &origin)? != fiber {
            return Ok(Outcome::fail(format!(
                "𝒰_{k}(origin) differs from the fiber over {target}"
            )));
        }
    }
    Ok(Outcome::pass(format!(
        "retraction onto {} apartment vertices",
        sizes.len()
    )))
}

/// `Tr(z) = T(z') − z''` for all interior `z` with `2 ≤ c(z) ≤ max_c`, in every
/// base configuration.
pub fn tree_trace_relation(t: &TreeModel, max_c: u32) -> Result<Outcome> {
    let mut cases = vec![];
    for cfg in BaseConfig::ALL {
        for z in t.interior(1) {
            let c = conductor(cfg, &z);
            if (2..=max_c).contains(&c) {
                cases.push((cfg, z));
            }
        }
    }
    for_all(cases, "trace relation", |(cfg, z)| {
        let tr = match trace_orbit(t, *cfg, z) {
            Ok(tr) => tr,
            Err(Error::CheckFailure { detail, .. }) => return Ok(Some(format!("{cfg}: {detail}"))),
            Err(e) => return Err(e),
        };
        Ok((tr.len() != t.q() as usize).then(|| format!("{cfg} {z}: orbit of size {}", tr.len())))
    })
}

/// Inert spheres `|{c = n}| = (q+1) q^{n−1}`.
pub fn tree_sphere_sizes(t: &TreeModel) -> Result<Outcome> {
    let all = t.vertices(t.depth());
    for_all(1..=t.depth(), "inert conductor sphere sizes", |&n| {
        let count = all
            .iter()
            .filter(|v| conductor(BaseConfig::Inert, v) == n)
            .count();
        let expected = (t.q() + 1) as usize * (t.q() as usize).pow(n - 1);
        Ok((count != expected).then(|| format!("n = {n}: {count} ≠ {expected}")))
    })
}

fn weight_at(w: &LaurentPoly, q: u32) -> Result<i64> {
    let r = w.eval_q(q as u64)?;
    if !r.is_integer() {
        return Err(Error::NotIntegral(format!("{w} at q = {q}")));
    }
    r.to_integer()
        .try_into()
        .map_err(|_| Error::NotIntegral(format!("{w} at q = {q} overflows")))
}

/// Lets the `gl2` certificate act on the tree: `sph((a, b))` acts as the
/// distance-`(a − b)` sphere operator and `u_{(1,0)}` as the successor.
pub fn gl2_tree_bridge(cert: &IntegralityCertificate, t: &TreeModel) -> Result<Outcome> {
    if cert.group != "gl2" || cert.lambda != [1, 0] {
        return Err(Error::ConfigError(
            "the tree bridge applies to gl2 at (1,0)".into(),
        ));
    }
    let mut ops = vec![];
    let mut reach = 0;
    for k in 0..=cert.degree {
        let s = cert.spherical(k)?;
        let mut terms = vec![];
        for (l, w) in &s.terms {
            let r = (l[0] - l[1]).unsigned_abs();
            reach = reach.max(r);
            terms.push((r, weight_at(w, t.q())?));
        }
        ops.push(terms);
    }
    let margin = cert.degree as u32 + reach;
    if margin >= t.depth() {
        return Err(Error::ConfigError(
            "tree too shallow for the bridge check".into(),
        ));
    }
    for_all(
        interior_deltas(t, margin),
        "gl2 certificate acting on the tree",
        |(w, d)| {
            let mut total = VertexSum::zero();
            let mut uk = d.clone();
            for (k, terms) in ops.iter().enumerate() {
                if k > 0 {
                    uk = apply_u(t, &uk)?;
                }
                for (r, c) in terms {
                    total.add_scaled(&sphere(t, *r, &uk)?, *c);
                }
            }
            Ok((!total.is_zero()).then(|| w.to_string()))
        },
    )
}

/// Default `λ` for certificates: the nonzero, non-central antidominant
/// coweight of smallest `⟨2ρ, λ⟩` in the unit box.
pub fn default_lambda(d: &RootDatum) -> Option<Coweight> {
    coweight_box(d.rank(), 1)
        .into_iter()
        .filter(|l| d.is_antidominant(l) && d.two_rho_pairing(l) > 0)
        .min_by_key(|l| {
            let support = l.iter().filter(|&&x| x != 0).count();
            (d.two_rho_pairing(l), support, std::cmp::Reverse(l.clone()))
        })
}

/// The spherical coefficients of a certificate evaluated into `H_I`.
pub fn spherical_coefficients(
    alg: &HeckeAlgebra,
    cert: &IntegralityCertificate,
) -> Result<Vec<HeckeElt>> {
    (0..=cert.degree)
        .map(|k| cert.spherical(k)?.to_hecke(alg))
        .collect()
}
