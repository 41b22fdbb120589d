//! Based root data and their validation.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::weyl::WeylGroup;
use crate::coeffs::Coweight;
use crate::error::{Error, Result};

/// An irreducible factor of the root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Positions (into the simple-root list) of the simple roots in this factor.
    pub simple: Vec<usize>,
    /// Index of the highest root of the factor among the positive roots.
    pub highest_root: usize,
}

/// On-disk description of a root datum. `2ρ` is always recomputed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumSpec {
    pub name: String,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i32>>,
    pub positive_roots: Vec<Vec<i32>>,
    pub positive_coroots: Vec<Vec<i32>>,
}

/// A validated based root datum of a split group, with its finite Weyl group.
#[derive(Clone, Debug)]
pub struct RootDatum {
    name: String,
    rank: usize,
    positive_roots: Vec<Coweight>,
    positive_coroots: Vec<Coweight>,
    simple: Vec<usize>,
    expansions: Vec<Vec<i32>>,
    two_rho: Coweight,
    two_rho_vee: Coweight,
    components: Vec<Component>,
    weyl: WeylGroup,
}

/// `⟨x, y⟩` in coordinates.
pub fn pair(x: &[i32], y: &[i32]) -> i64 {
    x.iter().zip(y).map(|(a, b)| *a as i64 * *b as i64).sum()
}

fn reflect(x: &[i32], along: &[i32], by: &[i32]) -> Coweight {
    let k = pair(x, by) as i32;
    Coweight(x.iter().zip(along).map(|(a, b)| a - k * b).collect())
}

fn matrix_rank(rows: &[Coweight]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                let g = num_integer::gcd(a, b);
                let (fa, fb) = (b / g, a / g);
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x = *x * fb - y * fa;
                }
            }
        }
        rank += 1;
    }
    rank
}

impl RootDatum {
    /// Validates and builds a datum, bounding the Weyl group by the default bound
    /// (overridable with `UOPLAB_MAX_WEYL`).
    pub fn new(
        name: impl Into<String>,
        rank: usize,
        simple_roots: Vec<Coweight>,
        positive_roots: Vec<Coweight>,
        positive_coroots: Vec<Coweight>,
    ) -> Result<Self> {
        Self::with_weyl_bound(
            name,
            rank,
            simple_roots,
            positive_roots,
            positive_coroots,
            WeylGroup::default_bound(),
        )
    }

    pub fn with_weyl_bound(
        name: impl Into<String>,
        rank: usize,
        simple_roots: Vec<Coweight>,
        positive_roots: Vec<Coweight>,
        positive_coroots: Vec<Coweight>,
        bound: usize,
    ) -> Result<Self> {
        let invalid = |m: String| Err(Error::InvalidDatum(m));
        let name = name.into();
        if rank == 0 {
            return invalid("rank must be positive".into());
        }
        for v in simple_roots
            .iter()
            .chain(&positive_roots)
            .chain(&positive_coroots)
        {
            if v.rank() != rank {
                return invalid(format!("vector {v} does not have length {rank}"));
            }
        }
        if positive_roots.len() != positive_coroots.len() {
            return invalid(format!(
                "{} positive roots but {} positive coroots",
                positive_roots.len(),
                positive_coroots.len()
            ));
        }
        if positive_roots.len() > 64 {
            return invalid("more than 64 positive roots".into());
        }
        let root_index: HashMap<&Coweight, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        if root_index.len() != positive_roots.len() {
            return invalid("positive roots are not distinct".into());
        }
        for (a, c) in positive_roots.iter().zip(&positive_coroots) {
            if pair(a, c) != 2 {
                return invalid(format!("<{a}, {c}> = {} instead of 2", pair(a, c)));
            }
        }
        let mut simple = Vec::with_capacity(simple_roots.len());
        for s in &simple_roots {
            match root_index.get(s) {
                Some(&i) => simple.push(i),
                None => return invalid(format!("simple root {s} is not a positive root")),
            }
        }
        if matrix_rank(&simple_roots) != simple_roots.len() {
            return invalid("simple roots are linearly dependent".into());
        }
        for (i, &si) in simple.iter().enumerate() {
            for (j, &sj) in simple.iter().enumerate() {
                let a = pair(&positive_roots[sj], &positive_coroots[si]);
                if i != j && a > 0 {
                    return invalid(format!(
                        "Cartan entry <{}, {}> = {a} is positive",
                        positive_roots[sj], positive_coroots[si]
                    ));
                }
            }
        }

        // Close the simple roots under simple reflections, tracking coroots and
        // simple-root coordinates; the closure must be exactly ± the listed roots.
        let nsimple = simple.len();
        let mut seen: HashMap<Coweight, (Coweight, Vec<i32>)> = HashMap::new();
        let mut queue = VecDeque::new();
        for (k, &si) in simple.iter().enumerate() {
            let mut e = vec![0; nsimple];
            e[k] = 1;
            seen.insert(
                positive_roots[si].clone(),
                (positive_coroots[si].clone(), e.clone()),
            );
            queue.push_back(positive_roots[si].clone());
        }
        while let Some(beta) = queue.pop_front() {
            let (beta_vee, coords) = seen[&beta].clone();
            for (k, &si) in simple.iter().enumerate() {
                let (ai, ai_vee) = (&positive_roots[si], &positive_coroots[si]);
                let c = pair(&beta, ai_vee) as i32;
                let image = reflect(&beta, ai, ai_vee);
                let image_vee = reflect(&beta_vee, ai_vee, ai);
                let mut ic = coords.clone();
                ic[k] -= c;
                let listed = root_index.contains_key(&image) || root_index.contains_key(&-&image);
                if !listed {
                    return invalid(format!(
                        "reflection closure produces {image}, which is not a listed root"
                    ));
                }
                match seen.get(&image) {
                    Some((v, e)) => {
                        if *v != image_vee {
                            return invalid(format!(
                                "coroot assignment of {image} is not W-equivariant"
                            ));
                        }
                        if *e != ic {
                            return invalid("simple roots do not form a basis of the roots".into());
                        }
                    }
                    None => {
                        seen.insert(image.clone(), (image_vee, ic));
                        queue.push_back(image);
                    }
                }
            }
        }
        let mut expansions = Vec::with_capacity(positive_roots.len());
        for (i, r) in positive_roots.iter().enumerate() {
            let Some((v, e)) = seen.get(r) else {
                return invalid(format!(
                    "positive root {r} is not generated by the simple roots"
                ));
            };
            if *v != positive_coroots[i] {
                return invalid(format!(
                    "coroot listed for {r} is inconsistent with reflections"
                ));
            }
            if e.iter().any(|&c| c < 0) {
                return invalid(format!(
                    "positive root {r} is not a nonnegative combination of simple roots"
                ));
            }
            expansions.push(e.clone());
        }
        if seen.len() != 2 * positive_roots.len() {
            return invalid("positive roots are not closed under the Weyl group".into());
        }

        let mut two_rho = Coweight::zero(rank);
        for r in &positive_roots {
            two_rho = &two_rho + r;
        }
        let mut two_rho_vee = Coweight::zero(rank);
        for c in &positive_coroots {
            two_rho_vee = &two_rho_vee + c;
        }
        for c in &positive_coroots {
            if pair(&two_rho, c) % 2 != 0 {
                return invalid(format!("<2rho, {c}> is odd"));
            }
        }

        let components =
            Self::find_components(&simple, &positive_roots, &positive_coroots, &expansions);
        let mut d = RootDatum {
            name,
            rank,
            positive_roots,
            positive_coroots,
            simple,
            expansions,
            two_rho,
            two_rho_vee,
            components,
            weyl: WeylGroup::trivial(rank),
        };
        d.weyl = WeylGroup::generate(&d, bound)?;
        Ok(d)
    }

    fn find_components(
        simple: &[usize],
        roots: &[Coweight],
        coroots: &[Coweight],
        expansions: &[Vec<i32>],
    ) -> Vec<Component> {
        let n = simple.len();
        let mut label: Vec<Option<usize>> = vec![None; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if label[start].is_some() {
                continue;
            }
            let id = comps.len();
            let mut members = vec![];
            let mut stack = vec![start];
            label[start] = Some(id);
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..n {
                    if label[j].is_none() && pair(&roots[simple[j]], &coroots[simple[i]]) != 0 {
                        label[j] = Some(id);
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            let highest_root = (0..roots.len())
                .filter(|&r| {
                    expansions[r]
                        .iter()
                        .enumerate()
                        .all(|(k, &c)| c == 0 || label[k] == Some(id))
                })
                .max_by_key(|&r| expansions[r].iter().sum::<i32>())
                .expect("component has a root");
            comps.push(Component {
                simple: members,
                highest_root,
            });
        }
        comps
    }

    pub fn from_spec(spec: &DatumSpec) -> Result<Self> {
        let conv = |v: &Vec<Vec<i32>>| v.iter().map(|x| Coweight::from(x.clone())).collect();
        Self::new(
            spec.name.clone(),
            spec.rank,
            conv(&spec.simple_roots),
            conv(&spec.positive_roots),
            conv(&spec.positive_coroots),
        )
    }

    pub fn to_spec(&self) -> DatumSpec {
        let conv = |v: &[Coweight]| v.iter().map(|x| x.to_vec()).collect();
        DatumSpec {
            name: self.name.clone(),
            rank: self.rank,
            simple_roots: self.simple_roots().map(|r| r.to_vec()).collect(),
            positive_roots: conv(&self.positive_roots),
            positive_coroots: conv(&self.positive_coroots),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Coweight] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Coweight] {
        &self.positive_coroots
    }

    /// Indices of the simple roots among the positive roots.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = &Coweight> {
        self.simple.iter().map(|&i| &self.positive_roots[i])
    }

    pub fn simple_coroots(&self) -> impl Iterator<Item = &Coweight> {
        self.simple.iter().map(|&i| &self.positive_coroots[i])
    }

    /// Coordinates of each positive root in the basis of simple roots.
    pub fn expansions(&self) -> &[Vec<i32>] {
        &self.expansions
    }

    pub fn two_rho(&self) -> &Coweight {
        &self.two_rho
    }

    /// Sum of the positive coroots; pairs to 2 with every simple root.
    pub fn two_rho_vee(&self) -> &Coweight {
        &self.two_rho_vee
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn check_rank(&self, lambda: &Coweight) -> Result<()> {
        if lambda.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: lambda.rank(),
            });
        }
        Ok(())
    }

    /// `⟨λ, α⟩ ≥ 0` for every positive root `α`.
    pub fn is_antidominant(&self, lambda: &Coweight) -> bool {
        self.simple_roots().all(|a| pair(lambda, a) >= 0)
    }

    /// `⟨2ρ, λ⟩`.
    pub fn two_rho_pairing(&self, lambda: &[i32]) -> i64 {
        pair(&self.two_rho, lambda)
    }
}

/// Free-function form of [`RootDatum::is_antidominant`].
pub fn is_antidominant(d: &RootDatum, lambda: &Coweight) -> bool {
    d.is_antidominant(lambda)
}
