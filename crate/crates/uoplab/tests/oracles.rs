//! Independent oracles: structure constants counted inside `GL_n(F_p)`, lengths
//! from breadth-first search over the generators, the Iwahori–Matsumoto
//! presentation, and tree operators recomputed from graph distances.

use std::collections::{HashMap, HashSet, VecDeque};

use num_rational::BigRational;
use num_traits::ToPrimitive;

use uoplab::coeffs::{Coweight, LaurentPoly};
use uoplab::hecke::{HeckeAlgebra, HeckeElt};
use uoplab::rootdata::{dot_orbit_sum, preset, ExtAffWeylElt, GeneratorKind};
use uoplab::tree::{apply_u, apply_v, hecke_t, sphere, TreeModel, TreeVertex, VertexSum};

fn alg(name: &str) -> HeckeAlgebra {
    HeckeAlgebra::from_datum(preset(name).unwrap()).unwrap()
}

type Mat = Vec<u8>;

fn mat_mul(a: &Mat, b: &Mat, n: usize, p: u8) -> Mat {
    let mut out = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            let s: u32 = (0..n)
                .map(|k| a[i * n + k] as u32 * b[k * n + j] as u32)
                .sum();
            out[i * n + j] = (s % p as u32) as u8;
        }
    }
    out
}

fn det(m: &Mat, n: usize, p: u8) -> u8 {
    let mut a: Vec<i64> = m.iter().map(|&x| x as i64).collect();
    let p = p as i64;
    let mut d = 1i64;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| a[r * n + c] % p != 0) else {
            return 0;
        };
        if r != c {
            for k in 0..n {
                a.swap(r * n + k, c * n + k);
            }
            d = -d;
        }
        let piv = a[c * n + c];
        d = d * piv % p;
        let inv = (1..p).find(|x| x * piv % p == 1).unwrap();
        for r in c + 1..n {
            let f = a[r * n + c] * inv % p;
            for k in 0..n {
                a[r * n + k] = (a[r * n + k] - f * a[c * n + k]).rem_euclid(p);
            }
        }
    }
    d.rem_euclid(p) as u8
}

fn all_matrices(n: usize, p: u8) -> impl Iterator<Item = Mat> {
    let total = (p as u64).pow((n * n) as u32);
    (0..total).map(move |mut k| {
        (0..n * n)
            .map(|_| {
                let d = (k % p as u64) as u8;
                k /= p as u64;
                d
            })
            .collect()
    })
}

fn perm_matrix(perm: &[usize]) -> Mat {
    let n = perm.len();
    let mut m = vec![0u8; n * n];
    for (j, &i) in perm.iter().enumerate() {
        m[i * n + j] = 1;
    }
    m
}

/// Structure constants of `H(GL_n(F_p), B)` for the upper triangular Borel,
/// `c(x, y; z) = #{gB ⊂ BxB : g⁻¹z ∈ ByB}`, indexed by permutations.
struct FiniteHecke {
    n: usize,
    p: u8,
    group: Vec<Mat>,
    cell: HashMap<Mat, usize>,
    perms: Vec<Vec<usize>>,
    borel_size: usize,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

impl FiniteHecke {
    fn new(n: usize, p: u8) -> Self {
        let group: Vec<Mat> = all_matrices(n, p).filter(|m| det(m, n, p) != 0).collect();
        let borel: Vec<Mat> = group
            .iter()
            .filter(|m| (0..n).all(|i| (0..i).all(|j| m[i * n + j] == 0)))
            .cloned()
            .collect();
        let perms = permutations(n);
        let mut cell = HashMap::new();
        for (k, w) in perms.iter().enumerate() {
            let pw = perm_matrix(w);
            for b1 in &borel {
                let b1w = mat_mul(b1, &pw, n, p);
                for b2 in &borel {
                    cell.insert(mat_mul(&b1w, b2, n, p), k);
                }
            }
        }
        assert_eq!(cell.len(), group.len());
        FiniteHecke {
            n,
            p,
            borel_size: borel.len(),
            group,
            cell,
            perms,
        }
    }

    fn inverse(&self, g: &Mat) -> Mat {
        self.group
            .iter()
            .find(|h| {
                let e = mat_mul(g, h, self.n, self.p);
                (0..self.n).all(|i| (0..self.n).all(|j| e[i * self.n + j] == (i == j) as u8))
            })
            .unwrap()
            .clone()
    }

    fn structure_constants(&self, x: usize, y: usize) -> Vec<usize> {
        let inverses: Vec<Mat> = self.group.iter().map(|g| self.inverse(g)).collect();
        let mut out = vec![];
        for z in 0..self.perms.len() {
            let zm = perm_matrix(&self.perms[z]);
            let count = self
                .group
                .iter()
                .zip(&inverses)
                .filter(|(g, gi)| {
                    self.cell[*g] == x && self.cell[&mat_mul(gi, &zm, self.n, self.p)] == y
                })
                .count();
            assert_eq!(count % self.borel_size, 0);
            out.push(count / self.borel_size);
        }
        out
    }
}

/// Sends each Weyl group element of a `gl_n` preset to the permutation of its reduced word.
fn weyl_to_perm(a: &HeckeAlgebra) -> Vec<Vec<usize>> {
    let d = a.datum();
    let n = d.rank();
    let transpositions: Vec<(usize, usize)> = d
        .simple_roots()
        .map(|r| {
            let i = r.iter().position(|&x| x == 1).unwrap();
            let j = r.iter().position(|&x| x == -1).unwrap();
            (i.min(j), i.max(j))
        })
        .collect();
    a.group()
        .weyl()
        .elements()
        .iter()
        .map(|e| {
            let mut perm: Vec<usize> = (0..n).collect();
            for &s in &e.word {
                let (i, j) = transpositions[s as usize];
                perm = (0..n)
                    .map(|k| {
                        perm[if k == i {
                            j
                        } else if k == j {
                            i
                        } else {
                            k
                        }]
                    })
                    .collect();
            }
            perm
        })
        .collect()
}

fn eval_int(c: &LaurentPoly, q: u64) -> i64 {
    let r: BigRational = c.eval_q(q).unwrap();
    assert!(r.is_integer());
    r.to_integer().to_i64().unwrap()
}

fn check_finite_part(group: &str, n: usize, p: u8) {
    let a = alg(group);
    let fh = FiniteHecke::new(n, p);
    let order = a.group().weyl().order() as u32;
    let to_perm = weyl_to_perm(&a);
    let perm_index = |w: u32| -> usize {
        fh.perms
            .iter()
            .position(|q| *q == to_perm[w as usize])
            .unwrap()
    };
    for x in 0..order {
        for y in 0..order {
            let prod = a.mul(&a.basis(a.group().finite(x)), &a.basis(a.group().finite(y)));
            assert!(prod.terms().all(|(e, _)| e.lambda.is_zero()));
            let counts = fh.structure_constants(perm_index(x), perm_index(y));
            for z in 0..order {
                let c = eval_int(&prod.coeff(&a.group().finite(z)), p as u64);
                assert_eq!(
                    c,
                    counts[perm_index(z)] as i64,
                    "{group} over F_{p}: T_{x} T_{y} at {z}"
                );
            }
        }
    }
}

#[test]
fn finite_hecke_gl2_counts_in_gl2_fp() {
    for p in [2, 3, 5] {
        check_finite_part("gl2", 2, p);
    }
}

#[test]
fn finite_hecke_gl3_counts_in_gl3_f2() {
    check_finite_part("gl3", 3, 2);
}

/// Lengths by breadth-first search from the length-zero elements.
fn bfs_lengths(a: &HeckeAlgebra, radius: i32) -> HashMap<ExtAffWeylElt, u32> {
    let g = a.group();
    let bound = radius + 4;
    let inside = |x: &ExtAffWeylElt| x.lambda.iter().all(|c| c.abs() <= bound);
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    for x in g.elements_in_box(bound, 0) {
        dist.insert(x.clone(), 0);
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        let dx = dist[&x];
        for s in 0..g.generators().len() {
            let y = g.mul_gen(&x, s);
            if inside(&y) && !dist.contains_key(&y) {
                dist.insert(y.clone(), dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

#[test]
fn lengths_match_breadth_first_search() {
    for name in ["gl2", "sl2", "gl3", "sp4"] {
        let a = alg(name);
        let g = a.group();
        let dist = bfs_lengths(&a, 1);
        for x in g.elements_in_box(1, u32::MAX) {
            assert_eq!(Some(&g.length(&x)), dist.get(&x), "{name} {x:?}");
        }
    }
}

fn coxeter_order(a: &HeckeAlgebra, s: usize, t: usize) -> usize {
    let g = a.group();
    let mut x = g.identity();
    for k in 1..=12 {
        x = g.mul_gen(&g.mul_gen(&x, s), t);
        if x == g.identity() {
            return k;
        }
    }
    0
}

#[test]
fn iwahori_matsumoto_presentation() {
    for name in ["gl2", "sl2", "pgl2", "gl3", "sl3", "sp4"] {
        let a = alg(name);
        let g = a.group();
        let gens = g.generators().len();
        let q = LaurentPoly::q();
        for s in 0..gens {
            let ts = a.basis(g.generators()[s].elt.clone());
            let mut expected = ts.scale(&(&q - &LaurentPoly::one()));
            expected.add_term(g.identity(), q.clone());
            assert_eq!(a.mul(&ts, &ts), expected, "{name} quadratic s{s}");
            for t in 0..s {
                let m = coxeter_order(&a, s, t);
                if m == 0 {
                    continue;
                }
                let alt = |a0: usize, b0: usize| -> HeckeElt {
                    let mut h = a.one();
                    for k in 0..m {
                        h = a.right_mul_gen(&h, if k % 2 == 0 { a0 } else { b0 });
                    }
                    h
                };
                assert_eq!(alt(s, t), alt(t, s), "{name} braid s{s} s{t}");
            }
        }
        let lengths_add: Vec<_> = g.elements_in_box(1, 3);
        for x in &lengths_add {
            for y in &lengths_add {
                let xy = g.mul(x, y);
                if g.length(&xy) == g.length(x) + g.length(y) {
                    assert_eq!(
                        a.mul(&a.basis(x.clone()), &a.basis(y.clone())),
                        a.basis(xy),
                        "{name} {x:?} {y:?}"
                    );
                }
            }
        }
        for omega in g.elements_in_box(2, 0) {
            for s in 0..gens {
                let conj = g.mul(&g.mul(&omega, &g.generators()[s].elt), &g.inverse(&omega));
                let is_gen = g.generators().iter().any(|x| x.elt == conj);
                assert!(is_gen, "{name}: ω s ω⁻¹ is not simple");
            }
        }
    }
}

#[test]
fn generator_kinds_cover_components() {
    let g = alg("sp4");
    let affine = g
        .group()
        .generators()
        .iter()
        .filter(|x| matches!(x.kind, GeneratorKind::Affine(_)))
        .count();
    assert_eq!(affine, 1);
    assert_eq!(g.group().generators().len(), 3);
}

#[test]
fn minuscule_satake_images_are_orbit_sums() {
    let a = alg("gl3");
    for l in [[1, 0, 0], [1, 1, 0], [0, 0, -1]] {
        let l = Coweight::from(l.to_vec());
        let s = a.satake(&a.spherical_elt(&l).unwrap()).unwrap();
        assert_eq!(s, dot_orbit_sum(a.datum(), &l), "{l}");
    }
    let a = alg("gl2");
    let s = a
        .satake(&a.spherical_elt(&Coweight::from(vec![1, 0])).unwrap())
        .unwrap();
    let expected = dot_orbit_sum(a.datum(), &Coweight::from(vec![1, 0]));
    assert_eq!(s, expected);
    assert_eq!(
        expected.coeff(&Coweight::from(vec![0, 1])),
        LaurentPoly::q()
    );
}

#[test]
fn spherical_sizes_match_double_coset_volumes() {
    for name in ["gl2", "gl3", "sp4"] {
        let a = alg(name);
        let order = a.group().weyl().order();
        for l in uoplab::rootdata::coweight_box(a.datum().rank(), 1) {
            if !a.datum().is_antidominant(&l) {
                continue;
            }
            let h = a.spherical_elt(&l).unwrap();
            let orbit_len = uoplab::rootdata::orbit(a.datum(), &l).len();
            assert_eq!(h.len(), orbit_len * order);
        }
    }
}

fn busemann(v: &TreeVertex, far: usize) -> i64 {
    let end: TreeVertex = "0".repeat(far).parse().unwrap();
    v.distance(&end) as i64 - far as i64
}

fn ball(t: &TreeModel) -> Vec<TreeVertex> {
    t.vertices(t.depth())
}

#[test]
fn tree_operators_from_distances() {
    for q in [2, 3] {
        let t = TreeModel::new(q, 6).unwrap();
        let all = ball(&t);
        let far = 40;
        for w in t.interior(2) {
            let d = VertexSum::delta(w.clone());
            let nbrs: Vec<&TreeVertex> = all.iter().filter(|x| x.distance(&w) == 1).collect();
            let t_expected: VertexSum = nbrs.iter().map(|x| (*x).clone()).collect();
            assert_eq!(hecke_t(&t, &d).unwrap(), t_expected);
            let b = busemann(&w, far);
            let u_expected: VertexSum = nbrs
                .iter()
                .filter(|x| busemann(x, far) == b + 1)
                .map(|x| (*x).clone())
                .collect();
            let v_expected: VertexSum = nbrs
                .iter()
                .filter(|x| busemann(x, far) == b - 1)
                .map(|x| (*x).clone())
                .collect();
            let u = apply_u(&t, &d).unwrap();
            let v = apply_v(&t, &d).unwrap();
            assert_eq!(u, u_expected, "q={q} {w}");
            assert_eq!(v, v_expected, "q={q} {w}");
            for k in 0..=2 {
                let s: VertexSum = all
                    .iter()
                    .filter(|x| x.distance(&w) == k)
                    .cloned()
                    .collect();
                assert_eq!(sphere(&t, k as u32, &d).unwrap(), s);
            }
        }
    }
}

#[test]
fn successor_points_away_from_the_marked_end() {
    let t = TreeModel::new(2, 6).unwrap();
    let far = 40;
    for w in t.interior(2) {
        let u = apply_u(&t, &VertexSum::delta(w.clone())).unwrap();
        assert_eq!(u.len(), 2);
        for (x, _) in u.terms() {
            assert_eq!(busemann(x, far), busemann(&w, far) + 1, "{w} -> {x}");
        }
    }
    let levels: HashSet<i64> = t
        .interior(2)
        .iter()
        .map(|w| w.level() - busemann(w, far))
        .collect();
    assert_eq!(levels.len(), 1);
}
