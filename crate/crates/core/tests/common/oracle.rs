//! Brute-force reference answers for kA3 (1 -> 2 -> 3) over F_2 with
//! T = add(P1). Everything is decided by enumerating matrices and vectors;
//! nothing here calls the library's linear algebra.

use std::sync::Arc;

use stabcat_core::{Field, Matrix, Morphism, PathAlgebra, Quiver, Representation};

pub type Mat = Vec<Vec<u8>>;

/// A representation of 1 -> 2 -> 3: `a` is `dims[1] x dims[0]`, `b` is
/// `dims[2] x dims[1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thin {
    pub dims: [usize; 3],
    pub a: Mat,
    pub b: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Map {
    pub m: [Mat; 3],
}

fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![0; c]; r]
}

fn all_matrices(r: usize, c: usize) -> Vec<Mat> {
    let n = r * c;
    (0..1u32 << n)
        .map(|bits| (0..r).map(|i| (0..c).map(|j| ((bits >> (i * c + j)) & 1) as u8).collect()).collect())
        .collect()
}

fn all_vectors(n: usize) -> Vec<Vec<u8>> {
    (0..1u32 << n).map(|bits| (0..n).map(|i| ((bits >> i) & 1) as u8).collect()).collect()
}

fn mul(a: &Mat, b: &Mat, inner: usize, cols: usize) -> Mat {
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(0, |s, k| s ^ (row[k] & b[k][j]))).collect())
        .collect()
}

fn apply(a: &Mat, v: &[u8]) -> Vec<u8> {
    a.iter().map(|row| row.iter().zip(v).fold(0, |s, (x, y)| s ^ (x & y))).collect()
}

fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x ^ y).collect()).collect()
}

fn transpose(a: &Mat, rows: usize, cols: usize) -> Mat {
    (0..cols).map(|j| (0..rows).map(|i| a[i][j]).collect()).collect()
}

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect()
}

impl Thin {
    pub fn p1() -> Thin {
        Thin { dims: [1, 1, 1], a: vec![vec![1]], b: vec![vec![1]] }
    }

    /// The transported representation of the opposite algebra, relabelled
    /// `v -> 4 - v` so it is again a representation of 1 -> 2 -> 3.
    pub fn dual(&self) -> Thin {
        let [d0, d1, d2] = self.dims;
        Thin { dims: [d2, d1, d0], a: transpose(&self.b, d2, d1), b: transpose(&self.a, d1, d0) }
    }

    fn arrow(&self, v: usize) -> &Mat {
        if v == 0 {
            &self.a
        } else {
            &self.b
        }
    }
}

/// Every representation with at most one dimension per vertex.
pub fn thin_corpus() -> Vec<Thin> {
    let mut out = Vec::new();
    for bits in 0..8usize {
        let dims = [bits & 1, (bits >> 1) & 1, (bits >> 2) & 1];
        for a in all_matrices(dims[1], dims[0]) {
            for b in all_matrices(dims[2], dims[1]) {
                out.push(Thin { dims, a: a.clone(), b });
            }
        }
    }
    out
}

impl Map {
    pub fn zero(x: &Thin, y: &Thin) -> Map {
        Map { m: [0, 1, 2].map(|v| zeros(y.dims[v], x.dims[v])) }
    }

    pub fn identity(x: &Thin) -> Map {
        Map { m: [0, 1, 2].map(|v| identity(x.dims[v])) }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Map, x: &Thin) -> Map {
        Map { m: [0, 1, 2].map(|v| mul(&self.m[v], &first.m[v], first.m[v].len(), x.dims[v])) }
    }

    pub fn plus(&self, other: &Map) -> Map {
        Map { m: [0, 1, 2].map(|v| add(&self.m[v], &other.m[v])) }
    }

    pub fn dual(&self, x: &Thin, y: &Thin) -> Map {
        Map { m: [2, 1, 0].map(|v| transpose(&self.m[v], y.dims[v], x.dims[v])) }
    }
}

/// All morphisms `x -> y`.
pub fn homs(x: &Thin, y: &Thin) -> Vec<Map> {
    let mut out = Vec::new();
    for m0 in all_matrices(y.dims[0], x.dims[0]) {
        for m1 in all_matrices(y.dims[1], x.dims[1]) {
            if mul(&y.a, &m0, y.dims[0], x.dims[0]) != mul(&m1, &x.a, x.dims[1], x.dims[0]) {
                continue;
            }
            for m2 in all_matrices(y.dims[2], x.dims[2]) {
                if mul(&y.b, &m1, y.dims[1], x.dims[1]) == mul(&m2, &x.b, x.dims[2], x.dims[1]) {
                    out.push(Map { m: [m0.clone(), m1.clone(), m2] });
                }
            }
        }
    }
    out
}

/// Maps `x -> y` that factor through a sum of copies of P1: the additive
/// closure of all composites `x -> P1 -> y`.
pub fn ideal(x: &Thin, y: &Thin) -> Vec<Map> {
    let p = Thin::p1();
    let mut set = vec![Map::zero(x, y)];
    for h in homs(x, &p) {
        for g in homs(&p, y) {
            let c = g.after(&h, x);
            let mut grown = set.clone();
            for s in &set {
                let t = s.plus(&c);
                if !grown.contains(&t) {
                    grown.push(t);
                }
            }
            set = grown;
        }
    }
    set
}

pub fn stably_zero(f: &Map, x: &Thin, y: &Thin) -> bool {
    ideal(x, y).contains(f)
}

/// Whether a subrepresentation given by its vector sets at each vertex,
/// with arrows acting by `act`, is a sum of copies of P1: equal sizes at
/// every vertex and arrows injective.
fn sets_form_p1_power(sets: &[Vec<Vec<u8>>; 3], act: impl Fn(usize, &[u8]) -> Vec<u8>) -> bool {
    if sets[0].len() != sets[1].len() || sets[1].len() != sets[2].len() {
        return false;
    }
    (0..2).all(|v| sets[v].iter().filter(|c| c.iter().any(|&e| e != 0)).all(|c| act(v, c).iter().any(|&e| e != 0)))
}

pub fn in_add(m: &Thin) -> bool {
    let sets = [0, 1, 2].map(|v| all_vectors(m.dims[v]));
    sets_form_p1_power(&sets, |v, c| apply(m.arrow(v), c))
}

fn is_epi(f: &Map, x: &Thin, y: &Thin) -> bool {
    (0..3).all(|v| {
        let mut image: Vec<Vec<u8>> = all_vectors(x.dims[v]).iter().map(|c| apply(&f.m[v], c)).collect();
        image.sort();
        image.dedup();
        image.len() == 1 << y.dims[v]
    })
}

/// Stable mono: every `g: z -> x` with `f ∘ g` stably zero is stably zero.
/// The corpus contains every indecomposable, which suffices by additivity.
pub fn mono(f: &Map, x: &Thin, y: &Thin, objects: &[Thin]) -> bool {
    objects.iter().all(|z| {
        let ix = ideal(z, x);
        let iy = ideal(z, y);
        homs(z, x).iter().all(|g| !iy.contains(&f.after(g, z)) || ix.contains(g))
    })
}

pub fn epi(f: &Map, x: &Thin, y: &Thin, objects: &[Thin]) -> bool {
    objects.iter().all(|z| {
        let iy = ideal(y, z);
        let ix = ideal(x, z);
        homs(y, z).iter().all(|g| !ix.contains(&g.after(f, x)) || iy.contains(g))
    })
}

pub fn iso(f: &Map, x: &Thin, y: &Thin) -> bool {
    let ixx = ideal(x, x);
    let iyy = ideal(y, y);
    let (idx, idy) = (Map::identity(x), Map::identity(y));
    homs(y, x).iter().any(|g| ixx.contains(&g.after(f, x).plus(&idx)) && iyy.contains(&f.after(g, y).plus(&idy)))
}

/// For an epi: the kernel is a sum of copies of P1. Otherwise: the pullback
/// of `f` against the sum of a basis of `Hom(P1, y)` is.
pub fn strong_mono(f: &Map, x: &Thin, y: &Thin) -> bool {
    if is_epi(f, x, y) {
        let sets = [0, 1, 2].map(|v| all_vectors(x.dims[v]).into_iter().filter(|c| apply(&f.m[v], c).iter().all(|&e| e == 0)).collect());
        return sets_form_p1_power(&sets, |v, c| apply(x.arrow(v), c));
    }
    let p = Thin::p1();
    let mut basis: Vec<Map> = Vec::new();
    let mut span = vec![Map::zero(&p, y)];
    for h in homs(&p, y) {
        if !span.contains(&h) {
            let extra: Vec<Map> = span.iter().map(|s| s.plus(&h)).collect();
            span.extend(extra);
            basis.push(h);
        }
    }
    let d = basis.len();
    let sets = [0, 1, 2].map(|v| {
        let mut corner = Vec::new();
        for xv in all_vectors(x.dims[v]) {
            let fx = apply(&f.m[v], &xv);
            for t in all_vectors(d) {
                let mut pt = vec![0u8; y.dims[v]];
                for (k, h) in basis.iter().enumerate() {
                    if t[k] == 1 {
                        pt = pt.iter().zip(apply(&h.m[v], &[1])).map(|(a, b)| a ^ b).collect();
                    }
                }
                if pt == fx {
                    let mut c = xv.clone();
                    c.extend(&t);
                    corner.push(c);
                }
            }
        }
        corner
    });
    sets_form_p1_power(&sets, |v, c| {
        let (xs, ts) = c.split_at(x.dims[v]);
        let mut out = apply(x.arrow(v), xs);
        out.extend_from_slice(ts);
        out
    })
}

/// Strong epi of `f` is strong mono of the transported map.
pub fn strong_epi(f: &Map, x: &Thin, y: &Thin) -> bool {
    strong_mono(&f.dual(x, y), &y.dual(), &x.dual())
}

pub fn algebra() -> Arc<PathAlgebra> {
    let q = Quiver::from_strs(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
    Arc::new(PathAlgebra::new(q, &[], Field::f2()).unwrap())
}

fn to_matrix(m: &Mat, rows: usize, cols: usize) -> Matrix {
    let rows_u32: Vec<Vec<u32>> = (0..rows).map(|i| m[i].iter().map(|&e| u32::from(e)).collect()).collect();
    Matrix::from_rows(Field::f2(), cols, &rows_u32).unwrap()
}

pub fn to_rep(alg: &Arc<PathAlgebra>, t: &Thin) -> Representation {
    let [d0, d1, d2] = t.dims;
    Representation::new(alg.clone(), t.dims.to_vec(), vec![to_matrix(&t.a, d1, d0), to_matrix(&t.b, d2, d1)]).unwrap()
}

pub fn from_morphism(f: &Morphism) -> Map {
    Map {
        m: [0, 1, 2].map(|v| {
            let m = f.map(v);
            (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c) as u8).collect()).collect()
        }),
    }
}
