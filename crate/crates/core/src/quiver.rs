//! Quivers and path algebras with monomial relations.
//!
//! Paths compose left to right: the path `[a, b]` means "first `a`, then
//! `b`", so it runs from the source of `a` to the target of `b`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, from, to)` triples.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut out = Quiver { vertices, arrows: Vec::new() };
        for (name, from, to) in arrows {
            if out.arrow_index(&name).is_some() {
                return Err(Error::DuplicateLabel(name));
            }
            let source = out.vertex_index(&from).ok_or(Error::UnknownVertex(from))?;
            let target = out.vertex_index(&to).ok_or(Error::UnknownVertex(to))?;
            out.arrows.push(Arrow { name, source, target });
        }
        Ok(out)
    }

    /// Convenience constructor from string slices.
    pub fn from_strs(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(
            vertices.iter().copied(),
            arrows.iter().map(|&(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
        )
    }

    /// The linearly oriented quiver `1 -> 2 -> ... -> n` with arrows `a1, a2, ...`.
    pub fn linear(n: usize) -> Self {
        let vertices: Vec<String> = (1..=n).map(|i| format!("{i}")).collect();
        let arrows = (1..n).map(|i| (format!("a{i}"), format!("{i}"), format!("{}", i + 1)));
        Self::new(vertices, arrows).expect("linear quiver is well formed")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }
    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }
    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices and arrow names, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }
}

/// A path of the quiver. The trivial path `e_v` has no arrows and
/// `source == target == v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", q.vertex_label(self.source));
        }
        self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("")
    }
}

pub const DEFAULT_LENGTH_CAP: usize = 64;

/// `kQ/I` for a monomial ideal `I`, with its basis of nonzero paths.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    quiver: Quiver,
    relations: Vec<Vec<usize>>,
    field: Field,
    basis: Vec<Path>,
    index: BTreeMap<(usize, Vec<usize>), usize>,
    length_cap: usize,
}

impl PartialEq for PathAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations && self.field == other.field
    }
}
impl Eq for PathAlgebra {}

impl PathAlgebra {
    /// Relations are arrow-name sequences in composition order.
    pub fn new(quiver: Quiver, relations: &[Vec<String>], field: Field) -> Result<Self> {
        Self::with_length_cap(quiver, relations, field, DEFAULT_LENGTH_CAP)
    }

    pub fn with_length_cap(quiver: Quiver, relations: &[Vec<String>], field: Field, cap: usize) -> Result<Self> {
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            let label = r.join("");
            if r.len() < 2 {
                return Err(Error::InvalidRelation { relation: label, reason: "length below 2".into() });
            }
            let mut idx = Vec::with_capacity(r.len());
            for name in r {
                idx.push(quiver.arrow_index(name).ok_or_else(|| Error::UnknownArrow(name.clone()))?);
            }
            if idx.windows(2).any(|w| quiver.arrow(w[0]).target != quiver.arrow(w[1]).source) {
                return Err(Error::InvalidRelation { relation: label, reason: "arrows are not composable".into() });
            }
            rels.push(idx);
        }
        Self::from_indices(quiver, rels, field, cap)
    }

    fn from_indices(quiver: Quiver, relations: Vec<Vec<usize>>, field: Field, cap: usize) -> Result<Self> {
        let mut basis = Vec::new();
        for v in 0..quiver.vertex_count() {
            let mut queue = VecDeque::new();
            queue.push_back(Path::trivial(v));
            while let Some(p) = queue.pop_front() {
                if p.len() > cap {
                    return Err(Error::InfiniteDimensional { cap });
                }
                for (ai, a) in quiver.arrows().iter().enumerate() {
                    if a.source != p.target {
                        continue;
                    }
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    if relations.iter().any(|r| arrows.ends_with(r)) {
                        continue;
                    }
                    queue.push_back(Path { source: p.source, target: a.target, arrows });
                }
                basis.push(p);
            }
        }
        let index = basis.iter().enumerate().map(|(i, p)| ((p.source, p.arrows.clone()), i)).collect();
        Ok(PathAlgebra { quiver, relations, field, basis, index, length_cap: cap })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn field(&self) -> Field {
        self.field
    }
    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }
    pub fn length_cap(&self) -> usize {
        self.length_cap
    }
    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }
    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows().len()
    }

    /// All nonzero paths, grouped by source vertex and ordered by length.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Nonzero paths from `v` to `w`, in basis order.
    pub fn paths_between(&self, v: usize, w: usize) -> Vec<&Path> {
        self.basis.iter().filter(|p| p.source == v && p.target == w).collect()
    }

    /// Position of a path in the basis; `None` if it is zero in the algebra.
    pub fn path_index(&self, p: &Path) -> Option<usize> {
        self.index.get(&(p.source, p.arrows.clone())).copied()
    }

    /// Looks up a path given as arrow names starting at vertex `source`.
    pub fn path_from_names(&self, source: usize, names: &[&str]) -> Result<Path> {
        let mut p = Path::trivial(source);
        for n in names {
            let a = self.quiver.arrow_index(n).ok_or_else(|| Error::UnknownArrow((*n).into()))?;
            let arr = self.quiver.arrow(a);
            if arr.source != p.target {
                return Err(Error::InvalidRelation { relation: names.concat(), reason: "arrows are not composable".into() });
            }
            p.arrows.push(a);
            p.target = arr.target;
        }
        Ok(p)
    }

    /// `p` followed by `q`; `None` if not composable or zero in the algebra.
    pub fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.target != q.source {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        let r = Path { source: p.source, target: q.target, arrows };
        self.path_index(&r).map(|_| r)
    }

    pub fn relation_names(&self) -> Vec<Vec<String>> {
        self.relations
            .iter()
            .map(|r| r.iter().map(|&a| self.quiver.arrow(a).name.clone()).collect())
            .collect()
    }

    /// The opposite algebra: arrows reversed, relation paths reversed.
    pub fn opposite(&self) -> Result<PathAlgebra> {
        let relations = self.relations.iter().map(|r| r.iter().rev().copied().collect()).collect();
        Self::from_indices(self.quiver.opposite(), relations, self.field, self.length_cap)
    }

    /// Same quiver and relations over another prime field.
    pub fn with_field(&self, field: Field) -> PathAlgebra {
        let mut out = self.clone();
        out.field = field;
        out
    }

    /// Whether `other` is the opposite of `self` (same labels, reversed arrows and relations).
    pub fn is_opposite_of(&self, other: &PathAlgebra) -> bool {
        self.field == other.field
            && self.quiver == other.quiver.opposite()
            && self.relations.len() == other.relations.len()
            && self
                .relations
                .iter()
                .zip(&other.relations)
                .all(|(a, b)| a.iter().eq(b.iter().rev()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn names(v: &[&[&str]]) -> Vec<Vec<String>> {
        v.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
    }

    #[test]
    fn a3_has_six_paths() {
        let q = Quiver::from_strs(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let alg = PathAlgebra::new(q, &[], Field::f2()).unwrap();
        assert_eq!(alg.dim(), 6);
        let labels: Vec<String> = alg.basis().iter().map(|p| p.display(alg.quiver())).collect();
        assert_eq!(labels, vec!["e1", "a", "ab", "e2", "b", "e3"]);
    }

    #[test]
    fn single_vertex() {
        let q = Quiver::from_strs(&["1"], &[]).unwrap();
        let alg = PathAlgebra::new(q, &[], Field::default()).unwrap();
        assert_eq!(alg.dim(), 1);
    }

    #[test]
    fn loop_without_relations_is_infinite() {
        let q = Quiver::from_strs(&["1"], &[("x", "1", "1")]).unwrap();
        let err = PathAlgebra::with_length_cap(q.clone(), &[], Field::f2(), 8).unwrap_err();
        assert_eq!(err, Error::InfiniteDimensional { cap: 8 });
        let alg = PathAlgebra::new(q, &names(&[&["x", "x"]]), Field::f2()).unwrap();
        assert_eq!(alg.dim(), 2);
    }

    #[test]
    fn bad_relations() {
        let q = Quiver::from_strs(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        assert!(matches!(
            PathAlgebra::new(q.clone(), &names(&[&["b", "a"]]), Field::f2()),
            Err(Error::InvalidRelation { .. })
        ));
        assert!(matches!(
            PathAlgebra::new(q.clone(), &names(&[&["a"]]), Field::f2()),
            Err(Error::InvalidRelation { .. })
        ));
        assert!(matches!(
            PathAlgebra::new(q, &names(&[&["a", "z"]]), Field::f2()),
            Err(Error::UnknownArrow(_))
        ));
    }

    #[test]
    fn subpaths_of_basis_paths_are_basis_paths() {
        let q = Quiver::from_strs(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4"), ("d", "4", "1")],
        )
        .unwrap();
        let alg = PathAlgebra::new(q, &names(&[&["a", "b", "c"], &["c", "d"]]), Field::f2()).unwrap();
        for p in alg.basis() {
            for i in 0..p.len() {
                for j in i + 1..=p.len() {
                    let src = alg.quiver().arrow(p.arrows[i]).source;
                    let sub = Path {
                        source: src,
                        target: alg.quiver().arrow(p.arrows[j - 1]).target,
                        arrows: p.arrows[i..j].to_vec(),
                    };
                    assert!(alg.path_index(&sub).is_some());
                }
            }
        }
    }

    #[test]
    fn opposite_is_an_involution() {
        let q = Quiver::linear(4);
        let alg = PathAlgebra::new(q, &names(&[&["a1", "a2"]]), Field::f2()).unwrap();
        let op = alg.opposite().unwrap();
        assert!(op.is_opposite_of(&alg));
        assert_eq!(op.dim(), alg.dim());
        assert_eq!(op.opposite().unwrap(), alg);
    }
}
