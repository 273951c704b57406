//! Simplicial complexes given by facets, links, and exact reduced homology.
//!
//! Faces are [`Face`] bitsets over the vertex list. Links keep the parent's
//! vertex indexing, so a face of a link is also a set of parent vertices.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::field::FieldSpec;
use crate::rank::{rank, SparseRow};

/// A finite simplicial complex. Always contains the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Face>,
}

/// Reduced Betti numbers indexed from degree `−1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    values: Vec<u64>,
}

impl BettiVector {
    /// `β̃_i`, zero outside the stored range.
    pub fn get(&self, degree: i64) -> u64 {
        usize::try_from(degree + 1).ok().and_then(|i| self.values.get(i)).copied().unwrap_or(0)
    }

    /// Entries for degrees `−1, 0, 1, …`.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `Σ_i (−1)^i β̃_i`.
    pub fn alternating_sum(&self) -> i64 {
        self.values.iter().enumerate().map(|(i, &b)| if i % 2 == 1 { b as i64 } else { -(b as i64) }).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }

    /// Lowest degree with a nonzero entry.
    pub fn first_nonzero(&self) -> Option<i64> {
        self.values.iter().position(|&b| b != 0).map(|i| i as i64 - 1)
    }
}

/// Drops every face contained in another, returning sorted maximal faces.
pub(crate) fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// Builds a complex from facet bitsets over `vertices`. Contained facets are
    /// pruned; an empty facet list is rejected (the void complex).
    pub fn from_face_sets(vertices: Vec<String>, facets: Vec<Face>) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let all = Face::full(vertices.len());
        if let Some(f) = facets.iter().find(|f| !f.is_subset(all)) {
            let bad = f.minus(all).first().unwrap();
            return Err(Error::VertexOutOfRange(bad));
        }
        if facets.is_empty() {
            return Err(Error::InvalidArgument("the void complex has no faces".into()));
        }
        Ok(SimplicialComplex { vertices, facets: maximal_faces(facets) })
    }

    /// Builds a complex from facets given as vertex labels.
    pub fn from_facets<S: AsRef<str>, T: AsRef<str>>(vertices: &[S], facets: &[Vec<T>]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_owned()).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let faces = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|v| index.get(v.as_ref()).copied().ok_or_else(|| Error::UnknownVertex(v.as_ref().into())))
                    .collect::<Result<Vec<usize>>>()
                    .map(Face::from_indices)
            })
            .collect::<Result<Vec<Face>>>()?;
        Self::from_face_sets(vertices, faces)
    }

    /// The complex `{∅}` on the given vertex list.
    pub fn empty_face(vertices: Vec<String>) -> Self {
        SimplicialComplex { vertices, facets: vec![Face::EMPTY] }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: Vec<String>) -> Result<Self> {
        let f = Face::full(vertices.len());
        Self::from_face_sets(vertices, vec![f])
    }

    pub(crate) fn from_maximal_unchecked(vertices: Vec<String>, facets: Vec<Face>) -> Self {
        SimplicialComplex { vertices, facets }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Labels of each facet.
    pub fn facet_labels(&self) -> Vec<Vec<&str>> {
        self.facets.iter().map(|f| f.indices().map(|v| self.vertices[v].as_str()).collect()).collect()
    }

    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        labels
            .iter()
            .map(|l| {
                self.vertices
                    .iter()
                    .position(|v| v == l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(l.as_ref().into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Face::from_indices)
    }

    /// Vertices lying in some facet.
    pub fn support(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// `dim K = max |F| − 1`; `−1` for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1
    }

    pub fn is_empty_face_only(&self) -> bool {
        self.facets == [Face::EMPTY]
    }

    pub fn is_face(&self, sigma: Face) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// All facets have the same cardinality.
    pub fn is_equidimensional(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `lk(σ) = {τ | τ ∩ σ = ∅, τ ∪ σ ∈ K}`.
    pub fn link(&self, sigma: Face) -> Result<SimplicialComplex> {
        let facets: Vec<Face> = self.facets.iter().filter(|f| sigma.is_subset(**f)).map(|f| f.minus(sigma)).collect();
        if facets.is_empty() {
            return Err(Error::NotAFace);
        }
        // facets of the star minus σ are pairwise incomparable already
        let mut facets = facets;
        facets.sort();
        facets.dedup();
        Ok(SimplicialComplex { vertices: self.vertices.clone(), facets })
    }

    /// The complex with vertex `v` removed from every face.
    pub fn deletion(&self, v: usize) -> SimplicialComplex {
        let facets = maximal_faces(self.facets.iter().map(|f| f.without(v)).collect());
        SimplicialComplex { vertices: self.vertices.clone(), facets }
    }

    /// Faces with exactly `k + 1` vertices, sorted.
    pub fn faces_of_dim(&self, k: i64) -> Vec<Face> {
        faces_of_dim(&self.facets, k)
    }

    /// Every face, the empty face included.
    pub fn all_faces(&self) -> Vec<Face> {
        (-1..=self.dim()).flat_map(|k| self.faces_of_dim(k)).collect()
    }

    /// Face counts `f_{−1}, f_0, …, f_{dim}`.
    pub fn f_vector(&self) -> Vec<usize> {
        (-1..=self.dim()).map(|k| self.faces_of_dim(k).len()).collect()
    }

    /// `χ̃(K) = Σ_{σ ∈ K} (−1)^{|σ|−1}`.
    pub fn reduced_euler_char(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(i, &f)| if i % 2 == 0 { -(f as i64) } else { f as i64 }).sum()
    }

    /// Reduced Betti numbers over `field`, degrees `−1..=dim`.
    pub fn reduced_betti_numbers(&self, field: FieldSpec) -> BettiVector {
        reduced_betti_up_to(&self.facets, self.dim(), field)
    }
}

pub(crate) fn faces_of_dim(facets: &[Face], k: i64) -> Vec<Face> {
    if k < -1 {
        return Vec::new();
    }
    let size = (k + 1) as usize;
    let mut seen: HashSet<Face> = HashSet::new();
    for f in facets.iter().filter(|f| f.len() >= size) {
        if f.len() == size {
            seen.insert(*f);
        } else {
            seen.extend(f.subsets_of_size(size));
        }
    }
    let mut out: Vec<Face> = seen.into_iter().collect();
    out.sort();
    out
}

/// Boundary matrix `∂_k : C_k → C_{k−1}` with rows indexed by `faces`.
fn boundary_rows(faces: &[Face], lower: &[Face]) -> Vec<SparseRow<i64>> {
    let index: HashMap<Face, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    faces
        .iter()
        .map(|f| {
            let mut row: SparseRow<i64> =
                f.indices().enumerate().map(|(j, v)| (index[&f.without(v)], if j % 2 == 0 { 1 } else { -1 })).collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect()
}

/// Reduced Betti numbers in degrees `−1..=min(max_degree, dim)`.
pub(crate) fn reduced_betti_up_to(facets: &[Face], max_degree: i64, field: FieldSpec) -> BettiVector {
    let dim = facets.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1;
    let top = max_degree.min(dim);
    if top < -1 {
        return BettiVector { values: Vec::new() };
    }
    // faces in dims −1..=top+1
    let faces: Vec<Vec<Face>> = (-1..=top + 1).map(|k| faces_of_dim(facets, k)).collect();
    // ranks[k+1] = rank ∂_k, for k = 0..=top+1; ∂_{−1} = 0
    let mut ranks = vec![0usize; faces.len() + 1];
    for k in 0..=top + 1 {
        let i = (k + 1) as usize;
        if faces[i].is_empty() {
            continue;
        }
        ranks[i] = if k == 0 { 1 } else { rank(&boundary_rows(&faces[i], &faces[i - 1]), field) };
    }
    let values = (-1..=top)
        .map(|k| {
            let i = (k + 1) as usize;
            (faces[i].len() - ranks[i] - ranks[i + 1]) as u64
        })
        .collect();
    BettiVector { values }
}

/// Serialized form `{"vertices": [...], "facets": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl TryFrom<ComplexFile> for SimplicialComplex {
    type Error = Error;

    fn try_from(f: ComplexFile) -> Result<Self> {
        SimplicialComplex::from_facets(&f.vertices, &f.facets)
    }
}

impl From<&SimplicialComplex> for ComplexFile {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexFile {
            vertices: k.vertices.clone(),
            facets: k.facet_labels().into_iter().map(|f| f.into_iter().map(str::to_owned).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(vertices: &[&str], facets: &[&[&str]]) -> SimplicialComplex {
        let facets: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facets(vertices, &facets).unwrap()
    }

    fn triangle_boundary() -> SimplicialComplex {
        cx(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]])
    }

    /// Minimal 6-vertex triangulation of the real projective plane.
    pub(crate) fn rp2() -> SimplicialComplex {
        let tri: [[usize; 3]; 10] = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let verts: Vec<String> = (1..=6).map(|i| format!("v{i}")).collect();
        SimplicialComplex::from_face_sets(verts, tri.iter().map(|t| Face::from_indices(*t)).collect()).unwrap()
    }

    #[test]
    fn pruning_and_points() {
        let k = cx(&["a", "b"], &[&["a", "b"], &["b"]]);
        assert_eq!(k.facets(), &[Face::from_indices([0, 1])]);
        let k = cx(&["a", "b"], &[&["a"], &["b"]]);
        assert_eq!(k.facets().len(), 2);
        assert_eq!(k.dim(), 0);
        let k = cx(&["a"], &[&[]]);
        assert!(k.is_empty_face_only());
        assert_eq!(k.dim(), -1);
        let err = SimplicialComplex::from_facets(&["a"], &[vec!["z"]]).unwrap_err();
        assert_eq!(err, Error::UnknownVertex("z".into()));
    }

    #[test]
    fn links() {
        let k = triangle_boundary();
        assert_eq!(k.link(Face::EMPTY).unwrap(), k);
        let l = k.link(Face::singleton(0)).unwrap();
        assert_eq!(l.facets(), &[Face::singleton(1), Face::singleton(2)]);
        let s = cx(&["a", "b", "c"], &[&["a", "b", "c"]]);
        assert_eq!(s.link(Face::singleton(0)).unwrap().facets(), &[Face::from_indices([1, 2])]);
        assert_eq!(k.link(Face::full(3)).unwrap_err(), Error::NotAFace);
    }

    #[test]
    fn betti_examples() {
        let s = cx(&["a", "b", "c"], &[&["a", "b", "c"]]);
        assert!(s.reduced_betti_numbers(FieldSpec::RATIONAL).is_zero());
        for f in [FieldSpec::RATIONAL, FieldSpec::GF2, FieldSpec::prime(3).unwrap()] {
            let b = triangle_boundary().reduced_betti_numbers(f);
            assert_eq!(b.values(), &[0, 0, 1]);
        }
        let e = cx(&["a"], &[&[]]).reduced_betti_numbers(FieldSpec::RATIONAL);
        assert_eq!(e.values(), &[1]);
        let pts = cx(&["a", "b"], &[&["a"], &["b"]]).reduced_betti_numbers(FieldSpec::RATIONAL);
        assert_eq!(pts.values(), &[0, 1]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        let k = rp2();
        assert_eq!(k.f_vector(), vec![1, 6, 15, 10]);
        assert!(k.reduced_betti_numbers(FieldSpec::RATIONAL).is_zero());
        assert!(k.reduced_betti_numbers(FieldSpec::prime(3).unwrap()).is_zero());
        assert_eq!(k.reduced_betti_numbers(FieldSpec::GF2).values(), &[0, 0, 1, 1]);
    }

    #[test]
    fn euler_characteristic() {
        assert_eq!(cx(&["a"], &[&[]]).reduced_euler_char(), -1);
        assert_eq!(cx(&["a"], &[&["a"]]).reduced_euler_char(), 0);
        // −1 (empty face) + 3 vertices − 3 edges
        assert_eq!(triangle_boundary().reduced_euler_char(), -1);
        assert_eq!(rp2().reduced_euler_char(), 0);
    }

    #[test]
    fn equidimensional() {
        assert!(triangle_boundary().is_equidimensional());
        assert!(!cx(&["a", "b", "c"], &[&["a", "b"], &["c"]]).is_equidimensional());
    }

    #[test]
    fn json_roundtrip() {
        let k = triangle_boundary();
        let s = serde_json::to_string(&ComplexFile::from(&k)).unwrap();
        let back: ComplexFile = serde_json::from_str(&s).unwrap();
        assert_eq!(SimplicialComplex::try_from(back).unwrap(), k);
    }
}
