//! Independent reference computations shared by the integration tests.

#![allow(dead_code)]

use hodge_core::{Face, FieldSpec, SimplicialComplex};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;

/// All faces of `k` grouped by size, `∅` first.
fn faces_by_size(k: &SimplicialComplex) -> Vec<Vec<Face>> {
    let top = (k.dim() + 1) as usize;
    let mut out = vec![Vec::new(); top + 1];
    for f in k.all_faces() {
        out[f.len()].push(f);
    }
    for level in &mut out {
        level.sort();
    }
    out
}

/// Diagonalizes an integer matrix by unimodular row and column operations and
/// returns the absolute values of the nonzero diagonal entries.
pub fn integer_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[i][j].is_zero())
            .min_by(|&(a, b), &(c, d)| m[a][b].abs().cmp(&m[c][d].abs()));
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let v = &m[t][j] * &q;
                    m[i][j] -= v;
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[j] -= v;
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, …` from integer diagonal forms of the
/// augmented boundary matrices. Over `F_p` a diagonal entry contributes to the
/// rank iff `p` does not divide it.
pub fn betti_via_smith(k: &SimplicialComplex, field: FieldSpec) -> Vec<u64> {
    let faces = faces_by_size(k);
    // ranks[s] = rank of the boundary map from faces of size s to size s - 1
    let mut ranks = vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        let lower = &faces[s - 1];
        let matrix: Vec<Vec<BigInt>> = faces[s]
            .iter()
            .map(|f| {
                let mut row = vec![BigInt::zero(); lower.len()];
                for (pos, v) in f.indices().enumerate() {
                    let g = f.without(v);
                    let col = lower.binary_search(&g).expect("boundary face present");
                    row[col] = BigInt::from(if pos % 2 == 0 { 1 } else { -1 });
                }
                row
            })
            .collect();
        let p = field.characteristic();
        ranks[s] = integer_diagonal(matrix).iter().filter(|d| p == 0 || !(*d % BigInt::from(p)).is_zero()).count();
    }
    (0..faces.len()).map(|s| (faces[s].len() - ranks[s] - ranks[s + 1]) as u64).collect()
}

/// Hochster's formula evaluated literally over every face:
/// `min { |σ| + j + 1 | σ ∈ Δ, H̃^j(lk σ) ≠ 0 }`.
pub fn depth_all_faces(k: &SimplicialComplex, field: FieldSpec) -> usize {
    k.all_faces()
        .into_iter()
        .filter_map(|sigma| {
            let betti = k.link(sigma).unwrap().reduced_betti_numbers(field);
            betti.first_nonzero().map(|j| (sigma.len() as i64 + j + 1) as usize)
        })
        .min()
        .expect("a facet's link is {∅}")
}

pub fn random_complex(rng: &mut impl Rng, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let count = rng.gen_range(1..=6);
    let facets: Vec<Face> = (0..count).map(|_| Face::from_indices((0..n).filter(|_| rng.gen_bool(0.5)))).collect();
    let vertices = (0..n).map(|i| format!("v{i}")).collect();
    SimplicialComplex::from_face_sets(vertices, facets).unwrap()
}

/// The six-vertex real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    let tri: [[usize; 3]; 10] =
        [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]];
    let vertices = (1..=6).map(|i| format!("v{i}")).collect();
    SimplicialComplex::from_face_sets(vertices, tri.iter().map(|t| Face::from_indices(*t)).collect()).unwrap()
}

/// Betti values with trailing zeros removed.
pub fn trim(values: &[u64]) -> Vec<u64> {
    let end = values.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
    values[..end].to_vec()
}
