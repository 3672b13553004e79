//! Small complexes used in tests, examples, and the command line.

use crate::complex::{Complex, Simplex};
use crate::expander::barycentric_subdivision;

fn cx<V: AsRef<[u32]>>(lists: &[V]) -> Complex {
    Complex::from_facets(lists).expect("fixture facets are well formed")
}

fn cycle(vertices: &[u32]) -> Complex {
    let n = vertices.len();
    cx(&(0..n).map(|i| [vertices[i], vertices[(i + 1) % n]]).collect::<Vec<_>>())
}

/// The 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus7() -> Complex {
    let mut facets = Vec::new();
    for i in 0..7u32 {
        facets.push([i, (i + 1) % 7, (i + 3) % 7]);
        facets.push([i, (i + 2) % 7, (i + 3) % 7]);
    }
    cx(&facets)
}

/// [`torus7`] with `[0 1 3]` starred by `7`.
pub fn torus8() -> Complex {
    crate::moves::apply_move(&torus7(), &crate::moves::Move::star([0, 1, 3], 7)).expect("legal starring")
}

/// The 6-vertex real projective plane.
pub fn projective_plane6() -> Complex {
    cx(&[
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
    ])
}

/// `{0,1}⋆{2,3}⋆{4,5}`.
pub fn octahedron() -> Complex {
    [[0, 1], [2, 3], [4, 5]]
        .iter()
        .map(|e| Complex::simplex_boundary(&Simplex::from(*e)))
        .fold(Complex::unit(), |k, s| k.join(&s).expect("disjoint"))
}

/// `∂Δ^{n+1}` on `0..=n+1`.
pub fn sphere(n: u32) -> Complex {
    Complex::standard_simplex_boundary(n + 1)
}

/// Shellable 2- and 3-balls with at most eight facets.
pub fn shellable_balls() -> Vec<(&'static str, Complex)> {
    let hexagon = cycle(&[0, 1, 2, 3, 4, 5]);
    let square = cycle(&[0, 1, 2, 3]);
    vec![
        ("triangle", Complex::standard_simplex(2)),
        ("two triangles", cx(&[[0, 1, 2], [1, 2, 3]])),
        ("three-triangle fan", cx(&[[0, 1, 2], [0, 2, 3], [0, 3, 4]])),
        ("four-triangle strip", cx(&[[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5]])),
        ("coned pentagon", cycle(&[0, 1, 2, 3, 4]).cone(5).expect("fresh")),
        ("coned hexagon", hexagon.cone(6).expect("fresh")),
        (
            "tetrahedron boundary minus a facet",
            Complex::standard_simplex_boundary(3).without_facet(&Simplex::from([0, 1, 2])),
        ),
        (
            "octahedron minus a facet",
            octahedron().without_facet(&Simplex::from([0, 2, 4])),
        ),
        ("tetrahedron", Complex::standard_simplex(3)),
        ("two tetrahedra", cx(&[[0, 1, 2, 3], [1, 2, 3, 4]])),
        (
            "edge over a triangle boundary",
            Complex::standard_simplex(1)
                .join(&Complex::simplex_boundary(&Simplex::from([2, 3, 4])))
                .expect("disjoint"),
        ),
        (
            "edge over a square",
            Complex::simplex(&Simplex::from([4, 5])).join(&square).expect("disjoint"),
        ),
        (
            "edge over a hexagon",
            Complex::simplex(&Simplex::from([6, 7])).join(&hexagon).expect("disjoint"),
        ),
        (
            "starred tetrahedron",
            Complex::standard_simplex_boundary(3).cone(4).expect("fresh"),
        ),
        (
            "pentachoron boundary minus a facet",
            Complex::standard_simplex_boundary(4).without_facet(&Simplex::from([0, 1, 2, 3])),
        ),
        ("coned octahedron", octahedron().cone(6).expect("fresh")),
    ]
}

/// Larger 3-balls for shelling experiments.
pub fn three_balls() -> Vec<(&'static str, Complex)> {
    let hexagon = cycle(&[0, 1, 2, 3, 4, 5]);
    let derived = barycentric_subdivision(&Complex::standard_simplex_boundary(3));
    vec![
        ("coned octahedron", octahedron().cone(6).expect("fresh")),
        ("coned derived tetrahedron boundary", derived.cone(derived.fresh_vertex()).expect("fresh")),
        (
            "pentachoron boundary minus a facet",
            Complex::standard_simplex_boundary(4).without_facet(&Simplex::from([0, 1, 2, 3])),
        ),
        (
            "edge over a hexagon",
            Complex::simplex(&Simplex::from([6, 7])).join(&hexagon).expect("disjoint"),
        ),
    ]
}
