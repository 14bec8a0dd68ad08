//! Fixtures shared by the unit tests.

use crate::complex::Complex;
use crate::face::Face;

pub(crate) fn f(m: &[usize]) -> Face {
    Face::from_members(m.iter().copied())
}

/// Two triangles sharing vertex 0 (the 1-based {1,2,3}, {1,4,5} example).
pub(crate) fn two_triangles() -> Complex {
    Complex::from_facets(vec![f(&[0, 1, 2]), f(&[0, 3, 4])], 5).unwrap()
}

/// Edge complex of the path 0-1-2-3.
pub(crate) fn path_complex() -> Complex {
    Complex::from_facets(vec![f(&[0, 1]), f(&[1, 2]), f(&[2, 3])], 4).unwrap()
}

pub(crate) fn simplex(n: usize) -> Complex {
    Complex::from_facets(vec![Face::from_members(0..n)], n).unwrap()
}

/// All (n-1)-subsets of an n-set: the boundary of the (n-1)-simplex.
pub(crate) fn simplex_boundary(n: usize) -> Complex {
    let all = Face::from_members(0..n);
    Complex::from_facets(all.k_subsets(n - 1), n).unwrap()
}
