//! The displayed dihedral subquotients, evaluated literally in `Q[D_{2u}]` so
//! they can be set against the computed homology.

use crate::linalg::{vector, FieldDescriptor, Scalar};

/// Dimensions of the displayed pieces for `K = Q[D_{2u}]`, `chi(g^j h^l) = (-1)^l`, `f = x^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralDisplay {
    pub u: usize,
    /// `dim k[<g>] / (+)_{j=1}^{[(u-1)/2]} k(g^j - g^{u-j})`.
    pub rotation_part: usize,
    /// `dim k[<g>]h / k[<g>](g^2 - 1)h`.
    pub reflection_part: usize,
}

impl DihedralDisplay {
    pub fn new(u: usize) -> Self {
        let f = FieldDescriptor::rationals();
        let unit = |j: usize| vector::unit(&f, u, j % u);
        let diffs: Vec<Vec<Scalar>> = (1..=(u - 1) / 2).map(|j| vector::sub(&f, &unit(j), &unit(u - j))).collect();
        // k[<g>](g^2 - 1)h, written in the h-coset coordinates g^j h
        let multiples: Vec<Vec<Scalar>> = (0..u).map(|j| vector::sub(&f, &unit(j + 2), &unit(j))).collect();
        DihedralDisplay {
            u,
            rotation_part: u - vector::rank_of(&f, u, &diffs),
            reflection_part: u - vector::rank_of(&f, u, &multiples),
        }
    }

    /// Displayed `HH_0, HH_1, ...` for degrees `0 .. max_degree`.
    pub fn hh(&self, max_degree: usize) -> Vec<usize> {
        (0..max_degree)
            .map(|r| {
                if r == 0 {
                    self.rotation_part + self.reflection_part
                } else {
                    self.reflection_part
                }
            })
            .collect()
    }

    /// Displayed `HC_0, HC_1, ...` for degrees `0 .. max_degree`.
    pub fn hc(&self, max_degree: usize) -> Vec<usize> {
        (0..max_degree)
            .map(|r| {
                if r % 2 == 0 {
                    self.rotation_part + self.reflection_part
                } else {
                    self.reflection_part
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pieces() {
        let d3 = DihedralDisplay::new(3);
        assert_eq!((d3.rotation_part, d3.reflection_part), (2, 1));
        let d4 = DihedralDisplay::new(4);
        assert_eq!((d4.rotation_part, d4.reflection_part), (3, 2));
        assert_eq!(d4.hc(4), vec![5, 2, 5, 2]);
    }
}
