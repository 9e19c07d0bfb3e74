//! Discriminants: the ternary quintic `det(x Q1 + y Q2 + z Q3)` of a net
//! and the binary quintic `det(s Q1 + t Q2)` of a pencil, with the
//! reduced / non-reduced / identically-zero classification.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monomial::NUM_VARS;
use crate::net::{Net, Pencil};
use crate::poly::{
    det_poly_matrix, factor_multiplicity, squarefree_part, vars, AlgebraError, MultiPoly,
    Multiplicity,
};
use crate::rational::Rat;
use num_traits::{One, Zero};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiscriminantError {
    #[error("the pencil consists of singular quadrics only; the discriminant vanishes identically")]
    WhollySingular,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The discriminant of a net: a ternary quintic in `x, y, z`, possibly
/// identically zero, primitive-normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryQuintic(pub MultiPoly);

/// The discriminant of a pencil: a binary quintic in `s, t`, possibly
/// identically zero, primitive-normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryQuintic(pub MultiPoly);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuinticClassification {
    IdenticallyZero,
    NonReduced,
    Reduced,
}

pub fn xyz_vars() -> Vec<String> {
    vars(&["x", "y", "z"])
}

pub fn st_vars() -> Vec<String> {
    vars(&["s", "t"])
}

/// Determinant of the Gram pencil of the (normalized) basis. Well-defined
/// up to a nonzero scalar and the GL(3) substitution induced by basis
/// change; the normalized basis and primitive normalization make the output
/// canonical.
pub fn discriminant_net(net: &Net) -> TernaryQuintic {
    let basis = net.normalized_basis();
    let grams: Vec<[[Rat; NUM_VARS]; NUM_VARS]> = basis.basis().iter().map(|q| q.gram()).collect();
    let vs = xyz_vars();
    let matrix: Vec<Vec<MultiPoly>> = (0..NUM_VARS)
        .map(|i| {
            (0..NUM_VARS)
                .map(|j| {
                    MultiPoly::from_terms(
                        vs.clone(),
                        (0..3).map(|k| {
                            let mut e = vec![0u32; 3];
                            e[k] = 1;
                            (e, grams[k][i][j].clone())
                        }),
                    )
                })
                .collect()
        })
        .collect();
    let det = det_poly_matrix(&matrix).expect("5x5 pencil matrix is square");
    TernaryQuintic(det.normalized())
}

/// Determinant of the two-parameter Gram pencil; degree 5 or identically
/// zero.
pub fn discriminant_pencil(pencil: &Pencil) -> BinaryQuintic {
    let grams: Vec<[[Rat; NUM_VARS]; NUM_VARS]> =
        pencil.basis().iter().map(|q| q.gram()).collect();
    let vs = st_vars();
    let matrix: Vec<Vec<MultiPoly>> = (0..NUM_VARS)
        .map(|i| {
            (0..NUM_VARS)
                .map(|j| {
                    MultiPoly::from_terms(
                        vs.clone(),
                        (0..2).map(|k| {
                            let mut e = vec![0u32; 2];
                            e[k] = 1;
                            (e, grams[k][i][j].clone())
                        }),
                    )
                })
                .collect()
        })
        .collect();
    let det = det_poly_matrix(&matrix).expect("5x5 pencil matrix is square");
    BinaryQuintic(det.normalized())
}

/// Reduced / non-reduced / identically-zero verdict for the discriminant of
/// a net. An identically vanishing discriminant is a verdict here, not an
/// error.
pub fn classify_discriminant(net: &Net) -> QuinticClassification {
    let TernaryQuintic(disc) = discriminant_net(net);
    if disc.is_zero() {
        return QuinticClassification::IdenticallyZero;
    }
    let (_, is_squarefree) = squarefree_part(&disc).expect("nonzero polynomial");
    if is_squarefree {
        QuinticClassification::Reduced
    } else {
        QuinticClassification::NonReduced
    }
}

/// Multiplicity of the root `[s0 : t0]` of the pencil line in the binary
/// discriminant.
pub fn pencil_root_multiplicity(
    pencil: &Pencil,
    at: (&Rat, &Rat),
) -> Result<u32, DiscriminantError> {
    let BinaryQuintic(disc) = discriminant_pencil(pencil);
    if disc.is_zero() {
        return Err(DiscriminantError::WhollySingular);
    }
    let (s0, t0) = at;
    assert!(!(s0.is_zero() && t0.is_zero()), "point must be nonzero");
    // linear form vanishing at [s0 : t0]: t0 * s - s0 * t
    let vs = st_vars();
    let line = MultiPoly::from_terms(
        vs,
        [
            (vec![1u32, 0u32], t0.clone()),
            (vec![0u32, 1u32], -s0.clone()),
        ],
    )
    .normalized();
    match factor_multiplicity(&disc, &line)? {
        Multiplicity::Finite(k) => Ok(k),
        Multiplicity::Infinite => Err(DiscriminantError::WhollySingular),
    }
}

/// Serialization order for ternary quintics: the 21 degree-5 exponent
/// triples `(i, j, k)` in lex order with `x > y > z`.
pub fn ternary_quintic_coefficients(q: &TernaryQuintic) -> Vec<BigInt> {
    let TernaryQuintic(p) = q;
    let normalized = p.normalized();
    let mut out = Vec::with_capacity(21);
    for i in (0..=5u32).rev() {
        for j in (0..=(5 - i)).rev() {
            let k = 5 - i - j;
            let c = normalized.coeff(&[i, j, k]);
            debug_assert!(c.denom().is_one());
            out.push(c.numer().clone());
        }
    }
    out
}

/// Serialization order for binary quintics: coefficients of
/// `s^5, s^4 t, ..., t^5`.
pub fn binary_quintic_coefficients(q: &BinaryQuintic) -> Vec<BigInt> {
    let BinaryQuintic(p) = q;
    let normalized = p.normalized();
    (0..=5u32)
        .rev()
        .map(|i| {
            let c = normalized.coeff(&[i, 5 - i]);
            debug_assert!(c.denom().is_one());
            c.numer().clone()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::{net_from_named, pencil_from_named};
    use crate::rational::rat;

    fn triple_conic() -> Net {
        net_from_named(
            &[(1, "ad"), (-1, "bc")],
            &[(1, "ae"), (1, "bd"), (-1, "c^2")],
            &[(1, "be"), (-1, "cd")],
        )
    }

    #[test]
    fn triple_conic_discriminant() {
        let TernaryQuintic(disc) = discriminant_net(&triple_conic());
        // y^3 (xz - y^2) up to scalar
        let vs = xyz_vars();
        let y = MultiPoly::var(vs.clone(), 1);
        let x = MultiPoly::var(vs.clone(), 0);
        let z = MultiPoly::var(vs, 2);
        let expected = y.pow(3).mul(&x.mul(&z).sub(&y.pow(2)));
        assert!(disc.proportional_to(&expected));
        assert_eq!(
            classify_discriminant(&triple_conic()),
            QuinticClassification::NonReduced
        );
    }

    #[test]
    fn veronese_pencil_is_wholly_singular() {
        let pencil = pencil_from_named(&[(1, "ac"), (-1, "b^2")], &[(1, "ce"), (-1, "d^2")]);
        let BinaryQuintic(disc) = discriminant_pencil(&pencil);
        assert!(disc.is_zero());
        assert_eq!(
            pencil_root_multiplicity(&pencil, (&rat(1), &rat(0))),
            Err(DiscriminantError::WhollySingular)
        );
    }

    #[test]
    fn diagonal_pencil_discriminant() {
        // diag(1,1,1,1,1) against diag(0,1,2,3,4): s(s+t)(s+2t)(s+3t)(s+4t)
        let q1 = crate::quadric::QuadraticForm::from_named(&[
            (1, "a^2"),
            (1, "b^2"),
            (1, "c^2"),
            (1, "d^2"),
            (1, "e^2"),
        ]);
        let q2 = crate::quadric::QuadraticForm::from_named(&[
            (1, "b^2"),
            (2, "c^2"),
            (3, "d^2"),
            (4, "e^2"),
        ]);
        let pencil = crate::net::Pencil::new([q1, q2]).unwrap();
        let BinaryQuintic(disc) = discriminant_pencil(&pencil);
        let vs = st_vars();
        let s = MultiPoly::var(vs.clone(), 0);
        let t = MultiPoly::var(vs, 1);
        let mut expected = s.clone();
        for k in 1..=4i64 {
            expected = expected.mul(&s.add(&t.scale(&rat(k))));
        }
        assert!(disc.proportional_to(&expected));
        // the root at [1:0] (the first member) is simple: multiplicity of s
        assert_eq!(pencil_root_multiplicity(&pencil, (&rat(0), &rat(1))).unwrap(), 1);
    }

    #[test]
    fn plane_plus_scroll_pencil_has_multiple_root() {
        let pencil = pencil_from_named(&[(1, "ad"), (-1, "bc")], &[(1, "be"), (-1, "cd")]);
        let BinaryQuintic(disc) = discriminant_pencil(&pencil);
        assert!(!disc.is_zero());
        let (_, squarefree) = squarefree_part(&disc).unwrap();
        assert!(!squarefree);
    }

    #[test]
    fn rank4_vertex_annihilation_forces_double_root() {
        // Q1 = ad - bc has rank 4 with vertex [0:0:0:0:1]; any Q2 vanishing
        // there gives det(Q1 + t Q2) a root of multiplicity >= 2 at t = 0
        let q1 = crate::quadric::QuadraticForm::from_named(&[(1, "ad"), (-1, "bc")]);
        let q2 = crate::quadric::QuadraticForm::from_named(&[(1, "a^2")]);
        let pencil = crate::net::Pencil::new([q1.clone(), q2]).unwrap();
        assert!(pencil_root_multiplicity(&pencil, (&rat(1), &rat(0))).unwrap() >= 2);
        // while a Q2 not vanishing at the vertex gives multiplicity exactly 1
        let q2 = crate::quadric::QuadraticForm::from_named(&[(1, "e^2")]);
        let pencil = crate::net::Pencil::new([q1, q2]).unwrap();
        assert_eq!(pencil_root_multiplicity(&pencil, (&rat(1), &rat(0))).unwrap(), 1);
        // a smooth first member: no root at t = 0 at all
        let smooth = crate::quadric::QuadraticForm::from_named(&[(1, "ae"), (1, "bd"), (-1, "c^2")]);
        let q2 = crate::quadric::QuadraticForm::from_named(&[(1, "a^2")]);
        let pencil = crate::net::Pencil::new([smooth, q2]).unwrap();
        assert_eq!(pencil_root_multiplicity(&pencil, (&rat(1), &rat(0))).unwrap(), 0);
    }

    #[test]
    fn coefficient_serialization() {
        let TernaryQuintic(disc) = discriminant_net(&triple_conic());
        let coeffs = ternary_quintic_coefficients(&TernaryQuintic(disc));
        assert_eq!(coeffs.len(), 21);
        assert!(coeffs.iter().any(|c| !c.is_zero()));
    }

    #[test]
    fn degenerate_net_discriminant_vanishes() {
        // all generators in the ideal (b, c, d, e): the Gram pencil has a
        // zero first row
        let net = net_from_named(&[(1, "b^2")], &[(1, "cd")], &[(1, "e^2")]);
        assert_eq!(
            classify_discriminant(&net),
            QuinticClassification::IdenticallyZero
        );
    }
}
