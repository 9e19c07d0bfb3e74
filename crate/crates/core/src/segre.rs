//! Segre symbols of pencils of quadrics, Weierstrass-form construction,
//! and the quadric-section test on the projected Veronese surface.
//!
//! The symbol is computed per irreducible rational factor of the binary
//! discriminant: for each factor and each r, the minimum multiplicity of
//! the factor across all (6-r)x(6-r) minors of the Gram pencil gives the
//! partial block sums, and consecutive differences recover the blocks.
//! Conjugate roots of an irreducible factor share their block data, so no
//! root-finding is needed.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::discriminant::{discriminant_pencil, st_vars, BinaryQuintic};
use crate::factor::factor_binary_form;
use crate::monomial::{Monomial2, NUM_VARS};
use crate::net::Pencil;
use crate::par;
use crate::poly::{factor_multiplicity, vars, MultiPoly, Multiplicity};
use crate::quadric::QuadraticForm;
use crate::rational::{format_rat, Rat};
use num_traits::{One, Zero};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SegreError {
    #[error("the pencil consists of singular quadrics only; the Segre symbol is undefined")]
    WhollySingular,
    #[error("block sizes must sum to 5, got {0}")]
    BadBlockSum(u32),
    #[error("eigenvalues must be pairwise distinct")]
    RepeatedEigenvalue,
}

/// One entry of a Segre symbol: an irreducible factor of the discriminant
/// and the non-increasing block sizes at its roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegreEntry {
    pub factor_degree: u32,
    /// coefficients of `s^d, ..., t^d`, primitive integer
    pub factor_coefficients: Vec<String>,
    pub blocks: Vec<u32>,
}

/// The Segre symbol of a pencil with not-all-singular members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegreSymbol {
    pub entries: Vec<SegreEntry>,
}

impl SegreSymbol {
    /// The multiset of block lists, ignoring the factors, sorted for
    /// comparison: one list per geometric root.
    pub fn shape(&self) -> Vec<Vec<u32>> {
        let mut shape: Vec<Vec<u32>> = Vec::new();
        for e in &self.entries {
            for _ in 0..e.factor_degree {
                shape.push(e.blocks.clone());
            }
        }
        shape.sort();
        shape
    }
}

fn binary_poly_coefficients(p: &MultiPoly) -> (u32, Vec<String>) {
    let d = p.homogeneous_degree().expect("factor is homogeneous");
    let coeffs = (0..=d)
        .rev()
        .map(|i| format_rat(&p.coeff(&[i, d - i])))
        .collect();
    (d, coeffs)
}

/// The Segre symbol of a pencil. Errors if every member is singular.
pub fn segre_symbol(pencil: &Pencil) -> Result<SegreSymbol, SegreError> {
    let BinaryQuintic(disc) = discriminant_pencil(pencil);
    if disc.is_zero() {
        return Err(SegreError::WhollySingular);
    }
    let factors = factor_binary_form(&disc);

    // Gram pencil entries as binary linear forms
    let vs = st_vars();
    let g1 = pencil.basis()[0].gram();
    let g2 = pencil.basis()[1].gram();
    let entry = |i: usize, j: usize| {
        MultiPoly::from_terms(
            vs.clone(),
            [
                (vec![1u32, 0u32], g1[i][j].clone()),
                (vec![0u32, 1u32], g2[i][j].clone()),
            ],
        )
    };
    let matrix: Vec<Vec<MultiPoly>> = (0..NUM_VARS)
        .map(|i| (0..NUM_VARS).map(|j| entry(i, j)).collect())
        .collect();

    let mut entries = Vec::new();
    for (factor, total) in factors {
        // e_r = min over (6-r)x(6-r) minors of the multiplicity of the
        // factor; e_1 is the multiplicity in the determinant itself
        let mut partial_sums = vec![total];
        for r in 2..=5usize {
            let size = 6 - r;
            let minors = minors_of(&matrix, size);
            let e_r = par::map_collect(&minors, |m| match factor_multiplicity(m, &factor) {
                Ok(Multiplicity::Finite(k)) => k,
                Ok(Multiplicity::Infinite) => u32::MAX,
                Err(_) => unreachable!("factor is nonconstant"),
            })
            .into_iter()
            .min()
            .expect("there are minors of every size");
            partial_sums.push(e_r);
            if e_r == 0 {
                break;
            }
        }
        partial_sums.push(0);
        let mut blocks = Vec::new();
        for w in partial_sums.windows(2) {
            let block = w[0].saturating_sub(w[1]);
            if block > 0 {
                blocks.push(block);
            } else {
                break;
            }
        }
        debug_assert!(blocks.windows(2).all(|w| w[0] >= w[1]));
        debug_assert_eq!(blocks.iter().sum::<u32>(), total);
        let (factor_degree, factor_coefficients) = binary_poly_coefficients(&factor);
        entries.push(SegreEntry {
            factor_degree,
            factor_coefficients,
            blocks,
        });
    }
    // block-degree bookkeeping: sum of degree * blocks = 5
    debug_assert_eq!(
        entries
            .iter()
            .map(|e| e.factor_degree * e.blocks.iter().sum::<u32>())
            .sum::<u32>(),
        5
    );
    Ok(SegreSymbol { entries })
}

/// All k x k minors of a square matrix of polynomials.
fn minors_of(matrix: &[Vec<MultiPoly>], k: usize) -> Vec<MultiPoly> {
    let n = matrix.len();
    let rows = subsets(n, k);
    let cols = subsets(n, k);
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for r in &rows {
        for c in &cols {
            let sub: Vec<Vec<MultiPoly>> = r
                .iter()
                .map(|&i| c.iter().map(|&j| matrix[i][j].clone()).collect())
                .collect();
            out.push(crate::poly::det_poly_matrix(&sub).expect("square submatrix"));
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Builds the block-diagonal Weierstrass pencil for the given blocks: entry
/// `(eigenvalue, block sizes)`, eigenvalues pairwise distinct, sizes
/// summing to 5. For a size-k block with eigenvalue w the first matrix has
/// ones on the block anti-diagonal and the second has w on the
/// anti-diagonal and ones on the adjacent upper anti-diagonal.
pub fn pencil_from_segre(entries: &[(Rat, Vec<u32>)]) -> Result<Pencil, SegreError> {
    let total: u32 = entries.iter().flat_map(|(_, blocks)| blocks.iter()).sum();
    if total != 5 {
        return Err(SegreError::BadBlockSum(total));
    }
    for (i, (ei, _)) in entries.iter().enumerate() {
        for (ej, _) in entries.iter().skip(i + 1) {
            if ei == ej {
                return Err(SegreError::RepeatedEigenvalue);
            }
        }
    }
    let mut g1: [[Rat; NUM_VARS]; NUM_VARS] =
        std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
    let mut g2: [[Rat; NUM_VARS]; NUM_VARS] =
        std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
    let mut offset = 0usize;
    for (eigen, blocks) in entries {
        for &k in blocks {
            let k = k as usize;
            for i in 0..k {
                let j = k - 1 - i;
                g1[offset + i][offset + j] = Rat::one();
                g2[offset + i][offset + j] = eigen.clone();
                if j > 0 {
                    // adjacent upper anti-diagonal: i + j = k - 2
                    g2[offset + i][offset + j - 1] = &g2[offset + i][offset + j - 1] + Rat::one();
                }
            }
            offset += k;
        }
    }
    // symmetrize the shifted anti-diagonal (it is already symmetric since
    // i + j = k - 2 is preserved under transposition)
    let q1 = QuadraticForm::from_gram(&g1);
    let q2 = QuadraticForm::from_gram(&g2);
    Ok(Pencil::new([q1, q2]).expect("Weierstrass pencil has rank 2"))
}

/// Decides whether the square of a ternary quadratic form is a quadric
/// section of the projected Veronese surface, i.e. whether `f^2` lies in
/// the span of products of two of `x^2, xy, y^2, yz, z^2`; returns the
/// representing quadric in `a..e` when it is. The representative is made
/// unique by excluding the monomials `ac` and `ce` (the kernel directions
/// of the product map).
pub fn veronese_quadric_section_test(f: &MultiPoly) -> Option<QuadraticForm> {
    assert_eq!(f.num_vars(), 3, "expected a ternary form in x, y, z");
    assert!(!f.is_zero());
    assert_eq!(f.homogeneous_degree(), Some(2), "expected a quadratic form");
    let square = f.mul(f);
    // the image misses exactly x^3 z and x z^3
    if !square.coeff(&[3, 0, 1]).is_zero() || !square.coeff(&[1, 0, 3]).is_zero() {
        return None;
    }
    // quartic exponent vector for each quadric monomial, under
    // a=x^2, b=xy, c=y^2, d=yz, e=z^2; ac and ce collide with b^2 and d^2
    let mut rep = QuadraticForm::zero();
    for m in Monomial2::ALL {
        let (i, j) = m.vars();
        if (i, j) == (0, 2) || (i, j) == (2, 4) {
            continue;
        }
        let image = |v: usize| -> [u32; 3] {
            match v {
                0 => [2, 0, 0],
                1 => [1, 1, 0],
                2 => [0, 2, 0],
                3 => [0, 1, 1],
                _ => [0, 0, 2],
            }
        };
        let (ei, ej) = (image(i), image(j));
        let exp: Vec<u32> = (0..3).map(|k| ei[k] + ej[k]).collect();
        rep.coeffs_mut()[m.index()] = square.coeff(&exp);
    }
    // all quartic monomials are accounted for: verify by mapping back
    debug_assert!({
        let vars3 = vars(&["x", "y", "z"]);
        let images: Vec<MultiPoly> = [[2u32, 0, 0], [1, 1, 0], [0, 2, 0], [0, 1, 1], [0, 0, 2]]
            .iter()
            .map(|e| MultiPoly::from_terms(vars3.clone(), [(e.to_vec(), Rat::one())]))
            .collect();
        rep.to_poly().substitute(&images) == square
    });
    Some(rep)
}

/// Serialization helper mirroring the list-of-entries wire format.
pub fn segre_symbol_to_json(symbol: &SegreSymbol) -> serde_json::Value {
    serde_json::to_value(symbol).expect("symbol serializes")
}

/// Integer coefficient view of a factor entry (used by tests).
pub fn entry_factor_integers(entry: &SegreEntry) -> Vec<BigInt> {
    entry
        .factor_coefficients
        .iter()
        .map(|s| s.parse().expect("integer coefficient"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::pencil_from_named;
    use crate::rational::rat;

    #[test]
    fn generic_diagonal_pencil_has_simple_symbol() {
        let q1 = QuadraticForm::from_named(&[
            (1, "a^2"),
            (1, "b^2"),
            (1, "c^2"),
            (1, "d^2"),
            (1, "e^2"),
        ]);
        let q2 = QuadraticForm::from_named(&[(1, "b^2"), (2, "c^2"), (3, "d^2"), (4, "e^2")]);
        let pencil = Pencil::new([q1, q2]).unwrap();
        let symbol = segre_symbol(&pencil).unwrap();
        assert_eq!(symbol.shape(), vec![vec![1]; 5]);
    }

    #[test]
    fn weierstrass_roundtrip_all_partitions() {
        let partitions: [&[u32]; 7] = [
            &[5],
            &[4, 1],
            &[3, 2],
            &[3, 1, 1],
            &[2, 2, 1],
            &[2, 1, 1, 1],
            &[1, 1, 1, 1, 1],
        ];
        for blocks in partitions {
            let entries: Vec<(Rat, Vec<u32>)> = blocks
                .iter()
                .enumerate()
                .map(|(i, &b)| (rat(i as i64), vec![b]))
                .collect();
            let pencil = pencil_from_segre(&entries).unwrap();
            let symbol = segre_symbol(&pencil).unwrap();
            let mut expected: Vec<Vec<u32>> = blocks.iter().map(|&b| vec![b]).collect();
            expected.sort();
            assert_eq!(symbol.shape(), expected, "partition {blocks:?}");
        }
    }

    #[test]
    fn grouped_blocks_roundtrip() {
        // distinct eigenvalues carrying several blocks each
        let p122 = pencil_from_segre(&[
            (rat(0), vec![1]),
            (rat(1), vec![2]),
            (rat(2), vec![2]),
        ])
        .unwrap();
        let symbol = segre_symbol(&p122).unwrap();
        assert_eq!(symbol.shape(), vec![vec![1], vec![2], vec![2]]);

        let p0 = pencil_from_segre(&[
            (rat(0), vec![1]),
            (rat(1), vec![1, 1]),
            (rat(2), vec![1, 1]),
        ])
        .unwrap();
        let symbol = segre_symbol(&p0).unwrap();
        assert_eq!(symbol.shape(), vec![vec![1], vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn single_jordan_block_discriminant() {
        let pencil = pencil_from_segre(&[(rat(2), vec![5])]).unwrap();
        let BinaryQuintic(disc) = discriminant_pencil(&pencil);
        // (s + 2t)^5 up to scalar
        let vs = st_vars();
        let s = MultiPoly::var(vs.clone(), 0);
        let t = MultiPoly::var(vs, 1);
        let lin = s.add(&t.scale(&rat(2)));
        assert!(disc.proportional_to(&lin.pow(5)));
        let symbol = segre_symbol(&pencil).unwrap();
        assert_eq!(symbol.shape(), vec![vec![5]]);
    }

    #[test]
    fn wholly_singular_pencil_is_an_error() {
        let veronese = pencil_from_named(&[(1, "ac"), (-1, "b^2")], &[(1, "ce"), (-1, "d^2")]);
        assert_eq!(segre_symbol(&veronese), Err(SegreError::WhollySingular));
    }

    #[test]
    fn block_sums_match_discriminant_multiplicities() {
        let pencil = pencil_from_segre(&[
            (rat(0), vec![2, 1]),
            (rat(1), vec![1]),
            (rat(3), vec![1]),
        ])
        .unwrap();
        let symbol = segre_symbol(&pencil).unwrap();
        let BinaryQuintic(disc) = discriminant_pencil(&pencil);
        for entry in &symbol.entries {
            let d = entry.factor_degree;
            let factor = MultiPoly::from_terms(
                st_vars(),
                entry
                    .factor_coefficients
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        (
                            vec![d - i as u32, i as u32],
                            crate::rational::parse_rat(c).unwrap(),
                        )
                    }),
            );
            let mult = factor_multiplicity(&disc, &factor).unwrap();
            assert_eq!(
                mult,
                Multiplicity::Finite(entry.blocks.iter().sum::<u32>()),
                "entry {entry:?}"
            );
        }
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            pencil_from_segre(&[(rat(0), vec![3])]),
            Err(SegreError::BadBlockSum(3))
        );
        assert_eq!(
            pencil_from_segre(&[(rat(0), vec![3]), (rat(0), vec![2])]),
            Err(SegreError::RepeatedEigenvalue)
        );
    }

    #[test]
    fn veronese_section_examples() {
        let vs = vars(&["x", "y", "z"]);
        let x = MultiPoly::var(vs.clone(), 0);
        let y = MultiPoly::var(vs.clone(), 1);
        let z = MultiPoly::var(vs.clone(), 2);

        // xz - y^2 -> ae - 2bd + c^2
        let f = x.mul(&z).sub(&y.pow(2));
        let rep = veronese_quadric_section_test(&f).unwrap();
        let expected = QuadraticForm::from_named(&[(1, "ae"), (-2, "bd"), (1, "c^2")]);
        assert_eq!(rep, expected);

        // x^2 -> a^2
        let rep = veronese_quadric_section_test(&x.pow(2)).unwrap();
        assert_eq!(rep, QuadraticForm::from_named(&[(1, "a^2")]));

        // x^2 + xz squares to something with an x^3 z term: not a section
        assert!(veronese_quadric_section_test(&x.pow(2).add(&x.mul(&z))).is_none());
    }
}
