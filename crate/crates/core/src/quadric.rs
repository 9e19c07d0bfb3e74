//! Quadratic forms in five variables and projective points.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::monomial::{Monomial2, NUM_MONOMIALS, NUM_VARS, VAR_NAMES};
use crate::poly::{self, MultiPoly};
use crate::rational::{primitive_integer_vector, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetError {
    #[error("quadric has rank {0}, vertex requires rank 4")]
    VertexUndefined(u32),
    #[error("zero vector is not a projective point")]
    InvalidPoint,
    #[error("coordinate change matrix is singular")]
    SingularChange,
    #[error("coefficient matrix has rank {0}, expected {1}")]
    WrongRank(usize, usize),
}

/// A quadric in `P^4` as its 15-coefficient vector in the fixed monomial
/// order. The symmetric Gram matrix is derived on demand: diagonal entries
/// are the square coefficients, off-diagonal entries half the mixed ones.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    coeffs: [Rat; NUM_MONOMIALS],
}

impl QuadraticForm {
    pub fn zero() -> Self {
        QuadraticForm {
            coeffs: std::array::from_fn(|_| Rat::zero()),
        }
    }

    pub fn from_coeffs(coeffs: [Rat; NUM_MONOMIALS]) -> Self {
        QuadraticForm { coeffs }
    }

    pub fn from_terms(terms: &[(Monomial2, Rat)]) -> Self {
        let mut q = QuadraticForm::zero();
        for (m, c) in terms {
            q.coeffs[m.index()] += c;
        }
        q
    }

    /// Builds a form from `(coefficient, monomial-name)` pairs, e.g.
    /// `[(1, "ad"), (-1, "bc")]`.
    pub fn from_named(terms: &[(i64, &str)]) -> Self {
        let mut q = QuadraticForm::zero();
        for &(c, name) in terms {
            let idx = Monomial2::ALL
                .iter()
                .position(|m| m.name() == name || m.name().replace('^', "") == name.replace('^', ""))
                .unwrap_or_else(|| panic!("unknown monomial {name}"));
            q.coeffs[idx] += Rat::from_integer(BigInt::from(c));
        }
        q
    }

    pub fn coeffs(&self) -> &[Rat; NUM_MONOMIALS] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Rat; NUM_MONOMIALS] {
        &mut self.coeffs
    }

    pub fn coeff(&self, m: Monomial2) -> &Rat {
        &self.coeffs[m.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn monomials(&self) -> impl Iterator<Item = (Monomial2, &Rat)> {
        Monomial2::ALL
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (*m, c))
    }

    /// The lex-initial monomial, or `None` for the zero form.
    pub fn initial_lex(&self) -> Option<Monomial2> {
        self.monomials().next().map(|(m, _)| m)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        QuadraticForm {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * k),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        QuadraticForm {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        QuadraticForm {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]),
        }
    }

    /// Symmetric 5x5 Gram matrix.
    pub fn gram(&self) -> [[Rat; NUM_VARS]; NUM_VARS] {
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        let mut g: [[Rat; NUM_VARS]; NUM_VARS] =
            std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
        for (m, c) in self.monomials() {
            let (i, j) = m.vars();
            if i == j {
                g[i][i] = c.clone();
            } else {
                g[i][j] = c * &half;
                g[j][i] = c * &half;
            }
        }
        g
    }

    pub fn from_gram(g: &[[Rat; NUM_VARS]; NUM_VARS]) -> Self {
        let mut q = QuadraticForm::zero();
        for m in Monomial2::ALL {
            let (i, j) = m.vars();
            q.coeffs[m.index()] = if i == j {
                g[i][i].clone()
            } else {
                &g[i][j] + &g[j][i]
            };
        }
        q
    }

    /// Rank of the Gram matrix over the rationals.
    pub fn rank(&self) -> u32 {
        let g = self.gram();
        let rows: Vec<Vec<Rat>> = g.iter().map(|r| r.to_vec()).collect();
        matrix_rank(rows) as u32
    }

    /// The vertex of a rank-4 quadric: the projective point spanning the
    /// Gram kernel.
    pub fn vertex(&self) -> Result<ProjPoint, NetError> {
        let rank = self.rank();
        if rank != 4 {
            return Err(NetError::VertexUndefined(rank));
        }
        let g = self.gram();
        let kernel = kernel_vector(&g).expect("rank-4 matrix has a kernel vector");
        ProjPoint::new(&kernel)
    }

    /// Value at a fixed affine representative of the point.
    pub fn evaluate(&self, p: &ProjPoint) -> Rat {
        let coords: Vec<Rat> = p.coords().iter().map(|x| Rat::from_integer(x.clone())).collect();
        let mut acc = Rat::zero();
        for (m, c) in self.monomials() {
            let (i, j) = m.vars();
            acc += c * &coords[i] * &coords[j];
        }
        acc
    }

    /// The form as a polynomial in `a..e`.
    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::from_terms(
            poly::vars(&VAR_NAMES),
            self.monomials().map(|(m, c)| (m.exponents().to_vec(), c.clone())),
        )
    }

    /// Reads a degree-2 homogeneous polynomial in `a..e` back into a form.
    pub fn from_poly(p: &MultiPoly) -> Option<Self> {
        let mut q = QuadraticForm::zero();
        for (e, c) in p.terms() {
            if e.iter().sum::<u32>() != 2 || e.len() != NUM_VARS {
                return None;
            }
            let vars: Vec<usize> = (0..NUM_VARS)
                .flat_map(|i| std::iter::repeat(i).take(e[i] as usize))
                .collect();
            q.coeffs[Monomial2::from_vars(vars[0], vars[1]).index()] = c.clone();
        }
        Some(q)
    }

    /// Substitutes variables by the rows of the change matrix: the new form
    /// is `q(g * x)`.
    pub fn transform(&self, g: &CoordinateChange) -> Self {
        let images: Vec<MultiPoly> = (0..NUM_VARS)
            .map(|i| {
                MultiPoly::from_terms(
                    poly::vars(&VAR_NAMES),
                    (0..NUM_VARS).map(|j| {
                        let mut e = vec![0u32; NUM_VARS];
                        e[j] = 1;
                        (e, g.matrix[i][j].clone())
                    }),
                )
            })
            .collect();
        QuadraticForm::from_poly(&self.to_poly().substitute(&images))
            .expect("linear substitution preserves degree")
    }
}

impl std::fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// A projective point of `P^4`, stored as a primitive integer vector with
/// positive first nonzero entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [BigInt; NUM_VARS],
}

impl ProjPoint {
    pub fn new(coords: &[Rat]) -> Result<Self, NetError> {
        assert_eq!(coords.len(), NUM_VARS);
        let ints = primitive_integer_vector(coords).ok_or(NetError::InvalidPoint)?;
        Ok(ProjPoint {
            coords: std::array::from_fn(|i| ints[i].clone()),
        })
    }

    pub fn from_ints(coords: [i64; NUM_VARS]) -> Result<Self, NetError> {
        let rats: Vec<Rat> = coords.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect();
        Self::new(&rats)
    }

    pub fn coords(&self) -> &[BigInt; NUM_VARS] {
        &self.coords
    }
}

impl std::fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// An invertible linear change of the variables `(a,b,c,d,e)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CoordinateChange {
    /// Row `i` gives the image of the `i`-th variable.
    pub matrix: [[Rat; NUM_VARS]; NUM_VARS],
}

impl CoordinateChange {
    pub fn new(matrix: [[Rat; NUM_VARS]; NUM_VARS]) -> Result<Self, NetError> {
        let rows: Vec<Vec<Rat>> = matrix.iter().map(|r| r.to_vec()).collect();
        if matrix_rank(rows) != NUM_VARS {
            return Err(NetError::SingularChange);
        }
        Ok(CoordinateChange { matrix })
    }

    pub fn identity() -> Self {
        CoordinateChange {
            matrix: std::array::from_fn(|i| {
                std::array::from_fn(|j| if i == j { Rat::from_integer(BigInt::from(1)) } else { Rat::zero() })
            }),
        }
    }

    pub fn from_ints(m: [[i64; NUM_VARS]; NUM_VARS]) -> Result<Self, NetError> {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| Rat::from_integer(BigInt::from(m[i][j])))
        }))
    }

    /// Permutation of the variables: variable `i` maps to variable `perm[i]`.
    pub fn permutation(perm: [usize; NUM_VARS]) -> Self {
        let mut m = [[0i64; NUM_VARS]; NUM_VARS];
        for (i, &p) in perm.iter().enumerate() {
            m[i][p] = 1;
        }
        Self::from_ints(m).expect("permutation matrices are invertible")
    }

    pub fn inverse(&self) -> Self {
        let inv = invert_matrix(&self.matrix).expect("construction guarantees invertibility");
        CoordinateChange { matrix: inv }
    }
}

/// Row rank of a rational matrix by Gaussian elimination.
pub fn matrix_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &lead;
                for c in col..ncols {
                    let delta = &rows[rank][c] * &factor;
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// A kernel vector of a square matrix, if the matrix is singular.
fn kernel_vector(m: &[[Rat; NUM_VARS]; NUM_VARS]) -> Option<Vec<Rat>> {
    let n = NUM_VARS;
    let mut rows: Vec<Vec<Rat>> = m.iter().map(|r| r.to_vec()).collect();
    let mut pivot_col_of_row: Vec<Option<usize>> = vec![None; n];
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for c in 0..n {
            rows[rank][c] = &rows[rank][c] / &lead;
        }
        for r in 0..n {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..n {
                    let delta = &rows[rank][c] * &factor;
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_col_of_row[rank] = Some(col);
        rank += 1;
    }
    if rank == n {
        return None;
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.iter().flatten().copied().collect();
    let free_col = (0..n).find(|c| !pivot_cols.contains(c))?;
    let mut v = vec![Rat::zero(); n];
    v[free_col] = Rat::from_integer(BigInt::from(1));
    for (row, col) in pivot_col_of_row.iter().enumerate() {
        if let Some(col) = col {
            v[*col] = -rows[row][free_col].clone();
        }
    }
    Some(v)
}

/// Inverse of a square rational matrix.
fn invert_matrix(m: &[[Rat; NUM_VARS]; NUM_VARS]) -> Option<[[Rat; NUM_VARS]; NUM_VARS]> {
    let n = NUM_VARS;
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.to_vec();
            for j in 0..n {
                row.push(if i == j {
                    Rat::from_integer(BigInt::from(1))
                } else {
                    Rat::zero()
                });
            }
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let lead = aug[col][col].clone();
        for c in 0..2 * n {
            aug[col][c] = &aug[col][c] / &lead;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in 0..2 * n {
                    let delta = &aug[col][c] * &factor;
                    aug[r][c] = &aug[r][c] - &delta;
                }
            }
        }
    }
    Some(std::array::from_fn(|i| std::array::from_fn(|j| aug[i][n + j].clone())))
}

/// Determinant sign helper used by tests; exposes whether a change matrix
/// has determinant +-1.
pub fn is_unimodular(g: &CoordinateChange) -> bool {
    let det = det5(&g.matrix);
    det.abs() == Rat::from_integer(BigInt::from(1))
}

fn det5(m: &[[Rat; NUM_VARS]; NUM_VARS]) -> Rat {
    // cofactor expansion is fine at this size
    fn det_rec(m: &[[Rat; NUM_VARS]; NUM_VARS], rows: &[usize], cols: &[usize]) -> Rat {
        if rows.len() == 1 {
            return m[rows[0]][cols[0]].clone();
        }
        let mut acc = Rat::zero();
        let sub_rows: Vec<usize> = rows[1..].to_vec();
        for (j, &col) in cols.iter().enumerate() {
            if m[rows[0]][col].is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
            let minor = det_rec(m, &sub_rows, &sub_cols);
            let term = &m[rows[0]][col] * &minor;
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    let idx: Vec<usize> = (0..NUM_VARS).collect();
    det_rec(m, &idx, &idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(QuadraticForm::zero().rank(), 0);
        assert_eq!(QuadraticForm::from_named(&[(1, "e^2")]).rank(), 1);
        assert_eq!(QuadraticForm::from_named(&[(1, "de")]).rank(), 2);
        let q = QuadraticForm::from_named(&[(1, "ae"), (1, "bd"), (-1, "c^2")]);
        assert_eq!(q.rank(), 5);
    }

    #[test]
    fn vertex_examples() {
        let q = QuadraticForm::from_named(&[(1, "ad"), (-1, "bc")]);
        assert_eq!(q.rank(), 4);
        let v = q.vertex().unwrap();
        assert_eq!(v, ProjPoint::from_ints([0, 0, 0, 0, 1]).unwrap());
        // the vertex lies on the quadric
        assert!(q.evaluate(&v).is_zero());

        let smooth = QuadraticForm::from_named(&[(1, "ae"), (1, "bd"), (-1, "c^2")]);
        assert_eq!(smooth.vertex(), Err(NetError::VertexUndefined(5)));
        let low = QuadraticForm::from_named(&[(1, "e^2")]);
        assert_eq!(low.vertex(), Err(NetError::VertexUndefined(1)));
    }

    #[test]
    fn evaluate_examples() {
        let e2 = QuadraticForm::from_named(&[(1, "e^2")]);
        let p = ProjPoint::from_ints([1, 0, 0, 0, 0]).unwrap();
        assert!(e2.evaluate(&p).is_zero());
        let q = QuadraticForm::from_named(&[(1, "ad"), (-1, "bc")]);
        let p = ProjPoint::from_ints([1, 0, 0, 1, 0]).unwrap();
        assert_eq!(q.evaluate(&p), Rat::from_integer(BigInt::from(1)));
        assert_eq!(
            ProjPoint::from_ints([0, 0, 0, 0, 0]),
            Err(NetError::InvalidPoint)
        );
    }

    #[test]
    fn gram_roundtrip() {
        let q = QuadraticForm::from_named(&[(1, "ae"), (2, "bd"), (-1, "c^2"), (3, "a^2")]);
        assert_eq!(QuadraticForm::from_gram(&q.gram()), q);
    }

    #[test]
    fn transform_by_permutation() {
        // swap b <-> c turns ad - bc into ad - cb = ad - bc
        let g = CoordinateChange::permutation([0, 2, 1, 3, 4]);
        let q = QuadraticForm::from_named(&[(1, "ad"), (-1, "bc")]);
        assert_eq!(q.transform(&g), q);
        // and ab into ac
        let ab = QuadraticForm::from_named(&[(1, "ab")]);
        assert_eq!(ab.transform(&g), QuadraticForm::from_named(&[(1, "ac")]));
    }

    #[test]
    fn rank_invariant_under_congruence() {
        let q = QuadraticForm::from_named(&[(1, "ad"), (-1, "bc")]);
        let g = CoordinateChange::from_ints([
            [1, 2, 0, 0, 1],
            [0, 1, 0, 0, 0],
            [0, 3, 1, 0, 0],
            [0, 0, 0, 1, 4],
            [0, 0, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(q.transform(&g).rank(), q.rank());
    }

    #[test]
    fn inverse_change() {
        let g = CoordinateChange::from_ints([
            [1, 1, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 1, 0, 2],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
        ])
        .unwrap();
        let q = QuadraticForm::from_named(&[(1, "ae"), (1, "bd"), (-1, "c^2")]);
        assert_eq!(q.transform(&g).transform(&g.inverse()), q);
        assert!(is_unimodular(&g));
        assert!(CoordinateChange::from_ints([[0; 5]; 5]).is_err());
    }
}
