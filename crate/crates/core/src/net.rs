//! Nets and pencils of quadrics: row spaces of 3x15 and 2x15 coefficient
//! matrices, normalized bases, Plücker support, coordinate changes.

use serde::{Deserialize, Serialize};

use crate::monomial::{Monomial2, NUM_MONOMIALS};
use crate::quadric::{matrix_rank, CoordinateChange, NetError, QuadraticForm};
use crate::rational::{format_rat, parse_rat, Rat};
use num_traits::Zero;

/// A net of quadrics: a 3-dimensional subspace of the 15-dimensional space
/// of quadratic forms. Equality is row-space equality.
#[derive(Clone)]
pub struct Net {
    basis: [QuadraticForm; 3],
}

/// A pencil of quadrics (2-dimensional subspace).
#[derive(Clone)]
pub struct Pencil {
    basis: [QuadraticForm; 2],
}

/// Reduced row echelon form of a list of coefficient rows under the given
/// column order (`cols[0]` is scanned first). Returns the nonzero rows.
pub fn rref_under_order(rows: &[Vec<Rat>], cols: &[usize]) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = rows.to_vec();
    let mut rank = 0;
    for &col in cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for c in 0..rows[rank].len() {
            rows[rank][c] = &rows[rank][c] / &lead;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..rows[r].len() {
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
    rows.truncate(rank);
    rows
}

fn lex_cols() -> Vec<usize> {
    (0..NUM_MONOMIALS).collect()
}

impl Net {
    /// Builds a net, requiring the three forms to be linearly independent.
    pub fn new(basis: [QuadraticForm; 3]) -> Result<Self, NetError> {
        let rank = matrix_rank(basis.iter().map(|q| q.coeffs().to_vec()).collect());
        if rank != 3 {
            return Err(NetError::WrongRank(rank, 3));
        }
        Ok(Net { basis })
    }

    pub fn basis(&self) -> &[QuadraticForm; 3] {
        &self.basis
    }

    pub fn coefficient_rows(&self) -> Vec<Vec<Rat>> {
        self.basis.iter().map(|q| q.coeffs().to_vec()).collect()
    }

    /// Normalized basis: reduced row echelon form under the lex column
    /// order. Initial monomials strictly decrease along the rows; the map is
    /// idempotent and depends only on the row space.
    pub fn normalized_basis(&self) -> Net {
        let rows = rref_under_order(&self.coefficient_rows(), &lex_cols());
        debug_assert_eq!(rows.len(), 3);
        Net {
            basis: std::array::from_fn(|i| {
                QuadraticForm::from_coeffs(std::array::from_fn(|j| rows[i][j].clone()))
            }),
        }
    }

    /// Plücker support: the triples of monomials whose 3x3 minor of the
    /// coefficient matrix is nonzero. Independent of the basis choice.
    pub fn plucker_support(&self) -> Vec<[Monomial2; 3]> {
        let rows = self.normalized_basis().coefficient_rows();
        let mut support = Vec::new();
        for i in 0..NUM_MONOMIALS {
            for j in (i + 1)..NUM_MONOMIALS {
                for k in (j + 1)..NUM_MONOMIALS {
                    if !minor3(&rows, i, j, k).is_zero() {
                        support.push([
                            Monomial2::from_index(i),
                            Monomial2::from_index(j),
                            Monomial2::from_index(k),
                        ]);
                    }
                }
            }
        }
        support
    }

    /// Applies a coordinate change to every basis quadric.
    pub fn apply_coordinate_change(&self, g: &CoordinateChange) -> Net {
        Net {
            basis: std::array::from_fn(|i| self.basis[i].transform(g)),
        }
    }

    /// Row-space membership.
    pub fn contains(&self, q: &QuadraticForm) -> bool {
        if q.is_zero() {
            return true;
        }
        let mut rows = self.coefficient_rows();
        rows.push(q.coeffs().to_vec());
        matrix_rank(rows) == 3
    }

    pub fn serialize_coeffs(&self) -> NetRecord {
        NetRecord {
            quadrics: self
                .normalized_basis()
                .basis
                .iter()
                .map(|q| q.coeffs().iter().map(format_rat).collect())
                .collect(),
        }
    }

    pub fn from_record(record: &NetRecord) -> Result<Net, NetError> {
        if record.quadrics.len() != 3 {
            return Err(NetError::WrongRank(record.quadrics.len(), 3));
        }
        let mut forms = Vec::new();
        for row in &record.quadrics {
            if row.len() != NUM_MONOMIALS {
                return Err(NetError::WrongRank(row.len(), NUM_MONOMIALS));
            }
            let mut coeffs: [Rat; NUM_MONOMIALS] = std::array::from_fn(|_| Rat::zero());
            for (i, s) in row.iter().enumerate() {
                coeffs[i] = parse_rat(s).ok_or(NetError::InvalidPoint)?;
            }
            forms.push(QuadraticForm::from_coeffs(coeffs));
        }
        Net::new([forms[0].clone(), forms[1].clone(), forms[2].clone()])
    }
}

impl PartialEq for Net {
    fn eq(&self, other: &Self) -> bool {
        self.normalized_basis().coefficient_rows() == other.normalized_basis().coefficient_rows()
    }
}

impl Eq for Net {}

impl std::fmt::Debug for Net {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({:?}, {:?}, {:?})",
            self.basis[0], self.basis[1], self.basis[2]
        )
    }
}

/// Serialized form of a net: three rows of 15 rationals as strings, in the
/// fixed monomial order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetRecord {
    pub quadrics: Vec<Vec<String>>,
}

fn minor3(rows: &[Vec<Rat>], i: usize, j: usize, k: usize) -> Rat {
    let m = |r: usize, c: usize| &rows[r][c];
    let det2 = |r1: usize, r2: usize, c1: usize, c2: usize| m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
    m(0, i) * &det2(1, 2, j, k) - m(0, j) * &det2(1, 2, i, k) + m(0, k) * &det2(1, 2, i, j)
}

impl Pencil {
    pub fn new(basis: [QuadraticForm; 2]) -> Result<Self, NetError> {
        let rank = matrix_rank(basis.iter().map(|q| q.coeffs().to_vec()).collect());
        if rank != 2 {
            return Err(NetError::WrongRank(rank, 2));
        }
        Ok(Pencil { basis })
    }

    pub fn basis(&self) -> &[QuadraticForm; 2] {
        &self.basis
    }

    pub fn apply_coordinate_change(&self, g: &CoordinateChange) -> Pencil {
        Pencil {
            basis: std::array::from_fn(|i| self.basis[i].transform(g)),
        }
    }

    /// The member `s*Q1 + t*Q2`.
    pub fn member(&self, s: &Rat, t: &Rat) -> QuadraticForm {
        self.basis[0].scale(s).add(&self.basis[1].scale(t))
    }
}

impl PartialEq for Pencil {
    fn eq(&self, other: &Self) -> bool {
        let rows_a =
            rref_under_order(&self.basis.iter().map(|q| q.coeffs().to_vec()).collect::<Vec<_>>(), &lex_cols());
        let rows_b =
            rref_under_order(&other.basis.iter().map(|q| q.coeffs().to_vec()).collect::<Vec<_>>(), &lex_cols());
        rows_a == rows_b
    }
}

impl Eq for Pencil {}

impl std::fmt::Debug for Pencil {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}, {:?})", self.basis[0], self.basis[1])
    }
}

/// Convenience constructor used throughout the tests and the catalog.
pub fn net_from_named(q1: &[(i64, &str)], q2: &[(i64, &str)], q3: &[(i64, &str)]) -> Net {
    Net::new([
        QuadraticForm::from_named(q1),
        QuadraticForm::from_named(q2),
        QuadraticForm::from_named(q3),
    ])
    .expect("named net must have rank 3")
}

pub fn pencil_from_named(q1: &[(i64, &str)], q2: &[(i64, &str)]) -> Pencil {
    Pencil::new([QuadraticForm::from_named(q1), QuadraticForm::from_named(q2)])
        .expect("named pencil must have rank 2")
}
