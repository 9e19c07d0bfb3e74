//! The fifteen quadratic monomials in the frozen variables `a,b,c,d,e`.
//!
//! The enumeration is lexicographic with `a > b > c > d > e`, so smaller
//! index means lex-greater monomial:
//!
//! ```text
//!  0 a^2   1 ab   2 ac   3 ad   4 ae
//!  5 b^2   6 bc   7 bd   8 be
//!  9 c^2  10 cd  11 ce
//! 12 d^2  13 de
//! 14 e^2
//! ```

pub const NUM_VARS: usize = 5;
pub const NUM_MONOMIALS: usize = 15;
pub const VAR_NAMES: [&str; NUM_VARS] = ["a", "b", "c", "d", "e"];

/// A quadratic monomial, identified by its index in the fixed enumeration.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial2(u8);

/// `(i, j)` with `i <= j` for each index, in enumeration order.
const VAR_PAIRS: [(usize, usize); NUM_MONOMIALS] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 2),
    (2, 3),
    (2, 4),
    (3, 3),
    (3, 4),
    (4, 4),
];

impl Monomial2 {
    pub const ALL: [Monomial2; NUM_MONOMIALS] = {
        let mut all = [Monomial2(0); NUM_MONOMIALS];
        let mut i = 0;
        while i < NUM_MONOMIALS {
            all[i] = Monomial2(i as u8);
            i += 1;
        }
        all
    };

    pub fn from_index(index: usize) -> Monomial2 {
        assert!(index < NUM_MONOMIALS);
        Monomial2(index as u8)
    }

    /// Monomial `x_i * x_j` (order of arguments irrelevant).
    pub fn from_vars(i: usize, j: usize) -> Monomial2 {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let index = VAR_PAIRS
            .iter()
            .position(|&p| p == (lo, hi))
            .expect("variable indices in 0..5");
        Monomial2(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn vars(self) -> (usize, usize) {
        VAR_PAIRS[self.index()]
    }

    pub fn exponents(self) -> [u32; NUM_VARS] {
        let (i, j) = self.vars();
        let mut e = [0u32; NUM_VARS];
        e[i] += 1;
        e[j] += 1;
        e
    }

    /// Lex comparison: `a^2` is the greatest monomial.
    pub fn lex_greater(self, other: Monomial2) -> bool {
        self.0 < other.0
    }

    pub fn name(self) -> String {
        let (i, j) = self.vars();
        if i == j {
            format!("{}^2", VAR_NAMES[i])
        } else {
            format!("{}{}", VAR_NAMES[i], VAR_NAMES[j])
        }
    }
}

impl std::fmt::Debug for Monomial2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Index sets for the monomial spans used by the flag predicates.
pub mod spans {
    /// Quadrics vanishing on the hyperplane `e = 0`: multiples of `e`.
    pub const E_TIMES_V: [usize; 5] = [4, 8, 11, 13, 14];
    /// The single monomial `e^2` (quadrics singular along `e = 0`).
    pub const E_SQUARED: [usize; 1] = [14];
    /// Quadrics vanishing on the plane `d = e = 0`.
    pub const DE_TIMES_V: [usize; 9] = [3, 4, 7, 8, 10, 11, 12, 13, 14];
    /// Quadrics singular along the plane `d = e = 0`.
    pub const DE_SQUARED: [usize; 3] = [12, 13, 14];
    /// Quadrics vanishing on the line `c = d = e = 0`.
    pub const CDE_TIMES_V: [usize; 12] = [2, 3, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14];
    /// Quadrics singular along the line `c = d = e = 0`.
    pub const CDE_SQUARED: [usize; 6] = [9, 10, 11, 12, 13, 14];
    /// Quadrics vanishing at the point `[1:0:0:0:0]` (no `a^2` term).
    pub const NOT_A_SQUARED: [usize; 14] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14];
    /// Quadrics singular at the point `[1:0:0:0:0]` (no `a` at all).
    pub const A_FREE: [usize; 10] = [5, 6, 7, 8, 9, 10, 11, 12, 13, 14];
    /// Initial monomials divisible by `a`.
    pub const A_TIMES_V: [usize; 5] = [0, 1, 2, 3, 4];
}
