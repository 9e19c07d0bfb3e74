//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Monomials are exponent vectors over a fixed, ordered variable list; the
//! map is keyed so that iterating from the back yields the lex-leading term
//! (earlier variables are lex-greater). Everything here is immutable and
//! pure, so values can be shared freely across threads.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{format_rat, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("matrix of dimension {0} exceeds the supported bound 6")]
    MatrixTooLarge(usize),
    #[error("operands have different variable lists")]
    VariableMismatch,
    #[error("polynomial is identically zero")]
    IdenticallyZero,
    #[error("divisor must be nonconstant")]
    InvalidDivisor,
}

/// Multiplicity of a factor; `Infinite` is the conventional value for the
/// zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl Multiplicity {
    pub fn finite(self) -> Option<u32> {
        match self {
            Multiplicity::Finite(k) => Some(k),
            Multiplicity::Infinite => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    /// exponent vector -> nonzero coefficient
    terms: BTreeMap<Vec<u32>, Rat>,
}

pub fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: Rat) -> Self {
        let n = vars.len();
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    pub fn one(vars: Vec<String>) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// Single variable `x_i`.
    pub fn var(vars: Vec<String>, index: usize) -> Self {
        assert!(index < vars.len());
        let n = vars.len();
        let mut exp = vec![0u32; n];
        exp[index] = 1;
        let mut p = MultiPoly::zero(vars);
        p.terms.insert(exp, Rat::one());
        p
    }

    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = MultiPoly::zero(vars);
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        debug_assert_eq!(exp.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree as a homogeneous polynomial; `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Lex-leading term (variable order as listed, earlier variables greater).
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn check_same_vars(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch)
        }
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = MultiPoly::one(self.vars.clone());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiplies by a single monomial.
    pub fn mul_term(&self, exp: &[u32], c: &Rat) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e.iter().zip(exp).map(|(x, y)| x + y).collect(), k * c))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut exp = e.clone();
            exp[var] -= 1;
            out.add_term(exp, c * Rat::from_integer(BigInt::from(e[var])));
        }
        out
    }

    pub fn evaluate(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes each variable by the given polynomial (all images share
    /// one variable list, which becomes the result's list).
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len());
        let target_vars = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut acc = MultiPoly::zero(target_vars.clone());
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(target_vars.clone(), c.clone());
            for (img, &k) in images.iter().zip(e) {
                for _ in 0..k {
                    term = term.mul(img);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        debug_assert_eq!(self.vars, divisor.vars);
        if divisor.is_zero() {
            return None;
        }
        let (dlead_exp, dlead_coeff) = divisor
            .leading_term()
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.vars.clone());
        while let Some((rlead_exp, rlead_coeff)) =
            rem.leading_term().map(|(e, c)| (e.clone(), c.clone()))
        {
            let mut qexp = Vec::with_capacity(rlead_exp.len());
            for (r, d) in rlead_exp.iter().zip(&dlead_exp) {
                if r < d {
                    return None;
                }
                qexp.push(r - d);
            }
            let qc = rlead_coeff / &dlead_coeff;
            rem = rem.sub(&divisor.mul_term(&qexp, &qc));
            quot.add_term(qexp, qc);
        }
        Some(quot)
    }

    /// Content: the positive rational with `self = content * primitive` where
    /// `primitive` has coprime integer coefficients.
    pub fn content(&self) -> Rat {
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            gcd = num_integer::gcd(gcd, (c * Rat::from_integer(lcm.clone())).to_integer());
        }
        if gcd.is_zero() {
            return Rat::zero();
        }
        Rat::new(gcd, lcm)
    }

    /// Primitive normalization: integer coprime coefficients with positive
    /// lex-leading coefficient. The zero polynomial is returned unchanged.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = self.scale(&self.content().recip());
        if out.leading_term().unwrap().1.is_negative() {
            out = out.neg();
        }
        out
    }

    /// Equality up to a nonzero rational scalar.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.normalized() == other.normalized()
    }

    /// Dense coefficient vector in the main variable; each coefficient is a
    /// polynomial over the unchanged variable list with the main variable
    /// zeroed out.
    pub fn univariate_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.terms.keys().map(|e| e[var]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![MultiPoly::zero(self.vars.clone()); deg + 1];
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            let k = exp[var] as usize;
            exp[var] = 0;
            coeffs[k].add_term(exp, c.clone());
        }
        coeffs
    }

    pub fn from_univariate(vars: Vec<String>, var: usize, coeffs: Vec<MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero(vars);
        for (k, c) in coeffs.into_iter().enumerate() {
            for (e, coeff) in c.terms {
                let mut exp = e;
                exp[var] += k as u32;
                out.add_term(exp, coeff);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const_term = e.iter().all(|&k| k == 0);
            if !mag.is_one() || is_const_term {
                write!(f, "{}", format_rat(&mag))?;
            }
            for (name, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "{}", name)?,
                    _ => write!(f, "{}^{}", name, k)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact determinant of a small matrix of polynomials by cofactor expansion
/// along the sparsest row. All entries must share one variable list.
pub fn det_poly_matrix(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, AlgebraError> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::NonSquareMatrix {
            rows: n,
            cols: m.iter().map(|r| r.len()).max().unwrap_or(0),
        });
    }
    if n > 6 {
        return Err(AlgebraError::MatrixTooLarge(n));
    }
    let vars = m[0][0].vars().to_vec();
    for row in m {
        for entry in row {
            if entry.vars() != vars {
                return Err(AlgebraError::VariableMismatch);
            }
        }
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(det_recursive(m, &idx, &idx, &vars))
}

fn det_recursive(m: &[Vec<MultiPoly>], rows: &[usize], cols: &[usize], vars: &[String]) -> MultiPoly {
    let n = rows.len();
    if n == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    // expand along the row with the most zero entries
    let (best_idx, _) = rows
        .iter()
        .enumerate()
        .map(|(i, &r)| (i, cols.iter().filter(|&&c| m[r][c].is_zero()).count()))
        .max_by_key(|&(_, z)| z)
        .unwrap();
    let row = rows[best_idx];
    let sub_rows: Vec<usize> = rows.iter().copied().filter(|&r| r != row).collect();
    let mut acc = MultiPoly::zero(vars.to_vec());
    for (j, &col) in cols.iter().enumerate() {
        let entry = &m[row][col];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
        let minor = det_recursive(m, &sub_rows, &sub_cols, vars);
        let signed = if (best_idx + j) % 2 == 0 { minor } else { minor.neg() };
        acc = acc.add(&entry.mul(&signed));
    }
    acc
}

/// Greatest common divisor, normalized primitive with positive lex-leading
/// coefficient. `gcd(f, 0)` is the normalization of `f`.
pub fn multivariate_gcd(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
    f.check_same_vars(g)?;
    Ok(gcd_inner(f, g).normalized())
}

fn gcd_inner(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return MultiPoly::one(f.vars().to_vec());
    }
    // main variable: first one occurring in either operand
    let nvars = f.num_vars();
    let occurs = |p: &MultiPoly, v: usize| p.terms().any(|(e, _)| e[v] > 0);
    let var = (0..nvars)
        .find(|&v| occurs(f, v) || occurs(g, v))
        .expect("nonconstant polynomial has a variable");

    let fu = f.univariate_in(var);
    let gu = g.univariate_in(var);
    let content_of = |u: &[MultiPoly]| -> MultiPoly {
        let mut acc = MultiPoly::zero(f.vars().to_vec());
        for c in u {
            acc = gcd_inner(&acc, c);
        }
        acc.normalized()
    };
    let fc = content_of(&fu);
    let gc = content_of(&gu);
    let fp: Vec<MultiPoly> = fu.iter().map(|c| c.exact_div(&fc).unwrap()).collect();
    let gp: Vec<MultiPoly> = gu.iter().map(|c| c.exact_div(&gc).unwrap()).collect();

    let prim = subresultant_gcd(fp, gp, f.vars());
    let prim_poly = MultiPoly::from_univariate(f.vars().to_vec(), var, prim);
    gcd_inner(&fc, &gc).mul(&prim_poly)
}

fn trim_zeros(v: &mut Vec<MultiPoly>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

/// Subresultant pseudo-remainder sequence on inputs primitive in the main
/// variable; returns the primitive part of the gcd as a dense coefficient
/// vector in that variable.
fn subresultant_gcd(a: Vec<MultiPoly>, b: Vec<MultiPoly>, vars: &[String]) -> Vec<MultiPoly> {
    let one = MultiPoly::one(vars.to_vec());
    let mut f = a;
    let mut s = b;
    trim_zeros(&mut f);
    trim_zeros(&mut s);
    if f.len() < s.len() {
        std::mem::swap(&mut f, &mut s);
    }
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        if s.is_empty() {
            // gcd is the primitive part of f
            let mut content = MultiPoly::zero(vars.to_vec());
            for c in &f {
                content = gcd_inner(&content, c);
            }
            content = content.normalized();
            return f.iter().map(|c| c.exact_div(&content).unwrap()).collect();
        }
        if s.len() == 1 {
            // nonzero remainder of degree 0: primitive inputs are coprime
            return vec![one];
        }
        let delta = (f.len() - s.len()) as u32;
        let mut r = pseudo_rem(&f, &s);
        f = s;
        // divide by g * h^delta
        let mut divisor = g.clone();
        for _ in 0..delta {
            divisor = divisor.mul(&h);
        }
        for c in r.iter_mut() {
            *c = c.exact_div(&divisor).expect("subresultant divisibility");
        }
        trim_zeros(&mut r);
        s = r;
        g = f.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => {
                let mut num = MultiPoly::one(vars.to_vec());
                for _ in 0..delta {
                    num = num.mul(&g);
                }
                let mut den = MultiPoly::one(vars.to_vec());
                for _ in 0..(delta - 1) {
                    den = den.mul(&h);
                }
                num.exact_div(&den).expect("subresultant h update")
            }
        };
    }
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r`, with
/// `deg a >= deg b >= 1`. Vectors are trimmed dense coefficient lists.
fn pseudo_rem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let db = b.len() - 1;
    let lcb = b[db].clone();
    let mut r: Vec<MultiPoly> = a.to_vec();
    trim_zeros(&mut r);
    let mut scale_steps = a.len() as i64 - b.len() as i64 + 1;
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(&lcb);
        }
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = r[idx].sub(&lead.mul(bc));
        }
        trim_zeros(&mut r);
        scale_steps -= 1;
    }
    for c in r.iter_mut() {
        for _ in 0..scale_steps {
            *c = c.mul(&lcb);
        }
    }
    r
}

/// Squarefree part: `(squarefree, is_squarefree)` with
/// `is_squarefree <=> gcd(f, df/dx_1, ..., df/dx_n)` constant.
pub fn squarefree_part(f: &MultiPoly) -> Result<(MultiPoly, bool), AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::IdenticallyZero);
    }
    let mut rep = MultiPoly::zero(f.vars().to_vec());
    for v in 0..f.num_vars() {
        rep = gcd_inner(&rep, &f.derivative(v));
    }
    rep = gcd_inner(f, &rep).normalized();
    let is_squarefree = rep.is_constant();
    let mut sf = f.clone();
    if !is_squarefree {
        sf = sf.exact_div(&rep).expect("repeated part divides f");
    }
    Ok((sf.normalized(), is_squarefree))
}

/// Largest `k` with `p^k | f`, by repeated exact division.
pub fn factor_multiplicity(f: &MultiPoly, p: &MultiPoly) -> Result<Multiplicity, AlgebraError> {
    f.check_same_vars(p)?;
    if p.is_constant() {
        return Err(AlgebraError::InvalidDivisor);
    }
    if f.is_zero() {
        return Ok(Multiplicity::Infinite);
    }
    let mut k = 0u32;
    let mut rem = f.clone();
    while let Some(q) = rem.exact_div(p) {
        k += 1;
        rem = q;
    }
    Ok(Multiplicity::Finite(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn xyz() -> Vec<String> {
        vars(&["x", "y", "z"])
    }

    fn p(src: &[(i64, [u32; 3])]) -> MultiPoly {
        MultiPoly::from_terms(xyz(), src.iter().map(|&(c, e)| (e.to_vec(), rat(c))))
    }

    #[test]
    fn arithmetic_and_display() {
        let f = p(&[(1, [2, 0, 0]), (-1, [0, 2, 0])]); // x^2 - y^2
        let g = p(&[(1, [1, 0, 0]), (1, [0, 1, 0])]); // x + y
        let h = p(&[(1, [1, 0, 0]), (-1, [0, 1, 0])]); // x - y
        assert_eq!(g.mul(&h), f);
        assert_eq!(f.exact_div(&g).unwrap(), h);
        assert!(f.exact_div(&p(&[(1, [0, 0, 1])])).is_none());
        assert_eq!(format!("{}", f), "x^2 - y^2");
        assert_eq!(f.homogeneous_degree(), Some(2));
    }

    #[test]
    fn determinant_identity() {
        let one = MultiPoly::one(xyz());
        let zero = MultiPoly::zero(xyz());
        let m: Vec<Vec<MultiPoly>> = (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| if i == j { one.clone() } else { zero.clone() })
                    .collect()
            })
            .collect();
        assert_eq!(det_poly_matrix(&m).unwrap(), one);
    }

    #[test]
    fn determinant_rejects_non_square() {
        let m = vec![vec![MultiPoly::one(xyz())], vec![]];
        assert!(matches!(
            det_poly_matrix(&m),
            Err(AlgebraError::NonSquareMatrix { .. })
        ));
    }

    #[test]
    fn gcd_basics() {
        let f = p(&[(1, [0, 3, 0])]); // y^3
        let g = p(&[(1, [1, 2, 1]), (-1, [0, 4, 0])]); // y^2 (xz - y^2)
        let d = multivariate_gcd(&f, &g).unwrap();
        assert_eq!(d, p(&[(1, [0, 2, 0])])); // y^2

        let f = p(&[(2, [2, 0, 0]), (4, [1, 1, 0])]);
        assert_eq!(multivariate_gcd(&f, &f).unwrap(), f.normalized());
        assert_eq!(
            multivariate_gcd(&f, &MultiPoly::zero(xyz())).unwrap(),
            f.normalized()
        );
    }

    #[test]
    fn gcd_with_common_factor() {
        let h = p(&[(1, [1, 0, 0]), (2, [0, 1, 0]), (1, [0, 0, 1])]);
        let f = p(&[(1, [1, 0, 0]), (-1, [0, 1, 0])]).mul(&h);
        let g = p(&[(3, [0, 1, 0]), (1, [0, 0, 1])]).mul(&h);
        let d = multivariate_gcd(&f, &g).unwrap();
        assert_eq!(d, h.normalized());
    }

    #[test]
    fn gcd_of_coprime_quadratics() {
        let f = p(&[(1, [2, 0, 0]), (1, [0, 1, 1])]); // x^2 + yz
        let g = p(&[(1, [0, 2, 0]), (3, [1, 0, 1])]); // y^2 + 3xz
        let d = multivariate_gcd(&f, &g).unwrap();
        assert!(d.is_constant());
    }

    #[test]
    fn squarefree_cases() {
        // xy(x+z): squarefree with three distinct factors
        let f = p(&[(1, [2, 1, 0]), (1, [1, 1, 1])]);
        let (sf, is_sf) = squarefree_part(&f).unwrap();
        assert!(is_sf);
        assert_eq!(sf, f.normalized());

        // 2 y^3 (xz - y^2)
        let f = p(&[(2, [1, 3, 1]), (-2, [0, 5, 0])]);
        let (sf, is_sf) = squarefree_part(&f).unwrap();
        assert!(!is_sf);
        let expected = p(&[(1, [1, 1, 1]), (-1, [0, 3, 0])]); // y(xz - y^2)
        assert!(sf.proportional_to(&expected));

        assert_eq!(
            squarefree_part(&MultiPoly::zero(xyz())),
            Err(AlgebraError::IdenticallyZero)
        );
    }

    #[test]
    fn multiplicity_cases() {
        let f = p(&[(1, [1, 3, 1]), (-1, [0, 5, 0])]); // y^3 (xz - y^2)
        let y = p(&[(1, [0, 1, 0])]);
        let q = p(&[(1, [1, 0, 1]), (-1, [0, 2, 0])]);
        assert_eq!(factor_multiplicity(&f, &y).unwrap(), Multiplicity::Finite(3));
        assert_eq!(factor_multiplicity(&q, &q).unwrap(), Multiplicity::Finite(1));
        assert_eq!(
            factor_multiplicity(&MultiPoly::zero(xyz()), &y).unwrap(),
            Multiplicity::Infinite
        );
        assert_eq!(
            factor_multiplicity(&f, &MultiPoly::one(xyz())),
            Err(AlgebraError::InvalidDivisor)
        );
    }

    #[test]
    fn content_and_normalization() {
        let f = p(&[(-2, [2, 0, 0]), (-4, [0, 1, 0])]);
        assert_eq!(f.content(), rat(2));
        let n = f.normalized();
        assert_eq!(n, p(&[(1, [2, 0, 0]), (2, [0, 1, 0])]));
        let g = f.scale(&ratio(1, 3));
        assert!(g.proportional_to(&f));
    }
}
