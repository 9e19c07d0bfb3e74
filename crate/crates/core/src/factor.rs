//! Factorization of binary forms of degree at most five over the rationals.
//!
//! The strategy is squarefree decomposition (Yun), then rational roots, then
//! exhaustive search for quadratic factors by interpolation through the
//! values at 0 and +-1. For degree at most five this splits completely: a
//! residual cubic without rational roots is irreducible, and a residual
//! quartic or quintic without rational roots or quadratic factors is too.
//! Divisor enumeration relies on trial-division factoring of the values,
//! which is exhaustive for the coefficient sizes this crate produces;
//! should a value resist factoring, the residual is conservatively labeled
//! irreducible of its degree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::MultiPoly;
use crate::rational::Rat;

/// A univariate integer polynomial, dense, ascending degree, no trailing
/// zero (unless the zero polynomial).
type ZPoly = Vec<BigInt>;

fn deg(p: &ZPoly) -> usize {
    p.len().saturating_sub(1)
}

fn trim(p: &mut ZPoly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn primitive(p: &ZPoly) -> ZPoly {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return p.clone();
    }
    let mut out: ZPoly = p.iter().map(|c| c / &g).collect();
    if out.last().map(|c| c.is_negative()).unwrap_or(false) {
        for c in out.iter_mut() {
            *c = -&*c;
        }
    }
    out
}

fn eval(p: &ZPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn derivative(p: &ZPoly) -> ZPoly {
    let mut out: ZPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut out);
    out
}

fn mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// Exact division over Q, then primitivized; `None` if not divisible.
fn exact_div(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    if b.is_empty() {
        return None;
    }
    let mut rem: Vec<Rat> = a.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let lead = Rat::from_integer(b.last().unwrap().clone());
    let db = deg(b);
    let mut quot = vec![Rat::zero(); a.len().saturating_sub(db)];
    loop {
        while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
            rem.pop();
        }
        if rem.len() < b.len() || rem.is_empty() {
            break;
        }
        let dr = rem.len() - 1;
        let q = rem.last().unwrap() / &lead;
        for (i, cb) in b.iter().enumerate() {
            let delta = &q * Rat::from_integer(cb.clone());
            rem[dr - db + i] = &rem[dr - db + i] - &delta;
        }
        quot[dr - db] = q;
        rem.pop();
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for c in &quot {
        lcm = lcm.lcm(c.denom());
    }
    let ints: ZPoly = quot
        .iter()
        .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    Some(primitive(&ints))
}

/// Univariate gcd over Q, primitive integer output.
fn gcd_z(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut f: Vec<Rat> = a.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let mut g: Vec<Rat> = b.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let trim_q = |v: &mut Vec<Rat>| {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
    };
    trim_q(&mut f);
    trim_q(&mut g);
    while !g.is_empty() {
        let dg = g.len() - 1;
        let lead = g.last().unwrap().clone();
        loop {
            trim_q(&mut f);
            if f.len() <= dg {
                break;
            }
            let df = f.len() - 1;
            let q = f.last().unwrap() / &lead;
            for (i, cg) in g.iter().enumerate() {
                let delta = &q * cg;
                f[df - dg + i] = &f[df - dg + i] - &delta;
            }
            f.pop();
        }
        std::mem::swap(&mut f, &mut g);
    }
    let ints: ZPoly = {
        let mut lcm = BigInt::one();
        for c in &f {
            lcm = lcm.lcm(c.denom());
        }
        f.iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect()
    };
    primitive(&ints)
}

/// Yun's squarefree decomposition: returns `(g_i, i)` with `f ~ prod g_i^i`,
/// each `g_i` squarefree and pairwise coprime; constants are skipped.
fn squarefree_decomposition(f: &ZPoly) -> Vec<(ZPoly, u32)> {
    if deg(f) == 0 {
        return Vec::new();
    }
    let fp = derivative(f);
    let a0 = gcd_z(f, &fp);
    if deg(&a0) == 0 {
        return vec![(primitive(f), 1)];
    }
    let mut out = Vec::new();
    let mut b = exact_div(f, &a0).expect("gcd divides");
    let mut c = exact_div(&fp, &a0).expect("gcd divides derivative");
    let mut i = 1u32;
    loop {
        // b and c carry independent scalings after primitivization, which
        // only perturbs contents, never factor supports
        let bp = derivative(&b);
        let n = c.len().max(bp.len());
        let mut d: ZPoly = (0..n)
            .map(|k| {
                let cv = c.get(k).cloned().unwrap_or_else(BigInt::zero);
                let bv = bp.get(k).cloned().unwrap_or_else(BigInt::zero);
                cv - bv
            })
            .collect();
        trim(&mut d);
        if deg(&b) == 0 {
            break;
        }
        let g = gcd_z(&b, &d);
        if deg(&g) > 0 {
            out.push((g.clone(), i));
        }
        b = exact_div(&b, &g).expect("squarefree step divides");
        c = exact_div(&d, &g).expect("squarefree step divides");
        i += 1;
    }
    out
}

/// All divisors of `n`, positive and negative, via trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.abs();
    let mut p = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &p * &p <= m && p <= bound {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) {
            BigInt::one()
        } else {
            BigInt::from(2)
        };
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    let negs: Vec<BigInt> = divs.iter().map(|d| -d).collect();
    divs.extend(negs);
    divs
}

/// Rational roots `p/q` of a primitive integer polynomial, as coprime pairs
/// with `q > 0`.
fn rational_roots(f: &ZPoly) -> Vec<(BigInt, BigInt)> {
    let mut roots = Vec::new();
    if f.len() < 2 {
        return roots;
    }
    let lead_divs: Vec<BigInt> = divisors(f.last().unwrap())
        .into_iter()
        .filter(|d| d.is_positive())
        .collect();
    let const_divs = divisors(&f[0]);
    let n = deg(f);
    for q in &lead_divs {
        for p in &const_divs {
            if p.gcd(q) != BigInt::one() {
                continue;
            }
            let mut acc = BigInt::zero();
            for (i, c) in f.iter().enumerate() {
                acc += c * p.pow(i as u32) * q.pow((n - i) as u32);
            }
            if acc.is_zero() {
                roots.push((p.clone(), q.clone()));
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Quadratic factor of a primitive squarefree integer polynomial with no
/// rational roots, by interpolation through divisor values at 0, 1, -1.
fn quadratic_factor(f: &ZPoly) -> Option<ZPoly> {
    if deg(f) < 4 {
        return None;
    }
    let two = BigInt::from(2);
    let f0 = eval(f, &BigInt::zero());
    let f1 = eval(f, &BigInt::one());
    let fm1 = eval(f, &BigInt::from(-1));
    debug_assert!(!f0.is_zero() && !f1.is_zero() && !fm1.is_zero());
    let lead = f.last().unwrap();
    for d0 in divisors(&f0) {
        for d1 in divisors(&f1) {
            for dm1 in divisors(&fm1) {
                // candidate g with g(0)=d0, g(1)=d1, g(-1)=dm1
                let num_c1 = &d1 - &dm1;
                let num_c2 = &d1 + &dm1 - &two * &d0;
                if !(&num_c1 % &two).is_zero() || !(&num_c2 % &two).is_zero() {
                    continue;
                }
                let c2 = num_c2 / &two;
                if c2.is_zero() || !(lead % &c2).is_zero() {
                    continue;
                }
                let c1 = num_c1 / &two;
                let g = primitive(&vec![d0.clone(), c1, c2]);
                if deg(&g) == 2 && exact_div(f, &g).is_some() {
                    return Some(g);
                }
            }
        }
    }
    None
}

/// Irreducible factorization of a primitive squarefree integer polynomial
/// of degree at most 5.
fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut rest = primitive(f);
    for (p, q) in rational_roots(&rest) {
        let lin = primitive(&vec![-p, q]);
        if let Some(quot) = exact_div(&rest, &lin) {
            out.push(lin);
            rest = quot;
        }
    }
    loop {
        match deg(&rest) {
            0 => break,
            1..=3 => {
                // no rational roots remain, so degree 2 and 3 are irreducible
                out.push(primitive(&rest));
                break;
            }
            _ => match quadratic_factor(&rest) {
                Some(g) => {
                    rest = exact_div(&rest, &g).expect("verified divisor");
                    out.push(g);
                }
                None => {
                    out.push(primitive(&rest));
                    break;
                }
            },
        }
    }
    out
}

/// Irreducible factorization over Q of a univariate integer polynomial of
/// degree at most 5: `(factor, multiplicity)` pairs, factors primitive with
/// positive leading coefficient; the content is dropped.
pub fn factor_univariate(f: &ZPoly) -> Vec<(ZPoly, u32)> {
    assert!(deg(f) <= 5, "factorization implemented for degree <= 5");
    let mut out: Vec<(ZPoly, u32)> = Vec::new();
    let mut f = primitive(f);
    let zeros = f.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        f.drain(..zeros);
        out.push((vec![BigInt::zero(), BigInt::one()], zeros as u32));
    }
    if deg(&f) == 0 {
        return out;
    }
    for (g, m) in squarefree_decomposition(&f) {
        for factor in factor_squarefree(&g) {
            out.push((factor, m));
        }
    }
    out
}

/// Irreducible factorization of a nonzero binary form (two variables,
/// degree <= 5): a power of the second variable plus the homogenizations of
/// the univariate factors in the first.
pub fn factor_binary_form(form: &MultiPoly) -> Vec<(MultiPoly, u32)> {
    assert_eq!(form.num_vars(), 2);
    assert!(!form.is_zero());
    let vars = form.vars().to_vec();
    let degree = form
        .homogeneous_degree()
        .expect("binary form must be homogeneous") as usize;

    // dense coefficients c_i of s^i t^(d-i)
    let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); degree + 1];
    let normalized = form.normalized();
    for (e, c) in normalized.terms() {
        debug_assert!(c.denom().is_one());
        coeffs[e[0] as usize] = c.numer().clone();
    }
    let mut out = Vec::new();
    let t_mult = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    if t_mult > 0 {
        coeffs.truncate(degree + 1 - t_mult);
        out.push((MultiPoly::var(vars.clone(), 1), t_mult as u32));
    }
    for (factor, mult) in factor_univariate(&coeffs) {
        let d = deg(&factor) as u32;
        let poly = MultiPoly::from_terms(
            vars.clone(),
            factor
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (vec![i as u32, d - i as u32], Rat::from_integer(c.clone()))),
        );
        out.push((poly.normalized(), mult));
    }
    out
}
