//! Hilbert-Mumford weight calculus for nets of quadrics: the mu function,
//! the twelve-type torus scan, the state-polytope criterion, stabilizer
//! detection, and one-parameter limits.
//!
//! Conventions. `mu(net, rho)` is the maximum rho-weight of a nonvanishing
//! Plücker coordinate; the net is rho-semi-stable iff `mu >= 0` and
//! rho-stable iff `mu > 0`. An unstable verdict carries the destabilizing
//! subgroup that is worst after normalizing by the Euclidean length of the
//! weight vector (so certificates of different magnitudes compare fairly),
//! and `worst_mu` is that subgroup's raw integer weight. Semi-stable
//! verdicts are refined into stable vs strictly-semi-stable by exact
//! state-polytope membership: the barycenter lying on the boundary of the
//! support polytope is equivalent to some torus subgroup having weight zero,
//! and the supporting hyperplane provides that subgroup as certificate.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::monomial::{Monomial2, NUM_MONOMIALS, NUM_VARS};
use crate::net::{rref_under_order, Net};
use crate::par;
use crate::quadric::QuadraticForm;
use crate::rational::{ratio, Rat};
use crate::simplex::{solve, LpOutcome, StandardLp};
use crate::subgroup::{OneParamSubgroup, TWELVE_TYPES, TWELVE_TYPE_PERMUTATIONS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Stable,
    StrictlySemistable,
    Unstable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    TwelveType,
    Polytope,
}

/// Outcome of a torus-level stability check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub status: Status,
    pub worst_mu: i64,
    pub certificate: Option<OneParamSubgroup>,
    pub method: Method,
    pub probabilistic: bool,
}

impl StabilityVerdict {
    /// Index (1..=12) of the numerical type of the certificate, when the
    /// certificate is a permutation of one of the twelve types.
    pub fn certificate_type(&self) -> Option<usize> {
        let cert = self.certificate.as_ref()?;
        let mut sorted = cert.weights();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        TWELVE_TYPES.iter().position(|t| *t == sorted).map(|i| i + 1)
    }

    pub fn is_semi_stable(&self) -> bool {
        self.status != Status::Unstable
    }
}

/// Column order for the complete ordering `>_rho`: weight first, lex
/// tie-break (smaller index is lex-greater).
pub fn rho_column_order(rho: &OneParamSubgroup) -> [usize; NUM_MONOMIALS] {
    let mut idx: [usize; NUM_MONOMIALS] = std::array::from_fn(|i| i);
    idx.sort_by_key(|&i| (-rho.monomial_weight(Monomial2::from_index(i)), i));
    idx
}

/// Weights of the three initial monomials of the net with respect to
/// `>_rho`, non-increasing.
pub fn initial_weights(net: &Net, rho: &OneParamSubgroup) -> [i64; 3] {
    let order = rho_column_order(rho);
    let rows = rref_under_order(&net.coefficient_rows(), &order);
    debug_assert_eq!(rows.len(), 3);
    let mut weights = [0i64; 3];
    for (r, row) in rows.iter().enumerate() {
        let pivot = order
            .iter()
            .copied()
            .find(|&c| !row[c].is_zero())
            .expect("nonzero row has a pivot");
        weights[r] = rho.monomial_weight(Monomial2::from_index(pivot));
    }
    weights
}

/// Hilbert-Mumford weight: the maximum rho-weight over the Plücker support,
/// computed as the sum of the initial weights (greedy echelon pivots give a
/// maximum-weight support triple).
pub fn mu(net: &Net, rho: &OneParamSubgroup) -> i64 {
    initial_weights(net, rho).iter().sum()
}

/// Compares `mu1/sqrt(n1)` against `mu2/sqrt(n2)` exactly (n = squared
/// Euclidean norm of the subgroup). Smaller means more destabilizing.
fn cmp_normalized(mu1: i64, n1: i64, mu2: i64, n2: i64) -> Ordering {
    let s1 = mu1.signum();
    let s2 = mu2.signum();
    if s1 != s2 {
        return s1.cmp(&s2);
    }
    if s1 == 0 {
        return Ordering::Equal;
    }
    let lhs = (mu1 as i128) * (mu1 as i128) * (n2 as i128);
    let rhs = (mu2 as i128) * (mu2 as i128) * (n1 as i128);
    if s1 < 0 {
        rhs.cmp(&lhs)
    } else {
        lhs.cmp(&rhs)
    }
}

#[derive(Clone, Copy)]
struct ScanHit {
    mu: i64,
    norm_sq: i64,
    type_idx: usize,
    perm_idx: usize,
}

impl ScanHit {
    fn better_than(&self, other: &ScanHit) -> bool {
        match cmp_normalized(self.mu, self.norm_sq, other.mu, other.norm_sq) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => (self.type_idx, self.perm_idx) < (other.type_idx, other.perm_idx),
        }
    }
}

fn scan_worst(net: &Net, types: &[usize], parallel: bool) -> (ScanHit, OneParamSubgroup) {
    let jobs: Vec<(usize, usize, OneParamSubgroup)> = types
        .iter()
        .flat_map(|&t| {
            TWELVE_TYPE_PERMUTATIONS[t]
                .iter()
                .enumerate()
                .map(move |(p, rho)| (t, p, *rho))
        })
        .collect();
    let eval = |&(t, p, rho): &(usize, usize, OneParamSubgroup)| ScanHit {
        mu: mu(net, &rho),
        norm_sq: rho.norm_squared(),
        type_idx: t,
        perm_idx: p,
    };
    let hits = if parallel {
        par::map_collect(&jobs, eval)
    } else {
        par::map_collect_seq(&jobs, eval)
    };
    let best = hits
        .into_iter()
        .reduce(|a, b| if b.better_than(&a) { b } else { a })
        .expect("scan is nonempty");
    let rho = TWELVE_TYPE_PERMUTATIONS[best.type_idx][best.perm_idx];
    (best, rho)
}

/// Torus stability via the twelve-type scan. An unstable verdict is
/// conclusive for full instability; a semi-stable verdict is conclusive for
/// the diagonal torus of the given basis.
pub fn twelve_type_check(net: &Net) -> StabilityVerdict {
    twelve_type_check_inner(net, true)
}

/// Sequential variant with identical output, kept callable for benchmarks.
pub fn twelve_type_check_seq(net: &Net) -> StabilityVerdict {
    twelve_type_check_inner(net, false)
}

fn twelve_type_check_inner(net: &Net, parallel: bool) -> StabilityVerdict {
    let all_types: Vec<usize> = (0..12).collect();
    let (best, rho) = scan_worst(net, &all_types, parallel);
    if best.mu < 0 {
        return StabilityVerdict {
            status: Status::Unstable,
            worst_mu: best.mu,
            certificate: Some(rho),
            method: Method::TwelveType,
            probabilistic: false,
        };
    }
    if best.mu == 0 {
        return StabilityVerdict {
            status: Status::StrictlySemistable,
            worst_mu: 0,
            certificate: Some(rho),
            method: Method::TwelveType,
            probabilistic: false,
        };
    }
    // The scan proves semi-stability; strictness is decided by exact
    // relative-interior membership of the barycenter in the state polytope.
    match barycenter_position(net) {
        BarycenterPosition::Interior => StabilityVerdict {
            status: Status::Stable,
            worst_mu: best.mu,
            certificate: None,
            method: Method::TwelveType,
            probabilistic: false,
        },
        BarycenterPosition::Boundary(support_rho) => StabilityVerdict {
            status: Status::StrictlySemistable,
            worst_mu: 0,
            certificate: Some(support_rho),
            method: Method::TwelveType,
            probabilistic: false,
        },
        BarycenterPosition::Outside(_) => {
            unreachable!("scan reported semi-stable but the barycenter is outside the hull")
        }
    }
}

/// True iff a subgroup of a permutation of one of the listed types (0-based
/// indices) destabilizes the net. Short-circuits on the first witness.
pub fn unstable_under_types(net: &Net, types: &[usize]) -> bool {
    for &t in types {
        for rho in &TWELVE_TYPE_PERMUTATIONS[t] {
            if mu(net, rho) < 0 {
                return true;
            }
        }
    }
    false
}

/// The distinct support weight vectors: sums of the three exponent vectors
/// over each support triple. Every entry sums to 6.
pub fn support_weight_vectors(net: &Net) -> Vec<[i64; NUM_VARS]> {
    let mut vectors: Vec<[i64; NUM_VARS]> = net
        .plucker_support()
        .into_iter()
        .map(|triple| {
            let mut v = [0i64; NUM_VARS];
            for m in triple {
                for (i, e) in m.exponents().iter().enumerate() {
                    v[i] += *e as i64;
                }
            }
            v
        })
        .collect();
    vectors.sort_unstable();
    vectors.dedup();
    vectors
}

pub enum BarycenterPosition {
    /// barycenter in the relative interior of the support polytope
    Interior,
    /// on the boundary; the supporting hyperplane as a weight-zero subgroup
    Boundary(OneParamSubgroup),
    /// outside; a strictly separating destabilizing subgroup
    Outside(OneParamSubgroup),
}

/// Scales a rational functional to a primitive integer vector, preserving
/// direction, and projects onto the sum-zero hyperplane.
fn functional_to_subgroup(phi: &[Rat]) -> Option<OneParamSubgroup> {
    let sum: Rat = phi.iter().sum();
    let shift = sum / ratio(NUM_VARS as i64, 1);
    let projected: Vec<Rat> = phi.iter().map(|x| x - &shift).collect();
    if projected.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::from(1);
    for x in &projected {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = projected.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    let weights: [i64; NUM_VARS] = std::array::from_fn(|i| {
        i64::try_from(&ints[i] / &gcd).expect("certificate weights fit in i64")
    });
    OneParamSubgroup::new(weights).ok()
}

/// A nonzero sum-zero integer functional taking one value on all the given
/// points, if the points fail to span the sum-6 hyperplane affinely.
fn functional_constant_on(points: &[[i64; NUM_VARS]]) -> Option<OneParamSubgroup> {
    let mut rows: Vec<Vec<Rat>> = points
        .iter()
        .skip(1)
        .map(|p| {
            (0..NUM_VARS)
                .map(|i| ratio(p[i] - points[0][i], 1))
                .collect()
        })
        .collect();
    rows.push(vec![ratio(1, 1); NUM_VARS]);
    let v = kernel_vector(&rows, NUM_VARS)?;
    functional_to_subgroup(&v)
}

/// A nonzero kernel vector of the row system, if one exists.
fn kernel_vector(rows: &[Vec<Rat>], ncols: usize) -> Option<Vec<Rat>> {
    let mut rows = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for c in 0..ncols {
            rows[rank][c] = &rows[rank][c] / &lead;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let delta = &rows[rank][c] * &factor;
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    let free_col = (0..ncols).find(|c| !pivot_cols.contains(c))?;
    let mut v = vec![Rat::zero(); ncols];
    v[free_col] = ratio(1, 1);
    for (row, &col) in pivot_cols.iter().enumerate() {
        v[col] = -rows[row][free_col].clone();
    }
    Some(v)
}

/// Exact position of the barycenter `(6/5,...,6/5)` relative to the convex
/// hull of the support weight vectors.
pub fn barycenter_position(net: &Net) -> BarycenterPosition {
    let points = support_weight_vectors(net);
    let k = points.len();
    let barycenter: Vec<Rat> = (0..NUM_VARS).map(|_| ratio(6, 5)).collect();

    // feasibility: lambda >= 0, sum lambda = 1, sum lambda_j p_j = barycenter
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(NUM_VARS + 1);
    for i in 0..NUM_VARS {
        a.push(points.iter().map(|p| ratio(p[i], 1)).collect());
    }
    a.push(vec![ratio(1, 1); k]);
    let mut b = barycenter.clone();
    b.push(ratio(1, 1));
    let feasibility = StandardLp {
        a: a.clone(),
        b: b.clone(),
        c: vec![Rat::zero(); k],
    };
    match solve(&feasibility) {
        LpOutcome::Infeasible { farkas } => {
            // farkas: y.col >= 0 for every support column, y.b < 0; the
            // projected negation weights every support vector negatively
            let phi: Vec<Rat> = farkas[..NUM_VARS].iter().map(|v| -v.clone()).collect();
            let rho = functional_to_subgroup(&phi)
                .expect("separating functional is nonzero after projection");
            let worst = points
                .iter()
                .map(|p| {
                    p.iter()
                        .zip(rho.weights())
                        .map(|(x, w)| x * w)
                        .sum::<i64>()
                })
                .max()
                .expect("support is nonempty");
            assert!(worst < 0, "separating certificate must destabilize");
            BarycenterPosition::Outside(rho)
        }
        LpOutcome::Optimal { .. } => {
            // Stability needs the barycenter interior to the hull *within the
            // sum-6 hyperplane*. A support polytope of affine dimension < 4
            // admits a sum-zero functional constant on it, hence of weight
            // zero on the net.
            if let Some(rho) = functional_constant_on(&points) {
                debug_assert_eq!(mu(net, &rho), 0);
                return BarycenterPosition::Boundary(rho);
            }
            // full-dimensional hull: relative interior via max t with
            // lambda_j >= t; variables (t, s_1..s_k), lambda = t*1 + s
            let mut a2: Vec<Vec<Rat>> = Vec::with_capacity(NUM_VARS + 1);
            for i in 0..NUM_VARS {
                let mut row = Vec::with_capacity(k + 1);
                row.push(ratio(points.iter().map(|p| p[i]).sum(), 1));
                row.extend(points.iter().map(|p| ratio(p[i], 1)));
                a2.push(row);
            }
            let mut sum_row = Vec::with_capacity(k + 1);
            sum_row.push(ratio(k as i64, 1));
            sum_row.extend(std::iter::repeat(ratio(1, 1)).take(k));
            a2.push(sum_row);
            let mut c2 = vec![Rat::zero(); k + 1];
            c2[0] = ratio(1, 1);
            let relint = StandardLp { a: a2, b, c: c2 };
            match solve(&relint) {
                LpOutcome::Optimal { value, dual, .. } => {
                    if value.is_positive() {
                        BarycenterPosition::Interior
                    } else {
                        // supporting hyperplane from the dual of the
                        // equality constraints
                        let phi: Vec<Rat> = dual[..NUM_VARS].iter().map(|v| -v.clone()).collect();
                        let rho = functional_to_subgroup(&phi)
                            .expect("supporting functional is nonzero after projection");
                        let vals: Vec<i64> = points
                            .iter()
                            .map(|p| {
                                p.iter()
                                    .zip(rho.weights())
                                    .map(|(x, w)| x * w)
                                    .sum::<i64>()
                            })
                            .collect();
                        let max = *vals.iter().max().expect("support nonempty");
                        // the functional supports the polytope at the barycenter
                        assert_eq!(max, 0, "supporting functional must have weight zero");
                        BarycenterPosition::Boundary(rho)
                    }
                }
                _ => unreachable!("relint program is feasible (t=0) and bounded (t<=1/k)"),
            }
        }
        LpOutcome::Unbounded => unreachable!("feasibility program has zero objective"),
    }
}

/// Torus stability via exact state-polytope membership. Semi-stable iff the
/// barycenter weight lies in the convex hull of the support weight vectors;
/// stable iff it lies in the relative interior. For stable verdicts no
/// single subgroup is distinguished, and `worst_mu` is reported as 1.
pub fn state_polytope_check(net: &Net) -> StabilityVerdict {
    match barycenter_position(net) {
        BarycenterPosition::Outside(rho) => StabilityVerdict {
            status: Status::Unstable,
            worst_mu: mu(net, &rho),
            certificate: Some(rho),
            method: Method::Polytope,
            probabilistic: false,
        },
        BarycenterPosition::Boundary(rho) => StabilityVerdict {
            status: Status::StrictlySemistable,
            worst_mu: 0,
            certificate: Some(rho),
            method: Method::Polytope,
            probabilistic: false,
        },
        BarycenterPosition::Interior => StabilityVerdict {
            status: Status::Stable,
            worst_mu: 1,
            certificate: None,
            method: Method::Polytope,
            probabilistic: false,
        },
    }
}

/// True iff the net is fixed by `rho`, i.e. its row space is spanned by
/// rho-weight-homogeneous quadrics.
pub fn stabilizing_subgroup_check(net: &Net, rho: &OneParamSubgroup) -> bool {
    for q in net.normalized_basis().basis() {
        for component in weight_components(q, rho) {
            if !net.contains(&component) {
                return false;
            }
        }
    }
    true
}

/// Splits a form into its rho-weight-homogeneous components.
fn weight_components(q: &QuadraticForm, rho: &OneParamSubgroup) -> Vec<QuadraticForm> {
    let mut by_weight: std::collections::BTreeMap<i64, QuadraticForm> = Default::default();
    for (m, c) in q.monomials() {
        let w = rho.monomial_weight(m);
        by_weight
            .entry(w)
            .or_insert_with(QuadraticForm::zero)
            .coeffs_mut()[m.index()] = c.clone();
    }
    by_weight.into_values().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitDirection {
    ToZero,
    ToInfinity,
}

/// Flat limit of the net under the subgroup action. For `ToInfinity` the
/// basis is echelonized under `>_rho` and each row keeps only its terms of
/// maximal rho-weight; `ToZero` is the same computation for the negated
/// subgroup. The result is fixed by `rho` and the operation is idempotent.
pub fn one_param_limit(net: &Net, rho: &OneParamSubgroup, direction: LimitDirection) -> Net {
    let effective = match direction {
        LimitDirection::ToInfinity => *rho,
        LimitDirection::ToZero => rho.negated(),
    };
    let order = rho_column_order(&effective);
    let rows = rref_under_order(&net.coefficient_rows(), &order);
    let forms: Vec<QuadraticForm> = rows
        .iter()
        .map(|row| {
            let max_weight = (0..NUM_MONOMIALS)
                .filter(|&i| !row[i].is_zero())
                .map(|i| effective.monomial_weight(Monomial2::from_index(i)))
                .max()
                .expect("echelon rows are nonzero");
            let mut q = QuadraticForm::zero();
            for i in 0..NUM_MONOMIALS {
                if !row[i].is_zero()
                    && effective.monomial_weight(Monomial2::from_index(i)) == max_weight
                {
                    q.coeffs_mut()[i] = row[i].clone();
                }
            }
            q
        })
        .collect();
    Net::new([forms[0].clone(), forms[1].clone(), forms[2].clone()])
        .expect("echelon pivots survive, the limit has rank 3")
        .normalized_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::net_from_named;
    use crate::subgroup::twelve_type;

    fn scroll() -> Net {
        net_from_named(
            &[(1, "ad"), (-1, "bc")],
            &[(1, "ae"), (-1, "bd")],
            &[(1, "ce"), (-1, "d^2")],
        )
    }

    fn triple_conic() -> Net {
        net_from_named(
            &[(1, "ad"), (-1, "bc")],
            &[(1, "ae"), (1, "bd"), (-1, "c^2")],
            &[(1, "be"), (-1, "cd")],
        )
    }

    fn rho(w: [i64; 5]) -> OneParamSubgroup {
        OneParamSubgroup::new(w).unwrap()
    }

    #[test]
    fn initial_weights_examples() {
        // the scroll generators are rho3-homogeneous of weights 1, 1, -4
        assert_eq!(initial_weights(&scroll(), &twelve_type(3)), [1, 1, -4]);
        // triple conic under its stabilizer direction
        assert_eq!(
            initial_weights(&triple_conic(), &rho([2, 1, 0, -1, -2])),
            [1, 0, -1]
        );
        // monomial net under rho4
        let monomials = net_from_named(&[(1, "a^2")], &[(1, "b^2")], &[(1, "c^2")]);
        assert_eq!(initial_weights(&monomials, &twelve_type(4)), [8, -2, -2]);
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(&scroll(), &twelve_type(3)), -2);
        assert_eq!(mu(&triple_conic(), &rho([2, 1, 0, -1, -2])), 0);
        // linearity in the subgroup
        let r = rho([2, 1, 0, -1, -2]);
        assert_eq!(
            mu(&scroll(), &r.scaled(2).unwrap()),
            2 * mu(&scroll(), &r)
        );
    }

    #[test]
    fn mu_equals_max_over_support() {
        // oracle: brute-force maximum over the Plücker support
        let nets = [scroll(), triple_conic()];
        let rhos = [twelve_type(3), twelve_type(9), rho([2, 1, 0, -1, -2])];
        for net in &nets {
            for r in &rhos {
                let brute = net
                    .plucker_support()
                    .iter()
                    .map(|t| t.iter().map(|&m| r.monomial_weight(m)).sum::<i64>())
                    .max()
                    .unwrap();
                assert_eq!(mu(net, r), brute);
            }
        }
    }

    #[test]
    fn scroll_is_unstable_with_type_3_certificate() {
        let verdict = twelve_type_check(&scroll());
        assert_eq!(verdict.status, Status::Unstable);
        assert_eq!(verdict.worst_mu, -2);
        assert_eq!(verdict.certificate_type(), Some(3));
        assert_eq!(verdict.certificate.unwrap(), twelve_type(3));
    }

    #[test]
    fn triple_conic_is_strictly_semistable() {
        let verdict = twelve_type_check(&triple_conic());
        assert_eq!(verdict.status, Status::StrictlySemistable);
        assert_eq!(verdict.worst_mu, 0);
        let cert = verdict.certificate.unwrap();
        assert_eq!(mu(&triple_conic(), &cert), 0);
    }

    #[test]
    fn monomial_net_is_unstable_both_ways() {
        let net = net_from_named(&[(1, "a^2")], &[(1, "b^2")], &[(1, "c^2")]);
        let twelve = twelve_type_check(&net);
        assert_eq!(twelve.status, Status::Unstable);
        let polytope = state_polytope_check(&net);
        assert_eq!(polytope.status, Status::Unstable);
        let cert = polytope.certificate.unwrap();
        assert!(mu(&net, &cert) < 0);
    }

    #[test]
    fn contained_in_de_ideal_is_unstable() {
        // every support triple has negative rho2-weight
        let net = net_from_named(&[(1, "ad")], &[(1, "ae")], &[(1, "be")]);
        let rho2 = twelve_type(2);
        assert!(mu(&net, &rho2) <= -3);
        let verdict = twelve_type_check(&net);
        assert_eq!(verdict.status, Status::Unstable);
        let polytope = state_polytope_check(&net);
        assert_eq!(polytope.status, Status::Unstable);
    }

    #[test]
    fn polytope_agrees_on_named_nets() {
        for (net, expected) in [
            (scroll(), Status::Unstable),
            (triple_conic(), Status::StrictlySemistable),
        ] {
            let verdict = state_polytope_check(&net);
            assert_eq!(verdict.status, expected);
        }
    }

    #[test]
    fn generic_net_is_stable() {
        let net = net_from_named(
            &[(1, "a^2"), (1, "bd"), (2, "ce"), (-1, "e^2")],
            &[(1, "b^2"), (-1, "ae"), (3, "cd")],
            &[(1, "c^2"), (1, "ab"), (-2, "de"), (1, "d^2")],
        );
        let twelve = twelve_type_check(&net);
        let polytope = state_polytope_check(&net);
        assert_eq!(twelve.status, Status::Stable);
        assert_eq!(polytope.status, Status::Stable);
        assert!(twelve.worst_mu > 0);
    }

    #[test]
    fn stabilizer_checks() {
        let ribbon = net_from_named(
            &[(1, "ac"), (-1, "b^2")],
            &[(1, "ae"), (-2, "bd"), (1, "c^2")],
            &[(1, "ce"), (-1, "d^2")],
        );
        assert!(stabilizing_subgroup_check(&ribbon, &rho([2, 1, 0, -1, -2])));
        let dtc = net_from_named(
            &[(1, "ad"), (-1, "b^2")],
            &[(1, "ae"), (-1, "bd"), (1, "c^2")],
            &[(1, "be"), (-1, "d^2")],
        );
        assert!(stabilizing_subgroup_check(&dtc, &rho([3, 1, 0, -1, -3])));
        // a generic net admits no diagonal stabilizer
        let generic = net_from_named(
            &[(1, "a^2"), (1, "bd"), (2, "ce")],
            &[(1, "b^2"), (-1, "ae"), (3, "cd")],
            &[(1, "c^2"), (1, "ab"), (-2, "de")],
        );
        assert!(!stabilizing_subgroup_check(&generic, &rho([2, 1, 0, -1, -2])));
    }

    #[test]
    fn stabilizer_implies_antisymmetric_mu() {
        let ribbon = net_from_named(
            &[(1, "ac"), (-1, "b^2")],
            &[(1, "ae"), (-2, "bd"), (1, "c^2")],
            &[(1, "ce"), (-1, "d^2")],
        );
        let r = rho([2, 1, 0, -1, -2]);
        assert!(stabilizing_subgroup_check(&ribbon, &r));
        assert_eq!(mu(&ribbon, &r), -mu(&ribbon, &r.negated()));
    }

    #[test]
    fn limit_of_deformed_triple_conic() {
        // (ad-bc, ae-c^2+bd+d^2, be-cd) flows to the triple conic
        let deformed = net_from_named(
            &[(1, "ad"), (-1, "bc")],
            &[(1, "ae"), (-1, "c^2"), (1, "bd"), (1, "d^2")],
            &[(1, "be"), (-1, "cd")],
        );
        let r = rho([2, 1, 0, -1, -2]);
        let limit = one_param_limit(&deformed, &r, LimitDirection::ToInfinity);
        assert_eq!(limit, triple_conic());
        // a fixed net is its own limit
        assert_eq!(
            one_param_limit(&triple_conic(), &r, LimitDirection::ToInfinity),
            triple_conic()
        );
        // idempotence and rho-fixedness of the output
        let zero_limit = one_param_limit(&deformed, &r, LimitDirection::ToZero);
        assert_eq!(
            one_param_limit(&zero_limit, &r, LimitDirection::ToZero),
            zero_limit
        );
        assert!(stabilizing_subgroup_check(&zero_limit, &r));
        assert!(stabilizing_subgroup_check(&limit, &r));
    }

    #[test]
    fn parallel_and_sequential_scans_agree() {
        for net in [scroll(), triple_conic()] {
            assert_eq!(twelve_type_check(&net), twelve_type_check_seq(&net));
        }
    }
}
