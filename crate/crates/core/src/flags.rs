//! Linear-algebra instability predicates relative to the distinguished flag
//! of a coordinate basis: the point O = [1:0:0:0:0], the line L = {c=d=e=0},
//! the plane P = {d=e=0}, and the hyperplane H = {e=0}.
//!
//! Each predicate is a subspace-dimension computation in the 15-dimensional
//! quadric space; a true predicate certifies instability under the
//! corresponding one of the first four numerical types, aligned to the same
//! flag.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::monomial::{spans, NUM_VARS};
use crate::net::Net;
use crate::quadric::{matrix_rank, CoordinateChange, NetError};
use crate::rational::Rat;
use num_traits::Zero;

/// Outcome of the flag predicates of a net with respect to one flag.
/// Conditions 1a/1b certify type-1 instability, 2a/2b type 2, 3a/3b type 3,
/// and 4 type 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagReport {
    /// a pencil of the net consists of quadrics containing H
    pub cond_1a: bool,
    /// the net contains the double hyperplane e^2
    pub cond_1b: bool,
    /// every quadric of the net contains P
    pub cond_2a: bool,
    /// a pencil contains P and a member of it is singular along P
    pub cond_2b: bool,
    /// the net contains L and some member is singular along L
    pub cond_3a: bool,
    /// a pencil of the net is singular along L
    pub cond_3b: bool,
    /// O is a base point and a pencil of the net is singular at O
    pub cond_4: bool,
    /// the type certified by the strongest true condition, if any
    pub destabilizer_type: Option<u8>,
}

impl FlagReport {
    pub fn any(&self) -> bool {
        self.destabilizer_type.is_some()
    }
}

/// Dimension of the intersection of the net's row space with the span of
/// the given monomial indices.
fn intersection_dim(net: &Net, span: &[usize]) -> usize {
    // dim(net ∩ span) = 3 + |span| - rank(stacked basis)
    let mut rows = net.coefficient_rows();
    for &idx in span {
        let mut row = vec![Rat::zero(); crate::monomial::NUM_MONOMIALS];
        row[idx] = crate::rational::rat(1);
        rows.push(row);
    }
    3 + span.len() - matrix_rank(rows)
}

fn contained_in(net: &Net, span: &[usize]) -> bool {
    intersection_dim(net, span) == 3
}

/// Evaluates the flag predicates after transporting the net by `g` (the
/// flag of the new coordinates).
pub fn flag_predicates(net: &Net, g: &CoordinateChange) -> Result<FlagReport, NetError> {
    let moved = net.apply_coordinate_change(g);
    Ok(flag_predicates_standard(&moved))
}

/// The predicates at the standard coordinate flag.
pub fn flag_predicates_standard(net: &Net) -> FlagReport {
    let cond_1a = intersection_dim(net, &spans::E_TIMES_V) >= 2;
    let cond_1b = intersection_dim(net, &spans::E_SQUARED) >= 1;
    let cond_2a = contained_in(net, &spans::DE_TIMES_V);
    let cond_2b =
        intersection_dim(net, &spans::DE_TIMES_V) >= 2 && intersection_dim(net, &spans::DE_SQUARED) >= 1;
    let cond_3a =
        contained_in(net, &spans::CDE_TIMES_V) && intersection_dim(net, &spans::CDE_SQUARED) >= 1;
    let cond_3b = intersection_dim(net, &spans::CDE_SQUARED) >= 2;
    let cond_4 =
        contained_in(net, &spans::NOT_A_SQUARED) && intersection_dim(net, &spans::A_FREE) >= 2;
    let destabilizer_type = if cond_1a || cond_1b {
        Some(1)
    } else if cond_2a || cond_2b {
        Some(2)
    } else if cond_3a || cond_3b {
        Some(3)
    } else if cond_4 {
        Some(4)
    } else {
        None
    };
    FlagReport {
        cond_1a,
        cond_1b,
        cond_2a,
        cond_2b,
        cond_3a,
        cond_3b,
        cond_4,
        destabilizer_type,
    }
}

/// Runs the predicates over all 120 coordinate-permutation flags; returns
/// the permutations (as variable images) whose flag certifies instability,
/// with their reports.
pub fn flag_scan(net: &Net) -> Vec<([usize; NUM_VARS], FlagReport)> {
    let perms: Vec<[usize; NUM_VARS]> = (0..NUM_VARS)
        .permutations(NUM_VARS)
        .map(|p| std::array::from_fn(|i| p[i]))
        .collect();
    crate::par::map_collect(&perms, |&perm| {
        let g = CoordinateChange::permutation(perm);
        (perm, flag_predicates_standard(&net.apply_coordinate_change(&g)))
    })
    .into_iter()
    .filter(|(_, report)| report.any())
    .collect()
}

/// The normalized-basis conditions: on the lex-normalized basis
/// `(Q1, Q2, Q3)`, each condition holding is necessary for semi-stability
/// under the corresponding type; `violated = Some(k)` certifies type-k
/// instability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedBasisReport {
    /// (i) Q3 not proportional to e^2
    pub cond_i: bool,
    /// (ii) the net is not inside (d,e), and either the pencil (Q2,Q3) is
    /// not inside (d,e) or Q3 is not in the span of d^2, de, e^2
    pub cond_ii: bool,
    /// (iii) the pencil (Q2,Q3) is not inside the c,d,e-monomial span, and
    /// either the net is not inside (c,d,e) or Q3 is not in that span
    pub cond_iii: bool,
    /// (iv) the initial monomial of Q1 is a^2, or those of Q1 and Q2 are
    /// both divisible by a
    pub cond_iv: bool,
    pub violated: Option<u8>,
}

pub fn normalized_basis_conditions(net: &Net) -> NormalizedBasisReport {
    let nb = net.normalized_basis();
    let [q1, q2, q3] = nb.basis();

    let in_span = |q: &crate::quadric::QuadraticForm, span: &[usize]| {
        q.coeffs()
            .iter()
            .enumerate()
            .all(|(i, c)| span.contains(&i) || c.is_zero())
    };
    let pencil_in_span = |qa: &crate::quadric::QuadraticForm,
                          qb: &crate::quadric::QuadraticForm,
                          span: &[usize]| in_span(qa, span) && in_span(qb, span);

    let cond_i = !in_span(q3, &spans::E_SQUARED);
    let net_in_de = in_span(q1, &spans::DE_TIMES_V)
        && in_span(q2, &spans::DE_TIMES_V)
        && in_span(q3, &spans::DE_TIMES_V);
    let cond_ii = !net_in_de
        && (!pencil_in_span(q2, q3, &spans::DE_TIMES_V) || !in_span(q3, &spans::DE_SQUARED));
    let net_in_cde = in_span(q1, &spans::CDE_TIMES_V)
        && in_span(q2, &spans::CDE_TIMES_V)
        && in_span(q3, &spans::CDE_TIMES_V);
    let cond_iii = !pencil_in_span(q2, q3, &spans::CDE_SQUARED)
        && (!net_in_cde || !in_span(q3, &spans::CDE_SQUARED));
    let in1 = q1.initial_lex().expect("net basis rows are nonzero");
    let in2 = q2.initial_lex().expect("net basis rows are nonzero");
    let cond_iv = in1.index() == 0
        || (spans::A_TIMES_V.contains(&in1.index()) && spans::A_TIMES_V.contains(&in2.index()));

    let violated = if !cond_i {
        Some(1)
    } else if !cond_ii {
        Some(2)
    } else if !cond_iii {
        Some(3)
    } else if !cond_iv {
        Some(4)
    } else {
        None
    };
    NormalizedBasisReport {
        cond_i,
        cond_ii,
        cond_iii,
        cond_iv,
        violated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::net_from_named;
    use crate::stability::mu;
    use crate::subgroup::twelve_type;

    #[test]
    fn pencil_containing_hyperplane() {
        // (ea, eb, ec): every generator is divisible by e
        let net = net_from_named(&[(1, "ae")], &[(1, "be")], &[(1, "ce")]);
        let report = flag_predicates_standard(&net);
        assert!(report.cond_1a);
        assert_eq!(report.destabilizer_type, Some(1));
        // soundness: the matching type destabilizes
        assert!(mu(&net, &twelve_type(1)) < 0);
    }

    #[test]
    fn scroll_triggers_condition_3a() {
        let scroll = net_from_named(
            &[(1, "ad"), (-1, "bc")],
            &[(1, "ae"), (-1, "bd")],
            &[(1, "ce"), (-1, "d^2")],
        );
        let report = flag_predicates_standard(&scroll);
        assert!(report.cond_3a);
        assert!(!report.cond_1a && !report.cond_1b && !report.cond_2a && !report.cond_2b);
        assert_eq!(report.destabilizer_type, Some(3));
        assert!(mu(&scroll, &twelve_type(3)) < 0);
    }

    #[test]
    fn generic_net_triggers_nothing() {
        let net = net_from_named(
            &[(1, "a^2"), (1, "bd"), (2, "ce")],
            &[(1, "b^2"), (-1, "ae"), (3, "cd")],
            &[(1, "c^2"), (1, "ab"), (-2, "de")],
        );
        let report = flag_predicates_standard(&net);
        assert!(!report.any());
        assert!(flag_scan(&net).is_empty());
    }

    #[test]
    fn constructed_cases_trigger_exactly_one_condition() {
        // net containing e^2: condition 1b
        let net = net_from_named(&[(1, "a^2"), (1, "bc")], &[(1, "bd")], &[(1, "e^2")]);
        let report = flag_predicates_standard(&net);
        assert!(report.cond_1b && !report.cond_1a);

        // net inside (d,e): condition 2a
        let net = net_from_named(&[(1, "ad")], &[(1, "be")], &[(1, "cd"), (1, "ce")]);
        let report = flag_predicates_standard(&net);
        assert!(report.cond_2a);

        // pencil singular along L: condition 3b
        let net = net_from_named(&[(1, "a^2"), (1, "be")], &[(1, "c^2"), (1, "de")], &[(1, "d^2")]);
        let report = flag_predicates_standard(&net);
        assert!(report.cond_3b && !report.cond_3a);

        // base point at O with a pencil singular there: condition 4
        let net = net_from_named(&[(1, "ab"), (1, "cd")], &[(1, "b^2"), (1, "ce")], &[(1, "d^2")]);
        let report = flag_predicates_standard(&net);
        assert!(report.cond_4);
        assert!(mu(&net, &twelve_type(4)) < 0);
    }

    #[test]
    fn flag_scan_finds_rotated_instability() {
        // the e-divisible net, but with the roles of a and e swapped: only
        // the permuted flag sees it
        let net = net_from_named(&[(1, "ae")], &[(1, "ab")], &[(1, "ac")]);
        let standard = flag_predicates_standard(&net);
        assert!(!standard.any());
        let hits = flag_scan(&net);
        assert!(!hits.is_empty());
    }

    #[test]
    fn obs_conditions_on_named_nets() {
        // Q3 = e^2 violates (i)
        let net = net_from_named(&[(1, "a^2")], &[(1, "bc")], &[(1, "e^2")]);
        let report = normalized_basis_conditions(&net);
        assert!(!report.cond_i);
        assert_eq!(report.violated, Some(1));

        // the triple conic satisfies all four
        let net = net_from_named(
            &[(1, "ad"), (-1, "bc")],
            &[(1, "ae"), (1, "bd"), (-1, "c^2")],
            &[(1, "be"), (-1, "cd")],
        );
        let report = normalized_basis_conditions(&net);
        assert!(report.cond_i && report.cond_ii && report.cond_iii && report.cond_iv);
        assert_eq!(report.violated, None);

        // (ad, ae, be) lies inside (d,e): violates (ii)
        let net = net_from_named(&[(1, "ad")], &[(1, "ae")], &[(1, "be")]);
        let report = normalized_basis_conditions(&net);
        assert!(!report.cond_ii);
        assert_eq!(report.violated, Some(2));
        assert!(mu(&net, &twelve_type(2)) < 0);
    }
}
