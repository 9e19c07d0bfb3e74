//! Named nets and pencils with their expected verdicts: the regression
//! backbone of the crate. Every entry's expectations are verified by
//! `catalog_verify_all`, which the acceptance suite runs in full.

use serde::Serialize;
use thiserror::Error;

use crate::discriminant::{
    classify_discriminant, discriminant_net, discriminant_pencil, xyz_vars, BinaryQuintic,
    QuinticClassification,
};
use crate::net::{net_from_named, pencil_from_named, Net, Pencil};
use crate::poly::{squarefree_part, MultiPoly};
use crate::stability::{
    mu, state_polytope_check, stabilizing_subgroup_check, twelve_type_check, Status,
};
use crate::subgroup::OneParamSubgroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry '{name}'; available: {available}")]
    UnknownName { name: String, available: String },
}

#[derive(Debug, Clone)]
pub enum CatalogObject {
    Net(Net),
    Pencil(Pencil),
}

/// Expected verdict data; only the populated fields are checked.
#[derive(Debug, Clone, Default)]
pub struct Expected {
    /// torus verdict of the twelve-type scan in the given basis
    pub status: Option<Status>,
    pub worst_mu: Option<i64>,
    /// numerical type of the destabilizing certificate
    pub certificate_type: Option<usize>,
    /// a diagonal subgroup fixing the net
    pub stabilizer: Option<[i64; 5]>,
    pub discriminant_class: Option<QuinticClassification>,
    /// the net discriminant up to a nonzero scalar, in x, y, z
    pub discriminant_proportional_to: Option<MultiPoly>,
    /// pencil discriminant vanishes identically
    pub wholly_singular: Option<bool>,
    /// pencil discriminant is nonzero with a repeated factor
    pub multiple_root: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub object: CatalogObject,
    pub expected: Expected,
    /// what the object is, geometrically
    pub note: &'static str,
}

fn ternary(src: &[(i64, [u32; 3])]) -> MultiPoly {
    MultiPoly::from_terms(
        xyz_vars(),
        src.iter()
            .map(|&(c, e)| (e.to_vec(), crate::rational::rat(c))),
    )
}

/// The full catalog.
pub fn catalog() -> Vec<CatalogEntry> {
    let y_xz_y2 = ternary(&[(1, [1, 3, 1]), (-1, [0, 5, 0])]); // y^3 (xz - y^2)
    let y_conic_sq = ternary(&[(1, [2, 1, 2]), (-2, [1, 3, 1]), (1, [0, 5, 0])]); // y (xz - y^2)^2

    vec![
        CatalogEntry {
            name: "balanced-ribbon",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ac"), (-1, "b^2")],
                &[(1, "ae"), (-2, "bd"), (1, "c^2")],
                &[(1, "ce"), (-1, "d^2")],
            )),
            expected: Expected {
                status: Some(Status::StrictlySemistable),
                worst_mu: Some(0),
                stabilizer: Some([2, 1, 0, -1, -2]),
                discriminant_class: Some(QuinticClassification::NonReduced),
                discriminant_proportional_to: Some(y_conic_sq.clone()),
                ..Default::default()
            },
            note: "double structure on an elliptic quartic lying on the projected Veronese",
        },
        CatalogEntry {
            name: "double-twisted-cubic",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ad"), (-1, "b^2")],
                &[(1, "ae"), (-1, "bd"), (1, "c^2")],
                &[(1, "be"), (-1, "d^2")],
            )),
            expected: Expected {
                status: Some(Status::StrictlySemistable),
                worst_mu: Some(0),
                stabilizer: Some([3, 1, 0, -1, -3]),
                discriminant_class: Some(QuinticClassification::NonReduced),
                discriminant_proportional_to: Some(y_conic_sq.clone()),
                ..Default::default()
            },
            note: "double twisted cubic meeting the residual conic in two points",
        },
        CatalogEntry {
            name: "triple-conic",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ad"), (-1, "bc")],
                &[(1, "ae"), (1, "bd"), (-1, "c^2")],
                &[(1, "be"), (-1, "cd")],
            )),
            expected: Expected {
                status: Some(Status::StrictlySemistable),
                worst_mu: Some(0),
                stabilizer: Some([2, 1, 0, -1, -2]),
                discriminant_class: Some(QuinticClassification::NonReduced),
                discriminant_proportional_to: Some(y_xz_y2),
                ..Default::default()
            },
            note: "triple conic with two lines; its plane quintic model is a triple line with a conic",
        },
        CatalogEntry {
            name: "double-lines",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ad")],
                &[(1, "ae"), (1, "bd"), (-1, "c^2")],
                &[(1, "be")],
            )),
            expected: Expected {
                status: Some(Status::StrictlySemistable),
                worst_mu: Some(0),
                stabilizer: Some([2, 1, 0, -1, -2]),
                discriminant_class: Some(QuinticClassification::NonReduced),
                discriminant_proportional_to: Some(y_conic_sq),
                ..Default::default()
            },
            note: "two double lines joined by two conics",
        },
        CatalogEntry {
            name: "dtc-family",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ad"), (-1, "bc")],
                // L = b + d, so L^2 = b^2 + 2bd + d^2
                &[(1, "ae"), (-1, "c^2"), (1, "b^2"), (2, "bd"), (1, "d^2")],
                &[(1, "be"), (-1, "cd")],
            )),
            expected: Expected {
                status: Some(Status::Stable),
                discriminant_class: Some(QuinticClassification::NonReduced),
                ..Default::default()
            },
            note: "double-twisted-cubic family member with the generic linear form b + d; \
                   torus-stable in this basis (the verdict is basis-relative, these curves \
                   are non-reduced)",
        },
        CatalogEntry {
            name: "double-conic-family",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ad"), (-1, "bc")],
                // L1 = b + e, L2 = c - d
                &[(1, "ae"), (-1, "c^2"), (1, "b^2"), (1, "be"), (1, "cd"), (-1, "d^2")],
                &[(1, "be"), (-1, "cd")],
            )),
            expected: Expected {
                status: Some(Status::Stable),
                discriminant_class: Some(QuinticClassification::NonReduced),
                ..Default::default()
            },
            note: "double conic meeting the residual rational normal quartic in three points \
                   (generic linear forms b + e and c - d)",
        },
        CatalogEntry {
            name: "trigonal-deformation",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ad"), (-1, "bc")],
                &[(1, "ae"), (-1, "c^2"), (1, "bd"), (1, "d^2")],
                &[(1, "be"), (-1, "cd")],
            )),
            expected: Expected {
                status: Some(Status::Stable),
                discriminant_class: Some(QuinticClassification::NonReduced),
                ..Default::default()
            },
            note: "deformed triple conic whose limit under (2,1,0,-1,-2), t to infinity, is \
                   the triple conic",
        },
        CatalogEntry {
            name: "smooth-scroll",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ad"), (-1, "bc")],
                &[(1, "ae"), (-1, "bd")],
                &[(1, "ce"), (-1, "d^2")],
            )),
            expected: Expected {
                status: Some(Status::Unstable),
                worst_mu: Some(-2),
                certificate_type: Some(3),
                discriminant_class: Some(QuinticClassification::IdenticallyZero),
                ..Default::default()
            },
            note: "the net of the smooth cubic scroll: a surface, not a curve",
        },
        CatalogEntry {
            name: "a5-quartic-pair",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ac"), (1, "b^2"), (1, "c^2"), (1, "ad"), (1, "be"), (-1, "de")],
                &[(1, "ad"), (1, "bc"), (1, "cd"), (-1, "e^2")],
                &[(1, "de"), (1, "d^2"), (1, "e^2")],
            )),
            expected: Expected {
                status: Some(Status::Unstable),
                certificate_type: Some(7),
                ..Default::default()
            },
            note: "two elliptic quartics meeting in an A5 singularity and a node",
        },
        CatalogEntry {
            name: "four-fold-point",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ad"), (1, "b^2"), (1, "bd"), (1, "c^2")],
                &[(1, "ae"), (1, "bd")],
                &[(1, "ce"), (1, "d^2")],
            )),
            expected: Expected {
                status: Some(Status::Unstable),
                certificate_type: Some(8),
                ..Default::default()
            },
            note: "planar 4-fold point with two lines as branches",
        },
        CatalogEntry {
            name: "d5-conjugate",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ad"), (-1, "b^2"), (-1, "c^2"), (-1, "cd")],
                &[(1, "ae"), (-1, "bc"), (-1, "c^2"), (-1, "de")],
                &[(1, "ce"), (-1, "d^2")],
            )),
            expected: Expected {
                status: Some(Status::Unstable),
                certificate_type: Some(11),
                ..Default::default()
            },
            note: "D5 singularity whose points above it are exchanged by the hyperelliptic \
                   involution of the normalization",
        },
        CatalogEntry {
            name: "a7-weierstrass",
            object: CatalogObject::Net(net_from_named(
                &[(1, "ac"), (1, "b^2"), (1, "ad"), (1, "ae"), (1, "c^2"), (1, "cd")],
                &[(1, "ae"), (1, "cd")],
                &[(1, "ce"), (1, "d^2")],
            )),
            expected: Expected {
                status: Some(Status::Unstable),
                certificate_type: Some(12),
                ..Default::default()
            },
            note: "conic meeting the residual genus-2 component in an A7 singularity at a \
                   Weierstrass point",
        },
        CatalogEntry {
            name: "plane-plus-scroll",
            object: CatalogObject::Pencil(pencil_from_named(
                &[(1, "ad"), (-1, "bc")],
                &[(1, "be"), (-1, "cd")],
            )),
            expected: Expected {
                wholly_singular: Some(false),
                multiple_root: Some(true),
                ..Default::default()
            },
            note: "pencil cutting out the union of a plane with a cubic scroll",
        },
        CatalogEntry {
            name: "rank-degenerate-pencil",
            object: CatalogObject::Pencil(pencil_from_named(
                &[(1, "ad"), (-1, "b^2")],
                &[(1, "be"), (-1, "cd")],
            )),
            expected: Expected {
                wholly_singular: Some(false),
                multiple_root: Some(true),
                ..Default::default()
            },
            note: "pencil whose rank-4 members have vertices tracing the line b = d = e = 0",
        },
        CatalogEntry {
            name: "veronese-pencil",
            object: CatalogObject::Pencil(pencil_from_named(
                &[(1, "ac"), (-1, "b^2")],
                &[(1, "ce"), (-1, "d^2")],
            )),
            expected: Expected {
                wholly_singular: Some(true),
                ..Default::default()
            },
            note: "pencil of the projected Veronese surface: every member is singular",
        },
    ]
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry, CatalogError> {
    let entries = catalog();
    entries
        .iter()
        .find(|e| e.name == name)
        .cloned()
        .ok_or_else(|| CatalogError::UnknownName {
            name: name.to_string(),
            available: entries
                .iter()
                .map(|e| e.name)
                .collect::<Vec<_>>()
                .join(", "),
        })
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryResult {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogReport {
    pub results: Vec<EntryResult>,
    pub all_passed: bool,
}

/// Runs every catalog entry through the stability checks, the discriminant
/// classifier, and the stabilizer test, comparing with the recorded
/// expectations.
pub fn catalog_verify_all() -> CatalogReport {
    let entries = catalog();
    let results = crate::par::map_collect(&entries, verify_entry);
    let all_passed = results.iter().all(|r| r.passed);
    CatalogReport {
        results,
        all_passed,
    }
}

pub fn verify_entry(entry: &CatalogEntry) -> EntryResult {
    let mut failures = Vec::new();
    let expected = &entry.expected;
    match &entry.object {
        CatalogObject::Net(net) => {
            let twelve = twelve_type_check(net);
            let polytope = state_polytope_check(net);
            if let Some(status) = expected.status {
                if twelve.status != status {
                    failures.push(format!(
                        "twelve-type status {:?}, expected {:?}",
                        twelve.status, status
                    ));
                }
                if polytope.status != status {
                    failures.push(format!(
                        "polytope status {:?}, expected {:?}",
                        polytope.status, status
                    ));
                }
            }
            if let Some(worst) = expected.worst_mu {
                if twelve.worst_mu != worst {
                    failures.push(format!(
                        "worst_mu {}, expected {}",
                        twelve.worst_mu, worst
                    ));
                }
            }
            if let Some(t) = expected.certificate_type {
                if twelve.certificate_type() != Some(t) {
                    failures.push(format!(
                        "certificate type {:?}, expected {}",
                        twelve.certificate_type(),
                        t
                    ));
                }
            }
            if let Some(weights) = expected.stabilizer {
                let rho = OneParamSubgroup::new(weights).expect("catalog stabilizers are valid");
                if !stabilizing_subgroup_check(net, &rho) {
                    failures.push(format!("expected stabilizer {rho:?} does not fix the net"));
                }
                if mu(net, &rho) != 0 {
                    failures.push("stabilizer should have weight zero".to_string());
                }
            }
            if let Some(class) = expected.discriminant_class {
                let got = classify_discriminant(net);
                if got != class {
                    failures.push(format!("discriminant {got:?}, expected {class:?}"));
                }
            }
            if let Some(shape) = &expected.discriminant_proportional_to {
                let disc = discriminant_net(net).0;
                if !disc.proportional_to(shape) {
                    failures.push(format!("discriminant {disc} not proportional to {shape}"));
                }
            }
        }
        CatalogObject::Pencil(pencil) => {
            let BinaryQuintic(disc) = discriminant_pencil(pencil);
            if let Some(singular) = expected.wholly_singular {
                if disc.is_zero() != singular {
                    failures.push(format!(
                        "wholly-singular {}, expected {}",
                        disc.is_zero(),
                        singular
                    ));
                }
            }
            if let Some(multiple) = expected.multiple_root {
                if disc.is_zero() {
                    failures.push("discriminant vanished, cannot test roots".to_string());
                } else {
                    let (_, squarefree) = squarefree_part(&disc).expect("nonzero");
                    if squarefree == multiple {
                        failures.push(format!(
                            "multiple-root {}, expected {}",
                            !squarefree, multiple
                        ));
                    }
                }
            }
        }
    }
    EntryResult {
        name: entry.name.to_string(),
        passed: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_by_name() {
        let entry = catalog_get("balanced-ribbon").unwrap();
        assert_eq!(entry.expected.stabilizer, Some([2, 1, 0, -1, -2]));
        let entry = catalog_get("triple-conic").unwrap();
        assert!(entry.expected.discriminant_proportional_to.is_some());
        let err = catalog_get("no-such-entry").unwrap_err();
        let CatalogError::UnknownName { available, .. } = err;
        assert!(available.contains("smooth-scroll"));
    }

    #[test]
    fn full_catalog_verifies() {
        let report = catalog_verify_all();
        for result in &report.results {
            assert!(result.passed, "{}: {:?}", result.name, result.failures);
        }
        assert!(report.all_passed);
    }

    #[test]
    fn corrupted_expectation_fails_only_itself() {
        let mut entries = catalog();
        entries[0].expected.worst_mu = Some(99);
        let results: Vec<EntryResult> = entries.iter().map(verify_entry).collect();
        assert!(!results[0].passed);
        assert!(results.iter().skip(1).all(|r| r.passed));
    }

    #[test]
    fn kempf_entries_have_zero_mu_stabilizers() {
        for name in [
            "balanced-ribbon",
            "double-twisted-cubic",
            "triple-conic",
            "double-lines",
        ] {
            let entry = catalog_get(name).unwrap();
            let CatalogObject::Net(net) = &entry.object else {
                panic!("{name} is a net");
            };
            let rho = OneParamSubgroup::new(entry.expected.stabilizer.unwrap()).unwrap();
            assert!(stabilizing_subgroup_check(net, &rho), "{name}");
            assert_eq!(mu(net, &rho), 0, "{name}");
            assert_eq!(mu(net, &rho.negated()), 0, "{name}");
        }
    }
}
