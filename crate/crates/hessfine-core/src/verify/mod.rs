//! Term-by-term verification of the identity catalog.
//!
//! `run_identity` evaluates one identity's left side along each requested
//! route and its right side from the closed form, recording every order
//! checked. Bounds never turn into silent failures: a requested range is
//! clamped to what the identity and route support, and the clamp is
//! reported as a note.

pub mod bfile;
pub mod oeis;
pub mod registry;
pub mod report;

use std::time::Instant;

use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::hessenberg::{self, HTSpec};
use crate::numeric::{binomial, signed_power, Integer};
use crate::paths;
use crate::sequences::{self, SequenceId};
use crate::series;
use crate::trudi;

pub use registry::{all_identities, lookup, IdentitySpec, Route};
pub use report::{CheckRecord, VerificationReport};

use registry::{LhsKind, RelationKind, RhsKind};

fn entries_for(seq: SequenceId, first: usize, n: usize) -> Result<Vec<Integer>> {
    (first..first + n).map(|i| sequences::term(seq, i)).collect()
}

fn rhs_value(spec: &IdentitySpec, n: usize) -> Result<Integer> {
    match &spec.rhs {
        RhsKind::Seq {
            seq,
            shift,
            alternating,
            scale,
        } => {
            let idx = n as i64 + shift;
            debug_assert!(idx >= 0, "valid_from keeps the index in range");
            let mut v = sequences::term(*seq, idx as usize)?;
            if *alternating && n.is_multiple_of(2) {
                v = -v;
            }
            if *scale != 1 {
                v *= Integer::from(*scale);
            }
            Ok(v)
        }
        RhsKind::TwoPowTriangular { shift } => {
            let e = binomial((n + shift) as u64, 2)
                .to_u64()
                .expect("exponent fits");
            Ok(signed_power(&Integer::from(2), e))
        }
        RhsKind::One => Ok(Integer::one()),
        RhsKind::OneMinusN => Ok(Integer::from(1i64 - n as i64)),
        RhsKind::RelationRhs => unreachable!("relations compute both sides together"),
    }
}

fn relation_values(kind: RelationKind, n: usize) -> Result<(Integer, Integer)> {
    Ok(match kind {
        RelationKind::CatalanFine => (
            sequences::catalan(n),
            Integer::from(2) * sequences::fine(n + 1) + sequences::fine(n),
        ),
        RelationKind::SchroederCatalan => (
            sequences::schroeder_via_catalan(n),
            sequences::large_schroeder(n),
        ),
        RelationKind::FineConv => (sequences::fine_via_catalan(n), sequences::fine(n)),
        RelationKind::FineHalf => (
            sequences::fine_half_alternating(n)?,
            sequences::fine(n + 1),
        ),
        RelationKind::SmallIsHalf => (
            sequences::small_schroeder(n) * Integer::from(2),
            sequences::large_schroeder(n),
        ),
    })
}

fn push_record(
    records: &mut Vec<CheckRecord>,
    spec: &IdentitySpec,
    n: usize,
    lhs: Integer,
    route: Route,
) -> Result<()> {
    let rhs = rhs_value(spec, n)?;
    records.push(CheckRecord {
        n,
        pass: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        route: route.tag().into(),
    });
    Ok(())
}

fn run_route(
    spec: &IdentitySpec,
    route: Route,
    hi: usize,
    records: &mut Vec<CheckRecord>,
) -> Result<()> {
    let lo = spec.valid_from;
    match (&spec.lhs, route) {
        (LhsKind::Det { a0, seq, first }, Route::Recurrence) => {
            let ht = HTSpec::new(Integer::from(*a0), entries_for(*seq, *first, hi)?)?;
            let d = hessenberg::det_prefix(&ht);
            for (n, dn) in d.iter().enumerate().take(hi + 1).skip(lo) {
                push_record(records, spec, n, dn.clone(), route)?;
            }
        }
        (LhsKind::Det { a0, seq, first }, Route::Series) => {
            let entries = entries_for(*seq, *first, hi)?;
            let g = series::g_from_spec(&Integer::from(*a0), &entries);
            let f = series::f_from_g(&g)?;
            for n in lo..=hi {
                let c = f.coeff(n).expect("kernel order covers the range");
                assert!(c.denom().is_one(), "determinant coefficients are integers");
                push_record(records, spec, n, c.numer().clone(), route)?;
            }
        }
        (LhsKind::Det { a0, seq, first }, Route::TrudiPartition) => {
            let entries = entries_for(*seq, *first, hi)?;
            let a0 = Integer::from(*a0);
            for n in lo..=hi {
                let v = trudi::trudi_partition_sum(&a0, &entries[..n])?;
                push_record(records, spec, n, v, route)?;
            }
        }
        (LhsKind::Det { a0, seq, first }, Route::TrudiComposition) => {
            let entries = entries_for(*seq, *first, hi)?;
            let a0 = Integer::from(*a0);
            for n in lo..=hi {
                let v = trudi::trudi_composition_sum(&a0, &entries[..n])?;
                push_record(records, spec, n, v, route)?;
            }
        }
        (LhsKind::Det { .. }, Route::Enumeration) => {
            let ev = spec
                .enumeration
                .expect("registry consistency: enumeration route implies a family");
            for n in lo..=hi {
                let v = if ev.signed {
                    Integer::from(paths::family_signed_sum(ev.family, n)?)
                } else {
                    Integer::from(paths::family_cardinality(ev.family, n)?)
                };
                push_record(records, spec, n, v, route)?;
            }
        }
        (LhsKind::Hankel { seq, offset }, Route::Recurrence) => {
            let needed = 2 * hi.saturating_sub(1) + offset + 1;
            let values = sequences::prefix(*seq, needed)?.values;
            for n in lo..=hi {
                let v = hessenberg::hankel_det(&values, *offset, n)?;
                push_record(records, spec, n, v, route)?;
            }
        }
        (LhsKind::CatalanEntryDet, Route::Recurrence) => {
            for n in lo..=hi {
                push_record(records, spec, n, hessenberg::deutsch_fine(n)?, route)?;
            }
        }
        (LhsKind::Relation(kind), Route::Recurrence) => {
            for n in lo..=hi {
                let (lhs, rhs) = relation_values(*kind, n)?;
                records.push(CheckRecord {
                    n,
                    pass: lhs == rhs,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                    route: route.tag().into(),
                });
            }
        }
        (lhs, route) => {
            return Err(Error::Domain(format!(
                "route {} cannot evaluate {:?}",
                route.tag(),
                lhs
            )))
        }
    }
    Ok(())
}

/// The routes a plain run uses: everything the identity supports except
/// exhaustive enumeration, which is opted into explicitly.
pub fn default_routes(spec: &IdentitySpec) -> Vec<Route> {
    spec.routes
        .iter()
        .copied()
        .filter(|r| *r != Route::Enumeration)
        .collect()
}

/// Checks one identity along the given routes up to `max_n` (the
/// identity's own bound when absent). Routes the identity does not
/// support, and orders beyond what a route can reach, are skipped with a
/// note rather than failed.
pub fn run_identity(
    spec: &IdentitySpec,
    max_n: Option<usize>,
    routes: &[Route],
) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut notes = Vec::new();
    let mut records = Vec::new();
    let mut any_route = false;
    let mut seen = Vec::new();
    for &route in routes {
        if seen.contains(&route) {
            continue;
        }
        seen.push(route);
        if !spec.routes.contains(&route) {
            notes.push(format!("route {} does not apply", route.tag()));
            continue;
        }
        any_route = true;
        let mut hi = max_n.unwrap_or(spec.default_max_n);
        if hi > spec.default_max_n {
            notes.push(format!(
                "clamped to n <= {}, the bound for this identity",
                spec.default_max_n
            ));
            hi = spec.default_max_n;
        }
        if let Some(cap) = route.cap() {
            if hi > cap {
                notes.push(format!("route {} capped at n <= {cap}", route.tag()));
                hi = cap;
            }
        }
        if hi < spec.valid_from {
            notes.push(format!(
                "route {}: identity starts at n = {}, nothing to check",
                route.tag(),
                spec.valid_from
            ));
            continue;
        }
        run_route(spec, route, hi, &mut records)?;
    }
    if !any_route {
        return Err(Error::Domain(format!(
            "none of the requested routes apply to {}",
            spec.id
        )));
    }
    let pass = records.iter().all(|r| r.pass);
    Ok(VerificationReport {
        identity: spec.id.into(),
        records,
        pass,
        wall: Some(started.elapsed()),
        notes,
    })
}

/// Runs every identity in the catalog. `routes`, when given, is
/// intersected with each identity's own routes; identities left with no
/// route are skipped.
pub fn run_all(max_n: Option<usize>, routes: Option<&[Route]>) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for spec in all_identities() {
        let selected: Vec<Route> = match routes {
            Some(req) => req
                .iter()
                .copied()
                .filter(|r| spec.routes.contains(r))
                .collect(),
            None => default_routes(spec),
        };
        if selected.is_empty() {
            continue;
        }
        reports.push(run_identity(spec, max_n, &selected)?);
    }
    Ok(reports)
}
