//! Structure at the degenerate parameter values: the nilpotent singleton
//! ideal and Brauer quotient at dp = 0, the singleton filtration of cell
//! modules with its Pieri-rule decomposition, the rescaling isomorphism at
//! d = 1, and the trace-ideal membership variants at d = dp = 1.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{
    ideal_membership, omega_x, presentation_relations, u_hat, Element, Relation,
};
use crate::cell::{
    act_on_cell_eval, brauer_delta_dim, cell_members, half_diagrams, CellDescriptor,
};
use crate::diagram::Diagram;
use crate::error::Error;
use crate::scalar::{parse_rational, Rational, Scalar};
use crate::symmetric::{horizontal_strip, partitions_of, IntPartition};

/// One layer of the singleton filtration of a cell: the diagrams whose
/// unprimed column carries exactly `l` singletons.
#[derive(Debug, Clone)]
pub struct FiltrationLayer {
    pub n: u32,
    pub k: u32,
    pub l: u32,
    pub basis: Vec<Diagram>,
}

/// The valid singleton counts n-k, n-k-2, ..., 1 or 0.
pub fn layer_values(n: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut l = n - k;
    loop {
        out.push(l);
        if l < 2 {
            break;
        }
        l -= 2;
    }
    out
}

/// Split a cell into its singleton-count layers.
pub fn filtration_layers(cell: &CellDescriptor) -> Vec<FiltrationLayer> {
    let n = cell.rank();
    let k = cell.k();
    layer_values(n, k)
        .into_iter()
        .map(|l| FiltrationLayer {
            n,
            k,
            l,
            basis: cell_members(cell)
                .into_iter()
                .filter(|d| {
                    cell.factor(d).map(|(h, _)| h.singleton_count() == l).unwrap_or(false)
                })
                .collect(),
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct NilpotencyReport {
    pub n: u32,
    pub ideal_closed: bool,
    /// I^{n+1} = 0
    pub vanishes_at_order: bool,
    /// I^n != 0
    pub bottom_nonzero: bool,
}

impl NilpotencyReport {
    pub fn ok(&self) -> bool {
        self.ideal_closed && self.vanishes_at_order && self.bottom_nonzero
    }
}

/// At dp = 0 each string-producing product vanishes. The span of all
/// diagrams with a singleton is then a two-sided ideal whose (n+1)-st
/// power vanishes while the n-th does not.
pub fn nilpotency_check(n: u32) -> Result<NilpotencyReport, Error> {
    if n > 3 {
        return Err(Error::BoundExceeded { n, bound: 3 });
    }
    let all = Diagram::enumerate(n, false)?;
    let ideal: Vec<Diagram> =
        all.iter().filter(|d| d.stats().defect > 0).cloned().collect();

    // two-sided closure: products with arbitrary diagrams stay in the span
    let mut ideal_closed = true;
    for d in &ideal {
        for g in &all {
            for r in [g.compose(d)?, d.compose(g)?] {
                if r.strings > 0 {
                    continue; // the product vanishes at dp = 0
                }
                if r.diagram.stats().defect == 0 {
                    ideal_closed = false;
                }
            }
        }
    }

    // power levels: diagrams spanning I^m, deduplicated
    let mut level: BTreeSet<Diagram> = ideal.iter().cloned().collect();
    let mut levels_nonempty = vec![!level.is_empty()];
    for _ in 1..=n {
        let mut next = BTreeSet::new();
        for x in &level {
            for y in &ideal {
                let r = x.compose(y)?;
                if r.strings == 0 {
                    next.insert(r.diagram);
                }
            }
        }
        levels_nonempty.push(!next.is_empty());
        level = next;
    }
    Ok(NilpotencyReport {
        n,
        ideal_closed,
        vanishes_at_order: !levels_nonempty[n as usize],
        bottom_nonzero: levels_nonempty[(n - 1) as usize],
    })
}

#[derive(Debug, Serialize)]
pub struct QuotientReport {
    pub n: u32,
    pub pairs_checked: usize,
    pub mismatches: Vec<String>,
}

/// At dp = 0 the quotient by the singleton ideal is the Brauer algebra
/// with the same loop parameter: products of Brauer diagrams straighten
/// with no strings and reduce to the Brauer structure constants.
pub fn quotient_iso_check(n: u32) -> Result<QuotientReport, Error> {
    if n > 4 {
        return Err(Error::BoundExceeded { n, bound: 4 });
    }
    let brauer = Diagram::enumerate(n, true)?;
    let mut mismatches = Vec::new();
    for a in &brauer {
        for b in &brauer {
            let r = a.compose(b)?;
            // in the quotient: drop singleton-bearing diagrams; the product
            // must already be a pure Brauer diagram with loop scalar only
            if r.strings != 0 || !r.diagram.is_brauer() {
                mismatches.push(format!("{a} * {b}"));
            }
        }
    }
    Ok(QuotientReport { n, pairs_checked: brauer.len() * brauer.len(), mismatches })
}

#[derive(Debug, Serialize)]
pub struct LayerReport {
    pub n: u32,
    pub lambda: String,
    pub l: u32,
    pub layer_dim: u128,
    pub brauer_side: u128,
    pub dims_match: bool,
    pub filtration_invariant: bool,
}

/// Decomposition of a filtration section: its dimension equals the sum of
/// Brauer Specht dimensions over the horizontal-strip shapes, and at
/// dp = 0 the at-least-l subspaces of the cell module are invariant.
pub fn theorem505_check(n: u32, lambda: &IntPartition, l: u32) -> Result<LayerReport, Error> {
    let k = lambda.weight();
    if k > n || !layer_values(n, k).contains(&l) {
        return Err(Error::InvalidPartition(format!(
            "invalid layer l = {l} for n = {n}, k = {k}"
        )));
    }
    let halves_with_l =
        half_diagrams(n, k, false).iter().filter(|h| h.singleton_count() == l).count() as u128;
    let layer_dim = halves_with_l * lambda.dimension();
    let brauer_side: u128 = partitions_of(k + l)
        .iter()
        .filter(|mu| horizontal_strip(lambda, mu, l))
        .map(|mu| brauer_delta_dim(n, mu))
        .sum();

    // filtration invariance at dp = 0, evaluated loop parameter
    let mut filtration_invariant = true;
    if n <= 3 {
        let delta = parse_rational("7/2").expect("literal");
        let dp0 = Rational::zero();
        let cell = CellDescriptor::canonical(n, k)?;
        let basis = cell_members(&cell);
        let sing_count = |d: &Diagram| {
            cell.factor(d).map(|(h, _)| h.singleton_count()).expect("basis diagram is in cell")
        };
        for g in Diagram::enumerate(n, false)? {
            let a = act_on_cell_eval(&Element::from_diagram(g), &cell, &delta, &dp0)?;
            for (c, dc) in basis.iter().enumerate() {
                for (r, dr) in basis.iter().enumerate() {
                    if a.at(r, c).is_zero() {
                        continue;
                    }
                    for threshold in layer_values(n, k) {
                        if sing_count(dc) >= threshold && sing_count(dr) < threshold {
                            filtration_invariant = false;
                        }
                    }
                }
            }
        }
    }
    Ok(LayerReport {
        n,
        lambda: lambda.to_string(),
        l,
        layer_dim,
        brauer_side,
        dims_match: layer_dim == brauer_side,
        filtration_invariant,
    })
}

#[derive(Debug, Serialize)]
pub struct RescaleReport {
    pub n: u32,
    pub relation_failures: Vec<String>,
    pub basis_pairs_checked: usize,
    pub basis_failures: Vec<String>,
}

impl RescaleReport {
    pub fn ok(&self) -> bool {
        self.relation_failures.is_empty() && self.basis_failures.is_empty()
    }
}

/// The rescaling map s -> s, p -> p, eps -> dp^-1 eps sends every defining
/// relation of the (1,1)-parameter algebra to a valid identity at (1, dp),
/// and the diagram-level map d -> dp^{-(singletons/2)} d intertwines the
/// multiplications. Verified with dp symbolic, hence at every nonzero dp.
pub fn rescale_iso_check(n: u32, full_basis: bool) -> Result<RescaleReport, Error> {
    if n > 3 {
        return Err(Error::BoundExceeded { n, bound: 3 });
    }
    // relation-level: evaluate each relation's scalar at the source
    // parameters (1,1); the rescaled word picks up dp^{-#eps}
    let one_one = (parse_rational("1").expect("literal"), parse_rational("1").expect("literal"));
    let mut relation_failures = Vec::new();
    for r in presentation_relations(n)? {
        let theta = |word: &[Diagram]| -> Result<Element, Error> {
            let mut acc = Element::one(n);
            for d in word {
                acc = acc.multiply(&Element::from_diagram(d.clone()))?;
            }
            let eps_count = Relation::eps_count(word, n) as i32;
            Ok(acc
                .set_delta_one()
                .scale(&Scalar::monomial(0, -eps_count, 1.into())))
        };
        let lhs = theta(&r.lhs)?;
        let source_scalar = r.rhs_scalar.evaluate(&one_one.0, &one_one.1)?;
        let scale = Scalar::monomial(
            0,
            0,
            crate::scalar::rational_to_int(&source_scalar).expect("relation scalars are 1 here"),
        );
        let rhs = theta(&r.rhs)?.scale(&scale);
        if lhs != rhs {
            relation_failures.push(r.name);
        }
    }

    // basis-level intertwiner: Phi(d) = dp^{-s(d)/2} d
    let mut basis_failures = Vec::new();
    let mut basis_pairs_checked = 0;
    if full_basis {
        let all = Diagram::enumerate(n, false)?;
        let phi = |d: &Diagram| -> Element {
            let s = d.stats().defect as i32;
            debug_assert_eq!(s % 2, 0);
            Element::from_scaled(d.clone(), Scalar::monomial(0, -s / 2, 1.into()))
        };
        for a in &all {
            for b in &all {
                basis_pairs_checked += 1;
                // product in the (1, dp) algebra
                let lhs = phi(a).multiply(&phi(b))?.set_delta_one();
                // product in the (1, 1) algebra, then rescaled
                let r = a.compose(b)?;
                let rhs = phi(&r.diagram);
                if lhs != rhs {
                    basis_failures.push(format!("{a} * {b}"));
                }
            }
        }
    }
    Ok(RescaleReport { n, relation_failures, basis_pairs_checked, basis_failures })
}

#[derive(Debug, Serialize)]
pub struct MembershipCase {
    pub description: String,
    pub holds: bool,
}

/// Trace-ideal membership at d = dp = 1: for odd n the even-side elements
/// omega_{1..2k} lie in the two-sided ideal of the decorated identity for
/// all 2k <= n; for even n the odd-side elements omega_{1..2k+1} lie in
/// the ideal of the one-strand decoration for all 2k+1 <= n.
pub fn delta_one_membership(n: u32) -> Result<Vec<MembershipCase>, Error> {
    if n > 4 {
        return Err(Error::BoundExceeded { n, bound: 4 });
    }
    let one = parse_rational("1").expect("literal");
    let mut out = Vec::new();
    if n % 2 == 1 {
        let uh = u_hat(n);
        let mut kk = 0;
        while 2 * kk <= n {
            if n != 2 * kk {
                let xs: Vec<u32> = (1..=2 * kk).collect();
                let target = omega_x(n, &xs)?;
                out.push(MembershipCase {
                    description: format!("omega_{{1..{}}} in ideal of u_hat_{n} at (1,1)", 2 * kk),
                    holds: ideal_membership(&target, &uh, &one, &one)?,
                });
            }
            kk += 1;
        }
    } else {
        let om = omega_x(n, &[1])?;
        let mut kk = 0;
        while 2 * kk + 1 <= n {
            if n != 2 * kk + 1 {
                let xs: Vec<u32> = (1..=2 * kk + 1).collect();
                let target = omega_x(n, &xs)?;
                out.push(MembershipCase {
                    description: format!(
                        "omega_{{1..{}}} in ideal of omega_1 at (1,1)",
                        2 * kk + 1
                    ),
                    holds: ideal_membership(&target, &om, &one, &one)?,
                });
            }
            kk += 1;
        }
    }
    Ok(out)
}
