//! Idempotent truncations onto Brauer algebras: the even truncation by the
//! fully decorated identity, the odd truncation by the one-strand
//! decoration, the element identities behind the trace-ideal arguments,
//! and the Specht-image dimension checks.

use serde::Serialize;

use crate::algebra::{decorated, omega_x, to_decorated_basis, u_hat, Element};
use crate::cell::{brauer_delta_dim, DeltaModule};
use crate::diagram::Diagram;
use crate::error::Error;
use crate::scalar::{Rational, Scalar};
use crate::symmetric::IntPartition;

/// Which truncation of the parity decomposition is examined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Even,
    Odd,
}

/// Outcome of a truncation check: which diagrams survive, whether the
/// surviving decorated elements are independent, and any product that
/// fails to match the Brauer structure constants at shifted parameter.
#[derive(Debug, Serialize)]
pub struct TruncationReport {
    pub n: u32,
    pub side: Side,
    pub basis_size: usize,
    pub survivor_mismatches: Vec<String>,
    pub independence_ok: bool,
    pub structure_mismatches: Vec<String>,
}

impl TruncationReport {
    pub fn ok(&self) -> bool {
        self.survivor_mismatches.is_empty()
            && self.independence_ok
            && self.structure_mismatches.is_empty()
    }
}

/// The embedding of a rank-(n-1) diagram as a rank-n diagram with a leading
/// singleton strand on both sides.
pub fn phi_embed(d: &Diagram) -> Diagram {
    let eps1 = Diagram::new(1, vec![vec![1], vec![-1]]).expect("rank-1 singletons");
    eps1.tensor(d)
}

/// The element x with k split-strand units followed by identity strands:
/// left singletons 1..2k, right arcs joining (2i+1)' to (2i+2)'.
pub fn x_even(n: u32, k: u32) -> Result<Diagram, Error> {
    if 2 * k > n {
        return Err(Error::BadIndex { index: k, n });
    }
    let unit = Diagram::new(2, vec![vec![1], vec![2], vec![-1, -2]]).expect("split unit");
    let mut x = Diagram::empty();
    for _ in 0..k {
        x = x.tensor(&unit);
    }
    Ok(x.tensor(&Diagram::identity(n - 2 * k)))
}

/// The odd variant: one singleton strand, then k split-strand units, then
/// identity strands.
pub fn x_odd(n: u32, k: u32) -> Result<Diagram, Error> {
    if 2 * k + 1 > n {
        return Err(Error::BadIndex { index: k, n });
    }
    let eps1 = Diagram::new(1, vec![vec![1], vec![-1]]).expect("rank-1 singletons");
    Ok(eps1.tensor(&x_even(n - 1, k)?))
}

/// The even trace-ideal identity: (d-1)^k omega_{1..2k} equals
/// <x> u_hat_n <x*> with x = x_even(n, k). Verified symbolically.
pub fn fig_even_identity(n: u32, k: u32) -> Result<bool, Error> {
    let x = x_even(n, k)?;
    let lhs = omega_x(n, &(1..=2 * k).collect::<Vec<_>>())?
        .scale(&(&Scalar::delta() - &Scalar::one()).pow(k));
    let rhs = decorated(&x).multiply(&u_hat(n))?.multiply(&decorated(&x.star()))?;
    Ok(lhs == rhs)
}

/// The odd trace-ideal identity: dp^2 (d-1)^k omega_{1..2k+1} equals
/// <x> omega <x*> with x = x_odd(n, k) and omega the one-strand decoration.
pub fn fig_odd_identity(n: u32, k: u32) -> Result<bool, Error> {
    let x = x_odd(n, k)?;
    let omega = omega_x(n, &[1])?;
    let lhs = omega_x(n, &(1..=2 * k + 1).collect::<Vec<_>>())?
        .scale(&(&(&Scalar::delta() - &Scalar::one()).pow(k) * &Scalar::delta_prime().pow(2)));
    let rhs = decorated(&x).multiply(&omega)?.multiply(&decorated(&x.star()))?;
    Ok(lhs == rhs)
}

fn truncation_check(
    n: u32,
    side: Side,
    idempotent: &Element,
    survivors: &[Diagram],
    // maps a surviving diagram to the Brauer diagram it represents
    unembed: impl Fn(&Diagram) -> Diagram,
    embed: impl Fn(&Diagram) -> Diagram,
    // dp-power normalization of the surviving basis elements
    normalization: u32,
) -> Result<TruncationReport, Error> {
    let mut survivor_mismatches = Vec::new();
    for d in Diagram::enumerate(n, false)? {
        // on the even side the fully decorated identity absorbs all strand
        // decorations, so sandwiching d and <d> agree; the odd idempotent
        // decorates only strands 2..n and the vanishing statement is about
        // the decorated basis element
        let middle = match side {
            Side::Even => Element::from_diagram(d.clone()),
            Side::Odd => decorated(&d),
        };
        let sandwich = idempotent.multiply(&middle)?.multiply(idempotent)?;
        let should_survive = survivors.contains(&d);
        if sandwich.is_zero() == should_survive {
            survivor_mismatches.push(format!(
                "{d}: sandwich {} but membership {}",
                if sandwich.is_zero() { "vanishes" } else { "survives" },
                should_survive
            ));
        }
    }

    // independence: restricted to survivor coordinates, the decorated
    // elements form the identity matrix (all other terms have more
    // singletons)
    let mut independence_ok = true;
    for d in survivors {
        let dec = decorated(d);
        for e in survivors {
            let c = dec.coeff(e);
            let expected = if e == d { Scalar::one() } else { Scalar::zero() };
            if c != expected {
                independence_ok = false;
            }
        }
    }

    // structure constants against the Brauer algebra at parameter d - 1:
    // with e_d = dp^-norm <embed(d)>, require e_a e_b = (d-1)^loops e_{ab}
    let mut structure_mismatches = Vec::new();
    let base: Vec<Diagram> = survivors.iter().map(&unembed).collect();
    for a in &base {
        for b in &base {
            let r = a.compose(b)?;
            debug_assert_eq!(r.strings, 0, "Brauer composition never makes strings");
            let product = decorated(&embed(a)).multiply(&decorated(&embed(b)))?;
            let gamma = to_decorated_basis(&product);
            let expected_coeff = &(&Scalar::delta() - &Scalar::one()).pow(r.loops)
                * &Scalar::delta_prime().pow(normalization);
            let expected_diagram = embed(&r.diagram);
            let ok = gamma.len() == 1
                && gamma.get(&expected_diagram).is_some_and(|c| *c == expected_coeff);
            if !ok {
                structure_mismatches.push(format!("{a} * {b}"));
            }
        }
    }
    Ok(TruncationReport {
        n,
        side,
        basis_size: survivors.len(),
        survivor_mismatches,
        independence_ok,
        structure_mismatches,
    })
}

/// Truncation by the fully decorated identity: survivors are the Brauer
/// diagrams and products match the Brauer algebra at parameter d - 1.
pub fn even_truncation_check(n: u32) -> Result<TruncationReport, Error> {
    if n > 4 {
        return Err(Error::BoundExceeded { n, bound: 4 });
    }
    let survivors = Diagram::enumerate(n, true)?;
    truncation_check(n, Side::Even, &u_hat(n), &survivors, |d| d.clone(), |d| d.clone(), 0)
}

/// Truncation by the one-strand decoration: survivors are the embedded
/// rank-(n-1) Brauer diagrams; after one dp normalization the products
/// match the rank-(n-1) Brauer algebra at parameter d - 1.
pub fn odd_truncation_check(n: u32) -> Result<TruncationReport, Error> {
    if n > 4 {
        return Err(Error::BoundExceeded { n, bound: 4 });
    }
    let omega = omega_x(n, &[1])?;
    let survivors: Vec<Diagram> =
        Diagram::enumerate(n - 1, true)?.iter().map(phi_embed).collect();
    truncation_check(
        n,
        Side::Odd,
        &omega,
        &survivors,
        |d| {
            // strip the leading singleton strand
            let raw: Vec<Vec<i32>> = d
                .blocks()
                .iter()
                .filter(|b| b.vertices().all(|v| v.abs() != 1))
                .map(|b| {
                    b.vertices().map(|v| if v > 0 { v - 1 } else { v + 1 }).collect()
                })
                .collect();
            Diagram::new(d.rank() - 1, raw).expect("survivor strips to a Brauer diagram")
        },
        phi_embed,
        1,
    )
}

/// Dimension of the truncated Specht module at a generic parameter point
/// against the matching Brauer Specht dimension.
#[derive(Debug, Serialize)]
pub struct SpechtImageReport {
    pub n: u32,
    pub lambda: String,
    pub side: Side,
    pub truncated_dim: usize,
    pub brauer_dim: u128,
    pub holds: bool,
}

pub fn specht_image_check(
    n: u32,
    lambda: &IntPartition,
    side: Side,
    delta: &Rational,
    delta_prime: &Rational,
) -> Result<SpechtImageReport, Error> {
    let module = DeltaModule::new(n, lambda)?;
    let (idempotent, brauer_dim) = match side {
        Side::Even => (u_hat(n), brauer_delta_dim(n, lambda)),
        Side::Odd => (omega_x(n, &[1])?, brauer_delta_dim(n - 1, lambda)),
    };
    let a = module.act_eval(&idempotent, delta, delta_prime)?;
    let truncated_dim = a.rank();
    Ok(SpechtImageReport {
        n,
        lambda: lambda.to_string(),
        side,
        truncated_dim,
        brauer_dim,
        holds: truncated_dim as u128 == brauer_dim,
    })
}
