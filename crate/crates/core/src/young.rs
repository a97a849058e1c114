//! The Young graph incidence matrix, the matrix-power dimension formula
//! for Specht modules, and dimension-level verification of the branching
//! rule for the restriction to the next-lower rank.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::Element;
use crate::cell::{delta_dim, DeltaModule};
use crate::diagram::Diagram;
use crate::error::Error;
use crate::scalar::Rational;
use crate::symmetric::{partitions_up_to, IntPartition};

/// Incidence matrix of the Young graph on partitions of weight at most the
/// bound: entry (mu, lambda) is 1 when lambda is mu plus one box.
pub struct YoungMatrix {
    pub partitions: Vec<IntPartition>,
    pub bound: u32,
    m: Vec<Vec<BigInt>>,
}

impl YoungMatrix {
    pub fn new(bound: u32) -> YoungMatrix {
        let partitions = partitions_up_to(bound);
        let index = |p: &IntPartition| partitions.iter().position(|q| q == p);
        let size = partitions.len();
        let mut m = vec![vec![BigInt::zero(); size]; size];
        for (i, mu) in partitions.iter().enumerate() {
            for lambda in mu.up_arrows() {
                if let Some(j) = index(&lambda) {
                    m[i][j] = BigInt::one();
                }
            }
        }
        YoungMatrix { partitions, bound, m }
    }

    fn index(&self, p: &IntPartition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    /// The matrix M + M^t + 1.
    fn walk_matrix(&self) -> Vec<Vec<BigInt>> {
        let size = self.partitions.len();
        let mut w = vec![vec![BigInt::zero(); size]; size];
        for i in 0..size {
            for j in 0..size {
                w[i][j] = &self.m[i][j] + &self.m[j][i];
            }
            w[i][i] += 1;
        }
        w
    }

    /// Nilpotency order of M: least e with M^e = 0.
    pub fn nilpotency_order(&self) -> u32 {
        let size = self.partitions.len();
        let mut acc = self.m.clone();
        let mut e = 1;
        while acc.iter().any(|row| row.iter().any(|x| !x.is_zero())) {
            acc = mat_mul(&acc, &self.m);
            e += 1;
            assert!(e as usize <= size + 1, "incidence matrix is not nilpotent");
        }
        e
    }

    /// The (empty, lambda) entry of (M + M^t + 1)^n: the dimension of the
    /// rank-n Specht module of shape lambda.
    pub fn dim_via_matrix(&self, n: u32, lambda: &IntPartition) -> Result<BigInt, Error> {
        if lambda.weight() > n {
            return Ok(BigInt::zero());
        }
        if n > self.bound {
            return Err(Error::BoundExceeded { n, bound: self.bound });
        }
        let w = self.walk_matrix();
        let size = self.partitions.len();
        let mut acc = vec![vec![BigInt::zero(); size]; size];
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        for _ in 0..n {
            acc = mat_mul(&acc, &w);
        }
        let from = self.index(&IntPartition::empty()).expect("empty partition listed");
        let to = self
            .index(lambda)
            .ok_or_else(|| Error::InvalidPartition(format!("{lambda} outside bound")))?;
        Ok(acc[from][to].clone())
    }
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Dimension bookkeeping for the branching short exact sequence:
/// dim Delta(n, lambda) = dim Delta(n-1, lambda)
///   + sum over mu -> lambda of dim Delta(n-1, mu)
///   + sum over lambda -> mu of dim Delta(n-1, mu).
#[derive(Debug, Clone, Serialize)]
pub struct BranchingReport {
    pub n: u32,
    pub lambda: String,
    pub total: u128,
    pub same_shape: u128,
    pub removed_box: u128,
    pub added_box: u128,
    pub holds: bool,
}

pub fn branching_check(n: u32, lambda: &IntPartition) -> Result<BranchingReport, Error> {
    if n == 0 || lambda.weight() > n {
        return Err(Error::InvalidPartition(format!(
            "branching needs 0 < |lambda| <= n, got {lambda} at n = {n}"
        )));
    }
    let total = delta_dim(n, lambda);
    let same_shape = delta_dim(n - 1, lambda);
    let removed_box: u128 = lambda.down_arrows().iter().map(|mu| delta_dim(n - 1, mu)).sum();
    let added_box: u128 = lambda.up_arrows().iter().map(|mu| delta_dim(n - 1, mu)).sum();
    Ok(BranchingReport {
        n,
        lambda: lambda.to_string(),
        total,
        same_shape,
        removed_box,
        added_box,
        holds: total == same_shape + removed_box + added_box,
    })
}

/// The rank-lowering embedding: a diagram gains one identity strand.
pub fn embed(d: &Diagram) -> Diagram {
    d.tensor(&Diagram::identity(1))
}

/// Invariance of the branching filtration at a parameter point: within the
/// rank-n Specht module, the span of basis vectors whose half diagram has a
/// singleton at n is stable under the embedded rank-(n-1) algebra, and so
/// is its sum with the span of vectors where n propagates.
pub fn restriction_invariance_check(
    n: u32,
    lambda: &IntPartition,
    delta: &Rational,
    delta_prime: &Rational,
) -> Result<bool, Error> {
    let module = DeltaModule::new(n, lambda)?;
    let f = module.rep.dim;
    let mut in_v1 = vec![false; module.dim()];
    let mut in_v2 = vec![false; module.dim()];
    for (hi, h) in module.halves.iter().enumerate() {
        for b in 0..f {
            let idx = module.basis_index(hi, b);
            in_v1[idx] = h.has_singleton(n);
            in_v2[idx] = h.is_prop_point(n);
        }
    }
    for g in Diagram::enumerate(n - 1, false)? {
        let x = Element::from_diagram(embed(&g));
        let a = module.act_eval(&x, delta, delta_prime)?;
        for c in 0..module.dim() {
            for r in 0..module.dim() {
                if a.at(r, c).is_zero() {
                    continue;
                }
                // column in V1 must map into V1
                if in_v1[c] && !in_v1[r] {
                    return Ok(false);
                }
                // column in V1 + V2 must map into V1 + V2
                if (in_v1[c] || in_v2[c]) && !(in_v1[r] || in_v2[r]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_rational;
    use crate::symmetric::partitions_of;

    fn pt(s: &str) -> IntPartition {
        IntPartition::parse(s).unwrap()
    }

    #[test]
    fn small_walk_counts() {
        let y = YoungMatrix::new(4);
        assert_eq!(y.dim_via_matrix(2, &IntPartition::empty()).unwrap(), BigInt::from(2));
        assert_eq!(y.dim_via_matrix(2, &pt("1")).unwrap(), BigInt::from(2));
        assert_eq!(y.dim_via_matrix(2, &pt("2")).unwrap(), BigInt::from(1));
        assert_eq!(y.dim_via_matrix(2, &pt("1,1")).unwrap(), BigInt::from(1));
    }

    #[test]
    fn incidence_matrix_is_nilpotent() {
        let y = YoungMatrix::new(4);
        // strictly weight-graded: nilpotency order is the bound + 1
        assert_eq!(y.nilpotency_order(), 5);
    }

    #[test]
    fn truncation_independence() {
        for extra in 0..=2u32 {
            let y = YoungMatrix::new(3 + extra);
            for lambda in partitions_up_to(3) {
                assert_eq!(
                    y.dim_via_matrix(3, &lambda).unwrap(),
                    YoungMatrix::new(3).dim_via_matrix(3, &lambda).unwrap()
                );
            }
        }
    }

    #[test]
    fn matrix_power_matches_half_diagram_formula() {
        for n in 1..=4u32 {
            let y = YoungMatrix::new(n);
            for k in 0..=n {
                for lambda in partitions_of(k) {
                    assert_eq!(
                        y.dim_via_matrix(n, &lambda).unwrap(),
                        BigInt::from(delta_dim(n, &lambda)),
                        "n={n} lambda={lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn branching_examples() {
        let r = branching_check(2, &pt("1")).unwrap();
        assert!(r.holds);
        assert_eq!((r.total, r.same_shape, r.removed_box, r.added_box), (2, 1, 1, 0));
        let r = branching_check(3, &IntPartition::empty()).unwrap();
        assert!(r.holds);
        assert_eq!((r.total, r.same_shape, r.removed_box, r.added_box), (4, 2, 0, 2));
    }

    #[test]
    fn branching_holds_up_to_rank_four() {
        for n in 1..=4u32 {
            for k in 0..=n {
                for lambda in partitions_of(k) {
                    assert!(branching_check(n, &lambda).unwrap().holds, "n={n} {lambda}");
                }
            }
        }
    }

    #[test]
    fn restriction_subspaces_are_invariant() {
        let delta = parse_rational("13/7").unwrap();
        let dp = parse_rational("5/3").unwrap();
        for (n, lam) in [(2u32, "1"), (2, "0"), (3, "1"), (3, "2")] {
            assert!(
                restriction_invariance_check(n, &pt(lam), &delta, &dp).unwrap(),
                "n={n} lambda={lam}"
            );
        }
    }

    #[test]
    fn embedding_is_multiplicative() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let all = Diagram::enumerate(2, false).unwrap();
        for _ in 0..40 {
            let a = &all[rng.gen_range(0..all.len())];
            let b = &all[rng.gen_range(0..all.len())];
            let small = a.compose(b).unwrap();
            let big = embed(a).compose(&embed(b)).unwrap();
            assert_eq!((small.loops, small.strings), (big.loops, big.strings));
            assert_eq!(embed(&small.diagram), big.diagram);
        }
    }
}
