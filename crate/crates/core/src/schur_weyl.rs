//! The tensor-space representation of the partial Brauer algebra on the
//! m-fold power of a (k+1)-dimensional space with a distinguished trivial
//! direction, its homomorphism and injectivity checks, and the direct
//! computation of the orthogonal-group commutant.
//!
//! Matrix entries of diagram images and group generators are small
//! integers, so the matrices live over machine integers; rank and
//! nullspace computations convert to exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::diagram::{Block, Diagram};
use crate::error::Error;
use crate::linalg::{QMatrix, RowSpan};
use crate::scalar::{parse_rational, Rational, Scalar};

/// Dense integer matrix; entries stay far from overflow at desk scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMatrix {
    pub dim: usize,
    data: Vec<i64>,
}

impl IMatrix {
    pub fn zeros(dim: usize) -> IMatrix {
        IMatrix { dim, data: vec![0; dim * dim] }
    }

    pub fn identity(dim: usize) -> IMatrix {
        let mut m = IMatrix::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1;
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut i64 {
        &mut self.data[i * self.dim + j]
    }

    pub fn mul(&self, rhs: &IMatrix) -> IMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = IMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.at(k, j);
                    if b != 0 {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> IMatrix {
        IMatrix { dim: self.dim, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn transpose(&self) -> IMatrix {
        let n = self.dim;
        let mut out = IMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.at(i, j);
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &IMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn flatten_rational(&self) -> Vec<Rational> {
        self.data.iter().map(|&x| BigRational::from(BigInt::from(x))).collect()
    }
}

/// Multi-index helpers over {0..k}^m with 0 the trivial direction.
fn decode(mut idx: usize, m: u32, k: u32) -> Vec<u32> {
    let base = (k + 1) as usize;
    let mut out = vec![0u32; m as usize];
    for slot in (0..m as usize).rev() {
        out[slot] = (idx % base) as u32;
        idx /= base;
    }
    out
}

fn encode(digits: &[u32], k: u32) -> usize {
    let base = (k + 1) as usize;
    digits.iter().fold(0usize, |acc, &d| acc * base + d as usize)
}

/// Tensor dimension (k+1)^m, guarded by the desk-scale bound.
pub fn tensor_dim(m: u32, k: u32) -> Result<usize, Error> {
    let dim = (k as u64 + 1).checked_pow(m).ok_or_else(|| Error::TooLarge("dimension".into()))?;
    if dim > 5000 {
        return Err(Error::TooLarge(format!("tensor dimension {dim} exceeds 5000")));
    }
    Ok(dim as usize)
}

/// The matrix of a diagram on the tensor power: output index j, input
/// index i; a propagating pair {a, b'} forces j_a = i_b, a left pair ties
/// j_a = j_b, a right pair ties i_a = i_b, a left singleton forces
/// j_a = 0, a right singleton forces i_a = 0.
pub fn psi(d: &Diagram, k: u32) -> Result<IMatrix, Error> {
    let m = d.rank();
    let dim = tensor_dim(m, k)?;
    let mut out = IMatrix::zeros(dim);
    // classify blocks once
    let mut right_pairs: Vec<(usize, usize)> = Vec::new();
    let mut right_singles: Vec<usize> = Vec::new();
    let mut props: Vec<(usize, usize)> = Vec::new(); // (out slot, in slot)
    let mut left_pairs: Vec<(usize, usize)> = Vec::new();
    let mut left_singles: Vec<usize> = Vec::new();
    for b in d.blocks() {
        match *b {
            Block::Single(v) if v > 0 => left_singles.push((v - 1) as usize),
            Block::Single(v) => right_singles.push((-v - 1) as usize),
            Block::Pair(a, b2) => {
                let (pos, neg): (Vec<i32>, Vec<i32>) = [a, b2].iter().partition(|&&v| v > 0);
                match (pos.len(), neg.len()) {
                    (2, 0) => left_pairs.push(((pos[0] - 1) as usize, (pos[1] - 1) as usize)),
                    (0, 2) => right_pairs.push(((-neg[0] - 1) as usize, (-neg[1] - 1) as usize)),
                    _ => props.push(((pos[0] - 1) as usize, (-neg[0] - 1) as usize)),
                }
            }
        }
    }
    for col in 0..dim {
        let i = decode(col, m, k);
        if right_singles.iter().any(|&s| i[s] != 0) {
            continue;
        }
        if right_pairs.iter().any(|&(a, b)| i[a] != i[b]) {
            continue;
        }
        // j is forced on propagating and singleton slots, free on left pairs
        let mut j = vec![0u32; m as usize];
        for &(o, inp) in &props {
            j[o] = i[inp];
        }
        // left pair slots range over the diagonal values together
        let npairs = left_pairs.len();
        let base = (k + 1) as usize;
        let mut choice = vec![0usize; npairs];
        loop {
            for (idx, &(a, b)) in left_pairs.iter().enumerate() {
                j[a] = choice[idx] as u32;
                j[b] = choice[idx] as u32;
            }
            *out.at_mut(encode(&j, k), col) += 1;
            // advance the odometer
            let mut p = 0;
            while p < npairs {
                choice[p] += 1;
                if choice[p] < base {
                    break;
                }
                choice[p] = 0;
                p += 1;
            }
            if npairs == 0 || p == npairs {
                break;
            }
        }
    }
    Ok(out)
}

/// Derivation action of one antisymmetric rotation generator (rows a < b of
/// the nontrivial directions) on the tensor power.
fn rotation_derivation(m: u32, k: u32, a: u32, b: u32) -> Result<IMatrix, Error> {
    let dim = tensor_dim(m, k)?;
    let mut out = IMatrix::zeros(dim);
    for col in 0..dim {
        let i = decode(col, m, k);
        for pos in 0..m as usize {
            // E_ab - E_ba acting in one slot: sends e_b to e_a and e_a to -e_b
            if i[pos] == b {
                let mut j = i.clone();
                j[pos] = a;
                *out.at_mut(encode(&j, k), col) += 1;
            }
            if i[pos] == a {
                let mut j = i.clone();
                j[pos] = b;
                *out.at_mut(encode(&j, k), col) -= 1;
            }
        }
    }
    Ok(out)
}

/// The determinant -1 reflection negating the first nontrivial direction,
/// acting diagonally on all slots.
fn reflection(m: u32, k: u32) -> Result<IMatrix, Error> {
    let dim = tensor_dim(m, k)?;
    let mut out = IMatrix::zeros(dim);
    for col in 0..dim {
        let i = decode(col, m, k);
        let flips = i.iter().filter(|&&d| d == 1).count();
        *out.at_mut(col, col) = if flips % 2 == 0 { 1 } else { -1 };
    }
    Ok(out)
}

/// Generators whose commutant cuts out the orthogonal-group centralizer:
/// the rotation derivations together with one reflection.
pub fn orthogonal_generators(m: u32, k: u32) -> Result<Vec<IMatrix>, Error> {
    let mut gens = Vec::new();
    for a in 1..=k {
        for b in a + 1..=k {
            gens.push(rotation_derivation(m, k, a, b)?);
        }
    }
    gens.push(reflection(m, k)?);
    Ok(gens)
}

#[derive(Debug, Serialize)]
pub struct HomomorphismReport {
    pub m: u32,
    pub k: u32,
    pub pairs_checked: usize,
    pub pair_failures: Vec<String>,
    pub relation_failures: Vec<String>,
}

impl HomomorphismReport {
    pub fn ok(&self) -> bool {
        self.pair_failures.is_empty() && self.relation_failures.is_empty()
    }
}

/// psi(a) psi(b) = (k+1)^loops * 1^strings * psi(a b) over diagram pairs
/// (exhaustive for m <= 2, seeded sample otherwise), plus every defining
/// relation on matrices at the specialized parameters (k+1, 1).
pub fn homomorphism_check(m: u32, k: u32, sample_seed: u64) -> Result<HomomorphismReport, Error> {
    let diagrams = Diagram::enumerate(m, false)?;
    let images: Vec<IMatrix> =
        diagrams.iter().map(|d| psi(d, k)).collect::<Result<_, _>>()?;
    let mut pair_failures = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    if m <= 2 {
        for i in 0..diagrams.len() {
            for j in 0..diagrams.len() {
                pairs.push((i, j));
            }
        }
    } else {
        // cheap deterministic sampler: a multiplicative lcg over pair space
        let total = diagrams.len();
        let mut state = sample_seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        for _ in 0..300 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let i = (state >> 16) as usize % total;
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 16) as usize % total;
            pairs.push((i, j));
        }
    }
    let pairs_checked = pairs.len();
    for (i, j) in pairs {
        let r = diagrams[i].compose(&diagrams[j])?;
        let scalar = (k as i64 + 1).pow(r.loops); // strings weigh 1 at dp = 1
        let target = psi(&r.diagram, k)?.scale(scalar);
        if images[i].mul(&images[j]) != target {
            pair_failures.push(format!("{} * {}", diagrams[i], diagrams[j]));
        }
    }

    let mut relation_failures = Vec::new();
    let delta = parse_rational(&(k + 1).to_string()).expect("integer literal");
    let one = parse_rational("1").expect("literal");
    for rel in crate::algebra::presentation_relations(m)? {
        let prod = |word: &[Diagram]| -> Result<IMatrix, Error> {
            let mut acc = IMatrix::identity(tensor_dim(m, k)?);
            for d in word {
                acc = acc.mul(&psi(d, k)?);
            }
            Ok(acc)
        };
        let lhs = prod(&rel.lhs)?;
        let scalar = rel.rhs_scalar.evaluate(&delta, &one)?;
        let scalar = crate::scalar::rational_to_int(&scalar)
            .and_then(|b| i64::try_from(b).ok())
            .expect("specialized relation scalar is a small integer");
        let rhs = prod(&rel.rhs)?.scale(scalar);
        if lhs != rhs {
            relation_failures.push(rel.name);
        }
    }
    Ok(HomomorphismReport { m, k, pairs_checked, pair_failures, relation_failures })
}

#[derive(Debug, Serialize)]
pub struct InjectivityReport {
    pub m: u32,
    pub k: u32,
    pub rank: usize,
    pub expected: usize,
    pub injective: bool,
}

/// Rank of the flattened diagram images; the map is injective exactly when
/// the rank equals the diagram count.
pub fn injectivity_rank(m: u32, k: u32) -> Result<InjectivityReport, Error> {
    let diagrams = Diagram::enumerate(m, false)?;
    let dim = tensor_dim(m, k)?;
    let mut span = RowSpan::new(dim * dim);
    for d in &diagrams {
        span.insert(psi(d, k)?.flatten_rational());
    }
    Ok(InjectivityReport {
        m,
        k,
        rank: span.rank(),
        expected: diagrams.len(),
        injective: span.rank() == diagrams.len(),
    })
}

#[derive(Debug, Serialize)]
pub struct CommutantReport {
    pub m: u32,
    pub k: u32,
    pub dim_commutant: usize,
    pub dim_image: usize,
}

/// Dimension of the centralizer of the orthogonal action, via the exact
/// nullspace of the commutator constraints, together with the image rank.
pub fn commutant_dim(m: u32, k: u32) -> Result<CommutantReport, Error> {
    let dim = tensor_dim(m, k)?;
    if dim > 100 {
        return Err(Error::TooLarge(format!("commutant solve at dimension {dim}")));
    }
    let gens = orthogonal_generators(m, k)?;
    let unknowns = dim * dim;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    use num_traits::Zero;
    for g in &gens {
        // [X, G] = 0: for each (r, c): sum_t X[r][t] G[t][c] - G[r][t] X[t][c] = 0
        for r in 0..dim {
            for c in 0..dim {
                let mut row = vec![BigRational::zero(); unknowns];
                for t in 0..dim {
                    let a = g.at(t, c);
                    if a != 0 {
                        row[r * dim + t] += BigRational::from(BigInt::from(a));
                    }
                    let b = g.at(r, t);
                    if b != 0 {
                        row[t * dim + c] -= BigRational::from(BigInt::from(b));
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let constraint = QMatrix::from_rows(rows);
    let dim_commutant = unknowns - constraint.rank();
    let dim_image = injectivity_rank(m, k)?.rank;
    Ok(CommutantReport { m, k, dim_commutant, dim_image })
}

/// All diagram images commute with every orthogonal generator.
pub fn images_commute_with_group(m: u32, k: u32) -> Result<bool, Error> {
    let gens = orthogonal_generators(m, k)?;
    for d in Diagram::enumerate(m, false)? {
        let img = psi(&d, k)?;
        if !gens.iter().all(|g| img.commutes_with(g)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Loop/string scalar specialized at (k+1, 1), for callers mixing symbolic
/// and matrix computations.
pub fn specialized_scalar(loops: u32, strings: u32, k: u32) -> i64 {
    let _ = Scalar::straightening(loops, strings);
    (k as i64 + 1).pow(loops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::generators;

    #[test]
    fn psi_of_identity_is_identity() {
        for (m, k) in [(1u32, 1u32), (2, 2), (3, 2)] {
            let dim = tensor_dim(m, k).unwrap();
            assert_eq!(psi(&Diagram::identity(m), k).unwrap(), IMatrix::identity(dim));
        }
    }

    #[test]
    fn psi_of_eps_is_the_trivial_direction_projector() {
        let m = 2;
        let k = 2;
        let e1 = generators::eps(m, 1).unwrap();
        let img = psi(&e1, k).unwrap();
        let dim = tensor_dim(m, k).unwrap();
        for col in 0..dim {
            let i = decode(col, m, k);
            for row in 0..dim {
                let expected = if i[0] == 0 && row == col { 1 } else { 0 };
                assert_eq!(img.at(row, col), expected);
            }
        }
        // idempotent: dp specializes to 1
        assert_eq!(img.mul(&img), img);
    }

    #[test]
    fn psi_of_p_is_the_contraction_expansion() {
        let m = 2;
        let k = 2;
        let p1 = generators::p(m, 1).unwrap();
        let img = psi(&p1, k).unwrap();
        // zeta^2 = (k+1) zeta
        assert_eq!(img.mul(&img), img.scale(k as i64 + 1));
        // explicit entries: row (j,j), column (i,i) are 1
        for i in 0..=k {
            for j in 0..=k {
                assert_eq!(img.at(encode(&[j, j], k), encode(&[i, i], k)), 1);
            }
        }
    }

    #[test]
    fn psi_star_is_transpose() {
        for (m, k) in [(1u32, 2u32), (2, 2)] {
            for d in Diagram::enumerate(m, false).unwrap() {
                assert_eq!(psi(&d.star(), k).unwrap(), psi(&d, k).unwrap().transpose());
            }
        }
    }

    #[test]
    fn homomorphism_exhaustive_small() {
        for (m, k) in [(1u32, 1u32), (1, 2), (2, 2)] {
            let r = homomorphism_check(m, k, 0).unwrap();
            assert!(r.ok(), "m={m} k={k}: {r:?}");
        }
    }

    #[test]
    fn injectivity_in_the_stable_range() {
        let r = injectivity_rank(1, 1).unwrap();
        assert_eq!((r.rank, r.expected, r.injective), (2, 2, true));
        let r = injectivity_rank(2, 2).unwrap();
        assert_eq!((r.rank, r.expected, r.injective), (10, 10, true));
        // below the stable range the map has a kernel
        let r = injectivity_rank(2, 1).unwrap();
        assert!(r.rank < 10);
        assert!(!r.injective);
    }

    #[test]
    fn commutant_matches_image_dimension() {
        let r = commutant_dim(1, 1).unwrap();
        assert_eq!((r.dim_commutant, r.dim_image), (2, 2));
        let r = commutant_dim(2, 2).unwrap();
        assert_eq!((r.dim_commutant, r.dim_image), (10, 10));
    }

    #[test]
    fn diagram_images_centralize_the_group() {
        for (m, k) in [(1u32, 1u32), (2, 2), (2, 3)] {
            assert!(images_commute_with_group(m, k).unwrap(), "m={m} k={k}");
        }
    }

    #[test]
    fn size_bound_is_enforced() {
        assert!(tensor_dim(10, 3).is_err());
    }
}
