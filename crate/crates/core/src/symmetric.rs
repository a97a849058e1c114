//! Integer partitions, standard Young tableaux, exact Specht
//! representations of the symmetric group over the rationals with an
//! invariant bilinear form, branching arrows and horizontal strips.
//!
//! The Specht module is realized inside the tabloid permutation module:
//! basis vectors are the polytabloids of standard tableaux, generator
//! matrices are obtained by permuting tabloids and re-expressing in the
//! polytabloid basis by an exact linear solve, and the bilinear form is the
//! restriction of the orthonormal tabloid form.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg::{ColumnSolver, QMatrix};
use crate::scalar::Rational;

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPartition {
    parts: Vec<u32>,
}

impl IntPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<IntPartition, Error> {
        parts.retain(|&p| p != 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(IntPartition { parts })
    }

    pub fn empty() -> IntPartition {
        IntPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parse a comma list such as `3,1,1`; the empty partition is `0` or ``.
    pub fn parse(s: &str) -> Result<IntPartition, Error> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(IntPartition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| Error::Parse(format!("bad partition `{s}`")))?;
        IntPartition::new(parts)
    }

    /// Partitions reachable by removing one removable node.
    pub fn down_arrows(&self) -> Vec<IntPartition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1] {
                let mut p = self.parts.clone();
                p[i] -= 1;
                out.push(IntPartition::new(p).expect("removal keeps a partition"));
            }
        }
        out
    }

    /// Partitions reachable by adding one insertable node.
    pub fn up_arrows(&self) -> Vec<IntPartition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let cur = self.part(i);
            let above = if i == 0 { u32::MAX } else { self.part(i - 1) };
            if cur < above {
                let mut p = self.parts.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(IntPartition::new(p).expect("insertion keeps a partition"));
            }
        }
        out
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn dimension(&self) -> u128 {
        let k = self.weight();
        let mut numer: u128 = 1;
        for v in 2..=k as u128 {
            numer *= v;
        }
        let conj = self.conjugate();
        let mut denom: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let hook = (row as u128 - j as u128) + (conj.part(j) as u128 - i as u128) - 1;
                denom *= hook;
            }
        }
        numer / denom
    }

    pub fn conjugate(&self) -> IntPartition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&r| r as usize > j).count() as u32)
            .collect();
        IntPartition { parts }
    }

    /// Cycle-type centralizer order z = prod i^{m_i} m_i!.
    pub fn centralizer_order(&self) -> u128 {
        let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        let mut z: u128 = 1;
        for (i, m) in mult {
            for _ in 0..m {
                z *= i as u128;
            }
            for v in 2..=m as u128 {
                z *= v;
            }
        }
        z
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// All partitions of `k`, in a fixed deterministic order.
pub fn partitions_of(k: u32) -> Vec<IntPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<IntPartition>) {
        if remaining == 0 {
            out.push(IntPartition { parts: current.clone() });
            return;
        }
        let top = max.min(remaining);
        for next in (1..=top).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(k, k, &mut current, &mut out);
    out
}

/// All partitions of weight at most `w`, graded by weight.
pub fn partitions_up_to(w: u32) -> Vec<IntPartition> {
    (0..=w).flat_map(partitions_of).collect()
}

/// True when mu/lambda is a horizontal strip of size l: mu contains lambda,
/// the difference has l cells with at most one per column.
pub fn horizontal_strip(lambda: &IntPartition, mu: &IntPartition, l: u32) -> bool {
    if mu.weight() != lambda.weight() + l {
        return false;
    }
    for i in 0..mu.len() {
        if mu.part(i) < lambda.part(i) {
            return false; // not contained
        }
        // at most one new cell per column: mu_{i+1} <= lambda_i
        if i > 0 && mu.part(i) > lambda.part(i - 1) {
            return false;
        }
    }
    lambda.len() <= mu.len()
}

/// A permutation of {0..k-1} in one-line notation: `map[i]` is the image.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(k: usize) -> Perm {
        Perm { map: (0..k).collect() }
    }

    pub fn from_one_line(map: Vec<usize>) -> Perm {
        debug_assert!({
            let mut seen = vec![false; map.len()];
            map.iter().all(|&i| {
                let fresh = !seen[i];
                seen[i] = true;
                fresh
            })
        });
        Perm { map }
    }

    /// Adjacent transposition swapping i and i+1 (0-indexed).
    pub fn transposition(k: usize, i: usize) -> Perm {
        let mut map: Vec<usize> = (0..k).collect();
        map.swap(i, i + 1);
        Perm { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// self after other: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.map.len(), other.map.len());
        Perm { map: other.map.iter().map(|&x| self.map[x]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Perm { map: inv }
    }

    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.map.len()];
        let mut sign = 1;
        for mut i in 0..self.map.len() {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            while !seen[i] {
                seen[i] = true;
                i = self.map[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn cycle_type(&self) -> IntPartition {
        let mut seen = vec![false; self.map.len()];
        let mut cycles = Vec::new();
        for mut i in 0..self.map.len() {
            if seen[i] {
                continue;
            }
            let mut len = 0u32;
            while !seen[i] {
                seen[i] = true;
                i = self.map[i];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition { parts: cycles }
    }

    /// All permutations of degree k in lexicographic one-line order.
    pub fn all(k: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut used = vec![false; k];
        let mut cur = Vec::new();
        fn rec(k: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Perm>) {
            if cur.len() == k {
                out.push(Perm { map: cur.clone() });
                return;
            }
            for i in 0..k {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(k, used, cur, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(k, &mut used, &mut cur, &mut out);
        out
    }
}

/// Standard Young tableaux of shape lambda, rows of entries 1..k.
pub fn standard_tableaux(lambda: &IntPartition) -> Vec<Vec<Vec<u32>>> {
    let k = lambda.weight();
    let rows = lambda.len();
    let mut out = Vec::new();
    let mut fill: Vec<Vec<u32>> = vec![Vec::new(); rows];
    fn rec(
        lambda: &IntPartition,
        v: u32,
        k: u32,
        fill: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if v > k {
            out.push(fill.clone());
            return;
        }
        for r in 0..fill.len() {
            let cur = fill[r].len();
            if cur < lambda.part(r) as usize && (r == 0 || fill[r - 1].len() > cur) {
                fill[r].push(v);
                rec(lambda, v + 1, k, fill, out);
                fill[r].pop();
            }
        }
    }
    if rows == 0 {
        return vec![Vec::new()];
    }
    rec(lambda, 1, k, &mut fill, &mut out);
    out
}

/// Exact rational Specht representation with its invariant Gram form.
pub struct SpechtRep {
    pub lambda: IntPartition,
    pub dim: usize,
    /// matrices of the adjacent transpositions s_1..s_{k-1}
    pub gens: Vec<QMatrix>,
    /// invariant symmetric bilinear form on the module
    pub gram: QMatrix,
    k: usize,
    tabloid_index: BTreeMap<Vec<u8>, usize>,
    tabloids: Vec<Vec<u8>>,
    polytabloids: Vec<Vec<Rational>>,
    solver: ColumnSolver,
}

/// Desk-scale bound on the symmetric group weight.
pub const SPECHT_WEIGHT_BOUND: u32 = 7;

impl SpechtRep {
    pub fn new(lambda: &IntPartition) -> Result<SpechtRep, Error> {
        let k = lambda.weight();
        if k > SPECHT_WEIGHT_BOUND {
            return Err(Error::BoundExceeded { n: k, bound: SPECHT_WEIGHT_BOUND });
        }
        // enumerate tabloids: assignments of 1..k to rows with row sizes lambda
        let rows = lambda.len().max(1) as u8;
        let mut tabloids: Vec<Vec<u8>> = Vec::new();
        let mut counts = vec![0u32; rows as usize];
        let mut cur = vec![0u8; k as usize];
        fn rec(
            lambda: &IntPartition,
            pos: usize,
            k: usize,
            rows: u8,
            counts: &mut Vec<u32>,
            cur: &mut Vec<u8>,
            out: &mut Vec<Vec<u8>>,
        ) {
            if pos == k {
                out.push(cur.clone());
                return;
            }
            for r in 0..rows {
                if counts[r as usize] < lambda.part(r as usize) {
                    counts[r as usize] += 1;
                    cur[pos] = r;
                    rec(lambda, pos + 1, k, rows, counts, cur, out);
                    counts[r as usize] -= 1;
                }
            }
        }
        if k == 0 {
            tabloids.push(Vec::new());
        } else {
            rec(lambda, 0, k as usize, rows, &mut counts, &mut cur, &mut tabloids);
        }
        let tabloid_index: BTreeMap<Vec<u8>, usize> =
            tabloids.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();

        // polytabloids of standard tableaux
        let syt = standard_tableaux(lambda);
        let n_tab = tabloids.len();
        let mut polytabloids: Vec<Vec<Rational>> = Vec::new();
        for t in &syt {
            let mut vec = vec![BigRational::zero(); n_tab];
            // column entries, in row order
            let n_cols = lambda.part(0) as usize;
            let columns: Vec<Vec<u32>> = (0..n_cols)
                .map(|j| t.iter().filter_map(|row| row.get(j).copied()).collect())
                .collect();
            // iterate over the column stabilizer
            let mut sigma: Vec<u32> = (0..=k).collect(); // value map, 1-based
            fn col_rec(
                columns: &[Vec<u32>],
                ci: usize,
                sigma: &mut Vec<u32>,
                sign: i32,
                t: &[Vec<u32>],
                tabloid_index: &BTreeMap<Vec<u8>, usize>,
                vec: &mut Vec<Rational>,
            ) {
                if ci == columns.len() {
                    // tabloid of sigma(t)
                    let mut row_of = vec![0u8; sigma.len() - 1];
                    for (r, row) in t.iter().enumerate() {
                        for &e in row {
                            row_of[(sigma[e as usize] - 1) as usize] = r as u8;
                        }
                    }
                    let idx = tabloid_index[&row_of];
                    let delta = BigRational::from(BigInt::from(sign));
                    vec[idx] += delta;
                    return;
                }
                let col = &columns[ci];
                // all permutations of this column's entries
                let perms = Perm::all(col.len());
                for p in &perms {
                    for (i, &e) in col.iter().enumerate() {
                        sigma[e as usize] = col[p.apply(i)];
                    }
                    col_rec(columns, ci + 1, sigma, sign * p.sign(), t, tabloid_index, vec);
                }
                for &e in col {
                    sigma[e as usize] = e;
                }
            }
            if k == 0 {
                vec[0] = BigRational::one();
            } else {
                col_rec(&columns, 0, &mut sigma, 1, t, &tabloid_index, &mut vec);
            }
            polytabloids.push(vec);
        }
        let dim = polytabloids.len();
        let mut a = QMatrix::zeros(n_tab, dim);
        for (j, v) in polytabloids.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                *a.at_mut(i, j) = x.clone();
            }
        }
        let solver = ColumnSolver::new(&a);

        let mut gram = QMatrix::zeros(dim, dim);
        for (i, vi) in polytabloids.iter().enumerate() {
            for (j, vj) in polytabloids.iter().enumerate() {
                let mut dot = BigRational::zero();
                for (x, y) in vi.iter().zip(vj.iter()) {
                    if !x.is_zero() && !y.is_zero() {
                        dot += x * y;
                    }
                }
                *gram.at_mut(i, j) = dot;
            }
        }
        let mut rep = SpechtRep {
            lambda: lambda.clone(),
            dim,
            gens: Vec::new(),
            gram,
            k: k as usize,
            tabloid_index,
            tabloids,
            polytabloids,
            solver,
        };
        let mut gens = Vec::new();
        for i in 0..rep.k.saturating_sub(1) {
            gens.push(rep.rho(&Perm::transposition(rep.k, i)));
        }
        rep.gens = gens;
        Ok(rep)
    }

    /// Matrix of the permutation acting on the module (left action:
    /// rho(a b) = rho(a) rho(b)).
    pub fn rho(&self, perm: &Perm) -> QMatrix {
        debug_assert_eq!(perm.degree(), self.k);
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for (col, v) in self.polytabloids.iter().enumerate() {
            // permute the tabloid vector
            let mut w = vec![BigRational::zero(); self.tabloids.len()];
            for (idx, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let t = &self.tabloids[idx];
                // value e+1 sits in row t[e]; in the permuted tabloid the
                // value perm(e)+1 sits in that row
                let mut nt = vec![0u8; t.len()];
                for (e, &r) in t.iter().enumerate() {
                    nt[perm.apply(e)] = r;
                }
                let nidx = self.tabloid_index[&nt];
                w[nidx] = x.clone();
            }
            let coeffs = self
                .solver
                .solve(&w)
                .expect("permuted polytabloid stays in the Specht span");
            for (row, c) in coeffs.into_iter().enumerate() {
                *m.at_mut(row, col) = c;
            }
        }
        m
    }
}

/// Irreducible character value chi^lambda at cycle type mu, by the
/// Murnaghan-Nakayama rule via beta-number moves.
pub fn character(lambda: &IntPartition, mu: &IntPartition) -> i64 {
    fn chi(lambda: &[u32], mu: &[u32]) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let t = mu[0] as i64;
        let rest = &mu[1..];
        let m = lambda.len();
        // beta numbers lambda_i + (m - 1 - i), distinct
        let betas: Vec<i64> = lambda
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (m - 1 - i) as i64)
            .collect();
        let mut total = 0i64;
        for (pos, &b) in betas.iter().enumerate() {
            let nb = b - t;
            if nb < 0 || betas.contains(&nb) {
                continue;
            }
            let height = betas.iter().filter(|&&x| x > nb && x < b).count();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            let mut new_betas = betas.clone();
            new_betas[pos] = nb;
            new_betas.sort_unstable_by(|a, b| b.cmp(a));
            // convert back to a partition
            let mm = new_betas.len();
            let mut nl: Vec<u32> = new_betas
                .iter()
                .enumerate()
                .map(|(i, &x)| (x - (mm - 1 - i) as i64) as u32)
                .collect();
            nl.retain(|&x| x != 0);
            total += sign * chi(&nl, rest);
        }
        total
    }
    chi(lambda.parts(), mu.parts())
}

/// Multiplicity of the Specht module of shape mu in the module induced from
/// (lambda-Specht) x (trivial of S_l), computed from characters. This is
/// the independent oracle for the Pieri rule.
pub fn induced_multiplicity(lambda: &IntPartition, l: u32, mu: &IntPartition) -> u32 {
    let k = lambda.weight();
    assert_eq!(mu.weight(), k + l);
    let mut acc = BigRational::zero();
    for alpha in partitions_of(k) {
        let chi_l = character(lambda, &alpha);
        if chi_l == 0 {
            continue;
        }
        for beta in partitions_of(l) {
            // merged cycle type
            let mut parts: Vec<u32> =
                alpha.parts().iter().chain(beta.parts().iter()).copied().collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let merged = IntPartition { parts };
            let chi_m = character(mu, &merged);
            if chi_m == 0 {
                continue;
            }
            let z =
                BigInt::from(alpha.centralizer_order()) * BigInt::from(beta.centralizer_order());
            acc += BigRational::new(BigInt::from(chi_m) * BigInt::from(chi_l), z);
        }
    }
    assert!(acc.is_integer(), "induced multiplicity must be integral");
    let v = acc.to_integer();
    assert!(!v.is_negative());
    u32::try_from(v).expect("small multiplicity")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> IntPartition {
        IntPartition::parse(s).unwrap()
    }

    #[test]
    fn partition_parsing_and_display() {
        assert_eq!(pt("3,1,1").parts(), &[3, 1, 1]);
        assert_eq!(pt("0"), IntPartition::empty());
        assert_eq!(pt(""), IntPartition::empty());
        assert_eq!(pt("2,1").to_string(), "2,1");
        assert_eq!(IntPartition::empty().to_string(), "0");
        assert!(IntPartition::parse("1,2").is_err());
    }

    #[test]
    fn hook_length_dimensions() {
        assert_eq!(pt("4").dimension(), 1);
        assert_eq!(pt("2,1").dimension(), 2);
        assert_eq!(pt("2,2").dimension(), 2);
        assert_eq!(pt("3,1").dimension(), 3);
        assert_eq!(pt("3,2,1").dimension(), 16);
    }

    #[test]
    fn dimensions_square_sum_to_factorial() {
        let mut fact: u128 = 1;
        for k in 1..=7u32 {
            fact *= k as u128;
            let total: u128 = partitions_of(k).iter().map(|l| l.dimension().pow(2)).sum();
            assert_eq!(total, fact, "at k = {k}");
        }
    }

    #[test]
    fn syt_count_matches_hook_formula() {
        for k in 0..=6u32 {
            for l in partitions_of(k) {
                assert_eq!(standard_tableaux(&l).len() as u128, l.dimension(), "at {l}");
            }
        }
    }

    #[test]
    fn branching_arrows() {
        let downs = pt("2,1").down_arrows();
        assert_eq!(downs.len(), 2);
        assert!(downs.contains(&pt("2")));
        assert!(downs.contains(&pt("1,1")));
        assert_eq!(IntPartition::empty().up_arrows(), vec![pt("1")]);
        // restriction rule at dimension level
        for k in 1..=6u32 {
            for l in partitions_of(k) {
                let sum: u128 = l.down_arrows().iter().map(|m| m.dimension()).sum();
                assert_eq!(sum, l.dimension(), "at {l}");
            }
        }
    }

    #[test]
    fn up_and_down_arrows_are_adjoint() {
        for k in 0..=5u32 {
            for a in partitions_of(k) {
                for b in partitions_of(k + 1) {
                    let up = a.up_arrows().contains(&b);
                    let down = b.down_arrows().contains(&a);
                    assert_eq!(up, down, "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn specht_rep_satisfies_coxeter_relations() {
        for k in 0..=5u32 {
            for l in partitions_of(k) {
                let rep = SpechtRep::new(&l).unwrap();
                assert_eq!(rep.dim as u128, l.dimension());
                let id = QMatrix::identity(rep.dim);
                for (i, g) in rep.gens.iter().enumerate() {
                    assert_eq!(g.mul(g), id, "s{}^2 at {l}", i + 1);
                }
                for i in 0..rep.gens.len() {
                    for j in 0..rep.gens.len() {
                        let (a, b) = (&rep.gens[i], &rep.gens[j]);
                        if i.abs_diff(j) >= 2 {
                            assert_eq!(a.mul(b), b.mul(a), "commuting at {l}");
                        }
                        if i.abs_diff(j) == 1 {
                            assert_eq!(a.mul(b).mul(a), b.mul(a).mul(b), "braid at {l} ({i},{j})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gram_form_is_invariant_and_definite() {
        for k in 1..=5u32 {
            for l in partitions_of(k) {
                let rep = SpechtRep::new(&l).unwrap();
                for g in &rep.gens {
                    assert_eq!(rep.gram.mul(g), g.transpose().mul(&rep.gram), "at {l}");
                }
                // positive definite over Q: full rank and positive diagonal
                assert_eq!(rep.gram.rank(), rep.dim);
                for i in 0..rep.dim {
                    assert!(rep.gram.at(i, i) > &BigRational::zero());
                }
            }
        }
    }

    #[test]
    fn rho_is_a_homomorphism() {
        let rep = SpechtRep::new(&pt("2,1")).unwrap();
        for a in Perm::all(3) {
            for b in Perm::all(3) {
                assert_eq!(rep.rho(&a).mul(&rep.rho(&b)), rep.rho(&a.compose(&b)));
            }
        }
    }

    #[test]
    fn horizontal_strip_examples() {
        assert!(horizontal_strip(&pt("1"), &pt("2"), 1));
        assert!(horizontal_strip(&pt("1"), &pt("1,1"), 1));
        assert!(horizontal_strip(&pt("1"), &pt("3"), 2));
        assert!(horizontal_strip(&pt("1"), &pt("2,1"), 2));
        assert!(!horizontal_strip(&pt("1"), &pt("1,1,1"), 2));
        // induction of trivial times trivial
        assert!(horizontal_strip(&IntPartition::empty(), &pt("2"), 2));
        assert!(!horizontal_strip(&IntPartition::empty(), &pt("1,1"), 2));
    }

    #[test]
    fn character_table_spot_checks() {
        // chi^{(k)} is the trivial character
        for mu in partitions_of(4) {
            assert_eq!(character(&pt("4"), &mu), 1);
        }
        // chi^{(1^k)} is the sign character
        for mu in partitions_of(4) {
            let even_cycles = mu.parts().iter().filter(|&&p| p % 2 == 0).count();
            let sign = if even_cycles % 2 == 0 { 1 } else { -1 };
            assert_eq!(character(&pt("1,1,1,1"), &mu), sign);
        }
        // standard character of S_3
        assert_eq!(character(&pt("2,1"), &pt("1,1,1")), 2);
        assert_eq!(character(&pt("2,1"), &pt("2,1")), 0);
        assert_eq!(character(&pt("2,1"), &pt("3")), -1);
    }

    #[test]
    fn characters_are_orthonormal() {
        for k in 1..=6u32 {
            let parts = partitions_of(k);
            let classes: Vec<(IntPartition, u128)> =
                parts.iter().map(|mu| (mu.clone(), mu.centralizer_order())).collect();
            for a in &parts {
                for b in &parts {
                    let mut acc = BigRational::zero();
                    for (mu, z) in &classes {
                        let prod = character(a, mu) as i128 * character(b, mu) as i128;
                        acc += BigRational::new(BigInt::from(prod), BigInt::from(*z));
                    }
                    let expected =
                        if a == b { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(acc, expected, "inner product of {a} and {b}");
                }
            }
        }
    }

    #[test]
    fn pieri_matches_character_oracle() {
        for total in 1..=5u32 {
            for k in 0..total {
                let l = total - k;
                for lambda in partitions_of(k) {
                    for mu in partitions_of(total) {
                        let oracle = induced_multiplicity(&lambda, l, &mu);
                        assert!(oracle <= 1, "Pieri multiplicities are 0/1");
                        let pieri = u32::from(horizontal_strip(&lambda, &mu, l));
                        assert_eq!(oracle, pieri, "lambda={lambda} l={l} mu={mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn perm_basics() {
        let a = Perm::from_one_line(vec![1, 2, 0]);
        assert_eq!(a.sign(), 1);
        assert_eq!(a.cycle_type(), pt("3"));
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
        assert_eq!(Perm::all(4).len(), 24);
        let t = Perm::transposition(3, 0);
        assert_eq!(t.sign(), -1);
    }
}
