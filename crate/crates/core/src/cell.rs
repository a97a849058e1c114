//! Left cells of the partial Brauer algebra, cell modules, the Specht
//! modules with exact algebra action and Gram forms, simple dimensions by
//! Gram rank, and the Brauer-subalgebra analogues.
//!
//! A left cell is determined by the blocks contained in the primed column.
//! Its diagrams factor as (half diagram, permutation of the propagating
//! slots); tensoring the cell over the slot group with a Specht module of
//! the symmetric group yields the Specht module of the diagram algebra.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_traits::Zero;

use crate::algebra::Element;
use crate::diagram::{Block, Diagram};
use crate::error::Error;
use crate::linalg::QMatrix;
use crate::scalar::{Rational, Scalar};
use crate::symmetric::{IntPartition, Perm, SpechtRep};

/// A left cell: the fixed right-column configuration plus the propagating
/// slots (primed vertices not covered by the configuration), increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDescriptor {
    n: u32,
    right_blocks: Vec<Block>,
    slots: Vec<u32>,
}

impl CellDescriptor {
    /// Build a cell from the blocks contained in the primed column.
    pub fn new(n: u32, right_blocks: Vec<Block>) -> Result<CellDescriptor, Error> {
        let mut covered = vec![false; n as usize];
        for b in &right_blocks {
            for v in b.vertices() {
                if v >= 0 || -v > n as i32 {
                    return Err(Error::InvalidDiagram(format!(
                        "cell block vertex {v} is not primed in range"
                    )));
                }
                let idx = (-v - 1) as usize;
                if covered[idx] {
                    return Err(Error::InvalidDiagram(format!("vertex {v} covered twice")));
                }
                covered[idx] = true;
            }
        }
        let slots: Vec<u32> = (1..=n).filter(|&i| !covered[(i - 1) as usize]).collect();
        let mut right_blocks = right_blocks;
        right_blocks.sort();
        Ok(CellDescriptor { n, right_blocks, slots })
    }

    /// The canonical cell: singletons at 1'..(n-k)', slots (n-k+1)'..n'.
    pub fn canonical(n: u32, k: u32) -> Result<CellDescriptor, Error> {
        if k > n {
            return Err(Error::BadIndex { index: k, n });
        }
        let right_blocks = (1..=(n - k) as i32).map(|i| Block::Single(-i)).collect();
        CellDescriptor::new(n, right_blocks)
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    /// Propagating number of the cell.
    pub fn k(&self) -> u32 {
        self.slots.len() as u32
    }

    pub fn slots(&self) -> &[u32] {
        &self.slots
    }

    pub fn right_blocks(&self) -> &[Block] {
        &self.right_blocks
    }

    /// The permutation diagram that relabels the slots by `w` and fixes the
    /// rest of the right configuration pointwise.
    pub fn slot_permutation_diagram(&self, w: &Perm) -> Diagram {
        let k = self.slots.len();
        debug_assert_eq!(w.degree(), k);
        let mut raw: Vec<Vec<i32>> = Vec::new();
        for i in 1..=self.n {
            if !self.slots.contains(&i) {
                raw.push(vec![i as i32, -(i as i32)]);
            }
        }
        for i in 0..k {
            raw.push(vec![self.slots[i] as i32, -(self.slots[w.apply(i)] as i32)]);
        }
        Diagram::new(self.n, raw).expect("slot permutation is a diagram")
    }

    /// Whether `d` lies in this cell, and if so its factorization
    /// (half diagram, slot permutation): the i-th propagating point of the
    /// half attaches to slot perm(i).
    pub fn factor(&self, d: &Diagram) -> Result<(HalfDiagram, Perm), Error> {
        if d.rank() != self.n {
            return Err(Error::RankMismatch { left: d.rank(), right: self.n });
        }
        let mut right: Vec<Block> = Vec::new();
        let mut left: Vec<Block> = Vec::new();
        let mut props: Vec<(u32, u32)> = Vec::new(); // (unprimed, primed magnitude)
        for b in d.blocks() {
            let vs: Vec<i32> = b.vertices().collect();
            if vs.iter().all(|&v| v < 0) {
                right.push(*b);
            } else if vs.iter().all(|&v| v > 0) {
                left.push(*b);
            } else {
                let up = vs.iter().find(|&&v| v > 0).copied().unwrap() as u32;
                let pm = (-vs.iter().find(|&&v| v < 0).copied().unwrap()) as u32;
                props.push((up, pm));
            }
        }
        right.sort();
        if right != self.right_blocks {
            return Err(Error::NotInCell);
        }
        props.sort();
        let prop_points: Vec<u32> = props.iter().map(|&(u, _)| u).collect();
        let mut map = Vec::with_capacity(props.len());
        for &(_, pm) in &props {
            let j = self.slots.iter().position(|&s| s == pm).ok_or(Error::NotInCell)?;
            map.push(j);
        }
        left.sort();
        let half = HalfDiagram { n: self.n, left_blocks: left, prop_points };
        Ok((half, Perm::from_one_line(map)))
    }
}

/// A left-side configuration: pairs and singletons on the unprimed column
/// plus an increasing list of propagating endpoints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfDiagram {
    n: u32,
    left_blocks: Vec<Block>,
    prop_points: Vec<u32>,
}

impl HalfDiagram {
    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.prop_points.len() as u32
    }

    pub fn prop_points(&self) -> &[u32] {
        &self.prop_points
    }

    pub fn left_blocks(&self) -> &[Block] {
        &self.left_blocks
    }

    /// Number of unprimed singletons.
    pub fn singleton_count(&self) -> u32 {
        self.left_blocks.iter().filter(|b| matches!(b, Block::Single(_))).count() as u32
    }

    /// True when the unprimed vertex `v` is a singleton.
    pub fn has_singleton(&self, v: u32) -> bool {
        self.left_blocks.contains(&Block::Single(v as i32))
    }

    /// True when `v` is a propagating point.
    pub fn is_prop_point(&self, v: u32) -> bool {
        self.prop_points.contains(&v)
    }

    /// The noncrossing representative in a cell: propagating points joined
    /// to slots in increasing order.
    pub fn diagram(&self, cell: &CellDescriptor) -> Diagram {
        debug_assert_eq!(self.k(), cell.k());
        let mut raw: Vec<Vec<i32>> =
            self.left_blocks.iter().map(|b| b.vertices().collect()).collect();
        raw.extend(cell.right_blocks.iter().map(|b| b.vertices().collect::<Vec<i32>>()));
        for (p, s) in self.prop_points.iter().zip(cell.slots.iter()) {
            raw.push(vec![*p as i32, -(*s as i32)]);
        }
        Diagram::new(self.n, raw).expect("half diagram data is a partition")
    }
}

/// All half diagrams with exactly `k` propagating points, deterministic
/// order. When `brauer_only` the non-propagating part must be a perfect
/// matching.
pub fn half_diagrams(n: u32, k: u32, brauer_only: bool) -> Vec<HalfDiagram> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    fn matchings(
        rest: &[u32],
        used: &mut Vec<bool>,
        blocks: &mut Vec<Block>,
        brauer_only: bool,
        emit: &mut impl FnMut(&[Block]),
    ) {
        let Some(first) = used.iter().position(|u| !u) else {
            emit(blocks);
            return;
        };
        used[first] = true;
        if !brauer_only {
            blocks.push(Block::Single(rest[first] as i32));
            matchings(rest, used, blocks, brauer_only, emit);
            blocks.pop();
        }
        for j in first + 1..rest.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            blocks.push(Block::pair(rest[first] as i32, rest[j] as i32));
            matchings(rest, used, blocks, brauer_only, emit);
            blocks.pop();
            used[j] = false;
        }
        used[first] = false;
    }
    fn choose(
        n: u32,
        k: u32,
        start: u32,
        points: &mut Vec<u32>,
        brauer_only: bool,
        out: &mut Vec<HalfDiagram>,
    ) {
        if points.len() == k as usize {
            let rest: Vec<u32> = (1..=n).filter(|v| !points.contains(v)).collect();
            let mut blocks = Vec::new();
            let points_ref = points.clone();
            matchings(&rest, &mut vec![false; rest.len()], &mut blocks, brauer_only, &mut |bl| {
                let mut b = bl.to_vec();
                b.sort();
                out.push(HalfDiagram { n, left_blocks: b, prop_points: points_ref.clone() });
            });
            return;
        }
        for v in start..=n {
            points.push(v);
            choose(n, k, v + 1, points, brauer_only, out);
            points.pop();
        }
    }
    let mut points = Vec::new();
    choose(n, k, 1, &mut points, brauer_only, &mut out);
    out
}

/// dim Delta(n, lambda) = (number of half diagrams) * f^lambda.
pub fn delta_dim(n: u32, lambda: &IntPartition) -> u128 {
    let k = lambda.weight();
    if k > n {
        return 0;
    }
    half_diagrams(n, k, false).len() as u128 * lambda.dimension()
}

/// dim of the Brauer-algebra Specht module: zero unless n - k is even,
/// otherwise C(n,k) * (n-k-1)!! * f^lambda.
pub fn brauer_delta_dim(n: u32, lambda: &IntPartition) -> u128 {
    let k = lambda.weight();
    if k > n || (n - k) % 2 != 0 {
        return 0;
    }
    let mut binom: u128 = 1;
    for i in 0..k as u128 {
        binom = binom * (n as u128 - i) / (i + 1);
    }
    let mut dfact: u128 = 1;
    let mut i = 1u128;
    while i < (n - k) as u128 {
        dfact *= i;
        i += 2;
    }
    binom * dfact * lambda.dimension()
}

/// The Specht module of the diagram algebra: cell half-data tensored with a
/// symmetric-group Specht module, with exact action matrices.
pub struct DeltaModule {
    pub n: u32,
    pub lambda: IntPartition,
    pub cell: CellDescriptor,
    pub halves: Vec<HalfDiagram>,
    pub rep: SpechtRep,
    half_index: BTreeMap<HalfDiagram, usize>,
    rho_cache: Mutex<BTreeMap<Perm, QMatrix>>,
}

impl DeltaModule {
    pub fn new(n: u32, lambda: &IntPartition) -> Result<DeltaModule, Error> {
        let k = lambda.weight();
        if k > n {
            return Err(Error::InvalidPartition(format!("weight {k} exceeds rank {n}")));
        }
        let halves = half_diagrams(n, k, false);
        let half_index =
            halves.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
        Ok(DeltaModule {
            n,
            lambda: lambda.clone(),
            cell: CellDescriptor::canonical(n, k)?,
            halves,
            rep: SpechtRep::new(lambda)?,
            half_index,
            rho_cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn dim(&self) -> usize {
        self.halves.len() * self.rep.dim
    }

    /// Basis index of (half diagram hi, Specht vector i).
    pub fn basis_index(&self, half: usize, vec: usize) -> usize {
        half * self.rep.dim + vec
    }

    fn rho(&self, perm: &Perm) -> QMatrix {
        let mut cache = self.rho_cache.lock().expect("rho cache poisoned");
        if let Some(m) = cache.get(perm) {
            return m.clone();
        }
        let m = self.rep.rho(perm);
        cache.insert(perm.clone(), m.clone());
        m
    }

    /// Exact symbolic action matrix. Entry (r, c) is the coefficient of
    /// basis vector r in the image of basis vector c.
    pub fn act(&self, x: &Element) -> Result<Vec<Vec<Scalar>>, Error> {
        if x.rank() != self.n {
            return Err(Error::RankMismatch { left: x.rank(), right: self.n });
        }
        let dim = self.dim();
        let f = self.rep.dim;
        let mut m = vec![vec![Scalar::zero(); dim]; dim];
        for (hi, h) in self.halves.iter().enumerate() {
            let dh = h.diagram(&self.cell);
            for (d, coeff) in x.terms() {
                let r = d.compose(&dh)?;
                let Ok((h2, perm)) = self.cell.factor(&r.diagram) else {
                    continue; // the product fell out of the cell
                };
                let h2i = self.half_index[&h2];
                let c = coeff * &Scalar::straightening(r.loops, r.strings);
                let rho = self.rho(&perm.inverse());
                for i in 0..f {
                    for j in 0..f {
                        let e = rho.at(i, j);
                        if e.is_zero() {
                            continue;
                        }
                        let ei = crate::scalar::rational_to_int(e)
                            .expect("Specht action matrices are integral");
                        m[self.basis_index(h2i, i)][self.basis_index(hi, j)] +=
                            &(&c * &Scalar::monomial(0, 0, ei));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Action matrix evaluated at a rational parameter point.
    pub fn act_eval(
        &self,
        x: &Element,
        delta: &Rational,
        delta_prime: &Rational,
    ) -> Result<QMatrix, Error> {
        let sym = self.act(x)?;
        let dim = self.dim();
        let mut m = QMatrix::zeros(dim, dim);
        for (i, row) in sym.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                if !s.is_zero() {
                    *m.at_mut(i, j) = s.evaluate(delta, delta_prime)?;
                }
            }
        }
        Ok(m)
    }

    fn gram_block(
        &self,
        hi: usize,
        hj: usize,
    ) -> Result<Option<(Scalar, QMatrix)>, Error> {
        let left = self.halves[hi].diagram(&self.cell).star();
        let r = left.compose(&self.halves[hj].diagram(&self.cell))?;
        let Ok((_, perm)) = self.cell.factor(&r.diagram) else {
            return Ok(None);
        };
        let c = Scalar::straightening(r.loops, r.strings);
        let rho = self.rho(&perm.inverse());
        Ok(Some((c, self.rep.gram.mul(&rho))))
    }

    /// Symbolic Gram matrix of the cellular bilinear form. Entries lie in
    /// Z[d, dp]: no decorated elements are involved, so no negative dp
    /// powers occur and the dp = 0 specialization is well defined.
    pub fn gram(&self) -> Result<Vec<Vec<Scalar>>, Error> {
        const SYMBOLIC_DIM_BOUND: usize = 60;
        if self.dim() > SYMBOLIC_DIM_BOUND {
            return Err(Error::TooLarge(format!(
                "symbolic Gram of dimension {} (bound {SYMBOLIC_DIM_BOUND})",
                self.dim()
            )));
        }
        let dim = self.dim();
        let f = self.rep.dim;
        let mut g = vec![vec![Scalar::zero(); dim]; dim];
        for hi in 0..self.halves.len() {
            for hj in 0..self.halves.len() {
                let Some((c, twisted)) = self.gram_block(hi, hj)? else {
                    continue;
                };
                for i in 0..f {
                    for j in 0..f {
                        let e = twisted.at(i, j);
                        if e.is_zero() {
                            continue;
                        }
                        let ei = crate::scalar::rational_to_int(e)
                            .expect("twisted Gram entries are integral");
                        g[self.basis_index(hi, i)][self.basis_index(hj, j)] =
                            &c * &Scalar::monomial(0, 0, ei);
                    }
                }
            }
        }
        Ok(g)
    }

    /// Gram matrix evaluated at a rational parameter point (any dimension).
    pub fn gram_eval(&self, delta: &Rational, delta_prime: &Rational) -> Result<QMatrix, Error> {
        let dim = self.dim();
        let f = self.rep.dim;
        let mut g = QMatrix::zeros(dim, dim);
        for hi in 0..self.halves.len() {
            for hj in 0..self.halves.len() {
                let Some((c, twisted)) = self.gram_block(hi, hj)? else {
                    continue;
                };
                let cv = c.evaluate(delta, delta_prime)?;
                if cv.is_zero() {
                    continue;
                }
                for i in 0..f {
                    for j in 0..f {
                        let e = twisted.at(i, j);
                        if !e.is_zero() {
                            *g.at_mut(self.basis_index(hi, i), self.basis_index(hj, j)) =
                                &cv * e;
                        }
                    }
                }
            }
        }
        Ok(g)
    }
}

/// Ranks of all evaluated Gram matrices: the dimension of the simple head
/// per shape (rank zero means the shape indexes no simple module).
pub fn simple_dims(
    n: u32,
    delta: &Rational,
    delta_prime: &Rational,
) -> Result<BTreeMap<IntPartition, usize>, Error> {
    let mut out = BTreeMap::new();
    for k in 0..=n {
        for lambda in crate::symmetric::partitions_of(k) {
            let m = DeltaModule::new(n, &lambda)?;
            let g = m.gram_eval(delta, delta_prime)?;
            out.insert(lambda, g.rank());
        }
    }
    Ok(out)
}

/// All diagrams of a cell in (half, permutation) order; the diagram basis
/// of the regular cell module.
pub fn cell_members(cell: &CellDescriptor) -> Vec<Diagram> {
    let halves = half_diagrams(cell.rank(), cell.k(), false);
    let perms = Perm::all(cell.k() as usize);
    let mut out = Vec::new();
    for h in &halves {
        let base = h.diagram(cell);
        for w in &perms {
            let r = base.compose(&cell.slot_permutation_diagram(w)).expect("slot relabeling");
            debug_assert_eq!((r.loops, r.strings), (0, 0));
            out.push(r.diagram);
        }
    }
    out
}

/// Action matrix of `x` on the regular cell module (diagram basis) at a
/// parameter point: x . d = (scalar) dhat when dhat stays in the cell,
/// zero otherwise.
pub fn act_on_cell_eval(
    x: &Element,
    cell: &CellDescriptor,
    delta: &Rational,
    delta_prime: &Rational,
) -> Result<QMatrix, Error> {
    let basis = cell_members(cell);
    let index: BTreeMap<Diagram, usize> =
        basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
    let mut m = QMatrix::zeros(basis.len(), basis.len());
    for (j, d) in basis.iter().enumerate() {
        for (t, coeff) in x.terms() {
            let r = t.compose(d)?;
            if cell.factor(&r.diagram).is_err() {
                continue;
            }
            let c = (coeff * &Scalar::straightening(r.loops, r.strings))
                .evaluate(delta, delta_prime)?;
            let i = index[&r.diagram];
            *m.at_mut(i, j) += c;
        }
    }
    Ok(m)
}

/// Checks that the half-data bijection between two cells with equal
/// propagating number intertwines the action of every diagram.
pub fn cell_isomorphism_check(
    a: &CellDescriptor,
    b: &CellDescriptor,
    delta: &Rational,
    delta_prime: &Rational,
) -> Result<bool, Error> {
    if a.rank() != b.rank() || a.k() != b.k() {
        return Err(Error::InvalidDiagram("cells are not comparable".into()));
    }
    for x in Diagram::enumerate(a.rank(), false)? {
        let xe = Element::from_diagram(x);
        let ma = act_on_cell_eval(&xe, a, delta, delta_prime)?;
        let mb = act_on_cell_eval(&xe, b, delta, delta_prime)?;
        if ma != mb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Determinant of a small symbolic matrix by permutation expansion.
pub fn scalar_matrix_det(m: &[Vec<Scalar>]) -> Result<Scalar, Error> {
    let n = m.len();
    if n > 8 {
        return Err(Error::TooLarge(format!("symbolic determinant of dimension {n}")));
    }
    let mut det = Scalar::zero();
    for perm in Perm::all(n) {
        let mut term = Scalar::from_int(perm.sign() as i64);
        let mut vanishes = false;
        for i in 0..n {
            let e = &m[i][perm.apply(i)];
            if e.is_zero() {
                vanishes = true;
                break;
            }
            term = &term * e;
        }
        if !vanishes {
            det += &term;
        }
    }
    Ok(det)
}

#[cfg(test)]
pub(crate) fn smat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if !bkj.is_zero() {
                    out[i][j] += &(&a[i][k] * bkj);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::generators;
    use crate::parse_rational;
    use crate::symmetric::partitions_of;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn pt(s: &str) -> IntPartition {
        IntPartition::parse(s).unwrap()
    }

    #[test]
    fn canonical_cell_shapes() {
        let c = CellDescriptor::canonical(2, 2).unwrap();
        assert!(c.right_blocks().is_empty());
        assert_eq!(c.slots(), &[1, 2]);
        let c = CellDescriptor::canonical(3, 1).unwrap();
        assert_eq!(c.right_blocks().len(), 2);
        assert_eq!(c.slots(), &[3]);
        assert!(CellDescriptor::canonical(2, 3).is_err());
    }

    #[test]
    fn cell_membership_count() {
        // the (n,k) = (3,1) canonical cell contains 6 diagrams
        let c = CellDescriptor::canonical(3, 1).unwrap();
        let members: Vec<Diagram> = Diagram::enumerate(3, false)
            .unwrap()
            .into_iter()
            .filter(|d| c.factor(d).is_ok())
            .collect();
        assert_eq!(members.len(), 6);
        // and the generated member list agrees with the filter
        let mut generated = cell_members(&c);
        let mut listed = members;
        generated.sort();
        listed.sort();
        assert_eq!(generated, listed);
    }

    #[test]
    fn half_diagram_counts() {
        let counts =
            |n: u32| -> Vec<usize> { (0..=n).map(|k| half_diagrams(n, k, false).len()).collect() };
        assert_eq!(counts(2), vec![2, 2, 1]);
        assert_eq!(counts(3), vec![4, 6, 3, 1]);
    }

    #[test]
    fn cell_dimension_identity() {
        // sum over lambda of dim Delta(n,lambda)^2 equals |R_n|
        for n in 1..=4u32 {
            let mut total: u128 = 0;
            for k in 0..=n {
                for lambda in partitions_of(k) {
                    total += delta_dim(n, &lambda).pow(2);
                }
            }
            assert_eq!(total, Diagram::count(n, false), "at n = {n}");
        }
    }

    #[test]
    fn brauer_half_counts_match_formula() {
        for n in 1..=4u32 {
            for k in 0..=n {
                let listed = half_diagrams(n, k, true).len() as u128;
                if (n - k) % 2 != 0 {
                    assert_eq!(listed, 0);
                    continue;
                }
                let lambda =
                    if k == 0 { IntPartition::empty() } else { IntPartition::new(vec![k]).unwrap() };
                assert_eq!(listed, brauer_delta_dim(n, &lambda), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn factor_identity_and_transposition() {
        let c = CellDescriptor::canonical(2, 2).unwrap();
        let (h, p) = c.factor(&Diagram::identity(2)).unwrap();
        assert_eq!(h.prop_points(), &[1, 2]);
        assert_eq!(p, Perm::identity(2));
        let s1 = generators::s(2, 1).unwrap();
        let (_, p) = c.factor(&s1).unwrap();
        assert_eq!(p, Perm::transposition(2, 0));
        // wrong cell
        let c20 = CellDescriptor::canonical(2, 0).unwrap();
        assert!(c20.factor(&s1).is_err());
    }

    #[test]
    fn factor_right_action_equivariance() {
        for n in 1..=3u32 {
            for k in 0..=n {
                let cell = CellDescriptor::canonical(n, k).unwrap();
                for d in cell_members(&cell) {
                    let (h, p) = cell.factor(&d).unwrap();
                    for w in Perm::all(k as usize) {
                        let dw = d.compose(&cell.slot_permutation_diagram(&w)).unwrap();
                        assert_eq!((dw.loops, dw.strings), (0, 0));
                        let (h2, p2) = cell.factor(&dw.diagram).unwrap();
                        assert_eq!(h2, h);
                        assert_eq!(p2, w.compose(&p));
                    }
                }
            }
        }
    }

    #[test]
    fn act_identity_is_identity() {
        for (n, lam) in [(2u32, "1"), (3, "2"), (3, "1,1"), (3, "0")] {
            let m = DeltaModule::new(n, &pt(lam)).unwrap();
            let a = m.act(&Element::one(n)).unwrap();
            for (i, row) in a.iter().enumerate() {
                for (j, entry) in row.iter().enumerate() {
                    if i == j {
                        assert!(entry.is_one());
                    } else {
                        assert!(entry.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn eps_acts_by_delta_prime_on_rank_one_empty_shape() {
        let m = DeltaModule::new(1, &IntPartition::empty()).unwrap();
        assert_eq!(m.dim(), 1);
        let eps = Element::from_diagram(generators::eps(1, 1).unwrap());
        let a = m.act(&eps).unwrap();
        assert_eq!(a[0][0], Scalar::delta_prime());
    }

    #[test]
    fn module_axiom_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=2u32 {
            let all = Diagram::enumerate(n, false).unwrap();
            for k in 0..=n {
                for lambda in partitions_of(k) {
                    let m = DeltaModule::new(n, &lambda).unwrap();
                    for _ in 0..30 {
                        let x = Element::from_diagram(all[rng.gen_range(0..all.len())].clone());
                        let y = Element::from_diagram(all[rng.gen_range(0..all.len())].clone());
                        let xy = x.multiply(&y).unwrap();
                        let lhs = m.act(&xy).unwrap();
                        let rhs = smat_mul(&m.act(&x).unwrap(), &m.act(&y).unwrap());
                        assert_eq!(lhs, rhs, "n={n} lambda={lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn gram_small_examples() {
        let m = DeltaModule::new(1, &IntPartition::empty()).unwrap();
        let g = m.gram().unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0][0], Scalar::delta_prime());
        let m = DeltaModule::new(1, &pt("1")).unwrap();
        let g = m.gram().unwrap();
        assert!(g[0][0].is_one());
    }

    #[test]
    fn top_cell_gram_is_specht_gram() {
        for n in 2..=3u32 {
            for lambda in partitions_of(n) {
                let m = DeltaModule::new(n, &lambda).unwrap();
                let g = m.gram().unwrap();
                for i in 0..m.dim() {
                    for j in 0..m.dim() {
                        let expected = crate::scalar::rational_to_int(m.rep.gram.at(i, j)).unwrap();
                        assert_eq!(g[i][j], Scalar::monomial(0, 0, expected));
                    }
                }
            }
        }
    }

    #[test]
    fn gram_is_symmetric_and_contravariant() {
        for n in 1..=2u32 {
            for k in 0..=n {
                for lambda in partitions_of(k) {
                    let m = DeltaModule::new(n, &lambda).unwrap();
                    let g = m.gram().unwrap();
                    for i in 0..m.dim() {
                        for j in 0..m.dim() {
                            assert_eq!(g[i][j], g[j][i], "symmetry n={n} {lambda}");
                        }
                    }
                    // G act(x) = act(star x)^T G for generator diagrams
                    let mut gens: Vec<Element> = vec![];
                    for i in 1..n {
                        gens.push(Element::from_diagram(generators::s(n, i).unwrap()));
                        gens.push(Element::from_diagram(generators::p(n, i).unwrap()));
                    }
                    for i in 1..=n {
                        gens.push(Element::from_diagram(generators::eps(n, i).unwrap()));
                    }
                    for x in &gens {
                        let lhs = smat_mul(&g, &m.act(x).unwrap());
                        let ax = m.act(&x.star()).unwrap();
                        let dim = m.dim();
                        let mut axt = vec![vec![Scalar::zero(); dim]; dim];
                        for (i, row) in ax.iter().enumerate() {
                            for (j, e) in row.iter().enumerate() {
                                axt[j][i] = e.clone();
                            }
                        }
                        let rhs = smat_mul(&axt, &g);
                        assert_eq!(lhs, rhs, "contravariance n={n} {lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn generic_gram_ranks_are_full() {
        let delta = q("13/7");
        let dp = q("5/3");
        for n in 1..=2u32 {
            for (lambda, rank) in simple_dims(n, &delta, &dp).unwrap() {
                assert_eq!(rank as u128, delta_dim(n, &lambda), "n={n} {lambda}");
            }
        }
    }

    #[test]
    fn semisimple_rank_sum_recovers_algebra_dimension() {
        let delta = q("13/7");
        let dp = q("5/3");
        for n in 1..=3u32 {
            let mut total: u128 = 0;
            for (lambda, rank) in simple_dims(n, &delta, &dp).unwrap() {
                total += rank as u128 * delta_dim(n, &lambda);
            }
            assert_eq!(total, Diagram::count(n, false));
        }
    }

    #[test]
    fn endomorphism_truncation_has_rank_k_factorial() {
        let delta = q("13/7");
        let dp = q("5/3");
        for n in 1..=3u32 {
            for k in 0..=n {
                let cell = CellDescriptor::canonical(n, k).unwrap();
                let a = n - k;
                let xs: Vec<u32> = (1..=a).collect();
                let eps = Element::from_diagram(generators::u_x(n, &xs).unwrap())
                    .scale(&Scalar::monomial(0, -(a as i32), BigInt::from(1)));
                let m = act_on_cell_eval(&eps, &cell, &delta, &dp).unwrap();
                let factorial: usize = (1..=k as usize).product();
                assert_eq!(m.rank(), factorial, "n={n} k={k}");
                // the truncation is idempotent on the module
                assert_eq!(m.mul(&m), m);
            }
        }
    }

    #[test]
    fn cells_with_equal_propagating_number_are_isomorphic() {
        let delta = q("13/7");
        let dp = q("5/3");
        let a = CellDescriptor::canonical(3, 1).unwrap();
        let b = CellDescriptor::new(3, vec![Block::pair(-1, -2)]).unwrap();
        assert_eq!(b.k(), 1);
        assert!(cell_isomorphism_check(&a, &b, &delta, &dp).unwrap());
        let a = CellDescriptor::canonical(2, 0).unwrap();
        let b = CellDescriptor::new(2, vec![Block::pair(-1, -2)]).unwrap();
        assert!(cell_isomorphism_check(&a, &b, &delta, &dp).unwrap());
    }

    #[test]
    fn gram_eval_matches_symbolic() {
        let delta = q("3");
        let dp = q("1/2");
        for (n, lam) in [(2u32, "0"), (2, "1"), (3, "1")] {
            let m = DeltaModule::new(n, &pt(lam)).unwrap();
            let sym = m.gram().unwrap();
            let ev = m.gram_eval(&delta, &dp).unwrap();
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    assert_eq!(sym[i][j].evaluate(&delta, &dp).unwrap(), *ev.at(i, j));
                }
            }
        }
    }
}
