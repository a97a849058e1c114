//! Partial Brauer diagrams: partitions of {1..n, 1'..n'} into pairs and
//! singletons, with composition, tensor product, the star involution,
//! statistics and enumeration.
//!
//! A vertex is a signed integer: `i > 0` is the unprimed vertex `i`, `-i` is
//! the primed vertex `i'`. Sign flip implements the star reflection.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Total order on vertices: unprimed 1..n first, then primed 1'..n'.
#[inline]
fn vertex_key(v: i32) -> (bool, i32) {
    (v < 0, v.abs())
}

/// One block of a partial Brauer partition: a singleton or a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    Single(i32),
    Pair(i32, i32),
}

impl Block {
    pub fn pair(a: i32, b: i32) -> Block {
        debug_assert_ne!(a, b);
        if vertex_key(a) <= vertex_key(b) {
            Block::Pair(a, b)
        } else {
            Block::Pair(b, a)
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = i32> {
        let (a, b) = match *self {
            Block::Single(a) => (a, None),
            Block::Pair(a, b) => (a, Some(b)),
        };
        std::iter::once(a).chain(b)
    }

    pub fn is_propagating(&self) -> bool {
        matches!(*self, Block::Pair(a, b) if (a > 0) != (b > 0))
    }

    fn key(&self) -> [(bool, i32); 2] {
        match *self {
            // a singleton sorts like the pair of its vertex with "+infinity"
            Block::Single(a) => [vertex_key(a), (true, i32::MAX)],
            Block::Pair(a, b) => [vertex_key(a), vertex_key(b)],
        }
    }
}

impl PartialOrd for Block {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Block {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// A partial Brauer diagram of rank `n`, stored in canonical form: blocks
/// sorted by their minimal vertex, pairs sorted internally.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: u32,
    blocks: Vec<Block>,
}

/// Outcome of straightening a juxtaposition: `left * right` equals
/// `d^loops * dp^strings` times `diagram`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposeResult {
    pub loops: u32,
    pub strings: u32,
    pub diagram: Diagram,
}

/// Propagating number, defect and parity of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stats {
    pub propagating: u32,
    pub defect: u32,
    pub even: bool,
}

impl Diagram {
    /// Build a diagram from raw blocks, validating the partition property.
    pub fn new(n: u32, raw: Vec<Vec<i32>>) -> Result<Diagram, Error> {
        let mut blocks = Vec::with_capacity(raw.len());
        for b in &raw {
            match b.len() {
                1 => blocks.push(Block::Single(b[0])),
                2 => {
                    if b[0] == b[1] {
                        return Err(Error::InvalidDiagram(format!("repeated vertex {}", b[0])));
                    }
                    blocks.push(Block::pair(b[0], b[1]));
                }
                k => {
                    return Err(Error::InvalidDiagram(format!(
                        "block of size {k}; only singletons and pairs are allowed"
                    )))
                }
            }
        }
        let mut seen = vec![false; 2 * n as usize];
        for blk in &blocks {
            for v in blk.vertices() {
                let m = v.abs();
                if m < 1 || m as u32 > n {
                    return Err(Error::InvalidDiagram(format!(
                        "vertex {v} out of range for rank {n}"
                    )));
                }
                let idx = if v > 0 {
                    (m - 1) as usize
                } else {
                    (n as i32 + m - 1) as usize
                };
                if seen[idx] {
                    return Err(Error::InvalidDiagram(format!("vertex {v} covered twice")));
                }
                seen[idx] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidDiagram("not all vertices covered".into()));
        }
        blocks.sort();
        Ok(Diagram { n, blocks })
    }

    fn from_blocks_unchecked(n: u32, mut blocks: Vec<Block>) -> Diagram {
        blocks.sort();
        Diagram { n, blocks }
    }

    /// The empty rank-0 diagram, the unit for the tensor product.
    pub fn empty() -> Diagram {
        Diagram { n: 0, blocks: Vec::new() }
    }

    pub fn identity(n: u32) -> Diagram {
        let blocks = (1..=n as i32).map(|i| Block::pair(i, -i)).collect();
        Diagram::from_blocks_unchecked(n, blocks)
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The block partner of vertex `v`, if `v` lies in a pair.
    pub fn partner(&self, v: i32) -> Option<i32> {
        for b in &self.blocks {
            match *b {
                Block::Single(a) if a == v => return None,
                Block::Pair(a, b2) if a == v => return Some(b2),
                Block::Pair(a, b2) if b2 == v => return Some(a),
                _ => {}
            }
        }
        None
    }

    pub fn is_brauer(&self) -> bool {
        self.blocks.iter().all(|b| matches!(b, Block::Pair(..)))
    }

    pub fn stats(&self) -> Stats {
        let propagating = self.blocks.iter().filter(|b| b.is_propagating()).count() as u32;
        let defect = self
            .blocks
            .iter()
            .filter(|b| matches!(b, Block::Single(_)))
            .count() as u32;
        Stats {
            propagating,
            defect,
            even: (self.n - propagating) % 2 == 0,
        }
    }

    /// Star involution: reflection in a vertical line (swap primed/unprimed).
    pub fn star(&self) -> Diagram {
        let blocks = self
            .blocks
            .iter()
            .map(|b| match *b {
                Block::Single(a) => Block::Single(-a),
                Block::Pair(a, b2) => Block::pair(-a, -b2),
            })
            .collect();
        Diagram::from_blocks_unchecked(self.n, blocks)
    }

    /// Tensor product: `other` is placed below `self`, vertices shifted.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        let shift = self.n as i32;
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().map(|b| match *b {
            Block::Single(a) => Block::Single(if a > 0 { a + shift } else { a - shift }),
            Block::Pair(a, b2) => Block::pair(
                if a > 0 { a + shift } else { a - shift },
                if b2 > 0 { b2 + shift } else { b2 - shift },
            ),
        }));
        Diagram::from_blocks_unchecked(self.n + other.n, blocks)
    }

    /// Juxtapose `self | right` and straighten, counting removed loops and
    /// open strings.
    pub fn compose(&self, right: &Diagram) -> Result<ComposeResult, Error> {
        if self.n != right.n {
            return Err(Error::RankMismatch { left: self.n, right: right.n });
        }
        let n = self.n as usize;
        // node ids: 0..n left exterior, n..2n equator, 2n..3n right exterior
        let total = 3 * n;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
        let mut sing: Vec<u8> = vec![0; total];
        let left_node = |v: i32| -> usize {
            if v > 0 {
                (v - 1) as usize
            } else {
                n + (-v - 1) as usize
            }
        };
        let right_node = |v: i32| -> usize {
            if v > 0 {
                n + (v - 1) as usize
            } else {
                2 * n + (-v - 1) as usize
            }
        };
        for b in &self.blocks {
            match *b {
                Block::Single(a) => sing[left_node(a)] += 1,
                Block::Pair(a, c) => {
                    let (x, y) = (left_node(a), left_node(c));
                    adj[x].push(y);
                    adj[y].push(x);
                }
            }
        }
        for b in &right.blocks {
            match *b {
                Block::Single(a) => sing[right_node(a)] += 1,
                Block::Pair(a, c) => {
                    let (x, y) = (right_node(a), right_node(c));
                    adj[x].push(y);
                    adj[y].push(x);
                }
            }
        }
        let mut loops = 0u32;
        let mut strings = 0u32;
        let mut blocks: Vec<Block> = Vec::new();
        let mut visited = vec![false; total];
        for start in 0..total {
            if visited[start] {
                continue;
            }
            // walk the component
            let mut stack = vec![start];
            visited[start] = true;
            let mut ext: Vec<i32> = Vec::new();
            let mut sing_ends = 0u32;
            let mut all_degree_two = true;
            while let Some(u) = stack.pop() {
                if u < n {
                    ext.push(u as i32 + 1);
                    all_degree_two = false;
                } else if u >= 2 * n {
                    ext.push(-((u - 2 * n) as i32 + 1));
                    all_degree_two = false;
                } else {
                    sing_ends += u32::from(sing[u]);
                    if adj[u].len() != 2 {
                        all_degree_two = false;
                    }
                }
                for &w in &adj[u] {
                    if !visited[w] {
                        visited[w] = true;
                        stack.push(w);
                    }
                }
            }
            if all_degree_two {
                loops += 1;
                continue;
            }
            match (ext.len(), sing_ends) {
                (2, 0) => blocks.push(Block::pair(ext[0], ext[1])),
                (1, s) if s <= 1 => blocks.push(Block::Single(ext[0])),
                (0, 2) => strings += 1,
                other => unreachable!("impossible component shape {other:?}"),
            }
        }
        Ok(ComposeResult {
            loops,
            strings,
            diagram: Diagram::from_blocks_unchecked(self.n, blocks),
        })
    }

    /// All partial Brauer partitions of rank `n` (pair partitions only when
    /// `brauer_only`), in a deterministic order.
    pub fn enumerate(n: u32, brauer_only: bool) -> Result<Vec<Diagram>, Error> {
        Diagram::enumerate_bounded(n, brauer_only, DEFAULT_ENUMERATE_BOUND)
    }

    pub fn enumerate_bounded(n: u32, brauer_only: bool, bound: u32) -> Result<Vec<Diagram>, Error> {
        if n > bound {
            return Err(Error::BoundExceeded { n, bound });
        }
        // vertices in canonical order
        let order: Vec<i32> = (1..=n as i32).chain((1..=n as i32).map(|i| -i)).collect();
        let mut out = Vec::new();
        let mut covered = vec![false; order.len()];
        let mut blocks: Vec<Block> = Vec::new();
        fn rec(
            order: &[i32],
            covered: &mut Vec<bool>,
            blocks: &mut Vec<Block>,
            brauer_only: bool,
            n: u32,
            out: &mut Vec<Diagram>,
        ) {
            let Some(first) = covered.iter().position(|c| !c) else {
                out.push(Diagram::from_blocks_unchecked(n, blocks.clone()));
                return;
            };
            covered[first] = true;
            if !brauer_only {
                blocks.push(Block::Single(order[first]));
                rec(order, covered, blocks, brauer_only, n, out);
                blocks.pop();
            }
            for j in first + 1..order.len() {
                if covered[j] {
                    continue;
                }
                covered[j] = true;
                blocks.push(Block::pair(order[first], order[j]));
                rec(order, covered, blocks, brauer_only, n, out);
                blocks.pop();
                covered[j] = false;
            }
            covered[first] = false;
        }
        rec(&order, &mut covered, &mut blocks, brauer_only, n, &mut out);
        Ok(out)
    }

    /// Number of partial Brauer partitions of `n`, by the involution
    /// recurrence I(m) = I(m-1) + (m-1) I(m-2) on m = 2n points.
    pub fn count(n: u32, brauer_only: bool) -> u128 {
        let m = 2 * n as u128;
        if brauer_only {
            // (2n-1)!! = 1 * 3 * ... * (2n-1), with (-1)!! = 1
            let mut acc: u128 = 1;
            let mut i: u128 = 1;
            while i < m {
                acc *= i;
                i += 2;
            }
            return acc;
        }
        let mut prev2: u128 = 1; // I(0)
        let mut prev: u128 = 1; // I(1)
        if m == 0 {
            return 1;
        }
        for i in 2..=m {
            let cur = prev + (i - 1) * prev2;
            prev2 = prev;
            prev = cur;
        }
        prev
    }

    /// Parse the text format `1 2 | 1' | 2' 3' | 3`. The rank is inferred
    /// from the largest vertex label; every vertex must be covered.
    pub fn parse(s: &str) -> Result<Diagram, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Diagram::empty());
        }
        let mut raw: Vec<Vec<i32>> = Vec::new();
        let mut n: u32 = 0;
        for part in s.split('|') {
            let mut block = Vec::new();
            for tok in part.split_whitespace() {
                let (digits, primed) = match tok.strip_suffix('\'') {
                    Some(d) => (d, true),
                    None => (tok, false),
                };
                let m: u32 = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex `{tok}`")))?;
                if m == 0 {
                    return Err(Error::Parse("vertex labels start at 1".into()));
                }
                n = n.max(m);
                block.push(if primed { -(m as i32) } else { m as i32 });
            }
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            raw.push(block);
        }
        Diagram::new(n, raw).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_v = |v: i32| {
            if v > 0 {
                format!("{v}")
            } else {
                format!("{}'", -v)
            }
        };
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| match *b {
                Block::Single(a) => fmt_v(a),
                Block::Pair(a, c) => format!("{} {}", fmt_v(a), fmt_v(c)),
            })
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            n: u32,
            blocks: Vec<Vec<i32>>,
        }
        let raw = Raw {
            n: self.n,
            blocks: self.blocks.iter().map(|b| b.vertices().collect()).collect(),
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: u32,
            blocks: Vec<Vec<i32>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Diagram::new(raw.n, raw.blocks).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Default cap on enumeration rank; override with `enumerate_bounded`.
pub const DEFAULT_ENUMERATE_BOUND: u32 = 6;

/// Builders for the distinguished diagrams used throughout.
pub mod generators {
    use super::{Block, Diagram};
    use crate::error::Error;

    fn identity_blocks(n: u32, skip: &[u32]) -> Vec<Block> {
        (1..=n as i32)
            .filter(|i| !skip.contains(&(*i as u32)))
            .map(|i| Block::pair(i, -i))
            .collect()
    }

    /// The adjacent transposition s_i = (i, i+1), 1 <= i <= n-1.
    pub fn s(n: u32, i: u32) -> Result<Diagram, Error> {
        if i == 0 || i + 1 > n {
            return Err(Error::BadIndex { index: i, n });
        }
        let mut blocks = identity_blocks(n, &[i, i + 1]);
        blocks.push(Block::pair(i as i32, -(i as i32 + 1)));
        blocks.push(Block::pair(i as i32 + 1, -(i as i32)));
        Diagram::new(n, blocks.iter().map(|b| b.vertices().collect()).collect())
    }

    /// p_i: the horizontal-arc pair {i, i+1}, {i', (i+1)'}, 1 <= i <= n-1.
    pub fn p(n: u32, i: u32) -> Result<Diagram, Error> {
        if i == 0 || i + 1 > n {
            return Err(Error::BadIndex { index: i, n });
        }
        let mut blocks = identity_blocks(n, &[i, i + 1]);
        blocks.push(Block::pair(i as i32, i as i32 + 1));
        blocks.push(Block::pair(-(i as i32), -(i as i32 + 1)));
        Diagram::new(n, blocks.iter().map(|b| b.vertices().collect()).collect())
    }

    /// eps_i = u_{n,i}: singletons at i and i', identity elsewhere.
    pub fn eps(n: u32, i: u32) -> Result<Diagram, Error> {
        if i == 0 || i > n {
            return Err(Error::BadIndex { index: i, n });
        }
        u_x(n, &[i])
    }

    /// u_X: singletons at X and X', identity elsewhere.
    pub fn u_x(n: u32, xs: &[u32]) -> Result<Diagram, Error> {
        for &x in xs {
            if x == 0 || x > n {
                return Err(Error::BadIndex { index: x, n });
            }
        }
        let mut blocks = identity_blocks(n, xs);
        for &x in xs {
            blocks.push(Block::Single(x as i32));
            blocks.push(Block::Single(-(x as i32)));
        }
        Diagram::new(n, blocks.iter().map(|b| b.vertices().collect()).collect())
    }

    /// The cell representative with `a` singleton strands, `b` arc pairs and
    /// `k` propagating lines (rank a + 2b + k).
    ///
    /// Left column: singletons 1..a, a propagating start at a+1, arcs
    /// {a+2i, a+2i+1}; right column: singletons 1'..a', arcs
    /// {(a+2i-1)', (a+2i)'}, the propagating end at (a+2b+1)', identity tail.
    /// For k = 0 the left column is split entirely into singletons.
    pub fn eps_pattern(a: u32, b: u32, k: u32) -> Result<Diagram, Error> {
        let n = a + 2 * b + k;
        let ai = a as i32;
        let mut blocks: Vec<Vec<i32>> = Vec::new();
        for i in 1..=ai {
            blocks.push(vec![i]);
            blocks.push(vec![-i]);
        }
        for i in 1..=b as i32 {
            blocks.push(vec![-(ai + 2 * i - 1), -(ai + 2 * i)]);
        }
        if k == 0 {
            for i in ai + 1..=n as i32 {
                blocks.push(vec![i]);
            }
        } else {
            blocks.push(vec![ai + 1, -(ai + 2 * b as i32 + 1)]);
            for i in 1..=b as i32 {
                blocks.push(vec![ai + 2 * i, ai + 2 * i + 1]);
            }
            for j in 1..k as i32 {
                let v = ai + 2 * b as i32 + 1 + j;
                blocks.push(vec![v, -v]);
            }
        }
        Diagram::new(n, blocks)
    }
}
