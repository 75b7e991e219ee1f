//! Chain complex of a plain graph: boundary map, fundamental cycle bases,
//! mod-2 reduction and the even-boundary predicates.
//!
//! Integral chains are generic over a [`Coefficient`] ring so the same code
//! runs on machine integers and on arbitrary-precision `BigInt`. Edges are
//! oriented from the lower to the higher vertex index, so the boundary of
//! edge `⟨s, t⟩` is `t - s`.

use std::collections::VecDeque;
use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::error::ChainError;
use crate::graph::PlainGraph;

/// Exact integer coefficients (`i64`, `i128`, `BigInt`, ...).
pub trait Coefficient:
    Clone + Debug + PartialEq + Integer + Signed + FromPrimitive + ToPrimitive
{
}

impl<T> Coefficient for T where
    T: Clone + Debug + PartialEq + Integer + Signed + FromPrimitive + ToPrimitive
{
}

/// A 1-chain: one coefficient per edge of a [`PlainGraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeChain<C> {
    pub coefficients: Vec<C>,
}

/// A 0-chain: one coefficient per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexChain<C> {
    pub coefficients: Vec<C>,
}

impl<C: Coefficient> EdgeChain<C> {
    pub fn zero(len: usize) -> Self {
        EdgeChain {
            coefficients: vec![C::zero(); len],
        }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        EdgeChain {
            coefficients: values
                .iter()
                .map(|&v| C::from_i64(v).expect("coefficient out of range"))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "chains over different edge sets");
        EdgeChain {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        EdgeChain {
            coefficients: self
                .coefficients
                .iter()
                .map(|a| a.clone() * k.clone())
                .collect(),
        }
    }

    /// Indices of nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Coefficientwise reduction mod 2.
    pub fn reduce_mod2(&self) -> BitVector {
        let mut bits = BitVector::zeros(self.len());
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_odd() {
                bits.set(i, true);
            }
        }
        bits
    }
}

impl<C: Coefficient> VertexChain<C> {
    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Coefficient> IntMatrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &C {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: C) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<C> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[C]) -> Vec<C> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(C::zero(), |acc, c| {
                    acc + self.get(r, c).clone() * v[c].clone()
                })
            })
            .collect()
    }
}

/// Rows are vertices, columns are edges; column `⟨s, t⟩` is `-1` at `s`
/// and `+1` at `t`.
pub fn boundary_matrix<C: Coefficient>(pg: &PlainGraph) -> IntMatrix<C> {
    let mut m = IntMatrix::zeros(pg.vertex_count(), pg.edge_count());
    for (e, p) in pg.edges().iter().enumerate() {
        m.set(p.lo(), e, -C::one());
        m.set(p.hi(), e, C::one());
    }
    m
}

/// `∂α`, computed edge by edge.
pub fn boundary<C: Coefficient>(pg: &PlainGraph, alpha: &EdgeChain<C>) -> VertexChain<C> {
    assert_eq!(
        alpha.len(),
        pg.edge_count(),
        "chain length does not match the edge count"
    );
    let mut out = vec![C::zero(); pg.vertex_count()];
    for (p, c) in pg.edges().iter().zip(&alpha.coefficients) {
        out[p.hi()] = out[p.hi()].clone() + c.clone();
        out[p.lo()] = out[p.lo()].clone() - c.clone();
    }
    VertexChain { coefficients: out }
}

/// Packed bit vector over the two-element field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    fn lowest_set(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

/// Rank over the two-element field by Gaussian elimination.
pub fn gf2_rank(vectors: &[BitVector]) -> Result<usize, ChainError> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let len = first.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != len) {
        return Err(ChainError::LengthMismatch {
            expected: len,
            found: bad.len(),
        });
    }
    // reduced rows keyed by pivot position
    let mut pivots: Vec<(usize, BitVector)> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (pivot, row) in &pivots {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
        if let Some(p) = v.lowest_set() {
            for (_, row) in pivots.iter_mut() {
                if row.get(p) {
                    row.xor_assign(&v);
                }
            }
            pivots.push((p, v));
        }
    }
    Ok(pivots.len())
}

/// An edge bit vector whose mod-2 boundary vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mod2Cycle {
    bits: BitVector,
}

impl Mod2Cycle {
    /// Checks that every vertex meets an even number of selected edges.
    pub fn new(pg: &PlainGraph, bits: BitVector) -> Result<Self, ChainError> {
        if bits.len() != pg.edge_count() {
            return Err(ChainError::LengthMismatch {
                expected: pg.edge_count(),
                found: bits.len(),
            });
        }
        let mut parity = vec![false; pg.vertex_count()];
        for e in bits.ones() {
            let p = pg.edges()[e];
            parity[p.lo()] ^= true;
            parity[p.hi()] ^= true;
        }
        match parity.iter().position(|&odd| odd) {
            Some(v) => Err(ChainError::NotACycle(v)),
            None => Ok(Mod2Cycle { bits }),
        }
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    /// The `{0, 1}` integral lift.
    pub fn lift<C: Coefficient>(&self) -> EdgeChain<C> {
        EdgeChain {
            coefficients: (0..self.bits.len())
                .map(|i| {
                    if self.bits.get(i) {
                        C::one()
                    } else {
                        C::zero()
                    }
                })
                .collect(),
        }
    }
}

/// A basis of integral 1-cycles, one fundamental cycle per non-tree edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalBasis<C> {
    pub cycles: Vec<EdgeChain<C>>,
    /// The non-tree edge that generates each cycle.
    pub generating_edges: Vec<usize>,
}

impl<C> FundamentalBasis<C> {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Breadth-first spanning forest, rooted at the lowest vertex of each
/// component and visiting neighbors in vertex order. Each non-tree edge
/// closes one cycle, oriented so the non-tree edge has coefficient `+1`.
pub fn fundamental_cycle_basis<C: Coefficient>(pg: &PlainGraph) -> FundamentalBasis<C> {
    let n = pg.vertex_count();
    let adj = pg.adjacency();
    // parent vertex and tree edge leading to it
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut is_tree = vec![false; pg.edge_count()];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &adj[v] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some((v, e));
                    is_tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut basis = FundamentalBasis {
        cycles: Vec::new(),
        generating_edges: Vec::new(),
    };
    for (e, p) in pg.edges().iter().enumerate() {
        if is_tree[e] {
            continue;
        }
        let mut coeffs = vec![C::zero(); pg.edge_count()];
        coeffs[e] = C::one();
        // walk from hi back to lo through the tree; the path carries
        // boundary lo - hi, cancelling the +1 edge's hi - lo
        let (mut a, mut b) = (p.hi(), p.lo());
        let mut toward_b: Vec<(usize, usize)> = Vec::new();
        while a != b {
            if depth[a] >= depth[b] {
                let (up, te) = parent[a].expect("non-root vertex has a parent");
                // step a -> up
                let sign = step_sign(pg, te, a, up);
                coeffs[te] = coeffs[te].clone() + sign;
                a = up;
            } else {
                let (up, te) = parent[b].expect("non-root vertex has a parent");
                toward_b.push((up, te));
                b = up;
            }
        }
        // path from the meeting point down to lo, in reverse collection order
        let mut cur = a;
        for &(up, te) in toward_b.iter().rev() {
            debug_assert_eq!(up, cur);
            let next = pg.edges()[te].other(up).expect("tree edge touches parent");
            let sign = step_sign(pg, te, up, next);
            coeffs[te] = coeffs[te].clone() + sign;
            cur = next;
        }
        basis.cycles.push(EdgeChain {
            coefficients: coeffs,
        });
        basis.generating_edges.push(e);
    }
    basis
}

/// `+1` when traversing edge `e` from `from` to `to` follows its orientation.
fn step_sign<C: Coefficient>(pg: &PlainGraph, e: usize, from: usize, to: usize) -> C {
    let p = pg.edges()[e];
    if p.lo() == from && p.hi() == to {
        C::one()
    } else {
        debug_assert!(p.hi() == from && p.lo() == to);
        -C::one()
    }
}

pub fn mod2_reduce<C: Coefficient>(pg: &PlainGraph, basis: &FundamentalBasis<C>) -> Vec<Mod2Cycle> {
    basis
        .cycles
        .iter()
        .map(|c| Mod2Cycle::new(pg, c.reduce_mod2()).expect("reduction of a cycle is a cycle"))
        .collect()
}

/// Whether every coefficient of `∂α` is even.
pub fn even_boundary_check<C: Coefficient>(pg: &PlainGraph, alpha: &EdgeChain<C>) -> bool {
    boundary(pg, alpha).coefficients.iter().all(|c| c.is_even())
}

/// Mod-2 reduction of a chain with even boundary.
pub fn xi_reduce<C: Coefficient>(
    pg: &PlainGraph,
    alpha: &EdgeChain<C>,
) -> Result<Mod2Cycle, ChainError> {
    let d = boundary(pg, alpha);
    if let Some(v) = d.coefficients.iter().position(|c| c.is_odd()) {
        return Err(ChainError::OddBoundary(v));
    }
    Ok(Mod2Cycle::new(pg, alpha.reduce_mod2()).expect("even boundary reduces to a cycle"))
}

/// Whether every coefficient of `α` is even.
pub fn is_dw_member<C: Coefficient>(alpha: &EdgeChain<C>) -> bool {
    alpha.coefficients.iter().all(|c| c.is_even())
}
