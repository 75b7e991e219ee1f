//! Brute-force oracles and seeded random graphs.
//!
//! Each oracle recomputes a quantity by a different route than the main
//! implementation: fixed-point block merging instead of union-find, exact
//! rational elimination instead of component counting.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chains::{gf2_rank, BitVector};
use crate::error::OracleError;
use crate::graph::{CoxeterGraph, CoxeterLabel, PlainGraph, VertexPair};
use crate::invariants::{invariant_profile, PairClass, PairPartition};

fn directly_related(g: &CoxeterGraph, a: VertexPair, b: VertexPair) -> bool {
    let shared: Vec<usize> = [a.lo(), a.hi()]
        .into_iter()
        .filter(|&v| b.contains(v))
        .collect();
    if shared.len() != 1 {
        return false;
    }
    let s = shared[0];
    let t = a.other(s).unwrap();
    let u = b.other(s).unwrap();
    g.label(t, u).is_odd()
}

/// Classes of commuting pairs by repeated block merging until stable.
pub fn naive_pair_closure(g: &CoxeterGraph) -> PairPartition {
    let n = g.vertex_count();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if g.label(i, j) == CoxeterLabel::Finite(2) {
                pairs.push(VertexPair::new(i, j));
            }
        }
    }
    let mut blocks: Vec<Vec<VertexPair>> = pairs.iter().map(|&p| vec![p]).collect();
    loop {
        let mut merged = false;
        'scan: for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let linked = blocks[i]
                    .iter()
                    .any(|&a| blocks[j].iter().any(|&b| directly_related(g, a, b)));
                if linked {
                    let moved = blocks.remove(j);
                    blocks[i].extend(moved);
                    merged = true;
                    break 'scan;
                }
            }
        }
        if !merged {
            break;
        }
    }
    let mut classes: Vec<PairClass> = blocks
        .into_iter()
        .map(|mut members| {
            members.sort();
            let torsion = members.iter().any(|p| {
                let s = g.name(p.lo());
                let t = g.name(p.hi());
                g.vertices().iter().any(|v| {
                    g.label_of(s, v).unwrap() == CoxeterLabel::Finite(3)
                        && g.label_of(t, v).unwrap() == CoxeterLabel::Finite(3)
                })
            });
            PairClass { members, torsion }
        })
        .collect();
    classes.sort_by(|a, b| a.members[0].cmp(&b.members[0]));
    PairPartition { pairs, classes }
}

/// Rank of a matrix over the rationals, by exact fraction elimination.
pub fn rational_rank<T>(mut rows: Vec<Vec<Ratio<T>>>) -> usize
where
    T: Clone + Integer + Signed,
{
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..height).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone() / pivot_row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `#E - rank ∂` over the rationals.
pub fn rational_cycle_rank<T>(pg: &PlainGraph) -> usize
where
    T: Clone + Integer + Signed,
{
    let mut rows = vec![vec![Ratio::<T>::zero(); pg.edge_count()]; pg.vertex_count()];
    for (e, p) in pg.edges().iter().enumerate() {
        rows[p.lo()][e] = -Ratio::one();
        rows[p.hi()][e] = Ratio::one();
    }
    pg.edge_count() - rational_rank(rows)
}

/// Dimension of the mod-2 cycle space, `#E - rank_2 ∂`.
pub fn gf2_cycle_space_dimension(pg: &PlainGraph) -> usize {
    let columns: Vec<BitVector> = pg
        .edges()
        .iter()
        .map(|p| {
            let mut v = BitVector::zeros(pg.vertex_count());
            v.set(p.lo(), true);
            v.set(p.hi(), true);
            v
        })
        .collect();
    pg.edge_count() - gf2_rank(&columns).expect("columns share the vertex count")
}

/// `Z_2`-rank of the second homology of the dihedral group of order `2m`:
/// 1 for even `m`, 0 for odd `m`. For `m = ∞` the general formula is
/// evaluated on the single infinite edge.
pub fn dihedral_h2_reference(m: CoxeterLabel) -> usize {
    match m {
        CoxeterLabel::Finite(m) => {
            assert!(m >= 2, "dihedral label must be at least 2");
            usize::from(m % 2 == 0)
        }
        CoxeterLabel::Infinity => invariant_profile(&dihedral_graph(m)).mod2_rank(),
    }
}

/// `I_2(m)` for any label, including `m = 2` (two commuting generators).
pub fn dihedral_graph(m: CoxeterLabel) -> CoxeterGraph {
    CoxeterGraph::build(["s1", "s2"], [("s1", "s2", m)]).expect("valid dihedral label")
}

/// Label values drawn by [`random_coxeter_graph`], in weight order.
pub const RANDOM_LABELS: [CoxeterLabel; 6] = [
    CoxeterLabel::Finite(2),
    CoxeterLabel::Finite(3),
    CoxeterLabel::Finite(4),
    CoxeterLabel::Finite(5),
    CoxeterLabel::Finite(6),
    CoxeterLabel::Infinity,
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomGraphSpec {
    pub seed: u64,
    /// 1..=10
    pub vertex_count: usize,
    /// Relative weights for the labels in [`RANDOM_LABELS`].
    pub weights: [u32; 6],
}

impl RandomGraphSpec {
    pub const DEFAULT_WEIGHTS: [u32; 6] = [6, 5, 2, 2, 2, 1];

    pub fn new(seed: u64, vertex_count: usize) -> Self {
        RandomGraphSpec {
            seed,
            vertex_count,
            weights: Self::DEFAULT_WEIGHTS,
        }
    }
}

/// Deterministic pseudo-random Coxeter graph: every pair gets an
/// independent label drawn from the weights, using ChaCha8 seeded from
/// `spec.seed`.
pub fn random_coxeter_graph(spec: &RandomGraphSpec) -> Result<CoxeterGraph, OracleError> {
    if !(1..=10).contains(&spec.vertex_count) {
        return Err(OracleError::InvalidSpec(format!(
            "vertex_count must be in 1..=10 (got {})",
            spec.vertex_count
        )));
    }
    let dist = WeightedIndex::new(spec.weights)
        .map_err(|e| OracleError::InvalidSpec(format!("label weights: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let names: Vec<String> = (1..=spec.vertex_count).map(|i| format!("s{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..spec.vertex_count {
        for j in i + 1..spec.vertex_count {
            let label = RANDOM_LABELS[dist.sample(&mut rng)];
            edges.push((names[i].clone(), names[j].clone(), label));
        }
    }
    Ok(CoxeterGraph::build(names.clone(), edges).expect("generated graph is well formed"))
}

/// `count` seeded graphs with vertex counts cycling through `1..=max_vertices`.
pub fn random_corpus(base_seed: u64, count: usize, max_vertices: usize) -> Vec<CoxeterGraph> {
    (0..count)
        .map(|i| {
            let spec = RandomGraphSpec::new(base_seed.wrapping_add(i as u64), 1 + i % max_vertices);
            random_coxeter_graph(&spec).expect("corpus spec is valid")
        })
        .collect()
}
