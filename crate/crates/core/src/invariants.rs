//! Commuting-pair classes, the numbers `p, q1, q2, q3, q`, the alternative
//! counts `n1..n4`, and the homology descriptors assembled from them.

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{CoxeterGraph, CoxeterLabel, VertexPair};

/// Unordered pairs `{s, t}` with `m(s, t) = 2`, in lexicographic order.
pub fn commuting_pairs(g: &CoxeterGraph) -> Vec<VertexPair> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if g.label(i, j) == CoxeterLabel::Finite(2) {
                out.push(VertexPair::new(i, j));
            }
        }
    }
    out
}

/// One equivalence class of commuting pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    /// Sorted; the first member is the canonical representative.
    pub members: Vec<VertexPair>,
    pub torsion: bool,
}

impl PairClass {
    pub fn representative(&self) -> VertexPair {
        self.members[0]
    }
}

/// The partition of the commuting pairs into classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairPartition {
    pub pairs: Vec<VertexPair>,
    /// Ordered by representative.
    pub classes: Vec<PairClass>,
}

impl PairPartition {
    /// Assembles a partition in canonical form from arbitrary blocks.
    pub fn from_blocks(g: &CoxeterGraph, blocks: Vec<Vec<VertexPair>>) -> Self {
        let table = g.label_table();
        let mut classes: Vec<PairClass> = blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(|mut members| {
                members.sort_unstable();
                let torsion = members.iter().any(|&p| has_torsion_witness(&table, p));
                PairClass { members, torsion }
            })
            .collect();
        classes.sort_by_key(PairClass::representative);
        let mut pairs: Vec<VertexPair> = classes
            .iter()
            .flat_map(|c| c.members.iter().copied())
            .collect();
        pairs.sort_unstable();
        PairPartition { pairs, classes }
    }

    pub fn torsion_count(&self) -> usize {
        self.classes.iter().filter(|c| c.torsion).count()
    }

    pub fn non_torsion_count(&self) -> usize {
        self.classes.len() - self.torsion_count()
    }
}

/// Some `v` with `m(s, v) = m(t, v) = 3`. The diagonal value 1 excludes
/// `v = s` and `v = t` automatically.
fn has_torsion_witness(table: &[Vec<CoxeterLabel>], p: VertexPair) -> bool {
    let three = CoxeterLabel::Finite(3);
    (0..table.len()).any(|v| table[p.lo()][v] == three && table[p.hi()][v] == three)
}

/// Classes of commuting pairs under the relation generated by
/// `{s, t} ≡ {s, t'}` whenever `m(t, t')` is odd.
///
/// For each shared vertex `s` and each pair of commuting partners `t, t'`
/// of `s` with odd label between them, the two pairs are merged.
pub fn pair_classes(g: &CoxeterGraph) -> PairPartition {
    let n = g.vertex_count();
    let table = g.label_table();
    let pairs = commuting_pairs(g);
    // pair -> slot in `pairs`
    let mut slot = vec![vec![usize::MAX; n]; n];
    for (k, p) in pairs.iter().enumerate() {
        slot[p.lo()][p.hi()] = k;
        slot[p.hi()][p.lo()] = k;
    }
    let mut uf = UnionFind::<usize>::new(pairs.len());
    for s in 0..n {
        let partners: Vec<usize> = (0..n)
            .filter(|&t| t != s && table[s][t] == CoxeterLabel::Finite(2))
            .collect();
        for (a, &t) in partners.iter().enumerate() {
            for &u in &partners[a + 1..] {
                if table[t][u].is_odd() {
                    uf.union(slot[s][t], slot[s][u]);
                }
            }
        }
    }
    let mut blocks: Vec<Vec<VertexPair>> = vec![Vec::new(); pairs.len()];
    for (k, &p) in pairs.iter().enumerate() {
        blocks[uf.find_mut(k)].push(p);
    }
    PairPartition::from_blocks(g, blocks)
}

/// The combinatorial counts behind the second homology formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub p: usize,
    pub q1: usize,
    pub q2: usize,
    pub q3: usize,
    pub q: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4: usize,
    pub h1_artin_free_rank: usize,
}

impl InvariantProfile {
    /// Rank of `H_2(A; Z_2)` and of `H_2(W; Z)` as a `Z_2`-vector space.
    pub fn mod2_rank(&self) -> usize {
        self.p + self.q
    }

    /// `-n1 + n2 + n3 + n4`.
    pub fn howlett_rank(&self) -> i64 {
        self.n2 as i64 + self.n3 as i64 + self.n4 as i64 - self.n1 as i64
    }

    pub fn howlett_identity_holds(&self) -> bool {
        self.howlett_rank() == self.mod2_rank() as i64
    }
}

pub fn invariant_profile(g: &CoxeterGraph) -> InvariantProfile {
    profile_with_partition(g, &pair_classes(g))
}

pub(crate) fn profile_with_partition(g: &CoxeterGraph, part: &PairPartition) -> InvariantProfile {
    let odd = g.odd_subgraph();
    let components = odd.component_count();
    let p = part.torsion_count();
    let q1 = part.non_torsion_count();
    let q2 = g.edges().filter(|(_, l)| l.is_even_ge4()).count();
    let q3 = odd.cycle_rank();
    InvariantProfile {
        p,
        q1,
        q2,
        q3,
        q: q1 + q2 + q3,
        n1: g.vertex_count(),
        n2: g.edges().filter(|(_, l)| l.is_finite()).count(),
        n3: part.classes.len(),
        n4: components,
        h1_artin_free_rank: components,
    }
}

/// Free rank and `Z_2`-torsion rank of a finitely generated abelian group
/// of the form `Z^a ⊕ Z_2^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AbelianDescriptor {
    pub free_rank: usize,
    pub torsion2_rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorollaryConditions {
    pub all_torsion: bool,
    pub odd_equals_gamma: bool,
    pub tree: bool,
    pub applies: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummary {
    pub profile: InvariantProfile,
    /// Orbit space of the hyperplane complement: `Z_2^p ⊕ Z^q`.
    pub h2_orbit: AbelianDescriptor,
    pub h2_coxeter: AbelianDescriptor,
    pub h2_artin_mod2_rank: usize,
    pub corollary: CorollaryConditions,
    /// Integral `H_2` of the Artin group, known only when the corollary applies.
    pub h2_artin_integral: Option<AbelianDescriptor>,
}

pub fn homology_summary(g: &CoxeterGraph) -> HomologySummary {
    let part = pair_classes(g);
    let profile = profile_with_partition(g, &part);
    let all_torsion = part.classes.iter().all(|c| c.torsion);
    let odd_equals_gamma = g.edges().all(|(_, l)| l.is_odd());
    let tree = g.underlying_graph().is_acyclic();
    let applies = all_torsion && odd_equals_gamma && tree;
    HomologySummary {
        profile,
        h2_orbit: AbelianDescriptor {
            free_rank: profile.q,
            torsion2_rank: profile.p,
        },
        h2_coxeter: AbelianDescriptor {
            free_rank: 0,
            torsion2_rank: profile.mod2_rank(),
        },
        h2_artin_mod2_rank: profile.mod2_rank(),
        corollary: CorollaryConditions {
            all_torsion,
            odd_equals_gamma,
            tree,
            applies,
        },
        h2_artin_integral: applies.then_some(AbelianDescriptor {
            free_rank: 0,
            torsion2_rank: profile.p,
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    /// `(n, p + q)` for `n = 1..=n_max`.
    pub ranks: Vec<(usize, usize)>,
    /// The rank is constant from `n = 3` on.
    pub stable: bool,
}

/// Mod-2 ranks along the family obtained by repeatedly appending a vertex
/// joined to the previous last vertex by a 3-edge.
pub fn stability_scan(seed: &CoxeterGraph, n_max: usize) -> Result<StabilityReport, GraphError> {
    if seed.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    if n_max < 4 {
        return Err(GraphError::InvalidParameter {
            name: "n_max".into(),
            reason: format!("must be at least 4 (got {n_max})"),
        });
    }
    let mut ranks = Vec::with_capacity(n_max);
    let mut g = seed.clone();
    for n in 1..=n_max {
        if n > 1 {
            g = g.extend_family()?;
        }
        ranks.push((n, invariant_profile(&g).mod2_rank()));
    }
    let base = ranks[2].1;
    let stable = ranks[2..].iter().all(|&(_, r)| r == base);
    Ok(StabilityReport { ranks, stable })
}
