//! Free-group words over the vertex alphabet, presentation relators and
//! the explicit generator families of the second homology.
//!
//! The Artin generators `a_s` and the Coxeter generators `s` are both
//! indexed by vertex position, so one [`Word`] type serves both free groups.

use std::fmt;

use crate::chains::{boundary, fundamental_cycle_basis, mod2_reduce, EdgeChain};
use crate::error::WordError;
use crate::graph::{CoxeterGraph, CoxeterLabel, VertexPair};
use crate::invariants::pair_classes;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(generator: usize) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Cancels adjacent inverse letters until none remain.
pub fn free_reduce(letters: &[Letter]) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word { letters: out }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(i: usize) -> Self {
        Word {
            letters: vec![Letter::new(i)],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut raw = self.letters.clone();
        raw.extend_from_slice(&other.letters);
        free_reduce(&raw)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut raw = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            raw.extend_from_slice(&base.letters);
        }
        free_reduce(&raw)
    }

    /// Space-separated `name` / `name^-1`; the empty word is `1`.
    pub fn render(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                let name = &names[l.generator];
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.letters.iter().map(|l| l.generator).max().unwrap_or(0))
            .map(|i| format!("x{i}"))
            .collect();
        f.write_str(&self.render(&names))
    }
}

/// `(st)_m = s t s ...` of length `m`.
pub fn alternating_word(s: usize, t: usize, m: u32) -> Result<Word, WordError> {
    if s == t {
        return Err(WordError::SameVertex);
    }
    if m == 0 {
        return Err(WordError::NonPositiveLength);
    }
    Ok(Word {
        letters: (0..m)
            .map(|k| Letter::new(if k % 2 == 0 { s } else { t }))
            .collect(),
    })
}

/// `(st)_m ((ts)_m)^{-1}` for `s < t` and finite `m >= 2`.
pub fn relator(s: usize, t: usize, m: CoxeterLabel) -> Result<Word, WordError> {
    let m = match m {
        CoxeterLabel::Infinity => return Err(WordError::InfiniteLabel),
        CoxeterLabel::Finite(m) if m < 2 => return Err(WordError::BadLabel(m)),
        CoxeterLabel::Finite(m) => m,
    };
    if s == t {
        return Err(WordError::SameVertex);
    }
    if s > t {
        return Err(WordError::OrderViolation(s, t));
    }
    Ok(alternating_word(s, t, m)?.mul(&alternating_word(t, s, m)?.inverse()))
}

pub fn commutator(x: &Word, y: &Word) -> Word {
    let mut raw = x.letters.clone();
    raw.extend_from_slice(&y.letters);
    raw.extend(x.inverse().letters);
    raw.extend(y.inverse().letters);
    free_reduce(&raw)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Artin,
    Coxeter,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Artin => "artin",
            Flavor::Coxeter => "coxeter",
        })
    }
}

/// Relators of the Artin presentation, followed by the squares `s^2` for
/// the Coxeter presentation. Pairs with infinite label contribute nothing.
pub fn presentation_relators(g: &CoxeterGraph, flavor: Flavor) -> Vec<Word> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            let m = g.label(s, t);
            if m.is_finite() {
                out.push(relator(s, t, m).expect("finite label with s < t"));
            }
        }
    }
    if flavor == Flavor::Coxeter {
        out.extend((0..n).map(|s| Word::generator(s).pow(2)));
    }
    out
}

/// Image in the free abelian group on the vertices, written additively.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianVector(pub Vec<i64>);

impl AbelianVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

pub fn abelianize(w: &Word, vertex_count: usize) -> AbelianVector {
    let mut v = vec![0i64; vertex_count];
    for l in &w.letters {
        v[l.generator] += if l.inverse { -1 } else { 1 };
    }
    AbelianVector(v)
}

/// Membership in the commutator subgroup of the free group.
pub fn in_commutator_subgroup(w: &Word) -> bool {
    let n = w.letters.iter().map(|l| l.generator + 1).max().unwrap_or(0);
    abelianize(w, n).is_zero()
}

/// The lift of `a_s ↦ s` to the free groups. Letter data is shared, so
/// the lift is the identity on words.
pub fn project_word(w: &Word) -> Word {
    w.clone()
}

/// Explicit generators of the second homology, as words in the free group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaSets {
    pub flavor: Flavor,
    /// One commutator per class of commuting pairs.
    pub omega1: Vec<Word>,
    pub omega1_pairs: Vec<VertexPair>,
    /// One relator per finite even label `>= 4`.
    pub omega2: Vec<Word>,
    pub omega2_pairs: Vec<VertexPair>,
    /// One relator product per basis cycle of the odd subgraph.
    pub omega3: Vec<Word>,
    /// Relator exponents behind each `omega3` word, indexed like `odd_edges`.
    pub omega3_exponents: Vec<Vec<i64>>,
    /// Exponents of the squares `s^2` appended to each `omega3` word,
    /// indexed by vertex. All zero for the Artin flavor.
    pub omega3_square_exponents: Vec<Vec<i64>>,
    pub odd_edges: Vec<VertexPair>,
}

impl OmegaSets {
    pub fn total(&self) -> usize {
        self.omega1.len() + self.omega2.len() + self.omega3.len()
    }

    pub fn all_words(&self) -> impl Iterator<Item = &Word> {
        self.omega1.iter().chain(&self.omega2).chain(&self.omega3)
    }
}

/// `∏ R(x_s, x_t)^{n(s,t)}` over `edges` in order, freely reduced.
pub fn relator_product(g: &CoxeterGraph, edges: &[VertexPair], exponents: &[i64]) -> Word {
    assert_eq!(edges.len(), exponents.len());
    let mut raw: Vec<Letter> = Vec::new();
    for (&p, &k) in edges.iter().zip(exponents) {
        if k != 0 {
            let r = relator(p.lo(), p.hi(), g.label(p.lo(), p.hi())).expect("edge label is finite");
            raw.extend_from_slice(r.pow(k).letters());
        }
    }
    free_reduce(&raw)
}

/// `∏ (s^2)^{n(s)}` in vertex order, freely reduced.
pub fn square_product(exponents: &[i64]) -> Word {
    let mut raw: Vec<Letter> = Vec::new();
    for (s, &k) in exponents.iter().enumerate() {
        raw.extend_from_slice(Word::generator(s).pow(2 * k).letters());
    }
    free_reduce(&raw)
}

pub fn omega_sets(g: &CoxeterGraph, flavor: Flavor) -> OmegaSets {
    let part = pair_classes(g);
    let omega1_pairs: Vec<VertexPair> = part.classes.iter().map(|c| c.representative()).collect();
    let omega1 = omega1_pairs
        .iter()
        .map(|p| commutator(&Word::generator(p.lo()), &Word::generator(p.hi())))
        .collect();

    let omega2_pairs: Vec<VertexPair> = g
        .edges()
        .filter(|(_, l)| l.is_even_ge4())
        .map(|(p, _)| p)
        .collect();
    let omega2 = omega2_pairs
        .iter()
        .map(|p| relator(p.lo(), p.hi(), g.label(p.lo(), p.hi())).expect("finite even label"))
        .collect();

    let odd = g.odd_subgraph();
    let basis = fundamental_cycle_basis::<i64>(&odd);
    let omega3_exponents: Vec<Vec<i64>> = match flavor {
        Flavor::Artin => basis
            .cycles
            .iter()
            .map(|c| c.coefficients.clone())
            .collect(),
        Flavor::Coxeter => mod2_reduce(&odd, &basis)
            .iter()
            .map(|c| c.lift::<i64>().coefficients)
            .collect(),
    };
    // The {0, 1} lift of a mod-2 cycle has boundary 2β. Appending
    // (s^2)^{β(s)} cancels the abelianization of the relator product.
    let omega3_square_exponents: Vec<Vec<i64>> = omega3_exponents
        .iter()
        .map(|ex| {
            boundary(&odd, &EdgeChain::<i64>::from_i64(ex))
                .coefficients
                .iter()
                .map(|&b| b / 2)
                .collect()
        })
        .collect();
    let odd_edges = odd.edges().to_vec();
    let omega3 = omega3_exponents
        .iter()
        .zip(&omega3_square_exponents)
        .map(|(ex, sq)| relator_product(g, &odd_edges, ex).mul(&square_product(sq)))
        .collect();

    OmegaSets {
        flavor,
        omega1,
        omega1_pairs,
        omega2,
        omega2_pairs,
        omega3,
        omega3_exponents,
        omega3_square_exponents,
        odd_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::from_catalog;
    use crate::invariants::invariant_profile;
    use proptest::prelude::*;

    fn w(spec: &[(usize, bool)]) -> Word {
        Word {
            letters: spec
                .iter()
                .map(|&(g, inverse)| Letter {
                    generator: g,
                    inverse,
                })
                .collect(),
        }
    }

    const S: usize = 0;
    const T: usize = 1;

    #[test]
    fn alternating_words() {
        assert_eq!(
            alternating_word(S, T, 3).unwrap(),
            w(&[(S, false), (T, false), (S, false)])
        );
        assert_eq!(alternating_word(S, T, 1).unwrap(), Word::generator(S));
        assert_eq!(alternating_word(S, T, 4).unwrap().len(), 4);
        assert_eq!(
            alternating_word(S, S, 2).unwrap_err(),
            WordError::SameVertex
        );
        assert_eq!(
            alternating_word(S, T, 0).unwrap_err(),
            WordError::NonPositiveLength
        );
    }

    #[test]
    fn relator_shapes() {
        let f = CoxeterLabel::Finite;
        assert_eq!(
            relator(S, T, f(2)).unwrap(),
            w(&[(S, false), (T, false), (S, true), (T, true)])
        );
        assert_eq!(
            relator(S, T, f(2)).unwrap(),
            commutator(&Word::generator(S), &Word::generator(T))
        );
        assert_eq!(
            relator(S, T, f(3)).unwrap(),
            w(&[
                (S, false),
                (T, false),
                (S, false),
                (T, true),
                (S, true),
                (T, true)
            ])
        );
        assert_eq!(
            relator(S, T, f(4)).unwrap(),
            w(&[
                (S, false),
                (T, false),
                (S, false),
                (T, false),
                (S, true),
                (T, true),
                (S, true),
                (T, true)
            ])
        );
        assert_eq!(
            relator(S, T, CoxeterLabel::Infinity).unwrap_err(),
            WordError::InfiniteLabel
        );
        assert_eq!(
            relator(T, S, f(3)).unwrap_err(),
            WordError::OrderViolation(T, S)
        );
    }

    #[test]
    fn presentations() {
        let a2 = from_catalog("A2").unwrap();
        let art = presentation_relators(&a2, Flavor::Artin);
        assert_eq!(art, vec![relator(0, 1, CoxeterLabel::Finite(3)).unwrap()]);
        let cox = presentation_relators(&a2, Flavor::Coxeter);
        assert_eq!(cox.len(), 3);
        assert_eq!(cox[1], w(&[(0, false), (0, false)]));
        assert_eq!(cox[2], w(&[(1, false), (1, false)]));
        assert!(presentation_relators(&from_catalog("I2(inf)").unwrap(), Flavor::Artin).is_empty());
        // commuting pairs still contribute commutators
        assert_eq!(
            presentation_relators(&from_catalog("A3").unwrap(), Flavor::Artin).len(),
            3
        );
    }

    #[test]
    fn reduction() {
        assert!(free_reduce(&[Letter::new(S), Letter::inv(S)]).is_empty());
        assert_eq!(
            free_reduce(&[
                Letter::new(S),
                Letter::new(T),
                Letter::inv(T),
                Letter::new(S)
            ]),
            w(&[(S, false), (S, false)])
        );
        let r = relator(0, 1, CoxeterLabel::Finite(5)).unwrap();
        assert_eq!(free_reduce(r.letters()), r);
    }

    #[test]
    fn commutators() {
        let s = Word::generator(S);
        let t = Word::generator(T);
        assert_eq!(
            commutator(&s, &t),
            w(&[(S, false), (T, false), (S, true), (T, true)])
        );
        assert!(commutator(&s, &s).is_empty());
        // [st, s] = st s t^-1 s^-1 s^-1
        let c = commutator(&s.mul(&t), &s);
        assert_eq!(
            c,
            w(&[
                (S, false),
                (T, false),
                (S, false),
                (T, true),
                (S, true),
                (S, true)
            ])
        );
        assert!(abelianize(&c, 2).is_zero());
    }

    #[test]
    fn abelianization() {
        let f = CoxeterLabel::Finite;
        assert_eq!(
            abelianize(&relator(0, 1, f(3)).unwrap(), 2),
            AbelianVector(vec![1, -1])
        );
        assert!(abelianize(&relator(0, 1, f(4)).unwrap(), 2).is_zero());
        assert!(in_commutator_subgroup(&Word::identity()));
        assert!(!in_commutator_subgroup(&Word::generator(0)));
        assert!(!in_commutator_subgroup(&relator(0, 1, f(5)).unwrap()));
    }

    #[test]
    fn render_words() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(Word::identity().render(&names), "1");
        assert_eq!(
            relator(0, 1, CoxeterLabel::Finite(2))
                .unwrap()
                .render(&names),
            "a b a^-1 b^-1"
        );
    }

    #[test]
    fn omega_a3() {
        let g = from_catalog("A3").unwrap();
        let om = omega_sets(&g, Flavor::Artin);
        assert_eq!(
            om.omega1,
            vec![commutator(&Word::generator(0), &Word::generator(2))]
        );
        assert!(om.omega2.is_empty() && om.omega3.is_empty());
    }

    #[test]
    fn omega_i2_4() {
        let g = from_catalog("I2(4)").unwrap();
        let om = omega_sets(&g, Flavor::Artin);
        assert!(om.omega1.is_empty() && om.omega3.is_empty());
        assert_eq!(
            om.omega2[0].render(g.vertices()),
            "s1 s2 s1 s2 s1^-1 s2^-1 s1^-1 s2^-1"
        );
    }

    #[test]
    fn omega_triangle() {
        let g = from_catalog("~A2").unwrap();
        let om = omega_sets(&g, Flavor::Artin);
        assert!(om.omega1.is_empty() && om.omega2.is_empty());
        assert_eq!(om.omega3.len(), 1);
        // edges (s1,s2), (s1,s3), (s2,s3); cycle a1-a2 + a2-a3 - (a1-a3)
        assert_eq!(om.omega3_exponents, vec![vec![1, -1, 1]]);
        assert!(abelianize(&om.omega3[0], 3).is_zero());
        assert!(!om.omega3[0].is_empty());
        let cox = omega_sets(&g, Flavor::Coxeter);
        assert_eq!(cox.omega3_exponents, vec![vec![1, 1, 1]]);
        assert_eq!(cox.omega3_square_exponents, vec![vec![-1, 0, 1]]);
        assert_eq!(om.omega3_square_exponents, vec![vec![0, 0, 0]]);
        assert!(abelianize(&cox.omega3[0], 3).is_zero());
    }

    #[test]
    fn omega_counts_on_catalog() {
        for name in [
            "A5", "B4", "D6", "E8", "F4", "H4", "~A4", "~B4", "~C3", "~D7", "~E7",
        ] {
            let g = from_catalog(name).unwrap();
            let prof = invariant_profile(&g);
            for flavor in [Flavor::Artin, Flavor::Coxeter] {
                let om = omega_sets(&g, flavor);
                assert_eq!(om.omega1.len(), prof.p + prof.q1, "{name}");
                assert_eq!(om.omega2.len(), prof.q2, "{name}");
                assert_eq!(om.omega3.len(), prof.q3, "{name}");
                assert!(om.all_words().all(in_commutator_subgroup), "{name}");
            }
        }
    }

    fn word_strategy() -> impl Strategy<Value = Vec<Letter>> {
        proptest::collection::vec((0usize..4, any::<bool>()), 0..40).prop_map(|v| {
            v.into_iter()
                .map(|(generator, inverse)| Letter { generator, inverse })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn free_reduce_idempotent(raw in word_strategy()) {
            let once = free_reduce(&raw);
            prop_assert!(once.len() <= raw.len());
            prop_assert_eq!(free_reduce(once.letters()), once.clone());
            prop_assert!(once.letters().windows(2).all(|p| !p[0].cancels(p[1])));
            let raw_ab = {
                let mut v = vec![0i64; 4];
                for l in &raw { v[l.generator] += if l.inverse { -1 } else { 1 }; }
                AbelianVector(v)
            };
            prop_assert_eq!(abelianize(&once, 4), raw_ab);
        }

        #[test]
        fn inverse_cancels(raw in word_strategy()) {
            let x = free_reduce(&raw);
            prop_assert!(x.mul(&x.inverse()).is_empty());
        }

        #[test]
        fn commutators_die(a in word_strategy(), b in word_strategy()) {
            let c = commutator(&free_reduce(&a), &free_reduce(&b));
            prop_assert!(in_commutator_subgroup(&c));
        }

        #[test]
        fn relator_abelianization(m in 2u32..=12) {
            let ab = abelianize(&relator(0, 1, CoxeterLabel::Finite(m)).unwrap(), 2);
            if m % 2 == 1 {
                prop_assert_eq!(ab, AbelianVector(vec![1, -1]));
            } else {
                prop_assert!(ab.is_zero());
            }
        }
    }
}
