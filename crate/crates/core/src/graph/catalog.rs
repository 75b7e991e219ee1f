//! Standard finite and affine Coxeter diagrams.
//!
//! Vertices are named `s1, s2, ...` in the listed order.

use std::fmt;
use std::str::FromStr;

use super::{CoxeterGraph, CoxeterLabel};
use crate::error::GraphError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(CoxeterLabel),
    AffineA(usize),
    AffineB(usize),
    AffineC(usize),
    AffineD(usize),
    AffineE(usize),
}

/// Every supported name pattern, for `catalog list`.
pub fn catalog_names() -> &'static [&'static str] {
    &[
        "A<n>   (n >= 1)",
        "B<n>   (n >= 2)",
        "D<n>   (n >= 4)",
        "E6 | E7 | E8",
        "F4",
        "H3 | H4",
        "I2(<m>) (m >= 3) | I2(inf)",
        "~A<n>  (n >= 2)",
        "~B<n>  (n >= 3)",
        "~C<n>  (n >= 2)",
        "~D<n>  (n >= 4)",
        "~E6 | ~E7 | ~E8",
    ]
}

fn invalid(name: &str, reason: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn parse_rank(name: &str, digits: &str) -> Result<usize, GraphError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(GraphError::UnknownCatalogName(name.to_string()));
    }
    digits
        .parse()
        .map_err(|_| invalid(name, "rank does not fit in a machine integer"))
}

fn at_least(name: &str, n: usize, min: usize) -> Result<usize, GraphError> {
    if n < min {
        Err(invalid(name, format!("rank must be at least {min}")))
    } else {
        Ok(n)
    }
}

impl FromStr for CatalogType {
    type Err = GraphError;

    fn from_str(name: &str) -> Result<Self, GraphError> {
        let unknown = || GraphError::UnknownCatalogName(name.to_string());
        let (affine, rest) = match name.strip_prefix('~') {
            Some(r) => (true, r),
            None => (false, name),
        };
        if let Some(arg) = rest.strip_prefix("I2(") {
            if affine {
                return Err(unknown());
            }
            let arg = arg.strip_suffix(')').ok_or_else(unknown)?;
            if arg == "inf" {
                return Ok(CatalogType::I2(CoxeterLabel::Infinity));
            }
            let m = parse_rank(name, arg)?;
            let m = at_least(name, m, 3)?;
            let m = u32::try_from(m).map_err(|_| invalid(name, "label too large"))?;
            return Ok(CatalogType::I2(CoxeterLabel::Finite(m)));
        }
        let mut chars = rest.chars();
        let family = chars.next().ok_or_else(unknown)?;
        let n = parse_rank(name, chars.as_str())?;
        let t = match (affine, family) {
            (false, 'A') => CatalogType::A(at_least(name, n, 1)?),
            (false, 'B') => CatalogType::B(at_least(name, n, 2)?),
            (false, 'D') => CatalogType::D(at_least(name, n, 4)?),
            (false, 'E') | (true, 'E') => {
                if !(6..=8).contains(&n) {
                    return Err(invalid(name, "E-type rank must be 6, 7 or 8"));
                }
                if affine {
                    CatalogType::AffineE(n)
                } else {
                    CatalogType::E(n)
                }
            }
            (false, 'F') => {
                if n != 4 {
                    return Err(invalid(name, "only F4 exists"));
                }
                CatalogType::F4
            }
            (false, 'H') => {
                if n != 3 && n != 4 {
                    return Err(invalid(name, "H-type rank must be 3 or 4"));
                }
                CatalogType::H(n)
            }
            (true, 'A') => CatalogType::AffineA(at_least(name, n, 2)?),
            (true, 'B') => CatalogType::AffineB(at_least(name, n, 3)?),
            (true, 'C') => CatalogType::AffineC(at_least(name, n, 2)?),
            (true, 'D') => CatalogType::AffineD(at_least(name, n, 4)?),
            _ => return Err(unknown()),
        };
        Ok(t)
    }
}

impl fmt::Display for CatalogType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogType::A(n) => write!(f, "A{n}"),
            CatalogType::B(n) => write!(f, "B{n}"),
            CatalogType::D(n) => write!(f, "D{n}"),
            CatalogType::E(n) => write!(f, "E{n}"),
            CatalogType::F4 => f.write_str("F4"),
            CatalogType::H(n) => write!(f, "H{n}"),
            CatalogType::I2(m) => write!(f, "I2({m})"),
            CatalogType::AffineA(n) => write!(f, "~A{n}"),
            CatalogType::AffineB(n) => write!(f, "~B{n}"),
            CatalogType::AffineC(n) => write!(f, "~C{n}"),
            CatalogType::AffineD(n) => write!(f, "~D{n}"),
            CatalogType::AffineE(n) => write!(f, "~E{n}"),
        }
    }
}

/// Edge list over 1-based vertex numbers.
struct Diagram {
    order: usize,
    edges: Vec<(usize, usize, CoxeterLabel)>,
}

impl Diagram {
    fn new(order: usize) -> Self {
        Diagram {
            order,
            edges: Vec::new(),
        }
    }

    fn edge(&mut self, a: usize, b: usize, m: u32) -> &mut Self {
        self.edges.push((a, b, CoxeterLabel::Finite(m)));
        self
    }

    /// 3-edges along `from, from+1, ..., to`.
    fn path(&mut self, from: usize, to: usize) -> &mut Self {
        for i in from..to {
            self.edge(i, i + 1, 3);
        }
        self
    }

    fn into_graph(self) -> CoxeterGraph {
        let name = |i: usize| format!("s{i}");
        CoxeterGraph::build(
            (1..=self.order).map(name),
            self.edges
                .into_iter()
                .map(|(a, b, l)| (name(a), name(b), l)),
        )
        .expect("catalog diagrams are well formed")
    }
}

impl CatalogType {
    pub fn graph(self) -> CoxeterGraph {
        let d = match self {
            CatalogType::A(n) => {
                let mut d = Diagram::new(n);
                d.path(1, n);
                d
            }
            CatalogType::B(n) => {
                let mut d = Diagram::new(n);
                d.edge(1, 2, 4).path(2, n);
                d
            }
            // s1 and s2 both hang off s3; path s3 - ... - sn
            CatalogType::D(n) => {
                let mut d = Diagram::new(n);
                d.edge(1, 3, 3).path(3, n).edge(2, 3, 3);
                d
            }
            // s1 - s3 - s4 - ... - sn with s2 attached to s4
            CatalogType::E(n) => {
                let mut d = Diagram::new(n);
                d.edge(1, 3, 3).edge(2, 4, 3).path(3, n);
                d
            }
            CatalogType::F4 => {
                let mut d = Diagram::new(4);
                d.edge(1, 2, 3).edge(2, 3, 4).edge(3, 4, 3);
                d
            }
            CatalogType::H(n) => {
                let mut d = Diagram::new(n);
                d.edge(1, 2, 5).path(2, n);
                d
            }
            CatalogType::I2(m) => {
                let mut d = Diagram::new(2);
                d.edges.push((1, 2, m));
                d
            }
            // cycle on n + 1 vertices
            CatalogType::AffineA(n) => {
                let mut d = Diagram::new(n + 1);
                d.path(1, n + 1).edge(1, n + 1, 3);
                d
            }
            // D-type fork at s3, 4-edge at the far end: n + 1 vertices
            CatalogType::AffineB(n) => {
                let mut d = Diagram::new(n + 1);
                d.edge(1, 3, 3).edge(2, 3, 3).path(3, n).edge(n, n + 1, 4);
                d
            }
            // path on n + 1 vertices with 4-edges at both ends
            CatalogType::AffineC(n) => {
                let mut d = Diagram::new(n + 1);
                d.edge(1, 2, 4).path(2, n).edge(n, n + 1, 4);
                d
            }
            // central path s3 - ... - s(n-1) (n - 3 vertices) with a fork of
            // two leaves at each end; for n = 4 this is the 4-star around s3
            CatalogType::AffineD(n) => {
                let mut d = Diagram::new(n + 1);
                d.edge(1, 3, 3)
                    .edge(2, 3, 3)
                    .path(3, n - 1)
                    .edge(n - 1, n, 3)
                    .edge(n - 1, n + 1, 3);
                d
            }
            // three arms of length 2 around s3
            CatalogType::AffineE(6) => {
                let mut d = Diagram::new(7);
                d.path(1, 5).edge(3, 6, 3).edge(6, 7, 3);
                d
            }
            // path of 7 with s8 attached to the middle vertex s4
            CatalogType::AffineE(7) => {
                let mut d = Diagram::new(8);
                d.path(1, 7).edge(4, 8, 3);
                d
            }
            // E8 extended by s9 at the end of the long arm
            CatalogType::AffineE(_) => {
                let mut d = Diagram::new(9);
                d.edge(1, 3, 3).edge(2, 4, 3).path(3, 9);
                d
            }
        };
        d.into_graph()
    }
}

/// Looks up a standard diagram by name, e.g. `A3`, `I2(7)`, `~D4`.
pub fn from_catalog(name: &str) -> Result<CoxeterGraph, GraphError> {
    Ok(name.parse::<CatalogType>()?.graph())
}
