//! Quivers, dimension vectors, and the shift bookkeeping shared by every
//! other module: a shift triple records a cohomological degree together with
//! the two internal gradings, and collapses to a coefficient on demand.

use std::fmt;

use thiserror::Error;

use crate::coeff::LaurentQT;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("cannot parse quiver description: {0}")]
    Parse(String),
    #[error("vertex {vertex} out of range 1..={count}")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("dimension vector has length {got}, quiver has {expected} vertices")]
    DimMismatch { expected: usize, got: usize },
}

/// Finite quiver on vertices 1..=n, loops and multi-edges allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    n_vertices: usize,
    /// (tail, head) pairs, in declaration order
    edges: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        for &(t, h) in &edges {
            for v in [t, h] {
                if v == 0 || v > n_vertices {
                    return Err(QuiverError::VertexOutOfRange {
                        vertex: v,
                        count: n_vertices,
                    });
                }
            }
        }
        Ok(Quiver { n_vertices, edges })
    }

    /// Linear orientation 1 -> 2 -> ... -> n.
    pub fn type_a(n: usize) -> Self {
        Quiver {
            n_vertices: n,
            edges: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    /// One vertex with one loop.
    pub fn jordan() -> Self {
        Quiver {
            n_vertices: 1,
            edges: vec![(1, 1)],
        }
    }

    /// Parses the display format, e.g. "v=3; e=1>2,2>3" or "v=2".
    pub fn parse(text: &str) -> Result<Self, QuiverError> {
        let err = || QuiverError::Parse(text.to_string());
        let mut n_vertices = None;
        let mut edges = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            if let Some(v) = part.strip_prefix("v=") {
                n_vertices = Some(v.trim().parse::<usize>().map_err(|_| err())?);
            } else if let Some(e) = part.strip_prefix("e=") {
                for arrow in e.split(',') {
                    let arrow = arrow.trim();
                    if arrow.is_empty() {
                        continue;
                    }
                    let (t, h) = arrow.split_once('>').ok_or_else(err)?;
                    edges.push((
                        t.trim().parse::<usize>().map_err(|_| err())?,
                        h.trim().parse::<usize>().map_err(|_| err())?,
                    ));
                }
            } else {
                return Err(err());
            }
        }
        Quiver::new(n_vertices.ok_or_else(err)?, edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v >= 1 && v <= self.n_vertices
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(t, h)| t == v && h == v)
            .count()
    }

    /// Number of edges with the given tail and head.
    pub fn edge_count(&self, tail: usize, head: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(t, h)| t == tail && h == head)
            .count()
    }

    /// True when the quiver is exactly the linear orientation of type A.
    pub fn is_linear_type_a(&self) -> bool {
        *self == Quiver::type_a(self.n_vertices)
    }

    pub fn is_jordan(&self) -> bool {
        *self == Quiver::jordan()
    }

    fn check_dim(&self, a: &DimVector) -> Result<(), QuiverError> {
        if a.len() == self.n_vertices {
            Ok(())
        } else {
            Err(QuiverError::DimMismatch {
                expected: self.n_vertices,
                got: a.len(),
            })
        }
    }

    /// Vertex-wise pairing sum_i a_i b_i.
    pub fn pairing_u(&self, a: &DimVector, b: &DimVector) -> Result<i64, QuiverError> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(a.entries()
            .iter()
            .zip(b.entries())
            .map(|(&x, &y)| i64::from(x) * i64::from(y))
            .sum())
    }

    /// Edge-wise pairing sum_e a_{tail(e)} b_{head(e)}.
    pub fn pairing_v(&self, a: &DimVector, b: &DimVector) -> Result<i64, QuiverError> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self
            .edges
            .iter()
            .map(|&(t, h)| i64::from(a.entry(t)) * i64::from(b.entry(h)))
            .sum())
    }

    /// Shift acquired when two factors of dimensions a and b are multiplied.
    pub fn hall_shift(&self, a: &DimVector, b: &DimVector) -> Result<ShiftTriple, QuiverError> {
        let u = self.pairing_u(a, b)?;
        let v = self.pairing_v(a, b)?;
        Ok(ShiftTriple::new(u, -u - v, 0))
    }

    pub fn hall_shift_factor(
        &self,
        a: &DimVector,
        b: &DimVector,
    ) -> Result<LaurentQT, QuiverError> {
        Ok(self.hall_shift(a, b)?.kfactor())
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={}", self.n_vertices)?;
        if !self.edges.is_empty() {
            let arrows: Vec<String> = self.edges.iter().map(|(t, h)| format!("{t}>{h}")).collect();
            write!(f, "; e={}", arrows.join(","))?;
        }
        Ok(())
    }
}

/// Element of N^I, indexed by vertex (1-based).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Default)]
pub struct DimVector(Vec<u32>);

impl DimVector {
    pub fn new(entries: Vec<u32>) -> Self {
        DimVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    /// Indicator of a single vertex.
    pub fn unit(n: usize, vertex: usize) -> Self {
        let mut v = vec![0; n];
        v[vertex - 1] = 1;
        DimVector(v)
    }

    /// Indicator of the interval [lo, hi].
    pub fn interval(n: usize, lo: usize, hi: usize) -> Self {
        let mut v = vec![0; n];
        for i in lo..=hi {
            v[i - 1] = 1;
        }
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Entry at a 1-based vertex.
    pub fn entry(&self, vertex: usize) -> u32 {
        self.0[vertex - 1]
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        debug_assert_eq!(self.len(), other.len());
        DimVector(self.0.iter().zip(&other.0).map(|(&x, &y)| x + y).collect())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Composite shift [c]{l}<s>: cohomological degree c, first grading l,
/// second grading s. Composition is componentwise addition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Default)]
pub struct ShiftTriple {
    pub c: i64,
    pub l: i64,
    pub s: i64,
}

impl ShiftTriple {
    pub fn new(c: i64, l: i64, s: i64) -> Self {
        ShiftTriple { c, l, s }
    }

    pub fn zero() -> Self {
        ShiftTriple::default()
    }

    pub fn is_zero(&self) -> bool {
        *self == ShiftTriple::default()
    }

    /// Multiplicative shadow (-1)^c q^l t^s.
    pub fn kfactor(&self) -> LaurentQT {
        let sign = if self.c.rem_euclid(2) == 0 { 1 } else { -1 };
        LaurentQT::monomial(sign, self.l, self.s)
    }

    /// Trades the cohomological degree for the second grading: [c] = <c>
    /// on the level of the invariant below.
    pub fn koszul_normalize(&self) -> Self {
        ShiftTriple::new(0, self.l, self.s + self.c)
    }

    pub fn compose(&self, other: &ShiftTriple) -> Self {
        ShiftTriple::new(self.c + other.c, self.l + other.l, self.s + other.s)
    }

    pub fn negate(&self) -> Self {
        ShiftTriple::new(-self.c, -self.l, -self.s)
    }
}

impl fmt::Display for ShiftTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{{{}}}<{}>", self.c, self.l, self.s)
    }
}
