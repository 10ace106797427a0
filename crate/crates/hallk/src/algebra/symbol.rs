use std::fmt;

use super::AlgebraError;
use crate::quiver::{DimVector, Quiver};

/// One letter of a word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum GenSymbol {
    /// Interval generator f[lo,hi] with one loop index per vertex covered;
    /// lo == hi is the single-vertex generator.
    F {
        lo: usize,
        hi: usize,
        loops: Vec<i64>,
    },
    /// Weight-two simple at one vertex, labeled by a dominant GL2 weight
    /// (m1 >= m2).
    P2 { vertex: usize, m1: i64, m2: i64 },
    /// Multiplicative unit. Stored words never contain it; it exists so the
    /// parser and constructors can accept the literal "1".
    Unit,
}

impl GenSymbol {
    pub fn single(vertex: usize, l: i64) -> Self {
        GenSymbol::F {
            lo: vertex,
            hi: vertex,
            loops: vec![l],
        }
    }

    pub fn interval(lo: usize, hi: usize, loops: Vec<i64>) -> Result<Self, AlgebraError> {
        if lo == 0 || hi < lo {
            return Err(AlgebraError::InvalidSymbol(format!(
                "interval [{lo},{hi}] is empty or starts at 0"
            )));
        }
        if loops.len() != hi - lo + 1 {
            return Err(AlgebraError::InvalidSymbol(format!(
                "interval [{lo},{hi}] needs {} loop indices, got {}",
                hi - lo + 1,
                loops.len()
            )));
        }
        Ok(GenSymbol::F { lo, hi, loops })
    }

    pub fn p2(vertex: usize, m1: i64, m2: i64) -> Result<Self, AlgebraError> {
        if m1 < m2 {
            return Err(AlgebraError::InvalidSymbol(format!(
                "P2 weight ({m1},{m2}) is not dominant"
            )));
        }
        Ok(GenSymbol::P2 { vertex, m1, m2 })
    }

    /// P2 from fundamental-weight coordinates: u copies of the first, v of
    /// the second.
    pub fn p2_from_omega(vertex: usize, u: i64, v: i64) -> Result<Self, AlgebraError> {
        if u < 0 {
            return Err(AlgebraError::InvalidSymbol(format!(
                "P2 weight {u}*w1 + {v}*w2 is not dominant"
            )));
        }
        Self::p2(vertex, u + v, v)
    }

    /// Fundamental-weight coordinates (u, v) of a P2 symbol.
    pub fn omega_coords(&self) -> Option<(i64, i64)> {
        match self {
            GenSymbol::P2 { m1, m2, .. } => Some((m1 - m2, *m2)),
            _ => None,
        }
    }

    pub fn as_single(&self) -> Option<(usize, i64)> {
        match self {
            GenSymbol::F { lo, hi, loops } if lo == hi => Some((*lo, loops[0])),
            _ => None,
        }
    }

    /// Two-vertex interval [i, i+1]: returns (i, loop pair).
    pub fn as_box(&self) -> Option<(usize, (i64, i64))> {
        match self {
            GenSymbol::F { lo, hi, loops } if *hi == lo + 1 => Some((*lo, (loops[0], loops[1]))),
            _ => None,
        }
    }

    pub fn validate(&self, quiver: &Quiver) -> Result<(), AlgebraError> {
        let ok = match self {
            GenSymbol::F { lo, hi, .. } => {
                quiver.contains_vertex(*lo) && quiver.contains_vertex(*hi)
            }
            GenSymbol::P2 { vertex, .. } => quiver.contains_vertex(*vertex),
            GenSymbol::Unit => true,
        };
        if ok {
            Ok(())
        } else {
            Err(AlgebraError::InvalidSymbol(format!(
                "{self} does not fit on quiver {quiver}"
            )))
        }
    }

    pub fn dims(&self, n_vertices: usize) -> DimVector {
        match self {
            GenSymbol::F { lo, hi, .. } => DimVector::interval(n_vertices, *lo, *hi),
            GenSymbol::P2 { vertex, .. } => {
                let mut v = vec![0u32; n_vertices];
                v[vertex - 1] = 2;
                DimVector::new(v)
            }
            GenSymbol::Unit => DimVector::zero(n_vertices),
        }
    }

    /// Internal grade: total loop weight.
    pub fn weight(&self) -> i64 {
        match self {
            GenSymbol::F { loops, .. } => loops.iter().sum(),
            GenSymbol::P2 { m1, m2, .. } => m1 + m2,
            GenSymbol::Unit => 0,
        }
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSymbol::F { lo, hi, loops } => {
                let ls: Vec<String> = loops.iter().map(|l| l.to_string()).collect();
                if lo == hi {
                    write!(f, "f[{lo}]({})", ls.join(","))
                } else {
                    write!(f, "f[{lo},{hi}]({})", ls.join(","))
                }
            }
            GenSymbol::P2 { vertex, m1, m2 } => {
                write!(f, "P2[{vertex}]({},{})", m1 - m2, m2)
            }
            GenSymbol::Unit => f.write_str("1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_formats() {
        assert_eq!(GenSymbol::single(1, 3).to_string(), "f[1](3)");
        assert_eq!(
            GenSymbol::interval(1, 3, vec![0, -1, 2])
                .unwrap()
                .to_string(),
            "f[1,3](0,-1,2)"
        );
        // weight w1 + w2 prints in fundamental coordinates
        assert_eq!(GenSymbol::p2(1, 2, 1).unwrap().to_string(), "P2[1](1,1)");
        assert_eq!(
            GenSymbol::p2_from_omega(1, 1, 1).unwrap(),
            GenSymbol::p2(1, 2, 1).unwrap()
        );
    }

    #[test]
    fn dominance_is_enforced() {
        assert!(GenSymbol::p2(1, 0, 1).is_err());
        assert!(GenSymbol::p2_from_omega(1, -1, 3).is_err());
        assert!(GenSymbol::interval(2, 1, vec![]).is_err());
        assert!(GenSymbol::interval(1, 2, vec![0]).is_err());
    }

    #[test]
    fn grading_contributions() {
        let q = Quiver::type_a(3);
        let box12 = GenSymbol::interval(1, 2, vec![4, -1]).unwrap();
        assert_eq!(box12.dims(q.n_vertices()).entries(), &[1, 1, 0]);
        assert_eq!(box12.weight(), 3);
        let p = GenSymbol::p2(2, 1, 1).unwrap();
        assert_eq!(p.dims(3).entries(), &[0, 2, 0]);
        assert_eq!(p.weight(), 2);
        assert!(p.validate(&q).is_ok());
        assert!(GenSymbol::single(4, 0).validate(&q).is_err());
    }
}
