//! Labels for the simple objects in the heart: nilpotent orbits as
//! partition tuples with their dimensions and closure order, explicit
//! weight data where the stabilizer representation theory is understood
//! (zero orbit, principal one-loop orbit), and the normalization shift.

use std::fmt;

use thiserror::Error;

use crate::quiver::{DimVector, Quiver, QuiverError, ShiftTriple};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplesError {
    #[error("parts must be weakly decreasing and positive, got {0:?}")]
    BadPartition(Vec<u32>),
    #[error("dominance needs equal sizes, got {0} and {1}")]
    SizeMismatch(u32, u32),
    #[error("principal family needs m >= 1, got {0}")]
    BadPrincipal(i64),
    #[error("orbit dimension {0} is odd; the half shift is undefined")]
    OddOrbitDim(i64),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// Weakly decreasing positive parts; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SimplesError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(SimplesError::BadPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The column partition (1^m), labeling the zero orbit.
    pub fn ones(m: u32) -> Self {
        Partition(vec![1; m as usize])
    }

    /// The row partition (m), labeling the principal orbit.
    pub fn row(m: u32) -> Self {
        if m == 0 {
            Partition::empty()
        } else {
            Partition(vec![m])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=cols)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        )
    }

    /// Partial-sum comparison; defined only between partitions of equal
    /// size.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, SimplesError> {
        if self.size() != other.size() {
            return Err(SimplesError::SizeMismatch(self.size(), other.size()));
        }
        let width = self.0.len().max(other.0.len());
        let mut acc_self = 0u32;
        let mut acc_other = 0u32;
        for k in 0..width {
            acc_self += self.0.get(k).copied().unwrap_or(0);
            acc_other += other.0.get(k).copied().unwrap_or(0);
            if acc_self > acc_other {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of m, largest part first, in descending lexicographic
/// order: (m), (m-1,1), ..., (1^m).
pub fn partitions_of(m: u32) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// Orbit dimension of a tuple of nilpotent classes: at each vertex,
/// a_i^2 minus the squares of the conjugate parts.
pub fn orbit_dim(orbit: &[Partition]) -> i64 {
    orbit
        .iter()
        .map(|lam| {
            let a = lam.size() as i64;
            let centralizer: i64 = lam
                .conjugate()
                .parts()
                .iter()
                .map(|&c| (c as i64) * (c as i64))
                .sum();
            a * a - centralizer
        })
        .sum()
}

/// The raw normalization shift attached to an orbit: half the orbit
/// dimension cohomologically up, half down in the loop grading. An odd
/// dimension would be a computation bug and is reported as an error.
pub fn simple_shift(orbit: &[Partition]) -> Result<ShiftTriple, SimplesError> {
    let d = orbit_dim(orbit);
    if d % 2 != 0 {
        return Err(SimplesError::OddOrbitDim(d));
    }
    Ok(ShiftTriple::new(d / 2, -d / 2, 0))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WeightLabel {
    /// A dominant integer weight of the full symmetry group at the zero
    /// orbit: one weakly decreasing row per vertex.
    ZeroOrbitWeight(Vec<Vec<i64>>),
    /// The determinant-power character of the principal-orbit stabilizer at
    /// a one-loop vertex.
    PrincipalJordanChar(i64),
    /// Orbit admits simples we do not enumerate.
    Opaque(String),
}

impl fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightLabel::ZeroOrbitWeight(rows) => {
                let body: Vec<String> = rows
                    .iter()
                    .map(|r| {
                        let xs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                        format!("({})", xs.join(","))
                    })
                    .collect();
                write!(f, "weight {}", body.join(","))
            }
            WeightLabel::PrincipalJordanChar(n) => write!(f, "char {n}"),
            WeightLabel::Opaque(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleLabel {
    pub orbit: Vec<Partition>,
    pub weight: WeightLabel,
    /// Koszul-normalized, so the cohomological component is always zero.
    pub shift: ShiftTriple,
}

impl SimpleLabel {
    pub fn new(orbit: Vec<Partition>, weight: WeightLabel) -> Result<Self, SimplesError> {
        let shift = simple_shift(&orbit)?.koszul_normalize();
        Ok(SimpleLabel {
            orbit,
            weight,
            shift,
        })
    }

    pub fn orbit_dim(&self) -> i64 {
        orbit_dim(&self.orbit)
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orbit: Vec<String> = self.orbit.iter().map(|p| p.to_string()).collect();
        write!(
            f,
            "orbit ({}) {} {}",
            orbit.join(","),
            self.weight,
            self.shift
        )
    }
}

/// The principal one-loop family: orbit (m) at a single vertex with the
/// n-th determinant character. For m = 1 the principal orbit is the zero
/// orbit and the label degenerates to a plain weight.
pub fn principal_char(m: i64, n: i64) -> Result<SimpleLabel, SimplesError> {
    if m < 1 {
        return Err(SimplesError::BadPrincipal(m));
    }
    let weight = if m == 1 {
        WeightLabel::ZeroOrbitWeight(vec![vec![n]])
    } else {
        WeightLabel::PrincipalJordanChar(n)
    };
    SimpleLabel::new(vec![Partition::row(m as u32)], weight)
}

fn is_zero_orbit(orbit: &[Partition]) -> bool {
    orbit.iter().all(|lam| lam.parts().iter().all(|&p| p == 1))
}

/// Weakly decreasing length-k integer rows with entries in the range.
fn dominant_rows(k: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(k: usize, lo: i64, hi: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for entry in lo..=hi {
            prefix.push(entry);
            go(k - 1, lo, entry, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        go(k, lo, hi, &mut Vec::new(), &mut out);
    }
    out
}

/// Every simple label of the given dimension vector whose weight data we
/// can enumerate inside the grade range; orbits with unclassified
/// stabilizer representations appear once with an opaque weight.
pub fn enumerate_simple_labels(
    quiver: &Quiver,
    a: &DimVector,
    grade_lo: i64,
    grade_hi: i64,
) -> Result<Vec<SimpleLabel>, SimplesError> {
    if a.len() != quiver.n_vertices() {
        return Err(QuiverError::DimMismatch {
            expected: quiver.n_vertices(),
            got: a.len(),
        }
        .into());
    }
    let per_vertex: Vec<Vec<Partition>> = a.entries().iter().map(|&ai| partitions_of(ai)).collect();
    let mut orbit_tuples = vec![Vec::new()];
    for choices in &per_vertex {
        let mut next = Vec::new();
        for tuple in &orbit_tuples {
            for lam in choices {
                let mut t: Vec<Partition> = tuple.clone();
                t.push(lam.clone());
                next.push(t);
            }
        }
        orbit_tuples = next;
    }

    let principal_one_loop = quiver.is_jordan() && a.entries()[0] >= 2;
    let mut out = Vec::new();
    for orbit in orbit_tuples {
        if is_zero_orbit(&orbit) {
            let mut weights = vec![Vec::new()];
            for &ai in a.entries() {
                let rows = dominant_rows(ai as usize, grade_lo, grade_hi);
                let mut next = Vec::new();
                for w in &weights {
                    for row in &rows {
                        let mut v: Vec<Vec<i64>> = w.clone();
                        v.push(row.clone());
                        next.push(v);
                    }
                }
                weights = next;
            }
            for w in weights {
                out.push(SimpleLabel::new(
                    orbit.clone(),
                    WeightLabel::ZeroOrbitWeight(w),
                )?);
            }
        } else if principal_one_loop && orbit[0] == Partition::row(a.entries()[0]) {
            for n in grade_lo..=grade_hi {
                out.push(SimpleLabel::new(
                    orbit.clone(),
                    WeightLabel::PrincipalJordanChar(n),
                )?);
            }
        } else {
            out.push(SimpleLabel::new(
                orbit.clone(),
                WeightLabel::Opaque("unclassified".into()),
            )?);
        }
    }
    Ok(out)
}
