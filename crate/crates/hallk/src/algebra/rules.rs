//! The oriented rewrite rules on adjacent symbol pairs. Coefficients are
//! hard-coded Laurent monomials; the test module recomputes every one from
//! its shift triple so a transcription slip cannot survive the build.

use std::fmt;

use super::element::Word;
use super::symbol::GenSymbol;
use crate::coeff::LaurentQT;
use crate::quiver::Quiver;

/// How the single-past-box commutation rule treats loop indices.
/// `Aligned` commutes only the two alignments the bracket identities force
/// (box leading index equal to the single's, or one above it); `Uniform`
/// commutes every pattern with the same factor, which is known to be
/// inconsistent with the Serre check and exists for comparison experiments.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum R4Mode {
    Off,
    #[default]
    Aligned,
    Uniform,
}

impl R4Mode {
    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "off" => Some(R4Mode::Off),
            "aligned" => Some(R4Mode::Aligned),
            "uniform" => Some(R4Mode::Uniform),
            _ => None,
        }
    }
}

impl fmt::Display for R4Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            R4Mode::Off => "off",
            R4Mode::Aligned => "aligned",
            R4Mode::Uniform => "uniform",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R3Asc,
    R4,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R3Asc => "R3'",
            RuleId::R4 => "R4",
        })
    }
}

/// The rules assume the segment lo..=hi sits inside a linearly oriented,
/// loop-free run of the quiver; anything else is out of scope and words
/// there are left alone.
pub(crate) fn linear_run(quiver: &Quiver, lo: usize, hi: usize) -> bool {
    if !quiver.contains_vertex(lo) || !quiver.contains_vertex(hi) {
        return false;
    }
    (lo..=hi).all(|v| quiver.loops_at(v) == 0) && (lo..hi).all(|v| quiver.edge_count(v, v + 1) >= 1)
}

fn join_loops(lower: &[i64], upper: &[i64]) -> Vec<i64> {
    let mut out = lower.to_vec();
    out.extend_from_slice(upper);
    out
}

/// The twisted merge: last lower index up one, first upper index down one.
fn vee_loops(lower: &[i64], upper: &[i64]) -> Vec<i64> {
    let mut out = lower.to_vec();
    *out.last_mut().expect("intervals are nonempty") += 1;
    out.push(upper[0] - 1);
    out.extend_from_slice(&upper[1..]);
    out
}

type Branches = Vec<(Word, LaurentQT)>;

/// One rewrite of the adjacent pair (a, b), if any rule matches: the list of
/// replacement fragments with their coefficients, tagged by rule.
pub fn rewrite_pair(
    quiver: &Quiver,
    a: &GenSymbol,
    b: &GenSymbol,
    r4: R4Mode,
) -> Option<(RuleId, Branches)> {
    // same-vertex singles
    if let (Some((va, la)), Some((vb, lb))) = (a.as_single(), b.as_single()) {
        if va == vb && linear_run(quiver, va, va) {
            if la > lb {
                let mut branches: Branches = vec![(
                    vec![GenSymbol::single(va, la - 1), GenSymbol::single(va, lb + 1)],
                    LaurentQT::q_pow(-2),
                )];
                if la - lb - 2 >= 0 {
                    let p2 = GenSymbol::p2(va, la - 1, lb + 1).expect("dominant by the guard");
                    branches.push((vec![p2], LaurentQT::q_pow(-1)));
                }
                return Some((RuleId::R3, branches));
            }
            if lb >= la + 2 {
                let p2 = GenSymbol::p2(va, lb - 1, la + 1).expect("dominant by the guard");
                return Some((
                    RuleId::R3Asc,
                    vec![
                        (vec![p2], LaurentQT::q_pow(1)),
                        (
                            vec![GenSymbol::single(va, la + 1), GenSymbol::single(va, lb - 1)],
                            LaurentQT::q_pow(2),
                        ),
                    ],
                ));
            }
            return None;
        }
    }

    // single past box, sharing the left endpoint
    if let (Some((v, m)), Some((i, (m1, _)))) = (a.as_single(), b.as_box()) {
        if v == i && linear_run(quiver, i, i + 1) {
            let coeff = match r4 {
                R4Mode::Off => None,
                R4Mode::Uniform => Some(LaurentQT::q_pow(-1)),
                R4Mode::Aligned if m1 == m => Some(LaurentQT::q_pow(-1)),
                R4Mode::Aligned if m1 == m + 1 => Some(LaurentQT::q_pow(1)),
                R4Mode::Aligned => None,
            };
            if let Some(c) = coeff {
                return Some((RuleId::R4, vec![(vec![b.clone(), a.clone()], c)]));
            }
        }
    }

    // adjacent interval merges
    if let (
        GenSymbol::F {
            lo: alo,
            hi: ahi,
            loops: aloops,
        },
        GenSymbol::F {
            lo: blo,
            hi: bhi,
            loops: bloops,
        },
    ) = (a, b)
    {
        if *blo == ahi + 1 && linear_run(quiver, *alo, *bhi) {
            // lower interval first
            let join = GenSymbol::F {
                lo: *alo,
                hi: *bhi,
                loops: join_loops(aloops, bloops),
            };
            let vee = GenSymbol::F {
                lo: *alo,
                hi: *bhi,
                loops: vee_loops(aloops, bloops),
            };
            return Some((
                RuleId::R1,
                vec![
                    (vec![join], LaurentQT::q_pow(-1)),
                    (vec![vee], LaurentQT::monomial(-1, 0, -1)),
                ],
            ));
        }
        if *alo == bhi + 1 && linear_run(quiver, *blo, *ahi) {
            // upper interval first
            let join = GenSymbol::F {
                lo: *blo,
                hi: *ahi,
                loops: join_loops(bloops, aloops),
            };
            let vee = GenSymbol::F {
                lo: *blo,
                hi: *ahi,
                loops: vee_loops(bloops, aloops),
            };
            return Some((
                RuleId::R2,
                vec![
                    (vec![join], LaurentQT::one()),
                    (vec![vee], LaurentQT::monomial(-1, -1, -1)),
                ],
            ));
        }
    }

    None
}

/// Terminal pairs the rule set is happy with: same-vertex singles in the two
/// allowed alignments, and a box followed by a single at its left endpoint.
/// A terminal pair outside this set marks the word as unreduced.
pub fn pair_is_terminal(quiver: &Quiver, a: &GenSymbol, b: &GenSymbol) -> bool {
    if let (Some((va, la)), Some((vb, lb))) = (a.as_single(), b.as_single()) {
        if va == vb {
            return linear_run(quiver, va, va) && (lb == la || lb == la + 1);
        }
    }
    if let (Some((i, _)), Some((v, _))) = (a.as_box(), b.as_single()) {
        if v == i {
            return linear_run(quiver, i, i + 1);
        }
    }
    false
}

/// Strictly lexicographically decreasing measure for every rule branch:
/// (F-symbol count, sum of squared single-vertex loop indices, inversions
/// among same-vertex singles, single-before-box pairs at a shared left
/// endpoint). Each component is bounded by its value on the initial word,
/// which gives a computable step bound per reduction path.
pub fn measure(word: &Word) -> (u64, u64, u64, u64) {
    let m1 = word
        .iter()
        .filter(|s| matches!(s, GenSymbol::F { .. }))
        .count() as u64;
    let m2: u64 = word
        .iter()
        .filter_map(|s| s.as_single())
        .map(|(_, l)| (l * l) as u64)
        .sum();
    let mut m3 = 0u64;
    let mut m4 = 0u64;
    for (p, sa) in word.iter().enumerate() {
        for sb in &word[p + 1..] {
            if let (Some((va, la)), Some((vb, lb))) = (sa.as_single(), sb.as_single()) {
                if va == vb && la > lb {
                    m3 += 1;
                }
            }
            if let (Some((v, _)), Some((i, _))) = (sa.as_single(), sb.as_box()) {
                if v == i {
                    m4 += 1;
                }
            }
        }
    }
    (m1, m2, m3, m4)
}
