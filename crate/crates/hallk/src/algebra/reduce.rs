//! Worklist reduction to normal form. Rewriting is linear over words, so any
//! processing order yields the same fixpoint; the schedule is configurable
//! precisely to let tests exercise that claim.

use std::collections::BTreeMap;

use super::element::{AlgElement, Word};
use super::rules::{pair_is_terminal, rewrite_pair, R4Mode, RuleId};
use super::AlgebraError;
use crate::coeff::LaurentQT;

pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

/// Which pending word a reduction step picks next.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Schedule {
    #[default]
    Fifo,
    Lifo,
    Seeded(u64),
}

#[derive(Clone, Debug)]
pub struct ReduceOptions {
    pub r4: R4Mode,
    pub schedule: Schedule,
    pub max_steps: u64,
    pub trace: bool,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions {
            r4: R4Mode::default(),
            schedule: Schedule::default(),
            max_steps: DEFAULT_MAX_STEPS,
            trace: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub result: AlgElement,
    /// Some terminal word contains an adjacent pair the rule set has no
    /// relation for.
    pub unreduced: bool,
    /// Rule applications performed.
    pub steps: u64,
    /// One line per rule application when tracing was requested.
    pub trace: Vec<String>,
}

// splitmix64: tiny, stable, and good enough to scramble a worklist
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

type Redex = (usize, RuleId, Vec<(Word, LaurentQT)>);

fn first_redex(quiver: &crate::quiver::Quiver, word: &Word, r4: R4Mode) -> Option<Redex> {
    for p in 0..word.len().saturating_sub(1) {
        if let Some((id, branches)) = rewrite_pair(quiver, &word[p], &word[p + 1], r4) {
            return Some((p, id, branches));
        }
    }
    None
}

pub fn normal_form(x: &AlgElement, opts: &ReduceOptions) -> Result<Reduction, AlgebraError> {
    let quiver = x.quiver().clone();
    let mut work: Vec<(Word, LaurentQT)> = x.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut terminal = BTreeMap::<Word, LaurentQT>::new();
    let mut rng = match opts.schedule {
        Schedule::Seeded(seed) => Some(SplitMix64(seed)),
        _ => None,
    };
    let mut steps = 0u64;
    let mut trace = Vec::new();

    while !work.is_empty() {
        let idx = match opts.schedule {
            Schedule::Fifo => 0,
            Schedule::Lifo => work.len() - 1,
            Schedule::Seeded(_) => {
                (rng.as_mut().expect("seeded").next() % work.len() as u64) as usize
            }
        };
        let (word, coeff) = work.remove(idx);
        match first_redex(&quiver, &word, opts.r4) {
            None => {
                let entry = terminal.entry(word).or_insert_with(LaurentQT::zero);
                *entry = &*entry + &coeff;
            }
            Some((pos, rule, branches)) => {
                steps += 1;
                if steps > opts.max_steps {
                    return Err(AlgebraError::StepLimit {
                        limit: opts.max_steps,
                    });
                }
                if opts.trace {
                    trace.push(format!(
                        "step {steps}: {rule} at {pos} in {}",
                        AlgElement::word_text(&word)
                    ));
                }
                for (frag, rule_coeff) in branches {
                    let mut next = word[..pos].to_vec();
                    next.extend(frag);
                    next.extend_from_slice(&word[pos + 2..]);
                    work.push((next, &coeff * &rule_coeff));
                }
            }
        }
    }

    let result = AlgElement::from_terms(
        quiver.clone(),
        terminal.into_iter().filter(|(_, c)| !c.is_zero()),
    )?;
    let unreduced = result.terms().any(|(w, _)| {
        w.windows(2)
            .any(|pair| !pair_is_terminal(&quiver, &pair[0], &pair[1]))
    });
    Ok(Reduction {
        result,
        unreduced,
        steps,
        trace,
    })
}
