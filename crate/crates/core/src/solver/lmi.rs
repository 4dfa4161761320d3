use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::error::Result;
use crate::garside::GarsideStructure;
use crate::tuple::{Bound, Interval, TupleElement};

use super::conj::conj_to_interval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LmiVariant {
    /// Coordinate by coordinate: p_i, then q_i, then the next coordinate.
    Lex,
    /// All lower bounds first, then all upper bounds.
    LexPrime,
}

#[derive(Debug, Clone)]
pub struct MinimalIntervalResult {
    pub interval: Interval,
    /// y with `a^y` inside the interval.
    pub conjugator: Element,
    /// `a^y`.
    pub conjugated: TupleElement,
    pub variant: LmiVariant,
}

struct Walk<'a> {
    g: &'a dyn GarsideStructure,
    cur: TupleElement,
    /// Inverse of the accumulated conjugator.
    xinv: Element,
    steps: usize,
}

impl Walk<'_> {
    /// Tries to move the first `len` coordinates into `[lo, hi]`; commits
    /// the conjugation to the whole tuple on success.
    fn attempt(&mut self, len: usize, lo: Vec<i64>, hi: Vec<Bound>) -> Result<bool> {
        let prefix = self.cur.prefix(len);
        let iv = Interval::new(lo, hi)?;
        let res = conj_to_interval(self.g, &prefix, &iv, Some(self.steps))?;
        if !res.success {
            return Ok(false);
        }
        let mut entries = res.conjugated.into_entries();
        for e in &self.cur.entries()[len..] {
            entries.push(res.steps.iter().fold(e.clone(), |acc, h| acc.conj_simple_inv(self.g, h)));
        }
        self.cur = TupleElement::new(entries)?;
        for h in &res.steps {
            self.xinv.prepend_simple(self.g, h);
        }
        Ok(true)
    }

    fn raise_lower_bound(&mut self, len: usize, lo: &mut [i64], hi: &[Bound]) -> Result<()> {
        let i = len - 1;
        lo[i] = self.cur.get(i).inf();
        loop {
            let mut target = lo[..len].to_vec();
            target[i] += 1;
            if !self.attempt(len, target, hi[..len].to_vec())? {
                return Ok(());
            }
            lo[i] += 1;
        }
    }

    fn lower_upper_bound(&mut self, len: usize, lo: &[i64], hi: &mut [Bound], i: usize) -> Result<()> {
        let mut q = self.cur.get(i).sup();
        hi[i] = Some(q);
        while q > lo[i] {
            let mut target = hi[..len].to_vec();
            target[i] = Some(q - 1);
            if !self.attempt(len, lo[..len].to_vec(), target)? {
                break;
            }
            q -= 1;
            hi[i] = Some(q);
        }
        Ok(())
    }
}

/// The lexicographically minimal interval of the conjugacy class of `a`,
/// with a conjugator into it. Each one-step shrink is attempted with at most
/// ∥Δ∥−1 sliding steps.
pub fn lex_minimal_interval(g: &dyn GarsideStructure, a: &TupleElement, variant: LmiVariant) -> Result<MinimalIntervalResult> {
    a.check_structure(g)?;
    let r = a.r();
    let mut walk = Walk {
        g,
        cur: a.clone(),
        xinv: Element::identity(g),
        steps: g.delta_atom_length().saturating_sub(1),
    };
    let mut lo = a.infs();
    let mut hi: Vec<Bound> = vec![None; r];
    match variant {
        LmiVariant::Lex => {
            for i in 0..r {
                walk.raise_lower_bound(i + 1, &mut lo, &hi)?;
                walk.lower_upper_bound(i + 1, &lo, &mut hi, i)?;
            }
        }
        LmiVariant::LexPrime => {
            for i in 0..r {
                walk.raise_lower_bound(i + 1, &mut lo, &hi)?;
            }
            // Upper bounds are lowered against the full tuple so that the
            // final interval still meets the conjugacy class.
            for i in 0..r {
                walk.lower_upper_bound(r, &lo, &mut hi, i)?;
            }
        }
    }
    let interval = Interval::new(lo, hi)?;
    debug_assert!(walk.cur.in_interval(&interval)?);
    Ok(MinimalIntervalResult { interval, conjugator: walk.xinv.inverse(g), conjugated: walk.cur, variant })
}
