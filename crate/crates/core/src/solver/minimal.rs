use crate::element::Element;
use crate::error::{Error, Result};
use crate::garside::{GarsideStructure, Side};
use crate::simple::Simple;
use crate::tuple::{Interval, TupleElement};

use super::{over_positive, under_positive};

/// Per-coordinate positive elements used to test whether conjugation by a
/// simple keeps the tuple inside the interval.
struct Conditions {
    p: Vec<i64>,
    q: Vec<Option<i64>>,
    /// Right side: Δ^{−p}v. Left side: v·Δ^{−p}.
    low: Vec<Element>,
    /// Right side: Δ^{q}v⁻¹. Left side: v⁻¹·Δ^{q}.
    high: Vec<Option<Element>>,
}

impl Conditions {
    fn new(g: &dyn GarsideStructure, v: &TupleElement, iv: &Interval, side: Side) -> Result<Self> {
        iv.check_dim(v.r())?;
        v.check_structure(g)?;
        if !v.in_interval(iv)? {
            return Err(Error::NotInInterval);
        }
        let mut low = Vec::with_capacity(v.r());
        let mut high = Vec::with_capacity(v.r());
        for (i, e) in v.entries().iter().enumerate() {
            let p = iv.lo[i];
            low.push(match side {
                Side::Right => Element::delta_power(g, -p).multiply(g, e)?,
                Side::Left => e.times_delta_power(g, -p),
            });
            high.push(match iv.hi[i] {
                None => None,
                Some(q) => Some(match side {
                    Side::Right => Element::delta_power(g, q).multiply(g, &e.inverse(g))?,
                    Side::Left => e.inverse(g).times_delta_power(g, q),
                }),
            });
        }
        Ok(Conditions { p: iv.lo.clone(), q: iv.hi.clone(), low, high })
    }

    /// The join of the corrections over all violated coordinates; identity
    /// iff `v^s` stays in the interval.
    fn right_correction(&self, g: &dyn GarsideStructure, s: &Simple) -> Simple {
        let mut acc = g.identity();
        for i in 0..self.p.len() {
            // (W s)\τ^p(s) = s\(W\τ^p(s))
            let t = g.tau(s, self.p[i]);
            acc = join_nontrivial(g, acc, under_nontrivial(g, s, &under_positive(g, &self.low[i], &t)), Side::Right);
            if let (Some(q), Some(w)) = (self.q[i], &self.high[i]) {
                let t = g.tau(s, -q);
                acc = join_nontrivial(g, acc, under_nontrivial(g, s, &under_positive(g, w, &t)), Side::Right);
            }
        }
        acc
    }

    /// Mirror of [`Conditions::right_correction`] for `v^{s⁻¹}`.
    fn left_correction(&self, g: &dyn GarsideStructure, s: &Simple) -> Simple {
        let mut acc = g.identity();
        for i in 0..self.p.len() {
            // τ^{−p}(s)/(sZ) = (τ^{−p}(s)/Z)/s
            let t = g.tau(s, -self.p[i]);
            acc = join_nontrivial(g, acc, over_nontrivial(g, &over_positive(g, &t, &self.low[i]), s), Side::Left);
            if let (Some(q), Some(w)) = (self.q[i], &self.high[i]) {
                let t = g.tau(s, q);
                acc = join_nontrivial(g, acc, over_nontrivial(g, &over_positive(g, &t, w), s), Side::Left);
            }
        }
        acc
    }

    fn minimal_above(&self, g: &dyn GarsideStructure, x: Simple, side: Side) -> Result<Simple> {
        let mut s = x;
        loop {
            let corr = match side {
                Side::Right => self.right_correction(g, &s),
                Side::Left => self.left_correction(g, &s),
            };
            if g.is_identity(&corr) {
                return Ok(s);
            }
            let next = match side {
                Side::Right => g.simple_product_if_simple(&s, &corr),
                Side::Left => g.simple_product_if_simple(&corr, &s),
            };
            s = next.ok_or(Error::NoneExists)?;
        }
    }
}

fn under_nontrivial(g: &dyn GarsideStructure, s: &Simple, t: &Simple) -> Simple {
    if g.is_identity(t) {
        *t
    } else {
        g.under(s, t)
    }
}

fn over_nontrivial(g: &dyn GarsideStructure, t: &Simple, s: &Simple) -> Simple {
    if g.is_identity(t) {
        *t
    } else {
        g.over(t, s)
    }
}

fn join_nontrivial(g: &dyn GarsideStructure, acc: Simple, s: Simple, side: Side) -> Simple {
    if g.is_identity(&s) {
        acc
    } else if g.is_identity(&acc) {
        s
    } else if side == Side::Right {
        g.right_join(&acc, &s)
    } else {
        g.left_join(&acc, &s)
    }
}

/// The minimal simple s with atom `x` dividing it (on the left for
/// [`Side::Right`], on the right for [`Side::Left`]) such that `v^s`
/// (respectively `v^{s⁻¹}`) stays in `iv`.
pub fn min_simple(g: &dyn GarsideStructure, v: &TupleElement, iv: &Interval, x: usize, side: Side) -> Result<Simple> {
    if x >= g.n_atoms() {
        return Err(Error::IndexOutOfRange { index: x as i64 + 1, max: g.n_atoms() });
    }
    let cond = Conditions::new(g, v, iv, side)?;
    cond.minimal_above(g, g.atom(x), side)
}

/// All minimal simples keeping `v` inside `iv`, one per surviving atom.
pub fn minimal_simple_set(g: &dyn GarsideStructure, v: &TupleElement, iv: &Interval, side: Side) -> Result<Vec<Simple>> {
    let cond = Conditions::new(g, v, iv, side)?;
    let m = g.n_atoms();
    let divides = |j: usize, s: &Simple| match side {
        Side::Right => g.atom_left_divides(j, s),
        Side::Left => g.atom_right_divides(j, s),
    };
    let mut kept: Vec<usize> = Vec::new();
    let mut r: Vec<Simple> = Vec::with_capacity(m);
    for i in 0..m {
        let rx = cond.minimal_above(g, g.atom(i), side)?;
        let in_j = kept.iter().any(|&j| divides(j, &rx));
        let in_k = (i + 1..m).any(|j| divides(j, &rx));
        if !in_j && !in_k {
            kept.push(i);
        }
        r.push(rx);
    }
    Ok(kept.into_iter().map(|i| r[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{artin_structure, bkl_structure, enumerate_simples};

    fn brute_min(g: &dyn GarsideStructure, v: &TupleElement, iv: &Interval, x: usize, side: Side) -> Simple {
        let all = enumerate_simples(g).unwrap();
        let valid: Vec<Simple> = all
            .into_iter()
            .filter(|s| match side {
                Side::Right => g.atom_left_divides(x, s) && v.conj_simple(g, s).in_interval(iv).unwrap(),
                Side::Left => g.atom_right_divides(x, s) && v.conj_simple_inv(g, s).in_interval(iv).unwrap(),
            })
            .collect();
        let min: Vec<&Simple> = valid
            .iter()
            .filter(|s| {
                valid.iter().all(|t| match side {
                    Side::Right => g.left_divides(s, t),
                    Side::Left => g.right_divides(t, s),
                })
            })
            .collect();
        assert_eq!(min.len(), 1, "unique minimum expected");
        *min[0]
    }

    #[test]
    fn examples() {
        let g = artin_structure(3).unwrap();
        let g = g.as_ref();
        let d = TupleElement::from_words(g, &[vec![1, 2, 1]]).unwrap();
        let iv = Interval::finite(vec![1], vec![1]).unwrap();
        assert_eq!(min_simple(g, &d, &iv, 0, Side::Right).unwrap(), g.delta());
        assert_eq!(minimal_simple_set(g, &d, &iv, Side::Right).unwrap(), vec![g.delta()]);

        let s1 = TupleElement::from_words(g, &[vec![1]]).unwrap();
        let iv = Interval::finite(vec![0], vec![1]).unwrap();
        assert_eq!(min_simple(g, &s1, &iv, 1, Side::Right).unwrap(), g.atom(1).then(&g.atom(0)));
        assert_eq!(min_simple(g, &s1, &iv, 0, Side::Right).unwrap(), g.atom(0));

        let one = TupleElement::from_words(g, &[vec![]]).unwrap();
        let iv = Interval::finite(vec![0], vec![0]).unwrap();
        assert_eq!(minimal_simple_set(g, &one, &iv, Side::Right).unwrap(), vec![g.atom(0), g.atom(1)]);

        let outside = Interval::finite(vec![1], vec![1]).unwrap();
        assert_eq!(minimal_simple_set(g, &s1, &outside, Side::Right), Err(Error::NotInInterval));
    }

    #[test]
    fn matches_brute_force() {
        for g in [artin_structure(4).unwrap(), bkl_structure(4).unwrap()] {
            let g = g.as_ref();
            let words = [vec![1, 2, -3], vec![2, 2, 1, -1, 3], vec![-1, 3, 3, 2]];
            let v = TupleElement::from_words(g, &words).unwrap();
            for iv in [v.own_interval(), Interval::lower(v.infs())] {
                for side in [Side::Right, Side::Left] {
                    for x in 0..g.n_atoms() {
                        assert_eq!(min_simple(g, &v, &iv, x, side).unwrap(), brute_min(g, &v, &iv, x, side));
                    }
                }
            }
        }
    }
}
