//! Lower-semicontinuous step functions on the circle `T = [0, 1)/~` with
//! values in a Cu-semigroup.
//!
//! A function with breakpoints `b_0 < … < b_{m-1}` takes the value `pts[i]`
//! at `b_i` and `arcs[i]` on the open arc `(b_i, b_{i+1})`, the last arc
//! wrapping through `0`. With no breakpoints it is the constant `arcs[0]`.

use std::fmt;

use num::{BigInt, One, Signed, Zero};
use rand::Rng;

use crate::error::{CuError, Result};
use crate::ext_nat::ExtNat;
use crate::literal::{format_rational, int, parse_rational, rat, split_list, split_top_level, Rational};
use crate::semigroup::{CaseRng, Chain, CuSemigroup};

#[derive(Debug, Clone, PartialEq)]
pub struct StepFn<E> {
    breaks: Vec<Rational>,
    arcs: Vec<E>,
    pts: Vec<E>,
}

impl<E> StepFn<E> {
    pub fn breaks(&self) -> &[Rational] {
        &self.breaks
    }

    pub fn arcs(&self) -> &[E] {
        &self.arcs
    }

    pub fn pts(&self) -> &[E] {
        &self.pts
    }

    pub fn is_constant(&self) -> bool {
        self.breaks.is_empty()
    }
}

/// `x mod 1` in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    if !x.is_negative() && x.numer() < x.denom() {
        return x.clone();
    }
    x - x.floor()
}

/// `Lsc(T, S)` restricted to step functions.
#[derive(Debug, Clone, PartialEq)]
pub struct StepLsc<S> {
    base: S,
}

/// Exponential then binary search for the least `j ≥ lo` with `pred(j)`,
/// for a predicate that is monotone in `j`.
fn least_index(lo: u64, pred: impl Fn(u64) -> bool) -> Option<u64> {
    const CAP: u64 = 1 << 40;
    if pred(lo) {
        return Some(lo);
    }
    let mut bad = lo;
    let mut step = 1;
    let good = loop {
        let j = lo.saturating_add(step);
        if pred(j) {
            break j;
        }
        bad = j;
        if step >= CAP {
            return None;
        }
        step *= 2;
    };
    let (mut bad, mut good) = (bad, good);
    while good - bad > 1 {
        let mid = bad + (good - bad) / 2;
        if pred(mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    Some(good)
}

impl<S: CuSemigroup> StepLsc<S> {
    pub fn new(base: S) -> Self {
        StepLsc { base }
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn constant(&self, v: S::Elem) -> StepFn<S::Elem> {
        StepFn {
            breaks: Vec::new(),
            arcs: vec![v],
            pts: Vec::new(),
        }
    }

    /// Validates sortedness, range and lower semicontinuity, then
    /// canonicalizes.
    pub fn make(&self, breaks: Vec<Rational>, arcs: Vec<S::Elem>, pts: Vec<S::Elem>) -> Result<StepFn<S::Elem>> {
        let f = StepFn { breaks, arcs, pts };
        self.validate(&f)?;
        Ok(self.canonicalize(f))
    }

    fn validate(&self, f: &StepFn<S::Elem>) -> Result<()> {
        let m = f.breaks.len();
        if m == 0 {
            if f.arcs.len() != 1 || !f.pts.is_empty() {
                return Err(CuError::InvalidElement("a constant step function has one value and no points".into()));
            }
        } else if f.arcs.len() != m || f.pts.len() != m {
            return Err(CuError::InvalidElement(format!(
                "{m} breakpoints need {m} arc and point values, got {} and {}",
                f.arcs.len(),
                f.pts.len()
            )));
        }
        for b in &f.breaks {
            if b.is_negative() || *b >= int(1) {
                return Err(CuError::InvalidElement(format!("breakpoint {} outside [0, 1)", format_rational(b))));
            }
        }
        if f.breaks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CuError::InvalidElement("breakpoints must be strictly increasing".into()));
        }
        for v in f.arcs.iter().chain(&f.pts) {
            self.base.check(v)?;
        }
        for i in 0..m {
            let before = &f.arcs[(i + m - 1) % m];
            if !self.base.leq(&f.pts[i], before)? || !self.base.leq(&f.pts[i], &f.arcs[i])? {
                return Err(CuError::InvalidElement(format!(
                    "not lower semicontinuous at {}",
                    format_rational(&f.breaks[i])
                )));
            }
        }
        Ok(())
    }

    /// Drops every breakpoint whose value agrees with both adjacent arcs.
    pub fn canonicalize(&self, mut f: StepFn<S::Elem>) -> StepFn<S::Elem> {
        loop {
            let m = f.breaks.len();
            if m == 0 {
                return f;
            }
            let removable = (0..m).find(|&i| f.pts[i] == f.arcs[i] && f.arcs[(i + m - 1) % m] == f.arcs[i]);
            match removable {
                Some(i) => {
                    f.breaks.remove(i);
                    f.pts.remove(i);
                    let v = f.arcs.remove(i);
                    if f.breaks.is_empty() {
                        f.arcs = vec![v];
                    }
                }
                None => return f,
            }
        }
    }

    pub fn eval(&self, f: &StepFn<S::Elem>, x: &Rational) -> S::Elem {
        let x = frac(x);
        if f.breaks.is_empty() {
            return f.arcs[0].clone();
        }
        match f.breaks.binary_search(&x) {
            Ok(i) => f.pts[i].clone(),
            Err(0) => f.arcs[f.breaks.len() - 1].clone(),
            Err(i) => f.arcs[i - 1].clone(),
        }
    }

    /// Arc and point values of `f` over a sorted breakpoint set containing
    /// the breakpoints of `f`.
    fn refine<'a>(&self, f: &'a StepFn<S::Elem>, on: &[Rational]) -> (Vec<&'a S::Elem>, Vec<&'a S::Elem>) {
        let m = f.breaks.len();
        let (mut arcs, mut pts) = (Vec::with_capacity(on.len()), Vec::with_capacity(on.len()));
        let mut j = 0;
        for b in on {
            while j < m && f.breaks[j] < *b {
                j += 1;
            }
            if j < m && f.breaks[j] == *b {
                arcs.push(&f.arcs[j]);
                pts.push(&f.pts[j]);
            } else {
                let arc = if j == 0 { f.arcs.last().expect("an arc") } else { &f.arcs[j - 1] };
                arcs.push(arc);
                pts.push(arc);
            }
        }
        (arcs, pts)
    }

    fn common_breaks(f: &StepFn<S::Elem>, g: &StepFn<S::Elem>) -> Vec<Rational> {
        let (a, b) = (&f.breaks, &g.breaks);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) if x == y => {
                    j += 1;
                    i += 1;
                    x
                }
                (Some(x), Some(y)) if x < y => {
                    i += 1;
                    x
                }
                (Some(x), None) => {
                    i += 1;
                    x
                }
                (_, Some(y)) => {
                    j += 1;
                    y
                }
                (None, None) => unreachable!(),
            };
            out.push(next.clone());
        }
        out
    }

    /// Inserts extra breakpoints without changing the function.
    pub fn with_breaks(&self, f: &StepFn<S::Elem>, extra: &[Rational]) -> StepFn<S::Elem> {
        let mut on: Vec<Rational> = f.breaks.iter().cloned().chain(extra.iter().map(frac)).collect();
        on.sort();
        on.dedup();
        if on.is_empty() {
            return f.clone();
        }
        let (arcs, pts) = self.refine(f, &on);
        let (arcs, pts) = (arcs.into_iter().cloned().collect(), pts.into_iter().cloned().collect());
        StepFn { breaks: on, arcs, pts }
    }

    fn zip_with(
        &self,
        f: &StepFn<S::Elem>,
        g: &StepFn<S::Elem>,
        op: impl Fn(&S::Elem, &S::Elem) -> Result<S::Elem>,
    ) -> Result<StepFn<S::Elem>> {
        let on = Self::common_breaks(f, g);
        if on.is_empty() {
            return Ok(self.constant(op(&f.arcs[0], &g.arcs[0])?));
        }
        let (fa, fp) = self.refine(f, &on);
        let (ga, gp) = self.refine(g, &on);
        let arcs = fa.iter().zip(&ga).map(|(x, y)| op(x, y)).collect::<Result<_>>()?;
        let pts = fp.iter().zip(&gp).map(|(x, y)| op(x, y)).collect::<Result<_>>()?;
        Ok(self.canonicalize(StepFn { breaks: on, arcs, pts }))
    }

    fn map_values(&self, f: &StepFn<S::Elem>, op: impl Fn(&S::Elem) -> S::Elem) -> StepFn<S::Elem> {
        self.canonicalize(StepFn {
            breaks: f.breaks.clone(),
            arcs: f.arcs.iter().map(&op).collect(),
            pts: f.pts.iter().map(&op).collect(),
        })
    }

    /// `x ↦ f(x + shift)`.
    pub fn rotate(&self, f: &StepFn<S::Elem>, shift: &Rational) -> StepFn<S::Elem> {
        let m = f.breaks.len();
        if m == 0 {
            return f.clone();
        }
        let shift = frac(shift);
        // Breakpoints at or past the shift move down by it; the rest wrap
        // around and follow them.
        let first = f.breaks.partition_point(|b| *b < shift);
        let order = (first..m).chain(0..first);
        let breaks = order
            .clone()
            .map(|i| if i >= first { &f.breaks[i] - &shift } else { &f.breaks[i] + int(1) - &shift })
            .collect();
        StepFn {
            breaks,
            arcs: order.clone().map(|i| f.arcs[i].clone()).collect(),
            pts: order.map(|i| f.pts[i].clone()).collect(),
        }
    }

    /// The rotation `γ_k(f)(z) = f(ω_n^k z)`.
    pub fn rotation(&self, n: u64, k: u64, f: &StepFn<S::Elem>) -> StepFn<S::Elem> {
        self.rotate(f, &rat((k % n) as i64, n as i64))
    }

    /// Approximant whose value on a neighbourhood of each breakpoint in
    /// `pins` is `pin` instead of the `k`-th approximant of the point value.
    /// `pin` must lie below the point values at the pins, and successive pins
    /// must be way-below each other for the result to be rapidly increasing.
    pub fn pinned_approximant(
        &self,
        f: &StepFn<S::Elem>,
        pins: &[Rational],
        pin: Option<&S::Elem>,
        k: u64,
    ) -> StepFn<S::Elem> {
        let f = if pin.is_some() { self.with_breaks(f, pins) } else { f.clone() };
        let m = f.breaks.len();
        if m == 0 {
            return self.constant(self.base.approximant(&f.arcs[0], k));
        }
        let pins: Vec<Rational> = pins.iter().map(frac).collect();
        let margin: Vec<S::Elem> = (0..m)
            .map(|i| match pin {
                Some(c) if pins.contains(&f.breaks[i]) => c.clone(),
                _ => self.base.approximant(&f.pts[i], k),
            })
            .collect();
        let arc_len = |i: usize| {
            if i + 1 < m {
                &f.breaks[i + 1] - &f.breaks[i]
            } else {
                &f.breaks[0] + int(1) - &f.breaks[i]
            }
        };
        let shortest = (0..m).map(arc_len).min().expect("at least one arc");
        let delta = shortest / int(2 * (k.min(1 << 40) as i64 + 3));
        let le = |x: &S::Elem, y: &S::Elem| self.base.leq(x, y).unwrap_or(false);
        let mut pieces: Vec<(Rational, S::Elem, S::Elem)> = Vec::with_capacity(2 * m);
        for i in 0..m {
            let v = &f.arcs[i];
            let (left, right) = (&margin[i], &margin[(i + 1) % m]);
            let inner = match least_index(k, |j| {
                let a = self.base.approximant(v, j);
                le(left, &a) && le(right, &a)
            }) {
                Some(j) => self.base.approximant(v, j.saturating_add(k)),
                None => v.clone(),
            };
            pieces.push((frac(&(&f.breaks[i] - &delta)), margin[i].clone(), margin[i].clone()));
            pieces.push((frac(&(&f.breaks[i] + &delta)), margin[i].clone(), inner));
        }
        pieces.sort_by(|x, y| x.0.cmp(&y.0));
        let mut out = StepFn {
            breaks: Vec::new(),
            arcs: Vec::new(),
            pts: Vec::new(),
        };
        for (b, p, a) in pieces {
            out.breaks.push(b);
            out.pts.push(p);
            out.arcs.push(a);
        }
        self.canonicalize(out)
    }

    /// A chain of step functions on fixed breakpoints whose arc and point
    /// values follow the given chains in the base. Its supremum is computed
    /// pointwise by [`StepLsc::sup_pointwise`].
    pub fn pointwise_chain(
        &self,
        breaks: Vec<Rational>,
        arcs: Vec<Chain<S::Elem>>,
        pts: Vec<Chain<S::Elem>>,
    ) -> Chain<StepFn<S::Elem>>
    where
        S: Clone + Send + Sync + 'static,
        S::Elem: 'static,
    {
        let me = self.clone();
        Chain::Sequence(std::sync::Arc::new(move |k| {
            let term = |c: &Chain<S::Elem>| me.base.chain_term(c, k).unwrap_or_else(|_| me.base.zero());
            let f = StepFn {
                breaks: breaks.clone(),
                arcs: arcs.iter().map(term).collect(),
                pts: pts.iter().map(term).collect(),
            };
            me.canonicalize(f)
        }))
    }

    pub fn sup_pointwise(
        &self,
        breaks: Vec<Rational>,
        arcs: &[Chain<S::Elem>],
        pts: &[Chain<S::Elem>],
    ) -> Result<StepFn<S::Elem>> {
        let arcs = arcs.iter().map(|c| self.base.sup_chain(c)).collect::<Result<_>>()?;
        let pts = pts.iter().map(|c| self.base.sup_chain(c)).collect::<Result<_>>()?;
        self.make(breaks, arcs, pts)
    }

    fn sample_break(rng: &mut CaseRng) -> Rational {
        const DENOMS: [i64; 6] = [2, 3, 4, 6, 8, 12];
        let q = DENOMS[rng.random_range(0..DENOMS.len())];
        rat(rng.random_range(0..q), q)
    }

    /// A point value compatible with both neighbours: one of them when it is
    /// below the other, an approximant of it, or zero.
    fn sample_point(&self, rng: &mut CaseRng, before: &S::Elem, after: &S::Elem) -> S::Elem {
        let le = |x: &S::Elem, y: &S::Elem| self.base.leq(x, y).unwrap_or(false);
        let lower = if le(before, after) {
            Some(before)
        } else if le(after, before) {
            Some(after)
        } else {
            None
        };
        match (lower, rng.random_range(0..4)) {
            (Some(v), 0 | 1) => v.clone(),
            (Some(v), 2) => self.base.approximant(v, rng.random_range(0..4)),
            _ => self.base.zero(),
        }
    }

    fn sample_with_breaks(&self, rng: &mut CaseRng, breaks: Vec<Rational>) -> StepFn<S::Elem> {
        if breaks.is_empty() {
            return self.constant(self.base.sample(rng));
        }
        let m = breaks.len();
        let arcs: Vec<S::Elem> = (0..m).map(|_| self.base.sample(rng)).collect();
        let pts = (0..m).map(|i| self.sample_point(rng, &arcs[(i + m - 1) % m], &arcs[i])).collect();
        self.canonicalize(StepFn { breaks, arcs, pts })
    }

    /// A step function invariant under rotation by `1/n`: a random pattern
    /// on `[0, 1/n)` repeated `n` times. With `zero_on_orbit`, `0` is a
    /// breakpoint with value zero (and so is every point `j/n`).
    pub fn sample_periodic(&self, rng: &mut CaseRng, n: u64, zero_on_orbit: bool) -> StepFn<S::Elem> {
        let period = rat(1, n as i64);
        let mut local: Vec<Rational> = (0..rng.random_range(0..=2)).map(|_| Self::sample_break(rng) * &period).collect();
        if zero_on_orbit {
            local.push(Rational::zero());
        }
        local.sort();
        local.dedup();
        if local.is_empty() {
            return self.constant(self.base.sample(rng));
        }
        let m = local.len();
        let arcs: Vec<S::Elem> = (0..m).map(|_| self.base.sample(rng)).collect();
        let pts: Vec<S::Elem> = (0..m)
            .map(|i| {
                if zero_on_orbit && local[i].is_zero() {
                    self.base.zero()
                } else {
                    self.sample_point(rng, &arcs[(i + m - 1) % m], &arcs[i])
                }
            })
            .collect();
        let mut f = StepFn {
            breaks: Vec::new(),
            arcs: Vec::new(),
            pts: Vec::new(),
        };
        for j in 0..n {
            let offset = rat(j as i64, n as i64);
            for i in 0..m {
                f.breaks.push(&local[i] + &offset);
                f.arcs.push(arcs[i].clone());
                f.pts.push(pts[i].clone());
            }
        }
        self.canonicalize(f)
    }

    fn parse_step(&self, literal: &str) -> Result<StepFn<S::Elem>> {
        let body = literal
            .trim()
            .strip_prefix("step{")
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| CuError::parse(format!("expected `step{{…}}`, got `{literal}`")))?;
        let (mut breaks, mut arcs, mut pts) = (None, None, None);
        for field in split_top_level(body, ';') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| CuError::parse(format!("expected `key=value` in `{field}`")))?;
            match key.trim() {
                "b" => breaks = Some(split_list(value).into_iter().map(parse_rational).collect::<Result<Vec<_>>>()?),
                "arcs" => arcs = Some(split_list(value).into_iter().map(|v| self.base.parse(v)).collect::<Result<Vec<_>>>()?),
                "pts" => pts = Some(split_list(value).into_iter().map(|v| self.base.parse(v)).collect::<Result<Vec<_>>>()?),
                other => return Err(CuError::parse(format!("unknown step field `{other}`"))),
            }
        }
        let missing = || CuError::parse("step literal needs `b=`, `arcs=` and `pts=`");
        self.make(breaks.ok_or_else(missing)?, arcs.ok_or_else(missing)?, pts.ok_or_else(missing)?)
            .map_err(|e| if e.is_parse() { e } else { CuError::parse(e.to_string()) })
    }
}

impl<S: CuSemigroup> CuSemigroup for StepLsc<S> {
    type Elem = StepFn<S::Elem>;

    fn name(&self) -> String {
        format!("step[{}]", self.base.name())
    }

    fn zero(&self) -> Self::Elem {
        self.constant(self.base.zero())
    }

    fn check(&self, f: &Self::Elem) -> Result<()> {
        self.validate(f)?;
        if self.canonicalize(f.clone()) != *f {
            return Err(CuError::InvalidElement("step function is not in canonical form".into()));
        }
        Ok(())
    }

    fn add(&self, f: &Self::Elem, g: &Self::Elem) -> Result<Self::Elem> {
        self.zip_with(f, g, |x, y| self.base.add(x, y))
    }

    fn leq(&self, f: &Self::Elem, g: &Self::Elem) -> Result<bool> {
        let on = Self::common_breaks(f, g);
        if on.is_empty() {
            return self.base.leq(&f.arcs[0], &g.arcs[0]);
        }
        let (fa, fp) = self.refine(f, &on);
        let (ga, gp) = self.refine(g, &on);
        for (x, y) in fa.iter().zip(&ga).chain(fp.iter().zip(&gp)) {
            if !self.base.leq(x, y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Each arc value of `f` is way-below `g` on the closed arc, and each
    /// point value is way-below the point value of `g`.
    fn way_below(&self, f: &Self::Elem, g: &Self::Elem) -> Result<bool> {
        let on = Self::common_breaks(f, g);
        if on.is_empty() {
            return self.base.way_below(&f.arcs[0], &g.arcs[0]);
        }
        let m = on.len();
        let (fa, fp) = self.refine(f, &on);
        let (ga, gp) = self.refine(g, &on);
        for i in 0..m {
            let v = &fa[i];
            for target in [&gp[i], &ga[i], &gp[(i + 1) % m]] {
                if !self.base.way_below(v, target)? {
                    return Ok(false);
                }
            }
            if !self.base.way_below(&fp[i], &gp[i])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Around each breakpoint a shrinking closed window takes the `k`-th
    /// approximant of the point value; between windows the arc value is
    /// approximated far enough to dominate both windows.
    fn approximant(&self, f: &Self::Elem, k: u64) -> Self::Elem {
        self.pinned_approximant(f, &[], None, k)
    }

    fn nat_scale(&self, n: ExtNat, f: &Self::Elem) -> Self::Elem {
        self.map_values(f, |v| self.base.nat_scale(n, v))
    }

    fn sample(&self, rng: &mut CaseRng) -> Self::Elem {
        let count = match rng.random_range(0..8) {
            0 | 1 => 0,
            2 | 3 => 1,
            4 | 5 => 2,
            _ => 3,
        };
        let mut breaks: Vec<Rational> = (0..count).map(|_| Self::sample_break(rng)).collect();
        breaks.sort();
        breaks.dedup();
        self.sample_with_breaks(rng, breaks)
    }

    fn parse(&self, literal: &str) -> Result<Self::Elem> {
        self.parse_step(literal)
    }

    fn format(&self, f: &Self::Elem) -> String {
        let b: Vec<String> = f.breaks.iter().map(format_rational).collect();
        let arcs: Vec<String> = f.arcs.iter().map(|v| self.base.format(v)).collect();
        let pts: Vec<String> = f.pts.iter().map(|v| self.base.format(v)).collect();
        format!("step{{b={}; arcs={}; pts={}}}", b.join(","), arcs.join(","), pts.join(","))
    }
}

impl<E: fmt::Display> fmt::Display for StepFn<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.breaks.is_empty() {
            return write!(f, "const {}", self.arcs[0]);
        }
        for i in 0..self.breaks.len() {
            write!(f, "[{} ↦ {}] {} ", format_rational(&self.breaks[i]), self.pts[i], self.arcs[i])?;
        }
        Ok(())
    }
}

/// Whether `q·n` is an integer, i.e. `q` lies in the orbit `{j/n}`.
pub fn on_orbit(q: &Rational, n: u64) -> bool {
    (q * Rational::from_integer(BigInt::from(n))).denom().is_one()
}
