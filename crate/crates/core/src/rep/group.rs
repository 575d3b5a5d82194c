//! Finite groups given by multiplication tables.

use crate::error::{CuError, Result};

/// A validated multiplication table on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Checks closure, associativity, identity and two-sided inverses.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(CuError::InvalidGroup("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (g, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CuError::InvalidGroup(format!("row {g} has {} entries, expected {n}", row.len())));
            }
            for &h in row {
                if h >= n {
                    return Err(CuError::InvalidGroup(format!("entry {h} out of range in row {g}")));
                }
            }
            mul.extend_from_slice(row);
        }
        let at = |g: usize, h: usize| mul[g * n + h];
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| CuError::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for (g, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or_else(|| CuError::InvalidGroup(format!("element {g} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(CuError::InvalidGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        Ok(GroupTable { n, mul, identity, inverse })
    }

    /// Plain text: first line `n`, then `n` rows of `n` indices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| CuError::parse("empty group table"))?
            .parse()
            .map_err(|_| CuError::parse("first line of a group table must be the order"))?;
        let mut rows = Vec::with_capacity(n);
        for (i, line) in lines.enumerate() {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| CuError::parse(format!("bad entry `{t}` in row {i}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(CuError::parse(format!("expected {n} rows, found {}", rows.len())));
        }
        GroupTable::new(rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for g in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|h| self.mul(g, h).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.n + h]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn element_order(&self, g: usize) -> u64 {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.n).fold(1, |acc, g| num::integer::lcm(acc, self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|g| (0..self.n).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Conjugacy classes, numbered in order of their smallest element.
    /// Returns the class of each element and the class sizes.
    pub fn conjugacy_classes(&self) -> (Vec<usize>, Vec<u64>) {
        let mut class_of = vec![usize::MAX; self.n];
        let mut sizes = Vec::new();
        for g in 0..self.n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let c = sizes.len();
            let mut size = 0;
            for h in 0..self.n {
                let conj = self.mul(self.mul(h, g), self.inverse(h));
                if class_of[conj] == usize::MAX {
                    class_of[conj] = c;
                    size += 1;
                }
            }
            sizes.push(size);
        }
        (class_of, sizes)
    }

    /// `Z_{n₁} × … × Z_{n_r}`, elements in mixed radix with the first factor
    /// most significant.
    pub fn abelian(orders: &[u64]) -> Result<Self> {
        if orders.is_empty() || orders.iter().any(|&n| n == 0) {
            return Err(CuError::InvalidGroup("cyclic factors must be positive".into()));
        }
        let n: u64 = orders.iter().product();
        if n > 4096 {
            return Err(CuError::Unsupported(format!("group of order {n} is too large")));
        }
        let n = n as usize;
        let rows = (0..n)
            .map(|g| {
                let a = digits(g, orders);
                (0..n)
                    .map(|h| {
                        let b = digits(h, orders);
                        let sum: Vec<u64> = a.iter().zip(&b).zip(orders).map(|((x, y), m)| (x + y) % m).collect();
                        undigits(&sum, orders)
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(rows)
    }
}

/// Mixed-radix digits of `index`, first factor most significant.
pub fn digits(index: usize, orders: &[u64]) -> Vec<u64> {
    let mut out = vec![0; orders.len()];
    let mut rest = index as u64;
    for (slot, &m) in out.iter_mut().zip(orders).rev() {
        *slot = rest % m;
        rest /= m;
    }
    out
}

pub fn undigits(digits: &[u64], orders: &[u64]) -> usize {
    digits.iter().zip(orders).fold(0u64, |acc, (&d, &m)| acc * m + d) as usize
}
