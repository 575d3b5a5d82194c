//! Character tables with values stored exactly over roots of unity.
//!
//! A character value is an integer vector `c` representing
//! `Σ_j c_j ζ_e^j` with `ζ_e = e^{2πi/e}` and `e` the group exponent.
//! Inner products are evaluated in `f64` and rounded; the rounding
//! residue is reported so callers can gate on it.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num::complex::Complex64;

use crate::error::{CuError, Result};
use crate::rep::group::{digits, GroupTable};

/// Residue above which a rounded inner product is rejected.
pub const RESIDUE_GATE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepCharacter {
    pub dim: u64,
    /// One coefficient vector per conjugacy class.
    pub values: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterData {
    pub exponent: u64,
    pub class_of: Vec<usize>,
    pub class_sizes: Vec<u64>,
    pub irreps: Vec<IrrepCharacter>,
}

fn root_power(j: u64, e: u64) -> Complex64 {
    let angle = 2.0 * PI * (j % e) as f64 / e as f64;
    Complex64::new(angle.cos(), angle.sin())
}

impl CharacterData {
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn irrep_count(&self) -> usize {
        self.irreps.len()
    }

    pub fn dims(&self) -> Vec<u64> {
        self.irreps.iter().map(|r| r.dim).collect()
    }

    pub fn evaluate(&self, irrep: usize, class: usize) -> Complex64 {
        self.irreps[irrep].values[class]
            .iter()
            .enumerate()
            .map(|(j, &c)| root_power(j as u64, self.exponent) * c as f64)
            .sum()
    }

    /// `(1/|G|) Σ_g χ_a(g) conj(χ_b(g))`.
    pub fn inner_product(&self, a: usize, b: usize) -> Complex64 {
        let order: u64 = self.class_sizes.iter().sum();
        let total: Complex64 = (0..self.class_count())
            .map(|c| self.evaluate(a, c) * self.evaluate(b, c).conj() * self.class_sizes[c] as f64)
            .sum();
        total / order as f64
    }

    /// Fusion multiplicities `N^π_{στ}` by the character inner product,
    /// along with the largest rounding residue.
    pub fn numeric_fusion(&self, sigma: usize, tau: usize) -> Result<(Vec<u64>, f64)> {
        let order: u64 = self.class_sizes.iter().sum();
        let mut out = Vec::with_capacity(self.irrep_count());
        let mut worst: f64 = 0.0;
        for pi in 0..self.irrep_count() {
            let total: Complex64 = (0..self.class_count())
                .map(|c| {
                    self.evaluate(sigma, c) * self.evaluate(tau, c) * self.evaluate(pi, c).conj()
                        * self.class_sizes[c] as f64
                })
                .sum();
            let value = total / order as f64;
            let rounded = value.re.round();
            let residue = (value.re - rounded).abs().max(value.im.abs());
            worst = worst.max(residue);
            if residue >= RESIDUE_GATE || rounded < 0.0 {
                return Err(CuError::CharacterInconsistent(format!(
                    "multiplicity of irrep {pi} in {sigma}⊗{tau} evaluates to {value}"
                )));
            }
            out.push(rounded as u64);
        }
        let dims = self.dims();
        let weighted: u64 = out.iter().zip(&dims).map(|(n, d)| n * d).sum();
        if weighted != dims[sigma] * dims[tau] {
            return Err(CuError::CharacterInconsistent(format!(
                "{sigma}⊗{tau} decomposes with total dimension {weighted}, expected {}",
                dims[sigma] * dims[tau]
            )));
        }
        Ok((out, worst))
    }

    /// Checks `Σ d² = |G|`, `χ(1) = d` and row orthogonality within the gate.
    pub fn validate(&self, table: &GroupTable) -> Result<()> {
        let (class_of, sizes) = table.conjugacy_classes();
        if class_of != self.class_of || sizes != self.class_sizes {
            return Err(CuError::CharacterInconsistent("class structure does not match the group table".into()));
        }
        if self.irrep_count() != self.class_count() {
            return Err(CuError::CharacterInconsistent(format!(
                "{} irreps for {} conjugacy classes",
                self.irrep_count(),
                self.class_count()
            )));
        }
        for (i, r) in self.irreps.iter().enumerate() {
            if r.values.len() != self.class_count() {
                return Err(CuError::CharacterInconsistent(format!("irrep {i} has the wrong number of values")));
            }
        }
        let order = table.order() as u64;
        let sum_sq: u64 = self.irreps.iter().map(|r| r.dim * r.dim).sum();
        if sum_sq != order {
            return Err(CuError::CharacterInconsistent(format!("Σ d² = {sum_sq} but |G| = {order}")));
        }
        let id_class = self.class_of[table.identity()];
        for i in 0..self.irrep_count() {
            let at_id = self.evaluate(i, id_class);
            if (at_id - Complex64::new(self.irreps[i].dim as f64, 0.0)).norm() > RESIDUE_GATE {
                return Err(CuError::CharacterInconsistent(format!("χ_{i}(1) = {at_id} ≠ dimension")));
            }
            for j in 0..self.irrep_count() {
                let expected = if i == j { 1.0 } else { 0.0 };
                let ip = self.inner_product(i, j);
                if (ip - Complex64::new(expected, 0.0)).norm() > RESIDUE_GATE {
                    return Err(CuError::CharacterInconsistent(format!("⟨χ_{i}, χ_{j}⟩ = {ip}")));
                }
            }
        }
        Ok(())
    }

    /// Builds class-indexed data from per-element values, checking that
    /// each value is constant on conjugacy classes.
    pub fn from_element_values(table: &GroupTable, exponent: u64, irreps: Vec<(u64, Vec<Vec<i64>>)>) -> Result<Self> {
        let (class_of, class_sizes) = table.conjugacy_classes();
        let mut out = Vec::with_capacity(irreps.len());
        for (i, (dim, per_element)) in irreps.into_iter().enumerate() {
            let mut values: Vec<Option<Vec<i64>>> = vec![None; class_sizes.len()];
            for (g, v) in per_element.into_iter().enumerate() {
                let slot = &mut values[class_of[g]];
                match slot {
                    Some(prev) if *prev != v => {
                        return Err(CuError::CharacterInconsistent(format!("irrep {i} is not a class function")));
                    }
                    _ => *slot = Some(v),
                }
            }
            out.push(IrrepCharacter {
                dim,
                values: values.into_iter().map(|v| v.expect("every class is inhabited")).collect(),
            });
        }
        Ok(CharacterData {
            exponent,
            class_of,
            class_sizes,
            irreps: out,
        })
    }

    /// Characters of `Z_{n₁} × … × Z_{n_r}`: irrep `a` sends `g` to
    /// `ζ_e^{Σ aᵢ gᵢ e/nᵢ}`, both indexed in mixed radix.
    pub fn abelian(table: &GroupTable, orders: &[u64]) -> Self {
        let exponent = orders.iter().fold(1, |acc, &n| num::integer::lcm(acc, n));
        let n = table.order();
        let irreps = (0..n)
            .map(|a| {
                let a = digits(a, orders);
                let values = (0..n)
                    .map(|g| {
                        let g = digits(g, orders);
                        let power: u64 = a
                            .iter()
                            .zip(&g)
                            .zip(orders)
                            .map(|((x, y), m)| x * y * (exponent / m))
                            .sum::<u64>()
                            % exponent;
                        let mut coeffs = vec![0i64; exponent as usize];
                        coeffs[power as usize] = 1;
                        coeffs
                    })
                    .collect();
                IrrepCharacter { dim: 1, values }
            })
            .collect();
        CharacterData {
            exponent,
            class_of: (0..n).collect(),
            class_sizes: vec![1; n],
            irreps,
        }
    }

    /// Text form:
    ///
    /// ```text
    /// exponent 3
    /// classes 1 1 1
    /// 1 [1] [1] [1]
    /// 1 [1] [0,1] [0,0,1]
    /// 1 [1] [0,0,1] [0,1]
    /// ```
    ///
    /// Classes are numbered in order of their smallest element in the group
    /// table; each irrep line is the dimension followed by one bracketed
    /// coefficient list per class. Missing trailing coefficients are zero.
    pub fn parse(text: &str, table: &GroupTable) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let exponent: u64 = lines
            .next()
            .and_then(|l| l.strip_prefix("exponent"))
            .ok_or_else(|| CuError::parse("character table must start with `exponent e`"))?
            .trim()
            .parse()
            .map_err(|_| CuError::parse("bad exponent"))?;
        if exponent == 0 {
            return Err(CuError::parse("exponent must be positive"));
        }
        let sizes: Vec<u64> = lines
            .next()
            .and_then(|l| l.strip_prefix("classes"))
            .ok_or_else(|| CuError::parse("second line must be `classes <sizes…>`"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| CuError::parse(format!("bad class size `{t}`"))))
            .collect::<Result<_>>()?;
        let mut irreps = Vec::new();
        for line in lines {
            let (dim, rest) = line
                .split_once('[')
                .map(|(d, r)| (d.trim(), format!("[{r}")))
                .ok_or_else(|| CuError::parse(format!("irrep line without values: `{line}`")))?;
            let dim: u64 = dim.parse().map_err(|_| CuError::parse(format!("bad dimension `{dim}`")))?;
            let mut values = Vec::new();
            for chunk in rest.split(']').map(str::trim).filter(|c| !c.is_empty()) {
                let body = chunk
                    .strip_prefix('[')
                    .ok_or_else(|| CuError::parse(format!("expected `[` in `{line}`")))?;
                let mut coeffs = body
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<i64>().map_err(|_| CuError::parse(format!("bad coefficient `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                if coeffs.len() > exponent as usize {
                    return Err(CuError::parse(format!("more than {exponent} coefficients in `{line}`")));
                }
                coeffs.resize(exponent as usize, 0);
                values.push(coeffs);
            }
            if values.len() != sizes.len() {
                return Err(CuError::parse(format!(
                    "irrep line has {} values for {} classes",
                    values.len(),
                    sizes.len()
                )));
            }
            irreps.push(IrrepCharacter { dim, values });
        }
        let (class_of, actual) = table.conjugacy_classes();
        if actual != sizes {
            return Err(CuError::CharacterInconsistent(format!(
                "class sizes {sizes:?} do not match the group table ({actual:?})"
            )));
        }
        let data = CharacterData {
            exponent,
            class_of,
            class_sizes: sizes,
            irreps,
        };
        data.validate(table)?;
        Ok(data)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("exponent {}\nclasses", self.exponent);
        for s in &self.class_sizes {
            write!(out, " {s}").unwrap();
        }
        out.push('\n');
        for r in &self.irreps {
            write!(out, "{}", r.dim).unwrap();
            for v in &r.values {
                let last = v.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
                let body: Vec<String> = v[..last].iter().map(i64::to_string).collect();
                write!(out, " [{}]", body.join(",")).unwrap();
            }
            out.push('\n');
        }
        out
    }
}
