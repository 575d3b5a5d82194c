//! Built-in nonabelian groups with their character tables.

use crate::error::Result;
use crate::rep::characters::CharacterData;
use crate::rep::group::GroupTable;

fn int_value(v: i64, exponent: u64) -> Vec<i64> {
    let mut out = vec![0; exponent as usize];
    out[0] = v;
    out
}

fn build(rows: Vec<Vec<usize>>, exponent: u64, irreps: Vec<(u64, Vec<i64>)>) -> Result<(GroupTable, CharacterData)> {
    let table = GroupTable::new(rows)?;
    let irreps = irreps
        .into_iter()
        .map(|(d, vals)| (d, vals.into_iter().map(|v| int_value(v, exponent)).collect()))
        .collect();
    let chars = CharacterData::from_element_values(&table, exponent, irreps)?;
    chars.validate(&table)?;
    Ok((table, chars))
}

/// Permutations of `{0, 1, 2}` in lexicographic order, `(g·h)(i) = g(h(i))`.
/// Irreps: trivial, sign, standard.
pub fn s3() -> Result<(GroupTable, CharacterData)> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let rows = perms
        .iter()
        .map(|g| perms.iter().map(|h| index([g[h[0]], g[h[1]], g[h[2]]])).collect())
        .collect();
    let sign = |p: &[usize; 3]| {
        let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let fixed = |p: &[usize; 3]| (0..3).filter(|&i| p[i] == i).count() as i64;
    build(
        rows,
        6,
        vec![
            (1, vec![1; 6]),
            (1, perms.iter().map(sign).collect()),
            (2, perms.iter().map(|p| fixed(p) - 1).collect()),
        ],
    )
}

/// Symmetries of the square, `r^a s^b` at index `a + 4b`, with
/// `s r s = r⁻¹`. Irreps: the four characters `r ↦ ±1, s ↦ ±1`
/// (ordered `++, +-, -+, --`), then the two-dimensional one.
pub fn d4() -> Result<(GroupTable, CharacterData)> {
    let split = |g: usize| (g % 4, g / 4);
    let rows = (0..8)
        .map(|g| {
            let (a, b) = split(g);
            (0..8)
                .map(|h| {
                    let (c, d) = split(h);
                    let rot = if b == 0 { (a + c) % 4 } else { (a + 4 - c) % 4 };
                    rot + 4 * ((b + d) % 2)
                })
                .collect()
        })
        .collect();
    let mut irreps = Vec::new();
    for (er, es) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
        let vals = (0..8)
            .map(|g| {
                let (a, b) = split(g);
                er.pow(a as u32) * es.pow(b as u32)
            })
            .collect();
        irreps.push((1, vals));
    }
    let two = (0..8)
        .map(|g| match split(g) {
            (0, 0) => 2,
            (2, 0) => -2,
            _ => 0,
        })
        .collect();
    irreps.push((2, two));
    build(rows, 4, irreps)
}

/// Quaternion units `±1, ±i, ±j, ±k` at index `4·sign + unit` with units
/// ordered `1, i, j, k`. Irreps: the four characters sending `(i, j)` to
/// `(±1, ±1)` (ordered `++, +-, -+, --`), then the two-dimensional one.
pub fn q8() -> Result<(GroupTable, CharacterData)> {
    // unit products as (sign, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let rows = (0..8)
        .map(|g| {
            (0..8)
                .map(|h| {
                    let (s, u) = UNIT[g % 4][h % 4];
                    4 * ((s + g / 4 + h / 4) % 2) + u
                })
                .collect()
        })
        .collect();
    let mut irreps = Vec::new();
    for (ei, ej) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
        let vals = (0..8)
            .map(|g| match g % 4 {
                0 => 1,
                1 => ei,
                2 => ej,
                _ => ei * ej,
            })
            .collect();
        irreps.push((1, vals));
    }
    let two = (0..8)
        .map(|g| match g {
            0 => 2,
            4 => -2,
            _ => 0,
        })
        .collect();
    irreps.push((2, two));
    build(rows, 4, irreps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_tables_validate() {
        let (t, c) = s3().unwrap();
        assert_eq!(c.dims(), vec![1, 1, 2]);
        assert_eq!(t.conjugacy_classes().1, vec![1, 3, 2]);
        let (t, c) = d4().unwrap();
        assert_eq!(c.dims(), vec![1, 1, 1, 1, 2]);
        assert!(!t.is_abelian());
        let (t, c) = q8().unwrap();
        assert_eq!(c.dims(), vec![1, 1, 1, 1, 2]);
        assert_eq!(t.exponent(), 4);
    }

    #[test]
    fn d4_and_q8_differ() {
        let (d, _) = d4().unwrap();
        let (q, _) = q8().unwrap();
        let involutions = |t: &GroupTable| (0..8).filter(|&g| t.element_order(g) == 2).count();
        assert_eq!(involutions(&d), 5);
        assert_eq!(involutions(&q), 1);
    }
}
