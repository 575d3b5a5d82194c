//! Fusion rules against oracles that never touch the library's character
//! tables: explicit matrices for S3 and the group law for abelian groups.

use cuntz::rep::{load_group, FiniteGroup};

type Matrix = Vec<Vec<i64>>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    (0..n * m)
        .map(|r| (0..n * m).map(|c| a[r / m][c / m] * b[r % m][c % m]).collect())
        .collect()
}

fn trace(a: &Matrix) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

fn det3(p: &Matrix) -> i64 {
    p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1]) - p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0])
        + p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0])
}

fn permutations() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// `e_i ↦ e_{p(i)}`.
fn permutation_matrix(p: &[usize; 3]) -> Matrix {
    let mut m = vec![vec![0; 3]; 3];
    for i in 0..3 {
        m[p[i]][i] = 1;
    }
    m
}

/// The permutation action on `{c : Σ c_i = 0}` in the basis `e0 − e1, e1 − e2`.
fn standard_matrix(p: &[usize; 3]) -> Matrix {
    let basis = [[1, -1, 0], [0, 1, -1]];
    let mut cols = Vec::new();
    for v in basis {
        let mut w = [0i64; 3];
        for i in 0..3 {
            w[p[i]] += v[i];
        }
        cols.push([w[0], w[0] + w[1]]);
    }
    vec![vec![cols[0][0], cols[1][0]], vec![cols[0][1], cols[1][1]]]
}

/// Irreps of S3 as matrices, ordered trivial, sign, standard.
fn s3_irreps() -> Vec<Vec<Matrix>> {
    let perms = permutations();
    vec![
        perms.iter().map(|_| vec![vec![1]]).collect(),
        perms.iter().map(|p| vec![vec![det3(&permutation_matrix(p))]]).collect(),
        perms.iter().map(standard_matrix).collect(),
    ]
}

fn compose(g: &[usize; 3], h: &[usize; 3]) -> [usize; 3] {
    [g[h[0]], g[h[1]], g[h[2]]]
}

fn inverse(g: &[usize; 3]) -> [usize; 3] {
    let mut out = [0; 3];
    for i in 0..3 {
        out[g[i]] = i;
    }
    out
}

#[test]
fn s3_matrices_are_representations() {
    let perms = permutations();
    let irreps = s3_irreps();
    for rho in &irreps {
        for (i, g) in perms.iter().enumerate() {
            for (j, h) in perms.iter().enumerate() {
                let gh = perms.iter().position(|p| *p == compose(g, h)).unwrap();
                assert_eq!(mat_mul(&rho[i], &rho[j]), rho[gh]);
            }
        }
    }
}

#[test]
fn s3_fusion_matches_matrix_characters() {
    let perms = permutations();
    let irreps = s3_irreps();
    let group = FiniteGroup::s3().unwrap();
    assert_eq!(group.dims(), vec![1, 1, 2]);
    let order = perms.len() as i64;
    for s in 0..3 {
        for t in 0..3 {
            let expected: Vec<u64> = (0..3)
                .map(|pi| {
                    let total: i64 = perms
                        .iter()
                        .enumerate()
                        .map(|(i, g)| {
                            let inv = perms.iter().position(|p| *p == inverse(g)).unwrap();
                            trace(&kron(&irreps[s][i], &irreps[t][i])) * trace(&irreps[pi][inv])
                        })
                        .sum();
                    assert_eq!(total % order, 0);
                    (total / order) as u64
                })
                .collect();
            assert_eq!(group.fusion(s, t), expected.as_slice(), "{s} x {t}");
            let (numeric, residue) = group.numeric_fusion(s, t).unwrap();
            assert_eq!(numeric, expected);
            assert!(residue <= 1e-9, "residue {residue}");
        }
    }
    assert_eq!(group.fusion(2, 2), &[1, 1, 1]);
}

#[test]
fn abelian_fusion_is_the_dual_group_law() {
    for spec in ["cyclic:2", "cyclic:3", "cyclic:4", "product:2,2"] {
        let group = load_group(spec, None).unwrap();
        let k = group.irrep_count();
        assert_eq!(k, group.order());
        for s in 0..k {
            for t in 0..k {
                let symbolic = group.fusion(s, t);
                let (numeric, residue) = group.numeric_fusion(s, t).unwrap();
                assert_eq!(symbolic, numeric.as_slice(), "{spec}: {s} x {t}");
                assert!(residue <= 1e-9, "{spec}: residue {residue}");
                let sum = group.dual_add(s, t).unwrap();
                let point: Vec<u64> = (0..k).map(|pi| u64::from(pi == sum)).collect();
                assert_eq!(symbolic, point.as_slice());
            }
        }
        assert!(group.fusion_residue() <= 1e-9);
    }
}

#[test]
fn fusion_preserves_dimension() {
    for spec in ["s3", "d4", "q8", "product:2,3"] {
        let group = load_group(spec, None).unwrap();
        let dims = group.dims();
        for s in 0..dims.len() {
            for t in 0..dims.len() {
                let total: u64 = group.fusion(s, t).iter().zip(&dims).map(|(n, d)| n * d).sum();
                assert_eq!(total, dims[s] * dims[t], "{spec}: {s} x {t}");
            }
        }
        assert!(group.fusion_residue() <= 1e-9, "{spec}");
    }
}
