#![allow(dead_code)]

pub mod oracle;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pencil_core::canonical::{synthesize, KroneckerStructure};
use pencil_core::{Matrix, Pencil, Rational};
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_matrix<R: Rng>(rows: usize, cols: usize, density: f64, rng: &mut R) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| {
        if rng.random_bool(density) {
            q(rng.random_range(-3..=3), 1)
        } else {
            q(0, 1)
        }
    })
}

/// Mix of dense, sparse, low-rank and shared-kernel pencils.
pub fn random_pencil<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> Pencil {
    let mode = rng.random_range(0..5u8);
    let (e, a) = match mode {
        0 => (random_matrix(rows, cols, 1.0, rng), random_matrix(rows, cols, 1.0, rng)),
        1 => (random_matrix(rows, cols, 0.3, rng), random_matrix(rows, cols, 0.3, rng)),
        2 => {
            let k = rng.random_range(0..=rows.min(cols));
            let e = &random_matrix(rows, k, 1.0, rng) * &random_matrix(k, cols, 1.0, rng);
            (e, random_matrix(rows, cols, 0.5, rng))
        }
        3 => {
            let k = rng.random_range(0..=rows.min(cols));
            let j = rng.random_range(0..=rows.min(cols));
            let e = &random_matrix(rows, k, 0.7, rng) * &random_matrix(k, cols, 0.7, rng);
            let a = &random_matrix(rows, j, 0.7, rng) * &random_matrix(j, cols, 0.7, rng);
            (e, a)
        }
        _ => {
            let (e, a) = (random_matrix(rows, cols, 0.6, rng), random_matrix(rows, cols, 0.6, rng));
            plant_kernel(&e, &a, rng)
        }
    };
    Pencil::new(e, a).unwrap()
}

/// Forces a common kernel vector on `E` and `A`.
pub fn plant_kernel<R: Rng>(e: &Matrix, a: &Matrix, rng: &mut R) -> (Matrix, Matrix) {
    let n = e.cols();
    if n == 0 {
        return (e.clone(), a.clone());
    }
    let pivot = rng.random_range(0..n);
    let mut x: Vec<Rational> = (0..n).map(|_| q(rng.random_range(-2..=2), 1)).collect();
    x[pivot] = q(1, 1);
    // I - x e_pivot^T kills x.
    let proj = Matrix::from_fn(n, n, |i, j| {
        let id = if i == j { q(1, 1) } else { q(0, 1) };
        if j == pivot {
            id - &x[i]
        } else {
            id
        }
    });
    (e * &proj, a * &proj)
}

pub fn random_core<R: Rng>(n: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(n, n, |_, _| q(rng.random_range(-5..=5), rng.random_range(1..=3)))
}

/// Every block multiset and core size with `dim M + dim V <= budget`.
pub fn enumerate_structures(budget: usize) -> Vec<KroneckerStructure> {
    // (family, k, weight): family 0 = N, 1 = L, 2 = L^T.
    let mut items = Vec::new();
    for k in 1..=budget {
        if 2 * k <= budget {
            items.push((0u8, k, 2 * k));
        }
        if 2 * k - 1 <= budget {
            items.push((1u8, k, 2 * k - 1));
            items.push((2u8, k, 2 * k - 1));
        }
    }
    let mut out = Vec::new();
    for delta in 0..=budget / 2 {
        let mut chosen = Vec::new();
        rec(&items, 0, budget - 2 * delta, &mut chosen, delta, &mut out);
    }
    out
}

fn rec(
    items: &[(u8, usize, usize)],
    start: usize,
    left: usize,
    chosen: &mut Vec<usize>,
    delta: usize,
    out: &mut Vec<KroneckerStructure>,
) {
    let mut s = KroneckerStructure { core_dim: delta, ..Default::default() };
    for &i in chosen.iter() {
        let (fam, k, _) = items[i];
        let map: &mut BTreeMap<usize, usize> = match fam {
            0 => &mut s.nilpotent,
            1 => &mut s.l_blocks,
            _ => &mut s.lt_blocks,
        };
        *map.entry(k).or_insert(0) += 1;
    }
    out.push(s);
    for i in start..items.len() {
        if items[i].2 <= left {
            chosen.push(i);
            rec(items, i, left - items[i].2, chosen, delta, out);
            chosen.pop();
        }
    }
}

pub fn with_core<R: Rng>(s: &KroneckerStructure, rng: &mut R) -> KroneckerStructure {
    let mut s = s.clone();
    s.core = Some(random_core(s.core_dim, rng));
    s
}

pub fn synth_with_core<R: Rng>(s: &KroneckerStructure, rng: &mut R) -> (KroneckerStructure, Pencil) {
    let s = with_core(s, rng);
    let p = synthesize(&s);
    (s, p)
}

/// Drops trailing zeros.
pub fn trim(v: &[usize]) -> Vec<usize> {
    let end = v.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    v[..end].to_vec()
}
