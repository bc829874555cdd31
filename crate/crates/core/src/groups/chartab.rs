//! Burnside-Dixon character tables.
//!
//! The class sums of the group algebra act on the span of the class sums by
//! integer matrices. Their common eigenvectors, computed over a prime field
//! `F_p` with `p = 1 mod exp(G)`, are the central characters
//! `omega(K) = |K| chi(g_K) / chi(1)`. The character values are recovered
//! from the multiplicities of the eigenvalues of each element, which are
//! small integers and therefore determined by their residues mod `p`.

use std::sync::Arc;

use num_bigint::BigInt;

use super::character::{Character, CharacterTable};
use super::subgroup::FiniteSubgroup;
use crate::error::{Error, Result};
use crate::exactnum::{CycloNum, Rational};

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut f = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            f.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        f.push(n);
    }
    f
}

fn primitive_root(p: u64) -> u64 {
    let f = prime_factors(p - 1);
    (2..p)
        .find(|&g| f.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime fields have primitive roots")
}

/// Reduced row echelon basis of the span of `vs` over `F_p`.
fn echelon(mut vs: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = vs.first().map_or(0, Vec::len);
    let mut row = 0;
    for col in 0..n {
        let Some(piv) = (row..vs.len()).find(|&r| vs[r][col] != 0) else {
            continue;
        };
        vs.swap(row, piv);
        let inv = inv_mod(vs[row][col], p);
        for x in vs[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..vs.len() {
            if r != row && vs[r][col] != 0 {
                let f = vs[r][col];
                for c in 0..n {
                    vs[r][c] = (vs[r][c] + p - f * vs[row][c] % p) % p;
                }
            }
        }
        row += 1;
    }
    vs.truncate(row);
    vs
}

fn pivot(v: &[u64]) -> usize {
    v.iter()
        .position(|&x| x != 0)
        .expect("nonzero basis vector")
}

/// Kernel of a square matrix over `F_p`.
fn kernel(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let rows = echelon(m.to_vec(), p);
    let pivots: Vec<usize> = rows.iter().map(|r| pivot(r)).collect();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Splits the class algebra into its simultaneous eigenlines and returns
/// the normalised central characters, one vector of length `r` each.
fn central_characters(consts: &[Vec<Vec<u64>>], r: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut e = vec![0u64; r];
            e[i] = 1;
            e
        })
        .collect()];
    for m in consts.iter().skip(1) {
        let mut next = Vec::new();
        for w in spaces {
            if w.len() == 1 {
                next.push(w);
                continue;
            }
            let d = w.len();
            let pivots: Vec<usize> = w.iter().map(|v| pivot(v)).collect();
            // image of each basis vector, expressed in the basis by reading
            // off the pivot coordinates
            let images: Vec<Vec<u64>> = w
                .iter()
                .map(|v| {
                    (0..r)
                        .map(|i| (0..r).map(|k| m[i][k] * v[k] % p).sum::<u64>() % p)
                        .collect()
                })
                .collect();
            let restricted: Vec<Vec<u64>> = (0..d)
                .map(|t| (0..d).map(|s| images[s][pivots[t]]).collect())
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|t| {
                        (0..d)
                            .map(|s| {
                                let x = restricted[t][s];
                                if s == t {
                                    (x + p - lambda) % p
                                } else {
                                    x
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ker = kernel(&shifted, p);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let vecs: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|i| (0..d).map(|s| c[s] * w[s][i] % p).sum::<u64>() % p)
                            .collect()
                    })
                    .collect();
                next.push(echelon(vecs, p));
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(Error::LiftFailure("class matrix not diagonalisable".into()));
            }
        }
        spaces = next;
    }
    let mut out = Vec::with_capacity(r);
    for w in spaces {
        if w.len() != 1 {
            return Err(Error::LiftFailure("eigenspace did not split".into()));
        }
        let v = w.into_iter().next().unwrap();
        if v[0] != 1 {
            return Err(Error::LiftFailure("central character vanishes at 1".into()));
        }
        out.push(v);
    }
    Ok(out)
}

/// Irreducible characters of `g`, ordered by dimension with the trivial
/// character first and ties broken by the exact values. Both orthogonality
/// relations are verified before returning.
pub fn character_table(g: &Arc<FiniteSubgroup>) -> Result<CharacterTable> {
    let n = g.order();
    let r = g.num_classes();
    let sizes = g.class_sizes();
    let e = g.exponent() as u64;
    let mut p = (2 * n as u64 + 1).max(e + 1);
    while !(is_prime(p) && p % e == 1) {
        p += 1;
    }
    let z = pow_mod(primitive_root(p), (p - 1) / e, p);

    // consts[j][i][k]: coefficient of class sum k in (class sum j)(class sum i)
    let mut consts = vec![vec![vec![0u64; r]; r]; r];
    for (j, kj) in g.classes().iter().enumerate() {
        for (i, ki) in g.classes().iter().enumerate() {
            for &x in kj {
                for &y in ki {
                    let xy = g.mul(x, y);
                    let k = g.class_of(xy);
                    if g.representative(k) == xy {
                        consts[j][i][k] += 1;
                    }
                }
            }
        }
    }
    let omegas = central_characters(&consts, r, p)?;

    let inv_class: Vec<usize> = (0..r).map(|c| g.inverse_class(c)).collect();
    let field = g.field();
    let mut chars = Vec::with_capacity(r);
    for w in &omegas {
        let s = (0..r)
            .map(|i| w[i] * w[inv_class[i]] % p * inv_mod(sizes[i] as u64 % p, p) % p)
            .sum::<u64>()
            % p;
        if s == 0 {
            return Err(Error::LiftFailure("degenerate central character".into()));
        }
        let d2 = n as u64 % p * inv_mod(s, p) % p;
        let d = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| d * d == d2)
            .ok_or_else(|| Error::LiftFailure("degree is not an integer".into()))?;
        let modp: Vec<u64> = (0..r)
            .map(|i| w[i] * d % p * inv_mod(sizes[i] as u64 % p, p) % p)
            .collect();
        let mut values = Vec::with_capacity(r);
        for c in 0..r {
            let x = g.representative(c);
            let o = g.element_order(x) as u64;
            let step = e / o;
            let powers: Vec<u64> = (0..o)
                .map(|l| modp[g.class_of(g.power(x, l as usize))])
                .collect();
            let inv_o = inv_mod(o % p, p);
            let mut weights = Vec::new();
            let mut total = 0u64;
            for j in 0..o {
                let mut m = 0u64;
                for (l, &v) in powers.iter().enumerate() {
                    let exp = (e - (step * j * l as u64) % e) % e;
                    m = (m + v * pow_mod(z, exp, p)) % p;
                }
                m = m * inv_o % p;
                if m > d {
                    return Err(Error::LiftFailure(format!(
                        "eigenvalue multiplicity {m} exceeds degree {d}"
                    )));
                }
                total += m;
                let k = (field.conductor() as u64 / o * j) as usize;
                weights.push((k, BigInt::from(m)));
            }
            if total != d {
                return Err(Error::LiftFailure(
                    "multiplicities do not sum to the degree".into(),
                ));
            }
            values.push(CycloNum::from_power_weights(field, &weights));
        }
        chars.push(Character::new(g, values));
    }
    chars.sort_by(|a, b| char_sort_key(a).cmp(&char_sort_key(b)));
    let table = CharacterTable {
        irreducibles: chars,
        class_sizes: sizes,
    };
    table.check_orthogonality()?;
    Ok(table)
}

/// Deterministic ordering key: dimension, then non-trivial after trivial,
/// then the exact coordinates of the values.
pub(crate) fn char_sort_key(c: &Character) -> (Rational, bool, Vec<(Vec<BigInt>, BigInt)>) {
    let trivial = c.values().iter().all(|v| *v == CycloNum::one(v.field()));
    (
        c.dim(),
        !trivial,
        c.values()
            .iter()
            .map(|v| {
                let (num, den) = v.raw_parts();
                (num.to_vec(), den.clone())
            })
            .collect(),
    )
}
