use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::modulus::{ext_gcd, factorize, gcd, Modulus};

/// Invariant factors `d_1 | d_2 | ... | d_t` (each `>= 2`) of a finite abelian group.
/// The empty list is the trivial group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InvariantFactors(Vec<u64>);

impl InvariantFactors {
    pub fn trivial() -> Self {
        InvariantFactors(Vec::new())
    }

    /// Normalizes an arbitrary direct product of cyclic groups `Z_{n_1} x ... x Z_{n_r}`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &n in orders {
            if n <= 1 {
                continue;
            }
            for (p, e) in factorize(n) {
                by_prime.entry(p).or_default().push(p.pow(e));
            }
        }
        let width = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; width];
        for mut powers in by_prime.into_values() {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            // Largest prime power goes into the last (largest) factor.
            for (i, q) in powers.into_iter().enumerate() {
                factors[width - 1 - i] *= q;
            }
        }
        InvariantFactors(factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn order(&self) -> u128 {
        self.0.iter().map(|&d| d as u128).product()
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "{{0}} (order 1) factors=[]");
        }
        let names: Vec<String> = self.0.iter().map(|d| format!("Z{d}")).collect();
        write!(
            f,
            "{} (order {}) factors={:?}",
            names.join(" x "),
            self.order(),
            self.0
        )
    }
}

/// Cyclic decomposition of `Z_M^s / rowspan(rel)`.
///
/// Row and column operations are unimodular, and reducing entries mod `M` is
/// legal because `M * Z^s` lies in the relation lattice throughout.
// Two rows are updated in lockstep, so index loops read better here.
#[allow(clippy::needless_range_loop)]
pub(crate) fn cokernel_mod(m: Modulus, s: usize, rel: Vec<Vec<u64>>) -> InvariantFactors {
    let mm = m.get() as i128;
    let mut a: Vec<Vec<i128>> = rel
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as i128 % mm).collect())
        .filter(|r: &Vec<i128>| r.iter().any(|&x| x != 0))
        .collect();
    let rows = a.len();
    let mut diag: Vec<u64> = Vec::new();
    let mut t = 0usize;
    while t < rows && t < s {
        // Pivot: nonzero entry with the smallest gcd against M.
        let mut best: Option<(u64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let g = gcd(x as u64, m.get());
                    if best.is_none_or(|(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let (u, _) = m.unit_to_gcd(a[t][t] as u64);
            for x in a[t].iter_mut() {
                *x = (*x * u as i128).rem_euclid(mm);
            }
            let mut dirty = false;
            for i in (t + 1)..rows {
                if a[i][t] == 0 {
                    continue;
                }
                let (p, b) = (a[t][t], a[i][t]);
                if b % p == 0 {
                    let q = b / p;
                    for j in 0..s {
                        a[i][j] = (a[i][j] - q * a[t][j]).rem_euclid(mm);
                    }
                } else {
                    let (g, x, y) = ext_gcd(p, b);
                    let (pg, bg) = (p / g, b / g);
                    for j in 0..s {
                        let (r0, r1) = (a[t][j], a[i][j]);
                        a[t][j] = (x * r0 + y * r1).rem_euclid(mm);
                        a[i][j] = (pg * r1 - bg * r0).rem_euclid(mm);
                    }
                    dirty = true;
                }
            }
            for j in (t + 1)..s {
                if a[t][j] == 0 {
                    continue;
                }
                let (p, b) = (a[t][t], a[t][j]);
                if b % p == 0 {
                    let q = b / p;
                    for row in a.iter_mut() {
                        row[j] = (row[j] - q * row[t]).rem_euclid(mm);
                    }
                } else {
                    let (g, x, y) = ext_gcd(p, b);
                    let (pg, bg) = (p / g, b / g);
                    for row in a.iter_mut() {
                        let (c0, c1) = (row[t], row[j]);
                        row[t] = (x * c0 + y * c1).rem_euclid(mm);
                        row[j] = (pg * c1 - bg * c0).rem_euclid(mm);
                    }
                    dirty = true;
                }
            }
            let column_clear = ((t + 1)..rows).all(|i| a[i][t] == 0);
            if !dirty && column_clear {
                break;
            }
        }
        diag.push(gcd(a[t][t] as u64, m.get()));
        t += 1;
    }
    // A diagonal entry d contributes Z / (dZ + MZ) = Z_d.
    let mut orders = diag;
    orders.extend(std::iter::repeat_n(m.get(), s - t));
    InvariantFactors::from_cyclic_orders(&orders)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_cyclic_products() {
        assert_eq!(
            InvariantFactors::from_cyclic_orders(&[4, 2]).factors(),
            &[2, 4]
        );
        assert_eq!(
            InvariantFactors::from_cyclic_orders(&[2, 3]).factors(),
            &[6]
        );
        assert_eq!(
            InvariantFactors::from_cyclic_orders(&[6, 4, 1]).factors(),
            &[2, 12]
        );
        assert!(InvariantFactors::from_cyclic_orders(&[1, 1]).is_trivial());
    }

    #[test]
    fn display_matches_report_style() {
        let f = InvariantFactors::from_cyclic_orders(&[4, 2]);
        assert_eq!(f.to_string(), "Z2 x Z4 (order 8) factors=[2, 4]");
        assert_eq!(
            InvariantFactors::trivial().to_string(),
            "{0} (order 1) factors=[]"
        );
    }

    #[test]
    fn cokernel_of_small_relations() {
        let m = Modulus::new(4).unwrap();
        assert_eq!(
            cokernel_mod(m, 2, vec![vec![2, 0], vec![0, 2]]).factors(),
            &[2, 2]
        );
        assert_eq!(cokernel_mod(m, 2, vec![vec![1, 1]]).factors(), &[4]);
        assert_eq!(cokernel_mod(m, 2, vec![vec![2, 2]]).factors(), &[2, 4]);
        let m12 = Modulus::new(12).unwrap();
        assert_eq!(cokernel_mod(m12, 1, vec![vec![8]]).factors(), &[4]);
        assert_eq!(cokernel_mod(m12, 2, vec![vec![3, 2]]).factors(), &[12]);
    }
}
