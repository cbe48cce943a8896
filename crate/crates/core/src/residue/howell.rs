//! Howell normal form over ℤ_M.
//!
//! Convention: each row has a leftmost nonzero ("pivot") column, pivot columns
//! strictly increase down the rows, every pivot entry is a positive divisor of
//! `M`, and entries above a pivot `d` lie in `[0, d)`. Together with the Howell
//! property (every span element vanishing on the first `c` columns is a
//! combination of rows pivoting at or after `c`) this basis is unique per span.

use super::matrix::axpy;
use super::modulus::{ext_gcd, Modulus};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct HowellRow {
    pub pivot: usize,
    pub d: u64,
    pub row: Vec<u64>,
}

fn leading(row: &[u64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

pub(crate) fn howell_rows(m: Modulus, n: usize, rows: Vec<Vec<u64>>) -> Vec<HowellRow> {
    let mut pool: Vec<Vec<u64>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| m.reduce(x)).collect::<Vec<_>>())
        .filter(|r: &Vec<u64>| leading(r).is_some())
        .collect();
    let mut out: Vec<HowellRow> = Vec::new();

    for c in 0..n {
        let (mut here, rest): (Vec<_>, Vec<_>) =
            pool.into_iter().partition(|r| leading(r) == Some(c));
        pool = rest;
        if here.is_empty() {
            continue;
        }
        let mut p = here.swap_remove(0);
        for mut r in here {
            let a = p[c] as i128;
            let b = r[c] as i128;
            let (g, s, t) = ext_gcd(a, b);
            let new_p: Vec<u64> = p
                .iter()
                .zip(&r)
                .map(|(&x, &y)| m.reduce_signed(s * x as i128 + t * y as i128))
                .collect();
            let (ag, bg) = (a / g, b / g);
            for (y, &x) in r.iter_mut().zip(&p) {
                *y = m.reduce_signed(ag * *y as i128 - bg * x as i128);
            }
            debug_assert_eq!(r[c], 0);
            p = new_p;
            if leading(&r).is_some() {
                pool.push(r);
            }
        }
        let (u, d) = m.unit_to_gcd(p[c]);
        for x in p.iter_mut() {
            *x = m.mul(u, *x);
        }
        debug_assert_eq!(p[c], d);
        let sat: Vec<u64> = p.iter().map(|&x| m.mul(m.get() / d, x)).collect();
        debug_assert_eq!(sat[c], 0);
        if leading(&sat).is_some() {
            pool.push(sat);
        }
        out.push(HowellRow {
            pivot: c,
            d,
            row: p,
        });
    }

    // Entries above pivots; row i only touches columns >= its pivot.
    for i in 1..out.len() {
        let (head, tail) = out.split_at_mut(i);
        let pr = &tail[0];
        for above in head.iter_mut() {
            let q = above.row[pr.pivot] / pr.d;
            if q != 0 {
                axpy(m, &mut above.row, m.neg(q % m.get()), &pr.row);
            }
        }
    }
    out
}

/// Reduces `v` against a Howell basis; returns the remainder and the quotients used.
pub(crate) fn reduce(m: Modulus, basis: &[HowellRow], v: &mut [u64]) -> Vec<u64> {
    let mut qs = Vec::with_capacity(basis.len());
    for hr in basis {
        let q = v[hr.pivot] / hr.d;
        if q != 0 {
            axpy(m, v, m.neg(q), &hr.row);
        }
        qs.push(q);
    }
    qs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_from_pairs() {
        let m = Modulus::new(4).unwrap();
        let h = howell_rows(m, 2, vec![vec![2, 2], vec![0, 2]]);
        let rows: Vec<_> = h.iter().map(|r| r.row.clone()).collect();
        assert_eq!(rows, vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn saturation_row_is_kept() {
        // span{(2,1)} over Z4 contains (0,2) = 2*(2,1), which must surface as its own row.
        let m = Modulus::new(4).unwrap();
        let h = howell_rows(m, 2, vec![vec![2, 1]]);
        let rows: Vec<_> = h.iter().map(|r| r.row.clone()).collect();
        assert_eq!(rows, vec![vec![2, 1], vec![0, 2]]);
        let mut v = vec![0, 2];
        reduce(m, &h, &mut v);
        assert_eq!(v, vec![0, 0]);
    }

    #[test]
    fn empty_input_is_trivial() {
        let m = Modulus::new(6).unwrap();
        assert!(howell_rows(m, 3, vec![]).is_empty());
        assert!(howell_rows(m, 3, vec![vec![0, 6, 12]]).is_empty());
    }
}
