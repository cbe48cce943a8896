use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::howell::{howell_rows, reduce, HowellRow};
use super::invariants::{cokernel_mod, InvariantFactors};
use super::matrix::ResidueMatrix;
use super::modulus::Modulus;
use crate::error::{Error, Result};

/// A subgroup of `(ℤ_M)^n`, stored as its Howell basis.
///
/// Two subgroups are equal exactly when their bases are identical, so the
/// derived `PartialEq` is span equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    modulus: Modulus,
    dim: usize,
    basis: Vec<HowellRow>,
}

impl Subgroup {
    /// Canonical basis of the row span of `a`.
    pub fn howell(a: &ResidueMatrix) -> Self {
        Subgroup {
            modulus: a.modulus(),
            dim: a.cols(),
            basis: howell_rows(a.modulus(), a.cols(), a.rows().to_vec()),
        }
    }

    pub fn from_rows(modulus: Modulus, dim: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        Ok(Self::howell(&ResidueMatrix::new(modulus, dim, rows)?))
    }

    pub(crate) fn from_rows_unchecked(modulus: Modulus, dim: usize, rows: Vec<Vec<u64>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == dim));
        Subgroup {
            modulus,
            dim,
            basis: howell_rows(modulus, dim, rows),
        }
    }

    pub fn trivial(modulus: Modulus, dim: usize) -> Self {
        Subgroup {
            modulus,
            dim,
            basis: Vec::new(),
        }
    }

    pub fn full(modulus: Modulus, dim: usize) -> Self {
        Self::howell(&ResidueMatrix::identity(modulus, dim))
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> ResidueMatrix {
        ResidueMatrix::new(self.modulus, self.dim, self.basis_rows().cloned().collect())
            .expect("basis rows have ambient width")
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.basis.iter().map(|r| &r.row)
    }

    /// `(pivot column, pivot divisor)` per basis row.
    pub fn pivots(&self) -> Vec<(usize, u64)> {
        self.basis.iter().map(|r| (r.pivot, r.d)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn order(&self) -> u128 {
        let m = self.modulus.get() as u128;
        self.basis
            .iter()
            .map(|r| m / r.d as u128)
            .try_fold(1u128, |acc, x| acc.checked_mul(x))
            .expect("subgroup order overflows u128")
    }

    /// Order of the ambient group `M^n`, if it fits.
    pub fn ambient_order(&self) -> Option<u128> {
        (self.modulus.get() as u128).checked_pow(self.dim as u32)
    }

    fn check_vec(&self, v: &[u64]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_same(&self, other: &Subgroup) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn membership(&self, v: &[u64]) -> Result<bool> {
        Ok(self.coset_reduce(v)?.iter().all(|&x| x == 0))
    }

    /// Canonical representative of `v + H`.
    pub fn coset_reduce(&self, v: &[u64]) -> Result<Vec<u64>> {
        self.check_vec(v)?;
        let mut w: Vec<u64> = v.iter().map(|&x| self.modulus.reduce(x)).collect();
        reduce(self.modulus, &self.basis, &mut w);
        Ok(w)
    }

    /// Coefficients `q` with `v = sum q_i * basis_i`, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[u64]) -> Result<Option<Vec<u64>>> {
        self.check_vec(v)?;
        let mut w: Vec<u64> = v.iter().map(|&x| self.modulus.reduce(x)).collect();
        let qs = reduce(self.modulus, &self.basis, &mut w);
        Ok(w.iter().all(|&x| x == 0).then_some(qs))
    }

    pub fn contains(&self, other: &Subgroup) -> Result<bool> {
        self.check_same(other)?;
        for r in other.basis_rows() {
            if !self.membership(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_same(other)?;
        let rows = self
            .basis_rows()
            .chain(other.basis_rows())
            .cloned()
            .collect();
        Ok(Self::from_rows_unchecked(self.modulus, self.dim, rows))
    }

    /// Annihilator `{x : <b, x> = 0 for every b in H}`.
    pub fn orthogonal(&self) -> Subgroup {
        let m = self.modulus;
        let r = self.basis.len();
        let n = self.dim;
        // Rows (B^T e_i | e_i); span elements with zero left block are (0 | x) with x in the kernel.
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row = Vec::with_capacity(r + n);
                row.extend(self.basis.iter().map(|b| b.row[i]));
                row.extend((0..n).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        let h = howell_rows(m, r + n, rows);
        let kernel = h
            .into_iter()
            .filter(|hr| hr.pivot >= r)
            .map(|hr| hr.row[r..].to_vec())
            .collect();
        Self::from_rows_unchecked(m, n, kernel)
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        Ok(self.orthogonal().sum(&other.orthogonal())?.orthogonal())
    }

    /// Elements of `H` that vanish on every listed coordinate.
    pub fn vanishing_on(&self, cols: &[usize]) -> Subgroup {
        let mut zero = vec![false; self.dim];
        for &c in cols {
            zero[c] = true;
        }
        // Put the constrained coordinates first; rows pivoting after them vanish there.
        let order: Vec<usize> = (0..self.dim)
            .filter(|&c| zero[c])
            .chain((0..self.dim).filter(|&c| !zero[c]))
            .collect();
        let k = order.iter().take_while(|&&c| zero[c]).count();
        let permuted: Vec<Vec<u64>> = self
            .basis_rows()
            .map(|r| order.iter().map(|&c| r[c]).collect())
            .collect();
        let h = howell_rows(self.modulus, self.dim, permuted);
        let rows = h
            .into_iter()
            .filter(|hr| hr.pivot >= k)
            .map(|hr| {
                let mut v = vec![0; self.dim];
                for (pos, &c) in order.iter().enumerate() {
                    v[c] = hr.row[pos];
                }
                v
            })
            .collect();
        Self::from_rows_unchecked(self.modulus, self.dim, rows)
    }

    /// Image under keeping only the listed coordinates, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Subgroup {
        let rows = self
            .basis_rows()
            .map(|r| cols.iter().map(|&c| r[c]).collect())
            .collect();
        Self::from_rows_unchecked(self.modulus, cols.len(), rows)
    }

    /// Image under the embedding that places coordinate `i` at `positions[i]` of a `dim`-vector.
    pub fn embed(&self, dim: usize, positions: &[usize]) -> Subgroup {
        let rows = self
            .basis_rows()
            .map(|r| {
                let mut v = vec![0; dim];
                for (i, &p) in positions.iter().enumerate() {
                    v[p] = r[i];
                }
                v
            })
            .collect();
        Self::from_rows_unchecked(self.modulus, dim, rows)
    }

    /// Invariant factors of `self / b`.
    pub fn quotient_invariants(&self, b: &Subgroup) -> Result<InvariantFactors> {
        self.check_same(b)?;
        let m = self.modulus;
        let s = self.basis.len();
        // self ≅ Z^s / R, where R is generated by the saturation relations
        // (M/d_i) e_i - coords((M/d_i) a_i) and contains M Z^s.
        let mut rel: Vec<Vec<u64>> = Vec::with_capacity(s + b.basis.len());
        for (i, hr) in self.basis.iter().enumerate() {
            let e = m.get() / hr.d;
            let mut w: Vec<u64> = hr.row.iter().map(|&x| m.mul(e, x)).collect();
            let qs = reduce(m, &self.basis, &mut w);
            if w.iter().any(|&x| x != 0) {
                return Err(Error::InternalInconsistency(
                    "saturation row escaped its own span".into(),
                ));
            }
            let mut r: Vec<u64> = qs.iter().map(|&q| m.neg(q)).collect();
            r[i] = m.add(r[i], e % m.get());
            rel.push(r);
        }
        for row in b.basis_rows() {
            match self.coordinates(row)? {
                Some(qs) => rel.push(qs),
                None => return Err(Error::NotSubgroup),
            }
        }
        Ok(cokernel_mod(m, s, rel))
    }

    /// Every element exactly once, in a fixed mixed-radix order.
    pub fn enumerate(&self, cap: u128) -> Result<Vec<Vec<u64>>> {
        let order = self.order();
        if order > cap {
            return Err(Error::OrderExceedsCap { order, cap });
        }
        let m = self.modulus;
        let radices: Vec<u64> = self.basis.iter().map(|r| m.get() / r.d).collect();
        let mut digits = vec![0u64; radices.len()];
        let mut out = Vec::with_capacity(order as usize);
        loop {
            let mut v = vec![0u64; self.dim];
            for (q, hr) in digits.iter().zip(&self.basis) {
                super::matrix::axpy(m, &mut v, *q, &hr.row);
            }
            out.push(v);
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return Ok(out);
                }
                digits[i] += 1;
                if digits[i] < radices[i] {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SubgroupRepr {
    modulus: Modulus,
    ambient_dim: usize,
    basis: Vec<Vec<u64>>,
}

impl Serialize for Subgroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubgroupRepr {
            modulus: self.modulus,
            ambient_dim: self.dim,
            basis: self.basis_rows().cloned().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subgroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SubgroupRepr::deserialize(d)?;
        Subgroup::from_rows(r.modulus, r.ambient_dim, r.basis).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> Modulus {
        Modulus::new(4).unwrap()
    }

    fn sg(rows: &[&[u64]], n: usize) -> Subgroup {
        Subgroup::from_rows(z4(), n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn pair_group() -> Subgroup {
        sg(&[&[1, 1], &[0, 2]], 2)
    }

    #[test]
    fn howell_of_even_pairs() {
        let h = sg(&[&[2, 2], &[0, 2]], 2);
        assert_eq!(h.basis().rows(), &[vec![2, 0], vec![0, 2]]);
        assert!(sg(&[], 2).is_trivial());
    }

    #[test]
    fn pair_group_elements() {
        let h = pair_group();
        assert_eq!(h.order(), 8);
        let mut els = h.enumerate(100).unwrap();
        els.sort();
        let mut want: Vec<Vec<u64>> = [
            [0, 0],
            [1, 1],
            [2, 2],
            [3, 3],
            [0, 2],
            [1, 3],
            [2, 0],
            [3, 1],
        ]
        .iter()
        .map(|p| p.to_vec())
        .collect();
        want.sort();
        assert_eq!(els, want);
        assert!(h.membership(&[3, 1]).unwrap());
        assert_eq!(
            h.quotient_invariants(&sg(&[], 2)).unwrap().factors(),
            &[2, 4]
        );
    }

    #[test]
    fn membership_and_errors() {
        let h = sg(&[&[2, 0], &[0, 2]], 2);
        assert!(h.membership(&[2, 2]).unwrap());
        assert!(!h.membership(&[1, 0]).unwrap());
        assert!(h.membership(&[1]).is_err());
    }

    #[test]
    fn sums() {
        let a = sg(&[&[2, 0]], 2);
        let b = sg(&[&[0, 2]], 2);
        assert_eq!(a.sum(&b).unwrap(), sg(&[&[2, 0], &[0, 2]], 2));
        assert_eq!(a.sum(&sg(&[], 2)).unwrap(), a);
        assert_eq!(sg(&[&[1, 1]], 2).sum(&b).unwrap(), pair_group());
    }

    #[test]
    fn orthogonals() {
        // Brute force: x1 + x2 = 0 mod 4.
        let o = sg(&[&[1, 1]], 2).orthogonal();
        let mut brute = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                if (a + b) % 4 == 0 {
                    brute.push(vec![a, b]);
                }
            }
        }
        assert_eq!(o, Subgroup::from_rows(z4(), 2, brute).unwrap());
        assert_eq!(o, sg(&[&[1, 3]], 2));
        assert!(Subgroup::full(z4(), 2).orthogonal().is_trivial());
        assert_eq!(sg(&[], 2).orthogonal(), Subgroup::full(z4(), 2));
    }

    #[test]
    fn intersections() {
        assert!(sg(&[&[1, 0]], 2)
            .intersect(&sg(&[&[0, 1]], 2))
            .unwrap()
            .is_trivial());
        let p = pair_group();
        assert_eq!(p.intersect(&p).unwrap(), p);
        let l = sg(&[&[1, 3]], 2);
        // Element-set intersection by enumeration.
        let a = p.enumerate(100).unwrap();
        let b = l.enumerate(100).unwrap();
        let common: Vec<_> = a.into_iter().filter(|x| b.contains(x)).collect();
        assert_eq!(
            p.intersect(&l).unwrap(),
            Subgroup::from_rows(z4(), 2, common).unwrap()
        );
        assert_eq!(p.intersect(&l).unwrap(), l);
    }

    #[test]
    fn quotients() {
        let full = Subgroup::full(z4(), 2);
        let even = sg(&[&[2, 0], &[0, 2]], 2);
        assert_eq!(full.quotient_invariants(&even).unwrap().factors(), &[2, 2]);
        assert!(full.quotient_invariants(&full).unwrap().is_trivial());
        assert_eq!(even.quotient_invariants(&full), Err(Error::NotSubgroup));
    }

    #[test]
    fn orders() {
        assert_eq!(sg(&[], 3).order(), 1);
        assert_eq!(Subgroup::full(z4(), 3).order(), 64);
        assert_eq!(sg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]], 3).order(), 32);
    }

    #[test]
    fn coset_labels() {
        let h = sg(&[&[2, 0], &[0, 2]], 2);
        assert_eq!(h.coset_reduce(&[3, 1]).unwrap(), vec![1, 1]);
        assert_eq!(h.coset_reduce(&[2, 2]).unwrap(), vec![0, 0]);
        assert_eq!(sg(&[], 2).coset_reduce(&[3, 1]).unwrap(), vec![3, 1]);
    }

    #[test]
    fn enumerations() {
        assert_eq!(sg(&[], 2).enumerate(10).unwrap(), vec![vec![0, 0]]);
        let mut e = sg(&[&[1, 3]], 2).enumerate(10).unwrap();
        e.sort();
        assert_eq!(e, vec![vec![0, 0], vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert!(matches!(
            Subgroup::full(z4(), 3).enumerate(10),
            Err(Error::OrderExceedsCap { order: 64, cap: 10 })
        ));
    }

    #[test]
    fn vanishing_on_matches_intersection() {
        let h = sg(&[&[1, 2, 3], &[0, 1, 1]], 3);
        let z = sg(&[&[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(h.vanishing_on(&[0]), h.intersect(&z).unwrap());
    }

    #[test]
    fn serde_round_trip() {
        let p = pair_group();
        let s = serde_json::to_string(&p).unwrap();
        let q: Subgroup = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }
}
