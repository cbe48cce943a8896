use crate::error::Result;
use crate::residue::{axpy, Modulus, Subgroup};

/// Extends values on a fixed set of coordinates to a full element of a subgroup.
#[derive(Debug, Clone)]
pub(crate) struct Lifter {
    modulus: Modulus,
    dim: usize,
    /// Permutation: position `i` of a permuted vector is coordinate `order[i]`.
    order: Vec<usize>,
    prefix: usize,
    /// Permuted Howell rows pivoting inside the prefix, with their pivots.
    rows: Vec<(usize, u64, Vec<u64>)>,
}

impl Lifter {
    pub fn new(h: &Subgroup, known: &[usize]) -> Self {
        let dim = h.ambient_dim();
        let mut is_known = vec![false; dim];
        for &c in known {
            is_known[c] = true;
        }
        let order: Vec<usize> = known
            .iter()
            .copied()
            .chain((0..dim).filter(|&c| !is_known[c]))
            .collect();
        let permuted: Vec<Vec<u64>> = h
            .basis_rows()
            .map(|r| order.iter().map(|&c| r[c]).collect())
            .collect();
        let ph = Subgroup::from_rows_unchecked(h.modulus(), dim, permuted);
        let rows = ph
            .pivots()
            .into_iter()
            .zip(ph.basis_rows())
            .filter(|((p, _), _)| *p < known.len())
            .map(|((p, d), r)| (p, d, r.clone()))
            .collect();
        Lifter {
            modulus: h.modulus(),
            dim,
            order,
            prefix: known.len(),
            rows,
        }
    }

    /// Some element whose known coordinates equal `target`, or `None` if there is none.
    pub fn lift(&self, target: &[u64]) -> Result<Option<Vec<u64>>> {
        debug_assert_eq!(target.len(), self.prefix);
        let m = self.modulus;
        let mut rest: Vec<u64> = target.iter().map(|&x| m.reduce(x)).collect();
        let mut acc = vec![0u64; self.dim];
        for (p, d, row) in &self.rows {
            let q = rest[*p] / d;
            if q != 0 {
                axpy(m, &mut rest, m.neg(q), &row[..self.prefix]);
                axpy(m, &mut acc, q, row);
            }
        }
        if rest.iter().any(|&x| x != 0) {
            return Ok(None);
        }
        let mut out = vec![0u64; self.dim];
        for (pos, &c) in self.order.iter().enumerate() {
            out[c] = acc[pos];
        }
        Ok(Some(out))
    }
}
