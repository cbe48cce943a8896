//! Group codes on a finite time axis and their set-level duality operations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residue::{Modulus, ResidueMatrix, Subgroup};
use crate::sequence::{SymbolLayout, TimeSubset};

/// A subgroup of the sequence space `∏_k (ℤ_M)^{n_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupCode {
    layout: SymbolLayout,
    carrier: Subgroup,
}

impl GroupCode {
    pub fn new(layout: SymbolLayout, carrier: Subgroup) -> Result<Self> {
        if carrier.ambient_dim() != layout.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: layout.total_dim(),
                found: carrier.ambient_dim(),
            });
        }
        if carrier.modulus() != layout.modulus() {
            return Err(Error::ModulusMismatch {
                left: layout.modulus().get(),
                right: carrier.modulus().get(),
            });
        }
        Ok(GroupCode { layout, carrier })
    }

    /// Code spanned by full-length generator words.
    pub fn from_generators(layout: SymbolLayout, generators: Vec<Vec<u64>>) -> Result<Self> {
        let m = ResidueMatrix::new(layout.modulus(), layout.total_dim(), generators)?;
        Self::new(layout, Subgroup::howell(&m))
    }

    pub fn full(layout: SymbolLayout) -> Self {
        let carrier = Subgroup::full(layout.modulus(), layout.total_dim());
        GroupCode { layout, carrier }
    }

    pub fn trivial(layout: SymbolLayout) -> Self {
        let carrier = Subgroup::trivial(layout.modulus(), layout.total_dim());
        GroupCode { layout, carrier }
    }

    pub fn layout(&self) -> &SymbolLayout {
        &self.layout
    }

    pub fn carrier(&self) -> &Subgroup {
        &self.carrier
    }

    pub fn modulus(&self) -> Modulus {
        self.layout.modulus()
    }

    pub fn axis_len(&self) -> usize {
        self.layout.axis_len()
    }

    fn with_carrier(&self, carrier: Subgroup) -> GroupCode {
        GroupCode {
            layout: self.layout.clone(),
            carrier,
        }
    }

    fn check_layout(&self, other: &GroupCode) -> Result<()> {
        if self.layout != other.layout {
            return Err(Error::LayoutMismatch(format!(
                "widths {:?} vs {:?}",
                self.layout.widths(),
                other.layout.widths()
            )));
        }
        Ok(())
    }

    pub fn dual(&self) -> GroupCode {
        self.with_carrier(self.carrier.orthogonal())
    }

    /// `C_{|J}` on the restricted layout.
    pub fn restriction(&self, j: &TimeSubset) -> Result<GroupCode> {
        let layout = self.layout.restrict(j)?;
        let cols = self.layout.coords(j)?;
        Ok(GroupCode {
            layout,
            carrier: self.carrier.select_columns(&cols),
        })
    }

    /// `P_J(C)`: codewords with everything outside `J` zeroed, on the full layout.
    pub fn project(&self, j: &TimeSubset) -> Result<GroupCode> {
        let cols = self.layout.coords(j)?;
        let carrier = self
            .carrier
            .select_columns(&cols)
            .embed(self.layout.total_dim(), &cols);
        Ok(self.with_carrier(carrier))
    }

    /// `C_{:K}`: codewords supported inside `K`, on the full layout.
    pub fn shorten(&self, k: &TimeSubset) -> Result<GroupCode> {
        let outside = self.layout.coords(&k.complement())?;
        Ok(self.with_carrier(self.carrier.vanishing_on(&outside)))
    }

    /// `C_{|:K} = (C_{:K})_{|K}`.
    pub fn restricted_subcode(&self, k: &TimeSubset) -> Result<GroupCode> {
        self.shorten(k)?.restriction(k)
    }

    /// All words whose restriction to `J` is a restriction of a codeword:
    /// `P_J(C) + W_{:I−J}`.
    pub fn lift(&self, j: &TimeSubset) -> Result<GroupCode> {
        let p = self.project(j)?;
        let free = self.free_on(&j.complement())?;
        Ok(self.with_carrier(p.carrier.sum(&free)?))
    }

    /// The full sequence space supported on `J`, as a subgroup on this layout.
    pub fn free_on(&self, j: &TimeSubset) -> Result<Subgroup> {
        let cols = self.layout.coords(j)?;
        let m = self.modulus();
        Ok(Subgroup::full(m, cols.len()).embed(self.layout.total_dim(), &cols))
    }

    /// `(C | D) = {c ∈ C : c_{|I−J} ∈ D}`, with `D` a code on the layout of `I − J`.
    pub fn conditioned(&self, d: &GroupCode, j: &TimeSubset) -> Result<GroupCode> {
        let rest = j.complement();
        if rest.is_empty() {
            return Ok(self.clone());
        }
        let rest_layout = self.layout.restrict(&rest)?;
        if d.layout != rest_layout {
            return Err(Error::LayoutMismatch(format!(
                "conditioning code has widths {:?}, expected {:?}",
                d.layout.widths(),
                rest_layout.widths()
            )));
        }
        let cols = self.layout.coords(&rest)?;
        let lifted = d
            .carrier
            .embed(self.layout.total_dim(), &cols)
            .sum(&self.free_on(j)?)?;
        Ok(self.with_carrier(self.carrier.intersect(&lifted)?))
    }

    pub fn code_sum(&self, other: &GroupCode) -> Result<GroupCode> {
        self.check_layout(other)?;
        Ok(self.with_carrier(self.carrier.sum(&other.carrier)?))
    }

    pub fn code_intersect(&self, other: &GroupCode) -> Result<GroupCode> {
        self.check_layout(other)?;
        Ok(self.with_carrier(self.carrier.intersect(&other.carrier)?))
    }

    pub fn code_equal(&self, other: &GroupCode) -> Result<bool> {
        self.check_layout(other)?;
        Ok(self.carrier == other.carrier)
    }

    pub fn code_contains(&self, other: &GroupCode) -> Result<bool> {
        self.check_layout(other)?;
        self.carrier.contains(&other.carrier)
    }

    pub fn code_membership(&self, w: &[u64]) -> Result<bool> {
        self.carrier.membership(w)
    }

    pub fn code_order(&self) -> u128 {
        self.carrier.order()
    }

    /// The same code viewed on a coarser axis (consecutive times merged).
    pub fn coarsen(&self, sizes: &[usize]) -> Result<GroupCode> {
        Ok(GroupCode {
            layout: self.layout.coarsen(sizes)?,
            carrier: self.carrier.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn repetition(m: u64, n: usize) -> GroupCode {
        let md = Modulus::new(m).unwrap();
        let layout = SymbolLayout::uniform(md, n, 1).unwrap();
        GroupCode::from_generators(layout, vec![vec![1; n]]).unwrap()
    }

    fn ts(n: usize, t: &[usize]) -> TimeSubset {
        TimeSubset::new(n, t.iter().copied()).unwrap()
    }

    #[test]
    fn duals() {
        let c = repetition(2, 2);
        assert_eq!(c.dual(), c);
        let full = GroupCode::full(c.layout().clone());
        assert_eq!(full.dual().code_order(), 1);
        let r = repetition(4, 4);
        let d = r.dual();
        assert_eq!(d.code_order(), 64);
        for row in d.carrier().basis_rows() {
            assert_eq!(row.iter().sum::<u64>() % 4, 0);
        }
        assert_eq!(d.dual(), r);
    }

    #[test]
    fn restrictions() {
        let r = repetition(4, 4);
        let one = r.restriction(&ts(4, &[1])).unwrap();
        assert_eq!(one.code_order(), 4);
        assert_eq!(r.restriction(&r.layout().full()).unwrap(), r);
        assert_eq!(
            r.restriction(&TimeSubset::empty(4)),
            Err(Error::EmptySubset)
        );
    }

    #[test]
    fn shortening() {
        let r = repetition(4, 4);
        assert_eq!(r.shorten(&ts(4, &[1, 2])).unwrap().code_order(), 1);
        let full = GroupCode::full(r.layout().clone());
        assert_eq!(full.shorten(&ts(4, &[1, 2])).unwrap().code_order(), 16);
        // Agrees with the intersection definition.
        let z = full.shorten(&ts(4, &[0, 3])).unwrap();
        let r2 = GroupCode::from_generators(
            r.layout().clone(),
            vec![vec![1, 0, 0, 3], vec![0, 1, 1, 0]],
        )
        .unwrap();
        assert_eq!(
            r2.shorten(&ts(4, &[0, 3])).unwrap(),
            r2.code_intersect(&z).unwrap()
        );
    }

    #[test]
    fn conditioning_extremes() {
        let md = Modulus::new(2).unwrap();
        let layout = SymbolLayout::uniform(md, 4, 1).unwrap();
        let c =
            GroupCode::from_generators(layout, vec![vec![1, 1, 0, 0], vec![0, 1, 1, 1]]).unwrap();
        let j = ts(4, &[0, 1]);
        let rest_layout = c.layout().restrict(&j.complement()).unwrap();
        let full_d = GroupCode::full(rest_layout.clone());
        let zero_d = GroupCode::trivial(rest_layout);
        assert_eq!(c.conditioned(&full_d, &j).unwrap(), c);
        assert_eq!(c.conditioned(&zero_d, &j).unwrap(), c.shorten(&j).unwrap());
    }

    #[test]
    fn self_dual_intersection() {
        let c = repetition(2, 2);
        assert_eq!(c.code_intersect(&c.dual()).unwrap(), c);
        assert_eq!(
            c.code_sum(&GroupCode::trivial(c.layout().clone())).unwrap(),
            c
        );
    }
}
