use super::state::state_invariants;
use crate::code::GroupCode;
use crate::error::Result;
use crate::sequence::TimeSubset;

/// `Σ_J(C) ≅ Σ_J(C⊥)`, compared as invariant lists.
pub fn dual_state_space_check(c: &GroupCode, j: &TimeSubset) -> Result<bool> {
    Ok(state_invariants(c, j)? == state_invariants(&c.dual(), j)?)
}

/// `(C_{|J})⊥ = (C⊥)_{|:J}` and `(C_{|:J})⊥ = (C⊥)_{|J}`.
pub fn projection_subcode_duality_check(c: &GroupCode, j: &TimeSubset) -> Result<bool> {
    if j.is_empty() {
        return Ok(true);
    }
    let d = c.dual();
    // (C_{|J})⊥ = (C⊥)_{|:J}
    let first = c.restriction(j)?.dual() == d.restricted_subcode(j)?;
    // (C_{|:J})⊥ = (C⊥)_{|J}
    let second = c.restricted_subcode(j)?.dual() == d.restriction(j)?;
    Ok(first && second)
}

/// `(C | D)⊥ = C⊥ + ({0}_{|J} × D⊥)`.
pub fn conditioned_duality_check(c: &GroupCode, d: &GroupCode, j: &TimeSubset) -> Result<bool> {
    let cond = c.conditioned(d, j)?;
    let rest = j.complement();
    if rest.is_empty() {
        return Ok(cond.dual() == c.dual());
    }
    let cols = c.layout().coords(&rest)?;
    let lifted_dual = d.dual().carrier().embed(c.layout().total_dim(), &cols);
    let rhs = c.dual().carrier().sum(&lifted_dual)?;
    Ok(cond.dual().carrier() == &rhs)
}
