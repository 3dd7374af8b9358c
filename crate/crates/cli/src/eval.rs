use sotype_core::{
    any_direct_product, classical_group, family_generators, family_group, AnyElement, GroupElement,
    GroupError, GroupHandle, PermFamily, Permutation,
};

use crate::expr::{Atom, GroupExpr};

/// Enumerates the group an expression names. Products of permutation groups
/// act on disjoint points; anything involving matrices uses pair elements.
pub fn eval_expr(expr: &GroupExpr, cap: usize) -> Result<GroupHandle<AnyElement>, GroupError> {
    match expr {
        GroupExpr::Atom(atom) => eval_atom(atom, cap),
        GroupExpr::Product(l, r) => {
            let a = eval_expr(l, cap)?;
            let b = eval_expr(r, cap)?;
            // Permutation factors act on disjoint points, so degrees add.
            let cap = match (perm_degree(&a), perm_degree(&b)) {
                (Some(da), Some(db)) => perm_cap(cap, da + db),
                _ => cap,
            };
            match a.order().checked_mul(b.order()) {
                Some(n) if n <= cap as u64 => any_direct_product(&a, &b, cap),
                _ => Err(GroupError::CapExceeded { cap }),
            }
        }
    }
}

fn to_any<E: GroupElement + Into<AnyElement>>(g: GroupHandle<E>) -> GroupHandle<AnyElement> {
    g.map_into(|x| x.clone().into())
}

/// Permutation groups store every element as an image array; this bounds the
/// total number of stored points.
const MAX_PERM_CELLS: usize = 1 << 28;

fn perm_cap(cap: usize, degree: usize) -> usize {
    cap.min(MAX_PERM_CELLS / degree.max(1))
}

fn perm_degree(g: &GroupHandle<AnyElement>) -> Option<usize> {
    match g.identity() {
        AnyElement::Perm(p) => Some(p.degree()),
        _ => None,
    }
}

fn small(n: u64, what: &str) -> Result<usize, GroupError> {
    usize::try_from(n)
        .ok()
        .filter(|&n| n <= 64)
        .ok_or_else(|| GroupError::InvalidParameter(format!("{what} {n} is out of range")))
}

fn eval_atom(atom: &Atom, cap: usize) -> Result<GroupHandle<AnyElement>, GroupError> {
    let family = match *atom {
        Atom::Cyclic(n) => PermFamily::Cyclic(n),
        Atom::Dihedral(n) => PermFamily::Dihedral(n),
        Atom::Dicyclic(n) => PermFamily::Dicyclic(n),
        Atom::Symmetric(n) => PermFamily::Symmetric(n),
        Atom::Alternating(n) => PermFamily::Alternating(n),
        Atom::Frobenius { m, n, k } => PermFamily::Frobenius { m, n, k },
        Atom::Cex3 => PermFamily::Cex3,
        Atom::Perm(ref perms) => PermFamily::Explicit(explicit_perms(perms)?),
        Atom::Classical { family, n, q } => {
            let g = classical_group(family, small(n, "dimension")?, q, cap)?;
            return Ok(to_any(g));
        }
    };
    if let Some(order) = family.expected_order() {
        if order > cap as u64 {
            return Err(GroupError::CapExceeded { cap });
        }
    }
    let degree = family_generators(&family)?
        .first()
        .map_or(1, Permutation::degree);
    let cap = perm_cap(cap, degree);
    if family.expected_order().is_some_and(|n| n > cap as u64) {
        return Err(GroupError::CapExceeded { cap });
    }
    Ok(to_any(family_group(&family, cap)?))
}

fn explicit_perms(perms: &[Vec<Vec<u64>>]) -> Result<Vec<Permutation>, GroupError> {
    perms
        .iter()
        .map(|cycles| {
            let degree = cycles.iter().flatten().copied().max().unwrap_or(1);
            if degree > 1 << 20 {
                return Err(GroupError::InvalidPermutation(format!(
                    "point {degree} is too large"
                )));
            }
            let zero_based: Vec<Vec<u32>> = cycles
                .iter()
                .map(|c| c.iter().map(|&p| (p - 1) as u32).collect())
                .collect();
            Permutation::from_cycles(degree as usize, &zero_based)
        })
        .collect()
}
