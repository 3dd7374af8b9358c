//! Permutations and the permutation-group families.
//!
//! Points are 0-indexed. A permutation stores its image array; composition
//! applies the left operand first.

use std::fmt;

use crate::arith::{gcd, lcm, multiplicative_order};
use crate::element::{ElementKind, GroupElement};
use crate::error::GroupError;
use crate::group::{closure, GroupHandle};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Validates that `images` is a bijection on `0..images.len()`.
    pub fn new(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(GroupError::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity_on(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint 0-indexed cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let x = x as usize;
                if x >= degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {} outside degree {degree}",
                        x + 1
                    )));
                }
                if moved[x] {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {} appears in more than one cycle",
                        x + 1
                    )));
                }
                moved[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// Cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut x = self.images[start];
            while x as usize != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.images[x as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Extends to a larger degree, fixing the new points.
    pub fn padded(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree.max(self.degree()) as u32);
        Self { images }
    }

    /// Places `self` on points `offset..offset + degree` of a permutation of
    /// total degree `total`.
    pub fn shifted(&self, offset: usize, total: usize) -> Self {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = x + offset as u32;
        }
        Self { images }
    }

    /// Restriction to the points `offset..offset + degree`, which must be
    /// invariant.
    pub fn restricted(&self, offset: usize, degree: usize) -> Option<Self> {
        let slice = &self.images[offset..offset + degree];
        let images: Vec<u32> = slice
            .iter()
            .map(|&x| x.checked_sub(offset as u32))
            .collect::<Option<_>>()?;
        Self::new(images).ok()
    }
}

/// Order of a permutation: the lcm of its cycle lengths.
pub fn perm_order(p: &Permutation) -> u64 {
    p.cycles().iter().fold(1, |acc, c| lcm(acc, c.len() as u64))
}

impl GroupElement for Permutation {
    fn kind(&self) -> ElementKind {
        ElementKind::Permutation {
            degree: self.degree(),
        }
    }

    fn compose(&self, other: &Self) -> Self {
        Self {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Self { images }
    }

    fn identity(&self) -> Self {
        Self::identity_on(self.degree())
    }

    fn encode(&self) -> Vec<u8> {
        self.images.iter().flat_map(|x| x.to_le_bytes()).collect()
    }

    fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    fn fast_order(&self) -> Option<u64> {
        Some(perm_order(self))
    }
}

/// 1-indexed disjoint-cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// The permutation-group families the engine can build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermFamily {
    /// Cyclic group of order n.
    Cyclic(u64),
    /// Dihedral group of order 2n.
    Dihedral(u64),
    /// Dicyclic group of order 4n; `Dicyclic(2)` is the quaternion group.
    Dicyclic(u64),
    Symmetric(u64),
    Alternating(u64),
    /// `C_m ⋊ C_n` acting on `Z_m` by `x -> x + 1` and `x -> k x`.
    Frobenius {
        m: u64,
        n: u64,
        k: u64,
    },
    /// `C2 x ((C14 x C2) ⋊ C3)` with `C3` acting on both the `C7` and the
    /// `C2 x C2` part.
    Cex3,
    Explicit(Vec<Permutation>),
}

/// Largest degree the constructors will build, to keep image arrays sane.
const MAX_DEGREE: u64 = 1 << 20;

impl PermFamily {
    /// The order the generated group should have, when the family fixes it.
    pub fn expected_order(&self) -> Option<u64> {
        let factorial = |n: u64| (1..=n).try_fold(1u64, |acc, i| acc.checked_mul(i));
        match *self {
            PermFamily::Cyclic(n) => Some(n),
            PermFamily::Dihedral(n) => n.checked_mul(2),
            PermFamily::Dicyclic(n) => n.checked_mul(4),
            PermFamily::Symmetric(n) => factorial(n),
            PermFamily::Alternating(n) => factorial(n).map(|f| (f / 2).max(1)),
            PermFamily::Frobenius { m, n, .. } => m.checked_mul(n),
            PermFamily::Cex3 => Some(168),
            PermFamily::Explicit(_) => None,
        }
    }
}

fn check_positive(name: &str, n: u64) -> Result<(), GroupError> {
    if n == 0 || n > MAX_DEGREE {
        return Err(GroupError::InvalidParameter(format!(
            "{name} needs 1 <= n <= {MAX_DEGREE}, got {n}"
        )));
    }
    Ok(())
}

fn cycle_on(degree: usize, points: impl IntoIterator<Item = u32>) -> Permutation {
    let pts: Vec<u32> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[pts]).expect("constructor cycles are valid")
}

/// Generators for a family member.
pub fn family_generators(family: &PermFamily) -> Result<Vec<Permutation>, GroupError> {
    match *family {
        PermFamily::Cyclic(n) => {
            check_positive("C(n)", n)?;
            Ok(vec![cycle_on(n as usize, 0..n as u32)])
        }
        PermFamily::Dihedral(n) => {
            check_positive("D(n)", n)?;
            Ok(match n {
                1 => vec![cycle_on(2, [0, 1])],
                2 => vec![cycle_on(4, [0, 1]), cycle_on(4, [2, 3])],
                _ => {
                    let n = n as usize;
                    let reflection: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
                    vec![
                        cycle_on(n, 0..n as u32),
                        Permutation::new(reflection).expect("reflection is a bijection"),
                    ]
                }
            })
        }
        PermFamily::Dicyclic(n) => {
            check_positive("Dic(n)", n)?;
            Ok(dicyclic_regular(n as usize))
        }
        PermFamily::Symmetric(n) => {
            check_positive("S(n)", n)?;
            let d = n as usize;
            Ok(if n < 2 {
                vec![Permutation::identity_on(d)]
            } else {
                vec![cycle_on(d, [0, 1]), cycle_on(d, 0..n as u32)]
            })
        }
        PermFamily::Alternating(n) => {
            check_positive("A(n)", n)?;
            let d = n as usize;
            Ok(if n < 3 {
                vec![Permutation::identity_on(d)]
            } else {
                (2..n as u32).map(|k| cycle_on(d, [0, 1, k])).collect()
            })
        }
        PermFamily::Frobenius { m, n, k } => frobenius(m, n, k),
        PermFamily::Cex3 => Ok(cex3_generators()),
        PermFamily::Explicit(ref perms) => {
            if perms.is_empty() {
                return Err(GroupError::NoGenerators);
            }
            let degree = perms
                .iter()
                .map(Permutation::degree)
                .max()
                .unwrap_or(0)
                .max(1);
            Ok(perms.iter().map(|p| p.padded(degree)).collect())
        }
    }
}

/// Right-regular representation of `<a, b | a^2n, b^2 = a^n, b^-1 a b = a^-1>`
/// on the normal forms `a^i b^j`, indexed `i + 2n j`.
fn dicyclic_regular(n: usize) -> Vec<Permutation> {
    let m = 2 * n;
    let idx = |i: usize, j: usize| (i % m + m * j) as u32;
    let mut times_a = vec![0; 2 * m];
    let mut times_b = vec![0; 2 * m];
    for j in 0..2 {
        for i in 0..m {
            // a^i b a = a^(i-1) b
            times_a[idx(i, j) as usize] = if j == 0 {
                idx(i + 1, 0)
            } else {
                idx(i + m - 1, 1)
            };
            // a^i b b = a^(i+n)
            times_b[idx(i, j) as usize] = if j == 0 { idx(i, 1) } else { idx(i + n, 0) };
        }
    }
    vec![
        Permutation::new(times_a).expect("right multiplication is a bijection"),
        Permutation::new(times_b).expect("right multiplication is a bijection"),
    ]
}

fn frobenius(m: u64, n: u64, k: u64) -> Result<Vec<Permutation>, GroupError> {
    check_positive("F(m,n,k)", m)?;
    check_positive("F(m,n,k)", n)?;
    if gcd(k % m, m) != 1 && m > 1 {
        return Err(GroupError::InvalidParameter(format!(
            "F({m},{n},{k}): gcd({k}, {m}) != 1"
        )));
    }
    let ord = multiplicative_order(k, m).unwrap_or(0);
    if ord != n {
        let kn = crate::arith::pow_mod(k, n, m);
        return Err(GroupError::InvalidParameter(if kn != 1 % m {
            format!("F({m},{n},{k}): {k}^{n} = {kn} (mod {m}), not 1")
        } else {
            format!("F({m},{n},{k}): {k} has multiplicative order {ord} mod {m}, not {n}")
        }));
    }
    let shift = Permutation::new((0..m).map(|x| ((x + 1) % m) as u32).collect())
        .expect("translation is a bijection");
    let scale = Permutation::new((0..m).map(|x| (x * k % m) as u32).collect())
        .expect("unit multiplication is a bijection");
    Ok(vec![shift, scale])
}

/// Generators on 13 points: `Z_7` on 0..7, a Klein four-group acting
/// regularly on 7..11, and a transposition on 11..13. The order-3 generator
/// multiplies `Z_7` by 2 and rotates the three involutions of the four-group.
pub fn cex3_generators() -> Vec<Permutation> {
    const DEG: usize = 13;
    let translate = cycle_on(DEG, 0..7);
    let v1 = Permutation::from_cycles(DEG, &[vec![7, 8], vec![9, 10]]).unwrap();
    let v2 = Permutation::from_cycles(DEG, &[vec![7, 9], vec![8, 10]]).unwrap();
    // x -> 2x on Z_7 is (1 2 4)(3 6 5); (8 9 10) permutes the involutions.
    let rotate =
        Permutation::from_cycles(DEG, &[vec![1, 2, 4], vec![3, 6, 5], vec![8, 9, 10]]).unwrap();
    let swap = cycle_on(DEG, [11, 12]);
    vec![translate, v1, v2, rotate, swap]
}

/// Builds and enumerates a family member, checking the advertised order.
pub fn family_group(
    family: &PermFamily,
    cap: usize,
) -> Result<GroupHandle<Permutation>, GroupError> {
    let gens = family_generators(family)?;
    let group = closure(&gens, cap)?;
    if let Some(expected) = family.expected_order() {
        if group.order() != expected {
            return Err(GroupError::OrderMismatch {
                group: format!("{family:?}"),
                expected,
                found: group.order(),
            });
        }
    }
    Ok(group)
}

/// Generators of `A x B` acting on disjoint point sets: `A` on the first
/// `deg(A)` points, `B` shifted after it.
pub fn disjoint_generators(a: &[Permutation], b: &[Permutation]) -> Vec<Permutation> {
    let da = a.first().map_or(0, Permutation::degree);
    let db = b.first().map_or(0, Permutation::degree);
    let total = da + db;
    a.iter()
        .map(|g| g.shifted(0, total))
        .chain(b.iter().map(|g| g.shifted(da, total)))
        .collect()
}

/// Direct product acting on disjoint point sets; degrees add.
pub fn direct_product(
    a: &GroupHandle<Permutation>,
    b: &GroupHandle<Permutation>,
    cap: usize,
) -> Result<GroupHandle<Permutation>, GroupError> {
    closure(
        &disjoint_generators(&a.generating_set(), &b.generating_set()),
        cap,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;
    use crate::spectrum::order_spectrum;
    use std::collections::BTreeMap;

    fn order_of(f: PermFamily) -> u64 {
        family_group(&f, DEFAULT_CAP).unwrap().order()
    }

    #[test]
    fn perm_orders() {
        assert_eq!(perm_order(&Permutation::identity_on(5)), 1);
        assert_eq!(perm_order(&cycle_on(7, 0..7)), 7);
        let p = Permutation::from_cycles(5, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        assert_eq!(perm_order(&p), 6);
    }

    #[test]
    fn invalid_permutations_rejected() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 5]]).is_err());
    }

    #[test]
    fn family_orders() {
        assert_eq!(order_of(PermFamily::Cyclic(1)), 1);
        assert_eq!(order_of(PermFamily::Cyclic(12)), 12);
        for n in 1..8 {
            assert_eq!(order_of(PermFamily::Dihedral(n)), 2 * n);
            assert_eq!(order_of(PermFamily::Dicyclic(n)), 4 * n);
        }
        assert_eq!(order_of(PermFamily::Symmetric(1)), 1);
        assert_eq!(order_of(PermFamily::Symmetric(5)), 120);
        assert_eq!(order_of(PermFamily::Alternating(3)), 3);
        assert_eq!(order_of(PermFamily::Alternating(5)), 60);
        assert_eq!(order_of(PermFamily::Alternating(6)), 360);
        assert_eq!(order_of(PermFamily::Frobenius { m: 7, n: 3, k: 2 }), 21);
        assert_eq!(order_of(PermFamily::Frobenius { m: 5, n: 4, k: 2 }), 20);
        assert_eq!(order_of(PermFamily::Cex3), 168);
    }

    #[test]
    fn quaternion_spectrum() {
        let q8 = family_group(&PermFamily::Dicyclic(2), DEFAULT_CAP).unwrap();
        let s = order_spectrum(&q8);
        assert_eq!(s.counts(), &BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
    }

    #[test]
    fn frobenius_21_spectrum() {
        let f = family_group(&PermFamily::Frobenius { m: 7, n: 3, k: 2 }, DEFAULT_CAP).unwrap();
        let s = order_spectrum(&f);
        assert_eq!(s.counts(), &BTreeMap::from([(1, 1), (3, 14), (7, 6)]));
    }

    #[test]
    fn frobenius_rejects_bad_multiplier() {
        let err = family_generators(&PermFamily::Frobenius { m: 7, n: 3, k: 3 }).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("3^3 = 6 (mod 7)"), "{msg}");
        // 6 has order 2 mod 7, so 6^3 = 6.
        assert!(family_generators(&PermFamily::Frobenius { m: 7, n: 3, k: 6 }).is_err());
        // 1 satisfies 1^3 = 1 but has order 1.
        let msg = family_generators(&PermFamily::Frobenius { m: 7, n: 3, k: 1 })
            .unwrap_err()
            .to_string();
        assert!(msg.contains("multiplicative order 1"), "{msg}");
        assert!(family_generators(&PermFamily::Frobenius { m: 6, n: 2, k: 2 }).is_err());
    }

    #[test]
    fn cex3_spectrum() {
        let g = family_group(&PermFamily::Cex3, DEFAULT_CAP).unwrap();
        let s = order_spectrum(&g);
        assert_eq!(
            s.counts(),
            &BTreeMap::from([(1, 1), (2, 7), (3, 56), (6, 56), (7, 6), (14, 42)])
        );
        assert_eq!(s.alpha().to_vec(), vec![1, 6, 7, 42, 56]);
    }

    #[test]
    fn direct_product_degrees_add() {
        let q8 = family_group(&PermFamily::Dicyclic(2), DEFAULT_CAP).unwrap();
        let f = family_group(&PermFamily::Frobenius { m: 7, n: 3, k: 2 }, DEFAULT_CAP).unwrap();
        let g = direct_product(&q8, &f, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 168);
        assert_eq!(g.identity().degree(), 15);
        for x in g.elements() {
            assert!(q8.contains(&x.restricted(0, 8).unwrap()));
            assert!(f.contains(&x.restricted(8, 7).unwrap()));
        }
    }

    #[test]
    fn explicit_generators_are_padded() {
        let a = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(5, &[vec![3, 4]]).unwrap();
        let gens = family_generators(&PermFamily::Explicit(vec![a, b])).unwrap();
        assert!(gens.iter().all(|g| g.degree() == 5));
        assert_eq!(closure(&gens, 100).unwrap().order(), 6);
    }

    #[test]
    fn display_is_one_indexed() {
        let p = Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(Permutation::identity_on(3).to_string(), "()");
    }
}
