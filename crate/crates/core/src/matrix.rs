//! Matrices over finite fields and the classical groups SL, PSL, SU, PSU.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::arith::{gcd, prime_power};
use crate::element::{ElementKind, GroupElement};
use crate::error::GroupError;
use crate::field::{field_make, FiniteField};
use crate::group::{closure, GroupHandle};

/// An invertible square matrix over a finite field.
///
/// A projective matrix stands for its class modulo scalars and is kept in
/// canonical form: the first nonzero entry in row-major order is 1.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<FiniteField>,
    dim: usize,
    entries: Vec<u16>,
    projective: bool,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.projective == other.projective
            && self.entries == other.entries
            && self.field.order() == other.field.order()
    }
}

impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
        self.projective.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.projective { "P" } else { "" };
        write!(f, "{tag}Matrix[GF({})]", self.field.order())?;
        for row in self.entries.chunks(self.dim) {
            write!(f, "{row:?}")?;
        }
        Ok(())
    }
}

impl Matrix {
    /// Builds a matrix from row-major field codes; fails if singular.
    pub fn new(field: Arc<FiniteField>, dim: usize, entries: Vec<u32>) -> Result<Self, GroupError> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(GroupError::InvalidParameter(format!(
                "{} entries do not form a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&x| x >= field.order()) {
            return Err(GroupError::InvalidParameter(format!(
                "{bad} is not an element of GF({})",
                field.order()
            )));
        }
        let m = Self {
            field,
            dim,
            entries: entries.into_iter().map(|x| x as u16).collect(),
            projective: false,
        };
        if m.determinant() == 0 {
            return Err(GroupError::InvalidParameter("matrix is singular".into()));
        }
        Ok(m)
    }

    pub fn identity_in(field: Arc<FiniteField>, dim: usize) -> Self {
        let mut entries = vec![0u16; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Self {
            field,
            dim,
            entries,
            projective: false,
        }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim + j] as u32
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().map(|&x| x as u32)
    }

    fn with_entries(&self, entries: Vec<u16>) -> Self {
        Self {
            field: Arc::clone(&self.field),
            dim: self.dim,
            entries,
            projective: self.projective,
        }
    }

    fn product(&self, other: &Self) -> Vec<u16> {
        let f = &*self.field;
        let n = self.dim;
        let mut out = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for l in 0..n {
                    acc = f.add(acc, f.mul(self.get(i, l), other.get(l, j)));
                }
                out[i * n + j] = acc as u16;
            }
        }
        out
    }

    /// Multiplies every entry by a nonzero scalar.
    pub fn scaled(&self, lambda: u32) -> Self {
        let f = &*self.field;
        self.with_entries(
            self.entries
                .iter()
                .map(|&x| f.mul(x as u32, lambda) as u16)
                .collect(),
        )
    }

    /// The canonical projective representative of this matrix's class.
    pub fn normalized(&self) -> Self {
        let lead = self
            .entries
            .iter()
            .find(|&&x| x != 0)
            .copied()
            .expect("invertible matrices have a nonzero entry");
        let inv = self.field.inv(lead as u32).expect("nonzero");
        let mut m = self.scaled(inv);
        m.projective = true;
        m
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> u32 {
        let f = &*self.field;
        let n = self.dim;
        let mut a: Vec<u32> = self.entries().collect();
        let mut det = 1;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * n + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.mul(factor, a[col * n + j]);
                    a[r * n + j] = f.sub(a[r * n + j], v);
                }
            }
        }
        det
    }

    /// Entrywise `x -> x^e`; with `e = sqrt(|F|)` this is the field involution.
    pub fn entrywise_pow(&self, e: u64) -> Self {
        let f = &*self.field;
        self.with_entries(
            self.entries
                .iter()
                .map(|&x| f.pow(x as u32, e) as u16)
                .collect(),
        )
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        self.with_entries(entries)
    }

    fn gauss_jordan_inverse(&self) -> Vec<u16> {
        let f = &*self.field;
        let n = self.dim;
        let mut a: Vec<u32> = self.entries().collect();
        let mut inv: Vec<u32> = (0..n * n).map(|i| u32::from(i / n == i % n)).collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a[r * n + col] != 0)
                .expect("group elements are invertible");
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
                inv.swap(pivot * n + j, col * n + j);
            }
            let pinv = f.inv(a[col * n + col]).expect("pivot is nonzero");
            for j in 0..n {
                a[col * n + j] = f.mul(a[col * n + j], pinv);
                inv[col * n + j] = f.mul(inv[col * n + j], pinv);
            }
            for r in 0..n {
                let factor = a[r * n + col];
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
                }
            }
        }
        inv.into_iter().map(|x| x as u16).collect()
    }
}

impl GroupElement for Matrix {
    fn kind(&self) -> ElementKind {
        ElementKind::Matrix {
            dim: self.dim,
            field_order: self.field.order(),
            projective: self.projective,
        }
    }

    fn compose(&self, other: &Self) -> Self {
        let m = self.with_entries(self.product(other));
        if self.projective {
            m.normalized()
        } else {
            m
        }
    }

    fn inverse(&self) -> Self {
        let m = self.with_entries(self.gauss_jordan_inverse());
        if self.projective {
            m.normalized()
        } else {
            m
        }
    }

    fn identity(&self) -> Self {
        let mut id = Self::identity_in(Arc::clone(&self.field), self.dim);
        id.projective = self.projective;
        id
    }

    fn encode(&self) -> Vec<u8> {
        self.entries.iter().flat_map(|x| x.to_le_bytes()).collect()
    }

    fn is_identity(&self) -> bool {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &x)| x == u16::from(i / n == i % n))
    }
}

/// Elementary transvections `I + a E_ij` (`i != j`), with `a` running over the
/// additive basis `1, x, ..., x^(k-1)` of the field.
pub fn sl_generators(n: usize, field: &Arc<FiniteField>) -> Result<Vec<Matrix>, GroupError> {
    if !(2..=8).contains(&n) {
        return Err(GroupError::UnsupportedDimension(n));
    }
    let p = field.characteristic();
    let basis: Vec<u32> = (0..field.degree()).map(|e| p.pow(e)).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for &a in &basis {
                let mut m = Matrix::identity_in(Arc::clone(field), n);
                m.entries[i * n + j] = a as u16;
                gens.push(m);
            }
        }
    }
    Ok(gens)
}

/// Maps every element to its canonical scalar-normalized representative.
///
/// The image is generated by the images of the generators, so the quotient is
/// re-enumerated from those.
pub fn projectivize(group: &GroupHandle<Matrix>) -> GroupHandle<Matrix> {
    let gens: Vec<Matrix> = group.generators().iter().map(Matrix::normalized).collect();
    closure(&gens, group.order() as usize).expect("a quotient is no larger than the group")
}

/// The four classical families the engine constructs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    SL,
    PSL,
    SU,
    PSU,
}

impl FromStr for ClassicalFamily {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "SL" => Ok(Self::SL),
            "PSL" => Ok(Self::PSL),
            "SU" => Ok(Self::SU),
            "PSU" => Ok(Self::PSU),
            other => Err(GroupError::UnsupportedFamily(other.to_string())),
        }
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::SL => "SL",
            Self::PSL => "PSL",
            Self::SU => "SU",
            Self::PSU => "PSU",
        })
    }
}

/// Standard order formulas:
/// `|SL(n,q)| = q^(n(n-1)/2) prod_{i=2..n} (q^i - 1)`, `|SU(n,q)|` likewise
/// with `q^i - (-1)^i`; the projective groups divide by `gcd(n, q - 1)` and
/// `gcd(n, q + 1)` respectively.
pub fn classical_order(family: ClassicalFamily, n: usize, q: u64) -> Result<u64, GroupError> {
    prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
    if n == 0 {
        return Err(GroupError::UnsupportedDimension(n));
    }
    let overflow = || GroupError::InvalidParameter(format!("|{family}({n},{q})| overflows u64"));
    let unitary = matches!(family, ClassicalFamily::SU | ClassicalFamily::PSU);
    let n64 = n as u64;
    let mut order = q
        .checked_pow((n64 * (n64 - 1) / 2) as u32)
        .ok_or_else(overflow)?;
    for i in 2..=n as u32 {
        let qi = q.checked_pow(i).ok_or_else(overflow)?;
        let factor = if unitary && i % 2 == 1 {
            qi + 1
        } else {
            qi - 1
        };
        order = order.checked_mul(factor).ok_or_else(overflow)?;
    }
    Ok(match family {
        ClassicalFamily::SL | ClassicalFamily::SU => order,
        ClassicalFamily::PSL => order / gcd(n64, q - 1),
        ClassicalFamily::PSU => order / gcd(n64, q + 1),
    })
}

fn check_order(name: String, group: &GroupHandle<Matrix>, expected: u64) -> Result<(), GroupError> {
    if group.order() != expected {
        return Err(GroupError::OrderMismatch {
            group: name,
            expected,
            found: group.order(),
        });
    }
    Ok(())
}

/// Enumerates SL(n, q) from elementary transvections.
pub fn special_linear(n: usize, q: u64, cap: usize) -> Result<GroupHandle<Matrix>, GroupError> {
    let (p, k) = prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
    let field = Arc::new(field_make(p, k)?);
    let group = closure(&sl_generators(n, &field)?, cap)?;
    check_order(
        format!("SL({n},{q})"),
        &group,
        classical_order(ClassicalFamily::SL, n, q)?,
    )?;
    Ok(group)
}

pub fn projective_special_linear(
    n: usize,
    q: u64,
    cap: usize,
) -> Result<GroupHandle<Matrix>, GroupError> {
    let group = projectivize(&special_linear(n, q, cap)?);
    check_order(
        format!("PSL({n},{q})"),
        &group,
        classical_order(ClassicalFamily::PSL, n, q)?,
    )?;
    Ok(group)
}

/// `h(x, y) = sum_i conj(x_i) y_{n-1-i}`: the Hermitian form with Gram matrix
/// the antidiagonal identity `J`.
pub fn hermitian_form(field: &FiniteField, conj_exp: u64, x: &[u32], y: &[u32]) -> u32 {
    let n = x.len();
    (0..n).fold(0, |acc, i| {
        field.add(acc, field.mul(field.pow(x[i], conj_exp), y[n - 1 - i]))
    })
}

/// Checks `M* J M = J`, with `M*` the conjugate transpose.
pub fn preserves_hermitian_form(m: &Matrix, conj_exp: u64) -> bool {
    let n = m.dim();
    let f = m.field();
    let col = |j: usize| -> Vec<u32> { (0..n).map(|i| m.get(i, j)).collect() };
    (0..n).all(|i| {
        (0..n).all(|j| {
            let expected = u32::from(i + j == n - 1);
            hermitian_form(f, conj_exp, &col(i), &col(j)) == expected
        })
    })
}

/// Unitary transvections `x -> x + a h(v, x) v` over GF(q^2), one isotropic
/// vector `v` per projective point and every nonzero `a` with `a^q = -a`.
fn unitary_transvections(n: usize, q: u64) -> Result<Vec<Matrix>, GroupError> {
    if !(2..=4).contains(&n) {
        return Err(GroupError::UnsupportedDimension(n));
    }
    let (p, k) = prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
    let field = Arc::new(field_make(p, 2 * k)?);
    let f = &*field;
    let big_q = f.order();

    let mut gens = Vec::new();
    let scalars: Vec<u32> = (1..big_q).filter(|&a| f.add(f.pow(a, q), a) == 0).collect();
    // Vectors whose first nonzero coordinate is 1.
    let total = (big_q as u64).pow(n as u32);
    for code in 0..total {
        let v: Vec<u32> = (0..n)
            .map(|i| ((code / (big_q as u64).pow((n - 1 - i) as u32)) % big_q as u64) as u32)
            .collect();
        if v.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        if hermitian_form(f, q, &v, &v) != 0 {
            continue;
        }
        // Row i of the transvection: e_i + a v_i conj(v_{n-1-j}) in column j.
        for &a in &scalars {
            let mut entries = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let t = f.mul(a, f.mul(v[i], f.pow(v[n - 1 - j], q)));
                    entries.push(f.add(u32::from(i == j), t));
                }
            }
            gens.push(Matrix::new(Arc::clone(&field), n, entries)?);
        }
    }
    for g in &gens {
        if g.determinant() != 1 || !preserves_hermitian_form(g, q) {
            return Err(GroupError::InvalidParameter(format!(
                "constructed transvection {g:?} is not in SU({n},{q})"
            )));
        }
    }
    Ok(gens)
}

/// Enumerates SU(n, q) and checks the result against the order formula.
pub fn special_unitary(n: usize, q: u64, cap: usize) -> Result<GroupHandle<Matrix>, GroupError> {
    let gens = unitary_transvections(n, q)?;
    let group = closure(&gens, cap)?;
    check_order(
        format!("SU({n},{q})"),
        &group,
        classical_order(ClassicalFamily::SU, n, q)?,
    )?;
    Ok(group)
}

/// The unitary transvections generating SU(n, q), verified by enumeration.
pub fn su_generators(n: usize, q: u64) -> Result<Vec<Matrix>, GroupError> {
    let expected = classical_order(ClassicalFamily::SU, n, q)?;
    Ok(special_unitary(n, q, expected as usize + 1)?
        .generators()
        .to_vec())
}

pub fn projective_special_unitary(
    n: usize,
    q: u64,
    cap: usize,
) -> Result<GroupHandle<Matrix>, GroupError> {
    let group = projectivize(&special_unitary(n, q, cap)?);
    check_order(
        format!("PSU({n},{q})"),
        &group,
        classical_order(ClassicalFamily::PSU, n, q)?,
    )?;
    Ok(group)
}

/// Builds any of the four classical groups.
pub fn classical_group(
    family: ClassicalFamily,
    n: usize,
    q: u64,
    cap: usize,
) -> Result<GroupHandle<Matrix>, GroupError> {
    match family {
        ClassicalFamily::SL => special_linear(n, q, cap),
        ClassicalFamily::PSL => projective_special_linear(n, q, cap),
        ClassicalFamily::SU => special_unitary(n, q, cap),
        ClassicalFamily::PSU => projective_special_unitary(n, q, cap),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{element_order, DEFAULT_CAP};
    use crate::spectrum::order_spectrum;
    use std::collections::BTreeMap;

    fn gf(p: u64, k: u32) -> Arc<FiniteField> {
        Arc::new(field_make(p, k).unwrap())
    }

    #[test]
    fn unipotent_order_is_characteristic() {
        let f = gf(7, 1);
        let u = Matrix::new(f, 2, vec![1, 1, 0, 1]).unwrap();
        assert_eq!(element_order(&u, 336), 7);
    }

    #[test]
    fn singular_rejected() {
        assert!(Matrix::new(gf(5, 1), 2, vec![1, 2, 2, 4]).is_err());
        assert!(Matrix::new(gf(5, 1), 2, vec![1, 2, 3]).is_err());
        assert!(Matrix::new(gf(5, 1), 2, vec![1, 0, 0, 7]).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let f = gf(3, 2);
        let m = Matrix::new(Arc::clone(&f), 3, vec![1, 2, 0, 0, 3, 4, 5, 0, 1]).unwrap();
        assert!(m.compose(&m.inverse()).is_identity());
        assert!(m.inverse().compose(&m).is_identity());
        let d = m.compose(&m).determinant();
        assert_eq!(d, f.mul(m.determinant(), m.determinant()));
    }

    #[test]
    fn sl23_spectrum() {
        let g = special_linear(2, 3, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(
            order_spectrum(&g).counts(),
            &BTreeMap::from([(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)])
        );
    }

    #[test]
    fn small_sl_orders() {
        assert_eq!(special_linear(2, 2, DEFAULT_CAP).unwrap().order(), 6);
        assert_eq!(special_linear(2, 7, DEFAULT_CAP).unwrap().order(), 336);
    }

    #[test]
    fn psl_orders() {
        assert_eq!(
            projective_special_linear(2, 7, DEFAULT_CAP)
                .unwrap()
                .order(),
            168
        );
        assert_eq!(
            projective_special_linear(2, 8, DEFAULT_CAP)
                .unwrap()
                .order(),
            504
        );
    }

    #[test]
    fn projectivize_is_idempotent() {
        let g = projective_special_linear(2, 5, DEFAULT_CAP).unwrap();
        let again = projectivize(&g);
        assert_eq!(again.order(), g.order());
        assert!(g.elements().iter().all(|x| again.contains(x)));
    }

    #[test]
    fn classical_order_values() {
        use ClassicalFamily::*;
        assert_eq!(classical_order(PSL, 2, 9).unwrap(), 360);
        assert_eq!(classical_order(PSL, 3, 3).unwrap(), 5616);
        assert_eq!(classical_order(PSL, 2, 5).unwrap(), 60);
        assert_eq!(classical_order(SU, 3, 3).unwrap(), 6048);
        assert_eq!(classical_order(SU, 4, 2).unwrap(), 25920);
        assert_eq!(classical_order(PSU, 4, 2).unwrap(), 25920);
        assert_eq!(classical_order(SL, 2, 17).unwrap(), 4896);
        assert_eq!(classical_order(PSL, 2, 17).unwrap(), 2448);
        assert_eq!(
            classical_order(SL, 2, 6).unwrap_err(),
            GroupError::NotPrimePower(6)
        );
        assert_eq!(
            "Sp".parse::<ClassicalFamily>().unwrap_err(),
            GroupError::UnsupportedFamily("Sp".into())
        );
    }

    #[test]
    fn su33_generators_preserve_form() {
        let gens = su_generators(3, 3).unwrap();
        // 28 isotropic points, two admissible scalars each.
        assert_eq!(gens.len(), 56);
        for g in &gens {
            assert!(preserves_hermitian_form(g, 3));
            assert_eq!(g.determinant(), 1);
        }
    }

    #[test]
    fn su_dimension_guard() {
        assert_eq!(
            su_generators(5, 2).unwrap_err(),
            GroupError::UnsupportedDimension(5)
        );
    }
}
