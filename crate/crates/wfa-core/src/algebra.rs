//! State-indexed vectors and square matrices over a semiring.
//!
//! Index sets are ordered lists of state names. Entries are stored sparsely;
//! an absent entry means the semiring zero, and setting an entry to the
//! exact zero removes it, so equal objects compare equal structurally.
//! Operations require identical semirings and identically ordered index
//! sets and fail loudly otherwise.

use crate::semiring::{Semiring, Value};
use crate::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

/// An ordered, shared list of state names.
#[derive(Debug, Clone, Eq)]
pub struct States(Arc<Vec<String>>);

impl States {
    pub fn new<I, T>(names: I) -> States
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        States(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }
}

impl PartialEq for States {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// A sparse vector indexed by a state set.
#[derive(Debug, Clone, PartialEq)]
pub struct SrVector {
    semiring: Semiring,
    states: States,
    entries: BTreeMap<usize, Value>,
}

/// A sparse square matrix indexed by a state set (rows and columns alike).
#[derive(Debug, Clone, PartialEq)]
pub struct SrMatrix {
    semiring: Semiring,
    states: States,
    entries: BTreeMap<(usize, usize), Value>,
}

impl SrVector {
    /// The all-zero vector.
    pub fn new(semiring: Semiring, states: States) -> SrVector {
        SrVector {
            semiring,
            states,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_dense(semiring: Semiring, states: States, values: &[Value]) -> SrVector {
        assert_eq!(values.len(), states.len(), "dense length != state count");
        let mut v = SrVector::new(semiring, states);
        for (i, value) in values.iter().enumerate() {
            v.set(i, *value);
        }
        v
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn states(&self) -> &States {
        &self.states
    }

    /// Store an entry; storing the exact zero removes it.
    pub fn set(&mut self, index: usize, value: Value) {
        assert!(index < self.states.len(), "state index out of range");
        if value == self.semiring.zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, value);
        }
    }

    pub fn get(&self, index: usize) -> Value {
        assert!(index < self.states.len(), "state index out of range");
        self.entries
            .get(&index)
            .copied()
            .unwrap_or_else(|| self.semiring.zero())
    }

    /// Stored (nonzero) entries in index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Value)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn is_all_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_dense(&self) -> Vec<Value> {
        (0..self.states.len()).map(|i| self.get(i)).collect()
    }

    /// Sum of all coordinates (the scalar product with the all-ones vector).
    pub fn sum(&self) -> Result<Value> {
        let mut acc = self.semiring.zero();
        for v in self.entries.values() {
            acc = self.semiring.add(&acc, v)?;
        }
        Ok(acc)
    }

    /// Coordinatewise equality under the semiring's equality policy.
    pub fn elem_eq(&self, other: &SrVector) -> Result<bool> {
        compat(self.semiring, other.semiring, &self.states, &other.states)?;
        for i in 0..self.states.len() {
            if !self.semiring.elem_eq(&self.get(i), &other.get(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl SrMatrix {
    /// The all-zero matrix.
    pub fn new(semiring: Semiring, states: States) -> SrMatrix {
        SrMatrix {
            semiring,
            states,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_rows(semiring: Semiring, states: States, rows: &[&[Value]]) -> SrMatrix {
        assert_eq!(rows.len(), states.len(), "row count != state count");
        let mut m = SrMatrix::new(semiring, states);
        for (a, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), m.states.len(), "column count != state count");
            for (b, value) in row.iter().enumerate() {
                m.set(a, b, *value);
            }
        }
        m
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn states(&self) -> &States {
        &self.states
    }

    pub fn set(&mut self, row: usize, col: usize, value: Value) {
        let n = self.states.len();
        assert!(row < n && col < n, "state index out of range");
        if value == self.semiring.zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Value {
        let n = self.states.len();
        assert!(row < n && col < n, "state index out of range");
        self.entries
            .get(&(row, col))
            .copied()
            .unwrap_or_else(|| self.semiring.zero())
    }

    /// Stored (nonzero) entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Value)> {
        self.entries.iter().map(|((a, b), v)| (*a, *b, v))
    }

    pub fn is_all_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_dense(&self) -> Vec<Vec<Value>> {
        let n = self.states.len();
        (0..n)
            .map(|a| (0..n).map(|b| self.get(a, b)).collect())
            .collect()
    }

    /// Entrywise equality under the semiring's equality policy.
    pub fn elem_eq(&self, other: &SrMatrix) -> Result<bool> {
        compat(self.semiring, other.semiring, &self.states, &other.states)?;
        let n = self.states.len();
        for a in 0..n {
            for b in 0..n {
                if !self.semiring.elem_eq(&self.get(a, b), &other.get(a, b))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn compat(s1: Semiring, s2: Semiring, a1: &States, a2: &States) -> Result<()> {
    if s1 != s2 {
        return Err(Error::SemiringsDiffer {
            left: s1,
            right: s2,
        });
    }
    if a1 != a2 {
        return Err(Error::StateSetMismatch);
    }
    Ok(())
}

/// Matrix product: (m1 · m2)(a, b) = Σ_c m1(a, c) · m2(c, b).
pub fn mat_mul(m1: &SrMatrix, m2: &SrMatrix) -> Result<SrMatrix> {
    compat(m1.semiring, m2.semiring, &m1.states, &m2.states)?;
    let sr = m1.semiring;
    let mut out = SrMatrix::new(sr, m1.states.clone());
    for (&(a, c), v1) in &m1.entries {
        for (&(_, b), v2) in m2.entries.range((c, 0)..=(c, usize::MAX)) {
            let p = sr.mul(v1, v2)?;
            let acc = match out.entries.get(&(a, b)) {
                Some(prev) => sr.add(prev, &p)?,
                None => p,
            };
            out.set(a, b, acc);
        }
    }
    Ok(out)
}

/// Row vector times matrix: (v · m)(b) = Σ_a v(a) · m(a, b).
pub fn vec_mat(v: &SrVector, m: &SrMatrix) -> Result<SrVector> {
    compat(v.semiring, m.semiring, &v.states, &m.states)?;
    let sr = v.semiring;
    let mut out = SrVector::new(sr, v.states.clone());
    for (&a, va) in &v.entries {
        for (&(_, b), mab) in m.entries.range((a, 0)..=(a, usize::MAX)) {
            let p = sr.mul(va, mab)?;
            let acc = match out.entries.get(&b) {
                Some(prev) => sr.add(prev, &p)?,
                None => p,
            };
            out.set(b, acc);
        }
    }
    Ok(out)
}

/// Matrix times column vector: (m · v)(a) = Σ_b m(a, b) · v(b).
pub fn mat_vec(m: &SrMatrix, v: &SrVector) -> Result<SrVector> {
    compat(m.semiring, v.semiring, &m.states, &v.states)?;
    let sr = m.semiring;
    let mut out = SrVector::new(sr, m.states.clone());
    for (&(a, b), mab) in &m.entries {
        if let Some(vb) = v.entries.get(&b) {
            let p = sr.mul(mab, vb)?;
            let acc = match out.entries.get(&a) {
                Some(prev) => sr.add(prev, &p)?,
                None => p,
            };
            out.set(a, acc);
        }
    }
    Ok(out)
}

/// Scalar product: Σ_a v1(a) · v2(a).
pub fn dot(v1: &SrVector, v2: &SrVector) -> Result<Value> {
    compat(v1.semiring, v2.semiring, &v1.states, &v2.states)?;
    let sr = v1.semiring;
    let mut acc = sr.zero();
    for (&a, x) in &v1.entries {
        if let Some(y) = v2.entries.get(&a) {
            acc = sr.add(&acc, &sr.mul(x, y)?)?;
        }
    }
    Ok(acc)
}

/// Hadamard (pointwise) product: (v1 ⊙ v2)(a) = v1(a) · v2(a).
pub fn hadamard(v1: &SrVector, v2: &SrVector) -> Result<SrVector> {
    compat(v1.semiring, v2.semiring, &v1.states, &v2.states)?;
    let sr = v1.semiring;
    let mut out = SrVector::new(sr, v1.states.clone());
    for (&a, x) in &v1.entries {
        if let Some(y) = v2.entries.get(&a) {
            out.set(a, sr.mul(x, y)?);
        }
    }
    Ok(out)
}

/// Diagonal embedding D(v): v(a) on the diagonal, zero elsewhere.
/// Left-multiplying by D(v) scales rows, right-multiplying scales columns.
pub fn diag(v: &SrVector) -> SrMatrix {
    let mut out = SrMatrix::new(v.semiring, v.states.clone());
    for (&a, x) in &v.entries {
        out.set(a, a, *x);
    }
    out
}

/// The identity matrix (ones on the diagonal) over a non-empty state set.
pub fn identity_matrix(semiring: Semiring, states: &States) -> Result<SrMatrix> {
    if states.is_empty() {
        return Err(Error::EmptyStates);
    }
    let mut out = SrMatrix::new(semiring, states.clone());
    for a in 0..states.len() {
        out.set(a, a, semiring.one());
    }
    Ok(out)
}

/// The constant-one vector over a non-empty state set.
pub fn all_ones(semiring: Semiring, states: &States) -> Result<SrVector> {
    if states.is_empty() {
        return Err(Error::EmptyStates);
    }
    let mut out = SrVector::new(semiring, states.clone());
    for a in 0..states.len() {
        out.set(a, semiring.one());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> Value {
        Value::Real(x)
    }

    fn godel_matrix(rows: &[&[f64]]) -> SrMatrix {
        let states = States::new((0..rows.len()).map(|i| alloc::format!("a{}", i + 1)));
        let rows: Vec<Vec<Value>> = rows
            .iter()
            .map(|row| row.iter().map(|x| r(*x)).collect())
            .collect();
        let refs: Vec<&[Value]> = rows.iter().map(|r| r.as_slice()).collect();
        SrMatrix::from_rows(Semiring::Godel, states, &refs)
    }

    fn godel_vector(values: &[f64]) -> SrVector {
        let states = States::new((0..values.len()).map(|i| alloc::format!("a{}", i + 1)));
        let values: Vec<Value> = values.iter().map(|x| r(*x)).collect();
        SrVector::from_dense(Semiring::Godel, states, &values)
    }

    // Expected values below are hand-expanded max-min sums.

    #[test]
    fn godel_mat_mul() {
        let m1 = godel_matrix(&[&[0.6, 0.5], &[0.0, 0.4]]);
        let m2 = godel_matrix(&[&[0.2, 0.2], &[0.0, 0.7]]);
        let want = godel_matrix(&[&[0.2, 0.5], &[0.0, 0.4]]);
        assert_eq!(mat_mul(&m1, &m2).unwrap(), want);
    }

    #[test]
    fn godel_vec_mat() {
        let v = godel_vector(&[1.0, 0.0]);
        let m = godel_matrix(&[&[0.7, 0.5], &[0.0, 0.8]]);
        assert_eq!(vec_mat(&v, &m).unwrap(), godel_vector(&[0.7, 0.5]));
    }

    #[test]
    fn godel_mat_vec() {
        let m = godel_matrix(&[&[0.7, 0.5], &[0.0, 0.8]]);
        let v = godel_vector(&[0.2, 0.7]);
        assert_eq!(mat_vec(&m, &v).unwrap(), godel_vector(&[0.5, 0.7]));
    }

    #[test]
    fn diag_scales_rows() {
        let d = diag(&godel_vector(&[0.6, 0.4]));
        let m = godel_matrix(&[&[0.7, 0.5], &[0.0, 0.8]]);
        let want = godel_matrix(&[&[0.6, 0.5], &[0.0, 0.4]]);
        assert_eq!(mat_mul(&d, &m).unwrap(), want);
    }

    #[test]
    fn diag_of_ones_is_identity() {
        let states = States::new(["a", "b"]);
        let ones = all_ones(Semiring::Godel, &states).unwrap();
        assert_eq!(
            diag(&ones),
            identity_matrix(Semiring::Godel, &states).unwrap()
        );
    }

    #[test]
    fn identity_and_zero_laws() {
        let m = godel_matrix(&[&[0.6, 0.5], &[0.0, 0.4]]);
        let id = identity_matrix(Semiring::Godel, m.states()).unwrap();
        let zero = SrMatrix::new(Semiring::Godel, m.states().clone());
        assert_eq!(mat_mul(&m, &id).unwrap(), m);
        assert_eq!(mat_mul(&id, &m).unwrap(), m);
        assert_eq!(mat_mul(&zero, &m).unwrap(), zero);

        let v = godel_vector(&[0.3, 0.9]);
        assert_eq!(vec_mat(&v, &id).unwrap(), v);
        assert_eq!(mat_vec(&id, &v).unwrap(), v);
        let zv = SrVector::new(Semiring::Godel, v.states().clone());
        assert_eq!(vec_mat(&zv, &m).unwrap(), zv);
        assert_eq!(mat_vec(&m, &zv).unwrap(), zv);
    }

    #[test]
    fn dot_examples() {
        let v1 = godel_vector(&[1.0, 0.0]);
        let v2 = godel_vector(&[0.4, 0.9]);
        assert_eq!(dot(&v1, &v2).unwrap(), r(0.4));

        let zero = SrVector::new(Semiring::Godel, v1.states().clone());
        assert_eq!(dot(&v1, &zero).unwrap(), r(0.0));

        let states = States::new(["a", "b"]);
        let n1 = SrVector::from_dense(
            Semiring::Naturals,
            states.clone(),
            &[Value::Nat(1), Value::Nat(2)],
        );
        let n2 = SrVector::from_dense(Semiring::Naturals, states, &[Value::Nat(3), Value::Nat(4)]);
        assert_eq!(dot(&n1, &n2).unwrap(), Value::Nat(11));
    }

    #[test]
    fn hadamard_examples() {
        let v1 = godel_vector(&[0.6, 0.4]);
        let v2 = godel_vector(&[0.2, 0.7]);
        assert_eq!(hadamard(&v1, &v2).unwrap(), godel_vector(&[0.2, 0.4]));

        let ones = all_ones(Semiring::Godel, v1.states()).unwrap();
        assert_eq!(hadamard(&v1, &ones).unwrap(), v1);
        let zero = SrVector::new(Semiring::Godel, v1.states().clone());
        assert_eq!(hadamard(&v1, &zero).unwrap(), zero);
    }

    #[test]
    fn all_ones_over_two_states() {
        let states = States::new(["a", "b"]);
        let ones = all_ones(Semiring::Boolean, &states).unwrap();
        assert_eq!(ones.to_dense(), [Value::Bool(true), Value::Bool(true)]);
        assert_eq!(dot(&ones, &ones).unwrap(), Value::Bool(true));
    }

    #[test]
    fn empty_state_set_is_rejected() {
        let states = States::new(core::iter::empty::<String>());
        assert_eq!(
            identity_matrix(Semiring::Boolean, &states),
            Err(Error::EmptyStates)
        );
        assert_eq!(
            all_ones(Semiring::Boolean, &states),
            Err(Error::EmptyStates)
        );
    }

    #[test]
    fn mismatches_are_loud() {
        let m = godel_matrix(&[&[0.5]]);
        let other_states = States::new(["zzz"]);
        let m2 = SrMatrix::new(Semiring::Godel, other_states.clone());
        assert_eq!(mat_mul(&m, &m2), Err(Error::StateSetMismatch));

        let v = SrVector::new(Semiring::Viterbi, m.states().clone());
        assert!(matches!(
            vec_mat(&v, &m),
            Err(Error::SemiringsDiffer { .. })
        ));
    }

    #[test]
    fn zero_entries_are_not_stored() {
        let mut v = godel_vector(&[0.5, 0.0]);
        assert_eq!(v.iter().count(), 1);
        v.set(0, r(0.0));
        assert!(v.is_all_zero());
    }
}
