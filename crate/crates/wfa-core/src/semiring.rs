//! The semiring catalog and element-level operations.
//!
//! A semiring (S, +, ·, 0, 1) has a commutative additive monoid, a
//! multiplicative monoid, distributivity, and an annihilating zero. Six
//! concrete semirings are shipped; they are referenced by name in files and
//! CLI flags, and every carrier scalar is represented by a [`Value`].

use crate::{Error, Result};
use core::fmt;
use num_rational::Ratio;

/// Exact nonnegative rational scalar.
pub type Rational = Ratio<u64>;

/// Absolute tolerance for comparing elements of real-backed semirings.
pub const EPS_EQ: f64 = 1e-9;

/// How a semiring decides equality of its elements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EqPolicy {
    /// Bitwise/structural equality (Boolean, Naturals, Rationals).
    Exact,
    /// `|a - b| <= eps`, with infinities compared by class (Gödel, Viterbi, Tropical).
    AbsoluteTolerance(f64),
}

/// The shipped semirings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semiring {
    /// ({0, 1}, or, and, 0, 1)
    Boolean,
    /// ([0, 1], max, min, 0, 1)
    Godel,
    /// ([0, 1], max, ·, 0, 1)
    Viterbi,
    /// (R ∪ {+inf}, min, +, +inf, 0)
    Tropical,
    /// (N, +, ·, 0, 1)
    Naturals,
    /// (Q >= 0, +, ·, 0, 1)
    Rationals,
}

/// A scalar belonging to some semiring's carrier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Bool(bool),
    Real(f64),
    Nat(u64),
    Rat(Rational),
}

impl Semiring {
    /// All catalog members, in a fixed order.
    pub const ALL: [Semiring; 6] = [
        Semiring::Boolean,
        Semiring::Godel,
        Semiring::Viterbi,
        Semiring::Tropical,
        Semiring::Naturals,
        Semiring::Rationals,
    ];

    /// The name used in files and CLI flags.
    pub fn name(self) -> &'static str {
        match self {
            Semiring::Boolean => "boolean",
            Semiring::Godel => "godel",
            Semiring::Viterbi => "viterbi",
            Semiring::Tropical => "tropical",
            Semiring::Naturals => "naturals",
            Semiring::Rationals => "rationals",
        }
    }

    pub fn from_name(name: &str) -> Option<Semiring> {
        Semiring::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Human-readable description of the carrier set.
    pub fn carrier_description(self) -> &'static str {
        match self {
            Semiring::Boolean => "{0, 1}",
            Semiring::Godel | Semiring::Viterbi => "the real interval [0, 1]",
            Semiring::Tropical => "the reals extended with +inf",
            Semiring::Naturals => "the natural numbers",
            Semiring::Rationals => "the nonnegative rationals",
        }
    }

    pub fn zero(self) -> Value {
        match self {
            Semiring::Boolean => Value::Bool(false),
            Semiring::Godel | Semiring::Viterbi => Value::Real(0.0),
            Semiring::Tropical => Value::Real(f64::INFINITY),
            Semiring::Naturals => Value::Nat(0),
            Semiring::Rationals => Value::Rat(Rational::from_integer(0)),
        }
    }

    pub fn one(self) -> Value {
        match self {
            Semiring::Boolean => Value::Bool(true),
            Semiring::Godel | Semiring::Viterbi => Value::Real(1.0),
            Semiring::Tropical => Value::Real(0.0),
            Semiring::Naturals => Value::Nat(1),
            Semiring::Rationals => Value::Rat(Rational::from_integer(1)),
        }
    }

    /// True iff s + s = s for every s, equivalently 1 + 1 = 1.
    pub fn is_idempotent(self) -> bool {
        match self {
            Semiring::Boolean | Semiring::Godel | Semiring::Viterbi | Semiring::Tropical => true,
            Semiring::Naturals | Semiring::Rationals => false,
        }
    }

    pub fn eq_policy(self) -> EqPolicy {
        match self {
            Semiring::Boolean | Semiring::Naturals | Semiring::Rationals => EqPolicy::Exact,
            Semiring::Godel | Semiring::Viterbi | Semiring::Tropical => {
                EqPolicy::AbsoluteTolerance(EPS_EQ)
            }
        }
    }

    /// Does the carrier contain `v`?
    pub fn contains(self, v: &Value) -> bool {
        match (self, v) {
            (Semiring::Boolean, Value::Bool(_)) => true,
            (Semiring::Godel | Semiring::Viterbi, Value::Real(x)) => {
                x.is_finite() && (0.0..=1.0).contains(x)
            }
            (Semiring::Tropical, Value::Real(x)) => x.is_finite() || *x == f64::INFINITY,
            (Semiring::Naturals, Value::Nat(_)) => true,
            (Semiring::Rationals, Value::Rat(_)) => true,
            _ => false,
        }
    }

    fn check(self, v: &Value) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::SemiringMismatch {
                semiring: self,
                value: *v,
            })
        }
    }

    /// Semiring addition.
    pub fn add(self, a: &Value, b: &Value) -> Result<Value> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (Semiring::Boolean, Value::Bool(x), Value::Bool(y)) => Value::Bool(*x || *y),
            (Semiring::Godel | Semiring::Viterbi, Value::Real(x), Value::Real(y)) => {
                Value::Real(x.max(*y))
            }
            (Semiring::Tropical, Value::Real(x), Value::Real(y)) => Value::Real(x.min(*y)),
            (Semiring::Naturals, Value::Nat(x), Value::Nat(y)) => Value::Nat(x + y),
            (Semiring::Rationals, Value::Rat(x), Value::Rat(y)) => Value::Rat(x + y),
            _ => unreachable!("carrier checked above"),
        })
    }

    /// Semiring multiplication.
    pub fn mul(self, a: &Value, b: &Value) -> Result<Value> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (Semiring::Boolean, Value::Bool(x), Value::Bool(y)) => Value::Bool(*x && *y),
            (Semiring::Godel, Value::Real(x), Value::Real(y)) => Value::Real(x.min(*y)),
            (Semiring::Viterbi, Value::Real(x), Value::Real(y)) => Value::Real(x * y),
            (Semiring::Tropical, Value::Real(x), Value::Real(y)) => Value::Real(x + y),
            (Semiring::Naturals, Value::Nat(x), Value::Nat(y)) => Value::Nat(x * y),
            (Semiring::Rationals, Value::Rat(x), Value::Rat(y)) => Value::Rat(x * y),
            _ => unreachable!("carrier checked above"),
        })
    }

    /// The n-th additive power ns = s + s + ... + s (n summands), n >= 1.
    ///
    /// Additively idempotent semirings return `s` without iterating.
    pub fn nat_scale(self, n: u64, s: &Value) -> Result<Value> {
        if n == 0 {
            return Err(Error::ZeroAdditivePower);
        }
        self.check(s)?;
        if self.is_idempotent() {
            return Ok(*s);
        }
        Ok(match (self, s) {
            (Semiring::Naturals, Value::Nat(x)) => Value::Nat(n * x),
            (Semiring::Rationals, Value::Rat(x)) => Value::Rat(Rational::from_integer(n) * x),
            _ => unreachable!("carrier checked above"),
        })
    }

    /// Equality under the semiring's policy.
    pub fn elem_eq(self, a: &Value, b: &Value) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(match self.eq_policy() {
            EqPolicy::Exact => a == b,
            EqPolicy::AbsoluteTolerance(eps) => match (a, b) {
                (Value::Real(x), Value::Real(y)) => {
                    if x.is_infinite() || y.is_infinite() {
                        x == y
                    } else {
                        let diff = if x >= y { x - y } else { y - x };
                        diff <= eps
                    }
                }
                _ => unreachable!("real-backed carrier checked above"),
            },
        })
    }

    /// Convenience: is `v` (semantically) the zero of this semiring?
    pub fn is_zero(self, v: &Value) -> Result<bool> {
        self.elem_eq(v, &self.zero())
    }

    /// Convenience: is `v` (semantically) the one of this semiring?
    pub fn is_one(self, v: &Value) -> Result<bool> {
        self.elem_eq(v, &self.one())
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(false) => f.write_str("0"),
            Value::Bool(true) => f.write_str("1"),
            Value::Real(x) if *x == f64::INFINITY => f.write_str("inf"),
            Value::Real(x) => write!(f, "{x}"),
            Value::Nat(n) => write!(f, "{n}"),
            Value::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Value::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl Value {
    /// Parse a rational from its display form ("n" or "n/d").
    pub fn rational(numer: u64, denom: u64) -> Value {
        Value::Rat(Rational::new(numer, denom))
    }
}
