//! Dense univariate polynomials in `k` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(BigInt),
    #[error("coefficient of k^{power} is {value}, not an integer")]
    NonIntegral { power: usize, value: BigRational },
}

/// A sample `(x, y)` with exact integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationPoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl EvaluationPoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        EvaluationPoint {
            x: x.into(),
            y: y.into(),
        }
    }
}

/// Coefficients ascending by power. The highest stored coefficient is
/// nonzero; the zero polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BigPolynomial {
    coefficients: Vec<BigRational>,
}

impl BigPolynomial {
    pub fn zero() -> Self {
        BigPolynomial::default()
    }

    pub fn from_coefficients(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        BigPolynomial { coefficients }
    }

    pub fn from_integers<T: Into<BigInt>>(coefficients: impl IntoIterator<Item = T>) -> Self {
        Self::from_coefficients(
            coefficients
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// The monomial `c * k^power`.
    pub fn monomial(c: BigRational, power: usize) -> Self {
        let mut coefficients = vec![BigRational::zero(); power + 1];
        coefficients[power] = c;
        Self::from_coefficients(coefficients)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coefficients.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `k^power`; zero above the degree.
    pub fn coefficient(&self, power: usize) -> BigRational {
        self.coefficients.get(power).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigRational {
        let x = BigRational::from_integer(x.clone());
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Integer coefficient list, or the first non-integral coefficient.
    /// The zero polynomial yields `[0]`.
    pub fn assert_integral(&self) -> Result<Vec<BigInt>, PolyError> {
        if self.is_zero() {
            return Ok(vec![BigInt::zero()]);
        }
        self.coefficients
            .iter()
            .enumerate()
            .map(|(power, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(PolyError::NonIntegral {
                        power,
                        value: c.clone(),
                    })
                }
            })
            .collect()
    }

    /// Multiplies in place by `(k - root)`.
    fn mul_linear(&mut self, root: &BigRational) {
        if self.is_zero() {
            return;
        }
        let mut out = vec![BigRational::zero(); self.coefficients.len() + 1];
        for (i, c) in self.coefficients.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * root;
        }
        *self = Self::from_coefficients(out);
    }

    fn add_constant(&mut self, c: &BigRational) {
        if self.coefficients.is_empty() {
            self.coefficients.push(BigRational::zero());
        }
        self.coefficients[0] += c;
        let normalized = Self::from_coefficients(std::mem::take(&mut self.coefficients));
        *self = normalized;
    }
}

/// The unique polynomial of degree below `points.len()` through every
/// point. Unit-spaced nodes take an integer-only route; anything else goes
/// through Newton divided differences over the rationals.
pub fn interpolate(points: &[EvaluationPoint]) -> Result<BigPolynomial, PolyError> {
    if points.is_empty() {
        return Err(PolyError::NoPoints);
    }
    let mut xs: Vec<&BigInt> = points.iter().map(|p| &p.x).collect();
    xs.sort();
    if let Some(w) = xs.windows(2).find(|w| w[0] == w[1]) {
        return Err(PolyError::DuplicateAbscissa(w[0].clone()));
    }

    if let Some(start) = consecutive_start(points) {
        return Ok(interpolate_consecutive(&start, points));
    }

    Ok(interpolate_general(points))
}

/// `Some(x_0)` when the abscissas are `x_0, x_0 + 1, ..., x_0 + len - 1` in
/// input order.
fn consecutive_start(points: &[EvaluationPoint]) -> Option<BigInt> {
    let start = points[0].x.clone();
    let mut expected = start.clone();
    for p in points {
        if p.x != expected {
            return None;
        }
        expected += 1;
    }
    Some(start)
}

/// Newton forward differences on unit-spaced nodes, kept integral by
/// scaling with `N!` (`N = len - 1`) and dividing once at the end:
///
/// `N! * P(k) = sum_j Δ^j y_0 * (N! / j!) * (k - x_0)(k - x_0 - 1)...(k - x_0 - j + 1)`.
fn interpolate_consecutive(start: &BigInt, points: &[EvaluationPoint]) -> BigPolynomial {
    let len = points.len();
    let mut diffs: Vec<BigInt> = points.iter().map(|p| p.y.clone()).collect();
    for j in 1..len {
        for i in (j..len).rev() {
            let d = &diffs[i] - &diffs[i - 1];
            diffs[i] = d;
        }
    }

    // acc holds sum_{i >= j} Δ^i y_0 (N!/i!) prod_{j <= l < i} (k - x_0 - l).
    let mut acc: Vec<BigInt> = vec![diffs[len - 1].clone()];
    let mut weight = BigInt::one(); // N! / j!
    for j in (0..len - 1).rev() {
        weight *= j + 1;
        let root = start + j;
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &root;
        }
        next[0] += &diffs[j] * &weight;
        acc = next;
    }
    let factorial = weight;
    BigPolynomial::from_coefficients(
        acc.into_iter()
            .map(|c| BigRational::new(c, factorial.clone()))
            .collect(),
    )
}

/// Newton divided differences over arbitrary distinct nodes.
fn interpolate_general(points: &[EvaluationPoint]) -> BigPolynomial {
    let xs: Vec<BigRational> = points.iter().map(|p| BigRational::from_integer(p.x.clone())).collect();
    // After pass j, table[i] holds f[x_{i-j}, ..., x_i] for i >= j.
    let mut table: Vec<BigRational> = points.iter().map(|p| BigRational::from_integer(p.y.clone())).collect();
    let len = table.len();
    for j in 1..len {
        for i in (j..len).rev() {
            let num = &table[i] - &table[i - 1];
            table[i] = num / (&xs[i] - &xs[i - j]);
        }
    }
    let mut result = BigPolynomial::zero();
    for i in (0..len).rev() {
        result.mul_linear(&xs[i]);
        result.add_constant(&table[i]);
    }
    result
}

impl Add for &BigPolynomial {
    type Output = BigPolynomial;

    fn add(self, rhs: &BigPolynomial) -> BigPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        BigPolynomial::from_coefficients((0..len).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Neg for &BigPolynomial {
    type Output = BigPolynomial;

    fn neg(self) -> BigPolynomial {
        BigPolynomial {
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &BigPolynomial {
    type Output = BigPolynomial;

    fn sub(self, rhs: &BigPolynomial) -> BigPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &BigPolynomial {
    type Output = BigPolynomial;

    fn mul(self, rhs: &BigPolynomial) -> BigPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return BigPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BigPolynomial::from_coefficients(out)
    }
}

impl fmt::Display for BigPolynomial {
    /// Renders like `k^4 - 2k^2 + k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let magnitude = c.abs();
            let unit = magnitude.is_one() && power > 0;
            if !unit {
                if magnitude.is_integer() {
                    write!(f, "{magnitude}")?;
                } else {
                    write!(f, "({magnitude})")?;
                }
            }
            match power {
                0 => {}
                1 => f.write_str("k")?,
                p => write!(f, "k^{p}")?,
            }
        }
        Ok(())
    }
}
