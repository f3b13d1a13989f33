//! Exact characteristic polynomials and real-root isolation.
//!
//! Coefficients of `det(λI − M)` come from the Faddeev–LeVerrier recursion
//! in big integers. Repeated roots are separated exactly by Yun's
//! square-free factorisation over the rationals, so the only floating-point
//! step is bisection on square-free factors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laplacian::SymmetricMatrix;

pub const MAX_CHARPOLY_ORDER: usize = 6;

const MAX_BISECTIONS: usize = 200;

/// Coefficients of `det(λI − M)`, constant term first; the last entry is 1.
pub fn characteristic_polynomial(m: &SymmetricMatrix) -> Result<Vec<BigInt>> {
    let n = m.dim();
    if n > MAX_CHARPOLY_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_CHARPOLY_ORDER,
        });
    }
    let mut a = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let x = m.get(i, j);
            if x.fract() != 0.0 || !x.is_finite() {
                return Err(Error::NonIntegerEntry {
                    row: i,
                    col: j,
                    value: x,
                });
            }
            a[i * n + j] = BigInt::from(x as i64);
        }
    }

    let matmul = |x: &[BigInt], y: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                if x[i * n + k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += &x[i * n + k] * &y[k * n + j];
                }
            }
        }
        out
    };

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(&a, &mk);
        for i in 0..n {
            next[i * n + i] += &coeffs[n - k + 1];
        }
        mk = next;
        let amk = matmul(&a, &mk);
        let trace: BigInt = (0..n).map(|i| amk[i * n + i].clone()).sum();
        let kk = BigInt::from(k);
        debug_assert!((&trace % &kk).is_zero());
        coeffs[n - k] = -(trace / kk);
    }
    Ok(coeffs)
}

/// Rational polynomial, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
struct Poly(Vec<BigRational>);

impl Poly {
    fn from_ints(c: &[BigInt]) -> Self {
        Poly(c.iter().cloned().map(BigRational::from_integer).collect()).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn monic(&self) -> Self {
        let lc = self.lead().clone();
        Poly(self.0.iter().map(|c| c / &lc).collect())
    }

    fn derivative(&self) -> Self {
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
        .trimmed()
    }

    fn sub(&self, other: &Poly) -> Self {
        let len = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        Poly(
            (0..len)
                .map(|k| self.0.get(k).unwrap_or(&zero) - other.0.get(k).unwrap_or(&zero))
                .collect(),
        )
        .trimmed()
    }

    fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        if self.0.len() < d.0.len() {
            return (Poly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.0.len() - d.0.len() + 1];
        let dl = d.lead();
        for k in (0..quot.len()).rev() {
            let coef = &rem[k + d.degree()] / dl;
            if !coef.is_zero() {
                for (idx, dc) in d.0.iter().enumerate() {
                    rem[k + idx] -= &coef * dc;
                }
            }
            quot[k] = coef;
        }
        rem.truncate(d.degree());
        (Poly(quot).trimmed(), Poly(rem).trimmed())
    }

    fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn to_f64(&self) -> Vec<f64> {
        self.0
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Yun's square-free factorisation: returns `(a_i, i)` with `f = lc · Π a_i^i`.
fn square_free_factors(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0);
    let mut c = df.exact_div(&a0);
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.exact_div(&a);
        c = d.exact_div(&a);
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &k| acc * x + k)
}

fn derivative_f64(c: &[f64]) -> Vec<f64> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &x)| k as f64 * x)
        .collect()
}

fn bisect(c: &[f64], mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = horner(c, lo);
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = horner(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Roots in `[lo, hi]` of a real-rooted polynomial with simple roots. The
/// derivative's roots split the bracket into monotone pieces, each holding
/// at most one root.
fn simple_real_roots(c: &[f64], lo: f64, hi: f64, tol: f64) -> Vec<f64> {
    match c.len() {
        0 | 1 => return Vec::new(),
        2 => {
            let r = -c[0] / c[1];
            return if (lo..=hi).contains(&r) {
                vec![r]
            } else {
                Vec::new()
            };
        }
        _ => {}
    }
    let mut knots = vec![lo];
    knots.extend(simple_real_roots(&derivative_f64(c), lo, hi, tol));
    knots.push(hi);

    let mut roots: Vec<f64> = Vec::new();
    for w in knots.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (horner(c, a), horner(c, b));
        if fa == 0.0 {
            if roots.last() != Some(&a) {
                roots.push(a);
            }
        } else if fb != 0.0 && (fa < 0.0) != (fb < 0.0) {
            roots.push(bisect(c, a, b, tol));
        }
    }
    if horner(c, hi) == 0.0 && roots.last() != Some(&hi) {
        roots.push(hi);
    }
    roots
}

/// Eigenvalues of an integer symmetric matrix of order at most six,
/// ascending with multiplicity, as roots of the characteristic polynomial
/// located to within `tol` in the bracket `[−1, 2n + 2]`.
pub fn charpoly_eigenvalues(m: &SymmetricMatrix, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let coeffs = characteristic_polynomial(m)?;
    let n = m.dim();
    let (lo, hi) = (-1.0, 2.0 * n as f64 + 2.0);
    let poly = Poly::from_ints(&coeffs);

    let mut roots = Vec::with_capacity(n);
    for (factor, mult) in square_free_factors(&poly) {
        let c = factor.to_f64();
        let found = simple_real_roots(&c, lo, hi, tol);
        if found.len() != factor.degree() {
            return Err(Error::BracketFailure {
                found: roots.len() + found.len() * mult,
                expected: n,
                lo,
                hi,
            });
        }
        for r in found {
            roots.extend(std::iter::repeat_n(r, mult));
        }
    }
    if roots.len() != n {
        return Err(Error::BracketFailure {
            found: roots.len(),
            expected: n,
            lo,
            hi,
        });
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(rows: &[&[f64]]) -> SymmetricMatrix {
        SymmetricMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_by_two() {
        let m = sym(&[&[2.0, -1.0], &[-1.0, 1.0]]);
        assert_eq!(characteristic_polynomial(&m).unwrap(), ints(&[1, -3, 1]));
        let r = charpoly_eigenvalues(&m, 1e-13).unwrap();
        let r5 = 5f64.sqrt();
        assert!((r[0] - (3.0 - r5) / 2.0).abs() < 1e-12);
        assert!((r[1] - (3.0 + r5) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn path_three() {
        let m = sym(&[&[1.0, -1.0, 0.0], &[-1.0, 2.0, -1.0], &[0.0, -1.0, 1.0]]);
        // λ(λ − 1)(λ − 3) = λ³ − 4λ² + 3λ
        assert_eq!(characteristic_polynomial(&m).unwrap(), ints(&[0, 3, -4, 1]));
        let r = charpoly_eigenvalues(&m, 1e-13).unwrap();
        for (got, want) in r.iter().zip([0.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-12, "{r:?}");
        }
    }

    #[test]
    fn repeated_roots() {
        let r = charpoly_eigenvalues(&SymmetricMatrix::zeros(3), 1e-13).unwrap();
        assert_eq!(r, vec![0.0, 0.0, 0.0]);

        // K4: spectrum {0, 4, 4, 4}
        let mut rows = vec![vec![-1.0; 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 3.0;
        }
        let k4 = SymmetricMatrix::from_rows(&rows).unwrap();
        let r = charpoly_eigenvalues(&k4, 1e-13).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r[0].abs() < 1e-12);
        assert!(r[1..].iter().all(|x| (x - 4.0).abs() < 1e-12), "{r:?}");
    }

    #[test]
    fn square_free_split() {
        // (x − 1)² (x − 2) = x³ − 4x² + 5x − 2
        let f = Poly::from_ints(&ints(&[-2, 5, -4, 1]));
        let parts = square_free_factors(&f);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].1, 1);
        assert_eq!(parts[0].0, Poly::from_ints(&ints(&[-2, 1])));
        assert_eq!(parts[1].1, 2);
        assert_eq!(parts[1].0, Poly::from_ints(&ints(&[-1, 1])));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            charpoly_eigenvalues(&SymmetricMatrix::identity(7), 1e-12),
            Err(Error::OrderTooLarge { order: 7, max: 6 })
        ));
        let m = sym(&[&[0.5]]);
        assert!(matches!(
            charpoly_eigenvalues(&m, 1e-12),
            Err(Error::NonIntegerEntry { .. })
        ));
        // eigenvalue 100 lies outside [−1, 4]
        let m = sym(&[&[100.0]]);
        assert!(matches!(
            charpoly_eigenvalues(&m, 1e-12),
            Err(Error::BracketFailure { .. })
        ));
    }
}
