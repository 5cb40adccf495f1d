//! Truncated formal power series over the integers, and the generating
//! functions S(q), S_t(q), U(q), W(q) of the counting sequences.
//!
//! All series here are computed from the closed product-sum forms:
//!   S(q)   = Σ_{i≥1} q^{2^i−1} Π_{j=0}^{i−1} 1/(1−q^{2^j})
//!   S_t(q) = Σ_{i≥1} q^{2^i−1+(t−1)2^{i−1}} Π_{j=0}^{i−2} 1/(1−q^{2^j})
//!   U(q)   = 2(S_1(q) + S_2(q))
//! and W(q) is the even part of S_1(q)+S_2(q), reindexed by q² → q.
//! This route is independent of the recurrence-built tables, so the two
//! can be checked against each other.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// Polynomial truncated at a fixed degree: `coeffs[i]` is the coefficient
/// of q^i, for 0 ≤ i ≤ degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesCoeffs {
    coeffs: Vec<BigInt>,
}

impl SeriesCoeffs {
    pub fn zero(degree: usize) -> Self {
        SeriesCoeffs {
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    /// The monomial c·q^e, truncated.
    pub fn monomial(degree: usize, e: usize, c: i64) -> Self {
        let mut s = Self::zero(degree);
        if e <= degree {
            s.coeffs[e] = BigInt::from(c);
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies in place by 1/(1−q^m) (a prefix-sum with stride m).
    pub fn div_one_minus_qm(&mut self, m: usize) {
        assert!(m >= 1);
        for i in m..self.coeffs.len() {
            let prev = self.coeffs[i - m].clone();
            self.coeffs[i] += prev;
        }
    }

    /// Multiplies in place by (1−q^m).
    pub fn mul_one_minus_qm(&mut self, m: usize) {
        assert!(m >= 1);
        for i in (m..self.coeffs.len()).rev() {
            let prev = self.coeffs[i - m].clone();
            self.coeffs[i] -= prev;
        }
    }

    /// The substitution q → q², truncated to the same degree.
    pub fn stretch2(&self) -> SeriesCoeffs {
        let mut out = Self::zero(self.degree());
        for (i, c) in self.coeffs.iter().enumerate() {
            if 2 * i > self.degree() {
                break;
            }
            out.coeffs[2 * i] = c.clone();
        }
        out
    }

    /// Coefficients of even degree, reindexed: result[i] = self[2i].
    pub fn even_part_compressed(&self) -> SeriesCoeffs {
        let coeffs = self.coeffs.iter().step_by(2).cloned().collect();
        SeriesCoeffs { coeffs }
    }

    pub fn scale(&self, c: i64) -> SeriesCoeffs {
        let c = BigInt::from(c);
        SeriesCoeffs {
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }
}

impl Add for &SeriesCoeffs {
    type Output = SeriesCoeffs;
    fn add(self, rhs: &SeriesCoeffs) -> SeriesCoeffs {
        assert_eq!(self.degree(), rhs.degree());
        SeriesCoeffs {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &SeriesCoeffs {
    type Output = SeriesCoeffs;
    fn sub(self, rhs: &SeriesCoeffs) -> SeriesCoeffs {
        assert_eq!(self.degree(), rhs.degree());
        SeriesCoeffs {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &SeriesCoeffs {
    type Output = SeriesCoeffs;
    fn mul(self, rhs: &SeriesCoeffs) -> SeriesCoeffs {
        let degree = self.degree().min(rhs.degree());
        let mut out = SeriesCoeffs::zero(degree);
        for (i, a) in self.coeffs.iter().enumerate().take(degree + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(degree + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

/// S(q) = Σ s(n) q^n, truncated at `degree`.
pub fn series_s(degree: usize) -> SeriesCoeffs {
    let mut total = SeriesCoeffs::zero(degree);
    let mut i = 1u32;
    while (1usize << i) - 1 <= degree {
        let mut term = SeriesCoeffs::monomial(degree, (1 << i) - 1, 1);
        for j in 0..i {
            term.div_one_minus_qm(1 << j);
        }
        total = &total + &term;
        i += 1;
    }
    total
}

/// S_t(q) = Σ s_t(n) q^n, truncated at `degree`.
pub fn series_st(t: u64, degree: usize) -> SeriesCoeffs {
    let t = t as usize;
    let mut total = SeriesCoeffs::zero(degree);
    let mut i = 1u32;
    loop {
        let e = (1usize << i) - 1 + (t - 1) * (1usize << (i - 1));
        if e > degree {
            break;
        }
        let mut term = SeriesCoeffs::monomial(degree, e, 1);
        for j in 0..i.saturating_sub(1) {
            term.div_one_minus_qm(1 << j);
        }
        total = &total + &term;
        i += 1;
    }
    total
}

/// U(q) = 2(S_1(q) + S_2(q)).
pub fn series_u(degree: usize) -> SeriesCoeffs {
    let s1 = series_st(1, degree);
    let s2 = series_st(2, degree);
    (&s1 + &s2).scale(2)
}

/// W(q) = Σ w(n) q^n: the even part of S_1+S_2 with q² reindexed to q.
pub fn series_w(degree: usize) -> SeriesCoeffs {
    let s1 = series_st(1, 2 * degree);
    let s2 = series_st(2, 2 * degree);
    (&s1 + &s2).even_part_compressed()
}

/// Checks S(q)(1−q) = q(1 + S(q²)) coefficient-wise.
pub fn s_functional_equation_holds(s: &SeriesCoeffs) -> bool {
    let mut lhs = s.clone();
    lhs.mul_one_minus_qm(1);
    let inner = s.stretch2();
    let mut rhs = &SeriesCoeffs::monomial(s.degree(), 0, 1) + &inner;
    rhs = &SeriesCoeffs::monomial(s.degree(), 1, 1) * &rhs;
    lhs == rhs
}

/// Checks (S_t(q) − q^t)(1−q) = q·S_t(q²) coefficient-wise.
pub fn st_functional_equation_holds(t: u64, st: &SeriesCoeffs) -> bool {
    let mut lhs = st - &SeriesCoeffs::monomial(st.degree(), t as usize, 1);
    lhs.mul_one_minus_qm(1);
    let rhs = &SeriesCoeffs::monomial(st.degree(), 1, 1) * &st.stretch2();
    lhs == rhs
}

/// Checks W(q)(1−q) = q(1−q) + (1+q)W(q²) coefficient-wise
/// (the fraction-free form of W(q) = q + (1+q)/(1−q)·W(q²)).
pub fn w_functional_equation_holds(w: &SeriesCoeffs) -> bool {
    let mut lhs = w.clone();
    lhs.mul_one_minus_qm(1);
    let d = w.degree();
    let mut q_one_minus_q = SeriesCoeffs::monomial(d, 1, 1);
    q_one_minus_q.mul_one_minus_qm(1);
    let one_plus_q = &SeriesCoeffs::monomial(d, 0, 1) + &SeriesCoeffs::monomial(d, 1, 1);
    let rhs = &q_one_minus_q + &(&one_plus_q * &w.stretch2());
    lhs == rhs
}
