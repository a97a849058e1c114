//! Exact coefficient arithmetic in the Laurent ring Z[d, dp, dp^-1].
//!
//! `d` is the loop parameter and `dp` the open-string parameter. `dp` is a
//! unit of the ring (its exponent may be negative), `d` is not inverted.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number used when specializing the parameters.
pub type Rational = BigRational;

/// The integer value of a rational, when it is one.
pub fn rational_to_int(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Parse a rational written as `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator `{num}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator `{den}`")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}

/// Exponent pair of a monomial: `d^a * dp^b` with `a >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub d: u32,
    pub dp: i32,
}

/// A sparse element of Z[d, dp, dp^-1]. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Scalar {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Scalar::monomial(0, 0, BigInt::from(c))
    }

    /// The single monomial `c * d^a * dp^b`.
    pub fn monomial(a: u32, b: i32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial { d: a, dp: b }, c);
        }
        Scalar { terms }
    }

    pub fn delta() -> Self {
        Scalar::monomial(1, 0, BigInt::one())
    }

    pub fn delta_prime() -> Self {
        Scalar::monomial(0, 1, BigInt::one())
    }

    pub fn delta_prime_inv() -> Self {
        Scalar::monomial(0, -1, BigInt::one())
    }

    /// `d^k * dp^m`, the straightening factor for `k` loops and `m` strings.
    pub fn straightening(loops: u32, strings: u32) -> Self {
        Scalar::monomial(loops, strings as i32, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial { d: 0, dp: 0 })
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn insert(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact substitution d -> `delta`, dp -> `delta_prime`.
    ///
    /// Fails when `delta_prime` is zero and a negative dp exponent occurs.
    pub fn evaluate(&self, delta: &Rational, delta_prime: &Rational) -> Result<Rational, Error> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            if m.dp < 0 && delta_prime.is_zero() {
                return Err(Error::DeltaPrimeNotInvertible);
            }
            let mut t = BigRational::from(c.clone());
            if m.d > 0 {
                t *= delta.pow(m.d as i32);
            }
            if m.dp != 0 {
                t *= delta_prime.pow(m.dp);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute d = 1, keeping dp symbolic.
    pub fn set_delta_one(&self) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            out.insert(Monomial { d: 0, dp: m.dp }, c.clone());
        }
        out
    }

    /// Substitute dp = 0, keeping d symbolic. Requires no negative dp exponent.
    pub fn set_delta_prime_zero(&self) -> Result<Scalar, Error> {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            if m.dp < 0 {
                return Err(Error::DeltaPrimeNotInvertible);
            }
            if m.dp == 0 {
                out.insert(*m, c.clone());
            }
        }
        Ok(out)
    }

    /// Parse the textual form, e.g. `3*d^2*dp^-1 - 1`.
    pub fn parse(input: &str) -> Result<Scalar, Error> {
        let mut out = Scalar::zero();
        let s: Vec<char> = input.chars().collect();
        let mut i = 0;
        let n = s.len();
        let skip_ws = |i: &mut usize| {
            while *i < n && s[*i].is_whitespace() {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        if i == n {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut first = true;
        while i < n {
            skip_ws(&mut i);
            let mut sign = BigInt::one();
            if i < n && (s[i] == '+' || s[i] == '-') {
                if s[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if !first {
                return Err(Error::Parse(format!("expected + or - at offset {i}")));
            }
            first = false;
            skip_ws(&mut i);
            // one term: factors joined by '*'
            let mut coeff = sign;
            let mut da: u32 = 0;
            let mut db: i32 = 0;
            loop {
                skip_ws(&mut i);
                if i < n && s[i].is_ascii_digit() {
                    let start = i;
                    while i < n && s[i].is_ascii_digit() {
                        i += 1;
                    }
                    let num: BigInt = s[start..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| Error::Parse("bad integer".into()))?;
                    coeff *= num;
                } else if i < n && s[i] == 'd' {
                    let is_dp = i + 1 < n && s[i + 1] == 'p';
                    i += if is_dp { 2 } else { 1 };
                    let mut expn: i64 = 1;
                    skip_ws(&mut i);
                    if i < n && s[i] == '^' {
                        i += 1;
                        skip_ws(&mut i);
                        let mut esign = 1i64;
                        if i < n && s[i] == '-' {
                            esign = -1;
                            i += 1;
                        }
                        let start = i;
                        while i < n && s[i].is_ascii_digit() {
                            i += 1;
                        }
                        if start == i {
                            return Err(Error::Parse("missing exponent".into()));
                        }
                        expn = esign
                            * s[start..i]
                                .iter()
                                .collect::<String>()
                                .parse::<i64>()
                                .map_err(|_| Error::Parse("bad exponent".into()))?;
                    }
                    if is_dp {
                        db += expn as i32;
                    } else {
                        if expn < 0 {
                            return Err(Error::Parse("d may not carry a negative exponent".into()));
                        }
                        da += expn as u32;
                    }
                } else {
                    return Err(Error::Parse(format!("unexpected input at offset {i}")));
                }
                skip_ws(&mut i);
                if i < n && s[i] == '*' {
                    i += 1;
                    continue;
                }
                break;
            }
            out.insert(Monomial { d: da, dp: db }, coeff);
            skip_ws(&mut i);
        }
        Ok(out)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest monomial first
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (m.d == 0 && m.dp == 0) {
                parts.push(abs.to_string());
            }
            if m.d == 1 {
                parts.push("d".into());
            } else if m.d > 1 {
                parts.push(format!("d^{}", m.d));
            }
            if m.dp == 1 {
                parts.push("dp".into());
            } else if m.dp != 0 {
                parts.push(format!("dp^{}", m.dp));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(*m, c.clone());
        }
        out
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.insert(*m, c.clone());
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(*m, -c.clone());
        }
        out
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.insert(*m, -c.clone());
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            out.insert(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.insert(
                    Monomial {
                        d: m1.d + m2.d,
                        dp: m1.dp + m2.dp,
                    },
                    c1 * c2,
                );
            }
        }
        out
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        let prod = &*self * rhs;
        *self = prod;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> Scalar {
        Scalar::delta()
    }
    fn dp() -> Scalar {
        Scalar::delta_prime()
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&d() - &Scalar::one()) * &(&d() + &Scalar::one());
        let rhs = &d().pow(2) - &Scalar::one();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_prime_is_a_unit() {
        assert!((&dp() * &Scalar::delta_prime_inv()).is_one());
    }

    #[test]
    fn binomial_term_count() {
        // (d-1)^2 * dp^2 has three d-terms, all with dp^2
        let x = &(&d() - &Scalar::one()).pow(2) * &dp().pow(2);
        assert_eq!(x.num_terms(), 3);
        assert!(x.terms().all(|(m, _)| m.dp == 2));
    }

    #[test]
    fn evaluate_monomial() {
        // d^2 * dp^-1 at d=3, dp=1/2 gives 18
        let x = Scalar::monomial(2, -1, BigInt::one());
        let v = x
            .evaluate(&parse_rational("3").unwrap(), &parse_rational("1/2").unwrap())
            .unwrap();
        assert_eq!(v, parse_rational("18").unwrap());
    }

    #[test]
    fn evaluate_kills_delta_minus_one_at_one() {
        let x = &d() - &Scalar::one();
        for q in ["7/3", "0", "-2"] {
            let v = x
                .evaluate(&parse_rational("1").unwrap(), &parse_rational(q).unwrap())
                .unwrap();
            assert!(v.is_zero());
        }
    }

    #[test]
    fn evaluate_rejects_zero_delta_prime_on_negative_power() {
        let x = Scalar::delta_prime_inv();
        let err = x.evaluate(&parse_rational("5").unwrap(), &BigRational::zero());
        assert!(err.is_err());
    }

    #[test]
    fn ring_laws_on_random_triples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let random_scalar = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut x = Scalar::zero();
            for _ in 0..rng.gen_range(0..5) {
                let a = rng.gen_range(0..4u32);
                let b = rng.gen_range(-3..4i32);
                let c = rng.gen_range(-9..10i64);
                x += &Scalar::monomial(a, b, BigInt::from(c));
            }
            x
        };
        for _ in 0..200 {
            let x = random_scalar(&mut rng);
            let y = random_scalar(&mut rng);
            let z = random_scalar(&mut rng);
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            assert_eq!(&x * &y, &y * &x);
            assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        }
    }

    #[test]
    fn evaluate_is_a_ring_homomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let delta = parse_rational("13/7").unwrap();
        let dpv = parse_rational("5/3").unwrap();
        for _ in 0..100 {
            let mut x = Scalar::zero();
            let mut y = Scalar::zero();
            for _ in 0..3 {
                x += &Scalar::monomial(
                    rng.gen_range(0..3u32),
                    rng.gen_range(-2..3i32),
                    BigInt::from(rng.gen_range(-5..6i64)),
                );
                y += &Scalar::monomial(
                    rng.gen_range(0..3u32),
                    rng.gen_range(-2..3i32),
                    BigInt::from(rng.gen_range(-5..6i64)),
                );
            }
            let ev = |s: &Scalar| s.evaluate(&delta, &dpv).unwrap();
            assert_eq!(ev(&(&x * &y)), ev(&x) * ev(&y));
            assert_eq!(ev(&(&x + &y)), ev(&x) + ev(&y));
        }
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3*d^2*dp^-1 - 1", "dp", "-d + 2", "5", "d^3*dp^2 + dp^-2"] {
            let x = Scalar::parse(s).unwrap();
            let printed = x.to_string();
            let y = Scalar::parse(&printed).unwrap();
            assert_eq!(x, y, "round trip failed for `{s}` -> `{printed}`");
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Scalar::parse("").is_err());
        assert!(Scalar::parse("q + 1").is_err());
        assert!(Scalar::parse("d^").is_err());
    }
}
