use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{FromPrimitive, One, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::InvariantError;

/// Exact ring coefficients usable in [`Laurent`].
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + FromStr
    + Eq
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + Send
    + Sync
    + 'static
where
    for<'a> &'a Self: Mul<&'a Self, Output = Self>,
{
}

impl<T> Coefficient for T
where
    T: Clone
        + Debug
        + Display
        + FromStr
        + Eq
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = T>
        + for<'a> AddAssign<&'a T>
        + Send
        + Sync
        + 'static,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
}

/// Sparse Laurent polynomial in `A`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    /// `c · A^e`.
    pub fn monomial(c: C, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, &c);
        p
    }

    /// `A^e`.
    pub fn power(e: i64) -> Self {
        Self::monomial(C::one(), e)
    }

    /// The loop value `δ = -A^2 - A^-2`.
    pub fn delta() -> Self {
        let m = -C::one();
        let mut p = Self::monomial(m.clone(), 2);
        p.add_term(-2, &m);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: &C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(C::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, e: i64) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, c * s)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// In-place `self += other · A^shift`.
    pub fn add_shifted(&mut self, other: &Self, shift: i64) {
        for (&e, c) in &other.terms {
            self.add_term(e + shift, c);
        }
    }

    /// Value at `A = 1`.
    pub fn eval_one(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Value at `A = -1`.
    pub fn eval_minus_one(&self) -> C {
        let mut acc = C::zero();
        for (&e, c) in &self.terms {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc += &-c.clone();
            }
        }
        acc
    }

    /// Substitute `A -> A^-1`.
    pub fn mirror(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Convert coefficients to another ring.
    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Laurent<D>
    where
        for<'a> &'a D: Mul<&'a D, Output = D>,
    {
        Laurent::<D>::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }

    /// Sorted `(exponent, decimal coefficient)` pairs: the serialised form.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.terms.iter().map(|(&e, c)| (e, c.to_string())).collect()
    }

    pub fn from_pairs(pairs: &[(i64, String)]) -> Result<Self, InvariantError> {
        let mut p = Self::zero();
        let mut last = None;
        for (e, c) in pairs {
            if last.is_some_and(|l| l >= *e) {
                return Err(InvariantError::Parse("exponents must be strictly increasing".into()));
            }
            last = Some(*e);
            let c: C = c.parse().map_err(|_| InvariantError::Parse(format!("bad coefficient {c:?}")))?;
            if c.is_zero() {
                return Err(InvariantError::Parse("zero coefficients are not stored".into()));
            }
            p.add_term(*e, &c);
        }
        Ok(p)
    }

    /// Compact JSON `[[e,"c"],...]`.
    pub fn to_json(&self) -> String {
        let mut s = String::from("[");
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!("[{e},\"{c}\"]"));
        }
        s.push(']');
        s
    }

    /// Human-readable form in `t = A^-4`, with fractional exponents where
    /// needed.
    pub fn to_t_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&e, c) in self.terms.iter().rev() {
            // A^e = t^(-e/4)
            let (num, den) = reduce(-e, 4);
            let var = match (num, den) {
                (0, _) => String::new(),
                (1, 1) => "t".into(),
                (k, 1) => format!("t^{k}"),
                (k, d) => format!("t^({k}/{d})"),
            };
            parts.push(term_string(c, &var));
        }
        join_terms(parts)
    }
}

fn reduce(a: i64, b: i64) -> (i64, i64) {
    let g = gcd(a.abs(), b);
    (a / g, b / g)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

fn term_string<C: Display>(c: &C, var: &str) -> (bool, String) {
    let s = c.to_string();
    let (neg, mag) = match s.strip_prefix('-') {
        Some(m) => (true, m.to_string()),
        None => (false, s),
    };
    let body = if var.is_empty() {
        mag
    } else if mag == "1" {
        var.to_string()
    } else {
        format!("{mag}*{var}")
    };
    (neg, body)
}

fn join_terms(parts: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

impl<C: Coefficient> Display for Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts = self
            .terms
            .iter()
            .rev()
            .map(|(&e, c)| {
                let var = match e {
                    0 => String::new(),
                    1 => "A".into(),
                    k => format!("A^{k}"),
                };
                term_string(c, &var)
            })
            .collect();
        f.write_str(&join_terms(parts))
    }
}

impl<C: Coefficient> Debug for Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<C: Coefficient> Add for &Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    type Output = Laurent<C>;

    fn add(self, rhs: Self) -> Laurent<C> {
        let mut out = self.clone();
        out.add_shifted(rhs, 0);
        out
    }
}

impl<C: Coefficient> Add for Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    type Output = Laurent<C>;

    fn add(mut self, rhs: Self) -> Laurent<C> {
        self.add_shifted(&rhs, 0);
        self
    }
}

impl<C: Coefficient> Neg for &Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    type Output = Laurent<C>;

    fn neg(self) -> Laurent<C> {
        Laurent { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

impl<C: Coefficient> Neg for Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    type Output = Laurent<C>;

    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Coefficient> Sub for &Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    type Output = Laurent<C>;

    fn sub(self, rhs: Self) -> Laurent<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Sub for Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    type Output = Laurent<C>;

    fn sub(self, rhs: Self) -> Laurent<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for &Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    type Output = Laurent<C>;

    fn mul(self, rhs: Self) -> Laurent<C> {
        let mut out = Laurent::<C>::zero();
        for (&e, c) in &self.terms {
            for (&f, d) in &rhs.terms {
                out.add_term(e + f, &(c * d));
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    type Output = Laurent<C>;

    fn mul(self, rhs: Self) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Serialize for Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V<C>(std::marker::PhantomData<C>);
        impl<'de, C: Coefficient> Visitor<'de> for V<C>
        where
            for<'a> &'a C: Mul<&'a C, Output = C>,
        {
            type Value = Laurent<C>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of [exponent, \"coefficient\"] pairs")
            }

            fn visit_seq<S: SeqAccess<'de>>(self, mut seq: S) -> Result<Laurent<C>, S::Error> {
                let mut pairs = Vec::new();
                while let Some(p) = seq.next_element::<(i64, String)>()? {
                    pairs.push(p);
                }
                Laurent::<C>::from_pairs(&pairs).map_err(de::Error::custom)
            }
        }
        d.deserialize_seq(V::<C>(std::marker::PhantomData))
    }
}

#[cfg(test)]
mod tests {
    use crate::Poly;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn basics() {
        let d = Poly::delta();
        assert_eq!(d, p(&[(2, -1), (-2, -1)]));
        assert_eq!(d.eval_one(), BigInt::from(-2));
        assert_eq!(d.eval_minus_one(), BigInt::from(-2));
        assert!((&d - &d).is_zero());
        assert_eq!(p(&[(1, 1)]).shift(-3), p(&[(-2, 1)]));
        assert_eq!(d.pow(2), p(&[(4, 1), (0, 2), (-4, 1)]));
        assert_eq!(Poly::one().pow(0), Poly::one());
        assert_eq!(p(&[(3, 2), (-1, -1)]).mirror(), p(&[(-3, 2), (1, -1)]));
    }

    #[test]
    fn zero_terms_vanish() {
        let mut a = p(&[(1, 3)]);
        a.add_term(1, &BigInt::from(-3));
        assert!(a.is_zero());
        assert_eq!(a.terms().count(), 0);
        assert_eq!(p(&[(1, 0)]), Poly::zero());
    }

    #[test]
    fn display_forms() {
        let v = p(&[(-2, -1), (-10, -1)]);
        assert_eq!(v.to_string(), "-A^-2 - A^-10");
        assert_eq!(v.to_t_string(), "-t^(1/2) - t^(5/2)");
        assert_eq!(p(&[(-4, 1), (-12, 1), (-16, -1)]).to_t_string(), "t + t^3 - t^4");
        assert_eq!(p(&[(0, 3), (1, -2)]).to_string(), "-2*A + 3");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn serialisation_is_sorted_pairs() {
        let v = p(&[(4, -7), (-3, 12)]);
        assert_eq!(v.to_json(), "[[-3,\"12\"],[4,\"-7\"]]");
        assert_eq!(serde_json::to_string(&v).unwrap(), v.to_json());
        let back: Poly = serde_json::from_str(&v.to_json()).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<Poly>("[[1,\"2\"],[0,\"1\"]]").is_err());
        assert!(serde_json::from_str::<Poly>("[[1,\"0\"]]").is_err());
        assert!(serde_json::from_str::<Poly>("[[1,\"x\"]]").is_err());
    }

    #[test]
    fn huge_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let a = Poly::monomial(big.clone(), 5);
        let sq = &a * &a;
        assert_eq!(sq.coefficient(10), &big * &big);
        let back: Poly = serde_json::from_str(&sq.to_json()).unwrap();
        assert_eq!(back, sq);
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-12i64..12, -50i64..50), 0..8).prop_map(|t| p(&t))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &Poly::one(), a.clone());
            prop_assert!((&a + &Poly::zero()) == a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
            prop_assert_eq!((&a + &b).eval_one(), a.eval_one() + b.eval_one());
            prop_assert_eq!((&a * &b).eval_minus_one(), a.eval_minus_one() * b.eval_minus_one());
        }

        #[test]
        fn small_and_big_agree(a in arb_poly(), b in arb_poly()) {
            let sa = a.map::<i128>(|c| i128::try_from(c.clone()).unwrap());
            let sb = b.map::<i128>(|c| i128::try_from(c.clone()).unwrap());
            let prod = (&sa * &sb).map::<BigInt>(|&c| BigInt::from(c));
            prop_assert_eq!(prod, &a * &b);
        }
    }
}
