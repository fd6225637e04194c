use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::Error;

/// Exact rational stored in lowest terms with a positive denominator.
///
/// Values that fit in `i64` stay in the `Small` form; the `Big` form is used
/// only when they do not, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    pub fn from_i128(n: i128, d: i128) -> Rational {
        assert!(d != 0, "zero denominator");
        let g = n.gcd(&d);
        let (mut n, mut d) = if g == 0 { (0, 1) } else { (n / g, d / g) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Rational::Small(a, b),
            _ => Rational::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Rational {
        if let (Some(a), Some(b)) = (r.numer().to_i64(), r.denom().to_i64()) {
            Rational::Small(a, b)
        } else {
            Rational::Big(Box::new(r))
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(a, b) => BigRational::new_raw(BigInt::from(*a), BigInt::from(*b)),
            Rational::Big(r) => (**r).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn numer_denom(&self) -> (BigInt, BigInt) {
        match self {
            Rational::Small(a, b) => (BigInt::from(*a), BigInt::from(*b)),
            Rational::Big(r) => (r.numer().clone(), r.denom().clone()),
        }
    }

    fn add(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rational::from_i128(a + c, b)
                } else {
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.to_big() + o.to_big()),
        }
    }

    fn mul(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * o.to_big()),
        }
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small(a, b) if *a != i64::MIN => Rational::Small(-a, *b),
            _ => Rational::from_big(-self.to_big()),
        }
    }

    fn inv(&self) -> Rational {
        match self {
            Rational::Small(a, b) => Rational::from_i128(*b as i128, *a as i128),
            Rational::Big(r) => Rational::from_big(r.recip()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(a, 1) => write!(f, "{a}"),
            Rational::Small(a, b) => write!(f, "{a}/{b}"),
            Rational::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Rational::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, Error> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::Input(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p as u32))
    }

    /// Parses `Q`, `F 32003` or `F32003`.
    pub fn parse(text: &str) -> Result<Field, Error> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = t.strip_prefix('F') {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad field `{t}`")))?;
            return Field::prime(p);
        }
        Err(Error::Input(format!("bad field `{t}` (expected `Q` or `F <p>`)")))
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::Small(n, 1)),
            Field::Prime(p) => Scalar::Fp(n.rem_euclid(p as i64) as u32, p),
        }
    }

    /// `n / d`; fails in characteristic p when p divides `d`.
    pub fn ratio(self, n: &BigInt, d: &BigInt) -> Result<Scalar, Error> {
        if d.is_zero() {
            return Err(Error::Input("zero denominator".into()));
        }
        match self {
            Field::Rational => Ok(Scalar::Q(Rational::from_big(BigRational::new(n.clone(), d.clone())))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let reduce = |x: &BigInt| x.mod_floor(&pb).to_u32().unwrap();
                let dd = reduce(d);
                if dd == 0 {
                    return Err(Error::Input(format!("denominator {d} vanishes modulo {p}")));
                }
                let nn = Scalar::Fp(reduce(n), p);
                Ok(nn.mul(&Scalar::Fp(dd, p).inv()))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F {p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of Q or of F_p. Prime-field residues carry their modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp(u32, u32),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => *r == Rational::Small(1, 1),
            Scalar::Fp(v, _) => *v == 1,
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => {
                Scalar::Fp(((*a as u64 + *b as u64) % *p as u64) as u32, *p)
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => {
                Scalar::Fp(((*a as u64 * *b as u64) % *p as u64) as u32, *p)
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp(0, p) => Scalar::Fp(0, *p),
            Scalar::Fp(a, p) => Scalar::Fp(p - a, *p),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.inv()),
            Scalar::Fp(a, p) => {
                let (mut r, mut base, mut e) = (1u64, *a as u64, *p as u64 - 2);
                let m = *p as u64;
                while e > 0 {
                    if e & 1 == 1 {
                        r = r * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                Scalar::Fp(r as u32, *p)
            }
        }
    }

    pub fn div(&self, o: &Scalar) -> Scalar {
        self.mul(&o.inv())
    }

    /// `(-1)^e · self`.
    pub fn signed(&self, e: usize) -> Scalar {
        if e.is_multiple_of(2) {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// Integer representative when the value is an integer (residues map to `[0, p)`).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(Rational::Small(a, 1)) => Some(*a),
            Scalar::Q(_) => None,
            Scalar::Fp(a, _) => Some(*a as i64),
        }
    }

    /// Sign used when printing: residues above p/2 print as negatives.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(Rational::Small(a, _)) => *a < 0,
            Scalar::Q(Rational::Big(r)) => r.is_negative(),
            Scalar::Fp(a, p) => *a > p / 2,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp(a, p) if *a > p / 2 => write!(f, "-{}", p - a),
            Scalar::Fp(a, _) => write!(f, "{a}"),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_big().cmp(&other.to_big())
    }
}
