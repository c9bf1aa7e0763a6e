//! Exact arithmetic for the coefficient rings bracket values live in:
//! integers mod n, Gaussian integers, and Laurent polynomials in one
//! variable with Gaussian-integer coefficients.
//!
//! All values are canonically reduced: Zn residues lie in `[0, n)`,
//! Laurent polynomials keep no zero coefficients. No floating point.

use std::collections::BTreeMap;
use std::fmt;

/// A Gaussian integer `re + im*i` with checked 64-bit components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub fn new(re: i64, im: i64) -> Self {
        GaussInt { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn checked_add(self, other: GaussInt) -> Option<GaussInt> {
        Some(GaussInt {
            re: self.re.checked_add(other.re)?,
            im: self.im.checked_add(other.im)?,
        })
    }

    fn checked_neg(self) -> Option<GaussInt> {
        Some(GaussInt {
            re: self.re.checked_neg()?,
            im: self.im.checked_neg()?,
        })
    }

    fn checked_mul(self, other: GaussInt) -> Option<GaussInt> {
        // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
        let ac = self.re.checked_mul(other.re)?;
        let bd = self.im.checked_mul(other.im)?;
        let ad = self.re.checked_mul(other.im)?;
        let bc = self.im.checked_mul(other.re)?;
        Some(GaussInt {
            re: ac.checked_sub(bd)?,
            im: ad.checked_add(bc)?,
        })
    }

    /// The four Gaussian units are `1, -1, i, -i`.
    pub fn is_unit(&self) -> bool {
        (self.re.abs() == 1 && self.im == 0) || (self.re == 0 && self.im.abs() == 1)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0 {
            return write!(f, "{}", self.re);
        }
        let im_part = |im: i64| -> String {
            match im {
                1 => "i".to_string(),
                -1 => "-i".to_string(),
                v => format!("{}i", v),
            }
        };
        if self.re == 0 {
            return write!(f, "{}", im_part(self.im));
        }
        if self.im > 0 {
            write!(f, "{}+{}", self.re, im_part(self.im))
        } else {
            write!(f, "{}{}", self.re, im_part(self.im))
        }
    }
}

/// Which coefficient ring a computation runs in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    /// Integers modulo `n`, `n >= 2`.
    Zn { modulus: u64 },
    /// Gaussian integers Z[i].
    Gaussian,
    /// Laurent polynomials in one variable over Z[i].
    LaurentGaussian { var: String },
}

impl RingSpec {
    pub fn zn(modulus: u64) -> RingSpec {
        assert!(modulus >= 2, "Zn modulus must be >= 2");
        RingSpec::Zn { modulus }
    }

    pub fn gaussian() -> RingSpec {
        RingSpec::Gaussian
    }

    pub fn laurent() -> RingSpec {
        RingSpec::LaurentGaussian { var: "q".to_string() }
    }

    pub fn laurent_var(var: &str) -> RingSpec {
        RingSpec::LaurentGaussian { var: var.to_string() }
    }

    /// Parse a ring header such as `Z5`, `GAUSS` or `LAURENT q`.
    pub fn parse_spec(text: &str) -> Result<RingSpec, RingError> {
        let t = text.trim();
        if let Some(rest) = t.strip_prefix('Z') {
            let modulus: u64 = rest
                .trim()
                .parse()
                .map_err(|_| RingError::BadSpec(t.to_string()))?;
            if modulus < 2 {
                return Err(RingError::BadSpec(t.to_string()));
            }
            return Ok(RingSpec::Zn { modulus });
        }
        if t == "GAUSS" {
            return Ok(RingSpec::Gaussian);
        }
        if let Some(rest) = t.strip_prefix("LAURENT") {
            let var = rest.trim();
            if var.is_empty() {
                return Ok(RingSpec::laurent());
            }
            if var.len() == 1 && var.chars().all(|c| c.is_ascii_lowercase()) {
                return Ok(RingSpec::laurent_var(var));
            }
            return Err(RingError::BadSpec(t.to_string()));
        }
        Err(RingError::BadSpec(t.to_string()))
    }

    fn var(&self) -> &str {
        match self {
            RingSpec::LaurentGaussian { var } => var,
            _ => "q",
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn { modulus } => write!(f, "Z{}", modulus),
            RingSpec::Gaussian => write!(f, "GAUSS"),
            RingSpec::LaurentGaussian { var } => write!(f, "LAURENT {}", var),
        }
    }
}

/// A ring element. Invariants: Zn residues reduced into `[0, n)`;
/// Laurent maps carry no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RElem {
    Zn(u64),
    Gauss(GaussInt),
    Laurent(BTreeMap<i64, GaussInt>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingError {
    /// Operands belong to different rings (or the wrong ring).
    Incompatible { expected: String, got: String },
    /// The element is not a unit so it cannot be inverted.
    NotAUnit(String),
    /// Checked 64-bit arithmetic overflowed.
    Overflow,
    /// Syntax error at a byte offset of the input.
    Parse { pos: usize, msg: String },
    /// Malformed ring spec string.
    BadSpec(String),
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::Incompatible { expected, got } => {
                write!(f, "incompatible ring element: expected {}, got {}", expected, got)
            }
            RingError::NotAUnit(s) => write!(f, "{} is not a unit", s),
            RingError::Overflow => write!(f, "integer overflow in exact arithmetic"),
            RingError::Parse { pos, msg } => write!(f, "syntax error at offset {}: {}", pos, msg),
            RingError::BadSpec(s) => write!(f, "malformed ring spec {:?}", s),
        }
    }
}

impl std::error::Error for RingError {}

fn laurent_normalize(map: BTreeMap<i64, GaussInt>) -> BTreeMap<i64, GaussInt> {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl RingSpec {
    pub fn zero(&self) -> RElem {
        match self {
            RingSpec::Zn { .. } => RElem::Zn(0),
            RingSpec::Gaussian => RElem::Gauss(GaussInt::ZERO),
            RingSpec::LaurentGaussian { .. } => RElem::Laurent(BTreeMap::new()),
        }
    }

    pub fn one(&self) -> RElem {
        match self {
            RingSpec::Zn { .. } => RElem::Zn(1),
            RingSpec::Gaussian => RElem::Gauss(GaussInt::ONE),
            RingSpec::LaurentGaussian { .. } => {
                RElem::Laurent([(0, GaussInt::ONE)].into_iter().collect())
            }
        }
    }

    /// Integer constant embedded in the ring.
    pub fn from_int(&self, k: i64) -> RElem {
        match self {
            RingSpec::Zn { modulus } => RElem::Zn(k.rem_euclid(*modulus as i64) as u64),
            RingSpec::Gaussian => RElem::Gauss(GaussInt::new(k, 0)),
            RingSpec::LaurentGaussian { .. } => RElem::Laurent(laurent_normalize(
                [(0, GaussInt::new(k, 0))].into_iter().collect(),
            )),
        }
    }

    /// Gaussian constant embedded in the ring (Gaussian and Laurent kinds).
    pub fn from_gauss(&self, g: GaussInt) -> Result<RElem, RingError> {
        match self {
            RingSpec::Zn { .. } => Err(RingError::Incompatible {
                expected: self.to_string(),
                got: g.to_string(),
            }),
            RingSpec::Gaussian => Ok(RElem::Gauss(g)),
            RingSpec::LaurentGaussian { .. } => Ok(RElem::Laurent(laurent_normalize(
                [(0, g)].into_iter().collect(),
            ))),
        }
    }

    /// Monomial `c * var^k` in the Laurent ring.
    pub fn monomial(&self, c: GaussInt, k: i64) -> Result<RElem, RingError> {
        match self {
            RingSpec::LaurentGaussian { .. } => Ok(RElem::Laurent(laurent_normalize(
                [(k, c)].into_iter().collect(),
            ))),
            _ => Err(RingError::Incompatible {
                expected: "LAURENT".to_string(),
                got: self.to_string(),
            }),
        }
    }

    fn check(&self, a: &RElem) -> Result<(), RingError> {
        let ok = matches!(
            (self, a),
            (RingSpec::Zn { .. }, RElem::Zn(_))
                | (RingSpec::Gaussian, RElem::Gauss(_))
                | (RingSpec::LaurentGaussian { .. }, RElem::Laurent(_))
        );
        if let (RingSpec::Zn { modulus }, RElem::Zn(v)) = (self, a) {
            debug_assert!(v < modulus, "unreduced Zn residue");
        }
        if ok {
            Ok(())
        } else {
            Err(RingError::Incompatible {
                expected: self.to_string(),
                got: format!("{:?}", a),
            })
        }
    }

    pub fn add(&self, a: &RElem, b: &RElem) -> Result<RElem, RingError> {
        self.check(a)?;
        self.check(b)?;
        match (self, a, b) {
            (RingSpec::Zn { modulus }, RElem::Zn(x), RElem::Zn(y)) => {
                Ok(RElem::Zn((x + y) % modulus))
            }
            (RingSpec::Gaussian, RElem::Gauss(x), RElem::Gauss(y)) => {
                Ok(RElem::Gauss(x.checked_add(*y).ok_or(RingError::Overflow)?))
            }
            (RingSpec::LaurentGaussian { .. }, RElem::Laurent(x), RElem::Laurent(y)) => {
                let mut out = x.clone();
                for (e, c) in y {
                    let cur = out.entry(*e).or_insert(GaussInt::ZERO);
                    *cur = cur.checked_add(*c).ok_or(RingError::Overflow)?;
                }
                Ok(RElem::Laurent(laurent_normalize(out)))
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self, a: &RElem) -> Result<RElem, RingError> {
        self.check(a)?;
        match (self, a) {
            (RingSpec::Zn { modulus }, RElem::Zn(x)) => Ok(RElem::Zn((modulus - x) % modulus)),
            (RingSpec::Gaussian, RElem::Gauss(x)) => {
                Ok(RElem::Gauss(x.checked_neg().ok_or(RingError::Overflow)?))
            }
            (RingSpec::LaurentGaussian { .. }, RElem::Laurent(x)) => {
                let mut out = BTreeMap::new();
                for (e, c) in x {
                    out.insert(*e, c.checked_neg().ok_or(RingError::Overflow)?);
                }
                Ok(RElem::Laurent(out))
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, a: &RElem, b: &RElem) -> Result<RElem, RingError> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    pub fn mul(&self, a: &RElem, b: &RElem) -> Result<RElem, RingError> {
        self.check(a)?;
        self.check(b)?;
        match (self, a, b) {
            (RingSpec::Zn { modulus }, RElem::Zn(x), RElem::Zn(y)) => {
                Ok(RElem::Zn(x.checked_mul(*y).ok_or(RingError::Overflow)? % modulus))
            }
            (RingSpec::Gaussian, RElem::Gauss(x), RElem::Gauss(y)) => {
                Ok(RElem::Gauss(x.checked_mul(*y).ok_or(RingError::Overflow)?))
            }
            (RingSpec::LaurentGaussian { .. }, RElem::Laurent(x), RElem::Laurent(y)) => {
                let mut out: BTreeMap<i64, GaussInt> = BTreeMap::new();
                for (e1, c1) in x {
                    for (e2, c2) in y {
                        let e = e1.checked_add(*e2).ok_or(RingError::Overflow)?;
                        let c = c1.checked_mul(*c2).ok_or(RingError::Overflow)?;
                        let cur = out.entry(e).or_insert(GaussInt::ZERO);
                        *cur = cur.checked_add(c).ok_or(RingError::Overflow)?;
                    }
                }
                Ok(RElem::Laurent(laurent_normalize(out)))
            }
            _ => unreachable!(),
        }
    }

    pub fn is_zero(&self, a: &RElem) -> bool {
        match a {
            RElem::Zn(x) => *x == 0,
            RElem::Gauss(x) => x.is_zero(),
            RElem::Laurent(m) => m.is_empty(),
        }
    }

    pub fn is_unit(&self, a: &RElem) -> Result<bool, RingError> {
        self.check(a)?;
        Ok(match (self, a) {
            (RingSpec::Zn { modulus }, RElem::Zn(x)) => gcd(*x, *modulus) == 1,
            (RingSpec::Gaussian, RElem::Gauss(x)) => x.is_unit(),
            (RingSpec::LaurentGaussian { .. }, RElem::Laurent(m)) => {
                m.len() == 1 && m.values().next().unwrap().is_unit()
            }
            _ => unreachable!(),
        })
    }

    /// Multiplicative inverse of a unit; `invert(invert(a)) = a`.
    pub fn invert(&self, a: &RElem) -> Result<RElem, RingError> {
        self.check(a)?;
        match (self, a) {
            (RingSpec::Zn { modulus }, RElem::Zn(x)) => {
                let (g, inv) = ext_gcd(*x as i64, *modulus as i64);
                if g != 1 {
                    return Err(RingError::NotAUnit(self.format(a)));
                }
                Ok(RElem::Zn(inv.rem_euclid(*modulus as i64) as u64))
            }
            (RingSpec::Gaussian, RElem::Gauss(x)) => {
                if !x.is_unit() {
                    return Err(RingError::NotAUnit(self.format(a)));
                }
                // 1 and -1 are self-inverse; i and -i swap.
                Ok(RElem::Gauss(GaussInt::new(x.re, -x.im)))
            }
            (RingSpec::LaurentGaussian { .. }, RElem::Laurent(m)) => {
                if m.len() != 1 {
                    return Err(RingError::NotAUnit(self.format(a)));
                }
                let (e, c) = m.iter().next().unwrap();
                if !c.is_unit() {
                    return Err(RingError::NotAUnit(self.format(a)));
                }
                let inv_c = GaussInt::new(c.re, -c.im);
                Ok(RElem::Laurent([(-e, inv_c)].into_iter().collect()))
            }
            _ => unreachable!(),
        }
    }

    /// `a^k`; negative `k` requires `a` to be a unit.
    pub fn pow(&self, a: &RElem, k: i64) -> Result<RElem, RingError> {
        let base = if k < 0 { self.invert(a)? } else { a.clone() };
        let mut result = self.one();
        for _ in 0..k.unsigned_abs() {
            result = self.mul(&result, &base)?;
        }
        Ok(result)
    }

    /// Total order used for canonical term printing: descending, zero last.
    pub fn canonical_cmp(&self, a: &RElem, b: &RElem) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (a, b) {
            (RElem::Zn(x), RElem::Zn(y)) => y.cmp(x),
            (RElem::Gauss(x), RElem::Gauss(y)) => (y.im, y.re).cmp(&(x.im, x.re)),
            (RElem::Laurent(x), RElem::Laurent(y)) => {
                let xv: Vec<_> = x.iter().rev().map(|(e, c)| (*e, c.im, c.re)).collect();
                let yv: Vec<_> = y.iter().rev().map(|(e, c)| (*e, c.im, c.re)).collect();
                match (xv.is_empty(), yv.is_empty()) {
                    (true, true) => Ordering::Equal,
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (false, false) => yv.cmp(&xv),
                }
            }
            _ => Ordering::Equal,
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Returns `(gcd, x)` with `a*x = gcd (mod m)`.
fn ext_gcd(a: i64, m: i64) -> (i64, i64) {
    let (mut old_r, mut r) = (a, m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r.abs(), if old_r < 0 { -old_s } else { old_s })
}

// ---------------------------------------------------------------------------
// Canonical formatting
// ---------------------------------------------------------------------------

impl RingSpec {
    /// Canonical string form; `parse(format(a)) == a`.
    pub fn format(&self, a: &RElem) -> String {
        match a {
            RElem::Zn(x) => x.to_string(),
            RElem::Gauss(g) => g.to_string(),
            RElem::Laurent(m) => {
                if m.is_empty() {
                    return "0".to_string();
                }
                let var = self.var();
                let mut out = String::new();
                for (idx, (e, c)) in m.iter().rev().enumerate() {
                    // Extract a display sign so terms join with bare +/-.
                    let neg = c.re < 0 || (c.re == 0 && c.im < 0);
                    let mag = if neg {
                        GaussInt::new(-c.re, -c.im)
                    } else {
                        *c
                    };
                    if idx == 0 {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push(if neg { '-' } else { '+' });
                    }
                    out.push_str(&laurent_term(&mag, *e, var));
                }
                out
            }
        }
    }
}

/// One Laurent term with nonnegative-leading coefficient `c`.
fn laurent_term(c: &GaussInt, e: i64, var: &str) -> String {
    let coeff_str = c.to_string();
    let composite = coeff_str.contains('+') || coeff_str[1..].contains('-');
    if e == 0 {
        return if composite {
            format!("({})", coeff_str)
        } else {
            coeff_str
        };
    }
    let coeff_part = if composite {
        format!("({})", coeff_str)
    } else if *c == GaussInt::ONE {
        String::new()
    } else if *c == GaussInt::I {
        "i".to_string()
    } else {
        coeff_str
    };
    let var_part = if e == 1 {
        var.to_string()
    } else {
        format!("{}^{}", var, e)
    };
    format!("{}{}", coeff_part, var_part)
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Cursor<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, bytes: text.as_bytes(), pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> RingError {
        RingError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn integer(&mut self) -> Result<i64, RingError> {
        let start = self.pos;
        let mut sign = 1i64;
        if self.eat(b'-') {
            sign = -1;
        } else {
            self.eat(b'+');
        }
        let digits_start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.err("expected integer"));
        }
        self.text[digits_start..self.pos]
            .parse::<i64>()
            .map(|v| sign * v)
            .map_err(|_| self.err("integer out of range"))
    }
}

impl RingSpec {
    /// Parse an element from its text form (see the element grammar).
    pub fn parse(&self, text: &str) -> Result<RElem, RingError> {
        let trimmed = text.trim();
        // Accept a unicode minus sign, which shows up in hand-typed input.
        let cleaned = trimmed.replace('\u{2212}', "-");
        let mut cur = Cursor::new(&cleaned);
        let elem = match self {
            RingSpec::Zn { modulus } => {
                let v = cur.integer()?;
                RElem::Zn(v.rem_euclid(*modulus as i64) as u64)
            }
            RingSpec::Gaussian => {
                let g = parse_gauss(&mut cur)?;
                if cur.peek() == Some(b'i') {
                    return Err(cur.err("value out of ring: i is not allowed here"));
                }
                RElem::Gauss(g)
            }
            RingSpec::LaurentGaussian { .. } => parse_laurent(&mut cur, self.var())?,
        };
        if cur.pos != cleaned.len() {
            return Err(cur.err("trailing input"));
        }
        Ok(elem)
    }
}

/// `a`, `bi`, `a+bi`, `a-bi`, with `i` alone meaning `1i`.
fn parse_gauss(cur: &mut Cursor) -> Result<GaussInt, RingError> {
    let first = parse_gauss_part(cur)?;
    match cur.peek() {
        Some(b'+') | Some(b'-') => {
            let second = parse_gauss_part(cur)?;
            match (first, second) {
                ((re, false), (im, true)) => Ok(GaussInt::new(re, im)),
                _ => Err(cur.err("expected real part then imaginary part")),
            }
        }
        _ => Ok(match first {
            (im, true) => GaussInt::new(0, im),
            (re, false) => GaussInt::new(re, 0),
        }),
    }
}

/// One signed part; returns `(value, is_imaginary)`.
fn parse_gauss_part(cur: &mut Cursor) -> Result<(i64, bool), RingError> {
    let mut sign = 1i64;
    if cur.eat(b'-') {
        sign = -1;
    } else {
        cur.eat(b'+');
    }
    if cur.eat(b'i') {
        return Ok((sign, true));
    }
    let digits_start = cur.pos;
    while cur.peek().is_some_and(|b| b.is_ascii_digit()) {
        cur.pos += 1;
    }
    if cur.pos == digits_start {
        return Err(cur.err("expected digits or i"));
    }
    let v: i64 = cur.text[digits_start..cur.pos]
        .parse()
        .map_err(|_| cur.err("integer out of range"))?;
    if cur.eat(b'i') {
        Ok((sign * v, true))
    } else {
        Ok((sign * v, false))
    }
}

/// `+/-`-separated terms `C`, `C*q^k`, `Cq^k`, `q^k`, with parenthesized
/// composite coefficients.
fn parse_laurent(cur: &mut Cursor, var: &str) -> Result<RElem, RingError> {
    let vb = var.as_bytes()[0];
    let mut acc: BTreeMap<i64, GaussInt> = BTreeMap::new();
    let mut first = true;
    loop {
        let mut sign = 1i64;
        if first {
            if cur.eat(b'-') {
                sign = -1;
            } else {
                cur.eat(b'+');
            }
        } else {
            match cur.bump() {
                Some(b'+') => {}
                Some(b'-') => sign = -1,
                None => break,
                _ => return Err(cur.err("expected + or - between terms")),
            }
        }
        first = false;
        // Coefficient: parenthesized Gaussian, bare Gaussian part, or none.
        let mut coeff = GaussInt::ONE;
        let mut saw_coeff = false;
        if cur.eat(b'(') {
            coeff = parse_gauss(cur)?;
            if !cur.eat(b')') {
                return Err(cur.err("expected )"));
            }
            saw_coeff = true;
        } else if cur.peek().is_some_and(|b| b.is_ascii_digit()) || cur.peek() == Some(b'i') {
            let (v, imag) = parse_gauss_part(cur)?;
            coeff = if imag { GaussInt::new(0, v) } else { GaussInt::new(v, 0) };
            saw_coeff = true;
        }
        if sign < 0 {
            coeff = GaussInt::new(-coeff.re, -coeff.im);
        }
        cur.eat(b'*');
        let mut exp = 0i64;
        if cur.eat(vb) {
            exp = 1;
            if cur.eat(b'^') {
                exp = cur.integer()?;
            }
        } else if !saw_coeff {
            return Err(cur.err("expected term"));
        }
        let entry = acc.entry(exp).or_insert(GaussInt::ZERO);
        *entry = entry.checked_add(coeff).ok_or(RingError::Overflow)?;
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(RElem::Laurent(laurent_normalize(acc)))
}
