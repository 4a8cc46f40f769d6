//! Permutations of the signed symbol set {±1, ..., ±k} and cycle notation.

use std::fmt;

use thiserror::Error;

/// A bijection of {1, ..., k, -k, ..., -1}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    k: usize,
    /// Images indexed by [`symbol_index`].
    img: Vec<i32>,
}

/// Position of a symbol in the order 1, ..., k, -k, ..., -1.
#[inline]
pub fn symbol_index(k: usize, x: i32) -> usize {
    if x > 0 {
        x as usize - 1
    } else {
        (2 * k as i32 + x) as usize
    }
}

/// Inverse of [`symbol_index`].
#[inline]
pub fn index_symbol(k: usize, i: usize) -> i32 {
    if i < k {
        i as i32 + 1
    } else {
        i as i32 - 2 * k as i32
    }
}

/// All symbols in the order 1, ..., k, -k, ..., -1.
pub fn symbols(k: usize) -> impl Iterator<Item = i32> {
    (0..2 * k).map(move |i| index_symbol(k, i))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("symbol {symbol} is out of range for k = {k}")]
    SymbolOutOfRange { symbol: i64, k: usize },
    #[error("symbol {0} is repeated")]
    RepeatedSymbol(i32),
    #[error("image table is not a bijection of the signed symbols")]
    NotBijective,
}

impl SignedPerm {
    pub fn identity(k: usize) -> SignedPerm {
        SignedPerm {
            k,
            img: symbols(k).collect(),
        }
    }

    /// Builds from images listed in symbol order 1, ..., k, -k, ..., -1.
    pub fn from_images(k: usize, img: Vec<i32>) -> Result<SignedPerm, PermError> {
        if img.len() != 2 * k {
            return Err(PermError::NotBijective);
        }
        let mut seen = vec![false; 2 * k];
        for &y in &img {
            if y == 0 || y.unsigned_abs() as usize > k {
                return Err(PermError::SymbolOutOfRange {
                    symbol: y as i64,
                    k,
                });
            }
            let i = symbol_index(k, y);
            if seen[i] {
                return Err(PermError::NotBijective);
            }
            seen[i] = true;
        }
        Ok(SignedPerm { k, img })
    }

    /// Builds from a closure giving the image of each symbol.
    pub fn from_fn(k: usize, f: impl Fn(i32) -> i32) -> Result<SignedPerm, PermError> {
        Self::from_images(k, symbols(k).map(f).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn apply(&self, x: i32) -> i32 {
        self.img[symbol_index(self.k, x)]
    }

    /// Images in symbol order 1, ..., k, -k, ..., -1.
    pub fn images(&self) -> &[i32] {
        &self.img
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut img = vec![0; 2 * self.k];
        for x in symbols(self.k) {
            img[symbol_index(self.k, self.apply(x))] = x;
        }
        SignedPerm { k: self.k, img }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.k, other.k);
        SignedPerm {
            k: self.k,
            img: symbols(self.k).map(|x| self.apply(other.apply(x))).collect(),
        }
    }

    /// `g⁻¹ ∘ self ∘ g`, the permutation read through the relabelling `g`.
    pub fn conjugate_by(&self, g: &SignedPerm) -> SignedPerm {
        g.inverse().compose(self).compose(g)
    }

    pub fn is_identity(&self) -> bool {
        symbols(self.k).all(|x| self.apply(x) == x)
    }

    /// Non-trivial cycles, each starting at its first symbol in symbol order.
    pub fn cycles(&self) -> Vec<Vec<i32>> {
        let mut seen = vec![false; 2 * self.k];
        let mut out = Vec::new();
        for x in symbols(self.k) {
            if seen[symbol_index(self.k, x)] {
                continue;
            }
            let mut c = vec![x];
            seen[symbol_index(self.k, x)] = true;
            let mut y = self.apply(x);
            while y != x {
                seen[symbol_index(self.k, y)] = true;
                c.push(y);
                y = self.apply(y);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Parses cycle notation such as `(1,-6,-4,2)(3,-5)`. Whitespace between
    /// tokens is ignored; an empty string or `()` denotes the identity.
    pub fn parse(text: &str, k: usize) -> Result<SignedPerm, PermError> {
        let cycles = parse_cycles(text)?;
        let mut img: Vec<i32> = symbols(k).collect();
        let mut seen = vec![false; 2 * k];
        for cycle in &cycles {
            for &x in cycle {
                if x == 0 || x.unsigned_abs() as usize > k {
                    return Err(PermError::SymbolOutOfRange { symbol: x, k });
                }
                let i = symbol_index(k, x as i32);
                if seen[i] {
                    return Err(PermError::RepeatedSymbol(x as i32));
                }
                seen[i] = true;
            }
            for j in 0..cycle.len() {
                let a = cycle[j] as i32;
                let b = cycle[(j + 1) % cycle.len()] as i32;
                img[symbol_index(k, a)] = b;
            }
        }
        Ok(SignedPerm { k, img })
    }

    /// Canonical cycle notation. See [`fmt::Display`].
    pub fn to_cycle_string(&self) -> String {
        self.to_string()
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<i64>>, PermError> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && (bytes[*i] as char).is_whitespace() {
            *i += 1;
        }
    };
    let mut out = Vec::new();
    skip_ws(&mut i);
    if text[i..].trim() == "()" {
        return Ok(out);
    }
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(PermError::Syntax {
                position: i,
                message: format!("expected '(' but found '{}'", bytes[i] as char),
            });
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            let start = i;
            if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                i += 1;
            }
            let digits = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == digits {
                return Err(PermError::Syntax {
                    position: i,
                    message: "expected a signed integer".to_string(),
                });
            }
            let value: i64 = text[start..i].parse().map_err(|_| PermError::Syntax {
                position: start,
                message: "integer out of range".to_string(),
            })?;
            cycle.push(value);
            skip_ws(&mut i);
            match bytes.get(i) {
                Some(b',') => i += 1,
                Some(b')') => {
                    i += 1;
                    break;
                }
                Some(&c) => {
                    return Err(PermError::Syntax {
                        position: i,
                        message: format!("expected ',' or ')' but found '{}'", c as char),
                    })
                }
                None => {
                    return Err(PermError::Syntax {
                        position: i,
                        message: "unterminated cycle".to_string(),
                    })
                }
            }
        }
        out.push(cycle);
        skip_ws(&mut i);
    }
    Ok(out)
}

fn mirror(c: &[i32]) -> Vec<i32> {
    c.iter().rev().map(|&x| -x).collect()
}

fn rotate_to(c: &[i32], start: i32) -> Vec<i32> {
    let p = c.iter().position(|&x| x == start).expect("symbol in cycle");
    c[p..].iter().chain(&c[..p]).copied().collect()
}

/// Canonical formatting.
///
/// Cycles come in mirror pairs `(a1,...,am)` and `(-am,...,-a1)`. From each
/// pair the cycle holding the smallest positive symbol is chosen and started
/// at that symbol. These cycles are printed by increasing first symbol,
/// followed by their mirrors in reverse order, so the whole string reads the
/// same when every cycle is mirrored and the list reversed. Fixed points are
/// omitted and the identity prints as `()`.
impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let key = |c: &[i32]| c.iter().map(|&x| symbol_index(self.k, x)).min().unwrap();
        let mut used = vec![false; cycles.len()];
        let mut heads: Vec<Vec<i32>> = Vec::new();
        let mut tails: Vec<Vec<i32>> = Vec::new();
        let mut order: Vec<usize> = (0..cycles.len()).collect();
        order.sort_by_key(|&i| key(&cycles[i]));
        for &i in &order {
            if used[i] {
                continue;
            }
            used[i] = true;
            let c = &cycles[i];
            let start = c[c
                .iter()
                .enumerate()
                .min_by_key(|(_, &x)| symbol_index(self.k, x))
                .unwrap()
                .0];
            let head = rotate_to(c, start);
            let m = mirror(&head);
            let partner = (0..cycles.len())
                .find(|&j| !used[j] && cycles[j].contains(&m[0]) && cycles[j].len() == m.len());
            match partner {
                Some(j) => {
                    used[j] = true;
                    heads.push(head);
                    tails.push(m);
                }
                None => heads.push(head),
            }
        }
        for c in heads.iter().chain(tails.iter().rev()) {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPerm(k={}, {})", self.k, self)
    }
}
