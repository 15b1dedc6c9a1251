//! Small finite fields as explicit addition/multiplication tables.

use crate::error::{Error, Result};

/// `GF(q)` with elements `0..q`; element `k` encodes the polynomial whose
/// base-`p` digits are its coefficients (lowest degree first).
#[derive(Clone, Debug)]
pub struct GaloisField {
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

/// Irreducible moduli for the non-prime orders, as coefficient lists of the
/// monic polynomial from degree 0 up to (excluding) the leading term.
fn modulus(q: usize) -> Option<(usize, &'static [usize])> {
    match q {
        4 => Some((2, &[1, 1])),       // x^2 + x + 1
        8 => Some((2, &[1, 1, 0])),    // x^3 + x + 1
        9 => Some((3, &[1, 0])),       // x^2 + 1
        16 => Some((2, &[1, 1, 0, 0])), // x^4 + x + 1
        _ => None,
    }
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl GaloisField {
    /// Prime `q`, or one of the prime powers 4, 8, 9, 16.
    pub fn new(q: usize) -> Result<Self> {
        if is_prime(q) {
            let add = (0..q * q).map(|i| (i / q + i % q) % q).collect();
            let mul = (0..q * q).map(|i| (i / q) * (i % q) % q).collect();
            return Ok(GaloisField { q, add, mul });
        }
        let (p, low) = modulus(q).ok_or_else(|| Error::UnsupportedSpec(format!("no field of order {q} available")))?;
        let deg = low.len();
        let digits = |mut x: usize| {
            let mut d = vec![0; deg];
            for c in d.iter_mut() {
                *c = x % p;
                x /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);
                let mut prod = vec![0; 2 * deg - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce: x^deg = -(low)
                for top in (deg..prod.len()).rev() {
                    let c = prod[top];
                    if c != 0 {
                        prod[top] = 0;
                        for (k, &m) in low.iter().enumerate() {
                            let idx = top - deg + k;
                            prod[idx] = (prod[idx] + (p - c) * m) % p;
                        }
                    }
                }
                mul[a * q + b] = encode(&prod[..deg]);
            }
        }
        Ok(GaloisField { q, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        (2..self.q)
            .find(|&g| {
                let mut x = g;
                let mut k = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    k += 1;
                }
                k == self.q - 1
            })
            .unwrap_or(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16] {
            let f = GaloisField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert!((1..q).any(|b| f.mul(a, b) == 1), "q={q} a={a} not invertible");
                }
                for b in 0..q {
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_element_has_full_order() {
        for q in [4, 8, 9, 16, 17] {
            let f = GaloisField::new(q).unwrap();
            let g = f.primitive_element();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 0..q - 1 {
                seen.insert(x);
                x = f.mul(x, g);
            }
            assert_eq!(seen.len(), q - 1);
        }
    }

    #[test]
    fn unsupported_orders() {
        assert!(GaloisField::new(25).is_err());
        assert!(GaloisField::new(6).is_err());
    }
}
