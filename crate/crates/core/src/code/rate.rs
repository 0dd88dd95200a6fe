use std::fmt;

use crate::error::{Error, Result};

/// Code rate `k / n`, kept as an exact fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeRate {
    k: usize,
    n: usize,
}

/// Message bits per transmitted bit. Requires `0 < k <= n`.
pub fn code_rate(k: usize, n: usize) -> Result<CodeRate> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::InvalidRate { k, n });
    }
    Ok(CodeRate { k, n })
}

impl CodeRate {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The fraction in lowest terms.
    pub fn reduced(&self) -> (usize, usize) {
        let g = gcd(self.k, self.n);
        (self.k / g, self.n / g)
    }

    pub fn value(&self) -> f64 {
        self.k as f64 / self.n as f64
    }
}

impl fmt::Display for CodeRate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.reduced();
        write!(f, "{p}/{q} ({})", self.value())
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rates() {
        assert_eq!(code_rate(4, 8).unwrap().value(), 0.5);
        assert_eq!(code_rate(4, 8).unwrap().reduced(), (1, 2));
        assert_eq!(code_rate(5, 8).unwrap().value(), 0.625);
        assert_eq!(code_rate(7, 7).unwrap().value(), 1.0);
        assert_eq!(code_rate(504, 1008).unwrap().to_string(), "1/2 (0.5)");
    }

    #[test]
    fn invalid_rates() {
        assert!(code_rate(9, 8).is_err());
        assert!(code_rate(0, 0).is_err());
        assert!(code_rate(0, 4).is_err());
    }
}
