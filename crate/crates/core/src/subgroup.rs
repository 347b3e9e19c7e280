//! Congruence subgroups and their right coset spaces.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::ProjectiveMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgroupSpec {
    Full,
    Gamma0(u64),
    Gamma1(u64),
    Gamma(u64),
}

/// A label of the right coset `Γg`.
pub type CosetKey = [u64; 4];

impl SubgroupSpec {
    pub fn level(&self) -> u64 {
        match *self {
            SubgroupSpec::Full => 1,
            SubgroupSpec::Gamma0(n) | SubgroupSpec::Gamma1(n) | SubgroupSpec::Gamma(n) => n,
        }
    }

    pub fn is_full(&self) -> bool {
        self.level() == 1
    }

    pub fn is_member(&self, m: &ProjectiveMatrix) -> bool {
        let n = self.level();
        if n == 1 {
            return true;
        }
        let [a, b, c, d] = m.entries_mod(n);
        let neg1 = n - 1;
        match self {
            SubgroupSpec::Full => true,
            SubgroupSpec::Gamma0(_) => c == 0,
            SubgroupSpec::Gamma1(_) => c == 0 && a == d && (a == 1 || a == neg1),
            SubgroupSpec::Gamma(_) => b == 0 && c == 0 && a == d && (a == 1 || a == neg1),
        }
    }

    pub fn check_member(&self, m: &ProjectiveMatrix) -> Result<()> {
        if self.is_member(m) {
            Ok(())
        } else {
            Err(Error::NotMember(self.to_string()))
        }
    }

    /// Key of the right coset `Γg`: `key(γg) = key(g)` for `γ ∈ Γ`, and equal
    /// keys mean equal cosets.
    pub fn coset_key(&self, g: &ProjectiveMatrix) -> CosetKey {
        let n = self.level();
        if n == 1 {
            return [0; 4];
        }
        self.coset_key_mod(g.entries_mod(n))
    }

    /// Same as [`coset_key`](Self::coset_key), on entries already reduced mod N.
    pub fn coset_key_mod(&self, e: [u64; 4]) -> CosetKey {
        let n = self.level();
        if n == 1 {
            return [0; 4];
        }
        let neg = |v: u64| (n - v) % n;
        let [a, b, c, d] = e;
        match self {
            SubgroupSpec::Full => [0; 4],
            SubgroupSpec::Gamma0(_) => {
                let mut best = [c, d, 0, 0];
                for u in 1..n {
                    if gcd(u, n) != 1 {
                        continue;
                    }
                    let cand = [mulmod(u, c, n), mulmod(u, d, n), 0, 0];
                    if cand < best {
                        best = cand;
                    }
                }
                best
            }
            SubgroupSpec::Gamma1(_) => [c, d, 0, 0].min([neg(c), neg(d), 0, 0]),
            SubgroupSpec::Gamma(_) => [a, b, c, d].min([neg(a), neg(b), neg(c), neg(d)]),
        }
    }
}

pub(crate) fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Product of two matrices with entries mod `n`.
pub(crate) fn mat_mul_mod(x: [u64; 4], y: [u64; 4], n: u64) -> [u64; 4] {
    let m = |p: u64, q: u64, r: u64, s: u64| (mulmod(p, q, n) + mulmod(r, s, n)) % n;
    [
        m(x[0], y[0], x[1], y[2]),
        m(x[0], y[1], x[1], y[3]),
        m(x[2], y[0], x[3], y[2]),
        m(x[2], y[1], x[3], y[3]),
    ]
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupSpec::Full => write!(f, "full"),
            SubgroupSpec::Gamma0(n) => write!(f, "gamma0:{n}"),
            SubgroupSpec::Gamma1(n) => write!(f, "gamma1:{n}"),
            SubgroupSpec::Gamma(n) => write!(f, "gamma:{n}"),
        }
    }
}

impl FromStr for SubgroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::Syntax { position: 0, message: format!("{msg}: {s:?}") };
        if s.eq_ignore_ascii_case("full") {
            return Ok(SubgroupSpec::Full);
        }
        let (kind, level) = s.split_once(':').ok_or_else(|| bad("unknown subgroup"))?;
        let n: u64 = level.trim().parse().map_err(|_| bad("bad level"))?;
        if n == 0 {
            return Err(bad("level must be positive"));
        }
        match kind.trim().to_ascii_lowercase().as_str() {
            "gamma0" => Ok(SubgroupSpec::Gamma0(n)),
            "gamma1" => Ok(SubgroupSpec::Gamma1(n)),
            "gamma" => Ok(SubgroupSpec::Gamma(n)),
            _ => Err(bad("unknown subgroup")),
        }
    }
}
