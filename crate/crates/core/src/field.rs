use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field selector: characteristic 0 (`Q`) or a prime `p` (`F_p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FieldRepr", into = "FieldRepr")]
pub struct FieldSpec {
    characteristic: u64,
}

#[derive(Serialize, Deserialize)]
struct FieldRepr {
    char: u64,
}

impl TryFrom<FieldRepr> for FieldSpec {
    type Error = Error;

    fn try_from(r: FieldRepr) -> Result<Self> {
        FieldSpec::new(r.char)
    }
}

impl From<FieldSpec> for FieldRepr {
    fn from(f: FieldSpec) -> Self {
        FieldRepr { char: f.characteristic }
    }
}

impl FieldSpec {
    pub const RATIONAL: FieldSpec = FieldSpec { characteristic: 0 };
    pub const GF2: FieldSpec = FieldSpec { characteristic: 2 };

    /// `0` or a prime below `2^31`.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || (characteristic < 1 << 31 && is_prime(characteristic)) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::InvalidCharacteristic(characteristic))
        }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidCharacteristic(0));
        }
        Self::new(p)
    }

    pub fn characteristic(self) -> u64 {
        self.characteristic
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F_{p}"),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
