//! Serde helpers: big integers as numbers when they fit in 64 bits and as
//! decimal strings otherwise; complex numbers as `[re, im]` pairs.

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::Value;

pub(crate) fn bigint_value(x: &BigInt) -> Value {
    if let Ok(v) = i64::try_from(x) {
        Value::from(v)
    } else if let Ok(v) = u64::try_from(x) {
        Value::from(v)
    } else {
        Value::String(x.to_string())
    }
}

pub(crate) mod bigint_list {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(bigint_value).collect::<Vec<_>>().serialize(s)
    }
}

pub(crate) mod bigint_option {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        x.as_ref().map(bigint_value).serialize(s)
    }
}

pub(crate) mod complex {
    use num_complex::Complex64;
    use serde::{Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }
}

pub(crate) mod complex_list {
    use num_complex::Complex64;
    use serde::{Serialize, Serializer};

    pub fn serialize<S: Serializer>(zs: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        zs.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>().serialize(s)
    }
}
