//! Parsing of command-line values into library types.

use twistlab::exact_linalg::Rational;
use twistlab::root_system::{CartanType, Family};

/// `A`..`G`, case-insensitive.
pub fn family(s: &str) -> Result<Family, String> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Family::from_letter(c.to_ascii_uppercase()).ok_or_else(|| format!("unknown type {s:?}")),
        _ => Err(format!("type must be a single letter A-G, got {s:?}")),
    }
}

pub fn cartan_type(family: Family, rank: usize) -> Result<CartanType, String> {
    CartanType::new(family, rank).map_err(|e| e.to_string())
}

/// Comma-separated integers or fractions `p/q`.
pub fn rationals(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(|_| format!("not a number: {t:?}")))
        .collect()
}

/// A comma-separated coordinate list as a single argument value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coords(pub Vec<Rational>);

pub fn coords(s: &str) -> Result<Coords, String> {
    rationals(s).map(Coords)
}

/// Comma-separated values that must all be integers.
pub fn integers(s: &str) -> Result<Vec<i64>, String> {
    rationals(s)?
        .into_iter()
        .map(|q| q.to_i64().filter(|_| q.is_integer()).ok_or_else(|| format!("{q} is not an integer")))
        .collect()
}
