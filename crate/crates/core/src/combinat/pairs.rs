use crate::error::{Error, Result};

pub(crate) fn check_part(part: &[u32]) -> Result<()> {
    if part.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::MalformedPart(part.to_vec()));
    }
    Ok(())
}

/// `[x,y]` and `[z,t]` interleave.
pub fn segments_cross(x: u32, y: u32, z: u32, t: u32) -> bool {
    (x < z && z < y && y < t) || (z < x && x < t && t < y)
}

/// One of `[x,y]`, `[z,t]` lies strictly inside the other.
pub fn segments_nest(x: u32, y: u32, z: u32, t: u32) -> bool {
    (x < z && z < t && t < y) || (z < x && x < y && y < t)
}

/// Orders a pair so the longer part comes first; equal lengths keep their order.
fn longer_first<'a>(a: &'a [u32], b: &'a [u32]) -> (&'a [u32], &'a [u32]) {
    if a.len() >= b.len() {
        (a, b)
    } else {
        (b, a)
    }
}

/// Column-pair non-crossing test. The longer part plays the role of `a`; for equal
/// lengths `a` is the left column.
pub fn is_noncrossing_pair(a: &[u32], b: &[u32]) -> Result<bool> {
    check_part(a)?;
    check_part(b)?;
    Ok(noncrossing_pair_unchecked(a, b))
}

pub(crate) fn noncrossing_pair_unchecked(a: &[u32], b: &[u32]) -> bool {
    let (a, b) = longer_first(a, b);
    let q = b.len();
    if q == 0 {
        return true;
    }
    for i in 0..q - 1 {
        if segments_cross(a[i], a[i + 1], b[i], b[i + 1]) {
            return false;
        }
    }
    if a.len() > q {
        !(a[q - 1] < b[q - 1] && b[q - 1] < a[q])
    } else {
        match (0..q).rev().find(|&s| a[s] != b[s]) {
            Some(s) => a[s] < b[s],
            None => true,
        }
    }
}

/// Unordered test for parts of equal length: no pair of consecutive segments interleaves.
pub fn segments_noncrossing(a: &[u32], b: &[u32]) -> Result<bool> {
    check_part(a)?;
    check_part(b)?;
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!("parts of lengths {} and {}", a.len(), b.len())));
    }
    Ok(!a.windows(2).zip(b.windows(2)).any(|(s, t)| segments_cross(s[0], s[1], t[0], t[1])))
}

/// Column-pair non-nesting test: consecutive segments never nest and the left (or longer)
/// part starts first. Equivalent to `a_i < b_i` for every shared row.
pub fn is_nonnesting_pair(a: &[u32], b: &[u32]) -> Result<bool> {
    check_part(a)?;
    check_part(b)?;
    Ok(nonnesting_pair_unchecked(a, b))
}

pub(crate) fn nonnesting_pair_unchecked(a: &[u32], b: &[u32]) -> bool {
    let (a, b) = longer_first(a, b);
    let q = b.len();
    if q == 0 {
        return true;
    }
    if (0..q - 1).any(|i| segments_nest(a[i], a[i + 1], b[i], b[i + 1])) {
        return false;
    }
    a[0] < b[0]
}
