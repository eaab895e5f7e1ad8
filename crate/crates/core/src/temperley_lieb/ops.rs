//! Local moves on matchings: merging neighbouring nested caps and moving a
//! nested cap through strands at the left end.

use super::{Matching, Point, TlError};

use Point::Bottom as B;

/// Size of the full nested cap whose outer arc starts at bottom-`start`, or
/// `None` if the arc is not a cap enclosing only nested caps.
fn nested_cap_at(d: &Matching, start: usize) -> Option<usize> {
    let Some(B(end)) = d.partner_of(B(start)) else {
        return None;
    };
    if end < start || (end - start + 1) % 2 != 0 {
        return None;
    }
    let size = (end - start + 1) / 2;
    (0..size).all(|k| d.partner_of(B(start + k)) == Some(B(end - k))).then_some(size)
}

fn rebuild(d: &Matching, remap: impl Fn(Point) -> Point, extra: &[(Point, Point)], skip: impl Fn(Point) -> bool) -> Matching {
    let mut arcs: Vec<(Point, Point)> = d
        .arcs()
        .into_iter()
        .filter(|(a, b)| !skip(*a) && !skip(*b))
        .map(|(a, b)| (remap(a), remap(b)))
        .collect();
    arcs.extend_from_slice(extra);
    Matching::new(d.n_bottom(), d.n_top(), &arcs).expect("local move preserves planarity")
}

fn rainbow(start: usize, size: usize) -> Vec<(Point, Point)> {
    (0..size).map(|k| (B(start + k), B(start + 2 * size - 1 - k))).collect()
}

/// Merges the nested cap starting at bottom-`position` with the nested cap
/// immediately to its right into one nested cap.
pub fn merge_caps(d: &Matching, position: usize) -> Result<Matching, TlError> {
    let x = nested_cap_at(d, position).ok_or(TlError::ConfigurationAbsent)?;
    let y = nested_cap_at(d, position + 2 * x).ok_or(TlError::ConfigurationAbsent)?;
    let (lo, hi) = (position, position + 2 * (x + y) - 1);
    let inside = |p: Point| matches!(p, B(i) if (lo..=hi).contains(&i));
    Ok(rebuild(d, |p| p, &rainbow(lo, x + y), inside))
}

/// Moves a y-nested cap sitting right of x straight through strands at the
/// left end to the far left; the strands now start right of the cap.
pub fn move_cap(d: &Matching, x: usize, y: usize) -> Result<Matching, TlError> {
    if y == 0 || x + 2 * y > d.n_bottom() {
        return Err(TlError::ConfigurationAbsent);
    }
    if nested_cap_at(d, x + 1) != Some(y) {
        return Err(TlError::ConfigurationAbsent);
    }
    // the x leftmost strands run straight up
    if (1..=x).any(|i| d.partner_of(B(i)) != Some(Point::Top(i))) {
        return Err(TlError::ConfigurationAbsent);
    }
    let block = x + 2 * y;
    let in_cap = |p: Point| matches!(p, B(i) if i > x && i <= block);
    let remap = |p: Point| match p {
        B(i) if i <= x => B(i + 2 * y),
        other => other,
    };
    Ok(rebuild(d, remap, &rainbow(1, y), in_cap))
}

/// Every (x, y, D') with D' = move_cap(D, x, y), x ≥ 1.
pub fn rainbow_form(d: &Matching) -> Vec<(usize, usize, Matching)> {
    let mut out = Vec::new();
    for x in 1..d.n_bottom() {
        for y in 1..=(d.n_bottom() - x) / 2 {
            if let Ok(m) = move_cap(d, x, y) {
                out.push((x, y, m));
            }
        }
    }
    out
}
