use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::TlError;

/// Boundary point, 1-indexed left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Bottom(usize),
    Top(usize),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Bottom(i) => write!(f, "b{i}"),
            Point::Top(j) => write!(f, "t{j}"),
        }
    }
}

impl Point {
    pub fn parse(s: &str) -> Result<Point, TlError> {
        let bad = || TlError::InvalidMatching(format!("bad point {s:?}"));
        let (tag, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let i: usize = rest.parse().map_err(|_| bad())?;
        match tag {
            "b" => Ok(Point::Bottom(i)),
            "t" => Ok(Point::Top(i)),
            _ => Err(bad()),
        }
    }
}

type Partners = SmallVec<[u8; 32]>;

/// Crossingless matching on `n_bottom + n_top` boundary points.
///
/// Internally point `i < n_bottom` is bottom-(i+1) and `n_bottom + j` is
/// top-(j+1); `partner` is the involution given by the arcs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    nb: u8,
    nt: u8,
    partner: Partners,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ArcCounts {
    pub even_caps: usize,
    pub odd_caps: usize,
    pub even_cups: usize,
    pub odd_cups: usize,
    pub through: usize,
}

impl Matching {
    pub fn n_bottom(&self) -> usize {
        self.nb as usize
    }

    pub fn n_top(&self) -> usize {
        self.nt as usize
    }

    fn size(&self) -> usize {
        self.partner.len()
    }

    fn point(&self, idx: usize) -> Point {
        if idx < self.nb as usize {
            Point::Bottom(idx + 1)
        } else {
            Point::Top(idx - self.nb as usize + 1)
        }
    }

    fn index(&self, p: Point) -> Option<usize> {
        match p {
            Point::Bottom(i) if (1..=self.nb as usize).contains(&i) => Some(i - 1),
            Point::Top(j) if (1..=self.nt as usize).contains(&j) => Some(self.nb as usize + j - 1),
            _ => None,
        }
    }

    /// Position on the boundary circle: bottom left to right, then top right to left.
    fn cyclic_pos(&self, idx: usize) -> usize {
        let nb = self.nb as usize;
        if idx < nb {
            idx
        } else {
            nb + self.nt as usize - 1 - (idx - nb)
        }
    }

    fn from_cyclic(&self, pos: usize) -> usize {
        let nb = self.nb as usize;
        if pos < nb {
            pos
        } else {
            nb + self.nt as usize - 1 - (pos - nb)
        }
    }

    fn from_partners(nb: usize, nt: usize, partner: Partners) -> Matching {
        Matching { nb: nb as u8, nt: nt as u8, partner }
    }

    pub fn new(n_bottom: usize, n_top: usize, arcs: &[(Point, Point)]) -> Result<Matching, TlError> {
        if (n_bottom + n_top) % 2 == 1 {
            return Err(TlError::OddBoundary);
        }
        if n_bottom + n_top > 255 {
            return Err(TlError::SizeLimit { n: n_bottom.max(n_top) });
        }
        let mut m = Matching::from_partners(n_bottom, n_top, SmallVec::from_elem(u8::MAX, n_bottom + n_top));
        for &(a, b) in arcs {
            let (Some(i), Some(j)) = (m.index(a), m.index(b)) else {
                return Err(TlError::InvalidMatching(format!("arc {a}-{b} out of range")));
            };
            if i == j || m.partner[i] != u8::MAX || m.partner[j] != u8::MAX {
                return Err(TlError::InvalidMatching(format!("arc {a}-{b} reuses a point")));
            }
            m.partner[i] = j as u8;
            m.partner[j] = i as u8;
        }
        if m.partner.contains(&u8::MAX) {
            return Err(TlError::InvalidMatching("not a perfect matching".into()));
        }
        if !m.is_planar() {
            return Err(TlError::InvalidMatching("arcs cross".into()));
        }
        Ok(m)
    }

    /// Balanced-parenthesis test on the cyclic boundary word.
    fn is_planar(&self) -> bool {
        let n = self.size();
        let mut stack: Vec<usize> = Vec::new();
        for pos in 0..n {
            let other = self.cyclic_pos(self.partner[self.from_cyclic(pos)] as usize);
            if other > pos {
                stack.push(pos);
            } else if stack.pop() != Some(other) {
                return false;
            }
        }
        true
    }

    pub fn identity(n: usize) -> Matching {
        let mut p = Partners::with_capacity(2 * n);
        p.extend((0..n).map(|i| (n + i) as u8));
        p.extend((0..n).map(|i| i as u8));
        Matching::from_partners(n, n, p)
    }

    /// e_i: cap and cup on i, i+1, through strands elsewhere (1 ≤ i < n).
    pub fn generator(n: usize, i: usize) -> Matching {
        assert!(i >= 1 && i < n);
        let mut arcs: Vec<(Point, Point)> = vec![
            (Point::Bottom(i), Point::Bottom(i + 1)),
            (Point::Top(i), Point::Top(i + 1)),
        ];
        arcs.extend((1..=n).filter(|&k| k != i && k != i + 1).map(|k| (Point::Bottom(k), Point::Top(k))));
        Matching::new(n, n, &arcs).unwrap()
    }

    pub fn partner_of(&self, p: Point) -> Option<Point> {
        self.index(p).map(|i| self.point(self.partner[i] as usize))
    }

    /// Arcs with the smaller endpoint first, sorted.
    pub fn arcs(&self) -> Vec<(Point, Point)> {
        (0..self.size())
            .filter(|&i| (self.partner[i] as usize) > i)
            .map(|i| (self.point(i), self.point(self.partner[i] as usize)))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.nb == self.nt && (0..self.nb as usize).all(|i| self.partner[i] as usize == self.nb as usize + i)
    }

    pub fn classify(&self) -> ArcCounts {
        let mut c = ArcCounts::default();
        let nb = self.nb as usize;
        for i in 0..self.size() {
            let j = self.partner[i] as usize;
            if j < i {
                continue;
            }
            match (i < nb, j < nb) {
                (true, true) => {
                    if (i + 1) % 2 == 0 {
                        c.even_caps += 1
                    } else {
                        c.odd_caps += 1
                    }
                }
                (false, false) => {
                    if (i - nb + 1) % 2 == 0 {
                        c.even_cups += 1
                    } else {
                        c.odd_cups += 1
                    }
                }
                _ => c.through += 1,
            }
        }
        if nb == self.nt as usize {
            assert_eq!(c.even_caps + c.odd_caps, c.even_cups + c.odd_cups, "caps and cups must balance");
        }
        c
    }

    /// Stacks `y` on top of `self`; returns the diagram and the number of closed loops.
    pub fn compose(&self, y: &Matching) -> Result<(Matching, usize), TlError> {
        if self.nt != y.nb {
            return Err(TlError::ProfileMismatch);
        }
        let xb = self.nb as usize;
        let mid = self.nt as usize;
        let yt = y.nt as usize;
        let mut out = Partners::from_elem(u8::MAX, xb + yt);
        let mut seen: SmallVec<[bool; 32]> = SmallVec::from_elem(false, mid);
        // result index of an x-point that is a bottom, or of a y-point that is a top
        let walk_from_x = |mut q: usize, seen: &mut SmallVec<[bool; 32]>| -> usize {
            loop {
                if q < xb {
                    return q;
                }
                let m = q - xb;
                seen[m] = true;
                let r = y.partner[m] as usize;
                if r >= mid {
                    return xb + (r - mid);
                }
                seen[r] = true;
                q = self.partner[xb + r] as usize;
            }
        };
        for i in 0..xb {
            if out[i] != u8::MAX {
                continue;
            }
            let e = walk_from_x(self.partner[i] as usize, &mut seen);
            out[i] = e as u8;
            out[e] = i as u8;
        }
        for j in 0..yt {
            if out[xb + j] != u8::MAX {
                continue;
            }
            let r = y.partner[mid + j] as usize;
            let e = if r >= mid {
                xb + (r - mid)
            } else {
                seen[r] = true;
                walk_from_x(self.partner[xb + r] as usize, &mut seen)
            };
            out[xb + j] = e as u8;
            out[e] = (xb + j) as u8;
        }
        let mut loops = 0;
        for m in 0..mid {
            if seen[m] {
                continue;
            }
            loops += 1;
            let mut cur = m;
            loop {
                seen[cur] = true;
                let r = y.partner[cur] as usize;
                seen[r] = true;
                cur = self.partner[xb + r] as usize - xb;
                if cur == m {
                    break;
                }
            }
        }
        Ok((Matching::from_partners(xb, yt, out), loops))
    }

    /// Counterclockwise rotation by one boundary step.
    pub fn rotate_ccw(&self) -> Result<Matching, TlError> {
        if self.nb != self.nt {
            return Err(TlError::NotSquareProfile);
        }
        let n = self.size();
        let mut out = Partners::from_elem(0, n);
        for i in 0..n {
            let j = self.partner[i] as usize;
            let a = self.from_cyclic((self.cyclic_pos(i) + 1) % n);
            let b = self.from_cyclic((self.cyclic_pos(j) + 1) % n);
            out[a] = b as u8;
        }
        Ok(Matching::from_partners(self.nb as usize, self.nt as usize, out))
    }

    pub fn rotate_by(&self, k: usize) -> Result<Matching, TlError> {
        let mut m = self.clone();
        for _ in 0..k % self.size().max(1) {
            m = m.rotate_ccw()?;
        }
        Ok(m)
    }

    /// Mirror in a horizontal line: bottom-i ↔ top-i.
    pub fn flip(&self) -> Matching {
        let (nb, nt) = (self.nb as usize, self.nt as usize);
        let swap = |i: usize| if i < nb { nt + i } else { i - nb };
        let mut out = Partners::from_elem(0, nb + nt);
        for i in 0..nb + nt {
            out[swap(i)] = swap(self.partner[i] as usize) as u8;
        }
        Matching::from_partners(nt, nb, out)
    }

    /// Appends `k` through strands on the right.
    pub fn tensor_id(&self, k: usize) -> Matching {
        let (nb, nt) = (self.nb as usize, self.nt as usize);
        let remap = |i: usize| if i < nb { i } else { i + k };
        let mut out = Partners::from_elem(0, nb + nt + 2 * k);
        for i in 0..nb + nt {
            out[remap(i)] = remap(self.partner[i] as usize) as u8;
        }
        for s in 0..k {
            let b = nb + s;
            let t = nb + k + nt + s;
            out[b] = t as u8;
            out[t] = b as u8;
        }
        Matching::from_partners(nb + k, nt + k, out)
    }

    /// Joins bottom-n to top-n (n = both counts); returns the result and
    /// whether a closed loop was formed.
    pub fn close_last(&self) -> Result<(Matching, usize), TlError> {
        if self.nb != self.nt || self.nb == 0 {
            return Err(TlError::NotSquareProfile);
        }
        let n = self.nb as usize;
        let (b, t) = (n - 1, 2 * n - 1);
        let idx = |i: usize| if i < n { i } else { i - 1 };
        let mut out = Partners::from_elem(0, 2 * n - 2);
        for i in (0..2 * n).filter(|&i| i != b && i != t) {
            let mut q = self.partner[i] as usize;
            while q == b || q == t {
                q = self.partner[if q == b { t } else { b }] as usize;
            }
            out[idx(i)] = idx(q) as u8;
        }
        let loops = usize::from(self.partner[b] as usize == t);
        Ok((Matching::from_partners(n - 1, n - 1, out), loops))
    }

    fn arc_codes(&self) -> SmallVec<[(u8, u8); 16]> {
        (0..self.size())
            .filter(|&i| (self.partner[i] as usize) > i)
            .map(|i| (i as u8, self.partner[i]))
            .collect()
    }
}

impl PartialOrd for Matching {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on arc lists (points ordered bottoms first, then tops).
impl Ord for Matching {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.nb, self.nt)
            .cmp(&(other.nb, other.nt))
            .then_with(|| self.arc_codes().cmp(&other.arc_codes()))
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// All crossingless matchings with the given profile, sorted.
pub fn enumerate_matchings(n_bottom: usize, n_top: usize) -> Result<Vec<Matching>, TlError> {
    let n = n_bottom + n_top;
    if n % 2 == 1 {
        return Err(TlError::OddBoundary);
    }
    if n > 2 * super::MAX_STRANDS {
        return Err(TlError::SizeLimit { n: n / 2 });
    }
    // non-crossing perfect matchings of positions 0..n on a line
    fn rec(lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, rest: &mut Vec<(usize, usize)>) {
        if lo >= hi {
            if let Some((l, h)) = rest.pop() {
                rec(l, h, cur, out, rest);
                rest.push((l, h));
            } else {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = lo + 1;
        while k < hi {
            cur[lo] = k;
            cur[k] = lo;
            rest.push((k + 1, hi));
            rec(lo + 1, k, cur, out, rest);
            rest.pop();
            k += 2;
        }
    }
    let mut raw = Vec::new();
    let mut cur = vec![0; n];
    rec(0, n, &mut cur, &mut raw, &mut Vec::new());
    let shell = Matching::from_partners(n_bottom, n_top, Partners::from_elem(0, n));
    let mut out: Vec<Matching> = raw
        .into_iter()
        .map(|pairs| {
            let mut p = Partners::from_elem(0, n);
            for (pos, &other) in pairs.iter().enumerate() {
                p[shell.from_cyclic(pos)] = shell.from_cyclic(other) as u8;
            }
            Matching::from_partners(n_bottom, n_top, p)
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Point::{Bottom as B, Top as T};

    #[test]
    fn catalan_counts() {
        assert_eq!(enumerate_matchings(3, 3).unwrap().len(), 5);
        assert_eq!(enumerate_matchings(1, 1).unwrap().len(), 1);
        assert_eq!(enumerate_matchings(0, 4).unwrap().len(), 2);
        assert_eq!(enumerate_matchings(5, 5).unwrap().len(), 42);
        assert_eq!(enumerate_matchings(2, 6).unwrap().len(), 14);
        assert!(matches!(enumerate_matchings(1, 2), Err(TlError::OddBoundary)));
        assert!(enumerate_matchings(1, 1).unwrap()[0].is_identity());
    }

    #[test]
    fn enumeration_is_sorted_and_planar() {
        let all = enumerate_matchings(4, 4).unwrap();
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
        for m in &all {
            assert!(m.is_planar());
            assert_eq!(Matching::new(4, 4, &m.arcs()).unwrap(), *m);
        }
    }

    #[test]
    fn rejects_crossings() {
        let r = Matching::new(2, 2, &[(B(1), T(2)), (B(2), T(1))]);
        assert!(matches!(r, Err(TlError::InvalidMatching(_))));
        let r = Matching::new(2, 2, &[(B(1), T(1)), (B(1), T(2))]);
        assert!(r.is_err());
    }

    #[test]
    fn composition_and_loops() {
        let e1 = Matching::generator(2, 1);
        let (m, loops) = e1.compose(&e1).unwrap();
        assert_eq!((m, loops), (e1.clone(), 1));
        let id = Matching::identity(3);
        let a = Matching::generator(3, 1);
        let b = Matching::generator(3, 2);
        assert_eq!(id.compose(&a).unwrap(), (a.clone(), 0));
        let (ab, l1) = a.compose(&b).unwrap();
        let (aba, l2) = ab.compose(&a).unwrap();
        assert_eq!((aba, l1 + l2), (a.clone(), 0));
    }

    #[test]
    fn classification() {
        let id = Matching::identity(4);
        assert_eq!(id.classify(), ArcCounts { through: 4, ..Default::default() });
        let e1 = Matching::generator(3, 1);
        let c = e1.classify();
        assert_eq!((c.even_caps, c.odd_caps, c.odd_cups, c.even_cups), (0, 1, 1, 0));
        let nested = Matching::new(4, 0, &[(B(1), B(4)), (B(2), B(3))]).unwrap();
        let c = nested.classify();
        assert_eq!((c.odd_caps, c.even_caps), (1, 1));
    }

    #[test]
    fn rotation_orbits() {
        assert_eq!(Matching::identity(1).rotate_ccw().unwrap(), Matching::identity(1));
        for n in 1..=5 {
            for m in enumerate_matchings(n, n).unwrap() {
                assert_eq!(m.rotate_by(2 * n).unwrap(), m);
                assert!(m.rotate_ccw().unwrap().is_planar());
            }
        }
        // old top-1 becomes bottom-1, bottom-n becomes top-n
        let id2 = Matching::identity(2);
        let r = id2.rotate_ccw().unwrap();
        assert_eq!(r.partner_of(B(1)), Some(B(2)));
        assert_eq!(r.partner_of(T(1)), Some(T(2)));
    }

    #[test]
    fn flip_tensor_close() {
        let m = Matching::new(3, 1, &[(B(1), B(2)), (B(3), T(1))]).unwrap();
        let f = m.flip();
        assert_eq!((f.n_bottom(), f.n_top()), (1, 3));
        assert_eq!(f.flip(), m);
        let e = Matching::generator(2, 1).tensor_id(1);
        assert_eq!(e, Matching::generator(3, 1));
        let (c, loops) = Matching::generator(2, 1).close_last().unwrap();
        assert_eq!((c, loops), (Matching::identity(1), 0));
        assert_eq!(Matching::identity(2).close_last().unwrap(), (Matching::identity(1), 1));
    }

    #[test]
    fn point_parsing() {
        assert_eq!(Point::parse("b12").unwrap(), B(12));
        assert_eq!(Point::parse("t3").unwrap(), T(3));
        assert!(Point::parse("x3").is_err());
        assert!(Point::parse("b").is_err());
    }
}
