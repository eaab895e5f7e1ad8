use std::collections::{BTreeMap, BTreeSet};

use crate::coxeter::Element;
use crate::par::{self, ExecMode};

use super::{Double0Basis, Double0Error};

/// Cells restricted to a window of lengths.
#[derive(Clone, Debug)]
pub struct CellReport {
    pub max_length: u64,
    /// Cells are reported for lengths ≤ window.
    pub window: u64,
    pub right_cells: Vec<Vec<Element>>,
    pub two_sided_cells: Vec<Vec<Element>>,
    pub caveat: String,
}

/// Graph on basis elements: y → x when b_x occurs in b_y·b_s (or b_s·b_y).
fn edges(
    basis: &Double0Basis,
    sources: &[Element],
    both_sides: bool,
    mode: ExecMode,
) -> Result<BTreeMap<Element, BTreeSet<Element>>, Double0Error> {
    let h = basis.algebra();
    let out = par::map(mode, sources, |y| -> Result<(Element, BTreeSet<Element>), Double0Error> {
        let by = basis.get(y).expect("source in basis");
        let mut targets = BTreeSet::new();
        for s in 0..2 {
            let mut products = vec![h.mult_b_s(by, s)?];
            if both_sides {
                products.push(h.left_mult_b_s(s, by)?);
            }
            for p in products {
                targets.extend(basis.express(&p)?.into_keys());
            }
        }
        Ok((y.clone(), targets))
    });
    out.into_iter().collect()
}

/// Mutual-reachability classes among `nodes`, reachability through the whole graph.
fn strongly_connected(graph: &BTreeMap<Element, BTreeSet<Element>>, nodes: &[Element]) -> Vec<Vec<Element>> {
    let reach = |start: &Element| -> BTreeSet<Element> {
        let mut seen = BTreeSet::from([start.clone()]);
        let mut stack = vec![start.clone()];
        while let Some(x) = stack.pop() {
            for y in graph.get(&x).into_iter().flatten() {
                if seen.insert(y.clone()) {
                    stack.push(y.clone());
                }
            }
        }
        seen
    };
    let reached: BTreeMap<&Element, BTreeSet<Element>> = nodes.iter().map(|x| (x, reach(x))).collect();
    let mut assigned = BTreeSet::new();
    let mut cells = Vec::new();
    for x in nodes {
        if assigned.contains(x) {
            continue;
        }
        let cell: Vec<Element> = nodes
            .iter()
            .filter(|y| reached[x].contains(*y) && reached[*y].contains(x))
            .cloned()
            .collect();
        assigned.extend(cell.iter().cloned());
        cells.push(cell);
    }
    cells
}

/// Right and two-sided cells for lengths ≤ N − 2, from products of elements
/// of length ≤ N − 1 with b₁, b₂.
pub fn compute_cells(basis: &Double0Basis) -> Result<CellReport, Double0Error> {
    compute_cells_with(basis, ExecMode::default())
}

pub fn compute_cells_with(basis: &Double0Basis, mode: ExecMode) -> Result<CellReport, Double0Error> {
    let n = basis.max_length();
    if n < 8 {
        return Err(Double0Error::InvalidLength { got: n, min: 8 });
    }
    let sys = &basis.algebra().system;
    let window = n - 2;
    let sources: Vec<Element> = sys.elements_up_to(n - 1);
    let in_window: Vec<Element> = sys.elements_up_to(window);
    let right = edges(basis, &sources, false, mode)?;
    let two = edges(basis, &sources, true, mode)?;
    Ok(CellReport {
        max_length: n,
        window,
        right_cells: strongly_connected(&right, &in_window),
        two_sided_cells: strongly_connected(&two, &in_window),
        caveat: format!(
            "products computed for lengths <= {}; cells shown for lengths <= {window}; classes may connect through longer elements",
            n - 1
        ),
    })
}

/// {e}, {s₁}, {s₂}, {1_k}, {2_k} (k ≥ 2) and the two-sided merge of the last two,
/// restricted to lengths ≤ window.
pub fn expected_cells(basis: &Double0Basis, window: u64) -> (Vec<Vec<Element>>, Vec<Vec<Element>>) {
    let sys = &basis.algebra().system;
    let alt = |c: usize, k: u64| sys.alternating(c, k).expect("dihedral");
    let long = |c: usize| -> Vec<Element> { (2..=window).map(|k| alt(c, k)).collect() };
    let mut right = vec![vec![sys.identity()], vec![alt(0, 1)], vec![alt(1, 1)], long(0), long(1)];
    let mut merged = long(0);
    merged.extend(long(1));
    let mut two = vec![vec![sys.identity()], vec![alt(0, 1)], vec![alt(1, 1)], merged];
    for cells in [&mut right, &mut two] {
        for c in cells.iter_mut() {
            c.sort();
        }
        cells.sort();
    }
    (right, two)
}

impl CellReport {
    fn normalized(cells: &[Vec<Element>]) -> Vec<Vec<Element>> {
        let mut out: Vec<Vec<Element>> = cells
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort();
                c
            })
            .collect();
        out.sort();
        out
    }

    pub fn matches_expected(&self, basis: &Double0Basis) -> (bool, bool) {
        let (right, two) = expected_cells(basis, self.window);
        (Self::normalized(&self.right_cells) == right, Self::normalized(&self.two_sided_cells) == two)
    }
}

/// Occurrences of b_{s₁}, b_{s₂} in b_y·b_z for 1 ≤ ℓ(y), ℓ(z) ≤ max, not both 1.
#[derive(Clone, Debug)]
pub struct SummandReport {
    pub pairs_checked: usize,
    pub violations: Vec<(Element, Element, Element)>,
}

pub fn summand_check(basis: &Double0Basis, max: u64) -> Result<SummandReport, Double0Error> {
    let h = basis.algebra();
    let sys = &h.system;
    let max = max.min(basis.max_length() / 2);
    let short: Vec<Element> = sys.elements_up_to(max).into_iter().filter(|w| sys.length(w) >= 1).collect();
    let gens = [sys.alternating(0, 1).expect("s1"), sys.alternating(1, 1).expect("s2")];
    let mut pairs_checked = 0;
    let mut violations = Vec::new();
    for y in &short {
        for z in &short {
            if sys.length(y) < 2 && sys.length(z) < 2 {
                continue;
            }
            pairs_checked += 1;
            let p = h.multiply(basis.get(y).expect("in basis"), basis.get(z).expect("in basis"))?;
            let coeffs = basis.express(&p)?;
            for g in &gens {
                if coeffs.contains_key(g) {
                    violations.push((y.clone(), z.clone(), g.clone()));
                }
            }
        }
    }
    Ok(SummandReport { pairs_checked, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral_double0::compute_basis;

    #[test]
    fn five_right_cells_four_two_sided() {
        let basis = compute_basis(10).unwrap();
        let r = compute_cells(&basis).unwrap();
        assert_eq!(r.window, 8);
        assert_eq!(r.right_cells.len(), 5);
        assert_eq!(r.two_sided_cells.len(), 4);
        assert_eq!(r.matches_expected(&basis), (true, true));
    }

    #[test]
    fn generators_are_not_summands() {
        let basis = compute_basis(8).unwrap();
        let r = summand_check(&basis, 4).unwrap();
        assert_eq!(r.pairs_checked, 8 * 8 - 4);
        assert!(r.violations.is_empty());
    }
}
