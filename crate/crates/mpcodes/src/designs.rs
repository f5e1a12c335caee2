//! Combinatorial scaffolds for code construction: semi-Latin squares,
//! the cyclic-diagonal resolvable design on r² points for prime r, and
//! validators for both.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A q×q grid of r-subsets of [n] (q = n/r) in which every symbol
/// appears exactly once per row and once per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiLatinSquare {
    r: u32,
    cells: Vec<Vec<Vec<u32>>>,
}

impl SemiLatinSquare {
    /// Build from raw cells; shape is checked here, the balance
    /// properties by [`validate_semi_latin`].
    pub fn new(cells: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let q = cells.len();
        if q == 0 {
            return Err(Error::InvalidSquare("empty grid".into()));
        }
        let r = cells[0].first().map(|c| c.len()).unwrap_or(0);
        if r == 0 {
            return Err(Error::InvalidSquare("empty cells".into()));
        }
        for row in &cells {
            if row.len() != q || row.iter().any(|c| c.len() != r) {
                return Err(Error::InvalidSquare("grid is not q×q of r-sets".into()));
            }
        }
        let mut cells = cells;
        for row in &mut cells {
            for cell in row.iter_mut() {
                cell.sort_unstable();
            }
        }
        Ok(SemiLatinSquare { r: r as u32, cells })
    }

    pub fn side(&self) -> u32 {
        self.cells.len() as u32
    }

    pub fn cell_size(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.side() * self.r
    }

    pub fn cells(&self) -> &[Vec<Vec<u32>>] {
        &self.cells
    }

    pub fn row(&self, i: usize) -> &[Vec<u32>] {
        &self.cells[i]
    }
}

/// First violation found while checking a square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquareIssue {
    Row { index: usize, symbol: u32 },
    Column { index: usize, symbol: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareReport {
    pub issue: Option<SquareIssue>,
}

impl SquareReport {
    pub fn pass(&self) -> bool {
        self.issue.is_none()
    }
}

/// Superimpose r cyclic Latin squares of order q on disjoint symbol
/// ranges: cell(i, j) = { kq + ((i+j+k) mod q) + 1 : k in 0..r }.
pub fn make_semi_latin(n: u32, r: u32) -> Result<SemiLatinSquare> {
    if r == 0 || n == 0 || !n.is_multiple_of(r) {
        return Err(Error::NonDivisible { n, r });
    }
    let q = n / r;
    let cells = (0..q)
        .map(|i| {
            (0..q)
                .map(|j| (0..r).map(|k| k * q + (i + j + k) % q + 1).collect())
                .collect()
        })
        .collect();
    let square = SemiLatinSquare::new(cells)?;
    debug_assert!(validate_semi_latin(&square).pass());
    Ok(square)
}

/// Check that every symbol of [n] occurs exactly once in each row and
/// each column; reports the first violated row or column.
pub fn validate_semi_latin(s: &SemiLatinSquare) -> SquareReport {
    let q = s.side() as usize;
    let n = s.n();
    for i in 0..q {
        if let Some(symbol) = multiset_defect(s.cells[i].iter().flatten().copied(), n) {
            return SquareReport {
                issue: Some(SquareIssue::Row { index: i, symbol }),
            };
        }
    }
    for j in 0..q {
        let column = s.cells.iter().flat_map(|row| row[j].iter().copied());
        if let Some(symbol) = multiset_defect(column, n) {
            return SquareReport {
                issue: Some(SquareIssue::Column { index: j, symbol }),
            };
        }
    }
    SquareReport { issue: None }
}

/// Returns a symbol that is repeated, out of range, or missing when the
/// iterator is not exactly [n]; None when it is.
fn multiset_defect(items: impl Iterator<Item = u32>, n: u32) -> Option<u32> {
    let mut seen = vec![false; n as usize];
    for v in items {
        if v == 0 || v > n || seen[(v - 1) as usize] {
            return Some(v);
        }
        seen[(v - 1) as usize] = true;
    }
    seen.iter().position(|&s| !s).map(|i| i as u32 + 1)
}

/// Blocks of size r over [n], grouped into classes that each partition
/// [n].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvableDesign {
    pub n: u32,
    pub r: u32,
    classes: Vec<Vec<Vec<u32>>>,
}

impl ResolvableDesign {
    pub fn new(n: u32, r: u32, classes: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        if r == 0 || n == 0 || !n.is_multiple_of(r) {
            return Err(Error::NonDivisible { n, r });
        }
        let q = (n / r) as usize;
        let mut classes = classes;
        for class in &mut classes {
            if class.len() != q || class.iter().any(|b| b.len() != r as usize) {
                return Err(Error::ParamInvalid(
                    "each class must hold n/r blocks of size r".into(),
                ));
            }
            for block in class.iter_mut() {
                block.sort_unstable();
            }
        }
        Ok(ResolvableDesign { n, r, classes })
    }

    pub fn classes(&self) -> &[Vec<Vec<u32>>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.classes.iter().map(|c| c.len()).sum()
    }

    /// All blocks across classes, with their class index.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, &Vec<u32>)> {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(ci, class)| class.iter().map(move |b| (ci, b)))
    }
}

/// The diagonal construction of a resolvable S(2, r, r²) for odd prime
/// r: class 1 lays 1..r² out row-wise, class 2 is its transpose, and
/// each later class reads the cyclically continued diagonals of the
/// previous array row by row, starting from the main diagonal.
pub fn khare_rbibd(r: u32) -> Result<ResolvableDesign> {
    if r.is_multiple_of(2) {
        return Err(Error::NotOdd(r));
    }
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    let rs = r as usize;
    let n = r * r;

    let row_wise: Vec<Vec<u32>> = (0..rs)
        .map(|i| (0..rs).map(|j| (i * rs + j) as u32 + 1).collect())
        .collect();
    let transpose: Vec<Vec<u32>> = (0..rs)
        .map(|i| (0..rs).map(|j| row_wise[j][i]).collect())
        .collect();

    let mut arrays = vec![row_wise, transpose];
    for _ in 2..=rs {
        let prev = arrays.last().unwrap();
        let next: Vec<Vec<u32>> = (0..rs)
            .map(|s| (0..rs).map(|t| prev[(s + t) % rs][t]).collect())
            .collect();
        arrays.push(next);
    }
    ResolvableDesign::new(n, r, arrays)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignIssue {
    ClassNotPartition { class: usize, symbol: u32 },
    Coverage { subset: Vec<u32>, count: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignReport {
    pub issues: Vec<DesignIssue>,
    /// Largest intersection between blocks of different classes.
    pub max_cross_intersection: u32,
}

impl DesignReport {
    pub fn pass(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Check that every class partitions [n] and that every k-subset of [n]
/// lies in exactly `lambda` blocks; also reports the largest
/// intersection between blocks of distinct classes.
pub fn verify_design(design: &ResolvableDesign, k: u32, lambda: u32) -> DesignReport {
    let mut issues = Vec::new();
    let n = design.n;

    for (ci, class) in design.classes.iter().enumerate() {
        if let Some(symbol) = multiset_defect(class.iter().flatten().copied(), n) {
            issues.push(DesignIssue::ClassNotPartition { class: ci, symbol });
        }
    }

    // count k-subset coverage block by block
    let mut coverage: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    for (_, block) in design.blocks() {
        for subset in k_subsets(block, k as usize) {
            *coverage.entry(subset).or_insert(0) += 1;
        }
    }
    for subset in k_subsets(&(1..=n).collect::<Vec<_>>(), k as usize) {
        let count = coverage.get(&subset).copied().unwrap_or(0);
        if count != lambda {
            issues.push(DesignIssue::Coverage { subset, count });
            if issues.len() > 16 {
                break;
            }
        }
    }

    let mut max_cross = 0;
    let all: Vec<(usize, &Vec<u32>)> = design.blocks().collect();
    for (i, (ci, bi)) in all.iter().enumerate() {
        for (cj, bj) in all.iter().skip(i + 1) {
            if ci != cj {
                let inter = bi.iter().filter(|e| bj.contains(e)).count() as u32;
                max_cross = max_cross.max(inter);
            }
        }
    }

    DesignReport {
        issues,
        max_cross_intersection: max_cross,
    }
}

fn k_subsets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn recurse(
        items: &[u32],
        k: usize,
        start: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            recurse(items, k, i + 1, current, out);
            current.pop();
        }
    }
    recurse(items, k, 0, &mut current, &mut out);
    out
}

fn is_prime(r: u32) -> bool {
    if r < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= r {
        if r.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The published 3×3 example square with n = 6, r = 2; shared by tests
/// across the crate.
#[cfg(test)]
pub(crate) fn fixture_square() -> SemiLatinSquare {
    SemiLatinSquare::new(vec![
        vec![vec![1, 4], vec![2, 5], vec![3, 6]],
        vec![vec![3, 5], vec![1, 6], vec![2, 4]],
        vec![vec![2, 6], vec![3, 4], vec![1, 5]],
    ])
    .unwrap()
}
