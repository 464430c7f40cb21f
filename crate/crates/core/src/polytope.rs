//! Integer points of bounded polyhedra `{e in Z^d : A e >= b, C e = c}`.
//!
//! A bounding box is obtained by Fourier-Motzkin projection onto each
//! coordinate; the box is then searched depth first with interval
//! propagation of every row at each level. Equality rows are kept as pairs
//! of opposite inequalities.

use thiserror::Error;

/// Default limit on the number of lattice points in a bounding box.
pub const DEFAULT_BOX_CAP: u128 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("region is unbounded in coordinate {0}")]
    Unbounded(usize),
    #[error("bounding box holds {volume} points, above the cap of {cap}")]
    CapExceeded { volume: u128, cap: u128 },
    #[error("row has {found} coefficients, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Row {
    coeffs: Vec<i128>,
    rhs: i128,
}

impl Row {
    /// Divide through by the content of the coefficients; the right-hand
    /// side is rounded up, which is exact on integer points.
    fn normalized(mut self) -> Row {
        let content = self.coeffs.iter().fold(0i128, |acc, &a| gcd128(acc, a));
        if content > 1 {
            for a in &mut self.coeffs {
                *a /= content;
            }
            self.rhs = div_ceil(self.rhs, content);
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

/// A system of linear constraints over `dim` integer unknowns.
#[derive(Debug, Clone, Default)]
pub struct LinearSystem {
    dim: usize,
    rows: Vec<Row>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        LinearSystem { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check(&self, coeffs: &[i64]) -> Result<(), PolytopeError> {
        if coeffs.len() != self.dim {
            return Err(PolytopeError::DimensionMismatch {
                expected: self.dim,
                found: coeffs.len(),
            });
        }
        Ok(())
    }

    /// `coeffs . e >= rhs`
    pub fn at_least(&mut self, coeffs: &[i64], rhs: i64) -> Result<&mut Self, PolytopeError> {
        self.check(coeffs)?;
        self.rows.push(Row {
            coeffs: coeffs.iter().map(|&a| a as i128).collect(),
            rhs: rhs as i128,
        });
        Ok(self)
    }

    /// `coeffs . e == rhs`
    pub fn equal_to(&mut self, coeffs: &[i64], rhs: i64) -> Result<&mut Self, PolytopeError> {
        self.check(coeffs)?;
        self.rows.push(Row {
            coeffs: coeffs.iter().map(|&a| a as i128).collect(),
            rhs: rhs as i128,
        });
        self.rows.push(Row {
            coeffs: coeffs.iter().map(|&a| -(a as i128)).collect(),
            rhs: -(rhs as i128),
        });
        Ok(self)
    }

    /// `e[var] >= bound`
    pub fn variable_at_least(&mut self, var: usize, bound: i64) -> &mut Self {
        let mut coeffs = vec![0i128; self.dim];
        coeffs[var] = 1;
        self.rows.push(Row { coeffs, rhs: bound as i128 });
        self
    }

    pub fn is_satisfied(&self, point: &[i64]) -> bool {
        point.len() == self.dim
            && self.rows.iter().all(|row| {
                let lhs: i128 = row.coeffs.iter().zip(point).map(|(&a, &x)| a * x as i128).sum();
                lhs >= row.rhs
            })
    }

    /// Per-coordinate integer bounds of the feasible region, `None` when the
    /// region is empty. Errors if some coordinate is unbounded.
    pub fn bounding_box(&self) -> Result<Option<Vec<(i64, i64)>>, PolytopeError> {
        let mut bounds = Vec::with_capacity(self.dim);
        for var in 0..self.dim {
            match self.project_onto(var) {
                Projection::Empty => return Ok(None),
                Projection::Unbounded => return Err(PolytopeError::Unbounded(var)),
                Projection::Interval(lo, hi) => {
                    if lo > hi {
                        return Ok(None);
                    }
                    bounds.push((clamp_i64(lo), clamp_i64(hi)));
                }
            }
        }
        Ok(Some(bounds))
    }

    /// Whether the feasible region is bounded, ignoring emptiness.
    pub fn is_bounded(&self) -> bool {
        (0..self.dim).all(|var| !matches!(self.project_onto(var), Projection::Unbounded))
    }

    fn project_onto(&self, keep: usize) -> Projection {
        let mut rows: Vec<Row> = self.rows.iter().cloned().map(Row::normalized).collect();
        for var in (0..self.dim).filter(|&v| v != keep) {
            rows = eliminate(rows, var);
        }
        let mut lo: Option<i128> = None;
        let mut hi: Option<i128> = None;
        for row in &rows {
            let a = row.coeffs[keep];
            if a > 0 {
                let b = div_ceil(row.rhs, a);
                lo = Some(lo.map_or(b, |l| l.max(b)));
            } else if a < 0 {
                let b = div_floor(row.rhs, a);
                hi = Some(hi.map_or(b, |h| h.min(b)));
            } else if row.rhs > 0 {
                return Projection::Empty;
            }
        }
        match (lo, hi) {
            (Some(l), Some(h)) => Projection::Interval(l, h),
            _ => Projection::Unbounded,
        }
    }

    /// All integer points, in lexicographic order.
    pub fn points(&self, cap: u128) -> Result<Vec<Vec<i64>>, PolytopeError> {
        let mut out = Vec::new();
        self.search(cap, &mut |p| {
            out.push(p.to_vec());
            true
        })?;
        Ok(out)
    }

    /// Lexicographically first integer point.
    pub fn first_point(&self, cap: u128) -> Result<Option<Vec<i64>>, PolytopeError> {
        let mut found = None;
        self.search(cap, &mut |p| {
            found = Some(p.to_vec());
            false
        })?;
        Ok(found)
    }

    /// Visits integer points in lexicographic order until `visit` returns false.
    pub fn search<F>(&self, cap: u128, visit: &mut F) -> Result<(), PolytopeError>
    where
        F: FnMut(&[i64]) -> bool,
    {
        let Some(bounds) = self.bounding_box()? else {
            return Ok(());
        };
        let volume = bounds
            .iter()
            .fold(1u128, |acc, &(lo, hi)| acc.saturating_mul((hi - lo + 1) as u128));
        if volume > cap {
            return Err(PolytopeError::CapExceeded { volume, cap });
        }
        let mut point = Vec::with_capacity(self.dim);
        self.descend(&bounds, &mut point, visit);
        Ok(())
    }

    fn descend<F>(&self, bounds: &[(i64, i64)], point: &mut Vec<i64>, visit: &mut F) -> bool
    where
        F: FnMut(&[i64]) -> bool,
    {
        let level = point.len();
        if level == self.dim {
            return if self.is_satisfied(point) { visit(point) } else { true };
        }
        let (mut lo, mut hi) = (bounds[level].0 as i128, bounds[level].1 as i128);
        for row in &self.rows {
            let a = row.coeffs[level];
            if a == 0 {
                continue;
            }
            let mut residual = row.rhs;
            for (l, &c) in row.coeffs.iter().enumerate() {
                if l < level {
                    residual -= c * point[l] as i128;
                } else if l > level {
                    let (blo, bhi) = (bounds[l].0 as i128, bounds[l].1 as i128);
                    residual -= (c * blo).max(c * bhi);
                }
            }
            if a > 0 {
                lo = lo.max(div_ceil(residual, a));
            } else {
                hi = hi.min(div_floor(residual, a));
            }
            if lo > hi {
                return true;
            }
        }
        let mut value = lo;
        while value <= hi {
            point.push(value as i64);
            let keep_going = self.descend(bounds, point, visit);
            point.pop();
            if !keep_going {
                return false;
            }
            value += 1;
        }
        true
    }
}

enum Projection {
    Empty,
    Unbounded,
    Interval(i128, i128),
}

fn clamp_i64(v: i128) -> i64 {
    v.clamp(i64::MIN as i128 / 4, i64::MAX as i128 / 4) as i64
}

fn eliminate(rows: Vec<Row>, var: usize) -> Vec<Row> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out: Vec<Row> = Vec::new();
    for row in rows {
        match row.coeffs[var].signum() {
            1 => pos.push(row),
            -1 => neg.push(row),
            _ => out.push(row),
        }
    }
    for p in &pos {
        for n in &neg {
            let (pa, na) = (p.coeffs[var], -n.coeffs[var]);
            let coeffs = p
                .coeffs
                .iter()
                .zip(&n.coeffs)
                .map(|(&x, &y)| na * x + pa * y)
                .collect();
            let row = Row { coeffs, rhs: na * p.rhs + pa * n.rhs }.normalized();
            out.push(row);
        }
    }
    // keep only the strongest row per coefficient vector
    out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs).then(b.rhs.cmp(&a.rhs)));
    out.dedup_by(|later, earlier| later.coeffs == earlier.coeffs);
    // a trivial row records infeasibility only when its rhs is positive
    out.retain(|r| !r.is_trivial() || r.rhs > 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein(i1: i64, i2: i64, i3: i64) -> LinearSystem {
        let mut sys = LinearSystem::new(2);
        sys.at_least(&[3, 1], -i1).unwrap();
        sys.at_least(&[-1, 2], -i2).unwrap();
        sys.at_least(&[-2, -3], -i3).unwrap();
        sys
    }

    fn brute(sys: &LinearSystem, radius: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for a in -radius..=radius {
            for b in -radius..=radius {
                if sys.is_satisfied(&[a, b]) {
                    out.push(vec![a, b]);
                }
            }
        }
        out
    }

    #[test]
    fn klein_exact_pole_three() {
        let mut sys = LinearSystem::new(2);
        sys.equal_to(&[3, 1], -3).unwrap();
        sys.at_least(&[-1, 2], 0).unwrap();
        sys.at_least(&[-2, -3], 0).unwrap();
        assert_eq!(sys.points(DEFAULT_BOX_CAP).unwrap(), vec![vec![-1, 0]]);

        let mut zero = LinearSystem::new(2);
        zero.equal_to(&[3, 1], 0).unwrap();
        zero.at_least(&[-1, 2], 0).unwrap();
        zero.at_least(&[-2, -3], 0).unwrap();
        assert_eq!(zero.points(DEFAULT_BOX_CAP).unwrap(), vec![vec![0, 0]]);
    }

    #[test]
    fn infeasible_is_empty() {
        let mut sys = LinearSystem::new(2);
        sys.at_least(&[1, 0], 3).unwrap();
        sys.at_least(&[-1, 0], -2).unwrap();
        sys.at_least(&[0, 1], 0).unwrap();
        sys.at_least(&[0, -1], 0).unwrap();
        assert!(sys.points(DEFAULT_BOX_CAP).unwrap().is_empty());
        assert_eq!(sys.first_point(DEFAULT_BOX_CAP).unwrap(), None);
    }

    #[test]
    fn unbounded_is_reported() {
        let mut sys = LinearSystem::new(2);
        sys.at_least(&[1, 0], 0).unwrap();
        sys.at_least(&[-1, 0], 0).unwrap();
        assert_eq!(sys.points(DEFAULT_BOX_CAP), Err(PolytopeError::Unbounded(1)));
        assert!(!sys.is_bounded());
        assert!(klein(0, 0, 0).is_bounded());
    }

    #[test]
    fn cap_is_enforced() {
        let mut sys = LinearSystem::new(2);
        for v in 0..2 {
            let mut c = vec![0; 2];
            c[v] = 1;
            sys.at_least(&c, -1000).unwrap();
            c[v] = -1;
            sys.at_least(&c, -1000).unwrap();
        }
        assert!(matches!(
            sys.points(1000),
            Err(PolytopeError::CapExceeded { volume: 4_004_001, cap: 1000 })
        ));
    }

    #[test]
    fn matches_brute_force_on_klein_boxes() {
        for (i1, i2, i3) in [(0, 0, 0), (5, 0, 0), (10, 3, 0), (29, 4, 0), (7, 7, 7), (-3, 5, 1)] {
            let sys = klein(i1, i2, i3);
            assert_eq!(sys.points(DEFAULT_BOX_CAP).unwrap(), brute(&sys, 60), "{i1},{i2},{i3}");
        }
    }

    #[test]
    fn dimension_mismatch() {
        let mut sys = LinearSystem::new(3);
        assert!(matches!(
            sys.at_least(&[1, 2], 0),
            Err(PolytopeError::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn three_dimensional_simplex() {
        let mut sys = LinearSystem::new(3);
        for v in 0..3 {
            sys.variable_at_least(v, 0);
        }
        sys.at_least(&[-1, -1, -1], -4).unwrap();
        // points with a+b+c <= 4 in the positive octant: C(7,3)
        assert_eq!(sys.points(DEFAULT_BOX_CAP).unwrap().len(), 35);
    }
}
