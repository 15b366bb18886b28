//! Points of Z^d and the periodic box used to approximate it.

use std::fmt;

/// A point of Z^d.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(pub Vec<i32>);

impl Point {
    pub fn origin(d: usize) -> Self {
        Point(vec![0; d])
    }

    /// `sign * e_axis`
    pub fn unit(d: usize, axis: usize, sign: i32) -> Self {
        let mut c = vec![0; d];
        c[axis] = sign;
        Point(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn l1_norm(&self) -> u32 {
        self.0.iter().map(|c| c.unsigned_abs()).sum()
    }

    pub fn linf_norm(&self) -> u32 {
        self.0.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Point) -> Point {
        debug_assert_eq!(self.dim(), other.dim());
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Point) -> Point {
        debug_assert_eq!(self.dim(), other.dim());
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Point {
        Point(self.0.iter().map(|c| -c).collect())
    }

    /// The `2d` nearest neighbours, axis ascending, `-` before `+`.
    pub fn neighbors(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(2 * self.dim());
        for axis in 0..self.dim() {
            for delta in [-1, 1] {
                let mut c = self.0.clone();
                c[axis] += delta;
                out.push(Point(c));
            }
        }
        out
    }

    /// Parse `"1,1,0"` (surrounding parentheses optional).
    pub fn parse(text: &str) -> Option<Point> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let coords: Result<Vec<i32>, _> = inner.split(',').map(|s| s.trim().parse::<i32>()).collect();
        coords.ok().filter(|c| !c.is_empty()).map(Point)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("side length {0} must be even and at least 4")]
    BadSide(u32),
    #[error("{side}^{d} sites do not fit in a 64-bit index")]
    TooLarge { d: usize, side: u32 },
}

/// Periodic box `(Z / L Z)^d` with `L` even.
///
/// Sites are numbered `0..L^d` in mixed radix with axis 0 fastest. Points are
/// reduced into the window `[-L/2, L/2)` on every axis, so points close to the
/// origin keep their Z^d coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusGeometry {
    d: usize,
    side: u32,
    strides: Vec<u64>,
    num_sites: u64,
}

impl TorusGeometry {
    pub fn new(d: usize, side: u32) -> Result<Self, GeometryError> {
        if d == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        if side < 4 || !side.is_multiple_of(2) {
            return Err(GeometryError::BadSide(side));
        }
        let mut strides = Vec::with_capacity(d);
        let mut n: u64 = 1;
        for _ in 0..d {
            strides.push(n);
            n = n.checked_mul(u64::from(side)).ok_or(GeometryError::TooLarge { d, side })?;
        }
        Ok(TorusGeometry { d, side, strides, num_sites: n })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn side(&self) -> u32 {
        self.side
    }

    pub fn num_sites(&self) -> u64 {
        self.num_sites
    }

    /// Coordinate of `site` on `axis`, in `0..L`.
    #[inline]
    pub fn raw_coord(&self, site: u64, axis: usize) -> u32 {
        ((site / self.strides[axis]) % u64::from(self.side)) as u32
    }

    #[inline]
    fn reduce(&self, c: i64) -> i32 {
        let l = i64::from(self.side);
        let r = c.rem_euclid(l);
        (if r >= l / 2 { r - l } else { r }) as i32
    }

    pub fn site_index(&self, x: &Point) -> u64 {
        debug_assert_eq!(x.dim(), self.d);
        let l = i64::from(self.side);
        x.0.iter().zip(&self.strides).map(|(&c, &stride)| (i64::from(c).rem_euclid(l) as u64) * stride).sum()
    }

    pub fn site_point(&self, site: u64) -> Point {
        Point((0..self.d).map(|axis| self.reduce(i64::from(self.raw_coord(site, axis)))).collect())
    }

    pub fn origin(&self) -> u64 {
        0
    }

    /// Neighbour of `site` one step along `axis` in direction `delta` (±1).
    #[inline]
    pub fn step(&self, site: u64, axis: usize, delta: i32) -> u64 {
        let c = self.raw_coord(site, axis);
        let stride = self.strides[axis];
        let l = self.side;
        if delta > 0 {
            if c + 1 == l {
                site - u64::from(l - 1) * stride
            } else {
                site + stride
            }
        } else if c == 0 {
            site + u64::from(l - 1) * stride
        } else {
            site - stride
        }
    }

    /// Neighbours of `site` in the same order as [`Point::neighbors`].
    #[inline]
    pub fn neighbor_sites(&self, site: u64) -> impl Iterator<Item = u64> + '_ {
        (0..self.d).flat_map(move |axis| [self.step(site, axis, -1), self.step(site, axis, 1)])
    }

    /// Torus L1 distance from the origin.
    pub fn l1_of_site(&self, site: u64) -> u32 {
        (0..self.d).map(|axis| self.reduce(i64::from(self.raw_coord(site, axis))).unsigned_abs()).sum()
    }

    /// Site reached from `a` by the displacement `b - origin`, i.e. `a + b`.
    pub fn translate(&self, a: u64, b: u64) -> u64 {
        let l = u64::from(self.side);
        (0..self.d)
            .map(|axis| {
                ((u64::from(self.raw_coord(a, axis)) + u64::from(self.raw_coord(b, axis))) % l) * self.strides[axis]
            })
            .sum()
    }

    /// Displacement `b - a` as a site index.
    pub fn displacement(&self, a: u64, b: u64) -> u64 {
        let l = u64::from(self.side);
        (0..self.d)
            .map(|axis| {
                ((u64::from(self.raw_coord(b, axis)) + l - u64::from(self.raw_coord(a, axis))) % l) * self.strides[axis]
            })
            .sum()
    }
}

/// All points of Z^d with L1 norm at most `r`, sorted.
pub fn ball(d: usize, r: u32) -> Vec<Point> {
    fn fill(d: usize, remaining: i32, current: &mut Vec<i32>, out: &mut Vec<Point>) {
        if current.len() == d {
            out.push(Point(current.clone()));
            return;
        }
        for c in -remaining..=remaining {
            current.push(c);
            fill(d, remaining - c.abs(), current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    fill(d, r as i32, &mut Vec::with_capacity(d), &mut out);
    out
}
