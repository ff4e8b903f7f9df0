//! Exact linear algebra for the conic criterion: the dimension of the space
//! of plane conics through a finite set of points with rational homogeneous
//! coordinates.
//!
//! A point imposes one linear condition on the six coefficients of a conic;
//! the answer is `6 - rank` of the evaluation matrix of the degree-2
//! monomial basis at the points.  The rank is computed by fraction-free
//! (Bareiss) elimination over arbitrary-precision integers after clearing
//! denominators row by row.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A plane point in exact rational homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePoint {
    coords: [BigRational; 3],
}

impl PlanePoint {
    pub fn new(x: BigRational, y: BigRational, z: BigRational) -> Result<Self> {
        let coords = [x, y, z];
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::BadPoint);
        }
        Ok(PlanePoint { coords })
    }

    pub fn from_integers(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new(
            BigRational::from_integer(x.into()),
            BigRational::from_integer(y.into()),
            BigRational::from_integer(z.into()),
        )
    }

    pub fn coords(&self) -> &[BigRational; 3] {
        &self.coords
    }

    /// Evaluation row in the monomial basis `x², xy, xz, y², yz, z²`,
    /// scaled to integers (homogeneity makes the scale irrelevant).
    fn monomial_row(&self) -> Vec<BigInt> {
        let [x, y, z] = &self.coords;
        let row = [x * x, x * y, x * z, y * y, y * z, z * z];
        let lcm = row.iter().fold(BigInt::one(), |acc, v| {
            num::integer::lcm(acc, v.denom().clone())
        });
        row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
    }
}

/// Rank of an integer matrix by fraction-free Gaussian elimination.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut col = 0;
    while rank < rows && col < cols {
        // Pivot search in the current column, preferring small entries to
        // keep intermediate values modest.
        let pivot = (rank..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs());
        let Some(pivot) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&num % &prev).is_zero());
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// Dimension of the vector space of conics through the given points:
/// `6 - rank` of the evaluation matrix.  Generic points each drop the
/// dimension by one; six points on a common conic leave dimension 1.
pub fn conic_space_dim(points: &[PlanePoint]) -> Result<usize> {
    for p in points {
        if p.coords.iter().all(|c| c.is_zero()) {
            return Err(Error::BadPoint);
        }
    }
    let matrix: Vec<Vec<BigInt>> = points.iter().map(PlanePoint::monomial_row).collect();
    Ok(6 - bareiss_rank(matrix))
}
