use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use smallvec::SmallVec;

use super::rational::Rational;
use crate::error::{Error, Result};

pub(crate) type Coeffs = SmallVec<[Rational; 4]>;

/// Reduction data for one conductor: the cyclotomic polynomial and the
/// power-basis images of `x^k` for every exponent a product can produce.
pub(crate) struct Conductor {
    pub n: u32,
    pub degree: usize,
    /// `reduce[k]` is `x^k mod Φ_n` in the power basis, for `k < 2·degree`.
    reduce: Vec<Vec<i64>>,
}

fn int_poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = *den.last().expect("non-empty divisor");
    assert!(lead == 1 || lead == -1);
    let mut quot = vec![0i64; num.len() + 1 - dl];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dl - 1] * lead;
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Integer coefficients of Φ_n, lowest degree first.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let n = n as usize;
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = int_poly_div_exact(&poly, &cyclotomic_polynomial(d as u32));
        }
    }
    poly
}

impl Conductor {
    fn build(n: u32) -> Conductor {
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        let mut reduce: Vec<Vec<i64>> = Vec::with_capacity(2 * degree);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..(2 * degree).max(n as usize + 1) {
            reduce.push(cur.clone());
            // multiply by x and reduce the overflow coefficient with Φ_n
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c -= top * phi[i];
                }
            }
        }
        Conductor { n, degree, reduce }
    }

    pub fn get(n: u32) -> &'static Conductor {
        static TABLE: OnceLock<Mutex<HashMap<u32, &'static Conductor>>> = OnceLock::new();
        let table = TABLE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = table.lock().expect("conductor table poisoned");
        guard
            .entry(n)
            .or_insert_with(|| Box::leak(Box::new(Conductor::build(n))))
    }

    /// `x^k mod Φ_n` for `0 <= k <= max(2·degree − 1, n)`.
    pub fn power(&self, k: usize) -> &[i64] {
        &self.reduce[k]
    }
}

/// Element of ℚ(ζ_n) in the power basis `1, ζ, …, ζ^{φ(n)−1}`.
#[derive(Clone)]
pub struct Cyclotomic {
    pub(crate) cond: &'static Conductor,
    pub(crate) coeffs: Coeffs,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.cond.n == other.cond.n && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cond.n.hash(state);
        self.coeffs.hash(state);
    }
}

impl Cyclotomic {
    /// Builds an element from power-basis coefficients; the vector length
    /// must be φ(n).
    pub fn new(n: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("conductor must be positive".into()));
        }
        let cond = Conductor::get(n);
        if coeffs.len() != cond.degree {
            return Err(Error::Domain(format!(
                "conductor {n} needs {} coefficients, got {}",
                cond.degree,
                coeffs.len()
            )));
        }
        Ok(Cyclotomic {
            cond,
            coeffs: coeffs.into_iter().collect(),
        })
    }

    #[cfg(test)]
    pub(crate) fn from_rational(n: u32, r: &Rational) -> Self {
        let cond = Conductor::get(n);
        let mut coeffs: Coeffs = SmallVec::from_elem(Rational::zero(), cond.degree);
        coeffs[0] = r.clone();
        Cyclotomic { cond, coeffs }
    }

    /// ζ_n^k reduced into the power basis.
    pub(crate) fn zeta_power(n: u32, k: i64) -> Self {
        let cond = Conductor::get(n);
        let e = k.rem_euclid(n as i64) as usize;
        let coeffs = cond
            .power(e)
            .iter()
            .map(|&c| Rational::from_int(c))
            .collect();
        Cyclotomic { cond, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.cond.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// True when only the constant coefficient can be nonzero.
    pub(crate) fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.cond.n != other.cond.n {
            Err(Error::ConductorMismatch(self.cond.n, other.cond.n))
        } else {
            Ok(())
        }
    }

    pub(crate) fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            cond: self.cond,
            coeffs: self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub(crate) fn neg(&self) -> Self {
        Cyclotomic {
            cond: self.cond,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub(crate) fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            cond: self.cond,
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    pub(crate) fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.cond.degree;
        let mut prod: SmallVec<[Rational; 8]> = SmallVec::from_elem(Rational::zero(), 2 * d - 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = &prod[i + j] + &(a * b);
                }
            }
        }
        let mut out: Coeffs = SmallVec::from_elem(Rational::zero(), d);
        for (k, c) in prod.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < d {
                out[k] = &out[k] + c;
            } else {
                for (l, &r) in self.cond.power(k).iter().enumerate() {
                    if r != 0 {
                        out[l] = &out[l] + &(c * &Rational::from_int(r));
                    }
                }
            }
        }
        Ok(Cyclotomic {
            cond: self.cond,
            coeffs: out,
        })
    }

    /// Multiplicative inverse by solving the multiplication-by-self system.
    pub(crate) fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.cond.degree;
        // column j of the matrix is self·ζ^j
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            let basis = Cyclotomic::zeta_power(self.cond.n, j as i64);
            cols.push(self.mul(&basis).expect("same conductor"));
        }
        // augmented rows: [M | e_0]
        let mut rows: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c.coeffs[i].clone()).collect();
                row.push(if i == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !rows[r][col].is_zero())?;
            rows.swap(col, piv);
            let inv = rows[col][col].recip()?;
            for x in rows[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..d {
                if r != col && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for c in col..=d {
                        let t = &rows[col][c] * &f;
                        rows[r][c] = &rows[r][c] - &t;
                    }
                }
            }
        }
        Some(Cyclotomic {
            cond: self.cond,
            coeffs: rows.into_iter().map(|mut r| r.pop().unwrap()).collect(),
        })
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.cond.n;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = a.is_one();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !unit {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "z{n}")?;
                    } else {
                        write!(f, "z{n}^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
