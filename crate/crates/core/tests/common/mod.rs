#![allow(dead_code)]

use crossbial::scalar::{zeta_power, Scalar};
use crossbial::tensor::{total_dim, LinMap, SpaceLabel};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational, or an element of ℚ(ζ_n) when `conductor > 2`.
pub fn scalar(rng: &mut ChaCha8Rng, conductor: u32) -> Scalar {
    let num = rng.gen_range(-4i64..=4);
    let den = rng.gen_range(1i64..=3);
    let r = Scalar::ratio(num, den).unwrap();
    if conductor > 2 && rng.gen_bool(0.5) {
        let k = rng.gen_range(0..conductor as i64);
        let c = Scalar::from(rng.gen_range(-2i64..=2));
        &r + &(&c * &zeta_power(conductor, k).unwrap())
    } else {
        r
    }
}

pub fn nonzero_scalar(rng: &mut ChaCha8Rng, conductor: u32) -> Scalar {
    loop {
        let s = scalar(rng, conductor);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A random exact map; each entry is nonzero with probability `density`.
pub fn map(
    rng: &mut ChaCha8Rng,
    dom: &[SpaceLabel],
    cod: &[SpaceLabel],
    density: f64,
    conductor: u32,
) -> LinMap {
    let (rows, cols) = (total_dim(cod), total_dim(dom));
    let mut columns = Vec::with_capacity(cols);
    for _ in 0..cols {
        let mut col = Vec::new();
        for i in 0..rows {
            if rng.gen_bool(density) {
                col.push((i, nonzero_scalar(rng, conductor)));
            }
        }
        columns.push(col);
    }
    LinMap::from_columns(dom.to_vec(), cod.to_vec(), columns).unwrap()
}

pub fn space(name: &str, dim: usize) -> SpaceLabel {
    SpaceLabel::new(name, dim)
}
