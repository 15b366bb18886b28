use std::cell::RefCell;

use bitvec::vec::BitVec;
use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;
use rustc_hash::FxHashMap;

use super::rng::{stream_rng, word_below};
use crate::lattice::TorusGeometry;

/// Read access to a site-occupancy state on a torus.
pub trait Occupancy {
    fn geometry(&self) -> &TorusGeometry;
    fn is_occupied(&self, site: u64) -> bool;
}

/// How a configuration was drawn.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sampling {
    pub p: f64,
    pub seed: u64,
    pub stream: u64,
}

/// One configuration stored as a bitset over all `L^d` sites.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    geometry: TorusGeometry,
    occupied: BitVec,
    sampling: Option<Sampling>,
}

impl Configuration {
    /// I.i.d. Bernoulli(p) occupancy keyed by `(seed, stream)`.
    pub fn sample(geometry: &TorusGeometry, p: f64, seed: u64, stream: u64) -> Self {
        assert!((0.0..=1.0).contains(&p), "p = {p} outside [0, 1]");
        let mut rng = stream_rng(seed, stream);
        let occupied = (0..geometry.num_sites()).map(|_| word_below(rng.next_u64(), p)).collect();
        Configuration { geometry: geometry.clone(), occupied, sampling: Some(Sampling { p, seed, stream }) }
    }

    /// Explicit configuration with exactly `sites` occupied.
    pub fn from_occupied(geometry: &TorusGeometry, sites: impl IntoIterator<Item = u64>) -> Self {
        let mut occupied = BitVec::repeat(false, geometry.num_sites() as usize);
        for s in sites {
            occupied.set(s as usize, true);
        }
        Configuration { geometry: geometry.clone(), occupied, sampling: None }
    }

    pub fn sampling(&self) -> Option<Sampling> {
        self.sampling
    }

    pub fn count_occupied(&self) -> usize {
        self.occupied.count_ones()
    }

    pub fn set(&mut self, site: u64, value: bool) {
        self.occupied.set(site as usize, value);
    }
}

impl Occupancy for Configuration {
    fn geometry(&self) -> &TorusGeometry {
        &self.geometry
    }

    #[inline]
    fn is_occupied(&self, site: u64) -> bool {
        self.occupied[site as usize]
    }
}

/// The same configuration as [`Configuration::sample`], but each site is
/// drawn on first access. Suited to boxes far too large to store whose
/// relevant part is a small cluster.
#[derive(Debug)]
pub struct LazyConfiguration {
    geometry: TorusGeometry,
    sampling: Sampling,
    rng: RefCell<ChaCha8Rng>,
    cache: RefCell<FxHashMap<u64, bool>>,
}

impl LazyConfiguration {
    pub fn new(geometry: &TorusGeometry, p: f64, seed: u64, stream: u64) -> Self {
        assert!((0.0..=1.0).contains(&p), "p = {p} outside [0, 1]");
        LazyConfiguration {
            geometry: geometry.clone(),
            sampling: Sampling { p, seed, stream },
            rng: RefCell::new(stream_rng(seed, stream)),
            cache: RefCell::new(FxHashMap::default()),
        }
    }

    pub fn sampling(&self) -> Sampling {
        self.sampling
    }

    /// Number of distinct sites drawn so far.
    pub fn sites_drawn(&self) -> usize {
        self.cache.borrow().len()
    }
}

impl Occupancy for LazyConfiguration {
    fn geometry(&self) -> &TorusGeometry {
        &self.geometry
    }

    fn is_occupied(&self, site: u64) -> bool {
        if let Some(&v) = self.cache.borrow().get(&site) {
            return v;
        }
        let word = {
            let mut rng = self.rng.borrow_mut();
            rng.set_word_pos(2 * u128::from(site));
            rng.next_u64()
        };
        let v = word_below(word, self.sampling.p);
        self.cache.borrow_mut().insert(site, v);
        v
    }
}

impl<T: Occupancy + ?Sized> Occupancy for &T {
    fn geometry(&self) -> &TorusGeometry {
        (**self).geometry()
    }

    fn is_occupied(&self, site: u64) -> bool {
        (**self).is_occupied(site)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        let g = TorusGeometry::new(2, 8).unwrap();
        assert_eq!(Configuration::sample(&g, 0.0, 1, 0).count_occupied(), 0);
        assert_eq!(Configuration::sample(&g, 1.0, 1, 0).count_occupied(), 64);
    }

    #[test]
    fn deterministic() {
        let g = TorusGeometry::new(3, 6).unwrap();
        assert_eq!(Configuration::sample(&g, 0.3, 9, 4), Configuration::sample(&g, 0.3, 9, 4));
        assert_ne!(Configuration::sample(&g, 0.3, 9, 4), Configuration::sample(&g, 0.3, 9, 5));
    }

    #[test]
    fn lazy_matches_dense_bit_for_bit() {
        let g = TorusGeometry::new(3, 8).unwrap();
        for stream in 0..5 {
            let dense = Configuration::sample(&g, 0.37, 21, stream);
            let lazy = LazyConfiguration::new(&g, 0.37, 21, stream);
            // reverse order so random access is exercised
            for s in (0..g.num_sites()).rev() {
                assert_eq!(dense.is_occupied(s), lazy.is_occupied(s));
            }
            assert_eq!(lazy.sites_drawn(), 512);
        }
    }

    #[test]
    fn density_is_close_to_p() {
        let g = TorusGeometry::new(2, 64).unwrap();
        let c = Configuration::sample(&g, 0.25, 3, 0);
        let frac = c.count_occupied() as f64 / 4096.0;
        assert!((frac - 0.25).abs() < 0.03, "{frac}");
    }
}
