use std::ops::RangeInclusive;

use hyperprod_core::Hypergraph;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::HarnessError;

pub type TrialRng = ChaCha8Rng;

/// Parameters of the random hypergraph generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    pub vertices: RangeInclusive<usize>,
    pub edges: RangeInclusive<usize>,
    pub edge_size: RangeInclusive<usize>,
    /// No edge inside another and no edge smaller than two.
    pub simple: bool,
    pub connected: bool,
    pub loop_free: bool,
    /// Every vertex lies in some edge.
    pub no_isolated: bool,
    pub seed: u64,
    pub max_attempts: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            vertices: 1..=5,
            edges: 0..=5,
            edge_size: 1..=3,
            simple: false,
            connected: false,
            loop_free: false,
            no_isolated: false,
            seed: 0,
            max_attempts: 10_000,
        }
    }
}

impl GenParams {
    pub fn new(vertices: RangeInclusive<usize>, edges: RangeInclusive<usize>, edge_size: RangeInclusive<usize>) -> Self {
        GenParams { vertices, edges, edge_size, ..GenParams::default() }
    }

    pub fn simple(mut self) -> Self {
        self.simple = true;
        self.loop_free = true;
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn loop_free(mut self) -> Self {
        self.loop_free = true;
        self
    }

    pub fn no_isolated(mut self) -> Self {
        self.no_isolated = true;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn accepts(&self, h: &Hypergraph<usize>) -> bool {
        self.edges.contains(&h.edge_count())
            && (!self.simple || h.is_simple())
            && (!self.loop_free || !h.has_loops())
            && (!self.connected || h.is_connected())
            && (!self.no_isolated || !h.has_isolated_vertices())
    }
}

/// Draws a hypergraph from `rng` satisfying every flag of `params`; the
/// seed field is ignored.
pub fn generate_with(rng: &mut impl Rng, params: &GenParams) -> Result<Hypergraph<usize>, HarnessError> {
    if params.vertices.is_empty() || params.edges.is_empty() || params.edge_size.is_empty() {
        return Err(HarnessError::EmptyRange);
    }
    for _ in 0..params.max_attempts {
        let n = rng.gen_range(params.vertices.clone());
        let m = rng.gen_range(params.edges.clone());
        let lo = (*params.edge_size.start()).max(if params.loop_free { 2 } else { 1 });
        let hi = (*params.edge_size.end()).min(n);
        if m > 0 && lo > hi {
            continue;
        }
        let edges: Vec<Vec<usize>> = (0..m)
            .map(|_| {
                let size = rng.gen_range(lo..=hi);
                let mut e = sample(rng, n, size).into_vec();
                e.sort_unstable();
                e
            })
            .collect();
        let h = Hypergraph::new(0..n, edges).expect("indices are in range");
        if params.accepts(&h) {
            return Ok(h);
        }
    }
    Err(HarnessError::GenerationTimeout(params.max_attempts))
}

/// Deterministic generation from `params.seed`.
///
/// ```
/// use hyperprod::harness::{generate, GenParams};
/// let p = GenParams::new(3..=3, 1..=3, 2..=2).connected().seed(1);
/// let h = generate(&p).unwrap();
/// assert!(h.is_connected());
/// assert_eq!(generate(&p).unwrap(), h);
/// ```
pub fn generate(params: &GenParams) -> Result<Hypergraph<usize>, HarnessError> {
    generate_with(&mut ChaCha8Rng::seed_from_u64(params.seed), params)
}

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `index` of check `id`: independent of scheduling.
pub fn trial_seed(master: u64, id: &str, index: u64) -> u64 {
    let tag = id
        .bytes()
        .fold(0xCBF2_9CE4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01B3));
    splitmix(splitmix(master ^ tag).wrapping_add(index.wrapping_mul(GOLDEN)))
}

pub fn trial_rng(master: u64, id: &str, index: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(trial_seed(master, id, index))
}
