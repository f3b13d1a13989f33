use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const RETRY_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    #[default]
    None,
    Connected,
    PseudoConnected,
}

impl Constraint {
    pub fn admits(self, g: &Graph) -> bool {
        match self {
            Constraint::None => true,
            Constraint::Connected => g.is_connected(),
            Constraint::PseudoConnected => g.is_pseudo_connected(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub n: usize,
    pub p_edge: f64,
    pub p_loop: f64,
    pub seed: u64,
    #[serde(default)]
    pub require: Constraint,
}

impl GeneratorConfig {
    pub fn new(n: usize, p_edge: f64, p_loop: f64, seed: u64) -> Self {
        GeneratorConfig {
            n,
            p_edge,
            p_loop,
            seed,
            require: Constraint::None,
        }
    }

    pub fn requiring(self, require: Constraint) -> Self {
        GeneratorConfig { require, ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::NoVertices);
        }
        for (name, value) in [("p_edge", self.p_edge), ("p_loop", self.p_loop)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::InvalidProbability { name, value });
            }
        }
        Ok(())
    }
}

fn sample(cfg: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(cfg.n).expect("n validated");
    for i in 1..=cfg.n {
        if rng.gen_bool(cfg.p_loop) {
            g.add_edge(i, i).expect("fresh loop");
        }
        for j in (i + 1)..=cfg.n {
            if rng.gen_bool(cfg.p_edge) {
                g.add_edge(i, j).expect("fresh pair");
            }
        }
    }
    g
}

/// Erdős–Rényi style graph with independent loops, resampled until the
/// constraint holds. Deterministic in `cfg.seed`.
pub fn random_graph(cfg: &GeneratorConfig) -> Result<Graph> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..RETRY_CAP {
        let g = sample(cfg, &mut rng);
        if cfg.require.admits(&g) {
            return Ok(g);
        }
    }
    Err(Error::RetryCapExhausted {
        attempts: RETRY_CAP,
        seed: cfg.seed,
    })
}
