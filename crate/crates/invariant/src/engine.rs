use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use pclink_shadow::{PDCode, PositiveDiagram};
use serde::{Deserialize, Serialize};

use crate::{
    bracket_naive, bracket_sweep, greedy_order, Coefficient, InvariantError, Laurent, Poly, DEFAULT_MAX_CROSSINGS,
    DEFAULT_MAX_WIDTH,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Naive,
    #[default]
    Sweep,
    /// Run both and fail on disagreement.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OrderStrategy {
    /// The order in which the crossings were generated.
    #[default]
    Natural,
    Greedy,
}

macro_rules! named_enum {
    ($ty:ty, $($variant:path => $name:literal),+) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($variant => $name),+ })
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s.to_ascii_lowercase().as_str() {
                    $($name => Ok($variant),)+
                    _ => Err(format!("unknown value {s:?}")),
                }
            }
        }
    };
}

named_enum!(Engine, Engine::Naive => "naive", Engine::Sweep => "sweep", Engine::Both => "both");
named_enum!(OrderStrategy, OrderStrategy::Natural => "natural", OrderStrategy::Greedy => "greedy");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub engine: Engine,
    pub order: OrderStrategy,
    pub max_crossings: usize,
    pub max_width: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            engine: Engine::default(),
            order: OrderStrategy::default(),
            max_crossings: DEFAULT_MAX_CROSSINGS,
            max_width: DEFAULT_MAX_WIDTH,
        }
    }
}

/// Construction order of the crossings, as indices into the PD tuples.
pub fn natural_order(d: &PositiveDiagram) -> Vec<usize> {
    let order = d.shadow().key_order();
    let mut rank = vec![0; order.len()];
    for (r, &x) in order.iter().enumerate() {
        rank[x] = r;
    }
    rank
}

/// Bracket of a PD code; the natural order is the order of its tuples.
pub fn bracket_pd<C: Coefficient>(pd: &PDCode, cfg: &EngineConfig) -> Result<Laurent<C>, InvariantError>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    let natural: Vec<usize> = (0..pd.crossings.len()).collect();
    bracket_with_order::<C>(pd, cfg, &natural)
}

fn bracket_with_order<C: Coefficient>(
    pd: &PDCode,
    cfg: &EngineConfig,
    natural: &[usize],
) -> Result<Laurent<C>, InvariantError>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    let sweep = || {
        let order = match cfg.order {
            OrderStrategy::Natural => natural.to_vec(),
            OrderStrategy::Greedy => greedy_order(pd),
        };
        bracket_sweep::<C>(pd, &order, cfg.max_width).map(|(b, _)| b)
    };
    match cfg.engine {
        Engine::Naive => bracket_naive::<C>(pd, cfg.max_crossings),
        Engine::Sweep => sweep(),
        Engine::Both => {
            let a = bracket_naive::<C>(pd, cfg.max_crossings)?;
            let b = sweep()?;
            if a != b {
                return Err(InvariantError::EngineMismatch { naive: a.to_string(), sweep: b.to_string() });
            }
            Ok(a)
        }
    }
}

pub fn bracket<C: Coefficient>(d: &PositiveDiagram, cfg: &EngineConfig) -> Result<Laurent<C>, InvariantError>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    bracket_with_order::<C>(&d.pd_code(), cfg, &natural_order(d))
}

/// `(-A)^(-3w) ⟨D⟩`.
pub fn normalise<C: Coefficient>(bracket: &Laurent<C>, writhe: i64) -> Laurent<C>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    let shifted = bracket.shift(-3 * writhe);
    if writhe.rem_euclid(2) == 1 {
        -shifted
    } else {
        shifted
    }
}

pub fn jones_with<C: Coefficient>(d: &PositiveDiagram, cfg: &EngineConfig) -> Result<Laurent<C>, InvariantError>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    Ok(normalise::<C>(&bracket::<C>(d, cfg)?, d.writhe()))
}

/// Jones polynomial (in `A`) with the default engine settings.
pub fn jones(d: &PositiveDiagram) -> Result<Poly, InvariantError> {
    jones_with::<BigInt>(d, &EngineConfig::default())
}

/// Jones polynomial of a PD code whose writhe is known.
pub fn jones_pd<C: Coefficient>(pd: &PDCode, writhe: i64, cfg: &EngineConfig) -> Result<Laurent<C>, InvariantError>
where
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    Ok(normalise::<C>(&bracket_pd::<C>(pd, cfg)?, writhe))
}

#[cfg(test)]
mod tests {
    use super::*;
    use pclink_shadow::{orient_positive, ring_shadow};
    use pclink_word::Word;

    fn hopf() -> PositiveDiagram {
        orient_positive(&ring_shadow(2).unwrap(), &"01".parse::<Word>().unwrap()).unwrap()
    }

    #[test]
    fn positive_hopf_jones() {
        let v = jones(&hopf()).unwrap();
        let expected = Poly::from_terms([(-2, BigInt::from(-1)), (-10, BigInt::from(-1))]);
        assert_eq!(v, expected);
        assert_eq!(v.to_t_string(), "-t^(1/2) - t^(5/2)");
    }

    #[test]
    fn engines_agree_on_hopf() {
        for engine in [Engine::Naive, Engine::Sweep, Engine::Both] {
            for order in [OrderStrategy::Natural, OrderStrategy::Greedy] {
                let cfg = EngineConfig { engine, order, ..EngineConfig::default() };
                assert_eq!(jones_with::<BigInt>(&hopf(), &cfg).unwrap(), jones(&hopf()).unwrap());
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for e in [Engine::Naive, Engine::Sweep, Engine::Both] {
            assert_eq!(e.to_string().parse::<Engine>().unwrap(), e);
        }
        assert_eq!("GREEDY".parse::<OrderStrategy>().unwrap(), OrderStrategy::Greedy);
        assert!("fast".parse::<Engine>().is_err());
    }

    #[test]
    fn natural_order_is_a_permutation() {
        let d = orient_positive(&ring_shadow(4).unwrap(), &"0110".parse::<Word>().unwrap()).unwrap();
        let mut o = natural_order(&d);
        o.sort_unstable();
        assert_eq!(o, (0..12).collect::<Vec<_>>());
    }
}
