//! Braiding backends: the symmetric flip of vector spaces and the
//! Yetter–Drinfel'd braiding of right crossed modules over a Hopf algebra.

use std::collections::BTreeMap;

use super::diagram::{chain, id, mp, Diagram};
use super::linmap::{flip, invert, LinMap};
use super::space::{describe, SpaceLabel};
use crate::error::{Error, Result};
use crate::structures::{check_crossed_module, HopfAlgebraData};

/// A right crossed module registered with a Yetter–Drinfel'd provider.
#[derive(Clone, Debug)]
pub struct YdModule {
    pub space: SpaceLabel,
    /// Right action `X ⊗ H → X`.
    pub action: LinMap,
    /// Right coaction `X → X ⊗ H`.
    pub coaction: LinMap,
}

#[derive(Clone, Debug)]
pub struct YdCategory {
    host: HopfAlgebraData,
    modules: BTreeMap<String, YdModule>,
}

#[derive(Clone, Debug, Default)]
pub enum BraidingProvider {
    #[default]
    VectFlip,
    YetterDrinfeld(Box<YdCategory>),
}

impl BraidingProvider {
    pub fn yetter_drinfeld(host: HopfAlgebraData) -> Self {
        BraidingProvider::YetterDrinfeld(Box::new(YdCategory {
            host,
            modules: BTreeMap::new(),
        }))
    }

    pub fn is_flip(&self) -> bool {
        matches!(self, BraidingProvider::VectFlip)
    }

    pub fn host(&self) -> Option<&HopfAlgebraData> {
        match self {
            BraidingProvider::VectFlip => None,
            BraidingProvider::YetterDrinfeld(c) => Some(&c.host),
        }
    }

    pub fn module(&self, name: &str) -> Option<&YdModule> {
        match self {
            BraidingProvider::VectFlip => None,
            BraidingProvider::YetterDrinfeld(c) => c.modules.get(name),
        }
    }

    /// Registered modules in name order.
    pub fn modules(&self) -> Vec<&YdModule> {
        match self {
            BraidingProvider::VectFlip => vec![],
            BraidingProvider::YetterDrinfeld(c) => c.modules.values().collect(),
        }
    }

    /// Registers a right crossed module; the crossed-module identity must
    /// hold exactly.
    pub fn register(&mut self, module: YdModule) -> Result<()> {
        let BraidingProvider::YetterDrinfeld(cat) = self else {
            return Err(Error::Configuration(
                "the flip backend takes no registrations".into(),
            ));
        };
        let report =
            check_crossed_module(&module.space, &module.action, &module.coaction, &cat.host)?;
        if !report.passed() {
            return Err(Error::Configuration(format!(
                "`{}` is not a right crossed module: {}",
                module.space.name,
                report.failure_summary()
            )));
        }
        cat.modules.insert(module.space.name.clone(), module);
        Ok(())
    }

    fn elementary(&self, x: &SpaceLabel, y: &SpaceLabel) -> Result<LinMap> {
        match self {
            BraidingProvider::VectFlip => {
                Ok(flip(std::slice::from_ref(x), std::slice::from_ref(y)))
            }
            BraidingProvider::YetterDrinfeld(cat) => {
                let get = |s: &SpaceLabel| {
                    cat.modules
                        .get(&s.name)
                        .filter(|m| m.space == *s)
                        .ok_or_else(|| {
                            Error::Configuration(format!(
                                "space {s} is not registered with the braiding"
                            ))
                        })
                };
                let mx = get(x)?;
                let my = get(y)?;
                let h = cat.host.space().clone();
                chain(
                    &[x.clone(), y.clone()],
                    vec![
                        vec![id(1), mp(&my.coaction)],
                        vec![
                            mp(&flip(std::slice::from_ref(x), std::slice::from_ref(y))),
                            id(1),
                        ],
                        vec![id(1), mp(&mx.action)],
                    ],
                )
                .map_err(|e| Error::Configuration(format!("braiding over {h}: {e}")))
            }
        }
    }

    /// Ψ_{X,Y}: X ⊗ Y → Y ⊗ X for tensor products of registered spaces,
    /// assembled from elementary crossings by the hexagon rules.
    pub fn braid(&self, xs: &[SpaceLabel], ys: &[SpaceLabel]) -> Result<LinMap> {
        if self.is_flip() {
            return Ok(flip(xs, ys));
        }
        let mut input = xs.to_vec();
        input.extend(ys.iter().cloned());
        let mut d = Diagram::new(&input);
        let (a, b) = (xs.len(), ys.len());
        for i in (0..a).rev() {
            for j in 0..b {
                let cross = self.elementary(&xs[i], &ys[j])?;
                d = d.then(vec![id(i + j), mp(&cross), id(a + b - i - j - 2)])?;
            }
        }
        Ok(d.eval())
    }

    /// Ψ⁻¹_{X,Y}: Y ⊗ X → X ⊗ Y.
    pub fn braid_inv(&self, xs: &[SpaceLabel], ys: &[SpaceLabel]) -> Result<LinMap> {
        if self.is_flip() {
            return Ok(flip(ys, xs));
        }
        invert(&self.braid(xs, ys)?)
    }

    /// Ψ_{Y,X} ∘ Ψ_{X,Y} on X ⊗ Y.
    pub fn double_braid(&self, xs: &[SpaceLabel], ys: &[SpaceLabel]) -> Result<LinMap> {
        let a = self.braid(xs, ys)?;
        let b = self.braid(ys, xs)?;
        super::linmap::compose(&b, &a)
    }

    pub fn describe(&self) -> String {
        match self {
            BraidingProvider::VectFlip => "flip".into(),
            BraidingProvider::YetterDrinfeld(c) => format!(
                "Yetter-Drinfeld over {} with {}",
                c.host.space(),
                describe(
                    &c.modules
                        .values()
                        .map(|m| m.space.clone())
                        .collect::<Vec<_>>()
                )
            ),
        }
    }
}

/// Ψ_{X,Y} for two single spaces.
pub fn braiding(bp: &BraidingProvider, x: &SpaceLabel, y: &SpaceLabel) -> Result<LinMap> {
    bp.braid(std::slice::from_ref(x), std::slice::from_ref(y))
}
