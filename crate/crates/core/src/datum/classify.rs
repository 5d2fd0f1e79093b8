//! Trivalence, the 2×2 pattern classification and bialgebra assembly.

use std::fmt;

use serde::Serialize;

use super::{
    check_hopf_datum, induced_structures, product_label, recursion_order, HopfDatum, RecursionOrder,
};
use crate::error::{Error, Result};
use crate::structures::{
    check_axioms_with_braiding, classify_morphism, BialgebraData, BiunitalPair, MorphismClass,
    StructureKind,
};
use crate::tensor::{tensor, LinMap};

/// Which of `ν_l, ν_r, μ_l, μ_r` are nontrivial, written in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TrivalencePattern {
    pub nu_l: bool,
    pub nu_r: bool,
    pub mu_l: bool,
    pub mu_r: bool,
}

impl TrivalencePattern {
    pub fn from_code(code: &str) -> Option<Self> {
        let b: Vec<bool> = code
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<_>>()?;
        (b.len() == 4).then(|| TrivalencePattern {
            nu_l: b[0],
            nu_r: b[1],
            mu_l: b[2],
            mu_r: b[3],
        })
    }

    pub fn code(&self) -> String {
        [self.nu_l, self.nu_r, self.mu_l, self.mu_r]
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    pub fn nontrivial_count(&self) -> usize {
        [self.nu_l, self.nu_r, self.mu_l, self.mu_r]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    /// Vertical reflection with `1↔2` and `l↔r`.
    pub fn mirror(&self) -> Self {
        TrivalencePattern {
            nu_l: self.nu_r,
            nu_r: self.nu_l,
            mu_l: self.mu_r,
            mu_r: self.mu_l,
        }
    }

    /// Categorical duality exchanging actions and coactions.
    pub fn dual(&self) -> Self {
        TrivalencePattern {
            nu_l: self.mu_l,
            nu_r: self.mu_r,
            mu_l: self.nu_l,
            mu_r: self.nu_r,
        }
    }

    /// All patterns reachable by mirror and dual symmetry.
    pub fn orbit(&self) -> Vec<TrivalencePattern> {
        let mut out = vec![*self, self.mirror(), self.dual(), self.mirror().dual()];
        out.sort_by_key(|p| p.code());
        out.dedup();
        out
    }

    /// 2×2 table: top row `ν_l ν_r`, bottom row `μ_l μ_r`.
    pub fn table(&self) -> [[bool; 2]; 2] {
        [[self.nu_l, self.nu_r], [self.mu_l, self.mu_r]]
    }
}

impl fmt::Display for TrivalencePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    TensorProduct,
    Biproduct,
    DoubleCross,
    Bicross,
    General,
    NonTrivalent,
}

impl Family {
    /// Family of a pattern up to mirror and dual symmetry. A single
    /// nontrivial (co)action is filed under the biproduct family, of which
    /// it is a degenerate case.
    pub fn of(p: &TrivalencePattern) -> Family {
        match p.nontrivial_count() {
            0 => Family::TensorProduct,
            1 => Family::Biproduct,
            3 => Family::General,
            4 => Family::NonTrivalent,
            _ => match p.code().as_str() {
                "1010" | "0101" => Family::Biproduct,
                "0011" | "1100" => Family::DoubleCross,
                _ => Family::Bicross,
            },
        }
    }

    pub fn box_code(&self) -> &'static str {
        match self {
            Family::TensorProduct => "0000",
            Family::Biproduct => "1010",
            Family::DoubleCross => "0011",
            Family::Bicross => "1001",
            Family::General => "1101",
            Family::NonTrivalent => "1111",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::TensorProduct => "tensor-product",
            Family::Biproduct => "biproduct",
            Family::DoubleCross => "double-cross",
            Family::Bicross => "bicross",
            Family::General => "general",
            Family::NonTrivalent => "non-trivalent",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub pattern: String,
    pub family: Family,
    /// True for single-entry patterns, which are proper subcases of
    /// several boxes.
    pub degenerate: bool,
}

/// Canonical unit/counit tensor maps and their morphism properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalMaps {
    pub i1: MorphismClass,
    pub i2: MorphismClass,
    pub p1: MorphismClass,
    pub p2: MorphismClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trivalence {
    pub pattern: TrivalencePattern,
    pub trivalent: bool,
    /// Names among `i1, i2, p1, p2` that are algebra and coalgebra
    /// morphisms for the induced structures.
    pub witnesses: Vec<String>,
    pub maps: CanonicalMaps,
    /// Trivial (co)action exists ⇔ some canonical map is a bialgebra
    /// morphism in both senses.
    pub consistent: bool,
}

pub(crate) fn pattern_of(d: &HopfDatum) -> TrivalencePattern {
    let (nu_l, nu_r, mu_l, mu_r) = d.trivial_flags();
    TrivalencePattern {
        nu_l: !nu_l,
        nu_r: !nu_r,
        mu_l: !mu_l,
        mu_r: !mu_r,
    }
}

/// `i1 = id⊗η2`, `i2 = η1⊗id`, `p1 = id⊗ε2`, `p2 = ε1⊗id` as maps into and
/// out of the fused space `B1⊗B2`.
pub fn canonical_maps(d: &HopfDatum) -> Result<[LinMap; 4]> {
    let b = vec![product_label(d.s1(), d.s2())];
    let (b1, b2) = (&d.b1, &d.b2);
    let s1 = vec![d.s1().clone()];
    let s2 = vec![d.s2().clone()];
    Ok([
        tensor(&b1.identity(), &b2.eta).relabel(s1.clone(), b.clone())?,
        tensor(&b1.eta, &b2.identity()).relabel(s2.clone(), b.clone())?,
        tensor(&b1.identity(), &b2.eps).relabel(b.clone(), s1)?,
        tensor(&b1.eps, &b2.identity()).relabel(b, s2)?,
    ])
}

pub fn trivalence(d: &HopfDatum) -> Result<Trivalence> {
    let ind = induced_structures(d)?;
    let flat = ind.flatten(d)?;
    let pattern = pattern_of(d);
    let [i1, i2, p1, p2] = canonical_maps(d)?;
    let maps = CanonicalMaps {
        i1: classify_morphism(&i1, &d.b1, &flat)?,
        i2: classify_morphism(&i2, &d.b2, &flat)?,
        p1: classify_morphism(&p1, &flat, &d.b1)?,
        p2: classify_morphism(&p2, &flat, &d.b2)?,
    };
    let both = |m: &MorphismClass| m.is_algebra_morphism && m.is_coalgebra_morphism;
    let witnesses: Vec<String> = [
        ("i1", &maps.i1),
        ("i2", &maps.i2),
        ("p1", &maps.p1),
        ("p2", &maps.p2),
    ]
    .into_iter()
    .filter(|(_, m)| both(m))
    .map(|(n, _)| n.to_string())
    .collect();
    let trivalent = pattern.nontrivial_count() < 4;
    Ok(Trivalence {
        pattern,
        trivalent,
        consistent: trivalent == !witnesses.is_empty(),
        witnesses,
        maps,
    })
}

pub fn classify(d: &HopfDatum) -> Result<Classification> {
    let report = check_hopf_datum(d)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "not a Hopf datum: {}",
            report.failure_summary()
        )));
    }
    Ok(classify_pattern(&pattern_of(d)))
}

pub fn classify_pattern(p: &TrivalencePattern) -> Classification {
    Classification {
        pattern: p.code(),
        family: Family::of(p),
        degenerate: p.nontrivial_count() == 1,
    }
}

/// The bialgebra `B1⊗B2` of a recursive datum, verified before returning.
pub fn build_bialgebra(d: &HopfDatum) -> Result<BialgebraData> {
    let ind = induced_structures(d)?;
    if pattern_of(d).nontrivial_count() == 4 {
        let order = recursion_order(d, 8)?;
        if let RecursionOrder::NotRecursiveUpTo(n) = order.result {
            return Err(Error::Precondition(format!(
                "datum is not recursive up to order {n}"
            )));
        }
    }
    let flat: BiunitalPair = ind.flatten(d)?;
    let strands = d.strands();
    let b = [flat.space.clone()];
    let psi = d.braiding.braid(&strands, &strands)?.relabel(
        vec![b[0].clone(), b[0].clone()],
        vec![b[0].clone(), b[0].clone()],
    )?;
    let report = check_axioms_with_braiding(&flat, None, StructureKind::Bialgebra, &psi)?;
    if !report.passed() {
        return Err(Error::InternalConsistency(format!(
            "cross product fails bialgebra axioms: {}",
            report.failure_summary()
        )));
    }
    Ok(flat)
}
