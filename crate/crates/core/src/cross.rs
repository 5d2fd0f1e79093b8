//! Bialgebra admissible tuples, the cross product bialgebra they define,
//! and the decomposition of a bialgebra along projection/injection or
//! idempotent systems.

use serde::Serialize;

use crate::datum::{check_hopf_datum, induced_structures, product_label, trivalence, HopfDatum};
use crate::error::{Error, Result};
use crate::structures::{
    check_axioms, check_axioms_with_braiding, classify_morphism, morphism_report, BialgebraData,
    BiunitalPair, CheckReport, StructureKind,
};
use crate::tensor::sparse::Echelon;
use crate::tensor::{chain, compose, id, invert, mp, tensor, BraidingProvider, LinMap, SpaceLabel};

/// `(B1, B2, φ_{1,2}, φ_{2,1})`; only constructing the cross product tells
/// whether the tuple is admissible.
#[derive(Clone, Debug)]
pub struct Bat {
    pub b1: BiunitalPair,
    pub b2: BiunitalPair,
    /// `B1 ⊗ B2 → B2 ⊗ B1`
    pub phi12: LinMap,
    /// `B2 ⊗ B1 → B1 ⊗ B2`
    pub phi21: LinMap,
    pub braiding: BraidingProvider,
}

/// Algebra injections and coalgebra projections `B_j → A → B_j`.
#[derive(Clone, Debug)]
pub struct ProjectionSystem {
    pub a: BialgebraData,
    pub i1: LinMap,
    pub i2: LinMap,
    pub p1: LinMap,
    pub p2: LinMap,
}

/// Two idempotents on `A` to be split.
#[derive(Clone, Debug)]
pub struct IdempotentSystem {
    pub a: BialgebraData,
    pub pi1: LinMap,
    pub pi2: LinMap,
}

#[derive(Clone, Debug)]
pub enum System {
    Projection(ProjectionSystem),
    Idempotent(IdempotentSystem),
}

/// Result of [`decompose`]: the tuple, the projection system it came from
/// (after splitting idempotents if needed) and the isomorphism
/// `m_A∘(i1⊗i2): B1⊗B2 → A` on the fused space.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub bat: Bat,
    pub system: ProjectionSystem,
    pub iso: LinMap,
}

impl Bat {
    pub fn strands(&self) -> Vec<SpaceLabel> {
        vec![self.b1.space.clone(), self.b2.space.clone()]
    }

    /// `m_× = (m1⊗m2)∘(id⊗φ_{2,1}⊗id)` on the strands `B1⊗B2`.
    pub fn multiplication(&self) -> Result<LinMap> {
        let (s1, s2) = (self.b1.space.clone(), self.b2.space.clone());
        chain(
            &[s1.clone(), s2.clone(), s1, s2],
            vec![
                vec![id(1), mp(&self.phi21), id(1)],
                vec![mp(&self.b1.m), mp(&self.b2.m)],
            ],
        )
    }

    /// `Δ_× = (id⊗φ_{1,2}⊗id)∘(Δ1⊗Δ2)` on the strands `B1⊗B2`.
    pub fn comultiplication(&self) -> Result<LinMap> {
        chain(
            &self.strands(),
            vec![
                vec![mp(&self.b1.delta), mp(&self.b2.delta)],
                vec![id(1), mp(&self.phi12), id(1)],
            ],
        )
    }

    /// The product structure on the fused space `B1⊗B2` without checks.
    pub fn assemble(&self) -> Result<BiunitalPair> {
        let b = product_label(&self.b1.space, &self.b2.space);
        let fuse = |m: LinMap| {
            let k = |n: usize| vec![b.clone(); n / 2];
            let (d, c) = (k(m.dom().len()), k(m.cod().len()));
            m.relabel(d, c)
        };
        BiunitalPair::new(
            b.clone(),
            fuse(self.multiplication()?)?,
            fuse(tensor(&self.b1.eta, &self.b2.eta))?,
            fuse(self.comultiplication()?)?,
            fuse(tensor(&self.b1.eps, &self.b2.eps))?,
        )
    }

    fn psi(&self) -> Result<LinMap> {
        let s = self.strands();
        let b = product_label(&self.b1.space, &self.b2.space);
        self.braiding
            .braid(&s, &s)?
            .relabel(vec![b.clone(), b.clone()], vec![b.clone(), b])
    }
}

/// Builds `B1 ⊗ B2` with the cross product structure and verifies every
/// bialgebra axiom.
pub fn build_cross_product(t: &Bat) -> Result<BialgebraData> {
    for (name, b) in [("B1", &t.b1), ("B2", &t.b2)] {
        b.check_shapes()?;
        if compose(&b.eps, &b.eta)? != LinMap::identity(&[]) {
            return Err(Error::Precondition(format!("ε∘η ≠ id on {name}")));
        }
    }
    let out = t.assemble()?;
    let report = check_axioms_with_braiding(&out, None, StructureKind::Bialgebra, &t.psi()?)?;
    if let Some(f) = report.failures().next() {
        let detail = match &f.counterexample {
            Some(c) => format!(
                " at input {:?} output {:?}: {} vs {}",
                c.input, c.output, c.lhs, c.rhs
            ),
            None => String::new(),
        };
        return Err(Error::NotABat {
            axiom: f.axiom.clone(),
            detail,
        });
    }
    Ok(out)
}

/// The Hopf datum of a tuple: actions and coactions obtained by capping
/// the φ's with units and counits.
pub fn bat_to_hopf_datum(t: &Bat) -> Result<HopfDatum> {
    build_cross_product(t)?;
    let (b1, b2) = (&t.b1, &t.b2);
    let d = HopfDatum {
        mu_l: compose(&tensor(&b1.identity(), &b2.eps), &t.phi21)?,
        mu_r: compose(&tensor(&b1.eps, &b2.identity()), &t.phi21)?,
        nu_l: compose(&t.phi12, &tensor(&b1.identity(), &b2.eta))?,
        nu_r: compose(&t.phi12, &tensor(&b1.eta, &b2.identity()))?,
        b1: b1.clone(),
        b2: b2.clone(),
        braiding: t.braiding.clone(),
    };
    let report = check_hopf_datum(&d)?;
    if !report.passed() {
        return Err(Error::InternalConsistency(format!(
            "tuple yields no Hopf datum: {}",
            report.failure_summary()
        )));
    }
    let ind = induced_structures(&d)?;
    if ind.phi12 != t.phi12 || ind.phi21 != t.phi21 {
        return Err(Error::InternalConsistency(
            "datum does not reproduce the φ's of the tuple".into(),
        ));
    }
    Ok(d)
}

/// The tuple whose cross product is the datum's bialgebra.
pub fn hopf_datum_to_bat(d: &HopfDatum) -> Result<Bat> {
    let ind = induced_structures(d)?;
    Ok(Bat {
        b1: d.b1.clone(),
        b2: d.b2.clone(),
        phi12: ind.phi12,
        phi21: ind.phi21,
        braiding: d.braiding.clone(),
    })
}

/// Rank factorization `Π = inj∘proj` with `proj∘inj = id` on a new space.
pub fn split_idempotent(pi: &LinMap, name: &str) -> Result<(LinMap, LinMap)> {
    let a = pi.dom().to_vec();
    if pi.cod() != a.as_slice() || a.len() != 1 {
        return Err(Error::shape(
            "endomorphism of a single space",
            crate::tensor::describe(pi.dom()),
        ));
    }
    if compose(pi, pi)? != *pi {
        return Err(Error::InvalidSystem(format!("{name}: Π∘Π ≠ Π")));
    }
    // pivot columns of Π span its image
    let mut ech = Echelon::new();
    let mut pivots = Vec::new();
    for j in 0..pi.ncols() {
        if ech.insert(pi.column(j).to_vec()) {
            pivots.push(j);
        }
    }
    if pivots.is_empty() {
        return Err(Error::InvalidSystem(format!("{name}: Π = 0")));
    }
    let b = SpaceLabel::new(name, pivots.len());
    let inj = LinMap::from_columns(
        vec![b.clone()],
        a.clone(),
        pivots.iter().map(|&j| pi.column(j).to_vec()).collect(),
    )?;
    // proj = (inj restricted to its pivot rows)⁻¹ ∘ Π
    let rows = row_pivots(&inj);
    let sq = LinMap::from_fn(vec![b.clone()], vec![b.clone()], |i, j| {
        inj.entry(rows[i], j)
    });
    let sq_inv = invert(&sq)?;
    let sel = LinMap::from_fn(a.clone(), vec![b.clone()], |i, j| {
        if rows[i] == j {
            crate::Scalar::one()
        } else {
            crate::Scalar::zero()
        }
    });
    let proj = compose(&sq_inv, &compose(&sel, pi)?)?;
    if compose(&proj, &inj)? != LinMap::identity(&[b]) || compose(&inj, &proj)? != *pi {
        return Err(Error::InternalConsistency(format!(
            "{name}: rank factorization failed"
        )));
    }
    Ok((inj, proj))
}

/// Rows of a full-column-rank map forming an invertible square block.
fn row_pivots(m: &LinMap) -> Vec<usize> {
    let t = m.transpose();
    let mut ech = Echelon::new();
    let mut rows = Vec::new();
    for i in 0..t.ncols() {
        if ech.insert(t.column(i).to_vec()) {
            rows.push(i);
        }
    }
    rows
}

/// Structure induced on `B_j` through `B_j → A → B_j`.
fn induced_factor(a: &BialgebraData, i: &LinMap, p: &LinMap) -> Result<BiunitalPair> {
    let b = i.dom()[0].clone();
    BiunitalPair::new(
        b,
        compose(p, &compose(&a.m, &tensor(i, i))?)?,
        compose(p, &a.eta)?,
        compose(&tensor(p, p), &compose(&a.delta, i)?)?,
        compose(&a.eps, i)?,
    )
}

fn check_idempotent_system(sys: &IdempotentSystem) -> Result<()> {
    let a = &sys.a;
    let aa = [a.space.clone(), a.space.clone()];
    for (name, pi) in [("Π1", &sys.pi1), ("Π2", &sys.pi2)] {
        if compose(pi, pi)? != *pi {
            return Err(Error::InvalidSystem(format!("{name} is not idempotent")));
        }
        let pp = tensor(pi, pi);
        let conds = [
            (
                "m∘(Π⊗Π) = Π∘m∘(Π⊗Π)",
                compose(&a.m, &pp)?,
                compose(pi, &compose(&a.m, &pp)?)?,
            ),
            ("Π∘η = η", compose(pi, &a.eta)?, a.eta.clone()),
            (
                "(Π⊗Π)∘Δ = (Π⊗Π)∘Δ∘Π",
                compose(&pp, &a.delta)?,
                compose(&pp, &compose(&a.delta, pi)?)?,
            ),
            ("ε∘Π = ε", compose(&a.eps, pi)?, a.eps.clone()),
        ];
        for (c, l, r) in conds {
            if l != r {
                return Err(Error::InvalidSystem(format!("{name}: {c} fails")));
            }
        }
    }
    let p12 = tensor(&sys.pi1, &sys.pi2);
    let s = compose(&a.m, &p12)?;
    let r = compose(&p12, &a.delta)?;
    if compose(&s, &r)? != a.identity() {
        return Err(Error::NotASplitting("m∘(Π1⊗Π2)∘(Π1⊗Π2)∘Δ ≠ id".into()));
    }
    if compose(&r, &s)? != p12 {
        return Err(Error::NotASplitting(format!(
            "(Π1⊗Π2)∘Δ∘m∘(Π1⊗Π2) ≠ Π1⊗Π2 on {}",
            crate::tensor::describe(&aa)
        )));
    }
    Ok(())
}

/// Splits both idempotents and returns the equivalent projection system.
pub fn split_system(sys: &IdempotentSystem) -> Result<ProjectionSystem> {
    check_idempotent_system(sys)?;
    let (i1, p1) = split_idempotent(&sys.pi1, "B1")?;
    let (i2, p2) = split_idempotent(&sys.pi2, "B2")?;
    Ok(ProjectionSystem {
        a: sys.a.clone(),
        i1,
        i2,
        p1,
        p2,
    })
}

impl ProjectionSystem {
    /// The factors `B1`, `B2` with their induced structures.
    pub fn factors(&self) -> Result<(BiunitalPair, BiunitalPair)> {
        Ok((
            induced_factor(&self.a, &self.i1, &self.p1)?,
            induced_factor(&self.a, &self.i2, &self.p2)?,
        ))
    }

    /// `Π_j = i_j∘p_j`.
    pub fn idempotents(&self) -> Result<(LinMap, LinMap)> {
        Ok((compose(&self.i1, &self.p1)?, compose(&self.i2, &self.p2)?))
    }

    /// `m_A∘(i1⊗i2)` on the strands `B1⊗B2`.
    pub fn multiply_in(&self) -> Result<LinMap> {
        compose(&self.a.m, &tensor(&self.i1, &self.i2))
    }

    /// `(p1⊗p2)∘Δ_A` onto the strands `B1⊗B2`.
    pub fn split_out(&self) -> Result<LinMap> {
        compose(&tensor(&self.p1, &self.p2), &self.a.delta)
    }

    fn validate(&self, b1: &BiunitalPair, b2: &BiunitalPair) -> Result<()> {
        let a = &self.a;
        let flip = BraidingProvider::VectFlip;
        let base = check_axioms(a, None, StructureKind::Bialgebra, &flip)?;
        if !base.passed() {
            return Err(Error::Precondition(format!(
                "A is not a bialgebra: {}",
                base.failure_summary()
            )));
        }
        for (name, b, i, p) in [("1", b1, &self.i1, &self.p1), ("2", b2, &self.i2, &self.p2)] {
            if compose(p, i)? != b.identity() {
                return Err(Error::InvalidSystem(format!("p{name}∘i{name} ≠ id")));
            }
            if !classify_morphism(i, b, a)?.is_algebra_morphism {
                return Err(Error::InvalidSystem(format!(
                    "i{name} is not an algebra morphism"
                )));
            }
            if !classify_morphism(p, a, b)?.is_coalgebra_morphism {
                return Err(Error::InvalidSystem(format!(
                    "p{name} is not a coalgebra morphism"
                )));
            }
        }
        let into = self.multiply_in()?;
        let out = self.split_out()?;
        if compose(&into, &out)? != a.identity() {
            return Err(Error::NotASplitting(
                "m_A∘(i1⊗i2)∘(p1⊗p2)∘Δ_A ≠ id_A".into(),
            ));
        }
        if compose(&out, &into)? != LinMap::identity(&[b1.space.clone(), b2.space.clone()]) {
            return Err(Error::NotASplitting("(p1⊗p2)∘Δ_A∘m_A∘(i1⊗i2) ≠ id".into()));
        }
        Ok(())
    }
}

/// Writes `A` as a cross product `B1 ⊗ B2`. All preconditions are verified
/// and the resulting tuple is rebuilt and compared with `A` through the
/// isomorphism.
pub fn decompose(sys: &System) -> Result<Decomposition> {
    let ps = match sys {
        System::Projection(p) => p.clone(),
        System::Idempotent(s) => split_system(s)?,
    };
    let (b1, b2) = ps.factors()?;
    ps.validate(&b1, &b2)?;
    let a = &ps.a;
    let into = ps.multiply_in()?;
    let out = ps.split_out()?;
    let phi12 = chain(
        &[b1.space.clone(), b2.space.clone()],
        vec![
            vec![mp(&into)],
            vec![mp(&a.delta)],
            vec![mp(&ps.p2), mp(&ps.p1)],
        ],
    )?;
    let phi21 = chain(
        &[b2.space.clone(), b1.space.clone()],
        vec![vec![mp(&ps.i2), mp(&ps.i1)], vec![mp(&a.m)], vec![mp(&out)]],
    )?;
    let bat = Bat {
        b1,
        b2,
        phi12,
        phi21,
        braiding: BraidingProvider::VectFlip,
    };
    let built = build_cross_product(&bat)?;
    let iso = into.relabel(vec![built.space.clone()], vec![a.space.clone()])?;
    let check = morphism_report(&iso, &built, a)?;
    if !check.passed() {
        return Err(Error::InternalConsistency(format!(
            "m_A∘(i1⊗i2) is not a bialgebra morphism: {}",
            check.failure_summary()
        )));
    }
    Ok(Decomposition {
        bat,
        system: ps,
        iso,
    })
}

/// Verdicts of the three equivalent characterizations of trivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivalentVerdicts {
    pub datum_trivalent: bool,
    pub morphism_witness: bool,
    pub idempotent_witness: bool,
    pub pattern: String,
}

impl TrivalentVerdicts {
    pub fn agree(&self) -> bool {
        self.datum_trivalent == self.morphism_witness
            && self.morphism_witness == self.idempotent_witness
    }
}

pub const VERDICT_DATUM: &str = "induced Hopf datum is trivalent";
pub const VERDICT_MORPHISM: &str = "some i_j or p_j is an algebra and coalgebra morphism";
pub const VERDICT_IDEMPOTENT: &str = "some Π_j is an algebra or coalgebra morphism";
pub const VERDICT_AGREE: &str = "characterizations agree";

pub fn trivalent_verdicts(sys: &ProjectionSystem) -> Result<TrivalentVerdicts> {
    let dec = decompose(&System::Projection(sys.clone()))?;
    let datum = bat_to_hopf_datum(&dec.bat)?;
    let tri = trivalence(&datum)?;
    let (b1, b2) = sys.factors()?;
    let a = &sys.a;
    let both = |f: &LinMap, s: &BiunitalPair, d: &BiunitalPair| -> Result<bool> {
        let c = classify_morphism(f, s, d)?;
        Ok(c.is_algebra_morphism && c.is_coalgebra_morphism)
    };
    let morphism_witness = both(&sys.i1, &b1, a)?
        || both(&sys.i2, &b2, a)?
        || both(&sys.p1, a, &b1)?
        || both(&sys.p2, a, &b2)?;
    let (pi1, pi2) = sys.idempotents()?;
    let either = |f: &LinMap| -> Result<bool> {
        let c = classify_morphism(f, a, a)?;
        Ok(c.is_algebra_morphism || c.is_coalgebra_morphism)
    };
    let idempotent_witness = either(&pi1)? || either(&pi2)?;
    Ok(TrivalentVerdicts {
        datum_trivalent: tri.trivalent,
        morphism_witness,
        idempotent_witness,
        pattern: tri.pattern.code(),
    })
}

/// Evaluates the three characterizations of trivalence and whether they
/// agree.
pub fn verify_trivalent_equivalences(sys: &ProjectionSystem) -> Result<CheckReport> {
    let v = trivalent_verdicts(sys)?;
    let mut r = CheckReport::new();
    r.push_flag(VERDICT_DATUM, v.datum_trivalent);
    r.push_flag(VERDICT_MORPHISM, v.morphism_witness);
    r.push_flag(VERDICT_IDEMPOTENT, v.idempotent_witness);
    r.push_flag(VERDICT_AGREE, v.agree());
    Ok(r)
}
