//! Workspace files: named spaces, structures and maps, plus composite
//! objects that refer to them by name. Stored as canonical JSON with
//! sorted keys and normalized scalars.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::path::Path;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use serde_json::Value;

use crossbial::cross::{Bat, IdempotentSystem, ProjectionSystem, System};
use crossbial::datum::HopfDatum;
use crossbial::structures::{BialgebraData, BiunitalPair, HopfAlgebraData};
use crossbial::tensor::{BraidingProvider, LinMapWire, YdModule};
use crossbial::twisting::{DoubleBiproductInput, DualPairing, TwoCocycle};
use crossbial::{Error, LinMap, Result, SpaceLabel};

pub const WORKSPACE_SCHEMA: &str = "crossbial-workspace/1";

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureEntry {
    pub space: String,
    pub m: LinMapWire,
    pub eta: LinMapWire,
    pub delta: LinMapWire,
    pub eps: LinMapWire,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<LinMapWire>,
}

/// Right crossed module registered with a Yetter–Drinfel'd braiding.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleEntry {
    pub space: String,
    pub action: String,
    pub coaction: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BraidingEntry {
    Flip,
    YetterDrinfeld {
        host: String,
        modules: Vec<ModuleEntry>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumEntry {
    pub b1: String,
    pub b2: String,
    pub mu_l: String,
    pub nu_l: String,
    pub mu_r: String,
    pub nu_r: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SystemEntry {
    Projection {
        a: String,
        i1: String,
        i2: String,
        p1: String,
        p2: String,
    },
    Idempotent {
        a: String,
        pi1: String,
        pi2: String,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleEntry {
    pub b1: String,
    pub b2: String,
    pub phi12: String,
    pub phi21: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleEntry {
    pub host: String,
    pub chi: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairingEntry {
    pub h: String,
    pub a: String,
    pub form: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DoubleBiproductEntry {
    pub h: String,
    pub b: String,
    pub b_action: String,
    pub b_coaction: String,
    pub c: String,
    pub c_action: String,
    pub c_coaction: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
}

type Table<T> = BTreeMap<String, T>;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Workspace {
    pub schema: String,
    /// `n` of the field ℚ(ζ_n); 1 for ℚ.
    pub conductor: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub spaces: Vec<SpaceLabel>,
    #[serde(
        default,
        skip_serializing_if = "Table::is_empty",
        deserialize_with = "unique"
    )]
    pub structures: Table<StructureEntry>,
    #[serde(
        default,
        skip_serializing_if = "Table::is_empty",
        deserialize_with = "unique"
    )]
    pub maps: Table<LinMapWire>,
    #[serde(
        default,
        skip_serializing_if = "Table::is_empty",
        deserialize_with = "unique"
    )]
    pub braidings: Table<BraidingEntry>,
    #[serde(
        default,
        skip_serializing_if = "Table::is_empty",
        deserialize_with = "unique"
    )]
    pub data: Table<DatumEntry>,
    #[serde(
        default,
        skip_serializing_if = "Table::is_empty",
        deserialize_with = "unique"
    )]
    pub systems: Table<SystemEntry>,
    #[serde(
        default,
        skip_serializing_if = "Table::is_empty",
        deserialize_with = "unique"
    )]
    pub tuples: Table<TupleEntry>,
    #[serde(
        default,
        skip_serializing_if = "Table::is_empty",
        deserialize_with = "unique"
    )]
    pub cocycles: Table<CocycleEntry>,
    #[serde(
        default,
        skip_serializing_if = "Table::is_empty",
        deserialize_with = "unique"
    )]
    pub pairings: Table<PairingEntry>,
    #[serde(
        default,
        skip_serializing_if = "Table::is_empty",
        deserialize_with = "unique"
    )]
    pub double_biproducts: Table<DoubleBiproductEntry>,
    /// Entry used when a command is not told which one to take, keyed by
    /// table name.
    #[serde(
        default,
        skip_serializing_if = "Table::is_empty",
        deserialize_with = "unique"
    )]
    pub defaults: Table<String>,
}

/// Rejects duplicate keys instead of letting the last one win.
fn unique<'de, D, T>(d: D) -> std::result::Result<Table<T>, D::Error>
where
    D: Deserializer<'de>,
    T: Deserialize<'de>,
{
    struct V<T>(PhantomData<T>);
    impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
        type Value = Table<T>;
        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("an object with unique keys")
        }
        fn visit_map<A: MapAccess<'de>>(self, mut a: A) -> std::result::Result<Table<T>, A::Error> {
            let mut out = Table::new();
            while let Some(k) = a.next_key::<String>()? {
                if out.contains_key(&k) {
                    return Err(serde::de::Error::custom(format!("duplicate name `{k}`")));
                }
                let v = a.next_value()?;
                out.insert(k, v);
            }
            Ok(out)
        }
    }
    d.deserialize_map(V(PhantomData))
}

/// JSON pointer segment escaping.
fn esc(s: &str) -> String {
    s.replace('~', "~0").replace('/', "~1")
}

fn pointer(parts: &[&str]) -> String {
    parts.iter().map(|p| format!("/{}", esc(p))).collect()
}

fn parse_err(ptr: String, e: impl fmt::Display) -> Error {
    Error::Parse {
        pointer: ptr,
        message: e.to_string(),
    }
}

fn missing(kind: &str, name: &str) -> Error {
    Error::Configuration(format!("no {kind} named `{name}` in the workspace"))
}

impl Default for Workspace {
    fn default() -> Self {
        Workspace {
            schema: WORKSPACE_SCHEMA.into(),
            conductor: 1,
            spaces: vec![],
            structures: Table::new(),
            maps: Table::new(),
            braidings: Table::new(),
            data: Table::new(),
            systems: Table::new(),
            tuples: Table::new(),
            cocycles: Table::new(),
            pairings: Table::new(),
            double_biproducts: Table::new(),
            defaults: Table::new(),
        }
    }
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses and validates a workspace document. Every error carries the
    /// JSON pointer of the offending value.
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let ws: Workspace = serde_path_to_error::deserialize(de).map_err(|e| {
            let ptr = e
                .path()
                .iter()
                .map(|seg| {
                    use serde_path_to_error::Segment::*;
                    match seg {
                        Seq { index } => format!("/{index}"),
                        Map { key } => format!("/{}", esc(key)),
                        Enum { variant } => format!("/{}", esc(variant)),
                        Unknown => "/?".into(),
                    }
                })
                .collect::<String>();
            parse_err(ptr, e.inner())
        })?;
        ws.validate()?;
        Ok(ws)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Configuration(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Canonical text: sorted keys, two-space indentation, trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let v = serde_json::to_value(self).map_err(|e| Error::Configuration(e.to_string()))?;
        Ok(canonical_json(&v))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()?)
            .map_err(|e| Error::Configuration(format!("cannot write {}: {e}", path.display())))
    }

    fn validate(&self) -> Result<()> {
        if self.schema != WORKSPACE_SCHEMA {
            return Err(parse_err(
                "/schema".into(),
                format!("expected `{WORKSPACE_SCHEMA}`, found `{}`", self.schema),
            ));
        }
        if self.conductor == 0 {
            return Err(parse_err("/conductor".into(), "conductor must be positive"));
        }
        let mut seen = BTreeMap::new();
        for (i, s) in self.spaces.iter().enumerate() {
            let ptr = format!("/spaces/{i}");
            if s.dim == 0 {
                return Err(parse_err(ptr, "space dimension must be positive"));
            }
            if seen.insert(s.name.clone(), s.dim).is_some() {
                return Err(parse_err(ptr, format!("duplicate space `{}`", s.name)));
            }
        }
        for (name, s) in &self.structures {
            let ptr = |f: &str| pointer(&["structures", name, f]);
            if !seen.contains_key(&s.space) {
                return Err(parse_err(
                    ptr("space"),
                    format!("unknown space `{}`", s.space),
                ));
            }
            for (field, w) in s.wires() {
                self.check_wire(w, &ptr(field))?;
            }
            self.structure(name)
                .map_err(|e| parse_err(pointer(&["structures", name]), e))?;
        }
        for (name, w) in &self.maps {
            self.check_wire(w, &pointer(&["maps", name]))?;
        }
        let refs = |table: &str, name: &str, r: Result<()>| {
            r.map_err(|e| parse_err(pointer(&[table, name]), e))
        };
        for name in self.braidings.keys() {
            refs("braidings", name, self.braiding(name).map(drop))?;
        }
        for name in self.data.keys() {
            refs("data", name, self.datum(name).map(drop))?;
        }
        for name in self.systems.keys() {
            refs("systems", name, self.system(name).map(drop))?;
        }
        for name in self.tuples.keys() {
            refs("tuples", name, self.tuple(name).map(drop))?;
        }
        for name in self.cocycles.keys() {
            refs("cocycles", name, self.cocycle(name).map(drop))?;
        }
        for name in self.pairings.keys() {
            refs("pairings", name, self.pairing(name).map(drop))?;
        }
        for name in self.double_biproducts.keys() {
            refs(
                "double_biproducts",
                name,
                self.double_biproduct(name).map(drop),
            )?;
        }
        for (table, name) in &self.defaults {
            if !self.names(table)?.contains(name) {
                return Err(parse_err(
                    pointer(&["defaults", table]),
                    format!("no entry `{name}` in `{table}`"),
                ));
            }
        }
        Ok(())
    }

    /// Labels resolve, the matrix has the right shape and every irrational
    /// scalar lives in the declared field.
    fn check_wire(&self, w: &LinMapWire, ptr: &str) -> Result<()> {
        for (i, row) in w.matrix.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if let Some(c) = x.conductor() {
                    if c != self.conductor {
                        return Err(parse_err(
                            format!("{ptr}/matrix/{i}/{j}"),
                            format!(
                                "scalar lies in ℚ(ζ_{c}) but the workspace conductor is {}",
                                self.conductor
                            ),
                        ));
                    }
                }
            }
        }
        self.resolve(w)
            .map(drop)
            .map_err(|e| parse_err(ptr.into(), e))
    }

    pub fn names(&self, table: &str) -> Result<Vec<String>> {
        fn keys<T>(t: &Table<T>) -> Vec<String> {
            t.keys().cloned().collect()
        }
        Ok(match table {
            "structures" => keys(&self.structures),
            "maps" => keys(&self.maps),
            "braidings" => keys(&self.braidings),
            "data" => keys(&self.data),
            "systems" => keys(&self.systems),
            "tuples" => keys(&self.tuples),
            "cocycles" => keys(&self.cocycles),
            "pairings" => keys(&self.pairings),
            "double_biproducts" => keys(&self.double_biproducts),
            _ => return Err(Error::Configuration(format!("unknown table `{table}`"))),
        })
    }

    /// The explicitly requested entry, else the table's default, else the
    /// only entry.
    pub fn pick(&self, table: &str, requested: Option<&str>) -> Result<String> {
        if let Some(r) = requested {
            return Ok(r.to_string());
        }
        if let Some(d) = self.defaults.get(table) {
            return Ok(d.clone());
        }
        let names = self.names(table)?;
        match names.as_slice() {
            [one] => Ok(one.clone()),
            [] => Err(Error::Configuration(format!(
                "the workspace has no {table}"
            ))),
            _ => Err(Error::Configuration(format!(
                "the workspace has several {table} ({}); choose one",
                names.join(", ")
            ))),
        }
    }

    pub fn space(&self, name: &str) -> Option<SpaceLabel> {
        self.spaces.iter().find(|s| s.name == name).cloned()
    }

    fn resolve(&self, w: &LinMapWire) -> Result<LinMap> {
        w.clone().resolve(|n| self.space(n))
    }

    pub fn map(&self, name: &str) -> Result<LinMap> {
        let w = self.maps.get(name).ok_or_else(|| missing("map", name))?;
        self.resolve(w)
    }

    pub fn structure(&self, name: &str) -> Result<(BiunitalPair, Option<LinMap>)> {
        let s = self
            .structures
            .get(name)
            .ok_or_else(|| missing("structure", name))?;
        let space = self
            .space(&s.space)
            .ok_or_else(|| missing("space", &s.space))?;
        let pair = BiunitalPair::new(
            space,
            self.resolve(&s.m)?,
            self.resolve(&s.eta)?,
            self.resolve(&s.delta)?,
            self.resolve(&s.eps)?,
        )?;
        let antipode = s.antipode.as_ref().map(|w| self.resolve(w)).transpose()?;
        if let Some(a) = &antipode {
            HopfAlgebraData::new(pair.clone(), a.clone())?;
        }
        Ok((pair, antipode))
    }

    pub fn bialgebra(&self, name: &str) -> Result<BialgebraData> {
        Ok(self.structure(name)?.0)
    }

    pub fn hopf(&self, name: &str) -> Result<HopfAlgebraData> {
        match self.structure(name)? {
            (b, Some(s)) => HopfAlgebraData::new(b, s),
            (_, None) => Err(Error::Configuration(format!(
                "structure `{name}` has no antipode"
            ))),
        }
    }

    pub fn braiding(&self, name: &str) -> Result<BraidingProvider> {
        match self
            .braidings
            .get(name)
            .ok_or_else(|| missing("braiding", name))?
        {
            BraidingEntry::Flip => Ok(BraidingProvider::VectFlip),
            BraidingEntry::YetterDrinfeld { host, modules } => {
                let mut bp = BraidingProvider::yetter_drinfeld(self.hopf(host)?);
                for m in modules {
                    bp.register(YdModule {
                        space: self
                            .space(&m.space)
                            .ok_or_else(|| missing("space", &m.space))?,
                        action: self.map(&m.action)?,
                        coaction: self.map(&m.coaction)?,
                    })?;
                }
                Ok(bp)
            }
        }
    }

    pub fn braiding_or_flip(&self, name: Option<&str>) -> Result<BraidingProvider> {
        name.map_or(Ok(BraidingProvider::VectFlip), |n| self.braiding(n))
    }

    pub fn datum(&self, name: &str) -> Result<HopfDatum> {
        let e = self.data.get(name).ok_or_else(|| missing("datum", name))?;
        let d = HopfDatum {
            b1: self.bialgebra(&e.b1)?,
            b2: self.bialgebra(&e.b2)?,
            mu_l: self.map(&e.mu_l)?,
            nu_l: self.map(&e.nu_l)?,
            mu_r: self.map(&e.mu_r)?,
            nu_r: self.map(&e.nu_r)?,
            braiding: self.braiding_or_flip(e.braiding.as_deref())?,
        };
        d.check_shapes()?;
        Ok(d)
    }

    pub fn system(&self, name: &str) -> Result<System> {
        Ok(
            match self
                .systems
                .get(name)
                .ok_or_else(|| missing("system", name))?
            {
                SystemEntry::Projection { a, i1, i2, p1, p2 } => {
                    System::Projection(ProjectionSystem {
                        a: self.bialgebra(a)?,
                        i1: self.map(i1)?,
                        i2: self.map(i2)?,
                        p1: self.map(p1)?,
                        p2: self.map(p2)?,
                    })
                }
                SystemEntry::Idempotent { a, pi1, pi2 } => System::Idempotent(IdempotentSystem {
                    a: self.bialgebra(a)?,
                    pi1: self.map(pi1)?,
                    pi2: self.map(pi2)?,
                }),
            },
        )
    }

    pub fn tuple(&self, name: &str) -> Result<Bat> {
        let e = self
            .tuples
            .get(name)
            .ok_or_else(|| missing("tuple", name))?;
        Ok(Bat {
            b1: self.bialgebra(&e.b1)?,
            b2: self.bialgebra(&e.b2)?,
            phi12: self.map(&e.phi12)?,
            phi21: self.map(&e.phi21)?,
            braiding: self.braiding_or_flip(e.braiding.as_deref())?,
        })
    }

    pub fn cocycle(&self, name: &str) -> Result<TwoCocycle> {
        let e = self
            .cocycles
            .get(name)
            .ok_or_else(|| missing("cocycle", name))?;
        TwoCocycle::with_braiding(
            self.bialgebra(&e.host)?,
            self.map(&e.chi)?,
            self.braiding_or_flip(e.braiding.as_deref())?,
        )
    }

    pub fn pairing(&self, name: &str) -> Result<(DualPairing, BraidingProvider)> {
        let e = self
            .pairings
            .get(name)
            .ok_or_else(|| missing("pairing", name))?;
        let p = DualPairing::new(
            self.bialgebra(&e.h)?,
            self.bialgebra(&e.a)?,
            self.map(&e.form)?,
        )?;
        Ok((p, self.braiding_or_flip(e.braiding.as_deref())?))
    }

    pub fn double_biproduct(&self, name: &str) -> Result<DoubleBiproductInput> {
        let e = self
            .double_biproducts
            .get(name)
            .ok_or_else(|| missing("double biproduct input", name))?;
        Ok(DoubleBiproductInput {
            h: self.hopf(&e.h)?,
            b: self.bialgebra(&e.b)?,
            b_action: self.map(&e.b_action)?,
            b_coaction: self.map(&e.b_coaction)?,
            c: self.bialgebra(&e.c)?,
            c_action: self.map(&e.c_action)?,
            c_coaction: self.map(&e.c_coaction)?,
            rho: e.rho.as_deref().map(|r| self.map(r)).transpose()?,
        })
    }

    fn add_space(&mut self, s: &SpaceLabel) -> Result<()> {
        match self.space(&s.name) {
            Some(t) if t.dim != s.dim => Err(Error::Configuration(format!(
                "space `{}` already has dimension {}",
                s.name, t.dim
            ))),
            Some(_) => Ok(()),
            None => {
                self.spaces.push(s.clone());
                Ok(())
            }
        }
    }

    fn note_conductor(&mut self, f: &LinMap) -> Result<()> {
        for col in f.columns() {
            for (_, x) in col.iter() {
                if let Some(c) = x.conductor() {
                    if self.conductor == 1 {
                        self.conductor = c;
                    } else if self.conductor != c {
                        return Err(Error::ConductorMismatch(self.conductor, c));
                    }
                }
            }
        }
        Ok(())
    }

    fn wire(&mut self, f: &LinMap) -> Result<LinMapWire> {
        for s in f.dom().iter().chain(f.cod()) {
            self.add_space(s)?;
        }
        self.note_conductor(f)?;
        Ok(LinMapWire::from(f))
    }

    pub fn add_map(&mut self, name: &str, f: &LinMap) -> Result<String> {
        let w = self.wire(f)?;
        self.maps.insert(name.into(), w);
        Ok(name.into())
    }

    pub fn add_structure(
        &mut self,
        name: &str,
        s: &BiunitalPair,
        antipode: Option<&LinMap>,
    ) -> Result<String> {
        self.add_space(&s.space)?;
        let e = StructureEntry {
            space: s.space.name.clone(),
            m: self.wire(&s.m)?,
            eta: self.wire(&s.eta)?,
            delta: self.wire(&s.delta)?,
            eps: self.wire(&s.eps)?,
            antipode: antipode.map(|a| self.wire(a)).transpose()?,
        };
        self.structures.insert(name.into(), e);
        Ok(name.into())
    }

    /// Name of a structure equal to `s` (an entry with an antipode counts),
    /// adding one under the space's name when there is none.
    pub fn intern_structure(&mut self, s: &BiunitalPair) -> Result<String> {
        for name in self.structures.keys() {
            if self.bialgebra(name).as_ref() == Ok(s) {
                return Ok(name.clone());
            }
        }
        let mut name = s.space.name.clone();
        let mut k = 2;
        while self.structures.contains_key(&name) {
            name = format!("{}#{k}", s.space.name);
            k += 1;
        }
        self.add_structure(&name, s, None)
    }

    fn add_hopf_interned(&mut self, h: &HopfAlgebraData) -> Result<String> {
        for name in self.structures.keys() {
            if self.hopf(name).as_ref() == Ok(h) {
                return Ok(name.clone());
            }
        }
        let name = self.intern_structure(&h.bialgebra)?;
        self.add_structure(&name, &h.bialgebra, Some(&h.antipode))
    }

    /// Stores a braiding and returns its name; the flip is not stored.
    pub fn add_braiding(&mut self, name: &str, bp: &BraidingProvider) -> Result<Option<String>> {
        let Some(host) = bp.host() else {
            return Ok(None);
        };
        let host = self.add_hopf_interned(host)?;
        let mut modules = vec![];
        for m in bp.modules() {
            self.add_space(&m.space)?;
            let prefix = format!("{name}.{}", m.space.name);
            modules.push(ModuleEntry {
                space: m.space.name.clone(),
                action: self.add_map(&format!("{prefix}.action"), &m.action)?,
                coaction: self.add_map(&format!("{prefix}.coaction"), &m.coaction)?,
            });
        }
        self.braidings
            .insert(name.into(), BraidingEntry::YetterDrinfeld { host, modules });
        Ok(Some(name.into()))
    }

    pub fn add_datum(&mut self, name: &str, d: &HopfDatum) -> Result<String> {
        let e = DatumEntry {
            b1: self.intern_structure(&d.b1)?,
            b2: self.intern_structure(&d.b2)?,
            mu_l: self.add_map(&format!("{name}.mu_l"), &d.mu_l)?,
            nu_l: self.add_map(&format!("{name}.nu_l"), &d.nu_l)?,
            mu_r: self.add_map(&format!("{name}.mu_r"), &d.mu_r)?,
            nu_r: self.add_map(&format!("{name}.nu_r"), &d.nu_r)?,
            braiding: self.add_braiding(&format!("{name}.braiding"), &d.braiding)?,
        };
        self.data.insert(name.into(), e);
        Ok(name.into())
    }

    pub fn add_system(&mut self, name: &str, s: &ProjectionSystem) -> Result<String> {
        let e = SystemEntry::Projection {
            a: self.intern_structure(&s.a)?,
            i1: self.add_map(&format!("{name}.i1"), &s.i1)?,
            i2: self.add_map(&format!("{name}.i2"), &s.i2)?,
            p1: self.add_map(&format!("{name}.p1"), &s.p1)?,
            p2: self.add_map(&format!("{name}.p2"), &s.p2)?,
        };
        self.systems.insert(name.into(), e);
        Ok(name.into())
    }

    pub fn add_tuple(&mut self, name: &str, t: &Bat) -> Result<String> {
        let e = TupleEntry {
            b1: self.intern_structure(&t.b1)?,
            b2: self.intern_structure(&t.b2)?,
            phi12: self.add_map(&format!("{name}.phi12"), &t.phi12)?,
            phi21: self.add_map(&format!("{name}.phi21"), &t.phi21)?,
            braiding: self.add_braiding(&format!("{name}.braiding"), &t.braiding)?,
        };
        self.tuples.insert(name.into(), e);
        Ok(name.into())
    }

    pub fn add_cocycle(&mut self, name: &str, c: &TwoCocycle) -> Result<String> {
        let e = CocycleEntry {
            host: self.intern_structure(&c.host)?,
            chi: self.add_map(&format!("{name}.chi"), &c.chi)?,
            braiding: self.add_braiding(&format!("{name}.braiding"), &c.braiding)?,
        };
        self.cocycles.insert(name.into(), e);
        Ok(name.into())
    }

    pub fn add_pairing(
        &mut self,
        name: &str,
        p: &DualPairing,
        bp: &BraidingProvider,
    ) -> Result<String> {
        let e = PairingEntry {
            h: self.intern_structure(&p.h)?,
            a: self.intern_structure(&p.a)?,
            form: self.add_map(&format!("{name}.form"), &p.form)?,
            braiding: self.add_braiding(&format!("{name}.braiding"), bp)?,
        };
        self.pairings.insert(name.into(), e);
        Ok(name.into())
    }

    pub fn add_double_biproduct(&mut self, name: &str, d: &DoubleBiproductInput) -> Result<String> {
        let e = DoubleBiproductEntry {
            h: self.add_hopf_interned(&d.h)?,
            b: self.intern_structure(&d.b)?,
            b_action: self.add_map(&format!("{name}.b_action"), &d.b_action)?,
            b_coaction: self.add_map(&format!("{name}.b_coaction"), &d.b_coaction)?,
            c: self.intern_structure(&d.c)?,
            c_action: self.add_map(&format!("{name}.c_action"), &d.c_action)?,
            c_coaction: self.add_map(&format!("{name}.c_coaction"), &d.c_coaction)?,
            rho: d
                .rho
                .as_ref()
                .map(|r| self.add_map(&format!("{name}.rho"), r))
                .transpose()?,
        };
        self.double_biproducts.insert(name.into(), e);
        Ok(name.into())
    }

    pub fn set_default(&mut self, table: &str, name: &str) {
        self.defaults.insert(table.into(), name.into());
    }
}

impl StructureEntry {
    fn wires(&self) -> Vec<(&'static str, &LinMapWire)> {
        let mut v = vec![
            ("m", &self.m),
            ("eta", &self.eta),
            ("delta", &self.delta),
            ("eps", &self.eps),
        ];
        if let Some(s) = &self.antipode {
            v.push(("S", s));
        }
        v
    }
}

/// Pretty-printed JSON with keys sorted at every level.
pub fn canonical_json(v: &Value) -> String {
    fn sort(v: &Value) -> Value {
        match v {
            Value::Object(m) => {
                let sorted: BTreeMap<&String, Value> =
                    m.iter().map(|(k, x)| (k, sort(x))).collect();
                Value::Object(sorted.into_iter().map(|(k, x)| (k.clone(), x)).collect())
            }
            Value::Array(a) => Value::Array(a.iter().map(sort).collect()),
            x => x.clone(),
        }
    }
    let mut s = serde_json::to_string_pretty(&sort(v)).expect("values always serialize");
    s.push('\n');
    s
}
