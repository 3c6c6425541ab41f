use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::boxmod::BoxModule;
use crate::format::{document_with_default_names, parse_document, Document, EntrySpec, ModuleSpec};
use crate::ideal::MonomialIdeal;
use crate::lattice::{BoundVector, ExponentVector};
use crate::linalg::Field;

use super::HarnessError;

pub const MAX_ARITY: usize = 6;
pub const MAX_BOUND: i64 = 4;
pub const MAX_GENERATORS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    /// `S/I`.
    Ideal,
    /// `J/I` with `I ⊆ J`.
    IdealPair,
    /// The cokernel of a random monomial matrix.
    Presentation,
    /// `S/I_1 ⊕ S/I_2`.
    DirectSum,
}

impl InstanceKind {
    pub const ALL: [InstanceKind; 4] = [
        InstanceKind::Ideal,
        InstanceKind::IdealPair,
        InstanceKind::Presentation,
        InstanceKind::DirectSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Ideal => "ideal",
            InstanceKind::IdealPair => "ideal-pair",
            InstanceKind::Presentation => "presentation",
            InstanceKind::DirectSum => "direct-sum",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        InstanceKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// Parameters of one random instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub kind: InstanceKind,
    pub bound: BoundVector,
    pub max_generators: usize,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let n = self.bound.len();
        if n == 0 || n > MAX_ARITY {
            return Err(HarnessError::Cap(format!("arity {n} outside 1..={MAX_ARITY}")));
        }
        if self.bound.as_vector().entries().iter().any(|&x| x > MAX_BOUND) {
            return Err(HarnessError::Cap(format!("bound entries above {MAX_BOUND}")));
        }
        if self.max_generators == 0 || self.max_generators > MAX_GENERATORS {
            return Err(HarnessError::Cap(format!(
                "generator count {} outside 1..={MAX_GENERATORS}",
                self.max_generators
            )));
        }
        Ok(())
    }
}

/// A generated instance together with the spec that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub seed: u64,
    pub kind: InstanceKind,
    pub document: Document,
}

impl Instance {
    pub fn text(&self) -> String {
        self.document.to_text()
    }

    pub fn from_text(seed: u64, kind: InstanceKind, text: &str) -> Result<Self, HarnessError> {
        Ok(Instance {
            seed,
            kind,
            document: parse_document(text)?,
        })
    }

    pub fn module(&self, field: Field) -> Result<BoxModule, HarnessError> {
        Ok(self.document.module(field)?)
    }

    pub fn arity(&self) -> usize {
        self.document.arity()
    }

    /// The ideal `I` of an `S/I` or `J/I` instance.
    pub fn ideal(&self, name: &str) -> Option<&MonomialIdeal> {
        self.document.ideal(name)
    }

    pub fn bound(&self) -> Option<&BoundVector> {
        self.document.modules.first().map(ModuleSpec::bound)
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, t: &BoundVector) -> ExponentVector {
    let n = t.len();
    loop {
        let v: Vec<i64> = (0..n).map(|i| rng.gen_range(0..=t.as_vector()[i])).collect();
        if v.iter().any(|&x| x > 0) {
            return ExponentVector::new(v);
        }
    }
}

fn random_ideal(rng: &mut ChaCha8Rng, t: &BoundVector, max_gens: usize) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| random_monomial(rng, t)).collect();
    MonomialIdeal::minimalize(t.len(), gens).expect("generated exponents are valid")
}

/// A deterministic instance from its spec.
pub fn random_instance(spec: &InstanceSpec) -> Result<Instance, HarnessError> {
    spec.validate()?;
    let t = &spec.bound;
    let n = t.len();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut doc = document_with_default_names(n);
    match spec.kind {
        InstanceKind::Ideal => {
            let i = random_ideal(&mut rng, t, spec.max_generators);
            doc.ideals.push(("I".into(), i.clone()));
            doc.modules.push(ModuleSpec::Quotient {
                j: MonomialIdeal::unit(n),
                i,
                t: t.clone(),
            });
        }
        InstanceKind::IdealPair => {
            let i = random_ideal(&mut rng, t, spec.max_generators);
            // a divisor of every generator of I, plus a few extra generators
            let mut gens: Vec<ExponentVector> = i
                .generators()
                .iter()
                .map(|g| ExponentVector::new((0..n).map(|k| rng.gen_range(0..=g[k])).collect()))
                .collect();
            for _ in 0..rng.gen_range(0..=2) {
                gens.push(random_monomial(&mut rng, t));
            }
            let j = MonomialIdeal::minimalize(n, gens).expect("generated exponents are valid");
            doc.ideals.push(("I".into(), i.clone()));
            doc.ideals.push(("J".into(), j.clone()));
            doc.modules.push(ModuleSpec::Quotient { j, i, t: t.clone() });
        }
        InstanceKind::Presentation => {
            let rows: Vec<ExponentVector> = (0..rng.gen_range(1..=2))
                .map(|_| ExponentVector::new((0..n).map(|k| rng.gen_range(0..=t.as_vector()[k] / 2)).collect()))
                .collect();
            let cols: Vec<ExponentVector> = (0..rng.gen_range(1..=spec.max_generators.min(4)))
                .map(|_| {
                    let base = &rows[rng.gen_range(0..rows.len())];
                    ExponentVector::new(
                        (0..n)
                            .map(|k| rng.gen_range(base[k]..=t.as_vector()[k]))
                            .collect(),
                    )
                })
                .collect();
            let mut entries = Vec::new();
            for (r, a) in rows.iter().enumerate() {
                for (c, b) in cols.iter().enumerate() {
                    if a.le_unchecked(b) && a != b && rng.gen_bool(0.7) {
                        let num = [-2, -1, 1, 1, 2][rng.gen_range(0..5)];
                        entries.push(EntrySpec { row: r, col: c, num, den: 1 });
                    }
                }
            }
            doc.modules.push(ModuleSpec::Presentation {
                t: t.clone(),
                rows,
                cols,
                entries,
            });
        }
        InstanceKind::DirectSum => {
            let half = (spec.max_generators / 2).max(1);
            for name in ["I1", "I2"] {
                let i = random_ideal(&mut rng, t, half);
                doc.ideals.push((name.into(), i.clone()));
                doc.modules.push(ModuleSpec::Quotient {
                    j: MonomialIdeal::unit(n),
                    i,
                    t: t.clone(),
                });
            }
        }
    }
    Ok(Instance {
        seed: spec.seed,
        kind: spec.kind,
        document: doc,
    })
}

/// Ranges from which a suite draws per-seed instance specs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRange {
    pub min_arity: usize,
    pub max_arity: usize,
    pub max_bound: i64,
    pub max_generators: usize,
    pub kinds: Vec<InstanceKind>,
}

impl InstanceRange {
    /// The spec used for `seed`: arity, bound and kind are drawn from a
    /// stream independent of the one generating the instance itself.
    pub fn spec_for(&self, seed: u64) -> InstanceSpec {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed_5eed_5eed);
        let n = rng.gen_range(self.min_arity..=self.max_arity);
        let t = ExponentVector::new((0..n).map(|_| rng.gen_range(1..=self.max_bound)).collect());
        InstanceSpec {
            kind: self.kinds[rng.gen_range(0..self.kinds.len())],
            bound: BoundVector::new(t).expect("entries are at least one"),
            max_generators: self.max_generators,
            seed,
        }
    }
}
