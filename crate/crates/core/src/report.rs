//! Structured verdicts for a single checked instance.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::ENGINE_VERSION;

/// Named auxiliary identities reported under the `identity-check` claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    AxB,
    ETriangular,
    GammaFormula,
    H2Branch,
    Induction,
    QuotientHilb,
    RhsViaF,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::AxB,
        Identity::ETriangular,
        Identity::GammaFormula,
        Identity::H2Branch,
        Identity::Induction,
        Identity::QuotientHilb,
        Identity::RhsViaF,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::AxB => "ax_b",
            Identity::ETriangular => "e_triangular",
            Identity::GammaFormula => "gamma_formula",
            Identity::H2Branch => "h2_branch",
            Identity::Induction => "induction",
            Identity::QuotientHilb => "quotient_hilb",
            Identity::RhsViaF => "rhs_via_f",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Conj1,
    Conj2,
    Conj3,
    Conj4,
    Conj4Prime,
    Prop5,
    Lefschetz,
    LemmaM2,
    /// Serialized as `identity-check:<name>`.
    Identity(Identity),
}

impl Claim {
    pub fn as_str(&self) -> String {
        match self {
            Claim::Conj1 => "conj1".into(),
            Claim::Conj2 => "conj2".into(),
            Claim::Conj3 => "conj3".into(),
            Claim::Conj4 => "conj4".into(),
            Claim::Conj4Prime => "conj4prime".into(),
            Claim::Prop5 => "prop5".into(),
            Claim::Lefschetz => "lefschetz".into(),
            Claim::LemmaM2 => "lemma_m2".into(),
            Claim::Identity(id) => format!("identity-check:{}", id.name()),
        }
    }

    /// Whether instances of this claim are indexed by `m`.
    pub fn uses_m(&self) -> bool {
        matches!(
            self,
            Claim::Conj1
                | Claim::Conj2
                | Claim::Conj3
                | Claim::Conj4
                | Claim::Conj4Prime
                | Claim::Identity(Identity::AxB)
                | Claim::Identity(Identity::ETriangular)
                | Claim::Identity(Identity::Induction)
                | Claim::Identity(Identity::QuotientHilb)
                | Claim::Identity(Identity::RhsViaF)
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_str())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "conj1" => Claim::Conj1,
            "conj2" => Claim::Conj2,
            "conj3" => Claim::Conj3,
            "conj4" => Claim::Conj4,
            "conj4prime" => Claim::Conj4Prime,
            "prop5" => Claim::Prop5,
            "lefschetz" => Claim::Lefschetz,
            "lemma_m2" => Claim::LemmaM2,
            other => {
                let name = other
                    .strip_prefix("identity-check:")
                    .ok_or_else(|| format!("unknown claim '{other}'"))?;
                let id = Identity::ALL
                    .into_iter()
                    .find(|id| id.name() == name)
                    .ok_or_else(|| format!("unknown identity check '{name}'"))?;
                Claim::Identity(id)
            }
        })
    }
}

impl Serialize for Claim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.as_str())
    }
}

impl<'de> Deserialize<'de> for Claim {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "fails")]
    Fails,
    #[serde(rename = "not-applicable")]
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

/// One checked instance. Field names are the on-disk schema.
///
/// A `fails` verdict carries the discrepancy in `witness`; `not-applicable`
/// carries `{"precondition": ...}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub claim: Claim,
    pub k: u32,
    pub l: u32,
    pub m: Option<u32>,
    pub verdict: Verdict,
    pub witness: Option<Value>,
    pub elapsed_ms: u64,
    pub engine_version: String,
}

impl ConjectureReport {
    pub fn new(claim: Claim, k: u32, l: u32, m: Option<u32>, verdict: Verdict) -> Self {
        ConjectureReport {
            claim,
            k,
            l,
            m,
            verdict,
            witness: None,
            elapsed_ms: 0,
            engine_version: ENGINE_VERSION.to_string(),
        }
    }

    pub fn holds(claim: Claim, k: u32, l: u32, m: Option<u32>) -> Self {
        Self::new(claim, k, l, m, Verdict::Holds)
    }

    pub fn fails(claim: Claim, k: u32, l: u32, m: Option<u32>, witness: Value) -> Self {
        Self::new(claim, k, l, m, Verdict::Fails).with_witness(witness)
    }

    pub fn not_applicable(
        claim: Claim,
        k: u32,
        l: u32,
        m: Option<u32>,
        precondition: impl Into<String>,
    ) -> Self {
        Self::new(claim, k, l, m, Verdict::NotApplicable)
            .with_witness(serde_json::json!({ "precondition": precondition.into() }))
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn timed(mut self, started: Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.verdict == Verdict::Fails
    }

    /// Cache identity: `(claim, k, l, m)`.
    pub fn key(&self) -> (Claim, u32, u32, Option<u32>) {
        (self.claim, self.k, self.l, self.m)
    }

    /// Output order: `(k, l, m, claim)`.
    pub fn sort_order(a: &Self, b: &Self) -> Ordering {
        (a.k, a.l, a.m, a.claim.as_str()).cmp(&(b.k, b.l, b.m, b.claim.as_str()))
    }
}

/// Runs `f`, stamping the report with the elapsed wall time.
pub fn timed(f: impl FnOnce() -> ConjectureReport) -> ConjectureReport {
    let started = Instant::now();
    f().timed(started)
}
