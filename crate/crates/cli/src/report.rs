//! Serialized report schemas. Field names are part of the external
//! contract; `format_version` changes whenever they do.

use serde::{Deserialize, Serialize};

use pseudoplane_core::cyclic::CyclicAction;
use pseudoplane_core::hypersurface::{FiberPart, HypersurfaceRing};
use pseudoplane_core::qdivisor::{DpdPair, NegativeLocus};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Inconsistent { failed: Vec<String> },
    Excluded { reason: String },
}

impl Verdict {
    /// 0 for consistent or excluded-as-predicted, 1 when a check contradicts
    /// the classification.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Consistent | Verdict::Excluded { .. } => 0,
            Verdict::Inconsistent { .. } => 1,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::Inconsistent { .. } => "inconsistent",
            Verdict::Excluded { .. } => "excluded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleInput {
    pub d: u32,
    pub e: u32,
    pub m: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    pub e_prime: u32,
    pub k: u32,
    pub m_prime: u32,
    pub d_prime: u32,
    pub l: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub d_plus: String,
    pub d_minus: String,
}

impl From<&DpdPair> for PairJson {
    fn from(p: &DpdPair) -> Self {
        PairJson {
            d_plus: p.d_plus().to_string(),
            d_minus: p.d_minus().to_string(),
        }
    }
}

/// `(l, Q)` read off from `-k D-`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorPolyJson {
    pub l: String,
    pub q: String,
    /// `Q = (t - 1)^m'` and `l = -e' d'`.
    pub matches_theorem: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardJson {
    pub l: usize,
    pub bound: i64,
    pub torsion_compatible: bool,
}

impl From<&NegativeLocus> for PicardJson {
    fn from(n: &NegativeLocus) -> Self {
        PicardJson {
            l: n.l,
            bound: n.picard_rank_lower_bound,
            torsion_compatible: n.torsion_compatible,
        }
    }
}

/// `{"k": int, "P": "<poly>", "second_var": "v" | "w"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub k: u32,
    #[serde(rename = "P")]
    pub p: String,
    pub second_var: String,
}

impl From<&HypersurfaceRing> for RingJson {
    fn from(r: &HypersurfaceRing) -> Self {
        RingJson {
            k: r.k(),
            p: r.p_multi().to_string(),
            second_var: r.second_var().name().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberJson {
    pub components: usize,
    pub multiplicity: u32,
}

impl From<&FiberPart> for FiberJson {
    fn from(f: &FiberPart) -> Self {
        FiberJson {
            components: f.components,
            multiplicity: f.multiplicity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub factor: String,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreNormalizationJson {
    pub ring: RingJson,
    pub smooth: bool,
    pub singular_factors: Vec<FactorJson>,
    pub fiber_at_zero: Vec<FiberJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedJson {
    pub ring: RingJson,
    pub smooth: bool,
    /// `u^(m m') v = (s^d - 1)^m'` holds in `B`, so `w^m' = v`.
    pub integrality_witness: bool,
    pub fiber_at_zero: Vec<FiberJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionWeights {
    pub u: u32,
    pub w: u32,
    pub s: u32,
}

/// `{"d": int, "weights": {"u": r, "w": r, "s": r}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionJson {
    pub d: u32,
    pub weights: ActionWeights,
}

impl From<&CyclicAction> for ActionJson {
    fn from(a: &CyclicAction) -> Self {
        let w = |v: &str| a.weight(v).unwrap_or(0);
        ActionJson {
            d: a.modulus(),
            weights: ActionWeights {
                u: w("u"),
                w: w("w"),
                s: w("s"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidJson {
    pub hilbert_basis: Vec<[u32; 3]>,
    pub max_exponent: u32,
    /// Every invariant weight piece is `g_n C[s^d]` up to `max_exponent`.
    pub weight_pieces_rank_one: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchJson {
    pub n: i64,
    pub n_prime: i64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductStructureJson {
    pub max_weight: u32,
    pub checked: bool,
    pub pairs_checked: usize,
    pub all_match: bool,
    pub mismatches: Vec<MismatchJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LndJson {
    pub bound: u32,
    pub degrees_found: Vec<u32>,
    pub nilpotency_certified: bool,
    pub max_nilpotency_index: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub format_version: u32,
    pub input: TripleInput,
    pub derived: Derived,
    pub exponent_check: bool,
    pub dpd: PairJson,
    pub divisor_poly: DivisorPolyJson,
    pub ml1: bool,
    pub picard: PicardJson,
    pub pre_normalization: PreNormalizationJson,
    pub normalized: NormalizedJson,
    pub action: ActionJson,
    pub freeness: bool,
    pub component_cycles: Vec<Vec<u32>>,
    pub transitive: bool,
    pub action_subgroup_match: bool,
    pub invariant_monoid: MonoidJson,
    pub product_structure: ProductStructureJson,
    pub lnd: LndJson,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoveredJson {
    pub d: u64,
    pub e_prime: i64,
    pub m: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub format_version: u32,
    pub input: PairJson,
    pub lnd_degree: Option<i64>,
    pub action_class: String,
    pub admissible: bool,
    pub exclusion: Option<String>,
    pub reason: String,
    /// Pair oriented so the LND degree is non-negative.
    pub oriented: PairJson,
    pub swapped: bool,
    /// `None` when `{D+}` has more than one support point.
    pub ml1: Option<bool>,
    pub picard: PicardJson,
    pub canonical_pair: PairJson,
    pub recovered: Option<RecoveredJson>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub d: u32,
    pub e: u32,
    pub m: u32,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub format_version: u32,
    pub d_max: u32,
    pub m_max: u32,
    pub max_weight: u32,
    pub rows: Vec<SweepRow>,
    pub total: usize,
    pub consistent: usize,
    pub excluded: usize,
    pub inconsistent: usize,
}

impl SweepReport {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.inconsistent > 0)
    }
}

/// Structured error emitted on exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub format_version: u32,
    pub error: String,
    pub message: String,
}
