//! Versioned JSON rendering of [`Certificate`].
//!
//! Field order is fixed by the struct layout, every vertex set is written as
//! an ascending array, and floats use the shortest representation that reads
//! back to the same bits.

use serde::{Deserialize, Serialize};
use turan_core::certifier::{
    Certificate, ChainTotals, ClassRecord, GvRecord, PartRecord, Verification, Violation,
};
use turan_core::{PatternParams, VertexSet};

pub const SCHEMA: &str = "turan-lab/certificate";
pub const VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported certificate schema {schema:?} version {version}")]
    Schema { schema: String, version: u32 },
    #[error("invalid certificate: {0}")]
    Invalid(#[from] turan_core::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub schema: String,
    pub version: u32,
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub part_size: usize,
    pub partition: Vec<Vec<usize>>,
    pub parts: Vec<PartDoc>,
    pub totals: TotalsDoc,
    pub final_bound: f64,
    pub actual: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartDoc {
    pub classes: Vec<ClassDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    pub trace: Vec<usize>,
    pub class_size: usize,
    pub a_size: usize,
    pub b_size: usize,
    pub delta_part: u64,
    pub delta_trace: u64,
    pub delta_a: u64,
    pub delta_b: u64,
    pub b_bound: u64,
    pub degree_sum: u64,
    pub gv: Vec<GvDoc>,
    pub kst_sum: f64,
    pub raw_kst_sum: f64,
    pub jensen_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GvDoc {
    pub vertex: usize,
    pub right_size: usize,
    pub edges: u64,
    pub kst_bound: f64,
    pub capped_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TotalsDoc {
    pub delta: u64,
    pub b_bound: u64,
    pub kst: f64,
    pub jensen: f64,
}

impl From<&Certificate> for CertificateDocument {
    fn from(c: &Certificate) -> Self {
        CertificateDocument {
            schema: SCHEMA.into(),
            version: VERSION,
            n: c.n,
            s: c.params.s(),
            t: c.params.t(),
            part_size: c.part_size,
            partition: c.partition.iter().map(VertexSet::to_vec).collect(),
            parts: c
                .parts
                .iter()
                .map(|p| PartDoc {
                    classes: p.classes.iter().map(ClassDoc::from).collect(),
                })
                .collect(),
            totals: TotalsDoc {
                delta: c.totals.delta,
                b_bound: c.totals.b_bound,
                kst: c.totals.kst,
                jensen: c.totals.jensen,
            },
            final_bound: c.final_bound,
            actual: c.actual,
        }
    }
}

impl From<&ClassRecord> for ClassDoc {
    fn from(c: &ClassRecord) -> Self {
        ClassDoc {
            trace: c.trace.to_vec(),
            class_size: c.class_size,
            a_size: c.a_size,
            b_size: c.b_size,
            delta_part: c.delta_part,
            delta_trace: c.delta_trace,
            delta_a: c.delta_a,
            delta_b: c.delta_b,
            b_bound: c.b_bound,
            degree_sum: c.degree_sum,
            gv: c
                .gv
                .iter()
                .map(|r| GvDoc {
                    vertex: r.vertex,
                    right_size: r.right_size,
                    edges: r.edges,
                    kst_bound: r.kst_bound,
                    capped_bound: r.capped_bound,
                })
                .collect(),
            kst_sum: c.kst_sum,
            raw_kst_sum: c.raw_kst_sum,
            jensen_bound: c.jensen_bound,
        }
    }
}

impl CertificateDocument {
    /// Rebuilds the certificate. Sets must be strictly ascending and inside
    /// `0..n`; whether the numbers are right is for the verifier to decide.
    pub fn to_certificate(&self) -> Result<Certificate, DocumentError> {
        if self.schema != SCHEMA || self.version != VERSION {
            return Err(DocumentError::Schema {
                schema: self.schema.clone(),
                version: self.version,
            });
        }
        let n = self.n;
        let set = |members: &[usize]| -> Result<VertexSet, DocumentError> {
            if !members.windows(2).all(|w| w[0] < w[1]) {
                return Err(turan_core::Error::Structural(format!(
                    "set {members:?} is not strictly ascending"
                ))
                .into());
            }
            Ok(VertexSet::from_members(n, members.iter().copied())?)
        };
        let partition = self
            .partition
            .iter()
            .map(|b| set(b))
            .collect::<Result<Vec<_>, _>>()?;
        let parts = self
            .parts
            .iter()
            .map(|p| {
                let classes = p
                    .classes
                    .iter()
                    .map(|c| {
                        Ok(ClassRecord {
                            trace: set(&c.trace)?,
                            class_size: c.class_size,
                            a_size: c.a_size,
                            b_size: c.b_size,
                            delta_part: c.delta_part,
                            delta_trace: c.delta_trace,
                            delta_a: c.delta_a,
                            delta_b: c.delta_b,
                            b_bound: c.b_bound,
                            degree_sum: c.degree_sum,
                            gv: c
                                .gv
                                .iter()
                                .map(|r| GvRecord {
                                    vertex: r.vertex,
                                    right_size: r.right_size,
                                    edges: r.edges,
                                    kst_bound: r.kst_bound,
                                    capped_bound: r.capped_bound,
                                })
                                .collect(),
                            kst_sum: c.kst_sum,
                            raw_kst_sum: c.raw_kst_sum,
                            jensen_bound: c.jensen_bound,
                        })
                    })
                    .collect::<Result<Vec<_>, DocumentError>>()?;
                Ok(PartRecord { classes })
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        Ok(Certificate {
            n,
            params: PatternParams::new(self.s, self.t)?,
            part_size: self.part_size,
            partition,
            parts,
            totals: ChainTotals {
                delta: self.totals.delta,
                b_bound: self.totals.b_bound,
                kst: self.totals.kst,
                jensen: self.totals.jensen,
            },
            final_bound: self.final_bound,
            actual: self.actual,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate documents serialise")
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn certificate_to_json(c: &Certificate) -> String {
    CertificateDocument::from(c).to_json()
}

pub fn certificate_from_json(text: &str) -> Result<Certificate, DocumentError> {
    CertificateDocument::from_json(text)?.to_certificate()
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationDoc {
    pub clause: String,
    pub part: Option<usize>,
    pub trace: Option<Vec<usize>>,
    pub vertex: Option<usize>,
    pub detail: String,
}

impl From<&Violation> for ViolationDoc {
    fn from(v: &Violation) -> Self {
        ViolationDoc {
            clause: format!("{:?}", v.clause),
            part: v.part,
            trace: v.trace.clone(),
            vertex: v.vertex,
            detail: v.detail.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationDoc {
    pub valid: bool,
    pub violations: Vec<ViolationDoc>,
}

impl From<&Verification> for VerificationDoc {
    fn from(v: &Verification) -> Self {
        VerificationDoc {
            valid: v.is_valid(),
            violations: v.violations.iter().map(ViolationDoc::from).collect(),
        }
    }
}
