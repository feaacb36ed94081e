//! Classification of singularities of affine varieties with a good
//! C*-action, and their plurigenera and logarithmic Kodaira dimension.
//!
//! An affine variety `V = Spec A` with `A` a non-negatively graded algebra
//! is presented here by numerical data only: variable weights, relation
//! degrees, the degree of a principal homogeneous divisor, and asserted
//! geometric hypotheses. Everything the crate computes reduces to exact
//! integer arithmetic on the graded-piece dimensions `dim A_k`, read off a
//! truncated expansion of the Hilbert series, together with the dualizing
//! shift `N_A` (for a weighted complete intersection,
//! `N_A = sum of relation degrees - sum of weights`).
//!
//! - [`series`]: truncated power series over big integers and Hilbert
//!   series in factored form.
//! - [`ring`]: complete-intersection and Pfaffian presentations, dualizing
//!   shifts, chart orders of weighted blowups.
//! - [`classify`]: log canonical / L2-log-terminal / log terminal /
//!   rational verdicts, by sign tests with brute-force graded scans as an
//!   independent cross-check.
//! - [`plurigenera`]: the L2- and lambda-plurigenera of the vertex
//!   singularity.
//! - [`kodaira`]: logarithmic plurigenera and the Kodaira-dimension
//!   trichotomy of the smooth locus.
//! - [`report`]: job documents, orchestration, and human/machine report
//!   rendering.

pub mod classify;
pub mod error;
pub mod kodaira;
pub mod plurigenera;
pub mod report;
pub mod ring;
pub mod series;

pub use classify::{BruteForceWitness, ScanFailure, Verdict};
pub use error::{Error, Result};
pub use kodaira::{GrowthEstimate, KodairaDimension, KodairaReport, LogPlurigenus};
pub use plurigenera::PlurigeneraRow;
pub use report::{
    parse_job, render_job, render_report, run_job, JobRing, JobSpec, PfaffianJob, ReportFormat,
    SingularityReport, TruncationPolicy, Verdicts,
};
pub use ring::{
    chart_orders, pfaffian_ring, DualizingShift, GradedRing, Hypotheses, PfaffianInput, WeightedCI,
};
pub use series::{FactoredHilbert, Series};
