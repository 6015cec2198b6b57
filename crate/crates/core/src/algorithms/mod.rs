//! End-to-end counting and recognition pipelines built on the simulated
//! spectral subroutines, plus classical baselines.

mod counting;
mod recognizer;
mod savitch;

pub use counting::{
    count_paths_few_endpoints, count_paths_strongly_few, CountParams, CountResult,
    FewEndpointsCounter, StronglyFewCounter,
};
pub use recognizer::{
    recognize_stcon_sf, recognize_stcon_sf_strict, stcon_sf_member, RecognizerParams,
    RecognizerVerdict, VerdictReason,
};
pub use savitch::{savitch_reachable, SavitchRun};
