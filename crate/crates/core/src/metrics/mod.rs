//! Site observables, revival detection, mode classification and the
//! stability ordering.

pub mod modes;
pub mod period;
pub mod site;
pub mod stability;

pub use modes::{classify_modes, ModePattern, ModeReport, ModeScore, MODE_PATTERNS};
pub use period::{
    closest_return, detect_period, RevivalDetector, DEFAULT_REVIVAL_TOLERANCE, NO_REVIVAL_THRESHOLD,
};
pub use site::{
    maxp, maxp_at, site_series, time_means, trp, trp_at, truncated_mean, SiteReport, SiteSeries,
};
pub use stability::{
    stability_order, MoleculeTrp, StabilityEntry, StabilityReport, NEAR_TIE_RELATIVE_GAP,
};
