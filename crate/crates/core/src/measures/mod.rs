//! Correlation measures evaluated on arbitrary density matrices.

pub mod bell;
pub mod concurrence;
pub mod discord;
pub mod negativity;

pub use bell::{
    bell_expectation, bell_operator, canonical_angles, operator, optimize_bell_angles, reduce_mod_pi,
    svetlichny_operator,
    AxisFamily, BellAngles, BellKind,
};
pub use concurrence::{concurrence_general, concurrence_x, XStateParams};
pub use discord::{discord_general, discord_x, Branch, DiscordGrid, DiscordResult, DiscordX, MeasurementProjector};
pub use negativity::{bipartition_negativities, negativity, tripartite_negativity};
