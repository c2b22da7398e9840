//! Three-qubit correlation dynamics under independent Ornstein-Uhlenbeck
//! dephasing.
//!
//! The crate evolves GHZ-type and W-type mixed states through a local
//! dephasing channel and evaluates concurrence, tripartite negativity,
//! quantum discord and the MABK and Svetlichny Bell expectations, either
//! numerically from the density matrix or from closed forms. A
//! stochastic-trajectory simulator provides an independent check on the
//! channel.
//!
//! ```
//! use tricorr::{closed_form::{death_time, Measure, ThetaBc}, NoiseParams, Family};
//!
//! let noise = NoiseParams::from_ratio(0.1).unwrap();
//! let t = death_time(Family::Ghz, Measure::Mabk, &noise, 0.98, &ThetaBc::canonical(Family::Ghz))
//!     .unwrap()
//!     .unwrap();
//! assert!(t > 0.44863);
//! ```

pub mod basis;
pub mod channel;
pub mod closed_form;
pub mod error;
pub mod linalg;
pub mod mc;
pub mod measures;
pub mod noise;
pub mod par;
pub mod pipeline;
pub mod roots;
pub mod states;

pub use basis::Qubit;
pub use channel::{dephasing_params, evolve_dephasing, lift_three_qubit, ChannelParams};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Spectrum, C64};
pub use noise::NoiseParams;
pub use par::Execution;
pub use states::{make_state, Family, PurityMix};
