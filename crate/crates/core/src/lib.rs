//! Tight fusion frames: exact decision and enumeration of rank sequences,
//! Littlewood-Richardson certificates, dualities, and numerical realization.
//!
//! ```
//! use tff::{decide, Partition};
//!
//! let ranks = Partition::new(vec![2, 2, 2]).unwrap();
//! assert!(decide(&ranks, 4).unwrap());
//! ```

pub mod cli;
pub mod configmat;
pub mod duality;
mod error;
pub mod partition;
pub mod rational;
pub mod realize;
pub mod tff;

pub use configmat::{
    count_configs, find_config, mu_chain, render_stages, render_tableaux, validate_config,
    ConfigMatrix, Tableau, Validation, Violation,
};
pub use error::{Error, Result};
pub use partition::{dominance_leq, majorization_chain, Partition};
pub use rational::{parse_rational, Rational};
pub use tff::{decide, decide_with_certificate, enumerate_tff, maximal_elements, TffInstance};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/configurations.md")]
    mod configurations {}
    #[doc = include_str!("../../../book/src/dualities.md")]
    mod dualities {}
    #[doc = include_str!("../../../book/src/maximal.md")]
    mod maximal {}
    #[doc = include_str!("../../../book/src/realization.md")]
    mod realization {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
