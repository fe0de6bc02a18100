//! Brute-force side: the small and bar resolutions, comparison maps, the cyclic
//! bar complex with Connes' `B`, the perturbation lemma and degree checks.

pub mod canonical;
pub mod checks;
pub mod cyclic_bar;
pub mod perturb;
pub mod tensor;

pub use canonical::{bar_b, check_resolution, small_d, small_d_generator, Comparison, OmegaRecursion, ResolutionReport};
pub use tensor::{monomial_degree, word_index, words, ResElem, Word};
pub use cyclic_bar::{BarWorkspace, CyclicSpace};
pub use perturb::{perturb, PerturbError, Retract, RetractReport};
pub use checks::{omega_degree_bound, vanishing_check, DegreeBoundReport, VanishingEntry, VanishingReport};
