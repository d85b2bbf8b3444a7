//! Compact-group series for SU(2) and SU(3): Weyl formulas, torus heat kernels,
//! zeta sums, volume series, push-forward densities and their Monte-Carlo checks.

pub mod mc;
pub mod quadrature;
pub mod root_system;
pub mod series;

pub use mc::{
    commutator_bin_probabilities, mc_angle_histogram, mc_commutator_histogram, total_variation,
    weyl_bin_probabilities, BinProbabilities, Histogram, SampleMap,
};
pub use quadrature::{lie_n_commutator_density, schur_inner, schur_inner_a1, weyl_nodes, QuadratureResult};
pub use root_system::{
    dominant_weights, weight_multiplicities, weyl_character, weyl_dimension, weyl_dimension_with_residue,
    zero_weight_multiplicity, zero_weight_multiplicity_enumerated, DominantWeight, PointData, RootKind,
    RootSystemData, TorusPoint,
};
pub use series::{
    commutator_density, lie_heat_kernel, moduli_volume_series, subgroup_pushforward_density, tail_bound,
    vanishing_limit, witten_zeta_at_cutoff, witten_zeta_partial, SeriesResult, SubgroupSlot, TermBound,
    VanishingResult, VolumeResult,
};
