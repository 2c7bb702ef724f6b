//! Exact reference computations: full density matrices, eigen-entropies,
//! coherent-state projections and sphere quadrature.

pub mod eigen;
pub mod entropy;
pub mod extrapolate;
pub mod orth;
pub mod povm;
pub mod quadrature;
pub mod shannon;
pub mod state;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use entropy::{entropy_vn, excess_entropy, PerturbationSpectrum};
pub use extrapolate::{b_unit, in_units_of_b, Extrapolation};
pub use orth::{orth_measurement_mi, OrthMeasurement};
pub use povm::{f_quadrature, povm_coupling_numeric, povm_joint_numeric, scs_expectation};
pub use quadrature::{gauss_legendre, QuadratureRule, SphereNode, DEFAULT_N_PHI, DEFAULT_N_THETA};
pub use shannon::{shannon_mi_quadrature, AngleDistribution, DistributionKind};
pub use state::{
    beta_limit, build_delta_rho, fid_trace, partial_trace, propagator_phases, EvolvedState,
    StateSpectra, Subsystem, DEFAULT_BETA,
};
