#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace xco2 {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<double>;
using Vector = VectorX<double>;
using ComplexMatrix = MatrixX<std::complex<double>>;
using Index = Eigen::Index;

/// Failure modes surfaced to callers, grouped by the exit category the CLI
/// maps them to: config (2), data (3), numeric (4).
enum class Errc {
  // config
  invalid_config,
  // data
  bad_data,
  out_of_extent,
  domain_error,
  missing_environment,
  constant_feature,
  no_baseline,
  invalid_scale,
  shape_error,
  empty_neighborhood,
  too_few_samples,
  length_mismatch,
  shape_mismatch,
  constant_observations,
  degenerate_variance,
  empty_sample,
  zero_pooled_variance,
  insufficient_overlap,
  no_matched_cells,
  polar_region,
  too_few_regions,
  constant_input,
  insufficient_seasons,
  missing_month,
  missing_features,
  no_observations,
  // numeric
  non_finite_activation,
  diverged_loss,
};

int exit_category(Errc c);
const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace xco2
