#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgauss/covariance.hpp"
#include "mgauss/distribution.hpp"
#include "mgauss/matnorm.hpp"
#include "mgauss/matrix.hpp"

namespace mgauss::io {

using json = nlohmann::json;

// Malformed document: bad JSON, unknown kind, missing fields, shape or
// length inconsistencies, non-finite numbers. Numeric failures on valid
// documents (e.g. a covariance that is not positive definite) are NOT
// DocumentErrors; they surface as mgauss::Error.
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Self-describing document format (see README for the full schema). Every
// document is a JSON object with a "kind" out of {matrix, matrix_gaussian,
// joint_matrix_gaussian, matrix_normal, kron_covariance}, integer shape
// fields, and row-major nested-array payloads.

json read_document(const std::string& path);
json parse_document(const std::string& text);

// Canonical serialization (two-space indent, sorted keys, trailing newline).
// Floating-point payloads round-trip exactly.
std::string dump(const json& doc);

std::string kind_of(const json& doc);

Matrix load_matrix(const json& doc);
MatrixGaussian load_matrix_gaussian(const json& doc);
JointMatrixGaussian load_joint(const json& doc);
MatrixNormal load_matrix_normal(const json& doc);

struct KronCovarianceDoc {
  Matrix mean;
  KroneckerCovariance cov;
};
KronCovarianceDoc load_kron_covariance(const json& doc);

// A top-level JSON array of matrix documents (the `sample` output / `fit`
// input format).
std::vector<Matrix> load_matrix_list(const json& doc);

// A distribution argument: either a matrix_gaussian document or a
// matrix_normal document (embedded into the full representation).
MatrixGaussian load_distribution(const json& doc);

json matrix_doc(const Matrix& a);
json matrix_gaussian_doc(const MatrixGaussian& d);
json joint_doc(const JointMatrixGaussian& j);
json matrix_normal_doc(const MatrixNormal& mn);
json kron_covariance_doc(const Matrix& mean, const KroneckerCovariance& cov);

}  // namespace mgauss::io
