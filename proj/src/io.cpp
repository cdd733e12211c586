#include "mgauss/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mgauss::io {

namespace {

std::size_t get_count(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_number_unsigned() ||
      doc[field].get<std::uint64_t>() == 0) {
    throw DocumentError(std::string("document field '") + field +
                        "' must be a positive integer");
  }
  return doc[field].get<std::size_t>();
}

// Nested row-major array -> Matrix, with full validation.
Matrix get_payload(const json& doc, const char* field, std::size_t rows,
                   std::size_t cols) {
  if (!doc.contains(field)) {
    throw DocumentError(std::string("document is missing payload '") + field +
                        "'");
  }
  const json& payload = doc[field];
  if (!payload.is_array() || payload.size() != rows) {
    throw DocumentError(std::string("payload '") + field + "' must be " +
                        std::to_string(rows) + " rows of " +
                        std::to_string(cols) + " numbers");
  }
  std::vector<double> entries;
  entries.reserve(rows * cols);
  for (const json& row : payload) {
    if (!row.is_array() || row.size() != cols) {
      throw DocumentError(std::string("payload '") + field +
                          "' has a row of the wrong length");
    }
    for (const json& x : row) {
      if (!x.is_number()) {
        throw DocumentError(std::string("payload '") + field +
                            "' has a non-numeric entry");
      }
      const double v = x.get<double>();
      if (!std::isfinite(v)) {
        throw DocumentError(std::string("payload '") + field +
                            "' has a non-finite entry");
      }
      entries.push_back(v);
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

json matrix_payload(const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void require_kind(const json& doc, const std::string& kind) {
  if (kind_of(doc) != kind) {
    throw DocumentError("expected a '" + kind + "' document, got '" +
                        kind_of(doc) + "'");
  }
}

}  // namespace

json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DocumentError("cannot open input file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw DocumentError("input is not valid JSON");
  }
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string kind_of(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw DocumentError("document must be an object with a string 'kind'");
  }
  return doc["kind"].get<std::string>();
}

Matrix load_matrix(const json& doc) {
  require_kind(doc, "matrix");
  const std::size_t rows = get_count(doc, "rows");
  const std::size_t cols = get_count(doc, "cols");
  return get_payload(doc, "data", rows, cols);
}

MatrixGaussian load_matrix_gaussian(const json& doc) {
  require_kind(doc, "matrix_gaussian");
  const std::size_t rows = get_count(doc, "rows");
  const std::size_t cols = get_count(doc, "cols");
  const std::size_t d = rows * cols;
  Matrix mean = get_payload(doc, "mean", rows, cols);
  Matrix sigma = get_payload(doc, "sigma", d, d);
  return MatrixGaussian(std::move(mean), SpdMatrix(sigma));
}

JointMatrixGaussian load_joint(const json& doc) {
  require_kind(doc, "joint_matrix_gaussian");
  const std::size_t rows = get_count(doc, "rows");
  const std::size_t n_a = get_count(doc, "n_a");
  const std::size_t n_b = get_count(doc, "n_b");
  const std::size_t d = rows * (n_a + n_b);
  Matrix mean = get_payload(doc, "mean", rows, n_a + n_b);
  Matrix sigma = get_payload(doc, "sigma", d, d);
  return JointMatrixGaussian::from_combined(
      MatrixGaussian(std::move(mean), SpdMatrix(sigma)), n_a);
}

MatrixNormal load_matrix_normal(const json& doc) {
  require_kind(doc, "matrix_normal");
  const std::size_t rows = get_count(doc, "rows");
  const std::size_t cols = get_count(doc, "cols");
  Matrix mean = get_payload(doc, "mean", rows, cols);
  Matrix u = get_payload(doc, "u", rows, rows);
  Matrix v = get_payload(doc, "v", cols, cols);
  return MatrixNormal(std::move(mean), SpdMatrix(u), SpdMatrix(v));
}

KronCovarianceDoc load_kron_covariance(const json& doc) {
  require_kind(doc, "kron_covariance");
  const std::size_t rows = get_count(doc, "rows");
  const std::size_t cols = get_count(doc, "cols");
  Matrix mean = get_payload(doc, "mean", rows, cols);
  Matrix s = get_payload(doc, "data", rows * rows, cols * cols);
  return KronCovarianceDoc{std::move(mean),
                           KroneckerCovariance(rows, cols, std::move(s))};
}

std::vector<Matrix> load_matrix_list(const json& doc) {
  if (!doc.is_array()) {
    throw DocumentError("expected a top-level array of matrix documents");
  }
  std::vector<Matrix> out;
  out.reserve(doc.size());
  for (const json& item : doc) out.push_back(load_matrix(item));
  return out;
}

MatrixGaussian load_distribution(const json& doc) {
  const std::string kind = kind_of(doc);
  if (kind == "matrix_gaussian") return load_matrix_gaussian(doc);
  if (kind == "matrix_normal") return load_matrix_normal(doc).to_full();
  throw DocumentError("expected a matrix_gaussian or matrix_normal document, "
                      "got '" + kind + "'");
}

json matrix_doc(const Matrix& a) {
  return json{{"kind", "matrix"},
              {"rows", a.rows()},
              {"cols", a.cols()},
              {"data", matrix_payload(a)}};
}

json matrix_gaussian_doc(const MatrixGaussian& d) {
  return json{{"kind", "matrix_gaussian"},
              {"rows", d.rows()},
              {"cols", d.cols()},
              {"mean", matrix_payload(d.mean())},
              {"sigma", matrix_payload(d.sigma().matrix())}};
}

json joint_doc(const JointMatrixGaussian& j) {
  return json{{"kind", "joint_matrix_gaussian"},
              {"rows", j.rows()},
              {"n_a", j.cols_a()},
              {"n_b", j.cols_b()},
              {"mean", matrix_payload(hconcat(j.mean_a(), j.mean_b()))},
              {"sigma", matrix_payload(j.full().matrix())}};
}

json matrix_normal_doc(const MatrixNormal& mn) {
  return json{{"kind", "matrix_normal"},
              {"rows", mn.rows()},
              {"cols", mn.cols()},
              {"mean", matrix_payload(mn.mean())},
              {"u", matrix_payload(mn.u().matrix())},
              {"v", matrix_payload(mn.v().matrix())}};
}

json kron_covariance_doc(const Matrix& mean, const KroneckerCovariance& cov) {
  return json{{"kind", "kron_covariance"},
              {"rows", cov.m()},
              {"cols", cov.n()},
              {"mean", matrix_payload(mean)},
              {"data", matrix_payload(cov.s())}};
}

}  // namespace mgauss::io
