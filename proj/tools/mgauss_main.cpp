// Batch front end over the library: loads JSON documents, runs one
// operation, writes a document or a scalar. Exit codes: 0 success, 1 usage
// error, 2 malformed input, 3 numeric error (with a one-line diagnostic).

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mgauss/covariance.hpp"
#include "mgauss/distribution.hpp"
#include "mgauss/io.hpp"
#include "mgauss/matnorm.hpp"
#include "mgauss/quadform.hpp"

namespace {

using mgauss::JointMatrixGaussian;
using mgauss::Matrix;
using mgauss::MatrixGaussian;
using mgauss::io::json;

std::string format_scalar(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v << "\n";
  return os.str();
}

std::string format_vector(const std::vector<double>& v) {
  std::ostringstream os;
  os << std::setprecision(12);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << " ";
    os << v[i];
  }
  return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) {
    throw mgauss::io::DocumentError("cannot open output file: " + out_path);
  }
  f << text;
}

struct Args {
  std::string dist, at, b, c, joint, observed, which = "A", samples, variances;
  std::string x, u, to, out;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::uint64_t iters = 100;
  std::uint64_t n = 0, p = 0;
  double jitter = 0.0;
  double rel_tol = 1e-9;
};

void run_convert(const Args& args) {
  const json doc = mgauss::io::read_document(args.dist);
  const std::string kind = mgauss::io::kind_of(doc);
  json out;
  if (kind == "kron_covariance") {
    auto kd = mgauss::io::load_kron_covariance(doc);
    if (args.to == "s") {
      out = mgauss::io::kron_covariance_doc(kd.mean, kd.cov);
    } else {
      out = mgauss::io::matrix_gaussian_doc(
          MatrixGaussian(kd.mean, mgauss::s_to_sigma(kd.cov)));
    }
  } else {
    const MatrixGaussian d = mgauss::io::load_distribution(doc);
    if (args.to == "s") {
      out = mgauss::io::kron_covariance_doc(
          d.mean(), mgauss::sigma_to_s(d.sigma(), d.rows(), d.cols()));
    } else {
      out = mgauss::io::matrix_gaussian_doc(d);
    }
  }
  emit(args.out, mgauss::io::dump(out));
}

void run_quadform(const Args& args) {
  const JointMatrixGaussian j =
      mgauss::io::load_joint(mgauss::io::read_document(args.joint));
  const Matrix c = mgauss::io::load_matrix(mgauss::io::read_document(args.c));
  const Matrix eqf = mgauss::expected_quad_form(
      mgauss::cross_cov_from_joint(j), j.mean_a(), j.mean_b(), c);
  if (!args.x.empty()) {
    const Matrix x = mgauss::io::load_matrix(mgauss::io::read_document(args.x));
    const Matrix u = mgauss::io::load_matrix(mgauss::io::read_document(args.u));
    emit(args.out, format_scalar(mgauss::scalar_quad_form(eqf, x, u)));
  } else {
    emit(args.out, mgauss::io::dump(mgauss::io::matrix_doc(eqf)));
  }
}

int dispatch(const CLI::App& app, const Args& args) {
  const std::string sub = app.get_subcommands().front()->get_name();

  if (sub == "sample") {
    const MatrixGaussian d =
        mgauss::io::load_distribution(mgauss::io::read_document(args.dist));
    json arr = json::array();
    for (const Matrix& s : d.sample_many(args.seed, args.count)) {
      arr.push_back(mgauss::io::matrix_doc(s));
    }
    emit(args.out, mgauss::io::dump(arr));
  } else if (sub == "logpdf") {
    const MatrixGaussian d =
        mgauss::io::load_distribution(mgauss::io::read_document(args.dist));
    const Matrix a = mgauss::io::load_matrix(mgauss::io::read_document(args.at));
    emit(args.out, format_scalar(d.log_pdf(a)));
  } else if (sub == "entropy") {
    const MatrixGaussian d =
        mgauss::io::load_distribution(mgauss::io::read_document(args.dist));
    emit(args.out, format_scalar(d.entropy()));
  } else if (sub == "affine") {
    const MatrixGaussian d =
        mgauss::io::load_distribution(mgauss::io::read_document(args.dist));
    const Matrix b = mgauss::io::load_matrix(mgauss::io::read_document(args.b));
    const Matrix c = mgauss::io::load_matrix(mgauss::io::read_document(args.c));
    emit(args.out,
         mgauss::io::dump(mgauss::io::matrix_gaussian_doc(d.affine_map(b, c))));
  } else if (sub == "marginal") {
    const JointMatrixGaussian j =
        mgauss::io::load_joint(mgauss::io::read_document(args.joint));
    const auto which = args.which == "A" ? JointMatrixGaussian::Block::A
                                         : JointMatrixGaussian::Block::B;
    emit(args.out,
         mgauss::io::dump(mgauss::io::matrix_gaussian_doc(j.marginal(which))));
  } else if (sub == "conditional") {
    const JointMatrixGaussian j =
        mgauss::io::load_joint(mgauss::io::read_document(args.joint));
    const Matrix obs =
        mgauss::io::load_matrix(mgauss::io::read_document(args.observed));
    emit(args.out,
         mgauss::io::dump(mgauss::io::matrix_gaussian_doc(j.conditional(obs))));
  } else if (sub == "quadform") {
    run_quadform(args);
  } else if (sub == "convert") {
    run_convert(args);
  } else if (sub == "fit") {
    const std::vector<Matrix> samples =
        mgauss::io::load_matrix_list(mgauss::io::read_document(args.samples));
    if (!samples.empty() &&
        samples.size() <= samples[0].rows() * samples[0].cols()) {
      std::cerr << "warning: only " << samples.size() << " samples for a "
                << samples[0].rows() * samples[0].cols()
                << "-dimensional covariance; the estimate is singular "
                   "without jitter\n";
    }
    emit(args.out, mgauss::io::dump(mgauss::io::matrix_gaussian_doc(
                       mgauss::fit_mle(samples, args.jitter))));
  } else if (sub == "check-kron") {
    const Matrix v =
        mgauss::io::load_matrix(mgauss::io::read_document(args.variances));
    const auto res = mgauss::check_diag_representable(v, args.rel_tol);
    std::ostringstream os;
    os << "representable: " << (res.representable ? "true" : "false") << "\n";
    if (res.representable) {
      os << "u: " << format_vector(res.u) << "\n";
      os << "v: " << format_vector(res.v) << "\n";
    }
    emit(args.out, os.str());
  } else if (sub == "nearest-kron") {
    const MatrixGaussian d =
        mgauss::io::load_distribution(mgauss::io::read_document(args.dist));
    const auto res = mgauss::nearest_kron_covariance(d.sigma(), d.rows(),
                                                     d.cols(), args.iters);
    const json out{{"kind", "nearest_kron_result"},
                   {"rows", d.rows()},
                   {"cols", d.cols()},
                   {"u", mgauss::io::matrix_doc(res.u)["data"]},
                   {"v", mgauss::io::matrix_doc(res.v)["data"]},
                   {"residual", res.residual},
                   {"relative_residual", res.relative_residual},
                   {"factors_positive_definite", res.factors_positive_definite}};
    emit(args.out, mgauss::io::dump(out));
  } else if (sub == "params") {
    const auto pc = mgauss::param_count_ratio(args.n, args.p);
    std::ostringstream os;
    os << "structured: " << pc.structured << "\n";
    os << "full: " << pc.full << "\n";
    os << "ratio: " << format_scalar(pc.ratio);
    emit(args.out, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix Gaussian distributions: density, sampling, "
               "conditioning, covariance representations, and Kronecker "
               "structure diagnostics"};
  app.require_subcommand(1);
  Args args;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", args.out, "Output path (default: stdout)");
  };

  auto* sample = app.add_subcommand("sample", "Draw reproducible samples");
  sample->add_option("--dist", args.dist, "Distribution document")->required();
  sample->add_option("--seed", args.seed, "RNG seed")->required();
  sample->add_option("--count", args.count, "Number of draws");
  add_out(sample);

  auto* logpdf = app.add_subcommand("logpdf", "Log density at a point");
  logpdf->add_option("--dist", args.dist, "Distribution document")->required();
  logpdf->add_option("--at", args.at, "Matrix document")->required();
  add_out(logpdf);

  auto* entropy = app.add_subcommand("entropy", "Differential entropy");
  entropy->add_option("--dist", args.dist, "Distribution document")->required();
  add_out(entropy);

  auto* affine = app.add_subcommand("affine", "Distribution of B*A + C");
  affine->add_option("--dist", args.dist, "Distribution document")->required();
  affine->add_option("--b", args.b, "Left factor matrix document")->required();
  affine->add_option("--c", args.c, "Shift matrix document")->required();
  add_out(affine);

  auto* marginal = app.add_subcommand("marginal", "Marginal of a joint block");
  marginal->add_option("--joint", args.joint, "Joint document")->required();
  marginal->add_option("--which", args.which, "Block to keep")
      ->check(CLI::IsMember({"A", "B"}));
  add_out(marginal);

  auto* conditional =
      app.add_subcommand("conditional", "Law of block A given B");
  conditional->add_option("--joint", args.joint, "Joint document")->required();
  conditional->add_option("--observed", args.observed, "Observed B document")
      ->required();
  add_out(conditional);

  auto* quadform =
      app.add_subcommand("quadform", "Expected quadratic form E[A^T C B]");
  quadform->add_option("--joint", args.joint, "Joint document")->required();
  quadform->add_option("--c", args.c, "Center matrix document")->required();
  auto* xopt = quadform->add_option("--x", args.x, "Left vector document");
  auto* uopt = quadform->add_option("--u", args.u, "Right vector document");
  xopt->needs(uopt);
  uopt->needs(xopt);
  add_out(quadform);

  auto* convert =
      app.add_subcommand("convert", "Switch covariance representation");
  convert->add_option("--dist", args.dist, "Input document")->required();
  convert->add_option("--to", args.to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"s", "sigma"}));
  add_out(convert);

  auto* fit = app.add_subcommand("fit", "Maximum-likelihood fit to samples");
  fit->add_option("--samples", args.samples, "Array of matrix documents")
      ->required();
  fit->add_option("--jitter", args.jitter, "Diagonal jitter added to Sigma");
  add_out(fit);

  auto* check =
      app.add_subcommand("check-kron", "Kronecker representability of an "
                                       "independent-entry variance grid");
  check->add_option("--variances", args.variances, "Variance grid document")
      ->required();
  check->add_option("--rel-tol", args.rel_tol, "Relative tolerance");
  add_out(check);

  auto* nearest =
      app.add_subcommand("nearest-kron", "Best Kronecker covariance fit");
  nearest->add_option("--dist", args.dist, "Distribution document")->required();
  nearest->add_option("--iters", args.iters, "Power iteration steps");
  add_out(nearest);

  auto* params =
      app.add_subcommand("params", "Covariance parameter counts: structured "
                                   "family vs full family");
  params->add_option("--n", args.n, "Row count")->required();
  params->add_option("--p", args.p, "Column count")->required();
  add_out(params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return dispatch(app, args);
  } catch (const mgauss::io::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mgauss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
