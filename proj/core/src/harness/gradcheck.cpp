#include "stochkit/harness/gradcheck.hpp"

#include "stochkit/problems/datagen.hpp"
#include "stochkit/rng.hpp"

#include <algorithm>
#include <cmath>

namespace stochkit {

namespace {

struct fixture {
  mat X;
  vec y;
  index_t classes = 0;
};

fixture gradcheck_fixture(problem_kind kind, std::uint64_t seed) {
  switch (kind) {
    case problem_kind::linear_regression:
    case problem_kind::l1_linear_regression: {
      const dataset d = generate_linear_data(50, 6, 0.2, seed);
      return {d.X_train, d.y_train, 0};
    }
    case problem_kind::softmax_regression: {
      const dataset d = generate_multiclass_data(54, 4, 3, seed);
      return {d.X_train, d.y_train, d.n_classes};
    }
    default: { // binary classification kinds
      const dataset d = generate_logistic_data(50, 6, seed);
      return {d.X_train, d.y_train, 0};
    }
  }
}

} // namespace

gradcheck_report gradcheck_problem(problem_kind kind, int pairs, std::uint64_t seed) {
  const fixture fx = gradcheck_fixture(kind, seed);
  const double lambda = 0.05;
  const problem_ptr prob = make_problem(kind, fx.X, fx.y, lambda, fx.classes);
  const index_t n = prob->n();
  const index_t dim = prob->dim();

  rng_engine rng(seed + 1);
  gradcheck_report rep{std::string(to_string(kind)), 0, 0.0, 0.0, false};
  constexpr double h = 1e-6;

  for (int t = 0; t < pairs; ++t) {
    const vec w = rng.normal_vec(dim);
    const index_t bsz = 1 + static_cast<index_t>(rng.uniform_below(static_cast<uint64_t>(n)));
    const index_list batch = rng.sample_iid(n, bsz);

    // Independent path: a fresh problem over exactly the batch rows, whose
    // full objective is the batch mean the gradient contract promises.
    mat Xb(bsz, fx.X.cols());
    vec yb(bsz);
    for (index_t i = 0; i < bsz; ++i) {
      Xb.row(i) = fx.X.row(batch[static_cast<std::size_t>(i)]);
      yb(i) = fx.y(batch[static_cast<std::size_t>(i)]);
    }
    const problem_ptr sub = make_problem(kind, std::move(Xb), std::move(yb), lambda, fx.classes);

    const vec g = prob->grad(w, batch);
    vec g_fd(dim);
    vec wp = w;
    for (index_t j = 0; j < dim; ++j) {
      wp(j) = w(j) + h;
      const double fp = sub->smooth_cost(wp);
      wp(j) = w(j) - h;
      const double fm = sub->smooth_cost(wp);
      wp(j) = w(j);
      g_fd(j) = (fp - fm) / (2.0 * h);
    }
    const double rel = (g_fd - g).norm() / std::max(1.0, g.norm());
    rep.max_grad_rel_err = std::max(rep.max_grad_rel_err, rel);

    const vec v = rng.normal_vec(dim);
    const vec hv = prob->hess_vec(w, v, batch);
    const vec hv_ref = prob->hess(w, batch) * v;
    const double herr = (hv - hv_ref).norm() / std::max(1.0, hv_ref.norm());
    rep.max_hess_vec_err = std::max(rep.max_hess_vec_err, herr);
    ++rep.checks;
  }

  rep.ok = rep.max_grad_rel_err <= kGradRelTol && rep.max_hess_vec_err <= kHessVecTol;
  return rep;
}

std::vector<gradcheck_report> run_gradcheck(const std::string& filter) {
  static const problem_kind kinds[] = {
      problem_kind::linear_regression,    problem_kind::logistic_regression,
      problem_kind::softmax_regression,   problem_kind::linear_svm,
      problem_kind::l1_linear_regression, problem_kind::l1_logistic_regression,
  };
  std::vector<gradcheck_report> out;
  for (const problem_kind k : kinds) {
    if (!filter.empty() && filter != to_string(k)) continue;
    out.push_back(gradcheck_problem(k));
  }
  if (out.empty()) problem_kind_from_string(filter); // throws with the valid list
  return out;
}

} // namespace stochkit
