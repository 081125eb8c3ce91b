#include "stochkit/solvers/sag.hpp"

#include "stochkit/session.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace stochkit {

gradient_table::gradient_table(index_t dim, index_t n)
    : table_(mat::Zero(dim, n)), sum_(vec::Zero(dim)) {
  if (dim <= 0 || n <= 0) throw argument_error("gradient_table: dim and n must be positive");
}

vec gradient_table::column(index_t i) const {
  if (i < 0 || i >= table_.cols()) throw argument_error("gradient_table: index out of range");
  return table_.col(i);
}

void gradient_table::update(index_t i, const vec& g) {
  if (i < 0 || i >= table_.cols()) throw argument_error("gradient_table: index out of range");
  if (g.size() != table_.rows()) throw argument_error("gradient_table: gradient size mismatch");
  sum_ += g - table_.col(i);
  table_.col(i) = g;
}

vec gradient_table::mean() const { return sum_ / static_cast<double>(table_.cols()); }

solver_result sag(const problem& prob, const options_patch& user) {
  options_patch local;
  local.batch_size = 1;
  const solver_options o = merge_options(global_defaults(), local, user);

  const bool saga = o.sub_mode == "SAGA";
  if (!saga && !o.sub_mode.empty() && o.sub_mode != "SAG")
    throw config_error("sag: unknown sub_mode '" + o.sub_mode + "'");
  if (!saga && prob.has_prox())
    throw config_error("sag: SAG has no proximal variant, use SAGA");
  solver_session s(prob, o, saga ? "SAGA" : "SAG");

  vec w = s.initial_w();
  gradient_table table(prob.dim(), prob.n());

  if (s.record_epoch(w)) return s.finish(std::move(w));
  for (std::int64_t epoch = 1; epoch <= o.max_epoch; ++epoch) {
    for (const auto& batch : s.epoch_batches()) {
      const double eta = s.step_now();
      const auto bsz = static_cast<double>(batch.size());
      vec v;
      if (saga) {
        // Unbiased estimate built before the table absorbs the new gradients.
        v = table.mean();
        vec correction = vec::Zero(prob.dim());
        for (const index_t i : batch) {
          const vec gi = prob.grad(w, index_span(&i, 1));
          correction += gi - table.column(i);
          table.update(i, gi);
        }
        v += correction / bsz;
      } else {
        for (const index_t i : batch) {
          const vec gi = prob.grad(w, index_span(&i, 1));
          table.update(i, gi);
        }
        v = table.mean();
      }
      s.add_grad_evals(static_cast<std::int64_t>(batch.size()));
      w -= eta * v;
      if (prob.has_prox()) w = prob.prox(w, eta);
      s.tick();
    }
    if (s.record_epoch(w)) break;
  }
  return s.finish(std::move(w));
}

} // namespace stochkit
