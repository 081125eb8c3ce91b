#include "stochkit/problems/scoring.hpp"

namespace stochkit {

score_report predict_and_score(const problem& prob, const vec& w, const mat& X_test,
                               const vec& y_test) {
  return prob.score(w, X_test, y_test);
}

} // namespace stochkit
