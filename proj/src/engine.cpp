#include "lg/engine.hpp"

#include "lg/braid.hpp"
#include "lg/ring.hpp"
#include "lg/statemodel.hpp"

namespace lg {

DenseMatrix<RingElem> evaluate_tangle(const BraidWord& b, const StateModel& model,
                                      const EngineOptions& opts) {
  auto z = identity_tangle<RingElem>(b.strings(), model.dim(), opts);
  if (opts.log) {
    *opts.log << "identity strings=" << b.strings() << " entries=" << z.size() << "\n";
  }
  for (const Letter& l : b.letters()) {
    z = accrete(z, model.generator_power(l.exp), l.pos, opts);
  }
  return close(z, model.closing_handle(), opts);
}

RingElem evaluate_raw(const BraidWord& b, const StateModel& model, const EngineOptions& opts) {
  return extract_scalar(evaluate_tangle(b, model, opts));
}

RingElem evaluate_raw(const BraidWord& b, const EngineOptions& opts) {
  return evaluate_raw(b, StateModel::links_gould(), opts);
}

}  // namespace lg
