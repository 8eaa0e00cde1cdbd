#include "permtest/oracle.hpp"

#include "permtest/errors.hpp"

namespace permtest {

OracleTuple::OracleTuple(const PermTuple& hidden, bool record_transcript)
    : hidden_(&hidden), record_(record_transcript), transcript_(static_cast<std::uint32_t>(hidden.d())) {}

Point OracleTuple::query(Point x, Letter l) {
  if (l.generator < 1 || l.generator > hidden_->d()) throw ValidationError("query on a label outside 1..d");
  if (x < 1 || x > hidden_->n()) throw ValidationError("query on a point outside [n]");
  ++queries_;
  const Permutation& p = hidden_->generator(l.generator);
  Point y;
  if (l.positive()) {
    y = p(x);
    if (record_) transcript_.add_edge({x, l.generator, y});
  } else {
    ++inverse_queries_;
    y = p.preimage(x);
    if (record_) transcript_.add_edge({y, l.generator, x});
  }
  return y;
}

Point OracleTuple::walk(const Word& w, Point x) {
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) x = query(x, *it);
  return x;
}

}  // namespace permtest
