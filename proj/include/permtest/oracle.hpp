#pragma once

#include <cstdint>

#include "permtest/partial_sgraph.hpp"
#include "permtest/permutation.hpp"
#include "permtest/word.hpp"

namespace permtest {

/// Query access to a hidden tuple.
///
/// Each call to query() is one query: it answers sigma_s(x) or sigma_s^-1(x)
/// and records the corresponding edge in the transcript.
class OracleTuple {
 public:
  explicit OracleTuple(const PermTuple& hidden, bool record_transcript = true);

  std::uint32_t n() const noexcept { return hidden_->n(); }
  std::size_t d() const noexcept { return hidden_->d(); }

  Point query(Point x, Letter l);
  /// Walks w from x (rightmost letter first), one query per letter.
  Point walk(const Word& w, Point x);

  std::uint64_t queries() const noexcept { return queries_; }
  std::uint64_t inverse_queries() const noexcept { return inverse_queries_; }
  const PartialSGraph& transcript() const noexcept { return transcript_; }

 private:
  const PermTuple* hidden_;
  bool record_;
  std::uint64_t queries_ = 0;
  std::uint64_t inverse_queries_ = 0;
  PartialSGraph transcript_;
};

}  // namespace permtest
