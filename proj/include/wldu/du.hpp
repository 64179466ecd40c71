#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wldu/ff.hpp"
#include "wldu/poly.hpp"
#include "wldu/wanlidl.hpp"

namespace wldu {

/// Worker-local counting buffer for one difference row. Only touched cells
/// are cleared between rows.
class DeltaScratch {
 public:
  explicit DeltaScratch(std::uint64_t q) : counts_(q, 0) { touched_.reserve(q); }

  std::uint64_t capacity() const { return counts_.size(); }

 private:
  friend struct RowKernel;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint64_t> touched_;
  std::vector<Elem> values_;
};

struct RowResult {
  std::uint64_t max_count = 0;
  /// Smallest c attaining max_count.
  Elem argmax_c;
  /// counts[c] = |{x : f(x+a) - f(x) = c}|, filled only on request.
  std::vector<std::uint32_t> counts;
};

/// One row of the difference distribution table, x -> f(x+a) - f(x).
/// Throws ZeroDirection for a = 0.
RowResult delta_row(const FunctionTable& f, Elem a, DeltaScratch& scratch, bool keep_counts = false);
RowResult delta_row(const FunctionTable& f, Elem a, bool keep_counts = false);

struct DuResult {
  std::uint64_t delta = 0;
  /// Smallest a != 0 whose row attains delta, then the smallest such c.
  Elem witness_a;
  Elem witness_c;
  /// per_a_max[a] = max row count in direction a (entry 0 unused). Optional.
  std::vector<std::uint64_t> per_a_max;
};

/// Exhaustive O(q^2) differential uniformity over every direction a != 0.
DuResult differential_uniformity(const FunctionTable& f, bool keep_per_a = false);

/// |{x : f(x+a) - f(x) = c}|. Throws ZeroDirection for a = 0.
std::uint64_t solution_count(const FunctionTable& f, Elem a, Elem c);

/// Value tables shared by every b of one (field, s) pair: x^s and eta(x).
/// Immutable after construction, so one kernel serves all sweep workers.
class BinomialKernel {
 public:
  BinomialKernel(Field field, std::uint64_t s);

  const Field& field() const { return field_; }
  std::uint64_t s() const { return s_; }

  /// Fills out[x] = x^s (eta(x) + b).
  void tabulate(Elem b, std::vector<Elem>& out) const;

  /// Differential uniformity of x^s(eta(x)+b) from the single row a = 1.
  /// Every other direction reduces to this row or to the row of the -b
  /// partner, and the two rows have identical count profiles. Throws
  /// PreconditionNotPP unless the polynomial passes wl_is_pp.
  DuResult evaluate(const BinomialParams& params, DeltaScratch& scratch) const;

 private:
  Field field_;
  std::uint64_t s_;
  std::vector<Elem> x_pow_s_;
  std::vector<std::int8_t> eta_;
};

/// O(q) differential uniformity for binomial-family permutations.
DuResult du_fast_binomial(const BinomialParams& params);

/// Differential uniformity of Wan-Lidl polynomials in O(d q). With
/// lambda = T(a), substituting x = aY gives
///   f(x+a) - f(x) = a^s (f_lambda(Y+1) - f_lambda(Y)),  f_lambda(Y) = Y^s h(lambda T(Y)),
/// so each direction's row profile equals the a = 1 row of f_lambda and only
/// d rows are needed. The witness matches differential_uniformity exactly.
///
/// The kernel caches x^s and the index of T(x) in H for one (field, s, d), so
/// it can be reused across many h.
class WanLidlKernel {
 public:
  WanLidlKernel(Field field, std::uint64_t s, std::uint64_t d);

  const Field& field() const { return field_; }
  std::uint64_t s() const { return s_; }
  std::uint64_t d() const { return d_; }

  DuResult evaluate(const WanLidlParams& params, DeltaScratch& scratch, bool keep_per_a = false) const;

 private:
  Field field_;
  std::uint64_t s_;
  std::uint64_t d_;
  std::vector<Elem> group_;
  std::vector<std::uint32_t> t_index_;
  std::vector<Elem> x_pow_s_;
};

DuResult du_wanlidl(const WanLidlParams& params);

struct DiffSpectrum {
  /// histogram[k] = number of (a, c), a != 0, with exactly k solutions.
  std::map<std::uint64_t, std::uint64_t> histogram;

  /// Sum of k * histogram[k]; always (q-1) q.
  std::uint64_t weighted_sum() const;
};

DiffSpectrum differential_spectrum(const FunctionTable& f);

}  // namespace wldu
