#include "wldu/du.hpp"

#include <algorithm>
#include <string>

namespace wldu {

struct RowKernel {
  // Counts x -> values[x+a] - values[x] into scratch and reports the row max.
  static RowResult run(const Field& field, std::span<const Elem> values, Elem a, DeltaScratch& scratch,
                       bool keep_counts) {
    auto& counts = scratch.counts_;
    auto& touched = scratch.touched_;
    const std::uint64_t q = field.order();
    if (counts.size() < q) counts.resize(q, 0);
    touched.clear();

    if (field.is_prime_field()) {
      for (std::uint64_t x = 0; x < q; ++x) {
        std::uint64_t xa = x + a.value;
        if (xa >= q) xa -= q;
        const std::uint64_t hi = values[xa].value, lo = values[x].value;
        const std::uint64_t c = hi >= lo ? hi - lo : hi + q - lo;
        if (counts[c]++ == 0) touched.push_back(c);
      }
    } else {
      for (std::uint64_t x = 0; x < q; ++x) {
        const Elem xa = field.add(Elem{x}, a);
        const std::uint64_t c = field.sub(values[xa.value], values[x]).value;
        if (counts[c]++ == 0) touched.push_back(c);
      }
    }

    RowResult row;
    row.argmax_c = Elem{q};
    for (std::uint64_t c : touched) {
      const std::uint64_t n = counts[c];
      if (n > row.max_count || (n == row.max_count && c < row.argmax_c.value)) {
        row.max_count = n;
        row.argmax_c = Elem{c};
      }
    }
    if (keep_counts) row.counts.assign(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(q));
    for (std::uint64_t c : touched) counts[c] = 0;
    return row;
  }

  static std::vector<Elem>& values_buffer(DeltaScratch& scratch) { return scratch.values_; }
};

namespace {

void require_direction(Elem a) {
  if (a.value == 0) throw Error(ErrorCode::ZeroDirection, "direction a must be nonzero");
}

}  // namespace

RowResult delta_row(const FunctionTable& f, Elem a, DeltaScratch& scratch, bool keep_counts) {
  require_direction(a);
  f.field().element(a.value);
  return RowKernel::run(f.field(), f.values(), a, scratch, keep_counts);
}

RowResult delta_row(const FunctionTable& f, Elem a, bool keep_counts) {
  DeltaScratch scratch(f.size());
  return delta_row(f, a, scratch, keep_counts);
}

DuResult differential_uniformity(const FunctionTable& f, bool keep_per_a) {
  const std::uint64_t q = f.size();
  DeltaScratch scratch(q);
  DuResult best;
  if (keep_per_a) best.per_a_max.assign(q, 0);
  for (std::uint64_t a = 1; a < q; ++a) {
    const RowResult row = RowKernel::run(f.field(), f.values(), Elem{a}, scratch, false);
    if (keep_per_a) best.per_a_max[a] = row.max_count;
    if (row.max_count > best.delta) {
      best.delta = row.max_count;
      best.witness_a = Elem{a};
      best.witness_c = row.argmax_c;
    }
  }
  return best;
}

std::uint64_t solution_count(const FunctionTable& f, Elem a, Elem c) {
  require_direction(a);
  const Field& field = f.field();
  field.element(a.value);
  field.element(c.value);
  std::uint64_t n = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (field.sub(f(field.add(Elem{x}, a)), f(Elem{x})) == c) ++n;
  }
  return n;
}

BinomialKernel::BinomialKernel(Field field, std::uint64_t s) : field_(std::move(field)), s_(s) {
  const std::uint64_t q = field_.order();
  x_pow_s_.resize(q);
  eta_.resize(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    x_pow_s_[x] = field_.pow(Elem{x}, s_);
    eta_[x] = static_cast<std::int8_t>(field_.quadratic_character(Elem{x}));
  }
}

void BinomialKernel::tabulate(Elem b, std::vector<Elem>& out) const {
  const std::uint64_t q = field_.order();
  out.resize(q);
  const Elem b_plus = field_.add(b, field_.one());
  const Elem b_minus = field_.sub(b, field_.one());
  for (std::uint64_t x = 0; x < q; ++x) {
    const int eta = eta_[x];
    const Elem h = eta > 0 ? b_plus : (eta < 0 ? b_minus : b);
    out[x] = field_.mul(x_pow_s_[x], h);
  }
}

DuResult BinomialKernel::evaluate(const BinomialParams& params, DeltaScratch& scratch) const {
  if (params.field().order() != field_.order() || params.s() != s_) {
    throw Error(ErrorCode::InvalidArgument, "kernel built for a different field or exponent");
  }
  if (!wl_is_pp(params.to_wanlidl())) {
    throw Error(ErrorCode::PreconditionNotPP,
                "x^" + std::to_string(s_) + "(eta(x)+" + std::to_string(params.b().value) + ") is not a PP");
  }
  auto& values = RowKernel::values_buffer(scratch);
  tabulate(params.b(), values);
  const RowResult row = RowKernel::run(field_, values, field_.one(), scratch, false);
  DuResult out;
  out.delta = row.max_count;
  out.witness_a = field_.one();
  out.witness_c = row.argmax_c;
  return out;
}

DuResult du_fast_binomial(const BinomialParams& params) {
  const BinomialKernel kernel(params.field(), params.s());
  DeltaScratch scratch(params.field().order());
  return kernel.evaluate(params, scratch);
}

WanLidlKernel::WanLidlKernel(Field field, std::uint64_t s, std::uint64_t d)
    : field_(std::move(field)), s_(s), d_(d), group_(field_.subgroup_H(d)) {
  const std::uint64_t q = field_.order();
  std::vector<std::pair<Elem, std::uint32_t>> index_of;
  index_of.reserve(d);
  for (std::uint32_t i = 0; i < d; ++i) index_of.emplace_back(group_[i], i);
  std::sort(index_of.begin(), index_of.end());

  // T(x) = group_[t_index_[x]] for x != 0.
  const std::uint64_t exponent = (q - 1) / d;
  t_index_.assign(q, 0);
  x_pow_s_.assign(q, Elem{0});
  for (std::uint64_t x = 1; x < q; ++x) {
    const Elem t = field_.pow(Elem{x}, exponent);
    const auto it = std::lower_bound(index_of.begin(), index_of.end(), std::make_pair(t, std::uint32_t{0}));
    t_index_[x] = it->second;
    x_pow_s_[x] = field_.pow(Elem{x}, s_);
  }
}

DuResult WanLidlKernel::evaluate(const WanLidlParams& params, DeltaScratch& scratch, bool keep_per_a) const {
  if (!(params.field() == field_) || params.s() != s_ || params.d() != d_) {
    throw Error(ErrorCode::InvalidArgument, "kernel built for different (q, s, d)");
  }
  const std::uint64_t q = field_.order();
  std::vector<Elem> h_on_group(d_);
  for (std::uint64_t i = 0; i < d_; ++i) h_on_group[i] = params.h().eval(group_[i]);

  auto& values = RowKernel::values_buffer(scratch);
  values.assign(q, Elem{0});
  std::vector<std::uint64_t> row_max(d_, 0);
  // lambda index 0 is lambda = 1, i.e. f itself; run it last so the buffer
  // holds f for the witness row.
  for (std::uint64_t step = 0; step < d_; ++step) {
    const std::uint64_t lambda = d_ - 1 - step;
    for (std::uint64_t x = 1; x < q; ++x) {
      std::uint64_t k = lambda + t_index_[x];
      if (k >= d_) k -= d_;
      values[x] = field_.mul(x_pow_s_[x], h_on_group[k]);
    }
    row_max[lambda] = RowKernel::run(field_, values, field_.one(), scratch, false).max_count;
  }

  DuResult out;
  out.delta = *std::max_element(row_max.begin(), row_max.end());
  for (std::uint64_t a = 1; a < q; ++a) {
    if (row_max[t_index_[a]] == out.delta) {
      out.witness_a = Elem{a};
      break;
    }
  }
  out.witness_c = RowKernel::run(field_, values, out.witness_a, scratch, false).argmax_c;
  if (keep_per_a) {
    out.per_a_max.assign(q, 0);
    for (std::uint64_t a = 1; a < q; ++a) out.per_a_max[a] = row_max[t_index_[a]];
  }
  return out;
}

DuResult du_wanlidl(const WanLidlParams& params) {
  const WanLidlKernel kernel(params.field(), params.s(), params.d());
  DeltaScratch scratch(params.field().order());
  return kernel.evaluate(params, scratch);
}

std::uint64_t DiffSpectrum::weighted_sum() const {
  std::uint64_t total = 0;
  for (const auto& [k, n] : histogram) total += k * n;
  return total;
}

DiffSpectrum differential_spectrum(const FunctionTable& f) {
  const std::uint64_t q = f.size();
  DeltaScratch scratch(q);
  DiffSpectrum spectrum;
  for (std::uint64_t a = 1; a < q; ++a) {
    const RowResult row = RowKernel::run(f.field(), f.values(), Elem{a}, scratch, true);
    std::uint64_t zero_cells = 0;
    for (std::uint32_t n : row.counts) {
      if (n == 0) {
        ++zero_cells;
      } else {
        ++spectrum.histogram[n];
      }
    }
    if (zero_cells != 0) spectrum.histogram[0] += zero_cells;
  }
  return spectrum;
}

}  // namespace wldu
