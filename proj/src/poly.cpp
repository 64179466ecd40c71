#include "wldu/poly.hpp"

#include <charconv>
#include <sstream>

namespace wldu {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (c.value >= field_.order()) throw Error(ErrorCode::InvalidArgument, "coefficient is not canonical");
  }
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
  if (coeffs_.size() > field_.order()) {
    throw Error(ErrorCode::InvalidArgument, "degree must be below q");
  }
}

Poly Poly::parse(const Field& field, std::string_view text) {
  std::vector<Elem> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient in \"" + std::string(text) + "\"");

    std::int64_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidArgument, "bad coefficient \"" + std::string(token) + "\"");
    }
    if (field.is_prime_field()) {
      coeffs.push_back(field.from_int(value));
    } else {
      if (value < 0) throw Error(ErrorCode::InvalidArgument, "extension-field coefficients must be canonical values");
      coeffs.push_back(field.element(static_cast<std::uint64_t>(value)));
    }
    pos = comma + 1;
  }
  return Poly(field, std::move(coeffs));
}

Poly Poly::monomial(const Field& field, Elem coeff, std::size_t exponent) {
  std::vector<Elem> coeffs(exponent + 1, Elem{0});
  coeffs[exponent] = coeff;
  return Poly(field, std::move(coeffs));
}

Elem Poly::eval(Elem x) const {
  Elem acc{0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out << ',';
    out << coeffs_[i].value;
  }
  return out.str();
}

FunctionTable::FunctionTable(Field field, std::vector<Elem> values)
    : field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != field_.order()) throw Error(ErrorCode::InvalidArgument, "value table must have q entries");
  for (Elem y : values_) {
    if (y.value >= field_.order()) throw Error(ErrorCode::InvalidArgument, "table value is not canonical");
  }
}

bool is_permutation_bruteforce(const FunctionTable& f) {
  std::vector<bool> seen(f.size(), false);
  for (Elem y : f.values()) {
    if (seen[y.value]) return false;
    seen[y.value] = true;
  }
  return true;
}

std::uint64_t image_size(const FunctionTable& f) {
  std::vector<bool> seen(f.size(), false);
  std::uint64_t distinct = 0;
  for (Elem y : f.values()) {
    if (!seen[y.value]) {
      seen[y.value] = true;
      ++distinct;
    }
  }
  return distinct;
}

}  // namespace wldu
