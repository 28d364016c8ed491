#include "nok/exact.hpp"

#include "nok/error.hpp"

#include <charconv>

namespace nok {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DominanceViolation: return "DominanceViolation";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::PlacementNotInjective: return "PlacementNotInjective";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::DimensionOverflow: return "DimensionOverflow";
    case Errc::Unbounded: return "Unbounded";
    case Errc::Empty: return "Empty";
    case Errc::InterpolationMismatch: return "InterpolationMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotThreeDimensional: return "NotThreeDimensional";
    case Errc::ResourceExceeded: return "ResourceExceeded";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw Error(Errc::Parse, "empty integer in '" + std::string(text) + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw Error(Errc::Parse, "bad integer '" + std::string(part) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw Error(Errc::Parse, "bad integer '" + std::string(part) + "'");
      }
    }
    std::string digits(part[0] == '+' ? part.substr(1) : part);
    return Integer(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Integer floor_of(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil_of(const Rational& value) { return -floor_of(-value); }

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

Integer factorial(unsigned k) {
  Integer r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

bool Weight::is_zero() const {
  for (auto e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

bool Weight::is_strictly_dominant() const {
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] <= entries_[i + 1]) return false;
  }
  return true;
}

Weight make_weight(std::span<const std::int64_t> entries) {
  if (entries.empty()) throw Error(Errc::SizeMismatch, "weight must have at least one entry");
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (entries[i] < entries[i + 1]) {
      throw Error(Errc::DominanceViolation, "entry " + std::to_string(i + 1) + " (" +
                                                std::to_string(entries[i]) + ") < entry " +
                                                std::to_string(i + 2) + " (" +
                                                std::to_string(entries[i + 1]) + ")");
    }
  }
  return Weight(std::vector<std::int64_t>(entries.begin(), entries.end()));
}

Weight make_weight(std::initializer_list<std::int64_t> entries) {
  return make_weight(std::span<const std::int64_t>(entries.begin(), entries.size()));
}

Weight zero_weight(std::size_t size) {
  std::vector<std::int64_t> zeros(size, 0);
  return make_weight(zeros);
}

std::vector<std::int64_t> pad_weight(const Weight& weight, std::size_t n) {
  if (weight.size() > n) {
    throw Error(Errc::SizeMismatch, "cannot pad a weight of size " + std::to_string(weight.size()) +
                                        " to " + std::to_string(n));
  }
  std::vector<std::int64_t> out(weight.entries().begin(), weight.entries().end());
  out.resize(n, 0);
  return out;
}

BundleSpec make_bundle_spec(std::size_t n, std::vector<Weight> weights) {
  if (n < 2) throw Error(Errc::SizeMismatch, "bundle spec needs n >= 2");
  if (weights.size() != n - 1) {
    throw Error(Errc::SizeMismatch, "expected " + std::to_string(n - 1) + " weights, got " +
                                        std::to_string(weights.size()));
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (weights[i - 1].size() != n - i + 1) {
      throw Error(Errc::SizeMismatch, "weight " + std::to_string(i) + " must have size " +
                                          std::to_string(n - i + 1));
    }
  }
  return BundleSpec(n, std::move(weights));
}

BundleSpec scale_spec(const BundleSpec& spec, std::int64_t k) {
  if (k < 0) throw Error(Errc::IndexOutOfRange, "scale factor must be nonnegative");
  std::vector<Weight> scaled;
  scaled.reserve(spec.weights().size());
  for (const auto& w : spec.weights()) {
    std::vector<std::int64_t> e(w.entries().begin(), w.entries().end());
    for (auto& x : e) x *= k;
    scaled.push_back(make_weight(e));
  }
  return make_bundle_spec(spec.n(), std::move(scaled));
}

Weight parse_weight(std::string_view text) {
  std::vector<std::int64_t> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto part = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(Errc::Parse, "bad weight entry '" + std::string(part) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return make_weight(entries);
}

BundleSpec parse_weights(std::size_t n, std::string_view text) {
  std::vector<Weight> weights;
  std::size_t pos = 0;
  while (true) {
    auto semi = text.find(';', pos);
    weights.push_back(parse_weight(text.substr(pos, semi == text.npos ? text.npos : semi - pos)));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return make_bundle_spec(n, std::move(weights));
}

}  // namespace nok
