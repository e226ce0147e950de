#include "muntz/exponents.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace muntz {

namespace {

void validate_values(const std::vector<double>& values) {
  if (values.empty()) throw InvalidInput("ExponentSequence: empty value list");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw InvalidInput("ExponentSequence: non-finite exponent");
    if (values[i] < 0.0)
      throw InvalidInput("ExponentSequence: negative exponent");
    if (i > 0 && !(values[i - 1] < values[i]))
      throw InvalidInput("ExponentSequence: values must strictly increase");
  }
}

}  // namespace

ExponentSequence::ExponentSequence(std::vector<double> values,
                                   std::optional<GeometricFamily> family)
    : values_(std::move(values)), family_(std::move(family)) {
  validate_values(values_);
  origin_offset_ = values_.front() > 0.0 ? 0 : 1;
}

ExponentSequence ExponentSequence::from_values(std::vector<double> values) {
  return ExponentSequence(std::move(values), std::nullopt);
}

ExponentSequence ExponentSequence::geometric(double base, std::size_t count,
                                             double scale, long start) {
  if (!(base >= 2.0) || !std::isfinite(base))
    throw InvalidInput("geometric family: base must be >= 2");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw InvalidInput("geometric family: scale must be > 0");
  if (count == 0) throw InvalidInput("geometric family: count must be >= 1");
  std::vector<double> values;
  values.reserve(count);
  const long double b = base;
  const long double s = scale;
  for (std::size_t i = 0; i < count; ++i) {
    long double v = s * powl(b, static_cast<long double>(start) + static_cast<long double>(i));
    double rounded = static_cast<double>(v);
    if (!std::isfinite(rounded))
      throw InvalidInput("geometric family: exponent overflows double");
    values.push_back(rounded);
  }
  return ExponentSequence(std::move(values), GeometricFamily{base, scale, start});
}

ExponentSequence ExponentSequence::prefix(std::size_t count) const {
  if (count == 0 || count > values_.size())
    throw InvalidInput("ExponentSequence::prefix: count out of range");
  return ExponentSequence(
      std::vector<double>(values_.begin(), values_.begin() + count), family_);
}

bool is_rip(const ExponentSequence& seq) {
  if (seq.size() < 2) throw InvalidInput("is_rip: need at least 2 values");
  for (std::size_t k = 0; k + 1 < seq.size(); ++k)
    if (seq[k + 1] < 2.0 * seq[k]) return false;
  return true;
}

std::vector<std::size_t> extract_rip_subsequence(const ExponentSequence& seq,
                                                 std::size_t count) {
  if (count == 0) throw InvalidInput("extract_rip_subsequence: count must be >= 1");
  std::vector<std::size_t> picked;
  double prev = 0.0;
  for (std::size_t j = 0; j < seq.size() && picked.size() < count; ++j) {
    const bool admissible =
        picked.empty() ? seq[j] > 0.0 : seq[j] >= 2.0 * prev;
    if (admissible) {
      picked.push_back(j);
      prev = seq[j];
    }
  }
  if (picked.size() < count) {
    std::ostringstream msg;
    msg << "extract_rip_subsequence: only " << picked.size() << " of " << count
        << " RIP picks fit the stored prefix";
    throw InsufficientSequence(msg.str(), picked.size());
  }
  return picked;
}

MuntzSum muntz_partial_sum(const ExponentSequence& seq) {
  MuntzSum out;
  for (double v : seq.values())
    if (v > 0.0) out.partial_sum += 1.0 / v;
  if (seq.size() >= 2 && seq.back() > 0.0 && is_rip(seq))
    out.rip_tail_bound = 2.0 / seq.back();
  return out;
}

namespace {

double parse_real(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("sequence spec: bad ") + what + " '" + text + "'");
  }
  if (used != text.size())
    throw InvalidInput(std::string("sequence spec: trailing junk in ") + what +
                       " '" + text + "'");
  return value;
}

long parse_integer(const std::string& text, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("sequence spec: bad ") + what + " '" + text + "'");
  }
  if (used != text.size())
    throw InvalidInput(std::string("sequence spec: trailing junk in ") + what +
                       " '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

ExponentSequence parse_sequence_spec(const std::string& spec,
                                     std::size_t family_count) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InvalidInput("sequence spec: expected 'geometric:...' or 'list:...'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);

  if (kind == "list") {
    if (rest.empty()) throw InvalidInput("sequence spec: empty list");
    std::vector<double> values;
    for (const auto& item : split(rest, ','))
      values.push_back(parse_real(item, "list entry"));
    return ExponentSequence::from_values(std::move(values));
  }

  if (kind == "geometric") {
    auto parts = split(rest, ':');
    if (parts.empty() || parts.front().empty())
      throw InvalidInput("sequence spec: geometric needs a base");
    const double base = parse_real(parts.front(), "base");
    double scale = 1.0;
    long start = 1;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const auto eq = parts[i].find('=');
      if (eq == std::string::npos)
        throw InvalidInput("sequence spec: expected key=value, got '" + parts[i] + "'");
      const std::string key = parts[i].substr(0, eq);
      const std::string value = parts[i].substr(eq + 1);
      if (key == "scale")
        scale = parse_real(value, "scale");
      else if (key == "start")
        start = parse_integer(value, "start");
      else
        throw InvalidInput("sequence spec: unknown option '" + key + "'");
    }
    return ExponentSequence::geometric(base, family_count, scale, start);
  }

  throw InvalidInput("sequence spec: unknown kind '" + kind + "'");
}

}  // namespace muntz
