#include "bsfan/sequences.hpp"

#include <algorithm>

#include "bsfan/errors.hpp"

namespace bsfan {

DegreeSequence::DegreeSequence(int start, std::vector<int> degrees) : start_(start), degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw ValidationError("degree sequence needs at least one finite entry");
  for (std::size_t k = 1; k < degrees_.size(); ++k)
    if (degrees_[k - 1] >= degrees_[k])
      throw ValidationError("degree sequence not strictly increasing at positions " +
                            std::to_string(start_ + static_cast<int>(k) - 1) + "," +
                            std::to_string(start_ + static_cast<int>(k)));
}

DegreeSequence DegreeSequence::trim_left(int count) const {
  return DegreeSequence(start_ + count, std::vector<int>(degrees_.begin() + count, degrees_.end()));
}

PartialOrdering compare_degree_sequences(const DegreeSequence& a, const DegreeSequence& b) {
  // Encode -inf/+inf as rank 0/2 and finite values as rank 1; compare (rank, value).
  auto key = [](const DegreeSequence& d, int pos) -> std::pair<int, int> {
    if (pos < d.start()) return {0, 0};
    if (pos > d.end()) return {2, 0};
    return {1, d.at(pos)};
  };
  bool less = false;
  bool greater = false;
  const int lo = std::min(a.start(), b.start());
  const int hi = std::max(a.end(), b.end());
  for (int pos = lo; pos <= hi; ++pos) {
    auto ka = key(a, pos);
    auto kb = key(b, pos);
    if (ka < kb) less = true;
    if (ka > kb) greater = true;
  }
  if (less && greater) return PartialOrdering::Incomparable;
  if (less) return PartialOrdering::Less;
  if (greater) return PartialOrdering::Greater;
  return PartialOrdering::Equal;
}

std::string to_string(PartialOrdering o) {
  switch (o) {
    case PartialOrdering::Less: return "Less";
    case PartialOrdering::Equal: return "Equal";
    case PartialOrdering::Greater: return "Greater";
    case PartialOrdering::Incomparable: return "Incomparable";
  }
  return "?";
}

std::string to_string(const DegreeSequence& d) {
  std::string s = "(...,-inf";
  for (int pos = d.start(); pos <= d.end(); ++pos) {
    s += ",";
    s += std::to_string(d.at(pos));
    if (pos == 0) s += "°";
  }
  s += ",inf,...)";
  if (!d.covers(0)) s += "@" + std::to_string(d.start());
  return s;
}

std::string to_string(CodimValue v) {
  if (v.is_empty()) return "empty";
  if (v.is_infinite()) return "inf";
  return std::to_string(v.value());
}

CodimensionSequence CodimensionSequence::constant(CodimValue v, int n) {
  return validate_codim_sequence(CodimDescription{n, v, 0, {}, v});
}

CodimValue CodimensionSequence::at(int i) const {
  if (i < d_.window_start) return d_.left;
  const auto offset = static_cast<std::size_t>(i - d_.window_start);
  if (offset < d_.window.size()) return d_.window[offset];
  return d_.right;
}

CodimensionSequence validate_codim_sequence(const CodimDescription& raw) {
  if (raw.n < 0) throw ValidationError("ambient dimension n must be >= 0");
  auto check_range = [&](CodimValue v, const std::string& where) {
    if (v.is_finite() && (v.value() < 0 || v.value() > raw.n + 1))
      throw ValidationError("codimension value " + std::to_string(v.value()) + " at " + where +
                            " is outside {empty, 0.." + std::to_string(raw.n + 1) + ", inf}");
  };
  check_range(raw.left, "left fill");
  check_range(raw.right, "right fill");

  // Walk left fill, window, right fill as one sequence.
  CodimValue prev = raw.left;
  std::string prev_pos = "left fill (positions < " + std::to_string(raw.window_start) + ")";
  for (std::size_t k = 0; k < raw.window.size(); ++k) {
    const std::string pos = "position " + std::to_string(raw.window_start + static_cast<int>(k));
    check_range(raw.window[k], pos);
    if (raw.window[k] < prev)
      throw ValidationError("codimension sequence decreases between " + prev_pos + " (" + to_string(prev) +
                            ") and " + pos + " (" + to_string(raw.window[k]) + ")");
    prev = raw.window[k];
    prev_pos = pos;
  }
  if (raw.right < prev)
    throw ValidationError("codimension sequence decreases between " + prev_pos + " (" + to_string(prev) +
                          ") and right fill (" + to_string(raw.right) + ")");
  return CodimensionSequence(raw);
}

bool is_compatible(const DegreeSequence& d, const CodimensionSequence& c) {
  const int l = d.codimension();
  const int k = d.start();
  if (l > c.n() + 1) return false;
  // c is nondecreasing, so c_k nonempty means c is nonempty on all of [k, k+l].
  if (c.at(k).is_empty()) return false;
  return c.at(k).le(l) && c.at(k + 1).ge(l);
}

}  // namespace bsfan
