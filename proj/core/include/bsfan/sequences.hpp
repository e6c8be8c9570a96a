#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bsfan {

/// A strictly increasing run of degrees d_start < ... < d_{start+l} placed at
/// homological positions start..start+l. Positions to the left are -inf and
/// positions to the right are +inf.
class DegreeSequence {
 public:
  /// Throws ValidationError when `degrees` is empty or not strictly increasing.
  DegreeSequence(int start, std::vector<int> degrees);

  int start() const { return start_; }
  /// Last finite position, start + codimension.
  int end() const { return start_ + codimension(); }
  int codimension() const { return static_cast<int>(degrees_.size()) - 1; }
  const std::vector<int>& degrees() const { return degrees_; }
  /// Degree at homological position `pos`; precondition start() <= pos <= end().
  int at(int pos) const { return degrees_[static_cast<std::size_t>(pos - start_)]; }
  bool covers(int pos) const { return pos >= start_ && pos <= end(); }

  /// Drop the leftmost `count` finite entries (they become -inf).
  DegreeSequence trim_left(int count) const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  int start_;
  std::vector<int> degrees_;
};

enum class PartialOrdering { Less, Equal, Greater, Incomparable };

/// Termwise comparison over all positions, with -inf/+inf padding.
PartialOrdering compare_degree_sequences(const DegreeSequence& a, const DegreeSequence& b);

std::string to_string(PartialOrdering o);
std::string to_string(const DegreeSequence& d);

/// One value of a codimension sequence: the empty marker, 0..n+1, or infinity.
/// Ordered as empty < 0 < 1 < ... < infinity.
class CodimValue {
 public:
  static constexpr CodimValue empty() { return CodimValue(kEmpty); }
  static constexpr CodimValue infinity() { return CodimValue(kInfinity); }
  static constexpr CodimValue finite(int v) { return CodimValue(v); }

  constexpr bool is_empty() const { return v_ == kEmpty; }
  constexpr bool is_infinite() const { return v_ == kInfinity; }
  constexpr bool is_finite() const { return !is_empty() && !is_infinite(); }
  /// Precondition: is_finite().
  constexpr int value() const { return v_; }

  /// Compare with an integer codimension (empty is below every integer,
  /// infinity above).
  constexpr bool le(int x) const { return is_empty() || (is_finite() && v_ <= x); }
  constexpr bool ge(int x) const { return is_infinite() || (is_finite() && v_ >= x); }

  friend constexpr auto operator<=>(const CodimValue&, const CodimValue&) = default;

 private:
  static constexpr int kEmpty = -1;
  static constexpr int kInfinity = 1 << 30;
  constexpr explicit CodimValue(int v) : v_(v) {}
  int v_;
};

std::string to_string(CodimValue v);

/// Unvalidated description of a codimension sequence: `left` at every
/// position < window_start, the explicit window, then `right`.
struct CodimDescription {
  int n = 0;
  CodimValue left = CodimValue::empty();
  int window_start = 0;
  std::vector<CodimValue> window;
  CodimValue right = CodimValue::infinity();
};

/// Nondecreasing doubly infinite sequence over {empty, 0..n+1, infinity}.
class CodimensionSequence {
 public:
  /// The sequence with the same value everywhere.
  static CodimensionSequence constant(CodimValue v, int n);

  /// Value at homological position i.
  CodimValue at(int i) const;
  int n() const { return d_.n; }
  const CodimDescription& description() const { return d_; }

 private:
  friend CodimensionSequence validate_codim_sequence(const CodimDescription& raw);
  explicit CodimensionSequence(CodimDescription d) : d_(std::move(d)) {}
  CodimDescription d_;
};

/// Checks monotonicity and the value range; throws ValidationError citing the
/// offending positions.
CodimensionSequence validate_codim_sequence(const CodimDescription& raw);

/// c_k <= l <= c_{k+1}, l <= n+1 and c is nonempty on the support of d.
bool is_compatible(const DegreeSequence& d, const CodimensionSequence& c);

}  // namespace bsfan
