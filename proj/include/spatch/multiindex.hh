#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace spatch {

// Label of a control point: n non-negative integers.  Comparison is
// lexicographic with the leftmost entry most significant.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {}

  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex unit(int n, int i, int value = 1) {
    std::vector<int> e(n, 0);
    e[i] = value;
    return MultiIndex(std::move(e));
  }

  int size() const { return static_cast<int>(e_.size()); }
  int norm() const;
  int operator[](int i) const { return e_[i]; }
  const std::vector<int> &entries() const { return e_; }

  MultiIndex plusUnit(int i) const {
    auto e = e_;
    ++e[i];
    return MultiIndex(std::move(e));
  }
  MultiIndex minusUnit(int i) const {
    auto e = e_;
    --e[i];
    return MultiIndex(std::move(e));
  }
  MultiIndex operator+(const MultiIndex &rhs) const;

  auto operator<=>(const MultiIndex &) const = default;

private:
  std::vector<int> e_;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex &s) const;
};

// Exact binomial coefficient; n up to ~60 is safe in 64 bits.
std::int64_t binomial(int n, int k);

// d! / prod(s_i!), exact; throws ValidationError when |s| != d.
std::int64_t multinomial(int d, const MultiIndex &s);

// All labels of length n and norm d, ascending lexicographic.
std::vector<MultiIndex> enumerateLabels(int n, int d);

// Lexicographic successor within the same label set, or nullopt past the end.
std::optional<MultiIndex> nextLabel(const MultiIndex &s);

} // namespace spatch
