#include "spatch/multiindex.hh"

#include <numeric>

#include "spatch/errors.hh"

namespace spatch {

int MultiIndex::norm() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

MultiIndex MultiIndex::operator+(const MultiIndex &rhs) const {
  if (size() != rhs.size())
    throw ValidationError("multi-index size mismatch in addition");
  auto e = e_;
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] += rhs.e_[i];
  return MultiIndex(std::move(e));
}

std::size_t MultiIndexHash::operator()(const MultiIndex &s) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int v : s.entries())
    h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
  return h;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // exact at every step: r is binomial(n-k+i-1, i-1) * (n-k+i) before division
    r = r * (n - k + i) / i;
  }
  return r;
}

std::int64_t multinomial(int d, const MultiIndex &s) {
  if (s.norm() != d)
    throw ValidationError("multinomial: label norm does not match degree");
  std::int64_t r = 1;
  int remaining = d;
  for (int i = 0; i < s.size(); ++i) {
    r *= binomial(remaining, s[i]);
    remaining -= s[i];
  }
  return r;
}

std::vector<MultiIndex> enumerateLabels(int n, int d) {
  if (n < 1 || d < 0)
    throw ValidationError("enumerateLabels: need n >= 1 and d >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(n, 0);
  // first entry is most significant, so recurse on it in ascending order
  auto rec = [&](auto &&self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

std::optional<MultiIndex> nextLabel(const MultiIndex &s) {
  const int n = s.size();
  std::vector<int> e = s.entries();
  // rightmost position whose suffix still holds mass to promote
  int suffix = 0;
  for (int p = n - 2; p >= 0; --p) {
    suffix += e[p + 1];
    if (suffix > 0) {
      ++e[p];
      for (int i = p + 1; i < n; ++i)
        e[i] = 0;
      e[n - 1] = suffix - 1;
      return MultiIndex(std::move(e));
    }
  }
  return std::nullopt;
}

} // namespace spatch
