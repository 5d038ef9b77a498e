#include "cohiggs/glr.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cohiggs/p1.hpp"

namespace cohiggs {

SplittingType::SplittingType(IntVector degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("splitting type must have rank >= 1");
  if (!std::is_sorted(degrees_.begin(), degrees_.end(), std::greater<>()))
    throw std::invalid_argument("splitting type must be weakly decreasing");
  permutation_.resize(degrees_.size());
  std::iota(permutation_.begin(), permutation_.end(), std::size_t{0});
}

SplittingType SplittingType::sorted(IntVector degrees) {
  std::vector<std::size_t> perm(degrees.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return degrees[x] > degrees[y]; });
  IntVector sorted_degrees;
  for (std::size_t k : perm) sorted_degrees.push_back(degrees[k]);
  SplittingType st(std::move(sorted_degrees));
  st.permutation_ = std::move(perm);
  return st;
}

int SplittingType::total_degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

bool SplittingType::was_reordered() const {
  for (std::size_t k = 0; k < permutation_.size(); ++k)
    if (permutation_[k] != k) return true;
  return false;
}

SplittingType SplittingType::dual() const {
  IntVector d;
  for (auto it = degrees_.rbegin(); it != degrees_.rend(); ++it) d.push_back(-*it);
  return SplittingType(std::move(d));
}

IntVector parse_int_list(std::string_view text) {
  IntVector out;
  while (true) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    int value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size())
      throw std::invalid_argument("bad integer '" + std::string(item) + "' in list");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

bool glr_admits_semistable(const SplittingType& st) {
  const auto& m = st.degrees();
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (m[i] - m[i + 1] > 2) return false;
  return true;
}

std::pair<ReductiveGroup, HNType> splitting_to_hn(const SplittingType& st) {
  const auto& m = st.degrees();
  const int r = st.rank();
  std::vector<CartanType> factors;
  HNType hn;
  if (r > 1) {
    factors.emplace_back(Family::A, r - 1);
    IntVector a;
    for (int i = 0; i + 1 < r; ++i) a.push_back(m[i] - m[i + 1]);
    hn.simple_values.push_back(std::move(a));
  }
  hn.central_degrees = {st.total_degree()};
  return {ReductiveGroup(std::move(factors), 1), std::move(hn)};
}

SplittingType hn_to_splitting(const ReductiveGroup& g, const HNType& m) {
  check_shape(g, m);
  const auto& factors = g.factors();
  if (g.central_rank() != 1 || factors.size() > 1 || (factors.size() == 1 && factors[0].family() != Family::A))
    throw std::invalid_argument("group " + g.to_string() + " is not GL(r)");
  const IntVector a = factors.empty() ? IntVector{} : m.simple_values[0];
  const int r = static_cast<int>(a.size()) + 1;
  // sum m_i = r m_r + sum_k k a_k
  int weighted = 0;
  for (int k = 0; k < r - 1; ++k) weighted += (k + 1) * a[k];
  const int rest = m.central_degrees[0] - weighted;
  if (rest % r != 0)
    throw std::invalid_argument("central degree is incompatible with the simple values");
  IntVector degrees(r);
  degrees[r - 1] = rest / r;
  for (int i = r - 2; i >= 0; --i) degrees[i] = degrees[i + 1] + a[i];
  return SplittingType(std::move(degrees));
}

int hom_degree(const SplittingType& st, std::size_t i, std::size_t j) {
  if (i >= st.degrees().size() || j >= st.degrees().size()) throw std::out_of_range("hom_degree index");
  return st[i] - st[j] + kTangentDegree;
}

int hom_dimension(const SplittingType& st, std::size_t i, std::size_t j) { return h0_on_p1(hom_degree(st, i, j)); }

}  // namespace cohiggs
