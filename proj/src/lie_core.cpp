#include "cohiggs/lie_core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cohiggs {

namespace {

int parse_uint(std::string_view text, std::string_view context) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || value < 0)
    throw std::invalid_argument("expected an unsigned integer in '" + std::string(context) + "'");
  return value;
}

int height(const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

CartanType::CartanType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                std::string(1, static_cast<char>(family)));
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2 || std::string_view("ABCDEFG").find(text[0]) == std::string_view::npos)
    throw std::invalid_argument("bad Cartan factor '" + std::string(text) + "'");
  return CartanType(static_cast<Family>(text[0]), parse_uint(text.substr(1), text));
}

int CartanType::dimension() const {
  const int n = rank_;
  switch (family_) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

std::string CartanType::to_string() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

IntMatrix cartan_matrix(const CartanType& type) {
  const int n = type.rank();
  IntMatrix a(n, IntVector(n, 0));
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  for (int i = 0; i < n; ++i) a[i][i] = 2;

  switch (type.family()) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Family::C:
      // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-...-n with 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

IntVector simple_reflection(const IntMatrix& cartan, std::span<const int> root, int i) {
  int pairing = 0;
  for (std::size_t j = 0; j < root.size(); ++j) pairing += cartan[i][j] * root[j];
  IntVector out(root.begin(), root.end());
  out[i] -= pairing;
  return out;
}

RootSystem::RootSystem(const CartanType& type) : type_(type), cartan_(cohiggs::cartan_matrix(type)) {
  const int n = type.rank();
  std::set<IntVector> seen;
  std::vector<IntVector> frontier;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  // Every positive root is reachable from a simple root through simple reflections
  // that stay positive.
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& root : frontier) {
      for (int i = 0; i < n; ++i) {
        IntVector r = simple_reflection(cartan_, root, i);
        if (std::any_of(r.begin(), r.end(), [](int c) { return c < 0; })) continue;
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }

  positive_.assign(seen.begin(), seen.end());
  std::stable_sort(positive_.begin(), positive_.end(), [](const IntVector& x, const IntVector& y) {
    const int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x > y;
  });

  const std::size_t expected = static_cast<std::size_t>(type.dimension() - n) / 2;
  if (positive_.size() != expected)
    throw std::logic_error("root generation for " + type.to_string() + " produced " +
                           std::to_string(positive_.size()) + " positive roots, expected " +
                           std::to_string(expected));
}

std::vector<IntVector> RootSystem::all_roots() const {
  std::vector<IntVector> out = positive_;
  for (const auto& r : positive_) {
    IntVector neg(r.size());
    std::transform(r.begin(), r.end(), neg.begin(), [](int c) { return -c; });
    out.push_back(std::move(neg));
  }
  return out;
}

bool RootSystem::is_root(std::span<const int> v) const {
  if (v.size() != static_cast<std::size_t>(rank())) return false;
  IntVector key(v.begin(), v.end());
  if (std::all_of(key.begin(), key.end(), [](int c) { return c <= 0; }))
    for (int& c : key) c = -c;
  return std::find(positive_.begin(), positive_.end(), key) != positive_.end();
}

int root_value(const RootSystem& rs, std::span<const int> root, std::span<const int> simple_values) {
  if (simple_values.size() != static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("simple-value vector has wrong length for " + rs.type().to_string());
  if (!rs.is_root(root)) throw std::invalid_argument("vector is not a root of " + rs.type().to_string());
  return std::inner_product(root.begin(), root.end(), simple_values.begin(), 0);
}

ReductiveGroup::ReductiveGroup(std::vector<CartanType> factors, int central_rank)
    : factors_(std::move(factors)), central_rank_(central_rank) {
  if (central_rank < 0) throw std::invalid_argument("central rank must be nonnegative");
  if (factors_.empty() && central_rank == 0) throw std::invalid_argument("group is trivial");
  systems_.reserve(factors_.size());
  for (const auto& f : factors_) systems_.emplace_back(f);
}

ReductiveGroup ReductiveGroup::parse(std::string_view text) {
  std::string_view body = text;
  int z = 0;
  if (auto plus = text.find('+'); plus != std::string_view::npos) {
    std::string_view tail = text.substr(plus + 1);
    if (tail.empty() || tail[0] != 'z') throw std::invalid_argument("expected '+z<k>' in '" + std::string(text) + "'");
    z = parse_uint(tail.substr(1), text);
    body = text.substr(0, plus);
  }
  std::vector<CartanType> factors;
  while (true) {
    auto x = body.find('x');
    factors.push_back(CartanType::parse(body.substr(0, x)));
    if (x == std::string_view::npos) break;
    body = body.substr(x + 1);
  }
  return ReductiveGroup(std::move(factors), z);
}

int ReductiveGroup::semisimple_rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

int ReductiveGroup::rank() const { return central_rank_ + semisimple_rank(); }

int ReductiveGroup::dimension() const {
  int d = central_rank_;
  for (const auto& f : factors_) d += f.dimension();
  return d;
}

std::string ReductiveGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += factors_[i].to_string();
  }
  if (central_rank_ > 0) out += "+z" + std::to_string(central_rank_);
  return out;
}

HNType HNType::zero(const ReductiveGroup& g) {
  HNType m;
  for (const auto& f : g.factors()) m.simple_values.emplace_back(f.rank(), 0);
  m.central_degrees.assign(g.central_rank(), 0);
  return m;
}

void check_shape(const ReductiveGroup& g, const HNType& m) {
  if (m.simple_values.size() != g.factors().size())
    throw std::invalid_argument("HN type has " + std::to_string(m.simple_values.size()) +
                                " factor vectors, group " + g.to_string() + " has " +
                                std::to_string(g.factors().size()) + " simple factors");
  for (std::size_t k = 0; k < m.simple_values.size(); ++k)
    if (m.simple_values[k].size() != static_cast<std::size_t>(g.factors()[k].rank()))
      throw std::invalid_argument("simple-value vector " + std::to_string(k) + " has length " +
                                  std::to_string(m.simple_values[k].size()) + ", expected " +
                                  std::to_string(g.factors()[k].rank()));
  if (m.central_degrees.size() != static_cast<std::size_t>(g.central_rank()))
    throw std::invalid_argument("expected " + std::to_string(g.central_rank()) + " central degrees");
}

bool is_dominant(const ReductiveGroup& g, const HNType& m) {
  check_shape(g, m);
  for (const auto& a : m.simple_values)
    if (std::any_of(a.begin(), a.end(), [](int v) { return v < 0; })) return false;
  return true;
}

void require_dominant(const ReductiveGroup& g, const HNType& m) {
  if (!is_dominant(g, m)) throw std::domain_error("HN type is not dominant");
}

IntVector all_root_values(const ReductiveGroup& g, const HNType& m) {
  check_shape(g, m);
  IntVector out;
  out.reserve(g.root_count());
  for (std::size_t k = 0; k < g.root_systems().size(); ++k) {
    const auto& a = m.simple_values[k];
    const auto& pos = g.root_systems()[k].positive_roots();
    const std::size_t first = out.size();
    for (const auto& r : pos) out.push_back(std::inner_product(r.begin(), r.end(), a.begin(), 0));
    for (std::size_t i = first, n = out.size(); i < n; ++i) out.push_back(-out[i]);
  }
  return out;
}

}  // namespace cohiggs
