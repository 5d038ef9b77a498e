#include "cohiggs/cohiggs_matrix.hpp"

#include <stdexcept>

namespace cohiggs {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 16)) throw std::invalid_argument("field characteristic must be a prime below 65536");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  // a^(p-2)
  std::uint64_t result = 1, base = a;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<Element>(result);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (a == 0) throw std::domain_error("division by zero in Q");
  return 1 / a;
}

std::size_t line_subbundle_dimension(const SplittingType& st, int degree) {
  std::size_t n = 0;
  for (int m : st.degrees()) n += HomogPoly<PrimeField>::slot_count(m - degree);
  return n;
}

namespace {

// Odometer over coords[begin..]; false once it wraps back to all zeros.
bool advance(std::vector<PrimeField::Element>& coords, std::size_t begin, std::uint32_t p) {
  for (std::size_t k = coords.size(); k-- > begin;) {
    if (++coords[k] < p) return true;
    coords[k] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t for_each_line_subbundle(const SplittingType& st, int degree, const PrimeField& field,
                                      const std::function<bool(const LineSubbundle<PrimeField>&)>& visit) {
  const std::size_t n = line_subbundle_dimension(st, degree);
  std::vector<PrimeField::Element> coords(n, 0);
  std::uint64_t visited = 0;

  auto build = [&]() {
    std::vector<HomogPoly<PrimeField>> sections;
    std::size_t offset = 0;
    for (int m : st.degrees()) {
      const int d = m - degree;
      const std::size_t k = HomogPoly<PrimeField>::slot_count(d);
      sections.emplace_back(field, d,
                            std::vector<PrimeField::Element>(coords.begin() + offset, coords.begin() + offset + k));
      offset += k;
    }
    return sections;
  };

  // Projective normalization: coords[lead] = 1, earlier coords 0, later coords free.
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(coords.begin(), coords.end(), 0);
    coords[lead] = 1;
    while (true) {
      auto sections = build();
      if (has_no_common_zero<PrimeField>(sections)) {
        ++visited;
        if (!visit(LineSubbundle<PrimeField>(st, degree, std::move(sections)))) return visited;
      }
      if (!advance(coords, lead + 1, field.characteristic())) break;
    }
  }
  return visited;
}

std::vector<LineSubbundle<PrimeField>> enumerate_line_subbundles(const SplittingType& st, int degree,
                                                                 const PrimeField& field) {
  std::vector<LineSubbundle<PrimeField>> out;
  for_each_line_subbundle(st, degree, field, [&](const LineSubbundle<PrimeField>& line) {
    out.push_back(line);
    return true;
  });
  return out;
}

bool violates_slope(StabilityMode mode, int line_degree, int rank, int total_degree) {
  // d >= mu(E) (stable) or d > mu(E) (semistable), with mu(E) = total / rank
  const long long lhs = static_cast<long long>(line_degree) * rank;
  return mode == StabilityMode::stable ? lhs >= total_degree : lhs > total_degree;
}

namespace {

// Highest-degree-first search for an invariant line violating the slope bound.
std::optional<std::pair<int, std::vector<HomogPoly<PrimeField>>>> find_destabilizing_line(
    const CoHiggsMatrix<PrimeField>& phi, StabilityMode mode, std::uint64_t& checked) {
  const auto& st = phi.splitting();
  std::optional<std::pair<int, std::vector<HomogPoly<PrimeField>>>> found;
  for (int d = st[0]; violates_slope(mode, d, st.rank(), st.total_degree()); --d) {
    checked += for_each_line_subbundle(st, d, phi.field(), [&](const LineSubbundle<PrimeField>& line) {
      if (!is_invariant(phi, line)) return true;
      found.emplace(d, line.sections());
      return false;
    });
    if (found) break;
  }
  return found;
}

}  // namespace

OracleVerdict semistability_oracle(const CoHiggsMatrix<PrimeField>& phi, StabilityMode mode) {
  const auto& st = phi.splitting();
  const int r = st.rank();
  if (r > 3) throw std::invalid_argument("the oracle handles rank <= 3 only");

  OracleVerdict verdict{true, mode, phi.field().characteristic(), std::nullopt, 0};
  if (r == 1) return verdict;

  if (auto line = find_destabilizing_line(phi, mode, verdict.subbundles_checked)) {
    verdict.passes = false;
    verdict.witness = OracleWitness{1, line->first, false, line->first, std::move(line->second)};
    return verdict;
  }
  if (r == 3) {
    // Rank-2 invariant W <=> invariant line W^perp in E* of degree e, deg W = deg E + e.
    if (auto line = find_destabilizing_line(phi.dual(), mode, verdict.subbundles_checked)) {
      verdict.passes = false;
      verdict.witness =
          OracleWitness{r - 1, st.total_degree() + line->first, true, line->first, std::move(line->second)};
    }
  }
  return verdict;
}

std::string to_string(StabilityMode mode) { return mode == StabilityMode::stable ? "stable" : "semistable"; }

StabilityMode parse_stability_mode(const std::string& text) {
  if (text == "stable") return StabilityMode::stable;
  if (text == "semistable") return StabilityMode::semistable;
  throw std::invalid_argument("mode must be 'stable' or 'semistable', got '" + text + "'");
}

}  // namespace cohiggs
