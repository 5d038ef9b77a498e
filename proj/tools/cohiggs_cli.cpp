// Command-line frontend.  Exit codes: 0 success (and oracle PASSES), 1 usage or input
// error, 2 oracle FAILS.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cohiggs/cohiggs_matrix.hpp"
#include "cohiggs/criterion.hpp"
#include "cohiggs/glr.hpp"
#include "cohiggs/report.hpp"
#include "cohiggs/strata.hpp"
#include "cohiggs/symplectic.hpp"

using namespace cohiggs;

namespace {

enum class Format { text, json, csv };

struct Options {
  Format format = Format::text;
  std::string group;
  std::string hn;
  std::string central;
  std::string splitting;
  std::string half_degrees;
  std::uint32_t prime = 0;
  bool rational = false;
  bool model = false;
  std::uint64_t seed = 0;
  std::string mode = "stable";
};

std::string join(const IntVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

IntVector optional_list(const std::string& text) { return text.empty() ? IntVector{} : parse_int_list(text); }

HNType parse_hn(const ReductiveGroup& g, const std::string& hn_text, const std::string& central_text) {
  const IntVector flat = optional_list(hn_text);
  if (flat.size() != static_cast<std::size_t>(g.semisimple_rank()))
    throw std::invalid_argument("--hn needs " + std::to_string(g.semisimple_rank()) + " values for " + g.to_string());
  HNType m;
  std::size_t pos = 0;
  for (const auto& f : g.factors()) {
    m.simple_values.emplace_back(flat.begin() + pos, flat.begin() + pos + f.rank());
    pos += f.rank();
  }
  m.central_degrees = optional_list(central_text);
  if (m.central_degrees.empty()) m.central_degrees.assign(g.central_rank(), 0);
  check_shape(g, m);
  return m;
}

SplittingType parse_splitting(const std::string& text) {
  SplittingType st = SplittingType::sorted(parse_int_list(text));
  if (st.was_reordered()) std::cerr << "note: splitting type sorted to " << join(st.degrees()) << "\n";
  return st;
}

void emit_kv(std::ostream& out, Format format, const Json& j) {
  if (format == Format::json) {
    out << j.dump(2) << "\n";
    return;
  }
  const bool csv = format == Format::csv;
  if (csv) out << "key,value\n";
  for (const auto& [k, v] : j.items()) {
    const std::string value = v.is_string() ? v.get<std::string>() : v.dump();
    if (csv)
      out << k << ",\"" << value << "\"\n";
    else
      out << k << ": " << value << "\n";
  }
}

int run_criterion(const Options& o, bool adjoint_only) {
  const ReductiveGroup g = ReductiveGroup::parse(o.group);
  const HNType m = parse_hn(g, o.hn, o.central);
  if (adjoint_only) {
    const SplittingType ad = adjoint_splitting(g, m);
    Json j{{"group", g.to_string()}, {"hn", a_vector_string(m)}, {"adjoint_degrees", ad.degrees()},
           {"admits_semistable_gl", glr_admits_semistable(ad)}};
    emit_kv(std::cout, o.format, j);
    return 0;
  }
  Json j{{"group", g.to_string()}, {"hn", a_vector_string(m)}, {"central_degrees", m.central_degrees}};
  j.update(to_json(evaluate_criterion(g, m)));
  emit_kv(std::cout, o.format, j);
  return 0;
}

int run_strata(const Options& o) {
  const ReductiveGroup g = ReductiveGroup::parse(o.group);
  IntVector central = optional_list(o.central);
  if (central.empty()) central.assign(g.central_rank(), 0);
  const auto records = enumerate_strata(g, central);
  if (o.format == Format::csv) {
    std::cout << strata_csv(records);
  } else if (o.format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "group " << g.to_string() << ", dim " << g.dimension() << ", " << records.size() << " strata\n";
    std::cout << "a_vector\tdim_VM\tdim_aut\tdim_stratum\tgeneric\n";
    for (const auto& r : records)
      std::cout << a_vector_string(r.hn) << '\t' << r.dim_cohiggs_space << '\t' << r.dim_automorphisms << '\t'
                << r.dim_stratum << '\t' << (r.is_generic ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_glr_check(const Options& o) {
  const SplittingType st = parse_splitting(o.splitting);
  const bool ok = glr_admits_semistable(st);
  const auto [g, m] = splitting_to_hn(st);
  Json j{{"splitting", st.degrees()},
         {"admits_semistable", ok},
         {"admits_stable_via_hn", admits_stable_cohiggs(g, m)},
         {"group", g.to_string()},
         {"hn", a_vector_string(m)},
         {"central_degree", m.central_degrees[0]}};
  if (o.format == Format::text) {
    std::cout << "splitting " << join(st.degrees()) << ": "
              << (ok ? "a semistable co-Higgs field exists (the generic one is stable)"
                     : "no semistable co-Higgs field exists")
              << "\n";
    std::cout << "as " << g.to_string() << " HN type a = " << a_vector_string(m) << ", central degree "
              << m.central_degrees[0] << "\n";
    return 0;
  }
  emit_kv(std::cout, o.format, j);
  return 0;
}

int run_sp_check(const Options& o) {
  const SymplecticSplitting ss(parse_int_list(o.half_degrees));
  const auto [g, m] = sp_to_hn(ss);
  Json j{{"half_degrees", ss.half_degrees()},
         {"full_degrees", ss.full_splitting().degrees()},
         {"admits_stable", sp_admits_stable(ss)},
         {"group", g.to_string()},
         {"hn", a_vector_string(m)},
         {"admits_stable_via_hn", admits_stable_cohiggs(g, m)}};
  emit_kv(std::cout, o.format, j);
  return 0;
}

template <class F>
void print_matrix(const CoHiggsMatrix<F>& phi, Format format) {
  if (format == Format::json) {
    std::cout << to_json(phi).dump(2) << "\n";
    return;
  }
  if (format == Format::csv) std::cout << "row,col,degree,form\n";
  for (std::size_t i = 0; i < phi.rank(); ++i)
    for (std::size_t j = 0; j < phi.rank(); ++j) {
      const auto& e = phi.entry(i, j);
      if (format == Format::csv)
        std::cout << i + 1 << ',' << j + 1 << ',' << e.degree() << ",\"" << e.to_string() << "\"\n";
      else
        std::cout << "(" << i + 1 << "," << j + 1 << ") deg " << e.degree() << ": " << e.to_string() << "\n";
    }
}

int run_model_field(const Options& o) {
  const SplittingType st = parse_splitting(o.splitting);
  if (o.rational) {
    print_matrix(build_model_field(st, RationalField{}, o.seed), o.format);
  } else {
    if (o.prime == 0) throw std::invalid_argument("model-field needs --prime P or --rational");
    print_matrix(build_model_field(st, PrimeField(o.prime), o.seed), o.format);
  }
  return 0;
}

int run_oracle(const Options& o) {
  const SplittingType st = parse_splitting(o.splitting);
  if (o.prime == 0) throw std::invalid_argument("oracle needs --prime P");
  const PrimeField field(o.prime);
  const auto phi = o.model ? build_model_field(st, field, o.seed) : random_field(st, field, o.seed);
  const OracleVerdict verdict = semistability_oracle(phi, parse_stability_mode(o.mode));
  Json j = to_json(verdict);
  j["splitting"] = st.degrees();
  j["construction"] = o.model ? "model" : "random";
  j["seed"] = o.seed;
  if (o.format == Format::text) {
    std::cout << j["verdict"].get<std::string>() << " (" << o.mode << ", over " << field.name() << ")\n";
    if (verdict.witness) {
      const auto& w = *verdict.witness;
      std::cout << "witness: invariant rank-" << w.rank << " subbundle of degree " << w.degree;
      if (w.via_dual) std::cout << ", annihilator of the dual line of degree " << w.line_degree;
      std::cout << "\n  sections:";
      for (const auto& s : w.sections) std::cout << " [" << s.to_string() << "]";
      std::cout << "\n";
    } else {
      std::cout << "no destabilizing invariant subbundle is rational over " << field.name() << "\n";
    }
  } else {
    emit_kv(std::cout, o.format, j);
  }
  return verdict.passes ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-Higgs fields on the projective line: existence criteria, strata and oracles"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats))->default_str("text");

  auto* criterion = app.add_subcommand("criterion", "Stable co-Higgs existence for a group and HN type");
  auto* adjoint = app.add_subcommand("adjoint", "Splitting type of the adjoint bundle");
  for (auto* sub : {criterion, adjoint}) {
    sub->add_option("--group", o.group, "Group, e.g. A2 or C3xA1+z2")->required();
    sub->add_option("--hn", o.hn, "Simple-root values, concatenated over factors")->required();
    sub->add_option("--central", o.central, "Central degrees");
  }
  auto* strata = app.add_subcommand("strata", "Enumerate the strata of fixed topological degree");
  strata->add_option("--group", o.group)->required();
  strata->add_option("--central", o.central, "Central degrees");

  auto* glr = app.add_subcommand("glr-check", "Gap criterion for a GL(r) splitting type");
  glr->add_option("--splitting", o.splitting, "Degrees, e.g. 3,1,0")->required();

  auto* sp = app.add_subcommand("sp-check", "Criterion for an Sp(2r) splitting");
  sp->add_option("--half-degrees", o.half_degrees, "e_1 >= ... >= e_r >= 0")->required();

  auto* model = app.add_subcommand("model-field", "Print the model co-Higgs field");
  model->add_option("--splitting", o.splitting)->required();
  auto* prime_opt = model->add_option("--prime", o.prime, "Coefficient field F_p");
  model->add_flag("--rational", o.rational, "Rational coefficients")->excludes(prime_opt);
  model->add_option("--seed", o.seed);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive invariant-subbundle search over F_p (rank <= 3)");
  oracle->add_option("--splitting", o.splitting)->required();
  oracle->add_option("--prime", o.prime)->required();
  oracle->add_option("--mode", o.mode)->check(CLI::IsMember({"stable", "semistable"}));
  oracle->add_option("--seed", o.seed, "Seed of the random field (or of the model field with --model)");
  oracle->add_flag("--model", o.model, "Use the model field instead of a random one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (criterion->parsed()) return run_criterion(o, false);
    if (adjoint->parsed()) return run_criterion(o, true);
    if (strata->parsed()) return run_strata(o);
    if (glr->parsed()) return run_glr_check(o);
    if (sp->parsed()) return run_sp_check(o);
    if (model->parsed()) return run_model_field(o);
    if (oracle->parsed()) return run_oracle(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
