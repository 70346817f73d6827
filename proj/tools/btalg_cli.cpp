// Command line front end: JSON in, JSON out, exact arithmetic end to end.
// Exit codes: 0 success, 1 malformed input, 2 precondition violation,
// 3 verification failures.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "btalg/json_io.hpp"
#include "btalg/oracle.hpp"

namespace {

using btalg::io::json;

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw btalg::MalformedInput("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw btalg::MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

void emit(const json& j, const std::string& format, const std::string& human_summary) {
  if (format == "human") {
    std::cout << human_summary << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int cmd_check_product(const std::string& a_path, const std::string& b_path,
                      const std::string& format) {
  auto a = btalg::io::toeplitz_from_json(read_json(a_path));
  auto b = btalg::io::toeplitz_from_json(read_json(b_path));
  json out;
  bool comp = false, toep = false;
  std::visit(
      [&](const auto& ta) {
        using T = std::decay_t<decltype(ta)>;
        const auto* tb = std::get_if<T>(&b);
        if (!tb) throw btalg::ShapeMismatch("entry types differ");
        comp = btalg::compatible(ta, *tb);
        auto res = btalg::product(ta, *tb);
        toep = res.toeplitz;
        out["product"] = btalg::io::to_json(res.full);
        if (res.as_toeplitz) out["product_toeplitz"] = btalg::io::to_json(*res.as_toeplitz);
      },
      a);
  out["compatible"] = comp;
  out["toeplitz"] = toep;
  emit(out, format,
       std::string("compatible: ") + (comp ? "yes" : "no") +
           ", product block Toeplitz: " + (toep ? "yes" : "no"));
  return 0;
}

int cmd_membership(const std::string& spec_path, const std::string& t_path,
                   const std::string& format) {
  btalg::AlgebraSpec spec = btalg::io::spec_from_json(read_json(spec_path));
  auto t = btalg::io::toeplitz_from_json(read_json(t_path));
  std::string witness;
  bool member = std::visit(
      [&](const auto& tt) { return btalg::membership(spec, tt, &witness); }, t);
  json out{{"member", member}};
  if (!member) out["witness"] = witness;
  emit(out, format,
       member ? "member: yes" : "member: no (" + witness + ")");
  return 0;
}

int cmd_classify(const std::string& gens_path, const std::string& format) {
  auto gens = btalg::io::generators_from_json(read_json(gens_path));
  btalg::ClassificationReport report = btalg::classify_maximal(gens);
  json out = btalg::io::report_to_json(report);
  emit(out, format,
       "classified: s_plus = " + btalg::poly_to_string(report.s_plus) +
           ", s_minus = " + btalg::poly_to_string(report.s_minus) +
           ", xi = " + btalg::poly_to_string(report.xi));
  return 0;
}

int cmd_equal(const std::string& s1_path, const std::string& s2_path,
              const std::string& format) {
  btalg::AlgebraSpec s1 = btalg::io::spec_from_json(read_json(s1_path));
  btalg::AlgebraSpec s2 = btalg::io::spec_from_json(read_json(s2_path));
  bool equal = false;
  if (const auto* a = std::get_if<btalg::SinglyGenSpec>(&s1.family)) {
    const auto* b = std::get_if<btalg::SinglyGenSpec>(&s2.family);
    if (!b) throw btalg::InvalidSpec("spec variants differ");
    equal = btalg::bsg_equal(*a, *b);
  } else if (const auto* a = std::get_if<btalg::PseudocirculantSpec>(&s1.family)) {
    const auto* b = std::get_if<btalg::PseudocirculantSpec>(&s2.family);
    if (!b) throw btalg::InvalidSpec("spec variants differ");
    equal = btalg::fab_equal(a->a, a->b, b->a, b->b);
  } else {
    throw btalg::InvalidSpec("equality test supports singly_gen and pseudocirculant");
  }
  emit(json{{"equal", equal}}, format, equal ? "equal: yes" : "equal: no");
  return 0;
}

int cmd_maximal(const std::string& gens_path, const std::string& format) {
  auto gens = btalg::io::generators_from_json(read_json(gens_path));
  bool maximal = btalg::is_maximal(gens);
  json out{{"maximal", maximal}};
  if (!maximal && !gens.empty()) {
    json basis = json::object();
    for (int k = 1; k <= gens[0].n - 1; ++k) {
      json per_k = json::array();
      for (const auto& d : btalg::extension_space(gens, k)) {
        per_k.push_back(btalg::io::to_json(d.embed()));
      }
      basis[std::to_string(k)] = std::move(per_k);
    }
    out["extension_basis"] = std::move(basis);
  }
  emit(out, format, maximal ? "maximal: yes" : "maximal: no");
  return 0;
}

int cmd_enumerate_xm(int m, int n, const std::string& format) {
  auto strata = btalg::enumerate_xm(m, n);
  json out{{"m", m}, {"n", n}, {"strata", btalg::io::strata_to_json(strata)}};
  emit(out, format, std::to_string(strata.size()) + " strata");
  return 0;
}

int cmd_verify(const std::string& suite, int trials, uint64_t seed, int n_max, int d_max,
               const std::string& format) {
  btalg::oracle::TrialConfig config;
  config.suite = suite;
  config.trials = trials;
  config.seed = seed;
  config.n_max = n_max;
  config.d_max = d_max;
  auto report = btalg::oracle::run_suite(config);
  emit(btalg::io::verification_report_to_json(report), format,
       "suite " + report.suite + ": " + std::to_string(report.trials) + " trials, " +
           std::to_string(report.failures.size()) + " failures");
  return report.passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact block Toeplitz algebra toolkit"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format: json (default) or human")
      ->check(CLI::IsMember({"json", "human"}));

  std::string path_a, path_b;

  auto* check = app.add_subcommand("check-product", "Compatibility and product of two matrices");
  check->add_option("A", path_a, "Block Toeplitz JSON (or -)")->required();
  check->add_option("B", path_b, "Block Toeplitz JSON (or -)")->required();

  auto* member = app.add_subcommand("membership", "Test membership in an algebra");
  member->add_option("spec", path_a, "Algebra spec JSON")->required();
  member->add_option("T", path_b, "Block Toeplitz JSON (or -)")->required();

  auto* classify = app.add_subcommand("classify", "Classify a maximal algebra from generators");
  classify->add_option("generators", path_a, "{generators: [...]} JSON (or -)")->required();

  auto* equal = app.add_subcommand("equal", "Equality of two algebra specs");
  equal->add_option("S1", path_a, "Algebra spec JSON")->required();
  equal->add_option("S2", path_b, "Algebra spec JSON")->required();

  auto* maximal = app.add_subcommand("maximal", "Maximality test for a generator set");
  maximal->add_option("generators", path_a, "{generators: [...]} JSON (or -)")->required();

  int m = 1, n = 2;
  auto* enum_xm = app.add_subcommand("enumerate-xm", "Strata of maximal algebras over X^m");
  enum_xm->add_option("--m", m, "Exponent m >= 1")->required();
  enum_xm->add_option("--n", n, "Block order n >= 2")->default_val(2);

  std::string suite;
  int trials = 100, n_max = 6, d_max = 4;
  uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run a randomized verification suite");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--trials", trials, "Trial count")->default_val(100);
  verify->add_option("--seed", seed, "RNG seed")->default_val(1);
  verify->add_option("--n-max", n_max, "Largest block order")->default_val(6);
  verify->add_option("--d-max", d_max, "Largest block dimension")->default_val(4);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check_product(path_a, path_b, format);
    if (member->parsed()) return cmd_membership(path_a, path_b, format);
    if (classify->parsed()) return cmd_classify(path_a, format);
    if (equal->parsed()) return cmd_equal(path_a, path_b, format);
    if (maximal->parsed()) return cmd_maximal(path_a, format);
    if (enum_xm->parsed()) return cmd_enumerate_xm(m, n, format);
    if (verify->parsed()) return cmd_verify(suite, trials, seed, n_max, d_max, format);
  } catch (const btalg::MalformedInput& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const btalg::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
