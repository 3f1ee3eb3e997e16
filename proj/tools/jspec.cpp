#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "jspec/serialize.hpp"

using namespace jspec;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExhausted = 3;

std::vector<Rat> parse_profile(const std::string& text) {
  std::vector<Rat> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(parse_rat(item));
  if (values.empty()) throw std::invalid_argument("empty profile");
  return values;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto sep = text.find("..");
  if (sep == std::string::npos)
    throw std::invalid_argument("range must look like A..B, got '" + text + "'");
  int lo = std::stoi(text.substr(0, sep));
  int hi = std::stoi(text.substr(sep + 2));
  if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

ProfileMatrixSpec spec_from_options(int n, int k, int forbidden, const std::string& profile,
                                    bool have_forbidden) {
  if (have_forbidden) return forbidden_profile(n, k, forbidden);
  ProfileMatrixSpec spec;
  spec.n = n;
  spec.k = k;
  spec.f = parse_profile(profile);
  spec.validate();
  return spec;
}

void print_envelope(const std::string& command, const json& params, const json& result,
                    double elapsed_ms, bool pretty) {
  json envelope = {
      {"command", command},
      {"parameters", params},
      {"result", result},
      {"elapsed_ms", elapsed_ms},
  };
  if (!pretty) {
    std::cout << envelope.dump(2) << "\n";
    return;
  }

  // Table mode is rendering only: everything printed comes from the payload.
  std::cout << command << "\n";
  std::cout << std::string(command.size(), '=') << "\n";
  std::function<void(const json&, int)> walk = [&](const json& node, int depth) {
    std::string pad(2 * depth, ' ');
    if (node.is_object()) {
      for (auto it = node.begin(); it != node.end(); ++it) {
        bool nested = it.value().is_object() ||
                      (it.value().is_array() && !it.value().empty() &&
                       (it.value().front().is_object() || it.value().front().is_array()));
        if (nested) {
          std::cout << pad << it.key() << ":\n";
          walk(it.value(), depth + 1);
        } else {
          std::cout << pad << it.key() << ": " << it.value().dump() << "\n";
        }
      }
    } else if (node.is_array()) {
      for (const auto& item : node) {
        if (item.is_object() || item.is_array()) {
          std::cout << pad << "-\n";
          walk(item, depth + 1);
        } else {
          std::cout << pad << "- " << item.dump() << "\n";
        }
      }
    } else {
      std::cout << pad << node.dump() << "\n";
    }
  };
  walk(result, 0);
  std::cout << "elapsed_ms: " << elapsed_ms << "\n";
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    auto delta = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(delta).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra, ratio bounds, and extremal families of Johnson graphs"};
  app.require_subcommand(1);

  bool pretty = false;
  bool one_indexed = false;
  unsigned seed = 0;
  app.add_flag("--pretty", pretty, "Human-readable rendering of the same payload");
  app.add_flag("--one-indexed", one_indexed, "Display families with 1-based ground elements");
  app.add_option("--seed", seed, "Reserved; current solvers are deterministic")->default_val(0);

  // spectrum
  auto* cmd_spectrum = app.add_subcommand("spectrum", "Exact spectrum of a profile matrix");
  int sp_n = 0, sp_k = 0, sp_t = 0;
  std::string sp_profile;
  bool sp_dense = false;
  cmd_spectrum->add_option("--n", sp_n, "Ambient set size")->required();
  cmd_spectrum->add_option("--k", sp_k, "Subset size")->required();
  auto* sp_opt_t = cmd_spectrum->add_option("--forbidden", sp_t, "Profile delta_t");
  auto* sp_opt_p =
      cmd_spectrum->add_option("--profile", sp_profile, "Comma list f0,...,fk of rationals");
  sp_opt_t->excludes(sp_opt_p);
  cmd_spectrum->add_flag("--dense-check", sp_dense,
                         "Also run the dense annihilation/trace/multiplicity checks");

  // hoffman
  auto* cmd_hoffman = app.add_subcommand("hoffman", "Ratio bound of a pseudo-adjacency profile");
  int ho_n = 0, ho_k = 0, ho_t = 0;
  std::string ho_profile;
  cmd_hoffman->add_option("--n", ho_n)->required();
  cmd_hoffman->add_option("--k", ho_k)->required();
  auto* ho_opt_t = cmd_hoffman->add_option("--forbidden", ho_t);
  auto* ho_opt_p = cmd_hoffman->add_option("--profile", ho_profile);
  ho_opt_t->excludes(ho_opt_p);

  // verify-theorem
  auto* cmd_theorem =
      app.add_subcommand("verify-theorem", "Check the extremal identity at n = k^2-k+1");
  int th_k = 0;
  std::string th_range;
  auto* th_opt_k = cmd_theorem->add_option("--k", th_k, "Single k");
  auto* th_opt_range = cmd_theorem->add_option("--k-range", th_range, "Range A..B");
  th_opt_k->excludes(th_opt_range);

  // mis
  auto* cmd_mis = app.add_subcommand("mis", "Maximum independent set of J(n,k,t)");
  int mis_n = 0, mis_k = 0, mis_t = 0, mis_size = 0;
  long mis_budget = 20000000;
  bool mis_enumerate = false;
  cmd_mis->add_option("--n", mis_n)->required();
  cmd_mis->add_option("--k", mis_k)->required();
  cmd_mis->add_option("--t", mis_t)->required();
  cmd_mis->add_option("--budget", mis_budget, "Branch-and-bound node budget");
  cmd_mis->add_flag("--enumerate-all", mis_enumerate,
                    "Enumerate every independent set of --size");
  cmd_mis->add_option("--size", mis_size, "Target size for --enumerate-all");

  // plane
  auto* cmd_plane = app.add_subcommand("plane", "PG(2,q) points and lines");
  int pl_q = 0;
  bool pl_clique = false;
  cmd_plane->add_option("--q", pl_q, "Plane order (prime power)")->required();
  cmd_plane->add_flag("--clique", pl_clique, "Emit the lines as a Johnson-graph clique");

  // bruck-ryser
  auto* cmd_bruck = app.add_subcommand("bruck-ryser", "Arithmetic exclusion of plane orders");
  int br_order = 0;
  cmd_bruck->add_option("--order", br_order)->required();

  // axioms
  auto* cmd_axioms = app.add_subcommand("axioms", "Association scheme axioms by enumeration");
  int ax_n = 0, ax_k = 0;
  cmd_axioms->add_option("--n", ax_n)->required();
  cmd_axioms->add_option("--k", ax_k)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(cmd_spectrum)) {
      if (!*sp_opt_t && !*sp_opt_p)
        throw std::invalid_argument("spectrum: need --forbidden or --profile");
      ProfileMatrixSpec spec = spec_from_options(sp_n, sp_k, sp_t, sp_profile, !!*sp_opt_t);
      json params = {{"n", sp_n}, {"k", sp_k}};
      if (*sp_opt_t) params["forbidden"] = sp_t;
      if (*sp_opt_p) params["profile"] = sp_profile;
      params["dense_check"] = sp_dense;
      Stopwatch watch;
      json result = to_json(exact_spectrum(spec));
      result["nonzero_diagonal"] = (spec.f[spec.k] != 0);
      if (sp_dense) result["dense_check"] = to_json(verify_spectrum_dense(spec));
      print_envelope("spectrum", params, result, watch.elapsed_ms(), pretty);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_hoffman)) {
      if (!*ho_opt_t && !*ho_opt_p)
        throw std::invalid_argument("hoffman: need --forbidden or --profile");
      ProfileMatrixSpec spec = spec_from_options(ho_n, ho_k, ho_t, ho_profile, !!*ho_opt_t);
      json params = {{"n", ho_n}, {"k", ho_k}};
      if (*ho_opt_t) params["forbidden"] = ho_t;
      if (*ho_opt_p) params["profile"] = ho_profile;
      Stopwatch watch;
      json result = to_json(hoffman_bound(spec));
      print_envelope("hoffman", params, result, watch.elapsed_ms(), pretty);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_theorem)) {
      if (!*th_opt_k && !*th_opt_range)
        throw std::invalid_argument("verify-theorem: need --k or --k-range");
      Stopwatch watch;
      if (*th_opt_k) {
        json result = to_json(verify_theorem(th_k));
        print_envelope("verify-theorem", {{"k", th_k}}, result, watch.elapsed_ms(), pretty);
        return kExitOk;
      }
      auto [lo, hi] = parse_range(th_range);
      json reports = json::array();
      bool all_true = true;
      for (int k = lo; k <= hi; ++k) {
        TheoremReport report = verify_theorem(k);
        all_true = all_true && report.verdict;
        reports.push_back(to_json(report));
      }
      json result = {{"reports", reports}, {"all_verdicts_true", all_true}};
      print_envelope("verify-theorem", {{"k_range", th_range}}, result, watch.elapsed_ms(),
                     pretty);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_mis)) {
      JohnsonParams params{mis_n, mis_k, mis_t};
      json param_json = {{"n", mis_n}, {"k", mis_k}, {"t", mis_t}};
      if (mis_enumerate) {
        if (mis_size <= 0)
          throw std::invalid_argument("mis --enumerate-all: need a positive --size");
        param_json["size"] = mis_size;
        Stopwatch watch;
        json result = to_json(enumerate_maximum_independent_sets(params, mis_size), one_indexed);
        print_envelope("mis", param_json, result, watch.elapsed_ms(), pretty);
        return kExitOk;
      }
      param_json["budget"] = mis_budget;
      Stopwatch watch;
      MisResult result = max_independent_set(params, mis_budget);
      print_envelope("mis", param_json, to_json(result, one_indexed), watch.elapsed_ms(),
                     pretty);
      return (result.budget_exhausted && !result.optimal) ? kExitBudgetExhausted : kExitOk;
    }

    if (app.got_subcommand(cmd_plane)) {
      json params = {{"q", pl_q}, {"clique", pl_clique}};
      Stopwatch watch;
      json result =
          pl_clique ? to_json(plane_clique(pl_q), one_indexed) : to_json(build_plane(pl_q));
      print_envelope("plane", params, result, watch.elapsed_ms(), pretty);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_bruck)) {
      Stopwatch watch;
      json result = to_json(bruck_ryser_excludes(br_order));
      print_envelope("bruck-ryser", {{"order", br_order}}, result, watch.elapsed_ms(), pretty);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_axioms)) {
      Stopwatch watch;
      json result = to_json(verify_scheme_axioms(ax_n, ax_k));
      print_envelope("axioms", {{"n", ax_n}, {"k", ax_k}}, result, watch.elapsed_ms(), pretty);
      return kExitOk;
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 1;
  }

  return kExitInputError;
}
