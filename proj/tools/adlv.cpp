// adlv: Ekedahl-Oort strata for GU(2, n-2).
//
//   adlv classify --n 13 --format dot
//   adlv verify --suite all
//   adlv element --n 5 --word 0,1,2 --omega -2 --similitude -1

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adlv/errors.hpp"
#include "adlv/gu_strata.hpp"
#include "adlv/render.hpp"
#include "adlv/roots.hpp"
#include "adlv/sigma_conj.hpp"
#include "adlv/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

constexpr int max_rank = 64;

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(std::string const &s)
{
  std::vector<std::string> res;
  if (s.empty())
    return res;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    res.push_back(item);
  if (s.back() == ',')
    res.push_back("");
  return res;
}

adlv::Word parse_word(std::string const &s, int n)
{
  adlv::Word res;
  for (std::string const &tok : split_csv(s)) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (std::exception const &) {
      throw UsageError("malformed word entry '" + tok + "'");
    }
    if (pos != tok.size())
      throw UsageError("malformed word entry '" + tok + "'");
    if (v < 0 || v >= n)
      throw UsageError("letter " + tok + " out of range 0.." + std::to_string(n - 1));
    res.push_back(v);
  }
  return res;
}

int cmd_classify(int n, std::string const &format)
{
  if (n < 2 || n > max_rank)
    throw UsageError("--n must lie in 2.." + std::to_string(max_rank));

  if (format == "table") {
    std::cout << adlv::render_table(n, adlv::all_records(n));
  } else if (format == "json") {
    std::cout << adlv::to_json(n, adlv::all_records(n)).dump(2) << "\n";
  } else if (format == "dot") {
    std::cout << adlv::render_dot(adlv::stratum_graph(n));
  } else {
    throw UsageError("unknown format '" + format + "'");
  }
  return exit_ok;
}

int cmd_verify(std::string const &suite, int n_max)
{
  if (!adlv::verify::is_suite(suite))
    throw UsageError("unknown suite '" + suite + "'");
  if (n_max < 0 || n_max > 30)
    throw UsageError("--n-max must lie in 0..30");

  bool ok = true;
  for (adlv::verify::Report const &r : adlv::verify::run_suite(suite, n_max)) {
    if (r.passed) {
      std::cout << "PASS " << r.name << " (" << r.checks << " checks)\n";
    } else {
      std::cout << "FAIL " << r.name << ": " << r.failure << "\n";
      ok = false;
    }
  }
  return ok ? exit_ok : exit_failed;
}

int cmd_element(int n, std::string const &word, int omega, int similitude,
                std::string const &show)
{
  using namespace adlv;
  if (n < 2 || n > max_rank)
    throw UsageError("--n must lie in 2.." + std::to_string(max_rank));

  static std::vector<std::string> const known{"length", "window", "omega",  "supp_sigma",
                                              "s_w_sigma", "phi_w", "lp", "verdict"};
  std::set<std::string> fields;
  for (std::string const &f : split_csv(show)) {
    if (f == "all") {
      fields.insert(known.begin(), known.end());
    } else if (std::find(known.begin(), known.end(), f) == known.end()) {
      throw UsageError("unknown field '" + f + "'");
    } else {
      fields.insert(f);
    }
  }

  WeylElement w = WeylElement::from_word(n, parse_word(word, n)) * power(tau1(n), omega) *
                  WeylElement::identity(n, similitude);
  auto wants = [&](char const *f) { return fields.contains(f); };

  if (wants("length"))
    std::cout << "length: " << length(w) << "\n";
  if (wants("window"))
    std::cout << "window: " << w.str() << "\n";
  if (wants("omega"))
    std::cout << "omega: " << omega_component(w) << "\n";
  if (wants("supp_sigma"))
    std::cout << "supp_sigma: " << supp_sigma(w).str() << "\n";
  if (wants("s_w_sigma"))
    std::cout << "s_w_sigma: " << s_w_sigma(w).str() << "\n";
  if (wants("phi_w"))
    std::cout << "phi_w: " << phi_w(w).size() << " roots\n";
  if (wants("lp")) {
    std::size_t count = for_each_r(w, [](std::span<const int>) { return true; },
                                   SearchBudget::from_env().max_nodes);
    std::cout << "lp: " << count << " elements\n";
  }
  if (wants("verdict")) {
    bool in_coset = omega_component(w) == -2 && w.similitude() == -1;
    if (!in_coset || !is_min_coset_rep(w)) {
      std::cout << "verdict: n/a (not a minimal representative in the tau coset)\n";
    } else {
      EmptinessVerdict v = is_empty_basic(w, SearchBudget::from_env().max_nodes);
      if (v.empty)
        std::cout << "verdict: empty (witness r = " << v.witness->str() << ")\n";
      else
        std::cout << "verdict: nonempty\n";
    }
  }
  return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Ekedahl-Oort strata for GU(2, n-2)"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "table";
  auto *classify = app.add_subcommand("classify", "classify all strata for a given n");
  classify->add_option("--n", n, "rank n")->required();
  classify->add_option("--format", format, "table, json or dot");

  std::string suite;
  int n_max = 0;
  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "oracle, closedforms, reduction, figures or all")
    ->required();
  verify->add_option("--n-max", n_max, "largest n to check (0 = suite default)");

  std::string word;
  int omega = 0;
  int similitude = 0;
  std::string show = "all";
  auto *element = app.add_subcommand("element", "inspect s_{i_1} ... s_{i_r} tau_1^omega");
  element->add_option("--n", n, "rank n")->required();
  element->add_option("--word", word, "comma separated letters in 0..n-1");
  element->add_option("--omega", omega, "power of tau_1");
  element->add_option("--similitude", similitude, "similitude factor");
  element->add_option("--show", show, "comma separated fields, or all");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*classify)
      return cmd_classify(n, format);
    if (*verify)
      return cmd_verify(suite, n_max);
    return cmd_element(n, word, omega, similitude, show);
  } catch (UsageError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (adlv::BudgetExceeded const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  } catch (adlv::Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
