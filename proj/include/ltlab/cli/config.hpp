#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltlab/formal_groups/lubin_tate.hpp"
#include "ltlab/padic/context.hpp"
#include "ltlab/padic/exact_poly.hpp"

namespace ltlab::cli {

using json = nlohmann::json;

// "canonical" = X^q + pi X, "multiplicative" = (1+X)^p - 1, "random(seed)",
// or an explicit integer coefficient list (low..high).
struct PolySpec {
  enum class Kind { Canonical, Multiplicative, Random, Coeffs };
  Kind kind = Kind::Canonical;
  std::uint64_t seed = 0;
  std::vector<long> coeffs;

  static PolySpec parse(const json& j);
  json to_json() const;
  std::string str() const;
};

struct CaseConfig {
  int p = 3, f = 1;
  std::optional<EisensteinSpec> eis;
  int N = 40;
  int D_series = 200, D_bivariate = 50, D_boundary = 300;
  int n = 2;
  PolySpec P;
  std::optional<PolySpec> Q;         // defaults to P
  std::optional<int> pi_prime_k;     // pi' = pi (1 + pi^k); absent means pi' = pi
  int threshold = 10;                // pi-digits
  bool adaptive = true;              // raise N to the planned precision
  bool decomposition = false;        // also run the level-(n+1) decomposition check

  std::uint64_t q() const;
  int e() const { return eis ? static_cast<int>(eis->size()) - 1 : 1; }
  json to_json() const;
  std::string key() const;
  // applies the fields present in j
  void merge(const json& j);
};

struct RunConfig {
  CaseConfig base;
  bool has_case_params = false;  // the config names a single case
  std::vector<json> cases;       // explicit overrides, each merged into base
  std::vector<std::string> checks;
  std::string out;
};

// Throws Error(ConfigError) on malformed input.
RunConfig parse_config(const json& j);
RunConfig load_config(const std::string& path);

// Cases for a suite: explicit cases, else the single configured case, else
// the suite's default matrix.
std::vector<CaseConfig> expand_cases(const RunConfig& rc, const std::string& suite);

// Working precision for a case: at least N, and with adaptive set enough to
// absorb the exponential's denominators up to degree D.
int planned_precision(const CaseConfig& c, int D);

struct CaseSetup {
  ContextPtr ctx;
  Poly P, Q;
  ExactPoly Q_exact;
  LocalElem pi_prime;
};
// pi' enters Q as its linear coefficient.
CaseSetup setup_case(const CaseConfig& c, int N);

Poly make_poly(const Context& C, const PolySpec& s, const LocalElem& linear);
ExactPoly exact_poly(const Context& C, const Poly& P);

// human-readable value with precision, integers shown in the symmetric range
std::string format_elem(const LocalElem& x);

}  // namespace ltlab::cli
