#include "ltlab/cli/config.hpp"

#include <fstream>
#include <random>
#include <regex>
#include <sstream>

namespace ltlab::cli {

namespace {

[[noreturn]] void config_error(const std::string& what) { fail(ErrorKind::ConfigError, what); }

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    config_error(std::string("field '") + key + "': " + e.what());
  }
}

const std::vector<std::string> kSuites = {"thm1", "prop2", "prop3", "thm4", "witt_axioms", "all"};

}  // namespace

PolySpec PolySpec::parse(const json& j) {
  PolySpec s;
  if (j.is_string()) {
    const std::string t = j.get<std::string>();
    std::smatch m;
    static const std::regex rnd(R"(random\((\d+)\))");
    if (t == "canonical") s.kind = Kind::Canonical;
    else if (t == "multiplicative") s.kind = Kind::Multiplicative;
    else if (t == "random") s.kind = Kind::Random;
    else if (std::regex_match(t, m, rnd)) {
      s.kind = Kind::Random;
      s.seed = std::stoull(m[1].str());
    } else config_error("unknown polynomial preset '" + t + "'");
    return s;
  }
  const json& c = j.is_object() ? (j.contains("coeffs") ? j.at("coeffs") : json()) : j;
  if (!c.is_array() || c.empty()) config_error("polynomial must be a preset name or a coefficient list");
  s.kind = Kind::Coeffs;
  for (const auto& x : c) {
    if (!x.is_number_integer()) config_error("polynomial coefficients must be integers");
    s.coeffs.push_back(x.get<long>());
  }
  return s;
}

json PolySpec::to_json() const {
  switch (kind) {
    case Kind::Canonical: return "canonical";
    case Kind::Multiplicative: return "multiplicative";
    case Kind::Random: return "random(" + std::to_string(seed) + ")";
    case Kind::Coeffs: return coeffs;
  }
  return nullptr;
}

std::string PolySpec::str() const {
  const json j = to_json();
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::uint64_t CaseConfig::q() const {
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) q *= static_cast<std::uint64_t>(p);
  return q;
}

json CaseConfig::to_json() const {
  json j;
  j["p"] = p;
  j["f"] = f;
  j["eis"] = eis ? json(*eis) : json(nullptr);
  j["N"] = N;
  j["D_series"] = D_series;
  j["D_bivariate"] = D_bivariate;
  j["D_boundary"] = D_boundary;
  j["n"] = n;
  j["P"] = P.to_json();
  j["Q"] = Q ? Q->to_json() : json(nullptr);
  j["pi_prime_k"] = pi_prime_k ? json(*pi_prime_k) : json(nullptr);
  j["threshold"] = threshold;
  j["adaptive"] = adaptive;
  j["decomposition"] = decomposition;
  return j;
}

std::string CaseConfig::key() const {
  std::ostringstream os;
  os << "p=" << p << ",f=" << f;
  if (eis) os << ",eis=" << json(*eis).dump();
  os << ",n=" << n << ",P=" << P.str() << ",Q=" << (Q ? Q->str() : P.str());
  os << ",pi'=" << (pi_prime_k ? "pi(1+pi^" + std::to_string(*pi_prime_k) + ")" : std::string("pi"));
  return os.str();
}

void CaseConfig::merge(const json& j) {
  if (!j.is_object()) config_error("case entries must be objects");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const json& v = it.value();
    if (k == "p") p = get_as<int>(j, "p");
    else if (k == "f") f = get_as<int>(j, "f");
    else if (k == "eis") eis = v.is_null() ? std::nullopt : std::optional<EisensteinSpec>(get_as<EisensteinSpec>(j, "eis"));
    else if (k == "N") N = get_as<int>(j, "N");
    else if (k == "D" || k == "D_series") D_series = get_as<int>(j, k.c_str());
    else if (k == "D_bivariate") D_bivariate = get_as<int>(j, "D_bivariate");
    else if (k == "D_boundary") D_boundary = get_as<int>(j, "D_boundary");
    else if (k == "n") n = get_as<int>(j, "n");
    else if (k == "P" || k == "preset") P = PolySpec::parse(v);
    else if (k == "Q") Q = v.is_null() ? std::nullopt : std::optional<PolySpec>(PolySpec::parse(v));
    else if (k == "pi_prime_k") pi_prime_k = v.is_null() ? std::nullopt : std::optional<int>(v.get<int>());
    else if (k == "threshold") threshold = get_as<int>(j, "threshold");
    else if (k == "adaptive") adaptive = get_as<bool>(j, "adaptive");
    else if (k == "decomposition") decomposition = get_as<bool>(j, "decomposition");
    else if (k == "seed") continue;
    else config_error("unknown case field '" + k + "'");
  }
  // a bare seed reseeds random presets
  if (j.contains("seed")) {
    const auto seed = get_as<std::uint64_t>(j, "seed");
    if (P.kind == PolySpec::Kind::Random) P.seed = seed;
    if (Q && Q->kind == PolySpec::Kind::Random) Q->seed = seed + 100;
  }
  if (p < 2 || f < 1 || N < 1 || n < 1 || D_series < 1 || D_bivariate < 1 || D_boundary < 1 || threshold < 0)
    config_error("case parameters out of range");
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) config_error("config must be a JSON object");
  RunConfig rc;
  json base = j;
  if (j.contains("cases")) {
    if (!j["cases"].is_array()) config_error("'cases' must be an array");
    for (const auto& c : j["cases"]) rc.cases.push_back(c);
    base.erase("cases");
  }
  if (j.contains("checks")) {
    for (const auto& c : j["checks"]) {
      const std::string s = c.get<std::string>();
      if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end()) config_error("unknown check '" + s + "'");
      rc.checks.push_back(s);
    }
    base.erase("checks");
  }
  if (j.contains("out")) {
    rc.out = get_as<std::string>(j, "out");
    base.erase("out");
  }
  rc.has_case_params = base.contains("p");
  rc.base.merge(base);
  return rc;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    config_error(std::string("malformed config: ") + e.what());
  }
  return parse_config(j);
}

std::vector<CaseConfig> expand_cases(const RunConfig& rc, const std::string& suite) {
  std::vector<CaseConfig> out;
  if (!rc.cases.empty()) {
    for (const auto& c : rc.cases) {
      CaseConfig cc = rc.base;
      cc.merge(c);
      out.push_back(cc);
    }
    return out;
  }
  if (rc.has_case_params) return {rc.base};
  CaseConfig b = rc.base;
  if (suite == "thm1") {
    struct Cell {
      int p, f;
      std::optional<EisensteinSpec> eis;
      int max_n;
    };
    const std::vector<Cell> cells = {{2, 1, std::nullopt, 2},
                                     {3, 1, std::nullopt, 2},
                                     {5, 1, std::nullopt, 2},
                                     {3, 2, std::nullopt, 1},
                                     {3, 1, EisensteinSpec{{-3}, {0}, {1}}, 2}};
    for (const Cell& cell : cells)
      for (int n = 1; n <= cell.max_n; ++n)
        for (std::uint64_t s = 1; s <= 3; ++s)
          for (bool shifted : {false, true}) {
            CaseConfig c = b;
            c.p = cell.p;
            c.f = cell.f;
            c.eis = cell.eis;
            c.n = n;
            c.P = PolySpec{PolySpec::Kind::Random, s, {}};
            c.Q = PolySpec{PolySpec::Kind::Random, 100 + s, {}};
            c.pi_prime_k = shifted ? std::optional<int>(n + 1) : std::nullopt;
            out.push_back(c);
          }
  } else if (suite == "prop2") {
    for (int p : {2, 3}) {
      CaseConfig c = b;
      c.p = p;
      c.f = 1;
      c.eis.reset();
      c.n = 2;
      c.P = PolySpec{};
      c.Q.reset();
      c.pi_prime_k.reset();
      out.push_back(c);
    }
  } else if (suite == "prop3") {
    CaseConfig c = b;
    c.p = 3;
    c.f = 1;
    c.eis.reset();
    c.n = 2;
    c.P = PolySpec{};
    c.Q.reset();
    c.pi_prime_k.reset();
    c.threshold = 8;
    c.D_bivariate = std::max(c.D_bivariate, 70);
    out.push_back(c);
  } else if (suite == "thm4") {
    CaseConfig c = b;
    c.p = 3;
    c.f = 1;
    c.eis.reset();
    c.n = 2;
    c.P = PolySpec{PolySpec::Kind::Coeffs, 0, {0, 3, 3, 1}};
    c.Q.reset();
    c.pi_prime_k.reset();
    c.D_boundary = std::max(c.D_boundary, 600);
    out.push_back(c);
  } else if (suite == "witt_axioms") {
    for (int p : {2, 3}) {
      CaseConfig c = b;
      c.p = p;
      c.f = 1;
      c.eis.reset();
      out.push_back(c);
    }
    CaseConfig c = b;
    c.p = 3;
    c.f = 2;
    c.eis.reset();
    out.push_back(c);
    c.f = 1;
    c.eis = EisensteinSpec{{-3}, {0}, {1}};
    out.push_back(c);
  } else {
    config_error("unknown suite '" + suite + "'");
  }
  return out;
}

int planned_precision(const CaseConfig& c, int D) {
  if (!c.adaptive) return c.N;
  // exponential coefficients reach v_pi = -(D - 1)/(q - 1); keep a margin
  // of twice the threshold plus slack for the composition
  const long long q = static_cast<long long>(c.q());
  const long long need = (D - 1 + q - 2) / (q - 1) + 2 * c.threshold + 10;
  return static_cast<int>(std::max<long long>(c.N, need));
}

Poly make_poly(const Context& C, const PolySpec& s, const LocalElem& linear) {
  const std::size_t q = static_cast<std::size_t>(C.q());
  Poly P;
  switch (s.kind) {
    case PolySpec::Kind::Canonical:
      P.assign(q + 1, C.zero());
      P[1] = linear;
      P[q] = C.one();
      break;
    case PolySpec::Kind::Multiplicative: {
      if (C.q() != static_cast<std::uint64_t>(C.p()) || C.e() != 1)
        config_error("the multiplicative preset needs K = Q_p");
      P.assign(static_cast<std::size_t>(C.p()) + 1, C.zero());
      mpz_class b;
      for (unsigned long k = 1; k <= static_cast<unsigned long>(C.p()); ++k) {
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(C.p()), k);
        P[k] = C.from_int(b);
      }
      if (!(linear - P[1]).is_zero()) config_error("the multiplicative preset fixes pi = p");
      break;
    }
    case PolySpec::Kind::Random: {
      // a_i = pi * (unit or 0) for 2 <= i <= q - 1
      std::mt19937_64 rng(s.seed);
      P.assign(q + 1, C.zero());
      P[1] = linear;
      P[q] = C.one();
      for (std::size_t i = 2; i < q; ++i) {
        std::vector<int> r(static_cast<std::size_t>(C.f()));
        for (auto& d : r) d = static_cast<int>(rng() % static_cast<std::uint64_t>(C.p()));
        P[i] = C.pi() * C.lift_residue(r);
      }
      break;
    }
    case PolySpec::Kind::Coeffs:
      for (long a : s.coeffs) P.push_back(C.from_int(a));
      if (P.size() != q + 1) config_error("coefficient list must have degree q");
      break;
  }
  return P;
}

ExactPoly exact_poly(const Context& C, const Poly& P) {
  std::vector<ExactPoly::Coeff> c;
  for (const auto& a : P) c.push_back(ExactPoly::coords_of(a));
  return ExactPoly::from_coords(C.ring(), c);
}

CaseSetup setup_case(const CaseConfig& c, int N) {
  CaseSetup s;
  s.ctx = make_context(c.p, c.f, c.eis, N);
  const Context& C = *s.ctx;
  s.P = make_poly(C, c.P, C.pi());
  s.pi_prime = c.pi_prime_k ? C.pi() * (C.one() + C.pi().pow(static_cast<std::uint64_t>(*c.pi_prime_k))) : C.pi();
  const PolySpec& qs = c.Q ? *c.Q : c.P;
  if (qs.kind == PolySpec::Kind::Coeffs) {
    s.Q = make_poly(C, qs, s.pi_prime);
    if (c.pi_prime_k) s.Q[1] = s.pi_prime;
  } else if (qs.kind == PolySpec::Kind::Multiplicative) {
    if (c.pi_prime_k) config_error("the multiplicative preset fixes pi' = p");
    s.Q = make_poly(C, qs, s.pi_prime);
  } else {
    s.Q = make_poly(C, qs, s.pi_prime);
  }
  s.Q_exact = exact_poly(C, s.Q);
  return s;
}

std::string format_elem(const LocalElem& x) {
  const LocalRing& R = x.ring();
  if (x.is_exact_zero()) return "0";
  if (R.is_extension() || R.dim() != 1 || R.ram() != 1) return x.str();
  const int p = R.p();
  if (x.is_zero()) return "O(" + std::to_string(p) + "^" + std::to_string(x.abs_prec()) + ")";
  mpz_class M, z = x.digits()[0];
  mpz_ui_pow_ui(M.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(x.abs_prec() + x.shift()));
  z %= M;
  if (z < 0) z += M;
  if (2 * z > M) z -= M;
  std::string s = z.get_str();
  if (x.shift() > 0) s += "/" + std::to_string(p) + "^" + std::to_string(x.shift());
  return s + " + O(" + std::to_string(p) + "^" + std::to_string(x.abs_prec()) + ")";
}

}  // namespace ltlab::cli
