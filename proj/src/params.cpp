#include "cmetas/params.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cmetas {

namespace {

void fail(const std::string& msg) { throw std::invalid_argument("ModelParams: " + msg); }

double parse_double(const std::string& key, const std::string& text) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for '" + key + "': " + text);
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size())
    throw std::invalid_argument("config: trailing junk after value for '" + key + "': " + text);
  return v;
}

}  // namespace

void ModelParams::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta)) fail("beta must be positive");
  if (!(a > 0.0) || !std::isfinite(a)) fail("a must be positive");
  if (!(beta > a)) fail("beta > a is required (subcritical magnitude tail)");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) fail("kappa must be nonnegative");
  if (!(c > 0.0) || !std::isfinite(c)) fail("c must be positive");
  if (!(theta > 0.0) || !std::isfinite(theta)) fail("theta must be positive");
  if (!(c1 >= 0.0 && c1 < 1.0)) fail("c1 must satisfy 0 <= c1 < 1");
  if (!std::isfinite(m0) || !std::isfinite(m)) fail("magnitudes must be finite");
  if (!(m >= m0)) fail("completeness magnitude m must be >= m0");
  if (!(omega > 0.0) || !std::isfinite(omega)) fail("omega must be positive");
  const double n = branching_ratio();
  if (!(n < 1.0)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", n);
    fail(std::string("branching ratio n = ") + buf + " must be < 1");
  }
}

std::string ModelParams::fingerprint() const {
  char text[512];
  std::snprintf(text, sizeof text,
                "beta=%.17g a=%.17g kappa=%.17g c=%.17g theta=%.17g c1=%.17g m0=%.17g m=%.17g "
                "omega=%.17g",
                beta, a, kappa, c, theta, c1, m0, m, omega);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char* q = text; *q; ++q) {
    h ^= static_cast<unsigned char>(*q);
    h *= 0x100000001b3ULL;
  }
  char out[32];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

DerivedConstants derived_constants(const ModelParams& p, double L) {
  p.validate();
  if (!(L > 0.0 && L <= 1.0)) throw std::invalid_argument("derived_constants: need 0 < L <= 1");
  DerivedConstants k;
  k.n = p.branching_ratio();
  k.H = std::exp(-(p.beta - p.a) * (p.m - p.m0));
  k.Q = std::exp(-p.beta * (p.m - p.m0));
  k.L = L;
  k.delta = k.n * (1.0 - L);
  k.Delta = k.n / (1.0 - k.n) - k.delta / (1.0 - k.delta);
  k.omega_tilde = p.omega * (k.Q - k.n * (k.H - L));
  k.m_bar = std::log(2.0) / (p.beta - p.a) + p.m0;
  return k;
}

std::map<std::string, double> read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::map<std::string, double> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string key, value;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::istringstream ss(line);
      if (!(ss >> key)) continue;  // blank line
      ss >> value;
    } else {
      key = line.substr(0, eq);
      value = line.substr(eq + 1);
    }
    auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      s = (b == std::string::npos) ? std::string{} : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    if (key.empty()) continue;
    if (value.empty())
      throw std::invalid_argument("config: missing value at line " + std::to_string(lineno));
    kv[key] = parse_double(key, value);
  }
  return kv;
}

ModelParams params_from_map(std::map<std::string, double> kv) {
  constexpr double kLn10 = 2.302585092994045684;
  const bool has_beta = kv.count("beta"), has_b = kv.count("b_value");
  const bool has_a = kv.count("a"), has_alpha = kv.count("alpha");
  if (has_beta && has_b)
    throw std::invalid_argument("config: give either beta or b_value, not both");
  if (has_a && has_alpha) throw std::invalid_argument("config: give either a or alpha, not both");
  if (has_b) {
    kv["beta"] = kv["b_value"] * kLn10;
    kv.erase("b_value");
  }
  if (has_alpha) {
    kv["a"] = kv["alpha"] * kLn10;
    kv.erase("alpha");
  }

  ModelParams p;
  struct Field {
    const char* key;
    double ModelParams::* member;
  };
  static const Field fields[] = {
      {"beta", &ModelParams::beta}, {"a", &ModelParams::a},
      {"kappa", &ModelParams::kappa}, {"c", &ModelParams::c},
      {"theta", &ModelParams::theta}, {"c1", &ModelParams::c1},
      {"m0", &ModelParams::m0}, {"m", &ModelParams::m},
      {"omega", &ModelParams::omega}};
  for (const auto& f : fields) {
    auto it = kv.find(f.key);
    if (it == kv.end())
      throw std::invalid_argument(std::string("config: missing key '") + f.key + "'");
    p.*(f.member) = it->second;
    kv.erase(it);
  }
  // leftover keys that are not model parameters are rejected here; run
  // configuration (T, seed, ...) lives in separate CLI options
  for (const auto& [key, _] : kv) {
    if (key == "L") continue;  // optional calibrated constant, read by callers
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  p.validate();
  return p;
}

ModelParams load_params(const std::string& path) {
  auto kv = read_key_value_file(path);
  static const char* keys[] = {"beta", "b_value", "a",  "alpha", "kappa", "c",
                               "theta", "c1",      "m0", "m",     "omega", "L"};
  for (const char* key : keys) {
    std::string env_name = "CMETAS_";
    for (const char* q = key; *q; ++q) env_name += static_cast<char>(std::toupper(*q));
    if (const char* env = std::getenv(env_name.c_str())) kv[key] = parse_double(key, env);
  }
  return params_from_map(std::move(kv));
}

}  // namespace cmetas
