// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ite/scenario.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "ite/error.h"

namespace ite {

using nlohmann::json;

namespace {

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kConfig, what);
}

const json& Need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Bad(fmt::format("missing key '{}'", key));
  return j.at(key);
}

std::int64_t Int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) Bad(what + " must be an integer");
  return j.get<std::int64_t>();
}

std::int64_t Positive(const json& j, const std::string& what) {
  const auto v = Int(j, what);
  if (v <= 0) Bad(what + " must be positive");
  return v;
}

std::vector<std::int64_t> IntList(const json& j, const std::string& what) {
  if (!j.is_array()) Bad(what + " must be a list");
  std::vector<std::int64_t> out;
  for (const auto& v : j) out.push_back(Int(v, what));
  return out;
}

Word WordOf(const json& j, int alphabet, const std::string& what) {
  Word w;
  for (auto v : IntList(j, what)) {
    if (v < 0 || v >= alphabet) Bad(what + ": symbol out of range");
    w.push_back(static_cast<Symbol>(v));
  }
  return w;
}

SymbolMask MaskOf(const json& j, int alphabet, const std::string& what) {
  SymbolMask m = 0;
  for (Symbol s : WordOf(j, alphabet, what)) m |= SymbolMask{1} << s;
  if (m == 0) Bad(what + ": empty symbol set");
  return m;
}

MapSpec ParseMap(const json& j, int alphabet) {
  if (j.contains("shift")) return MapSpec::Shift(Int(j["shift"], "shift"));
  if (j.contains("code")) {
    const json& c = j["code"];
    const Coord lo = Int(Need(c, "lo"), "code.lo");
    const Coord hi = Int(Need(c, "hi"), "code.hi");
    return MapSpec::Code(alphabet, lo, hi,
                         WordOf(Need(c, "table"), alphabet, "code.table"));
  }
  Bad("map needs 'shift' or 'code'");
}

std::vector<MapSpec> ParseMaps(const json& j, int alphabet, const char* key) {
  std::vector<MapSpec> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) Bad(fmt::format("system.{} must be a list", key));
  for (const auto& m : j[key]) out.push_back(ParseMap(m, alphabet));
  return out;
}

TailedPoint ParsePoint(const json& j, int alphabet) {
  const auto sym = [&](const char* key) {
    const auto v = Int(Need(j, key), key);
    if (v < 0 || v >= alphabet) Bad(fmt::format("{} out of range", key));
    return static_cast<Symbol>(v);
  };
  const Symbol left = sym("left");
  const Symbol right = sym("right");
  Word core;
  Coord start = 0;
  if (j.contains("core")) core = WordOf(j["core"], alphabet, "core");
  if (j.contains("start")) start = Int(j["start"], "start");
  return TailedPoint(left, right, std::move(core), start);
}

TargetSet ParseTarget(const json& j, int alphabet) {
  const std::string kind = Need(j, "kind").get<std::string>();
  if (kind == "whole") return TargetSet::Whole();
  if (kind == "eventually_constant") {
    const auto tail = Int(Need(j, "tail"), "tail");
    if (tail < 0 || tail >= alphabet) Bad("tail out of range");
    return TargetSet::EventuallyConstant(static_cast<Symbol>(tail),
                                         Positive(Need(j, "k_max"), "k_max"));
  }
  if (kind == "points") {
    std::vector<TailedPoint> pts;
    for (const auto& p : Need(j, "points")) pts.push_back(ParsePoint(p, alphabet));
    if (pts.empty()) Bad("points: empty list");
    return TargetSet::Points(std::move(pts));
  }
  if (kind == "product") {
    ProductComponent c;
    c.lo = Int(Need(j, "lo"), "lo");
    for (const auto& m : Need(j, "inside")) {
      c.inside.push_back(MaskOf(m, alphabet, "inside"));
    }
    c.left = MaskOf(Need(j, "left"), alphabet, "left");
    c.right = MaskOf(Need(j, "right"), alphabet, "right");
    return TargetSet::Product(std::move(c));
  }
  if (kind == "union") {
    std::vector<TargetSet> parts;
    for (const auto& p : Need(j, "parts")) parts.push_back(ParseTarget(p, alphabet));
    if (parts.empty()) Bad("union: no parts");
    return TargetSet::Union(std::move(parts));
  }
  Bad("unknown target kind '" + kind + "'");
}

std::vector<FiniteMetricNDS::IndexMap> ParseIndexMaps(const json& j,
                                                      const char* key) {
  std::vector<FiniteMetricNDS::IndexMap> out;
  if (!j.contains(key)) return out;
  for (const auto& m : j[key]) {
    FiniteMetricNDS::IndexMap f;
    for (auto v : IntList(m, key)) {
      if (v < 0) Bad(fmt::format("{}: negative index", key));
      f.push_back(static_cast<std::size_t>(v));
    }
    out.push_back(std::move(f));
  }
  return out;
}

Source ParseSource(const json& config) {
  const json& sys = Need(config, "system");
  const std::string type = sys.value("type", "symbolic");
  if (type == "metric") {
    std::vector<std::vector<double>> d;
    for (const auto& row : Need(sys, "distance")) {
      d.push_back(row.get<std::vector<double>>());
    }
    FiniteMetricNDS metric(std::move(d), ParseIndexMaps(sys, "preperiod"),
                           ParseIndexMaps(sys, "period"));
    std::vector<std::size_t> subset;
    for (auto v : IntList(Need(config, "subset"), "subset")) {
      if (v < 0 || static_cast<std::size_t>(v) >= metric.size()) {
        Bad("subset index out of range");
      }
      subset.push_back(static_cast<std::size_t>(v));
    }
    const double eps = Need(config, "eps").get<double>();
    if (!(eps > 0)) Bad("eps must be positive");
    return MetricSource{std::move(metric), std::move(subset), eps};
  }
  if (type != "symbolic") Bad("unknown system type '" + type + "'");
  const auto a = Positive(Need(sys, "alphabet"), "alphabet");
  if (a > 64) Bad("alphabet larger than 64");
  const int alphabet = static_cast<int>(a);
  auto pre = ParseMaps(sys, alphabet, "preperiod");
  auto period = ParseMaps(sys, alphabet, "period");
  if (period.empty()) Bad("system.period must be non-empty");
  SymbolicNDS system(Alphabet(alphabet), std::move(pre), std::move(period));
  const int r = static_cast<int>(config.contains("r") ? Int(config["r"], "r") : 0);
  if (r < 0) Bad("r must be nonnegative");
  TargetSet target = config.contains("target")
                         ? ParseTarget(config["target"], alphabet)
                         : TargetSet::Whole();
  return SymbolicSource{std::move(system), std::move(target), r};
}

SolverKind ParseSolver(const std::string& s) {
  if (s == "auto") return SolverKind::kAuto;
  if (s == "compressed") return SolverKind::kCompressedTree;
  if (s == "explicit") return SolverKind::kExplicitTree;
  if (s == "branch_and_bound") return SolverKind::kBranchAndBound;
  Bad("unknown solver '" + s + "'");
}

double Display(double v, bool log2) { return log2 ? v / std::log(2.0) : v; }

}  // namespace

Scenario ParseScenario(const json& config) {
  if (!config.is_object()) Bad("config must be an object");
  Scenario sc{config.value("name", "scenario"), [&]() -> Source {
                 try {
                   return ParseSource(config);
                 } catch (const Error& e) {
                   if (e.code() == ErrorCode::kConfig) throw;
                   Bad(e.what());
                 } catch (const json::exception& e) {
                   Bad(e.what());
                 }
               }(), {}, {}, {}, ""};
  const json& sweep = Need(config, "sweep");
  const json& thetas = Need(sweep, "theta");
  if (!thetas.is_array() || thetas.empty()) Bad("sweep.theta must be a non-empty list");
  for (const auto& t : thetas) {
    if (!t.is_string()) Bad("theta entries must be strings like \"1/2\"");
    Rational q;
    try {
      q = Rational::Parse(t.get<std::string>());
    } catch (const Error& e) {
      Bad("theta '" + t.get<std::string>() + "': " + e.what());
    }
    if (q < Rational(0, 1) || Rational(1, 1) < q) {
      Bad("theta '" + t.get<std::string>() + "' outside [0,1]");
    }
    sc.thetas.push_back(q);
  }
  const auto range = IntList(Need(sweep, "n_range"), "n_range");
  if (range.size() != 2 || range[0] < 1 || range[1] < range[0]) {
    Bad("n_range must be [lo, hi] with 1 <= lo <= hi");
  }
  sc.n_values = NRange(range[0], range[1]);
  if (config.contains("caps")) {
    const json& caps = config["caps"];
    if (caps.contains("universe")) {
      sc.options.caps.universe = Positive(caps["universe"], "caps.universe");
    }
    if (caps.contains("candidates")) {
      sc.options.caps.candidates = Positive(caps["candidates"], "caps.candidates");
    }
    if (caps.contains("nodes")) {
      sc.options.caps.nodes = Positive(caps["nodes"], "caps.nodes");
    }
    if (caps.contains("length_cap")) {
      sc.options.length_cap = Positive(caps["length_cap"], "caps.length_cap");
    }
  }
  if (config.contains("solver")) {
    sc.options.solver = ParseSolver(config["solver"].get<std::string>());
  }
  if (config.contains("output")) sc.out_dir = config["output"].value("dir", "");
  return sc;
}

Scenario LoadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) Bad("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    Bad(path + ": " + e.what());
  }
  return ParseScenario(j);
}

std::string FormatNumber(double v) { return fmt::format("{:.17g}", v); }

std::string CurveCsv(const std::vector<EntropyEstimate>& curve, bool log2) {
  std::string out = fmt::format("# schema {} units {}\n", kReportSchema,
                                log2 ? "bits" : "nats");
  out += "theta,N,alpha_lo,alpha_hi,exact\n";
  for (const auto& e : curve) {
    for (const auto& r : e.per_n) {
      if (!r.ok) {
        out += fmt::format("{},{},,,error\n", e.theta.ToString(), r.n);
        continue;
      }
      out += fmt::format("{},{},{},{},{}\n", e.theta.ToString(), r.n,
                         FormatNumber(Display(r.root.lo, log2)),
                         FormatNumber(Display(r.root.hi, log2)),
                         r.root.exact ? "exact" : "bracketed");
    }
  }
  return out;
}

std::string TailCsv(const std::vector<EntropyEstimate>& curve, bool log2) {
  std::string out = fmt::format("# schema {} units {}\n", kReportSchema,
                                log2 ? "bits" : "nats");
  out += "theta,tail_lo,tail_hi,exact\n";
  for (const auto& e : curve) {
    out += fmt::format("{},{},{},{}\n", e.theta.ToString(),
                       FormatNumber(Display(e.tail_lo, log2)),
                       FormatNumber(Display(e.tail_hi, log2)),
                       e.exact ? "exact" : "bracketed");
  }
  return out;
}

json CurveJson(const std::string& name, const std::vector<EntropyEstimate>& curve,
               bool log2) {
  json points = json::array();
  for (const auto& e : curve) {
    json rows = json::array();
    for (const auto& r : e.per_n) {
      if (r.ok) {
        rows.push_back({{"N", r.n},
                        {"alpha_lo", Display(r.root.lo, log2)},
                        {"alpha_hi", Display(r.root.hi, log2)},
                        {"exact", r.root.exact}});
      } else {
        rows.push_back({{"N", r.n}, {"error", r.error}});
      }
    }
    points.push_back({{"theta", e.theta.ToString()},
                      {"scale", e.scale},
                      {"tail_lo", Display(e.tail_lo, log2)},
                      {"tail_hi", Display(e.tail_hi, log2)},
                      {"exact", e.exact},
                      {"per_n", rows}});
  }
  return json{{"schema", kReportSchema},
              {"scenario", name},
              {"units", log2 ? "bits" : "nats"},
              {"curve", points}};
}

json LawsJson(const std::vector<LawReport>& reports) {
  json out = json::array();
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    out.push_back(r.ToJson());
    pass += r.verdict == Verdict::kPass;
    fail += r.verdict == Verdict::kFail;
    skipped += r.verdict == Verdict::kSkipped;
  }
  return json{{"schema", kReportSchema},
              {"counts", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}},
              {"reports", out}};
}

void WriteTextFile(const std::string& dir, const std::string& name,
                   const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) Bad("cannot write " + path.string());
}

// ---------------------------------------------------------------------------

Example51Report RunExample51(const Example51Options& options) {
  if (options.thetas.empty()) Bad("empty theta list");
  const SymbolicNDS ex = ExampleSystem();
  const SymbolicSource whole{ex, TargetSet::Whole(), 0};
  EstimatorOptions est;
  est.jobs = options.jobs;

  Example51Report rep;
  for (const auto& t : options.thetas) {
    if (t.is_zero()) continue;
    rep.sweep.push_back(EstimateEntropy(whole, t, options.n_values, est));
    if (t == Rational(1, 1)) {
      rep.capacity = CapacityEntropy(whole, options.n_values, est);
    }
  }

  // The family sweep uses theta = 1/2 unless it was left out of the grid.
  rep.family_theta = Rational(1, 2);
  if (std::find(options.thetas.begin(), options.thetas.end(), Rational(1, 2)) ==
      options.thetas.end()) {
    for (const auto& t : options.thetas) {
      if (!t.is_zero()) {
        rep.family_theta = t;
        break;
      }
    }
  }
  LawOptions lo;
  lo.estimator = est;
  lo.n_values = options.n_values;
  std::int64_t depth = 1;
  for (auto n : options.n_values) {
    depth = std::max(depth, LengthWindow(n, rep.family_theta).MaxLength());
  }
  const std::int64_t expected =
      [&] {
        const auto j = DependenceCoords(ex, depth, 0);
        return std::max(std::abs(j.front()), std::abs(j.back())) + 1;
      }();
  const std::int64_t k_max = options.k_max.value_or(expected + 2);
  if (k_max < 1) Bad("kmax must be positive");
  rep.k_values = NRange(1, k_max);
  const EntropyEstimate reference =
      EstimateEntropy(whole, rep.family_theta, options.n_values, est);
  for (auto k : rep.k_values) {
    rep.family.push_back(EstimateEntropy(
        SymbolicSource{ex, TargetSet::EventuallyConstant(1, k), 0},
        rep.family_theta, options.n_values, est));
    bool same = true;
    for (std::size_t i = 0; i < reference.per_n.size(); ++i) {
      same = same &&
             rep.family.back().per_n[i].root.lo == reference.per_n[i].root.lo &&
             rep.family.back().per_n[i].root.hi == reference.per_n[i].root.hi;
    }
    rep.identical.push_back(same);
  }
  rep.threshold.expected = expected;
  for (std::size_t i = rep.k_values.size(); i-- > 0;) {
    if (!rep.identical[i]) break;
    rep.threshold.threshold = rep.k_values[i];
  }

  // theta = 0 with a finite length cap, one N range per k.
  const double l2 = std::log(2.0);
  double sup12 = 0;
  const std::int64_t top_k = std::min(options.decay_k, k_max);
  for (std::int64_t k = 1; k <= top_k; ++k) {
    const auto reach = static_cast<std::int64_t>(
        std::ceil((2.0 * static_cast<double>(k) - 1.0) * l2 / 0.1));
    const auto ns = NRange(4, std::max<std::int64_t>(12, reach));
    const auto e = EstimateEntropy(
        SymbolicSource{ex, TargetSet::EventuallyConstant(1, k), 0},
        Rational(0, 1), ns, est);
    for (const auto& r : e.per_n) {
      rep.decay.push_back({k, r.n, r.root,
                           (2.0 * static_cast<double>(k) - 1.0) * l2 /
                               static_cast<double>(r.n)});
      if (r.n == 12) sup12 = std::max(sup12, r.root.hi);
    }
  }

  double half_value = std::nan("");
  for (const auto& e : rep.sweep) {
    if (e.theta == Rational(1, 2)) half_value = e.tail_hi;
  }
  if (std::isnan(half_value)) half_value = reference.tail_hi;
  rep.summary = json{
      {"schema", kReportSchema},
      {"family_theta", rep.family_theta.ToString()},
      {"whole_space_tail_at_half", half_value},
      {"k_max", k_max},
      {"threshold", rep.threshold.threshold},
      {"expected_threshold", rep.threshold.expected},
      {"theta0_sup_root_at_N12", sup12},
      {"discontinuous_at_zero", sup12 < 0.45 && std::abs(half_value - l2) < 1e-6},
  };
  json tails = json::array();
  for (const auto& e : rep.sweep) {
    tails.push_back({{"theta", e.theta.ToString()},
                     {"tail_lo", e.tail_lo},
                     {"tail_hi", e.tail_hi},
                     {"exact", e.exact}});
  }
  rep.summary["sweep"] = tails;
  return rep;
}

void WriteExample51(const Example51Report& rep, const std::string& dir,
                    bool log2) {
  WriteTextFile(dir, "example51_sweep.csv", CurveCsv(rep.sweep, log2));
  if (!rep.capacity.empty()) {
    std::string cap = fmt::format("# schema {} units {}\n", kReportSchema,
                                  log2 ? "bits" : "nats");
    cap += "N,strings,capacity,exact\n";
    for (const auto& c : rep.capacity) {
      cap += fmt::format("{},{},{},{}\n", c.n,
                         FormatNumber(static_cast<double>(c.lambda)),
                         FormatNumber(Display(c.value, log2)),
                         c.exact ? "exact" : "bracketed");
    }
    WriteTextFile(dir, "example51_capacity.csv", cap);
  }
  std::string fam = fmt::format("# schema {} units {} theta {}\n", kReportSchema,
                                log2 ? "bits" : "nats",
                                rep.family_theta.ToString());
  fam += "k_max,N,alpha_lo,alpha_hi,exact,identical_to_whole\n";
  for (std::size_t i = 0; i < rep.family.size(); ++i) {
    for (const auto& r : rep.family[i].per_n) {
      fam += fmt::format("{},{},{},{},{},{}\n", rep.k_values[i], r.n,
                         FormatNumber(Display(r.root.lo, log2)),
                         FormatNumber(Display(r.root.hi, log2)),
                         r.root.exact ? "exact" : "bracketed",
                         rep.identical[i] ? 1 : 0);
    }
  }
  WriteTextFile(dir, "example51_family.csv", fam);
  std::string dec = fmt::format("# schema {} units {} theta 0\n", kReportSchema,
                                log2 ? "bits" : "nats");
  dec += "k,N,alpha_lo,alpha_hi,exact,bound\n";
  for (const auto& d : rep.decay) {
    dec += fmt::format("{},{},{},{},{},{}\n", d.k, d.n,
                       FormatNumber(Display(d.root.lo, log2)),
                       FormatNumber(Display(d.root.hi, log2)),
                       d.root.exact ? "exact" : "bracketed",
                       FormatNumber(Display(d.bound, log2)));
  }
  WriteTextFile(dir, "example51_decay.csv", dec);
  WriteTextFile(dir, "example51_summary.json", rep.summary.dump(2) + "\n");
}

std::string Example51Text(const Example51Report& rep, bool log2) {
  std::ostringstream os;
  const char* unit = log2 ? "bits" : "nats";
  os << "whole space, r=0\n";
  for (const auto& e : rep.sweep) {
    os << fmt::format("  theta={:<5} tail=[{:.9f}, {:.9f}] {} {}\n",
                      e.theta.ToString(), Display(e.tail_lo, log2),
                      Display(e.tail_hi, log2), unit,
                      e.exact ? "exact" : "bracketed");
  }
  for (const auto& c : rep.capacity) {
    os << fmt::format("  capacity N={:<3} {:.9f}\n", c.n, Display(c.value, log2));
  }
  os << fmt::format("family Z(k_max), theta={}: threshold {} (expected {})\n",
                    rep.family_theta.ToString(), rep.threshold.threshold,
                    rep.threshold.expected);
  std::int64_t last_k = -1;
  for (const auto& d : rep.decay) {
    if (d.k != last_k) {
      os << fmt::format("theta=0 Z_{}:", d.k);
      last_k = d.k;
    }
    if (d.n == 4 || d.n == 12 || d.n % 16 == 0) {
      os << fmt::format(" N={}:{:.4f}", d.n, Display(d.root.hi, log2));
    }
    const bool end = &d == &rep.decay.back() || (&d + 1)->k != d.k;
    if (end) os << "\n";
  }
  os << fmt::format(
      "summary: theta=1/2 value {:.9f}, sup_k root at N=12 (theta=0) {:.6f}, "
      "discontinuous at 0: {}\n",
      Display(rep.summary["whole_space_tail_at_half"].get<double>(), log2),
      Display(rep.summary["theta0_sup_root_at_N12"].get<double>(), log2),
      rep.summary["discontinuous_at_zero"].get<bool>() ? "yes" : "no");
  return os.str();
}

}  // namespace ite
