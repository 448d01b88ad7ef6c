// hecke: batch driver for the element checks, traces and class numbers.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or
// configuration error (including an unreadable cache), 3 internal error.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/class_numbers.hpp"
#include "hecke/elements.hpp"
#include "hecke/modular.hpp"
#include "hecke/serialize.hpp"
#include "hecke/trace.hpp"
#include "hecke/verifier.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hecke;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kChecks = {"A", "merel", "B", "coset", "class", "constructions",
                                          "fg-identities", "kh", "alpha-cosets", "alpha-total", "eisenstein"};

// Element cache in ringelt-v1, one file per determinant. Reads may happen
// from any thread; writes are serialized.
class ElementCache {
 public:
  explicit ElementCache(std::optional<fs::path> dir) : dir_(std::move(dir)) {
    if (dir_) fs::create_directories(*dir_);
  }

  RingElement wTn(long n) {
    {
      std::lock_guard lock(mutex_);
      auto it = memory_.find(n);
      if (it != memory_.end()) return it->second;
    }
    RingElement x;
    const auto path = file(n);
    if (path && fs::exists(*path)) {
      std::ifstream in(*path);
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        x = parse_ringelt(ss.str());
      } catch (const FormatError& e) {
        throw FormatError("corrupt cache file " + path->string() + ": " + e.what());
      }
      for (const auto& [m, q] : x.terms())
        if (m.det() != n) throw FormatError("corrupt cache file " + path->string() + ": wrong determinant");
    } else {
      x = elem::build_wTn(n);
      if (path) write(*path, dump_ringelt(x));
    }
    std::lock_guard lock(mutex_);
    memory_.emplace(n, x);
    return x;
  }

 private:
  std::optional<fs::path> file(long n) const {
    if (!dir_) return std::nullopt;
    return *dir_ / ("wTn_" + std::to_string(n) + ".json");
  }
  void write(const fs::path& path, const std::string& text) {
    std::lock_guard lock(mutex_);
    const fs::path tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << text << "\n";
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
  }

  std::optional<fs::path> dir_;
  std::mutex mutex_;
  std::map<long, RingElement> memory_;
};

std::optional<fs::path> cache_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("HECKE_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Runs tasks on `jobs` threads; results keep task order.
template <class R>
std::vector<R> parallel_map(std::size_t count, int jobs, const std::function<R(std::size_t)>& f) {
  std::vector<R> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  out << text;
  if (!out) throw UsageError("cannot write " + output);
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// --- verify -------------------------------------------------------------------------------

struct VerifyConfig {
  long n_min = 1, n_max = 10;
  std::string checks = "A,B,coset,class";
  std::string output, format = "json", cache;
  int jobs = 1;
  int weight = 10;
};

CheckReport run_check(const std::string& check, long n, ElementCache& cache, int w) {
  CheckReport r;
  if (check == "A") {
    r = verify::verify_A(cache.wTn(n), n);
  } else if (check == "merel") {
    r = verify::verify_A_merel(cache.wTn(n));
  } else if (check == "B") {
    r = verify::verify_B(cache.wTn(n));
  } else if (check == "coset") {
    r = verify::verify_coset_sums(cache.wTn(n), n);
  } else if (check == "class") {
    r = verify::verify_class_sums(cache.wTn(n), n);
  } else if (check == "constructions") {
    const RingElement a = elem::build_wTn(n), b = elem::build_wTn_alt(n);
    r = CheckReport{"constructions", "", n, a == b, nullptr, std::nullopt, std::nullopt, nullptr};
    r.details = {{"support", a.size()}};
    if (!r.pass) fail(r, {{"difference_terms", (a - b).size()}});
  } else if (check == "fg-identities") {
    r = verify::verify_fg_identities(n);
  } else if (check == "kh") {
    r = cn::kronecker_hurwitz_check(n);
  } else if (check == "alpha-cosets") {
    r = verify::verify_alpha_cosets(n);
  } else if (check == "alpha-total") {
    r = verify::verify_alpha_total(n);
  } else if (check == "eisenstein") {
    r = trace::eisenstein_eigen_check(n, w);
  }
  r.check = check;
  r.n = n;
  if (r.subject.empty()) r.subject = "wTn_" + std::to_string(n);
  return r;
}

int cmd_verify(const VerifyConfig& cfg) {
  const auto checks = split(cfg.checks);
  if (checks.empty()) throw UsageError("no checks selected");
  for (const auto& c : checks)
    if (std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end())
      throw UsageError("unknown check '" + c + "'");
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw UsageError("need 1 <= n-min <= n-max");
  if (cfg.jobs < 1) throw UsageError("jobs must be positive");
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError("format must be json or csv");
  if (cfg.weight <= 0 || cfg.weight % 2) throw UsageError("weight must be even and positive");

  ElementCache cache(cache_dir(cfg.cache));
  std::vector<std::pair<std::string, long>> tasks;
  for (const auto& c : checks)
    for (long n = cfg.n_min; n <= cfg.n_max; ++n) tasks.emplace_back(c, n);
  const auto reports = parallel_map<CheckReport>(tasks.size(), cfg.jobs, [&](std::size_t i) {
    return run_check(tasks[i].first, tasks[i].second, cache, cfg.weight);
  });

  bool all = true;
  std::ostringstream out;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json()), all = all && r.pass;
    out << arr.dump(2) << "\n";
  } else {
    out << "check,n,pass,witness\n";
    for (const auto& r : reports) {
      all = all && r.pass;
      out << r.check << "," << r.n << "," << (r.pass ? "true" : "false") << ","
          << csv_field(r.witness.is_null() ? "" : r.witness.dump()) << "\n";
    }
  }
  emit(out.str(), cfg.output);
  return all ? 0 : 1;
}

// --- trace --------------------------------------------------------------------------------

struct TraceConfig {
  std::vector<int> weights, ks;
  long n = 0, n_max = 5;
  std::string side = "both", format = "json", output, cache;
};

int cmd_trace(const TraceConfig& cfg) {
  if (!cfg.weights.empty() && !cfg.ks.empty()) throw UsageError("give either --weight or --k");
  std::vector<int> ws = cfg.weights;
  for (int k : cfg.ks) ws.push_back(k - 2);
  if (ws.empty()) ws.push_back(10);
  for (int w : ws)
    if (w <= 0 || w % 2) throw UsageError("weights must be even and positive (k even, k >= 4)");
  if (cfg.side != "lhs" && cfg.side != "rhs" && cfg.side != "both") throw UsageError("side must be lhs, rhs or both");
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError("format must be json or csv");
  const long lo = cfg.n > 0 ? cfg.n : 1, hi = cfg.n > 0 ? cfg.n : cfg.n_max;
  if (hi < lo || lo < 1) throw UsageError("n must be positive");

  ElementCache cache(cache_dir(cfg.cache));
  const bool lhs = cfg.side != "rhs", rhs = cfg.side != "lhs";
  bool all = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "k,w,n,oracle,rhs,Vw,Ww,agree\n";
  for (int w : ws)
    for (long n = lo; n <= hi; ++n) {
      json row{{"k", w + 2}, {"w", w}, {"n", n}};
      std::vector<Rational> values;
      std::string o_s, r_s, v_s, ww_s;
      if (rhs) {
        const auto o = modular::trace_oracle(w + 2, n);
        const Rational f = trace::trace_formula_rhs(w, n);
        row["oracle_trM"] = int_to_json(o.trM);
        row["oracle_trS"] = int_to_json(o.trS);
        row["oracle"] = int_to_json(o.trM + o.trS);
        row["rhs"] = rational_to_json(f);
        values.push_back(Rational(o.trM + o.trS));
        values.push_back(f);
        o_s = Int(o.trM + o.trS).get_str();
        r_s = f.get_str();
      }
      if (lhs) {
        const RingElement t = cache.wTn(n);
        const Rational v = trace::trace_on_Vw(t, w), u = trace::trace_on_Ww(t, w);
        row["Vw"] = rational_to_json(v);
        row["Ww"] = rational_to_json(u);
        values.push_back(v);
        values.push_back(u);
        v_s = v.get_str();
        ww_s = u.get_str();
      }
      bool agree = true;
      for (const auto& x : values) agree = agree && x == values.front();
      row["agree"] = agree;
      all = all && agree;
      rows.push_back(row);
      csv << w + 2 << "," << w << "," << n << "," << o_s << "," << r_s << "," << v_s << "," << ww_s << ","
          << (agree ? "true" : "false") << "\n";
    }
  emit(cfg.format == "json" ? rows.dump(2) + "\n" : csv.str(), cfg.output);
  return all ? 0 : 1;
}

// --- small commands --------------------------------------------------------------------------

int cmd_class_number(const std::vector<long>& Ds, const std::string& output) {
  if (Ds.empty()) throw UsageError("give at least one --D");
  json arr = json::array();
  for (long D : Ds) {
    const auto h = cn::hurwitz_value(Int(D));
    json forms = json::array();
    for (const auto& f : h.witness_forms)
      forms.push_back({int_to_json(f.A), int_to_json(f.B), int_to_json(f.C)});
    arr.push_back({{"D", D}, {"H", rational_to_json(h.value)}, {"forms", forms}});
  }
  emit(arr.dump(2) + "\n", output);
  return 0;
}

int cmd_oracle(int k, long n, const std::string& output) {
  if (k < 0 || k % 2) throw UsageError("k must be even and non-negative");
  if (n < 1) throw UsageError("n must be positive");
  const auto t = modular::trace_oracle(k, n);
  emit(json{{"k", k}, {"n", n}, {"trS", int_to_json(t.trS)}, {"trM", int_to_json(t.trM)}}.dump(2) + "\n",
       output);
  return 0;
}

int cmd_build(const std::string& what, long n, const std::string& output, const std::string& cache_flag) {
  if (n < 1) throw UsageError("n must be positive");
  RingElement x;
  if (what == "wT") {
    ElementCache cache(cache_dir(cache_flag));
    x = cache.wTn(n);
  } else if (what == "wT-alt") {
    x = elem::build_wTn_alt(n);
  } else if (what == "F") {
    x = elem::build_F(n);
  } else if (what == "G") {
    x = elem::build_G(n);
  } else if (what == "corner") {
    x = elem::corner_term(n);
  } else if (what == "alpha") {
    x = elem::alpha_element(n);
  } else if (what == "Tinf") {
    x = elem::T_infinity(n);
  } else if (what == "intro1") {
    x = elem::intro_wT1();
  } else if (what == "intro2") {
    x = elem::intro_wT2();
  } else {
    try {
      x = elem::enumerate_term(what, n);
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown element '" + what + "'");
    }
  }
  emit(dump_ringelt(x) + "\n", output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke elements in Q[M_n]: checks, traces and class numbers"};
  app.require_subcommand(1);

  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "run checks for a range of determinants");
  verify->add_option("--n-min", vc.n_min, "first determinant");
  verify->add_option("--n-max", vc.n_max, "last determinant");
  verify->add_option("--checks", vc.checks, "comma separated: A,merel,B,coset,class,constructions,fg-identities,kh,alpha-cosets,alpha-total,eisenstein");
  verify->add_option("--weight", vc.weight, "w for the eisenstein check");
  verify->add_option("-o,--output", vc.output, "report file (default stdout)");
  verify->add_option("--format", vc.format, "json or csv");
  verify->add_option("--cache-dir", vc.cache, "element cache (default $HECKE_CACHE_DIR)");
  verify->add_option("-j,--jobs", vc.jobs, "worker threads");

  TraceConfig tc;
  auto* tr = app.add_subcommand("trace", "both sides of the trace formula");
  tr->add_option("--weight", tc.weights, "w = k - 2 (even), repeatable or comma separated")->delimiter(',');
  tr->add_option("--k", tc.ks, "weight k of the modular forms")->delimiter(',');
  tr->add_option("--n", tc.n, "single n");
  tr->add_option("--n-max", tc.n_max, "all n up to this");
  tr->add_option("--side", tc.side, "lhs, rhs or both");
  tr->add_option("--format", tc.format, "json or csv");
  tr->add_option("-o,--output", tc.output, "output file");
  tr->add_option("--cache-dir", tc.cache, "element cache");

  std::vector<long> Ds;
  std::string cn_out;
  auto* cnum = app.add_subcommand("class-number", "Hurwitz class numbers H(D)");
  cnum->add_option("--D", Ds, "discriminant value(s)")->delimiter(',')->required();
  cnum->add_option("-o,--output", cn_out, "output file");

  int ok = 12;
  long on = 2;
  std::string o_out;
  auto* orc = app.add_subcommand("oracle", "traces of T_n on S_k and M_k from q-expansions");
  orc->add_option("--k", ok, "weight");
  orc->add_option("--n", on, "index of the Hecke operator");
  orc->add_option("-o,--output", o_out, "output file");

  std::string b_what = "wT", b_out, b_cache;
  long b_n = 1;
  auto* build = app.add_subcommand("build", "print an element in ringelt-v1");
  build->add_option("--element", b_what,
                    "wT, wT-alt, F, G, corner, alpha, Tinf, intro1, intro2 or a descriptor name");
  build->add_option("--n", b_n, "determinant");
  build->add_option("-o,--output", b_out, "output file");
  build->add_option("--cache-dir", b_cache, "element cache");

  std::string d_out;
  auto* dump = app.add_subcommand("dump-descriptors", "the inequality-sum descriptors as JSON");
  dump->add_option("-o,--output", d_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(vc);
    if (*tr) return cmd_trace(tc);
    if (*cnum) return cmd_class_number(Ds, cn_out);
    if (*orc) return cmd_oracle(ok, on, o_out);
    if (*build) return cmd_build(b_what, b_n, b_out, b_cache);
    if (*dump) {
      emit(elem::dump_descriptors().dump(2) + "\n", d_out);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "hecke: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "hecke: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hecke: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "hecke: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hecke: internal error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
