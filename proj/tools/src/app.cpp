#include "lensfill/cli/app.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lensfill/cfrac.hpp"
#include "lensfill/cli/report.hpp"
#include "lensfill/cli/verify.hpp"
#include "lensfill/errors.hpp"
#include "lensfill/fillings.hpp"
#include "lensfill/homology.hpp"
#include "lensfill/lattice.hpp"

namespace lensfill::cli {

using nlohmann::ordered_json;

std::size_t thread_budget() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LENS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = static_cast<std::size_t>(v);
  }
  return n;
}

std::vector<std::string> ordered_parallel_map(std::size_t n, const std::function<std::string(std::size_t)>& f) {
  std::vector<std::string> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(thread_budget(), std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

enum class Format { Text, Json, Csv };

Integer parse_integer(const std::string& s, const char* what) {
  Integer x;
  if (s.empty() || x.set_str(s, 10) != 0) throw InputError(Errc::InvalidInput, std::string(what) + " must be an integer, got '" + s + "'");
  return x;
}

std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

std::string tuple_csv(const CFTuple& t) { return "\"" + format_tuple(t) + "\""; }

std::string cmd_expand(const Integer& p, const Integer& q, Format fmt) {
  const LensParams lp = make_params(p, q);
  const CFTuple a = hj_expand(p, q);
  switch (fmt) {
    case Format::Json:
      return dump(ordered_json{{"p", integer_to_json(p)}, {"q", integer_to_json(q)}, {"a", a}, {"b", lp.b}, {"qbar", integer_to_json(lp.qbar)}});
    case Format::Csv:
      return "p,q,a,b,qbar\n" + p.get_str() + "," + q.get_str() + "," + tuple_csv(a) + "," + tuple_csv(lp.b) + "," + lp.qbar.get_str() + "\n";
    case Format::Text:
      break;
  }
  return "p/q     = " + format_tuple(a) + "\np/(p-q) = " + format_tuple(lp.b) + "\nqbar    = " + lp.qbar.get_str() + "\n";
}

std::string cmd_zeroseq(long k, Format fmt) {
  if (k < 1) throw InputError(Errc::InvalidInput, "length must be >= 1");
  const std::set<CFTuple> z = enumerate_zero_cf(static_cast<std::size_t>(k));
  std::ostringstream os;
  switch (fmt) {
    case Format::Json: {
      ordered_json j{{"k", k}, {"count", z.size()}, {"tuples", ordered_json::array()}};
      for (const CFTuple& t : z) j["tuples"].push_back(t);
      return dump(j);
    }
    case Format::Csv:
      os << "k,n\n";
      for (const CFTuple& t : z) os << k << "," << tuple_csv(t) << "\n";
      return os.str();
    case Format::Text:
      os << "k=" << k << " count=" << z.size() << "\n";
      for (const CFTuple& t : z) os << format_tuple(t) << "\n";
      return os.str();
  }
  return {};
}

std::string cmd_fillings(const Integer& p, const Integer& q, Format fmt) {
  const Report r = make_report(p, q);
  switch (fmt) {
    case Format::Json:
      return dump(to_json(r));
    case Format::Csv:
      return csv_header() + render_csv_rows(r);
    case Format::Text:
      break;
  }
  return render_text(r);
}

std::string cmd_classify(const Integer& p, const Integer& q, Format fmt) {
  const std::vector<FillingClass> classes = classify(make_params(p, q));
  std::ostringstream os;
  switch (fmt) {
    case Format::Json: {
      ordered_json j{{"p", integer_to_json(p)}, {"q", integer_to_json(q)}, {"classes", ordered_json::array()}};
      for (const FillingClass& c : classes) {
        ordered_json members = ordered_json::array();
        for (const FillingDescriptor& d : c.representatives) members.push_back(d.n);
        j["classes"].push_back(members);
      }
      return dump(j);
    }
    case Format::Csv:
      os << "p,q,class,n\n";
      for (std::size_t i = 0; i < classes.size(); ++i)
        for (const FillingDescriptor& d : classes[i].representatives) os << p << "," << q << "," << i << "," << tuple_csv(d.n) << "\n";
      return os.str();
    case Format::Text:
      for (std::size_t i = 0; i < classes.size(); ++i) {
        os << "class " << i << ":";
        for (const FillingDescriptor& d : classes[i].representatives) os << " " << format_tuple(d.n);
        os << "\n";
      }
      return os.str();
  }
  return {};
}

std::string cmd_gamma(const Integer& p, const Integer& q, Format fmt) {
  const LensParams lp = make_params(p, q);
  std::ostringstream os;
  ordered_json spins = ordered_json::array();
  if (fmt == Format::Csv) os << "p,q,s,gamma_filling,gamma_standard\n";
  for (const SpinStructure& s : spin_structures(lp.b)) {
    const Integer f = gamma_filling(lp.b, s).residue();
    const Integer g = gamma_standard(lp.b, s).residue();
    const CFTuple bits(s.bits.begin(), s.bits.end());
    if (fmt == Format::Json) {
      spins.push_back(ordered_json{{"s", s.bits}, {"gamma_filling", integer_to_json(f)}, {"gamma_standard", integer_to_json(g)}});
    } else if (fmt == Format::Csv) {
      os << p << "," << q << "," << tuple_csv(bits) << "," << f << "," << g << "\n";
    } else {
      os << "s=" << format_tuple(bits) << "  gamma_filling=" << f << "  gamma_standard=" << g << (f == g ? "" : "  MISMATCH") << "\n";
    }
  }
  if (fmt == Format::Json) return dump(ordered_json{{"p", integer_to_json(p)}, {"q", integer_to_json(q)}, {"b", lp.b}, {"spin", spins}});
  return os.str();
}

std::string cmd_rot(const std::vector<long>& entries, Format fmt) {
  const CFTuple n(entries.begin(), entries.end());
  const std::vector<Integer> r = rotation_numbers(n);
  ordered_json rj = ordered_json::array();
  std::string list;
  for (std::size_t i = 0; i < r.size(); ++i) {
    rj.push_back(integer_to_json(r[i]));
    list += (i ? "," : "") + r[i].get_str();
  }
  switch (fmt) {
    case Format::Json:
      return dump(ordered_json{{"n", n}, {"rot", rj}});
    case Format::Csv:
      return "n,rot\n" + tuple_csv(n) + ",\"(" + list + ")\"\n";
    case Format::Text:
      break;
  }
  return "rot=(" + list + ")\n";
}

struct LatticeRow {
  CFTuple n;
  std::size_t M = 0;
  bool hom_classes = false;
  bool string_lemma = false;
  ComplementHomology homology;
  std::vector<std::int64_t> s;
  std::size_t orthogonal = 0;
};

std::string cmd_lattice_check(const Integer& p, const Integer& q, Format fmt, bool& ok) {
  const LensParams lp = make_params(p, q);
  std::vector<LatticeRow> rows;
  for (const CFTuple& n : zset(lp)) {
    const StringConfiguration cfg = build_string(lp.b, n);
    LatticeRow row{n, cfg.M, validate_hom_classes(cfg), false, {}, {}, 0};
    row.string_lemma = row.hom_classes && validate_string_lemma(cfg);
    if (row.string_lemma) {
      row.homology = complement_homology(cfg);
      row.s = minimal_si_counts(cfg);
      row.orthogonal = orthogonal_minus_one_classes(cfg).size();
    }
    ok = ok && row.string_lemma && row.orthogonal == 0;
    rows.push_back(std::move(row));
  }
  std::ostringstream os;
  auto divisors = [](const std::vector<Integer>& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + d[i].get_str();
    return s + "]";
  };
  switch (fmt) {
    case Format::Json: {
      ordered_json j{{"p", integer_to_json(p)}, {"q", integer_to_json(q)}, {"configs", ordered_json::array()}};
      for (const LatticeRow& r : rows) {
        ordered_json h1 = ordered_json::array();
        for (const Integer& d : r.homology.h1_divisors) h1.push_back(integer_to_json(d));
        j["configs"].push_back(ordered_json{{"n", r.n},
                                            {"M", r.M},
                                            {"hom_classes", r.hom_classes},
                                            {"string_lemma", r.string_lemma},
                                            {"b2", r.homology.b2},
                                            {"h1_divisors", h1},
                                            {"s", r.s},
                                            {"orthogonal_minus_one", r.orthogonal}});
      }
      return dump(j);
    }
    case Format::Csv:
      os << "p,q,n,M,hom_classes,string_lemma,b2,h1_divisors,s,orthogonal_minus_one\n";
      for (const LatticeRow& r : rows) {
        os << p << "," << q << "," << tuple_csv(r.n) << "," << r.M << "," << r.hom_classes << "," << r.string_lemma << "," << r.homology.b2
           << ",\"" << divisors(r.homology.h1_divisors) << "\"," << tuple_csv(CFTuple(r.s.begin(), r.s.end())) << "," << r.orthogonal << "\n";
      }
      return os.str();
    case Format::Text:
      for (const LatticeRow& r : rows) {
        os << "n=" << format_tuple(r.n) << "  M=" << r.M << "  hom_classes=" << (r.hom_classes ? "ok" : "FAIL")
           << "  string_lemma=" << (r.string_lemma ? "ok" : "FAIL") << "  b2=" << r.homology.b2 << "  h1=" << divisors(r.homology.h1_divisors)
           << "  s=" << format_tuple(CFTuple(r.s.begin(), r.s.end())) << "  orthogonal(-1)=" << r.orthogonal << "\n";
      }
      return os.str();
  }
  return {};
}

struct SweepFilter {
  bool rational_ball = false;
  bool unique = false;
  long min_fillings = 0;
};

std::string cmd_sweep(long pmax, const SweepFilter& filter, Format fmt) {
  if (pmax < 2) throw InputError(Errc::InvalidInput, "sweep needs p_max >= 2");
  if (filter.min_fillings < 0) throw InputError(Errc::InvalidInput, "--min-fillings must be >= 0");
  std::vector<std::pair<long, long>> pairs;
  for (long p = 2; p <= pmax; ++p)
    for (long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);

  const std::vector<std::string> chunks = ordered_parallel_map(pairs.size(), [&](std::size_t i) -> std::string {
    const auto [p, q] = pairs[i];
    const Report r = make_report(p, q);
    if (filter.rational_ball && !r.flags.rational_ball) return {};
    if (filter.unique && !r.flags.unique) return {};
    if (static_cast<long>(r.z_set.size()) < filter.min_fillings) return {};
    switch (fmt) {
      case Format::Json:
        return dump(to_json(r));
      case Format::Csv:
        return render_csv_rows(r);
      case Format::Text:
        break;
    }
    std::ostringstream os;
    os << p << " " << q << "  b=" << format_tuple(r.b) << "  fillings=" << r.z_set.size() << "  classes=" << r.classes.size()
       << (r.flags.rational_ball ? "  rational-ball" : "") << (r.flags.unique ? "  unique" : "") << "\n";
    return os.str();
  });
  std::string out = fmt == Format::Csv ? csv_header() : std::string();
  for (const std::string& c : chunks) out += c;
  return out;
}

std::string cmd_verify(const std::string& suite, std::optional<long> pmax, Format fmt, bool& ok) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  std::vector<SuiteResult> results;
  for (const std::string& name : names) results.push_back(run_suite(name, pmax));
  std::ostringstream os;
  ordered_json arr = ordered_json::array();
  if (fmt == Format::Csv) os << "suite,pass,checks,scope,counterexample\n";
  for (const SuiteResult& r : results) {
    const bool pass = !r.counterexample;
    ok = ok && pass;
    if (fmt == Format::Json) {
      arr.push_back(ordered_json{{"suite", r.name},
                                 {"pass", pass},
                                 {"checks", r.checks},
                                 {"scope", r.scope},
                                 {"counterexample", pass ? ordered_json(nullptr) : ordered_json(*r.counterexample)}});
    } else if (fmt == Format::Csv) {
      os << r.name << "," << (pass ? 1 : 0) << "," << r.checks << ",\"" << r.scope << "\",\"" << r.counterexample.value_or("") << "\"\n";
    } else {
      os << r.name << ": " << (pass ? "PASS" : "FAIL") << "  " << r.checks << " checks  (" << r.scope << ")\n";
      if (!pass) os << "  first counterexample: " << *r.counterexample << "\n";
    }
  }
  if (fmt == Format::Json) return dump(suite == "all" ? arr : arr[0]);
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal symplectic fillings of lens spaces: continued fractions, classification, invariants."};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  bool csv = false;
  std::string out_file;
  app.add_flag("--json", json, "JSON output (JSON Lines for sweep)");
  app.add_flag("--csv", csv, "CSV output");
  app.add_option("--out", out_file, "Write output to FILE instead of stdout");

  std::string p_str;
  std::string q_str;
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("p", p_str, "p > q >= 1")->required();
    sub->add_option("q", q_str, "q, coprime to p")->required();
  };
  CLI::App* expand = app.add_subcommand("expand", "Continued fraction expansions of p/q and p/(p-q)");
  add_pair(expand);
  CLI::App* fillings = app.add_subcommand("fillings", "Full report: Z(p,q), classes, invariants, spin structures");
  add_pair(fillings);
  CLI::App* classify_cmd = app.add_subcommand("classify", "Minimal fillings grouped up to diffeomorphism");
  add_pair(classify_cmd);
  CLI::App* gamma = app.add_subcommand("gamma", "Gamma invariants of every spin structure, both formulas");
  add_pair(gamma);
  CLI::App* lattice = app.add_subcommand("lattice-check", "Lattice replay and validation for every minimal filling");
  add_pair(lattice);

  long k = 0;
  CLI::App* zeroseq = app.add_subcommand("zeroseq", "All zero continued fractions of length k");
  zeroseq->add_option("k", k, "length >= 1")->required();

  std::vector<long> n_entries;
  CLI::App* rot = app.add_subcommand("rot", "Rotation numbers for a zero continued fraction");
  rot->add_option("n", n_entries, "entries n_1 ... n_k")->required();

  std::optional<long> pmax_pos;
  std::optional<long> pmax_opt;
  SweepFilter filter;
  CLI::App* sweep = app.add_subcommand("sweep", "Reports for every coprime pair with p <= p_max, ordered by (p,q)");
  sweep->add_option("p_max", pmax_pos, "upper bound for p");
  sweep->add_option("--pmax", pmax_opt, "upper bound for p");
  sweep->add_flag("--rational-ball", filter.rational_ball, "only pairs (m^2, mh-1)");
  sweep->add_flag("--unique", filter.unique, "only pairs whose p/q entries are all >= 5");
  sweep->add_option("--min-fillings", filter.min_fillings, "only pairs with at least N minimal fillings");

  std::string suite;
  std::optional<long> verify_pmax;
  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "catalan, duality, gamma, rotation, lattice, mcduff, corollary-a, corollary-c, uniqueness, all")
      ->required();
  verify->add_option("--pmax", verify_pmax, "override the suite's range of p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (json && csv) {
    err << "error: --json and --csv are exclusive\n";
    return 1;
  }
  const Format fmt = json ? Format::Json : csv ? Format::Csv : Format::Text;

  int status = 0;
  std::string text;
  try {
    bool ok = true;
    if (expand->parsed()) {
      text = cmd_expand(parse_integer(p_str, "p"), parse_integer(q_str, "q"), fmt);
    } else if (fillings->parsed()) {
      text = cmd_fillings(parse_integer(p_str, "p"), parse_integer(q_str, "q"), fmt);
    } else if (classify_cmd->parsed()) {
      text = cmd_classify(parse_integer(p_str, "p"), parse_integer(q_str, "q"), fmt);
    } else if (gamma->parsed()) {
      text = cmd_gamma(parse_integer(p_str, "p"), parse_integer(q_str, "q"), fmt);
    } else if (lattice->parsed()) {
      text = cmd_lattice_check(parse_integer(p_str, "p"), parse_integer(q_str, "q"), fmt, ok);
    } else if (zeroseq->parsed()) {
      text = cmd_zeroseq(k, fmt);
    } else if (rot->parsed()) {
      text = cmd_rot(n_entries, fmt);
    } else if (sweep->parsed()) {
      if (pmax_pos && pmax_opt && *pmax_pos != *pmax_opt) throw InputError(Errc::InvalidInput, "conflicting p_max values");
      const std::optional<long> pmax = pmax_pos ? pmax_pos : pmax_opt;
      if (!pmax) throw InputError(Errc::InvalidInput, "sweep needs p_max");
      text = cmd_sweep(*pmax, filter, fmt);
    } else if (verify->parsed()) {
      if (verify_pmax && *verify_pmax < 2) throw InputError(Errc::InvalidInput, "--pmax must be >= 2");
      text = cmd_verify(suite, verify_pmax, fmt, ok);
    }
    if (!ok) status = 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const AssertionFailure& e) {
    err << "assertion failed: " << e.what() << "\n";
    return 2;
  }

  if (out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << out_file << "\n";
      return 1;
    }
    f << text;
  }
  return status;
}

}  // namespace lensfill::cli
