#include "lensfill/cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "lensfill/cfrac.hpp"
#include "lensfill/errors.hpp"
#include "lensfill/fillings.hpp"
#include "lensfill/homology.hpp"

namespace lensfill::cli {

using nlohmann::ordered_json;

Report make_report(const Integer& p, const Integer& q) {
  const LensParams params = make_params(p, q);
  Report r;
  r.p = p;
  r.q = q;
  r.b = params.b;
  r.a = dual_expansion(params.b);
  r.qbar = params.qbar;
  r.mu_k = mu_basis(params.b, p).coeffs.back();
  r.z_set = zset(params);

  for (const FillingClass& cls : classify(params)) {
    std::vector<std::size_t> idx;
    for (const FillingDescriptor& d : cls.representatives) {
      const auto it = std::lower_bound(r.z_set.begin(), r.z_set.end(), d.n);
      idx.push_back(static_cast<std::size_t>(it - r.z_set.begin()));
    }
    r.classes.push_back(std::move(idx));
  }
  for (const CFTuple& n : r.z_set) {
    const FillingDescriptor d = invariants(params, n);
    r.fillings.push_back(FillingEntry{n, d.chi, d.b2, d.handle_counts, rotation_numbers(n)});
  }
  for (const SpinStructure& s : spin_structures(params.b)) {
    r.spin.push_back(SpinEntry{s.bits, gamma_filling(params.b, s).residue(), gamma_standard(params.b, s).residue()});
  }
  if (auto w = rational_ball_criterion(p, q)) {
    r.flags.rational_ball = true;
    r.flags.ball_m = w->m;
    r.flags.ball_h = w->h;
  }
  r.flags.unique = uniqueness_predicate(p, q);
  r.flags.involution = mod_floor(q * q, p) == 1;
  return r;
}

ordered_json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return ordered_json(static_cast<std::int64_t>(x.get_si()));
  return ordered_json(x.get_str());
}

Integer integer_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InputError(Errc::InvalidInput, "bad integer string");
    return x;
  }
  throw InputError(Errc::InvalidInput, "expected an integer");
}

namespace {

ordered_json tuple_json(const CFTuple& t) { return ordered_json(t); }

ordered_json integers_json(const std::vector<Integer>& xs) {
  ordered_json out = ordered_json::array();
  for (const Integer& x : xs) out.push_back(integer_to_json(x));
  return out;
}

std::vector<Integer> integers_from(const ordered_json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

std::string tuple_str(const std::vector<Integer>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
  return s + ")";
}

std::string bits_str(const std::vector<int>& bits) {
  std::string s = "(";
  for (std::size_t i = 0; i < bits.size(); ++i) s += (i ? "," : "") + std::to_string(bits[i]);
  return s + ")";
}

}  // namespace

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["p"] = integer_to_json(r.p);
  j["q"] = integer_to_json(r.q);
  j["b"] = tuple_json(r.b);
  j["a"] = tuple_json(r.a);
  j["qbar"] = integer_to_json(r.qbar);
  j["mu_k"] = integer_to_json(r.mu_k);
  j["blowups"] = r.blowups;
  j["z_set"] = ordered_json::array();
  for (const CFTuple& n : r.z_set) j["z_set"].push_back(tuple_json(n));
  j["classes"] = r.classes;
  j["fillings"] = ordered_json::array();
  for (const FillingEntry& f : r.fillings) {
    j["fillings"].push_back(ordered_json{{"n", tuple_json(f.n)},
                                         {"chi", f.chi},
                                         {"b2", f.b2},
                                         {"handles", tuple_json(f.handles)},
                                         {"rot", integers_json(f.rot)}});
  }
  j["spin"] = ordered_json::array();
  for (const SpinEntry& s : r.spin) {
    j["spin"].push_back(ordered_json{{"s", s.s},
                                     {"gamma_filling", integer_to_json(s.gamma_filling)},
                                     {"gamma_standard", integer_to_json(s.gamma_standard)}});
  }
  ordered_json flags{{"rational_ball", r.flags.rational_ball}};
  flags["rational_ball_witness"] =
      r.flags.ball_m ? ordered_json{{"m", integer_to_json(*r.flags.ball_m)}, {"h", integer_to_json(*r.flags.ball_h)}} : ordered_json(nullptr);
  flags["unique"] = r.flags.unique;
  flags["involution"] = r.flags.involution;
  j["flags"] = flags;
  return j;
}

Report report_from_json(const ordered_json& j) {
  Report r;
  r.p = integer_from_json(j.at("p"));
  r.q = integer_from_json(j.at("q"));
  r.b = j.at("b").get<CFTuple>();
  r.a = j.at("a").get<CFTuple>();
  r.qbar = integer_from_json(j.at("qbar"));
  r.mu_k = integer_from_json(j.at("mu_k"));
  r.blowups = j.at("blowups").get<std::int64_t>();
  r.z_set = j.at("z_set").get<std::vector<CFTuple>>();
  r.classes = j.at("classes").get<std::vector<std::vector<std::size_t>>>();
  for (const auto& f : j.at("fillings")) {
    r.fillings.push_back(FillingEntry{f.at("n").get<CFTuple>(), f.at("chi").get<std::int64_t>(), f.at("b2").get<std::int64_t>(),
                                      f.at("handles").get<CFTuple>(), integers_from(f.at("rot"))});
  }
  for (const auto& s : j.at("spin")) {
    r.spin.push_back(SpinEntry{s.at("s").get<std::vector<int>>(), integer_from_json(s.at("gamma_filling")),
                               integer_from_json(s.at("gamma_standard"))});
  }
  const auto& flags = j.at("flags");
  r.flags.rational_ball = flags.at("rational_ball").get<bool>();
  const auto& w = flags.at("rational_ball_witness");
  if (!w.is_null()) {
    r.flags.ball_m = integer_from_json(w.at("m"));
    r.flags.ball_h = integer_from_json(w.at("h"));
  }
  r.flags.unique = flags.at("unique").get<bool>();
  r.flags.involution = flags.at("involution").get<bool>();
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "L(" << r.p << "," << r.q << ")  b=" << format_tuple(r.b) << "  a=" << format_tuple(r.a) << "  qbar=" << r.qbar
     << "  mu_k=" << r.mu_k << "\n";
  os << "minimal fillings: " << r.z_set.size() << " in " << r.classes.size() << " class" << (r.classes.size() == 1 ? "" : "es") << "\n";

  std::size_t width = 1;
  for (const CFTuple& n : r.z_set) width = std::max(width, format_tuple(n).size());
  os << "  " << std::left << std::setw(6) << "class" << std::setw(static_cast<int>(width) + 2) << "n" << std::setw(6) << "chi"
     << std::setw(5) << "b2" << std::setw(static_cast<int>(width) + 2) << "handles"
     << "rot\n";
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    for (std::size_t idx : r.classes[c]) {
      const FillingEntry& f = r.fillings[idx];
      os << "  " << std::setw(6) << c << std::setw(static_cast<int>(width) + 2) << format_tuple(f.n) << std::setw(6) << f.chi
         << std::setw(5) << f.b2 << std::setw(static_cast<int>(width) + 2) << format_tuple(f.handles) << tuple_str(f.rot) << "\n";
    }
  }
  os << "spin structures: " << r.spin.size() << "\n";
  for (const SpinEntry& s : r.spin) {
    os << "  s=" << bits_str(s.s) << "  gamma_filling=" << s.gamma_filling << "  gamma_standard=" << s.gamma_standard << "\n";
  }
  os << "flags: rational_ball=" << (r.flags.rational_ball ? "yes" : "no");
  if (r.flags.ball_m) os << " (m=" << *r.flags.ball_m << ",h=" << *r.flags.ball_h << ")";
  os << "  unique=" << (r.flags.unique ? "yes" : "no") << "  involution=" << (r.flags.involution ? "yes" : "no") << "\n";
  return os.str();
}

std::string csv_header() { return "p,q,class,n,chi,b2,handles,rot,rational_ball,unique\n"; }

std::string render_csv_rows(const Report& r) {
  std::vector<std::size_t> class_of(r.z_set.size(), 0);
  for (std::size_t c = 0; c < r.classes.size(); ++c)
    for (std::size_t idx : r.classes[c]) class_of[idx] = c;
  std::ostringstream os;
  for (std::size_t i = 0; i < r.fillings.size(); ++i) {
    const FillingEntry& f = r.fillings[i];
    os << r.p << "," << r.q << "," << class_of[i] << ",\"" << format_tuple(f.n) << "\"," << f.chi << "," << f.b2 << ",\""
       << format_tuple(f.handles) << "\",\"" << tuple_str(f.rot) << "\"," << (r.flags.rational_ball ? 1 : 0) << ","
       << (r.flags.unique ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace lensfill::cli
