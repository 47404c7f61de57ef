#include "ultralat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ultralat/classical.hpp"
#include "ultralat/ctypes.hpp"
#include "ultralat/error.hpp"
#include "ultralat/forms.hpp"
#include "ultralat/genball.hpp"
#include "ultralat/group_table.hpp"
#include "ultralat/lengths.hpp"
#include "ultralat/obstruction.hpp"

namespace ultralat {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
  std::uint64_t cap = 1000000;
  std::optional<std::size_t> max_k;
  std::size_t samples = 500;
  std::string epsilon = "1/8";

  // Command arguments.
  std::string descriptor;
  std::string level = "group";
  std::uint64_t q = 0;
  std::uint32_t a = 0, b = 0;
  std::size_t kmax = 0;
  std::size_t dim = 0;
  std::optional<std::size_t> class1, class2;
  bool symmetric = false;
  std::string sigma, tau;
  std::vector<std::string> train{"SL(2,5)", "SL(2,7)", "SL(3,2)", "Sp(4,3)", "SU(4,2)"};
  std::vector<std::string> alt{"A(5)", "A(6)", "A(7)"};
  std::vector<std::string> heldout{"SL(3,3)", "A(8)"};
  std::string r, s, ideal;
};

Json rational_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

Json header(const std::string& command) { return Json{{"schema", 1}, {"command", command}}; }

std::uint64_t require_seed(const Options& o) {
  if (!o.seed) throw UsageError("this command samples and needs --seed");
  return *o.seed;
}

Level parse_level(const std::string& s) {
  if (s == "group") return Level::Group;
  if (s == "special") return Level::Special;
  if (s == "full") return Level::Full;
  throw UsageError("--level must be group, special, or full");
}

Rational epsilon_of(const Options& o) {
  const Rational e = parse_rational(o.epsilon);
  require(e > 0 && e < 1, "--epsilon must lie strictly between 0 and 1");
  return e;
}

std::string element_text(const GroupTable& t, std::size_t i) {
  return t.is_perm() ? t.perm(i).to_cycles() : to_text(t.matrix(i));
}

std::string csv_rational(const Rational& r) { return to_string(r); }

struct Result {
  std::string text;
  int code = kExitOk;
};

Result json_result(const Json& j, int code = kExitOk) { return {j.dump(2) + "\n", code}; }

void require_json_or_csv(const Options& o, bool csv_ok) {
  if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
  if (o.format == "csv" && !csv_ok) throw UsageError("this command only emits json");
}

Result cmd_field_info(const Options& o) {
  require_json_or_csv(o, false);
  std::uint32_t p = 0, k = 0;
  require(prime_power(o.q, p, k), "q must be a prime power");
  const auto field = Field::get(p, k);
  const Field& f = *field;
  Json j = header("field-info");
  j["q"] = f.q();
  j["p"] = f.p();
  j["k"] = f.k();
  j["modulus"] = f.modulus();
  j["modulus_text"] = f.modulus_string();
  j["primitive"] = f.format(f.primitive());
  if (f.p() != 2) {
    Json squares = Json::array();
    for (const Elem x : f.nonzero())
      if (f.is_square(x)) squares.push_back(f.format(x));
    j["squares"] = squares;
  }
  return json_result(j);
}

Result cmd_group(const Options& o) {
  require_json_or_csv(o, false);
  const auto d = GroupDescriptor::parse(o.descriptor);
  const Level level = parse_level(o.level);
  const auto t = GroupTable::enumerate(d, o.cap, level);
  Json j = header("group");
  j["descriptor"] = d.to_string();
  j["level"] = to_string(level);
  j["order"] = t.size();
  j["class_count"] = t.class_count();
  Json classes = Json::array();
  for (std::size_t c = 0; c < t.class_count(); ++c)
    classes.push_back(Json{{"id", c}, {"size", t.class_size(c)}, {"rep", element_text(t, t.class_rep(c))}});
  j["classes"] = classes;
  return json_result(j);
}

Result cmd_covering(const Options& o) {
  require_json_or_csv(o, true);
  const auto d = GroupDescriptor::parse(o.descriptor);
  const auto t = GroupTable::enumerate(d, o.cap);
  const auto rows = covering_rows(t);
  require(!rows.empty(), d.to_string() + ": no non-central elements");
  Rational c_hat(0);
  bool within = true;
  for (const auto& r : rows) {
    c_hat = std::max(c_hat, r.length * Rational(static_cast<std::int64_t>(r.k)));
    if (o.max_k && r.k > *o.max_k) within = false;
  }
  const int code = within ? kExitOk : kExitCheckFailed;
  if (o.format == "csv") {
    std::ostringstream out;
    out << "group,class,rep_index,class_size,length,k\n";
    for (const auto& r : rows)
      out << r.group << ',' << r.class_id << ',' << r.rep << ',' << t.class_size(r.class_id) << ','
          << csv_rational(r.length) << ',' << r.k << '\n';
    return {out.str(), code};
  }
  Json j = header("covering");
  j["descriptor"] = d.to_string();
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back(Json{{"class", r.class_id},
                       {"rep_index", r.rep},
                       {"class_size", t.class_size(r.class_id)},
                       {"length", rational_json(r.length)},
                       {"k", r.k}});
  j["rows"] = arr;
  j["c_hat"] = rational_json(c_hat);
  if (o.max_k) j["max_k"] = *o.max_k;
  j["pass"] = within;
  return json_result(j, code);
}

Json k_json(const std::optional<std::size_t>& k) { return k ? Json(*k) : Json(nullptr); }

Result cmd_relative(const Options& o) {
  require_json_or_csv(o, true);
  const auto d = GroupDescriptor::parse(o.descriptor);
  const auto t = GroupTable::enumerate(d, o.cap);
  if (o.class1 || o.class2) {
    if (!o.class1 || !o.class2) throw UsageError("--class1 and --class2 go together");
    require(*o.class1 < t.class_count() && *o.class2 < t.class_count(), "class id out of range");
    const std::size_t h1 = t.class_rep(*o.class1), h2 = t.class_rep(*o.class2);
    require(!t.is_central(h1), "h1 must be non-central");
    const auto k = relative_k(t, h1, h2, o.symmetric);
    Json j = header("relative");
    j["descriptor"] = d.to_string();
    j["class1"] = *o.class1;
    j["class2"] = *o.class2;
    j["symmetric"] = o.symmetric;
    j["k"] = k_json(k);
    const int code = (o.max_k && (!k || *k > *o.max_k)) ? kExitCheckFailed : kExitOk;
    return json_result(j, code);
  }
  const auto rows = relative_rows(t, epsilon_of(o));
  if (o.format == "csv") {
    std::ostringstream out;
    out << "group,class1,class2,length1,length2,k\n";
    for (const auto& r : rows)
      out << r.group << ',' << r.class1 << ',' << r.class2 << ',' << csv_rational(r.length1) << ','
          << csv_rational(r.length2) << ',' << (r.k ? std::to_string(*r.k) : "none") << '\n';
    return {out.str(), kExitOk};
  }
  Json j = header("relative");
  j["descriptor"] = d.to_string();
  j["epsilon"] = rational_json(epsilon_of(o));
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back(Json{{"class1", r.class1},
                       {"class2", r.class2},
                       {"length1", rational_json(r.length1)},
                       {"length2", rational_json(r.length2)},
                       {"k", k_json(r.k)}});
  j["rows"] = arr;
  return json_result(j);
}

Result cmd_alt_relative(const Options& o) {
  require_json_or_csv(o, false);
  const auto d = GroupDescriptor::parse(o.descriptor);
  require(d.is_alt(), "alt-relative needs an alternating descriptor A(n)");
  const Permutation sigma = Permutation::parse_cycles(d.n, o.sigma);
  const Permutation tau = Permutation::parse_cycles(d.n, o.tau);
  require(sigma.is_even() && tau.is_even(), "both permutations must be even");
  require(!tau.is_identity(), "tau must be non-trivial");
  const auto t = GroupTable::enumerate(d, o.cap);
  const auto k = relative_k(t, *t.index_of(tau), *t.index_of(sigma), o.symmetric);
  Json j = header("alt-relative");
  j["descriptor"] = d.to_string();
  j["sigma"] = sigma.to_cycles();
  j["tau"] = tau.to_cycles();
  j["symmetric"] = o.symmetric;
  j["length_sigma"] = rational_json(hamming_length(sigma));
  j["length_tau"] = rational_json(hamming_length(tau));
  j["k"] = k_json(k);
  return json_result(j);
}

Result cmd_fit(const Options& o) {
  require_json_or_csv(o, true);
  const Rational eps = epsilon_of(o);
  std::vector<GroupTable> owned;
  std::vector<std::string> names = o.train;
  names.insert(names.end(), o.alt.begin(), o.alt.end());
  require(!names.empty(), "fit needs at least one training group");
  owned.reserve(names.size());
  for (const auto& n : names) owned.push_back(GroupTable::enumerate(GroupDescriptor::parse(n), o.cap));
  std::vector<const GroupTable*> tables;
  for (const auto& t : owned) tables.push_back(&t);
  const FitReport fit = fit_constants(tables, eps);

  Json held = Json::array();
  bool pass = true;
  for (const auto& n : o.heldout) {
    const auto t = GroupTable::enumerate(GroupDescriptor::parse(n), o.cap);
    require(t.is_perm() ? fit.has_alt : fit.has_matrix,
            n + ": no training group of the same kind to validate against");
    const auto bad = relative_violations(t, fit);
    pass = pass && bad.empty();
    held.push_back(Json{{"descriptor", t.descriptor().to_string()},
                        {"pairs", relative_rows(t, eps).size()},
                        {"violations", bad.size()}});
  }
  const int code = pass ? kExitOk : kExitCheckFailed;
  if (o.format == "csv") {
    std::ostringstream out;
    out << "group,class1,class2,length1,length2,k,bound\n";
    for (const auto& r : fit.relative) {
      const bool perm = r.group.rfind("A(", 0) == 0;
      out << r.group << ',' << r.class1 << ',' << r.class2 << ',' << csv_rational(r.length1) << ','
          << csv_rational(r.length2) << ',' << (r.k ? std::to_string(*r.k) : "none") << ','
          << csv_rational(fitted_bound(fit, r, perm)) << '\n';
    }
    return {out.str(), code};
  }
  Json j = header("fit");
  j["epsilon"] = rational_json(eps);
  j["train"] = names;
  j["c_hat"] = rational_json(fit.c_hat);
  j["C_hat"] = rational_json(fit.C_hat);
  j["D_hat"] = fit.D_hat;
  j["c_alt_hat"] = rational_json(fit.c_alt_hat);
  j["covering_rows"] = fit.covering.size();
  j["relative_rows"] = fit.relative.size();
  j["heldout"] = held;
  j["pass"] = pass;
  return json_result(j, code);
}

Json side_json(const ObstructionSide& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    Json hist = Json::object();
    for (const auto& [cert, count] : r.histogram) hist[std::to_string(cert)] = count;
    rows.push_back(Json{{"k", r.k}, {"max_certificate", r.max_certificate}, {"histogram", hist}, {"pass", r.pass}});
  }
  return Json{{"rows", rows}, {"other_certificate", s.other_certificate}, {"pass", s.pass}};
}

Result cmd_obstruction(const Options& o) {
  require_json_or_csv(o, false);
  const std::uint64_t seed = require_seed(o);
  require(o.q <= 0xffffffffu, "q out of range");
  const auto inst = build_example(static_cast<std::uint32_t>(o.q), o.a, o.b);
  const auto rep = verify_obstruction(inst, o.kmax, o.samples, seed);
  const Field& f = *inst.field;
  Json j = header("obstruction");
  j["q"] = rep.q;
  j["a"] = rep.a;
  j["b"] = rep.b;
  j["kmax"] = rep.k_max;
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  j["zeta"] = f.format(inst.zeta);
  j["lambda"] = f.format(inst.lambda);
  j["mu"] = f.format(inst.mu);
  j["forward"] = side_json(rep.forward);
  j["reverse"] = side_json(rep.reverse);
  j["pass"] = rep.pass;
  return json_result(j, rep.pass ? kExitOk : kExitCheckFailed);
}

Json checks_json(const std::vector<std::pair<std::string, bool>>& checks, bool& all) {
  Json arr = Json::array();
  all = true;
  for (const auto& [name, ok] : checks) {
    arr.push_back(Json{{"name", name}, {"pass", ok}});
    all = all && ok;
  }
  return arr;
}

std::string subspace_text(const Subspace& u) {
  return u.dim() == 0 ? std::string() : to_text(u.basis_matrix());
}

Result cmd_witness_swap(const Options& o) {
  require_json_or_csv(o, false);
  const std::uint64_t seed = require_seed(o);
  const auto d = GroupDescriptor::parse(o.descriptor);
  require(!d.is_alt() && d.family != Family::SL, "swap witness needs a family with a form");
  const FormSpace s = standard_space(d);
  const Subspace u = random_nonsingular(s, o.dim, seed, 0);
  const SwapWitness w = swap_element(d, u);
  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("member", contains(d, w.h));
  checks.emplace_back("h(U)=W1", image(w.h, u) == w.w1);
  checks.emplace_back("h(W1)=U", image(w.h, w.w1) == u);
  bool fixes = true;
  for (const auto& v : w.w2.basis()) fixes = fixes && w.h * v == v;
  checks.emplace_back("h|W2=id", fixes);
  checks.emplace_back("W1+W2=U^perp", sum(w.w1, w.w2) == perp(s, u) && w.w1.dim() + w.w2.dim() == d.n - u.dim());
  if (d.is_orthogonal() && s.field().p() != 2) checks.emplace_back("spinor_norm=1", spinor_norm(d, w.h) == 0);
  if (d.is_orthogonal() && s.field().p() == 2) checks.emplace_back("dickson=0", dickson_invariant(d, w.h) == 0);
  bool all = true;
  Json j = header("witness");
  j["lemma"] = "swap";
  j["descriptor"] = d.to_string();
  j["seed"] = seed;
  j["U"] = subspace_text(u);
  j["W1"] = subspace_text(w.w1);
  j["W2"] = subspace_text(w.w2);
  j["h"] = to_text(w.h);
  j["checks"] = checks_json(checks, all);
  j["pass"] = all;
  return json_result(j, all ? kExitOk : kExitCheckFailed);
}

Result cmd_witness_quasiscalar(const Options& o) {
  require_json_or_csv(o, false);
  const auto d = GroupDescriptor::parse(o.descriptor);
  const auto field = Field::get(d.field_p(), d.field_k());
  Json items = Json::array();
  bool all = true;
  for (const Elem lambda : quasiscalars(d)) {
    const Matrix h = quasiscalar_witness(d, lambda);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < d.n; ++i) hits += h(i, i) == lambda ? 1 : 0;
    std::vector<std::pair<std::string, bool>> checks{
        {"member", contains(d, h)}, {"diagonal", h.is_diagonal()}, {"entries>=n-2", hits + 2 >= d.n}};
    bool ok = true;
    Json c = checks_json(checks, ok);
    all = all && ok;
    items.push_back(Json{{"lambda", field->format(lambda)}, {"h", to_text(h)}, {"checks", c}});
  }
  Json j = header("witness");
  j["lemma"] = "quasiscalar";
  j["descriptor"] = d.to_string();
  j["witnesses"] = items;
  j["pass"] = all;
  return json_result(j, all ? kExitOk : kExitCheckFailed);
}

Result cmd_witness_nonsingular(const Options& o) {
  require_json_or_csv(o, false);
  const std::uint64_t seed = require_seed(o);
  const auto d = GroupDescriptor::parse(o.descriptor);
  require(!d.is_alt() && d.family != Family::SL, "non-singular extraction needs a family with a form");
  require(o.dim >= 1 && o.dim <= d.n, "--dim out of range");
  const FormSpace s = standard_space(d);
  // A random subspace of the requested dimension, singular or not.
  std::mt19937_64 rng(seed);
  Subspace u(s.field_ptr(), d.n);
  while (u.dim() != o.dim) {
    std::vector<Vec> vs(o.dim, Vec(d.n));
    for (auto& v : vs)
      for (auto& x : v) x = Elem{static_cast<std::uint16_t>(rng() % s.field().q())};
    u = Subspace::span(s.field_ptr(), d.n, vs);
  }
  const Subspace w = extract_nonsingular(s, u);
  const long bound = std::max(0L, 2L * static_cast<long>(u.dim()) - static_cast<long>(d.n));
  std::vector<std::pair<std::string, bool>> checks{{"W<=U", u.contains(w)},
                                                   {"non-singular", is_nonsingular(s, w)},
                                                   {"dim W>=2l-n", static_cast<long>(w.dim()) >= bound}};
  bool all = true;
  Json j = header("witness");
  j["lemma"] = "nonsingular";
  j["descriptor"] = d.to_string();
  j["seed"] = seed;
  j["U"] = subspace_text(u);
  j["W"] = subspace_text(w);
  j["dim_U"] = u.dim();
  j["dim_W"] = w.dim();
  j["checks"] = checks_json(checks, all);
  j["pass"] = all;
  return json_result(j, all ? kExitOk : kExitCheckFailed);
}

Result cmd_ctype_cmp(const Options& o) {
  require_json_or_csv(o, false);
  const auto r = ConvergenceType::parse(o.r), s = ConvergenceType::parse(o.s);
  Json j = header("ctype cmp");
  j["r"] = r.to_string();
  j["s"] = s.to_string();
  j["verdict"] = to_string(ct_compare(r, s));
  return json_result(j);
}

Result cmd_ctype_ideal(const Options& o) {
  require_json_or_csv(o, false);
  OrderIdeal ideal;
  if (o.ideal == "I0") ideal = OrderIdeal::I0();
  else if (o.ideal == "I1") ideal = OrderIdeal::I1();
  else throw UsageError("ideal must be I0 or I1");
  const auto r = ConvergenceType::parse(o.r);
  Json j = header("ctype ideal");
  j["ideal"] = o.ideal;
  j["r"] = r.to_string();
  j["member"] = ideal.contains(r);
  return json_result(j);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite-group experiments on length functions and class products", "ultralat"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Seed for sampling commands");
  app.add_option("--out", o.out, "Write the report to this file");
  app.add_option("--format", o.format, "json or csv");
  app.add_option("--cap", o.cap, "Largest group order to enumerate");
  app.add_option("--max-k", o.max_k, "Fail when a covering or relative exponent exceeds this");
  app.add_option("--samples", o.samples, "Sample words per k");
  app.add_option("--epsilon", o.epsilon, "Rank-length margin for relative generation fits");

  std::function<Result()> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help,
                 std::function<Result()> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->fallthrough();
    c->callback([&action, fn] { action = fn; });
    return c;
  };

  auto* fi = sub(&app, "field-info", "Field presentation and primitive element", [&] { return cmd_field_info(o); });
  fi->add_option("q", o.q, "Field order")->required();

  auto* gr = sub(&app, "group", "Enumerate a group and list its classes", [&] { return cmd_group(o); });
  gr->add_option("descriptor", o.descriptor)->required();
  gr->add_option("--level", o.level, "group, special, or full");

  auto* cov = sub(&app, "covering", "Covering number of every non-central class", [&] { return cmd_covering(o); });
  cov->add_option("descriptor", o.descriptor)->required();

  auto* rel = sub(&app, "relative", "Relative generation exponents between classes", [&] { return cmd_relative(o); });
  rel->add_option("descriptor", o.descriptor)->required();
  rel->add_option("--class1", o.class1, "Class id of h1");
  rel->add_option("--class2", o.class2, "Class id of h2");
  rel->add_flag("--symmetric", o.symmetric, "Use the class of h1 together with that of its inverse");

  auto* ar = sub(&app, "alt-relative", "Least k with sigma in (tau^A_n)^{*k}", [&] { return cmd_alt_relative(o); });
  ar->add_option("descriptor", o.descriptor)->required();
  ar->add_option("sigma", o.sigma)->required();
  ar->add_option("tau", o.tau)->required();
  ar->add_flag("--symmetric", o.symmetric);

  auto* fit = sub(&app, "fit", "Fit the covering and relative generation constants", [&] { return cmd_fit(o); });
  fit->add_option("--train", o.train, "Matrix training groups");
  fit->add_option("--alt", o.alt, "Alternating training groups");
  fit->add_option("--heldout", o.heldout, "Groups validated without refitting");

  auto* ob = sub(&app, "obstruction", "Rank certificates for the SL_q(q) counterexample",
                 [&] { return cmd_obstruction(o); });
  ob->add_option("--q", o.q)->required();
  ob->add_option("--a", o.a)->required();
  ob->add_option("--b", o.b)->required();
  ob->add_option("--kmax", o.kmax)->required();

  auto* wi = app.add_subcommand("witness", "Geometric witnesses");
  wi->fallthrough();
  wi->require_subcommand(1);
  auto* ws = sub(wi, "swap", "Element interchanging U and an isometric W1", [&] { return cmd_witness_swap(o); });
  ws->add_option("descriptor", o.descriptor)->required();
  ws->add_option("--dim", o.dim, "dim U")->required();
  auto* wq = sub(wi, "quasiscalar", "Witness for every quasiscalar", [&] { return cmd_witness_quasiscalar(o); });
  wq->add_option("descriptor", o.descriptor)->required();
  auto* wn = sub(wi, "nonsingular", "Maximal non-singular subspace of a random U",
                 [&] { return cmd_witness_nonsingular(o); });
  wn->add_option("descriptor", o.descriptor)->required();
  wn->add_option("--dim", o.dim, "dim U")->required();

  auto* ct = app.add_subcommand("ctype", "Convergence types");
  ct->fallthrough();
  ct->require_subcommand(1);
  auto* cc = sub(ct, "cmp", "Compare two convergence types", [&] { return cmd_ctype_cmp(o); });
  cc->add_option("r", o.r)->required();
  cc->add_option("s", o.s)->required();
  auto* ci = sub(ct, "ideal", "Membership in I0 or I1", [&] { return cmd_ctype_ideal(o); });
  ci->add_option("ideal", o.ideal)->required();
  ci->add_option("r", o.r)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!action) {
    err << "usage error: no command selected\n";
    return kExitUsage;
  }
  try {
    const Result r = action();
    if (o.out.empty()) {
      out << r.text;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) {
        err << "cannot open " << o.out << "\n";
        return kExitInvalid;
      }
      file << r.text;
    }
    return r.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidArgument: return kExitInvalid;
      case ErrorKind::CapExceeded: return kExitCapExceeded;
      case ErrorKind::Internal: return kExitInternal;
    }
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace ultralat
