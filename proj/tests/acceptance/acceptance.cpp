// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ultralat/classical.hpp"
#include "ultralat/ctypes.hpp"
#include "ultralat/error.hpp"
#include "ultralat/forms.hpp"
#include "ultralat/genball.hpp"
#include "ultralat/group_table.hpp"
#include "ultralat/lengths.hpp"
#include "ultralat/obstruction.hpp"

using namespace ultralat;

namespace {

constexpr std::uint64_t kCap = 1000000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

GroupDescriptor D(const std::string& s) { return GroupDescriptor::parse(s); }

const GroupTable& table(const std::string& text, Level level = Level::Group) {
  static std::map<std::pair<std::string, int>, GroupTable> cache;
  const auto key = std::make_pair(text, static_cast<int>(level));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, GroupTable::enumerate(D(text), kCap, level)).first;
  return it->second;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion_obstruction() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream d;
  for (const auto& [q, a, b] : std::vector<std::tuple<int, int, int>>{{7, 2, 3}, {11, 2, 5}, {13, 3, 4}}) {
    const auto inst = build_example(q, a, b);
    const auto r = verify_obstruction(inst, q - 2, 500, 1);
    const bool exact = r.forward.other_certificate == static_cast<std::size_t>(q - 1) &&
                       r.reverse.other_certificate == static_cast<std::size_t>(q - 1);
    o.pass = o.pass && r.pass && exact;
    d << "q=" << q << (r.pass && exact ? " ok" : " FAILED") << "; ";
  }
  const double secs = seconds_since(t0);
  o.pass = o.pass && secs < 60.0;
  d << "time " << secs << " s";
  o.detail = d.str();
  return o;
}

Outcome criterion_extraction() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t cases = 0, bad = 0;
  for (const char* text : {"Sp(4,3)", "O(5,3)", "O(5,3):d"}) {
    const auto s = standard_space(D(text));
    const std::size_t n = s.dim();
    for (std::size_t l = 0; l <= n; ++l)
      for_each_subspace(s.field_ptr(), n, l, [&](const Subspace& u) {
        const Subspace w = extract_nonsingular(s, u);
        const long bound = std::max(0L, 2L * static_cast<long>(l) - static_cast<long>(n));
        ++cases;
        if (!u.contains(w) || !is_nonsingular(s, w) || static_cast<long>(w.dim()) < bound) ++bad;
      });
  }
  const double secs = seconds_since(t0);
  o.pass = bad == 0 && secs < 300.0;
  o.detail = std::to_string(cases) + " subspaces, " + std::to_string(bad) + " failures, " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion_swap() {
  Outcome o;
  std::size_t total = 0, bad = 0;
  for (const char* text : {"Sp(8,3)", "SU(5,2)", "O(7,3)", "O(7,3):d", "O+(8,3)", "O-(8,3)", "O+(8,2)", "O-(8,2)"}) {
    const auto d = D(text);
    const auto s = standard_space(d);
    // An alternating polar form has only even-dimensional non-singular subspaces.
    const bool alternating = d.family == Family::Sp || (d.is_orthogonal() && s.field().p() == 2);
    std::vector<std::size_t> dims;
    for (std::size_t k = 2; 2 * k < d.n; ++k)
      if (!alternating || k % 2 == 0) dims.push_back(k);
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::size_t dim = dims[i % dims.size()];
      const Subspace u = random_nonsingular(s, dim, 2024, i);
      const auto w = swap_element(d, u);
      bool ok = contains(d, w.h) && image(w.h, u) == w.w1 && image(w.h, w.w1) == u;
      for (const auto& v : w.w2.basis()) ok = ok && w.h * v == v;
      ok = ok && sum(w.w1, w.w2) == perp(s, u) && intersect(w.w1, w.w2).dim() == 0;
      if (d.is_orthogonal() && s.field().p() != 2) ok = ok && spinor_norm(d, w.h) == 0;
      if (d.is_orthogonal() && s.field().p() == 2) ok = ok && dickson_invariant(d, w.h) == 0;
      ++total;
      if (!ok) ++bad;
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(total) + " subspaces across 8 forms, " + std::to_string(bad) + " failures";
  return o;
}

Outcome criterion_quasiscalar() {
  Outcome o;
  std::size_t total = 0, bad = 0;
  for (const char* text : {"SL(5,4)", "SU(4,3)", "Sp(6,5)", "O(7,3)", "O(7,3):d", "O+(8,3)", "O-(8,5)", "O+(8,2)"}) {
    const auto d = D(text);
    for (const Elem l : quasiscalars(d)) {
      const Matrix h = quasiscalar_witness(d, l);
      std::size_t hits = 0;
      for (std::size_t i = 0; i < d.n; ++i) hits += h(i, i) == l ? 1 : 0;
      ++total;
      if (!contains(d, h) || !h.is_diagonal() || hits + 2 < d.n) ++bad;
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(total) + " quasiscalars, " + std::to_string(bad) + " failures";
  return o;
}

Outcome criterion_covering() {
  Outcome o;
  Rational c_hat(0);
  std::size_t rows = 0;
  std::ostringstream d;
  for (const char* text : {"SL(2,5)", "SL(2,7)", "SL(3,2)", "SL(3,3)", "SU(4,2)", "A(5)", "A(6)", "A(7)"}) {
    for (const auto& r : covering_rows(table(text))) {
      c_hat = std::max(c_hat, r.length * Rational(static_cast<std::int64_t>(r.k)));
      ++rows;
    }
  }
  d << rows << " classes, c_hat = " << to_string(c_hat);
  const std::filesystem::path fixture = std::filesystem::path(ULTRALAT_FIXTURES) / "c_hat.json";
  if (std::filesystem::exists(fixture)) {
    std::ifstream in(fixture);
    const auto j = nlohmann::json::parse(in);
    const Rational stored(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
    o.pass = stored == c_hat;
    d << (o.pass ? " (matches fixture)" : " (fixture has " + to_string(stored) + ")");
  } else {
    std::filesystem::create_directories(fixture.parent_path());
    std::ofstream out(fixture);
    out << nlohmann::json{{"num", c_hat.numerator()}, {"den", c_hat.denominator()}}.dump() << "\n";
    d << " (fixture created)";
  }
  o.detail = d.str();
  return o;
}

Outcome criterion_relative() {
  Outcome o;
  std::vector<const GroupTable*> train;
  for (const char* text : {"SL(2,5)", "SL(2,7)", "SL(3,2)", "Sp(4,3)", "SU(4,2)", "A(5)", "A(6)", "A(7)"})
    train.push_back(&table(text));
  const FitReport fit = fit_constants(train, Rational(1, 8));
  std::size_t in_sample = 0;
  for (const auto* t : train) in_sample += relative_violations(*t, fit).size();
  std::ostringstream d;
  d << "C_hat=" << to_string(fit.C_hat) << " D_hat=" << fit.D_hat << " c_alt_hat=" << to_string(fit.c_alt_hat)
    << "; training violations " << in_sample;
  std::size_t held = 0;
  for (const char* text : {"SL(3,3)", "A(8)"}) {
    const auto bad = relative_violations(table(text), fit);
    held += bad.size();
    d << "; " << text << " violations " << bad.size() << "/" << relative_rows(table(text), fit.epsilon).size();
  }
  o.pass = in_sample == 0 && held == 0;
  o.detail = d.str();
  return o;
}

Outcome criterion_lengths() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t bad = 0, pairs = 0;
  for (const char* text : {"SL(2,5)", "SL(2,7)", "SL(3,2)", "SL(3,3)", "Sp(4,3)", "SU(4,2)"}) {
    const auto& t = table(text);
    for (int i = 0; i < 10000; ++i) {
      const std::size_t a = rng() % t.size(), b = rng() % t.size();
      const std::size_t ab = t.mul(a, b), ba = t.conj(b, a), ai = t.inv(a);
      const Matrix ga = t.matrix(a), gb = t.matrix(b);
      bool ok = rank_length(t.matrix(ab)) <= rank_length(ga) + rank_length(gb) &&
                rank_length(t.matrix(ba)) == rank_length(ga) && rank_length(t.matrix(ai)) == rank_length(ga);
      const Rational pa = projective_rank_length(ga);
      ok = ok && projective_rank_length(t.matrix(ab)) <= pa + projective_rank_length(gb) &&
           projective_rank_length(t.matrix(ba)) == pa && projective_rank_length(t.matrix(ai)) == pa &&
           pa <= rank_length(ga);
      const auto ca = conjugacy_length(t, a);
      ok = ok && ClassLength::sum_bound(conjugacy_length(t, ab), ca, conjugacy_length(t, b)) &&
           conjugacy_length(t, ba) == ca && conjugacy_length(t, ai) == ca;
      ++pairs;
      if (!ok) ++bad;
    }
    if (rank_length(t.matrix(t.identity())) != Rational(0)) ++bad;
  }
  for (const char* text : {"A(5)", "A(6)", "A(7)", "A(8)"}) {
    const auto& t = table(text);
    for (int i = 0; i < 10000; ++i) {
      const std::size_t a = rng() % t.size(), b = rng() % t.size();
      const Rational la = hamming_length(t.perm(a));
      const bool ok = hamming_length(t.perm(t.mul(a, b))) <= la + hamming_length(t.perm(b)) &&
                      hamming_length(t.perm(t.conj(b, a))) == la && hamming_length(t.perm(t.inv(a))) == la;
      ++pairs;
      if (!ok) ++bad;
    }
  }
  std::size_t exhaustive = 0, eq_bad = 0;
  for (const char* text : {"SL(3,3)", "Sp(4,3)"}) {
    const auto& t = table(text);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Matrix g = t.matrix(i);
      const Rational rk = rank_length(g), pr = projective_rank_length(g);
      ++exhaustive;
      if (pr > rk || (rk <= Rational(1, 2) && pr != rk)) ++eq_bad;
    }
  }
  o.pass = bad == 0 && eq_bad == 0;
  o.detail = std::to_string(pairs) + " random pairs (" + std::to_string(bad) + " failures), " +
             std::to_string(exhaustive) + " exhaustive elements (" + std::to_string(eq_bad) + " failures)";
  return o;
}

Outcome criterion_rank_parity() {
  Outcome o;
  std::ostringstream d;
  std::size_t bad = 0;
  for (const char* text : {"O+(6,2)", "O-(6,2)"}) {
    const auto& full = table(text, Level::Full);
    // The subgroup is enumerated separately, by closure of its own generators.
    const auto& omega = table(text, Level::Group);
    std::size_t even = 0;
    for (std::size_t i = 0; i < full.size(); ++i) {
      const Matrix g = full.matrix(i);
      const bool is_even = rank(g - Matrix::identity(g.field_ptr(), g.rows())) % 2 == 0;
      even += is_even;
      if (is_even != omega.index_of(g).has_value()) ++bad;
    }
    d << text << ": " << full.size() << " elements, " << even << " of even rank; ";
  }
  for (const char* text : {"O+(8,2)", "O-(8,2)"}) {
    const auto order = group_order(D(text), Level::Full);
    if (!order || *order > kCap) d << text << " skipped (order " << (order ? std::to_string(*order) : "?")
                                   << " exceeds cap " << kCap << "); ";
  }
  d << bad << " exceptions";
  o.pass = bad == 0;
  o.detail = d.str();
  return o;
}

Outcome criterion_projective_scalar() {
  Outcome o;
  std::size_t total = 0, found = 0, bad = 0;
  for (const char* text : {"SU(4,2)", "Sp(4,3)"}) {
    const auto d = D(text);
    const auto& t = table(text);
    const auto qs = quasiscalars(d);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Matrix g = t.matrix(i);
      std::vector<Elem> hits;
      for (const Elem l : g.field().nonzero())
        if (4 * rank(g - Matrix::scalar(g.field_ptr(), d.n, l)) < d.n) hits.push_back(l);
      const auto ps = projective_scalar(d, g);
      ++total;
      bool ok = hits.size() <= 1;
      if (hits.size() == 1) {
        ++found;
        ok = ok && ps == hits[0] && std::find(qs.begin(), qs.end(), hits[0]) != qs.end();
      } else {
        ok = ok && !ps;
      }
      if (!ok) ++bad;
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(total) + " elements, " + std::to_string(found) + " with a scalar, " +
             std::to_string(bad) + " exceptions";
  return o;
}

Outcome criterion_ctypes() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  using CT = ConvergenceType;
  std::vector<CT> grid{CT::Zero()};
  for (int an = 0; an <= 12; ++an)
    for (int bn = -6; bn <= 6; ++bn)
      for (int c = 1; c <= 3; ++c) {
        const CT t = CT::make(Rational(c, 2), Rational(an, 12), Rational(bn, 2));
        if (t.valid()) grid.push_back(t);
      }
  auto le = [](const CT& r, const CT& s) { return ct_compare(r, s) != Order::Greater; };
  std::mt19937_64 rng(10);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const CT &r = grid[rng() % grid.size()], &s = grid[rng() % grid.size()], &u = grid[rng() % grid.size()];
    bool ok = (le(r, s) || le(s, r)) && (!(le(r, s) && le(s, u)) || le(r, u));
    ok = ok && (ct_compare(r, s) == Order::Equivalent) == (ct_compare(s, r) == Order::Equivalent);
    if (!r.zero) ok = ok && ct_compare(r, CT::make(r.C * 3, r.a, r.b)) == Order::Equivalent;
    if (!ok) ++bad;
  }
  std::size_t between = 0;
  for (const auto& r : grid)
    if (OrderIdeal::I1().contains(r) && !OrderIdeal::I0().contains(r) &&
        ct_compare(r, CT::make(1, 1, 0)) != Order::Equivalent)
      ++between;
  std::size_t tol_bad = 0, points = 0;
  for (const char* text : {"SL(12,3)", "Sp(16,3)", "O(13,3)", "O-(16,2)"}) {
    const auto d = D(text);
    for (const Rational r : {Rational(1, 8), Rational(1, 5), Rational(1, 4), Rational(1, 3), Rational(1, 2)}) {
      const Matrix g = rank_fraction_element(d, r);
      ++points;
      const Rational n(static_cast<std::int64_t>(d.n));
      if (!contains(d, g) || abs(rank_length(g) - r) > Rational(2) / n) ++tol_bad;
    }
  }
  const double secs = seconds_since(t0);
  o.pass = bad == 0 && between == 0 && tol_bad == 0 && secs < 10.0;
  o.detail = "10000 triples (" + std::to_string(bad) + " failures), " + std::to_string(between) +
             " types between I0 and I1, " + std::to_string(points) + " grid points (" + std::to_string(tol_bad) +
             " violations), " + std::to_string(secs) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"obstruction certificates", criterion_obstruction},
      {"non-singular extraction", criterion_extraction},
      {"swap witnesses", criterion_swap},
      {"quasiscalar witnesses", criterion_quasiscalar},
      {"covering numbers", criterion_covering},
      {"relative generation", criterion_relative},
      {"length laws", criterion_lengths},
      {"rank parity", criterion_rank_parity},
      {"projective scalar", criterion_projective_scalar},
      {"convergence types", criterion_ctypes},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << " (" << criteria[i].first
              << "): " << o.detail << " [" << seconds_since(t0) << " s]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
