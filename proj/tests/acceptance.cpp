// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include "oracles.hpp"

#include "tfg/checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace tfg;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) note << "first failure: " << msg << "; ";
    ok = ok && cond;
  }
  // Runs a suite and records its failure count.
  SuiteReport suite(const std::string& name, const Triple& t, int iters, std::uint64_t seed = 1) {
    SuiteReport r = run_suite(name, t, seed, iters);
    require(r.passed(), name + ": " + (r.failures.empty() ? "" : r.failures[0].message));
    cases += r.cases;
    return r;
  }
  long cases = 0;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failed = 0;

void criterion(int n, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double s = seconds_since(t0);
  if (limit_s > 0) o.require(s < limit_s, "time limit " + std::to_string(limit_s) + " s exceeded");
  if (!o.ok) ++failed;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f s", s);
  std::cout << "criterion " << n << (n < 10 ? "  " : " ") << (o.ok ? "PASS" : "FAIL") << "  " << title << " ("
            << o.cases << " cases, " << secs << ") " << o.note.str() << std::endl;
}

std::string at(const std::string& s, std::size_t k) { return s.substr(0, k); }

// π_v(b) at the sequence s, computed from the table and letter-by-letter maps.
int jones_oracle(const Triple& t, const VElement& v, const Loop& b, const std::string& s) {
  for (const auto& [d, c] : v.pairs())
    if (oracle::starts_with(s, c.bits())) {
      std::string x = d.bits() + s.substr(c.size());
      return oracle::alpha_path_inv(t, c.bits(), oracle::alpha_path(t, d.bits(), oracle::loop_at(b, x)));
    }
  throw std::logic_error("uncovered");
}

const std::vector<std::string> kAxiomFixtures{"z2", "z3inv", "z4inv", "s3"};

}  // namespace

int main() {
  criterion(1, "group axioms for V, loops and fraction groups", 10, [](Outcome& o) {
    for (const auto& name : kAxiomFixtures) {
      SuiteReport r = o.suite("group-axioms", fixture(name), 1000);
      o.require(r.info["fraction_checked"] == true, name + ": fraction group not checked");
    }
  });

  criterion(2, "Jones action laws", 0, [](Outcome& o) {
    for (const auto& name : kAxiomFixtures) {
      Triple t = fixture(name);
      o.suite("action-laws", t, 500);
      for (std::uint64_t i = 0; i < 500; ++i) {
        Rng rng(derive_seed(2002, i));
        VElement v = random_v(rng, 8, 4);
        Loop b = random_loop(rng, t.grp());
        std::string s = oracle::expand(random_cpoint(rng), 24);
        o.require(oracle::loop_at(jones_act(t, v, b), s) == jones_oracle(t, v, b, s),
                  name + ": pointwise oracle disagrees at " + s + " v=[" + v.str() + "]");
        ++o.cases;
      }
    }
  });

  criterion(3, "twist refinement independence and composition law", 0, [](Outcome& o) {
    for (const char* name : {"z3inv", "z4inv", "s3inner", "z5x2", "z2z2"}) {
      Triple t = fixture(name);
      const int n = t.grp().order();
      for (std::uint64_t i = 0; i < 500; ++i) {
        Rng rng(derive_seed(3003, i));
        VElement v = random_v(rng, 8, 4), w = random_v(rng, 8, 4);
        CPoint x = random_cpoint(rng);
        const auto& [d, c] = v.pairs()[uniform_index(rng, v.size())];
        Word ext = random_word(rng, 0, 4);
        o.require(tau_cells(t, d + ext, c + ext) == tau_cells(t, d, c), std::string(name) + ": refinement");
        o.require(tau(t, compose(v, w), x) == compose(tau(t, v, w.apply(x)), tau(t, w, x)),
                  std::string(name) + ": composition at " + x.str());
        std::string s = oracle::expand(x, 24);
        for (const auto& [dd, cc] : v.pairs())
          if (oracle::starts_with(s, dd.bits()))
            for (int g = 0; g < n; ++g)
              o.require(tau(t, v, x)(g) ==
                            oracle::alpha_path_inv(t, cc.bits(), oracle::alpha_path(t, dd.bits(), g)),
                        std::string(name) + ": oracle twist");
        ++o.cases;
      }
    }
  });

  criterion(4, "depth-3 commutants and centers", 60, [](Outcome& o) {
    for (const char* name : {"z2", "z4inv"}) {
      SuiteReport c = o.suite("centralizer", fixture(name), 1);
      SuiteReport z = o.suite("center", fixture(name), 50);
      o.require(z.info["center_order"] == 2, std::string(name) + ": |Z(G)| = " + z.info["center_order"].dump());
      o.note << name << " fix/stab/center " << c.info["fix_commutant_size"] << "/"
             << c.info["stab_commutant_size"] << "/" << z.info["center_order"] << "; ";
    }
  });

  criterion(5, "commutator realization of g_I", 0, [](Outcome& o) {
    const auto& cells = Sdp::uniform(2).cells();
    for (const char* name : {"z2", "z3", "z4inv", "s3", "s3inner", "d4", "z2z2"}) {
      Triple t = fixture(name);
      for (int gv : gamma_alpha_fixed(t))
        for (unsigned mask = 1; mask + 1 < (1u << cells.size()); ++mask) {
          std::vector<Word> ws;
          for (std::size_t k = 0; k < cells.size(); ++k)
            if (mask & (1u << k)) ws.push_back(cells[k]);
          SdiUnion I = SdiUnion::from_words(ws);
          Word j = I.complement().cells().back() + Word("1");
          SdiUnion J = SdiUnion::from_words({j});
          VElement v = make_v_mapping(J, I.unite(J));
          FractionElement fv = from_v(v), gj = from_loop(loop_indicator(J, gv));
          FractionElement comm = g_mul(t, g_mul(t, fv, gj), g_mul(t, g_inv(t, fv), g_inv(t, gj)));
          o.require(comm == from_loop(loop_indicator(I, gv)), std::string(name) + ": I=" + I.str());
          ++o.cases;
        }
    }
  });

  criterion(6, "cocycle identities and the twisted map", 0, [](Outcome& o) {
    for (const char* name : {"z2", "z3inv", "z4inv", "s3", "s3inner", "d4", "z5x2"}) o.suite("cocycle", fixture(name), 300);
    for (const char* name : {"z4inv", "s3inner"}) {
      Triple t = fixture(name);
      int zeta = center_elements(t).back().a.cells().front().second;
      o.require(cocycle_check(t, Cocycle::slope(zeta), 300, 6).empty(), "slope cocycle");
      o.require(!cocycle_check(t, Cocycle::constant(1), 20, 6).empty(), "negative control passed");
      o.cases += 320;
    }
  });

  criterion(7, "automorphism relations and kernel", 0, [](Outcome& o) {
    for (const char* name : {"s3", "z2"}) o.suite("theorem33", fixture(name), 200);
    Triple s = fixture("s3");
    for (int g = 0; g < 6; ++g) o.require(xi_kernel_check(s, g, 200, 77), "kernel quadruple moves an element");
    o.cases += 6 * 200;
  });

  criterion(8, "gamma_phi independence and difference law", 0,
            [](Outcome& o) { o.suite("gamma-phi", fixture("z2"), 100); });

  criterion(9, "slope ratio at rational fixed points", 0,
            [](Outcome& o) { o.suite("slope-ratio", fixture("z2"), 100); });

  criterion(10, "spatial support law", 0, [](Outcome& o) {
    for (const char* name : {"z3inv", "z4inv", "s3inner", "s3", "z2", "z5x2"}) {
      SuiteReport r = o.suite("spatial-support", fixture(name), 300);
      o.require(r.info["isomorphism_cases"].get<int>() > 0, "no isomorphism cases");
    }
  });

  criterion(11, "coCF twist exponent", 0, [](Outcome& o) {
    o.suite("cocf", fixture("z3inv"), 500);
    o.suite("cocf", fixture("z5x2"), 500);
    Triple t = fixture("z3inv");
    for (std::uint64_t i = 0; i < 500; ++i) {
      Rng rng(derive_seed(1111, i));
      VElement v = random_v(rng, 8, 4);
      std::string s = oracle::expand(random_cpoint(rng), 24);
      for (const auto& [d, c] : v.pairs())
        if (oracle::starts_with(s, d.bits())) {
          long ones = static_cast<long>(std::count(d.bits().begin(), d.bits().end(), '1')) -
                      static_cast<long>(std::count(c.bits().begin(), c.bits().end(), '1'));
          int want = (ones % 2 == 0) ? 1 : 2;
          o.require(oracle::alpha_path_inv(t, c.bits(), oracle::alpha_path(t, d.bits(), 1)) == want,
                    "digit sum parity oracle");
        }
      ++o.cases;
    }
  });

  criterion(12, "Z[1/2]^2 example", 0, [](Outcome& o) { o.suite("zeta-example", fixture("z2"), 300); });

  criterion(13, "wreath containment and support stabilization", 0, [](Outcome& o) {
    for (const char* name : {"z3inv", "s3", "z2"}) {
      SuiteReport r = o.suite("wreath-containment", fixture(name), 200);
      o.require(r.info["commuting_pairs"].get<int>() > 0, "no commuting pairs sampled");
    }
  });

  auto timed = [](Outcome& o, const char* what, const std::function<bool()>& f) {
    auto t0 = Clock::now();
    bool ok = f();
    double s = seconds_since(t0);
    o.require(ok, what);
    o.require(s < 30, std::string(what) + " took too long");
    ++o.cases;
  };
  criterion(14, "classification verdicts", 0, [&](Outcome& o) {
    timed(o, "prop24 swap witness", [] {
      Decision d = prop24_search(fixture("z3inv"), fixture("z3swap"));
      return d.verdict == Verdict::WitnessFound && d.witness->swap &&
             witness_holds(fixture("z3inv"), fixture("z3swap"), *d.witness);
    });
    timed(o, "cor28 Z/4", [] { return cor28_decide(fixture("z4"), fixture("z4inv")).verdict == Verdict::NotIsomorphic; });
    timed(o, "cor28 inner S3", [] {
      return cor28_decide(fixture("s3inner"), fixture("s3")).verdict == Verdict::Isomorphic &&
             cor28_decide(fixture("s3"), fixture("s3inner")).verdict == Verdict::Isomorphic;
    });
    timed(o, "cocf Z/5", [] {
      Decision d = cocf_check(fixture("z5x2"), fixture("z5x4"));
      return d.verdict == Verdict::Fails && d.reason == "Out-subgroup orders 4 vs 2";
    });
  });

  criterion(15, "Tanushevski reduction", 0, [](Outcome& o) {
    for (const char* name : {"s3", "z4", "z2z2", "d4"}) o.suite("tanushevski", fixture(name), 100);
    for (auto g : {cyclic_group(4), symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(2))}) {
      auto ends = oracle::endomorphisms(*g);
      for (const auto& a0 : ends)
        for (const auto& a1 : ends) {
          Triple t(g, GroupMap{g, g, a0}, GroupMap{g, g, a1});
          Reduction red = tanushevski_reduce(t);
          const Triple& q = red.quotient;
          for (int x = 1; x < q.grp().order(); ++x)
            o.require(q.alpha(0, x) != 0 || q.alpha(1, x) != 0, "reduced joint map not injective");
          ++o.cases;
        }
      std::vector<int> zero(static_cast<std::size_t>(g->order()), 0);
      Triple triv(g, GroupMap{g, g, zero}, GroupMap{g, g, zero});
      o.require(tanushevski_reduce(triv).quotient.grp().order() == 1, "trivial endomorphisms");
    }
  });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
