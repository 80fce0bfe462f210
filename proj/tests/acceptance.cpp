// Acceptance gate: one line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <random>

#include "fq/workspace.hpp"

using namespace fq;

namespace {

struct Gate {
  int failures = 0;
  std::chrono::steady_clock::time_point t0;

  void start() { t0 = std::chrono::steady_clock::now(); }
  void line(int n, bool ok, const std::string& what) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("[%d] %s  %s  (%.1f s)\n", n, ok ? "PASS" : "FAIL", what.c_str(),
                static_cast<double>(ms) / 1000.0);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

struct BuiltinPair {
  std::string name;
  const FinCategory* cat;
  Filter filter;
};

// The built-in (category, filter) pairs used by criteria 1 and 3.
struct BuiltinPairs {
  FinCategory finset2 = finset_category(2);
  FinCategory finset1 = finset_category(1);
  FinCategory square;
  SubterminalPoset p2, psq;
  std::vector<BuiltinPair> pairs;

  BuiltinPairs() {
    square = product_category(finset1, finset1);
    p2 = subterminal_poset(finset2);
    psq = subterminal_poset(square);
    pairs.push_back({"finset2/trivial", &finset2, *trivial_filter(p2)});
    pairs.push_back(
        {"finset2/wide", &finset2, *principal_filter(p2, p2.representative(finset2.find_object("0")))});
    pairs.push_back({"square/trivial", &square, *trivial_filter(psq)});
    pairs.push_back({"square/corner", &square,
                     *principal_filter(psq, psq.representative(square.find_object("(1,0)")))});
  }
};

bool filter_oracle(const SubterminalPoset& p, const std::vector<int>& members) {
  if (members.empty()) return false;
  auto in = [&](int e) {
    for (int m : members)
      if (m == e) return true;
    return false;
  };
  for (int m : members) {
    int i = p.index_of(m);
    if (i < 0) return false;
    for (std::size_t j = 0; j < p.elems.size(); ++j)
      if (p.leq[i][j] && !in(p.elems[j])) return false;
  }
  for (int a : members)
    for (int b : members) {
      bool found = false;
      for (int z : members)
        if (p.leq[p.index_of(z)][p.index_of(a)] && p.leq[p.index_of(z)][p.index_of(b)]) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

SymbolicFamily family(const std::string& ctor, EventualSequence::Tail tail, long value,
                      long offset = 0, std::map<long, long> exceptions = {}) {
  SymbolicFamily f;
  f.seq.ctor = ctor;
  f.seq.tail = tail;
  f.seq.value = value;
  f.seq.offset = offset;
  f.seq.exceptions = std::move(exceptions);
  return f;
}

/// Direct cofiniteness of {n : the member at truncation d is discrete}:
/// compute a window and extrapolate the tail, which is eventually periodic
/// with period at most 2 for every supported tail shape.
Decision direct_cofinite_discrete(const SymbolicFamily& f, int d) {
  constexpr long kWindow = 30;
  std::vector<bool> disc;
  for (long n = 0; n <= kWindow; ++n) disc.push_back(sset_discrete(family_value(f, n, d)));
  for (int period : {1, 2}) {
    bool periodic = true;
    for (long n = kWindow - 9; n <= kWindow - period; ++n)
      if (disc[n] != disc[n + period]) periodic = false;
    if (!periodic) continue;
    bool tail_true = true;
    for (long n = kWindow - period + 1; n <= kWindow; ++n) tail_true = tail_true && disc[n];
    return tail_true ? Decision::Yes : Decision::No;
  }
  return Decision::Undecidable;
}

}  // namespace

int main() {
  Gate gate;
  using T = EventualSequence::Tail;

  BuiltinPairs b;

  // 1. the projection preserves (co)limits, monos, exponentials, classifier
  gate.start();
  {
    bool ok = true;
    std::string detail;
    for (auto& pr : b.pairs) {
      auto q = filter_quotient(*pr.cat, pr.filter);
      if (!q || !verify_projection(*q).ok()) {
        ok = false;
        detail += " " + pr.name;
      }
    }
    gate.line(1, ok, "projection preservation suite on 4 built-in pairs" + detail);
  }

  // 2. the principal filter product over two indices collapses to the base
  gate.start();
  {
    auto prod = finite_filter_product(b.finset2, 2, principal_subset_filter(2, 1u));
    bool ok = prod != nullptr;
    if (ok) ok = find_equivalence(prod->quotient.quotient, b.finset2).has_value();
    gate.line(2, ok, "principal two-index product equivalent to the base, by explicit functors");
  }

  // 3. germ-mono biconditional on every built-in pair
  gate.start();
  {
    bool ok = true;
    for (auto& pr : b.pairs) {
      auto q = filter_quotient(*pr.cat, pr.filter);
      if (!q || !germ_mono_characterization(*q).ok()) ok = false;
    }
    gate.line(3, ok, "germ-mono biconditional with zero counterexamples on 4 built-in pairs");
  }

  // 4. the transferred model structure on the square of finset2
  gate.start();
  {
    FinCategory pair = product_category(b.finset2, b.finset2);
    auto poset = subterminal_poset(pair);
    auto phi = principal_filter(poset, poset.representative(pair.find_object("(1,0)")));
    bool ok = phi.has_value();
    if (ok) {
      ModelStructureData m{&pair, class_all(pair), class_all(pair), class_isos(pair)};
      ProductTable pt(pair);
      auto q = filter_quotient(pair, *phi);
      ok = q.has_value() && validate_model_filter(m, pt, *phi).ok();
      if (ok) {
        auto tr = transfer_model_structure(m, *q);
        ok = tr.report.ok() && verify_model_structure(tr.model).ok();
      }
    }
    gate.line(4, ok, "transferred model structure at the corner filter passes WFS and 2-of-3");
  }

  // 5. the shapes pipeline
  gate.start();
  {
    auto sb = builtin_interval_fragment();
    bool ok = validate_shapes_tuple(sb->tuple).ok() &&
              check_strict_interval(sb->tuple.theory, sb->tuple.interval).ok();
    auto q = quotient_shapes_tuple(sb->tuple, sb->triple);
    ok = ok && q->complete && q->report.ok() && validate_shapes_tuple(q->tuple).ok() &&
         check_strict_interval(q->tuple.theory, q->tuple.interval).ok();
    gate.line(5, ok, "built-in and quotient shapes tuples pass the validator and the interval check");
  }

  // 6. symbolic external discreteness against the direct window oracle
  gate.start();
  {
    std::vector<SymbolicFamily> fams = {
        family("sphere", T::Identity, 0),
        family("sphere", T::Identity, 0, 2),
        family("sphere", T::FloorHalf, 0, 1),
        family("sphere", T::Parity, 0),
        family("sphere", T::Constant, 0),
        family("sphere", T::Constant, 2),
        family("simplex", T::Constant, 0),
        family("boundary", T::Constant, 1),
        family("constant", T::Constant, 3),
        family("simplex", T::Identity, 0, 0, {{0, 1}}),
    };
    bool ok = fams.size() >= 10;
    for (auto& f : fams) {
      auto symbolic = frechet_externally_discrete(f, 3);
      auto direct = direct_cofinite_discrete(f, 3);
      if (symbolic == Decision::Undecidable || symbolic != direct) ok = false;
    }
    gate.line(6, ok, "symbolic discreteness criterion agrees with the direct oracle on 10 families");
  }

  // 7. the unique-arrow conditions and the exhaustive search
  gate.start();
  {
    bool ok = true;
    SsetContext ctx1;
    SsetContext ctx2;
    ctx2.copies = 2;
    ctx2.support = {1};
    for (auto* ctx : {&ctx1, &ctx2}) {
      int checked = 0;
      for (auto& u : context_subterminals(*ctx)) {
        if (germ_initial(*ctx, u)) continue;
        auto rep = unique_arrow_check(*ctx, u, interval_object(*ctx, u));
        for (auto& it : rep.items)
          if (it.status != Status::Pass) ok = false;
        ++checked;
      }
      if (checked == 0) ok = false;
    }
    auto res = unique_arrow_search(ctx1, {sset_terminal(ctx1.d)}, 6);
    ok = ok && res.report.ok() && res.alternatives == 0 && res.passing >= 2;
    gate.line(7, ok,
              "interval passes all six conditions in two contexts; no alternative up to 6 cells (" +
                  std::to_string(res.examined) + " candidates)");
  }

  // 8. the divergence window at N = 50
  gate.start();
  {
    auto res = dn_sequence(family("sphere", T::FloorHalf, 0, 1), 50);
    bool ok = res.diverges && res.report.ok();
    for (long n = 0; n <= 50; ++n)
      if (res.d[n] != n / 2) ok = false;
    auto flat = dn_sequence(family("simplex", T::Constant, 1), 50);
    ok = ok && !flat.diverges;
    for (long dn : flat.d)
      if (dn != 0) ok = false;
    gate.line(8, ok, "d_n = floor(n/2) diverges on window 50 with factorizations; constant interval stays at 0");
  }

  // 9. randomized filter laws against the three-clause oracle
  gate.start();
  {
    std::mt19937 rng(90210);
    FinCategory dummy;
    dummy.name = "random-poset";
    int trials = 0, agreements = 0;
    while (trials < 200) {
      int k = 2 + static_cast<int>(rng() % 5);
      dummy.objects.clear();
      for (int i = 0; i < k; ++i) dummy.objects.push_back("u" + std::to_string(i));
      SubterminalPoset p;
      p.cat = &dummy;
      for (int i = 0; i < k; ++i) p.elems.push_back(i);
      // random order relation compatible with 0 < 1 < ... then closed up
      p.leq.assign(k, std::vector<bool>(k, false));
      for (int i = 0; i < k; ++i) p.leq[i][i] = true;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) p.leq[i][j] = (rng() % 3) == 0;
      for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            if (p.leq[i][m] && p.leq[m][j]) p.leq[i][j] = true;
      for (int s = 0; s < 10 && trials < 200; ++s) {
        std::vector<int> members;
        for (int i = 0; i < k; ++i)
          if (rng() & 1u) members.push_back(i);
        ++trials;
        if (validate_filter(p, members).ok() == filter_oracle(p, members)) ++agreements;
      }
    }
    gate.line(9, agreements == trials,
              "validate_filter agrees with the three-clause oracle on " +
                  std::to_string(agreements) + "/200 randomized subsets");
  }

  return gate.failures == 0 ? 0 : 1;
}
