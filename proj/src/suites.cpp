#include "ordnot/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "ordnot/cnf.hpp"
#include "ordnot/error.hpp"
#include "ordnot/generators.hpp"
#include "ordnot/kernels.hpp"
#include "ordnot/qo.hpp"
#include "ordnot/ramsey.hpp"
#include "ordnot/theta.hpp"
#include "ordnot/trees.hpp"
#include "ordnot/wop.hpp"

namespace ordnot {

void Budget::charge(std::uint64_t units, std::string_view what) {
  used_ += units;
  if (used_ > limit_)
    throw BudgetExceeded(std::string(what) + " needs more than " + std::to_string(limit_) + " checks");
}

void SuiteReport::fail(std::string message) {
  ++violation_count;
  if (violations.size() < 20) violations.push_back(std::move(message));
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j = {{"suite", suite},
                      {"cases", cases},
                      {"passed", passed()},
                      {"violation_count", violation_count},
                      {"violations", violations}};
  if (wall_ms) j["wall_ms"] = *wall_ms;
  return j;
}

namespace {

struct Context {
  Budget& budget;
  SuiteReport& report;

  void charge(std::uint64_t n) {
    budget.charge(n, report.suite);
    report.cases += n;
  }
  void absorb(const kernels::Violations& v, const std::string& what,
              const std::function<std::string(std::size_t, std::size_t)>& describe) {
    for (const auto& [i, j] : v.sample) report.fail(what + ": " + describe(i, j));
    // Samples are capped; account for the rest.
    if (v.count > v.sample.size()) report.violation_count += v.count - v.sample.size();
  }
};

// Work units for n^2 pair checks.
std::uint64_t squared(std::size_t n) { return static_cast<std::uint64_t>(n) * n; }

// ---------------------------------------------------------------------------
// Term order

// Terms of size <= 7 carry at most two tail degrees and the order only looks
// at how degrees compare, so degrees 0..5 realize every pattern a triple of
// such terms can show.
EnumerateOptions term_universe(const Budget& budget) {
  EnumerateOptions opts;
  opts.max_degree = 5;
  opts.budget = static_cast<std::size_t>(std::min<std::uint64_t>(budget.limit(), 10'000'000));
  return opts;
}

void suite_g_order(Context& ctx) {
  const BaseOrder x = BaseOrder::chain(3);
  const auto terms = enumerate_terms(x, 7, term_universe(ctx.budget));
  ctx.charge(terms.size());
  auto show = [&](std::size_t i, std::size_t j) {
    return to_string(terms[i], x) + " | " + to_string(terms[j], x);
  };

  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (auto wf = check_well_formed(terms[i], x); !wf)
      ctx.report.fail("enumerated ill-formed term " + to_string(terms[i], x) + " at " + wf.path);
    if (i > 0 && terms[i - 1] == terms[i]) ctx.report.fail("duplicate term " + to_string(terms[i], x));
  }

  ctx.charge(squared(terms.size()) / 2);
  auto tri = kernels::omp::trichotomy(terms.size(), [&](std::size_t i, std::size_t j) {
    return less_g(terms[i], terms[j]);
  });
  ctx.absorb(tri, "trichotomy", show);

  // Transitivity is required on the size <= 5 terms; the whole universe is
  // small enough to check.
  ctx.charge(squared(terms.size()));
  std::atomic<std::size_t> depth_violations{0};
  auto rel = kernels::omp::relation_matrix(terms.size(), [&](std::size_t i, std::size_t j) {
    CompareTrace trace;
    const bool lt = less_g(terms[i], terms[j], &trace);
    if (trace.max_depth > terms[i].size() + terms[j].size()) ++depth_violations;
    return lt;
  });
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (rel.get(i, i)) ctx.report.fail("irreflexivity: " + to_string(terms[i], x));
  if (depth_violations > 0)
    ctx.report.fail("recursion depth exceeded size(a)+size(b) on " + std::to_string(depth_violations.load()) +
                    " pairs");
  ctx.charge(squared(terms.size()) * terms.size() / 64);
  auto trans = kernels::omp::transitivity(rel);
  ctx.absorb(trans, "transitivity", [&](std::size_t i, std::size_t j) {
    return to_string(terms[i], x) + " < " + to_string(terms[j], x) + " < ...";
  });
}

void suite_g_embedding(Context& ctx) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const BaseOrder x = BaseOrder::chain(n);
    ctx.charge(squared(n));
    for (Element a : x.elements())
      for (Element b : x.elements()) {
        const bool base = x.less(a, b);
        const bool consts = less_g(GTerm::constant(a), GTerm::constant(b));
        const bool thetas = less_g(gamma_omega_term(a, x), gamma_omega_term(b, x));
        if (base != consts || base != thetas)
          ctx.report.fail("carrier " + std::to_string(n) + ": " + x.name(a) + " vs " + x.name(b));
      }
  }
}

void suite_g_principality(Context& ctx) {
  const BaseOrder x = BaseOrder::chain(3);
  const auto terms = enumerate_terms(x, 6, term_universe(ctx.budget));
  std::vector<GTerm> thetas;
  std::vector<GTerm> sums;
  for (const auto& t : terms) {
    if (t.is_theta()) thetas.push_back(t);
    if (t.kind() == GTerm::Kind::sum) sums.push_back(t);
  }
  // Every admissible sum of size <= 6 whose summands lie below a theta term
  // lies below it as well; two-summand sums are the a >= b case.
  ctx.charge(static_cast<std::uint64_t>(thetas.size()) * sums.size());
  for (const auto& tau : thetas)
    for (const auto& s : sums) {
      bool below = true;
      for (const auto& part : s.summands()) below = below && less_g(part, tau);
      if (below != less_g(s, tau))
        ctx.report.fail("principality: " + to_string(s, x) + " vs " + to_string(tau, x));
    }
  // Pairs a >=_G b of theta terms of size <= 6, both below tau. Thetas are
  // ascending, so "below thetas[p]" is "index < p"; verify that too.
  const std::size_t n = thetas.size();
  ctx.charge(static_cast<std::uint64_t>(n) * n * n / 6 + n * n);
  std::vector<kernels::Violations> rows(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t p = 0; p < n; ++p) {
    const GTerm& tau = thetas[p];
    for (std::size_t i = 0; i < n; ++i)
      if (less_g(thetas[i], tau) != (i < p)) rows[p].record(i, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        ++rows[p].checked;
        if (!less_g(GTerm::sum({thetas[i], thetas[j]}), tau)) rows[p].record(p, i * n + j);
      }
  }
  kernels::Violations pairs;
  for (auto& r : rows) pairs.merge(std::move(r));
  ctx.absorb(pairs, "principality", [&](std::size_t p, std::size_t ij) {
    if (ij < n) return to_string(thetas[p], x) + " misplaced against " + to_string(thetas[ij], x);
    return to_string(thetas[ij / n], x) + " + " + to_string(thetas[ij % n], x) + " not below " +
           to_string(thetas[p], x);
  });

  // Anything <= a tail coefficient of b is below b.
  ctx.charge(static_cast<std::uint64_t>(terms.size()) * thetas.size());
  for (const auto& a : terms)
    for (const auto& b : thetas) {
      bool dominated = false;
      for (const auto& e : b.tail()) dominated = dominated || a == e.coeff || less_g(a, e.coeff);
      if (dominated && !less_g(a, b))
        ctx.report.fail("coefficient bound: " + to_string(a, x) + " not below " + to_string(b, x));
    }
}

// ---------------------------------------------------------------------------
// Trees

void suite_tree_embedding(Context& ctx) {
  const std::vector<std::pair<std::string, FiniteQO>> orders = {
      {"singleton", FiniteQO::singleton()}, {"2-chain", FiniteQO::chain(2)}, {"2-antichain", FiniteQO::antichain(2)}};
  for (const auto& [label, q] : orders) {
    const auto trees = enumerate_trees(q, 5);
    auto show = [&](std::size_t i, std::size_t j) {
      return label + " " + to_string(trees[i], q) + " vs " + to_string(trees[j], q);
    };
    ctx.charge(2 * squared(trees.size()));
    auto diff = kernels::omp::disagreements(
        trees.size(), [&](std::size_t i, std::size_t j) { return embeds(trees[i], trees[j], q); },
        [&](std::size_t i, std::size_t j) { return embeds_oracle(trees[i], trees[j], q); });
    ctx.absorb(diff, "oracle disagreement", show);

    auto rel = kernels::omp::relation_matrix(
        trees.size(), [&](std::size_t i, std::size_t j) { return embeds(trees[i], trees[j], q); });
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (!rel.get(i, i)) ctx.report.fail("reflexivity: " + label + " " + to_string(trees[i], q));
      for (std::size_t j = 0; j < trees.size(); ++j)
        if (rel.get(i, j) && (node_count(trees[i]) > node_count(trees[j]) || degree(trees[i]) > degree(trees[j])))
          ctx.report.fail("size monotonicity: " + show(i, j));
    }
    ctx.charge(squared(trees.size()) * trees.size() / 64);
    ctx.absorb(kernels::omp::transitivity(rel), "transitivity", show);
  }
}

// ---------------------------------------------------------------------------
// Quasi-orders

void suite_qo_extension(Context& ctx) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& q : qo_catalogue(k)) {
      for (std::size_t n = 1; n <= 4; ++n) {
        const FiniteQO plus = n_fold(q, n, FoldMode::plus);
        const FiniteQO times = n_fold(q, n, FoldMode::times);
        const FiniteQO dunion = n_fold(q, n, FoldMode::dunion);
        ctx.charge(squared(plus.size()));
        for (Index a = 0; a < plus.size(); ++a)
          for (Index b = 0; b < plus.size(); ++b) {
            if (dunion.le(a, b) && !times.le(a, b))
              ctx.report.fail("dunion not inside times: n=" + std::to_string(n) + " " + plus.name(a) + " " + plus.name(b));
            if (times.le(a, b) && !plus.le(a, b))
              ctx.report.fail("times not inside plus: n=" + std::to_string(n) + " " + plus.name(a) + " " + plus.name(b));
          }
        if (q.total() && !plus.total()) ctx.report.fail("plus not total over a total Q, n=" + std::to_string(n));
      }
    }
  }
  // Binary combinators of catalogue orders stay quasi-orders (the
  // constructors re-verify reflexivity and transitivity).
  std::vector<FiniteQO> small;
  for (std::size_t k = 1; k <= 3; ++k)
    for (auto& q : qo_catalogue(k)) small.push_back(std::move(q));
  ctx.charge(squared(small.size()) * 3);
  for (const auto& p : small)
    for (const auto& q : small) {
      try {
        (void)product(p, q);
        (void)sum(p, q);
        (void)disjoint_union(p, q);
      } catch (const DomainError& e) {
        ctx.report.fail(std::string("combinator produced an invalid quasi-order: ") + e.what());
      }
    }
}

std::string show_seq(const std::vector<Index>& seq, const FiniteQO& q) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + q.name(seq[i]);
  return out + "]";
}

void suite_qo_longest_bad(Context& ctx) {
  auto check = [&](const FiniteQO& q, std::optional<std::size_t> expected) {
    ctx.charge(1);
    const auto lb = longest_bad(q);
    const std::size_t want = expected ? *expected : q.quotient_size();
    const std::string rel = qo_to_json(q)["le"].dump();
    if (lb.length != want)
      ctx.report.fail("longest_bad " + std::to_string(lb.length) + " != " + std::to_string(want) + " for " + rel);
    if (lb.witness.size() != lb.length) ctx.report.fail("witness length mismatch for " + rel);
    if (good_pair(lb.witness, q)) ctx.report.fail("witness " + show_seq(lb.witness, q) + " is good for " + rel);
  };
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& q : qo_catalogue(k)) check(q, std::nullopt);
  check(product(FiniteQO::chain(2), FiniteQO::chain(2)), 4);
}

// Maximal bad sequences in Q^n (or prefixes reaching `cap`), as indices into
// the mixed-radix enumeration of Q^n.
class ProductSequences {
 public:
  ProductSequences(const FiniteQO& q, std::size_t n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q.size();
    for (std::size_t e = 0; e < total; ++e) {
      Tuple t(n);
      std::size_t rest = e;
      for (std::size_t k = n; k-- > 0;) {
        t[k] = static_cast<Index>(rest % q.size());
        rest /= q.size();
      }
      tuples_.push_back(std::move(t));
    }
    up_.assign(total, 0);
    for (std::size_t a = 0; a < total; ++a)
      for (std::size_t b = 0; b < total; ++b)
        if (product_le(tuples_[a], tuples_[b], q)) up_[a] |= std::uint64_t{1} << b;
  }

  std::size_t elements() const { return tuples_.size(); }
  std::uint64_t all() const { return tuples_.size() == 64 ? ~0ULL : (1ULL << tuples_.size()) - 1; }

  void exhaustive(std::size_t cap, const std::function<void(const std::vector<Tuple>&)>& visit) const {
    std::vector<std::size_t> seq;
    walk(all(), cap, seq, visit);
  }

  std::vector<Tuple> random(std::size_t cap, std::mt19937_64& rng) const {
    std::vector<Tuple> out;
    std::uint64_t avail = all();
    while (avail != 0 && out.size() < cap) {
      std::vector<std::size_t> cands;
      for (std::size_t e = 0; e < tuples_.size(); ++e)
        if (avail >> e & 1u) cands.push_back(e);
      const auto pick = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
      out.push_back(tuples_[pick]);
      avail &= ~up_[pick];
    }
    return out;
  }

 private:
  std::vector<Tuple> tuples_;
  std::vector<std::uint64_t> up_;

  void walk(std::uint64_t avail, std::size_t cap, std::vector<std::size_t>& seq,
            const std::function<void(const std::vector<Tuple>&)>& visit) const {
    if (avail == 0 || seq.size() == cap) {
      std::vector<Tuple> out;
      for (auto e : seq) out.push_back(tuples_[e]);
      visit(out);
      return;
    }
    for (std::size_t e = 0; e < tuples_.size(); ++e) {
      if (!(avail >> e & 1u)) continue;
      seq.push_back(e);
      walk(avail & ~up_[e], cap, seq, visit);
      seq.pop_back();
    }
  }
};

constexpr std::size_t kPrefixCap = 10;
constexpr std::size_t kExhaustiveLimit = 9;  // |Q|^n up to this is enumerated
constexpr std::size_t kSamplesPerOrder = 300;

void check_colouring(Context& ctx, const std::vector<Tuple>& seq, const FiniteQO& q, std::size_t n) {
  std::optional<Colouring> coloured;
  try {
    coloured = colour_bad_product_seq(seq, q, n);
  } catch (const DomainError& e) {
    ctx.report.fail(std::string("colouring rejected a bad sequence: ") + e.what());
    return;
  }
  const Colouring& c = *coloured;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      const auto k = c.at(i, j);
      bool least = !q.le(seq[i][k], seq[j][k]);
      for (std::uint32_t l = 0; l < k; ++l) least = least && q.le(seq[i][l], seq[j][l]);
      if (!least) ctx.report.fail("colour is not the least witnessing component");
    }
  for (const auto& h : homogeneous_subsets(c)) {
    const auto k = c.at(h[0], h[1]);
    std::vector<Index> projected;
    for (auto i : h) projected.push_back(seq[i][k]);
    if (good_pair(projected, q)) ctx.report.fail("homogeneous subset with good projection");
  }
}

void suite_ramsey_colouring(Context& ctx) {
  std::mt19937_64 rng(0x5eed'2024);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const auto& q : qo_catalogue(k)) {
      for (std::size_t n = 1; n <= 3; ++n) {
        ProductSequences space(q, n);
        if (space.elements() <= kExhaustiveLimit) {
          space.exhaustive(kPrefixCap, [&](const std::vector<Tuple>& seq) {
            ctx.charge(1);
            check_colouring(ctx, seq, q, n);
          });
        } else {
          for (std::size_t s = 0; s < kSamplesPerOrder; ++s) {
            ctx.charge(1);
            check_colouring(ctx, space.random(kPrefixCap, rng), q, n);
          }
        }
      }
    }
  }
}

void suite_pigeonhole_order(Context& ctx) {
  std::mt19937_64 rng(0x0dd5'eed5);
  for (int round = 0; round < 200; ++round) {
    const auto len = std::uniform_int_distribution<std::size_t>(0, 50)(rng);
    const auto m = std::uniform_int_distribution<std::uint32_t>(1, 5)(rng);
    std::vector<std::uint32_t> prefix(len);
    for (auto& v : prefix) v = std::uniform_int_distribution<std::uint32_t>(0, m - 1)(rng);
    ctx.charge(1 + squared(len) + static_cast<std::uint64_t>(len) * len * len);
    PigeonholeOrder po;
    try {
      po = pigeonhole_order(prefix, m);
    } catch (const std::logic_error& e) {
      ctx.report.fail(std::string("postcondition: ") + e.what());
      continue;
    }
    auto lt = [&](std::size_t i, std::size_t j) { return po.alpha_less(i, j); };
    for (std::size_t i = 0; i < len; ++i) {
      if (lt(i, i)) ctx.report.fail("alpha not irreflexive");
      for (std::size_t j = 0; j < len; ++j) {
        if (i != j && lt(i, j) == lt(j, i)) ctx.report.fail("alpha not total/asymmetric");
        if (!lt(i, j)) continue;
        for (std::size_t l = 0; l < len; ++l)
          if (lt(j, l) && !lt(i, l)) ctx.report.fail("alpha not transitive");
      }
    }
    // No good pair under (k, i) <=_x (k', j) :<=> k <= k' and i <=_alpha j,
    // with <=_alpha evaluated from its definition.
    auto alpha_le = [&](std::size_t i, std::size_t j) {
      return i == j || prefix[i] < prefix[j] || (prefix[i] == prefix[j] && i > j);
    };
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = i + 1; j < len; ++j) {
        const auto [ki, ei] = po.seq[i];
        const auto [kj, ej] = po.seq[j];
        if (ki != m - 1 - prefix[i] || ei != i) ctx.report.fail("sequence entry mismatch");
        if (ki <= kj && alpha_le(ei, ej))
          ctx.report.fail("good pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  }
}

// ---------------------------------------------------------------------------
// Ordinals

constexpr int kRandomCases = 10'000;

void suite_cnf_arithmetic(Context& ctx) {
  std::mt19937_64 rng(0xc0ffee);
  auto rand = [&] { return random_ordinal(rng, 3); };
  auto show = [](const Ordinal& a) { return to_string(a); };

  for (int i = 0; i < kRandomCases; ++i) {
    ctx.charge(8);
    const Ordinal a = rand(), b = rand(), c = rand();
    if (nat_sum(a, b) != nat_sum(b, a)) ctx.report.fail("nat_sum not commutative: " + show(a) + ", " + show(b));
    if (nat_prod(a, b) != nat_prod(b, a)) ctx.report.fail("nat_prod not commutative: " + show(a) + ", " + show(b));
    if (nat_sum(nat_sum(a, b), c) != nat_sum(a, nat_sum(b, c))) ctx.report.fail("nat_sum not associative");
    if (nat_prod(nat_prod(a, b), c) != nat_prod(a, nat_prod(b, c))) ctx.report.fail("nat_prod not associative");
    if (nat_prod(a, nat_sum(b, c)) != nat_sum(nat_prod(a, b), nat_prod(a, c)))
      ctx.report.fail("nat_prod does not distribute: " + show(a) + ", " + show(b) + ", " + show(c));
    if (add(a, b) > nat_sum(a, b)) ctx.report.fail("add exceeds nat_sum: " + show(a) + ", " + show(b));
    const auto& [lo, hi] = a < b ? std::pair{a, b} : std::pair{b, a};
    if (lo < hi && !(nat_sum(lo, c) < nat_sum(hi, c))) ctx.report.fail("nat_sum not strictly monotone");
    if (gamma_plus(a) != mul(a, Ordinal::omega())) ctx.report.fail("gamma_plus != a*w for " + show(a));
    if (gamma_plus(lo) > gamma_plus(hi) || gamma_times(lo) > gamma_times(hi))
      ctx.report.fail("gamma not monotone: " + show(lo) + ", " + show(hi));
  }

  // Sandwich pow_n(a, k-1) <= b < pow_n(a, k) for k = approx_index(b, a).
  const Ordinal two = Ordinal::natural(2);
  int sandwiches = 0;
  while (sandwiches < kRandomCases) {
    Ordinal a = rand();
    if (a < two) continue;
    Ordinal b = rand();
    if (a.is_finite()) b = Ordinal::natural(std::uniform_int_distribution<std::uint64_t>(0, 1'000'000)(rng));
    if (!(b < gamma_times(a))) continue;
    ++sandwiches;
    ctx.charge(3);
    const auto k = approx_index(b, a);
    if (!(b < pow_n(a, k))) ctx.report.fail("approx_index too small: " + show(b) + " base " + show(a));
    if (k >= 1 && !(pow_n(a, k - 1) <= b)) ctx.report.fail("approx_index not least: " + show(b) + " base " + show(a));
    if (!(pow_n(a, k + 1) < gamma_times(a))) ctx.report.fail("pow_n reaches gamma_times for " + show(a));
  }

  ctx.charge(6);
  for (std::uint64_t n = 1; n < 6; ++n)
    if (!(omega_tower(n) < omega_tower(n + 1))) ctx.report.fail("omega_tower not increasing at " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Kleene-Brouwer

bool reference_kb_less(const std::vector<Index>& s, const std::vector<Index>& t) {
  if (s.size() > t.size() && std::equal(t.begin(), t.end(), s.begin())) return true;
  for (std::size_t k = 0; k < std::min(s.size(), t.size()); ++k)
    if (s[k] != t[k]) return s[k] < t[k];
  return false;
}

std::size_t count_bad_sequences(const FiniteQO& q) {
  // Bad sequences never repeat an element, so they are arrangements of subsets.
  std::size_t count = 0;
  std::vector<Index> seq;
  std::vector<bool> used(q.size(), false);
  std::function<void()> rec = [&] {
    if (!good_pair(seq, q)) ++count;
    else return;
    for (Index e = 0; e < q.size(); ++e) {
      if (used[e]) continue;
      used[e] = true;
      seq.push_back(e);
      rec();
      seq.pop_back();
      used[e] = false;
    }
  };
  rec();
  return count;
}

void suite_kb_linearization(Context& ctx) {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& q : qo_catalogue(k)) {
      const auto tree = BadSeqTree::build(q);
      const auto order = kb_linearize(tree);
      ctx.charge(squared(order.size()) + tree.size());
      const std::string rel = qo_to_json(q)["le"].dump();
      if (tree.size() != count_bad_sequences(q)) ctx.report.fail("tree size differs from bad-sequence count for " + rel);
      if (order.size() != tree.size()) {
        ctx.report.fail("linearization size mismatch for " + rel);
        continue;
      }
      std::vector<std::size_t> pos(order.size(), order.size());
      for (std::size_t i = 0; i < order.size(); ++i) pos.at(order[i]) = i;
      if (std::find(pos.begin(), pos.end(), order.size()) != pos.end()) {
        ctx.report.fail("linearization is not a permutation for " + rel);
        continue;
      }
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (good_pair(tree.sequence(order[i]), q)) ctx.report.fail("tree node is not bad for " + rel);
        for (std::size_t j = i + 1; j < order.size(); ++j) {
          const auto& s = tree.sequence(order[i]);
          const auto& t = tree.sequence(order[j]);
          if (!reference_kb_less(s, t) || reference_kb_less(t, s))
            ctx.report.fail("order disagrees with Kleene-Brouwer at " + show_seq(s, q) + " / " + show_seq(t, q));
        }
      }
      for (std::size_t node = 1; node < tree.size(); ++node)
        if (pos[node] > pos[*tree.parent(node)]) ctx.report.fail("child after parent for " + rel);
    }
  }
}

// ---------------------------------------------------------------------------
// Round trips

void suite_round_trip(Context& ctx) {
  const auto ordinals = enumerate_cnf(3);
  ctx.charge(ordinals.size());
  for (const auto& a : ordinals) {
    const std::string text = to_string(a);
    try {
      const Ordinal back = parse_ordinal(text);
      if (back != a || to_string(back) != text) ctx.report.fail("ordinal round trip: " + text);
    } catch (const ParseError& e) {
      ctx.report.fail(std::string("ordinal reparse failed: ") + e.what());
    }
  }

  const BaseOrder x = BaseOrder::chain(3);
  const auto terms = enumerate_terms(x, 6, term_universe(ctx.budget));
  ctx.charge(terms.size());
  for (const auto& t : terms) {
    const std::string text = to_string(t, x);
    try {
      const GTerm back = parse_gterm(text, x);
      if (!(back == t) || to_string(back, x) != text) ctx.report.fail("term round trip: " + text);
    } catch (const ParseError& e) {
      ctx.report.fail(std::string("term reparse failed: ") + e.what());
    }
  }

  for (const auto& q : {FiniteQO::singleton(), FiniteQO::antichain(2)}) {
    const auto trees = enumerate_trees(q, 4);
    ctx.charge(trees.size());
    for (const auto& t : trees) {
      const std::string text = to_string(t, q);
      try {
        const LabelledTree back = parse_tree(text, q);
        if (!(back == t) || to_string(back, q) != text) ctx.report.fail("tree round trip: " + text);
      } catch (const ParseError& e) {
        ctx.report.fail(std::string("tree reparse failed: ") + e.what());
      }
    }
  }
}

struct SuiteEntry {
  SuiteInfo info;
  void (*run)(Context&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {{"g-order", "G_w(3-chain) terms of size <= 7, tail degrees <= 5: trichotomy, transitivity, "
                   "irreflexivity and recursion-depth bound on all pairs and triples"},
       suite_g_order},
      {{"g-embedding", "x <_X y iff c_x <_G c_y iff theta(c_x) <_G theta(c_y), carriers up to 20"},
       suite_g_embedding},
      {{"g-principality", "sums below a theta term when all summands are; coefficient bound, size <= 6"},
       suite_g_principality},
      {{"tree-embedding", "memoized embedding equals brute force on trees <= 5 nodes; quasi-order laws"},
       suite_tree_embedding},
      {{"qo-extension", "dunion <= times <= plus on n x Q, n <= 4, |Q| <= 4; plus total over total Q"},
       suite_qo_extension},
      {{"qo-longest-bad", "longest bad sequence equals the quotient size, |Q| <= 4"}, suite_qo_longest_bad},
      {{"ramsey-colouring", "colouring of bad product sequences and homogeneous projections, n <= 3, |Q| <= 3"},
       suite_ramsey_colouring},
      {{"pigeonhole-order", "alpha is a strict linear order and the sequence is bad, 200 random prefixes"},
       suite_pigeonhole_order},
      {{"cnf-arithmetic", "natural operations, ordinal sum bound, approximation sandwich, towers"},
       suite_cnf_arithmetic},
      {{"kb-linearization", "Kleene-Brouwer order on the bad-sequence tree, |Q| <= 4"}, suite_kb_linearization},
      {{"round-trip", "print/parse identity for ordinals, terms and trees"}, suite_round_trip},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalogue() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

SuiteReport run_suite(std::string_view name, Budget& budget) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    SuiteReport report;
    report.suite = e.info.name;
    Context ctx{budget, report};
    e.run(ctx);
    return report;
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace ordnot
