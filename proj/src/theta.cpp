#include "ordnot/theta.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

#include <omp.h>

#include "ordnot/error.hpp"

namespace ordnot {

// ---------------------------------------------------------------------------
// BaseOrder

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

BaseOrder::BaseOrder(std::vector<std::string> ascending) : names_(std::move(ascending)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i]))
      throw DomainError("base order element '" + names_[i] + "' is not an identifier");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw DomainError("duplicate base order element '" + names_[i] + "'");
  }
}

BaseOrder BaseOrder::chain(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return BaseOrder(std::move(names));
}

const std::string& BaseOrder::name(Element x) const {
  if (!contains(x)) throw DomainError("element index " + std::to_string(x.index) + " not in carrier");
  return names_[x.index];
}

std::optional<Element> BaseOrder::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Element{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

std::vector<Element> BaseOrder::elements() const {
  std::vector<Element> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back({static_cast<std::uint32_t>(i)});
  return out;
}

// ---------------------------------------------------------------------------
// GTerm

struct GTerm::Node {
  Kind kind = Kind::zero;
  Element element;
  std::vector<GTailEntry> tail;
  std::vector<GTerm> summands;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

GTerm::GTerm() = default;

GTerm GTerm::constant(Element x) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->element = x;
  n->hash = mix(mix(0, 1), x.index);
  return GTerm(std::move(n));
}

GTerm GTerm::theta(Element head, std::vector<GTailEntry> tail) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::theta;
  n->element = head;
  n->size = 2;
  n->hash = mix(mix(0, 2), head.index);
  for (const auto& e : tail) {
    n->size += 1 + e.coeff.size();
    n->hash = mix(mix(n->hash, e.degree), e.coeff.hash());
  }
  n->tail = std::move(tail);
  return GTerm(std::move(n));
}

GTerm GTerm::sum(std::vector<GTerm> summands) {
  if (summands.empty()) throw DomainError("empty sum");
  if (summands.size() == 1) return std::move(summands.front());
  auto n = std::make_shared<Node>();
  n->kind = Kind::sum;
  n->size = 0;
  n->hash = mix(0, 3);
  for (const auto& s : summands) {
    n->size += s.size();
    n->hash = mix(n->hash, s.hash());
  }
  n->summands = std::move(summands);
  return GTerm(std::move(n));
}

GTerm::Kind GTerm::kind() const { return node_ ? node_->kind : Kind::zero; }

Element GTerm::element() const {
  if (kind() != Kind::constant && kind() != Kind::theta)
    throw DomainError("term has no element");
  return node_->element;
}

std::span<const GTailEntry> GTerm::tail() const {
  if (!node_) return {};
  return node_->tail;
}

std::span<const GTerm> GTerm::summands() const {
  if (!node_) return {};
  return node_->summands;
}

std::size_t GTerm::size() const { return node_ ? node_->size : 1; }

std::size_t GTerm::hash() const { return node_ ? node_->hash : 0; }

bool operator==(const GTerm& a, const GTerm& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.size != y.size || x.kind != y.kind) return false;
  switch (x.kind) {
    case GTerm::Kind::zero:
      return true;
    case GTerm::Kind::constant:
      return x.element == y.element;
    case GTerm::Kind::theta:
      return x.element == y.element && x.tail == y.tail;
    case GTerm::Kind::sum:
      return x.summands == y.summands;
  }
  return false;
}

// ---------------------------------------------------------------------------
// The order <_G

namespace {

using Kind = GTerm::Kind;

class Comparator {
 public:
  explicit Comparator(CompareTrace* trace) : trace_(trace) {}

  bool less(const GTerm& a, const GTerm& b, std::size_t depth) {
    if (trace_) {
      ++trace_->calls;
      trace_->max_depth = std::max(trace_->max_depth, depth);
    }
    if (a == b) return false;

    // 0 below everything, constants ordered by X.
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    const Kind ka = a.kind();
    const Kind kb = b.kind();
    // Constants sit below every Theta and every Sum.
    if (ka == Kind::constant) return kb != Kind::constant || a.element() < b.element();
    if (kb == Kind::constant) return false;

    if (ka == Kind::sum && kb == Kind::sum) return sum_less(a.summands(), b.summands(), depth);
    if (ka == Kind::sum) {
      // A sum is below b when every summand is.
      for (const auto& s : a.summands())
        if (!less(s, b, depth + 1)) return false;
      return true;
    }
    if (kb == Kind::sum) {
      // Below a sum when at or below its first summand.
      const GTerm& first = b.summands().front();
      return a == first || less(a, first, depth + 1);
    }
    return theta_less(a, b, depth);
  }

 private:
  CompareTrace* trace_;

  // Lexicographic on summands, a proper prefix first.
  bool sum_less(std::span<const GTerm> as, std::span<const GTerm> bs, std::size_t depth) {
    const std::size_t n = std::min(as.size(), bs.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (as[i] == bs[i]) continue;
      return less(as[i], bs[i], depth + 1);
    }
    return as.size() < bs.size();
  }

  bool coefficients_below(const GTerm& a, const GTerm& b, std::size_t depth) {
    for (const auto& e : a.tail())
      if (!less(e.coeff, b, depth + 1)) return false;
    return true;
  }

  static long top_degree(const GTerm& t) {
    return t.tail().empty() ? -1 : static_cast<long>(t.tail().front().degree);
  }

  // Two theta terms.
  bool theta_less(const GTerm& a, const GTerm& b, std::size_t depth) {
    // a <= some coefficient of b.
    for (const auto& e : b.tail())
      if (a == e.coeff || less(a, e.coeff, depth + 1)) return true;

    const Element x = a.element();
    const Element y = b.element();
    // Smaller head.
    if (x < y) return coefficients_below(a, b, depth);
    if (y < x) return false;
    const long n = top_degree(a);
    const long m = top_degree(b);
    // Same head, smaller top degree.
    if (n < m) return coefficients_below(a, b, depth);
    if (n > m) return false;
    // Same head and top degree: the first differing coefficient, scanning
    // from the highest degree, with absent degrees read as 0. The tail of a
    // must also lie below b.
    auto ta = a.tail();
    auto tb = b.tail();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ta.size() || j < tb.size()) {
      const long da = i < ta.size() ? static_cast<long>(ta[i].degree) : -1;
      const long db = j < tb.size() ? static_cast<long>(tb[j].degree) : -1;
      if (da == db) {
        if (!(ta[i].coeff == tb[j].coeff)) {
          return less(ta[i].coeff, tb[j].coeff, depth + 1) && coefficients_below(a, b, depth);
        }
        ++i;
        ++j;
      } else if (da > db) {
        return false;  // b has 0 at degree da
      } else {
        return coefficients_below(a, b, depth);  // a has 0 at degree db
      }
    }
    return false;
  }
};

}  // namespace

bool less_g(const GTerm& a, const GTerm& b, CompareTrace* trace) {
  return Comparator(trace).less(a, b, 1);
}

std::strong_ordering compare_unchecked(const GTerm& a, const GTerm& b, CompareTrace* trace) {
  if (a == b) return std::strong_ordering::equal;
  return less_g(a, b, trace) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering compare_g(const GTerm& a, const GTerm& b, const BaseOrder& order) {
  for (const GTerm* t : {&a, &b}) {
    auto wf = check_well_formed(*t, order);
    if (!wf) throw DomainError("ill-formed term at " + wf.path + ": " + wf.reason);
  }
  return compare_unchecked(a, b);
}

// ---------------------------------------------------------------------------
// Well-formedness

namespace {

WellFormedness violation(std::string path, std::string reason) {
  return {false, std::move(path), std::move(reason)};
}

WellFormedness check_at(const GTerm& t, const BaseOrder& order, const std::string& path) {
  switch (t.kind()) {
    case Kind::zero:
      return {};
    case Kind::constant:
      if (!order.contains(t.element())) return violation(path, "constant outside the carrier");
      return {};
    case Kind::theta: {
      if (!order.contains(t.element())) return violation(path, "theta head outside the carrier");
      auto tail = t.tail();
      for (std::size_t i = 0; i < tail.size(); ++i) {
        const std::string here = path + ".tail[" + std::to_string(i) + "]";
        if (i > 0 && tail[i - 1].degree <= tail[i].degree)
          return violation(here, "degrees must be strictly decreasing");
        if (tail[i].coeff.is_zero()) return violation(here + ".coeff", "coefficient must be nonzero");
        if (auto wf = check_at(tail[i].coeff, order, here + ".coeff"); !wf) return wf;
      }
      return {};
    }
    case Kind::sum: {
      auto parts = t.summands();
      if (parts.size() < 2) return violation(path, "a sum needs at least two summands");
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string here = path + ".summand[" + std::to_string(i) + "]";
        if (!parts[i].is_theta()) return violation(here, "summands must start with theta");
        if (auto wf = check_at(parts[i], order, here); !wf) return wf;
        if (i > 0 && less_g(parts[i - 1], parts[i]))
          return violation(here, "summands must be non-increasing");
      }
      return {};
    }
  }
  return violation(path, "unknown constructor");
}

}  // namespace

WellFormedness check_well_formed(const GTerm& t, const BaseOrder& order) {
  return check_at(t, order, "root");
}

GTerm gamma_omega_term(Element x, const BaseOrder& order) {
  if (!order.contains(x)) throw DomainError("element index " + std::to_string(x.index) + " not in carrier");
  return GTerm::theta(x);
}

// ---------------------------------------------------------------------------
// Enumeration by size stratum

namespace {

class Enumerator {
 public:
  Enumerator(const BaseOrder& order, std::size_t max_size, const EnumerateOptions& options)
      : order_(order), max_size_(max_size), options_(options), strata_(max_size + 1) {}

  std::vector<GTerm> run() {
    if (max_size_ < 1) throw DomainError("enumerate_terms: max_size must be >= 1");
    auto& first = strata_[1];
    first.push_back(GTerm::zero());
    for (Element x : order_.elements()) first.push_back(GTerm::constant(x));
    charge(first.size());

    for (std::size_t s = 2; s <= max_size_; ++s) {
      build_thetas(s);
      build_sums(s);
    }

    std::vector<GTerm> all;
    for (auto& stratum : strata_) all.insert(all.end(), stratum.begin(), stratum.end());
    std::sort(all.begin(), all.end(),
              [](const GTerm& a, const GTerm& b) { return less_g(a, b); });
    return all;
  }

 private:
  const BaseOrder& order_;
  std::size_t max_size_;
  EnumerateOptions options_;
  std::vector<std::vector<GTerm>> strata_;
  std::size_t produced_ = 0;

  void charge(std::size_t n) {
    produced_ += n;
    if (produced_ > options_.budget)
      throw BudgetExceeded("enumerate_terms produced more than " + std::to_string(options_.budget) +
                           " terms");
  }

  // Tails whose entries cost sum(1 + size(coeff)) == cost, degrees below `below`.
  void tails(std::size_t cost, long below, std::vector<GTailEntry>& prefix,
             std::vector<std::vector<GTailEntry>>& out) const {
    if (cost == 0) {
      out.push_back(prefix);
      return;
    }
    for (long d = below - 1; d >= 0; --d) {
      for (std::size_t cs = 1; cs + 1 <= cost; ++cs) {
        for (const auto& c : strata_[cs]) {
          if (c.is_zero()) continue;
          prefix.push_back({static_cast<std::uint32_t>(d), c});
          tails(cost - 1 - cs, d, prefix, out);
          prefix.pop_back();
        }
      }
    }
  }

  void build_thetas(std::size_t s) {
    std::vector<std::vector<GTailEntry>> shapes;
    std::vector<GTailEntry> prefix;
    tails(s - 2, static_cast<long>(options_.max_degree) + 1, prefix, shapes);
    auto heads = order_.elements();
    std::vector<std::vector<GTerm>> per_head(heads.size());
#pragma omp parallel for schedule(static)
    for (std::size_t h = 0; h < heads.size(); ++h) {
      per_head[h].reserve(shapes.size());
      for (const auto& tail : shapes) per_head[h].push_back(GTerm::theta(heads[h], tail));
    }
    for (auto& v : per_head) {
      charge(v.size());
      strata_[s].insert(strata_[s].end(), v.begin(), v.end());
    }
  }

  void build_sums(std::size_t s) {
    if (s < 4) return;
    // Theta-shaped pool of sizes <= s - 2, descending in <_G. Summand index
    // sequences are non-decreasing, i.e. summand values are non-increasing.
    std::vector<GTerm> pool;
    for (std::size_t k = 2; k + 2 <= s; ++k)
      for (const auto& t : strata_[k])
        if (t.is_theta()) pool.push_back(t);
    std::sort(pool.begin(), pool.end(), [](const GTerm& a, const GTerm& b) { return less_g(b, a); });

    const std::size_t budget = s;
    std::vector<std::vector<GTerm>> per_first(pool.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pool[i].size() >= budget) continue;
      std::vector<GTerm> parts{pool[i]};
      extend_sum(pool, i, budget - pool[i].size(), parts, per_first[i]);
    }
    for (auto& v : per_first) {
      charge(v.size());
      strata_[s].insert(strata_[s].end(), v.begin(), v.end());
    }
  }

  static void extend_sum(const std::vector<GTerm>& pool, std::size_t from, std::size_t remaining,
                         std::vector<GTerm>& parts, std::vector<GTerm>& out) {
    if (remaining == 0) {
      if (parts.size() >= 2) out.push_back(GTerm::sum(parts));
      return;
    }
    for (std::size_t j = from; j < pool.size(); ++j) {
      if (pool[j].size() > remaining) continue;
      parts.push_back(pool[j]);
      extend_sum(pool, j, remaining - pool[j].size(), parts, out);
      parts.pop_back();
    }
  }
};

}  // namespace

std::vector<GTerm> enumerate_terms(const BaseOrder& order, std::size_t max_size,
                                   const EnumerateOptions& options) {
  return Enumerator(order, max_size, options).run();
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void print_into(std::string& out, const GTerm& t, const BaseOrder& order) {
  switch (t.kind()) {
    case Kind::zero:
      out += '0';
      return;
    case Kind::constant:
      out += "c(" + order.name(t.element()) + ")";
      return;
    case Kind::theta:
      out += "th(W^w*c(" + order.name(t.element()) + ")";
      for (const auto& e : t.tail()) {
        out += " + W^" + std::to_string(e.degree) + "*";
        print_into(out, e.coeff, order);
      }
      out += ')';
      return;
    case Kind::sum: {
      bool first = true;
      for (const auto& s : t.summands()) {
        if (!first) out += " + ";
        first = false;
        print_into(out, s, order);
      }
      return;
    }
  }
}

class GTermParser {
 public:
  GTermParser(std::string_view text, const BaseOrder& order) : text_(text), order_(order) {}

  GTerm parse() {
    GTerm t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  std::string_view text_;
  const BaseOrder& order_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("term: " + msg + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool looking_at(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }

  bool accept(std::string_view s) {
    if (!looking_at(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }

  // '+' followed by a tail entry ends a coefficient.
  bool at_tail_separator() {
    const std::size_t save = pos_;
    bool result = accept("+") && looking_at("W");
    pos_ = save;
    return result;
  }

  GTerm term() {
    std::vector<GTerm> parts{summand()};
    while (looking_at("+") && !at_tail_separator()) {
      expect("+");
      parts.push_back(summand());
    }
    return GTerm::sum(std::move(parts));
  }

  Element element() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    if (name.empty()) fail("expected element name");
    auto x = order_.find(name);
    if (!x) fail("unknown element '" + std::string(name) + "'");
    return *x;
  }

  std::uint32_t degree() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected degree");
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) fail("degree too large");
    return static_cast<std::uint32_t>(std::stoul(std::string(digits)));
  }

  GTerm summand() {
    if (accept("0")) return GTerm::zero();
    if (accept("c(")) {
      Element x = element();
      expect(")");
      return GTerm::constant(x);
    }
    if (accept("th(")) {
      expect("W^w*c(");
      Element x = element();
      expect(")");
      std::vector<GTailEntry> tail;
      while (accept("+")) {
        expect("W^");
        const std::uint32_t d = degree();
        expect("*");
        tail.push_back({d, term()});
      }
      expect(")");
      return GTerm::theta(x, std::move(tail));
    }
    fail("expected 0, c(...) or th(...)");
  }
};

}  // namespace

std::string to_string(const GTerm& t, const BaseOrder& order) {
  std::string out;
  print_into(out, t, order);
  return out;
}

GTerm parse_gterm(std::string_view text, const BaseOrder& order) {
  return GTermParser(text, order).parse();
}

}  // namespace ordnot
