#include "ordnot/trees.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "ordnot/error.hpp"

namespace ordnot {

std::size_t degree(const LabelledTree& t) {
  std::size_t d = t.children.size();
  for (const auto& c : t.children) d = std::max(d, degree(c));
  return d;
}

std::size_t node_count(const LabelledTree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += node_count(c);
  return n;
}

namespace {

void check_labels(const LabelledTree& t, const FiniteQO& q) {
  if (t.label >= q.size())
    throw DomainError("tree label " + std::to_string(t.label) + " outside the carrier");
  for (const auto& c : t.children) check_labels(c, q);
}

// Preorder flattening; children stored as node ids.
struct FlatTree {
  std::vector<Index> labels;
  std::vector<std::vector<std::uint32_t>> children;

  explicit FlatTree(const LabelledTree& t) { add(t); }

  std::uint32_t add(const LabelledTree& t) {
    const auto id = static_cast<std::uint32_t>(labels.size());
    labels.push_back(t.label);
    children.emplace_back();
    for (const auto& c : t.children) {
      const auto cid = add(c);
      children[id].push_back(cid);
    }
    return id;
  }

  std::size_t size() const { return labels.size(); }
};

class Embedding {
 public:
  Embedding(const LabelledTree& t, const LabelledTree& s, const FiniteQO& q)
      : t_(t), s_(s), q_(q), memo_(t_.size() * s_.size(), -1) {}

  bool decide() { return embeds(0, 0); }

 private:
  FlatTree t_;
  FlatTree s_;
  const FiniteQO& q_;
  std::vector<std::int8_t> memo_;

  bool embeds(std::uint32_t i, std::uint32_t j) {
    auto& slot = memo_[i * s_.size() + j];
    if (slot >= 0) return slot != 0;
    const bool result = compute(i, j);
    slot = result ? 1 : 0;
    return result;
  }

  bool compute(std::uint32_t i, std::uint32_t j) {
    const auto& sc = s_.children[j];
    // Clause 2.
    for (auto c : sc)
      if (embeds(i, c)) return true;
    // Clauses 1 and 3: greedy leftmost matching of t's children.
    if (!q_.le(t_.labels[i], s_.labels[j])) return false;
    const auto& tc = t_.children[i];
    if (tc.size() > sc.size()) return false;
    std::size_t k = 0;
    for (auto c : sc) {
      if (k == tc.size()) break;
      if (embeds(tc[k], c)) ++k;
    }
    return k == tc.size();
  }
};

}  // namespace

bool embeds(const LabelledTree& t, const LabelledTree& s, const FiniteQO& q) {
  check_labels(t, q);
  check_labels(s, q);
  return Embedding(t, s, q).decide();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const FiniteQO& q, std::size_t max_nodes, const TreeEnumOptions& options)
      : q_(q), max_nodes_(max_nodes), options_(options), by_nodes_(max_nodes + 1) {}

  std::vector<LabelledTree> run() {
    if (max_nodes_ < 1) throw DomainError("enumerate_trees: max_nodes must be >= 1");
    std::vector<LabelledTree> out;
    for (std::size_t n = 1; n <= max_nodes_; ++n) {
      std::vector<std::vector<LabelledTree>> forests;
      std::vector<LabelledTree> prefix;
      forest(n - 1, prefix, forests);
      for (Index label = 0; label < q_.size(); ++label) {
        for (const auto& f : forests) {
          if (++produced_ > options_.budget)
            throw BudgetExceeded("enumerate_trees produced more than " +
                                 std::to_string(options_.budget) + " trees");
          by_nodes_[n].push_back({label, f});
        }
      }
      out.insert(out.end(), by_nodes_[n].begin(), by_nodes_[n].end());
    }
    return out;
  }

 private:
  const FiniteQO& q_;
  std::size_t max_nodes_;
  TreeEnumOptions options_;
  std::vector<std::vector<LabelledTree>> by_nodes_;
  std::size_t produced_ = 0;

  bool room_for_child(std::size_t count) const {
    return !options_.max_degree || count < *options_.max_degree;
  }

  // Sequences of trees with `nodes` nodes in total.
  void forest(std::size_t nodes, std::vector<LabelledTree>& prefix,
              std::vector<std::vector<LabelledTree>>& out) {
    if (nodes == 0) {
      out.push_back(prefix);
      return;
    }
    if (!room_for_child(prefix.size())) return;
    for (std::size_t k = 1; k <= nodes; ++k) {
      for (const auto& t : by_nodes_[k]) {
        prefix.push_back(t);
        forest(nodes - k, prefix, out);
        prefix.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<LabelledTree> enumerate_trees(const FiniteQO& q, std::size_t max_nodes,
                                          const TreeEnumOptions& options) {
  return TreeEnumerator(q, max_nodes, options).run();
}

std::optional<GoodPair> Whistle::feed(LabelledTree t) {
  check_labels(t, q_);
  if (!pair_) {
    for (std::size_t i = 0; i < history_.size(); ++i) {
      if (embeds(history_[i], t, q_)) {
        pair_ = GoodPair{i, history_.size()};
        break;
      }
    }
  }
  history_.push_back(std::move(t));
  return pair_;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

bool label_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']' && c != ',';
}

void print_into(std::string& out, const LabelledTree& t, const FiniteQO& q) {
  out += q.name(t.label);
  out += '[';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) out += ',';
    print_into(out, t.children[i], q);
  }
  out += ']';
}

class TreeParser {
 public:
  TreeParser(std::string_view text, const std::function<Index(std::string_view)>& intern)
      : text_(text), intern_(intern) {}

  LabelledTree parse() {
    LabelledTree t = tree();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  std::string_view text_;
  const std::function<Index(std::string_view)>& intern_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("tree: " + msg + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LabelledTree tree() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected label");
    LabelledTree t{intern_(text_.substr(start, pos_ - start)), {}};
    if (!accept('[')) return t;
    if (accept(']')) return t;
    do {
      t.children.push_back(tree());
    } while (accept(','));
    if (!accept(']')) fail("expected ']'");
    return t;
  }
};

}  // namespace

std::string to_string(const LabelledTree& t, const FiniteQO& q) {
  check_labels(t, q);
  std::string out;
  print_into(out, t, q);
  return out;
}

LabelledTree parse_tree(std::string_view text, const std::function<Index(std::string_view)>& intern) {
  return TreeParser(text, intern).parse();
}

LabelledTree parse_tree(std::string_view text, const FiniteQO& q) {
  return parse_tree(text, [&q](std::string_view name) -> Index {
    auto idx = q.find(std::string(name));
    if (!idx) throw ParseError("tree: unknown label '" + std::string(name) + "'");
    return *idx;
  });
}

}  // namespace ordnot
