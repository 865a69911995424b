#include "ordnot/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ordnot/cnf.hpp"
#include "ordnot/error.hpp"
#include "ordnot/qo.hpp"
#include "ordnot/ramsey.hpp"
#include "ordnot/suites.hpp"
#include "ordnot/theta.hpp"
#include "ordnot/trees.hpp"
#include "ordnot/wop.hpp"

namespace ordnot::cli {

namespace {

const char* symbol(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "<";
  if (o == std::strong_ordering::greater) return ">";
  return "=";
}

FiniteQO load_qo(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read quasi-order file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return qo_from_json(j);
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty name in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<Index> parse_sequence(const std::string& text, const FiniteQO& q) {
  std::vector<Index> seq;
  if (text.find_first_not_of(" \t") == std::string::npos) return seq;
  for (const auto& name : split_names(text)) {
    auto idx = q.find(name);
    if (!idx) throw DomainError("'" + name + "' is not in the carrier");
    seq.push_back(*idx);
  }
  return seq;
}

std::string show_sequence(const std::vector<Index>& seq, const FiniteQO& q) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + q.name(seq[i]);
  return out + "]";
}

std::string show_pair(const std::optional<GoodPair>& p) {
  return p ? "(" + std::to_string(p->i) + "," + std::to_string(p->j) + ")" : "none";
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Trees parsed without a --qo file are labelled by the discrete order on the
// labels that occur in them.
class TreeInput {
 public:
  explicit TreeInput(const std::string& qo_path) {
    if (!qo_path.empty()) q_ = load_qo(qo_path);
  }

  LabelledTree parse(const std::string& text) {
    if (q_) return parse_tree(text, *q_);
    return parse_tree(text, [this](std::string_view name) {
      auto it = std::find(labels_.begin(), labels_.end(), name);
      if (it != labels_.end()) return static_cast<Index>(it - labels_.begin());
      labels_.emplace_back(name);
      return static_cast<Index>(labels_.size() - 1);
    });
  }

  FiniteQO order() const {
    if (q_) return *q_;
    if (labels_.empty()) return FiniteQO::singleton();
    std::vector<std::vector<bool>> le(labels_.size(), std::vector<bool>(labels_.size(), false));
    for (std::size_t i = 0; i < labels_.size(); ++i) le[i][i] = true;
    return FiniteQO(labels_, le);
  }

 private:
  std::optional<FiniteQO> q_;
  std::vector<std::string> labels_;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int main(const std::vector<std::string>& args) {
    CLI::App app{"Ordinal notations, tree embeddings and well-quasi-order combinators", "ordnot"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    setup_ord(app);
    setup_g(app);
    setup_tree(app);
    setup_qo(app);
    setup_ramsey(app);
    setup_wop(app);
    setup_suite(app);

    std::vector<const char*> argv{"ordnot"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kParse;
    }

    try {
      action_();
      return status_;
    } catch (const ParseError& e) {
      err_ << "parse error: " << e.what() << "\n";
      return kParse;
    } catch (const DomainError& e) {
      err_ << "domain error: " << e.what() << "\n";
      return kDomain;
    } catch (const BudgetExceeded& e) {
      err_ << e.what() << "\n";
      return kBudget;
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::function<void()> action_;
  int status_ = kOk;

  // Option storage; CLI11 binds to these by reference.
  std::vector<std::string> pos_;
  std::string qo_path_;
  std::string carrier_ = "0,1,2";
  std::string mode_ = "plus";
  std::string suite_;
  std::size_t size_ = 0;
  std::size_t n_ = 2;
  std::optional<std::size_t> max_degree_;
  std::uint64_t budget_ = 0;
  bool timing_ = false;

  CLI::App* verb(CLI::App* group, const std::string& name, const std::string& help, std::size_t args,
                 const std::string& arg_names, std::function<void()> fn) {
    auto* sub = group->add_subcommand(name, help)->fallthrough();
    if (args > 0) sub->add_option("args", pos_, arg_names)->expected(static_cast<int>(args))->required();
    sub->callback([this, fn] { action_ = fn; });
    return sub;
  }

  const std::string& arg(std::size_t i) const { return pos_.at(i); }

  // ord --------------------------------------------------------------------

  void binary_ord(CLI::App* ord, const std::string& name, const std::string& help,
                  Ordinal (*op)(const Ordinal&, const Ordinal&)) {
    verb(ord, name, help, 2, "a b", [this, op] {
      out_ << to_string(op(parse_ordinal(arg(0)), parse_ordinal(arg(1)))) << "\n";
    });
  }

  void setup_ord(CLI::App& app) {
    auto* ord = app.add_subcommand("ord", "Cantor normal form ordinals below epsilon_0");
    ord->require_subcommand(1);
    verb(ord, "cmp", "Compare two ordinals (<, =, >)", 2, "a b", [this] {
      out_ << symbol(compare_cnf(parse_ordinal(arg(0)), parse_ordinal(arg(1)))) << "\n";
    });
    binary_ord(ord, "add", "Ordinal sum a + b", &add);
    binary_ord(ord, "mul", "Ordinal product a * b", &mul);
    binary_ord(ord, "nsum", "Natural (Hessenberg) sum", &nat_sum);
    binary_ord(ord, "nprod", "Natural (Hessenberg) product", &nat_prod);
    auto* pow = ord->add_subcommand("pow", "w^a, or a^n when n is given")->fallthrough();
    pow->add_option("args", pos_, "a [n]")->expected(1, 2)->required();
    pow->callback([this] {
      action_ = [this] {
        const Ordinal a = parse_ordinal(arg(0));
        if (pos_.size() == 1) {
          out_ << to_string(omega_power(a)) << "\n";
          return;
        }
        const Ordinal n = parse_ordinal(arg(1));
        if (!n.is_finite()) throw DomainError("exponent must be a natural number");
        out_ << to_string(pow_n(a, n.finite_value())) << "\n";
      };
    });
    verb(ord, "tower", "w_n: w_1 = w, w_(n+1) = w^(w_n)", 1, "n", [this] {
      out_ << to_string(omega_tower(parse_count(arg(0)))) << "\n";
    });
  }

  static std::uint64_t parse_count(const std::string& s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("expected a natural number, got '" + s + "'");
    return v;
  }

  // g ----------------------------------------------------------------------

  void setup_g(CLI::App& app) {
    auto* g = app.add_subcommand("g", "The term order G_w(X) over a finite well-order X");
    g->require_subcommand(1);
    g->add_option("--carrier", carrier_, "Elements of X in ascending order, comma-separated")
        ->capture_default_str();
    verb(g, "cmp", "Compare two terms (<, =, >)", 2, "a b", [this] {
      const BaseOrder x(split_names(carrier_));
      out_ << symbol(compare_g(parse_gterm(arg(0), x), parse_gterm(arg(1), x), x)) << "\n";
    });
    verb(g, "wf", "Check that a term is well formed", 1, "term", [this] {
      const BaseOrder x(split_names(carrier_));
      const auto wf = check_well_formed(parse_gterm(arg(0), x), x);
      if (wf)
        out_ << "true\n";
      else
        out_ << "false " << wf.path << ": " << wf.reason << "\n";
    });
    auto* en = verb(g, "enum", "List all well-formed terms up to a size, ascending", 0, "", [this] {
      const BaseOrder x(split_names(carrier_));
      EnumerateOptions opts;
      if (max_degree_) opts.max_degree = static_cast<std::uint32_t>(*max_degree_);
      if (budget_) opts.budget = budget_;
      for (const auto& t : enumerate_terms(x, size_, opts)) out_ << to_string(t, x) << "\n";
    });
    en->add_option("--max-size", size_, "Largest term size")->required();
    en->add_option("--max-degree", max_degree_, "Largest tail degree (default 2)");
    en->add_option("--budget", budget_, "Maximum number of terms");
  }

  // tree -------------------------------------------------------------------

  void setup_tree(CLI::App& app) {
    auto* tree = app.add_subcommand("tree", "Labelled trees and embeddability");
    tree->require_subcommand(1);
    tree->add_option("--qo", qo_path_, "Label quasi-order (JSON); default: labels ordered by equality");
    verb(tree, "deg", "Largest branching degree", 1, "tree", [this] {
      TreeInput in(qo_path_);
      out_ << degree(in.parse(arg(0))) << "\n";
    });
    verb(tree, "embed", "Does the first tree embed in the second?", 2, "t s", [this] {
      TreeInput in(qo_path_);
      const auto t = in.parse(arg(0));
      const auto s = in.parse(arg(1));
      out_ << (embeds(t, s, in.order()) ? "true" : "false") << "\n";
    });
    auto* en = verb(tree, "enum", "List all trees up to a node count", 0, "", [this] {
      TreeInput in(qo_path_);
      const FiniteQO q = in.order();
      TreeEnumOptions opts;
      opts.max_degree = max_degree_;
      if (budget_) opts.budget = budget_;
      for (const auto& t : enumerate_trees(q, size_, opts)) out_ << to_string(t, q) << "\n";
    });
    en->add_option("--max-nodes", size_, "Largest node count")->required();
    en->add_option("--max-degree", max_degree_, "Largest branching degree");
    en->add_option("--budget", budget_, "Maximum number of trees");
    auto* wh = tree->add_subcommand("whistle", "Feed trees in order and report the first good pair")->fallthrough();
    wh->add_option("trees", pos_, "Trees in feeding order")->required();
    wh->callback([this] {
      action_ = [this] {
        TreeInput in(qo_path_);
        std::vector<LabelledTree> trees;
        for (const auto& text : pos_) trees.push_back(in.parse(text));
        Whistle w(in.order());
        std::optional<GoodPair> p;
        for (auto& t : trees) p = w.feed(std::move(t));
        out_ << show_pair(p) << "\n";
      };
    });
  }

  // qo ---------------------------------------------------------------------

  void combinator(CLI::App* qo, const std::string& name, const std::string& help,
                  FiniteQO (*op)(const FiniteQO&, const FiniteQO&)) {
    verb(qo, name, help, 2, "p q", [this, op] {
      out_ << qo_to_json(op(load_qo(arg(0)), load_qo(arg(1)))).dump() << "\n";
    });
  }

  void setup_qo(CLI::App& app) {
    auto* qo = app.add_subcommand("qo", "Finite quasi-orders (JSON files) and bad sequences");
    qo->require_subcommand(1);
    combinator(qo, "product", "Componentwise order on P x Q", &product);
    combinator(qo, "sum", "P followed by Q", &sum);
    combinator(qo, "dunion", "Disjoint union of P and Q", &disjoint_union);
    auto* nf = verb(qo, "nfold", "n x Q under the plus, times or dunion order", 1, "q", [this] {
      auto mode = parse_fold_mode(mode_);
      if (!mode) throw ParseError("unknown mode '" + mode_ + "' (plus, times, dunion)");
      out_ << qo_to_json(n_fold(load_qo(arg(0)), n_, *mode)).dump() << "\n";
    });
    nf->add_option("--n", n_, "Number of copies")->capture_default_str();
    nf->add_option("--mode", mode_, "plus | times | dunion")->capture_default_str();
    verb(qo, "goodpair", "Least good pair of a comma-separated sequence", 2, "q seq", [this] {
      const FiniteQO q = load_qo(arg(0));
      out_ << show_pair(good_pair(parse_sequence(arg(1), q), q)) << "\n";
    });
    auto* bm = verb(qo, "badmax", "Length and witness of a longest bad sequence", 1, "q", [this] {
      const FiniteQO q = load_qo(arg(0));
      const auto lb = budget_ ? longest_bad(q, budget_) : longest_bad(q);
      out_ << lb.length << " " << show_sequence(lb.witness, q) << "\n";
    });
    bm->add_option("--budget", budget_, "Maximum number of search nodes");
    auto* kb = verb(qo, "kb", "Bad sequences in Kleene-Brouwer order", 1, "q", [this] {
      const FiniteQO q = load_qo(arg(0));
      const auto tree = budget_ ? BadSeqTree::build(q, budget_) : BadSeqTree::build(q);
      for (auto node : kb_linearize(tree)) out_ << show_sequence(tree.sequence(node), q) << "\n";
    });
    kb->add_option("--budget", budget_, "Maximum number of tree nodes");
  }

  // ramsey -----------------------------------------------------------------

  void setup_ramsey(CLI::App& app) {
    auto* r = app.add_subcommand("ramsey", "Colourings, homogeneous sets and pigeonhole steps");
    r->require_subcommand(1);
    verb(r, "colour", "Colour a bad sequence of tuples, e.g. \"(a,b),(b,a)\"", 2, "q tuples", [this] {
      const FiniteQO q = load_qo(arg(0));
      const auto seq = parse_tuples(arg(1), q);
      const std::size_t n = seq.empty() ? 0 : seq.front().size();
      out_ << to_string(colour_bad_product_seq(seq, q, n)) << "\n";
    });
    auto* h = verb(r, "homog", "First homogeneous index set of a given size", 1, "colouring", [this] {
      const auto found = homogeneous_subset(parse_colouring(arg(0)), size_);
      out_ << (found ? join_indices(*found) : "none") << "\n";
    });
    h->add_option("--size", size_, "Size of the set")->required();
    auto* p = verb(r, "pigeon", "Most frequent colour of a sequence and its positions", 1, "seq", [this] {
      const auto res = pigeonhole_extract(parse_int_list(arg(0)), static_cast<std::uint32_t>(size_));
      out_ << res.colour << ": " << join_indices(res.indices) << "\n";
    });
    p->add_option("--k", size_, "Number of colours")->required();
    auto* o = verb(r, "order", "Linear order and bad sequence built from a bounded prefix", 1, "prefix", [this] {
      const auto po = pigeonhole_order(parse_int_list(arg(0)), static_cast<std::uint32_t>(size_));
      out_ << "alpha: " << join_indices(po.ascending) << "\n" << "seq:";
      for (const auto& [k, i] : po.seq) out_ << " (" << k << "," << i << ")";
      out_ << "\n";
    });
    o->add_option("--m", size_, "Bound on the prefix entries")->required();
  }

  // wop --------------------------------------------------------------------

  void setup_wop(CLI::App& app) {
    auto* w = app.add_subcommand("wop", "Ordinal functions on notations");
    w->require_subcommand(1);
    verb(w, "gplus", "a * w", 1, "a", [this] { out_ << to_string(gamma_plus(parse_ordinal(arg(0)))) << "\n"; });
    verb(w, "gtimes", "a ^ w", 1, "a", [this] { out_ << to_string(gamma_times(parse_ordinal(arg(0)))) << "\n"; });
    verb(w, "approx", "Least n with b < a^n", 2, "b a", [this] {
      out_ << approx_index(parse_ordinal(arg(0)), parse_ordinal(arg(1))) << "\n";
    });
  }

  // suite ------------------------------------------------------------------

  void setup_suite(CLI::App& app) {
    auto* s = app.add_subcommand("suite", "Property suites");
    s->require_subcommand(1);
    verb(s, "list", "List suite names", 0, "", [this] {
      for (const auto& info : suite_catalogue()) out_ << info.name << "  " << info.description << "\n";
    });
    auto* run = verb(s, "run", "Run one suite, or all, and print a JSON report", 0, "", [this] { run_suites(); });
    run->add_option("--suite", suite_, "Suite name (default: all)");
    run->add_option("--budget", budget_, "Maximum number of checks per suite");
    run->add_flag("--timing", timing_, "Include wall time in the report");
  }

  void run_suites() {
    std::vector<std::string> names;
    if (!suite_.empty()) {
      names.push_back(suite_);
    } else {
      for (const auto& info : suite_catalogue()) names.push_back(info.name);
    }
    nlohmann::json reports = nlohmann::json::array();
    bool passed = true;
    for (const auto& name : names) {
      Budget budget(budget_ ? budget_ : Budget::kDefault);
      const auto start = std::chrono::steady_clock::now();
      SuiteReport report = run_suite(name, budget);
      if (timing_)
        report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      passed = passed && report.passed();
      reports.push_back(report.to_json());
    }
    const nlohmann::json doc = suite_.empty() ? nlohmann::json{{"passed", passed}, {"suites", reports}} : reports[0];
    out_ << doc.dump(2) << "\n";
    if (!passed) status_ = kDomain;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).main(args);
}

}  // namespace ordnot::cli
