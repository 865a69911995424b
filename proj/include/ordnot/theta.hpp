#pragma once

// The relativized term order (G_w(X), <_G) for theta(Omega^w x X).
//
// Terms are built from four constructors:
//   0                                    Zero
//   c_x                                  Const(x), x in X
//   th(W^w*c(x) + W^n*a_n + ... )        Theta(x, tail), tail degrees
//                                        strictly decreasing, coeffs != 0
//   a_0 + ... + a_n                      Sum, n >= 1, Theta-shaped summands,
//                                        a_0 >=_G ... >=_G a_n
//
// GTerm values may be ill-formed (a Theta with a zero coefficient, say);
// well_formed() reports that, and compare_g() refuses such input.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordnot {

struct Element {
  std::uint32_t index = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// A finite well-order X, given by its carrier listed in ascending order.
class BaseOrder {
 public:
  // Names must be distinct identifiers ([A-Za-z0-9_]+); throws DomainError.
  explicit BaseOrder(std::vector<std::string> ascending);
  // Carrier "0" < "1" < ... < "n-1".
  static BaseOrder chain(std::size_t n);

  std::size_t size() const { return names_.size(); }
  bool contains(Element x) const { return x.index < names_.size(); }
  bool less(Element x, Element y) const { return x.index < y.index; }
  const std::string& name(Element x) const;
  std::optional<Element> find(std::string_view name) const;
  std::vector<Element> elements() const;

 private:
  std::vector<std::string> names_;
};

struct GTailEntry;

class GTerm {
 public:
  enum class Kind : std::uint8_t { zero, constant, theta, sum };

  GTerm();  // Zero

  static GTerm zero() { return GTerm(); }
  static GTerm constant(Element x);
  static GTerm theta(Element head, std::vector<GTailEntry> tail = {});
  // A one-summand sum is the summand itself; an empty sum is rejected.
  static GTerm sum(std::vector<GTerm> summands);

  Kind kind() const;
  bool is_zero() const { return kind() == Kind::zero; }
  bool is_theta() const { return kind() == Kind::theta; }
  // Const or Theta head.
  Element element() const;
  std::span<const GTailEntry> tail() const;
  std::span<const GTerm> summands() const;

  // Constructor-node count, the head c_x included: Zero = Const = 1,
  // Theta = 2 + sum(1 + size(coeff)), Sum = sum(size(summand)).
  std::size_t size() const;
  std::size_t hash() const;

  // Structural equality.
  friend bool operator==(const GTerm& a, const GTerm& b);

 private:
  struct Node;
  explicit GTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct GTailEntry {
  std::uint32_t degree = 0;
  GTerm coeff;
  friend bool operator==(const GTailEntry&, const GTailEntry&) = default;
};

struct WellFormedness {
  bool ok = true;
  std::string path;    // location of the first violation, e.g. "root.tail[0].coeff"
  std::string reason;
  explicit operator bool() const { return ok; }
};

WellFormedness check_well_formed(const GTerm& t, const BaseOrder& order);
inline bool well_formed(const GTerm& t, const BaseOrder& order) {
  return check_well_formed(t, order).ok;
}

struct CompareTrace {
  std::size_t calls = 0;
  std::size_t max_depth = 0;
};

// Strict relation <_G on well-formed terms; no validation. Elements are
// compared by carrier index.
bool less_g(const GTerm& a, const GTerm& b, CompareTrace* trace = nullptr);
std::strong_ordering compare_unchecked(const GTerm& a, const GTerm& b, CompareTrace* trace = nullptr);

// Validates both arguments against X (DomainError when ill-formed).
std::strong_ordering compare_g(const GTerm& a, const GTerm& b, const BaseOrder& order);

struct EnumerateOptions {
  // Tail degrees range over 0..max_degree.
  std::uint32_t max_degree = 2;
  // Maximum number of terms produced before BudgetExceeded.
  std::size_t budget = 2'000'000;
};

// All well-formed terms of size <= max_size, duplicate-free, ascending in <_G.
std::vector<GTerm> enumerate_terms(const BaseOrder& order, std::size_t max_size,
                                   const EnumerateOptions& options = {});

// Theta(x, []), the image of x under X -> theta(Omega^w x X).
GTerm gamma_omega_term(Element x, const BaseOrder& order);

std::string to_string(const GTerm& t, const BaseOrder& order);
GTerm parse_gterm(std::string_view text, const BaseOrder& order);

}  // namespace ordnot
