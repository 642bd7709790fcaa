#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace divcat {

/// An injective partial self-map of {1..n}. Immutable after construction.
///
/// The empty map is the zero element of the symmetric inverse monoid;
/// the full identity map is its unit.
class PartialBijection {
public:
  /// The empty (zero) map on {1..n}. Requires n >= 1.
  explicit PartialBijection(int n);

  static PartialBijection identity(int n);

  /// Build from an explicit graph {(a, b)} meaning "a maps to b".
  /// Throws std::invalid_argument on out-of-range points or if the
  /// pairs are not functional and injective.
  static PartialBijection from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int n() const { return n_; }

  /// Number of pairs in the graph.
  int rank() const;

  bool defined(int a) const { return img_[a - 1] != 0; }

  /// Image of a, or 0 when a has no image.
  int image(int a) const { return img_[a - 1]; }

  std::vector<int> domain() const;
  std::vector<int> range() const;
  std::vector<std::pair<int, int>> graph() const;

  /// True iff the graph is contained in the diagonal (a partial identity).
  bool is_idempotent() const;

  /// True iff a < b in the domain implies image(a) < image(b).
  bool is_order_preserving() const;

  bool is_full_identity() const;
  bool is_zero() const { return rank() == 0; }

  PartialBijection inverse() const;

  bool operator==(const PartialBijection& other) const {
    return n_ == other.n_ && img_ == other.img_;
  }
  bool operator!=(const PartialBijection& other) const { return !(*this == other); }

private:
  int n_;
  std::vector<int> img_;  // img_[a-1] = f(a), 0 when undefined
};

/// Right-to-left composition: (f . g)(a) = f(g(a)).
/// Throws std::invalid_argument when the ground-set sizes differ.
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);

/// Canonical bracket rendering. Chain groups [d1..dk] mean
/// f(d1)=d2, ..., f(d_{k-1})=d_k and d_k has no image; digits absent
/// from every group are fixed points; "0" is the empty map and "i" the
/// identity. Elements whose graph contains a nontrivial cycle (possible
/// in I(M_n), never in IO_n) get parenthesized cycle groups (d1..dk)
/// meaning f(d1)=d2, ..., f(dk)=d1.
///
/// Ordering: multi-digit chains by first digit, then cycles by first
/// digit, then singleton groups ascending. Requires n <= 9.
std::string print_bracket(const PartialBijection& f);

/// Inverse of print_bracket; accepts any group order. Throws ParseError
/// with a position on malformed input. Requires 1 <= n <= 9.
PartialBijection parse_bracket(std::string_view text, int n);

struct PartialBijectionHash {
  std::size_t operator()(const PartialBijection& f) const {
    std::size_t h = std::hash<int>()(f.n());
    for (int a = 1; a <= f.n(); ++a)
      h = h * 1000003u + static_cast<std::size_t>(f.image(a));
    return h;
  }
};

}  // namespace divcat
