#include "divcat/pbij.hpp"

#include <algorithm>
#include <stdexcept>

#include "divcat/errors.hpp"

namespace divcat {

PartialBijection::PartialBijection(int n) : n_(n), img_(static_cast<std::size_t>(n), 0) {
  if (n < 1) throw std::invalid_argument("ground-set size must be >= 1");
}

PartialBijection PartialBijection::identity(int n) {
  PartialBijection f(n);
  for (int a = 1; a <= n; ++a) f.img_[a - 1] = a;
  return f;
}

PartialBijection PartialBijection::from_pairs(int n,
                                              const std::vector<std::pair<int, int>>& pairs) {
  PartialBijection f(n);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("pair out of range for ground set");
    if (f.img_[a - 1] != 0) throw std::invalid_argument("graph is not functional");
    if (hit[b - 1]) throw std::invalid_argument("graph is not injective");
    f.img_[a - 1] = b;
    hit[b - 1] = 1;
  }
  return f;
}

int PartialBijection::rank() const {
  return static_cast<int>(std::count_if(img_.begin(), img_.end(), [](int b) { return b != 0; }));
}

std::vector<int> PartialBijection::domain() const {
  std::vector<int> out;
  for (int a = 1; a <= n_; ++a)
    if (img_[a - 1] != 0) out.push_back(a);
  return out;
}

std::vector<int> PartialBijection::range() const {
  std::vector<int> out;
  for (int a = 1; a <= n_; ++a)
    if (img_[a - 1] != 0) out.push_back(img_[a - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> PartialBijection::graph() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a)
    if (img_[a - 1] != 0) out.emplace_back(a, img_[a - 1]);
  return out;
}

bool PartialBijection::is_idempotent() const {
  for (int a = 1; a <= n_; ++a)
    if (img_[a - 1] != 0 && img_[a - 1] != a) return false;
  return true;
}

bool PartialBijection::is_order_preserving() const {
  int last = 0;
  for (int a = 1; a <= n_; ++a) {
    int b = img_[a - 1];
    if (b == 0) continue;
    if (b <= last) return false;
    last = b;
  }
  return true;
}

bool PartialBijection::is_full_identity() const {
  for (int a = 1; a <= n_; ++a)
    if (img_[a - 1] != a) return false;
  return true;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection g(n_);
  for (int a = 1; a <= n_; ++a)
    if (img_[a - 1] != 0) g.img_[img_[a - 1] - 1] = a;
  return g;
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  if (f.n() != g.n()) throw std::invalid_argument("ground-set size mismatch in compose");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= g.n(); ++a) {
    int b = g.image(a);
    if (b != 0 && f.defined(b)) pairs.emplace_back(a, f.image(b));
  }
  return PartialBijection::from_pairs(f.n(), pairs);
}

std::string print_bracket(const PartialBijection& f) {
  const int n = f.n();
  if (n > 9) throw std::invalid_argument("bracket text is defined only for n <= 9");
  if (f.is_zero()) return "0";
  if (f.is_full_identity()) return "i";

  // Non-fixed digits split into chains (ending at a digit with no image)
  // and cycles; fixed points are omitted entirely.
  std::vector<char> moved(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a)
    if (f.image(a) != a) moved[a] = 1;  // covers both "no image" and "maps elsewhere"

  std::vector<char> is_image(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a)
    if (moved[a] && f.defined(a)) is_image[f.image(a)] = 1;

  std::vector<std::string> chains, singles, cycles;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);

  for (int a = 1; a <= n; ++a) {
    if (!moved[a] || is_image[a]) continue;  // chain heads only
    std::string grp;
    int cur = a;
    while (cur != 0) {
      seen[cur] = 1;
      grp += static_cast<char>('0' + cur);
      cur = f.image(cur);
    }
    (grp.size() == 1 ? singles : chains).push_back(grp);
  }
  // Anything moved but unvisited sits on a cycle.
  for (int a = 1; a <= n; ++a) {
    if (!moved[a] || seen[a]) continue;
    std::string grp;
    int cur = a;
    do {
      seen[cur] = 1;
      grp += static_cast<char>('0' + cur);
      cur = f.image(cur);
    } while (cur != a);
    cycles.push_back(grp);
  }

  std::sort(chains.begin(), chains.end());
  std::sort(cycles.begin(), cycles.end());
  std::sort(singles.begin(), singles.end());

  std::string out;
  for (const auto& g : chains) out += "[" + g + "]";
  for (const auto& g : cycles) out += "(" + g + ")";
  for (const auto& g : singles) out += "[" + g + "]";
  return out;
}

PartialBijection parse_bracket(std::string_view text, int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("bracket text is defined only for 1 <= n <= 9");
  if (text == "0") return PartialBijection(n);
  if (text == "i") return PartialBijection::identity(n);
  if (text.empty()) throw ParseError("empty input", 0);

  std::vector<std::pair<int, int>> pairs;
  std::vector<char> mentioned(static_cast<std::size_t>(n) + 1, 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    char open = text[pos];
    if (open != '[' && open != '(') throw ParseError("expected '[' or '('", pos);
    char close = (open == '[') ? ']' : ')';
    std::size_t start = pos++;
    std::vector<int> digits;
    while (pos < text.size() && text[pos] != close) {
      char c = text[pos];
      if (c < '1' || c > '9') throw ParseError("expected a digit", pos);
      int d = c - '0';
      if (d > n) throw ParseError("digit out of range for ground set", pos);
      if (mentioned[d]) throw ParseError("repeated digit", pos);
      mentioned[d] = 1;
      digits.push_back(d);
      ++pos;
    }
    if (pos == text.size()) throw ParseError("unterminated group", start);
    ++pos;  // past the closing delimiter
    if (digits.empty()) throw ParseError("empty group", start);
    if (open == '(') {
      if (digits.size() < 2) throw ParseError("cycle group needs at least two digits", start);
      for (std::size_t k = 0; k + 1 < digits.size(); ++k)
        pairs.emplace_back(digits[k], digits[k + 1]);
      pairs.emplace_back(digits.back(), digits.front());
    } else {
      for (std::size_t k = 0; k + 1 < digits.size(); ++k)
        pairs.emplace_back(digits[k], digits[k + 1]);
      // last digit of a bracket group has no image
    }
  }
  for (int a = 1; a <= n; ++a)
    if (!mentioned[a]) pairs.emplace_back(a, a);
  return PartialBijection::from_pairs(n, pairs);
}

}  // namespace divcat
