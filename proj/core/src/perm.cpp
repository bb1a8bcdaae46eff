#include "cayley/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley::perm {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw UsageError("permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw UsageError("image sequence is not a bijection on {0..n-1}");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw UsageError("permutation degree must be at least 1");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Trusted{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<int>>& cycles) {
  auto images = identity(degree).images_;
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (int p : c) {
      if (p < 1 || static_cast<std::size_t>(p) > degree) {
        throw UsageError("cycle point " + std::to_string(p) + " outside 1.." +
                         std::to_string(degree));
      }
      if (used[p - 1]) throw UsageError("cycle point " + std::to_string(p) + " repeated");
      used[p - 1] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      images[c[i] - 1] = static_cast<Point>(c[(i + 1) % c.size()] - 1);
    }
  }
  return Permutation(std::move(images), Trusted{});
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw UsageError("expected '(' in cycle notation: " + std::string(text));
    }
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) throw UsageError("expected a point in cycle notation: " + std::string(text));
      cyc.push_back(std::stoi(std::string(text.substr(start, i - start))));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw UsageError("unterminated cycle: " + std::string(text));
    ++i;
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw UsageError("cannot compose permutations of degree " + std::to_string(a.degree()) +
                     " and " + std::to_string(b.degree()));
  }
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b.images_[a.images_[i]];
  return Permutation(std::move(images), Permutation::Trusted{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(images), Trusted{});
}

Permutation Permutation::pow(long long exponent) const {
  auto base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  auto result = identity(degree());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Permutation Permutation::extended(std::size_t new_degree) const {
  if (new_degree < degree()) throw UsageError("cannot extend a permutation to a smaller degree");
  auto images = images_;
  for (std::size_t i = degree(); i < new_degree; ++i) images.push_back(static_cast<Point>(i));
  return Permutation(std::move(images), Trusted{});
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ',';
      out << j + 1;
      first = false;
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }
Permutation inverse(const Permutation& a) { return a.inverse(); }
Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  return Permutation::from_cycles(degree, cycles);
}

Permutation cycle(std::size_t degree, const std::vector<int>& points) {
  return Permutation::from_cycles(degree, {points});
}

Permutation consecutive_cycle(std::size_t degree, int first, int last) {
  std::vector<int> pts;
  for (int p = first; p <= last; ++p) pts.push_back(p);
  return cycle(degree, pts);
}

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::symmetric: return "symmetric";
    case GroupKind::alternating: return "alternating";
    case GroupKind::cyclic: return "cyclic";
  }
  return "?";
}

GroupElements::GroupElements(GroupKind kind, std::size_t degree, std::vector<Permutation> sorted)
    : kind_(kind), degree_(degree), elements_(std::move(sorted)) {}

std::optional<std::size_t> GroupElements::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

Permutation rotation(std::size_t degree, long long r) {
  auto n = static_cast<long long>(degree);
  std::vector<Point> images(degree);
  for (long long i = 0; i < n; ++i) images[i] = static_cast<Point>((((i + r) % n) + n) % n);
  return Permutation(std::move(images));
}

GroupElements enumerate(GroupKind kind, std::size_t degree, std::size_t degree_budget) {
  if (degree == 0) throw UsageError("group degree must be at least 1");
  std::vector<Permutation> out;
  if (kind == GroupKind::cyclic) {
    for (std::size_t r = 0; r < degree; ++r) out.push_back(rotation(degree, static_cast<long long>(r)));
    return GroupElements(kind, degree, std::move(out));
  }
  if (degree > degree_budget) {
    throw UsageError(std::string(to_string(kind)) + " group of degree " + std::to_string(degree) +
                     " exceeds the degree budget " + std::to_string(degree_budget));
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    Permutation p(images);
    if (kind == GroupKind::symmetric || p.is_even()) out.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return GroupElements(kind, degree, std::move(out));
}

namespace {

std::vector<Coset> cyclic_cosets(const GroupElements& ambient, const Permutation& tau, Side side) {
  const auto ord = tau.order();
  std::vector<Permutation> powers;
  powers.reserve(ord);
  for (std::size_t i = 0; i < ord; ++i) powers.push_back(tau.pow(static_cast<long long>(i)));

  std::vector<bool> assigned(ambient.size(), false);
  std::vector<Coset> cosets;
  for (std::size_t idx = 0; idx < ambient.size(); ++idx) {
    if (assigned[idx]) continue;
    const auto& g = ambient[idx];
    Coset coset;
    coset.reserve(ord);
    for (const auto& t : powers) {
      auto x = side == Side::left ? g * t : t * g;
      auto j = ambient.index_of(x);
      if (!j) throw UsageError("<tau> is not contained in the ambient group");
      assigned[*j] = true;
      coset.push_back(std::move(x));
    }
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

std::vector<Coset> stabilizer_cosets(const GroupElements& ambient, const Permutation& tau,
                                     Side side, Point point) {
  if (point >= ambient.degree()) throw UsageError("stabilized point out of range");
  std::vector<Permutation> stab;
  for (const auto& h : ambient.elements()) {
    if (h(point) == point) stab.push_back(h);
  }
  // Right coset H*x is {y : y(point) = x(point)}; left coset x*H is
  // {y : y^-1(point) = x^-1(point)}.
  auto key = [&](const Permutation& x) {
    return side == Side::right ? x(point) : x.inverse()(point);
  };
  auto make = [&](const Permutation& x) {
    Coset c;
    c.reserve(stab.size());
    for (const auto& h : stab) c.push_back(side == Side::right ? h * x : x * h);
    return c;
  };

  std::vector<bool> key_used(ambient.degree(), false);
  std::vector<Coset> cosets;
  auto t = Permutation::identity(ambient.degree());
  while (!key_used[key(t)]) {
    key_used[key(t)] = true;
    cosets.push_back(make(t));
    t = t * tau;
  }
  for (const auto& x : ambient.elements()) {
    if (key_used[key(x)]) continue;
    key_used[key(x)] = true;
    cosets.push_back(make(x));
  }
  return cosets;
}

}  // namespace

std::vector<Coset> coset_decompose(const GroupElements& ambient, const Permutation& tau,
                                   Side side, SubgroupSpec subgroup) {
  if (tau.degree() != ambient.degree() || !ambient.contains(tau)) {
    throw UsageError("tau " + tau.to_cycles() + " is not an element of the ambient group");
  }
  if (subgroup.kind == SubgroupSpec::Kind::cyclic_of_tau) return cyclic_cosets(ambient, tau, side);
  return stabilizer_cosets(ambient, tau, side, subgroup.point);
}

}  // namespace cayley::perm
