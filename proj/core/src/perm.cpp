#include "primcover/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "primcover/error.hpp"

namespace primcover {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) throw Error(ErrorCode::BadDegree, "permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw Error(ErrorCode::BadDegree, "permutation degree must be positive");
  std::vector<bool> seen(images.size(), false);
  for (const Point x : images) {
    if (x >= images.size()) {
      throw Error(ErrorCode::OutOfRange, "image " + std::to_string(x) + " outside domain");
    }
    if (seen[x]) throw Error(ErrorCode::RepeatedPoint, "image " + std::to_string(x) + " repeated");
    seen[x] = true;
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point a = cycle[i];
      if (a >= degree) {
        throw Error(ErrorCode::OutOfRange,
                    "point " + std::to_string(a + 1) + " exceeds degree " + std::to_string(degree));
      }
      if (used[a]) throw Error(ErrorCode::RepeatedPoint, "point " + std::to_string(a + 1) + " repeated");
      used[a] = true;
      p.images_[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::string compact;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  const auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::MalformedCycle, "'" + std::string(text) + "': " + why);
  };
  if (compact.empty()) throw malformed("empty text");
  if (compact == "()") return Permutation(degree);

  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] != '(') throw malformed("expected '('");
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      if (pos >= compact.size() || !std::isdigit(static_cast<unsigned char>(compact[pos]))) {
        throw malformed("expected a positive integer");
      }
      std::uint64_t value = 0;
      while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(compact[pos] - '0');
        if (value > (std::uint64_t{1} << 32)) throw malformed("integer too large");
        ++pos;
      }
      if (value == 0) throw Error(ErrorCode::OutOfRange, "points are numbered from 1");
      if (value > degree) {
        throw Error(ErrorCode::OutOfRange,
                    "point " + std::to_string(value) + " exceeds degree " + std::to_string(degree));
      }
      cycle.push_back(static_cast<Point>(value - 1));
      if (pos >= compact.size()) throw malformed("unterminated cycle");
      if (compact[pos] == ',') {
        ++pos;
        continue;
      }
      if (compact[pos] == ')') {
        ++pos;
        break;
      }
      throw malformed("unexpected character");
    }
    if (cycle.size() < 2) throw malformed("a cycle needs at least two entries");
    cycles.push_back(std::move(cycle));
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::size_t Permutation::fixed_points() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == i;
  return count;
}

std::size_t Permutation::cycle_count() const noexcept {
  std::vector<bool> seen(images_.size(), false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) seen[j] = true;
  }
  return count;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out.push_back('(');
    bool first = true;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out.push_back(',');
      out += std::to_string(j + 1);
      first = false;
    }
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot compose degree " + std::to_string(p.degree()) +
                                               " with degree " + std::to_string(q.degree()));
  }
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation power(const Permutation& p, std::int64_t e) {
  Permutation base = e < 0 ? p.inverse() : p;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Permutation result(p.degree());
  while (k > 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
  return h.inverse() * g * h;
}

std::size_t CycleType::degree() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

std::string CycleType::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(parts[i]);
  }
  return out + "}";
}

CycleType cycle_type(const Permutation& p) {
  CycleType ct;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    ct.parts.push_back(len);
  }
  std::sort(ct.parts.begin(), ct.parts.end(), std::greater<>{});
  return ct;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const std::size_t len : cycle_type(p).parts) order = std::lcm(order, std::uint64_t{len});
  return order;
}

bool is_even(const Permutation& p) noexcept {
  return (p.degree() - p.cycle_count()) % 2 == 0;
}

Permutation product(std::span<const Permutation> factors, std::size_t degree) {
  Permutation result(degree);
  for (const auto& f : factors) result = result * f;
  return result;
}

std::size_t hash_value(const Permutation& p) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (const Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace primcover
