#include "chief/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "chief/error.hpp"

namespace chief {

Perm::Perm(unsigned degree) : images_(degree) {
  if (degree > 65535)
    throw DomainError("degree exceeds the representable point range");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw DomainError("image table is not a bijection");
    seen[p] = true;
  }
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw DomainError("degree mismatch in permutation product");
  std::vector<Point> out(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    out[i] = rhs.images_[images_[i]];
  Perm r(static_cast<unsigned>(out.size()));
  r.images_ = std::move(out);
  return r;
}

Perm Perm::inverse() const {
  std::vector<Point> out(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    out[images_[i]] = static_cast<Point>(i);
  Perm r(static_cast<unsigned>(out.size()));
  r.images_ = std::move(out);
  return r;
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

uint64_t Perm::order() const {
  uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    uint64_t len = 0;
    for (unsigned i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm Perm::parse(std::string_view text, unsigned degree) {
  Perm result(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i == text.size())
    throw ParseError("empty cycle string");
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle string");
    ++i;
    std::vector<Point> cycle;
    std::vector<bool> in_cycle(degree, false);
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')' in cycle");
      uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<uint64_t>(text[i] - '0');
        if (value > 1'000'000)
          throw ParseError("point out of range");
        ++i;
      }
      if (value == 0 || value > degree)
        throw ParseError("point " + std::to_string(value) + " out of range 1.." +
                         std::to_string(degree));
      Point p = static_cast<Point>(value - 1);
      if (in_cycle[p])
        throw ParseError("point repeated within a cycle");
      in_cycle[p] = true;
      cycle.push_back(p);
    }
    any_cycle = true;
    if (cycle.size() >= 2) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (size_t k = 0; k < cycle.size(); ++k)
        images[cycle[k]] = cycle[(k + 1) % cycle.size()];
      result = result * Perm(std::move(images));
    }
    skip_ws();
  }
  if (!any_cycle)
    throw ParseError("empty cycle string");
  return result;
}

std::string Perm::str() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    any = true;
    os << '(';
    bool first = true;
    for (unsigned i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      if (!first)
        os << ' ';
      os << (i + 1);
      first = false;
    }
    os << ')';
  }
  if (!any)
    return "()";
  return os.str();
}

Perm conjugate(const Perm& p, const Perm& g) { return g.inverse() * p * g; }

Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.str(); }

} // namespace chief
