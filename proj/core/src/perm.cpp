#include "pfusion/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pfusion/errors.hpp"

namespace pfusion {

Perm::Perm(int degree) : img_(degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw CapError("permgroup", "degree " + std::to_string(degree) + " exceeds cap " +
                                    std::to_string(kMaxDegree));
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  if (img_.size() > static_cast<std::size_t>(kMaxDegree))
    throw CapError("permgroup", "degree exceeds cap " + std::to_string(kMaxDegree));
  std::vector<char> seen(img_.size(), 0);
  for (Point p : img_) {
    if (p >= img_.size() || seen[p]) throw InputError("permgroup", "images are not a bijection");
    seen[p] = 1;
  }
}

Perm Perm::parse(std::string_view text, int degree) {
  Perm g(degree);
  std::vector<int> cycle;
  std::vector<char> used(degree, 0);
  bool open = false;
  std::size_t i = 0;
  auto flush = [&]() {
    for (std::size_t k = 0; k < cycle.size(); ++k)
      g.img_[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    cycle.clear();
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '(') {
      if (open) throw InputError("permgroup", "nested '(' in cycle notation");
      open = true;
      ++i;
    } else if (c == ')') {
      if (!open) throw InputError("permgroup", "unbalanced ')' in cycle notation");
      open = false;
      flush();
      ++i;
    } else if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (!open) throw InputError("permgroup", "point outside a cycle");
      long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > kMaxDegree) break;
        ++i;
      }
      if (v >= degree) throw InputError("permgroup", "point " + std::to_string(v) + " out of range");
      if (used[v]) throw InputError("permgroup", "point " + std::to_string(v) + " repeated");
      used[v] = 1;
      cycle.push_back(static_cast<int>(v));
    } else {
      throw InputError("permgroup", std::string("unexpected character '") + c + "'");
    }
  }
  if (open) throw InputError("permgroup", "unterminated cycle");
  return g;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::operator*(const Perm& other) const {
  Perm r;
  mul_into(*this, other, r);
  return r;
}

Perm& Perm::operator*=(const Perm& other) {
  for (auto& p : img_) p = other.img_[p];
  return *this;
}

Perm Perm::conj(const Perm& g) const {
  // g^-1 x g maps g[i] -> g[x[i]]
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
  return r;
}

Perm Perm::pow(long long e) const {
  long long o = order();
  e %= o;
  if (e < 0) e += o;
  Perm r(degree());
  Perm b = *this;
  while (e) {
    if (e & 1) r *= b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

long long Perm::order() const {
  long long o = 1;
  for (int len : cycle_type()) o = std::lcm(o, static_cast<long long>(len));
  return o;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len > 1) out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Perm::first_moved() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return static_cast<int>(i);
  return -1;
}

Perm Perm::extended(int degree) const {
  if (degree < this->degree()) throw InputError("permgroup", "cannot shrink a permutation");
  Perm r(degree);
  for (int i = 0; i < this->degree(); ++i) r.img_[i] = img_[i];
  return r;
}

std::string Perm::str() const {
  std::string s;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) s += ' ';
      s += std::to_string(j);
      first = false;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Point p : img_) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return h;
}

void mul_into(const Perm& a, const Perm& b, Perm& out) {
  auto& o = const_cast<std::vector<Point>&>(out.images());
  const auto& ai = a.images();
  const auto& bi = b.images();
  o.resize(ai.size());
  for (std::size_t i = 0; i < ai.size(); ++i) o[i] = bi[ai[i]];
}

}  // namespace pfusion
